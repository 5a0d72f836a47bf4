//! The line-oriented space file format.
//!
//! ```text
//! # comment
//! space B3
//! points a b c
//! connected {a b c}
//! ```
//!
//! `nonintegral` drops the implicit singletons; `raw` takes the listed sets
//! (plus `∅`, and the singletons when integral) as the whole structure
//! instead of generating from them.

use connspace::{generate, irreducibles, ConnSpace, GroundSet, Subset, SubsetFamily};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceDocument {
    pub name: String,
    pub points: Vec<String>,
    pub connected: Vec<Subset>,
    pub integral: bool,
    pub generated: bool,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn valid_token(t: &str) -> bool {
    !t.is_empty() && !t.contains(['{', '}', '#'])
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

pub fn parse(text: &str) -> Result<SpaceDocument, CliError> {
    let mut name: Option<String> = None;
    let mut points: Option<Vec<String>> = None;
    let mut raw_sets: Vec<(usize, usize, Vec<(usize, String)>)> = Vec::new();
    let mut integral = true;
    let mut generated = true;

    for (idx, full) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = full.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        let rest = &toks[1..];
        match keyword {
            "space" => {
                if name.is_some() {
                    return Err(parse_error(lineno, col, "duplicate `space` line"));
                }
                match rest {
                    [(_, n)] if valid_token(n) => name = Some(n.to_string()),
                    [] => return Err(parse_error(lineno, col, "`space` needs a name")),
                    [_, (c, _), ..] => {
                        return Err(parse_error(lineno, *c, "space names are a single token"))
                    }
                    [(c, _)] => return Err(parse_error(lineno, *c, "invalid space name")),
                }
            }
            "points" => {
                if points.is_some() {
                    return Err(parse_error(lineno, col, "duplicate `points` line"));
                }
                let mut labels: Vec<String> = Vec::new();
                for &(c, t) in rest {
                    if !valid_token(t) {
                        return Err(parse_error(lineno, c, format!("invalid label `{t}`")));
                    }
                    if labels.iter().any(|l| l == t) {
                        return Err(parse_error(lineno, c, format!("duplicate label `{t}`")));
                    }
                    labels.push(t.to_string());
                }
                points = Some(labels);
            }
            "connected" => {
                let body = &line[line.find("connected").unwrap() + "connected".len()..];
                let offset = line.len() - body.len();
                let trimmed = body.trim_start();
                let open = offset + (body.len() - trimmed.len());
                let open_col = line[..open].chars().count() + 1;
                if !trimmed.starts_with('{') {
                    return Err(parse_error(lineno, open_col, "expected `{`"));
                }
                let Some(close) = trimmed.find('}') else {
                    return Err(parse_error(lineno, open_col, "unclosed `{`"));
                };
                let after = trimmed[close + 1..].trim();
                if !after.is_empty() {
                    let c = line.len() - trimmed[close + 1..].trim_start().len();
                    return Err(parse_error(
                        lineno,
                        line[..c].chars().count() + 1,
                        "unexpected text after `}`",
                    ));
                }
                let inner = &trimmed[1..close];
                let inner_start = open + 1;
                let labels: Vec<(usize, String)> = tokens(inner)
                    .into_iter()
                    .map(|(c, t)| (line[..inner_start].chars().count() + c, t.to_string()))
                    .collect();
                if let Some((c, t)) = labels.iter().find(|(_, t)| !valid_token(t)) {
                    return Err(parse_error(lineno, *c, format!("invalid label `{t}`")));
                }
                raw_sets.push((lineno, open_col, labels));
            }
            "nonintegral" | "raw" => {
                if let Some(&(c, _)) = rest.first() {
                    return Err(parse_error(lineno, c, format!("`{keyword}` takes no arguments")));
                }
                if keyword == "raw" {
                    generated = false;
                } else {
                    integral = false;
                }
            }
            other => {
                return Err(parse_error(lineno, col, format!("unknown keyword `{other}`")));
            }
        }
    }

    let name = name.ok_or_else(|| parse_error(1, 1, "missing `space` line"))?;
    let points = points.ok_or_else(|| parse_error(1, 1, "missing `points` line"))?;
    if points.len() > connspace::subset::MAX_POINTS {
        return Err(parse_error(1, 1, "too many points"));
    }
    let mut connected = Vec::new();
    for (lineno, _, labels) in raw_sets {
        let mut set = Subset::EMPTY;
        for (c, l) in labels {
            let p = points
                .iter()
                .position(|q| *q == l)
                .ok_or(CliError::UnknownLabel {
                    label: l.clone(),
                    line: lineno,
                    column: c,
                })?;
            set = set.insert(p);
        }
        connected.push(set);
    }
    Ok(SpaceDocument {
        name,
        points,
        connected,
        integral,
        generated,
    })
}

impl SpaceDocument {
    /// Builds the space: generated from the listed sets, or validated as
    /// given when `raw`.
    pub fn to_space(&self) -> Result<ConnSpace, CliError> {
        let ground = GroundSet::labeled(self.points.iter().cloned())?;
        let listed: SubsetFamily = self.connected.iter().copied().collect();
        if self.generated {
            return Ok(generate(&ground, &listed, self.integral)?);
        }
        let mut family = listed;
        family.insert(Subset::EMPTY);
        if self.integral {
            for p in 0..self.points.len() {
                family.insert(Subset::singleton(p));
            }
        }
        Ok(ConnSpace::new(ground, family, self.integral)?)
    }

    /// Canonical document: the irreducible connected sets, without the
    /// implicit singletons of an integral space.
    pub fn from_space(name: &str, space: &ConnSpace) -> SpaceDocument {
        let connected = irreducibles(space)
            .iter()
            .copied()
            .filter(|k| !(space.is_integral() && k.len() == 1))
            .collect();
        SpaceDocument {
            name: name.to_string(),
            points: (0..space.size()).map(|p| space.ground().label(p)).collect(),
            connected,
            integral: space.is_integral(),
            generated: true,
        }
    }

    pub fn format_set(&self, s: Subset) -> String {
        format_set(&self.points, s)
    }
}

pub fn format_set(labels: &[String], s: Subset) -> String {
    let inner: Vec<&str> = s.points().map(|p| labels[p].as_str()).collect();
    format!("{{{}}}", inner.join(" "))
}

pub fn labels_of(space: &ConnSpace) -> Vec<String> {
    (0..space.size()).map(|p| space.ground().label(p)).collect()
}

/// Canonical text of a space.
pub fn serialize_space(name: &str, space: &ConnSpace) -> String {
    serialize(&SpaceDocument::from_space(name, space))
}

pub fn serialize(doc: &SpaceDocument) -> String {
    let mut out = format!("space {}\n", doc.name);
    out.push_str("points");
    for p in &doc.points {
        out.push(' ');
        out.push_str(p);
    }
    out.push('\n');
    if !doc.integral {
        out.push_str("nonintegral\n");
    }
    if !doc.generated {
        out.push_str("raw\n");
    }
    let mut sets = doc.connected.clone();
    sets.sort();
    sets.dedup();
    for s in sets {
        out.push_str("connected ");
        out.push_str(&doc.format_set(s));
        out.push('\n');
    }
    out
}
