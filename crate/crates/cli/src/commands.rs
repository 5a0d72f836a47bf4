use std::collections::HashSet;
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use connspace::analysis::index;
use connspace::catalog::{compose_all, compose_at};
use connspace::constructions::{self, is_morphism, Partition, PointMap, TimeSpace};
use connspace::pointed::{self, PointedConnSpace};
use connspace::{
    generic_graph, irreducibles as irreducible_sets, is_distinguished, is_irreducible_space,
    is_isomorphic, ConnSpace, GroundSet, Subset,
};

use crate::error::CliError;
use crate::format::{format_set, labels_of, parse, serialize_space, SpaceDocument};

struct Loaded {
    name: String,
    space: ConnSpace,
}

impl Loaded {
    fn labels(&self) -> Vec<String> {
        labels_of(&self.space)
    }

    fn point(&self, label: &str) -> Result<usize, CliError> {
        self.labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| CliError::Argument(format!("`{label}` is not a point of {}", self.name)))
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn load_doc(path: &Path) -> Result<SpaceDocument, CliError> {
    parse(&read(path)?)
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    let doc = load_doc(path)?;
    let space = doc.to_space()?;
    Ok(Loaded {
        name: doc.name,
        space,
    })
}

/// Distinct labels, or `p0, p1, ..` when the candidates collide.
fn relabel(space: ConnSpace, candidates: Vec<String>) -> Result<ConnSpace, CliError> {
    let distinct = candidates.iter().collect::<HashSet<_>>().len() == candidates.len();
    let labels = if distinct {
        candidates
    } else {
        (0..space.size()).map(|i| format!("p{i}")).collect()
    };
    Ok(space.with_ground(GroundSet::labeled(labels)?)?)
}

fn pair_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| format!("{x}.{y}")))
        .collect()
}

fn sum_labels(a: &[String], b: &[String]) -> Vec<String> {
    let clash = a.iter().any(|x| b.contains(x));
    if clash {
        a.iter()
            .map(|x| format!("{x}@1"))
            .chain(b.iter().map(|y| format!("{y}@2")))
            .collect()
    } else {
        a.iter().chain(b).cloned().collect()
    }
}

fn block_labels(labels: &[String], blocks: &[Subset]) -> Vec<String> {
    blocks
        .iter()
        .map(|b| b.points().map(|p| labels[p].as_str()).collect::<Vec<_>>().join("~"))
        .collect()
}

fn label_list(arg: &str) -> Vec<&str> {
    arg.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn validate(file: &Path) -> Result<String, CliError> {
    let l = load(file)?;
    Ok(format!(
        "valid: {} ({} points, {} connected sets)\n",
        l.name,
        l.space.size(),
        l.space.structure().len()
    ))
}

pub fn canonical(file: &Path) -> Result<String, CliError> {
    let l = load(file)?;
    Ok(serialize_space(&l.name, &l.space))
}

pub fn generate(file: &Path, nontrivial: bool) -> Result<String, CliError> {
    let l = load(file)?;
    let labels = l.labels();
    let mut out = String::new();
    for &k in l.space.structure() {
        if nontrivial && k.len() < 2 {
            continue;
        }
        writeln!(out, "{}", format_set(&labels, k)).unwrap();
    }
    Ok(out)
}

pub fn info(file: &Path) -> Result<String, CliError> {
    let l = load(file)?;
    let sp = &l.space;
    let mut out = String::new();
    writeln!(out, "space: {}", l.name).unwrap();
    writeln!(out, "points: {}", sp.size()).unwrap();
    writeln!(out, "connected: {}", yes_no(sp.is_connected_space())).unwrap();
    match sp.connected_components() {
        Ok(c) => writeln!(out, "components: {}", c.len()).unwrap(),
        Err(_) => writeln!(out, "components: n/a").unwrap(),
    }
    writeln!(out, "irreducible: {}", yes_no(is_irreducible_space(sp))).unwrap();
    writeln!(out, "distinguished: {}", yes_no(is_distinguished(sp))).unwrap();
    match index(sp) {
        Ok(r) => writeln!(out, "index: {}", r.space_index).unwrap(),
        Err(_) => writeln!(out, "index: n/a").unwrap(),
    }
    Ok(out)
}

pub fn irreducibles(file: &Path) -> Result<String, CliError> {
    let l = load(file)?;
    let labels = l.labels();
    Ok(irreducible_sets(&l.space)
        .iter()
        .map(|&k| format_set(&labels, k) + "\n")
        .collect())
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn graph(file: &Path, dot: bool) -> Result<String, CliError> {
    let l = load(file)?;
    let labels = l.labels();
    let g = generic_graph(&l.space)?;
    let sinks: HashSet<usize> = g.sinks().into_iter().collect();
    let mut out = String::new();
    if dot {
        writeln!(out, "digraph \"{}\" {{", dot_escape(&l.name)).unwrap();
        for (i, &v) in g.vertices().iter().enumerate() {
            let label = dot_escape(&format_set(&labels, v));
            if sinks.contains(&i) {
                writeln!(out, "  n{i} [label=\"{label}\", shape=box];").unwrap();
            } else {
                writeln!(out, "  n{i} [label=\"{label}\"];").unwrap();
            }
        }
        for &(a, b) in g.edges() {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
    } else {
        let heights = g.heights();
        out.push_str("vertices:\n");
        for (i, &v) in g.vertices().iter().enumerate() {
            writeln!(out, "  {} height {}", format_set(&labels, v), heights[i]).unwrap();
        }
        out.push_str("edges:\n");
        for &(a, b) in g.edges() {
            writeln!(
                out,
                "  {} -> {}",
                format_set(&labels, g.vertices()[a]),
                format_set(&labels, g.vertices()[b])
            )
            .unwrap();
        }
    }
    Ok(out)
}

#[derive(Clone, Copy)]
pub enum Binary {
    Product,
    Coproduct,
    Tensor,
}

pub fn binary(op: Binary, a: &Path, b: &Path) -> Result<String, CliError> {
    let (x, y) = (load(a)?, load(b)?);
    let (lx, ly) = (x.labels(), y.labels());
    let (word, space, labels) = match op {
        Binary::Product => (
            "product",
            constructions::product(&x.space, &y.space)?,
            pair_labels(&lx, &ly),
        ),
        Binary::Coproduct => (
            "coproduct",
            constructions::coproduct(&x.space, &y.space)?,
            sum_labels(&lx, &ly),
        ),
        Binary::Tensor => (
            "tensor",
            constructions::tensor(&x.space, &y.space)?,
            pair_labels(&lx, &ly),
        ),
    };
    let space = relabel(space, labels)?;
    Ok(serialize_space(&format!("{word}({},{})", x.name, y.name), &space))
}

#[derive(Clone, Copy)]
pub enum PointedOp {
    Smash,
    Wedge,
}

pub fn pointed(op: PointedOp, a: &Path, b: &Path, bases: &[String]) -> Result<String, CliError> {
    if bases.len() != 2 {
        return Err(CliError::Argument(format!(
            "expected one --base per input, got {}",
            bases.len()
        )));
    }
    let (x, y) = (load(a)?, load(b)?);
    let px = PointedConnSpace::new(x.space.clone(), x.point(&bases[0])?)?;
    let py = PointedConnSpace::new(y.space.clone(), y.point(&bases[1])?)?;
    let (lx, ly) = (x.labels(), y.labels());
    let (word, result, labels) = match op {
        PointedOp::Wedge => {
            let w = pointed::wedge(&px, &py)?;
            let sum = sum_labels(&lx, &ly);
            let glue = Subset::from_points([px.base(), px.size() + py.base()]);
            let part = Partition::from_merges(sum.len(), &[glue])?;
            ("wedge", w, block_labels(&sum, part.blocks()))
        }
        PointedOp::Smash => {
            let sm = pointed::smash(&px, &py)?;
            let pairs = pair_labels(&lx, &ly);
            let mut blocks = vec![Subset::EMPTY; sm.space.size()];
            for (p, &c) in sm.quotient.table().iter().enumerate() {
                blocks[c] = blocks[c].insert(p);
            }
            ("smash", sm.space, block_labels(&pairs, &blocks))
        }
    };
    let base = result.base();
    let space = relabel(result.space().clone(), labels)?;
    let mut out = format!("# base {}\n", space.ground().label(base));
    out.push_str(&serialize_space(&format!("{word}({},{})", x.name, y.name), &space));
    Ok(out)
}

pub fn quotient(file: &Path, merges: &[String]) -> Result<String, CliError> {
    let l = load(file)?;
    let mut groups = Vec::new();
    for m in merges {
        let mut g = Subset::EMPTY;
        for label in label_list(m) {
            g = g.insert(l.point(label)?);
        }
        groups.push(g);
    }
    let part = Partition::from_merges(l.space.size(), &groups)?;
    let q = constructions::quotient(&l.space, &part)?;
    let q = relabel(q, block_labels(&l.labels(), part.blocks()))?;
    Ok(serialize_space(&format!("quotient({})", l.name), &q))
}

pub fn subspace(file: &Path, keep: &str) -> Result<String, CliError> {
    let l = load(file)?;
    let mut s = Subset::EMPTY;
    for label in label_list(keep) {
        s = s.insert(l.point(label)?);
    }
    let sub = constructions::subspace(&l.space, s)?;
    Ok(serialize_space(&format!("subspace({})", l.name), &sub))
}

pub fn compose(x: &Path, y: &Path, at: Option<&str>) -> Result<String, CliError> {
    let (x, y) = (load(x)?, load(y)?);
    let (lx, ly) = (x.labels(), y.labels());
    let (space, labels) = match at {
        Some(label) => {
            let p = x.point(label)?;
            let space = compose_at(&x.space, p, &y.space)?;
            let labels = lx
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != p)
                .map(|(_, l)| l.clone())
                .chain(ly.iter().map(|l| format!("{label}.{l}")))
                .collect();
            (space, labels)
        }
        None => (compose_all(&x.space, &y.space)?, pair_labels(&lx, &ly)),
    };
    let space = relabel(space, labels)?;
    Ok(serialize_space(&format!("compose({},{})", x.name, y.name), &space))
}

fn parse_map(spec: &str, x: &Loaded, y: &Loaded) -> Result<PointMap, CliError> {
    let mut table = vec![None; x.space.size()];
    for entry in label_list(spec) {
        let (from, to) = entry
            .split_once('=')
            .ok_or_else(|| CliError::Argument(format!("expected `label=label`, got `{entry}`")))?;
        let (p, q) = (x.point(from.trim())?, y.point(to.trim())?);
        if table[p].replace(q).is_some() {
            return Err(CliError::Argument(format!("`{from}` is mapped twice")));
        }
    }
    let table: Vec<usize> = table
        .into_iter()
        .enumerate()
        .map(|(p, v)| {
            v.ok_or_else(|| {
                CliError::Argument(format!("no image given for `{}`", x.space.ground().label(p)))
            })
        })
        .collect::<Result<_, _>>()?;
    Ok(PointMap::new(x.space.size(), y.space.size(), table)?)
}

pub fn check_morphism(x: &Path, y: &Path, map: &str) -> Result<String, CliError> {
    let (x, y) = (load(x)?, load(y)?);
    let f = parse_map(map, &x, &y)?;
    if is_morphism(&f, &x.space, &y.space)? {
        return Ok("morphism\n".into());
    }
    let bad = x
        .space
        .structure()
        .iter()
        .find(|&&k| !y.space.is_connected_subset(f.image(k)))
        .copied()
        .expect("a failing set exists");
    Ok(format!(
        "not a morphism: {} maps to {}\n",
        format_set(&x.labels(), bad),
        format_set(&y.labels(), f.image(bad))
    ))
}

pub fn iso(a: &Path, b: &Path) -> Result<String, CliError> {
    let (x, y) = (load(a)?, load(b)?);
    match is_isomorphic(&x.space, &y.space)? {
        None => Ok("not isomorphic\n".into()),
        Some(perm) => {
            let (lx, ly) = (x.labels(), y.labels());
            Ok(perm
                .iter()
                .enumerate()
                .map(|(p, &q)| format!("{} -> {}\n", lx[p], ly[q]))
                .collect())
        }
    }
}

pub fn homotopy(
    x: &Path,
    y: &Path,
    f: &str,
    g: &str,
    time: &Path,
    zero: Option<&str>,
    one: Option<&str>,
) -> Result<String, CliError> {
    let (x, y, t) = (load(x)?, load(y)?, load(time)?);
    let (f, g) = (parse_map(f, &x, &y)?, parse_map(g, &x, &y)?);
    for m in [&f, &g] {
        if !is_morphism(m, &x.space, &y.space)? {
            return Err(connspace::Error::NotAMorphism.into());
        }
    }
    if t.space.size() == 0 {
        return Err(CliError::Argument("the time space has no points".into()));
    }
    let zero = match zero {
        Some(l) => t.point(l)?,
        None => 0,
    };
    let one = match one {
        Some(l) => t.point(l)?,
        None => t.space.size() - 1,
    };
    let time = TimeSpace::new(t.space.clone(), zero, one)?;
    let Some(h) = constructions::homotopic(&f, &g, &time, &x.space, &y.space)? else {
        return Ok("not homotopic\n".into());
    };
    let (lt, lx, ly) = (t.labels(), x.labels(), y.labels());
    let nx = x.space.size();
    let mut out = String::from("homotopic\n");
    for (i, instant) in lt.iter().enumerate() {
        let row: Vec<String> = (0..nx)
            .map(|p| format!("{}={}", lx[p], ly[h.apply(i * nx + p)]))
            .collect();
        writeln!(out, "{instant}: {}", row.join(",")).unwrap();
    }
    Ok(out)
}
