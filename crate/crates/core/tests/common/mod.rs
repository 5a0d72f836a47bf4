//! Enumerations and brute-force oracles shared by the integration tests.
//!
//! Families on at most four points are encoded as `u16` masks over the
//! sixteen subsets: bit `s` is set when the subset with bitmask `s` belongs
//! to the family.
#![allow(dead_code)]

use connspace::{canonical_form, generate, ConnSpace, GroundSet, Subset, SubsetFamily};
use rand::Rng;

pub fn s(points: &[usize]) -> Subset {
    Subset::from_points(points.iter().copied())
}

pub fn fam(sets: &[&[usize]]) -> SubsetFamily {
    sets.iter().map(|p| s(p)).collect()
}

/// Pairwise closure check on a mask family, written independently of the
/// library validator.
pub fn mask_is_structure(n: usize, mask: u16, integral: bool) -> bool {
    if mask & 1 == 0 {
        return false;
    }
    let subsets = 1usize << n;
    if integral && (0..n).any(|p| mask & (1 << (1 << p)) == 0) {
        return false;
    }
    for a in 1..subsets {
        if mask & (1 << a) == 0 {
            continue;
        }
        for b in 1..subsets {
            if mask & (1 << b) != 0 && a & b != 0 && mask & (1 << (a | b)) == 0 {
                return false;
            }
        }
    }
    true
}

/// Every structure on `n <= 4` points as a mask, computed once.
pub fn all_structure_masks(n: usize, integral: bool) -> &'static [u16] {
    use std::sync::OnceLock;
    static CACHE: [[OnceLock<Vec<u16>>; 2]; 5] = [const { [const { OnceLock::new() }; 2] }; 5];
    CACHE[n][integral as usize].get_or_init(|| enumerate_structure_masks(n, integral))
}

fn enumerate_structure_masks(n: usize, integral: bool) -> Vec<u16> {
    assert!(n <= 4);
    let subsets = 1u32 << n;
    let free = (1u32 << subsets) as u64;
    (0..free)
        .map(|m| m as u16)
        .filter(|&m| mask_is_structure(n, m, integral))
        .collect()
}

pub fn mask_to_family(mask: u16) -> SubsetFamily {
    (0..16u64)
        .filter(|&b| mask & (1 << b) != 0)
        .map(Subset::from_bits)
        .collect()
}

pub fn family_to_mask(family: &SubsetFamily) -> u16 {
    family.iter().fold(0u16, |m, k| m | (1 << k.bits()))
}

/// The least structure containing `gens`: the intersection of every valid
/// structure containing it.
pub fn brute_generate(structures: &[u16], gens: u16) -> u16 {
    structures
        .iter()
        .filter(|&&m| m & gens == gens)
        .fold(u16::MAX, |acc, &m| acc & m)
}

/// All integral spaces on `n <= 4` points, labeled.
pub fn all_integral_spaces(n: usize) -> Vec<ConnSpace> {
    all_structure_masks(n, true)
        .iter()
        .map(|&m| ConnSpace::new(GroundSet::new(n), mask_to_family(m), true).unwrap())
        .collect()
}

/// All integral spaces on at most `max` points.
pub fn all_integral_spaces_upto(max: usize) -> Vec<ConnSpace> {
    (0..=max).flat_map(all_integral_spaces).collect()
}

/// One representative per isomorphism class, in input order.
pub fn iso_classes(spaces: &[ConnSpace]) -> Vec<ConnSpace> {
    let mut seen = std::collections::HashSet::new();
    spaces
        .iter()
        .filter(|sp| seen.insert(canonical_form(sp).unwrap()))
        .cloned()
        .collect()
}

/// A random integral space on `n` points generated by a few random sets.
pub fn random_integral_space(rng: &mut impl Rng, n: usize) -> ConnSpace {
    let count = rng.gen_range(0..=n + 1);
    let gens: SubsetFamily = (0..count)
        .map(|_| Subset::from_bits(rng.gen_range(0..(1u64 << n))))
        .collect();
    generate(&GroundSet::new(n), &gens, true).unwrap()
}

/// A random integral space on `n >= 1` points whose carrier is irreducible.
pub fn random_irreducible_space(rng: &mut impl Rng, n: usize) -> ConnSpace {
    loop {
        let sp = connspace::brunnian_closure(&random_integral_space(rng, n));
        if connspace::is_irreducible_space(&sp) {
            return sp;
        }
    }
}

/// Connected components by merging points that share a member.
pub fn oracle_components(space: &ConnSpace) -> Vec<Subset> {
    let n = space.size();
    let mut comp: Vec<Subset> = (0..n).map(Subset::singleton).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &k in space.structure() {
            for i in 0..comp.len() {
                for j in 0..comp.len() {
                    if i != j && comp[i].intersects(k) && comp[j].intersects(k) {
                        let merged = comp[i] | comp[j];
                        comp[i] = merged;
                        comp.remove(j);
                        changed = true;
                        break;
                    }
                }
                if changed {
                    break;
                }
            }
            if changed {
                break;
            }
        }
    }
    comp.sort_by_key(|c| c.first());
    comp
}

/// Irreducible by definition on at most four points: `k` is not in the
/// structure generated (without forcing singletons) by the other members.
pub fn oracle_irreducible(space: &ConnSpace, k: Subset) -> bool {
    let n = space.size();
    let structures = all_structure_masks(n, false);
    let others = family_to_mask(space.structure()) & !(1 << k.bits());
    !k.is_empty() && brute_generate(structures, others) & (1 << k.bits()) == 0
}
