use std::collections::HashMap;

use super::series::{SeriesChain, SeriesKind};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Closure, Elem, FiniteGroup, SubgroupSet};

pub const DEFAULT_NORMAL_CAP: usize = 100_000;

/// All normal subgroups, sorted by size then members.
///
/// Every normal subgroup is a join of normal closures of conjugacy
/// classes, so the list is built by joining class closures onto known
/// normal subgroups until nothing new appears.
pub fn normal_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupSet>> {
    normal_subgroups_capped(g, DEFAULT_NORMAL_CAP)
}

pub fn normal_subgroups_capped(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupSet>> {
    let classes = g.conjugacy_classes();
    let mut found: Vec<(BitSet, Vec<Elem>)> = Vec::new();
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    let trivial = Closure::new(g).into_parts();
    index.insert(trivial.0.clone(), 0);
    found.push(trivial);
    let mut i = 0;
    while i < found.len() {
        for class in classes.iter().skip(1) {
            let (bits, gens) = &found[i];
            if bits.contains(class[0]) {
                continue;
            }
            let mut c = Closure::from_parts(g, bits, gens);
            for &x in class {
                c.add(x);
            }
            let (nb, ng) = c.into_parts();
            if !index.contains_key(&nb) {
                if found.len() >= cap {
                    return Err(Error::LatticeCapExceeded {
                        what: format!("normal subgroups of a group of order {}", g.order()),
                        cap,
                    });
                }
                index.insert(nb.clone(), found.len());
                found.push((nb, ng));
            }
        }
        i += 1;
    }
    let mut out: Vec<SubgroupSet> = found
        .into_iter()
        .map(|(b, _)| SubgroupSet::try_from_bits(g, b).expect("join is a subgroup"))
        .collect();
    out.sort();
    Ok(out)
}

/// Nontrivial normal subgroups containing no smaller nontrivial normal subgroup.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupSet>> {
    let all = normal_subgroups(g)?;
    Ok(minimal_among(&all))
}

pub(crate) fn minimal_among(sorted: &[SubgroupSet]) -> Vec<SubgroupSet> {
    let nontrivial: Vec<&SubgroupSet> = sorted.iter().filter(|n| !n.is_trivial()).collect();
    nontrivial
        .iter()
        .enumerate()
        .filter(|(i, n)| {
            !nontrivial[..*i]
                .iter()
                .any(|m| m.size() < n.size() && m.is_subgroup_of(n))
        })
        .map(|(_, n)| (*n).clone())
        .collect()
}

/// Join of the minimal normal subgroups.
pub fn socle(g: &FiniteGroup) -> Result<SubgroupSet> {
    let mins = minimal_normal_subgroups(g)?;
    Ok(g.subgroup_closure(mins.iter().flat_map(|m| m.elements())))
}

/// Ascending chief series. At each step the next term is a minimal normal
/// subgroup of `G` properly containing the current one; ties go to the
/// candidate whose smallest new element index is least.
pub fn chief_series(g: &FiniteGroup) -> Result<SeriesChain> {
    let all = normal_subgroups(g)?;
    Ok(chief_series_from(g, &all))
}

fn chief_series_from(g: &FiniteGroup, normals: &[SubgroupSet]) -> SeriesChain {
    let mut terms = vec![g.trivial_subgroup()];
    while terms.last().unwrap().size() < g.order() {
        let cur = terms.last().unwrap();
        let above: Vec<&SubgroupSet> = normals
            .iter()
            .filter(|m| m.size() > cur.size() && cur.is_subgroup_of(m))
            .collect();
        let minimal = above.iter().filter(|m| {
            !above
                .iter()
                .any(|k| k.size() < m.size() && k.is_subgroup_of(m))
        });
        let next = minimal
            .min_by_key(|m| (m.bits().difference(cur.bits()).first(), m.bits().clone()))
            .expect("G itself lies above every proper normal subgroup");
        terms.push((*next).clone());
    }
    SeriesChain {
        kind: SeriesKind::Chief,
        terms,
    }
}
