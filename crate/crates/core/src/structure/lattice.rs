use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{Closure, Elem, FiniteGroup, SubgroupSet};

pub const DEFAULT_LATTICE_ORDER_CAP: usize = 512;
pub const DEFAULT_LATTICE_COUNT_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug)]
pub struct LatticeCaps {
    pub order: usize,
    pub count: usize,
}

impl Default for LatticeCaps {
    fn default() -> Self {
        LatticeCaps {
            order: DEFAULT_LATTICE_ORDER_CAP,
            count: DEFAULT_LATTICE_COUNT_CAP,
        }
    }
}

/// Every subgroup of a group, sorted by size then members, with a maximality
/// and a normality flag per entry.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub subgroups: Vec<SubgroupSet>,
    pub maximal: Vec<bool>,
    pub normal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn maximal_subgroups(&self) -> impl Iterator<Item = &SubgroupSet> {
        self.subgroups
            .iter()
            .zip(&self.maximal)
            .filter(|(_, &m)| m)
            .map(|(s, _)| s)
    }

    pub fn normal_subgroups(&self) -> impl Iterator<Item = &SubgroupSet> {
        self.subgroups
            .iter()
            .zip(&self.normal)
            .filter(|(_, &m)| m)
            .map(|(s, _)| s)
    }

    pub fn position(&self, h: &SubgroupSet) -> Option<usize> {
        self.subgroups.binary_search(h).ok()
    }
}

pub fn all_subgroups(g: &FiniteGroup) -> Result<SubgroupLattice> {
    all_subgroups_capped(g, LatticeCaps::default())
}

/// Join-closure of the cyclic subgroups: start from every cyclic subgroup
/// and extend each subgroup found by one cyclic generator at a time.
///
/// A proper subgroup is maximal exactly when each of its one-step
/// extensions is the whole group, so maximality falls out of the same pass.
pub fn all_subgroups_capped(g: &FiniteGroup, caps: LatticeCaps) -> Result<SubgroupLattice> {
    if g.order() > caps.order {
        return Err(Error::LatticeCapExceeded {
            what: format!("subgroup lattice of a group of order {}", g.order()),
            cap: caps.order,
        });
    }
    let n = g.order();
    // one generator per cyclic subgroup
    let mut cyclic_seen: HashMap<BitSet, Elem> = HashMap::new();
    let mut reps: Vec<Elem> = Vec::new();
    for x in g.elements() {
        let c = g.cyclic(x).into_bits();
        if let std::collections::hash_map::Entry::Vacant(e) = cyclic_seen.entry(c) {
            e.insert(x);
            reps.push(x);
        }
    }
    let mut found: Vec<(BitSet, Vec<Elem>)> = Vec::new();
    let mut index: HashMap<BitSet, usize> = HashMap::new();
    for &x in &reps {
        let mut c = Closure::new(g);
        c.add(x);
        let parts = c.into_parts();
        index.insert(parts.0.clone(), found.len());
        found.push(parts);
    }
    let overflow = |count: usize| -> Result<()> {
        if count > caps.count {
            return Err(Error::LatticeCapExceeded {
                what: format!("subgroups of a group of order {n}"),
                cap: caps.count,
            });
        }
        Ok(())
    };
    overflow(found.len())?;
    let mut maximal_flag: Vec<bool> = Vec::new();
    let mut i = 0;
    while i < found.len() {
        let mut all_whole = found[i].0.count() < n;
        for &x in &reps {
            let (bits, gens) = &found[i];
            if bits.contains(x) {
                continue;
            }
            let mut c = Closure::from_parts(g, bits, gens);
            c.add(x);
            let (nb, ng) = c.into_parts();
            if nb.count() < n {
                all_whole = false;
            }
            if !index.contains_key(&nb) {
                index.insert(nb.clone(), found.len());
                found.push((nb, ng));
                overflow(found.len())?;
            }
        }
        maximal_flag.push(all_whole);
        i += 1;
    }
    let mut entries: Vec<(SubgroupSet, bool)> = found
        .into_iter()
        .zip(maximal_flag)
        .map(|((b, _), m)| (SubgroupSet::try_from_bits(g, b).expect("closure"), m))
        .collect();
    entries.sort_by(|a, b| a.0.cmp(&b.0));
    let normal = entries.iter().map(|(s, _)| g.is_normal(s.bits())).collect();
    let (subgroups, maximal) = entries.into_iter().unzip();
    Ok(SubgroupLattice {
        subgroups,
        maximal,
        normal,
    })
}

pub fn maximal_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupSet>> {
    Ok(all_subgroups(g)?.maximal_subgroups().cloned().collect())
}

/// `Φ(G)`, the intersection of the maximal subgroups (`G` itself when trivial).
pub fn frattini_subgroup(g: &FiniteGroup) -> Result<SubgroupSet> {
    Ok(frattini_from(g, &all_subgroups(g)?))
}

pub(crate) fn frattini_from(g: &FiniteGroup, lattice: &SubgroupLattice) -> SubgroupSet {
    lattice
        .maximal_subgroups()
        .fold(g.whole(), |acc, m| acc.intersection(m))
}
