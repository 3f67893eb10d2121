use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::group::{Closure, Elem, FiniteGroup, SubgroupSet};

/// `⟨x, y⟩` for every unordered pair, stored as an id into a list of the
/// distinct 2-generated subgroups. Ids are assigned in order of first
/// appearance scanning `x ≤ y` lexicographically, whatever the thread count.
#[derive(Clone, Debug)]
pub struct PairTable {
    n: usize,
    subgroups: Vec<SubgroupSet>,
    ids: Vec<u32>,
}

impl PairTable {
    pub fn new(g: &FiniteGroup) -> Self {
        let n = g.order();
        let rows: Vec<Vec<BitSet>> = map_rows(n, |x| pair_row(g, x));
        let mut index: HashMap<BitSet, u32> = HashMap::new();
        let mut subgroups = Vec::new();
        let mut ids = Vec::with_capacity(n * (n + 1) / 2);
        for row in rows {
            for bits in row {
                let next = subgroups.len() as u32;
                let id = *index.entry(bits).or_insert_with_key(|b| {
                    subgroups.push(SubgroupSet::try_from_bits(g, b.clone()).expect("closure"));
                    next
                });
                ids.push(id);
            }
        }
        PairTable { n, subgroups, ids }
    }

    pub fn id(&self, x: Elem, y: Elem) -> usize {
        self.ids[row_offset(self.n, x.min(y)) + (x.max(y) - x.min(y))] as usize
    }

    pub fn get(&self, x: Elem, y: Elem) -> &SubgroupSet {
        &self.subgroups[self.id(x, y)]
    }

    /// The distinct 2-generated subgroups, in id order.
    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

fn row_offset(n: usize, a: usize) -> usize {
    // sum over rows r < a of (n - r)
    a * n - a * a.saturating_sub(1) / 2
}

fn pair_row(g: &FiniteGroup, x: Elem) -> Vec<BitSet> {
    let mut base = Closure::new(g);
    base.add(x);
    let (cx, gx) = base.into_parts();
    (x..g.order())
        .map(|y| {
            if cx.contains(y) {
                return cx.clone();
            }
            let mut c = Closure::from_parts(g, &cx, &gx);
            c.add(y);
            c.into_parts().0
        })
        .collect()
}

#[cfg(feature = "parallel")]
pub(crate) fn map_rows<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_rows<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).map(f).collect()
}

/// `V(G)`: elements `x` with `⟨x, y⟩ = G` for some `y`.
pub fn generating_pair_elements(g: &FiniteGroup) -> BitSet {
    generating_pair_elements_from(&PairTable::new(g))
}

pub fn generating_pair_elements_from(pairs: &PairTable) -> BitSet {
    let n = pairs.order();
    BitSet::from_indices(
        n,
        (0..n).filter(|&x| (0..n).any(|y| pairs.get(x, y).size() == n)),
    )
}
