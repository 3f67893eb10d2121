use serde::Serialize;

use crate::bitset::BitSet;
use crate::group::{Closure, Elem, FiniteGroup, SubgroupSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
    Fitting,
    Chief,
}

/// A chain of subgroups. Derived and lower central series descend from `G`;
/// upper central, Fitting and chief series ascend from the trivial group.
#[derive(Clone, Debug)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    pub terms: Vec<SubgroupSet>,
}

impl SeriesChain {
    pub fn last(&self) -> &SubgroupSet {
        self.terms.last().expect("series has at least one term")
    }

    /// Orders of consecutive factors, in chain order.
    pub fn factor_sizes(&self) -> Vec<usize> {
        self.terms
            .windows(2)
            .map(|w| {
                let (a, b) = (w[0].size(), w[1].size());
                a.max(b) / a.min(b)
            })
            .collect()
    }
}

/// Normal closure inside the subgroup generated by `within_gens`.
pub(crate) fn normal_closure_within(
    g: &FiniteGroup,
    within_gens: &[Elem],
    seed: impl IntoIterator<Item = Elem>,
) -> (BitSet, Vec<Elem>) {
    let mut c = Closure::new(g);
    for x in seed {
        c.add(x);
    }
    loop {
        let mut grew = false;
        let current: Vec<Elem> = c.bits().iter().collect();
        for x in current {
            for &s in within_gens {
                grew |= c.add(g.conj(x, s));
            }
        }
        if !grew {
            return c.into_parts();
        }
    }
}

/// `[H, H]` for a subgroup given by a generating set.
fn derived_of(g: &FiniteGroup, gens: &[Elem]) -> (BitSet, Vec<Elem>) {
    let mut seed = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            seed.push(g.commutator(a, b));
        }
    }
    normal_closure_within(g, gens, seed)
}

pub fn derived_subgroup(g: &FiniteGroup) -> SubgroupSet {
    let (bits, _) = derived_of(g, g.generators());
    SubgroupSet::try_from_bits(g, bits).expect("closure is a subgroup")
}

pub fn derived_series(g: &FiniteGroup) -> SeriesChain {
    let mut terms = vec![g.whole()];
    let mut gens = g.generators().to_vec();
    loop {
        let (bits, next_gens) = derived_of(g, &gens);
        if bits.count() == terms.last().unwrap().size() {
            break;
        }
        terms.push(SubgroupSet::try_from_bits(g, bits).unwrap());
        gens = next_gens;
    }
    SeriesChain {
        kind: SeriesKind::Derived,
        terms,
    }
}

pub fn is_soluble(g: &FiniteGroup) -> bool {
    derived_series(g).last().is_trivial()
}

pub fn lower_central_series(g: &FiniteGroup) -> SeriesChain {
    let mut terms = vec![g.whole()];
    loop {
        let cur = terms.last().unwrap();
        let seed: Vec<Elem> = cur
            .bits()
            .iter()
            .flat_map(|x| g.generators().iter().map(move |&s| (x, s)))
            .map(|(x, s)| g.commutator(x, s))
            .collect();
        let (bits, _) = normal_closure_within(g, g.generators(), seed);
        if bits.count() == cur.size() {
            break;
        }
        terms.push(SubgroupSet::try_from_bits(g, bits).unwrap());
    }
    SeriesChain {
        kind: SeriesKind::LowerCentral,
        terms,
    }
}

pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    g.is_abelian() || lower_central_series(g).last().is_trivial()
}

pub fn upper_central_series(g: &FiniteGroup) -> SeriesChain {
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let cur = terms.last().unwrap();
        let next = BitSet::from_indices(
            g.order(),
            g.elements().filter(|&x| {
                g.generators()
                    .iter()
                    .all(|&s| cur.contains(g.commutator(x, s)))
            }),
        );
        if next.count() == cur.size() {
            break;
        }
        terms.push(SubgroupSet::try_from_bits(g, next).unwrap());
    }
    SeriesChain {
        kind: SeriesKind::UpperCentral,
        terms,
    }
}

/// `Z_∞(G)`, the last term of the upper central series.
pub fn hypercenter(g: &FiniteGroup) -> SubgroupSet {
    upper_central_series(g).last().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn derived_subgroup_of_s3() {
        assert_eq!(derived_subgroup(&builtin("S3").unwrap()).size(), 3);
    }

    #[test]
    fn derived_subgroup_matches_all_commutators() {
        for name in ["S4", "A4", "Q8", "T100", "D6", "A5"] {
            let g = builtin(name).unwrap();
            let brute = g.subgroup_closure(
                g.elements()
                    .flat_map(|x| g.elements().map(move |y| (x, y)))
                    .map(|(x, y)| g.commutator(x, y)),
            );
            assert_eq!(derived_subgroup(&g), brute, "{name}");
        }
    }

    #[test]
    fn a5_not_soluble() {
        let a5 = builtin("A5").unwrap();
        assert!(!is_soluble(&a5));
        assert_eq!(derived_series(&a5).terms.len(), 1);
    }

    #[test]
    fn abelian_soluble_and_nilpotent() {
        let g = builtin("C12").unwrap();
        assert!(is_soluble(&g));
        assert!(is_nilpotent(&g));
    }

    #[test]
    fn s4_derived_series() {
        let s4 = builtin("S4").unwrap();
        let sizes: Vec<usize> = derived_series(&s4).terms.iter().map(|t| t.size()).collect();
        assert_eq!(sizes, vec![24, 12, 4, 1]);
    }

    #[test]
    fn hypercenters() {
        assert_eq!(hypercenter(&builtin("S3").unwrap()).size(), 1);
        assert_eq!(hypercenter(&builtin("S3xC2").unwrap()).size(), 2);
        assert_eq!(hypercenter(&builtin("D4").unwrap()).size(), 8);
        assert_eq!(hypercenter(&builtin("Q8").unwrap()).size(), 8);
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&builtin("D8").unwrap()));
        assert!(!is_nilpotent(&builtin("D6").unwrap()));
        assert!(!is_nilpotent(&builtin("A4").unwrap()));
        let q8 = builtin("Q8").unwrap();
        let lc: Vec<usize> = lower_central_series(&q8).terms.iter().map(|t| t.size()).collect();
        assert_eq!(lc, vec![8, 2, 1]);
    }
}
