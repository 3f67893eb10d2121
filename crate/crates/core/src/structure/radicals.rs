//! Radicals computed class by class.
//!
//! For a class-closed property P that is preserved by products of normal
//! subgroups (soluble, nilpotent, p-group), the largest normal P-subgroup is
//! exactly the set of elements whose normal closure has P. So each radical
//! costs one normal closure and one predicate per conjugacy class.

use std::fmt;

use serde::{Serialize, Serializer};

use super::series::{is_nilpotent, is_soluble, SeriesChain, SeriesKind};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupSet};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn is_p_power(n: usize, p: usize) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn radical_by(g: &FiniteGroup, pred: impl Fn(&FiniteGroup) -> bool) -> SubgroupSet {
    let mut bits = BitSet::new(g.order());
    for class in g.conjugacy_classes() {
        let ncl = g.normal_closure([class[0]]);
        if bits.contains(class[0]) || pred(&g.induced(ncl.bits()).group) {
            for x in class {
                bits.insert(x);
            }
        }
    }
    SubgroupSet::try_from_bits(g, bits).expect("radical is a subgroup")
}

/// `R(G)`, the largest normal soluble subgroup.
pub fn soluble_radical(g: &FiniteGroup) -> SubgroupSet {
    if is_soluble(g) {
        return g.whole();
    }
    radical_by(g, is_soluble)
}

/// `F(G)`, the largest normal nilpotent subgroup.
pub fn fitting_subgroup(g: &FiniteGroup) -> SubgroupSet {
    if is_nilpotent(g) {
        return g.whole();
    }
    radical_by(g, is_nilpotent)
}

/// `O_p(G)`, the largest normal p-subgroup.
pub fn p_core(g: &FiniteGroup, p: u64) -> Result<SubgroupSet> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = p as usize;
    if is_p_power(g.order(), p) {
        return Ok(g.whole());
    }
    Ok(radical_by(g, |h| is_p_power(h.order(), p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FittingLength {
    Finite(usize),
    /// `F(G)` became trivial before the group did: `G` is not soluble.
    Infinite,
}

impl FittingLength {
    pub fn at_most(self, t: usize) -> bool {
        matches!(self, FittingLength::Finite(l) if l <= t)
    }
}

impl fmt::Display for FittingLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FittingLength::Finite(l) => write!(f, "{l}"),
            FittingLength::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for FittingLength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FittingLength::Finite(l) => s.serialize_u64(*l as u64),
            FittingLength::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Number of steps `G ↦ G/F(G)` needed to reach the trivial group.
pub fn fitting_length(g: &FiniteGroup) -> FittingLength {
    let mut cur = g.clone();
    let mut steps = 0;
    while !cur.is_trivial() {
        let f = fitting_subgroup(&cur);
        if f.is_trivial() {
            return FittingLength::Infinite;
        }
        cur = cur.quotient(&f).expect("F(G) is normal").group;
        steps += 1;
    }
    FittingLength::Finite(steps)
}

/// Ascending Fitting series `1 < F(G) < F₂(G) < …`, stopping when the
/// Fitting subgroup of the current quotient is trivial.
pub fn fitting_series(g: &FiniteGroup) -> SeriesChain {
    let mut terms = vec![g.trivial_subgroup()];
    loop {
        let cur = terms.last().unwrap();
        if cur.size() == g.order() {
            break;
        }
        let q = g.quotient(cur).expect("Fitting series terms are normal");
        let f = fitting_subgroup(&q.group);
        if f.is_trivial() {
            break;
        }
        let pre = q.preimage(f.bits());
        terms.push(SubgroupSet::try_from_bits(g, pre).unwrap());
    }
    SeriesChain {
        kind: SeriesKind::Fitting,
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(5) && !is_prime(1) && !is_prime(9));
        assert_eq!(prime_divisors(200), vec![2, 5]);
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
    }

    #[test]
    fn soluble_radicals() {
        assert!(soluble_radical(&builtin("A5").unwrap()).is_trivial());
        assert_eq!(soluble_radical(&builtin("S4").unwrap()).size(), 24);
        let g = crate::group::GroupSpec::direct(GroupSpec::builtin("A5"), GroupSpec::builtin("C3"))
            .build()
            .unwrap();
        assert_eq!(soluble_radical(&g).size(), 3);
        assert_eq!(soluble_radical(&builtin("S5").unwrap()).size(), 1);
    }

    use crate::group::GroupSpec;

    #[test]
    fn fitting_subgroups() {
        assert_eq!(fitting_subgroup(&builtin("S3").unwrap()).size(), 3);
        assert_eq!(fitting_subgroup(&builtin("S4").unwrap()).size(), 4);
        assert_eq!(fitting_subgroup(&builtin("T100").unwrap()).size(), 25);
    }

    #[test]
    fn fitting_lengths() {
        assert_eq!(fitting_length(&builtin("S3").unwrap()), FittingLength::Finite(2));
        assert_eq!(fitting_length(&builtin("S4").unwrap()), FittingLength::Finite(3));
        assert_eq!(fitting_length(&builtin("C1").unwrap()), FittingLength::Finite(0));
        assert_eq!(fitting_length(&builtin("Q8").unwrap()), FittingLength::Finite(1));
        assert_eq!(fitting_length(&builtin("A5").unwrap()), FittingLength::Infinite);
        let s4 = builtin("S4").unwrap();
        assert_eq!(fitting_series(&s4).factor_sizes(), vec![4, 3, 2]);
    }

    #[test]
    fn p_cores() {
        let s4 = builtin("S4").unwrap();
        assert_eq!(p_core(&s4, 2).unwrap().size(), 4);
        assert!(p_core(&s4, 3).unwrap().is_trivial());
        assert!(matches!(p_core(&s4, 4), Err(Error::NotPrime(4))));
        assert_eq!(p_core(&builtin("Q8").unwrap(), 2).unwrap().size(), 8);
        assert!(p_core(&builtin("Q8").unwrap(), 5).unwrap().is_trivial());
    }

    #[test]
    fn radicals_match_normal_subgroup_scan() {
        use crate::structure::normal_subgroups;
        for name in ["S4", "A4", "D6", "S3xC2", "T100", "A5", "D5", "Q8"] {
            let g = builtin(name).unwrap();
            let ns = normal_subgroups(&g).unwrap();
            let best = |pred: &dyn Fn(&FiniteGroup) -> bool| {
                ns.iter()
                    .filter(|n| pred(&g.induced(n.bits()).group))
                    .max_by_key(|n| n.size())
                    .unwrap()
                    .clone()
            };
            assert_eq!(fitting_subgroup(&g), best(&is_nilpotent), "{name}");
            assert_eq!(soluble_radical(&g), best(&is_soluble), "{name}");
            for p in [2u64, 3, 5] {
                let pc = best(&|h: &FiniteGroup| is_p_power(h.order(), p as usize));
                assert_eq!(p_core(&g, p).unwrap(), pc, "{name} p={p}");
            }
        }
    }
}
