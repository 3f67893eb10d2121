use super::{is_member, FormationSpec};
use crate::error::{Error, Result};
use crate::facts::Facts;
use crate::group::{FiniteGroup, SubgroupSet};
use crate::structure::{is_prime, p_core};

/// Why a group is, or is not, (strongly) critical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriticalityWitness {
    /// A proper subgroup outside the class.
    Subgroup(SubgroupSet),
    /// A nontrivial normal subgroup whose quotient lies outside the class.
    Quotient(SubgroupSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalityVerdict {
    pub is_member: bool,
    /// Not a member, but every proper subgroup is.
    pub is_critical: bool,
    /// Critical, and every proper quotient is a member.
    pub is_strongly_critical: bool,
    pub witness: Option<CriticalityWitness>,
}

impl Facts<'_> {
    /// `G^F`: the smallest normal subgroup with quotient in `F`.
    ///
    /// For a formation the candidates are closed under intersection, which
    /// is checked. T-groups are not assumed to form one; for them the
    /// smallest candidate in lattice order is returned.
    pub fn residual(&self, f: FormationSpec) -> Result<SubgroupSet> {
        let g = self.group();
        if self.is_member(f)? {
            return Ok(g.trivial_subgroup());
        }
        let mut candidates = Vec::new();
        for n in self.normals()? {
            if self.quotient_member(n, f)? {
                candidates.push(n.clone());
            }
        }
        let smallest = candidates.first().cloned().ok_or(Error::NoResidual)?;
        if f == FormationSpec::TGroups {
            return Ok(smallest);
        }
        let meet = candidates
            .iter()
            .fold(g.whole(), |acc, n| acc.intersection(n));
        assert!(
            candidates.contains(&meet),
            "{f}: quotient candidates are not closed under intersection"
        );
        Ok(meet)
    }

    pub fn criticality(&self, f: FormationSpec) -> Result<CriticalityVerdict> {
        let g = self.group();
        if self.is_member(f)? {
            return Ok(CriticalityVerdict {
                is_member: true,
                is_critical: false,
                is_strongly_critical: false,
                witness: None,
            });
        }
        let lattice = self.lattice()?;
        // for a hereditary class the maximal subgroups decide
        for (i, h) in lattice.subgroups.iter().enumerate() {
            let relevant = if f.is_hereditary() {
                lattice.maximal[i]
            } else {
                h.size() < g.order()
            };
            if relevant && !self.subgroup_member(h.bits(), f)? {
                return Ok(CriticalityVerdict {
                    is_member: false,
                    is_critical: false,
                    is_strongly_critical: false,
                    witness: Some(CriticalityWitness::Subgroup(h.clone())),
                });
            }
        }
        for n in self.normals()? {
            if !n.is_trivial() && !self.quotient_member(n, f)? {
                return Ok(CriticalityVerdict {
                    is_member: false,
                    is_critical: true,
                    is_strongly_critical: false,
                    witness: Some(CriticalityWitness::Quotient(n.clone())),
                });
            }
        }
        Ok(CriticalityVerdict {
            is_member: false,
            is_critical: true,
            is_strongly_critical: true,
            witness: None,
        })
    }

    /// `φ_F(G)`: intersection of the subgroups maximal among those in `F`.
    pub fn phi_f(&self, f: FormationSpec) -> Result<SubgroupSet> {
        if let Some(phi) = self.phis.lock().unwrap().get(&f) {
            return Ok(phi.clone());
        }
        let phi = self.compute_phi_f(f)?;
        self.phis.lock().unwrap().insert(f, phi.clone());
        Ok(phi)
    }

    fn compute_phi_f(&self, f: FormationSpec) -> Result<SubgroupSet> {
        let g = self.group();
        if self.is_member(f)? {
            return Ok(g.whole());
        }
        let lattice = self.lattice()?;
        let mut members: Vec<&SubgroupSet> = Vec::new();
        for h in &lattice.subgroups {
            if self.subgroup_member(h.bits(), f)? {
                members.push(h);
            }
        }
        let maximal = members.iter().filter(|h| {
            !members
                .iter()
                .any(|k| k.size() > h.size() && h.is_subgroup_of(k))
        });
        Ok(maximal.fold(g.whole(), |acc, h| acc.intersection(h)))
    }

    /// True when every 2-generated subgroup lies in `F`.
    pub fn two_generated_in(&self, f: FormationSpec) -> Result<bool> {
        for h in self.pairs().subgroups() {
            if !self.subgroup_member(h.bits(), f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn residual(g: &FiniteGroup, f: FormationSpec) -> Result<SubgroupSet> {
    Facts::new(g).residual(f)
}

pub fn criticality(g: &FiniteGroup, f: FormationSpec) -> Result<CriticalityVerdict> {
    Facts::new(g).criticality(f)
}

pub fn phi_f(g: &FiniteGroup, f: FormationSpec) -> Result<SubgroupSet> {
    Facts::new(g).phi_f(f)
}

/// True when every pair of elements generates a subgroup in `F`. If this
/// holds while `G ∉ F`, then `G` shows `F` is not 2-recognizable.
pub fn two_generated_recognizable_on(g: &FiniteGroup, f: FormationSpec) -> Result<bool> {
    Facts::new(g).two_generated_in(f)
}

/// Local-data membership at the prime `p`:
///
/// * supersoluble: `K/O_p(K)` abelian of exponent dividing `p − 1`;
/// * nilpotent-derived: `K/O_p(K)` abelian;
/// * `fitting:t`: `K ∈ pcore-fitting:p:(t−1)`.
pub fn fbar_member(k: &FiniteGroup, p: u64, f: FormationSpec) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let top = || -> Result<FiniteGroup> {
        let o = p_core(k, p)?;
        Ok(k.quotient(&o)?.group)
    };
    match f {
        FormationSpec::Supersoluble => {
            let q = top()?;
            let exp_divides = q.elements().all(|x| (p as usize - 1).is_multiple_of(q.order_of(x)));
            Ok(q.is_abelian() && exp_divides)
        }
        FormationSpec::NilpotentDerived => Ok(top()?.is_abelian()),
        FormationSpec::FittingLength(t) => {
            is_member(k, FormationSpec::PCoreThenFitting { p, t: t - 1 })
        }
        other => Err(Error::UnsupportedFormation(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use FormationSpec::*;

    fn g(name: &str) -> FiniteGroup {
        builtin(name).unwrap()
    }

    #[test]
    fn residuals() {
        let s3 = g("S3");
        assert_eq!(residual(&s3, Abelian).unwrap().size(), 3);
        assert!(residual(&g("C6"), Abelian).unwrap().is_trivial());
        assert_eq!(residual(&g("S4"), Nilpotent).unwrap().size(), 12);
        assert_eq!(residual(&g("S4"), Abelian).unwrap().size(), 12);
        assert_eq!(residual(&g("A5"), Soluble).unwrap().size(), 60);
        assert_eq!(residual(&g("S4"), Supersoluble).unwrap().size(), 4);
    }

    #[test]
    fn criticality_examples() {
        let v = criticality(&g("S3"), Abelian).unwrap();
        assert!(v.is_critical && v.is_strongly_critical && !v.is_member);
        let v = criticality(&g("T100"), TGroups).unwrap();
        assert!(v.is_critical);
        let v = criticality(&g("C6"), Abelian).unwrap();
        assert!(v.is_member && !v.is_critical);
        let v = criticality(&g("S4"), Abelian).unwrap();
        assert!(!v.is_critical);
        assert!(matches!(v.witness, Some(CriticalityWitness::Subgroup(_))));
        // D6 has a subgroup isomorphic to S3
        let v = criticality(&g("D6"), Abelian).unwrap();
        assert!(!v.is_critical);
        let v = criticality(&g("G200"), Supersoluble).unwrap();
        assert!(v.is_strongly_critical);
    }

    #[test]
    fn q8_is_strongly_critical_for_abelian() {
        let v = criticality(&g("Q8"), Abelian).unwrap();
        assert!(v.is_strongly_critical);
    }

    #[test]
    fn phi_examples() {
        let q8 = g("Q8");
        assert_eq!(phi_f(&q8, Abelian).unwrap(), q8.center());
        assert!(phi_f(&g("S3"), Nilpotent).unwrap().is_trivial());
        assert_eq!(phi_f(&g("C6"), Abelian).unwrap().size(), 6);
    }

    #[test]
    fn two_generated() {
        assert!(two_generated_recognizable_on(&g("C12"), Abelian).unwrap());
        assert!(!two_generated_recognizable_on(&g("S3"), Nilpotent).unwrap());
        // T100 is 2-generated and not a T-group, so some pair is a witness;
        // every proper 2-generated subgroup is a T-group since T100 is critical
        let t = g("T100");
        assert!(!two_generated_recognizable_on(&t, TGroups).unwrap());
        let facts = Facts::new(&t);
        for h in facts.pairs().subgroups() {
            let inside = facts.subgroup_member(h.bits(), TGroups).unwrap();
            assert_eq!(inside, h.size() < t.order());
        }
    }

    #[test]
    fn fbar() {
        assert!(fbar_member(&g("C4"), 5, Supersoluble).unwrap());
        assert!(!fbar_member(&g("Q8"), 5, Supersoluble).unwrap());
        assert!(!fbar_member(&g("S3"), 2, FittingLength(2)).unwrap());
        assert!(fbar_member(&g("S3"), 3, FittingLength(2)).unwrap());
        assert!(fbar_member(&g("Q8"), 2, NilpotentDerived).unwrap());
        assert!(matches!(fbar_member(&g("S3"), 3, Abelian), Err(Error::UnsupportedFormation(_))));
        assert!(matches!(fbar_member(&g("S3"), 4, Supersoluble), Err(Error::NotPrime(4))));
    }
}
