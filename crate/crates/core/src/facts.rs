use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::bitset::BitSet;
use crate::error::Result;
use crate::formations::{classifier, Classifier, FormationSpec};
use crate::group::{FiniteGroup, SubgroupSet};
use crate::graph::ElementGraph;
use crate::structure::{
    all_subgroups, frattini_from, is_soluble, minimal_among, normal_subgroups, primitive_from,
    PairTable, SubgroupLattice,
};

/// Lazily computed data about one group, shared by every formation asked
/// about it: the pair-closure table, the subgroup lattice, the normal
/// subgroups, membership answers for subgroups, the non-F graphs and the
/// F-Frattini subgroups.
pub struct Facts<'g> {
    group: &'g FiniteGroup,
    classifier: &'g Classifier,
    pairs: OnceLock<PairTable>,
    lattice: OnceLock<Result<SubgroupLattice>>,
    normals: OnceLock<Result<Vec<SubgroupSet>>>,
    sub_memo: Mutex<HashMap<(BitSet, FormationSpec), bool>>,
    pub(crate) graphs: Mutex<HashMap<FormationSpec, ElementGraph>>,
    pub(crate) phis: Mutex<HashMap<FormationSpec, SubgroupSet>>,
}

impl<'g> Facts<'g> {
    pub fn new(group: &'g FiniteGroup) -> Self {
        Self::with_classifier(group, classifier())
    }

    pub fn with_classifier(group: &'g FiniteGroup, classifier: &'g Classifier) -> Self {
        Facts {
            group,
            classifier,
            pairs: OnceLock::new(),
            lattice: OnceLock::new(),
            normals: OnceLock::new(),
            sub_memo: Mutex::new(HashMap::new()),
            graphs: Mutex::new(HashMap::new()),
            phis: Mutex::new(HashMap::new()),
        }
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn pairs(&self) -> &PairTable {
        self.pairs.get_or_init(|| PairTable::new(self.group))
    }

    pub fn lattice(&self) -> Result<&SubgroupLattice> {
        self.lattice
            .get_or_init(|| all_subgroups(self.group))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Normal subgroups, sorted. Read off the lattice when it is already
    /// built, otherwise computed from conjugacy classes.
    pub fn normals(&self) -> Result<&[SubgroupSet]> {
        self.normals
            .get_or_init(|| match self.lattice.get() {
                Some(Ok(l)) => Ok(l.normal_subgroups().cloned().collect()),
                _ => normal_subgroups(self.group),
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    pub fn minimal_normals(&self) -> Result<Vec<SubgroupSet>> {
        Ok(minimal_among(self.normals()?))
    }

    pub fn socle(&self) -> Result<SubgroupSet> {
        let mins = self.minimal_normals()?;
        Ok(self.group.subgroup_closure(mins.iter().flat_map(|m| m.elements())))
    }

    /// `Φ(G)`.
    pub fn frattini(&self) -> Result<SubgroupSet> {
        Ok(frattini_from(self.group, self.lattice()?))
    }

    /// Socle and a complement when `G` is primitive monolithic soluble.
    pub fn primitive(&self) -> Result<Option<(SubgroupSet, SubgroupSet)>> {
        let g = self.group;
        if g.is_trivial() || !is_soluble(g) {
            return Ok(None);
        }
        let mins = self.minimal_normals()?;
        if mins.len() != 1 {
            return Ok(None);
        }
        Ok(primitive_from(g, &mins[0], self.lattice()?))
    }

    pub fn is_member(&self, f: FormationSpec) -> Result<bool> {
        self.classifier.is_member(self.group, f)
    }

    /// Membership of a subgroup, viewed as a group in its own right.
    pub fn subgroup_member(&self, h: &BitSet, f: FormationSpec) -> Result<bool> {
        let g = self.group;
        let size = h.count();
        if size == 1 {
            return Ok(true);
        }
        if size == g.order() {
            return self.is_member(f);
        }
        if f.contains_abelian() && h.iter().any(|x| g.order_of(x) == size) {
            return Ok(true);
        }
        let key = (h.clone(), f);
        if let Some(&v) = self.sub_memo.lock().unwrap().get(&key) {
            return Ok(v);
        }
        let v = self.classifier.is_member(&g.induced(h).group, f)?;
        self.sub_memo.lock().unwrap().insert(key, v);
        Ok(v)
    }

    /// Membership of `G/N`.
    pub fn quotient_member(&self, n: &SubgroupSet, f: FormationSpec) -> Result<bool> {
        if n.size() == self.group.order() {
            return Ok(true);
        }
        if n.is_trivial() {
            return self.is_member(f);
        }
        let q = self.group.quotient(n)?;
        self.classifier.is_member(&q.group, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;
    use crate::formations::decide;

    #[test]
    fn subgroup_membership_matches_induced_groups() {
        let g = builtin("S4").unwrap();
        let facts = Facts::new(&g);
        let lat = facts.lattice().unwrap();
        for h in &lat.subgroups {
            for f in [FormationSpec::Abelian, FormationSpec::Nilpotent, FormationSpec::Supersoluble] {
                let direct = decide(&g.induced(h.bits()).group, f).unwrap();
                assert_eq!(facts.subgroup_member(h.bits(), f).unwrap(), direct);
            }
        }
    }

    #[test]
    fn normals_from_either_source_agree() {
        let g = builtin("D6").unwrap();
        let a = Facts::new(&g);
        let from_classes = a.normals().unwrap().to_vec();
        let b = Facts::new(&g);
        b.lattice().unwrap();
        assert_eq!(b.normals().unwrap(), from_classes.as_slice());
    }
}
