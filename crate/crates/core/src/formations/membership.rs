use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::FormationSpec;
use crate::error::Result;
use crate::group::{ContentHash, FiniteGroup, SubgroupSet};
use crate::structure::{
    all_subgroups, chief_series, derived_subgroup, fitting_length, is_nilpotent, is_soluble,
    p_core,
};

/// Membership decisions memoized by table digest.
///
/// Two threads may race to decide the same key; both compute the same
/// answer, so the second insert is harmless.
#[derive(Default)]
pub struct Classifier {
    memo: Mutex<HashMap<(ContentHash, FormationSpec), bool>>,
}

impl Classifier {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_member(&self, g: &FiniteGroup, f: FormationSpec) -> Result<bool> {
        let key = (g.content_hash(), f);
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return Ok(v);
        }
        let v = decide(g, f)?;
        self.memo.lock().unwrap().insert(key, v);
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.memo.lock().unwrap().clear();
    }
}

/// The process-wide classifier used by the free functions.
pub fn classifier() -> &'static Classifier {
    static SHARED: OnceLock<Classifier> = OnceLock::new();
    SHARED.get_or_init(Classifier::new)
}

/// Whether `g` lies in the class `f`.
pub fn is_member(g: &FiniteGroup, f: FormationSpec) -> Result<bool> {
    classifier().is_member(g, f)
}

/// Decides membership without consulting any memo.
pub fn decide(g: &FiniteGroup, f: FormationSpec) -> Result<bool> {
    use FormationSpec::*;
    if g.is_trivial() {
        return Ok(true);
    }
    if f.contains_abelian() && g.is_abelian() {
        return Ok(true);
    }
    if f.contains_nilpotent() && is_nilpotent(g) {
        return Ok(true);
    }
    Ok(match f {
        Abelian => false,
        Nilpotent => false,
        Soluble => is_soluble(g),
        Supersoluble => {
            is_soluble(g)
                && chief_series(g)?
                    .factor_sizes()
                    .iter()
                    .all(|&s| crate::structure::is_prime(s as u64))
        }
        NilpotentDerived => {
            let d = derived_subgroup(g);
            is_nilpotent(&g.induced(d.bits()).group)
        }
        FittingLength(t) => fitting_length(g).at_most(t),
        PCoreThenFitting { p, t } => {
            let o = p_core(g, p)?;
            let q = g.quotient(&o).expect("O_p(G) is normal").group;
            fitting_length(&q).at_most(t)
        }
        TGroups => tgroup_witness(g)?.is_none(),
    })
}

/// A pair `H ⊴ K ⊴ G` with `H` not normal in `G`, if one exists.
pub fn tgroup_witness(g: &FiniteGroup) -> Result<Option<(SubgroupSet, SubgroupSet)>> {
    let lattice = all_subgroups(g)?;
    if lattice.normal.iter().all(|&n| n) {
        return Ok(None);
    }
    for (k, &k_normal) in lattice.subgroups.iter().zip(&lattice.normal) {
        if !k_normal || k.size() == g.order() || k.size() < 4 {
            continue;
        }
        let kgens = g.greedy_generators(k.bits().iter());
        for (h, &h_normal) in lattice.subgroups.iter().zip(&lattice.normal) {
            if h_normal || h.size() >= k.size() || !h.is_subgroup_of(k) {
                continue;
            }
            let normal_in_k = h
                .bits()
                .iter()
                .all(|x| kgens.iter().all(|&s| h.contains(g.conj(x, s))));
            if normal_in_k {
                return Ok(Some((h.clone(), k.clone())));
            }
        }
    }
    Ok(None)
}
