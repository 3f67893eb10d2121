use super::lattice::{all_subgroups, frattini_from, SubgroupLattice};
use super::normal::minimal_normal_subgroups;
use super::series::is_soluble;
use crate::error::Result;
use crate::group::{FiniteGroup, SubgroupSet};

/// Socle and a complement to it, when `G` is soluble, has a unique minimal
/// normal subgroup and trivial Frattini subgroup.
pub fn primitive_monolithic_soluble(g: &FiniteGroup) -> Result<Option<(SubgroupSet, SubgroupSet)>> {
    if g.is_trivial() || !is_soluble(g) {
        return Ok(None);
    }
    let mins = minimal_normal_subgroups(g)?;
    if mins.len() != 1 {
        return Ok(None);
    }
    let lattice = all_subgroups(g)?;
    Ok(primitive_from(g, &mins[0], &lattice))
}

pub(crate) fn primitive_from(
    g: &FiniteGroup,
    socle: &SubgroupSet,
    lattice: &SubgroupLattice,
) -> Option<(SubgroupSet, SubgroupSet)> {
    if !frattini_from(g, lattice).is_trivial() {
        return None;
    }
    let index = g.order() / socle.size();
    lattice
        .subgroups
        .iter()
        .find(|s| s.size() == index && s.intersection(socle).is_trivial())
        .map(|s| (socle.clone(), s.clone()))
}
