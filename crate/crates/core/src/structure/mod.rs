//! Characteristic subgroups, series, radicals and the subgroup lattice.

mod generation;
mod lattice;
mod normal;
mod primitive;
mod radicals;
mod series;

pub use generation::{generating_pair_elements, generating_pair_elements_from, PairTable};
pub(crate) use generation::map_rows;
pub use lattice::{
    all_subgroups, all_subgroups_capped, frattini_subgroup, maximal_subgroups, LatticeCaps,
    SubgroupLattice, DEFAULT_LATTICE_COUNT_CAP, DEFAULT_LATTICE_ORDER_CAP,
};
pub(crate) use lattice::frattini_from;
pub use normal::{
    chief_series, minimal_normal_subgroups, normal_subgroups, normal_subgroups_capped, socle,
    DEFAULT_NORMAL_CAP,
};
pub(crate) use normal::minimal_among;
pub use primitive::primitive_monolithic_soluble;
pub(crate) use primitive::primitive_from;
pub use radicals::{
    fitting_length, fitting_series, fitting_subgroup, is_p_power, is_prime, p_core,
    prime_divisors, soluble_radical, FittingLength,
};
pub use series::{
    derived_series, derived_subgroup, hypercenter, is_nilpotent, is_soluble,
    lower_central_series, upper_central_series, SeriesChain, SeriesKind,
};
