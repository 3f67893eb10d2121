//! Membership in the supported classes of groups, residuals, F-Frattini
//! subgroups and critical groups.

mod membership;
mod ops;
mod spec;

pub use membership::{classifier, decide, is_member, tgroup_witness, Classifier};
pub use ops::{
    criticality, fbar_member, phi_f, residual, two_generated_recognizable_on, CriticalityVerdict,
    CriticalityWitness,
};
pub use spec::FormationSpec;
