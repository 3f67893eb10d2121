//! Finite groups as multiplication tables, membership in classes of groups,
//! and the graphs on group elements built from them.

pub mod bitset;
#[cfg(feature = "cache")]
pub mod cache;
pub mod catalog;
pub mod error;
pub mod facts;
pub mod formations;
pub mod graph;
pub mod group;
pub mod lab;
pub mod report;
pub mod structure;

pub use bitset::BitSet;
pub use error::{Error, Result};
pub use facts::Facts;
pub use formations::FormationSpec;
pub use group::{Elem, FiniteGroup, GroupSpec, SubgroupSet};
