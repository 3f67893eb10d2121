use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::structure::is_prime;

/// One of the supported classes of groups.
///
/// String forms: `abelian`, `nilpotent`, `soluble`, `supersoluble`,
/// `nilpotent-derived`, `fitting:<t>`, `pcore-fitting:<p>:<t>`, `tgroups`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormationSpec {
    Abelian,
    Nilpotent,
    Soluble,
    Supersoluble,
    /// Groups with nilpotent derived subgroup.
    NilpotentDerived,
    /// Fitting length at most `t`, `t ≥ 1`.
    FittingLength(usize),
    /// `G/O_p(G)` has Fitting length at most `t`.
    PCoreThenFitting { p: u64, t: usize },
    /// Groups in which normality is transitive.
    TGroups,
}

impl FormationSpec {
    pub fn fitting(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::UnknownFormation("fitting:0 (t must be at least 1)".into()));
        }
        Ok(FormationSpec::FittingLength(t))
    }

    pub fn pcore_fitting(p: u64, t: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FormationSpec::PCoreThenFitting { p, t })
    }

    /// Closed under subgroups.
    pub fn is_hereditary(self) -> bool {
        self != FormationSpec::TGroups
    }

    /// Closed under `G/Φ(G) ∈ F ⇒ G ∈ F`.
    pub fn is_saturated(self) -> bool {
        !matches!(self, FormationSpec::Abelian | FormationSpec::TGroups)
    }

    /// Every abelian group is a member.
    pub fn contains_abelian(self) -> bool {
        !matches!(self, FormationSpec::PCoreThenFitting { t: 0, .. })
    }

    /// Every nilpotent group is a member.
    pub fn contains_nilpotent(self) -> bool {
        !matches!(
            self,
            FormationSpec::Abelian
                | FormationSpec::TGroups
                | FormationSpec::PCoreThenFitting { t: 0, .. }
        )
    }

    /// Every member is soluble.
    pub fn is_soluble_class(self) -> bool {
        self != FormationSpec::TGroups
    }
}

impl fmt::Display for FormationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormationSpec::Abelian => f.write_str("abelian"),
            FormationSpec::Nilpotent => f.write_str("nilpotent"),
            FormationSpec::Soluble => f.write_str("soluble"),
            FormationSpec::Supersoluble => f.write_str("supersoluble"),
            FormationSpec::NilpotentDerived => f.write_str("nilpotent-derived"),
            FormationSpec::FittingLength(t) => write!(f, "fitting:{t}"),
            FormationSpec::PCoreThenFitting { p, t } => write!(f, "pcore-fitting:{p}:{t}"),
            FormationSpec::TGroups => f.write_str("tgroups"),
        }
    }
}

impl FromStr for FormationSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownFormation(s.to_string());
        let num = |x: &str| -> Result<u64> {
            if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            x.parse().map_err(|_| bad())
        };
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            ["abelian"] => Ok(FormationSpec::Abelian),
            ["nilpotent"] => Ok(FormationSpec::Nilpotent),
            ["soluble"] => Ok(FormationSpec::Soluble),
            ["supersoluble"] => Ok(FormationSpec::Supersoluble),
            ["nilpotent-derived"] => Ok(FormationSpec::NilpotentDerived),
            ["tgroups"] => Ok(FormationSpec::TGroups),
            ["fitting", t] => FormationSpec::fitting(num(t)? as usize),
            ["pcore-fitting", p, t] => FormationSpec::pcore_fitting(num(p)?, num(t)? as usize),
            _ => Err(bad()),
        }
    }
}

impl Serialize for FormationSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FormationSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_all_forms() {
        for s in [
            "abelian",
            "nilpotent",
            "soluble",
            "supersoluble",
            "nilpotent-derived",
            "fitting:2",
            "pcore-fitting:5:0",
            "tgroups",
        ] {
            let f: FormationSpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("fitting:0".parse::<FormationSpec>(), Err(Error::UnknownFormation(_))));
        assert!(matches!("pcore-fitting:4:1".parse::<FormationSpec>(), Err(Error::NotPrime(4))));
        for bad in ["", "Abelian", "fitting", "fitting:x", "fitting:-1", "pcore-fitting:2", "tgroups:1"] {
            assert!(bad.parse::<FormationSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn serde_as_string() {
        let f = FormationSpec::PCoreThenFitting { p: 3, t: 2 };
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, "\"pcore-fitting:3:2\"");
        assert_eq!(serde_json::from_str::<FormationSpec>(&j).unwrap(), f);
    }

    proptest! {
        #[test]
        fn display_round_trips(t in 1usize..50, pi in 0usize..6, t2 in 0usize..50) {
            let p = [2u64, 3, 5, 7, 11, 13][pi];
            for f in [FormationSpec::FittingLength(t), FormationSpec::PCoreThenFitting { p, t: t2 }] {
                prop_assert_eq!(f.to_string().parse::<FormationSpec>().unwrap(), f);
            }
        }
    }
}
