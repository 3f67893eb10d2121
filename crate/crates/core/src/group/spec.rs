use serde::{Deserialize, Serialize};

use super::build::{self, BuildOptions};
use super::FiniteGroup;
use crate::error::{Error, Result};

/// How a group is built. This is also the JSON group-spec file format:
///
/// ```json
/// {"type":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]}
/// {"type":"semidirect","normal":{..},"acting":{..},"action":[[..],..]}
/// {"type":"direct","factors":[{..},{..}]}
/// {"type":"table","table":[[0,1],[1,0]]}
/// {"type":"builtin","name":"S3"}
/// ```
///
/// For `semidirect`, `action[i]` is the image of the acting group's `i`-th
/// generator as a permutation of the normal factor's element indices. The
/// image is the automorphism `n ↦ h n h⁻¹`, so in the built group
/// `(n₁,h₁)(n₂,h₂) = (n₁·φ_{h₁}(n₂), h₁h₂)`. Worked example with
/// `N = C3 = {0,1,2}` and `H = C2 = {0,1}`, `action = [[0,2,1]]`: the element
/// `(1,0)` conjugated by `(0,1)` is `(0,1)(1,0)(0,1)⁻¹ = (φ(1),1)(0,1) = (2,0)`,
/// so the result is S3.
///
/// Element numbering: permutation groups in BFS order from the identity
/// (generators applied in input order, `x·g` means "apply x, then g");
/// direct products `(a,b) ↦ a·|B| + b`; semidirect products
/// `(n,h) ↦ h·|N| + n`, so the normal factor occupies the first `|N|`
/// indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Table {
        table: Vec<Vec<usize>>,
    },
    Direct {
        factors: Vec<GroupSpec>,
    },
    Semidirect {
        normal: Box<GroupSpec>,
        acting: Box<GroupSpec>,
        action: Vec<Vec<usize>>,
    },
    Builtin {
        name: String,
    },
}

impl GroupSpec {
    pub fn builtin(name: &str) -> Self {
        GroupSpec::Builtin {
            name: name.to_string(),
        }
    }

    pub fn direct(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Direct {
            factors: vec![a, b],
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with(&BuildOptions::default())
    }

    pub fn build_with(&self, opts: &BuildOptions) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Permutation { degree, generators } => {
                build::from_permutations(*degree, generators, opts)
            }
            GroupSpec::Table { table } => build::from_table(table, opts),
            GroupSpec::Direct { factors } => {
                let groups = factors
                    .iter()
                    .map(|f| f.build_with(opts))
                    .collect::<Result<Vec<_>>>()?;
                build::direct_product_all(&groups, opts)
            }
            GroupSpec::Semidirect {
                normal,
                acting,
                action,
            } => {
                let n = normal.build_with(opts)?;
                let h = acting.build_with(opts)?;
                build::semidirect(&n, &h, action, opts)
            }
            GroupSpec::Builtin { name } => crate::catalog::builtin(name),
        }
    }

    /// Parses a group-spec JSON document, reporting the position of the
    /// first syntax or schema error.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_permutation_spec() {
        let s = GroupSpec::from_json(
            r#"{"type":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]}"#,
        )
        .unwrap();
        assert_eq!(s.build().unwrap().order(), 6);
    }

    #[test]
    fn parse_error_has_position() {
        let err = GroupSpec::from_json("{\n  \"type\": \"permutation\",\n  \"degree\": }").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_type_is_parse_error() {
        assert!(matches!(
            GroupSpec::from_json(r#"{"type":"presentation"}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn doc_example_semidirect_is_s3() {
        let spec = GroupSpec::Semidirect {
            normal: Box::new(GroupSpec::builtin("C3")),
            acting: Box::new(GroupSpec::builtin("C2")),
            action: vec![vec![0, 2, 1]],
        };
        let g = spec.build().unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        // (0,1)(1,0)(0,1)^-1 = (2,0); indices: (n,h) -> h*3 + n
        let h = 3;
        assert_eq!(g.mul(g.mul(h, 1), g.inv(h)), 2);
    }
}
