use super::{elements_witness, product_escape, product_witness, Outcome, Recorder, Witness};
use crate::bitset::BitSet;
use crate::catalog::builtin;
use crate::facts::Facts;
use crate::formations::FormationSpec::{self, *};
use crate::group::{is_isomorphic, FiniteGroup, SubgroupSet};
use crate::structure::{hypercenter, is_soluble, soluble_radical};

fn symmetric_difference(a: &BitSet, b: &BitSet) -> BitSet {
    a.difference(b).union(&b.difference(a))
}

type Expected = fn(&FiniteGroup) -> SubgroupSet;

pub(super) fn radicals(r: &mut Recorder, facts: &Facts) {
    let g = facts.group();
    let checks: [(FormationSpec, &str, Expected); 3] = [
        (Abelian, "isolated-equals-center", |g| g.center()),
        (Nilpotent, "isolated-equals-hypercenter", hypercenter),
        (Soluble, "isolated-equals-soluble-radical", soluble_radical),
    ];
    for (f, case, expected) in checks {
        r.case(Some(f), case, true, || {
            let iso = facts.isolated(f)?;
            let diff = symmetric_difference(&iso, expected(g).bits());
            Ok(Outcome::check(diff.is_empty(), || elements_witness(g, &diff)))
        });
    }
}

pub(super) fn semiregular(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    for &f in fs {
        r.case(Some(f), "isolated-is-subgroup", f != TGroups, || {
            let iso = facts.isolated(f)?;
            let escape = product_escape(g, &iso);
            Ok(Outcome::check(escape.is_none(), || {
                product_witness(g, escape.unwrap())
            }))
        });
    }
}

/// Classes with `φ_F = I_F` for every group.
fn known_regular(f: FormationSpec) -> bool {
    matches!(
        f,
        Abelian | Nilpotent | Soluble | PCoreThenFitting { t: 1, .. }
    )
}

pub(super) fn regularity(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    let counterexample = r.group_name() == "G200";
    for &f in fs {
        let expect_unequal = counterexample && f == Supersoluble;
        let asserted = known_regular(f) || expect_unequal;
        r.case(Some(f), "phi-equals-isolated", asserted, || {
            let phi = facts.phi_f(f)?;
            let iso = facts.isolated(f)?;
            let diff = symmetric_difference(phi.bits(), &iso);
            let equal = diff.is_empty();
            let mut out = if expect_unequal {
                Outcome::check(!equal, || elements_witness(g, &iso))
            } else {
                Outcome::check(equal, || elements_witness(g, &diff))
            };
            if !equal {
                out = out.with_note(format!("|phi| = {}, |I| = {}", phi.size(), iso.count()));
            }
            Ok(out)
        });
    }
}

pub(super) fn connectivity(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    for &f in fs {
        r.case(Some(f), "pruned-graph-connected", f != TGroups, || {
            if facts.is_member(f)? {
                return Ok(Outcome::vacuous("group is in the class"));
            }
            let c = facts.nonf_graph(f)?.prune().components();
            let sizes = c.sizes.clone();
            Ok(Outcome::check(c.count <= 1, || Witness::Components { sizes }))
        });
    }
}

pub(super) fn planarity(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    for &f in fs {
        let asserted = f.contains_nilpotent() && f.is_hereditary();
        r.case(Some(f), "planar-iff-member-or-s3", asserted, || {
            let member = facts.is_member(f)?;
            let is_s3 = g.order() == 6 && is_isomorphic(g, &builtin("S3")?)?;
            let p = facts.nonf_graph(f)?.prune().planarity();
            let cert = p.certificate.as_str();
            Ok(Outcome::check(p.planar == (member || is_s3), || Witness::Planarity {
                planar: p.planar,
                certificate: cert.to_string(),
            })
            .with_note(format!("planar: {}, decided by {cert}", p.planar)))
        });
    }
}

pub(super) fn icyc(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    for &f in fs {
        r.case(Some(f), "cyclic-over-isolated", f != TGroups, || {
            let iso = facts.isolated(f)?;
            if !g.is_subgroup(&iso) {
                return Ok(Outcome::vacuous("isolated set is not a subgroup"));
            }
            let top = g.elements().find(|&x| {
                g.subgroup_closure(iso.iter().chain([x])).size() == g.order()
            });
            let Some(x) = top else {
                return Ok(Outcome::vacuous("no element generates the group over the isolated set"));
            };
            let member = facts.is_member(f)?;
            Ok(Outcome::check(member, || {
                elements_witness(g, &BitSet::from_indices(g.order(), [x]))
            })
            .with_note(format!("generated over the isolated set by {}", g.label(x))))
        });
    }
}

fn is_cyclic(g: &FiniteGroup) -> bool {
    g.elements().any(|x| g.order_of(x) == g.order())
}

pub(super) fn critical(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec], strongly: bool) {
    let g = facts.group();
    let case = if strongly { "strongly-critical" } else { "critical" };
    let name = r.group_name().to_string();
    for &f in fs {
        let verdict = match facts.criticality(f) {
            Ok(v) => v,
            Err(e) => {
                r.case(Some(f), case, false, || Err(e));
                continue;
            }
        };
        let listed = if strongly {
            verdict.is_strongly_critical
        } else {
            verdict.is_critical
        };
        if !listed {
            continue;
        }
        let asserted = strongly && (known_regular(f) || f == Supersoluble && name == "G200");
        r.case(Some(f), case, asserted, || {
            let soluble = is_soluble(g);
            let soc = facts.socle()?;
            let top = g.quotient(&soc)?.group;
            let cyclic = is_cyclic(&top);
            let mut note = format!(
                "soluble: {soluble}, |G/soc| = {}, G/soc cyclic: {cyclic}",
                top.order()
            );
            let out = if !strongly {
                Outcome::pass()
            } else if f == Abelian {
                // the abelian class is not saturated, so a non-cyclic top
                // factor says nothing about regularity; check φ_A = Z instead
                if !cyclic {
                    note.push_str("; flagged: class not saturated, phi_A = Z(G) checked");
                }
                let phi = facts.phi_f(f)?;
                let z = g.center();
                Outcome::check(phi == z, || elements_witness(g, phi.bits()))
            } else if f == Supersoluble && name == "G200" {
                let q8 = top.order() == 8 && is_isomorphic(&top, &builtin("Q8")?)?;
                note.push_str(&format!(", G/soc isomorphic to Q8: {q8}"));
                Outcome::check(!cyclic && q8, || elements_witness(g, soc.bits()))
            } else {
                Outcome::check(!soluble || cyclic, || elements_witness(g, soc.bits()))
            };
            Ok(out.with_note(note))
        });
    }
}
