use super::{edge_witness, elements_witness, subgroup_witness, Outcome, Recorder};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::facts::Facts;
use crate::formations::{fbar_member, FormationSpec};
use crate::group::SubgroupSet;
use crate::structure::{
    generating_pair_elements, generating_pair_elements_from, is_soluble, prime_divisors,
};

/// Part (b) for every class at once, so each quotient is built once.
fn frattini_quotients(facts: &Facts, fs: &[FormationSpec]) -> Vec<Result<Outcome>> {
    let g = facts.group();
    let phis: Vec<Result<SubgroupSet>> = fs.iter().map(|&f| facts.phi_f(f)).collect();
    let mut out: Vec<Result<Outcome>> = phis
        .iter()
        .map(|phi| phi.as_ref().map(|_| Outcome::pass()).map_err(|e| e.clone()))
        .collect();
    let normals = match facts.normals() {
        Ok(ns) => ns,
        Err(e) => return fs.iter().map(|_| Err(e.clone())).collect(),
    };
    for n in normals.iter().filter(|n| !n.is_trivial()) {
        let mut quotient = None;
        for (i, &f) in fs.iter().enumerate() {
            if !matches!(&out[i], Ok(o) if o.pass) {
                continue;
            }
            let Ok(phi) = &phis[i] else { continue };
            if !n.is_subgroup_of(phi) {
                continue;
            }
            let q = match quotient.get_or_insert_with(|| g.quotient(n)) {
                Ok(q) => q,
                Err(e) => {
                    out[i] = Err(e.clone());
                    continue;
                }
            };
            let image = q.image(phi.bits());
            out[i] = Facts::new(&q.group).phi_f(f).map(|q_phi| {
                if image == *q_phi.bits() {
                    Outcome::pass()
                } else {
                    Outcome::check(false, || subgroup_witness(g, n.bits())).with_note(format!(
                        "image has order {}, quotient's phi has order {}",
                        image.count(),
                        q_phi.size()
                    ))
                }
            });
        }
    }
    out
}

pub(super) fn frattini(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    let saturated: Vec<FormationSpec> = fs.iter().copied().filter(|f| f.is_saturated()).collect();
    let mut quotient_results = frattini_quotients(facts, &saturated).into_iter();
    for &f in fs {
        if !f.is_saturated() {
            r.skip(Some(f), "frattini", "class is not a saturated formation");
            continue;
        }
        r.case(Some(f), "frattini-join-stays-in-class", true, || {
            let phi = facts.phi_f(f)?;
            for h in &facts.lattice()?.subgroups {
                if phi.is_subgroup_of(h) || !facts.subgroup_member(h.bits(), f)? {
                    continue;
                }
                let joined = h.join(g, &phi);
                if !facts.subgroup_member(joined.bits(), f)? {
                    return Ok(Outcome::check(false, || subgroup_witness(g, h.bits())));
                }
            }
            Ok(Outcome::pass())
        });
        let result = quotient_results.next().expect("one result per saturated class");
        r.case(Some(f), "frattini-quotient", true, || result);
    }
}

/// Both quotient checks over every proper nontrivial normal subgroup:
/// isolated vertices map to isolated vertices, and edges lift. Each quotient
/// is built once and shared by all classes.
fn quotient_checks(facts: &Facts, fs: &[FormationSpec]) -> Vec<Result<(Outcome, Outcome)>> {
    let g = facts.group();
    let mut out: Vec<Result<(Outcome, Outcome)>> = fs
        .iter()
        .map(|&f| facts.nonf_graph(f).map(|_| (Outcome::pass(), Outcome::pass())))
        .collect();
    let normals = match facts.normals() {
        Ok(ns) => ns,
        Err(e) => return fs.iter().map(|_| Err(e.clone())).collect(),
    };
    for n in normals {
        if n.is_trivial() || n.size() == g.order() {
            continue;
        }
        if !out.iter().any(|o| matches!(o, Ok((m, l)) if m.pass || l.pass)) {
            break;
        }
        let q = match g.quotient(n) {
            Ok(q) => q,
            Err(e) => return fs.iter().map(|_| Err(e.clone())).collect(),
        };
        let q_facts = Facts::new(&q.group);
        let pi = &q.projection;
        for (i, &f) in fs.iter().enumerate() {
            let Ok((monotone, lifting)) = &mut out[i] else { continue };
            if !monotone.pass && !lifting.pass {
                continue;
            }
            let q_graph = match q_facts.nonf_graph(f) {
                Ok(gr) => gr,
                Err(e) => {
                    out[i] = Err(e);
                    continue;
                }
            };
            let graph = facts.nonf_graph(f).expect("computed above");
            if monotone.pass {
                let iso = graph.isolated_vertices();
                if let Some(x) = iso.iter().find(|&x| q_graph.degree(pi[x]) > 0) {
                    *monotone = Outcome::check(false, || {
                        elements_witness(g, &BitSet::from_indices(g.order(), [x]))
                    })
                    .with_note(format!("normal subgroup of order {}", n.size()));
                }
            }
            if lifting.pass {
                let broken = g.elements().find_map(|x| {
                    (x + 1..g.order())
                        .find(|&y| q_graph.has_edge(pi[x], pi[y]) && !graph.has_edge(x, y))
                        .map(|y| (x, y))
                });
                if let Some((x, y)) = broken {
                    *lifting = Outcome::check(false, || edge_witness(g, x, y))
                        .with_note(format!("normal subgroup of order {}", n.size()));
                }
            }
        }
    }
    out
}

pub(super) fn quotient_graphs(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    let mut quotient_results = quotient_checks(facts, fs).into_iter();
    for &f in fs {
        r.case(Some(f), "generating-graph-is-subgraph", true, || {
            if facts.is_member(f)? {
                return Ok(Outcome::vacuous("group is in the class"));
            }
            let graph = facts.nonf_graph(f)?;
            let missing = facts
                .generating_graph()
                .edges()
                .find(|&(x, y)| !graph.has_edge(x, y));
            Ok(Outcome::check(missing.is_none(), || {
                let (x, y) = missing.unwrap();
                edge_witness(g, x, y)
            }))
        });
        r.case(Some(f), "isolated-conjugation-invariant", true, || {
            let iso = facts.isolated(f)?;
            let moved = iso.iter().find(|&x| {
                g.generators().iter().any(|&s| !iso.contains(g.conj(x, s)))
            });
            Ok(Outcome::check(moved.is_none(), || {
                elements_witness(g, &BitSet::from_indices(g.order(), moved))
            }))
        });
        let (monotone, lifting) = match quotient_results.next().expect("one result per class") {
            Ok(pair) => (Ok(pair.0), Ok(pair.1)),
            Err(e) => (Err(e.clone()), Err(e)),
        };
        r.case(Some(f), "isolated-quotient-monotone", true, || monotone);
        r.case(Some(f), "quotient-edges-lift", true, || lifting);
        r.case(Some(f), "generating-elements-one-component", true, || {
            let v = generating_pair_elements_from(facts.pairs());
            if facts.is_member(f)? || !is_soluble(g) || v.is_empty() {
                return Ok(Outcome::vacuous("needs a soluble 2-generated group outside the class"));
            }
            let comp = facts.nonf_graph(f)?.components().component;
            let first = comp[v.first().unwrap()];
            let stray = BitSet::from_indices(g.order(), v.iter().filter(|&x| comp[x] != first));
            Ok(Outcome::check(stray.is_empty(), || elements_witness(g, &stray)))
        });
    }
}

pub(super) fn monolithic_quotients(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    for &f in fs {
        if !f.is_saturated() || !f.is_soluble_class() {
            continue;
        }
        // G ∉ F while every proper quotient is in F
        let applies = || -> Result<bool> {
            if facts.is_member(f)? {
                return Ok(false);
            }
            for n in facts.normals()? {
                if !n.is_trivial() && !facts.quotient_member(n, f)? {
                    return Ok(false);
                }
            }
            Ok(true)
        };
        match applies() {
            Ok(false) => continue,
            Ok(true) => {}
            Err(e) => {
                r.case(Some(f), "radical-free-or-monolithic", true, || Err(e));
                continue;
            }
        }
        r.case(Some(f), "radical-free-or-monolithic", true, || {
            if crate::structure::soluble_radical(g).is_trivial() {
                return Ok(Outcome::pass().with_note("soluble radical is trivial"));
            }
            let Some((soc, _)) = facts.primitive()? else {
                return Ok(Outcome::check(false, || elements_witness(g, &BitSet::new(g.order())))
                    .with_note("soluble radical is nontrivial but the group is not primitive monolithic"));
            };
            let residual = facts.residual(f)?;
            Ok(Outcome::check(soc == residual, || subgroup_witness(g, residual.bits()))
                .with_note("primitive monolithic"))
        });
    }
}

fn core_free(facts: &Facts, h: &SubgroupSet) -> Result<bool> {
    Ok(facts
        .normals()?
        .iter()
        .all(|n| n.is_trivial() || !n.is_subgroup_of(h)))
}

pub(super) fn generating_cosets(r: &mut Recorder, facts: &Facts) {
    let g = facts.group();
    let pms = match facts.primitive() {
        Ok(p) => p,
        Err(e) => {
            r.case(None, "coset-generation", true, || Err(e));
            return;
        }
    };
    let Some((soc, _)) = pms else { return };
    r.case(None, "coset-generation", true, || {
        let v_g = generating_pair_elements_from(facts.pairs());
        let mut checked = 0;
        for h in facts.lattice()?.maximal_subgroups() {
            if !core_free(facts, h)? {
                continue;
            }
            checked += 1;
            let ind = g.induced(h.bits());
            let v_h = ind.lift(&generating_pair_elements(&ind.group), g.order());
            for x in h.elements().into_iter().filter(|&x| x != 0) {
                for m in soc.elements() {
                    if v_g.contains(g.mul(x, m)) != v_h.contains(x) {
                        return Ok(Outcome::check(false, || {
                            elements_witness(g, &BitSet::from_indices(g.order(), [x, m]))
                        }));
                    }
                }
            }
        }
        Ok(Outcome::pass().with_note(format!("{checked} core-free maximal subgroups checked")))
    });
}

fn has_local_data(f: FormationSpec) -> bool {
    matches!(
        f,
        FormationSpec::Supersoluble | FormationSpec::NilpotentDerived | FormationSpec::FittingLength(_)
    )
}

/// Compares, for a primitive monolithic soluble group `G = N ⋊ S`, the
/// isolated set with data computed inside `S`. Report only.
pub(super) fn semi_structure(r: &mut Recorder, facts: &Facts, fs: &[FormationSpec]) {
    let g = facts.group();
    let pms = match facts.primitive() {
        Ok(p) => p,
        Err(e) => {
            r.case(None, "semi-structure", false, || Err(e));
            return;
        }
    };
    let Some((soc, s)) = pms else { return };
    let p = prime_divisors(soc.size())[0] as u64;
    let n_elems = soc.elements();
    let s_elems = s.elements();
    let n_with = |extra: &[usize]| g.subgroup_closure(n_elems.iter().copied().chain(extra.iter().copied()));
    for &f in fs {
        if !has_local_data(f) {
            r.skip(Some(f), "semi-structure", "no local data for this class");
            continue;
        }
        r.case(Some(f), "soc-times-cyclic-in-class", false, || {
            for &x in &s_elems {
                if !facts.subgroup_member(n_with(&[x]).bits(), f)? {
                    return Ok(Outcome::check(false, || {
                        elements_witness(g, &BitSet::from_indices(g.order(), [x]))
                    }));
                }
            }
            Ok(Outcome::pass())
        });
        r.case(Some(f), "isolated-coset-criterion", false, || {
            let iso = facts.isolated(f)?;
            let mut mismatched = BitSet::new(g.order());
            for &x in &s_elems {
                let mut all = true;
                for &y in &s_elems {
                    if !facts.subgroup_member(n_with(&[x, y]).bits(), f)? {
                        all = false;
                        break;
                    }
                }
                for &m in &n_elems {
                    let e = g.mul(m, x);
                    if iso.contains(e) != all {
                        mismatched.insert(e);
                    }
                }
            }
            Ok(Outcome::check(mismatched.is_empty(), || elements_witness(g, &mismatched)))
        });
        r.case(Some(f), "isolated-equals-soc-times-local", false, || {
            let iso = facts.isolated(f)?;
            let mut local = Vec::new();
            for &x in &s_elems {
                let mut all = true;
                for &y in &s_elems {
                    let k = g.subgroup_closure([x, y]);
                    if !fbar_member(&g.induced(k.bits()).group, p, f)? {
                        all = false;
                        break;
                    }
                }
                if all {
                    local.push(x);
                }
            }
            let product = BitSet::from_indices(
                g.order(),
                n_elems.iter().flat_map(|&m| local.iter().map(move |&x| g.mul(m, x))),
            );
            let diff = product.difference(&iso).union(&iso.difference(&product));
            Ok(Outcome::check(diff.is_empty(), || elements_witness(g, &diff))
                .with_note(format!("p = {p}, local isolated set has {} elements", local.len())))
        });
    }
}
