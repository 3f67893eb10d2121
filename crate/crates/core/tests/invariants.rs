//! Structural invariants checked over small catalog groups, mostly as
//! property tests with random group choices and random seeds.

use formagraph::catalog::builtin;
use formagraph::formations::FormationSpec;
use formagraph::graph::ElementGraph;
use formagraph::report::analyze;
use formagraph::structure::{
    chief_series, fitting_subgroup, frattini_subgroup, hypercenter, is_nilpotent, is_p_power,
    is_soluble, minimal_normal_subgroups, p_core, prime_divisors, soluble_radical, socle,
};
use formagraph::{BitSet, Facts, FiniteGroup, GroupSpec, SubgroupSet};
use proptest::prelude::*;

const SMALL: &[&str] = &[
    "C6", "V4", "S3", "D4", "Q8", "D5", "A4", "D6", "S3xC2", "C3xS3", "S4", "C2xQ8", "C2^3",
    "C3xA4", "D4xC3",
];

fn formations() -> Vec<FormationSpec> {
    [
        "abelian", "nilpotent", "soluble", "supersoluble", "nilpotent-derived", "fitting:1",
        "fitting:2", "pcore-fitting:2:1", "pcore-fitting:3:1", "pcore-fitting:2:0", "tgroups",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

fn small_group() -> impl Strategy<Value = &'static str> {
    prop::sample::select(SMALL)
}

fn is_closed(g: &FiniteGroup, s: &SubgroupSet) -> bool {
    g.is_subgroup(s.bits()) && g.order().is_multiple_of(s.size())
}

fn invariant_under_conjugation(g: &FiniteGroup, s: &SubgroupSet) -> bool {
    s.elements()
        .into_iter()
        .all(|x| g.elements().all(|y| s.contains(g.conj(x, y))))
}

fn is_elementary_abelian(g: &FiniteGroup) -> bool {
    if g.order() == 1 {
        return true;
    }
    let p = prime_divisors(g.order());
    p.len() == 1 && g.is_abelian() && g.elements().skip(1).all(|x| g.order_of(x) == p[0])
}

#[test]
fn associativity_holds_exhaustively() {
    for name in SMALL.iter().chain(&["T100", "G200"]) {
        let g = builtin(name).unwrap();
        assert!(g.is_associative(), "{name}");
        assert_eq!(g.mul(0, 5 % g.order()), 5 % g.order());
    }
}

#[test]
fn rebuilding_is_deterministic() {
    for name in ["S4", "T100", "G200", "D6xS3"] {
        let a = builtin(name).unwrap();
        let b = builtin(name).unwrap();
        assert_eq!(a.content_hash(), b.content_hash(), "{name}");
        assert!(a.elements().all(|x| a.row(x).eq(b.row(x))));
    }
}

#[test]
fn radicals_are_characteristic_and_have_their_shape() {
    for name in SMALL.iter().chain(&["T100", "A5", "C2xA5"]) {
        let g = builtin(name).unwrap();
        let facts = Facts::new(&g);
        let mut subs = vec![
            ("soluble radical", soluble_radical(&g)),
            ("fitting", fitting_subgroup(&g)),
            ("hypercenter", hypercenter(&g)),
            ("frattini", frattini_subgroup(&g).unwrap()),
            ("socle", socle(&g).unwrap()),
        ];
        for p in prime_divisors(g.order()) {
            let op = p_core(&g, p as u64).unwrap();
            assert!(is_p_power(op.size(), p), "{name}: O_{p}");
            subs.push(("p-core", op));
        }
        for (what, s) in &subs {
            assert!(is_closed(&g, s), "{name}: {what}");
            assert!(invariant_under_conjugation(&g, s), "{name}: {what}");
        }
        assert!(is_nilpotent(&g.induced(fitting_subgroup(&g).bits()).group), "{name}");
        assert!(is_soluble(&g.induced(soluble_radical(&g).bits()).group), "{name}");
        for n in minimal_normal_subgroups(&g).unwrap() {
            assert!(facts.normals().unwrap().contains(&n));
        }
    }
}

#[test]
fn chief_factors_of_soluble_groups_are_elementary_abelian() {
    for name in SMALL.iter().chain(&["T100", "G200"]) {
        let g = builtin(name).unwrap();
        let series = chief_series(&g).unwrap();
        for w in series.terms.windows(2) {
            let (small, big) = if w[0].size() < w[1].size() { (&w[0], &w[1]) } else { (&w[1], &w[0]) };
            assert!(small.is_subgroup_of(big), "{name}");
            let big_g = g.induced(big.bits());
            let local = BitSet::from_indices(
                big_g.group.order(),
                big_g.group.elements().filter(|&x| small.contains(big_g.embedding[x])),
            );
            let local = SubgroupSet::try_from_bits(&big_g.group, local).unwrap();
            let factor = big_g.group.quotient(&local).unwrap();
            assert!(is_elementary_abelian(&factor.group), "{name}: factor of order {}", factor.group.order());
        }
    }
}

#[test]
fn hereditary_classes_and_quotients() {
    for name in SMALL {
        let g = builtin(name).unwrap();
        let facts = Facts::new(&g);
        for f in formations() {
            if !facts.is_member(f).unwrap() {
                continue;
            }
            if f.is_hereditary() {
                for h in &facts.lattice().unwrap().subgroups {
                    assert!(facts.subgroup_member(h.bits(), f).unwrap(), "{name} {f}: subgroup of order {}", h.size());
                }
            }
            if f != FormationSpec::TGroups {
                for n in facts.normals().unwrap() {
                    assert!(facts.quotient_member(n, f).unwrap(), "{name} {f}: quotient by order {}", n.size());
                }
            }
        }
    }
}

#[test]
fn saturated_classes_see_through_the_frattini_subgroup() {
    for name in SMALL.iter().chain(&["T100", "G200"]) {
        let g = builtin(name).unwrap();
        let facts = Facts::new(&g);
        let phi = facts.frattini().unwrap();
        for f in formations().into_iter().filter(|f| f.is_saturated()) {
            if facts.quotient_member(&phi, f).unwrap() {
                assert!(facts.is_member(f).unwrap(), "{name} {f}");
            }
        }
    }
}

#[test]
fn residuals_commute_with_quotients() {
    for name in SMALL.iter().chain(&["T100"]) {
        let g = builtin(name).unwrap();
        let facts = Facts::new(&g);
        for f in formations().into_iter().filter(|&f| f != FormationSpec::TGroups) {
            let res = facts.residual(f).unwrap();
            for n in facts.normals().unwrap() {
                let q = g.quotient(n).unwrap();
                let expected = q.image(res.join(&g, n).bits());
                let actual = Facts::new(&q.group).residual(f).unwrap();
                assert_eq!(actual.bits(), &expected, "{name} {f} mod order {}", n.size());
            }
        }
    }
}

#[test]
fn criticality_levels_nest() {
    for name in SMALL.iter().chain(&["A5"]) {
        let g = builtin(name).unwrap();
        let facts = Facts::new(&g);
        for f in formations() {
            let v = facts.criticality(f).unwrap();
            assert!(!v.is_strongly_critical || v.is_critical, "{name} {f}");
            assert!(!v.is_critical || !v.is_member, "{name} {f}");
            assert_eq!(v.is_member, facts.is_member(f).unwrap());
        }
    }
}

fn check_graph_shape(g: &ElementGraph, pruned: bool) {
    let n = g.universe();
    for v in 0..n {
        assert!(!g.has_edge(v, v));
        for w in g.neighbors(v).iter() {
            assert!(g.has_edge(w, v));
            assert!(g.vertices().contains(w) && g.vertices().contains(v));
        }
        if pruned && g.vertices().contains(v) {
            assert!(g.degree(v) > 0);
        }
    }
    let comp = g.components();
    for (a, b) in g.edges() {
        assert_eq!(comp.component[a], comp.component[b]);
    }
    let sizes: usize = comp.sizes.iter().sum();
    assert_eq!(sizes, g.vertex_count());
}

#[test]
fn graphs_are_well_formed() {
    for name in ["S3", "A4", "D6", "S4", "C3xS3", "T100"] {
        let g = builtin(name).unwrap();
        let facts = Facts::new(&g);
        for f in formations() {
            let full = facts.nonf_graph(f).unwrap();
            check_graph_shape(&full, false);
            check_graph_shape(&full.prune(), true);
            if f.contains_abelian() {
                assert!(full.isolated_vertices().contains(0), "{name} {f}: identity");
            }
            check_graph_shape(&facts.generating_graph(), false);
        }
    }
}

#[test]
fn report_counts_are_consistent() {
    for name in ["S3", "S4", "D6", "T100", "A5"] {
        let g = builtin(name).unwrap();
        for f in formations() {
            let r = analyze(name, &g, f).unwrap().body;
            assert_eq!(r.pruned_graph.vertices, r.order - r.isolated.size, "{name} {f}");
            assert_eq!(r.isolated.labels.len(), r.isolated.size);
            for size in [r.phi_f_size, r.residual_size].into_iter().flatten() {
                assert_eq!(r.order % size, 0, "{name} {f}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn closure_is_a_monotone_subgroup(
        name in small_group(),
        seed in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        extra in any::<prop::sample::Index>(),
    ) {
        let g = builtin(name).unwrap();
        let a: Vec<usize> = seed.iter().map(|i| i.index(g.order())).collect();
        let small = g.subgroup_closure(a.iter().copied());
        let big = g.subgroup_closure(a.iter().copied().chain([extra.index(g.order())]));
        prop_assert!(is_closed(&g, &small));
        prop_assert!(is_closed(&g, &big));
        prop_assert!(small.is_subgroup_of(&big));
        prop_assert_eq!(g.subgroup_closure(small.elements()), small);
    }

    #[test]
    fn isolated_sets_are_unions_of_classes(name in small_group(), fi in 0usize..11) {
        let g = builtin(name).unwrap();
        let f = formations()[fi];
        let iso = Facts::new(&g).isolated(f).unwrap();
        for x in iso.iter() {
            for y in g.elements() {
                prop_assert!(iso.contains(g.conj(x, y)), "{} {}: {} moves", name, f, g.label(x));
            }
        }
    }

    #[test]
    fn edges_are_exactly_pairs_outside_the_class(
        name in small_group(),
        fi in 0usize..11,
        x in any::<prop::sample::Index>(),
        y in any::<prop::sample::Index>(),
    ) {
        let g = builtin(name).unwrap();
        let f = formations()[fi];
        let (x, y) = (x.index(g.order()), y.index(g.order()));
        let facts = Facts::new(&g);
        let h = g.subgroup_closure([x, y]);
        let direct = formagraph::formations::is_member(&g.induced(h.bits()).group, f).unwrap();
        prop_assert_eq!(facts.nonf_graph(f).unwrap().has_edge(x, y), x != y && !direct);
    }

    #[test]
    fn table_specs_rebuild_identically(name in small_group()) {
        let g = builtin(name).unwrap();
        let table: Vec<Vec<usize>> = g.elements().map(|x| g.row(x).collect()).collect();
        let h = GroupSpec::Table { table }.build().unwrap();
        prop_assert_eq!(h.content_hash(), g.content_hash());
    }
}
