//! The planarity test against an exhaustive search over rotation systems: a
//! graph is planar iff some cyclic ordering of the edges at every vertex
//! traces out `E - V + 2c` faces, `c` the number of nontrivial components.

use formagraph::graph::ElementGraph;
use proptest::prelude::*;

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn components(adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut count = 0;
    for s in 0..adj.len() {
        if seen[s] || adj[s].is_empty() {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

fn count_faces(rot: &[Vec<usize>]) -> usize {
    let mut used = std::collections::HashSet::new();
    let mut faces = 0;
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if used.contains(&(u, v)) {
                continue;
            }
            faces += 1;
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                let pos = rot[b].iter().position(|&x| x == a).unwrap();
                let next = rot[b][(pos + 1) % rot[b].len()];
                (a, b) = (b, next);
            }
        }
    }
    faces
}

fn search(rot: &mut Vec<Vec<usize>>, v: usize, target: usize) -> bool {
    if v == rot.len() {
        return count_faces(rot) == target;
    }
    if rot[v].len() <= 2 {
        return search(rot, v + 1, target);
    }
    // fix the first neighbour, permute the rest
    let mut rest = rot[v][1..].to_vec();
    permute(&mut rest, 0, &mut |perm| {
        rot[v].truncate(1);
        rot[v].extend_from_slice(perm);
        search(rot, v + 1, target)
    })
}

fn permute(xs: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == xs.len() {
        return f(xs);
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        if permute(xs, k + 1, f) {
            return true;
        }
        xs.swap(k, i);
    }
    false
}

fn rotation_count(adj: &[Vec<usize>]) -> u64 {
    adj.iter()
        .map(|a| (1..a.len().max(1) as u64).product::<u64>())
        .product()
}

fn oracle_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = adjacency(n, edges);
    let v = adj.iter().filter(|a| !a.is_empty()).count();
    let target = edges.len() + 2 * components(&adj) - v;
    let mut rot = adj;
    search(&mut rot, 0, target)
}

fn normalize(n: usize, raw: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = raw
        .into_iter()
        .map(|(a, b)| (a % n, b % n))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

fn complete(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn bipartite(p: usize, q: usize) -> Vec<(usize, usize)> {
    (0..p).flat_map(|a| (0..q).map(move |b| (a, p + b))).collect()
}

#[test]
fn oracle_agrees_on_named_graphs() {
    let petersen: Vec<(usize, usize)> = (0..5)
        .flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)])
        .collect();
    let petersen = normalize(10, petersen);
    let cube: Vec<(usize, usize)> = (0..8usize)
        .flat_map(|a| [1, 2, 4].map(|bit| (a, a ^ bit)))
        .filter(|(a, b)| a < b)
        .collect();
    let cases = [
        ("K4", 4, complete(4), true),
        ("K5", 5, complete(5), false),
        ("K3,3", 6, bipartite(3, 3), false),
        ("K2,5", 7, bipartite(2, 5), true),
        ("petersen", 10, petersen, false),
        ("cube", 8, cube, true),
    ];
    for (name, n, edges, planar) in cases {
        assert_eq!(oracle_planar(n, &edges), planar, "oracle on {name}");
        let g = ElementGraph::from_edges(n, edges.iter().copied());
        assert_eq!(g.is_planar(), planar, "{name}");
    }
}

#[test]
fn k6_4_is_nonplanar() {
    let g = ElementGraph::from_edges(10, bipartite(6, 4));
    assert!(!g.is_planar());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, max_global_rejects: 4000, ..ProptestConfig::default() })]

    #[test]
    fn matches_rotation_search(
        n in 5usize..9,
        raw in prop::collection::vec((0usize..9, 0usize..9), 6..20),
    ) {
        let edges = normalize(n, raw);
        let adj = adjacency(n, &edges);
        prop_assume!(rotation_count(&adj) <= 20_000);
        let g = ElementGraph::from_edges(n, edges.iter().copied());
        prop_assert_eq!(g.is_planar(), oracle_planar(n, &edges), "edges {:?}", edges);
    }

    #[test]
    fn subdivided_kuratowski_graphs_stay_nonplanar(
        split in prop::collection::vec(0usize..9, 1..4),
        five in any::<bool>(),
    ) {
        let (mut n, mut edges) = if five { (5, complete(5)) } else { (6, bipartite(3, 3)) };
        for s in split {
            let (a, b) = edges.remove(s % edges.len());
            edges.push((a, n));
            edges.push((b, n));
            n += 1;
        }
        let g = ElementGraph::from_edges(n, edges);
        prop_assert!(!g.is_planar());
    }
}
