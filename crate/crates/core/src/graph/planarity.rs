//! Left-right planarity test (de Fraysseix–Rosenstiehl, in Brandes'
//! formulation). Only the testing phase is run; no embedding is built.
//!
//! Edges are numbered once; after the orientation pass each edge id has a
//! fixed direction `(src, dst)`, so every per-edge table is indexed by id.

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State {
    adj: Vec<Vec<(usize, usize)>>,
    src: Vec<usize>,
    dst: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    ordered_out: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

/// Decides planarity of the simple undirected graph on `0..n` with the given
/// edges. Self-loops and repeated edges are ignored.
pub fn lr_is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut m = 0;
    for &(u, v) in edges {
        if u == v || !seen.insert((u.min(v), u.max(v))) {
            continue;
        }
        adj[u].push((v, m));
        adj[v].push((u, m));
        m += 1;
    }
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    let mut s = State {
        adj,
        src: vec![NONE; m],
        dst: vec![NONE; m],
        oriented: vec![false; m],
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        ordered_out: vec![Vec::new(); n],
        reference: vec![None; m],
        lowpt_edge: vec![NONE; m],
        stack_bottom: vec![0; m],
        stack: Vec::new(),
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if s.height[v] == NONE {
            s.height[v] = 0;
            roots.push(v);
            s.orient(v);
        }
    }
    for v in 0..n {
        let mut out: Vec<usize> = s.adj[v]
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| s.src[e] == v)
            .collect();
        out.sort_by_key(|&e| s.nesting_depth[e]);
        s.ordered_out[v] = out;
    }
    roots.into_iter().all(|r| s.test(r))
}

impl State {
    fn orient(&mut self, root: usize) {
        let n = self.adj.len();
        let mut stack = vec![root];
        let mut ind = vec![0usize; n];
        let mut resumed = vec![false; self.src.len()];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            while ind[v] < self.adj[v].len() {
                let (w, vw) = self.adj[v][ind[v]];
                if !resumed[vw] {
                    if self.oriented[vw] {
                        ind[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.src[vw] = v;
                    self.dst[vw] = w;
                    self.lowpt[vw] = self.height[v];
                    self.lowpt2[vw] = self.height[v];
                    if self.height[w] == NONE {
                        self.parent_edge[w] = vw;
                        self.height[w] = self.height[v] + 1;
                        stack.push(v);
                        stack.push(w);
                        resumed[vw] = true;
                        break;
                    }
                    self.lowpt[vw] = self.height[w];
                }
                self.nesting_depth[vw] = 2 * self.lowpt[vw];
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting_depth[vw] += 1;
                }
                if e != NONE {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn test(&mut self, root: usize) -> bool {
        let n = self.adj.len();
        let mut stack = vec![root];
        let mut ind = vec![0usize; n];
        let mut resumed = vec![false; self.src.len()];
        while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            let mut descended = false;
            while ind[v] < self.ordered_out[v].len() {
                let ei = self.ordered_out[v][ind[v]];
                let w = self.dst[ei];
                if !resumed[ei] {
                    self.stack_bottom[ei] = self.stack.len();
                    if ei == self.parent_edge[w] {
                        stack.push(v);
                        stack.push(w);
                        resumed[ei] = true;
                        descended = true;
                        break;
                    }
                    self.lowpt_edge[ei] = ei;
                    self.stack.push(ConflictPair {
                        left: Interval::default(),
                        right: Interval {
                            low: Some(ei),
                            high: Some(ei),
                        },
                    });
                }
                if self.lowpt[ei] < self.height[v] {
                    if ind[v] == 0 {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if !descended && e != NONE {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high.expect("non-empty interval has a high edge")] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => unreachable!("empty conflict pair on the stack"),
        }
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qrl = q.right.low.unwrap();
            if self.lowpt[qrl] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.reference[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qrl] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(prl) = p.right.low {
                self.reference[prl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pll) = p.left.low {
                self.reference[pll] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() && p.left.low.is_some() {
                self.reference[p.left.low.unwrap()] = p.right.low;
                p.left.low = None;
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() && p.right.low.is_some() {
                self.reference[p.right.low.unwrap()] = p.left.low;
                p.right.low = None;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<(usize, usize)> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    fn bipartite(a: usize, b: usize) -> Vec<(usize, usize)> {
        (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect()
    }

    #[test]
    fn complete_graphs() {
        for n in 0..=4 {
            assert!(lr_is_planar(n, &complete(n)), "K{n}");
        }
        assert!(!lr_is_planar(5, &complete(5)));
        assert!(!lr_is_planar(6, &complete(6)));
    }

    #[test]
    fn complete_bipartite() {
        assert!(lr_is_planar(5, &bipartite(2, 3)));
        assert!(lr_is_planar(12, &bipartite(2, 10)));
        assert!(!lr_is_planar(6, &bipartite(3, 3)));
        assert!(!lr_is_planar(10, &bipartite(6, 4)));
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut e: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        e.extend((0..5).map(|i| (i, i + 5)));
        e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        // 15 edges on 10 vertices passes the Euler bound, so LR decides
        assert!(!lr_is_planar(10, &e));
    }

    #[test]
    fn grid_and_wheel_are_planar() {
        let k = 6;
        let id = |r: usize, c: usize| r * k + c;
        let mut e = Vec::new();
        for r in 0..k {
            for c in 0..k {
                if r + 1 < k {
                    e.push((id(r, c), id(r + 1, c)));
                }
                if c + 1 < k {
                    e.push((id(r, c), id(r, c + 1)));
                }
            }
        }
        assert!(lr_is_planar(k * k, &e));
        let mut w: Vec<(usize, usize)> = (1..=8).map(|i| (0, i)).collect();
        w.extend((1..=8).map(|i| (i, i % 8 + 1)));
        assert!(lr_is_planar(9, &w));
    }

    #[test]
    fn k5_subdivision_and_disjoint_union() {
        // K5 with every edge subdivided once
        let mut e = Vec::new();
        let mut next = 5;
        for (a, b) in complete(5) {
            e.push((a, next));
            e.push((next, b));
            next += 1;
        }
        assert!(!lr_is_planar(next, &e));
        let mut two = complete(4);
        two.extend(complete(4).into_iter().map(|(a, b)| (a + 4, b + 4)));
        assert!(lr_is_planar(8, &two));
        let mut bad = complete(4);
        bad.extend(bipartite(3, 3).into_iter().map(|(a, b)| (a + 4, b + 4)));
        assert!(!lr_is_planar(10, &bad));
    }
}
