//! Graphs on group elements: the non-F graph, its isolated vertices, the
//! generating graph, connectivity and planarity.

mod build;
mod export;
mod planarity;

pub use build::{build_generating_graph, build_nonf_graph, isolated_set, prune};
pub use planarity::lr_is_planar;

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::BitSet;
use crate::group::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    FullNonF,
    PrunedNonF,
    GeneratingFull,
    GeneratingPruned,
    /// Built directly from an edge list.
    Custom,
}

impl GraphKind {
    fn pruned(self) -> GraphKind {
        match self {
            GraphKind::FullNonF | GraphKind::PrunedNonF => GraphKind::PrunedNonF,
            GraphKind::GeneratingFull | GraphKind::GeneratingPruned => GraphKind::GeneratingPruned,
            GraphKind::Custom => GraphKind::Custom,
        }
    }
}

/// Undirected simple graph on a subset of the elements `0..n` of a group.
///
/// There is one adjacency row per element; rows of excluded vertices are
/// empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementGraph {
    kind: GraphKind,
    vertices: BitSet,
    rows: Vec<BitSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    /// Component id per element, `None` for elements not in the graph.
    pub component: Vec<Option<usize>>,
    pub count: usize,
    pub sizes: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanarityCertificate {
    /// At most four vertices.
    Small,
    /// More than `3|V| − 6` edges.
    EulerBound,
    /// Decided by the left-right test.
    LeftRight,
}

impl PlanarityCertificate {
    pub fn as_str(self) -> &'static str {
        match self {
            PlanarityCertificate::Small => "small",
            PlanarityCertificate::EulerBound => "euler-bound",
            PlanarityCertificate::LeftRight => "left-right",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Planarity {
    pub planar: bool,
    pub certificate: PlanarityCertificate,
}

impl ElementGraph {
    /// Edgeless graph on all `n` elements.
    pub fn empty(kind: GraphKind, n: usize) -> Self {
        ElementGraph {
            kind,
            vertices: BitSet::full(n),
            rows: vec![BitSet::new(n); n],
        }
    }

    /// Graph on all `n` elements with the given edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Elem, Elem)>) -> Self {
        let mut g = ElementGraph::empty(GraphKind::Custom, n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub(crate) fn add_edge(&mut self, a: Elem, b: Elem) {
        assert!(a != b, "self-loop");
        debug_assert!(self.vertices.contains(a) && self.vertices.contains(b));
        self.rows[a].insert(b);
        self.rows[b].insert(a);
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Size of the element universe.
    pub fn universe(&self) -> usize {
        self.rows.len()
    }

    pub fn vertices(&self) -> &BitSet {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn has_edge(&self, a: Elem, b: Elem) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, v: Elem) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: Elem) -> usize {
        self.rows[v].count()
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.vertices
            .iter()
            .flat_map(move |a| self.rows[a].iter().filter(move |&b| b > a).map(move |b| (a, b)))
    }

    /// Included vertices with no neighbours.
    pub fn isolated_vertices(&self) -> BitSet {
        BitSet::from_indices(
            self.universe(),
            self.vertices.iter().filter(|&v| self.rows[v].is_empty()),
        )
    }

    /// The same graph without its isolated vertices.
    pub fn prune(&self) -> ElementGraph {
        let vertices = self.vertices.difference(&self.isolated_vertices());
        ElementGraph {
            kind: self.kind.pruned(),
            vertices,
            rows: self.rows.clone(),
        }
    }

    /// Breadth-first decomposition; components are numbered by least vertex.
    pub fn components(&self) -> ComponentDecomposition {
        let n = self.universe();
        let mut component = vec![None; n];
        let mut sizes = Vec::new();
        for start in self.vertices.iter() {
            if component[start].is_some() {
                continue;
            }
            let id = sizes.len();
            let mut size = 0;
            let mut queue = VecDeque::from([start]);
            component[start] = Some(id);
            while let Some(v) = queue.pop_front() {
                size += 1;
                for w in self.rows[v].iter() {
                    if component[w].is_none() {
                        component[w] = Some(id);
                        queue.push_back(w);
                    }
                }
            }
            sizes.push(size);
        }
        ComponentDecomposition {
            component,
            count: sizes.len(),
            sizes,
        }
    }

    /// At most one component. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().count <= 1
    }

    pub fn planarity(&self) -> Planarity {
        let verts: Vec<Elem> = self.vertices.iter().collect();
        let (v, e) = (verts.len(), self.edge_count());
        if v <= 4 {
            return Planarity {
                planar: true,
                certificate: PlanarityCertificate::Small,
            };
        }
        if e > 3 * v - 6 {
            return Planarity {
                planar: false,
                certificate: PlanarityCertificate::EulerBound,
            };
        }
        let mut local = vec![usize::MAX; self.universe()];
        for (i, &x) in verts.iter().enumerate() {
            local[x] = i;
        }
        let edges: Vec<(usize, usize)> = self.edges().map(|(a, b)| (local[a], local[b])).collect();
        Planarity {
            planar: lr_is_planar(v, &edges),
            certificate: PlanarityCertificate::LeftRight,
        }
    }

    pub fn is_planar(&self) -> bool {
        self.planarity().planar
    }

    /// Keeps only edges between vertices of `keep`, and those vertices.
    pub fn induced(&self, keep: &BitSet) -> ElementGraph {
        let vertices = self.vertices.intersection(keep);
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| {
                if vertices.contains(v) {
                    r.intersection(&vertices)
                } else {
                    BitSet::new(self.universe())
                }
            })
            .collect();
        ElementGraph {
            kind: GraphKind::Custom,
            vertices,
            rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_disjoint_edges() {
        let g = ElementGraph::from_edges(4, [(0, 1), (2, 3)]);
        let c = g.components();
        assert_eq!(c.count, 2);
        assert_eq!(c.sizes, vec![2, 2]);
        assert!(!g.is_connected());
    }

    #[test]
    fn empty_graph_is_connected() {
        let g = ElementGraph::empty(GraphKind::FullNonF, 5);
        let p = g.prune();
        assert_eq!(p.vertex_count(), 0);
        assert!(p.is_connected());
        assert_eq!(p.kind(), GraphKind::PrunedNonF);
        assert!(ElementGraph::empty(GraphKind::Custom, 1).is_connected());
    }

    #[test]
    fn planarity_stages() {
        let k5 = ElementGraph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))));
        let p = k5.planarity();
        assert!(!p.planar);
        assert_eq!(p.certificate, PlanarityCertificate::EulerBound);
        let k33 = ElementGraph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))));
        assert_eq!(
            k33.planarity(),
            Planarity {
                planar: false,
                certificate: PlanarityCertificate::LeftRight
            }
        );
        let path = ElementGraph::from_edges(3, [(0, 1), (1, 2)]);
        assert_eq!(path.planarity().certificate, PlanarityCertificate::Small);
    }

    #[test]
    fn prune_keeps_rows_consistent() {
        let g = ElementGraph::from_edges(5, [(1, 2), (2, 3)]);
        let p = g.prune();
        assert_eq!(p.vertices().to_vec(), vec![1, 2, 3]);
        assert!(p.vertices().iter().all(|v| !p.neighbors(v).is_empty()));
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }
}
