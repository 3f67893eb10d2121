use super::{ElementGraph, GraphKind};
use crate::bitset::BitSet;
use crate::error::Result;
use crate::facts::Facts;
use crate::formations::FormationSpec;
use crate::group::FiniteGroup;
use crate::structure::map_rows;

impl Facts<'_> {
    /// `Γ̃_F(G)`: `x` and `y` adjacent iff `⟨x, y⟩ ∉ F`. Memoized per formation.
    pub fn nonf_graph(&self, f: FormationSpec) -> Result<ElementGraph> {
        if let Some(gr) = self.graphs.lock().unwrap().get(&f) {
            return Ok(gr.clone());
        }
        let gr = self.compute_nonf_graph(f)?;
        self.graphs.lock().unwrap().insert(f, gr.clone());
        Ok(gr)
    }

    fn compute_nonf_graph(&self, f: FormationSpec) -> Result<ElementGraph> {
        let g = self.group();
        let n = g.order();
        let mut graph = ElementGraph::empty(GraphKind::FullNonF, n);
        // in a hereditary class every pair inside a member generates a member
        if f.is_hereditary() && self.is_member(f)? {
            return Ok(graph);
        }
        let pairs = self.pairs();
        let subs = pairs.subgroups();
        let outside: Vec<bool> = map_rows(subs.len(), |i| self.subgroup_member(subs[i].bits(), f))
            .into_iter()
            .map(|r| r.map(|m| !m))
            .collect::<Result<_>>()?;
        for x in 0..n {
            for y in x + 1..n {
                if outside[pairs.id(x, y)] {
                    graph.add_edge(x, y);
                }
            }
        }
        Ok(graph)
    }

    /// `I_F(G)`.
    pub fn isolated(&self, f: FormationSpec) -> Result<BitSet> {
        Ok(self.nonf_graph(f)?.isolated_vertices())
    }

    /// `Δ(G)`: `x` and `y` adjacent iff `⟨x, y⟩ = G`.
    pub fn generating_graph(&self) -> ElementGraph {
        let g = self.group();
        let n = g.order();
        let pairs = self.pairs();
        let mut graph = ElementGraph::empty(GraphKind::GeneratingFull, n);
        if n == 1 {
            return graph;
        }
        for x in 0..n {
            for y in x + 1..n {
                if pairs.get(x, y).size() == n {
                    graph.add_edge(x, y);
                }
            }
        }
        graph
    }
}

pub fn build_nonf_graph(g: &FiniteGroup, f: FormationSpec) -> Result<ElementGraph> {
    Facts::new(g).nonf_graph(f)
}

pub fn build_generating_graph(g: &FiniteGroup) -> ElementGraph {
    Facts::new(g).generating_graph()
}

/// Vertices without neighbours; `I_F(G)` when applied to `Γ̃_F(G)`.
pub fn isolated_set(graph: &ElementGraph) -> BitSet {
    graph.isolated_vertices()
}

pub fn prune(graph: &ElementGraph) -> ElementGraph {
    graph.prune()
}
