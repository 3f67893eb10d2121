//! One-shot analysis of a group against a class, and graph export.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[cfg(feature = "cache")]
use crate::cache::{Cache, CacheKey, CacheMode};
#[cfg(feature = "cache")]
use crate::error::Error;
use crate::error::Result;
use crate::facts::Facts;
use crate::formations::FormationSpec;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphCounts {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatedSummary {
    pub size: usize,
    pub labels: Vec<String>,
    pub is_subgroup: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanaritySummary {
    pub planar: bool,
    pub certificate: String,
}

/// Everything in a report that depends only on the multiplication table
/// and the class; this is what the cache stores.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisBody {
    pub content_hash: String,
    pub order: usize,
    pub formation: String,
    pub member: bool,
    pub full_graph: GraphCounts,
    pub pruned_graph: GraphCounts,
    pub isolated: IsolatedSummary,
    /// `None` when the subgroup lattice exceeds its caps.
    pub phi_f_size: Option<usize>,
    pub residual_size: Option<usize>,
    pub components: usize,
    pub planarity: PlanaritySummary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    #[serde(flatten)]
    pub body: AnalysisBody,
    pub cached: bool,
    /// Milliseconds per stage.
    pub timings_ms: BTreeMap<String, f64>,
}

impl AnalysisReport {
    /// JSON without the timing and cache fields, for comparing runs.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        if let Some(obj) = v.as_object_mut() {
            obj.remove("timings_ms");
            obj.remove("cached");
        }
        serde_json::to_string_pretty(&v).expect("reports serialize")
    }
}

struct Stopwatch {
    last: Instant,
    laps: BTreeMap<String, f64>,
}

impl Stopwatch {
    fn new() -> Self {
        Stopwatch {
            last: Instant::now(),
            laps: BTreeMap::new(),
        }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.laps
            .insert(stage.to_string(), (now - self.last).as_secs_f64() * 1e3);
        self.last = now;
    }
}

fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e) if e.is_cap() => Ok(None),
        Err(e) => Err(e),
    }
}

fn compute(g: &FiniteGroup, f: FormationSpec, clock: &mut Stopwatch) -> Result<AnalysisBody> {
    let facts = Facts::new(g);
    let member = facts.is_member(f)?;
    clock.lap("membership");
    let full = facts.nonf_graph(f)?;
    clock.lap("graph");
    let iso = full.isolated_vertices();
    let pruned = full.prune();
    let components = pruned.components().count;
    clock.lap("components");
    let planarity = pruned.planarity();
    clock.lap("planarity");
    let phi_f_size = optional(facts.phi_f(f))?.map(|s| s.size());
    let residual_size = optional(facts.residual(f))?.map(|s| s.size());
    clock.lap("subgroups");
    Ok(AnalysisBody {
        content_hash: g.content_hash().hex(),
        order: g.order(),
        formation: f.to_string(),
        member,
        full_graph: GraphCounts {
            vertices: full.vertex_count(),
            edges: full.edge_count(),
        },
        pruned_graph: GraphCounts {
            vertices: pruned.vertex_count(),
            edges: pruned.edge_count(),
        },
        isolated: IsolatedSummary {
            size: iso.count(),
            labels: iso.iter().map(|x| g.label(x).to_string()).collect(),
            is_subgroup: g.is_subgroup(&iso),
        },
        phi_f_size,
        residual_size,
        components,
        planarity: PlanaritySummary {
            planar: planarity.planar,
            certificate: planarity.certificate.as_str().to_string(),
        },
    })
}

#[cfg(feature = "cache")]
const ANALYZE: &str = "analyze";

/// Analyzes `g` against `f` without a cache.
pub fn analyze(name: &str, g: &FiniteGroup, f: FormationSpec) -> Result<AnalysisReport> {
    let mut clock = Stopwatch::new();
    let body = compute(g, f, &mut clock)?;
    Ok(AnalysisReport {
        group: name.to_string(),
        body,
        cached: false,
        timings_ms: clock.laps,
    })
}

/// Analyzes through `cache`. In [`CacheMode::Validate`] a hit is
/// recomputed and a mismatch is an error.
#[cfg(feature = "cache")]
pub fn analyze_cached(
    name: &str,
    g: &FiniteGroup,
    f: FormationSpec,
    cache: &Cache,
    mode: CacheMode,
) -> Result<AnalysisReport> {
    let key = CacheKey::new(g.content_hash(), f, ANALYZE);
    let mut clock = Stopwatch::new();
    if mode != CacheMode::Off {
        if let Some(body) = cache.get::<AnalysisBody>(&key)? {
            clock.lap("cache");
            if mode == CacheMode::Validate {
                let fresh = compute(g, f, &mut clock)?;
                if fresh != body {
                    return Err(Error::CacheMismatch(cache.path_for(&key).display().to_string()));
                }
            }
            return Ok(AnalysisReport {
                group: name.to_string(),
                body,
                cached: true,
                timings_ms: clock.laps,
            });
        }
    }
    let body = compute(g, f, &mut clock)?;
    if mode != CacheMode::Off {
        cache.put(&key, &body)?;
    }
    Ok(AnalysisReport {
        group: name.to_string(),
        body,
        cached: false,
        timings_ms: clock.laps,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    GraphMl,
}

/// Full non-F graph of `g` in the requested format.
pub fn export_graph(
    name: &str,
    g: &FiniteGroup,
    f: FormationSpec,
    format: GraphFormat,
    include_isolated: bool,
) -> Result<String> {
    let graph = Facts::new(g).nonf_graph(f)?;
    let title = format!("{name} {f}");
    Ok(match format {
        GraphFormat::Dot => graph.to_dot(g, &title, include_isolated),
        GraphFormat::GraphMl => graph.to_graphml(g, &title, include_isolated),
    })
}
