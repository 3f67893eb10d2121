//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings and returns a JSON string. The `*_json`
//! functions hold the logic and are usable from native code.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use formagraph::catalog::{builtin, builtin_entries};
use formagraph::structure::{hypercenter, soluble_radical};
use formagraph::{Facts, FiniteGroup, FormationSpec};

/// Largest group the page will draw.
pub const MAX_ORDER: usize = 120;

#[derive(Serialize)]
struct Entry {
    name: String,
    order: usize,
}

#[derive(Serialize)]
struct Node {
    id: usize,
    label: String,
    isolated: bool,
}

#[derive(Serialize)]
struct GraphSummary {
    order: usize,
    member: bool,
    edges: usize,
    isolated: usize,
    isolated_is_subgroup: bool,
    components: usize,
    planar: bool,
    certificate: &'static str,
}

#[derive(Serialize)]
struct GraphView {
    nodes: Vec<Node>,
    edges: Vec<[usize; 2]>,
    summary: GraphSummary,
}

#[derive(Serialize)]
struct Identity {
    class: String,
    subgroup: &'static str,
    isolated: Vec<String>,
    expected: Vec<String>,
    equal: bool,
}

fn load(name: &str) -> Result<FiniteGroup, String> {
    let g = builtin(name).map_err(|e| e.to_string())?;
    if g.order() > MAX_ORDER {
        return Err(format!("{name} has order {}; the demo stops at {MAX_ORDER}", g.order()));
    }
    Ok(g)
}

fn labels(g: &FiniteGroup, set: &formagraph::BitSet) -> Vec<String> {
    set.iter().map(|x| g.label(x).to_string()).collect()
}

/// Named groups small enough to draw.
pub fn builtins_json() -> String {
    let list: Vec<Entry> = builtin_entries()
        .into_iter()
        .filter(|e| e.expected_order <= MAX_ORDER)
        .map(|e| Entry {
            name: e.name,
            order: e.expected_order,
        })
        .collect();
    serde_json::to_string(&list).expect("entries serialize")
}

/// The non-F graph of a builtin group with a summary of its structure.
pub fn graph_json(group: &str, formation: &str, include_isolated: bool) -> Result<String, String> {
    let g = load(group)?;
    let f: FormationSpec = formation.parse().map_err(|e: formagraph::Error| e.to_string())?;
    let facts = Facts::new(&g);
    let full = facts.nonf_graph(f).map_err(|e| e.to_string())?;
    let iso = full.isolated_vertices();
    let pruned = full.prune();
    let planarity = pruned.planarity();
    let nodes = g
        .elements()
        .filter(|&x| include_isolated || !iso.contains(x))
        .map(|x| Node {
            id: x,
            label: g.label(x).to_string(),
            isolated: iso.contains(x),
        })
        .collect();
    let view = GraphView {
        nodes,
        edges: full.edges().map(|(a, b)| [a, b]).collect(),
        summary: GraphSummary {
            order: g.order(),
            member: facts.is_member(f).map_err(|e| e.to_string())?,
            edges: full.edge_count(),
            isolated: iso.count(),
            isolated_is_subgroup: g.is_subgroup(&iso),
            components: pruned.components().count,
            planar: planarity.planar,
            certificate: planarity.certificate.as_str(),
        },
    };
    Ok(serde_json::to_string(&view).expect("views serialize"))
}

/// Isolated sets for the abelian, nilpotent and soluble classes next to
/// the center, hypercenter and soluble radical.
pub fn identities_json(group: &str) -> Result<String, String> {
    let g = load(group)?;
    let facts = Facts::new(&g);
    let rows = [
        (FormationSpec::Abelian, "center", g.center()),
        (FormationSpec::Nilpotent, "hypercenter", hypercenter(&g)),
        (FormationSpec::Soluble, "soluble radical", soluble_radical(&g)),
    ];
    let mut out = Vec::new();
    for (f, subgroup, expected) in rows {
        let iso = facts.isolated(f).map_err(|e| e.to_string())?;
        out.push(Identity {
            class: f.to_string(),
            subgroup,
            isolated: labels(&g, &iso),
            expected: labels(&g, expected.bits()),
            equal: iso == *expected.bits(),
        });
    }
    Ok(serde_json::to_string(&out).expect("identities serialize"))
}

#[wasm_bindgen]
pub fn builtins() -> String {
    builtins_json()
}

#[wasm_bindgen]
pub fn graph(group: &str, formation: &str, include_isolated: bool) -> Result<String, JsValue> {
    graph_json(group, formation, include_isolated).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn identities(group: &str) -> Result<String, JsValue> {
    identities_json(group).map_err(|e| JsValue::from_str(&e))
}
