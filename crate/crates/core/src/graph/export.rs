use std::fmt::Write;

use super::ElementGraph;
use crate::group::FiniteGroup;

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

impl ElementGraph {
    fn exported_vertices(&self, include_isolated: bool) -> Vec<usize> {
        self.vertices()
            .iter()
            .filter(|&v| include_isolated || self.degree(v) > 0)
            .collect()
    }

    /// Undirected DOT, vertices in element order labelled by element labels.
    pub fn to_dot(&self, group: &FiniteGroup, name: &str, include_isolated: bool) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", dot_escape(name)).unwrap();
        for v in self.exported_vertices(include_isolated) {
            writeln!(out, "  {v} [label=\"{}\"];", dot_escape(group.label(v))).unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(out, "  {a} -- {b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_graphml(&self, group: &FiniteGroup, name: &str, include_isolated: bool) -> String {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
        out.push_str("  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n");
        writeln!(out, "  <graph id=\"{}\" edgedefault=\"undirected\">", xml_escape(name)).unwrap();
        for v in self.exported_vertices(include_isolated) {
            writeln!(
                out,
                "    <node id=\"n{v}\"><data key=\"label\">{}</data></node>",
                xml_escape(group.label(v))
            )
            .unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(out, "    <edge source=\"n{a}\" target=\"n{b}\"/>").unwrap();
        }
        out.push_str("  </graph>\n</graphml>\n");
        out
    }
}
