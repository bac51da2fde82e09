//! DOT rendering for graphs, Reeb graphs, merge trees, and Hasse diagrams.
//!
//! Drawing convention for graphs: solid = saddle-max, dashed = saddle-min
//! (the prose convention; the paper's figure legend draws it the other way
//! around, which is why the kind is stored and never inferred from style).

use std::fmt::Write;

use crate::complex::{EdgeKind, MsGraph};
use crate::persistence::{MergeTree, ReebGraph};
use crate::scalar::Scalar;
use crate::slices::NestingPoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn graph_dot(g: &MsGraph, values: Option<&[f64]>) -> String {
    let mut out = String::from("graph morse_smale {\n");
    for v in g.vertices() {
        let shape = match g.vertex_index(v) {
            crate::complex::MorseIndex::Minimum => "box",
            crate::complex::MorseIndex::Saddle => "diamond",
            crate::complex::MorseIndex::Maximum => "circle",
        };
        let label = match values {
            Some(vals) => format!("{} ({})", g.vertex_label(v), vals[v]),
            None => g.vertex_label(v).to_string(),
        };
        writeln!(out, "  {} [shape={shape}, label={}];", quote(g.vertex_label(v)), quote(&label))
            .unwrap();
    }
    for e in 0..g.edge_count() {
        let [u, w] = g.edge_ends(e);
        let style = match g.edge_kind(e) {
            Some(EdgeKind::SaddleMax) => "solid",
            Some(EdgeKind::SaddleMin) => "dashed",
            None => "dotted",
        };
        writeln!(
            out,
            "  {} -- {} [style={style}, label={}];",
            quote(g.vertex_label(u)),
            quote(g.vertex_label(w)),
            quote(g.edge_label(e))
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn reeb_dot<V: Scalar>(r: &ReebGraph<V>) -> String {
    let mut out = String::from("graph reeb {\n");
    for (i, n) in r.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&format!("{} @ {}", n.label, n.height))).unwrap();
    }
    for &(a, b) in &r.edges {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn merge_tree_dot<V: Scalar>(t: &MergeTree<V>) -> String {
    let mut out = String::from("digraph merge_tree {\n");
    for (i, n) in t.nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&format!("{} @ {}", n.label, n.height))).unwrap();
    }
    for (i, n) in t.nodes.iter().enumerate() {
        if let Some(p) = n.parent {
            writeln!(out, "  n{i} -> n{p};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a nesting poset: arrows from each region to the region
/// directly above it.
pub fn hasse_dot(p: &NestingPoset) -> String {
    let mut out = String::from("digraph hasse {\n");
    for (i, r) in p.elements.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&r.to_string())).unwrap();
    }
    for (i, parent) in p.parent.iter().enumerate() {
        if let Some(p) = parent {
            writeln!(out, "  n{i} -> n{p};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
