//! Graphviz export. Output depends only on the objects, never on hashing or
//! timing, so it can be diffed.
//!
//! In open graphs the node shape marks the boundary: inputs are circles,
//! outputs squares, nodes that are both get a double circle, and interior
//! nodes are points. Morphisms are drawn as dashed arrows between clusters.

use std::fmt::Write as _;

use super::workspace::{IoError, Kind, StoredProduction, Workspace};
use crate::cospan::{OpenGraph, TwoCell};
use crate::graph::{FinGraph, GraphHom};
use crate::rewrite::Production;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn shape(on_input: bool, on_output: bool) -> &'static str {
    match (on_input, on_output) {
        (true, true) => "doublecircle",
        (true, false) => "circle",
        (false, true) => "square",
        (false, false) => "point",
    }
}

fn nodes_and_edges(out: &mut String, indent: &str, prefix: &str, g: &FinGraph, shapes: &[&str]) {
    for (n, s) in shapes.iter().enumerate().take(g.node_count()) {
        if *s == "point" {
            let _ = writeln!(out, "{indent}{prefix}{n} [shape=point, xlabel=\"{n}\"];");
        } else {
            let _ = writeln!(out, "{indent}{prefix}{n} [shape={s}, label=\"{n}\"];");
        }
    }
    for (e, &(s, t)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "{indent}{prefix}{s} -> {prefix}{t} [label=\"e{e}\"];");
    }
}

fn plain_shapes(g: &FinGraph) -> Vec<&'static str> {
    vec!["circle"; g.node_count()]
}

fn boundary_shapes(o: &OpenGraph) -> Vec<&'static str> {
    (0..o.apex().node_count())
        .map(|n| shape(o.in_leg().hits_node(n), o.out_leg().hits_node(n)))
        .collect()
}

fn cluster(out: &mut String, prefix: &str, label: &str, g: &FinGraph, shapes: &[&str]) {
    let _ = writeln!(out, "  subgraph cluster_{prefix} {{");
    let _ = writeln!(out, "    label={};", quote(label));
    nodes_and_edges(out, "    ", prefix, g, shapes);
    out.push_str("  }\n");
}

fn map_arrows(out: &mut String, from: &str, to: &str, label: &str, h: &GraphHom) {
    for (n, &m) in h.node_map().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {from}{n} -> {to}{m} [style=dashed, arrowhead=open, constraint=false, label={}];",
            quote(label)
        );
    }
}

fn header(name: &str) -> String {
    format!("digraph {} {{\n  rankdir=LR;\n", quote(name))
}

pub fn graph_to_dot(name: &str, g: &FinGraph) -> String {
    let mut out = header(name);
    nodes_and_edges(&mut out, "  ", "n", g, &plain_shapes(g));
    out.push_str("}\n");
    out
}

pub fn open_graph_to_dot(name: &str, o: &OpenGraph) -> String {
    let mut out = header(name);
    nodes_and_edges(&mut out, "  ", "n", o.apex(), &boundary_shapes(o));
    out.push_str("}\n");
    out
}

pub fn hom_to_dot(name: &str, h: &GraphHom) -> String {
    let mut out = header(name);
    cluster(&mut out, "dom_", "domain", h.dom(), &plain_shapes(h.dom()));
    cluster(&mut out, "cod_", "codomain", h.cod(), &plain_shapes(h.cod()));
    map_arrows(&mut out, "dom_", "cod_", "", h);
    out.push_str("}\n");
    out
}

/// The three apexes of a 2-cell, top to bottom, with both legs.
pub fn two_cell_to_dot(name: &str, c: &TwoCell) -> String {
    let mut out = header(name);
    cluster(&mut out, "top_", "top", c.top().apex(), &boundary_shapes(c.top()));
    let mid_shapes: Vec<&str> = (0..c.middle().node_count())
        .map(|n| shape(c.mid_in().hits_node(n), c.mid_out().hits_node(n)))
        .collect();
    cluster(&mut out, "mid_", "middle", c.middle(), &mid_shapes);
    cluster(&mut out, "bot_", "bottom", c.bottom().apex(), &boundary_shapes(c.bottom()));
    map_arrows(&mut out, "mid_", "top_", "up", c.up_leg());
    map_arrows(&mut out, "mid_", "bot_", "down", c.down_leg());
    out.push_str("}\n");
    out
}

pub fn production_to_dot(name: &str, p: &Production) -> String {
    let mut out = header(name);
    cluster(&mut out, "left_", "left", p.left(), &plain_shapes(p.left()));
    cluster(&mut out, "glue_", "glue", p.glue(), &plain_shapes(p.glue()));
    cluster(&mut out, "right_", "right", p.right(), &plain_shapes(p.right()));
    map_arrows(&mut out, "glue_", "left_", "l", p.l());
    map_arrows(&mut out, "glue_", "right_", "r", p.r());
    out.push_str("}\n");
    out
}

/// Renders any named workspace object. Grammars render their start graphs
/// and productions as one digraph per member, concatenated.
pub fn workspace_to_dot(ws: &Workspace, name: &str) -> Result<String, IoError> {
    let kind = ws.kind_of(name).ok_or_else(|| IoError::Unknown {
        kind: "object",
        name: name.to_string(),
    })?;
    Ok(match kind {
        Kind::Graph => graph_to_dot(name, &ws.graph(name)?),
        Kind::Hom => hom_to_dot(name, &ws.hom(name)?),
        Kind::OpenGraph => open_graph_to_dot(name, &ws.open_graph(name)?),
        Kind::TwoCell => two_cell_to_dot(name, &ws.two_cell(name)?),
        Kind::Production => match ws.production(name)? {
            StoredProduction::Plain(p) => production_to_dot(name, &p),
            StoredProduction::WithInterface(p) => production_to_dot(name, p.base()),
        },
        Kind::Grammar => {
            let g = ws.grammar(name)?;
            let mut out = String::new();
            for (i, s) in g.start().iter().enumerate() {
                out.push_str(&open_graph_to_dot(&format!("{name}.start{i}"), s));
            }
            for (i, p) in g.productions().iter().enumerate() {
                out.push_str(&production_to_dot(&format!("{name}.production{i}"), p.base()));
            }
            out
        }
    })
}
