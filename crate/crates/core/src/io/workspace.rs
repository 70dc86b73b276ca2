//! The workspace file: named graphs, morphisms, open graphs, 2-cells,
//! productions, and grammars in one JSON document.
//!
//! Everything except graphs refers to graphs by name, and maps are written
//! as bare index lists:
//!
//! ```json
//! {
//!   "graphs": { "edge": { "nodes": 2, "edges": [[0, 1]] }, "one": { "nodes": 1, "edges": [] } },
//!   "homs": { "head": { "dom": "one", "cod": "edge", "nodes": [1], "edges": [] } },
//!   "open_graphs": {
//!     "e": { "input": "one", "output": "one", "apex": "edge",
//!            "in": { "nodes": [0], "edges": [] }, "out": { "nodes": [1], "edges": [] } }
//!   }
//! }
//! ```
//!
//! Saving is deterministic: sections and names are sorted and the layout is
//! fixed, so save, load, save reproduces the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::cospan::{OpenGraph, TwoCell};
use crate::graph::{FinGraph, GraphHom};
use crate::rewrite::{Grammar, InterfaceProduction, Production};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {object}: {reason}")]
    Validation { object: String, reason: String },
    #[error("no {kind} named {name:?}")]
    Unknown { kind: &'static str, name: String },
}

/// Index lists of a map whose domain and codomain are given elsewhere.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDoc {
    nodes: Vec<usize>,
    #[serde(default)]
    edges: Vec<usize>,
}

impl From<&GraphHom> for MapDoc {
    fn from(h: &GraphHom) -> Self {
        Self {
            nodes: h.node_map().to_vec(),
            edges: h.edge_map().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomDoc {
    dom: String,
    cod: String,
    nodes: Vec<usize>,
    #[serde(default)]
    edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpenGraphDoc {
    input: String,
    output: String,
    apex: String,
    #[serde(rename = "in")]
    in_map: MapDoc,
    #[serde(rename = "out")]
    out_map: MapDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TwoCellDoc {
    top: String,
    bottom: String,
    middle: String,
    up: MapDoc,
    down: MapDoc,
    mid_in: MapDoc,
    mid_out: MapDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InterfaceDoc {
    input: String,
    output: String,
    i_map: MapDoc,
    o_map: MapDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductionDoc {
    left: String,
    glue: String,
    right: String,
    l: MapDoc,
    r: MapDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    interface: Option<InterfaceDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GrammarDoc {
    start: Vec<String>,
    productions: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    graphs: BTreeMap<String, FinGraph>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    homs: BTreeMap<String, HomDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    open_graphs: BTreeMap<String, OpenGraphDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    two_cells: BTreeMap<String, TwoCellDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    productions: BTreeMap<String, ProductionDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    grammars: BTreeMap<String, GrammarDoc>,
}

/// What a workspace name refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Graph,
    Hom,
    OpenGraph,
    TwoCell,
    Production,
    Grammar,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Hom => "hom",
            Kind::OpenGraph => "open graph",
            Kind::TwoCell => "2-cell",
            Kind::Production => "production",
            Kind::Grammar => "grammar",
        }
    }
}

/// A production as stored: with or without interfaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StoredProduction {
    Plain(Production),
    WithInterface(InterfaceProduction),
}

impl StoredProduction {
    pub fn base(&self) -> &Production {
        match self {
            StoredProduction::Plain(p) => p,
            StoredProduction::WithInterface(p) => p.base(),
        }
    }
}

/// Loader options.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Accept 2-cells whose legs are not monic.
    pub allow_nonmonic: bool,
}

/// A validated workspace. Objects are resolved from their stored form on
/// access; every stored object is known to resolve.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Workspace {
    doc: Document,
    options: LoadOptions,
}

fn unknown(kind: &'static str, name: &str) -> IoError {
    IoError::Unknown {
        kind,
        name: name.to_string(),
    }
}

fn invalid(object: String, reason: impl ToString) -> IoError {
    IoError::Validation {
        object,
        reason: reason.to_string(),
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_options(options: LoadOptions) -> Self {
        Self {
            doc: Document::default(),
            options,
        }
    }

    pub fn options(&self) -> LoadOptions {
        self.options
    }

    pub fn load(path: impl AsRef<Path>, options: LoadOptions) -> Result<Self, IoError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| IoError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&text, options)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), IoError> {
        let path = path.as_ref();
        std::fs::write(path, self.to_json()).map_err(|e| IoError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })
    }

    /// Parses and validates a workspace document.
    pub fn from_json(text: &str, options: LoadOptions) -> Result<Self, IoError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| IoError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let ws = Self { doc, options };
        ws.validate()?;
        Ok(ws)
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(&self.doc).expect("documents serialize");
        let mut out = String::new();
        write_value(&value, 0, &mut out);
        out.push('\n');
        out
    }

    fn validate(&self) -> Result<(), IoError> {
        let d = &self.doc;
        let mut seen = BTreeMap::new();
        let sections: [(&str, Vec<&String>); 6] = [
            ("graphs", d.graphs.keys().collect()),
            ("homs", d.homs.keys().collect()),
            ("open_graphs", d.open_graphs.keys().collect()),
            ("two_cells", d.two_cells.keys().collect()),
            ("productions", d.productions.keys().collect()),
            ("grammars", d.grammars.keys().collect()),
        ];
        for (section, names) in sections {
            for name in names {
                if let Some(prev) = seen.insert(name.clone(), section) {
                    return Err(invalid(
                        format!("{section}.{name}"),
                        format!("name already used in {prev}"),
                    ));
                }
            }
        }
        let wrap = |section: &str, name: &str, e: IoError| match e {
            IoError::Validation { .. } => e,
            other => invalid(format!("{section}.{name}"), other),
        };
        for name in d.homs.keys() {
            self.hom(name).map_err(|e| wrap("homs", name, e))?;
        }
        for name in d.open_graphs.keys() {
            self.open_graph(name).map_err(|e| wrap("open_graphs", name, e))?;
        }
        for name in d.two_cells.keys() {
            self.two_cell(name).map_err(|e| wrap("two_cells", name, e))?;
        }
        for name in d.productions.keys() {
            self.production(name).map_err(|e| wrap("productions", name, e))?;
        }
        for name in d.grammars.keys() {
            self.grammar(name).map_err(|e| wrap("grammars", name, e))?;
        }
        Ok(())
    }

    pub fn kind_of(&self, name: &str) -> Option<Kind> {
        let d = &self.doc;
        if d.graphs.contains_key(name) {
            Some(Kind::Graph)
        } else if d.homs.contains_key(name) {
            Some(Kind::Hom)
        } else if d.open_graphs.contains_key(name) {
            Some(Kind::OpenGraph)
        } else if d.two_cells.contains_key(name) {
            Some(Kind::TwoCell)
        } else if d.productions.contains_key(name) {
            Some(Kind::Production)
        } else if d.grammars.contains_key(name) {
            Some(Kind::Grammar)
        } else {
            None
        }
    }

    /// All names with their kinds, sorted by name.
    pub fn names(&self) -> Vec<(String, Kind)> {
        let d = &self.doc;
        let mut v: Vec<(String, Kind)> = d
            .graphs
            .keys()
            .map(|n| (n.clone(), Kind::Graph))
            .chain(d.homs.keys().map(|n| (n.clone(), Kind::Hom)))
            .chain(d.open_graphs.keys().map(|n| (n.clone(), Kind::OpenGraph)))
            .chain(d.two_cells.keys().map(|n| (n.clone(), Kind::TwoCell)))
            .chain(d.productions.keys().map(|n| (n.clone(), Kind::Production)))
            .chain(d.grammars.keys().map(|n| (n.clone(), Kind::Grammar)))
            .collect();
        v.sort();
        v
    }

    pub fn graph(&self, name: &str) -> Result<FinGraph, IoError> {
        self.doc.graphs.get(name).cloned().ok_or_else(|| unknown("graph", name))
    }

    fn map(&self, object: &str, dom: &FinGraph, cod: &FinGraph, m: &MapDoc) -> Result<GraphHom, IoError> {
        GraphHom::new(dom.clone(), cod.clone(), m.nodes.clone(), m.edges.clone())
            .map_err(|e| invalid(object.to_string(), e))
    }

    pub fn hom(&self, name: &str) -> Result<GraphHom, IoError> {
        let h = self.doc.homs.get(name).ok_or_else(|| unknown("hom", name))?;
        let dom = self.graph(&h.dom)?;
        let cod = self.graph(&h.cod)?;
        GraphHom::new(dom, cod, h.nodes.clone(), h.edges.clone())
            .map_err(|e| invalid(format!("homs.{name}"), e))
    }

    pub fn open_graph(&self, name: &str) -> Result<OpenGraph, IoError> {
        let o = self
            .doc
            .open_graphs
            .get(name)
            .ok_or_else(|| unknown("open graph", name))?;
        let object = format!("open_graphs.{name}");
        let apex = self.graph(&o.apex)?;
        let in_leg = self.map(&object, &self.graph(&o.input)?, &apex, &o.in_map)?;
        let out_leg = self.map(&object, &self.graph(&o.output)?, &apex, &o.out_map)?;
        OpenGraph::new(in_leg, out_leg).map_err(|e| invalid(object, e))
    }

    pub fn two_cell(&self, name: &str) -> Result<TwoCell, IoError> {
        let c = self.doc.two_cells.get(name).ok_or_else(|| unknown("2-cell", name))?;
        let object = format!("two_cells.{name}");
        let top = self.open_graph(&c.top)?;
        let bottom = self.open_graph(&c.bottom)?;
        let middle = self.graph(&c.middle)?;
        let up = self.map(&object, &middle, top.apex(), &c.up)?;
        let down = self.map(&object, &middle, bottom.apex(), &c.down)?;
        let mid_in = self.map(&object, top.left_foot(), &middle, &c.mid_in)?;
        let mid_out = self.map(&object, top.right_foot(), &middle, &c.mid_out)?;
        let cell = if self.options.allow_nonmonic {
            TwoCell::new_allow_nonmonic(top, bottom, up, down, mid_in, mid_out)
        } else {
            TwoCell::new(top, bottom, up, down, mid_in, mid_out)
        };
        cell.map_err(|e| invalid(object, e))
    }

    pub fn production(&self, name: &str) -> Result<StoredProduction, IoError> {
        let p = self
            .doc
            .productions
            .get(name)
            .ok_or_else(|| unknown("production", name))?;
        let object = format!("productions.{name}");
        let glue = self.graph(&p.glue)?;
        let l = self.map(&object, &glue, &self.graph(&p.left)?, &p.l)?;
        let r = self.map(&object, &glue, &self.graph(&p.right)?, &p.r)?;
        let base = Production::new(l, r).map_err(|e| invalid(object.clone(), e))?;
        let Some(i) = &p.interface else {
            return Ok(StoredProduction::Plain(base));
        };
        let i_map = self.map(&object, &self.graph(&i.input)?, &glue, &i.i_map)?;
        let o_map = self.map(&object, &self.graph(&i.output)?, &glue, &i.o_map)?;
        InterfaceProduction::new(base, i_map, o_map)
            .map(StoredProduction::WithInterface)
            .map_err(|e| invalid(object, e))
    }

    pub fn grammar(&self, name: &str) -> Result<Grammar, IoError> {
        let g = self.doc.grammars.get(name).ok_or_else(|| unknown("grammar", name))?;
        let object = format!("grammars.{name}");
        let start = g
            .start
            .iter()
            .map(|s| self.open_graph(s))
            .collect::<Result<Vec<_>, _>>()?;
        let productions = g
            .productions
            .iter()
            .map(|p| match self.production(p)? {
                StoredProduction::WithInterface(ip) => Ok(ip),
                StoredProduction::Plain(_) => {
                    Err(invalid(object.clone(), format!("production {p:?} has no interface")))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        let (input, output) = match (start.first(), productions.first()) {
            (Some(s), _) => (s.left_foot().clone(), s.right_foot().clone()),
            (None, Some(p)) => (p.input().clone(), p.output().clone()),
            (None, None) => (FinGraph::empty(), FinGraph::empty()),
        };
        Grammar::new(input, output, start, productions).map_err(|e| invalid(object, e))
    }

    fn name_is_free(&self, name: &str) -> bool {
        self.kind_of(name).is_none()
    }

    /// `base`, or `base.2`, `base.3`, ... whichever is free first.
    fn fresh_name(&self, base: &str) -> String {
        if self.name_is_free(base) {
            return base.to_string();
        }
        (2..)
            .map(|i| format!("{base}.{i}"))
            .find(|n| self.name_is_free(n))
            .expect("some suffix is free")
    }

    /// Stores `g` under `name`, replacing a graph of that name.
    pub fn insert_graph(&mut self, name: &str, g: &FinGraph) -> Result<(), IoError> {
        self.claim(name, Kind::Graph)?;
        self.doc.graphs.insert(name.to_string(), g.clone());
        Ok(())
    }

    /// The name of an existing graph equal to `g`, or a new entry named
    /// after `hint`.
    fn graph_name_for(&mut self, g: &FinGraph, hint: &str) -> String {
        if let Some((name, _)) = self.doc.graphs.iter().find(|(_, v)| *v == g) {
            return name.clone();
        }
        let name = self.fresh_name(hint);
        self.doc.graphs.insert(name.clone(), g.clone());
        name
    }

    fn claim(&self, name: &str, kind: Kind) -> Result<(), IoError> {
        match self.kind_of(name) {
            Some(k) if k != kind => Err(invalid(
                name.to_string(),
                format!("name already used by a {}", k.label()),
            )),
            _ => Ok(()),
        }
    }

    pub fn insert_hom(&mut self, name: &str, h: &GraphHom) -> Result<(), IoError> {
        self.claim(name, Kind::Hom)?;
        let dom = self.graph_name_for(h.dom(), &format!("{name}.dom"));
        let cod = self.graph_name_for(h.cod(), &format!("{name}.cod"));
        self.doc.homs.insert(
            name.to_string(),
            HomDoc {
                dom,
                cod,
                nodes: h.node_map().to_vec(),
                edges: h.edge_map().to_vec(),
            },
        );
        Ok(())
    }

    pub fn insert_open_graph(&mut self, name: &str, o: &OpenGraph) -> Result<(), IoError> {
        self.claim(name, Kind::OpenGraph)?;
        let doc = self.open_graph_doc(name, o);
        self.doc.open_graphs.insert(name.to_string(), doc);
        Ok(())
    }

    fn open_graph_doc(&mut self, name: &str, o: &OpenGraph) -> OpenGraphDoc {
        OpenGraphDoc {
            input: self.graph_name_for(o.left_foot(), &format!("{name}.input")),
            output: self.graph_name_for(o.right_foot(), &format!("{name}.output")),
            apex: self.graph_name_for(o.apex(), &format!("{name}.apex")),
            in_map: o.in_leg().into(),
            out_map: o.out_leg().into(),
        }
    }

    /// The name of an existing open graph equal to `o`, or a new entry.
    fn open_graph_name_for(&mut self, o: &OpenGraph, hint: &str) -> Result<String, IoError> {
        let existing = self
            .doc
            .open_graphs
            .keys()
            .find(|n| self.open_graph(n).ok().as_ref() == Some(o))
            .cloned();
        if let Some(name) = existing {
            return Ok(name);
        }
        let name = self.fresh_name(hint);
        self.insert_open_graph(&name, o)?;
        Ok(name)
    }

    pub fn insert_two_cell(&mut self, name: &str, c: &TwoCell) -> Result<(), IoError> {
        self.claim(name, Kind::TwoCell)?;
        let top = self.open_graph_name_for(c.top(), &format!("{name}.top"))?;
        let bottom = self.open_graph_name_for(c.bottom(), &format!("{name}.bottom"))?;
        let middle = self.graph_name_for(c.middle(), &format!("{name}.middle"));
        self.doc.two_cells.insert(
            name.to_string(),
            TwoCellDoc {
                top,
                bottom,
                middle,
                up: c.up_leg().into(),
                down: c.down_leg().into(),
                mid_in: c.mid_in().into(),
                mid_out: c.mid_out().into(),
            },
        );
        Ok(())
    }

    pub fn insert_production(&mut self, name: &str, p: &StoredProduction) -> Result<(), IoError> {
        self.claim(name, Kind::Production)?;
        let base = p.base();
        let left = self.graph_name_for(base.left(), &format!("{name}.left"));
        let glue = self.graph_name_for(base.glue(), &format!("{name}.glue"));
        let right = self.graph_name_for(base.right(), &format!("{name}.right"));
        let interface = match p {
            StoredProduction::Plain(_) => None,
            StoredProduction::WithInterface(ip) => Some(InterfaceDoc {
                input: self.graph_name_for(ip.input(), &format!("{name}.input")),
                output: self.graph_name_for(ip.output(), &format!("{name}.output")),
                i_map: ip.i_map().into(),
                o_map: ip.o_map().into(),
            }),
        };
        self.doc.productions.insert(
            name.to_string(),
            ProductionDoc {
                left,
                glue,
                right,
                l: base.l().into(),
                r: base.r().into(),
                interface,
            },
        );
        Ok(())
    }

    /// Stores a grammar whose members are already stored under the given
    /// names.
    pub fn insert_grammar(
        &mut self,
        name: &str,
        start: &[&str],
        productions: &[&str],
    ) -> Result<(), IoError> {
        self.claim(name, Kind::Grammar)?;
        let doc = GrammarDoc {
            start: start.iter().map(|s| s.to_string()).collect(),
            productions: productions.iter().map(|s| s.to_string()).collect(),
        };
        self.doc.grammars.insert(name.to_string(), doc);
        if let Err(e) = self.grammar(name) {
            self.doc.grammars.remove(name);
            return Err(e);
        }
        Ok(())
    }
}

/// Pretty JSON that keeps small values on one line: arrays of scalars,
/// arrays of those (edge lists), and objects made only of such values.
fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(map) if !map.values().all(is_flat) => {
            out.push_str("{\n");
            for (i, (k, val)) in map.iter().enumerate() {
                let _ = write!(out, "{}{}: ", pad(indent + 1), Value::String(k.clone()));
                write_value(val, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}}}", pad(indent));
        }
        Value::Array(items) if !items.iter().all(is_flat) => {
            out.push_str("[\n");
            for (i, val) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(val, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            let _ = write!(out, "{}]", pad(indent));
        }
        other => out.push_str(&inline(other)),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), inline(x)))
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}
