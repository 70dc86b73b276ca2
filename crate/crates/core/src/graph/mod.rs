//! Finite directed multigraphs, their morphisms, and the finite (co)limits
//! every other module is built from.
//!
//! Nodes and edges are identified by position. Two graphs that differ only
//! in the order of their nodes or edges are different values but isomorphic
//! objects; use [`iso_search`] whenever a semantic comparison is meant.

mod colimit;
mod iso;
mod limit;
mod union_find;

pub mod check;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use colimit::{coequalizer, coproduct, mediate_pushout, pushout, CoconeWitness};
pub use iso::{all_homs, constrained_iso_search, iso_search, IsoConstraints, MapKind, MapSearch};
pub use limit::{mediate_pullback, product, pullback, ConeWitness};

/// Node bound applied to every search-based operation unless overridden.
pub const DEFAULT_MAX_NODES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{what} {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("edge {edge} not preserved: {detail}")]
    StructureNotPreserved { edge: usize, detail: String },
    #[error("domain mismatch: {0}")]
    DomainMismatch(&'static str),
    #[error("codomain mismatch: {0}")]
    CodomainMismatch(&'static str),
    #[error("maps do not form a commuting cocone")]
    NotACocone,
    #[error("maps do not form a commuting cone")]
    NotACone,
    #[error("graph with {nodes} nodes exceeds the search bound of {limit}")]
    SizeBound { nodes: usize, limit: usize },
}

/// A finite directed multigraph: `nodes` nodes and a list of
/// `(source, target)` edges. Loops and parallel edges are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph")]
pub struct FinGraph {
    nodes: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGraph {
    nodes: usize,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for FinGraph {
    type Error = GraphError;

    fn try_from(raw: RawGraph) -> Result<Self, Self::Error> {
        FinGraph::new(raw.nodes, raw.edges)
    }
}

impl FinGraph {
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(s, t) in &edges {
            for end in [s, t] {
                if end >= nodes {
                    return Err(GraphError::IndexOutOfRange {
                        what: "edge endpoint",
                        index: end,
                        bound: nodes,
                    });
                }
            }
        }
        Ok(Self { nodes, edges })
    }

    /// The initial object.
    pub fn empty() -> Self {
        Self::default()
    }

    /// `n` nodes and no edges.
    pub fn discrete(n: usize) -> Self {
        Self {
            nodes: n,
            edges: Vec::new(),
        }
    }

    /// The terminal object: one node carrying one loop.
    pub fn terminal() -> Self {
        Self {
            nodes: 1,
            edges: vec![(0, 0)],
        }
    }

    /// A single edge `0 -> 1`.
    pub fn arrow() -> Self {
        Self {
            nodes: 2,
            edges: vec![(0, 1)],
        }
    }

    /// The directed path `0 -> 1 -> ... -> n-1`.
    pub fn path(n: usize) -> Self {
        Self {
            nodes: n,
            edges: (1..n).map(|i| (i - 1, i)).collect(),
        }
    }

    /// The directed cycle on `n >= 1` nodes.
    pub fn cycle(n: usize) -> Self {
        Self {
            nodes: n,
            edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self, edge: usize) -> usize {
        self.edges[edge].0
    }

    pub fn target(&self, edge: usize) -> usize {
        self.edges[edge].1
    }

    pub fn is_empty(&self) -> bool {
        self.nodes == 0
    }

    pub fn is_discrete(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges with `node` as an endpoint.
    pub fn incident_edges(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(move |(_, &(s, t))| s == node || t == node)
            .map(|(e, _)| e)
    }

    /// `mult[s][t]` = number of edges from `s` to `t`.
    pub(crate) fn multiplicities(&self) -> Vec<Vec<u32>> {
        let mut mult = vec![vec![0u32; self.nodes]; self.nodes];
        for &(s, t) in &self.edges {
            mult[s][t] += 1;
        }
        mult
    }

    /// `(out-degree, in-degree, loops)` for every node.
    pub(crate) fn degree_profile(&self) -> Vec<(usize, usize, usize)> {
        let mut profile = vec![(0, 0, 0); self.nodes];
        for &(s, t) in &self.edges {
            profile[s].0 += 1;
            profile[t].1 += 1;
            if s == t {
                profile[s].2 += 1;
            }
        }
        profile
    }

    pub(crate) fn check_size(&self, limit: usize) -> Result<(), GraphError> {
        if self.nodes > limit {
            return Err(GraphError::SizeBound {
                nodes: self.nodes,
                limit,
            });
        }
        Ok(())
    }
}

impl fmt::Display for FinGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} nodes, {} edges", self.nodes, self.edges.len())?;
        if !self.edges.is_empty() {
            f.write_str(":")?;
            for (s, t) in &self.edges {
                write!(f, " {s}->{t}")?;
            }
        }
        Ok(())
    }
}

/// A graph morphism: a node map and an edge map commuting with source and
/// target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraphHom {
    dom: FinGraph,
    cod: FinGraph,
    node_map: Vec<usize>,
    edge_map: Vec<usize>,
}

impl GraphHom {
    pub fn new(
        dom: FinGraph,
        cod: FinGraph,
        node_map: Vec<usize>,
        edge_map: Vec<usize>,
    ) -> Result<Self, GraphError> {
        let hom = Self {
            dom,
            cod,
            node_map,
            edge_map,
        };
        hom.validate()?;
        Ok(hom)
    }

    /// Constructions whose output is valid by construction go through here.
    pub(crate) fn from_maps(
        dom: FinGraph,
        cod: FinGraph,
        node_map: Vec<usize>,
        edge_map: Vec<usize>,
    ) -> Self {
        let hom = Self {
            dom,
            cod,
            node_map,
            edge_map,
        };
        debug_assert_eq!(hom.validate(), Ok(()));
        hom
    }

    pub fn identity(g: &FinGraph) -> Self {
        Self {
            dom: g.clone(),
            cod: g.clone(),
            node_map: (0..g.node_count()).collect(),
            edge_map: (0..g.edge_count()).collect(),
        }
    }

    /// The unique map out of the empty graph.
    pub fn initial(cod: &FinGraph) -> Self {
        Self::from_maps(FinGraph::empty(), cod.clone(), Vec::new(), Vec::new())
    }

    /// The unique map into the terminal graph.
    pub fn terminal(dom: &FinGraph) -> Self {
        Self::from_maps(
            dom.clone(),
            FinGraph::terminal(),
            vec![0; dom.node_count()],
            vec![0; dom.edge_count()],
        )
    }

    /// Checks lengths, index ranges, and that every edge is sent to an edge
    /// between the images of its endpoints.
    pub fn validate(&self) -> Result<(), GraphError> {
        if self.node_map.len() != self.dom.node_count() {
            return Err(GraphError::IndexOutOfRange {
                what: "node map length",
                index: self.node_map.len(),
                bound: self.dom.node_count(),
            });
        }
        if self.edge_map.len() != self.dom.edge_count() {
            return Err(GraphError::IndexOutOfRange {
                what: "edge map length",
                index: self.edge_map.len(),
                bound: self.dom.edge_count(),
            });
        }
        if let Some(&n) = self.node_map.iter().find(|&&n| n >= self.cod.node_count()) {
            return Err(GraphError::IndexOutOfRange {
                what: "node image",
                index: n,
                bound: self.cod.node_count(),
            });
        }
        if let Some(&e) = self.edge_map.iter().find(|&&e| e >= self.cod.edge_count()) {
            return Err(GraphError::IndexOutOfRange {
                what: "edge image",
                index: e,
                bound: self.cod.edge_count(),
            });
        }
        for (e, &(s, t)) in self.dom.edges().iter().enumerate() {
            let (is, it) = self.cod.edges()[self.edge_map[e]];
            if is != self.node_map[s] || it != self.node_map[t] {
                return Err(GraphError::StructureNotPreserved {
                    edge: e,
                    detail: format!(
                        "{s}->{t} maps to edge {} = {is}->{it}, but endpoints map to {}->{}",
                        self.edge_map[e], self.node_map[s], self.node_map[t]
                    ),
                });
            }
        }
        Ok(())
    }

    pub fn dom(&self) -> &FinGraph {
        &self.dom
    }

    pub fn cod(&self) -> &FinGraph {
        &self.cod
    }

    pub fn node_map(&self) -> &[usize] {
        &self.node_map
    }

    pub fn edge_map(&self) -> &[usize] {
        &self.edge_map
    }

    pub fn node(&self, n: usize) -> usize {
        self.node_map[n]
    }

    pub fn edge(&self, e: usize) -> usize {
        self.edge_map[e]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &GraphHom) -> Result<GraphHom, GraphError> {
        if first.cod != self.dom {
            return Err(GraphError::DomainMismatch(
                "composite requires the first map's codomain to equal the second's domain",
            ));
        }
        Ok(Self::from_maps(
            first.dom.clone(),
            self.cod.clone(),
            first.node_map.iter().map(|&n| self.node_map[n]).collect(),
            first.edge_map.iter().map(|&e| self.edge_map[e]).collect(),
        ))
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &GraphHom) -> Result<GraphHom, GraphError> {
        then.compose(self)
    }

    /// Injective on nodes and on edges, which is exactly monic in `Graph`.
    pub fn is_mono(&self) -> bool {
        is_injective(&self.node_map, self.cod.node_count())
            && is_injective(&self.edge_map, self.cod.edge_count())
    }

    /// Surjective on nodes and on edges.
    pub fn is_epi(&self) -> bool {
        is_surjective(&self.node_map, self.cod.node_count())
            && is_surjective(&self.edge_map, self.cod.edge_count())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    pub fn inverse(&self) -> Option<GraphHom> {
        if !self.is_iso() {
            return None;
        }
        let mut nodes = vec![0; self.node_map.len()];
        for (i, &n) in self.node_map.iter().enumerate() {
            nodes[n] = i;
        }
        let mut edges = vec![0; self.edge_map.len()];
        for (i, &e) in self.edge_map.iter().enumerate() {
            edges[e] = i;
        }
        Some(Self::from_maps(
            self.cod.clone(),
            self.dom.clone(),
            nodes,
            edges,
        ))
    }

    /// Does the image contain `node`?
    pub fn hits_node(&self, node: usize) -> bool {
        self.node_map.contains(&node)
    }

    pub fn hits_edge(&self, edge: usize) -> bool {
        self.edge_map.contains(&edge)
    }
}

impl fmt::Display for GraphHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "nodes {:?} edges {:?}", self.node_map, self.edge_map)
    }
}

fn is_injective(map: &[usize], bound: usize) -> bool {
    let mut seen = vec![false; bound];
    map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
}

fn is_surjective(map: &[usize], bound: usize) -> bool {
    let mut seen = vec![false; bound];
    for &x in map {
        seen[x] = true;
    }
    seen.into_iter().all(|s| s)
}

/// Free-function form of [`GraphHom::validate`].
pub fn validate_hom(h: &GraphHom) -> Result<(), GraphError> {
    h.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_graphs() {
        assert_eq!(FinGraph::discrete(0), FinGraph::empty());
        let one = FinGraph::discrete(1);
        assert_eq!((one.node_count(), one.edge_count()), (1, 0));
        let three = FinGraph::discrete(3);
        assert_eq!((three.node_count(), three.edge_count()), (3, 0));
        assert!(three.is_discrete());
    }

    #[test]
    fn new_rejects_dangling_edge() {
        assert!(matches!(
            FinGraph::new(2, vec![(0, 2)]),
            Err(GraphError::IndexOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn identity_validates() {
        let g = FinGraph::new(3, vec![(0, 1), (1, 1), (2, 0), (0, 1)]).unwrap();
        assert_eq!(validate_hom(&GraphHom::identity(&g)), Ok(()));
    }

    #[test]
    fn mismatched_endpoints_is_reported() {
        // edge 0->1 sent to an edge 1->0 while nodes are fixed
        let dom = FinGraph::arrow();
        let cod = FinGraph::new(2, vec![(1, 0)]).unwrap();
        let err = GraphHom::new(dom, cod, vec![0, 1], vec![0]).unwrap_err();
        assert!(matches!(err, GraphError::StructureNotPreserved { edge: 0, .. }));
    }

    #[test]
    fn wrong_node_map_length() {
        let err = GraphHom::new(FinGraph::discrete(2), FinGraph::discrete(2), vec![0], vec![])
            .unwrap_err();
        assert!(matches!(err, GraphError::IndexOutOfRange { .. }));
    }

    #[test]
    fn identity_is_neutral() {
        let g = FinGraph::path(3);
        let h = FinGraph::terminal();
        let f = GraphHom::terminal(&g);
        assert_eq!(GraphHom::identity(&h).compose(&f).unwrap(), f);
        assert_eq!(f.compose(&GraphHom::identity(&g)).unwrap(), f);
    }

    #[test]
    fn compose_collapsing_maps_pointwise() {
        let two = FinGraph::discrete(2);
        let swap = GraphHom::new(two.clone(), two.clone(), vec![1, 0], vec![]).unwrap();
        let collapse = GraphHom::new(two.clone(), two.clone(), vec![1, 1], vec![]).unwrap();
        // hand composition: collapse ∘ swap sends both nodes to collapse(swap(x)) = 1
        let c = collapse.compose(&swap).unwrap();
        assert_eq!(c.node_map(), &[1, 1]);
        // swap ∘ collapse sends both to swap(1) = 0
        let d = swap.compose(&collapse).unwrap();
        assert_eq!(d.node_map(), &[0, 0]);
    }

    #[test]
    fn compose_checks_domains() {
        let f = GraphHom::identity(&FinGraph::discrete(2));
        let g = GraphHom::identity(&FinGraph::discrete(3));
        assert!(matches!(g.compose(&f), Err(GraphError::DomainMismatch(_))));
    }

    #[test]
    fn monic_examples() {
        assert!(GraphHom::identity(&FinGraph::cycle(3)).is_mono());
        let collapse =
            GraphHom::new(FinGraph::discrete(2), FinGraph::discrete(1), vec![0, 0], vec![])
                .unwrap();
        assert!(!collapse.is_mono());
        assert!(collapse.is_epi());
    }

    #[test]
    fn inverse_of_permutation() {
        let c = FinGraph::cycle(3);
        let rot = GraphHom::new(c.clone(), c.clone(), vec![1, 2, 0], vec![1, 2, 0]).unwrap();
        let inv = rot.inverse().unwrap();
        assert_eq!(inv.compose(&rot).unwrap(), GraphHom::identity(&c));
        assert_eq!(rot.compose(&inv).unwrap(), GraphHom::identity(&c));
    }

    #[test]
    fn serde_shape() {
        let g = FinGraph::path(3);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"nodes":3,"edges":[[0,1],[1,2]]}"#);
        let back: FinGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<FinGraph>(r#"{"nodes":1,"edges":[[0,1]]}"#).is_err());
    }
}
