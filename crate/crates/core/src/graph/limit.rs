use std::collections::HashMap;

use super::{FinGraph, GraphError, GraphHom};

/// A computed limit: the apex together with its projections.
///
/// Projections of every witness built here are jointly monic, so a cone
/// factors through the limit iff each point of its apex has a matching
/// tuple of images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeWitness {
    object: FinGraph,
    legs: Vec<GraphHom>,
}

impl ConeWitness {
    pub fn object(&self) -> &FinGraph {
        &self.object
    }

    pub fn legs(&self) -> &[GraphHom] {
        &self.legs
    }

    pub fn leg(&self, i: usize) -> &GraphHom {
        &self.legs[i]
    }

    pub fn into_parts(self) -> (FinGraph, Vec<GraphHom>) {
        (self.object, self.legs)
    }

    /// The unique map into the limit whose composite with leg `i` is
    /// `cone[i]`.
    pub fn mediate(&self, cone: &[&GraphHom]) -> Result<GraphHom, GraphError> {
        if cone.len() != self.legs.len() {
            return Err(GraphError::CodomainMismatch("cone has the wrong number of maps"));
        }
        let Some(first) = cone.first() else {
            return Err(GraphError::CodomainMismatch("empty cone"));
        };
        let source = first.dom().clone();
        for (leg, map) in self.legs.iter().zip(cone) {
            if map.cod() != leg.cod() {
                return Err(GraphError::CodomainMismatch("cone map codomain differs from leg"));
            }
            if map.dom() != &source {
                return Err(GraphError::DomainMismatch("cone maps must share a domain"));
            }
        }
        let node_index: HashMap<Vec<usize>, usize> = (0..self.object.node_count())
            .map(|n| (self.legs.iter().map(|l| l.node(n)).collect(), n))
            .collect();
        let edge_index: HashMap<Vec<usize>, usize> = (0..self.object.edge_count())
            .map(|e| (self.legs.iter().map(|l| l.edge(e)).collect(), e))
            .collect();
        let nodes = (0..source.node_count())
            .map(|t| {
                let key: Vec<usize> = cone.iter().map(|m| m.node(t)).collect();
                node_index.get(&key).copied().ok_or(GraphError::NotACone)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let edges = (0..source.edge_count())
            .map(|t| {
                let key: Vec<usize> = cone.iter().map(|m| m.edge(t)).collect();
                edge_index.get(&key).copied().ok_or(GraphError::NotACone)
            })
            .collect::<Result<Vec<_>, _>>()?;
        GraphHom::new(source, self.object.clone(), nodes, edges)
    }
}

/// `g × h` with lexicographically ordered pairs.
pub fn product(g: &FinGraph, h: &FinGraph) -> ConeWitness {
    let tg = GraphHom::terminal(g);
    let th = GraphHom::terminal(h);
    pullback(&tg, &th).expect("maps into the terminal graph share a codomain")
}

/// `B ×_D C` for `f: B -> D`, `g: C -> D`. Nodes are the pairs `(b, c)` with
/// `f(b) = g(c)` and edges the pairs of edges with equal images, both in
/// lexicographic order. Legs are the two projections.
pub fn pullback(f: &GraphHom, g: &GraphHom) -> Result<ConeWitness, GraphError> {
    if f.cod() != g.cod() {
        return Err(GraphError::CodomainMismatch("pullback needs a cospan with a common codomain"));
    }
    let (b, c) = (f.dom(), g.dom());

    // fibres of g over each node / edge of D
    let mut node_fibre: HashMap<usize, Vec<usize>> = HashMap::new();
    for n in 0..c.node_count() {
        node_fibre.entry(g.node(n)).or_default().push(n);
    }
    let mut edge_fibre: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in 0..c.edge_count() {
        edge_fibre.entry(g.edge(e)).or_default().push(e);
    }

    let mut node_pairs = Vec::new();
    for x in 0..b.node_count() {
        for &y in node_fibre.get(&f.node(x)).into_iter().flatten() {
            node_pairs.push((x, y));
        }
    }
    let index: HashMap<(usize, usize), usize> =
        node_pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut edge_pairs = Vec::new();
    for x in 0..b.edge_count() {
        for &y in edge_fibre.get(&f.edge(x)).into_iter().flatten() {
            edge_pairs.push((x, y));
        }
    }
    let edges = edge_pairs
        .iter()
        .map(|&(x, y)| {
            let s = index[&(b.source(x), c.source(y))];
            let t = index[&(b.target(x), c.target(y))];
            (s, t)
        })
        .collect();
    let object = FinGraph {
        nodes: node_pairs.len(),
        edges,
    };
    let left = GraphHom::from_maps(
        object.clone(),
        b.clone(),
        node_pairs.iter().map(|p| p.0).collect(),
        edge_pairs.iter().map(|p| p.0).collect(),
    );
    let right = GraphHom::from_maps(
        object.clone(),
        c.clone(),
        node_pairs.iter().map(|p| p.1).collect(),
        edge_pairs.iter().map(|p| p.1).collect(),
    );
    Ok(ConeWitness {
        object,
        legs: vec![left, right],
    })
}

/// The mediating map into a pullback for the cone `(p, q)`.
pub fn mediate_pullback(
    w: &ConeWitness,
    p: &GraphHom,
    q: &GraphHom,
) -> Result<GraphHom, GraphError> {
    w.mediate(&[p, q])
}
