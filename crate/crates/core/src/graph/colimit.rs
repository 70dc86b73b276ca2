use super::union_find::UnionFind;
use super::{FinGraph, GraphError, GraphHom};

/// A computed colimit: the apex together with its structural legs.
///
/// Every witness produced here has jointly surjective legs, which is what
/// makes [`CoconeWitness::mediate`] a pointwise construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoconeWitness {
    object: FinGraph,
    legs: Vec<GraphHom>,
}

impl CoconeWitness {
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

    /// The unique map out of the colimit that composes with leg `i` to give
    /// `cocone[i]`. Fails with `NotACocone` when the maps disagree on an
    /// identified element, which is exactly when they fail to commute with
    /// the generating diagram.
    pub fn mediate(&self, cocone: &[&GraphHom]) -> Result<GraphHom, GraphError> {
        if cocone.len() != self.legs.len() {
            return Err(GraphError::DomainMismatch("cocone has the wrong number of maps"));
        }
        let Some(first) = cocone.first() else {
            return Err(GraphError::DomainMismatch("empty cocone"));
        };
        let target = first.cod().clone();
        let mut nodes = vec![None; self.object.node_count()];
        let mut edges = vec![None; self.object.edge_count()];
        for (leg, map) in self.legs.iter().zip(cocone) {
            if map.dom() != leg.dom() {
                return Err(GraphError::DomainMismatch("cocone map domain differs from leg"));
            }
            if map.cod() != &target {
                return Err(GraphError::CodomainMismatch("cocone maps must share a codomain"));
            }
            assign(&mut nodes, leg.node_map(), map.node_map())?;
            assign(&mut edges, leg.edge_map(), map.edge_map())?;
        }
        let nodes = nodes.into_iter().collect::<Option<Vec<_>>>();
        let edges = edges.into_iter().collect::<Option<Vec<_>>>();
        match (nodes, edges) {
            (Some(nodes), Some(edges)) => GraphHom::new(self.object.clone(), target, nodes, edges),
            _ => Err(GraphError::NotACocone),
        }
    }
}

fn assign(slots: &mut [Option<usize>], leg: &[usize], map: &[usize]) -> Result<(), GraphError> {
    for (&at, &value) in leg.iter().zip(map) {
        match slots[at] {
            Some(existing) if existing != value => return Err(GraphError::NotACocone),
            _ => slots[at] = Some(value),
        }
    }
    Ok(())
}

/// Disjoint union with `g`'s nodes and edges first.
pub fn coproduct(g: &FinGraph, h: &FinGraph) -> CoconeWitness {
    let (gn, ge) = (g.node_count(), g.edge_count());
    let mut edges = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|&(s, t)| (s + gn, t + gn)));
    let object = FinGraph {
        nodes: gn + h.node_count(),
        edges,
    };
    let left = GraphHom::from_maps(
        g.clone(),
        object.clone(),
        (0..gn).collect(),
        (0..ge).collect(),
    );
    let right = GraphHom::from_maps(
        h.clone(),
        object.clone(),
        (gn..gn + h.node_count()).collect(),
        (ge..ge + h.edge_count()).collect(),
    );
    CoconeWitness {
        object,
        legs: vec![left, right],
    }
}

/// Quotient of the common codomain by the equivalence generated by
/// `f(x) ~ g(x)`. Each class is represented by its smallest index and the
/// classes keep the order of their representatives.
pub fn coequalizer(f: &GraphHom, g: &GraphHom) -> Result<CoconeWitness, GraphError> {
    if f.dom() != g.dom() {
        return Err(GraphError::DomainMismatch("coequalizer needs parallel maps"));
    }
    if f.cod() != g.cod() {
        return Err(GraphError::CodomainMismatch("coequalizer needs parallel maps"));
    }
    let cod = f.cod();
    let mut node_classes = UnionFind::new(cod.node_count());
    for (&a, &b) in f.node_map().iter().zip(g.node_map()) {
        node_classes.union(a, b);
    }
    let mut edge_classes = UnionFind::new(cod.edge_count());
    for (&a, &b) in f.edge_map().iter().zip(g.edge_map()) {
        edge_classes.union(a, b);
    }
    let (node_q, node_count) = node_classes.classes();
    let (edge_q, edge_count) = edge_classes.classes();

    // The representative of each edge class is its first member in index order.
    let mut edges = vec![(0, 0); edge_count];
    let mut seen = vec![false; edge_count];
    for (e, &(s, t)) in cod.edges().iter().enumerate() {
        let c = edge_q[e];
        if !std::mem::replace(&mut seen[c], true) {
            edges[c] = (node_q[s], node_q[t]);
        }
    }
    let object = FinGraph {
        nodes: node_count,
        edges,
    };
    let q = GraphHom::from_maps(cod.clone(), object.clone(), node_q, edge_q);
    Ok(CoconeWitness {
        object,
        legs: vec![q],
    })
}

/// `B +_A C` for `f: A -> B`, `g: A -> C`, computed as the coequalizer of
/// the two routes `A -> B + C`. Legs are `[B -> P, C -> P]`.
pub fn pushout(f: &GraphHom, g: &GraphHom) -> Result<CoconeWitness, GraphError> {
    if f.dom() != g.dom() {
        return Err(GraphError::DomainMismatch("pushout needs a span with a common domain"));
    }
    let sum = coproduct(f.cod(), g.cod());
    let via_left = sum.leg(0).compose(f)?;
    let via_right = sum.leg(1).compose(g)?;
    let coeq = coequalizer(&via_left, &via_right)?;
    let q = coeq.leg(0);
    let legs = vec![q.compose(sum.leg(0))?, q.compose(sum.leg(1))?];
    Ok(CoconeWitness {
        object: coeq.object,
        legs,
    })
}

/// The mediating map out of a pushout for the cocone `(b, c)`.
pub fn mediate_pushout(
    w: &CoconeWitness,
    b: &GraphHom,
    c: &GraphHom,
) -> Result<GraphHom, GraphError> {
    w.mediate(&[b, c])
}
