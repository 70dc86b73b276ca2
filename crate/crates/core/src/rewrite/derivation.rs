use thiserror::Error;

use super::{InterfaceProduction, Production, RewriteError};
use crate::cospan::OpenGraph;
use crate::graph::check::is_pushout_square;
use crate::graph::{all_homs, pushout, FinGraph, GraphError, GraphHom, MapKind, MapSearch};

/// Every morphism `L -> G`, or every monic one, in search order.
pub fn find_matches(
    left: &FinGraph,
    g: &FinGraph,
    monic_only: bool,
) -> Result<Vec<GraphHom>, GraphError> {
    all_homs(left, g, monic_only)
}

/// Matches of an interface production into an open graph that send the
/// production's interfaces onto the open graph's feet.
pub fn interface_matches(
    p: &InterfaceProduction,
    g: &OpenGraph,
    monic_only: bool,
) -> Result<Vec<GraphHom>, RewriteError> {
    check_feet(p, g)?;
    let kind = if monic_only { MapKind::Mono } else { MapKind::Any };
    let mut search = MapSearch::new(p.base().left(), g.apex(), kind);
    for (to_left, leg) in [(p.input_in_left(), g.in_leg()), (p.output_in_left(), g.out_leg())] {
        for (&x, &y) in to_left.node_map().iter().zip(leg.node_map()) {
            search = search.force_node(x, y);
        }
    }
    Ok(search.collect()?)
}

/// Why a match admits no pushout complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GluingViolation {
    #[error("deleting node {node} would leave edge {edge} dangling")]
    Dangling { node: usize, edge: usize },
    #[error("match identifies deleted node {deleted} of L with node {other}")]
    IdentifiesNode { deleted: usize, other: usize },
    #[error("match identifies deleted edge {deleted} of L with edge {other}")]
    IdentifiesEdge { deleted: usize, other: usize },
}

/// Checks the dangling and identification conditions for `l: K >-> L` and
/// `m: L -> G`. Node and edge indices in a violation refer to `G` for
/// dangling and to `L` for identification.
pub fn gluing_condition(l: &GraphHom, m: &GraphHom) -> Result<(), GluingViolation> {
    let left = l.cod();
    let kept_nodes: Vec<bool> = (0..left.node_count()).map(|n| l.hits_node(n)).collect();
    let kept_edges: Vec<bool> = (0..left.edge_count()).map(|e| l.hits_edge(e)).collect();

    for x in 0..left.node_count() {
        for y in 0..left.node_count() {
            if x != y && !kept_nodes[x] && m.node(x) == m.node(y) {
                return Err(GluingViolation::IdentifiesNode { deleted: x, other: y });
            }
        }
    }
    for x in 0..left.edge_count() {
        for y in 0..left.edge_count() {
            if x != y && !kept_edges[x] && m.edge(x) == m.edge(y) {
                return Err(GluingViolation::IdentifiesEdge { deleted: x, other: y });
            }
        }
    }

    let g = m.cod();
    let mut deleted_node = vec![false; g.node_count()];
    for x in (0..left.node_count()).filter(|&x| !kept_nodes[x]) {
        deleted_node[m.node(x)] = true;
    }
    let mut deleted_edge = vec![false; g.edge_count()];
    for x in (0..left.edge_count()).filter(|&x| !kept_edges[x]) {
        deleted_edge[m.edge(x)] = true;
    }
    for (e, &(s, t)) in g.edges().iter().enumerate() {
        if deleted_edge[e] {
            continue;
        }
        if let Some(node) = [s, t].into_iter().find(|&n| deleted_node[n]) {
            return Err(GluingViolation::Dangling { node, edge: e });
        }
    }
    Ok(())
}

/// The context graph `E` with `K -> E >-> G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complement {
    pub k_to_e: GraphHom,
    pub e_to_g: GraphHom,
}

impl Complement {
    pub fn context(&self) -> &FinGraph {
        self.e_to_g.dom()
    }
}

/// `E = G` minus the image of `L \ l(K)`, keeping the surviving nodes and
/// edges in their original order. `None` when the gluing condition fails.
pub fn pushout_complement(l: &GraphHom, m: &GraphHom) -> Result<Option<Complement>, RewriteError> {
    if !l.is_mono() {
        return Err(RewriteError::NotMono("left leg"));
    }
    if m.dom() != l.cod() {
        return Err(GraphError::DomainMismatch("match must start at the left graph").into());
    }
    if gluing_condition(l, m).is_err() {
        return Ok(None);
    }
    let left = l.cod();
    let g = m.cod();
    let mut keep_node = vec![true; g.node_count()];
    for x in (0..left.node_count()).filter(|&x| !l.hits_node(x)) {
        keep_node[m.node(x)] = false;
    }
    let mut keep_edge = vec![true; g.edge_count()];
    for x in (0..left.edge_count()).filter(|&x| !l.hits_edge(x)) {
        keep_edge[m.edge(x)] = false;
    }

    let node_pos = positions(&keep_node);
    let edge_pos = positions(&keep_edge);
    let kept_nodes: Vec<usize> = (0..g.node_count()).filter(|&n| keep_node[n]).collect();
    let kept_edges: Vec<usize> = (0..g.edge_count()).filter(|&e| keep_edge[e]).collect();
    let edges = kept_edges
        .iter()
        .map(|&e| {
            let (s, t) = g.edges()[e];
            (node_pos[s].expect("gluing condition"), node_pos[t].expect("gluing condition"))
        })
        .collect();
    let context = FinGraph::new(kept_nodes.len(), edges)?;
    let e_to_g = GraphHom::new(context.clone(), g.clone(), kept_nodes, kept_edges)?;

    let glue = l.dom();
    let k_nodes = (0..glue.node_count())
        .map(|k| node_pos[m.node(l.node(k))].expect("gluing condition"))
        .collect();
    let k_edges = (0..glue.edge_count())
        .map(|k| edge_pos[m.edge(l.edge(k))].expect("gluing condition"))
        .collect();
    let k_to_e = GraphHom::new(glue.clone(), context, k_nodes, k_edges)?;
    Ok(Some(Complement { k_to_e, e_to_g }))
}

fn positions(keep: &[bool]) -> Vec<Option<usize>> {
    let mut next = 0;
    keep.iter()
        .map(|&k| {
            k.then(|| {
                next += 1;
                next - 1
            })
        })
        .collect()
}

/// A direct derivation `G <- E -> D`: two pushout squares over a production.
///
/// ```text
///   L <-l-- K --r--> R
///   |m      |        |
///   v       v        v
///   G <---- E -----> D
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    production: Production,
    matching: GraphHom,
    k_to_e: GraphHom,
    e_to_g: GraphHom,
    r_to_d: GraphHom,
    e_to_d: GraphHom,
}

impl Derivation {
    pub fn production(&self) -> &Production {
        &self.production
    }

    pub fn matching(&self) -> &GraphHom {
        &self.matching
    }

    pub fn source(&self) -> &FinGraph {
        self.matching.cod()
    }

    pub fn context(&self) -> &FinGraph {
        self.k_to_e.cod()
    }

    pub fn result(&self) -> &FinGraph {
        self.e_to_d.cod()
    }

    pub fn k_to_e(&self) -> &GraphHom {
        &self.k_to_e
    }

    pub fn e_to_g(&self) -> &GraphHom {
        &self.e_to_g
    }

    pub fn r_to_d(&self) -> &GraphHom {
        &self.r_to_d
    }

    pub fn e_to_d(&self) -> &GraphHom {
        &self.e_to_d
    }

    /// Re-checks both squares against freshly computed pushouts.
    pub fn squares_are_pushouts(&self) -> Result<bool, GraphError> {
        Ok(is_pushout_square(self.production.l(), &self.k_to_e, &self.matching, &self.e_to_g)?
            && is_pushout_square(self.production.r(), &self.k_to_e, &self.r_to_d, &self.e_to_d)?)
    }

    /// Assembles a derivation from given squares, checking that both are
    /// pushouts.
    pub(crate) fn from_squares(
        production: Production,
        matching: GraphHom,
        k_to_e: GraphHom,
        e_to_g: GraphHom,
        r_to_d: GraphHom,
        e_to_d: GraphHom,
    ) -> Result<Option<Self>, GraphError> {
        let d = Self {
            production,
            matching,
            k_to_e,
            e_to_g,
            r_to_d,
            e_to_d,
        };
        Ok(d.squares_are_pushouts()?.then_some(d))
    }
}

/// Rewrites `G` along `m`. `None` when the match violates the gluing
/// condition.
pub fn derive(p: &Production, m: &GraphHom) -> Result<Option<Derivation>, RewriteError> {
    let Some(c) = pushout_complement(p.l(), m)? else {
        return Ok(None);
    };
    let w = pushout(&c.k_to_e, p.r())?;
    let (_, mut legs) = w.into_parts();
    let r_to_d = legs.pop().expect("two legs");
    let e_to_d = legs.pop().expect("two legs");
    Ok(Some(Derivation {
        production: p.clone(),
        matching: m.clone(),
        k_to_e: c.k_to_e,
        e_to_g: c.e_to_g,
        r_to_d,
        e_to_d,
    }))
}

/// A derivation of open graphs: the underlying derivation plus the source
/// and result with their feet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IoDerivation {
    pub production: InterfaceProduction,
    pub derivation: Derivation,
    pub source: OpenGraph,
    pub result: OpenGraph,
}

fn check_feet(p: &InterfaceProduction, g: &OpenGraph) -> Result<(), RewriteError> {
    if g.left_foot() != p.input() {
        return Err(RewriteError::FootMismatch("input foot differs from the production's"));
    }
    if g.right_foot() != p.output() {
        return Err(RewriteError::FootMismatch("output foot differs from the production's"));
    }
    Ok(())
}

/// Rewrites the open graph `g` along `m`, carrying the feet through the
/// context graph. The match must send the production's interfaces exactly
/// onto `g`'s feet.
pub fn io_derive(
    p: &InterfaceProduction,
    m: &GraphHom,
    g: &OpenGraph,
) -> Result<Option<IoDerivation>, RewriteError> {
    check_feet(p, g)?;
    if m.cod() != g.apex() {
        return Err(GraphError::CodomainMismatch("match must land in the open graph's apex").into());
    }
    if &m.compose(&p.input_in_left())? != g.in_leg() {
        return Err(RewriteError::InterfaceIncompatible("input"));
    }
    if &m.compose(&p.output_in_left())? != g.out_leg() {
        return Err(RewriteError::InterfaceIncompatible("output"));
    }
    let Some(derivation) = derive(p.base(), m)? else {
        return Ok(None);
    };
    let to_result = derivation.e_to_d.compose(&derivation.k_to_e)?;
    let result = OpenGraph::new(to_result.compose(p.i_map())?, to_result.compose(p.o_map())?)?;
    Ok(Some(IoDerivation {
        production: p.clone(),
        derivation,
        source: g.clone(),
        result,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso_search;

    fn inclusion(dom: FinGraph, cod: &FinGraph, nodes: Vec<usize>, edges: Vec<usize>) -> GraphHom {
        GraphHom::new(dom, cod.clone(), nodes, edges).unwrap()
    }

    /// L = {a, c; a->c}, K = {a, c}, R = {a, c; c->c}.
    fn swap_edge_for_loop() -> Production {
        let k = FinGraph::discrete(2);
        let left = FinGraph::arrow();
        let right = FinGraph::new(2, vec![(1, 1)]).unwrap();
        Production::new(
            inclusion(k.clone(), &left, vec![0, 1], vec![]),
            inclusion(k, &right, vec![0, 1], vec![]),
        )
        .unwrap()
    }

    /// Triangle a->b, b->c, a->c.
    fn triangle() -> FinGraph {
        FinGraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn delete_edge() -> Production {
        let k = FinGraph::discrete(2);
        let id = GraphHom::identity(&k);
        Production::new(inclusion(k.clone(), &FinGraph::arrow(), vec![0, 1], vec![]), id).unwrap()
    }

    #[test]
    fn match_counts() {
        assert_eq!(find_matches(&FinGraph::discrete(1), &FinGraph::discrete(3), false).unwrap().len(), 3);
        assert_eq!(find_matches(&FinGraph::arrow(), &FinGraph::terminal(), false).unwrap().len(), 1);
        assert!(find_matches(&FinGraph::arrow(), &FinGraph::terminal(), true).unwrap().is_empty());
    }

    #[test]
    fn worked_example_match_is_found() {
        let p = swap_edge_for_loop();
        let m = inclusion(p.left().clone(), &triangle(), vec![0, 2], vec![2]);
        assert!(find_matches(p.left(), &triangle(), false).unwrap().contains(&m));
    }

    #[test]
    fn identity_production_complement_is_whole_graph() {
        let g = triangle();
        let m = inclusion(FinGraph::arrow(), &g, vec![0, 1], vec![0]);
        let c = pushout_complement(&GraphHom::identity(&FinGraph::arrow()), &m).unwrap().unwrap();
        assert_eq!(c.context(), &g);
        assert_eq!(c.e_to_g, GraphHom::identity(&g));
        assert_eq!(c.k_to_e, m);
    }

    #[test]
    fn worked_example_complement_and_result() {
        let p = swap_edge_for_loop();
        let g = triangle();
        let m = inclusion(p.left().clone(), &g, vec![0, 2], vec![2]);
        let c = pushout_complement(p.l(), &m).unwrap().unwrap();
        assert_eq!(c.context(), &FinGraph::path(3));

        let d = derive(&p, &m).unwrap().unwrap();
        let expected = FinGraph::new(3, vec![(0, 1), (1, 2), (2, 2)]).unwrap();
        assert!(iso_search(d.result(), &expected).unwrap().is_some());
        assert!(d.squares_are_pushouts().unwrap());
        assert!(d.e_to_g().is_mono() && d.e_to_d().is_mono());
    }

    #[test]
    fn dangling_node_blocks_complement() {
        let node = FinGraph::discrete(1);
        let l = GraphHom::initial(&node);
        let m = inclusion(node, &FinGraph::arrow(), vec![0], vec![]);
        assert_eq!(
            gluing_condition(&l, &m),
            Err(GluingViolation::Dangling { node: 0, edge: 0 })
        );
        assert_eq!(pushout_complement(&l, &m).unwrap(), None);
    }

    #[test]
    fn identifying_deleted_node_blocks_complement() {
        // delete one of two nodes while the match glues them together
        let two = FinGraph::discrete(2);
        let l = inclusion(FinGraph::discrete(1), &two, vec![0], vec![]);
        let m = inclusion(two, &FinGraph::discrete(1), vec![0, 0], vec![]);
        assert!(matches!(gluing_condition(&l, &m), Err(GluingViolation::IdentifiesNode { .. })));
    }

    #[test]
    fn identity_production_leaves_graph() {
        let g = triangle();
        let p = Production::identity(&FinGraph::arrow());
        let m = inclusion(FinGraph::arrow(), &g, vec![1, 2], vec![1]);
        let d = derive(&p, &m).unwrap().unwrap();
        assert!(iso_search(d.result(), &g).unwrap().is_some());
    }

    #[test]
    fn deleting_each_edge_of_a_path() {
        let g = FinGraph::path(3);
        let p = delete_edge();
        let results: Vec<FinGraph> = find_matches(p.left(), &g, false)
            .unwrap()
            .iter()
            .map(|m| derive(&p, m).unwrap().unwrap().result().clone())
            .collect();
        assert_eq!(results.len(), 2);
        assert_eq!(results[0], FinGraph::new(3, vec![(1, 2)]).unwrap());
        assert_eq!(results[1], FinGraph::new(3, vec![(0, 1)]).unwrap());
    }

    fn open_triangle() -> OpenGraph {
        OpenGraph::with_discrete_feet(triangle(), &[0], &[2]).unwrap()
    }

    fn interfaced(p: Production) -> InterfaceProduction {
        let k = p.glue().clone();
        let i = inclusion(FinGraph::discrete(1), &k, vec![0], vec![]);
        let o = inclusion(FinGraph::discrete(1), &k, vec![1], vec![]);
        InterfaceProduction::new(p, i, o).unwrap()
    }

    #[test]
    fn open_rewrite_deletes_edge_and_adds_loop() {
        let p = interfaced(swap_edge_for_loop());
        let g = open_triangle();
        let ms = interface_matches(&p, &g, false).unwrap();
        assert_eq!(ms.len(), 1);
        let d = io_derive(&p, &ms[0], &g).unwrap().unwrap();
        let expected = FinGraph::new(3, vec![(0, 1), (1, 2), (2, 2)]).unwrap();
        let expected = OpenGraph::with_discrete_feet(expected, &[0], &[2]).unwrap();
        assert!(d.result.iso_to(&expected).unwrap().is_some());
    }

    #[test]
    fn feet_away_from_rewrite_are_untouched() {
        // a production on two fresh nodes whose interface only names the
        // untouched ends
        let k = FinGraph::discrete(4);
        let left = FinGraph::new(4, vec![(2, 3)]).unwrap();
        let l = inclusion(k.clone(), &left, vec![0, 1, 2, 3], vec![]);
        let p = Production::new(l, GraphHom::identity(&k)).unwrap();
        let i = inclusion(FinGraph::discrete(1), &k, vec![0], vec![]);
        let o = inclusion(FinGraph::discrete(1), &k, vec![1], vec![]);
        let p = InterfaceProduction::new(p, i, o).unwrap();

        let g = OpenGraph::with_discrete_feet(FinGraph::path(4), &[0], &[3]).unwrap();
        let m = inclusion(left, g.apex(), vec![0, 3, 1, 2], vec![1]);
        let d = io_derive(&p, &m, &g).unwrap().unwrap();
        assert_eq!(d.result.in_leg().node_map(), &[0]);
        assert_eq!(d.result.out_leg().node_map(), &[3]);
        assert_eq!(d.result.apex(), &FinGraph::new(4, vec![(0, 1), (2, 3)]).unwrap());
    }

    #[test]
    fn interface_must_commute() {
        let p = interfaced(swap_edge_for_loop());
        let g = OpenGraph::with_discrete_feet(triangle(), &[1], &[2]).unwrap();
        let m = inclusion(p.base().left().clone(), g.apex(), vec![0, 2], vec![2]);
        assert_eq!(io_derive(&p, &m, &g), Err(RewriteError::InterfaceIncompatible("input")));
        let two_in = OpenGraph::with_discrete_feet(triangle(), &[0, 1], &[2]).unwrap();
        assert!(matches!(io_derive(&p, &m, &two_in), Err(RewriteError::FootMismatch(_))));
    }
}
