//! Seeded random instances for the law suites.
//!
//! Graphs are grown outward from small seeds (feet, shared subgraphs) rather
//! than drawn uniformly, so that gluing and intersection actually happen.
//! Every case draws from its own stream of a ChaCha generator keyed by the
//! suite seed, which makes cases independent of evaluation order.

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cospan::{OpenGraph, TwoCell};
use crate::graph::{coequalizer, coproduct, pushout, FinGraph, GraphHom};
use crate::rewrite::{InterfaceProduction, Production};

/// The generator for case `case` of a run seeded with `seed`.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

/// A graph on `nodes` nodes with up to `max_edges` random edges (loops and
/// parallel edges allowed).
pub fn random_graph(rng: &mut impl Rng, nodes: usize, max_edges: usize) -> FinGraph {
    let edges = if nodes == 0 { 0 } else { rng.gen_range(0..=max_edges) };
    let edges = (0..edges)
        .map(|_| (rng.gen_range(0..nodes), rng.gen_range(0..nodes)))
        .collect();
    FinGraph::new(nodes, edges).expect("endpoints drawn in range")
}

/// A random discrete graph with at most `max` nodes.
pub fn random_feet(rng: &mut impl Rng, max: usize) -> FinGraph {
    FinGraph::discrete(rng.gen_range(0..=max))
}

/// An inclusion of `base` into a graph with at most `max_nodes` nodes (never
/// fewer than `base` has), keeping `base`'s nodes and edges first.
pub fn grow(rng: &mut impl Rng, base: &FinGraph, max_nodes: usize) -> GraphHom {
    let n = base.node_count();
    let extra_nodes = rng.gen_range(0..=max_nodes.saturating_sub(n));
    let total = n + extra_nodes;
    let mut edges = base.edges().to_vec();
    if total > 0 {
        for _ in 0..rng.gen_range(0..=3usize) {
            // bias new edges toward new nodes so growth is visible
            let pick = |rng: &mut dyn RngCore| {
                if extra_nodes > 0 && rng.gen_bool(0.5) {
                    rng.gen_range(n..total)
                } else {
                    rng.gen_range(0..total)
                }
            };
            edges.push((pick(rng), pick(rng)));
        }
    }
    let grown = FinGraph::new(total, edges).expect("endpoints in range");
    GraphHom::new(
        base.clone(),
        grown,
        (0..n).collect(),
        (0..base.edge_count()).collect(),
    )
    .expect("prefix inclusion")
}

/// A surjection identifying up to `merges` random pairs of nodes, and
/// sometimes a pair of edges that became parallel.
pub fn random_quotient(rng: &mut impl Rng, g: &FinGraph, merges: usize) -> GraphHom {
    if g.node_count() < 2 || merges == 0 {
        return GraphHom::identity(g);
    }
    let k = rng.gen_range(0..=merges);
    let one = FinGraph::discrete(k);
    let a: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.node_count())).collect();
    let b: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.node_count())).collect();
    let fa = GraphHom::new(one.clone(), g.clone(), a, vec![]).expect("points");
    let fb = GraphHom::new(one, g.clone(), b, vec![]).expect("points");
    let q = coequalizer(&fa, &fb).expect("parallel").into_parts().1.remove(0);

    let h = q.cod().clone();
    let parallel: Vec<(usize, usize)> = (0..h.edge_count())
        .flat_map(|e| (e + 1..h.edge_count()).map(move |f| (e, f)))
        .filter(|&(e, f)| h.edges()[e] == h.edges()[f])
        .collect();
    if parallel.is_empty() || rng.gen_bool(0.5) {
        return q;
    }
    let &(e, f) = parallel.choose(rng).expect("non-empty");
    let (s, t) = h.edges()[e];
    let arrow = FinGraph::arrow();
    let fe = GraphHom::new(arrow.clone(), h.clone(), vec![s, t], vec![e]).expect("edge");
    let ff = GraphHom::new(arrow, h.clone(), vec![s, t], vec![f]).expect("edge");
    let q2 = coequalizer(&fe, &ff).expect("parallel").into_parts().1.remove(0);
    q2.compose(&q).expect("composable")
}

/// An arbitrary morphism out of `dom`: a random quotient followed by growth
/// up to `max_nodes` (or `dom`'s quotient size, if larger).
pub fn random_hom(rng: &mut impl Rng, dom: &FinGraph, max_nodes: usize) -> GraphHom {
    let q = random_quotient(rng, dom, 2);
    let g = grow(rng, q.cod(), max_nodes);
    g.compose(&q).expect("composable")
}

/// A random subgraph inclusion of `g` containing the given nodes and edges.
pub fn random_subgraph(
    rng: &mut impl Rng,
    g: &FinGraph,
    nodes: &[usize],
    edges: &[usize],
) -> GraphHom {
    let mut keep_node: Vec<bool> = (0..g.node_count()).map(|_| rng.gen_bool(0.5)).collect();
    let mut keep_edge: Vec<bool> = (0..g.edge_count()).map(|_| rng.gen_bool(0.5)).collect();
    for &n in nodes {
        keep_node[n] = true;
    }
    for &e in edges {
        keep_edge[e] = true;
        let (s, t) = g.edges()[e];
        keep_node[s] = true;
        keep_node[t] = true;
    }
    for (e, &(s, t)) in g.edges().iter().enumerate() {
        keep_edge[e] &= keep_node[s] && keep_node[t];
    }
    let kept: Vec<usize> = (0..g.node_count()).filter(|&n| keep_node[n]).collect();
    let kept_edges: Vec<usize> = (0..g.edge_count()).filter(|&e| keep_edge[e]).collect();
    let pos = |n: usize| kept.binary_search(&n).expect("endpoint kept");
    let sub = FinGraph::new(
        kept.len(),
        kept_edges
            .iter()
            .map(|&e| (pos(g.source(e)), pos(g.target(e))))
            .collect(),
    )
    .expect("endpoints kept");
    GraphHom::new(sub, g.clone(), kept, kept_edges).expect("inclusion")
}

/// Nodes of `g` hit by any of the maps.
fn image_nodes(maps: &[&GraphHom]) -> Vec<usize> {
    let mut v: Vec<usize> = maps.iter().flat_map(|m| m.node_map().iter().copied()).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// An open graph `X -> G <- Y` whose apex has at most `max_nodes` nodes
/// (when `max_nodes` is at least 1 or the feet are empty). Feet may be
/// glued together by the legs.
pub fn random_open_graph(
    rng: &mut impl Rng,
    x: &FinGraph,
    y: &FinGraph,
    max_nodes: usize,
) -> OpenGraph {
    let feet = coproduct(x, y);
    let sum = feet.object().clone();
    // identify enough foot nodes to fit, then some more at random
    let mut q = GraphHom::identity(&sum);
    while q.cod().node_count() > max_nodes.max(1) {
        let n = q.cod().node_count();
        let one = FinGraph::discrete(1);
        let a = GraphHom::new(one.clone(), q.cod().clone(), vec![n - 2], vec![]).expect("point");
        let b = GraphHom::new(one, q.cod().clone(), vec![n - 1], vec![]).expect("point");
        let step = coequalizer(&a, &b).expect("parallel").into_parts().1.remove(0);
        q = step.compose(&q).expect("composable");
    }
    let q = random_quotient(rng, q.cod(), 1).compose(&q).expect("composable");
    let g = grow(rng, q.cod(), max_nodes).compose(&q).expect("composable");
    OpenGraph::new(
        g.compose(feet.leg(0)).expect("composable"),
        g.compose(feet.leg(1)).expect("composable"),
    )
    .expect("shared apex")
}

/// A map into `s.apex()` together with feet maps lifting `s`'s legs. With
/// `monic` it is a subgraph inclusion; otherwise nodes and edges may have up
/// to two preimages each.
fn random_cover(rng: &mut impl Rng, s: &OpenGraph, monic: bool) -> (GraphHom, GraphHom, GraphHom) {
    let apex = s.apex();
    let feet_nodes = image_nodes(&[s.in_leg(), s.out_leg()]);
    let max_copies = if monic { 1 } else { 2 };

    // copies[n] lists the cover nodes over n
    let mut copies: Vec<Vec<usize>> = vec![Vec::new(); apex.node_count()];
    let mut node_map = Vec::new();
    for (n, slot) in copies.iter_mut().enumerate() {
        let min = usize::from(feet_nodes.binary_search(&n).is_ok());
        for _ in 0..rng.gen_range(min..=max_copies) {
            slot.push(node_map.len());
            node_map.push(n);
        }
    }
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    for (e, &(s_, t)) in apex.edges().iter().enumerate() {
        if copies[s_].is_empty() || copies[t].is_empty() {
            continue;
        }
        for _ in 0..rng.gen_range(0..=max_copies) {
            let a = *copies[s_].choose(rng).expect("non-empty");
            let b = *copies[t].choose(rng).expect("non-empty");
            edges.push((a, b));
            edge_map.push(e);
        }
    }
    let middle = FinGraph::new(node_map.len(), edges).expect("endpoints in range");
    let down = GraphHom::new(middle.clone(), apex.clone(), node_map, edge_map).expect("cover map");
    let lift = |rng: &mut dyn RngCore, leg: &GraphHom| {
        let nodes = leg
            .node_map()
            .iter()
            .map(|&n| copies[n][rng.gen_range(0..copies[n].len())])
            .collect();
        GraphHom::new(leg.dom().clone(), middle.clone(), nodes, vec![]).expect("discrete feet")
    };
    let mid_in = lift(rng, s.in_leg());
    let mid_out = lift(rng, s.out_leg());
    (down, mid_in, mid_out)
}

/// A map out of `middle`: an inclusion when `monic`, otherwise a quotient
/// followed by an inclusion.
fn random_above(rng: &mut impl Rng, middle: &FinGraph, max_nodes: usize, monic: bool) -> GraphHom {
    if monic {
        grow(rng, middle, max_nodes)
    } else {
        random_hom(rng, middle, max_nodes)
    }
}

/// A 2-cell with bottom `s` and a freshly grown top, or with top `s` and a
/// freshly grown bottom when `s_is_top`.
pub fn random_cell_at(
    rng: &mut impl Rng,
    s: &OpenGraph,
    s_is_top: bool,
    max_nodes: usize,
    monic: bool,
) -> TwoCell {
    let (to_s, mid_in, mid_out) = random_cover(rng, s, monic);
    let to_new = random_above(rng, to_s.dom(), max_nodes, monic);
    let other = OpenGraph::new(
        to_new.compose(&mid_in).expect("composable"),
        to_new.compose(&mid_out).expect("composable"),
    )
    .expect("shared apex");
    let (top, bottom, up, down) = if s_is_top {
        (s.clone(), other, to_s, to_new)
    } else {
        (other, s.clone(), to_new, to_s)
    };
    TwoCell::new_allow_nonmonic(top, bottom, up, down, mid_in, mid_out)
        .expect("generated squares commute")
}

/// Four 2-cells arranged for the interchange law: `ss: L => S`, `s2: S =>
/// L'` over `X -> Y` and `ts: R => T`, `t2: T => R'` over `Y -> Z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadruple {
    pub ss: TwoCell,
    pub s2: TwoCell,
    pub ts: TwoCell,
    pub t2: TwoCell,
}

pub fn random_quadruple(rng: &mut impl Rng, max_nodes: usize, monic: bool) -> Quadruple {
    let feet_max = max_nodes.min(2);
    let x = random_feet(rng, feet_max);
    let y = random_feet(rng, feet_max);
    let z = random_feet(rng, feet_max);
    let s = random_open_graph(rng, &x, &y, max_nodes);
    let t = random_open_graph(rng, &y, &z, max_nodes);
    Quadruple {
        ss: random_cell_at(rng, &s, false, max_nodes, monic),
        s2: random_cell_at(rng, &s, true, max_nodes, monic),
        ts: random_cell_at(rng, &t, false, max_nodes, monic),
        t2: random_cell_at(rng, &t, true, max_nodes, monic),
    }
}

/// `count` open graphs chained along random discrete feet.
pub fn random_chain(rng: &mut impl Rng, count: usize, max_nodes: usize) -> Vec<OpenGraph> {
    let feet: Vec<FinGraph> = (0..=count).map(|_| random_feet(rng, 2)).collect();
    feet.windows(2)
        .map(|w| random_open_graph(rng, &w[0], &w[1], max_nodes))
        .collect()
}

/// A span `B <-< A -> C` whose left leg is monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoSpan {
    pub mono: GraphHom,
    pub other: GraphHom,
}

pub fn random_mono_span(rng: &mut impl Rng, max_nodes: usize) -> MonoSpan {
    let n = rng.gen_range(0..=max_nodes.min(3));
    let a = random_graph(rng, n, 3);
    MonoSpan {
        mono: grow(rng, &a, max_nodes),
        other: random_hom(rng, &a, max_nodes),
    }
}

/// A span `B <- A -> C` of arbitrary maps.
pub fn random_span(rng: &mut impl Rng, max_nodes: usize) -> (GraphHom, GraphHom) {
    let n = rng.gen_range(0..=max_nodes.min(3));
    let a = random_graph(rng, n, 3);
    (random_hom(rng, &a, max_nodes), random_hom(rng, &a, max_nodes))
}

/// A cospan `B -> D <- C` of arbitrary maps.
pub fn random_cospan(rng: &mut impl Rng, max_nodes: usize) -> (GraphHom, GraphHom) {
    let n = rng.gen_range(1..=max_nodes.max(1));
    let d = random_graph(rng, n, 4);
    (covering_part(rng, &d), covering_part(rng, &d))
}

/// A random cover of a random subgraph of `d`.
fn covering_part(rng: &mut impl Rng, d: &FinGraph) -> GraphHom {
    let sub = random_subgraph(rng, d, &[], &[]);
    let open = OpenGraph::with_discrete_feet(sub.dom().clone(), &[], &[]).expect("empty feet");
    let (cover, _, _) = random_cover(rng, &open, false);
    sub.compose(&cover).expect("composable")
}

/// `f` factored through the inclusion `incl`, whose image contains `f`'s.
fn factor_through(incl: &GraphHom, f: &GraphHom) -> GraphHom {
    let find = |map: &[usize], x: usize| map.iter().position(|&y| y == x).expect("inside image");
    let nodes = f.node_map().iter().map(|&x| find(incl.node_map(), x)).collect();
    let edges = f.edge_map().iter().map(|&x| find(incl.edge_map(), x)).collect();
    GraphHom::new(f.dom().clone(), incl.dom().clone(), nodes, edges).expect("factorisation")
}

/// A cube for the pullback/pushout exchange property:
///
/// ```text
///   top:    A' -> B', A' -> C', B' -> D', C' -> D'   (monos, a pullback)
///   bottom: A  -> B,  A  -> C,  B  -> D,  C  -> D    (monos)
///   vertical maps A' -> A, B' -> B, C' -> C, D' -> D
/// ```
///
/// The front faces (through `D`) are pushouts by construction. The bottom
/// `A` is either the full intersection of `B` and `C` or a random smaller
/// subgraph of it, so both outcomes of the property occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cube {
    pub top_ab: GraphHom,
    pub top_ac: GraphHom,
    pub top_bd: GraphHom,
    pub top_cd: GraphHom,
    pub bot_ab: GraphHom,
    pub bot_ac: GraphHom,
    pub bot_bd: GraphHom,
    pub bot_cd: GraphHom,
    pub down_a: GraphHom,
    pub down_b: GraphHom,
    pub down_c: GraphHom,
    pub down_d: GraphHom,
}

pub fn random_cube(rng: &mut impl Rng, max_nodes: usize) -> Cube {
    // top face: two subgraphs of D' and their intersection
    let n = rng.gen_range(1..=max_nodes.max(1));
    let d_top = random_graph(rng, n, 5);
    let b_in = random_subgraph(rng, &d_top, &[], &[]);
    let c_in = random_subgraph(rng, &d_top, &[], &[]);
    let meet = crate::graph::pullback(&b_in, &c_in).expect("common codomain");
    let top_bd = b_in;
    let top_cd = c_in;
    let top_ab = meet.leg(0).clone();
    let top_ac = meet.leg(1).clone();

    // glue something onto the intersection and push it through everything
    let phi = random_hom(rng, meet.object(), max_nodes);
    let to_d = top_bd.compose(&top_ab).expect("composable");
    let pb = pushout(&top_ab, &phi).expect("span");
    let pc = pushout(&top_ac, &phi).expect("span");
    let pd = pushout(&to_d, &phi).expect("span");
    let down_b = pb.leg(0).clone();
    let down_c = pc.leg(0).clone();
    let down_d = pd.leg(0).clone();
    let bot_bd = pb
        .mediate(&[&down_d.compose(&top_bd).expect("composable"), pd.leg(1)])
        .expect("cocone");
    let bot_cd = pc
        .mediate(&[&down_d.compose(&top_cd).expect("composable"), pd.leg(1)])
        .expect("cocone");

    // bottom corner: all of phi's codomain, or a part containing phi's image
    let full_ab = pb.leg(1).clone();
    let full_ac = pc.leg(1).clone();
    let a = phi.cod().clone();
    let shrink = if rng.gen_bool(0.5) {
        GraphHom::identity(&a)
    } else {
        random_subgraph(rng, &a, phi.node_map(), phi.edge_map())
    };
    let restrict = |h: &GraphHom| h.compose(&shrink).expect("composable");
    let back = factor_through(&shrink, &phi);
    Cube {
        top_ab,
        top_ac,
        top_bd,
        top_cd,
        bot_ab: restrict(&full_ab),
        bot_ac: restrict(&full_ac),
        bot_bd,
        bot_cd,
        down_a: back,
        down_b,
        down_c,
        down_d,
    }
}

/// A production `L <-< K >-> R` grown from a random glue graph.
pub fn random_production(rng: &mut impl Rng, max_nodes: usize) -> Production {
    let n = rng.gen_range(0..=max_nodes.min(2));
    let k = random_graph(rng, n, 2);
    let l = grow(rng, &k, max_nodes.min(3));
    let r = grow(rng, &k, max_nodes.min(3));
    Production::new(l, r).expect("grown legs are monic")
}

/// A production with a match that admits a pushout complement, built by
/// gluing the left graph onto a random context along the glue graph. The
/// target has at most `max_nodes` nodes when that is achievable.
pub fn random_applicable(rng: &mut impl Rng, max_nodes: usize) -> (Production, GraphHom) {
    for _ in 0..64 {
        let p = random_production(rng, max_nodes);
        let k_to_e = random_hom(rng, p.glue(), max_nodes.saturating_sub(p.left().node_count() - p.glue().node_count()));
        let w = pushout(p.l(), &k_to_e).expect("span");
        if w.object().node_count() <= max_nodes {
            return (p, w.leg(0).clone());
        }
    }
    let p = Production::identity(&FinGraph::empty());
    let m = GraphHom::identity(&FinGraph::empty());
    (p, m)
}

/// As [`random_applicable`], with discrete interfaces mapped into the glue
/// graph and the target given the feet those interfaces force.
pub fn random_io_applicable(
    rng: &mut impl Rng,
    max_nodes: usize,
) -> (InterfaceProduction, GraphHom, OpenGraph) {
    let (p, m) = random_applicable(rng, max_nodes);
    let k = p.glue().clone();
    let pick = |rng: &mut dyn RngCore| {
        let size = if k.node_count() == 0 { 0 } else { rng.gen_range(0..=2) };
        let nodes = (0..size).map(|_| rng.gen_range(0..k.node_count())).collect();
        GraphHom::new(FinGraph::discrete(size), k.clone(), nodes, vec![]).expect("points of K")
    };
    let i = pick(rng);
    let o = pick(rng);
    let ip = InterfaceProduction::new(p, i, o).expect("discrete interfaces");
    let g = OpenGraph::new(
        m.compose(&ip.input_in_left()).expect("composable"),
        m.compose(&ip.output_in_left()).expect("composable"),
    )
    .expect("shared apex");
    (ip, m, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_hom;

    #[test]
    fn same_stream_same_instance() {
        let a = random_quadruple(&mut case_rng(3, 5), 4, true);
        let b = random_quadruple(&mut case_rng(3, 5), 4, true);
        assert_eq!(a, b);
        let c = random_quadruple(&mut case_rng(3, 6), 4, true);
        assert_ne!(a, c);
    }

    #[test]
    fn generated_maps_are_valid() {
        for case in 0..50 {
            let mut rng = case_rng(11, case);
            let q = random_quadruple(&mut rng, 4, true);
            for cell in [&q.ss, &q.s2, &q.ts, &q.t2] {
                assert!(cell.is_monic());
                assert!(cell.top().apex().node_count() <= 4);
                assert!(cell.bottom().apex().node_count() <= 4);
                for h in [cell.up_leg(), cell.down_leg(), cell.mid_in(), cell.mid_out()] {
                    validate_hom(h).unwrap();
                }
            }
            let span = random_mono_span(&mut rng, 4);
            assert!(span.mono.is_mono());
            validate_hom(&span.other).unwrap();
            let (f, g) = random_cospan(&mut rng, 4);
            assert_eq!(f.cod(), g.cod());
        }
    }

    #[test]
    fn empty_size_gives_empty_graphs() {
        let q = random_quadruple(&mut case_rng(1, 0), 0, true);
        assert!(q.ss.top().apex().is_empty());
        assert!(q.t2.bottom().apex().is_empty());
    }

    #[test]
    fn applicable_matches_have_complements() {
        for case in 0..30 {
            let (p, m) = random_applicable(&mut case_rng(5, case), 5);
            assert!(m.cod().node_count() <= 5);
            assert!(crate::rewrite::pushout_complement(p.l(), &m).unwrap().is_some());
        }
    }
}
