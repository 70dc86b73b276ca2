//! Brute-force reference implementations, written against nothing but the
//! raw index maps so they share no code with the library's (co)limits.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cospan_rewrite::graph::{FinGraph, GraphHom};

/// Equivalence classes of `0..n` generated by `pairs`, by repeated
/// relaxation to the smallest reachable label.
fn classes(n: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for &(a, b) in pairs {
            let low = label[a].min(label[b]);
            for x in [a, b] {
                if label[x] != low {
                    label[x] = low;
                    changed = true;
                }
            }
        }
        // propagate through shared labels
        for i in 0..n {
            let l = label[label[i]];
            if l != label[i] {
                label[i] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    label
}

/// The quotient of `B + C` by `f(a) ~ g(a)`, as class labels on the summands.
pub struct PushoutOracle {
    pub node_class_b: Vec<usize>,
    pub node_class_c: Vec<usize>,
    pub edge_class_b: Vec<usize>,
    pub edge_class_c: Vec<usize>,
    pub node_count: usize,
    pub edge_count: usize,
}

pub fn oracle_pushout(f: &GraphHom, g: &GraphHom) -> PushoutOracle {
    let (b, c) = (f.cod(), g.cod());
    let (nb, eb) = (b.node_count(), b.edge_count());
    let node_pairs: Vec<_> = (0..f.dom().node_count()).map(|a| (f.node(a), nb + g.node(a))).collect();
    let edge_pairs: Vec<_> = (0..f.dom().edge_count()).map(|a| (f.edge(a), eb + g.edge(a))).collect();
    let nl = classes(nb + c.node_count(), &node_pairs);
    let el = classes(eb + c.edge_count(), &edge_pairs);
    let dense = |labels: &[usize]| -> (Vec<usize>, usize) {
        let distinct: BTreeSet<usize> = labels.iter().copied().collect();
        let index: Vec<usize> = labels.iter().map(|l| distinct.range(..l).count()).collect();
        (index, distinct.len())
    };
    let (nodes, node_count) = dense(&nl);
    let (edges, edge_count) = dense(&el);
    PushoutOracle {
        node_class_b: nodes[..nb].to_vec(),
        node_class_c: nodes[nb..].to_vec(),
        edge_class_b: edges[..eb].to_vec(),
        edge_class_c: edges[eb..].to_vec(),
        node_count,
        edge_count,
    }
}

/// Does `class -> target` defined by the two families agree where they
/// overlap and give a bijection onto `0..size`?
fn induced_bijection(size_classes: usize, pairs: impl Iterator<Item = (usize, usize)>, target_size: usize) -> bool {
    let mut image = vec![None; size_classes];
    for (class, t) in pairs {
        match image[class] {
            None => image[class] = Some(t),
            Some(prev) if prev != t => return false,
            _ => {}
        }
    }
    if size_classes != target_size {
        return false;
    }
    let hit: BTreeSet<usize> = image.iter().flatten().copied().collect();
    hit.len() == target_size && image.iter().all(Option::is_some)
}

/// Is `A -f-> B -b-> P <-c- C <-g- A` a pushout square?
pub fn oracle_is_pushout_square(f: &GraphHom, g: &GraphHom, b: &GraphHom, c: &GraphHom) -> bool {
    let commutes = (0..f.dom().node_count()).all(|a| b.node(f.node(a)) == c.node(g.node(a)))
        && (0..f.dom().edge_count()).all(|a| b.edge(f.edge(a)) == c.edge(g.edge(a)));
    if !commutes {
        return false;
    }
    let o = oracle_pushout(f, g);
    let p = b.cod();
    let nodes = o
        .node_class_b
        .iter()
        .enumerate()
        .map(|(x, &k)| (k, b.node(x)))
        .chain(o.node_class_c.iter().enumerate().map(|(x, &k)| (k, c.node(x))));
    let edges = o
        .edge_class_b
        .iter()
        .enumerate()
        .map(|(x, &k)| (k, b.edge(x)))
        .chain(o.edge_class_c.iter().enumerate().map(|(x, &k)| (k, c.edge(x))));
    induced_bijection(o.node_count, nodes, p.node_count()) && induced_bijection(o.edge_count, edges, p.edge_count())
}

/// Compatible pairs over `B -f-> D <-g- C`, listed with `C` outermost.
pub type Pairs = BTreeSet<(usize, usize)>;

pub fn oracle_pullback_pairs(f: &GraphHom, g: &GraphHom) -> (Pairs, Pairs) {
    let mut nodes = BTreeSet::new();
    for y in (0..g.dom().node_count()).rev() {
        for x in 0..f.dom().node_count() {
            if f.node(x) == g.node(y) {
                nodes.insert((x, y));
            }
        }
    }
    let mut edges = BTreeSet::new();
    for y in (0..g.dom().edge_count()).rev() {
        for x in 0..f.dom().edge_count() {
            if f.edge(x) == g.edge(y) {
                edges.insert((x, y));
            }
        }
    }
    (nodes, edges)
}

/// Is `B <-p- P -q-> C` over `B -f-> D <-g- C` a pullback square?
pub fn oracle_is_pullback_square(p: &GraphHom, q: &GraphHom, f: &GraphHom, g: &GraphHom) -> bool {
    let obj = p.dom();
    let commutes = (0..obj.node_count()).all(|x| f.node(p.node(x)) == g.node(q.node(x)))
        && (0..obj.edge_count()).all(|x| f.edge(p.edge(x)) == g.edge(q.edge(x)));
    if !commutes {
        return false;
    }
    let (nodes, edges) = oracle_pullback_pairs(f, g);
    let got_nodes: BTreeSet<_> = (0..obj.node_count()).map(|x| (p.node(x), q.node(x))).collect();
    let got_edges: BTreeSet<_> = (0..obj.edge_count()).map(|x| (p.edge(x), q.edge(x))).collect();
    got_nodes.len() == obj.node_count() && got_edges.len() == obj.edge_count() && got_nodes == nodes && got_edges == edges
}

/// All subgraphs of `g` as inclusion maps.
pub fn all_subgraphs(g: &FinGraph) -> Vec<GraphHom> {
    let mut out = Vec::new();
    for node_mask in 0u32..(1 << g.node_count()) {
        let nodes: Vec<usize> = (0..g.node_count()).filter(|n| node_mask & (1 << n) != 0).collect();
        let allowed: Vec<usize> = (0..g.edge_count())
            .filter(|&e| {
                let (s, t) = g.edges()[e];
                nodes.contains(&s) && nodes.contains(&t)
            })
            .collect();
        for edge_mask in 0u32..(1 << allowed.len()) {
            let edges: Vec<usize> = (0..allowed.len())
                .filter(|i| edge_mask & (1 << i) != 0)
                .map(|i| allowed[i])
                .collect();
            let pos = |n: usize| nodes.iter().position(|&m| m == n).unwrap();
            let sub = FinGraph::new(
                nodes.len(),
                edges.iter().map(|&e| (pos(g.edges()[e].0), pos(g.edges()[e].1))).collect(),
            )
            .unwrap();
            out.push(GraphHom::new(sub, g.clone(), nodes.clone(), edges).unwrap());
        }
    }
    out
}

/// Every pushout complement of `l: K >-> L` along `m: L -> G`, found by
/// trying every subgraph of `G` as the context. Complements of a mono are
/// monic into `G`, so up to isomorphism this misses none.
pub fn oracle_complements(l: &GraphHom, m: &GraphHom) -> Vec<FinGraph> {
    let k = l.dom();
    let mut found = Vec::new();
    for incl in all_subgraphs(m.cod()) {
        // factor m . l through the inclusion, if possible
        let nodes: Option<Vec<usize>> = (0..k.node_count())
            .map(|x| incl.node_map().iter().position(|&n| n == m.node(l.node(x))))
            .collect();
        let edges: Option<Vec<usize>> = (0..k.edge_count())
            .map(|x| incl.edge_map().iter().position(|&e| e == m.edge(l.edge(x))))
            .collect();
        let (Some(nodes), Some(edges)) = (nodes, edges) else {
            continue;
        };
        let Ok(k_to_e) = GraphHom::new(k.clone(), incl.dom().clone(), nodes, edges) else {
            continue;
        };
        if oracle_is_pushout_square(l, &k_to_e, m, &incl) {
            found.push(incl.dom().clone());
        }
    }
    found
}
