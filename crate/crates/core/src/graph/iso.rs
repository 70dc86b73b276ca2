//! Backtracking search for graph morphisms.
//!
//! One engine serves three jobs: enumerating all morphisms (matches),
//! enumerating monomorphisms, and finding isomorphisms. Nodes are assigned
//! first in index order, trying targets in ascending order, then edges the
//! same way, so results come out in lexicographic order of
//! `(node_map, edge_map)`.

use std::collections::HashMap;
use std::ops::ControlFlow;

use super::{FinGraph, GraphError, GraphHom, DEFAULT_MAX_NODES};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Any,
    Mono,
    Iso,
}

impl MapKind {
    fn injective(self) -> bool {
        !matches!(self, MapKind::Any)
    }
}

/// Forced node and edge assignments for [`constrained_iso_search`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IsoConstraints {
    pub nodes: Vec<(usize, usize)>,
    pub edges: Vec<(usize, usize)>,
}

type Filter<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;

/// Builder for a morphism search from `from` to `to`.
pub struct MapSearch<'a> {
    from: &'a FinGraph,
    to: &'a FinGraph,
    kind: MapKind,
    forced_nodes: Vec<Option<usize>>,
    forced_edges: Vec<Option<usize>>,
    infeasible: bool,
    error: Option<GraphError>,
    node_filter: Option<Filter<'a>>,
    edge_filter: Option<Filter<'a>>,
    max_nodes: usize,
}

impl<'a> MapSearch<'a> {
    pub fn new(from: &'a FinGraph, to: &'a FinGraph, kind: MapKind) -> Self {
        Self {
            from,
            to,
            kind,
            forced_nodes: vec![None; from.node_count()],
            forced_edges: vec![None; from.edge_count()],
            infeasible: false,
            error: None,
            node_filter: None,
            edge_filter: None,
            max_nodes: DEFAULT_MAX_NODES,
        }
    }

    /// Require node `x` to map to `y`.
    pub fn force_node(mut self, x: usize, y: usize) -> Self {
        if x >= self.from.node_count() || y >= self.to.node_count() {
            self.error.get_or_insert(GraphError::IndexOutOfRange {
                what: "forced node",
                index: x.max(y),
                bound: self.from.node_count().min(self.to.node_count()),
            });
            return self;
        }
        match self.forced_nodes[x] {
            Some(prev) if prev != y => self.infeasible = true,
            _ => self.forced_nodes[x] = Some(y),
        }
        self
    }

    /// Require edge `e` to map to `f`; endpoints are forced accordingly.
    pub fn force_edge(mut self, e: usize, f: usize) -> Self {
        if e >= self.from.edge_count() || f >= self.to.edge_count() {
            self.error.get_or_insert(GraphError::IndexOutOfRange {
                what: "forced edge",
                index: e.max(f),
                bound: self.from.edge_count().min(self.to.edge_count()),
            });
            return self;
        }
        match self.forced_edges[e] {
            Some(prev) if prev != f => self.infeasible = true,
            _ => self.forced_edges[e] = Some(f),
        }
        let (s, t) = self.from.edges()[e];
        let (fs, ft) = self.to.edges()[f];
        self.force_node(s, fs).force_node(t, ft)
    }

    pub fn constraints(self, c: &IsoConstraints) -> Self {
        let s = c.nodes.iter().fold(self, |s, &(x, y)| s.force_node(x, y));
        c.edges.iter().fold(s, |s, &(e, f)| s.force_edge(e, f))
    }

    /// Only allow node `x` to map to `y` when `filter(x, y)` holds.
    pub fn node_filter(mut self, filter: impl Fn(usize, usize) -> bool + 'a) -> Self {
        self.node_filter = Some(Box::new(filter));
        self
    }

    pub fn edge_filter(mut self, filter: impl Fn(usize, usize) -> bool + 'a) -> Self {
        self.edge_filter = Some(Box::new(filter));
        self
    }

    pub fn max_nodes(mut self, limit: usize) -> Self {
        self.max_nodes = limit;
        self
    }

    /// Visit every morphism in search order until `visit` breaks.
    pub fn for_each(
        self,
        mut visit: impl FnMut(GraphHom) -> ControlFlow<()>,
    ) -> Result<(), GraphError> {
        if let Some(err) = self.error {
            return Err(err);
        }
        self.from.check_size(self.max_nodes)?;
        self.to.check_size(self.max_nodes)?;
        if self.infeasible {
            return Ok(());
        }
        let Some(mut engine) = Engine::prepare(self) else {
            return Ok(());
        };
        let _ = engine.assign_node(0, &mut visit);
        Ok(())
    }

    pub fn first(self) -> Result<Option<GraphHom>, GraphError> {
        let mut found = None;
        self.for_each(|h| {
            found = Some(h);
            ControlFlow::Break(())
        })?;
        Ok(found)
    }

    pub fn collect(self) -> Result<Vec<GraphHom>, GraphError> {
        let mut all = Vec::new();
        self.for_each(|h| {
            all.push(h);
            ControlFlow::Continue(())
        })?;
        Ok(all)
    }

    pub fn count(self) -> Result<usize, GraphError> {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        })?;
        Ok(n)
    }
}

struct Engine<'a> {
    from: &'a FinGraph,
    to: &'a FinGraph,
    kind: MapKind,
    from_mult: Vec<Vec<u32>>,
    to_mult: Vec<Vec<u32>>,
    node_candidates: Vec<Vec<usize>>,
    forced_edges: Vec<Option<usize>>,
    edge_filter: Option<Filter<'a>>,
    to_edges_between: HashMap<(usize, usize), Vec<usize>>,
    nodes: Vec<usize>,
    edges: Vec<usize>,
    used_nodes: Vec<bool>,
    used_edges: Vec<bool>,
}

impl<'a> Engine<'a> {
    fn prepare(search: MapSearch<'a>) -> Option<Self> {
        let MapSearch {
            from,
            to,
            kind,
            forced_nodes,
            forced_edges,
            node_filter,
            edge_filter,
            ..
        } = search;

        if kind == MapKind::Iso
            && (from.node_count() != to.node_count() || from.edge_count() != to.edge_count())
        {
            return None;
        }
        let from_profile = from.degree_profile();
        let to_profile = to.degree_profile();
        if kind == MapKind::Iso {
            let mut a = from_profile.clone();
            let mut b = to_profile.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return None;
            }
        }

        let profile_ok = |x: usize, y: usize| {
            let (fo, fi, fl) = from_profile[x];
            let (to_, ti, tl) = to_profile[y];
            match kind {
                MapKind::Iso => (fo, fi, fl) == (to_, ti, tl),
                MapKind::Mono => fo <= to_ && fi <= ti && fl <= tl,
                MapKind::Any => fl == 0 || tl > 0,
            }
        };
        let node_candidates: Vec<Vec<usize>> = (0..from.node_count())
            .map(|x| {
                let range: Vec<usize> = match forced_nodes[x] {
                    Some(y) => vec![y],
                    None => (0..to.node_count()).collect(),
                };
                range
                    .into_iter()
                    .filter(|&y| profile_ok(x, y))
                    .filter(|&y| node_filter.as_ref().is_none_or(|f| f(x, y)))
                    .collect()
            })
            .collect();
        if node_candidates.iter().any(Vec::is_empty) {
            return None;
        }

        let mut to_edges_between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (f, &pair) in to.edges().iter().enumerate() {
            to_edges_between.entry(pair).or_default().push(f);
        }

        Some(Self {
            from,
            to,
            kind,
            from_mult: from.multiplicities(),
            to_mult: to.multiplicities(),
            node_candidates,
            forced_edges,
            edge_filter,
            to_edges_between,
            nodes: vec![usize::MAX; from.node_count()],
            edges: vec![usize::MAX; from.edge_count()],
            used_nodes: vec![false; to.node_count()],
            used_edges: vec![false; to.edge_count()],
        })
    }

    fn pair_ok(&self, a: u32, b: u32) -> bool {
        match self.kind {
            MapKind::Iso => a == b,
            MapKind::Mono => a <= b,
            MapKind::Any => a == 0 || b > 0,
        }
    }

    /// Edge multiplicities between `x` and every already placed node (and
    /// `x` itself) are compatible with the images.
    fn consistent(&self, x: usize, y: usize) -> bool {
        if !self.pair_ok(self.from_mult[x][x], self.to_mult[y][y]) {
            return false;
        }
        (0..x).all(|u| {
            let v = self.nodes[u];
            self.pair_ok(self.from_mult[x][u], self.to_mult[y][v])
                && self.pair_ok(self.from_mult[u][x], self.to_mult[v][y])
        })
    }

    fn assign_node(
        &mut self,
        x: usize,
        visit: &mut impl FnMut(GraphHom) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if x == self.from.node_count() {
            return self.assign_edge(0, visit);
        }
        for i in 0..self.node_candidates[x].len() {
            let y = self.node_candidates[x][i];
            if self.kind.injective() && self.used_nodes[y] {
                continue;
            }
            if !self.consistent(x, y) {
                continue;
            }
            self.nodes[x] = y;
            self.used_nodes[y] = true;
            let flow = self.assign_node(x + 1, visit);
            self.used_nodes[y] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn assign_edge(
        &mut self,
        e: usize,
        visit: &mut impl FnMut(GraphHom) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if e == self.from.edge_count() {
            return visit(GraphHom::from_maps(
                self.from.clone(),
                self.to.clone(),
                self.nodes.clone(),
                self.edges.clone(),
            ));
        }
        let (s, t) = self.from.edges()[e];
        let key = (self.nodes[s], self.nodes[t]);
        let Some(candidates) = self.to_edges_between.get(&key).cloned() else {
            return ControlFlow::Continue(());
        };
        for f in candidates {
            if self.kind.injective() && self.used_edges[f] {
                continue;
            }
            if self.forced_edges[e].is_some_and(|g| g != f) {
                continue;
            }
            if self.edge_filter.as_ref().is_some_and(|filter| !filter(e, f)) {
                continue;
            }
            self.edges[e] = f;
            self.used_edges[f] = true;
            let flow = self.assign_edge(e + 1, visit);
            self.used_edges[f] = false;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// The first isomorphism `g -> h` in search order, if any.
pub fn iso_search(g: &FinGraph, h: &FinGraph) -> Result<Option<GraphHom>, GraphError> {
    MapSearch::new(g, h, MapKind::Iso).first()
}

/// As [`iso_search`], but the isomorphism must extend the forced pairs.
pub fn constrained_iso_search(
    g: &FinGraph,
    h: &FinGraph,
    constraints: &IsoConstraints,
) -> Result<Option<GraphHom>, GraphError> {
    MapSearch::new(g, h, MapKind::Iso)
        .constraints(constraints)
        .first()
}

/// Every morphism `g -> h` (or every monomorphism) in search order.
pub fn all_homs(g: &FinGraph, h: &FinGraph, monic_only: bool) -> Result<Vec<GraphHom>, GraphError> {
    let kind = if monic_only { MapKind::Mono } else { MapKind::Any };
    MapSearch::new(g, h, kind).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_homs(g: &FinGraph, h: &FinGraph) -> usize {
        // every node map, then every edge map over the allowed targets
        let n = g.node_count();
        if n > 0 && h.node_count() == 0 {
            return 0;
        }
        let mut count = 0;
        let mut map = vec![0; n];
        loop {
            let mut product = 1usize;
            for &(s, t) in g.edges() {
                let choices = h
                    .edges()
                    .iter()
                    .filter(|&&(a, b)| a == map[s] && b == map[t])
                    .count();
                product *= choices;
            }
            count += product;
            // odometer increment
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                map[i] += 1;
                if map[i] < h.node_count() {
                    break;
                }
                map[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn identity_found_first() {
        let g = FinGraph::new(3, vec![(0, 1), (1, 2), (0, 1)]).unwrap();
        assert_eq!(iso_search(&g, &g).unwrap(), Some(GraphHom::identity(&g)));
    }

    #[test]
    fn path_is_not_triangle() {
        assert_eq!(iso_search(&FinGraph::path(3), &FinGraph::cycle(3)).unwrap(), None);
    }

    #[test]
    fn permuted_cycles_are_isomorphic() {
        let a = FinGraph::cycle(3);
        let b = FinGraph::new(3, vec![(2, 0), (1, 2), (0, 1)]).unwrap();
        let iso = iso_search(&a, &b).unwrap().unwrap();
        let inv = iso.inverse().unwrap();
        assert_eq!(inv.compose(&iso).unwrap(), GraphHom::identity(&a));
        assert_eq!(iso.compose(&inv).unwrap(), GraphHom::identity(&b));
    }

    #[test]
    fn parallel_edges_respect_multiplicity() {
        let a = FinGraph::new(2, vec![(0, 1), (0, 1), (1, 0)]).unwrap();
        let b = FinGraph::new(2, vec![(0, 1), (1, 0), (1, 0)]).unwrap();
        let c = FinGraph::new(2, vec![(0, 1), (1, 0), (0, 0)]).unwrap();
        assert!(iso_search(&a, &b).unwrap().is_some());
        assert!(iso_search(&a, &c).unwrap().is_none());
    }

    #[test]
    fn constraints_empty_matches_plain_search() {
        let a = FinGraph::cycle(4);
        let plain = iso_search(&a, &a).unwrap();
        let constrained = constrained_iso_search(&a, &a, &IsoConstraints::default()).unwrap();
        assert_eq!(plain, constrained);
    }

    #[test]
    fn constraint_onto_wrong_degree_fails() {
        // node 3 is isolated in g; node 1 of the path has degree two
        let g = FinGraph::new(4, vec![(0, 1), (1, 2)]).unwrap();
        let c = IsoConstraints {
            nodes: vec![(3, 1)],
            edges: vec![],
        };
        assert_eq!(constrained_iso_search(&g, &g, &c).unwrap(), None);
    }

    #[test]
    fn forced_rotation_is_extended() {
        let a = FinGraph::cycle(3);
        let c = IsoConstraints {
            nodes: vec![(0, 1)],
            edges: vec![],
        };
        let iso = constrained_iso_search(&a, &a, &c).unwrap().unwrap();
        assert_eq!(iso.node_map(), &[1, 2, 0]);
        assert_eq!(iso.edge_map(), &[1, 2, 0]);
    }

    #[test]
    fn size_bound_is_enforced() {
        let big = FinGraph::discrete(DEFAULT_MAX_NODES + 1);
        assert!(matches!(iso_search(&big, &big), Err(GraphError::SizeBound { .. })));
        assert!(MapSearch::new(&big, &big, MapKind::Iso)
            .max_nodes(100)
            .first()
            .unwrap()
            .is_some());
    }

    #[test]
    fn hom_counts_agree_with_brute_force() {
        let graphs = [
            FinGraph::empty(),
            FinGraph::discrete(2),
            FinGraph::arrow(),
            FinGraph::terminal(),
            FinGraph::path(3),
            FinGraph::cycle(2),
            FinGraph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap(),
        ];
        for g in &graphs {
            for h in &graphs {
                let ours = all_homs(g, h, false).unwrap();
                assert_eq!(ours.len(), brute_force_homs(g, h), "{g} -> {h}");
                for pair in ours.windows(2) {
                    let key = |x: &GraphHom| (x.node_map().to_vec(), x.edge_map().to_vec());
                    assert!(key(&pair[0]) < key(&pair[1]));
                }
                let monos = all_homs(g, h, true).unwrap();
                let expected = ours.iter().filter(|x| x.is_mono()).count();
                assert_eq!(monos.len(), expected);
            }
        }
    }
}
