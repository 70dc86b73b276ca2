use std::collections::HashMap;

use rayon::prelude::*;

use super::{interface_matches, io_derive, InterfaceProduction, RewriteError};
use crate::cospan::OpenGraph;
use crate::graph::FinGraph;

/// Start graphs and productions sharing one pair of discrete feet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    input: FinGraph,
    output: FinGraph,
    start: Vec<OpenGraph>,
    productions: Vec<InterfaceProduction>,
}

impl Grammar {
    pub fn new(
        input: FinGraph,
        output: FinGraph,
        start: Vec<OpenGraph>,
        productions: Vec<InterfaceProduction>,
    ) -> Result<Self, RewriteError> {
        if !input.is_discrete() {
            return Err(RewriteError::NotDiscrete("input interface"));
        }
        if !output.is_discrete() {
            return Err(RewriteError::NotDiscrete("output interface"));
        }
        let feet_ok = start
            .iter()
            .all(|g| g.left_foot() == &input && g.right_foot() == &output)
            && productions
                .iter()
                .all(|p| p.input() == &input && p.output() == &output);
        if !feet_ok {
            return Err(RewriteError::FootMismatch("grammar members must share the interfaces"));
        }
        Ok(Self {
            input,
            output,
            start,
            productions,
        })
    }

    pub fn input(&self) -> &FinGraph {
        &self.input
    }

    pub fn output(&self) -> &FinGraph {
        &self.output
    }

    pub fn start(&self) -> &[OpenGraph] {
        &self.start
    }

    pub fn productions(&self) -> &[InterfaceProduction] {
        &self.productions
    }
}

/// Open graphs up to feet-preserving isomorphism, bucketed by size so most
/// comparisons are skipped.
#[derive(Default)]
struct IsoClasses {
    members: Vec<OpenGraph>,
    buckets: HashMap<(usize, usize), Vec<usize>>,
}

impl IsoClasses {
    /// Adds `g` unless an isomorphic member exists; reports whether it was new.
    fn insert(&mut self, g: OpenGraph) -> Result<bool, RewriteError> {
        let key = (g.apex().node_count(), g.apex().edge_count());
        let bucket = self.buckets.entry(key).or_default();
        for &i in bucket.iter() {
            if self.members[i].iso_to(&g)?.is_some() {
                return Ok(false);
            }
        }
        bucket.push(self.members.len());
        self.members.push(g);
        Ok(true)
    }
}

/// Every open graph reachable from the start graphs by at most `depth`
/// derivations, one representative per isomorphism class, in discovery
/// order. Results with more than `size_cap` nodes are dropped and not
/// explored further; start graphs are always kept.
pub fn language(g: &Grammar, depth: usize, size_cap: usize) -> Result<Vec<OpenGraph>, RewriteError> {
    let mut seen = IsoClasses::default();
    let mut frontier = Vec::new();
    for s in &g.start {
        if seen.insert(s.clone())? {
            frontier.push(s.clone());
        }
    }
    for _ in 0..depth {
        if frontier.is_empty() {
            break;
        }
        // derivations from each frontier graph are independent; gathering
        // them in frontier order keeps discovery order deterministic
        let derived: Vec<Vec<OpenGraph>> = frontier
            .par_iter()
            .map(|graph| one_step(g, graph, size_cap))
            .collect::<Result<_, _>>()?;
        let mut next = Vec::new();
        for candidate in derived.into_iter().flatten() {
            if seen.insert(candidate.clone())? {
                next.push(candidate);
            }
        }
        frontier = next;
    }
    Ok(seen.members)
}

fn one_step(g: &Grammar, graph: &OpenGraph, size_cap: usize) -> Result<Vec<OpenGraph>, RewriteError> {
    let mut out = Vec::new();
    for p in &g.productions {
        for m in interface_matches(p, graph, false)? {
            if let Some(d) = io_derive(p, &m, graph)? {
                if d.result.apex().node_count() <= size_cap {
                    out.push(d.result);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphHom;
    use crate::rewrite::Production;

    /// Deletes any one edge; the interface names two further nodes so the
    /// match may put the edge anywhere relative to the feet.
    fn delete_any_edge() -> InterfaceProduction {
        let k = FinGraph::discrete(4);
        let left = FinGraph::new(4, vec![(2, 3)]).unwrap();
        let l = GraphHom::new(k.clone(), left, vec![0, 1, 2, 3], vec![]).unwrap();
        let p = Production::new(l, GraphHom::identity(&k)).unwrap();
        let i = GraphHom::new(FinGraph::discrete(1), k.clone(), vec![0], vec![]).unwrap();
        let o = GraphHom::new(FinGraph::discrete(1), k, vec![1], vec![]).unwrap();
        InterfaceProduction::new(p, i, o).unwrap()
    }

    fn path_grammar(productions: Vec<InterfaceProduction>) -> Grammar {
        let start = OpenGraph::with_discrete_feet(FinGraph::path(3), &[0], &[2]).unwrap();
        Grammar::new(FinGraph::discrete(1), FinGraph::discrete(1), vec![start], productions).unwrap()
    }

    #[test]
    fn no_productions_gives_start_graphs() {
        let g = path_grammar(vec![]);
        assert_eq!(language(&g, 3, 10).unwrap().len(), 1);
    }

    #[test]
    fn depth_zero_is_start_only() {
        let g = path_grammar(vec![delete_any_edge()]);
        assert_eq!(language(&g, 0, 10).unwrap(), g.start().to_vec());
    }

    #[test]
    fn edge_deletion_on_path() {
        let g = path_grammar(vec![delete_any_edge()]);
        let lang = language(&g, 2, 10).unwrap();
        let edges: Vec<usize> = lang.iter().map(|o| o.apex().edge_count()).collect();
        assert_eq!(edges, vec![2, 1, 1, 0]);
        assert_eq!(language(&g, 5, 10).unwrap().len(), 4);
        assert_eq!(language(&g, 1, 10).unwrap().len(), 3);
    }

    #[test]
    fn grammar_feet_must_agree() {
        let start = OpenGraph::with_discrete_feet(FinGraph::path(3), &[0, 1], &[2]).unwrap();
        let err = Grammar::new(FinGraph::discrete(1), FinGraph::discrete(1), vec![start], vec![]);
        assert!(matches!(err, Err(RewriteError::FootMismatch(_))));
    }
}
