//! Universal-property checks by exhaustive enumeration.
//!
//! Graphs are presheaves, so a square is a pullback exactly when it is one
//! on nodes and on edges, i.e. when tested against the single node and the
//! single arrow. For each test object every commuting pair of maps must
//! factor through the corner by exactly one mediator.

use crate::graph::{all_homs, FinGraph, GraphError, GraphHom};

/// Is `p: P -> B`, `q: P -> C` over `f: B -> D`, `g: C -> D` a pullback,
/// decided by counting mediators from the representable test objects?
pub fn is_pullback_by_enumeration(
    p: &GraphHom,
    q: &GraphHom,
    f: &GraphHom,
    g: &GraphHom,
) -> Result<bool, GraphError> {
    if p.cod() != f.dom() || q.cod() != g.dom() || p.dom() != q.dom() || f.cod() != g.cod() {
        return Err(GraphError::DomainMismatch("square does not type-check"));
    }
    if f.compose(p)? != g.compose(q)? {
        return Ok(false);
    }
    for t in [FinGraph::discrete(1), FinGraph::arrow()] {
        let mediators = all_homs(&t, p.dom(), false)?;
        for b in all_homs(&t, f.dom(), false)? {
            for c in all_homs(&t, g.dom(), false)? {
                if f.compose(&b)? != g.compose(&c)? {
                    continue;
                }
                let mut count = 0;
                for u in &mediators {
                    if p.compose(u)? == b && q.compose(u)? == c {
                        count += 1;
                    }
                }
                if count != 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
