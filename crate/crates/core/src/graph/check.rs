//! Decide whether a given commuting square is a pushout or a pullback by
//! comparing it with the computed (co)limit.

use super::{pullback, pushout, GraphError, GraphHom};

/// Is the square
///
/// ```text
///   A --f--> B
///   |        |
///   g        b
///   v        v
///   C --c--> P
/// ```
///
/// a pushout? It must commute and the mediating map from the computed
/// pushout to `P` must be an isomorphism.
pub fn is_pushout_square(
    f: &GraphHom,
    g: &GraphHom,
    b: &GraphHom,
    c: &GraphHom,
) -> Result<bool, GraphError> {
    if b.dom() != f.cod() || c.dom() != g.cod() || b.cod() != c.cod() {
        return Err(GraphError::DomainMismatch("square does not type-check"));
    }
    if b.compose(f)? != c.compose(g)? {
        return Ok(false);
    }
    let w = pushout(f, g)?;
    Ok(w.mediate(&[b, c])?.is_iso())
}

/// Is the square `p: P -> B`, `q: P -> C`, `f: B -> D`, `g: C -> D` a
/// pullback?
pub fn is_pullback_square(
    p: &GraphHom,
    q: &GraphHom,
    f: &GraphHom,
    g: &GraphHom,
) -> Result<bool, GraphError> {
    if p.cod() != f.dom() || q.cod() != g.dom() || p.dom() != q.dom() {
        return Err(GraphError::DomainMismatch("square does not type-check"));
    }
    if f.compose(p)? != g.compose(q)? {
        return Ok(false);
    }
    let w = pullback(f, g)?;
    Ok(w.mediate(&[p, q])?.is_iso())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FinGraph;

    #[test]
    fn computed_pushout_passes() {
        let e = FinGraph::arrow();
        let f = GraphHom::new(FinGraph::discrete(1), e.clone(), vec![1], vec![]).unwrap();
        let g = GraphHom::new(FinGraph::discrete(1), e.clone(), vec![0], vec![]).unwrap();
        let w = pushout(&f, &g).unwrap();
        assert!(is_pushout_square(&f, &g, w.leg(0), w.leg(1)).unwrap());
        // the coproduct is a commuting cocone only if the point is not shared
        let t = GraphHom::terminal(&e);
        assert!(!is_pushout_square(&f, &g, &t, &t).unwrap());
    }

    #[test]
    fn computed_pullback_passes() {
        let p3 = FinGraph::path(3);
        let m = GraphHom::new(FinGraph::arrow(), p3.clone(), vec![1, 2], vec![1]).unwrap();
        let id = GraphHom::identity(&p3);
        let w = pullback(&m, &id).unwrap();
        assert!(is_pullback_square(w.leg(0), w.leg(1), &m, &id).unwrap());
        let e = FinGraph::arrow();
        let i = GraphHom::identity(&e);
        // the identity square over m is a pullback because m is monic
        assert!(is_pullback_square(&i, &i, &m, &m).unwrap());
    }
}
