use super::{
    compose_cospans, compose_cospans_with_witness, hcompose, identity_cospan, identity_twocell,
    iso_class_witness, vcompose, CellError, OpenGraph, TwoCell,
};
use crate::graph::{coequalizer, coproduct, CoconeWitness, FinGraph, GraphHom};

/// The colimit of `R <- X -> S <- Y -> T` computed in one step as a quotient
/// of `R + S + T`, so it favours neither bracketing.
struct TernaryGlue {
    outer: CoconeWitness,
    inner: CoconeWitness,
    quotient: CoconeWitness,
}

impl TernaryGlue {
    fn new(r: &OpenGraph, s: &OpenGraph, t: &OpenGraph) -> Result<Self, CellError> {
        if r.right_foot() != s.left_foot() || s.right_foot() != t.left_foot() {
            return Err(CellError::FootMismatch("open graphs do not chain"));
        }
        let inner = coproduct(s.apex(), t.apex());
        let outer = coproduct(r.apex(), inner.object());
        let into_r = outer.leg(0).clone();
        let into_s = outer.leg(1).compose(inner.leg(0))?;
        let into_t = outer.leg(1).compose(inner.leg(1))?;

        // both shared feet at once: X + Y ⇉ R + S + T
        let feet = coproduct(s.left_foot(), s.right_foot());
        let from_left = feet.mediate(&[&into_r.compose(r.out_leg())?, &into_s.compose(s.out_leg())?])?;
        let from_right = feet.mediate(&[&into_s.compose(s.in_leg())?, &into_t.compose(t.in_leg())?])?;
        let quotient = coequalizer(&from_left, &from_right)?;
        Ok(Self {
            outer,
            inner,
            quotient,
        })
    }

    fn object(&self) -> &FinGraph {
        self.quotient.object()
    }

    /// Embedding of the `i`th summand.
    fn leg(&self, i: usize) -> Result<GraphHom, CellError> {
        let q = self.quotient.leg(0);
        let into_sum = match i {
            0 => self.outer.leg(0).clone(),
            _ => self.outer.leg(1).compose(self.inner.leg(i - 1))?,
        };
        Ok(q.compose(&into_sum)?)
    }

    fn mediate(&self, maps: [&GraphHom; 3]) -> Result<GraphHom, CellError> {
        let on_inner = self.inner.mediate(&[maps[1], maps[2]])?;
        let on_sum = self.outer.mediate(&[maps[0], &on_inner])?;
        Ok(self.quotient.mediate(&[&on_sum])?)
    }
}

/// Embeddings of `R`, `S`, `T` into `(R ⊗ S) ⊗ T` and the composite itself.
fn left_bracketing(
    r: &OpenGraph,
    s: &OpenGraph,
    t: &OpenGraph,
) -> Result<(OpenGraph, [GraphHom; 3]), CellError> {
    let (rs, w1) = compose_cospans_with_witness(r, s)?;
    let (rst, w2) = compose_cospans_with_witness(&rs, t)?;
    let legs = [
        w2.leg(0).compose(w1.leg(0))?,
        w2.leg(0).compose(w1.leg(1))?,
        w2.leg(1).clone(),
    ];
    Ok((rst, legs))
}

/// Embeddings of `R`, `S`, `T` into `R ⊗ (S ⊗ T)` and the composite itself.
fn right_bracketing(
    r: &OpenGraph,
    s: &OpenGraph,
    t: &OpenGraph,
) -> Result<(OpenGraph, [GraphHom; 3]), CellError> {
    let (st, w1) = compose_cospans_with_witness(s, t)?;
    let (rst, w2) = compose_cospans_with_witness(r, &st)?;
    let legs = [
        w2.leg(0).clone(),
        w2.leg(1).compose(w1.leg(0))?,
        w2.leg(1).compose(w1.leg(1))?,
    ];
    Ok((rst, legs))
}

/// The invertible 2-cell `(R ⊗ S) ⊗ T ⇒ R ⊗ (S ⊗ T)`. Its middle is the
/// three-way gluing of the apexes and its legs are the maps that gluing
/// induces into each bracketing.
pub fn associator(r: &OpenGraph, s: &OpenGraph, t: &OpenGraph) -> Result<TwoCell, CellError> {
    let glue = TernaryGlue::new(r, s, t)?;
    let (top, top_legs) = left_bracketing(r, s, t)?;
    let (bottom, bottom_legs) = right_bracketing(r, s, t)?;
    let up = glue.mediate([&top_legs[0], &top_legs[1], &top_legs[2]])?;
    let down = glue.mediate([&bottom_legs[0], &bottom_legs[1], &bottom_legs[2]])?;
    debug_assert_eq!(up.dom(), glue.object());
    let mid_in = glue.leg(0)?.compose(r.in_leg())?;
    let mid_out = glue.leg(2)?.compose(t.out_leg())?;
    TwoCell::new(top, bottom, up, down, mid_in, mid_out)
}

/// `S ⊗ id_Y ⇒ S` with middle `S`.
pub fn right_unitor(s: &OpenGraph) -> Result<TwoCell, CellError> {
    let id = identity_cospan(s.right_foot());
    let (top, w) = compose_cospans_with_witness(s, &id)?;
    TwoCell::new(
        top,
        s.clone(),
        w.leg(0).clone(),
        GraphHom::identity(s.apex()),
        s.in_leg().clone(),
        s.out_leg().clone(),
    )
}

/// `T ⇒ id_Y ⊗ T` with middle `T`.
pub fn left_unitor(t: &OpenGraph) -> Result<TwoCell, CellError> {
    let id = identity_cospan(t.left_foot());
    let (bottom, w) = compose_cospans_with_witness(&id, t)?;
    TwoCell::new(
        t.clone(),
        bottom,
        GraphHom::identity(t.apex()),
        w.leg(1).clone(),
        t.in_leg().clone(),
        t.out_leg().clone(),
    )
}

/// Both routes around the pentagon for `P ⊗ Q ⊗ R ⊗ S` agree up to
/// isomorphism.
pub fn pentagon_holds(
    p: &OpenGraph,
    q: &OpenGraph,
    r: &OpenGraph,
    s: &OpenGraph,
) -> Result<bool, CellError> {
    let pq = compose_cospans(p, q)?;
    let qr = compose_cospans(q, r)?;
    let rs = compose_cospans(r, s)?;

    let short = vcompose(&associator(&pq, r, s)?, &associator(p, q, &rs)?)?;

    let first = hcompose(&associator(p, q, r)?, &identity_twocell(s))?;
    let second = associator(p, &qr, s)?;
    let third = hcompose(&identity_twocell(p), &associator(q, r, s)?)?;
    let long = vcompose(&vcompose(&first, &second)?, &third)?;

    Ok(iso_class_witness(&short, &long)?.is_some())
}

/// The triangle for `S: X -> Y` and `T: Y -> Z`. The left unitor points into
/// `id_Y ⊗ T`, so the identity reads: the associator equals the right unitor
/// whiskered by `T` followed by `S` whiskered by the left unitor.
pub fn triangle_holds(s: &OpenGraph, t: &OpenGraph) -> Result<bool, CellError> {
    let id = identity_cospan(s.right_foot());
    let assoc = associator(s, &id, t)?;
    let via_unitors = vcompose(
        &hcompose(&right_unitor(s)?, &identity_twocell(t))?,
        &hcompose(&identity_twocell(s), &left_unitor(t)?)?,
    )?;
    Ok(iso_class_witness(&assoc, &via_unitors)?.is_some())
}

/// Both sides of the interchange law and the isomorphism between them, if
/// any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interchange {
    pub holds: bool,
    /// Vertical composites first, then glued horizontally.
    pub lhs: TwoCell,
    /// Horizontal composites first, then stacked vertically.
    pub rhs: TwoCell,
    pub witness: Option<GraphHom>,
}

/// Compares `(ss ∘v s2) ∘h (ts ∘v t2)` with `(ss ∘h ts) ∘v (s2 ∘h t2)`,
/// where `ss`, `s2` stack over `X -> Y` and `ts`, `t2` over `Y -> Z`.
pub fn check_interchange(
    ss: &TwoCell,
    s2: &TwoCell,
    ts: &TwoCell,
    t2: &TwoCell,
) -> Result<Interchange, CellError> {
    let wrap = |e: CellError| CellError::NotComposable(Box::new(e));
    let lhs = hcompose(&vcompose(ss, s2).map_err(wrap)?, &vcompose(ts, t2).map_err(wrap)?)
        .map_err(wrap)?;
    let rhs = vcompose(&hcompose(ss, ts).map_err(wrap)?, &hcompose(s2, t2).map_err(wrap)?)
        .map_err(wrap)?;
    let witness = iso_class_witness(&lhs, &rhs).map_err(wrap)?;
    Ok(Interchange {
        holds: witness.is_some(),
        lhs,
        rhs,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso_search;

    fn open_edge() -> OpenGraph {
        OpenGraph::with_discrete_feet(FinGraph::arrow(), &[0], &[1]).unwrap()
    }

    #[test]
    fn associator_of_identities_is_identity() {
        let x = FinGraph::discrete(2);
        let id = identity_cospan(&x);
        let a = associator(&id, &id, &id).unwrap();
        assert_eq!(a.middle(), &x);
        assert_eq!(a.up_leg(), &GraphHom::identity(&x));
        assert_eq!(a.down_leg(), &GraphHom::identity(&x));
        assert_eq!(a.mid_in(), &GraphHom::identity(&x));
    }

    #[test]
    fn associator_of_three_edges() {
        let e = open_edge();
        let a = associator(&e, &e, &e).unwrap();
        assert!(iso_search(a.middle(), &FinGraph::path(4)).unwrap().is_some());
        assert!(a.is_invertible());
    }

    #[test]
    fn associator_checks_feet() {
        let e = open_edge();
        let two = identity_cospan(&FinGraph::discrete(2));
        assert!(matches!(associator(&e, &two, &e), Err(CellError::FootMismatch(_))));
    }

    #[test]
    fn unitors_are_invertible() {
        let e = open_edge();
        for cell in [right_unitor(&e).unwrap(), left_unitor(&e).unwrap()] {
            assert!(cell.is_invertible());
            assert_eq!(cell.middle(), e.apex());
        }
        let id = identity_cospan(&FinGraph::discrete(1));
        let r = right_unitor(&id).unwrap();
        assert!(iso_class_witness(&r, &identity_twocell(&id)).unwrap().is_some());
    }

    #[test]
    fn pentagon_and_triangle_on_edges() {
        let e = open_edge();
        let fork = OpenGraph::with_discrete_feet(
            FinGraph::new(3, vec![(0, 1), (0, 2), (2, 1)]).unwrap(),
            &[1],
            &[2],
        )
        .unwrap();
        assert!(pentagon_holds(&e, &fork, &e, &fork).unwrap());
        assert!(triangle_holds(&e, &fork).unwrap());
        assert!(triangle_holds(&fork, &e).unwrap());
    }

    #[test]
    fn interchange_of_identities() {
        let e = open_edge();
        let id = identity_twocell(&e);
        let r = check_interchange(&id, &id, &id, &id).unwrap();
        assert!(r.holds);
        let w = r.witness.unwrap();
        assert!(w.is_iso());
        assert_eq!(w, GraphHom::identity(r.lhs.middle()));
    }

    #[test]
    fn interchange_reports_misarrangement() {
        let e = open_edge();
        let id = identity_twocell(&e);
        let other = identity_twocell(&identity_cospan(&FinGraph::discrete(1)));
        assert!(matches!(
            check_interchange(&id, &other, &id, &id),
            Err(CellError::NotComposable(_))
        ));
    }
}
