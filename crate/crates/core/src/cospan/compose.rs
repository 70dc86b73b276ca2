use super::{CellError, OpenGraph, TwoCell};
use crate::graph::{pullback, pushout, CoconeWitness, FinGraph, GraphHom};

/// `X -> X <- X` with identity legs.
pub fn identity_cospan(x: &FinGraph) -> OpenGraph {
    let id = GraphHom::identity(x);
    OpenGraph {
        in_leg: id.clone(),
        out_leg: id,
    }
}

/// `S ⊗_Y T` for `S: X -> Y` and `T: Y -> Z`: the apex is `S +_Y T`.
pub fn compose_cospans(s: &OpenGraph, t: &OpenGraph) -> Result<OpenGraph, CellError> {
    compose_cospans_with_witness(s, t).map(|(c, _)| c)
}

/// As [`compose_cospans`], also returning the pushout whose legs embed the
/// two apexes.
pub fn compose_cospans_with_witness(
    s: &OpenGraph,
    t: &OpenGraph,
) -> Result<(OpenGraph, CoconeWitness), CellError> {
    if s.right_foot() != t.left_foot() {
        return Err(CellError::FootMismatch(
            "right foot of the first cospan must equal the left foot of the second",
        ));
    }
    let w = pushout(&s.out_leg, &t.in_leg)?;
    let in_leg = w.leg(0).compose(&s.in_leg)?;
    let out_leg = w.leg(1).compose(&t.out_leg)?;
    Ok((OpenGraph { in_leg, out_leg }, w))
}

/// The 2-cell `S <= S => S` with identity legs.
pub fn identity_twocell(s: &OpenGraph) -> TwoCell {
    let id = GraphHom::identity(s.apex());
    TwoCell {
        top: s.clone(),
        bottom: s.clone(),
        up_leg: id.clone(),
        down_leg: id,
        mid_in: s.in_leg.clone(),
        mid_out: s.out_leg.clone(),
    }
}

/// Vertical composite of `alpha: L => S` and `beta: S => L'`. The middle is
/// the pullback of `alpha`'s down leg against `beta`'s up leg and the feet
/// maps are the mediating maps into it.
pub fn vcompose(alpha: &TwoCell, beta: &TwoCell) -> Result<TwoCell, CellError> {
    if alpha.bottom != beta.top {
        return Err(CellError::CellMismatch(
            "bottom of the first cell must equal the top of the second",
        ));
    }
    let pb = pullback(&alpha.down_leg, &beta.up_leg)?;
    let up = alpha.up_leg.compose(pb.leg(0))?;
    let down = beta.down_leg.compose(pb.leg(1))?;
    let mid_in = pb.mediate(&[&alpha.mid_in, &beta.mid_in])?;
    let mid_out = pb.mediate(&[&alpha.mid_out, &beta.mid_out])?;
    finish(
        alpha.is_monic() && beta.is_monic(),
        alpha.top.clone(),
        beta.bottom.clone(),
        up,
        down,
        mid_in,
        mid_out,
    )
}

/// Horizontal composite of `alpha` over `X -> Y` and `beta` over `Y -> Z`.
/// Tops, middles, and bottoms are each glued along `Y`; the legs are the
/// maps induced between those pushouts.
pub fn hcompose(alpha: &TwoCell, beta: &TwoCell) -> Result<TwoCell, CellError> {
    if alpha.right_foot() != beta.left_foot() {
        return Err(CellError::FootMismatch(
            "right foot of the first cell must equal the left foot of the second",
        ));
    }
    let (top, top_w) = compose_cospans_with_witness(&alpha.top, &beta.top)?;
    let (bottom, bottom_w) = compose_cospans_with_witness(&alpha.bottom, &beta.bottom)?;
    let middle_w = pushout(&alpha.mid_out, &beta.mid_in)?;

    let up = middle_w.mediate(&[
        &top_w.leg(0).compose(&alpha.up_leg)?,
        &top_w.leg(1).compose(&beta.up_leg)?,
    ])?;
    let down = middle_w.mediate(&[
        &bottom_w.leg(0).compose(&alpha.down_leg)?,
        &bottom_w.leg(1).compose(&beta.down_leg)?,
    ])?;
    let mid_in = middle_w.leg(0).compose(&alpha.mid_in)?;
    let mid_out = middle_w.leg(1).compose(&beta.mid_out)?;
    finish(
        alpha.is_monic() && beta.is_monic(),
        top,
        bottom,
        up,
        down,
        mid_in,
        mid_out,
    )
}

fn finish(
    inputs_monic: bool,
    top: OpenGraph,
    bottom: OpenGraph,
    up: GraphHom,
    down: GraphHom,
    mid_in: GraphHom,
    mid_out: GraphHom,
) -> Result<TwoCell, CellError> {
    if inputs_monic {
        if !up.is_mono() {
            return Err(CellError::InternalNonMonic("up"));
        }
        if !down.is_mono() {
            return Err(CellError::InternalNonMonic("down"));
        }
    }
    TwoCell::new_allow_nonmonic(top, bottom, up, down, mid_in, mid_out)
}
