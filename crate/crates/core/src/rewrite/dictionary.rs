//! Translating between derivations of open graphs and 2-cells.
//!
//! A derivation `G <- E -> D` with feet carried through `K` is a 2-cell from
//! `G` to `D` whose middle is the context `E`. Conversely a monic 2-cell is
//! read as a one-step derivation whose context is its own middle.

use super::{Derivation, InterfaceProduction, IoDerivation, Production, RewriteError};
use crate::cospan::{vcompose, CellError, TwoCell};
use crate::graph::GraphHom;

/// The 2-cell `source <= E => result` presented by a derivation.
pub fn derivation_to_twocell(d: &IoDerivation) -> Result<TwoCell, RewriteError> {
    let k_to_e = d.derivation.k_to_e();
    Ok(TwoCell::new(
        d.source.clone(),
        d.result.clone(),
        d.derivation.e_to_g().clone(),
        d.derivation.e_to_d().clone(),
        k_to_e.compose(d.production.i_map())?,
        k_to_e.compose(d.production.o_map())?,
    )?)
}

/// Reads a 2-cell as the derivation `top <- middle -> bottom` along the
/// production `top.apex <- middle -> bottom.apex`, the identity match and the
/// middle as context, and checks both squares are pushouts. `None` for
/// non-discrete feet, non-monic legs, or a failed square.
pub fn twocell_to_derivation(alpha: &TwoCell) -> Result<Option<IoDerivation>, RewriteError> {
    if !alpha.top().has_discrete_feet() || !alpha.is_monic() {
        return Ok(None);
    }
    let production = Production::new(alpha.up_leg().clone(), alpha.down_leg().clone())?;
    let production =
        InterfaceProduction::new(production, alpha.mid_in().clone(), alpha.mid_out().clone())?;
    let derivation = Derivation::from_squares(
        production.base().clone(),
        GraphHom::identity(alpha.top().apex()),
        GraphHom::identity(alpha.middle()),
        alpha.up_leg().clone(),
        GraphHom::identity(alpha.bottom().apex()),
        alpha.down_leg().clone(),
    )?;
    Ok(derivation.map(|derivation| IoDerivation {
        production,
        derivation,
        source: alpha.top().clone(),
        result: alpha.bottom().clone(),
    }))
}

/// Vertical composite of the 2-cells of a chain of derivations, each step
/// starting where the previous one ended.
pub fn chain_twocell(steps: &[IoDerivation]) -> Result<TwoCell, RewriteError> {
    let Some((first, rest)) = steps.split_first() else {
        return Err(CellError::CellMismatch("a derivation chain needs at least one step").into());
    };
    let mut acc = derivation_to_twocell(first)?;
    for step in rest {
        acc = vcompose(&acc, &derivation_to_twocell(step)?)?;
    }
    Ok(acc)
}
