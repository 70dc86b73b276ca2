//! Open graphs (cospans `X -> G <- Y`) as 1-cells and monic-legged spans of
//! cospans as 2-cells, with vertical and horizontal composition and the
//! coherence data of the resulting bicategory.
//!
//! Composition is strict on representations: two cells compose only when the
//! shared boundary is equal as a value, not merely isomorphic. Equality of
//! 2-cells is always up to isomorphism and goes through [`iso_class_equal`].

mod coherence;
mod compose;

use thiserror::Error;

use crate::graph::{FinGraph, GraphError, GraphHom, MapKind, MapSearch};

pub use coherence::{
    associator, check_interchange, left_unitor, pentagon_holds, right_unitor, triangle_holds,
    Interchange,
};
pub use compose::{
    compose_cospans, compose_cospans_with_witness, hcompose, identity_cospan, identity_twocell,
    vcompose,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("feet do not match: {0}")]
    FootMismatch(&'static str),
    #[error("2-cells are not vertically composable: {0}")]
    CellMismatch(&'static str),
    #[error("{0} leg is not monic")]
    NotMonic(&'static str),
    #[error("square through {0} does not commute")]
    SquareNotCommuting(&'static str),
    #[error("composite of monic 2-cells produced a non-monic {0} leg")]
    InternalNonMonic(&'static str),
    #[error("2-cells are not parallel")]
    NotParallel,
    #[error("2-cells cannot be arranged for interchange: {0}")]
    NotComposable(Box<CellError>),
}

/// A cospan `X -> G <- Y`: a graph with an input and an output interface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OpenGraph {
    in_leg: GraphHom,
    out_leg: GraphHom,
}

impl OpenGraph {
    pub fn new(in_leg: GraphHom, out_leg: GraphHom) -> Result<Self, CellError> {
        if in_leg.cod() != out_leg.cod() {
            return Err(CellError::FootMismatch("cospan legs must share their apex"));
        }
        Ok(Self { in_leg, out_leg })
    }

    /// An open graph whose feet are discrete graphs picking out the listed
    /// apex nodes, in order.
    pub fn with_discrete_feet(
        apex: FinGraph,
        inputs: &[usize],
        outputs: &[usize],
    ) -> Result<Self, CellError> {
        let in_leg = GraphHom::new(
            FinGraph::discrete(inputs.len()),
            apex.clone(),
            inputs.to_vec(),
            vec![],
        )?;
        let out_leg = GraphHom::new(
            FinGraph::discrete(outputs.len()),
            apex,
            outputs.to_vec(),
            vec![],
        )?;
        Ok(Self { in_leg, out_leg })
    }

    pub fn left_foot(&self) -> &FinGraph {
        self.in_leg.dom()
    }

    pub fn right_foot(&self) -> &FinGraph {
        self.out_leg.dom()
    }

    pub fn apex(&self) -> &FinGraph {
        self.in_leg.cod()
    }

    pub fn in_leg(&self) -> &GraphHom {
        &self.in_leg
    }

    pub fn out_leg(&self) -> &GraphHom {
        &self.out_leg
    }

    pub fn has_discrete_feet(&self) -> bool {
        self.left_foot().is_discrete() && self.right_foot().is_discrete()
    }

    /// An isomorphism of apexes that is the identity on both feet, i.e.
    /// commutes with both legs. `None` if the feet differ or no such
    /// isomorphism exists.
    pub fn iso_to(&self, other: &OpenGraph) -> Result<Option<GraphHom>, GraphError> {
        if self.left_foot() != other.left_foot() || self.right_foot() != other.right_foot() {
            return Ok(None);
        }
        let mut search = MapSearch::new(self.apex(), other.apex(), MapKind::Iso);
        for (a, b) in [(&self.in_leg, &other.in_leg), (&self.out_leg, &other.out_leg)] {
            for (&x, &y) in a.node_map().iter().zip(b.node_map()) {
                search = search.force_node(x, y);
            }
            for (&x, &y) in a.edge_map().iter().zip(b.edge_map()) {
                search = search.force_edge(x, y);
            }
        }
        search.first()
    }
}

/// A span of cospans `top <= middle => bottom` between parallel open graphs.
///
/// ```text
///          top.apex
///        ↗    ↑ up    ↖
///   X --> middle <-- Y
///        ↘    ↓ down  ↙
///          bottom.apex
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoCell {
    top: OpenGraph,
    bottom: OpenGraph,
    up_leg: GraphHom,
    down_leg: GraphHom,
    mid_in: GraphHom,
    mid_out: GraphHom,
}

impl TwoCell {
    /// Builds a 2-cell, checking that the feet agree, all four squares
    /// commute, and both legs are monic.
    pub fn new(
        top: OpenGraph,
        bottom: OpenGraph,
        up_leg: GraphHom,
        down_leg: GraphHom,
        mid_in: GraphHom,
        mid_out: GraphHom,
    ) -> Result<Self, CellError> {
        let cell = Self::new_allow_nonmonic(top, bottom, up_leg, down_leg, mid_in, mid_out)?;
        if !cell.up_leg.is_mono() {
            return Err(CellError::NotMonic("up"));
        }
        if !cell.down_leg.is_mono() {
            return Err(CellError::NotMonic("down"));
        }
        Ok(cell)
    }

    /// Same checks as [`TwoCell::new`] except monicity. Only the
    /// counterexample lab and the CLI's `--allow-nonmonic` mode build cells
    /// this way; the bicategory never does.
    pub(crate) fn new_allow_nonmonic(
        top: OpenGraph,
        bottom: OpenGraph,
        up_leg: GraphHom,
        down_leg: GraphHom,
        mid_in: GraphHom,
        mid_out: GraphHom,
    ) -> Result<Self, CellError> {
        if top.left_foot() != bottom.left_foot() || top.right_foot() != bottom.right_foot() {
            return Err(CellError::FootMismatch("top and bottom must share feet"));
        }
        if up_leg.cod() != top.apex() {
            return Err(CellError::Graph(GraphError::CodomainMismatch(
                "up leg must land in the top apex",
            )));
        }
        if down_leg.cod() != bottom.apex() {
            return Err(CellError::Graph(GraphError::CodomainMismatch(
                "down leg must land in the bottom apex",
            )));
        }
        let middle = up_leg.dom();
        if down_leg.dom() != middle || mid_in.cod() != middle || mid_out.cod() != middle {
            return Err(CellError::Graph(GraphError::DomainMismatch(
                "legs and feet maps must share the middle graph",
            )));
        }
        if mid_in.dom() != top.left_foot() || mid_out.dom() != top.right_foot() {
            return Err(CellError::FootMismatch("feet maps must start at the cospan feet"));
        }
        let squares = [
            (&up_leg, &mid_in, &top.in_leg, "top input"),
            (&up_leg, &mid_out, &top.out_leg, "top output"),
            (&down_leg, &mid_in, &bottom.in_leg, "bottom input"),
            (&down_leg, &mid_out, &bottom.out_leg, "bottom output"),
        ];
        for (leg, foot, expected, name) in squares {
            if &leg.compose(foot)? != expected {
                return Err(CellError::SquareNotCommuting(name));
            }
        }
        Ok(Self {
            top,
            bottom,
            up_leg,
            down_leg,
            mid_in,
            mid_out,
        })
    }

    pub fn top(&self) -> &OpenGraph {
        &self.top
    }

    pub fn bottom(&self) -> &OpenGraph {
        &self.bottom
    }

    pub fn middle(&self) -> &FinGraph {
        self.up_leg.dom()
    }

    pub fn up_leg(&self) -> &GraphHom {
        &self.up_leg
    }

    pub fn down_leg(&self) -> &GraphHom {
        &self.down_leg
    }

    pub fn mid_in(&self) -> &GraphHom {
        &self.mid_in
    }

    pub fn mid_out(&self) -> &GraphHom {
        &self.mid_out
    }

    pub fn left_foot(&self) -> &FinGraph {
        self.top.left_foot()
    }

    pub fn right_foot(&self) -> &FinGraph {
        self.top.right_foot()
    }

    pub fn is_monic(&self) -> bool {
        self.up_leg.is_mono() && self.down_leg.is_mono()
    }

    /// Both legs are isomorphisms.
    pub fn is_invertible(&self) -> bool {
        self.up_leg.is_iso() && self.down_leg.is_iso()
    }

    /// The same span read bottom-to-top. For an invertible cell this is its
    /// inverse under vertical composition.
    pub fn reversed(&self) -> TwoCell {
        TwoCell {
            top: self.bottom.clone(),
            bottom: self.top.clone(),
            up_leg: self.down_leg.clone(),
            down_leg: self.up_leg.clone(),
            mid_in: self.mid_in.clone(),
            mid_out: self.mid_out.clone(),
        }
    }

    /// Rebuild the cell on a middle graph relabelled by the isomorphism
    /// `relabel: middle -> M`.
    pub fn relabelled(&self, relabel: &GraphHom) -> Result<TwoCell, CellError> {
        let back = relabel
            .inverse()
            .ok_or(CellError::Graph(GraphError::DomainMismatch("relabelling must be invertible")))?;
        let up = self.up_leg.compose(&back)?;
        let down = self.down_leg.compose(&back)?;
        let mid_in = relabel.compose(&self.mid_in)?;
        let mid_out = relabel.compose(&self.mid_out)?;
        Self::new_allow_nonmonic(self.top.clone(), self.bottom.clone(), up, down, mid_in, mid_out)
    }
}

/// The isomorphism of middles witnessing that two parallel 2-cells are in
/// the same isomorphism class: it commutes with both legs and both feet
/// maps.
pub fn iso_class_witness(alpha: &TwoCell, beta: &TwoCell) -> Result<Option<GraphHom>, CellError> {
    if alpha.top != beta.top || alpha.bottom != beta.bottom {
        return Err(CellError::NotParallel);
    }
    let mut search = MapSearch::new(alpha.middle(), beta.middle(), MapKind::Iso)
        .node_filter(|x, y| {
            alpha.up_leg.node(x) == beta.up_leg.node(y)
                && alpha.down_leg.node(x) == beta.down_leg.node(y)
        })
        .edge_filter(|x, y| {
            alpha.up_leg.edge(x) == beta.up_leg.edge(y)
                && alpha.down_leg.edge(x) == beta.down_leg.edge(y)
        });
    for (a, b) in [(&alpha.mid_in, &beta.mid_in), (&alpha.mid_out, &beta.mid_out)] {
        for (&x, &y) in a.node_map().iter().zip(b.node_map()) {
            search = search.force_node(x, y);
        }
        for (&x, &y) in a.edge_map().iter().zip(b.edge_map()) {
            search = search.force_edge(x, y);
        }
    }
    Ok(search.first()?)
}

/// Whether two parallel 2-cells are isomorphic as spans of cospans.
pub fn iso_class_equal(alpha: &TwoCell, beta: &TwoCell) -> Result<bool, CellError> {
    Ok(iso_class_witness(alpha, beta)?.is_some())
}
