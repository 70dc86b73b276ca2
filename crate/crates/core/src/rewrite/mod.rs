//! Double-pushout rewriting of graphs and of open graphs.
//!
//! A production `L <- K -> R` with monic legs rewrites `G` along a match
//! `L -> G` by first cutting out the part of `L` not in `K` (the pushout
//! complement) and then gluing in `R`. Giving the production discrete
//! interfaces `I`, `O` mapped into `K` lets it act on open graphs while
//! keeping their feet fixed.

mod derivation;
mod dictionary;
mod grammar;

use thiserror::Error;

use crate::cospan::CellError;
use crate::graph::{FinGraph, GraphError, GraphHom};

pub use derivation::{
    derive, find_matches, gluing_condition, interface_matches, io_derive, pushout_complement,
    Complement, Derivation, GluingViolation, IoDerivation,
};
pub use dictionary::{chain_twocell, derivation_to_twocell, twocell_to_derivation};
pub use grammar::{language, Grammar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error("{0} is not monic")]
    NotMono(&'static str),
    #[error("{0} must be discrete")]
    NotDiscrete(&'static str),
    #[error("feet do not match: {0}")]
    FootMismatch(&'static str),
    #[error("match is not compatible with the {0} interface")]
    InterfaceIncompatible(&'static str),
}

/// A span `L <- K -> R` with monic legs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Production {
    l: GraphHom,
    r: GraphHom,
}

impl Production {
    pub fn new(l: GraphHom, r: GraphHom) -> Result<Self, RewriteError> {
        if l.dom() != r.dom() {
            return Err(GraphError::DomainMismatch("production legs must share the glue graph").into());
        }
        if !l.is_mono() {
            return Err(RewriteError::NotMono("left leg"));
        }
        if !r.is_mono() {
            return Err(RewriteError::NotMono("right leg"));
        }
        Ok(Self { l, r })
    }

    /// `L <- L -> L` with identity legs: rewriting with it changes nothing.
    pub fn identity(g: &FinGraph) -> Self {
        let id = GraphHom::identity(g);
        Self { l: id.clone(), r: id }
    }

    pub fn left(&self) -> &FinGraph {
        self.l.cod()
    }

    pub fn glue(&self) -> &FinGraph {
        self.l.dom()
    }

    pub fn right(&self) -> &FinGraph {
        self.r.cod()
    }

    pub fn l(&self) -> &GraphHom {
        &self.l
    }

    pub fn r(&self) -> &GraphHom {
        &self.r
    }
}

/// A production together with discrete interfaces `I -> K <- O`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InterfaceProduction {
    base: Production,
    i_map: GraphHom,
    o_map: GraphHom,
}

impl InterfaceProduction {
    pub fn new(base: Production, i_map: GraphHom, o_map: GraphHom) -> Result<Self, RewriteError> {
        if !i_map.dom().is_discrete() {
            return Err(RewriteError::NotDiscrete("input interface"));
        }
        if !o_map.dom().is_discrete() {
            return Err(RewriteError::NotDiscrete("output interface"));
        }
        if i_map.cod() != base.glue() || o_map.cod() != base.glue() {
            return Err(GraphError::CodomainMismatch("interface maps must land in the glue graph").into());
        }
        Ok(Self { base, i_map, o_map })
    }

    pub fn base(&self) -> &Production {
        &self.base
    }

    pub fn input(&self) -> &FinGraph {
        self.i_map.dom()
    }

    pub fn output(&self) -> &FinGraph {
        self.o_map.dom()
    }

    pub fn i_map(&self) -> &GraphHom {
        &self.i_map
    }

    pub fn o_map(&self) -> &GraphHom {
        &self.o_map
    }

    /// `I -> L`, the interface as seen by a match.
    pub fn input_in_left(&self) -> GraphHom {
        self.base.l.compose(&self.i_map).expect("i_map lands in the glue graph")
    }

    pub fn output_in_left(&self) -> GraphHom {
        self.base.l.compose(&self.o_map).expect("o_map lands in the glue graph")
    }
}
