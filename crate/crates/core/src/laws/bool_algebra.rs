//! The two-element Boolean algebra as the poset category `0 -> 1`.
//!
//! Products are meets and coproducts are joins. Hom-sets have at most one
//! arrow, so every arrow is monic and epic, yet `0 -> 1` has no inverse.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoolObj {
    Bottom,
    Top,
}

impl BoolObj {
    pub const ALL: [BoolObj; 2] = [BoolObj::Bottom, BoolObj::Top];

    pub fn meet(self, other: BoolObj) -> BoolObj {
        self.min(other)
    }

    pub fn join(self, other: BoolObj) -> BoolObj {
        self.max(other)
    }

    /// Number of arrows `self -> other`.
    pub fn hom_count(self, other: BoolObj) -> usize {
        usize::from(self <= other)
    }

    pub fn as_bit(self) -> u8 {
        match self {
            BoolObj::Bottom => 0,
            BoolObj::Top => 1,
        }
    }
}

impl std::fmt::Display for BoolObj {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_bit())
    }
}

/// The unique arrow `from -> to`, when `from <= to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoolArrow {
    pub from: BoolObj,
    pub to: BoolObj,
}

impl BoolArrow {
    pub fn new(from: BoolObj, to: BoolObj) -> Option<Self> {
        (from <= to).then_some(Self { from, to })
    }

    /// Left-cancellable: any two arrows `z -> from` agree, checked over all `z`.
    pub fn is_mono(&self) -> bool {
        BoolObj::ALL.iter().all(|&z| z.hom_count(self.from) <= 1)
    }

    /// Right-cancellable: any two arrows `to -> z` agree.
    pub fn is_epi(&self) -> bool {
        BoolObj::ALL.iter().all(|&z| self.to.hom_count(z) <= 1)
    }

    /// Has a two-sided inverse, i.e. an arrow back.
    pub fn is_iso(&self) -> bool {
        self.to.hom_count(self.from) == 1
    }
}

/// The seven objects of an interchange instance in the lattice. Maps are
/// implicit: a configuration is valid when every required arrow exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoolInstance {
    pub s_prime: BoolObj,
    pub s: BoolObj,
    pub s_second: BoolObj,
    pub t_prime: BoolObj,
    pub t: BoolObj,
    pub t_second: BoolObj,
    pub y: BoolObj,
}

impl BoolInstance {
    /// Every object equal to `v`.
    pub fn constant(v: BoolObj) -> Self {
        Self {
            s_prime: v,
            s: v,
            s_second: v,
            t_prime: v,
            t: v,
            t_second: v,
            y: v,
        }
    }

    /// The arrows the interchange diagram needs: the middles into `S`, `T`
    /// and the shared foot into every middle.
    pub fn is_valid(&self) -> bool {
        let arrows = [
            (self.s_prime, self.s),
            (self.s_second, self.s),
            (self.t_prime, self.t),
            (self.t_second, self.t),
            (self.y, self.s_prime),
            (self.y, self.s_second),
            (self.y, self.t_prime),
            (self.y, self.t_second),
        ];
        arrows.iter().all(|&(a, b)| a <= b)
    }

    /// Pull back first, then glue: `(S' ∧ S'') ∨ (T' ∧ T'')`.
    pub fn lhs(&self) -> BoolObj {
        self.s_prime
            .meet(self.s_second)
            .join(self.t_prime.meet(self.t_second))
    }

    /// Glue first, then pull back: `(S' ∨ T') ∧ (S'' ∨ T'')`.
    pub fn rhs(&self) -> BoolObj {
        self.s_prime
            .join(self.t_prime)
            .meet(self.s_second.join(self.t_second))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoolCounterexample {
    pub lhs: BoolObj,
    pub rhs: BoolObj,
}

/// `Y = S'' = T' = 0` and `S = S' = T = T'' = 1`.
pub fn bool_counterexample() -> BoolCounterexample {
    use BoolObj::{Bottom, Top};
    let inst = BoolInstance {
        s_prime: Top,
        s: Top,
        s_second: Bottom,
        t_prime: Bottom,
        t: Top,
        t_second: Top,
        y: Bottom,
    };
    debug_assert!(inst.is_valid());
    BoolCounterexample {
        lhs: inst.lhs(),
        rhs: inst.rhs(),
    }
}
