//! Interchange failing for non-monic 2-cells, with finite sets modelled as
//! discrete graphs.
//!
//! The left side pulls back first and glues second; the right side glues
//! first. With two-element middles collapsing onto singletons the two orders
//! produce five and six elements.

use serde::Serialize;

use crate::cospan::{check_interchange, CellError, Interchange, OpenGraph, TwoCell};
use crate::graph::{FinGraph, GraphHom};

/// Sizes of the four middles `S'`, `S''`, `T'`, `T''`. The cospans `S`, `T`
/// and the shared foot `Y` are singletons; the outer feet are empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetSizes {
    pub s_prime: usize,
    pub s_second: usize,
    pub t_prime: usize,
    pub t_second: usize,
}

impl SetSizes {
    /// Two-element `S'`, `S''`, `T'` and a singleton `T''`.
    pub const COUNTEREXAMPLE: SetSizes = SetSizes {
        s_prime: 2,
        s_second: 2,
        t_prime: 2,
        t_second: 1,
    };

    pub const SINGLETONS: SetSizes = SetSizes {
        s_prime: 1,
        s_second: 1,
        t_prime: 1,
        t_second: 1,
    };

    fn as_array(self) -> [usize; 4] {
        [self.s_prime, self.s_second, self.t_prime, self.t_second]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SetCounterexample {
    pub lhs_size: usize,
    pub rhs_size: usize,
    pub holds: bool,
}

fn point(cod: &FinGraph, at: usize) -> GraphHom {
    GraphHom::new(FinGraph::discrete(1), cod.clone(), vec![at], vec![]).expect("point in range")
}

fn collapse(n: usize) -> GraphHom {
    GraphHom::new(FinGraph::discrete(n), FinGraph::discrete(1), vec![0; n], vec![]).expect("constant map")
}

/// One cell per middle: `S' => S`, `S => S''`, `T' => T`, `T => T''`, with
/// `Y` sent to the chosen element of each middle.
pub fn set_cells(sizes: SetSizes, points: [usize; 4]) -> Result<[TwoCell; 4], CellError> {
    let one = FinGraph::discrete(1);
    let none = |g: &FinGraph| GraphHom::initial(g);
    let s = OpenGraph::new(none(&one), point(&one, 0))?;
    let t = OpenGraph::new(point(&one, 0), none(&one))?;

    let [a, b, c, d] = sizes.as_array();
    let (sp, ss, tp, ts) = (
        FinGraph::discrete(a),
        FinGraph::discrete(b),
        FinGraph::discrete(c),
        FinGraph::discrete(d),
    );

    // middles left of Y: feet map from the empty X and the point of Y
    let left_cell = |m: &FinGraph, at: usize, middle_is_top: bool| -> Result<TwoCell, CellError> {
        let n = m.node_count();
        let id = GraphHom::identity(m);
        let other = OpenGraph::new(none(m), point(m, at))?;
        let (top, bottom, up, down) = if middle_is_top {
            (other, s.clone(), id, collapse(n))
        } else {
            (s.clone(), other, collapse(n), id)
        };
        TwoCell::new_allow_nonmonic(top, bottom, up, down, none(m), point(m, at))
    };
    let right_cell = |m: &FinGraph, at: usize, middle_is_top: bool| -> Result<TwoCell, CellError> {
        let n = m.node_count();
        let id = GraphHom::identity(m);
        let other = OpenGraph::new(point(m, at), none(m))?;
        let (top, bottom, up, down) = if middle_is_top {
            (other, t.clone(), id, collapse(n))
        } else {
            (t.clone(), other, collapse(n), id)
        };
        TwoCell::new_allow_nonmonic(top, bottom, up, down, point(m, at), none(m))
    };
    Ok([
        left_cell(&sp, points[0], true)?,
        left_cell(&ss, points[1], false)?,
        right_cell(&tp, points[2], true)?,
        right_cell(&ts, points[3], false)?,
    ])
}

/// Both sides of interchange for the given sizes and point choices.
pub fn set_interchange(sizes: SetSizes, points: [usize; 4]) -> Result<Interchange, CellError> {
    let [ss, s2, ts, t2] = set_cells(sizes, points)?;
    check_interchange(&ss, &s2, &ts, &t2)
}

fn summarize(i: &Interchange) -> SetCounterexample {
    SetCounterexample {
        lhs_size: i.lhs.middle().node_count(),
        rhs_size: i.rhs.middle().node_count(),
        holds: i.holds,
    }
}

/// The counterexample with `Y` sent to the first element of every middle.
pub fn set_counterexample() -> SetCounterexample {
    let i = set_interchange(SetSizes::COUNTEREXAMPLE, [0; 4]).expect("the instance is well formed");
    summarize(&i)
}

/// Results for every choice of where `Y` lands in each middle.
pub fn all_set_choices(sizes: SetSizes) -> Vec<SetCounterexample> {
    let [a, b, c, d] = sizes.as_array();
    let mut out = Vec::new();
    for p0 in 0..a {
        for p1 in 0..b {
            for p2 in 0..c {
                for p3 in 0..d {
                    let i = set_interchange(sizes, [p0, p1, p2, p3]).expect("well formed");
                    out.push(summarize(&i));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_versus_six() {
        let c = set_counterexample();
        assert_eq!((c.lhs_size, c.rhs_size), (5, 6));
        assert!(!c.holds);
    }

    #[test]
    fn every_choice_gives_five_and_six() {
        let all = all_set_choices(SetSizes::COUNTEREXAMPLE);
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|c| (c.lhs_size, c.rhs_size, c.holds) == (5, 6, false)));
    }

    #[test]
    fn singletons_agree() {
        let all = all_set_choices(SetSizes::SINGLETONS);
        assert_eq!(all, vec![SetCounterexample { lhs_size: 1, rhs_size: 1, holds: true }]);
    }

    #[test]
    fn cells_are_not_monic() {
        let cells = set_cells(SetSizes::COUNTEREXAMPLE, [0; 4]).unwrap();
        assert!(!cells[0].is_monic());
        assert!(cells[3].is_monic());
    }
}
