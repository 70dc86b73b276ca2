//! Interchange fails for spans of cospans of finite sets, and in the
//! two-element Boolean algebra.

use cospan_rewrite::laws::{all_set_choices, bool_counterexample, set_counterexample, SetSizes};

fn main() {
    let set = set_counterexample();
    println!("finite sets: lhs={} rhs={} holds={}", set.lhs_size, set.rhs_size, set.holds);
    for c in all_set_choices(SetSizes::COUNTEREXAMPLE) {
        println!("  other choice of points: lhs={} rhs={}", c.lhs_size, c.rhs_size);
    }
    let b = bool_counterexample();
    println!("boolean algebra: lhs={} rhs={}", b.lhs, b.rhs);
}
