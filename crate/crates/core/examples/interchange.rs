//! Random quadruples of 2-cells satisfy the interchange law.

use cospan_rewrite::cospan::check_interchange;
use cospan_rewrite::laws::generate::{case_rng, random_quadruple};
use cospan_rewrite::laws::{random_interchange_suite, SuiteConfig};

fn main() {
    let q = random_quadruple(&mut case_rng(7, 0), 4, true);
    let r = check_interchange(&q.ss, &q.s2, &q.ts, &q.t2).unwrap();
    println!("one instance: holds={} middle={}", r.holds, r.lhs.middle());

    let report = random_interchange_suite(&SuiteConfig::new(7, 200, 4));
    println!("{report}");
}
