//! Associators and unitors, and the pentagon and triangle on random open
//! graphs.

use cospan_rewrite::cospan::{associator, pentagon_holds, triangle_holds, OpenGraph};
use cospan_rewrite::graph::FinGraph;
use cospan_rewrite::laws::{coherence_suite, SuiteConfig};

fn main() {
    let e = OpenGraph::with_discrete_feet(FinGraph::arrow(), &[0], &[1]).unwrap();
    let a = associator(&e, &e, &e).unwrap();
    println!("associator middle: {} invertible={}", a.middle(), a.is_invertible());
    println!("pentagon on edges: {}", pentagon_holds(&e, &e, &e, &e).unwrap());
    println!("triangle on edges: {}", triangle_holds(&e, &e).unwrap());
    println!("{}", coherence_suite(&SuiteConfig::new(3, 50, 3)));
}
