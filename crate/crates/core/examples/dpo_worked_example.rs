//! Replace the edge a->c of a triangle by a loop on c, keeping a as input
//! and c as output, and read the derivation as a 2-cell.

use cospan_rewrite::cospan::iso_class_equal;
use cospan_rewrite::graph::iso_search;
use cospan_rewrite::io::{LoadOptions, StoredProduction, Workspace};
use cospan_rewrite::rewrite::{derivation_to_twocell, io_derive, twocell_to_derivation};

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/rewrite_example.json");
    let ws = Workspace::load(path, LoadOptions::default()).unwrap();
    let StoredProduction::WithInterface(p) = ws.production("p").unwrap() else {
        panic!("p carries interfaces");
    };
    let g = ws.open_graph("source").unwrap();
    let m = ws.hom("m0").unwrap();

    let d = io_derive(&p, &m, &g).unwrap().expect("gluing condition holds");
    println!("context: {}", d.derivation.context());
    println!("result:  {}", d.result.apex());
    let expected = ws.graph("expected_result").unwrap();
    println!("matches expected: {}", iso_search(d.result.apex(), &expected).unwrap().is_some());

    let cell = derivation_to_twocell(&d).unwrap();
    println!("2-cell middle: {}", cell.middle());
    println!("equals stored cell: {}", iso_class_equal(&cell, &ws.two_cell("expected_cell").unwrap()).unwrap());
    let back = twocell_to_derivation(&cell).unwrap().unwrap();
    println!("read back as a derivation: {}", back.result.apex());
}
