//! Everything a one-rule grammar derives from a path, up to isomorphism.

use cospan_rewrite::io::{LoadOptions, Workspace};
use cospan_rewrite::rewrite::language;

fn main() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/grammar_example.json");
    let ws = Workspace::load(path, LoadOptions::default()).unwrap();
    let grammar = ws.grammar("shrink").unwrap();
    for depth in 0..4 {
        let members = language(&grammar, depth, 6).unwrap();
        println!("depth {depth}: {} graphs", members.len());
    }
    for g in language(&grammar, 3, 6).unwrap() {
        println!("  {}", g.apex());
    }
}
