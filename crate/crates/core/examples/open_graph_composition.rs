//! Open graphs compose by gluing the output of one to the input of the next.

use cospan_rewrite::cospan::{compose_cospans, identity_cospan, OpenGraph};
use cospan_rewrite::graph::FinGraph;

fn main() {
    let edge = OpenGraph::with_discrete_feet(FinGraph::arrow(), &[0], &[1]).unwrap();
    let two = compose_cospans(&edge, &edge).unwrap();
    println!("edge ; edge = {} (in {:?}, out {:?})", two.apex(), two.in_leg().node_map(), two.out_leg().node_map());

    let id = identity_cospan(edge.left_foot());
    let same = compose_cospans(&id, &edge).unwrap();
    println!("id ; edge isomorphic to edge: {}", same.iso_to(&edge).unwrap().is_some());

    // nothing shared: composing through the empty interface is a disjoint union
    let closed = OpenGraph::with_discrete_feet(FinGraph::cycle(2), &[], &[]).unwrap();
    let both = compose_cospans(&closed, &closed).unwrap();
    println!("two closed loops: {}", both.apex());
}
