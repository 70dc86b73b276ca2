//! Glue two edges at a node, then intersect two subgraphs of a square.

use cospan_rewrite::graph::{iso_search, pullback, pushout, FinGraph, GraphHom};

fn main() {
    let point = FinGraph::discrete(1);
    let edge = FinGraph::arrow();
    // target of the first edge, source of the second
    let head = GraphHom::new(point.clone(), edge.clone(), vec![1], vec![]).unwrap();
    let tail = GraphHom::new(point, edge, vec![0], vec![]).unwrap();
    let glued = pushout(&head, &tail).unwrap();
    println!("pushout: {}", glued.object());
    println!("is path of 3: {}", iso_search(glued.object(), &FinGraph::path(3)).unwrap().is_some());

    // two halves of a 4-cycle overlapping in the nodes 0 and 2
    let square = FinGraph::cycle(4);
    let top = GraphHom::new(FinGraph::path(3), square.clone(), vec![0, 1, 2], vec![0, 1]).unwrap();
    let bottom = GraphHom::new(
        FinGraph::new(3, vec![(0, 1), (1, 2)]).unwrap(),
        square,
        vec![2, 3, 0],
        vec![2, 3],
    )
    .unwrap();
    let overlap = pullback(&top, &bottom).unwrap();
    println!("pullback: {}", overlap.object());
}
