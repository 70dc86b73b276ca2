//! Graphviz text for an open graph and a 2-cell. Pipe into `dot -Tsvg`.

use cospan_rewrite::cospan::{identity_twocell, OpenGraph};
use cospan_rewrite::graph::FinGraph;
use cospan_rewrite::io::dot::{open_graph_to_dot, two_cell_to_dot};

fn main() {
    let g = FinGraph::new(4, vec![(0, 1), (1, 2), (1, 3), (3, 3)]).unwrap();
    let open = OpenGraph::with_discrete_feet(g, &[0, 2], &[2, 3]).unwrap();
    print!("{}", open_graph_to_dot("open", &open));
    print!("{}", two_cell_to_dot("identity", &identity_twocell(&open)));
}
