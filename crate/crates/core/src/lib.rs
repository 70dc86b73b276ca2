pub mod cli;
pub mod cospan;
pub mod graph;
pub mod io;
pub mod laws;
pub mod rewrite;
