//! Combinatorial verification of graphs of intersection between a punctured
//! torus and other surfaces in a cut-open product `T x I`.

pub mod fatgraph;
pub mod cutmodel;
pub mod freegroup;
pub mod pairing;
pub mod assembly;
pub mod smallcases;
