//! Neighbour sum distinguishing edge colourings.
//!
//! Graph primitives and graph6 I/O, exact maximum average degree, an
//! independent nsd checker and exact solver, rainbow selections, the
//! configuration matchers, executable discharging, and the recursive
//! `(Δ+1)`-colourer for sparse graphs.

pub mod chi_sum;
pub mod classify;
pub mod colorer;
pub mod coloring;
pub mod configs;
pub mod discharge;
mod flow;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod mad;
pub mod rainbow;
pub mod rational;

pub use colorer::{choose_k, color_nsd, ColorerOptions};
pub use coloring::{is_nsd, is_proper, Color, EdgeColoring};
pub use graph::{DegreeProfile, Edge, Graph, GraphError};
pub use graph6::{encode_graph6, parse_graph6};
pub use mad::{mad_bruteforce, mad_exact, mad_less_than};
pub use rational::Rational;
