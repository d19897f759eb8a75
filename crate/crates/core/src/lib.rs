//! Exact Laplacian spectral calculus for graphs built from complete graphs
//! by disjoint union, join, repetition and complement.
//!
//! * [`expr`]: the expression syntax (`(2K1 + (K1 * 3K1)) * 3K1`, ...).
//! * [`spectrum`]: exact spectra by structural recursion.
//! * [`energy`]: Laplacian energy and the L-borderenergetic predicate.
//! * [`families`]: the L-borderenergetic families of order `4r + 4`.
//! * [`realize`]: adjacency matrices, graph6, and numeric / exact oracles.
//! * [`scan`]: search graph6 enumerations for L-borderenergetic graphs.
//! * [`cli`]: the `lapspec` command line.

pub mod cli;
pub mod energy;
pub mod expr;
pub mod families;
pub mod rational;
pub mod realize;
pub mod scan;
pub mod spectrum;

pub use energy::{is_cospectral, is_l_borderenergetic, laplacian_energy, EnergyReport};
pub use expr::{parse, GraphExpr, ParseError};
pub use rational::Rational;
pub use realize::{realize, DenseGraph};
pub use spectrum::{spectrum_of, Spectrum};
