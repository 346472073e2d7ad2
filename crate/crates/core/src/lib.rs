//! Exact combinatorics of finite 2-dimensional simplicial complexes.
//!
//! The crate covers the density invariants `mu = v/f` and its minimum over
//! pure subcomplexes, simplicial collapse, homology over the integers, the
//! rationals and the two-element field, center subdivision, a catalog of named
//! complexes, immersion/embedding search, and a seeded sampler for the
//! Linial-Meshulam random 2-complex.
//!
//! Exact quantities are generic over the integer type backing a
//! [`num_rational::Ratio`]; the crate root fixes the common choices as
//! [`Rational`] and [`Real`].

pub mod catalog;
pub mod collapse;
pub mod complex;
pub mod density;
pub mod error;
pub mod flow;
pub mod format;
pub mod graph;
pub mod homology;
pub mod patterns;
pub mod random;
pub mod scalar;
pub mod subdivision;

pub use complex::{ClassifyFlags, Complex2, DegreeProfile, Diameter, Edge, Face, VertexId};
pub use error::{Error, Result};
pub use graph::Graph1;
pub use scalar::{ExactInt, Float};

/// Exact fraction used for densities and bound checks.
pub type Rational = num_rational::Ratio<i64>;

/// Wide exact fraction for callers that want headroom beyond `i64`.
pub type WideRational = num_rational::Ratio<i128>;

/// Floating point type used for probabilities and first-moment formulas.
pub type Real = f64;
