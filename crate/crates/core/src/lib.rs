//! Generic sigma-conjugacy classes in extended affine Weyl groups.
//!
//! The crate builds a [`RootDatum`] from a JSON description, materializes its
//! finite Weyl group and the quantum Bruhat graph, and evaluates Newton points,
//! Kottwitz points, lambda-invariants and defects of elements `x = w eps^mu`.
//! The [`generic`] module computes the generic class of `x` in closed form and
//! offers a brute-force Bruhat-interval oracle for comparison.

pub mod affine;
pub mod bg;
pub mod error;
pub mod generic;
pub mod linalg;
pub mod qbg;
pub mod root_datum;
pub mod weyl;

pub use affine::{AffineElement, AffineRoot, SignType};
pub use bg::{ClassCache, SigmaClass};
pub use error::{Error, Result};
pub use qbg::QuantumBruhatGraph;
pub use root_datum::{Config, GammaClass, Pi1Class, RootDatum};
pub use weyl::{WeylElement, WeylGroup};

pub type Rat = num_rational::Rational64;

/// Integral coweight in the coordinates of the lattice basis.
pub type Coweight = Vec<i64>;

/// Rational coweight in the coordinates of the lattice basis.
pub type RatCoweight = Vec<Rat>;

/// Subset of the simple roots as a membership mask.
pub type Subset = Vec<bool>;
