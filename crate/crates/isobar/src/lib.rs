//! Exact computer algebra for isobaric polynomials: the level-graded image
//! of the ring of symmetric functions under the reflection that sends each
//! elementary symmetric polynomial e_j to (−1)^{j+1} t_j.
//!
//! The crate builds weighted isobaric families from rational weight
//! vectors, Schur reflects through signed Jacobi–Trudi determinants, the
//! hook-basis expansion, the level product on isobaric sequences together
//! with its rational roots, and the multiplicative arithmetic functions
//! those roots determine locally. Every coefficient is an
//! arbitrary-precision rational; nothing is ever rounded.

pub mod arith;
pub mod cli;
pub mod error;
pub mod exponent;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod schur;
pub mod sequence;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use exponent::{exponents_of_level, lattice_covers, monomial_stats, ExponentVector};
pub use partition::Partition;
pub use poly::IsobaricPolynomial;
pub use rational::Rat;
pub use sequence::IsobaricSequence;
pub use weights::{WeightPattern, WeightVector};
