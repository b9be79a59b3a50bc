//! Computational harmonic analysis on real Grassmannians.
//!
//! The crate covers the O(n)-types of `Gr_k(ℝⁿ)` and their counting
//! densities ([`partitions`]), exact symmetric-polynomial algebra ([`poly`]),
//! frames, principal angles and the linear rescaling flow ([`grassmann`]),
//! zonal harmonics built as generalized Jacobi polynomials ([`zonal`]),
//! Monte Carlo spectra of the cosine, α-cosine and Radon transforms
//! ([`transforms`]), exact kernel dimensions of differential operators with
//! polynomial coefficients ([`pde`]), and the factorial and Cauchy
//! determinant identities ([`determinants`]).

pub mod acceptance;
pub mod cli;
pub mod config;
pub mod determinants;
pub mod error;
pub mod grassmann;
pub mod linalg;
pub mod partitions;
pub mod pde;
pub mod poly;
pub mod rational;
pub mod sampling;
pub mod stats;
pub mod transforms;
pub mod zonal;

pub use error::{Error, Result};
pub use partitions::{Partition, TypePredicate};
pub use poly::{MultiPoly, SymmetricPoly};
pub use rational::Rational;
