//! Combinatorial constructions of reduced arithmetically Gorenstein and
//! Cohen-Macaulay configurations of linear varieties with prescribed
//! h-vectors, their graded Betti tables, and the associated shellable balls
//! and simplicial polytopes, together with independent brute-force
//! verification oracles.
//!
//! The main entry points:
//!
//! - [`sequences`]: O-sequences, SI-sequences, Macaulay growth, liaison
//!   differencing.
//! - [`monomials`]: lex-segment ideals, their z1-decomposition, and
//!   lexicographic order ideals of monomials.
//! - [`configurations`]: the configuration builders (`build_z`,
//!   `build_z_max`, `build_g_max`, `build_gorenstein`), stick-figure and
//!   subspace-property verification.
//! - [`hilbert`]: liaison h-vector arithmetic and the two-route h-vector of
//!   a configuration.
//! - [`betti`]: lex-segment Betti tables, maximal Gorenstein tables, closed
//!   forms, and upper-bound checks.
//! - [`simplicial`]: f/h-vectors, shellings, the shellable-ball and
//!   polytope-boundary constructions.
//! - [`oracle`]: standard-monomial counting, monomial-ideal algebra, Koszul
//!   homology over the exact rationals, and Reisner's criterion.

pub mod betti;
pub mod configurations;
pub mod error;
pub mod hilbert;
pub mod monomials;
pub mod oracle;
pub mod sequences;
pub mod simplicial;

pub use error::{Error, Result};
pub use sequences::HVector;
