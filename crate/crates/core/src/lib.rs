//! Exact computations in graded Artinian algebras.
//!
//! The crate covers Hilbert functions and their admissibility, homogeneous
//! ideals as degreewise spans, quotient algebras, weak and strong Lefschetz
//! verdicts, graded Betti numbers via Koszul homology and the
//! Eliahou–Kervaire formula, an extremal construction for admissible Hilbert
//! functions, and experiments on height-three complete intersections.
//!
//! Everything is exact: rationals are arbitrary precision and prime fields use
//! word-sized residues. The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod apolar;
pub mod betti;
pub mod ci;
pub mod construction;
pub mod hilbert;
pub mod ideal;
pub mod lefschetz;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod random;
pub mod ring;
pub mod scalar;

pub use algebra::{AlgebraError, GradedAlgebra, GradedModule};
pub use betti::BettiTable;
pub use hilbert::{HilbertFunction, WlpProfile};
pub use ideal::{IdealSpan, MonomialIdeal};
pub use lefschetz::{LefschetzOptions, LefschetzVerdict, Property};
pub use monomial::Monomial;
pub use poly::Polynomial;
pub use ring::Ring;
pub use scalar::{Characteristic, Scalar};
