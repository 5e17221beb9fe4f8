//! Computational checks of Frobenius splitting properties for symbolic
//! powers of determinantal ideals and related blowup algebras, over prime
//! fields.

pub mod blowup;
pub mod budget;
pub mod corpus;
pub mod determinantal;
pub mod error;
pub mod fsing;
pub mod groebner;
pub mod homology;
pub mod monomial;
pub mod poly;

pub use determinantal::{DetFamily, DetIdealSpec, MatrixShape};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, Ideal};
pub use monomial::MonomialIdeal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring, RingContext};
