//! Prime-field polynomial rings: coefficients, monomials, orders, parsing.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod ring;

pub use monomial::{Exp, Monomial};
pub use parse::{parse_ideal, parse_polynomial, parse_ring};
pub use polynomial::{Polynomial, Term};
pub use ring::{MonomialOrder, Ring, RingContext};
