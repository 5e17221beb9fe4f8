//! Buchberger bases and ideal operations built on them.

mod basis;
pub(crate) mod engine;
mod ideal;

pub use basis::GroebnerBasis;
pub use ideal::{linear_basis, monomials_of_degree, product_of_powers, Ideal};

use crate::error::Result;
use crate::poly::{MonomialOrder, Polynomial, Ring};

/// Reduced Gröbner basis of the ideal generated by `gens` for `order`.
pub fn buchberger(ring: &Ring, gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let id = Ideal::new(ring, gens.to_vec())?;
    Ok((*id.groebner_in(order)?).clone())
}

#[cfg(test)]
mod tests;
