//! The analytic side of the construction (Cauchy problem, infinitesimal
//! generator, Heaviside's solution) and the coalgebra, bialgebra and Hopf
//! checks on comultiplications `F`.
//!
//! Tensor legs are modelled by variable names. A comultiplication maps
//! `x^n` to a polynomial in `(x, y)`; applying it again to the first leg
//! sends `x^i y^j` to `F(x^i)(x, y) z^j`, and applying it to the second leg
//! sends `x^i y^j` to `x^i F(x^j)(y, z)`.

mod analytic;
mod coalgebra;

pub use analytic::{cauchy_solve, heaviside_check, infinitesimal_generator, CauchyWitness};
pub use coalgebra::{
    antipode_check, antipode_check_with, bialgebra_detect, coassociativity_check, cocommutativity_check,
    counit_delta_check, counit_from_f, symmetry_report,
};
