//! Exact finite-dimensional linear operators on polynomials.

mod bivar;
mod endo;
mod expansion;
mod invariance;

pub use bivar::{shift_bivar, BivarOp};
pub use endo::{op_compose, op_from_images, op_invert, shift_endo, transport_apply_y, EndoOp};
pub use expansion::{commutation_witness, expand_in_q, expand_in_xd, op_from_d_series, op_from_q_series, op_from_xd};
pub use invariance::{
    bivar_shift_invariance_witness, is_shift_invariant_bivar, is_shift_invariant_endo, shift_invariance_witness,
};
