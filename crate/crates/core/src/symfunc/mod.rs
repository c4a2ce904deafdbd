//! Symmetric functions in the monomial basis: partitions, the symmetric
//! shift, the operators `D_λ`, full sequences and the symmetric form of the
//! Sheffer theorem.

mod full;
mod ops;
mod partition;
mod symf;

pub use full::{
    complete_sequence, derive_sym_F, elementary_sequence, is_full_sequence, linear_divided_check,
    sym_antipode_identity, sym_sheffer_verify, verify_full_divided, FullSeq, SymShefferReport,
};
pub use ops::{d_lambda, shift_expansion_check, theta_expansion, SymOp, ThetaExpansion};
pub use partition::{partitions, partitions_up_to, rlex_compare, Partition};
pub use symf::{
    complete, complete_product, elementary, elementary_product, eval_single, monomial_product, sym_shift, SymF, SymFY,
};

/// `λ'`
pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}
