//! Divided-power, binomial and Sheffer sequences; the characterization of
//! shift-invariant solutions of the convolution identity
//! `F p_n(x) = Σ p_k(x) p_{n-k}(y)`, and the construction of the unique
//! solution for an arbitrary sequence.

mod construct;
mod verify;

pub use construct::{
    basic_from_q, build_f, generalized_sheffer, q_from_sequence, recover_p_from_f, sheffer_operator, taylor_delsarte,
    ShefferData,
};
pub use verify::{
    convolution_rhs, sheffer_theorem_check, verify_binomial, verify_convolution, verify_divided_powers,
    verify_sheffer_pair,
};
