//! Shift-invariance tests with a formal shift variable. Commuting with the
//! formal shift `E^y` is equivalent to commuting with every scalar shift, so
//! one exact polynomial identity per basis monomial decides the question.

use super::{BivarOp, EndoOp};
use crate::exactalg::{poly_substitute, Poly1, Poly2, Poly3, Rational, Var};

/// Smallest `n` for which `T(E^y x^n) != E^y(T x^n)`, if any. Only inputs
/// whose images are unaffected by truncation are examined.
pub fn shift_invariance_witness(t: &EndoOp) -> Option<(usize, Poly2, Poly2)> {
    let top = t.exact_degree()?;
    let x_plus_y = &Poly2::x() + &Poly2::y();
    for n in 0..=top {
        let mut lhs = Poly2::zero();
        for k in 0..=n {
            let term = Poly2::outer(t.column(k), &Poly1::monomial(n - k, Rational::binomial(n, k)));
            lhs = &lhs + &term;
        }
        let rhs = poly_substitute(t.column(n), &x_plus_y);
        if lhs != rhs {
            return Some((n, lhs, rhs));
        }
    }
    None
}

pub fn is_shift_invariant_endo(t: &EndoOp) -> bool {
    shift_invariance_witness(t).is_none()
}

/// `p(x + z, y)` for `p` in `(x, y)`.
fn shift_x_by_z(p: &Poly2) -> Poly3 {
    let x_plus_z = {
        let mut r = Poly3::zero();
        r.add_term(1, 0, 0, Rational::one());
        r.add_term(0, 0, 1, Rational::one());
        r
    };
    let mut out = Poly3::zero();
    for (i, j, c) in p.terms() {
        let mut term = Poly3::zero();
        term.add_term(0, j, 0, c.clone());
        for _ in 0..i {
            term = &term * &x_plus_z;
        }
        out = &out + &term;
    }
    out
}

/// Smallest `n` with `F(E^z x^n) != E^z(F x^n)` as polynomials in `(x, y, z)`.
pub fn bivar_shift_invariance_witness(f: &BivarOp) -> Option<(usize, Poly3, Poly3)> {
    for n in 0..=f.trunc() {
        let mut lhs = Poly3::zero();
        for k in 0..=n {
            let z_part = Poly2::term(0, (n - k) as u32, Rational::binomial(n, k)).embed(Var::X, Var::Z);
            lhs = &lhs + &(&f.image(k).embed(Var::X, Var::Y) * &z_part);
        }
        let rhs = shift_x_by_z(f.image(n));
        if lhs != rhs {
            return Some((n, lhs, rhs));
        }
    }
    None
}

pub fn is_shift_invariant_bivar(f: &BivarOp) -> bool {
    bivar_shift_invariance_witness(f).is_none()
}
