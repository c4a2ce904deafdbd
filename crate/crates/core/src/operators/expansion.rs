//! Expansions of operators: as power series in a lowering operator `Q`, as
//! `Σ a_k(x) D^k`, and constructors from those forms.

use super::EndoOp;
use crate::error::Error;
use crate::exactalg::{Poly1, Rational};
use crate::sequence::PolySeq;

/// `n! / (n - k)!`
fn falling(n: usize, k: usize) -> Rational {
    ((n - k + 1)..=n).map(Rational::from).product()
}

/// `Σ_k coeffs[k] D^k` on polynomials of degree at most `coeffs.len() - 1`.
pub fn op_from_d_series(coeffs: &[Rational]) -> EndoOp {
    assert!(!coeffs.is_empty());
    let trunc = coeffs.len() - 1;
    EndoOp::from_fn(trunc, |n| {
        let mut img = vec![Rational::zero(); n + 1];
        for (k, c) in coeffs.iter().enumerate().take(n + 1) {
            img[n - k] = c * &falling(n, k);
        }
        Poly1::from_coeffs(img)
    })
}

/// `Σ_k a_k(x) D^k`, truncated at degree `trunc`.
pub fn op_from_xd(a: &[Poly1], trunc: usize) -> EndoOp {
    EndoOp::from_fn(trunc, |n| {
        let mut img = Poly1::zero();
        for (k, ak) in a.iter().enumerate().take(n + 1) {
            if !ak.is_zero() {
                img = &img + &(ak * &Poly1::monomial(n - k, falling(n, k)));
            }
        }
        img
    })
}

/// Polynomials `a_0..a_N` with `T = Σ a_k(x) D^k` on degrees at most `N`.
///
/// Ascending recursion: `a_n = (T x^n - Σ_{k<n} a_k n!/(n-k)! x^{n-k}) / n!`.
pub fn expand_in_xd(t: &EndoOp) -> Vec<Poly1> {
    let mut a: Vec<Poly1> = Vec::with_capacity(t.trunc() + 1);
    for n in 0..=t.trunc() {
        let mut rest = t.column(n).clone();
        for (k, ak) in a.iter().enumerate() {
            if !ak.is_zero() {
                rest = &rest - &(ak * &Poly1::monomial(n - k, falling(n, k)));
            }
        }
        a.push(rest.scale(&Rational::factorial(n).recip()));
    }
    a
}

/// `Σ_n coeffs[n] Q^n`
pub fn op_from_q_series(coeffs: &[Rational], q: &EndoOp) -> Result<EndoOp, Error> {
    let mut acc = EndoOp::zero(q.trunc());
    let mut power = EndoOp::identity(q.trunc());
    for c in coeffs {
        acc = acc.add(&power.scale(c))?;
        power = q.compose(&power)?;
    }
    Ok(acc)
}

/// Smallest `n` where `T Q x^n != Q T x^n`, over inputs where both sides are
/// exact.
pub fn commutation_witness(t: &EndoOp, q: &EndoOp) -> Result<Option<usize>, Error> {
    let tq = t.compose(q)?;
    let qt = q.compose(t)?;
    let slack = t.degree_shift().max(0) + q.degree_shift().max(0);
    let top = t.trunc() as i64 - slack;
    Ok((0..=top.max(-1))
        .map(|n| n as usize)
        .find(|&n| tq.column(n) != qt.column(n)))
}

/// Coefficients `c_n = (T q_n)(0)` with `T = Σ c_n Q^n`, for `T` commuting
/// with `Q` and `basic` the basic sequence of `Q`.
pub fn expand_in_q(t: &EndoOp, q: &EndoOp, basic: &PolySeq) -> Result<Vec<Rational>, Error> {
    if basic.trunc() != t.trunc() {
        return Err(Error::TruncMismatch {
            left: t.trunc(),
            right: basic.trunc(),
        });
    }
    if let Some(degree) = commutation_witness(t, q)? {
        return Err(Error::NotCommuting { degree });
    }
    basic
        .polys()
        .iter()
        .map(|qn| Ok(t.apply(qn)?.eval(&Rational::zero())))
        .collect()
}
