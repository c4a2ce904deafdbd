use super::construct::{build_f, recover_p_from_f};
use crate::error::Error;
use crate::exactalg::{Poly1, Poly2, Rational};
use crate::operators::{bivar_shift_invariance_witness, shift_invariance_witness, BivarOp};
use crate::report::VerifyReport;
use crate::sequence::PolySeq;

/// `Σ_{k=0}^{n} p_k(x) p_{n-k}(y)`
pub fn convolution_rhs(p: &PolySeq, n: usize) -> Poly2 {
    (0..=n).fold(Poly2::zero(), |acc, k| &acc + &Poly2::outer(p.get(k), p.get(n - k)))
}

/// Checks `F p_n(x) = Σ p_k(x) p_{n-k}(y)` for every `n` up to the common
/// truncation degree.
pub fn verify_convolution(f: &BivarOp, p: &PolySeq) -> VerifyReport {
    let top = f.trunc().min(p.trunc());
    let mut report = VerifyReport::new(0..=top);
    for n in 0..=top {
        let lhs = f.apply(p.get(n)).expect("degree n fits the truncation");
        report.compare("convolution", n, lhs, convolution_rhs(p, n));
    }
    report
}

pub fn verify_divided_powers(p: &PolySeq) -> VerifyReport {
    verify_convolution(&BivarOp::shift(p.trunc()), p)
}

/// Checks the binomial identity `E^y q_n = Σ C(n,k) q_k(x) q_{n-k}(y)` and
/// cross-checks it against the divided-power identity for `q_n / n!`.
pub fn verify_binomial(q: &PolySeq) -> VerifyReport {
    let n_max = q.trunc();
    let shift = BivarOp::shift(n_max);
    let mut report = VerifyReport::new(0..=n_max);
    let mut failing = Vec::new();
    for n in 0..=n_max {
        let lhs = shift.apply(q.get(n)).expect("in range");
        let rhs = (0..=n).fold(Poly2::zero(), |acc, k| {
            &acc + &Poly2::outer(q.get(k), q.get(n - k)).scale(&Rational::binomial(n, k))
        });
        if lhs != rhs {
            failing.push(n);
            report.push("binomial", n, lhs, rhs);
        }
    }
    let divided = verify_divided_powers(&q.to_divided());
    let divided_failing: Vec<usize> = divided.violations().iter().map(|v| v.at).collect();
    for n in 0..=n_max {
        if failing.contains(&n) != divided_failing.contains(&n) {
            report.push(
                "bridge",
                n,
                Poly2::from_x(q.get(n)),
                Poly2::from_x(q.to_divided().get(n)),
            );
        }
    }
    report
}

/// Checks `E^y s_n(x) = Σ p_{n-k}(y) s_k(x)`. Fails with a precondition
/// error when `p` is not a divided-power sequence.
pub fn verify_sheffer_pair(s: &PolySeq, p: &PolySeq) -> Result<VerifyReport, Error> {
    let pre = verify_divided_powers(p);
    if let Some(v) = pre.first_violation() {
        return Err(Error::Precondition(format!(
            "reference sequence is not of divided-power type (degree {})",
            v.at
        )));
    }
    let top = s.trunc().min(p.trunc());
    let shift = BivarOp::shift(top);
    let mut report = VerifyReport::new(0..=top);
    for n in 0..=top {
        let lhs = shift.apply(s.get(n)).expect("in range");
        let rhs = (0..=n).fold(Poly2::zero(), |acc, k| &acc + &Poly2::outer(s.get(k), p.get(n - k)));
        report.compare("sheffer", n, lhs, rhs);
    }
    Ok(report)
}

/// Given a shift-invariant `F` solving the convolution identity for `p`,
/// verifies the characterization: `P = ε_y F` is invertible and
/// shift-invariant, `P^{-1} p` is of divided-power type, and `F = P_y E^y`.
/// Each conjunct reports its own violations.
pub fn sheffer_theorem_check(f: &BivarOp, p: &PolySeq) -> Result<VerifyReport, Error> {
    let conv = verify_convolution(f, p);
    if let Some(v) = conv.first_violation() {
        return Err(Error::Precondition(format!(
            "convolution identity fails at degree {}",
            v.at
        )));
    }
    if let Some((n, _, _)) = bivar_shift_invariance_witness(f) {
        return Err(Error::Precondition(format!("F is not shift-invariant (witness x^{n})")));
    }
    let n_max = f.trunc().min(p.trunc());
    let mut report = VerifyReport::new(0..=n_max);
    let sheffer = recover_p_from_f(f);

    if let Some((n, lhs, rhs)) = shift_invariance_witness(&sheffer) {
        report.push("P_shift_invariant", n, lhs, rhs);
    }
    match sheffer.invert() {
        Ok(inverse) => {
            let q = PolySeq::new(
                p.polys()
                    .iter()
                    .map(|pn| inverse.apply(pn).expect("in range"))
                    .collect(),
            );
            match q {
                Ok(q) => {
                    for v in verify_divided_powers(&q).violations() {
                        report.push("divided_powers", v.at, v.lhs.clone(), v.rhs.clone());
                    }
                }
                Err(Error::SequenceDegree { index, .. }) => {
                    report.push("divided_powers", index, Poly2::zero(), Poly2::from_x(p.get(index)));
                }
                Err(e) => return Err(e),
            }
        }
        Err(_) => {
            let n = (0..=sheffer.trunc())
                .find(|&n| sheffer.column(n).degree() != Some(n))
                .unwrap_or(0);
            report.push(
                "P_invertible",
                n,
                Poly2::from_x(sheffer.column(n)),
                Poly2::from_x(&Poly1::monomial(n, Rational::one())),
            );
        }
    }
    let rebuilt = build_f(&sheffer)?;
    for n in 0..=n_max {
        report.compare("F_equals_P_y_E_y", n, f.image(n).clone(), rebuilt.image(n).clone());
    }
    Ok(report)
}
