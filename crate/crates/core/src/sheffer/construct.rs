use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactalg::{Poly1, Poly2, Rational};
use crate::operators::{commutation_witness, BivarOp, EndoOp};
use crate::sequence::PolySeq;

/// Everything attached to a sequence `p`: its lowering operator `Q`, the
/// basic sequence of `Q`, the operator `P` carrying the basic sequence to
/// `p`, the Taylor-Delsarte translation `G = Σ q_n(y) Q^n`, and `F = P_y G`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShefferData {
    pub q: EndoOp,
    pub basic: PolySeq,
    pub p: EndoOp,
    pub g: BivarOp,
    pub f: BivarOp,
}

/// The operator with `Q p_n = p_{n-1}` and `Q p_0 = 0`.
pub fn q_from_sequence(p: &PolySeq) -> EndoOp {
    let to_p = EndoOp::from_images(p.polys().to_vec());
    let to_prev = EndoOp::from_fn(p.trunc(), |n| match n {
        0 => Poly1::zero(),
        _ => p.get(n - 1).clone(),
    });
    let from_p = to_p.invert().expect("a graded sequence is a basis");
    to_prev.compose(&from_p).expect("same truncation")
}

/// The unique sequence with `Q q_n = q_{n-1}` and `q_n(0) = δ_{n0}`.
///
/// Each step solves the triangular system `Q q_n = q_{n-1}` from the top
/// degree down and sets the free constant term to zero.
pub fn basic_from_q(q: &EndoOp) -> Result<PolySeq, Error> {
    if !q.column(0).is_zero() {
        return Err(Error::NotDegreeLowering { degree: 0 });
    }
    for n in 1..=q.trunc() {
        if q.column(n).degree() != Some(n - 1) {
            return Err(Error::NotDegreeLowering { degree: n });
        }
    }
    let mut basic = vec![Poly1::one()];
    for n in 1..=q.trunc() {
        let mut residual = basic[n - 1].clone();
        let mut coeffs = vec![Rational::zero(); n + 1];
        for k in (1..=n).rev() {
            let c = residual.coeff(k - 1) / q.entry(k - 1, k);
            if !c.is_zero() {
                residual = &residual - &q.column(k).scale(&c);
                coeffs[k] = c;
            }
        }
        debug_assert!(residual.is_zero());
        basic.push(Poly1::from_coeffs(coeffs));
    }
    PolySeq::new(basic)
}

/// The operator with `P q_n = p_n`.
pub fn sheffer_operator(p: &PolySeq, basic: &PolySeq) -> Result<EndoOp, Error> {
    if p.trunc() != basic.trunc() {
        return Err(Error::TruncMismatch {
            left: p.trunc(),
            right: basic.trunc(),
        });
    }
    let to_p = EndoOp::from_images(p.polys().to_vec());
    let to_q = EndoOp::from_images(basic.polys().to_vec());
    to_p.compose(&to_q.invert()?)
}

/// `G^(y) = Σ_k q_k(y) Q^k`; the sum is finite on each `x^n` because `Q^k`
/// lowers degree by `k`.
pub fn taylor_delsarte(q: &EndoOp, basic: &PolySeq) -> Result<BivarOp, Error> {
    if q.trunc() != basic.trunc() {
        return Err(Error::TruncMismatch {
            left: q.trunc(),
            right: basic.trunc(),
        });
    }
    let images = (0..=q.trunc())
        .map(|n| {
            let mut cur = Poly1::monomial(n, Rational::one());
            let mut img = Poly2::zero();
            for k in 0..=n {
                if cur.is_zero() {
                    break;
                }
                img = &img + &Poly2::outer(&cur, basic.get(k));
                cur = q.apply(&cur)?;
            }
            Ok(img)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(BivarOp::from_images(images))
}

/// Runs the full construction `p -> (Q, basic, P, G, F)`.
pub fn generalized_sheffer(p: &PolySeq) -> Result<ShefferData, Error> {
    let q = q_from_sequence(p);
    let basic = basic_from_q(&q)?;
    let sheffer = sheffer_operator(p, &basic)?;
    if let Some(degree) = commutation_witness(&sheffer, &q)? {
        return Err(Error::Internal(format!("P and Q do not commute at x^{degree}")));
    }
    sheffer
        .invert()
        .map_err(|e| Error::Internal(format!("P is not invertible: {e}")))?;
    let g = taylor_delsarte(&q, &basic)?;
    let f = g.then_y(&sheffer)?;
    Ok(ShefferData {
        q,
        basic,
        p: sheffer,
        g,
        f,
    })
}

/// `P = ε_y ∘ F`
pub fn recover_p_from_f(f: &BivarOp) -> EndoOp {
    f.at_y_zero()
}

/// `F = P_y ∘ E^y`
pub fn build_f(p: &EndoOp) -> Result<BivarOp, Error> {
    BivarOp::transported_shift(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::operators::op_from_xd;

    fn legendre_q(n: usize) -> EndoOp {
        op_from_xd(&[Poly1::zero(), Poly1::one(), Poly1::x()], n)
    }

    /// Independent oracle: solve `Q r = target` with `r(0) = 0` by trying the
    /// monomial ansatz degree by degree from the bottom.
    fn oracle_preimage(q_op: &EndoOp, target: &Poly1, deg: usize) -> Poly1 {
        // unknown coefficients c_1..c_deg; Q is linear, so build the matrix
        // column by column and solve the (square, triangular) system.
        let rows: Vec<Vec<Rational>> = (0..deg)
            .map(|r| (1..=deg).map(|c| q_op.entry(r, c)).collect())
            .collect();
        let rhs: Vec<Rational> = (0..deg).map(|r| target.coeff(r)).collect();
        let sol = crate::exactalg::solve_unique(rows, rhs, deg).unwrap();
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(sol);
        Poly1::from_coeffs(coeffs)
    }

    #[test]
    fn q_from_divided_powers_is_derivative() {
        assert_eq!(q_from_sequence(&PolySeq::divided_powers(6)), EndoOp::derivative(6));
    }

    #[test]
    fn q_from_powers_shifts_index() {
        let q_op = q_from_sequence(&PolySeq::powers(5));
        for n in 1..=5 {
            assert_eq!(q_op.column(n), &Poly1::monomial(n - 1, Rational::one()));
        }
        assert_eq!(q_op.degree_shift(), -1);
    }

    #[test]
    fn basic_of_derivative() {
        assert_eq!(
            basic_from_q(&EndoOp::derivative(7)).unwrap(),
            PolySeq::divided_powers(7)
        );
    }

    #[test]
    fn basic_of_legendre_operator_matches_oracle() {
        let n = 6;
        let q_op = legendre_q(n);
        let basic = basic_from_q(&q_op).unwrap();
        assert_eq!(basic.get(1), &Poly1::x());
        // Q x^k = k^2 x^{k-1}, so the oracle gives q_2 = x^2 / 4.
        assert_eq!(basic.get(2), &Poly1::monomial(2, q(1, 4)));
        for k in 1..=n {
            assert_eq!(basic.get(k), &oracle_preimage(&q_op, basic.get(k - 1), k));
            let sq = Rational::factorial(k) * Rational::factorial(k);
            assert_eq!(basic.get(k), &Poly1::monomial(k, sq.recip()));
        }
    }

    #[test]
    fn basic_of_forward_difference_is_lower_factorials() {
        let n = 6;
        let delta = EndoOp::shift(n, &Rational::one()).sub(&EndoOp::identity(n)).unwrap();
        let basic = basic_from_q(&delta).unwrap();
        for k in 0..=n {
            let mut lf = Poly1::one();
            for i in 0..k {
                lf = &lf * &Poly1::from_coeffs(vec![Rational::from_int(-(i as i64)), Rational::one()]);
            }
            assert_eq!(basic.get(k), &lf.scale(&Rational::factorial(k).recip()));
        }
    }

    #[test]
    fn basic_rejects_non_lowering() {
        assert!(matches!(
            basic_from_q(&EndoOp::identity(3)),
            Err(Error::NotDegreeLowering { degree: 0 })
        ));
        let d2 = EndoOp::derivative(3).pow(2);
        assert!(matches!(basic_from_q(&d2), Err(Error::NotDegreeLowering { degree: 1 })));
    }

    #[test]
    fn sheffer_operator_examples() {
        let basic = PolySeq::divided_powers(5);
        assert_eq!(sheffer_operator(&basic, &basic).unwrap(), EndoOp::identity(5));
    }

    #[test]
    fn taylor_delsarte_examples() {
        let n = 6;
        let d = EndoOp::derivative(n);
        assert_eq!(
            taylor_delsarte(&d, &PolySeq::divided_powers(n)).unwrap(),
            BivarOp::shift(n)
        );

        let q_op = legendre_q(n);
        let basic = basic_from_q(&q_op).unwrap();
        let g = taylor_delsarte(&q_op, &basic).unwrap();
        // Direct evaluation of the three terms on x^2: x^2 + y * 4x + (y^2/4) * 4.
        let want = Poly2::from_terms([((2, 0), q(1, 1)), ((1, 1), q(4, 1)), ((0, 2), q(1, 1))]);
        assert_eq!(g.image(2), &want);
        for k in 0..=n {
            assert_eq!(g.image(k).at_y_zero(), Poly1::monomial(k, Rational::one()));
        }
    }

    #[test]
    fn pipeline_on_divided_powers() {
        let data = generalized_sheffer(&PolySeq::divided_powers(6)).unwrap();
        assert_eq!(data.f, BivarOp::shift(6));
        assert_eq!(data.q, EndoOp::derivative(6));
        assert_eq!(data.p, EndoOp::identity(6));
    }

    #[test]
    fn shape_of_json() {
        let data = generalized_sheffer(&PolySeq::divided_powers(1)).unwrap();
        let v: serde_json::Value = serde_json::to_value(&data).unwrap();
        for key in ["q", "basic", "p", "g", "f"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
        let back: ShefferData = serde_json::from_value(v).unwrap();
        assert_eq!(back, data);
    }
}
