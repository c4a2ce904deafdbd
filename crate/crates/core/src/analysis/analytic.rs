use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactalg::{poly_substitute, Poly1, Poly2, Rational};
use crate::operators::EndoOp;
use crate::report::VerifyReport;
use crate::sequence::PolySeq;
use crate::sheffer::taylor_delsarte;

/// The solution `u(x, y) = G^(y) p(x)` of `Q_x u = Q_y u`, `u(x, 0) = p(x)`,
/// with both defects computed exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyWitness {
    pub u: Poly2,
    /// `Q_x u - Q_y u`
    pub residual: Poly2,
    /// `u(x, 0) - p(x)`
    pub initial_gap: Poly1,
}

impl CauchyWitness {
    pub fn verified(&self) -> bool {
        self.residual.is_zero() && self.initial_gap.is_zero()
    }
}

pub fn cauchy_solve(q: &EndoOp, basic: &PolySeq, p: &Poly1) -> Result<CauchyWitness, Error> {
    let g = taylor_delsarte(q, basic)?;
    let u = g.apply(p)?;
    let residual = &q.apply_x(&u)? - &q.apply_y(&u)?;
    let initial_gap = &u.at_y_zero() - p;
    Ok(CauchyWitness {
        u,
        residual,
        initial_gap,
    })
}

/// `Σ_k (D q_k)(0) Q^k`, cross-checked against the `y`-linear part of the
/// translation `G^(y)`, which is the exact value of `lim (G^y - G^0) / y`.
pub fn infinitesimal_generator(q: &EndoOp, basic: &PolySeq) -> Result<EndoOp, Error> {
    let n_max = q.trunc();
    let mut generator = EndoOp::zero(n_max);
    let mut power = EndoOp::identity(n_max);
    for k in 0..=n_max {
        let c = basic.get(k).coeff(1);
        if !c.is_zero() {
            generator = generator.add(&power.scale(&c))?;
        }
        power = q.compose(&power)?;
    }
    let g = taylor_delsarte(q, basic)?;
    let limit = EndoOp::from_fn(n_max, |n| g.image(n).y_coeff(1));
    if limit != generator {
        let n = (0..=n_max)
            .find(|&n| limit.column(n) != generator.column(n))
            .unwrap_or(0);
        return Err(Error::Internal(format!(
            "generator series and y-derivative of G differ at x^{n}: {} vs {}",
            generator.column(n),
            limit.column(n)
        )));
    }
    Ok(generator)
}

/// Compares `e^{y D} p = Σ y^k D^k p / k!` with `p(x + y)`.
pub fn heaviside_check(p: &Poly1, n_max: usize) -> Result<VerifyReport, Error> {
    let deg = p.degree().unwrap_or(0);
    if deg > n_max {
        return Err(Error::DegreeOverflow {
            degree: deg,
            trunc: n_max,
        });
    }
    let mut lhs = Poly2::zero();
    let mut derivative = p.clone();
    for k in 0..=deg {
        let y_k = Poly1::monomial(k, Rational::factorial(k).recip());
        lhs = &lhs + &Poly2::outer(&derivative, &y_k);
        derivative = derivative.derivative();
    }
    let rhs = poly_substitute(p, &(&Poly2::x() + &Poly2::y()));
    let mut report = VerifyReport::new(0..=deg);
    report.compare("heaviside", deg, lhs, rhs);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::families::{family_q, family_sequence, Family, FamilySpec};
    use crate::operators::op_from_xd;
    use crate::sheffer::basic_from_q;

    fn legendre_q(n: usize) -> EndoOp {
        op_from_xd(&[Poly1::zero(), Poly1::one(), Poly1::x()], n)
    }

    #[test]
    fn cauchy_for_d_is_a_plain_shift() {
        let n = 6;
        let w = cauchy_solve(
            &EndoOp::derivative(n),
            &PolySeq::divided_powers(n),
            &Poly1::from_ints(&[0, 0, 1]),
        )
        .unwrap();
        assert!(w.verified());
        let s = &Poly2::x() + &Poly2::y();
        assert_eq!(w.u, &s * &s);
    }

    #[test]
    fn cauchy_for_legendre_operator() {
        let n = 6;
        let q_op = legendre_q(n);
        let basic = basic_from_q(&q_op).unwrap();
        let w = cauchy_solve(&q_op, &basic, &Poly1::x()).unwrap();
        assert!(w.verified());
        assert_eq!(w.u, &Poly2::x() + &Poly2::y());

        let p = Poly1::from_ints(&[0, 0, 1]);
        let w = cauchy_solve(&q_op, &basic, &p).unwrap();
        assert!(w.verified());
        // Not a plain translation: D_x u and D_y u differ.
        let d = EndoOp::derivative(n);
        assert_ne!(d.apply_x(&w.u).unwrap(), d.apply_y(&w.u).unwrap());
        assert_ne!(w.u, poly_substitute(&p, &(&Poly2::x() + &Poly2::y())));
    }

    #[test]
    fn cauchy_for_every_family_basis() {
        for fam in [
            Family::LegendreDerived,
            Family::HermiteDerived,
            Family::Laguerre { alpha: q(1, 2) },
        ] {
            let sp = FamilySpec::new(fam, 7);
            let q_op = family_q(&sp);
            let basic = basic_from_q(&q_op).unwrap();
            for p in family_sequence(&sp).unwrap().polys() {
                assert!(cauchy_solve(&q_op, &basic, p).unwrap().verified());
            }
        }
    }

    #[test]
    fn generator_of_d_and_forward_difference() {
        let n = 8;
        let d = EndoOp::derivative(n);
        assert_eq!(infinitesimal_generator(&d, &PolySeq::divided_powers(n)).unwrap(), d);

        let sp = FamilySpec::new(Family::LowerFactorial, n);
        let basic = family_sequence(&sp).unwrap();
        // Oracle: the x-coefficient of x(x-1)...(x-k+1)/k! is (-1)^{k+1}/k.
        for k in 1..=n {
            assert_eq!(
                basic.get(k).coeff(1),
                Rational::from_int(if k % 2 == 1 { 1 } else { -1 }) / Rational::from(k)
            );
        }
        assert_eq!(infinitesimal_generator(&family_q(&sp), &basic).unwrap(), d);
    }

    #[test]
    fn generator_of_legendre_operator() {
        let n = 6;
        let q_op = legendre_q(n);
        let basic = basic_from_q(&q_op).unwrap();
        assert_eq!(basic.get(1).coeff(1), q(1, 1));
        assert_eq!(basic.get(2).coeff(1), q(0, 1));
        // Only q_1 has a linear term, so the generator is Q itself.
        assert_eq!(infinitesimal_generator(&q_op, &basic).unwrap(), q_op);
    }

    #[test]
    fn heaviside_examples() {
        assert!(heaviside_check(&Poly1::from_ints(&[0, 0, 0, 1]), 5).unwrap().ok());
        assert!(heaviside_check(&Poly1::constant(q(7, 3)), 0).unwrap().ok());
        let b = family_sequence(&FamilySpec::new(Family::Bernoulli2, 4)).unwrap();
        assert!(heaviside_check(b.get(2), 4).unwrap().ok());
        assert!(heaviside_check(&Poly1::from_ints(&[0, 0, 1]), 1).is_err());
    }
}
