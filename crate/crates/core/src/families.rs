//! Named polynomial families, each with its lowering operator `Q` and, where
//! one exists in closed form, its Sheffer operator `P`.
//!
//! All families are normalized so that `Q p_n = p_{n-1}`; the factorial and
//! Abel families are therefore given in divided-power form (`q_n / n!`).

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exactalg::{definite_unit_integral, Poly1, Rational, Series};
use crate::operators::{op_from_d_series, op_from_xd, BivarOp, EndoOp};
use crate::report::VerifyReport;
use crate::sequence::PolySeq;
use crate::sheffer::{build_f, generalized_sheffer, verify_convolution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `x^n / n!`
    Powers,
    /// `x(x-1)...(x-n+1) / n!`
    LowerFactorial,
    /// `x(x+1)...(x+n-1) / n!`
    RisingFactorial,
    /// `x(x - n a)^{n-1} / n!`
    Abel { a: Rational },
    /// `Σ H_n t^n = exp(x t - ν t^2 / 2)`
    Hermite { nu: Rational },
    /// `Σ L_n t^n = (1 - t)^{-α-1} exp(x t / (t - 1))`
    Laguerre { alpha: Rational },
    /// Bernoulli polynomials of the second kind,
    /// `Σ b_n t^n = t / log(1 + t) * (1 + t)^x`.
    Bernoulli2,
    /// `(x-1)^n / (n!)^2 * P_n((x+1)/(x-1))` with `P_n` the Legendre polynomial.
    LegendreDerived,
    /// `H_n(x) / (n!)^2` with `H_n` the physicists' Hermite polynomial
    /// (`Σ H_n t^n / n! = exp(2 x t - t^2)`).
    HermiteDerived,
}

pub const FAMILY_NAMES: [&str; 9] = [
    "powers",
    "lower_factorial",
    "rising_factorial",
    "abel",
    "hermite",
    "laguerre",
    "bernoulli2",
    "legendre_derived",
    "hermite_derived",
];

/// Optional named parameters as they arrive from a user interface.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub nu: Option<Rational>,
    pub alpha: Option<Rational>,
    pub a: Option<Rational>,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Powers => "powers",
            Family::LowerFactorial => "lower_factorial",
            Family::RisingFactorial => "rising_factorial",
            Family::Abel { .. } => "abel",
            Family::Hermite { .. } => "hermite",
            Family::Laguerre { .. } => "laguerre",
            Family::Bernoulli2 => "bernoulli2",
            Family::LegendreDerived => "legendre_derived",
            Family::HermiteDerived => "hermite_derived",
        }
    }

    /// Builds a family from its name and parameters. Missing required
    /// parameters and parameters the family does not take are both errors.
    pub fn from_parts(name: &str, params: FamilyParams) -> Result<Family, Error> {
        let FamilyParams { nu, alpha, a } = params;
        let required = |v: Option<Rational>, flag: &str| {
            v.ok_or_else(|| Error::InvalidParameter(format!("family {name} requires --{flag}")))
        };
        let family = match name {
            "powers" => Family::Powers,
            "lower_factorial" => Family::LowerFactorial,
            "rising_factorial" => Family::RisingFactorial,
            "bernoulli2" => Family::Bernoulli2,
            "legendre_derived" => Family::LegendreDerived,
            "hermite_derived" => Family::HermiteDerived,
            "abel" => {
                return reject_extra(name, [("nu", &nu), ("alpha", &alpha)])
                    .and(required(a, "a").map(|a| Family::Abel { a }))
            }
            "hermite" => {
                return reject_extra(name, [("alpha", &alpha), ("a", &a)])
                    .and(required(nu, "nu").map(|nu| Family::Hermite { nu }))
            }
            "laguerre" => {
                return reject_extra(name, [("nu", &nu), ("a", &a)])
                    .and(required(alpha, "alpha").map(|alpha| Family::Laguerre { alpha }))
            }
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        };
        reject_extra(name, [("nu", &nu), ("alpha", &alpha)])?;
        reject_extra(name, [("a", &a), ("a", &None)])?;
        Ok(family)
    }
}

fn reject_extra(name: &str, given: [(&str, &Option<Rational>); 2]) -> Result<(), Error> {
    match given.iter().find(|(_, v)| v.is_some()) {
        Some((flag, _)) => Err(Error::InvalidParameter(format!("family {name} does not take --{flag}"))),
        None => Ok(()),
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Abel { a } => write!(f, "abel(a={a})"),
            Family::Hermite { nu } => write!(f, "hermite(nu={nu})"),
            Family::Laguerre { alpha } => write!(f, "laguerre(alpha={alpha})"),
            other => write!(f, "{}", other.name()),
        }
    }
}

/// Parses parameter-free family names only.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::from_parts(s, FamilyParams::default())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub trunc: usize,
}

impl FamilySpec {
    pub fn new(family: Family, trunc: usize) -> FamilySpec {
        FamilySpec { family, trunc }
    }
}

fn linear(c: Rational) -> Poly1 {
    Poly1::from_coeffs(vec![c, Rational::one()])
}

fn series_to_seq(s: &Series) -> Result<PolySeq, Error> {
    PolySeq::new(s.coeffs().to_vec())
}

fn hermite_series(nu: &Rational, trunc: usize) -> Result<Series, Error> {
    let mut u = Series::monomial(trunc, 1, Poly1::x());
    u = &u - &Series::monomial(trunc, 2, Poly1::constant(nu / &Rational::from_int(2)));
    u.exp()
}

fn legendre(trunc: usize) -> Vec<Poly1> {
    let mut out = vec![Poly1::one(), Poly1::x()];
    for n in 1..trunc {
        let a = Rational::from(2 * n + 1) / Rational::from(n + 1);
        let b = Rational::from(n) / Rational::from(n + 1);
        let next = &(&Poly1::x() * &out[n]).scale(&a) - &out[n - 1].scale(&b);
        out.push(next);
    }
    out.truncate(trunc + 1);
    out
}

pub fn family_sequence(spec: &FamilySpec) -> Result<PolySeq, Error> {
    let n_max = spec.trunc;
    match &spec.family {
        Family::Powers => Ok(PolySeq::divided_powers(n_max)),
        Family::LowerFactorial | Family::RisingFactorial => {
            let sign = if spec.family == Family::LowerFactorial { -1 } else { 1 };
            PolySeq::from_fn(n_max, |n| {
                (0..n)
                    .fold(Poly1::one(), |acc, i| {
                        &acc * &linear(Rational::from_int(sign * i as i64))
                    })
                    .scale(&Rational::factorial(n).recip())
            })
        }
        Family::Abel { a } => PolySeq::from_fn(n_max, |n| match n {
            0 => Poly1::one(),
            _ => (&Poly1::x() * &linear(-(a * &Rational::from(n))).pow(n - 1)).scale(&Rational::factorial(n).recip()),
        }),
        Family::Hermite { nu } => series_to_seq(&hermite_series(nu, n_max)?),
        Family::Laguerre { alpha } => {
            // x t / (t - 1) = -x (t + t^2 + ...)
            let geometric: Vec<Poly1> = (0..=n_max)
                .map(|k| {
                    if k == 0 {
                        Poly1::zero()
                    } else {
                        Poly1::monomial(1, -Rational::one())
                    }
                })
                .collect();
            let exponential = Series::from_coeffs(n_max, geometric).exp()?;
            let one_minus_t = Series::from_scalars(n_max, &[Rational::one(), -Rational::one()]);
            let prefactor = one_minus_t.pow(&(-alpha - Rational::one()))?;
            series_to_seq(&prefactor.mul(&exponential)?)
        }
        Family::Bernoulli2 => {
            let log = Series::t(n_max + 1).log1p()?;
            let v = log.shift_down()?;
            let factor = Series::one(n_max).div_unit(&v)?;
            let power = log.with_order(n_max).mul_poly(&Poly1::x()).exp()?;
            series_to_seq(&factor.mul(&power)?)
        }
        Family::LegendreDerived => {
            let plus = linear(Rational::one());
            let minus = linear(-Rational::one());
            let polys = legendre(n_max)
                .iter()
                .enumerate()
                .map(|(n, pn)| {
                    let mut out = Poly1::zero();
                    for (k, c) in pn.coeffs().iter().enumerate() {
                        if !c.is_zero() {
                            out = &out + &(&plus.pow(k) * &minus.pow(n - k)).scale(c);
                        }
                    }
                    let norm = Rational::factorial(n) * Rational::factorial(n);
                    let p = out.scale(&norm.recip());
                    assert_eq!(p.degree(), Some(n), "homogenized Legendre polynomial lost degree");
                    p
                })
                .collect();
            PolySeq::new(polys)
        }
        Family::HermiteDerived => {
            // H_n(x) = n! * He2_n(2x) where Σ He2_n t^n = exp(x t - t^2).
            let base = hermite_series(&Rational::from_int(2), n_max)?;
            let two_x = Poly1::monomial(1, Rational::from_int(2));
            PolySeq::from_fn(n_max, |n| {
                base.coeff(n).compose(&two_x).scale(&Rational::factorial(n).recip())
            })
        }
    }
}

pub fn family_q(spec: &FamilySpec) -> EndoOp {
    let n = spec.trunc;
    let one = Rational::one();
    match &spec.family {
        Family::Powers | Family::Hermite { .. } => EndoOp::derivative(n),
        Family::LowerFactorial | Family::Bernoulli2 => EndoOp::shift(n, &one)
            .sub(&EndoOp::identity(n))
            .expect("same truncation"),
        Family::RisingFactorial => EndoOp::identity(n)
            .sub(&EndoOp::shift(n, &-one))
            .expect("same truncation"),
        Family::Abel { a } => EndoOp::derivative(n)
            .compose(&EndoOp::shift(n, a))
            .expect("same truncation"),
        Family::Laguerre { .. } => {
            // D / (D - I) = -(D + D^2 + D^3 + ...)
            let coeffs: Vec<Rational> = (0..=n)
                .map(|k| if k == 0 { Rational::zero() } else { -Rational::one() })
                .collect();
            op_from_d_series(&coeffs)
        }
        Family::LegendreDerived => op_from_xd(&[Poly1::zero(), Poly1::one(), Poly1::x()], n),
        Family::HermiteDerived => op_from_xd(
            &[
                Poly1::zero(),
                Poly1::constant(Rational::new(1, 2)),
                Poly1::monomial(1, Rational::new(1, 2)),
                Poly1::constant(Rational::new(-1, 4)),
            ],
            n,
        ),
    }
}

pub fn family_p(spec: &FamilySpec) -> Result<EndoOp, Error> {
    let n = spec.trunc;
    match &spec.family {
        Family::Powers => Ok(EndoOp::identity(n)),
        Family::Hermite { nu } => {
            // e^{-ν D^2 / 2}
            let half = -nu / &Rational::from_int(2);
            let coeffs: Vec<Rational> = (0..=n)
                .map(|k| match k % 2 {
                    0 => half.pow((k / 2) as i32) / Rational::factorial(k / 2),
                    _ => Rational::zero(),
                })
                .collect();
            Ok(op_from_d_series(&coeffs))
        }
        Family::Laguerre { alpha } => {
            // (I - D)^{α+1} from the binomial series of (1 - t)^{α+1}
            let one_minus_t = Series::from_scalars(n, &[Rational::one(), -Rational::one()]);
            let series = one_minus_t.pow(&(alpha + &Rational::one()))?;
            let coeffs: Vec<Rational> = series.coeffs().iter().map(|c| c.coeff(0)).collect();
            Ok(op_from_d_series(&coeffs))
        }
        Family::Bernoulli2 => Ok(EndoOp::from_fn(n, |k| {
            definite_unit_integral(&Poly1::monomial(k, Rational::one()))
        })),
        other => Err(Error::NoStatedOperator(other.name().to_string())),
    }
}

/// The family's solution of the convolution identity: `P_y E^y` when `P` is
/// known in closed form, otherwise the operator from the general construction.
pub fn family_f(spec: &FamilySpec) -> Result<BivarOp, Error> {
    match family_p(spec) {
        Ok(p) => build_f(&p),
        Err(Error::NoStatedOperator(_)) => Ok(generalized_sheffer(&family_sequence(spec)?)?.f),
        Err(e) => Err(e),
    }
}

pub fn family_convolution_check(spec: &FamilySpec) -> Result<VerifyReport, Error> {
    let p = family_sequence(spec)?;
    Ok(verify_convolution(&family_f(spec)?, &p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;
    use crate::sheffer::sheffer_operator;

    fn spec(family: Family, n: usize) -> FamilySpec {
        FamilySpec::new(family, n)
    }

    /// Independent oracle for t^n coefficients of a product of exponentials:
    /// expand exp(x t) and exp(-ν t^2 / 2) separately and convolve.
    fn hermite_oracle(nu: &Rational, n: usize) -> Poly1 {
        let mut out = Poly1::zero();
        for j in 0..=n / 2 {
            let i = n - 2 * j;
            let c = (-nu / &Rational::from_int(2)).pow(j as i32) / Rational::factorial(j) / Rational::factorial(i);
            out = &out + &Poly1::monomial(i, c);
        }
        out
    }

    #[test]
    fn hermite_matches_oracle() {
        for nu in [q(1, 1), q(3, 2), q(-2, 1), q(0, 1)] {
            let s = family_sequence(&spec(Family::Hermite { nu: nu.clone() }, 8)).unwrap();
            for n in 0..=8 {
                assert_eq!(s.get(n), &hermite_oracle(&nu, n));
            }
            assert_eq!(s.get(2), &Poly1::from_coeffs(vec![-&nu / &q(2, 1), q(0, 1), q(1, 2)]));
        }
    }

    #[test]
    fn laguerre_first_terms() {
        for alpha in [q(-1, 2), q(0, 1), q(2, 1)] {
            let s = family_sequence(&spec(Family::Laguerre { alpha: alpha.clone() }, 6)).unwrap();
            assert_eq!(s.get(1), &Poly1::from_coeffs(vec![&alpha + &q(1, 1), q(-1, 1)]));
            // Oracle for n = 2: (α+1)(α+2)/2 - (α+2) x + x^2/2, from the
            // classical closed form Σ_k C(n+α, n-k) (-x)^k / k!.
            let want = Poly1::from_coeffs(vec![
                (&alpha + &q(1, 1)) * (&alpha + &q(2, 1)) / q(2, 1),
                -(&alpha + &q(2, 1)),
                q(1, 2),
            ]);
            assert_eq!(s.get(2), &want);
        }
    }

    #[test]
    fn bernoulli2_first_terms() {
        let s = family_sequence(&spec(Family::Bernoulli2, 4)).unwrap();
        assert_eq!(s.get(0), &Poly1::one());
        assert_eq!(s.get(1), &Poly1::from_coeffs(vec![q(1, 2), q(1, 1)]));
        assert_eq!(s.get(2), &Poly1::from_coeffs(vec![q(-1, 12), q(0, 1), q(1, 2)]));
        assert_eq!(s.get(2).eval(&Rational::zero()), q(-1, 12));
    }

    #[test]
    fn legendre_derived_first_terms() {
        let s = family_sequence(&spec(Family::LegendreDerived, 4)).unwrap();
        assert_eq!(s.get(1), &Poly1::from_ints(&[1, 1]));
        assert_eq!(s.get(2), &Poly1::from_coeffs(vec![q(1, 4), q(1, 1), q(1, 4)]));
        let q_op = family_q(&spec(Family::LegendreDerived, 4));
        assert_eq!(q_op.apply(s.get(2)).unwrap(), Poly1::from_ints(&[1, 1]));
    }

    #[test]
    fn every_family_is_lowered_by_its_q() {
        let all = [
            Family::Powers,
            Family::LowerFactorial,
            Family::RisingFactorial,
            Family::Abel { a: q(2, 3) },
            Family::Hermite { nu: q(3, 2) },
            Family::Laguerre { alpha: q(-1, 2) },
            Family::Bernoulli2,
            Family::LegendreDerived,
            Family::HermiteDerived,
        ];
        for fam in all {
            let sp = spec(fam.clone(), 10);
            let s = family_sequence(&sp).unwrap();
            let q_op = family_q(&sp);
            assert!(q_op.column(0).is_zero());
            for n in 1..=10 {
                assert_eq!(&q_op.apply(s.get(n)).unwrap(), s.get(n - 1), "{fam} at {n}");
            }
        }
    }

    #[test]
    fn degenerate_parameters() {
        let h0 = family_sequence(&spec(Family::Hermite { nu: q(0, 1) }, 8)).unwrap();
        assert_eq!(h0, PolySeq::divided_powers(8));
        let l = family_p(&spec(Family::Laguerre { alpha: q(-1, 1) }, 8)).unwrap();
        assert_eq!(l, EndoOp::identity(8));
        let abel0 = family_sequence(&spec(Family::Abel { a: q(0, 1) }, 8)).unwrap();
        assert_eq!(abel0.to_binomial(), PolySeq::powers(8));
    }

    #[test]
    fn operator_spot_values() {
        let h = family_p(&spec(Family::Hermite { nu: q(1, 1) }, 6)).unwrap();
        assert_eq!(
            h.apply(&Poly1::from_ints(&[0, 0, 1])).unwrap(),
            Poly1::from_ints(&[-1, 0, 1])
        );
        let b = family_p(&spec(Family::Bernoulli2, 6)).unwrap();
        assert_eq!(
            b.apply(&Poly1::x()).unwrap(),
            Poly1::from_coeffs(vec![q(1, 2), q(1, 1)])
        );
        assert!(matches!(
            family_p(&spec(Family::LegendreDerived, 3)),
            Err(Error::NoStatedOperator(_))
        ));
    }

    #[test]
    fn sheffer_operator_reproduces_closed_forms() {
        let n = 8;
        let herm = spec(Family::Hermite { nu: q(1, 1) }, n);
        let p = sheffer_operator(&family_sequence(&herm).unwrap(), &PolySeq::divided_powers(n)).unwrap();
        assert_eq!(p, family_p(&herm).unwrap());

        let bern = spec(Family::Bernoulli2, n);
        let lower = family_sequence(&spec(Family::LowerFactorial, n)).unwrap();
        let p = sheffer_operator(&family_sequence(&bern).unwrap(), &lower).unwrap();
        assert_eq!(p, family_p(&bern).unwrap());
    }

    #[test]
    fn convolution_checks() {
        for fam in [
            Family::Hermite { nu: q(3, 2) },
            Family::Laguerre { alpha: q(-1, 2) },
            Family::Bernoulli2,
        ] {
            let r = family_convolution_check(&spec(fam.clone(), 10)).unwrap();
            assert!(r.ok(), "{fam}: {r}");
        }
    }

    #[test]
    fn parse_parameters() {
        assert_eq!("bernoulli2".parse::<Family>().unwrap(), Family::Bernoulli2);
        assert!("hermite".parse::<Family>().is_err());
        let p = FamilyParams {
            nu: Some(q(1, 1)),
            ..Default::default()
        };
        assert_eq!(
            Family::from_parts("hermite", p.clone()).unwrap(),
            Family::Hermite { nu: q(1, 1) }
        );
        assert!(Family::from_parts("laguerre", p.clone()).is_err());
        assert!(Family::from_parts("powers", p).is_err());
        assert!(Family::from_parts("chebyshev", FamilyParams::default()).is_err());
    }
}
