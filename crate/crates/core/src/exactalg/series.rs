//! Truncated power series in an auxiliary variable `t` whose coefficients
//! are polynomials in `x`. Everything is exact below the truncation order;
//! terms of `t`-degree above the order are discarded.

use std::ops::{Add, Sub};

use super::{Poly1, Rational};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    order: usize,
    coeffs: Vec<Poly1>,
}

impl Series {
    pub fn zero(order: usize) -> Series {
        Series {
            order,
            coeffs: vec![Poly1::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Series {
        Series::constant(order, Poly1::one())
    }

    pub fn constant(order: usize, p: Poly1) -> Series {
        let mut s = Series::zero(order);
        s.coeffs[0] = p;
        s
    }

    /// The series `t`.
    pub fn t(order: usize) -> Series {
        Series::monomial(order, 1, Poly1::one())
    }

    /// `p(x) * t^k`, or zero when `k` exceeds the order.
    pub fn monomial(order: usize, k: usize, p: Poly1) -> Series {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = p;
        }
        s
    }

    /// Pads with zeros or drops the tail so that exactly `order + 1` slots remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Poly1>) -> Series {
        coeffs.resize(order + 1, Poly1::zero());
        Series { order, coeffs }
    }

    /// A series with rational (x-free) coefficients.
    pub fn from_scalars(order: usize, coeffs: &[Rational]) -> Series {
        Series::from_coeffs(order, coeffs.iter().cloned().map(Poly1::constant).collect())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Poly1] {
        &self.coeffs
    }

    /// Coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> &Poly1 {
        &self.coeffs[n]
    }

    pub fn with_order(&self, order: usize) -> Series {
        Series::from_coeffs(order, self.coeffs.clone())
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly1) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Divides by `t`, lowering the order by one. Requires a zero constant term.
    pub fn shift_down(&self) -> Result<Series, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.checked_sub(1).ok_or(Error::OrderTooSmall)?;
        Ok(Series::from_coeffs(order, self.coeffs[1..].to_vec()))
    }

    fn check_order(&self, other: &Series) -> Result<(), Error> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Series) -> Result<Series, Error> {
        self.check_order(other)?;
        let mut out = Series::zero(self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn require_zero_constant(&self) -> Result<(), Error> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::NonzeroConstantTerm)
        }
    }

    fn require_unit_constant(&self) -> Result<(), Error> {
        if self.coeffs[0] == Poly1::one() {
            Ok(())
        } else {
            Err(Error::NonUnitConstantTerm)
        }
    }

    /// `exp(u)` for `u` with zero constant term.
    pub fn exp(&self) -> Result<Series, Error> {
        self.require_zero_constant()?;
        let mut sum = Series::one(self.order);
        let mut term = Series::one(self.order);
        for k in 1..=self.order {
            term = term.mul(self)?.scale(&Rational::from(k).recip());
            sum = &sum + &term;
        }
        Ok(sum)
    }

    /// `log(1 + u)` for `u` with zero constant term.
    pub fn log1p(&self) -> Result<Series, Error> {
        self.require_zero_constant()?;
        let mut sum = Series::zero(self.order);
        let mut power = Series::one(self.order);
        for k in 1..=self.order {
            power = power.mul(self)?;
            let c = Rational::new(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            sum = &sum + &power.scale(&c);
        }
        Ok(sum)
    }

    /// `u^rho` for `u` with constant term 1, as `exp(rho * log(u))`.
    pub fn pow(&self, rho: &Rational) -> Result<Series, Error> {
        self.require_unit_constant()?;
        let u_minus_one = self - &Series::one(self.order);
        u_minus_one.log1p()?.scale(rho).exp()
    }

    /// `self / divisor` where the divisor has constant term 1.
    pub fn div_unit(&self, divisor: &Series) -> Result<Series, Error> {
        self.check_order(divisor)?;
        divisor.require_unit_constant()?;
        let mut out: Vec<Poly1> = Vec::with_capacity(self.order + 1);
        for n in 0..=self.order {
            let mut c = self.coeffs[n].clone();
            for k in 1..=n {
                if !divisor.coeffs[k].is_zero() {
                    c = &c - &(&divisor.coeffs[k] * &out[n - k]);
                }
            }
            out.push(c);
        }
        Ok(Series {
            order: self.order,
            coeffs: out,
        })
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

pub fn series_mul(a: &Series, b: &Series) -> Result<Series, Error> {
    a.mul(b)
}

pub fn series_exp(u: &Series) -> Result<Series, Error> {
    u.exp()
}

pub fn series_log1p(u: &Series) -> Result<Series, Error> {
    u.log1p()
}

pub fn series_pow(u: &Series, rho: &Rational) -> Result<Series, Error> {
    u.pow(rho)
}

pub fn series_div_unit(a: &Series, b: &Series) -> Result<Series, Error> {
    a.div_unit(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    fn scalars(order: usize, c: &[(i64, i64)]) -> Series {
        let v: Vec<Rational> = c.iter().map(|&(n, d)| q(n, d)).collect();
        Series::from_scalars(order, &v)
    }

    #[test]
    fn mul_examples() {
        let a = scalars(2, &[(1, 1), (1, 1)]);
        let b = scalars(2, &[(1, 1), (-1, 1)]);
        assert_eq!(series_mul(&a, &b).unwrap(), scalars(2, &[(1, 1), (0, 1), (-1, 1)]));
        assert_eq!(series_mul(&a, &Series::one(2)).unwrap(), a);
        assert!(matches!(
            series_mul(&a, &Series::one(3)),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn mul_of_exponentials_brute_force() {
        // e^{xt} e^{xt}: compare against the direct double sum of x^i/i! x^j/j!.
        let e = Series::from_coeffs(
            2,
            (0..=2)
                .map(|n| Poly1::monomial(n, Rational::factorial(n).recip()))
                .collect(),
        );
        let got = series_mul(&e, &e).unwrap();
        for n in 0..=2usize {
            let mut want = Rational::zero();
            for i in 0..=n {
                want += Rational::factorial(i).recip() * Rational::factorial(n - i).recip();
            }
            assert_eq!(got.coeff(n), &Poly1::monomial(n, want));
        }
        assert_eq!(got.coeff(2), &Poly1::monomial(2, q(2, 1)));
    }

    #[test]
    fn exp_examples() {
        let xt = Series::monomial(3, 1, Poly1::x());
        let e = series_exp(&xt).unwrap();
        for n in 0..=3 {
            assert_eq!(e.coeff(n), &Poly1::monomial(n, Rational::factorial(n).recip()));
        }
        let u = &Series::monomial(2, 1, Poly1::x()) - &scalars(2, &[(0, 1), (0, 1), (1, 2)]);
        let e = series_exp(&u).unwrap();
        assert_eq!(e.coeff(2), &Poly1::from_coeffs(vec![q(-1, 2), q(0, 1), q(1, 2)]));
        assert_eq!(series_exp(&Series::zero(4)).unwrap(), Series::one(4));
        assert!(matches!(series_exp(&Series::one(2)), Err(Error::NonzeroConstantTerm)));
    }

    #[test]
    fn log_examples() {
        let t = Series::t(3);
        assert_eq!(
            series_log1p(&t).unwrap(),
            scalars(3, &[(0, 1), (1, 1), (-1, 2), (1, 3)])
        );
        assert_eq!(series_exp(&series_log1p(&t).unwrap()).unwrap(), &Series::one(3) + &t);
        assert_eq!(
            series_log1p(&Series::t(2).scale(&q(-1, 1))).unwrap(),
            scalars(2, &[(0, 1), (-1, 1), (-1, 2)])
        );
    }

    #[test]
    fn pow_examples() {
        let one_plus_t = scalars(2, &[(1, 1), (1, 1)]);
        assert_eq!(
            series_pow(&one_plus_t, &q(2, 1)).unwrap(),
            scalars(2, &[(1, 1), (2, 1), (1, 1)])
        );
        assert_eq!(
            series_pow(&scalars(2, &[(1, 1), (-1, 1)]), &q(-2, 1)).unwrap(),
            scalars(2, &[(1, 1), (2, 1), (3, 1)])
        );
        let root = series_pow(&one_plus_t, &q(1, 2)).unwrap();
        assert_eq!(root, scalars(2, &[(1, 1), (1, 2), (-1, 8)]));
        // oracle: squaring gives back 1 + t
        assert_eq!(series_mul(&root, &root).unwrap(), one_plus_t);
        assert!(matches!(
            series_pow(&scalars(2, &[(2, 1)]), &q(1, 2)),
            Err(Error::NonUnitConstantTerm)
        ));
    }

    #[test]
    fn div_unit_examples() {
        // log(1+t)/t at order 2, computed from the order-3 logarithm.
        let v = series_log1p(&Series::t(3)).unwrap().shift_down().unwrap();
        let inv = series_div_unit(&Series::one(2), &v).unwrap();
        assert_eq!(inv, scalars(2, &[(1, 1), (1, 2), (-1, 12)]));
        assert_eq!(series_mul(&inv, &v).unwrap(), Series::one(2));
        assert_eq!(series_div_unit(&v, &v).unwrap(), Series::one(2));
        let got = series_div_unit(&Series::t(2), &scalars(2, &[(1, 1), (1, 1)])).unwrap();
        assert_eq!(got, scalars(2, &[(0, 1), (1, 1), (-1, 1)]));
    }
}
