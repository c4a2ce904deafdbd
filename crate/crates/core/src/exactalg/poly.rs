use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Dense univariate polynomial in `x` with ascending coefficients.
///
/// The highest stored coefficient is always nonzero; the zero polynomial has
/// no coefficients and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly1 {
    coeffs: Vec<Rational>,
}

impl Poly1 {
    pub fn zero() -> Poly1 {
        Poly1 { coeffs: Vec::new() }
    }

    pub fn one() -> Poly1 {
        Poly1::constant(Rational::one())
    }

    pub fn x() -> Poly1 {
        Poly1::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Poly1 {
        Poly1::from_coeffs(vec![c])
    }

    /// `c * x^n`
    pub fn monomial(n: usize, c: Rational) -> Poly1 {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Poly1::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Poly1 {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly1 { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Poly1 {
        Poly1::from_coeffs(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^n`; zero beyond the degree.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rational) -> Poly1 {
        if c.is_zero() {
            return Poly1::zero();
        }
        Poly1 {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * a + c)
    }

    pub fn derivative(&self) -> Poly1 {
        Poly1::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from(k))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Poly1 {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from(k + 1));
        }
        Poly1::from_coeffs(coeffs)
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Poly1 {
        Poly1::from_coeffs(self.coeffs.iter().take(n + 1).cloned().collect())
    }

    /// `self(inner(x))`
    pub fn compose(&self, inner: &Poly1) -> Poly1 {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly1::zero(), |acc, c| &(&acc * inner) + &Poly1::constant(c.clone()))
    }

    pub fn pow(&self, n: usize) -> Poly1 {
        (0..n).fold(Poly1::one(), |acc, _| &acc * self)
    }
}

impl Add for &Poly1 {
    type Output = Poly1;
    fn add(self, rhs: &Poly1) -> Poly1 {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::from_coeffs((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for Poly1 {
    type Output = Poly1;
    fn add(self, rhs: Poly1) -> Poly1 {
        &self + &rhs
    }
}

impl Sub for &Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: &Poly1) -> Poly1 {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly1::from_coeffs((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Sub for Poly1 {
    type Output = Poly1;
    fn sub(self, rhs: Poly1) -> Poly1 {
        &self - &rhs
    }
}

impl Neg for &Poly1 {
    type Output = Poly1;
    fn neg(self) -> Poly1 {
        Poly1 {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: &Poly1) -> Poly1 {
        if self.is_zero() || rhs.is_zero() {
            return Poly1::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly1::from_coeffs(out)
    }
}

impl Mul for Poly1 {
    type Output = Poly1;
    fn mul(self, rhs: Poly1) -> Poly1 {
        &self * &rhs
    }
}

impl fmt::Display for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly1({self})")
    }
}

impl Serialize for Poly1 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly1 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Vec::<Rational>::deserialize(deserializer).map(Poly1::from_coeffs)
    }
}

/// Realizes `ε_x`-style evaluation `p(a)`.
pub fn poly_eval(p: &Poly1, a: &Rational) -> Rational {
    p.eval(a)
}

/// `∫_x^{x+1} p(u) du`, i.e. `A(x+1) - A(x)` for the antiderivative `A`.
pub fn definite_unit_integral(p: &Poly1) -> Poly1 {
    let anti = p.antiderivative();
    let shifted = anti.compose(&Poly1::from_ints(&[1, 1]));
    &shifted - &anti
}
