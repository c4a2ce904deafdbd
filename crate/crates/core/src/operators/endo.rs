use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::exactalg::{Poly1, Poly2, Rational};

/// A linear operator on polynomials of degree at most `trunc`, stored as the
/// images of `x^0..x^trunc` (the columns of its matrix in the monomial basis).
///
/// Images are truncated at degree `trunc`. `degree_shift` is the smallest `d`
/// with `deg T(x^n) <= n + d` over the stored columns, so inputs of degree at
/// most `trunc - max(d, 0)` have exact images.
#[derive(Clone, PartialEq, Eq, Deserialize)]
#[serde(try_from = "RawEndoOp")]
pub struct EndoOp {
    trunc: usize,
    columns: Vec<Poly1>,
    degree_shift: i64,
}

#[derive(Serialize, Deserialize)]
struct RawEndoOp {
    trunc: usize,
    columns: Vec<Vec<Rational>>,
}

impl TryFrom<RawEndoOp> for EndoOp {
    type Error = Error;

    fn try_from(raw: RawEndoOp) -> Result<Self, Self::Error> {
        let expected = raw.trunc.saturating_add(1);
        if raw.columns.len() != expected {
            return Err(Error::Length {
                expected,
                found: raw.columns.len(),
            });
        }
        if let Some(col) = raw.columns.iter().find(|c| c.len() > expected) {
            return Err(Error::Length {
                expected,
                found: col.len(),
            });
        }
        Ok(EndoOp::from_images(
            raw.columns.into_iter().map(Poly1::from_coeffs).collect(),
        ))
    }
}

impl Serialize for EndoOp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawEndoOp {
            trunc: self.trunc,
            columns: self.matrix_columns(),
        }
        .serialize(serializer)
    }
}

impl EndoOp {
    /// The operator sending `x^n` to `images[n]`; `trunc = images.len() - 1`.
    ///
    /// Panics on an empty image list.
    pub fn from_images(images: Vec<Poly1>) -> EndoOp {
        assert!(!images.is_empty(), "an operator needs at least the image of x^0");
        let trunc = images.len() - 1;
        let columns: Vec<Poly1> = images.into_iter().map(|p| p.truncate(trunc)).collect();
        let degree_shift = columns
            .iter()
            .enumerate()
            .filter_map(|(n, c)| c.degree().map(|d| d as i64 - n as i64))
            .max()
            .unwrap_or(-(trunc as i64) - 1);
        EndoOp {
            trunc,
            columns,
            degree_shift,
        }
    }

    pub fn from_fn(trunc: usize, f: impl FnMut(usize) -> Poly1) -> EndoOp {
        EndoOp::from_images((0..=trunc).map(f).collect())
    }

    pub fn identity(trunc: usize) -> EndoOp {
        EndoOp::from_fn(trunc, |n| Poly1::monomial(n, Rational::one()))
    }

    pub fn zero(trunc: usize) -> EndoOp {
        EndoOp::from_fn(trunc, |_| Poly1::zero())
    }

    /// `D`
    pub fn derivative(trunc: usize) -> EndoOp {
        EndoOp::from_fn(trunc, |n| Poly1::monomial(n, Rational::one()).derivative())
    }

    /// Multiplication by `x` (the image of `x^trunc` is lost to truncation).
    pub fn mul_x(trunc: usize) -> EndoOp {
        EndoOp::from_fn(trunc, |n| Poly1::monomial(n + 1, Rational::one()))
    }

    /// Multiplication by a fixed polynomial.
    pub fn mul_poly(trunc: usize, p: &Poly1) -> EndoOp {
        EndoOp::from_fn(trunc, |n| &Poly1::monomial(n, Rational::one()) * p)
    }

    /// `E^c : p(x) -> p(x + c)`
    pub fn shift(trunc: usize, c: &Rational) -> EndoOp {
        let x_plus_c = Poly1::from_coeffs(vec![c.clone(), Rational::one()]);
        EndoOp::from_fn(trunc, |n| x_plus_c.pow(n))
    }

    /// The rank-one operator `p -> p(a)` (a constant polynomial).
    pub fn evaluation(trunc: usize, a: &Rational) -> EndoOp {
        EndoOp::from_fn(trunc, |n| Poly1::constant(a.pow(n as i32)))
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn degree_shift(&self) -> i64 {
        self.degree_shift
    }

    /// Largest input degree whose image is not affected by truncation.
    pub fn exact_degree(&self) -> Option<usize> {
        let d = self.degree_shift.max(0) as usize;
        self.trunc.checked_sub(d)
    }

    /// Image of `x^n`.
    pub fn column(&self, n: usize) -> &Poly1 {
        &self.columns[n]
    }

    pub fn columns(&self) -> &[Poly1] {
        &self.columns
    }

    /// Matrix entry: coefficient of `x^row` in the image of `x^col`.
    pub fn entry(&self, row: usize, col: usize) -> Rational {
        self.columns[col].coeff(row)
    }

    /// Columns padded to `trunc + 1` entries.
    pub fn matrix_columns(&self) -> Vec<Vec<Rational>> {
        self.columns
            .iter()
            .map(|c| (0..=self.trunc).map(|r| c.coeff(r)).collect())
            .collect()
    }

    fn check_trunc(&self, other: &EndoOp) -> Result<(), Error> {
        if self.trunc != other.trunc {
            return Err(Error::TruncMismatch {
                left: self.trunc,
                right: other.trunc,
            });
        }
        Ok(())
    }

    pub fn apply(&self, p: &Poly1) -> Result<Poly1, Error> {
        match p.degree() {
            Some(d) if d > self.trunc => Err(Error::DegreeOverflow {
                degree: d,
                trunc: self.trunc,
            }),
            _ => Ok(self.apply_truncating(p)),
        }
    }

    /// Applies the operator, ignoring terms of `p` above the truncation degree.
    pub fn apply_truncating(&self, p: &Poly1) -> Poly1 {
        let mut out = Poly1::zero();
        for (n, c) in p.coeffs().iter().enumerate().take(self.trunc + 1) {
            if !c.is_zero() {
                out = &out + &self.columns[n].scale(c);
            }
        }
        out
    }

    /// Applies the operator to the `x`-variable of a bivariate polynomial,
    /// treating `y` as a scalar.
    pub fn apply_x(&self, p: &Poly2) -> Result<Poly2, Error> {
        let mut out = Poly2::zero();
        for (i, j, c) in p.terms() {
            if i as usize > self.trunc {
                return Err(Error::DegreeOverflow {
                    degree: i as usize,
                    trunc: self.trunc,
                });
            }
            for (k, a) in self.columns[i as usize].coeffs().iter().enumerate() {
                out.add_term(k as u32, j, a * c);
            }
        }
        Ok(out)
    }

    /// Applies the operator to the `y`-variable, treating `x` as a scalar
    /// (the transported operator `T_y`).
    pub fn apply_y(&self, p: &Poly2) -> Result<Poly2, Error> {
        Ok(self.apply_x(&p.swap())?.swap())
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &EndoOp) -> Result<EndoOp, Error> {
        self.check_trunc(other)?;
        Ok(EndoOp::from_images(
            other.columns.iter().map(|c| self.apply_truncating(c)).collect(),
        ))
    }

    pub fn add(&self, other: &EndoOp) -> Result<EndoOp, Error> {
        self.check_trunc(other)?;
        Ok(EndoOp::from_images(
            self.columns.iter().zip(&other.columns).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &EndoOp) -> Result<EndoOp, Error> {
        self.check_trunc(other)?;
        Ok(EndoOp::from_images(
            self.columns.iter().zip(&other.columns).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, c: &Rational) -> EndoOp {
        EndoOp::from_images(self.columns.iter().map(|p| p.scale(c)).collect())
    }

    pub fn pow(&self, k: usize) -> EndoOp {
        let mut acc = EndoOp::identity(self.trunc);
        for _ in 0..k {
            acc = self.compose(&acc).expect("same truncation");
        }
        acc
    }

    /// Exact inverse of a degree-preserving operator (upper triangular with
    /// nonzero diagonal).
    pub fn invert(&self) -> Result<EndoOp, Error> {
        if self.degree_shift != 0 {
            return Err(Error::NotInvertible(format!(
                "degree shift is {}, expected 0",
                self.degree_shift
            )));
        }
        if let Some(n) = (0..=self.trunc).find(|&n| self.entry(n, n).is_zero()) {
            return Err(Error::NotInvertible(format!("zero diagonal entry at x^{n}")));
        }
        // Solve T(inv_n) = x^n column by column, back-substituting from the top.
        let mut inverse: Vec<Poly1> = Vec::with_capacity(self.trunc + 1);
        for n in 0..=self.trunc {
            let mut coeffs = vec![Rational::zero(); n + 1];
            let mut residual = Poly1::monomial(n, Rational::one());
            for k in (0..=n).rev() {
                let c = residual.coeff(k) / self.entry(k, k);
                if !c.is_zero() {
                    residual = &residual - &self.columns[k].scale(&c);
                    coeffs[k] = c;
                }
            }
            debug_assert!(residual.is_zero());
            inverse.push(Poly1::from_coeffs(coeffs));
        }
        Ok(EndoOp::from_images(inverse))
    }

    /// Restriction (or zero-extension of the basis) to a new truncation degree.
    pub fn with_trunc(&self, trunc: usize) -> EndoOp {
        EndoOp::from_fn(trunc, |n| self.columns.get(n).cloned().unwrap_or_default())
    }
}

impl fmt::Debug for EndoOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EndoOp")
            .field("trunc", &self.trunc)
            .field("degree_shift", &self.degree_shift)
            .field("columns", &self.columns)
            .finish()
    }
}

impl fmt::Display for EndoOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.columns.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "x^{n} -> {c}")?;
        }
        Ok(())
    }
}

pub fn op_from_images(images: Vec<Poly1>) -> EndoOp {
    EndoOp::from_images(images)
}

pub fn op_compose(a: &EndoOp, b: &EndoOp) -> Result<EndoOp, Error> {
    a.compose(b)
}

pub fn op_invert(a: &EndoOp) -> Result<EndoOp, Error> {
    a.invert()
}

pub fn shift_endo(c: &Rational, trunc: usize) -> EndoOp {
    EndoOp::shift(trunc, c)
}

/// Applies `T` to the `y`-variable of `p`; `y`-degrees above the truncation
/// are rejected.
pub fn transport_apply_y(t: &EndoOp, p: &Poly2) -> Result<Poly2, Error> {
    t.apply_y(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::q;

    #[test]
    fn from_images_examples() {
        assert_eq!(
            op_from_images((0..=4).map(|n| Poly1::monomial(n, Rational::one())).collect()),
            EndoOp::identity(4)
        );
        let d = op_from_images(
            (0..=4)
                .map(|n| {
                    if n == 0 {
                        Poly1::zero()
                    } else {
                        Poly1::monomial(n - 1, Rational::from(n))
                    }
                })
                .collect(),
        );
        assert_eq!(d, EndoOp::derivative(4));
        assert_eq!(d.degree_shift(), -1);
        let e1 = op_from_images((0..=4).map(|n| Poly1::from_ints(&[1, 1]).pow(n)).collect());
        assert_eq!(e1, shift_endo(&Rational::one(), 4));
    }

    #[test]
    fn degree_shift_metadata() {
        assert_eq!(EndoOp::identity(3).degree_shift(), 0);
        assert_eq!(EndoOp::mul_x(3).degree_shift(), 1);
        assert_eq!(EndoOp::mul_x(3).exact_degree(), Some(2));
        assert_eq!(EndoOp::zero(3).degree_shift(), -4);
        assert_eq!(EndoOp::evaluation(3, &Rational::zero()).degree_shift(), 0);
    }

    #[test]
    fn invert_examples() {
        assert_eq!(op_invert(&EndoOp::identity(5)).unwrap(), EndoOp::identity(5));
        let e = shift_endo(&Rational::one(), 5);
        let back = shift_endo(&q(-1, 1), 5);
        assert_eq!(op_compose(&e, &back).unwrap(), EndoOp::identity(5));
        assert_eq!(op_invert(&e).unwrap(), back);
        assert!(op_invert(&EndoOp::derivative(3)).is_err());
        assert!(op_invert(&EndoOp::mul_x(3)).is_err());
        let singular = EndoOp::from_images(vec![Poly1::one(), Poly1::from_ints(&[1])]);
        assert!(matches!(singular.invert(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_endo(&Rational::zero(), 4), EndoOp::identity(4));
        let lower = Poly1::from_ints(&[0, -1, 1]);
        assert_eq!(
            shift_endo(&Rational::one(), 4).apply(&lower).unwrap(),
            Poly1::from_ints(&[0, 1, 1])
        );
    }

    #[test]
    fn transport_examples() {
        let p = Poly2::term(1, 2, Rational::one());
        assert_eq!(
            transport_apply_y(&EndoOp::derivative(4), &p).unwrap(),
            Poly2::term(1, 1, q(2, 1))
        );
        let p = Poly2::from_terms([((2, 0), q(3, 1)), ((1, 3), q(1, 1)), ((0, 1), q(5, 1))]);
        let eps = EndoOp::evaluation(4, &Rational::zero());
        assert_eq!(transport_apply_y(&eps, &p).unwrap(), Poly2::term(2, 0, q(3, 1)));
        assert_eq!(
            transport_apply_y(&shift_endo(&Rational::one(), 4), &Poly2::y()).unwrap(),
            &Poly2::y() + &Poly2::one()
        );
        assert!(matches!(
            transport_apply_y(&EndoOp::identity(1), &Poly2::term(0, 2, q(1, 1))),
            Err(Error::DegreeOverflow { degree: 2, trunc: 1 })
        ));
    }

    #[test]
    fn json_shape() {
        let d = EndoOp::derivative(2);
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(
            s,
            r#"{"trunc":2,"columns":[["0","0","0"],["1","0","0"],["0","2","0"]]}"#
        );
        let back: EndoOp = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<EndoOp>(r#"{"trunc":1,"columns":[["1"]]}"#).is_err());
    }
}
