use std::fmt;

use serde::{Deserialize, Serialize};

use super::EndoOp;
use crate::error::Error;
use crate::exactalg::{poly_substitute, Poly1, Poly2, Rational};

/// A linear map `K[x] -> K[x, y]` on polynomials of degree at most `trunc`,
/// stored as the images of `x^0..x^trunc`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBivarOp")]
pub struct BivarOp {
    trunc: usize,
    images: Vec<Poly2>,
}

#[derive(Deserialize)]
struct RawBivarOp {
    trunc: usize,
    images: Vec<Poly2>,
}

impl TryFrom<RawBivarOp> for BivarOp {
    type Error = Error;

    fn try_from(raw: RawBivarOp) -> Result<Self, Self::Error> {
        if raw.images.len() != raw.trunc.saturating_add(1) {
            return Err(Error::Length {
                expected: raw.trunc.saturating_add(1),
                found: raw.images.len(),
            });
        }
        Ok(BivarOp::from_images(raw.images))
    }
}

impl BivarOp {
    /// Panics on an empty image list.
    pub fn from_images(images: Vec<Poly2>) -> BivarOp {
        assert!(!images.is_empty(), "a bivariate operator needs at least one image");
        BivarOp {
            trunc: images.len() - 1,
            images,
        }
    }

    pub fn from_fn(trunc: usize, f: impl FnMut(usize) -> Poly2) -> BivarOp {
        BivarOp::from_images((0..=trunc).map(f).collect())
    }

    /// `E^y : p(x) -> p(x + y)`
    pub fn shift(trunc: usize) -> BivarOp {
        BivarOp::shift_minus(trunc, &Rational::zero())
    }

    /// `E^{y - c} : p(x) -> p(x + y - c)`
    pub fn shift_minus(trunc: usize, c: &Rational) -> BivarOp {
        let r = &(&Poly2::x() + &Poly2::y()) - &Poly2::constant(c.clone());
        BivarOp::from_fn(trunc, |n| poly_substitute(&Poly1::monomial(n, Rational::one()), &r))
    }

    /// `P_y ∘ E^y` for an operator `P` on the truncated space.
    pub fn transported_shift(p: &EndoOp) -> Result<BivarOp, Error> {
        BivarOp::shift(p.trunc()).then_y(p)
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn images(&self) -> &[Poly2] {
        &self.images
    }

    pub fn image(&self, n: usize) -> &Poly2 {
        &self.images[n]
    }

    pub fn apply(&self, p: &Poly1) -> Result<Poly2, Error> {
        if let Some(d) = p.degree().filter(|&d| d > self.trunc) {
            return Err(Error::DegreeOverflow {
                degree: d,
                trunc: self.trunc,
            });
        }
        let mut out = Poly2::zero();
        for (n, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.images[n].scale(c);
            }
        }
        Ok(out)
    }

    /// `ε_y ∘ F`: sets `y := 0` in every image.
    pub fn at_y_zero(&self) -> EndoOp {
        EndoOp::from_images(self.images.iter().map(Poly2::at_y_zero).collect())
    }

    /// `P_y ∘ F`
    pub fn then_y(&self, p: &EndoOp) -> Result<BivarOp, Error> {
        let images = self
            .images
            .iter()
            .map(|img| p.apply_y(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BivarOp::from_images(images))
    }

    /// `P_x ∘ F`
    pub fn then_x(&self, p: &EndoOp) -> Result<BivarOp, Error> {
        let images = self
            .images
            .iter()
            .map(|img| p.apply_x(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BivarOp::from_images(images))
    }

    pub fn scale(&self, c: &Rational) -> BivarOp {
        BivarOp::from_images(self.images.iter().map(|p| p.scale(c)).collect())
    }
}

impl fmt::Debug for BivarOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BivarOp")
            .field("trunc", &self.trunc)
            .field("images", &self.images)
            .finish()
    }
}

impl fmt::Display for BivarOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, img) in self.images.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "x^{n} -> {img}")?;
        }
        Ok(())
    }
}

pub fn shift_bivar(trunc: usize) -> BivarOp {
    BivarOp::shift(trunc)
}
