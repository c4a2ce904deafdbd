use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exactalg::{Poly1, Rational};

/// A graded sequence `p_0, ..., p_N` with `deg p_n = n` for every entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPolySeq")]
pub struct PolySeq {
    trunc: usize,
    polys: Vec<Poly1>,
}

#[derive(Deserialize)]
struct RawPolySeq {
    trunc: usize,
    polys: Vec<Poly1>,
}

impl TryFrom<RawPolySeq> for PolySeq {
    type Error = Error;

    fn try_from(raw: RawPolySeq) -> Result<Self, Self::Error> {
        if raw.polys.len() != raw.trunc.saturating_add(1) {
            return Err(Error::Length {
                expected: raw.trunc.saturating_add(1),
                found: raw.polys.len(),
            });
        }
        PolySeq::new(raw.polys)
    }
}

impl PolySeq {
    /// Builds a sequence from `p_0..p_N`; the truncation degree is `len - 1`.
    pub fn new(polys: Vec<Poly1>) -> Result<PolySeq, Error> {
        if polys.is_empty() {
            return Err(Error::Length { expected: 1, found: 0 });
        }
        for (index, p) in polys.iter().enumerate() {
            if p.degree() != Some(index) {
                return Err(Error::SequenceDegree {
                    index,
                    found: p.degree(),
                });
            }
        }
        Ok(PolySeq {
            trunc: polys.len() - 1,
            polys,
        })
    }

    pub fn from_fn(trunc: usize, f: impl FnMut(usize) -> Poly1) -> Result<PolySeq, Error> {
        PolySeq::new((0..=trunc).map(f).collect())
    }

    /// `x^n / n!`
    pub fn divided_powers(trunc: usize) -> PolySeq {
        PolySeq::from_fn(trunc, |n| Poly1::monomial(n, Rational::factorial(n).recip()))
            .expect("monomials have the right degrees")
    }

    /// `x^n`
    pub fn powers(trunc: usize) -> PolySeq {
        PolySeq::from_fn(trunc, |n| Poly1::monomial(n, Rational::one())).expect("monomials have the right degrees")
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn polys(&self) -> &[Poly1] {
        &self.polys
    }

    pub fn get(&self, n: usize) -> &Poly1 {
        &self.polys[n]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Multiplies entry `n` by `n!` (divided-power form to binomial form).
    pub fn to_binomial(&self) -> PolySeq {
        self.map(|n, p| p.scale(&Rational::factorial(n)))
    }

    /// Divides entry `n` by `n!` (binomial form to divided-power form).
    pub fn to_divided(&self) -> PolySeq {
        self.map(|n, p| p.scale(&Rational::factorial(n).recip()))
    }

    /// Applies a degree-preserving map to every entry.
    pub fn map(&self, mut f: impl FnMut(usize, &Poly1) -> Poly1) -> PolySeq {
        PolySeq::new(self.polys.iter().enumerate().map(|(n, p)| f(n, p)).collect()).expect("map must preserve degrees")
    }

    pub fn truncated(&self, trunc: usize) -> PolySeq {
        PolySeq {
            trunc: trunc.min(self.trunc),
            polys: self.polys[..=trunc.min(self.trunc)].to_vec(),
        }
    }
}
