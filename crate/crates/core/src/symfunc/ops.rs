use std::collections::BTreeMap;

use super::partition::{partitions_up_to, Partition};
use super::symf::{sym_shift, SymF, SymFY};
use crate::error::Error;
use crate::exactalg::Rational;
use crate::report::VerifyReport;

/// A linear operator on symmetric functions of weight at most `trunc`,
/// stored as the images of the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymOp {
    trunc: u32,
    images: BTreeMap<Partition, SymF>,
}

impl SymOp {
    pub fn from_fn(trunc: u32, mut f: impl FnMut(&Partition) -> SymF) -> SymOp {
        let images = partitions_up_to(trunc)
            .into_iter()
            .map(|l| {
                let img = f(&l);
                (l, img)
            })
            .collect();
        SymOp { trunc, images }
    }

    pub fn identity(trunc: u32) -> SymOp {
        SymOp::from_fn(trunc, |l| SymF::monomial(l.clone()))
    }

    /// The scalar shift `E^a`, i.e. `f(x_1, ...) -> f(a, x_1, ...)`.
    pub fn shift(trunc: u32, a: &Rational) -> SymOp {
        SymOp::from_fn(trunc, |l| {
            let mut out = SymF::zero();
            for (k, rest, c) in sym_shift(&SymF::monomial(l.clone())).terms() {
                out.add_term(rest.clone(), c * &a.pow(k as i32));
            }
            out
        })
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn image(&self, lambda: &Partition) -> Option<&SymF> {
        self.images.get(lambda)
    }

    pub fn images(&self) -> &BTreeMap<Partition, SymF> {
        &self.images
    }

    pub fn apply(&self, f: &SymF) -> Result<SymF, Error> {
        let mut out = SymF::zero();
        for (l, c) in f.terms() {
            let img = self.images.get(l).ok_or(Error::DegreeOverflow {
                degree: l.weight() as usize,
                trunc: self.trunc as usize,
            })?;
            out = &out + &img.scale(c);
        }
        Ok(out)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &SymOp) -> Result<SymOp, Error> {
        if self.trunc != other.trunc {
            return Err(Error::TruncMismatch {
                left: self.trunc as usize,
                right: other.trunc as usize,
            });
        }
        let images = other
            .images
            .iter()
            .map(|(l, img)| Ok((l.clone(), self.apply(img)?)))
            .collect::<Result<_, Error>>()?;
        Ok(SymOp {
            trunc: self.trunc,
            images,
        })
    }

    pub fn scale(&self, c: &Rational) -> SymOp {
        SymOp {
            trunc: self.trunc,
            images: self.images.iter().map(|(l, f)| (l.clone(), f.scale(c))).collect(),
        }
    }

    pub fn add(&self, other: &SymOp) -> Result<SymOp, Error> {
        if self.trunc != other.trunc {
            return Err(Error::TruncMismatch {
                left: self.trunc as usize,
                right: other.trunc as usize,
            });
        }
        Ok(SymOp {
            trunc: self.trunc,
            images: self
                .images
                .iter()
                .map(|(l, f)| (l.clone(), f + &other.images[l]))
                .collect(),
        })
    }
}

/// `D_λ m_μ = m_{μ - λ}`, where `μ - λ` removes the parts of `λ` from `μ` as
/// a multiset, and `D_λ m_μ = 0` when they are not all present.
pub fn d_lambda(lambda: &Partition, trunc: u32) -> SymOp {
    SymOp::from_fn(trunc, |mu| match mu.remove_parts(lambda) {
        Some(rest) => SymF::monomial(rest),
        None => SymF::zero(),
    })
}

/// Checks `E^a = Σ a^n D_(n)` with `a` formal, on every `m_μ` with
/// `|μ| <= n_max`; the power of `a` is carried by the `y` slot of `SymFY`.
pub fn shift_expansion_check(n_max: u32) -> VerifyReport<Partition, SymFY> {
    let mut report = VerifyReport::new(0..=n_max as usize);
    for mu in partitions_up_to(n_max) {
        let m = SymF::monomial(mu.clone());
        let lhs = sym_shift(&m);
        let mut rhs = SymFY::zero();
        for n in 0..=mu.weight() {
            for (l, c) in d_lambda(&Partition::row(n), n_max).apply(&m).expect("in range").terms() {
                rhs.add_term(n, l.clone(), c.clone());
            }
        }
        report.compare("shift_expansion", mu, lhs, rhs);
    }
    report
}

/// `θ = Σ c_λ D_λ` with `c_λ = ε(θ m_λ)`, and the check that the sum
/// reproduces `θ` on every basis element.
#[derive(Clone, Debug)]
pub struct ThetaExpansion {
    pub coeffs: BTreeMap<Partition, Rational>,
    pub reconstruction: VerifyReport<Partition, SymF>,
}

pub fn theta_expansion(theta: &SymOp) -> ThetaExpansion {
    let n_max = theta.trunc();
    let coeffs: BTreeMap<Partition, Rational> = theta
        .images()
        .iter()
        .map(|(l, img)| (l.clone(), img.augmentation()))
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut reconstruction = VerifyReport::new(0..=n_max as usize);
    for (mu, img) in theta.images() {
        let mut rebuilt = SymF::zero();
        for (lambda, c) in &coeffs {
            if let Some(rest) = mu.remove_parts(lambda) {
                rebuilt.add_term(rest, c.clone());
            }
        }
        reconstruction.compare("theta_expansion", mu.clone(), rebuilt, img.clone());
    }
    ThetaExpansion { coeffs, reconstruction }
}
