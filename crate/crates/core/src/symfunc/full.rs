use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::partition::{partitions, partitions_up_to, rlex_compare, Partition};
use super::symf::{complete, complete_product, elementary, elementary_product, eval_single, sym_shift, SymF, SymFY};
use crate::error::Error;
use crate::exactalg::{Poly1, Rational};
use crate::report::VerifyReport;

/// A partition-indexed family `p_λ` of symmetric functions, one entry for
/// every `|λ| <= trunc`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullSeq {
    trunc: u32,
    entries: BTreeMap<Partition, SymF>,
}

impl FullSeq {
    pub fn from_fn(trunc: u32, mut f: impl FnMut(&Partition) -> SymF) -> FullSeq {
        let entries = partitions_up_to(trunc)
            .into_iter()
            .map(|l| {
                let p = f(&l);
                (l, p)
            })
            .collect();
        FullSeq { trunc, entries }
    }

    /// `p_λ = e_λ`
    pub fn elementary(trunc: u32) -> FullSeq {
        FullSeq::from_fn(trunc, elementary_product)
    }

    /// `p_λ = h_λ`
    pub fn complete(trunc: u32) -> FullSeq {
        FullSeq::from_fn(trunc, complete_product)
    }

    /// `p_λ = m_{λ'}`
    pub fn monomial_conjugate(trunc: u32) -> FullSeq {
        FullSeq::from_fn(trunc, |l| SymF::monomial(l.conjugate()))
    }

    pub fn scale(&self, c: &Rational) -> FullSeq {
        FullSeq {
            trunc: self.trunc,
            entries: self.entries.iter().map(|(l, f)| (l.clone(), f.scale(c))).collect(),
        }
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn get(&self, lambda: &Partition) -> Option<&SymF> {
        self.entries.get(lambda)
    }

    pub fn entries(&self) -> &BTreeMap<Partition, SymF> {
        &self.entries
    }
}

/// Checks that each `p_λ` is homogeneous of weight `|λ|`, supported on
/// `m_μ` with `λ' ⪯ μ`, and has a nonzero coefficient on `m_{λ'}`.
pub fn is_full_sequence(s: &FullSeq) -> VerifyReport<Partition, SymF> {
    let mut report = VerifyReport::new(0..=s.trunc as usize);
    for lambda in partitions_up_to(s.trunc) {
        let Some(p) = s.entries.get(&lambda) else {
            report.push("missing", lambda, SymF::zero(), SymF::zero());
            continue;
        };
        let w = lambda.weight();
        if !p.is_homogeneous(w) {
            report.push("homogeneous", lambda.clone(), p.clone(), p.homogeneous(w));
        }
        let conj = lambda.conjugate();
        let allowed = SymF::from_terms(
            p.terms()
                .filter(|(mu, _)| mu.weight() == w && rlex_compare(mu, &conj).is_ge())
                .map(|(mu, c)| (mu.clone(), c.clone())),
        );
        if p.homogeneous(w) != allowed {
            report.push("support", lambda.clone(), p.homogeneous(w), allowed);
        }
        if p.coeff(&conj).is_zero() {
            let lead = SymF::monomial(conj);
            report.push("leading", lambda, p.clone(), lead);
        }
    }
    report
}

/// Right-hand side `Σ_α p_α(x) p_{λ-α}(y, 0, 0, ...)`, with `α` ranging over
/// integer vectors `0 <= α <= λ` coordinatewise and both indices sorted
/// into partitions.
fn convolution_sum(s: &FullSeq, lambda: &Partition, single: &BTreeMap<Partition, Poly1>) -> SymFY {
    // Group the box by the unordered pair of indices to avoid re-adding the
    // same product.
    let mut pairs: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
    let parts = lambda.parts();
    let mut alpha = vec![0u32; parts.len()];
    loop {
        let rest: Vec<u32> = parts.iter().zip(&alpha).map(|(l, a)| l - a).collect();
        let key = (Partition::from_unsorted(alpha.clone()), Partition::from_unsorted(rest));
        *pairs.entry(key).or_insert(0) += 1;
        let mut i = 0;
        loop {
            if i == alpha.len() {
                return pairs.iter().filter(|((_, b), _)| !single[b].is_zero()).fold(
                    SymFY::zero(),
                    |acc, ((a, b), count)| {
                        &acc + &SymFY::outer(&s.entries[a], &single[b]).scale(&Rational::from(*count as i64))
                    },
                );
            }
            if alpha[i] < parts[i] {
                alpha[i] += 1;
                break;
            }
            alpha[i] = 0;
            i += 1;
        }
    }
}

fn single_values(s: &FullSeq) -> BTreeMap<Partition, Poly1> {
    s.entries.iter().map(|(l, f)| (l.clone(), eval_single(f))).collect()
}

/// The images `F^y p_λ` forced by the convolution identity, keyed by `λ`.
#[allow(non_snake_case)]
pub fn derive_sym_F(s: &FullSeq) -> BTreeMap<Partition, SymFY> {
    let single = single_values(s);
    s.entries
        .keys()
        .map(|l| (l.clone(), convolution_sum(s, l, &single)))
        .collect()
}

fn require_full(s: &FullSeq) -> Result<(), Error> {
    match is_full_sequence(s).first_violation() {
        Some(v) => Err(Error::Precondition(format!(
            "not a full sequence: {} fails at {}",
            v.check, v.at
        ))),
        None => Ok(()),
    }
}

/// Compares `E^y p_λ` with the convolution sum for every `λ`.
pub fn verify_full_divided(s: &FullSeq) -> Result<VerifyReport<Partition, SymFY>, Error> {
    require_full(s)?;
    let mut report = VerifyReport::new(0..=s.trunc as usize);
    for (lambda, rhs) in derive_sym_F(s) {
        let lhs = sym_shift(&s.entries[&lambda]);
        report.compare("full_divided", lambda, lhs, rhs);
    }
    Ok(report)
}

/// Re-expresses the images on the monomial basis. Within each weight, `p_λ`
/// is triangular against `m_{λ'}`, so `m_μ` is recovered from `p_{μ'}` by
/// back-substitution from the `≪`-largest `μ` down.
fn images_on_monomials(s: &FullSeq, on_p: &BTreeMap<Partition, SymFY>) -> BTreeMap<Partition, SymFY> {
    let mut out: BTreeMap<Partition, SymFY> = BTreeMap::new();
    for w in 0..=s.trunc {
        for mu in partitions(w).into_iter().rev() {
            let lambda = mu.conjugate();
            let p = &s.entries[&lambda];
            let mut img = on_p[&lambda].clone();
            for (nu, b) in p.terms() {
                if nu != &mu {
                    img = &img - &out[nu].scale(b);
                }
            }
            out.insert(mu.clone(), img.scale(&p.coeff(&mu).recip()));
        }
    }
    out
}

/// Applies `E^z` to the symmetric coefficients of an element of `Λ[y]`;
/// the result is keyed by `(y, z, λ)`.
fn shift_z(f: &SymFY) -> BTreeMap<(u32, u32, Partition), Rational> {
    let mut out = BTreeMap::new();
    for (k, l, c) in f.terms() {
        for (r, rest, d) in sym_shift(&SymF::monomial(l.clone())).terms() {
            add3(&mut out, (k, r, rest.clone()), c * d);
        }
    }
    out
}

fn add3(map: &mut BTreeMap<(u32, u32, Partition), Rational>, key: (u32, u32, Partition), c: Rational) {
    let slot = map.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += &c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymShefferReport {
    pub shift_invariant: bool,
    /// The constant with `F^y = c E^y`, present when `F^y` is shift-invariant.
    pub c: Option<Rational>,
    /// The first `m_μ` on which `F^y E^z` and `E^z F^y` differ.
    pub witness: Option<Partition>,
}

/// Derives `F^y` from the convolution identity and decides whether it
/// commutes with the formal shift `E^z`. If it does, it must equal
/// `c E^y` with `c = p_()`; anything else is an internal error.
pub fn sym_sheffer_verify(s: &FullSeq) -> Result<SymShefferReport, Error> {
    require_full(s)?;
    let on_m = images_on_monomials(s, &derive_sym_F(s));
    for (mu, img) in &on_m {
        // F^y E^z m_μ = Σ_r z^r F^y m_{μ - r}
        let mut lhs = BTreeMap::new();
        for (r, rest, c) in sym_shift(&SymF::monomial(mu.clone())).terms() {
            for (k, l, d) in on_m[rest].terms() {
                add3(&mut lhs, (k, r, l.clone()), c * d);
            }
        }
        if lhs != shift_z(img) {
            return Ok(SymShefferReport {
                shift_invariant: false,
                c: None,
                witness: Some(mu.clone()),
            });
        }
    }
    let c = s.entries[&Partition::empty()].augmentation();
    for (mu, img) in &on_m {
        let want = sym_shift(&SymF::monomial(mu.clone())).scale(&c);
        if img != &want {
            return Err(Error::Internal(format!(
                "shift-invariant F differs from {c} E^y on m{mu}: {img} vs {want}"
            )));
        }
    }
    Ok(SymShefferReport {
        shift_invariant: true,
        c: Some(c),
        witness: None,
    })
}

/// Checks `E^y s_n = Σ_k s_k(y, 0, ...) s_{n-k}` for a sequence indexed by
/// integers.
pub fn linear_divided_check(seq: &[SymF]) -> VerifyReport<usize, SymFY> {
    let mut report = VerifyReport::new(0..=seq.len().saturating_sub(1));
    for n in 0..seq.len() {
        let rhs = (0..=n).fold(SymFY::zero(), |acc, k| {
            &acc + &SymFY::outer(&seq[n - k], &eval_single(&seq[k]))
        });
        report.compare("linear_divided", n, sym_shift(&seq[n]), rhs);
    }
    report
}

pub fn elementary_sequence(n_max: u32) -> Vec<SymF> {
    (0..=n_max).map(elementary).collect()
}

pub fn complete_sequence(n_max: u32) -> Vec<SymF> {
    (0..=n_max).map(complete).collect()
}

/// `Σ_k (-1)^k e_k h_{n-k} = δ_{n0}` for every `n <= n_max`.
pub fn sym_antipode_identity(n_max: u32) -> VerifyReport<usize, SymF> {
    let mut report = VerifyReport::new(0..=n_max as usize);
    for n in 0..=n_max {
        let lhs = (0..=n).fold(SymF::zero(), |acc, k| {
            let sign = Rational::from_int(if k % 2 == 0 { 1 } else { -1 });
            &acc + &elementary(k).mul_trunc(&complete(n - k), n).scale(&sign)
        });
        let rhs = if n == 0 { SymF::one() } else { SymF::zero() };
        report.compare("antipode", n as usize, lhs, rhs);
    }
    report
}
