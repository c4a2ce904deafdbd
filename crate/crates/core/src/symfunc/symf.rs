use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::{partitions, Partition};
use crate::exactalg::{Poly1, Rational};

/// A symmetric function in monomial coordinates, `Σ c_λ m_λ`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SymF {
    terms: BTreeMap<Partition, Rational>,
}

fn insert_add<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

impl SymF {
    pub fn zero() -> SymF {
        SymF::default()
    }

    pub fn one() -> SymF {
        SymF::monomial(Partition::empty())
    }

    pub fn monomial(lambda: Partition) -> SymF {
        SymF::term(lambda, Rational::one())
    }

    pub fn term(lambda: Partition, c: Rational) -> SymF {
        let mut out = SymF::zero();
        out.add_term(lambda, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rational)>>(terms: I) -> SymF {
        let mut out = SymF::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        insert_add(&mut self.terms, lambda, c);
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> SymF {
        SymF::from_terms(self.terms.iter().map(|(l, v)| (l.clone(), v * c)))
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.terms.keys().map(Partition::weight).max()
    }

    /// The component of weight `w`.
    pub fn homogeneous(&self, w: u32) -> SymF {
        SymF::from_terms(
            self.terms
                .iter()
                .filter(|(l, _)| l.weight() == w)
                .map(|(l, c)| (l.clone(), c.clone())),
        )
    }

    pub fn is_homogeneous(&self, w: u32) -> bool {
        self.terms.keys().all(|l| l.weight() == w)
    }

    /// The augmentation: the value at all variables zero.
    pub fn augmentation(&self) -> Rational {
        self.coeff(&Partition::empty())
    }

    /// Product with every term of weight above `n` dropped.
    pub fn mul_trunc(&self, other: &SymF, n: u32) -> SymF {
        let mut out = SymF::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.weight() + b.weight() > n {
                    continue;
                }
                let c = ca * cb;
                for (nu, count) in monomial_product(a, b) {
                    out.add_term(nu, &c * &Rational::from(count as i64));
                }
            }
        }
        out
    }

    pub fn pow_trunc(&self, k: usize, n: u32) -> SymF {
        (0..k).fold(SymF::one(), |acc, _| acc.mul_trunc(self, n))
    }
}

/// `m_a m_b = Σ c_ν m_ν`, where `c_ν` counts pairs of distinct
/// rearrangements of `a` and `b` (zero-padded to a common length) summing to
/// the decreasing exponent vector of `ν`.
pub fn monomial_product(a: &Partition, b: &Partition) -> Vec<(Partition, u64)> {
    fn counts(p: &Partition, len: usize) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &v in p.parts() {
            match out.last_mut() {
                Some((w, k)) if *w == v => *k += 1,
                _ => out.push((v, 1)),
            }
        }
        if len > p.len() {
            out.push((0, len - p.len()));
        }
        out
    }

    fn go(
        ca: &mut [(u32, usize)],
        cb: &mut [(u32, usize)],
        prev: u32,
        cur: &mut Vec<u32>,
        left: usize,
        out: &mut BTreeMap<Partition, u64>,
    ) {
        if left == 0 {
            *out.entry(Partition::from_unsorted(cur.clone())).or_insert(0) += 1;
            return;
        }
        for i in 0..ca.len() {
            if ca[i].1 == 0 {
                continue;
            }
            for j in 0..cb.len() {
                if cb[j].1 == 0 {
                    continue;
                }
                let s = ca[i].0 + cb[j].0;
                if s > prev {
                    continue;
                }
                ca[i].1 -= 1;
                cb[j].1 -= 1;
                cur.push(s);
                go(ca, cb, s, cur, left - 1, out);
                cur.pop();
                ca[i].1 += 1;
                cb[j].1 += 1;
            }
        }
    }

    let len = a.len() + b.len();
    let mut ca = counts(a, len);
    let mut cb = counts(b, len);
    let mut out = BTreeMap::new();
    go(&mut ca, &mut cb, u32::MAX, &mut Vec::with_capacity(len), len, &mut out);
    out.into_iter().collect()
}

/// `e_n = m_(1^n)`
pub fn elementary(n: u32) -> SymF {
    SymF::monomial(Partition::column(n))
}

/// `h_n = Σ_{|λ| = n} m_λ`
pub fn complete(n: u32) -> SymF {
    SymF::from_terms(partitions(n).into_iter().map(|l| (l, Rational::one())))
}

/// `e_λ = Π e_{λ_i}`
pub fn elementary_product(lambda: &Partition) -> SymF {
    let n = lambda.weight();
    lambda
        .parts()
        .iter()
        .fold(SymF::one(), |acc, &p| acc.mul_trunc(&elementary(p), n))
}

/// `h_λ = Π h_{λ_i}`
pub fn complete_product(lambda: &Partition) -> SymF {
    let n = lambda.weight();
    lambda
        .parts()
        .iter()
        .fold(SymF::one(), |acc, &p| acc.mul_trunc(&complete(p), n))
}

/// `f(y, 0, 0, ...)`: only `m_()` and one-part `m_(n)` survive.
pub fn eval_single(f: &SymF) -> Poly1 {
    let mut out = Poly1::zero();
    for (lambda, c) in f.terms() {
        match lambda.parts() {
            [] => out = &out + &Poly1::constant(c.clone()),
            [n] => out = &out + &Poly1::monomial(*n as usize, c.clone()),
            _ => {}
        }
    }
    out
}

/// `f(y, x_1, x_2, ...)`, expanded as `Σ y^r m_{λ - r}` over the distinct
/// part values `r` of each `λ` together with `r = 0`.
pub fn sym_shift(f: &SymF) -> SymFY {
    let mut out = SymFY::zero();
    for (lambda, c) in f.terms() {
        out.add_term(0, lambda.clone(), c.clone());
        for r in lambda.distinct_parts() {
            let rest = lambda.remove_part(r).expect("r is a part");
            out.add_term(r, rest, c.clone());
        }
    }
    out
}

impl Add for &SymF {
    type Output = SymF;
    fn add(self, rhs: &SymF) -> SymF {
        let mut out = self.clone();
        for (l, c) in &rhs.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymF {
    type Output = SymF;
    fn sub(self, rhs: &SymF) -> SymF {
        self + &(-rhs)
    }
}

impl Neg for &SymF {
    type Output = SymF;
    fn neg(self) -> SymF {
        self.scale(&-Rational::one())
    }
}

impl Mul for &SymF {
    type Output = SymF;
    fn mul(self, rhs: &SymF) -> SymF {
        self.mul_trunc(rhs, u32::MAX)
    }
}

fn write_terms<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a Rational)>,
    basis: impl Fn(&K) -> String,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        let (neg, mag) = if c.is_negative() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let b = basis(k);
        match (mag.is_one(), b.is_empty()) {
            (_, true) => write!(f, "{mag}")?,
            (true, false) => write!(f, "{b}")?,
            (false, false) => write!(f, "{mag}*{b}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn m_name(lambda: &Partition) -> String {
    if lambda.is_empty() {
        String::new()
    } else {
        format!("m{lambda}")
    }
}

impl fmt::Display for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter(), m_name)
    }
}

impl fmt::Debug for SymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymF({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct SymTerm {
    parts: Partition,
    c: Rational,
}

impl Serialize for SymF {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<SymTerm> = self
            .terms
            .iter()
            .map(|(l, c)| SymTerm {
                parts: l.clone(),
                c: c.clone(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymF {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<SymTerm>::deserialize(deserializer)?;
        Ok(SymF::from_terms(terms.into_iter().map(|t| (t.parts, t.c))))
    }
}

/// A polynomial in `y` with symmetric-function coefficients,
/// `Σ c_{k,λ} y^k m_λ`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct SymFY {
    terms: BTreeMap<(u32, Partition), Rational>,
}

impl SymFY {
    pub fn zero() -> SymFY {
        SymFY::default()
    }

    pub fn add_term(&mut self, k: u32, lambda: Partition, c: Rational) {
        insert_add(&mut self.terms, (k, lambda), c);
    }

    pub fn coeff(&self, k: u32, lambda: &Partition) -> Rational {
        self.terms
            .get(&(k, lambda.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Partition, &Rational)> {
        self.terms.iter().map(|((k, l), c)| (*k, l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> SymFY {
        let mut out = SymFY::zero();
        for ((k, l), v) in &self.terms {
            out.add_term(*k, l.clone(), v * c);
        }
        out
    }

    /// `f(x) g(y)` for a symmetric function `f` and a polynomial `g`.
    pub fn outer(f: &SymF, g: &Poly1) -> SymFY {
        let mut out = SymFY::zero();
        for (k, a) in g.coeffs().iter().enumerate() {
            for (l, c) in f.terms() {
                out.add_term(k as u32, l.clone(), a * c);
            }
        }
        out
    }

    pub fn from_symf(f: &SymF) -> SymFY {
        SymFY::outer(f, &Poly1::one())
    }

    /// The symmetric coefficient of `y^k`.
    pub fn y_coeff(&self, k: u32) -> SymF {
        SymF::from_terms(
            self.terms
                .iter()
                .filter(|((j, _), _)| *j == k)
                .map(|((_, l), c)| (l.clone(), c.clone())),
        )
    }

    pub fn mul_trunc(&self, other: &SymFY, n: u32) -> SymFY {
        let mut out = SymFY::zero();
        for ((ka, a), ca) in &self.terms {
            for ((kb, b), cb) in &other.terms {
                let part = SymF::term(a.clone(), ca.clone()).mul_trunc(&SymF::term(b.clone(), cb.clone()), n);
                for (l, c) in part.terms() {
                    out.add_term(ka + kb, l.clone(), c.clone());
                }
            }
        }
        out
    }
}

impl Add for &SymFY {
    type Output = SymFY;
    fn add(self, rhs: &SymFY) -> SymFY {
        let mut out = self.clone();
        for ((k, l), c) in &rhs.terms {
            out.add_term(*k, l.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SymFY {
    type Output = SymFY;
    fn sub(self, rhs: &SymFY) -> SymFY {
        self + &rhs.scale(&-Rational::one())
    }
}

impl fmt::Display for SymFY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev(), |(k, l)| {
            let y = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            match (y.is_empty(), l.is_empty()) {
                (_, true) => y,
                (true, false) => m_name(l),
                (false, false) => format!("{y}*{}", m_name(l)),
            }
        })
    }
}

#[derive(Serialize, Deserialize)]
struct SymYTerm {
    y: u32,
    parts: Partition,
    c: Rational,
}

impl Serialize for SymFY {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<SymYTerm> = self
            .terms
            .iter()
            .map(|((y, l), c)| SymYTerm {
                y: *y,
                parts: l.clone(),
                c: c.clone(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymFY {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let mut out = SymFY::zero();
        for t in Vec::<SymYTerm>::deserialize(deserializer)? {
            out.add_term(t.y, t.parts, t.c);
        }
        Ok(out)
    }
}

impl fmt::Debug for SymFY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFY({self})")
    }
}
