//! Sparse polynomials in two and three variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Poly1, Rational};

/// Polynomial in `(x, y)`, stored as `(x-exponent, y-exponent) -> coefficient`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

/// Variable labels used when re-embedding a `Poly2` into three variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

fn insert_add<K: Ord>(terms: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Poly2 {
    pub fn zero() -> Poly2 {
        Poly2::default()
    }

    pub fn one() -> Poly2 {
        Poly2::term(0, 0, Rational::one())
    }

    pub fn x() -> Poly2 {
        Poly2::term(1, 0, Rational::one())
    }

    pub fn y() -> Poly2 {
        Poly2::term(0, 1, Rational::one())
    }

    pub fn constant(c: Rational) -> Poly2 {
        Poly2::term(0, 0, c)
    }

    pub fn term(i: u32, j: u32, c: Rational) -> Poly2 {
        let mut p = Poly2::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        insert_add(&mut self.terms, (i, j), c);
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Poly2 {
        let mut p = Poly2::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// `p(x)` viewed in `K[x, y]`.
    pub fn from_x(p: &Poly1) -> Poly2 {
        Poly2::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// `p(y)` viewed in `K[x, y]`.
    pub fn from_y(p: &Poly1) -> Poly2 {
        Poly2::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    /// `a(x) * b(y)`
    pub fn outer(a: &Poly1, b: &Poly1) -> Poly2 {
        let mut p = Poly2::zero();
        for (i, ca) in a.coeffs().iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs().iter().enumerate() {
                p.add_term(i as u32, j as u32, ca * cb);
            }
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
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

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, c: &Rational) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Coefficient of `y^j`, as a polynomial in `x`.
    pub fn y_coeff(&self, j: u32) -> Poly1 {
        let len = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                coeffs[i as usize] = c.clone();
            }
        }
        Poly1::from_coeffs(coeffs)
    }

    /// Coefficient of `x^i`, as a polynomial in `y`.
    pub fn x_coeff(&self, i: u32) -> Poly1 {
        self.swap().y_coeff(i)
    }

    /// `p(x, 0)`
    pub fn at_y_zero(&self) -> Poly1 {
        self.y_coeff(0)
    }

    /// `p(x, a)`
    pub fn eval_y(&self, a: &Rational) -> Poly1 {
        let len = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (&(i, j), c) in &self.terms {
            coeffs[i as usize] += c * &a.pow(j as i32);
        }
        Poly1::from_coeffs(coeffs)
    }

    /// `p(x, x)`
    pub fn diagonal(&self) -> Poly1 {
        let len = self.total_degree().map_or(0, |d| d as usize + 1);
        let mut coeffs = vec![Rational::zero(); len];
        for (&(i, j), c) in &self.terms {
            coeffs[(i + j) as usize] += c;
        }
        Poly1::from_coeffs(coeffs)
    }

    /// `p(y, x)`
    pub fn swap(&self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Re-labels `x` and `y` as the given variables of a `Poly3`.
    pub fn embed(&self, x_as: Var, y_as: Var) -> Poly3 {
        let mut out = Poly3::zero();
        for (&(i, j), c) in &self.terms {
            let mut e = [0u32; 3];
            e[x_as as usize] += i;
            e[y_as as usize] += j;
            out.add_term(e[0], e[1], e[2], c.clone());
        }
        out
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Add for Poly2 {
    type Output = Poly2;
    fn add(self, rhs: Poly2) -> Poly2 {
        &self + &rhs
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Sub for Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: Poly2) -> Poly2 {
        &self - &rhs
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Mul for Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: Poly2) -> Poly2 {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, names: &[&str], exps: &[u32]) -> fmt::Result {
    let mut first = true;
    for (name, &e) in names.iter().zip(exps) {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

fn write_sparse<'a, I>(f: &mut fmt::Formatter<'_>, names: &[&str], terms: I) -> fmt::Result
where
    I: DoubleEndedIterator<Item = (Vec<u32>, &'a Rational)>,
{
    let mut first = true;
    for (exps, c) in terms.rev() {
        let (neg, mag) = if c.is_negative() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let constant = exps.iter().all(|&e| e == 0);
        if constant {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write_monomial(f, names, &exps)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sparse(f, &["x", "y"], self.terms.iter().map(|(&(i, j), c)| (vec![i, j], c)))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct Term2 {
    i: u32,
    j: u32,
    c: Rational,
}

impl Serialize for Poly2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term2> = self
            .terms
            .iter()
            .map(|(&(i, j), c)| Term2 { i, j, c: c.clone() })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term2>::deserialize(deserializer)?;
        Ok(Poly2::from_terms(terms.into_iter().map(|t| ((t.i, t.j), t.c))))
    }
}

/// `p(r(x, y))`, expanded exactly by Horner's scheme.
pub fn poly_substitute(p: &Poly1, r: &Poly2) -> Poly2 {
    p.coeffs()
        .iter()
        .rev()
        .fold(Poly2::zero(), |acc, c| &(&acc * r) + &Poly2::constant(c.clone()))
}

/// Polynomial in `(x, y, z)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly3 {
    terms: BTreeMap<(u32, u32, u32), Rational>,
}

impl Poly3 {
    pub fn zero() -> Poly3 {
        Poly3::default()
    }

    pub fn add_term(&mut self, i: u32, j: u32, k: u32, c: Rational) {
        insert_add(&mut self.terms, (i, j, k), c);
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> Rational {
        self.terms.get(&(i, j, k)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Poly3 {
        if c.is_zero() {
            return Poly3::zero();
        }
        Poly3 {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }
}

impl Add for &Poly3 {
    type Output = Poly3;
    fn add(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (&(i, j, k), c) in &rhs.terms {
            out.add_term(i, j, k, c.clone());
        }
        out
    }
}

impl Sub for &Poly3 {
    type Output = Poly3;
    fn sub(self, rhs: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (&(i, j, k), c) in &rhs.terms {
            out.add_term(i, j, k, -c);
        }
        out
    }
}

impl Mul for &Poly3 {
    type Output = Poly3;
    fn mul(self, rhs: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (&(i1, j1, k1), a) in &self.terms {
            for (&(i2, j2, k2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, k1 + k2, a * b);
            }
        }
        out
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sparse(
            f,
            &["x", "y", "z"],
            self.terms.iter().map(|(&(i, j, k), c)| (vec![i, j, k], c)),
        )
    }
}

impl fmt::Debug for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly3({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct Term3 {
    i: u32,
    j: u32,
    k: u32,
    c: Rational,
}

impl Serialize for Poly3 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term3> = self
            .terms
            .iter()
            .map(|(&(i, j, k), c)| Term3 { i, j, k, c: c.clone() })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Poly3 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let terms = Vec::<Term3>::deserialize(deserializer)?;
        let mut p = Poly3::zero();
        for t in terms {
            p.add_term(t.i, t.j, t.k, t.c);
        }
        Ok(p)
    }
}
