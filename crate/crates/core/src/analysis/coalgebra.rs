use crate::error::Error;
use crate::exactalg::{solve_unique, Poly1, Poly2, Poly3, Rational, Var};
use crate::operators::{BivarOp, EndoOp};
use crate::report::VerifyReport;
use crate::sequence::PolySeq;
use crate::sheffer::verify_convolution;

/// Largest `m` such that every image of `x^0..=x^m` has both partial degrees
/// within the truncation, so that a second application of `F` is exact.
fn exact_top(f: &BivarOp) -> Option<usize> {
    let n_max = f.trunc() as u32;
    let fits = |p: &Poly2| p.degree_x().unwrap_or(0) <= n_max && p.degree_y().unwrap_or(0) <= n_max;
    match f.images().iter().position(|p| !fits(p)) {
        Some(0) => None,
        Some(k) => Some(k - 1),
        None => Some(f.trunc()),
    }
}

/// Compares `(F ⊗ I) F` with `(I ⊗ F) F` on every `x^n` where both are exact.
pub fn coassociativity_check(f: &BivarOp) -> VerifyReport<usize, Poly3> {
    let Some(top) = exact_top(f) else {
        return VerifyReport::unchecked();
    };
    let mut report = VerifyReport::new(0..=top);
    for n in 0..=top {
        let mut left = Poly3::zero();
        let mut right = Poly3::zero();
        for (i, j, c) in f.image(n).terms() {
            let z_j = Poly2::term(0, j, c.clone()).embed(Var::X, Var::Z);
            left = &left + &(&f.image(i as usize).embed(Var::X, Var::Y) * &z_j);
            let x_i = Poly2::term(i, 0, c.clone()).embed(Var::X, Var::Y);
            right = &right + &(&x_i * &f.image(j as usize).embed(Var::Y, Var::Z));
        }
        report.compare("coassociativity", n, left, right);
    }
    report
}

/// Reports every polynomial that is not invariant under `x <-> y`.
pub fn symmetry_report(polys: &[Poly2]) -> VerifyReport {
    let mut report = VerifyReport::new(0..=polys.len().saturating_sub(1));
    for (n, p) in polys.iter().enumerate() {
        report.compare("cocommutativity", n, p.clone(), p.swap());
    }
    report
}

/// Checks that `F p_n` is symmetric in `x` and `y` for every `n`.
pub fn cocommutativity_check(f: &BivarOp, p: &PolySeq) -> Result<VerifyReport, Error> {
    if let Some(v) = verify_convolution(f, p).first_violation() {
        return Err(Error::Precondition(format!(
            "F does not satisfy the convolution identity at degree {}",
            v.at
        )));
    }
    let images = p
        .polys()
        .iter()
        .take(f.trunc() + 1)
        .map(|pn| f.apply(pn))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(symmetry_report(&images))
}

/// Solves `(ε ⊗ I) F = I` for the functional `ε`, returned as its values on
/// `x^0..=x^N`. The system depends only on `F`.
pub fn counit_from_f(f: &BivarOp) -> Result<Vec<Rational>, Error> {
    let n_max = f.trunc();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for n in 0..=n_max {
        let image = f.image(n);
        if image.degree_x().unwrap_or(0) as usize > n_max {
            continue;
        }
        for j in 0..=image.degree_y().unwrap_or(0).max(n as u32) {
            let row: Vec<Rational> = (0..=n_max as u32).map(|i| image.coeff(i, j)).collect();
            rows.push(row);
            rhs.push(if j as usize == n {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
    }
    solve_unique(rows, rhs, n_max + 1)
}

/// Checks `ε p_k = δ_{k0}`.
pub fn counit_delta_check(eps: &[Rational], p: &PolySeq) -> VerifyReport<usize, Rational> {
    let top = p.trunc().min(eps.len().saturating_sub(1));
    let mut report = VerifyReport::new(0..=top);
    for k in 0..=top {
        let value: Rational = p.get(k).coeffs().iter().zip(eps).map(|(c, e)| c * e).sum();
        let delta = if k == 0 { Rational::one() } else { Rational::zero() };
        report.compare("counit", k, value, delta);
    }
    report
}

/// Returns `c` when `F` is an algebra map, in which case it must be
/// `E^{y-c}`. A multiplicative `F` of any other form is an internal error.
pub fn bialgebra_detect(f: &BivarOp) -> Result<Option<Rational>, Error> {
    let n_max = f.trunc();
    if f.image(0) != &Poly2::one() {
        return Ok(None);
    }
    for i in 1..=n_max {
        for j in i..=n_max - i {
            if f.image(i + j) != &(f.image(i) * f.image(j)) {
                return Ok(None);
            }
        }
    }
    if n_max == 0 {
        return Ok(Some(Rational::zero()));
    }
    let r = f.image(1);
    let one = Rational::one();
    let shape_ok = r.coeff(1, 0) == one && r.coeff(0, 1) == one && r.len() <= 3;
    if !shape_ok {
        return Err(Error::Internal(format!(
            "multiplicative F has F(x) = {r}, not x + y - c"
        )));
    }
    let c = -r.coeff(0, 0);
    if f != &BivarOp::shift_minus(n_max, &c) {
        return Err(Error::Internal(format!("multiplicative F differs from E^(y-{c})")));
    }
    Ok(Some(c))
}

/// `p(x) -> p(2c - x)`, i.e. `(x - c)^n -> (-1)^n (x - c)^n`.
fn reflection(c: &Rational, n_max: usize) -> EndoOp {
    let inner = Poly1::from_coeffs(vec![c * &Rational::from_int(2), -Rational::one()]);
    EndoOp::from_fn(n_max, |n| Poly1::monomial(n, Rational::one()).compose(&inner))
}

/// The Hopf axiom for `Δ = E^{y-c}`, counit evaluation at `c` and antipode
/// `(x - c)^n -> (-1)^n (x - c)^n`.
pub fn antipode_check(c: &Rational, n_max: usize) -> VerifyReport<usize, Poly1> {
    antipode_check_with(c, &reflection(c, n_max))
}

/// The Hopf axiom `m (S ⊗ I) Δ = m (I ⊗ S) Δ = η ε` for a given antipode `S`,
/// where multiplication substitutes `y := x`.
pub fn antipode_check_with(c: &Rational, antipode: &EndoOp) -> VerifyReport<usize, Poly1> {
    let n_max = antipode.trunc();
    let delta = BivarOp::shift_minus(n_max, c);
    let mut report = VerifyReport::new(0..=n_max);
    for n in 0..=n_max {
        let image = delta.image(n);
        let unit_counit = Poly1::constant(c.pow(n as i32));
        let left = antipode.apply_x(image).expect("degrees within truncation").diagonal();
        let right = antipode.apply_y(image).expect("degrees within truncation").diagonal();
        report.compare("antipode_left", n, left, unit_counit.clone());
        report.compare("antipode_right", n, right, unit_counit);
    }
    report
}
