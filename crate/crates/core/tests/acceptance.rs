//! Acceptance suite: one line per criterion, then a single assertion that
//! all of them passed. The lines go straight to stdout so they show up even
//! when the test harness captures output.

use std::io::Write;
use std::time::{Duration, Instant};

use umbral::analysis::{
    antipode_check, bialgebra_detect, cauchy_solve, coassociativity_check, cocommutativity_check, counit_delta_check,
    counit_from_f, infinitesimal_generator,
};
use umbral::exactalg::{poly_substitute, q, Poly1, Poly2, Rational};
use umbral::families::{family_f, family_p, family_sequence, Family, FamilySpec};
use umbral::operators::{expand_in_q, expand_in_xd, op_from_q_series, BivarOp, EndoOp};
use umbral::random::{random_sequence, random_shift_invariant};
use umbral::sequence::PolySeq;
use umbral::sheffer::{
    basic_from_q, build_f, generalized_sheffer, recover_p_from_f, sheffer_theorem_check, verify_convolution,
    verify_divided_powers,
};
use umbral::symfunc::{
    complete_sequence, elementary_sequence, is_full_sequence, linear_divided_check, shift_expansion_check,
    sym_antipode_identity, sym_sheffer_verify, verify_full_divided, FullSeq, Partition, SymFY,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let spent = start.elapsed();
    ensure(spent < limit, || format!("{what} took {spent:?}, limit {limit:?}"))
}

fn x_pow(n: usize) -> Poly1 {
    Poly1::monomial(n, Rational::one())
}

/// `Σ_k a_k(x) D^k` assembled from elementary operators.
fn xd_operator(a: &[Poly1], n: usize) -> EndoOp {
    let d = EndoOp::derivative(n);
    let mut acc = EndoOp::zero(n);
    for (k, ak) in a.iter().enumerate() {
        acc = acc.add(&EndoOp::mul_poly(n, ak).compose(&d.pow(k)).unwrap()).unwrap();
    }
    acc
}

fn legendre_q(n: usize) -> EndoOp {
    xd_operator(&[Poly1::zero(), Poly1::one(), Poly1::x()], n)
}

fn hermite_derived_q(n: usize) -> EndoOp {
    xd_operator(
        &[
            Poly1::zero(),
            Poly1::constant(q(1, 2)),
            Poly1::monomial(1, q(1, 2)),
            Poly1::constant(q(-1, 4)),
        ],
        n,
    )
}

fn forward_difference(n: usize) -> EndoOp {
    EndoOp::shift(n, &q(1, 1)).sub(&EndoOp::identity(n)).unwrap()
}

fn closed_form_families() -> Vec<Family> {
    let mut out = Vec::new();
    for nu in [q(1, 1), q(3, 2), q(-2, 1)] {
        out.push(Family::Hermite { nu });
    }
    for alpha in [q(-1, 2), q(0, 1), q(2, 1)] {
        out.push(Family::Laguerre { alpha });
    }
    out.push(Family::Bernoulli2);
    out
}

// Oracles, independent of the generating-series code.

fn hermite_oracle(nu: &Rational, n: usize) -> Poly1 {
    // [t^n] e^{xt} e^{-ν t^2 / 2}
    (0..=n / 2).fold(Poly1::zero(), |acc, j| {
        let c = (-nu / &q(2, 1)).pow(j as i32) / Rational::factorial(j) / Rational::factorial(n - 2 * j);
        &acc + &Poly1::monomial(n - 2 * j, c)
    })
}

fn laguerre_oracle(alpha: &Rational, n: usize) -> Poly1 {
    // Σ_k C(n + α, n - k) (-x)^k / k!
    let top = alpha + &Rational::from(n);
    (0..=n).fold(Poly1::zero(), |acc, k| {
        let sign = if k % 2 == 0 { q(1, 1) } else { q(-1, 1) };
        let c = Rational::binomial_rational(&top, n - k) * sign / Rational::factorial(k);
        &acc + &Poly1::monomial(k, c)
    })
}

fn bernoulli2_oracle(n: usize) -> Poly1 {
    // ∫_x^{x+1} C(u, n) du
    let binom = (0..n).fold(Poly1::one(), |acc, i| {
        &acc * &Poly1::from_coeffs(vec![-Rational::from(i), q(1, 1)])
    });
    let anti = binom.scale(&Rational::factorial(n).recip()).antiderivative();
    &anti.compose(&Poly1::from_ints(&[1, 1])) - &anti
}

fn legendre_oracle(n: usize) -> Poly1 {
    // (x - 1)^n P_n((x + 1)/(x - 1)) = Σ_k C(n, k)^2 x^k
    let norm = Rational::factorial(n) * Rational::factorial(n);
    Poly1::from_coeffs(
        (0..=n)
            .map(|k| Rational::binomial(n, k).pow(2) / norm.clone())
            .collect(),
    )
}

fn physicists_hermite(n_max: usize) -> Vec<Poly1> {
    // H_{n+1} = 2x H_n - 2n H_{n-1}
    let mut h = vec![Poly1::one(), Poly1::from_ints(&[0, 2])];
    for n in 1..n_max {
        let next = &(&Poly1::from_ints(&[0, 2]) * &h[n]) - &h[n - 1].scale(&Rational::from(2 * n));
        h.push(next);
    }
    h.truncate(n_max + 1);
    h
}

fn criterion_1() -> Outcome {
    let n = 12;
    for fam in closed_form_families() {
        let start = Instant::now();
        let spec = FamilySpec::new(fam.clone(), n);
        let p = family_sequence(&spec).map_err(|e| e.to_string())?;
        let f = build_f(&family_p(&spec).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let report = verify_convolution(&f, &p);
        ensure(report.ok(), || format!("{fam}: {report}"))?;
        for k in 0..=n {
            let want = match &fam {
                Family::Hermite { nu } => hermite_oracle(nu, k),
                Family::Laguerre { alpha } => laguerre_oracle(alpha, k),
                _ => bernoulli2_oracle(k),
            };
            ensure(p.get(k) == &want, || {
                format!("{fam}: p_{k} = {} but oracle gives {want}", p.get(k))
            })?;
        }
        let spot = match &fam {
            Family::Hermite { nu } => (2, Poly1::from_coeffs(vec![-nu / &q(2, 1), q(0, 1), q(1, 2)])),
            Family::Laguerre { alpha } => (1, Poly1::from_coeffs(vec![alpha + &q(1, 1), q(-1, 1)])),
            _ => (2, Poly1::from_coeffs(vec![q(-1, 12), q(0, 1), q(1, 2)])),
        };
        ensure(p.get(spot.0) == &spot.1, || {
            format!("{fam}: spot value p_{} = {}", spot.0, p.get(spot.0))
        })?;
        within(start, Duration::from_secs(5), &fam.to_string())?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let n = 12;
    for fam in closed_form_families() {
        let spec = FamilySpec::new(fam.clone(), n);
        let p = family_sequence(&spec).map_err(|e| e.to_string())?;
        let sheffer = family_p(&spec).map_err(|e| e.to_string())?;
        let f = build_f(&sheffer).map_err(|e| e.to_string())?;
        ensure(recover_p_from_f(&f) == sheffer, || {
            format!("{fam}: ε_y F differs from P")
        })?;
        let inverse = sheffer.invert().map_err(|e| e.to_string())?;
        let basic =
            PolySeq::new(p.polys().iter().map(|pn| inverse.apply(pn).unwrap()).collect()).map_err(|e| e.to_string())?;
        let r = verify_divided_powers(&basic);
        ensure(r.ok(), || format!("{fam}: P^-1 p is not divided-power: {r}"))?;
        // P_y (x + y)^n expanded binomially, built without the transport helper.
        let by_hand = BivarOp::from_fn(n, |k| {
            (0..=k).fold(Poly2::zero(), |acc, j| {
                let term = Poly2::outer(&x_pow(j), sheffer.column(k - j)).scale(&Rational::binomial(k, j));
                &acc + &term
            })
        });
        ensure(f == by_hand, || format!("{fam}: F differs from P_y E^y"))?;
        let r = sheffer_theorem_check(&f, &p).map_err(|e| e.to_string())?;
        ensure(r.ok(), || format!("{fam}: {r}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let n = 8;
    for seed in 0..100 {
        let p = random_sequence(seed, n);
        let data = generalized_sheffer(&p).map_err(|e| format!("seed {seed}: {e}"))?;
        let r = verify_convolution(&data.f, &p);
        ensure(r.ok(), || format!("seed {seed}: {r}"))?;
        let pq = data.p.compose(&data.q).unwrap();
        let qp = data.q.compose(&data.p).unwrap();
        ensure(pq == qp, || format!("seed {seed}: P and Q do not commute"))?;
        ensure(data.g.at_y_zero() == EndoOp::identity(n), || {
            format!("seed {seed}: ε_y G is not I")
        })?;
    }
    within(start, Duration::from_secs(30), "100 random pipelines")
}

fn criterion_4() -> Outcome {
    let n = 12;
    let p = family_sequence(&FamilySpec::new(Family::LegendreDerived, n)).map_err(|e| e.to_string())?;
    let q_op = legendre_q(n);
    for k in 0..=n {
        ensure(p.get(k) == &legendre_oracle(k), || {
            format!("legendre p_{k} = {}", p.get(k))
        })?;
        if k > 0 {
            ensure(&q_op.apply(p.get(k)).unwrap() == p.get(k - 1), || {
                format!("legendre: Q p_{k} != p_{}", k - 1)
            })?;
        }
    }
    let p2 = Poly1::from_coeffs(vec![q(1, 4), q(1, 1), q(1, 4)]);
    ensure(p.get(2) == &p2, || format!("legendre p_2 = {}", p.get(2)))?;
    ensure(q_op.apply(&p2).unwrap() == Poly1::from_ints(&[1, 1]), || {
        "Q p_2 != x + 1".into()
    })?;

    let p = family_sequence(&FamilySpec::new(Family::HermiteDerived, n)).map_err(|e| e.to_string())?;
    let q_op = hermite_derived_q(n);
    for (k, h) in physicists_hermite(n).iter().enumerate() {
        let norm = Rational::factorial(k) * Rational::factorial(k);
        ensure(p.get(k) == &h.scale(&norm.recip()), || {
            format!("hermite_derived p_{k} = {}", p.get(k))
        })?;
        if k > 0 {
            ensure(&q_op.apply(p.get(k)).unwrap() == p.get(k - 1), || {
                format!("hermite_derived: Q p_{k} != p_{}", k - 1)
            })?;
        }
    }
    Ok(())
}

fn four_operators(n: usize) -> Vec<(&'static str, EndoOp)> {
    vec![
        ("D", EndoOp::derivative(n)),
        ("E - I", forward_difference(n)),
        ("D + xD^2", legendre_q(n)),
        ("D/2 + xD^2/2 - D^3/4", hermite_derived_q(n)),
    ]
}

fn criterion_5() -> Outcome {
    let n = 10;
    let x_plus_y = &Poly2::x() + &Poly2::y();
    for (name, q_op) in four_operators(n) {
        let basic = basic_from_q(&q_op).map_err(|e| format!("{name}: {e}"))?;
        for k in 0..=n {
            let p = x_pow(k);
            let w = cauchy_solve(&q_op, &basic, &p).map_err(|e| format!("{name}: {e}"))?;
            ensure(w.residual.is_zero(), || {
                format!("{name}: residual at x^{k}: {}", w.residual)
            })?;
            ensure(w.initial_gap.is_zero(), || {
                format!("{name}: initial gap at x^{k}: {}", w.initial_gap)
            })?;
            if name == "D" {
                ensure(w.u == poly_substitute(&p, &x_plus_y), || {
                    format!("D: u != p(x + y) at x^{k}")
                })?;
            }
        }
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let n = 10;
    for (name, q_op) in four_operators(n) {
        let basic = basic_from_q(&q_op).map_err(|e| format!("{name}: {e}"))?;
        let g = infinitesimal_generator(&q_op, &basic).map_err(|e| format!("{name}: {e}"))?;
        if name == "D" || name == "E - I" {
            ensure(g == EndoOp::derivative(n), || format!("{name}: generator is not D"))?;
        }
    }
    Ok(())
}

fn coalgebra_suite(label: &str, f: &BivarOp, p: &PolySeq) -> Outcome {
    let r = coassociativity_check(f);
    ensure(r.ok(), || format!("{label}: coassociativity: {r}"))?;
    let r = cocommutativity_check(f, p).map_err(|e| format!("{label}: {e}"))?;
    ensure(r.ok(), || format!("{label}: cocommutativity: {r}"))?;
    let eps = counit_from_f(f).map_err(|e| format!("{label}: counit: {e}"))?;
    let r = counit_delta_check(&eps, p);
    ensure(r.ok(), || format!("{label}: counit: {r}"))
}

fn criterion_7() -> Outcome {
    let n = 12;
    let mut families = closed_form_families();
    families.push(Family::LegendreDerived);
    families.push(Family::HermiteDerived);
    for fam in families {
        let spec = FamilySpec::new(fam.clone(), n);
        let f = family_f(&spec).map_err(|e| e.to_string())?;
        coalgebra_suite(&fam.to_string(), &f, &family_sequence(&spec).unwrap())?;
    }
    for seed in 0..100 {
        let p = random_sequence(seed, 8);
        let f = generalized_sheffer(&p).map_err(|e| e.to_string())?.f;
        coalgebra_suite(&format!("random seed {seed}"), &f, &p)?;
    }
    for c in [q(0, 1), q(1, 1), q(-2, 3)] {
        let found = bialgebra_detect(&BivarOp::shift_minus(n, &c)).map_err(|e| e.to_string())?;
        ensure(found.as_ref() == Some(&c), || {
            format!("bialgebra_detect on E^(y-({c})) gave {found:?}")
        })?;
    }
    let h = family_f(&FamilySpec::new(Family::Hermite { nu: q(1, 1) }, n)).unwrap();
    let found = bialgebra_detect(&h).map_err(|e| e.to_string())?;
    ensure(found.is_none(), || {
        format!("bialgebra_detect on hermite gave {found:?}")
    })?;
    for c in [q(0, 1), q(1, 1)] {
        let r = antipode_check(&c, n);
        ensure(r.ok(), || format!("antipode c = {c}: {r}"))?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let n = 8;
    let r = linear_divided_check(&elementary_sequence(n));
    ensure(r.ok(), || format!("e-sequence: {r}"))?;
    let r = linear_divided_check(&complete_sequence(n));
    ensure(r.ok(), || format!("h-sequence: {r}"))?;
    let r = shift_expansion_check(n);
    ensure(r.ok(), || format!("shift expansion: {r}"))?;

    let e = FullSeq::elementary(n);
    let r = verify_full_divided(&e).map_err(|e| e.to_string())?;
    ensure(r.ok(), || format!("e_λ: {r}"))?;
    let s = sym_sheffer_verify(&e).map_err(|e| e.to_string())?;
    ensure(s.shift_invariant && s.c == Some(q(1, 1)), || format!("e_λ: {s:?}"))?;
    let s = sym_sheffer_verify(&e.scale(&q(3, 1))).map_err(|e| e.to_string())?;
    ensure(s.shift_invariant && s.c == Some(q(3, 1)), || format!("3e_λ: {s:?}"))?;

    let m = FullSeq::monomial_conjugate(n);
    let r = is_full_sequence(&m);
    ensure(r.ok(), || format!("m_λ' is not full: {r}"))?;
    let r = verify_full_divided(&m).map_err(|e| e.to_string())?;
    let v = r.first_violation().ok_or("m_λ' unexpectedly passes")?;
    let one_one = Partition::new(vec![1, 1]).unwrap();
    let mut extra = SymFY::zero();
    extra.add_term(1, Partition::new(vec![1]).unwrap(), q(2, 1));
    ensure(v.at == one_one && &v.rhs - &v.lhs == extra, || {
        format!("m_λ' witness: {v:?}")
    })?;
    let s = sym_sheffer_verify(&m).map_err(|e| e.to_string())?;
    ensure(!s.shift_invariant, || "m_λ' reported shift-invariant".into())?;

    let r = sym_antipode_identity(n);
    ensure(r.ok(), || format!("antipode identity: {r}"))?;
    within(start, Duration::from_secs(20), "symmetric suite")
}

fn criterion_9() -> Outcome {
    let n = 10;
    let deltas: Vec<(EndoOp, PolySeq)> = vec![
        (EndoOp::derivative(n), PolySeq::divided_powers(n)),
        (
            forward_difference(n),
            family_sequence(&FamilySpec::new(Family::LowerFactorial, n)).unwrap(),
        ),
    ];
    for seed in 0..20u64 {
        let t = random_shift_invariant(seed, n);
        let (q_op, basic) = &deltas[seed as usize % 2];
        let coeffs = expand_in_q(&t, q_op, basic).map_err(|e| format!("seed {seed}: {e}"))?;
        let rebuilt = op_from_q_series(&coeffs, q_op).map_err(|e| e.to_string())?;
        ensure(rebuilt == t, || format!("seed {seed}: expansion does not reproduce T"))?;
    }
    let want = vec![Poly1::zero(), Poly1::one(), Poly1::x()];
    let got = expand_in_xd(&legendre_q(n));
    ensure(trimmed(&got) == want, || format!("D + xD^2 expands to {got:?}"))?;
    let want = vec![
        Poly1::zero(),
        Poly1::constant(q(1, 2)),
        Poly1::monomial(1, q(1, 2)),
        Poly1::constant(q(-1, 4)),
    ];
    let got = expand_in_xd(&hermite_derived_q(n));
    ensure(trimmed(&got) == want, || {
        format!("hermite_derived Q expands to {got:?}")
    })
}

fn trimmed(a: &[Poly1]) -> Vec<Poly1> {
    let end = a.iter().rposition(|p| !p.is_zero()).map_or(0, |i| i + 1);
    a[..end].to_vec()
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("family convolution identities and spot values", criterion_1),
        ("characterization round trip for closed-form families", criterion_2),
        ("generalized construction on 100 random sequences", criterion_3),
        ("worked examples D + xD^2 and D/2 + xD^2/2 - D^3/4", criterion_4),
        ("Cauchy problem residuals", criterion_5),
        ("infinitesimal generator", criterion_6),
        ("coalgebra, bialgebra and antipode checks", criterion_7),
        ("symmetric function suite", criterion_8),
        ("expansion round trips", criterion_9),
    ];
    let _ = std::io::stdout().lock().write_all(b"\n");
    let mut failures = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let spent = start.elapsed();
        let line = match &result {
            Ok(()) => format!("criterion {}: PASS  {name} ({spent:.2?})\n", i + 1),
            Err(msg) => {
                failures.push(i + 1);
                format!("criterion {}: FAIL  {name}: {msg}\n", i + 1)
            }
        };
        let _ = std::io::stdout().lock().write_all(line.as_bytes());
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
