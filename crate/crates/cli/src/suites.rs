//! The `verify` suites. Each collects named reports and passes only when
//! all of them do.

use serde::Serialize;
use serde_json::{json, Map, Value};
use umbral::analysis::{
    antipode_check, bialgebra_detect, cauchy_solve, coassociativity_check, cocommutativity_check, counit_delta_check,
    counit_from_f, infinitesimal_generator,
};
use umbral::exactalg::{Poly1, Poly2, Rational};
use umbral::families::{family_convolution_check, family_f, family_q, family_sequence, FamilySpec};
use umbral::operators::{expand_in_xd, BivarOp};
use umbral::report::VerifyReport;
use umbral::sequence::PolySeq;
use umbral::sheffer::{basic_from_q, sheffer_theorem_check};
use umbral::symfunc::{
    is_full_sequence, shift_expansion_check, sym_antipode_identity, sym_sheffer_verify, verify_full_divided, FullSeq,
};

use crate::{CliError, Outcome, SymSequence};

struct Collector {
    suite: &'static str,
    ok: bool,
    reports: Map<String, Value>,
    text: String,
}

impl Collector {
    fn new(suite: &'static str, subject: &str) -> Collector {
        Collector {
            suite,
            ok: true,
            reports: Map::new(),
            text: format!("{suite}: {subject}\n"),
        }
    }

    fn report<K, T>(&mut self, name: &str, r: &VerifyReport<K, T>)
    where
        K: Serialize + std::fmt::Debug,
        T: Serialize + std::fmt::Display,
    {
        self.ok &= r.ok();
        self.text += &format!("  {name}: {r}\n");
        self.reports
            .insert(name.to_string(), serde_json::to_value(r).expect("serializable"));
    }

    fn fact(&mut self, name: &str, ok: bool, text: String, value: Value) {
        self.ok &= ok;
        self.text += &format!("  {name}: {text}\n");
        self.reports.insert(name.to_string(), value);
    }

    fn finish(self) -> Outcome {
        let status = if self.ok { "PASS" } else { "FAIL" };
        Outcome {
            ok: self.ok,
            json: json!({ "suite": self.suite, "ok": self.ok, "reports": self.reports }),
            text: format!("{}{status}\n", self.text),
        }
    }
}

pub fn convolution(spec: FamilySpec) -> Result<Outcome, CliError> {
    let mut out = Collector::new("convolution", &spec.family.to_string());
    out.report("convolution", &family_convolution_check(&spec)?);
    Ok(out.finish())
}

pub fn sheffer(spec: FamilySpec) -> Result<Outcome, CliError> {
    let mut out = Collector::new("sheffer", &spec.family.to_string());
    let report = sheffer_theorem_check(&family_f(&spec)?, &family_sequence(&spec)?)?;
    out.report("sheffer_theorem", &report);
    Ok(out.finish())
}

pub fn cauchy(spec: FamilySpec) -> Result<Outcome, CliError> {
    let mut out = Collector::new("cauchy", &spec.family.to_string());
    let q = family_q(&spec);
    let basic = basic_from_q(&q)?;
    let seq = family_sequence(&spec)?;
    for (label, inputs) in [("monomials", PolySeq::powers(spec.trunc)), ("family", seq)] {
        let mut report = VerifyReport::new(0..=spec.trunc);
        for (n, p) in inputs.polys().iter().enumerate() {
            let w = cauchy_solve(&q, &basic, p)?;
            report.compare("residual", n, w.residual, Poly2::zero());
            report.compare("initial_gap", n, Poly2::from_x(&w.initial_gap), Poly2::zero());
        }
        out.report(label, &report);
    }
    Ok(out.finish())
}

pub fn generator(spec: FamilySpec) -> Result<Outcome, CliError> {
    let mut out = Collector::new("generator", &spec.family.to_string());
    let q = family_q(&spec);
    let basic = basic_from_q(&q)?;
    let xd = match infinitesimal_generator(&q, &basic) {
        Ok(g) => expand_in_xd(&g),
        Err(umbral::Error::Internal(msg)) => {
            out.fact("generator", false, msg.clone(), json!({ "error": msg }));
            return Ok(out.finish());
        }
        Err(e) => return Err(e.into()),
    };
    out.fact(
        "generator",
        true,
        format!("matches the y-linear part of G; = {}", crate::xd_text(&xd)),
        json!({ "xd": xd }),
    );
    Ok(out.finish())
}

fn coalgebra_checks(out: &mut Collector, f: &BivarOp, p: &PolySeq) -> Result<Option<Rational>, CliError> {
    out.report("coassociativity", &coassociativity_check(f));
    out.report("cocommutativity", &cocommutativity_check(f, p)?);
    match counit_from_f(f) {
        Ok(eps) => {
            out.report("counit", &counit_delta_check(&eps, p));
        }
        Err(e) => out.fact("counit", false, e.to_string(), json!({ "error": e.to_string() })),
    }
    Ok(bialgebra_detect(f)?)
}

pub fn coalgebra(spec: Option<FamilySpec>, c: Option<Rational>, degree: usize) -> Result<Outcome, CliError> {
    match (spec, c) {
        (Some(spec), None) => {
            let mut out = Collector::new("coalgebra", &spec.family.to_string());
            let c = coalgebra_checks(&mut out, &family_f(&spec)?, &family_sequence(&spec)?)?;
            let text = match &c {
                Some(c) => format!("F = E^(y - ({c}))"),
                None => "not an algebra map".to_string(),
            };
            out.fact("bialgebra", true, text, json!({ "c": c }));
            Ok(out.finish())
        }
        (None, Some(c)) => {
            let label = if c.is_negative() {
                format!("E^(y + {})", -&c)
            } else {
                format!("E^(y - {c})")
            };
            let mut out = Collector::new("coalgebra", &label);
            let x_minus_c = Poly1::from_coeffs(vec![-c.clone(), Rational::one()]);
            let p = PolySeq::from_fn(degree, |n| x_minus_c.pow(n).scale(&Rational::factorial(n).recip()))?;
            let found = coalgebra_checks(&mut out, &BivarOp::shift_minus(degree, &c), &p)?;
            let ok = found.as_ref() == Some(&c);
            let shown = found.as_ref().map_or("none".to_string(), Rational::to_string);
            out.fact("bialgebra", ok, format!("detected c = {shown}"), json!({ "c": found }));
            out.report("antipode", &antipode_check(&c, degree));
            Ok(out.finish())
        }
        _ => Err(CliError::Usage("coalgebra needs exactly one of --family or --c".into())),
    }
}

pub fn sym(sequence: Option<SymSequence>, c: Option<Rational>, degree: usize) -> Result<Outcome, CliError> {
    let sequence = sequence.ok_or_else(|| CliError::Usage("sym needs --sequence".into()))?;
    let n = u32::try_from(degree).map_err(|_| CliError::Usage("degree too large".into()))?;
    if c.is_some() && sequence != SymSequence::ScaledElementary {
        return Err(CliError::Usage(
            "--c only applies to --sequence scaled-elementary".into(),
        ));
    }
    let (name, s) = match sequence {
        SymSequence::Elementary => ("e_λ".to_string(), FullSeq::elementary(n)),
        SymSequence::Complete => ("h_λ".to_string(), FullSeq::complete(n)),
        SymSequence::MConjugate => ("m_λ'".to_string(), FullSeq::monomial_conjugate(n)),
        SymSequence::ScaledElementary => {
            let c = c.ok_or_else(|| CliError::Usage("scaled-elementary needs --c".into()))?;
            if c.is_zero() {
                return Err(CliError::Usage("--c must be nonzero".into()));
            }
            (format!("{c}·e_λ"), FullSeq::elementary(n).scale(&c))
        }
    };
    let mut out = Collector::new("sym", &name);
    out.report("shift_expansion", &shift_expansion_check(n));
    out.report("antipode_identity", &sym_antipode_identity(n));
    let full = is_full_sequence(&s);
    out.report("full_sequence", &full);
    if !full.ok() {
        return Ok(out.finish());
    }
    let divided = verify_full_divided(&s)?;
    let sheffer = sym_sheffer_verify(&s)?;
    let text = match (&sheffer.c, &sheffer.witness) {
        (Some(c), _) => format!("shift-invariant, F = {c}·E^y"),
        (None, Some(mu)) => format!("not shift-invariant (witness m{mu})"),
        (None, None) => "not shift-invariant".to_string(),
    };
    // A full sequence is divided-power exactly up to the constant c.
    match &sheffer.c {
        Some(c) => {
            out.fact("sheffer", true, text, json!(sheffer));
            out.report("full_divided", &verify_full_divided(&s.scale(&c.recip()))?);
        }
        None => {
            out.fact("sheffer", false, text, json!(sheffer));
            out.report("full_divided", &divided);
        }
    }
    Ok(out.finish())
}
