use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::exactalg::Poly2;

/// One failed identity: which check, where, and both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation<K, T> {
    pub check: String,
    pub at: K,
    pub lhs: T,
    pub rhs: T,
}

/// Outcome of an exact verification. `ok` holds exactly when there are no
/// violations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    from = "RawReport<K, T>",
    bound(deserialize = "K: Deserialize<'de>, T: Deserialize<'de>")
)]
pub struct VerifyReport<K = usize, T = Poly2> {
    ok: bool,
    checked_degrees: RangeInclusive<usize>,
    violations: Vec<Violation<K, T>>,
}

#[derive(Deserialize)]
struct RawReport<K, T> {
    checked_degrees: RangeInclusive<usize>,
    violations: Vec<Violation<K, T>>,
}

impl<K, T> From<RawReport<K, T>> for VerifyReport<K, T> {
    fn from(raw: RawReport<K, T>) -> Self {
        VerifyReport {
            ok: raw.violations.is_empty(),
            checked_degrees: raw.checked_degrees,
            violations: raw.violations,
        }
    }
}

impl<K, T> VerifyReport<K, T> {
    pub fn new(checked_degrees: RangeInclusive<usize>) -> Self {
        VerifyReport {
            ok: true,
            checked_degrees,
            violations: Vec::new(),
        }
    }

    /// A report over no degrees at all.
    pub fn unchecked() -> Self {
        Self::new(RangeInclusive::new(1, 0))
    }

    pub fn push(&mut self, check: impl Into<String>, at: K, lhs: T, rhs: T) {
        self.violations.push(Violation {
            check: check.into(),
            at,
            lhs,
            rhs,
        });
        self.ok = false;
    }

    /// Records a violation unless both sides are equal.
    pub fn compare(&mut self, check: &str, at: K, lhs: T, rhs: T)
    where
        T: PartialEq,
    {
        if lhs != rhs {
            self.push(check, at, lhs, rhs);
        }
    }

    pub fn ok(&self) -> bool {
        self.ok
    }

    pub fn checked_degrees(&self) -> &RangeInclusive<usize> {
        &self.checked_degrees
    }

    pub fn violations(&self) -> &[Violation<K, T>] {
        &self.violations
    }

    pub fn first_violation(&self) -> Option<&Violation<K, T>> {
        self.violations.first()
    }

    /// Combines two reports; the checked range becomes the hull of both.
    pub fn merge(mut self, other: VerifyReport<K, T>) -> Self {
        self.checked_degrees = hull(&self.checked_degrees, &other.checked_degrees);
        self.violations.extend(other.violations);
        self.ok = self.violations.is_empty();
        self
    }
}

fn hull(a: &RangeInclusive<usize>, b: &RangeInclusive<usize>) -> RangeInclusive<usize> {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.clone(),
        (_, true) => a.clone(),
        _ => *a.start().min(b.start())..=*a.end().max(b.end()),
    }
}

impl<K: fmt::Debug, T: fmt::Display> fmt::Display for VerifyReport<K, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = &self.checked_degrees;
        if self.ok {
            return write!(f, "ok (degrees {}..={})", range.start(), range.end());
        }
        write!(
            f,
            "{} violation(s) (degrees {}..={})",
            self.violations.len(),
            range.start(),
            range.end()
        )?;
        for v in &self.violations {
            write!(
                f,
                "\n  [{}] at {:?}:\n    lhs = {}\n    rhs = {}",
                v.check, v.at, v.lhs, v.rhs
            )?;
        }
        Ok(())
    }
}
