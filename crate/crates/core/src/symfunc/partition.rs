use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A weakly decreasing list of positive parts. The empty partition has
/// weight zero.
///
/// Partitions are ordered by weight first and then by the reverse
/// lexicographic order [`rlex_compare`], so within one weight `(n)` comes
/// first and `(1, ..., 1)` last.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn new(parts: Vec<u32>) -> Result<Partition, Error> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros; any exponent vector names a partition this way.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: u32) -> Partition {
        Partition::from_unsorted(vec![n])
    }

    /// `(1, ..., 1)` with `n` ones.
    pub fn column(n: u32) -> Partition {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ'_i = #{j : λ_j >= i}`
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
                .collect(),
        )
    }

    /// Removes one part equal to `r`; `r = 0` leaves the partition unchanged.
    pub fn remove_part(&self, r: u32) -> Option<Partition> {
        if r == 0 {
            return Some(self.clone());
        }
        let pos = self.0.iter().position(|&p| p == r)?;
        let mut parts = self.0.clone();
        parts.remove(pos);
        Some(Partition(parts))
    }

    /// Multiset difference `self - other`, if `other`'s parts all occur in `self`.
    pub fn remove_parts(&self, other: &Partition) -> Option<Partition> {
        other.0.iter().try_fold(self.clone(), |acc, &r| acc.remove_part(r))
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// Distinct part values, largest first.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut parts = self.0.clone();
        parts.dedup();
        parts
    }
}

/// Compares at the largest index where the zero-padded part vectors differ:
/// `α ≪ β` when `α_i < β_i` there.
pub fn rlex_compare(a: &Partition, b: &Partition) -> Ordering {
    let len = a.len().max(b.len());
    let at = |p: &Partition, i: usize| p.0.get(i).copied().unwrap_or(0);
    (0..len)
        .rev()
        .map(|i| at(a, i).cmp(&at(b, i)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| rlex_compare(self, other))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of `n`, in increasing order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of weight at most `n`, in increasing order.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}
