//! Integer partitions: the labels of both irreducible characters and
//! conjugacy classes of the symmetric group.
//!
//! A [`Partition`] is always stored in canonical form: parts weakly
//! decreasing, all positive. The empty partition is the unique partition of
//! zero and is a first-class value.
//!
//! The text form is a comma-separated list where `v^m` repeats the value `v`
//! `m` times, so `"5,2,1^2"` denotes `(5,2,1,1)`. [`Partition`]'s `Display`
//! produces this exponent-compressed form and every report uses it.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Rendering of the empty partition.
pub const EMPTY: &str = "()";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The partition of zero.
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    /// The hook `(n-k, 1^k)`. Panics unless `k < n`.
    pub fn hook(n: usize, k: usize) -> Self {
        assert!(k < n, "hook leg {k} must be below the weight {n}");
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        Self { parts }
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Parse {
                token: format!("part #{}", pos + 1),
                reason: "parts must be positive",
            });
        }
        if let Some(pos) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                token: parts[pos + 1].to_string(),
                reason: "parts must be weakly decreasing",
            });
        }
        Ok(Self { parts })
    }

    /// Internal constructor for callers that already maintain the invariant.
    pub(crate) fn from_sorted_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Multiplicity of the part value `v`.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.parts.iter().filter(|&&p| p == v).count()
    }

    /// `(value, multiplicity)` pairs in decreasing order of value.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The partition with the first part removed.
    pub fn tail(&self) -> Self {
        Self {
            parts: self.parts.get(1..).unwrap_or_default().to_vec(),
        }
    }

    /// Suffix `(a_i, ..., a_k)` starting at zero-based index `i`.
    pub fn suffix(&self, i: usize) -> Self {
        Self {
            parts: self.parts.get(i..).unwrap_or_default().to_vec(),
        }
    }

    /// Prepends `m` as a new largest part. Panics if `m` is smaller than the
    /// current largest part.
    pub fn with_leading(&self, m: usize) -> Self {
        assert!(m > 0 && self.largest().is_none_or(|l| m >= l));
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(m);
        parts.extend_from_slice(&self.parts);
        Self { parts }
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Self {
        let Some(&rows) = self.parts.first() else {
            return Self::empty();
        };
        let parts = (1..=rows)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self { parts }
    }

    /// The hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// Returns `Some(k)` when the partition is the hook `(n-k, 1^k)`.
    /// The empty partition is not a hook.
    pub fn hook_leg(&self) -> Option<usize> {
        match self.parts.split_first() {
            Some((_, rest)) if rest.iter().all(|&p| p == 1) => Some(rest.len()),
            _ => None,
        }
    }

    pub fn is_hook_shape(&self) -> bool {
        self.hook_leg().is_some()
    }

    /// Every part strictly exceeds the sum of all later parts.
    pub fn is_strongly_decreasing(&self) -> bool {
        let mut later = 0;
        for &p in self.parts.iter().rev() {
            if p <= later && later > 0 {
                return false;
            }
            later += p;
        }
        true
    }

    /// Every part is at least the sum of all later parts.
    pub fn is_non_squashing(&self) -> bool {
        let mut later = 0;
        for &p in self.parts.iter().rev() {
            if p < later {
                return false;
            }
            later += p;
        }
        true
    }

    /// Iterator over all partitions of `n` in reverse-lexicographic order.
    pub fn all(n: usize) -> Partitions {
        Partitions::new(n)
    }
}

/// Every partition of `n`, from `(n)` down to `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

/// Reverse-lexicographic partition generator.
#[derive(Debug, Clone)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self { next: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut rem = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            rem += 1;
        }
        if let Some(k) = succ.pop() {
            rem += k;
            let v = k - 1;
            while rem >= v {
                succ.push(v);
                rem -= v;
            }
            if rem > 0 {
                succ.push(rem);
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str(EMPTY);
        }
        for (i, (v, m)) in self.multiplicities().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() || compact == EMPTY {
            return Ok(Self::empty());
        }
        let mut parts: Vec<usize> = Vec::new();
        for item in compact.split(',') {
            let (value, mult) = match item.split_once('^') {
                Some((v, m)) => (parse_int(v, item)?, parse_int(m, item)?),
                None => (parse_int(item, item)?, 1),
            };
            if value == 0 {
                return Err(Error::Parse {
                    token: item.to_string(),
                    reason: "parts must be positive",
                });
            }
            if mult == 0 {
                return Err(Error::Parse {
                    token: item.to_string(),
                    reason: "multiplicity must be positive",
                });
            }
            if parts.last().is_some_and(|&last| last < value) {
                return Err(Error::Parse {
                    token: item.to_string(),
                    reason: "parts must be weakly decreasing",
                });
            }
            parts.extend(std::iter::repeat_n(value, mult));
        }
        Ok(Self { parts })
    }
}

fn parse_int(digits: &str, item: &str) -> Result<usize> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            token: item.to_string(),
            reason: "expected a non-negative integer or value^multiplicity",
        });
    }
    digits.parse().map_err(|_| Error::Parse {
        token: item.to_string(),
        reason: "integer out of range",
    })
}

/// Convenience for tests and examples: parses or panics.
pub fn p(text: &str) -> Partition {
    text.parse()
        .unwrap_or_else(|e| panic!("bad partition literal {text:?}: {e}"))
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
