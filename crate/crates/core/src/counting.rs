//! Counting strongly decreasing, binary and non-squashing partitions.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::{enumerate_class, ClassKind};
use crate::partition::Partition;

/// Count columns indexed by `n = 0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub max_n: usize,
    /// Strongly decreasing partitions, from the recurrence.
    pub s: Vec<BigUint>,
    /// Partitions into powers of two.
    pub b: Vec<BigUint>,
    /// Non-squashing partitions by direct enumeration; only filled up to
    /// the bound passed to [`CountTable::build`].
    pub nsq: Vec<BigUint>,
}

/// One row of a [`CountTable`], for report output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    #[serde(serialize_with = "crate::mn::serialize_biguint")]
    pub s: BigUint,
    #[serde(serialize_with = "crate::mn::serialize_biguint")]
    pub b: BigUint,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "serialize_opt")]
    pub nsq: Option<BigUint>,
}

fn serialize_opt<S: serde::Serializer>(
    v: &Option<BigUint>,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => crate::mn::serialize_biguint(v, serializer),
        None => serializer.serialize_none(),
    }
}

impl CountTable {
    /// `s` and `b` for all `n <= max_n`; `nsq` for `n <= min(max_n, nsq_max)`.
    pub fn build(max_n: usize, nsq_max: usize) -> Self {
        Self {
            max_n,
            s: sd_counts(max_n),
            b: binary_partition_counts(max_n),
            nsq: (0..=max_n.min(nsq_max)).map(non_squashing_count).collect(),
        }
    }

    pub fn rows(&self) -> Vec<CountRow> {
        (0..=self.max_n)
            .map(|n| CountRow {
                n,
                s: self.s[n].clone(),
                b: self.b[n].clone(),
                nsq: self.nsq.get(n).cloned(),
            })
            .collect()
    }
}

/// `s(0) = 1`, `s(n) = Σ_{i=0}^{⌊(n-1)/2⌋} s(i)`.
pub fn sd_counts(max_n: usize) -> Vec<BigUint> {
    let mut s: Vec<BigUint> = Vec::with_capacity(max_n + 1);
    s.push(BigUint::one());
    // prefix[i] = s(0) + ... + s(i)
    let mut prefix: Vec<BigUint> = vec![BigUint::one()];
    for n in 1..=max_n {
        let value = prefix[(n - 1) / 2].clone();
        prefix.push(&prefix[n - 1] + &value);
        s.push(value);
    }
    s
}

/// Partitions of `n` into powers of two, by the coin-change recurrence over
/// the parts `1, 2, 4, ...`.
pub fn binary_partition_counts(max_n: usize) -> Vec<BigUint> {
    let mut b = vec![BigUint::zero(); max_n + 1];
    b[0] = BigUint::one();
    let mut part = 1;
    while part <= max_n {
        for n in part..=max_n {
            let add = b[n - part].clone();
            b[n] += add;
        }
        part *= 2;
    }
    b
}

/// Non-squashing partitions of `n`, counted by filtering the full partition
/// enumeration.
pub fn non_squashing_count(n: usize) -> BigUint {
    BigUint::from(Partition::all(n).filter(Partition::is_non_squashing).count())
}

/// A failed counting identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountFailure {
    pub identity: &'static str,
    pub at: usize,
    pub left: String,
    pub right: String,
}

/// Largest `n` for which `s(n)` is compared against direct enumeration.
pub const DIRECT_SD_LIMIT: usize = 30;

/// Checks, for `k <= max_k`: `s(2k-1) = s(2k)`, `2 s(2k) = b(2k)`, and
/// `s(n) = |sd-partitions of n|` for `n <= min(2 max_k, 30)`.
pub fn verify_count_identities(max_k: usize) -> Vec<CountFailure> {
    assert!(max_k >= 1);
    let top = 2 * max_k;
    let s = sd_counts(top);
    let b = binary_partition_counts(top);
    let mut failures = Vec::new();
    for k in 1..=max_k {
        if s[2 * k - 1] != s[2 * k] {
            failures.push(CountFailure {
                identity: "s(2k-1) = s(2k)",
                at: k,
                left: s[2 * k - 1].to_string(),
                right: s[2 * k].to_string(),
            });
        }
        let t = &s[2 * k] * 2u32;
        if t != b[2 * k] {
            failures.push(CountFailure {
                identity: "2 s(2k) = b(2k)",
                at: k,
                left: t.to_string(),
                right: b[2 * k].to_string(),
            });
        }
    }
    for (n, s_n) in s.iter().enumerate().take(top.min(DIRECT_SD_LIMIT) + 1) {
        let direct = BigUint::from(enumerate_class(n, ClassKind::Sd).len());
        if &direct != s_n {
            failures.push(CountFailure {
                identity: "s(n) = #sd(n)",
                at: n,
                left: s_n.to_string(),
                right: direct.to_string(),
            });
        }
    }
    failures
}

/// `n` values where the non-squashing and binary counts disagree.
pub fn verify_non_squashing(max_n: usize) -> Vec<CountFailure> {
    let b = binary_partition_counts(max_n);
    (0..=max_n)
        .filter_map(|n| {
            let nsq = non_squashing_count(n);
            (nsq != b[n]).then(|| CountFailure {
                identity: "nsq(n) = b(n)",
                at: n,
                left: nsq.to_string(),
                right: b[n].to_string(),
            })
        })
        .collect()
}
