//! Exact character values of the symmetric group via the
//! Murnaghan–Nakayama rule.
//!
//! `[λ](μ)` is evaluated by stripping a rim hook of length `μ_1` from `λ` in
//! every possible way, weighting each by `(-1)^leg`, and recursing on the
//! remaining parts of `μ`. The parts of `μ` are always consumed largest
//! first. An [`Evaluator`] fixes `μ` and memoizes the intermediate values
//! keyed by the remaining shape and the index of the next part of `μ`.

use std::fmt;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::beta::remove_hooks;
use crate::error::{Error, Result};
use crate::exec;
use crate::partition::{enumerate_partitions, Partition};

/// One character-table entry.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CharValue(BigInt);

impl CharValue {
    pub fn new(value: BigInt) -> Self {
        Self(value)
    }

    pub fn zero() -> Self {
        Self(BigInt::zero())
    }

    pub fn one() -> Self {
        Self(BigInt::one())
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `true` when the value lies in `{0, 1, -1}`.
    pub fn is_sign_value(&self) -> bool {
        self.0.magnitude() <= &BigUint::one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }
}

impl From<i64> for CharValue {
    fn from(v: i64) -> Self {
        Self(BigInt::from(v))
    }
}

impl From<BigInt> for CharValue {
    fn from(v: BigInt) -> Self {
        Self(v)
    }
}

impl fmt::Display for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CharValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for CharValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigint(&self.0, serializer)
    }
}

/// Integers are emitted as JSON numbers while they fit in 128 bits and as
/// decimal strings beyond that.
pub fn serialize_bigint<S: Serializer>(
    v: &BigInt,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    if let Some(small) = v.to_i64() {
        serializer.serialize_i64(small)
    } else if let Some(wide) = v.to_i128() {
        serializer.serialize_i128(wide)
    } else {
        serializer.collect_str(v)
    }
}

pub fn serialize_biguint<S: Serializer>(
    v: &BigUint,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serialize_bigint(&BigInt::from(v.clone()), serializer)
}

/// Memo key within one evaluation session: the remaining shape and the
/// index of the next part of `μ` to strip.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemoKey {
    pub shape: Partition,
    pub suffix_index: usize,
}

/// Memoizing evaluator for the column `[·](μ)` of a fixed class `μ`.
///
/// The cache is shared between threads with insert-if-absent semantics, so
/// one evaluator may serve a parallel sweep over `λ`.
pub struct Evaluator {
    mu: Partition,
    /// `suffix_weights[i] = μ_i + ... + μ_k`.
    suffix_weights: Vec<usize>,
    cache: DashMap<MemoKey, CharValue>,
}

impl Evaluator {
    pub fn new(mu: Partition) -> Self {
        let mut suffix_weights = vec![0; mu.len() + 1];
        for i in (0..mu.len()).rev() {
            suffix_weights[i] = suffix_weights[i + 1] + mu.parts()[i];
        }
        Self {
            mu,
            suffix_weights,
            cache: DashMap::new(),
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn weight(&self) -> usize {
        self.suffix_weights[0]
    }

    /// `[λ](μ)`; fails when the weights differ.
    pub fn value(&self, lambda: &Partition) -> Result<CharValue> {
        if lambda.weight() != self.weight() {
            return Err(weight_mismatch(lambda, &self.mu));
        }
        Ok(self.eval(lambda, 0))
    }

    /// `[λ](μ)` for a `λ` already known to have the right weight.
    pub(crate) fn value_unchecked(&self, lambda: &Partition) -> CharValue {
        debug_assert_eq!(lambda.weight(), self.weight());
        self.eval(lambda, 0)
    }

    /// The full column over all partitions of `n` in reverse-lexicographic
    /// order.
    pub fn column(&self) -> Vec<(Partition, CharValue)> {
        let lambdas = enumerate_partitions(self.weight());
        let values = exec::map(&lambdas, |l| self.value_unchecked(l));
        lambdas.into_iter().zip(values).collect()
    }

    fn eval(&self, shape: &Partition, i: usize) -> CharValue {
        let parts = self.mu.parts();
        if i == parts.len() {
            debug_assert!(shape.is_empty());
            return CharValue::one();
        }
        if i + 1 == parts.len() {
            // A single remaining part: only hooks survive, with sign (-1)^leg.
            return match shape.hook_leg() {
                Some(k) if k % 2 == 0 => CharValue::one(),
                Some(_) => CharValue::from(-1),
                None => CharValue::zero(),
            };
        }
        let key = MemoKey {
            shape: shape.clone(),
            suffix_index: i,
        };
        if let Some(hit) = self.cache.get(&key) {
            return hit.value().clone();
        }
        let mut sum = BigInt::zero();
        for removal in remove_hooks(shape, parts[i]) {
            let sub = self.eval(&removal.result, i + 1);
            if removal.leg_length % 2 == 0 {
                sum += sub.0;
            } else {
                sum -= sub.0;
            }
        }
        let value = CharValue(sum);
        self.cache.entry(key).or_insert_with(|| value.clone());
        value
    }

    /// Number of memoized entries.
    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    /// Snapshot of the memo table, sorted by key.
    pub fn entries(&self) -> Vec<(MemoKey, CharValue)> {
        let mut out: Vec<_> = self
            .cache
            .iter()
            .map(|e| (e.key().clone(), e.value().clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    /// Pre-populates the memo table. Entries whose shape weight does not
    /// match the remaining weight of `μ` are rejected.
    pub fn seed<I>(&self, entries: I) -> Result<usize>
    where
        I: IntoIterator<Item = (MemoKey, CharValue)>,
    {
        let mut added = 0;
        for (key, value) in entries {
            let expected = self.suffix_weights.get(key.suffix_index).copied();
            if expected != Some(key.shape.weight()) || key.suffix_index >= self.mu.len() {
                return Err(weight_mismatch(&key.shape, &self.mu.suffix(key.suffix_index)));
            }
            self.cache.entry(key).or_insert(value);
            added += 1;
        }
        Ok(added)
    }
}

fn weight_mismatch(left: &Partition, right: &Partition) -> Error {
    Error::WeightMismatch {
        left: left.clone(),
        left_weight: left.weight(),
        right: right.clone(),
        right_weight: right.weight(),
    }
}

/// `[λ](μ)` with a fresh cache.
pub fn char_value(lambda: &Partition, mu: &Partition) -> Result<CharValue> {
    Evaluator::new(mu.clone()).value(lambda)
}

/// Order of the centralizer of a permutation of cycle type `μ`:
/// the product of `v^m * m!` over part values `v` of multiplicity `m`.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    mu.multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (v, m)| {
            acc * BigUint::from(v).pow(m as u32) * factorial(m)
        })
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Degree of `[λ]` by the hook-length formula.
pub fn degree(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * BigUint::from(h));
    factorial(lambda.weight()) / hooks
}

/// 2-adic valuation of `n!` (Legendre).
pub fn two_adic_factorial(n: usize) -> u32 {
    (n - n.count_ones() as usize) as u32
}

/// Whether `[λ]` has odd degree, decided by comparing 2-adic valuations of
/// `n!` and of the hook product.
pub fn degree_is_odd(lambda: &Partition) -> bool {
    let hooks: u32 = lambda
        .hook_lengths()
        .into_iter()
        .map(|h| h.trailing_zeros())
        .sum();
    hooks == two_adic_factorial(lambda.weight())
}

/// `Σ_λ [λ](μ)[λ](ν)` over all `λ`.
pub fn column_inner_product(mu: &Partition, nu: &Partition) -> Result<BigInt> {
    if mu.weight() != nu.weight() {
        return Err(weight_mismatch(mu, nu));
    }
    let left = Evaluator::new(mu.clone());
    let right = Evaluator::new(nu.clone());
    let lambdas = enumerate_partitions(mu.weight());
    let terms = exec::map(&lambdas, |l| {
        left.value_unchecked(l).0 * right.value_unchecked(l).0
    });
    Ok(terms.into_iter().sum())
}

/// Column orthogonality: the inner product is `z_μ` on the diagonal and
/// zero elsewhere.
pub fn orthogonality_check(mu: &Partition, nu: &Partition) -> Result<bool> {
    let sum = column_inner_product(mu, nu)?;
    let expected = if mu == nu {
        BigInt::from_biguint(Sign::Plus, centralizer_order(mu))
    } else {
        BigInt::zero()
    };
    Ok(sum == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    fn cv(l: &str, m: &str) -> i64 {
        char_value(&p(l), &p(m)).unwrap().to_i64().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(cv("5,1", "6"), -1);
        assert_eq!(cv("3,1,1", "2,2,1"), -2);
        assert_eq!(cv("4,1", "3,1,1"), 1);
        for mu in Partition::all(7) {
            assert_eq!(char_value(&Partition::row(7), &mu).unwrap(), CharValue::one());
        }
    }

    #[test]
    fn empty_base_case() {
        assert_eq!(
            char_value(&Partition::empty(), &Partition::empty()).unwrap(),
            CharValue::one()
        );
    }

    #[test]
    fn weight_mismatch_is_error() {
        assert!(matches!(
            char_value(&p("3"), &p("2,2")),
            Err(Error::WeightMismatch { left_weight: 3, right_weight: 4, .. })
        ));
    }

    #[test]
    fn centralizers() {
        assert_eq!(centralizer_order(&p("4,2")), BigUint::from(8u32));
        assert_eq!(centralizer_order(&p("1^5")), BigUint::from(120u32));
        assert_eq!(centralizer_order(&p("2,2,1")), BigUint::from(8u32));
        assert_eq!(centralizer_order(&Partition::empty()), BigUint::one());
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&p("4,2")), BigUint::from(9u32));
        assert_eq!(degree(&p("9")), BigUint::one());
        let theta_plus: u32 = ["6", "4,2", "2^2,1^2", "1^6"]
            .iter()
            .map(|l| degree(&p(l)).to_u32().unwrap())
            .sum();
        assert_eq!(theta_plus, 20);
    }

    #[test]
    fn degree_matches_identity_class_value() {
        for n in 0..=9 {
            let ev = Evaluator::new(Partition::column(n));
            for l in Partition::all(n) {
                let d = BigInt::from(degree(&l));
                assert_eq!(ev.value(&l).unwrap().0, d, "{l:?}");
            }
        }
    }

    #[test]
    fn odd_degree() {
        assert!(degree_is_odd(&p("4,2")));
        // deg [5,1] = 5
        assert_eq!(degree(&p("5,1")), BigUint::from(5u32));
        assert!(degree_is_odd(&p("5,1")));
        assert!(!degree_is_odd(&p("4,1,1")));
        assert!(degree_is_odd(&Partition::column(11)));
        for n in 1..=14 {
            for l in Partition::all(n) {
                assert_eq!(degree_is_odd(&l), degree(&l).bit(0), "{l:?}");
            }
        }
    }

    #[test]
    fn orthogonality_examples() {
        assert_eq!(column_inner_product(&p("4,2"), &p("4,2")).unwrap(), BigInt::from(8));
        assert!(orthogonality_check(&p("4,2"), &p("4,2")).unwrap());
        assert_eq!(column_inner_product(&p("6"), &p("5,1")).unwrap(), BigInt::zero());
        assert_eq!(column_inner_product(&p("1^3"), &p("1^3")).unwrap(), BigInt::from(6));
        assert!(orthogonality_check(&p("3"), &p("2,1")).unwrap());
        assert!(orthogonality_check(&p("3"), &p("2,2")).is_err());
    }

    #[test]
    fn seed_rejects_wrong_weight() {
        let ev = Evaluator::new(p("3,2,1"));
        let bad = MemoKey {
            shape: p("2"),
            suffix_index: 1,
        };
        assert!(ev.seed([(bad, CharValue::one())]).is_err());
        let good = MemoKey {
            shape: p("2,1"),
            suffix_index: 1,
        };
        assert_eq!(ev.seed([(good, CharValue::zero())]).unwrap(), 1);
    }

    #[test]
    fn large_degrees_do_not_overflow() {
        // largest degree of S_40 exceeds u64
        let d = degree(&p("9,8,7,6,5,3,2"));
        assert!(d > BigUint::from(u64::MAX));
        assert_eq!(d.bit(0), degree_is_odd(&p("9,8,7,6,5,3,2")));
    }
}
