//! Sign, unique-path and strongly-decreasing partitions, exceptional
//! partitions, and the exhaustive check of the classification conjecture.
//!
//! Every predicate here that quantifies over characters sweeps `λ` in
//! reverse-lexicographic order. When a sweep runs on several workers the
//! reported witness is still the first one in that order.

use dashmap::DashMap;
use serde::Serialize;

use crate::beta::remove_hooks;
use crate::error::{Error, Result};
use crate::exec;
use crate::mn::{CharValue, Evaluator, MemoKey};
use crate::partition::{enumerate_partitions, Partition};

/// A character value of absolute value at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub lambda: Partition,
    pub value: CharValue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVerdict {
    pub is_sign: bool,
    /// `|supp(μ)|`, present exactly when `is_sign`.
    pub support_size: Option<usize>,
    /// First offending character, present exactly when not `is_sign`.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpVerdict {
    pub is_up: bool,
    /// First `λ` with two or more `μ`-paths.
    pub witness: Option<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub mu: Partition,
    pub n: usize,
    pub is_sign: bool,
    pub is_up: bool,
    pub is_sd: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub up_witness: Option<Partition>,
}

/// Sign verdict for the class of `ev`'s `μ`.
pub fn sign_verdict(ev: &Evaluator) -> SignVerdict {
    let lambdas = enumerate_partitions(ev.weight());
    let hit = exec::find_first(&lambdas, |l| {
        let value = ev.value_unchecked(l);
        (!value.is_sign_value()).then_some(value)
    });
    match hit {
        Some((i, value)) => SignVerdict {
            is_sign: false,
            support_size: None,
            witness: Some(Witness {
                lambda: lambdas[i].clone(),
                value,
            }),
        },
        None => {
            // Every value is now cached; the support count is a lookup pass.
            let nonzero = exec::map(&lambdas, |l| !ev.value_unchecked(l).is_zero());
            SignVerdict {
                is_sign: true,
                support_size: Some(nonzero.into_iter().filter(|&b| b).count()),
                witness: None,
            }
        }
    }
}

pub fn is_sign(mu: &Partition) -> SignVerdict {
    sign_verdict(&Evaluator::new(mu.clone()))
}

/// Counts `μ`-paths in shapes, saturating at a cap. Signs are ignored.
pub struct PathCounter {
    mu: Partition,
    cap: usize,
    cache: DashMap<MemoKey, usize>,
}

impl PathCounter {
    pub fn new(mu: Partition, cap: usize) -> Self {
        assert!(cap >= 1, "path cap must be positive");
        Self {
            mu,
            cap,
            cache: DashMap::new(),
        }
    }

    pub fn count(&self, lambda: &Partition) -> Result<usize> {
        if lambda.weight() != self.mu.weight() {
            return Err(Error::WeightMismatch {
                left: lambda.clone(),
                left_weight: lambda.weight(),
                right: self.mu.clone(),
                right_weight: self.mu.weight(),
            });
        }
        Ok(self.count_from(lambda, 0))
    }

    fn count_from(&self, shape: &Partition, i: usize) -> usize {
        let parts = self.mu.parts();
        if i == parts.len() {
            return 1;
        }
        if i + 1 == parts.len() {
            return usize::from(shape.is_hook_shape());
        }
        let key = MemoKey {
            shape: shape.clone(),
            suffix_index: i,
        };
        if let Some(hit) = self.cache.get(&key) {
            return *hit;
        }
        let mut total = 0;
        for removal in remove_hooks(shape, parts[i]) {
            total += self.count_from(&removal.result, i + 1);
            if total >= self.cap {
                total = self.cap;
                break;
            }
        }
        self.cache.entry(key).or_insert(total);
        total
    }
}

/// Number of `μ`-paths in `λ`, saturating at `cap`.
pub fn count_paths(lambda: &Partition, mu: &Partition, cap: usize) -> Result<usize> {
    PathCounter::new(mu.clone(), cap).count(lambda)
}

/// `μ` is a unique-path partition when no `λ` has two or more `μ`-paths.
pub fn is_up(mu: &Partition) -> UpVerdict {
    let counter = PathCounter::new(mu.clone(), 2);
    let lambdas = enumerate_partitions(mu.weight());
    let hit = exec::find_first(&lambdas, |l| {
        (counter.count_from(l, 0) >= 2).then_some(())
    });
    UpVerdict {
        is_up: hit.is_none(),
        witness: hit.map(|(i, ())| lambdas[i].clone()),
    }
}

/// Strongly decreasing: each part exceeds the sum of all later parts.
pub fn is_sd(mu: &Partition) -> bool {
    mu.is_strongly_decreasing()
}

pub fn classify(mu: &Partition) -> ClassificationReport {
    classify_with(&Evaluator::new(mu.clone()))
}

/// Full report, reusing an evaluator whose cache may already be warm.
pub fn classify_with(ev: &Evaluator) -> ClassificationReport {
    let mu = ev.mu().clone();
    let sign = sign_verdict(ev);
    let up = is_up(&mu);
    ClassificationReport {
        n: mu.weight(),
        is_sign: sign.is_sign,
        is_up: up.is_up,
        is_sd: is_sd(&mu),
        support_size: sign.support_size,
        witness: sign.witness,
        up_witness: up.witness,
        mu,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Sign,
    Up,
    Sd,
}

impl ClassKind {
    pub fn holds(self, mu: &Partition) -> bool {
        match self {
            ClassKind::Sign => is_sign(mu).is_sign,
            ClassKind::Up => is_up(mu).is_up,
            ClassKind::Sd => is_sd(mu),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Sign => "sign",
            ClassKind::Up => "up",
            ClassKind::Sd => "sd",
        }
    }
}

impl std::str::FromStr for ClassKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sign" => Ok(ClassKind::Sign),
            "up" => Ok(ClassKind::Up),
            "sd" => Ok(ClassKind::Sd),
            other => Err(format!("unknown class kind {other:?} (expected sign, up or sd)")),
        }
    }
}

/// All partitions of `n` in the chosen class, in reverse-lexicographic order.
pub fn enumerate_class(n: usize, kind: ClassKind) -> Vec<Partition> {
    let all = enumerate_partitions(n);
    let keep = exec::map(&all, |mu| kind.holds(mu));
    all.into_iter()
        .zip(keep)
        .filter_map(|(mu, k)| k.then_some(mu))
        .collect()
}

/// `μ = (a, a_1, ..., a_r)` with `r >= 2` is exceptional when `a > a_1`,
/// `a <= a_1 + ... + a_r`, and `μ` together with every tail
/// `(a_i, ..., a_r)` is a sign partition.
pub fn is_exceptional(mu: &Partition) -> Result<bool> {
    if mu.len() < 3 {
        return Err(Error::TooFewParts {
            mu: mu.clone(),
            needed: 3,
        });
    }
    let parts = mu.parts();
    let a = parts[0];
    let t: usize = parts[1..].iter().sum();
    if a <= parts[1] || a > t {
        return Ok(false);
    }
    // Shortest tails first: they are the cheapest to reject.
    for i in (0..parts.len()).rev() {
        if !is_sign(&mu.suffix(i)).is_sign {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which clause of the conjectured classification a partition satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureClause {
    /// Strongly decreasing.
    StronglyDecreasing,
    /// Strongly decreasing down to a tail `(1,1)`.
    TwoOnes,
    /// Strongly decreasing down to a tail `(a, a-1, 1)`, `a >= 2`.
    NearStaircase,
    /// Strongly decreasing down to one of the four-part tails
    /// `(a, a-1, 2, 1)` (`a >= 4`), `(a, a-1, 3, 1)` (`a >= 5`), `(3,2,1,1)`,
    /// or `(5,3,2,1)`.
    FourPartTail,
}

/// `a_i > a_{i+1} + ... + a_k` for every zero-based `i < upto`.
fn dominates_through(parts: &[usize], upto: usize) -> bool {
    let mut later: usize = parts[upto..].iter().sum();
    for i in (0..upto).rev() {
        if parts[i] <= later {
            return false;
        }
        later += parts[i];
    }
    true
}

fn is_four_part_tail(tail: &[usize]) -> bool {
    match *tail {
        [a, b, 2, 1] if a >= 4 && b + 1 == a => true,
        [a, b, 3, 1] if a >= 5 && b + 1 == a => true,
        [3, 2, 1, 1] | [5, 3, 2, 1] => true,
        _ => false,
    }
}

/// The first clause of the conjectured classification that `μ` satisfies.
pub fn conjecture_clause(mu: &Partition) -> Option<ConjectureClause> {
    let parts = mu.parts();
    let k = parts.len();
    if mu.is_strongly_decreasing() {
        return Some(ConjectureClause::StronglyDecreasing);
    }
    if k >= 2 && dominates_through(parts, k - 2) && parts[k - 2..] == [1, 1] {
        return Some(ConjectureClause::TwoOnes);
    }
    if k >= 3 && dominates_through(parts, k - 3) {
        if let [a, b, 1] = parts[k - 3..] {
            if a >= 2 && b + 1 == a {
                return Some(ConjectureClause::NearStaircase);
            }
        }
    }
    if k >= 4 && dominates_through(parts, k - 4) && is_four_part_tail(&parts[k - 4..]) {
        return Some(ConjectureClause::FourPartTail);
    }
    None
}

/// The conjectured characterisation of sign partitions.
pub fn conjecture_predicate(mu: &Partition) -> bool {
    conjecture_clause(mu).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub mu: Partition,
    pub predicted: bool,
    pub brute_force: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Sweep summary for one weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureSweep {
    pub n: usize,
    pub partitions: usize,
    pub sign_partitions: usize,
    pub discrepancies: Vec<Discrepancy>,
}

/// Compares the conjectured predicate against brute force on every
/// partition of `n`.
pub fn sweep_conjecture(n: usize) -> ConjectureSweep {
    let all = enumerate_partitions(n);
    let verdicts = exec::map(&all, is_sign);
    let sign_partitions = verdicts.iter().filter(|v| v.is_sign).count();
    let discrepancies = all
        .iter()
        .zip(verdicts)
        .filter_map(|(mu, verdict)| {
            let predicted = conjecture_predicate(mu);
            (predicted != verdict.is_sign).then(|| Discrepancy {
                mu: mu.clone(),
                predicted,
                brute_force: verdict.is_sign,
                witness: verdict.witness,
            })
        })
        .collect();
    ConjectureSweep {
        n,
        partitions: all.len(),
        sign_partitions,
        discrepancies,
    }
}

pub fn verify_conjecture(n: usize) -> Vec<Discrepancy> {
    sweep_conjecture(n).discrepancies
}
