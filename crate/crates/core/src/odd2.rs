//! Odd-degree characters and the class of the binary-expansion partition.
//!
//! For `n = 2^{r_1} + ... + 2^{r_t}` the partition `(2^{r_1}, ..., 2^{r_t})`
//! is strongly decreasing, its support is exactly the set of odd-degree
//! characters, and `Θ_μ` vanishes off `μ` with value `2^{r_1 + ... + r_t}`
//! on it, which is the order of the abelianized Sylow 2-subgroup.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::is_sign;
use crate::exec;
use crate::mn::{centralizer_order, degree_is_odd, serialize_biguint, Evaluator};
use crate::partition::{enumerate_partitions, Partition};
use crate::theta::{evaluate_decomposition, theta_decompose_with};

/// Exponents of the binary expansion of `n`, largest first.
pub fn binary_decomposition(n: usize) -> Vec<u32> {
    assert!(n >= 1, "binary decomposition needs n >= 1");
    (0..usize::BITS)
        .rev()
        .filter(|&r| n >> r & 1 == 1)
        .collect()
}

/// `(2^{r_1}, ..., 2^{r_t})`.
pub fn binary_partition_of(n: usize) -> Partition {
    Partition::from_unsorted(binary_decomposition(n).into_iter().map(|r| 1 << r).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddDegreeReport {
    pub n: usize,
    pub exponents: Vec<u32>,
    pub mu: Partition,
    pub is_sd: bool,
    #[serde(serialize_with = "serialize_biguint")]
    pub sylow_ab_order: BigUint,
    pub odd_count: usize,
    pub support_size: usize,
    #[serde(serialize_with = "serialize_biguint")]
    pub centralizer_order: BigUint,
    pub support_matches: bool,
    pub theta_ok: bool,
}

impl OddDegreeReport {
    /// All the numerical claims hold.
    pub fn holds(&self) -> bool {
        let odd = BigUint::from(self.odd_count);
        self.is_sd
            && self.support_matches
            && self.theta_ok
            && odd == self.sylow_ab_order
            && odd == self.centralizer_order
    }
}

pub fn verify_theorem5(n: usize) -> OddDegreeReport {
    let exponents = binary_decomposition(n);
    let mu = binary_partition_of(n);
    let sylow_ab_order = BigUint::one() << exponents.iter().sum::<u32>();

    let ev = Evaluator::new(mu.clone());
    let support: BTreeSet<Partition> = ev
        .column()
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(l, _)| l)
        .collect();
    let lambdas = enumerate_partitions(n);
    let odd_flags = exec::map(&lambdas, degree_is_odd);
    let odd: BTreeSet<Partition> = lambdas
        .iter()
        .zip(odd_flags)
        .filter(|(_, odd)| *odd)
        .map(|(l, _)| l.clone())
        .collect();

    let theta_ok = match theta_decompose_with(&ev) {
        Ok(theta) => {
            let on_mu = BigInt::from(sylow_ab_order.clone());
            lambdas.iter().all(|nu| {
                let value = evaluate_decomposition(&theta, nu).expect("weights agree");
                if *nu == mu {
                    value == on_mu
                } else {
                    value.is_zero()
                }
            })
        }
        Err(_) => false,
    };

    OddDegreeReport {
        n,
        is_sd: mu.is_strongly_decreasing(),
        centralizer_order: centralizer_order(&mu),
        support_size: support.len(),
        odd_count: odd.len(),
        support_matches: support == odd,
        theta_ok,
        sylow_ab_order,
        exponents,
        mu,
    }
}

/// Sign classes of `S_n` whose elements have 2-power order, by brute force.
pub fn two_element_sign_classes(n: usize) -> Vec<Partition> {
    let candidates: Vec<Partition> = enumerate_partitions(n)
        .into_iter()
        .filter(|q| q.parts().iter().all(|p| p.is_power_of_two()))
        .collect();
    let keep = exec::map(&candidates, |q| is_sign(q).is_sign);
    candidates
        .into_iter()
        .zip(keep)
        .filter_map(|(q, k)| k.then_some(q))
        .collect()
}

/// The closed-form list of 2-element sign classes: the binary-expansion
/// partition, plus the variant ending `1^2` when `n ≡ 2 (mod 4)` and the one
/// ending `2,1^2` when `n ≡ 4 (mod 8)`. Sorted reverse-lexicographically.
pub fn two_element_sign_classes_predicted(n: usize) -> Vec<Partition> {
    let base = binary_partition_of(n);
    let mut out = vec![base.clone()];
    let parts = base.parts();
    let (&last, head) = parts.split_last().expect("n >= 1");
    let tail: &[usize] = match last {
        2 => &[1, 1],
        4 => &[2, 1, 1],
        _ => &[],
    };
    if !tail.is_empty() {
        let mut alt = head.to_vec();
        alt.extend_from_slice(tail);
        out.push(Partition::from_unsorted(alt));
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Exploratory analogue for an odd prime `p`: the `p`-adic expansion
/// partition and how its support compares with the `p'`-degree characters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeProbe {
    pub n: usize,
    pub prime: usize,
    pub mu: Partition,
    pub is_sign: bool,
    pub support_size: usize,
    pub prime_to_degree_count: usize,
    pub support_matches: bool,
}

/// `p`-adic valuation of `n!`.
fn factorial_valuation(n: usize, p: usize) -> usize {
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

fn valuation(mut h: usize, p: usize) -> usize {
    let mut v = 0;
    while h.is_multiple_of(p) {
        h /= p;
        v += 1;
    }
    v
}

/// Whether `p` does not divide the degree of `[λ]`.
pub fn degree_prime_to(lambda: &Partition, p: usize) -> bool {
    let hooks: usize = lambda.hook_lengths().into_iter().map(|h| valuation(h, p)).sum();
    hooks == factorial_valuation(lambda.weight(), p)
}

pub fn prime_probe(n: usize, prime: usize) -> PrimeProbe {
    assert!(prime >= 2 && n >= 1);
    let mut parts = Vec::new();
    let (mut rest, mut power) = (n, 1);
    while rest > 0 {
        parts.extend(std::iter::repeat_n(power, rest % prime));
        rest /= prime;
        power *= prime;
    }
    let mu = Partition::from_unsorted(parts);
    let ev = Evaluator::new(mu.clone());
    let column = ev.column();
    let is_sign = column.iter().all(|(_, v)| v.is_sign_value());
    let support: BTreeSet<&Partition> = column
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(l, _)| l)
        .collect();
    let prime_to: BTreeSet<&Partition> = column
        .iter()
        .map(|(l, _)| l)
        .filter(|l| degree_prime_to(l, prime))
        .collect();
    PrimeProbe {
        n,
        prime,
        is_sign,
        support_size: support.len(),
        prime_to_degree_count: prime_to.len(),
        support_matches: support == prime_to,
        mu,
    }
}
