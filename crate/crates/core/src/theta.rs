//! The generalized character `Θ_μ = Σ [λ](μ)·[λ]` of a sign class and its
//! split into two multiplicity-free characters `Θ⁺ − Θ⁻`.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::Serialize;

use crate::classify::sign_verdict;
use crate::error::{Error, Result};
use crate::exec;
use crate::mn::{self, serialize_biguint, Evaluator};
use crate::partition::{enumerate_partitions, Partition};

/// Signed support of `Θ_μ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaDecomposition {
    pub mu: Partition,
    /// `λ` with `[λ](μ) = 1`, in reverse-lexicographic order.
    pub plus: Vec<Partition>,
    /// `λ` with `[λ](μ) = -1`.
    pub minus: Vec<Partition>,
    #[serde(serialize_with = "serialize_biguint")]
    pub degree_plus: BigUint,
    #[serde(serialize_with = "serialize_biguint")]
    pub degree_minus: BigUint,
}

impl ThetaDecomposition {
    pub fn support_size(&self) -> usize {
        self.plus.len() + self.minus.len()
    }

    /// `(λ, ±1)` pairs.
    pub fn signed_support(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.plus
            .iter()
            .map(|l| (l, 1))
            .chain(self.minus.iter().map(|l| (l, -1)))
    }
}

pub fn theta_decompose(mu: &Partition) -> Result<ThetaDecomposition> {
    theta_decompose_with(&Evaluator::new(mu.clone()))
}

/// Decomposes `Θ_μ`, failing with the first offending character when `μ` is
/// not a sign partition.
pub fn theta_decompose_with(ev: &Evaluator) -> Result<ThetaDecomposition> {
    let mu = ev.mu().clone();
    if let Some(w) = sign_verdict(ev).witness {
        return Err(Error::NotSign {
            mu,
            lambda: w.lambda,
            value: w.value,
        });
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (lambda, value) in ev.column() {
        if value.is_positive() {
            plus.push(lambda);
        } else if value.is_negative() {
            minus.push(lambda);
        }
    }
    let degree_sum = |side: &[Partition]| -> BigUint { side.iter().map(mn::degree).sum() };
    Ok(ThetaDecomposition {
        degree_plus: degree_sum(&plus),
        degree_minus: degree_sum(&minus),
        mu,
        plus,
        minus,
    })
}

/// `Θ_μ(ν)`.
pub fn evaluate_theta(mu: &Partition, nu: &Partition) -> Result<BigInt> {
    let theta = theta_decompose(mu)?;
    evaluate_decomposition(&theta, nu)
}

/// Evaluates an already decomposed `Θ_μ` on the class `ν`.
pub fn evaluate_decomposition(theta: &ThetaDecomposition, nu: &Partition) -> Result<BigInt> {
    if theta.mu.weight() != nu.weight() {
        return Err(Error::WeightMismatch {
            left: theta.mu.clone(),
            left_weight: theta.mu.weight(),
            right: nu.clone(),
            right_weight: nu.weight(),
        });
    }
    let ev = Evaluator::new(nu.clone());
    let support: Vec<(&Partition, i64)> = theta.signed_support().collect();
    let terms = exec::map(&support, |(l, s)| ev.value_unchecked(l).into_bigint() * s);
    Ok(terms.into_iter().fold(BigInt::zero(), |acc, t| acc + t))
}

/// `Θ_μ` on every class of `S_n`, in reverse-lexicographic order of classes.
pub fn theta_profile(theta: &ThetaDecomposition) -> Vec<(Partition, BigInt)> {
    enumerate_partitions(theta.mu.weight())
        .into_iter()
        .map(|nu| {
            let v = evaluate_decomposition(theta, &nu).expect("weights agree");
            (nu, v)
        })
        .collect()
}
