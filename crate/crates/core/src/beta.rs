//! Beta-sets (first-column hook lengths) and rim-hook removal/addition.
//!
//! With `r` beads, a partition `(l_1, ..., l_r)` (padded with zeros) has the
//! beta-set `{l_i + r - i}`. Removing an `a`-hook moves one bead from `b` to
//! the empty position `b - a`; the leg length of the hook is the number of
//! beads strictly between the two positions.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Strictly decreasing set of non-negative bead positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSet {
    betas: Vec<usize>,
}

impl BetaSet {
    /// Encodes `p` on `length` beads. Fails if `p` has more parts than beads.
    pub fn from_partition(p: &Partition, length: usize) -> Result<Self> {
        if length < p.len() {
            return Err(Error::BetaLength {
                partition: p.clone(),
                length,
                parts: p.len(),
            });
        }
        let parts = p.parts();
        let betas = (0..length)
            .map(|i| parts.get(i).copied().unwrap_or(0) + (length - 1 - i))
            .collect();
        Ok(Self { betas })
    }

    /// Builds a beta-set from arbitrary distinct positions.
    pub fn from_positions(mut positions: Vec<usize>) -> Option<Self> {
        positions.sort_unstable_by(|a, b| b.cmp(a));
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Self { betas: positions })
    }

    pub fn betas(&self) -> &[usize] {
        &self.betas
    }

    /// Number of beads.
    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.betas.binary_search_by(|b| position.cmp(b)).is_ok()
    }

    /// Decodes back to a partition, dropping zero parts.
    pub fn to_partition(&self) -> Partition {
        let r = self.betas.len();
        let parts = self
            .betas
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (r - 1 - i))
            .take_while(|&part| part > 0)
            .collect();
        Partition::from_sorted_unchecked(parts)
    }

    /// Beads strictly between `lo` and `hi`.
    fn beads_between(&self, lo: usize, hi: usize) -> usize {
        self.betas.iter().filter(|&&b| lo < b && b < hi).count()
    }

    /// Moves the bead at `from` to the empty position `to`.
    fn moved(&self, from: usize, to: usize) -> Self {
        let mut positions: Vec<usize> = self
            .betas
            .iter()
            .map(|&b| if b == from { to } else { b })
            .collect();
        positions.sort_unstable_by(|a, b| b.cmp(a));
        Self { betas: positions }
    }
}

/// Result of removing one rim hook.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookRemoval {
    pub result: Partition,
    pub leg_length: usize,
    pub hook_length: usize,
}

/// Result of adding one rim hook.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookAddition {
    pub result: Partition,
    pub leg_length: usize,
    pub hook_length: usize,
}

/// All ways to remove an `a`-hook from `p`, ordered by descending bead
/// position (i.e. by the row where the hook starts, top first).
pub fn remove_hooks(p: &Partition, a: usize) -> Vec<HookRemoval> {
    assert!(a >= 1, "hook length must be positive");
    let beta = BetaSet::from_partition(p, p.len()).expect("length equals part count");
    beta.betas
        .iter()
        .filter(|&&b| b >= a && !beta.contains(b - a))
        .map(|&b| HookRemoval {
            result: beta.moved(b, b - a).to_partition(),
            leg_length: beta.beads_between(b - a, b),
            hook_length: a,
        })
        .collect()
}

/// All ways to add an `a`-hook to `p`, ordered by descending bead position
/// (first-row addition first).
pub fn add_hooks(p: &Partition, a: usize) -> Vec<HookAddition> {
    assert!(a >= 1, "hook length must be positive");
    let beta = BetaSet::from_partition(p, p.len() + a).expect("length exceeds part count");
    beta.betas
        .iter()
        .filter(|&&b| !beta.contains(b + a))
        .map(|&b| HookAddition {
            result: beta.moved(b, b + a).to_partition(),
            leg_length: beta.beads_between(b, b + a),
            hook_length: a,
        })
        .collect()
}

/// Number of removable `a`-hooks in `p`.
pub fn count_hooks(p: &Partition, a: usize) -> usize {
    let beta = BetaSet::from_partition(p, p.len()).expect("length equals part count");
    beta.betas
        .iter()
        .filter(|&&b| b >= a && !beta.contains(b - a))
        .count()
}
