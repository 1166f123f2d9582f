//! Independent oracles: cell-by-cell rim hooks on the Young diagram and a
//! character recursion that strips the smallest part of the class first.
#![allow(dead_code)]

pub mod fixtures;

use std::collections::{BTreeSet, VecDeque};

use sign_classes::Partition;

/// All `(ν, leg)` with `λ/ν` a connected border strip of size `a`, sorted.
pub fn rim_hooks_brute(lambda: &Partition, a: usize) -> Vec<(Partition, usize)> {
    let n = lambda.weight();
    if a > n {
        return Vec::new();
    }
    let mut out: Vec<(Partition, usize)> = Partition::all(n - a)
        .filter(|nu| contained(nu, lambda))
        .filter_map(|nu| border_strip_leg(lambda, &nu).map(|leg| (nu, leg)))
        .collect();
    out.sort();
    out
}

fn contained(nu: &Partition, lambda: &Partition) -> bool {
    nu.len() <= lambda.len() && nu.parts().iter().zip(lambda.parts()).all(|(a, b)| a <= b)
}

fn border_strip_leg(lambda: &Partition, nu: &Partition) -> Option<usize> {
    let cells: BTreeSet<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| {
            let start = nu.parts().get(i).copied().unwrap_or(0);
            (start..row).map(move |j| (i, j))
        })
        .collect();
    let first = *cells.iter().next()?;
    for &(i, j) in &cells {
        if cells.contains(&(i + 1, j)) && cells.contains(&(i, j + 1)) && cells.contains(&(i + 1, j + 1)) {
            return None;
        }
    }
    let mut seen = BTreeSet::from([first]);
    let mut queue = VecDeque::from([first]);
    while let Some((i, j)) = queue.pop_front() {
        let mut nbrs = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            nbrs.push((i - 1, j));
        }
        if j > 0 {
            nbrs.push((i, j - 1));
        }
        for c in nbrs {
            if cells.contains(&c) && seen.insert(c) {
                queue.push_back(c);
            }
        }
    }
    if seen.len() != cells.len() {
        return None;
    }
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
    Some(rows.len() - 1)
}

/// `[λ](μ)` by stripping the smallest part of `μ` first, using the
/// cell-based rim hooks. Exponential; for small `n` only.
pub fn char_value_brute(lambda: &Partition, mu: &Partition) -> i64 {
    let Some((&last, rest)) = mu.parts().split_last() else {
        return i64::from(lambda.is_empty());
    };
    let rest = Partition::new(rest.to_vec()).unwrap();
    rim_hooks_brute(lambda, last)
        .into_iter()
        .map(|(nu, leg)| {
            let sign = if leg % 2 == 0 { 1 } else { -1 };
            sign * char_value_brute(&nu, &rest)
        })
        .sum()
}
