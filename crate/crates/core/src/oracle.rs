//! Deliberately naive reference enumerations for tests and `verify`.
//!
//! Each oracle refuses sizes past a hard guard instead of running an
//! exponential job by accident.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::multiset::MultisetSpec;
use crate::parking::is_parking_function;

pub const MAX_PERMUTATION_N: usize = 9;
pub const MAX_COMBINATION_R: usize = 20;
pub const MAX_MULTISET_R: usize = 9;
pub const MAX_PARKING_N: usize = 6;

fn guard(what: &'static str, size: usize, max: usize) -> Result<()> {
    if size > max {
        Err(Error::GuardExceeded { what, size, max })
    } else {
        Ok(())
    }
}

/// All `n!` permutations of `1..=n`.
pub fn brute_permutations(n: usize) -> Result<BTreeSet<Vec<usize>>> {
    guard("permutation", n, MAX_PERMUTATION_N)?;
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut BTreeSet<Vec<usize>>) {
        let n = used.len();
        if prefix.len() == n {
            out.insert(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v + 1);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    Ok(out)
}

/// All `n`-subsets of `1..=r`, each as a sorted vector.
pub fn brute_combinations(n: usize, r: usize) -> Result<BTreeSet<Vec<usize>>> {
    guard("combination universe", r, MAX_COMBINATION_R)?;
    // Every bitmask of width r with exactly n bits set.
    let out = (0u32..1 << r)
        .filter(|mask| mask.count_ones() as usize == n)
        .map(|mask| (1..=r).filter(|v| mask >> (v - 1) & 1 == 1).collect())
        .collect();
    Ok(out)
}

/// All distinct rearrangements of the spec's multiset.
pub fn brute_multiset_perms(spec: &MultisetSpec) -> Result<BTreeSet<Vec<usize>>> {
    guard("multiset", spec.total(), MAX_MULTISET_R)?;
    fn extend(
        prefix: &mut Vec<usize>,
        left: &mut [usize],
        total: usize,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if prefix.len() == total {
            out.insert(prefix.clone());
            return;
        }
        for c in 0..left.len() {
            if left[c] > 0 {
                left[c] -= 1;
                prefix.push(c + 1);
                extend(prefix, left, total, out);
                prefix.pop();
                left[c] += 1;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut left = spec.multiplicities().to_vec();
    extend(&mut Vec::new(), &mut left, spec.total(), &mut out);
    Ok(out)
}

/// Every nondecreasing `q` over `1..=n` with `q(i) <= i`, by filtering all
/// nondecreasing sequences.
pub fn brute_standard_sequences(n: usize) -> Result<BTreeSet<Vec<usize>>> {
    guard("standard sequence", n, MAX_PARKING_N + 4)?;
    Ok(all_sequences(n)
        .filter(|q| q.windows(2).all(|w| w[0] <= w[1]))
        .filter(|q| q.iter().enumerate().all(|(i, &v)| v <= i + 1))
        .collect())
}

/// `{1..=n}^n` filtered by the alley simulation.
pub fn brute_parking_functions(n: usize) -> Result<BTreeSet<Vec<usize>>> {
    guard("parking", n, MAX_PARKING_N)?;
    Ok(all_sequences(n)
        .filter(|p| is_parking_function(p).expect("entries are in range"))
        .collect())
}

/// Odometer over `{1..=n}^n`.
fn all_sequences(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = Some(vec![1; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..n).rev() {
            if succ[i] < n {
                succ[i] += 1;
                next = Some(succ);
                break;
            }
            succ[i] = 1;
        }
        Some(current)
    })
}
