//! Transition checks shared by the test suites and the `verify` command.
//! Each returns a human-readable counterexample on failure.

use crate::combgen::ValueChange;
use crate::delta::{format_labels, DeltaEvent};

pub type Verdict = Result<(), String>;

/// `next` is `prev` with exactly the values at `e.from` and `e.to` swapped,
/// and those values differ.
pub fn swap_transition(prev: &[usize], next: &[usize], e: &DeltaEvent) -> Verdict {
    let diff: Vec<usize> = (0..prev.len())
        .filter(|&j| prev[j] != next[j])
        .map(|j| j + 1)
        .collect();
    let mut expected = [e.from, e.to];
    expected.sort_unstable();
    if diff != expected {
        return Err(format!(
            "{} -> {}: changed positions {:?}, event names {:?}",
            format_labels(prev),
            format_labels(next),
            diff,
            expected
        ));
    }
    let (a, b) = (e.from - 1, e.to - 1);
    if prev[a] != next[b] || prev[b] != next[a] {
        return Err(format!(
            "{} -> {}: positions {} and {} were not swapped",
            format_labels(prev),
            format_labels(next),
            e.from,
            e.to
        ));
    }
    Ok(())
}

/// `|from - to| = 1`.
pub fn adjacent(e: &DeltaEvent) -> Verdict {
    if e.from.abs_diff(e.to) == 1 {
        Ok(())
    } else {
        Err(format!("swap {} {} is not adjacent", e.from, e.to))
    }
}

/// Every position strictly between `from` and `to` holds the moving value,
/// which is the smaller of the two swapped values and equals
/// `e.moved_value`.
pub fn block_move(prev: &[usize], e: &DeltaEvent) -> Verdict {
    let mover = prev[e.from - 1];
    let other = prev[e.to - 1];
    if mover != e.moved_value {
        return Err(format!(
            "{}: event says {} moves but position {} holds {}",
            format_labels(prev),
            e.moved_value,
            e.from,
            mover
        ));
    }
    if mover >= other {
        return Err(format!(
            "{}: moving value {} is not the smaller of ({}, {})",
            format_labels(prev),
            mover,
            mover,
            other
        ));
    }
    let (lo, hi) = (e.from.min(e.to), e.from.max(e.to));
    if let Some(j) = (lo + 1..hi).find(|&j| prev[j - 1] != mover) {
        return Err(format!(
            "{}: position {} between {} and {} holds {}, not {}",
            format_labels(prev),
            j,
            e.from,
            e.to,
            prev[j - 1],
            mover
        ));
    }
    Ok(())
}

/// One slot of the in-place combination changed from `c.from` to `c.to`.
pub fn one_change(prev: &[usize], next: &[usize], c: &ValueChange) -> Verdict {
    let diff: Vec<usize> = (0..prev.len()).filter(|&j| prev[j] != next[j]).collect();
    match diff.as_slice() {
        [j] if prev[*j] == c.from && next[*j] == c.to => Ok(()),
        _ => Err(format!(
            "{} -> {}: expected one slot {} -> {}",
            format_labels(prev),
            format_labels(next),
            c.from,
            c.to
        )),
    }
}

/// In the binary vector, the moved 1 crosses only 1s.
pub fn ones_block(prev_bits: &[u8], c: &ValueChange) -> Verdict {
    let (lo, hi) = (c.from.min(c.to), c.from.max(c.to));
    match (lo + 1..hi).find(|&v| prev_bits[v - 1] != 1) {
        None => Ok(()),
        Some(v) => Err(format!(
            "1 moving {} -> {} crosses a 0 at {}",
            c.from, c.to, v
        )),
    }
}

/// Tag the 0s of `prev_bits` left to right, let the 0 at `c.to` move to
/// `c.from`, and require the tags to still read in order.
pub fn zero_order(prev_bits: &[u8], next_bits: &[u8], c: &ValueChange) -> Verdict {
    let zeros_prev: Vec<usize> = (1..=prev_bits.len())
        .filter(|&v| prev_bits[v - 1] == 0)
        .collect();
    let moved: Vec<usize> = zeros_prev
        .iter()
        .map(|&v| if v == c.to { c.from } else { v })
        .collect();
    let zeros_next: Vec<usize> = (1..=next_bits.len())
        .filter(|&v| next_bits[v - 1] == 0)
        .collect();
    if moved != zeros_next {
        return Err(format!(
            "zeros {zeros_prev:?} do not map onto {zeros_next:?}"
        ));
    }
    if moved.windows(2).any(|w| w[0] > w[1]) {
        return Err(format!(
            "0s reordered: {zeros_prev:?} became {moved:?} after {} -> {}",
            c.from, c.to
        ));
    }
    Ok(())
}
