use std::fmt;

use crate::error::{Error, Result};

/// One transposition: the values at container positions `from` and `to`
/// (1-based) trade places. `moved_value` is the item that moved actively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeltaEvent {
    pub from: usize,
    pub to: usize,
    pub moved_value: usize,
}

impl DeltaEvent {
    pub fn new(from: usize, to: usize, moved_value: usize) -> Self {
        Self {
            from,
            to,
            moved_value,
        }
    }
}

impl fmt::Display for DeltaEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s {} {}", self.from, self.to)
    }
}

/// A container of item labels, indexed `1..=len` from the outside.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    items: Vec<usize>,
}

impl Permutation {
    pub fn new(items: Vec<usize>) -> Self {
        Self { items }
    }

    pub fn items(&self) -> &[usize] {
        &self.items
    }

    pub fn into_items(self) -> Vec<usize> {
        self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Label at 1-based `position`.
    pub fn get(&self, position: usize) -> Option<usize> {
        position
            .checked_sub(1)
            .and_then(|i| self.items.get(i))
            .copied()
    }

    /// Swaps the two positions named by `event` in place.
    pub fn apply(&mut self, event: &DeltaEvent) -> Result<()> {
        let len = self.items.len();
        for position in [event.from, event.to] {
            if position == 0 || position > len {
                return Err(Error::PositionOutOfRange { position, len });
            }
        }
        if event.from == event.to {
            return Err(Error::SelfSwap(event.from));
        }
        let (a, b) = (event.from - 1, event.to - 1);
        if self.items[a] == self.items[b] {
            return Err(Error::EqualValues {
                from: event.from,
                to: event.to,
                value: self.items[a],
            });
        }
        self.items.swap(a, b);
        Ok(())
    }
}

impl From<Vec<usize>> for Permutation {
    fn from(items: Vec<usize>) -> Self {
        Self::new(items)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_labels(f, &self.items)
    }
}

/// Returns `p` with the values at `e.from` and `e.to` swapped.
///
/// An event whose two positions hold equal values is rejected: no generator
/// ever emits one, so seeing it means the stream and the container disagree.
///
/// ```
/// use loopless::{apply_delta, DeltaEvent, Permutation};
///
/// let p = Permutation::new(vec![1, 1, 2, 2, 3]);
/// let q = apply_delta(&p, &DeltaEvent::new(2, 3, 1)).unwrap();
/// assert_eq!(q.items(), &[1, 2, 1, 2, 3]);
/// ```
pub fn apply_delta(p: &Permutation, e: &DeltaEvent) -> Result<Permutation> {
    let mut next = p.clone();
    next.apply(e)?;
    Ok(next)
}

/// Writes labels single-space separated with no trailing space.
pub fn write_labels<W: fmt::Write>(out: &mut W, labels: &[usize]) -> fmt::Result {
    let mut first = true;
    for label in labels {
        if !first {
            out.write_char(' ')?;
        }
        first = false;
        write!(out, "{label}")?;
    }
    Ok(())
}

/// Formats labels the way the command-line tool prints them.
pub fn format_labels(labels: &[usize]) -> String {
    let mut s = String::with_capacity(labels.len() * 3);
    write_labels(&mut s, labels).expect("writing to a String cannot fail");
    s
}
