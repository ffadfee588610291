//! Text streams: full objects, deltas and counts, plus delta replay.

use std::io::{self, Write};

use clap::ValueEnum;
use loopless::parking::{ParkingFunctions, ParkingStep};
use loopless::{
    apply_delta, CombinationServer, DeltaEvent, DeltaSource, JohnsonTrotter, MultisetPermutations,
    Permutation,
};

use crate::error::CliError;
use crate::job::Job;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// One object per line.
    #[default]
    Full,
    /// The first object, then `s <from> <to>` per step.
    Delta,
    /// The number of objects.
    Count,
}

/// How the current object was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    /// The first object.
    Start,
    /// One transposition of the previous object's container.
    Swap(DeltaEvent),
    /// A fresh object with no single-swap relation to the previous one.
    Reset,
}

/// Runs the job's generator and hands every object to `visit`.
///
/// For combinations the swap is on the slot vector (value `v` maps to its
/// slot, or 0 when absent), while `current` is the in-place array.
pub fn walk<F>(job: &Job, mut visit: F) -> io::Result<()>
where
    F: FnMut(&[usize], Frame) -> io::Result<()>,
{
    fn source<S: DeltaSource, F>(mut s: S, visit: &mut F) -> io::Result<()>
    where
        F: FnMut(&[usize], Frame) -> io::Result<()>,
    {
        visit(s.current(), Frame::Start)?;
        while let Some(e) = s.next_delta() {
            visit(s.current(), Frame::Swap(e))?;
        }
        Ok(())
    }

    match job {
        Job::Perm { n } => source(JohnsonTrotter::new(*n).map_err(other)?, &mut visit),
        Job::Multiperm(spec) => source(MultisetPermutations::new(spec), &mut visit),
        Job::Comb { n, r } => {
            let mut s = CombinationServer::new(*n, *r).map_err(other)?;
            visit(s.current(), Frame::Start)?;
            while let Some(c) = s.next_change() {
                visit(
                    s.current(),
                    Frame::Swap(DeltaEvent::new(c.from, c.to, c.from)),
                )?;
            }
            Ok(())
        }
        Job::Parking { n } => {
            let mut g = ParkingFunctions::new(*n).map_err(other)?;
            let mut first = true;
            while let Some(step) = g.advance() {
                let frame = match step {
                    ParkingStep::Swap(e) => Frame::Swap(e),
                    ParkingStep::Block if first => Frame::Start,
                    ParkingStep::Block => Frame::Reset,
                };
                first = false;
                visit(g.current(), frame)?;
            }
            Ok(())
        }
    }
}

fn other(e: loopless::Error) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidInput, e)
}

pub(crate) fn write_line<W: Write + ?Sized>(out: &mut W, labels: &[usize]) -> io::Result<()> {
    let mut first = true;
    for label in labels {
        if first {
            write!(out, "{label}")?;
            first = false;
        } else {
            write!(out, " {label}")?;
        }
    }
    out.write_all(b"\n")
}

/// Writes the job's objects to `out` in `format`.
pub fn generate<W: Write + ?Sized>(job: &Job, format: Format, out: &mut W) -> Result<(), CliError> {
    match format {
        Format::Count => writeln!(out, "{}", job.count()?)?,
        Format::Full => walk(job, |cur, _| write_line(out, cur))?,
        Format::Delta => walk(job, |cur, frame| match frame {
            Frame::Swap(e) => writeln!(out, "s {} {}", e.from, e.to),
            Frame::Start | Frame::Reset => write_line(out, cur),
        })?,
    }
    Ok(())
}

/// Rebuilds the full stream from a delta stream by applying each
/// `s <from> <to>` line with [`apply_delta`].
///
/// Any line that does not start with `s` is a full object and replaces the
/// state.
pub fn replay(job: &Job, delta: &str) -> Result<String, CliError> {
    let mut out = Vec::with_capacity(delta.len() * 2);
    let mut state: Option<Permutation> = None;
    for (index, line) in delta.lines().enumerate() {
        let lineno = index + 1;
        let bad = |m: String| CliError::Failed(format!("delta line {lineno}: {m}"));
        let numbers = |text: &str| -> Result<Vec<usize>, CliError> {
            text.split(' ')
                .map(|t| t.parse::<usize>().map_err(|e| bad(format!("{t:?}: {e}"))))
                .collect()
        };
        if let Some(rest) = line.strip_prefix("s ") {
            let p = state
                .as_ref()
                .ok_or_else(|| bad("swap before any object".into()))?;
            let [from, to] = numbers(rest)?[..] else {
                return Err(bad(format!("expected two positions in {line:?}")));
            };
            let moved = p.get(from).unwrap_or(0);
            let next = apply_delta(p, &DeltaEvent::new(from, to, moved))
                .map_err(|e| bad(e.to_string()))?;
            state = Some(next);
        } else {
            let labels = numbers(line)?;
            state = Some(match job {
                Job::Comb { r, .. } => slots_from_combination(&labels, *r).map_err(bad)?,
                _ => Permutation::new(labels),
            });
        }
        let p = state.as_ref().expect("state was just set");
        match job {
            Job::Comb { n, .. } => write_line(&mut out, &combination_from_slots(p, *n))?,
            _ => write_line(&mut out, p.items())?,
        }
    }
    Ok(String::from_utf8(out).expect("labels are ASCII"))
}

fn slots_from_combination(q: &[usize], r: usize) -> Result<Permutation, String> {
    let mut slots = vec![0; r];
    for (i, &v) in q.iter().enumerate() {
        if v == 0 || v > r || slots[v - 1] != 0 {
            return Err(format!("{v} is not a fresh value in 1..={r}"));
        }
        slots[v - 1] = i + 1;
    }
    Ok(Permutation::new(slots))
}

fn combination_from_slots(slots: &Permutation, n: usize) -> Vec<usize> {
    let mut q = vec![0; n];
    for (i, &slot) in slots.items().iter().enumerate() {
        if slot != 0 {
            q[slot - 1] = i + 1;
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::job::Kind;

    fn text(kind: Kind, params: &[usize], format: Format) -> String {
        let job = Job::parse(kind, params).unwrap();
        let mut out = Vec::new();
        generate(&job, format, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn full_output_shape() {
        let s = text(Kind::Multiperm, &[2, 2, 1], Format::Full);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 30);
        assert_eq!(lines[0], "1 1 2 2 3");
        assert_eq!(lines[29], "3 2 2 1 1");
        assert!(s.ends_with('\n'));
        assert!(s.lines().all(|l| !l.ends_with(' ')));
    }

    #[test]
    fn delta_output_shape() {
        let s = text(Kind::Perm, &[3], Format::Delta);
        assert_eq!(s, "1 2 3\ns 1 2\ns 2 3\ns 1 2\ns 3 2\ns 2 1\n");
        let s = text(Kind::Comb, &[4, 6], Format::Delta);
        assert_eq!(s.lines().next(), Some("1 2 3 4"));
        assert_eq!(s.lines().nth(1), Some("s 4 5"));
    }

    #[test]
    fn count_output() {
        assert_eq!(text(Kind::Multiperm, &[5], Format::Count), "1\n");
        assert_eq!(text(Kind::Parking, &[4], Format::Count), "125\n");
    }

    #[test]
    fn replay_reproduces_full_output() {
        for (kind, params) in [
            (Kind::Perm, vec![5]),
            (Kind::Comb, vec![3, 7]),
            (Kind::Comb, vec![1, 1]),
            (Kind::Multiperm, vec![2, 1, 2]),
            (Kind::Parking, vec![4]),
        ] {
            let job = Job::parse(kind, &params).unwrap();
            let full = text(kind, &params, Format::Full);
            let delta = text(kind, &params, Format::Delta);
            assert_eq!(replay(&job, &delta).unwrap(), full, "{job}");
        }
    }

    #[test]
    fn replay_rejects_corrupt_streams() {
        let job = Job::parse(Kind::Perm, &[3]).unwrap();
        assert!(replay(&job, "s 1 2\n").is_err());
        assert!(replay(&job, "1 2 3\ns 1 4\n").is_err());
        assert!(replay(&job, "1 2 3\ns 1\n").is_err());
        let job = Job::parse(Kind::Comb, &[2, 4]).unwrap();
        assert!(replay(&job, "1 1\n").is_err());
    }
}
