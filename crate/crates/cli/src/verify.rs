//! `verify`: run a generator and hold it to its oracle and transition rules.

use std::collections::BTreeSet;
use std::fmt;

use loopless::check::{self, Verdict};
use loopless::parking::{is_parking_function, ParkingFunctions};
use loopless::{format_labels, oracle, CombinationServer, Error, ValueChange};

use crate::error::CliError;
use crate::job::Job;
use crate::stream::{self, walk, Format, Frame};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub job: String,
    pub objects: u64,
    pub transitions: u64,
    /// Names of the per-transition rules that held.
    pub rules: Vec<&'static str>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pass: {}: {} objects, oracle set and count match, delta replay matches; {} held on all {} transitions",
            self.job,
            self.objects,
            self.rules.join(", "),
            self.transitions
        )
    }
}

/// Runs every check for `job` and stops at the first counterexample.
pub fn verify(job: &Job) -> Result<VerifyReport, CliError> {
    let expected_set = oracle_set(job)?;
    let expected_count = job.count()?;

    let mut seen = BTreeSet::new();
    let mut objects = 0u64;
    let mut transitions = 0u64;
    let mut prev: Vec<usize> = Vec::new();
    let mut block_key: Vec<usize> = Vec::new();
    let mut closed_blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut failure: Option<String> = None;

    walk(job, |cur, frame| {
        if failure.is_some() {
            return Ok(());
        }
        let verdict = (|| -> Verdict {
            let key = match job {
                Job::Comb { .. } => {
                    let mut k = cur.to_vec();
                    k.sort_unstable();
                    k
                }
                _ => cur.to_vec(),
            };
            if !seen.insert(key.clone()) {
                return Err(format!("{} emitted twice", format_labels(cur)));
            }
            if let Job::Parking { .. } = job {
                if !is_parking_function(cur).map_err(|e| e.to_string())? {
                    return Err(format!("{} is not a parking function", format_labels(cur)));
                }
                let mut sorted = cur.to_vec();
                sorted.sort_unstable();
                if frame == Frame::Reset {
                    closed_blocks.insert(std::mem::take(&mut block_key));
                }
                if matches!(frame, Frame::Start | Frame::Reset) {
                    if closed_blocks.contains(&sorted) {
                        return Err(format!("block of {} appears twice", format_labels(&sorted)));
                    }
                    block_key = sorted;
                } else if sorted != block_key {
                    return Err(format!(
                        "{} left the block of {}",
                        format_labels(cur),
                        format_labels(&block_key)
                    ));
                }
            }
            if let Frame::Swap(e) = frame {
                transitions += 1;
                match job {
                    Job::Perm { .. } => {
                        check::swap_transition(&prev, cur, &e)?;
                        check::adjacent(&e)?;
                    }
                    Job::Multiperm(spec) => {
                        check::swap_transition(&prev, cur, &e)?;
                        check::block_move(&prev, &e)?;
                        if e.moved_value >= spec.classes() {
                            return Err(format!("the last class moved actively at {e}"));
                        }
                    }
                    Job::Parking { .. } => {
                        check::swap_transition(&prev, cur, &e)?;
                        check::block_move(&prev, &e)?;
                    }
                    Job::Comb { r, .. } => {
                        let c = ValueChange {
                            from: e.from,
                            to: e.to,
                        };
                        let (before, after) = (bits(&prev, *r), bits(cur, *r));
                        check::one_change(&prev, cur, &c)?;
                        check::ones_block(&before, &c)?;
                        check::zero_order(&before, &after, &c)?;
                    }
                }
            }
            Ok(())
        })();
        objects += 1;
        prev.clear();
        prev.extend_from_slice(cur);
        if let Err(m) = verdict {
            failure = Some(format!("object {objects}: {m}"));
        }
        Ok(())
    })?;
    if let Some(m) = failure {
        return Err(CliError::Failed(m));
    }

    if objects != expected_count {
        return Err(CliError::Failed(format!(
            "{objects} objects emitted, {expected_count} expected"
        )));
    }
    if let Some(missing) = expected_set.difference(&seen).next() {
        return Err(CliError::Failed(format!(
            "{} never emitted",
            format_labels(missing)
        )));
    }
    if let Some(extra) = seen.difference(&expected_set).next() {
        return Err(CliError::Failed(format!(
            "{} is not in the oracle set",
            format_labels(extra)
        )));
    }

    let rules = match job {
        Job::Perm { .. } => vec!["single swap", "adjacent swap"],
        Job::Multiperm(_) => vec!["single swap", "block move", "last class parked"],
        Job::Comb { .. } => {
            reverse_run(job)?;
            vec!["one change", "block move", "zero order", "reverse run"]
        }
        Job::Parking { n } => {
            steal_budget(*n)?;
            vec![
                "single swap within a block",
                "block move",
                "contiguous blocks",
                "steal budget",
            ]
        }
    };
    delta_replay(job)?;

    Ok(VerifyReport {
        job: job.to_string(),
        objects,
        transitions,
        rules,
    })
}

fn oracle_set(job: &Job) -> Result<BTreeSet<Vec<usize>>, CliError> {
    let set = match job {
        Job::Perm { n } => oracle::brute_permutations(*n),
        Job::Comb { n, r } => oracle::brute_combinations(*n, *r),
        Job::Multiperm(spec) => oracle::brute_multiset_perms(spec),
        Job::Parking { n } => oracle::brute_parking_functions(*n),
    };
    set.map_err(|e| match e {
        Error::GuardExceeded { .. } => CliError::Refused(format!(
            "{e}; the brute-force check is exponential, so use `gen` or `bench` for larger sizes"
        )),
        other => CliError::Usage(other.to_string()),
    })
}

fn bits(q: &[usize], r: usize) -> Vec<u8> {
    let mut b = vec![0; r];
    for &v in q {
        b[v - 1] = 1;
    }
    b
}

/// After a full run and a reverse re-initialization, the next run retraces
/// the first one backwards, and a second reverse restores the forward run.
fn reverse_run(job: &Job) -> Result<(), CliError> {
    let Job::Comb { n, r } = *job else {
        return Ok(());
    };
    let mut s = CombinationServer::new(n, r).map_err(|e| CliError::Usage(e.to_string()))?;
    let run = |s: &mut CombinationServer| {
        let mut v = vec![s.current().to_vec()];
        while s.next_change().is_some() {
            v.push(s.current().to_vec());
        }
        v
    };
    let forward = run(&mut s);
    let reverse = |s: &mut CombinationServer| {
        s.reverse()
            .map_err(|e| CliError::Failed(format!("reverse re-initialization: {e}")))
    };
    reverse(&mut s)?;
    let mut backward = run(&mut s);
    backward.reverse();
    if backward != forward {
        return Err(CliError::Failed(
            "backward run is not the forward run reversed".into(),
        ));
    }
    reverse(&mut s)?;
    if run(&mut s) != forward {
        return Err(CliError::Failed(
            "second forward run differs from the first".into(),
        ));
    }
    Ok(())
}

fn steal_budget(n: usize) -> Result<(), CliError> {
    let mut g = ParkingFunctions::new(n).map_err(|e| CliError::Usage(e.to_string()))?;
    while g.advance().is_some() {}
    let stats = g.steal_stats();
    if stats.max_per_call > g.budget() || stats.overrun > 0 {
        return Err(CliError::Failed(format!(
            "preparation took {} micro-steps in one call ({} overrun), budget is {}",
            stats.max_per_call,
            stats.overrun,
            g.budget()
        )));
    }
    Ok(())
}

fn delta_replay(job: &Job) -> Result<(), CliError> {
    let mut full = Vec::new();
    let mut delta = Vec::new();
    stream::generate(job, Format::Full, &mut full)?;
    stream::generate(job, Format::Delta, &mut delta)?;
    let full = String::from_utf8(full).expect("labels are ASCII");
    let delta = String::from_utf8(delta).expect("labels are ASCII");
    let replayed = stream::replay(job, &delta)?;
    if replayed != full {
        let line = full
            .lines()
            .zip(replayed.lines())
            .position(|(a, b)| a != b)
            .map_or_else(|| "length".to_string(), |i| format!("line {}", i + 1));
        return Err(CliError::Failed(format!(
            "delta replay differs from full output at {line}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::job::Kind;

    fn run(kind: Kind, params: &[usize]) -> Result<VerifyReport, CliError> {
        verify(&Job::parse(kind, params).unwrap())
    }

    #[test]
    fn examples_pass() {
        let r = run(Kind::Multiperm, &[2, 2, 1]).unwrap();
        assert_eq!(r.objects, 30);
        let r = run(Kind::Parking, &[3]).unwrap();
        assert_eq!(r.objects, 16);
        let r = run(Kind::Comb, &[4, 6]).unwrap();
        assert_eq!((r.objects, r.transitions), (15, 14));
        assert!(r.rules.contains(&"block move"));
        let r = run(Kind::Perm, &[5]).unwrap();
        assert_eq!(r.objects, 120);
    }

    #[test]
    fn guards_refuse() {
        for (kind, params) in [
            (Kind::Perm, vec![10]),
            (Kind::Parking, vec![7]),
            (Kind::Multiperm, vec![5, 5]),
            (Kind::Comb, vec![2, 21]),
        ] {
            let err = run(kind, &params).unwrap_err();
            assert_eq!(err.exit_code(), crate::error::EXIT_USAGE, "{kind:?}");
        }
    }

    #[test]
    fn report_text() {
        let r = run(Kind::Comb, &[4, 6]).unwrap();
        let text = r.to_string();
        assert!(text.starts_with("pass: comb 4 6: 15 objects"));
        assert!(text.ends_with("on all 14 transitions"));
    }
}
