//! `bench`: instrumented step cost and unmetered throughput.

use std::fmt;
use std::thread;
use std::time::{Duration, Instant};

use loopless::parking::ParkingFunctions;
use loopless::{
    CombinationServer, DeltaSource, JohnsonTrotter, MultisetPermutations, OpCounter, StepStats,
    Unmetered,
};

use crate::error::CliError;
use crate::job::Job;

/// Step cost measured for one size.
#[derive(Debug, Clone, PartialEq)]
pub struct SizeRow {
    /// The job's parameters, e.g. `3 3 3 3 3`.
    pub size: String,
    pub objects: u64,
    pub max: u64,
    pub mean: f64,
    /// Most preparation micro-steps charged to one call (parking only).
    pub steal_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StepCostReport {
    pub generator: String,
    pub rows: Vec<SizeRow>,
    /// Objects emitted by each timed repetition, checked against the count.
    pub objects: u64,
    pub reps: usize,
    /// Wall time of the timed, uninstrumented repetitions.
    pub wall: Duration,
}

impl StepCostReport {
    /// The largest per-step maximum over all sizes.
    pub fn max(&self) -> u64 {
        self.rows.iter().map(|r| r.max).max().unwrap_or(0)
    }

    /// True when every size saw the same maximum step cost.
    pub fn is_flat(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].max == w[1].max)
    }
}

impl fmt::Display for StepCostReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "generator {}", self.generator)?;
        writeln!(
            f,
            "{:<20} {:>12} {:>8} {:>9}",
            "size", "objects", "max ops", "mean ops"
        )?;
        for row in &self.rows {
            write!(
                f,
                "{:<20} {:>12} {:>8} {:>9.3}",
                row.size, row.objects, row.max, row.mean
            )?;
            if let Some(s) = row.steal_max {
                write!(f, "  steal max {s}")?;
            }
            writeln!(f)?;
        }
        let secs = self.wall.as_secs_f64();
        let rate = if secs > 0.0 {
            self.objects as f64 * self.reps as f64 / secs / 1e6
        } else {
            f64::INFINITY
        };
        write!(
            f,
            "objects {} per rep (count verified), reps {}, wall {:.3} s, {:.1} M objects/s",
            self.objects, self.reps, secs, rate
        )
    }
}

/// Runs `job` once with instrumentation and returns its step-cost row.
pub fn step_cost(job: &Job) -> Result<SizeRow, CliError> {
    let expected = job.count()?;
    let mut stats = StepStats::default();
    let mut steal_max = None;

    let objects = match job {
        Job::Perm { n } => metered_source(JohnsonTrotter::new(*n).map_err(usage)?, &mut stats),
        Job::Multiperm(spec) => metered_source(MultisetPermutations::new(spec), &mut stats),
        Job::Comb { n, r } => {
            let mut s = CombinationServer::new(*n, *r).map_err(usage)?;
            let mut counter = OpCounter::new();
            let mut objects = 1;
            while s.step(&mut counter).is_some() {
                stats.record(counter.take());
                objects += 1;
            }
            objects
        }
        Job::Parking { n } => {
            let mut g = ParkingFunctions::new(*n).map_err(usage)?;
            let mut counter = OpCounter::new();
            let mut objects = 0;
            while g.advance_with(&mut counter).is_some() {
                stats.record(counter.take());
                objects += 1;
            }
            steal_max = Some(g.steal_stats().max_per_call);
            objects
        }
    };
    check_count(job, objects, expected)?;
    let size = job.to_string();
    let size = size
        .split_once(' ')
        .map_or(size.as_str(), |(_, s)| s)
        .to_string();
    Ok(SizeRow {
        size,
        objects,
        max: stats.max,
        mean: stats.mean(),
        steal_max,
    })
}

fn metered_source<S: DeltaSource>(mut s: S, stats: &mut StepStats) -> u64 {
    let mut counter = OpCounter::new();
    let mut objects = 1;
    while s.step(&mut counter).is_some() {
        stats.record(counter.take());
        objects += 1;
    }
    objects
}

/// Counts the job's objects with no instrumentation and no output.
pub fn run_unmetered(job: &Job) -> Result<u64, CliError> {
    fn source<S: DeltaSource>(mut s: S) -> u64 {
        let mut objects = 1;
        while s.step(&mut Unmetered).is_some() {
            objects += 1;
        }
        objects
    }
    Ok(match job {
        Job::Perm { n } => source(JohnsonTrotter::new(*n).map_err(usage)?),
        Job::Multiperm(spec) => source(MultisetPermutations::new(spec)),
        Job::Comb { n, r } => {
            let mut s = CombinationServer::new(*n, *r).map_err(usage)?;
            let mut objects = 1;
            while s.step(&mut Unmetered).is_some() {
                objects += 1;
            }
            objects
        }
        Job::Parking { n } => {
            let mut g = ParkingFunctions::new(*n).map_err(usage)?;
            let mut objects = 0;
            while g.advance().is_some() {
                objects += 1;
            }
            objects
        }
    })
}

/// One instrumented pass for the step-cost row, then `reps` timed passes,
/// each on its own thread with its own generator.
pub fn bench(job: &Job, reps: usize) -> Result<StepCostReport, CliError> {
    if reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let expected = job.count()?;
    let row = step_cost(job)?;

    let start = Instant::now();
    let counts: Vec<Result<u64, CliError>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..reps)
            .map(|_| scope.spawn(|| run_unmetered(job)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("benchmark thread panicked"))
            .collect()
    });
    let wall = start.elapsed();
    for objects in counts {
        check_count(job, objects?, expected)?;
    }

    Ok(StepCostReport {
        generator: job.kind_name().to_string(),
        rows: vec![row],
        objects: expected,
        reps,
        wall,
    })
}

/// Step-cost rows for a family of jobs of one kind.
pub fn bench_grid(jobs: &[Job]) -> Result<StepCostReport, CliError> {
    let first = jobs
        .first()
        .ok_or_else(|| CliError::Usage("empty benchmark grid".into()))?;
    let start = Instant::now();
    let rows = jobs.iter().map(step_cost).collect::<Result<Vec<_>, _>>()?;
    Ok(StepCostReport {
        generator: first.kind_name().to_string(),
        objects: rows.iter().map(|r| r.objects).sum(),
        rows,
        reps: 1,
        wall: start.elapsed(),
    })
}

fn check_count(job: &Job, objects: u64, expected: u64) -> Result<(), CliError> {
    if objects == expected {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "{job}: {objects} objects emitted, {expected} expected"
        )))
    }
}

fn usage(e: loopless::Error) -> CliError {
    CliError::Usage(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::job::Kind;

    fn job(kind: Kind, params: &[usize]) -> Job {
        Job::parse(kind, params).unwrap()
    }

    #[test]
    fn counts_are_verified() {
        let r = bench(&job(Kind::Perm, &[8]), 2).unwrap();
        assert_eq!(r.objects, 40320);
        assert_eq!(r.rows[0].objects, 40320);
        let r = bench(&job(Kind::Multiperm, &[2, 2, 1]), 1).unwrap();
        assert_eq!(r.objects, 30);
        let r = bench(&job(Kind::Parking, &[5]), 1).unwrap();
        assert_eq!(r.objects, 1296);
        assert!(r.rows[0].steal_max.unwrap() <= 2);
        let r = bench(&job(Kind::Comb, &[4, 6]), 1).unwrap();
        assert_eq!(r.objects, 15);
    }

    #[test]
    fn max_bounds_mean() {
        for j in [
            job(Kind::Perm, &[6]),
            job(Kind::Comb, &[3, 8]),
            job(Kind::Parking, &[4]),
        ] {
            let row = step_cost(&j).unwrap();
            assert!(row.max as f64 >= row.mean && row.mean >= 0.0, "{j}");
        }
    }

    #[test]
    fn small_spec_sits_under_the_family_constant() {
        let small = step_cost(&job(Kind::Multiperm, &[2, 2, 1])).unwrap();
        let family: Vec<Job> = (6..=10)
            .map(|r| job(Kind::Multiperm, &[r - 4, 2, 2]))
            .collect();
        let grid = bench_grid(&family).unwrap();
        assert!(grid.is_flat());
        assert!(small.max <= grid.max());
    }

    #[test]
    fn zero_reps_is_a_usage_error() {
        assert!(matches!(
            bench(&job(Kind::Perm, &[3]), 0),
            Err(CliError::Usage(_))
        ));
    }
}
