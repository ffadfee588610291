use std::fmt;

use clap::ValueEnum;
use loopless::count::{binomial, factorial, multinomial};
use loopless::parking::StandardSequences;
use loopless::{Error, MultisetSpec};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Permutations of 1..n by adjacent transpositions: `perm <n>`
    Perm,
    /// n-combinations of 1..r, in place: `comb <n> <r>`
    Comb,
    /// Permutations of a multiset: `multiperm <n1> <n2> ...`
    Multiperm,
    /// Parking functions of length n: `parking <n>`
    Parking,
}

/// A generator kind together with validated parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Job {
    Perm { n: usize },
    Comb { n: usize, r: usize },
    Multiperm(MultisetSpec),
    Parking { n: usize },
}

impl Job {
    pub fn parse(kind: Kind, params: &[usize]) -> Result<Job, CliError> {
        let exact = |want: usize, shape: &str| {
            if params.len() == want {
                Ok(())
            } else {
                Err(CliError::Usage(format!(
                    "expected {shape}, got {} parameter(s)",
                    params.len()
                )))
            }
        };
        let job = match kind {
            Kind::Perm => {
                exact(1, "perm <n>")?;
                Job::Perm { n: params[0] }
            }
            Kind::Comb => {
                exact(2, "comb <n> <r>")?;
                Job::Comb {
                    n: params[0],
                    r: params[1],
                }
            }
            Kind::Multiperm => Job::Multiperm(MultisetSpec::new(params).map_err(invalid)?),
            Kind::Parking => {
                exact(1, "parking <n>")?;
                Job::Parking { n: params[0] }
            }
        };
        job.validate()?;
        Ok(job)
    }

    fn validate(&self) -> Result<(), CliError> {
        let max = loopless::multiset::DEFAULT_MAX_TOTAL;
        let size = match *self {
            Job::Perm { n } | Job::Parking { n } => n,
            Job::Comb { n, r } => {
                if n == 0 || n > r {
                    return Err(invalid(Error::BadCombination { n, r }));
                }
                r
            }
            Job::Multiperm(_) => return Ok(()),
        };
        if size == 0 {
            return Err(invalid(Error::ZeroSize));
        }
        if size > max {
            return Err(invalid(Error::TooLarge { total: size, max }));
        }
        Ok(())
    }

    pub fn kind(&self) -> Kind {
        match self {
            Job::Perm { .. } => Kind::Perm,
            Job::Comb { .. } => Kind::Comb,
            Job::Multiperm(_) => Kind::Multiperm,
            Job::Parking { .. } => Kind::Parking,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Job::Perm { .. } => "perm",
            Job::Comb { .. } => "comb",
            Job::Multiperm(_) => "multiperm",
            Job::Parking { .. } => "parking",
        }
    }

    /// Number of objects the generator emits, or a refusal when it does not
    /// fit in 64 bits.
    ///
    /// Parking functions are counted by summing the multinomial of every
    /// standard sequence, so no closed form is assumed.
    pub fn count(&self) -> Result<u64, CliError> {
        let counted = match self {
            Job::Perm { n } => factorial(*n),
            Job::Comb { n, r } => binomial(*r, *n),
            Job::Multiperm(spec) => multinomial(spec.multiplicities()),
            Job::Parking { n } => parking_count(*n),
        };
        counted.map_err(|e| CliError::Refused(format!("{self}: {e}")))
    }
}

fn parking_count(n: usize) -> loopless::Result<u64> {
    let mut total = 0u64;
    let mut runs = Vec::with_capacity(n);
    for q in StandardSequences::new(n)? {
        runs.clear();
        let q = q.as_slice();
        let mut i = 0;
        while i < q.len() {
            let j = q[i..].iter().take_while(|&&v| v == q[i]).count();
            runs.push(j);
            i += j;
        }
        total = total
            .checked_add(multinomial(&runs)?)
            .ok_or(Error::CountOverflow)?;
    }
    Ok(total)
}

fn invalid(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Job::Perm { n } => write!(f, "perm {n}"),
            Job::Comb { n, r } => write!(f, "comb {n} {r}"),
            Job::Multiperm(spec) => {
                f.write_str("multiperm")?;
                for m in spec.multiplicities() {
                    write!(f, " {m}")?;
                }
                Ok(())
            }
            Job::Parking { n } => write!(f, "parking {n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        assert_eq!(Job::parse(Kind::Perm, &[4]).unwrap(), Job::Perm { n: 4 });
        assert_eq!(
            Job::parse(Kind::Comb, &[4, 6]).unwrap(),
            Job::Comb { n: 4, r: 6 }
        );
        assert_eq!(
            Job::parse(Kind::Multiperm, &[2, 2, 1]).unwrap().to_string(),
            "multiperm 2 2 1"
        );
        assert_eq!(
            Job::parse(Kind::Parking, &[3]).unwrap(),
            Job::Parking { n: 3 }
        );
    }

    #[test]
    fn rejects_bad_parameters() {
        for (kind, params) in [
            (Kind::Perm, vec![]),
            (Kind::Perm, vec![0]),
            (Kind::Perm, vec![3, 4]),
            (Kind::Comb, vec![5, 4]),
            (Kind::Comb, vec![0, 4]),
            (Kind::Multiperm, vec![]),
            (Kind::Multiperm, vec![2, 0]),
            (Kind::Parking, vec![0]),
            (Kind::Parking, vec![65]),
        ] {
            let err = Job::parse(kind, &params).unwrap_err();
            assert!(matches!(err, CliError::Usage(_)), "{kind:?} {params:?}");
        }
    }

    #[test]
    fn counts() {
        let count = |kind, params: &[usize]| Job::parse(kind, params).unwrap().count().unwrap();
        assert_eq!(count(Kind::Perm, &[8]), 40320);
        assert_eq!(count(Kind::Comb, &[4, 6]), 15);
        assert_eq!(count(Kind::Multiperm, &[5]), 1);
        assert_eq!(count(Kind::Multiperm, &[3, 3, 3, 3, 3]), 168_168_000);
        assert_eq!(count(Kind::Parking, &[3]), 16);
        assert_eq!(count(Kind::Parking, &[4]), 125);
    }

    #[test]
    fn refuses_overflowing_counts() {
        let job = Job::parse(Kind::Perm, &[21]).unwrap();
        assert!(matches!(job.count(), Err(CliError::Refused(_))));
        let job = Job::parse(Kind::Multiperm, &[1; 30]).unwrap();
        assert!(matches!(job.count(), Err(CliError::Refused(_))));
    }
}
