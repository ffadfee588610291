//! Exact cardinalities in 64-bit arithmetic, refusing on overflow.

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, x| {
        acc.checked_mul(x).ok_or(Error::CountOverflow)
    })
}

/// `C(r, n)`: number of `n`-subsets of an `r`-set.
pub fn binomial(r: usize, n: usize) -> Result<u64> {
    if n > r {
        return Ok(0);
    }
    let n = n.min(r - n) as u128;
    let r = r as u128;
    let mut acc: u128 = 1;
    for j in 1..=n {
        // acc * (r - n + j) is divisible by j at every stage.
        acc = acc.checked_mul(r - n + j).ok_or(Error::CountOverflow)? / j;
        if acc > u64::MAX as u128 {
            return Err(Error::CountOverflow);
        }
    }
    Ok(acc as u64)
}

/// `R! / (n[1]! ⋯ n[k]!)`, computed as a product of binomials so that no
/// intermediate exceeds the final result by more than one factor.
pub fn multinomial(multiplicities: &[usize]) -> Result<u64> {
    let mut total = 0usize;
    let mut acc = 1u64;
    for &m in multiplicities {
        total += m;
        acc = acc
            .checked_mul(binomial(total, m)?)
            .ok_or(Error::CountOverflow)?;
    }
    Ok(acc)
}

/// `n`-th Catalan number.
pub fn catalan(n: usize) -> Result<u64> {
    Ok(binomial(2 * n, n)? / (n as u64 + 1))
}
