//! The per-step instrumented cost does not grow with the size of the object.

use loopless::parking::CatalanCursor;
use loopless::{
    DeltaSource, JohnsonTrotter, MultisetPermutations, MultisetSpec, OpCounter, StepStats,
};

fn step_stats<S: DeltaSource>(mut s: S) -> StepStats {
    let mut stats = StepStats::default();
    loop {
        let (e, cost) = s.next_delta_counted();
        if e.is_none() {
            break;
        }
        stats.record(cost);
    }
    stats
}

#[test]
fn johnson_trotter_max_is_flat() {
    let maxima: Vec<u64> = (4..=10)
        .map(|n| step_stats(JohnsonTrotter::new(n).unwrap()).max)
        .collect();
    assert!(maxima.iter().all(|&m| m == maxima[0]), "{maxima:?}");
}

#[test]
fn multiperm_max_is_flat_over_family() {
    let maxima: Vec<u64> = (6..=15)
        .map(|r| {
            let spec = MultisetSpec::new(&[r - 4, 2, 2]).unwrap();
            step_stats(MultisetPermutations::new(&spec)).max
        })
        .collect();
    assert!(maxima.iter().all(|&m| m == maxima[0]), "{maxima:?}");
}

#[test]
fn multiperm_max_is_bounded_everywhere() {
    // The same constant bounds unrelated shapes too.
    let reference = step_stats(MultisetPermutations::new(
        &MultisetSpec::new(&[2, 2, 2]).unwrap(),
    ))
    .max;
    for mults in [
        vec![1, 1, 1, 1, 1, 1, 1],
        vec![4, 1, 3],
        vec![1, 6, 1],
        vec![3, 3, 3],
    ] {
        let spec = MultisetSpec::new(&mults).unwrap();
        let max = step_stats(MultisetPermutations::new(&spec)).max;
        assert!(max <= reference, "{mults:?}: {max} > {reference}");
    }
}

#[test]
fn catalan_cursor_max_is_flat() {
    let maxima: Vec<u64> = (4..=12)
        .map(|n| {
            let mut c = CatalanCursor::new(n).unwrap();
            let mut max = 0;
            loop {
                let mut m = OpCounter::new();
                let more = c.advance(&mut m);
                max = max.max(m.total());
                if !more {
                    break;
                }
            }
            max
        })
        .collect();
    assert!(maxima.iter().all(|&m| m == maxima[0]), "{maxima:?}");
}

#[test]
fn parking_max_is_flat() {
    use loopless::parking::ParkingFunctions;

    let maxima: Vec<u64> = (4..=8)
        .map(|n| {
            let mut g = ParkingFunctions::new(n).unwrap();
            let mut max = 0;
            let mut counter = OpCounter::new();
            while g.advance_with(&mut counter).is_some() {
                max = max.max(counter.take());
            }
            max
        })
        .collect();
    assert!(maxima.iter().all(|&m| m == maxima[0]), "{maxima:?}");
}
