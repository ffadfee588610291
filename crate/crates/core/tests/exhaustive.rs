//! Exhaustive comparisons against the brute-force oracles.

use std::collections::BTreeSet;

use loopless::check;
use loopless::count;
use loopless::oracle;
use loopless::parking::{is_parking_function, ParkingFunctions, ParkingStep, StandardSequences};
use loopless::{
    CombinationServer, DeltaSource, JohnsonTrotter, MultisetPermutations, MultisetSpec,
};

/// Every composition of `total` (ordered, positive parts).
fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn compositions_helper() {
    assert_eq!(compositions(3).len(), 4);
    assert_eq!((1..=8).map(|r| compositions(r).len()).sum::<usize>(), 255);
}

#[test]
fn johnson_trotter_up_to_8() {
    for n in 1..=8 {
        let mut g = JohnsonTrotter::new(n).unwrap();
        let mut seen = vec![g.current().to_vec()];
        let mut prev = g.current().to_vec();
        while let Some(e) = g.next_delta() {
            check::adjacent(&e).unwrap();
            check::swap_transition(&prev, g.current(), &e).unwrap();
            prev = g.current().to_vec();
            seen.push(prev.clone());
        }
        let set: BTreeSet<_> = seen.iter().cloned().collect();
        assert_eq!(seen.len(), set.len(), "duplicates at n={n}");
        assert_eq!(set, oracle::brute_permutations(n).unwrap(), "n={n}");
    }
}

#[test]
fn combinations_up_to_r10() {
    for r in 1..=10 {
        for n in 1..=r {
            let mut s = CombinationServer::new(n, r).unwrap();
            let mut seen = BTreeSet::new();
            let mut sorted = s.current().to_vec();
            sorted.sort();
            seen.insert(sorted);
            assert_eq!(s.current(), (1..=n).collect::<Vec<_>>().as_slice());
            let mut prev = s.current().to_vec();
            let mut prev_bits = s.as_binary_vector();
            let mut steps = 0u64;
            while let Some(c) = s.next_change() {
                let bits = s.as_binary_vector();
                check::one_change(&prev, s.current(), &c).unwrap();
                check::ones_block(&prev_bits, &c).unwrap();
                check::zero_order(&prev_bits, &bits, &c).unwrap();
                let mut sorted = s.current().to_vec();
                sorted.sort();
                assert!(seen.insert(sorted), "repeat at ({n},{r})");
                prev = s.current().to_vec();
                prev_bits = bits;
                steps += 1;
            }
            assert_eq!(steps + 1, count::binomial(r, n).unwrap());
            assert_eq!(seen, oracle::brute_combinations(n, r).unwrap(), "({n},{r})");
            // Ones finish at the right end.
            let tail: Vec<u8> = (0..r).map(|j| u8::from(j >= r - n)).collect();
            assert_eq!(prev_bits, tail, "({n},{r})");
        }
    }
}

#[test]
fn combination_runs_alternate() {
    for r in 1..=8 {
        for n in 1..=r {
            let mut s = CombinationServer::new(n, r).unwrap();
            let run = |s: &mut CombinationServer| {
                let mut v = vec![s.current().to_vec()];
                while s.next_change().is_some() {
                    v.push(s.current().to_vec());
                }
                v
            };
            let forward = run(&mut s);
            s.reverse().unwrap();
            let backward = run(&mut s);
            s.reverse().unwrap();
            let again = run(&mut s);
            let mut rev = forward.clone();
            rev.reverse();
            assert_eq!(backward, rev, "({n},{r})");
            assert_eq!(again, forward, "({n},{r})");
        }
    }
}

#[test]
fn multiset_permutations_all_compositions_up_to_8() {
    for total in 1..=8 {
        for mults in compositions(total) {
            let spec = MultisetSpec::new(&mults).unwrap();
            let k = spec.classes();
            let mut g = MultisetPermutations::new(&spec);
            let mut seen = BTreeSet::new();
            seen.insert(g.current().to_vec());
            let mut prev = g.current().to_vec();
            while let Some(e) = g.next_delta() {
                check::swap_transition(&prev, g.current(), &e).unwrap();
                check::block_move(&prev, &e).unwrap();
                assert!(e.moved_value < k, "{mults:?}: class {k} moved");
                prev = g.current().to_vec();
                assert!(seen.insert(prev.clone()), "{mults:?}: repeat {prev:?}");
            }
            assert_eq!(seen.len() as u64, loopless::mp_count(&spec).unwrap());
            assert_eq!(
                seen,
                oracle::brute_multiset_perms(&spec).unwrap(),
                "{mults:?}"
            );
        }
    }
}

#[test]
fn distinct_classes_give_factorial_counts() {
    for k in 1..=8 {
        let spec = MultisetSpec::distinct(k).unwrap();
        let n = MultisetPermutations::new(&spec).objects().count() as u64;
        assert_eq!(n, count::factorial(k).unwrap());
    }
}

#[test]
fn standard_sequences_match_filter() {
    for n in 1..=9 {
        let mut list = Vec::new();
        for s in StandardSequences::new(n).unwrap() {
            list.push(s.into_vec());
        }
        let set: BTreeSet<_> = list.iter().cloned().collect();
        assert_eq!(list.len(), set.len());
        assert_eq!(set, oracle::brute_standard_sequences(n).unwrap(), "n={n}");
    }
}

#[test]
fn parking_functions_up_to_6() {
    for n in 1..=6 {
        let mut g = ParkingFunctions::new(n).unwrap();
        let mut seen = BTreeSet::new();
        let mut finished_blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut block_key: Option<Vec<usize>> = None;
        let mut prev: Vec<usize> = Vec::new();
        let mut count = 0u64;
        while let Some(step) = g.advance() {
            let p = g.current().to_vec();
            assert!(is_parking_function(&p).unwrap(), "{p:?}");
            assert!(seen.insert(p.clone()), "repeat {p:?}");
            let mut key = p.clone();
            key.sort();
            match step {
                ParkingStep::Block => {
                    if let Some(old) = block_key.take() {
                        assert!(finished_blocks.insert(old));
                    }
                    assert!(!finished_blocks.contains(&key), "block {key:?} split");
                    block_key = Some(key);
                }
                ParkingStep::Swap(e) => {
                    assert_eq!(block_key.as_ref(), Some(&key), "multiset changed in a swap");
                    check::swap_transition(&prev, &p, &e).unwrap();
                    check::block_move(&prev, &e).unwrap();
                }
            }
            prev = p;
            count += 1;
        }
        let expected = oracle::brute_parking_functions(n).unwrap();
        assert_eq!(count, expected.len() as u64);
        assert_eq!(seen, expected, "n={n}");
        let stats = g.steal_stats();
        assert!(stats.max_per_call <= g.budget());
        assert_eq!(stats.overrun, 0);
    }
}
