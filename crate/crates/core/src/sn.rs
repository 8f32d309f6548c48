//! Characters of `S_n` named by beta-sequences.
//!
//! [`SnEvaluator`] removes one cycle at a time, subtracting its length from
//! each entry of the symbol in turn and summing (the Murnaghan-Nakayama rule
//! in beta-set form). [`oracle_trace_sn`] is an unrelated route through the
//! Jacobi-Trudi determinant: an alternating sum of Young-subgroup
//! permutation characters.

use std::collections::HashMap;

use itertools::Itertools;

use crate::combinatorics::{normalize_beta, permutation_sign, reduce_beta, BetaSequence, NormalizedBeta, SnClass};
use crate::error::{Error, Result};

/// Memoizing evaluator. The cache is keyed on the shift-minimal canonical
/// symbol together with the remaining cycle multiset; one instance per worker.
#[derive(Debug, Default)]
pub struct SnEvaluator {
    memo: HashMap<(Vec<i64>, Vec<u32>), i64>,
}

impl SnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    /// Trace of `[beta]` at the class `cls`, removing the largest cycle first.
    /// A sequence that normalizes to zero is the zero character and gives 0
    /// at every class; otherwise the weights must match.
    pub fn trace(&mut self, beta: &BetaSequence, cls: &SnClass) -> Result<i64> {
        if beta.normalize().is_zero() {
            return Ok(0);
        }
        check_weight(beta.weight(), cls.weight())?;
        Ok(self.signed_eval(beta.entries(), cls.cycles()))
    }

    fn signed_eval(&mut self, entries: &[i64], cycles: &[u32]) -> i64 {
        match normalize_beta(entries) {
            NormalizedBeta::Zero => 0,
            NormalizedBeta::Signed { sign, canonical } => {
                sign * self.eval_canonical(reduce_beta(&canonical), cycles)
            }
        }
    }

    // `cycles` is sorted increasingly; the largest sits at the end.
    fn eval_canonical(&mut self, reduced: Vec<i64>, cycles: &[u32]) -> i64 {
        let Some((&k, rest)) = cycles.split_last() else {
            return i64::from(reduced.is_empty());
        };
        let key = (reduced, cycles.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let reduced = &key.0;
        let mut total = 0;
        let mut work = reduced.clone();
        for i in 0..reduced.len() {
            work[i] -= k as i64;
            total += self.signed_eval(&work, rest);
            work[i] += k as i64;
        }
        self.memo.insert(key, total);
        total
    }
}

fn check_weight(symbol: i64, class: i64) -> Result<()> {
    if symbol != class {
        return Err(Error::WeightMismatch { symbol, class });
    }
    Ok(())
}

/// Memoized trace with a throwaway cache.
pub fn mn_trace_sn(beta: &BetaSequence, cls: &SnClass) -> Result<i64> {
    SnEvaluator::new().trace(beta, cls)
}

/// Unmemoized evaluation removing cycles exactly in the order given.
pub fn mn_trace_sn_ordered(beta: &BetaSequence, removal_order: &[u32]) -> Result<i64> {
    let n: i64 = removal_order.iter().map(|&c| c as i64).sum();
    check_weight(beta.weight(), n)?;
    fn rec(entries: &mut Vec<i64>, order: &[u32]) -> i64 {
        let Some((&k, rest)) = order.split_first() else {
            return match normalize_beta(entries) {
                NormalizedBeta::Zero => 0,
                NormalizedBeta::Signed { sign, canonical } => {
                    if reduce_beta(&canonical).is_empty() {
                        sign
                    } else {
                        0
                    }
                }
            };
        };
        let mut total = 0;
        for i in 0..entries.len() {
            entries[i] -= k as i64;
            if entries[i] >= 0 {
                total += rec(entries, rest);
            }
            entries[i] += k as i64;
        }
        total
    }
    Ok(rec(&mut beta.entries().to_vec(), removal_order))
}

/// Value of the permutation character of `S_n` on the cosets of the Young
/// subgroup with the given block sizes: the number of ways to distribute
/// the cycles of `cls` into blocks so that every block is filled exactly.
pub fn young_perm_char(blocks: &[u64], cls: &SnClass) -> Result<u64> {
    let total: u64 = blocks.iter().sum();
    check_weight(total as i64, cls.weight())?;
    let mut cycles: Vec<u64> = cls.cycles().iter().map(|&c| c as u64).collect();
    cycles.sort_unstable_by(|a, b| b.cmp(a));
    let mut room = blocks.to_vec();
    fn rec(cycles: &[u64], room: &mut [u64]) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return 1;
        };
        let mut count = 0;
        for b in 0..room.len() {
            if room[b] >= c {
                room[b] -= c;
                count += rec(rest, room);
                room[b] += c;
            }
        }
        count
    }
    Ok(rec(&cycles, &mut room))
}

/// Independent oracle: `sum_sigma sgn(sigma) * 1_{Young(blocks)}` with block
/// sizes `l_{sigma(i)} - (i - 1)`; terms with a negative block vanish.
pub fn oracle_trace_sn(beta: &BetaSequence, cls: &SnClass) -> Result<i64> {
    check_weight(beta.weight(), cls.weight())?;
    let entries = beta.entries();
    let a = entries.len();
    let mut total = 0i64;
    for sigma in (0..a).permutations(a) {
        let blocks: Option<Vec<u64>> = sigma
            .iter()
            .enumerate()
            .map(|(i, &s)| u64::try_from(entries[s] - i as i64).ok())
            .collect();
        let Some(blocks) = blocks else { continue };
        let value = young_perm_char(&blocks, cls)? as i64;
        total += permutation_sign(&sigma) * value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partition_to_beta, shift_beta, Partition};
    use proptest::prelude::*;

    fn b(v: &[i64]) -> BetaSequence {
        BetaSequence::new(v.to_vec())
    }

    fn c(v: &[u32]) -> SnClass {
        SnClass::new(v.to_vec()).unwrap()
    }

    #[test]
    fn trace_examples() {
        assert_eq!(mn_trace_sn(&b(&[3]), &c(&[3])).unwrap(), 1);
        assert_eq!(mn_trace_sn(&b(&[1, 2, 3]), &c(&[1, 2])).unwrap(), -1);
        assert_eq!(mn_trace_sn(&b(&[1, 3]), &c(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_trace_sn(&b(&[1, 3]), &c(&[3])).unwrap(), -1);
        for n in 0..4 {
            for cls in SnClass::all(n) {
                assert_eq!(mn_trace_sn(&b(&[1, 1]), &cls).unwrap(), 0);
            }
        }
        assert_eq!(
            mn_trace_sn(&b(&[3]), &c(&[1, 1])),
            Err(Error::WeightMismatch { symbol: 3, class: 2 })
        );
    }

    #[test]
    fn oracle_examples() {
        for cls in SnClass::all(5) {
            assert_eq!(oracle_trace_sn(&b(&[5]), &cls).unwrap(), 1);
        }
        assert_eq!(oracle_trace_sn(&b(&[1, 3]), &c(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(oracle_trace_sn(&b(&[0, 1, 2]), &c(&[])).unwrap(), 1);
        assert_eq!(oracle_trace_sn(&b(&[]), &c(&[])).unwrap(), 1);
        assert!(oracle_trace_sn(&b(&[2]), &c(&[1])).is_err());
    }

    #[test]
    fn young_examples() {
        assert_eq!(young_perm_char(&[2, 2], &c(&[1, 1, 1, 1])).unwrap(), 6);
        assert_eq!(young_perm_char(&[2, 2], &c(&[2, 2])).unwrap(), 2);
        for cls in SnClass::all(5) {
            assert_eq!(young_perm_char(&[5], &cls).unwrap(), 1);
        }
        assert!(young_perm_char(&[2, 1], &c(&[1])).is_err());
    }

    #[test]
    fn oracle_equivalence_small() {
        let mut ev = SnEvaluator::new();
        for n in 0..=6 {
            for p in Partition::all(n) {
                let beta = partition_to_beta(&p, p.len()).unwrap();
                for cls in SnClass::all(n) {
                    assert_eq!(
                        ev.trace(&beta, &cls).unwrap(),
                        oracle_trace_sn(&beta, &cls).unwrap(),
                        "{beta} at {cls}"
                    );
                }
            }
        }
    }

    #[test]
    fn non_canonical_symbols_follow_sign_rule() {
        for cls in SnClass::all(3) {
            let v = mn_trace_sn(&b(&[1, 3]), &cls).unwrap();
            assert_eq!(mn_trace_sn(&b(&[3, 1]), &cls).unwrap(), -v);
            assert_eq!(oracle_trace_sn(&b(&[3, 1]), &cls).unwrap(), -v);
        }
        // weight 3 with a negative entry
        assert_eq!(mn_trace_sn(&b(&[4, -1, 3]), &c(&[3])).unwrap(), 0);
        assert_eq!(oracle_trace_sn(&b(&[4, -1, 3]), &c(&[3])).unwrap(), 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn removal_order_independent(n in 1u32..=6, pi in 0usize..100, ci in 0usize..100, seed in any::<u64>()) {
            let parts = Partition::all(n);
            let p = &parts[pi % parts.len()];
            let classes = SnClass::all(n);
            let cls = &classes[ci % classes.len()];
            let beta = partition_to_beta(p, p.len()).unwrap();
            let mut order = cls.cycles().to_vec();
            let mut s = seed;
            for i in (1..order.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (s >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(mn_trace_sn_ordered(&beta, &order).unwrap(), mn_trace_sn(&beta, cls).unwrap());
        }

        #[test]
        fn shift_invariant(n in 1u32..=6, pi in 0usize..100, ci in 0usize..100, d in 0usize..=3) {
            let parts = Partition::all(n);
            let p = &parts[pi % parts.len()];
            let classes = SnClass::all(n);
            let cls = &classes[ci % classes.len()];
            let beta = partition_to_beta(p, p.len()).unwrap();
            let shifted = BetaSequence::new(shift_beta(beta.entries(), d));
            prop_assert_eq!(mn_trace_sn(&shifted, cls).unwrap(), mn_trace_sn(&beta, cls).unwrap());
        }
    }
}
