//! Characters of the hyperoctahedral group `W_n` named by bi-symbols.
//!
//! The bi-symbol `(l; u)` with row weights `r`, `r~` is the character induced
//! from `W_r x W_r~` of `[l]` pulled back along `W_r -> S_r`, tensored with
//! `[u]` pulled back along `W_r~ -> S_r~` and twisted by `chi`.
//!
//! Removing a cycle of length `k` subtracts `k` from one entry of either row.
//! Terms from the bottom row carry `chi` of the removed cycle, so they are
//! added for a positive cycle and subtracted for a negative one.

use std::collections::HashMap;

use crate::combinatorics::{
    normalize_bisymbol, reduce_beta, BetaSequence, BiSymbol, NormalizedBiSymbol, SignedCycleType,
    SnClass,
};
use crate::error::{Error, Result};
use crate::signed_perm::{enumerate_wn, SignedPerm};
use crate::sn::oracle_trace_sn;

/// Largest `n` for which the definitional oracle enumerates `W_n`.
pub const WN_ORACLE_MAX: u32 = 4;

type Key = (Vec<i64>, Vec<i64>, Vec<u32>, Vec<u32>);

#[derive(Debug, Default)]
pub struct WnEvaluator {
    memo: HashMap<Key, i64>,
}

impl WnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cache_len(&self) -> usize {
        self.memo.len()
    }

    /// Zero bi-symbols give 0 at every class; otherwise the weights must match.
    pub fn trace(&mut self, sym: &BiSymbol, cls: &SignedCycleType) -> Result<i64> {
        if matches!(sym.normalize(), NormalizedBiSymbol::Zero) {
            return Ok(0);
        }
        check_weight(sym.weight(), cls.weight())?;
        Ok(self.signed_eval(
            sym.top.entries(),
            sym.bottom.entries(),
            cls.positive(),
            cls.negative(),
        ))
    }

    fn signed_eval(&mut self, top: &[i64], bottom: &[i64], pos: &[u32], neg: &[u32]) -> i64 {
        match normalize_bisymbol(top, bottom) {
            NormalizedBiSymbol::Zero => 0,
            NormalizedBiSymbol::Signed { sign, top, bottom } => {
                sign * self.eval_canonical(reduce_beta(&top), reduce_beta(&bottom), pos, neg)
            }
        }
    }

    fn eval_canonical(&mut self, top: Vec<i64>, bottom: Vec<i64>, pos: &[u32], neg: &[u32]) -> i64 {
        // largest cycle first, negative before positive on ties
        let take_negative = match (pos.last(), neg.last()) {
            (None, None) => return i64::from(top.is_empty() && bottom.is_empty()),
            (Some(_), None) => false,
            (None, Some(_)) => true,
            (Some(p), Some(q)) => q >= p,
        };
        let key = (top, bottom, pos.to_vec(), neg.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (top, bottom) = (&key.0, &key.1);
        let (k, rest_pos, rest_neg, bottom_sign) = if take_negative {
            let (&k, rest) = neg.split_last().expect("checked");
            (k as i64, pos, rest, -1)
        } else {
            let (&k, rest) = pos.split_last().expect("checked");
            (k as i64, rest, neg, 1)
        };
        let mut total = 0;
        let mut t = top.clone();
        for i in 0..t.len() {
            t[i] -= k;
            total += self.signed_eval(&t, bottom, rest_pos, rest_neg);
            t[i] += k;
        }
        let mut b = bottom.clone();
        for i in 0..b.len() {
            b[i] -= k;
            total += bottom_sign * self.signed_eval(top, &b, rest_pos, rest_neg);
            b[i] += k;
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

pub fn mn_trace_wn(sym: &BiSymbol, cls: &SignedCycleType) -> Result<i64> {
    WnEvaluator::new().trace(sym, cls)
}

/// A cycle to remove: its length and whether it is negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedCycle {
    pub len: u32,
    pub negative: bool,
}

/// Unmemoized evaluation removing cycles exactly in the order given.
pub fn mn_trace_wn_ordered(sym: &BiSymbol, order: &[SignedCycle]) -> Result<i64> {
    let n: i64 = order.iter().map(|c| c.len as i64).sum();
    check_weight(sym.weight(), n)?;
    fn rec(top: &mut Vec<i64>, bottom: &mut Vec<i64>, order: &[SignedCycle]) -> i64 {
        let Some((c, rest)) = order.split_first() else {
            return match normalize_bisymbol(top, bottom) {
                NormalizedBiSymbol::Zero => 0,
                NormalizedBiSymbol::Signed { sign, top, bottom } => {
                    if reduce_beta(&top).is_empty() && reduce_beta(&bottom).is_empty() {
                        sign
                    } else {
                        0
                    }
                }
            };
        };
        let k = c.len as i64;
        let mut total = 0;
        for i in 0..top.len() {
            top[i] -= k;
            if top[i] >= 0 {
                total += rec(top, bottom, rest);
            }
            top[i] += k;
        }
        let bottom_sign = if c.negative { -1 } else { 1 };
        for i in 0..bottom.len() {
            bottom[i] -= k;
            if bottom[i] >= 0 {
                total += bottom_sign * rec(top, bottom, rest);
            }
            bottom[i] += k;
        }
        total
    }
    Ok(rec(
        &mut sym.top.entries().to_vec(),
        &mut sym.bottom.entries().to_vec(),
        order,
    ))
}

/// `(-1)^{number of negative cycles}`.
pub fn chi_value(cls: &SignedCycleType) -> i64 {
    if cls.negative_count().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Induced-character oracle computed from the definition by enumerating
/// `W_n`. The subgroup `W_r x W_r~` acts on the first `r` letters and on the
/// last `r~` letters.
pub fn oracle_trace_wn(sym: &BiSymbol, cls: &SignedCycleType) -> Result<i64> {
    check_weight(sym.weight(), cls.weight())?;
    let n = cls.weight() as u32;
    if n > WN_ORACLE_MAX {
        return Err(Error::BoundExceeded {
            what: "W_n oracle",
            n: n as u64,
            max: WN_ORACLE_MAX as u64,
        });
    }
    let NormalizedBiSymbol::Signed { sign, top, bottom } = sym.normalize() else {
        return Ok(0);
    };
    let top = BetaSequence::new(top);
    let bottom = BetaSequence::new(bottom);
    let (r, n) = (top.weight() as usize, n as usize);

    let g = SignedPerm::representative(cls);
    let mut top_values: HashMap<SnClass, i64> = HashMap::new();
    let mut bottom_values: HashMap<SnClass, i64> = HashMap::new();
    let mut sum = 0i64;
    for x in enumerate_wn(n) {
        let h = x.inverse().compose(&g).compose(&x);
        if !h.preserves_prefix(r) {
            continue;
        }
        let (h1, h2) = (h.restrict(0, r), h.restrict(r, n));
        let c1 = h1.projected_class();
        let v1 = match top_values.get(&c1) {
            Some(&v) => v,
            None => *top_values
                .entry(c1.clone())
                .or_insert(oracle_trace_sn(&top, &c1)?),
        };
        let c2 = h2.projected_class();
        let v2 = match bottom_values.get(&c2) {
            Some(&v) => v,
            None => *bottom_values
                .entry(c2.clone())
                .or_insert(oracle_trace_sn(&bottom, &c2)?),
        };
        let twist = if h2.primed_count() % 2 == 0 { 1 } else { -1 };
        sum += v1 * v2 * twist;
    }
    let subgroup_order = (1i64 << n) * factorial(r) * factorial(n - r);
    debug_assert_eq!(sum % subgroup_order, 0);
    Ok(sign * sum / subgroup_order)
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// Value of the `W_n` character on an element of `D_n`.
///
/// Only bi-symbols whose rows name different partitions are accepted; those
/// restrict irreducibly to `D_n`, so the value is the `W_n` value.
pub fn trace_dn(sym: &BiSymbol, cls: &SignedCycleType) -> Result<i64> {
    if !cls.in_dn() {
        return Err(Error::NotInDn(cls.to_string()));
    }
    if let NormalizedBiSymbol::Signed { top, bottom, .. } = sym.normalize() {
        if reduce_beta(&top) == reduce_beta(&bottom) {
            return Err(Error::RowsEqual);
        }
    }
    mn_trace_wn(sym, cls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bipartitions;
    use proptest::prelude::*;

    fn sym(t: &[i64], b: &[i64]) -> BiSymbol {
        BiSymbol::new(t.to_vec(), b.to_vec())
    }

    fn cls(p: &[u32], n: &[u32]) -> SignedCycleType {
        SignedCycleType::new(p.to_vec(), n.to_vec()).unwrap()
    }

    #[test]
    fn trace_examples() {
        for c in SignedCycleType::all(3) {
            assert_eq!(mn_trace_wn(&sym(&[3], &[]), &c).unwrap(), 1);
            assert_eq!(mn_trace_wn(&sym(&[0], &[3]), &c).unwrap(), chi_value(&c));
        }
        assert_eq!(mn_trace_wn(&sym(&[0, 1], &[2]), &cls(&[], &[2])).unwrap(), -1);
        assert_eq!(mn_trace_wn(&sym(&[1], &[0]), &cls(&[], &[1])).unwrap(), 1);
        assert_eq!(mn_trace_wn(&sym(&[0], &[1]), &cls(&[], &[1])).unwrap(), -1);
        assert_eq!(mn_trace_wn(&sym(&[1, 1], &[0]), &cls(&[], &[2])).unwrap(), 0);
        assert!(matches!(
            mn_trace_wn(&sym(&[2], &[]), &cls(&[1], &[])),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn oracle_examples() {
        for c in SignedCycleType::all(1) {
            assert_eq!(oracle_trace_wn(&sym(&[1], &[0]), &c).unwrap(), 1);
        }
        assert_eq!(oracle_trace_wn(&sym(&[0], &[1]), &cls(&[], &[1])).unwrap(), -1);
        assert_eq!(oracle_trace_wn(&sym(&[1, 2], &[2]), &cls(&[1, 1, 1, 1], &[])).unwrap(), 6);
        assert!(matches!(
            oracle_trace_wn(&sym(&[5], &[]), &cls(&[5], &[])),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn chi_examples() {
        assert_eq!(chi_value(&cls(&[4], &[])), 1);
        assert_eq!(chi_value(&cls(&[], &[1, 3])), 1);
        assert_eq!(chi_value(&cls(&[1], &[1])), -1);
    }

    #[test]
    fn chi_is_multiplicative() {
        for a in SignedCycleType::all(2) {
            for b in SignedCycleType::all(3) {
                assert_eq!(chi_value(&a.union(&b)), chi_value(&a) * chi_value(&b));
            }
        }
    }

    #[test]
    fn trace_dn_guards() {
        let w2 = cls(&[], &[1, 3]);
        assert_eq!(
            trace_dn(&sym(&[0, 1], &[2, 3]), &cls(&[1, 1, 1, 1], &[])).unwrap(),
            mn_trace_wn(&sym(&[0, 1], &[2, 3]), &cls(&[1, 1, 1, 1], &[])).unwrap()
        );
        assert_eq!(
            trace_dn(&sym(&[0, 3], &[1, 2]), &w2).unwrap(),
            mn_trace_wn(&sym(&[0, 3], &[1, 2]), &w2).unwrap()
        );
        assert_eq!(trace_dn(&sym(&[1, 2], &[1, 2]), &w2), Err(Error::RowsEqual));
        // same partition under a shift
        assert_eq!(trace_dn(&sym(&[0, 2, 3], &[1, 2]), &w2), Err(Error::RowsEqual));
        assert!(matches!(
            trace_dn(&sym(&[1], &[0]), &cls(&[], &[1])),
            Err(Error::NotInDn(_))
        ));
    }

    #[test]
    fn oracle_agrees_through_w3() {
        let mut ev = WnEvaluator::new();
        for n in 0..=3 {
            for (a, b) in bipartitions(n) {
                let s = BiSymbol::from_bipartition(&a, &b);
                for c in SignedCycleType::all(n) {
                    assert_eq!(ev.trace(&s, &c).unwrap(), oracle_trace_wn(&s, &c).unwrap(), "{s} at {c}");
                }
            }
        }
    }

    /// When the remainder has no cycle of length `k` (as an element of `W`,
    /// i.e. the `2k`-cycle condition in `S_2n`), one step of the recursion
    /// is the displayed negative-cycle expansion term by term.
    #[test]
    fn single_step_matches_negative_cycle_expansion() {
        for n in 1..=5u32 {
            for (a, b) in bipartitions(n) {
                let s = BiSymbol::from_bipartition(&a, &b);
                for c in SignedCycleType::all(n) {
                    for &k in c.negative() {
                        let mut neg = c.negative().to_vec();
                        let idx = neg.iter().position(|&x| x == k).unwrap();
                        neg.remove(idx);
                        let rest = SignedCycleType::new(c.positive().to_vec(), neg).unwrap();
                        // negative k-cycles and positive k-cycles of the remainder
                        // both give 2k-cycles in S_2n; positive k-cycles give two k-cycles
                        if rest.negative().contains(&k) || rest.positive().contains(&(2 * k)) {
                            continue;
                        }
                        let ki = k as i64;
                        let mut rhs = 0;
                        for i in 0..s.top.len() {
                            let mut t = s.top.entries().to_vec();
                            t[i] -= ki;
                            rhs += mn_trace_wn(&BiSymbol::new(t, s.bottom.entries().to_vec()), &rest).unwrap();
                        }
                        for i in 0..s.bottom.len() {
                            let mut u = s.bottom.entries().to_vec();
                            u[i] -= ki;
                            rhs -= mn_trace_wn(&BiSymbol::new(s.top.entries().to_vec(), u), &rest).unwrap();
                        }
                        assert_eq!(mn_trace_wn(&s, &c).unwrap(), rhs, "{s} at {c}, k={k}");
                    }
                }
            }
        }
    }

    fn pick<T: Clone>(v: &[T], i: usize) -> T {
        v[i % v.len()].clone()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn shift_invariant(n in 0u32..=5, bi in 0usize..1000, ci in 0usize..1000, d in 0usize..=3) {
            let (a, b) = pick(&bipartitions(n), bi);
            let s = BiSymbol::from_bipartition(&a, &b);
            let c = pick(&SignedCycleType::all(n), ci);
            prop_assert_eq!(mn_trace_wn(&s.shift(d), &c).unwrap(), mn_trace_wn(&s, &c).unwrap());
        }

        #[test]
        fn removal_order_independent(n in 1u32..=5, bi in 0usize..1000, ci in 0usize..1000, seed in any::<u64>()) {
            let (a, b) = pick(&bipartitions(n), bi);
            let s = BiSymbol::from_bipartition(&a, &b);
            let c = pick(&SignedCycleType::all(n), ci);
            let mut order: Vec<SignedCycle> = c.positive().iter().map(|&len| SignedCycle { len, negative: false })
                .chain(c.negative().iter().map(|&len| SignedCycle { len, negative: true }))
                .collect();
            let mut st = seed;
            for i in (1..order.len()).rev() {
                st = st.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                order.swap(i, (st >> 33) as usize % (i + 1));
            }
            prop_assert_eq!(mn_trace_wn_ordered(&s, &order).unwrap(), mn_trace_wn(&s, &c).unwrap());
        }
    }

    #[test]
    fn identity_value_positive() {
        for n in 0..=6 {
            for (a, b) in bipartitions(n) {
                let s = BiSymbol::from_bipartition(&a, &b);
                let id = SignedCycleType::new(vec![1; n as usize], vec![]).unwrap();
                assert!(mn_trace_wn(&s, &id).unwrap() >= 1);
            }
        }
    }
}
