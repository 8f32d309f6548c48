//! Exhaustive checks of the closed-form traces at the elements `w_m` and
//! `w'_m`, the parity statements, the cuspidal multiplicity sums in types B/C
//! and D, and the evenness statements in `W_4`.
//!
//! Splits are enumerated in lexicographic order of the bottom row, so every
//! report is reproducible.

use itertools::Itertools;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::combinatorics::{BiSymbol, SignedCycleType, SnClass};
use crate::error::{Error, Result};
use crate::report::{ClaimId, Counterexample, VerificationReport};
use crate::signed_perm::{enumerate_wn, SignedPerm};
use crate::wn::{trace_dn, WnEvaluator};

/// Largest `m` accepted by the trace and parity checks.
pub const SPLIT_M_MAX: u32 = 6;
/// Largest `m` for the type B/C multiplicity.
pub const BC_M_MAX: u32 = 5;
/// Largest `m` for the type D multiplicity.
pub const D_M_MAX: u32 = 4;

fn sign_of_parity(e: u64) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn bound(what: &'static str, m: u32, max: u32) -> Result<()> {
    if m > max {
        return Err(Error::BoundExceeded {
            what,
            n: m as u64,
            max: max as u64,
        });
    }
    Ok(())
}

/// Negative cycles `2, 4, .., 2m` in `W_{m^2+m}`.
pub fn w_m(m: u32) -> SignedCycleType {
    SignedCycleType::new(vec![], (1..=m).map(|i| 2 * i).collect()).expect("positive lengths")
}

/// Negative cycles `1, 3, .., 2m-1` in `W_{m^2}`.
pub fn w_prime_m(m: u32) -> Result<SignedCycleType> {
    if m == 0 {
        return Err(Error::InvalidParameter("w'_m needs m >= 1".into()));
    }
    Ok(SignedCycleType::new(vec![], (1..=m).map(|i| 2 * i - 1).collect()).expect("positive lengths"))
}

fn has_pair_sum(row: &[i64], target: i64) -> bool {
    row.iter().tuple_combinations().any(|(a, b)| a + b == target)
}

fn complement(universe: i64, subset: &[i64]) -> Vec<i64> {
    (0..universe).filter(|x| !subset.contains(x)).collect()
}

/// `{0, .., 2m}` split into a top row of `m + 1` and a bottom row of `m`
/// elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitBC {
    pub m: u32,
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

impl SplitBC {
    pub fn from_bottom(m: u32, bottom: Vec<i64>) -> Result<Self> {
        let size = 2 * m as i64 + 1;
        if bottom.len() != m as usize
            || !bottom.windows(2).all(|w| w[0] < w[1])
            || bottom.iter().any(|&b| b < 0 || b >= size)
        {
            return Err(Error::InvalidParameter(format!(
                "{bottom:?} is not an increasing {m}-subset of 0..={}",
                2 * m
            )));
        }
        Ok(SplitBC {
            m,
            top: complement(size, &bottom),
            bottom,
        })
    }

    pub fn symbol(&self) -> BiSymbol {
        BiSymbol::new(self.top.clone(), self.bottom.clone())
    }

    pub fn even_bottom_count(&self) -> u64 {
        self.bottom.iter().filter(|&&b| b % 2 == 0).count() as u64
    }

    fn describe(&self) -> String {
        format!("top={:?} bottom={:?}", self.top, self.bottom)
    }
}

/// All splits for `m`, lexicographic in the bottom row.
pub fn splits_bc(m: u32) -> Vec<SplitBC> {
    (0..=2 * m as i64)
        .combinations(m as usize)
        .map(|j| SplitBC::from_bottom(m, j).expect("valid subset"))
        .collect()
}

/// No two entries of one row add up to `2m`.
pub fn star_bc(s: &SplitBC) -> bool {
    let t = 2 * s.m as i64;
    !has_pair_sum(&s.top, t) && !has_pair_sum(&s.bottom, t)
}

/// `{0, .., 2m-1}` split into two rows of `m` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitD {
    pub m: u32,
    pub top: Vec<i64>,
    pub bottom: Vec<i64>,
}

impl SplitD {
    pub fn from_bottom(m: u32, bottom: Vec<i64>) -> Result<Self> {
        let size = 2 * m as i64;
        if bottom.len() != m as usize
            || !bottom.windows(2).all(|w| w[0] < w[1])
            || bottom.iter().any(|&b| b < 0 || b >= size)
        {
            return Err(Error::InvalidParameter(format!(
                "{bottom:?} is not an increasing {m}-subset of 0..{size}"
            )));
        }
        Ok(SplitD {
            m,
            top: complement(size, &bottom),
            bottom,
        })
    }

    pub fn symbol(&self) -> BiSymbol {
        BiSymbol::new(self.top.clone(), self.bottom.clone())
    }

    /// `N`: bottom entries that are at least `m`.
    pub fn big_bottom_count(&self) -> u64 {
        self.bottom.iter().filter(|&&b| b >= self.m as i64).count() as u64
    }

    pub fn even_bottom_count(&self) -> u64 {
        self.bottom.iter().filter(|&&b| b % 2 == 0).count() as u64
    }

    fn describe(&self) -> String {
        format!("top={:?} bottom={:?}", self.top, self.bottom)
    }
}

pub fn splits_d(m: u32) -> Vec<SplitD> {
    (0..2 * m as i64)
        .combinations(m as usize)
        .map(|j| SplitD::from_bottom(m, j).expect("valid subset"))
        .collect()
}

/// No two entries of one row add up to `2m - 1`.
pub fn star_d(s: &SplitD) -> bool {
    let t = 2 * s.m as i64 - 1;
    !has_pair_sum(&s.top, t) && !has_pair_sum(&s.bottom, t)
}

/// Traces of every split symbol at `cls`, in split order.
fn traces<S: Sync>(splits: &[S], cls: &SignedCycleType, symbol: impl Fn(&S) -> BiSymbol + Sync) -> Result<Vec<i64>> {
    splits
        .par_iter()
        .map_init(WnEvaluator::new, |ev, s| ev.trace(&symbol(s), cls))
        .collect()
}

/// Trace at `w_m` is `(-1)^{(m^2+m)/2}` on (*)-splits and zero otherwise.
pub fn check_traces_w_m(m: u32) -> Result<VerificationReport> {
    bound("trace check m", m, SPLIT_M_MAX)?;
    let splits = splits_bc(m);
    let cls = w_m(m);
    let got = traces(&splits, &cls, SplitBC::symbol)?;
    let sign = sign_of_parity(((m * m + m) / 2) as u64);
    let mut cx = Vec::new();
    for (s, &v) in splits.iter().zip(&got) {
        let expected = if star_bc(s) { sign } else { 0 };
        if v != expected {
            cx.push(Counterexample {
                input: s.describe(),
                expected: expected.to_string(),
                got: v.to_string(),
            });
        }
    }
    Ok(VerificationReport::new(ClaimId::TracesWm, format!("m={m}"), splits.len() as u64, cx))
}

/// On (*)-splits the number of even bottom entries has the parity of
/// `(m^2+m)/2`.
pub fn check_parity_w_m(m: u32) -> Result<VerificationReport> {
    bound("parity check m", m, SPLIT_M_MAX)?;
    let target = ((m * m + m) / 2 % 2) as u64;
    let mut cases = 0;
    let mut cx = Vec::new();
    for s in splits_bc(m).iter().filter(|s| star_bc(s)) {
        cases += 1;
        let got = s.even_bottom_count() % 2;
        if got != target {
            cx.push(Counterexample {
                input: s.describe(),
                expected: format!("parity {target}"),
                got: format!("parity {got}"),
            });
        }
    }
    Ok(VerificationReport::new(ClaimId::ParityWm, format!("m={m}"), cases, cx))
}

/// Trace at `w'_m` is `(-1)^{N + m(m-1)/2}` on (**)-splits, zero otherwise.
pub fn check_traces_w_prime_m(m: u32) -> Result<VerificationReport> {
    bound("trace check m", m, SPLIT_M_MAX)?;
    let splits = splits_d(m);
    let cls = w_prime_m(m)?;
    let got = traces(&splits, &cls, SplitD::symbol)?;
    let mut cx = Vec::new();
    for (s, &v) in splits.iter().zip(&got) {
        let expected = if star_d(s) {
            sign_of_parity(s.big_bottom_count() + (m * (m - 1) / 2) as u64)
        } else {
            0
        };
        if v != expected {
            cx.push(Counterexample {
                input: s.describe(),
                expected: expected.to_string(),
                got: v.to_string(),
            });
        }
    }
    Ok(VerificationReport::new(ClaimId::TracesWpm, format!("m={m}"), splits.len() as u64, cx))
}

/// For `m = 2m'` and every (**)-split: `N - #even(bottom) = m' (mod 2)` and
/// `#even(bottom) = N + m(m-1)/2 (mod 2)`.
pub fn check_parity_w_prime_m(m_prime: u32) -> Result<VerificationReport> {
    if m_prime == 0 {
        return Err(Error::InvalidParameter("the parity check needs m' >= 1".into()));
    }
    bound("parity check m", 2 * m_prime, SPLIT_M_MAX)?;
    let m = 2 * m_prime;
    let mut cases = 0;
    let mut cx = Vec::new();
    for s in splits_d(m).iter().filter(|s| star_d(s)) {
        cases += 1;
        let n = s.big_bottom_count() as i64;
        let e = s.even_bottom_count() as i64;
        let a = (n - e).rem_euclid(2);
        if a != m_prime as i64 % 2 {
            cx.push(Counterexample {
                input: format!("(a) {}", s.describe()),
                expected: format!("parity {}", m_prime % 2),
                got: format!("parity {a}"),
            });
        }
        let b_lhs = e % 2;
        let b_rhs = (n + (m * (m - 1) / 2) as i64) % 2;
        if b_lhs != b_rhs {
            cx.push(Counterexample {
                input: format!("(b) {}", s.describe()),
                expected: format!("parity {b_rhs}"),
                got: format!("parity {b_lhs}"),
            });
        }
    }
    Ok(VerificationReport::new(ClaimId::ParityWpm, format!("m'={m_prime}"), cases, cx))
}

/// `sum_J (-1)^{f(J)} tr(w_m, E_J)` over `m`-subsets `J` of `{0, .., 2m}`,
/// `f(J)` the number of even elements of `J`.
pub fn signed_sum_bc(m: u32) -> Result<i64> {
    if m == 0 {
        return Err(Error::InvalidParameter("the B/C multiplicity needs m >= 1".into()));
    }
    bound("B/C multiplicity m", m, BC_M_MAX)?;
    let splits = splits_bc(m);
    let got = traces(&splits, &w_m(m), SplitBC::symbol)?;
    Ok(splits
        .iter()
        .zip(got)
        .map(|(s, v)| sign_of_parity(s.even_bottom_count()) * v)
        .sum())
}

/// Multiplicity of the cuspidal unipotent representation in `R_{w_m}`,
/// type B/C with `n = m^2 + m`.
pub fn multiplicity_bc(m: u32) -> Result<Ratio<i64>> {
    Ok(Ratio::new(signed_sum_bc(m)?, 1i64 << m))
}

/// Type D analogue over subsets of `{0, .., 2m-1}` at `w'_m`, `m` even.
pub fn signed_sum_d(m: u32) -> Result<i64> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("the D multiplicity needs even m >= 2, got {m}")));
    }
    bound("D multiplicity m", m, D_M_MAX)?;
    let splits = splits_d(m);
    let cls = w_prime_m(m)?;
    let got = splits
        .par_iter()
        .map(|s| trace_dn(&s.symbol(), &cls))
        .collect::<Result<Vec<_>>>()?;
    Ok(splits
        .iter()
        .zip(got)
        .map(|(s, v)| sign_of_parity(s.even_bottom_count()) * v)
        .sum())
}

pub fn multiplicity_d(m: u32) -> Result<Ratio<i64>> {
    Ok(Ratio::new(signed_sum_d(m)?, 1i64 << m))
}

fn multiplicity_report(claim: ClaimId, m: u32, sum: i64) -> VerificationReport {
    let mut cx = Vec::new();
    let divisor = 1i64 << m;
    if sum % divisor != 0 {
        cx.push(Counterexample {
            input: format!("signed sum {sum}"),
            expected: format!("divisible by 2^{m}"),
            got: format!("remainder {}", sum.rem_euclid(divisor)),
        });
    }
    let mult = Ratio::new(sum, divisor);
    if mult != Ratio::from_integer(1) {
        cx.push(Counterexample {
            input: "multiplicity".into(),
            expected: "1".into(),
            got: mult.to_string(),
        });
    }
    VerificationReport::new(claim, format!("m={m}"), 1, cx)
        .with_note(format!("signed sum = {sum}, multiplicity = {mult}"))
}

pub fn check_multiplicity_bc(m: u32) -> Result<VerificationReport> {
    Ok(multiplicity_report(ClaimId::MultiplicityBc, m, signed_sum_bc(m)?))
}

pub fn check_multiplicity_d(m: u32) -> Result<VerificationReport> {
    Ok(multiplicity_report(ClaimId::MultiplicityD, m, signed_sum_d(m)?))
}

/// A linear character of `W_2 x W_2`: on each factor, a product of the sign
/// of the underlying permutation and `chi`, each switched on or off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearCharW2W2 {
    pub sign_left: bool,
    pub chi_left: bool,
    pub sign_right: bool,
    pub chi_right: bool,
}

impl LinearCharW2W2 {
    pub const TRIVIAL: LinearCharW2W2 = LinearCharW2W2 {
        sign_left: false,
        chi_left: false,
        sign_right: false,
        chi_right: false,
    };

    /// All 16 linear characters.
    pub fn all() -> Vec<LinearCharW2W2> {
        (0..16u8)
            .map(|b| LinearCharW2W2 {
                sign_left: b & 1 != 0,
                chi_left: b & 2 != 0,
                sign_right: b & 4 != 0,
                chi_right: b & 8 != 0,
            })
            .collect()
    }

    fn factor_value(h: &SignedPerm, sign: bool, chi: bool) -> i64 {
        let mut v = 1;
        if sign {
            v *= crate::combinatorics::permutation_sign(h.image());
        }
        if chi && h.primed_count() % 2 == 1 {
            v = -v;
        }
        v
    }

    /// Value on an element of `W_4` preserving `{0, 1}`.
    pub fn value(&self, h: &SignedPerm) -> i64 {
        Self::factor_value(&h.restrict(0, 2), self.sign_left, self.chi_left)
            * Self::factor_value(&h.restrict(2, 4), self.sign_right, self.chi_right)
    }
}

impl std::fmt::Display for LinearCharW2W2 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let part = |s: bool, c: bool| match (s, c) {
            (false, false) => "1",
            (true, false) => "sgn",
            (false, true) => "chi",
            (true, true) => "sgn*chi",
        };
        write!(
            f,
            "{} x {}",
            part(self.sign_left, self.chi_left),
            part(self.sign_right, self.chi_right)
        )
    }
}

/// `tr(g, Ind_{W_2 x W_2}^{W_4} eps)` by summing over all of `W_4`.
pub fn induced_w2w2(eps: LinearCharW2W2, g: &SignedPerm, group: &[SignedPerm]) -> i64 {
    let sum: i64 = group
        .iter()
        .filter_map(|x| {
            let h = x.inverse().compose(g).compose(x);
            h.preserves_prefix(2).then(|| eps.value(&h))
        })
        .sum();
    // |W_2 x W_2| = 64
    debug_assert_eq!(sum % 64, 0);
    sum / 64
}

/// Value of `Ind_{S_2 x S_2}^{S_4} 1` read off the order of the element.
fn s4_two_subset_count(cls: &SnClass) -> i64 {
    match cls.cycles() {
        [1, 1, 1, 1] => 6,
        [1, 1, 2] | [2, 2] => 2,
        _ => 0,
    }
}

/// (i) every induced value from a linear character of `W_2 x W_2` to `W_4`
/// is even, the trivial one matching the `S_4` count through the
/// projection; (ii) the character `([1,2];[2])` is even on all classes.
pub fn check_w4_evenness() -> Result<VerificationReport> {
    let group = enumerate_wn(4);
    let classes = SignedCycleType::all(4);
    let reps: Vec<SignedPerm> = classes.iter().map(SignedPerm::representative).collect();
    let mut cases = 0;
    let mut cx = Vec::new();
    let mut induced_rows = Vec::new();
    for eps in LinearCharW2W2::all() {
        let row: Vec<i64> = reps.iter().map(|g| induced_w2w2(eps, g, &group)).collect();
        for (cls, &v) in classes.iter().zip(&row) {
            cases += 1;
            if v % 2 != 0 {
                cx.push(Counterexample {
                    input: format!("(i) eps={eps} class={cls}"),
                    expected: "even".into(),
                    got: v.to_string(),
                });
            }
        }
        if eps == LinearCharW2W2::TRIVIAL {
            for ((cls, g), &v) in classes.iter().zip(&reps).zip(&row) {
                cases += 1;
                let expected = s4_two_subset_count(&g.projected_class());
                if v != expected {
                    cx.push(Counterexample {
                        input: format!("(i) eps=1 class={cls} via S_4"),
                        expected: expected.to_string(),
                        got: v.to_string(),
                    });
                }
            }
        }
        induced_rows.push((eps, row));
    }

    let e = BiSymbol::new(vec![1, 2], vec![2]);
    let mut ev = WnEvaluator::new();
    let e_row = classes
        .iter()
        .map(|c| ev.trace(&e, c))
        .collect::<Result<Vec<_>>>()?;
    for (cls, &v) in classes.iter().zip(&e_row) {
        cases += 1;
        if v % 2 != 0 {
            cx.push(Counterexample {
                input: format!("(ii) class={cls}"),
                expected: "even".into(),
                got: v.to_string(),
            });
        }
    }
    let matching: Vec<String> = induced_rows
        .iter()
        .filter(|(_, row)| *row == e_row)
        .map(|(eps, _)| eps.to_string())
        .collect();
    let note = if matching.is_empty() {
        "([1,2];[2]) matches no induced linear character".to_string()
    } else {
        format!("([1,2];[2]) = Ind({})", matching.join(" | "))
    };
    Ok(VerificationReport::new(ClaimId::W4Evenness, "W4", cases, cx).with_note(note))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wn::mn_trace_wn;

    #[test]
    fn distinguished_elements() {
        assert_eq!(w_m(1), SignedCycleType::new(vec![], vec![2]).unwrap());
        assert_eq!(w_m(0).weight(), 0);
        assert_eq!(w_m(3).weight(), 12);
        assert_eq!(w_prime_m(1).unwrap(), SignedCycleType::new(vec![], vec![1]).unwrap());
        assert!(w_prime_m(2).unwrap().in_dn());
        assert!(!w_prime_m(3).unwrap().in_dn());
        assert!(w_prime_m(0).is_err());
        for m in 1..=6 {
            assert_eq!(w_m(m).weight(), (m * m + m) as i64);
            assert_eq!(w_prime_m(m).unwrap().weight(), (m * m) as i64);
        }
    }

    #[test]
    fn star_examples() {
        let s = SplitBC::from_bottom(1, vec![2]).unwrap();
        assert_eq!(s.top, vec![0, 1]);
        assert!(star_bc(&s));
        assert!(!star_bc(&SplitBC::from_bottom(1, vec![1]).unwrap()));
        let d = SplitD::from_bottom(1, vec![0]).unwrap();
        assert_eq!(d.top, vec![1]);
        assert!(star_d(&d));
        assert!(SplitBC::from_bottom(1, vec![3]).is_err());
        assert!(SplitD::from_bottom(2, vec![1, 1]).is_err());
    }

    #[test]
    fn traces_w_m_small() {
        // J = {0}, {1}, {2}
        let values: Vec<i64> = splits_bc(1)
            .iter()
            .map(|s| mn_trace_wn(&s.symbol(), &w_m(1)).unwrap())
            .collect();
        assert_eq!(values, vec![-1, 0, -1]);
        let r = check_traces_w_m(0).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases, 1);
        let r = check_traces_w_m(3).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases, 35);
    }

    #[test]
    fn parity_w_m_small() {
        // m = 1: (*)-splits are bottom {0} and {2}; one even entry each
        let r = check_parity_w_m(1).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases, 2);
        assert!(check_parity_w_m(2).unwrap().passed());
    }

    #[test]
    fn traces_w_prime_m_small() {
        assert_eq!(mn_trace_wn(&BiSymbol::new(vec![1], vec![0]), &w_prime_m(1).unwrap()).unwrap(), 1);
        assert_eq!(mn_trace_wn(&BiSymbol::new(vec![0], vec![1]), &w_prime_m(1).unwrap()).unwrap(), -1);
        let r = check_traces_w_prime_m(2).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases, 6);
        let failing: Vec<_> = splits_d(2).into_iter().filter(|s| !star_d(s)).collect();
        assert_eq!(failing.len(), 2);
        for s in failing {
            assert_eq!(mn_trace_wn(&s.symbol(), &w_prime_m(2).unwrap()).unwrap(), 0);
        }
        assert_eq!(check_traces_w_prime_m(3).unwrap().cases, 20);
    }

    #[test]
    fn parity_w_prime_m_small() {
        assert!(check_parity_w_prime_m(1).unwrap().passed());
        assert!(check_parity_w_prime_m(0).is_err());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_bc(1).unwrap(), Ratio::from_integer(1));
        assert_eq!(signed_sum_bc(1).unwrap(), 2);
        assert_eq!(multiplicity_bc(2).unwrap(), Ratio::from_integer(1));
        assert_eq!(multiplicity_d(2).unwrap(), Ratio::from_integer(1));
        assert!(multiplicity_d(3).is_err());
        assert!(multiplicity_d(0).is_err());
        assert!(multiplicity_bc(0).is_err());
        assert!(matches!(multiplicity_bc(6), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn type_d_summands_symmetric_under_complement() {
        for m in [2u32, 4] {
            let cls = w_prime_m(m).unwrap();
            for s in splits_d(m) {
                let swapped = SplitD::from_bottom(m, s.top.clone()).unwrap();
                let a = sign_of_parity(s.even_bottom_count()) * trace_dn(&s.symbol(), &cls).unwrap();
                let b = sign_of_parity(swapped.even_bottom_count()) * trace_dn(&swapped.symbol(), &cls).unwrap();
                assert_eq!(a, b, "{s:?}");
            }
        }
    }

    #[test]
    fn w4_evenness_with_expected_identity_values() {
        let r = check_w4_evenness().unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let group = enumerate_wn(4);
        assert_eq!(induced_w2w2(LinearCharW2W2::TRIVIAL, &SignedPerm::identity(4), &group), 6);
        let e = BiSymbol::new(vec![1, 2], vec![2]);
        let id = SignedCycleType::new(vec![1; 4], vec![]).unwrap();
        assert_eq!(mn_trace_wn(&e, &id).unwrap(), 6);
        assert!(r.notes[0].contains("sgn x chi"), "{:?}", r.notes);
    }
}
