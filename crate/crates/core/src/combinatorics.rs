//! Partitions, beta-sequences, bi-symbols and cycle-type labels.
//!
//! A beta-sequence `[l1, ..., la]` stands for a virtual character of `S_n`
//! with `n = sum(l) - a(a-1)/2`. Sequences with repeated or negative entries
//! are zero; otherwise sorting the entries costs the sign of the sorting
//! permutation. Prepending `0` and incrementing every entry (a *shift*) does
//! not change the character, so every shift class has a unique shift-minimal
//! representative, which is what the evaluators use as cache keys.

use std::fmt;

use crate::error::{Error, Result};

/// A partition stored as weakly increasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// All partitions of `n`, ordered lexicographically on their increasing
    /// part lists: `(1,1,1) < (1,2) < (3)`.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, min_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in min_part..=remaining {
                // the rest must still fit as parts >= p
                let rest = remaining - p;
                if rest != 0 && rest < p {
                    continue;
                }
                cur.push(p);
                rec(rest, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, 1, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Result of normalizing a beta-sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NormalizedBeta {
    Zero,
    Signed { sign: i64, canonical: Vec<i64> },
}

impl NormalizedBeta {
    pub fn is_zero(&self) -> bool {
        matches!(self, NormalizedBeta::Zero)
    }

    pub fn sign(&self) -> i64 {
        match self {
            NormalizedBeta::Zero => 0,
            NormalizedBeta::Signed { sign, .. } => *sign,
        }
    }
}

/// Sorts `entries`, returning `Zero` on a repeat or a negative entry and
/// otherwise the sign of the sorting permutation.
pub fn normalize_beta(entries: &[i64]) -> NormalizedBeta {
    if entries.iter().any(|&e| e < 0) {
        return NormalizedBeta::Zero;
    }
    let mut inversions = 0usize;
    for i in 0..entries.len() {
        for j in i + 1..entries.len() {
            match entries[i].cmp(&entries[j]) {
                std::cmp::Ordering::Equal => return NormalizedBeta::Zero,
                std::cmp::Ordering::Greater => inversions += 1,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    let mut canonical = entries.to_vec();
    canonical.sort_unstable();
    NormalizedBeta::Signed {
        sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        canonical,
    }
}

/// Applies `l -> [0, l1+1, ..., la+1]` `d` times.
pub fn shift_beta(entries: &[i64], d: usize) -> Vec<i64> {
    let d_i = d as i64;
    (0..d_i).chain(entries.iter().map(|&e| e + d_i)).collect()
}

/// Shift-minimal representative of a canonical sequence.
pub fn reduce_beta(canonical: &[i64]) -> Vec<i64> {
    debug_assert!(is_canonical(canonical), "reduce_beta on {canonical:?}");
    let strip = canonical
        .iter()
        .enumerate()
        .take_while(|&(i, &e)| e == i as i64)
        .count();
    let k = strip as i64;
    canonical[strip..].iter().map(|&e| e - k).collect()
}

pub fn is_canonical(entries: &[i64]) -> bool {
    entries.first().is_none_or(|&e| e >= 0) && entries.windows(2).all(|w| w[0] < w[1])
}

fn binom2(a: usize) -> i64 {
    let a = a as i64;
    a * (a - 1) / 2
}

/// An integer sequence `[l1, ..., la]` naming a virtual character of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BetaSequence {
    entries: Vec<i64>,
}

impl BetaSequence {
    pub fn new(entries: Vec<i64>) -> Self {
        BetaSequence { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum(entries) - a(a-1)/2`.
    pub fn weight(&self) -> i64 {
        self.entries.iter().sum::<i64>() - binom2(self.entries.len())
    }

    pub fn normalize(&self) -> NormalizedBeta {
        normalize_beta(&self.entries)
    }

    pub fn shift(&self, d: usize) -> BetaSequence {
        BetaSequence::new(shift_beta(&self.entries, d))
    }

    pub fn is_canonical(&self) -> bool {
        is_canonical(&self.entries)
    }
}

impl From<Vec<i64>> for BetaSequence {
    fn from(entries: Vec<i64>) -> Self {
        BetaSequence::new(entries)
    }
}

impl fmt::Display for BetaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// `l_i = p_i + i - 1` after padding `p` with leading zeros to length `a`.
pub fn partition_to_beta(p: &Partition, a: usize) -> Result<BetaSequence> {
    if a < p.len() {
        return Err(Error::BetaTooShort {
            len: a,
            parts: p.len(),
        });
    }
    let pad = a - p.len();
    let entries = (0..a)
        .map(|i| {
            let part = if i < pad { 0 } else { p.parts[i - pad] as i64 };
            part + i as i64
        })
        .collect();
    Ok(BetaSequence::new(entries))
}

/// Inverse of [`partition_to_beta`]; the input must be canonical.
pub fn beta_to_partition(beta: &BetaSequence) -> Result<Partition> {
    if !beta.is_canonical() {
        return Err(Error::NotCanonical(beta.entries.clone()));
    }
    let parts = beta
        .entries
        .iter()
        .enumerate()
        .map(|(i, &e)| (e - i as i64) as u32)
        .collect();
    Ok(Partition::new(parts))
}

/// A two-row symbol naming a virtual character of `W_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiSymbol {
    pub top: BetaSequence,
    pub bottom: BetaSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NormalizedBiSymbol {
    Zero,
    Signed {
        sign: i64,
        top: Vec<i64>,
        bottom: Vec<i64>,
    },
}

impl BiSymbol {
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Self {
        BiSymbol {
            top: BetaSequence::new(top),
            bottom: BetaSequence::new(bottom),
        }
    }

    /// The canonical symbol of the bipartition `(alpha, beta)`.
    pub fn from_bipartition(alpha: &Partition, beta: &Partition) -> Self {
        BiSymbol {
            top: partition_to_beta(alpha, alpha.len()).expect("exact length"),
            bottom: partition_to_beta(beta, beta.len()).expect("exact length"),
        }
    }

    pub fn weight(&self) -> i64 {
        self.top.weight() + self.bottom.weight()
    }

    /// `(r, r~)`: the weights of the two rows separately.
    pub fn row_weights(&self) -> (i64, i64) {
        (self.top.weight(), self.bottom.weight())
    }

    pub fn normalize(&self) -> NormalizedBiSymbol {
        normalize_bisymbol(self.top.entries(), self.bottom.entries())
    }

    pub fn shift(&self, d: usize) -> BiSymbol {
        BiSymbol {
            top: self.top.shift(d),
            bottom: self.bottom.shift(d),
        }
    }
}

impl fmt::Display for BiSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{})", self.top, self.bottom)
    }
}

pub fn normalize_bisymbol(top: &[i64], bottom: &[i64]) -> NormalizedBiSymbol {
    match (normalize_beta(top), normalize_beta(bottom)) {
        (
            NormalizedBeta::Signed { sign: s1, canonical: t },
            NormalizedBeta::Signed { sign: s2, canonical: b },
        ) => NormalizedBiSymbol::Signed {
            sign: s1 * s2,
            top: t,
            bottom: b,
        },
        _ => NormalizedBiSymbol::Zero,
    }
}

/// A conjugacy class of `S_n`: cycle lengths in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnClass {
    cycles: Vec<u32>,
}

impl SnClass {
    pub fn new(cycles: Vec<u32>) -> Result<Self> {
        if cycles.contains(&0) {
            return Err(Error::InvalidParameter(
                "cycle lengths must be at least 1".into(),
            ));
        }
        let mut cycles = cycles;
        cycles.sort_unstable();
        Ok(SnClass { cycles })
    }

    pub fn cycles(&self) -> &[u32] {
        &self.cycles
    }

    pub fn weight(&self) -> i64 {
        self.cycles.iter().map(|&c| c as i64).sum()
    }

    /// `prod k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> u64 {
        multiplicity_product(&self.cycles, |k| k as u64)
    }

    pub fn all(n: u32) -> Vec<SnClass> {
        Partition::all(n)
            .into_iter()
            .map(|p| SnClass { cycles: p.parts })
            .collect()
    }
}

impl fmt::Display for SnClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_dots(&self.cycles))
    }
}

fn multiplicity_product(sorted: &[u32], per_cycle: impl Fn(u32) -> u64) -> u64 {
    let mut z = 1u64;
    let mut run = 0u64;
    for (i, &k) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == k { run + 1 } else { 1 };
        z *= per_cycle(k) * run;
    }
    z
}

pub(crate) fn join_dots(v: &[u32]) -> String {
    v.iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

/// A conjugacy class of `W_n`: positive and negative cycle lengths, each in
/// increasing order. A negative `k`-cycle maps to a `2k`-cycle under
/// `W_k < S_{2k}`; a positive one to two `k`-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType {
    positive: Vec<u32>,
    negative: Vec<u32>,
}

impl SignedCycleType {
    pub fn new(mut positive: Vec<u32>, mut negative: Vec<u32>) -> Result<Self> {
        if positive.iter().chain(&negative).any(|&c| c == 0) {
            return Err(Error::InvalidParameter(
                "cycle lengths must be at least 1".into(),
            ));
        }
        positive.sort_unstable();
        negative.sort_unstable();
        Ok(SignedCycleType { positive, negative })
    }

    pub fn positive(&self) -> &[u32] {
        &self.positive
    }

    pub fn negative(&self) -> &[u32] {
        &self.negative
    }

    pub fn weight(&self) -> i64 {
        self.positive
            .iter()
            .chain(&self.negative)
            .map(|&c| c as i64)
            .sum()
    }

    pub fn negative_count(&self) -> usize {
        self.negative.len()
    }

    /// Membership in the index-2 subgroup `D_n`.
    pub fn in_dn(&self) -> bool {
        self.negative.len().is_multiple_of(2)
    }

    /// Disjoint union of two cycle types.
    pub fn union(&self, other: &SignedCycleType) -> SignedCycleType {
        let mut positive = self.positive.clone();
        positive.extend_from_slice(&other.positive);
        let mut negative = self.negative.clone();
        negative.extend_from_slice(&other.negative);
        SignedCycleType::new(positive, negative).expect("lengths already valid")
    }

    /// `prod (2k)^{a_k} a_k!` over positive lengths times the same over
    /// negative lengths.
    pub fn centralizer_order(&self) -> u64 {
        let f = |k: u32| 2 * k as u64;
        multiplicity_product(&self.positive, f) * multiplicity_product(&self.negative, f)
    }

    /// All classes of `W_n`, positive weight descending, then lexicographic.
    pub fn all(n: u32) -> Vec<SignedCycleType> {
        let mut out = Vec::new();
        for pos_weight in (0..=n).rev() {
            for p in Partition::all(pos_weight) {
                for q in Partition::all(n - pos_weight) {
                    out.push(SignedCycleType {
                        positive: p.parts.clone(),
                        negative: q.parts.clone(),
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pos:{};neg:{}",
            join_dots(&self.positive),
            join_dots(&self.negative)
        )
    }
}

/// All bipartitions `(alpha, beta)` of `n`, ordered by `|alpha|` descending.
pub fn bipartitions(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in Partition::all(k) {
            for b in Partition::all(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// Sign of a permutation given as an image vector.
pub fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0usize;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    if transpositions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
