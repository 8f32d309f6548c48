//! Explicit elements of the hyperoctahedral group `W_n`.

use crate::combinatorics::{SignedCycleType, SnClass};

/// `i -> +-image[i]`; bit `i` of `flips` records that `i` is sent to a
/// primed letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    image: Vec<usize>,
    flips: u32,
}

impl SignedPerm {
    pub fn new(image: Vec<usize>, flips: u32) -> Self {
        debug_assert!({
            let mut seen = vec![false; image.len()];
            image.iter().all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
        });
        SignedPerm { image, flips }
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm {
            image: (0..n).collect(),
            flips: 0,
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn flipped(&self, i: usize) -> bool {
        self.flips >> i & 1 == 1
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let mut image = Vec::with_capacity(self.image.len());
        let mut flips = 0;
        for i in 0..self.image.len() {
            let j = other.image[i];
            image.push(self.image[j]);
            if other.flipped(i) != self.flipped(j) {
                flips |= 1 << i;
            }
        }
        SignedPerm { image, flips }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut image = vec![0; self.image.len()];
        let mut flips = 0;
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
            if self.flipped(i) {
                flips |= 1 << j;
            }
        }
        SignedPerm { image, flips }
    }

    /// Number of letters sent to primed letters; `chi = (-1)^this`.
    pub fn primed_count(&self) -> u32 {
        self.flips.count_ones()
    }

    /// A cycle is negative when an odd number of its letters are flipped.
    pub fn signed_cycle_type(&self) -> SignedCycleType {
        let mut seen = vec![false; self.image.len()];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for start in 0..self.image.len() {
            if seen[start] {
                continue;
            }
            let (mut len, mut parity) = (0u32, false);
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                parity ^= self.flipped(i);
                i = self.image[i];
                len += 1;
            }
            if parity {
                neg.push(len);
            } else {
                pos.push(len);
            }
        }
        SignedCycleType::new(pos, neg).expect("cycle lengths are positive")
    }

    /// Cycle type of the image in `S_n` under forgetting signs.
    pub fn projected_class(&self) -> SnClass {
        let t = self.signed_cycle_type();
        let mut cycles = t.positive().to_vec();
        cycles.extend_from_slice(t.negative());
        SnClass::new(cycles).expect("cycle lengths are positive")
    }

    /// A fixed element of the given class: cycles laid out on consecutive
    /// letters, negatives flipping their first letter.
    pub fn representative(cls: &SignedCycleType) -> SignedPerm {
        let n = cls.weight() as usize;
        let mut image = vec![0; n];
        let mut flips = 0u32;
        let mut start = 0;
        let cycles = cls
            .positive()
            .iter()
            .map(|&k| (k as usize, false))
            .chain(cls.negative().iter().map(|&k| (k as usize, true)));
        for (k, negative) in cycles {
            for j in 0..k {
                image[start + j] = start + (j + 1) % k;
            }
            if negative {
                flips |= 1 << start;
            }
            start += k;
        }
        SignedPerm { image, flips }
    }

    /// Does this element preserve `{0, .., r-1}` (hence also its complement)?
    pub fn preserves_prefix(&self, r: usize) -> bool {
        self.image[..r].iter().all(|&j| j < r)
    }

    /// Restriction to the letters `lo..hi`, renumbered from zero. The
    /// element must preserve that block.
    pub fn restrict(&self, lo: usize, hi: usize) -> SignedPerm {
        let image = self.image[lo..hi].iter().map(|&j| j - lo).collect();
        let flips = (self.flips >> lo) & ((1u32 << (hi - lo)) - 1);
        SignedPerm { image, flips }
    }
}

/// Every element of `W_n`, `2^n n!` of them.
pub fn enumerate_wn(n: usize) -> Vec<SignedPerm> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for perm in (0..n).permutations(n) {
        for flips in 0..1u32 << n {
            out.push(SignedPerm {
                image: perm.clone(),
                flips,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_axioms_w3() {
        let g = enumerate_wn(3);
        assert_eq!(g.len(), 48);
        let e = SignedPerm::identity(3);
        for x in &g {
            assert_eq!(x.compose(&x.inverse()), e);
            assert_eq!(x.inverse().compose(x), e);
        }
        for x in g.iter().step_by(5) {
            for y in g.iter().step_by(7) {
                for z in g.iter().step_by(11) {
                    assert_eq!(x.compose(&y.compose(z)), x.compose(y).compose(z));
                }
            }
        }
    }

    #[test]
    fn class_sizes_match_centralizers() {
        for n in 0..=4 {
            let g = enumerate_wn(n);
            let order = g.len() as u64;
            let mut counts = std::collections::HashMap::new();
            for x in &g {
                *counts.entry(x.signed_cycle_type()).or_insert(0u64) += 1;
            }
            assert_eq!(counts.len(), SignedCycleType::all(n as u32).len());
            for (cls, count) in counts {
                assert_eq!(count * cls.centralizer_order(), order, "{cls}");
                assert_eq!(SignedPerm::representative(&cls).signed_cycle_type(), cls);
            }
        }
    }

    #[test]
    fn class_is_conjugation_invariant() {
        let g = enumerate_wn(3);
        for x in g.iter().step_by(3) {
            for y in &g {
                let c = y.compose(x).compose(&y.inverse());
                assert_eq!(c.signed_cycle_type(), x.signed_cycle_type());
            }
        }
    }

    #[test]
    fn primed_parity_matches_negative_cycles() {
        for x in enumerate_wn(4) {
            assert_eq!(
                x.primed_count() % 2,
                x.signed_cycle_type().negative_count() as u32 % 2
            );
        }
    }
}
