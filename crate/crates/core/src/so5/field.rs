use crate::error::{Error, Result};

/// `F_q` for a small odd prime `q`; elements are residues stored in `u8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    q: u32,
}

/// Upper limit on `q`; keeps every 5-term dot product inside `u32`.
pub const MAX_Q: u32 = 13;

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        let prime = q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d));
        if !prime || q == 2 || q > MAX_Q {
            return Err(Error::UnsupportedField(q));
        }
        Ok(PrimeField { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }

    pub fn reduce(&self, x: i64) -> u8 {
        x.rem_euclid(self.q as i64) as u8
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.q) as u8
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.q - b as u32) % self.q) as u8
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.q) as u8
    }

    pub fn pow(&self, a: u8, mut e: u32) -> u8 {
        let (mut base, mut acc) = (a, 1u8);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.q as u8), "inverse of zero");
        self.pow(a, self.q - 2)
    }

    /// Nonzero square (Euler's criterion).
    pub fn is_nonzero_square(&self, a: u8) -> bool {
        a != 0 && self.pow(a, (self.q - 1) / 2) == 1
    }

    pub fn minus_one(&self) -> u8 {
        (self.q - 1) as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_q() {
        for q in [0, 1, 2, 4, 9, 15, 17] {
            assert_eq!(PrimeField::new(q), Err(Error::UnsupportedField(q)));
        }
        for q in [3, 5, 7, 11, 13] {
            assert!(PrimeField::new(q).is_ok());
        }
    }

    #[test]
    fn squares_mod_3_and_5() {
        let f = PrimeField::new(3).unwrap();
        assert!(f.is_nonzero_square(1));
        assert!(!f.is_nonzero_square(2));
        assert!(!f.is_nonzero_square(0));
        let f = PrimeField::new(5).unwrap();
        let squares: Vec<u8> = f.elements().filter(|&a| f.is_nonzero_square(a)).collect();
        assert_eq!(squares, vec![1, 4]);
    }

    #[test]
    fn inverses() {
        for q in [3, 5, 7, 11, 13] {
            let f = PrimeField::new(q).unwrap();
            for a in 1..q as u8 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }
}
