//! The quadratic space `(F_q^5, (,))`, its lines, and `SO_5(F_q)`.

use std::collections::{HashSet, VecDeque};

use super::field::PrimeField;
use super::matrix::{self, Mat5, Vec5, IDENTITY};
use crate::error::{Error, Result};

/// Type of a line `L = <x>`: `(x,x)` a nonzero square, a nonsquare, or zero.
/// Scaling `x` multiplies `(x,x)` by a square, so this is well defined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineType {
    Plus,
    Minus,
    Isotropic,
}

impl LineType {
    /// `+1`, `-1`, or `0` for isotropic lines.
    pub fn sign(&self) -> i64 {
        match self {
            LineType::Plus => 1,
            LineType::Minus => -1,
            LineType::Isotropic => 0,
        }
    }
}

/// A 1-dimensional subspace, stored by its representative with first
/// nonzero coordinate equal to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    rep: Vec5,
}

impl ProjLine {
    /// `None` for the zero vector.
    pub fn through(f: &PrimeField, x: &Vec5) -> Option<ProjLine> {
        let lead = *x.iter().find(|&&c| c != 0)?;
        let inv = f.inv(lead);
        let mut rep = [0u8; 5];
        for (r, &c) in rep.iter_mut().zip(x) {
            *r = f.mul(c, inv);
        }
        Some(ProjLine { rep })
    }

    pub fn rep(&self) -> &Vec5 {
        &self.rep
    }

    /// All `(q^5 - 1)/(q - 1)` lines of `F_q^5`.
    pub fn all(f: &PrimeField) -> Vec<ProjLine> {
        let q = f.q() as usize;
        let mut out = Vec::new();
        for lead in 0..5 {
            let free = 4 - lead;
            for code in 0..q.pow(free as u32) {
                let mut rep = [0u8; 5];
                rep[lead] = 1;
                let mut c = code;
                for slot in rep.iter_mut().skip(lead + 1) {
                    *slot = (c % q) as u8;
                    c /= q;
                }
                out.push(ProjLine { rep });
            }
        }
        out
    }
}

/// A nondegenerate symmetric bilinear form on `F_q^5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSpace5 {
    field: PrimeField,
    gram: Mat5,
}

impl QuadraticSpace5 {
    pub fn new(field: PrimeField, gram: Mat5) -> Result<Self> {
        if matrix::transpose(&gram) != gram {
            return Err(Error::InvalidParameter("Gram matrix is not symmetric".into()));
        }
        if matrix::det(&field, &gram) == 0 {
            return Err(Error::InvalidParameter("Gram matrix is degenerate".into()));
        }
        Ok(QuadraticSpace5 { field, gram })
    }

    /// The form with identity Gram matrix.
    pub fn standard(q: u32) -> Result<Self> {
        Self::new(PrimeField::new(q)?, IDENTITY)
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn gram(&self) -> &Mat5 {
        &self.gram
    }

    pub fn dot(&self, x: &Vec5, y: &Vec5) -> u8 {
        let gy = matrix::apply(&self.field, &self.gram, y);
        let s: u32 = x.iter().zip(&gy).map(|(&a, &b)| a as u32 * b as u32).sum();
        (s % self.field.q()) as u8
    }

    pub fn line_type(&self, line: &ProjLine) -> LineType {
        let v = self.dot(line.rep(), line.rep());
        if v == 0 {
            LineType::Isotropic
        } else if self.field.is_nonzero_square(v) {
            LineType::Plus
        } else {
            LineType::Minus
        }
    }

    /// `g^T G g = G` and `det g = 1`.
    pub fn is_special_orthogonal(&self, g: &Mat5) -> bool {
        let f = &self.field;
        let lhs = matrix::mul(f, &matrix::transpose(g), &matrix::mul(f, &self.gram, g));
        lhs == self.gram && matrix::det(f, g) == 1
    }

    /// Reflection in the hyperplane orthogonal to an anisotropic `v`:
    /// `x -> x - 2 (x,v)/(v,v) v`.
    pub fn reflection(&self, v: &Vec5) -> Mat5 {
        let f = &self.field;
        let vv = self.dot(v, v);
        assert_ne!(vv, 0, "reflection in an isotropic vector");
        let c = f.mul(2, f.inv(vv));
        let gv = matrix::apply(f, &self.gram, v);
        let mut m = IDENTITY;
        for i in 0..5 {
            for j in 0..5 {
                // (x,v) = x . (G v)
                let t = f.mul(c, f.mul(v[i], gv[j]));
                m[i][j] = f.sub(m[i][j], t);
            }
        }
        m
    }

    /// `q^4 (q^2 - 1)(q^4 - 1)`.
    pub fn so5_order(&self) -> u64 {
        let q = self.field.q() as u64;
        q.pow(4) * (q * q - 1) * (q.pow(4) - 1)
    }
}

/// An element of `SO(V)(F_q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrthElement(Mat5);

impl OrthElement {
    pub fn new(space: &QuadraticSpace5, g: Mat5) -> Result<Self> {
        if !space.is_special_orthogonal(&g) {
            return Err(Error::InvalidParameter("matrix is not in SO(V)".into()));
        }
        Ok(OrthElement(g))
    }

    pub fn matrix(&self) -> &Mat5 {
        &self.0
    }

    pub(crate) fn from_trusted(g: Mat5) -> Self {
        OrthElement(g)
    }
}

/// Full enumeration is refused above this many elements.
pub const DEFAULT_ENUMERATION_CAP: u64 = 200_000;

/// Products `r_a r_v` of reflections in a fixed anisotropic `a` and every
/// anisotropic `v`. Every element of `SO(V)` is an even product of
/// reflections and `r_u r_v = (r_a r_u)^{-1} (r_a r_v)`, so these generate.
pub fn generators(space: &QuadraticSpace5) -> Vec<Mat5> {
    let f = space.field();
    let aniso: Vec<ProjLine> = ProjLine::all(f)
        .into_iter()
        .filter(|l| space.line_type(l) != LineType::Isotropic)
        .collect();
    let ra = space.reflection(aniso[0].rep());
    let mut gens: Vec<Mat5> = aniso[1..]
        .iter()
        .map(|l| matrix::mul(f, &ra, &space.reflection(l.rep())))
        .collect();
    gens.sort_unstable();
    gens.dedup();
    gens
}

/// Every element of `SO_5(F_q)` once, by breadth-first closure from
/// [`generators`]. The result is checked against the order formula.
pub fn enumerate_group(space: &QuadraticSpace5, cap: u64) -> Result<Vec<OrthElement>> {
    let expected = space.so5_order();
    if expected > cap {
        return Err(Error::BoundExceeded {
            what: "SO_5 enumeration",
            n: expected,
            max: cap,
        });
    }
    let f = space.field();
    let gens = generators(space);
    let mut seen: HashSet<Mat5> = HashSet::with_capacity(expected as usize);
    let mut order = Vec::with_capacity(expected as usize);
    let mut queue = VecDeque::new();
    seen.insert(IDENTITY);
    queue.push_back(IDENTITY);
    while let Some(g) = queue.pop_front() {
        order.push(OrthElement(g));
        for s in &gens {
            let h = matrix::mul(f, s, &g);
            if seen.insert(h) {
                queue.push_back(h);
            }
        }
    }
    if order.len() as u64 != expected {
        return Err(Error::InvalidParameter(format!(
            "generated {} elements, expected {expected}",
            order.len()
        )));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_types_q3() {
        let s = QuadraticSpace5::standard(3).unwrap();
        let f = *s.field();
        let e1 = ProjLine::through(&f, &[1, 0, 0, 0, 0]).unwrap();
        assert_eq!(s.line_type(&e1), LineType::Plus);
        let x = ProjLine::through(&f, &[1, 1, 0, 0, 0]).unwrap();
        assert_eq!(s.line_type(&x), LineType::Minus);
        let iso = ProjLine::through(&f, &[1, 1, 1, 0, 0]).unwrap();
        assert_eq!(s.line_type(&iso), LineType::Isotropic);
        assert_eq!(ProjLine::through(&f, &[0, 2, 1, 0, 0]).unwrap().rep(), &[0, 1, 2, 0, 0]);
        assert!(ProjLine::through(&f, &[0; 5]).is_none());
    }

    #[test]
    fn line_census() {
        for q in [3u32, 5] {
            let s = QuadraticSpace5::standard(q).unwrap();
            let lines = ProjLine::all(s.field());
            let q64 = q as u64;
            assert_eq!(lines.len() as u64, (q64.pow(5) - 1) / (q64 - 1));
            let iso = lines
                .iter()
                .filter(|l| s.line_type(l) == LineType::Isotropic)
                .count() as u64;
            assert_eq!(iso, (q64 + 1) * (q64 * q64 + 1));
        }
    }

    #[test]
    fn reflections_are_orthogonal_with_det_minus_one() {
        let s = QuadraticSpace5::standard(3).unwrap();
        let f = *s.field();
        let r = s.reflection(&[1, 1, 0, 0, 0]);
        let lhs = matrix::mul(&f, &matrix::transpose(&r), &matrix::mul(&f, s.gram(), &r));
        assert_eq!(&lhs, s.gram());
        assert_eq!(matrix::det(&f, &r), 2);
        assert_eq!(matrix::mul(&f, &r, &r), IDENTITY);
        for g in generators(&s) {
            assert!(s.is_special_orthogonal(&g));
        }
    }

    #[test]
    fn rejects_degenerate_or_asymmetric_forms() {
        let f = PrimeField::new(3).unwrap();
        let mut g = IDENTITY;
        g[4][4] = 0;
        assert!(QuadraticSpace5::new(f, g).is_err());
        let mut g = IDENTITY;
        g[0][1] = 1;
        assert!(QuadraticSpace5::new(f, g).is_err());
        let s = QuadraticSpace5::standard(3).unwrap();
        assert!(OrthElement::new(&s, IDENTITY).is_ok());
        assert!(OrthElement::new(&s, s.reflection(&[1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn enumeration_guard() {
        let s = QuadraticSpace5::standard(5).unwrap();
        assert!(matches!(
            enumerate_group(&s, DEFAULT_ENUMERATION_CAP),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
