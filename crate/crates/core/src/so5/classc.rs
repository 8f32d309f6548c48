//! The class `C` of elements `g = su` with `-s` a reflection, its rational
//! labels `(ε, δ)`, the class function `φ`, and the line-count trace of `Φ`.
//!
//! Rank profile of `g` in `C`: the `(+1)`-eigenspace is a single anisotropic
//! line and `u` restricted to the 4-dimensional `(-1)`-space is regular
//! unipotent in `SO_4` with Jordan type `(3,1)`. Then `ker(g+1)` is a
//! degenerate plane whose radical is isotropic, and its remaining `q` lines
//! are anisotropic of a single type `δ`. For Jordan type `(2,2)` the plane
//! `ker(g+1)` is totally isotropic, so no line-count formula can see it; see
//! [`is_unipotent_22_type`].

use std::fmt;

use super::matrix::{self, Mat5, Vec5};
use super::space::{LineType, OrthElement, ProjLine, QuadraticSpace5};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassCLabel {
    pub epsilon: i8,
    pub delta: i8,
}

impl ClassCLabel {
    pub const ALL: [ClassCLabel; 4] = [
        ClassCLabel { epsilon: 1, delta: 1 },
        ClassCLabel { epsilon: 1, delta: -1 },
        ClassCLabel { epsilon: -1, delta: 1 },
        ClassCLabel { epsilon: -1, delta: -1 },
    ];
}

impl fmt::Display for ClassCLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({:+},{:+})", self.epsilon, self.delta)
    }
}

/// If `g L = L`, the scalar by which `g` acts on `L`.
pub fn fixed_line_scalar(space: &QuadraticSpace5, g: &OrthElement, line: &ProjLine) -> Option<u8> {
    let f = space.field();
    let x = line.rep();
    let gx = matrix::apply(f, g.matrix(), x);
    // x has a leading 1, so the candidate scalar is read off there
    let lead = x.iter().position(|&c| c != 0)?;
    let c = gx[lead];
    let scaled: Vec5 = std::array::from_fn(|i| f.mul(c, x[i]));
    (scaled == gx && c != 0).then_some(c)
}

struct Ranks {
    minus_one: usize,
    plus_one: [usize; 3],
}

fn ranks(space: &QuadraticSpace5, g: &Mat5) -> Ranks {
    let f = space.field();
    let gm = matrix::add_scalar(f, g, f.minus_one());
    let gp = matrix::add_scalar(f, g, 1);
    let gp2 = matrix::mul(f, &gp, &gp);
    let gp3 = matrix::mul(f, &gp2, &gp);
    Ranks {
        minus_one: matrix::rank(f, &gm),
        plus_one: [matrix::rank(f, &gp), matrix::rank(f, &gp2), matrix::rank(f, &gp3)],
    }
}

/// The rank profile of `s u` with `-s` a reflection and `u` of Jordan type
/// `(2,2)` on the `(-1)`-space: `rank(g-1) = 4`, `rank(g+1) = 3`,
/// `rank((g+1)^2) = 1`. These elements exist but have `ker(g+1)` totally
/// isotropic.
pub fn is_unipotent_22_type(space: &QuadraticSpace5, g: &OrthElement) -> bool {
    let r = ranks(space, g.matrix());
    r.minus_one == 4 && r.plus_one[0] == 3 && r.plus_one[1] == 1
}

fn line_of_kernel(space: &QuadraticSpace5, basis: &[Vec5]) -> Vec<ProjLine> {
    let f = space.field();
    let q = f.q() as usize;
    let dim = basis.len();
    let mut out = Vec::new();
    for code in 1..q.pow(dim as u32) {
        let mut c = code;
        let mut x = [0u8; 5];
        for b in basis {
            let a = (c % q) as u8;
            c /= q;
            for (xi, &bi) in x.iter_mut().zip(b) {
                *xi = f.add(*xi, f.mul(a, bi));
            }
        }
        if let Some(l) = ProjLine::through(f, &x) {
            out.push(l);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Membership in `C` and the label `(ε, δ)`. Membership is the rank profile
/// `rank(g-1) = 4`, `rank(g+1) = 3`, `rank((g+1)^2) = 2`, `rank((g+1)^3) = 1`.
/// `ε` is the type of the line `ker(g-1)`; `δ` the common type of the
/// anisotropic lines in `ker(g+1)`.
pub fn in_class_c(space: &QuadraticSpace5, g: &OrthElement) -> Result<Option<ClassCLabel>> {
    let r = ranks(space, g.matrix());
    if r.minus_one != 4 || r.plus_one != [3, 2, 1] {
        return Ok(None);
    }
    let f = space.field();
    let fixed = matrix::kernel(f, &matrix::add_scalar(f, g.matrix(), f.minus_one()));
    let fixed_line = ProjLine::through(f, &fixed[0]).expect("kernel basis vector is nonzero");
    let epsilon = match space.line_type(&fixed_line) {
        LineType::Isotropic => {
            return Err(Error::InconsistentClassC(format!(
                "isotropic fixed line {:?}",
                fixed_line.rep()
            )))
        }
        t => t.sign() as i8,
    };
    let minus = matrix::kernel(f, &matrix::add_scalar(f, g.matrix(), 1));
    let mut delta = None;
    for l in line_of_kernel(space, &minus) {
        let t = space.line_type(&l);
        if t == LineType::Isotropic {
            continue;
        }
        let s = t.sign() as i8;
        match delta {
            None => delta = Some(s),
            Some(d) if d != s => {
                return Err(Error::InconsistentClassC(format!(
                    "lines of both types in ker(g+1) of {:?}",
                    g.matrix()
                )))
            }
            _ => {}
        }
    }
    let delta = delta.ok_or_else(|| {
        Error::InconsistentClassC(format!("no anisotropic line in ker(g+1) of {:?}", g.matrix()))
    })?;
    Ok(Some(ClassCLabel { epsilon, delta }))
}

/// `2 δ q` on `C^{ε,δ}`, zero elsewhere.
pub fn phi(space: &QuadraticSpace5, g: &OrthElement) -> Result<i64> {
    Ok(match in_class_c(space, g)? {
        Some(l) => 2 * l.delta as i64 * space.field().q() as i64,
        None => 0,
    })
}

/// `2 #{L of type +1 : g|_L = -1} - 2 #{L of type -1 : g|_L = -1}`, over
/// the given anisotropic lines.
pub fn trace_phi_over(space: &QuadraticSpace5, lines: &[(ProjLine, LineType)], g: &OrthElement) -> i64 {
    let minus = space.field().minus_one();
    lines
        .iter()
        .filter(|(l, _)| fixed_line_scalar(space, g, l) == Some(minus))
        .map(|(_, t)| 2 * t.sign())
        .sum()
}

/// All anisotropic lines with their types.
pub fn anisotropic_lines(space: &QuadraticSpace5) -> Vec<(ProjLine, LineType)> {
    ProjLine::all(space.field())
        .into_iter()
        .map(|l| (l, space.line_type(&l)))
        .filter(|(_, t)| *t != LineType::Isotropic)
        .collect()
}

/// [`trace_phi_over`] with all anisotropic lines.
pub fn trace_phi(space: &QuadraticSpace5, g: &OrthElement) -> i64 {
    trace_phi_over(space, &anisotropic_lines(space), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::so5::matrix::IDENTITY;

    fn s3() -> QuadraticSpace5 {
        QuadraticSpace5::standard(3).unwrap()
    }

    #[test]
    fn identity() {
        let s = s3();
        let id = OrthElement::new(&s, IDENTITY).unwrap();
        assert_eq!(in_class_c(&s, &id).unwrap(), None);
        assert_eq!(phi(&s, &id).unwrap(), 0);
        assert_eq!(trace_phi(&s, &id), 0);
        for l in ProjLine::all(s.field()) {
            assert_eq!(fixed_line_scalar(&s, &id, &l), Some(1));
        }
    }

    #[test]
    fn minus_reflection_is_semisimple_not_in_c() {
        let s = s3();
        let g = OrthElement::new(
            &s,
            [
                [1, 0, 0, 0, 0],
                [0, 2, 0, 0, 0],
                [0, 0, 2, 0, 0],
                [0, 0, 0, 2, 0],
                [0, 0, 0, 0, 2],
            ],
        )
        .unwrap();
        assert_eq!(in_class_c(&s, &g).unwrap(), None);
        assert!(!is_unipotent_22_type(&s, &g));
        // equal numbers of each type inside a nondegenerate 4-space
        assert_eq!(trace_phi(&s, &g), 0);
        let e1 = ProjLine::through(s.field(), &[1, 0, 0, 0, 0]).unwrap();
        let e2 = ProjLine::through(s.field(), &[0, 1, 0, 0, 0]).unwrap();
        let e12 = ProjLine::through(s.field(), &[1, 1, 0, 0, 0]).unwrap();
        assert_eq!(fixed_line_scalar(&s, &g, &e1), Some(1));
        assert_eq!(fixed_line_scalar(&s, &g, &e2), Some(2));
        assert_eq!(fixed_line_scalar(&s, &g, &e12), None);
    }

    #[test]
    fn label_display() {
        assert_eq!(ClassCLabel::ALL[1].to_string(), "C(+1,-1)");
    }
}
