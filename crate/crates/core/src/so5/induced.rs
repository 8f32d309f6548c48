//! Induced characters from the stabilizer `H` of a nondegenerate 4-space
//! `U0 = L0^⊥`, evaluated literally through a coset transversal.

use std::collections::BTreeMap;

use super::matrix::{self, Mat5, Vec5};
use super::space::{LineType, OrthElement, ProjLine, QuadraticSpace5};
use crate::error::{Error, Result};

/// Whether the form restricted to a 4-space has Witt index 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witt {
    Split,
    NonSplit,
}

/// Characters of `H` used in the induction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupChar {
    Trivial,
    /// Determinant of the action on `U0`.
    Det,
}

#[derive(Debug, Clone)]
pub struct CosetModel {
    space: QuadraticSpace5,
    witt: Witt,
    base: ProjLine,
    /// Basis of `U0`.
    u0: [Vec5; 4],
    /// Change of basis `[x0 | u0]` and its inverse.
    basis: Mat5,
    basis_inv: Mat5,
    transversal: Vec<(Mat5, Mat5)>,
    subgroup_order: u64,
}

/// Witt type of `L^⊥` for an anisotropic line `L`, from the number of
/// nonzero isotropic vectors: `(q^2-1)(q+1)` when split, `(q^2+1)(q-1)`
/// otherwise.
pub fn perp_witt(space: &QuadraticSpace5, line: &ProjLine) -> Witt {
    let f = space.field();
    let q = f.q() as u64;
    let basis = perp_basis(space, line);
    let mut isotropic = 0u64;
    for code in 1..q.pow(4) {
        let x = combine(space, &basis, code);
        if space.dot(&x, &x) == 0 {
            isotropic += 1;
        }
    }
    if isotropic == (q * q - 1) * (q + 1) {
        Witt::Split
    } else {
        debug_assert_eq!(isotropic, (q * q + 1) * (q - 1));
        Witt::NonSplit
    }
}

fn perp_basis(space: &QuadraticSpace5, line: &ProjLine) -> [Vec5; 4] {
    let f = space.field();
    let gx = matrix::apply(f, space.gram(), line.rep());
    let mut row = [[0u8; 5]; 5];
    row[0] = gx;
    let k = matrix::kernel(f, &row);
    assert_eq!(k.len(), 4, "perpendicular of a line is a hyperplane");
    [k[0], k[1], k[2], k[3]]
}

fn combine(space: &QuadraticSpace5, basis: &[Vec5], code: u64) -> Vec5 {
    let f = space.field();
    let q = f.q() as u64;
    let mut c = code;
    let mut x = [0u8; 5];
    for b in basis {
        let a = (c % q) as u8;
        c /= q;
        for (xi, &bi) in x.iter_mut().zip(b) {
            *xi = f.add(*xi, f.mul(a, bi));
        }
    }
    x
}

impl CosetModel {
    /// Builds the model for the given Witt type from a full enumeration of
    /// the group. The base line is the first anisotropic line (in
    /// [`ProjLine::all`] order) whose perpendicular has that type.
    pub fn new(space: &QuadraticSpace5, group: &[OrthElement], witt: Witt) -> Result<Self> {
        let f = space.field();
        let base = ProjLine::all(f)
            .into_iter()
            .find(|l| space.line_type(l) != LineType::Isotropic && perp_witt(space, l) == witt)
            .ok_or_else(|| Error::InvalidParameter("no line with the requested perpendicular".into()))?;
        let u0 = perp_basis(space, &base);
        let mut basis = [[0u8; 5]; 5];
        for i in 0..5 {
            basis[i][0] = base.rep()[i];
            for j in 0..4 {
                basis[i][j + 1] = u0[j][i];
            }
        }
        let basis_inv = matrix::inverse(f, &basis).expect("x0 is not in its own perpendicular");

        let mut reps: BTreeMap<ProjLine, Mat5> = BTreeMap::new();
        let mut subgroup_order = 0u64;
        for g in group {
            let image = matrix::apply(f, g.matrix(), base.rep());
            let l = ProjLine::through(f, &image).expect("g is invertible");
            if l == base {
                subgroup_order += 1;
            }
            reps.entry(l).or_insert(*g.matrix());
        }
        if subgroup_order * reps.len() as u64 != group.len() as u64 {
            return Err(Error::InvalidParameter(format!(
                "orbit-stabilizer mismatch: {} * {} != {}",
                subgroup_order,
                reps.len(),
                group.len()
            )));
        }
        let transversal = reps
            .into_values()
            .map(|x| (x, matrix::inverse(f, &x).expect("group element")))
            .collect();
        Ok(CosetModel {
            space: space.clone(),
            witt,
            base,
            u0,
            basis,
            basis_inv,
            transversal,
            subgroup_order,
        })
    }

    pub fn witt(&self) -> Witt {
        self.witt
    }

    pub fn base_line(&self) -> &ProjLine {
        &self.base
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn subgroup_order(&self) -> u64 {
        self.subgroup_order
    }

    /// `h U0 = U0`.
    pub fn in_subgroup(&self, h: &Mat5) -> bool {
        let f = self.space.field();
        self.u0.iter().all(|u| {
            let hu = matrix::apply(f, h, u);
            self.space.dot(&hu, self.base.rep()) == 0
        })
    }

    /// Value of a character at `h ∈ H`, as `±1`.
    pub fn char_value(&self, chi: SubgroupChar, h: &Mat5) -> i64 {
        match chi {
            SubgroupChar::Trivial => 1,
            SubgroupChar::Det => {
                let f = self.space.field();
                let m = matrix::mul(f, &self.basis_inv, &matrix::mul(f, h, &self.basis));
                let block: Vec<Vec<u8>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
                if matrix::det_of(f, &block) == 1 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    /// `Σ_x [x^{-1} g x ∈ H] χ(x^{-1} g x)` over the transversal.
    pub fn induced_value(&self, chi: SubgroupChar, g: &OrthElement) -> i64 {
        let f = self.space.field();
        self.transversal
            .iter()
            .filter_map(|(x, x_inv)| {
                let h = matrix::mul(f, x_inv, &matrix::mul(f, g.matrix(), x));
                self.in_subgroup(&h).then(|| self.char_value(chi, &h))
            })
            .sum()
    }

    /// `ind(1) - ind(det)` in one pass.
    pub fn difference(&self, g: &OrthElement) -> i64 {
        let f = self.space.field();
        self.transversal
            .iter()
            .filter_map(|(x, x_inv)| {
                let h = matrix::mul(f, x_inv, &matrix::mul(f, g.matrix(), x));
                self.in_subgroup(&h)
                    .then(|| 1 - self.char_value(SubgroupChar::Det, &h))
            })
            .sum()
    }
}

/// `ind_{O+}(1) - ind_{O+}(det) - ind_{O-}(1) + ind_{O-}(det)`.
pub fn phi_coset(split: &CosetModel, nonsplit: &CosetModel, g: &OrthElement) -> i64 {
    debug_assert_eq!(split.witt(), Witt::Split);
    debug_assert_eq!(nonsplit.witt(), Witt::NonSplit);
    split.difference(g) - nonsplit.difference(g)
}
