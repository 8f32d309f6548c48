//! 5x5 matrices over `F_q`. Row-major; matrices act on column vectors.

#![allow(clippy::needless_range_loop)]

use super::field::PrimeField;

pub type Vec5 = [u8; 5];
pub type Mat5 = [[u8; 5]; 5];

pub const IDENTITY: Mat5 = {
    let mut m = [[0u8; 5]; 5];
    let mut i = 0;
    while i < 5 {
        m[i][i] = 1;
        i += 1;
    }
    m
};

pub fn mul(f: &PrimeField, a: &Mat5, b: &Mat5) -> Mat5 {
    let q = f.q();
    let mut out = [[0u8; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            let mut s = 0u32;
            for k in 0..5 {
                s += a[i][k] as u32 * b[k][j] as u32;
            }
            out[i][j] = (s % q) as u8;
        }
    }
    out
}

pub fn apply(f: &PrimeField, a: &Mat5, x: &Vec5) -> Vec5 {
    let q = f.q();
    let mut out = [0u8; 5];
    for i in 0..5 {
        let mut s = 0u32;
        for k in 0..5 {
            s += a[i][k] as u32 * x[k] as u32;
        }
        out[i] = (s % q) as u8;
    }
    out
}

pub fn transpose(a: &Mat5) -> Mat5 {
    let mut out = [[0u8; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i][j] = a[j][i];
        }
    }
    out
}

/// `a + c * I`.
pub fn add_scalar(f: &PrimeField, a: &Mat5, c: u8) -> Mat5 {
    let mut out = *a;
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = f.add(row[i], c);
    }
    out
}

fn to_rows(a: &Mat5) -> Vec<Vec<u8>> {
    a.iter().map(|r| r.to_vec()).collect()
}

/// Row echelon form in place; returns the rank and the determinant factor
/// (product of pivots with row-swap signs), meaningful for square input.
fn eliminate(f: &PrimeField, m: &mut [Vec<u8>]) -> (usize, u8) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut det = 1u8;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            det = 0;
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            det = f.neg(det);
        }
        let pivot = m[rank][c];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot);
        for r in rank + 1..rows {
            let factor = f.mul(m[r][c], inv);
            if factor == 0 {
                continue;
            }
            for k in c..cols {
                let t = f.mul(factor, m[rank][k]);
                m[r][k] = f.sub(m[r][k], t);
            }
        }
        rank += 1;
    }
    (rank, det)
}

pub fn rank(f: &PrimeField, a: &Mat5) -> usize {
    eliminate(f, &mut to_rows(a)).0
}

pub fn rank_of(f: &PrimeField, rows: &[Vec<u8>]) -> usize {
    eliminate(f, &mut rows.to_vec()).0
}

pub fn det(f: &PrimeField, a: &Mat5) -> u8 {
    det_of(f, &to_rows(a))
}

/// Determinant of a square matrix of any size.
pub fn det_of(f: &PrimeField, rows: &[Vec<u8>]) -> u8 {
    debug_assert!(rows.iter().all(|r| r.len() == rows.len()));
    let (rank, det) = eliminate(f, &mut rows.to_vec());
    if rank < rows.len() {
        0
    } else {
        det
    }
}

/// Inverse by Gauss-Jordan; `None` when singular.
pub fn inverse(f: &PrimeField, a: &Mat5) -> Option<Mat5> {
    let mut m: Vec<Vec<u8>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.to_vec();
            row.extend((0..5).map(|j| u8::from(i == j)));
            row
        })
        .collect();
    for c in 0..5 {
        let p = (c..5).find(|&r| m[r][c] != 0)?;
        m.swap(p, c);
        let inv = f.inv(m[c][c]);
        for k in 0..10 {
            m[c][k] = f.mul(m[c][k], inv);
        }
        for r in 0..5 {
            if r != c && m[r][c] != 0 {
                let factor = m[r][c];
                for k in 0..10 {
                    let t = f.mul(factor, m[c][k]);
                    m[r][k] = f.sub(m[r][k], t);
                }
            }
        }
    }
    let mut out = [[0u8; 5]; 5];
    for i in 0..5 {
        out[i].copy_from_slice(&m[i][5..]);
    }
    Some(out)
}

/// A basis of `{x : a x = 0}`.
pub fn kernel(f: &PrimeField, a: &Mat5) -> Vec<Vec5> {
    // reduced row echelon form
    let mut m = to_rows(a);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..5 {
        let Some(p) = (r..5).find(|&i| m[i][c] != 0) else { continue };
        m.swap(p, r);
        let inv = f.inv(m[r][c]);
        for k in 0..5 {
            m[r][k] = f.mul(m[r][k], inv);
        }
        for i in 0..5 {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for k in 0..5 {
                    let t = f.mul(factor, m[r][k]);
                    m[i][k] = f.sub(m[i][k], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..5)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = [0u8; 5];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[row][free]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let f = f3();
        assert_eq!(rank(&f, &IDENTITY), 5);
        assert_eq!(det(&f, &IDENTITY), 1);
        let a: Mat5 = [
            [1, 2, 0, 0, 1],
            [0, 1, 1, 0, 0],
            [2, 0, 1, 1, 0],
            [0, 0, 0, 1, 2],
            [1, 1, 1, 1, 1],
        ];
        if let Some(inv) = inverse(&f, &a) {
            assert_eq!(mul(&f, &a, &inv), IDENTITY);
            assert_ne!(det(&f, &a), 0);
        } else {
            assert_eq!(det(&f, &a), 0);
        }
    }

    #[test]
    fn kernel_dimension_matches_rank() {
        let f = f3();
        let a: Mat5 = [
            [1, 1, 0, 0, 0],
            [2, 2, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0],
        ];
        let k = kernel(&f, &a);
        assert_eq!(k.len(), 5 - rank(&f, &a));
        for v in k {
            assert_eq!(apply(&f, &a, &v), [0; 5]);
        }
    }

    #[test]
    fn det_sign_under_swap() {
        let f = PrimeField::new(5).unwrap();
        let mut p = IDENTITY;
        p.swap(0, 1);
        assert_eq!(det(&f, &p), 4);
    }
}
