//! Integer matrices and the Smith normal form.
//!
//! Arbitrary-precision arithmetic throughout; the complexes this crate
//! meets are desk-scale, so correctness wins over speed.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl core::fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "IntegerMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                write!(f, " {}", self.get(r, c))?;
            }
            writeln!(f, " ]")?;
        }
        Ok(())
    }
}

impl IntegerMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntegerMatrix {
            rows,
            cols,
            entries: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + &a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let at = |m: &Vec<BigInt>, r: usize, c: usize| m[r * n + c].clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if at(&m, k, k).is_zero() {
                let swap = (k + 1..n).find(|&r| !at(&m, r, k).is_zero());
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (at(&m, i, j) * at(&m, k, k) - at(&m, i, k) * at(&m, k, j)) / &prev;
                    m[i * n + j] = v;
                }
            }
            prev = at(&m, k, k);
        }
        sign * at(&m, n - 1, n - 1)
    }
}

/// Result of a Smith normal form computation: `u * m * v = d` with
/// unimodular `u`, `v` and `d` diagonal with a divisibility chain
/// d_1 | d_2 | … and every d_i >= 0.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries d_1, d_2, … (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let rows = m.rows;
    let cols = m.cols;
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    let swap_rows = |d: &mut IntegerMatrix, u: &mut IntegerMatrix, a: usize, b: usize| {
        if a == b {
            return;
        }
        for c in 0..d.cols {
            let x = d.get(a, c).clone();
            let y = d.get(b, c).clone();
            d.set(a, c, y);
            d.set(b, c, x);
        }
        for c in 0..u.cols {
            let x = u.get(a, c).clone();
            let y = u.get(b, c).clone();
            u.set(a, c, y);
            u.set(b, c, x);
        }
    };
    let swap_cols = |d: &mut IntegerMatrix, v: &mut IntegerMatrix, a: usize, b: usize| {
        if a == b {
            return;
        }
        for r in 0..d.rows {
            let x = d.get(r, a).clone();
            let y = d.get(r, b).clone();
            d.set(r, a, y);
            d.set(r, b, x);
        }
        for r in 0..v.rows {
            let x = v.get(r, a).clone();
            let y = v.get(r, b).clone();
            v.set(r, a, y);
            v.set(r, b, x);
        }
    };
    // row_i -= q * row_t, mirrored into u
    let add_row = |d: &mut IntegerMatrix, u: &mut IntegerMatrix, i: usize, t: usize, q: &BigInt| {
        for c in 0..d.cols {
            let val = d.get(i, c) - q * d.get(t, c);
            d.set(i, c, val);
        }
        for c in 0..u.cols {
            let val = u.get(i, c) - q * u.get(t, c);
            u.set(i, c, val);
        }
    };
    let add_col = |d: &mut IntegerMatrix, v: &mut IntegerMatrix, j: usize, t: usize, q: &BigInt| {
        for r in 0..d.rows {
            let val = d.get(r, j) - q * d.get(r, t);
            d.set(r, j, val);
        }
        for r in 0..v.rows {
            let val = v.get(r, j) - q * v.get(r, t);
            v.set(r, j, val);
        }
    };

    let n = rows.min(cols);
    for t in 0..n {
        'pivot: loop {
            // smallest nonzero |entry| in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for r in t..rows {
                for c in t..cols {
                    if !d.get(r, c).is_zero()
                        && best
                            .map(|(br, bc)| d.get(r, c).abs() < d.get(br, bc).abs())
                            .unwrap_or(true)
                    {
                        best = Some((r, c));
                    }
                }
            }
            let Some((pr, pc)) = best else { break 'pivot };
            swap_rows(&mut d, &mut u, t, pr);
            swap_cols(&mut d, &mut v, t, pc);

            let mut dirty = false;
            for i in t + 1..rows {
                if !d.get(i, t).is_zero() {
                    let q = d.get(i, t) / d.get(t, t);
                    add_row(&mut d, &mut u, i, t, &q);
                    if !d.get(i, t).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if !d.get(t, j).is_zero() {
                    let q = d.get(t, j) / d.get(t, t);
                    add_col(&mut d, &mut v, j, t, &q);
                    if !d.get(t, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'pivot;
            }
            // pivot row/col clean; enforce divisibility into the rest
            let pivot = d.get(t, t).clone();
            let mut offender = None;
            'scan: for r in t + 1..rows {
                for c in t + 1..cols {
                    if !(d.get(r, c) % &pivot).is_zero() {
                        offender = Some(r);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(r) => {
                    let one = BigInt::from(-1);
                    add_row(&mut d, &mut u, t, r, &one); // row_t += row_r
                    continue 'pivot;
                }
                None => break 'pivot,
            }
        }
    }
    // sign normalization
    for t in 0..n {
        if d.get(t, t).is_negative() {
            for c in 0..cols {
                let val = -d.get(t, c).clone();
                d.set(t, c, val);
            }
            for c in 0..rows {
                let val = -u.get(t, c).clone();
                u.set(t, c, val);
            }
        }
    }
    SmithDecomposition { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn check_snf(m: &IntegerMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "u*m*v != d");
        assert!(snf.u.det().abs().is_one(), "u not unimodular");
        assert!(snf.v.det().abs().is_one(), "v not unimodular");
        let diag = snf.diagonal();
        for i in 0..diag.len() {
            assert!(!diag[i].is_negative());
            if i + 1 < diag.len() && !diag[i].is_zero() {
                assert!((&diag[i + 1] % &diag[i]).is_zero(), "no divisibility chain");
            }
            if diag[i].is_zero() && i + 1 < diag.len() {
                assert!(diag[i + 1].is_zero());
            }
        }
        // off-diagonal zero
        for r in 0..snf.d.rows() {
            for c in 0..snf.d.cols() {
                if r != c {
                    assert!(snf.d.get(r, c).is_zero());
                }
            }
        }
        snf
    }

    #[test]
    fn snf_diag_2_3_gives_1_6() {
        let m = IntegerMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let snf = check_snf(&m);
        let d: Vec<i64> = snf
            .diagonal()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(d, vec![1, 6]);
    }

    #[test]
    fn snf_identity_is_identity() {
        let m = IntegerMatrix::identity(3);
        let snf = check_snf(&m);
        assert_eq!(snf.d, IntegerMatrix::identity(3));
    }

    #[test]
    fn snf_already_diagonal() {
        let m = IntegerMatrix::from_i64(2, 2, &[2, 0, 0, 2]);
        let snf = check_snf(&m);
        let d: Vec<i64> = snf
            .diagonal()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(d, vec![2, 2]);
    }

    #[test]
    fn snf_random_and_cokernel_order() {
        let mut rng = Rng::new(77);
        for _ in 0..40 {
            let r = 1 + rng.below_usize(4);
            let c = 1 + rng.below_usize(4);
            let entries: Vec<i64> = (0..r * c).map(|_| rng.below(11) as i64 - 5).collect();
            let m = IntegerMatrix::from_i64(r, c, &entries);
            let snf = check_snf(&m);
            if r == c {
                let det = m.det().abs();
                if !det.is_zero() {
                    let product = snf
                        .diagonal()
                        .iter()
                        .fold(num_bigint::BigInt::from(1), |acc, d| acc * d);
                    assert_eq!(product, det, "cokernel order mismatch");
                }
            }
        }
    }
}
