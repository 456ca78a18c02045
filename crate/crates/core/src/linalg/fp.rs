//! Dense matrices over the prime field F_p.
//!
//! Entries are residues in `[0, p)` stored row-major. Row reduction picks
//! the first nonzero entry in column order, so every routine is
//! deterministic and reproducible.

use alloc::vec;
use alloc::vec::Vec;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; p is prime and a nonzero mod p.
    debug_assert!(!a.is_multiple_of(p));
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    (t.rem_euclid(p as i128)) as u64
}

#[derive(Clone, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    prime: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl core::fmt::Debug for PrimeFieldMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(
            f,
            "PrimeFieldMatrix {}x{} mod {}",
            self.rows, self.cols, self.prime
        )?;
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

impl PrimeFieldMatrix {
    pub fn zero(prime: u64, rows: usize, cols: usize) -> Self {
        assert!(prime >= 2);
        PrimeFieldMatrix {
            prime,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(prime: u64, n: usize) -> Self {
        let mut m = Self::zero(prime, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed integer entries, reducing mod p.
    pub fn from_signed(prime: u64, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let data = entries
            .iter()
            .map(|&e| (e.rem_euclid(prime as i64)) as u64)
            .collect();
        PrimeFieldMatrix {
            prime,
            rows,
            cols,
            entries: data,
        }
    }

    pub fn from_rows(prime: u64, cols: usize, rows: &[Vec<u64>]) -> Self {
        let mut m = Self::zero(prime, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v % prime);
            }
        }
        m
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.entries[r * self.cols + c] = v % self.prime;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.prime, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols, self.prime),
            (other.rows, other.cols, other.prime)
        );
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a + b) % self.prime)
            .collect();
        PrimeFieldMatrix {
            prime: self.prime,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols, self.prime),
            (other.rows, other.cols, other.prime)
        );
        let p = self.prime;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        PrimeFieldMatrix {
            prime: p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn neg(&self) -> Self {
        let p = self.prime;
        let entries = self.entries.iter().map(|&a| (p - a) % p).collect();
        PrimeFieldMatrix {
            prime: p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn scale(&self, s: u64) -> Self {
        let p = self.prime;
        let s = s % p;
        let entries = self.entries.iter().map(|&a| mul_mod(a, s, p)).collect();
        PrimeFieldMatrix {
            prime: p,
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        assert_eq!(self.prime, other.prime);
        let p = self.prime;
        let mut out = Self::zero(p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + mul_mod(a, other.get(k, j), p)) % p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row-vector image `v * self`.
    pub fn apply_row(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.rows);
        let p = self.prime;
        let mut out = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..self.cols {
                out[j] = (out[j] + mul_mod(a, self.get(k, j), p)) % p;
            }
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.prime, other.prime);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        PrimeFieldMatrix {
            prime: self.prime,
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.prime, other.prime);
        let mut m = Self::zero(self.prime, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c));
            }
        }
        m
    }

    /// Writes `block` into `self` with top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) {
        assert_eq!(self.prime, block.prime);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }

    /// Reduced row echelon form, returning (rref, pivot columns).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let p = self.prime;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // first nonzero entry in column order
            let found = (pivot_row..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(r) = found else { continue };
            if r != pivot_row {
                for c in 0..m.cols {
                    let (a, b) = (m.get(pivot_row, c), m.get(r, c));
                    m.set(pivot_row, c, b);
                    m.set(r, c, a);
                }
            }
            let inv = inv_mod(m.get(pivot_row, col), p);
            for c in col..m.cols {
                let v = mul_mod(m.get(pivot_row, c), inv, p);
                m.set(pivot_row, c, v);
            }
            for r2 in 0..m.rows {
                if r2 == pivot_row {
                    continue;
                }
                let f = m.get(r2, col);
                if f == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = (m.get(r2, c) + p - mul_mod(f, m.get(pivot_row, c), p)) % p;
                    m.set(r2, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel `{x : self * x = 0}`, one vector per free
    /// column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let p = self.prime;
        let (rref, pivots) = self.rref();
        let mut is_pivot = vec![usize::MAX; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            is_pivot[c] = i;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] != usize::MAX {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let coeff = rref.get(i, free);
                if coeff != 0 {
                    v[pc] = p - coeff;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the left kernel `{v : v * self = 0}`.
    pub fn left_kernel_basis(&self) -> Vec<Vec<u64>> {
        self.transpose().kernel_basis()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.prime, n));
        let (rref, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zero(self.prime, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, rref.get(r, n + c));
            }
        }
        Some(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;

    fn random_matrix(rng: &mut Rng, p: u64, rows: usize, cols: usize) -> PrimeFieldMatrix {
        let mut m = PrimeFieldMatrix::zero(p, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rng.below(p));
            }
        }
        m
    }

    #[test]
    fn rank_identity() {
        assert_eq!(PrimeFieldMatrix::identity(5, 2).rank(), 2);
    }

    #[test]
    fn rank_zero_matrix() {
        assert_eq!(PrimeFieldMatrix::zero(2, 3, 4).rank(), 0);
    }

    #[test]
    fn rank_all_ones_f2() {
        let m = PrimeFieldMatrix::from_signed(2, 2, 2, &[1, 1, 1, 1]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(PrimeFieldMatrix::identity(7, 3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_2x2_f3() {
        let k = PrimeFieldMatrix::zero(3, 2, 2).kernel_basis();
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn kernel_of_1x2_f3() {
        // x + 2y = 0 mod 3 has the solution line through (1, 1).
        let m = PrimeFieldMatrix::from_signed(3, 1, 2, &[1, 2]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!((v[0] + 2 * v[1]) % 3, 0);
        assert!(v.iter().any(|&x| x != 0));
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = Rng::new(11);
        for _ in 0..60 {
            let p = [2u64, 3, 5][rng.below_usize(3)];
            let r = 1 + rng.below_usize(6);
            let c = 1 + rng.below_usize(6);
            let m = random_matrix(&mut rng, p, r, c);
            assert_eq!(m.rank(), m.transpose().rank());
        }
    }

    #[test]
    fn kernel_vectors_annihilated() {
        let mut rng = Rng::new(23);
        for _ in 0..40 {
            let p = [2u64, 3, 5][rng.below_usize(3)];
            let r = 1 + rng.below_usize(5);
            let c = 1 + rng.below_usize(5);
            let m = random_matrix(&mut rng, p, r, c);
            let kernel = m.kernel_basis();
            assert_eq!(kernel.len(), m.cols() - m.rank());
            for v in kernel {
                let tv = m.transpose().apply_row(&v);
                assert!(tv.iter().all(|&x| x == 0), "kernel vector not annihilated");
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = Rng::new(5);
        let mut found = 0;
        while found < 20 {
            let p = [2u64, 3, 5][rng.below_usize(3)];
            let n = 1 + rng.below_usize(4);
            let m = random_matrix(&mut rng, p, n, n);
            if let Some(inv) = m.inverse() {
                assert_eq!(m.mul(&inv), PrimeFieldMatrix::identity(p, n));
                assert_eq!(inv.mul(&m), PrimeFieldMatrix::identity(p, n));
                found += 1;
            }
        }
    }
}
