//! Free graded chain complexes over group rings.
//!
//! A complex is ℤ-graded on a finite support window or ℤ/k-graded
//! (cyclic). Differential matrices act on row vectors from the right:
//! the matrix of ∂_i has shape (rank_i × rank_{i-1}) and d∘d = 0 reads
//! `m_i · m_{i-1} = 0`, checked cyclically in the ℤ/k case.
//!
//! Entries are finite sums `c · g · t^e` with integer or mod-p
//! coefficients, a group element, and an optional Novikov monomial.
//! Tensoring with a representation blows each entry up to an r×r block
//! and forgets the monomials; homology and the minimal model then run
//! over the prime field. A truncated-series Gaussian elimination is kept
//! alongside as a cross-check for small complexes.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::FiniteGroup;
use crate::linalg::PrimeFieldMatrix;
use crate::novikov::{FpScalar, NovikovCoeff, NovikovContext, NovikovSeries};
use crate::rep::Representation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    ShapeMismatch {
        degree: i64,
        detail: String,
    },
    GroupMismatch,
    PrimeMismatch,
    NotFieldCoefficients,
    NotScalar,
    BadModulus,
    NotZGraded,
    BadEntry {
        degree: i64,
        row: usize,
        col: usize,
        detail: String,
    },
    SeriesElimination(String),
}

impl core::fmt::Display for ComplexError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ComplexError::ShapeMismatch { degree, detail } => {
                write!(
                    f,
                    "differential at degree {degree} has a bad shape: {detail}"
                )
            }
            ComplexError::GroupMismatch => write!(f, "complex and representation group differ"),
            ComplexError::PrimeMismatch => write!(f, "coefficient primes differ"),
            ComplexError::NotFieldCoefficients => {
                write!(f, "operation needs prime-field coefficients")
            }
            ComplexError::NotScalar => {
                write!(
                    f,
                    "operation needs scalar entries (trivial group, no monomials)"
                )
            }
            ComplexError::BadModulus => write!(f, "folding modulus must be at least 2"),
            ComplexError::NotZGraded => write!(f, "operation needs a Z-graded complex"),
            ComplexError::BadEntry {
                degree,
                row,
                col,
                detail,
            } => {
                write!(f, "bad entry at degree {degree}, ({row},{col}): {detail}")
            }
            ComplexError::SeriesElimination(detail) => {
                write!(f, "series elimination failed: {detail}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Integer,
    PrimeField(u64),
}

/// One term of a group-ring entry: coefficient, group element index and a
/// Novikov exponent vector (empty when the complex carries no monomials).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GrTerm {
    pub elem: usize,
    pub expo: Vec<i64>,
    pub coeff: i64,
}

/// Entry of a differential: a normalized term list (sorted by element and
/// monomial, no zero coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupRingEntry {
    terms: Vec<GrTerm>,
}

impl GroupRingEntry {
    pub fn zero() -> Self {
        GroupRingEntry { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<GrTerm>, coeffs: Coefficients) -> Self {
        let mut map: BTreeMap<(usize, Vec<i64>), i64> = BTreeMap::new();
        for t in terms {
            *map.entry((t.elem, t.expo)).or_insert(0) += t.coeff;
        }
        let mut out = Vec::new();
        for ((elem, expo), mut coeff) in map {
            if let Coefficients::PrimeField(p) = coeffs {
                coeff = coeff.rem_euclid(p as i64);
            }
            if coeff != 0 {
                out.push(GrTerm { elem, expo, coeff });
            }
        }
        GroupRingEntry { terms: out }
    }

    pub fn scalar(c: i64, coeffs: Coefficients) -> Self {
        Self::from_terms(
            vec![GrTerm {
                elem: 0,
                expo: Vec::new(),
                coeff: c,
            }],
            coeffs,
        )
    }

    pub fn terms(&self) -> &[GrTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self, coeffs: Coefficients) -> Self {
        let mut all = self.terms.clone();
        all.extend(other.terms.iter().cloned());
        Self::from_terms(all, coeffs)
    }

    fn mul(&self, other: &Self, group: &FiniteGroup, coeffs: Coefficients) -> Self {
        let mut all = Vec::new();
        for t1 in &self.terms {
            for t2 in &other.terms {
                let expo = if t1.expo.is_empty() && t2.expo.is_empty() {
                    Vec::new()
                } else {
                    let n = t1.expo.len().max(t2.expo.len());
                    (0..n)
                        .map(|i| {
                            t1.expo.get(i).copied().unwrap_or(0)
                                + t2.expo.get(i).copied().unwrap_or(0)
                        })
                        .collect()
                };
                all.push(GrTerm {
                    elem: group.mul(t1.elem, t2.elem),
                    expo,
                    coeff: t1.coeff * t2.coeff,
                });
            }
        }
        Self::from_terms(all, coeffs)
    }
}

/// Matrix over a group ring (rows × cols, row-major).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingEntry>,
}

impl GroupRingMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        GroupRingMatrix {
            rows,
            cols,
            entries: vec![GroupRingEntry::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &GroupRingEntry {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: GroupRingEntry) {
        self.entries[r * self.cols + c] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup, coeffs: Coefficients) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.mul(other.get(k, j), group, coeffs);
                    if !prod.is_zero() {
                        let sum = out.get(i, j).add(&prod, coeffs);
                        out.set(i, j, sum);
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Finite support window starting at `lo` (inclusive).
    Z { lo: i64 },
    /// Cyclic grading mod k, k >= 2.
    Mod(usize),
}

/// Free graded chain complex over ℤ[G] or F_p[G], optionally carrying
/// Novikov monomials in its entries.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    group: Arc<FiniteGroup>,
    coefficients: Coefficients,
    grading: Grading,
    ranks: Vec<usize>,
    /// `differentials[j]` is the matrix of ∂ out of slot j into slot j-1
    /// (cyclically for Mod). For Z-graded complexes slot 0 maps out of the
    /// window and its matrix has zero columns.
    differentials: Vec<GroupRingMatrix>,
}

impl GradedComplex {
    pub fn new(
        group: Arc<FiniteGroup>,
        coefficients: Coefficients,
        grading: Grading,
        ranks: Vec<usize>,
        differentials: Vec<GroupRingMatrix>,
    ) -> Result<Self, ComplexError> {
        if let Grading::Mod(k) = grading {
            if k < 2 {
                return Err(ComplexError::BadModulus);
            }
            if ranks.len() != k {
                return Err(ComplexError::ShapeMismatch {
                    degree: 0,
                    detail: alloc::format!("expected {k} ranks, got {}", ranks.len()),
                });
            }
        }
        if differentials.len() != ranks.len() {
            return Err(ComplexError::ShapeMismatch {
                degree: 0,
                detail: alloc::format!(
                    "expected {} differentials, got {}",
                    ranks.len(),
                    differentials.len()
                ),
            });
        }
        let c = GradedComplex {
            group,
            coefficients,
            grading,
            ranks,
            differentials,
        };
        for j in 0..c.slots() {
            let expected_cols = match c.grading {
                Grading::Z { .. } => {
                    if j == 0 {
                        0
                    } else {
                        c.ranks[j - 1]
                    }
                }
                Grading::Mod(k) => c.ranks[(j + k - 1) % k],
            };
            let m = &c.differentials[j];
            if m.rows() != c.ranks[j] || m.cols() != expected_cols {
                return Err(ComplexError::ShapeMismatch {
                    degree: c.degree_of_slot(j),
                    detail: alloc::format!(
                        "matrix is {}x{}, expected {}x{}",
                        m.rows(),
                        m.cols(),
                        c.ranks[j],
                        expected_cols
                    ),
                });
            }
            for (idx, e) in m.entries.iter().enumerate() {
                for t in e.terms() {
                    if t.elem >= c.group.order() {
                        return Err(ComplexError::BadEntry {
                            degree: c.degree_of_slot(j),
                            row: idx / m.cols.max(1),
                            col: idx % m.cols.max(1),
                            detail: alloc::format!("element index {} out of range", t.elem),
                        });
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn group_handle(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn differentials(&self) -> &[GroupRingMatrix] {
        &self.differentials
    }

    pub fn slots(&self) -> usize {
        self.ranks.len()
    }

    pub fn degree_of_slot(&self, j: usize) -> i64 {
        match self.grading {
            Grading::Z { lo } => lo + j as i64,
            Grading::Mod(_) => j as i64,
        }
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Number of slots the differential out of slot j targets, if any.
    fn target_slot(&self, j: usize) -> Option<usize> {
        match self.grading {
            Grading::Z { .. } => j.checked_sub(1),
            Grading::Mod(k) => Some((j + k - 1) % k),
        }
    }

    /// Checks d∘d = 0 identically in the group ring (cyclically for the
    /// mod-k grading, wrap-around composites included).
    pub fn boundary_squares_to_zero(&self) -> bool {
        for j in 0..self.slots() {
            let Some(mid) = self.target_slot(j) else {
                continue;
            };
            if self.target_slot(mid).is_none() {
                continue;
            }
            let composite =
                self.differentials[j].mul(&self.differentials[mid], &self.group, self.coefficients);
            if !composite.is_zero() {
                return false;
            }
        }
        true
    }

    /// Tensors with a representation of the complex's group: ranks are
    /// multiplied by dim ρ, each group-ring entry becomes the r×r block
    /// Σ c·ρ(g), and Novikov monomials are forgotten. The result is a
    /// scalar complex over F_p (trivial group).
    pub fn tensor_with_rep(&self, rho: &Representation) -> Result<GradedComplex, ComplexError> {
        if !(Arc::ptr_eq(&self.group, rho.group_handle()) || self.group == *rho.group_handle()) {
            return Err(ComplexError::GroupMismatch);
        }
        if let Coefficients::PrimeField(p) = self.coefficients {
            if p != rho.prime() {
                return Err(ComplexError::PrimeMismatch);
            }
        }
        let p = rho.prime();
        let r = rho.dim();
        let images = rho.element_images();
        let trivial = Arc::new(FiniteGroup::trivial());
        let new_ranks: Vec<usize> = self.ranks.iter().map(|&m| m * r).collect();
        let mut new_diffs = Vec::with_capacity(self.slots());
        for m in &self.differentials {
            let mut block = PrimeFieldMatrix::zero(p, m.rows() * r, m.cols() * r);
            for row in 0..m.rows() {
                for col in 0..m.cols() {
                    let e = m.get(row, col);
                    if e.is_zero() {
                        continue;
                    }
                    let mut acc = PrimeFieldMatrix::zero(p, r, r);
                    for t in e.terms() {
                        let c = t.coeff.rem_euclid(p as i64) as u64;
                        if c != 0 {
                            acc = acc.add(&images[t.elem].scale(c));
                        }
                    }
                    block.set_block(row * r, col * r, &acc);
                }
            }
            new_diffs.push(scalar_to_group_ring(&block));
        }
        GradedComplex::new(
            trivial,
            Coefficients::PrimeField(p),
            self.grading.clone(),
            new_ranks,
            new_diffs,
        )
    }

    /// Extracts the plain matrices of a scalar complex (prime-field
    /// coefficients, trivial group, no monomials).
    pub fn scalar_differentials(&self) -> Result<Vec<PrimeFieldMatrix>, ComplexError> {
        let Coefficients::PrimeField(p) = self.coefficients else {
            return Err(ComplexError::NotFieldCoefficients);
        };
        let mut out = Vec::with_capacity(self.slots());
        for m in &self.differentials {
            let mut mat = PrimeFieldMatrix::zero(p, m.rows(), m.cols());
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    let e = m.get(r, c);
                    let mut v: i64 = 0;
                    for t in e.terms() {
                        if t.elem != self.group.identity() || t.expo.iter().any(|&x| x != 0) {
                            return Err(ComplexError::NotScalar);
                        }
                        v += t.coeff;
                    }
                    mat.set(r, c, v.rem_euclid(p as i64) as u64);
                }
            }
            out.push(mat);
        }
        Ok(out)
    }

    /// Homology dimension per slot for a scalar field complex:
    /// dim ker ∂_j − rank ∂_{j+1}, cyclically for the mod-k grading.
    pub fn homology_dims(&self) -> Result<Vec<usize>, ComplexError> {
        let mats = self.scalar_differentials()?;
        let ranks_of: Vec<usize> = mats.iter().map(|m| m.rank()).collect();
        let n = self.slots();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let incoming = match self.grading {
                Grading::Z { .. } => {
                    if j + 1 < n {
                        ranks_of[j + 1]
                    } else {
                        0
                    }
                }
                Grading::Mod(k) => ranks_of[(j + 1) % k],
            };
            let kernel = self.ranks[j] - ranks_of[j];
            out.push(kernel - incoming);
        }
        Ok(out)
    }

    /// Folds a Z-graded complex to a ℤ/k-graded one:
    /// the folded slot i collects every degree ≡ i (mod k), and the folded
    /// differential is assembled blockwise from the original ones.
    pub fn fold(&self, k: usize) -> Result<GradedComplex, ComplexError> {
        let Grading::Z { lo } = self.grading else {
            return Err(ComplexError::NotZGraded);
        };
        if k < 2 {
            return Err(ComplexError::BadModulus);
        }
        let n = self.slots();
        let residue_of = |j: usize| ((lo + j as i64).rem_euclid(k as i64)) as usize;
        // positions of each original slot inside its folded slot
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
        for j in 0..n {
            members[residue_of(j)].push(j);
        }
        let mut offsets = vec![0usize; n];
        let mut folded_ranks = vec![0usize; k];
        for i in 0..k {
            let mut acc = 0;
            for &j in &members[i] {
                offsets[j] = acc;
                acc += self.ranks[j];
            }
            folded_ranks[i] = acc;
        }
        let mut folded_diffs = Vec::with_capacity(k);
        for i in 0..k {
            let prev = (i + k - 1) % k;
            let mut m = GroupRingMatrix::zero(folded_ranks[i], folded_ranks[prev]);
            for &j in &members[i] {
                // original ∂ out of slot j lands in slot j-1 when it exists
                if j == 0 {
                    continue;
                }
                let src = &self.differentials[j];
                let (ro, co) = (offsets[j], offsets[j - 1]);
                for r in 0..src.rows() {
                    for c in 0..src.cols() {
                        let e = src.get(r, c);
                        if !e.is_zero() {
                            m.set(ro + r, co + c, e.clone());
                        }
                    }
                }
            }
            folded_diffs.push(m);
        }
        GradedComplex::new(
            self.group.clone(),
            self.coefficients,
            Grading::Mod(k),
            folded_ranks,
            folded_diffs,
        )
    }

    /// Chain-equivalent scalar complex with zero differentials: repeatedly
    /// cancels invertible pivots (splitting off acyclic two-term pieces)
    /// until the ranks equal the homology dimensions.
    pub fn minimal_model(&self) -> Result<GradedComplex, ComplexError> {
        let Coefficients::PrimeField(p) = self.coefficients else {
            return Err(ComplexError::NotFieldCoefficients);
        };
        let mut mats = self.scalar_differentials()?;
        let mut ranks = self.ranks.clone();
        let n = self.slots();
        loop {
            let mut pivot = None;
            'search: for j in 0..n {
                let m = &mats[j];
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        if m.get(r, c) != 0 {
                            pivot = Some((j, r, c));
                            break 'search;
                        }
                    }
                }
            }
            let Some((j, a, b)) = pivot else { break };
            let mid = self
                .target_slot(j)
                .expect("differential with columns has a target");
            // cancel basis element a of slot j against b of slot mid
            let u_inv = FpScalar::new(p, mats[j].get(a, b) as i64)
                .inverse()
                .expect("pivot is nonzero mod p")
                .value;
            let old = mats[j].clone();
            let mut reduced = PrimeFieldMatrix::zero(p, old.rows() - 1, old.cols() - 1);
            for r in 0..old.rows() {
                if r == a {
                    continue;
                }
                for c in 0..old.cols() {
                    if c == b {
                        continue;
                    }
                    let corr = mul_p(mul_p(old.get(r, b), u_inv, p), old.get(a, c), p);
                    let v = (old.get(r, c) + p - corr) % p;
                    reduced.set(r - usize::from(r > a), c - usize::from(c > b), v);
                }
            }
            mats[j] = reduced;
            // incoming differential: drop column a
            if let Some(incoming) = incoming_slot(&self.grading, j, n) {
                if incoming != j {
                    mats[incoming] = drop_col(&mats[incoming], a, p);
                } else {
                    // k = 1 cannot happen (modulus >= 2)
                    unreachable!();
                }
            }
            // outgoing of the target slot: drop row b (for the low end
            // of a Z window this trims a zero-column matrix)
            mats[mid] = drop_row(&mats[mid], b, p);
            ranks[j] -= 1;
            ranks[mid] -= 1;
        }
        let diffs = mats.iter().map(scalar_to_group_ring).collect();
        let out = GradedComplex::new(
            self.group.clone(),
            self.coefficients,
            self.grading.clone(),
            ranks,
            diffs,
        )?;
        debug_assert!(out.differentials.iter().all(|m| m.is_zero()));
        Ok(out)
    }

    /// Euler characteristic Σ (−1)^j rank_j of a Z-graded complex,
    /// signed from the low end of the window.
    pub fn euler_characteristic(&self) -> Result<i64, ComplexError> {
        let Grading::Z { lo } = self.grading else {
            return Err(ComplexError::NotZGraded);
        };
        Ok(self
            .ranks
            .iter()
            .enumerate()
            .map(|(j, &r)| {
                let deg = lo + j as i64;
                if deg.rem_euclid(2) == 0 {
                    r as i64
                } else {
                    -(r as i64)
                }
            })
            .sum())
    }

    /// Cross-check homology over the truncated Novikov field: tensors with
    /// the representation KEEPING monomials, then runs Gaussian
    /// elimination with series pivots. Exact for polynomial entries as
    /// long as the cutoff is deep enough; intended for small complexes.
    pub fn homology_dims_novikov(
        &self,
        rho: &Representation,
        ctx: &NovikovContext,
    ) -> Result<Vec<usize>, ComplexError> {
        if !(Arc::ptr_eq(&self.group, rho.group_handle()) || self.group == *rho.group_handle()) {
            return Err(ComplexError::GroupMismatch);
        }
        let p = rho.prime();
        let r = rho.dim();
        let images = rho.element_images();
        // build series block matrices
        let mut series_mats: Vec<Vec<Vec<NovikovSeries<FpScalar>>>> = Vec::new();
        for m in &self.differentials {
            let mut rows = Vec::with_capacity(m.rows() * r);
            for br in 0..m.rows() * r {
                let mut row = Vec::with_capacity(m.cols() * r);
                for bc in 0..m.cols() * r {
                    let (er, ir) = (br / r, br % r);
                    let (ec, ic) = (bc / r, bc % r);
                    let entry = m.get(er, ec);
                    let mut s = NovikovSeries::zero(ctx.clone());
                    for t in entry.terms() {
                        let mut expo = t.expo.clone();
                        expo.resize(ctx.rank(), 0);
                        let scalar = FpScalar::new(p, t.coeff)
                            .mul(&FpScalar::new(p, images[t.elem].get(ir, ic) as i64))
                            .expect("same prime");
                        s.add_term(expo, scalar)
                            .map_err(|e| ComplexError::BadEntry {
                                degree: 0,
                                row: er,
                                col: ec,
                                detail: alloc::format!("{e}"),
                            })?;
                    }
                    row.push(s);
                }
                rows.push(row);
            }
            series_mats.push(rows);
        }
        let ranks_of: Vec<usize> = series_mats
            .iter()
            .map(|m| series_rank(m, ctx))
            .collect::<Result<_, _>>()?;
        let n = self.slots();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let incoming = match self.grading {
                Grading::Z { .. } => {
                    if j + 1 < n {
                        ranks_of[j + 1]
                    } else {
                        0
                    }
                }
                Grading::Mod(k) => ranks_of[(j + 1) % k],
            };
            out.push(self.ranks[j] * r - ranks_of[j] - incoming);
        }
        Ok(out)
    }
}

fn mul_p(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn incoming_slot(grading: &Grading, j: usize, n: usize) -> Option<usize> {
    match grading {
        Grading::Z { .. } => {
            if j + 1 < n {
                Some(j + 1)
            } else {
                None
            }
        }
        Grading::Mod(k) => Some((j + 1) % k),
    }
}

fn drop_col(m: &PrimeFieldMatrix, col: usize, p: u64) -> PrimeFieldMatrix {
    let mut out = PrimeFieldMatrix::zero(p, m.rows(), m.cols() - 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if c != col {
                out.set(r, c - usize::from(c > col), m.get(r, c));
            }
        }
    }
    out
}

fn drop_row(m: &PrimeFieldMatrix, row: usize, p: u64) -> PrimeFieldMatrix {
    if m.cols() == 0 {
        return PrimeFieldMatrix::zero(p, m.rows() - 1, 0);
    }
    let mut out = PrimeFieldMatrix::zero(p, m.rows() - 1, m.cols());
    for r in 0..m.rows() {
        if r == row {
            continue;
        }
        for c in 0..m.cols() {
            out.set(r - usize::from(r > row), c, m.get(r, c));
        }
    }
    out
}

fn scalar_to_group_ring(m: &PrimeFieldMatrix) -> GroupRingMatrix {
    let mut out = GroupRingMatrix::zero(m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if v != 0 {
                out.set(
                    r,
                    c,
                    GroupRingEntry::from_terms(
                        vec![GrTerm {
                            elem: 0,
                            expo: Vec::new(),
                            coeff: v as i64,
                        }],
                        Coefficients::PrimeField(m.prime()),
                    ),
                );
            }
        }
    }
    out
}

/// Rank of a matrix over the truncated Novikov field by Gaussian
/// elimination with leading-term pivots.
fn series_rank(
    m: &[Vec<NovikovSeries<FpScalar>>],
    ctx: &NovikovContext,
) -> Result<usize, ComplexError> {
    if m.is_empty() || m[0].is_empty() {
        return Ok(0);
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut work: Vec<Vec<NovikovSeries<FpScalar>>> = m.to_vec();
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row == rows {
            break;
        }
        // pivot: the row whose entry has the highest leading level, for
        // numerical robustness of the truncated inverse
        let mut best: Option<(usize, crate::novikov::Level)> = None;
        for r in row..rows {
            if let Some((expo, _)) = work[r][col].leading() {
                let lv = ctx.level(expo);
                if best.map(|(_, b)| lv > b).unwrap_or(true) {
                    best = Some((r, lv));
                }
            }
        }
        let Some((r, _)) = best else { continue };
        work.swap(row, r);
        let inv = work[row][col]
            .invert()
            .map_err(|e| ComplexError::SeriesElimination(alloc::format!("{e}")))?;
        for c in 0..cols {
            work[row][c] = work[row][c].mul(&inv).expect("same context");
        }
        for r2 in 0..rows {
            if r2 == row {
                continue;
            }
            if work[r2][col].is_zero() {
                continue;
            }
            let f = work[r2][col].clone();
            for c in 0..cols {
                let sub = f.mul(&work[row][c]).expect("same context");
                work[r2][c] = work[r2][c].sub(&sub).expect("same context");
            }
        }
        rank += 1;
        row += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    fn trivial_group() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::trivial())
    }

    fn scalar_matrix(p: u64, rows: usize, cols: usize, data: &[i64]) -> GroupRingMatrix {
        let mut m = GroupRingMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = data[r * cols + c];
                if v != 0 {
                    m.set(r, c, GroupRingEntry::scalar(v, Coefficients::PrimeField(p)));
                }
            }
        }
        m
    }

    /// 0 <- F_p <- F_p^2 <- F_p with zero differentials: the circle-like
    /// ranks (1,2,1).
    fn zero_complex(p: u64) -> GradedComplex {
        GradedComplex::new(
            trivial_group(),
            Coefficients::PrimeField(p),
            Grading::Z { lo: 0 },
            vec![1, 2, 1],
            vec![
                GroupRingMatrix::zero(1, 0),
                GroupRingMatrix::zero(2, 1),
                GroupRingMatrix::zero(1, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn zero_differentials_pass_check() {
        assert!(zero_complex(5).boundary_squares_to_zero());
    }

    #[test]
    fn identity_two_term_complex_checks_and_kills_homology() {
        let c = GradedComplex::new(
            trivial_group(),
            Coefficients::PrimeField(3),
            Grading::Z { lo: 0 },
            vec![1, 1],
            vec![GroupRingMatrix::zero(1, 0), scalar_matrix(3, 1, 1, &[1])],
        )
        .unwrap();
        assert!(c.boundary_squares_to_zero());
        assert_eq!(c.homology_dims().unwrap(), vec![0, 0]);
        let min = c.minimal_model().unwrap();
        assert_eq!(min.ranks(), &[0, 0]);
    }

    #[test]
    fn one_plus_g_mod_two_squares_to_zero() {
        // Z/2-graded complex over F_2[Z/2] with both differentials 1+g
        let g = Arc::new(FiniteGroup::cyclic(2));
        let entry = GroupRingEntry::from_terms(
            vec![
                GrTerm {
                    elem: 0,
                    expo: Vec::new(),
                    coeff: 1,
                },
                GrTerm {
                    elem: 1,
                    expo: Vec::new(),
                    coeff: 1,
                },
            ],
            Coefficients::PrimeField(2),
        );
        let mut m = GroupRingMatrix::zero(1, 1);
        m.set(0, 0, entry);
        let c = GradedComplex::new(
            g,
            Coefficients::PrimeField(2),
            Grading::Mod(2),
            vec![1, 1],
            vec![m.clone(), m],
        )
        .unwrap();
        assert!(c.boundary_squares_to_zero());
    }

    #[test]
    fn homology_of_zero_complex_is_ranks() {
        assert_eq!(zero_complex(5).homology_dims().unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn circle_complex_homology() {
        // 0 <- F_p <-0- F_p <- 0
        let c = GradedComplex::new(
            trivial_group(),
            Coefficients::PrimeField(7),
            Grading::Z { lo: 0 },
            vec![1, 1],
            vec![GroupRingMatrix::zero(1, 0), scalar_matrix(7, 1, 1, &[0])],
        )
        .unwrap();
        assert_eq!(c.homology_dims().unwrap(), vec![1, 1]);
    }

    #[test]
    fn fold_ranks_121_mod_2() {
        let folded = zero_complex(3).fold(2).unwrap();
        assert_eq!(folded.ranks(), &[2, 2]);
        assert_eq!(folded.homology_dims().unwrap(), vec![2, 2]);
    }

    #[test]
    fn fold_with_wide_modulus_preserves_homology() {
        let c = zero_complex(5);
        let folded = c.fold(5).unwrap();
        assert_eq!(folded.ranks(), &[1, 2, 1, 0, 0]);
        assert_eq!(folded.homology_dims().unwrap(), vec![1, 2, 1, 0, 0]);
    }

    #[test]
    fn fold_rejects_small_modulus() {
        assert_eq!(
            zero_complex(2).fold(1).unwrap_err(),
            ComplexError::BadModulus
        );
    }

    #[test]
    fn tensor_with_trivial_rep_augments() {
        // complex over F_2[Z/2] with differential (1+g): tensoring with
        // the trivial representation sends 1+g to 0 mod 2
        let g = Arc::new(FiniteGroup::cyclic(2));
        let entry = GroupRingEntry::from_terms(
            vec![
                GrTerm {
                    elem: 0,
                    expo: Vec::new(),
                    coeff: 1,
                },
                GrTerm {
                    elem: 1,
                    expo: Vec::new(),
                    coeff: 1,
                },
            ],
            Coefficients::PrimeField(2),
        );
        let mut m = GroupRingMatrix::zero(1, 1);
        m.set(0, 0, entry);
        let c = GradedComplex::new(
            g.clone(),
            Coefficients::PrimeField(2),
            Grading::Z { lo: 0 },
            vec![1, 1],
            vec![GroupRingMatrix::zero(1, 0), m],
        )
        .unwrap();
        let rho = Representation::trivial(g.clone(), 2);
        let t = c.tensor_with_rep(&rho).unwrap();
        assert_eq!(t.homology_dims().unwrap(), vec![1, 1]);
        // under the regular representation 1+g becomes the all-ones 2x2
        // block, of rank 1
        let reg = Representation::regular(g, 2);
        let t = c.tensor_with_rep(&reg).unwrap();
        assert_eq!(t.ranks(), &[2, 2]);
        let mats = t.scalar_differentials().unwrap();
        assert_eq!(mats[1].rank(), 1);
        assert_eq!(t.homology_dims().unwrap(), vec![1, 1]);
    }

    #[test]
    fn tensor_is_functorial_on_products() {
        use crate::rng::Rng;
        let g = Arc::new(FiniteGroup::symmetric(3));
        let rho = crate::meataxe::irreducible_representations(&g, 2, 0)
            .into_iter()
            .find(|r| r.dim() == 2)
            .unwrap();
        let mut rng = Rng::new(4);
        let coeffs = Coefficients::PrimeField(2);
        let random_matrix = |rng: &mut Rng, rows: usize, cols: usize| {
            let mut m = GroupRingMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    let terms: Vec<GrTerm> = (0..rng.below_usize(3))
                        .map(|_| GrTerm {
                            elem: rng.below_usize(6),
                            expo: Vec::new(),
                            coeff: 1 + rng.below(1) as i64,
                        })
                        .collect();
                    m.set(r, c, GroupRingEntry::from_terms(terms, coeffs));
                }
            }
            m
        };
        let blow = |m: &GroupRingMatrix| {
            let images = rho.element_images();
            let r = rho.dim();
            let mut out = PrimeFieldMatrix::zero(2, m.rows() * r, m.cols() * r);
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    let mut acc = PrimeFieldMatrix::zero(2, r, r);
                    for t in m.get(i, j).terms() {
                        acc = acc.add(&images[t.elem].scale(t.coeff.rem_euclid(2) as u64));
                    }
                    out.set_block(i * r, j * r, &acc);
                }
            }
            out
        };
        for _ in 0..20 {
            let a = random_matrix(&mut rng, 2, 3);
            let b = random_matrix(&mut rng, 3, 2);
            let ab = a.mul(&b, &g, coeffs);
            assert_eq!(blow(&ab), blow(&a).mul(&blow(&b)), "tensor not functorial");
        }
    }

    #[test]
    fn minimal_model_matches_homology() {
        use crate::rng::Rng;
        let mut rng = Rng::new(31);
        for _ in 0..30 {
            let p = [2u64, 3, 5][rng.below_usize(3)];
            let len = 2 + rng.below_usize(3);
            let ranks: Vec<usize> = (0..len).map(|_| 1 + rng.below_usize(3)).collect();
            let c = random_field_complex(&mut rng, p, &ranks);
            assert!(c.boundary_squares_to_zero());
            let h = c.homology_dims().unwrap();
            let min = c.minimal_model().unwrap();
            assert_eq!(min.ranks(), h.as_slice());
            assert_eq!(min.homology_dims().unwrap(), h);
            // Euler characteristic agrees between ranks and homology
            let chi_ranks = c.euler_characteristic().unwrap();
            let chi_h: i64 = h
                .iter()
                .enumerate()
                .map(|(j, &d)| if j % 2 == 0 { d as i64 } else { -(d as i64) })
                .sum();
            assert_eq!(chi_ranks, chi_h);
        }
    }

    #[test]
    fn minimal_model_of_cyclic_complex() {
        use crate::rng::Rng;
        let mut rng = Rng::new(77);
        for k in [2usize, 3, 4] {
            for _ in 0..10 {
                let p = [2u64, 3][rng.below_usize(2)];
                let ranks: Vec<usize> = (0..k).map(|_| 1 + rng.below_usize(3)).collect();
                let c = random_cyclic_field_complex(&mut rng, p, &ranks);
                let h = c.homology_dims().unwrap();
                let min = c.minimal_model().unwrap();
                assert_eq!(min.ranks(), h.as_slice());
            }
        }
    }

    #[test]
    fn novikov_crosscheck_agrees_with_field_path() {
        use crate::rng::Rng;
        let mut rng = Rng::new(9);
        let g = Arc::new(FiniteGroup::cyclic(2));
        let rho = Representation::regular(g.clone(), 5);
        let ctx = NovikovContext::new(vec![Ratio::from_integer(1)], Ratio::from_integer(-30));
        for _ in 0..10 {
            // small Z-graded complex over F_5[Z/2] with monomial entries
            let ranks = vec![1 + rng.below_usize(2), 1 + rng.below_usize(2)];
            // a single differential with entries c·g·t^e; d^2 = 0 holds
            // vacuously with two slots
            let mut m = GroupRingMatrix::zero(ranks[1], ranks[0]);
            for r in 0..ranks[1] {
                for c in 0..ranks[0] {
                    let terms: Vec<GrTerm> = (0..rng.below_usize(3))
                        .map(|_| GrTerm {
                            elem: rng.below_usize(2),
                            expo: vec![rng.below(3) as i64 - 1],
                            coeff: 1 + rng.below(4) as i64,
                        })
                        .collect();
                    m.set(
                        r,
                        c,
                        GroupRingEntry::from_terms(terms, Coefficients::Integer),
                    );
                }
            }
            let c = GradedComplex::new(
                g.clone(),
                Coefficients::Integer,
                Grading::Z { lo: 0 },
                ranks,
                vec![GroupRingMatrix::zero(0, 0), m],
            );
            let c = match c {
                Ok(c) => c,
                Err(_) => continue,
            };
            let field = c.tensor_with_rep(&rho).unwrap().homology_dims().unwrap();
            let series = c.homology_dims_novikov(&rho, &ctx).unwrap();
            assert_eq!(
                field, series,
                "series homology disagrees with field homology"
            );
        }
    }

    // -- helpers ---------------------------------------------------------

    pub(crate) fn random_field_complex(
        rng: &mut crate::rng::Rng,
        p: u64,
        ranks: &[usize],
    ) -> GradedComplex {
        build_shuffled_complex(rng, p, ranks, Grading::Z { lo: 0 })
    }

    pub(crate) fn random_cyclic_field_complex(
        rng: &mut crate::rng::Rng,
        p: u64,
        ranks: &[usize],
    ) -> GradedComplex {
        build_shuffled_complex(rng, p, ranks, Grading::Mod(ranks.len()))
    }

    fn random_invertible(rng: &mut crate::rng::Rng, p: u64, n: usize) -> PrimeFieldMatrix {
        loop {
            let mut m = PrimeFieldMatrix::zero(p, n, n);
            for r in 0..n {
                for c in 0..n {
                    m.set(r, c, rng.below(p));
                }
            }
            if n == 0 || m.is_invertible() {
                return m;
            }
        }
    }

    /// Valid field complex with prescribed ranks: a direct sum of
    /// cancelling pairs and surviving generators in canonical position,
    /// conjugated by random basis changes. kill[j] counts the pairs
    /// carried by the differential out of slot j; the slot constraint is
    /// kill[j] + kill[incoming(j)] <= ranks[j].
    fn build_shuffled_complex(
        rng: &mut crate::rng::Rng,
        p: u64,
        ranks: &[usize],
        grading: Grading,
    ) -> GradedComplex {
        let n = ranks.len();
        let target = |j: usize| -> Option<usize> {
            match grading {
                Grading::Z { .. } => j.checked_sub(1),
                Grading::Mod(k) => Some((j + k - 1) % k),
            }
        };
        let incoming = |j: usize| -> Option<usize> {
            match grading {
                Grading::Z { .. } => {
                    if j + 1 < n {
                        Some(j + 1)
                    } else {
                        None
                    }
                }
                Grading::Mod(k) => Some((j + 1) % k),
            }
        };
        let mut kill = vec![0usize; n];
        for j in (1..n).rev() {
            let t = target(j).unwrap();
            if t == j {
                continue;
            }
            let src_room = ranks[j] - incoming(j).map(|i| kill[i]).unwrap_or(0);
            let dst_room = if incoming(t) == Some(j) {
                // the same differential occupies both slots (k = 2 wrap)
                ranks[t].saturating_sub(kill[t])
            } else {
                ranks[t]
            };
            let cap = src_room.min(dst_room);
            kill[j] = rng.below_usize(cap + 1);
        }
        if let Grading::Mod(k) = grading {
            // slot 0 maps into slot k-1
            let t = k - 1;
            if t != 0 {
                let src_room = ranks[0].saturating_sub(kill[1 % k]);
                let dst_room = ranks[t].saturating_sub(kill[t]);
                let cap = src_room.min(dst_room);
                kill[0] = rng.below_usize(cap + 1);
            }
        }
        // canonical matrices: targets at the head of a slot, sources at
        // the tail; pair i of d_j maps source (ranks[j]-kill[j]+i) to
        // target i of the target slot
        let mut diffs: Vec<PrimeFieldMatrix> = Vec::with_capacity(n);
        for j in 0..n {
            let cols = target(j).map(|t| ranks[t]).unwrap_or(0);
            let mut m = PrimeFieldMatrix::zero(p, ranks[j], cols);
            if target(j).is_some() {
                for i in 0..kill[j] {
                    m.set(ranks[j] - kill[j] + i, i, 1);
                }
            }
            diffs.push(m);
        }
        // conjugate by random basis changes: d'_j = C_j · d_j · C_t^{-1}
        let changes: Vec<PrimeFieldMatrix> = (0..n)
            .map(|j| random_invertible(rng, p, ranks[j]))
            .collect();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            match target(j) {
                None => out.push(scalar_to_group_ring(&diffs[j])),
                Some(t) => {
                    let inv_t = changes[t].inverse().unwrap();
                    out.push(scalar_to_group_ring(&changes[j].mul(&diffs[j]).mul(&inv_t)));
                }
            }
        }
        let c = GradedComplex::new(
            trivial_group(),
            Coefficients::PrimeField(p),
            grading,
            ranks.to_vec(),
            out,
        )
        .unwrap();
        assert!(
            c.boundary_squares_to_zero(),
            "construction must satisfy d^2 = 0"
        );
        c
    }
}
