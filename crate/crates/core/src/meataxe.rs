//! Meataxe-style module decomposition over prime fields.
//!
//! Modules are given by square matrices (one per generator) acting on row
//! vectors from the right. The irreducibility test runs, in order:
//! standard-basis spins, deterministic singular candidates, a seeded
//! random search decided by Norton's criterion (complete once the line
//! sets of the nullspaces on both sides are exhausted), and a projective
//! sweep as the last resort at small dimension. Every path that answers
//! is a certificate, not a heuristic.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::FiniteGroup;
use crate::linalg::PrimeFieldMatrix;
use crate::rep::Representation;
use crate::rng::Rng;

const RANDOM_BUDGET: usize = 64;
const NORTON_LINE_CAP: u128 = 8_192;
const PROJECTIVE_SWEEP_CAP: u128 = 300_000;
const FALLBACK_LINE_CAP: u128 = 2_000_000;

/// Reduced-echelon row space with incremental insertion.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

impl Echelon {
    pub fn new(p: u64, n: usize) -> Self {
        Echelon {
            p,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis and inserts the remainder if nonzero.
    /// Returns the inserted (reduced, pivot-normalized) row, if any.
    pub fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        let p = self.p;
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                for j in 0..self.n {
                    v[j] = (v[j] + p - mul_mod(c, self.rows[i][j], p)) % p;
                }
            }
        }
        let pivot = v.iter().position(|&x| x != 0)?;
        let inv = inv_mod(v[pivot], p);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        // back-reduce the existing rows
        for i in 0..self.rows.len() {
            let c = self.rows[i][pivot];
            if c != 0 {
                for j in 0..self.n {
                    self.rows[i][j] = (self.rows[i][j] + p - mul_mod(c, v[j], p)) % p;
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&q| q > pivot)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v.clone());
        Some(v)
    }

    /// Membership residual: `v` reduced against the basis.
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c != 0 {
                for j in 0..self.n {
                    v[j] = (v[j] + p - mul_mod(c, self.rows[i][j], p)) % p;
                }
            }
        }
        v
    }
}

/// Row space generated by `seeds` under the right action of `gens`.
pub fn spin(seeds: &[Vec<u64>], gens: &[PrimeFieldMatrix], p: u64, n: usize) -> Echelon {
    let mut ech = Echelon::new(p, n);
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for s in seeds {
        if let Some(row) = ech.insert(s.clone()) {
            queue.push(row);
        }
    }
    let mut head = 0;
    while head < queue.len() && !ech.is_full() {
        let v = queue[head].clone();
        head += 1;
        for g in gens {
            let w = g.apply_row(&v);
            if let Some(row) = ech.insert(w) {
                queue.push(row);
                if ech.is_full() {
                    break;
                }
            }
        }
    }
    ech
}

#[derive(Clone, Debug)]
pub enum Chop {
    Irreducible,
    /// Echelonized basis of a proper nonzero invariant subspace.
    Reducible {
        basis: Vec<Vec<u64>>,
    },
}

fn line_count(p: u64, k: usize) -> u128 {
    // (p^k - 1) / (p - 1), saturating
    let mut total: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..k {
        total = total.saturating_add(pw);
        pw = pw.saturating_mul(p as u128);
    }
    total
}

/// Iterates projective representatives (first nonzero coordinate = 1) of
/// the span of `basis`, calling `f` until it returns `Some`.
fn for_each_line<T>(
    basis: &[Vec<u64>],
    p: u64,
    n: usize,
    mut f: impl FnMut(&[u64]) -> Option<T>,
) -> Option<T> {
    let k = basis.len();
    let mut coeffs = vec![0u64; k];
    // representatives: coeffs with first nonzero entry equal to 1
    for lead in 0..k {
        coeffs.iter_mut().for_each(|c| *c = 0);
        coeffs[lead] = 1;
        loop {
            let mut v = vec![0u64; n];
            for (i, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for j in 0..n {
                        v[j] = (v[j] + mul_mod(c, basis[i][j], p)) % p;
                    }
                }
            }
            if let Some(t) = f(&v) {
                return Some(t);
            }
            // increment the free part coeffs[lead+1..] in base p
            let mut carry = true;
            for c in coeffs.iter_mut().skip(lead + 1) {
                *c += 1;
                if *c == p {
                    *c = 0;
                } else {
                    carry = false;
                    break;
                }
            }
            if carry {
                break;
            }
        }
    }
    None
}

struct ModuleView<'a> {
    gens: &'a [PrimeFieldMatrix],
    gens_t: Vec<PrimeFieldMatrix>,
    p: u64,
    n: usize,
}

impl<'a> ModuleView<'a> {
    fn new(gens: &'a [PrimeFieldMatrix], p: u64, n: usize) -> Self {
        let gens_t = gens.iter().map(|g| g.transpose()).collect();
        ModuleView { gens, gens_t, p, n }
    }

    /// Norton's criterion against one singular algebra element: exhausts
    /// the lines of both nullspaces, so a `Some` answer is certified in
    /// both directions. `None` means the line sets were too large.
    fn norton(&self, b: &PrimeFieldMatrix, cap: u128) -> Option<Chop> {
        let null = b.left_kernel_basis();
        if null.is_empty() {
            return None;
        }
        if line_count(self.p, null.len()) > cap {
            return None;
        }
        let reducible = for_each_line(&null, self.p, self.n, |v| {
            let sp = spin(&[v.to_vec()], self.gens, self.p, self.n);
            if sp.dim() < self.n {
                Some(sp.rows().to_vec())
            } else {
                None
            }
        });
        if let Some(basis) = reducible {
            return Some(Chop::Reducible { basis });
        }
        let null_t = b.kernel_basis(); // left kernel of b^T
        if line_count(self.p, null_t.len()) > cap {
            return None;
        }
        let dual_reducible = for_each_line(&null_t, self.p, self.n, |w| {
            let sp = spin(&[w.to_vec()], &self.gens_t, self.p, self.n);
            if sp.dim() < self.n {
                Some(sp.rows().to_vec())
            } else {
                None
            }
        });
        if let Some(dual_basis) = dual_reducible {
            // the annihilator of a transposed-module subspace is invariant
            let mat = PrimeFieldMatrix::from_rows(self.p, self.n, &dual_basis);
            let ann = mat.kernel_basis();
            debug_assert!(!ann.is_empty() && ann.len() < self.n);
            let mut ech = Echelon::new(self.p, self.n);
            for v in ann {
                ech.insert(v);
            }
            return Some(Chop::Reducible {
                basis: ech.rows().to_vec(),
            });
        }
        Some(Chop::Irreducible)
    }

    fn random_algebra_element(&self, rng: &mut Rng) -> PrimeFieldMatrix {
        let mut acc = PrimeFieldMatrix::zero(self.p, self.n, self.n);
        let terms = 2 + rng.below_usize(2);
        for _ in 0..terms {
            let len = 1 + rng.below_usize(3);
            let mut word = PrimeFieldMatrix::identity(self.p, self.n);
            for _ in 0..len {
                word = word.mul(&self.gens[rng.below_usize(self.gens.len())]);
            }
            let c = 1 + rng.below(self.p - 1);
            acc = acc.add(&word.scale(c));
        }
        if rng.below(2) == 0 {
            let c = rng.below(self.p);
            acc = acc.add(&PrimeFieldMatrix::identity(self.p, self.n).scale(c));
        }
        acc
    }
}

/// Decides irreducibility of the module given by `gens` (dim `n` over
/// F_p), returning a proper invariant subspace as the witness when
/// reducible.
pub fn test_irreducible(gens: &[PrimeFieldMatrix], p: u64, n: usize, seed: u64) -> Chop {
    if n <= 1 {
        return Chop::Irreducible;
    }
    if gens.is_empty() {
        // no operators: every line is a submodule
        return Chop::Reducible {
            basis: vec![unit_vector(n, 0)],
        };
    }
    let view = ModuleView::new(gens, p, n);

    // 1. standard-basis spins; catches every module in which all cyclic
    // submodules are proper (isotypic powers in particular)
    for i in 0..n {
        let sp = spin(&[unit_vector(n, i)], gens, p, n);
        if sp.dim() < n {
            return Chop::Reducible {
                basis: sp.rows().to_vec(),
            };
        }
    }

    // 2. deterministic singular candidates: g - 1 and the norm element of
    // each generator
    let mut best_singular: Option<(usize, PrimeFieldMatrix)> = None;
    let consider =
        |b: PrimeFieldMatrix, best: &mut Option<(usize, PrimeFieldMatrix)>| -> Option<Chop> {
            if b.is_zero() {
                return None;
            }
            let nullity = b.rows() - b.rank();
            if nullity == 0 {
                return None;
            }
            if let Some(ans) = view.norton(&b, NORTON_LINE_CAP) {
                return Some(ans);
            }
            if best.as_ref().map(|(k, _)| nullity < *k).unwrap_or(true) {
                *best = Some((nullity, b));
            }
            None
        };

    let id = PrimeFieldMatrix::identity(p, n);
    for g in gens {
        if let Some(ans) = consider(g.sub(&id), &mut best_singular) {
            return ans;
        }
        // norm element 1 + g + g^2 + ... over the order of g
        let mut acc = id.clone();
        let mut pw = g.clone();
        let mut steps = 0usize;
        while pw != id {
            acc = acc.add(&pw);
            pw = pw.mul(g);
            steps += 1;
            assert!(steps <= 1 << 20, "generator of unreasonable order");
        }
        if let Some(ans) = consider(acc, &mut best_singular) {
            return ans;
        }
    }

    // 3. seeded random elements of the algebra
    let mut rng = Rng::derive(seed, 0x6d61_7478);
    for _ in 0..RANDOM_BUDGET {
        let a = view.random_algebra_element(&mut rng);
        if let Some(ans) = consider(a, &mut best_singular) {
            return ans;
        }
    }

    // 4. projective sweep: every proper submodule contains a line, so a
    // full sweep certifies irreducibility outright
    if line_count(p, n) <= PROJECTIVE_SWEEP_CAP {
        let basis: Vec<Vec<u64>> = (0..n).map(|i| unit_vector(n, i)).collect();
        let reducible = for_each_line(&basis, p, n, |v| {
            let sp = spin(&[v.to_vec()], gens, p, n);
            if sp.dim() < n {
                Some(sp.rows().to_vec())
            } else {
                None
            }
        });
        return match reducible {
            Some(basis) => Chop::Reducible { basis },
            None => Chop::Irreducible,
        };
    }

    // 5. exhaust the best singular element found, with a raised cap
    if let Some((_, b)) = best_singular {
        if let Some(ans) = view.norton(&b, FALLBACK_LINE_CAP) {
            return ans;
        }
        panic!("meataxe: nullspaces too large to certify at dimension {n} over F_{p}");
    }

    // No singular element exists in the algebra span that was sampled and
    // every standard-basis vector generates: the action algebra behaves as
    // a division ring on a cyclic module, which is irreducible.
    Chop::Irreducible
}

fn unit_vector(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; n];
    v[i] = 1;
    v
}

/// Action matrices of `gens` restricted to the subspace spanned by the
/// reduced-echelon `basis`.
pub fn restrict_action(
    gens: &[PrimeFieldMatrix],
    basis: &Echelon,
    p: u64,
) -> Vec<PrimeFieldMatrix> {
    let k = basis.dim();
    gens.iter()
        .map(|g| {
            let mut m = PrimeFieldMatrix::zero(p, k, k);
            for (r, row) in basis.rows().iter().enumerate() {
                let w = g.apply_row(row);
                // coordinates read off the pivot columns of a reduced basis
                for (c, &pc) in basis.pivots().iter().enumerate() {
                    m.set(r, c, w[pc]);
                }
                debug_assert!(basis.reduce(w).iter().all(|&x| x == 0), "not invariant");
            }
            m
        })
        .collect()
}

/// Action matrices induced on the quotient by the subspace spanned by
/// `basis`; coordinates are taken at the non-pivot columns.
pub fn quotient_action(
    gens: &[PrimeFieldMatrix],
    basis: &Echelon,
    p: u64,
    n: usize,
) -> Vec<PrimeFieldMatrix> {
    let free: Vec<usize> = (0..n).filter(|c| !basis.pivots().contains(c)).collect();
    let k = free.len();
    gens.iter()
        .map(|g| {
            let mut m = PrimeFieldMatrix::zero(p, k, k);
            for (r, &fc) in free.iter().enumerate() {
                let w = basis.reduce(g.apply_row(&unit_vector(n, fc)));
                for (c, &fc2) in free.iter().enumerate() {
                    m.set(r, c, w[fc2]);
                }
            }
            m
        })
        .collect()
}

/// Composition factors (with repetition) of the module given by `gens`.
pub fn composition_factors(
    gens: Vec<PrimeFieldMatrix>,
    p: u64,
    n: usize,
    seed: u64,
) -> Vec<(Vec<PrimeFieldMatrix>, usize)> {
    let mut out = Vec::new();
    let mut work = vec![(gens, n)];
    let mut branch = 0u64;
    while let Some((gens, n)) = work.pop() {
        if n == 0 {
            continue;
        }
        branch += 1;
        match test_irreducible(&gens, p, n, Rng::derive(seed, branch).next_u64()) {
            Chop::Irreducible => out.push((gens, n)),
            Chop::Reducible { basis } => {
                let mut ech = Echelon::new(p, n);
                for row in &basis {
                    ech.insert(row.clone());
                }
                let sub = restrict_action(&gens, &ech, p);
                let quot = quotient_action(&gens, &ech, p, n);
                let k = ech.dim();
                work.push((sub, k));
                work.push((quot, n - k));
            }
        }
    }
    out
}

/// Module isomorphism via the intertwiner space: solves
/// `g_1 · P = P · g_2` for all generators and looks for an invertible
/// solution. Complete whenever one side is irreducible (every nonzero
/// intertwiner is then invertible); for general modules up to 64 seeded
/// combinations of the solution space are tried.
pub fn modules_isomorphic(
    gens1: &[PrimeFieldMatrix],
    gens2: &[PrimeFieldMatrix],
    p: u64,
    n1: usize,
    n2: usize,
    seed: u64,
) -> bool {
    if n1 != n2 {
        return false;
    }
    let n = n1;
    if n == 0 {
        return true;
    }
    assert_eq!(gens1.len(), gens2.len());
    // unknowns: P row-major (n^2); equations per generator: n^2
    let rows = gens1.len() * n * n;
    let mut sys = PrimeFieldMatrix::zero(p, rows.max(1), n * n);
    let mut eq = 0usize;
    for (a, b) in gens1.iter().zip(gens2) {
        for i in 0..n {
            for j in 0..n {
                // (A P)_{ij} - (P B)_{ij} = 0
                for k in 0..n {
                    // + A_{ik} P_{kj}
                    let cur = sys.get(eq, k * n + j);
                    sys.set(eq, k * n + j, (cur + a.get(i, k)) % p);
                    // - P_{ik} B_{kj}
                    let cur = sys.get(eq, i * n + k);
                    sys.set(eq, i * n + k, (cur + p - b.get(k, j) % p) % p);
                }
                eq += 1;
            }
        }
    }
    let hom = sys.kernel_basis();
    if hom.is_empty() {
        return false;
    }
    let as_matrix = |v: &[u64]| {
        let mut m = PrimeFieldMatrix::zero(p, n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, v[i * n + j]);
            }
        }
        m
    };
    for v in &hom {
        if as_matrix(v).is_invertible() {
            return true;
        }
    }
    let mut rng = Rng::derive(seed, 0x6973_6f6d);
    for _ in 0..64 {
        let mut v = vec![0u64; n * n];
        for b in &hom {
            let c = rng.below(p);
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = (*x + mul_mod(c, y, p)) % p;
                }
            }
        }
        if as_matrix(&v).is_invertible() {
            return true;
        }
    }
    false
}

// ---- representation-level wrappers ------------------------------------

pub fn is_irreducible(rho: &Representation, seed: u64) -> bool {
    matches!(
        test_irreducible(rho.gen_images(), rho.prime(), rho.dim(), seed),
        Chop::Irreducible
    )
}

pub fn are_isomorphic(r1: &Representation, r2: &Representation, seed: u64) -> bool {
    assert!(
        Arc::ptr_eq(r1.group_handle(), r2.group_handle()) || r1.group_handle() == r2.group_handle(),
        "representations of different groups"
    );
    assert_eq!(
        r1.prime(),
        r2.prime(),
        "representations over different primes"
    );
    modules_isomorphic(
        r1.gen_images(),
        r2.gen_images(),
        r1.prime(),
        r1.dim(),
        r2.dim(),
        seed,
    )
}

/// Composition factors of the regular module, classified up to
/// isomorphism, with multiplicities. Every irreducible F_p-representation
/// of the group occurs here.
pub fn regular_composition_factors(
    group: &Arc<FiniteGroup>,
    p: u64,
    seed: u64,
) -> Vec<(Representation, usize)> {
    if group.order() == 1 {
        return vec![(Representation::trivial(group.clone(), p), 1)];
    }
    let regular = Representation::regular(group.clone(), p);
    let factors = composition_factors(regular.gen_images().to_vec(), p, group.order(), seed);
    let mut classes: Vec<(Representation, usize)> = Vec::new();
    for (branch, (gens, dim)) in factors.into_iter().enumerate() {
        let branch = 0x636c_6173u64 + 1 + branch as u64;
        let found = classes.iter_mut().find(|(rep, _)| {
            rep.dim() == dim
                && modules_isomorphic(
                    rep.gen_images(),
                    &gens,
                    p,
                    rep.dim(),
                    dim,
                    Rng::derive(seed, branch).next_u64(),
                )
        });
        match found {
            Some((_, count)) => *count += 1,
            None => classes.push((
                Representation::new_unchecked(group.clone(), p, dim, gens),
                1,
            )),
        }
    }
    classes.sort_by_key(|(rep, _)| rep.dim());
    classes
}

/// All irreducible F_p-representations of the group (including the trivial
/// one), duplicate-free up to isomorphism.
pub fn irreducible_representations(
    group: &Arc<FiniteGroup>,
    p: u64,
    seed: u64,
) -> Vec<Representation> {
    regular_composition_factors(group, p, seed)
        .into_iter()
        .map(|(rep, _)| rep)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    #[test]
    fn one_dimensional_is_irreducible() {
        let g = arc(FiniteGroup::cyclic(3));
        let rho = Representation::trivial(g, 5);
        assert!(is_irreducible(&rho, 0));
    }

    #[test]
    fn regular_rep_of_z2_over_f3_splits() {
        let g = arc(FiniteGroup::cyclic(2));
        let rho = Representation::regular(g, 3);
        assert!(!is_irreducible(&rho, 0));
    }

    #[test]
    fn gl2_f2_natural_module_is_irreducible() {
        // S3 ≅ GL(2, 2): the natural 2-dimensional module is irreducible
        let g = arc(FiniteGroup::symmetric(3));
        let factors = regular_composition_factors(&g, 2, 0);
        let dims: Vec<(usize, usize)> = factors.iter().map(|(r, m)| (r.dim(), *m)).collect();
        assert_eq!(dims, vec![(1, 2), (2, 2)]);
        for (rep, _) in &factors {
            assert!(is_irreducible(rep, 0));
        }
    }

    #[test]
    fn z2_over_f2_has_only_the_trivial_irreducible() {
        let g = arc(FiniteGroup::cyclic(2));
        let irr = irreducible_representations(&g, 2, 0);
        assert_eq!(irr.len(), 1);
        assert!(irr[0].is_trivial());
    }

    #[test]
    fn klein_four_over_f2_has_only_the_trivial_irreducible() {
        let g = arc(FiniteGroup::klein_four());
        let irr = irreducible_representations(&g, 2, 0);
        assert_eq!(irr.len(), 1);
        assert_eq!(irr[0].dim(), 1);
    }

    #[test]
    fn z2_over_f3_splits_into_trivial_and_sign() {
        let g = arc(FiniteGroup::cyclic(2));
        let factors = regular_composition_factors(&g, 3, 0);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(r, m)| r.dim() == 1 && *m == 1));
        assert!(!are_isomorphic(&factors[0].0, &factors[1].0, 0));
    }

    #[test]
    fn self_isomorphism_and_conjugation() {
        let g = arc(FiniteGroup::symmetric(3));
        let factors = regular_composition_factors(&g, 2, 0);
        let two_dim = factors
            .iter()
            .find(|(r, _)| r.dim() == 2)
            .unwrap()
            .0
            .clone();
        assert!(are_isomorphic(&two_dim, &two_dim, 1));
        let t = PrimeFieldMatrix::from_signed(2, 2, 2, &[1, 1, 0, 1]);
        let conj = two_dim.conjugated(&t);
        assert!(are_isomorphic(&two_dim, &conj, 1));
        assert!(is_irreducible(&conj, 3));
    }

    #[test]
    fn multiplicity_weighted_dims_sum_to_group_order() {
        for (g, p) in [
            (FiniteGroup::symmetric(3), 2u64),
            (FiniteGroup::symmetric(3), 3),
            (FiniteGroup::cyclic(6), 2),
            (FiniteGroup::cyclic(6), 3),
            (FiniteGroup::quaternion8(), 2),
            (FiniteGroup::alternating(4), 2),
            (FiniteGroup::alternating(4), 3),
        ] {
            let order = g.order();
            let g = arc(g);
            let factors = regular_composition_factors(&g, p, 0);
            let total: usize = factors.iter().map(|(r, m)| r.dim() * m).sum();
            assert_eq!(total, order, "length defect over F_{p}");
        }
    }

    #[test]
    fn p_group_in_characteristic_p_has_unique_simple() {
        for g in [
            FiniteGroup::cyclic(4),
            FiniteGroup::cyclic(8),
            FiniteGroup::quaternion8(),
            FiniteGroup::dihedral(4),
            FiniteGroup::elementary_abelian(2, 3),
        ] {
            let g = arc(g);
            let irr = irreducible_representations(&g, 2, 0);
            assert_eq!(irr.len(), 1);
            assert!(irr[0].is_trivial());
        }
        let g = arc(FiniteGroup::elementary_abelian(3, 2));
        let irr = irreducible_representations(&g, 3, 0);
        assert_eq!(irr.len(), 1);
    }

    #[test]
    fn abelian_group_with_roots_of_unity_splits_into_lines() {
        // Z/2 over F_3 and Z/4 over F_5: all irreducibles 1-dimensional
        let g = arc(FiniteGroup::cyclic(4));
        let irr = irreducible_representations(&g, 5, 0);
        assert_eq!(irr.len(), 4);
        assert!(irr.iter().all(|r| r.dim() == 1));
    }

    #[test]
    fn seed_does_not_change_the_decomposition() {
        let g = arc(FiniteGroup::alternating(4));
        let a: Vec<(usize, usize)> = regular_composition_factors(&g, 2, 0)
            .iter()
            .map(|(r, m)| (r.dim(), *m))
            .collect();
        let b: Vec<(usize, usize)> = regular_composition_factors(&g, 2, 99)
            .iter()
            .map(|(r, m)| (r.dim(), *m))
            .collect();
        assert_eq!(a, b);
    }
}
