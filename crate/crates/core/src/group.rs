//! Finite groups as full multiplication tables.
//!
//! Groups are materialized as tables capped at a configurable order
//! (default 2000); the structural scans below (solvability, simplicity,
//! minimal generator count) are all straightforward on a table. Products
//! read left-to-right: `mul(a, b)` is "a then b", matching the word and
//! permutation conventions used across the crate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

pub const DEFAULT_MAX_ORDER: usize = 2000;
pub const DEFAULT_ASSOC_CHECK_CAP: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    NotABijection,
    DegreeMismatch,
    ClosureExceedsCap { cap: usize },
    OrderExceedsCap { cap: usize },
    NoIdentity,
    MissingInverse { element: usize },
    NotAssociative { a: usize, b: usize, c: usize },
    BadTable(String),
}

impl core::fmt::Display for GroupError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupError::NotABijection => write!(f, "generator is not a bijection"),
            GroupError::DegreeMismatch => write!(f, "permutations act on different point sets"),
            GroupError::ClosureExceedsCap { cap } => {
                write!(f, "closure exceeds the order cap {cap}")
            }
            GroupError::OrderExceedsCap { cap } => write!(f, "order exceeds the cap {cap}"),
            GroupError::NoIdentity => write!(f, "multiplication table has no identity"),
            GroupError::MissingInverse { element } => {
                write!(f, "element {element} has no inverse")
            }
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "table is not associative at ({a}, {b}, {c})")
            }
            GroupError::BadTable(msg) => write!(f, "bad multiplication table: {msg}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GroupOptions {
    pub max_order: usize,
    pub assoc_check_cap: usize,
}

impl Default for GroupOptions {
    fn default() -> Self {
        GroupOptions {
            max_order: DEFAULT_MAX_ORDER,
            assoc_check_cap: DEFAULT_ASSOC_CHECK_CAP,
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>, // order x order, row-major: mul[a * order + b] = a·b
    inv: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    labels: Vec<String>,
    // BFS tree over the generating set; entry is (parent element, generator
    // index) with the identity at the root.
    bfs_parent: Vec<Option<(usize, usize)>>,
}

impl core::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "FiniteGroup(order={}, generators={:?})",
            self.order, self.generators
        )
    }
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// (parent, generator index) pairs of the BFS spanning tree rooted at
    /// the identity; `None` exactly at the identity.
    pub fn bfs_tree(&self) -> &[Option<(usize, usize)>] {
        &self.bfs_parent
    }

    /// Word in the canonical generators reaching `e` along the BFS tree.
    pub fn bfs_word(&self, e: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = e;
        while let Some((parent, gen)) = self.bfs_parent[cur] {
            word.push(gen);
            cur = parent;
        }
        word.reverse();
        word
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            mul: vec![0],
            inv: vec![0],
            identity: 0,
            generators: Vec::new(),
            labels: vec!["g0".to_string()],
            bfs_parent: vec![None],
        }
    }

    /// Group generated by permutations of `{0..m-1}` (images listed
    /// 0-based). Elements are numbered in BFS discovery order from the
    /// identity, so index 0 is always the identity.
    pub fn from_permutations(gens: &[Vec<usize>], opts: GroupOptions) -> Result<Self, GroupError> {
        if gens.is_empty() {
            return Ok(Self::trivial());
        }
        let m = gens[0].len();
        for g in gens {
            if g.len() != m {
                return Err(GroupError::DegreeMismatch);
            }
            let mut seen = vec![false; m];
            for &img in g {
                if img >= m || seen[img] {
                    return Err(GroupError::NotABijection);
                }
                seen[img] = true;
            }
        }
        let compose = |a: &[usize], b: &[usize]| -> Vec<usize> {
            // apply a then b
            a.iter().map(|&x| b[x]).collect()
        };
        let id: Vec<usize> = (0..m).collect();
        let mut elements: Vec<Vec<usize>> = vec![id.clone()];
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        index.insert(id, 0);
        let mut bfs_parent: Vec<Option<(usize, usize)>> = vec![None];
        let mut head = 0;
        while head < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let next = compose(&elements[head], g);
                if !index.contains_key(&next) {
                    if elements.len() == opts.max_order {
                        return Err(GroupError::ClosureExceedsCap {
                            cap: opts.max_order,
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    bfs_parent.push(Some((head, gi)));
                    elements.push(next);
                }
            }
            head += 1;
        }
        let order = elements.len();
        let mut mul = vec![0usize; order * order];
        for a in 0..order {
            for b in 0..order {
                mul[a * order + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        let mut generators = Vec::new();
        for g in gens {
            let gi = index[g];
            if gi != 0 && !generators.contains(&gi) {
                generators.push(gi);
            }
        }
        Self::assemble(order, mul, generators, None, opts)
    }

    /// Group from an explicit multiplication table (`table[a][b] = a·b`).
    pub fn from_table(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
        opts: GroupOptions,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::BadTable("empty table".to_string()));
        }
        if order > opts.max_order {
            return Err(GroupError::OrderExceedsCap {
                cap: opts.max_order,
            });
        }
        let mut mul = vec![0usize; order * order];
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::BadTable(format!("row {a} has wrong length")));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::BadTable(format!(
                        "entry ({a},{b}) out of range"
                    )));
                }
                mul[a * order + b] = v;
            }
        }
        // canonical small generating set, greedily
        let mut generators: Vec<usize> = Vec::new();
        let mut reach = closure_from(&mul, order, &generators);
        while reach.len() < order {
            let next = (0..order).find(|e| !reach.contains(e)).unwrap();
            generators.push(next);
            reach = closure_from(&mul, order, &generators);
        }
        Self::assemble(order, mul, generators, labels, opts)
    }

    fn assemble(
        order: usize,
        mul: Vec<usize>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
        opts: GroupOptions,
    ) -> Result<Self, GroupError> {
        let at = |a: usize, b: usize| mul[a * order + b];
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| at(a, b) == identity && at(b, a) == identity) {
                Some(b) => inv[a] = b,
                None => return Err(GroupError::MissingInverse { element: a }),
            }
        }
        if order <= opts.assoc_check_cap {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        }
        // BFS tree over the generating set
        let mut bfs_parent = vec![None; order];
        let mut seen = vec![false; order];
        seen[identity] = true;
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head];
            head += 1;
            for (gi, &g) in generators.iter().enumerate() {
                let next = at(cur, g);
                if !seen[next] {
                    seen[next] = true;
                    bfs_parent[next] = Some((cur, gi));
                    queue.push(next);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(GroupError::BadTable(
                "generators do not generate".to_string(),
            ));
        }
        let labels = match labels {
            Some(l) if l.len() == order => l,
            Some(_) => return Err(GroupError::BadTable("wrong label count".to_string())),
            None => (0..order).map(|i| format!("g{i}")).collect(),
        };
        Ok(FiniteGroup {
            order,
            mul,
            inv,
            identity,
            generators,
            labels,
            bfs_parent,
        })
    }

    pub fn element_order(&self, e: usize) -> usize {
        let mut cur = e;
        let mut n = 1;
        while cur != self.identity {
            cur = self.mul(cur, e);
            n += 1;
        }
        n
    }

    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), g), by)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Sorted element list of the subgroup generated by `seeds`.
    pub fn subgroup_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut gens: Vec<usize> = Vec::new();
        for &s in seeds {
            gens.push(s);
            gens.push(self.inv(s));
        }
        let mut head = 0;
        while head < queue.len() {
            let cur = queue[head];
            head += 1;
            for &g in &gens {
                let next = self.mul(cur, g);
                if !in_set[next] {
                    in_set[next] = true;
                    queue.push(next);
                }
            }
        }
        let mut out: Vec<usize> = in_set
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn normal_closure(&self, seeds: &[usize]) -> Vec<usize> {
        let mut all = Vec::new();
        for &s in seeds {
            for by in 0..self.order {
                all.push(self.conjugate(s, by));
            }
        }
        self.subgroup_closure(&all)
    }

    /// Derived subgroup [H, H] of the subgroup `h` (sorted element list).
    fn derived_of(&self, h: &[usize]) -> Vec<usize> {
        let mut comms = Vec::new();
        for &a in h {
            for &b in h {
                comms.push(self.commutator(a, b));
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.subgroup_closure(&comms)
    }

    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.order).collect();
        self.derived_of(&all)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|e| self.element_order(e) == self.order)
    }

    pub fn is_perfect(&self) -> bool {
        self.commutator_subgroup().len() == self.order
    }

    pub fn is_solvable(&self) -> bool {
        let mut h: Vec<usize> = (0..self.order).collect();
        loop {
            let next = self.derived_of(&h);
            if next.len() == h.len() {
                return h.len() == 1;
            }
            h = next;
        }
    }

    /// No proper nontrivial normal subgroup; the trivial group does not
    /// count as simple.
    pub fn is_simple(&self) -> bool {
        if self.order == 1 {
            return false;
        }
        (0..self.order)
            .filter(|&g| g != self.identity)
            .all(|g| self.normal_closure(&[g]).len() == self.order)
    }

    /// Minimal number of generators d(G); 0 for the trivial group.
    /// Exhaustive search over element tuples of increasing size, in index
    /// order, returning on the first generating tuple.
    pub fn min_generators(&self) -> usize {
        if self.order == 1 {
            return 0;
        }
        let candidates: Vec<usize> = (0..self.order).filter(|&e| e != self.identity).collect();
        for k in 1..=candidates.len() {
            let mut tuple = Vec::with_capacity(k);
            if self.search_tuple(&candidates, 0, k, &mut tuple) {
                return k;
            }
        }
        unreachable!("the full element set generates")
    }

    fn search_tuple(&self, cands: &[usize], from: usize, k: usize, tuple: &mut Vec<usize>) -> bool {
        if tuple.len() == k {
            return self.subgroup_closure(tuple).len() == self.order;
        }
        for i in from..cands.len() {
            tuple.push(cands[i]);
            if self.search_tuple(cands, i + 1, k, tuple) {
                return true;
            }
            tuple.pop();
        }
        false
    }

    /// Elementary divisors of the abelianization, via the Smith normal
    /// form of a presentation of the group; zeros denote free factors and
    /// unit divisors are dropped.
    pub fn abelianization(&self) -> Vec<BigInt> {
        let (pres, _) = crate::presentation::cayley_presentation(self);
        pres.abelianization()
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let order = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut table = vec![vec![0usize; order]; order];
        for xa in 0..a.order {
            for ya in 0..b.order {
                for xb in 0..a.order {
                    for yb in 0..b.order {
                        table[idx(xa, ya)][idx(xb, yb)] = idx(a.mul(xa, xb), b.mul(ya, yb));
                    }
                }
            }
        }
        let opts = GroupOptions {
            max_order: order.max(1),
            ..GroupOptions::default()
        };
        FiniteGroup::from_table(&table, None, opts).expect("product of valid tables is valid")
    }

    // ---- standard examples -------------------------------------------

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        if n == 1 {
            return Self::trivial();
        }
        let shift: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_permutations(&[shift], GroupOptions::default()).unwrap()
    }

    pub fn klein_four() -> FiniteGroup {
        Self::elementary_abelian(2, 2)
    }

    pub fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
        let mut g = Self::cyclic(p);
        for _ in 1..k {
            g = Self::direct_product(&g, &Self::cyclic(p));
        }
        g
    }

    /// Dihedral group of order 2n (n >= 2).
    pub fn dihedral(n: usize) -> FiniteGroup {
        assert!(n >= 2);
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(&[rot, refl], GroupOptions::default()).unwrap()
    }

    /// Dicyclic group of order 4n; `dicyclic(2)` is the quaternion group.
    /// Elements are a^k b^e with k < 2n, e in {0,1}, subject to
    /// b^2 = a^n and b^-1 a b = a^-1.
    pub fn dicyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let two_n = 2 * n;
        let order = 4 * n;
        let idx = |k: usize, e: usize| e * two_n + k;
        let mut table = vec![vec![0usize; order]; order];
        for k1 in 0..two_n {
            for e1 in 0..2 {
                for k2 in 0..two_n {
                    for e2 in 0..2 {
                        // (a^k1 b^e1)(a^k2 b^e2)
                        let (k, e) = if e1 == 0 {
                            ((k1 + k2) % two_n, e2)
                        } else if e2 == 0 {
                            ((k1 + two_n - k2 % two_n) % two_n, 1)
                        } else {
                            ((k1 + two_n - k2 % two_n + n) % two_n, 0)
                        };
                        table[idx(k1, e1)][idx(k2, e2)] = idx(k, e);
                    }
                }
            }
        }
        FiniteGroup::from_table(&table, None, GroupOptions::default()).unwrap()
    }

    pub fn quaternion8() -> FiniteGroup {
        Self::dicyclic(2)
    }

    pub fn symmetric(n: usize) -> FiniteGroup {
        assert!((1..=6).contains(&n), "symmetric(n) supported for n <= 6");
        if n == 1 {
            return Self::trivial();
        }
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_permutations(&[swap, cycle], GroupOptions::default()).unwrap()
    }

    pub fn alternating(n: usize) -> FiniteGroup {
        assert!(
            (3..=6).contains(&n),
            "alternating(n) supported for 3 <= n <= 6"
        );
        let mut three: Vec<usize> = (0..n).collect();
        three[0] = 1;
        three[1] = 2;
        three[2] = 0;
        if n == 3 {
            return Self::from_permutations(&[three], GroupOptions::default()).unwrap();
        }
        let cycle: Vec<usize> = if n % 2 == 1 {
            (0..n).map(|i| (i + 1) % n).collect()
        } else {
            // fix point 0, cycle the rest (even permutation)
            (0..n)
                .map(|i| if i == 0 { 0 } else { 1 + (i % (n - 1)) })
                .collect()
        };
        Self::from_permutations(&[three, cycle], GroupOptions::default()).unwrap()
    }
}

// Submonoid generated by `gens`, which in a finite group is the generated
// subgroup. Used before identity/inverse detection, so the empty set maps
// to the identity if the table has one.
fn closure_from(mul: &[usize], order: usize, gens: &[usize]) -> Vec<usize> {
    if gens.is_empty() {
        let id = (0..order)
            .find(|&e| (0..order).all(|x| mul[e * order + x] == x && mul[x * order + e] == x));
        return id.into_iter().collect();
    }
    let mut in_set = vec![false; order];
    let mut queue = Vec::new();
    for &g in gens {
        if !in_set[g] {
            in_set[g] = true;
            queue.push(g);
        }
    }
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head];
        head += 1;
        for &g in gens {
            let next = mul[cur * order + g];
            if !in_set[next] {
                in_set[next] = true;
                queue.push(next);
            }
        }
    }
    (0..order).filter(|&i| in_set[i]).collect()
}

/// Shared handle used across representations, complexes and bounds.
pub type GroupHandle = Arc<FiniteGroup>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_generates_order_two() {
        let g = FiniteGroup::from_permutations(&[vec![1, 0]], GroupOptions::default()).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = FiniteGroup::from_permutations(&[], GroupOptions::default()).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn a5_has_order_60() {
        let g = FiniteGroup::alternating(5);
        assert_eq!(g.order(), 60);
        assert!(g.is_simple());
        assert!(g.is_perfect());
        assert!(!g.is_solvable());
        assert!(!g.is_cyclic());
    }

    #[test]
    fn z6_predicates() {
        let g = FiniteGroup::cyclic(6);
        assert!(g.is_cyclic());
        assert!(g.is_solvable());
        assert!(!g.is_perfect());
        assert!(!g.is_simple());
    }

    #[test]
    fn s3_is_solvable_not_simple() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        assert!(g.is_solvable());
        assert!(!g.is_simple());
        assert_eq!(g.commutator_subgroup().len(), 3);
    }

    #[test]
    fn z_p_is_simple() {
        assert!(FiniteGroup::cyclic(7).is_simple());
        assert!(!FiniteGroup::cyclic(6).is_simple());
    }

    #[test]
    fn min_generators_examples() {
        assert_eq!(FiniteGroup::cyclic(12).min_generators(), 1);
        assert_eq!(FiniteGroup::klein_four().min_generators(), 2);
        assert_eq!(FiniteGroup::alternating(5).min_generators(), 2);
        assert_eq!(FiniteGroup::elementary_abelian(2, 3).min_generators(), 3);
        assert_eq!(FiniteGroup::trivial().min_generators(), 0);
    }

    #[test]
    fn quaternion_group_shape() {
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        assert!(q8.is_solvable());
        // every subgroup of Q8 is normal; the three cyclic subgroups of
        // order 4 plus the center
        assert_eq!(q8.min_generators(), 2);
        let orders: Vec<usize> = (0..8).map(|e| q8.element_order(e)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn cyclic_iff_one_generator() {
        for n in 2..10 {
            let g = FiniteGroup::cyclic(n);
            assert_eq!(g.min_generators(), 1);
        }
        for g in [
            FiniteGroup::klein_four(),
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(4),
        ] {
            assert!(!g.is_cyclic());
            assert!(g.min_generators() >= 2);
        }
    }

    #[test]
    fn product_generators_bound() {
        let a = FiniteGroup::cyclic(2);
        let b = FiniteGroup::cyclic(4);
        let p = FiniteGroup::direct_product(&a, &b);
        assert_eq!(p.order(), 8);
        assert!(p.min_generators() >= a.min_generators().max(b.min_generators()));
        assert_eq!(p.min_generators(), 2);
        // coprime orders stay cyclic
        let q = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        assert_eq!(q.min_generators(), 1);
    }

    #[test]
    fn from_table_roundtrip() {
        let g = FiniteGroup::dihedral(3);
        let table: Vec<Vec<usize>> = (0..6)
            .map(|a| (0..6).map(|b| g.mul(a, b)).collect())
            .collect();
        let h = FiniteGroup::from_table(&table, None, GroupOptions::default()).unwrap();
        assert_eq!(h.order(), 6);
        assert!(!h.is_abelian());
    }

    #[test]
    fn closure_cap_is_enforced() {
        let opts = GroupOptions {
            max_order: 10,
            ..GroupOptions::default()
        };
        let cycle: Vec<usize> = (0..12).map(|i| (i + 1) % 12).collect();
        let err = FiniteGroup::from_permutations(&[cycle], opts).unwrap_err();
        assert_eq!(err, GroupError::ClosureExceedsCap { cap: 10 });
    }

    #[test]
    fn abelianization_examples() {
        let v: Vec<i64> = FiniteGroup::klein_four()
            .abelianization()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(v, vec![2, 2]);
        let v: Vec<i64> = FiniteGroup::cyclic(5)
            .abelianization()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(v, vec![5]);
        assert!(FiniteGroup::alternating(5).abelianization().is_empty());
    }
}
