//! Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! HLT-style relator scanning with gap filling, plus a define-missing step
//! so that closed tables always complete. The routine reports the group
//! order when the table closes within the coset budget and `Unknown`
//! otherwise; it never claims a group is infinite.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::presentation::Presentation;

pub const DEFAULT_COSET_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationResult {
    Finite(usize),
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetError;

impl core::fmt::Display for BudgetError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "coset budget must be at least 1")
    }
}

const UNDEF: usize = usize::MAX;

struct Table {
    width: usize, // 2 * generators: column 2j is x_j, column 2j+1 is x_j^-1
    rows: Vec<Vec<usize>>,
    parent: Vec<usize>, // union-find
    pending: VecDeque<(usize, usize)>,
    defined: usize,
}

impl Table {
    fn new(width: usize) -> Self {
        Table {
            width,
            rows: vec![vec![UNDEF; width]],
            parent: vec![0],
            pending: VecDeque::new(),
            defined: 1,
        }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn define(&mut self) -> usize {
        let idx = self.rows.len();
        self.rows.push(vec![UNDEF; self.width]);
        self.parent.push(idx);
        self.defined += 1;
        idx
    }

    #[inline]
    fn inv_col(col: usize) -> usize {
        col ^ 1
    }

    /// Records alpha·col = beta together with the inverse direction,
    /// queueing a coincidence on conflict.
    fn deduce(&mut self, alpha: usize, col: usize, beta: usize) {
        let alpha = self.find(alpha);
        let beta = self.find(beta);
        let cur = self.rows[alpha][col];
        if cur == UNDEF {
            self.rows[alpha][col] = beta;
        } else {
            let cur = self.find(cur);
            if cur != beta {
                self.pending.push_back((cur, beta));
            }
        }
        let icol = Self::inv_col(col);
        let cur = self.rows[beta][icol];
        if cur == UNDEF {
            self.rows[beta][icol] = alpha;
        } else {
            let cur = self.find(cur);
            if cur != alpha {
                self.pending.push_back((cur, alpha));
            }
        }
    }

    fn process_coincidences(&mut self) {
        while let Some((a, b)) = self.pending.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop] = keep;
            for col in 0..self.width {
                let img = self.rows[drop][col];
                if img == UNDEF {
                    continue;
                }
                let img = self.find(img);
                // transfer the dropped row's entries onto the survivor
                let cur = self.rows[keep][col];
                if cur == UNDEF {
                    self.rows[keep][col] = img;
                } else {
                    let cur = self.find(cur);
                    if cur != img {
                        self.pending.push_back((cur, img));
                    }
                }
                // keep the inverse direction coherent
                let icol = Self::inv_col(col);
                let back = self.rows[img][icol];
                if back == UNDEF {
                    self.rows[img][icol] = keep;
                } else {
                    let back = self.find(back);
                    if back != keep {
                        self.pending.push_back((back, keep));
                    }
                }
            }
        }
    }

    fn live(&mut self) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| self.find(i) == i)
            .collect()
    }

    fn lookup(&mut self, alpha: usize, col: usize) -> usize {
        let alpha = self.find(alpha);
        let v = self.rows[alpha][col];
        if v == UNDEF {
            UNDEF
        } else {
            self.find(v)
        }
    }
}

fn relator_columns(pres: &Presentation) -> Vec<Vec<usize>> {
    pres.relators()
        .iter()
        .map(|r| {
            r.letters()
                .iter()
                .map(|&(g, s)| if s > 0 { 2 * g } else { 2 * g + 1 })
                .collect()
        })
        .collect()
}

/// Enumerates cosets of the trivial subgroup. `budget` caps the total
/// number of cosets ever defined (live plus collapsed).
pub fn coset_enumeration(
    pres: &Presentation,
    budget: usize,
) -> Result<EnumerationResult, BudgetError> {
    if budget == 0 {
        return Err(BudgetError);
    }
    if pres.num_generators() == 0 {
        return Ok(EnumerationResult::Finite(1));
    }
    let relators = relator_columns(pres);
    let mut table = Table::new(2 * pres.num_generators());

    loop {
        let mut changed = false;
        let mut alpha = 0;
        while alpha < table.rows.len() {
            if table.find(alpha) != alpha {
                alpha += 1;
                continue;
            }
            for rel in &relators {
                if scan_and_fill(&mut table, alpha, rel, budget)? {
                    changed = true;
                }
                table.process_coincidences();
                if table.find(alpha) != alpha {
                    break;
                }
            }
            if table.find(alpha) == alpha {
                for col in 0..table.width {
                    if table.lookup(alpha, col) == UNDEF {
                        if table.defined >= budget {
                            return Ok(EnumerationResult::Unknown);
                        }
                        let fresh = table.define();
                        table.deduce(alpha, col, fresh);
                        table.process_coincidences();
                        changed = true;
                    }
                }
            }
            alpha += 1;
        }
        if !changed {
            break;
        }
    }

    // self-check: complete table, every relator closing everywhere
    let live = table.live();
    for &alpha in &live {
        for col in 0..table.width {
            if table.lookup(alpha, col) == UNDEF {
                return Ok(EnumerationResult::Unknown);
            }
        }
        for rel in &relators {
            let mut cur = alpha;
            for &col in rel {
                cur = table.lookup(cur, col);
            }
            if cur != alpha {
                return Ok(EnumerationResult::Unknown);
            }
        }
    }
    Ok(EnumerationResult::Finite(live.len()))
}

/// Scans one relator cycle at `alpha`, defining cosets to fill the gap.
/// Returns true when anything was defined or deduced. Errors only on a
/// zero budget; budget exhaustion surfaces as `Ok(..)` = no progress and
/// is caught by the caller via `table.defined`.
fn scan_and_fill(
    table: &mut Table,
    alpha: usize,
    rel: &[usize],
    budget: usize,
) -> Result<bool, BudgetError> {
    if rel.is_empty() {
        return Ok(false);
    }
    let mut changed = false;
    // forward as far as possible
    let mut f = alpha;
    let mut fi = 0;
    while fi < rel.len() {
        let next = table.lookup(f, rel[fi]);
        if next == UNDEF {
            break;
        }
        f = next;
        fi += 1;
    }
    if fi == rel.len() {
        if table.find(f) != table.find(alpha) {
            let (a, b) = (table.find(f), table.find(alpha));
            table.pending.push_back((a, b));
            changed = true;
        }
        return Ok(changed);
    }
    // backward from the far end
    let mut b = alpha;
    let mut bi = rel.len();
    while bi > fi {
        let prev = table.lookup(b, Table::inv_col(rel[bi - 1]));
        if prev == UNDEF {
            break;
        }
        b = prev;
        bi -= 1;
    }
    if bi == fi {
        // both scans computed the coset at position fi: they coincide
        let (x, y) = (table.find(f), table.find(b));
        if x != y {
            table.pending.push_back((x, y));
            return Ok(true);
        }
        return Ok(changed);
    }
    if bi == fi + 1 {
        table.deduce(f, rel[fi], b);
        return Ok(true);
    }
    // fill the gap with fresh cosets
    while fi < bi - 1 {
        if table.defined >= budget {
            return Ok(changed);
        }
        let fresh = table.define();
        table.deduce(f, rel[fi], fresh);
        f = table.find(fresh);
        fi += 1;
        changed = true;
    }
    table.deduce(f, rel[fi], b);
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    #[test]
    fn cyclic_five_closes() {
        let pres = Presentation::parse(&["a"], &["a^5"]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 100).unwrap(),
            EnumerationResult::Finite(5)
        );
    }

    #[test]
    fn s3_closes_at_six() {
        let pres = Presentation::parse(&["a", "b"], &["a^2", "b^3", "(ab)^2"]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 1000).unwrap(),
            EnumerationResult::Finite(6)
        );
    }

    #[test]
    fn free_group_stays_unknown() {
        let pres = Presentation::parse(&["a", "b"], &[]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 500).unwrap(),
            EnumerationResult::Unknown
        );
    }

    #[test]
    fn free_abelian_stays_unknown() {
        let pres = Presentation::parse(&["a", "b"], &["aba^-1b^-1"]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 2000).unwrap(),
            EnumerationResult::Unknown
        );
    }

    #[test]
    fn klein_four_closes() {
        let pres = Presentation::parse(&["a", "b"], &["a^2", "b^2", "(ab)^2"]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 1000).unwrap(),
            EnumerationResult::Finite(4)
        );
    }

    #[test]
    fn quaternion_closes_at_eight() {
        let pres = Presentation::parse(&["a", "b"], &["a^4", "a^2b^-2", "b^-1aba"]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 1000).unwrap(),
            EnumerationResult::Finite(8)
        );
    }

    #[test]
    fn trivial_presentations() {
        let pres = Presentation::parse(&["a"], &["a"]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 100).unwrap(),
            EnumerationResult::Finite(1)
        );
        let pres = Presentation::parse(&[], &[]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 100).unwrap(),
            EnumerationResult::Finite(1)
        );
    }

    #[test]
    fn zero_budget_is_an_error() {
        let pres = Presentation::parse(&["a"], &["a^5"]).unwrap();
        assert!(coset_enumeration(&pres, 0).is_err());
    }

    #[test]
    fn a4_closes_at_twelve() {
        let pres = Presentation::parse(&["a", "b"], &["a^3", "b^3", "(ab)^2"]).unwrap();
        assert_eq!(
            coset_enumeration(&pres, 1000).unwrap(),
            EnumerationResult::Finite(12)
        );
    }
}
