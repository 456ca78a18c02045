//! Lower-bound formulas for periodic-orbit counts.
//!
//! Three layers share one rule vocabulary:
//!
//! * [`delta`] computes δ(G), the minimal number of generators of the
//!   augmentation ideal of ℤ[G], as the maximum of an A-part (over
//!   nontrivial modular irreducibles) and a B-part (first Betti numbers
//!   with trivial coefficients);
//! * [`mu_bounds_z`] / [`mu_bounds_folded`] bound the per-degree minimal
//!   ranks of a free chain complex over a group ring, ℤ-graded or
//!   ℤ/k-graded;
//! * [`orbit_report`] dispatches on a manifold descriptor (half-dimension
//!   n, minimal Chern number N, monotonicity class) and emits per-index
//!   orbit-count bounds with the Conley–Zehnder shift j = i − n.
//!
//! Every emitted bound carries a rule tag and a witness; per-index values
//! are the pointwise maximum over all applicable rules, with ties going to
//! the earlier rule in generation order.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::complex::{ComplexError, GradedComplex, Grading};
use crate::coset::{coset_enumeration, EnumerationResult};
use crate::group::FiniteGroup;
use crate::meataxe::irreducible_representations;
use crate::presentation::{cayley_presentation, local_betti, GroupHom, LinearRep, Presentation};

#[derive(Clone, Debug)]
pub enum BoundsError {
    TrivialGroup,
    InvalidDescriptor(Vec<String>),
    Complex(ComplexError),
}

impl core::fmt::Display for BoundsError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BoundsError::TrivialGroup => write!(f, "the trivial group is not admitted here"),
            BoundsError::InvalidDescriptor(errors) => {
                write!(f, "invalid descriptor:")?;
                for e in errors {
                    write!(f, "\n  - {e}")?;
                }
                Ok(())
            }
            BoundsError::Complex(e) => write!(f, "complex error: {e}"),
        }
    }
}

impl From<ComplexError> for BoundsError {
    fn from(e: ComplexError) -> Self {
        BoundsError::Complex(e)
    }
}

/// Stable identifiers for the bound rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleTag {
    Betti,
    BettiPlusOne,
    FoldedBetti,
    Delta,
    DeltaMinusOne,
    BigChernDelta,
    WideGradingDelta,
    MinGens,
    Noncyclic,
    Pi1Nontrivial,
    Pi1Infinite,
    Mu2Perfect,
    Mu2Delta,
    Mu2RankDefect,
    SumMinGens,
    TotalBetti,
    TotalDelta,
    TotalMinGens,
    TotalNoncyclic,
    TotalPi1,
}

impl RuleTag {
    pub fn id(&self) -> &'static str {
        match self {
            RuleTag::Betti => "betti",
            RuleTag::BettiPlusOne => "betti-plus-one",
            RuleTag::FoldedBetti => "folded-betti",
            RuleTag::Delta => "delta",
            RuleTag::DeltaMinusOne => "delta-minus-one",
            RuleTag::BigChernDelta => "big-chern-delta",
            RuleTag::WideGradingDelta => "wide-grading-delta",
            RuleTag::MinGens => "min-gens",
            RuleTag::Noncyclic => "noncyclic",
            RuleTag::Pi1Nontrivial => "pi1-nontrivial",
            RuleTag::Pi1Infinite => "pi1-infinite",
            RuleTag::Mu2Perfect => "mu2-perfect",
            RuleTag::Mu2Delta => "mu2-delta",
            RuleTag::Mu2RankDefect => "mu2-rank-defect",
            RuleTag::SumMinGens => "sum-min-gens",
            RuleTag::TotalBetti => "total-betti",
            RuleTag::TotalDelta => "total-delta",
            RuleTag::TotalMinGens => "total-min-gens",
            RuleTag::TotalNoncyclic => "total-noncyclic",
            RuleTag::TotalPi1 => "total-pi1",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            RuleTag::Betti => "local-coefficient Betti number over the representation dimension",
            RuleTag::BettiPlusOne => {
                "degree-one Betti bound plus one, for a nontrivial irreducible"
            }
            RuleTag::FoldedBetti => "residue-summed Betti numbers over the representation dimension",
            RuleTag::Delta => "minimal generator count of the augmentation ideal",
            RuleTag::DeltaMinusOne => "augmentation-ideal generator count minus one, at least one",
            RuleTag::BigChernDelta => {
                "augmentation-ideal generator count, valid when the Chern number exceeds half-dimension"
            }
            RuleTag::WideGradingDelta => {
                "augmentation-ideal generator count, valid when the grading window is wide"
            }
            RuleTag::MinGens => "minimal number of group generators (solvable or simple)",
            RuleTag::Noncyclic => "two orbits forced by a non-cyclic quotient",
            RuleTag::Pi1Nontrivial => "one orbit forced by a nontrivial fundamental group",
            RuleTag::Pi1Infinite => "one orbit forced by an infinite fundamental group",
            RuleTag::Mu2Perfect => "second Betti number plus two, for a perfect fundamental group",
            RuleTag::Mu2Delta => "delta corrected by first and second Betti numbers",
            RuleTag::Mu2RankDefect => "second-degree rank defect from the strong rank inequalities",
            RuleTag::SumMinGens => "two consecutive ranks jointly bounded by the generator count",
            RuleTag::TotalBetti => "sum of per-index Betti bounds for one representation",
            RuleTag::TotalDelta => "total bounded by the augmentation-ideal generator count",
            RuleTag::TotalMinGens => "total bounded by the minimal generator count",
            RuleTag::TotalNoncyclic => "total of two forced by a non-cyclic quotient",
            RuleTag::TotalPi1 => "total of one forced by a nontrivial fundamental group",
        }
    }
}

/// One emitted bound: the value, the rule that produced it, and a witness
/// map (prime, representation, Betti numbers involved).
#[derive(Clone, Debug)]
pub struct BoundRecord {
    pub bound: usize,
    pub rule: RuleTag,
    pub witness: BTreeMap<String, String>,
}

// ---- delta -------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaComponent {
    A,
    B,
}

#[derive(Clone, Debug)]
pub struct DeltaWitness {
    pub prime: u64,
    pub rep_index: usize,
    pub rep_dim: usize,
    pub b1: usize,
    pub component: DeltaComponent,
    pub value: usize,
}

/// Breakdown of δ(G) = max(A, B): `a_value` is `None` when no nontrivial
/// irreducible exists over any prime dividing |G| (and then contributes 1),
/// `b_value` is the best first Betti number with trivial coefficients.
#[derive(Clone, Debug)]
pub struct DeltaBreakdown {
    pub delta: usize,
    pub a_value: Option<usize>,
    pub b_value: usize,
    pub witnesses: Vec<DeltaWitness>,
}

pub fn prime_divisors(mut n: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2usize;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p as u64);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n as u64);
    }
    out
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// δ(G) for a finite group: the maximum of
/// A(G) = max over primes p | |G| and nontrivial irreducibles ρ over F_p
/// of ⌈b_1(G,ρ)/dim ρ⌉ + 1, and B(G) = max over p | |G| of b_1(G, F_p);
/// an empty A contributes 1. Returns 0 for the trivial group.
pub fn delta(group: &Arc<FiniteGroup>, seed: u64) -> DeltaBreakdown {
    if group.order() == 1 {
        return DeltaBreakdown {
            delta: 0,
            a_value: None,
            b_value: 0,
            witnesses: Vec::new(),
        };
    }
    let (pres, gen_images) = cayley_presentation(group);
    let hom = GroupHom::new(&pres, group.clone(), gen_images)
        .expect("the canonical presentation maps onto its own group");
    let mut a_value: Option<usize> = None;
    let mut b_value: usize = 0;
    let mut witnesses = Vec::new();
    for p in prime_divisors(group.order()) {
        let irreps = irreducible_representations(group, p, seed);
        for (idx, rho) in irreps.iter().enumerate() {
            let lrep = LinearRep::from_group_rep(&pres, &hom, rho);
            let b1 = local_betti(&pres, &lrep, 1);
            if rho.is_trivial() {
                witnesses.push(DeltaWitness {
                    prime: p,
                    rep_index: idx,
                    rep_dim: 1,
                    b1,
                    component: DeltaComponent::B,
                    value: b1,
                });
                b_value = b_value.max(b1);
            } else {
                let value = ceil_div(b1, rho.dim()) + 1;
                witnesses.push(DeltaWitness {
                    prime: p,
                    rep_index: idx,
                    rep_dim: rho.dim(),
                    b1,
                    component: DeltaComponent::A,
                    value,
                });
                a_value = Some(a_value.map_or(value, |a| a.max(value)));
            }
        }
    }
    let delta = a_value.unwrap_or(1).max(b_value);
    DeltaBreakdown {
        delta,
        a_value,
        b_value,
        witnesses,
    }
}

/// Stable number of generators of the augmentation ideal; for finite
/// groups it coincides with δ(G).
pub fn sigma(group: &Arc<FiniteGroup>, seed: u64) -> Result<usize, BoundsError> {
    if group.order() == 1 {
        return Err(BoundsError::TrivialGroup);
    }
    Ok(delta(group, seed).delta)
}

// ---- representation/Betti profiles --------------------------------------

/// Betti numbers of one local system: the data behind a Betti-type bound.
#[derive(Clone, Debug)]
pub struct BettiProfile {
    /// `None` marks user-declared classical Betti data (characteristic 0).
    pub prime: Option<u64>,
    pub dim: usize,
    pub trivial: bool,
    pub rep_index: usize,
    pub betti: BTreeMap<i64, usize>,
}

impl BettiProfile {
    fn label(&self) -> String {
        match self.prime {
            None => "classical".to_string(),
            Some(p) => {
                if self.trivial {
                    format!("trivial rep mod {p}")
                } else {
                    format!("irreducible #{} (dim {}) mod {p}", self.rep_index, self.dim)
                }
            }
        }
    }
}

/// Modular profiles of a complex over its group: one per irreducible per
/// prime, via tensor-and-homology.
pub fn complex_profiles(
    complex: &GradedComplex,
    primes: &[u64],
    seed: u64,
) -> Result<Vec<BettiProfile>, BoundsError> {
    let group = complex.group_handle();
    let mut out = Vec::new();
    for &p in primes {
        let irreps = irreducible_representations(group, p, seed);
        for (idx, rho) in irreps.iter().enumerate() {
            let tensored = complex.tensor_with_rep(rho)?;
            let dims = tensored.homology_dims()?;
            let mut betti = BTreeMap::new();
            for (j, &d) in dims.iter().enumerate() {
                if d > 0 {
                    betti.insert(complex.degree_of_slot(j), d);
                }
            }
            out.push(BettiProfile {
                prime: Some(p),
                dim: rho.dim(),
                trivial: rho.is_trivial(),
                rep_index: idx,
                betti,
            });
        }
    }
    Ok(out)
}

fn default_primes(group: &FiniteGroup) -> Vec<u64> {
    let ps = prime_divisors(group.order());
    if ps.is_empty() {
        vec![2]
    } else {
        ps
    }
}

// ---- candidate accumulation ---------------------------------------------

struct Candidates {
    by_key: BTreeMap<i64, BoundRecord>,
}

impl Candidates {
    fn new() -> Self {
        Candidates {
            by_key: BTreeMap::new(),
        }
    }

    /// Keeps the maximum per key; ties keep the earlier record.
    fn push(&mut self, key: i64, record: BoundRecord) {
        if record.bound == 0 {
            return;
        }
        match self.by_key.get(&key) {
            Some(existing) if existing.bound >= record.bound => {}
            _ => {
                self.by_key.insert(key, record);
            }
        }
    }
}

fn witness(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

// ---- mu bounds: Z-graded --------------------------------------------------

#[derive(Clone, Debug)]
pub enum GroupData {
    Finite(Arc<FiniteGroup>),
    InfiniteDeclared,
}

#[derive(Clone, Debug)]
pub struct MuInput<'a> {
    pub complex: Option<&'a GradedComplex>,
    pub group: GroupData,
    /// The covering is universal, i.e. the epimorphism from the
    /// fundamental group onto the deck group is an isomorphism.
    pub universal_cover: bool,
    pub primes: Option<Vec<u64>>,
    pub seed: u64,
    /// Cap on the irreducible dimensions scanned for the rank-defect
    /// bound; the scan stays a valid lower bound under any cap.
    pub dim_cap: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct MuBounds {
    pub per_degree: BTreeMap<i64, BoundRecord>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct JointBound {
    pub indices: Vec<i64>,
    pub bound: usize,
    pub rule: RuleTag,
    pub witness: BTreeMap<String, String>,
}

#[derive(Clone, Debug)]
pub struct MuFoldedBounds {
    pub per_residue: BTreeMap<i64, BoundRecord>,
    pub joint: Vec<JointBound>,
    pub notes: Vec<String>,
}

/// Per-degree lower bounds for the minimal ranks of a ℤ-graded free
/// complex over the group ring of its deck group.
pub fn mu_bounds_z(input: &MuInput) -> Result<MuBounds, BoundsError> {
    let mut notes = Vec::new();
    let mut cands = Candidates::new();
    match &input.group {
        GroupData::InfiniteDeclared => {
            cands.push(
                1,
                BoundRecord {
                    bound: 1,
                    rule: RuleTag::Pi1Infinite,
                    witness: witness(&[("reason", "declared infinite deck group".to_string())]),
                },
            );
            if input.complex.is_some() {
                notes.push(
                    "representation scans are skipped for a declared-infinite group".to_string(),
                );
            }
            return Ok(MuBounds {
                per_degree: cands.by_key,
                notes,
            });
        }
        GroupData::Finite(group) => {
            let group = group.clone();
            if group.order() > 1 {
                let breakdown = delta(&group, input.seed);
                cands.push(
                    1,
                    BoundRecord {
                        bound: breakdown.delta,
                        rule: RuleTag::Delta,
                        witness: witness(&[("delta", breakdown.delta.to_string())]),
                    },
                );
            }
            let primes = input
                .primes
                .clone()
                .unwrap_or_else(|| default_primes(&group));
            let profiles = match input.complex {
                Some(c) => complex_profiles(c, &primes, input.seed)?,
                None => {
                    notes.push(
                        "no complex supplied: degree-two and Betti bounds are skipped".to_string(),
                    );
                    Vec::new()
                }
            };
            push_mu2_rules(
                &mut cands,
                2,
                &group,
                &profiles,
                input.universal_cover,
                input.dim_cap,
                input.seed,
            );
            for profile in &profiles {
                for (&deg, &b) in &profile.betti {
                    cands.push(
                        deg,
                        BoundRecord {
                            bound: ceil_div(b, profile.dim),
                            rule: RuleTag::Betti,
                            witness: witness(&[
                                ("profile", profile.label()),
                                ("betti", b.to_string()),
                            ]),
                        },
                    );
                }
                if !profile.trivial && profile.prime.is_some() {
                    let b1 = profile.betti.get(&1).copied().unwrap_or(0);
                    cands.push(
                        1,
                        BoundRecord {
                            bound: ceil_div(b1, profile.dim) + 1,
                            rule: RuleTag::BettiPlusOne,
                            witness: witness(&[
                                ("profile", profile.label()),
                                ("betti", b1.to_string()),
                            ]),
                        },
                    );
                }
            }
        }
    }
    Ok(MuBounds {
        per_degree: cands.by_key,
        notes,
    })
}

/// Degree-two rules shared by the X-level and manifold-level reports; the
/// candidates land at `key` (degree 2, or index 2 - n).
fn push_mu2_rules(
    cands: &mut Candidates,
    key: i64,
    group: &Arc<FiniteGroup>,
    profiles: &[BettiProfile],
    universal_cover: bool,
    dim_cap: Option<usize>,
    seed: u64,
) {
    if profiles.is_empty() {
        return;
    }
    if universal_cover && group.order() > 1 {
        let breakdown = delta(group, seed);
        for profile in profiles.iter().filter(|p| p.trivial) {
            let b1 = profile.betti.get(&1).copied().unwrap_or(0);
            let b2 = profile.betti.get(&2).copied().unwrap_or(0);
            if group.is_perfect() {
                cands.push(
                    key,
                    BoundRecord {
                        bound: b2 + 2,
                        rule: RuleTag::Mu2Perfect,
                        witness: witness(&[("profile", profile.label()), ("b2", b2.to_string())]),
                    },
                );
            }
            let value = breakdown.delta as i64 - b1 as i64 + b2 as i64;
            if value > 0 {
                cands.push(
                    key,
                    BoundRecord {
                        bound: value as usize,
                        rule: RuleTag::Mu2Delta,
                        witness: witness(&[
                            ("profile", profile.label()),
                            ("delta", breakdown.delta.to_string()),
                            ("b1", b1.to_string()),
                            ("b2", b2.to_string()),
                        ]),
                    },
                );
            }
        }
    }
    // rank-defect bound: B1 + beta2 - beta1 + beta0, with B1 the best
    // beta1 - beta0 over the scanned representations (a lower bound for
    // the true maximum, which is the safe direction here)
    let scanned: Vec<&BettiProfile> = profiles
        .iter()
        .filter(|p| dim_cap.is_none_or(|cap| p.dim <= cap))
        .collect();
    let b1_defect = scanned
        .iter()
        .map(|p| {
            let b0 = p.betti.get(&0).copied().unwrap_or(0) as i64;
            let b1 = p.betti.get(&1).copied().unwrap_or(0) as i64;
            Ratio::new(b1 - b0, p.dim as i64)
        })
        .max();
    if let Some(b1_defect) = b1_defect {
        for profile in &scanned {
            let b0 = profile.betti.get(&0).copied().unwrap_or(0) as i64;
            let b1 = profile.betti.get(&1).copied().unwrap_or(0) as i64;
            let b2 = profile.betti.get(&2).copied().unwrap_or(0) as i64;
            let value = b1_defect + Ratio::new(b2 - b1 + b0, profile.dim as i64);
            let bound = value.ceil().to_integer();
            if bound > 0 {
                cands.push(
                    key,
                    BoundRecord {
                        bound: bound as usize,
                        rule: RuleTag::Mu2RankDefect,
                        witness: witness(&[
                            ("profile", profile.label()),
                            ("rank_defect", format!("{b1_defect}")),
                        ]),
                    },
                );
            }
        }
    }
}

/// Per-residue lower bounds for a ℤ/k-graded complex obtained by folding.
/// `dim_x` is the topological dimension of the underlying complex, used by
/// the wide-grading rule (applicable when dim X ≤ k - 2).
pub fn mu_bounds_folded(
    input: &MuInput,
    k: usize,
    dim_x: Option<i64>,
) -> Result<MuFoldedBounds, BoundsError> {
    if k < 2 {
        return Err(BoundsError::Complex(ComplexError::BadModulus));
    }
    let mut notes = Vec::new();
    let mut cands = Candidates::new();
    let mut joint = Vec::new();
    match &input.group {
        GroupData::InfiniteDeclared => {
            cands.push(
                1,
                BoundRecord {
                    bound: 1,
                    rule: RuleTag::Pi1Infinite,
                    witness: witness(&[("reason", "declared infinite deck group".to_string())]),
                },
            );
        }
        GroupData::Finite(group) => {
            if group.order() > 1 {
                let breakdown = delta(group, input.seed);
                if dim_x.is_some_and(|d| d <= k as i64 - 2) {
                    cands.push(
                        1,
                        BoundRecord {
                            bound: breakdown.delta,
                            rule: RuleTag::WideGradingDelta,
                            witness: witness(&[
                                ("delta", breakdown.delta.to_string()),
                                ("dim_x", dim_x.unwrap().to_string()),
                                ("modulus", k.to_string()),
                            ]),
                        },
                    );
                }
                cands.push(
                    1,
                    BoundRecord {
                        bound: breakdown.delta.saturating_sub(1).max(1),
                        rule: RuleTag::DeltaMinusOne,
                        witness: witness(&[("delta", breakdown.delta.to_string())]),
                    },
                );
                if group.is_solvable() || group.is_simple() {
                    let d = group.min_generators();
                    joint.push(JointBound {
                        indices: vec![0, 1],
                        bound: d,
                        rule: RuleTag::SumMinGens,
                        witness: witness(&[("min_gens", d.to_string())]),
                    });
                }
            }
            let primes = input
                .primes
                .clone()
                .unwrap_or_else(|| default_primes(group));
            let profiles = match input.complex {
                Some(c) => {
                    // homology is summed by residue, so the complex must be
                    // Z-graded or already graded by exactly this modulus
                    match c.grading() {
                        Grading::Z { .. } => {}
                        Grading::Mod(k2) if *k2 == k => {}
                        Grading::Mod(_) => {
                            return Err(BoundsError::Complex(ComplexError::NotZGraded));
                        }
                    }
                    complex_profiles(c, &primes, input.seed)?
                }
                None => {
                    notes.push("no complex supplied: Betti bounds are skipped".to_string());
                    Vec::new()
                }
            };
            for profile in &profiles {
                let mut sums: BTreeMap<i64, usize> = BTreeMap::new();
                for (&deg, &b) in &profile.betti {
                    *sums.entry(deg.rem_euclid(k as i64)).or_insert(0) += b;
                }
                for (res, total) in sums {
                    cands.push(
                        res,
                        BoundRecord {
                            bound: ceil_div(total, profile.dim),
                            rule: RuleTag::FoldedBetti,
                            witness: witness(&[
                                ("profile", profile.label()),
                                ("betti_sum", total.to_string()),
                            ]),
                        },
                    );
                }
            }
        }
    }
    Ok(MuFoldedBounds {
        per_residue: cands.by_key,
        joint,
        notes,
    })
}

// ---- manifold descriptors and the orbit report ---------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotonicityClass {
    SphericallyCalabiYau,
    WeaklyMonotone,
    General,
}

impl MonotonicityClass {
    pub fn id(&self) -> &'static str {
        match self {
            MonotonicityClass::SphericallyCalabiYau => "spherically-cy",
            MonotonicityClass::WeaklyMonotone => "weakly-monotone",
            MonotonicityClass::General => "general",
        }
    }
}

#[derive(Clone, Debug)]
pub enum CoverData {
    /// The fundamental group is declared trivial.
    TrivialPi1,
    /// Epimorphism onto a finite deck group, optionally with explicit
    /// generator images from the π₁ presentation.
    Finite {
        group: Arc<FiniteGroup>,
        hom_images: Option<Vec<usize>>,
    },
    /// The fundamental group is declared infinite.
    InfiniteDeclared,
}

#[derive(Clone, Debug)]
pub struct ManifoldDescriptor {
    pub name: Option<String>,
    /// n, where dim M = 2n.
    pub half_dim: usize,
    /// Minimal Chern number N; 0 means spherically Calabi–Yau.
    pub minimal_chern: usize,
    pub class: MonotonicityClass,
    pub pi1: Option<Presentation>,
    pub cover: CoverData,
    /// The covering is universal (π₁ → deck group is an isomorphism).
    pub universal_cover: bool,
    /// Chain complex modeling the manifold over the deck group's ring,
    /// ℤ-graded with degrees in [0, 2n].
    pub complex: Option<GradedComplex>,
    /// User-declared classical Betti numbers by degree.
    pub classical_betti: Option<BTreeMap<i64, usize>>,
}

#[derive(Clone, Debug)]
pub struct ReportConfig {
    pub primes: Option<Vec<u64>>,
    pub seed: u64,
    pub coset_budget: usize,
    pub dim_cap: Option<usize>,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            primes: None,
            seed: 0,
            coset_budget: crate::coset::DEFAULT_COSET_BUDGET,
            dim_cap: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub name: Option<String>,
    pub half_dim: usize,
    pub minimal_chern: usize,
    pub class: MonotonicityClass,
    pub per_index: BTreeMap<i64, BoundRecord>,
    pub joint: Vec<JointBound>,
    pub total: Option<BoundRecord>,
    pub notes: Vec<String>,
}

impl ManifoldDescriptor {
    /// Validates the cross-field invariants, collecting every violation.
    pub fn validate(&self, config: &ReportConfig) -> Vec<String> {
        let mut errors = Vec::new();
        if self.half_dim == 0 {
            errors.push("half_dim must be positive".to_string());
        }
        match self.class {
            MonotonicityClass::SphericallyCalabiYau => {
                if self.minimal_chern != 0 {
                    errors.push(
                        "spherically Calabi-Yau descriptors must have minimal Chern number 0"
                            .to_string(),
                    );
                }
            }
            MonotonicityClass::WeaklyMonotone => {
                if self.minimal_chern == 0 {
                    errors.push(
                        "a weakly monotone descriptor with zero minimal Chern number must use the spherically-cy class"
                            .to_string(),
                    );
                }
            }
            MonotonicityClass::General => {
                if self.minimal_chern == 0 {
                    errors.push(
                        "a descriptor with zero minimal Chern number must use the spherically-cy class"
                            .to_string(),
                    );
                }
            }
        }
        match &self.cover {
            CoverData::TrivialPi1 => {
                if self.universal_cover {
                    // trivial is formally its own universal cover; nothing
                    // to verify, but the flag is pointless
                }
            }
            CoverData::Finite { group, hom_images } => {
                if group.order() == 1 {
                    errors.push(
                        "cover group is trivial; declare the fundamental group trivial instead"
                            .to_string(),
                    );
                }
                if let (Some(pres), Some(images)) = (&self.pi1, hom_images) {
                    match GroupHom::new(pres, group.clone(), images.clone()) {
                        Err(e) => errors.push(format!("cover homomorphism invalid: {e}")),
                        Ok(hom) => {
                            if !hom.is_surjective() {
                                errors.push(
                                    "cover homomorphism is not surjective onto the deck group"
                                        .to_string(),
                                );
                            }
                        }
                    }
                }
                if hom_images.is_some() && self.pi1.is_none() {
                    errors.push(
                        "generator images are given but no fundamental-group presentation"
                            .to_string(),
                    );
                }
            }
            CoverData::InfiniteDeclared => {
                if self.universal_cover {
                    errors.push(
                        "universal-cover bounds are only computed for finite deck groups"
                            .to_string(),
                    );
                }
                // corroboration: enumeration may refute the declaration,
                // never confirm it
                if let Some(pres) = &self.pi1 {
                    if let Ok(EnumerationResult::Finite(order)) =
                        coset_enumeration(pres, config.coset_budget)
                    {
                        errors.push(format!(
                            "fundamental group declared infinite, but coset enumeration closes with order {order}"
                        ));
                    }
                }
            }
        }
        if self.universal_cover && !matches!(self.cover, CoverData::Finite { .. }) {
            errors.push("universal_cover needs a finite cover group".to_string());
        }
        if let Some(complex) = &self.complex {
            match complex.grading() {
                Grading::Z { lo } => {
                    let hi = lo + complex.slots() as i64 - 1;
                    if *lo < 0 || hi > 2 * self.half_dim as i64 {
                        errors.push(format!(
                            "complex degrees [{lo}, {hi}] leave the window [0, {}]",
                            2 * self.half_dim
                        ));
                    }
                }
                Grading::Mod(_) => {
                    errors.push("the descriptor complex must be Z-graded".to_string());
                }
            }
            let expected_group: &Arc<FiniteGroup> = match &self.cover {
                CoverData::Finite { group, .. } => group,
                _ => {
                    if complex.group_handle().order() != 1 {
                        errors.push(
                            "a complex over a nontrivial group needs a finite cover declaration"
                                .to_string(),
                        );
                    }
                    complex.group_handle()
                }
            };
            if !(Arc::ptr_eq(complex.group_handle(), expected_group)
                || complex.group_handle() == expected_group)
            {
                errors.push("complex group differs from the cover group".to_string());
            }
            if !complex.boundary_squares_to_zero() {
                errors.push("complex differentials do not square to zero".to_string());
            }
        }
        if let Some(betti) = &self.classical_betti {
            for &deg in betti.keys() {
                if deg < 0 || deg > 2 * self.half_dim as i64 {
                    errors.push(format!("classical Betti degree {deg} out of [0, 2n]"));
                }
            }
        }
        errors
    }

    fn finite_cover(&self) -> Option<&Arc<FiniteGroup>> {
        match &self.cover {
            CoverData::Finite { group, .. } => Some(group),
            _ => None,
        }
    }

    fn pi1_known_nontrivial(&self) -> bool {
        match &self.cover {
            CoverData::TrivialPi1 => false,
            CoverData::Finite { group, .. } => group.order() > 1,
            CoverData::InfiniteDeclared => true,
        }
    }
}

/// Gathers the Betti profiles a report can use: modular profiles from the
/// complex (outside the general class) and the classical declaration.
fn report_profiles(
    descriptor: &ManifoldDescriptor,
    config: &ReportConfig,
) -> Result<(Vec<BettiProfile>, Vec<String>), BoundsError> {
    let mut profiles = Vec::new();
    let mut notes = Vec::new();
    let modular_allowed = descriptor.class != MonotonicityClass::General;
    if let Some(complex) = &descriptor.complex {
        if modular_allowed {
            let primes = config
                .primes
                .clone()
                .unwrap_or_else(|| default_primes(complex.group_handle()));
            profiles.extend(complex_profiles(complex, &primes, config.seed)?);
        } else {
            notes.push("general class: modular representation bounds are not applied".to_string());
        }
    }
    if let Some(betti) = &descriptor.classical_betti {
        profiles.push(BettiProfile {
            prime: None,
            dim: 1,
            trivial: true,
            rep_index: 0,
            betti: betti
                .iter()
                .filter(|(_, &b)| b > 0)
                .map(|(&d, &b)| (d, b))
                .collect(),
        });
    }
    Ok((profiles, notes))
}

/// Per-index lower bounds on the number of 1-periodic orbits, with the
/// Conley–Zehnder shift j = i - n. Indices are ℤ for a spherically
/// Calabi–Yau descriptor and representatives in [-n, 2N-n) otherwise.
pub fn orbit_report(
    descriptor: &ManifoldDescriptor,
    config: &ReportConfig,
) -> Result<BoundsReport, BoundsError> {
    let errors = descriptor.validate(config);
    if !errors.is_empty() {
        return Err(BoundsError::InvalidDescriptor(errors));
    }
    let n = descriptor.half_dim as i64;
    let nn = descriptor.minimal_chern;
    let (profiles, mut notes) = report_profiles(descriptor, config)?;
    let mut cands = Candidates::new();
    let mut joint: Vec<JointBound> = Vec::new();
    let mut totals: Vec<BoundRecord> = Vec::new();

    // canonical representative of (degree - n) mod 2N inside [-n, 2N - n)
    let rep_index_of = |value: i64| -> i64 {
        if nn == 0 {
            value
        } else {
            let k = 2 * nn as i64;
            (value + n).rem_euclid(k) - n
        }
    };

    let group_rules_apply = descriptor.class != MonotonicityClass::General;
    let finite = descriptor.finite_cover().cloned();

    // -- group rules at index 1 - n ------------------------------------
    if group_rules_apply {
        if let Some(group) = &finite {
            if group.order() > 1 {
                let breakdown = delta(group, config.seed);
                let d = breakdown.delta;
                match descriptor.class {
                    MonotonicityClass::SphericallyCalabiYau => {
                        cands.push(
                            1 - n,
                            BoundRecord {
                                bound: d,
                                rule: RuleTag::Delta,
                                witness: witness(&[("delta", d.to_string())]),
                            },
                        );
                    }
                    MonotonicityClass::WeaklyMonotone => {
                        if nn > descriptor.half_dim {
                            cands.push(
                                rep_index_of(1 - n),
                                BoundRecord {
                                    bound: d,
                                    rule: RuleTag::BigChernDelta,
                                    witness: witness(&[
                                        ("delta", d.to_string()),
                                        ("minimal_chern", nn.to_string()),
                                    ]),
                                },
                            );
                        }
                        cands.push(
                            rep_index_of(1 - n),
                            BoundRecord {
                                bound: d.saturating_sub(1).max(1),
                                rule: RuleTag::DeltaMinusOne,
                                witness: witness(&[("delta", d.to_string())]),
                            },
                        );
                    }
                    MonotonicityClass::General => unreachable!(),
                }
                let solvable_or_simple = group.is_solvable() || group.is_simple();
                if solvable_or_simple {
                    let dg = group.min_generators();
                    if descriptor.class == MonotonicityClass::SphericallyCalabiYau {
                        cands.push(
                            1 - n,
                            BoundRecord {
                                bound: dg,
                                rule: RuleTag::MinGens,
                                witness: witness(&[("min_gens", dg.to_string())]),
                            },
                        );
                    } else {
                        joint.push(JointBound {
                            indices: vec![rep_index_of(-n), rep_index_of(1 - n)],
                            bound: dg,
                            rule: RuleTag::SumMinGens,
                            witness: witness(&[("min_gens", dg.to_string())]),
                        });
                    }
                    totals.push(BoundRecord {
                        bound: dg,
                        rule: RuleTag::TotalMinGens,
                        witness: witness(&[("min_gens", dg.to_string())]),
                    });
                }
                if !group.is_cyclic() {
                    if descriptor.class == MonotonicityClass::SphericallyCalabiYau {
                        cands.push(
                            1 - n,
                            BoundRecord {
                                bound: 2,
                                rule: RuleTag::Noncyclic,
                                witness: BTreeMap::new(),
                            },
                        );
                    }
                    totals.push(BoundRecord {
                        bound: 2,
                        rule: RuleTag::TotalNoncyclic,
                        witness: BTreeMap::new(),
                    });
                }
                totals.push(BoundRecord {
                    bound: d,
                    rule: RuleTag::TotalDelta,
                    witness: witness(&[("delta", d.to_string())]),
                });
            }
        }
        if descriptor.pi1_known_nontrivial() {
            cands.push(
                rep_index_of(1 - n),
                BoundRecord {
                    bound: 1,
                    rule: RuleTag::Pi1Nontrivial,
                    witness: BTreeMap::new(),
                },
            );
            totals.push(BoundRecord {
                bound: 1,
                rule: RuleTag::TotalPi1,
                witness: BTreeMap::new(),
            });
        }
    }
    if matches!(descriptor.cover, CoverData::InfiniteDeclared) {
        cands.push(
            rep_index_of(1 - n),
            BoundRecord {
                bound: 1,
                rule: RuleTag::Pi1Infinite,
                witness: witness(&[("reason", "declared infinite fundamental group".to_string())]),
            },
        );
        totals.push(BoundRecord {
            bound: 1,
            rule: RuleTag::TotalPi1,
            witness: BTreeMap::new(),
        });
    }

    // -- second-index rules (Z-graded case only) -------------------------
    if descriptor.class == MonotonicityClass::SphericallyCalabiYau {
        if let Some(group) = &finite {
            if descriptor.universal_cover && group.order() > 1 {
                push_mu2_rules(
                    &mut cands,
                    2 - n,
                    group,
                    &profiles,
                    true,
                    config.dim_cap,
                    config.seed,
                );
                notes.push(
                    "a further second-index bound from minimal resolutions of the deck group applies but is not computed here"
                        .to_string(),
                );
            }
        }
    }

    // -- Betti rules ------------------------------------------------------
    for profile in &profiles {
        if nn == 0 {
            for (&deg, &b) in &profile.betti {
                cands.push(
                    deg - n,
                    BoundRecord {
                        bound: ceil_div(b, profile.dim),
                        rule: RuleTag::Betti,
                        witness: witness(&[("profile", profile.label()), ("betti", b.to_string())]),
                    },
                );
            }
            if !profile.trivial && profile.prime.is_some() && group_rules_apply {
                let b1 = profile.betti.get(&1).copied().unwrap_or(0);
                cands.push(
                    1 - n,
                    BoundRecord {
                        bound: ceil_div(b1, profile.dim) + 1,
                        rule: RuleTag::BettiPlusOne,
                        witness: witness(&[
                            ("profile", profile.label()),
                            ("betti", b1.to_string()),
                        ]),
                    },
                );
            }
        } else {
            let k = 2 * nn as i64;
            let mut sums: BTreeMap<i64, usize> = BTreeMap::new();
            for (&deg, &b) in &profile.betti {
                *sums.entry(rep_index_of(deg - n)).or_insert(0) += b;
            }
            for (idx, total) in sums {
                cands.push(
                    idx,
                    BoundRecord {
                        bound: ceil_div(total, profile.dim),
                        rule: RuleTag::FoldedBetti,
                        witness: witness(&[
                            ("profile", profile.label()),
                            ("betti_sum", total.to_string()),
                            ("modulus", k.to_string()),
                        ]),
                    },
                );
            }
        }
        // per-representation total: the sum of this profile's own
        // per-index bounds
        let per_index: BTreeMap<i64, usize> = if nn == 0 {
            profile
                .betti
                .iter()
                .map(|(&d, &b)| (d - n, ceil_div(b, profile.dim)))
                .collect()
        } else {
            let mut sums: BTreeMap<i64, usize> = BTreeMap::new();
            for (&deg, &b) in &profile.betti {
                *sums.entry(rep_index_of(deg - n)).or_insert(0) += b;
            }
            sums.into_iter()
                .map(|(i, t)| (i, ceil_div(t, profile.dim)))
                .collect()
        };
        let mut sum: usize = per_index.values().sum();
        if nn == 0 && !profile.trivial && profile.prime.is_some() && group_rules_apply {
            // the degree-one bound for this representation is one higher
            sum += 1;
        }
        if sum > 0 {
            totals.push(BoundRecord {
                bound: sum,
                rule: RuleTag::TotalBetti,
                witness: witness(&[("profile", profile.label())]),
            });
        }
    }

    // reduce totals: max with first-wins ties, in generation order
    // (per-representation sums were pushed after the group totals, so
    // reorder: Betti totals first, then group totals)
    let mut total: Option<BoundRecord> = None;
    let mut ordered: Vec<&BoundRecord> = totals
        .iter()
        .filter(|t| t.rule == RuleTag::TotalBetti)
        .collect();
    ordered.extend(totals.iter().filter(|t| t.rule != RuleTag::TotalBetti));
    for t in ordered {
        match &total {
            Some(cur) if cur.bound >= t.bound => {}
            _ => total = Some(t.clone()),
        }
    }

    Ok(BoundsReport {
        name: descriptor.name.clone(),
        half_dim: descriptor.half_dim,
        minimal_chern: descriptor.minimal_chern,
        class: descriptor.class,
        per_index: cands.by_key,
        joint,
        total,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{Coefficients, GrTerm, GroupRingEntry, GroupRingMatrix};

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    #[test]
    fn delta_of_cyclic_groups_is_one() {
        for nv in 2..=12 {
            let g = arc(FiniteGroup::cyclic(nv));
            let b = delta(&g, 0);
            assert_eq!(b.delta, 1, "delta of Z/{nv}");
        }
    }

    #[test]
    fn delta_of_klein_four_via_b_component() {
        let g = arc(FiniteGroup::klein_four());
        let b = delta(&g, 0);
        assert_eq!(b.delta, 2);
        assert_eq!(
            b.a_value, None,
            "a 2-group has no nontrivial irreducible mod 2"
        );
        assert_eq!(b.b_value, 2);
    }

    #[test]
    fn delta_of_trivial_group_is_zero() {
        let g = arc(FiniteGroup::trivial());
        assert_eq!(delta(&g, 0).delta, 0);
    }

    #[test]
    fn delta_matches_min_generators_on_solvable_groups() {
        for g in [
            FiniteGroup::symmetric(3),
            FiniteGroup::dihedral(4),
            FiniteGroup::quaternion8(),
            FiniteGroup::alternating(4),
            FiniteGroup::elementary_abelian(2, 3),
        ] {
            let expected = g.min_generators();
            let g = arc(g);
            assert_eq!(delta(&g, 0).delta, expected);
        }
    }

    #[test]
    fn sigma_wrappers() {
        let g = arc(FiniteGroup::cyclic(7));
        assert_eq!(sigma(&g, 0).unwrap(), 1);
        let s3 = arc(FiniteGroup::symmetric(3));
        assert_eq!(sigma(&s3, 0).unwrap(), 2);
        assert!(sigma(&arc(FiniteGroup::trivial()), 0).is_err());
    }

    /// The chain complex of the torus presentation over a quotient group:
    /// ranks (1, 2, 1) with the commutator-relator differentials.
    pub(crate) fn torus_complex(group: Arc<FiniteGroup>, a: usize, b: usize) -> GradedComplex {
        let coeffs = Coefficients::Integer;
        let term = |elem: usize, coeff: i64| GrTerm {
            elem,
            expo: Vec::new(),
            coeff,
        };
        let inv = |x: usize| group.inv(x);
        // d1: two edges to the vertex, entries x - 1
        let mut d1 = GroupRingMatrix::zero(2, 1);
        d1.set(
            0,
            0,
            GroupRingEntry::from_terms(vec![term(a, 1), term(0, -1)], coeffs),
        );
        d1.set(
            1,
            0,
            GroupRingEntry::from_terms(vec![term(b, 1), term(0, -1)], coeffs),
        );
        // d2: derivatives of the commutator aba'b': (1 - aba') and (a - 1)
        // with aba' evaluated in the group
        let aba = group.mul(group.mul(a, b), inv(a));
        let mut d2 = GroupRingMatrix::zero(1, 2);
        d2.set(
            0,
            0,
            GroupRingEntry::from_terms(vec![term(0, 1), term(aba, -1)], coeffs),
        );
        d2.set(
            0,
            1,
            GroupRingEntry::from_terms(vec![term(a, 1), term(0, -1)], coeffs),
        );
        GradedComplex::new(
            group,
            coeffs,
            Grading::Z { lo: 0 },
            vec![1, 2, 1],
            vec![GroupRingMatrix::zero(1, 0), d1, d2],
        )
        .unwrap()
    }

    #[test]
    fn torus_complex_is_a_complex() {
        let v4 = arc(FiniteGroup::klein_four());
        let gens = v4.generators().to_vec();
        let c = torus_complex(v4, gens[0], gens[1]);
        assert!(c.boundary_squares_to_zero());
    }

    #[test]
    fn mu_bounds_z_for_klein_cover() {
        let v4 = arc(FiniteGroup::klein_four());
        let gens = v4.generators().to_vec();
        let c = torus_complex(v4.clone(), gens[0], gens[1]);
        let input = MuInput {
            complex: Some(&c),
            group: GroupData::Finite(v4),
            universal_cover: false,
            primes: None,
            seed: 0,
            dim_cap: None,
        };
        let out = mu_bounds_z(&input).unwrap();
        assert_eq!(out.per_degree[&1].bound, 2);
        assert_eq!(out.per_degree[&1].rule, RuleTag::Delta);
        assert_eq!(out.per_degree[&0].bound, 1);
        assert_eq!(out.per_degree[&2].bound, 1);
    }

    #[test]
    fn mu_bounds_z_trivial_group_circle() {
        // circle-shaped complex over the trivial group: both degrees carry
        // a Betti bound of one
        let trivial = arc(FiniteGroup::trivial());
        let c = GradedComplex::new(
            trivial.clone(),
            Coefficients::Integer,
            Grading::Z { lo: 0 },
            vec![1, 1],
            vec![GroupRingMatrix::zero(1, 0), GroupRingMatrix::zero(1, 1)],
        )
        .unwrap();
        let input = MuInput {
            complex: Some(&c),
            group: GroupData::Finite(trivial),
            universal_cover: false,
            primes: None,
            seed: 0,
            dim_cap: None,
        };
        let out = mu_bounds_z(&input).unwrap();
        assert_eq!(out.per_degree[&0].bound, 1);
        assert_eq!(out.per_degree[&1].bound, 1);
        assert_eq!(out.per_degree[&0].rule, RuleTag::Betti);
    }

    #[test]
    fn mu_bounds_z_perfect_universal_cover() {
        // a perfect deck group with a declared universal cover and
        // vanishing second Betti number forces two in degree two
        let a5 = arc(FiniteGroup::alternating(5));
        let c = GradedComplex::new(
            a5.clone(),
            Coefficients::Integer,
            Grading::Z { lo: 0 },
            vec![1],
            vec![GroupRingMatrix::zero(1, 0)],
        )
        .unwrap();
        let input = MuInput {
            complex: Some(&c),
            group: GroupData::Finite(a5),
            universal_cover: true,
            primes: Some(vec![2]),
            seed: 0,
            dim_cap: None,
        };
        let out = mu_bounds_z(&input).unwrap();
        assert_eq!(out.per_degree[&2].bound, 2);
        assert_eq!(out.per_degree[&2].rule, RuleTag::Mu2Perfect);
        assert_eq!(out.per_degree[&1].bound, 2);
        assert_eq!(out.per_degree[&1].rule, RuleTag::Delta);
    }

    #[test]
    fn mu_bounds_infinite_flag() {
        let input = MuInput {
            complex: None,
            group: GroupData::InfiniteDeclared,
            universal_cover: false,
            primes: None,
            seed: 0,
            dim_cap: None,
        };
        let out = mu_bounds_z(&input).unwrap();
        assert_eq!(out.per_degree[&1].bound, 1);
        assert_eq!(out.per_degree[&1].rule, RuleTag::Pi1Infinite);
    }

    #[test]
    fn folded_bounds_reject_mismatched_cyclic_gradings() {
        let v4 = arc(FiniteGroup::klein_four());
        let gens = v4.generators().to_vec();
        let c = torus_complex(v4.clone(), gens[0], gens[1]).fold(2).unwrap();
        let input = MuInput {
            complex: Some(&c),
            group: GroupData::Finite(v4),
            universal_cover: false,
            primes: None,
            seed: 0,
            dim_cap: None,
        };
        assert!(mu_bounds_folded(&input, 3, None).is_err());
        assert!(mu_bounds_folded(&input, 2, None).is_ok());
    }

    #[test]
    fn folded_bounds_for_klein() {
        let v4 = arc(FiniteGroup::klein_four());
        let input = MuInput {
            complex: None,
            group: GroupData::Finite(v4),
            universal_cover: false,
            primes: None,
            seed: 0,
            dim_cap: None,
        };
        let out = mu_bounds_folded(&input, 2, None).unwrap();
        assert_eq!(out.per_residue[&1].bound, 1);
        assert_eq!(out.per_residue[&1].rule, RuleTag::DeltaMinusOne);
        assert_eq!(out.joint.len(), 1);
        assert_eq!(out.joint[0].bound, 2);
        // with a wide grading the full delta applies
        let out = mu_bounds_folded(&input, 4, Some(2)).unwrap();
        assert_eq!(out.per_residue[&1].bound, 2);
        assert_eq!(out.per_residue[&1].rule, RuleTag::WideGradingDelta);
    }
}
