//! Truncated arithmetic in Novikov completions R((T)).
//!
//! T is a free abelian group of finite rank m with a weight map ξ. A
//! series is a finite map from monomials (exponent vectors in ℤ^m) to
//! nonzero coefficients, all with ξ-level above the context cutoff. The ξ
//! values live in ℚ with the exponent vector itself as a lexicographic
//! tie-break, which keeps the monomial order total and ξ injective
//! without any floating point.
//!
//! Every operation is exact on the retained terms; products drop terms at
//! or below the cutoff.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::group::FiniteGroup;

pub type Exponent = Vec<i64>;
pub type Level = Ratio<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NovikovError {
    ContextMismatch,
    CoefficientMismatch,
    WrongExponentRank { expected: usize, got: usize },
    ZeroInverse,
    AmbiguousLeadingTerm,
}

impl core::fmt::Display for NovikovError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            NovikovError::ContextMismatch => write!(f, "series come from different contexts"),
            NovikovError::CoefficientMismatch => {
                write!(f, "coefficients belong to different rings")
            }
            NovikovError::WrongExponentRank { expected, got } => {
                write!(f, "exponent vector of rank {got}, context has rank {expected}")
            }
            NovikovError::ZeroInverse => write!(f, "cannot invert the zero series"),
            NovikovError::AmbiguousLeadingTerm => write!(
                f,
                "several terms share the maximal weight; inversion needs weights that separate the support"
            ),
        }
    }
}

/// The ambient data of a Novikov completion: the rank of T, the rational
/// weight of each monomial generator, and the truncation cutoff. Terms
/// whose weight is at or below the cutoff are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NovikovContext {
    rank: usize,
    weights: Vec<Level>,
    cutoff: Level,
}

impl NovikovContext {
    pub fn new(weights: Vec<Level>, cutoff: Level) -> Self {
        NovikovContext {
            rank: weights.len(),
            weights,
            cutoff,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weights(&self) -> &[Level] {
        &self.weights
    }

    pub fn cutoff(&self) -> Level {
        self.cutoff
    }

    pub fn level(&self, expo: &[i64]) -> Level {
        debug_assert_eq!(expo.len(), self.rank);
        let mut acc = Ratio::new(0, 1);
        for (e, w) in expo.iter().zip(&self.weights) {
            acc += Ratio::from_integer(*e) * w;
        }
        acc
    }

    pub fn retains(&self, expo: &[i64]) -> bool {
        self.level(expo) > self.cutoff
    }

    /// Total monomial order: weight first, exponent vector as tie-break.
    pub fn cmp_mono(&self, a: &[i64], b: &[i64]) -> core::cmp::Ordering {
        self.level(a).cmp(&self.level(b)).then_with(|| a.cmp(b))
    }
}

/// Coefficient rings a Novikov series can carry.
pub trait NovikovCoeff: Clone + PartialEq + core::fmt::Debug {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Result<Self, NovikovError>;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Result<Self, NovikovError>;
}

impl NovikovCoeff for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Result<Self, NovikovError> {
        Ok(self + other)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Result<Self, NovikovError> {
        Ok(self * other)
    }
}

/// Residue in F_p carrying its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FpScalar {
    pub p: u64,
    pub value: u64,
}

impl FpScalar {
    pub fn new(p: u64, value: i64) -> Self {
        FpScalar {
            p,
            value: value.rem_euclid(p as i64) as u64,
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let mut result = 1u64;
        let mut base = self.value;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = (result as u128 * base as u128 % self.p as u128) as u64;
            }
            base = (base as u128 * base as u128 % self.p as u128) as u64;
            e >>= 1;
        }
        Some(FpScalar {
            p: self.p,
            value: result,
        })
    }
}

impl NovikovCoeff for FpScalar {
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Result<Self, NovikovError> {
        if self.p != other.p {
            return Err(NovikovError::CoefficientMismatch);
        }
        Ok(FpScalar {
            p: self.p,
            value: (self.value + other.value) % self.p,
        })
    }
    fn neg(&self) -> Self {
        FpScalar {
            p: self.p,
            value: (self.p - self.value) % self.p,
        }
    }
    fn mul(&self, other: &Self) -> Result<Self, NovikovError> {
        if self.p != other.p {
            return Err(NovikovError::CoefficientMismatch);
        }
        Ok(FpScalar {
            p: self.p,
            value: (self.value as u128 * other.value as u128 % self.p as u128) as u64,
        })
    }
}

/// Element of the integral group ring ℤ[G] of a finite group.
#[derive(Clone, Debug)]
pub struct GroupRingCoeff {
    pub group: Arc<FiniteGroup>,
    pub terms: BTreeMap<usize, i64>,
}

impl GroupRingCoeff {
    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        GroupRingCoeff {
            group,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(group: Arc<FiniteGroup>, element: usize, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(element, coeff);
        }
        GroupRingCoeff { group, terms }
    }

    fn same_group(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group == other.group
    }

    /// Sum of the coefficients: the augmentation ℤ[G] → ℤ.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl PartialEq for GroupRingCoeff {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.terms == other.terms
    }
}

impl NovikovCoeff for GroupRingCoeff {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Result<Self, NovikovError> {
        if !self.same_group(other) {
            return Err(NovikovError::CoefficientMismatch);
        }
        let mut terms = self.terms.clone();
        for (&g, &c) in &other.terms {
            let v = terms.entry(g).or_insert(0);
            *v += c;
            if *v == 0 {
                terms.remove(&g);
            }
        }
        Ok(GroupRingCoeff {
            group: self.group.clone(),
            terms,
        })
    }
    fn neg(&self) -> Self {
        GroupRingCoeff {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(&g, &c)| (g, -c)).collect(),
        }
    }
    fn mul(&self, other: &Self) -> Result<Self, NovikovError> {
        if !self.same_group(other) {
            return Err(NovikovError::CoefficientMismatch);
        }
        let mut terms: BTreeMap<usize, i64> = BTreeMap::new();
        for (&g1, &c1) in &self.terms {
            for (&g2, &c2) in &other.terms {
                let g = self.group.mul(g1, g2);
                let v = terms.entry(g).or_insert(0);
                *v += c1 * c2;
                if *v == 0 {
                    terms.remove(&g);
                }
            }
        }
        Ok(GroupRingCoeff {
            group: self.group.clone(),
            terms,
        })
    }
}

/// Truncated element of R((T)).
#[derive(Clone, Debug, PartialEq)]
pub struct NovikovSeries<C: NovikovCoeff> {
    context: NovikovContext,
    terms: BTreeMap<Exponent, C>,
}

impl<C: NovikovCoeff> NovikovSeries<C> {
    pub fn zero(context: NovikovContext) -> Self {
        NovikovSeries {
            context,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        context: NovikovContext,
        terms: impl IntoIterator<Item = (Exponent, C)>,
    ) -> Result<Self, NovikovError> {
        let mut s = Self::zero(context);
        for (expo, coeff) in terms {
            s.add_term(expo, coeff)?;
        }
        Ok(s)
    }

    pub fn context(&self) -> &NovikovContext {
        &self.context
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, C> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, expo: Exponent, coeff: C) -> Result<(), NovikovError> {
        if expo.len() != self.context.rank() {
            return Err(NovikovError::WrongExponentRank {
                expected: self.context.rank(),
                got: expo.len(),
            });
        }
        if coeff.is_zero() || !self.context.retains(&expo) {
            return Ok(());
        }
        match self.terms.remove(&expo) {
            None => {
                self.terms.insert(expo, coeff);
            }
            Some(old) => {
                let sum = old.add(&coeff)?;
                if !sum.is_zero() {
                    self.terms.insert(expo, sum);
                }
            }
        }
        Ok(())
    }

    /// ξ-maximal term.
    pub fn leading(&self) -> Option<(&Exponent, &C)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| self.context.cmp_mono(a, b))
    }

    pub fn add(&self, other: &Self) -> Result<Self, NovikovError> {
        if self.context != other.context {
            return Err(NovikovError::ContextMismatch);
        }
        let mut out = self.clone();
        for (expo, coeff) in &other.terms {
            out.add_term(expo.clone(), coeff.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        NovikovSeries {
            context: self.context.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NovikovError> {
        self.add(&other.neg())
    }

    /// Convolution product, truncated at the context cutoff.
    pub fn mul(&self, other: &Self) -> Result<Self, NovikovError> {
        if self.context != other.context {
            return Err(NovikovError::ContextMismatch);
        }
        let mut out = Self::zero(self.context.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let expo: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if !self.context.retains(&expo) {
                    continue;
                }
                out.add_term(expo, c1.mul(c2)?)?;
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<D: NovikovCoeff>(&self, f: impl Fn(&C) -> D) -> NovikovSeries<D> {
        let mut out = NovikovSeries::zero(self.context.clone());
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                out.terms.insert(e.clone(), d);
            }
        }
        out
    }
}

impl NovikovSeries<i64> {
    pub fn one(context: NovikovContext) -> Self {
        let rank = context.rank();
        let mut s = Self::zero(context);
        s.add_term(vec![0; rank], 1).unwrap();
        s
    }
}

impl NovikovSeries<FpScalar> {
    pub fn one_fp(context: NovikovContext, p: u64) -> Self {
        let rank = context.rank();
        let mut s = Self::zero(context);
        s.add_term(vec![0; rank], FpScalar::new(p, 1)).unwrap();
        s
    }

    /// Multiplicative inverse up to truncation, by leading-term
    /// normalization and a geometric series. The product with the input
    /// agrees with 1 on every term of level above
    /// `cutoff + level(leading term)`.
    ///
    /// The term of maximal weight must be unique: every remainder term
    /// then sits strictly below level 0, so the geometric series falls
    /// under the cutoff after finitely many steps. A tie at the top means
    /// the weights fail to separate the support and inversion is refused.
    pub fn invert(&self) -> Result<Self, NovikovError> {
        let (lead_expo, lead_coeff) = self.leading().ok_or(NovikovError::ZeroInverse)?;
        let lead_level = self.context.level(lead_expo);
        if self
            .terms
            .iter()
            .filter(|(e, _)| self.context.level(e) == lead_level)
            .count()
            > 1
        {
            return Err(NovikovError::AmbiguousLeadingTerm);
        }
        let lead_expo = lead_expo.clone();
        let lead_inv = lead_coeff.inverse().expect("nonzero residue mod a prime");
        let p = lead_coeff.p;
        // Normalize first: r = 1 - lead^-1 t^-m · a has only terms of
        // strictly negative level, all safely above the cutoff during the
        // geometric phase. The shift back by -m happens term-wise at the
        // end, where truncation is the intended behaviour (a leading level
        // beyond -cutoff leaves nothing representable of the inverse).
        let mut r = Self::zero(self.context.clone());
        for (expo, coeff) in &self.terms {
            if *expo == lead_expo {
                continue;
            }
            let shifted: Exponent = expo.iter().zip(&lead_expo).map(|(e, m)| e - m).collect();
            r.add_term(shifted, lead_inv.mul(coeff)?.neg())?;
        }
        debug_assert!(r
            .terms
            .keys()
            .all(|e| r.context.level(e) < num_rational::Ratio::from_integer(0)));
        // geometric series sum r^k; each factor drops the maximal level by
        // the top gap of r, so truncation terminates the loop
        let one = Self::one_fp(self.context.clone(), p);
        let mut acc = one.clone();
        let mut pow = r.clone();
        while !pow.is_zero() {
            acc = acc.add(&pow)?;
            pow = pow.mul(&r)?;
        }
        // undo the normalization: multiply by lead^-1 t^-m term-wise
        let mut out = Self::zero(self.context.clone());
        for (expo, coeff) in acc.terms() {
            let shifted: Exponent = expo.iter().zip(&lead_expo).map(|(e, m)| e - m).collect();
            out.add_term(shifted, lead_inv.mul(coeff)?)?;
        }
        Ok(out)
    }
}

impl NovikovSeries<GroupRingCoeff> {
    /// Coefficient-wise augmentation: the ring map ℤ[G]((T)) → ℤ((T)).
    pub fn augment(&self) -> NovikovSeries<i64> {
        self.map_coeffs(|c| c.augmentation())
    }

    /// Re-brackets a ℤ[G]((T)) element as a G-indexed vector of ℤ((T))
    /// series (the ring ℤ((T))[G] for finite G). Lossless.
    pub fn split_by_group_element(&self) -> BTreeMap<usize, NovikovSeries<i64>> {
        let mut out: BTreeMap<usize, NovikovSeries<i64>> = BTreeMap::new();
        for (expo, coeff) in &self.terms {
            for (&g, &c) in &coeff.terms {
                out.entry(g)
                    .or_insert_with(|| NovikovSeries::zero(self.context.clone()))
                    .add_term(expo.clone(), c)
                    .expect("term already validated");
            }
        }
        out
    }

    /// Inverse of [`split_by_group_element`].
    pub fn from_group_components(
        context: NovikovContext,
        group: Arc<FiniteGroup>,
        components: &BTreeMap<usize, NovikovSeries<i64>>,
    ) -> Result<Self, NovikovError> {
        let mut out = Self::zero(context);
        for (&g, series) in components {
            for (expo, &c) in series.terms() {
                out.add_term(expo.clone(), GroupRingCoeff::single(group.clone(), g, c))?;
            }
        }
        Ok(out)
    }
}
