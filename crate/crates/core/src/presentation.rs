//! Group presentations, word arithmetic, Fox derivatives and homology with
//! local coefficients.
//!
//! The presentation 2-complex of `<x_1..x_d | r_1..r_s>` has chain groups
//! of ranks s, d, 1. Against a linear representation of the quotient its
//! boundary maps are assembled from Fox derivatives, which is all that is
//! needed for b_0 and b_1 with local coefficients; first homology depends
//! only on the presentation.
//!
//! Word grammar (ASCII): a generator name, `^` with an integer exponent,
//! parenthesized subwords, juxtaposition for products. `a^-1`, `a^3`,
//! `(ab)^2`. Names are matched greedily against the declared generator
//! list.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::group::FiniteGroup;
use crate::linalg::{smith_normal_form, IntegerMatrix, PrimeFieldMatrix};

/// Freely reduced word in the generators of a presentation: a sequence of
/// (generator index, ±1) letters with no cancelling neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl Word {
    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn from_letters(letters: Vec<(usize, i8)>) -> Self {
        let mut w = Word {
            letters: Vec::new(),
        };
        for (g, s) in letters {
            w.push(g, s);
        }
        w
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, gen: usize, sign: i8) {
        debug_assert!(sign == 1 || sign == -1);
        if let Some(&(g, s)) = self.letters.last() {
            if g == gen && s == -sign {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((gen, sign));
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, s) in &other.letters {
            w.push(g, s);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, s)| (g, -s)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Net exponent of each generator (the image in the free abelianization).
    pub fn exponent_vector(&self, num_gens: usize) -> Vec<i64> {
        let mut v = vec![0i64; num_gens];
        for &(g, s) in &self.letters {
            v[g] += s as i64;
        }
        v
    }

    /// Evaluates the word in `group` under `images[gen]`.
    pub fn evaluate(&self, group: &FiniteGroup, images: &[usize]) -> usize {
        let mut acc = group.identity();
        for &(g, s) in &self.letters {
            let e = if s > 0 {
                images[g]
            } else {
                group.inv(images[g])
            };
            acc = group.mul(acc, e);
        }
        acc
    }

    pub fn render(&self, gens: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let (g, s) = self.letters[i];
            let mut run = 1usize;
            while i + run < self.letters.len() && self.letters[i + run] == (g, s) {
                run += 1;
            }
            out.push_str(&gens[g]);
            let e = s as i64 * run as i64;
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
            i += run;
        }
        out
    }

    /// Parses the word grammar against the declared generator names.
    pub fn parse(text: &str, gens: &[String]) -> Result<Word, ParseError> {
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let word = parse_sequence(bytes, &mut pos, gens, 0)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(ParseError {
                position: pos,
                message: "unexpected trailing input".into(),
            });
        }
        Ok(word)
    }
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && (bytes[*pos] as char).is_whitespace() {
        *pos += 1;
    }
}

fn parse_sequence(
    bytes: &[u8],
    pos: &mut usize,
    gens: &[String],
    depth: usize,
) -> Result<Word, ParseError> {
    let mut word = Word::empty();
    loop {
        skip_ws(bytes, pos);
        if *pos >= bytes.len() {
            break;
        }
        let c = bytes[*pos];
        if c == b')' {
            if depth == 0 {
                return Err(ParseError {
                    position: *pos,
                    message: "unmatched ')'".into(),
                });
            }
            break;
        }
        let factor = if c == b'(' {
            *pos += 1;
            let inner = parse_sequence(bytes, pos, gens, depth + 1)?;
            skip_ws(bytes, pos);
            if *pos >= bytes.len() || bytes[*pos] != b')' {
                return Err(ParseError {
                    position: *pos,
                    message: "expected ')'".into(),
                });
            }
            *pos += 1;
            inner
        } else {
            // longest generator-name match; a bare '1' is the identity
            let rest = &bytes[*pos..];
            let mut best: Option<usize> = None;
            for (gi, name) in gens.iter().enumerate() {
                let nb = name.as_bytes();
                if rest.starts_with(nb) {
                    match best {
                        Some(b) if gens[b].len() >= name.len() => {}
                        _ => best = Some(gi),
                    }
                }
            }
            match best {
                Some(gi) => {
                    *pos += gens[gi].len();
                    Word::from_letters(vec![(gi, 1)])
                }
                None if c == b'1' => {
                    *pos += 1;
                    Word::empty()
                }
                None => {
                    return Err(ParseError {
                        position: *pos,
                        message: format!(
                            "unknown generator at '{}'",
                            core::str::from_utf8(&rest[..rest.len().min(8)]).unwrap_or("?")
                        ),
                    });
                }
            }
        };
        // optional exponent
        skip_ws(bytes, pos);
        let factor = if *pos < bytes.len() && bytes[*pos] == b'^' {
            *pos += 1;
            skip_ws(bytes, pos);
            let start = *pos;
            if *pos < bytes.len() && (bytes[*pos] == b'-' || bytes[*pos] == b'+') {
                *pos += 1;
            }
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let txt = core::str::from_utf8(&bytes[start..*pos]).unwrap();
            let e: i64 = txt.parse().map_err(|_| ParseError {
                position: start,
                message: "expected integer exponent".into(),
            })?;
            factor.pow(e)
        } else {
            factor
        };
        word = word.concat(&factor);
    }
    Ok(word)
}

/// A finite group presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        for r in &relators {
            for &(g, _) in r.letters() {
                assert!(g < generators.len(), "relator uses undeclared generator");
            }
        }
        Presentation {
            generators,
            relators,
        }
    }

    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self, ParseError> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relators
            .iter()
            .map(|r| Word::parse(r, &gens))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Presentation {
            generators: gens,
            relators: rels,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Relator exponent matrix (one row per relator).
    pub fn exponent_matrix(&self) -> IntegerMatrix {
        let d = self.generators.len();
        let s = self.relators.len();
        let mut m = IntegerMatrix::zero(s, d);
        for (i, r) in self.relators.iter().enumerate() {
            for (j, e) in r.exponent_vector(d).into_iter().enumerate() {
                m.set(i, j, BigInt::from(e));
            }
        }
        m
    }

    /// Elementary divisors of the abelianized presentation; unit entries
    /// are dropped and each free factor appears as a 0.
    pub fn abelianization(&self) -> Vec<BigInt> {
        let snf = smith_normal_form(&self.exponent_matrix());
        let diag = snf.diagonal();
        let rank = diag.iter().filter(|x| !x.is_zero()).count();
        let mut out: Vec<BigInt> = diag
            .into_iter()
            .filter(|x| !x.is_zero() && !x.is_one())
            .collect();
        for _ in 0..self.generators.len() - rank {
            out.push(BigInt::zero());
        }
        out
    }

    /// dim of (abelianization ⊗ F_p): the Smith-normal-form route to the
    /// first Betti number with trivial coefficients.
    pub fn b1_mod_p_by_snf(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.abelianization()
            .iter()
            .filter(|d| d.is_zero() || (*d % &p).is_zero())
            .count()
    }
}

/// A homomorphism from a presentation's group to a finite group, given by
/// generator images; construction verifies every relator.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub group: Arc<FiniteGroup>,
    pub images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomError {
    WrongImageCount { expected: usize, got: usize },
    ImageOutOfRange { index: usize },
    RelatorNotSatisfied { relator: usize },
}

impl core::fmt::Display for HomError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            HomError::WrongImageCount { expected, got } => {
                write!(f, "expected {expected} generator images, got {got}")
            }
            HomError::ImageOutOfRange { index } => {
                write!(f, "generator image {index} is out of range")
            }
            HomError::RelatorNotSatisfied { relator } => {
                write!(f, "relator {relator} does not map to the identity")
            }
        }
    }
}

impl GroupHom {
    pub fn new(
        pres: &Presentation,
        group: Arc<FiniteGroup>,
        images: Vec<usize>,
    ) -> Result<Self, HomError> {
        if images.len() != pres.num_generators() {
            return Err(HomError::WrongImageCount {
                expected: pres.num_generators(),
                got: images.len(),
            });
        }
        for (i, &img) in images.iter().enumerate() {
            if img >= group.order() {
                return Err(HomError::ImageOutOfRange { index: i });
            }
        }
        for (i, r) in pres.relators().iter().enumerate() {
            if r.evaluate(&group, &images) != group.identity() {
                return Err(HomError::RelatorNotSatisfied { relator: i });
            }
        }
        Ok(GroupHom { group, images })
    }

    /// Whether the images generate the whole target group.
    pub fn is_surjective(&self) -> bool {
        self.group.subgroup_closure(&self.images).len() == self.group.order()
    }
}

/// A linear representation of a presented group, stored as one invertible
/// matrix per presentation generator (with relators verified to map to the
/// identity). This is the evaluated form ρ̄ = ρ ∘ hom used by the Fox
/// calculus, and also the shape in which representation files arrive.
#[derive(Clone, Debug)]
pub struct LinearRep {
    pub prime: u64,
    pub dim: usize,
    images: Vec<PrimeFieldMatrix>,
    inverses: Vec<PrimeFieldMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearRepError {
    WrongImageCount { expected: usize, got: usize },
    NotSquare { index: usize },
    DimensionMismatch { index: usize },
    NotInvertible { index: usize },
    RelatorNotSatisfied { relator: usize },
    PrimeMismatch,
}

impl core::fmt::Display for LinearRepError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LinearRepError::WrongImageCount { expected, got } => {
                write!(f, "expected {expected} matrices, got {got}")
            }
            LinearRepError::NotSquare { index } => write!(f, "image {index} is not square"),
            LinearRepError::DimensionMismatch { index } => {
                write!(f, "image {index} has the wrong dimension")
            }
            LinearRepError::NotInvertible { index } => write!(f, "image {index} is singular"),
            LinearRepError::RelatorNotSatisfied { relator } => {
                write!(f, "relator {relator} does not map to the identity matrix")
            }
            LinearRepError::PrimeMismatch => write!(f, "matrices use different primes"),
        }
    }
}

impl LinearRep {
    pub fn new(
        pres: &Presentation,
        prime: u64,
        dim: usize,
        images: Vec<PrimeFieldMatrix>,
    ) -> Result<Self, LinearRepError> {
        if images.len() != pres.num_generators() {
            return Err(LinearRepError::WrongImageCount {
                expected: pres.num_generators(),
                got: images.len(),
            });
        }
        let mut inverses = Vec::with_capacity(images.len());
        for (i, m) in images.iter().enumerate() {
            if m.prime() != prime {
                return Err(LinearRepError::PrimeMismatch);
            }
            if m.rows() != m.cols() {
                return Err(LinearRepError::NotSquare { index: i });
            }
            if m.rows() != dim {
                return Err(LinearRepError::DimensionMismatch { index: i });
            }
            inverses.push(
                m.inverse()
                    .ok_or(LinearRepError::NotInvertible { index: i })?,
            );
        }
        let rep = LinearRep {
            prime,
            dim,
            images,
            inverses,
        };
        let id = PrimeFieldMatrix::identity(prime, dim);
        for (i, r) in pres.relators().iter().enumerate() {
            if rep.word_image(r) != id {
                return Err(LinearRepError::RelatorNotSatisfied { relator: i });
            }
        }
        Ok(rep)
    }

    /// The 1-dimensional trivial representation over F_p.
    pub fn trivial(pres: &Presentation, prime: u64) -> Self {
        let id = PrimeFieldMatrix::identity(prime, 1);
        LinearRep {
            prime,
            dim: 1,
            images: vec![id.clone(); pres.num_generators()],
            inverses: vec![id; pres.num_generators()],
        }
    }

    /// Pulls a group representation back along a homomorphism from the
    /// presentation.
    pub fn from_group_rep(
        pres: &Presentation,
        hom: &GroupHom,
        rho: &crate::rep::Representation,
    ) -> Self {
        assert!(
            Arc::ptr_eq(&hom.group, rho.group_handle()) || *hom.group == **rho.group_handle(),
            "homomorphism target and representation group differ"
        );
        assert_eq!(hom.images.len(), pres.num_generators());
        let all = rho.element_images();
        let images: Vec<PrimeFieldMatrix> = hom.images.iter().map(|&e| all[e].clone()).collect();
        let inverses: Vec<PrimeFieldMatrix> = hom
            .images
            .iter()
            .map(|&e| all[hom.group.inv(e)].clone())
            .collect();
        LinearRep {
            prime: rho.prime(),
            dim: rho.dim(),
            images,
            inverses,
        }
    }

    pub fn gen_image(&self, j: usize) -> &PrimeFieldMatrix {
        &self.images[j]
    }

    pub fn gen_inverse(&self, j: usize) -> &PrimeFieldMatrix {
        &self.inverses[j]
    }

    pub fn word_image(&self, w: &Word) -> PrimeFieldMatrix {
        let mut acc = PrimeFieldMatrix::identity(self.prime, self.dim);
        for &(g, s) in w.letters() {
            let m = if s > 0 {
                &self.images[g]
            } else {
                &self.inverses[g]
            };
            acc = acc.mul(m);
        }
        acc
    }

    pub fn is_trivial(&self) -> bool {
        let id = PrimeFieldMatrix::identity(self.prime, self.dim);
        self.dim == 1 && self.images.iter().all(|m| *m == id)
    }
}

/// Fox derivative ∂w/∂x_j evaluated through `rep`: the sum over
/// occurrences of x_j^{±1} of ±(image of the prefix), with the inverse
/// occurrences shifted past the letter. Satisfies the product rule
/// ∂(uv) = ∂u + ρ̄(u)·∂v and ∂(x^-1) = -ρ̄(x)^-1.
pub fn fox_derivative(word: &Word, gen: usize, rep: &LinearRep) -> PrimeFieldMatrix {
    let mut acc = PrimeFieldMatrix::zero(rep.prime, rep.dim, rep.dim);
    let mut prefix = PrimeFieldMatrix::identity(rep.prime, rep.dim);
    for &(g, s) in word.letters() {
        if s > 0 {
            if g == gen {
                acc = acc.add(&prefix);
            }
            prefix = prefix.mul(rep.gen_image(g));
        } else {
            prefix = prefix.mul(rep.gen_inverse(g));
            if g == gen {
                acc = acc.sub(&prefix);
            }
        }
    }
    acc
}

/// Boundary matrix C_1 -> C_0 of the presentation complex against `rep`:
/// a (d·r × r) vertical stack of blocks ρ̄(x_j) - I, acting on row vectors
/// from the right.
pub fn boundary_one(pres: &Presentation, rep: &LinearRep) -> PrimeFieldMatrix {
    let r = rep.dim;
    let d = pres.num_generators();
    let id = PrimeFieldMatrix::identity(rep.prime, r);
    let mut m = PrimeFieldMatrix::zero(rep.prime, d * r, r);
    for j in 0..d {
        m.set_block(j * r, 0, &rep.gen_image(j).sub(&id));
    }
    m
}

/// Boundary matrix C_2 -> C_1: block (i, j) is the Fox derivative of
/// relator i by generator j.
pub fn boundary_two(pres: &Presentation, rep: &LinearRep) -> PrimeFieldMatrix {
    let r = rep.dim;
    let d = pres.num_generators();
    let s = pres.relators().len();
    let mut m = PrimeFieldMatrix::zero(rep.prime, s * r, d * r);
    for (i, rel) in pres.relators().iter().enumerate() {
        for j in 0..d {
            m.set_block(i * r, j * r, &fox_derivative(rel, j, rep));
        }
    }
    m
}

/// Betti number of the presentation 2-complex with local coefficients in
/// `rep`, in degree 0 or 1.
pub fn local_betti(pres: &Presentation, rep: &LinearRep, degree: usize) -> usize {
    assert!(
        degree <= 1,
        "only degrees 0 and 1 are defined for a presentation"
    );
    let d1 = boundary_one(pres, rep);
    let rank1 = d1.rank();
    match degree {
        0 => rep.dim - rank1,
        _ => {
            let d2 = boundary_two(pres, rep);
            pres.num_generators() * rep.dim - rank1 - d2.rank()
        }
    }
}

pub fn local_betti_trivial(pres: &Presentation, prime: u64, degree: usize) -> usize {
    local_betti(pres, &LinearRep::trivial(pres, prime), degree)
}

/// Presentation of a finite group on its canonical generators, read off
/// the Cayley graph: one relator per non-tree edge, of the form
/// w_g · s · w_{g·s}^{-1} with w_x the BFS tree word. The relators
/// generate the full kernel of F(S) -> G as a subgroup, so the presented
/// group is exactly G. Returns the presentation and the generator images.
pub fn cayley_presentation(group: &FiniteGroup) -> (Presentation, Vec<usize>) {
    let gens = group.generators().to_vec();
    let names: Vec<String> = (0..gens.len()).map(|i| format!("x{i}")).collect();
    let tree = group.bfs_tree();
    let mut relators = Vec::new();
    let word_to =
        |e: usize| Word::from_letters(group.bfs_word(e).into_iter().map(|g| (g, 1)).collect());
    for e in 0..group.order() {
        for (si, &s) in gens.iter().enumerate() {
            let target = group.mul(e, s);
            // tree edges contribute nothing
            if tree[target] == Some((e, si)) {
                continue;
            }
            let rel = word_to(e)
                .concat(&Word::from_letters(vec![(si, 1)]))
                .concat(&word_to(target).inverse());
            if !rel.is_empty() {
                relators.push(rel);
            }
        }
    }
    (Presentation::new(names, relators), gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{coset_enumeration, EnumerationResult};

    fn gens(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_square() {
        let g = gens(&["a"]);
        let w = Word::parse("a^2", &g).unwrap();
        assert_eq!(w.letters(), &[(0, 1), (0, 1)]);
    }

    #[test]
    fn parse_commutator() {
        let g = gens(&["a", "b"]);
        let w = Word::parse("aba^-1b^-1", &g).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(w.letters(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
    }

    #[test]
    fn parse_parenthesized_power() {
        let g = gens(&["a", "b"]);
        let w = Word::parse("(ab)^2", &g).unwrap();
        assert_eq!(w.letters(), &[(0, 1), (1, 1), (0, 1), (1, 1)]);
    }

    #[test]
    fn parse_errors_carry_position() {
        let g = gens(&["a"]);
        let err = Word::parse("ac", &g).unwrap_err();
        assert_eq!(err.position, 1);
        assert!(Word::parse("a^x", &g).is_err());
        assert!(Word::parse("(a", &g).is_err());
    }

    #[test]
    fn free_reduction() {
        let g = gens(&["a", "b"]);
        let w = Word::parse("abb^-1a^-1", &g).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn fox_derivative_of_square_under_trivial_rep() {
        let pres = Presentation::parse(&["a"], &["a^2"]).unwrap();
        let rep = LinearRep::trivial(&pres, 5);
        let d = fox_derivative(&pres.relators()[0], 0, &rep);
        assert_eq!(d.get(0, 0), 2);
    }

    #[test]
    fn fox_derivative_of_commutator_vanishes_trivially() {
        let pres = Presentation::parse(&["a", "b"], &["aba^-1b^-1"]).unwrap();
        let rep = LinearRep::trivial(&pres, 7);
        assert!(fox_derivative(&pres.relators()[0], 0, &rep).is_zero());
        assert!(fox_derivative(&pres.relators()[0], 1, &rep).is_zero());
    }

    #[test]
    fn fox_derivative_of_cube_mod_three() {
        let pres = Presentation::parse(&["a"], &["a^3"]).unwrap();
        let rep = LinearRep::trivial(&pres, 3);
        assert!(fox_derivative(&pres.relators()[0], 0, &rep).is_zero());
    }

    #[test]
    fn fox_product_rule_and_inverse_rule() {
        use crate::rng::Rng;
        // random words over S3 pulled through its 2-dim representation
        // mod 2: x -> [[0,1],[1,0]], y -> [[0,1],[1,1]] generate GL(2,2).
        let pres = Presentation::parse(&["x", "y"], &[]).unwrap();
        let mx = PrimeFieldMatrix::from_signed(2, 2, 2, &[0, 1, 1, 0]);
        let my = PrimeFieldMatrix::from_signed(2, 2, 2, &[0, 1, 1, 1]);
        let rep = LinearRep::new(&pres, 2, 2, vec![mx, my]).unwrap();
        let mut rng = Rng::new(9);
        let random_word = |rng: &mut Rng| {
            let len = rng.below_usize(6);
            Word::from_letters(
                (0..len)
                    .map(|_| {
                        (
                            rng.below_usize(2),
                            if rng.below(2) == 0 { 1i8 } else { -1i8 },
                        )
                    })
                    .collect(),
            )
        };
        for _ in 0..50 {
            let u = random_word(&mut rng);
            let v = random_word(&mut rng);
            let uv = u.concat(&v);
            for gen in 0..2 {
                let lhs = fox_derivative(&uv, gen, &rep);
                let rhs = fox_derivative(&u, gen, &rep)
                    .add(&rep.word_image(&u).mul(&fox_derivative(&v, gen, &rep)));
                assert_eq!(lhs, rhs, "product rule failed");
            }
        }
        for gen in 0..2 {
            let w = Word::from_letters(vec![(gen, -1)]);
            let d = fox_derivative(&w, gen, &rep);
            assert_eq!(d, rep.gen_inverse(gen).neg(), "inverse rule failed");
        }
    }

    #[test]
    fn b0_is_one_for_trivial_coefficients() {
        let pres = Presentation::parse(&["a", "b"], &["a^2", "b^3", "(ab)^2"]).unwrap();
        for p in [2, 3, 5] {
            assert_eq!(local_betti_trivial(&pres, p, 0), 1);
        }
    }

    #[test]
    fn klein_presentation_b1_mod_2() {
        let pres = Presentation::parse(&["a", "b"], &["a^2", "b^2", "(ab)^2"]).unwrap();
        assert_eq!(local_betti_trivial(&pres, 2, 1), 2);
        assert_eq!(pres.b1_mod_p_by_snf(2), 2);
    }

    #[test]
    fn s3_presentation_b1_mod_3_vanishes() {
        let pres = Presentation::parse(&["a", "b"], &["a^2", "b^3", "(ab)^2"]).unwrap();
        assert_eq!(local_betti_trivial(&pres, 3, 1), 0);
        assert_eq!(local_betti_trivial(&pres, 2, 1), 1);
    }

    #[test]
    fn abelianization_examples() {
        let pres = Presentation::parse(&["a"], &["a^5"]).unwrap();
        let div: Vec<i64> = pres
            .abelianization()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(div, vec![5]);

        let pres = Presentation::parse(&["a", "b"], &["a^2", "b^2", "(ab)^2"]).unwrap();
        let div: Vec<i64> = pres
            .abelianization()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(div, vec![2, 2]);

        let pres = Presentation::parse(&["a", "b"], &["aba^-1b^-1"]).unwrap();
        let div: Vec<i64> = pres
            .abelianization()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(div, vec![0, 0]);
    }

    #[test]
    fn local_betti_invariant_under_tietze_moves() {
        // replacing a relator by its conjugate or by its product with
        // another relator leaves b_0, b_1 unchanged
        let pres = Presentation::parse(&["a", "b"], &["a^2", "b^3", "(ab)^2"]).unwrap();
        let names = pres.generators().to_vec();
        let conj = Word::parse("b", &names).unwrap();
        let mut rel2 = pres.relators().to_vec();
        rel2[0] = conj.concat(&rel2[0]).concat(&conj.inverse());
        let moved = Presentation::new(names.clone(), rel2);
        let mut rel3 = pres.relators().to_vec();
        rel3[1] = rel3[1].concat(&rel3[0].clone());
        let multiplied = Presentation::new(names, rel3);
        for p in [2u64, 3] {
            for deg in [0usize, 1] {
                let reference = local_betti_trivial(&pres, p, deg);
                assert_eq!(local_betti_trivial(&moved, p, deg), reference);
                assert_eq!(local_betti_trivial(&multiplied, p, deg), reference);
            }
        }
    }

    #[test]
    fn cayley_presentation_presents_the_group() {
        for group in [
            FiniteGroup::cyclic(5),
            FiniteGroup::klein_four(),
            FiniteGroup::symmetric(3),
            FiniteGroup::quaternion8(),
            FiniteGroup::alternating(4),
        ] {
            let (pres, images) = cayley_presentation(&group);
            // relators hold in the group
            let hom = GroupHom::new(&pres, alloc::sync::Arc::new(group.clone()), images)
                .expect("cayley relators must hold");
            assert!(hom.is_surjective());
            // and the presented group has the right order
            match coset_enumeration(&pres, 10_000).unwrap() {
                EnumerationResult::Finite(n) => assert_eq!(n, group.order()),
                EnumerationResult::Unknown => panic!("enumeration should close"),
            }
        }
    }
}
