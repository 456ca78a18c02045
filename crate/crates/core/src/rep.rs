//! Representations of finite groups over prime fields.
//!
//! A representation stores one invertible matrix per canonical group
//! generator; images of arbitrary elements are derived along the BFS tree
//! of the group. Matrices act on row vectors from the right, so the image
//! of a product is the product of the images in the same order.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::group::FiniteGroup;
use crate::linalg::PrimeFieldMatrix;

pub const HOMOMORPHISM_CHECK_CAP: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepError {
    WrongImageCount { expected: usize, got: usize },
    NotSquare { index: usize },
    DimensionMismatch { index: usize },
    PrimeMismatch,
    NotInvertible { index: usize },
    NotAHomomorphism { element: usize, generator: usize },
}

impl core::fmt::Display for RepError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RepError::WrongImageCount { expected, got } => {
                write!(f, "expected {expected} generator images, got {got}")
            }
            RepError::NotSquare { index } => write!(f, "image {index} is not square"),
            RepError::DimensionMismatch { index } => {
                write!(f, "image {index} has the wrong dimension")
            }
            RepError::PrimeMismatch => write!(f, "images use different primes"),
            RepError::NotInvertible { index } => write!(f, "image {index} is singular"),
            RepError::NotAHomomorphism { element, generator } => {
                write!(
                    f,
                    "images violate the table at element {element}, generator {generator}"
                )
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Representation {
    group: Arc<FiniteGroup>,
    prime: u64,
    dim: usize,
    gen_images: Vec<PrimeFieldMatrix>,
}

impl Representation {
    /// Builds a representation from images of the group's canonical
    /// generators, verifying invertibility and (exhaustively, for groups
    /// of order up to [`HOMOMORPHISM_CHECK_CAP`]) consistency with the
    /// multiplication table.
    pub fn new(
        group: Arc<FiniteGroup>,
        prime: u64,
        gen_images: Vec<PrimeFieldMatrix>,
    ) -> Result<Self, RepError> {
        if gen_images.len() != group.generators().len() {
            return Err(RepError::WrongImageCount {
                expected: group.generators().len(),
                got: gen_images.len(),
            });
        }
        let dim = gen_images.first().map(|m| m.rows()).unwrap_or(1);
        for (i, m) in gen_images.iter().enumerate() {
            if m.prime() != prime {
                return Err(RepError::PrimeMismatch);
            }
            if m.rows() != m.cols() {
                return Err(RepError::NotSquare { index: i });
            }
            if m.rows() != dim {
                return Err(RepError::DimensionMismatch { index: i });
            }
            if !m.is_invertible() {
                return Err(RepError::NotInvertible { index: i });
            }
        }
        let rep = Representation {
            group,
            prime,
            dim,
            gen_images,
        };
        if rep.group.order() <= HOMOMORPHISM_CHECK_CAP {
            // image(g)·image(s) must equal image(g·s); with the BFS tree
            // definition this extends to all products.
            let images = rep.element_images();
            for e in 0..rep.group.order() {
                for (si, &s) in rep.group.generators().iter().enumerate() {
                    let lhs = images[e].mul(&rep.gen_images[si]);
                    if lhs != images[rep.group.mul(e, s)] {
                        return Err(RepError::NotAHomomorphism {
                            element: e,
                            generator: si,
                        });
                    }
                }
            }
        }
        Ok(rep)
    }

    /// Constructs without the homomorphism re-check; for matrices that are
    /// homomorphic by construction (restrictions, quotients, conjugates).
    pub(crate) fn new_unchecked(
        group: Arc<FiniteGroup>,
        prime: u64,
        dim: usize,
        gen_images: Vec<PrimeFieldMatrix>,
    ) -> Self {
        Representation {
            group,
            prime,
            dim,
            gen_images,
        }
    }

    pub fn trivial(group: Arc<FiniteGroup>, prime: u64) -> Self {
        let n = group.generators().len();
        Representation {
            group,
            prime,
            dim: 1,
            gen_images: alloc::vec![PrimeFieldMatrix::identity(prime, 1); n],
        }
    }

    /// The regular representation: each generator acts on the group
    /// elements by right multiplication.
    pub fn regular(group: Arc<FiniteGroup>, prime: u64) -> Self {
        let n = group.order();
        let gen_images = group
            .generators()
            .iter()
            .map(|&g| {
                let mut m = PrimeFieldMatrix::zero(prime, n, n);
                for x in 0..n {
                    m.set(x, group.mul(x, g), 1);
                }
                m
            })
            .collect();
        Representation {
            group,
            prime,
            dim: n,
            gen_images,
        }
    }

    pub fn group_handle(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gen_images(&self) -> &[PrimeFieldMatrix] {
        &self.gen_images
    }

    pub fn is_trivial(&self) -> bool {
        let id = PrimeFieldMatrix::identity(self.prime, self.dim);
        self.dim == 1 && self.gen_images.iter().all(|m| *m == id)
    }

    /// Images of every group element, indexed by element, filled along the
    /// BFS tree (|G| matrix products).
    pub fn element_images(&self) -> Vec<PrimeFieldMatrix> {
        let n = self.group.order();
        let tree = self.group.bfs_tree();
        let mut images: Vec<Option<PrimeFieldMatrix>> = alloc::vec![None; n];
        images[self.group.identity()] = Some(PrimeFieldMatrix::identity(self.prime, self.dim));
        fn fill(
            e: usize,
            tree: &[Option<(usize, usize)>],
            gen_images: &[PrimeFieldMatrix],
            images: &mut [Option<PrimeFieldMatrix>],
        ) {
            if images[e].is_some() {
                return;
            }
            let (parent, gi) = tree[e].expect("non-identity element has a tree parent");
            fill(parent, tree, gen_images, images);
            let m = images[parent].as_ref().unwrap().mul(&gen_images[gi]);
            images[e] = Some(m);
        }
        for e in 0..n {
            fill(e, tree, &self.gen_images, &mut images);
        }
        images.into_iter().map(|m| m.unwrap()).collect()
    }

    pub fn image_of(&self, element: usize) -> PrimeFieldMatrix {
        let mut acc = PrimeFieldMatrix::identity(self.prime, self.dim);
        for gi in self.group.bfs_word(element) {
            acc = acc.mul(&self.gen_images[gi]);
        }
        acc
    }

    /// Conjugates every generator image by `t` (a basis change).
    pub fn conjugated(&self, t: &PrimeFieldMatrix) -> Representation {
        let tinv = t.inverse().expect("basis change must be invertible");
        let gen_images = self.gen_images.iter().map(|m| tinv.mul(m).mul(t)).collect();
        Representation {
            group: self.group.clone(),
            prime: self.prime,
            dim: self.dim,
            gen_images,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn trivial_group_regular_rep() {
        let g = Arc::new(FiniteGroup::trivial());
        let rho = Representation::regular(g, 5);
        assert_eq!(rho.dim(), 1);
    }

    #[test]
    fn z2_regular_rep_is_swap() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let rho = Representation::regular(g, 3);
        assert_eq!(rho.dim(), 2);
        let m = &rho.gen_images()[0];
        assert_eq!(
            (m.get(0, 1), m.get(1, 0), m.get(0, 0), m.get(1, 1)),
            (1, 1, 0, 0)
        );
    }

    #[test]
    fn s3_regular_rep_is_permutation() {
        let g = Arc::new(FiniteGroup::symmetric(3));
        let rho = Representation::regular(g.clone(), 2);
        assert_eq!(rho.dim(), 6);
        for m in rho.gen_images() {
            for r in 0..6 {
                assert_eq!(m.row(r).iter().filter(|&&v| v == 1).count(), 1);
            }
        }
        // element images respect the table
        let images = rho.element_images();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(images[a].mul(&images[b]), images[g.mul(a, b)]);
            }
        }
    }

    #[test]
    fn invalid_images_rejected() {
        let g = Arc::new(FiniteGroup::cyclic(3));
        // order-2 matrix cannot be the image of an order-3 generator
        let m = PrimeFieldMatrix::from_signed(5, 1, 1, &[4]);
        assert!(matches!(
            Representation::new(g, 5, alloc::vec![m]),
            Err(RepError::NotAHomomorphism { .. })
        ));
    }
}
