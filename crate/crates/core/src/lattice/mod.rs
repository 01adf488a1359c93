//! Non-degenerate integral lattices given by Gram matrices, and the
//! invariants used to tell them apart.

mod discriminant;
mod isometry;
mod named;

pub use discriminant::{
    delta_invariant, discriminant, genus_fingerprint, is_p_elementary, DiscriminantData,
    GenusFingerprint,
};
pub use isometry::{is_isometry_witness, isometry_search, DEFAULT_COEFF_BOUND};
pub use named::{make_named, Block, NamedLattice, Term};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::linalg::{self, IntMatrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("scale factor must be non-zero")]
    ZeroScale,
    #[error("unknown lattice name `{0}`")]
    UnknownName(String),
    #[error("lattice is odd; the discriminant quadratic form is only defined mod 1")]
    OddLattice,
    #[error("lattice is not 2-elementary")]
    NotTwoElementary,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("basis vectors are linearly dependent")]
    DependentColumns,
    #[error("basis has {found} coordinates but the ambient lattice has rank {expected}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("discriminant group of order {0} is too large to enumerate")]
    DiscriminantTooLarge(BigInt),
    #[error("isometry search out of range: {0}")]
    SearchRange(String),
}

/// A free Z-module with a non-degenerate symmetric integral bilinear form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lattice {
    gram: IntMatrix,
}

impl Lattice {
    pub fn new(gram: IntMatrix) -> Result<Self, LatticeError> {
        gram.require_square()?;
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        if gram.det()?.is_zero() {
            return Err(LatticeError::Degenerate);
        }
        Ok(Self { gram })
    }

    pub fn from_rows<T: Into<BigInt> + Copy, R: AsRef<[T]>>(
        rows: &[R],
    ) -> Result<Self, LatticeError> {
        Self::new(IntMatrix::try_from_rows(rows)?)
    }

    /// The zero lattice.
    pub fn empty() -> Self {
        Self {
            gram: IntMatrix::zeros(0, 0),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn det(&self) -> BigInt {
        self.gram.det().expect("Gram matrix is square")
    }

    /// `|det|`, the order of the discriminant group.
    pub fn discriminant_order(&self) -> BigInt {
        self.det().abs()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| self.gram[(i, i)].is_even())
    }

    pub fn is_unimodular(&self) -> bool {
        self.discriminant_order() == BigInt::from(1)
    }

    pub fn signature(&self) -> (usize, usize) {
        linalg::congruent_diagonalize(&self.gram).expect("validated non-degenerate form")
    }

    pub fn is_hyperbolic(&self) -> bool {
        let (plus, minus) = self.signature();
        plus == 1 && minus > 0
    }

    pub fn inner(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let gy = self.gram.apply(y);
        x.iter().zip(&gy).map(|(a, b)| a * b).sum()
    }

    /// `L(n)`: the same module with the form multiplied by `n`.
    pub fn rescale(&self, n: &BigInt) -> Result<Self, LatticeError> {
        if n.is_zero() {
            return Err(LatticeError::ZeroScale);
        }
        Ok(Self {
            gram: self.gram.scale(n),
        })
    }

    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        Lattice {
            gram: IntMatrix::block_diag(&[&self.gram, &other.gram]),
        }
    }

    /// Gram matrix `P^T G P` in a new basis given by the columns of `p`.
    pub fn change_basis(&self, p: &IntMatrix) -> Result<Lattice, LatticeError> {
        Lattice::new(p.transpose().try_mul(&self.gram)?.try_mul(p)?)
    }
}

/// A lattice together with the coordinates of its basis vectors (as
/// columns) in some ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedLattice {
    pub basis: IntMatrix,
    pub lattice: Lattice,
}

impl EmbeddedLattice {
    /// The sublattice spanned by the columns of `basis`, with the restricted form.
    pub fn span(basis: IntMatrix, ambient: &Lattice) -> Result<Self, LatticeError> {
        if basis.rows() != ambient.rank() {
            return Err(LatticeError::AmbientMismatch {
                expected: ambient.rank(),
                found: basis.rows(),
            });
        }
        if linalg::rank(&basis) != basis.cols() {
            return Err(LatticeError::DependentColumns);
        }
        let gram = basis.transpose().try_mul(ambient.gram())?.try_mul(&basis)?;
        Ok(Self {
            basis,
            lattice: Lattice::new(gram)?,
        })
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }
}

/// The saturated sublattice `{x : <x, s> = 0 for all s in sub}` of `ambient`,
/// where `sub` holds vectors of the ambient lattice as columns.
pub fn orthogonal_complement(
    sub: &IntMatrix,
    ambient: &Lattice,
) -> Result<EmbeddedLattice, LatticeError> {
    if sub.rows() != ambient.rank() {
        return Err(LatticeError::AmbientMismatch {
            expected: ambient.rank(),
            found: sub.rows(),
        });
    }
    if linalg::rank(sub) != sub.cols() {
        return Err(LatticeError::DependentColumns);
    }
    let constraints = sub.transpose().try_mul(ambient.gram())?;
    let kernel = linalg::integer_kernel(&constraints);
    EmbeddedLattice::span(kernel, ambient)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u() -> Lattice {
        Lattice::from_rows(&[[0, 1], [1, 0]]).unwrap()
    }

    fn rank1(k: i64) -> Lattice {
        Lattice::from_rows(&[[k]]).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            Lattice::from_rows(&[[0, 1], [2, 0]]),
            Err(LatticeError::NotSymmetric)
        );
        assert_eq!(
            Lattice::from_rows(&[[2, 2], [2, 2]]),
            Err(LatticeError::Degenerate)
        );
        assert!(matches!(
            Lattice::from_rows(&[[1, 2, 3]]),
            Err(LatticeError::Matrix(MatrixError::NotSquare { .. }))
        ));
    }

    #[test]
    fn direct_sums() {
        let l = u().direct_sum(&rank1(-2)).direct_sum(&rank1(-2));
        assert_eq!(l.rank(), 4);
        assert_eq!(l.det(), BigInt::from(-4));
        assert_eq!(u().direct_sum(&Lattice::empty()), u());
        let d = rank1(2).direct_sum(&rank1(-2));
        assert_eq!(d.gram(), &IntMatrix::from_rows(&[[2, 0], [0, -2]]));
        assert_eq!(d.det(), BigInt::from(-4));
    }

    #[test]
    fn rescaling() {
        let u2 = u().rescale(&BigInt::from(2)).unwrap();
        assert_eq!(u2.gram(), &IntMatrix::from_rows(&[[0, 2], [2, 0]]));
        assert_eq!(u().rescale(&BigInt::zero()), Err(LatticeError::ZeroScale));
    }

    #[test]
    fn signature_and_parity() {
        assert_eq!(u().signature(), (1, 1));
        assert!(u().is_even() && u().is_hyperbolic() && u().is_unimodular());
        assert!(!rank1(3).is_even());
        assert_eq!(Lattice::empty().signature(), (0, 0));
        assert_eq!(Lattice::empty().det(), BigInt::from(1));
    }

    fn g6() -> Lattice {
        let mut g = IntMatrix::zeros(6, 6);
        for (i, s) in [1, -1, 1, 1, -1, 1].into_iter().enumerate() {
            g[(i, 5 - i)] = BigInt::from(s);
        }
        Lattice::new(g).unwrap()
    }

    #[test]
    fn complement_of_product_planes() {
        // span(e12, e34) in the wedge model
        let sub = IntMatrix::from_rows(&[[1, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 1]]);
        let c = orthogonal_complement(&sub, &g6()).unwrap();
        assert_eq!(c.rank(), 4);
        assert!(c.lattice.is_unimodular());
        assert_eq!(c.lattice.signature(), (2, 2));
        assert_eq!(
            c.lattice.gram(),
            &IntMatrix::from_rows(&[[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]])
        );
    }

    #[test]
    fn complement_of_everything_is_zero() {
        let c = orthogonal_complement(&IntMatrix::identity(6), &g6()).unwrap();
        assert_eq!(c.rank(), 0);
        assert_eq!(c.basis.rows(), 6);
    }

    #[test]
    fn complement_errors() {
        let dependent = IntMatrix::from_rows(&[[1, 2], [0, 0], [0, 0], [0, 0], [0, 0], [1, 2]]);
        assert_eq!(
            orthogonal_complement(&dependent, &g6()),
            Err(LatticeError::DependentColumns)
        );
        assert!(matches!(
            orthogonal_complement(&IntMatrix::identity(2), &g6()),
            Err(LatticeError::AmbientMismatch { .. })
        ));
    }
}
