//! The action induced on `H^2 = Λ^2 H^1` by an automorphism of a 2-torus.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * a 4x4 integer matrix `g` acts on `H^1 ≅ Z^4` (columns are images of the
//!   basis vectors `e_1..e_4`);
//! * `Λ^2 Z^4` has the ordered basis `e1∧e2, e1∧e3, e1∧e4, e2∧e3, e2∧e4, e3∧e4`;
//! * the pairing is `x ∧ y = <x, y> e1∧e2∧e3∧e4`, which in this basis is
//!   `antidiag(1, -1, 1, 1, -1, 1)`: even, unimodular, signature (3,3).
//!
//! The orientation `e1∧e2∧e3∧e4 > 0` must be the complex orientation of the
//! torus for the signs of invariant lattices to come out right.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::lattice::{orthogonal_complement, EmbeddedLattice, Lattice, LatticeError};
use crate::linalg::{integer_kernel, IntMatrix, MatrixError};

/// Index pairs of the wedge basis, in order.
pub const WEDGE_BASIS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Orders up to this bound are searched by [`order_of`].
pub const MAX_ORDER: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("expected a 4x4 matrix, got {0}x{1}")]
    NotFourByFour(usize, usize),
    #[error("determinant {0} is not ±1, so the matrix is not an automorphism of Z^4")]
    NotUnimodular(BigInt),
    #[error("infinite or unsupported order (no k <= {MAX_ORDER} with m^k = I)")]
    InfiniteOrder,
    #[error("positive-dimensional fixed locus (det(I - g) = 0)")]
    PositiveDimensional,
    #[error("determinant -1 reverses the orientation of H^4")]
    OrientationReversing,
}

/// `G6`, the cup-product pairing on `Λ^2 Z^4` in the wedge basis.
pub fn wedge_pairing() -> IntMatrix {
    let mut g = IntMatrix::zeros(6, 6);
    for (r, &(i, j)) in WEDGE_BASIS.iter().enumerate() {
        for (c, &(k, l)) in WEDGE_BASIS.iter().enumerate() {
            g[(r, c)] = BigInt::from(permutation_sign([i, j, k, l]));
        }
    }
    g
}

/// Sign of `(i j k l)` as a permutation of `0..4`; 0 if an index repeats.
fn permutation_sign(p: [usize; 4]) -> i64 {
    let mut inversions = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if p[a] == p[b] {
                return 0;
            }
            if p[a] > p[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `H^2(A, Z)` as the lattice `(Λ^2 Z^4, G6)`.
pub fn wedge_lattice() -> Lattice {
    Lattice::new(wedge_pairing()).expect("wedge pairing is unimodular")
}

fn require_4x4(g: &IntMatrix) -> Result<(), ActionError> {
    if (g.rows(), g.cols()) != (4, 4) {
        return Err(ActionError::NotFourByFour(g.rows(), g.cols()));
    }
    Ok(())
}

/// `Λ^2 g`: entry `((i,j), (k,l))` is the 2x2 minor of `g` on rows `i,j`
/// and columns `k,l`.
pub fn wedge_matrix(g: &IntMatrix) -> Result<IntMatrix, ActionError> {
    require_4x4(g)?;
    let mut phi = IntMatrix::zeros(6, 6);
    for (r, &(i, j)) in WEDGE_BASIS.iter().enumerate() {
        for (c, &(k, l)) in WEDGE_BASIS.iter().enumerate() {
            phi[(r, c)] = &g[(i, k)] * &g[(j, l)] - &g[(i, l)] * &g[(j, k)];
        }
    }
    Ok(phi)
}

/// Smallest `k` in `1..=12` with `m^k = I`.
pub fn order_of(m: &IntMatrix) -> Result<u32, ActionError> {
    m.require_square()?;
    let mut power = m.clone();
    for k in 1..=MAX_ORDER {
        if power.is_identity() {
            return Ok(k);
        }
        power = power.try_mul(m)?;
    }
    Err(ActionError::InfiniteOrder)
}

/// An automorphism of `H^1` together with its induced action on `H^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Action {
    pub source_g: IntMatrix,
    pub phi: IntMatrix,
    /// `None` when `g` has infinite order (or order above 12).
    pub order_h1: Option<u32>,
    pub order_h2: Option<u32>,
}

impl H2Action {
    pub fn det_g(&self) -> BigInt {
        self.source_g.det().expect("4x4")
    }
}

pub fn wedge_square(g: &IntMatrix) -> Result<H2Action, ActionError> {
    require_4x4(g)?;
    let det = g.det()?;
    if det.abs() != BigInt::one() {
        return Err(ActionError::NotUnimodular(det));
    }
    let phi = wedge_matrix(g)?;
    Ok(H2Action {
        order_h1: order_of(g).ok(),
        order_h2: order_of(&phi).ok(),
        source_g: g.clone(),
        phi,
    })
}

/// Order of the action on `H^2`.
pub fn h2_order(g: &IntMatrix) -> Result<u32, ActionError> {
    wedge_square(g)?.order_h2.ok_or(ActionError::InfiniteOrder)
}

/// `T = {x : phi x = x}` with the restricted pairing.
pub fn invariant_lattice(action: &H2Action) -> Result<EmbeddedLattice, ActionError> {
    if action.det_g().is_negative() {
        return Err(ActionError::OrientationReversing);
    }
    let fixed = integer_kernel(&action.phi.try_sub(&IntMatrix::identity(6))?);
    Ok(EmbeddedLattice::span(fixed, &wedge_lattice())?)
}

/// `S = T^⊥` inside `H^2`.
pub fn coinvariant_lattice(action: &H2Action) -> Result<EmbeddedLattice, ActionError> {
    let t = invariant_lattice(action)?;
    Ok(orthogonal_complement(&t.basis, &wedge_lattice())?)
}

/// Number of fixed points of `g` on the torus `R^4 / Z^4`, which is the index
/// `[Z^4 : (1 - g) Z^4] = |det(I - g)|` when finite.
pub fn fixed_point_count(g: &IntMatrix) -> Result<BigInt, ActionError> {
    require_4x4(g)?;
    let d = IntMatrix::identity(4).try_sub(g)?.det()?;
    if d.is_zero() {
        return Err(ActionError::PositiveDimensional);
    }
    Ok(d.abs())
}

/// Isomorphism type of the group `⟨g, -id⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupType {
    /// `Z/n`
    Cyclic(u32),
    /// `Z/2 × Z/n`
    TwoTimes(u32),
}

impl GroupType {
    pub fn order(self) -> u32 {
        match self {
            GroupType::Cyclic(n) => n,
            GroupType::TwoTimes(n) => 2 * n,
        }
    }

    /// Invariant factors `d_1 | d_2 | ...` with all `d_i > 1`.
    pub fn invariant_factors(self) -> Vec<u32> {
        match self {
            GroupType::Cyclic(1) => vec![],
            GroupType::Cyclic(n) => vec![n],
            GroupType::TwoTimes(1) => vec![2],
            GroupType::TwoTimes(n) if n % 2 == 1 => vec![2 * n],
            GroupType::TwoTimes(n) => vec![2, n],
        }
    }

    pub fn is_isomorphic(self, other: GroupType) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupType::Cyclic(n) => write!(f, "Z/{n}"),
            GroupType::TwoTimes(2) => write!(f, "(Z/2)^2"),
            GroupType::TwoTimes(n) => write!(f, "Z/2 x Z/{n}"),
        }
    }
}

/// The group generated by `g` and `-I`.
pub fn generated_group(g: &IntMatrix) -> Result<GroupType, ActionError> {
    let n = order_of(g)?;
    let minus_id = -&IntMatrix::identity(g.rows());
    let mut power = IntMatrix::identity(g.rows());
    for _ in 0..n {
        if power == minus_id {
            return Ok(GroupType::Cyclic(n));
        }
        power = power.try_mul(g)?;
    }
    Ok(GroupType::TwoTimes(n))
}

/// `Λ^2(-g) = Λ^2(g)`, so `±g` give the same action on `H^2`.
pub fn sign_invariant(g: &IntMatrix) -> Result<bool, ActionError> {
    Ok(wedge_matrix(g)? == wedge_matrix(&-g)?)
}

/// Whether `x` is fixed by `phi`.
pub fn is_fixed(phi: &IntMatrix, x: &[BigInt]) -> bool {
    phi.apply(x).iter().zip(x).all(|(a, b)| a == b)
}
