//! Discriminant groups `L*/L`, discriminant forms and genus fingerprints.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Lattice, LatticeError};
use crate::linalg::smith_normal_form;

/// Largest discriminant group that is enumerated element by element.
pub const MAX_ENUMERATED_ORDER: u64 = 1 << 20;

/// Structure of `A_L = L*/L` together with its discriminant form.
///
/// Generator `i` is the dual vector `R e_i / d_i` where `L G R = diag(d)` is
/// the Smith decomposition of the Gram matrix `G`, so `A_L` is the direct sum
/// of the cyclic groups `Z/d_i` over the factors `d_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantData {
    pub invariant_factors: Vec<BigInt>,
    /// Generators of `A_L` in rational coordinates of the lattice basis.
    pub generators: Vec<Vec<BigRational>>,
    /// Exact pairings `b(g_i, g_j)` of the generators (not reduced).
    pub pairings: Vec<Vec<BigRational>>,
    /// `q(g_i)` reduced into `[0, 2)` for even lattices, `[0, 1)` for odd ones.
    pub q_values: Vec<BigRational>,
    pub even: bool,
}

pub(crate) fn reduce_mod(x: &BigRational, modulus: u32) -> BigRational {
    let m = BigRational::from_integer(BigInt::from(modulus));
    let k = (x / &m).floor();
    x - k * m
}

impl DiscriminantData {
    /// The length `a`: minimal number of generators.
    pub fn length(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    fn q_modulus(&self) -> u32 {
        if self.even {
            2
        } else {
            1
        }
    }

    /// `q(sum c_i g_i)` reduced modulo 2 (even lattices) or 1 (odd ones).
    pub fn q_of(&self, coeffs: &[BigInt]) -> BigRational {
        let mut total = BigRational::zero();
        for (i, ci) in coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                total += &self.pairings[i][j] * BigRational::from_integer(ci * cj);
            }
        }
        reduce_mod(&total, self.q_modulus())
    }

    /// Every element of `A_L` as a coefficient vector on the generators.
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>, LatticeError> {
        let order = self.order();
        if order > BigInt::from(MAX_ENUMERATED_ORDER) {
            return Err(LatticeError::DiscriminantTooLarge(order));
        }
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        let mut current = vec![BigInt::zero(); self.length()];
        loop {
            out.push(current.clone());
            let mut i = 0;
            loop {
                if i == current.len() {
                    return Ok(out);
                }
                current[i] += 1;
                if current[i] < self.invariant_factors[i] {
                    break;
                }
                current[i] = BigInt::zero();
                i += 1;
            }
        }
    }

    /// Multiset of discriminant-form values over the whole group.
    pub fn q_histogram(&self) -> Result<BTreeMap<BigRational, u64>, LatticeError> {
        let mut hist = BTreeMap::new();
        for e in self.elements()? {
            *hist.entry(self.q_of(&e)).or_insert(0) += 1;
        }
        Ok(hist)
    }
}

pub fn discriminant(l: &Lattice) -> DiscriminantData {
    let snf = smith_normal_form(l.gram());
    let n = l.rank();
    let mut invariant_factors = Vec::new();
    let mut generators = Vec::new();
    for (i, d) in snf.diag.iter().enumerate() {
        debug_assert!(!d.is_zero(), "lattice forms are non-degenerate");
        if d.is_one() {
            continue;
        }
        invariant_factors.push(d.clone());
        generators.push(
            (0..n)
                .map(|r| BigRational::new(snf.right[(r, i)].clone(), d.clone()))
                .collect::<Vec<_>>(),
        );
    }
    let gram: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(l.gram()[(i, j)].clone()))
                .collect()
        })
        .collect();
    let pair = |x: &[BigRational], y: &[BigRational]| -> BigRational {
        let mut s = BigRational::zero();
        for i in 0..n {
            for j in 0..n {
                s += &x[i] * &gram[i][j] * &y[j];
            }
        }
        s
    };
    let pairings: Vec<Vec<BigRational>> = generators
        .iter()
        .map(|x| generators.iter().map(|y| pair(x, y)).collect())
        .collect();
    let even = l.is_even();
    let modulus = if even { 2 } else { 1 };
    let q_values = (0..generators.len())
        .map(|i| reduce_mod(&pairings[i][i], modulus))
        .collect();
    DiscriminantData {
        invariant_factors,
        generators,
        pairings,
        q_values,
        even,
    }
}

/// `Some(a)` when `A_L ≅ (Z/p)^a`, `None` otherwise.
pub fn is_p_elementary(l: &Lattice, p: u64) -> Option<usize> {
    let disc = discriminant(l);
    let p = BigInt::from(p);
    disc.invariant_factors
        .iter()
        .all(|d| *d == p)
        .then_some(disc.length())
}

/// Nikulin's parity invariant of an even 2-elementary lattice: 0 when the
/// discriminant form is integral on every element of `A_L`, 1 otherwise.
pub fn delta_invariant(l: &Lattice) -> Result<u8, LatticeError> {
    if !l.is_even() {
        return Err(LatticeError::OddLattice);
    }
    if is_p_elementary(l, 2).is_none() {
        return Err(LatticeError::NotTwoElementary);
    }
    let disc = discriminant(l);
    // q on generators being integral does not force it on sums; check all.
    let integral = disc
        .elements()?
        .iter()
        .all(|e| disc.q_of(e).is_integer());
    Ok(if integral { 0 } else { 1 })
}

/// Isometry invariants: rank, signature, parity, the group `A_L` and the
/// distribution of discriminant-form values over all of `A_L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenusFingerprint {
    pub rank: usize,
    pub signature: (usize, usize),
    pub even: bool,
    pub invariant_factors: Vec<BigInt>,
    pub q_histogram: Vec<(BigRational, u64)>,
}

pub fn genus_fingerprint(l: &Lattice) -> Result<GenusFingerprint, LatticeError> {
    let disc = discriminant(l);
    Ok(GenusFingerprint {
        rank: l.rank(),
        signature: l.signature(),
        even: disc.even,
        invariant_factors: disc.invariant_factors.clone(),
        q_histogram: disc.q_histogram()?.into_iter().collect(),
    })
}

impl fmt::Display for GenusFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rank {}, signature ({},{}), {}, A_L = ",
            self.rank,
            self.signature.0,
            self.signature.1,
            if self.even { "even" } else { "odd" }
        )?;
        if self.invariant_factors.is_empty() {
            write!(f, "0")?;
        }
        for (i, d) in self.invariant_factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z/{d}")?;
        }
        write!(f, ", q-values {{")?;
        for (i, (v, c)) in self.q_histogram.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}:{c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::make_named;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn unimodular_has_trivial_group() {
        let d = discriminant(&make_named("U", None).unwrap());
        assert!(d.invariant_factors.is_empty());
        assert_eq!(d.length(), 0);
        assert_eq!(d.elements().unwrap().len(), 1);
    }

    #[test]
    fn u2_discriminant_form() {
        let d = discriminant(&make_named("U", Some(2)).unwrap());
        assert_eq!(d.invariant_factors, vec![BigInt::from(2), BigInt::from(2)]);
        assert!(d.q_values.iter().all(|v| v.is_integer()));
        // hand computation on (0,0), (1/2,0), (0,1/2), (1/2,1/2)
        let hist = d.q_histogram().unwrap();
        assert_eq!(hist.get(&q(0, 1)), Some(&3));
        assert_eq!(hist.get(&q(1, 1)), Some(&1));
        assert_eq!(hist.len(), 2);
    }

    #[test]
    fn h5_is_5_elementary_of_length_one() {
        let h5 = make_named("H5", None).unwrap();
        let d = discriminant(&h5);
        assert_eq!(d.invariant_factors, vec![BigInt::from(5)]);
        assert_eq!(is_p_elementary(&h5, 5), Some(1));
        assert_eq!(is_p_elementary(&h5, 2), None);
    }

    #[test]
    fn p_elementary() {
        assert_eq!(is_p_elementary(&make_named("U", Some(3)).unwrap(), 3), Some(2));
        for p in [2, 3, 5, 7] {
            assert_eq!(is_p_elementary(&make_named("U", None).unwrap(), p), Some(0));
        }
        assert_eq!(is_p_elementary(&make_named("U", Some(2)).unwrap(), 3), None);
    }

    #[test]
    fn delta() {
        assert_eq!(delta_invariant(&make_named("U(2)", None).unwrap()), Ok(0));
        assert_eq!(delta_invariant(&make_named("⟨2⟩ ⊕ ⟨-2⟩", None).unwrap()), Ok(1));
        assert_eq!(delta_invariant(&make_named("U ⊕ ⟨-2⟩^2", None).unwrap()), Ok(1));
        assert_eq!(delta_invariant(&make_named("U", None).unwrap()), Ok(0));
        assert_eq!(
            delta_invariant(&make_named("U(3)", None).unwrap()),
            Err(LatticeError::NotTwoElementary)
        );
        assert_eq!(
            delta_invariant(&make_named("⟨1⟩", None).unwrap()),
            Err(LatticeError::OddLattice)
        );
    }

    #[test]
    fn generator_values_of_rank_one() {
        // <2> ⊕ <-2>: q(dual generator) = ±1/2, i.e. 1/2 and 3/2 mod 2
        let d = discriminant(&make_named("⟨2⟩ ⊕ ⟨-2⟩", None).unwrap());
        let mut vals = d.q_values.clone();
        vals.sort();
        assert_eq!(vals, vec![q(1, 2), q(3, 2)]);
    }

    #[test]
    fn fingerprints() {
        let u = make_named("U", None).unwrap();
        assert_eq!(
            genus_fingerprint(&u).unwrap(),
            genus_fingerprint(&make_named("U(1)", None).unwrap()).unwrap()
        );
        let paper_gram = Lattice::from_rows(&[
            [0, 1, 1, 1],
            [1, 0, 1, 1],
            [1, 1, 0, 2],
            [1, 1, 2, 0],
        ])
        .unwrap();
        assert_eq!(paper_gram.det(), BigInt::from(-4));
        assert_eq!(
            genus_fingerprint(&paper_gram).unwrap(),
            genus_fingerprint(&make_named("U ⊕ ⟨-2⟩^2", None).unwrap()).unwrap()
        );
        assert_ne!(
            genus_fingerprint(&make_named("U(2)", None).unwrap()).unwrap(),
            genus_fingerprint(&make_named("⟨2⟩ ⊕ ⟨-2⟩", None).unwrap()).unwrap()
        );
    }

    #[test]
    fn reduction_range() {
        assert_eq!(reduce_mod(&q(-1, 2), 2), q(3, 2));
        assert_eq!(reduce_mod(&q(5, 1), 2), q(1, 1));
        assert_eq!(reduce_mod(&q(-4, 3), 1), q(2, 3));
    }
}
