//! Bounded search for explicit isometries between small lattices.
//!
//! The search looks for `P` with `P^T G_a P = G_b`. Column `j` of `P` is the
//! image of the `j`-th basis vector of `b`, so it must have norm `G_b[j][j]`
//! in `a` and pair with the earlier columns as prescribed by `G_b`.
//! Candidates are all vectors with coefficients in `[-bound, bound]`,
//! visited in order of increasing size, which makes the traversal
//! deterministic. Not finding `P` proves nothing.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{Lattice, LatticeError};
use crate::linalg::IntMatrix;

pub const DEFAULT_COEFF_BOUND: u32 = 5;

const MAX_BOX_SIZE: u64 = 5_000_000;
const MAX_ENTRY: i64 = 1 << 31;

struct Candidate {
    coords: Vec<i64>,
    /// `G_a * coords`, so pairings with other vectors are plain dot products.
    image: Vec<i64>,
}

fn to_small(m: &IntMatrix) -> Result<Vec<Vec<i64>>, LatticeError> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| {
                    x.to_i64()
                        .filter(|v| v.abs() < MAX_ENTRY)
                        .ok_or_else(|| LatticeError::SearchRange(format!("Gram entry {x}")))
                })
                .collect()
        })
        .collect()
}

fn box_vectors(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut v = vec![-bound; n];
    loop {
        out.push(v.clone());
        let mut i = 0;
        loop {
            if i == n {
                let size = |w: &Vec<i64>| {
                    (
                        w.iter().map(|x| x.abs()).max().unwrap_or(0),
                        w.iter().map(|x| x.abs()).sum::<i64>(),
                    )
                };
                out.sort_by(|a, b| size(a).cmp(&size(b)).then_with(|| b.cmp(a)));
                return out;
            }
            v[i] += 1;
            if v[i] <= bound {
                break;
            }
            v[i] = -bound;
            i += 1;
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Searches for a basis change `P` with `P^T G_a P = G_b`, i.e. an isometry
/// from `b` onto `a` written in the bases of the two Gram matrices.
pub fn isometry_search(
    a: &Lattice,
    b: &Lattice,
    coeff_bound: u32,
) -> Result<Option<IntMatrix>, LatticeError> {
    let n = a.rank();
    if n != b.rank() {
        return Err(LatticeError::RankMismatch(n, b.rank()));
    }
    if coeff_bound == 0 {
        return Err(LatticeError::SearchRange("coefficient bound must be at least 1".into()));
    }
    let box_size = (2 * u64::from(coeff_bound) + 1).checked_pow(n as u32);
    if box_size.is_none_or(|s| s > MAX_BOX_SIZE) {
        return Err(LatticeError::SearchRange(format!(
            "{} candidate vectors in rank {n} with bound {coeff_bound}",
            box_size.map_or("too many".to_string(), |s| s.to_string())
        )));
    }
    if n == 0 {
        return Ok(Some(IntMatrix::zeros(0, 0)));
    }
    // Congruent forms have equal determinants, and then any solution is unimodular.
    if a.det() != b.det() {
        return Ok(None);
    }

    let ga = to_small(a.gram())?;
    let gb = to_small(b.gram())?;
    let wanted: Vec<i64> = (0..n).map(|j| gb[j][j]).collect();

    let mut by_norm: HashMap<i64, Vec<Candidate>> = HashMap::new();
    for coords in box_vectors(n, i64::from(coeff_bound)) {
        let image: Vec<i64> = ga.iter().map(|row| dot(row, &coords)).collect();
        let norm = dot(&coords, &image);
        if wanted.contains(&norm) {
            by_norm.entry(norm).or_default().push(Candidate { coords, image });
        }
    }

    let mut chosen: Vec<&Candidate> = Vec::with_capacity(n);
    if extend(&mut chosen, &by_norm, &gb) {
        let columns: Vec<Vec<BigInt>> = chosen
            .iter()
            .map(|c| c.coords.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let p = IntMatrix::from_columns(n, &columns);
        debug_assert!(is_isometry_witness(a, b, &p));
        return Ok(Some(p));
    }
    Ok(None)
}

fn extend<'a>(
    chosen: &mut Vec<&'a Candidate>,
    by_norm: &'a HashMap<i64, Vec<Candidate>>,
    gb: &[Vec<i64>],
) -> bool {
    let j = chosen.len();
    if j == gb.len() {
        return true;
    }
    let Some(pool) = by_norm.get(&gb[j][j]) else {
        return false;
    };
    for cand in pool {
        if chosen
            .iter()
            .enumerate()
            .all(|(i, prev)| dot(&prev.image, &cand.coords) == gb[i][j])
        {
            chosen.push(cand);
            if extend(chosen, by_norm, gb) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Checks `P^T G_a P = G_b` and `|det P| = 1`.
pub fn is_isometry_witness(a: &Lattice, b: &Lattice, p: &IntMatrix) -> bool {
    let Ok(lhs) = p
        .transpose()
        .try_mul(a.gram())
        .and_then(|m| m.try_mul(p))
    else {
        return false;
    };
    lhs == *b.gram() && p.det().is_ok_and(|d| d.abs() == BigInt::from(1))
}
