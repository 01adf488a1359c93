//! Signature of a symmetric form by exact congruent diagonalisation.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntMatrix, MatrixError};

/// Diagonalises `g` by simultaneous row/column operations over the rationals
/// and returns the pivots in order.
pub fn congruent_pivots(g: &IntMatrix) -> Result<Vec<BigRational>, MatrixError> {
    g.require_square()?;
    if !g.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let n = g.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            g.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();

    for i in 0..n {
        if a[i][i].is_zero() {
            let j = (i + 1..n)
                .find(|&j| !a[i][j].is_zero())
                .ok_or(MatrixError::Singular)?;
            if !a[j][j].is_zero() {
                a.swap(i, j);
                for row in a.iter_mut() {
                    row.swap(i, j);
                }
            } else {
                // b_i <- b_i + b_j; the new pivot is 2 <b_i, b_j> != 0.
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[i] += v;
                }
            }
        }
        let pivot = a[i][i].clone();
        for r in i + 1..n {
            if a[r][i].is_zero() {
                continue;
            }
            let f = &a[r][i] / &pivot;
            for k in i..n {
                let v = &f * &a[i][k];
                a[r][k] -= v;
            }
            for row in a.iter_mut().skip(i) {
                let v = &f * &row[i];
                row[r] -= v;
            }
        }
    }
    Ok((0..n).map(|i| a[i][i].clone()).collect())
}

/// Signature `(n_plus, n_minus)` of a non-degenerate symmetric integer matrix.
pub fn congruent_diagonalize(g: &IntMatrix) -> Result<(usize, usize), MatrixError> {
    let pivots = congruent_pivots(g)?;
    let plus = pivots.iter().filter(|p| p.is_positive()).count();
    let minus = pivots.iter().filter(|p| p.is_negative()).count();
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn product(pivots: &[BigRational]) -> BigRational {
        pivots
            .iter()
            .fold(BigRational::from_integer(BigInt::from(1)), |acc, p| acc * p)
    }

    #[test]
    fn named_signatures() {
        let u = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(congruent_diagonalize(&u).unwrap(), (1, 1));
        let h5 = IntMatrix::from_rows(&[[2, 1], [1, -2]]);
        assert_eq!(congruent_diagonalize(&h5).unwrap(), (1, 1));
        let a2 = IntMatrix::from_rows(&[[2, 1], [1, 2]]);
        assert_eq!(congruent_diagonalize(&a2).unwrap(), (2, 0));
    }

    #[test]
    fn pivots_multiply_to_determinant() {
        let g = IntMatrix::from_rows(&[
            [0, 1, 1, 1],
            [1, 0, 1, 1],
            [1, 1, 0, 3],
            [1, 1, 3, 0],
        ]);
        let p = congruent_pivots(&g).unwrap();
        assert_eq!(product(&p), BigRational::from_integer(g.det().unwrap()));
        assert_eq!(congruent_diagonalize(&g).unwrap(), (1, 3));
    }

    #[test]
    fn swap_branch_avoids_cancelling_pivot() {
        // b_0 + b_1 would be isotropic here; the swap branch must be taken.
        let g = IntMatrix::from_rows(&[[0, 1], [1, -2]]);
        assert_eq!(congruent_diagonalize(&g).unwrap(), (1, 1));
    }

    #[test]
    fn errors() {
        let degenerate = IntMatrix::from_rows(&[[1, 1], [1, 1]]);
        assert_eq!(congruent_diagonalize(&degenerate), Err(MatrixError::Singular));
        let asym = IntMatrix::from_rows(&[[1, 2], [0, 1]]);
        assert_eq!(congruent_diagonalize(&asym), Err(MatrixError::NotSymmetric));
    }
}
