//! Smith and Hermite normal forms, integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `left * source * right == diagonal(diag)` with unimodular `left`, `right`
/// and `diag[i] | diag[i + 1]`, all entries non-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub diag: Vec<BigInt>,
    pub right: IntMatrix,
}

impl SmithDecomposition {
    /// Number of non-zero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The diagonal matrix with the same shape as the source matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, x) in self.diag.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

/// Position of the smallest non-zero entry (by absolute value) in the
/// trailing block starting at `(t, t)`.
fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut a = m.clone();
    let mut left = IntMatrix::identity(m.rows());
    let mut right = IntMatrix::identity(m.cols());
    let steps = m.rows().min(m.cols());

    for t in 0..steps {
        loop {
            let Some((pi, pj)) = smallest_entry(&a, t) else {
                break;
            };
            a.swap_rows(t, pi);
            left.swap_rows(t, pi);
            a.swap_cols(t, pj);
            right.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..a.rows() {
                let q = &a[(i, t)] / &a[(t, t)];
                let neg = -q;
                a.add_row_multiple(i, t, &neg);
                left.add_row_multiple(i, t, &neg);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..a.cols() {
                let q = &a[(t, j)] / &a[(t, t)];
                let neg = -q;
                a.add_col_multiple(j, t, &neg);
                right.add_col_multiple(j, t, &neg);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // The pivot must divide everything left in the trailing block.
            let pivot = a[(t, t)].clone();
            let offender = (t + 1..a.rows())
                .find(|&i| (t + 1..a.cols()).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
    }

    let diag = (0..steps).map(|i| a[(i, i)].clone()).collect();
    SmithDecomposition { left, diag, right }
}

pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

/// Row-style Hermite normal form. Returns the non-zero rows only, so the
/// result is a canonical basis of the row lattice of `m`.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        loop {
            let pivot = (r..h.rows())
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..h.rows() {
                let q = &h[(i, c)] / &h[(r, c)];
                h.add_row_multiple(i, r, &-q);
                clean &= h[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.add_row_multiple(i, r, &-q);
        }
        r += 1;
    }
    let idx: Vec<usize> = (0..r).collect();
    h.transpose().select_columns(&idx).transpose()
}

/// Basis (as columns) of the integer kernel `{x in Z^n : m x = 0}`.
///
/// The kernel of an integer matrix is always saturated in `Z^n`; the basis is
/// read off the right transform of the Smith form and brought into Hermite
/// normal form so it is canonical and small.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let idx: Vec<usize> = (rank..m.cols()).collect();
    let raw = snf.right.select_columns(&idx);
    if raw.cols() == 0 {
        return raw;
    }
    hermite_normal_form(&raw.transpose()).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_decomposition(m: &IntMatrix, s: &SmithDecomposition) {
        assert_eq!(&(&s.left * m) * &s.right, s.diagonal_matrix());
        assert_eq!(s.left.det().unwrap().abs(), BigInt::one());
        assert_eq!(s.right.det().unwrap().abs(), BigInt::one());
        for w in s.diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "{} does not divide {}", w[0], w[1]);
        }
        assert!(s.diag.iter().all(|d| !d.is_negative()));
    }

    #[test]
    fn examples() {
        for (m, expected) in [
            (IntMatrix::diagonal(&[2, 4]), vec![2, 4]),
            (IntMatrix::from_rows(&[[0, 2], [2, 0]]), vec![2, 2]),
            (IntMatrix::from_rows(&[[2, 1], [1, -2]]), vec![1, 5]),
            (IntMatrix::diagonal(&[4, 6]), vec![2, 12]),
        ] {
            let s = smith_normal_form(&m);
            check_decomposition(&m, &s);
            assert_eq!(s.diag, ints(&expected));
        }
    }

    #[test]
    fn rectangular_and_degenerate() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]]);
        let s = smith_normal_form(&m);
        check_decomposition(&m, &s);
        assert_eq!(s.diag, ints(&[1, 0]));
        assert_eq!(s.rank(), 1);
        let z = IntMatrix::zeros(0, 3);
        assert_eq!(smith_normal_form(&z).diag.len(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(integer_kernel(&IntMatrix::identity(4)).cols(), 0);
        assert_eq!(integer_kernel(&IntMatrix::zeros(2, 2)), IntMatrix::identity(2));
        // 2x + 4y = 0 has primitive kernel generator (2, -1) up to sign
        let k = integer_kernel(&IntMatrix::from_rows(&[[2, 4]]));
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), ints(&[2, -1]));
    }

    #[test]
    fn hermite_form_is_canonical() {
        let a = IntMatrix::from_rows(&[[2, 4, 1], [0, 3, 3]]);
        let b = IntMatrix::from_rows(&[[2, 7, 4], [2, 10, 7]]);
        // rows of b are a0 + a1 and a0 + 2 a1
        assert_eq!(hermite_normal_form(&a), hermite_normal_form(&b));
        let h = hermite_normal_form(&a);
        assert_eq!(h, IntMatrix::from_rows(&[[2, 1, -2], [0, 3, 3]]));
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..=9, r * c)
                .prop_map(move |v| IntMatrix::new(r, c, ints(&v)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn smith_decomposition_holds(m in small_matrix()) {
            let s = smith_normal_form(&m);
            check_decomposition(&m, &s);
        }

        #[test]
        fn kernel_is_saturated(m in small_matrix()) {
            let k = integer_kernel(&m);
            prop_assert!((&m * &k).is_zero());
            prop_assert_eq!(k.cols(), m.cols() - rank(&m));
            let s = smith_normal_form(&k.transpose());
            prop_assert!(s.diag.iter().all(One::is_one));
        }
    }
}
