use num_bigint::BigInt;
use proptest::prelude::*;

use abelian_lattice::action::{
    fixed_point_count, invariant_lattice, wedge_matrix, wedge_pairing, wedge_square,
};
use abelian_lattice::catalog::list_examples;
use abelian_lattice::lattice::genus_fingerprint;
use abelian_lattice::linalg::IntMatrix;

fn transvection(n: usize, i: usize, j: usize, k: i64) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    m[(i, j)] = BigInt::from(k);
    m
}

/// A random element of SL_4(Z) together with its inverse.
fn sl4() -> impl Strategy<Value = (IntMatrix, IntMatrix)> {
    proptest::collection::vec((0usize..4, 0usize..4, -2i64..=2), 1..8).prop_map(|moves| {
        let mut p = IntMatrix::identity(4);
        let mut inv = IntMatrix::identity(4);
        for (i, j, k) in moves {
            if i == j || k == 0 {
                continue;
            }
            p = &p * &transvection(4, i, j, k);
            inv = &transvection(4, i, j, -k) * &inv;
        }
        (p, inv)
    })
}

fn any4() -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-4i64..=4, 16)
        .prop_map(|v| IntMatrix::new(4, 4, v.into_iter().map(BigInt::from).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_multiplicative_on_all_matrices(g in any4(), h in any4()) {
        let lhs = wedge_matrix(&(&g * &h)).unwrap();
        let rhs = &wedge_matrix(&g).unwrap() * &wedge_matrix(&h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn wedge_scales_the_pairing_by_det(g in any4()) {
        let phi = wedge_matrix(&g).unwrap();
        let det = g.det().unwrap();
        let g6 = wedge_pairing();
        prop_assert_eq!(&(&phi.transpose() * &g6) * &phi, g6.scale(&det));
        prop_assert_eq!(phi.det().unwrap(), det.pow(3));
    }

    #[test]
    fn conjugation_preserves_catalog_invariants((p, inv) in sl4(), idx in 0usize..11) {
        prop_assert!((&p * &inv).is_identity());
        let rec = &list_examples()[idx];
        let g2 = &(&p * &rec.g_h1) * &inv;
        let t1 = invariant_lattice(&wedge_square(&rec.g_h1).unwrap()).unwrap();
        let t2 = invariant_lattice(&wedge_square(&g2).unwrap()).unwrap();
        prop_assert_eq!(
            genus_fingerprint(&t1.lattice).unwrap(),
            genus_fingerprint(&t2.lattice).unwrap()
        );
        prop_assert_eq!(fixed_point_count(&rec.g_h1).ok(), fixed_point_count(&g2).ok());
    }
}
