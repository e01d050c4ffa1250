//! Property tests for the exact linear algebra layer and the structural
//! involutions of the algebra operations.

use ftft_core::exactlin::{ExactMatrix, GaussianScalar};
use ftft_core::salg::{self, FieldTag};
use proptest::prelude::*;

fn small_scalar() -> impl Strategy<Value = GaussianScalar> {
    (-3i64..=3, -3i64..=3, 1i64..=3).prop_map(|(a, b, d)| {
        GaussianScalar::rat(a, d) + GaussianScalar::rat(b, d) * GaussianScalar::i()
    })
}

fn small_matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(small_scalar(), r * c).prop_map(move |data| {
            let mut m = ExactMatrix::zeros(r, c);
            for i in 0..r {
                for j in 0..c {
                    m[(i, j)] = data[i * c + j].clone();
                }
            }
            m
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in small_matrix(4)) {
        prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix(4)) {
        for v in m.kernel() {
            prop_assert!(m.apply(&v).iter().all(GaussianScalar::is_zero));
        }
    }

    #[test]
    fn solve_then_substitute_is_exact(m in small_matrix(4), seed in proptest::collection::vec(small_scalar(), 1..=4)) {
        // build a consistent right-hand side from a known preimage
        let x: Vec<GaussianScalar> = (0..m.cols())
            .map(|j| seed.get(j % seed.len()).cloned().unwrap_or_else(GaussianScalar::zero))
            .collect();
        let b = m.apply(&x);
        let sol = m.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.apply(&sol), b);
    }

    #[test]
    fn scalar_field_axioms(a in small_scalar(), b in small_scalar()) {
        prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
        // text form round trip
        let s = a.to_string();
        let parsed: GaussianScalar = s.parse().unwrap();
        prop_assert_eq!(parsed, a);
    }
}

#[test]
fn opposite_and_conjugate_are_involutions_on_fixtures() {
    let fixtures = [
        salg::complex_clifford(1).unwrap(),
        salg::complex_clifford(2).unwrap(),
        salg::matrix_superalgebra(1, 1, FieldTag::Complex),
        salg::clifford(2, 1, FieldTag::Complex).unwrap(),
    ];
    for a in &fixtures {
        assert_eq!(&a.opposite().opposite(), a);
        assert_eq!(&a.conjugate().conjugate(), a);
        assert_eq!(a.conjugate().opposite(), a.opposite().conjugate());
    }
}
