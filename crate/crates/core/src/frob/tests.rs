use super::*;
use crate::exactlin::{ExactMatrix, GaussianScalar};
use crate::fixtures::{self, PinTftParams};
use crate::salg;
use crate::stellar::{quaternionic_structure, FermRep, HermitianSuperSpace};

#[test]
fn trivial_theory_bundles_pass() {
    for g in [
        fixtures::pin1_plus(),
        fixtures::pin1_minus(),
        fixtures::q8(),
        fixtures::z2c(),
    ] {
        let t = fixtures::trivial_theory(&g).unwrap();
        assert!(check_graded_bundle(&t.bundle).is_valid());
        let rep = check_tft2d(&t, false);
        assert!(rep.is_valid(), "{rep}");
        assert!(rep.has_flag("positivity"));
    }
}

#[test]
fn pin_bundles_pass_with_positivity_iff_signs_agree() {
    // representatives here; the acceptance suite sweeps all sixteen variants
    for (base_cl1, xt_parity, xt_square, xt_dagger) in [
        (false, 0u8, 1i64, 1i64),
        (false, 1, -1, 1),
        (true, 0, -1, -1),
        (true, 1, 1, -1),
    ] {
        let t = fixtures::pin_tft(PinTftParams {
            base_cl1,
            xt_parity,
            xt_square,
            xt_dagger,
        })
        .unwrap();
        let rep = check_tft2d(&t, false);
        assert!(rep.is_valid(), "{rep}");
        assert_eq!(rep.has_flag("positivity"), xt_square == xt_dagger);
    }
}

#[test]
fn two_group_graded_bundles_pass() {
    for t in [
        fixtures::spinc_theory().unwrap(),
        fixtures::pin2_minus_tft().unwrap(),
        fixtures::pin1_minus_tft().unwrap(),
    ] {
        let rep = check_tft2d(&t, false);
        assert!(rep.is_valid(), "{rep}");
    }
}

#[test]
fn spin2_loop_twist_relations() {
    // a'_γ a = (−1)^{|a|} a a'_γ where a'_γ = a_γ·x⁻¹, and for the Pin₂⁻
    // fixture additionally a'_γ a_T = (−1)^{|a_T|} a_T a'_γ⁻¹
    let t = fixtures::pin2_minus_tft().unwrap();
    let amb = &t.bundle.ambient;
    let x = t.bundle.parity_elem.clone().unwrap();
    let x_inv = amb.inverse_of(&x).unwrap();
    let a_prime = amb.mul_vec(&t.bundle.loops[0], &x_inv);
    for idx in 0..amb.dim() {
        let e = amb.basis_vec(idx);
        let lhs = amb.mul_vec(&a_prime, &e);
        let sign = GaussianScalar::sign_pow(amb.parity[idx]);
        let rhs: Vec<GaussianScalar> = amb
            .mul_vec(&e, &a_prime)
            .iter()
            .map(|c| &sign * c)
            .collect();
        assert_eq!(lhs, rhs, "supercommutation of a'_γ at basis {idx}");
    }
    let a_prime_inv = amb.inverse_of(&a_prime).unwrap();
    let t_obj = 2; // object (r, 0) of the model
    for &mt in &t.bundle.components[t_obj] {
        let m = amb.basis_vec(mt);
        let lhs = amb.mul_vec(&a_prime, &m);
        let sign = GaussianScalar::sign_pow(amb.parity[mt]);
        let rhs: Vec<GaussianScalar> = amb
            .mul_vec(&m, &a_prime_inv)
            .iter()
            .map(|c| &sign * c)
            .collect();
        assert_eq!(lhs, rhs, "a'_γ a_T = ±a_T a'_γ⁻¹ at basis {mt}");
    }
}

#[test]
fn invalid_bundles_are_caught() {
    // a_γ' that cannot supercommute: spinc-style loop over ℂl₁ has no valid
    // central loop in A₁-scalars once the algebra is noncommutative in the
    // graded sense; emulate by breaking i-commutation instead
    let t = fixtures::pin_tft(PinTftParams {
        base_cl1: false,
        xt_parity: 0,
        xt_square: 1,
        xt_dagger: 1,
    })
    .unwrap();
    let mut bad = t.bundle.clone();
    // move a basis vector to the wrong component
    let moved = bad.components[1].pop().unwrap();
    bad.components[0].push(moved);
    let rep = check_graded_bundle(&bad);
    assert!(!rep.is_valid());

    // break the loop centrality of the spinc fixture
    let spinc = fixtures::spinc_theory().unwrap();
    let mut bad = spinc.bundle.clone();
    bad.loops[0] = bad.ambient.basis_vec(0b11); // i·x: still even invertible in A_c
    let rep = check_graded_bundle(&bad);
    // i·x is central over A₁ = ℂ here, so this stays valid; instead break the
    // component membership
    assert!(rep.is_valid());
    bad.loops[0] = bad.ambient.basis_vec(0b10); // i ∈ A₁, wrong component
    let rep = check_graded_bundle(&bad);
    assert!(rep.names_clause("loop-component"));
}

#[test]
fn frobenius_validation_modes() {
    // ℂ with λ(z) = z is valid in both modes
    let t = fixtures::trivial_theory(&fixtures::z2c()).unwrap();
    assert!(check_frobenius(&t.bundle, &t.lambda, FrobeniusMode::Ungraded).is_valid());
    assert!(check_frobenius(&t.bundle, &t.lambda, FrobeniusMode::BosonicGraded).is_valid());

    // ℂl₁ admits no graded-symmetric Frobenius structure: any even λ is
    // degenerate in bosonic mode (λ(1) = λ(e²) = −λ(e²))
    let t = fixtures::pin_tft(PinTftParams {
        base_cl1: true,
        xt_parity: 0,
        xt_square: 1,
        xt_dagger: 1,
    })
    .unwrap();
    let rep = check_frobenius(&t.bundle, &t.lambda, FrobeniusMode::BosonicGraded);
    assert!(rep.names_clause("symmetric") || rep.names_clause("nondegenerate"));
    // while the ungraded mode passes
    assert!(check_frobenius(&t.bundle, &t.lambda, FrobeniusMode::Ungraded).is_valid());
}

#[test]
fn matrix_algebra_trace_is_ungraded_frobenius() {
    // M₂(ℂ) realified as a bundle over the trivial bosonic group, λ = trace
    let m2 = salg::matrix_superalgebra(2, 0, salg::FieldTag::Complex);
    let ambient = m2.realify();
    let trivial = crate::fgroup::FermionicGroup::new(
        crate::fgroup::GroupTable {
            elements: vec!["1".into()],
            mult: vec![vec![0]],
            unit: 0,
        },
        0,
        vec![0],
    );
    let mut i_elem = vec![GaussianScalar::zero(); ambient.dim()];
    // I·1 = I·(E11 + E22): realify index 2k+1 for basis k
    i_elem[2 * 0 + 1] = GaussianScalar::one();
    i_elem[2 * 3 + 1] = GaussianScalar::one();
    let bundle = GradedAlgebraBundle {
        grading: BundleGrading::Group(trivial),
        ambient: ambient.clone(),
        components: vec![(0..ambient.dim()).collect()],
        i_elem,
        parity_elem: None,
        loops: vec![],
    };
    assert!(check_graded_bundle(&bundle).is_valid());
    let mut lambda = vec![GaussianScalar::zero(); ambient.dim()];
    lambda[2 * 0] = GaussianScalar::one(); // tr(E11) = 1
    lambda[2 * 0 + 1] = GaussianScalar::i();
    lambda[2 * 3] = GaussianScalar::one(); // tr(E22) = 1
    lambda[2 * 3 + 1] = GaussianScalar::i();
    let f = FrobeniusStructure { lambda };
    assert!(check_frobenius(&bundle, &f, FrobeniusMode::Ungraded).is_valid());
}

#[test]
fn frobenius_compat_and_serre_route_agree_on_failures() {
    // λ(1) = i makes λ(a_T a_T⁻¹) imaginary, breaking the conjugation clause
    let good = fixtures::pin_tft(PinTftParams {
        base_cl1: false,
        xt_parity: 0,
        xt_square: 1,
        xt_dagger: 1,
    })
    .unwrap();
    let mut bad_lambda = good.lambda.clone();
    bad_lambda.lambda[0] = GaussianScalar::i();
    bad_lambda.lambda[0b100] = -GaussianScalar::one(); // keep ℂ-linearity
    let compat = check_frobenius_compat(&good.bundle, &bad_lambda, FrobeniusMode::Ungraded);
    assert!(!compat.is_valid());
    let (serre, agree) = serre_frobenius_check(&good.bundle, &bad_lambda).unwrap();
    assert!(!serre.is_valid());
    assert!(agree);
    // and the good λ passes both
    let compat = check_frobenius_compat(&good.bundle, &good.lambda, FrobeniusMode::Ungraded);
    let (serre, agree) = serre_frobenius_check(&good.bundle, &good.lambda).unwrap();
    assert!(compat.is_valid() && serre.is_valid() && agree);
}

#[test]
fn tft2d_mutations_fail_with_named_clauses() {
    let t = fixtures::trivial_theory(&fixtures::pin1_plus()).unwrap();
    // structure constant mutation → grading-valid
    let mut m1 = t.clone();
    m1.bundle.ambient.mult[5] = GaussianScalar::rat(1, 2);
    let rep = check_tft2d(&m1, false);
    assert!(!rep.is_valid());
    assert!(rep.clauses_failed().iter().any(|c| c.starts_with("grading-valid")));
    // pairing mutation → pairing clauses
    let mut m2 = t.clone();
    m2.pairings[1][0] = GaussianScalar::from_int(2);
    let rep = check_tft2d(&m2, false);
    assert!(!rep.is_valid());
    assert!(rep
        .clauses_failed()
        .iter()
        .any(|c| c.starts_with("pairing") || c.starts_with("multiplication")));
    // λ mutation → frobenius clauses
    let mut m3 = t.clone();
    m3.lambda.lambda[0] = GaussianScalar::i();
    let rep = check_tft2d(&m3, false);
    assert!(!rep.is_valid());
    assert!(rep
        .clauses_failed()
        .iter()
        .any(|c| c.contains("frobenius")));
}

#[test]
fn construct_from_dagger_round_trips_pairings() {
    let t = fixtures::pin_tft(PinTftParams {
        base_cl1: true,
        xt_parity: 1,
        xt_square: -1,
        xt_dagger: -1,
    })
    .unwrap();
    let rebuilt = construct_from_dagger(t.bundle.clone(), t.dagger.clone(), t.lambda.clone())
        .unwrap();
    assert_eq!(rebuilt.pairings, t.pairings);
}

#[test]
fn tft1d_bilinear_minimal_fixture() {
    // H = ℤ₂ with θ an isomorphism; V = ℂ^{1|0}; one symmetric form
    let h = crate::fgroup::FermionicGroup::new(
        crate::fgroup::GroupTable {
            elements: vec!["1".into(), "g".into()],
            mult: vec![vec![0, 1], vec![1, 0]],
            unit: 0,
        },
        0,
        vec![0, 1],
    );
    let t = Tft1d::Bilinear {
        h,
        parity: vec![0],
        rep: vec![Some(ExactMatrix::identity(1)), None],
        forms: vec![None, Some(ExactMatrix::identity(1))],
    };
    assert!(check_tft1d(&t).is_valid());
}

#[test]
fn tft1d_rep_fixtures_and_conversion() {
    // Pin₁⁻ on ℂ^{0|2} via the quaternionic structure
    let g = fixtures::pin1_minus();
    let space = HermitianSuperSpace::standard(0, 2);
    let tq = quaternionic_structure(2).unwrap();
    let parity = ExactMatrix::identity(2).scale(&-GaussianScalar::one());
    let rho = FermRep {
        matrices: vec![
            ExactMatrix::identity(2),
            tq.clone(),
            parity,
            tq.scale(&-GaussianScalar::one()),
        ],
    };
    let rep_mode = Tft1d::Rep {
        g: g.clone(),
        space: space.clone(),
        rho: rho.clone(),
    };
    assert!(check_tft1d(&rep_mode).is_valid());
    let bil = convert_rep_to_bilinear(&g, &space, &rho).unwrap();
    assert!(check_tft1d(&bil).is_valid());
    let (g2, _, rho2) = convert_bilinear_to_rep(&bil, &space).unwrap();
    assert_eq!(g2.table, g.table);
    for (a, b) in rho.matrices.iter().zip(&rho2.matrices) {
        assert_eq!(a, b);
    }
    // single-point perturbation of condition 1 is caught with a witness
    let Tft1d::Bilinear {
        h,
        parity,
        rep,
        mut forms,
        ..
    } = bil
    else {
        unreachable!()
    };
    if let Some(f) = forms[1].as_mut() {
        f[(0, 0)] = GaussianScalar::from_int(7);
    }
    let bad = Tft1d::Bilinear {
        h,
        parity,
        rep,
        forms,
    };
    let report = check_tft1d(&bad);
    assert!(!report.is_valid());
}

#[test]
fn no_quaternionic_structure_on_odd_dimension_one() {
    // ℤ₄^{FT} on ℂ^{0|1}: ρ(T)·conj(ρ(T)) = |t|² ≥ 0 can never equal −1
    assert!(quaternionic_structure(1).is_none());
}
