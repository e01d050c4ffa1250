//! Built-in fixture catalog.
//!
//! Every generator here produces data that passes its own validator; the CLI
//! exposes the catalog through `ftft fixture <name>`.

use crate::error::{FtftError, Result};
use crate::exactlin::{ExactMatrix, GaussianScalar};
use crate::fgroup::{FermionicGroup, GroupTable};
use crate::frob::{
    construct_from_dagger, BundleGrading, FrobeniusStructure, GradedAlgebraBundle, TftBundle2D,
};
use crate::presentation::{GenAlgebra, GenSpec};
use crate::salg::FieldTag;
use crate::twogroup::{build_ferm_skeletal, ExtensionClass};

/// The trivial fermionic group {1, c}.
pub fn z2c() -> FermionicGroup {
    FermionicGroup::from_labels(
        vec!["1", "c"],
        "1",
        "c",
        &[],
        &[("1", "1", "1"), ("1", "c", "c"), ("c", "1", "c"), ("c", "c", "1")],
    )
    .unwrap()
}

/// Spin₁ = ℤ₂^c (same underlying group as [`z2c`]).
pub fn spin1() -> FermionicGroup {
    z2c()
}

/// Pin₁⁻ = ℤ₄ with one time-reversal T of square c.
pub fn pin1_minus() -> FermionicGroup {
    FermionicGroup::from_labels(
        vec!["1", "T", "c", "cT"],
        "1",
        "c",
        &["T", "cT"],
        &[
            ("1", "1", "1"),
            ("1", "T", "T"),
            ("1", "c", "c"),
            ("1", "cT", "cT"),
            ("T", "1", "T"),
            ("T", "T", "c"),
            ("T", "c", "cT"),
            ("T", "cT", "1"),
            ("c", "1", "c"),
            ("c", "T", "cT"),
            ("c", "c", "1"),
            ("c", "cT", "T"),
            ("cT", "1", "cT"),
            ("cT", "T", "1"),
            ("cT", "c", "T"),
            ("cT", "cT", "c"),
        ],
    )
    .unwrap()
}

/// Pin₁⁺ = ℤ₂^c × ℤ₂^T with one time-reversal T of square 1.
pub fn pin1_plus() -> FermionicGroup {
    FermionicGroup::from_labels(
        vec!["1", "T", "c", "cT"],
        "1",
        "c",
        &["T", "cT"],
        &[
            ("1", "1", "1"),
            ("1", "T", "T"),
            ("1", "c", "c"),
            ("1", "cT", "cT"),
            ("T", "1", "T"),
            ("T", "T", "1"),
            ("T", "c", "cT"),
            ("T", "cT", "c"),
            ("c", "1", "c"),
            ("c", "T", "cT"),
            ("c", "c", "1"),
            ("c", "cT", "T"),
            ("cT", "1", "cT"),
            ("cT", "T", "c"),
            ("cT", "c", "T"),
            ("cT", "cT", "1"),
        ],
    )
    .unwrap()
}

/// The quaternion group Q₈ with c = −1 and i, j odd (k even).
pub fn q8() -> FermionicGroup {
    let units = ["1", "i", "j", "k"];
    // quaternion product on (sign, unit index): table[u][v] = (sign, unit)
    let table: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let label = |sign: i8, u: usize| {
        if sign > 0 {
            units[u].to_string()
        } else {
            format!("-{}", units[u])
        }
    };
    let elements: Vec<String> = (0..8)
        .map(|e| label(if e < 4 { 1 } else { -1 }, e % 4))
        .collect();
    let idx = |sign: i8, u: usize| if sign > 0 { u } else { u + 4 };
    let mut mult = vec![vec![0usize; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (sa, ua) = (if a < 4 { 1i8 } else { -1 }, a % 4);
            let (sb, ub) = (if b < 4 { 1i8 } else { -1 }, b % 4);
            let (sp, up) = table[ua][ub];
            mult[a][b] = idx(sa * sb * sp, up);
        }
    }
    let theta = vec![0, 1, 1, 0, 0, 1, 1, 0];
    FermionicGroup::new(
        GroupTable {
            elements,
            mult,
            unit: 0,
        },
        4, // "-1"
        theta,
    )
}

/// Dihedral group of order 8 as a fermionic group: c = r², reflections odd.
/// This is the isomorphism type of Pin₁⁺ ⊗ Pin₁⁺.
pub fn d8_reference() -> FermionicGroup {
    let elements: Vec<String> = (0..8)
        .map(|e| {
            let (i, j) = (e % 4, e / 4);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => format!("r{i}"),
                (0, 1) => "s".to_string(),
                (i, 1) => format!("r{i}s"),
                _ => unreachable!(),
            }
        })
        .collect();
    let mut mult = vec![vec![0usize; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (i, j) = (a % 4, a / 4);
            let (k, l) = (b % 4, b / 4);
            // r^i s^j · r^k s^l = r^{i + (-1)^j k} s^{j+l}
            let twisted = if j == 1 { (4 - k) % 4 } else { k };
            let exp = (i + twisted) % 4;
            mult[a][b] = exp + 4 * ((j + l) % 2);
        }
    }
    let theta = vec![0, 0, 0, 0, 1, 1, 1, 1];
    FermionicGroup::new(
        GroupTable {
            elements,
            mult,
            unit: 0,
        },
        2, // r2
        theta,
    )
}

/// ℤ₂^c × ℤ₂ with trivial grading (a bosonic-graded split group).
pub fn z2c_x_z2_bosonic() -> FermionicGroup {
    let mut g = pin1_plus();
    g.theta = vec![0; 4];
    let relabel = ["1", "u", "c", "cu"];
    g.table.elements = relabel.iter().map(|s| s.to_string()).collect();
    g
}

/// S₃ with a deliberately non-central `c` (a transposition); invalid on
/// purpose, used to exercise the centrality clause.
pub fn s3_with_fake_c() -> FermionicGroup {
    // permutations of {0,1,2}
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let labels = vec!["e", "r", "r2", "s", "rs", "r2s"];
    let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
        [p[q[0]], p[q[1]], p[q[2]]]
    };
    let mut mult = vec![vec![0usize; 6]; 6];
    for a in 0..6 {
        for b in 0..6 {
            let prod = compose(&perms[a], &perms[b]);
            mult[a][b] = perms.iter().position(|p| *p == prod).unwrap();
        }
    }
    FermionicGroup::new(
        GroupTable {
            elements: labels.into_iter().map(String::from).collect(),
            mult,
            unit: 0,
        },
        3, // the transposition "s": not central, not square-anything sensible
        vec![0; 6],
    )
}

// ---------------------------------------------------------------------------
// 2D TFT fixtures

/// The trivial theory for a finite fermionic group: the fermionic group
/// algebra `ℝ[i, x_g]/(i² = −1, x_g i = (−1)^{θ(g)} i x_g, x_g x_h = x_{gh})`,
/// purely even, with `x_g† = x_{g⁻¹}`, `i† = −i` and `λ(z) = z` on A₁ = ℂ.
pub fn trivial_theory(group: &FermionicGroup) -> Result<TftBundle2D> {
    let n = group.order();
    let d = 2 * n; // basis x_g, i·x_g
    let idx = |g: usize, p: usize| 2 * g + p;
    let mut mult = vec![GaussianScalar::zero(); d * d * d];
    for g in 0..n {
        for p in 0..2usize {
            for h in 0..n {
                for q in 0..2usize {
                    // (x_g i^p)(x_h i^q) = (−1)^{θ(h)p} x_{gh} i^{p+q}
                    let mut coef = GaussianScalar::sign_pow((group.theta(h) as usize * p) as u8 % 2);
                    if p + q >= 2 {
                        coef = -coef;
                    }
                    mult[(idx(g, p) * d + idx(h, q)) * d + idx(group.mul(g, h), (p + q) % 2)] =
                        coef;
                }
            }
        }
    }
    let mut unit = vec![GaussianScalar::zero(); d];
    unit[idx(group.unit(), 0)] = GaussianScalar::one();
    let names: Vec<String> = (0..n)
        .flat_map(|g| {
            let l = group.label(g).to_string();
            [format!("x[{l}]"), format!("ix[{l}]")]
        })
        .collect();
    let ambient = crate::salg::Superalgebra::new(FieldTag::Real, vec![0; d], unit, mult, names);
    let components: Vec<Vec<usize>> = (0..n).map(|g| vec![idx(g, 0), idx(g, 1)]).collect();
    let mut i_elem = vec![GaussianScalar::zero(); d];
    i_elem[idx(group.unit(), 1)] = GaussianScalar::one();
    let mut parity_elem = vec![GaussianScalar::zero(); d];
    parity_elem[idx(group.c, 0)] = GaussianScalar::one();
    let bundle = GradedAlgebraBundle {
        grading: BundleGrading::Group(group.clone()),
        ambient,
        components,
        i_elem,
        parity_elem: Some(parity_elem),
        loops: vec![],
    };
    // dagger: (x_g i^p)† = (−1)^{p(1+θ(g))} x_{g⁻¹} i^p
    let mut dagger = ExactMatrix::zeros(d, d);
    for g in 0..n {
        for p in 0..2usize {
            let sign = GaussianScalar::sign_pow((p as u8 * (1 + group.theta(g))) % 2);
            dagger[(idx(group.inv(g), p), idx(g, p))] = sign;
        }
    }
    let mut lambda = vec![GaussianScalar::zero(); d];
    lambda[idx(group.unit(), 0)] = GaussianScalar::one();
    lambda[idx(group.unit(), 1)] = GaussianScalar::i();
    construct_from_dagger(bundle, dagger, FrobeniusStructure { lambda })
}

/// Parameters of the Pin₁⁺-graded fixtures: the base algebra A₁ (ℂ or ℂl₁),
/// the parity and square of the preferred element x_T, and the dagger sign
/// `x_T† = ± x_T`. Positivity holds exactly when the two signs agree.
#[derive(Debug, Clone, Copy)]
pub struct PinTftParams {
    pub base_cl1: bool,
    pub xt_parity: u8,
    pub xt_square: i64,
    pub xt_dagger: i64,
}

/// The Ex-pin / pin-TFT bundles over G = Pin₁⁺ = ℤ₂^c × ℤ₂^T.
pub fn pin_tft(params: PinTftParams) -> Result<TftBundle2D> {
    let PinTftParams {
        base_cl1,
        xt_parity,
        xt_square,
        xt_dagger,
    } = params;
    if xt_square.abs() != 1 || xt_dagger.abs() != 1 {
        return Err(FtftError::Structural("x_T signs must be ±1".into()));
    }
    let mut gens = Vec::new();
    if base_cl1 {
        gens.push(GenSpec {
            name: "e".into(),
            parity: 1,
            square: (GaussianScalar::one(), vec![]),
            comm: vec![],
        });
    }
    let off = gens.len(); // index of x_T
    gens.push(GenSpec {
        name: "xT".into(),
        parity: xt_parity,
        square: (GaussianScalar::from_int(xt_square), vec![]),
        comm: if base_cl1 {
            // e·x_T commutation: x_T e = (−1)^{|x_T|} e x_T
            vec![if xt_parity == 0 { 1 } else { -1 }]
        } else {
            vec![]
        },
    });
    gens.push(GenSpec {
        name: "x".into(),
        parity: 0,
        square: (GaussianScalar::one(), vec![]),
        comm: {
            let mut v = Vec::new();
            if base_cl1 {
                v.push(-1); // x e = −e x
            }
            v.push(if xt_parity == 0 { 1 } else { -1 }); // x x_T = (−1)^{|x_T|} x_T x
            v
        },
    });
    gens.push(GenSpec {
        name: "i".into(),
        parity: 0,
        square: (-GaussianScalar::one(), vec![]),
        comm: {
            let mut v = Vec::new();
            if base_cl1 {
                v.push(1); // i central in A₁
            }
            v.push(-1); // i x_T = −x_T i… i.e. x_T is time-reversing
            v.push(1); // i commutes with x
            v
        },
    });
    let ga = GenAlgebra { gens };
    let ambient = ga.superalgebra(FieldTag::Real);
    let group = pin1_plus();
    // object of a monomial: T-part = x_T bit, c-part = x bit
    let obj_of_mask = |mask: usize| -> usize {
        let t = mask >> off & 1;
        let c = mask >> (off + 1) & 1;
        match (t, c) {
            (0, 0) => 0, // "1"
            (1, 0) => 1, // "T"
            (0, 1) => 2, // "c"
            _ => 3,      // "cT"
        }
    };
    let mut components = vec![Vec::new(); 4];
    for mask in 0..ga.dim() {
        components[obj_of_mask(mask)].push(mask);
    }
    let i_mask = 1 << (off + 2);
    let x_mask = 1 << (off + 1);
    let mut i_elem = vec![GaussianScalar::zero(); ga.dim()];
    i_elem[i_mask] = GaussianScalar::one();
    let mut parity_elem = vec![GaussianScalar::zero(); ga.dim()];
    parity_elem[x_mask] = GaussianScalar::one();
    let bundle = GradedAlgebraBundle {
        grading: BundleGrading::Group(group),
        ambient: ambient.clone(),
        components,
        i_elem,
        parity_elem: Some(parity_elem),
        loops: vec![],
    };
    let mut gen_daggers = Vec::new();
    if base_cl1 {
        gen_daggers.push((GaussianScalar::one(), vec![0])); // e† = e
    }
    gen_daggers.push((GaussianScalar::from_int(xt_dagger), vec![off]));
    gen_daggers.push((GaussianScalar::one(), vec![off + 1]));
    gen_daggers.push((-GaussianScalar::one(), vec![off + 2]));
    let dagger = ga.dagger_matrix(&gen_daggers);
    let mut lambda = vec![GaussianScalar::zero(); ga.dim()];
    lambda[0] = GaussianScalar::one();
    lambda[i_mask] = GaussianScalar::i();
    if base_cl1 {
        // λ(e) = λ(ie) = 0 keeps λ even; the pairing λ(ab) on ℂl₁ is [[1,0],[0,1]]
    }
    construct_from_dagger(bundle, dagger, FrobeniusStructure { lambda })
}

/// The Pin₁⁻-graded bundle of the classification example: grading ℤ₄ with
/// T² = c, `A₁ = ℂ`, even x_T with `x_T² = x = (−1)^F` and `x_T† = x_T·x`.
pub fn pin1_minus_tft() -> Result<TftBundle2D> {
    let ga = GenAlgebra {
        gens: vec![
            GenSpec {
                name: "xT".into(),
                parity: 0,
                square: (GaussianScalar::one(), vec![1]), // x_T² = x
                comm: vec![],
            },
            GenSpec {
                name: "x".into(),
                parity: 0,
                square: (GaussianScalar::one(), vec![]),
                comm: vec![1],
            },
            GenSpec {
                name: "i".into(),
                parity: 0,
                square: (-GaussianScalar::one(), vec![]),
                comm: vec![-1, 1],
            },
        ],
    };
    let ambient = ga.superalgebra(FieldTag::Real);
    let group = pin1_minus(); // elements 1, T, c, cT
    let obj_of_mask = |mask: usize| -> usize {
        let t = mask & 1;
        let c = mask >> 1 & 1;
        match (t, c) {
            (0, 0) => 0,
            (1, 0) => 1,
            (0, 1) => 2,
            _ => 3,
        }
    };
    let mut components = vec![Vec::new(); 4];
    for mask in 0..8 {
        components[obj_of_mask(mask)].push(mask);
    }
    let mut i_elem = vec![GaussianScalar::zero(); 8];
    i_elem[0b100] = GaussianScalar::one();
    let mut parity_elem = vec![GaussianScalar::zero(); 8];
    parity_elem[0b010] = GaussianScalar::one();
    let bundle = GradedAlgebraBundle {
        grading: BundleGrading::Group(group),
        ambient,
        components,
        i_elem,
        parity_elem: Some(parity_elem),
        loops: vec![],
    };
    let dagger = ga.dagger_matrix(&[
        (GaussianScalar::one(), vec![0, 1]), // x_T† = x_T x ∈ A_{cT} = A_{T⁻¹}
        (GaussianScalar::one(), vec![1]),
        (-GaussianScalar::one(), vec![2]),
    ]);
    let mut lambda = vec![GaussianScalar::zero(); 8];
    lambda[0] = GaussianScalar::one();
    lambda[0b100] = GaussianScalar::i();
    construct_from_dagger(bundle, dagger, FrobeniusStructure { lambda })
}

/// The Spin₂-graded theory (spin-charge example): base Bℤ with surjective Γ,
/// ambient ℂ ⊕ ℂx, loop element a_γ = a'_γ·x with a'_γ = 1.
pub fn spinc_theory() -> Result<TftBundle2D> {
    let gb = crate::twogroup::bz_model();
    let class = ExtensionClass {
        gamma: vec![1],
        xi: vec![vec![0]],
    };
    let model = build_ferm_skeletal(&gb, &[0], &class)?;
    let ga = GenAlgebra {
        gens: vec![
            GenSpec {
                name: "x".into(),
                parity: 0,
                square: (GaussianScalar::one(), vec![]),
                comm: vec![],
            },
            GenSpec {
                name: "i".into(),
                parity: 0,
                square: (-GaussianScalar::one(), vec![]),
                comm: vec![1],
            },
        ],
    };
    let ambient = ga.superalgebra(FieldTag::Real);
    // objects of the model: (g=0, ε): index = ε
    let components = vec![vec![0b00, 0b10], vec![0b01, 0b11]];
    let mut i_elem = vec![GaussianScalar::zero(); 4];
    i_elem[0b10] = GaussianScalar::one();
    let mut parity_elem = vec![GaussianScalar::zero(); 4];
    parity_elem[0b01] = GaussianScalar::one();
    let mut a_gamma = vec![GaussianScalar::zero(); 4];
    a_gamma[0b01] = GaussianScalar::one();
    let bundle = GradedAlgebraBundle {
        grading: BundleGrading::TwoGroup(model),
        ambient,
        components,
        i_elem,
        parity_elem: Some(parity_elem),
        loops: vec![a_gamma],
    };
    let dagger = ga.dagger_matrix(&[
        (GaussianScalar::one(), vec![0]),
        (-GaussianScalar::one(), vec![1]),
    ]);
    let mut lambda = vec![GaussianScalar::zero(); 4];
    lambda[0] = GaussianScalar::one();
    lambda[0b10] = GaussianScalar::i();
    construct_from_dagger(bundle, dagger, FrobeniusStructure { lambda })
}

/// The class-AII theory: internal group Pin₂⁻, fermionically skeletal model
/// over the O₂ base with Γ surjective and Ξ(r,r) = 1 (so T ⊗ T = c), ambient
/// generated by an even x_T with x_T² = x anticommuting with i, loop a_γ = x.
pub fn pin2_minus_tft() -> Result<TftBundle2D> {
    let gb = crate::twogroup::o2_model();
    let class = ExtensionClass {
        gamma: vec![1],
        xi: vec![vec![0, 0], vec![0, 1]],
    };
    let model = build_ferm_skeletal(&gb, &[0, 1], &class)?;
    let ga = GenAlgebra {
        gens: vec![
            GenSpec {
                name: "xT".into(),
                parity: 0,
                square: (GaussianScalar::one(), vec![1]),
                comm: vec![],
            },
            GenSpec {
                name: "x".into(),
                parity: 0,
                square: (GaussianScalar::one(), vec![]),
                comm: vec![1],
            },
            GenSpec {
                name: "i".into(),
                parity: 0,
                square: (-GaussianScalar::one(), vec![]),
                comm: vec![-1, 1],
            },
        ],
    };
    let ambient = ga.superalgebra(FieldTag::Real);
    // model object index = 2g + ε with g ∈ {1, r}: monomial (t,c) ↦ 2t + c
    let mut components = vec![Vec::new(); 4];
    for mask in 0..8 {
        let t = mask & 1;
        let c = mask >> 1 & 1;
        components[2 * t + c].push(mask);
    }
    let mut i_elem = vec![GaussianScalar::zero(); 8];
    i_elem[0b100] = GaussianScalar::one();
    let mut parity_elem = vec![GaussianScalar::zero(); 8];
    parity_elem[0b010] = GaussianScalar::one();
    let mut a_gamma = vec![GaussianScalar::zero(); 8];
    a_gamma[0b010] = GaussianScalar::one();
    let bundle = GradedAlgebraBundle {
        grading: BundleGrading::TwoGroup(model),
        ambient,
        components,
        i_elem,
        parity_elem: Some(parity_elem),
        loops: vec![a_gamma],
    };
    let dagger = ga.dagger_matrix(&[
        (GaussianScalar::one(), vec![0, 1]),
        (GaussianScalar::one(), vec![1]),
        (-GaussianScalar::one(), vec![2]),
    ]);
    let mut lambda = vec![GaussianScalar::zero(); 8];
    lambda[0] = GaussianScalar::one();
    lambda[0b100] = GaussianScalar::i();
    construct_from_dagger(bundle, dagger, FrobeniusStructure { lambda })
}

/// Look up a superalgebra fixture by catalog name (used by algebra refs in
/// the bimodule file format): `clifford-p-q`, `complex-clifford-n`,
/// `matrix-m-n`, `quaternions`, `ground-C`, `ground-R`, `dual-numbers`.
pub fn superalgebra_by_name(name: &str) -> Result<crate::salg::Superalgebra> {
    use crate::salg;
    let parts: Vec<&str> = name.split('-').collect();
    match parts.as_slice() {
        ["clifford", p, q] => {
            let p = p.parse().map_err(|_| bad_name(name))?;
            let q = q.parse().map_err(|_| bad_name(name))?;
            salg::clifford(p, q, FieldTag::Real)
        }
        ["complex", "clifford", n] => {
            let n = n.parse().map_err(|_| bad_name(name))?;
            salg::complex_clifford(n)
        }
        ["matrix", m, n] => {
            let m = m.parse().map_err(|_| bad_name(name))?;
            let n = n.parse().map_err(|_| bad_name(name))?;
            Ok(salg::matrix_superalgebra(m, n, FieldTag::Complex))
        }
        ["quaternions"] => Ok(salg::quaternions()),
        ["ground", "C"] => Ok(salg::Superalgebra::ground(FieldTag::Complex)),
        ["ground", "R"] => Ok(salg::Superalgebra::ground(FieldTag::Real)),
        ["dual", "numbers"] => Ok(salg::dual_numbers(FieldTag::Complex)),
        _ => Err(bad_name(name)),
    }
}

fn bad_name(name: &str) -> FtftError {
    FtftError::Structural(format!("unknown algebra fixture `{name}`"))
}

/// Look up a fermionic-group fixture by catalog name.
pub fn fermionic_group_by_name(name: &str) -> Result<FermionicGroup> {
    match name {
        "z2c" | "trivial" => Ok(z2c()),
        "spin1" => Ok(spin1()),
        "pin1-minus" | "pin1m" | "z4ft" => Ok(pin1_minus()),
        "pin1-plus" | "pin1p" | "z2c-x-z2t" => Ok(pin1_plus()),
        "q8" => Ok(q8()),
        "d8" => Ok(d8_reference()),
        _ => Err(FtftError::Structural(format!(
            "unknown fermionic group fixture `{name}`"
        ))),
    }
}
