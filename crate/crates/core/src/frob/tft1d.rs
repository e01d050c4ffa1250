//! The 1D classification datum: either a representation of the even part of
//! the spacetime group with nondegenerate bilinear forms for the odd elements
//! (the conditions of the fixed-point computation), or a unitary fermionic
//! representation of the internal group on a hermitian super vector space,
//! together with the conversion realizing the correspondence between the two.

use crate::exactlin::{ExactMatrix, GaussianScalar};
use crate::fgroup::FermionicGroup;
use crate::report::CheckReport;
use crate::stellar::{check_unitary_fermionic_rep, FermRep, HermitianSuperSpace};
use crate::{FtftError, Result};

#[derive(Debug, Clone)]
pub enum Tft1d {
    /// A representation (R, V) of H₀ with nondegenerate bilinear forms
    /// `_g⟨v,w⟩ = vᵀ F_g w` for the odd elements of H.
    Bilinear {
        h: FermionicGroup,
        parity: Vec<u8>,
        rep: Vec<Option<ExactMatrix>>,
        forms: Vec<Option<ExactMatrix>>,
    },
    /// A unitary fermionic representation of the internal group.
    Rep {
        g: FermionicGroup,
        space: HermitianSuperSpace,
        rho: FermRep,
    },
}

/// Bilinear-mode conditions (with the offending tuple reported):
///   1. `_{g·h}⟨v,w⟩ = _g⟨R(h)v, w⟩`
///   2. `_{h·g}⟨v,w⟩ = _g⟨v, R(h⁻¹)w⟩`
///   3. `_{g⁻¹}⟨v,w⟩ = (−1)^{|v||w|} _{g'⁻¹}⟨w, R(g·g')v⟩`
/// plus nondegeneracy and parity-orthogonality of every form; rep mode defers
/// to the unitary fermionic representation checker.
pub fn check_tft1d(t: &Tft1d) -> CheckReport {
    match t {
        Tft1d::Rep { g, space, rho } => check_unitary_fermionic_rep(g, space, rho),
        Tft1d::Bilinear {
            h,
            parity,
            rep,
            forms,
        } => check_bilinear(h, parity, rep, forms),
    }
}

fn check_bilinear(
    h: &FermionicGroup,
    parity: &[u8],
    rep: &[Option<ExactMatrix>],
    forms: &[Option<ExactMatrix>],
) -> CheckReport {
    let mut report = CheckReport::new();
    let n = h.order();
    let d = parity.len();
    if rep.len() != n || forms.len() != n {
        report.fail("table-shape", "rep/forms must be indexed by the group");
        return report;
    }
    for g in 0..n {
        match (h.theta(g), &rep[g], &forms[g]) {
            (0, Some(m), None) => {
                if m.rows() != d || m.cols() != d {
                    report.fail("table-shape", format!("R({}) has wrong shape", h.label(g)));
                }
            }
            (1, None, Some(f)) => {
                if f.rows() != d || f.cols() != d {
                    report.fail("table-shape", format!("form at {} has wrong shape", h.label(g)));
                }
            }
            _ => {
                report.fail(
                    "table-shape",
                    format!("element {} must carry exactly the right datum", h.label(g)),
                );
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    let r = |g: usize| rep[g].as_ref().unwrap();
    let f = |g: usize| forms[g].as_ref().unwrap();
    if h.theta(h.unit()) != 0 || *r(h.unit()) != ExactMatrix::identity(d) {
        report.fail("representation", "R(1) ≠ id");
    }
    for g in 0..n {
        if h.theta(g) == 0 {
            // even linear maps
            for i in 0..d {
                for j in 0..d {
                    if !r(g)[(i, j)].is_zero() && parity[i] != parity[j] {
                        report.fail("even", format!("R({}) not even", h.label(g)));
                    }
                }
            }
            for k in 0..n {
                if h.theta(k) == 0 && *r(h.mul(g, k)) != r(g) * r(k) {
                    report.fail(
                        "representation",
                        format!("R({}·{}) ≠ R({})R({})", h.label(g), h.label(k), h.label(g), h.label(k)),
                    );
                }
            }
        } else {
            // parity-orthogonal nondegenerate forms
            for i in 0..d {
                for j in 0..d {
                    if !f(g)[(i, j)].is_zero() && parity[i] != parity[j] {
                        report.fail(
                            "parity-orthogonal",
                            format!("V₀ ⊥ V₁ fails for the form at {}", h.label(g)),
                        );
                    }
                }
            }
            if f(g).inverse().is_none() {
                report.fail("nondegenerate", format!("form at {} is degenerate", h.label(g)));
            }
        }
    }
    if !report.is_valid() {
        return report;
    }
    // condition 1 and 2
    for g in 0..n {
        if h.theta(g) != 1 {
            continue;
        }
        for k in 0..n {
            if h.theta(k) != 0 {
                continue;
            }
            let gh = h.mul(g, k);
            let lhs = f(gh);
            let rhs = &r(k).transpose() * f(g);
            if *lhs != rhs {
                report.fail(
                    "condition-1",
                    format!("fails at (g,h) = ({},{})", h.label(g), h.label(k)),
                );
            }
            let hg = h.mul(k, g);
            let rhs = f(g) * r(h.inv(k));
            if *f(hg) != rhs {
                report.fail(
                    "condition-2",
                    format!("fails at (h,g) = ({},{})", h.label(k), h.label(g)),
                );
            }
        }
    }
    // condition 3
    for g in 0..n {
        if h.theta(g) != 1 {
            continue;
        }
        for gp in 0..n {
            if h.theta(gp) != 1 {
                continue;
            }
            let ginv = h.inv(g);
            let gpinv = h.inv(gp);
            let prod = h.mul(g, gp);
            let m = f(gpinv) * r(prod);
            for a in 0..d {
                for b in 0..d {
                    let sign = GaussianScalar::sign_pow(parity[a] & parity[b]);
                    if f(ginv)[(a, b)] != &sign * &m[(b, a)] {
                        report.fail(
                            "condition-3",
                            format!(
                                "fails at (g,g',v,w) = ({},{},{a},{b})",
                                h.label(g),
                                h.label(gp)
                            ),
                        );
                    }
                }
            }
        }
    }
    report
}

/// From a unitary fermionic representation of the internal group G on a
/// hermitian space, the bilinear datum on the spacetime group H = Gᵒᵖ:
/// `R(h) := ρ(h⁻¹)` on the even part and `_g⟨v,w⟩ := ⟨ρ(g⁻¹)·conj(v), w⟩`,
/// i.e. `F_g = conj(M_{g⁻¹})ᵀ · Φ`, for the odd elements.
pub fn convert_rep_to_bilinear(
    g: &FermionicGroup,
    space: &HermitianSuperSpace,
    rho: &FermRep,
) -> Result<Tft1d> {
    let report = check_unitary_fermionic_rep(g, space, rho);
    if !report.is_valid() {
        return Err(FtftError::Precondition(format!(
            "not a unitary fermionic representation: {report}"
        )));
    }
    let h = g.opposite();
    let n = g.order();
    let mut rep = vec![None; n];
    let mut forms = vec![None; n];
    for e in 0..n {
        let inv = g.inv(e);
        if g.theta(e) == 0 {
            rep[e] = Some(rho.matrices[inv].clone());
        } else {
            let f = &rho.matrices[inv].conj().transpose() * &space.form;
            forms[e] = Some(f);
        }
    }
    Ok(Tft1d::Bilinear {
        h,
        parity: space.parity.clone(),
        rep,
        forms,
    })
}

/// The reverse direction: recover the antilinear operators from the forms
/// through the hermitian structure, `M_{g⁻¹} = conj((Φᵀ)⁻¹ F_gᵀ)`, and verify
/// the result as a unitary fermionic representation.
pub fn convert_bilinear_to_rep(
    t: &Tft1d,
    space: &HermitianSuperSpace,
) -> Result<(FermionicGroup, HermitianSuperSpace, FermRep)> {
    let Tft1d::Bilinear { h, rep, forms, .. } = t else {
        return Err(FtftError::Precondition("expected bilinear mode".into()));
    };
    let g = h.opposite();
    let n = g.order();
    let phi_t_inv = space
        .form
        .transpose()
        .inverse()
        .ok_or_else(|| FtftError::Precondition("hermitian form degenerate".into()))?;
    let mut matrices = vec![ExactMatrix::zeros(0, 0); n];
    for e in 0..n {
        // element e of G; its datum sits at the H-label of e⁻¹
        let inv = g.inv(e);
        if g.theta(e) == 0 {
            matrices[e] = rep[inv]
                .clone()
                .ok_or_else(|| FtftError::Structural("missing R".into()))?;
        } else {
            let f = forms[inv]
                .clone()
                .ok_or_else(|| FtftError::Structural("missing form".into()))?;
            matrices[e] = (&phi_t_inv * &f.transpose()).conj();
        }
    }
    let rho = FermRep { matrices };
    let report = check_unitary_fermionic_rep(&g, space, &rho);
    if !report.is_valid() {
        return Err(FtftError::Precondition(format!(
            "recovered operators are not a unitary representation: {report}"
        )));
    }
    Ok((g, space.clone(), rho))
}
