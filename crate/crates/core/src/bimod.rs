//! Graded bimodules and intertwiners: relative tensor products, Hom spaces,
//! induced/opposite/conjugate bimodules, adjunctions with exact snake
//! identities, the Serre bimodule `A*`, and the Serre- and (−1)^F-naturality
//! maps.
//!
//! A `Bimodule` with `left = B`, `right = A` is a (B,A)-bimodule, i.e. a
//! 1-morphism A → B; composition is the relative tensor product, and quotient
//! bases use deterministic echelon pivots so maps between tensor products
//! reproduce exactly.

use crate::exactlin::{ExactMatrix, GaussianScalar};
use crate::report::CheckReport;
use crate::salg::{AlgebraHom, Superalgebra};
use crate::{FtftError, Result};

/// Equality compares the structural data and ignores display names.
#[derive(Debug, Clone)]
pub struct Bimodule {
    pub left: Superalgebra,
    pub right: Superalgebra,
    pub parity: Vec<u8>,
    /// `l[b][m][m']` at `(b*dim + m)*dim + m'`: coords of `e_b · m_m`.
    pub left_act: Vec<GaussianScalar>,
    /// `r[m][a][m']` at `(m*dimA + a)*dim + m'`: coords of `m_m · e_a`.
    pub right_act: Vec<GaussianScalar>,
    pub names: Vec<String>,
}

impl PartialEq for Bimodule {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left
            && self.right == other.right
            && self.parity == other.parity
            && self.left_act == other.left_act
            && self.right_act == other.right_act
    }
}

impl Eq for Bimodule {}

/// An even map of bimodules over a fixed pair of algebras.
#[derive(Debug, Clone)]
pub struct BimoduleMap {
    pub source: Bimodule,
    pub target: Bimodule,
    pub matrix: ExactMatrix,
}

/// A relative tensor product together with its projection and section.
#[derive(Debug, Clone)]
pub struct TensorResult {
    pub module: Bimodule,
    /// raw (outer ⊗ inner) coordinates → quotient coordinates
    pub proj: ExactMatrix,
    /// quotient coordinates → raw representatives, `proj ∘ section = id`
    pub section: ExactMatrix,
}

/// Snake-normalized adjunction data for a (B,A)-bimodule M: the right adjoint
/// N = HOM_B(M,B), the counit ev: M⊗_A N → B and unit coev: A → N⊗_B M.
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub adjoint: Bimodule,
    pub m_n: TensorResult,
    pub n_m: TensorResult,
    pub ev: BimoduleMap,
    pub coev: BimoduleMap,
}

/// A Morita context: an adjoint equivalence with invertible ev and coev.
#[derive(Debug, Clone)]
pub struct MoritaContext {
    pub adjunction: Adjunction,
}

impl Bimodule {
    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    fn l(&self, b: usize, m: usize, mp: usize) -> &GaussianScalar {
        &self.left_act[(b * self.dim() + m) * self.dim() + mp]
    }

    fn r(&self, m: usize, a: usize, mp: usize) -> &GaussianScalar {
        &self.right_act[(m * self.right.dim() + a) * self.dim() + mp]
    }

    pub fn basis_vec(&self, i: usize) -> Vec<GaussianScalar> {
        let mut v = vec![GaussianScalar::zero(); self.dim()];
        v[i] = GaussianScalar::one();
        v
    }

    /// Left action of an algebra element as a matrix on module coordinates.
    pub fn left_mult(&self, b: &[GaussianScalar]) -> ExactMatrix {
        let d = self.dim();
        ExactMatrix::from_fn(d, d, |mp, m| {
            let mut acc = GaussianScalar::zero();
            for (i, coef) in b.iter().enumerate() {
                if !coef.is_zero() {
                    acc += &(coef * self.l(i, m, mp));
                }
            }
            acc
        })
    }

    pub fn right_mult(&self, a: &[GaussianScalar]) -> ExactMatrix {
        let d = self.dim();
        ExactMatrix::from_fn(d, d, |mp, m| {
            let mut acc = GaussianScalar::zero();
            for (j, coef) in a.iter().enumerate() {
                if !coef.is_zero() {
                    acc += &(coef * self.r(m, j, mp));
                }
            }
            acc
        })
    }

    /// An algebra as the regular bimodule over itself.
    pub fn regular(a: &Superalgebra) -> Bimodule {
        let d = a.dim();
        let mut left_act = vec![GaussianScalar::zero(); d * d * d];
        let mut right_act = vec![GaussianScalar::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    left_act[(i * d + j) * d + k] = a.c(i, j, k).clone();
                    right_act[(i * d + j) * d + k] = a.c(i, j, k).clone();
                }
            }
        }
        Bimodule {
            left: a.clone(),
            right: a.clone(),
            parity: a.parity.clone(),
            left_act,
            right_act,
            names: a.names.clone(),
        }
    }

    /// `B_φ` for an algebra map φ: A → B: underlying space B, right A-action
    /// twisted through φ: `b_φ · a = (b φ(a))_φ`.
    pub fn induced(phi: &AlgebraHom) -> Bimodule {
        let b = &phi.target;
        let a = &phi.source;
        let d = b.dim();
        let reg = Bimodule::regular(b);
        let mut right_act = vec![GaussianScalar::zero(); d * a.dim() * d];
        for m in 0..d {
            for j in 0..a.dim() {
                let img = phi.matrix.col_vec(j);
                let prod = b.mul_vec(&b.basis_vec(m), &img);
                for k in 0..d {
                    right_act[(m * a.dim() + j) * d + k] = prod[k].clone();
                }
            }
        }
        Bimodule {
            left: b.clone(),
            right: a.clone(),
            parity: b.parity.clone(),
            left_act: reg.left_act,
            right_act,
            names: b.names.iter().map(|n| format!("{n}_φ")).collect(),
        }
    }

    /// The spin-statistics bimodule `A_{(−1)^F}`, written with the symbol
    /// `(−1)^F` satisfying `a (−1)^F = (−1)^{|a|} (−1)^F a`.
    pub fn spin_statistics(a: &Superalgebra) -> Bimodule {
        let mut m = Bimodule::induced(&a.parity_automorphism());
        m.names = a.names.iter().map(|n| format!("{n}(-1)F")).collect();
        m
    }

    /// Parity shift ΠM = L⊗M for the odd line L: gradings flip and the left
    /// action picks up the sign of moving past L.
    pub fn parity_shift(&self) -> Bimodule {
        let d = self.dim();
        let db = self.left.dim();
        let mut left_act = self.left_act.clone();
        for b in 0..db {
            if self.left.parity[b] == 1 {
                for m in 0..d {
                    for mp in 0..d {
                        let v = -self.l(b, m, mp).clone();
                        left_act[(b * d + m) * d + mp] = v;
                    }
                }
            }
        }
        Bimodule {
            left: self.left.clone(),
            right: self.right.clone(),
            parity: self.parity.iter().map(|p| p ^ 1).collect(),
            left_act,
            right_act: self.right_act.clone(),
            names: self.names.iter().map(|n| format!("Π{n}")).collect(),
        }
    }

    /// `M^op`: a (A^op, B^op)-bimodule with
    /// `a^op · m^op = (−1)^{|a||m|} (m a)^op` and
    /// `m^op · b^op = (−1)^{|b||m|} (b m)^op`.
    pub fn op(&self) -> Bimodule {
        let d = self.dim();
        let da = self.right.dim();
        let db = self.left.dim();
        let mut left_act = vec![GaussianScalar::zero(); da * d * d];
        for a in 0..da {
            for m in 0..d {
                let sign = GaussianScalar::sign_pow(self.right.parity[a] & self.parity[m]);
                for mp in 0..d {
                    left_act[(a * d + m) * d + mp] = &sign * self.r(m, a, mp);
                }
            }
        }
        let mut right_act = vec![GaussianScalar::zero(); d * db * d];
        for m in 0..d {
            for b in 0..db {
                let sign = GaussianScalar::sign_pow(self.left.parity[b] & self.parity[m]);
                for mp in 0..d {
                    right_act[(m * db + b) * d + mp] = &sign * self.l(b, m, mp);
                }
            }
        }
        Bimodule {
            left: self.right.opposite(),
            right: self.left.opposite(),
            parity: self.parity.clone(),
            left_act,
            right_act,
            names: self.names.iter().map(|n| format!("{n}ᵒᵖ")).collect(),
        }
    }

    /// Complex conjugate bimodule over the conjugate algebras.
    pub fn conj(&self) -> Bimodule {
        Bimodule {
            left: self.left.conjugate(),
            right: self.right.conjugate(),
            parity: self.parity.clone(),
            left_act: self.left_act.iter().map(|c| c.conj()).collect(),
            right_act: self.right_act.iter().map(|c| c.conj()).collect(),
            names: self.names.iter().map(|n| format!("~{n}")).collect(),
        }
    }

    /// External tensor product of bimodules over the tensor algebras, with
    /// Koszul signs `(b₁⊗b₂)(x⊗y) = (−1)^{|b₂||x|} b₁x ⊗ b₂y`.
    pub fn external_tensor(&self, other: &Bimodule) -> Result<Bimodule> {
        let left = self.left.tensor(&other.left)?;
        let right = self.right.tensor(&other.right)?;
        let (d1, d2) = (self.dim(), other.dim());
        let d = d1 * d2;
        let idx = |x: usize, y: usize| x * d2 + y;
        let parity: Vec<u8> = (0..d1)
            .flat_map(|x| (0..d2).map(move |y| (x, y)))
            .map(|(x, y)| self.parity[x] ^ other.parity[y])
            .collect();
        let names: Vec<String> = (0..d1)
            .flat_map(|x| (0..d2).map(move |y| (x, y)))
            .map(|(x, y)| format!("{}⊠{}", self.names[x], other.names[y]))
            .collect();
        let (b1, b2) = (self.left.dim(), other.left.dim());
        let mut left_act = vec![GaussianScalar::zero(); b1 * b2 * d * d];
        for i1 in 0..b1 {
            for i2 in 0..b2 {
                for x in 0..d1 {
                    let sign = GaussianScalar::sign_pow(other.left.parity[i2] & self.parity[x]);
                    for y in 0..d2 {
                        for xp in 0..d1 {
                            if self.l(i1, x, xp).is_zero() {
                                continue;
                            }
                            for yp in 0..d2 {
                                if other.l(i2, y, yp).is_zero() {
                                    continue;
                                }
                                let v = &(&sign * self.l(i1, x, xp)) * other.l(i2, y, yp);
                                left_act[((i1 * b2 + i2) * d + idx(x, y)) * d + idx(xp, yp)] = v;
                            }
                        }
                    }
                }
            }
        }
        let (a1, a2) = (self.right.dim(), other.right.dim());
        let mut right_act = vec![GaussianScalar::zero(); d * a1 * a2 * d];
        for x in 0..d1 {
            for y in 0..d2 {
                for j1 in 0..a1 {
                    let sign = GaussianScalar::sign_pow(other.parity[y] & self.right.parity[j1]);
                    for j2 in 0..a2 {
                        for xp in 0..d1 {
                            if self.r(x, j1, xp).is_zero() {
                                continue;
                            }
                            for yp in 0..d2 {
                                if other.r(y, j2, yp).is_zero() {
                                    continue;
                                }
                                let v = &(&sign * self.r(x, j1, xp)) * other.r(y, j2, yp);
                                right_act[(idx(x, y) * a1 * a2 + j1 * a2 + j2) * d + idx(xp, yp)] =
                                    v;
                            }
                        }
                    }
                }
            }
        }
        Ok(Bimodule {
            left,
            right,
            parity,
            left_act,
            right_act,
            names,
        })
    }

    /// Validation: unital associative actions that commute and respect the
    /// grading, over valid algebras.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let d = self.dim();
        let (db, da) = (self.left.dim(), self.right.dim());
        if self.left_act.len() != db * d * d || self.right_act.len() != d * da * d {
            report.fail("table-shape", "action tensors have wrong shape");
            return report;
        }
        let lu = self.left_mult(&self.left.unit);
        let ru = self.right_mult(&self.right.unit);
        if lu != ExactMatrix::identity(d) {
            report.fail("left-unital", "1·m ≠ m");
        }
        if ru != ExactMatrix::identity(d) {
            report.fail("right-unital", "m·1 ≠ m");
        }
        for i in 0..db {
            for j in 0..db {
                let bi = self.left.basis_vec(i);
                let bj = self.left.basis_vec(j);
                let prod = self.left.mul_vec(&bi, &bj);
                if self.left_mult(&prod) != &self.left_mult(&bi) * &self.left_mult(&bj) {
                    report.fail("left-associative", format!("(b{i}·b{j})·m ≠ b{i}·(b{j}·m)"));
                }
            }
        }
        for i in 0..da {
            for j in 0..da {
                let ai = self.right.basis_vec(i);
                let aj = self.right.basis_vec(j);
                let prod = self.right.mul_vec(&ai, &aj);
                if self.right_mult(&prod) != &self.right_mult(&aj) * &self.right_mult(&ai) {
                    report.fail("right-associative", format!("m·(a{i}·a{j}) ≠ (m·a{i})·a{j}"));
                }
            }
        }
        for i in 0..db {
            for j in 0..da {
                let bi = self.left_mult(&self.left.basis_vec(i));
                let aj = self.right_mult(&self.right.basis_vec(j));
                if &bi * &aj != &aj * &bi {
                    report.fail("actions-commute", format!("(b{i}·m)·a{j} ≠ b{i}·(m·a{j})"));
                }
            }
        }
        for b in 0..db {
            for m in 0..d {
                for mp in 0..d {
                    if !self.l(b, m, mp).is_zero()
                        && self.parity[mp] != self.left.parity[b] ^ self.parity[m]
                    {
                        report.fail("grading", format!("left action breaks grading at ({b},{m})"));
                    }
                }
            }
        }
        for m in 0..d {
            for a in 0..da {
                for mp in 0..d {
                    if !self.r(m, a, mp).is_zero()
                        && self.parity[mp] != self.right.parity[a] ^ self.parity[m]
                    {
                        report.fail("grading", format!("right action breaks grading at ({m},{a})"));
                    }
                }
            }
        }
        report
    }
}

impl BimoduleMap {
    pub fn identity(m: &Bimodule) -> BimoduleMap {
        BimoduleMap {
            source: m.clone(),
            target: m.clone(),
            matrix: ExactMatrix::identity(m.dim()),
        }
    }

    /// Even + intertwines both actions; algebras must match on the nose.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        if self.source.left != self.target.left || self.source.right != self.target.right {
            report.fail("algebras", "source and target live over different algebra pairs");
            return report;
        }
        if self.matrix.rows() != self.target.dim() || self.matrix.cols() != self.source.dim() {
            report.fail("table-shape", "matrix has wrong shape");
            return report;
        }
        for j in 0..self.source.dim() {
            let img = self.matrix.col_vec(j);
            for (i, c) in img.iter().enumerate() {
                if !c.is_zero() && self.target.parity[i] != self.source.parity[j] {
                    report.fail("even", format!("column {j} maps across parity"));
                    break;
                }
            }
        }
        for b in 0..self.source.left.dim() {
            let e = self.source.left.basis_vec(b);
            if &self.matrix * &self.source.left_mult(&e) != &self.target.left_mult(&e) * &self.matrix
            {
                report.fail("left-intertwine", format!("fails for left basis {b}"));
            }
        }
        for a in 0..self.source.right.dim() {
            let e = self.source.right.basis_vec(a);
            if &self.matrix * &self.source.right_mult(&e)
                != &self.target.right_mult(&e) * &self.matrix
            {
                report.fail("right-intertwine", format!("fails for right basis {a}"));
            }
        }
        report
    }

    pub fn is_iso(&self) -> bool {
        self.check().is_valid() && self.matrix.inverse().is_some()
    }

    pub fn compose(&self, inner: &BimoduleMap) -> BimoduleMap {
        BimoduleMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        }
    }
}

/// Relative tensor product `N ⊗_B M` of a (C,B)-bimodule with a (B,A)-bimodule:
/// the quotient of N⊗M by `nb⊗m − n⊗bm`, with deterministic echelon basis.
pub fn tensor_over(n_mod: &Bimodule, m_mod: &Bimodule) -> Result<TensorResult> {
    if n_mod.right != m_mod.left {
        return Err(FtftError::Dimension(
            "tensor_over: middle algebras differ".into(),
        ));
    }
    let b_alg = &m_mod.left;
    let (dn, dm) = (n_mod.dim(), m_mod.dim());
    let raw = dn * dm;
    let idx = |i: usize, j: usize| i * dm + j;
    // relation rows: (n_i · b)⊗m_j − n_i⊗(b · m_j)
    let mut rows = Vec::new();
    for i in 0..dn {
        for b in 0..b_alg.dim() {
            for j in 0..dm {
                let mut row = vec![GaussianScalar::zero(); raw];
                for k in 0..dn {
                    let c = n_mod.r(i, b, k);
                    if !c.is_zero() {
                        row[idx(k, j)] += c;
                    }
                }
                for l in 0..dm {
                    let c = m_mod.l(b, j, l);
                    if !c.is_zero() {
                        row[idx(i, l)] -= c;
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let (proj, section, free) = quotient_by_rows(raw, rows);
    let qdim = free.len();
    let raw_parity: Vec<u8> = (0..raw)
        .map(|r| n_mod.parity[r / dm] ^ m_mod.parity[r % dm])
        .collect();
    let parity: Vec<u8> = free.iter().map(|&f| raw_parity[f]).collect();
    let names: Vec<String> = free
        .iter()
        .map(|&f| format!("{}⊗{}", n_mod.names[f / dm], m_mod.names[f % dm]))
        .collect();
    // induced actions: act on the section representative, project back
    let c_alg = &n_mod.left;
    let a_alg = &m_mod.right;
    let mut left_act = vec![GaussianScalar::zero(); c_alg.dim() * qdim * qdim];
    for c in 0..c_alg.dim() {
        // left action on raw: acts on the n factor, no Koszul sign
        let raw_l = ExactMatrix::from_fn(raw, raw, |rp, r| {
            let (i, j) = (r / dm, r % dm);
            let (ip, jp) = (rp / dm, rp % dm);
            if j == jp {
                n_mod.l(c, i, ip).clone()
            } else {
                GaussianScalar::zero()
            }
        });
        let q = &(&proj * &raw_l) * &section;
        for m in 0..qdim {
            for mp in 0..qdim {
                left_act[(c * qdim + m) * qdim + mp] = q[(mp, m)].clone();
            }
        }
    }
    let mut right_act = vec![GaussianScalar::zero(); qdim * a_alg.dim() * qdim];
    for a in 0..a_alg.dim() {
        let raw_r = ExactMatrix::from_fn(raw, raw, |rp, r| {
            let (i, j) = (r / dm, r % dm);
            let (ip, jp) = (rp / dm, rp % dm);
            if i == ip {
                m_mod.r(j, a, jp).clone()
            } else {
                GaussianScalar::zero()
            }
        });
        let q = &(&proj * &raw_r) * &section;
        for m in 0..qdim {
            for mp in 0..qdim {
                right_act[(m * a_alg.dim() + a) * qdim + mp] = q[(mp, m)].clone();
            }
        }
    }
    let module = Bimodule {
        left: c_alg.clone(),
        right: a_alg.clone(),
        parity,
        left_act,
        right_act,
        names,
    };
    Ok(TensorResult {
        module,
        proj,
        section,
    })
}

/// Quotient of F^raw by the row space: returns (projection, section, free
/// coordinates) under the fixed pivot rule.
fn quotient_by_rows(
    raw: usize,
    rows: Vec<Vec<GaussianScalar>>,
) -> (ExactMatrix, ExactMatrix, Vec<usize>) {
    if rows.is_empty() {
        let id = ExactMatrix::identity(raw);
        return (id.clone(), id, (0..raw).collect());
    }
    let rel = ExactMatrix::from_rows(rows);
    let (rref, pivots) = rel.rref();
    let free: Vec<usize> = (0..raw).filter(|c| !pivots.contains(c)).collect();
    let qdim = free.len();
    let mut proj = ExactMatrix::zeros(qdim, raw);
    for (qi, &f) in free.iter().enumerate() {
        proj[(qi, f)] = GaussianScalar::one();
    }
    for (row, &p) in pivots.iter().enumerate() {
        // e_p = −Σ_{f free} rref[row][f] e_f in the quotient
        for (qi, &f) in free.iter().enumerate() {
            proj[(qi, p)] = -rref[(row, f)].clone();
        }
    }
    let mut section = ExactMatrix::zeros(raw, qdim);
    for (qi, &f) in free.iter().enumerate() {
        section[(f, qi)] = GaussianScalar::one();
    }
    (proj, section, free)
}

/// Echelonized basis of the space of even bimodule maps M → N.
pub fn hom_even(m: &Bimodule, n: &Bimodule) -> Result<Vec<BimoduleMap>> {
    if m.left != n.left || m.right != n.right {
        return Err(FtftError::Dimension("hom_even: algebras differ".into()));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let unknowns = dm * dn; // X[(i,j)] = matrix entry (i ∈ N, j ∈ M)
    let flat = |i: usize, j: usize| i * dm + j;
    let mut rows = Vec::new();
    // evenness: X[(i,j)] = 0 when parities differ
    for i in 0..dn {
        for j in 0..dm {
            if n.parity[i] != m.parity[j] {
                let mut row = vec![GaussianScalar::zero(); unknowns];
                row[flat(i, j)] = GaussianScalar::one();
                rows.push(row);
            }
        }
    }
    // intertwining: X·L_b = L'_b·X and X·R_a = R'_a·X entrywise
    let push_intertwine = |sm: &ExactMatrix, tn: &ExactMatrix, rows: &mut Vec<Vec<GaussianScalar>>| {
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![GaussianScalar::zero(); unknowns];
                for k in 0..dm {
                    row[flat(i, k)] += &sm[(k, j)];
                }
                for k in 0..dn {
                    row[flat(k, j)] -= &tn[(i, k)];
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    };
    for b in 0..m.left.dim() {
        let e = m.left.basis_vec(b);
        push_intertwine(&m.left_mult(&e), &n.left_mult(&e), &mut rows);
    }
    for a in 0..m.right.dim() {
        let e = m.right.basis_vec(a);
        push_intertwine(&m.right_mult(&e), &n.right_mult(&e), &mut rows);
    }
    let kernel = if rows.is_empty() {
        ExactMatrix::zeros(1, unknowns).kernel()
    } else {
        ExactMatrix::from_rows(rows).kernel()
    };
    Ok(kernel
        .into_iter()
        .map(|v| BimoduleMap {
            source: m.clone(),
            target: n.clone(),
            matrix: ExactMatrix::from_fn(dn, dm, |i, j| v[flat(i, j)].clone()),
        })
        .collect())
}

/// The Serre bimodule `A*`: the linear dual with the twisted graded actions
/// `(f a₁)(a₂) = f(a₁ a₂)` and `(a₁ f)(a₂) = (−1)^{|a₁|(|f|+|a₂|)} f(a₂ a₁)`.
pub fn serre(a: &Superalgebra) -> Bimodule {
    let d = a.dim();
    let mut left_act = vec![GaussianScalar::zero(); d * d * d];
    let mut right_act = vec![GaussianScalar::zero(); d * d * d];
    for k in 0..d {
        for i in 0..d {
            // δ_i · e_k = Σ_j c[k][j][i] δ_j
            for j in 0..d {
                right_act[(i * d + k) * d + j] = a.c(k, j, i).clone();
            }
            // e_k · δ_i = Σ_j (−1)^{p_k (p_i + p_j)} c[j][k][i] δ_j
            for j in 0..d {
                let sign = GaussianScalar::sign_pow(a.parity[k] & (a.parity[i] ^ a.parity[j]));
                left_act[(k * d + i) * d + j] = &sign * a.c(j, k, i);
            }
        }
    }
    Bimodule {
        left: a.clone(),
        right: a.clone(),
        parity: a.parity.clone(),
        left_act,
        right_act,
        names: a.names.iter().map(|n| format!("{n}*")).collect(),
    }
}

/// Right adjoint of a (B,A)-bimodule M (a morphism A → B): the (A,B)-bimodule
/// `N = HOM_B(M,B)` of graded left-B-linear maps, with
/// `ev(m⊗f) = (−1)^{|m||f|} f(m)` and the unit solved for by linear algebra.
/// Fails (non-projectivity) when no snake-compatible unit exists.
pub fn right_adjoint(m: &Bimodule) -> Result<Adjunction> {
    let b_alg = &m.left;
    let a_alg = &m.right;
    let (dm, db, da) = (m.dim(), b_alg.dim(), a_alg.dim());
    // basis of HOM_B(M,B): matrices F (db × dm) with F(b·x) = (−1)^{|b| p} b·F(x)
    let mut hom_basis: Vec<(ExactMatrix, u8)> = Vec::new();
    for p in [0u8, 1u8] {
        let unknowns = db * dm;
        let flat = |o: usize, i: usize| o * dm + i;
        let mut rows = Vec::new();
        for o in 0..db {
            for i in 0..dm {
                if b_alg.parity[o] != p ^ m.parity[i] {
                    let mut row = vec![GaussianScalar::zero(); unknowns];
                    row[flat(o, i)] = GaussianScalar::one();
                    rows.push(row);
                }
            }
        }
        for b in 0..db {
            let e = b_alg.basis_vec(b);
            let lm = m.left_mult(&e);
            let lb = b_alg.left_mult(&e);
            let sign = GaussianScalar::sign_pow(b_alg.parity[b] & p);
            // F·L_b − (−1)^{|b|p} L^B_b·F = 0
            for o in 0..db {
                for i in 0..dm {
                    let mut row = vec![GaussianScalar::zero(); unknowns];
                    for k in 0..dm {
                        row[flat(o, k)] += &lm[(k, i)];
                    }
                    for k in 0..db {
                        row[flat(k, i)] -= &(&sign * &lb[(o, k)]);
                    }
                    if row.iter().any(|c| !c.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            ExactMatrix::zeros(1, unknowns).kernel()
        } else {
            ExactMatrix::from_rows(rows).kernel()
        };
        for v in kernel {
            hom_basis.push((
                ExactMatrix::from_fn(db, dm, |o, i| v[flat(o, i)].clone()),
                p,
            ));
        }
    }
    let dn = hom_basis.len();
    if dn == 0 {
        return Err(FtftError::Precondition(
            "right adjoint: HOM_B(M,B) is zero".into(),
        ));
    }
    // expand an arbitrary (db × dm) matrix in the hom basis, if possible
    let expand = |f: &ExactMatrix| -> Option<Vec<GaussianScalar>> {
        let rows = db * dm;
        let basis_mat = ExactMatrix::from_fn(rows, dn, |r, j| hom_basis[j].0[(r / dm, r % dm)].clone());
        let target: Vec<GaussianScalar> =
            (0..rows).map(|r| f[(r / dm, r % dm)].clone()).collect();
        basis_mat.solve(&target).ok().flatten()
    };
    // actions on N: (a·f)(x) = (−1)^{|a|(|f|+|x|)} f(x·a), (f·b)(x) = f(b·x)
    let mut left_act = vec![GaussianScalar::zero(); da * dn * dn];
    for a in 0..da {
        let ra = m.right_mult(&a_alg.basis_vec(a));
        for (fi, (f, p)) in hom_basis.iter().enumerate() {
            // (a·f) as a matrix: column x ↦ (−1)^{|a|(p+|x|)} f(x·a)
            let mat = ExactMatrix::from_fn(db, dm, |o, x| {
                let sign = GaussianScalar::sign_pow(a_alg.parity[a] & (p ^ m.parity[x]));
                let mut acc = GaussianScalar::zero();
                for k in 0..dm {
                    if !ra[(k, x)].is_zero() {
                        acc += &(&ra[(k, x)] * &f[(o, k)]);
                    }
                }
                &sign * &acc
            });
            let coords = expand(&mat).ok_or_else(|| {
                FtftError::Precondition("right adjoint: left action leaves HOM".into())
            })?;
            for (fj, c) in coords.into_iter().enumerate() {
                left_act[(a * dn + fi) * dn + fj] = c;
            }
        }
    }
    let mut right_act = vec![GaussianScalar::zero(); dn * db * dn];
    for b in 0..db {
        // (f·b)(x) = (−1)^{|b||x|} f(x)·b
        let rb = b_alg.right_mult(&b_alg.basis_vec(b));
        for (fi, (f, _)) in hom_basis.iter().enumerate() {
            let mat = ExactMatrix::from_fn(db, dm, |o, x| {
                let sign = GaussianScalar::sign_pow(b_alg.parity[b] & m.parity[x]);
                let mut acc = GaussianScalar::zero();
                for k in 0..db {
                    if !f[(k, x)].is_zero() {
                        acc += &(&f[(k, x)] * &rb[(o, k)]);
                    }
                }
                &sign * &acc
            });
            let coords = expand(&mat).ok_or_else(|| {
                FtftError::Precondition("right adjoint: right action leaves HOM".into())
            })?;
            for (fj, c) in coords.into_iter().enumerate() {
                right_act[(fi * db + b) * dn + fj] = c;
            }
        }
    }
    let adjoint = Bimodule {
        left: a_alg.clone(),
        right: b_alg.clone(),
        parity: hom_basis.iter().map(|(_, p)| *p).collect(),
        left_act,
        right_act,
        names: (0..dn).map(|i| format!("f{i}")).collect(),
    };
    // ev: M ⊗_A N → B on raw generators
    let m_n = tensor_over(m, &adjoint)?;
    let ev_raw = ExactMatrix::from_fn(db, dm * dn, |o, r| {
        let (i, j) = (r / dn, r % dn);
        let (f, p) = &hom_basis[j];
        let sign = GaussianScalar::sign_pow(m.parity[i] & p);
        &sign * &f[(o, i)]
    });
    let ev = BimoduleMap {
        source: m_n.module.clone(),
        target: Bimodule::regular(b_alg),
        matrix: &ev_raw * &m_n.section,
    };
    // coev: A → N ⊗_B M, solved from snake 1 and bimodule-map constraints
    let n_m = tensor_over(&adjoint, m)?;
    let q = n_m.module.dim();
    // unknown z ∈ N⊗M quotient; conditions: snake1 and e_a·z = z·e_a… plus
    // coev(a) := a·z makes it a bimodule map automatically once z is central.
    let mut rows: Vec<Vec<GaussianScalar>> = Vec::new();
    let mut rhs: Vec<GaussianScalar> = Vec::new();
    // snake1: for each basis m_x: Σ_q z_q · snake(m_x, s(q)) = m_x
    for x in 0..dm {
        for out in 0..dm {
            let mut row = vec![GaussianScalar::zero(); q];
            for (qi, row_ref) in row.iter_mut().enumerate() {
                let rep = n_m.section.col_vec(qi);
                // rep is Σ over raw (f_j, m_k); snake: m_x⊗f_j⊗m_k ↦ ev(m_x⊗f_j)·m_k
                let mut acc = GaussianScalar::zero();
                for (r, coef) in rep.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let (j, k) = (r / dm, r % dm);
                    let (f, p) = &hom_basis[j];
                    let sign = GaussianScalar::sign_pow(m.parity[x] & p);
                    // ev(m_x⊗f_j) = sign·f_j(m_x) ∈ B, then apply to m_k
                    let fb: Vec<GaussianScalar> =
                        (0..db).map(|o| &sign * &f[(o, x)]).collect();
                    let lm = m.left_mult(&fb);
                    acc += &(coef * &lm[(out, k)]);
                }
                *row_ref = acc;
            }
            rows.push(row);
            rhs.push(if out == x {
                GaussianScalar::one()
            } else {
                GaussianScalar::zero()
            });
        }
    }
    // centrality: L_a z − R_a z = 0 in the quotient
    for a in 0..da {
        let e = a_alg.basis_vec(a);
        let diff = &n_m.module.left_mult(&e) - &n_m.module.right_mult(&e);
        for out in 0..q {
            let row: Vec<GaussianScalar> = (0..q).map(|qi| diff[(out, qi)].clone()).collect();
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
                rhs.push(GaussianScalar::zero());
            }
        }
    }
    let system = ExactMatrix::from_rows(rows);
    let z = system
        .solve(&rhs)?
        .ok_or_else(|| FtftError::Precondition("snake equations unsolvable (module not projective?)".into()))?;
    // verify snake 2: f ↦ Σ f_i·ev(m_i⊗f) = f
    let z_raw = n_m.section.apply(&z);
    for (j0, (_, p0)) in hom_basis.iter().enumerate() {
        let mut acc = vec![GaussianScalar::zero(); dn];
        for (r, coef) in z_raw.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (j, k) = (r / dm, r % dm);
            // f_j · ev(m_k ⊗ f_{j0})
            let (f0, _) = &hom_basis[j0];
            let sign = GaussianScalar::sign_pow(m.parity[k] & p0);
            let fb: Vec<GaussianScalar> = (0..db).map(|o| &sign * &f0[(o, k)]).collect();
            let rb = adjoint.right_mult(&fb);
            for out in 0..dn {
                acc[out] += &(coef * &rb[(out, j)]);
            }
        }
        let expected = adjoint.basis_vec(j0);
        if acc != expected {
            return Err(FtftError::Precondition(
                "snake identity 2 fails for the solved unit".into(),
            ));
        }
    }
    let coev_matrix = ExactMatrix::from_fn(q, da, |qi, a| {
        let la = n_m.module.left_mult(&a_alg.basis_vec(a));
        let mut acc = GaussianScalar::zero();
        for (k, zk) in z.iter().enumerate() {
            acc += &(zk * &la[(qi, k)]);
        }
        acc
    });
    let coev = BimoduleMap {
        source: Bimodule::regular(a_alg),
        target: n_m.module.clone(),
        matrix: coev_matrix,
    };
    Ok(Adjunction {
        adjoint,
        m_n,
        n_m,
        ev,
        coev,
    })
}

/// Invertibility via the canonical adjoint candidate: M is invertible iff the
/// snake-normalized ev and coev are isomorphisms.
pub fn is_invertible(m: &Bimodule) -> Result<Option<MoritaContext>> {
    let adj = match right_adjoint(m) {
        Ok(adj) => adj,
        Err(FtftError::Precondition(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if adj.ev.matrix.rows() == adj.ev.matrix.cols()
        && adj.coev.matrix.rows() == adj.coev.matrix.cols()
        && adj.ev.matrix.inverse().is_some()
        && adj.coev.matrix.inverse().is_some()
    {
        Ok(Some(MoritaContext { adjunction: adj }))
    } else {
        Ok(None)
    }
}

impl MoritaContext {
    pub fn inverse_bimodule(&self) -> &Bimodule {
        &self.adjunction.adjoint
    }

    /// A unit decomposition Σ c_{jk} ev(m_j⊗n_k) = 1_B as raw coefficients.
    pub fn unit_decomposition(&self) -> Result<Vec<GaussianScalar>> {
        let adj = &self.adjunction;
        let m = &adj.ev;
        let raw_ev = &m.matrix * &adj.m_n.proj;
        raw_ev
            .solve(&adj.ev.target.left.unit.clone())?
            .ok_or_else(|| FtftError::Precondition("no unit decomposition".into()))
    }

    /// The contraction η: N⊗_B M → A inverse to coev, on raw coordinates.
    pub fn eta_raw(&self) -> Result<ExactMatrix> {
        let adj = &self.adjunction;
        let inv = adj
            .coev
            .matrix
            .inverse()
            .ok_or_else(|| FtftError::Precondition("coev not invertible".into()))?;
        Ok(&inv * &adj.n_m.proj)
    }
}

/// Serre naturality `S_M: B*⊗_B M → M⊗_A A*` by the closed formula
/// `S(f⊗m) = Σ_j m_j ⊗ (n_j f m)` with `Σ_j ev(m_j⊗n_j) = 1` and
/// `(n f m)(a) := (−1)^{|n|(|f|+|m|+|a|)} f(ev(m ⊗ a·n))`.
/// Returns the map together with its domain and codomain tensor data.
pub fn serre_naturality(
    m: &Bimodule,
    ctx: &MoritaContext,
    unit_dec: &[GaussianScalar],
) -> Result<(BimoduleMap, TensorResult, TensorResult)> {
    let b_alg = &m.left;
    let a_alg = &m.right;
    let n = ctx.inverse_bimodule();
    let (dm, dn, da, db) = (m.dim(), n.dim(), a_alg.dim(), b_alg.dim());
    let dom = tensor_over(&serre(b_alg), m)?;
    let cod = tensor_over(m, &serre(a_alg))?;
    // raw map on B*⊗M generators (f_i, m_x) → Σ over unit decomposition
    let ev_raw = &ctx.adjunction.ev.matrix * &ctx.adjunction.m_n.proj;
    let mut raw_map = ExactMatrix::zeros(dm * da, db * dm);
    for fi in 0..db {
        for x in 0..dm {
            // target coords over raw (m_j, δ_l)
            let mut target = vec![GaussianScalar::zero(); dm * da];
            for j in 0..dm {
                for k in 0..dn {
                    let c = &unit_dec[j * dn + k];
                    if c.is_zero() {
                        continue;
                    }
                    // (n_k f_i m_x)(e_a) = (−1)^{|n_k|(|f_i|+|m_x|+|a|)} f_i(ev(m_x ⊗ e_a·n_k))
                    for a in 0..da {
                        let sign = GaussianScalar::sign_pow(
                            n.parity[k] & (b_alg.parity[fi] ^ m.parity[x] ^ a_alg.parity[a]),
                        );
                        let an = n.left_mult(&a_alg.basis_vec(a)).col_vec(k);
                        // ev(m_x ⊗ an) ∈ B, coefficient fi
                        let mut val = GaussianScalar::zero();
                        for (kp, coef) in an.iter().enumerate() {
                            if !coef.is_zero() {
                                val += &(coef * &ev_raw[(fi, x * dn + kp)]);
                            }
                        }
                        target[j * da + a] += &(&(&sign * c) * &val);
                    }
                }
            }
            for (t, v) in target.into_iter().enumerate() {
                raw_map[(t, fi * dm + x)] = v;
            }
        }
    }
    let matrix = &(&cod.proj * &raw_map) * &dom.section;
    // the raw formula must descend to the quotient
    let descended = &cod.proj * &raw_map;
    let recomposed = &(&matrix * &dom.proj) - &descended;
    if !recomposed.is_zero() {
        return Err(FtftError::Precondition(
            "serre naturality formula does not descend to the tensor quotient".into(),
        ));
    }
    let map = BimoduleMap {
        source: dom.module.clone(),
        target: cod.module.clone(),
        matrix,
    };
    Ok((map, dom, cod))
}

/// Independent oracle for the Serre naturality map: the unique linear map
/// X: B*⊗M → M⊗A* with `⟨X(f⊗m), n⟩ = f(ev(m⊗n))` for all n ∈ N, where
/// `⟨m'⊗g, n⟩ := (−1)^{|m'|(|g|+|n|)} g(η(n⊗m'))` (the sign makes the pairing
/// balanced over A) and η is the contraction inverse to coev.
pub fn serre_naturality_oracle(
    m: &Bimodule,
    ctx: &MoritaContext,
) -> Result<(BimoduleMap, TensorResult, TensorResult)> {
    let b_alg = &m.left;
    let a_alg = &m.right;
    let n = ctx.inverse_bimodule();
    let (dm, dn, da, _db) = (m.dim(), n.dim(), a_alg.dim(), b_alg.dim());
    let dom = tensor_over(&serre(b_alg), m)?;
    let cod = tensor_over(m, &serre(a_alg))?;
    let (qd, qc) = (dom.module.dim(), cod.module.dim());
    let ev_raw = &ctx.adjunction.ev.matrix * &ctx.adjunction.m_n.proj;
    let eta_raw = ctx.eta_raw()?;
    // pairing P[qc][n] = ⟨s(q), n⟩
    let pairing = ExactMatrix::from_fn(qc, dn, |q, ni| {
        let rep = cod.section.col_vec(q);
        let mut acc = GaussianScalar::zero();
        for (r, coef) in rep.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (j, l) = (r / da, r % da); // m_j ⊗ δ_l
            let sign = GaussianScalar::sign_pow(
                m.parity[j] & (a_alg.parity[l] ^ n.parity[ni]),
            );
            // η(n_i ⊗ m_j) ∈ A, coefficient l
            acc += &(&sign * &(coef * &eta_raw[(l, ni * dm + j)]));
        }
        acc
    });
    // unknown X: qc × qd; constraints: pairingᵀ·X(col q) = rhs(q, ·)
    let unknowns = qc * qd;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for q in 0..qd {
        let rep = dom.section.col_vec(q);
        for ni in 0..dn {
            let mut row = vec![GaussianScalar::zero(); unknowns];
            for t in 0..qc {
                row[t * qd + q] = pairing[(t, ni)].clone();
            }
            let mut val = GaussianScalar::zero();
            for (r, coef) in rep.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let (fi, x) = (r / dm, r % dm); // δ_fi ⊗ m_x
                val += &(coef * &ev_raw[(fi, x * dn + ni)]);
            }
            rows.push(row);
            rhs.push(val);
        }
    }
    let system = ExactMatrix::from_rows(rows);
    if !system.kernel().is_empty() {
        return Err(FtftError::Precondition(
            "serre oracle: pairing does not determine the map uniquely".into(),
        ));
    }
    let x = system
        .solve(&rhs)?
        .ok_or_else(|| FtftError::Precondition("serre oracle: system inconsistent".into()))?;
    let map = BimoduleMap {
        source: dom.module.clone(),
        target: cod.module.clone(),
        matrix: ExactMatrix::from_fn(qc, qd, |t, q| x[t * qd + q].clone()),
    };
    Ok((map, dom, cod))
}

/// (−1)^F-naturality: `M⊗_A A_{(−1)^F} → B_{(−1)^F}⊗_B M`,
/// `m ⊗ a(−1)^F ↦ (−1)^{|m|+|a|} (−1)^F ⊗ ma`.
pub fn parity_naturality(m: &Bimodule) -> Result<(BimoduleMap, TensorResult, TensorResult)> {
    let a_ss = Bimodule::spin_statistics(&m.right);
    let b_ss = Bimodule::spin_statistics(&m.left);
    let dom = tensor_over(m, &a_ss)?;
    let cod = tensor_over(&b_ss, m)?;
    let (dm, da, db) = (m.dim(), m.right.dim(), m.left.dim());
    let mut raw = ExactMatrix::zeros(db * dm, dm * da);
    // generator m_x ⊗ a_j(−1)^F ↦ (−1)^{|m_x|+|a_j|} Σ (−1)^F ⊗ (m_x·a_j)
    let unit_b = m
        .left
        .unit
        .iter()
        .position(|c| !c.is_zero())
        .expect("unit");
    for x in 0..dm {
        for j in 0..da {
            let sign = GaussianScalar::sign_pow(m.parity[x] ^ m.right.parity[j]);
            let ma = m.right_mult(&m.right.basis_vec(j)).col_vec(x);
            for (k, coef) in ma.iter().enumerate() {
                if !coef.is_zero() {
                    // (−1)^F ⊗ m_k: the (−1)^F symbol is the unit of B in B_{(−1)^F}
                    raw[(unit_b * dm + k, x * da + j)] = &sign * coef;
                }
            }
        }
    }
    let matrix = &(&cod.proj * &raw) * &dom.section;
    let map = BimoduleMap {
        source: dom.module.clone(),
        target: cod.module.clone(),
        matrix,
    };
    Ok((map, dom, cod))
}

/// `ev_A`: the algebra A as a (ground, A⊗A^op)-bimodule with right action
/// `x · (a⊗b^op) = (−1)^{|b|(|x|+|a|)} b x a`.
pub fn ev_bimodule(a: &Superalgebra) -> Result<Bimodule> {
    let aop = a.opposite();
    let t = a.tensor(&aop)?;
    let d = a.dim();
    let ground = Superalgebra::ground(a.field);
    let mut right_act = vec![GaussianScalar::zero(); d * t.dim() * d];
    for x in 0..d {
        for ai in 0..d {
            for bi in 0..d {
                let sign =
                    GaussianScalar::sign_pow(a.parity[bi] & (a.parity[x] ^ a.parity[ai]));
                let bxa = a.mul_vec(
                    &a.mul_vec(&a.basis_vec(bi), &a.basis_vec(x)),
                    &a.basis_vec(ai),
                );
                for (k, coef) in bxa.iter().enumerate() {
                    if !coef.is_zero() {
                        right_act[(x * t.dim() + (ai * d + bi)) * d + k] = &sign * coef;
                    }
                }
            }
        }
    }
    let mut left_act = vec![GaussianScalar::zero(); d * d];
    for x in 0..d {
        left_act[x * d + x] = GaussianScalar::one();
    }
    Ok(Bimodule {
        left: ground,
        right: t,
        parity: a.parity.clone(),
        left_act,
        right_act,
        names: a.names.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::salg::{self, FieldTag};

    fn cc1() -> Superalgebra {
        salg::complex_clifford(1).unwrap()
    }

    #[test]
    fn regular_and_induced_bimodules_are_valid() {
        for alg in [
            Superalgebra::ground(FieldTag::Complex),
            cc1(),
            salg::matrix_superalgebra(1, 1, FieldTag::Complex),
            salg::clifford(1, 1, FieldTag::Real).unwrap(),
        ] {
            assert!(Bimodule::regular(&alg).check().is_valid());
            let ss = Bimodule::spin_statistics(&alg);
            assert!(ss.check().is_valid());
            assert!(ss.parity_shift().check().is_valid());
            assert!(ss.op().check().is_valid());
            assert!(ss.conj().check().is_valid());
        }
    }

    #[test]
    fn induced_of_identity_is_regular() {
        let a = cc1();
        let id_hom = AlgebraHom {
            source: a.clone(),
            target: a.clone(),
            matrix: ExactMatrix::identity(a.dim()),
        };
        let ind = Bimodule::induced(&id_hom);
        assert_eq!(ind.left_act, Bimodule::regular(&a).left_act);
        assert_eq!(ind.right_act, Bimodule::regular(&a).right_act);
    }

    #[test]
    fn spin_statistics_relation_holds() {
        // a(−1)^F = (−1)^{|a|}(−1)^F a: right action of e vs left action of e
        let a = cc1();
        let ss = Bimodule::spin_statistics(&a);
        let e = a.basis_vec(1);
        let one_f = ss.basis_vec(0); // the symbol (−1)^F
        let left = ss.left_mult(&e).apply(&one_f);
        let right = ss.right_mult(&e).apply(&one_f);
        // e·(−1)^F = e(−1)^F, (−1)^F·e = (−1)^{|e|} e(−1)^F = −e(−1)^F
        assert_eq!(left, ss.basis_vec(1));
        let negated: Vec<GaussianScalar> = right.iter().map(|c| -c.clone()).collect();
        assert_eq!(left, negated);
    }

    #[test]
    fn unit_bimodule_tensor_is_identity() {
        let a = salg::clifford(1, 1, FieldTag::Real).unwrap();
        let m = Bimodule::spin_statistics(&a);
        let t = tensor_over(&Bimodule::regular(&a), &m).unwrap();
        assert_eq!(t.module.dim(), m.dim());
        assert!(t.module.check().is_valid());
        // A ⊗_A M ≅ M via the multiplication map a⊗m ↦ a·m
        let dm = m.dim();
        let da = a.dim();
        let raw = ExactMatrix::from_fn(dm, da * dm, |out, r| {
            let (i, j) = (r / dm, r % dm);
            m.left_mult(&a.basis_vec(i)).col_vec(j)[out].clone()
        });
        let map = BimoduleMap {
            source: t.module.clone(),
            target: m.clone(),
            matrix: &raw * &t.section,
        };
        assert!(map.check().is_valid());
        assert!(map.is_iso());
    }

    #[test]
    fn spin_statistics_squares_to_identity_with_the_paper_sign() {
        // A_{(−1)^F} ⊗_A A_{(−1)^F} → A, a₁(−1)^F ⊗ a₂(−1)^F ↦ (−1)^{|a₂|} a₁a₂
        let a = cc1();
        let ss = Bimodule::spin_statistics(&a);
        let t = tensor_over(&ss, &ss).unwrap();
        let d = a.dim();
        let raw = ExactMatrix::from_fn(d, d * d, |out, r| {
            let (i, j) = (r / d, r % d);
            let sign = GaussianScalar::sign_pow(a.parity[j]);
            &sign * &a.mul_vec(&a.basis_vec(i), &a.basis_vec(j))[out]
        });
        let map = BimoduleMap {
            source: t.module.clone(),
            target: Bimodule::regular(&a),
            matrix: &raw * &t.section,
        };
        assert!(map.check().is_valid(), "{}", map.check());
        assert!(map.is_iso());
    }

    #[test]
    fn hom_even_dimensions() {
        let m2 = salg::matrix_superalgebra(2, 0, FieldTag::Complex);
        let reg = Bimodule::regular(&m2);
        assert_eq!(hom_even(&reg, &reg).unwrap().len(), 1);

        let c = Superalgebra::ground(FieldTag::Complex);
        let regc = Bimodule::regular(&c);
        assert!(hom_even(&regc, &regc.parity_shift()).unwrap().is_empty());

        let ss = Bimodule::spin_statistics(&cc1());
        assert_eq!(hom_even(&ss, &ss).unwrap().len(), 1);
    }

    #[test]
    fn right_adjoint_satisfies_snakes() {
        // M = A over A: adjoint is A, ev is multiplication
        let a = cc1();
        let adj = right_adjoint(&Bimodule::regular(&a)).unwrap();
        assert_eq!(adj.adjoint.dim(), a.dim());
        assert!(adj.ev.check().is_valid());
        assert!(adj.coev.check().is_valid());

        // M = C^{1|1} over (C, C)
        let c = Superalgebra::ground(FieldTag::Complex);
        let reg = Bimodule::regular(&c);
        let m = Bimodule {
            left: c.clone(),
            right: c.clone(),
            parity: vec![0, 1],
            left_act: {
                let mut v = vec![GaussianScalar::zero(); 4];
                v[0] = GaussianScalar::one();
                v[3] = GaussianScalar::one();
                v
            },
            right_act: {
                let mut v = vec![GaussianScalar::zero(); 4];
                v[0] = GaussianScalar::one();
                v[3] = GaussianScalar::one();
                v
            },
            names: vec!["v0".into(), "v1".into()],
        };
        assert!(m.check().is_valid());
        let adj = right_adjoint(&m).unwrap();
        assert_eq!(adj.adjoint.dim(), 2);
        assert!(adj.ev.check().is_valid());
        assert!(adj.coev.check().is_valid());
        let _ = reg;

        // non-projective: the 1-dim module over F[x]/x² with x acting by 0
        let dn = salg::dual_numbers(FieldTag::Complex);
        let one = GaussianScalar::one();
        let m = Bimodule {
            left: dn.clone(),
            right: Superalgebra::ground(FieldTag::Complex),
            parity: vec![0],
            left_act: vec![one.clone(), GaussianScalar::zero()],
            right_act: vec![one.clone()],
            names: vec!["v".into()],
        };
        assert!(m.check().is_valid());
        assert!(right_adjoint(&m).is_err(), "radical kills the coevaluation");
    }

    #[test]
    fn invertibility_verdicts() {
        let a = cc1();
        let ss = Bimodule::spin_statistics(&a);
        assert!(is_invertible(&ss).unwrap().is_some(), "A_{{(−1)^F}} invertible");

        let pi = Bimodule::regular(&a).parity_shift();
        assert!(is_invertible(&pi).unwrap().is_some(), "Πℂl₁ invertible");

        // ℂ⊕ℂ over ℂ: rank 2 over a 1-dim algebra, ev cannot be iso
        let c = Superalgebra::ground(FieldTag::Complex);
        let m = Bimodule {
            left: c.clone(),
            right: c.clone(),
            parity: vec![0, 0],
            left_act: {
                let mut v = vec![GaussianScalar::zero(); 4];
                v[0] = GaussianScalar::one();
                v[3] = GaussianScalar::one();
                v
            },
            right_act: {
                let mut v = vec![GaussianScalar::zero(); 4];
                v[0] = GaussianScalar::one();
                v[3] = GaussianScalar::one();
                v
            },
            names: vec!["u".into(), "v".into()],
        };
        assert!(is_invertible(&m).unwrap().is_none());
    }

    #[test]
    fn serre_of_the_ground_field_is_trivial() {
        let c = Superalgebra::ground(FieldTag::Complex);
        let s = serre(&c);
        assert!(s.check().is_valid());
        let reg = Bimodule::regular(&c);
        let maps = hom_even(&s, &reg).unwrap();
        assert_eq!(maps.len(), 1);
    }

    #[test]
    fn serre_naturality_identity_case() {
        // M = A: S is the identity under B*⊗A ≅ A* ≅ A⊗A*
        let a = cc1();
        let m = Bimodule::regular(&a);
        let ctx = is_invertible(&m).unwrap().unwrap();
        let unit = ctx.unit_decomposition().unwrap();
        let (s, dom, _cod) = serre_naturality(&m, &ctx, &unit).unwrap();
        assert!(s.check().is_valid(), "{}", s.check());
        assert!(s.is_iso());
        // oracle agrees
        let (o, _, _) = serre_naturality_oracle(&m, &ctx).unwrap();
        assert_eq!(s.matrix, o.matrix);
        let _ = dom;
    }

    #[test]
    fn serre_naturality_for_parity_bimodule_gives_the_sign() {
        // S sends (−1)^F ⊗ f ⊗ (−1)^F ↦ (−1)^{|f|} f
        let a = cc1();
        let m = Bimodule::spin_statistics(&a);
        let ctx = is_invertible(&m).unwrap().unwrap();
        let unit = ctx.unit_decomposition().unwrap();
        let (s, dom, cod) = serre_naturality(&m, &ctx, &unit).unwrap();
        assert!(s.check().is_valid(), "{}", s.check());
        let (o, _, _) = serre_naturality_oracle(&m, &ctx).unwrap();
        assert_eq!(s.matrix, o.matrix);
        // check the sign rule on raw generators: f⊗(−1)^F ↦ ±(−1)^F⊗f means
        // raw dom (δ_i, unit-symbol) maps to (−1)^{p_i} (unit-symbol, δ_i)
        let d = a.dim();
        for i in 0..d {
            let mut raw_dom = vec![GaussianScalar::zero(); d * d];
            raw_dom[i * d] = GaussianScalar::one(); // δ_i ⊗ 1(−1)^F
            let q = dom.proj.apply(&raw_dom);
            let img = s.matrix.apply(&q);
            let raw_img = cod.section.apply(&img);
            let mut expected = vec![GaussianScalar::zero(); d * d];
            expected[i] = GaussianScalar::sign_pow(a.parity[i]); // ± 1(−1)^F ⊗ δ_i
            let qe = cod.proj.apply(&expected);
            let qi = cod.proj.apply(&raw_img);
            assert_eq!(qi, qe, "sign rule fails at basis functional {i}");
        }
    }

    #[test]
    fn serre_naturality_is_independent_of_unit_decomposition() {
        let a = salg::matrix_superalgebra(1, 1, FieldTag::Complex);
        let m = Bimodule::spin_statistics(&a);
        let ctx = is_invertible(&m).unwrap().unwrap();
        let unit = ctx.unit_decomposition().unwrap();
        let (s1, _, _) = serre_naturality(&m, &ctx, &unit).unwrap();
        // perturb the decomposition by a kernel vector of the ev system
        let ev_raw = &ctx.adjunction.ev.matrix * &ctx.adjunction.m_n.proj;
        let kernel = ev_raw.kernel();
        assert!(!kernel.is_empty());
        let mut unit2 = unit.clone();
        for (i, k) in kernel[0].iter().enumerate() {
            unit2[i] = &unit2[i] + k;
        }
        let (s2, _, _) = serre_naturality(&m, &ctx, &unit2).unwrap();
        assert_eq!(s1.matrix, s2.matrix);
    }

    #[test]
    fn serre_respects_two_isomorphisms() {
        // naturality in 2-morphisms: for an invertible ψ: M → M',
        // (ψ⊗id)∘S_M = S_{M'}∘(id⊗ψ); with M' = A_{(−1)^F}⊗A_{(−1)^F} ≅ A this
        // is the compatibility of S with the Morita composition data.
        let a = cc1();
        let ss = Bimodule::spin_statistics(&a);
        let t = tensor_over(&ss, &ss).unwrap();
        let d = a.dim();
        let raw = ExactMatrix::from_fn(d, d * d, |out, r| {
            let (i, j) = (r / d, r % d);
            let sign = GaussianScalar::sign_pow(a.parity[j]);
            &sign * &a.mul_vec(&a.basis_vec(i), &a.basis_vec(j))[out]
        });
        let psi = BimoduleMap {
            source: t.module.clone(),
            target: Bimodule::regular(&a),
            matrix: &raw * &t.section,
        };
        assert!(psi.is_iso());
        let m = &t.module;
        let mp = Bimodule::regular(&a);
        let ctx_m = is_invertible(m).unwrap().unwrap();
        let ctx_mp = is_invertible(&mp).unwrap().unwrap();
        let (s_m, dom_m, cod_m) =
            serre_naturality(m, &ctx_m, &ctx_m.unit_decomposition().unwrap()).unwrap();
        let (s_mp, dom_mp, cod_mp) =
            serre_naturality(&mp, &ctx_mp, &ctx_mp.unit_decomposition().unwrap()).unwrap();
        // raw id⊗ψ on A*⊗M and ψ⊗id on M⊗A*
        let dm = m.dim();
        let dmp = mp.dim();
        let id_psi = ExactMatrix::from_fn(d * dmp, d * dm, |rp, r| {
            let (f1, x1) = (rp / dmp, rp % dmp);
            let (f0, x0) = (r / dm, r % dm);
            if f1 == f0 {
                psi.matrix[(x1, x0)].clone()
            } else {
                GaussianScalar::zero()
            }
        });
        let psi_id = ExactMatrix::from_fn(dmp * d, dm * d, |rp, r| {
            let (x1, f1) = (rp / d, rp % d);
            let (x0, f0) = (r / d, r % d);
            if f1 == f0 {
                psi.matrix[(x1, x0)].clone()
            } else {
                GaussianScalar::zero()
            }
        });
        let left = &(&cod_mp.proj * &psi_id) * &(&cod_m.section * &s_m.matrix);
        let right = &s_mp.matrix * &(&dom_mp.proj * &(&id_psi * &dom_m.section));
        assert_eq!(left, right, "Serre naturality transports along ψ");
    }

    #[test]
    fn parity_naturality_is_an_iso_and_natural() {
        let a = cc1();
        for m in [
            Bimodule::regular(&a),
            Bimodule::spin_statistics(&a),
            Bimodule::regular(&a).parity_shift(),
        ] {
            let (map, _, _) = parity_naturality(&m).unwrap();
            assert!(map.check().is_valid(), "{}", map.check());
            assert!(map.is_iso());
        }
    }

    #[test]
    fn ev_bimodule_is_valid() {
        let a = cc1();
        let ev = ev_bimodule(&a).unwrap();
        assert!(ev.check().is_valid(), "{}", ev.check());
    }
}
