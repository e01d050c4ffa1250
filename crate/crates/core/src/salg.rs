//! Finite-dimensional superalgebras presented by graded structure constants
//! over ℚ(i), with the Koszul sign conventions throughout: the braiding
//! transposing two odd symbols introduces a sign (−1)^{|a||b|}.
//!
//! Real algebras share the representation, tagged by `FieldTag::Real`: their
//! structure constants are rational and a tracked imaginary unit, when one
//! exists, is an ordinary even element.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactlin::{ExactMatrix, GaussianScalar};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldTag {
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "R")]
    Real,
}

/// Superalgebra by structure constants: `e_i e_j = Σ_k c[i][j][k] e_k`.
/// Equality compares the structural data and ignores display names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Superalgebra {
    pub field: FieldTag,
    pub parity: Vec<u8>,
    pub unit: Vec<GaussianScalar>,
    /// Flattened `c[i][j][k]` at index `(i*dim + j)*dim + k`.
    pub mult: Vec<GaussianScalar>,
    pub names: Vec<String>,
}

impl PartialEq for Superalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.parity == other.parity
            && self.unit == other.unit
            && self.mult == other.mult
    }
}

impl Eq for Superalgebra {}

/// An even unital multiplicative map between superalgebras.
#[derive(Debug, Clone)]
pub struct AlgebraHom {
    pub source: Superalgebra,
    pub target: Superalgebra,
    pub matrix: ExactMatrix,
}

impl Superalgebra {
    pub fn new(
        field: FieldTag,
        parity: Vec<u8>,
        unit: Vec<GaussianScalar>,
        mult: Vec<GaussianScalar>,
        names: Vec<String>,
    ) -> Self {
        Superalgebra {
            field,
            parity,
            unit,
            mult,
            names,
        }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &GaussianScalar {
        &self.mult[(i * self.dim() + j) * self.dim() + k]
    }

    fn c_mut(&mut self, i: usize, j: usize, k: usize) -> &mut GaussianScalar {
        let d = self.dim();
        &mut self.mult[(i * d + j) * d + k]
    }

    /// Ground field as a superalgebra.
    pub fn ground(field: FieldTag) -> Self {
        Superalgebra::new(
            field,
            vec![0],
            vec![GaussianScalar::one()],
            vec![GaussianScalar::one()],
            vec!["1".into()],
        )
    }

    /// Product of two coefficient vectors.
    pub fn mul_vec(&self, a: &[GaussianScalar], b: &[GaussianScalar]) -> Vec<GaussianScalar> {
        let d = self.dim();
        let mut out = vec![GaussianScalar::zero(); d];
        for i in 0..d {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for k in 0..d {
                    if !self.c(i, j, k).is_zero() {
                        out[k] += &(&ab * self.c(i, j, k));
                    }
                }
            }
        }
        out
    }

    /// Left multiplication by `a` as a matrix on coordinates.
    pub fn left_mult(&self, a: &[GaussianScalar]) -> ExactMatrix {
        let d = self.dim();
        ExactMatrix::from_fn(d, d, |k, j| {
            let mut acc = GaussianScalar::zero();
            for i in 0..d {
                if !a[i].is_zero() {
                    acc += &(&a[i] * self.c(i, j, k));
                }
            }
            acc
        })
    }

    /// Right multiplication by `a` as a matrix on coordinates.
    pub fn right_mult(&self, a: &[GaussianScalar]) -> ExactMatrix {
        let d = self.dim();
        ExactMatrix::from_fn(d, d, |k, i| {
            let mut acc = GaussianScalar::zero();
            for j in 0..d {
                if !a[j].is_zero() {
                    acc += &(&a[j] * self.c(i, j, k));
                }
            }
            acc
        })
    }

    pub fn basis_vec(&self, i: usize) -> Vec<GaussianScalar> {
        let mut v = vec![GaussianScalar::zero(); self.dim()];
        v[i] = GaussianScalar::one();
        v
    }

    /// Parity of a homogeneous coefficient vector, `None` for mixed or zero.
    pub fn parity_of(&self, v: &[GaussianScalar]) -> Option<u8> {
        let mut p = None;
        for (i, coeff) in v.iter().enumerate() {
            if !coeff.is_zero() {
                match p {
                    None => p = Some(self.parity[i]),
                    Some(q) if q != self.parity[i] => return None,
                    _ => {}
                }
            }
        }
        p
    }

    pub fn is_invertible(&self, a: &[GaussianScalar]) -> bool {
        self.left_mult(a).inverse().is_some()
    }

    pub fn inverse_of(&self, a: &[GaussianScalar]) -> Option<Vec<GaussianScalar>> {
        self.left_mult(a).inverse().map(|m| m.apply(&self.unit))
    }

    /// Validation report: shape, reality, grading, unit, associativity.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let d = self.dim();
        if self.mult.len() != d * d * d || self.unit.len() != d || self.names.len() != d {
            report.fail("table-shape", "structure constant tensor has wrong shape");
            return report;
        }
        if self.field == FieldTag::Real {
            if self.mult.iter().any(|c| !c.is_real())
                || self.unit.iter().any(|c| !c.is_real())
            {
                report.fail("reality", "real algebra with non-real constants");
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !self.c(i, j, k).is_zero()
                        && self.parity[k] != self.parity[i] ^ self.parity[j]
                    {
                        report.fail(
                            "grading",
                            format!("c[{}][{}][{}] breaks the grading", i, j, k),
                        );
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vec(i);
            if self.mul_vec(&self.unit, &e) != e || self.mul_vec(&e, &self.unit) != e {
                report.fail("unit", format!("unit fails on basis element {i}"));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_vec(&self.basis_vec(i), &self.basis_vec(j));
                for k in 0..d {
                    let left = self.mul_vec(&ij, &self.basis_vec(k));
                    let jk = self.mul_vec(&self.basis_vec(j), &self.basis_vec(k));
                    let right = self.mul_vec(&self.basis_vec(i), &jk);
                    if left != right {
                        report.fail("associativity", format!("({i}·{j})·{k} ≠ {i}·({j}·{k})"));
                    }
                }
            }
        }
        report
    }

    /// Opposite superalgebra: `a^op b^op = (−1)^{|a||b|} (ba)^op`.
    pub fn opposite(&self) -> Superalgebra {
        let d = self.dim();
        let mut out = self.clone();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let sign = GaussianScalar::sign_pow(self.parity[i] & self.parity[j]);
                    *out.c_mut(i, j, k) = &sign * self.c(j, i, k);
                }
            }
        }
        out
    }

    /// Complex conjugate algebra: constants conjugated entrywise.
    pub fn conjugate(&self) -> Superalgebra {
        let mut out = self.clone();
        for c in &mut out.mult {
            *c = c.conj();
        }
        for c in &mut out.unit {
            *c = c.conj();
        }
        out
    }

    /// Graded tensor product with the Koszul sign:
    /// `(a₁⊗b₁)(a₂⊗b₂) = (−1)^{|b₁||a₂|} a₁a₂ ⊗ b₁b₂`.
    pub fn tensor(&self, other: &Superalgebra) -> crate::Result<Superalgebra> {
        if self.field != other.field {
            return Err(crate::FtftError::Structural(
                "tensor of algebras over different fields".into(),
            ));
        }
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let idx = |i: usize, j: usize| i * db + j;
        let mut parity = vec![0u8; d];
        let mut names = vec![String::new(); d];
        for i in 0..da {
            for j in 0..db {
                parity[idx(i, j)] = self.parity[i] ^ other.parity[j];
                names[idx(i, j)] = format!("{}⊗{}", self.names[i], other.names[j]);
            }
        }
        let mut mult = vec![GaussianScalar::zero(); d * d * d];
        for i1 in 0..da {
            for j1 in 0..db {
                for i2 in 0..da {
                    for j2 in 0..db {
                        let sign = GaussianScalar::sign_pow(other.parity[j1] & self.parity[i2]);
                        for k in 0..da {
                            if self.c(i1, i2, k).is_zero() {
                                continue;
                            }
                            for l in 0..db {
                                if other.c(j1, j2, l).is_zero() {
                                    continue;
                                }
                                let v = &(&sign * self.c(i1, i2, k)) * other.c(j1, j2, l);
                                mult[(idx(i1, j1) * d + idx(i2, j2)) * d + idx(k, l)] = v;
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![GaussianScalar::zero(); d];
        for i in 0..da {
            for j in 0..db {
                unit[idx(i, j)] = &self.unit[i] * &other.unit[j];
            }
        }
        Ok(Superalgebra::new(self.field, parity, unit, mult, names))
    }

    /// Direct sum of algebras (block constants, unit = (1,1)).
    pub fn direct_sum(&self, other: &Superalgebra) -> Superalgebra {
        assert_eq!(self.field, other.field);
        let (da, db) = (self.dim(), other.dim());
        let d = da + db;
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&other.parity);
        let mut names: Vec<String> = self.names.iter().map(|n| format!("{n}⊕0")).collect();
        names.extend(other.names.iter().map(|n| format!("0⊕{n}")));
        let mut mult = vec![GaussianScalar::zero(); d * d * d];
        for i in 0..da {
            for j in 0..da {
                for k in 0..da {
                    mult[(i * d + j) * d + k] = self.c(i, j, k).clone();
                }
            }
        }
        for i in 0..db {
            for j in 0..db {
                for k in 0..db {
                    mult[((da + i) * d + da + j) * d + da + k] = other.c(i, j, k).clone();
                }
            }
        }
        let mut unit = self.unit.clone();
        unit.extend_from_slice(&other.unit);
        Superalgebra::new(self.field, parity, unit, mult, names)
    }

    /// View a complex algebra as a real one of twice the dimension, with the
    /// imaginary unit becoming the even element `I·1`.
    pub fn realify(&self) -> Superalgebra {
        assert_eq!(self.field, FieldTag::Complex);
        let d = self.dim();
        let n = 2 * d;
        // index 2i ↦ e_i, 2i+1 ↦ I·e_i
        let mut parity = vec![0u8; n];
        let mut names = vec![String::new(); n];
        for i in 0..d {
            parity[2 * i] = self.parity[i];
            parity[2 * i + 1] = self.parity[i];
            names[2 * i] = self.names[i].clone();
            names[2 * i + 1] = format!("I{}", self.names[i]);
        }
        let mut mult = vec![GaussianScalar::zero(); n * n * n];
        for i in 0..d {
            for j in 0..d {
                for (si, sj, ipow) in [(0, 0, 0u8), (0, 1, 1), (1, 0, 1), (1, 1, 2)] {
                    for k in 0..d {
                        let mut v = self.c(i, j, k).clone();
                        if ipow == 1 {
                            v = &v * &GaussianScalar::i();
                        } else if ipow == 2 {
                            v = -v;
                        }
                        // v = re + im·I: split over the real basis
                        let re = GaussianScalar::new(v.re.clone(), num_traits::Zero::zero());
                        let im = GaussianScalar::new(v.im.clone(), num_traits::Zero::zero());
                        let (a, b) = (2 * i + si, 2 * j + sj);
                        if !re.is_zero() {
                            mult[(a * n + b) * n + 2 * k] = re;
                        }
                        if !im.is_zero() {
                            mult[(a * n + b) * n + 2 * k + 1] = im;
                        }
                    }
                }
            }
        }
        let mut unit = vec![GaussianScalar::zero(); n];
        for i in 0..d {
            // complex units stay rational in all fixtures; split re/im anyway
            unit[2 * i] = GaussianScalar::new(self.unit[i].re.clone(), num_traits::Zero::zero());
            unit[2 * i + 1] =
                GaussianScalar::new(self.unit[i].im.clone(), num_traits::Zero::zero());
        }
        Superalgebra::new(FieldTag::Real, parity, unit, mult, names)
    }

    /// The grading automorphism `(−1)^F` as an algebra homomorphism.
    pub fn parity_automorphism(&self) -> AlgebraHom {
        let d = self.dim();
        let matrix = ExactMatrix::from_fn(d, d, |i, j| {
            if i == j {
                GaussianScalar::sign_pow(self.parity[i])
            } else {
                GaussianScalar::zero()
            }
        });
        AlgebraHom {
            source: self.clone(),
            target: self.clone(),
            matrix,
        }
    }

    /// The ℤ₂^c-graded extension `A[x]/(x² − 1, x b = (−1)^{|b|} b x)` with x
    /// even; basis `{e_i, e_i x}`.
    pub fn parity_extension(&self) -> Superalgebra {
        let d = self.dim();
        let n = 2 * d;
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&self.parity);
        let mut names: Vec<String> = self.names.clone();
        names.extend(self.names.iter().map(|s| format!("{s}x")));
        let mut mult = vec![GaussianScalar::zero(); n * n * n];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.c(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    // e_i · e_j
                    mult[(i * n + j) * n + k] = c.clone();
                    // e_i · (e_j x) = (e_i e_j) x
                    mult[(i * n + (d + j)) * n + d + k] = c.clone();
                    // (e_i x) · e_j = (−1)^{|e_j|} (e_i e_j) x
                    let sign = GaussianScalar::sign_pow(self.parity[j]);
                    mult[((d + i) * n + j) * n + d + k] = &sign * c;
                    // (e_i x)(e_j x) = (−1)^{|e_j|} e_i e_j
                    mult[((d + i) * n + (d + j)) * n + k] = &sign * c;
                }
            }
        }
        let mut unit = self.unit.clone();
        unit.extend(vec![GaussianScalar::zero(); d]);
        Superalgebra::new(self.field, parity, unit, mult, names)
    }

    /// Gram matrix of the trace form `(a,b) ↦ tr(L_a L_b)` of the underlying
    /// ungraded algebra.
    pub fn trace_form(&self) -> ExactMatrix {
        let d = self.dim();
        let lefts: Vec<ExactMatrix> = (0..d).map(|i| self.left_mult(&self.basis_vec(i))).collect();
        ExactMatrix::from_fn(d, d, |i, j| {
            let prod = &lefts[i] * &lefts[j];
            (0..d).fold(GaussianScalar::zero(), |acc, k| acc + prod[(k, k)].clone())
        })
    }

    /// Char-0 criterion: semisimple iff the trace form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        self.trace_form().rank() == self.dim()
    }

    /// Independent route to the radical: the kernel of the trace form,
    /// verified to be a nilpotent two-sided ideal. Returns the verified
    /// radical basis; semisimplicity is equivalent to it being empty.
    pub fn radical_oracle(&self) -> Option<Vec<Vec<GaussianScalar>>> {
        let kernel = self.trace_form().kernel();
        if kernel.is_empty() {
            return Some(vec![]);
        }
        // verify two-sided ideal: e_i·v and v·e_i stay in the span
        let d = self.dim();
        let span = ExactMatrix::from_fn(d, kernel.len(), |i, j| kernel[j][i].clone());
        let in_span = |v: &[GaussianScalar]| span.solve(v).ok().flatten().is_some();
        for v in &kernel {
            for i in 0..d {
                let e = self.basis_vec(i);
                if !in_span(&self.mul_vec(&e, v)) || !in_span(&self.mul_vec(v, &e)) {
                    return None;
                }
            }
        }
        // verify nilpotency by iterated products
        let mut layer: Vec<Vec<GaussianScalar>> = kernel.clone();
        for _ in 0..=d {
            let mut next: Vec<Vec<GaussianScalar>> = Vec::new();
            for x in &layer {
                for y in &kernel {
                    let p = self.mul_vec(x, y);
                    if p.iter().any(|c| !c.is_zero()) {
                        next.push(p);
                    }
                }
            }
            if next.is_empty() {
                return Some(kernel);
            }
            layer = next;
        }
        None
    }

    /// Dimension of the (ungraded) center.
    pub fn center_dim(&self) -> usize {
        let d = self.dim();
        let mut rows = Vec::new();
        for i in 0..d {
            let e = self.basis_vec(i);
            let diff = &self.left_mult(&e) - &self.right_mult(&e);
            for r in 0..d {
                rows.push(diff.row(r).to_vec());
            }
        }
        let m = ExactMatrix::from_rows(rows);
        m.kernel().len()
    }

    /// Dimension of the supercenter: homogeneous x with
    /// `x e = (−1)^{|x||e|} e x`, summed over the two parities of x.
    pub fn supercenter_dim(&self) -> usize {
        let d = self.dim();
        let mut total = 0;
        for xp in [0u8, 1u8] {
            let mut rows = Vec::new();
            for i in 0..d {
                let e = self.basis_vec(i);
                let sign = GaussianScalar::sign_pow(xp & self.parity[i]);
                let diff = &self.right_mult(&e) - &self.left_mult(&e).scale(&sign);
                for r in 0..d {
                    rows.push(diff.row(r).to_vec());
                }
            }
            // restrict to vectors supported on parity xp
            for i in 0..d {
                if self.parity[i] != xp {
                    let mut row = vec![GaussianScalar::zero(); d];
                    row[i] = GaussianScalar::one();
                    rows.push(row);
                }
            }
            total += ExactMatrix::from_rows(rows).kernel().len();
        }
        total
    }

    /// Exhaustive homogeneous-invertibility test over a finite spanning set:
    /// every nonzero element with coefficients in {0, ±1} (plus {±i} over ℂ)
    /// supported in one graded component must be invertible, and each graded
    /// component must contain an invertible element (so the determinant
    /// polynomial of left multiplication is not identically zero).
    pub fn is_superdivision(&self) -> bool {
        let d = self.dim();
        for p in [0u8, 1u8] {
            let comp: Vec<usize> = (0..d).filter(|&i| self.parity[i] == p).collect();
            if comp.is_empty() {
                continue;
            }
            let coeffs: Vec<GaussianScalar> = if self.field == FieldTag::Complex && comp.len() <= 4
            {
                vec![
                    GaussianScalar::zero(),
                    GaussianScalar::one(),
                    -GaussianScalar::one(),
                    GaussianScalar::i(),
                    -GaussianScalar::i(),
                ]
            } else {
                vec![
                    GaussianScalar::zero(),
                    GaussianScalar::one(),
                    -GaussianScalar::one(),
                ]
            };
            let m = coeffs.len();
            let count = m.pow(comp.len() as u32);
            let mut saw_invertible = false;
            for mask in 0..count {
                let mut v = vec![GaussianScalar::zero(); d];
                let mut rem = mask;
                let mut nonzero = false;
                for &idx in &comp {
                    let c = &coeffs[rem % m];
                    rem /= m;
                    if !c.is_zero() {
                        nonzero = true;
                        v[idx] = c.clone();
                    }
                }
                if !nonzero {
                    continue;
                }
                if self.is_invertible(&v) {
                    saw_invertible = true;
                } else {
                    return false;
                }
            }
            if !saw_invertible {
                return false;
            }
        }
        true
    }

    pub fn fingerprint(&self) -> AlgebraFingerprint {
        let gram = self.trace_form();
        let signature = if self.field == FieldTag::Real {
            Some(gram.symmetric_signature())
        } else {
            None
        };
        AlgebraFingerprint {
            dim_even: self.parity.iter().filter(|&&p| p == 0).count(),
            dim_odd: self.parity.iter().filter(|&&p| p == 1).count(),
            center_dim: self.center_dim(),
            supercenter_dim: self.supercenter_dim(),
            semisimple: self.is_semisimple(),
            trace_rank: gram.rank(),
            trace_signature: signature,
        }
    }

    /// True iff `matrix` is an even unital multiplicative bijection onto
    /// `other` (same field).
    pub fn iso_witness_check(&self, other: &Superalgebra, matrix: &ExactMatrix) -> bool {
        if self.field != other.field
            || matrix.rows() != other.dim()
            || matrix.cols() != self.dim()
            || matrix.inverse().is_none()
        {
            return false;
        }
        // even
        for j in 0..self.dim() {
            let img = matrix.col_vec(j);
            match other.parity_of(&img) {
                Some(p) if p == self.parity[j] => {}
                None if img.iter().all(GaussianScalar::is_zero) => return false,
                _ => return false,
            }
        }
        if matrix.apply(&self.unit) != other.unit {
            return false;
        }
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let lhs = matrix.apply(&self.mul_vec(&self.basis_vec(i), &self.basis_vec(j)));
                let rhs = other.mul_vec(&matrix.col_vec(i), &matrix.col_vec(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

/// Separating invariants for isomorphism refutation. Isomorphism is only ever
/// *established* by an explicit witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFingerprint {
    pub dim_even: usize,
    pub dim_odd: usize,
    pub center_dim: usize,
    pub supercenter_dim: usize,
    pub semisimple: bool,
    pub trace_rank: usize,
    /// Exact signature of the rational trace form (real algebras only).
    pub trace_signature: Option<(usize, usize)>,
}

impl AlgebraHom {
    /// Even + unital + multiplicative (not necessarily bijective).
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let m = &self.matrix;
        if m.rows() != self.target.dim() || m.cols() != self.source.dim() {
            report.fail("table-shape", "hom matrix has wrong shape");
            return report;
        }
        for j in 0..self.source.dim() {
            let img = m.col_vec(j);
            if img.iter().any(|c| !c.is_zero())
                && self.target.parity_of(&img) != Some(self.source.parity[j])
            {
                report.fail("even", format!("basis element {j} maps across parity"));
            }
        }
        if m.apply(&self.source.unit) != self.target.unit {
            report.fail("unital", "unit not preserved");
        }
        for i in 0..self.source.dim() {
            for j in 0..self.source.dim() {
                let lhs = m.apply(
                    &self
                        .source
                        .mul_vec(&self.source.basis_vec(i), &self.source.basis_vec(j)),
                );
                let rhs = self.target.mul_vec(&m.col_vec(i), &m.col_vec(j));
                if lhs != rhs {
                    report.fail("multiplicative", format!("fails on basis pair ({i},{j})"));
                }
            }
        }
        report
    }

    pub fn compose(&self, inner: &AlgebraHom) -> AlgebraHom {
        AlgebraHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        }
    }
}

// ---------------------------------------------------------------------------
// constructors

/// Clifford algebra `Cl_{p,q}`: generators `e_1..e_{p+q}`, odd, anticommuting,
/// `e_i² = +1` for `i ≤ p` and `−1` for `i > p`. Monomial basis `e_S` indexed
/// by subsets in bitmask order.
pub fn clifford(p: usize, q: usize, field: FieldTag) -> crate::Result<Superalgebra> {
    let n = p + q;
    if n > 5 {
        return Err(crate::FtftError::BoundExceeded(format!(
            "clifford({p},{q}) exceeds the generator bound 5"
        )));
    }
    let dim = 1usize << n;
    let squares: Vec<i8> = (0..n).map(|i| if i < p { 1 } else { -1 }).collect();
    let monomial_mul = |s: u32, t: u32| -> (i8, u32) {
        let mut sign: i8 = 1;
        let mut acc = s;
        for bit in 0..n as u32 {
            if t & (1 << bit) == 0 {
                continue;
            }
            let higher = acc >> (bit + 1);
            if higher.count_ones() % 2 == 1 {
                sign = -sign;
            }
            if acc & (1 << bit) != 0 {
                sign *= squares[bit as usize];
                acc &= !(1 << bit);
            } else {
                acc |= 1 << bit;
            }
        }
        (sign, acc)
    };
    let mut mult = vec![GaussianScalar::zero(); dim * dim * dim];
    for s in 0..dim as u32 {
        for t in 0..dim as u32 {
            let (sign, r) = monomial_mul(s, t);
            mult[((s as usize) * dim + t as usize) * dim + r as usize] =
                GaussianScalar::from_int(sign as i64);
        }
    }
    let parity: Vec<u8> = (0..dim).map(|s| (s.count_ones() % 2) as u8).collect();
    let names: Vec<String> = (0..dim)
        .map(|s| {
            if s == 0 {
                "1".to_string()
            } else {
                let gens: String = (0..n)
                    .filter(|i| s & (1 << i) != 0)
                    .map(|i| (i + 1).to_string())
                    .collect();
                format!("e{gens}")
            }
        })
        .collect();
    let mut unit = vec![GaussianScalar::zero(); dim];
    unit[0] = GaussianScalar::one();
    Ok(Superalgebra::new(field, parity, unit, mult, names))
}

/// Complex Clifford algebra ℂl_n (all generators square to +1).
pub fn complex_clifford(n: usize) -> crate::Result<Superalgebra> {
    clifford(n, 0, FieldTag::Complex)
}

/// `End(F^{m|n})` with basis the matrix units `E_{ab}`, `|E_{ab}| = |a|+|b|`.
pub fn matrix_superalgebra(m: usize, n: usize, field: FieldTag) -> Superalgebra {
    let size = m + n;
    let dim = size * size;
    let par = |x: usize| u8::from(x >= m);
    let idx = |a: usize, b: usize| a * size + b;
    let mut mult = vec![GaussianScalar::zero(); dim * dim * dim];
    for a in 0..size {
        for b in 0..size {
            for c in 0..size {
                for e in 0..size {
                    if b == c {
                        mult[(idx(a, b) * dim + idx(c, e)) * dim + idx(a, e)] =
                            GaussianScalar::one();
                    }
                }
            }
        }
    }
    let parity: Vec<u8> = (0..size)
        .flat_map(|a| (0..size).map(move |b| (a, b)))
        .map(|(a, b)| par(a) ^ par(b))
        .collect();
    let names: Vec<String> = (0..size)
        .flat_map(|a| (0..size).map(move |b| format!("E{}{}", a + 1, b + 1)))
        .collect();
    let mut unit = vec![GaussianScalar::zero(); dim];
    for a in 0..size {
        unit[idx(a, a)] = GaussianScalar::one();
    }
    Superalgebra::new(field, parity, unit, mult, names)
}

/// The quaternions as a purely even real algebra.
pub fn quaternions() -> Superalgebra {
    let names = ["1", "i", "j", "k"];
    let table: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let mut mult = vec![GaussianScalar::zero(); 64];
    for i in 0..4 {
        for j in 0..4 {
            let (s, k) = table[i][j];
            mult[(i * 4 + j) * 4 + k] = GaussianScalar::from_int(s as i64);
        }
    }
    let mut unit = vec![GaussianScalar::zero(); 4];
    unit[0] = GaussianScalar::one();
    Superalgebra::new(
        FieldTag::Real,
        vec![0; 4],
        unit,
        mult,
        names.iter().map(|s| s.to_string()).collect(),
    )
}

/// `F[x]/x²` with even x: the minimal non-semisimple algebra.
pub fn dual_numbers(field: FieldTag) -> Superalgebra {
    // index (i*2+j)*2+k: 1·1 = 1, 1·x = x·1 = x, x·x = 0
    let mut m = vec![GaussianScalar::zero(); 8];
    m[0] = GaussianScalar::one();
    m[2 + 1] = GaussianScalar::one();
    m[2 * 2 + 1] = GaussianScalar::one();
    Superalgebra::new(
        field,
        vec![0, 0],
        vec![GaussianScalar::one(), GaussianScalar::zero()],
        m,
        vec!["1".into(), "x".into()],
    )
}

/// The four-case target of `parity_extension(Cl_{p,q})`, per `p−q mod 4`.
pub fn parity_extension_target(p: usize, q: usize) -> crate::Result<Superalgebra> {
    let cl = clifford(p, q, FieldTag::Real)?;
    Ok(match (4 + p % 4).wrapping_sub(q % 4) % 4 {
        0 => cl.direct_sum(&cl),
        1 => clifford(p, q + 1, FieldTag::Real)?,
        2 => complex_clifford(p + q)?.realify(),
        3 => clifford(p + 1, q, FieldTag::Real)?,
        _ => unreachable!(),
    })
}

/// Assemble a superalgebra from named generators and a relation oracle;
/// convenience for tests and fixtures that specify small algebras by tables.
pub fn from_table(
    field: FieldTag,
    names: &[&str],
    parity: &[u8],
    unit: usize,
    products: &BTreeMap<(usize, usize), Vec<(usize, GaussianScalar)>>,
) -> Superalgebra {
    let d = names.len();
    let mut mult = vec![GaussianScalar::zero(); d * d * d];
    for (&(i, j), terms) in products {
        for (k, c) in terms {
            mult[(i * d + j) * d + k] = c.clone();
        }
    }
    let mut u = vec![GaussianScalar::zero(); d];
    u[unit] = GaussianScalar::one();
    Superalgebra::new(
        field,
        parity.to_vec(),
        u,
        mult,
        names.iter().map(|s| s.to_string()).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one() -> GaussianScalar {
        GaussianScalar::one()
    }

    #[test]
    fn clifford_basics() {
        let ground = clifford(0, 0, FieldTag::Real).unwrap();
        assert_eq!(ground.dim(), 1);
        assert!(ground.check().is_valid());

        let cl10 = clifford(1, 0, FieldTag::Real).unwrap();
        assert_eq!(cl10.dim(), 2);
        assert_eq!(cl10.parity, vec![0, 1]);
        assert!(cl10.check().is_valid());
        // e² = 1
        let e = cl10.basis_vec(1);
        assert_eq!(cl10.mul_vec(&e, &e), cl10.unit);

        for (p, q) in [(1, 1), (2, 0), (0, 2), (2, 1), (3, 0)] {
            let cl = clifford(p, q, FieldTag::Real).unwrap();
            assert!(cl.check().is_valid(), "Cl({p},{q}) valid");
            assert_eq!(cl.dim(), 1 << (p + q));
            let even = cl.parity.iter().filter(|&&x| x == 0).count();
            assert_eq!(even, 1 << (p + q - 1));
        }
        assert!(clifford(6, 0, FieldTag::Real).is_err());
    }

    #[test]
    fn invalid_superalgebras_are_reported() {
        let mut bad = clifford(1, 0, FieldTag::Real).unwrap();
        // e·e = i breaks reality
        bad.mult[(1 * 2 + 1) * 2] = GaussianScalar::i();
        assert!(bad.check().names_clause("reality"));

        let mut no_unit = clifford(1, 0, FieldTag::Real).unwrap();
        no_unit.unit = vec![GaussianScalar::zero(); 2];
        assert!(no_unit.check().names_clause("unit"));

        let mut ungraded = clifford(1, 0, FieldTag::Real).unwrap();
        ungraded.mult[(1 * 2 + 1) * 2 + 1] = one(); // e·e gains an odd term
        assert!(ungraded.check().names_clause("grading"));
    }

    #[test]
    fn opposite_negates_odd_odd_cells() {
        let cl = complex_clifford(1).unwrap();
        let op = cl.opposite();
        // e^op e^op = (−1)^{1·1} e² = −1
        assert_eq!(*op.c(1, 1, 0), -one());
        assert_eq!(op.opposite(), cl);
        // commutative purely even algebra: unchanged
        let q = dual_numbers(FieldTag::Real);
        assert_eq!(q.opposite(), q);
    }

    #[test]
    fn conjugate_commutes_with_opposite() {
        let mut a = complex_clifford(1).unwrap();
        a.mult[(1 * 2 + 1) * 2] = GaussianScalar::i(); // e² = i (associativity irrelevant here)
        assert_eq!(a.conjugate().opposite(), a.opposite().conjugate());
        assert_eq!(*a.conjugate().c(1, 1, 0), -GaussianScalar::i());
        let real = clifford(1, 1, FieldTag::Complex).unwrap();
        assert_eq!(real.conjugate(), real);
        assert_eq!(a.conjugate().conjugate(), a);
    }

    #[test]
    fn tensor_products_of_cliffords() {
        // A ⊗ ground = A under the relabeling e_i⊗1 ↦ e_i
        let a = clifford(1, 1, FieldTag::Real).unwrap();
        let t = a.tensor(&Superalgebra::ground(FieldTag::Real)).unwrap();
        let id = ExactMatrix::identity(a.dim());
        assert!(t.iso_witness_check(&a, &id));

        // Cl(1,0) ⊗ Cl(0,1) ≅ Cl(1,1): e1 ↦ e⊗1, e2 ↦ 1⊗f, e12 ↦ e⊗f
        let t = clifford(1, 0, FieldTag::Real)
            .unwrap()
            .tensor(&clifford(0, 1, FieldTag::Real).unwrap())
            .unwrap();
        let cl11 = clifford(1, 1, FieldTag::Real).unwrap();
        // tensor basis order: 1⊗1, 1⊗f, e⊗1, e⊗f; cl11 order: 1, e1, e2, e12
        let mut w = ExactMatrix::zeros(4, 4);
        w[(0, 0)] = one(); // 1 ↦ 1⊗1
        w[(2, 1)] = one(); // e1 ↦ e⊗1
        w[(1, 2)] = one(); // e2 ↦ 1⊗f
        w[(3, 3)] = one(); // e12 ↦ e⊗f
        assert!(cl11.iso_witness_check(&t, &w));

        // ℂl₁ ⊗ ℂl₁ ≅ ℂl₂
        let t = complex_clifford(1)
            .unwrap()
            .tensor(&complex_clifford(1).unwrap())
            .unwrap();
        let cl2 = complex_clifford(2).unwrap();
        let mut w = ExactMatrix::zeros(4, 4);
        w[(0, 0)] = one();
        w[(2, 1)] = one();
        w[(1, 2)] = one();
        w[(3, 3)] = one();
        assert!(cl2.iso_witness_check(&t, &w));
    }

    #[test]
    fn tensor_is_associative_up_to_relabeling() {
        let a = clifford(1, 0, FieldTag::Real).unwrap();
        let b = clifford(0, 1, FieldTag::Real).unwrap();
        let c = clifford(1, 1, FieldTag::Real).unwrap();
        let left = a.tensor(&b).unwrap().tensor(&c).unwrap();
        let right = a.tensor(&b.tensor(&c).unwrap()).unwrap();
        // same flattened index order on both sides
        assert_eq!(left.parity, right.parity);
        assert_eq!(left.mult, right.mult);
    }

    #[test]
    fn parity_extension_cases() {
        // ℝ → ℝ⊕ℝ
        let ext = Superalgebra::ground(FieldTag::Real).parity_extension();
        assert!(ext.check().is_valid());
        assert_eq!(
            ext.fingerprint(),
            parity_extension_target(0, 0).unwrap().fingerprint()
        );

        // Cl(1,0) → Cl(1,1) with the explicit witness e1 ↦ e, e2 ↦ xe... in
        // extension coordinates {1, e, x, ex}: e1 ↦ e, e2 ↦ ex·(-1)?  Use the
        // computed products: (ex)² = -1 and e·(ex) = -(ex)·e.
        let ext = clifford(1, 0, FieldTag::Real).unwrap().parity_extension();
        assert!(ext.check().is_valid());
        let cl11 = clifford(1, 1, FieldTag::Real).unwrap();
        // ext basis: 1, e, x, ex (indices 0..4); map e1 ↦ e, e2 ↦ ex, e12 ↦ e·(ex)
        let e = |i: usize| {
            let mut v = vec![GaussianScalar::zero(); 4];
            v[i] = one();
            v
        };
        let e_ex = ext.mul_vec(&e(1), &e(3));
        let mut w = ExactMatrix::zeros(4, 4);
        w[(0, 0)] = one();
        w[(1, 1)] = one(); // e1 ↦ e
        w[(3, 2)] = one(); // e2 ↦ ex
        for (k, coef) in e_ex.iter().enumerate() {
            w[(k, 3)] = coef.clone(); // e12 ↦ e·(ex)
        }
        assert!(cl11.iso_witness_check(&ext, &w), "Cl(1,0) extension is Cl(1,1)");

        // Cl(0,1) → Cl(1,1): e1 ↦ fx, e2 ↦ f
        let ext = clifford(0, 1, FieldTag::Real).unwrap().parity_extension();
        let fx = ext.mul_vec(&e(1), &e(2)); // f·x
        let f_fx = ext.mul_vec(&fx, &e(1)); // (fx)·f
        let mut w = ExactMatrix::zeros(4, 4);
        w[(0, 0)] = one();
        for (k, coef) in fx.iter().enumerate() {
            w[(k, 1)] = coef.clone();
        }
        w[(1, 2)] = one(); // e2 ↦ f
        for (k, coef) in ext.mul_vec(&fx, &e(1)).iter().enumerate() {
            w[(k, 3)] = coef.clone();
        }
        let _ = f_fx;
        assert!(cl11.iso_witness_check(&ext, &w), "Cl(0,1) extension is Cl(1,1)");
    }

    #[test]
    fn semisimplicity_and_radical_oracle_agree() {
        let mut fixtures: Vec<Superalgebra> = vec![
            Superalgebra::ground(FieldTag::Real),
            dual_numbers(FieldTag::Real),
            dual_numbers(FieldTag::Complex),
            quaternions(),
            matrix_superalgebra(1, 1, FieldTag::Complex),
        ];
        for (p, q) in [(1, 0), (0, 1), (1, 1), (2, 0)] {
            fixtures.push(clifford(p, q, FieldTag::Real).unwrap());
        }
        for a in &fixtures {
            if a.dim() > 6 {
                continue;
            }
            let rad = a.radical_oracle().expect("radical verification");
            assert_eq!(a.is_semisimple(), rad.is_empty(), "algebra {:?}", a.names);
        }
        assert!(!dual_numbers(FieldTag::Real).is_semisimple());
        for (p, q) in [(2, 2), (3, 1), (0, 4)] {
            assert!(clifford(p, q, FieldTag::Real).unwrap().is_semisimple());
        }
    }

    #[test]
    fn superdivision_candidates() {
        for (p, q) in [(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (0, 2), (0, 3)] {
            assert!(
                clifford(p, q, FieldTag::Real).unwrap().is_superdivision(),
                "Cl({p},{q})"
            );
        }
        assert!(quaternions().is_superdivision());
        assert!(complex_clifford(1).unwrap().is_superdivision());
        assert!(Superalgebra::ground(FieldTag::Complex).is_superdivision());
        // non-examples
        assert!(!clifford(1, 1, FieldTag::Real).unwrap().is_superdivision());
        assert!(!dual_numbers(FieldTag::Real).is_superdivision());
        assert!(!complex_clifford(2).unwrap().is_superdivision());
        // ℂl₁ is superdivision but has ungraded zero divisors (1−e)(1+e) = 0
        let cl1 = complex_clifford(1).unwrap();
        let mut a = cl1.unit.clone();
        a[1] = -one();
        let mut b = cl1.unit.clone();
        b[1] = one();
        assert!(cl1.mul_vec(&a, &b).iter().all(GaussianScalar::is_zero));
    }

    #[test]
    fn fingerprint_separates_the_three_even_xt_ambients() {
        let m2r2 = {
            let m2 = matrix_superalgebra(2, 0, FieldTag::Real);
            m2.direct_sum(&m2)
        };
        let hh = quaternions().direct_sum(&quaternions());
        let cl2_real = complex_clifford(2).unwrap().realify();
        let (f1, f2, f3) = (m2r2.fingerprint(), hh.fingerprint(), cl2_real.fingerprint());
        assert_ne!(f1, f2);
        assert_ne!(f1, f3);
        assert_ne!(f2, f3);
        // the signature is what separates the first two
        assert_eq!(f1.trace_rank, f2.trace_rank);
        assert_ne!(f1.trace_signature, f2.trace_signature);
    }

    #[test]
    fn witnesses() {
        let cl = clifford(1, 1, FieldTag::Real).unwrap();
        let id = ExactMatrix::identity(4);
        assert!(cl.iso_witness_check(&cl, &id));
        let pa = cl.parity_automorphism();
        assert!(pa.check().is_valid());
        assert!(cl.iso_witness_check(&cl, &pa.matrix));
    }
}
