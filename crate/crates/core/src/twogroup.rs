//! Skeletal 2-groups `(π₀, π₁, action, k)`, their maps, the classification of
//! extensions by ℤ₂^c through pairs (Γ, Ξ), fermionically skeletal models,
//! finite strict-unit semidirect products, and small-group cohomology over 𝔽₂
//! by brute force.
//!
//! π₁ is restricted to finite products of cyclic groups, with 0 encoding ℤ;
//! all cochains are normalized (they vanish when any argument is the unit).

use serde::{Deserialize, Serialize};

use crate::error::{FtftError, Result};
use crate::fgroup::GroupTable;
use crate::report::CheckReport;

/// Finitely generated abelian group as an ordered list of cyclic orders;
/// order 0 encodes ℤ. Elements are integer vectors reduced componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub orders: Vec<u64>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup { orders: vec![] }
    }

    pub fn z() -> Self {
        AbelianGroup { orders: vec![0] }
    }

    pub fn z2() -> Self {
        AbelianGroup { orders: vec![2] }
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        v.iter()
            .zip(&self.orders)
            .map(|(&x, &o)| if o == 0 { x } else { x.rem_euclid(o as i64) })
            .collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        self.reduce(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        self.reduce(a).iter().all(|&x| x == 0)
    }
}

/// Homomorphism between f.g. abelian groups: generator j of the source maps
/// to the column vector `entries[j]` of the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbMap {
    pub entries: Vec<Vec<i64>>,
}

impl AbMap {
    pub fn identity(g: &AbelianGroup) -> Self {
        AbMap {
            entries: (0..g.rank())
                .map(|j| {
                    let mut v = vec![0i64; g.rank()];
                    v[j] = 1;
                    v
                })
                .collect(),
        }
    }

    pub fn negation(g: &AbelianGroup) -> Self {
        AbMap {
            entries: (0..g.rank())
                .map(|j| {
                    let mut v = vec![0i64; g.rank()];
                    v[j] = -1;
                    v
                })
                .collect(),
        }
    }

    pub fn apply(&self, tgt: &AbelianGroup, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; tgt.rank()];
        for (j, &coef) in v.iter().enumerate() {
            for (i, &e) in self.entries[j].iter().enumerate() {
                out[i] += coef * e;
            }
        }
        tgt.reduce(&out)
    }

    /// Well-definedness: order(gen_j)·image ≡ 0 in the target.
    pub fn is_well_defined(&self, src: &AbelianGroup, tgt: &AbelianGroup) -> bool {
        if self.entries.len() != src.rank() {
            return false;
        }
        self.entries.iter().zip(&src.orders).all(|(img, &o)| {
            if o == 0 {
                img.len() == tgt.rank()
            } else {
                img.len() == tgt.rank()
                    && tgt.is_zero(&img.iter().map(|&x| x * o as i64).collect::<Vec<_>>())
            }
        })
    }
}

/// Normalized 3-cochain on π₀ with values in π₁, as a dense table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cochain3 {
    pub vals: Vec<Vec<i64>>,
}

impl Cochain3 {
    pub fn zero(n: usize, pi1: &AbelianGroup) -> Self {
        Cochain3 {
            vals: vec![pi1.zero(); n * n * n],
        }
    }

    pub fn get(&self, n: usize, g1: usize, g2: usize, g3: usize) -> &Vec<i64> {
        &self.vals[(g1 * n + g2) * n + g3]
    }
}

/// Skeletal 2-group: `(π₀, π₁, α: π₀ → Aut(π₁), k ∈ Z³(π₀, π₁))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletalTwoGroup {
    pub pi0: GroupTable,
    pub pi1: AbelianGroup,
    pub action: Vec<AbMap>,
    pub k: Cochain3,
}

/// Map data between skeletal 2-groups per the classification of homomorphisms:
/// `(F₀, F₁ = Γ, Ξ = φ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoGroupMapData {
    pub f0: Vec<usize>,
    pub f1: AbMap,
    /// normalized 2-cochain π₀(src)² → π₁(tgt)
    pub xi: Vec<Vec<Vec<i64>>>,
}

impl SkeletalTwoGroup {
    pub fn n(&self) -> usize {
        self.pi0.order()
    }

    pub fn act(&self, g: usize, v: &[i64]) -> Vec<i64> {
        self.action[g].apply(&self.pi1, v)
    }

    /// The 2-group `* ⫽ ℤ₂`.
    pub fn b_z2() -> Self {
        SkeletalTwoGroup {
            pi0: GroupTable {
                elements: vec!["1".into()],
                mult: vec![vec![0]],
                unit: 0,
            },
            pi1: AbelianGroup::z2(),
            action: vec![AbMap::identity(&AbelianGroup::z2())],
            k: Cochain3::zero(1, &AbelianGroup::z2()),
        }
    }

    /// Structure validation: group table, action a homomorphism into Aut(π₁),
    /// k normalized and a 3-cocycle (pentagon).
    pub fn check(&self) -> CheckReport {
        let mut report = self.pi0.check();
        if !report.is_valid() {
            return report;
        }
        let n = self.n();
        if self.action.len() != n || self.k.vals.len() != n * n * n {
            report.fail("table-shape", "action or k table has wrong shape");
            return report;
        }
        for (g, m) in self.action.iter().enumerate() {
            if !m.is_well_defined(&self.pi1, &self.pi1) {
                report.fail("action-defined", format!("action of {g} not well defined"));
            }
        }
        if !report.is_valid() {
            return report;
        }
        // homomorphism into Aut: α(g)∘α(h) = α(gh) on generators; α(1) = id
        for g in 0..n {
            for h in 0..n {
                for j in 0..self.pi1.rank() {
                    let mut gen = self.pi1.zero();
                    gen[j] = 1;
                    let lhs = self.act(g, &self.act(h, &gen));
                    let rhs = self.act(self.pi0.mul(g, h), &gen);
                    if lhs != rhs {
                        report.fail("action-hom", format!("α({g})α({h}) ≠ α({g}·{h})"));
                    }
                }
            }
        }
        report.absorb("k", self.check_three_cocycle());
        report
    }

    /// Normalization plus the pentagon identity
    /// `k(g₁,g₂,g₃g₄) k(g₁g₂,g₃,g₄) = α(g₁)(k(g₂,g₃,g₄)) k(g₁,g₂g₃,g₄) k(g₁,g₂,g₃)`,
    /// reported with the offending quadruple.
    pub fn check_three_cocycle(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let n = self.n();
        let u = self.pi0.unit;
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    if (g1 == u || g2 == u || g3 == u)
                        && !self.pi1.is_zero(self.k.get(n, g1, g2, g3))
                    {
                        report.fail("normalized", format!("k({g1},{g2},{g3}) ≠ 0 with a unit"));
                    }
                }
            }
        }
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    for g4 in 0..n {
                        let mut lhs = self.pi1.add(
                            self.k.get(n, g1, g2, self.pi0.mul(g3, g4)),
                            self.k.get(n, self.pi0.mul(g1, g2), g3, g4),
                        );
                        let mut rhs = self.act(g1, self.k.get(n, g2, g3, g4));
                        rhs = self.pi1.add(&rhs, self.k.get(n, g1, self.pi0.mul(g2, g3), g4));
                        rhs = self.pi1.add(&rhs, self.k.get(n, g1, g2, g3));
                        lhs = self.pi1.add(&lhs, &self.pi1.neg(&rhs));
                        if !self.pi1.is_zero(&lhs) {
                            report.fail(
                                "cocycle",
                                format!("pentagon fails at ({g1},{g2},{g3},{g4})"),
                            );
                        }
                    }
                }
            }
        }
        report
    }
}

/// Conditions for `(F₀, F₁, Ξ)` to be a homomorphism of skeletal 2-groups:
/// F₀ a group map, F₁ equivariant, and the pentagon
/// `F₁(k(g₁,g₂,g₃)) + Ξ(g₁g₂,g₃) + Ξ(g₁,g₂) = Ξ(g₁,g₂g₃) + β(F₀g₁)(Ξ(g₂,g₃)) + l(F₀g₁,F₀g₂,F₀g₃)`.
pub fn check_map_data(
    src: &SkeletalTwoGroup,
    m: &TwoGroupMapData,
    tgt: &SkeletalTwoGroup,
) -> CheckReport {
    let mut report = CheckReport::new();
    let n = src.n();
    if m.f0.len() != n || m.xi.len() != n || m.xi.iter().any(|r| r.len() != n) {
        report.fail("table-shape", "map data has wrong shape");
        return report;
    }
    if m.f0.iter().any(|&v| v >= tgt.n()) {
        report.fail("table-shape", "F0 out of range");
        return report;
    }
    if m.f0[src.pi0.unit] != tgt.pi0.unit {
        report.fail("f0-unital", "F0 does not preserve the unit");
    }
    for g in 0..n {
        for h in 0..n {
            if m.f0[src.pi0.mul(g, h)] != tgt.pi0.mul(m.f0[g], m.f0[h]) {
                report.fail("f0-hom", format!("F0({g}·{h}) ≠ F0({g})·F0({h})"));
            }
        }
    }
    if !m.f1.is_well_defined(&src.pi1, &tgt.pi1) {
        report.fail("f1-defined", "F1 not well defined on cyclic orders");
        return report;
    }
    // equivariance F₁(α(g)(δ)) = β(F₀(g))(F₁(δ)) on generators
    for g in 0..n {
        for j in 0..src.pi1.rank() {
            let mut gen = src.pi1.zero();
            gen[j] = 1;
            let lhs = m.f1.apply(&tgt.pi1, &src.act(g, &gen));
            let rhs = tgt.act(m.f0[g], &m.f1.apply(&tgt.pi1, &gen));
            if lhs != rhs {
                report.fail(
                    "f1-equivariant",
                    format!("F₁∘α({g}) ≠ β(F₀{g})∘F₁ on generator {j}"),
                );
            }
        }
    }
    let u = src.pi0.unit;
    for g in 0..n {
        if !tgt.pi1.is_zero(&m.xi[u][g]) || !tgt.pi1.is_zero(&m.xi[g][u]) {
            report.fail("xi-normalized", format!("Ξ not normalized at {g}"));
        }
    }
    for g1 in 0..n {
        for g2 in 0..n {
            for g3 in 0..n {
                let mut lhs = m.f1.apply(&tgt.pi1, src.k.get(n, g1, g2, g3));
                lhs = tgt.pi1.add(&lhs, &m.xi[src.pi0.mul(g1, g2)][g3]);
                lhs = tgt.pi1.add(&lhs, &m.xi[g1][g2]);
                let mut rhs = m.xi[g1][src.pi0.mul(g2, g3)].clone();
                rhs = tgt.pi1.add(&rhs, &tgt.act(m.f0[g1], &m.xi[g2][g3]));
                rhs = tgt
                    .pi1
                    .add(&rhs, tgt.k.get(tgt.n(), m.f0[g1], m.f0[g2], m.f0[g3]));
                if lhs != rhs {
                    report.fail("pentagon", format!("map pentagon fails at ({g1},{g2},{g3})"));
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// 𝔽₂ linear algebra for cochain spaces

#[derive(Debug, Clone)]
pub struct Gf2Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v & 1;
    }

    /// Row echelon; returns pivot columns. Mutates in place to RREF.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) == 1) else {
                continue;
            };
            for j in 0..self.cols {
                let tmp = self.get(r, j);
                self.set(r, j, self.get(p, j));
                self.set(p, j, tmp);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) == 1 {
                    for j in 0..self.cols {
                        let v = self.get(i, j) ^ self.get(r, j);
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = m.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self · x = b` (free variables zero), or `None` if inconsistent.
    pub fn solve(&self, b: &[u8]) -> Option<Vec<u8>> {
        let mut aug = Gf2Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, b[i]);
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![0u8; self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(row, self.cols);
        }
        Some(x)
    }
}

/// Normalized 𝔽₂-cochain bookkeeping on a finite group: nonunit elements index
/// the free coordinates.
pub struct CochainSpace<'a> {
    pub group: &'a GroupTable,
    pub nonunit: Vec<usize>,
}

impl<'a> CochainSpace<'a> {
    pub fn new(group: &'a GroupTable) -> Self {
        let nonunit = (0..group.order()).filter(|&g| g != group.unit).collect();
        CochainSpace { group, nonunit }
    }

    pub fn dim1(&self) -> usize {
        self.nonunit.len()
    }

    pub fn dim2(&self) -> usize {
        self.nonunit.len() * self.nonunit.len()
    }

    pub fn idx2(&self, g: usize, h: usize) -> Option<usize> {
        let gi = self.nonunit.iter().position(|&x| x == g)?;
        let hi = self.nonunit.iter().position(|&x| x == h)?;
        Some(gi * self.nonunit.len() + hi)
    }

    pub fn cochain2_from_vec(&self, v: &[u8]) -> Vec<Vec<u8>> {
        let n = self.group.order();
        let mut out = vec![vec![0u8; n]; n];
        for (gi, &g) in self.nonunit.iter().enumerate() {
            for (hi, &h) in self.nonunit.iter().enumerate() {
                out[g][h] = v[gi * self.nonunit.len() + hi];
            }
        }
        out
    }

    /// d₂ as a matrix: rows indexed by nonunit triples, columns by dim2.
    pub fn d2_matrix(&self) -> Gf2Matrix {
        let nn = &self.nonunit;
        let mut m = Gf2Matrix::zeros(nn.len().pow(3), self.dim2());
        for (ti, (&g, (&h, &k))) in nn
            .iter()
            .flat_map(|g| nn.iter().flat_map(move |h| nn.iter().map(move |k| (g, (h, k)))))
            .enumerate()
        {
            // dΞ(g,h,k) = Ξ(h,k) + Ξ(gh,k) + Ξ(g,hk) + Ξ(g,h)
            for (a, b) in [
                (h, k),
                (self.group.mul(g, h), k),
                (g, self.group.mul(h, k)),
                (g, h),
            ] {
                if let Some(col) = self.idx2(a, b) {
                    let v = m.get(ti, col) ^ 1;
                    m.set(ti, col, v);
                }
            }
        }
        m
    }

    /// d₁ images (the coboundaries) as spanning vectors in C².
    pub fn coboundary_basis(&self) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for &s in &self.nonunit {
            let mut v = vec![0u8; self.dim2()];
            for (gi, &g) in self.nonunit.iter().enumerate() {
                for (hi, &h) in self.nonunit.iter().enumerate() {
                    // dσ(g,h) = σ(g) + σ(h) + σ(gh) for σ the indicator of s
                    let mut val = 0u8;
                    if g == s {
                        val ^= 1;
                    }
                    if h == s {
                        val ^= 1;
                    }
                    if self.group.mul(g, h) == s {
                        val ^= 1;
                    }
                    v[gi * self.nonunit.len() + hi] = val;
                }
            }
            out.push(v);
        }
        out
    }

    /// Coset representatives of H² = Z²/B²: a list of 2-cocycle vectors, one
    /// per class, the zero class first.
    pub fn h2_representatives(&self) -> Vec<Vec<u8>> {
        let z_basis = self.d2_matrix().kernel();
        let b_span = self.coboundary_basis();
        // echelonize B² to reduce cocycles
        let mut b_mat = Gf2Matrix::zeros(b_span.len().max(1), self.dim2());
        for (i, v) in b_span.iter().enumerate() {
            for (j, &x) in v.iter().enumerate() {
                b_mat.set(i, j, x);
            }
        }
        let b_pivots = {
            let mut m = b_mat.clone();
            let p = m.rref();
            b_mat = m;
            p
        };
        let reduce = |v: &[u8]| -> Vec<u8> {
            let mut v = v.to_vec();
            for (row, &p) in b_pivots.iter().enumerate() {
                if v[p] == 1 {
                    for j in 0..self.dim2() {
                        v[j] ^= b_mat.get(row, j);
                    }
                }
            }
            v
        };
        // reduced cocycle basis spanning H²
        let mut h_basis: Vec<Vec<u8>> = Vec::new();
        let mut h_mat = Gf2Matrix::zeros(0, self.dim2());
        for z in &z_basis {
            let r = reduce(z);
            if r.iter().all(|&x| x == 0) {
                continue;
            }
            // keep if independent from current h_basis
            let mut test = Gf2Matrix::zeros(h_basis.len() + 1, self.dim2());
            for (i, v) in h_basis.iter().enumerate() {
                for (j, &x) in v.iter().enumerate() {
                    test.set(i, j, x);
                }
            }
            for (j, &x) in r.iter().enumerate() {
                test.set(h_basis.len(), j, x);
            }
            let rank = {
                let mut t = test.clone();
                t.rref().len()
            };
            if rank == h_basis.len() + 1 {
                h_basis.push(r);
            }
            h_mat = test;
        }
        let _ = h_mat;
        // enumerate all 2^dim combinations
        let dim = h_basis.len();
        let mut reps = Vec::new();
        for mask in 0..(1usize << dim) {
            let mut v = vec![0u8; self.dim2()];
            for (bit, basis_vec) in h_basis.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    for (j, &x) in basis_vec.iter().enumerate() {
                        v[j] ^= x;
                    }
                }
            }
            reps.push(v);
        }
        reps
    }

    /// Reduce a 2-cocycle to its class representative (for quotient idempotence).
    pub fn class_representative(&self, xi: &[Vec<u8>]) -> Vec<u8> {
        let mut v = vec![0u8; self.dim2()];
        for (gi, &g) in self.nonunit.iter().enumerate() {
            for (hi, &h) in self.nonunit.iter().enumerate() {
                v[gi * self.nonunit.len() + hi] = xi[g][h];
            }
        }
        let reps = self.h2_representatives();
        // find which class v lies in by reducing v - rep against B²
        let b_span = self.coboundary_basis();
        let mut b_mat = Gf2Matrix::zeros(b_span.len().max(1), self.dim2());
        for (i, w) in b_span.iter().enumerate() {
            for (j, &x) in w.iter().enumerate() {
                b_mat.set(i, j, x);
            }
        }
        for rep in &reps {
            let diff: Vec<u8> = v.iter().zip(rep).map(|(a, b)| a ^ b).collect();
            // diff ∈ B²?
            let mut aug = Gf2Matrix::zeros(self.dim2(), b_span.len());
            for (j, w) in b_span.iter().enumerate() {
                for (i, &x) in w.iter().enumerate() {
                    aug.set(i, j, x);
                }
            }
            if aug.solve(&diff).is_some() {
                return rep.clone();
            }
        }
        unreachable!("every cocycle lies in some class");
    }
}

/// One equivalence class of maps `G_b → *⫽ℤ₂`: Γ on π₁ generators and a
/// representative Ξ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionClass {
    pub gamma: Vec<u8>,
    pub xi: Vec<Vec<u8>>,
}

/// Γ evaluated on a π₁ element (well-defined since odd-order generators are
/// forced to carry Γ = 0).
pub fn gamma_eval(gamma: &[u8], v: &[i64]) -> u8 {
    v.iter()
        .zip(gamma)
        .map(|(&x, &g)| ((x.rem_euclid(2)) as u8) & g)
        .fold(0, |a, b| a ^ b)
}

/// Enumerate homomorphisms `G_b → *⫽ℤ₂` up to 2-isomorphism: admissible Γ
/// (homomorphic, conjugation-invariant, Γ∘k a coboundary) each carrying an
/// H²(π₀, ℤ₂)-torsor of Ξ classes.
pub fn enumerate_extension_maps(gb: &SkeletalTwoGroup) -> Result<Vec<ExtensionClass>> {
    if gb.n() > 16 {
        return Err(FtftError::BoundExceeded("π₀ order exceeds 16".into()));
    }
    let space = CochainSpace::new(&gb.pi0);
    let rank = gb.pi1.rank();
    let mut out = Vec::new();
    let gamma_choices = 1usize << rank;
    for mask in 0..gamma_choices {
        let gamma: Vec<u8> = (0..rank).map(|j| (mask >> j & 1) as u8).collect();
        // odd-order generators cannot map onto ℤ₂
        if gamma
            .iter()
            .zip(&gb.pi1.orders)
            .any(|(&g, &o)| g == 1 && o % 2 == 1)
        {
            continue;
        }
        // conjugation invariance Γ(α(g)(δ)) = Γ(δ)
        let invariant = (0..gb.n()).all(|g| {
            (0..rank).all(|j| {
                let mut gen = gb.pi1.zero();
                gen[j] = 1;
                gamma_eval(&gamma, &gb.act(g, &gen)) == gamma[j]
            })
        });
        if !invariant {
            continue;
        }
        // Γ∘k must be a coboundary: solve dΞ₀ = Γ∘k
        let nn = &space.nonunit;
        let rhs: Vec<u8> = nn
            .iter()
            .flat_map(|&g| {
                nn.iter().flat_map(move |&h| {
                    nn.iter().map(move |&k| (g, h, k))
                })
            })
            .map(|(g, h, k)| gamma_eval(&gamma, gb.k.get(gb.n(), g, h, k)))
            .collect();
        let d2 = space.d2_matrix();
        let Some(xi0) = d2.solve(&rhs) else {
            continue;
        };
        for rep in space.h2_representatives() {
            let total: Vec<u8> = xi0.iter().zip(&rep).map(|(a, b)| a ^ b).collect();
            out.push(ExtensionClass {
                gamma: gamma.clone(),
                xi: space.cochain2_from_vec(&total),
            });
        }
    }
    Ok(out)
}

/// Convert an extension class to `TwoGroupMapData` targeting `*⫽ℤ₂`.
pub fn extension_to_map_data(gb: &SkeletalTwoGroup, class: &ExtensionClass) -> TwoGroupMapData {
    let n = gb.n();
    TwoGroupMapData {
        f0: vec![0; n],
        f1: AbMap {
            entries: class.gamma.iter().map(|&g| vec![g as i64]).collect(),
        },
        xi: (0..n)
            .map(|g| (0..n).map(|h| vec![class.xi[g][h] as i64]).collect())
            .collect(),
    }
}

/// The fermionically skeletal model `ℤ₂^c ⋊ G_b` built from (Γ, Ξ): objects
/// `π₀(G_b) × ℤ₂^c`, tensor `g₁⊗g₂ = Ξ(g₁,g₂)·g₁g₂` with c strictly central
/// and square one, hom-sets `Hom(gc^{ε₁}, gc^{ε₂}) = {γ : Γ(γ) = c^{ε₁+ε₂}}`,
/// associator induced from the base.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermTwoGroupModel {
    pub base: SkeletalTwoGroup,
    /// grading of π₀(G_b) (time-reversing elements)
    pub theta: Vec<u8>,
    pub gamma: Vec<u8>,
    pub xi: Vec<Vec<u8>>,
    /// objects (g, ε) in a fixed order: index = 2g + ε
    pub objects: Vec<(usize, u8)>,
    pub tensor: Vec<Vec<usize>>,
    pub unit: usize,
    pub c_object: usize,
    /// associator value in π₁(G_b) per object triple (flattened)
    pub associator: Vec<Vec<i64>>,
}

pub fn build_ferm_skeletal(
    gb: &SkeletalTwoGroup,
    theta: &[u8],
    class: &ExtensionClass,
) -> Result<FermTwoGroupModel> {
    let data = extension_to_map_data(gb, class);
    let report = check_map_data(gb, &data, &SkeletalTwoGroup::b_z2());
    if !report.is_valid() {
        return Err(FtftError::Precondition(format!(
            "(Γ,Ξ) is not a valid map to *⫽ℤ₂: {report}"
        )));
    }
    let n = gb.n();
    let objects: Vec<(usize, u8)> = (0..n).flat_map(|g| [(g, 0u8), (g, 1u8)]).collect();
    let oidx = |g: usize, e: u8| 2 * g + e as usize;
    let mut tensor = vec![vec![0usize; 2 * n]; 2 * n];
    for (o1, &(g1, e1)) in objects.iter().enumerate() {
        for (o2, &(g2, e2)) in objects.iter().enumerate() {
            let g = gb.pi0.mul(g1, g2);
            let e = e1 ^ e2 ^ class.xi[g1][g2];
            tensor[o1][o2] = oidx(g, e);
        }
    }
    let mut associator = vec![gb.pi1.zero(); (2 * n).pow(3)];
    for (o1, &(g1, _)) in objects.iter().enumerate() {
        for (o2, &(g2, _)) in objects.iter().enumerate() {
            for (o3, &(g3, _)) in objects.iter().enumerate() {
                associator[(o1 * 2 * n + o2) * 2 * n + o3] = gb.k.get(n, g1, g2, g3).clone();
            }
        }
    }
    Ok(FermTwoGroupModel {
        base: gb.clone(),
        theta: theta.to_vec(),
        gamma: class.gamma.clone(),
        xi: class.xi.clone(),
        objects,
        tensor,
        unit: oidx(gb.pi0.unit, 0),
        c_object: oidx(gb.pi0.unit, 1),
        associator,
    })
}

impl FermTwoGroupModel {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    /// `Hom((g,ε₁),(g,ε₂))` is the set of γ with Γ(γ) = ε₁+ε₂; `None` marks an
    /// empty hom-set (distinct π₀ classes).
    pub fn hom_gamma_required(&self, o1: usize, o2: usize) -> Option<u8> {
        let (g1, e1) = self.objects[o1];
        let (g2, e2) = self.objects[o2];
        if g1 != g2 {
            None
        } else {
            Some(e1 ^ e2)
        }
    }

    pub fn theta_of_object(&self, o: usize) -> u8 {
        self.theta[self.objects[o].0]
    }

    /// Structural validation per the definition of the fermionically skeletal
    /// model: c strictly central and square one at object level, Ξ-twisted
    /// tensor associative up to Γ∘k, unit strict.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let c = self.c_object;
        if self.tensor[c][c] != self.unit {
            report.fail("c-square", "c⊗c ≠ 1");
        }
        for o in 0..self.object_count() {
            if self.tensor[c][o] != self.tensor[o][c] {
                report.fail("c-central", format!("c not strictly central at {o}"));
            }
            if self.tensor[self.unit][o] != o || self.tensor[o][self.unit] != o {
                report.fail("unit", format!("unit not strict at {o}"));
            }
        }
        // object-level associativity defect is Γ(k): (o1 o2) o3 vs o1 (o2 o3)
        for o1 in 0..self.object_count() {
            for o2 in 0..self.object_count() {
                for o3 in 0..self.object_count() {
                    let left = self.tensor[self.tensor[o1][o2]][o3];
                    let right = self.tensor[o1][self.tensor[o2][o3]];
                    let (gl, el) = self.objects[left];
                    let (gr, er) = self.objects[right];
                    let defect = gamma_eval(
                        &self.gamma,
                        &self.associator[(o1 * self.object_count() + o2) * self.object_count() + o3],
                    );
                    if gl != gr || el ^ er != defect {
                        report.fail(
                            "associator",
                            format!("object associativity defect wrong at ({o1},{o2},{o3})"),
                        );
                    }
                }
            }
        }
        report
    }
}

// ---------------------------------------------------------------------------
// semidirect products (strict units, finite tables, trivialized ω)

/// Action data of a skeletal 2-group G on a skeletal 2-group N: a strict
/// action on objects and π₁(N), the objects `ρ(γ)_*` for π₁(G) generators,
/// and the normalized object-valued 2-cochain `R`.
#[derive(Debug, Clone)]
pub struct TwoGroupAction {
    pub on_objects: Vec<Vec<usize>>,
    pub on_pi1: Vec<AbMap>,
    /// ρ(γ)_* ∈ π₀(N) per π₁(G) generator
    pub rho_mor: Vec<usize>,
    /// R(g', g) ∈ π₀(N), normalized
    pub r_cochain: Vec<Vec<usize>>,
}

/// The semidirect product `N ⋊ G` as a monoidal-category table:
/// `(n',g') ⊗ (n,g) = (n' · ρ(g')(n) · R(g',g), g'·g)`.
#[derive(Debug, Clone)]
pub struct SemidirectModel {
    pub objects: Vec<(usize, usize)>,
    pub tensor: Vec<Vec<usize>>,
    pub unit: usize,
    pub pi1_g: AbelianGroup,
    pub pi1_n: AbelianGroup,
    pub rho_mor: Vec<usize>,
    pub n_pi0: GroupTable,
    /// associator morphism: the γ-component is k_G, the ν-component vanishes
    /// for strictly trivialized ω
    pub associator_gamma: Vec<Vec<i64>>,
}

pub fn semidirect_product(
    n: &SkeletalTwoGroup,
    g: &SkeletalTwoGroup,
    act: &TwoGroupAction,
) -> Result<SemidirectModel> {
    let (nn, ng) = (n.n(), g.n());
    if act.on_objects.len() != ng
        || act.on_pi1.len() != ng
        || act.rho_mor.len() != g.pi1.rank()
        || act.r_cochain.len() != ng
    {
        return Err(FtftError::Structural("action tables have wrong shape".into()));
    }
    // strict units required
    for gi in 0..ng {
        if act.r_cochain[gi][g.pi0.unit] != n.pi0.unit
            || act.r_cochain[g.pi0.unit][gi] != n.pi0.unit
        {
            return Err(FtftError::Unsupported(
                "non-strict unit data (R not normalized)".into(),
            ));
        }
    }
    if act.on_objects[g.pi0.unit] != (0..nn).collect::<Vec<_>>() {
        return Err(FtftError::Unsupported("action of the unit must be strict".into()));
    }
    let objects: Vec<(usize, usize)> = (0..nn)
        .flat_map(|no| (0..ng).map(move |go| (no, go)))
        .collect();
    let oidx = |no: usize, go: usize| no * ng + go;
    let mut tensor = vec![vec![0usize; objects.len()]; objects.len()];
    for (o1, &(n1, g1)) in objects.iter().enumerate() {
        for (o2, &(n2, g2)) in objects.iter().enumerate() {
            let part = n
                .pi0
                .mul(n.pi0.mul(n1, act.on_objects[g1][n2]), act.r_cochain[g1][g2]);
            tensor[o1][o2] = oidx(part, g.pi0.mul(g1, g2));
        }
    }
    let count = objects.len();
    let mut associator_gamma = vec![g.pi1.zero(); count.pow(3)];
    for (o1, &(_, g1)) in objects.iter().enumerate() {
        for (o2, &(_, g2)) in objects.iter().enumerate() {
            for (o3, &(_, g3)) in objects.iter().enumerate() {
                associator_gamma[(o1 * count + o2) * count + o3] =
                    g.k.get(ng, g1, g2, g3).clone();
            }
        }
    }
    Ok(SemidirectModel {
        objects,
        tensor,
        unit: oidx(n.pi0.unit, g.pi0.unit),
        pi1_g: g.pi1.clone(),
        pi1_n: n.pi1.clone(),
        rho_mor: act.rho_mor.clone(),
        n_pi0: n.pi0.clone(),
        associator_gamma,
    })
}

impl SemidirectModel {
    /// Morphisms (n₁,g) → (n₂,g') exist iff g = g' and n₂⁻¹n₁ lies in the
    /// image of ρ on morphisms; returns the required π₀(N) value.
    pub fn hom_delta(&self, o1: usize, o2: usize) -> Option<usize> {
        let (n1, g1) = self.objects[o1];
        let (n2, g2) = self.objects[o2];
        if g1 != g2 {
            return None;
        }
        Some(self.n_pi0.mul(self.n_pi0.inv(n2), n1))
    }

    fn rho_mor_image(&self) -> Vec<usize> {
        // subgroup of π₀(N) generated by the ρ(γ)_* (π₀(N) abelian in scope)
        let mut image = vec![self.n_pi0.unit];
        loop {
            let mut grew = false;
            for &r in &self.rho_mor {
                for &x in image.clone().iter() {
                    let y = self.n_pi0.mul(x, r);
                    if !image.contains(&y) {
                        image.push(y);
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        image.sort_unstable();
        image
    }

    pub fn hom_nonempty(&self, o1: usize, o2: usize) -> bool {
        match self.hom_delta(o1, o2) {
            None => false,
            Some(d) => self.rho_mor_image().contains(&d),
        }
    }

    /// Contractible: all objects are isomorphic and the automorphisms of the
    /// unit are trivial, i.e. the pairs (γ,ν) with ρ(γ)_* = 1 are only (0,0).
    pub fn is_contractible(&self) -> bool {
        let image = self.rho_mor_image();
        let connected = (0..self.objects.len())
            .all(|o| self.hom_delta(self.unit, o).map_or(false, |d| image.contains(&d)));
        if !connected {
            return false;
        }
        // kernel of ρ_mor on π₁(G) must be trivial, together with π₁(N)
        if self.pi1_n.rank() != 0 {
            return false;
        }
        // enumerate kernel for finite π₁(G); ℤ components with nontrivial
        // image have kernel 2ℤ ≠ 0
        for (j, &o) in self.pi1_g.orders.iter().enumerate() {
            let r = self.rho_mor[j];
            match o {
                0 => return false, // ℤ always has nontrivial kernel elements
                2 => {
                    if r == self.n_pi0.unit {
                        return false;
                    }
                }
                _ => {
                    // order-o generator: kernel nontrivial unless o = 2 with
                    // faithful image (π₀(N) has exponent 2 in scope)
                    if o != 2 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Summary of the G_b-action data on Spin₂: what each g does to the generating
/// morphism η (fix it, or send it to cη⁻¹ when θ(g) = 1), plus the twisted
/// cochain `Ξᵒᵖ(g₁,g₂) = θ(g₁)θ(g₂) + Ξ(g₁,g₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Spin2ActionSummary {
    /// true when g sends η to cη⁻¹
    pub reverses_eta: Vec<bool>,
    pub xi_op: Vec<Vec<u8>>,
}

pub fn spin2_action_data(model: &FermTwoGroupModel) -> Spin2ActionSummary {
    let n = model.base.n();
    let reverses_eta = (0..n).map(|g| model.theta[g] == 1).collect();
    let mut xi_op = model.xi.clone();
    for (g1, row) in xi_op.iter_mut().enumerate() {
        for (g2, v) in row.iter_mut().enumerate() {
            *v ^= model.theta[g1] & model.theta[g2];
        }
    }
    Spin2ActionSummary {
        reverses_eta,
        xi_op,
    }
}

// ---------------------------------------------------------------------------
// fixtures

/// Skeletal model of O₂: π₀ = ℤ₂ acting on π₁ = ℤ by negation, k = 0.
pub fn o2_model() -> SkeletalTwoGroup {
    let z = AbelianGroup::z();
    SkeletalTwoGroup {
        pi0: z2_table(),
        pi1: z.clone(),
        action: vec![AbMap::identity(&z), AbMap::negation(&z)],
        k: Cochain3::zero(2, &z),
    }
}

/// Skeletal model of SO₂ × ℤ₂: trivial action, k = 0.
pub fn so2_x_z2_model() -> SkeletalTwoGroup {
    let z = AbelianGroup::z();
    SkeletalTwoGroup {
        pi0: z2_table(),
        pi1: z.clone(),
        action: vec![AbMap::identity(&z), AbMap::identity(&z)],
        k: Cochain3::zero(2, &z),
    }
}

/// Skeletal model of Pin₂⁻: negation action with the nontrivial k-invariant,
/// represented by the normalized 3-cocycle with k(r,r,r) = 1.
pub fn pin2_minus_model() -> SkeletalTwoGroup {
    let z = AbelianGroup::z();
    let mut k = Cochain3::zero(2, &z);
    k.vals[(1 * 2 + 1) * 2 + 1] = vec![1];
    SkeletalTwoGroup {
        pi0: z2_table(),
        pi1: z.clone(),
        action: vec![AbMap::identity(&z), AbMap::negation(&z)],
        k,
    }
}

/// Bℤ: trivial π₀, π₁ = ℤ (the skeletal model of SO₂).
pub fn bz_model() -> SkeletalTwoGroup {
    SkeletalTwoGroup {
        pi0: GroupTable {
            elements: vec!["1".into()],
            mult: vec![vec![0]],
            unit: 0,
        },
        pi1: AbelianGroup::z(),
        action: vec![AbMap::identity(&AbelianGroup::z())],
        k: Cochain3::zero(1, &AbelianGroup::z()),
    }
}

/// The terminal 2-group.
pub fn point_model() -> SkeletalTwoGroup {
    SkeletalTwoGroup {
        pi0: GroupTable {
            elements: vec!["1".into()],
            mult: vec![vec![0]],
            unit: 0,
        },
        pi1: AbelianGroup::trivial(),
        action: vec![AbMap::identity(&AbelianGroup::trivial())],
        k: Cochain3::zero(1, &AbelianGroup::trivial()),
    }
}

fn z2_table() -> GroupTable {
    GroupTable {
        elements: vec!["1".into(), "r".into()],
        mult: vec![vec![0, 1], vec![1, 0]],
        unit: 0,
    }
}

/// ℤ₂^c as a 2-group with only identity morphisms.
pub fn z2c_two_group() -> SkeletalTwoGroup {
    SkeletalTwoGroup {
        pi0: GroupTable {
            elements: vec!["1".into(), "c".into()],
            mult: vec![vec![0, 1], vec![1, 0]],
            unit: 0,
        },
        pi1: AbelianGroup::trivial(),
        action: vec![
            AbMap::identity(&AbelianGroup::trivial()),
            AbMap::identity(&AbelianGroup::trivial()),
        ],
        k: Cochain3::zero(2, &AbelianGroup::trivial()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cocycle_checks() {
        assert!(o2_model().check().is_valid());
        assert!(pin2_minus_model().check().is_valid());
        assert!(so2_x_z2_model().check().is_valid());
        // perturb one value
        let mut bad = pin2_minus_model();
        bad.k.vals[(1 * 2 + 1) * 2] = vec![1]; // k(r,r,1) ≠ 0 breaks normalization
        let report = bad.check_three_cocycle();
        assert!(report.names_clause("normalized") || report.names_clause("cocycle"));
        let mut bad2 = o2_model();
        bad2.k.vals[(1 * 2 + 1) * 2 + 1] = vec![1];
        // with the negation action that is exactly the Pin₂⁻ model, a cocycle
        assert!(bad2.check_three_cocycle().is_valid());
        // with the trivial action the same k fails the pentagon, with the
        // offending quadruple reported
        let mut bad3 = so2_x_z2_model();
        bad3.k.vals[(1 * 2 + 1) * 2 + 1] = vec![1];
        let report = bad3.check_three_cocycle();
        assert!(report.names_clause("cocycle"));
        assert!(report
            .violations
            .iter()
            .any(|v| v.detail.contains("(1,1,1,1)")));
    }

    #[test]
    fn map_data_to_bz2() {
        let o2 = o2_model();
        let bz2 = SkeletalTwoGroup::b_z2();
        // Γ surjective, Ξ = 0
        let class = ExtensionClass {
            gamma: vec![1],
            xi: vec![vec![0, 0], vec![0, 0]],
        };
        let data = extension_to_map_data(&o2, &class);
        assert!(check_map_data(&o2, &data, &bz2).is_valid());
        // Γ = 0, Ξ = w₁²
        let class = ExtensionClass {
            gamma: vec![0],
            xi: vec![vec![0, 0], vec![0, 1]],
        };
        let data = extension_to_map_data(&o2, &class);
        assert!(check_map_data(&o2, &data, &bz2).is_valid());
    }

    #[test]
    fn conjugation_invariance_can_fail() {
        // π₁ = ℤ₂×ℤ₂ with the swap action: Γ = (1,0) is not invariant
        let pi1 = AbelianGroup { orders: vec![2, 2] };
        let swap = AbMap {
            entries: vec![vec![0, 1], vec![1, 0]],
        };
        let tg = SkeletalTwoGroup {
            pi0: z2_table(),
            pi1: pi1.clone(),
            action: vec![AbMap::identity(&pi1), swap],
            k: Cochain3::zero(2, &pi1),
        };
        assert!(tg.check().is_valid());
        let data = TwoGroupMapData {
            f0: vec![0, 0],
            f1: AbMap {
                entries: vec![vec![1], vec![0]],
            },
            xi: vec![vec![vec![0], vec![0]], vec![vec![0], vec![0]]],
        };
        let report = check_map_data(&tg, &data, &SkeletalTwoGroup::b_z2());
        assert!(report.names_clause("f1-equivariant"));
        // the enumeration skips it
        let classes = enumerate_extension_maps(&tg).unwrap();
        assert!(classes
            .iter()
            .all(|c| c.gamma == vec![0, 0] || c.gamma == vec![1, 1]));
    }

    #[test]
    fn extension_counts() {
        // O₂ model: 2 Γ × H²(ℤ₂,ℤ₂) = 4 classes
        assert_eq!(enumerate_extension_maps(&o2_model()).unwrap().len(), 4);
        // trivial model: 1 class
        assert_eq!(enumerate_extension_maps(&point_model()).unwrap().len(), 1);
        // Bℤ: Γ trivial or surjective
        assert_eq!(enumerate_extension_maps(&bz_model()).unwrap().len(), 2);
    }

    #[test]
    fn xi_quotient_is_idempotent() {
        let o2 = o2_model();
        let space = CochainSpace::new(&o2.pi0);
        for class in enumerate_extension_maps(&o2).unwrap() {
            // perturb Ξ by the coboundary dσ with σ the indicator of r
            let mut xi = class.xi.clone();
            let cob = space.coboundary_basis();
            let as_table = space.cochain2_from_vec(&cob[0]);
            for g in 0..2 {
                for h in 0..2 {
                    xi[g][h] ^= as_table[g][h];
                }
            }
            let rep1 = space.class_representative(&class.xi);
            let rep2 = space.class_representative(&xi);
            assert_eq!(rep1, rep2, "coboundary perturbation stays in the class");
        }
    }

    #[test]
    fn ferm_skeletal_models() {
        // Spin₂: G_b = Bℤ, Γ surjective → two objects with strict c
        let bz = bz_model();
        let class = ExtensionClass {
            gamma: vec![1],
            xi: vec![vec![0]],
        };
        let model = build_ferm_skeletal(&bz, &[0], &class).unwrap();
        assert_eq!(model.object_count(), 2);
        assert!(model.check().is_valid());
        assert_eq!(model.hom_gamma_required(model.unit, model.c_object), Some(1));
        assert_eq!(model.hom_gamma_required(model.unit, model.unit), Some(0));

        // split case: ℤ₂^c × G_b
        let o2 = o2_model();
        let split = ExtensionClass {
            gamma: vec![0],
            xi: vec![vec![0, 0], vec![0, 0]],
        };
        let model = build_ferm_skeletal(&o2, &[0, 1], &split).unwrap();
        assert!(model.check().is_valid());
        assert_eq!(model.object_count(), 4);
        // tensor is the direct product
        for (o1, &(g1, e1)) in model.objects.iter().enumerate() {
            for (o2o, &(g2, e2)) in model.objects.iter().enumerate() {
                let t = model.tensor[o1][o2o];
                assert_eq!(model.objects[t], (model.base.pi0.mul(g1, g2), e1 ^ e2));
            }
        }

        // Pin₂⁻-type: O₂ base with Γ surjective and some Ξ
        for xi_val in [0u8, 1] {
            let class = ExtensionClass {
                gamma: vec![1],
                xi: vec![vec![0, 0], vec![0, xi_val]],
            };
            let model = build_ferm_skeletal(&o2, &[0, 1], &class).unwrap();
            assert!(model.check().is_valid());
            assert_eq!(model.object_count(), 4);
            assert_eq!(model.hom_gamma_required(0, 1), Some(1));
            assert_eq!(model.hom_gamma_required(0, 2), None);
        }
    }

    #[test]
    fn semidirect_matches_ferm_skeletal() {
        let o2 = o2_model();
        let class = ExtensionClass {
            gamma: vec![1],
            xi: vec![vec![0, 0], vec![0, 1]],
        };
        let model = build_ferm_skeletal(&o2, &[0, 1], &class).unwrap();
        // same data as an action of G_b on ℤ₂^c
        let n = z2c_two_group();
        let act = TwoGroupAction {
            on_objects: vec![vec![0, 1], vec![0, 1]],
            on_pi1: vec![
                AbMap::identity(&AbelianGroup::trivial()),
                AbMap::identity(&AbelianGroup::trivial()),
            ],
            rho_mor: vec![1],
            r_cochain: vec![vec![0, 0], vec![0, 1]],
        };
        let semi = semidirect_product(&n, &o2, &act).unwrap();
        // object sets match under (n_obj, g) ↔ (g, ε)
        assert_eq!(semi.objects.len(), model.object_count());
        for (o1, &(n1, g1)) in semi.objects.iter().enumerate() {
            let m1 = model
                .objects
                .iter()
                .position(|&(g, e)| g == g1 && e as usize == n1)
                .unwrap();
            for (o2, &(n2, g2)) in semi.objects.iter().enumerate() {
                let m2 = model
                    .objects
                    .iter()
                    .position(|&(g, e)| g == g2 && e as usize == n2)
                    .unwrap();
                let (ns, gs) = semi.objects[semi.tensor[o1][o2]];
                let (gm, em) = model.objects[model.tensor[m1][m2]];
                assert_eq!((gs, ns), (gm, em as usize), "tensor tables agree");
                // hom descriptors agree
                let sd = semi.hom_delta(o1, o2).map(|d| d as u8);
                assert_eq!(sd, model.hom_gamma_required(m1, m2));
            }
        }
    }

    #[test]
    fn semidirect_trivial_action_is_direct_product() {
        let n = z2c_two_group();
        let g = o2_model();
        let act = TwoGroupAction {
            on_objects: vec![vec![0, 1], vec![0, 1]],
            on_pi1: vec![
                AbMap::identity(&AbelianGroup::trivial()),
                AbMap::identity(&AbelianGroup::trivial()),
            ],
            rho_mor: vec![0],
            r_cochain: vec![vec![0, 0], vec![0, 0]],
        };
        let semi = semidirect_product(&n, &g, &act).unwrap();
        for (o1, &(n1, g1)) in semi.objects.iter().enumerate() {
            for (o2, &(n2, g2)) in semi.objects.iter().enumerate() {
                let (np, gp) = semi.objects[semi.tensor[o1][o2]];
                assert_eq!(np, n.pi0.mul(n1, n2));
                assert_eq!(gp, g.pi0.mul(g1, g2));
            }
        }
    }

    #[test]
    fn z2c_semidirect_bz2f_is_contractible() {
        // ℤ₂^c ⋊ Bℤ₂^F with ρ((−1)^F)_* = c
        let n = z2c_two_group();
        let bz2f = SkeletalTwoGroup::b_z2();
        let act = TwoGroupAction {
            on_objects: vec![vec![0, 1]],
            on_pi1: vec![AbMap::identity(&AbelianGroup::trivial())],
            rho_mor: vec![1],
            r_cochain: vec![vec![0]],
        };
        let semi = semidirect_product(&n, &bz2f, &act).unwrap();
        assert!(semi.is_contractible());
        // with the trivial action it is not: 1 and c stay disconnected
        let act0 = TwoGroupAction {
            on_objects: vec![vec![0, 1]],
            on_pi1: vec![AbMap::identity(&AbelianGroup::trivial())],
            rho_mor: vec![0],
            r_cochain: vec![vec![0]],
        };
        let semi0 = semidirect_product(&n, &bz2f, &act0).unwrap();
        assert!(!semi0.is_contractible());
    }

    #[test]
    fn spin2_action_summary() {
        let o2 = o2_model();
        let class = ExtensionClass {
            gamma: vec![1],
            xi: vec![vec![0, 0], vec![0, 0]],
        };
        let model = build_ferm_skeletal(&o2, &[0, 1], &class).unwrap();
        let summary = spin2_action_data(&model);
        assert_eq!(summary.reverses_eta, vec![false, true]);
        // Ξᵒᵖ = Ξ + θ² has the (r,r) entry flipped
        assert_eq!(summary.xi_op, vec![vec![0, 0], vec![0, 1]]);

        // θ trivial: all g fix η
        let model = build_ferm_skeletal(&o2, &[0, 0], &class).unwrap();
        let summary = spin2_action_data(&model);
        assert!(summary.reverses_eta.iter().all(|&b| !b));
        assert_eq!(summary.xi_op, model.xi);
    }

    #[test]
    fn long_exact_sequence_constraint() {
        // when G is a finite group (π₁ = 0), Γ is necessarily 0
        let finite = z2c_two_group();
        let classes = enumerate_extension_maps(&finite).unwrap();
        assert!(classes.iter().all(|c| c.gamma.is_empty()));
        assert_eq!(classes.len(), 2, "H²(ℤ₂, ℤ₂) = ℤ₂ gives the two extensions");
    }
}
