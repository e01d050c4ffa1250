//! Finite fermionic groups: a finite group with a ℤ₂-grading θ (time-reversing
//! vs unitary symmetries) and a central square-one element c modeling fermion
//! parity.
//!
//! Groups are stored as full multiplication tables and checked exhaustively;
//! every fixture in scope has order ≤ 16, so exhaustion is the verification
//! method rather than a fallback.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{FtftError, Result};
use crate::report::CheckReport;

/// Plain finite group as a labeled multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub elements: Vec<String>,
    /// `mult[i][j]` is the index of `elements[i] * elements[j]`.
    pub mult: Vec<Vec<usize>>,
    pub unit: usize,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mult[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        (0..self.order())
            .find(|&j| self.mul(i, j) == self.unit)
            .expect("group table without inverses")
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::new();
        let n = self.order();
        if self.mult.len() != n || self.mult.iter().any(|row| row.len() != n) {
            report.fail("table-shape", format!("mult table is not {n}x{n}"));
            return report;
        }
        if self.mult.iter().flatten().any(|&k| k >= n) || self.unit >= n {
            report.fail("table-range", "index out of range");
            return report;
        }
        for i in 0..n {
            if self.mul(self.unit, i) != i || self.mul(i, self.unit) != i {
                report.fail("unit", format!("unit fails at {}", self.elements[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                        report.fail(
                            "associativity",
                            format!(
                                "({}·{})·{} ≠ {}·({}·{})",
                                self.elements[i],
                                self.elements[j],
                                self.elements[k],
                                self.elements[i],
                                self.elements[j],
                                self.elements[k]
                            ),
                        );
                    }
                }
            }
        }
        for i in 0..n {
            if !(0..n).any(|j| self.mul(i, j) == self.unit) {
                report.fail("inverses", format!("{} has no inverse", self.elements[i]));
            }
        }
        report
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut acc = i;
        while acc != self.unit {
            acc = self.mul(acc, i);
            k += 1;
            assert!(k <= self.order() + 1, "not a group");
        }
        k
    }

    pub fn center_size(&self) -> usize {
        (0..self.order())
            .filter(|&z| (0..self.order()).all(|g| self.mul(z, g) == self.mul(g, z)))
            .count()
    }
}

/// Finite fermionic group `(G, c, θ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FermionicGroup {
    pub table: GroupTable,
    /// Index of the even central square-one element c (fermion parity).
    pub c: usize,
    /// θ(g) ∈ {0,1}; 1 marks time-reversing elements.
    pub theta: Vec<u8>,
}

/// Normalized ℤ₂-valued 2-cochain on a finite group, recording c-powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocycle2 {
    pub vals: Vec<Vec<u8>>,
}

impl Cocycle2 {
    pub fn zero(n: usize) -> Self {
        Cocycle2 {
            vals: vec![vec![0; n]; n],
        }
    }

    pub fn get(&self, g: usize, h: usize) -> u8 {
        self.vals[g][h]
    }

    /// Normalization plus the 2-cocycle identity over ℤ₂ (trivial action).
    pub fn check(&self, base: &GroupTable) -> CheckReport {
        let mut report = CheckReport::new();
        let n = base.order();
        if self.vals.len() != n || self.vals.iter().any(|r| r.len() != n) {
            report.fail("table-shape", "cocycle table has wrong shape");
            return report;
        }
        for g in 0..n {
            if self.get(base.unit, g) != 0 || self.get(g, base.unit) != 0 {
                report.fail("normalized", format!("nonzero on unit at {g}"));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    let lhs = self.get(g, h) ^ self.get(base.mul(g, h), k);
                    let rhs = self.get(h, k) ^ self.get(g, base.mul(h, k));
                    if lhs != rhs {
                        report.fail("cocycle", format!("identity fails at ({g},{h},{k})"));
                    }
                }
            }
        }
        report
    }

    /// Pointwise sum (Baer sum of the classified extensions).
    pub fn add(&self, other: &Cocycle2) -> Cocycle2 {
        Cocycle2 {
            vals: self
                .vals
                .iter()
                .zip(&other.vals)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x ^ y).collect())
                .collect(),
        }
    }
}

/// Invariant fingerprint used to compare groups above the exhaustive-search
/// bound (order > 8) and to prune the search below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub order: usize,
    pub odd_count: usize,
    pub center_size: usize,
    pub c_order: usize,
    /// (element order, θ) → multiplicity.
    pub order_theta_histogram: BTreeMap<(usize, u8), usize>,
}

impl FermionicGroup {
    pub fn new(table: GroupTable, c: usize, theta: Vec<u8>) -> Self {
        FermionicGroup { table, c, theta }
    }

    /// Convenience constructor from labels.
    pub fn from_labels(
        elements: Vec<&str>,
        unit: &str,
        c: &str,
        odd: &[&str],
        products: &[(&str, &str, &str)],
    ) -> Result<Self> {
        let elements: Vec<String> = elements.into_iter().map(String::from).collect();
        let n = elements.len();
        let idx = |l: &str| -> Result<usize> {
            elements
                .iter()
                .position(|e| e == l)
                .ok_or_else(|| FtftError::Structural(format!("unknown label {l}")))
        };
        let mut mult = vec![vec![usize::MAX; n]; n];
        for (a, b, ab) in products {
            mult[idx(a)?][idx(b)?] = idx(ab)?;
        }
        if mult.iter().flatten().any(|&v| v == usize::MAX) {
            return Err(FtftError::Structural("incomplete multiplication table".into()));
        }
        let unit = idx(unit)?;
        let c = idx(c)?;
        let mut theta = vec![0u8; n];
        for o in odd {
            theta[idx(o)?] = 1;
        }
        Ok(FermionicGroup::new(GroupTable { elements, mult, unit }, c, theta))
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn unit(&self) -> usize {
        self.table.unit
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table.mul(i, j)
    }

    pub fn inv(&self, i: usize) -> usize {
        self.table.inv(i)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.table.elements[i]
    }

    pub fn theta(&self, i: usize) -> u8 {
        self.theta[i]
    }

    pub fn c_is_trivial(&self) -> bool {
        self.c == self.table.unit
    }

    /// Full validation report: group axioms, centrality and square of c,
    /// θ a homomorphism with θ(c) = 0.
    pub fn check(&self) -> CheckReport {
        let mut report = self.table.check();
        if !report.is_valid() {
            return report;
        }
        let n = self.order();
        if self.theta.len() != n {
            report.fail("table-shape", "theta has wrong length");
            return report;
        }
        if self.c >= n {
            report.fail("table-range", "c out of range");
            return report;
        }
        if self.mul(self.c, self.c) != self.unit() {
            report.fail("c-square", "c·c ≠ 1");
        }
        for g in 0..n {
            if self.mul(self.c, g) != self.mul(g, self.c) {
                report.fail("c-central", format!("c does not commute with {}", self.label(g)));
            }
        }
        if self.theta(self.c) != 0 {
            report.fail("c-even", "θ(c) ≠ 0");
        }
        for g in 0..n {
            for h in 0..n {
                if self.theta(self.mul(g, h)) != self.theta(g) ^ self.theta(h) {
                    report.fail(
                        "grading",
                        format!("θ({}·{}) ≠ θ+θ", self.label(g), self.label(h)),
                    );
                }
            }
        }
        report
    }

    /// Opposite fermionic group: `g₁ ∗ᵒᵖ g₂ = c^{θ(g₁)θ(g₂)} g₂ g₁`.
    pub fn opposite(&self) -> FermionicGroup {
        let n = self.order();
        let mut mult = vec![vec![0usize; n]; n];
        for (g1, row) in mult.iter_mut().enumerate() {
            for (g2, entry) in row.iter_mut().enumerate() {
                let base = self.mul(g2, g1);
                *entry = if self.theta(g1) & self.theta(g2) == 1 {
                    self.mul(self.c, base)
                } else {
                    base
                };
            }
        }
        FermionicGroup::new(
            GroupTable {
                elements: self.table.elements.clone(),
                mult,
                unit: self.table.unit,
            },
            self.c,
            self.theta.clone(),
        )
    }

    /// Preferred representative of the coset `{g, cg}`: the smaller index in
    /// element order, for deterministic quotients and tensor products.
    fn coset_rep(&self, g: usize) -> usize {
        g.min(self.mul(self.c, g))
    }

    /// Fermionic tensor product `G ⊗ H`: the quotient of `G × H` identifying
    /// `(c_G, c_H)`, with `(g₁⊗h₁)(g₂⊗h₂) = c^{θ_G(g₂)θ_H(h₁)} g₁g₂ ⊗ h₁h₂`.
    /// Representatives are chosen so the second component never carries the
    /// identified c.
    pub fn fermionic_tensor(&self, other: &FermionicGroup) -> Result<FermionicGroup> {
        if self.c_is_trivial() || other.c_is_trivial() {
            return Err(FtftError::Unsupported(
                "fermionic tensor needs nontrivial c in both factors".into(),
            ));
        }
        let canon = |g: usize, h: usize| -> (usize, usize) {
            if other.coset_rep(h) == h {
                (g, h)
            } else {
                (self.mul(self.c, g), other.mul(other.c, h))
            }
        };
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for g in 0..self.order() {
            for h in 0..other.order() {
                let p = canon(g, h);
                if !pairs.contains(&p) {
                    pairs.push(p);
                }
            }
        }
        let pair_index = |p: (usize, usize)| pairs.iter().position(|&q| q == p).unwrap();
        let elements: Vec<String> = pairs
            .iter()
            .map(|&(g, h)| format!("{}⊗{}", self.label(g), other.label(h)))
            .collect();
        let n = pairs.len();
        let mut mult = vec![vec![0usize; n]; n];
        for (a, &(g1, h1)) in pairs.iter().enumerate() {
            for (b, &(g2, h2)) in pairs.iter().enumerate() {
                let mut g = self.mul(g1, g2);
                if self.theta(g2) & other.theta(h1) == 1 {
                    g = self.mul(self.c, g);
                }
                let h = other.mul(h1, h2);
                mult[a][b] = pair_index(canon(g, h));
            }
        }
        let unit = pair_index(canon(self.unit(), other.unit()));
        let c = pair_index(canon(self.c, other.unit()));
        let theta = pairs
            .iter()
            .map(|&(g, h)| self.theta(g) ^ other.theta(h))
            .collect();
        Ok(FermionicGroup::new(GroupTable { elements, mult, unit }, c, theta))
    }

    /// Bosonic quotient `G_b = G/{1,c}` with the fixed first-representative
    /// section and the extension 2-cocycle `ω(g,h)` defined by
    /// `s(g)s(h) = c^{ω(g,h)} s(gh)`.
    pub fn bosonic_quotient(&self) -> Result<(FermionicGroup, Cocycle2, Vec<usize>)> {
        if self.c_is_trivial() {
            return Err(FtftError::Unsupported("bosonic quotient needs c ≠ 1".into()));
        }
        let mut section: Vec<usize> = Vec::new();
        for g in 0..self.order() {
            if self.coset_rep(g) == g {
                section.push(g);
            }
        }
        let class_of = |g: usize| section.iter().position(|&r| r == self.coset_rep(g)).unwrap();
        let n = section.len();
        let elements: Vec<String> = section.iter().map(|&g| self.label(g).to_string()).collect();
        let mut mult = vec![vec![0usize; n]; n];
        let mut omega = vec![vec![0u8; n]; n];
        for a in 0..n {
            for b in 0..n {
                let prod = self.mul(section[a], section[b]);
                mult[a][b] = class_of(prod);
                omega[a][b] = u8::from(self.coset_rep(prod) != prod);
            }
        }
        let unit = class_of(self.unit());
        let theta = section.iter().map(|&g| self.theta(g)).collect();
        let gb = FermionicGroup::new(GroupTable { elements, mult, unit }, unit, theta);
        Ok((gb, Cocycle2 { vals: omega }, section))
    }

    /// The d = 1 spacetime structure group `H₁ ≅ G^op`, carrying its map to
    /// `O₁ = ℤ₂` as the grading θ.
    pub fn spacetime_group_1d(&self) -> FermionicGroup {
        self.opposite()
    }

    /// True iff `map` (indices of `self` → indices of `other`) is a bijective
    /// homomorphism preserving c and θ.
    pub fn iso_witness_check(&self, other: &FermionicGroup, map: &[usize]) -> bool {
        if map.len() != self.order() || self.order() != other.order() {
            return false;
        }
        if map.iter().any(|&v| v >= other.order()) {
            return false;
        }
        let mut seen = vec![false; other.order()];
        for &v in map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if map[self.c] != other.c {
            return false;
        }
        for g in 0..self.order() {
            if self.theta(g) != other.theta(map[g]) {
                return false;
            }
            for h in 0..self.order() {
                if map[self.mul(g, h)] != other.mul(map[g], map[h]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        let mut histogram = BTreeMap::new();
        for g in 0..self.order() {
            *histogram
                .entry((self.table.element_order(g), self.theta(g)))
                .or_insert(0) += 1;
        }
        GroupFingerprint {
            order: self.order(),
            odd_count: self.theta.iter().filter(|&&t| t == 1).count(),
            center_size: self.table.center_size(),
            c_order: self.table.element_order(self.c),
            order_theta_histogram: histogram,
        }
    }

    /// Exhaustive isomorphism search for order ≤ 8 (witness-producing).
    /// Larger groups are compared by fingerprint only; `Err` signals that the
    /// bound was exceeded rather than a negative answer.
    pub fn find_isomorphism(&self, other: &FermionicGroup) -> Result<Option<Vec<usize>>> {
        if self.order() != other.order() || self.fingerprint() != other.fingerprint() {
            return Ok(None);
        }
        if self.order() > 8 {
            return Err(FtftError::BoundExceeded(
                "exhaustive isomorphism search is limited to order ≤ 8".into(),
            ));
        }
        let n = self.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.unit()] = other.unit();
        used[other.unit()] = true;
        if self.c != self.unit() {
            if other.c == other.unit() {
                return Ok(None);
            }
            map[self.c] = other.c;
            used[other.c] = true;
        } else if other.c != other.unit() {
            return Ok(None);
        }

        fn extend(
            g: &FermionicGroup,
            h: &FermionicGroup,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let Some(next) = (0..g.order()).find(|&i| map[i] == usize::MAX) else {
                return (0..g.order()).all(|a| {
                    (0..g.order()).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b]))
                });
            };
            for cand in 0..h.order() {
                if used[cand]
                    || g.theta(next) != h.theta(cand)
                    || g.table.element_order(next) != h.table.element_order(cand)
                {
                    continue;
                }
                map[next] = cand;
                used[cand] = true;
                // close under known products before recursing
                let consistent = (0..g.order()).all(|a| {
                    if map[a] == usize::MAX {
                        return true;
                    }
                    let p1 = g.mul(a, next);
                    let p2 = g.mul(next, a);
                    let q1 = h.mul(map[a], cand);
                    let q2 = h.mul(cand, map[a]);
                    (map[p1] == usize::MAX || map[p1] == q1)
                        && (map[p2] == usize::MAX || map[p2] == q2)
                });
                if consistent && extend(g, h, map, used) {
                    return true;
                }
                map[next] = usize::MAX;
                used[cand] = false;
            }
            false
        }

        if extend(self, other, &mut map, &mut used) {
            Ok(Some(map))
        } else {
            Ok(None)
        }
    }
}

/// θ∪θ as a 2-cochain on the bosonic quotient: `(g,h) ↦ θ(g)θ(h)`.
pub fn theta_cup_theta(gb: &FermionicGroup) -> Cocycle2 {
    let n = gb.order();
    let mut vals = vec![vec![0u8; n]; n];
    for (g, row) in vals.iter_mut().enumerate() {
        for (h, v) in row.iter_mut().enumerate() {
            *v = gb.theta(g) & gb.theta(h);
        }
    }
    Cocycle2 { vals }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn pin1_minus_is_valid_and_its_opposite_is_pin1_plus() {
        let pm = fixtures::pin1_minus();
        assert!(pm.check().is_valid());
        let op = pm.opposite();
        assert!(op.check().is_valid());
        let pp = fixtures::pin1_plus();
        let iso = op.find_isomorphism(&pp).unwrap();
        assert!(iso.is_some());
        // T squares to 1 in the opposite
        let t = op.table.index_of("T").unwrap();
        assert_eq!(op.mul(t, t), op.unit());
        // involution
        assert_eq!(op.opposite().table, pm.table);
    }

    #[test]
    fn bosonic_graded_abelian_opposite_is_identity() {
        let g = fixtures::z2c();
        assert_eq!(g.opposite().table, g.table);
    }

    #[test]
    fn tensor_with_trivial_fermionic_group_is_identity() {
        let g = fixtures::pin1_minus();
        let t = g.fermionic_tensor(&fixtures::z2c()).unwrap();
        let iso = t.find_isomorphism(&g).unwrap();
        assert!(iso.is_some(), "G ⊗ Z2^c should be G");
    }

    #[test]
    fn pin1_plus_tensor_squared_is_dihedral() {
        let pp = fixtures::pin1_plus();
        let t = pp.fermionic_tensor(&pp).unwrap();
        assert!(t.check().is_valid());
        assert_eq!(t.order(), 8);
        // two anticommuting odd square-one generators
        let a = t.table.index_of("T⊗1").unwrap();
        let b = t.table.index_of("1⊗T").unwrap();
        assert_eq!(t.theta(a), 1);
        assert_eq!(t.theta(b), 1);
        assert_eq!(t.mul(a, a), t.unit());
        assert_eq!(t.mul(b, b), t.unit());
        assert_eq!(t.mul(a, b), t.mul(t.c, t.mul(b, a)));
        // D4 reference: generators r (order 4), s (order 2), c = r^2
        let d4 = fixtures::d8_reference();
        assert!(d4.check().is_valid());
        assert!(t.find_isomorphism(&d4).unwrap().is_some());
    }

    #[test]
    fn bosonic_quotient_of_pin1_minus() {
        let pm = fixtures::pin1_minus();
        let (gb, omega, section) = pm.bosonic_quotient().unwrap();
        assert!(gb.check().is_valid());
        assert!(gb.c_is_trivial());
        assert_eq!(gb.order(), 2);
        assert!(omega.check(&gb.table).is_valid());
        let t = gb.table.index_of("T").unwrap();
        assert_eq!(omega.get(t, t), 1, "T·T = c detects the Z4 extension");
        assert_eq!(section.len(), 2);
    }

    #[test]
    fn split_extension_has_zero_cocycle() {
        let pp = fixtures::pin1_plus();
        let (_, omega, _) = pp.bosonic_quotient().unwrap();
        assert!(omega.vals.iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn opposite_twists_omega_by_theta_cup_theta() {
        // Pointwise, the fixed section gives ω_op(g,h) = ω(h,g) + θ(g)θ(h);
        // the class of ω(h,g) equals the class of ω(g,h), so this realizes the
        // twist (θ, ω) ↦ (θ, ω + θ²) on cohomology classes.
        for g in [fixtures::pin1_minus(), fixtures::pin1_plus(), fixtures::q8()] {
            let (gb, omega, _) = g.bosonic_quotient().unwrap();
            let (gb_op, omega_op, _) = g.opposite().bosonic_quotient().unwrap();
            assert_eq!(gb.table, gb_op.table, "abelian quotient unchanged");
            let n = gb.order();
            let transposed = Cocycle2 {
                vals: (0..n)
                    .map(|a| (0..n).map(|b| omega.get(b, a)).collect())
                    .collect(),
            };
            assert_eq!(omega_op, transposed.add(&theta_cup_theta(&gb)));
            // and ω(h,g) is cohomologous to ω(g,h): their difference is a
            // coboundary dσ, found by exhaustive search over σ (order ≤ 4)
            let diff = omega.add(&transposed);
            let found = (0..(1u32 << n)).any(|mask| {
                let sigma: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
                sigma[gb.unit()] == 0
                    && (0..n).all(|a| {
                        (0..n).all(|b| {
                            diff.get(a, b) == sigma[a] ^ sigma[b] ^ sigma[gb.mul(a, b)]
                        })
                    })
            });
            assert!(found, "transpose changes ω only by a coboundary");
        }
    }

    #[test]
    fn spacetime_1d_tenfold_rows() {
        let pm = fixtures::pin1_minus();
        let pp = fixtures::pin1_plus();
        let s1 = fixtures::spin1();
        assert!(pm
            .spacetime_group_1d()
            .find_isomorphism(&pp)
            .unwrap()
            .is_some());
        assert!(pp
            .spacetime_group_1d()
            .find_isomorphism(&pm)
            .unwrap()
            .is_some());
        assert!(s1
            .spacetime_group_1d()
            .find_isomorphism(&s1)
            .unwrap()
            .is_some());
        // split bosonic-graded case (θ ≡ 0): H1 equals the group itself
        let split = fixtures::z2c_x_z2_bosonic();
        assert_eq!(split.spacetime_group_1d().table, split.table);
    }

    #[test]
    fn no_iso_between_pin_plus_and_pin_minus() {
        let pm = fixtures::pin1_minus();
        let pp = fixtures::pin1_plus();
        assert!(pp.find_isomorphism(&pm).unwrap().is_none());
    }

    #[test]
    fn q8_generator_swap_is_an_iso_witness() {
        let q8 = fixtures::q8();
        assert!(q8.check().is_valid());
        // i ↔ j, k ↦ -k
        let idx = |l: &str| q8.table.index_of(l).unwrap();
        let mut map = vec![0usize; 8];
        for (a, b) in [
            ("1", "1"),
            ("-1", "-1"),
            ("i", "j"),
            ("-i", "-j"),
            ("j", "i"),
            ("-j", "-i"),
            ("k", "-k"),
            ("-k", "k"),
        ] {
            map[idx(a)] = idx(b);
        }
        assert!(q8.iso_witness_check(&q8, &map));
        let identity: Vec<usize> = (0..8).collect();
        assert!(q8.iso_witness_check(&q8, &identity));
    }

    #[test]
    fn tensor_associativity_and_swap_on_fixtures() {
        let fixtures = [fixtures::pin1_minus(), fixtures::pin1_plus(), fixtures::spin1()];
        for a in &fixtures {
            for b in &fixtures {
                // explicit swap witness g⊗h ↦ c^{θ(g)θ(h)} h⊗g
                let ab = a.fermionic_tensor(b).unwrap();
                let ba = b.fermionic_tensor(a).unwrap();
                assert!(ab.check().is_valid());
                let map: Vec<usize> = (0..ab.order())
                    .map(|e| {
                        let (gl, hl) = ab.label(e).split_once('⊗').unwrap();
                        let g = a.table.index_of(gl).unwrap();
                        let h = b.table.index_of(hl).unwrap();
                        // the swapped pair or its (c,c)-translate: whichever is canonical
                        let swapped = format!("{}⊗{}", b.label(h), a.label(g));
                        let translate = format!(
                            "{}⊗{}",
                            b.label(b.mul(b.c, h)),
                            a.label(a.mul(a.c, g))
                        );
                        let mut idx = ba
                            .table
                            .index_of(&swapped)
                            .or_else(|| ba.table.index_of(&translate))
                            .unwrap();
                        if a.theta(g) & b.theta(h) == 1 {
                            idx = ba.mul(ba.c, idx);
                        }
                        idx
                    })
                    .collect();
                assert!(ab.iso_witness_check(&ba, &map), "swap witness G⊗H → H⊗G");
                for c in &fixtures {
                    // strict associativity: the identity relabeling is a witness
                    let left = ab.fermionic_tensor(c).unwrap();
                    let right = a.fermionic_tensor(&b.fermionic_tensor(c).unwrap()).unwrap();
                    assert_eq!(left.table.elements, right.table.elements);
                    let identity: Vec<usize> = (0..left.order()).collect();
                    assert!(left.iso_witness_check(&right, &identity));
                }
            }
        }
    }

    #[test]
    fn even_part_of_tensor_is_again_fermionic() {
        // (G⊗H)₀ carries the residual bigrading θ_G = θ_H and forms another
        // fermionic group
        let g = fixtures::pin1_minus();
        let h = fixtures::pin1_plus();
        let t = g.fermionic_tensor(&h).unwrap();
        let even: Vec<usize> = (0..t.order()).filter(|&e| t.theta(e) == 0).collect();
        let sub_index = |e: usize| even.iter().position(|&x| x == e).unwrap();
        let elements: Vec<String> = even.iter().map(|&e| t.label(e).to_string()).collect();
        let mult: Vec<Vec<usize>> = even
            .iter()
            .map(|&a| even.iter().map(|&b| sub_index(t.mul(a, b))).collect())
            .collect();
        let theta: Vec<u8> = even
            .iter()
            .map(|&e| {
                let (gl, _) = t.label(e).split_once('⊗').unwrap();
                g.theta(g.table.index_of(gl).unwrap())
            })
            .collect();
        let even_group = FermionicGroup::new(
            GroupTable {
                elements,
                mult,
                unit: sub_index(t.unit()),
            },
            sub_index(t.c),
            theta,
        );
        assert!(even_group.check().is_valid(), "{}", even_group.check());
        assert_eq!(even_group.order(), t.order() / 2);
    }

    #[test]
    fn invalid_inputs_are_reported() {
        // theta not a homomorphism
        let mut bad = fixtures::pin1_plus();
        bad.theta = vec![0, 1, 0, 0];
        assert!(bad.check().names_clause("grading"));
        // c not central in an S3-style table
        let s3 = fixtures::s3_with_fake_c();
        let report = s3.check();
        assert!(report.names_clause("c-central") || report.names_clause("c-square"));
    }
}
