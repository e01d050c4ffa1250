//! Small normal-form engine for algebras presented by anticommuting-type
//! generators: each generator has a super parity, a square (a scalar times a
//! monomial in later generators), and pairwise commutation signs. Monomials
//! are square-free sorted words, so the basis is indexed by subsets.

use crate::exactlin::GaussianScalar;
use crate::salg::{FieldTag, Superalgebra};

#[derive(Debug, Clone)]
pub struct GenSpec {
    pub name: String,
    pub parity: u8,
    /// g² = scalar · (monomial over the generator set, as a sorted index list)
    pub square: (GaussianScalar, Vec<usize>),
    /// commutation signs with earlier generators: g_v g_u = comm[u] · g_u g_v
    /// for u < v (indexed by u)
    pub comm: Vec<i8>,
}

#[derive(Debug, Clone)]
pub struct GenAlgebra {
    pub gens: Vec<GenSpec>,
}

impl GenAlgebra {
    pub fn dim(&self) -> usize {
        1 << self.gens.len()
    }

    fn mask_to_word(mask: usize) -> Vec<usize> {
        (0..usize::BITS as usize)
            .filter(|b| mask >> b & 1 == 1)
            .collect()
    }

    fn word_to_mask(word: &[usize]) -> usize {
        word.iter().fold(0, |m, &b| m | (1 << b))
    }

    /// Normalize a word to scalar · (sorted square-free word).
    pub fn normalize(&self, word: &[usize], scalar: GaussianScalar) -> (GaussianScalar, usize) {
        let mut w = word.to_vec();
        let mut s = scalar;
        'outer: loop {
            for pos in 0..w.len().saturating_sub(1) {
                let (a, b) = (w[pos], w[pos + 1]);
                if a > b {
                    // g_a g_b = comm · g_b g_a with comm = gens[a].comm[b]
                    s = &s * &GaussianScalar::from_int(self.gens[a].comm[b] as i64);
                    w.swap(pos, pos + 1);
                    continue 'outer;
                }
                if a == b {
                    let (sq_scalar, sq_word) = self.gens[a].square.clone();
                    s = &s * &sq_scalar;
                    w.splice(pos..pos + 2, sq_word);
                    continue 'outer;
                }
            }
            break;
        }
        (s, Self::word_to_mask(&w))
    }

    pub fn mul_monomials(&self, m1: usize, m2: usize) -> (GaussianScalar, usize) {
        let mut word = Self::mask_to_word(m1);
        word.extend(Self::mask_to_word(m2));
        self.normalize(&word, GaussianScalar::one())
    }

    pub fn parity_of_mask(&self, mask: usize) -> u8 {
        Self::mask_to_word(mask)
            .iter()
            .map(|&g| self.gens[g].parity)
            .fold(0, |a, b| a ^ b)
    }

    pub fn name_of_mask(&self, mask: usize) -> String {
        if mask == 0 {
            return "1".into();
        }
        Self::mask_to_word(mask)
            .iter()
            .map(|&g| self.gens[g].name.clone())
            .collect::<Vec<_>>()
            .join("·")
    }

    /// The presented algebra as a real superalgebra on the subset basis.
    pub fn superalgebra(&self, field: FieldTag) -> Superalgebra {
        let d = self.dim();
        let mut mult = vec![GaussianScalar::zero(); d * d * d];
        for m1 in 0..d {
            for m2 in 0..d {
                let (s, m) = self.mul_monomials(m1, m2);
                if !s.is_zero() {
                    mult[(m1 * d + m2) * d + m] = s;
                }
            }
        }
        let parity = (0..d).map(|m| self.parity_of_mask(m)).collect();
        let names = (0..d).map(|m| self.name_of_mask(m)).collect();
        let mut unit = vec![GaussianScalar::zero(); d];
        unit[0] = GaussianScalar::one();
        Superalgebra::new(field, parity, unit, mult, names)
    }

    /// Extend generator-level daggers (scalar · monomial per generator,
    /// reversing words without Koszul signs) to the whole basis, as the matrix
    /// of a real-linear map.
    pub fn dagger_matrix(
        &self,
        gen_daggers: &[(GaussianScalar, Vec<usize>)],
    ) -> crate::ExactMatrix {
        let d = self.dim();
        let mut out = crate::ExactMatrix::zeros(d, d);
        for mask in 0..d {
            // (g_{u1}···g_{uk})† = g_{uk}†···g_{u1}†
            let mut word: Vec<usize> = Vec::new();
            let mut scalar = GaussianScalar::one();
            for &g in Self::mask_to_word(mask).iter().rev() {
                let (s, w) = &gen_daggers[g];
                scalar = &scalar * s;
                word.extend(w.iter().copied());
            }
            let (s, m) = self.normalize(&word, scalar);
            if !s.is_zero() {
                out[(m, mask)] = s;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_via_presentation_matches_constructor() {
        // Cl(1,1): e1² = 1, e2² = −1, anticommuting odd generators
        let ga = GenAlgebra {
            gens: vec![
                GenSpec {
                    name: "e1".into(),
                    parity: 1,
                    square: (GaussianScalar::one(), vec![]),
                    comm: vec![],
                },
                GenSpec {
                    name: "e2".into(),
                    parity: 1,
                    square: (-GaussianScalar::one(), vec![]),
                    comm: vec![-1],
                },
            ],
        };
        let a = ga.superalgebra(FieldTag::Real);
        let cl = crate::salg::clifford(1, 1, FieldTag::Real).unwrap();
        assert_eq!(a, cl);
    }

    #[test]
    fn square_with_monomial_value() {
        // x_T² = x with x² = 1, commuting
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
            ],
        };
        let a = ga.superalgebra(FieldTag::Real);
        assert!(a.check().is_valid());
        // (xT)·(xT·x) = x·x = 1
        let (s, m) = ga.mul_monomials(0b01, 0b11);
        assert!(s.is_one());
        assert_eq!(m, 0);
    }
}
