use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::{GaussianScalar, Rational};
use crate::error::FtftError;

/// Dense matrix over ℚ(i), row-major.
///
/// Row reduction is deterministic under the fixed pivot rule: columns are
/// scanned left to right and the pivot is the first row (in order) with a
/// nonzero entry.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussianScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![GaussianScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianScalar) -> Self {
        let mut m = ExactMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Column vector from a slice.
    pub fn column(v: &[GaussianScalar]) -> Self {
        ExactMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[GaussianScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_vec(&self, j: usize) -> Vec<GaussianScalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussianScalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Self {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, s: &GaussianScalar) -> Self {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] * s)
    }

    pub fn apply(&self, v: &[GaussianScalar]) -> Vec<GaussianScalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussianScalar::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc += &(&self[(i, j)] * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // fixed pivot rule: first row at or below r with a nonzero entry
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(i, j)] - &(&factor * &m[(r, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Some `x` with `A·x = b`, or `None` if inconsistent. Deterministic
    /// representative: free variables are set to zero.
    pub fn solve(&self, b: &[GaussianScalar]) -> Result<Option<Vec<GaussianScalar>>, FtftError> {
        if b.len() != self.rows {
            return Err(FtftError::Dimension(format!(
                "solve: {} rows vs rhs of length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = ExactMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![GaussianScalar::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    /// Echelonized basis of the null space; `A·v = 0` for each `v` and the
    /// basis has `cols − rank` elements.
    pub fn kernel(&self) -> Vec<Vec<GaussianScalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<usize> = pivots.clone();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![GaussianScalar::zero(); self.cols];
            v[free] = GaussianScalar::one();
            for (row, &col) in pivot_set.iter().enumerate() {
                v[col] = -r[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = ExactMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = GaussianScalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        Some(ExactMatrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    pub fn det(&self) -> GaussianScalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = GaussianScalar::one();
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..n).find(|&i| !m[(i, c)].is_zero()) else {
                return GaussianScalar::zero();
            };
            if p != r {
                m.swap_rows(r, p);
                det = -det;
            }
            det = &det * &m[(r, c)];
            let inv = m[(r, c)].inv();
            for i in (r + 1)..n {
                if !m[(i, c)].is_zero() {
                    let factor = &m[(i, c)] * &inv;
                    for j in c..n {
                        let v = &m[(i, j)] - &(&factor * &m[(r, j)]);
                        m[(i, j)] = v;
                    }
                }
            }
            r += 1;
        }
        det
    }

    /// Characteristic polynomial coefficients `[c_0, ..., c_n]` of a square
    /// matrix, `p(λ) = Σ c_k λ^k`, by Faddeev–LeVerrier (exact).
    pub fn char_poly(&self) -> Vec<GaussianScalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![GaussianScalar::zero(); n + 1];
        coeffs[n] = GaussianScalar::one();
        // M_k = A·(M_{k-1} + c_{n-k+1}·I), c_{n-k} = -tr(M_k)/k
        let mut m = ExactMatrix::zeros(n, n);
        for k in 1..=n {
            if k > 1 {
                for i in 0..n {
                    let v = &m[(i, i)] + &coeffs[n - k + 1];
                    m[(i, i)] = v;
                }
            }
            m = if k == 1 { self.clone() } else { self * &m };
            let trace = (0..n).fold(GaussianScalar::zero(), |acc, i| acc + m[(i, i)].clone());
            coeffs[n - k] = &trace * &GaussianScalar::rat(-1, k as i64);
        }
        coeffs
    }

    /// Signature `(n_plus, n_minus)` of a symmetric matrix with rational
    /// entries and (hence) all-real eigenvalues, via Descartes' sign rule on
    /// the characteristic polynomial. Panics if any entry has nonzero
    /// imaginary part or the matrix is not symmetric.
    pub fn symmetric_signature(&self) -> (usize, usize) {
        assert_eq!(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                assert!(self[(i, j)].is_real(), "signature needs a real matrix");
                assert_eq!(self[(i, j)], self[(j, i)], "signature needs symmetry");
            }
        }
        let coeffs: Vec<Rational> = self.char_poly().into_iter().map(|c| c.re).collect();
        let count = |signs: Vec<Rational>| {
            let nonzero: Vec<bool> = signs
                .iter()
                .filter(|c| !c.is_zero())
                .map(|c| c.is_positive())
                .collect();
            nonzero.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let plus = count(coeffs.clone());
        let minus = count(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        );
        (plus, minus)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianScalar;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianScalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianScalar {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, 'b> Mul<&'b ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &'b ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if rhs[(k, j)].is_zero() {
                        continue;
                    }
                    let v = &out[(i, j)] + &(&self[(i, k)] * &rhs[(k, j)]);
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl Mul<ExactMatrix> for ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: ExactMatrix) -> ExactMatrix {
        (&self) * (&rhs)
    }
}

impl<'a, 'b> Add<&'b ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &'b ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl<'a, 'b> Sub<&'b ExactMatrix> for &'a ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &'b ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianScalar {
        GaussianScalar::gauss(a, b)
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = ExactMatrix::identity(2);
        let sol = id.solve(&[g(1, 0), g(0, 1)]).unwrap().unwrap();
        assert_eq!(sol, vec![g(1, 0), g(0, 1)]);

        let zero = ExactMatrix::zeros(1, 1);
        assert!(zero.solve(&[g(1, 0)]).unwrap().is_none());

        // zero representative: free variables set to 0
        let m = ExactMatrix::from_rows(vec![vec![g(1, 0), g(0, 1)]]);
        let sol = m.solve(&[g(0, 0)]).unwrap().unwrap();
        assert_eq!(sol, vec![g(0, 0), g(0, 0)]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(ExactMatrix::zeros(2, 2).kernel().len(), 2);
        assert!(ExactMatrix::identity(3).kernel().is_empty());
        let m = ExactMatrix::from_rows(vec![vec![g(1, 0), g(0, 1)]]);
        let k = m.kernel();
        assert_eq!(k, vec![vec![g(0, -1), g(1, 0)]]);
    }

    #[test]
    fn char_poly_and_signature() {
        // diag(1, -2, 3): char poly has roots {1, -2, 3}
        let mut m = ExactMatrix::zeros(3, 3);
        m[(0, 0)] = g(1, 0);
        m[(1, 1)] = g(-2, 0);
        m[(2, 2)] = g(3, 0);
        assert_eq!(m.symmetric_signature(), (2, 1));
    }

    #[test]
    fn determinant() {
        let m = ExactMatrix::from_rows(vec![vec![g(1, 0), g(2, 0)], vec![g(3, 0), g(4, 0)]]);
        assert_eq!(m.det(), g(-2, 0));
        assert!(!ExactMatrix::identity(4).det().is_zero());
    }
}
