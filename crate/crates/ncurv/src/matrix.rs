//! Dense matrices over either scalar backend, with backend-appropriate rank
//! and spectral routines: fraction-free elimination for exact scalars,
//! SVD/eigenvalue thresholds for floats.

use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};
use crate::scalar::{Exact, Scalar, F64};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<S: Scalar> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Mat::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn adjoint(&self) -> Mat<S> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn mul(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out: Mat<S> = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.clone() * rhs[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + term;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch("matrix addition".into()));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Mat<S>) -> Result<Mat<S>> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch("matrix subtraction".into()));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.rows.min(self.cols) {
            acc = acc + self[(i, i)].clone();
        }
        acc
    }

    /// x ↦ M x on a dense coordinate vector.
    pub fn apply_vec(&self, x: &[S]) -> Result<Vec<S>> {
        if x.len() != self.cols {
            return Err(Error::ShapeMismatch("matrix-vector product".into()));
        }
        let mut out = vec![S::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)].clone();
                if a.is_zero() {
                    continue;
                }
                out[i] = out[i].clone() + a * x[j].clone();
            }
        }
        Ok(out)
    }

    pub fn to_complex_dmatrix(&self) -> DMatrix<Complex<f64>> {
        DMatrix::from_fn(self.rows, self.cols, |i, j| {
            let (re, im) = self[(i, j)].to_f64();
            Complex::new(re, im)
        })
    }
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for Mat<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for Mat<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

/// Backend-specific linear algebra on top of the shared scalar interface.
pub trait Backend: Scalar {
    /// Matrix rank. The float backend counts singular values above
    /// tol · max(1, σ_max); the exact backend ignores tol.
    fn mat_rank(m: &Mat<Self>, tol: f64) -> usize;

    /// Largest eigenvalue of a Hermitian matrix, as f64 (used for
    /// contractivity reports in both backends).
    fn herm_eig_max(m: &Mat<Self>) -> f64;

    /// Positive semidefiniteness of a Hermitian matrix. Exact backend:
    /// decided exactly; float backend: smallest eigenvalue ≥ −tol.
    fn herm_psd(m: &Mat<Self>, tol: f64) -> bool;
}

/// Fraction-free (Bareiss) Gaussian elimination with full pivoting.
/// Entry updates a_ij ← (a_ij·p − a_ik·a_kj)/p_prev stay in the ring of
/// minors; divisions are exact. Rank = number of nonzero pivots.
fn bareiss_rank(m: &Mat<Exact>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = Exact::one();
    let mut rank = 0usize;
    let mut row = 0usize;
    let mut col = 0usize;
    while row < rows && col < cols {
        // find a nonzero pivot in the remaining block
        let mut pivot = None;
        'search: for i in row..rows {
            for j in col..cols {
                if !a[(i, j)].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        // swap pivot into place
        if pi != row {
            for j in 0..cols {
                let tmp = a[(row, j)].clone();
                a[(row, j)] = a[(pi, j)].clone();
                a[(pi, j)] = tmp;
            }
        }
        if pj != col {
            for i in 0..rows {
                let tmp = a[(i, col)].clone();
                a[(i, col)] = a[(i, pj)].clone();
                a[(i, pj)] = tmp;
            }
        }
        let p = a[(row, col)].clone();
        for i in (row + 1)..rows {
            for j in (col + 1)..cols {
                let num = a[(i, j)].clone() * p.clone()
                    - a[(i, col)].clone() * a[(row, j)].clone();
                a[(i, j)] = num
                    .div(&prev)
                    .expect("Bareiss division by previous pivot is exact");
            }
            a[(i, col)] = Exact::zero();
        }
        prev = p;
        rank += 1;
        row += 1;
        col += 1;
    }
    rank
}

/// Exact positive-semidefiniteness of a Hermitian matrix via pivoted
/// LDL*: all pivots must be non-negative reals, and a zero diagonal pivot
/// forces its whole row/column to vanish.
fn exact_herm_psd(m: &Mat<Exact>) -> bool {
    let dim = m.rows;
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..dim).collect();
    while !active.is_empty() {
        // pick the largest remaining diagonal entry as pivot
        let mut best: Option<(usize, Exact)> = None;
        for &i in &active {
            let d = a[(i, i)].clone();
            if !d.is_real() {
                return false;
            }
            match &best {
                None => best = Some((i, d)),
                Some((_, bd)) => {
                    if d.cmp_real(bd) == Some(std::cmp::Ordering::Greater) {
                        best = Some((i, d));
                    }
                }
            }
        }
        let (piv, d) = best.unwrap();
        if d.cmp_real(&Exact::zero()) == Some(std::cmp::Ordering::Less) {
            return false;
        }
        active.retain(|&i| i != piv);
        if d.is_zero() {
            // PSD forces the whole pivot row/column to be zero
            for &i in &active {
                if !a[(piv, i)].is_zero() || !a[(i, piv)].is_zero() {
                    return false;
                }
            }
            continue;
        }
        // Schur complement on the remaining block
        for &i in &active {
            for &j in &active {
                let corr = a[(i, piv)].clone() * a[(piv, j)].clone();
                let corr = corr.div(&d).unwrap();
                a[(i, j)] = a[(i, j)].clone() - corr;
            }
        }
        for &i in &active.clone() {
            a[(i, piv)] = Exact::zero();
            a[(piv, i)] = Exact::zero();
        }
    }
    true
}

fn float_herm_eigs(m: &Mat<F64>) -> Vec<f64> {
    let dm = m.to_complex_dmatrix();
    // symmetrize to wash out representation noise before the solver
    let h = (dm.clone() + dm.adjoint()) * Complex::new(0.5, 0.0);
    h.symmetric_eigen().eigenvalues.iter().copied().collect()
}

impl Backend for Exact {
    fn mat_rank(m: &Mat<Self>, _tol: f64) -> usize {
        bareiss_rank(m)
    }

    fn herm_eig_max(m: &Mat<Self>) -> f64 {
        let fm = Mat::<F64>::from_fn(m.rows, m.cols, |i, j| {
            let (re, im) = m[(i, j)].to_f64();
            F64::new(re, im)
        });
        float_herm_eigs(&fm).into_iter().fold(f64::NEG_INFINITY, f64::max)
    }

    fn herm_psd(m: &Mat<Self>, _tol: f64) -> bool {
        exact_herm_psd(m)
    }
}

impl Backend for F64 {
    fn mat_rank(m: &Mat<Self>, tol: f64) -> usize {
        if m.rows == 0 || m.cols == 0 {
            return 0;
        }
        let svd = m.to_complex_dmatrix().svd(false, false);
        let smax = svd.singular_values.iter().copied().fold(0.0f64, f64::max);
        let threshold = tol * smax.max(1.0);
        svd.singular_values.iter().filter(|&&s| s > threshold).count()
    }

    fn herm_eig_max(m: &Mat<Self>) -> f64 {
        float_herm_eigs(m).into_iter().fold(f64::NEG_INFINITY, f64::max)
    }

    fn herm_psd(m: &Mat<Self>, tol: f64) -> bool {
        float_herm_eigs(m).into_iter().all(|e| e >= -tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(v: i64, d: i64) -> Exact {
        Exact::from_ratio(v, d)
    }

    #[test]
    fn bareiss_rank_basic() {
        let m = Mat::from_fn(3, 3, |i, j| exact((i + j) as i64, 1));
        // rows are arithmetic progressions: rank 2
        assert_eq!(Exact::mat_rank(&m, 0.0), 2);
        assert_eq!(Exact::mat_rank(&Mat::<Exact>::identity(4), 0.0), 4);
        assert_eq!(Exact::mat_rank(&Mat::<Exact>::zeros(3, 5), 0.0), 0);
    }

    #[test]
    fn bareiss_rank_near_degenerate_is_exact() {
        // rank-1 Gram matrix of a vector with awkward rational entries
        let v = [exact(1, 3), exact(1, 7), exact(2, 11)];
        let m = Mat::from_fn(3, 3, |i, j| v[i].clone() * v[j].clone());
        assert_eq!(Exact::mat_rank(&m, 0.0), 1);
    }

    #[test]
    fn exact_rank_independent_of_row_order() {
        let rows = [
            [exact(1, 2), exact(1, 3), exact(0, 1)],
            [exact(2, 1), exact(4, 3), exact(0, 1)],
            [exact(0, 1), exact(0, 1), exact(5, 7)],
        ];
        let m = Mat::from_fn(3, 3, |i, j| rows[i][j].clone());
        let perm = Mat::from_fn(3, 3, |i, j| rows[2 - i][j].clone());
        assert_eq!(Exact::mat_rank(&m, 0.0), Exact::mat_rank(&perm, 0.0));
    }

    #[test]
    fn float_rank_with_threshold() {
        let mut m = Mat::<F64>::identity(3);
        m[(2, 2)] = F64::real(1e-13);
        assert_eq!(F64::mat_rank(&m, 1e-9), 2);
    }

    #[test]
    fn psd_checks() {
        let psd = Mat::from_fn(2, 2, |i, j| if i == j { exact(1, 1) } else { exact(1, 2) });
        assert!(Exact::herm_psd(&psd, 0.0));
        let not_psd = Mat::from_fn(2, 2, |i, j| if i == j { exact(1, 4) } else { exact(1, 2) });
        assert!(!Exact::herm_psd(&not_psd, 0.0));
        // zero pivot with nonzero off-diagonal is not PSD
        let degenerate = Mat::from_fn(2, 2, |i, j| {
            if i == 0 && j == 0 {
                exact(0, 1)
            } else if i == j {
                exact(1, 1)
            } else {
                exact(1, 3)
            }
        });
        assert!(!Exact::herm_psd(&degenerate, 0.0));
    }

    #[test]
    fn herm_eig_max_matches_known_value() {
        let m = Mat::from_fn(2, 2, |i, j| {
            F64::real(if i == j { 2.0 } else { 1.0 })
        });
        assert!((F64::herm_eig_max(&m) - 3.0).abs() < 1e-12);
    }
}
