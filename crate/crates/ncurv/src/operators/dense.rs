//! Dense finite-dimensional row contractions.

use crate::error::{Error, Result};
use crate::matrix::{Backend, Mat};

#[derive(Clone, Debug)]
pub struct DenseTuple<S: Backend> {
    pub n: u8,
    pub dim: usize,
    pub mats: Vec<Mat<S>>,
}

/// Result of the row-contractivity check.
#[derive(Clone, Debug)]
pub struct ContractionReport {
    pub ok: bool,
    pub max_eigenvalue: f64,
}

impl<S: Backend> DenseTuple<S> {
    /// Builds the tuple without the contractivity check (see `validate`).
    pub fn new(mats: Vec<Mat<S>>) -> Result<Self> {
        if mats.is_empty() || mats.len() > u8::MAX as usize {
            return Err(Error::InvalidParameter(format!(
                "dense tuple needs between 1 and 255 matrices, got {}",
                mats.len()
            )));
        }
        let dim = mats[0].rows;
        for m in &mats {
            if !m.is_square() || m.rows != dim {
                return Err(Error::ShapeMismatch(format!(
                    "all matrices must be {dim}x{dim}, found {}x{}",
                    m.rows, m.cols
                )));
            }
        }
        Ok(DenseTuple { n: mats.len() as u8, dim, mats })
    }

    /// Σᵢ AᵢAᵢ*.
    pub fn row_sum(&self) -> Mat<S> {
        let mut acc = Mat::zeros(self.dim, self.dim);
        for m in &self.mats {
            acc = acc.add(&m.mul(&m.adjoint()).unwrap()).unwrap();
        }
        acc
    }

    /// Row-contractivity: λ_max(ΣAᵢAᵢ*) ≤ 1, decided exactly in the exact
    /// backend (I − ΣAᵢAᵢ* positive semidefinite) and up to `tol` in float.
    pub fn validate(&self, tol: f64) -> ContractionReport {
        let sum = self.row_sum();
        let max_eigenvalue = S::herm_eig_max(&sum);
        let ok = if S::EXACT {
            let defect = Mat::identity(self.dim).sub(&sum).unwrap();
            S::herm_psd(&defect, 0.0)
        } else {
            max_eigenvalue <= 1.0 + tol
        };
        ContractionReport { ok, max_eigenvalue }
    }

    pub fn require_contractive(&self, tol: f64) -> Result<()> {
        let rep = self.validate(tol);
        if rep.ok {
            Ok(())
        } else {
            Err(Error::NotContractive { max_eigenvalue: rep.max_eigenvalue })
        }
    }

    pub fn apply(&self, i: u8, x: &[S]) -> Result<Vec<S>> {
        self.mat(i)?.apply_vec(x)
    }

    pub fn apply_adjoint(&self, i: u8, x: &[S]) -> Result<Vec<S>> {
        self.mat(i)?.adjoint().apply_vec(x)
    }

    pub fn mat(&self, i: u8) -> Result<&Mat<S>> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i as usize, n: self.n as usize });
        }
        Ok(&self.mats[i as usize - 1])
    }

    /// B = AU, B_j = Σᵢ Aᵢ U_{ij}.
    pub fn mix(&self, u: &Mat<S>) -> Result<DenseTuple<S>> {
        if u.rows != self.n as usize || u.cols != self.n as usize {
            return Err(Error::ShapeMismatch(format!(
                "mixing matrix must be {0}x{0}",
                self.n
            )));
        }
        let mut out = Vec::with_capacity(self.n as usize);
        for j in 0..self.n as usize {
            let mut b = Mat::zeros(self.dim, self.dim);
            for (i, a) in self.mats.iter().enumerate() {
                let c = u[(i, j)].clone();
                if c.is_zero() {
                    continue;
                }
                let mut scaled = a.clone();
                for p in 0..self.dim {
                    for q in 0..self.dim {
                        scaled[(p, q)] = scaled[(p, q)].clone() * c.clone();
                    }
                }
                b = b.add(&scaled).unwrap();
            }
            out.push(b);
        }
        DenseTuple::new(out)
    }

    /// Block-diagonal direct sum with another dense tuple over the same n.
    pub fn direct_sum(&self, other: &DenseTuple<S>) -> Result<DenseTuple<S>> {
        if self.n != other.n {
            return Err(Error::ModelMismatch(format!(
                "direct sum needs equal n: {} vs {}",
                self.n, other.n
            )));
        }
        let dim = self.dim + other.dim;
        let mats = (0..self.n as usize)
            .map(|idx| {
                Mat::from_fn(dim, dim, |p, q| {
                    if p < self.dim && q < self.dim {
                        self.mats[idx][(p, q)].clone()
                    } else if p >= self.dim && q >= self.dim {
                        other.mats[idx][(p - self.dim, q - self.dim)].clone()
                    } else {
                        S::zero()
                    }
                })
            })
            .collect();
        DenseTuple::new(mats)
    }
}

/// Checks whether U*U = I (exactly, or entrywise within tol for floats).
pub fn is_unitary<S: Backend>(u: &Mat<S>, tol: f64) -> bool {
    if !u.is_square() {
        return false;
    }
    let prod = u.adjoint().mul(u).unwrap();
    let eye = Mat::<S>::identity(u.rows);
    if S::EXACT {
        prod == eye
    } else {
        (0..u.rows).all(|i| {
            (0..u.cols).all(|j| {
                let d = prod[(i, j)].clone() - eye[(i, j)].clone();
                let (re, im) = d.to_f64();
                re.abs() <= tol && im.abs() <= tol
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Exact, Scalar, F64};

    fn halves() -> DenseTuple<Exact> {
        // (I/2, I/2, I/2, I/2) scaled so ΣAᵢAᵢ* = I
        let m = Mat::from_fn(2, 2, |i, j| {
            if i == j { Exact::from_ratio(1, 2) } else { Exact::zero() }
        });
        DenseTuple::new(vec![m.clone(), m.clone(), m.clone(), m]).unwrap()
    }

    #[test]
    fn contractive_at_the_boundary() {
        let a = halves();
        let rep = a.validate(0.0);
        assert!(rep.ok);
        assert!((rep.max_eigenvalue - 1.0).abs() < 1e-9);
    }

    #[test]
    fn non_contractive_detected() {
        let m = Mat::<F64>::identity(2);
        let a = DenseTuple::new(vec![m.clone(), m]).unwrap();
        let rep = a.validate(1e-9);
        assert!(!rep.ok);
        assert!((rep.max_eigenvalue - 2.0).abs() < 1e-9);
    }

    #[test]
    fn zero_tuple_kills_vectors() {
        let z = Mat::<Exact>::zeros(3, 3);
        let a = DenseTuple::new(vec![z.clone(), z]).unwrap();
        let x = vec![Exact::one(), Exact::from_int(2), Exact::from_int(-1)];
        assert!(a.apply(1, &x).unwrap().iter().all(|v| v.is_zero()));
    }

    #[test]
    fn swap_mix_permutes_coordinates() {
        let a = halves();
        // 4x4 permutation swapping coordinates 1 and 2
        let u = Mat::from_fn(4, 4, |i, j| {
            let tgt = match i {
                0 => 1,
                1 => 0,
                k => k,
            };
            if j == tgt { Exact::one() } else { Exact::zero() }
        });
        assert!(is_unitary(&u, 0.0));
        let b = a.mix(&u).unwrap();
        assert_eq!(b.mats[0], a.mats[1]);
        assert_eq!(b.mats[1], a.mats[0]);
    }

    #[test]
    fn index_bounds_checked() {
        let a = halves();
        assert!(a.apply(0, &[Exact::zero(), Exact::zero()]).is_err());
        assert!(a.apply(5, &[Exact::zero(), Exact::zero()]).is_err());
    }
}
