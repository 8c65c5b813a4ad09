//! Row contractions: one abstract interface over every concrete
//! representation used by the catalog.

pub mod atomic;
pub mod compression;
pub mod dense;
pub mod spec;

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::matrix::{Backend, Mat};
use crate::scalar::Scalar;

pub use atomic::DecayingAtomicRep;
pub use compression::{
    CompressionKind, CompressionRep, Generator, InvariantSubspace, OrbitSet, WordSet,
};
pub use dense::{is_unitary, ContractionReport, DenseTuple};

#[derive(Clone, Debug)]
pub enum RowContraction<S: Backend> {
    Dense(DenseTuple<S>),
    /// L^{(α)} on α copies of the full Fock space.
    LeftRegular { n: u8, alpha: u32 },
    /// L restricted to its invariant subspace span{ξ_w : |w| ≥ min_len}.
    LeftRegularRestricted { n: u8, min_len: usize },
    DecayingAtomic(DecayingAtomicRep<S>),
    Compression(CompressionRep<S>),
    DirectSum(Box<RowContraction<S>>, Box<RowContraction<S>>),
    /// B = AU for a non-dense inner tuple (mixing a dense tuple folds into
    /// a new dense tuple instead). Forward/adjoint actions only; defect
    /// computations go through the inner tuple's own paths.
    UnitaryMix { inner: Box<RowContraction<S>>, u: Mat<S> },
}

/// A vector in whichever model a RowContraction acts on.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelVector<S: Scalar> {
    Coords(Vec<S>),
    Fock(FockVector<S>),
    Sum(Box<ModelVector<S>>, Box<ModelVector<S>>),
}

impl<S: Scalar> ModelVector<S> {
    pub fn scale(&mut self, s: &S) {
        match self {
            ModelVector::Coords(v) => {
                for x in v.iter_mut() {
                    *x = x.clone() * s.clone();
                }
            }
            ModelVector::Fock(v) => v.scale(s),
            ModelVector::Sum(a, b) => {
                a.scale(s);
                b.scale(s);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModelVector<S>, s: &S) -> Result<()> {
        match (self, other) {
            (ModelVector::Coords(a), ModelVector::Coords(b)) => {
                if a.len() != b.len() {
                    return Err(Error::ShapeMismatch("model vector addition".into()));
                }
                for (x, y) in a.iter_mut().zip(b) {
                    *x = x.clone() + s.clone() * y.clone();
                }
                Ok(())
            }
            (ModelVector::Fock(a), ModelVector::Fock(b)) => {
                a.add_scaled(b, s);
                Ok(())
            }
            (ModelVector::Sum(a1, a2), ModelVector::Sum(b1, b2)) => {
                a1.add_scaled(b1, s)?;
                a2.add_scaled(b2, s)
            }
            _ => Err(Error::ModelMismatch("mixed model vector kinds".into())),
        }
    }

    pub fn norm_sq(&self) -> S {
        match self {
            ModelVector::Coords(v) => {
                let mut acc = S::zero();
                for x in v {
                    acc = acc + x.abs_sq();
                }
                acc
            }
            ModelVector::Fock(v) => v.norm_sq(),
            ModelVector::Sum(a, b) => a.norm_sq() + b.norm_sq(),
        }
    }
}

pub fn model_inner<S: Scalar>(x: &ModelVector<S>, y: &ModelVector<S>) -> Result<S> {
    match (x, y) {
        (ModelVector::Coords(a), ModelVector::Coords(b)) => {
            if a.len() != b.len() {
                return Err(Error::ShapeMismatch("model inner product".into()));
            }
            let mut acc = S::zero();
            for (p, q) in a.iter().zip(b) {
                acc = acc + p.clone() * q.conj();
            }
            Ok(acc)
        }
        (ModelVector::Fock(a), ModelVector::Fock(b)) => crate::fock::inner_product(a, b),
        (ModelVector::Sum(a1, a2), ModelVector::Sum(b1, b2)) => {
            Ok(model_inner(a1, b1)? + model_inner(a2, b2)?)
        }
        _ => Err(Error::ModelMismatch("mixed model vector kinds".into())),
    }
}

impl<S: Backend> RowContraction<S> {
    pub fn n(&self) -> u8 {
        match self {
            RowContraction::Dense(d) => d.n,
            RowContraction::LeftRegular { n, .. } => *n,
            RowContraction::LeftRegularRestricted { n, .. } => *n,
            RowContraction::DecayingAtomic(a) => a.n,
            RowContraction::Compression(c) => c.n,
            RowContraction::DirectSum(a, _) => a.n(),
            RowContraction::UnitaryMix { inner, .. } => inner.n(),
        }
    }

    fn check_index(&self, i: u8) -> Result<()> {
        if i < 1 || i > self.n() {
            return Err(Error::IndexOutOfRange { index: i as usize, n: self.n() as usize });
        }
        Ok(())
    }

    pub fn apply(&self, i: u8, x: &ModelVector<S>) -> Result<ModelVector<S>> {
        self.check_index(i)?;
        match (self, x) {
            (RowContraction::Dense(d), ModelVector::Coords(v)) => {
                Ok(ModelVector::Coords(d.apply(i, v)?))
            }
            (RowContraction::LeftRegular { .. }, ModelVector::Fock(v)) => {
                Ok(ModelVector::Fock(v.shift(i)))
            }
            (RowContraction::LeftRegularRestricted { min_len, .. }, ModelVector::Fock(v)) => {
                if v.min_support_len().map_or(false, |m| m < *min_len) {
                    return Err(Error::ModelMismatch(
                        "vector leaves the restricted subspace".into(),
                    ));
                }
                Ok(ModelVector::Fock(v.shift(i)))
            }
            (RowContraction::DecayingAtomic(a), ModelVector::Fock(v)) => {
                Ok(ModelVector::Fock(a.apply(i, v)?))
            }
            (RowContraction::Compression(c), ModelVector::Fock(v)) => {
                Ok(ModelVector::Fock(c.apply(i, v)?))
            }
            (RowContraction::DirectSum(a, b), ModelVector::Sum(xa, xb)) => {
                Ok(ModelVector::Sum(
                    Box::new(a.apply(i, xa)?),
                    Box::new(b.apply(i, xb)?),
                ))
            }
            (RowContraction::UnitaryMix { inner, u }, _) => {
                // B_j = Σᵢ Aᵢ U_{ij}
                let mut out: Option<ModelVector<S>> = None;
                for row in 1..=self.n() {
                    let c = u[(row as usize - 1, i as usize - 1)].clone();
                    if c.is_zero() {
                        continue;
                    }
                    let y = inner.apply(row, x)?;
                    match &mut out {
                        None => {
                            let mut y = y;
                            y.scale(&c);
                            out = Some(y);
                        }
                        Some(acc) => acc.add_scaled(&y, &c)?,
                    }
                }
                out.ok_or_else(|| Error::InvalidParameter("zero mixing column".into()))
            }
            _ => Err(Error::ModelMismatch(
                "vector kind does not match the representation's model".into(),
            )),
        }
    }

    pub fn apply_adjoint(&self, i: u8, x: &ModelVector<S>) -> Result<ModelVector<S>> {
        self.check_index(i)?;
        match (self, x) {
            (RowContraction::Dense(d), ModelVector::Coords(v)) => {
                Ok(ModelVector::Coords(d.apply_adjoint(i, v)?))
            }
            (RowContraction::LeftRegular { .. }, ModelVector::Fock(v)) => {
                Ok(ModelVector::Fock(v.unshift(i)))
            }
            (RowContraction::LeftRegularRestricted { min_len, .. }, ModelVector::Fock(v)) => {
                let y = v.unshift(i);
                // project back onto |w| ≥ min_len
                let mut out = FockVector::zero(y.n, y.alpha);
                for ((c, w), a) in y.iter() {
                    if w.len() >= *min_len {
                        out.set(*c, w.clone(), a.clone())?;
                    }
                }
                Ok(ModelVector::Fock(out))
            }
            (RowContraction::DecayingAtomic(a), ModelVector::Fock(v)) => {
                Ok(ModelVector::Fock(a.apply_adjoint(i, v)?))
            }
            (RowContraction::Compression(c), ModelVector::Fock(v)) => {
                Ok(ModelVector::Fock(c.apply_adjoint(i, v)?))
            }
            (RowContraction::DirectSum(a, b), ModelVector::Sum(xa, xb)) => {
                Ok(ModelVector::Sum(
                    Box::new(a.apply_adjoint(i, xa)?),
                    Box::new(b.apply_adjoint(i, xb)?),
                ))
            }
            (RowContraction::UnitaryMix { inner, u }, _) => {
                // B_j* = Σᵢ conj(U_{ij}) Aᵢ*
                let mut out: Option<ModelVector<S>> = None;
                for row in 1..=self.n() {
                    let c = u[(row as usize - 1, i as usize - 1)].conj();
                    if c.is_zero() {
                        continue;
                    }
                    let y = inner.apply_adjoint(row, x)?;
                    match &mut out {
                        None => {
                            let mut y = y;
                            y.scale(&c);
                            out = Some(y);
                        }
                        Some(acc) => acc.add_scaled(&y, &c)?,
                    }
                }
                out.ok_or_else(|| Error::InvalidParameter("zero mixing column".into()))
            }
            _ => Err(Error::ModelMismatch(
                "vector kind does not match the representation's model".into(),
            )),
        }
    }
}

/// B = AU. A dense tuple mixes into a new dense tuple (so all defect paths
/// apply to it); any other variant is wrapped, exposing forward and adjoint
/// actions only.
pub fn unitary_mix<S: Backend>(
    a: RowContraction<S>,
    u: Mat<S>,
    tol: f64,
) -> Result<RowContraction<S>> {
    if u.rows != a.n() as usize || !is_unitary(&u, tol) {
        return Err(Error::InvalidParameter(format!(
            "mixing matrix must be a {0}x{0} unitary",
            a.n()
        )));
    }
    match a {
        RowContraction::Dense(d) => Ok(RowContraction::Dense(d.mix(&u)?)),
        other => Ok(RowContraction::UnitaryMix { inner: Box::new(other), u }),
    }
}

pub fn direct_sum<S: Backend>(
    a: RowContraction<S>,
    b: RowContraction<S>,
) -> Result<RowContraction<S>> {
    if a.n() != b.n() {
        return Err(Error::ModelMismatch(format!(
            "direct sum needs equal n: {} vs {}",
            a.n(),
            b.n()
        )));
    }
    Ok(RowContraction::DirectSum(Box::new(a), Box::new(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Exact;
    use crate::word::Word;

    #[test]
    fn left_regular_action() {
        let l = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
        let x = ModelVector::Fock(FockVector::basis(2, 1, 0, Word(vec![2, 1])).unwrap());
        let y = l.apply(1, &x).unwrap();
        match y {
            ModelVector::Fock(v) => {
                assert_eq!(v.get(0, &Word(vec![1, 2, 1])), Exact::one())
            }
            _ => panic!("wrong model"),
        }
    }

    #[test]
    fn swap_mix_on_left_regular() {
        let l = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
        let swap = Mat::from_fn(2, 2, |i, j| {
            if i + j == 1 { Exact::one() } else { Exact::zero() }
        });
        let b = unitary_mix(l, swap, 0.0).unwrap();
        let x = ModelVector::Fock(FockVector::basis(2, 1, 0, Word::empty()).unwrap());
        // B₁ = L₂
        match b.apply(1, &x).unwrap() {
            ModelVector::Fock(v) => assert_eq!(v.get(0, &Word(vec![2])), Exact::one()),
            _ => panic!("wrong model"),
        }
    }

    #[test]
    fn mix_then_unmix_is_identity_on_dense() {
        let m = Mat::from_fn(2, 2, |i, j| {
            if i == j { Exact::from_ratio(1, 2) } else { Exact::from_ratio(1, 3) }
        });
        let d = DenseTuple::new(vec![m.clone(), m]).unwrap();
        // rational rotation from the 3-4-5 triple
        let u = Mat::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => Exact::from_ratio(3, 5),
            (0, 1) => Exact::from_ratio(-4, 5),
            (1, 0) => Exact::from_ratio(4, 5),
            (1, 1) => Exact::from_ratio(3, 5),
            _ => unreachable!(),
        });
        assert!(is_unitary(&u, 0.0));
        let mixed = d.mix(&u).unwrap();
        let back = mixed.mix(&u.adjoint()).unwrap();
        for i in 0..2 {
            assert_eq!(back.mats[i], d.mats[i]);
        }
    }

    #[test]
    fn direct_sum_requires_matching_n() {
        let a = RowContraction::<Exact>::LeftRegular { n: 2, alpha: 1 };
        let b = RowContraction::<Exact>::LeftRegular { n: 3, alpha: 1 };
        assert!(direct_sum(a, b).is_err());
    }
}
