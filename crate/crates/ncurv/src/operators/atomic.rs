//! Decaying atomic representations σ_{u,λ⃗}: a ring of d basis vectors
//! cycled by the letters of u with contraction factors λ_s, and a free tree
//! hanging below each ring node.
//!
//! Basis: {ξ_{s,w} : 1 ≤ s ≤ d, w = e or last(w) ≠ i_s}, stored with
//! copy index s−1. Actions:
//!   A_i ξ_{s,e} = λ_s ξ_{s+1,e}   if i = i_s (indices mod d)
//!   A_i ξ_{s,e} = ξ_{s,i}          if i ≠ i_s
//!   A_i ξ_{s,w} = ξ_{s,iw}         if w ≠ e

use crate::error::{Error, Result};
use crate::fock::FockVector;
use crate::scalar::Scalar;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct DecayingAtomicRep<S: Scalar> {
    pub n: u8,
    pub u: Word,
    /// r_s = |λ_s|², always real; rational whenever |λ_s|² is.
    pub r: Vec<S>,
    /// The decay factors themselves; absent when the representation was
    /// specified by r alone (then only trace/rank paths are available).
    pub lambda: Option<Vec<S>>,
}

fn check_real_unit(r: &impl Scalar, what: &str) -> Result<()> {
    if !r.is_real()
        || r.cmp_real(&Scalar::zero()) == Some(std::cmp::Ordering::Less)
        || r.cmp_real(&Scalar::one()) == Some(std::cmp::Ordering::Greater)
    {
        return Err(Error::InvalidParameter(format!("{what} must lie in [0, 1]")));
    }
    Ok(())
}

impl<S: Scalar> DecayingAtomicRep<S> {
    pub fn new(n: u8, u: Word, lambda: Vec<S>) -> Result<Self> {
        if u.is_empty() || u.len() != lambda.len() {
            return Err(Error::InvalidParameter(
                "ring word and decay vector must have equal length d >= 1".into(),
            ));
        }
        if !u.valid_for(n) {
            return Err(Error::InvalidParameter(format!(
                "ring word {u} has letters outside 1..={n}"
            )));
        }
        let r: Vec<S> = lambda.iter().map(|l| l.abs_sq()).collect();
        for rs in &r {
            check_real_unit(rs, "|lambda_s|^2")?;
        }
        Ok(DecayingAtomicRep { n, u, r, lambda: Some(lambda) })
    }

    /// Specify by r⃗ = |λ⃗|² only; keeps the exact backend usable when λ is
    /// irrational but r is rational (e.g. λ = 1/√2, r = 1/2).
    pub fn from_r(n: u8, u: Word, r: Vec<S>) -> Result<Self> {
        if u.is_empty() || u.len() != r.len() {
            return Err(Error::InvalidParameter(
                "ring word and r vector must have equal length d >= 1".into(),
            ));
        }
        if !u.valid_for(n) {
            return Err(Error::InvalidParameter(format!(
                "ring word {u} has letters outside 1..={n}"
            )));
        }
        for rs in &r {
            check_real_unit(rs, "r_s")?;
        }
        Ok(DecayingAtomicRep { n, u, r, lambda: None })
    }

    pub fn d(&self) -> usize {
        self.u.len()
    }

    /// #{s : |λ_s| < 1}.
    pub fn pure_rank(&self) -> u64 {
        self.r
            .iter()
            .filter(|r| r.cmp_real(&S::one()) == Some(std::cmp::Ordering::Less))
            .count() as u64
    }

    fn lambda_ref(&self) -> Result<&[S]> {
        self.lambda.as_deref().ok_or_else(|| {
            Error::Unsupported(
                "representation was specified by r = |lambda|^2 only; \
                 the operator action needs lambda itself"
                    .into(),
            )
        })
    }

    fn check_vector(&self, x: &FockVector<S>) -> Result<()> {
        if x.n != self.n || x.alpha != self.d() as u32 {
            return Err(Error::ModelMismatch(format!(
                "vector lives in H_{}^({}), representation model is H_{}^({})",
                x.n,
                x.alpha,
                self.n,
                self.d()
            )));
        }
        for ((c, w), _) in x.iter() {
            if let Some(last) = w.last() {
                if last == self.u.letters()[*c as usize] {
                    return Err(Error::ModelMismatch(format!(
                        "word {w} at ring node {} ends in the ring letter",
                        c + 1
                    )));
                }
            }
        }
        Ok(())
    }

    fn check_index(&self, i: u8) -> Result<()> {
        if i < 1 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i as usize, n: self.n as usize });
        }
        Ok(())
    }

    pub fn apply(&self, i: u8, x: &FockVector<S>) -> Result<FockVector<S>> {
        self.check_index(i)?;
        self.check_vector(x)?;
        let lambda = self.lambda_ref()?;
        let d = self.d();
        let mut out = FockVector::zero(self.n, d as u32);
        for ((c, w), a) in x.iter() {
            let c = *c as usize;
            if w.is_empty() {
                if i == self.u.letters()[c] {
                    let nc = ((c + 1) % d) as u32;
                    let cur = out.get(nc, &Word::empty());
                    out.set(nc, Word::empty(), cur + lambda[c].clone() * a.clone())?;
                } else {
                    let nw = Word::letter(i);
                    let cur = out.get(c as u32, &nw);
                    out.set(c as u32, nw, cur + a.clone())?;
                }
            } else {
                let nw = w.prepend(i);
                let cur = out.get(c as u32, &nw);
                out.set(c as u32, nw, cur + a.clone())?;
            }
        }
        Ok(out)
    }

    pub fn apply_adjoint(&self, i: u8, x: &FockVector<S>) -> Result<FockVector<S>> {
        self.check_index(i)?;
        self.check_vector(x)?;
        let lambda = self.lambda_ref()?;
        let d = self.d();
        let mut out = FockVector::zero(self.n, d as u32);
        for ((c, w), a) in x.iter() {
            let c = *c as usize;
            if w.is_empty() {
                // only the ring edge into node c can produce ξ_{c,e}
                let prev = (c + d - 1) % d;
                if i == self.u.letters()[prev] {
                    let cur = out.get(prev as u32, &Word::empty());
                    out.set(
                        prev as u32,
                        Word::empty(),
                        cur + lambda[prev].conj() * a.clone(),
                    )?;
                }
            } else if let Some(w2) = w.strip_prefix_letter(i) {
                let cur = out.get(c as u32, &w2);
                out.set(c as u32, w2, cur + a.clone())?;
            }
        }
        Ok(out)
    }

    /// Π_{j=1}^{len} r_{s−j} (ring indices mod d, s 1-based): the squared
    /// norm of the unique length-`len` adjoint word not vanishing on ξ_{s,e}.
    pub fn window_product(&self, s: usize, len: usize) -> S {
        let d = self.d();
        let mut acc = S::one();
        for j in 1..=len {
            let idx = ((s as i64 - 1 - j as i64).rem_euclid(d as i64)) as usize;
            acc = acc * self.r[idx].clone();
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Longest backward run of r = 1 starting at the edge into node s;
    /// `None` means every ring edge has r = 1 (Cuntz).
    fn ones_run(&self, s: usize) -> Option<usize> {
        let d = self.d();
        for j in 1..=d {
            let idx = ((s as i64 - 1 - j as i64).rem_euclid(d as i64)) as usize;
            if self.r[idx].cmp_real(&S::one()) != Some(std::cmp::Ordering::Equal) {
                return Some(j - 1);
            }
        }
        None
    }

    /// tr(I − Φᵏ(I)) = Σ_s Σ_{m<k} c_m (1 − Π r over the length-(k−m)
    /// window), where c_0 = 1 and c_m = (n−1)n^{m−1} counts tree words of
    /// length m below a ring node. Exact in the r-rational arithmetic.
    pub fn defect_trace(&self, k: usize) -> S {
        let n = S::from_int(self.n as i64);
        let nm1 = S::from_int(self.n as i64 - 1);
        let mut total = S::zero();
        for s in 1..=self.d() {
            // walk m = k-1 down to 0 so the window grows one factor at a time
            let mut window = S::one();
            let mut per_node = S::zero();
            for m in (0..k).rev() {
                let j = k - m; // window length
                let idx = ((s as i64 - 1 - j as i64).rem_euclid(self.d() as i64)) as usize;
                window = window * self.r[idx].clone();
                let c_m = if m == 0 {
                    S::one()
                } else {
                    nm1.clone() * n.pow(m as u32 - 1)
                };
                per_node = per_node + c_m * (S::one() - window.clone());
            }
            total = total + per_node;
        }
        total
    }

    /// rk(I − Φᵏ(I)): the defect is diagonal in the ring-tree basis, so the
    /// rank counts basis vectors whose window product is < 1. Per node this
    /// is n^{k − ones_run − 1} when k > ones_run, else 0.
    pub fn defect_rank(&self, k: usize) -> Result<u64> {
        let n = self.n as u64;
        let mut total: u64 = 0;
        for s in 1..=self.d() {
            if let Some(run) = self.ones_run(s) {
                if k > run {
                    let t = (k - run - 1) as u32;
                    let p = n
                        .checked_pow(t)
                        .ok_or_else(|| Error::Overflow("atomic defect rank".into()))?;
                    total = total
                        .checked_add(p)
                        .ok_or_else(|| Error::Overflow("atomic defect rank".into()))?;
                }
            }
        }
        Ok(total)
    }

    /// max_s ⟨Φᵏ(I) ξ_{s,e}, ξ_{s,e}⟩ over the ring-vector probe set.
    pub fn purity_indicator(&self, k: usize) -> S {
        let mut best = S::zero();
        for s in 1..=self.d() {
            let p = self.window_product(s, k);
            if p.cmp_real(&best) == Some(std::cmp::Ordering::Greater) {
                best = p;
            }
        }
        best
    }
}
