//! Weyl-type structure: paired blocks, weighted homogenization and initial forms.

use crate::error::{DmodError, Result};
use crate::galgebra::algebra::{GAlgebra, VarRole};
use crate::polyarith::{Coeff, ExpVec, Poly, Term};

impl<K: Coeff> GAlgebra<K> {
    /// `(x, D)` index pairs: `X(k)`/`D(k)` and `T(k)`/`Dt(k)`, ordered by the position variable.
    pub fn weyl_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, r) in self.roles.iter().enumerate() {
            let partner = match r {
                VarRole::X(k) => self.find_role(&VarRole::D(*k)),
                VarRole::T(k) => self.find_role(&VarRole::Dt(*k)),
                _ => None,
            };
            if let Some(j) = partner {
                out.push((i, j));
            }
        }
        out
    }

    pub fn h_index(&self) -> Option<usize> {
        self.find_role(&VarRole::H)
    }
}

/// Per-variable weights `(u, v)` spread over the pairs of `alg`; other variables get 0.
pub fn pair_weights<K: Coeff>(alg: &GAlgebra<K>, u: &[i64], v: &[i64]) -> Result<Vec<i64>> {
    let pairs = alg.weyl_pairs();
    if u.len() != pairs.len() || v.len() != pairs.len() {
        return Err(DmodError::LengthMismatch { expected: pairs.len(), found: u.len().min(v.len()) });
    }
    let mut w = vec![0; alg.nvars()];
    for (k, &(x, d)) in pairs.iter().enumerate() {
        w[x] = u[k];
        w[d] = v[k];
    }
    Ok(w)
}

/// `H_(u,v)(p)`: pads each term with `h^(deg p - deg term)`.
///
/// `dst` must be `src` with `h` appended as the last variable.
pub fn homogenize_weighted<K: Coeff>(src: &GAlgebra<K>, dst: &GAlgebra<K>, p: &Poly<K>, u: &[i64], v: &[i64]) -> Result<Poly<K>> {
    if u.iter().chain(v).any(|&x| x <= 0) {
        return Err(DmodError::InvalidInput("homogenization weights must be positive".into()));
    }
    let w = pair_weights(src, u, v)?;
    let n = src.nvars();
    let h = dst.h_index().ok_or_else(|| DmodError::InvalidInput("target algebra has no homogenizing variable".into()))?;
    if dst.nvars() != n + 1 || h != n {
        return Err(DmodError::AlgebraMismatch);
    }
    for t in p.terms() {
        for (i, &e) in t.exp.iter().enumerate() {
            if e != 0 && w[i] == 0 {
                return Err(DmodError::InvalidInput(format!("variable {} has no homogenization weight", src.name(i))));
            }
        }
    }
    let top = p.terms().iter().map(|t| t.exp.weighted_degree(&w)).max().unwrap_or(0);
    let terms = p
        .terms()
        .iter()
        .map(|t| {
            let mut e = ExpVec::zeros(n + 1);
            for i in 0..n {
                e.set(i, t.exp.get(i));
            }
            e.set(h, (top - t.exp.weighted_degree(&w)) as u16);
            Term { exp: e, comp: t.comp, coeff: t.coeff.clone() }
        })
        .collect();
    Ok(Poly::from_terms(terms, dst.order()))
}

/// Sets `h = 1`; `dst` is the algebra without `h` (same variable layout otherwise).
pub fn dehomogenize<K: Coeff>(src: &GAlgebra<K>, dst: &GAlgebra<K>, p: &Poly<K>) -> Result<Poly<K>> {
    let h = src.h_index().ok_or(DmodError::AlgebraMismatch)?;
    let n = src.nvars();
    let map: Vec<Option<usize>> = (0..n).map(|i| if i == h { None } else { Some(if i < h { i } else { i - 1 }) }).collect();
    let terms = p
        .terms()
        .iter()
        .map(|t| {
            let mut e = ExpVec::zeros(n - 1);
            for (i, m) in map.iter().enumerate() {
                if let Some(j) = m {
                    e.set(*j, t.exp.get(i));
                }
            }
            Term { exp: e, comp: t.comp, coeff: t.coeff.clone() }
        })
        .collect();
    Ok(Poly::from_terms(terms, dst.order()))
}

/// Per-variable `(-w, w)` weights; `w` is indexed by the pairs of `alg`.
pub fn minus_w_w<K: Coeff>(alg: &GAlgebra<K>, w: &[i64]) -> Result<Vec<i64>> {
    let pairs = alg.weyl_pairs();
    if w.len() != pairs.len() {
        return Err(DmodError::LengthMismatch { expected: pairs.len(), found: w.len() });
    }
    if w.iter().any(|&x| x < 0) || w.iter().all(|&x| x == 0) {
        return Err(DmodError::InvalidInput("weight vector must be non-negative and non-zero".into()));
    }
    let mut out = vec![0; alg.nvars()];
    for (k, &(x, d)) in pairs.iter().enumerate() {
        out[x] = -w[k];
        out[d] = w[k];
    }
    Ok(out)
}

/// `ini_(-w,w)(p)`: the terms of maximal `(-w, w)`-weight.
pub fn initial_form<K: Coeff>(alg: &GAlgebra<K>, p: &Poly<K>, w: &[i64]) -> Result<Poly<K>> {
    let ww = minus_w_w(alg, w)?;
    Ok(initial_form_weights(p, &ww))
}

/// Terms of `p` with maximal weight under the per-variable vector `ww`.
pub fn initial_form_weights<K: Coeff>(p: &Poly<K>, ww: &[i64]) -> Poly<K> {
    let Some(top) = p.terms().iter().map(|t| t.exp.weighted_degree(ww)).max() else {
        return Poly::zero();
    };
    Poly::from_sorted(p.terms().iter().filter(|t| t.exp.weighted_degree(ww) == top).cloned().collect())
}
