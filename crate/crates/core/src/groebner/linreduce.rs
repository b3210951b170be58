//! K-linear Gaussian elimination on polynomials (no monomial multiplication).

use rustc_hash::FxHashMap;

use crate::polyarith::{Coeff, ExpVec, Poly, TermOrder};

/// Incremental echelon form that remembers how each row combines the inputs.
#[derive(Clone, Debug)]
pub struct LinearReducer<K: Coeff> {
    ord: TermOrder,
    rows: Vec<(Poly<K>, Vec<K>)>,
    pivots: FxHashMap<(ExpVec, u32), usize>,
    inputs: usize,
}

impl<K: Coeff> LinearReducer<K> {
    pub fn new(ord: &TermOrder) -> Self {
        LinearReducer { ord: ord.clone(), rows: vec![], pivots: FxHashMap::default(), inputs: 0 }
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    /// Returns `(r, c)` with `f = r + Σ c_i input_i` and no term of `r` on a pivot.
    pub fn reduce(&self, f: &Poly<K>) -> (Poly<K>, Vec<K>) {
        let mut r = f.clone();
        let mut c = vec![K::zero(); self.inputs];
        let mut pos = 0;
        while pos < r.len() {
            let t = &r.terms()[pos];
            match self.pivots.get(&(t.exp.clone(), t.comp)) {
                Some(&k) => {
                    let a = t.coeff.clone();
                    let (row, comb) = &self.rows[k];
                    r = r.axpy(&-a.clone(), row, &self.ord);
                    for (ci, x) in c.iter_mut().zip(comb) {
                        *ci = ci.clone() + a.clone() * x.clone();
                    }
                }
                None => pos += 1,
            }
        }
        (r, c)
    }

    /// Adds an input. Returns `Some(c)` with `p = Σ c_i input_i` when `p` depends on the earlier inputs;
    /// a dependent input is not counted.
    pub fn add(&mut self, p: &Poly<K>) -> Option<Vec<K>> {
        let (r, c) = self.reduce(p);
        if r.is_zero() {
            return Some(c);
        }
        let inv = K::one() / r.lc().clone();
        let mut comb: Vec<K> = c.into_iter().map(|x| -(x * inv.clone())).collect();
        comb.push(inv.clone());
        for (_, other) in self.rows.iter_mut() {
            other.push(K::zero());
        }
        self.inputs += 1;
        let row = r.scale(&inv);
        self.pivots.insert((row.lm().clone(), row.lcomp()), self.rows.len());
        self.rows.push((row, comb));
        None
    }
}

/// Linear reduction of `f` against `basis`: returns `(residue, c)` with `residue = f - Σ c_i basis_i`.
pub fn lin_reduce<K: Coeff>(f: &Poly<K>, basis: &[Poly<K>], ord: &TermOrder) -> (Poly<K>, Vec<K>) {
    // Rows are built from independent inputs; dependent ones are rewritten through the earlier ones.
    let mut lr = LinearReducer::new(ord);
    let mut used: Vec<usize> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        if lr.add(b).is_none() {
            used.push(i);
        }
    }
    let (r, c) = lr.reduce(f);
    let mut out = vec![K::zero(); basis.len()];
    for (k, &i) in used.iter().enumerate() {
        out[i] = c[k].clone();
    }
    (r, out)
}
