//! Action of `D_n[s]` and `D_n<S>` on `K[x, s, 1/f] f^s`, using commutative arithmetic only.

use crate::dmod::{embed, q};
use crate::error::{DmodError, Result};
use crate::galgebra::{commutative, AlgebraMap, VarRole};
use crate::{Algebra, OpPoly};

/// `numer / (f_1^denom_1 .. f_p^denom_p)` times `f^s`, with `numer` in `K[x, s_1..s_p]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FsElement {
    pub numer: OpPoly,
    pub denom: Vec<u32>,
}

impl FsElement {
    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

/// The module `K[x, s, 1/f] f^s` for fixed `f_1..f_p`.
#[derive(Clone, Debug)]
pub struct FsAction {
    /// `K[x_1..x_n, s_1..s_p]`.
    pub ring: Algebra,
    n: usize,
    fs: Vec<OpPoly>,
    dfs: Vec<Vec<OpPoly>>,
}

impl FsAction {
    pub fn new(ring: &Algebra, fs: &[OpPoly]) -> Result<Self> {
        let n = ring.nvars();
        let mut names = ring.names().to_vec();
        names.extend(crate::galgebra::s_names(fs.len()));
        let c = commutative(&names)?;
        let fe: Vec<OpPoly> = fs.iter().map(|f| embed(f, &c)).collect();
        let dfs = (0..n).map(|i| fs.iter().map(|f| embed(&f.derivative(i), &c)).collect()).collect();
        Ok(FsAction { ring: c, n, fs: fe, dfs })
    }

    /// `f^s` itself.
    pub fn unit(&self) -> FsElement {
        FsElement { numer: self.ring.one(), denom: vec![0; self.fs.len()] }
    }

    fn s(&self, j: usize) -> OpPoly {
        self.ring.var(self.n + j)
    }

    fn mul(&self, a: &OpPoly, b: &OpPoly) -> OpPoly {
        a.mul_comm(b, self.ring.order())
    }

    fn times_x(&self, e: FsElement, i: usize) -> FsElement {
        FsElement { numer: self.mul(&e.numer, &self.ring.var(i)), denom: e.denom }
    }

    fn times_s(&self, e: FsElement, j: usize) -> FsElement {
        FsElement { numer: self.mul(&e.numer, &self.s(j)), denom: e.denom }
    }

    /// `d/dx_i` of `G f^(s - e)`: `(dG Π_J f_j + G Σ_J (s_j - e_j) df_j Π_{J - j} f_l) f^(s - e - 1_J)`,
    /// where `J` is the set of `j` with `df_j/dx_i != 0`.
    fn derive(&self, e: FsElement, i: usize) -> FsElement {
        let ord = self.ring.order();
        let touched: Vec<usize> = (0..self.fs.len()).filter(|&j| !self.dfs[i][j].is_zero()).collect();
        let mut prod_all = self.ring.one();
        for &j in &touched {
            prod_all = self.mul(&prod_all, &self.fs[j]);
        }
        let mut numer = self.mul(&e.numer.derivative(i), &prod_all);
        for &j in &touched {
            let mut term = self.mul(&e.numer, &self.dfs[i][j]);
            let coef = self.s(j).sub(&self.ring.constant(q(e.denom[j] as i64)), ord);
            term = self.mul(&term, &coef);
            for &l in &touched {
                if l != j {
                    term = self.mul(&term, &self.fs[l]);
                }
            }
            numer = numer.add(&term, ord);
        }
        let mut denom = e.denom;
        for &j in &touched {
            denom[j] += 1;
        }
        FsElement { numer, denom }
    }

    /// `s_ij • (G f^s) = s_i G(s + ε_j - ε_i) (f_j / f_i) f^s`.
    fn gl(&self, e: FsElement, i: usize, j: usize) -> Result<FsElement> {
        if i == j {
            return Ok(self.times_s(e, i));
        }
        let ord = self.ring.order();
        let (si, sj) = (self.n + i, self.n + j);
        let mut images: Vec<OpPoly> = (0..self.ring.nvars()).map(|k| self.ring.var(k)).collect();
        images[sj] = images[sj].add(&self.ring.one(), ord);
        images[si] = images[si].sub(&self.ring.one(), ord);
        let shift = AlgebraMap::new(self.ring.clone(), self.ring.clone(), images)?;
        let g = shift.apply(&e.numer)?;
        let numer = self.mul(&self.mul(&g, &self.s(i)), &self.fs[j]);
        let mut denom = e.denom;
        denom[i] += 1;
        Ok(FsElement { numer, denom })
    }

    fn add(&self, a: FsElement, b: FsElement) -> FsElement {
        let denom: Vec<u32> = a.denom.iter().zip(&b.denom).map(|(x, y)| *x.max(y)).collect();
        let lift = |e: FsElement| {
            let mut g = e.numer;
            for (j, (&have, &want)) in e.denom.iter().zip(&denom).enumerate() {
                for _ in have..want {
                    g = self.mul(&g, &self.fs[j]);
                }
            }
            g
        };
        let numer = lift(a).add(&lift(b), self.ring.order());
        FsElement { numer, denom }
    }

    /// `op • f^s` for `op` in an algebra whose variables carry `X`, `D`, `S` or `Sij` roles.
    pub fn apply(&self, alg: &Algebra, op: &OpPoly) -> Result<FsElement> {
        alg.check_member(op)?;
        let mut total = FsElement { numer: OpPoly::zero(), denom: vec![0; self.fs.len()] };
        for t in op.terms() {
            let mut e = self.unit();
            e.numer = e.numer.scale(&t.coeff);
            for v in (0..alg.nvars()).rev() {
                for _ in 0..t.exp.get(v) {
                    e = match alg.roles()[v] {
                        VarRole::X(i) if i < self.n => self.times_x(e, i),
                        VarRole::D(i) if i < self.n => self.derive(e, i),
                        VarRole::S(j) if j < self.fs.len() => self.times_s(e, j),
                        VarRole::Sij(i, j) if i.max(j) < self.fs.len() => self.gl(e, i, j)?,
                        _ => return Err(DmodError::InvalidInput(format!("variable {} does not act on f^s", alg.name(v)))),
                    };
                }
            }
            total = self.add(total, e);
        }
        Ok(total)
    }
}

/// `op • f^s` as an element of `K[x, s, 1/f] f^s`.
pub fn apply_to_fs(alg: &Algebra, op: &OpPoly, ring: &Algebra, fs: &[OpPoly]) -> Result<FsElement> {
    FsAction::new(ring, fs)?.apply(alg, op)
}
