use std::cmp::Ordering;
use std::sync::Arc;

use parking_lot::RwLock;
use rustc_hash::FxHashMap;

use crate::error::{DmodError, Result};
use crate::polyarith::{Coeff, ExpVec, ModuleRule, MonOrder, Poly, Term, TermOrder};

/// What a variable stands for; presets fill this in so constructions can find paired blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarRole {
    /// Position variable of Weyl pair `k`.
    X(usize),
    /// Derivation of Weyl pair `k`.
    D(usize),
    /// Parameter `s_k`.
    S(usize),
    /// `s_ij` of the gl_r extension (zero-based indices).
    Sij(usize, usize),
    T(usize),
    Dt(usize),
    /// Homogenizing variable.
    H,
    Plain,
}

pub(crate) type TermList<K> = Vec<(ExpVec, K)>;
type PairKey = (u16, u16, u16, u16);

/// A G-algebra of Lie type: `x_j x_i = x_i x_j + d_ij` for `i < j`.
#[derive(Clone)]
pub struct GAlgebra<K: Coeff> {
    pub(crate) names: Vec<String>,
    pub(crate) roles: Vec<VarRole>,
    pub(crate) rels: Arc<FxHashMap<(usize, usize), TermList<K>>>,
    /// Bit `i` of `below[j]` is set when `i < j` and `d_ij != 0`.
    pub(crate) below: Vec<u64>,
    pub(crate) order: TermOrder,
    pub(crate) memo: Arc<RwLock<FxHashMap<PairKey, Arc<TermList<K>>>>>,
}

impl<K: Coeff> std::fmt::Debug for GAlgebra<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GAlgebra").field("vars", &self.names).field("order", self.order.kind()).finish()
    }
}

/// A relation `x_j x_i = x_i x_j + d` given by variable indices `i < j`.
#[derive(Clone, Debug)]
pub struct Relation<K> {
    pub i: usize,
    pub j: usize,
    pub d: Vec<(ExpVec, K)>,
}

impl<K: Coeff> GAlgebra<K> {
    /// Builds an algebra and checks admissibility and nondegeneracy.
    pub fn new(names: Vec<String>, roles: Vec<VarRole>, relations: Vec<Relation<K>>, order: MonOrder) -> Result<Self> {
        let n = names.len();
        if n > 64 {
            return Err(DmodError::InvalidInput("at most 64 variables are supported".into()));
        }
        if roles.len() != n {
            return Err(DmodError::LengthMismatch { expected: n, found: roles.len() });
        }
        let mut rels = FxHashMap::default();
        let mut below = vec![0u64; n];
        for r in relations {
            if r.i >= r.j || r.j >= n {
                return Err(DmodError::InvalidInput(format!("relation indices ({}, {}) must satisfy i < j < {}", r.i, r.j, n)));
            }
            let mut d: TermList<K> = Vec::new();
            for (e, c) in r.d {
                if e.len() != n {
                    return Err(DmodError::LengthMismatch { expected: n, found: e.len() });
                }
                if !c.is_zero() {
                    d.push((e, c));
                }
            }
            let d = combine(d);
            if d.is_empty() {
                continue;
            }
            below[r.j] |= 1 << r.i;
            rels.insert((r.i, r.j), d);
        }
        let order = TermOrder::new(order, ModuleRule::default(), n)?;
        let alg = GAlgebra { names, roles, rels: Arc::new(rels), below, order, memo: Arc::new(RwLock::new(FxHashMap::default())) };
        alg.check_admissible()?;
        alg.check_nondegenerate()?;
        Ok(alg)
    }

    fn check_admissible(&self) -> Result<()> {
        let n = self.nvars();
        for (&(i, j), d) in self.rels.iter() {
            let mut xij = ExpVec::zeros(n);
            xij.set(i, 1);
            xij.set(j, xij.get(j) + 1);
            if let Some(lm) = d.iter().map(|(e, _)| e).max_by(|a, b| self.order.cmp_exp(a, b)) {
                if self.order.cmp_exp(lm, &xij) != Ordering::Less {
                    return Err(DmodError::Admissibility {
                        a: self.names[i].clone(),
                        b: self.names[j].clone(),
                        lm: self.render_monomial(lm),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_nondegenerate(&self) -> Result<()> {
        let n = self.nvars();
        let zero = || Poly::<K>::zero();
        let rel = |i: usize, j: usize| match self.rels.get(&(i, j)) {
            Some(d) => Poly::from_terms(d.iter().map(|(e, c)| Term { exp: e.clone(), comp: 0, coeff: c.clone() }).collect(), &self.order),
            None => zero(),
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (dij, dik, djk) = (rel(i, j), rel(i, k), rel(j, k));
                    if dij.is_zero() && dik.is_zero() && djk.is_zero() {
                        continue;
                    }
                    let (xi, xj, xk) = (Poly::var(n, i), Poly::var(n, j), Poly::var(n, k));
                    let ndc = self
                        .lie_bracket(&dij, &xk)
                        .add(&self.lie_bracket(&xj, &dik), &self.order)
                        .add(&self.lie_bracket(&djk, &xi), &self.order);
                    if !ndc.is_zero() {
                        return Err(DmodError::Nondegeneracy(self.names[i].clone(), self.names[j].clone(), self.names[k].clone()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Same algebra with another monomial ordering (admissibility is re-checked; the product memo is shared).
    pub fn with_order(&self, order: MonOrder) -> Result<Self> {
        let mut a = self.clone();
        a.order = TermOrder::new(order, self.order.module_rule().clone(), self.nvars())?;
        a.check_admissible()?;
        Ok(a)
    }

    pub fn with_module_rule(&self, rule: ModuleRule) -> Self {
        let mut a = self.clone();
        a.order = self.order.with_module_rule(rule);
        a
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn roles(&self) -> &[VarRole] {
        &self.roles
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn find_role(&self, role: &VarRole) -> Option<usize> {
        self.roles.iter().position(|r| r == role)
    }

    #[inline]
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// `d_ij` for `i < j` (empty when the variables commute).
    pub fn relation(&self, i: usize, j: usize) -> Poly<K> {
        match self.rels.get(&(i.min(j), i.max(j))) {
            Some(d) => Poly::from_terms(d.iter().map(|(e, c)| Term { exp: e.clone(), comp: 0, coeff: c.clone() }).collect(), &self.order),
            None => Poly::zero(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        self.rels.is_empty()
    }

    pub fn vars_commute(&self, i: usize, j: usize) -> bool {
        let (a, b) = (i.min(j), i.max(j));
        self.below[b] & (1 << a) == 0
    }

    pub fn var(&self, i: usize) -> Poly<K> {
        Poly::var(self.nvars(), i)
    }

    pub fn one(&self) -> Poly<K> {
        Poly::one(self.nvars())
    }

    pub fn constant(&self, c: K) -> Poly<K> {
        Poly::constant(c, self.nvars())
    }

    pub fn check_member(&self, p: &Poly<K>) -> Result<()> {
        match p.lead() {
            Some(t) if t.exp.len() != self.nvars() => Err(DmodError::AlgebraMismatch),
            _ => Ok(()),
        }
    }

    pub fn render_monomial(&self, e: &ExpVec) -> String {
        let mut parts = Vec::new();
        for (i, &x) in e.iter().enumerate() {
            match x {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                _ => parts.push(format!("{}^{}", self.names[i], x)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Sums duplicate monomials of an unordered term list.
pub(crate) fn combine<K: Coeff>(mut v: TermList<K>) -> TermList<K> {
    if v.len() < 2 {
        return v;
    }
    v.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out: TermList<K> = Vec::with_capacity(v.len());
    for (e, c) in v {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc = lc.add_ref(&c),
            _ => out.push((e, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}
