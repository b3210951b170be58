//! Sparse polynomials and free-module elements as sorted term lists.
//!
//! A [`Poly`] never stores its ordering. Every operation that depends on the
//! ordering takes a [`TermOrder`]; terms are kept strictly descending under it.
//! Module elements use the `comp` field of each term; ideal elements use 0.

use std::cmp::Ordering;

use rustc_hash::FxHashMap;

use crate::polyarith::coeff::Coeff;
use crate::polyarith::expvec::{Exp, ExpVec};
use crate::polyarith::order::TermOrder;

#[derive(Clone, Debug, PartialEq)]
pub struct Term<K> {
    pub exp: ExpVec,
    pub comp: u32,
    pub coeff: K,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Poly<K> {
    terms: Vec<Term<K>>,
}

impl<K: Coeff> Poly<K> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: K, nvars: usize) -> Self {
        Self::monomial(c, ExpVec::zeros(nvars), 0)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(K::one(), nvars)
    }

    pub fn monomial(c: K, exp: ExpVec, comp: u32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly { terms: vec![Term { exp, comp, coeff: c }] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(K::one(), ExpVec::unit(nvars, i, 1), 0)
    }

    /// Wraps terms that are already strictly descending with non-zero coefficients.
    pub fn from_sorted(terms: Vec<Term<K>>) -> Self {
        Poly { terms }
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(mut terms: Vec<Term<K>>, ord: &TermOrder) -> Self {
        terms.sort_by(|a, b| ord.cmp_term(&b.exp, b.comp, &a.exp, a.comp));
        let mut out: Vec<Term<K>> = Vec::with_capacity(terms.len());
        let mut cur: Option<Term<K>> = None;
        for t in terms {
            match &mut cur {
                Some(c) if c.exp == t.exp && c.comp == t.comp => c.coeff = c.coeff.add_ref(&t.coeff),
                _ => {
                    if let Some(c) = cur.take() {
                        if !c.coeff.is_zero() {
                            out.push(c);
                        }
                    }
                    cur = Some(t);
                }
            }
        }
        if let Some(c) = cur {
            if !c.coeff.is_zero() {
                out.push(c);
            }
        }
        Poly { terms: out }
    }

    /// Builds from an unordered accumulation map.
    pub fn from_map(map: FxHashMap<(ExpVec, u32), K>, ord: &TermOrder) -> Self {
        let terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((exp, comp), coeff)| Term { exp, comp, coeff })
            .collect();
        Self::from_terms(terms, ord)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term<K>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<K>> {
        self.terms
    }

    #[inline]
    pub fn lead(&self) -> Option<&Term<K>> {
        self.terms.first()
    }

    pub fn lm(&self) -> &ExpVec {
        &self.terms[0].exp
    }

    pub fn lc(&self) -> &K {
        &self.terms[0].coeff
    }

    pub fn lcomp(&self) -> u32 {
        self.terms[0].comp
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exp.is_one()
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self.terms.iter().map(|t| Term { exp: t.exp.clone(), comp: t.comp, coeff: -t.coeff.clone() }).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|t| Term { exp: t.exp.clone(), comp: t.comp, coeff: t.coeff.mul_ref(c) })
                .collect(),
        }
    }

    pub fn scale_mut(&mut self, c: &K) {
        if c.is_one() {
            return;
        }
        for t in &mut self.terms {
            t.coeff = t.coeff.mul_ref(c);
        }
    }

    /// `self + a * other`.
    pub fn axpy(&self, a: &K, other: &Poly<K>, ord: &TermOrder) -> Self {
        if a.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() && j < y.len() {
            match ord.cmp_term(&x[i].exp, x[i].comp, &y[j].exp, y[j].comp) {
                Ordering::Greater => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { exp: y[j].exp.clone(), comp: y[j].comp, coeff: y[j].coeff.mul_ref(a) });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = x[i].coeff.add_ref(&y[j].coeff.mul_ref(a));
                    if !c.is_zero() {
                        out.push(Term { exp: x[i].exp.clone(), comp: x[i].comp, coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(x[i..].iter().cloned());
        out.extend(y[j..].iter().map(|t| Term { exp: t.exp.clone(), comp: t.comp, coeff: t.coeff.mul_ref(a) }));
        Poly { terms: out }
    }

    /// In-place `self = self + a * other`, consuming `other`.
    pub fn axpy_owned(&mut self, a: &K, other: Poly<K>, ord: &TermOrder) {
        if a.is_zero() || other.is_zero() {
            return;
        }
        let x = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(x.len() + other.len());
        let mut xi = x.into_iter().peekable();
        let mut yi = other.terms.into_iter().peekable();
        loop {
            let ord_res = match (xi.peek(), yi.peek()) {
                (Some(p), Some(q)) => ord.cmp_term(&p.exp, p.comp, &q.exp, q.comp),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord_res {
                Ordering::Greater => out.push(xi.next().unwrap()),
                Ordering::Less => {
                    let mut t = yi.next().unwrap();
                    if !a.is_one() {
                        t.coeff = t.coeff.mul_ref(a);
                    }
                    out.push(t);
                }
                Ordering::Equal => {
                    let mut t = xi.next().unwrap();
                    let q = yi.next().unwrap();
                    t.coeff = t.coeff.add_ref(&q.coeff.mul_ref(a));
                    if !t.coeff.is_zero() {
                        out.push(t);
                    }
                }
            }
        }
        self.terms = out;
    }

    pub fn add(&self, other: &Poly<K>, ord: &TermOrder) -> Self {
        self.axpy(&K::one(), other, ord)
    }

    pub fn sub(&self, other: &Poly<K>, ord: &TermOrder) -> Self {
        self.axpy(&-K::one(), other, ord)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(t) if t.coeff.is_one() => self.clone(),
            Some(t) => {
                let inv = K::one() / t.coeff.clone();
                self.scale(&inv)
            }
        }
    }

    /// Removes the content in place and returns the factor divided out.
    pub fn remove_content(&mut self) -> K {
        if self.is_zero() {
            return K::one();
        }
        let mut cs: Vec<K> = self.terms.iter().map(|t| t.coeff.clone()).collect();
        let f = K::remove_content(&mut cs);
        for (t, c) in self.terms.iter_mut().zip(cs) {
            t.coeff = c;
        }
        f
    }

    pub fn resort(&self, ord: &TermOrder) -> Self {
        Self::from_terms(self.terms.clone(), ord)
    }

    /// Multiplies every monomial by `e` (commutative shift; order preserving).
    pub fn mul_exp(&self, e: &ExpVec) -> Self {
        Poly {
            terms: self.terms.iter().map(|t| Term { exp: t.exp.add(e), comp: t.comp, coeff: t.coeff.clone() }).collect(),
        }
    }

    pub fn pop_lead(&mut self) -> Option<Term<K>> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Drops the leading term.
    pub fn tail(&self) -> Self {
        Poly { terms: self.terms.get(1..).map(|s| s.to_vec()).unwrap_or_default() }
    }

    pub fn support_mask(&self) -> u64 {
        self.terms.iter().fold(0, |m, t| m | t.exp.mask())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.exp.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> Exp {
        self.terms.iter().map(|t| t.exp.get(var)).max().unwrap_or(0)
    }

    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    pub fn with_comp(&self, comp: u32) -> Self {
        Poly { terms: self.terms.iter().map(|t| Term { exp: t.exp.clone(), comp, coeff: t.coeff.clone() }).collect() }
    }

    /// Extracts component `comp` as an ideal element (component 0).
    pub fn component(&self, comp: u32, ord: &TermOrder) -> Self {
        let terms: Vec<Term<K>> = self
            .terms
            .iter()
            .filter(|t| t.comp == comp)
            .map(|t| Term { exp: t.exp.clone(), comp: 0, coeff: t.coeff.clone() })
            .collect();
        Self::from_terms(terms, ord)
    }

    /// Assembles a module element from component polynomials.
    pub fn from_components(parts: &[Poly<K>], ord: &TermOrder) -> Self {
        let mut terms = Vec::new();
        for (c, p) in parts.iter().enumerate() {
            terms.extend(p.terms.iter().map(|t| Term { exp: t.exp.clone(), comp: c as u32, coeff: t.coeff.clone() }));
        }
        Self::from_terms(terms, ord)
    }

    /// Moves variables to new slots; `None` entries must have exponent 0 or the result is `None`.
    pub fn reindex(&self, map: &[Option<usize>], nvars: usize, ord: &TermOrder) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.len());
        for t in &self.terms {
            let mut e = ExpVec::zeros(nvars);
            for (i, &x) in t.exp.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[i]?;
                e.set(j, e.get(j) + x);
            }
            terms.push(Term { exp: e, comp: t.comp, coeff: t.coeff.clone() });
        }
        Some(Self::from_terms(terms, ord))
    }

    /// Commutative product.
    pub fn mul_comm(&self, other: &Poly<K>, ord: &TermOrder) -> Self {
        let mut map: FxHashMap<(ExpVec, u32), K> = FxHashMap::default();
        for a in &self.terms {
            for b in &other.terms {
                let key = (a.exp.add(&b.exp), a.comp.max(b.comp));
                let c = a.coeff.mul_ref(&b.coeff);
                match map.get_mut(&key) {
                    Some(v) => *v = v.add_ref(&c),
                    None => {
                        map.insert(key, c);
                    }
                }
            }
        }
        Self::from_map(map, ord)
    }

    pub fn pow_comm(&self, k: u32, ord: &TermOrder, nvars: usize) -> Self {
        let mut r = Self::one(nvars);
        for _ in 0..k {
            r = r.mul_comm(self, ord);
        }
        r
    }

    /// Partial derivative with respect to `var`, treating all variables as commuting.
    pub fn derivative(&self, var: usize) -> Self {
        let mut terms = Vec::new();
        for t in &self.terms {
            let e = t.exp.get(var);
            if e == 0 {
                continue;
            }
            let mut x = t.exp.clone();
            x.set(var, e - 1);
            let mut c = K::zero();
            for _ in 0..e {
                c = c + K::one();
            }
            terms.push(Term { exp: x, comp: t.comp, coeff: t.coeff.clone() * c });
        }
        // d/dx preserves the relative order of surviving terms for every monomial order.
        Poly { terms }
    }

    /// Substitutes a constant for `var`; valid as a ring map only when `var` is central.
    pub fn substitute_const(&self, var: usize, value: &K, ord: &TermOrder) -> Self {
        let mut terms = Vec::with_capacity(self.len());
        for t in &self.terms {
            let e = t.exp.get(var);
            let mut c = t.coeff.clone();
            for _ in 0..e {
                c = c * value.clone();
            }
            let mut x = t.exp.clone();
            x.set(var, 0);
            terms.push(Term { exp: x, comp: t.comp, coeff: c });
        }
        Self::from_terms(terms, ord)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn p(terms: &[(i64, [u16; 2])], ord: &TermOrder) -> Poly<BigRational> {
        Poly::from_terms(terms.iter().map(|(c, e)| Term { exp: ExpVec::from_slice(e), comp: 0, coeff: q(*c) }).collect(), ord)
    }

    #[test]
    fn combine_and_cancel() {
        let o = TermOrder::degrevlex(2);
        let a = p(&[(1, [1, 0]), (2, [0, 1]), (-1, [1, 0])], &o);
        assert_eq!(a, p(&[(2, [0, 1])], &o));
        let b = p(&[(1, [1, 0]), (1, [0, 0])], &o);
        let c = b.sub(&b, &o);
        assert!(c.is_zero());
        let mut d = b.clone();
        d.axpy_owned(&q(-1), b.clone(), &o);
        assert!(d.is_zero());
    }

    #[test]
    fn commutative_product_and_derivative() {
        let o = TermOrder::degrevlex(2);
        let x_plus_y = p(&[(1, [1, 0]), (1, [0, 1])], &o);
        let sq = x_plus_y.mul_comm(&x_plus_y, &o);
        assert_eq!(sq, p(&[(1, [2, 0]), (2, [1, 1]), (1, [0, 2])], &o));
        assert_eq!(sq.derivative(0), p(&[(2, [1, 0]), (2, [0, 1])], &o));
    }
}
