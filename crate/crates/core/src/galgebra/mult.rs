//! Multiplication by relation rewriting.
//!
//! A product of standard monomials `a * b` is rewritten by locating the
//! highest variable `x_j` of `a` that fails to commute with some variable of
//! `b`, and the lowest such partner `x_i` in `b`. Then
//! `a * b = (a_lo * b_pre) * (x_j^e * x_i^f) * rest`, where the middle factor
//! comes from a per-algebra memo and the outer products recurse.

use std::sync::Arc;

use crate::galgebra::algebra::{combine, GAlgebra, TermList};
use crate::polyarith::{Coeff, ExpVec, Poly, Term};

impl<K: Coeff> GAlgebra<K> {
    /// True when `a * b` is the commutative product (every variable of `a` passes the smaller ones of `b`).
    #[inline]
    pub fn commutes_exp(&self, a: &ExpVec, b: &ExpVec) -> bool {
        let mb = b.mask();
        if mb == 0 {
            return true;
        }
        for (j, &e) in a.iter().enumerate() {
            if e != 0 && self.below[j] & mb != 0 {
                return false;
            }
        }
        true
    }

    /// True when the two supports commute variable by variable, so `f*g = g*f`.
    pub fn supports_commute(&self, mf: u64, mg: u64) -> bool {
        let mut m = mf;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            if self.below[j] & mg != 0 {
                return false;
            }
            m &= m - 1;
        }
        let mut m = mg;
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            if self.below[j] & mf != 0 {
                return false;
            }
            m &= m - 1;
        }
        true
    }

    /// Product of two standard monomials as an unordered, combined term list.
    pub fn mono_mul(&self, a: &ExpVec, b: &ExpVec) -> Vec<(ExpVec, K)> {
        if self.commutes_exp(a, b) {
            return vec![(a.add(b), K::one())];
        }
        let mut acc = Vec::new();
        self.mono_mul_into(a, b, &K::one(), &mut acc);
        combine(acc)
    }

    fn mono_mul_into(&self, a: &ExpVec, b: &ExpVec, coef: &K, acc: &mut TermList<K>) {
        if self.commutes_exp(a, b) {
            acc.push((a.add(b), coef.clone()));
            return;
        }
        let mb = b.mask();
        let n = self.nvars();
        let j = (0..n).rev().find(|&j| a.get(j) != 0 && self.below[j] & mb != 0).expect("non-commuting pair exists");
        let i = (self.below[j] & mb).trailing_zeros() as usize;
        let (e, f) = (a.get(j), b.get(i));
        let a_lo = a.restrict(|k| k < j);
        let b_pre = b.restrict(|k| k < i);
        let rest = a.restrict(|k| k > j).add(&b.restrict(|k| k > i));
        let p = self.pair_product(j, e, i, f);
        let left = self.mono_mul(&a_lo, &b_pre);
        for (lm, lc) in &left {
            for (pm, pc) in p.iter() {
                let c1 = coef.mul_ref(lc).mul_ref(pc);
                if self.commutes_exp(lm, pm) {
                    self.mono_mul_into(&lm.add(pm), &rest, &c1, acc);
                } else {
                    for (mm, mc) in self.mono_mul(lm, pm) {
                        self.mono_mul_into(&mm, &rest, &c1.mul_ref(&mc), acc);
                    }
                }
            }
        }
    }

    /// `x_j^e * x_i^f` for `i < j`, memoized.
    fn pair_product(&self, j: usize, e: u16, i: usize, f: u16) -> Arc<TermList<K>> {
        let key = (j as u16, e, i as u16, f);
        if let Some(v) = self.memo.read().get(&key) {
            return v.clone();
        }
        let n = self.nvars();
        let list = if e == 1 && f == 1 {
            let mut v = vec![(ExpVec::unit(n, i, 1).add(&ExpVec::unit(n, j, 1)), K::one())];
            v.extend(self.rels.get(&(i, j)).cloned().unwrap_or_default());
            combine(v)
        } else if f > 1 {
            let prev = self.pair_product(j, e, i, f - 1);
            let xi = ExpVec::unit(n, i, 1);
            let mut acc = Vec::new();
            for (m, c) in prev.iter() {
                self.mono_mul_into(m, &xi, c, &mut acc);
            }
            combine(acc)
        } else {
            let prev = self.pair_product(j, e - 1, i, 1);
            let xj = ExpVec::unit(n, j, 1);
            let mut acc = Vec::new();
            for (m, c) in prev.iter() {
                self.mono_mul_into(&xj, m, c, &mut acc);
            }
            combine(acc)
        };
        let list = Arc::new(list);
        self.memo.write().insert(key, list.clone());
        list
    }

    /// `c * x^m * p` (left multiplication by a term).
    pub fn mul_term_poly(&self, c: &K, m: &ExpVec, p: &Poly<K>) -> Poly<K> {
        let mut main = Vec::with_capacity(p.len());
        let mut corr = Vec::new();
        for t in p.terms() {
            if self.commutes_exp(m, &t.exp) {
                main.push(Term { exp: m.add(&t.exp), comp: t.comp, coeff: c.mul_ref(&t.coeff) });
            } else {
                let k = c.mul_ref(&t.coeff);
                for (e, x) in self.mono_mul(m, &t.exp) {
                    corr.push(Term { exp: e, comp: t.comp, coeff: k.mul_ref(&x) });
                }
            }
        }
        let mut main = Poly::from_sorted(main);
        if !corr.is_empty() {
            main.axpy_owned(&K::one(), Poly::from_terms(corr, &self.order), &self.order);
        }
        main
    }

    /// `p * c * x^m` (right multiplication by a term).
    pub fn mul_poly_term(&self, p: &Poly<K>, c: &K, m: &ExpVec) -> Poly<K> {
        let mut terms = Vec::new();
        for t in p.terms() {
            let k = c.mul_ref(&t.coeff);
            for (e, x) in self.mono_mul(&t.exp, m) {
                terms.push(Term { exp: e, comp: t.comp, coeff: k.mul_ref(&x) });
            }
        }
        Poly::from_terms(terms, &self.order)
    }

    /// The product `a * b`. When `b` is a module element, `a` acts on each component.
    pub fn star_mul(&self, a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        if a.len() == 1 {
            let t = &a.terms()[0];
            return self.mul_term_poly(&t.coeff, &t.exp, b).shift_comp(t.comp);
        }
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for ta in a.terms() {
            for tb in b.terms() {
                let k = ta.coeff.mul_ref(&tb.coeff);
                if self.commutes_exp(&ta.exp, &tb.exp) {
                    terms.push(Term { exp: ta.exp.add(&tb.exp), comp: ta.comp + tb.comp, coeff: k });
                } else {
                    for (e, x) in self.mono_mul(&ta.exp, &tb.exp) {
                        terms.push(Term { exp: e, comp: ta.comp + tb.comp, coeff: k.mul_ref(&x) });
                    }
                }
            }
        }
        Poly::from_terms(terms, &self.order)
    }

    pub fn pow(&self, a: &Poly<K>, k: u32) -> Poly<K> {
        let mut r = self.one();
        for _ in 0..k {
            r = self.star_mul(&r, a);
        }
        r
    }

    /// `[a, b] = a*b - b*a`; term pairs with commuting supports are skipped.
    pub fn lie_bracket(&self, a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
        let mut terms = Vec::new();
        for ta in a.terms() {
            for tb in b.terms() {
                if self.supports_commute(ta.exp.mask(), tb.exp.mask()) {
                    continue;
                }
                let k = ta.coeff.mul_ref(&tb.coeff);
                for (e, x) in self.mono_mul(&ta.exp, &tb.exp) {
                    terms.push(Term { exp: e, comp: 0, coeff: k.mul_ref(&x) });
                }
                for (e, x) in self.mono_mul(&tb.exp, &ta.exp) {
                    terms.push(Term { exp: e, comp: 0, coeff: -k.mul_ref(&x) });
                }
            }
        }
        Poly::from_terms(terms, &self.order)
    }

    /// `a*b - k*b*a`.
    pub fn skew_bracket(&self, a: &Poly<K>, b: &Poly<K>, k: &K) -> Poly<K> {
        self.star_mul(a, b).axpy(&-k.clone(), &self.star_mul(b, a), &self.order)
    }
}

impl<K: Coeff> Poly<K> {
    pub(crate) fn shift_comp(self, c: u32) -> Self {
        if c == 0 {
            return self;
        }
        Poly::from_sorted(self.into_terms().into_iter().map(|t| Term { exp: t.exp, comp: t.comp + c, coeff: t.coeff }).collect())
    }
}
