//! Buchberger's algorithm for left ideals and submodules.
//!
//! Pairs are filtered with the Gebauer–Möller installation of the chain
//! criterion. For ideals, a pair with coprime leading monomials is dropped
//! when the two supports commute and otherwise replaced by the commutator
//! `[f, g]`, which has the same reduction behaviour as its s-polynomial.

use std::cmp::Ordering;
use std::time::Instant;

use crate::error::{DmodError, Result};
use crate::galgebra::GAlgebra;
use crate::groebner::reduce::{reduce, Reducer};
use crate::groebner::GBasis;
use crate::polyarith::{Coeff, ExpVec, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Smallest lcm degree first, ties by the ordering.
    #[default]
    Normal,
    /// Smallest weighted length of the two polynomials first (sum over terms of coefficient size in 32-bit words).
    Slim,
}

#[derive(Clone, Debug)]
pub struct GbOptions {
    /// Chain criterion and the commutator form of the product criterion.
    pub criteria: bool,
    pub strategy: Strategy,
    /// Fail once a pair of larger lcm degree would be processed.
    pub degree_cap: Option<u32>,
    pub deadline: Option<Instant>,
    /// Keep only new elements whose leading component is this one.
    pub lead_comp_only: Option<u32>,
    /// Interreduce and monicize the result.
    pub reduce: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { criteria: true, strategy: Strategy::Normal, degree_cap: None, deadline: None, lead_comp_only: None, reduce: true }
    }
}

impl GbOptions {
    pub fn with_cap(cap: Option<u32>) -> Self {
        GbOptions { degree_cap: cap, ..Default::default() }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExpVec,
    comp: u32,
    deg: u32,
    weight: usize,
}

struct Engine<'a, K: Coeff> {
    alg: &'a GAlgebra<K>,
    opts: &'a GbOptions,
    basis: Vec<Poly<K>>,
    active: Vec<bool>,
    weights: Vec<usize>,
    pairs: Vec<Pair>,
    module: bool,
}

fn wlen<K: Coeff>(p: &Poly<K>) -> usize {
    p.terms().iter().map(|t| t.coeff.weight()).sum()
}

impl<'a, K: Coeff> Engine<'a, K> {
    fn reducer(&self) -> Reducer<'_, K> {
        Reducer::new(self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(p, _)| p))
    }

    fn check_limits(&self, deg: u32) -> Result<()> {
        if let Some(cap) = self.opts.degree_cap {
            if deg > cap {
                return Err(DmodError::CapExceeded(format!("Gröbner basis pair of degree {deg} exceeds the degree cap {cap}")));
            }
        }
        if let Some(d) = self.opts.deadline {
            if Instant::now() > d {
                return Err(DmodError::CapExceeded("time budget exhausted".into()));
            }
        }
        Ok(())
    }

    fn insert(&mut self, h: Poly<K>) {
        let idx = self.basis.len();
        let (eh, ch) = (h.lm().clone(), h.lcomp());
        self.weights.push(wlen(&h));
        self.basis.push(h);
        self.active.push(true);

        let mut cand: Vec<Pair> = Vec::new();
        for i in 0..idx {
            if !self.active[i] || self.basis[i].lcomp() != ch {
                continue;
            }
            let lcm = self.basis[i].lm().lcm(&eh);
            let deg = lcm.degree();
            cand.push(Pair { i, j: idx, lcm, comp: ch, deg, weight: self.weights[i] + self.weights[idx] });
        }

        if self.opts.criteria {
            // Old pairs whose lcm is a strict multiple of lm(h) in both directions.
            let basis = &self.basis;
            self.pairs.retain(|p| {
                if p.comp != ch || !eh.divides(&p.lcm) {
                    return true;
                }
                let li = basis[p.i].lm().lcm(&eh);
                let lj = basis[p.j].lm().lcm(&eh);
                li == p.lcm || lj == p.lcm
            });
            // New pairs whose lcm is a strict multiple of another new lcm.
            let keep: Vec<bool> = (0..cand.len())
                .map(|a| !cand.iter().enumerate().any(|(b, q)| b != a && q.lcm != cand[a].lcm && q.lcm.divides(&cand[a].lcm)))
                .collect();
            let mut filtered: Vec<Pair> = cand.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect();
            // One pair per lcm, preferring one that the product criterion removes outright.
            filtered.sort_by(|a, b| a.lcm.cmp(&b.lcm).then(a.i.cmp(&b.i)));
            let mut out: Vec<Pair> = Vec::new();
            let mut k = 0;
            while k < filtered.len() {
                let mut end = k;
                while end < filtered.len() && filtered[end].lcm == filtered[k].lcm {
                    end += 1;
                }
                let pick = (k..end).find(|&x| self.dropped_by_product(&filtered[x])).unwrap_or(k);
                out.push(filtered[pick].clone());
                k = end;
            }
            cand = out;
            cand.retain(|p| !self.dropped_by_product(p));
        }
        self.pairs.extend(cand);

        for i in 0..idx {
            if self.active[i] && self.basis[i].lcomp() == ch && eh.divides(self.basis[i].lm()) {
                self.active[i] = false;
            }
        }
    }

    fn coprime_ideal_pair(&self, p: &Pair) -> bool {
        !self.module && self.basis[p.i].lm().is_coprime(self.basis[p.j].lm())
    }

    fn dropped_by_product(&self, p: &Pair) -> bool {
        self.coprime_ideal_pair(p) && self.alg.supports_commute(self.basis[p.i].support_mask(), self.basis[p.j].support_mask())
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let ord = self.alg.order();
        let strategy = self.opts.strategy;
        let cmp = |a: &Pair, b: &Pair| -> Ordering {
            let primary = match strategy {
                Strategy::Normal => a.deg.cmp(&b.deg),
                Strategy::Slim => a.weight.cmp(&b.weight).then(a.deg.cmp(&b.deg)),
            };
            primary.then_with(|| ord.cmp_term(&a.lcm, a.comp, &b.lcm, b.comp)).then((a.i, a.j).cmp(&(b.i, b.j)))
        };
        let mut best = 0;
        for k in 1..self.pairs.len() {
            if cmp(&self.pairs[k], &self.pairs[best]) == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Poly<K> {
        let (f, g) = (&self.basis[p.i], &self.basis[p.j]);
        if self.opts.criteria && self.coprime_ideal_pair(p) {
            return self.alg.lie_bracket(f, g);
        }
        let (u, v) = K::cancel_factors(f.lc(), g.lc());
        let a = self.alg.mul_term_poly(&u, &p.lcm.sub(f.lm()), f);
        let b = self.alg.mul_term_poly(&v, &p.lcm.sub(g.lm()), g);
        a.sub(&b, self.alg.order())
    }

    fn add_reduced(&mut self, p: Poly<K>) -> bool {
        let red = self.reducer();
        let mut h = reduce(self.alg, &p, &red, true, false);
        drop(red);
        if h.is_zero() {
            return false;
        }
        if let Some(c) = self.opts.lead_comp_only {
            if h.lcomp() != c {
                return false;
            }
        }
        h.remove_content();
        let unit = !self.module && h.lm().is_one();
        self.insert(h);
        unit
    }
}

/// Computes a left Gröbner basis of the ideal (or submodule) generated by `gens`.
pub fn buchberger<K: Coeff>(alg: &GAlgebra<K>, gens: &[Poly<K>], opts: &GbOptions) -> Result<GBasis<K>> {
    if !alg.order().is_global() {
        return Err(DmodError::NotGlobal);
    }
    for g in gens {
        alg.check_member(g)?;
    }
    let module = gens.iter().any(|g| g.terms().iter().any(|t| t.comp != 0));
    let mut eng = Engine { alg, opts, basis: vec![], active: vec![], weights: vec![], pairs: vec![], module };
    let ord = alg.order();
    let mut input: Vec<Poly<K>> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by(|a, b| ord.cmp_term(a.lm(), a.lcomp(), b.lm(), b.lcomp()).then(a.len().cmp(&b.len())));
    let mut unit = false;
    for g in input {
        if eng.add_reduced(g) {
            unit = true;
            break;
        }
    }
    while !unit {
        let Some(p) = eng.select() else { break };
        eng.check_limits(p.deg)?;
        if opts.criteria && eng.dropped_by_product(&p) {
            continue;
        }
        let s = eng.spoly(&p);
        if eng.add_reduced(s) {
            unit = true;
        }
    }
    let gens: Vec<Poly<K>> = if unit {
        let one = eng.basis.last().unwrap().clone();
        vec![one]
    } else {
        eng.basis.iter().zip(&eng.active).filter(|(_, a)| **a).map(|(p, _)| p.clone()).collect()
    };
    let g = GBasis { gens, order: ord.kind().clone(), module_rule: ord.module_rule().clone(), reduced: false };
    if opts.reduce {
        Ok(reduce_gb(alg, &g))
    } else {
        Ok(g)
    }
}

/// Minimal, tail-reduced, monic basis sorted ascending by leading term.
pub fn reduce_gb<K: Coeff>(alg: &GAlgebra<K>, g: &GBasis<K>) -> GBasis<K> {
    let ord = alg.order();
    let mut gens: Vec<Poly<K>> = g.gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    gens.sort_by(|a, b| ord.cmp_term(a.lm(), a.lcomp(), b.lm(), b.lcomp()));
    let mut minimal: Vec<Poly<K>> = Vec::new();
    for p in gens {
        if minimal.iter().any(|q| q.lcomp() == p.lcomp() && q.lm().divides(p.lm())) {
            continue;
        }
        minimal.push(p);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others = Reducer::new(minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p));
        let lead = Poly::from_sorted(vec![minimal[k].terms()[0].clone()]);
        let tail = reduce(alg, &minimal[k].tail(), &others, true, true);
        out.push(lead.add(&tail, ord).monic());
    }
    GBasis { gens: out, order: g.order.clone(), module_rule: g.module_rule.clone(), reduced: true }
}

/// Checks the Gröbner basis property by reducing every s-polynomial (and every extra element) to zero.
pub fn verify_gb<K: Coeff>(alg: &GAlgebra<K>, g: &[Poly<K>], extra: &[Poly<K>]) -> bool {
    let red = Reducer::new(g.iter());
    for f in extra {
        if !reduce(alg, f, &red, false, false).is_zero() {
            return false;
        }
    }
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if g[i].lcomp() != g[j].lcomp() {
                continue;
            }
            let lcm = g[i].lm().lcm(g[j].lm());
            let (u, v) = K::cancel_factors(g[i].lc(), g[j].lc());
            let s = alg
                .mul_term_poly(&u, &lcm.sub(g[i].lm()), &g[i])
                .sub(&alg.mul_term_poly(&v, &lcm.sub(g[j].lm()), &g[j]), alg.order());
            if !reduce(alg, &s, &red, false, false).is_zero() {
                return false;
            }
        }
    }
    true
}
