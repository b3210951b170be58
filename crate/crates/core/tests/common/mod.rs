//! Shared helpers for the integration tests: parsing shortcuts, independent
//! oracles and random input generators.
#![allow(dead_code)]

use std::collections::BTreeMap;

use dmod_core::dmod::FsAction;
use dmod_core::galgebra::commutative;
use dmod_core::groebner::{ideal_equal, GbOptions};
use dmod_core::polyarith::{ExpVec, Term};
use dmod_core::text::parse_poly;
use dmod_core::{Algebra, OpPoly, Rational};
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

pub fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn ring(v: &[&str]) -> Algebra {
    commutative(&names(v)).unwrap()
}

pub fn poly(text: &str, alg: &Algebra) -> OpPoly {
    parse_poly(text, alg).unwrap_or_else(|e| panic!("{text}: {e}"))
}

pub fn polys(texts: &[&str], alg: &Algebra) -> Vec<OpPoly> {
    texts.iter().map(|t| poly(t, alg)).collect()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn roots(list: &[(i64, i64, u32)]) -> BTreeMap<Rational, u32> {
    list.iter().map(|&(n, d, m)| (rat(n, d), m)).collect()
}

pub fn same_ideal(alg: &Algebra, a: &[OpPoly], b: &[OpPoly]) -> bool {
    ideal_equal(alg, a, b, &GbOptions::default()).unwrap()
}

/// `op • Π f_j^(s_j)` vanishes, with `s_j` kept symbolic or specialized to `values`.
pub fn kills(alg: &Algebra, op: &OpPoly, ring: &Algebra, fs: &[OpPoly], values: Option<&[Rational]>) -> bool {
    let act = FsAction::new(ring, fs).unwrap();
    let e = act.apply(alg, op).unwrap();
    let mut numer = e.numer;
    if let Some(vals) = values {
        for (j, v) in vals.iter().enumerate() {
            numer = numer.substitute_const(ring.nvars() + j, v, act.ring.order());
        }
    }
    numer.is_zero()
}

fn binom(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `x^a1 D^b1 * x^a2 D^b2` in the first Weyl algebra, from Leibniz' rule.
pub fn weyl_product_closed_form(a1: u16, b1: u16, a2: u16, b2: u16) -> Vec<(u16, u16, BigInt)> {
    (0..=b1.min(a2))
        .map(|k| {
            let c = binom(b1 as u32, k as u32) * binom(a2 as u32, k as u32) * factorial(k as u32);
            (a1 + a2 - k, b1 + b2 - k, c)
        })
        .collect()
}

/// Plain Buchberger in a commutative ring: every pair, full reduction, no criteria.
pub fn naive_commutative_gb(alg: &Algebra, gens: &[OpPoly]) -> Vec<OpPoly> {
    let ord = alg.order();
    let reduce = |f: &OpPoly, g: &[OpPoly]| -> OpPoly {
        let mut p = f.clone();
        let mut rem = OpPoly::zero();
        while let Some(t) = p.lead().cloned() {
            match g.iter().find(|h| h.lm().divides(&t.exp)) {
                Some(h) => {
                    let q = OpPoly::monomial(t.coeff.clone() / h.lc().clone(), t.exp.sub(h.lm()), 0);
                    p = p.sub(&q.mul_comm(h, ord), ord);
                }
                None => {
                    rem = rem.add(&OpPoly::monomial(t.coeff.clone(), t.exp.clone(), 0), ord);
                    p = p.tail();
                }
            }
        }
        rem
    };
    let mut g: Vec<OpPoly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let l = g[i].lm().lcm(g[j].lm());
        let mi = OpPoly::monomial(Rational::one() / g[i].lc().clone(), l.sub(g[i].lm()), 0);
        let mj = OpPoly::monomial(Rational::one() / g[j].lc().clone(), l.sub(g[j].lm()), 0);
        let sp = mi.mul_comm(&g[i], ord).sub(&mj.mul_comm(&g[j], ord), ord);
        let r = reduce(&sp, &g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // minimal, then reduced and monic
    let mut min: Vec<OpPoly> = Vec::new();
    for (i, p) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(j, q)| {
            j != i && q.lm().divides(p.lm()) && (q.lm() != p.lm() || j < i)
        });
        if !redundant {
            min.push(p.monic());
        }
    }
    let mut out: Vec<OpPoly> = (0..min.len())
        .map(|i| {
            let others: Vec<OpPoly> = min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q.clone()).collect();
            let head = OpPoly::monomial(Rational::one(), min[i].lm().clone(), 0);
            head.add(&reduce(&min[i].tail(), &others), ord)
        })
        .collect();
    sort_by_lm(alg, &mut out);
    out
}

pub fn sort_by_lm(alg: &Algebra, v: &mut [OpPoly]) {
    v.sort_by(|a, b| alg.order().cmp_exp(b.lm(), a.lm()));
}

/// Polynomial in `nvars` variables from `(coefficient, exponents)` pairs.
pub fn from_raw(alg: &Algebra, raw: &[(i64, Vec<u16>)]) -> OpPoly {
    let terms = raw
        .iter()
        .filter(|(c, _)| *c != 0)
        .map(|(c, e)| Term { exp: ExpVec::from_slice(e), comp: 0, coeff: Rational::from_integer((*c).into()) })
        .collect();
    OpPoly::from_terms(terms, alg.order())
}

/// Random `(coefficient, exponent)` lists with total degree at most `deg` and up to `terms` terms.
pub fn raw_poly(nvars: usize, deg: u16, terms: usize) -> impl Strategy<Value = Vec<(i64, Vec<u16>)>> {
    // Each of `deg` slots raises one variable by one or, with index `nvars`, none.
    let exps = prop::collection::vec(0..=nvars, deg as usize).prop_map(move |slots| {
        let mut e = vec![0u16; nvars];
        for k in slots.into_iter().filter(|&k| k < nvars) {
            e[k] += 1;
        }
        e
    });
    let term = (prop_oneof![-3i64..=-1, 1i64..=3], exps);
    prop::collection::vec(term, 1..=terms)
}

/// Random non-constant commutative polynomial, rendered in the input grammar.
pub fn nonconstant(alg: &Algebra, raw: &[(i64, Vec<u16>)]) -> Option<OpPoly> {
    let p = from_raw(alg, raw);
    (!p.is_zero() && !p.is_constant()).then_some(p)
}
