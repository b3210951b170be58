//! Bernstein operators: `P(s)` in `D_n[s]` with `P f^(s+1) = b_f(s) f^s`.
//!
//! `P` is unique modulo `Ann(f^(s+1))`; [`bernstein_operator_nf`] returns the normal form
//! of a representative, which is the canonical operator for the algebra's ordering.

use std::cmp::Ordering;

use crate::dmod::{uni_to_alg, BernsteinData, DmodOptions, Method, SParamAnnihilator};
use crate::error::{DmodError, Result};
use crate::galgebra::AlgebraMap;
use crate::groebner::{buchberger, lift, modulo_kernel, normal_form_list, reduces_to_zero, LinearReducer};
use crate::polyarith::{BFunction, ExpVec, ModuleRule, UniPoly};
use crate::{Basis, OpPoly, Rational};

/// How [`bernstein_operator`] finds the operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorMethod {
    Modulo,
    Search,
    Lift,
}

/// Gröbner basis of `Ann(f^(s+1))`, obtained by substituting `s -> s+1` in `Ann(f^s)`.
pub fn ann_shifted(ann: &SParamAnnihilator, opts: &DmodOptions) -> Result<Basis> {
    let s = ann.s_index()?;
    let a = &ann.algebra;
    let map = AlgebraMap::substitution(a, s, a.var(s).add(&a.one(), a.order()))?;
    let gens = ann.gens.gens.iter().map(|g| map.apply(g)).collect::<Result<Vec<_>>>()?;
    buchberger(a, &gens, &opts.gb)
}

/// Normal form of `p` modulo `Ann(f^(s+1))`.
pub fn bernstein_operator_nf(ann: &SParamAnnihilator, p: &OpPoly, opts: &DmodOptions) -> Result<OpPoly> {
    let shifted = ann_shifted(ann, opts)?;
    Ok(normal_form_list(&ann.algebra, p, &shifted.gens))
}

/// `p * f - b(s)` lies in `Ann(f^s)`.
pub fn functional_identity_holds(ann: &SParamAnnihilator, p: &OpPoly, b: &UniPoly) -> Result<bool> {
    let a = &ann.algebra;
    let lhs = a.star_mul(p, &ann.f_embedded()?).sub(&uni_to_alg(b, a, ann.s_index()?), a.order());
    Ok(reduces_to_zero(a, &lhs, &ann.gens.gens))
}

fn checked(ann: &SParamAnnihilator, p: OpPoly, b: &UniPoly) -> Result<OpPoly> {
    if functional_identity_holds(ann, &p, b)? {
        Ok(p)
    } else {
        Err(DmodError::Computation("operator fails the functional identity; is b the b-function of f?".into()))
    }
}

/// Operator from the kernel of `D_n[s]^2 -> D_n[s]/Ann(f^s)`, `(1,0) -> b(s)`, `(0,1) -> f`.
///
/// The kernel contains `(k, v)` with `k` a non-zero constant; `P = -v/k` (the sign is checked).
pub fn operator_modulo(ann: &SParamAnnihilator, b: &UniPoly, opts: &DmodOptions) -> Result<OpPoly> {
    let a = &ann.algebra;
    let s = ann.s_index()?;
    let f = ann.f_embedded()?;
    let ker = modulo_kernel(a, &[uni_to_alg(b, a, s), f], &ann.gens.gens, &opts.gb)?;
    let pot = a.with_module_rule(ModuleRule::PositionOverTerm(vec![0]));
    let gens: Vec<OpPoly> = ker.gens.iter().map(|g| g.resort(pot.order())).collect();
    let gb = buchberger(&pot, &gens, &opts.gb)?;
    let elem = gb
        .gens
        .iter()
        .find(|g| g.lcomp() == 0 && g.lm().is_one())
        .ok_or_else(|| DmodError::Computation("kernel has no element with a constant first entry".into()))?;
    let k = elem.lc().clone();
    let v = elem.component(1, a.order()).scale(&(Rational::from_integer(1.into()) / k));
    let p = v.neg();
    if functional_identity_holds(ann, &p, b)? {
        return Ok(p);
    }
    checked(ann, v, b)
}

/// Standard monomials of total degree `d` in `nvars` variables, ascending in the ordering.
fn monomials_of_degree(alg: &crate::Algebra, d: u32) -> Vec<ExpVec> {
    let n = alg.nvars();
    let mut out = Vec::new();
    let mut cur = ExpVec::zeros(n);
    fn rec(i: usize, left: u32, cur: &mut ExpVec, out: &mut Vec<ExpVec>) {
        let n = cur.len();
        if i + 1 == n {
            cur.set(i, left as u16);
            out.push(cur.clone());
            cur.set(i, 0);
            return;
        }
        for e in 0..=left {
            cur.set(i, e as u16);
            rec(i + 1, left - e, cur, out);
        }
        cur.set(i, 0);
    }
    if n > 0 {
        rec(0, d, &mut cur, &mut out);
    }
    out.sort_by(|a, b| alg.order().cmp_exp(a, b));
    debug_assert!(out.windows(2).all(|w| alg.order().cmp_exp(&w[0], &w[1]) == Ordering::Less));
    out
}

/// Searches `P = Σ a_m m` over standard monomials `m` of `Ann(f^(s+1))` of growing degree,
/// solving `NF(b) = Σ a_m NF(m f)` with linear algebra.
pub fn operator_search(ann: &SParamAnnihilator, b: &UniPoly, opts: &DmodOptions) -> Result<OpPoly> {
    let a = &ann.algebra;
    let s = ann.s_index()?;
    let f = ann.f_embedded()?;
    let shifted = ann_shifted(ann, opts)?;
    let target = normal_form_list(a, &uni_to_alg(b, a, s), &ann.gens.gens);
    let mut lr = LinearReducer::new(a.order());
    let mut used: Vec<ExpVec> = Vec::new();
    for d in 0..=opts.search_cap {
        for m in monomials_of_degree(a, d) {
            if shifted.gens.iter().any(|g| g.lm().divides(&m)) {
                continue;
            }
            let mf = a.mul_term_poly(&Rational::from_integer(1.into()), &m, &f);
            let nf = normal_form_list(a, &mf, &ann.gens.gens);
            if lr.add(&nf).is_none() {
                used.push(m);
            }
        }
        let (rest, c) = lr.reduce(&target);
        if rest.is_zero() {
            let terms = used
                .iter()
                .zip(c)
                .filter(|(_, x)| *x != Rational::from_integer(0.into()))
                .map(|(m, x)| crate::polyarith::Term { exp: m.clone(), comp: 0, coeff: x })
                .collect();
            return checked(ann, OpPoly::from_terms(terms, a.order()), b);
        }
    }
    Err(DmodError::CapExceeded(format!("no operator of degree <= {}", opts.search_cap)))
}

/// Lifts `b(s)` through `{f} ∪ Ann(f^s)` and reduces the cofactor of `f` modulo `Ann(f^(s+1))`.
///
/// The lift is expensive in general.
pub fn operator_lift(ann: &SParamAnnihilator, b: &UniPoly, opts: &DmodOptions) -> Result<OpPoly> {
    let a = &ann.algebra;
    let s = ann.s_index()?;
    let mut gens = vec![ann.f_embedded()?];
    gens.extend(ann.gens.gens.iter().cloned());
    let cof = lift(a, &gens, &uni_to_alg(b, a, s), &opts.gb)?;
    let p = bernstein_operator_nf(ann, &cof[0], opts)?;
    checked(ann, p, b)
}

/// Runs one of the operator methods and packages the result.
pub fn bernstein_operator(ann: &SParamAnnihilator, b: &BFunction, method: OperatorMethod, opts: &DmodOptions) -> Result<BernsteinData> {
    let (p, tag) = match method {
        OperatorMethod::Modulo => (operator_modulo(ann, &b.poly, opts)?, Method::Modulo),
        OperatorMethod::Search => (operator_search(ann, &b.poly, opts)?, Method::Search),
        OperatorMethod::Lift => (operator_lift(ann, &b.poly, opts)?, Method::Lift),
    };
    Ok(BernsteinData { b: b.clone(), operator: Some(p), method: tag })
}
