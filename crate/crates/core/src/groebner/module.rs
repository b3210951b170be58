//! Kernels of module maps and transformation matrices via component elimination.

use crate::error::{DmodError, Result};
use crate::galgebra::GAlgebra;
use crate::groebner::buchberger::{buchberger, GbOptions};
use crate::groebner::reduce::{reduce, Reducer};
use crate::groebner::GBasis;
use crate::polyarith::{Coeff, ModuleRule, Poly, Term};

/// Module elements `(F_j, e_{j+1})` and `(G_i, 0)` in rank `1 + F.len()`.
fn tagged<K: Coeff>(alg: &GAlgebra<K>, f: &[Poly<K>], g: &[Poly<K>]) -> Vec<Poly<K>> {
    let n = alg.nvars();
    let mut out = Vec::with_capacity(f.len() + g.len());
    for (j, fj) in f.iter().enumerate() {
        let mut terms: Vec<Term<K>> = fj.terms().to_vec();
        terms.push(Term { exp: crate::polyarith::ExpVec::zeros(n), comp: j as u32 + 1, coeff: K::one() });
        out.push(Poly::from_terms(terms, alg.order()));
    }
    out.extend(g.iter().filter(|p| !p.is_zero()).cloned());
    out
}

/// Kernel of `A^k -> A/<G>`, `e_j -> F_j`, as a Gröbner basis of a submodule of `A^k`
/// (term-over-position; for `k = 1` an ideal).
pub fn modulo_kernel<K: Coeff>(alg: &GAlgebra<K>, f: &[Poly<K>], g: &[Poly<K>], opts: &GbOptions) -> Result<GBasis<K>> {
    if f.is_empty() {
        return Err(DmodError::InvalidInput("kernel of a map from the zero module".into()));
    }
    let malg = alg.with_module_rule(ModuleRule::PositionOverTerm(vec![0]));
    let gens: Vec<Poly<K>> = tagged(&malg, f, g);
    let gb = buchberger(&malg, &gens, opts)?;
    let kernel: Vec<Poly<K>> = gb
        .gens
        .iter()
        .filter(|p| p.terms().iter().all(|t| t.comp != 0))
        .map(|p| {
            let terms = p.terms().iter().map(|t| Term { exp: t.exp.clone(), comp: t.comp - 1, coeff: t.coeff.clone() }).collect();
            Poly::from_terms(terms, alg.order())
        })
        .collect();
    let kalg = alg.with_module_rule(ModuleRule::TermOverPosition);
    let out = GBasis { gens: kernel, order: alg.order().kind().clone(), module_rule: ModuleRule::TermOverPosition, reduced: false };
    Ok(crate::groebner::reduce_gb(&kalg, &out))
}

/// Cofactors `a` with `Σ a_i * F_i = target`.
pub fn lift<K: Coeff>(alg: &GAlgebra<K>, f: &[Poly<K>], target: &Poly<K>, opts: &GbOptions) -> Result<Vec<Poly<K>>> {
    let malg = alg.with_module_rule(ModuleRule::PositionOverTerm(vec![0]));
    let gens = tagged(&malg, f, &[]);
    let o = GbOptions { lead_comp_only: Some(0), reduce: false, ..opts.clone() };
    let gb = buchberger(&malg, &gens, &o)?;
    let red = Reducer::new(gb.gens.iter());
    let r = reduce(&malg, &target.with_comp(0), &red, true, true);
    if r.terms().iter().any(|t| t.comp == 0) {
        return Err(DmodError::NotInIdeal);
    }
    Ok((0..f.len()).map(|j| r.component(j as u32 + 1, alg.order()).neg()).collect())
}
