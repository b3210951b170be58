//! Left normal forms.
//!
//! Reduction is fraction-free: a step replaces `p` by `u*p - v*(m*g)` with
//! `u`, `v` from [`Coeff::cancel_factors`]. The accumulated factor is tracked
//! so that exact normal forms can be recovered by a final division.

use crate::error::{DmodError, Result};
use crate::galgebra::GAlgebra;
use crate::groebner::GBasis;
use crate::polyarith::{Coeff, ExpVec, Poly, Term, TermOrder};

pub(crate) struct RedEntry<'a, K> {
    lm: &'a ExpVec,
    comp: u32,
    mask: u64,
    len: usize,
    poly: &'a Poly<K>,
}

/// Lookup structure for reducers by leading monomial.
pub(crate) struct Reducer<'a, K> {
    items: Vec<RedEntry<'a, K>>,
}

impl<'a, K: Coeff> Reducer<'a, K> {
    pub fn new(polys: impl IntoIterator<Item = &'a Poly<K>>) -> Self {
        let items = polys
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| RedEntry { lm: p.lm(), comp: p.lcomp(), mask: p.lm().mask(), len: p.len(), poly: p })
            .collect();
        Reducer { items }
    }

    /// Shortest reducer whose leading monomial divides `(e, comp)`.
    pub fn find(&self, e: &ExpVec, comp: u32) -> Option<&'a Poly<K>> {
        let m = e.mask();
        let mut best: Option<&RedEntry<'a, K>> = None;
        for it in &self.items {
            if it.comp == comp && it.mask & !m == 0 && it.lm.divides(e) && best.is_none_or(|b| it.len < b.len) {
                best = Some(it);
                if it.len == 1 {
                    break;
                }
            }
        }
        best.map(|b| b.poly)
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

fn merge_add<K: Coeff>(live: Vec<Term<K>>, other: Poly<K>, ord: &TermOrder) -> Vec<Term<K>> {
    let mut p = Poly::from_sorted(live);
    p.axpy_owned(&K::one(), other, ord);
    p.into_terms()
}

/// Reduces `p` against `red`. With `full = false` only the leading term is reduced until irreducible.
/// With `exact = false` the result is only determined up to a non-zero scalar (content is removed).
pub(crate) fn reduce<K: Coeff>(alg: &GAlgebra<K>, p: &Poly<K>, red: &Reducer<'_, K>, full: bool, exact: bool) -> Poly<K> {
    if p.is_zero() || red.is_empty() {
        return p.clone();
    }
    let ord = alg.order();
    // `live[..start]` holds irreducible terms not yet moved to `done`.
    let mut live: Vec<Term<K>> = p.terms().to_vec();
    let mut start = 0usize;
    let mut done: Vec<Term<K>> = Vec::new();
    let mut scale = K::one();
    let mut steps = 0usize;
    while start < live.len() {
        let t = &live[start];
        match red.find(&t.exp, t.comp) {
            Some(g) => {
                let (exp, comp) = (t.exp.clone(), t.comp);
                let m = exp.sub(g.lm());
                let (u, v) = K::cancel_factors(&t.coeff, g.lc());
                if !u.is_one() {
                    for t in live.iter_mut().chain(done.iter_mut()) {
                        t.coeff = t.coeff.mul_ref(&u);
                    }
                    scale = scale.mul_ref(&u);
                }
                let mg = alg.mul_term_poly(&-v, &m, g);
                done.extend(live.drain(..start));
                live = merge_add(live, mg, ord);
                start = 0;
                debug_assert!(live.first().is_none_or(|t| ord.cmp_term(&t.exp, t.comp, &exp, comp).is_lt()));
                steps += 1;
                if steps.is_multiple_of(24) {
                    let mut all: Vec<K> = done.iter_mut().chain(live.iter_mut()).map(|t| std::mem::replace(&mut t.coeff, K::zero())).collect();
                    if !all.is_empty() {
                        let c = K::remove_content(&mut all);
                        for (t, x) in done.iter_mut().chain(live.iter_mut()).zip(all) {
                            t.coeff = x;
                        }
                        scale = scale / c;
                    }
                }
            }
            None => {
                if !full {
                    break;
                }
                start += 1;
            }
        }
    }
    done.append(&mut live);
    let mut out = Poly::from_sorted(done);
    if exact {
        if !scale.is_one() {
            out.scale_mut(&(K::one() / scale));
        }
    } else {
        out.remove_content();
    }
    out
}

fn check_compatible<K: Coeff>(alg: &GAlgebra<K>, g: &GBasis<K>) -> Result<()> {
    if !alg.order().is_global() {
        return Err(DmodError::NotGlobal);
    }
    if alg.order().kind() != &g.order {
        return Err(DmodError::InvalidInput("basis was computed for a different ordering".into()));
    }
    Ok(())
}

/// Exact normal form of `f` with respect to `g`.
pub fn normal_form<K: Coeff>(alg: &GAlgebra<K>, f: &Poly<K>, g: &GBasis<K>) -> Result<Poly<K>> {
    check_compatible(alg, g)?;
    alg.check_member(f)?;
    let red = Reducer::new(g.gens.iter());
    Ok(reduce(alg, f, &red, true, true))
}

/// Exact normal form against an arbitrary list (a Gröbner basis for the result to be canonical).
pub fn normal_form_list<K: Coeff>(alg: &GAlgebra<K>, f: &Poly<K>, g: &[Poly<K>]) -> Poly<K> {
    let red = Reducer::new(g.iter());
    reduce(alg, f, &red, true, true)
}

/// `f` lies in the left ideal generated by the Gröbner basis `g`.
pub fn reduces_to_zero<K: Coeff>(alg: &GAlgebra<K>, f: &Poly<K>, g: &[Poly<K>]) -> bool {
    let red = Reducer::new(g.iter());
    reduce(alg, f, &red, false, false).is_zero()
}
