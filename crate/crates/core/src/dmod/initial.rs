//! Initial ideals with respect to `(-w, w)` and intersections with `K[sigma]`.

use crate::dmod::{embed, DmodOptions};
use crate::error::{DmodError, Result};
use crate::galgebra::{dehomogenize, homogenize_weighted, initial_form_weights, minus_w_w, weyl_homog_named};
use crate::groebner::{buchberger, normal_form_list, LinearReducer};
use crate::polyarith::{MonOrder, UniPoly};
use crate::{Algebra, Basis, OpPoly, Rational};

/// Checks the layout `x_1..x_m, D_1..D_m` with pair `k` at `(k, m + k)` and nothing else.
fn weyl_layout(alg: &Algebra) -> Result<usize> {
    let pairs = alg.weyl_pairs();
    let m = pairs.len();
    if alg.nvars() != 2 * m || pairs.iter().enumerate().any(|(k, &p)| p != (k, m + k)) {
        return Err(DmodError::InvalidInput("expected a Weyl algebra with variables x_1..x_m, D_1..D_m".into()));
    }
    for i in 0..2 * m {
        for j in i + 1..2 * m {
            let paired = j == i + m && i < m;
            if !paired && !alg.relation(i, j).is_zero() {
                return Err(DmodError::InvalidInput("expected a Weyl algebra".into()));
            }
        }
    }
    Ok(m)
}

/// Gröbner basis (in the ordering of `alg`) of `ini_(-w,w)(I)` for `I = <gens>` in a Weyl algebra.
///
/// `w`, `u`, `v` are indexed by the Weyl pairs. The ideal is homogenized with `(u, v)` weights,
/// a basis is computed for the ordering `(u,v,1)`-degree, then `(-w,w,0)`-weight, then degree, and
/// the `(-w, w)`-initial forms of its elements are dehomogenized.
pub fn initial_ideal(alg: &Algebra, gens: &[OpPoly], w: &[i64], u: &[i64], v: &[i64], opts: &DmodOptions) -> Result<Basis> {
    let m = weyl_layout(alg)?;
    let ww = minus_w_w(alg, w)?;
    let names = alg.names();
    let roles: Vec<_> = (0..m).map(|k| (alg.roles()[k].clone(), alg.roles()[m + k].clone())).collect();
    let h = weyl_homog_named(&names[..m], &names[m..], &roles, u, v)?;
    let mut uv1: Vec<i64> = u.to_vec();
    uv1.extend_from_slice(v);
    uv1.push(1);
    let mut ww0 = ww.clone();
    ww0.push(0);
    let mut deg = vec![1; 2 * m];
    deg.push(0);
    let ord = MonOrder::weighted(uv1, MonOrder::weighted(ww0.clone(), MonOrder::weighted(deg, MonOrder::DegRevLex)));
    let h = h.with_order(ord)?;
    let hom = gens.iter().map(|g| homogenize_weighted(alg, &h, g, u, v)).collect::<Result<Vec<_>>>()?;
    let gb = buchberger(&h, &hom, &opts.gb)?;
    let inis = gb
        .gens
        .iter()
        .map(|g| dehomogenize(&h, alg, &initial_form_weights(g, &ww0)))
        .collect::<Result<Vec<_>>>()?;
    buchberger(alg, &inis, &opts.gb)
}

/// Monic generator of `<gens> ∩ K[sigma]`; see [`principal_intersect_gb`].
pub fn principal_intersect(alg: &Algebra, gens: &[OpPoly], sigma: &OpPoly, opts: &DmodOptions) -> Result<UniPoly> {
    let gb = buchberger(alg, gens, &opts.gb)?;
    principal_intersect_gb(alg, &gb.gens, sigma, opts.intersect_cap)
}

/// Monic `b` of least degree with `b(sigma)` in the left ideal with Gröbner basis `gb`.
///
/// Uses `r_0 = NF(1)`, `r_{i+1} = NF(sigma * r_i)`, which satisfies `r_i ≡ sigma^i` modulo
/// the ideal, and stops at the first linear dependency among the `r_i`.
pub fn principal_intersect_gb(alg: &Algebra, gb: &[OpPoly], sigma: &OpPoly, cap: usize) -> Result<UniPoly> {
    alg.check_member(sigma)?;
    if sigma.is_zero() {
        return Err(DmodError::ZeroInput);
    }
    if gb.iter().any(|g| g.lm().is_one() && g.lcomp() == 0) {
        return Ok(UniPoly::one("s"));
    }
    let lm_mask = sigma.lm().mask();
    if !gb.iter().any(|g| g.lm().mask() & !lm_mask == 0) {
        return Err(DmodError::ZeroIntersection);
    }
    let mut lr = LinearReducer::new(alg.order());
    let mut r = normal_form_list(alg, &alg.one(), gb);
    for i in 0..=cap {
        if let Some(c) = lr.add(&r) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Rational::from_integer(1.into()));
            return Ok(UniPoly::new(coeffs, "s").monic());
        }
        if i == cap {
            break;
        }
        r = normal_form_list(alg, &alg.star_mul(sigma, &r), gb);
    }
    Err(DmodError::CapExceeded(format!("no polynomial of degree <= {cap} in the intersection (it may be zero)")))
}

/// Generators of `I ∩ K[x_i]` for each variable of a commutative ring, for zero-dimensional `I`.
pub fn solve0(ring: &Algebra, gens: &[OpPoly], opts: &DmodOptions) -> Result<Vec<UniPoly>> {
    if !ring.is_commutative() {
        return Err(DmodError::InvalidInput("solving requires a commutative ring".into()));
    }
    let gb = buchberger(ring, gens, &opts.gb)?;
    (0..ring.nvars())
        .map(|i| principal_intersect_gb(ring, &gb.gens, &embed(&ring.var(i), ring), opts.intersect_cap).map(|b| b.with_var(ring.name(i))))
        .collect()
}
