//! Global b-functions, b-functions of ideals, root checks and Bernstein-Sato ideals.

use crate::dmod::annfs::{malgrange_ideal, sannfs_bm};
use crate::dmod::initial::{initial_ideal, principal_intersect_gb};
use crate::dmod::{check_inputs, embed, move_to, q, DmodOptions, SParamAnnihilator};
use crate::error::{DmodError, Result};
use crate::galgebra::{commutative, s_names, weyl};
use crate::groebner::{buchberger, eliminate, reduces_to_zero};
use crate::polyarith::{unipoly_bs_transform, unipoly_rational_roots, BFunction, ExpVec};
use crate::{Algebra, Basis, OpPoly, Rational};

/// Global b-function of `f` from the initial ideal of its Malgrange ideal.
///
/// `u` are positive weights on the ring variables (default all 1) from which the
/// homogenization weights `(deg_u f, u)` and `(1, deg_u f - u_i + 1)` are derived.
pub fn bfct(ring: &Algebra, f: &OpPoly, u: Option<&[i64]>, opts: &DmodOptions) -> Result<BFunction> {
    let n = ring.nvars();
    let u: Vec<i64> = match u {
        Some(u) if u.len() != n => return Err(DmodError::LengthMismatch { expected: n, found: u.len() }),
        Some(u) if u.iter().any(|&x| x <= 0) => return Err(DmodError::InvalidInput("weights must be positive".into())),
        Some(u) => u.to_vec(),
        None => vec![1; n],
    };
    let (w_alg, gens) = malgrange_ideal(ring, std::slice::from_ref(f))?;
    let d = f.terms().iter().map(|t| t.exp.weighted_degree(&u)).max().unwrap_or(0);
    let mut uu = u.clone();
    uu.push(d);
    let mut vv: Vec<i64> = u.iter().map(|&ui| (d - ui + 1).max(1)).collect();
    vv.push(1);
    let mut w = vec![0; n];
    w.push(1);
    let ini = initial_ideal(&w_alg, &gens, &w, &uu, &vv, opts)?;
    let mut theta = ExpVec::zeros(w_alg.nvars());
    theta.set(n, 1);
    theta.set(2 * n + 1, 1);
    let sigma = OpPoly::monomial(q(1), theta, 0);
    let b = principal_intersect_gb(&w_alg, &ini.gens, &sigma, opts.intersect_cap)?;
    let bf = unipoly_rational_roots(&unipoly_bs_transform(&b)?)?;
    bf.check_bernstein()?;
    Ok(bf)
}

/// `Ann(f^s) + <f>` as a Gröbner basis in `D_n[s]`.
fn ann_plus_f(ann: &SParamAnnihilator, opts: &DmodOptions) -> Result<Basis> {
    let mut gens = ann.gens.gens.clone();
    gens.push(ann.f_embedded()?);
    buchberger(&ann.algebra, &gens, &opts.gb)
}

/// Global b-function as the generator of `(Ann(f^s) + <f>) ∩ K[s]`.
pub fn bfct_ann(ring: &Algebra, f: &OpPoly, opts: &DmodOptions) -> Result<BFunction> {
    let ann = sannfs_bm(ring, std::slice::from_ref(f), opts)?;
    bfct_from_ann(&ann, opts)
}

pub(crate) fn bfct_from_ann(ann: &SParamAnnihilator, opts: &DmodOptions) -> Result<BFunction> {
    let s = ann.s_index()?;
    let j = ann_plus_f(ann, opts)?;
    let b = principal_intersect_gb(&ann.algebra, &j.gens, &ann.algebra.var(s), opts.intersect_cap)?;
    let bf = unipoly_rational_roots(&b)?;
    bf.check_bernstein()?;
    Ok(bf)
}

/// `b_{I,w}`: generator of `ini_(-w,w)(I) ∩ K[Σ w_i x_i D_i]`, not transformed.
pub fn bfct_ideal(alg: &Algebra, gens: &[OpPoly], w: &[i64], opts: &DmodOptions) -> Result<BFunction> {
    let m = alg.weyl_pairs().len();
    let ones = vec![1; m];
    let ini = initial_ideal(alg, gens, w, &ones, &ones, opts)?;
    let mut sigma = OpPoly::zero();
    for (k, &(x, d)) in alg.weyl_pairs().iter().enumerate() {
        if w.get(k).copied().unwrap_or(0) != 0 {
            let mut e = ExpVec::zeros(alg.nvars());
            e.set(x, 1);
            e.set(d, 1);
            sigma = sigma.add(&OpPoly::monomial(q(w[k]), e, 0), alg.order());
        }
    }
    let b = principal_intersect_gb(alg, &ini.gens, &sigma, opts.intersect_cap)?;
    unipoly_rational_roots(&b)
}

/// `Ann(f^s)|_{s = value}` plus `f`, as generators in `D_n`.
fn specialized_plus_f(ann: &SParamAnnihilator, value: &Rational) -> Result<(Algebra, Vec<OpPoly>)> {
    let s = ann.s_index()?;
    let d = weyl(ann.ring.names())?;
    let map: Vec<Option<usize>> = (0..ann.algebra.nvars()).map(|i| if i == s { None } else { Some(i) }).collect();
    let mut gens = Vec::new();
    for g in &ann.gens.gens {
        let sub = g.substitute_const(s, value, ann.algebra.order());
        gens.push(move_to(&sub, &map, &d)?);
    }
    gens.push(embed(&ann.fs[0], &d));
    Ok((d, gens))
}

/// Multiplicity of `-alpha` as a root of `b_f(s)` (that is, of `alpha` as a root of `b_f(-s)`).
///
/// Uses `m > i` iff `(s + alpha)^i` is not in `Ann(f^s) + <f, (s + alpha)^(i+1)>`; the case
/// `i = 0` is decided in `D_n` after substituting `s = -alpha`.
pub fn root_multiplicity(ann: &SParamAnnihilator, alpha: &Rational, opts: &DmodOptions) -> Result<u32> {
    let s = ann.s_index()?;
    if !check_root(ann, alpha, opts)? {
        return Ok(0);
    }
    let a = &ann.algebra;
    let lin = a.var(s).add(&a.constant(alpha.clone()), a.order());
    let n = ann.nx();
    for i in 1..=n as u32 {
        let mut gens = ann.gens.gens.clone();
        gens.push(ann.f_embedded()?);
        gens.push(a.pow(&lin, i + 1));
        let gb = buchberger(a, &gens, &opts.gb)?;
        if reduces_to_zero(a, &a.pow(&lin, i), &gb.gens) {
            return Ok(i);
        }
    }
    Err(DmodError::Computation(format!("root multiplicity exceeds the number of variables {n}")))
}

/// `alpha` is a root of `b_f(-s)`.
pub fn check_root(ann: &SParamAnnihilator, alpha: &Rational, opts: &DmodOptions) -> Result<bool> {
    ann.s_index()?;
    let (d, gens) = specialized_plus_f(ann, &-alpha.clone())?;
    let gb = buchberger(&d, &gens, &opts.gb)?;
    Ok(!gb.gens.iter().any(|g| g.is_constant()))
}

/// Smallest integer root of `b_f`; integer roots lie in `[-n+1, -1]` and `-1` is always one.
pub fn min_integer_root(ann: &SParamAnnihilator, opts: &DmodOptions) -> Result<i64> {
    let n = ann.nx() as i64;
    for a in (2..n).rev() {
        if check_root(ann, &q(a), opts)? {
            return Ok(-a);
        }
    }
    Ok(-1)
}

/// Bernstein-Sato ideal `(Ann(f_1^s_1..f_p^s_p) + <f_1..f_p>) ∩ K[s_1..s_p]` in the ring `K[s_1..s_p]`.
pub fn bs_ideal(ring: &Algebra, fs: &[OpPoly], opts: &DmodOptions) -> Result<(Algebra, Basis)> {
    check_inputs(ring, fs)?;
    let ann = sannfs_bm(ring, fs, opts)?;
    let a = &ann.algebra;
    let n = ring.nvars();
    let mut prod = a.one();
    for f in fs {
        prod = prod.mul_comm(&embed(f, a), a.order());
    }
    let mut gens = ann.gens.gens.clone();
    gens.push(prod);
    let drop: Vec<usize> = (0..2 * n).collect();
    let kept = eliminate(a, &gens, &drop, &opts.gb)?;
    let sring = commutative(&s_names(fs.len()))?;
    let map: Vec<Option<usize>> = (0..a.nvars()).map(|i| i.checked_sub(2 * n)).collect();
    let moved = kept.iter().map(|g| move_to(g, &map, &sring)).collect::<Result<Vec<_>>>()?;
    let gb = buchberger(&sring, &moved, &opts.gb)?;
    Ok((sring, gb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn ring(v: &[&str]) -> Algebra {
        commutative(&v.iter().map(|s| s.to_string()).collect::<Vec<_>>()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn b_function_of_x() {
        let rg = ring(&["x"]);
        let f = parse_poly("x", &rg).unwrap();
        let o = DmodOptions::default();
        for b in [bfct(&rg, &f, None, &o).unwrap(), bfct_ann(&rg, &f, &o).unwrap()] {
            assert_eq!(b.roots.into_iter().collect::<Vec<_>>(), vec![(r(-1, 1), 1)]);
        }
    }

    #[test]
    fn roots_of_2xy() {
        let rg = ring(&["x", "y"]);
        let f = parse_poly("2*x*y", &rg).unwrap();
        let o = DmodOptions::default();
        assert_eq!(bfct(&rg, &f, None, &o).unwrap().roots.into_iter().collect::<Vec<_>>(), vec![(r(-1, 1), 2)]);
        let ann = sannfs_bm(&rg, &[f], &o).unwrap();
        assert!(check_root(&ann, &r(1, 1), &o).unwrap());
        assert!(!check_root(&ann, &r(2, 1), &o).unwrap());
        assert_eq!(root_multiplicity(&ann, &r(1, 1), &o).unwrap(), 2);
        assert_eq!(min_integer_root(&ann, &o).unwrap(), -1);
    }

    #[test]
    fn cusp_b_function() {
        let rg = ring(&["x", "y"]);
        let f = parse_poly("x^2-y^3", &rg).unwrap();
        let b = bfct_ann(&rg, &f, &DmodOptions::default()).unwrap();
        let expect = vec![(r(-7, 6), 1), (r(-1, 1), 1), (r(-5, 6), 1)];
        assert_eq!(b.roots.into_iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn bs_ideal_of_coordinates() {
        let rg = ring(&["x", "y"]);
        let fs = vec![parse_poly("x", &rg).unwrap(), parse_poly("y", &rg).unwrap()];
        let (sr, gb) = bs_ideal(&rg, &fs, &DmodOptions::default()).unwrap();
        assert_eq!(gb.gens, vec![parse_poly("(s1+1)*(s2+1)", &sr).unwrap()]);
    }

    #[test]
    fn euler_ideal_b_function() {
        let d = weyl(&["t".to_string()]).unwrap();
        let g = parse_poly("t*Dt+3", &d).unwrap();
        let b = bfct_ideal(&d, &[g], &[1], &DmodOptions::default()).unwrap();
        assert_eq!(b.roots.into_iter().collect::<Vec<_>>(), vec![(r(-3, 1), 1)]);
    }
}
