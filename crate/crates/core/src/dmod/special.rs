//! Annihilators of polynomials, rational functions and specialized powers, and the
//! order-bounded annihilators `Ann^(k)(f^s)`.

use num_traits::{One, Signed, Zero};

use crate::dmod::annfs::sannfs_bm;
use crate::dmod::bfunction::min_integer_root;
use crate::dmod::partition::formula_fs;
use crate::dmod::{check_inputs, embed, move_to, DmodOptions, SParamAnnihilator};
use crate::error::{DmodError, Result};
use crate::galgebra::{commutative, weyl, weyl_s};
use crate::groebner::{buchberger, modulo_kernel, GBasis};
use crate::polyarith::{ExpVec, ModuleRule};
use crate::{Algebra, Basis, OpPoly, Rational};

const SYZYGY_BRANCH: &str = "requires SST Alg. 5.3.15 syzygy branch";

fn derivations(d: &Algebra, n: usize) -> Vec<OpPoly> {
    (0..n).map(|i| d.var(n + i)).collect()
}

/// `Ann_{D_n}(g)` as the kernel of `D_n -> D_n / <D_1..D_n>`, `1 -> g`.
pub fn ann_poly(ring: &Algebra, g: &OpPoly, opts: &DmodOptions) -> Result<Basis> {
    ring.check_member(g)?;
    let n = ring.nvars();
    let d = weyl(ring.names())?;
    modulo_kernel(&d, &[embed(g, &d)], &derivations(&d, n), &opts.gb)
}

/// Specializes `s` to `alpha` in `Ann(f^s)` and returns a basis in `D_n`.
fn substitute_alpha(ann: &SParamAnnihilator, alpha: &Rational, opts: &DmodOptions) -> Result<Basis> {
    let s = ann.s_index()?;
    let d = weyl(ann.ring.names())?;
    let map: Vec<Option<usize>> = (0..ann.algebra.nvars()).map(|i| if i == s { None } else { Some(i) }).collect();
    let gens = ann
        .gens
        .gens
        .iter()
        .map(|g| move_to(&g.substitute_const(s, alpha, ann.algebra.order()), &map, &d))
        .collect::<Result<Vec<_>>>()?;
    buchberger(&d, &gens, &opts.gb)
}

/// `Ann_{D_n}(f^alpha)` for rational `alpha`.
///
/// `alpha = 0` gives `<D>`; a positive integer goes through [`ann_poly`]; otherwise `s` is
/// specialized in `Ann(f^s)`, which is valid unless `alpha` is an integer with
/// `mu + 1 <= alpha <= -1` for the smallest integer root `mu` of `b_f`. That window is unsupported.
pub fn ann_falpha(ring: &Algebra, f: &OpPoly, alpha: &Rational, opts: &DmodOptions) -> Result<Basis> {
    check_inputs(ring, std::slice::from_ref(f))?;
    let n = ring.nvars() as i64;
    if alpha.is_zero() {
        let d = weyl(ring.names())?;
        return buchberger(&d, &derivations(&d, ring.nvars()), &opts.gb);
    }
    if alpha.is_integer() && alpha.is_positive() {
        let e = u32::try_from(alpha.to_integer()).map_err(|_| DmodError::InvalidInput("exponent too large".into()))?;
        let g = f.pow_comm(e, ring.order(), ring.nvars());
        return ann_poly(ring, &g, opts);
    }
    let ann = sannfs_bm(ring, std::slice::from_ref(f), opts)?;
    if alpha.is_integer() && *alpha > Rational::from_integer((-n).into()) {
        let mu = min_integer_root(&ann, opts)?;
        if *alpha > Rational::from_integer(mu.into()) {
            return Err(DmodError::Unsupported(format!(
                "alpha = {alpha} lies in the window [{}, -1] above the smallest integer root {mu}; {SYZYGY_BRANCH}",
                mu + 1
            )));
        }
    }
    substitute_alpha(&ann, alpha, opts)
}

/// `Ann_{D_n}(g / f)` as the kernel of `D_n -> D_n / Ann(f^-1)`, `q -> q g`.
pub fn ann_rat(ring: &Algebra, g: &OpPoly, f: &OpPoly, opts: &DmodOptions) -> Result<Basis> {
    ring.check_member(g)?;
    ring.check_member(f)?;
    if g.is_zero() || f.is_zero() {
        return Err(DmodError::ZeroInput);
    }
    let d = weyl(ring.names())?;
    let denom = if f.is_constant() {
        derivations(&d, ring.nvars())
    } else {
        match ann_falpha(ring, f, &-Rational::one(), opts) {
            Ok(b) => b.gens,
            Err(DmodError::Unsupported(_)) => {
                return Err(DmodError::Unsupported(format!("denominator has an integer root below -1; {SYZYGY_BRANCH}")))
            }
            Err(e) => return Err(e),
        }
    };
    modulo_kernel(&d, &[embed(g, &d)], &denom, &opts.gb)
}

/// Turns syzygy rows `(a_β)` over `K[x, s]` into operators `Σ a_β c_β D^β` in `D_n[s]`.
fn rows_to_operators(rows: &[OpPoly], cring: &Algebra, target: &Algebra, betas: &[(ExpVec, Rational)]) -> Result<Vec<OpPoly>> {
    let n = cring.nvars() - 1;
    let map: Vec<Option<usize>> = (0..=n).map(|i| Some(if i < n { i } else { 2 * n })).collect();
    let mut out = Vec::new();
    for row in rows {
        let mut op = OpPoly::zero();
        for (k, (beta, c)) in betas.iter().enumerate() {
            let a = row.component(k as u32, cring.order());
            if a.is_zero() {
                continue;
            }
            let a = move_to(&a, &map, target)?;
            let mut e = ExpVec::zeros(target.nvars());
            for i in 0..n {
                e.set(n + i, beta.get(i));
            }
            op = op.add(&target.star_mul(&a.scale(c), &OpPoly::monomial(Rational::one(), e, 0)), target.order());
        }
        if !op.is_zero() {
            out.push(op);
        }
    }
    Ok(out)
}

fn syzygy_ring(ring: &Algebra) -> Result<Algebra> {
    let mut names = ring.names().to_vec();
    names.push("s".into());
    commutative(&names)
}

fn finish(ring: &Algebra, f: &OpPoly, target: Algebra, ops: Vec<OpPoly>, opts: &DmodOptions) -> Result<SParamAnnihilator> {
    let gb = buchberger(&target, &ops, &opts.gb)?;
    Ok(SParamAnnihilator { algebra: target, gens: gb, fs: vec![f.clone()], ring: ring.clone() })
}

/// `Ann^(1)(f^s)`: operators `a_0 + Σ a_i D_i` with `(a_0, .., a_n)` a syzygy of `(f, s df/dx_1, .., s df/dx_n)`.
pub fn sannfs_log(ring: &Algebra, f: &OpPoly, opts: &DmodOptions) -> Result<SParamAnnihilator> {
    check_inputs(ring, std::slice::from_ref(f))?;
    let n = ring.nvars();
    let c = syzygy_ring(ring)?;
    let s = c.var(n);
    let mut comps = vec![embed(f, &c)];
    for i in 0..n {
        comps.push(embed(&f.derivative(i), &c).mul_comm(&s, c.order()));
    }
    let syz = syzygies(&c, &comps, opts)?;
    let mut betas = vec![(ExpVec::zeros(n), Rational::one())];
    betas.extend((0..n).map(|i| (ExpVec::unit(n, i, 1), Rational::one())));
    let target = weyl_s(ring.names(), 1)?;
    let ops = rows_to_operators(&syz.gens, &c, &target, &betas)?;
    finish(ring, f, target, ops, opts)
}

fn syzygies(c: &Algebra, comps: &[OpPoly], opts: &DmodOptions) -> Result<GBasis<Rational>> {
    let k = modulo_kernel(c, comps, &[], &opts.gb)?;
    debug_assert_eq!(k.module_rule, ModuleRule::TermOverPosition);
    Ok(k)
}

/// All `β` with `|β| <= k`, ordered by degree.
fn multi_indices(n: usize, k: u32) -> Vec<ExpVec> {
    let mut out = vec![ExpVec::zeros(n)];
    let mut frontier = out.clone();
    for _ in 0..k {
        let mut next: Vec<ExpVec> = Vec::new();
        for b in &frontier {
            for i in 0..n {
                let mut c = b.clone();
                c.set(i, c.get(i) + 1);
                if !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        next.sort_by(|a, b| b.as_slice().cmp(a.as_slice()));
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `Ann^(k)(f^s)`: operators of order at most `k` annihilating `f^s`, from the syzygies of
/// `(g_β f^(k - |β|))_{|β| <= k}` where `Δ^β f^s = g_β f^(s - |β|)`.
pub fn ann_upto_k(ring: &Algebra, f: &OpPoly, k: u32, opts: &DmodOptions) -> Result<SParamAnnihilator> {
    check_inputs(ring, std::slice::from_ref(f))?;
    if k == 0 {
        return Err(DmodError::InvalidInput("the order bound k must be at least 1".into()));
    }
    let n = ring.nvars();
    let c = syzygy_ring(ring)?;
    let fe = embed(f, &c);
    let mut comps = Vec::new();
    let mut betas = Vec::new();
    for beta in multi_indices(n, k) {
        let g = formula_fs(&c, f, &beta);
        comps.push(g.mul_comm(&fe.pow_comm(k - beta.degree(), c.order(), c.nvars()), c.order()));
        // Δ^β = D^β / β!
        let fact: Rational = beta.iter().map(|&e| (1..=e as i64).product::<i64>()).map(|x| Rational::from_integer(x.into())).product();
        betas.push((beta, Rational::one() / fact));
    }
    let syz = syzygies(&c, &comps, opts)?;
    let target = weyl_s(ring.names(), 1)?;
    let ops = rows_to_operators(&syz.gens, &c, &target, &betas)?;
    finish(ring, f, target, ops, opts)
}
