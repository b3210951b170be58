//! Annihilators in `D_n<S>` and b-functions of varieties `Z = V(f_1, .., f_r)`.

use crate::dmod::initial::principal_intersect_gb;
use crate::dmod::{check_inputs, embed, move_to, DmodOptions, SParamAnnihilator};
use crate::error::Result;
use crate::galgebra::{weyl_dt_gl, weyl_gl};
use crate::groebner::{buchberger, eliminate, lt_dimension_of};
use crate::polyarith::{unipoly_rational_roots, BFunction, ExpVec};
use crate::{Algebra, OpPoly, Rational};

/// `Ann_{D_n<S>}(f_1^s_1 .. f_r^s_r)`: eliminates `Dt` from
/// `<s_ij + Dt_i f_j, D_m + Σ_k df_k/dx_m Dt_k>` in `D_n<Dt, S>`.
pub fn sannfs_var(ring: &Algebra, fs: &[OpPoly], opts: &DmodOptions) -> Result<SParamAnnihilator> {
    check_inputs(ring, fs)?;
    let (n, r) = (ring.nvars(), fs.len());
    let a = weyl_dt_gl(ring.names(), r)?;
    let nv = a.nvars();
    let ord = a.order();
    let dt = |i: usize| ExpVec::unit(nv, 2 * n + i, 1);
    let s = |i: usize, j: usize| 2 * n + r + i * r + j;
    let mut gens = Vec::new();
    for i in 0..r {
        for (j, f) in fs.iter().enumerate() {
            gens.push(a.var(s(i, j)).add(&embed(f, &a).mul_exp(&dt(i)), ord));
        }
    }
    for m in 0..n {
        let mut g = a.var(n + m);
        for (k, f) in fs.iter().enumerate() {
            g = g.add(&embed(&f.derivative(m), &a).mul_exp(&dt(k)), ord);
        }
        gens.push(g);
    }
    let drop: Vec<usize> = (2 * n..2 * n + r).collect();
    let kept = eliminate(&a, &gens, &drop, &opts.gb)?;
    let target = weyl_gl(ring.names(), r)?;
    let map: Vec<Option<usize>> = (0..nv)
        .map(|i| match i {
            i if i < 2 * n => Some(i),
            i if i < 2 * n + r => None,
            i => Some(i - r),
        })
        .collect();
    let moved = kept.iter().map(|g| move_to(g, &map, &target)).collect::<Result<Vec<_>>>()?;
    let gb = buchberger(&target, &moved, &opts.gb)?;
    Ok(SParamAnnihilator { algebra: target, gens: gb, fs: fs.to_vec(), ring: ring.clone() })
}

/// Codimension of `V(f_1, .., f_r)`: `n` minus the dimension of the commutative ideal.
pub fn codim_of(ring: &Algebra, fs: &[OpPoly], opts: &DmodOptions) -> Result<usize> {
    let gb = buchberger(ring, fs, &opts.gb)?;
    Ok(ring.nvars() - lt_dimension_of(&gb.gens, ring.nvars()))
}

/// The b-function of `f = (f_1, .., f_r)` and its shift to the b-function of the variety.
#[derive(Clone, Debug)]
pub struct VarietyBFunction {
    /// `b_f(σ)` with `σ = s_11 + .. + s_rr`.
    pub b: BFunction,
    pub codim: usize,
    /// `b_Z(σ) = b_f(σ - codim + 1)`.
    pub b_z: BFunction,
    pub annihilator: SParamAnnihilator,
}

/// `b_f` from `(Ann_{D_n<S>}(f^s) + <f_1..f_r>) ∩ K[s_11 + .. + s_rr]`.
pub fn bfct_var(ring: &Algebra, fs: &[OpPoly], codim: Option<usize>, opts: &DmodOptions) -> Result<VarietyBFunction> {
    let ann = sannfs_var(ring, fs, opts)?;
    let a = &ann.algebra;
    let (n, r) = (ring.nvars(), fs.len());
    let mut gens = ann.gens.gens.clone();
    gens.extend(fs.iter().map(|f| embed(f, a)));
    let j = buchberger(a, &gens, &opts.gb)?;
    let mut sigma = OpPoly::zero();
    for i in 0..r {
        sigma = sigma.add(&a.var(2 * n + i * r + i), a.order());
    }
    let b = principal_intersect_gb(a, &j.gens, &sigma, opts.intersect_cap)?;
    let codim = match codim {
        Some(c) => c,
        None => codim_of(ring, fs, opts)?,
    };
    let shift = Rational::from_integer(1.into()) - Rational::from_integer((codim as i64).into());
    let bz = b.compose_linear(&Rational::from_integer(1.into()), &shift);
    Ok(VarietyBFunction { b: unipoly_rational_roots(&b)?, codim, b_z: unipoly_rational_roots(&bz)?, annihilator: ann })
}
