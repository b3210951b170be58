//! The Malgrange ideal and the Briançon-Maisonobe annihilator of `f_1^s_1 ... f_p^s_p`.

use crate::dmod::{check_inputs, embed, move_to, DmodOptions, SParamAnnihilator};
use crate::error::Result;
use crate::galgebra::{d_name, dt_names, s_names, weyl_named, weyl_s, weyl_shift, VarRole};
use crate::groebner::{buchberger, eliminate};
use crate::polyarith::ExpVec;
use crate::{Algebra, OpPoly};

/// `<t_j - f_j, D_i + Σ_j df_j/dx_i Dt_j>` in the Weyl algebra on `x_1..x_n, t_1..t_p`.
///
/// Layout: `x_1..x_n, t.., Dx_1..Dx_n, Dt..`; the `t` pairs come after the `x` pairs.
pub fn malgrange_ideal(ring: &Algebra, fs: &[OpPoly]) -> Result<(Algebra, Vec<OpPoly>)> {
    check_inputs(ring, fs)?;
    let (n, p) = (ring.nvars(), fs.len());
    let ts: Vec<String> = if p == 1 { vec!["t".into()] } else { (1..=p).map(|j| format!("t{j}")).collect() };
    let mut xs: Vec<String> = ring.names().to_vec();
    xs.extend(ts);
    let mut ds: Vec<String> = ring.names().iter().map(|x| d_name(x)).collect();
    ds.extend(dt_names(p));
    let mut roles: Vec<(VarRole, VarRole)> = (0..n).map(|k| (VarRole::X(k), VarRole::D(k))).collect();
    roles.extend((0..p).map(|k| (VarRole::T(k), VarRole::Dt(k))));
    let w = weyl_named(&xs, &ds, &roles)?;
    let m = n + p;
    let ord = w.order();
    let mut gens = Vec::new();
    for (j, f) in fs.iter().enumerate() {
        gens.push(w.var(n + j).sub(&embed(f, &w), ord));
    }
    for i in 0..n {
        let mut g = w.var(m + i);
        for (j, f) in fs.iter().enumerate() {
            let df = embed(&f.derivative(i), &w);
            g = g.add(&df.mul_exp(&ExpVec::unit(2 * m, m + n + j, 1)), ord);
        }
        gens.push(g);
    }
    Ok((w, gens))
}

/// The generators `s_j + f_j Dt_j` and `D_i + Σ_k df_k/dx_i Dt_k` in the shift algebra.
pub fn bm_generators(ring: &Algebra, fs: &[OpPoly]) -> Result<(Algebra, Vec<OpPoly>)> {
    check_inputs(ring, fs)?;
    let (n, p) = (ring.nvars(), fs.len());
    let a = weyl_shift(ring.names(), p)?;
    let nv = a.nvars();
    let ord = a.order();
    let dt = |j: usize| ExpVec::unit(nv, 2 * n + j, 1);
    let mut gens = Vec::new();
    for (j, f) in fs.iter().enumerate() {
        gens.push(a.var(2 * n + p + j).add(&embed(f, &a).mul_exp(&dt(j)), ord));
    }
    for i in 0..n {
        let mut g = a.var(n + i);
        for (k, f) in fs.iter().enumerate() {
            g = g.add(&embed(&f.derivative(i), &a).mul_exp(&dt(k)), ord);
        }
        gens.push(g);
    }
    Ok((a, gens))
}

/// `Ann_{D_n[s_1..s_p]}(f_1^s_1 ... f_p^s_p)` by eliminating `Dt` from the Briançon-Maisonobe ideal.
pub fn sannfs_bm(ring: &Algebra, fs: &[OpPoly], opts: &DmodOptions) -> Result<SParamAnnihilator> {
    let (a, gens) = bm_generators(ring, fs)?;
    let (n, p) = (ring.nvars(), fs.len());
    let drop: Vec<usize> = (2 * n..2 * n + p).collect();
    let kept = eliminate(&a, &gens, &drop, &opts.gb)?;
    let target = weyl_s(ring.names(), p)?;
    let map: Vec<Option<usize>> = (0..a.nvars())
        .map(|i| match i {
            i if i < 2 * n => Some(i),
            i if i < 2 * n + p => None,
            i => Some(i - p),
        })
        .collect();
    let moved = kept.iter().map(|g| move_to(g, &map, &target)).collect::<Result<Vec<_>>>()?;
    let gb = buchberger(&target, &moved, &opts.gb)?;
    debug_assert_eq!(target.names()[2 * n..], s_names(p)[..]);
    Ok(SParamAnnihilator { algebra: target, gens: gb, fs: fs.to_vec(), ring: ring.clone() })
}
