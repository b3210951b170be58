use crate::error::{DmodError, Result};
use crate::galgebra::GAlgebra;
use crate::groebner::buchberger::{buchberger, GbOptions};
use crate::groebner::reduce::reduces_to_zero;
use crate::polyarith::{Coeff, MonOrder, Poly};

/// Generators of `<gens>` intersected with the subalgebra on the variables not in `drop`,
/// via a weight-first ordering (weight 1 on `drop`, the algebra's ordering as tie-break).
///
/// The output is a Gröbner basis of the intersection for the restricted ordering, in the
/// variable layout and ordering of `alg`.
pub fn eliminate<K: Coeff>(alg: &GAlgebra<K>, gens: &[Poly<K>], drop: &[usize], opts: &GbOptions) -> Result<Vec<Poly<K>>> {
    let n = alg.nvars();
    let mut dropped = 0u64;
    for &d in drop {
        dropped |= 1 << d;
    }
    for i in 0..n {
        for j in i + 1..n {
            if dropped & (1 << i) != 0 || dropped & (1 << j) != 0 {
                continue;
            }
            if alg.relation(i, j).support_mask() & dropped != 0 {
                return Err(DmodError::NotSubalgebra(alg.name(i).into(), alg.name(j).into()));
            }
        }
    }
    let ord = MonOrder::elimination(n, drop, alg.order().kind().clone());
    let ealg = alg.with_order(ord)?;
    let input: Vec<Poly<K>> = gens.iter().map(|g| g.resort(ealg.order())).collect();
    let gb = buchberger(&ealg, &input, opts)?;
    Ok(gb.gens.iter().filter(|g| g.support_mask() & dropped == 0).map(|g| g.resort(alg.order())).collect())
}

/// Every element of `b` lies in the ideal with Gröbner basis `a`.
pub fn ideal_contains<K: Coeff>(alg: &GAlgebra<K>, a: &[Poly<K>], b: &[Poly<K>]) -> bool {
    b.iter().all(|p| reduces_to_zero(alg, p, a))
}

/// The two generator sets span the same left ideal (Gröbner bases are computed for both).
pub fn ideal_equal<K: Coeff>(alg: &GAlgebra<K>, a: &[Poly<K>], b: &[Poly<K>], opts: &GbOptions) -> Result<bool> {
    let ga = buchberger(alg, a, opts)?;
    if !ideal_contains(alg, &ga.gens, b) {
        return Ok(false);
    }
    let gb = buchberger(alg, b, opts)?;
    Ok(ideal_contains(alg, &gb.gens, a))
}
