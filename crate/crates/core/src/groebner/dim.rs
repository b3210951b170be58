use rustc_hash::FxHashMap;

use crate::polyarith::{Coeff, ExpVec, Poly};

/// Krull dimension of the monomial ideal spanned by `lms`: the largest set of variables
/// containing the support of no generator.
pub fn lt_dimension<'a>(lms: impl IntoIterator<Item = &'a ExpVec>, nvars: usize) -> usize {
    let mut supports: Vec<u64> = lms.into_iter().map(|e| e.mask()).collect();
    supports.sort_unstable();
    supports.dedup();
    if supports.contains(&0) {
        return 0;
    }
    let all = if nvars == 64 { u64::MAX } else { (1u64 << nvars) - 1 };
    let mut memo = FxHashMap::default();
    dim_rec(all, &supports, &mut memo)
}

fn dim_rec(u: u64, supports: &[u64], memo: &mut FxHashMap<u64, usize>) -> usize {
    if let Some(&d) = memo.get(&u) {
        return d;
    }
    let d = match supports.iter().find(|&&s| s & !u == 0) {
        None => u.count_ones() as usize,
        Some(&s) => {
            let mut best = 0;
            let mut m = s;
            while m != 0 {
                let v = m & m.wrapping_neg();
                best = best.max(dim_rec(u & !v, supports, memo));
                m &= m - 1;
            }
            best
        }
    };
    memo.insert(u, d);
    d
}

/// Dimension of the leading-monomial ideal of a Gröbner basis, all variables treated as commuting.
pub fn lt_dimension_of<K: Coeff>(g: &[Poly<K>], nvars: usize) -> usize {
    lt_dimension(g.iter().filter(|p| !p.is_zero()).map(|p| p.lm()), nvars)
}
