//! Named algebras.
//!
//! Variable layout conventions (in index order):
//! - `weyl`: `x_1..x_n, Dx_1..Dx_n`
//! - `weyl_s`: Weyl part, then central `s` (or `s1..sp`)
//! - `weyl_shift`: Weyl part, `Dt` (or `Dt1..Dtp`), then `s` (or `s1..sp`) with `Dt_j s_j = s_j Dt_j - Dt_j`
//! - `weyl_homog`: Weyl part, then central `h` with `Dx_i x_i = x_i Dx_i + h^(u_i+v_i)`
//! - `weyl_gl`: Weyl part, then `s11, s12, .., srr`
//! - `weyl_dt_gl`: Weyl part, `Dt1..Dtr`, then `s11..srr`
//! - `e_algebra`: Weyl part, `t1..tp`, `Dt1..Dtp`, `s1..sp`

use crate::error::{DmodError, Result};
use crate::galgebra::algebra::{GAlgebra, Relation, VarRole};
use crate::polyarith::{Coeff, ExpVec, MonOrder};

/// Preset algebra kinds with default variable names `x1..xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresetKind {
    Weyl(usize),
    WeylS(usize, usize),
    WeylShift(usize, usize),
    WeylHomog(usize, Vec<i64>, Vec<i64>),
    WeylGl(usize, usize),
    WeylDtGl(usize, usize),
    Commutative(usize),
    E(usize, usize),
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub fn preset<K: Coeff>(kind: &PresetKind) -> Result<GAlgebra<K>> {
    match kind {
        PresetKind::Weyl(n) => weyl(&default_names(*n)),
        PresetKind::WeylS(n, p) => weyl_s(&default_names(*n), *p),
        PresetKind::WeylShift(n, p) => weyl_shift(&default_names(*n), *p),
        PresetKind::WeylHomog(n, u, v) => weyl_homog(&default_names(*n), u, v),
        PresetKind::WeylGl(n, r) => weyl_gl(&default_names(*n), *r),
        PresetKind::WeylDtGl(n, r) => weyl_dt_gl(&default_names(*n), *r),
        PresetKind::Commutative(m) => commutative(&default_names(*m)),
        PresetKind::E(n, p) => e_algebra(&default_names(*n), *p),
    }
}

pub fn d_name(x: &str) -> String {
    format!("D{x}")
}

fn indexed(base: &str, k: usize, count: usize) -> String {
    if count == 1 {
        base.to_string()
    } else {
        format!("{base}{}", k + 1)
    }
}

pub fn s_names(p: usize) -> Vec<String> {
    (0..p).map(|k| indexed("s", k, p)).collect()
}

pub fn dt_names(p: usize) -> Vec<String> {
    (0..p).map(|k| indexed("Dt", k, p)).collect()
}

pub fn sij_names(r: usize) -> Vec<String> {
    let mut v = Vec::new();
    for i in 0..r {
        for j in 0..r {
            v.push(format!("s{}{}", i + 1, j + 1));
        }
    }
    v
}

/// A term of a commutator: sparse exponents and a coefficient.
type RelTerm<K> = (Vec<(usize, u16)>, K);

struct Builder<K> {
    names: Vec<String>,
    roles: Vec<VarRole>,
    rels: Vec<(usize, usize, Vec<RelTerm<K>>)>,
}

impl<K: Coeff> Builder<K> {
    fn new() -> Self {
        Builder { names: vec![], roles: vec![], rels: vec![] }
    }

    fn push(&mut self, name: String, role: VarRole) -> usize {
        self.names.push(name);
        self.roles.push(role);
        self.names.len() - 1
    }

    /// Adds `x_j x_i = x_i x_j + d` where `d` is a list of sparse monomials.
    fn rel(&mut self, i: usize, j: usize, d: Vec<(Vec<(usize, u16)>, K)>) {
        self.rels.push((i, j, d));
    }

    fn weyl_part(&mut self, xs: &[String]) -> (Vec<usize>, Vec<usize>) {
        let xi: Vec<usize> = xs.iter().enumerate().map(|(k, x)| self.push(x.clone(), VarRole::X(k))).collect();
        let di: Vec<usize> = xs.iter().enumerate().map(|(k, x)| self.push(d_name(x), VarRole::D(k))).collect();
        (xi, di)
    }

    fn build(self) -> Result<GAlgebra<K>> {
        self.build_with(MonOrder::DegRevLex)
    }

    fn build_with(self, order: MonOrder) -> Result<GAlgebra<K>> {
        let n = self.names.len();
        let relations = self
            .rels
            .into_iter()
            .map(|(i, j, d)| Relation {
                i,
                j,
                d: d.into_iter()
                    .map(|(sparse, c)| {
                        let mut e = ExpVec::zeros(n);
                        for (v, x) in sparse {
                            e.set(v, e.get(v) + x);
                        }
                        (e, c)
                    })
                    .collect(),
            })
            .collect();
        GAlgebra::new(self.names, self.roles, relations, order)
    }
}

fn check_names(xs: &[String]) -> Result<()> {
    for (i, a) in xs.iter().enumerate() {
        if xs[..i].contains(a) {
            return Err(DmodError::InvalidInput(format!("duplicate variable name {a}")));
        }
    }
    Ok(())
}

pub fn commutative<K: Coeff>(names: &[String]) -> Result<GAlgebra<K>> {
    check_names(names)?;
    let mut b = Builder::<K>::new();
    for x in names {
        b.push(x.clone(), VarRole::Plain);
    }
    b.build()
}

pub fn weyl<K: Coeff>(xs: &[String]) -> Result<GAlgebra<K>> {
    weyl_s(xs, 0)
}

/// `D_n[s_1..s_p]` with central parameters.
pub fn weyl_s<K: Coeff>(xs: &[String], p: usize) -> Result<GAlgebra<K>> {
    check_names(xs)?;
    let mut b = Builder::<K>::new();
    let (xi, di) = b.weyl_part(xs);
    for (k, s) in s_names(p).into_iter().enumerate() {
        b.push(s, VarRole::S(k));
    }
    for k in 0..xs.len() {
        b.rel(xi[k], di[k], vec![(vec![], K::one())]);
    }
    b.build()
}

/// `D_n ⊗ S_p`: shift operators `Dt_j` with `Dt_j s_j = s_j Dt_j - Dt_j`.
pub fn weyl_shift<K: Coeff>(xs: &[String], p: usize) -> Result<GAlgebra<K>> {
    check_names(xs)?;
    let mut b = Builder::<K>::new();
    let (xi, di) = b.weyl_part(xs);
    let dt: Vec<usize> = dt_names(p).into_iter().enumerate().map(|(k, n)| b.push(n, VarRole::Dt(k))).collect();
    let s: Vec<usize> = s_names(p).into_iter().enumerate().map(|(k, n)| b.push(n, VarRole::S(k))).collect();
    for k in 0..xs.len() {
        b.rel(xi[k], di[k], vec![(vec![], K::one())]);
    }
    for k in 0..p {
        b.rel(dt[k], s[k], vec![(vec![(dt[k], 1)], K::one())]);
    }
    b.build()
}

/// Weighted homogenized Weyl algebra with central `h`.
pub fn weyl_homog<K: Coeff>(xs: &[String], u: &[i64], v: &[i64]) -> Result<GAlgebra<K>> {
    let ds: Vec<String> = xs.iter().map(|x| d_name(x)).collect();
    let roles: Vec<(VarRole, VarRole)> = (0..xs.len()).map(|k| (VarRole::X(k), VarRole::D(k))).collect();
    weyl_homog_named(xs, &ds, &roles, u, v)
}

/// Homogenized Weyl algebra with explicit names and roles for each pair.
pub fn weyl_homog_named<K: Coeff>(
    xs: &[String],
    ds: &[String],
    roles: &[(VarRole, VarRole)],
    u: &[i64],
    v: &[i64],
) -> Result<GAlgebra<K>> {
    let n = xs.len();
    if u.len() != n || v.len() != n {
        return Err(DmodError::LengthMismatch { expected: n, found: u.len().min(v.len()) });
    }
    if u.iter().chain(v).any(|&w| w <= 0) {
        return Err(DmodError::InvalidInput("homogenization weights must be positive".into()));
    }
    let mut b = Builder::<K>::new();
    let xi: Vec<usize> = (0..n).map(|k| b.push(xs[k].clone(), roles[k].0.clone())).collect();
    let di: Vec<usize> = (0..n).map(|k| b.push(ds[k].clone(), roles[k].1.clone())).collect();
    let h = b.push("h".into(), VarRole::H);
    for k in 0..n {
        b.rel(xi[k], di[k], vec![(vec![(h, (u[k] + v[k]) as u16)], K::one())]);
    }
    // (u, v, 1)-degree first, then the degree in x and D, then degrevlex.
    let mut uv1: Vec<i64> = u.iter().chain(v).copied().collect();
    uv1.push(1);
    let mut deg = vec![1; 2 * n];
    deg.push(0);
    b.build_with(MonOrder::weighted(uv1, MonOrder::weighted(deg, MonOrder::DegRevLex)))
}

/// Weyl algebra with explicit names and roles; pairs are `(xs[k], ds[k])`.
pub fn weyl_named<K: Coeff>(xs: &[String], ds: &[String], roles: &[(VarRole, VarRole)]) -> Result<GAlgebra<K>> {
    let n = xs.len();
    let mut b = Builder::<K>::new();
    let xi: Vec<usize> = (0..n).map(|k| b.push(xs[k].clone(), roles[k].0.clone())).collect();
    let di: Vec<usize> = (0..n).map(|k| b.push(ds[k].clone(), roles[k].1.clone())).collect();
    for k in 0..n {
        b.rel(xi[k], di[k], vec![(vec![], K::one())]);
    }
    b.build()
}

fn gl_relations<K: Coeff>(b: &mut Builder<K>, s: &[usize], r: usize) {
    // [s_kl, s_ij] = δ_li s_kj - δ_kj s_il, used as d for the pair (s_ij, s_kl) with s_ij first.
    let idx = |i: usize, j: usize| s[i * r + j];
    for a in 0..r * r {
        for c in a + 1..r * r {
            let (i, j) = (a / r, a % r);
            let (k, l) = (c / r, c % r);
            let mut d = Vec::new();
            if l == i {
                d.push((vec![(idx(k, j), 1)], K::one()));
            }
            if k == j {
                d.push((vec![(idx(i, l), 1)], -K::one()));
            }
            if !d.is_empty() {
                b.rel(idx(i, j), idx(k, l), d);
            }
        }
    }
}

/// `D_n<S>` with `[s_ij, s_kl] = δ_jk s_il - δ_il s_kj`.
pub fn weyl_gl<K: Coeff>(xs: &[String], r: usize) -> Result<GAlgebra<K>> {
    check_names(xs)?;
    let mut b = Builder::<K>::new();
    let (xi, di) = b.weyl_part(xs);
    let s: Vec<usize> = sij_names(r).into_iter().enumerate().map(|(a, n)| b.push(n, VarRole::Sij(a / r, a % r))).collect();
    for k in 0..xs.len() {
        b.rel(xi[k], di[k], vec![(vec![], K::one())]);
    }
    gl_relations(&mut b, &s, r);
    b.build()
}

/// `D_n<Dt, S>`: adds `Dt_1..Dt_r` with `[s_ij, Dt_k] = δ_jk Dt_i`.
pub fn weyl_dt_gl<K: Coeff>(xs: &[String], r: usize) -> Result<GAlgebra<K>> {
    check_names(xs)?;
    let mut b = Builder::<K>::new();
    let (xi, di) = b.weyl_part(xs);
    let dt: Vec<usize> = (0..r).map(|k| b.push(format!("Dt{}", k + 1), VarRole::Dt(k))).collect();
    let s: Vec<usize> = sij_names(r).into_iter().enumerate().map(|(a, n)| b.push(n, VarRole::Sij(a / r, a % r))).collect();
    for k in 0..xs.len() {
        b.rel(xi[k], di[k], vec![(vec![], K::one())]);
    }
    gl_relations(&mut b, &s, r);
    for i in 0..r {
        for j in 0..r {
            // s_ij Dt_j = Dt_j s_ij + Dt_i
            b.rel(dt[j], s[i * r + j], vec![(vec![(dt[i], 1)], K::one())]);
        }
    }
    b.build()
}

/// The algebra with `t_j, Dt_j, x_i, Dx_i, s_j`, `[t_k, s_j] = δ_jk t_j`, `[Dt_k, s_j] = -δ_jk Dt_j`.
pub fn e_algebra<K: Coeff>(xs: &[String], p: usize) -> Result<GAlgebra<K>> {
    check_names(xs)?;
    let mut b = Builder::<K>::new();
    let (xi, di) = b.weyl_part(xs);
    let t: Vec<usize> = (0..p).map(|k| b.push(indexed("t", k, p), VarRole::T(k))).collect();
    let dt: Vec<usize> = dt_names(p).into_iter().enumerate().map(|(k, n)| b.push(n, VarRole::Dt(k))).collect();
    let s: Vec<usize> = s_names(p).into_iter().enumerate().map(|(k, n)| b.push(n, VarRole::S(k))).collect();
    for k in 0..xs.len() {
        b.rel(xi[k], di[k], vec![(vec![], K::one())]);
    }
    for k in 0..p {
        b.rel(t[k], dt[k], vec![(vec![], K::one())]);
        b.rel(t[k], s[k], vec![(vec![(t[k], 1)], -K::one())]);
        b.rel(dt[k], s[k], vec![(vec![(dt[k], 1)], K::one())]);
    }
    b.build()
}
