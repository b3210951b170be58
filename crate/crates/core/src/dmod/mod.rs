//! Annihilators, initial ideals, b-functions, Bernstein operators and
//! Bernstein-Sato ideals over the rationals.
//!
//! Input polynomials live in a commutative ring whose variables become the
//! `x` block (indices `0..n`) of every operator algebra built here.

mod action;
mod annfs;
mod bfunction;
mod initial;
mod operator;
mod partition;
mod special;
mod variety;

use num_traits::Zero;

use crate::error::{DmodError, Result};
use crate::groebner::GbOptions;
use crate::polyarith::{BFunction, ExpVec, Term, UniPoly};
use crate::{Algebra, Basis, OpPoly, Rational};

pub use action::{apply_to_fs, FsAction, FsElement};
pub use annfs::{bm_generators, malgrange_ideal, sannfs_bm};
pub use bfunction::{bfct, bfct_ann, bfct_ideal, bs_ideal, check_root, min_integer_root, root_multiplicity};
pub use initial::{initial_ideal, principal_intersect, principal_intersect_gb, solve0};
pub use operator::{
    ann_shifted, bernstein_operator, bernstein_operator_nf, functional_identity_holds, operator_lift, operator_modulo,
    operator_search, OperatorMethod,
};
pub use partition::{formula_fs, partitions, Partition};
pub use special::{ann_falpha, ann_poly, ann_rat, ann_upto_k, sannfs_log};
pub use variety::{bfct_var, codim_of, sannfs_var, VarietyBFunction};

/// Limits shared by the D-module computations.
#[derive(Clone, Debug)]
pub struct DmodOptions {
    pub gb: GbOptions,
    /// Largest degree tried when searching for a polynomial in `sigma` inside an ideal.
    pub intersect_cap: usize,
    /// Largest operator degree tried by [`operator_search`].
    pub search_cap: u32,
}

impl Default for DmodOptions {
    fn default() -> Self {
        DmodOptions { gb: GbOptions::default(), intersect_cap: 60, search_cap: 12 }
    }
}

/// An s-parametric annihilator together with the data it was computed from.
#[derive(Clone, Debug)]
pub struct SParamAnnihilator {
    /// `D_n[s]`, `D_n[s_1..s_p]` or `D_n<S>`.
    pub algebra: Algebra,
    pub gens: Basis,
    /// The input polynomials, in `ring`.
    pub fs: Vec<OpPoly>,
    pub ring: Algebra,
}

impl SParamAnnihilator {
    pub fn nx(&self) -> usize {
        self.ring.nvars()
    }

    /// Index of the parameter `s` (single-polynomial annihilators only).
    pub fn s_index(&self) -> Result<usize> {
        if self.fs.len() != 1 {
            return Err(DmodError::InvalidInput("expected the annihilator of a single polynomial".into()));
        }
        self.algebra
            .find_role(&crate::galgebra::VarRole::S(0))
            .ok_or_else(|| DmodError::InvalidInput("algebra has no parameter s".into()))
    }

    /// The single input polynomial embedded into the operator algebra.
    pub fn f_embedded(&self) -> Result<OpPoly> {
        self.s_index()?;
        Ok(embed(&self.fs[0], &self.algebra))
    }
}

/// Where a b-function or operator came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    InitialIdeal,
    Annihilator,
    Modulo,
    Search,
    Lift,
}

/// A b-function with an optional Bernstein operator.
#[derive(Clone, Debug)]
pub struct BernsteinData {
    pub b: BFunction,
    pub operator: Option<OpPoly>,
    pub method: Method,
}

pub(crate) fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rejects empty lists and zero or constant polynomials.
pub(crate) fn check_inputs(ring: &Algebra, fs: &[OpPoly]) -> Result<()> {
    if fs.is_empty() {
        return Err(DmodError::InvalidInput("no polynomial given".into()));
    }
    if !ring.is_commutative() {
        return Err(DmodError::InvalidInput("input polynomials must come from a commutative ring".into()));
    }
    for f in fs {
        ring.check_member(f)?;
        if f.is_zero() {
            return Err(DmodError::ZeroInput);
        }
        if f.is_constant() {
            return Err(DmodError::ConstantInput);
        }
    }
    Ok(())
}

/// Copies a polynomial of the input ring into an algebra whose first variables are the ring variables.
pub(crate) fn embed(f: &OpPoly, alg: &Algebra) -> OpPoly {
    let n = f.lead().map(|t| t.exp.len()).unwrap_or(0);
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    f.reindex(&map, alg.nvars(), alg.order()).expect("identity map on the prefix")
}

/// `b(var)` as an element of `alg`.
pub(crate) fn uni_to_alg(b: &UniPoly, alg: &Algebra, var: usize) -> OpPoly {
    let n = alg.nvars();
    let terms = b
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| Term { exp: ExpVec::unit(n, var, k as u16), comp: 0, coeff: c.clone() })
        .collect();
    OpPoly::from_terms(terms, alg.order())
}

/// Moves variables and sorts for the target algebra; fails if a dropped variable occurs.
pub(crate) fn move_to(p: &OpPoly, map: &[Option<usize>], target: &Algebra) -> Result<OpPoly> {
    p.reindex(map, target.nvars(), target.order())
        .ok_or_else(|| DmodError::Computation("element uses a variable that should have been eliminated".into()))
}
