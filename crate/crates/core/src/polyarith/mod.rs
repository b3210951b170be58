//! Exact coefficients, exponent vectors, orderings, sparse polynomials and
//! univariate utilities.

pub mod coeff;
pub mod expvec;
pub mod order;
pub mod poly;
pub mod unipoly;

pub use coeff::Coeff;
pub use expvec::{Exp, ExpVec};
pub use order::{cmp_monomials, ModuleRule, MonOrder, TermOrder};
pub use poly::{Poly, Term};
pub use unipoly::{symbolic_binomial, unipoly_bs_transform, unipoly_rational_roots, BFunction, UniPoly};
