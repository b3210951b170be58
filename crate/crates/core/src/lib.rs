//! Gröbner bases over G-algebras of Lie type and algorithms for D-modules:
//! annihilators of powers of polynomials, b-functions, Bernstein-Sato
//! polynomials, operators and ideals.
//!
//! The engine ([`polyarith`], [`galgebra`], [`groebner`]) is generic over the
//! coefficient field through [`polyarith::Coeff`]. The D-module layer
//! ([`dmod`]) and the text format ([`text`]) work over the rationals.

pub mod dmod;
pub mod error;
pub mod galgebra;
pub mod groebner;
pub mod polyarith;
pub mod text;

pub use error::{DmodError, Result};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;
/// Element of a G-algebra (or of a free module over one) with rational coefficients.
pub type OpPoly = polyarith::Poly<Rational>;
/// Free-module element; components live in the `comp` field of each term.
pub type VecPoly = polyarith::Poly<Rational>;
/// G-algebra with rational coefficients.
pub type Algebra = galgebra::GAlgebra<Rational>;
/// Gröbner basis with rational coefficients.
pub type Basis = groebner::GBasis<Rational>;
