//! Vector partitions and the expansion of `Δ^β f^s`, where `Δ^β = ∂^β / β!`.

use num_bigint::BigInt;
use num_traits::One;

use crate::dmod::{embed, uni_to_alg};
use crate::polyarith::{symbolic_binomial, ExpVec};
use crate::{Algebra, OpPoly, Rational};

/// A multiset of non-zero exponent vectors summing to `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    /// Parts in non-increasing lexicographic order.
    pub parts: Vec<ExpVec>,
    pub beta: ExpVec,
    pub length: usize,
    /// Distinct parts with their counts, in the order of `parts`.
    pub multiplicities: Vec<(ExpVec, u32)>,
}

impl Partition {
    fn new(parts: Vec<ExpVec>, beta: ExpVec) -> Self {
        let mut multiplicities: Vec<(ExpVec, u32)> = Vec::new();
        for p in &parts {
            match multiplicities.last_mut() {
                Some((q, c)) if q == p => *c += 1,
                _ => multiplicities.push((p.clone(), 1)),
            }
        }
        Partition { length: parts.len(), parts, beta, multiplicities }
    }

    /// `ℓ(σ)! = Π_τ ℓ_τ!` over the distinct parts.
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities.iter().map(|(_, c)| factorial(*c)).product()
    }
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// All vectors `v` with `0 <= v <= bound` componentwise, except zero, in decreasing lexicographic order.
fn boxed_vectors(bound: &ExpVec) -> Vec<ExpVec> {
    let mut out = vec![ExpVec::zeros(bound.len())];
    for i in 0..bound.len() {
        let mut next = Vec::new();
        for v in &out {
            for e in 0..=bound.get(i) {
                let mut w = v.clone();
                w.set(i, e);
                next.push(w);
            }
        }
        out = next;
    }
    out.retain(|v| !v.is_one());
    out.sort_by(|a, b| b.as_slice().cmp(a.as_slice()));
    out
}

fn extend(rest: &ExpVec, max: Option<&ExpVec>, cur: &mut Vec<ExpVec>, beta: &ExpVec, out: &mut Vec<Partition>) {
    if rest.is_one() {
        out.push(Partition::new(cur.clone(), beta.clone()));
        return;
    }
    for v in boxed_vectors(rest) {
        if max.is_some_and(|m| v.as_slice() > m.as_slice()) {
            continue;
        }
        cur.push(v.clone());
        extend(&rest.sub(&v), Some(&v), cur, beta, out);
        cur.pop();
    }
}

/// Every partition of `beta` into non-zero parts, in a fixed order.
pub fn partitions(beta: &ExpVec) -> Vec<Partition> {
    let mut out = Vec::new();
    if beta.is_one() {
        return out;
    }
    extend(beta, None, &mut Vec::new(), beta, &mut out);
    out
}

/// `Δ^σ f` for a commutative polynomial.
fn divided_derivative(f: &OpPoly, sigma: &ExpVec) -> OpPoly {
    let mut g = f.clone();
    let mut denom = BigInt::one();
    for (i, &e) in sigma.iter().enumerate() {
        for _ in 0..e {
            g = g.derivative(i);
        }
        denom *= factorial(e as u32);
    }
    g.scale(&Rational::new(BigInt::one(), denom))
}

/// `g_β` in `K[x, s]` with `Δ^β f^s = g_β f^(s - |β|)`.
///
/// `g_β = Σ_j C(s, j) Σ_{σ ∈ P(β; j)} (j! / ℓ(σ)!) Δ^σ_1 f ⋯ Δ^σ_j f · f^(|β| - j)`, where
/// `j!/ℓ(σ)!` counts the orderings of the multiset `σ`. `cring` is `K[x_1..x_n, s]`.
pub fn formula_fs(cring: &Algebra, f: &OpPoly, beta: &ExpVec) -> OpPoly {
    let n = beta.len();
    let ord = cring.order();
    if beta.is_one() {
        return cring.one();
    }
    let fe = embed(f, cring);
    let total = beta.degree();
    let mut out = OpPoly::zero();
    for part in partitions(beta) {
        let j = part.length as u32;
        let mut prod = cring.constant(Rational::new(factorial(j), part.multiplicity_factorial()));
        for p in &part.parts {
            prod = prod.mul_comm(&embed(&divided_derivative(f, p), cring), ord);
        }
        if prod.is_zero() {
            continue;
        }
        let binom = symbolic_binomial(j, "s");
        let b = uni_to_alg(&binom, cring, n);
        prod = prod.mul_comm(&b, ord).mul_comm(&fe.pow_comm(total - j, ord, cring.nvars()), ord);
        out = out.add(&prod, ord);
    }
    out
}
