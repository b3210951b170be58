//! Univariate polynomials over the rationals and b-function factorizations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{DmodError, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: String,
}

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>, var: &str) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, var: var.to_string() }
    }

    pub fn zero(var: &str) -> Self {
        Self::new(vec![], var)
    }

    pub fn one(var: &str) -> Self {
        Self::new(vec![q(1)], var)
    }

    pub fn constant(c: Rational, var: &str) -> Self {
        Self::new(vec![c], var)
    }

    /// The polynomial `s + a`.
    pub fn linear(a: Rational, var: &str) -> Self {
        Self::new(vec![a, q(1)], var)
    }

    pub fn var_name(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial has degree `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect(), &self.var)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect(), &self.var)
    }

    pub fn add(&self, o: &UniPoly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect(), &self.var)
    }

    pub fn sub(&self, o: &UniPoly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect(), &self.var)
    }

    pub fn mul(&self, o: &UniPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.var);
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c, &self.var)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one(&self.var);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dn = d.coeffs.len() - 1;
        let dl = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return (Self::zero(&self.var), self.clone());
        }
        let mut quo = vec![Rational::zero(); r.len() - dn];
        for k in (0..quo.len()).rev() {
            let c = &r[k + dn] / &dl;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * b;
                }
            }
            quo[k] = c;
        }
        r.truncate(dn);
        (Self::new(quo, &self.var), Self::new(r, &self.var))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &UniPoly) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect(), &self.var)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(a*s + b)`.
    pub fn compose_linear(&self, a: &Rational, b: &Rational) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()], &self.var);
        let mut acc = Self::zero(&self.var);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone(), &self.var));
        }
        acc
    }

    pub fn with_var(&self, var: &str) -> Self {
        UniPoly { coeffs: self.coeffs.clone(), var: var.to_string() }
    }

    /// Product of `(s - r)^m`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = (&'a Rational, &'a u32)>, var: &str) -> Self {
        let mut p = Self::one(var);
        for (r, &m) in roots {
            p = p.mul(&Self::linear(-r.clone(), var).pow(m));
        }
        p
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, i),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// A monic univariate polynomial split into rational linear factors and a rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFunction {
    pub poly: UniPoly,
    pub roots: BTreeMap<Rational, u32>,
    pub remainder: UniPoly,
}

impl BFunction {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    /// Fails unless every root is a negative rational and nothing is left over.
    pub fn check_bernstein(&self) -> Result<()> {
        if !self.remainder.is_one() {
            return Err(DmodError::Computation(format!("b-function has a non-rational factor {}", self.remainder)));
        }
        if let Some((r, _)) = self.roots.iter().find(|(r, _)| !r.is_negative()) {
            return Err(DmodError::Computation(format!("b-function has a non-negative root {r}")));
        }
        Ok(())
    }

    pub fn multiplicity(&self, r: &Rational) -> u32 {
        self.roots.get(r).copied().unwrap_or(0)
    }
}

/// Number of sign changes of a Sturm chain at `x`.
fn sign_changes(chain: &[UniPoly], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[k - 2].div_rem(&chain[k - 1]).1;
        if r.is_zero() {
            break;
        }
        chain.push(r.scale(&q(-1)));
    }
    chain
}

/// Rational roots of a square-free polynomial with non-zero constant term.
fn squarefree_rational_roots(g: &UniPoly) -> Vec<Rational> {
    let deg = g.degree().unwrap_or(0);
    if deg == 0 {
        return vec![];
    }
    let mut den = BigInt::one();
    for c in g.coeffs() {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = g.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    let lead = ints[deg].abs();
    let h = UniPoly::new(ints.iter().map(|c| Rational::from_integer(c.clone())).collect(), g.var_name());

    let mut bound = Rational::one();
    for c in &ints[..deg] {
        let r = Rational::new(c.abs(), lead.clone());
        if r > bound {
            bound = r;
        }
    }
    bound += q(1);

    let chain = sturm_chain(&h);
    let width = Rational::new(BigInt::one(), lead.clone());
    let lead_q = Rational::from_integer(lead.clone());
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((a, b)) = stack.pop() {
        let k = sign_changes(&chain, &a) - sign_changes(&chain, &b);
        if k == 0 {
            continue;
        }
        let mid = (&a + &b) / q(2);
        if k > 1 {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
            continue;
        }
        let (mut a, mut b) = (a, b);
        while &b - &a >= width {
            let m = (&a + &b) / q(2);
            if sign_changes(&chain, &a) - sign_changes(&chain, &m) == 1 {
                b = m;
            } else {
                a = m;
            }
        }
        let m = (&a + &b) / q(2);
        let cand = (m * &lead_q).round() / &lead_q;
        if h.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    out
}

/// Splits `p` into rational linear factors with multiplicities and a monic remainder.
pub fn unipoly_rational_roots(p: &UniPoly) -> Result<BFunction> {
    if p.is_zero() {
        return Err(DmodError::ZeroInput);
    }
    let poly = p.monic();
    let var = p.var_name().to_string();
    let mut roots = BTreeMap::new();
    let mut rest = poly.clone();
    let mut zero_mult = 0;
    while rest.degree().unwrap_or(0) > 0 && rest.coeff(0).is_zero() {
        rest = UniPoly::new(rest.coeffs()[1..].to_vec(), &var);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.insert(Rational::zero(), zero_mult);
    }
    let sqfree = if rest.degree().unwrap_or(0) > 0 { rest.div_rem(&rest.gcd(&rest.derivative())).0 } else { rest.clone() };
    for r in squarefree_rational_roots(&sqfree.monic()) {
        let lin = UniPoly::linear(-r.clone(), &var);
        let mut m = 0;
        loop {
            let (quo, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = quo;
            m += 1;
        }
        roots.insert(r, m);
    }
    Ok(BFunction { poly, roots, remainder: rest.monic() })
}

/// `(-1)^deg b(-s-1)`, monic.
pub fn unipoly_bs_transform(b: &UniPoly) -> Result<UniPoly> {
    if b.is_zero() {
        return Err(DmodError::ZeroInput);
    }
    Ok(b.compose_linear(&q(-1), &q(-1)).monic())
}

/// `s(s-1)...(s-k+1)/k!`.
pub fn symbolic_binomial(k: u32, var: &str) -> UniPoly {
    let mut p = UniPoly::one(var);
    let mut fact = q(1);
    for i in 0..k {
        p = p.mul(&UniPoly::linear(q(-(i as i64)), var));
        fact *= q(i as i64 + 1);
    }
    p.scale(&(q(1) / fact))
}
