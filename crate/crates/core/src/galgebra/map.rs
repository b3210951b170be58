use crate::error::{DmodError, Result};
use crate::galgebra::algebra::GAlgebra;
use crate::polyarith::{Coeff, Poly, Term};

/// Homomorphism given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct AlgebraMap<K: Coeff> {
    pub source: GAlgebra<K>,
    pub target: GAlgebra<K>,
    pub images: Vec<Poly<K>>,
}

impl<K: Coeff> AlgebraMap<K> {
    pub fn new(source: GAlgebra<K>, target: GAlgebra<K>, images: Vec<Poly<K>>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(DmodError::LengthMismatch { expected: source.nvars(), found: images.len() });
        }
        for im in &images {
            target.check_member(im)?;
        }
        Ok(AlgebraMap { source, target, images })
    }

    /// Identity on an algebra except that variable `var` goes to `image`.
    pub fn substitution(alg: &GAlgebra<K>, var: usize, image: Poly<K>) -> Result<Self> {
        let images = (0..alg.nvars()).map(|i| if i == var { image.clone() } else { alg.var(i) }).collect();
        Self::new(alg.clone(), alg.clone(), images)
    }

    /// Checks the defining relations: `[img_j, img_i] = img(d_ij)` for all `i < j`.
    pub fn check_homomorphism(&self) -> Result<bool> {
        let n = self.source.nvars();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.target.lie_bracket(&self.images[j], &self.images[i]);
                let rhs = self.apply(&self.source.relation(i, j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn apply(&self, p: &Poly<K>) -> Result<Poly<K>> {
        self.source.check_member(p)?;
        let n = self.source.nvars();
        let mut powers: Vec<Vec<Poly<K>>> = vec![vec![self.target.one()]; n];
        let mut terms: Vec<Term<K>> = Vec::new();
        for t in p.terms() {
            let mut acc = self.target.constant(t.coeff.clone());
            for (i, (pw, img)) in powers.iter_mut().zip(&self.images).enumerate() {
                let e = t.exp.get(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = self.target.star_mul(pw.last().unwrap(), img);
                    pw.push(next);
                }
                acc = self.target.star_mul(&acc, &pw[e]);
            }
            terms.extend(acc.into_terms().into_iter().map(|mut x| {
                x.comp = t.comp;
                x
            }));
        }
        Ok(Poly::from_terms(terms, self.target.order()))
    }
}

/// Rewrites `t^k Dt^k` as `θ(θ-1)..(θ-k+1)` and sends `θ = t*Dt` to `theta_image`;
/// every other source variable `i` goes to `var_images[i]`.
///
/// Fails when a term has unequal powers of `t` and `Dt` (not in the subalgebra generated by `θ`).
pub fn substitute_euler<K: Coeff>(
    source: &GAlgebra<K>,
    target: &GAlgebra<K>,
    p: &Poly<K>,
    t: usize,
    dt: usize,
    theta_image: &Poly<K>,
    var_images: &[Option<Poly<K>>],
) -> Result<Poly<K>> {
    let n = source.nvars();
    let mut out = Poly::zero();
    for term in p.terms() {
        let (a, b) = (term.exp.get(t), term.exp.get(dt));
        if a != b {
            return Err(DmodError::InvalidInput("term is not a polynomial in t*Dt".into()));
        }
        let mut acc = target.constant(term.coeff.clone());
        for i in 0..a {
            let shifted = theta_image.axpy(&-K::one(), &target.constant(int::<K>(i as i64)), target.order());
            acc = target.star_mul(&acc, &shifted);
        }
        for (i, vi) in var_images.iter().enumerate().take(n) {
            let e = term.exp.get(i);
            if i == t || i == dt || e == 0 {
                continue;
            }
            let img = vi.as_ref().ok_or_else(|| DmodError::InvalidInput(format!("no image for {}", source.name(i))))?;
            acc = target.star_mul(&acc, &target.pow(img, e as u32));
        }
        out = out.add(&acc, target.order());
    }
    Ok(out)
}

pub(crate) fn int<K: Coeff>(n: i64) -> K {
    let mut r = K::zero();
    for _ in 0..n.unsigned_abs() {
        r = r + K::one();
    }
    if n < 0 {
        -r
    } else {
        r
    }
}
