use std::fmt;

use smallvec::SmallVec;

pub type Exp = u16;

/// Exponent vector with one slot per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ExpVec(SmallVec<[Exp; 16]>);

impl ExpVec {
    pub fn zeros(n: usize) -> Self {
        ExpVec(SmallVec::from_elem(0, n))
    }

    pub fn unit(n: usize, i: usize, e: Exp) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = e;
        v
    }

    pub fn from_slice(s: &[Exp]) -> Self {
        ExpVec(SmallVec::from_slice(s))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[Exp] {
        &self.0
    }

    #[inline]
    pub fn get(&self, i: usize) -> Exp {
        self.0[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, e: Exp) {
        self.0[i] = e;
    }

    pub fn iter(&self) -> impl Iterator<Item = &Exp> {
        self.0.iter()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, w: &[i64]) -> i64 {
        self.0.iter().zip(w).map(|(&e, &w)| e as i64 * w).sum()
    }

    /// Bitmask of variables with a non-zero exponent (variables past 63 fold onto bit 63).
    #[inline]
    pub fn mask(&self) -> u64 {
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                m |= 1u64 << i.min(63);
            }
        }
        m
    }

    #[inline]
    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` when some slot would go negative.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(ExpVec(out))
    }

    pub fn sub(&self, other: &ExpVec) -> ExpVec {
        self.checked_sub(other).expect("exponent subtraction underflow")
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Keeps slots with index in `range`, zeroing the rest.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> ExpVec {
        ExpVec(self.0.iter().enumerate().map(|(i, &e)| if keep(i) { e } else { 0 }).collect())
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl std::ops::Index<usize> for ExpVec {
    type Output = Exp;
    fn index(&self, i: usize) -> &Exp {
        &self.0[i]
    }
}
