//! Monomial and module orderings.
//!
//! A [`MonOrder`] is compiled into a [`TermOrder`]: a list of weight rows
//! followed by a lex or revlex tail. Block orders are flattened into rows so
//! comparisons never recurse.

use std::cmp::Ordering;

use crate::error::{DmodError, Result};
use crate::polyarith::expvec::ExpVec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonOrder {
    DegRevLex,
    Lex,
    /// Compare the weighted degree first, then fall back to `tie`.
    Weighted { weights: Vec<i64>, tie: Box<MonOrder> },
    /// Blocks listed from most to least significant; every variable appears in exactly one block.
    Block(Vec<(Vec<usize>, MonOrder)>),
}

impl MonOrder {
    pub fn weighted(weights: Vec<i64>, tie: MonOrder) -> Self {
        MonOrder::Weighted { weights, tie: Box::new(tie) }
    }

    /// Weight 1 on `drop`, 0 elsewhere, then `tie`.
    pub fn elimination(nvars: usize, drop: &[usize], tie: MonOrder) -> Self {
        let mut w = vec![0; nvars];
        for &i in drop {
            w[i] = 1;
        }
        MonOrder::weighted(w, tie)
    }
}

/// How components of free-module elements enter the comparison.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum ModuleRule {
    /// Monomial first, then component (lower index is larger).
    #[default]
    TermOverPosition,
    /// Listed components first, in list order (first entry is largest); unlisted
    /// components form one final group compared term-over-position.
    PositionOverTerm(Vec<u32>),
}

#[derive(Clone, Debug)]
enum Row {
    Dense(Vec<i64>),
    Unit(usize, i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tail {
    RevLex,
    Lex,
    Done,
}

/// A compiled ordering on terms `(exponent, component)`.
#[derive(Clone, Debug)]
pub struct TermOrder {
    kind: MonOrder,
    module: ModuleRule,
    nvars: usize,
    rows: Vec<Row>,
    tail: Tail,
}

fn compile(kind: &MonOrder, n: usize) -> Result<(Vec<Row>, Tail)> {
    Ok(match kind {
        MonOrder::DegRevLex => (vec![Row::Dense(vec![1; n])], Tail::RevLex),
        MonOrder::Lex => (vec![], Tail::Lex),
        MonOrder::Weighted { weights, tie } => {
            if weights.len() != n {
                return Err(DmodError::LengthMismatch { expected: n, found: weights.len() });
            }
            let (mut rows, tail) = compile(tie, n)?;
            rows.insert(0, Row::Dense(weights.clone()));
            (rows, tail)
        }
        MonOrder::Block(blocks) => {
            let mut seen = vec![false; n];
            let mut rows = Vec::new();
            for (vars, ord) in blocks {
                for &v in vars {
                    if v >= n || seen[v] {
                        return Err(DmodError::InvalidInput(format!("block ordering repeats or overflows variable {v}")));
                    }
                    seen[v] = true;
                }
                let (sub, tail) = compile(ord, vars.len())?;
                for r in sub {
                    rows.push(match r {
                        Row::Dense(w) => {
                            let mut full = vec![0; n];
                            for (k, &v) in vars.iter().enumerate() {
                                full[v] = w[k];
                            }
                            Row::Dense(full)
                        }
                        Row::Unit(k, s) => Row::Unit(vars[k], s),
                    });
                }
                match tail {
                    Tail::RevLex => rows.extend(vars.iter().rev().map(|&v| Row::Unit(v, -1))),
                    Tail::Lex => rows.extend(vars.iter().map(|&v| Row::Unit(v, 1))),
                    Tail::Done => {}
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(DmodError::InvalidInput("block ordering does not cover every variable".into()));
            }
            (rows, Tail::Done)
        }
    })
}

impl TermOrder {
    pub fn new(kind: MonOrder, module: ModuleRule, nvars: usize) -> Result<Self> {
        let (rows, tail) = compile(&kind, nvars)?;
        Ok(TermOrder { kind, module, nvars, rows, tail })
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(MonOrder::DegRevLex, ModuleRule::default(), nvars).expect("degrevlex always compiles")
    }

    pub fn kind(&self) -> &MonOrder {
        &self.kind
    }

    pub fn module_rule(&self) -> &ModuleRule {
        &self.module
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_module_rule(&self, module: ModuleRule) -> Self {
        TermOrder { module, ..self.clone() }
    }

    #[inline]
    pub fn cmp_exp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        let (a, b) = (a.as_slice(), b.as_slice());
        for row in &self.rows {
            let d: i64 = match row {
                Row::Dense(w) => {
                    let mut d = 0i64;
                    for i in 0..a.len() {
                        d += w[i] * (a[i] as i64 - b[i] as i64);
                    }
                    d
                }
                Row::Unit(i, s) => s * (a[*i] as i64 - b[*i] as i64),
            };
            if d != 0 {
                return d.cmp(&0);
            }
        }
        match self.tail {
            Tail::RevLex => {
                for i in (0..a.len()).rev() {
                    if a[i] != b[i] {
                        return b[i].cmp(&a[i]);
                    }
                }
                Ordering::Equal
            }
            Tail::Lex => {
                for i in 0..a.len() {
                    if a[i] != b[i] {
                        return a[i].cmp(&b[i]);
                    }
                }
                Ordering::Equal
            }
            Tail::Done => Ordering::Equal,
        }
    }

    /// Priority group of a component: its position in the priority list, or one shared group for the rest.
    fn group(&self, c: u32) -> usize {
        match &self.module {
            ModuleRule::TermOverPosition => 0,
            ModuleRule::PositionOverTerm(p) => p.iter().position(|&x| x == c).unwrap_or(p.len()),
        }
    }

    /// Lower component index is larger.
    #[inline]
    pub fn cmp_comp(&self, a: u32, b: u32) -> Ordering {
        b.cmp(&a)
    }

    #[inline]
    pub fn cmp_term(&self, ea: &ExpVec, ca: u32, eb: &ExpVec, cb: u32) -> Ordering {
        if let ModuleRule::PositionOverTerm(_) = self.module {
            if ca != cb {
                let (ga, gb) = (self.group(ca), self.group(cb));
                if ga != gb {
                    return gb.cmp(&ga);
                }
            }
        }
        self.cmp_exp(ea, eb).then_with(|| self.cmp_comp(ca, cb))
    }

    /// Every variable is larger than 1, which makes the ordering a well-ordering.
    pub fn is_global(&self) -> bool {
        let one = ExpVec::zeros(self.nvars);
        (0..self.nvars).all(|i| self.cmp_exp(&ExpVec::unit(self.nvars, i, 1), &one) == Ordering::Greater)
    }
}

/// Compares two monomials under `ord`, checking lengths.
pub fn cmp_monomials(a: &ExpVec, b: &ExpVec, ord: &TermOrder) -> Result<Ordering> {
    for v in [a, b] {
        if v.len() != ord.nvars() {
            return Err(DmodError::LengthMismatch { expected: ord.nvars(), found: v.len() });
        }
    }
    Ok(ord.cmp_exp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &[u16]) -> ExpVec {
        ExpVec::from_slice(s)
    }

    #[test]
    fn degrevlex_basics() {
        let o = TermOrder::degrevlex(2);
        assert_eq!(o.cmp_exp(&e(&[1, 1]), &e(&[2, 0])), Ordering::Less);
        assert_eq!(o.cmp_exp(&e(&[0, 3]), &e(&[2, 0])), Ordering::Greater);
        assert!(o.is_global());
    }

    #[test]
    fn weighted_with_negative_weight() {
        let o = TermOrder::new(MonOrder::weighted(vec![-1, 1], MonOrder::DegRevLex), ModuleRule::default(), 2).unwrap();
        assert_eq!(o.cmp_exp(&e(&[1, 0]), &e(&[0, 1])), Ordering::Less);
        assert!(!o.is_global());
    }

    #[test]
    fn block_matches_lex_on_singletons() {
        let b = MonOrder::Block(vec![(vec![0], MonOrder::DegRevLex), (vec![1], MonOrder::DegRevLex)]);
        let o = TermOrder::new(b, ModuleRule::default(), 2).unwrap();
        let l = TermOrder::new(MonOrder::Lex, ModuleRule::default(), 2).unwrap();
        for a in 0..3u16 {
            for b in 0..3u16 {
                for c in 0..3u16 {
                    for d in 0..3u16 {
                        assert_eq!(o.cmp_exp(&e(&[a, b]), &e(&[c, d])), l.cmp_exp(&e(&[a, b]), &e(&[c, d])));
                    }
                }
            }
        }
    }

    #[test]
    fn length_mismatch_is_reported() {
        let o = TermOrder::degrevlex(2);
        assert!(cmp_monomials(&e(&[1]), &e(&[1, 0]), &o).is_err());
    }

    #[test]
    fn position_over_term_priority() {
        let o = TermOrder::degrevlex(1).with_module_rule(ModuleRule::PositionOverTerm(vec![2, 0, 1]));
        assert_eq!(o.cmp_term(&e(&[0]), 2, &e(&[5]), 0), Ordering::Greater);
        assert_eq!(o.cmp_term(&e(&[0]), 1, &e(&[5]), 0), Ordering::Less);
        let o = TermOrder::degrevlex(1).with_module_rule(ModuleRule::PositionOverTerm(vec![0]));
        assert_eq!(o.cmp_term(&e(&[0]), 0, &e(&[5]), 2), Ordering::Greater);
        assert_eq!(o.cmp_term(&e(&[1]), 2, &e(&[0]), 1), Ordering::Greater);
        assert_eq!(o.cmp_term(&e(&[1]), 2, &e(&[1]), 1), Ordering::Less);
    }
}
