//! Built-in corpus replayed by `dmod verify`.

use std::collections::BTreeMap;

use dmod_core::dmod::{self, DmodOptions, OperatorMethod};
use dmod_core::galgebra::{commutative, weyl};
use dmod_core::groebner::{ideal_equal, lt_dimension_of, reduces_to_zero, GbOptions};
use dmod_core::polyarith::BFunction;
use dmod_core::text::parse_poly;
use dmod_core::{Algebra, OpPoly, Rational};

use crate::output::{CaseResult, Report};

type Check = fn() -> Result<String, String>;

struct Case {
    name: &'static str,
    stretch: bool,
    check: Check,
}

const CASES: &[Case] = &[
    Case { name: "annfs x^3+y^2+x*y^2", stretch: false, check: annfs_cubic },
    Case { name: "bfct 2*x*y", stretch: false, check: bfct_2xy },
    Case { name: "bfct x*y*z*(z-y)*(y+z)", stretch: false, check: bfct_arrangement },
    Case { name: "ann-poly 2*x*y", stretch: false, check: ann_poly_2xy },
    Case { name: "ann-rat 2*x*y/(x^2-y^3)", stretch: false, check: ann_rat_example },
    Case { name: "operator x^2-x", stretch: false, check: operator_example },
    Case { name: "annfs-log x^4+y^5+x*y^4", stretch: false, check: log_example },
    Case { name: "ann-falpha x^(-1/2)", stretch: false, check: falpha_example },
    Case { name: "bfct (x^3-y^2)(3x-2y-1)(x+2y)", stretch: true, check: global_example },
    Case { name: "bfct-var tangent bundle", stretch: true, check: tangent_bundle },
];

fn opts() -> DmodOptions {
    DmodOptions::default()
}

fn ring(v: &[&str]) -> Algebra {
    commutative(&v.iter().map(|s| s.to_string()).collect::<Vec<_>>()).expect("valid names")
}

fn p(text: &str, alg: &Algebra) -> Result<OpPoly, String> {
    parse_poly(text, alg).map_err(|e| format!("{text}: {e}"))
}

fn ps(texts: &[&str], alg: &Algebra) -> Result<Vec<OpPoly>, String> {
    texts.iter().map(|t| p(t, alg)).collect()
}

fn equal(alg: &Algebra, a: &[OpPoly], b: &[OpPoly]) -> Result<(), String> {
    match ideal_equal(alg, a, b, &GbOptions::default()) {
        Ok(true) => Ok(()),
        Ok(false) => Err("ideals differ".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn roots_are(b: &BFunction, want: &[(i64, i64, u32)]) -> Result<String, String> {
    let want: BTreeMap<Rational, u32> = want.iter().map(|&(n, d, m)| (Rational::new(n.into(), d.into()), m)).collect();
    let got = b.roots.iter().map(|(r, m)| format!("({r}, {m})")).collect::<Vec<_>>().join(" ");
    if b.roots == want && b.remainder.is_one() {
        Ok(got)
    } else {
        Err(format!("roots {got}"))
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn annfs_cubic() -> Result<String, String> {
    let r = ring(&["x", "y"]);
    let ann = dmod::sannfs_bm(&r, &[p("x^3+y^2+x*y^2", &r)?], &opts()).map_err(err)?;
    let printed = ps(
        &[
            "2*x*y*Dx-3*x^2*Dy-y^2*Dy+2*y*Dx",
            "2*x^2*Dx+2*x*y*Dy+2*x*Dx+3*y*Dy-6*x*s-6*s",
            "x^2*y*Dy+y^3*Dy-2*x^2*Dx-3*x*y*Dy-2*y^2*s+6*x*s",
            "x^3*Dy+x*y^2*Dy+y^2*Dy-2*x*y*s-2*y*s",
            "2*y^3*Dx*Dy+3*x^3*Dy^2+x*y^2*Dy^2-4*x^2*Dx^2-8*x*y*Dx*Dy-2*x^2*Dx-4*y^2*Dx*s+6*x*y*Dy+12*x*Dx*s-10*x*Dx-6*y*Dy+12*s",
        ],
        &ann.algebra,
    )?;
    equal(&ann.algebra, &ann.gens.gens, &printed)?;
    Ok(format!("{} generators", ann.gens.len()))
}

fn bfct_2xy() -> Result<String, String> {
    let r = ring(&["x", "y"]);
    let f = p("2*x*y", &r)?;
    roots_are(&dmod::bfct_ann(&r, &f, &opts()).map_err(err)?, &[(-1, 1, 2)])?;
    roots_are(&dmod::bfct(&r, &f, None, &opts()).map_err(err)?, &[(-1, 1, 2)])
}

fn bfct_arrangement() -> Result<String, String> {
    let r = ring(&["x", "y", "z"]);
    let b = dmod::bfct(&r, &p("x*y*z*(z-y)*(y+z)", &r)?, None, &opts()).map_err(err)?;
    roots_are(&b, &[(-1, 1, 3), (-1, 2, 1), (-3, 4, 1), (-5, 4, 1), (-3, 2, 1)])
}

fn ann_poly_2xy() -> Result<String, String> {
    let r = ring(&["x", "y"]);
    let gb = dmod::ann_poly(&r, &p("2*x*y", &r)?, &opts()).map_err(err)?;
    let d = weyl(r.names()).map_err(err)?;
    equal(&d, &gb.gens, &ps(&["Dy^2", "y*Dy-1", "Dx^2", "x*Dx-1"], &d)?)?;
    Ok(format!("{} generators", gb.len()))
}

fn ann_rat_example() -> Result<String, String> {
    let r = ring(&["x", "y"]);
    let gb = dmod::ann_rat(&r, &p("2*x*y", &r)?, &p("x^2-y^3", &r)?, &opts()).map_err(err)?;
    let d = weyl(r.names()).map_err(err)?;
    let printed = ps(
        &[
            "3*x*Dx+2*y*Dy+1",
            "y^3*Dy^2-x^2*Dy^2+6*y^2*Dy+6*y",
            "9*y^2*Dx^2*Dy-4*y*Dy^3+27*y*Dx^2+2*Dy^2",
            "y^4*Dy-x^2*y*Dy+2*y^3+x^2",
            "9*y^3*Dx^2-4*y^2*Dy^2+10*y*Dy-10",
        ],
        &d,
    )?;
    equal(&d, &gb.gens, &printed)?;
    Ok(format!("{} generators", gb.len()))
}

fn operator_example() -> Result<String, String> {
    let r = ring(&["x"]);
    let f = p("x^2-x", &r)?;
    let b = dmod::bfct_ann(&r, &f, &opts()).map_err(err)?;
    roots_are(&b, &[(-1, 1, 1)])?;
    let ann = dmod::sannfs_bm(&r, &[f], &opts()).map_err(err)?;
    let expect = dmod::bernstein_operator_nf(&ann, &p("(2*x-1)*Dx-4*(s+1)", &ann.algebra)?, &opts()).map_err(err)?;
    for m in [OperatorMethod::Modulo, OperatorMethod::Search, OperatorMethod::Lift] {
        let data = dmod::bernstein_operator(&ann, &b, m, &opts()).map_err(err)?;
        let nf = dmod::bernstein_operator_nf(&ann, data.operator.as_ref().ok_or("no operator")?, &opts()).map_err(err)?;
        if nf != expect {
            return Err(format!("{m:?} gives a different operator"));
        }
    }
    Ok("modulo, search and lift agree".into())
}

fn log_example() -> Result<String, String> {
    let r = ring(&["x", "y"]);
    let f = p("x^4+y^5+x*y^4", &r)?;
    let log = dmod::sannfs_log(&r, &f, &opts()).map_err(err)?;
    let printed = ps(
        &[
            "4*x^2*Dx+5*x*Dx*y+3*x*y*Dy-16*x*s+4*y^2*Dy-20*y*s",
            "16*x*Dx*y^2-125*x*Dx*y-4*x^2*Dy+4*Dx*y^3+5*x*y*Dy+12*y^3*Dy-100*y^2*Dy-64*y^2*s+500*y*s",
        ],
        &log.algebra,
    )?;
    equal(&log.algebra, &log.gens.gens, &printed)?;
    let k2 = dmod::ann_upto_k(&r, &f, 2, &opts()).map_err(err)?;
    let full = dmod::sannfs_bm(&r, &[f], &opts()).map_err(err)?;
    equal(&full.algebra, &k2.gens.gens, &full.gens.gens)?;
    Ok("order 1 matches; order 2 is the full annihilator".into())
}

fn falpha_example() -> Result<String, String> {
    let r = ring(&["x"]);
    let alpha = Rational::new((-1).into(), 2.into());
    let gb = dmod::ann_falpha(&r, &p("x", &r)?, &alpha, &opts()).map_err(err)?;
    let d = weyl(r.names()).map_err(err)?;
    equal(&d, &gb.gens, &ps(&["x*Dx+1/2"], &d)?)?;
    Ok("<x*Dx+1/2>".into())
}

fn global_example() -> Result<String, String> {
    let r = ring(&["x", "y"]);
    let b = dmod::bfct(&r, &p("(x^3-y^2)*(3*x-2*y-1)*(x+2*y)", &r)?, None, &opts()).map_err(err)?;
    roots_are(&b, &[(-2, 3, 1), (-5, 8, 1), (-3, 4, 1), (-7, 8, 1), (-1, 1, 2), (-4, 3, 1), (-5, 4, 1), (-9, 8, 1), (-11, 8, 1)])
}

fn tangent_bundle() -> Result<String, String> {
    let r = ring(&["x0", "x1", "y0", "y1"]);
    let v = dmod::bfct_var(&r, &ps(&["x0^2+y0^3", "2*x0*x1+3*y0^2*y1"], &r)?, None, &opts()).map_err(err)?;
    let a = &v.annihilator.algebra;
    let gb = &v.annihilator.gens.gens;
    if !reduces_to_zero(a, &p("s12*s21-s11*s22-s11", a)?, gb) {
        return Err("s12*s21-s11*s22-s11 is not in the annihilator".into());
    }
    let dim = lt_dimension_of(gb, a.nvars());
    if dim != 6 {
        return Err(format!("dimension {dim}"));
    }
    let roots = roots_are(&v.b_z, &[(-1, 1, 2), (-1, 3, 2), (-2, 3, 2), (-1, 2, 1), (-5, 6, 1), (-7, 6, 1)])?;
    Ok(format!("{roots}; {} generators", gb.len()))
}

/// Runs every case (stretch cases only when asked) on separate threads and reports in corpus order.
pub fn verify(stretch: bool, base: &Report) -> Report {
    let results: Vec<CaseResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = CASES
            .iter()
            .map(|c| {
                scope.spawn(move || {
                    if c.stretch && !stretch {
                        return CaseResult { name: c.name.into(), passed: true, skipped: true, detail: "stretch".into() };
                    }
                    let res = (c.check)();
                    let (passed, detail) = match res {
                        Ok(d) => (true, d),
                        Err(d) => (false, d),
                    };
                    CaseResult { name: c.name.into(), passed, skipped: false, detail }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("corpus case panicked")).collect()
    });
    let mut rep = base.clone();
    for r in results {
        rep.case(r);
    }
    rep
}
