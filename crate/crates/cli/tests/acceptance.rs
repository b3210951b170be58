//! Acceptance gate: runs every criterion at its stated budget and prints one
//! line per criterion. Stretch items run by default; `DMOD_STRETCH=0` skips them.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use common::*;
use proptest::prelude::*;
use dmod_core::dmod::*;
use dmod_core::galgebra::{weyl, PresetKind};
use dmod_core::groebner::{buchberger, lt_dimension_of, reduces_to_zero, GbOptions};
use dmod_core::polyarith::{ExpVec, UniPoly};
use dmod_core::{Algebra, DmodError, OpPoly, Rational};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// An annihilator computed somewhere in the run, replayed against the action oracle in criterion 10.
struct Computed {
    label: String,
    alg: Algebra,
    gens: Vec<OpPoly>,
    ring: Algebra,
    fs: Vec<OpPoly>,
    values: Option<Vec<Rational>>,
}

static COMPUTED: Mutex<Vec<Computed>> = Mutex::new(Vec::new());

fn record(label: &str, alg: &Algebra, gens: &[OpPoly], ring: &Algebra, fs: &[OpPoly], values: Option<Vec<Rational>>) {
    COMPUTED.lock().unwrap().push(Computed {
        label: label.into(),
        alg: alg.clone(),
        gens: gens.to_vec(),
        ring: ring.clone(),
        fs: fs.to_vec(),
        values,
    });
}

fn record_ann(label: &str, ann: &SParamAnnihilator) {
    record(label, &ann.algebra, &ann.gens.gens, &ann.ring, &ann.fs, None);
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn stretch() -> bool {
    std::env::var("DMOD_STRETCH").map_or(true, |v| v != "0")
}

fn opts() -> DmodOptions {
    DmodOptions::default()
}

fn fmt_roots(b: &dmod_core::polyarith::BFunction) -> String {
    b.roots.iter().map(|(r, m)| format!("({r}, {m})")).collect::<Vec<_>>().join(" ")
}

fn exsannfs() -> Outcome {
    let r = ring(&["x", "y"]);
    let f = poly("x^3+y^2+x*y^2", &r);
    let ann = sannfs_bm(&r, &[f], &opts()).map_err(|e| e.to_string())?;
    let a = &ann.algebra;
    let printed = polys(
        &[
            "2*x*y*Dx-3*x^2*Dy-y^2*Dy+2*y*Dx",
            "2*x^2*Dx+2*x*y*Dy+2*x*Dx+3*y*Dy-6*x*s-6*s",
            "x^2*y*Dy+y^3*Dy-2*x^2*Dx-3*x*y*Dy-2*y^2*s+6*x*s",
            "x^3*Dy+x*y^2*Dy+y^2*Dy-2*x*y*s-2*y*s",
            "2*y^3*Dx*Dy+3*x^3*Dy^2+x*y^2*Dy^2-4*x^2*Dx^2-8*x*y*Dx*Dy-2*x^2*Dx-4*y^2*Dx*s+6*x*y*Dy+12*x*Dx*s-10*x*Dx-6*y*Dy+12*s",
        ],
        a,
    );
    record_ann("Ann((x^3+y^2+x*y^2)^s)", &ann);
    ensure(same_ideal(a, &ann.gens.gens, &printed), "ideal differs from the printed basis")?;
    Ok(format!("{} generators, ideal-equal to the printed basis", ann.gens.len()))
}

fn two_xy() -> Outcome {
    let r = ring(&["x", "y"]);
    let f = poly("2*x*y", &r);
    let want = roots(&[(-1, 1, 2)]);
    let b1 = bfct(&r, &f, None, &opts()).map_err(|e| e.to_string())?;
    let b2 = bfct_ann(&r, &f, &opts()).map_err(|e| e.to_string())?;
    ensure(b1.roots == want, format!("bfct roots {}", fmt_roots(&b1)))?;
    ensure(b2.roots == want, format!("bfct_ann roots {}", fmt_roots(&b2)))?;
    let ann = sannfs_bm(&r, &[f], &opts()).map_err(|e| e.to_string())?;
    record_ann("Ann((2xy)^s)", &ann);
    let a = &ann.algebra;
    ensure(same_ideal(a, &ann.gens.gens, &polys(&["y*Dy-s", "x*Dx-s"], a)), "annihilator differs")?;
    Ok("roots (-1, 2) by both methods; Ann = <y*Dy-s, x*Dx-s>".into())
}

fn hyperplane_arrangement() -> Outcome {
    let r = ring(&["x", "y", "z"]);
    let f = poly("x*y*z*(z-y)*(y+z)", &r);
    let b = bfct(&r, &f, None, &opts()).map_err(|e| e.to_string())?;
    let want = roots(&[(-1, 1, 3), (-1, 2, 1), (-3, 4, 1), (-5, 4, 1), (-3, 2, 1)]);
    ensure(b.roots == want && b.remainder.is_one(), format!("roots {}", fmt_roots(&b)))?;
    Ok(format!("roots {}", fmt_roots(&b)))
}

fn ann_of_polynomial() -> Outcome {
    let r = ring(&["x", "y"]);
    let g = poly("2*x*y", &r);
    let gb = ann_poly(&r, &g, &opts()).map_err(|e| e.to_string())?;
    let d = weyl(&names(&["x", "y"])).unwrap();
    record("Ann(2xy)", &d, &gb.gens, &r, &[g], Some(vec![rat(1, 1)]));
    ensure(same_ideal(&d, &gb.gens, &polys(&["Dy^2", "y*Dy-1", "Dx^2", "x*Dx-1"], &d)), "annihilator differs")?;
    Ok("Ann(2xy) = <Dy^2, y*Dy-1, Dx^2, x*Dx-1>".into())
}

fn ann_of_rational() -> Outcome {
    let r = ring(&["x", "y"]);
    let (g, f) = (poly("2*x*y", &r), poly("x^2-y^3", &r));
    let gb = ann_rat(&r, &g, &f, &opts()).map_err(|e| e.to_string())?;
    let d = weyl(&names(&["x", "y"])).unwrap();
    record("Ann(2xy/(x^2-y^3))", &d, &gb.gens, &r, &[g, f], Some(vec![rat(1, 1), rat(-1, 1)]));
    let printed = polys(
        &[
            "3*x*Dx+2*y*Dy+1",
            "y^3*Dy^2-x^2*Dy^2+6*y^2*Dy+6*y",
            "9*y^2*Dx^2*Dy-4*y*Dy^3+27*y*Dx^2+2*Dy^2",
            "y^4*Dy-x^2*y*Dy+2*y^3+x^2",
            "9*y^3*Dx^2-4*y^2*Dy^2+10*y*Dy-10",
        ],
        &d,
    );
    ensure(same_ideal(&d, &gb.gens, &printed), "annihilator differs from the printed basis")?;
    Ok(format!("{} generators, ideal-equal to the printed basis", gb.len()))
}

fn bernstein_operators() -> Outcome {
    let r = ring(&["x"]);
    let f = poly("x^2-x", &r);
    let b = bfct_ann(&r, &f, &opts()).map_err(|e| e.to_string())?;
    ensure(b.poly == UniPoly::from_roots(&roots(&[(-1, 1, 1)]), "s"), format!("b = {}", b.poly))?;
    let ann = sannfs_bm(&r, &[f], &opts()).map_err(|e| e.to_string())?;
    record_ann("Ann((x^2-x)^s)", &ann);
    let expect = bernstein_operator_nf(&ann, &poly("(2*x-1)*Dx-4*(s+1)", &ann.algebra), &opts()).map_err(|e| e.to_string())?;
    for m in [OperatorMethod::Modulo, OperatorMethod::Search, OperatorMethod::Lift] {
        let p = bernstein_operator(&ann, &b, m, &opts()).map_err(|e| format!("{m:?}: {e}"))?.operator.unwrap();
        let nf = bernstein_operator_nf(&ann, &p, &opts()).map_err(|e| e.to_string())?;
        ensure(functional_identity_holds(&ann, &nf, &b.poly).unwrap(), format!("{m:?}: functional identity fails"))?;
        ensure(nf == expect, format!("{m:?}: operator not congruent to (2x-1)Dx-4(s+1)"))?;
    }
    Ok("b = s+1; modulo, search and lift agree with (2x-1)*Dx-4*(s+1)".into())
}

fn logarithmic() -> Outcome {
    let r = ring(&["x", "y"]);
    let f = poly("x^4+y^5+x*y^4", &r);
    let log = sannfs_log(&r, &f, &opts()).map_err(|e| e.to_string())?;
    record_ann("Ann^(1)((x^4+y^5+x*y^4)^s)", &log);
    let a = &log.algebra;
    let printed = polys(
        &[
            "4*x^2*Dx+5*x*Dx*y+3*x*y*Dy-16*x*s+4*y^2*Dy-20*y*s",
            "16*x*Dx*y^2-125*x*Dx*y-4*x^2*Dy+4*Dx*y^3+5*x*y*Dy+12*y^3*Dy-100*y^2*Dy-64*y^2*s+500*y*s",
        ],
        a,
    );
    ensure(same_ideal(a, &log.gens.gens, &printed), "Ann^(1) differs from the printed generators")?;
    let k2 = ann_upto_k(&r, &f, 2, &opts()).map_err(|e| e.to_string())?;
    record_ann("Ann^(2)((x^4+y^5+x*y^4)^s)", &k2);
    let full = sannfs_bm(&r, &[f], &opts()).map_err(|e| e.to_string())?;
    record_ann("Ann((x^4+y^5+x*y^4)^s)", &full);
    ensure(same_ideal(a, &k2.gens.gens, &full.gens.gens), "Ann^(2) differs from Ann")?;
    let strict = full.gens.gens.iter().any(|g| !reduces_to_zero(a, g, &log.gens.gens));
    ensure(strict, "Ann^(1) unexpectedly equals Ann")?;
    Ok("Ann^(1) matches the printed generators; Ann^(2) = Ann".into())
}

fn global_bfunction() -> Outcome {
    let r = ring(&["x", "y"]);
    let f = poly("(x^3-y^2)*(3*x-2*y-1)*(x+2*y)", &r);
    let b = bfct(&r, &f, None, &opts()).map_err(|e| e.to_string())?;
    let want = roots(&[
        (-2, 3, 1),
        (-5, 8, 1),
        (-3, 4, 1),
        (-7, 8, 1),
        (-1, 1, 2),
        (-4, 3, 1),
        (-5, 4, 1),
        (-9, 8, 1),
        (-11, 8, 1),
    ]);
    ensure(b.roots == want && b.remainder.is_one(), format!("roots {}", fmt_roots(&b)))?;
    Ok(format!("roots {}", fmt_roots(&b)))
}

const SMALL_CORPUS: &[(&[&str], &str)] = &[
    (&["x"], "x"),
    (&["x"], "x^2-x"),
    (&["x", "y"], "2*x*y"),
    (&["x", "y"], "x^2-y^3"),
    (&["x", "y"], "x^3+y^2+x*y^2"),
    (&["x", "y"], "x*y*(x+y)"),
];

fn variety_consistency() -> Outcome {
    for (vars, text) in SMALL_CORPUS {
        let r = ring(vars);
        let f = poly(text, &r);
        let v = bfct_var(&r, std::slice::from_ref(&f), None, &opts()).map_err(|e| format!("{text}: {e}"))?;
        record_ann(&format!("Ann_<S>(({text})^s)"), &v.annihilator);
        let b = bfct_ann(&r, &f, &opts()).map_err(|e| format!("{text}: {e}"))?;
        ensure(v.b.poly == b.poly, format!("{text}: bfct_var {} vs bfct_ann {}", v.b.poly, b.poly))?;
        ensure(v.codim == 1 && v.b_z.poly == b.poly, format!("{text}: shift by codimension 1 is not the identity"))?;
    }
    Ok(format!("bfct_var = bfct_ann on {} inputs", SMALL_CORPUS.len()))
}

fn tangent_bundle() -> Outcome {
    let r = ring(&["x0", "x1", "y0", "y1"]);
    let fs = polys(&["x0^2+y0^3", "2*x0*x1+3*y0^2*y1"], &r);
    let v = bfct_var(&r, &fs, None, &opts()).map_err(|e| e.to_string())?;
    let want = roots(&[(-1, 1, 2), (-1, 3, 2), (-2, 3, 2), (-1, 2, 1), (-5, 6, 1), (-7, 6, 1)]);
    let a = &v.annihilator.algebra;
    let gb = &v.annihilator.gens.gens;
    let dim = lt_dimension_of(gb, a.nvars());
    let rel = reduces_to_zero(a, &poly("s12*s21-s11*s22-s11", a), gb);
    let mut notes = vec![format!("b_TX roots {}", fmt_roots(&v.b_z)), format!("{} generators", gb.len()), format!("lt dimension {dim}")];
    ensure(v.b_z.roots == want, notes.join("; "))?;
    ensure(rel, "s12*s21-s11*s22-s11 does not reduce to 0")?;
    ensure(dim == 6, notes.join("; "))?;
    if gb.len() != 15 {
        notes.push("generator count depends on the ordering".into());
    }
    Ok(notes.join("; "))
}

/// Criterion 10: property suites with fixed seeds.
fn property_suites() -> Outcome {
    let mut lines = Vec::new();
    let runner = |cases: u32| {
        TestRunner::new_with_rng(Config { cases, failure_persistence: None, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    };

    // Briançon-Maisonobe generators commute pairwise.
    let strat = (1usize..=3).prop_flat_map(|n| (Just(n), raw_poly(n, 4, 4)));
    runner(20)
        .run(&strat, |(n, raw)| {
            let vars: Vec<String> = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
            let r = dmod_core::galgebra::commutative(&vars).unwrap();
            let Some(f) = nonconstant(&r, &raw) else { return Ok(()) };
            let (a, gens) = bm_generators(&r, &[f]).unwrap();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    proptest::prop_assert!(a.lie_bracket(&gens[i], &gens[j]).is_zero());
                }
            }
            Ok(())
        })
        .map_err(|e| format!("BM commutators: {e}"))?;
    lines.push("BM commutators (20)");

    // Weyl closed form against rewriting.
    let w = weyl(&names(&["x"])).unwrap();
    for a1 in 0..=6u16 {
        for b1 in 0..=6u16 {
            for a2 in 0..=6u16 {
                for b2 in 0..=6u16 {
                    let got = w.mono_mul(&ExpVec::from_slice(&[a1, b1]), &ExpVec::from_slice(&[a2, b2]));
                    let mut got: Vec<(u16, u16, Rational)> = got.into_iter().map(|(e, c)| (e.get(0), e.get(1), c)).collect();
                    got.sort_by_key(|t| std::cmp::Reverse(t.0));
                    let want: Vec<(u16, u16, Rational)> =
                        weyl_product_closed_form(a1, b1, a2, b2).into_iter().map(|(x, d, c)| (x, d, Rational::from_integer(c))).collect();
                    ensure(got == want, format!("x^{a1}D^{b1} * x^{a2}D^{b2}"))?;
                }
            }
        }
    }
    lines.push("Weyl closed form (exponents <= 6)");

    // Associativity per preset.
    let presets = [
        PresetKind::Commutative(3),
        PresetKind::Weyl(2),
        PresetKind::WeylS(1, 2),
        PresetKind::WeylShift(1, 2),
        PresetKind::WeylHomog(1, vec![1], vec![1]),
        PresetKind::WeylGl(1, 2),
        PresetKind::WeylDtGl(1, 2),
        PresetKind::E(1, 1),
    ];
    for kind in &presets {
        let a: Algebra = dmod_core::galgebra::preset(kind).unwrap();
        let n = a.nvars();
        let strat = (raw_poly(n, 2, 3), raw_poly(n, 2, 3), raw_poly(n, 2, 3));
        runner(100)
            .run(&strat, |(p, q, r)| {
                let (p, q, r) = (from_raw(&a, &p), from_raw(&a, &q), from_raw(&a, &r));
                proptest::prop_assert_eq!(a.star_mul(&a.star_mul(&p, &q), &r), a.star_mul(&p, &a.star_mul(&q, &r)));
                Ok(())
            })
            .map_err(|e| format!("associativity in {kind:?}: {e}"))?;
    }
    lines.push("associativity (100 per preset)");

    // bfct = bfct_ann and check_root on random bivariate polynomials.
    let r2 = ring(&["x", "y"]);
    // Roots of b_f are negative and, for two variables, the only integer root is -1.
    let non_roots = [rat(-2, 1), rat(1, 3)];
    runner(10)
        .run(&raw_poly(2, 4, 3), |raw| {
            let Some(f) = nonconstant(&r2, &raw) else { return Ok(()) };
            let b1 = bfct(&r2, &f, None, &opts()).unwrap();
            let b2 = bfct_ann(&r2, &f, &opts()).unwrap();
            proptest::prop_assert_eq!(&b1.poly, &b2.poly);
            let ann = sannfs_bm(&r2, std::slice::from_ref(&f), &opts()).unwrap();
            record_ann(&format!("Ann(({})^s)", dmod_core::text::render_poly(&f, &r2)), &ann);
            // check_root takes roots of b_f(-s).
            for (r, m) in &b1.roots {
                let alpha = -r.clone();
                proptest::prop_assert!(check_root(&ann, &alpha, &opts()).unwrap(), "root {}", r);
                proptest::prop_assert_eq!(root_multiplicity(&ann, &alpha, &opts()).unwrap(), *m, "root {}", r);
            }
            for r in &non_roots {
                proptest::prop_assert!(!check_root(&ann, &-r.clone(), &opts()).unwrap(), "non-root {}", r);
            }
            Ok(())
        })
        .map_err(|e| format!("bfct/bfct_ann/check_root: {e}"))?;
    lines.push("bfct = bfct_ann and check_root (10)");

    // Criteria on and off give the same reduced basis.
    let off = GbOptions { criteria: false, ..GbOptions::default() };
    for (vars, text) in SMALL_CORPUS {
        let r = ring(vars);
        let f = poly(text, &r);
        let (a, gens) = bm_generators(&r, std::slice::from_ref(&f)).unwrap();
        let (m, mg) = malgrange_ideal(&r, std::slice::from_ref(&f)).unwrap();
        for (alg, g) in [(&a, &gens), (&m, &mg)] {
            let on = buchberger(alg, g, &GbOptions::default()).map_err(|e| e.to_string())?;
            let no = buchberger(alg, g, &off).map_err(|e| e.to_string())?;
            ensure(on.gens == no.gens, format!("{text}: criteria change the reduced basis"))?;
        }
    }
    lines.push("criteria on/off");

    // Commutative Buchberger against the naive oracle.
    let r3 = ring(&["x", "y", "z"]);
    let strat = prop::collection::vec(raw_poly(3, 3, 3), 2..=3);
    runner(25)
        .run(&strat, |raws| {
            let gens: Vec<OpPoly> = raws.iter().map(|raw| from_raw(&r3, raw)).filter(|p| !p.is_zero()).collect();
            if gens.is_empty() {
                return Ok(());
            }
            let mut got = buchberger(&r3, &gens, &GbOptions::default()).unwrap().gens;
            sort_by_lm(&r3, &mut got);
            proptest::prop_assert_eq!(got, naive_commutative_gb(&r3, &gens));
            Ok(())
        })
        .map_err(|e| format!("naive oracle: {e}"))?;
    lines.push("commutative Buchberger vs naive (25)");

    // Every annihilator computed in this run kills its function.
    let computed = COMPUTED.lock().unwrap();
    let mut checked = 0;
    for c in computed.iter() {
        for g in &c.gens {
            ensure(kills(&c.alg, g, &c.ring, &c.fs, c.values.as_deref()), format!("{}: generator does not annihilate", c.label))?;
            checked += 1;
        }
    }
    lines.push("action oracle");
    Ok(format!("{}; {checked} generators from {} annihilators checked", lines.join(", "), computed.len()))
}

fn dmod_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dmod")).args(args).output().expect("run dmod");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned(), String::from_utf8_lossy(&out.stderr).into_owned())
}

fn unsupported_branch() -> Outcome {
    const MARK: &str = "requires SST Alg. 5.3.15";
    let mut notes = Vec::new();
    // The window [mu+1, -1] for x^5+y^5+x^2*y^3 is empty (mu = -1); every integer alpha is supported.
    let r = ring(&["x", "y"]);
    let f = poly("x^5+y^5+x^2*y^3", &r);
    let ann = sannfs_bm(&r, std::slice::from_ref(&f), &opts()).map_err(|e| e.to_string())?;
    let mu = min_integer_root(&ann, &opts()).map_err(|e| e.to_string())?;
    if mu < -1 {
        let alpha = (mu + 1).to_string();
        let (code, _, err) = dmod_cli(&["ann-falpha", "--ring", "x,y", "--poly", "x^5+y^5+x^2*y^3", "--alpha", &alpha]);
        ensure(code == 2 && err.contains(MARK), format!("x^5+y^5+x^2*y^3, alpha {alpha}: exit {code}"))?;
        notes.push(format!("x^5+y^5+x^2*y^3 alpha={alpha} -> exit 2"));
    } else {
        let (code, _, err) = dmod_cli(&["ann-falpha", "--ring", "x,y", "--poly", "x^5+y^5+x^2*y^3", "--alpha", "-1"]);
        ensure(code == 0, format!("x^5+y^5+x^2*y^3, alpha -1 should be supported (mu = {mu}): exit {code} {err}"))?;
        notes.push(format!("x^5+y^5+x^2*y^3 has mu = {mu}, window empty, alpha=-1 -> exit 0"));
    }
    // A window that is not empty: mu = -2 for the quadric in four variables.
    let quadric = "x^2+y^2+z^2+w^2";
    let (code, _, err) = dmod_cli(&["ann-falpha", "--ring", "x,y,z,w", "--poly", quadric, "--alpha", "-1"]);
    ensure(code == 2 && err.contains(MARK), format!("ann-falpha on the quadric: exit {code}, stderr {err}"))?;
    notes.push("quadric alpha=-1 -> exit 2".into());
    let (code, _, err) = dmod_cli(&["ann-rat", "--ring", "x,y,z,w", "--poly", "x", "--poly", quadric]);
    ensure(code == 2 && err.contains(MARK), format!("ann-rat over the quadric: exit {code}, stderr {err}"))?;
    notes.push("ann-rat x/quadric -> exit 2".into());
    let r4 = ring(&["x", "y", "z", "w"]);
    let e = ann_falpha(&r4, &poly(quadric, &r4), &rat(-1, 1), &opts()).unwrap_err();
    ensure(matches!(e, DmodError::Unsupported(_)) && e.reason() == "unsupported", format!("library error {e}"))?;
    Ok(notes.join("; "))
}

struct Criterion {
    id: &'static str,
    budget: Duration,
    stretch: bool,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: "1", budget: secs(5), stretch: false, run: exsannfs },
        Criterion { id: "2", budget: secs(2), stretch: false, run: two_xy },
        Criterion { id: "3", budget: secs(120), stretch: false, run: hyperplane_arrangement },
        Criterion { id: "4", budget: secs(2), stretch: false, run: ann_of_polynomial },
        Criterion { id: "5", budget: secs(30), stretch: false, run: ann_of_rational },
        Criterion { id: "6", budget: secs(5), stretch: false, run: bernstein_operators },
        Criterion { id: "7", budget: secs(60), stretch: false, run: logarithmic },
        Criterion { id: "8", budget: secs(30 * 60), stretch: true, run: global_bfunction },
        Criterion { id: "9", budget: secs(60), stretch: false, run: variety_consistency },
        Criterion { id: "9s", budget: secs(60 * 60), stretch: true, run: tangent_bundle },
        Criterion { id: "10", budget: secs(10 * 60), stretch: false, run: property_suites },
        Criterion { id: "11", budget: secs(60), stretch: false, run: unsupported_branch },
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == c.id) {
            continue;
        }
        if c.stretch && !stretch() {
            println!("criterion {:<3} SKIP  stretch (DMOD_STRETCH=0)", c.id);
            continue;
        }
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        let took = start.elapsed();
        let res = match res {
            Ok(msg) if took > c.budget => Err(format!("over budget ({:.1?} > {:?}): {msg}", took, c.budget)),
            other => other,
        };
        match res {
            Ok(msg) => println!("criterion {:<3} PASS  {:>8.2?}  {msg}", c.id, took),
            Err(msg) => {
                failed += 1;
                println!("criterion {:<3} FAIL  {:>8.2?}  {msg}", c.id, took);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
