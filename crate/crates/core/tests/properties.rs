//! Invariants over random inputs.

mod common;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use common::*;
use dmod_core::galgebra::{dehomogenize, homogenize_weighted, weyl, weyl_homog};
use dmod_core::groebner::{buchberger, reduces_to_zero, verify_gb, GbOptions};
use dmod_core::polyarith::{unipoly_bs_transform, unipoly_rational_roots, ExpVec, MonOrder, UniPoly};
use dmod_core::text::{parse_poly, render_poly};
use dmod_core::{Algebra, Rational};
use proptest::prelude::*;

fn orders(n: usize) -> Vec<MonOrder> {
    let half: Vec<usize> = (0..n / 2).collect();
    let rest: Vec<usize> = (n / 2..n).collect();
    vec![
        MonOrder::DegRevLex,
        MonOrder::Lex,
        MonOrder::weighted((1..=n as i64).collect(), MonOrder::DegRevLex),
        MonOrder::elimination(n, &[0], MonOrder::DegRevLex),
        MonOrder::Block(vec![(half, MonOrder::DegRevLex), (rest, MonOrder::Lex)]),
    ]
}

fn exp(n: usize) -> impl Strategy<Value = ExpVec> {
    prop::collection::vec(0u16..4, n).prop_map(|v| ExpVec::from_slice(&v))
}

fn weyl2() -> Algebra {
    weyl(&names(&["x", "y"])).unwrap()
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn orders_are_total_multiplicative_and_global(a in exp(4), b in exp(4), c in exp(4)) {
        let r = ring(&["a", "b", "c", "d"]);
        for kind in orders(4) {
            let alg = r.with_order(kind.clone()).unwrap();
            let ord = alg.order();
            let ab = ord.cmp_exp(&a, &b);
            prop_assert_eq!(ab, ord.cmp_exp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ord.cmp_exp(&a.add(&c), &b.add(&c)), ab, "{:?}", kind);
            prop_assert_ne!(ord.cmp_exp(&a.add(&c), &a), Ordering::Less);
        }
    }

    #[test]
    fn weyl_product_is_associative(p in raw_poly(4, 3, 3), q in raw_poly(4, 3, 3), r in raw_poly(4, 2, 3)) {
        let d = weyl2();
        let (p, q, r) = (from_raw(&d, &p), from_raw(&d, &q), from_raw(&d, &r));
        prop_assert_eq!(d.star_mul(&d.star_mul(&p, &q), &r), d.star_mul(&p, &d.star_mul(&q, &r)));
    }

    #[test]
    fn homogenization_round_trips(raw in raw_poly(4, 4, 4)) {
        let d = weyl2();
        let h = weyl_homog(&names(&["x", "y"]), &[1, 1], &[1, 1]).unwrap();
        let p = from_raw(&d, &raw);
        let hp = homogenize_weighted(&d, &h, &p, &[1, 1], &[1, 1]).unwrap();
        let degs: std::collections::BTreeSet<u32> = hp.terms().iter().map(|t| t.exp.degree()).collect();
        prop_assert!(degs.len() <= 1);
        prop_assert_eq!(dehomogenize(&h, &d, &hp).unwrap(), p);
    }

    #[test]
    fn bs_transform_is_an_involution(rs in prop::collection::btree_map(small_rational(), 1u32..3, 1..4)) {
        let b = UniPoly::from_roots(rs.iter(), "s");
        let t = unipoly_bs_transform(&b).unwrap();
        prop_assert_eq!(unipoly_bs_transform(&t).unwrap(), b.monic());
        // Roots move by r -> -r - 1.
        let moved: BTreeMap<Rational, u32> = rs.iter().map(|(r, m)| (-r.clone() - rat(1, 1), *m)).collect();
        prop_assert_eq!(unipoly_rational_roots(&t).unwrap().roots, moved);
    }

    #[test]
    fn rational_roots_are_recovered(rs in prop::collection::btree_map(small_rational(), 1u32..4, 0..4), extra in 0i64..3) {
        let mut b = UniPoly::from_roots(rs.iter(), "s");
        // An irreducible quadratic stays in the remainder.
        let quad = UniPoly::new(vec![rat(2 + extra, 1), rat(0, 1), rat(1, 1)], "s");
        b = b.mul(&quad);
        let split = unipoly_rational_roots(&b).unwrap();
        prop_assert_eq!(split.roots, rs);
        prop_assert_eq!(split.remainder, quad);
    }

    #[test]
    fn render_then_parse_is_identity(raw in raw_poly(4, 4, 5)) {
        let d = weyl2();
        let p = from_raw(&d, &raw);
        prop_assert_eq!(parse_poly(&render_poly(&p, &d), &d).unwrap(), p);
    }

    #[test]
    fn weyl_bases_verify(a in raw_poly(4, 2, 3), b in raw_poly(4, 2, 3)) {
        let d = weyl2();
        let gens = vec![from_raw(&d, &a), from_raw(&d, &b)];
        let opts = GbOptions { degree_cap: Some(12), ..GbOptions::default() };
        if let Ok(gb) = buchberger(&d, &gens, &opts) {
            prop_assert!(verify_gb(&d, &gb.gens, &gens));
            for g in &gens {
                prop_assert!(reduces_to_zero(&d, g, &gb.gens));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn commutative_engine_matches_naive_buchberger(gens in prop::collection::vec(raw_poly(3, 3, 3), 2..=3)) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<_> = gens.iter().map(|g| from_raw(&r, g)).collect();
        let mut got = buchberger(&r, &gens, &GbOptions::default()).unwrap().gens;
        sort_by_lm(&r, &mut got);
        prop_assert_eq!(got, naive_commutative_gb(&r, &gens));
    }

    #[test]
    fn criteria_do_not_change_the_reduced_basis(a in raw_poly(4, 2, 3), b in raw_poly(4, 2, 3)) {
        let d = weyl2();
        let gens = vec![from_raw(&d, &a), from_raw(&d, &b)];
        let on = GbOptions { degree_cap: Some(12), ..GbOptions::default() };
        let off = GbOptions { criteria: false, ..on.clone() };
        if let (Ok(x), Ok(y)) = (buchberger(&d, &gens, &on), buchberger(&d, &gens, &off)) {
            prop_assert_eq!(x.gens, y.gens);
        }
    }
}
