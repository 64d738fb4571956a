use proptest::prelude::*;

use clifford_factor::catalog::{default_spec, routes, spec};
use clifford_factor::clifford::{conjugate_along, parse_multivector, pseudoscalar, split_along, GeneratorList};
use clifford_factor::repmap::{element_charpoly, element_inverse, eval_poly_mv, reconstruct, RepImage};
use clifford_factor::rings::{mat_inverse, mat_mul, ring_embed_real};
use clifford_factor::{Multivector, Rational, Ring, Signature};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn signature(max_n: u32) -> impl Strategy<Value = Signature> {
    (1..=max_n).prop_flat_map(|n| (0..=n).prop_map(move |p| Signature::of(p, n - p)))
}

fn element(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(rational(), sig.dim())
        .prop_map(move |c| Multivector::from_terms(sig, c.into_iter().enumerate().map(|(m, x)| (m as u32, x))).unwrap())
}

fn sparse(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::vec((0..sig.dim() as u32, rational()), 0..6)
        .prop_map(move |t| Multivector::from_terms(sig, t).unwrap())
}

fn triple(max_n: u32) -> impl Strategy<Value = (Multivector, Multivector, Multivector)> {
    signature(max_n).prop_flat_map(|s| (element(s), element(s), element(s)))
}

fn pair(max_n: u32) -> impl Strategy<Value = (Multivector, Multivector)> {
    signature(max_n).prop_flat_map(|s| (element(s), element(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative((a, b, c) in triple(5)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn product_distributes((a, b, c) in triple(5)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn generators_anticommute(s in signature(8)) {
        for i in 1..=s.n() {
            let gi = Multivector::generator(s, i);
            let sq = Rational::from_int(s.generator_square(i) as i64);
            prop_assert_eq!(&gi * &gi, Multivector::scalar(s, sq));
            for j in (i + 1)..=s.n() {
                let gj = Multivector::generator(s, j);
                prop_assert_eq!(&gi * &gj, -&(&gj * &gi));
            }
        }
    }

    #[test]
    fn odd_pseudoscalar_is_central(a in signature(7).prop_filter("odd n", |s| s.n() % 2 == 1).prop_flat_map(element)) {
        let v = pseudoscalar(a.signature());
        prop_assert_eq!(&a * &v, &v * &a);
    }

    #[test]
    fn printer_parser_round_trip(a in signature(8).prop_flat_map(sparse)) {
        let text = a.to_string();
        prop_assert_eq!(parse_multivector(a.signature(), &text).unwrap(), a);
    }

    #[test]
    fn split_rejoins_and_conjugation_is_an_involution((a, b) in Just(Signature::of(3, 0)).prop_flat_map(|s| (element(s), element(s)))) {
        let s = a.signature();
        let sub = GeneratorList::new(s, vec![Multivector::generator(s, 1), Multivector::generator(s, 2)], vec![1, 1]).unwrap();
        let u = parse_multivector(s, "e123").unwrap();
        let (a0, a1) = split_along(&a, &u, &sub).unwrap();
        prop_assert_eq!(&a0 + &(&a1 * &u), a.clone());
        let bar = |x: &Multivector| conjugate_along(x, &u, &sub).unwrap();
        prop_assert_eq!(bar(&bar(&a)), a.clone());
        prop_assert_eq!(bar(&(&a * &b)), &bar(&a) * &bar(&b));
    }

    #[test]
    fn representation_is_multiplicative((a, b) in pair(5)) {
        for r in routes(a.signature()) {
            let s = spec(a.signature(), r).unwrap();
            let (pa, pb) = (s.represent(&a).unwrap(), s.represent(&b).unwrap());
            prop_assert_eq!(s.represent(&(&a * &b)).unwrap(), mat_mul(&pa, &pb).unwrap());
        }
    }

    #[test]
    fn real_embedding_is_multiplicative((a, b) in pair(4)) {
        let s = default_spec(a.signature()).unwrap();
        let (pa, pb) = (s.represent(&a).unwrap(), s.represent(&b).unwrap());
        let lhs = ring_embed_real(&mat_mul(&pa, &pb).unwrap());
        let rhs = mat_mul(&ring_embed_real(&pa), &ring_embed_real(&pb)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reconstruct_inverts_represent(a in signature(5).prop_flat_map(element)) {
        for r in routes(a.signature()) {
            let s = spec(a.signature(), r).unwrap();
            let img = RepImage { sig: s.sig, route: s.route, value: s.represent(&a).unwrap() };
            prop_assert_eq!(reconstruct(&img).unwrap(), a.clone());
        }
    }

    #[test]
    fn inverse_is_two_sided(a in signature(4).prop_flat_map(element)) {
        let one = Multivector::one(a.signature());
        if let Some(b) = element_inverse(&a, None).unwrap() {
            prop_assert_eq!(&a * &b, one.clone());
            prop_assert_eq!(&b * &a, one);
        }
    }

    #[test]
    fn conjugate_elements_have_similar_images((a, x) in pair(4)) {
        let Some(xi) = element_inverse(&x, None).unwrap() else { return Ok(()) };
        let b = &(&x * &a) * &xi;
        let s = default_spec(a.signature()).unwrap();
        let px = s.represent(&x).unwrap();
        let lhs = mat_mul(&mat_mul(&px, &s.represent(&a).unwrap()).unwrap(), &mat_inverse(&px).unwrap()).unwrap();
        prop_assert_eq!(lhs, s.represent(&b).unwrap());
    }

    #[test]
    fn cayley_hamilton_over_real_targets(a in signature(4).prop_flat_map(element)) {
        let s = default_spec(a.signature()).unwrap();
        prop_assume!(matches!(s.ring, Ring::R | Ring::R2));
        let p = element_charpoly(&a, None).unwrap();
        prop_assert!(eval_poly_mv(&p, &a).is_zero());
    }

    #[test]
    fn rational_field_laws(x in rational(), y in rational(), z in rational()) {
        prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        if let Some(r) = y.recip() {
            prop_assert_eq!(&(&x * &y) * &r, x);
        }
    }
}
