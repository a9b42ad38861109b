//! Property tests for the algebraic laws every operation must satisfy,
//! over both ground fields.

use proptest::prelude::*;

use labatie::bipoly::BiPoly;
use labatie::field::{FieldElement, FieldSpec};
use labatie::parser::{format_poly, parse_poly_str};
use labatie::unipoly::{gcd_monic, supported_part_degree, UniPoly};

fn field_specs() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::rationals()),
        prop_oneof![Just(5u64), Just(7), Just(11), Just(13)]
            .prop_map(|p| FieldSpec::prime_field(p).unwrap()),
    ]
}

fn raw_scalar(spec: FieldSpec) -> impl Strategy<Value = FieldElement> {
    ((-6i64..=6), (1i64..=3)).prop_map(move |(n, d)| spec.ratio(n, d))
}

fn raw_unipoly(spec: FieldSpec, max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(raw_scalar(spec), 0..=max_len)
        .prop_map(move |cs| UniPoly::new(cs, spec))
}

fn raw_bipoly(spec: FieldSpec, max_deg_y: usize, max_coeff_len: usize) -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(raw_unipoly(spec, max_coeff_len), 0..=max_deg_y + 1)
        .prop_map(move |cs| BiPoly::new(cs, spec))
}

proptest! {
    // divmod reconstruction: A = Q*B + R with R = 0 or deg R < deg B.
    #[test]
    fn divmod_reconstructs((a, b) in field_specs().prop_flat_map(|s| (raw_unipoly(s, 13), raw_unipoly(s, 13)))) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&(&q * &b) + &r), &a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    // gcd divides both operands exactly, is monic, and scales:
    // gcd(A*C, B*C) = monic(C) * gcd(A, B).
    #[test]
    fn gcd_divides_and_scales((a, b, c) in field_specs().prop_flat_map(|s| (raw_unipoly(s, 7), raw_unipoly(s, 7), raw_unipoly(s, 5)))) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = gcd_monic(&a, &b).unwrap();
        prop_assert!(g.lc().is_one());
        if !a.is_zero() {
            prop_assert!(a.divmod(&g).unwrap().1.is_zero());
        }
        if !b.is_zero() {
            prop_assert!(b.divmod(&g).unwrap().1.is_zero());
        }
        prop_assume!(!c.is_zero());
        let scaled = gcd_monic(&(&a * &c), &(&b * &c)).unwrap();
        prop_assert_eq!(scaled, &c.monic() * &g);
    }

    // p = (x - c)^ord * q with q(c) != 0.
    #[test]
    fn ord_at_deflates((p, c) in field_specs().prop_flat_map(|s| (raw_unipoly(s, 9), raw_scalar(s)))) {
        prop_assume!(!p.is_zero());
        let ord = p.ord_at(&c).unwrap();
        let factor = UniPoly::linear_root(&c).pow(ord as u32);
        let q = p.exact_div(&factor).unwrap();
        prop_assert!(!q.eval(&c).is_zero());
    }

    // Root finding over GF(p) agrees with exhaustive evaluation.
    #[test]
    fn gf_roots_match_exhaustive_scan(p in prop_oneof![Just(5u64), Just(7), Just(11)], cs in prop::collection::vec(-6i64..=6, 1..=9)) {
        let spec = FieldSpec::prime_field(p).unwrap();
        let poly = UniPoly::from_ints(spec, &cs);
        prop_assume!(!poly.is_zero());
        let roots = poly.roots_in_field().unwrap();
        for a in spec.elements().unwrap() {
            let is_root = poly.eval(&a).is_zero();
            let listed = roots.iter().any(|(r, _)| *r == a);
            prop_assert_eq!(is_root, listed);
        }
        for (r, m) in &roots {
            prop_assert_eq!(*m, poly.ord_at(r).unwrap());
        }
    }

    // supported_part_degree sums the multiplicities of the roots of g that
    // h kills, checked against exhaustive root listings for split g.
    #[test]
    fn supported_part_matches_root_listing(p in prop_oneof![Just(5u64), Just(7)], g_roots in prop::collection::vec(0i64..=6, 1..=4), h_roots in prop::collection::vec(0i64..=6, 0..=3)) {
        let spec = FieldSpec::prime_field(p).unwrap();
        let mut g = UniPoly::one(spec);
        for r in &g_roots {
            g = &g * &UniPoly::linear_root(&spec.integer(*r));
        }
        let mut h = UniPoly::one(spec);
        for r in &h_roots {
            h = &h * &UniPoly::linear_root(&spec.integer(*r));
        }
        let expected: usize = g
            .roots_in_field()
            .unwrap()
            .iter()
            .filter(|(a, _)| h.eval(a).is_zero())
            .map(|(_, m)| m)
            .sum();
        prop_assert_eq!(supported_part_degree(&g, &h).unwrap(), expected);
    }

    // u*W = Q*V + R with R = 0 or deg_y R < deg_y V.
    #[test]
    fn pseudo_divide_reconstructs((w, v) in field_specs().prop_flat_map(|s| (raw_bipoly(s, 8, 7), raw_bipoly(s, 8, 7)))) {
        prop_assume!(w.deg_y().unwrap_or(0) >= 1 && v.deg_y().unwrap_or(0) >= 1);
        let (w, v) = if w.deg_y() >= v.deg_y() { (w, v) } else { (v, w) };
        let (u, q, r) = w.pseudo_divide(&v).unwrap();
        prop_assert!(!u.is_zero());
        let lhs = w.mul_unipoly(&u);
        let rhs = &(&q * &v) + &r;
        prop_assert_eq!(lhs, rhs);
        prop_assert!(r.is_zero() || r.deg_y() < v.deg_y());
    }

    // content * primitive part reconstructs, and the primitive part is
    // primitive.
    #[test]
    fn content_times_primitive_reconstructs(w in field_specs().prop_flat_map(|s| raw_bipoly(s, 5, 5))) {
        prop_assume!(!w.is_zero());
        let content = w.y_content().unwrap();
        let primitive = w.y_primitive_part().unwrap();
        prop_assert_eq!(&primitive.mul_unipoly(&content), &w);
        prop_assert!(primitive.y_content().unwrap().is_one());
    }

    // Evaluating the section at b equals evaluating the surface at (a, b),
    // and sections of y-primitive polynomials never vanish identically.
    #[test]
    fn sections_commute_with_evaluation((w, a, b) in field_specs().prop_flat_map(|s| (raw_bipoly(s, 5, 5), raw_scalar(s), raw_scalar(s)))) {
        prop_assume!(!w.is_zero());
        let section = w.section_at(&a).unwrap();
        prop_assert_eq!(section.eval(&b), w.eval_point(&a, &b));
        let primitive = w.y_primitive_part().unwrap();
        prop_assert!(!primitive.section_at(&a).unwrap().is_zero());
    }

    // parse(format(W)) = W.
    #[test]
    fn parse_format_round_trip(w in field_specs().prop_flat_map(|s| raw_bipoly(s, 6, 6))) {
        let text = format_poly(&w);
        let back = parse_poly_str(&text, w.spec()).unwrap();
        prop_assert_eq!(back, w);
    }
}
