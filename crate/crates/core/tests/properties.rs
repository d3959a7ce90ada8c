use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use proptest::prelude::*;

use tamagawa::arith::{
    f11, factor_fp, rational, reduce_mod_f11, BivariateRing, Field, Poly, PolyRing, PrimeField,
    RatFunc, RationalFunctionField, Rationals, Ring,
};
use tamagawa::families::{build_ff_family, function_field};
use tamagawa::literal::parse_element;
use tamagawa::reduction::{minimal_model_at, tate_reduce};
use tamagawa::valuation::{
    newton_polygon, valuation_rational, FunctionFieldPlace, LocalContext, Place, RationalPrime,
};
use tamagawa::weierstrass::{
    hasse_invariant, CurvePoint, Transform, WeierstrassModel, DEFAULT_ORDER_BOUND,
};

fn fp_coeffs(p: u64, max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0..p, 0..=max_len)
}

fn fp_poly(p: u64, c: &[u64]) -> Poly<u64> {
    PolyRing::new(PrimeField::new(p).unwrap()).from_coeffs(c.to_vec())
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| rational(n, d))
}

fn nonzero_ratfunc(p: u64) -> impl Strategy<Value = RatFunc<u64>> {
    (fp_coeffs(p, 6), fp_coeffs(p, 6)).prop_filter_map("nonzero", move |(n, d)| {
        let (n, d) = (fp_poly(p, &n), fp_poly(p, &d));
        if n.is_zero() || d.is_zero() {
            return None;
        }
        function_field(p).unwrap().normalize(&n, &d).ok()
    })
}

fn family_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![5u64, 7, 11])
}

fn sum_over_places(k: &RationalFunctionField<PrimeField>, x: &RatFunc<u64>) -> i64 {
    let p = k.base().modulus();
    let mut total = Place::infinity(p)
        .unwrap()
        .valuation_ratfunc(x)
        .unwrap()
        .unwrap();
    for poly in [x.num(), x.den()] {
        if poly.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (g, _) in factor_fp(k.base(), poly).unwrap().factors {
            let place = Place::finite(p, g).unwrap();
            total += place.degree() as i64 * place.valuation_ratfunc(x).unwrap().unwrap();
        }
    }
    total
}

fn short_model_fp(p: u64, a4: u64, a6: u64) -> WeierstrassModel<PrimeField> {
    WeierstrassModel::possibly_singular(PrimeField::new(p).unwrap(), [0, 0, 0, a4, a6])
}

fn affine_points(model: &WeierstrassModel<PrimeField>) -> Vec<(u64, u64)> {
    let k = model.ring();
    let mut out = Vec::new();
    for x in k.elements() {
        for y in k.elements() {
            if model.contains(&x, &y) {
                out.push((x, y));
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn division_reconstructs(a in fp_coeffs(7, 12), b in fp_coeffs(7, 6)) {
        let ring = PolyRing::new(PrimeField::new(7).unwrap());
        let (a, b) = (ring.from_coeffs(a), ring.from_coeffs(b));
        prop_assume!(!b.is_zero());
        let (q, r) = ring.div_rem(&a, &b).unwrap();
        prop_assert_eq!(ring.add(&ring.mul(&q, &b), &r), a);
        prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
    }

    #[test]
    fn rational_division_reconstructs(
        a in prop::collection::vec(small_rational(), 0..8),
        b in prop::collection::vec(small_rational(), 1..5),
    ) {
        let ring = PolyRing::new(Rationals);
        let (a, b) = (ring.from_coeffs(a), ring.from_coeffs(b));
        prop_assume!(!b.is_zero());
        let (q, r) = ring.div_rem(&a, &b).unwrap();
        prop_assert_eq!(ring.add(&ring.mul(&q, &b), &r), a);
    }

    #[test]
    fn factorization_round_trips(p in family_prime(), c in fp_coeffs(11, 13)) {
        let c: Vec<u64> = c.into_iter().map(|x| x % p).collect();
        let fp = PrimeField::new(p).unwrap();
        let a = fp_poly(p, &c);
        prop_assume!(!a.is_zero());
        let fac = factor_fp(&fp, &a).unwrap();
        prop_assert_eq!(fac.expand(&fp), a);
        for (g, e) in &fac.factors {
            prop_assert!(*e >= 1);
            prop_assert_eq!(factor_fp(&fp, g).unwrap().factors, vec![(g.clone(), 1)]);
        }
    }

    #[test]
    fn ratfunc_field_axioms(x in nonzero_ratfunc(5), y in nonzero_ratfunc(5), z in nonzero_ratfunc(5)) {
        let k = function_field(5).unwrap();
        prop_assert_eq!(k.mul(&k.mul(&x, &y), &z), k.mul(&x, &k.mul(&y, &z)));
        prop_assert_eq!(k.add(&k.add(&x, &y), &z), k.add(&x, &k.add(&y, &z)));
        prop_assert_eq!(k.mul(&x, &k.add(&y, &z)), k.add(&k.mul(&x, &y), &k.mul(&x, &z)));
        prop_assert!(k.is_one(&k.mul(&x, &k.inv(&x).unwrap())));
    }

    #[test]
    fn f11_reduction_is_idempotent_and_kills_the_ideal(
        terms in prop::collection::vec((-9i64..=9, 0u32..5, 0u32..5), 0..6),
        other in prop::collection::vec((-9i64..=9, 0u32..5, 0u32..5), 0..6),
        c in -5i64..=5,
    ) {
        let ring = BivariateRing;
        let h = ring.from_terms(&terms);
        let g = ring.from_terms(&other);
        let rh = reduce_mod_f11(&h);
        prop_assert_eq!(reduce_mod_f11(&rh), rh.clone());
        prop_assert!(ring.is_zero(&reduce_mod_f11(&ring.mul(&f11(), &h))));
        let combo = ring.add(&ring.scale(c, &h), &g);
        let expected = ring.add(&ring.scale(c, &rh), &reduce_mod_f11(&g));
        prop_assert_eq!(reduce_mod_f11(&combo), expected);
    }

    #[test]
    fn product_formula(p in family_prime(), x in nonzero_ratfunc(11)) {
        // Reinterpret the sampled F_11 coefficients in F_p.
        let k = function_field(p).unwrap();
        let r = k.poly_ring();
        let num = r.from_coeffs(x.num().coeffs().iter().map(|c| c % p).collect());
        let den = r.from_coeffs(x.den().coeffs().iter().map(|c| c % p).collect());
        prop_assume!(!num.is_zero() && !den.is_zero());
        let x = k.normalize(&num, &den).unwrap();
        prop_assert_eq!(sum_over_places(&k, &x), 0);
    }

    #[test]
    fn ultrametric_over_q(x in small_rational(), y in small_rational(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let q = Rationals;
        let (vx, vy, vs) = (valuation_rational(&x, p), valuation_rational(&y, p), valuation_rational(&q.add(&x, &y), p));
        if let (Some(a), Some(b)) = (vx, vy) {
            if let Some(s) = vs {
                prop_assert!(s >= a.min(b));
            }
            if a != b {
                prop_assert_eq!(vs, Some(a.min(b)));
            }
            prop_assert_eq!(valuation_rational(&q.mul(&x, &y), p), Some(a + b));
        }
    }

    #[test]
    fn ultrametric_over_function_field(x in nonzero_ratfunc(7), y in nonzero_ratfunc(7), a in 0u64..7) {
        let k = function_field(7).unwrap();
        let place = Place::finite(7, PolyRing::new(*k.base()).from_coeffs(vec![a, 1])).unwrap();
        let ctx = FunctionFieldPlace::new(k.clone(), place).unwrap();
        let vx = ctx.valuation(&x).unwrap().unwrap();
        let vy = ctx.valuation(&y).unwrap().unwrap();
        if let Some(s) = ctx.valuation(&k.add(&x, &y)).unwrap() {
            prop_assert!(s >= vx.min(vy));
            if vx != vy {
                prop_assert_eq!(s, vx.min(vy));
            }
        }
        prop_assert_eq!(ctx.valuation(&k.mul(&x, &y)).unwrap(), Some(vx + vy));
    }

    #[test]
    fn newton_slopes_match_root_valuations(
        roots in prop::collection::vec((-4i64..=4, prop::sample::select(vec![1i64, 2, 3, 4, 6])), 2..=3),
    ) {
        let p = 5u64;
        let q = Rationals;
        let ring = PolyRing::new(q);
        let mut poly = ring.one();
        let mut expected = Vec::new();
        for (v, unit) in &roots {
            let root = q.mul(&rational(*unit, 1), &q.pow_signed(&rational(5, 1), *v).unwrap());
            poly = ring.mul(&poly, &ring.from_coeffs(vec![q.neg(&root), q.one()]));
            expected.push(Ratio::from_integer(*v));
        }
        let points: Vec<(u64, Option<i64>)> = poly
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| (i as u64, valuation_rational(c, p)))
            .collect();
        let polygon = newton_polygon(&points).unwrap();
        let mut got: Vec<Ratio<i64>> = polygon
            .root_valuations()
            .into_iter()
            .flat_map(|(v, n)| std::iter::repeat_n(v, n as usize))
            .collect();
        got.sort();
        expected.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn standard_identities_over_q(a in prop::array::uniform5(small_rational())) {
        let model = WeierstrassModel::possibly_singular(Rationals, a);
        let q = Rationals;
        let inv = model.invariants();
        prop_assert_eq!(q.scale(4, &inv.b8), q.sub(&q.mul(&inv.b2, &inv.b6), &q.square(&inv.b4)));
        prop_assert_eq!(q.scale(1728, &inv.disc), q.sub(&q.pow(&inv.c4, 3), &q.square(&inv.c6)));
    }

    #[test]
    fn standard_identities_over_function_fields(
        p in family_prime(),
        a in prop::array::uniform5(fp_coeffs(5, 4)),
    ) {
        let k = function_field(p).unwrap();
        let a = a.map(|c| k.from_poly(fp_poly(p, &c)));
        let model = WeierstrassModel::possibly_singular(k.clone(), a);
        let inv = model.invariants();
        prop_assert_eq!(k.scale(4, &inv.b8), k.sub(&k.mul(&inv.b2, &inv.b6), &k.square(&inv.b4)));
        prop_assert_eq!(k.scale(1728, &inv.disc), k.sub(&k.pow(&inv.c4, 3), &k.square(&inv.c6)));
    }

    #[test]
    fn j_invariance_and_discriminant_scaling(
        a in prop::array::uniform5(small_rational()),
        u in small_rational(),
        rst in prop::array::uniform3(small_rational()),
    ) {
        let q = Rationals;
        prop_assume!(!q.is_zero(&u));
        let Ok(model) = WeierstrassModel::new(q, a) else { return Ok(()); };
        let [r, s, t] = rst;
        let tr = Transform { u: u.clone(), r, s, t };
        let moved = model.transform(&tr).unwrap();
        prop_assert_eq!(moved.j_invariant().unwrap(), model.j_invariant().unwrap());
        let scaled = q.mul(&model.discriminant(), &q.pow_signed(&u, -12).unwrap());
        prop_assert_eq!(moved.discriminant(), scaled);
    }

    #[test]
    fn group_law_over_prime_fields(
        ell in prop::sample::select(vec![23u64, 31, 43, 47]),
        a4 in 0u64..47, a6 in 0u64..47,
        picks in prop::array::uniform3(any::<prop::sample::Index>()),
        n in 0i64..40,
    ) {
        let model = short_model_fp(ell, a4 % ell, a6 % ell);
        prop_assume!(!model.is_singular());
        let pts = affine_points(&model);
        prop_assume!(!pts.is_empty());
        let pick = |i: &prop::sample::Index| {
            let (x, y) = pts[i.index(pts.len())];
            model.point(x, y).unwrap()
        };
        let [p, q, r] = [pick(&picks[0]), pick(&picks[1]), pick(&picks[2])];
        prop_assert_eq!(model.add_points(&p, &q).unwrap(), model.add_points(&q, &p).unwrap());
        let left = model.add_points(&model.add_points(&p, &q).unwrap(), &r).unwrap();
        let right = model.add_points(&p, &model.add_points(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        let mut iterated = CurvePoint::Infinity;
        for _ in 0..n {
            iterated = model.add_points(&iterated, &p).unwrap();
        }
        prop_assert_eq!(model.mul_point(n, &p).unwrap(), iterated);
    }

    #[test]
    fn hasse_invariant_detects_ordinary_curves(a4 in 0u64..5, a6 in 0u64..5) {
        let model = short_model_fp(5, a4, a6);
        prop_assume!(!model.is_singular());
        let count = affine_points(&model).len() as u64 + 1;
        let a = hasse_invariant(&model).unwrap();
        prop_assert_eq!(a == 0, count % 5 == 1);
    }

    #[test]
    fn reduced_torsion_order_divides_generic_order(
        p in family_prime(),
        f in fp_coeffs(11, 4),
        a in 0u64..11,
    ) {
        let k = function_field(p).unwrap();
        let r = k.poly_ring();
        let f = r.from_coeffs(f.into_iter().map(|c| c % p).collect());
        prop_assume!(!r.is_constant(&f));
        let Ok(curve) = build_ff_family(p, &k.from_poly(f)) else { return Ok(()); };
        let fp = *k.base();
        let a = a % p;
        let eval = |x: &RatFunc<u64>| {
            let d = r.eval(x.den(), &a);
            fp.inv(&d).map(|di| fp.mul(&r.eval(x.num(), &a), &di))
        };
        let coeffs: Option<Vec<u64>> = curve.model.coeffs().iter().map(eval).collect();
        let Some(c) = coeffs else { return Ok(()); };
        let Ok(special) = WeierstrassModel::new(fp, [c[0], c[1], c[2], c[3], c[4]]) else { return Ok(()); };
        let generic = curve.model.point_order(&curve.model.point(k.zero(), k.zero()).unwrap(), DEFAULT_ORDER_BOUND).unwrap();
        let reduced = special.point_order(&special.point(0, 0).unwrap(), DEFAULT_ORDER_BOUND).unwrap();
        prop_assert_eq!(generic % reduced, 0);
    }

    #[test]
    fn reduction_invariants_over_q(
        a in prop::array::uniform5(-30i64..=30),
        p in prop::sample::select(vec![5u64, 7, 11]),
        k in 0u32..3,
    ) {
        let q = Rationals;
        let pk = (p as i64).pow(k);
        let coeffs = [a[0], a[1], a[2], a[3] * pk * pk, a[4] * pk * pk * pk].map(|x| q.from_int(x));
        let Ok(model) = WeierstrassModel::new(q, coeffs) else { return Ok(()); };
        let ctx = RationalPrime::new(p).unwrap();
        let res = tate_reduce(&model, &ctx).unwrap();
        let min = minimal_model_at(&model, &ctx).unwrap();
        let inv = min.model.invariants();
        let vd = ctx.valuation(&inv.disc).unwrap().unwrap();
        let vc4 = ctx.valuation(&inv.c4).unwrap().unwrap_or(i64::MAX);
        prop_assert!(vd < 12 || vc4 < 4);
        prop_assert_eq!(vd, res.vdisc_min);
        match res.kodaira.split() {
            Some(true) => prop_assert_eq!(res.tamagawa as i64, res.vdisc_min),
            Some(false) => prop_assert_eq!(res.tamagawa as i64, 2 - res.vdisc_min % 2),
            None => {}
        }
    }

    #[test]
    fn literals_round_trip(x in nonzero_ratfunc(7), c in small_rational()) {
        let k = function_field(7).unwrap();
        prop_assert_eq!(parse_element(&k, &k.format(&x)).unwrap(), x);
        prop_assert_eq!(parse_element(&Rationals, &Rationals.format(&c)).unwrap(), c);
    }
}

#[test]
fn bigint_literal_round_trip() {
    let n = BigInt::from(7).pow(60) - 1;
    let x = BigRational::from_integer(n);
    assert_eq!(parse_element(&Rationals, &Rationals.format(&x)).unwrap(), x);
}
