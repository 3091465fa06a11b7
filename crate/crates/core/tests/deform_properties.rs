use kflat_core::chow::chow_ideal_axes;
use kflat_core::deform::{
    check_semigroup_lemma, cn_central_fiber_ideal_general, cn_chow_vanishing, cn_is_flat, cn_is_kflat, cn_refute_kflat,
    cn_smoothing, cn_smoothing_span_rank, format_cn, parse_cn, plane_classify, CnDeformation, CurveSectionRep,
    MonomialCurve, PlaneCurveDeformation, RefuteOptions,
};
use kflat_core::{Field, LaurentPoly, Poly, Ring, Scalar};
use proptest::prelude::*;

fn q(x: i64) -> Scalar {
    Field::Rationals.from_i64(x)
}

fn scalars() -> Ring {
    Ring::new(Field::Rationals, &[] as &[&str]).unwrap()
}

fn laurent(var: &str, terms: &[(i64, i64)]) -> LaurentPoly {
    let k = scalars();
    LaurentPoly::from_terms(var, &k, terms.iter().map(|&(e, c)| (e, k.from_i64(c))))
}

/// Per pair: coefficients of x^-3, …, x^1. With `symmetric`, only simple poles with
/// c_ij = c_ji.
fn cn_data(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = CnDeformation> {
    (n, any::<bool>(), prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 20)).prop_map(|(n, symmetric, coeffs)| {
        let mut d = CnDeformation::zero(n, n, Field::Rationals).unwrap();
        for (k, (i, j)) in d.index_pairs().into_iter().enumerate() {
            let mut c = coeffs[k % coeffs.len()].clone();
            if symmetric {
                c[0] = 0;
                c[1] = 0;
                c[2] = coeffs[(i.min(j) * 7 + i.max(j)) % coeffs.len()][2];
            }
            let terms: Vec<(i64, i64)> = c.iter().enumerate().map(|(e, &x)| (e as i64 - 3, x)).collect();
            d = d.with(i, j, laurent("x", &terms)).unwrap();
        }
        d
    })
}

fn distinct_points(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-30i64..30, n).prop_map(|s| s.into_iter().collect::<Vec<_>>()).prop_shuffle()
}

fn nonzero_weights(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![-9i64..=-1, 1i64..=9], n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cn_implication_chain_and_refutation(d in cn_data(3..=5), seed in any::<u64>()) {
        let flat = cn_is_flat(&d).unwrap();
        let kflat = cn_is_kflat(&d);
        prop_assert!(!flat || kflat);
        prop_assert!(!kflat || cn_chow_vanishing(&d).unwrap());
        let refuted = cn_refute_kflat(&d, &RefuteOptions { seed, ..Default::default() }).unwrap();
        prop_assert_eq!(refuted.is_none(), kflat);
    }

    #[test]
    fn chow_vanishing_is_containment_of_the_axes_ideal(d in cn_data(3..=4)) {
        let fiber = cn_central_fiber_ideal_general(&d).unwrap();
        let axes = chow_ideal_axes(d.n(), Field::Rationals).unwrap();
        prop_assert_eq!(fiber.contains_ideal(&axes).unwrap(), cn_chow_vanishing(&d).unwrap());
    }

    #[test]
    fn cn_text_round_trip(d in cn_data(3..=5)) {
        prop_assert_eq!(parse_cn(&format_cn(&d), Field::Rationals).unwrap(), d);
    }

    #[test]
    fn smoothing_first_order_is_tangent(
        (p, lambda) in (2usize..=5).prop_flat_map(|n| (distinct_points(n), nonzero_weights(n)))
    ) {
        let n = p.len();
        let s = cn_smoothing(&p.iter().map(|&x| q(x)).collect::<Vec<_>>(), &lambda.iter().map(|&x| q(x)).collect::<Vec<_>>()).unwrap();
        prop_assert!(cn_is_flat(&s.first_order).unwrap());
        // along the x_j-axis put x_i = e_ij·t; every equation vanishes modulo t²
        let ring = s.equations[0].ring().clone();
        let t = ring.var_at(n);
        for j in 1..=n {
            let images: Vec<Poly> = (1..=n + 1)
                .map(|i| match i {
                    _ if i == j || i == n + 1 => ring.var_at(i - 1),
                    _ => t.scale(&s.first_order.coeff(i, j, 0)),
                })
                .collect();
            for eq in &s.equations {
                let sub = eq.substitute(&images).unwrap();
                prop_assert!(sub.terms().all(|(e, _)| e[n] >= 2), "{} on axis {}: {}", eq, j, sub);
            }
        }
    }

    #[test]
    fn mobius_change_is_a_translation(
        (p, lambda) in (2usize..=5).prop_flat_map(|n| (distinct_points(n), nonzero_weights(n)))
            .prop_filter("points are nonzero", |(p, _)| !p.contains(&0))
    ) {
        let n = p.len();
        let pq: Vec<Scalar> = p.iter().map(|&x| q(x)).collect();
        let lq: Vec<Scalar> = lambda.iter().map(|&x| q(x)).collect();
        let inv: Vec<Scalar> = pq.iter().map(|x| x.inv().unwrap()).collect();
        let moved: Vec<Scalar> = lq.iter().zip(&pq).map(|(l, x)| l.mul(&x.mul(x)).neg()).collect();
        let a = cn_smoothing(&inv, &lq).unwrap().first_order;
        let b = cn_smoothing(&pq, &moved).unwrap().first_order;
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                let diff = a.coeff(i, j, 0).sub(&b.coeff(i, j, 0));
                prop_assert_eq!(diff, lq[i - 1].mul(&pq[i - 1]));
            }
        }
    }

    #[test]
    fn plane_flags_ignore_regular_sections(
        curve in prop::sample::select(vec![(2u32, 3u32), (2, 5), (3, 4), (3, 5), (4, 5)]),
        phi in prop::collection::vec((-12i64..=6, -3i64..=3), 0..4),
        extra in prop::collection::vec((0u32..4, 0u32..4, -3i64..=3), 1..4),
    ) {
        let (a, c) = curve;
        let curve = MonomialCurve::new(a, c).unwrap();
        let r = Ring::new(Field::Rationals, &["u", "v"]).unwrap();
        let zero = LaurentPoly::zero("t", &scalars());
        let d = PlaneCurveDeformation::monomial(curve, &r, &zero, &laurent("t", &phi)).unwrap();
        let flags = plane_classify(&d).unwrap();
        prop_assert!(!flags.flat || flags.cflat);
        prop_assert!(flags.globalizes != Some(true) || flags.cflat);
        let p = r.from_terms(extra.iter().map(|&(i, j, x)| (vec![i, j], q(x))));
        let shifted = d.phi().add(&CurveSectionRep::from_poly(d.f(), &p).unwrap()).unwrap();
        let e = PlaneCurveDeformation::new(d.psi().clone(), shifted).unwrap();
        prop_assert_eq!(plane_classify(&e).unwrap(), flags);
    }
}

#[test]
fn smoothing_span_ranks() {
    for n in 2..=5usize {
        let samples: Vec<(Vec<Scalar>, Vec<Scalar>)> = (0..3 * n * n)
            .map(|s| {
                let s = s as i64;
                let p = (0..n as i64).map(|i| q((i + 1) * (s + 2) + i * i * s)).collect();
                let l = (0..n as i64).map(|i| q(1 + (i * 7 + s * 3) % 11)).collect();
                (p, l)
            })
            .collect();
        let rank = cn_smoothing_span_rank(&samples, n).unwrap();
        assert_eq!(rank.raw, n * (n - 1));
        assert_eq!(rank.modulo_translations, n * (n - 2));
    }
}

#[test]
fn semigroup_lemma_holds_for_small_pairs() {
    for a in 1u32..=200 {
        for c in 1..=200 / a {
            if num_integer::gcd(a, c) == 1 {
                assert!(check_semigroup_lemma(a, c).unwrap().passed(), "({a}, {c})");
            }
        }
    }
}
