use kflat_core::expr::{parse_expr, parse_poly, Expr};
use kflat_core::groebner::{buchberger, intersect};
use kflat_core::poly::{multinomial, multinomial_nonzero};
use kflat_core::{Field, Ideal, MonomialOrder, Poly, Ring};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn ring(field: Field) -> Ring {
    Ring::new(field, &VARS).unwrap()
}

/// Up to 6 terms of total degree ≤ `deg` with coefficients in [−9, 9].
fn terms(deg: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=deg, 3), -9i64..=9), 0..6).prop_map(move |ts| {
        ts.into_iter()
            .map(|(mut e, c)| {
                while e.iter().sum::<u32>() > deg {
                    let k = e.iter().position(|&x| x > 0).unwrap();
                    e[k] -= 1;
                }
                (e, c)
            })
            .collect()
    })
}

fn build(r: &Ring, ts: &[(Vec<u32>, i64)]) -> Poly {
    r.from_terms(ts.iter().map(|(e, c)| (e.clone(), r.field().from_i64(*c))))
}

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rationals), Just(Field::prime(7).unwrap()), Just(Field::prime(2).unwrap())]
}

/// Plain multivariate division by leading terms, written independently of the library's reducer.
fn naive_remainder(p: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let mut p = p.clone();
    let mut rem = p.ring().zero();
    'outer: while let Some((e, c)) = p.leading_term(order).map(|(e, c)| (e.clone(), c.clone())) {
        for g in basis {
            let (ge, gc) = g.leading_term(order).unwrap();
            if ge.iter().zip(&e).all(|(a, b)| a <= b) {
                let q: Vec<u32> = e.iter().zip(ge).map(|(a, b)| a - b).collect();
                let factor = c.mul(&gc.inv().unwrap());
                p = &p - &g.mul_term(&q, &factor);
                continue 'outer;
            }
        }
        let lead = p.ring().monomial(e, c);
        rem = &rem + &lead;
        p = &p - &lead;
    }
    rem
}

fn s_poly(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let (fe, fc) = f.leading_term(order).unwrap();
    let (ge, gc) = g.leading_term(order).unwrap();
    let l: Vec<u32> = fe.iter().zip(ge).map(|(a, b)| *a.max(b)).collect();
    let df: Vec<u32> = l.iter().zip(fe).map(|(a, b)| a - b).collect();
    let dg: Vec<u32> = l.iter().zip(ge).map(|(a, b)| a - b).collect();
    &f.mul_term(&df, &fc.inv().unwrap()) - &g.mul_term(&dg, &gc.inv().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(field in fields(), a in terms(4), b in terms(4), c in terms(4)) {
        let r = ring(field);
        let (a, b, c) = (build(&r, &a), build(&r, &b), build(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &r.one(), a.clone());
    }

    #[test]
    fn leibniz_rule(field in fields(), a in terms(4), b in terms(4), v in 0usize..3) {
        let r = ring(field);
        let (a, b) = (build(&r, &a), build(&r, &b));
        let lhs = (&a * &b).derivative_at(v);
        let rhs = &(&a.derivative_at(v) * &b) + &(&a * &b.derivative_at(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multinomial_matches_expansion(parts in prop::collection::vec(0u32..5, 1..4), p in prop_oneof![Just(0u64), Just(2), Just(3), Just(5)]) {
        let s = parts.len();
        let names: Vec<String> = (0..s).map(|i| format!("t{i}")).collect();
        let field = if p == 0 { Field::Rationals } else { Field::prime(p).unwrap() };
        let r = Ring::new(field, &names).unwrap();
        let m: u32 = parts.iter().sum();
        let sum = r.gens().iter().fold(r.zero(), |acc, g| &acc + g);
        let coeff = sum.pow(m).coeff(&parts);
        prop_assert_eq!(!coeff.is_zero(), multinomial_nonzero(m as u64, &parts, p));
        if p == 0 {
            // m!/∏ i_k! by factorials
            let fact = |k: u32| (1..=k).fold(BigUint::from(1u32), |acc, j| acc * j);
            let expect = parts.iter().fold(fact(m), |acc, &k| acc / fact(k));
            prop_assert_eq!(multinomial(&parts), expect.clone());
            prop_assert_eq!(coeff, field.from_bigint(&BigInt::from(expect)));
        }
    }

    #[test]
    fn groebner_basis_closure(field in fields(), gens in prop::collection::vec(terms(3), 1..4), order in prop_oneof![Just(MonomialOrder::GrevLex), Just(MonomialOrder::Lex)]) {
        let r = ring(field).with_order(order);
        let gens: Vec<Poly> = gens.iter().map(|t| build(&r, t)).filter(|p| !p.is_zero()).collect();
        let gb = buchberger(&gens, order);
        for g in &gens {
            prop_assert!(naive_remainder(g, &gb, order).is_zero());
        }
        for j in 0..gb.len() {
            for i in 0..j {
                prop_assert!(naive_remainder(&s_poly(&gb[i], &gb[j], order), &gb, order).is_zero());
            }
        }
    }

    #[test]
    fn intersection_is_commutative_and_contained(field in fields(), a in prop::collection::vec(terms(2), 1..3), b in prop::collection::vec(terms(2), 1..3)) {
        let r = ring(field);
        let i = Ideal::new(&r, a.iter().map(|t| build(&r, t)).collect()).unwrap();
        let j = Ideal::new(&r, b.iter().map(|t| build(&r, t)).collect()).unwrap();
        let ij = intersect(&i, &j).unwrap();
        prop_assert!(ij.ideal_equal(&intersect(&j, &i).unwrap()).unwrap());
        prop_assert!(i.contains_ideal(&ij).unwrap());
        prop_assert!(j.contains_ideal(&ij).unwrap());
        prop_assert!(ij.contains_ideal(&i.product(&j).unwrap()).unwrap());
    }

    #[test]
    fn poly_print_parse_round_trip(field in fields(), t in terms(6)) {
        let r = ring(field);
        let p = build(&r, &t);
        prop_assert_eq!(parse_poly(&p.to_string(), &r).unwrap(), p);
    }

    #[test]
    fn expr_print_parse_round_trip(e in sum_expr(3)) {
        prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }
}

// ASTs in the shape the parser produces: left-nested sums and products, groups where
// precedence needs them.

fn bx(e: Expr) -> Box<Expr> {
    Box::new(e)
}

fn primary(depth: u32) -> BoxedStrategy<Expr> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(|k| Expr::Int(k.into())),
        (0u32..9, 1u32..9).prop_map(|(a, b)| Expr::Rational(a.into(), b.into())),
        prop::sample::select(VARS.to_vec()).prop_map(|v| Expr::Var(v.into())),
    ];
    if depth == 0 {
        return leaf.boxed();
    }
    prop_oneof![3 => leaf, 1 => sum_expr(depth - 1).prop_map(|e| Expr::Group(bx(e)))].boxed()
}

fn power(depth: u32) -> BoxedStrategy<Expr> {
    (primary(depth), prop::collection::vec(-3i64..5, 0..2))
        .prop_map(|(b, ks)| ks.into_iter().fold(b, |acc, k| Expr::Pow(bx(acc), k)))
        .boxed()
}

fn unary(depth: u32) -> BoxedStrategy<Expr> {
    (0usize..2, power(depth)).prop_map(|(negs, e)| (0..negs).fold(e, |acc, _| Expr::Neg(bx(acc)))).boxed()
}

fn product(depth: u32) -> BoxedStrategy<Expr> {
    // a divisor that is an integer literal would fuse with a preceding integer into a rational
    let divisor = prop_oneof![
        prop::sample::select(VARS.to_vec()).prop_map(|v| Expr::Var(v.into())),
        primary(depth.saturating_sub(1)).prop_map(|e| Expr::Group(bx(e))),
    ];
    (unary(depth), prop::collection::vec((any::<bool>(), unary(depth), divisor), 0..3))
        .prop_map(|(first, rest)| {
            rest.into_iter()
                .fold(first, |acc, (div, u, d)| if div { Expr::Div(bx(acc), bx(d)) } else { Expr::Mul(bx(acc), bx(u)) })
        })
        .boxed()
}

fn sum_expr(depth: u32) -> BoxedStrategy<Expr> {
    (product(depth), prop::collection::vec((any::<bool>(), product(depth)), 0..3))
        .prop_map(|(first, rest)| {
            rest.into_iter().fold(first, |acc, (plus, p)| if plus { Expr::Add(bx(acc), bx(p)) } else { Expr::Sub(bx(acc), bx(p)) })
        })
        .boxed()
}
