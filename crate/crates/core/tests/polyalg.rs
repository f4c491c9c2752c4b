use num_rational::BigRational;
use proptest::prelude::*;
use stokeslab::polyalg::{
    graded_piece_rank, parse_poly, rat, resultant, vars, Cyclo8, Domain, Field, MultiPoly, QLambda,
    RatFunc, UniPoly,
};

type Q = BigRational;

fn q(n: i64) -> Q {
    rat(n, 1)
}

#[test]
fn binomial_square() {
    let v = vars(&["x"]);
    let x = MultiPoly::<Q>::var(&v, 0);
    let one = MultiPoly::constant(&v, q(1));
    let sq = (&x + &one).pow(2);
    assert_eq!(sq, parse_poly("x^2 + 2*x + 1", Some(&v)).unwrap());
}

#[test]
fn identity_substitution_is_identity() {
    let v = vars(&["x0", "x1"]);
    let f = parse_poly("x0^3 + 3/2*x0*x1^2 - 7", Some(&v)).unwrap();
    let ids: Vec<_> = (0..2).map(|i| MultiPoly::var(&v, i)).collect();
    assert_eq!(f.subst(&ids), f);
}

#[test]
fn partial_of_legendre_cubic_in_x0() {
    // f = x1(x1 - x0)(x1 - λ x0) - x0 x2^2 over ℚ(λ).
    let v = vars(&["x0", "x1", "x2"]);
    let la = QLambda::var();
    let x = |i| MultiPoly::<QLambda>::var(&v, i);
    let f = &(&(&x(1) * &(&x(1) - &x(0))) * &(&x(1) - &x(0).scale(&la))) - &(&x(0) * &x(2).pow(2));
    let expected = &(&x(1).pow(2).scale(&la.plus(&QLambda::one()).negate())
        + &(&x(0) * &x(1)).scale(&la.plus(&la)))
        - &x(2).pow(2);
    assert_eq!(f.partial(0), expected);
}

#[test]
fn resultant_evaluation_property() {
    let v = vars(&["x", "a", "b"]);
    let p = parse_poly("x^2 - a", Some(&v)).unwrap();
    let r = parse_poly("x - b", Some(&v)).unwrap();
    let res = resultant(&p, &r, 0).unwrap();
    assert_eq!(res, parse_poly("b^2 - a", Some(&v)).unwrap());
}

#[test]
fn resultant_gives_a2_lyashko_looijenga_up_to_constant() {
    let v = vars(&["x", "y", "t1", "t2"]);
    let dp = parse_poly("3*x^2 + t2", Some(&v)).unwrap();
    let g = parse_poly("y - x^3 - t1 - t2*x", Some(&v)).unwrap();
    let res = resultant(&dp, &g, 0).unwrap();
    let target = parse_poly("y^2 - 2*y*t1 + t1^2 + 4/27*t2^3", Some(&v)).unwrap();
    let c = res.coeff(&[0, 2, 0, 0]);
    assert_eq!(c.clone() * c.clone(), q(27 * 27));
    assert_eq!(res, target.scale(&c));
}

#[test]
fn resultant_of_constant_degree_rejected() {
    let v = vars(&["x"]);
    let a = MultiPoly::constant(&v, q(3));
    let b = parse_poly("x + 1", Some(&v)).unwrap();
    assert!(resultant(&a, &b, 0).is_err());
}

#[test]
fn resultant_of_coprime_linear_polynomials_is_nonzero() {
    let v = vars(&["x"]);
    let a = parse_poly("x + 1", Some(&v)).unwrap();
    let b = parse_poly("x - 1", Some(&v)).unwrap();
    assert!(!resultant(&a, &b, 0).unwrap().is_zero());
}

#[test]
fn cyclotomic_unit_arithmetic() {
    let xi = Cyclo8::xi();
    assert_eq!(xi.pow_u(8), Cyclo8::one());
    assert_eq!(xi.pow_u(4), Cyclo8::one().negate());
    assert_eq!(Cyclo8::i().times(&Cyclo8::i()), Cyclo8::one().negate());
    let a = Cyclo8::one().plus(&xi).plus(&Cyclo8::i().scale_q(3));
    assert_eq!(a.times(&a.inverse().unwrap()), Cyclo8::one());
}

trait ScaleQ {
    fn scale_q(&self, n: i64) -> Self;
}
impl ScaleQ for Cyclo8 {
    fn scale_q(&self, n: i64) -> Self {
        self.times(&Cyclo8::from_int(n))
    }
}

#[test]
fn ratfunc_canonical_form() {
    let la = QLambda::var();
    let one = QLambda::one();
    let a = la.times(&la).minus(&one).divide(&la.minus(&one)).unwrap();
    assert_eq!(a, la.plus(&one));
    assert!(a.is_polynomial());
    let b = one.divide(&one.minus(&la)).unwrap();
    assert_eq!(b.denom(), &UniPoly::new(vec![q(-1), q(1)]));
}

#[test]
fn ratfunc_over_cyclotomics() {
    let la = RatFunc::<Cyclo8>::var();
    let c = RatFunc::constant(Cyclo8::xi());
    let x = la.plus(&c).divide(&la.minus(&c)).unwrap();
    assert_eq!(x.times(&x.inverse().unwrap()), RatFunc::one());
}

#[test]
fn text_round_trip_fixed_cases() {
    for s in ["3/4 * x0^2 * la - 2 * x1 + 1", "-x0^3 + 1/2", "0", "x1^12 * la - 5/7"] {
        let v = vars(&["x0", "x1", "la"]);
        let p = parse_poly(s, Some(&v)).unwrap();
        let back = parse_poly(&p.to_string(), Some(&v)).unwrap();
        assert_eq!(p, back, "{s} -> {p}");
    }
}

#[test]
fn graded_rank_empty_piece_is_zero() {
    let w = [rat(1, 3), rat(1, 3)];
    let gens: Vec<MultiPoly<Q>> = vec![];
    assert_eq!(graded_piece_rank(&gens, &w, &rat(1, 2)).unwrap(), 0);
}

#[test]
fn graded_rank_rejects_inhomogeneous_generator() {
    let v = vars(&["x0", "x1"]);
    let w = [rat(1, 3), rat(1, 3)];
    let g = parse_poly("x0^2 + x1", Some(&v)).unwrap();
    assert!(graded_piece_rank(&[g], &w, &rat(2, 3)).is_err());
}

fn small_poly() -> impl Strategy<Value = MultiPoly<Q>> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..5, 1i64..4), 0..5).prop_map(|ts| {
        let v = vars(&["x", "y"]);
        let mut p = MultiPoly::zero(&v);
        for ((a, b), n, d) in ts {
            p = &p
                + &MultiPoly::term(&v, stokeslab::polyalg::Monomial(vec![a, b]), rat(n, d));
        }
        p
    })
}

fn small_ratfunc() -> impl Strategy<Value = QLambda> {
    (prop::collection::vec(-3i64..4, 1..4), prop::collection::vec(-3i64..4, 1..3)).prop_filter_map(
        "nonzero denominator",
        |(n, d)| {
            let num = UniPoly::new(n.into_iter().map(q).collect());
            let den = UniPoly::new(d.into_iter().map(q).collect());
            RatFunc::new(num, den)
        },
    )
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in small_poly(), b in small_poly()) {
        prop_assume!(!b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.div_exact(&b), Some(a));
    }

    #[test]
    fn text_round_trip(a in small_poly()) {
        let back = parse_poly(&a.to_string(), Some(a.vars())).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn resultant_vanishes_on_common_factor(r in -5i64..6, a in small_poly(), b in small_poly()) {
        // p = (x - r) a', q = (x - r) b' with a', b' of positive degree in x.
        let v = vars(&["x", "y"]);
        let lin = parse_poly(&format!("x - {}", r).replace("- -", "+ "), Some(&v)).unwrap();
        let x = MultiPoly::var(&v, 0);
        let p = &lin * &(&a + &x.pow(3));
        let qq = &lin * &(&b + &x.pow(4));
        let res = resultant(&p, &qq, 0).unwrap();
        prop_assert!(res.is_zero());
    }

    #[test]
    fn ratfunc_is_a_field(a in small_ratfunc(), b in small_ratfunc()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = a.divide(&b).unwrap();
        let ba = b.divide(&a).unwrap();
        prop_assert_eq!(ab.times(&ba), QLambda::one());
        prop_assert_eq!(a.plus(&b).minus(&b), a.clone());
    }

    #[test]
    fn graded_rank_invariant_under_row_operations(k in -3i64..4) {
        let v = vars(&["x0", "x1"]);
        let w = [rat(1, 3), rat(1, 3)];
        let g1 = parse_poly("x0^2 + x0*x1", Some(&v)).unwrap();
        let g2 = parse_poly("x1^2 - x0*x1", Some(&v)).unwrap();
        let g3 = &g1 + &g2.scale(&q(k));
        let before = graded_piece_rank(&[g1.clone(), g2.clone()], &w, &rat(2, 3)).unwrap();
        let after = graded_piece_rank(&[g3, g2], &w, &rat(2, 3)).unwrap();
        prop_assert_eq!(before, after);
        prop_assert_eq!(before, 2);
    }
}
