use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use stokeslab::degrees::{
    counts, deg_c_from_lambda_orders, deg_ll_elliptic, deg_ll_simple, factorize, full_basis_count, gz_order,
    half_inverse_sum, lambda_order_rows, quotient_degree, segre_degree, segre_degree_for, segre_inputs,
    stokes_class_count, stokes_total, u1_size,
};
use stokeslab::polyalg::rat;
use stokeslab::singdata::SingularityClass as C;

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn e6_degree_and_factorization() {
    let d = deg_ll_simple(C::E6).unwrap();
    assert_eq!(d.deg_ll, big(41472));
    assert_eq!(d.factorization_string(), "2^9·3^4");
    assert_eq!(d.mu_factorial, big(720));
}

#[test]
fn e7_e8_degrees() {
    assert_eq!(deg_ll_simple(C::E7).unwrap().deg_ll, big(1062882));
    assert_eq!(deg_ll_simple(C::E8).unwrap().deg_ll, big(37968750));
}

#[test]
fn a_series_closed_form() {
    for mu in 1..=12usize {
        let want = BigInt::from(mu + 1).pow(mu as u32 - 1);
        assert_eq!(deg_ll_simple(C::A(mu)).unwrap().deg_ll, want, "A{mu}");
    }
    assert_eq!(deg_ll_simple(C::A(5)).unwrap().deg_ll, big(1296));
}

#[test]
fn d_series_closed_form() {
    for mu in 4..=8usize {
        let want = BigInt::from(2) * BigInt::from(mu - 1).pow(mu as u32);
        assert_eq!(deg_ll_simple(C::D(mu)).unwrap().deg_ll, want, "D{mu}");
    }
    assert_eq!(deg_ll_simple(C::D(5)).unwrap().deg_ll, big(2048));
}

#[test]
fn elliptic_degrees_with_factorizations() {
    let et6 = deg_ll_elliptic(C::Et6).unwrap();
    assert_eq!(et6.deg_ll, big(24_800_580));
    assert_eq!(et6.factorization_string(), "2^2·3^11·5·7");
    assert_eq!(et6.sigma_term, Some(rat(27, 4)));
    assert_eq!(deg_ll_elliptic(C::Et7).unwrap().factorization_string(), "2^18·3·5^3·7");
    let et8 = deg_ll_elliptic(C::Et8).unwrap();
    assert_eq!(et8.factorization_string(), "2^9·3^10·7·101");
    assert_eq!(et8.deg_ll, big(21_374_793_216));
}

#[test]
fn wrong_family_is_rejected() {
    assert!(deg_ll_simple(C::Et6).is_err());
    assert!(deg_ll_elliptic(C::E6).is_err());
    assert!(gz_order(C::Et7).is_err());
    assert!(quotient_degree(C::A(3)).is_err());
    assert!(full_basis_count(C::Et6).is_err());
}

#[test]
fn half_inverse_sums() {
    assert_eq!(half_inverse_sum(C::Et6), rat(27, 4));
    assert_eq!(half_inverse_sum(C::Et7), rat(25, 3));
    assert_eq!(half_inverse_sum(C::Et8), rat(101, 10));
}

#[test]
fn segre_trivial_cases() {
    let empty = BTreeMap::new();
    assert_eq!(segre_degree(&[2, 3], &[4, 5, 6], &empty), rat(0, 1));
    let one: BTreeMap<u64, BigRational> = [(3u64, rat(-3, 1))].into();
    assert_eq!(segre_degree(&[2, 3], &[4, 5, 6], &one), rat(20, 1));
}

#[test]
fn segre_inputs_shape() {
    let s = segre_inputs(C::Et6).unwrap();
    assert_eq!(s.d, 3);
    assert_eq!(s.a, vec![1, 1, 1, 2, 2, 2]);
    assert_eq!(s.b, vec![6, 9, 12, 15, 18, 21, 24]);
    for c in C::elliptic() {
        let s = segre_inputs(c).unwrap();
        assert_eq!(s.a.len(), c.mu() - 2);
        assert_eq!(s.b.len(), c.mu() - 1);
    }
}

#[test]
fn lambda_order_examples() {
    let et6 = lambda_order_rows(C::Et6).unwrap();
    assert_eq!(et6[0].total(), rat(3, 2));
    assert_eq!(et6[0].involved, ["t5", "t6", "t7"]);
    assert_eq!(lambda_order_rows(C::Et7).unwrap()[0].total(), rat(1, 1));
    let et8 = lambda_order_rows(C::Et8).unwrap();
    assert_eq!(et8[4].k, 5);
    assert_eq!(et8[4].total(), rat(1, 2));
    assert_eq!(et8[4].involved, ["t2"]);
}

#[test]
fn lambda_orders_match_half_multiplicities() {
    for c in C::elliptic() {
        let a = segre_inputs(c).unwrap().a;
        for (k, v) in deg_c_from_lambda_orders(c).unwrap() {
            let mult = a.iter().filter(|&&x| x == k).count() as i64;
            assert_eq!(v, rat(mult, 2), "{c} k={k}");
        }
    }
}

#[test]
fn segre_formula_reproduces_elliptic_degrees() {
    for c in C::elliptic() {
        let seg = segre_degree_for(c).unwrap();
        let deg = deg_ll_elliptic(c).unwrap().deg_ll;
        assert_eq!(seg, BigRational::from_integer(deg), "{c}");
    }
}

#[test]
fn u1_sizes() {
    assert_eq!(u1_size(3, 3, 3), 9);
    assert_eq!(u1_size(4, 4, 2), 8);
    assert_eq!(u1_size(6, 3, 2), 6);
}

#[test]
fn quotient_degrees() {
    assert_eq!(quotient_degree(C::Et7).unwrap(), 96);
    assert_eq!(quotient_degree(C::Et8).unwrap(), 36);
}

#[test]
fn et6_quotient_degree_is_324_since_24800580_over_324_is_76545() {
    assert_eq!(quotient_degree(C::Et6).unwrap(), 324);
    assert_eq!(stokes_class_count(C::Et6).unwrap(), big(76545));
    assert_ne!(big(24_800_580) % big(326), big(0));
}

#[test]
fn simple_stokes_counts() {
    assert_eq!(stokes_class_count(C::E6).unwrap(), big(3456));
    assert_eq!(stokes_class_count(C::E7).unwrap(), big(118098));
    assert_eq!(stokes_class_count(C::E8).unwrap(), big(2531250));
    assert_eq!(stokes_class_count(C::D(4)).unwrap(), big(9));
    for mu in 2..=8usize {
        let want = BigInt::from(mu + 1).pow(mu as u32 - 2);
        assert_eq!(stokes_class_count(C::A(mu)).unwrap(), want, "A{mu}");
    }
    for mu in 5..=8usize {
        let want = BigInt::from(mu - 1).pow(mu as u32 - 1);
        assert_eq!(stokes_class_count(C::D(mu)).unwrap(), want, "D{mu}");
    }
}

#[test]
fn elliptic_stokes_counts() {
    assert_eq!(stokes_class_count(C::Et7).unwrap(), big(7_168_000));
    assert_eq!(stokes_class_count(C::Et8).unwrap(), big(593_744_256));
}

#[test]
fn totals_include_signs() {
    assert_eq!(full_basis_count(C::A(2)).unwrap(), big(12));
    assert_eq!(stokes_total(C::A(2)).unwrap(), big(2));
    assert_eq!(stokes_total(C::A(3)).unwrap(), big(4 * 4));
    assert_eq!(stokes_total(C::Et6).unwrap(), big(76545 << 7));
}

#[test]
fn gz_orders() {
    assert_eq!(gz_order(C::A(4)).unwrap(), 10);
    assert_eq!(gz_order(C::D(4)).unwrap(), 36);
    assert_eq!(gz_order(C::D(6)).unwrap(), 20);
    assert_eq!(gz_order(C::E6).unwrap(), 24);
}

#[test]
fn count_rows_serialize() {
    let v = serde_json::to_value(counts(C::Et8).unwrap()).unwrap();
    assert_eq!(v["stokes_class_count"], 593_744_256i64);
    assert_eq!(v["quotient_degree"], 36);
    assert!(v.get("gz_order").is_none());
    let v = serde_json::to_value(counts(C::E6).unwrap()).unwrap();
    assert_eq!(v["full_basis_count"], 41472i64 * 64);
}

proptest! {
    #[test]
    fn factorization_multiplies_back(n in 1u64..5_000_000_000) {
        let f = factorize(&big(n));
        let back: BigInt = f.iter().map(|(p, e)| p.pow(*e)).product();
        prop_assert_eq!(back, big(n));
    }

    #[test]
    fn u1_size_matches_rational_count(p in 1u64..8, q in 1u64..8, r in 1u64..8) {
        // Brute force against an independent count over the torus.
        let mut n = 0;
        for a in 0..p { for b in 0..q { for c in 0..r {
            let s = BigRational::new(a.into(), p.into()) + BigRational::new(b.into(), q.into())
                + BigRational::new(c.into(), r.into());
            if s.is_integer() { n += 1; }
        }}}
        prop_assert_eq!(u1_size(p, q, r), n);
    }

    #[test]
    fn simple_degrees_are_integers_and_factor(mu in 1usize..14) {
        for c in [C::A(mu), C::D(mu.max(4))] {
            let d = deg_ll_simple(c).unwrap();
            let back: BigInt = d.factorization.iter().map(|(p, e)| p.pow(*e)).product();
            prop_assert_eq!(back, d.deg_ll);
        }
    }
}
