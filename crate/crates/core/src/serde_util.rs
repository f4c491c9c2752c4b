//! Serialization helpers: exact numbers are emitted as strings (`"27/4"`) or as
//! JSON integers when they fit, so output stays exact and byte-deterministic.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serializer;

pub fn rational<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn rationals<S: Serializer>(qs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}

pub fn bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(n) {
        Ok(v) => s.serialize_i64(v),
        Err(_) => s.serialize_str(&n.to_string()),
    }
}

pub fn rational_opt<S: Serializer>(q: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match q {
        Some(q) => rational(q, s),
        None => s.serialize_none(),
    }
}

pub fn bigint_opt<S: Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match n {
        Some(n) => bigint(n, s),
        None => s.serialize_none(),
    }
}

pub fn complexes<S: Serializer>(zs: &[num_complex::Complex64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(zs.iter().map(|z| [z.re, z.im]))
}

pub fn complex_rows<S: Serializer>(rows: &[Vec<num_complex::Complex64>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(rows.iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>()))
}
