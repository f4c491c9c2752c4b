//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Set `STOKESLAB_EXTENDED=1` to include the long orbit targets (E7, E8, Ẽ7).

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64 as C;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stokeslab::braid::{
    apply_word, braid_apply, enumerate_states, orbit_enumerate, stokes_of_tuple, BraidWord, OrbitConfig, OrbitMode,
    TruncationReason, VanishingTuple,
};
use stokeslab::degrees::{
    deg_c_from_lambda_orders, deg_ll, gz_order, quotient_degree, segre_degree_for, segre_inputs, stokes_class_count,
};
use stokeslab::lattice::{
    is_positive_definite, is_positive_semidefinite, monodromy_from_stokes, monodromy_product, pl_reflect,
    radical_rank, symmetrized_form, StokesMatrix,
};
use stokeslab::llmap::{
    critical_values_numeric, discriminant_member, ll_exact_a, ll_fiber_count, ll_polynomial_a, roots_match,
    NumericConfig, NumericLLPoint,
};
use stokeslab::polyalg::{parse_poly, rat, vars};
use stokeslab::singdata::{parse_seed, seed_stokes, symmetry_data, Provenance, SingularityClass as S};
use stokeslab::verify::{
    check_kappa_extension, check_phi_identity, check_simple_symmetry, check_unfolding_identity, jacobi_dimension,
    LambdaMode,
};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn extended() -> bool {
    std::env::var("STOKESLAB_EXTENDED").is_ok_and(|v| v == "1")
}

fn orbit(class: S, mode: OrbitMode) -> Result<u64, String> {
    let seed = seed_stokes(class).map_err(err)?;
    let r = orbit_enumerate(&seed.stokes, &OrbitConfig::new(mode).label(class.to_string())).map_err(err)?;
    ensure(!r.truncated, || format!("{class} {mode} truncated"))?;
    Ok(r.count)
}

fn orbit_pairs(cases: &[(S, u64, u64)]) -> Outcome {
    let mut parts = Vec::new();
    for &(class, bases, stokes) in cases {
        let b = orbit(class, OrbitMode::Bases)?;
        let s = orbit(class, OrbitMode::Stokes)?;
        ensure(b == bases && s == stokes, || format!("{class}: got {b}/{s}, expected {bases}/{stokes}"))?;
        parts.push(format!("{class} {b}/{s}"));
    }
    Ok(parts.join(", "))
}

fn criterion_1() -> Outcome {
    orbit_pairs(&[(S::A(2), 3, 1), (S::A(3), 16, 4), (S::A(4), 125, 25), (S::A(5), 1296, 216)])
}

fn criterion_2() -> Outcome {
    let seed = seed_stokes(S::D(4)).map_err(err)?;
    ensure(seed.provenance == Provenance::TensorDerived, || "D4 seed is not the tensor seed".into())?;
    orbit_pairs(&[(S::D(4), 162, 9)])
}

fn criterion_3() -> Outcome {
    let mut parts = vec![orbit_pairs(&[(S::E6, 41472, 3456)])?];
    let et6 = orbit(S::Et6, OrbitMode::Stokes)?;
    ensure(et6 == 76545, || format!("Ẽ6 stokes: {et6}"))?;
    parts.push(format!("Ẽ6 stokes {et6}"));

    let et8 = seed_stokes(S::Et8).map_err(err)?;
    let r = orbit_enumerate(&et8.stokes, &OrbitConfig::new(OrbitMode::Stokes).budget_states(50_000)).map_err(err)?;
    ensure(r.truncated && r.reason == Some(TruncationReason::StateBudget) && r.count <= 50_000, || {
        format!("Ẽ8 budget run not truncated as declared: {r:?}")
    })?;
    parts.push("Ẽ8 budget-truncated".into());

    if extended() {
        parts.push(orbit_pairs(&[(S::E7, 1_062_882, 118_098), (S::E8, 37_968_750, 2_531_250)])?);
        let et7 = orbit(S::Et7, OrbitMode::Stokes)?;
        ensure(et7 == 7_168_000, || format!("Ẽ7 stokes: {et7}"))?;
        parts.push(format!("Ẽ7 stokes {et7}"));
    } else {
        parts.push("extended targets skipped".into());
    }
    Ok(parts.join(", "))
}

fn criterion_4() -> Outcome {
    let big = |n: u64| BigInt::from(n);
    for mu in 1..=10usize {
        let want = BigInt::from(mu + 1).pow(mu as u32 - 1);
        let got = deg_ll(S::A(mu)).map_err(err)?.deg_ll;
        ensure(got == want, || format!("A{mu}: {got} ≠ {want}"))?;
    }
    for mu in 4..=10usize {
        let want = BigInt::from(2) * BigInt::from(mu - 1).pow(mu as u32);
        let got = deg_ll(S::D(mu)).map_err(err)?.deg_ll;
        ensure(got == want, || format!("D{mu}: {got} ≠ {want}"))?;
    }
    let table = [
        (S::E6, big(41472)),
        (S::E7, big(2) * big(3).pow(12)),
        (S::E8, big(2) * big(3).pow(5) * big(5).pow(7)),
        (S::Et6, big(4) * big(3).pow(11) * big(35)),
        (S::Et7, big(2).pow(18) * big(3) * big(125) * big(7)),
        (S::Et8, big(2).pow(9) * big(3).pow(10) * big(7) * big(101)),
    ];
    for (class, want) in table {
        let got = deg_ll(class).map_err(err)?.deg_ll;
        ensure(got == want, || format!("{class}: {got} ≠ {want}"))?;
    }
    for class in S::elliptic() {
        // Each k's λ-order total must be half the multiplicity of k among the a-weights.
        let a = segre_inputs(class).map_err(err)?.a;
        let per_k: BTreeMap<u64, BigRational> = deg_c_from_lambda_orders(class).map_err(err)?;
        for (k, v) in &per_k {
            let mult = a.iter().filter(|&&x| x == *k).count() as i64;
            ensure(*v == rat(mult, 2), || format!("{class} k={k}: {v} ≠ {mult}/2"))?;
        }
        let seg = segre_degree_for(class).map_err(err)?;
        let deg = deg_ll(class).map_err(err)?.deg_ll;
        ensure(seg == BigRational::from_integer(deg.clone()), || format!("{class}: Segre {seg} ≠ {deg}"))?;
    }
    Ok("A1–A10, D4–D10, E6–E8, Ẽ6–Ẽ8 exact; Segre route agrees for Ẽ6–Ẽ8".into())
}

fn criterion_5() -> Outcome {
    let big = |n: u64| BigInt::from(n);
    for mu in 2..=10usize {
        let got = stokes_class_count(S::A(mu)).map_err(err)?;
        let want = BigInt::from(mu + 1).pow(mu as u32 - 2);
        ensure(got == want, || format!("A{mu}: {got} ≠ {want}"))?;
        ensure(gz_order(S::A(mu)).map_err(err)? == 2 * (mu as u64 + 1), || format!("|G_Z(A{mu})|"))?;
    }
    ensure(stokes_class_count(S::D(4)).map_err(err)? == big(9), || "D4".into())?;
    ensure(gz_order(S::D(4)).map_err(err)? == 36, || "|G_Z(D4)|".into())?;
    for mu in 5..=10usize {
        let got = stokes_class_count(S::D(mu)).map_err(err)?;
        let want = BigInt::from(mu - 1).pow(mu as u32 - 1);
        ensure(got == want, || format!("D{mu}: {got} ≠ {want}"))?;
        ensure(gz_order(S::D(mu)).map_err(err)? == 4 * (mu as u64 - 1), || format!("|G_Z(D{mu})|"))?;
    }
    for (class, gz, want) in [(S::E6, 24, 3456u64), (S::E7, 18, 118_098), (S::E8, 30, 2_531_250)] {
        ensure(gz_order(class).map_err(err)? == gz, || format!("|G_Z({class})|"))?;
        let got = stokes_class_count(class).map_err(err)?;
        ensure(got == big(want), || format!("{class}: {got} ≠ {want}"))?;
    }
    for (class, q, want) in [(S::Et6, 324, 76_545u64), (S::Et7, 96, 7_168_000), (S::Et8, 36, 593_744_256)] {
        ensure(quotient_degree(class).map_err(err)? == q, || format!("{class} quotient degree"))?;
        let got = stokes_class_count(class).map_err(err)?;
        ensure(got == big(want), || format!("{class}: {got} ≠ {want}"))?;
    }
    ensure(big(24_800_580) % big(324) == big(0) && big(24_800_580) % big(326) != big(0), || "324 vs 326".into())?;
    Ok("counts and |G_Z| for A, D, E; Ẽ6 324 (not 326) → 76545, Ẽ7 96 → 7168000, Ẽ8 36 → 593744256".into())
}

fn criterion_6() -> Outcome {
    let mut n = 0;
    for class in S::elliptic() {
        for which in ["psi2", "psi3"] {
            let out = check_unfolding_identity(class, which).map_err(err)?;
            ensure(out.passed, || out.to_string())?;
            n += 1;
        }
        let out = check_kappa_extension(class).map_err(err)?;
        ensure(out.passed, || out.to_string())?;
        n += 1;
    }
    for mu in 4..=9 {
        let out = check_simple_symmetry(S::D(mu), "phi2").map_err(err)?;
        ensure(out.passed, || out.to_string())?;
        n += 1;
    }
    let out = check_simple_symmetry(S::D(4), "phi3").map_err(err)?;
    ensure(out.passed, || out.to_string())?;
    n += 1;
    for class in S::elliptic() {
        for d in symmetry_data(class) {
            let out = check_phi_identity(&d);
            ensure(out.passed, || out.to_string())?;
            n += 1;
        }
    }
    Ok(format!("{n} identities exact (ψ2/ψ3, κ-extensions, D-series φ, f∘φ normal-form maps)"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for class in S::catalogue(10) {
        let d = jacobi_dimension(class, &LambdaMode::Symbolic).map_err(err)?;
        ensure(d == class.mu(), || format!("{class}: {d}"))?;
    }
    let mut values = Vec::new();
    while values.len() < 5 {
        let q = rat(rng.gen_range(-50..50), rng.gen_range(1..30));
        if q != rat(0, 1) && q != rat(1, 1) {
            values.push(q);
        }
    }
    for class in S::elliptic() {
        for q in &values {
            let d = jacobi_dimension(class, &LambdaMode::Value(q.clone())).map_err(err)?;
            ensure(d == class.mu(), || format!("{class} at λ = {q}: {d}"))?;
        }
    }
    let shown: Vec<String> = values.iter().map(|q| q.to_string()).collect();
    Ok(format!("μ for all classes up to μ = 10 symbolically; Ẽ at λ ∈ {{{}}}", shown.join(", ")))
}

fn random_target(rng: &mut ChaCha8Rng, mu: usize) -> NumericLLPoint {
    // Roots spread out enough to stay away from the discriminant.
    loop {
        let roots: Vec<C> = (0..mu).map(|_| C::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5))).collect();
        let sep = (0..mu)
            .flat_map(|i| (i + 1..mu).map(move |j| (i, j)))
            .map(|(i, j)| (roots[i] - roots[j]).norm())
            .fold(f64::INFINITY, f64::min);
        if sep > 0.3 {
            return NumericLLPoint::from_roots(&roots);
        }
    }
}

fn criterion_8() -> Outcome {
    let v = vars(&["t1", "t2", "y"]);
    let want = parse_poly("y^2 - 2*t1*y + t1^2 + 4/27*t2^3", Some(&v)).map_err(err)?;
    ensure(ll_polynomial_a(2).map_err(err)? == want, || "A2 closed form".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    for mu in [3usize, 4] {
        let mut done = 0;
        while done < 100 {
            let t: Vec<BigRational> = (0..mu).map(|_| rat(rng.gen_range(-40..40), rng.gen_range(1..10))).collect();
            let p = ll_exact_a(mu, &t).map_err(err)?;
            if discriminant_member(&p) {
                continue;
            }
            let tc: Vec<C> = t.iter().map(|q| C::new(num_traits::ToPrimitive::to_f64(q).unwrap(), 0.0)).collect();
            let crit = critical_values_numeric(S::A(mu), &tc, &NumericConfig::critical()).map_err(err)?;
            let roots = p.roots().map_err(err)?;
            ensure(roots_match(&crit.values, &roots, 1e-10), || format!("A{mu} at {t:?}: {:?} vs {roots:?}", crit.values))?;
            done += 1;
        }
        checked += done;
    }

    let mut fibers = Vec::new();
    for mu in [2usize, 3] {
        let expected = (mu + 1).pow(mu as u32 - 1);
        for _ in 0..3 {
            let p = random_target(&mut rng, mu);
            let r = ll_fiber_count(S::A(mu), &p, &NumericConfig::fiber()).map_err(err)?;
            ensure(r.saturated && r.count == expected, || {
                format!("A{mu}: {} preimages (saturated {}), expected {expected}", r.count, r.saturated)
            })?;
            fibers.push(r.count.to_string());
        }
    }
    Ok(format!("A2 closed form exact; {checked} A3/A4 points to 1e-10; fibers {}", fibers.join(" ")))
}

fn random_word(rng: &mut ChaCha8Rng, mu: usize, len: usize) -> BraidWord {
    BraidWord::new(
        (0..len)
            .map(|_| {
                let g = rng.gen_range(1..mu as i32);
                if rng.gen() { g } else { -g }
            })
            .collect(),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    // Braid relations and inverses on random bases.
    for _ in 0..100 {
        let seed = StokesMatrix::chain(6);
        let t = apply_word(&VanishingTuple::seed(&seed), &random_word(&mut rng, 6, 15)).map_err(err)?;
        let i = rng.gen_range(1..4);
        let l = apply_word(&t, &BraidWord::new(vec![i, i + 1, i])).map_err(err)?;
        let r = apply_word(&t, &BraidWord::new(vec![i + 1, i, i + 1])).map_err(err)?;
        ensure(l == r, || "σiσi+1σi relation".into())?;
        let a = apply_word(&t, &BraidWord::new(vec![i, i + 2])).map_err(err)?;
        let b = apply_word(&t, &BraidWord::new(vec![i + 2, i])).map_err(err)?;
        ensure(a == b, || "far commutation".into())?;
        ensure(braid_apply(&braid_apply(&t, i).map_err(err)?, -i).map_err(err)? == t, || "σσ⁻¹".into())?;
    }
    // Reflections are involutive isometries.
    let form = symmetrized_form(&seed_stokes(S::E6).map_err(err)?.stokes);
    for _ in 0..200 {
        let mut d = vec![BigInt::from(0); 6];
        d[rng.gen_range(0..6)] = BigInt::from(1);
        let a: Vec<BigInt> = (0..6).map(|_| BigInt::from(rng.gen_range(-5..6))).collect();
        let b: Vec<BigInt> = (0..6).map(|_| BigInt::from(rng.gen_range(-5..6))).collect();
        let sa = pl_reflect(&form, &d, &a).map_err(err)?;
        let sb = pl_reflect(&form, &d, &b).map_err(err)?;
        ensure(pl_reflect(&form, &d, &sa).map_err(err)? == a, || "involution".into())?;
        ensure(form.0.pair(&sa, &sb) == form.0.pair(&a, &b), || "isometry".into())?;
    }
    // Monodromy is invariant under braid moves, for simple and elliptic seeds.
    for class in [S::D(5), S::E7, S::Et7] {
        let seed = seed_stokes(class).map_err(err)?.stokes;
        let m = monodromy_from_stokes(&seed);
        for _ in 0..20 {
            let t = apply_word(&VanishingTuple::seed(&seed), &random_word(&mut rng, class.mu(), 25)).map_err(err)?;
            ensure(monodromy_product(t.form(), t.vectors()).map_err(err)? == m, || format!("{class} monodromy"))?;
        }
    }
    // Coxeter orders.
    for mu in 1..=12usize {
        let m = monodromy_from_stokes(&StokesMatrix::chain(mu));
        let order = m.0.multiplicative_order(100);
        ensure(order == Some(mu as u64 + 1), || format!("A{mu}: order {order:?}"))?;
    }
    // Stokes entries of reachable states: {0, ±1} for ADE (the whole E6 orbit), {0, ±1, ±2} for Ẽ.
    let e6 = seed_stokes(S::E6).map_err(err)?.stokes;
    let (_, states) = enumerate_states(&e6, &OrbitConfig::new(OrbitMode::Stokes)).map_err(err)?;
    for k in 0..states.len() {
        ensure(states.stokes(k).max_offdiag() <= BigInt::from(1), || "E6 entry bound".into())?;
    }
    for class in [S::D(6), S::E7, S::E8, S::Et6, S::Et7, S::Et8] {
        let bound = BigInt::from(if class.is_elliptic() { 2 } else { 1 });
        let seed = seed_stokes(class).map_err(err)?.stokes;
        for _ in 0..40 {
            let t = apply_word(&VanishingTuple::seed(&seed), &random_word(&mut rng, class.mu(), 30)).map_err(err)?;
            let s = stokes_of_tuple(&t).map_err(err)?;
            ensure(s.max_offdiag() <= bound, || format!("{class}: entry {}", s.max_offdiag()))?;
        }
    }
    // Seed validation: definite for ADE, semidefinite with radical rank 2 for Ẽ.
    for class in S::catalogue(8) {
        let f = symmetrized_form(&seed_stokes(class).map_err(err)?.stokes);
        let ok = if class.is_elliptic() {
            is_positive_semidefinite(&f) && radical_rank(&f) == 2
        } else {
            is_positive_definite(&f) && radical_rank(&f) == 0
        };
        ensure(ok, || format!("{class} seed form"))?;
    }
    let affine = r#"{"class":"A3","mu":3,"upper":[[-1,-1],[-1]],"source":""}"#;
    ensure(parse_seed(affine, None, Provenance::Embedded).is_err(), || "affine seed accepted".into())?;
    Ok(format!("braid relations, reflections, monodromy, Coxeter orders, entry bounds ({} E6 states), seeds", states.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        (1, "A-series orbit counts", 10, criterion_1),
        (2, "D4 tensor seed orbit counts", 30, criterion_2),
        (3, "E6 orbit counts (and extended targets)", 300, criterion_3),
        (4, "degree formulas and Segre route", 10, criterion_4),
        (5, "Stokes-class count tables", 10, criterion_5),
        (6, "symbolic identity suite", 120, criterion_6),
        (7, "Jacobi dimensions", 60, criterion_7),
        (8, "LL exactness and fiber counts", 300, criterion_8),
        (9, "property suites", 120, criterion_9),
    ];
    let mut failed = 0;
    for (id, title, limit, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let within = elapsed <= Duration::from_secs(limit) || extended();
        let (status, detail) = match result {
            Ok(d) if within => ("PASS", d),
            Ok(d) => ("FAIL", format!("over the {limit}s limit: {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {id} {status} {title} [{:.1}s/{limit}s]: {detail}", elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
