use num_bigint::BigInt;
use proptest::prelude::*;
use stokeslab::braid::{
    apply_word, braid_apply, enumerate_states, orbit_enumerate, sign_canonical_stokes,
    sign_canonical_tuple, sign_conjugate, stokes_of_tuple, BraidWord, OrbitConfig, OrbitMode,
    TruncationReason, VanishingTuple,
};
use stokeslab::lattice::{monodromy_from_stokes, monodromy_product, IntMatrix, StokesMatrix};

fn v(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn d4() -> StokesMatrix {
    let a = StokesMatrix::chain(2);
    StokesMatrix::new(a.matrix().kron(a.matrix())).unwrap()
}

/// Lex-min over all 2^(μ−1) conjugates, the definition of the canonical form.
fn brute_canonical(s: &StokesMatrix) -> StokesMatrix {
    let mu = s.mu();
    let key = |m: &StokesMatrix| {
        let mut k = Vec::new();
        for i in 0..mu {
            for j in i + 1..mu {
                k.push(m.entry(i, j).clone());
            }
        }
        k
    };
    (0u32..1 << (mu - 1))
        .map(|mask| {
            let eps: Vec<bool> = (0..mu).map(|k| k > 0 && mask >> (k - 1) & 1 == 1).collect();
            sign_conjugate(s, &eps)
        })
        .min_by_key(key)
        .unwrap()
}

#[test]
fn a2_generator_example() {
    let s = StokesMatrix::chain(2);
    let t = braid_apply(&VanishingTuple::seed(&s), 1).unwrap();
    assert_eq!(t.vectors(), &[v(&[0, 1]), v(&[1, 1])]);
    let st = stokes_of_tuple(&t).unwrap();
    assert_eq!(st, StokesMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap());
    assert_eq!(sign_canonical_stokes(&st).unwrap(), s);
}

#[test]
fn a2_full_twist_power() {
    let s = StokesMatrix::chain(2);
    let t = apply_word(&VanishingTuple::seed(&s), &BraidWord::new(vec![1, 1, 1])).unwrap();
    assert_eq!(t.vectors(), &[v(&[-1, 0]), v(&[0, 1])]);
    assert_eq!(sign_canonical_tuple(&t), VanishingTuple::seed(&s));
}

#[test]
fn generator_range_is_checked() {
    let t = VanishingTuple::seed(&StokesMatrix::chain(3));
    assert!(braid_apply(&t, 0).is_err());
    assert!(braid_apply(&t, 3).is_err());
    assert!(braid_apply(&t, -3).is_err());
    assert!(braid_apply(&t, -2).is_ok());
}

#[test]
fn braid_relation_on_a3_seed() {
    let t = VanishingTuple::seed(&StokesMatrix::chain(3));
    let l = apply_word(&t, &BraidWord::new(vec![1, 2, 1])).unwrap();
    let r = apply_word(&t, &BraidWord::new(vec![2, 1, 2])).unwrap();
    assert_eq!(l, r);
}

#[test]
fn seed_tuple_reproduces_seed() {
    for s in [StokesMatrix::chain(4), d4()] {
        assert_eq!(stokes_of_tuple(&VanishingTuple::seed(&s)).unwrap(), s);
    }
}

#[test]
fn tuple_validation() {
    let s = StokesMatrix::chain(2);
    assert!(VanishingTuple::new(&s, vec![v(&[1, 0]), v(&[1, 1])]).is_ok());
    assert!(VanishingTuple::new(&s, vec![v(&[1, 0]), v(&[1, 0])]).is_err());
    assert!(VanishingTuple::new(&s, vec![v(&[2, 0]), v(&[0, 1])]).is_err());
}

#[test]
fn canonical_tuple_examples() {
    let s = StokesMatrix::chain(2);
    let seed = VanishingTuple::seed(&s);
    for (a, b) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
        let t = VanishingTuple::new(&s, vec![v(&[a, 0]), v(&[0, b])]).unwrap();
        assert_eq!(sign_canonical_tuple(&t), seed);
    }
    assert_eq!(sign_canonical_tuple(&seed), seed);
}

#[test]
fn canonical_stokes_examples() {
    let s = StokesMatrix::from_rows(&[vec![1, 1], vec![0, 1]]).unwrap();
    assert_eq!(sign_canonical_stokes(&s).unwrap(), StokesMatrix::chain(2));
    assert_eq!(sign_canonical_stokes(&StokesMatrix::chain(5)).unwrap(), StokesMatrix::chain(5));
    let block = StokesMatrix::new(IntMatrix::identity(3)).unwrap();
    assert!(sign_canonical_stokes(&block).is_err());
}

#[test]
fn braid_word_parsing() {
    let w: BraidWord = "[1, -2, 3]".parse().unwrap();
    assert_eq!(w.letters, vec![1, -2, 3]);
    assert_eq!("1,-2,3".parse::<BraidWord>().unwrap(), w);
    assert_eq!(w.inverse().letters, vec![-3, 2, -1]);
    assert!("1,x".parse::<BraidWord>().is_err());
    assert_eq!(w.to_string(), "[1,-2,3]");
}

#[test]
fn a_chain_orbit_counts() {
    for mu in 1..=5u32 {
        let s = StokesMatrix::chain(mu as usize);
        let bases = orbit_enumerate(&s, &OrbitConfig::new(OrbitMode::Bases)).unwrap();
        let stokes = orbit_enumerate(&s, &OrbitConfig::new(OrbitMode::Stokes)).unwrap();
        let expect_bases = (mu as u64 + 1).pow(mu.saturating_sub(1));
        let expect_stokes = if mu == 1 { 1 } else { (mu as u64 + 1).pow(mu - 2) };
        assert_eq!((bases.count, bases.truncated), (expect_bases, false), "A_{mu} bases");
        assert_eq!((stokes.count, stokes.truncated), (expect_stokes, false), "A_{mu} stokes");
        assert_eq!(bases.visited, bases.count);
    }
}

#[test]
fn d4_tensor_orbit_counts() {
    let s = d4();
    assert_eq!(orbit_enumerate(&s, &OrbitConfig::new(OrbitMode::Bases)).unwrap().count, 162);
    assert_eq!(orbit_enumerate(&s, &OrbitConfig::new(OrbitMode::Stokes)).unwrap().count, 9);
}

#[test]
fn orbit_is_deterministic_across_job_counts() {
    let s = StokesMatrix::chain(5);
    let cfg = OrbitConfig::new(OrbitMode::Bases);
    let (_, one) = enumerate_states(&s, &cfg.clone().jobs(1)).unwrap();
    let (_, two) = enumerate_states(&s, &cfg.jobs(2)).unwrap();
    assert!(one.keys().eq(two.keys()));
}

#[test]
fn state_budget_truncates() {
    let r = orbit_enumerate(&StokesMatrix::chain(5), &OrbitConfig::new(OrbitMode::Bases).budget_states(100))
        .unwrap();
    assert!(r.truncated);
    assert_eq!(r.count, 100);
    assert_eq!(r.reason, Some(TruncationReason::StateBudget));
}

#[test]
fn memory_budget_truncates() {
    let r = orbit_enumerate(&StokesMatrix::chain(5), &OrbitConfig::new(OrbitMode::Bases).budget_mem(4096))
        .unwrap();
    assert!(r.truncated);
    assert_eq!(r.reason, Some(TruncationReason::MemoryBudget));
    assert!(r.count < 1296);
}

#[test]
fn exact_budget_is_not_truncation() {
    let r = orbit_enumerate(&StokesMatrix::chain(4), &OrbitConfig::new(OrbitMode::Bases).budget_states(125))
        .unwrap();
    assert_eq!((r.count, r.truncated), (125, false));
}

#[test]
fn disconnected_seed_rejected() {
    let s = StokesMatrix::new(IntMatrix::identity(2)).unwrap();
    assert!(orbit_enumerate(&s, &OrbitConfig::new(OrbitMode::Stokes)).is_err());
}

#[test]
fn stokes_states_reached_from_tuples_agree() {
    // Every Stokes-mode state of A_4 is the canonical Stokes matrix of some basis-mode state.
    let s = StokesMatrix::chain(4);
    let (_, bases) = enumerate_states(&s, &OrbitConfig::new(OrbitMode::Bases)).unwrap();
    let (_, stokes) = enumerate_states(&s, &OrbitConfig::new(OrbitMode::Stokes)).unwrap();
    let mut from_bases = std::collections::BTreeSet::new();
    for k in 0..bases.len() {
        let vecs = bases.tuple(k).into_iter().map(|r| v(&r)).collect();
        let t = VanishingTuple::new(&s, vecs).unwrap();
        from_bases.insert(sign_canonical_stokes(&stokes_of_tuple(&t).unwrap()).unwrap().upper());
    }
    let direct: std::collections::BTreeSet<_> = (0..stokes.len()).map(|k| stokes.stokes(k).upper()).collect();
    assert_eq!(from_bases, direct);
}

#[test]
fn checkpoint_resume_reaches_same_count() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a5.ckpt");
    let s = StokesMatrix::chain(5);
    let mut cfg = OrbitConfig::new(OrbitMode::Bases).budget_states(300);
    cfg.checkpoint = Some(path.clone());
    let partial = orbit_enumerate(&s, &cfg).unwrap();
    assert!(partial.truncated);
    let mut resume = OrbitConfig::new(OrbitMode::Bases);
    resume.resume = Some(path);
    let full = orbit_enumerate(&s, &resume).unwrap();
    assert_eq!((full.count, full.truncated), (1296, false));
    let mut wrong = OrbitConfig::new(OrbitMode::Stokes);
    wrong.resume = cfg.checkpoint.clone();
    assert!(orbit_enumerate(&s, &wrong).is_err());
}

#[test]
fn report_json_shape() {
    let r = orbit_enumerate(&StokesMatrix::chain(3), &OrbitConfig::new(OrbitMode::Stokes).label("A3")).unwrap();
    let j = serde_json::to_value(&r).unwrap();
    assert_eq!(j["class"], "A3");
    assert_eq!(j["mode"], "stokes");
    assert_eq!(j["count"], 4);
    assert_eq!(j["truncated"], false);
    assert!(j.get("visited").is_some() && j.get("seconds").is_some());
}

fn word_strategy(mu: usize, len: usize) -> impl Strategy<Value = Vec<i32>> {
    let m = mu as i32 - 1;
    prop::collection::vec((1..=m, any::<bool>()).prop_map(|(i, s)| if s { i } else { -i }), 0..len)
}

proptest! {
    #[test]
    fn generators_are_mutually_inverse(w in word_strategy(5, 12), g in 1i32..5, sign in any::<bool>()) {
        let t = apply_word(&VanishingTuple::seed(&d4_or_chain(5)), &BraidWord::new(w)).unwrap();
        let g = if sign { g } else { -g };
        prop_assert_eq!(braid_apply(&braid_apply(&t, g).unwrap(), -g).unwrap(), t);
    }

    #[test]
    fn braid_relations_hold(w in word_strategy(5, 10), i in 1i32..4) {
        let t = apply_word(&VanishingTuple::seed(&StokesMatrix::chain(5)), &BraidWord::new(w)).unwrap();
        let l = apply_word(&t, &BraidWord::new(vec![i, i + 1, i])).unwrap();
        let r = apply_word(&t, &BraidWord::new(vec![i + 1, i, i + 1])).unwrap();
        prop_assert_eq!(l, r);
        if i + 2 <= 4 {
            let a = apply_word(&t, &BraidWord::new(vec![i, i + 2])).unwrap();
            let b = apply_word(&t, &BraidWord::new(vec![i + 2, i])).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn monodromy_is_braid_invariant(w in word_strategy(4, 15)) {
        let s = d4();
        let t = apply_word(&VanishingTuple::seed(&s), &BraidWord::new(w)).unwrap();
        prop_assert_eq!(monodromy_product(t.form(), t.vectors()).unwrap(), monodromy_from_stokes(&s));
    }

    #[test]
    fn reachable_stokes_matrices_are_shaped(w in word_strategy(5, 20)) {
        let s = StokesMatrix::chain(5);
        let t = apply_word(&VanishingTuple::seed(&s), &BraidWord::new(w)).unwrap();
        let st = stokes_of_tuple(&t).unwrap();
        prop_assert!(st.max_offdiag() <= BigInt::from(1));
    }

    #[test]
    fn canonical_stokes_matches_brute_force(w in word_strategy(4, 12), mask in 0u32..16) {
        let s = d4();
        let t = apply_word(&VanishingTuple::seed(&s), &BraidWord::new(w)).unwrap();
        let st = stokes_of_tuple(&t).unwrap();
        let eps: Vec<bool> = (0..4).map(|k| mask >> k & 1 == 1).collect();
        let c = sign_canonical_stokes(&st).unwrap();
        prop_assert_eq!(&c, &brute_canonical(&st));
        prop_assert_eq!(&sign_canonical_stokes(&sign_conjugate(&st, &eps)).unwrap(), &c);
        prop_assert_eq!(sign_canonical_stokes(&c).unwrap(), c);
    }

    #[test]
    fn canonical_tuple_is_idempotent_and_sign_invariant(w in word_strategy(4, 12), mask in 0u32..16) {
        let s = StokesMatrix::chain(4);
        let t = apply_word(&VanishingTuple::seed(&s), &BraidWord::new(w)).unwrap();
        let flipped: Vec<Vec<BigInt>> = t.vectors().iter().enumerate()
            .map(|(k, x)| if mask >> k & 1 == 1 { x.iter().map(|y| -y).collect() } else { x.clone() })
            .collect();
        let f = VanishingTuple::new(&s, flipped).unwrap();
        let c = sign_canonical_tuple(&t);
        prop_assert_eq!(&sign_canonical_tuple(&f), &c);
        prop_assert_eq!(sign_canonical_tuple(&c), c.clone());
    }
}

fn d4_or_chain(mu: usize) -> StokesMatrix {
    if mu == 4 { d4() } else { StokesMatrix::chain(mu) }
}
