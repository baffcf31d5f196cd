use num_traits::{One, Zero};
use proptest::prelude::*;
use zero_density::exponent::{
    closed_form_bound, crossover, default_registry, default_width, dh_break_range, envelope,
    max_form_bound, records_for, u_ell, v_ell, BoundExpr, BoundId, EtaInterval, HypothesisMode,
    MuTable, Root,
};
use zero_density::rational::{inv_pow2, rat, Rational};

/// A rational strictly inside (0, hi) with denominator up to 10^6.
fn eta_below(hi: Rational) -> impl Strategy<Value = Rational> {
    (1i64..1_000_000).prop_map(move |k| &hi * rat(k, 1_000_000))
}

fn any_eta() -> impl Strategy<Value = Rational> {
    eta_below(rat(1, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn collapse_to_closed_form(ell in 2u32..=20, k in 1i64..1_000_000) {
        let eta = inv_pow2(ell) * rat(k, 1_000_000);
        let hl = MuTable::hardy_littlewood();
        prop_assert_eq!(max_form_bound(ell, &eta, &hl).unwrap(), closed_form_bound(ell, &eta).unwrap());
    }

    #[test]
    fn l1_collapse(eta in any_eta()) {
        let hl = MuTable::hardy_littlewood();
        let want = rat(3, 2) / (Rational::one() - rat(2, 1) * &eta);
        prop_assert_eq!(max_form_bound(1, &eta, &hl).unwrap(), want);
    }

    #[test]
    fn v_is_shifted_u(ell in 1u32..=30, k in 0i64..1_000_000) {
        let eta = inv_pow2(ell) * rat(k, 1_000_000);
        for table in [MuTable::hardy_littlewood(), MuTable::hardy_littlewood().with_mode(HypothesisMode::Lindelof)] {
            let v = v_ell(ell, &eta, &table).unwrap();
            let u = u_ell(ell - 1, &(rat(2, 1) * &eta), &table).unwrap();
            prop_assert_eq!(v, u);
        }
    }

    #[test]
    fn lindelof_kills_l2(eta in eta_below(rat(1, 4))) {
        let lh = MuTable::hardy_littlewood().with_mode(HypothesisMode::Lindelof);
        prop_assert!(max_form_bound(2, &eta, &lh).unwrap().is_zero());
    }

    #[test]
    fn three_sixteenths_reproduces_l1(eta in any_eta()) {
        let t = MuTable::hardy_littlewood().with_override(rat(1, 2), rat(3, 16)).unwrap();
        let want = rat(3, 2) / (Rational::one() - rat(2, 1) * &eta);
        prop_assert_eq!(max_form_bound(1, &eta, &t).unwrap(), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn envelope_winner_is_minimal(sel in proptest::sample::subsequence(BoundId::ALL.to_vec(), 1..=6)) {
        let recs = records_for(&sel);
        let env = envelope(&recs, &EtaInterval::full()).unwrap();
        let mut all = recs.clone();
        all.extend(records_for(&[BoundId::Trivial]));
        for seg in &env.segments {
            let piece = EtaInterval::open(seg.lo.clone(), seg.hi.clone());
            for x in piece.interior_samples(10) {
                let w = seg.expr.value(&x, 128).unwrap();
                for r in all.iter().filter(|r| r.is_valid_at(&x)) {
                    let o = r.value_bits(&x, 128).unwrap();
                    prop_assert!(w.lo() <= o.hi(), "{} beats {} at {}", r.name, seg.winner, x);
                }
            }
        }
    }
}

#[test]
fn crossover_back_substitution() {
    let recs = default_registry();
    let mut exact = 0;
    for (i, a) in recs.iter().enumerate() {
        for b in &recs[i + 1..] {
            if a.validity.intersect(&b.validity).is_empty() {
                continue;
            }
            let c = crossover(a, b, &EtaInterval::full(), &default_width()).unwrap();
            for r in c.roots() {
                match r {
                    Root::Exact(x) => {
                        assert_eq!(a.eval_exact(x).unwrap(), b.eval_exact(x).unwrap());
                        exact += 1;
                    }
                    Root::Isolated { lo, hi } => {
                        assert!(hi - lo <= default_width());
                        let d = |x: &Rational| a.expr.approx(x_f(x)) - b.expr.approx(x_f(x));
                        assert!(d(lo) * d(hi) <= 0.0, "{} / {}", a.name, b.name);
                    }
                }
            }
        }
    }
    assert!(exact >= 5);
}

fn x_f(x: &Rational) -> f64 {
    zero_density::rational::to_f64(x)
}

#[test]
fn linear_fractional_records_are_monotone() {
    for r in default_registry() {
        if let BoundExpr::LinearFractional { .. } = r.expr {
            let m = r.expr.monotonicity();
            let xs = r.validity.interior_samples(20);
            let vals: Vec<Rational> = xs.iter().map(|x| r.eval_exact(x).unwrap()).collect();
            for w in vals.windows(2) {
                match m {
                    1 => assert!(w[0] < w[1], "{}", r.name),
                    -1 => assert!(w[0] > w[1], "{}", r.name),
                    _ => assert_eq!(w[0], w[1], "{}", r.name),
                }
            }
        }
    }
}

#[test]
fn max_form_records_increase() {
    let hl = MuTable::hardy_littlewood();
    for ell in 1..=20 {
        let r = zero_density::exponent::max_form_record(ell, &hl).unwrap();
        assert_eq!(r.expr.monotonicity(), 1, "l = {ell}");
    }
}

#[test]
fn dh_threshold_consistency() {
    for r in default_registry() {
        let d = dh_break_range(&r).unwrap();
        let Some(range) = d.range else { continue };
        for x in range.interior_samples(10) {
            assert!(r.value(&x).unwrap().hi() <= &rat(2, 1), "{}", r.name);
        }
        if d.exact && r.validity.interior_contains(&range.hi) {
            assert_eq!(r.eval_exact(&range.hi).unwrap(), rat(2, 1), "{}", r.name);
        }
    }
}

#[test]
fn envelope_single_record_is_itself() {
    let recs = records_for(&[BoundId::MaxFormL2]);
    let env = envelope(&recs, &EtaInterval::open(Rational::zero(), rat(1, 8))).unwrap();
    assert_eq!(env.segments.len(), 1);
    assert_eq!(env.segments[0].winner, "MaxForm-l2");
}

#[test]
fn envelope_l1_against_trivial() {
    let recs = records_for(&[BoundId::MaxFormL1]);
    let env = envelope(&recs, &EtaInterval::open(Rational::zero(), rat(1, 2))).unwrap();
    let names: Vec<&str> = env.segments.iter().map(|s| s.winner.as_str()).collect();
    assert_eq!(names, ["MaxForm-l1", "Trivial"]);
    assert_eq!(env.segments[0].hi, rat(2, 7));
}
