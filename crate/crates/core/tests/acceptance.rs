//! Acceptance run: one pass/fail line per criterion, each within its
//! runtime budget. Exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zero_density::claims::{run_all, Verdict, CLAIM_COUNT};
use zero_density::exponent::{
    closed_form_bound, crossover, default_registry, default_width, envelope, max_form_bound, u_ell,
    v_ell, EtaInterval, HypothesisMode, MuTable, Root,
};
use zero_density::numerics::{
    check_asymptotic, chi, count_zeros, empirical_n_sigma_t, riemann_siegel_z, rvm_main_term, zeta,
    Certificate, ComplexPoint,
};
use zero_density::rational::{inv_pow2, rat, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_eta(rng: &mut ChaCha8Rng, hi: &Rational) -> Rational {
    let k: i64 = rng.gen_range(1..1_000_000);
    hi * rat(k, 1_000_000)
}

fn claims_all_exact() -> Outcome {
    let res = run_all(&default_registry(), &MuTable::hardy_littlewood());
    ensure(res.len() == CLAIM_COUNT, || format!("{} claims", res.len()))?;
    for r in &res {
        ensure(r.verdict == Verdict::ExactPass, || r.summary_line())?;
    }
    Ok(format!("{CLAIM_COUNT} claims ExactPass"))
}

fn exact_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let hl = MuTable::hardy_littlewood();
    for ell in 2..=20u32 {
        for _ in 0..50 {
            let eta = random_eta(&mut rng, &inv_pow2(ell));
            let a = max_form_bound(ell, &eta, &hl).map_err(|e| e.to_string())?;
            let b = closed_form_bound(ell, &eta).map_err(|e| e.to_string())?;
            ensure(a == b, || {
                format!("collapse fails at l = {ell}, eta = {eta}")
            })?;
        }
    }
    for _ in 0..1000 {
        let ell: u32 = rng.gen_range(1..=30);
        let eta = random_eta(&mut rng, &inv_pow2(ell));
        let v = v_ell(ell, &eta, &hl).map_err(|e| e.to_string())?;
        let u = u_ell(ell - 1, &(rat(2, 1) * &eta), &hl).map_err(|e| e.to_string())?;
        ensure(v == u, || {
            format!("v/u identity fails at l = {ell}, eta = {eta}")
        })?;
    }
    let recs = default_registry();
    let env = envelope(&recs, &EtaInterval::full()).map_err(|e| e.to_string())?;
    for seg in &env.segments {
        for x in EtaInterval::open(seg.lo.clone(), seg.hi.clone()).interior_samples(10) {
            let w = seg.expr.value(&x, 128).map_err(|e| e.to_string())?;
            for r in recs.iter().filter(|r| r.is_valid_at(&x)) {
                let o = r.value_bits(&x, 128).map_err(|e| e.to_string())?;
                ensure(w.lo() <= o.hi(), || {
                    format!("{} beats {} at {x}", r.name, seg.winner)
                })?;
            }
        }
    }
    let mut roots = 0;
    for (i, a) in recs.iter().enumerate() {
        for b in &recs[i + 1..] {
            if a.validity.intersect(&b.validity).is_empty() {
                continue;
            }
            let c = crossover(a, b, &EtaInterval::full(), &default_width())
                .map_err(|e| e.to_string())?;
            for r in c.roots() {
                if let Root::Exact(x) = r {
                    ensure(a.eval_exact(x).ok() == b.eval_exact(x).ok(), || {
                        format!("{} and {} differ at root {x}", a.name, b.name)
                    })?;
                    roots += 1;
                }
            }
        }
    }
    Ok(format!(
        "collapse 19x50, v/u 1000, {} segments sound, {roots} exact roots back-substituted",
        env.segments.len()
    ))
}

fn zeta_cross_validation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let t: f64 = rng.gen_range(10.0..10_000.0);
        let z = riemann_siegel_z(t).map_err(|e| e.to_string())?.abs();
        let s = ComplexPoint::new(0.5, t).map_err(|e| e.to_string())?;
        let w = zeta(s).map_err(|e| e.to_string())?.norm();
        worst = worst.max((z - w).abs());
        ensure((z - w).abs() <= 1e-6, || {
            format!("t = {t}: |Z| = {z}, |zeta| = {w}")
        })?;
    }
    let mut worst_fe: f64 = 0.0;
    for _ in 0..20 {
        let re: f64 = rng.gen_range(0.05..0.95);
        let im: f64 = rng.gen_range(10.0..1000.0);
        let s = ComplexPoint::new(re, im).map_err(|e| e.to_string())?;
        let r = ComplexPoint::new(1.0 - re, -im).map_err(|e| e.to_string())?;
        let lhs = zeta(s).map_err(|e| e.to_string())?;
        let rhs = chi(s.to_complex()) * zeta(r).map_err(|e| e.to_string())?;
        let res = (lhs - rhs).norm() / lhs.norm().max(1.0);
        worst_fe = worst_fe.max(res);
        ensure(res <= 1e-8, || format!("residual {res:e} at {re} + {im}i"))?;
    }
    Ok(format!(
        "max ||Z| - |zeta|| = {worst:.1e}, max residual = {worst_fe:.1e}"
    ))
}

fn zero_counting() -> Outcome {
    let mut parts = Vec::new();
    for t in [100.0, 500.0, 1000.0, 2000.0] {
        let r = count_zeros(t, 0.05).map_err(|e| e.to_string())?;
        let d = r.sign_change_count as f64 - rvm_main_term(t);
        ensure(d.abs() <= 2.0, || format!("T = {t}: discrepancy {d}"))?;
        if t == 100.0 {
            ensure(r.sign_change_count == 29, || {
                format!("N(100) = {}", r.sign_change_count)
            })?;
        }
        parts.push(format!("N({t}) = {}", r.sign_change_count));
    }
    let c = empirical_n_sigma_t(0.75, 500.0).map_err(|e| e.to_string())?;
    ensure(
        c.value == 0 && c.certificate == Certificate::Certified,
        || format!("N(0.75, 500) = {} ({:?})", c.value, c.certificate),
    )?;
    parts.push("N(0.75, 500) = 0 certified".into());
    Ok(parts.join(", "))
}

fn asymptotic_trend() -> Outcome {
    let rows = check_asymptotic(&[100.0, 300.0, 1000.0, 3000.0]).map_err(|e| e.to_string())?;
    for w in rows.windows(2) {
        ensure(w[0].1 < w[1].1, || {
            format!("ratio drops from T = {} to {}", w[0].0, w[1].0)
        })?;
    }
    for (t, r) in &rows {
        ensure(*r < 1.0, || format!("ratio {r} >= 1 at T = {t}"))?;
    }
    Ok(rows
        .iter()
        .map(|(t, r)| format!("{t}: {r:.4}"))
        .collect::<Vec<_>>()
        .join(", "))
}

fn hypothesis_modes() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(316);
    let t = MuTable::hardy_littlewood()
        .with_override(rat(1, 2), rat(3, 16))
        .map_err(|e| e.to_string())?;
    for _ in 0..100 {
        let eta = random_eta(&mut rng, &rat(1, 2));
        let got = max_form_bound(1, &eta, &t).map_err(|e| e.to_string())?;
        let want = rat(3, 2) / (Rational::one() - rat(2, 1) * &eta);
        ensure(got == want, || format!("mu(1/2) = 3/16 differs at {eta}"))?;
    }
    let lh = MuTable::hardy_littlewood().with_mode(HypothesisMode::Lindelof);
    for _ in 0..100 {
        let eta = random_eta(&mut rng, &rat(1, 4));
        let got = max_form_bound(2, &eta, &lh).map_err(|e| e.to_string())?;
        ensure(got.is_zero(), || {
            format!("Lindelof l = 2 bound {got} at {eta}")
        })?;
    }
    Ok("100 + 100 random eta exact".into())
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("claims verify", Duration::from_secs(1), claims_all_exact),
        (
            "exact property suite",
            Duration::from_secs(10),
            exact_properties,
        ),
        (
            "zeta cross-validation",
            Duration::from_secs(30),
            zeta_cross_validation,
        ),
        ("zero counting", Duration::from_secs(120), zero_counting),
        (
            "zero-count asymptotic trend",
            Duration::from_secs(120),
            asymptotic_trend,
        ),
        ("hypothesis modes", Duration::from_secs(1), hypothesis_modes),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if took <= *budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {took:.2?}, budget {budget:?}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {status} [{:.2?}] {name}: {detail}",
            i + 1,
            took
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
