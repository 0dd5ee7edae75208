//! Acceptance suite. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p requitable-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use requitable_core::classic::{
    balanced_chi, balanced_chi_star, balanced_feasible, lam_chi, lin_chang_chi_star, wu_chi,
    wu_chi_star, wu_equitable_feasible, BalancedInstance,
};
use requitable_core::oracle::{nondecreasing_tuples, oracle_feasible};
use requitable_core::{
    build_coloring, chromatic_number, chromatic_threshold, feasible, feasible_full,
    feasible_missing, verify_coloring, EquityQuery, Error, FeasibilityWitness, PartiteSizes,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(r: u64, k: u64) -> EquityQuery {
    EquityQuery::new(r, k).unwrap()
}

fn sizes(v: &[u64]) -> PartiteSizes {
    PartiteSizes::new(v.to_vec()).unwrap()
}

/// t ∈ {2,3}, 1 ≤ n_1 ≤ … ≤ n_t ≤ 6.
fn grid() -> Vec<PartiteSizes> {
    (2..=3)
        .flat_map(|t| nondecreasing_tuples(t, 6))
        .map(|v| PartiteSizes::new(v).unwrap())
        .collect()
}

const GRID_R: std::ops::RangeInclusive<u64> = 0..=3;
const GRID_K: std::ops::RangeInclusive<u64> = 1..=14;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let s = sizes(&[3, 5, 7]);
    let mut verdicts = Vec::new();
    for k in 1..=40 {
        verdicts.push((
            k,
            feasible_missing(&s, q(2, k)),
            feasible_full(&s, q(2, k)).is_some(),
            feasible(&s, q(2, k)).is_some(),
        ));
    }
    let chi = chromatic_number(&s, 2);
    let chistar = chromatic_threshold(&s, 2);
    let elapsed = start.elapsed();

    for (k, missing, full, any) in verdicts {
        ensure(missing == (k >= 10), || {
            format!("feasible_missing wrong at k={k}")
        })?;
        ensure(full == (4..=15).contains(&k), || {
            format!("feasible_full wrong at k={k}")
        })?;
        ensure(any == (k >= 4), || format!("feasible wrong at k={k}"))?;
    }
    ensure(chi == 4, || format!("chromatic_number = {chi}, want 4"))?;
    ensure(chistar == Ok(4), || {
        format!("chromatic_threshold = {chistar:?}, want 4")
    })?;
    ensure(elapsed < Duration::from_millis(1), || {
        format!("took {elapsed:?}, budget 1 ms")
    })?;
    Ok(format!(
        "K_{{3,5,7}} r=2: missing k>=10, full 4..=15, chi=4, chi*=4 in {elapsed:?}"
    ))
}

fn k33() -> Outcome {
    let s = sizes(&[3, 3]);
    ensure(feasible(&s, q(1, 2)).is_some(), || {
        "not feasible at k=2".into()
    })?;
    ensure(feasible(&s, q(1, 3)).is_none(), || "feasible at k=3".into())?;
    ensure(
        wu_equitable_feasible(&s, 2) && !wu_equitable_feasible(&s, 3),
        || "Wu disagrees".into(),
    )?;
    let thr = chromatic_threshold(&s, 1).map_err(|e| e.to_string())?;
    ensure(thr == 4, || format!("threshold {thr}, want 4"))?;
    let scan: Vec<bool> = (1..=8)
        .map(|k| oracle_feasible(&s, q(1, k)).unwrap().verdict)
        .collect();
    let expected = [false, true, false, true, true, true, true, true];
    ensure(scan == expected, || format!("oracle scan {scan:?}"))?;
    Ok("K_{3,3} r=1: k=2 yes, k=3 no, chi*=4, oracle scan k=1..8 agrees".into())
}

fn oracle_grid() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for s in grid() {
        for r in GRID_R {
            for k in GRID_K {
                let formula = feasible(&s, q(r, k)).is_some();
                let oracle = oracle_feasible(&s, q(r, k))
                    .map_err(|e| e.to_string())?
                    .verdict;
                ensure(formula == oracle, || {
                    format!("{s} r={r} k={k}: formula {formula}, oracle {oracle}")
                })?;
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}, budget 60 s")
    })?;
    Ok(format!(
        "{checked} instances agree with the oracle in {elapsed:?}"
    ))
}

fn r1_equivalence() -> Outcome {
    let mut checked = 0;
    for s in grid() {
        let chi = chromatic_number(&s, 1);
        let (wu, lam) = (wu_chi(&s), lam_chi(&s));
        ensure(chi == wu && wu == lam, || {
            format!("{s}: chi={chi} wu={wu} lam={lam}")
        })?;
        let thr = chromatic_threshold(&s, 1).unwrap();
        let wu_star = wu_chi_star(&s);
        ensure(thr == wu_star, || format!("{s}: chi*={thr} wu*={wu_star}"))?;
        checked += 1;
    }
    Ok(format!(
        "{checked} instances: chi(r=1) = wu_chi = lam_chi and chi*(r=1) = wu_chi_star"
    ))
}

fn balanced() -> Outcome {
    let mut checked = 0;
    for t in 2..=4u64 {
        for n in 1..=6u64 {
            let b = BalancedInstance::new(t, n).unwrap();
            let s = b.to_sizes();
            for r in 0..=3u64 {
                for k in t..=20 {
                    let balanced_form = balanced_feasible(b, q(r, k));
                    let general = feasible(&s, q(r, k)).is_some();
                    ensure(balanced_form == general, || {
                        format!("t={t} n={n} r={r} k={k}")
                    })?;
                    checked += 1;
                }
                let chi = chromatic_number(&s, r);
                ensure(balanced_chi(b, r) == t && chi == t, || {
                    format!("t={t} n={n} r={r}: chi={chi}")
                })?;
                if r >= 1 {
                    let star = balanced_chi_star(b, r).unwrap();
                    let general = chromatic_threshold(&s, r).unwrap();
                    ensure(star == general, || {
                        format!("t={t} n={n} r={r}: {star} vs {general}")
                    })?;
                }
            }
            let star = balanced_chi_star(b, 1).unwrap();
            let least_non_divisor = (1..).find(|h| n % h != 0).unwrap();
            let expected = t * n.div_ceil(least_non_divisor);
            ensure(
                star == expected && lin_chang_chi_star(b) == expected,
                || format!("t={t} n={n}: {star} vs {expected}"),
            )?;
        }
    }
    Ok(format!(
        "{checked} balanced feasibility checks plus chi, chi* and the r=1 threshold agree"
    ))
}

fn construction() -> Outcome {
    let mut built = 0;
    for s in grid() {
        for r in GRID_R {
            for k in GRID_K {
                let Some(w) = feasible(&s, q(r, k)) else {
                    continue;
                };
                let col =
                    build_coloring(&s, q(r, k), &w).map_err(|e| format!("{s} r={r} k={k}: {e}"))?;
                let verdict = verify_coloring(&s, q(r, k), &col).map_err(|e| e.to_string())?;
                ensure(verdict.is_accepted(), || {
                    format!("{s} r={r} k={k}: {verdict:?}")
                })?;
                if let FeasibilityWitness::Full { level, .. } = w {
                    for (part, colors) in col.parts().iter().enumerate() {
                        for c in colors {
                            let size = colors.iter().filter(|x| *x == c).count() as u64;
                            ensure(size >= level && size <= level + r, || {
                                format!("{s} r={r} k={k}: part {part} class size {size} outside [{level}, {}]", level + r)
                            })?;
                        }
                    }
                }
                built += 1;
            }
        }
    }
    Ok(format!("{built} witnesses built into verified colorings"))
}

fn definitional() -> Outcome {
    for s in grid() {
        let t = s.parts() as u64;
        for r in GRID_R {
            for k in GRID_K {
                if feasible(&s, q(r, k)).is_some() {
                    ensure(feasible(&s, q(r + 1, k)).is_some(), || {
                        format!("{s} r={r} k={k}: not monotone in r")
                    })?;
                }
            }
            let chi = chromatic_number(&s, r);
            ensure(chi >= t, || format!("{s} r={r}: chi {chi} < t"))?;
            for k in 1..chi {
                ensure(feasible(&s, q(r, k)).is_none(), || {
                    format!("{s} r={r}: feasible below chi at k={k}")
                })?;
            }
            if r >= 1 {
                let thr = chromatic_threshold(&s, r).unwrap();
                ensure(chi <= thr, || format!("{s} r={r}: chi {chi} > chi* {thr}"))?;
                let cap = s.order() + 5;
                for k in thr..=cap {
                    ensure(feasible(&s, q(r, k)).is_some(), || {
                        format!("{s} r={r}: infeasible above chi* at k={k}")
                    })?;
                }
            }
        }
    }
    Ok("monotone in r, closed above chi*, empty below chi, chi <= chi*, chi >= t".into())
}

fn r0_contract() -> Outcome {
    for s in grid() {
        ensure(
            chromatic_threshold(&s, 0) == Err(Error::ThresholdUndefined),
            || format!("{s}: threshold accepted r=0"),
        )?;
        for k in 1..=40 {
            ensure(!feasible_missing(&s, q(0, k)), || {
                format!("{s} k={k}: missing-color route with r=0")
            })?;
        }
    }
    for t in 2..=4 {
        for n in 1..=6 {
            let b = BalancedInstance::new(t, n).unwrap();
            ensure(
                balanced_chi_star(b, 0) == Err(Error::ThresholdUndefined),
                || format!("t={t} n={n}"),
            )?;
        }
    }
    Ok("r=0 thresholds rejected as undefined; no missing-color colorings".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 8] = [
        ("1 worked example K_{3,5,7}", worked_example),
        ("2 K_{3,3}", k33),
        ("3 oracle agreement grid", oracle_grid),
        ("4 r=1 equivalence", r1_equivalence),
        ("5 balanced cross-check", balanced),
        ("6 construction soundness", construction),
        ("7 definitional properties", definitional),
        ("8 r=0 contract", r0_contract),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                println!("FAIL  {name}: {detail}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
