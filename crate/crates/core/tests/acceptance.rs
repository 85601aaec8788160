//! The ten-point acceptance gate: every release-blocking behavior of the
//! toolkit, each reported as a single pass/fail line.  Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines even on
//! success.

use std::time::Instant;

use plucker_core::ansatz::builtin_cases;
use plucker_core::decomp::{verify_orthogonal_sum, Decomposition, SimplePart};
use plucker_core::form::Form;
use plucker_core::harness::{
    random_form, random_isometry, random_nonzero_rat, random_orthogonal_simple_sum,
    random_rat, random_simple_form, run_case, run_conjecture_direction, su3_counterexample,
    trial_rng, TrialConfig,
};
use plucker_core::nlie::{
    bracket_from_form, catalog, jacobi_residual, metric_invariance_residual,
    oscillator_algebra, Signature,
};
use plucker_core::normal_form::{
    rational_block_decomposition, skew_normal_form, NormalFormKind, DEFAULT_TOL,
    SNAP_DENOMINATOR_BOUND,
};
use plucker_core::plucker::{is_simple, relation_holds};
use plucker_core::scalar::{rint, Rat};
use plucker_core::MetricSpace;

const SEED: u64 = 2024;

type Check = Result<String, String>;

fn fail(msg: impl Into<String>) -> Check {
    Err(msg.into())
}

/// 1. Sums of two simple forms on random orthogonal planes satisfy the
/// relation: 500 samples per signature/dimension configuration, under a
/// 60-second total budget.
fn criterion_1() -> Check {
    let started = Instant::now();
    for (d, p, t) in [(6, 3, 0), (6, 3, 1), (7, 3, 0), (8, 4, 0), (10, 5, 0), (10, 5, 1)] {
        let space = MetricSpace::new(d, t).map_err(|e| e.to_string())?;
        let mut rng = trial_rng(SEED, "sufficiency", d * 10 + t);
        for i in 0..500 {
            let f = random_orthogonal_simple_sum(space, p, &mut rng, 10);
            if !relation_holds(&f).map_err(|e| e.to_string())? {
                return fail(format!("(d,p,t)=({d},{p},{t}) sample {i}: relation violated"));
            }
        }
    }
    let elapsed = started.elapsed();
    if elapsed.as_secs() >= 60 {
        return fail(format!("runtime {elapsed:.2?} exceeds 60 s budget"));
    }
    Ok(format!("6 configs x 500 sums, 0 failures, {elapsed:.2?}"))
}

/// 2 & 3 share one harness run: 100 satisfying + 100 violating samples
/// per builtin case, with the closed-form splits re-verified on every
/// satisfying sample of every split-bearing case.
fn run_builtin_suite() -> Result<Vec<(String, bool, bool)>, String> {
    let mut out = Vec::new();
    for case in builtin_cases() {
        let cfg = TrialConfig::new(case.dim, case.time_dims, case.degree)
            .trials(100)
            .seed(SEED);
        let report = run_case(&case, &cfg).map_err(|e| format!("{}: {e}", case.name))?;
        let clean = report.passed()
            && report.satisfied_and_decomposed == 100
            && report.constraint_violated_and_relation_failed == 100;
        out.push((case.name.to_string(), clean, !case.split.is_empty()));
    }
    Ok(out)
}

fn criterion_2(suite: &[(String, bool, bool)]) -> Check {
    if suite.len() < 16 {
        return fail(format!("only {} builtin cases, need at least 16", suite.len()));
    }
    let bad: Vec<&str> = suite
        .iter()
        .filter(|(_, clean, _)| !clean)
        .map(|(n, _, _)| n.as_str())
        .collect();
    if !bad.is_empty() {
        return fail(format!("cases with exceptions: {bad:?}"));
    }
    Ok(format!(
        "{} cases x (100 satisfying + 100 violating), 0 exceptions",
        suite.len()
    ))
}

fn criterion_3(suite: &[(String, bool, bool)]) -> Check {
    let split_bearing: Vec<&(String, bool, bool)> =
        suite.iter().filter(|(_, _, has_split)| *has_split).collect();
    if split_bearing.is_empty() {
        return fail("no split-bearing cases found".to_string());
    }
    let bad: Vec<&str> = split_bearing
        .iter()
        .filter(|(_, clean, _)| !clean)
        .map(|(n, _, _)| n.as_str())
        .collect();
    if !bad.is_empty() {
        return fail(format!("split verification failed for: {bad:?}"));
    }
    Ok(format!(
        "{} split-bearing cases x 100 verified splits",
        split_bearing.len()
    ))
}

/// 4. Relation residual vanishes iff the induced bracket's generalized
/// Jacobi residual vanishes, and the metric is always invariant under
/// brackets built from forms.
fn criterion_4() -> Check {
    let combos: Vec<(usize, usize, usize)> = {
        let mut v = Vec::new();
        for p in [3usize, 4] {
            for d in p..=7 {
                for t in 0..=1usize {
                    v.push((d, p, t));
                }
            }
        }
        v
    };
    let mut rng = trial_rng(SEED, "equivalence", 0);
    let mut holds = 0usize;
    for i in 0..1000 {
        let (d, p, t) = combos[i % combos.len()];
        let space = MetricSpace::new(d, t).map_err(|e| e.to_string())?;
        let f = match i % 3 {
            0 => random_form(space, p, &mut rng, 6),
            1 => random_simple_form(space, p, &mut rng, 4),
            _ if d >= 2 * p => random_orthogonal_simple_sum(space, p, &mut rng, 4),
            _ => random_simple_form(space, p, &mut rng, 4),
        };
        let relation = relation_holds(&f).map_err(|e| e.to_string())?;
        let bracket = bracket_from_form(&f).map_err(|e| e.to_string())?;
        let jacobi = jacobi_residual(&bracket).is_empty();
        if relation != jacobi {
            return fail(format!(
                "sample {i} (d={d},p={p},t={t}): relation {relation} but jacobi {jacobi}"
            ));
        }
        let metric: Vec<Vec<Rat>> = (0..d)
            .map(|r| {
                (0..d)
                    .map(|c| if r == c { rint(space.sign(r + 1) as i64) } else { rint(0) })
                    .collect()
            })
            .collect();
        if !metric_invariance_residual(&bracket, &metric).is_empty() {
            return fail(format!("sample {i}: metric not invariant under form bracket"));
        }
        holds += relation as usize;
    }
    Ok(format!(
        "1000 forms: relation <=> jacobi exactly ({holds} held), invariance always"
    ))
}

/// 5. Below double dimension: simple forms always pass, generic forms
/// always fail, and any relation-passing non-simple sample is surfaced.
fn criterion_5() -> Check {
    let mut notes = Vec::new();
    for (d, p) in [(3usize, 3usize), (4, 3), (5, 3), (5, 4), (6, 4), (7, 4)] {
        let cfg = TrialConfig::new(d, 0, p).trials(500).seed(SEED);
        let report = run_conjecture_direction(&cfg).map_err(|e| e.to_string())?;
        if !report.passed() {
            return fail(format!("(d,p)=({d},{p}): {} failing seeds", report.failures.len()));
        }
        if !report.flagged.is_empty() {
            return fail(format!(
                "(d,p)=({d},{p}): unexpected findings {:?}",
                report.flagged
            ));
        }
        if report.satisfied_and_decomposed != 500 {
            return fail(format!("(d,p)=({d},{p}): simple-form passes incomplete"));
        }
        // Where non-simple forms exist at all, every generic sample must
        // have violated the relation.
        let every_form_simple = p + 1 >= d;
        if !every_form_simple && report.constraint_violated_and_relation_failed != 500 {
            return fail(format!(
                "(d,p)=({d},{p}): only {} of 500 generic samples violated",
                report.constraint_violated_and_relation_failed
            ));
        }
        if every_form_simple {
            notes.push(format!("({d},{p}) all forms simple"));
        }
    }
    Ok(format!(
        "6 pairs x 500+500 samples, 0 findings [{}]",
        notes.join(", ")
    ))
}

/// 6. `is_simple` agrees with the independent support-rank oracle.
fn criterion_6() -> Check {
    let mut rng = trial_rng(SEED, "simplicity-oracle", 0);
    let mut simple_count = 0usize;
    for i in 0..1000 {
        let d = 4 + i % 4; // 4..=7
        let p = 2 + i % 3; // 2..=4
        let p = p.min(d - 1);
        let space = MetricSpace::new(d, i % 2).map_err(|e| e.to_string())?;
        let f = if i % 2 == 0 {
            random_simple_form(space, p, &mut rng, 5)
        } else {
            random_form(space, p, &mut rng, 5)
        };
        let verdict = is_simple(&f).map_err(|e| e.to_string())?;
        let oracle = f.support_plane().rank() == p;
        if verdict != oracle {
            return fail(format!(
                "sample {i} (d={d},p={p}): is_simple={verdict}, support rank oracle={oracle}"
            ));
        }
        simple_count += verdict as usize;
    }
    Ok(format!("1000 forms, exact agreement ({simple_count} simple)"))
}

/// 7. The compact rank-two counterexample suite under a 5-second budget.
fn criterion_7() -> Check {
    let started = Instant::now();
    let report = su3_counterexample().map_err(|e| e.to_string())?;
    let elapsed = started.elapsed();
    if !report.passed() || report.satisfied_and_decomposed != 3 {
        return fail(format!("suite failed: {:?}", report.failures));
    }
    if elapsed.as_secs() >= 5 {
        return fail(format!("runtime {elapsed:.2?} exceeds 5 s budget"));
    }
    Ok(format!("d = 8, 9, 10 all confirmed, {elapsed:.2?}"))
}

/// 8. Every catalog algebra is a genuine metric Lie algebra whose
/// invariant 3-form satisfies the relation; the oscillator family
/// additionally splits into two simple parts sharing its null direction.
fn criterion_8() -> Check {
    let mut algebras = 0usize;
    for signature in [Signature::Euclidean, Signature::Lorentzian] {
        for dim in 1..=7 {
            for alg in catalog(signature, dim).map_err(|e| e.to_string())? {
                if !jacobi_residual(&alg.bracket).is_empty() {
                    return fail(format!("{}: jacobi violated", alg.name));
                }
                if !metric_invariance_residual(&alg.bracket, &alg.metric).is_empty() {
                    return fail(format!("{}: metric not invariant", alg.name));
                }
                let f = alg.invariant_form().map_err(|e| e.to_string())?;
                if !f.is_zero() && !relation_holds(&f).map_err(|e| e.to_string())? {
                    return fail(format!("{}: invariant form violates the relation", alg.name));
                }
                algebras += 1;
            }
        }
    }
    let mut rng = trial_rng(SEED, "oscillator", 0);
    for i in 0..100 {
        let alpha = random_nonzero_rat(&mut rng, 6);
        let beta = random_nonzero_rat(&mut rng, 6);
        let b = random_rat(&mut rng, 6);
        let alg = oscillator_algebra(&alpha, &beta, &b);
        let space = alg.frame_space();
        let f = alg.invariant_form().map_err(|e| e.to_string())?;
        // Factor images under the orthonormal-frame change: algebra
        // coordinate 1 is the null direction, 2..=5 the abelian block.
        let img = |k: usize| Form::from_covector(space, &alg.ortho_map[k]);
        let null = img(0);
        if !null
            .form_inner(&null)
            .map_err(|e| e.to_string())?
            .eq(&rint(0))
        {
            return fail(format!("oscillator sample {i}: shared direction is not null"));
        }
        let part = |scale: &Rat, a: usize, bidx: usize| {
            SimplePart::from_factors(space, vec![null.scaled(scale), img(a), img(bidx)])
        };
        let dec = Decomposition {
            parts: vec![
                part(&alpha, 1, 2).map_err(|e| e.to_string())?,
                part(&beta, 3, 4).map_err(|e| e.to_string())?,
            ],
        };
        if !verify_orthogonal_sum(&f, &dec).map_err(|e| e.to_string())? {
            return fail(format!("oscillator sample {i}: two-part split rejected"));
        }
    }
    Ok(format!(
        "{algebras} catalog algebras sound; 100 oscillator samples split through the null direction"
    ))
}

/// 9. Exact isometries never change the relation verdict.
fn criterion_9() -> Check {
    use plucker_core::harness::is_exact_isometry;
    let spaces = [
        MetricSpace::new(6, 0).unwrap(),
        MetricSpace::new(6, 1).unwrap(),
        MetricSpace::new(7, 0).unwrap(),
        MetricSpace::new(7, 1).unwrap(),
    ];
    let mut preserved = 0usize;
    for k in 0..200 {
        let space = spaces[k % spaces.len()];
        let mut rng = trial_rng(SEED, "isometry", k);
        let m = random_isometry(space, &mut rng);
        if !is_exact_isometry(space, &m) {
            return fail(format!("isometry {k}: orthonormality check failed"));
        }
        for j in 0..50 {
            let p = 3;
            let f = match j % 3 {
                0 => random_form(space, p, &mut rng, 4),
                1 => random_simple_form(space, p, &mut rng, 4),
                _ => random_orthogonal_simple_sum(space, p, &mut rng, 4),
            };
            let before = relation_holds(&f).map_err(|e| e.to_string())?;
            let after = relation_holds(&f.apply_linear(&m)).map_err(|e| e.to_string())?;
            if before != after {
                return fail(format!(
                    "isometry {k}, form {j}: verdict changed {before} -> {after}"
                ));
            }
            preserved += 1;
        }
    }
    Ok(format!("200 isometries x 50 forms, {preserved} verdicts preserved"))
}

/// 10. Skew normal forms reconstruct within 1e−9, the lorentzian kinds
/// partition on constructed witnesses, and every rationalized block
/// decomposition verifies exactly.
fn criterion_10() -> Check {
    let mut rng = trial_rng(SEED, "normal-form", 0);
    for i in 0..500 {
        let d = 4 + i % 3; // 4..=6
        let t = i % 2;
        let space = MetricSpace::new(d, t).map_err(|e| e.to_string())?;
        let f = random_form(space, 2, &mut rng, 5);
        let nf = skew_normal_form(&f, DEFAULT_TOL).map_err(|e| e.to_string())?;
        if nf.residual > 1e-9 {
            return fail(format!(
                "sample {i} (d={d},t={t}): reconstruction residual {:.3e}",
                nf.residual
            ));
        }
        let (model, dec) = rational_block_decomposition(&nf, space, SNAP_DENOMINATOR_BOUND)
            .map_err(|e| e.to_string())?;
        if !model.is_zero() && !verify_orthogonal_sum(&model, &dec).map_err(|e| e.to_string())? {
            return fail(format!("sample {i}: rational block decomposition rejected"));
        }
    }

    // Kind partition on constructed witnesses.
    let s = MetricSpace::lorentzian(4);
    let e = |idx: &[usize], n: i64| Form::monomial(s, idx, rint(n)).unwrap();
    let witnesses: Vec<(Form<Rat>, NormalFormKind)> = vec![
        (e(&[2, 3], 2), NormalFormKind::LorentzianElliptic),
        (
            e(&[1, 2], 3).plus(&e(&[3, 4], 1)).unwrap(),
            NormalFormKind::LorentzianHyperbolic,
        ),
        (
            e(&[1, 3], 1).plus(&e(&[2, 3], 1)).unwrap(),
            NormalFormKind::LorentzianParabolic,
        ),
        (Form::zero(s, 2), NormalFormKind::Zero),
    ];
    for (w, expected) in &witnesses {
        let nf = skew_normal_form(w, DEFAULT_TOL).map_err(|e| e.to_string())?;
        if nf.kind != *expected {
            return fail(format!("witness for {expected:?} classified as {:?}", nf.kind));
        }
    }
    Ok("500 reconstructions within 1e-9; kinds partition; all block splits verify".to_string())
}

#[test]
fn acceptance_gate() {
    let mut lines = Vec::new();
    let mut failures = 0usize;
    let mut record = |idx: usize, name: &str, result: Check| {
        match result {
            Ok(detail) => lines.push(format!("criterion {idx:>2} PASS  {name}: {detail}")),
            Err(why) => {
                failures += 1;
                lines.push(format!("criterion {idx:>2} FAIL  {name}: {why}"));
            }
        }
    };

    record(1, "sufficiency sweep", criterion_1());
    match run_builtin_suite() {
        Ok(suite) => {
            record(2, "ansatz constraint fidelity", criterion_2(&suite));
            record(3, "decomposition fidelity", criterion_3(&suite));
        }
        Err(e) => {
            record(2, "ansatz constraint fidelity", Err(e.clone()));
            record(3, "decomposition fidelity", Err(e));
        }
    }
    record(4, "relation/bracket equivalence", criterion_4());
    record(5, "low-dimension direction", criterion_5());
    record(6, "simplicity vs rank oracle", criterion_6());
    record(7, "rank-two counterexample suite", criterion_7());
    record(8, "catalog soundness", criterion_8());
    record(9, "isometry invariance", criterion_9());
    record(10, "skew normal forms", criterion_10());

    for line in &lines {
        println!("{line}");
    }
    assert_eq!(failures, 0, "\n{}", lines.join("\n"));
}
