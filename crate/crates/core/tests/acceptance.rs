//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use bso_core::benchmarks::{self, argmin_witness, BenchmarkId};
use bso_core::bso::inertia_weight;
use bso_core::catalog::build_problem;
use bso_core::constrained::{himmelblau, penalized_fitness, pressure_vessel};
use bso_core::harness::collect_trials_parallel;
use bso_core::{
    run_bas, run_bso, run_pso, uniform_in_space, Algorithm, BasConfig64, Benchmark, BsoConfig64, ConstrainedId,
    ConstrainedProblem, FnProblem, Objective, PenaltyConfig64, ProblemId, PsoConfig64, RandomStream, SearchSpace,
};

const TRIALS: usize = 30;
const BASE_SEED: u64 = 1;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn c1_benchmark_transcription() -> Verdict {
    let mut worst = (0.0f64, BenchmarkId::F1);
    let mut failing = Vec::new();
    for id in BenchmarkId::ALL {
        let spec = benchmarks::spec(id);
        let w = argmin_witness(id, spec.dim);
        let f = if id == BenchmarkId::F7 {
            benchmarks::functions::quartic(&w)
        } else {
            benchmarks::evaluate::<f64>(id, &w, None).unwrap()
        };
        let err = (f - spec.fmin).abs();
        if err > worst.0 {
            worst = (err, id);
        }
        if err > 1e-3 {
            failing.push(format!("{id} |{f:.6} - ({})| = {err:.2e}", spec.fmin));
        }
    }
    if failing.is_empty() {
        verdict(true, format!("23 witnesses within 1e-3 (worst {} at {:.2e})", worst.1, worst.0))
    } else {
        verdict(false, format!("over 1e-3: {}", failing.join("; ")))
    }
}

fn c2_constrained_transcription() -> Verdict {
    let rel = |got: f64, want: f64| ((got - want) / want).abs();
    let mut problems = Vec::new();
    let mut documented = Vec::new();

    let pv_rows: [(&str, [f64; 4], [f64; 4], f64); 2] = [
        ("[61]", [0.8125, 0.4375, 42.0984, 176.6378], [-8.8e-7, -0.0359, -3.5586, -63.3622], 6059.7258),
        ("BSO", [0.8125, 0.4375, 42.0984, 176.6366], [0.0, -0.0359, 0.0, -63.3634], 6059.7000),
    ];
    for (name, x, g_tab, f_tab) in pv_rows {
        let (f, g) = pressure_vessel::<f64>(&x);
        if rel(f, f_tab) > 1e-3 {
            problems.push(format!("PV {name} f {f} vs {f_tab}"));
        }
        for j in 0..4 {
            if (g[j] - g_tab[j]).abs() > 0.01 {
                let note = format!("PV {name} g{} {:.4} vs {}", j + 1, g[j], g_tab[j]);
                if name == "BSO" && j == 2 {
                    documented.push(note);
                } else {
                    problems.push(note);
                }
            }
        }
    }

    let hb_rows: [(&str, [f64; 5], [f64; 3], f64); 3] = [
        ("[72]", [78.0, 33.0, 29.995256, 45.0, 36.775813], [92.00, 98.8405, 20.0000], -30665.54),
        ("[73]", [78.0, 33.0, 29.995256, 45.0, 36.775813], [92.00, 98.8405, 20.0000], -30665.539),
        ("BSO", [78.0, 33.0, 27.0710, 45.0, 44.9692], [92.00, 100.4048, 20.0000], -31025.5563),
    ];
    for (name, x, g_tab, f_tab) in hb_rows {
        let (f, g) = himmelblau::<f64>(&x);
        if rel(f, f_tab) > 1e-3 {
            problems.push(format!("HB {name} f {f} vs {f_tab}"));
        }
        for j in 0..3 {
            if (g[j] - g_tab[j]).abs() > 0.01 {
                let note = format!("HB {name} g{} {:.4} vs {}", j + 1, g[j], g_tab[j]);
                if name != "BSO" && j == 0 {
                    documented.push(note);
                } else {
                    problems.push(note);
                }
            }
        }
    }

    if problems.is_empty() {
        verdict(
            true,
            format!("f* within 0.1%, g within 0.01; documented discrepancies: {}", documented.join("; ")),
        )
    } else {
        verdict(false, problems.join("; "))
    }
}

fn finals(alg: &Algorithm<f64>, problem: &(dyn Objective<f64> + Sync)) -> Vec<f64> {
    let mut f: Vec<f64> = collect_trials_parallel(alg, problem, TRIALS, BASE_SEED)
        .unwrap()
        .iter()
        .map(|r| r.best_f)
        .collect();
    f.sort_by(f64::total_cmp);
    f
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    0.5 * (sorted[(n - 1) / 2] + sorted[n / 2])
}

fn c3_bso_desk_scale() -> Verdict {
    let alg = Algorithm::Bso(BsoConfig64::default());
    let mut parts = Vec::new();
    let mut pass = true;
    let mut check = |label: String, ok: bool| {
        pass &= ok;
        parts.push(format!("{label}{}", if ok { "" } else { " (miss)" }));
    };
    for (id, gate) in [(BenchmarkId::F1, 1e-8), (BenchmarkId::F6, 0.0), (BenchmarkId::F9, 1.0)] {
        let f = finals(&alg, &Benchmark::<f64>::new(id));
        let ok = if gate == 0.0 { f[0] == 0.0 } else { f[0] <= gate };
        check(format!("{id} best {:.3e}", f[0]), ok);
    }
    for (id, target, tol) in [
        (BenchmarkId::F16, -1.0316, 1e-3),
        (BenchmarkId::F17, 0.3979, 1e-3),
        (BenchmarkId::F18, 3.0, 1e-2),
    ] {
        let m = median(&finals(&alg, &Benchmark::<f64>::new(id)));
        check(format!("{id} median {m:.5}"), (m - target).abs() <= tol);
    }
    verdict(pass, parts.join(", "))
}

fn c4_constrained_desk_scale() -> Verdict {
    let penalty = PenaltyConfig64::default();
    let alg = Algorithm::Bso(BsoConfig64::default());
    let mut parts = Vec::new();
    let mut pass = true;
    for (id, gate) in [(ConstrainedId::PressureVessel, 6090.0), (ConstrainedId::Himmelblau, -30600.0)] {
        let problem = build_problem::<f64>(ProblemId::Constrained(id), None, penalty).unwrap();
        let inner = ConstrainedProblem::<f64>::new(id);
        let records = collect_trials_parallel(&alg, problem.as_ref(), TRIALS, BASE_SEED).unwrap();
        let feasible: Vec<f64> = records
            .iter()
            .map(|r| inner.assess(&r.best_x, &penalty))
            .filter(|a| a.feasible)
            .map(|a| a.objective)
            .collect();
        let best = feasible.iter().copied().fold(f64::INFINITY, f64::min);
        let ok = best <= gate;
        pass &= ok;
        parts.push(format!("{id} best feasible {best:.4} ({} of {TRIALS} runs feasible)", feasible.len()));
    }
    verdict(pass, parts.join(", "))
}

fn c5_oracle_equivalence() -> Verdict {
    let ids = [BenchmarkId::F1, BenchmarkId::F5, BenchmarkId::F10, BenchmarkId::F18, BenchmarkId::F22];
    let mut mismatches = Vec::new();
    for id in ids {
        let p = if id.is_scalable() { Benchmark::with_dim(id, 6).unwrap() } else { Benchmark::new(id) };
        for seed in [11, 12, 13] {
            let pso = PsoConfig64 { population: 10, max_iters: 100, seed, record_positions: true, ..Default::default() };
            let bso = BsoConfig64 {
                population: 10,
                max_iters: 100,
                lambda: 1.0,
                delta0: 0.0,
                seed,
                record_positions: true,
                ..Default::default()
            };
            let a = run_pso(&p, &pso).unwrap();
            let b = run_bso(&p, &bso).unwrap();
            let same = a.trajectory == b.trajectory
                && a.curve.iter().zip(&b.curve).all(|(x, y)| x.to_bits() == y.to_bits());
            if !same {
                mismatches.push(format!("{id}/{seed}"));
            }
        }
    }
    verdict(mismatches.is_empty(), format!("15 runs compared, mismatches: {mismatches:?}"))
}

fn c6_invariants() -> Verdict {
    const CASES: u64 = 100;
    let mut failures = Vec::new();
    let ids = [BenchmarkId::F1, BenchmarkId::F9, BenchmarkId::F11, BenchmarkId::F16, BenchmarkId::F21];
    for case in 0..CASES {
        let id = ids[case as usize % ids.len()];
        let p = if id.is_scalable() { Benchmark::with_dim(id, 5).unwrap() } else { Benchmark::new(id) };
        let cfg = BsoConfig64 {
            population: 8,
            max_iters: 30,
            lambda: (case as f64 / CASES as f64).min(1.0),
            seed: 1000 + case,
            record_positions: true,
            ..Default::default()
        };
        let rec = run_bso(&p, &cfg).unwrap();
        if !rec.is_monotone() {
            failures.push(format!("monotone case {case}"));
        }
        if !rec.trajectory.as_ref().unwrap().iter().flatten().all(|x| p.space().contains(x)) {
            failures.push(format!("bounds case {case}"));
        }
        if run_bso(&p, &cfg).unwrap() != rec {
            failures.push(format!("determinism case {case}"));
        }
        let k_max = 1 + (case as usize * 37) % 5000;
        if inertia_weight(0, k_max, 0.4, 0.9) != 0.9 || (inertia_weight(k_max, k_max, 0.4f64, 0.9) - 0.4).abs() > 1e-12 {
            failures.push(format!("omega case {case}"));
        }
        let schedule = cfg.step_schedule();
        let mut delta = cfg.delta0;
        let steps = case as i32 * 3;
        for _ in 0..steps {
            delta = schedule.advance(delta).delta;
        }
        let expected = cfg.eta.powi(steps) * cfg.delta0;
        if (delta - expected).abs() > 1e-12 * expected {
            failures.push(format!("delta case {case}"));
        }
    }
    let penalty = PenaltyConfig64::default();
    let mut feasible_seen = 0;
    for (k, id) in [ConstrainedId::PressureVessel, ConstrainedId::Himmelblau].into_iter().enumerate() {
        let p = ConstrainedProblem::<f64>::new(id);
        let mut rng = RandomStream::new(k as u64);
        for _ in 0..CASES * 20 {
            let x = p.snap(&uniform_in_space(&mut rng, p.space()));
            if p.is_feasible(&x) {
                feasible_seen += 1;
                if penalized_fitness(&p, &x, &penalty) != p.raw_objective(&x) {
                    failures.push(format!("penalty at {x:?}"));
                }
            }
        }
    }
    if feasible_seen < CASES {
        failures.push(format!("only {feasible_seen} feasible samples"));
    }
    verdict(
        failures.is_empty(),
        format!("{CASES} cases per invariant, {feasible_seen} feasible penalty samples; failures: {failures:?}"),
    )
}

fn c7_bas_sanity() -> Verdict {
    let mut parts = Vec::new();
    let mut pass = true;
    for dim in [1, 2] {
        let p = FnProblem::new(
            "sphere",
            SearchSpace::uniform(dim, -10.0, 10.0).unwrap(),
            |x: &[f64]| x.iter().map(|v| v * v).sum(),
        );
        let hits = (0..TRIALS as u64)
            .filter(|&seed| {
                let cfg = BasConfig64 { delta0: Some(1.0), max_iters: 200, seed, ..Default::default() };
                run_bas(&p, &cfg).unwrap().best_f <= 1e-2
            })
            .count();
        pass &= hits >= 25;
        parts.push(format!("{dim}-D {hits}/{TRIALS} seeds reach 1e-2"));
    }
    verdict(pass, parts.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 7] = [
        ("1 benchmark transcription", c1_benchmark_transcription),
        ("2 constrained transcription", c2_constrained_transcription),
        ("3 BSO desk-scale optimization", c3_bso_desk_scale),
        ("4 constrained desk-scale", c4_constrained_desk_scale),
        ("5 PSO/BSO oracle equivalence", c5_oracle_equivalence),
        ("6 invariant suite", c6_invariants),
        ("7 BAS sanity", c7_bas_sanity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let started = Instant::now();
        let v = run();
        let secs = started.elapsed().as_secs_f64();
        if !v.pass {
            failed += 1;
        }
        println!("{} criterion {name} [{secs:.1}s]: {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
