use bso_core::harness::{
    collect_trials, collect_trials_parallel, compare_report, export_convergence, export_trajectory, load_literature,
    read_convergence, run_trials, run_trials_parallel, ComparisonReport, Source, REPORT_SCHEMA,
};
use bso_core::{Algorithm, BasConfig64, Benchmark, BenchmarkId, BsoConfig64, PsoConfig64, TrialSummary};

fn small_bso() -> Algorithm<f64> {
    Algorithm::Bso(BsoConfig64 { population: 10, max_iters: 40, ..Default::default() })
}

#[test]
fn parallel_and_serial_trials_agree() {
    let p = Benchmark::<f64>::with_dim(BenchmarkId::F10, 5).unwrap();
    for alg in [
        small_bso(),
        Algorithm::Pso(PsoConfig64 { population: 10, max_iters: 40, ..Default::default() }),
        Algorithm::Bas(BasConfig64 { max_iters: 100, ..Default::default() }),
    ] {
        let serial = collect_trials(&alg, &p, 6, 40).unwrap();
        let parallel = collect_trials_parallel(&alg, &p, 6, 40).unwrap();
        assert_eq!(serial, parallel);
        assert_eq!(serial.iter().map(|r| r.seed).collect::<Vec<_>>(), (40..46).collect::<Vec<_>>());
        let a = run_trials(&alg, &p, 6, 40).unwrap();
        let b = run_trials_parallel(&alg, &p, 6, 40).unwrap();
        assert!(a.same_statistics(&b));
    }
}

#[test]
fn stochastic_problem_is_reproducible_per_seed() {
    let p = Benchmark::<f64>::with_dim(BenchmarkId::F7, 4).unwrap();
    let a = collect_trials(&small_bso(), &p, 3, 5).unwrap();
    let b = collect_trials_parallel(&small_bso(), &p, 3, 5).unwrap();
    assert_eq!(a, b);
}

#[test]
fn summary_statistics_hold_their_invariants() {
    let p = Benchmark::<f64>::with_dim(BenchmarkId::F9, 4).unwrap();
    let s = run_trials(&small_bso(), &p, 7, 0).unwrap();
    assert_eq!(s.n_trials, 7);
    assert_eq!(s.seeds.len(), 7);
    assert!(s.std >= 0.0 && s.best <= s.ave);
    let one = run_trials(&small_bso(), &p, 1, 0).unwrap();
    assert_eq!(one.std, 0.0);
}

#[test]
fn convergence_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let p = Benchmark::<f64>::new(BenchmarkId::F16);
    let rec = small_bso().run(&p).unwrap();
    let path = dir.path().join("curve.csv");
    export_convergence(&rec, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("iteration,best_fitness\n"));
    assert_eq!(text.lines().count(), rec.curve.len() + 1);
    let back = read_convergence(&path).unwrap();
    assert_eq!(back.len(), 41);
    for (a, b) in back.iter().zip(&rec.curve) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
}

#[test]
fn trajectory_export_needs_recorded_positions() {
    let dir = tempfile::tempdir().unwrap();
    let p = Benchmark::<f64>::new(BenchmarkId::F16);
    let rec = small_bso().run(&p).unwrap();
    assert!(export_trajectory(&rec, dir.path().join("t.csv")).is_err());
    let alg = Algorithm::Bso(BsoConfig64 { population: 3, max_iters: 4, record_positions: true, ..Default::default() });
    let rec = alg.run(&p).unwrap();
    let path = dir.path().join("t.csv");
    export_trajectory(&rec, &path).unwrap();
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("iteration,agent,x0,x1\n"));
    assert_eq!(text.lines().count(), 1 + 5 * 3);
}

#[test]
fn report_files_agree_and_accept_literature_rows() {
    let dir = tempfile::tempdir().unwrap();
    let mut summaries = Vec::new();
    for id in [BenchmarkId::F16, BenchmarkId::F18] {
        let p = Benchmark::<f64>::new(id);
        summaries.push(run_trials(&small_bso(), &p, 3, 1).unwrap());
    }
    let lit_path = dir.path().join("lit.json");
    let lit = vec![
        TrialSummary::from_finals("F16", "goa", &[-1.0316], &[29.9], vec![]).unwrap(),
        TrialSummary::from_finals("F18", "goa", &[3.0], &[29.9], vec![]).unwrap(),
    ];
    std::fs::write(&lit_path, serde_json::to_string(&lit).unwrap()).unwrap();
    let lit = load_literature(&lit_path).unwrap();
    assert!(lit.iter().all(|s| s.source == Source::Literature));
    summaries.extend(lit);

    let out = dir.path().join("report");
    let report = compare_report(&summaries, &out).unwrap();
    assert_eq!(report.schema, REPORT_SCHEMA);
    let json: ComparisonReport =
        serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(json, report);
    let text = std::fs::read_to_string(out.join("report.txt")).unwrap();
    assert!(text.contains("goa (literature)"));
    let parsed = ComparisonReport::parse_text(&text).unwrap();
    for (row, (problem, cells)) in json.rows.iter().zip(&parsed) {
        assert_eq!(&row.problem, problem);
        for (cell, nums) in row.cells.iter().zip(cells) {
            assert_eq!([cell.ave, cell.std, cell.ave_time_s], *nums);
        }
    }
}
