// Scratch probe of campaign trends. Not part of the deliverable surface.

use std::time::Instant;

use baystack_core::bench::{
    derive_seed, generate_instance, run_experiment, ExperimentKind, ExperimentSpec, STREAM_HS,
    STREAM_INSTANCE,
};
use baystack_core::ga::{run_ga, GaParams};
use baystack_core::hs::{self, EngineParams};
use baystack_core::storage::{build_canonical_layout, make_adapter, oracle_optimal};

fn main() {
    // Criterion 2 probe: nc=8 full cube, HMS=30, 50k evals, 100 seeds.
    let t = Instant::now();
    let mut hits = 0;
    for seed in 0..100u64 {
        let inst = generate_instance(2, 2, 2, 8, derive_seed(77, STREAM_INSTANCE, 0, seed)).unwrap();
        let layout = build_canonical_layout(&inst);
        let (_, opt) = oracle_optimal::<f64>(&inst, &layout);
        let adapter = make_adapter::<f64>(inst);
        let params = EngineParams {
            hms: 30,
            stagnation_limit: None,
            seed: derive_seed(77, STREAM_HS, 0, seed),
            ..EngineParams::default()
        }
        .with_max_evaluations(50_000);
        let trace = hs::run(&adapter, &params).unwrap();
        if (trace.f_final - opt).abs() < 1e-9 {
            hits += 1;
        }
    }
    println!("criterion2: {hits}/100 optima, {:?}", t.elapsed());

    // Criterion 3 probe: table1, 30 reps; median relative improvement at 64.
    let t = Instant::now();
    let spec = ExperimentSpec::new(ExperimentKind::Table1, 30, 42);
    let rows = run_experiment::<f64>(&spec).unwrap();
    println!("table1 campaign: {:?}", t.elapsed());
    for &nc in &[64u64, 125, 343, 729, 1000] {
        let sel: Vec<_> = rows.iter().filter(|r| r.value == nc).collect();
        let mean_fi = sel.iter().map(|r| r.f_initial).sum::<f64>() / sel.len() as f64;
        let mean_ff = sel.iter().map(|r| r.f_final).sum::<f64>() / sel.len() as f64;
        let mut improvements: Vec<f64> = sel
            .iter()
            .map(|r| (r.f_initial - r.f_final) / r.f_initial)
            .collect();
        improvements.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = improvements[improvements.len() / 2];
        let mean_ev = sel.iter().map(|r| r.evaluations).sum::<u64>() / sel.len() as u64;
        println!(
            "table1 nc={nc}: F_i {mean_fi:.3} F_f {mean_ff:.3} median impr {:.1}% evals {mean_ev}",
            median * 100.0
        );
    }

    // Criterion 4 probe: table2 at {20,50,100,200}.
    let t = Instant::now();
    let mut spec = ExperimentSpec::new(ExperimentKind::Table2, 30, 42);
    spec.sweep = vec![20, 50, 100, 200];
    let rows = run_experiment::<f64>(&spec).unwrap();
    println!("table2 campaign: {:?}", t.elapsed());
    for &s in &[20u64, 50, 100, 200] {
        let sel: Vec<_> = rows.iter().filter(|r| r.value == s).collect();
        let mean_ff = sel.iter().map(|r| r.f_final).sum::<f64>() / sel.len() as f64;
        let mean_ev = sel.iter().map(|r| r.evaluations).sum::<u64>() / sel.len() as u64;
        println!("table2 stagnation={s}: F_f {mean_ff:.4} evals {mean_ev}");
    }

    // Criterion 5/6 probe: table3 and table4.
    let t = Instant::now();
    let spec = ExperimentSpec::new(ExperimentKind::Table3, 30, 42);
    let rows = run_experiment::<f64>(&spec).unwrap();
    println!("table3 campaign: {:?}", t.elapsed());
    for &h in &[20u64, 50, 75, 100, 125] {
        let sel: Vec<_> = rows.iter().filter(|r| r.value == h).collect();
        let mean_ff = sel.iter().map(|r| r.f_final).sum::<f64>() / sel.len() as f64;
        println!("table3 hms={h}: F_f {mean_ff:.4}");
    }

    let t = Instant::now();
    let spec = ExperimentSpec::new(ExperimentKind::Table4, 30, 42);
    let rows = run_experiment::<f64>(&spec).unwrap();
    println!("table4 campaign: {:?}", t.elapsed());
    for &p in &[20u64, 50, 75, 100, 125] {
        let hs_rows: Vec<_> = rows
            .iter()
            .filter(|r| r.value == p && r.experiment == "table4_hs")
            .collect();
        let ga_rows: Vec<_> = rows
            .iter()
            .filter(|r| r.value == p && r.experiment == "table4_ga")
            .collect();
        let mean_hs = hs_rows.iter().map(|r| r.f_final).sum::<f64>() / hs_rows.len() as f64;
        let mean_ga = ga_rows.iter().map(|r| r.f_final).sum::<f64>() / ga_rows.len() as f64;
        println!(
            "table4 pop={p}: HS {mean_hs:.4} GA {mean_ga:.4} ({})",
            if mean_hs <= mean_ga { "HS wins" } else { "GA wins" }
        );
    }

    // Criterion 10 probe: one Nc=1000 run.
    let t = Instant::now();
    let inst = generate_instance(10, 10, 10, 1000, 5).unwrap();
    let adapter = make_adapter::<f64>(inst);
    let params = EngineParams {
        hms: 50,
        stagnation_limit: Some(20),
        seed: 5,
        ..EngineParams::default()
    };
    let trace = hs::run(&adapter, &params).unwrap();
    println!(
        "nc=1000 run: {:?}, {} improvisations, F {:.3} -> {:.3}",
        t.elapsed(),
        trace.iterations(),
        trace.f_initial,
        trace.f_final
    );

    // GA sanity at nc=64 with a generous budget.
    let inst = generate_instance(4, 4, 4, 64, 5).unwrap();
    let adapter = make_adapter::<f64>(inst);
    let ga = GaParams {
        population_size: 50,
        max_evaluations: Some(5000),
        stagnation_limit: None,
        seed: 5,
        ..GaParams::default()
    };
    let trace = run_ga(&adapter, &ga).unwrap();
    println!(
        "ga nc=64 budget 5000: F {:.3} -> {:.3} in {} gens",
        trace.f_initial,
        trace.f_final,
        trace.iterations()
    );
}
