// Scratch probe: HS vs GA per-evaluation efficiency at nc=125.

use baystack_core::bench::generate_instance;
use baystack_core::ga::{run_ga, GaParams};
use baystack_core::hs::{self, EngineParams};
use baystack_core::storage::{build_canonical_layout, make_adapter, oracle_optimal};

fn main() {
    let inst = generate_instance(5, 5, 5, 125, 42).unwrap();
    let layout = build_canonical_layout(&inst);
    let (_, opt) = oracle_optimal::<f64>(&inst, &layout);
    println!("oracle optimum: {opt:.4}");
    let adapter = make_adapter::<f64>(inst);

    for &budget in &[2_000usize, 5_000, 10_000, 20_000, 50_000, 200_000] {
        let hs_params = EngineParams {
            hms: 50,
            stagnation_limit: None,
            seed: 1,
            ..EngineParams::default()
        }
        .with_max_evaluations(budget);
        let hs_trace = hs::run(&adapter, &hs_params).unwrap();

        let hs_par0 = EngineParams {
            hms: 50,
            par: 0.0,
            stagnation_limit: None,
            seed: 1,
            ..EngineParams::default()
        }
        .with_max_evaluations(budget);
        let hs0_trace = hs::run(&adapter, &hs_par0).unwrap();

        let ga_params = GaParams {
            population_size: 50,
            stagnation_limit: None,
            max_evaluations: Some(budget),
            seed: 1,
            ..GaParams::default()
        };
        let ga_trace = run_ga(&adapter, &ga_params).unwrap();
        println!(
            "budget {budget:>6}: HS {:.4}  HS(par=0) {:.4}  GA {:.4}",
            hs_trace.f_final, hs0_trace.f_final, ga_trace.f_final
        );
    }

    // Acceptance rate decay for a stagnation-100 run shape.
    let hs_params = EngineParams {
        hms: 50,
        stagnation_limit: Some(100),
        seed: 1,
        ..EngineParams::default()
    };
    let trace = hs::run(&adapter, &hs_params).unwrap();
    println!(
        "stagnation=100 run: {} improvisations, F {:.4} -> {:.4}",
        trace.iterations(),
        trace.f_initial,
        trace.f_final
    );
}
