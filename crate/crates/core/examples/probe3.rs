// Scratch probe: table3 trend detail and table4 gap across seeds.

use baystack_core::bench::{run_experiment, ExperimentKind, ExperimentSpec};

fn main() {
    for base_seed in [42u64, 7, 1234] {
        let spec = ExperimentSpec::new(ExperimentKind::Table3, 30, base_seed);
        let rows = run_experiment::<f64>(&spec).unwrap();
        print!("table3 seed {base_seed}: ");
        for &h in &[20u64, 50, 75, 100, 125] {
            let sel: Vec<_> = rows.iter().filter(|r| r.value == h).collect();
            let mean_ff = sel.iter().map(|r| r.f_final).sum::<f64>() / sel.len() as f64;
            let mean_ev = sel.iter().map(|r| r.evaluations).sum::<u64>() / sel.len() as u64;
            print!("hms={h}: {mean_ff:.4} ({mean_ev} ev)  ");
        }
        println!();
    }

    for base_seed in [42u64, 7] {
        let spec = ExperimentSpec::new(ExperimentKind::Table4, 30, base_seed);
        let rows = run_experiment::<f64>(&spec).unwrap();
        print!("table4 seed {base_seed}: ");
        for &p in &[20u64, 50, 75, 100, 125] {
            let hs: Vec<_> = rows
                .iter()
                .filter(|r| r.value == p && r.experiment == "table4_hs")
                .collect();
            let ga: Vec<_> = rows
                .iter()
                .filter(|r| r.value == p && r.experiment == "table4_ga")
                .collect();
            let mean_hs = hs.iter().map(|r| r.f_final).sum::<f64>() / hs.len() as f64;
            let mean_ga = ga.iter().map(|r| r.f_final).sum::<f64>() / ga.len() as f64;
            print!("p={p}: {mean_hs:.3} vs {mean_ga:.3}  ");
        }
        println!();
    }
}
