// Scratch probe: construction-time-unique memory consideration vs the
// post-hoc repair flow, at matched budgets against the GA.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use baystack_core::bench::{derive_seed, generate_instance, STREAM_HS, STREAM_INSTANCE};
use baystack_core::ga::{run_ga, GaParams};
use baystack_core::hs::ProblemAdapter;
use baystack_core::storage::{build_canonical_layout, make_adapter, oracle_optimal, StorageAdapter};

struct Mem {
    entries: Vec<(Vec<u32>, f64)>,
    worst: usize,
}

impl Mem {
    fn worst_fitness(&self) -> f64 {
        self.entries[self.worst].1
    }
    fn recompute_worst(&mut self) {
        let mut w = 0;
        for (j, e) in self.entries.iter().enumerate().skip(1) {
            if e.1 > self.entries[w].1 {
                w = j;
            }
        }
        self.worst = w;
    }
}

/// Improvise with per-slot memory consideration restricted to unused ids.
fn improvise_distinct(
    adapter: &StorageAdapter<f64>,
    mem: &Mem,
    hmcr: f64,
    par: f64,
    rng: &mut ChaCha8Rng,
) -> Vec<u32> {
    let nc = adapter.variable_count();
    let mut used = vec![false; nc];
    let mut unused: Vec<u32> = (1..=nc as u32).collect();
    let mut pos: Vec<usize> = (0..nc).collect(); // pos[id-1] = index in unused
    let mut values = Vec::with_capacity(nc);
    let mut swaps: Vec<(u32, bool)> = Vec::new();
    let mut scratch: Vec<u32> = Vec::with_capacity(mem.entries.len());

    let take = |id: u32, used: &mut Vec<bool>, unused: &mut Vec<u32>, pos: &mut Vec<usize>| {
        used[(id - 1) as usize] = true;
        let idx = pos[(id - 1) as usize];
        let last = *unused.last().unwrap();
        unused.swap_remove(idx);
        if idx < unused.len() {
            pos[(last - 1) as usize] = idx;
        }
    };

    for i in 0..nc {
        let mut from_memory = false;
        let id = if rng.gen::<f64>() < hmcr {
            scratch.clear();
            for (entry, _) in &mem.entries {
                let v = entry[i];
                if !used[(v - 1) as usize] {
                    scratch.push(v);
                }
            }
            if scratch.is_empty() {
                unused[rng.gen_range(0..unused.len())]
            } else {
                from_memory = true;
                scratch[rng.gen_range(0..scratch.len())]
            }
        } else {
            unused[rng.gen_range(0..unused.len())]
        };
        if from_memory && rng.gen::<f64>() < par {
            swaps.push((id, rng.gen::<bool>()));
        }
        take(id, &mut used, &mut unused, &mut pos);
        values.push(id);
    }

    // id-neighbor swaps, clamped.
    let mut positions = vec![0usize; nc];
    for (slot, &id) in values.iter().enumerate() {
        positions[(id - 1) as usize] = slot;
    }
    for (k, up) in swaps {
        let neighbor = if up {
            if (k as usize) < nc { k + 1 } else { k - 1 }
        } else if k > 1 {
            k - 1
        } else {
            k + 1
        };
        if neighbor == k || neighbor == 0 || neighbor > nc as u32 {
            continue;
        }
        let a = positions[(k - 1) as usize];
        let b = positions[(neighbor - 1) as usize];
        values.swap(a, b);
        positions.swap((k - 1) as usize, (neighbor - 1) as usize);
    }
    values
}

fn run_distinct(
    adapter: &StorageAdapter<f64>,
    hms: usize,
    stagnation: Option<usize>,
    max_evals: Option<usize>,
    seed: u64,
) -> (f64, f64, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Vec::with_capacity(hms);
    for _ in 0..hms {
        let v = adapter.random_feasible(&mut rng);
        let f = adapter.fitness(&v);
        entries.push((v, f));
    }
    let mut mem = Mem { entries, worst: 0 };
    mem.recompute_worst();
    let mut evals = hms;
    let mut best = mem.entries.iter().map(|e| e.1).fold(f64::INFINITY, f64::min);
    let f_initial = best;
    let mut stagn = 0usize;
    loop {
        if let Some(s) = stagnation {
            if stagn >= s {
                break;
            }
        }
        if let Some(m) = max_evals {
            if evals >= m {
                break;
            }
        }
        let cand = improvise_distinct(adapter, &mem, 0.95, 0.1, &mut rng);
        let f = adapter.fitness(&cand);
        evals += 1;
        if f < best {
            best = f;
        }
        if f < mem.worst_fitness() {
            let w = mem.worst;
            mem.entries[w] = (cand, f);
            mem.recompute_worst();
            stagn = 0;
        } else {
            stagn += 1;
        }
    }
    (f_initial, best, evals)
}

fn main() {
    let inst = generate_instance(5, 5, 5, 125, 42).unwrap();
    let layout = build_canonical_layout(&inst);
    let (_, opt) = oracle_optimal::<f64>(&inst, &layout);
    println!("oracle optimum: {opt:.4}");
    let adapter = make_adapter::<f64>(inst);

    for &budget in &[2_000usize, 5_000, 10_000, 20_000, 50_000] {
        let (_, hs_f, _) = run_distinct(&adapter, 50, None, Some(budget), 1);
        let ga_params = GaParams {
            population_size: 50,
            stagnation_limit: None,
            max_evaluations: Some(budget),
            seed: 1,
            ..GaParams::default()
        };
        let ga = run_ga(&adapter, &ga_params).unwrap();
        println!("budget {budget:>6}: HS-distinct {hs_f:.4}  GA {:.4}", ga.f_final);
    }

    // Table-4 style: 30 reps, patience 100, matched budgets.
    for &pop in &[20usize, 50, 75, 100, 125] {
        let mut hs_sum = 0.0;
        let mut ga_sum = 0.0;
        let mut ev_sum = 0usize;
        let reps = 30;
        for rep in 0..reps {
            let iseed = derive_seed(42, STREAM_INSTANCE, 0, rep);
            let inst = generate_instance(5, 5, 5, 125, iseed).unwrap();
            let adapter = make_adapter::<f64>(inst);
            let hseed = derive_seed(42, STREAM_HS, 0, rep);
            let (_, hs_f, evals) = run_distinct(&adapter, pop, Some(100), None, hseed);
            hs_sum += hs_f;
            ev_sum += evals;
            let ga_params = GaParams {
                population_size: pop,
                stagnation_limit: None,
                max_evaluations: Some(evals),
                seed: derive_seed(42, 3, 0, rep),
                ..GaParams::default()
            };
            ga_sum += run_ga(&adapter, &ga_params).unwrap().f_final;
        }
        println!(
            "pop={pop}: HS {:.4} GA {:.4} (mean evals {})",
            hs_sum / reps as f64,
            ga_sum / reps as f64,
            ev_sum / reps as usize
        );
    }

    // Table-1 style improvement at nc=64, patience 20.
    let mut improvements: Vec<f64> = Vec::new();
    for rep in 0..30 {
        let iseed = derive_seed(42, STREAM_INSTANCE, 0, rep);
        let inst = generate_instance(4, 4, 4, 64, iseed).unwrap();
        let adapter = make_adapter::<f64>(inst);
        let (fi, ff, _) = run_distinct(&adapter, 50, Some(20), None, derive_seed(42, STREAM_HS, 0, rep));
        improvements.push((fi - ff) / fi);
    }
    improvements.sort_by(|a, b| a.partial_cmp(b).unwrap());
    println!(
        "nc=64 patience 20: median improvement {:.1}%",
        improvements[15] * 100.0
    );

    // Timing at nc=1000.
    let t = std::time::Instant::now();
    let inst = generate_instance(10, 10, 10, 1000, 5).unwrap();
    let adapter = make_adapter::<f64>(inst);
    let (fi, ff, evals) = run_distinct(&adapter, 50, Some(20), None, 5);
    println!(
        "nc=1000 patience 20: {:?}, {evals} evals, F {fi:.2} -> {ff:.2}",
        t.elapsed()
    );
}
