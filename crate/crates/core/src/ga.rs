//! Genetic-algorithm baseline over the same arrangement encoding:
//! roulette-wheel selection, permutation-safe two-point crossover, swap
//! mutation, elitism of one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hs::ProblemAdapter;
use crate::scalar::Scalar;
use crate::storage::{Arrangement, ContainerId, StorageAdapter};
use crate::trace::RunTrace;

/// Floor added to every roulette weight so zero-spread populations and
/// the current worst individual keep a nonzero selection chance.
const WEIGHT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct GaParams {
    pub population_size: usize,
    /// Probability that a selected pair is recombined rather than copied.
    pub crossover_rate: f64,
    /// Per-child probability of one random swap.
    pub mutation_rate: f64,
    /// Stop after this many generations.
    pub max_generations: Option<usize>,
    /// Stop once the best fitness has not strictly improved for this
    /// many consecutive generations.
    pub stagnation_limit: Option<usize>,
    /// Stop once at least this many fitness evaluations were spent
    /// (checked between generations).
    pub max_evaluations: Option<usize>,
    pub seed: u64,
}

impl Default for GaParams {
    fn default() -> Self {
        Self {
            population_size: 50,
            crossover_rate: 0.9,
            mutation_rate: 0.1,
            max_generations: None,
            stagnation_limit: Some(100),
            max_evaluations: None,
            seed: 0,
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::InvalidParams("population must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return Err(Error::InvalidParams(format!(
                "crossover rate must be in [0, 1], got {}",
                self.crossover_rate
            )));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(Error::InvalidParams(format!(
                "mutation rate must be in [0, 1], got {}",
                self.mutation_rate
            )));
        }
        if self.max_generations.is_none()
            && self.stagnation_limit.is_none()
            && self.max_evaluations.is_none()
        {
            return Err(Error::InvalidParams(
                "at least one termination limit must be active".into(),
            ));
        }
        if self.population_size == 1
            && self.max_generations.is_none()
            && self.stagnation_limit.is_none()
        {
            // A lone individual never spends evaluations, so an
            // evaluation budget alone would spin forever.
            return Err(Error::InvalidParams(
                "population 1 needs a generation or stagnation limit".into(),
            ));
        }
        Ok(())
    }
}

/// Roulette-wheel selection for minimization: each individual's weight is
/// `(max_fitness - fitness + epsilon)`. Returns the selected index and
/// consumes exactly one random draw.
pub fn roulette_select<T: Scalar, R: Rng>(fitness: &[T], rng: &mut R) -> usize {
    debug_assert!(!fitness.is_empty());
    let max = fitness.iter().copied().fold(fitness[0], T::max);
    let eps = T::from_f64(WEIGHT_EPSILON).expect("epsilon fits scalar");
    let total = fitness
        .iter()
        .fold(T::zero(), |acc, &f| acc + (max - f + eps));
    let target = T::from_f64(rng.gen::<f64>()).expect("draw fits scalar") * total;
    let mut acc = T::zero();
    for (j, &f) in fitness.iter().enumerate() {
        acc = acc + (max - f + eps);
        if target < acc {
            return j;
        }
    }
    fitness.len() - 1
}

/// Two-point crossover with order-based fill so children stay
/// permutations: each child keeps one parent's segment `[c1, c2]` and
/// takes the remaining ids in the other parent's order.
pub fn two_point_crossover<R: Rng>(
    parent_a: &Arrangement,
    parent_b: &Arrangement,
    rng: &mut R,
) -> (Arrangement, Arrangement) {
    let nc = parent_a.len();
    debug_assert_eq!(parent_b.len(), nc);
    if nc < 2 {
        return (parent_a.clone(), parent_b.clone());
    }
    // Uniform over pairs 1 <= c1 < c2 <= nc (1-based, inclusive).
    let (c1, c2) = loop {
        let a = rng.gen_range(1..=nc);
        let b = rng.gen_range(1..=nc);
        if a != b {
            break (a.min(b), a.max(b));
        }
    };
    let child = |keeper: &Arrangement, filler: &Arrangement| -> Arrangement {
        let mut ids = vec![0 as ContainerId; nc];
        let mut used = vec![false; nc];
        for slot in (c1 - 1)..c2 {
            let id = keeper.ids()[slot];
            ids[slot] = id;
            used[(id - 1) as usize] = true;
        }
        let mut fill = filler.ids().iter().filter(|&&id| !used[(id - 1) as usize]);
        for slot in (0..c1 - 1).chain(c2..nc) {
            ids[slot] = *fill.next().expect("filler covers the remaining slots");
        }
        Arrangement::from_vec_unchecked(ids)
    };
    (child(parent_a, parent_b), child(parent_b, parent_a))
}

/// Exchange the containers of two distinct uniformly chosen slots.
/// No-op on a single-container arrangement.
pub fn swap_mutation<R: Rng>(arrangement: &mut Arrangement, rng: &mut R) {
    let nc = arrangement.len();
    if nc < 2 {
        return;
    }
    let (a, b) = loop {
        let a = rng.gen_range(0..nc);
        let b = rng.gen_range(0..nc);
        if a != b {
            break (a, b);
        }
    };
    arrangement.swap_slots(a, b);
}

struct Individual<T> {
    arrangement: Arrangement,
    fitness: T,
}

/// Run the generational GA: roulette parents, crossover with
/// `crossover_rate` (copies otherwise), one swap mutation per child with
/// `mutation_rate`, elitism of one. The trace records the best-so-far
/// fitness per generation in the same shape the harmony search emits.
pub fn run_ga<T: Scalar>(
    adapter: &StorageAdapter<T>,
    params: &GaParams,
) -> Result<RunTrace<ContainerId, T>> {
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let pop_size = params.population_size;

    let mut population: Vec<Individual<T>> = (0..pop_size)
        .map(|_| {
            let ids = adapter.random_feasible(&mut rng);
            let fitness = adapter.fitness(&ids);
            Individual {
                arrangement: Arrangement::from_vec_unchecked(ids),
                fitness,
            }
        })
        .collect();
    let mut evaluations = pop_size;

    let best_of = |pop: &[Individual<T>]| -> usize {
        let mut best = 0;
        for (j, ind) in pop.iter().enumerate().skip(1) {
            if ind.fitness < pop[best].fitness {
                best = j;
            }
        }
        best
    };

    let initial_best = best_of(&population);
    let f_initial = population[initial_best].fitness;
    let mut best_fitness = f_initial;
    let mut best_ids = population[initial_best].arrangement.ids().to_vec();

    let mut history = Vec::new();
    let mut stagnation = 0usize;
    let mut generations = 0usize;

    loop {
        if params.max_generations.is_some_and(|g| generations >= g) {
            break;
        }
        if params
            .stagnation_limit
            .is_some_and(|limit| stagnation >= limit)
        {
            break;
        }
        if params.max_evaluations.is_some_and(|e| evaluations >= e) {
            break;
        }

        let fitness_column: Vec<T> = population.iter().map(|ind| ind.fitness).collect();
        let elite = best_of(&population);
        let mut next: Vec<Individual<T>> = Vec::with_capacity(pop_size);
        next.push(Individual {
            arrangement: population[elite].arrangement.clone(),
            fitness: population[elite].fitness,
        });

        while next.len() < pop_size {
            let pa = roulette_select(&fitness_column, &mut rng);
            let pb = roulette_select(&fitness_column, &mut rng);
            let (mut c1, mut c2) = if rng.gen::<f64>() < params.crossover_rate {
                two_point_crossover(
                    &population[pa].arrangement,
                    &population[pb].arrangement,
                    &mut rng,
                )
            } else {
                (
                    population[pa].arrangement.clone(),
                    population[pb].arrangement.clone(),
                )
            };
            if rng.gen::<f64>() < params.mutation_rate {
                swap_mutation(&mut c1, &mut rng);
            }
            let f1 = adapter.fitness(c1.ids());
            evaluations += 1;
            next.push(Individual {
                arrangement: c1,
                fitness: f1,
            });
            if next.len() < pop_size {
                if rng.gen::<f64>() < params.mutation_rate {
                    swap_mutation(&mut c2, &mut rng);
                }
                let f2 = adapter.fitness(c2.ids());
                evaluations += 1;
                next.push(Individual {
                    arrangement: c2,
                    fitness: f2,
                });
            }
        }

        population = next;
        generations += 1;
        let gen_best = best_of(&population);
        if population[gen_best].fitness < best_fitness {
            best_fitness = population[gen_best].fitness;
            best_ids = population[gen_best].arrangement.ids().to_vec();
            stagnation = 0;
        } else {
            stagnation += 1;
        }
        history.push(best_fitness);
    }

    Ok(RunTrace {
        history,
        f_initial,
        f_final: best_fitness,
        evaluations,
        best: best_ids,
    })
}
