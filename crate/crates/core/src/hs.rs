//! Generic harmony-search engine over vectors of discrete decision
//! variables.
//!
//! The engine keeps a harmony memory of the `hms` best vectors found so
//! far and improvises new ones variable by variable: with probability
//! `hmcr` the value is drawn from the memory column of that variable
//! (and then nudged to a neighboring domain value with probability
//! `par`), otherwise it is drawn uniformly from the variable's domain.
//! Feasibility, repair and fitness live behind [`ProblemAdapter`], so the
//! engine knows nothing about the storage problem itself.
//!
//! Every run draws from a single seeded generator in a fixed order (per
//! improvisation, variables in ascending order, each drawing its
//! consideration coin, column or domain pick, adjustment coin and
//! direction coin as needed, then repair), so a seed fully determines a
//! run.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::trace::RunTrace;

/// Direction of a pitch adjustment in an ordered value domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// One pitch adjustment recorded during improvisation: the value drawn
/// from memory for a variable is to be nudged to a neighboring domain
/// value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PitchAdjustment<V> {
    /// Variable index the value was drawn for.
    pub variable: usize,
    /// The memory-drawn value being adjusted.
    pub value: V,
    pub direction: Direction,
}

/// Harmony-search parameters.
#[derive(Debug, Clone)]
pub struct EngineParams {
    /// Harmony memory size.
    pub hms: usize,
    /// Harmony memory considering rate, in `[0, 1]`.
    pub hmcr: f64,
    /// Pitch adjustment rate, in `[0, 1]`. Applies only to values drawn
    /// from memory.
    pub par: f64,
    /// Distance bandwidth for continuous pitch adjustment; unused by
    /// discrete problems.
    pub bw: f64,
    /// Stop after this many improvisations.
    pub max_improvisations: Option<usize>,
    /// Stop once the memory has not improved (no candidate accepted)
    /// for this many consecutive improvisations.
    pub stagnation_limit: Option<usize>,
    /// Seed of the run's random generator.
    pub seed: u64,
}

impl Default for EngineParams {
    fn default() -> Self {
        Self {
            hms: 50,
            hmcr: 0.95,
            par: 0.1,
            bw: 0.01,
            max_improvisations: None,
            stagnation_limit: Some(20),
            seed: 0,
        }
    }
}

impl EngineParams {
    pub fn validate(&self) -> Result<()> {
        if self.hms == 0 {
            return Err(Error::InvalidParams("hms must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.hmcr) {
            return Err(Error::InvalidParams(format!(
                "hmcr must be in [0, 1], got {}",
                self.hmcr
            )));
        }
        if !(0.0..=1.0).contains(&self.par) {
            return Err(Error::InvalidParams(format!(
                "par must be in [0, 1], got {}",
                self.par
            )));
        }
        if !self.bw.is_finite() || self.bw < 0.0 {
            return Err(Error::InvalidParams(format!(
                "bw must be finite and >= 0, got {}",
                self.bw
            )));
        }
        if self.max_improvisations == Some(0) || self.stagnation_limit == Some(0) {
            return Err(Error::InvalidParams(
                "termination limits must be >= 1 when set".into(),
            ));
        }
        if self.max_improvisations.is_none() && self.stagnation_limit.is_none() {
            return Err(Error::InvalidParams(
                "at least one termination limit must be active".into(),
            ));
        }
        Ok(())
    }

    /// Cap the total number of fitness evaluations (memory initialization
    /// plus one per improvisation).
    pub fn with_max_evaluations(mut self, evaluations: usize) -> Self {
        self.max_improvisations = Some(evaluations.saturating_sub(self.hms).max(1));
        self
    }
}

/// The optimization problem as seen by the engine.
///
/// Contract: `repair` output and `random_feasible` output always satisfy
/// `is_feasible`; `fitness` is deterministic given a vector;
/// `apply_pitch_adjustments` keeps a feasible vector feasible.
pub trait ProblemAdapter {
    type Value: Copy + Eq + std::hash::Hash + std::fmt::Debug;
    type Fitness: Scalar;

    /// Number of decision variables.
    fn variable_count(&self) -> usize;

    /// Ordered finite domain of variable `i` (0-based).
    fn domain(&self, i: usize) -> &[Self::Value];

    /// Whether improvised vectors must not repeat a value (permutation
    /// encodings). When set, memory consideration and random draws are
    /// restricted to values unused so far in the vector under
    /// construction, so candidates come out feasible instead of leaning
    /// on duplicate repair.
    fn distinct_values(&self) -> bool {
        false
    }

    /// A uniformly random feasible vector.
    fn random_feasible<R: Rng>(&self, rng: &mut R) -> Vec<Self::Value>;

    /// Turn a raw improvised vector into a feasible one.
    fn repair<R: Rng>(&self, raw: Vec<Self::Value>, rng: &mut R) -> Result<Vec<Self::Value>>;

    fn is_feasible(&self, values: &[Self::Value]) -> bool;

    fn fitness(&self, values: &[Self::Value]) -> Self::Fitness;

    /// Apply the pitch adjustments recorded during improvisation to a
    /// repaired vector, in order. The default replaces the value at each
    /// adjusted variable with its domain neighbor (clamped at the ends),
    /// which suits problems whose variables are independent; encodings
    /// with cross-variable invariants override this.
    fn apply_pitch_adjustments(
        &self,
        values: &mut [Self::Value],
        adjustments: &[PitchAdjustment<Self::Value>],
    ) {
        for adj in adjustments {
            let domain = self.domain(adj.variable);
            if let Some(k) = domain.iter().position(|v| *v == values[adj.variable]) {
                values[adj.variable] = domain[neighbor_index(k, domain.len(), adj.direction)];
            }
        }
    }
}

/// Step a domain index one place in `direction`, staying in range: at a
/// boundary the single valid direction is used, and a singleton domain
/// stays put.
pub fn neighbor_index(k: usize, len: usize, direction: Direction) -> usize {
    debug_assert!(k < len);
    if len < 2 {
        return k;
    }
    match direction {
        Direction::Up => {
            if k + 1 < len {
                k + 1
            } else {
                k - 1
            }
        }
        Direction::Down => {
            if k > 0 {
                k - 1
            } else {
                k + 1
            }
        }
    }
}

/// One stored harmony.
#[derive(Debug, Clone, PartialEq)]
pub struct MemoryEntry<V, T> {
    pub values: Vec<V>,
    pub fitness: T,
}

/// The harmony memory: exactly `hms` feasible vectors with cached
/// fitness, tracking the index of the worst entry.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonyMemory<V, T> {
    entries: Vec<MemoryEntry<V, T>>,
    worst: usize,
}

impl<V, T: Scalar> HarmonyMemory<V, T> {
    pub fn entries(&self) -> &[MemoryEntry<V, T>] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn worst_index(&self) -> usize {
        self.worst
    }

    pub fn worst_fitness(&self) -> T {
        self.entries[self.worst].fitness
    }

    /// Entry with the smallest fitness (first one on ties).
    pub fn best(&self) -> &MemoryEntry<V, T> {
        let mut best = 0;
        for (j, entry) in self.entries.iter().enumerate().skip(1) {
            if entry.fitness < self.entries[best].fitness {
                best = j;
            }
        }
        &self.entries[best]
    }

    fn recompute_worst(&mut self) {
        let mut worst = 0;
        for (j, entry) in self.entries.iter().enumerate().skip(1) {
            if entry.fitness > self.entries[worst].fitness {
                worst = j;
            }
        }
        self.worst = worst;
    }
}

/// Fill the memory with `hms` random feasible vectors and their fitness.
pub fn init_memory<A, R>(
    adapter: &A,
    params: &EngineParams,
    rng: &mut R,
) -> Result<HarmonyMemory<A::Value, A::Fitness>>
where
    A: ProblemAdapter,
    R: Rng,
{
    params.validate()?;
    let n = adapter.variable_count();
    if n == 0 {
        return Err(Error::InvalidParams(
            "adapter declares zero decision variables".into(),
        ));
    }
    for i in 0..n {
        if adapter.domain(i).is_empty() {
            return Err(Error::EmptyDomain { variable: i });
        }
    }
    let mut entries = Vec::with_capacity(params.hms);
    for _ in 0..params.hms {
        let values = adapter.random_feasible(rng);
        if !adapter.is_feasible(&values) {
            return Err(Error::Infeasible(
                "adapter produced an infeasible initial vector".into(),
            ));
        }
        let fitness = adapter.fitness(&values);
        entries.push(MemoryEntry { values, fitness });
    }
    let mut memory = HarmonyMemory { entries, worst: 0 };
    memory.recompute_worst();
    Ok(memory)
}

/// The memory-consideration rule: with probability `hmcr` a value from
/// column `i` of the memory, otherwise a uniform draw from the domain.
pub fn memory_consideration<A, R>(
    memory: &HarmonyMemory<A::Value, A::Fitness>,
    i: usize,
    adapter: &A,
    params: &EngineParams,
    rng: &mut R,
) -> A::Value
where
    A: ProblemAdapter,
    R: Rng,
{
    consider(memory, i, adapter, params, rng).0
}

fn consider<A, R>(
    memory: &HarmonyMemory<A::Value, A::Fitness>,
    i: usize,
    adapter: &A,
    params: &EngineParams,
    rng: &mut R,
) -> (A::Value, bool)
where
    A: ProblemAdapter,
    R: Rng,
{
    if rng.gen::<f64>() < params.hmcr {
        let row = rng.gen_range(0..memory.len());
        (memory.entries[row].values[i], true)
    } else {
        let domain = adapter.domain(i);
        (domain[rng.gen_range(0..domain.len())], false)
    }
}

/// Decide whether a memory-drawn value gets pitch-adjusted and in which
/// direction. Draws the adjustment coin, then the direction coin only if
/// the adjustment fires.
fn adjust_decision<R: Rng>(params: &EngineParams, rng: &mut R) -> Option<Direction> {
    if rng.gen::<f64>() < params.par {
        Some(if rng.gen::<bool>() {
            Direction::Up
        } else {
            Direction::Down
        })
    } else {
        None
    }
}

/// Discrete pitch adjustment of domain index `k` for variable `i`: with
/// probability `par` moves to a neighboring index (clamped at the
/// ends), otherwise returns `k` unchanged. Callers apply this only to
/// values that came from memory consideration.
pub fn pitch_adjust_discrete<A, R>(
    k: usize,
    i: usize,
    adapter: &A,
    params: &EngineParams,
    rng: &mut R,
) -> usize
where
    A: ProblemAdapter,
    R: Rng,
{
    match adjust_decision(params, rng) {
        Some(direction) => neighbor_index(k, adapter.domain(i).len(), direction),
        None => k,
    }
}

/// Continuous pitch adjustment: with probability `par` returns
/// `value ± bw·u` with `u` uniform on `(0, 1)` and a fair sign coin,
/// otherwise the value unchanged.
pub fn pitch_adjust_continuous<T, R>(value: T, params: &EngineParams, rng: &mut R) -> T
where
    T: Scalar,
    R: Rng,
{
    match adjust_decision(params, rng) {
        Some(direction) => {
            let step = T::from_f64(params.bw * rng.gen::<f64>()).expect("bw step fits scalar");
            match direction {
                Direction::Up => value + step,
                Direction::Down => value - step,
            }
        }
        None => value,
    }
}

/// Tracks the values already placed in a vector under construction.
/// Linear scanning wins for short vectors, hashing for long ones.
enum UsedSet<V> {
    Small(Vec<V>),
    Large(std::collections::HashSet<V>),
}

impl<V: Copy + Eq + std::hash::Hash> UsedSet<V> {
    fn with_capacity(n: usize) -> Self {
        if n <= 32 {
            UsedSet::Small(Vec::with_capacity(n))
        } else {
            UsedSet::Large(std::collections::HashSet::with_capacity(n))
        }
    }

    fn contains(&self, value: &V) -> bool {
        match self {
            UsedSet::Small(v) => v.contains(value),
            UsedSet::Large(s) => s.contains(value),
        }
    }

    fn insert(&mut self, value: V) {
        match self {
            UsedSet::Small(v) => v.push(value),
            UsedSet::Large(s) => {
                s.insert(value);
            }
        }
    }
}

/// Uniform draw among the domain values of variable `i` not yet used: a
/// few rejection attempts against the full domain, then an exact scan.
/// Falls back to an unrestricted draw when every domain value is used
/// (repair resolves the duplicate later).
fn unused_domain_pick<A, R>(
    adapter: &A,
    i: usize,
    used: &UsedSet<A::Value>,
    rng: &mut R,
) -> A::Value
where
    A: ProblemAdapter,
    R: Rng,
{
    let domain = adapter.domain(i);
    for _ in 0..8 {
        let v = domain[rng.gen_range(0..domain.len())];
        if !used.contains(&v) {
            return v;
        }
    }
    let unused: Vec<A::Value> = domain
        .iter()
        .copied()
        .filter(|v| !used.contains(v))
        .collect();
    if unused.is_empty() {
        domain[rng.gen_range(0..domain.len())]
    } else {
        unused[rng.gen_range(0..unused.len())]
    }
}

/// Improvise one candidate vector: memory consideration and pitch
/// adjustment per variable in ascending order, then adapter repair, then
/// application of the recorded adjustments. The result always satisfies
/// `adapter.is_feasible`.
///
/// For adapters with independent variables the memory draw is uniform
/// over the whole memory column. When the adapter declares
/// [`ProblemAdapter::distinct_values`], each draw is restricted to the
/// values still unused in the vector under construction (memory column
/// first, falling back to an unused domain value when the admissible
/// column is empty), so the raw vector respects the encoding before
/// repair ever sees it.
pub fn improvise<A, R>(
    memory: &HarmonyMemory<A::Value, A::Fitness>,
    adapter: &A,
    params: &EngineParams,
    rng: &mut R,
) -> Result<Vec<A::Value>>
where
    A: ProblemAdapter,
    R: Rng,
{
    let n = adapter.variable_count();
    let mut raw = Vec::with_capacity(n);
    let mut adjustments: Vec<PitchAdjustment<A::Value>> = Vec::new();
    if adapter.distinct_values() {
        let mut used = UsedSet::with_capacity(n);
        let mut admissible: Vec<A::Value> = Vec::with_capacity(memory.len());
        for i in 0..n {
            let mut from_memory = false;
            let value = if rng.gen::<f64>() < params.hmcr {
                admissible.clear();
                for entry in memory.entries() {
                    let v = entry.values[i];
                    if !used.contains(&v) {
                        admissible.push(v);
                    }
                }
                if admissible.is_empty() {
                    unused_domain_pick(adapter, i, &used, rng)
                } else {
                    from_memory = true;
                    admissible[rng.gen_range(0..admissible.len())]
                }
            } else {
                unused_domain_pick(adapter, i, &used, rng)
            };
            if from_memory {
                if let Some(direction) = adjust_decision(params, rng) {
                    adjustments.push(PitchAdjustment {
                        variable: i,
                        value,
                        direction,
                    });
                }
            }
            used.insert(value);
            raw.push(value);
        }
    } else {
        for i in 0..n {
            let (value, from_memory) = consider(memory, i, adapter, params, rng);
            if from_memory {
                if let Some(direction) = adjust_decision(params, rng) {
                    adjustments.push(PitchAdjustment {
                        variable: i,
                        value,
                        direction,
                    });
                }
            }
            raw.push(value);
        }
    }
    let mut values = adapter.repair(raw, rng)?;
    if !adjustments.is_empty() {
        adapter.apply_pitch_adjustments(&mut values, &adjustments);
    }
    if !adapter.is_feasible(&values) {
        return Err(Error::Infeasible(
            "improvised vector failed the feasibility re-check".into(),
        ));
    }
    Ok(values)
}

/// Replace the worst entry if the candidate is strictly better; ties are
/// rejected. Returns whether the candidate was accepted.
pub fn update_memory<V, T: Scalar>(
    memory: &mut HarmonyMemory<V, T>,
    candidate: Vec<V>,
    fitness: T,
) -> bool {
    if fitness < memory.worst_fitness() {
        let worst = memory.worst;
        memory.entries[worst] = MemoryEntry {
            values: candidate,
            fitness,
        };
        memory.recompute_worst();
        true
    } else {
        false
    }
}

/// Run harmony search to termination: improvise and update until the
/// improvisation budget is exhausted or the memory stagnates
/// (`stagnation_limit` consecutive candidates rejected).
pub fn run<A>(adapter: &A, params: &EngineParams) -> Result<RunTrace<A::Value, A::Fitness>>
where
    A: ProblemAdapter,
{
    params.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut memory = init_memory(adapter, params, &mut rng)?;
    let mut evaluations = memory.len();

    let best_entry = memory.best();
    let mut best_fitness = best_entry.fitness;
    let mut best_values = best_entry.values.clone();
    let f_initial = best_fitness;

    let mut history = Vec::new();
    let mut stagnation = 0usize;
    loop {
        if params
            .max_improvisations
            .is_some_and(|limit| history.len() >= limit)
        {
            break;
        }
        if params
            .stagnation_limit
            .is_some_and(|limit| stagnation >= limit)
        {
            break;
        }
        let candidate = improvise(&memory, adapter, params, &mut rng)?;
        let fitness = adapter.fitness(&candidate);
        evaluations += 1;
        if fitness < best_fitness {
            best_fitness = fitness;
            best_values = candidate.clone();
        }
        if update_memory(&mut memory, candidate, fitness) {
            stagnation = 0;
        } else {
            stagnation += 1;
        }
        history.push(best_fitness);
        debug_assert_eq!(memory.len(), params.hms);
    }

    Ok(RunTrace {
        history,
        f_initial,
        f_final: best_fitness,
        evaluations,
        best: best_values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent test adapter: one ordered domain per variable, no
    /// cross-variable constraints, fitness = sum of values.
    struct Independent {
        domains: Vec<Vec<i64>>,
    }

    impl Independent {
        fn uniform(n: usize, domain: Vec<i64>) -> Self {
            Self {
                domains: vec![domain; n],
            }
        }
    }

    impl ProblemAdapter for Independent {
        type Value = i64;
        type Fitness = f64;

        fn variable_count(&self) -> usize {
            self.domains.len()
        }

        fn domain(&self, i: usize) -> &[i64] {
            &self.domains[i]
        }

        fn random_feasible<R: Rng>(&self, rng: &mut R) -> Vec<i64> {
            self.domains
                .iter()
                .map(|d| d[rng.gen_range(0..d.len())])
                .collect()
        }

        fn repair<R: Rng>(&self, raw: Vec<i64>, _rng: &mut R) -> crate::Result<Vec<i64>> {
            Ok(raw)
        }

        fn is_feasible(&self, values: &[i64]) -> bool {
            values.len() == self.domains.len()
                && values
                    .iter()
                    .zip(&self.domains)
                    .all(|(v, d)| d.contains(v))
        }

        fn fitness(&self, values: &[i64]) -> f64 {
            values.iter().map(|&v| v as f64).sum()
        }
    }

    fn params(hms: usize, hmcr: f64, par: f64) -> EngineParams {
        EngineParams {
            hms,
            hmcr,
            par,
            stagnation_limit: Some(20),
            ..EngineParams::default()
        }
    }

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn singleton_domain_memory() {
        let adapter = Independent::uniform(1, vec![7]);
        let memory = init_memory(&adapter, &params(3, 0.95, 0.1), &mut rng(1)).unwrap();
        assert_eq!(memory.len(), 3);
        for entry in memory.entries() {
            assert_eq!(entry.values, vec![7]);
        }
        assert!(memory.worst_index() < 3);
    }

    #[test]
    fn empty_domain_is_a_configuration_error() {
        let adapter = Independent {
            domains: vec![vec![1], vec![]],
        };
        let err = init_memory(&adapter, &params(2, 0.95, 0.1), &mut rng(1)).unwrap_err();
        assert!(matches!(err, Error::EmptyDomain { variable: 1 }));
    }

    #[test]
    fn params_validation() {
        assert!(params(0, 0.95, 0.1).validate().is_err());
        assert!(params(5, 1.5, 0.1).validate().is_err());
        assert!(params(5, 0.95, -0.1).validate().is_err());
        let mut no_limit = params(5, 0.95, 0.1);
        no_limit.stagnation_limit = None;
        assert!(no_limit.validate().is_err());
        no_limit.max_improvisations = Some(10);
        assert!(no_limit.validate().is_ok());
    }

    #[test]
    fn consideration_degenerate_hmcr_one() {
        let adapter = Independent::uniform(1, (1..=10).collect());
        let p = params(3, 1.0, 0.0);
        let mut r = rng(2);
        let mut memory = init_memory(&adapter, &p, &mut r).unwrap();
        for entry in memory.entries.iter_mut() {
            entry.values = vec![5];
        }
        for _ in 0..200 {
            assert_eq!(memory_consideration(&memory, 0, &adapter, &p, &mut r), 5);
        }
    }

    #[test]
    fn consideration_hmcr_zero_is_uniform_on_domain() {
        // Chi-squared goodness of fit against the uniform distribution
        // on 1..=64 at significance 0.001.
        use statrs::distribution::{ChiSquared, ContinuousCDF};

        let adapter = Independent::uniform(1, (1..=64).collect());
        let p = params(3, 0.0, 0.0);
        let mut r = rng(3);
        let memory = init_memory(&adapter, &p, &mut r).unwrap();
        let draws = 10_000usize;
        let mut counts = [0u32; 64];
        for _ in 0..draws {
            let v = memory_consideration(&memory, 0, &adapter, &p, &mut r);
            counts[(v - 1) as usize] += 1;
        }
        let expected = draws as f64 / 64.0;
        let stat: f64 = counts
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        let critical = ChiSquared::new(63.0).unwrap().inverse_cdf(0.999);
        assert!(
            stat < critical,
            "chi-squared stat {stat} exceeds critical {critical}"
        );
    }

    #[test]
    fn consideration_rate_matches_hmcr() {
        // Memory column holds only the value 1; the domain is 1..=100.
        // P(draw == 1) = hmcr + (1 - hmcr)/100.
        let adapter = Independent::uniform(1, (1..=100).collect());
        let p = params(3, 0.95, 0.0);
        let mut r = rng(4);
        let mut memory = init_memory(&adapter, &p, &mut r).unwrap();
        for entry in memory.entries.iter_mut() {
            entry.values = vec![1];
        }
        let draws = 10_000usize;
        let hits = (0..draws)
            .filter(|_| memory_consideration(&memory, 0, &adapter, &p, &mut r) == 1)
            .count();
        let expect = 0.95 + 0.05 / 100.0;
        let freq = hits as f64 / draws as f64;
        assert!(
            (freq - expect).abs() < 0.02,
            "memory-draw frequency {freq} not within 0.02 of {expect}"
        );
    }

    #[test]
    fn pitch_adjust_par_zero_is_identity() {
        let adapter = Independent::uniform(1, (1..=10).collect());
        let p = params(3, 0.95, 0.0);
        let mut r = rng(5);
        for k in 0..10 {
            assert_eq!(pitch_adjust_discrete(k, 0, &adapter, &p, &mut r), k);
        }
    }

    #[test]
    fn pitch_adjust_clamps_at_boundary() {
        let adapter = Independent::uniform(1, (1..=10).collect());
        let p = params(3, 0.95, 1.0);
        let mut r = rng(6);
        for _ in 0..100 {
            // Index 0 holds domain value 1; its only neighbor is index 1.
            assert_eq!(pitch_adjust_discrete(0, 0, &adapter, &p, &mut r), 1);
            assert_eq!(pitch_adjust_discrete(9, 0, &adapter, &p, &mut r), 8);
        }
    }

    #[test]
    fn pitch_adjust_rate_and_direction_split() {
        let adapter = Independent::uniform(1, (1..=11).collect());
        let p = params(3, 0.95, 0.1);
        let mut r = rng(7);
        let draws = 10_000usize;
        let k = 5;
        let mut moved = 0usize;
        let mut up = 0usize;
        for _ in 0..draws {
            let k2 = pitch_adjust_discrete(k, 0, &adapter, &p, &mut r);
            if k2 != k {
                moved += 1;
                if k2 == k + 1 {
                    up += 1;
                }
            }
        }
        let frac = moved as f64 / draws as f64;
        assert!((frac - 0.10).abs() < 0.01, "moved fraction {frac}");
        let split = up as f64 / moved as f64;
        assert!((0.4..=0.6).contains(&split), "direction split {split}");
    }

    #[test]
    fn pitch_adjust_continuous_interval() {
        let p = EngineParams {
            par: 1.0,
            bw: 0.5,
            ..EngineParams::default()
        };
        let mut r = rng(8);
        for _ in 0..10_000 {
            let v = pitch_adjust_continuous(1.0f64, &p, &mut r);
            assert!((0.5..=1.5).contains(&v), "adjusted value {v} out of range");
        }
        let zero_bw = EngineParams {
            par: 1.0,
            bw: 0.0,
            ..EngineParams::default()
        };
        for _ in 0..100 {
            assert_eq!(pitch_adjust_continuous(1.0f64, &zero_bw, &mut r), 1.0);
        }
        let zero_par = EngineParams {
            par: 0.0,
            bw: 0.5,
            ..EngineParams::default()
        };
        for _ in 0..100 {
            assert_eq!(pitch_adjust_continuous(1.0f64, &zero_par, &mut r), 1.0);
        }
    }

    #[test]
    fn improvise_identity_on_uniform_memory() {
        let adapter = Independent::uniform(4, (1..=9).collect());
        let p = params(5, 1.0, 0.0);
        let mut r = rng(9);
        let mut memory = init_memory(&adapter, &p, &mut r).unwrap();
        let v = vec![3, 1, 4, 1];
        for entry in memory.entries.iter_mut() {
            entry.values = v.clone();
        }
        for _ in 0..50 {
            assert_eq!(improvise(&memory, &adapter, &p, &mut r).unwrap(), v);
        }
    }

    #[test]
    fn update_memory_rules() {
        let mut memory = HarmonyMemory {
            entries: vec![
                MemoryEntry {
                    values: vec![1],
                    fitness: 10.0f64,
                },
                MemoryEntry {
                    values: vec![2],
                    fitness: 20.0,
                },
                MemoryEntry {
                    values: vec![3],
                    fitness: 30.0,
                },
            ],
            worst: 2,
        };

        // Equal to the worst: rejected, memory untouched.
        let before = memory.clone();
        assert!(!update_memory(&mut memory, vec![9], 30.0));
        assert_eq!(memory, before);

        // Worse than the worst: rejected.
        assert!(!update_memory(&mut memory, vec![9], 35.0));
        assert_eq!(memory, before);

        // Between: replaces the worst, worst index moves to it.
        assert!(update_memory(&mut memory, vec![9], 25.0));
        assert_eq!(memory.worst_fitness(), 25.0);
        assert_eq!(memory.entries()[2].values, vec![9]);
        assert_eq!(memory.len(), 3);
    }

    #[test]
    fn run_singleton_stops_at_stagnation_limit() {
        let adapter = Independent::uniform(1, vec![7]);
        let p = EngineParams {
            hms: 3,
            stagnation_limit: Some(20),
            ..EngineParams::default()
        };
        let trace = run(&adapter, &p).unwrap();
        assert_eq!(trace.iterations(), 20);
        assert_eq!(trace.f_initial, 7.0);
        assert_eq!(trace.f_final, 7.0);
        assert_eq!(trace.evaluations, 3 + 20);
        assert_eq!(trace.best, vec![7]);
    }

    /// Delegates to [`Independent`] but always initializes with the same
    /// vector, so a run starts from a memory of identical entries.
    struct ConvergedInit {
        inner: Independent,
        vector: Vec<i64>,
    }

    impl ProblemAdapter for ConvergedInit {
        type Value = i64;
        type Fitness = f64;

        fn variable_count(&self) -> usize {
            self.inner.variable_count()
        }
        fn domain(&self, i: usize) -> &[i64] {
            self.inner.domain(i)
        }
        fn random_feasible<R: Rng>(&self, _rng: &mut R) -> Vec<i64> {
            self.vector.clone()
        }
        fn repair<R: Rng>(&self, raw: Vec<i64>, rng: &mut R) -> crate::Result<Vec<i64>> {
            self.inner.repair(raw, rng)
        }
        fn is_feasible(&self, values: &[i64]) -> bool {
            self.inner.is_feasible(values)
        }
        fn fitness(&self, values: &[i64]) -> f64 {
            self.inner.fitness(values)
        }
    }

    #[test]
    fn run_fixed_point_with_degenerate_params() {
        // HMCR = 1, PAR = 0 and a memory of identical vectors: the best
        // never moves and the run stops at the stagnation limit.
        let adapter = ConvergedInit {
            inner: Independent::uniform(3, (1..=5).collect()),
            vector: vec![4, 2, 3],
        };
        let p = EngineParams {
            hms: 4,
            hmcr: 1.0,
            par: 0.0,
            stagnation_limit: Some(50),
            seed: 11,
            ..EngineParams::default()
        };
        let trace = run(&adapter, &p).unwrap();
        assert_eq!(trace.iterations(), 50);
        assert_eq!(trace.f_initial, 9.0);
        assert_eq!(trace.f_final, 9.0);
        assert_eq!(trace.best, vec![4, 2, 3]);
        assert!(trace.history.iter().all(|&f| f == trace.f_initial));
    }

    #[test]
    fn run_is_deterministic() {
        let adapter = Independent::uniform(6, (1..=8).collect());
        let p = EngineParams {
            hms: 5,
            seed: 42,
            stagnation_limit: Some(100),
            ..EngineParams::default()
        };
        let a = run(&adapter, &p).unwrap();
        let b = run(&adapter, &p).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn run_history_is_monotone() {
        let adapter = Independent::uniform(6, (1..=8).collect());
        let p = EngineParams {
            hms: 5,
            seed: 7,
            stagnation_limit: Some(200),
            ..EngineParams::default()
        };
        let trace = run(&adapter, &p).unwrap();
        for pair in trace.history.windows(2) {
            assert!(pair[1] <= pair[0]);
        }
        assert_eq!(trace.f_final, *trace.history.last().unwrap());
    }

    #[test]
    fn neighbor_index_cases() {
        assert_eq!(neighbor_index(0, 1, Direction::Up), 0);
        assert_eq!(neighbor_index(0, 5, Direction::Down), 1);
        assert_eq!(neighbor_index(4, 5, Direction::Up), 3);
        assert_eq!(neighbor_index(2, 5, Direction::Up), 3);
        assert_eq!(neighbor_index(2, 5, Direction::Down), 1);
    }
}
