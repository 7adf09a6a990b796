//! Experiment campaigns over the solvers: seeded instance generation,
//! the table/figure sweep protocols, and CSV emission.
//!
//! A campaign is a pure function of its spec: every row derives its
//! seeds from the base seed through a documented SplitMix64 chain, rows
//! come out in sweep-then-replication order, and the emitted bytes carry
//! no wall-clock data, so rerunning a spec reproduces its files exactly.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ga::{run_ga, GaParams};
use crate::hs::{self, EngineParams};
use crate::scalar::Scalar;
use crate::storage::{make_adapter, Instance};

/// Delivery dates of generated instances are uniform on `1..=MAX_DATE`.
pub const MAX_DATE: u32 = 365;

/// Harmony memory considering rate used by every campaign.
pub const DEFAULT_HMCR: f64 = 0.95;
/// Pitch adjustment rate used by every campaign.
pub const DEFAULT_PAR: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentKind {
    /// Sweep the container count, harmony search only.
    Table1,
    /// Sweep the stagnation limit at a fixed container count.
    Table2,
    /// Sweep the harmony memory size.
    Table3,
    /// Sweep population size; harmony search versus the GA at matched
    /// evaluation budgets.
    Table4,
    /// Sweep the container count; harmony search versus the GA.
    Fig6,
    /// A single sweep point, harmony search only.
    Single,
}

impl ExperimentKind {
    pub fn id(&self) -> &'static str {
        match self {
            ExperimentKind::Table1 => "table1",
            ExperimentKind::Table2 => "table2",
            ExperimentKind::Table3 => "table3",
            ExperimentKind::Table4 => "table4",
            ExperimentKind::Fig6 => "fig6",
            ExperimentKind::Single => "single",
        }
    }

    /// Name of the swept parameter.
    pub fn param(&self) -> &'static str {
        match self {
            ExperimentKind::Table1 | ExperimentKind::Fig6 | ExperimentKind::Single => "nc",
            ExperimentKind::Table2 => "stagnation",
            ExperimentKind::Table3 => "hms",
            ExperimentKind::Table4 => "pop",
        }
    }

    fn runs_ga(&self) -> bool {
        matches!(self, ExperimentKind::Table4 | ExperimentKind::Fig6)
    }
}

impl FromStr for ExperimentKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" => Ok(ExperimentKind::Table1),
            "table2" => Ok(ExperimentKind::Table2),
            "table3" => Ok(ExperimentKind::Table3),
            "table4" => Ok(ExperimentKind::Table4),
            "fig6" => Ok(ExperimentKind::Fig6),
            "single" => Ok(ExperimentKind::Single),
            other => Err(Error::InvalidParams(format!(
                "unknown experiment '{other}'"
            ))),
        }
    }
}

impl fmt::Display for ExperimentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One campaign: an experiment kind with its swept values, the fixed
/// parameters the sweep leaves alone, and the replication count.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub kind: ExperimentKind,
    /// Swept values; their meaning depends on the kind (see
    /// [`ExperimentKind::param`]).
    pub sweep: Vec<u64>,
    /// Harmony memory size (and GA population) where the sweep does not
    /// set it.
    pub hms: usize,
    /// Stagnation limit where the sweep does not set it.
    pub stagnation: usize,
    /// Container count where the sweep does not set it.
    pub nc: u32,
    pub replications: usize,
    pub base_seed: u64,
}

impl ExperimentSpec {
    /// The standard protocol for `kind`: container sweeps run
    /// `{64, 125, 343, 729, 1000}` at HMS 50 and stagnation 20;
    /// stagnation sweeps run `{20, 50, 100, 150, 175, 200}` at 64
    /// containers; memory/population sweeps run `{20, 50, 75, 100, 125}`
    /// at 125 containers and stagnation 100.
    pub fn new(kind: ExperimentKind, replications: usize, base_seed: u64) -> Self {
        let (sweep, hms, stagnation, nc): (Vec<u64>, usize, usize, u32) = match kind {
            ExperimentKind::Table1 | ExperimentKind::Fig6 => {
                (vec![64, 125, 343, 729, 1000], 50, 20, 0)
            }
            ExperimentKind::Table2 => (vec![20, 50, 100, 150, 175, 200], 50, 0, 64),
            ExperimentKind::Table3 | ExperimentKind::Table4 => {
                (vec![20, 50, 75, 100, 125], 0, 100, 125)
            }
            ExperimentKind::Single => (vec![64], 50, 20, 0),
        };
        Self {
            kind,
            sweep,
            hms,
            stagnation,
            nc,
            replications,
            base_seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.sweep.is_empty() {
            return Err(Error::EmptySweep);
        }
        if self.replications == 0 {
            return Err(Error::InvalidParams("replications must be >= 1".into()));
        }
        Ok(())
    }
}

/// One solver run inside a campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRow<T> {
    /// Experiment id; two-algorithm campaigns suffix it with the
    /// algorithm (`table4_hs`, `table4_ga`).
    pub experiment: String,
    /// Name of the swept parameter.
    pub param: String,
    /// Swept value of this row.
    pub value: u64,
    /// Seed the solver ran with.
    pub seed: u64,
    pub f_initial: T,
    pub f_final: T,
    /// Fitness evaluations spent, initialization included.
    pub evaluations: u64,
    /// Reserved wall-time column. Campaign output is a pure function of
    /// the spec, so rows always carry zero here; timings go to the
    /// terminal instead.
    pub wall_ms: f64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed stream for instance generation.
pub const STREAM_INSTANCE: u64 = 1;
/// Seed stream for harmony-search runs.
pub const STREAM_HS: u64 = 2;
/// Seed stream for GA runs.
pub const STREAM_GA: u64 = 3;

/// Derive an independent 64-bit seed from the campaign base seed, a
/// stream tag, the sweep index and the replication index by chaining
/// the SplitMix64 finalizer:
/// `s0 = sm(base); s1 = sm(s0 ^ stream); s2 = sm(s1 ^ sweep); sm(s2 ^ rep)`.
/// Adding replications or sweep points never changes existing seeds.
pub fn derive_seed(base: u64, stream: u64, sweep_index: u64, replication: u64) -> u64 {
    let mut z = splitmix64(base);
    z = splitmix64(z ^ stream);
    z = splitmix64(z ^ sweep_index);
    splitmix64(z ^ replication)
}

/// Smallest cube edge that holds `nc` containers.
pub fn cube_dims(nc: u32) -> u32 {
    let mut n = 1u32;
    while (n as u64).pow(3) < nc as u64 {
        n += 1;
    }
    n
}

/// Generate an instance with delivery dates uniform on `1..=365`,
/// deterministically from the seed.
pub fn generate_instance(n1: u32, n2: u32, n3: u32, nc: u32, seed: u64) -> Result<Instance> {
    let capacity = n1 as u64 * n2 as u64 * n3 as u64;
    if nc as u64 > capacity {
        return Err(Error::CapacityExceeded {
            nc: nc as u64,
            capacity,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dates = (0..nc).map(|_| rng.gen_range(1..=MAX_DATE)).collect();
    Instance::new(n1, n2, n3, dates)
}

/// Run every sweep point × replication of a campaign. Container sweeps
/// regenerate the instance per point; parameter sweeps at a fixed
/// container count reuse the same per-replication instance across the
/// sweep so points compare on identical problems.
pub fn run_experiment<T: Scalar>(spec: &ExperimentSpec) -> Result<Vec<ResultRow<T>>> {
    spec.validate()?;
    let mut rows = Vec::new();
    for (sweep_index, &value) in spec.sweep.iter().enumerate() {
        for rep in 0..spec.replications {
            run_point(spec, sweep_index, value, rep, &mut rows)?;
        }
    }
    Ok(rows)
}

fn run_point<T: Scalar>(
    spec: &ExperimentSpec,
    sweep_index: usize,
    value: u64,
    rep: usize,
    rows: &mut Vec<ResultRow<T>>,
) -> Result<()> {
    let kind = spec.kind;
    let sweeps_instance = matches!(
        kind,
        ExperimentKind::Table1 | ExperimentKind::Fig6 | ExperimentKind::Single
    );
    let instance_sweep = if sweeps_instance { sweep_index as u64 } else { 0 };
    // Paired stagnation sweeps also share the solver seed, so a longer
    // patience run is an exact extension of a shorter one.
    let solver_sweep = if kind == ExperimentKind::Table2 {
        0
    } else {
        sweep_index as u64
    };

    let nc = if sweeps_instance { value as u32 } else { spec.nc };
    let dims = cube_dims(nc);
    let instance_seed = derive_seed(spec.base_seed, STREAM_INSTANCE, instance_sweep, rep as u64);
    let instance = generate_instance(dims, dims, dims, nc, instance_seed)?;
    let adapter = make_adapter::<T>(instance);

    let hms = if kind == ExperimentKind::Table3 || kind == ExperimentKind::Table4 {
        value as usize
    } else {
        spec.hms
    };
    let stagnation = if kind == ExperimentKind::Table2 {
        value as usize
    } else {
        spec.stagnation
    };

    let hs_seed = derive_seed(spec.base_seed, STREAM_HS, solver_sweep, rep as u64);
    let hs_params = EngineParams {
        hms,
        hmcr: DEFAULT_HMCR,
        par: DEFAULT_PAR,
        stagnation_limit: Some(stagnation),
        max_improvisations: None,
        seed: hs_seed,
        ..EngineParams::default()
    };
    let hs_trace = hs::run(&adapter, &hs_params)?;
    let experiment = if kind.runs_ga() {
        format!("{}_hs", kind.id())
    } else {
        kind.id().to_string()
    };
    rows.push(ResultRow {
        experiment,
        param: kind.param().to_string(),
        value,
        seed: hs_seed,
        f_initial: hs_trace.f_initial,
        f_final: hs_trace.f_final,
        evaluations: hs_trace.evaluations as u64,
        wall_ms: 0.0,
    });

    if kind.runs_ga() {
        let ga_seed = derive_seed(spec.base_seed, STREAM_GA, solver_sweep, rep as u64);
        let ga_params = GaParams {
            population_size: hms,
            max_generations: None,
            stagnation_limit: None,
            max_evaluations: Some(hs_trace.evaluations),
            seed: ga_seed,
            ..GaParams::default()
        };
        let ga_trace = run_ga(&adapter, &ga_params)?;
        rows.push(ResultRow {
            experiment: format!("{}_ga", kind.id()),
            param: kind.param().to_string(),
            value,
            seed: ga_seed,
            f_initial: ga_trace.f_initial,
            f_final: ga_trace.f_final,
            evaluations: ga_trace.evaluations as u64,
            wall_ms: 0.0,
        });
    }
    Ok(())
}

/// Render rows as CSV: fixed header, six fractional digits on decimal
/// values, LF line endings.
pub fn csv_string<T: Scalar>(rows: &[ResultRow<T>]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str("experiment,param,value,seed,f_initial,f_final,evals,ms\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.6},{:.6},{},{:.6}\n",
            row.experiment,
            row.param,
            row.value,
            row.seed,
            row.f_initial,
            row.f_final,
            row.evaluations,
            row.wall_ms,
        ));
    }
    out
}

/// Write rows to a CSV file. Rows must be nonempty.
pub fn emit_csv<T: Scalar>(rows: &[ResultRow<T>], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::InvalidParams("no result rows to emit".into()));
    }
    std::fs::write(path, csv_string(rows))?;
    Ok(())
}

/// Parse a CSV produced by [`csv_string`] back into rows.
pub fn parse_csv<T: Scalar>(text: &str) -> Result<Vec<ResultRow<T>>> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty CSV".into()))?;
    if header != "experiment,param,value,seed,f_initial,f_final,evals,ms" {
        return Err(Error::Parse(format!("unexpected CSV header '{header}'")));
    }
    let mut rows = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(Error::Parse(format!(
                "line {}: expected 8 fields, got {}",
                lineno + 2,
                fields.len()
            )));
        }
        let bad = |what: &str| Error::Parse(format!("line {}: bad {what}", lineno + 2));
        let scalar = |s: &str, what: &str| -> Result<T> {
            let v: f64 = s.parse().map_err(|_| bad(what))?;
            T::from_f64(v).ok_or_else(|| bad(what))
        };
        rows.push(ResultRow {
            experiment: fields[0].to_string(),
            param: fields[1].to_string(),
            value: fields[2].parse().map_err(|_| bad("value"))?,
            seed: fields[3].parse().map_err(|_| bad("seed"))?,
            f_initial: scalar(fields[4], "f_initial")?,
            f_final: scalar(fields[5], "f_final")?,
            evaluations: fields[6].parse().map_err(|_| bad("evals"))?,
            wall_ms: fields[7].parse().map_err(|_| bad("ms"))?,
        });
    }
    Ok(rows)
}
