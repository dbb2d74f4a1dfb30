//! Flat JSON run configuration: CLI-level keys plus every tunable of the chosen
//! algorithm. Unknown keys are rejected; command-line flags override the file.

use std::path::{Path, PathBuf};

use bso_core::{Algorithm, BasConfig64, BsoConfig64, PenaltyConfig64, PsoConfig64};
use serde_json::{Map, Value};

use crate::CliError;

/// Effective configuration after merging defaults, the config file and flags.
#[derive(Debug, Clone)]
pub struct Effective {
    pub algorithm: String,
    pub problem: String,
    pub n_trials: usize,
    pub base_seed: u64,
    pub out: PathBuf,
    pub dim: Option<usize>,
    pub penalty_weight: f64,
    pub penalty_exponent: f64,
    pub tunables: Value,
}

/// Values given on the command line; `None` leaves the file or default in place.
#[derive(Debug, Default)]
pub struct Overrides {
    pub algorithm: Option<String>,
    pub problem: Option<String>,
    pub n_trials: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
    pub dim: Option<usize>,
    pub iters: Option<usize>,
    pub pop: Option<usize>,
}

pub fn read_file(path: &Path) -> Result<Map<String, Value>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
    match serde_json::from_str(&text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(CliError::usage(format!("config {} must be a JSON object", path.display()))),
        Err(e) => Err(CliError::usage(format!("config {}: {e}", path.display()))),
    }
}

fn take<T: serde::de::DeserializeOwned>(map: &mut Map<String, Value>, key: &str) -> Result<Option<T>, CliError> {
    map.remove(key)
        .map(|v| serde_json::from_value(v).map_err(|e| CliError::usage(format!("config key {key}: {e}"))))
        .transpose()
}

/// Merges `file` and `flags` over the defaults. `seed_is_base` picks whether
/// `--seed` sets the trial base seed (bench) or the single-run seed (run).
pub fn merge(
    mut file: Map<String, Value>,
    flags: Overrides,
    default_problem: &str,
    default_out: &str,
    seed_is_base: bool,
) -> Result<Effective, CliError> {
    let algorithm: String = flags
        .algorithm
        .or(take(&mut file, "algorithm")?)
        .unwrap_or_else(|| "bso".into())
        .to_ascii_lowercase();
    let problem = flags
        .problem
        .or(take(&mut file, "problem")?)
        .unwrap_or_else(|| default_problem.into());
    let n_trials = flags.n_trials.or(take(&mut file, "n_trials")?).unwrap_or(30);
    let mut base_seed: u64 = take(&mut file, "base_seed")?.unwrap_or(1);
    let out = flags.out.or(take(&mut file, "out")?).unwrap_or_else(|| default_out.into());
    let dim = flags.dim.or(take(&mut file, "dim")?);
    let defaults = PenaltyConfig64::default();
    let penalty_weight = take(&mut file, "penalty_weight")?.unwrap_or(defaults.weight);
    let penalty_exponent = take(&mut file, "penalty_exponent")?.unwrap_or(defaults.exponent);

    let mut tunables = file;
    if let Some(k) = flags.iters {
        tunables.insert("max_iters".into(), k.into());
    }
    if let Some(n) = flags.pop {
        if algorithm == "bas" {
            return Err(CliError::usage("bas is a single-agent method and takes no population"));
        }
        tunables.insert("population".into(), n.into());
    }
    match (flags.seed, seed_is_base) {
        (Some(s), true) => base_seed = s,
        (Some(s), false) => {
            tunables.insert("seed".into(), s.into());
        }
        (None, false) if !tunables.contains_key("seed") => {
            tunables.insert("seed".into(), base_seed.into());
        }
        _ => {}
    }
    let config = build_algorithm(&algorithm, Value::Object(tunables))?;
    Ok(Effective {
        algorithm,
        problem,
        n_trials,
        base_seed,
        out,
        dim,
        penalty_weight,
        penalty_exponent,
        tunables: algorithm_tunables(&config)?,
    })
}

fn build_algorithm(id: &str, tunables: Value) -> Result<Algorithm<f64>, CliError> {
    let bad = |e: serde_json::Error| CliError::usage(format!("{id} config: {e}"));
    match id {
        "bso" => Ok(Algorithm::Bso(serde_json::from_value::<BsoConfig64>(tunables).map_err(bad)?)),
        "pso" => Ok(Algorithm::Pso(serde_json::from_value::<PsoConfig64>(tunables).map_err(bad)?)),
        "bas" => Ok(Algorithm::Bas(serde_json::from_value::<BasConfig64>(tunables).map_err(bad)?)),
        other => Err(CliError::usage(format!("unknown algorithm {other}"))),
    }
}

fn algorithm_tunables(alg: &Algorithm<f64>) -> Result<Value, CliError> {
    let v = match alg {
        Algorithm::Bso(c) => serde_json::to_value(c),
        Algorithm::Pso(c) => serde_json::to_value(c),
        Algorithm::Bas(c) => serde_json::to_value(c),
    };
    v.map_err(|e| CliError::internal(e.to_string()))
}

impl Effective {
    pub fn algorithm(&self) -> Result<Algorithm<f64>, CliError> {
        build_algorithm(&self.algorithm, self.tunables.clone())
    }

    pub fn penalty(&self) -> PenaltyConfig64 {
        PenaltyConfig64 {
            weight: self.penalty_weight,
            exponent: self.penalty_exponent,
        }
    }

    /// Flat JSON form of the effective configuration, loadable with `--config`.
    pub fn to_flat_json(&self) -> Value {
        let mut map = match &self.tunables {
            Value::Object(m) => m.clone(),
            _ => Map::new(),
        };
        map.insert("algorithm".into(), self.algorithm.clone().into());
        map.insert("problem".into(), self.problem.clone().into());
        map.insert("n_trials".into(), self.n_trials.into());
        map.insert("base_seed".into(), self.base_seed.into());
        map.insert("out".into(), self.out.display().to_string().into());
        if let Some(d) = self.dim {
            map.insert("dim".into(), d.into());
        }
        map.insert("penalty_weight".into(), self.penalty_weight.into());
        map.insert("penalty_exponent".into(), self.penalty_exponent.into());
        Value::Object(map)
    }
}
