//! Batch runs over seeded instances, tracking how often every path of the
//! factor has length at most 8.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::augment::solve;
use crate::error::{Error, Result};
use crate::generate::{generate, GenConfig};
use crate::policy::TieBreakPolicy;

/// Path length bound tracked by [`ExperimentSummary::pct_all_paths_le_8`].
pub const SHORT_PATH_BOUND: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub k: usize,
    pub trials: usize,
    /// Trial `t` uses generator seed `seed + t` (wrapping).
    pub seed: u64,
    pub jobs: usize,
    pub policy: TieBreakPolicy,
}

impl ExperimentConfig {
    pub fn new(k: usize, trials: usize, seed: u64) -> Self {
        ExperimentConfig {
            k,
            trials,
            seed,
            jobs: 1,
            policy: TieBreakPolicy::Lexicographic,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub trials: usize,
    pub k: usize,
    /// Path length -> number of paths, over all trials.
    pub path_length_histogram: BTreeMap<usize, usize>,
    pub max_path_seen: usize,
    pub pct_all_paths_le_8: f64,
    pub mean_solve_time: Duration,
}

struct Trial {
    lengths: Vec<usize>,
    elapsed: Duration,
}

fn run_trial(cfg: &ExperimentConfig, t: usize) -> Result<Trial> {
    let g = generate(&GenConfig::new(cfg.k, cfg.seed.wrapping_add(t as u64)))?;
    let start = Instant::now();
    let factor = solve(&g, cfg.policy)?;
    let elapsed = start.elapsed();
    Ok(Trial {
        lengths: factor.lengths().collect(),
        elapsed,
    })
}

/// Solves `trials` instances, in parallel over `jobs` threads. Results are
/// merged in trial order, so everything but the timing is independent of
/// `jobs`.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentSummary> {
    if cfg.k == 0 || cfg.trials == 0 || cfg.jobs == 0 {
        return Err(Error::Precondition("k, trials and jobs must be positive".into()));
    }
    let results: Vec<Result<Trial>> = if cfg.jobs == 1 {
        (0..cfg.trials).map(|t| run_trial(cfg, t)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
        pool.install(|| {
            (0..cfg.trials)
                .into_par_iter()
                .map(|t| run_trial(cfg, t))
                .collect()
        })
    };

    let mut histogram = BTreeMap::new();
    let mut all_short = 0;
    let mut total_time = Duration::ZERO;
    for trial in results {
        let trial = trial?;
        for &len in &trial.lengths {
            *histogram.entry(len).or_insert(0) += 1;
        }
        if trial.lengths.iter().all(|&l| l <= SHORT_PATH_BOUND) {
            all_short += 1;
        }
        total_time += trial.elapsed;
    }
    Ok(ExperimentSummary {
        trials: cfg.trials,
        k: cfg.k,
        max_path_seen: histogram.keys().next_back().copied().unwrap_or(0),
        path_length_histogram: histogram,
        pct_all_paths_le_8: 100.0 * all_short as f64 / cfg.trials as f64,
        mean_solve_time: total_time / cfg.trials as u32,
    })
}

impl ExperimentSummary {
    /// Aligned text followed by `key=value` lines. The timing lines are only
    /// emitted with `with_timing`; everything else is deterministic.
    pub fn render(&self, with_timing: bool) -> String {
        let mut out = String::new();
        writeln!(out, "trials            {}", self.trials).unwrap();
        writeln!(out, "k                 {}", self.k).unwrap();
        writeln!(out, "max path length   {}", self.max_path_seen).unwrap();
        writeln!(out, "all paths <= 8    {:.2}%", self.pct_all_paths_le_8).unwrap();
        if with_timing {
            writeln!(out, "mean solve time   {:.3} ms", self.mean_solve_time.as_secs_f64() * 1e3).unwrap();
        }
        writeln!(out, "path length histogram:").unwrap();
        let width = self
            .path_length_histogram
            .values()
            .map(|c| c.to_string().len())
            .max()
            .unwrap_or(1);
        for (len, count) in &self.path_length_histogram {
            writeln!(out, "  {len:>4}  {count:>width$}").unwrap();
        }
        writeln!(out).unwrap();
        writeln!(out, "trials={}", self.trials).unwrap();
        writeln!(out, "k={}", self.k).unwrap();
        writeln!(out, "max_path_seen={}", self.max_path_seen).unwrap();
        writeln!(out, "pct_all_paths_le_8={:.2}", self.pct_all_paths_le_8).unwrap();
        let hist: Vec<String> = self
            .path_length_histogram
            .iter()
            .map(|(l, c)| format!("{l}:{c}"))
            .collect();
        writeln!(out, "path_length_histogram={}", hist.join(",")).unwrap();
        if with_timing {
            writeln!(out, "mean_solve_time_us={}", self.mean_solve_time.as_micros()).unwrap();
        }
        out
    }

    pub fn path_count(&self) -> usize {
        self.path_length_histogram.values().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k1_histogram() {
        let s = run_experiment(&ExperimentConfig::new(1, 5, 0)).unwrap();
        assert_eq!(s.path_length_histogram, BTreeMap::from([(6, 5)]));
        assert_eq!(s.pct_all_paths_le_8, 100.0);
        assert_eq!(s.max_path_seen, 6);
        assert!(s.render(false).contains("path_length_histogram=6:5\n"));
    }

    #[test]
    fn jobs_do_not_change_results() {
        let mut cfg = ExperimentConfig::new(4, 30, 11);
        let serial = run_experiment(&cfg).unwrap();
        cfg.jobs = 4;
        let parallel = run_experiment(&cfg).unwrap();
        assert_eq!(serial.render(false), parallel.render(false));
        assert_eq!(serial.path_count(), 4 * 30);
        assert!(serial.path_length_histogram.keys().all(|l| l % 2 == 0 && *l >= 2));
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(run_experiment(&ExperimentConfig::new(1, 0, 0)).is_err());
    }
}
