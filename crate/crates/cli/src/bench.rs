//! Sweep harness: one CSV row per generated instance.
//!
//! Columns, in order:
//!
//! | column | meaning |
//! |---|---|
//! | `instance` | generator spec `family:n:chords:seed` |
//! | `family`, `n`, `chords`, `seed` | generator parameters |
//! | `m` | edges of the instance |
//! | `a_t` | twinless articulation points of the minimal 2VCS |
//! | `e2v`, `e2t` | sizes of the minimal 2VCS and the augmented output |
//! | `bound` | `4n + a_t (n - 1)` |
//! | `within_bound` | `e2t <= bound` |
//! | `minimal_2vtcs` | size of a greedy minimal 2VTCS |
//! | `minimal_2vtcs_per_n` | the same divided by `n` |
//! | `exceeds_4n` | `minimal_2vtcs > 4n` |
//! | `exact_optimum` | proven minimum 2VTCS size (with `--exact`) |
//! | `exact_proven` | whether the exact search finished within budget |
//! | `ratio` | `e2t / exact_optimum`, only when proven |
//! | `ratio_ceiling` | `2 + a_t / 2` |
//! | `t_*_ms` | wall time per stage in milliseconds |
//! | `error` | why the row is incomplete |
//!
//! Optional values are empty fields when absent.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;
use twinless::sparsify::size_bound;
use twinless::{
    augment_to_2vtc, exact_min_2vtcs, minimal_2vcs, minimal_2vtcs, DirectedGraph, EdgeOrder,
    ExactError, Family, GeneratorSpec, SearchBudget, SparsifyError,
};

use crate::render::certificate_text;

#[derive(Debug, Error)]
#[error("invalid sweep `{spec}`: {reason}")]
pub struct SweepError {
    spec: String,
    reason: String,
}

/// `family:nmin..nmax[:chords[:seeds]]`, or a single `n` in place of the
/// range. `seeds` is the number of seeds per size, default 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub chords: usize,
    pub seeds: u64,
}

impl FromStr for Sweep {
    type Err = SweepError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| SweepError {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() < 2 || parts.len() > 4 {
            return Err(fail("expected family:nmin..nmax[:chords[:seeds]]"));
        }
        let family: Family = parts[0].parse().map_err(|_| fail("unknown family"))?;
        let num = |p: &str| p.parse::<usize>().map_err(|_| fail("not a number"));
        let (n_min, n_max) = match parts[1].split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(parts[1])?, num(parts[1])?),
        };
        if n_min > n_max {
            return Err(fail("empty size range"));
        }
        let chords = parts.get(2).map(|p| num(p)).transpose()?.unwrap_or(0);
        let seeds = parts.get(3).map(|p| num(p)).transpose()?.unwrap_or(1) as u64;
        Ok(Self {
            family,
            n_min,
            n_max,
            chords,
            seeds,
        })
    }
}

impl Sweep {
    pub fn instances(&self, base_seed: u64) -> impl Iterator<Item = GeneratorSpec> + '_ {
        (self.n_min..=self.n_max).flat_map(move |n| {
            (0..self.seeds).map(move |i| {
                GeneratorSpec::new(self.family, n, self.chords, base_seed.wrapping_add(i))
            })
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BenchOptions {
    pub exact: bool,
    pub budget: SearchBudget,
    pub order: EdgeOrder,
    pub omit_timings: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        Self {
            exact: false,
            budget: SearchBudget::default(),
            order: EdgeOrder::Lexicographic,
            omit_timings: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BenchRecord {
    pub instance: String,
    pub family: String,
    pub n: usize,
    pub chords: usize,
    pub seed: u64,
    pub m: Option<usize>,
    pub a_t: Option<usize>,
    pub e2v: Option<usize>,
    pub e2t: Option<usize>,
    pub bound: Option<usize>,
    pub within_bound: Option<bool>,
    pub minimal_2vtcs: Option<usize>,
    pub minimal_2vtcs_per_n: Option<f64>,
    pub exceeds_4n: Option<bool>,
    pub exact_optimum: Option<usize>,
    pub exact_proven: Option<bool>,
    pub ratio: Option<f64>,
    pub ratio_ceiling: Option<f64>,
    pub t_minimal_2vcs_ms: Option<f64>,
    pub t_augment_ms: Option<f64>,
    pub t_minimal_2vtcs_ms: Option<f64>,
    pub t_exact_ms: Option<f64>,
    pub error: Option<String>,
}

impl BenchRecord {
    pub const COLUMNS: [&'static str; 23] = [
        "instance",
        "family",
        "n",
        "chords",
        "seed",
        "m",
        "a_t",
        "e2v",
        "e2t",
        "bound",
        "within_bound",
        "minimal_2vtcs",
        "minimal_2vtcs_per_n",
        "exceeds_4n",
        "exact_optimum",
        "exact_proven",
        "ratio",
        "ratio_ceiling",
        "t_minimal_2vcs_ms",
        "t_augment_ms",
        "t_minimal_2vtcs_ms",
        "t_exact_ms",
        "error",
    ];
}

fn sparsify_error(g: &DirectedGraph, e: &SparsifyError) -> String {
    match e {
        SparsifyError::InputNot2Vtc(c) => {
            format!(
                "input is not 2-vertex-twinless connected: {}",
                certificate_text(g, c)
            )
        }
        other => other.to_string(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

pub fn run_instance(spec: GeneratorSpec, opts: &BenchOptions) -> BenchRecord {
    let mut rec = BenchRecord {
        instance: spec.to_string(),
        family: spec.family.name().to_string(),
        n: spec.n,
        chords: spec.chords,
        seed: spec.seed,
        ..Default::default()
    };
    let g = match spec.generate() {
        Ok(g) => g,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    let n = g.n();
    rec.m = Some(g.m());
    let keep = |t: f64| (!opts.omit_timings).then_some(t);

    let (greedy, t) = timed(|| minimal_2vtcs(&g, opts.order));
    rec.t_minimal_2vtcs_ms = keep(t);
    match greedy {
        Ok(set) => {
            rec.minimal_2vtcs = Some(set.len());
            rec.minimal_2vtcs_per_n = Some(set.len() as f64 / n as f64);
            rec.exceeds_4n = Some(set.len() > 4 * n);
        }
        Err(e) => {
            rec.error = Some(sparsify_error(&g, &e));
            return rec;
        }
    }

    let (e2v, t) = timed(|| minimal_2vcs(&g, opts.order));
    rec.t_minimal_2vcs_ms = keep(t);
    let e2v = match e2v {
        Ok(s) => s,
        Err(e) => {
            rec.error = Some(sparsify_error(&g, &e));
            return rec;
        }
    };
    rec.e2v = Some(e2v.len());
    let (result, t) = timed(|| augment_to_2vtc(&g, &e2v));
    rec.t_augment_ms = keep(t);
    let result = match result {
        Ok(r) => r,
        Err(e) => {
            rec.error = Some(sparsify_error(&g, &e));
            return rec;
        }
    };
    let a_t = result.a_t();
    rec.a_t = Some(a_t);
    rec.e2t = Some(result.e2t.len());
    rec.bound = Some(size_bound(n, a_t));
    rec.within_bound = Some(result.e2t.len() <= size_bound(n, a_t));
    rec.ratio_ceiling = Some(result.ratio_ceiling());
    if !result.verdict.is_pass() {
        rec.error = Some("augmented output failed verification".to_string());
    }

    if opts.exact {
        let (exact, t) = timed(|| exact_min_2vtcs(&g, opts.budget));
        rec.t_exact_ms = keep(t);
        match exact {
            Ok(r) => {
                rec.exact_optimum = Some(r.optimum_size);
                rec.exact_proven = Some(true);
                rec.ratio = Some(result.e2t.len() as f64 / r.optimum_size as f64);
            }
            Err(ExactError::BudgetExceeded { .. }) => rec.exact_proven = Some(false),
            Err(e) => rec.error = Some(e.to_string()),
        }
    }
    rec
}

/// Evaluates every instance of every sweep; rows keep sweep order.
pub fn run_sweeps(sweeps: &[Sweep], base_seed: u64, opts: &BenchOptions) -> Vec<BenchRecord> {
    let specs: Vec<GeneratorSpec> = sweeps.iter().flat_map(|s| s.instances(base_seed)).collect();
    specs.par_iter().map(|&s| run_instance(s, opts)).collect()
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    w.write_record(BenchRecord::COLUMNS).unwrap();
    for r in records {
        w.serialize(r).unwrap();
    }
    String::from_utf8(w.into_inner().unwrap()).unwrap()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSummary {
    pub rows: usize,
    pub errors: usize,
    pub max_minimal_2vtcs_per_n: Option<f64>,
    pub max_ratio: Option<f64>,
    pub over_4n: usize,
    pub over_bound: usize,
}

impl BenchSummary {
    pub fn of(records: &[BenchRecord]) -> Self {
        let max = |it: &mut dyn Iterator<Item = f64>| it.reduce(f64::max);
        Self {
            rows: records.len(),
            errors: records.iter().filter(|r| r.error.is_some()).count(),
            max_minimal_2vtcs_per_n: max(&mut records.iter().filter_map(|r| r.minimal_2vtcs_per_n)),
            max_ratio: max(&mut records.iter().filter_map(|r| r.ratio)),
            over_4n: records
                .iter()
                .filter(|r| r.exceeds_4n == Some(true))
                .count(),
            over_bound: records
                .iter()
                .filter(|r| r.within_bound == Some(false))
                .count(),
        }
    }
}

impl fmt::Display for BenchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.4}"));
        write!(
            f,
            "rows={} errors={} max_minimal_2vtcs_per_n={} max_ratio={} over_4n={} over_bound={}",
            self.rows,
            self.errors,
            opt(self.max_minimal_2vtcs_per_n),
            opt(self.max_ratio),
            self.over_4n,
            self.over_bound
        )
    }
}
