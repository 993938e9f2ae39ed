//! Checking statements over many instances.
//!
//! Each catalog entry pairs an instance generator (seeded, exact carrier
//! size) and optionally an exhaustive lister with an evaluator that either
//! skips the instance (hypotheses fail), confirms it, or reports a
//! violation. [`run_check`] aggregates over samples or a full enumeration;
//! [`find_counterexample`] searches carriers from smallest up.
//!
//! Sample `i` under master seed `s` draws from a ChaCha8 generator seeded
//! with [`gen::sample_seed`]`(s, i)`, so reports do not depend on thread
//! count or scheduling. Among several violations the one with the smallest
//! index is reported.

mod catalog;
pub mod gen;
pub mod instance;
pub(crate) mod oracle;

use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use catalog::catalog;
pub use gen::{gen_random, sample_seed, splitmix64, GenKind, GenParams};
pub use instance::{parse_instance, Instance, Value};

use crate::error::{Error, Result};

/// Instance spaces below this size are enumerated instead of sampled.
pub const EXHAUSTIVE_LIMIT: u128 = 1_000_000;

/// Per-carrier enumeration cap used by [`find_counterexample`].
const SEARCH_EXHAUSTIVE_LIMIT: u128 = 1 << 15;

pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// The statement should hold on every qualifying instance.
    Verify,
    /// The statement is expected to fail in finite sets; a witness is the
    /// desired outcome.
    Falsify,
    /// Informational search with no expected outcome.
    Explore,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Verify => "verify",
            Mode::Falsify => "falsify",
            Mode::Explore => "explore",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// The hypotheses do not hold.
    Skip,
    Holds,
    Violated(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Counterexample,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Counterexample => "counterexample",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Knobs shared by generators and listers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    /// The `n` of parametrized statements such as `set-not-n-permutable`.
    pub n: Option<usize>,
    /// Upper bound for chain and power indices.
    pub max_index: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params { n: None, max_index: 3 }
    }
}

type SampleFn = fn(&mut ChaCha8Rng, usize, &Params) -> Instance;
type ExhaustFn = fn(usize, &Params, u128) -> Option<Vec<Instance>>;
type EvalFn = fn(&Instance) -> Result<Outcome>;

pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub mode: Mode,
    pub default_size: usize,
    pub max_size: usize,
    sample: SampleFn,
    exhaust: Option<ExhaustFn>,
    eval: EvalFn,
}

impl Theorem {
    pub fn has_exhaustive(&self) -> bool {
        self.exhaust.is_some()
    }

    pub fn evaluate(&self, inst: &Instance) -> Result<Outcome> {
        (self.eval)(inst)
    }
}

impl fmt::Debug for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Theorem").field("id", &self.id).field("mode", &self.mode).finish()
    }
}

pub fn lookup(id: &str) -> Result<&'static Theorem> {
    catalog()
        .iter()
        .find(|t| t.id == id)
        .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
}

/// Re-evaluate a witness.
pub fn replay(id: &str, inst: &Instance) -> Result<Outcome> {
    lookup(id)?.evaluate(inst)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Search {
    /// Enumerate when the space is below [`EXHAUSTIVE_LIMIT`], else sample.
    #[default]
    Auto,
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckSpec {
    pub theorem_id: String,
    /// Largest carrier; the theorem's default when `None`.
    pub size: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub search: Search,
    pub params: Params,
}

impl CheckSpec {
    pub fn new(theorem_id: &str) -> Self {
        CheckSpec {
            theorem_id: theorem_id.to_string(),
            size: None,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            search: Search::Auto,
            params: Params::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// Position of the instance in evaluation order.
    pub index: usize,
    pub instance: Instance,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub theorem_id: String,
    pub mode: Mode,
    /// `exhaustive`, `sampled` or `smallest-first`.
    pub search: &'static str,
    pub size: usize,
    pub seed: u64,
    pub tested: usize,
    pub qualifying: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub params: Params,
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({}/{} instances)", self.verdict.name(), self.qualifying, self.tested)?;
        writeln!(f, "theorem: {}", self.theorem_id)?;
        writeln!(f, "mode: {}", self.mode.name())?;
        writeln!(f, "search: {}", self.search)?;
        writeln!(f, "size: {}", self.size)?;
        writeln!(f, "seed: {}", self.seed)?;
        if let Some(n) = self.params.n {
            writeln!(f, "n: {n}")?;
        }
        writeln!(f, "max-index: {}", self.params.max_index)?;
        if let Some(w) = &self.witness {
            writeln!(f, "reason: {}", w.reason)?;
            writeln!(f, "witness #{}:", w.index)?;
            write!(f, "{}", w.instance)?;
        }
        Ok(())
    }
}

fn exhaustive_list(thm: &Theorem, size: usize, params: &Params, limit: u128) -> Option<Vec<Instance>> {
    let exhaust = thm.exhaust?;
    // largest carrier first, so an oversized space is rejected before the
    // small ones are built
    let mut lists = Vec::new();
    let mut total: u128 = 0;
    for n in (1..=size).rev() {
        let list = exhaust(n, params, limit - total)?;
        total += list.len() as u128;
        lists.push(list);
    }
    Some(lists.into_iter().rev().flatten().collect())
}

fn sample_list(thm: &Theorem, size: usize, samples: usize, seed: u64, params: &Params) -> Vec<Instance> {
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = gen::rng_for(sample_seed(seed, i as u64));
            let n = rng.random_range(1..=size);
            (thm.sample)(&mut rng, n, params)
        })
        .collect()
}

fn evaluate_all(thm: &Theorem, list: &[Instance]) -> Result<Vec<Outcome>> {
    list.par_iter().map(|inst| thm.evaluate(inst)).collect()
}

fn verdict_for(mode: Mode, qualifying: usize, violated: bool) -> Verdict {
    match (mode, violated) {
        (_, true) => Verdict::Counterexample,
        (Mode::Verify, false) if qualifying > 0 => Verdict::Pass,
        _ => Verdict::Inconclusive,
    }
}

fn resolve_size(thm: &Theorem, size: Option<usize>) -> Result<usize> {
    let size = size.unwrap_or(thm.default_size);
    if size == 0 || size > thm.max_size {
        return Err(Error::InvalidParameter(format!(
            "size must lie in 1..={} for `{}`",
            thm.max_size, thm.id
        )));
    }
    Ok(size)
}

pub fn run_check(spec: &CheckSpec) -> Result<CheckReport> {
    let thm = lookup(&spec.theorem_id)?;
    if spec.samples == 0 {
        return Err(Error::InvalidParameter("sample count must be at least 1".into()));
    }
    let size = resolve_size(thm, spec.size)?;
    let exhaustive = match spec.search {
        Search::Sampled => None,
        Search::Auto => exhaustive_list(thm, size, &spec.params, EXHAUSTIVE_LIMIT),
        Search::Exhaustive => {
            if thm.exhaust.is_none() {
                return Err(Error::InvalidParameter(format!("`{}` has no exhaustive form", thm.id)));
            }
            Some(exhaustive_list(thm, size, &spec.params, EXHAUSTIVE_LIMIT).ok_or(Error::Capacity {
                what: "exhaustive instance count",
                requested: size,
                limit: EXHAUSTIVE_LIMIT as usize,
            })?)
        }
    };
    let (search, list) = match exhaustive {
        Some(list) => ("exhaustive", list),
        None => ("sampled", sample_list(thm, size, spec.samples, spec.seed, &spec.params)),
    };
    let outcomes = evaluate_all(thm, &list)?;
    let qualifying = outcomes.iter().filter(|o| **o != Outcome::Skip).count();
    let witness = outcomes.iter().enumerate().find_map(|(i, o)| match o {
        Outcome::Violated(reason) => Some(Witness {
            index: i,
            instance: list[i].clone(),
            reason: reason.clone(),
        }),
        _ => None,
    });
    Ok(CheckReport {
        theorem_id: thm.id.to_string(),
        mode: thm.mode,
        search,
        size,
        seed: spec.seed,
        tested: list.len(),
        qualifying,
        verdict: verdict_for(thm.mode, qualifying, witness.is_some()),
        witness,
        params: spec.params,
    })
}

/// Search carriers `1, 2, …` in turn, enumerating a carrier when its space
/// is small and sampling a share of the remaining budget otherwise. Stops
/// at the first violation.
pub fn find_counterexample(id: &str, budget: usize, seed: u64, params: &Params) -> Result<CheckReport> {
    const CHUNK: usize = 256;
    let thm = lookup(id)?;
    if budget == 0 {
        return Err(Error::InvalidParameter("budget must be at least 1".into()));
    }
    let mut tested = 0usize;
    let mut qualifying = 0usize;
    let mut witness = None;
    let mut last_size = 1;
    'sizes: for n in 1..=thm.max_size {
        let remaining = budget - tested;
        if remaining == 0 {
            break;
        }
        last_size = n;
        let cap = SEARCH_EXHAUSTIVE_LIMIT.min(remaining as u128);
        let list = match thm.exhaust.and_then(|e| e(n, params, cap)) {
            Some(list) => list,
            None => {
                let share = (remaining / (thm.max_size - n + 1)).max(1);
                let carrier_seed = splitmix64(seed.wrapping_add(n as u64));
                (0..share)
                    .into_par_iter()
                    .map(|i| {
                        let mut rng = gen::rng_for(sample_seed(carrier_seed, i as u64));
                        (thm.sample)(&mut rng, n, params)
                    })
                    .collect()
            }
        };
        for chunk in list.chunks(CHUNK) {
            let outcomes = evaluate_all(thm, chunk)?;
            for (inst, o) in chunk.iter().zip(outcomes) {
                tested += 1;
                match o {
                    Outcome::Skip => {}
                    Outcome::Holds => qualifying += 1,
                    Outcome::Violated(reason) => {
                        qualifying += 1;
                        witness = Some(Witness {
                            index: tested - 1,
                            instance: inst.clone(),
                            reason,
                        });
                        break 'sizes;
                    }
                }
            }
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Counterexample
    } else {
        Verdict::Inconclusive
    };
    Ok(CheckReport {
        theorem_id: thm.id.to_string(),
        mode: thm.mode,
        search: "smallest-first",
        size: last_size,
        seed,
        tested,
        qualifying,
        verdict,
        witness,
        params: *params,
    })
}
