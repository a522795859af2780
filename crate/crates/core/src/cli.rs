//! Command-line surface.
//!
//! [`run`] parses `argv`, executes one subcommand and writes its output. Plain
//! text by default, one JSON envelope line with `--json`, and `n,value` style
//! tables with `--csv` for the sequence commands. Exit codes: `0` success,
//! `2` parse or validation error, `3` resource limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::engine::{self, CountCache, CountKind, CountRecord};
use crate::hypergraph::{self, OrderedHypergraph};
use crate::partition::SetPartition;
use crate::permutability;
use crate::tuples::{self, PermutationTuple};
use crate::{Error, Limits, Result};

#[derive(Debug, Parser)]
#[command(name = "avoidance-lab", version, about = "Exact pattern-avoidance enumeration and search")]
struct Cli {
    /// Print one JSON envelope line.
    #[arg(long, global = true)]
    json: bool,
    /// Print sequence results as CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Count cache directory (defaults to $AVOIDANCE_LAB_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(untagged)]
enum Command {
    /// Standard form of a partition.
    Standardize { partition: String },
    /// Klazar containment of partitions.
    Contains { host: String, pattern: String },
    /// Parallel containment of permutation tuples.
    ContainsTuple { host: String, pattern: String },
    /// Ordered hypergraph containment.
    ContainsHg { g: String, h: String },
    /// Permutability statistic.
    Permutability {
        partition: String,
        #[arg(long)]
        witness: bool,
    },
    /// Partitions of [n] by permutability.
    PmDist {
        #[arg(long)]
        n: usize,
    },
    /// Number of partitions of [n] avoiding a pattern.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        no_singletons: bool,
    },
    /// Avoider counts for n = 1..nmax.
    Seq {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        nmax: usize,
    },
    /// Number of d-tuples over S_n avoiding a tuple pattern.
    CountTuples {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
    },
    /// Monte Carlo estimate of the random-order antichain probability.
    AntichainProb {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: u64,
    },
    /// Interval contraction of a hypergraph.
    Contract {
        #[arg(long)]
        hg: String,
        #[arg(long)]
        s: usize,
    },
    /// Projection of a uniform hypergraph.
    Project {
        #[arg(long)]
        hg: String,
        #[arg(long)]
        drop: String,
    },
    /// Largest-weight hypergraph on [n] avoiding a pattern.
    MaxWeight {
        #[arg(long)]
        hg: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        uniform: Option<usize>,
    },
    /// Lower-bound certificate for B'_n of a pattern.
    CertifyLower {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
    },
    /// Growth regime of the class avoiding a basis (`;`-separated).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
    },
    /// Growth exponent fit of the avoider sequence.
    GrowthFit {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        nmax: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Standardize { .. } => "standardize",
            Command::Contains { .. } => "contains",
            Command::ContainsTuple { .. } => "contains-tuple",
            Command::ContainsHg { .. } => "contains-hg",
            Command::Permutability { .. } => "permutability",
            Command::PmDist { .. } => "pm-dist",
            Command::Count { .. } => "count",
            Command::Seq { .. } => "seq",
            Command::CountTuples { .. } => "count-tuples",
            Command::AntichainProb { .. } => "antichain-prob",
            Command::Contract { .. } => "contract",
            Command::Project { .. } => "project",
            Command::MaxWeight { .. } => "max-weight",
            Command::CertifyLower { .. } => "certify-lower",
            Command::Classify { .. } => "classify",
            Command::GrowthFit { .. } => "growth-fit",
        }
    }
}

/// What a command produced, before formatting.
struct Outcome {
    text: String,
    result: Value,
    csv: Option<String>,
}

impl Outcome {
    fn plain(text: impl ToString, result: Value) -> Self {
        Outcome { text: text.to_string(), result, csv: None }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    inputs: &'a Command,
    result: &'a Value,
    elapsed_ms: u128,
}

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    let started = Instant::now();
    let outcome = match cli.threads {
        Some(0) => Err(Error::BadParameter("--threads must be positive".into())),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(Error::BadParameter(e.to_string())),
        },
        None => execute(&cli),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::ResourceLimit(_) => 3,
                _ => 2,
            };
        }
    };
    let written = if cli.json {
        let envelope = Envelope {
            command: cli.command.name(),
            inputs: &cli.command,
            result: &outcome.result,
            elapsed_ms: started.elapsed().as_millis(),
        };
        serde_json::to_string(&envelope)
            .map_err(std::io::Error::from)
            .and_then(|line| writeln!(out, "{line}"))
    } else if let (true, Some(csv)) = (cli.csv, &outcome.csv) {
        write!(out, "{csv}")
    } else {
        writeln!(out, "{}", outcome.text)
    };
    match written {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn partition(text: &str) -> Result<SetPartition> {
    text.parse()
}

fn open_cache(cli: &Cli) -> Result<Option<CountCache>> {
    match &cli.cache_dir {
        Some(dir) => Ok(Some(CountCache::open(dir)?)),
        None => CountCache::from_env(),
    }
}

fn cached_count(
    cache: &mut Option<CountCache>,
    kind: CountKind,
    pattern: &str,
    n: usize,
    compute: impl FnOnce() -> Result<BigUint>,
) -> Result<BigUint> {
    if let Some(v) = cache.as_ref().and_then(|c| c.get(kind, pattern, n)) {
        return Ok(v);
    }
    let value = compute()?;
    if let Some(c) = cache.as_mut() {
        c.insert(&CountRecord::new(kind, pattern, n, value.clone()))?;
    }
    Ok(value)
}

fn bool_outcome(b: bool) -> Outcome {
    Outcome::plain(b, json!(b))
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let limits = Limits::default();
    match &cli.command {
        Command::Standardize { partition: text } => {
            let p = partition(text)?;
            Ok(Outcome::plain(&p, json!(p.render())))
        }
        Command::Contains { host, pattern } => {
            Ok(bool_outcome(partition(host)?.contains(&partition(pattern)?)))
        }
        Command::ContainsTuple { host, pattern } => {
            let host: PermutationTuple = host.parse()?;
            let pattern: PermutationTuple = pattern.parse()?;
            Ok(bool_outcome(tuples::contains_parallel(&host, &pattern)?))
        }
        Command::ContainsHg { g, h } => {
            let g: OrderedHypergraph = g.parse()?;
            let h: OrderedHypergraph = h.parse()?;
            Ok(bool_outcome(g.contains(&h)))
        }
        Command::Permutability { partition: text, witness } => {
            let p = partition(text)?;
            let cover = permutability::min_interval_cover(&p);
            let d = permutability::permutability(&p);
            let text = if *witness { format!("{d}\n{cover}") } else { d.to_string() };
            let result = if *witness {
                json!({ "permutability": d, "cover": cover.to_string(), "intervals": cover.count })
            } else {
                json!(d)
            };
            Ok(Outcome::plain(text, result))
        }
        Command::PmDist { n } => {
            let dist = permutability::pm_distribution(*n, &limits)?;
            let text = dist.iter().map(|(d, c)| format!("{d} {c}")).collect::<Vec<_>>().join("\n");
            let mut csv = String::from("d,count\n");
            dist.iter().for_each(|(d, c)| csv.push_str(&format!("{d},{c}\n")));
            let result = Value::Array(dist.iter().map(|(d, c)| json!({ "d": d, "count": c })).collect());
            Ok(Outcome { text, result, csv: Some(csv) })
        }
        Command::Count { pattern, n, no_singletons } => {
            let p = partition(pattern)?;
            let kind = if *no_singletons {
                CountKind::PartitionAvoidersNoSingletons
            } else {
                CountKind::PartitionAvoiders
            };
            let mut cache = open_cache(cli)?;
            let value = cached_count(&mut cache, kind, &p.render(), *n, || {
                engine::count_avoiders(&p, *n, *no_singletons, &limits)
            })?;
            Ok(Outcome::plain(&value, json!(value.to_string())))
        }
        Command::Seq { pattern, nmax } => {
            let p = partition(pattern)?;
            let mut cache = open_cache(cli)?;
            let records = engine::avoidance_sequence(&p, *nmax, cache.as_mut(), &limits)?;
            Ok(sequence_outcome(&records))
        }
        Command::CountTuples { pattern, n } => {
            let t: PermutationTuple = pattern.parse()?;
            let mut cache = open_cache(cli)?;
            let value = cached_count(&mut cache, CountKind::TupleAvoiders, &t.render(), *n, || {
                tuples::count_tuple_avoiders(&t, *n, &limits)
            })?;
            Ok(Outcome::plain(&value, json!(value.to_string())))
        }
        Command::AntichainProb { d, n, samples } => {
            let est = tuples::antichain_probability(*d, *n, *samples, cli.seed)?;
            let text = format!(
                "estimate {}\nstandard_error {}\nsamples {}\nseed {}",
                est.estimate, est.standard_error, est.samples, est.seed
            );
            Ok(Outcome::plain(text, serde_json::to_value(&est)?))
        }
        Command::Contract { hg, s } => {
            let g: OrderedHypergraph = hg.parse()?;
            let c = hypergraph::interval_contract(&g, *s)?;
            Ok(Outcome::plain(&c, json!(c.render())))
        }
        Command::Project { hg, drop } => {
            let g: OrderedHypergraph = hg.parse()?;
            let drop: Vec<usize> = if drop.trim().is_empty() {
                Vec::new()
            } else {
                crate::partition::parse_comma_list(drop.trim())?
            };
            let p = hypergraph::project(&g, &drop)?;
            Ok(Outcome::plain(&p, json!(p.render())))
        }
        Command::MaxWeight { hg, n, budget, uniform } => {
            let h: OrderedHypergraph = hg.parse()?;
            let r = hypergraph::max_weight_avoiding(&h, *n, *budget, *uniform, &limits)?;
            let text = format!("weight {}\nexact {}\nnodes {}\nbest {}", r.weight, r.exact, r.nodes, r.best);
            Ok(Outcome::plain(text, serde_json::to_value(&r)?))
        }
        Command::CertifyLower { pattern, n } => {
            let c = engine::lower_bound_certificate(&partition(pattern)?, *n, cli.seed)?;
            let text = format!(
                "pattern {}\nd {}\nm {}\ncertified_count {}\nverified_samples {}\nexhaustive {}",
                c.pattern, c.d, c.m, c.certified_count, c.verified_samples, c.exhaustive
            );
            Ok(Outcome::plain(text, serde_json::to_value(&c)?))
        }
        Command::Classify { basis } => {
            let basis = basis
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(partition)
                .collect::<Result<Vec<_>>>()?;
            let c = engine::classify_class(&basis);
            Ok(Outcome::plain(c, json!({ "regime": c.regime, "d": c.d, "label": c.to_string() })))
        }
        Command::GrowthFit { pattern, nmax } => {
            let p = partition(pattern)?;
            let mut cache = open_cache(cli)?;
            let records = engine::avoidance_sequence(&p, *nmax, cache.as_mut(), &limits)?;
            let values: Vec<BigUint> = records.into_iter().map(|r| r.value).collect();
            let g = engine::growth_fit(&values)?;
            let mut lines: Vec<String> = g.per_n.iter().map(|(n, a)| format!("{n} {a:.4}")).collect();
            lines.push(format!("final {:.4}", g.final_alpha));
            lines.push(format!("corrected {:.4}", g.corrected_alpha));
            lines.push(format!("d_hint {}", g.d_hint));
            let mut csv = String::from("n,alpha\n");
            g.per_n.iter().for_each(|(n, a)| csv.push_str(&format!("{n},{a:.4}\n")));
            Ok(Outcome { text: lines.join("\n"), result: serde_json::to_value(&g)?, csv: Some(csv) })
        }
    }
}

fn sequence_outcome(records: &[CountRecord]) -> Outcome {
    let text = records.iter().map(|r| format!("{} {}", r.n, r.value)).collect::<Vec<_>>().join("\n");
    let mut csv = String::from("n,value\n");
    records.iter().for_each(|r| csv.push_str(&format!("{},{}\n", r.n, r.value)));
    let result = Value::Array(
        records
            .iter()
            .map(|r| json!({ "n": r.n, "value": r.value.to_string() }))
            .collect(),
    );
    Outcome { text, result, csv: Some(csv) }
}
