//! Benchmark harness: times the brute-force method against the applicable
//! cut-based method on generated families and emits CSV rows.
//!
//! Per instance both methods run to completion and must agree on the Wiener
//! value before any row is written; a disagreement aborts with the instance
//! serialized for triage. Wall times are the minimum over `repeats` runs
//! after one warmup. Cut-based timings cover the compute path only — for the
//! `general` method the cut partition is taken as already validated, since
//! exhaustive validation is itself a brute-force pass.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use hypercut::cut::{wiener_cut, wiener_general, wiener_hypertree, CutPartition};
use hypercut::generators;
use hypercut::metric::wiener_brute;
use hypercut::Hypergraph;

use crate::format::write_hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Cube,
    Phenylene,
    Hypertree,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cube => write!(f, "cube"),
            Family::Phenylene => write!(f, "phenylene"),
            Family::Hypertree => write!(f, "hypertree"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub families: Vec<Family>,
    /// Phenylene chain lengths; defaults to 2..=8.
    pub phenylene_n: Vec<usize>,
    /// Timed repetitions per (instance, method); the minimum is reported.
    pub repeats: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            families: vec![Family::Cube, Family::Phenylene, Family::Hypertree],
            phenylene_n: (2..=8).collect(),
            repeats: 5,
            seed: 0,
        }
    }
}

/// One CSV row: one (instance, method) measurement.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub family: String,
    pub params: String,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub method: String,
    pub wiener: u128,
    pub nanos: u128,
}

#[derive(Debug)]
pub enum BenchError {
    /// Two methods produced different values on one instance; the instance
    /// was written out for triage.
    MethodDisagreement {
        family: String,
        params: String,
        values: Vec<(String, u128)>,
        dump: PathBuf,
    },
    Failed(String),
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::MethodDisagreement {
                family,
                params,
                values,
                dump,
            } => {
                write!(
                    f,
                    "methods disagree on {family} [{params}]: {values:?}; instance written to {}",
                    dump.display()
                )
            }
            BenchError::Failed(msg) => write!(f, "benchmark failed: {msg}"),
        }
    }
}

impl std::error::Error for BenchError {}

fn time_method(
    repeats: usize,
    mut compute: impl FnMut() -> Result<u128, String>,
) -> Result<(u128, u128), String> {
    let value = compute()?; // warmup
    let mut best = u128::MAX;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let again = compute()?;
        let nanos = start.elapsed().as_nanos();
        if again != value {
            return Err(format!("non-deterministic result: {value} vs {again}"));
        }
        best = best.min(nanos);
    }
    Ok((value, best))
}

struct Instance {
    family: Family,
    params: String,
    hypergraph: Hypergraph,
    /// Cut partition for the `general` method, when that is the method
    /// being exercised.
    cuts: Option<CutPartition>,
}

fn instances(cfg: &BenchConfig) -> Result<Vec<Instance>, BenchError> {
    let mut out = Vec::new();
    for &family in &cfg.families {
        match family {
            Family::Cube => {
                for k in [2usize, 3] {
                    for n in [1usize, 2, 3] {
                        let (h, _) = generators::cube(k, n)
                            .map_err(|e| BenchError::Failed(e.to_string()))?;
                        out.push(Instance {
                            family,
                            params: format!("k={k};n={n}"),
                            hypergraph: h,
                            cuts: None,
                        });
                    }
                }
            }
            Family::Phenylene => {
                for &n in &cfg.phenylene_n {
                    let h = generators::phenylene(n)
                        .map_err(|e| BenchError::Failed(e.to_string()))?;
                    let cuts = CutPartition::singletons(&h);
                    out.push(Instance {
                        family,
                        params: format!("n={n}"),
                        hypergraph: h,
                        cuts: Some(cuts),
                    });
                }
            }
            Family::Hypertree => {
                let grids: &[&[usize]] = &[
                    &[3, 3, 3, 3, 3, 3, 3, 3],
                    &[2, 3, 4, 2, 3, 4],
                    &[4, 4, 4, 4],
                ];
                for (i, sizes) in grids.iter().enumerate() {
                    let seed = cfg.seed.wrapping_add(i as u64);
                    let h = generators::random_hypertree(sizes, seed)
                        .map_err(|e| BenchError::Failed(e.to_string()))?;
                    let sizes_tag = sizes
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join("-");
                    out.push(Instance {
                        family,
                        params: format!("sizes={sizes_tag};seed={seed}"),
                        hypergraph: h,
                        cuts: None,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Runs the configured grid and returns one record per (instance, method).
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    let mut records = Vec::new();
    for instance in instances(cfg)? {
        let h = &instance.hypergraph;
        let fail = |e: String| BenchError::Failed(format!("{} [{}]: {e}", instance.family, instance.params));
        let (brute_value, brute_nanos) = time_method(cfg.repeats, || {
            wiener_brute(h).map_err(|e| e.to_string())
        })
        .map_err(fail)?;
        let (cut_method, cut_value, cut_nanos) = match instance.family {
            Family::Cube => {
                let (v, t) = time_method(cfg.repeats, || {
                    wiener_cut(h).map(|b| b.total).map_err(|e| e.to_string())
                })
                .map_err(fail)?;
                ("cut", v, t)
            }
            Family::Phenylene => {
                let cuts = instance.cuts.as_ref().expect("phenylene carries cuts");
                let (v, t) = time_method(cfg.repeats, || {
                    wiener_general(h, cuts, true)
                        .map(|b| b.total)
                        .map_err(|e| e.to_string())
                })
                .map_err(fail)?;
                ("general", v, t)
            }
            Family::Hypertree => {
                let (v, t) = time_method(cfg.repeats, || {
                    wiener_hypertree(h).map(|b| b.total).map_err(|e| e.to_string())
                })
                .map_err(fail)?;
                ("tree", v, t)
            }
        };
        if brute_value != cut_value {
            let dump = std::env::temp_dir().join(format!(
                "hypercut-disagreement-{}-{}.hg",
                instance.family,
                instance.params.replace(['=', ';'], "_")
            ));
            let _ = std::fs::write(&dump, write_hypergraph(h));
            return Err(BenchError::MethodDisagreement {
                family: instance.family.to_string(),
                params: instance.params,
                values: vec![
                    ("brute".into(), brute_value),
                    (cut_method.into(), cut_value),
                ],
                dump,
            });
        }
        for (method, wiener, nanos) in [
            ("brute", brute_value, brute_nanos),
            (cut_method, cut_value, cut_nanos),
        ] {
            records.push(BenchRecord {
                family: instance.family.to_string(),
                params: instance.params.clone(),
                n_vertices: h.vertex_count(),
                n_edges: h.edge_count(),
                method: method.to_string(),
                wiener,
                nanos,
            });
        }
    }
    Ok(records)
}

pub const CSV_HEADER: &str = "family,params,n_vertices,n_edges,method,wiener,nanos";

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.family, r.params, r.n_vertices, r.n_edges, r.method, r.wiener, r.nanos
        ));
    }
    out
}
