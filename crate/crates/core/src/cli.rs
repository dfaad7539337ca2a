//! The `quartic-iso` command line.
//!
//! Exit codes: 0 = yes / success, 1 = no, 2 = invalid input or internal error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::census;
use crate::deciders;
use crate::error::{invalid, Error, Result};
use crate::graph::{self, AccordionParams, CirculantParams, Graph};
use crate::modarith;
use crate::oracle::Oracle;
use crate::witness::{self, verify_witness, VertexMap, WitnessDoc};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "quartic-iso", version, about = "Accordion graphs, quartic circulants and their isomorphisms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a graph from one of the families.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
        format: Format,
        /// Randomly relabel the vertices using this seed.
        #[arg(long, global = true)]
        shuffle: Option<u64>,
    },
    /// Run an arithmetic decider.
    Decide {
        #[command(subcommand)]
        kind: DecideKind,
    },
    /// Brute-force isomorphism test between two graph documents.
    Oracle {
        graph_g: PathBuf,
        graph_h: PathBuf,
    },
    /// Re-verify a witness document.
    Verify { witness: PathBuf },
    /// Cross-validate every decider against the oracle.
    Census {
        #[arg(long, default_value_t = 14)]
        max_n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum Family {
    /// A[n,k]
    Accordion {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Ci[2n,{a,b}]
    Circulant(CirculantArgs),
    /// C_{n1} □ C_{n2}
    Torus {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
    },
    /// C_{n1} □ P_{n2}
    Cyl {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
    },
}

#[derive(Debug, Args)]
struct CirculantArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edgelist,
}

#[derive(Debug, Subcommand)]
enum DecideKind {
    /// A[n,k1] ≅ A[n,k2]?
    AccAcc {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k1: u64,
        #[arg(long)]
        k2: u64,
        #[arg(long)]
        witness: bool,
    },
    /// Ci[2n,{a,b}] ≅ A[n,k]? Without --k, searches for a k.
    CiAcc {
        #[command(flatten)]
        ci: CirculantArgs,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        witness: bool,
    },
    /// Ci[n',{a1,a2}] ≅ C_{n1} □ C_{n2}? Without --n1/--n2, searches factor pairs.
    CiTorus {
        #[arg(long)]
        nprime: u64,
        #[arg(long, allow_hyphen_values = true)]
        a1: i64,
        #[arg(long, allow_hyphen_values = true)]
        a2: i64,
        #[arg(long, requires = "n2")]
        n1: Option<u64>,
        #[arg(long, requires = "n1")]
        n2: Option<u64>,
        #[arg(long)]
        witness: bool,
    },
    /// Is A[n,k] circulant?
    AccCirculant {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Bipartiteness of A[n,k] (with --k) or Ci[2n,{a,b}] (with --a/--b).
    Bipartite(PredicateArgs),
    /// Connectivity of A[n,k] (with --k) or Ci[2n,{a,b}] (with --a/--b).
    Connected(PredicateArgs),
}

#[derive(Debug, Args)]
struct PredicateArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, conflicts_with_all = ["a", "b"])]
    k: Option<u64>,
    #[arg(long, allow_hyphen_values = true, requires = "b")]
    a: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    b: Option<i64>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Gen { family, format, shuffle } => {
            let mut g = build_family(&family)?;
            if let Some(seed) = shuffle {
                g = shuffled(&g, seed);
            }
            let text = match format {
                Format::Json => g.to_json(),
                Format::Dot => g.to_dot(),
                Format::Edgelist => g.to_edge_list(),
            };
            write_out(out, &text)?;
            Ok(EXIT_YES)
        }
        Command::Decide { kind } => decide(kind, out),
        Command::Oracle { graph_g, graph_h } => {
            let g = read_graph(&graph_g)?;
            let h = read_graph(&graph_h)?;
            match Oracle::from_env().are_isomorphic(&g, &h)? {
                Some(map) => {
                    let doc = WitnessDoc::new(&g, &h, &map);
                    if !doc.verify()? {
                        return Err(Error::InvariantViolation("oracle witness failed re-verification".into()));
                    }
                    write_out(out, &doc.to_json())?;
                    Ok(EXIT_YES)
                }
                None => {
                    write_out(out, "not isomorphic\n")?;
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Verify { witness } => {
            let text = std::fs::read_to_string(&witness)
                .map_err(|e| Error::Parse(format!("{}: {e}", witness.display())))?;
            let ok = WitnessDoc::from_json(&text)?.verify()?;
            write_out(out, if ok { "verified\n" } else { "rejected\n" })?;
            Ok(if ok { EXIT_YES } else { EXIT_NO })
        }
        Command::Census { max_n, out: path } => {
            let report = census::run_census(max_n, &Oracle::from_env())?;
            if let Some(path) = path {
                let text = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
                std::fs::write(&path, text)
                    .map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
            }
            let s = &report.summary;
            write_out(
                out,
                &format!(
                    "rows={} isomorphic={} disagreements={} witness_failures={}\n",
                    s.rows, s.isomorphic, s.disagreements, s.witness_failures
                ),
            )?;
            for row in report.failures() {
                let _ = writeln!(err, "FAIL {}", serde_json::to_string(row).expect("row serializes"));
            }
            Ok(if report.ok() { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn build_family(family: &Family) -> Result<Graph> {
    Ok(match *family {
        Family::Accordion { n, k } => graph::accordion(AccordionParams::new(n, k)?),
        Family::Circulant(CirculantArgs { n, a, b }) => graph::circulant(CirculantParams::new(n, a, b)?),
        Family::Torus { n1, n2 } => {
            graph::cartesian_product(&graph::cycle_graph(n1)?, &graph::cycle_graph(n2)?)?
        }
        Family::Cyl { n1, n2 } => graph::cartesian_product(&graph::cycle_graph(n1)?, &graph::path_graph(n2)?)?,
    })
}

/// The graph relabelled by a permutation drawn from `seed`.
pub fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm).expect("shuffle is a permutation")
}

fn decide(kind: DecideKind, out: &mut dyn Write) -> Result<i32> {
    let (answer, mut report, witness): (bool, Value, Option<(Graph, Graph, VertexMap)>) = match kind {
        DecideKind::AccAcc { n, k1, k2, witness } => {
            let v = deciders::accordions_isomorphic(n, k1, k2)?;
            let report = json!({
                "kind": "acc-acc",
                "params": {"n": n, "k1": k1, "k2": k2},
                "conditions": {
                    "gcd_n_k1": v.gcd1,
                    "gcd_n_k2": v.gcd2,
                    "half_product_mod_n": (k1 * k2 / 2) % n,
                },
                "branch": v.branch,
            });
            let w = if witness && v.isomorphic {
                let m = witness::accordion_iso_witness(n, k1, k2)?;
                let src = graph::accordion(AccordionParams::new(n, k2)?);
                let dst = graph::accordion(AccordionParams::new(n, k1)?);
                Some((src, dst, m))
            } else {
                None
            };
            (v.isomorphic, report, w)
        }
        DecideKind::CiAcc { ci, k, witness } => {
            let CirculantArgs { n, a, b } = ci;
            let k = match k {
                Some(k) => Some(k),
                None => {
                    // surfaces the two-even-lengths case as not-applicable
                    deciders::circulant_iso_accordion(n, a, b, 1)?;
                    deciders::find_accordion_param(n, a, b)?
                }
            };
            match k {
                None => (
                    false,
                    json!({"kind": "ci-acc", "params": {"n": n, "a": a, "b": b}, "matched_k": null}),
                    None,
                ),
                Some(k) => {
                    let v = deciders::circulant_iso_accordion(n, a, b, k)?;
                    let report = json!({
                        "kind": "ci-acc",
                        "params": {"n": n, "a": a, "b": b, "k": k},
                        "verdict": v,
                    });
                    let w = if witness && v.isomorphic {
                        let m = witness::circulant_accordion_witness(n, a, b, k)?;
                        let src = graph::circulant(CirculantParams::new(n, a, b)?);
                        let dst = graph::accordion(AccordionParams::new(n, k)?);
                        Some((src, dst, m))
                    } else {
                        None
                    };
                    (v.isomorphic, report, w)
                }
            }
        }
        DecideKind::CiTorus { nprime, a1, a2, n1, n2, witness } => {
            let factors = match (n1, n2) {
                (Some(n1), Some(n2)) => {
                    deciders::circulant_iso_torus(nprime, a1, a2, n1, n2)?.then_some((n1, n2))
                }
                _ => deciders::circulant_torus_factors(nprime, a1, a2)?,
            };
            let (l1, l2) = (graph::fold_length(a1, nprime), graph::fold_length(a2, nprime));
            let report = json!({
                "kind": "ci-torus",
                "params": {"nprime": nprime, "a1": a1, "a2": a2, "n1": n1, "n2": n2},
                "conditions": {
                    "gcd_nprime_a1": modarith::gcd(nprime, l1)?,
                    "gcd_nprime_a2": modarith::gcd(nprime, l2)?,
                },
                "factors": factors,
            });
            let w = match factors {
                Some((f1, f2)) if witness => {
                    let ci = graph::circulant_of_order(nprime as usize, a1, a2)?;
                    let torus = graph::cartesian_product(
                        &graph::cycle_graph(f1 as usize)?,
                        &graph::cycle_graph(f2 as usize)?,
                    )?;
                    let m = Oracle::from_env().are_isomorphic(&ci, &torus)?.ok_or_else(|| {
                        Error::InvariantViolation("decider and oracle disagree on torus".into())
                    })?;
                    Some((ci, torus, m))
                }
                _ => None,
            };
            (factors.is_some(), report, w)
        }
        DecideKind::AccCirculant { n, k } => {
            let yes = deciders::accordion_is_circulant(n, k)?;
            (yes, json!({"kind": "acc-circulant", "params": {"n": n, "k": k}}), None)
        }
        DecideKind::Bipartite(p) => {
            let (yes, params) = match p {
                PredicateArgs { n, k: Some(k), .. } => (deciders::accordion_is_bipartite(n, k)?, json!({"n": n, "k": k})),
                PredicateArgs { n, a: Some(a), b: Some(b), .. } => {
                    (deciders::circulant_is_bipartite(n, a, b)?, json!({"n": n, "a": a, "b": b}))
                }
                _ => return Err(invalid("give either --k or both --a and --b")),
            };
            (yes, json!({"kind": "bipartite", "params": params}), None)
        }
        DecideKind::Connected(p) => {
            let (yes, params) = match p {
                PredicateArgs { n, k: Some(k), .. } => {
                    let g = graph::accordion(AccordionParams::new(n, k)?);
                    (graph::is_connected(&g), json!({"n": n, "k": k}))
                }
                PredicateArgs { n, a: Some(a), b: Some(b), .. } => {
                    (deciders::circulant_is_connected(n, a, b)?, json!({"n": n, "a": a, "b": b}))
                }
                _ => return Err(invalid("give either --k or both --a and --b")),
            };
            (yes, json!({"kind": "connected", "params": params}), None)
        }
    };
    report["answer"] = json!(answer);
    if let Some((src, dst, map)) = witness {
        if !verify_witness(&src, &dst, &map)? {
            return Err(Error::InvariantViolation("witness failed re-verification".into()));
        }
        report["witness"] = serde_json::to_value(WitnessDoc::new(&src, &dst, &map)).expect("witness serializes");
    }
    write_out(out, &(serde_json::to_string_pretty(&report).expect("report serializes") + "\n"))?;
    Ok(if answer { EXIT_YES } else { EXIT_NO })
}

fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Graph::from_json(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| invalid(format!("write failed: {e}")))
}
