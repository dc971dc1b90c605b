//! `plumbcalc`: exact invariants of negative-definite plumbing trees from
//! the command line.
//!
//! Every subcommand reads one JSON graph file, writes one JSON document to
//! standard output and exits 0 on success, 1 on domain errors (with a
//! machine-readable error document) and 2 on usage errors. All numbers in
//! the output are exact: integers, or `"p/q"` strings for non-integral
//! rationals.

mod literals;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use plumbcalc_core::cycles::{self, DEFAULT_STAIRCASE_CAP};
use plumbcalc_core::render;
use plumbcalc_core::{invariants, oracle, series};
use plumbcalc_core::{Error, Int, LatticeContext, PlumbingGraph};

#[derive(Parser)]
#[command(
    name = "plumbcalc",
    version,
    about = "Exact invariants of negative-definite plumbing trees",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON output (the default and only format; accepted for
    /// compatibility).
    #[arg(long, global = true)]
    json: bool,
    /// Include certificates and per-point detail in the output.
    #[arg(long, global = true)]
    verbose: bool,
    /// Thread count for parallel sections; the output is identical for any
    /// value.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Per-coordinate cap for staircase searches.
    #[arg(long, global = true, value_name = "INT")]
    cap: Option<u64>,
}

#[derive(Args)]
struct GraphArg {
    /// Path to the JSON graph file.
    graph: PathBuf,
}

#[derive(Args)]
struct CycleArg {
    /// Cycle literal, e.g. "v1:3/2,v2:1" ("0" for the zero cycle).
    #[arg(long, value_name = "CYCLE")]
    at: String,
    /// Interpret cycle coordinates as coefficients of the dual basis.
    #[arg(long)]
    dual_coords: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check the graph hypotheses and report violations.
    Validate(GraphArg),
    /// Lattice data: determinant, discriminant group, canonical class.
    Lattice(GraphArg),
    /// One coefficient of the combinatorial series.
    Coeff {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cycle: CycleArg,
    },
    /// The equivariant Hilbert coefficient (truncated series sum).
    Hilbert {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cycle: CycleArg,
    },
    /// Dimension of a section-space quotient of a natural line bundle.
    H0dim {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cycle: CycleArg,
        /// Integral effective cycle to quotient by.
        #[arg(long, value_name = "CYCLE")]
        by: String,
    },
    /// Poincare series of one vertex valuation, per class.
    Poincare {
        #[command(flatten)]
        graph: GraphArg,
        /// Vertex id.
        #[arg(long, value_name = "ID")]
        vertex: String,
        /// Largest exponent reported.
        #[arg(long, value_name = "N")]
        max_degree: u64,
        /// Class residue tuple, e.g. "1,0" (identity if omitted).
        #[arg(long, value_name = "TUPLE")]
        class: Option<String>,
    },
    /// Seiberg-Witten invariants per spin^c class.
    Sw {
        #[command(flatten)]
        graph: GraphArg,
        /// Class residue tuple; reports a single entry.
        #[arg(long, value_name = "TUPLE", conflicts_with = "all")]
        class: Option<String>,
        /// Report the full table (the default).
        #[arg(long)]
        all: bool,
    },
    /// h^1 of the natural line bundle with the given Chern data.
    H1 {
        #[command(flatten)]
        graph: GraphArg,
        /// Chern cycle literal.
        #[arg(long, value_name = "CYCLE")]
        chern: String,
        #[arg(long)]
        dual_coords: bool,
    },
    /// Geometric genus.
    Pg(GraphArg),
    /// The minimal (fundamental) cycle.
    Zmin(GraphArg),
    /// The maximal cycle.
    Zmax(GraphArg),
    /// Decide membership in the principal-cycle semigroup.
    Principal {
        #[command(flatten)]
        graph: GraphArg,
        /// Cycle literal to test.
        #[arg(long, value_name = "CYCLE")]
        cycle: String,
        #[arg(long)]
        dual_coords: bool,
    },
    /// Check the per-node, per-branch monomial condition.
    Check(GraphArg),
    /// Base points of the maximal-ideal pullback with their staircases.
    Basepoints(GraphArg),
    /// The multiplicity.
    Mult(GraphArg),
    /// Aggregate report of all invariants.
    Report(GraphArg),
    /// Brute-force reference implementations (for reproducing test values).
    #[command(hide = true)]
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
}

#[derive(Subcommand)]
enum OracleOp {
    /// Direct monomial count on a string graph.
    StringHilbert {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cycle: CycleArg,
        /// Box bound per exponent.
        #[arg(long, value_name = "B")]
        box_bound: Option<u64>,
    },
    /// Unpruned box enumeration of a series region sum.
    Region {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        cycle: CycleArg,
        /// "not-geq" or "eff-not-geq".
        #[arg(long, value_name = "MODE", default_value = "not-geq")]
        mode: String,
        /// Quotient cycle for mode eff-not-geq.
        #[arg(long, value_name = "CYCLE")]
        by: Option<String>,
    },
    /// Exhaustive minimal anti-nef cycle in a box.
    Zmin {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_name = "B", default_value_t = 10)]
        bound: u64,
    },
    /// Exhaustive pairing-characterization principality test.
    Principal {
        #[command(flatten)]
        graph: GraphArg,
        /// Cycle literal to test.
        #[arg(long, value_name = "CYCLE")]
        cycle: String,
        #[arg(long)]
        dual_coords: bool,
        #[arg(long, value_name = "B", default_value_t = 10)]
        bound: u64,
    },
}

fn load_graph(path: &Path) -> Result<PlumbingGraph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    PlumbingGraph::parse(&text)
}

fn load_context(path: &Path) -> Result<LatticeContext, Error> {
    LatticeContext::build(&load_graph(path)?)
}

fn emit(doc: &Value) {
    println!("{}", serde_json::to_string(doc).expect("output serializes"));
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let cap = cli.cap.unwrap_or(DEFAULT_STAIRCASE_CAP);
    match &cli.command {
        Command::Validate(g) => {
            let graph = load_graph(&g.graph)?;
            let report = graph.validate();
            if report.ok() {
                emit(&json!({"ok": true}));
                Ok(ExitCode::SUCCESS)
            } else {
                let violations: Vec<Value> = report
                    .violations
                    .iter()
                    .map(|v| json!({"kind": v.kind(), "message": v.to_string()}))
                    .collect();
                emit(&json!({"ok": false, "violations": violations}));
                Ok(ExitCode::from(1))
            }
        }
        Command::Lattice(g) => {
            let ctx = load_context(&g.graph)?;
            let k = ctx.canonical_class();
            let ids =
                |list: &[usize]| -> Vec<String> {
                    let mut v: Vec<String> = list
                        .iter()
                        .map(|&x| ctx.graph().vertex_id(x).to_owned())
                        .collect();
                    v.sort();
                    v
                };
            let mut orders = serde_json::Map::new();
            let mut valencies = serde_json::Map::new();
            let mut order: Vec<usize> = (0..ctx.len()).collect();
            order.sort_by(|&a, &b| ctx.graph().vertex_id(a).cmp(ctx.graph().vertex_id(b)));
            for v in order {
                let id = ctx.graph().vertex_id(v).to_owned();
                orders.insert(id.clone(), render::int_value(&ctx.order_e(v)));
                valencies.insert(id, json!(ctx.valency(v)));
            }
            let mut doc = json!({
                "det": render::int_value(ctx.det()),
                "invariant_factors": ctx.invariant_factors().iter().map(render::int_value).collect::<Vec<_>>(),
                "class_moduli": ctx.class_moduli().iter().map(render::int_value).collect::<Vec<_>>(),
                "k": render::cycle_value(&ctx, k),
                "k_squared": render::rat_value(&ctx.pair(k, k)),
                "orders": orders,
                "valencies": valencies,
                "ends": ids(ctx.ends()),
                "nodes": ids(ctx.nodes()),
            });
            if cli.verbose {
                let mut duals = serde_json::Map::new();
                let mut order: Vec<usize> = (0..ctx.len()).collect();
                order.sort_by(|&a, &b| ctx.graph().vertex_id(a).cmp(ctx.graph().vertex_id(b)));
                for v in order {
                    duals.insert(
                        ctx.graph().vertex_id(v).to_owned(),
                        render::cycle_value(&ctx, &ctx.dual(v)),
                    );
                }
                doc["dual_basis"] = Value::Object(duals);
            }
            emit(&doc);
            Ok(ExitCode::SUCCESS)
        }
        Command::Coeff { graph, cycle } => {
            let ctx = load_context(&graph.graph)?;
            let at = literals::parse_cycle(&ctx, &cycle.at, cycle.dual_coords)?;
            emit(&json!({
                "at": render::cycle_value(&ctx, &at),
                "coefficient": series::coefficient(&ctx, &at),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hilbert { graph, cycle } => {
            let ctx = load_context(&graph.graph)?;
            let at = literals::parse_cycle(&ctx, &cycle.at, cycle.dual_coords)?;
            emit(&json!({
                "at": render::cycle_value(&ctx, &at),
                "value": series::truncated_sum(&ctx, &at),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::H0dim { graph, cycle, by } => {
            let ctx = load_context(&graph.graph)?;
            let at = literals::parse_cycle(&ctx, &cycle.at, cycle.dual_coords)?;
            let by = literals::parse_cycle(&ctx, by, cycle.dual_coords)?;
            let value = series::section_quotient_dim(&ctx, &at, &by)?;
            emit(&json!({
                "at": render::cycle_value(&ctx, &at),
                "by": render::cycle_value(&ctx, &by),
                "value": value,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Poincare { graph, vertex, max_degree, class } => {
            let ctx = load_context(&graph.graph)?;
            let u = ctx
                .graph()
                .vertex_index(vertex)
                .ok_or_else(|| Error::UnknownVertex(vertex.clone()))?;
            let h = match class {
                Some(c) => literals::parse_class(&ctx, c)?,
                None => ctx.h_identity(),
            };
            let terms = series::vertex_poincare(&ctx, u, &h, *max_degree);
            emit(&json!({
                "vertex": vertex,
                "class": render::class_value(&h),
                "max_degree": max_degree,
                "terms": terms
                    .iter()
                    .map(|(e, c)| json!({"exponent": render::rat_value(e), "coefficient": c}))
                    .collect::<Vec<_>>(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Sw { graph, class, all: _ } => {
            let ctx = load_context(&graph.graph)?;
            match class {
                Some(c) => {
                    let h = literals::parse_class(&ctx, c)?;
                    let v = invariants::sw_invariant(&ctx, &h);
                    emit(&json!({
                        "class": render::class_value(&h),
                        "sw": render::rat_value(&v),
                    }));
                }
                None => {
                    let table = invariants::sw_table(&ctx);
                    emit(&json!({ "table": render::sw_table_value(&table) }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::H1 { graph, chern, dual_coords } => {
            let ctx = load_context(&graph.graph)?;
            let l = literals::parse_cycle(&ctx, chern, *dual_coords)?;
            let rep = invariants::h1_natural(&ctx, &l)?;
            emit(&json!({
                "chern": render::cycle_value(&ctx, &l),
                "value": render::int_value(&rep.value),
                "summands": {
                    "truncated": rep.truncated,
                    "sw_term": render::rat_value(&rep.sw_term),
                    "quadratic": render::rat_value(&rep.quadratic),
                },
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Pg(g) => {
            let ctx = load_context(&g.graph)?;
            let pg = invariants::geometric_genus(&ctx)?;
            emit(&json!({ "pg": render::int_value(&pg) }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Zmin(g) => {
            let ctx = load_context(&g.graph)?;
            let z = ctx.minimal_cycle();
            emit(&json!({
                "cycle": render::cycle_value(&ctx, &z),
                "self_intersection": render::rat_value(&ctx.pair(&z, &z)),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Zmax(g) => {
            let ctx = load_context(&g.graph)?;
            let z = cycles::maximal_cycle(&ctx);
            emit(&json!({
                "cycle": render::cycle_value(&ctx, &z),
                "self_intersection": render::rat_value(&ctx.pair(&z, &z)),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Principal { graph, cycle, dual_coords } => {
            let ctx = load_context(&graph.graph)?;
            let l = literals::parse_cycle(&ctx, cycle, *dual_coords)?;
            let cert = cycles::is_principal(&ctx, &l)?;
            if cli.verbose {
                emit(&render::certificate_value(&ctx, &cert));
            } else {
                emit(&json!({ "principal": cert.is_principal() }));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check(g) => {
            let ctx = load_context(&g.graph)?;
            let rep = cycles::monomial_condition(&ctx);
            let mut doc = json!({
                "satisfied": rep.satisfied(),
                "checked_branches": rep.verdicts.len(),
            });
            if !rep.satisfied() {
                let failures: Vec<Value> = rep
                    .verdicts
                    .iter()
                    .filter(|v| v.witness.is_none())
                    .map(|v| {
                        json!({
                            "node": ctx.graph().vertex_id(v.node),
                            "branch": ctx.graph().vertex_id(v.branch_root),
                        })
                    })
                    .collect();
                doc["failures"] = Value::Array(failures);
            }
            if cli.verbose {
                let slot_ids: Vec<&str> = ctx
                    .end_slots()
                    .iter()
                    .map(|&v| ctx.graph().vertex_id(v))
                    .collect();
                doc["slots"] = json!(slot_ids);
                doc["verdicts"] = Value::Array(
                    rep.verdicts
                        .iter()
                        .map(|v| {
                            json!({
                                "node": ctx.graph().vertex_id(v.node),
                                "branch": ctx.graph().vertex_id(v.branch_root),
                                "witness": v.witness,
                            })
                        })
                        .collect(),
                );
            }
            emit(&doc);
            Ok(ExitCode::SUCCESS)
        }
        Command::Basepoints(g) => {
            let ctx = load_context(&g.graph)?;
            let zmax = cycles::maximal_cycle(&ctx);
            let staircases = cycles::newton_staircases(&ctx, &zmax, cap)?;
            let bases: Vec<Value> = staircases
                .iter()
                .filter(|s| s.base_point)
                .map(|s| render::staircase_value(&ctx, s))
                .collect();
            let mut doc = json!({ "basepoints": bases });
            if cli.verbose {
                doc["all_points"] = Value::Array(
                    staircases.iter().map(|s| render::staircase_value(&ctx, s)).collect(),
                );
            }
            emit(&doc);
            Ok(ExitCode::SUCCESS)
        }
        Command::Mult(g) => {
            let ctx = load_context(&g.graph)?;
            let rep = cycles::multiplicity(&ctx, cap)?;
            let contribution: Int = &rep.total - &rep.neg_zmax_square;
            let mut doc = json!({
                "multiplicity": render::int_value(&rep.total),
                "neg_zmax_squared": render::int_value(&rep.neg_zmax_square),
                "base_point_contribution": render::int_value(&contribution),
                "basepoints": rep.staircases.iter().filter(|s| s.base_point).count(),
            });
            if cli.verbose {
                doc["staircases"] = Value::Array(
                    rep.staircases
                        .iter()
                        .map(|s| render::staircase_value(&ctx, s))
                        .collect(),
                );
            }
            emit(&doc);
            Ok(ExitCode::SUCCESS)
        }
        Command::Report(g) => {
            let ctx = load_context(&g.graph)?;
            emit(&render::invariant_report(&ctx, cap)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { op } => run_oracle(op),
    }
}

fn run_oracle(op: &OracleOp) -> Result<ExitCode, Error> {
    match op {
        OracleOp::StringHilbert { graph, cycle, box_bound } => {
            let ctx = load_context(&graph.graph)?;
            let at = literals::parse_cycle(&ctx, &cycle.at, cycle.dual_coords)?;
            let bound = box_bound.unwrap_or_else(|| {
                ctx.end_slots()
                    .iter()
                    .map(|&s| oracle::box_bound(&ctx, s, &at))
                    .max()
                    .unwrap_or(0)
            });
            let count = oracle::string_hilbert_count(&ctx, &at, bound)?;
            emit(&json!({ "bound": bound, "count": count }));
            Ok(ExitCode::SUCCESS)
        }
        OracleOp::Region { graph, cycle, mode, by } => {
            let ctx = load_context(&graph.graph)?;
            let at = literals::parse_cycle(&ctx, &cycle.at, cycle.dual_coords)?;
            let region = match (mode.as_str(), by) {
                ("not-geq", None) => oracle::Region::NotGeq,
                ("eff-not-geq", Some(b)) => {
                    oracle::Region::EffNotGeq(literals::parse_cycle(&ctx, b, cycle.dual_coords)?)
                }
                ("eff-not-geq", None) => {
                    return Err(Error::BadLiteral("mode eff-not-geq requires --by".into()))
                }
                (m, _) => {
                    return Err(Error::BadLiteral(format!(
                        "mode must be not-geq or eff-not-geq, got {m:?}"
                    )))
                }
            };
            emit(&json!({ "value": oracle::naive_series_region(&ctx, &at, &region) }));
            Ok(ExitCode::SUCCESS)
        }
        OracleOp::Zmin { graph, bound } => {
            let ctx = load_context(&graph.graph)?;
            let z = oracle::brute_zmin(&ctx, *bound)?;
            emit(&json!({ "cycle": render::cycle_value(&ctx, &z) }));
            Ok(ExitCode::SUCCESS)
        }
        OracleOp::Principal { graph, cycle, dual_coords, bound } => {
            let ctx = load_context(&graph.graph)?;
            let l = literals::parse_cycle(&ctx, cycle, *dual_coords)?;
            let p = oracle::brute_principal(&ctx, &l, *bound)?;
            emit(&json!({ "principal": p }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // ignore the error if a pool already exists (tests call run twice)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            emit(&json!({"error": {"kind": e.kind(), "message": e.to_string()}}));
            if matches!(e, Error::BadLiteral(_)) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
