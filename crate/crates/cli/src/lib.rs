//! Command-line front end: argument parsing, configuration, sweep
//! orchestration and JSON/text reporting over the `arbors` library.

use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use arbors::algebra::{BiPoly, UniPoly};
use arbors::arbor::{self, Arbor};
use arbors::families::{self, CoxeterType};
use arbors::golden;
use arbors::invariants::{self, Triangle};
use arbors::polytope;
use arbors::poset;
use arbors::volume;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "arbor", version, about = "Exact polytope and poset invariants of arbors")]
pub struct Cli {
    #[command(flatten)]
    pub options: GlobalOptions,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOptions {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Maximum arbor size for sweeps.
    #[arg(long, global = true)]
    pub max_size: Option<u32>,

    /// Refuse computations that would enumerate more elements than this.
    #[arg(long, global = true)]
    pub guard_elements: Option<u64>,

    /// Truncation order for power-series checks.
    #[arg(long, global = true)]
    pub series_order: Option<usize>,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Optional JSON config file with the same keys as the flags above.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub format: Format,
    pub max_size: u32,
    pub guard_elements: u64,
    pub series_order: usize,
    pub jobs: Option<usize>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            format: Format::Json,
            max_size: 8,
            guard_elements: 200_000,
            series_order: 10,
            jobs: None,
        }
    }
}

impl Config {
    /// Defaults, overridden by the config file, overridden by flags.
    pub fn resolve(options: &GlobalOptions) -> anyhow::Result<Config> {
        let mut cfg = Config::default();
        if let Some(path) = &options.config {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            let value: Value = serde_json::from_str(&text).context("parsing config JSON")?;
            let obj = value
                .as_object()
                .ok_or_else(|| anyhow!("config must be a JSON object"))?;
            for (key, v) in obj {
                match key.as_str() {
                    "format" => {
                        cfg.format = match v.as_str() {
                            Some("json") => Format::Json,
                            Some("text") => Format::Text,
                            _ => return Err(anyhow!("format must be \"json\" or \"text\"")),
                        }
                    }
                    "max_size" => {
                        cfg.max_size =
                            v.as_u64().ok_or_else(|| anyhow!("max_size must be a number"))? as u32
                    }
                    "guard_elements" => {
                        cfg.guard_elements = v
                            .as_u64()
                            .ok_or_else(|| anyhow!("guard_elements must be a number"))?
                    }
                    "series_order" => {
                        cfg.series_order = v
                            .as_u64()
                            .ok_or_else(|| anyhow!("series_order must be a number"))?
                            as usize
                    }
                    "jobs" => {
                        cfg.jobs = Some(
                            v.as_u64().ok_or_else(|| anyhow!("jobs must be a number"))? as usize,
                        )
                    }
                    other => return Err(anyhow!("unknown config key '{other}'")),
                }
            }
        }
        if let Some(f) = options.format {
            cfg.format = f;
        }
        if let Some(n) = options.max_size {
            cfg.max_size = n;
        }
        if let Some(n) = options.guard_elements {
            cfg.guard_elements = n;
        }
        if let Some(n) = options.series_order {
            cfg.series_order = n;
        }
        if options.jobs.is_some() {
            cfg.jobs = options.jobs;
        }
        Ok(cfg)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all arbors of the given size in canonical form.
    Enumerate { size: u32 },

    /// Recursive invariants of one arbor.
    Invariants {
        arbor: String,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
    },

    /// Coordinate layout, vertices, dilate counts and decomposition checks.
    Polytope {
        arbor: String,
        /// Dilation factor for the lattice-point count.
        #[arg(long, default_value_t = 1)]
        dilate: u32,
    },

    /// The poset of lattice points with its order-theoretic invariants.
    Poset { arbor: String },

    /// Laplace polynomial, slice-volume pieces and the exact volume.
    Volume { arbor: String },

    /// Closed-form family posets and triangles.
    #[command(subcommand)]
    Families(FamilyCommand),

    /// Identity and conjecture sweeps; exits nonzero on any failed verdict.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    All,
    Ehrhart,
    Zeta,
    ZetaRefined,
    K,
    M,
    Transmute,
    F,
    H,
}

#[derive(Subcommand, Debug)]
pub enum FamilyCommand {
    /// Lattice-path poset with slope m and endpoint (x, y).
    Fuss { m: u32, x: u32, y: u32 },
    /// Tuples in N^n with sum at most k.
    Typeb { n: u32, k: u32 },
    /// Noncrossing-partition M-triangle of the given Coxeter type.
    Nc {
        #[arg(value_parser = parse_coxeter)]
        family: CoxeterType,
        n: u32,
    },
}

fn parse_coxeter(s: &str) -> Result<CoxeterType, String> {
    match s {
        "A" | "a" => Ok(CoxeterType::A),
        "B" | "b" => Ok(CoxeterType::B),
        _ => Err("expected A or B".into()),
    }
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Ehrhart/Zeta reversal conjectures on linear arbors.
    Ez {
        #[arg(long)]
        max_size: Option<u32>,
    },
    /// Ehrhart root location and coefficient positivity.
    Roots {
        #[arg(long)]
        max_size: Option<u32>,
    },
    /// Minkowski decomposition inclusions.
    Minkowski {
        #[arg(long)]
        max_size: Option<u32>,
    },
    /// Newton-polynomial support against the polytope.
    Newton {
        #[arg(long)]
        max_size: Option<u32>,
    },
    /// Halohedron cardinalities, h-vectors and series equations.
    Halo {
        #[arg(long)]
        max: Option<u32>,
    },
    /// Hochschild-polytope counts, h-vectors and guessed series.
    Hochschild {
        #[arg(long)]
        max: Option<u32>,
    },
    /// All pinned reference values.
    Golden,
}

/// Run a parsed command line; the returned code follows the contract
/// 0 = success, 1 = failed check or refused guard, 2 = usage error.
pub fn execute(cli: Cli) -> i32 {
    let cfg = match Config::resolve(&cli.options) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_USAGE;
        }
    };
    let outcome = match cfg.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build();
            match pool {
                Ok(pool) => pool.install(|| run_command(&cli.command, &cfg)),
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_USAGE;
                }
            }
        }
        None => run_command(&cli.command, &cfg),
    };
    match outcome {
        Ok(all_passed) => {
            if all_passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => match e.downcast_ref::<arbors::Error>() {
            Some(arbors::Error::GuardExceeded { .. }) => {
                eprintln!("error: {e:#}");
                EXIT_CHECK_FAILED
            }
            _ => {
                eprintln!("error: {e:#}");
                EXIT_USAGE
            }
        },
    }
}

fn parse_arbor(text: &str) -> anyhow::Result<Arbor> {
    Arbor::parse(text).map_err(|e| anyhow!(e))
}

fn run_command(command: &Command, cfg: &Config) -> anyhow::Result<bool> {
    match command {
        Command::Enumerate { size } => {
            if *size == 0 {
                return Err(anyhow!("size must be at least 1"));
            }
            let arbors = arbor::enumerate_arbors(*size);
            match cfg.format {
                Format::Json => {
                    let list: Vec<Value> =
                        arbors.iter().map(|t| Value::from(t.encode())).collect();
                    emit(&json!({ "size": size, "count": list.len(), "arbors": list }));
                }
                Format::Text => {
                    for t in &arbors {
                        println!("{}", t.encode());
                    }
                }
            }
            Ok(true)
        }
        Command::Invariants { arbor, which } => {
            let t = parse_arbor(arbor)?;
            let out = invariants_output(&t, *which);
            match cfg.format {
                Format::Json => emit(&out),
                Format::Text => print_invariants_text(&t, *which),
            }
            Ok(true)
        }
        Command::Polytope { arbor, dilate } => {
            let t = parse_arbor(arbor)?;
            let out = polytope_output(&t, *dilate, cfg)?;
            match cfg.format {
                Format::Json => emit(&out),
                Format::Text => print_text_value(&out, 0),
            }
            Ok(true)
        }
        Command::Poset { arbor } => {
            let t = parse_arbor(arbor)?;
            let p = poset::build_poset_guarded(&t, cfg.guard_elements)?;
            let f = p.cubical_f_vector();
            let ranks: Vec<usize> = p.poset.rank_sizes();
            let rank_poly = UniPoly::from_ints(
                &ranks.iter().map(|&s| s as i64).collect::<Vec<_>>(),
            );
            let out = json!({
                "arbor": t.encode(),
                "elements": p.len(),
                "rank_sizes": ranks,
                "rank_generating_function": rank_poly.to_json("X"),
                "m_triangle": triangle_json(&Triangle::new(p.poset.mobius_triangle(), t.size() as usize)),
                "cubical_f_vector": f.to_json("X"),
                "maximal_chains": p.poset.maximal_chain_count().to_string(),
            });
            match cfg.format {
                Format::Json => emit(&out),
                Format::Text => {
                    println!("arbor {}", t.encode());
                    println!("elements {}", p.len());
                    println!("rank sizes {ranks:?}");
                    println!("m-triangle\n{}", triangle_text(&p.poset.mobius_triangle()));
                    println!("cubical f-vector {}", f.pretty("X"));
                    println!("maximal chains {}", p.poset.maximal_chain_count());
                }
            }
            Ok(true)
        }
        Command::Volume { arbor } => {
            let t = parse_arbor(arbor)?;
            let l = volume::laplace_poly(&t);
            let vf = volume::volume_function(&t);
            let vol = volume::volume(&t);
            let out = json!({
                "arbor": t.encode(),
                "laplace": l.to_json("E", "V"),
                "pieces": vf.pieces().iter().map(|p| p.to_json("h")).collect::<Vec<_>>(),
                "volume": [vol.numer().to_string(), vol.denom().to_string()],
            });
            match cfg.format {
                Format::Json => emit(&out),
                Format::Text => {
                    println!("arbor {}", t.encode());
                    println!("laplace {}", l.pretty("E", "V"));
                    for (i, p) in vf.pieces().iter().enumerate() {
                        println!("piece [{},{}] {}", i, i + 1, p.pretty("h"));
                    }
                    println!("volume {vol}");
                }
            }
            Ok(true)
        }
        Command::Families(fam) => run_family(fam, cfg),
        Command::Check(check) => run_check(check, cfg),
    }
}

fn invariants_output(t: &Arbor, which: Which) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("arbor".into(), Value::from(t.encode()));
    obj.insert("size".into(), Value::from(t.size()));
    let wants = |w: Which| which == Which::All || which == w;
    if wants(Which::Ehrhart) {
        obj.insert("ehrhart".into(), invariants::ehrhart(t).to_json("u"));
    }
    if wants(Which::Zeta) {
        obj.insert("zeta".into(), invariants::zeta(t).to_json("u"));
    }
    if wants(Which::ZetaRefined) {
        obj.insert(
            "zeta_refined".into(),
            invariants::zeta_refined(t).to_json("u", "X"),
        );
    }
    if wants(Which::K) {
        obj.insert("k".into(), invariants::k_poly(t).to_json("X", "Y"));
    }
    if wants(Which::M) {
        obj.insert("m_triangle".into(), triangle_json(&invariants::m_triangle(t)));
    }
    if wants(Which::Transmute) {
        obj.insert(
            "transmuted_m_triangle".into(),
            triangle_json(&invariants::transmuted_m_triangle(t)),
        );
    }
    if wants(Which::F) {
        obj.insert("f_vector".into(), invariants::f_vector(t).to_json("X"));
    }
    if wants(Which::H) {
        obj.insert("h_vector".into(), invariants::h_vector(t).to_json("X"));
    }
    Value::Object(obj)
}

fn print_invariants_text(t: &Arbor, which: Which) {
    println!("arbor {}", t.encode());
    let wants = |w: Which| which == Which::All || which == w;
    if wants(Which::Ehrhart) {
        println!("ehrhart {}", invariants::ehrhart(t).pretty("u"));
    }
    if wants(Which::Zeta) {
        println!("zeta {}", invariants::zeta(t).pretty("u"));
    }
    if wants(Which::ZetaRefined) {
        println!("zeta refined {}", invariants::zeta_refined(t).pretty("u", "X"));
    }
    if wants(Which::K) {
        println!("k {}", invariants::k_poly(t).pretty("X", "Y"));
    }
    if wants(Which::M) {
        println!("m-triangle\n{}", triangle_text(&invariants::m_triangle(t).poly));
    }
    if wants(Which::Transmute) {
        println!(
            "transmuted m-triangle\n{}",
            triangle_text(&invariants::transmuted_m_triangle(t).poly)
        );
    }
    if wants(Which::F) {
        println!("f-vector {}", invariants::f_vector(t).pretty("X"));
    }
    if wants(Which::H) {
        println!("h-vector {}", invariants::h_vector(t).pretty("X"));
    }
}

fn polytope_output(t: &Arbor, dilate: u32, cfg: &Config) -> anyhow::Result<Value> {
    let layout = polytope::CoordinateLayout::new(t);
    let nodes: Vec<Value> = layout
        .nodes()
        .iter()
        .map(|n| {
            json!({
                "address": n.address.to_string(),
                "multiplicity": n.mult,
                "own_range": [n.own_start, n.own_start + n.mult as usize],
                "down_range": [n.subtree_start, n.subtree_start + n.subtree_size],
                "up_indices": n.up_indices,
            })
        })
        .collect();
    let points = polytope::lattice_points_guarded(t, dilate, cfg.guard_elements)?;
    let vertices = polytope::vertices(t);
    let minkowski = polytope::check_minkowski(t);
    let newton = polytope::newton_check(t);
    Ok(json!({
        "arbor": t.encode(),
        "dimension": layout.dim(),
        "layout": nodes,
        "dilate": dilate,
        "lattice_point_count": points.len(),
        "vertex_count": vertices.len(),
        "vertices": vertices,
        "minkowski_check": {
            "tuple_sums_inside": minkowski.tuple_sums_inside,
            "vertices_decomposable": minkowski.vertices_decomposable,
            "pass": minkowski.pass(),
        },
        "newton_check": {
            "support_size": newton.support_size,
            "pass": newton.pass(),
        },
    }))
}

fn run_family(fam: &FamilyCommand, cfg: &Config) -> anyhow::Result<bool> {
    let out = match fam {
        FamilyCommand::Fuss { m, x, y } => {
            let p = families::FussParams::new(*m, *x, *y).map_err(|e| anyhow!(e))?;
            let elements = families::fuss_elements(&p);
            json!({
                "family": "fuss",
                "m": m, "x": x, "y": y,
                "elements": elements.len(),
                "zeta": families::fuss_zeta(&p).to_json("u"),
                "m_triangle": triangle_json(&families::fuss_m_triangle(&p)),
            })
        }
        FamilyCommand::Typeb { n, k } => {
            let p = families::TypeBParams::new(*n, *k).map_err(|e| anyhow!(e))?;
            json!({
                "family": "typeb",
                "n": n, "k": k,
                "elements": families::typeb_elements(&p).len(),
                "zeta": families::typeb_zeta(&p).to_json("u"),
                "m_triangle": triangle_json(&families::typeb_m_triangle(&p)),
            })
        }
        FamilyCommand::Nc { family, n } => {
            let tri = families::nc_m_triangle(*family, *n);
            json!({
                "family": "noncrossing",
                "type": match family { CoxeterType::A => "A", CoxeterType::B => "B" },
                "n": n,
                "m_triangle": triangle_json(&tri),
                "self_dual": families::is_self_dual(&tri),
            })
        }
    };
    match cfg.format {
        Format::Json => emit(&out),
        Format::Text => print_text_value(&out, 0),
    }
    Ok(true)
}

struct Verdict {
    name: String,
    pass: bool,
    detail: String,
}

fn report_verdicts(kind: &str, verdicts: &[Verdict], cfg: &Config) -> bool {
    let all = verdicts.iter().all(|v| v.pass);
    match cfg.format {
        Format::Json => {
            let items: Vec<Value> = verdicts
                .iter()
                .map(|v| {
                    json!({
                        "name": v.name,
                        "pass": v.pass,
                        "detail": v.detail,
                    })
                })
                .collect();
            emit(&json!({ "check": kind, "pass": all, "verdicts": items }));
        }
        Format::Text => {
            for v in verdicts {
                let mark = if v.pass { "pass" } else { "FAIL" };
                if v.detail.is_empty() {
                    println!("{mark} {kind} {}", v.name);
                } else {
                    println!("{mark} {kind} {} ({})", v.name, v.detail);
                }
            }
            println!("{kind}: {}", if all { "all pass" } else { "FAILURES" });
        }
    }
    all
}

fn sweep_arbors(max_size: u32) -> Vec<Arbor> {
    (1..=max_size).flat_map(arbor::enumerate_arbors).collect()
}

fn run_check(check: &CheckCommand, cfg: &Config) -> anyhow::Result<bool> {
    let pass = match check {
        CheckCommand::Ez { max_size } => {
            let n = max_size.unwrap_or(cfg.max_size);
            let arbors: Vec<Arbor> = (1..=n).flat_map(arbor::linear_arbors).collect();
            let mut verdicts: Vec<Verdict> = arbors
                .par_iter()
                .map(|t| {
                    let c = invariants::ez_check(t).expect("linear by construction");
                    Verdict {
                        name: t.encode(),
                        pass: c.pass(),
                        detail: if c.pass() {
                            String::new()
                        } else {
                            format!(
                                "ehrhart-vs-shifted-zeta {}, h-vectors {}",
                                c.ehrhart_equals_shifted_zeta, c.h_vectors_equal
                            )
                        },
                    }
                })
                .collect();
            verdicts.sort_by(|a, b| a.name.cmp(&b.name));
            report_verdicts("ez", &verdicts, cfg)
        }
        CheckCommand::Roots { max_size } => {
            let n = max_size.unwrap_or(cfg.max_size);
            let arbors = sweep_arbors(n);
            let mut verdicts: Vec<Verdict> = arbors
                .par_iter()
                .map(|t| {
                    let c = invariants::ehrhart_root_check(t);
                    Verdict {
                        name: t.encode(),
                        pass: c.pass(),
                        detail: if c.pass() {
                            String::new()
                        } else {
                            format!(
                                "{} of {} distinct roots in [-1,0), positive coefficients: {}",
                                c.roots_in_half_open_unit, c.distinct_roots, c.all_coeffs_positive
                            )
                        },
                    }
                })
                .collect();
            verdicts.sort_by(|a, b| a.name.cmp(&b.name));
            report_verdicts("roots", &verdicts, cfg)
        }
        CheckCommand::Minkowski { max_size } => {
            let n = max_size.unwrap_or(cfg.max_size.min(6));
            let arbors = sweep_arbors(n);
            let mut verdicts: Vec<Verdict> = arbors
                .par_iter()
                .map(|t| {
                    let c = polytope::check_minkowski(t);
                    Verdict {
                        name: t.encode(),
                        pass: c.pass(),
                        detail: String::new(),
                    }
                })
                .collect();
            verdicts.sort_by(|a, b| a.name.cmp(&b.name));
            report_verdicts("minkowski", &verdicts, cfg)
        }
        CheckCommand::Newton { max_size } => {
            let n = max_size.unwrap_or(cfg.max_size.min(6));
            let arbors = sweep_arbors(n);
            let mut verdicts: Vec<Verdict> = arbors
                .par_iter()
                .map(|t| {
                    let c = polytope::newton_check(t);
                    Verdict {
                        name: t.encode(),
                        pass: c.pass(),
                        detail: String::new(),
                    }
                })
                .collect();
            verdicts.sort_by(|a, b| a.name.cmp(&b.name));
            report_verdicts("newton", &verdicts, cfg)
        }
        CheckCommand::Halo { max } => {
            let n = max.unwrap_or(cfg.max_size);
            let report = families::halo_checks(n, cfg.series_order);
            let mut verdicts: Vec<Verdict> = report
                .entries
                .iter()
                .map(|e| Verdict {
                    name: format!("n={}", e.n),
                    pass: e.cardinality_ok && e.h_vectors_ok,
                    detail: format!(
                        "cardinality {}, h-vectors {}",
                        e.cardinality_ok, e.h_vectors_ok
                    ),
                })
                .collect();
            for (name, ok) in [
                ("series-equation-first", report.equation_a_holds),
                ("series-equation-second", report.equation_b_holds),
                ("series-equation-sum", report.equation_sum_holds),
            ] {
                verdicts.push(Verdict {
                    name: name.into(),
                    pass: ok,
                    detail: format!("at order {}", report.order),
                });
            }
            report_verdicts("halo", &verdicts, cfg)
        }
        CheckCommand::Hochschild { max } => {
            let n = max.unwrap_or(cfg.max_size);
            let report = families::hochschild_checks(n);
            let mut verdicts: Vec<Verdict> = report
                .entries
                .iter()
                .map(|e| Verdict {
                    name: format!("n={}", e.n),
                    pass: e.count_ok && e.h_vector_ok,
                    detail: format!("count {}, h-vector {}", e.count_ok, e.h_vector_ok),
                })
                .collect();
            for s in report.series() {
                verdicts.push(Verdict {
                    name: format!("series-{}", s.name),
                    pass: s.pass(),
                    detail: if s.pass() {
                        format!("coefficients match up to order {}", s.order)
                    } else {
                        format!("mismatches at orders {:?}", s.mismatched_orders)
                    },
                });
            }
            report_verdicts("hochschild", &verdicts, cfg)
        }
        CheckCommand::Golden => {
            let checks = golden::golden_suite();
            let verdicts: Vec<Verdict> = checks
                .iter()
                .map(|c| Verdict {
                    name: c.name.clone(),
                    pass: c.pass,
                    detail: c.detail.clone(),
                })
                .collect();
            report_verdicts("golden", &verdicts, cfg)
        }
    };
    Ok(pass)
}

fn triangle_json(tri: &Triangle) -> Value {
    json!({
        "size": tri.size,
        "poly": tri.poly.to_json("X", "Y"),
        "matrix": triangle_matrix(&tri.poly),
    })
}

/// Dense matrix form: entry [i][j] is the coefficient of X^i Y^j.
fn triangle_matrix(p: &BiPoly) -> Value {
    let di = p.deg_a().map_or(0, |d| d as usize);
    let dj = p.deg_b().map_or(0, |d| d as usize);
    let mut rows = vec![vec![Value::from(0); dj + 1]; di + 1];
    for (i, j, c) in p.terms() {
        rows[i as usize][j as usize] = rational_json(c);
    }
    Value::from(rows)
}

fn rational_json(c: &arbors::algebra::Rat) -> Value {
    if c.is_integer() {
        match i64::try_from(c.numer().clone()) {
            Ok(v) => Value::from(v),
            Err(_) => Value::from(c.numer().to_string()),
        }
    } else {
        Value::from(c.to_string())
    }
}

/// Display convention: constant term at the bottom left, one row per
/// Y-degree from the top degree down.
fn triangle_text(p: &BiPoly) -> String {
    let dj = p.deg_b().map_or(0, |d| d) as usize;
    let mut row_width = vec![0u32; dj + 1];
    for (i, j, _) in p.terms() {
        row_width[j as usize] = row_width[j as usize].max(i);
    }
    let mut lines = Vec::new();
    for k in (0..=dj).rev() {
        let entries: Vec<String> = (0..=row_width[k])
            .map(|i| p.coeff(i, k as u32).to_string())
            .collect();
        lines.push(entries.join(" "));
    }
    lines.join("\n")
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("valid JSON"));
}

fn print_text_value(v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) | Value::Array(_) => {
                        println!("{pad}{k}:");
                        print_text_value(val, indent + 1);
                    }
                    _ => println!("{pad}{k}: {val}"),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => print_text_value(item, indent),
                    _ => println!("{pad}- {item}"),
                }
            }
        }
        other => println!("{pad}{other}"),
    }
}
