//! Command-line front end. [`run`] parses arguments, drives the library and
//! returns the process exit code: 0 on success, 1 when `verify-paper` has a
//! failing criterion, 2 for usage errors, 3 when a search or size bound is hit.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Sign};
use crate::graph::{common_neighbors, diameter_report, non_neighbor_witness, EvenGraph, ExportFormat};
use crate::hyperelliptic::{Curve, CurvePlace, HyperellipticModel};
use crate::p1::{hilbert, reciprocity_check, PlaceP1, RationalModel};
use crate::parse::{parse_poly, parse_rational};
use crate::squares::{CurveModel, DensityMode, Squares};
use crate::verify;

#[derive(Parser, Debug)]
#[command(
    name = "evenpoint",
    version,
    about = "Even points and square classes of function fields over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    P1,
    Curve,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Csv,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Field order, an odd prime power.
    #[arg(long, default_value_t = 5)]
    q: u32,
    /// Modulus for extension fields, a monic polynomial in `u` over F_p.
    #[arg(long)]
    modulus: Option<String>,
    #[arg(long, value_enum, default_value_t = ModelKind::P1)]
    model: ModelKind,
    /// Right-hand side of y^2 = f(x) for the curve model.
    #[arg(long)]
    f: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
    /// Largest degree of a removed place the Sing scan accepts.
    #[arg(long, default_value_t = 6)]
    scan_bound: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Legendre and Hilbert symbols, quadratic reciprocity.
    Symbols {
        #[command(subcommand)]
        which: SymbolCommand,
    },
    /// The even-point graph.
    Graph {
        #[command(subcommand)]
        which: GraphCommand,
    },
    /// Basis of Sing(X ∖ removed).
    Sing {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        removed: Vec<String>,
    },
    /// Basis of Δ(X ∖ removed).
    Delta {
        #[command(flatten)]
        common: Common,
        #[arg(long, required = true)]
        removed: Vec<String>,
    },
    /// The five evenness criteria for one place, or for all places up to a degree.
    EvenCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        place: Option<String>,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Compatible points for classes (default: the Sing(X) basis), or classes for points.
    Compat {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        class: Vec<String>,
        #[arg(long)]
        point: Vec<String>,
        #[arg(long, default_value_t = 6)]
        search_degree: usize,
    },
    /// Fraction of degree-d places with prescribed symbols, or that are even.
    Density {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        class: Vec<String>,
        /// One of `+` or `-` per class.
        #[arg(long, allow_hyphen_values = true)]
        sign: Vec<String>,
        /// Sample this many places instead of enumerating all.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Checks a class against the global square theorem.
    Gst {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = 6)]
        degree_bound: usize,
    },
    /// Hyperelliptic curve reports.
    Curve {
        #[command(subcommand)]
        which: CurveCommand,
    },
    /// Runs the verification suite and prints a pass/fail table.
    VerifyPaper {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand, Debug)]
enum SymbolCommand {
    Legendre {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        class: String,
        #[arg(long)]
        place: String,
    },
    Hilbert {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        place: String,
    },
    Reciprocity {
        #[command(flatten)]
        common: Common,
        #[arg(long = "f-poly")]
        f_poly: String,
        #[arg(long = "g-poly")]
        g_poly: String,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    Build {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        /// Graph serialization; defaults to JSON.
        #[arg(long, value_enum)]
        export: Option<GraphFormat>,
    },
    Diameter {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 6)]
        search_degree: usize,
    },
    /// A non-neighbor of a place, and common neighbors with another.
    Witness {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        place: String,
        #[arg(long)]
        common_with: Option<String>,
        #[arg(long, default_value_t = 6)]
        search_degree: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CurveCommand {
    Analyze {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
}

fn field(c: &Common) -> Result<Field> {
    match &c.modulus {
        None => Field::of_order(c.q),
        Some(m) => {
            let base = Field::of_order(c.q)?;
            let fp = Field::prime(base.p())?;
            let poly = parse_poly(m, "u", &fp)?;
            let coeffs: Vec<u32> = poly.coeffs().iter().map(|e| e.index()).collect();
            Field::new(base.p(), base.degree(), Some(&coeffs))
        }
    }
}

fn p1(c: &Common) -> Result<Squares<RationalModel>> {
    Squares::new(RationalModel::new(field(c)?), c.scan_bound)
}

fn curve(c: &Common) -> Result<Squares<HyperellipticModel>> {
    let f =
        c.f.as_deref()
            .ok_or_else(|| Error::InvalidInput("--model curve needs --f".into()))?;
    let curve = Curve::parse(field(c)?, f)?;
    Squares::new(HyperellipticModel::new(curve)?, c.scan_bound)
}

fn places<M: CurveModel>(m: &M, v: &[String]) -> Result<Vec<M::Place>> {
    v.iter().map(|s| m.parse_place(s)).collect()
}

fn classes<M: CurveModel>(m: &M, v: &[String]) -> Result<Vec<M::Class>> {
    v.iter().map(|s| m.parse_class(s)).collect()
}

fn render_places<M: CurveModel>(m: &M, v: &[M::Place]) -> Vec<String> {
    v.iter().map(|p| m.render_place(p)).collect()
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+1",
        Sign::Minus => "-1",
    }
}

/// Output of a subcommand: a JSON report, or raw text (graph exports).
enum Output {
    Report(Value),
    Text(String),
}

fn with_model<R>(
    c: &Common,
    p1_fn: impl FnOnce(&Squares<RationalModel>) -> Result<R>,
    curve_fn: impl FnOnce(&Squares<HyperellipticModel>) -> Result<R>,
) -> Result<R> {
    match c.model {
        ModelKind::P1 => p1_fn(&p1(c)?),
        ModelKind::Curve => curve_fn(&curve(c)?),
    }
}

macro_rules! dispatch {
    ($common:expr, |$sq:ident| $body:expr) => {
        with_model($common, |$sq| $body, |$sq| $body)
    };
}

fn header<M: CurveModel>(sq: &Squares<M>) -> Value {
    serde_json::to_value(sq.model().info()).expect("serializable")
}

fn merge(mut a: Value, b: Value) -> Value {
    if let (Value::Object(a), Value::Object(b)) = (&mut a, b) {
        a.extend(b);
    }
    a
}

fn sing_report<M: CurveModel>(sq: &Squares<M>, removed: &[String]) -> Result<Value> {
    let m = sq.model();
    let removed = places(m, removed)?;
    let s = sq.sing_subgroup(&removed)?;
    Ok(merge(
        header(sq),
        json!({
            "removed": render_places(m, &removed),
            "dimension": s.dim(),
            "order": s.order(),
            "basis": s.render(m),
        }),
    ))
}

fn delta_report<M: CurveModel>(sq: &Squares<M>, removed: &[String]) -> Result<Value> {
    let m = sq.model();
    let removed = places(m, removed)?;
    let d = sq.delta_subgroup(&removed)?;
    Ok(merge(
        header(sq),
        json!({
            "removed": render_places(m, &removed),
            "dimension": d.dim(),
            "basis": d.render(m),
            "sing_x_dimension": sq.sing_x().dim(),
        }),
    ))
}

fn even_check<M: CurveModel>(sq: &Squares<M>, place: &Option<String>, max_degree: Option<usize>) -> Result<Value> {
    let m = sq.model();
    let ps = match (place, max_degree) {
        (Some(p), _) => vec![m.parse_place(p)?],
        (None, Some(d)) => m.places_up_to(d),
        (None, None) => return Err(Error::InvalidInput("give --place or --max-degree".into())),
    };
    let reports = ps
        .iter()
        .map(|p| sq.even_criteria_report(p))
        .collect::<Result<Vec<_>>>()?;
    let agree = reports.iter().all(|r| r.agree());
    Ok(merge(header(sq), json!({ "all_agree": agree, "reports": reports })))
}

fn compat<M: CurveModel>(sq: &Squares<M>, cls: &[String], pts: &[String], search: usize) -> Result<Value> {
    let m = sq.model();
    if !pts.is_empty() {
        let points = places(m, pts)?;
        let found = sq.compatible_classes_for_points(&points)?;
        let pm = sq.pairing_matrix(&points, &found)?;
        return Ok(merge(
            header(sq),
            json!({
                "points": render_places(m, &points),
                "classes": found.iter().map(|c| m.render_class(c)).collect::<Vec<_>>(),
                "pairing": pm.entries.iter().map(|r| r.iter().map(|s| sign_str(*s)).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "is_compatible": pm.is_compatible,
            }),
        ));
    }
    let basis = if cls.is_empty() {
        sq.sing_x().basis.clone()
    } else {
        classes(m, cls)?
    };
    let points = sq.compatible_points_for_classes(&basis, search, 0)?;
    let pm = sq.pairing_matrix(&points, &basis)?;
    Ok(merge(
        header(sq),
        json!({
            "classes": basis.iter().map(|c| m.render_class(c)).collect::<Vec<_>>(),
            "points": render_places(m, &points),
            "pic2_coordinates": points.iter().map(|p| m.pic2_coords(p)).collect::<Result<Vec<_>>>()?,
            "is_compatible": pm.is_compatible,
        }),
    ))
}

fn density<M: CurveModel>(
    sq: &Squares<M>,
    d: usize,
    cls: &[String],
    signs: &[String],
    sample: Option<usize>,
    seed: u64,
) -> Result<Value> {
    let m = sq.model();
    let mode = match sample {
        Some(n) => DensityMode::Sample { n, seed },
        None => DensityMode::Exhaustive,
    };
    if cls.is_empty() {
        let r = sq.even_density_experiment(d, mode)?;
        return Ok(merge(
            header(sq),
            json!({ "experiment": "even", "degree": d, "k": sq.sing_x().dim(), "result": r }),
        ));
    }
    let cs = classes(m, cls)?;
    let ss: Vec<Sign> = if signs.is_empty() {
        vec![Sign::Plus; cs.len()]
    } else {
        signs
            .iter()
            .map(|s| match s.as_str() {
                "+" | "+1" | "1" => Ok(Sign::Plus),
                "-" | "-1" => Ok(Sign::Minus),
                _ => Err(Error::InvalidInput(format!("bad sign '{s}'"))),
            })
            .collect::<Result<_>>()?
    };
    let r = sq.hecke_density_experiment(&cs, &ss, d, mode)?;
    Ok(merge(
        header(sq),
        json!({
            "experiment": "symbols",
            "degree": d,
            "classes": cls,
            "signs": ss.iter().map(|s| sign_str(*s)).collect::<Vec<_>>(),
            "result": r,
        }),
    ))
}

fn gst<M: CurveModel>(sq: &Squares<M>, class: &str, bound: usize) -> Result<Value> {
    let m = sq.model();
    let l = m.parse_class(class)?;
    let v = sq.gst_check(&l, bound)?;
    Ok(merge(
        header(sq),
        json!({
            "class": m.render_class(&l),
            "in_sing_x": sq.sing_x().contains(m, &l),
            "degree_bound": bound,
            "verdict": v,
        }),
    ))
}

fn legendre_cmd<M: CurveModel>(sq: &Squares<M>, class: &str, place: &str) -> Result<Value> {
    let m = sq.model();
    let c = m.parse_class(class)?;
    let p = m.parse_place(place)?;
    let s = m.legendre(&c, &p)?;
    Ok(merge(
        header(sq),
        json!({ "class": m.render_class(&c), "place": m.render_place(&p), "symbol": sign_str(s) }),
    ))
}

fn graph_build<M: CurveModel>(sq: &Squares<M>, d: usize, export: Option<GraphFormat>) -> Result<Output> {
    let g = EvenGraph::build(sq, d)?;
    let f = match export.unwrap_or(GraphFormat::Json) {
        GraphFormat::Json => ExportFormat::Json,
        GraphFormat::Dot => ExportFormat::Dot,
        GraphFormat::Csv => ExportFormat::Csv,
    };
    Ok(Output::Text(g.export(sq.model(), f)))
}

fn graph_diameter<M: CurveModel>(sq: &Squares<M>, d: usize, search: usize) -> Result<Value> {
    let g = EvenGraph::build(sq, d)?;
    let r = diameter_report(sq, &g, search)?;
    Ok(merge(
        header(sq),
        json!({ "max_degree": d, "search_degree": search, "vertices": g.len(), "edges": g.edge_count(), "report": r }),
    ))
}

fn graph_witness<M: CurveModel>(sq: &Squares<M>, place: &str, with: &Option<String>, search: usize) -> Result<Value> {
    let m = sq.model();
    let p = m.parse_place(place)?;
    let w = non_neighbor_witness(sq, &p, search)?;
    let mut out = json!({
        "place": m.render_place(&p),
        "lambda": m.render_class(&sq.lambda_for(&p)?),
        "search_degree": search,
        "non_neighbor": w.map(|q| m.render_place(&q)),
    });
    if let Some(qs) = with {
        let q = m.parse_place(qs)?;
        let cn = common_neighbors(sq, &p, &q, search)?;
        out["common_with"] = json!(m.render_place(&q));
        out["common_neighbors"] = json!(render_places(m, &cn));
    }
    Ok(merge(header(sq), out))
}

fn curve_analyze(c: &Common, max_degree: usize) -> Result<Value> {
    let sq = curve(c)?;
    let m = sq.model();
    let cv = m.curve();
    let mut census = Vec::new();
    for d in 1..=max_degree {
        let ps = cv.places_of_degree(d);
        let count = |f: fn(&CurvePlace) -> bool| ps.iter().filter(|p| f(p)).count();
        census.push(json!({
            "degree": d,
            "total": ps.len(),
            "infinite": count(|p| matches!(p, CurvePlace::Infinite)),
            "ramified": count(|p| matches!(p, CurvePlace::Ramified(_))),
            "split": count(|p| matches!(p, CurvePlace::Split { .. })),
            "inert": count(|p| matches!(p, CurvePlace::Inert(_))),
        }));
    }
    let jac = m.jacobian();
    let even = sq.even_places(max_degree)?;
    Ok(merge(
        header(&sq),
        json!({
            "genus": cv.genus(),
            "place_census": census,
            "jacobian_order": jac.order(),
            "two_rank": jac.two_rank(),
            "zeta": m.zeta_data(),
            "sing_x_dimension": sq.sing_x().dim(),
            "sing_x_basis": sq.sing_x().render(m),
            "even_places": render_places(m, &even),
        }),
    ))
}

fn p1_only(c: &Common) -> Result<Field> {
    if c.model != ModelKind::P1 {
        return Err(Error::InvalidInput(
            "this symbol is implemented for the p1 model".into(),
        ));
    }
    field(c)
}

fn execute(cmd: &Command) -> Result<(Output, Common)> {
    let r = match cmd {
        Command::Symbols { which } => match which {
            SymbolCommand::Legendre { common, class, place } => (
                Output::Report(dispatch!(common, |sq| legendre_cmd(sq, class, place))?),
                common,
            ),
            SymbolCommand::Hilbert { common, a, b, place } => {
                let k = p1_only(common)?;
                let (ra, rb) = (parse_rational(a, "t", &k)?, parse_rational(b, "t", &k)?);
                let p = PlaceP1::parse(place, &k)?;
                let s = hilbert(&ra, &rb, &p, &k)?;
                (
                    Output::Report(json!({ "a": a, "b": b, "place": p.render(&k), "symbol": sign_str(s) })),
                    common,
                )
            }
            SymbolCommand::Reciprocity { common, f_poly, g_poly } => {
                let k = p1_only(common)?;
                let (f, g) = (parse_poly(f_poly, "t", &k)?, parse_poly(g_poly, "t", &k)?);
                let r = reciprocity_check(&f, &g, &k)?;
                (
                    Output::Report(json!({
                        "f": f.render("t", &k),
                        "g": g.render("t", &k),
                        "lhs": sign_str(r.lhs),
                        "rhs": sign_str(r.rhs),
                        "ok": r.ok,
                    })),
                    common,
                )
            }
        },
        Command::Graph { which } => match which {
            GraphCommand::Build {
                common,
                max_degree,
                export,
            } => (dispatch!(common, |sq| graph_build(sq, *max_degree, *export))?, common),
            GraphCommand::Diameter {
                common,
                max_degree,
                search_degree,
            } => (
                Output::Report(dispatch!(common, |sq| graph_diameter(sq, *max_degree, *search_degree))?),
                common,
            ),
            GraphCommand::Witness {
                common,
                place,
                common_with,
                search_degree,
            } => (
                Output::Report(dispatch!(common, |sq| graph_witness(
                    sq,
                    place,
                    common_with,
                    *search_degree
                ))?),
                common,
            ),
        },
        Command::Sing { common, removed } => (
            Output::Report(dispatch!(common, |sq| sing_report(sq, removed))?),
            common,
        ),
        Command::Delta { common, removed } => (
            Output::Report(dispatch!(common, |sq| delta_report(sq, removed))?),
            common,
        ),
        Command::EvenCheck {
            common,
            place,
            max_degree,
        } => (
            Output::Report(dispatch!(common, |sq| even_check(sq, place, *max_degree))?),
            common,
        ),
        Command::Compat {
            common,
            class,
            point,
            search_degree,
        } => (
            Output::Report(dispatch!(common, |sq| compat(sq, class, point, *search_degree))?),
            common,
        ),
        Command::Density {
            common,
            degree,
            class,
            sign,
            sample,
        } => (
            Output::Report(dispatch!(common, |sq| density(
                sq,
                *degree,
                class,
                sign,
                *sample,
                common.seed
            ))?),
            common,
        ),
        Command::Gst {
            common,
            class,
            degree_bound,
        } => (
            Output::Report(dispatch!(common, |sq| gst(sq, class, *degree_bound))?),
            common,
        ),
        Command::Curve { which } => match which {
            CurveCommand::Analyze { common, max_degree } => {
                let mut c = common.clone();
                c.model = ModelKind::Curve;
                (Output::Report(curve_analyze(&c, *max_degree)?), common)
            }
        },
        Command::VerifyPaper { common } => {
            let results = verify::run_all();
            (Output::Report(json!({ "criteria": results })), common)
        }
    };
    Ok((r.0, r.1.clone()))
}

fn table(v: &Value) -> String {
    fn line(out: &mut String, key: &str, v: &Value, indent: usize) {
        let pad = " ".repeat(indent);
        match v {
            Value::Object(map) => {
                if !key.is_empty() {
                    out.push_str(&format!("{pad}{key}:\n"));
                }
                let inner = if key.is_empty() { indent } else { indent + 2 };
                for (k, x) in map {
                    line(out, k, x, inner);
                }
            }
            Value::Array(items) if items.iter().any(|x| x.is_object()) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for (i, x) in items.iter().enumerate() {
                    line(out, &format!("[{i}]"), x, indent + 2);
                }
            }
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(scalar).collect();
                out.push_str(&format!("{pad}{key}: {}\n", parts.join(", ")));
            }
            _ => out.push_str(&format!("{pad}{key}: {}\n", scalar(v))),
        }
    }
    fn scalar(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    line(&mut out, "", v, 0);
    out
}

fn verify_table(v: &Value) -> String {
    let mut s = String::new();
    for c in v["criteria"].as_array().into_iter().flatten() {
        s += &format!(
            "{:<4} {:<5} {:>8.2}s  {}\n      {}\n",
            c["id"].as_str().unwrap_or(""),
            if c["passed"].as_bool() == Some(true) {
                "PASS"
            } else {
                "FAIL"
            },
            c["seconds"].as_f64().unwrap_or(0.0),
            c["title"].as_str().unwrap_or(""),
            c["detail"].as_str().unwrap_or("")
        );
        for n in c["notes"].as_array().into_iter().flatten() {
            s += &format!("      note: {}\n", n.as_str().unwrap_or(""));
        }
    }
    s
}

fn emit(c: &Common, text: &str) -> std::io::Result<()> {
    match &c.output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let verify = matches!(cli.command, Command::VerifyPaper { .. });
    match execute(&cli.command) {
        Ok((out, common)) => {
            let (text, failed) = match out {
                Output::Text(t) => (t, false),
                Output::Report(v) => {
                    let failed = verify
                        && v["criteria"]
                            .as_array()
                            .is_some_and(|a| a.iter().any(|c| c["passed"] != json!(true)));
                    let text = match (common.format, verify) {
                        (Format::Json, _) => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                        (Format::Table, true) => verify_table(&v),
                        (Format::Table, false) => table(&v),
                    };
                    (text, failed)
                }
            };
            if let Err(e) = emit(&common, &text) {
                eprintln!("error: {e}");
                return 2;
            }
            i32::from(failed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_bound_error() {
                3
            } else {
                2
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let dir = std::env::temp_dir().join(format!("evenpoint-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(format!(
            "{}.out",
            args.join("_").replace(['/', ' ', '"', '^', '*', '+', '@'], "")
        ));
        let mut argv: Vec<String> = std::iter::once("evenpoint".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        argv.push("--output".into());
        argv.push(path.display().to_string());
        let code = run(argv);
        let out = std::fs::read_to_string(&path).unwrap_or_default();
        (code, out)
    }

    #[test]
    fn legendre_symbol_command() {
        let (code, out) = run_capture(&[
            "symbols",
            "legendre",
            "--q",
            "5",
            "--class",
            "t^2+4*t+1",
            "--place",
            "t^2+2t+3",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["symbol"], "+1");
    }

    #[test]
    fn graph_build_command() {
        let (code, out) = run_capture(&[
            "graph",
            "build",
            "--q",
            "5",
            "--model",
            "p1",
            "--max-degree",
            "2",
            "--format",
            "json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["evenpoint", "no-such-command"]), 2);
        assert_eq!(run(["evenpoint", "sing", "--q", "6"]), 2);
        assert_eq!(run(["evenpoint", "sing", "--model", "curve"]), 2);
        // the Jacobian cap is a bound error
        assert_eq!(
            run(["evenpoint", "sing", "--model", "curve", "--q", "11", "--f", "x^3+x+1"]),
            3
        );
        assert_eq!(
            run([
                "evenpoint",
                "sing",
                "--q",
                "5",
                "--removed",
                "t^4+2",
                "--scan-bound",
                "3"
            ]),
            3
        );
    }

    #[test]
    fn curve_analyze_command() {
        let (code, out) = run_capture(&["curve", "analyze", "--q", "5", "--f", "x^3+4*x"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["genus"], 1);
        assert_eq!(v["jacobian_order"], 8);
        assert_eq!(v["sing_x_dimension"], 3);
    }

    #[test]
    fn table_format() {
        let (code, out) = run_capture(&["sing", "--q", "5", "--removed", "t", "--format", "table"]);
        assert_eq!(code, 0);
        assert!(out.contains("dimension: 1"), "{out}");
    }
}
