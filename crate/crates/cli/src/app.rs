//! Command definitions and dispatch.

use std::io::Read;

use clap::{Args, Parser, Subcommand};
use lindet::algebra::{LinearMatrixRep, Rational, TernaryForm};
use lindet::census::{census_run, ell_census, ell_census_agreement, verify_paper_examples, CensusConfig, CensusReport};
use lindet::detrep::{
    decide_existence, equivalent, find_representation, hom_space, rep_conic, rep_moore, rep_to_point, rep_weierstrass,
    verify_rep, Assertions, Route, SearchBounds, Verdict, Witness,
};
use lindet::elliptic::{jacobian, torsion_subgroup};
use lindet::invariants::{aronhold_ab, heights};
use lindet::plane_cubic::{is_generic, is_smooth, rational_flexes, to_weierstrass};
use serde_json::{json, Map, Value};

use crate::format::*;

const ORDER_HELP: &str = "Forms are comma-separated rationals (\"n\" or \"n/d\") in the monomial order \
X0^3, X0^2X1, X0^2X2, X0X1^2, X0X1X2, X0X2^2, X1^3, X1^2X2, X1X2^2, X2^3 for cubics, \
X0^2, X0X1, X0X2, X1^2, X1X2, X2^2 for conics and X0, X1, X2 for lines. \
Representations are JSON objects {\"size\": d, \"entries\": [[[c0,c1,c2], ...], ...]} where \
[c0,c1,c2] is the linear form c0 X0 + c1 X1 + c2 X2; pass \"-\" to read one from stdin.";

#[derive(Parser, Debug)]
#[command(name = "lindet", version, about = "Linear determinantal representations of plane cubics", long_about = ORDER_HELP)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FormArg {
    /// Cubic form, 10 coefficients.
    #[arg(long, allow_hyphen_values = true)]
    form: String,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Coordinate bound for points on the curve.
    #[arg(long, default_value_t = 50)]
    curve_bound: u64,
    /// Bound for points on the Jacobian.
    #[arg(long, default_value_t = 50)]
    jacobian_bound: u64,
}

impl BoundsArgs {
    fn bounds(&self) -> SearchBounds {
        SearchBounds { curve: self.curve_bound, jacobian: self.jacobian_bound }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Aronhold invariants, discriminant and heights.
    Invariants(FormArg),
    /// Jacobian elliptic curve, its minimal model and torsion.
    Jacobian(FormArg),
    /// Rational flexes.
    Flexes(FormArg),
    /// Whether the cubic is smooth with no rational flex.
    Generic(FormArg),
    /// Change of coordinates to a Weierstrass model through a rational flex.
    ToWeierstrass {
        #[command(flatten)]
        form: FormArg,
        /// Flex to use, `x0,x1,x2`; defaults to the first rational flex.
        #[arg(long, allow_hyphen_values = true)]
        flex: Option<String>,
    },
    /// Representation of y^2 = x^3 + ax + b attached to a point.
    RepWeierstrass {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Affine point `x,y`.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Moore matrix of a point with nonzero coordinates on a Hesse cubic.
    RepMoore {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// 2x2 representation of a conic through a rational point.
    RepConic {
        /// Conic, 6 coefficients.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Checks that det(rep) is a nonzero multiple of the form.
    Verify {
        /// Line, conic or cubic.
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        rep: String,
    },
    /// Whether two representations are equivalent.
    Equivalent {
        #[arg(long)]
        rep1: String,
        #[arg(long)]
        rep2: String,
    },
    /// Point on y^2 = x^3 + ax + b whose representation is equivalent to rep.
    RepToPoint {
        #[arg(long)]
        rep: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Searches for a representation of a cubic.
    FindRep {
        #[command(flatten)]
        form: FormArg,
        #[command(flatten)]
        bounds: BoundsArgs,
    },
    /// Decides whether a representation exists.
    Decide {
        #[command(flatten)]
        form: FormArg,
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Asserted Mordell-Weil rank of the Jacobian.
        #[arg(long)]
        rank: Option<u32>,
        /// Asserted point `x,y` on the minimal model of the Jacobian.
        #[arg(long, allow_hyphen_values = true)]
        witness: Option<String>,
    },
    /// Census of integral cubics with coefficients below the height bound.
    Census {
        #[arg(long)]
        height: u64,
        /// Number of random forms; enumerates the whole box when absent.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads, 0 for the default.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
        #[arg(long, default_value_t = 3)]
        curve_bound: u64,
        #[arg(long, default_value_t = 10)]
        jacobian_bound: u64,
        /// CSV output.
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Counts minimal Weierstrass curves of height below the bound.
    EllCensus {
        #[arg(long)]
        height: u64,
        /// Also cross-check the two enumeration strategies up to the bound.
        #[arg(long)]
        agreement: bool,
    },
    /// Checks the diagonal cubic p X0^3 + p^2 X1^3 - X2^3.
    VerifyPaperExamples {
        #[arg(long)]
        p: u64,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<lindet::Error> for Failure {
    fn from(e: lindet::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// A document with a JSON form and a line-oriented text form.
struct Doc {
    fields: Vec<(&'static str, Value, String)>,
    /// Replaces the key-value lines in text mode.
    raw: Option<String>,
    code: i32,
}

impl Doc {
    fn new() -> Self {
        Doc { fields: Vec::new(), raw: None, code: 0 }
    }

    fn put(&mut self, key: &'static str, value: Value, text: impl Into<String>) -> &mut Self {
        self.fields.push((key, value, text.into()));
        self
    }

    fn render(&self, command: &str, as_json: bool) -> String {
        if as_json {
            let mut m = Map::new();
            m.insert("schema_version".into(), json!(SCHEMA_VERSION));
            m.insert("command".into(), json!(command));
            for (k, v, _) in &self.fields {
                m.insert((*k).into(), v.clone());
            }
            let mut s = serde_json::to_string_pretty(&Value::Object(m)).unwrap();
            s.push('\n');
            s
        } else if let Some(raw) = &self.raw {
            raw.clone()
        } else {
            let mut s = String::new();
            for (k, _, t) in &self.fields {
                if t.contains('\n') {
                    s.push_str(&format!("{k}:\n{t}"));
                    if !t.ends_with('\n') {
                        s.push('\n');
                    }
                } else {
                    s.push_str(&format!("{k}: {t}\n"));
                }
            }
            s
        }
    }
}

fn rational(s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(Failure::Usage)
}

fn read_rep(arg: &str) -> Result<LinearMatrixRep, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
        Ok(parse_rep(&s)?)
    } else {
        Ok(parse_rep(arg)?)
    }
}

fn cubic(arg: &FormArg) -> Result<TernaryForm, Failure> {
    Ok(parse_form_of_degree(&arg.form, 3)?)
}

fn put_rep(doc: &mut Doc, m: &LinearMatrixRep) {
    doc.put("representation", rep_to_json(m), m.to_string());
}

fn yes_no(b: bool) -> (Value, String) {
    (Value::Bool(b), b.to_string())
}

fn route_doc(doc: &mut Doc, route: &Route) {
    let (value, text) = match route {
        Route::Hesse { lambda, point } => (
            json!({ "kind": "hesse", "lambda": rational_json(lambda), "point": proj_point_json(point) }),
            format!("hesse, lambda {lambda}, point {point}"),
        ),
        Route::Flex { flex, a, b, point } => (
            json!({ "kind": "flex", "flex": proj_point_json(flex), "a": rational_json(a), "b": rational_json(b), "point": ec_point_json(point) }),
            format!("flex {flex} to y^2 = x^3 + ({a})x + ({b}), point {point}"),
        ),
        Route::Scheme { points, tangent } => {
            let pts: Vec<String> = points.iter().map(|p| p.to_string()).collect();
            (
                json!({
                    "kind": "scheme",
                    "points": points.iter().map(proj_point_json).collect::<Vec<_>>(),
                    "tangent": tangent.as_ref().map(proj_point_json),
                }),
                match tangent {
                    Some(t) => format!("scheme through {}, tangent at {t}", pts.join(" ")),
                    None => format!("scheme through {}", pts.join(" ")),
                },
            )
        }
        Route::Jacobian { point } => (
            json!({ "kind": "jacobian", "point": ec_point_json(point) }),
            format!("jacobian fibre over {point}"),
        ),
    };
    doc.put("route", value, text);
}

fn census_doc(r: &CensusReport) -> Doc {
    let mut doc = Doc::new();
    let n = |x: u64| (json!(x), x.to_string());
    for (k, (v, t)) in [
        ("height_bound", n(r.height_bound)),
        ("total", n(r.total)),
        ("nondegenerate", n(r.nondegenerate)),
        ("generic", n(r.generic)),
        ("with_curve_point", n(r.with_curve_point)),
        ("decided_yes", n(r.decided_yes)),
        ("decided_no", n(r.decided_no)),
        ("unknown", n(r.unknown)),
        ("representations", n(r.representations)),
        ("spot_checked", n(r.spot_checked)),
        ("spot_failures", n(r.spot_failures)),
    ] {
        doc.put(k, v, t);
    }
    doc.put("seed", r.seed.map_or(Value::Null, |s| json!(s)), r.seed.map_or("none".into(), |s| s.to_string()));
    let hist: Vec<Value> = r.hj_histogram.iter().map(|(d, c)| json!({ "digits": d, "count": c })).collect();
    let text: Vec<String> = r.hj_histogram.iter().map(|(d, c)| format!("  {d} digits: {c}")).collect();
    doc.put("hj_histogram", Value::Array(hist), text.join("\n"));
    doc
}

pub const CSV_HEADER: &str = "schema_version,height_bound,seed,total,nondegenerate,generic,with_curve_point,decided_yes,decided_no,unknown,representations,spot_checked,spot_failures,hj_histogram";

/// One header line and one data line; the histogram is `digits:count` pairs
/// separated by `;`.
pub fn census_csv(r: &CensusReport) -> String {
    let hist: Vec<String> = r.hj_histogram.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    format!(
        "{CSV_HEADER}\n{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
        SCHEMA_VERSION,
        r.height_bound,
        r.seed.map_or(String::new(), |s| s.to_string()),
        r.total,
        r.nondegenerate,
        r.generic,
        r.with_curve_point,
        r.decided_yes,
        r.decided_no,
        r.unknown,
        r.representations,
        r.spot_checked,
        r.spot_failures,
        hist.join(";"),
    )
}

fn run(cli: &Cli) -> Result<(&'static str, Doc), Failure> {
    let mut doc = Doc::new();
    let name = match &cli.command {
        Command::Invariants(f) => {
            let v = cubic(f)?;
            let r = aronhold_ab(&v)?;
            for (k, q) in [("A", &r.a), ("B", &r.b), ("delta", &r.delta), ("c4", &r.c4), ("c6", &r.c6), ("S", &r.s), ("T", &r.t)] {
                doc.put(k, rational_json(q), q.to_string());
            }
            let h = heights(&v)?;
            doc.put("H", rational_json(&h.h), h.h.to_string());
            doc.put("H_J", rational_json(&h.h_j), h.h_j.to_string());
            "invariants"
        }
        Command::Jacobian(f) => {
            let v = cubic(f)?;
            let j = jacobian(&v)?;
            doc.put("A", rational_json(j.curve.a()), j.curve.a().to_string());
            doc.put("B", rational_json(j.curve.b()), j.curve.b().to_string());
            doc.put("minimal_a", rational_json(j.minimal.a()), j.minimal.a().to_string());
            doc.put("minimal_b", rational_json(j.minimal.b()), j.minimal.b().to_string());
            doc.put("u", rational_json(&j.u), j.u.to_string());
            match torsion_subgroup(&j.minimal) {
                Ok(t) => {
                    let pts: Vec<Value> = t.points.iter().map(ec_point_json).collect();
                    let txt: Vec<String> = t.points.iter().map(|p| p.to_string()).collect();
                    doc.put("torsion", json!(t.structure.to_string()), t.structure.to_string());
                    doc.put("torsion_points", Value::Array(pts), txt.join(" "));
                }
                Err(e) => {
                    doc.put("torsion", Value::Null, e.to_string());
                }
            }
            "jacobian"
        }
        Command::Flexes(f) => {
            let r = rational_flexes(&cubic(f)?)?;
            let pts: Vec<Value> = r.rational_flexes.iter().map(proj_point_json).collect();
            let txt: Vec<String> = r.rational_flexes.iter().map(|p| p.to_string()).collect();
            doc.put("count", json!(r.rational_flexes.len()), r.rational_flexes.len().to_string());
            doc.put("flexes", Value::Array(pts), if txt.is_empty() { "none".into() } else { txt.join(" ") });
            doc.put("total_expected", json!(r.total_expected), r.total_expected.to_string());
            "flexes"
        }
        Command::Generic(f) => {
            let v = cubic(f)?;
            let (sv, st) = yes_no(is_smooth(&v)?);
            doc.put("smooth", sv, st);
            let (gv, gt) = yes_no(is_generic(&v));
            doc.put("generic", gv, gt);
            "generic"
        }
        Command::ToWeierstrass { form, flex } => {
            let v = cubic(form)?;
            let flex = match flex {
                Some(t) => parse_proj_point(t)?,
                None => rational_flexes(&v)?
                    .rational_flexes
                    .into_iter()
                    .next()
                    .ok_or_else(|| Failure::Domain("the cubic has no rational flex".into()))?,
            };
            let wc = to_weierstrass(&v, &flex)?;
            doc.put("flex", proj_point_json(&flex), flex.to_string());
            doc.put("a", rational_json(&wc.a), wc.a.to_string());
            doc.put("b", rational_json(&wc.b), wc.b.to_string());
            let g: Vec<Value> = wc.g.rows().iter().map(|r| Value::Array(r.iter().map(rational_json).collect())).collect();
            doc.put("g", Value::Array(g), wc.g.to_string());
            doc.put("scale", rational_json(&wc.scale), wc.scale.to_string());
            "to-weierstrass"
        }
        Command::RepWeierstrass { a, b, point } => {
            let m = rep_weierstrass(&rational(a)?, &rational(b)?, &parse_ec_point(point)?)?;
            put_rep(&mut doc, &m);
            "rep-weierstrass"
        }
        Command::RepMoore { lambda, point } => {
            let m = rep_moore(&rational(lambda)?, &parse_proj_point(point)?)?;
            put_rep(&mut doc, &m);
            "rep-moore"
        }
        Command::RepConic { form, point } => {
            let m = rep_conic(&parse_form_of_degree(form, 2)?, &parse_proj_point(point)?)?;
            put_rep(&mut doc, &m);
            "rep-conic"
        }
        Command::Verify { form, rep } => {
            let f = parse_form(form)?;
            let m = read_rep(rep)?;
            let c = verify_rep(&m, &f)?;
            doc.put("verified", json!(true), "true");
            doc.put("constant", rational_json(&c), c.to_string());
            "verify"
        }
        Command::Equivalent { rep1, rep2 } => {
            let (m1, m2) = (read_rep(rep1)?, read_rep(rep2)?);
            let (ev, et) = yes_no(equivalent(&m1, &m2)?);
            doc.put("equivalent", ev, et);
            let d = hom_space(&m1, &m2)?.dimension();
            doc.put("hom_dimension", json!(d), d.to_string());
            "equivalent"
        }
        Command::RepToPoint { rep, a, b, bound } => {
            let p = rep_to_point(&read_rep(rep)?, &rational(a)?, &rational(b)?, *bound)?;
            doc.put("point", ec_point_json(&p), p.to_string());
            "rep-to-point"
        }
        Command::FindRep { form, bounds } => {
            let v = cubic(form)?;
            let Some(r) = find_representation(&v, &bounds.bounds())? else {
                return Err(Failure::Domain("no representation found within the search bounds".into()));
            };
            route_doc(&mut doc, &r.route);
            put_rep(&mut doc, &r.matrix);
            "find-rep"
        }
        Command::Decide { form, bounds, rank, witness } => {
            let v = cubic(form)?;
            let assertions = Assertions {
                rank: *rank,
                jacobian_witness: witness.as_deref().map(parse_ec_point).transpose()?,
            };
            let d = decide_existence(&v, &bounds.bounds(), &assertions)?;
            let verdict = match d.verdict {
                Verdict::Yes => "yes",
                Verdict::No => "no",
                Verdict::Unknown => "unknown",
            };
            doc.put("verdict", json!(verdict), verdict);
            doc.put("rule", json!(d.reason.tag()), d.reason.tag());
            let (wv, wt) = match &d.witness {
                None => (Value::Null, "none".to_string()),
                Some(Witness::CurvePoints(ps)) => (
                    json!({ "curve_points": ps.iter().map(proj_point_json).collect::<Vec<_>>() }),
                    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                ),
                Some(Witness::CurveAndJacobian { curve, jacobian }) => (
                    json!({ "curve_point": proj_point_json(curve), "jacobian_point": ec_point_json(jacobian) }),
                    format!("{curve} and {jacobian}"),
                ),
                Some(Witness::JacobianPoint(p)) => (json!({ "jacobian_point": ec_point_json(p) }), p.to_string()),
                Some(Witness::Hypothesis { rank }) => (json!({ "rank": rank }), format!("rank {rank}")),
            };
            doc.put("witness", wv, wt);
            "decide"
        }
        Command::Census { height, sample, seed, threads, budget, curve_bound, jacobian_bound, csv } => {
            let base = match sample {
                Some(n) => CensusConfig::sample(*height, *n, *seed),
                None => CensusConfig::exhaustive(*height),
            };
            let cfg = CensusConfig {
                threads: *threads,
                budget: *budget,
                bounds: SearchBounds { curve: *curve_bound, jacobian: *jacobian_bound },
                ..base
            };
            let r = census_run(&cfg)?;
            doc = census_doc(&r);
            if *csv {
                doc.raw = Some(census_csv(&r));
            }
            "census"
        }
        Command::EllCensus { height, agreement } => {
            let r = ell_census(*height);
            doc.put("height", json!(height), height.to_string());
            doc.put("count", json!(r.count), r.count.to_string());
            if *agreement {
                let first = ell_census_agreement(*height)?;
                doc.put("agreement", json!(first.is_none()), first.map_or("true".into(), |x| format!("false (first at {x})")));
                if first.is_some() {
                    doc.code = 1;
                }
            }
            "ell-census"
        }
        Command::VerifyPaperExamples { p } => {
            let r = verify_paper_examples(*p)?;
            let checks: Vec<Value> =
                r.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect();
            let lines: Vec<String> = r
                .checks
                .iter()
                .map(|c| format!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail))
                .collect();
            doc.put("p", json!(p), p.to_string());
            doc.put("all_passed", json!(r.all_passed()), r.all_passed().to_string());
            doc.put("checks", Value::Array(checks), "");
            doc.raw = Some(lines.iter().map(|l| format!("{l}\n")).collect());
            if !r.all_passed() {
                doc.code = 1;
            }
            "verify-paper-examples"
        }
    };
    Ok((name, doc))
}

/// Runs one command line (including the program name) and returns its exit
/// code and output: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match run(&cli) {
        Ok((name, doc)) => Outcome { code: doc.code, stdout: doc.render(name, cli.json), stderr: String::new() },
        Err(Failure::Usage(m)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Domain(m)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {m}\n") },
    }
}
