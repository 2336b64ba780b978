//! Command-line front end: datum description, per-element invariants,
//! oracle verification, cordiality scans and QBG export.

use std::fmt::Write as _;
use std::io::Write;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use cordial_core::affine::elements_up_to_length;
use cordial_core::bg::{
    class_of, fundamental_representative, is_fundamental_by_length, kottwitz_point, rat_strings,
    virtual_dimension,
};
use cordial_core::generic::{
    cordiality_at, generic_class, generic_lambda, generic_newton_general, generic_newton_general_max,
    is_cordial, is_cordial_general, oracle_generic_class, twist_element, weyl_average,
};
use cordial_core::linalg::Quotient;
use cordial_core::{AffineElement, ClassCache, QuantumBruhatGraph, Rat, RootDatum};
use rayon::prelude::*;
use serde_json::{json, Value};

const CHAR_PROVISO: &str = "assumes char(F) does not divide the order of the adjoint fundamental group";

#[derive(Debug, Parser)]
#[command(name = "cordial", version, about = "Generic Newton points and cordial elements of affine Weyl groups")]
pub struct Cli {
    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, Weyl group order, Frobenius orbits and fundamental groups.
    Describe(Common),
    /// Invariants of a single element.
    Element {
        #[command(flatten)]
        common: Common,
        /// Element, e.g. `w: s1 s2 ; mu: 1,0,-1` or `t[1,0,-1] s1 s2`.
        #[arg(long)]
        expr: String,
        /// Quantities to report.
        #[arg(value_enum, required = true)]
        verbs: Vec<Verb>,
    },
    /// Closed forms against the Bruhat-interval oracle and property checks.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cap: Option<usize>,
        /// Perturbs one QBG weight before checking.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Cordiality of every element up to a length cap.
    ScanCordial {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Quantum Bruhat graph in DOT format.
    QbgDot(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Root datum JSON file, or inline JSON starting with `{`.
    #[arg(long)]
    pub config: String,
    #[arg(long, conflicts_with_all = ["csv", "dot"])]
    pub json: bool,
    #[arg(long, conflicts_with = "dot")]
    pub csv: bool,
    #[arg(long)]
    pub dot: bool,
    /// Enables the cross-check paths of the closed forms.
    #[arg(long)]
    pub test_mode: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Lp,
    Signtype,
    Gnp,
    Lambda,
    Defect,
    Cordial,
    Vdim,
    Fundamental,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl Common {
    fn format(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = if self.json {
            Format::Json
        } else if self.csv {
            Format::Csv
        } else if self.dot {
            Format::Dot
        } else {
            default
        };
        if f != default && !allowed.contains(&f) {
            bail!("output format {f:?} is not available for this command");
        }
        Ok(f)
    }

    fn datum(&self) -> Result<RootDatum> {
        let text = if self.config.trim_start().starts_with('{') {
            self.config.clone()
        } else {
            std::fs::read_to_string(&self.config).with_context(|| format!("reading {}", self.config))?
        };
        Ok(RootDatum::from_json(&text)?)
    }
}

/// Runs a parsed command, writing to `out`; returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.jobs {
        if n == 0 {
            bail!("--jobs must be positive");
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    let mut buf = Vec::new();
    let code = pool.install(|| dispatch(cli.command, &mut buf));
    out.write_all(&buf)?;
    code
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Describe(c) => {
            let f = c.format(Format::Text, &[Format::Json])?;
            let d = c.datum()?;
            let v = describe(&d);
            if f == Format::Json {
                writeln!(out, "{v}")?;
            } else {
                write!(out, "{}", describe_text(&v))?;
            }
        }
        Command::Element { common, expr, verbs } => {
            common.format(Format::Json, &[])?;
            let d = common.datum()?;
            let x = AffineElement::parse(&d, &expr)?;
            let q = QuantumBruhatGraph::build(&d)?;
            for verb in verbs {
                let v = element_verb(&d, &q, &x, verb, common.test_mode)?;
                writeln!(out, "{v}")?;
            }
        }
        Command::Verify { common, cap, inject_fault } => {
            common.format(Format::Text, &[Format::Json])?;
            let d = common.datum()?;
            let mut q = QuantumBruhatGraph::build(&d)?;
            if inject_fault {
                let wg = d.weyl();
                q.corrupt_weight(wg.identity(), wg.longest(), &vec![1; d.rank()]);
            }
            let cap = cap.unwrap_or(d.config().length_cap);
            let s = verify(&d, &q, cap, common.test_mode);
            if common.json {
                writeln!(out, "{}", s.to_json())?;
            } else {
                write!(out, "{}", s.to_text())?;
            }
            return Ok(s.exit_code());
        }
        Command::ScanCordial { common, cap } => {
            let f = common.format(Format::Csv, &[Format::Json])?;
            let d = common.datum()?;
            let q = QuantumBruhatGraph::build(&d)?;
            let cap = cap.unwrap_or(d.config().length_cap);
            let rows = scan_cordial(&d, &q, cap)?;
            if d.omega_twist().is_some() {
                eprintln!("warning: {CHAR_PROVISO}");
            }
            if f == Format::Json {
                let v: Vec<Value> = rows.iter().map(ScanRow::to_json).collect();
                writeln!(out, "{}", Value::Array(v))?;
            } else {
                writeln!(out, "w,mu,cordial,d_min,len,shrunken")?;
                for r in &rows {
                    writeln!(out, "{}", r.to_csv())?;
                }
            }
        }
        Command::QbgDot(c) => {
            c.format(Format::Dot, &[])?;
            let d = c.datum()?;
            let q = QuantumBruhatGraph::build(&d)?;
            write!(out, "{}", q.to_dot(&d))?;
        }
    }
    Ok(0)
}

fn group_name(q: &Quotient) -> String {
    let parts: Vec<String> = q
        .invariant_factors()
        .iter()
        .filter(|&&m| m != 1)
        .map(|&m| if m == 0 { "Z".to_string() } else { format!("Z/{m}") })
        .collect();
    if parts.is_empty() {
        "trivial".into()
    } else {
        parts.join(" x ")
    }
}

pub fn describe(d: &RootDatum) -> Value {
    let kinds: Vec<String> = d.components().iter().map(|c| c.to_string()).collect();
    let orbits: Vec<Vec<usize>> = d
        .sigma_orbits()
        .into_iter()
        .map(|o| o.into_iter().map(|i| i + 1).collect())
        .collect();
    let twist = d.omega_twist().map(|t| {
        json!({"sigma1": d.weyl().format(t.sigma1), "mu_sigma": t.mu_sigma})
    });
    json!({
        "type": kinds.join(" x "),
        "lattice": d.config().lattice,
        "rank": d.rank(),
        "dim": d.dim(),
        "weyl_order": d.weyl().order(),
        "positive_roots": d.num_pos(),
        "sigma_orbits": orbits,
        "pi1": group_name(d.omega_quotient()),
        "pi1_sigma": group_name(d.pi1_quotient()),
        "twist": twist,
    })
}

fn describe_text(v: &Value) -> String {
    let mut s = String::new();
    let orbits: Vec<String> = v["sigma_orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| {
            let items: Vec<String> = o.as_array().unwrap().iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    writeln!(s, "type: {} ({})", v["type"].as_str().unwrap(), v["lattice"].as_str().unwrap()).unwrap();
    writeln!(s, "rank: {}", v["rank"]).unwrap();
    writeln!(s, "lattice rank: {}", v["dim"]).unwrap();
    writeln!(s, "|W|: {}", v["weyl_order"]).unwrap();
    writeln!(s, "|Phi+|: {}", v["positive_roots"]).unwrap();
    writeln!(s, "sigma orbits: {}", orbits.join(" ")).unwrap();
    writeln!(s, "pi1: {}", v["pi1"].as_str().unwrap()).unwrap();
    writeln!(s, "pi1_sigma: {}", v["pi1_sigma"].as_str().unwrap()).unwrap();
    if !v["twist"].is_null() {
        writeln!(s, "omega twist: sigma1 = {}, mu_sigma = {}", v["twist"]["sigma1"].as_str().unwrap(), v["twist"]["mu_sigma"]).unwrap();
    }
    s
}

/// Lattice coordinates as `p/q` strings plus simple-coroot coordinates when
/// the coweight lies in the coroot span.
fn coweight_json(d: &RootDatum, v: &[Rat]) -> (Value, Value) {
    let coroot = d.coroot_coords(v).map(|c| json!(rat_strings(&c))).unwrap_or(Value::Null);
    (json!(rat_strings(v)), coroot)
}

fn int_json(d: &RootDatum, v: &[i64]) -> (Value, Value) {
    let r: Vec<Rat> = v.iter().map(|&a| Rat::from(a)).collect();
    coweight_json(d, &r)
}

fn subset_json(j: &[bool]) -> Value {
    json!(j.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1).collect::<Vec<_>>())
}

pub fn element_verb(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement, verb: Verb, check: bool) -> Result<Value> {
    let wg = d.weyl();
    let twisted = d.omega_twist().is_some();
    Ok(match verb {
        Verb::Lp => {
            let lp: Vec<String> = x.lp_set(d).into_iter().map(|v| wg.format(v)).collect();
            json!({"lp": lp, "canonical": wg.format(x.canonical_lp(d))})
        }
        Verb::Signtype => {
            let values: Vec<i64> = (0..d.num_pos()).map(|a| x.length_functional(d, a)).collect();
            json!({"signtype": x.sign_type(d).to_string(), "values": values, "shrunken": x.is_shrunken(d)})
        }
        Verb::Gnp if twisted => {
            let nu = generic_newton_general(d, q, x)?;
            if check && generic_newton_general_max(d, q, x)? != nu {
                bail!("general-group routes disagree for {}", x.format(d));
            }
            let (nu, nu_c) = coweight_json(d, &nu);
            json!({"nu": nu, "nu_coroot": nu_c, "twisted": true})
        }
        Verb::Gnp => {
            let r = generic_lambda(d, q, x, check)?;
            let (nu, nu_c) = coweight_json(d, &r.nu_x);
            let (lambda, lambda_c) = int_json(d, &r.lambda_x.rep);
            json!({
                "nu": nu,
                "nu_coroot": nu_c,
                "lambda": lambda,
                "lambda_coroot": lambda_c,
                "witness": wg.format(r.witness_v),
                "d_min": r.d_min,
                "used_J": subset_json(&r.used_j),
            })
        }
        Verb::Lambda => {
            let b = class_of(d, x)?;
            let (lambda, lambda_c) = int_json(d, &b.lambda.rep);
            let (nu, _) = coweight_json(d, &b.nu);
            json!({"lambda": lambda, "lambda_coroot": lambda_c, "nu": nu})
        }
        Verb::Defect => {
            let b = class_of(d, x)?;
            json!({"defect": b.defect, "J1": subset_json(&b.j1), "J2": subset_json(&b.j2)})
        }
        Verb::Cordial if twisted => {
            let g = is_cordial_general(d, q, x)?;
            let mut v = g.cordiality.to_json();
            v["x_tilde"] = json!(g.x_tilde.format(&d.quasi_split_form()));
            v["proviso"] = json!(CHAR_PROVISO);
            v
        }
        Verb::Cordial => is_cordial(d, q, x)?.to_json(),
        Verb::Vdim => {
            if twisted {
                bail!("virtual dimension is only available for quasi-split data");
            }
            let b = generic_class(d, q, x)?;
            json!({
                "vdim": virtual_dimension(d, x, &b).to_string(),
                "eta": wg.format(x.eta_sigma(d)),
                "class": b.to_json(),
            })
        }
        Verb::Fundamental => {
            let f = x.is_fundamental(d);
            let mut v = json!({"fundamental": f});
            if !f {
                let b = class_of(d, x)?;
                v["representative"] = json!(fundamental_representative(d, x, &b)?.format(d));
            }
            v
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub w: String,
    pub mu: Vec<i64>,
    pub cordial: bool,
    pub d_min: usize,
    pub len: usize,
    pub shrunken: bool,
}

impl ScanRow {
    fn to_json(&self) -> Value {
        json!({
            "w": self.w,
            "mu": self.mu,
            "cordial": self.cordial,
            "d_min": self.d_min,
            "len": self.len,
            "shrunken": self.shrunken,
        })
    }

    fn to_csv(&self) -> String {
        let mu: Vec<String> = self.mu.iter().map(|m| m.to_string()).collect();
        format!("{},\"{}\",{},{},{},{}", self.w, mu.join(","), self.cordial, self.d_min, self.len, self.shrunken)
    }
}

/// Cordiality rows in the canonical enumeration order.
pub fn scan_cordial(d: &RootDatum, q: &QuantumBruhatGraph, cap: usize) -> Result<Vec<ScanRow>> {
    let xs = elements_up_to_length(d, cap, d.config().coweight_box);
    let twisted = d.omega_twist().is_some();
    xs.par_iter()
        .map(|x| {
            let c = if twisted {
                is_cordial_general(d, q, x)?.cordiality
            } else {
                is_cordial(d, q, x)?
            };
            Ok(ScanRow {
                w: d.weyl().format(x.w),
                mu: x.mu.clone(),
                cordial: c.cordial,
                d_min: c.d_min,
                len: c.len,
                shrunken: x.is_shrunken(d),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Default)]
pub struct Summary {
    pub elements: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub first_failure: Option<String>,
    pub budget_errors: Vec<String>,
}

impl Summary {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn merge(mut self, other: Summary) -> Summary {
        self.elements += other.elements;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
        self.budget_errors.extend(other.budget_errors);
        self
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed > 0)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "elements": self.elements,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
            "first_failure": self.first_failure,
            "budget_errors": self.budget_errors,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "elements: {}\nchecks passed: {}\nchecks failed: {}\nskipped: {}\n",
            self.elements, self.passed, self.failed, self.skipped
        );
        for e in &self.budget_errors {
            writeln!(s, "budget: {e}").unwrap();
        }
        if let Some(f) = &self.first_failure {
            writeln!(s, "first counterexample: {f}").unwrap();
        }
        s
    }
}

fn verify_table(d: &RootDatum, q: &QuantumBruhatGraph, s: &mut Summary) {
    let wg = d.weyl();
    for u in wg.elements() {
        for v in wg.elements() {
            let lhs = d.pairing_two_rho(&q.wt_coweight(d, u, v));
            let rhs = wg.length(u) as i64 - wg.length(v) as i64 + q.dist(u, v) as i64;
            s.record(lhs == rhs, || format!("weight-2rho: {} => {}", wg.format(u), wg.format(v)));
            s.record(q.dist(u, v) <= wg.length(wg.mul(wg.inverse(u), v)), || {
                format!("distance bound: {} => {}", wg.format(u), wg.format(v))
            });
        }
    }
}

fn verify_element(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement, check: bool, cache: &ClassCache) -> Summary {
    let mut s = Summary { elements: 1, ..Summary::default() };
    let name = x.format(d);
    let f = x.is_fundamental(d);
    s.record(is_fundamental_by_length(d, x) == f, || format!("fundamental by length: {name}"));
    s.record(x.fundamental_witness(d).is_some() == f, || format!("fundamental witness: {name}"));
    let lp = x.lp_set(d);
    s.record(x.is_shrunken(d) == (lp.len() == 1), || format!("shrunken: {name}"));
    let result = if d.omega_twist().is_some() {
        verify_twisted(d, q, x, check, cache, &mut s)
    } else {
        verify_quasi_split(d, q, x, check, cache, &mut s)
    };
    if let Err(e) = result {
        match e.downcast_ref::<cordial_core::Error>() {
            Some(cordial_core::Error::Budget(m)) => {
                s.skipped += 1;
                s.budget_errors.push(format!("{name}: {m}"));
            }
            _ => s.record(false, || format!("{name}: {e}")),
        }
    }
    s
}

fn verify_quasi_split(
    d: &RootDatum,
    q: &QuantumBruhatGraph,
    x: &AffineElement,
    check: bool,
    cache: &ClassCache,
    s: &mut Summary,
) -> Result<()> {
    let name = x.format(d);
    let wg = d.weyl();
    let b = oracle_generic_class(d, x, cache)?;
    let r = generic_lambda(d, q, x, check)?;
    s.record(b.kappa == kottwitz_point(d, x), || format!("oracle kappa: {name}"));
    s.record(b.nu == r.nu_x, || format!("oracle nu: {name}"));
    s.record(b.lambda == r.lambda_x, || format!("oracle lambda: {name}"));
    let rhs = d.pairing_two_rho_rat(&b.nu) - Rat::from(b.defect as i64);
    for v in x.lp_set(d) {
        let gap = Rat::from(x.length(d) as i64 - wg.length(x.twisted_conjugate(d, v)) as i64);
        let c = cordiality_at(d, q, x, v);
        s.record(gap <= rhs, || format!("cordial inequality: {name} at {}", wg.format(v)));
        s.record((gap == rhs) == (c.cond1 && c.cond2), || format!("cordial equality: {name} at {}", wg.format(v)));
    }
    Ok(())
}

fn verify_twisted(
    d: &RootDatum,
    q: &QuantumBruhatGraph,
    x: &AffineElement,
    _check: bool,
    cache: &ClassCache,
    s: &mut Summary,
) -> Result<()> {
    let name = x.format(d);
    let qs = d.quasi_split_form();
    let shift = weyl_average(d, &d.omega_twist().expect("twisted datum").mu_sigma);
    let route1 = generic_newton_general(d, q, x)?;
    let route2 = generic_newton_general_max(d, q, x)?;
    s.record(route1 == route2, || format!("general routes: {name}"));
    let b = oracle_generic_class(&qs, &x.mul(d, &twist_element(d)?), cache)?;
    let transported: Vec<Rat> = b.nu.iter().zip(&shift).map(|(a, c)| a - c).collect();
    s.record(route1 == transported, || format!("general oracle: {name}"));
    Ok(())
}

/// Oracle equivalence and property checks for every element up to `cap`.
pub fn verify(d: &RootDatum, q: &QuantumBruhatGraph, cap: usize, check: bool) -> Summary {
    let mut s = Summary::default();
    verify_table(d, q, &mut s);
    let xs = elements_up_to_length(d, cap, d.config().coweight_box);
    let cache = ClassCache::new();
    let parts: Vec<Summary> = xs.par_iter().map(|x| verify_element(d, q, x, check, &cache)).collect();
    parts.into_iter().fold(s, Summary::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cordial_core::Config;

    fn common(json: bool, csv: bool, dot: bool) -> Common {
        Common { config: String::new(), json, csv, dot, test_mode: false }
    }

    #[test]
    fn format_selection() {
        assert_eq!(common(false, false, false).format(Format::Csv, &[Format::Json]).unwrap(), Format::Csv);
        assert_eq!(common(true, false, false).format(Format::Csv, &[Format::Json]).unwrap(), Format::Json);
        assert!(common(false, false, true).format(Format::Csv, &[Format::Json]).is_err());
        assert_eq!(common(false, false, true).format(Format::Dot, &[]).unwrap(), Format::Dot);
    }

    #[test]
    fn group_names() {
        let name = |c: &[(&str, usize)], l: &str| {
            let d = RootDatum::new(Config::new(c, l)).unwrap();
            group_name(d.omega_quotient())
        };
        assert_eq!(name(&[("A", 2)], "adjoint"), "Z/3");
        assert_eq!(name(&[("A", 1)], "sc"), "trivial");
        assert_eq!(name(&[("A", 1)], "gl"), "Z");
        assert_eq!(name(&[("A", 1), ("A", 1)], "adjoint"), "Z/2 x Z/2");
    }

    #[test]
    fn coweights_get_coroot_coordinates() {
        let d = RootDatum::new(Config::new(&[("A", 1)], "gl")).unwrap();
        let (lat, cor) = int_json(&d, &[1, -1]);
        assert_eq!(lat, json!(["1", "-1"]));
        assert_eq!(cor, json!(["1"]));
        let (_, cor) = coweight_json(&d, &[Rat::new(1, 2), Rat::new(1, 2)]);
        assert_eq!(cor, Value::Null);
    }

    #[test]
    fn summary_exit_code() {
        let mut s = Summary::default();
        s.record(true, || unreachable!());
        assert_eq!(s.exit_code(), 0);
        s.record(false, || "first".into());
        s.record(false, || "second".into());
        assert_eq!(s.exit_code(), 1);
        assert_eq!(s.first_failure.as_deref(), Some("first"));
    }
}
