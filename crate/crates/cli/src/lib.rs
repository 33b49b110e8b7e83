//! Command implementations behind the `cherednik` binary. Every command
//! renders to a string so that tests can run it in-process.

pub mod args;
pub mod emit;

use std::collections::BTreeMap;

use serde_json::{json, Value};

use cherednik_core::chambers::{essential_walls, plan_path, wall_position};
use cherednik_core::crystal::Crystal;
use cherednik_core::heisenberg::HeisenbergCrystal;
use cherednik_core::oracles::{
    example_report_all, verify_counting, verify_km_axioms, verify_wilcox, ExampleReport, Report,
};
use cherednik_core::rat;
use cherednik_core::supports::{finite_dims, support, table, SupportResult};
use cherednik_core::wallcross::{transport, wc_pair, wc_type_a};
use cherednik_core::{Error, FockParam, KmCrystal, Multipartition, PairSide, Parameter, Partition};

use args::{
    Cli, Command, CrystalCommand, HeisCommand, LabelArg, Op, OptionalParamArgs, ParamArgs, Suite,
    TableFormat, WcCommand, Which,
};
use emit::{Graph, SupportJson, SCHEMA_VERSION};

/// Exit statuses of the binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const COMPUTATION: i32 = 2;
    pub const VERIFICATION: i32 = 3;
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed or inconsistent input.
    Usage(String),
    /// The engine failed on valid input.
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Computation(_) => exit::COMPUTATION,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Computation(m) => write!(f, "computation error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidPartition(_)
            | Error::LevelMismatch { .. }
            | Error::InvalidParameter(_) => CliError::Usage(e.to_string()),
            _ => CliError::Computation(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Rendered output; `verified` is false when a verification suite found an
/// unexpected difference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub verified: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            verified: true,
        }
    }

    fn json(value: Value) -> Self {
        Output::ok(format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("JSON value")
        ))
    }

    pub fn exit_code(&self) -> i32 {
        if self.verified {
            exit::OK
        } else {
            exit::VERIFICATION
        }
    }
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Support { param, label } => cmd_support(param, label, json),
        Command::Table { param, n, format } => {
            cmd_table(param, *n, json || *format == TableFormat::Json)
        }
        Command::FiniteDims { param, n } => cmd_finite_dims(param, *n, json),
        Command::Crystal(c) => cmd_crystal(c, json),
        Command::Heis(c) => cmd_heis(c, json),
        Command::Wc(c) => cmd_wc(c, json),
        Command::Walls { param, n } => cmd_walls(param, *n, json),
        Command::Verify {
            suite,
            bounds,
            param,
        } => cmd_verify(*suite, bounds, param, json),
    }
}

fn parameter(args: &ParamArgs) -> CliResult<Parameter> {
    Ok(Parameter::parse(
        &args.kappa,
        args.s.as_deref(),
        args.h.as_deref(),
    )?)
}

fn fock(args: &ParamArgs) -> CliResult<FockParam> {
    match parameter(args)? {
        Parameter::Fock(p) => Ok(p),
        Parameter::KappaZero(_) => Err(CliError::Usage(
            "this command needs a nonzero κ with charges --s".into(),
        )),
    }
}

fn label(arg: &LabelArg, level: usize) -> CliResult<Multipartition> {
    Ok(Multipartition::parse_with_level(&arg.lambda, level)?)
}

fn optional(lam: Option<Multipartition>) -> String {
    lam.map_or_else(|| "zero".to_string(), |l| l.to_string())
}

fn cmd_support(args: &ParamArgs, lam: &LabelArg, json: bool) -> CliResult<Output> {
    let param = parameter(args)?;
    let lam = label(lam, param.level())?;
    let r = support(&lam, &param)?;
    if json {
        let mut v = serde_json::to_value(SupportJson::from(&r)).expect("serializable");
        v["schema_version"] = json!(SCHEMA_VERSION);
        v["parameter"] = json!(param.to_string());
        return Ok(Output::json(v));
    }
    let mut text = format!("{}\n{}\n", emit::TSV_HEADER, emit::tsv_row(&r));
    for t in &r.trace {
        text.push_str(&format!("# {t}\n"));
    }
    Ok(Output::ok(text))
}

fn rows_json(param: &Parameter, n: usize, rows: &[SupportResult]) -> Value {
    let rows: Vec<SupportJson> = rows.iter().map(SupportJson::from).collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "parameter": param.to_string(),
        "n": n,
        "rows": rows,
    })
}

fn cmd_table(args: &ParamArgs, n: usize, json: bool) -> CliResult<Output> {
    let param = parameter(args)?;
    let rows = table(&param, n)?;
    if json {
        return Ok(Output::json(rows_json(&param, n, &rows)));
    }
    Ok(Output::ok(emit::tsv_table(&rows)))
}

fn cmd_finite_dims(args: &ParamArgs, n: usize, json: bool) -> CliResult<Output> {
    let param = parameter(args)?;
    let labels = finite_dims(&param, n)?;
    if json {
        let labels: Vec<String> = labels.iter().map(ToString::to_string).collect();
        return Ok(Output::json(json!({
            "schema_version": SCHEMA_VERSION,
            "parameter": param.to_string(),
            "n": n,
            "finite_dim": labels,
        })));
    }
    Ok(Output::ok(
        labels.iter().map(|l| format!("{l}\n")).collect(),
    ))
}

fn cmd_crystal(c: &CrystalCommand, json: bool) -> CliResult<Output> {
    match c {
        CrystalCommand::Apply {
            param,
            label: arg,
            op,
            z,
        } => {
            let p = fock(param)?;
            let lam = label(arg, p.level())?;
            let km = KmCrystal::new(p.clone());
            let z = p.residue_of(&rat::parse(z)?);
            let image = match op {
                Op::E => km.e_op(&lam, &z),
                Op::F => km.f_op(&lam, &z),
            };
            if json {
                return Ok(Output::json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "lambda": lam.to_string(),
                    "residue": z.to_string(),
                    "image": image.map(|l| l.to_string()),
                })));
            }
            Ok(Output::ok(format!("{}\n", optional(image))))
        }
        CrystalCommand::Graph { param, n, which } => {
            let p = fock(param)?;
            let graph = match which {
                Which::Km => km_graph(&p, *n)?,
                Which::Heis => heis_graph(&p, *n)?,
            };
            if json {
                let mut v = serde_json::to_value(&graph).expect("serializable");
                v["schema_version"] = json!(SCHEMA_VERSION);
                return Ok(Output::json(v));
            }
            let name = match which {
                Which::Km => "km",
                Which::Heis => "heis",
            };
            Ok(Output::ok(graph.to_dot(name)))
        }
        CrystalCommand::Depth { param, label: arg } => {
            let p = fock(param)?;
            let lam = label(arg, p.level())?;
            let km = KmCrystal::new(p);
            let (head, word) = km.ascend(&lam);
            let depth = lam.size() - head.size();
            if json {
                let word: Vec<String> = word.steps().iter().map(ToString::to_string).collect();
                return Ok(Output::json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "lambda": lam.to_string(),
                    "depth": depth,
                    "head": head.to_string(),
                    "word": word,
                })));
            }
            Ok(Output::ok(format!(
                "depth\t{depth}\nhead\t{head}\nword\t{word}\n"
            )))
        }
    }
}

fn crystal_graph<C: Crystal>(crystal: &C, level: usize, n: usize) -> Graph {
    let nodes = Multipartition::all_up_to(level, n);
    let mut graph = Graph {
        nodes: nodes.iter().map(ToString::to_string).collect(),
        edges: Vec::new(),
    };
    for lam in &nodes {
        let mut labels = crystal.creation_labels(lam);
        labels.sort();
        labels.dedup();
        for z in labels {
            if let Some(mu) = crystal.f(lam, &z).filter(|mu| mu.size() <= n) {
                graph
                    .edges
                    .push((lam.to_string(), mu.to_string(), z.to_string()));
            }
        }
    }
    graph
}

pub fn km_graph(p: &FockParam, n: usize) -> CliResult<Graph> {
    Ok(crystal_graph(&KmCrystal::new(p.clone()), p.level(), n))
}

pub fn heis_graph(p: &FockParam, n: usize) -> CliResult<Graph> {
    Ok(crystal_graph(
        &HeisenbergCrystal::new(p.clone())?,
        p.level(),
        n,
    ))
}

fn cmd_heis(c: &HeisCommand, json: bool) -> CliResult<Output> {
    match c {
        HeisCommand::Apply {
            param,
            label: arg,
            op,
            i,
        } => {
            let p = fock(param)?;
            let lam = label(arg, p.level())?;
            let heis = HeisenbergCrystal::new(p)?;
            let image = match op {
                Op::E => heis.e_inf(&lam, *i)?,
                Op::F => heis.f_inf(&lam, *i)?,
            };
            if json {
                return Ok(Output::json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "lambda": lam.to_string(),
                    "i": i,
                    "image": image.map(|l| l.to_string()),
                })));
            }
            Ok(Output::ok(format!("{}\n", optional(image))))
        }
        HeisCommand::Q { param, label: arg } => {
            let p = fock(param)?;
            let lam = label(arg, p.level())?;
            let heis = HeisenbergCrystal::new(p)?;
            let q = heis.q_depth(&lam)?;
            if json {
                return Ok(Output::json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "lambda": lam.to_string(),
                    "q": q,
                    "component": heis.target_component() + 1,
                })));
            }
            Ok(Output::ok(format!("{q}\n")))
        }
    }
}

fn cmd_wc(c: &WcCommand, json: bool) -> CliResult<Output> {
    match c {
        WcCommand::Pair { m, n, side } => {
            let side = if *side == 1 {
                PairSide::First
            } else {
                PairSide::Second
            };
            let mut rows = Vec::new();
            for lam in Multipartition::all(2, *n) {
                let (a, b) = wc_pair(lam.comp(0), lam.comp(1), *m, side)?;
                rows.push((
                    lam.to_string(),
                    Multipartition::from(vec![a, b]).to_string(),
                ));
            }
            if json {
                let rows: Vec<Value> = rows
                    .into_iter()
                    .map(|(l, w)| json!({"lambda": l, "image": w}))
                    .collect();
                return Ok(Output::json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "m": m,
                    "side": side.number(),
                    "rows": rows,
                })));
            }
            let mut text = String::from("lambda\timage\n");
            for (l, w) in rows {
                text.push_str(&format!("{l}\t{w}\n"));
            }
            Ok(Output::ok(text))
        }
        WcCommand::Typea { e, label: arg } => {
            let lam: Partition = arg.lambda.parse()?;
            let image = wc_type_a(&lam, *e)?;
            if json {
                return Ok(Output::json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "lambda": lam.to_string(),
                    "e": e,
                    "image": image.to_string(),
                })));
            }
            Ok(Output::ok(format!("{image}\n")))
        }
        WcCommand::Transport {
            param,
            label: arg,
            to_asymptotic,
        } => {
            let p = fock(param)?;
            let lam = label(arg, p.level())?;
            if *to_asymptotic == 0 || *to_asymptotic > p.level() {
                return Err(CliError::Usage(format!(
                    "--to-asymptotic must be between 1 and {}",
                    p.level()
                )));
            }
            let path = plan_path(&p, to_asymptotic - 1, lam.size())?;
            let image = transport(&lam, &path, &p)?;
            let steps: Vec<String> = path.steps.iter().map(ToString::to_string).collect();
            if json {
                return Ok(Output::json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "lambda": lam.to_string(),
                    "end": rat::display_list(&path.end),
                    "steps": steps,
                    "image": image.to_string(),
                })));
            }
            let mut text = String::new();
            for s in steps {
                text.push_str(&format!("# {s}\n"));
            }
            text.push_str(&format!("{image}\n"));
            Ok(Output::ok(text))
        }
    }
}

fn cmd_walls(args: &ParamArgs, n: usize, json: bool) -> CliResult<Output> {
    let p = fock(args)?;
    let mut rows = Vec::new();
    for w in essential_walls(&p, n)? {
        let pos = wall_position(&w, &p)?;
        rows.push((w.i + 1, w.j + 1, w.m, pos.to_string()));
    }
    if json {
        let rows: Vec<Value> = rows
            .into_iter()
            .map(|(i, j, m, pos)| json!({"i": i, "j": j, "m": m, "position": pos}))
            .collect();
        return Ok(Output::json(json!({
            "schema_version": SCHEMA_VERSION,
            "parameter": p.to_string(),
            "walls": rows,
        })));
    }
    let mut text = String::from("i\tj\tm\tposition\n");
    for (i, j, m, pos) in rows {
        text.push_str(&format!("{i}\t{j}\t{m}\t{pos}\n"));
    }
    Ok(Output::ok(text))
}

/// `e=2,n=8` as a map; only `allowed` keys are accepted.
pub fn parse_bounds(text: &str, allowed: &[&str]) -> CliResult<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("bound {item:?} is not key=value")))?;
        let key = key.trim();
        if !allowed.contains(&key) {
            return Err(CliError::Usage(format!(
                "unknown bound {key:?}; expected one of {allowed:?}"
            )));
        }
        let value = value
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bound {key} needs a nonnegative integer")))?;
        out.insert(key.to_string(), value);
    }
    Ok(out)
}

fn required_fock(args: &OptionalParamArgs) -> CliResult<FockParam> {
    match (&args.kappa, &args.s) {
        (Some(k), Some(s)) => Ok(FockParam::parse(k, s)?),
        _ => Err(CliError::Usage("this suite needs --kappa and --s".into())),
    }
}

fn report_json(r: &Report) -> Value {
    json!({
        "name": r.name,
        "bounds": r.bounds,
        "checked": r.checked,
        "passed": r.passed(),
        "details": r.details,
        "violations": r.violations,
    })
}

fn example_json(r: &ExampleReport) -> Value {
    let diffs: Vec<Value> = r
        .diffs
        .iter()
        .map(|d| {
            json!({
                "id": d.id,
                "printed": d.printed,
                "computed": d.computed,
                "allowlisted": d.allowlisted,
            })
        })
        .collect();
    json!({
        "section": r.section,
        "checked": r.checked,
        "passed": r.passed(),
        "diffs": diffs,
        "stale": r.stale,
    })
}

fn cmd_verify(
    suite: Suite,
    bounds: &str,
    param: &OptionalParamArgs,
    json: bool,
) -> CliResult<Output> {
    let (passed, text, values) = match suite {
        Suite::Example => {
            parse_bounds(bounds, &[])?;
            let reports = example_report_all()?;
            let passed = reports.iter().all(ExampleReport::passed);
            let text = reports.iter().map(ToString::to_string).collect::<String>();
            (
                passed,
                text,
                reports.iter().map(example_json).collect::<Vec<_>>(),
            )
        }
        _ => {
            let report = match suite {
                Suite::Axioms => {
                    let b = parse_bounds(bounds, &["n"])?;
                    verify_km_axioms(&required_fock(param)?, b.get("n").copied().unwrap_or(5))
                }
                Suite::Counting => {
                    let b = parse_bounds(bounds, &["n"])?;
                    verify_counting(&required_fock(param)?, b.get("n").copied().unwrap_or(6))?
                }
                Suite::Wilcox => {
                    let b = parse_bounds(bounds, &["e", "n"])?;
                    verify_wilcox(
                        b.get("e").copied().unwrap_or(2),
                        b.get("n").copied().unwrap_or(8),
                    )?
                }
                Suite::Example => unreachable!("handled above"),
            };
            (
                report.passed(),
                report.to_string(),
                vec![report_json(&report)],
            )
        }
    };
    let mut out = if json {
        Output::json(json!({
            "schema_version": SCHEMA_VERSION,
            "passed": passed,
            "reports": values,
        }))
    } else {
        Output::ok(text)
    };
    out.verified = passed;
    Ok(out)
}
