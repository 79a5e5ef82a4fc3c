//! `qhall <verb> <spec> [key=value]... [--order=N] [--format=F] [--only=ID] [--out=FILE]`

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use qhall_core::bijections::{trace, verify_bijection, MapId, MapInstance};
use qhall_core::closedform::{build_with, parse_closed_form, parse_subst, BuildOptions, ClosedForm, FormId, Params};
use qhall_core::enumerate::{gf_oracle, parse_family, parse_parts, Family, Statistic};
use qhall_core::qseries::{parse_monomial, Grading, Monomial, Var};
use qhall_core::verify::{CheckId, CheckParams, CheckReport, CheckSpec, SuiteConfig};

use crate::config::{parse_fin3_length, parse_mutation, parse_only, ConfigFile};
use crate::output::{self, Format};
use crate::runner::{run_suite_parallel, timed};
use crate::{exit, CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// List family members up to a weight, with statistics.
    Enum,
    /// Expand a closed form or a family's generating function.
    Gf,
    /// Run one named check.
    Check,
    /// Apply a map to one sequence, or verify it over a window.
    Bijection,
    /// Run the whole verification suite.
    Suite,
}

#[derive(Debug, Parser)]
#[command(name = "qhall", version, about = "Lecture hall generating functions: expand, enumerate, verify")]
pub struct Args {
    pub verb: Verb,
    /// Family, closed form, check or map name (not used by `suite`).
    pub spec: Option<String>,
    /// Parameters as key=value.
    pub params: Vec<String>,
    /// Truncation order (or weight window for `enum` and bijections).
    #[arg(long)]
    pub order: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Restrict `suite` to these checks (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Write output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Largest n for `suite`.
    #[arg(long)]
    pub nmax: Option<u32>,
    /// Largest k of the large-n checks in `suite`.
    #[arg(long)]
    pub kmax: Option<u32>,
    /// Image weight window of the bijection checks in `suite`.
    #[arg(long)]
    pub bijection_weight: Option<u64>,
    /// TOML suite configuration; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Include per-check timings (output then varies between runs).
    #[arg(long)]
    pub timing: bool,
    /// Length of the second Pochhammer symbol of `fin3_rhs`: k or unbounded.
    #[arg(long)]
    pub fin3_length: Option<String>,
    /// Inject a known error into the closed forms, to exercise the harness.
    #[arg(long)]
    pub mutation: Option<String>,
}

/// Parsed `key=value` list, consumed key by key.
struct KeyValues(Vec<(String, String)>);

impl KeyValues {
    fn parse(items: &[String]) -> CliResult<KeyValues> {
        items
            .iter()
            .map(|s| {
                s.split_once('=')
                    .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                    .ok_or_else(|| CliError::Usage(format!("expected key=value, got {:?}", s)))
            })
            .collect::<CliResult<Vec<_>>>()
            .map(KeyValues)
    }

    fn take(&mut self, key: &str) -> Option<String> {
        let i = self.0.iter().position(|(k, _)| k == key)?;
        Some(self.0.remove(i).1)
    }

    fn take_u64(&mut self, key: &str) -> CliResult<Option<u64>> {
        self.take(key)
            .map(|v| v.parse::<u64>().map_err(|_| CliError::Usage(format!("{}={} is not a count", key, v))))
            .transpose()
    }

    fn rest(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }
}

fn options(args: &Args) -> CliResult<BuildOptions> {
    let mut o = BuildOptions::default();
    if let Some(f) = &args.fin3_length {
        o.fin3_length = parse_fin3_length(f)?;
    }
    if let Some(m) = &args.mutation {
        o.mutation = Some(parse_mutation(m)?);
    }
    Ok(o)
}

fn need_spec(args: &Args) -> CliResult<&str> {
    args.spec
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("{:?} needs a name", args.verb)))
}

fn order(args: &Args, kv: &mut KeyValues, key: &str, default: u64) -> CliResult<u64> {
    let from_kv = kv.take_u64(key)?;
    Ok(args.order.or(from_kv).unwrap_or(default))
}

/// `q`, `xy`, or explicit weights such as `q:1,a:1`.
fn parse_grading(text: &str, bound: u64) -> CliResult<Grading> {
    match text {
        "q" => Ok(Grading::q(bound)),
        "xy" => Ok(Grading::xy(bound)),
        _ => {
            let mut w = Vec::new();
            for item in text.split(',') {
                let (v, n) = item
                    .split_once(':')
                    .ok_or_else(|| CliError::Usage(format!("expected var:weight, got {:?}", item)))?;
                let var = Var::from_name(v.trim()).ok_or_else(|| CliError::Usage(format!("unknown variable {:?}", v)))?;
                let n = n.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("bad weight {:?}", n)))?;
                w.push((var, n));
            }
            Ok(Grading::new(&w, bound))
        }
    }
}

/// `q`, `xy`, `uvq`, `zq`, or explicit `statistic->monomial` pairs.
fn parse_stats(text: &str, family: &Family) -> CliResult<Vec<(Statistic, Monomial)>> {
    let v = |x: Var| Monomial::from(x);
    let lecture = matches!(family, Family::LectureHall { .. } | Family::LectureHallBar { .. });
    Ok(match text {
        "q" => vec![(Statistic::Weight, v(Var::Q))],
        "xy" => vec![(Statistic::OddIndexSum, v(Var::X)), (Statistic::EvenIndexSum, v(Var::Y))],
        "uvq" if lecture => vec![
            (Statistic::Weight, v(Var::Q)),
            (Statistic::CeilWeight, v(Var::U)),
            (Statistic::CeilOddCount, v(Var::V)),
        ],
        "uvq" => vec![
            (Statistic::Weight, v(Var::Q)),
            (Statistic::FloorWeight, v(Var::U)),
            (Statistic::FloorOddCount, v(Var::V)),
        ],
        "zq" => vec![
            (Statistic::Weight, v(Var::Q)),
            (Statistic::OddIndexSum, v(Var::Z)),
            (Statistic::EvenIndexSum, Var::Z.pow(-1)),
        ],
        _ => {
            let mut out = Vec::new();
            for item in text.split(',') {
                let (s, m) = item
                    .split_once("->")
                    .ok_or_else(|| CliError::Usage(format!("expected statistic->monomial, got {:?}", item)))?;
                let st = Statistic::from_name(s.trim())
                    .ok_or_else(|| CliError::Usage(format!("unknown statistic {:?}", s)))?;
                out.push((st, parse_monomial(m)?));
            }
            out
        }
    })
}

fn family_from(spec: &str, kv: &KeyValues) -> CliResult<Family> {
    if spec.contains('(') {
        return Ok(parse_family(spec)?);
    }
    let params: Vec<(&str, &str)> = kv.rest().collect();
    Ok(Family::from_params(spec, &params)?)
}

fn reject_leftovers(kv: &KeyValues) -> CliResult<()> {
    match kv.0.first() {
        Some((k, _)) => Err(CliError::Usage(format!("unknown parameter {:?}", k))),
        None => Ok(()),
    }
}

fn cmd_enum(args: &Args, mut kv: KeyValues) -> CliResult<(String, i32)> {
    let spec = need_spec(args)?;
    let maxw = order(args, &mut kv, "maxw", 10)?;
    let family = family_from(spec, &kv)?;
    let members = family.enumerate(maxw)?;
    Ok((output::members(&family.to_string(), &members, args.format), exit::OK))
}

fn cmd_gf(args: &Args, mut kv: KeyValues) -> CliResult<(String, i32)> {
    let spec = need_spec(args)?;
    let d = order(args, &mut kv, "order", 10)?;
    let grading_text = kv.take("grading");
    let head = spec.split('(').next().unwrap_or(spec);
    if let Some(id) = FormId::from_name(head) {
        let mut cf = if spec.contains('(') {
            parse_closed_form(spec)?
        } else {
            ClosedForm::new(id, Params::default())
        };
        if let Some(a) = kv.take("args") {
            cf = cf.with_args(parse_subst(&a)?);
        }
        for (k, v) in kv.rest() {
            cf.params.set(k, v)?;
        }
        let default = if id.name().contains("xy") { "xy" } else { "q" };
        let g = parse_grading(grading_text.as_deref().unwrap_or(default), d)?;
        let s = build_with(&cf, g, &options(args)?)?;
        return Ok((output::series(&cf.to_string(), &s, args.format), exit::OK));
    }
    let stats = kv.take("stats").unwrap_or_else(|| "q".into());
    let family = family_from(spec, &kv)?;
    let assign = parse_stats(&stats, &family)?;
    let default = if stats == "xy" { "xy" } else { "q" };
    let g = parse_grading(grading_text.as_deref().unwrap_or(default), d)?;
    let s = gf_oracle(&family, &assign, g)?;
    Ok((output::series(&family.to_string(), &s, args.format), exit::OK))
}

fn verdict_code(rs: &[CheckReport]) -> i32 {
    if rs.iter().all(|r| r.passed()) {
        exit::OK
    } else {
        exit::CHECK_FAILED
    }
}

fn cmd_check(args: &Args, mut kv: KeyValues) -> CliResult<(String, i32)> {
    let spec = need_spec(args)?;
    let id = CheckId::from_name(spec).ok_or_else(|| CliError::Usage(format!("unknown check {:?}", spec)))?;
    let d = order(args, &mut kv, "order", 10)?;
    let mut params = CheckParams::default();
    for (k, v) in kv.rest() {
        params.set(k, v)?;
    }
    let check = CheckSpec::new(id, params, d);
    // Domain errors surface as such rather than as a failing report.
    qhall_core::verify::run_check(&check, &options(args)?)?;
    let r = timed(&check, &options(args)?);
    let rs = [r];
    Ok((output::reports(&rs, args.format, args.timing), verdict_code(&rs)))
}

fn cmd_bijection(args: &Args, mut kv: KeyValues) -> CliResult<(String, i32)> {
    let spec = need_spec(args)?;
    let map = MapId::from_name(spec).ok_or_else(|| CliError::Usage(format!("unknown map {:?}", spec)))?;
    let n = kv.take_u64("n")?.ok_or_else(|| CliError::Usage("bijection needs n=".into()))? as u32;
    let k = kv.take_u64("k")?.map(|k| k as u32);
    let s = kv.take_u64("s")?.unwrap_or(0) as u32;
    let lambda = kv.take("lambda");
    let maxw = order(args, &mut kv, "maxw", 10)?;
    reject_leftovers(&kv)?;
    match lambda {
        Some(text) => {
            let inst = MapInstance::new(map, n, k, s)?;
            Ok((trace(&inst, &parse_parts(&text)?)? + "\n", exit::OK))
        }
        None => {
            let rs = [verify_bijection(map, n, k, maxw)?];
            Ok((output::reports(&rs, args.format, args.timing), verdict_code(&rs)))
        }
    }
}

fn cmd_suite(args: &Args, kv: KeyValues) -> CliResult<(String, i32)> {
    reject_leftovers(&kv)?;
    let mut config = SuiteConfig::default();
    if let Some(path) = &args.config {
        config = ConfigFile::load(path)?.apply(config)?;
    }
    config.order = args.order.unwrap_or(config.order);
    config.nmax = args.nmax.unwrap_or(config.nmax);
    config.kmax = args.kmax.unwrap_or(config.kmax);
    config.bijection_weight = args.bijection_weight.unwrap_or(config.bijection_weight);
    if !args.only.is_empty() {
        config.only = parse_only(&args.only)?;
    }
    if let Some(f) = &args.fin3_length {
        config.options.fin3_length = parse_fin3_length(f)?;
    }
    if let Some(m) = &args.mutation {
        config.options.mutation = Some(parse_mutation(m)?);
    }
    let rs = run_suite_parallel(&config);
    Ok((output::reports(&rs, args.format, args.timing), verdict_code(&rs)))
}

fn dispatch(args: &Args) -> CliResult<(String, i32)> {
    let kv = KeyValues::parse(&args.params)?;
    match args.verb {
        Verb::Enum => cmd_enum(args, kv),
        Verb::Gf => cmd_gf(args, kv),
        Verb::Check => cmd_check(args, kv),
        Verb::Bijection => cmd_bijection(args, kv),
        Verb::Suite => cmd_suite(args, kv),
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let (text, code) = match dispatch(&args) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "qhall: {}", e);
            return e.exit_code();
        }
    };
    match &args.out {
        Some(path) => {
            if let Err(source) = std::fs::write(path, text) {
                let e = CliError::Io {
                    path: path.display().to_string(),
                    source,
                };
                let _ = writeln!(err, "qhall: {}", e);
                return e.exit_code();
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}
