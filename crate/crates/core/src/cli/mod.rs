//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text destined for stdout and stderr, so it can be tested
//! without spawning a process.

mod render;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::builtin;
use crate::clifford::{self, CliffordKind, CliffordStructure};
use crate::error::{Error, Result};
use crate::exactnum::{embed_numeric, format_rational, parse_rational, CycMatrix, Rational};
use crate::fusion::{self, FusionData};
use crate::minimal::{self, MinimalModelSpec};
use crate::spinfunctor::{self, SpinSphereSpec};
use crate::verma;

pub const MAX_DEGREE_VAR: &str = "SPINMTC_MAX_DEGREE";
const DEFAULT_MAX_DEGREE: i64 = 8;

#[derive(Debug, Parser)]
#[command(
    name = "spinmtc",
    version,
    about = "Spin structures on Clifford modular tensor categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,

    /// Add rounded floating-point values next to exact ones (not authoritative).
    #[arg(long, value_name = "DIGITS", global = true)]
    pub numeric: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Args)]
pub struct VminusArg {
    /// Label to use as V⁻ when several qualify.
    #[arg(long)]
    pub vminus: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a fusion data file.
    Validate { file: PathBuf },
    /// Exact s-matrix and the s² = αC check.
    Smatrix { file: PathBuf },
    /// NS/R classification and the block structure of s.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        vminus: VminusArg,
    },
    /// Hom-space dimensions on a labelled sphere.
    Sphere {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<String>,
        #[command(flatten)]
        vminus: VminusArg,
    },
    /// State-space dimensions of the four spin tori.
    Torus {
        file: PathBuf,
        #[command(flatten)]
        vminus: VminusArg,
    },
    /// Labels of the N=1 minimal model SM(p,q).
    Minimal {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        /// Emit the label/twist table as a partial fusion file instead.
        #[arg(long)]
        export: bool,
    },
    /// Check label counts for every valid (p,q) with pq ≤ M.
    MinimalScan {
        #[arg(long, value_name = "M")]
        max_pq: i64,
    },
    /// Singular vectors of the NS Verma module.
    Singvec(SingvecArgs),
    /// Print a builtin category as a fusion data file.
    Builtin { key: String },
}

#[derive(Debug, Args)]
pub struct SingvecArgs {
    #[arg(long, requires = "q", conflicts_with_all = ["c", "h", "degree"])]
    pub p: Option<i64>,
    #[arg(long, requires = "p")]
    pub q: Option<i64>,
    #[arg(long, requires_all = ["h", "degree"])]
    pub c: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub degree: Option<String>,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error: 2 for bad input, 1 for a failed check.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_)
        | Error::Json(_)
        | Error::UnknownLabel(_)
        | Error::UnknownBuiltin(_)
        | Error::InvalidMinimalModel(_)
        | Error::Exact(_) => 2,
        _ => 1,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load(path: &PathBuf) -> Result<FusionData> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
    FusionData::from_json(&text)
}

fn emit(cli: &Cli, value: &Value) -> String {
    match cli.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Table => render::table(value),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn numeric_grid(m: &CycMatrix, digits: u32) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| {
                    let z = embed_numeric(m.get(i, j), digits);
                    let d = digits as usize;
                    format!("{:.d$}{:+.d$}i", z.re, z.im)
                })
                .collect()
        })
        .collect();
    json!(rows)
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    match &cli.command {
        Command::Validate { file } => {
            let data = load(file)?;
            let report = fusion::validate(&data);
            let mut v = to_value(&report);
            // modularity: s must be symmetric with s² = αC, α ≠ 0
            let (modular, detail) = match fusion::compute_smatrix(&data) {
                Ok(s) => {
                    let chk = fusion::check_s_squared(&s, &data);
                    (chk.holds, to_value(&chk))
                }
                Err(e @ Error::AsymmetricSMatrix { .. }) => (false, json!({"holds": false, "error": e.to_string()})),
                Err(e) => return Err(e),
            };
            let ok = report.is_valid() && modular;
            v["valid"] = json!(ok);
            v["s_squared"] = detail;
            Ok((!ok as i32, emit(cli, &v)))
        }
        Command::Smatrix { file } => {
            let data = load(file)?;
            let s = fusion::compute_smatrix(&data)?;
            let chk = fusion::check_s_squared(&s, &data);
            let mut v = json!({
                "name": data.name(),
                "labels": data.labels(),
                "conductor": s.data.conductor(),
                "s": to_value(&s.data),
                "s_squared": to_value(&chk),
            });
            if let Some(d) = cli.numeric {
                v["numeric"] = numeric_grid(&s.data, d);
            }
            Ok((!chk.holds as i32, emit(cli, &v)))
        }
        Command::Classify { file, vminus } => {
            let data = load(file)?;
            let vm = clifford::choose_vminus(&data, vminus.vminus.as_deref())?;
            let st = CliffordStructure::new(&data, vm)?;
            let mut v = json!({
                "name": data.name(),
                "vminus": data.label(vm),
                "kind": to_value(&st.kind()),
            });
            if st.kind() == CliffordKind::PreCliffordSqrt {
                return Ok((0, emit(cli, &v)));
            }
            let zeta: serde_json::Map<String, Value> = data
                .ids()
                .map(|i| (data.label(i).to_string(), json!(st.zeta[i])))
                .collect();
            let cls = clifford::classify_labels(&data, vm)?;
            let s = fusion::compute_smatrix(&data)?;
            let blocks = clifford::verify_block_structure(&data, &cls, &s);
            v["zeta"] = Value::Object(zeta);
            v["classification"] = to_value(&cls.named(&data));
            v["blocks"] = to_value(&blocks);
            if let Some(d) = cli.numeric {
                v["numeric"] = json!({
                    "A": numeric_grid(&blocks.blocks.a, d),
                    "B": numeric_grid(&blocks.blocks.b, d),
                    "C": numeric_grid(&blocks.blocks.c, d),
                    "D": numeric_grid(&blocks.blocks.d, d),
                });
            }
            Ok((!blocks.all_pass as i32, emit(cli, &v)))
        }
        Command::Sphere { file, labels, vminus } => {
            let data = load(file)?;
            let vm = clifford::choose_vminus(&data, vminus.vminus.as_deref())?;
            let cls = clifford::classify_labels(&data, vm)?;
            let spec = SpinSphereSpec::from_names(&data, &cls, labels)?;
            let report = spinfunctor::sphere_report(&spec)?;
            let mut v = json!({"name": data.name(), "vminus": data.label(vm), "labels": labels});
            merge(&mut v, to_value(&report));
            Ok((0, emit(cli, &v)))
        }
        Command::Torus { file, vminus } => {
            let data = load(file)?;
            let vm = clifford::choose_vminus(&data, vminus.vminus.as_deref())?;
            let cls = clifford::classify_labels(&data, vm)?;
            let t = spinfunctor::torus_dims(&cls);
            let v = json!({"name": data.name(), "vminus": data.label(vm), "dims": to_value(&t.dims)});
            Ok((0, emit(cli, &v)))
        }
        Command::Minimal { p, q, export } => {
            let spec = MinimalModelSpec::new(*p, *q)?;
            if *export {
                return Ok((0, emit(cli, &to_value(&minimal::partial_export(&spec)?))));
            }
            let report = minimal::minimal_report(&spec)?;
            let out = match cli.format {
                Format::Table => report.to_table(),
                Format::Json => emit(cli, &to_value(&report)),
            };
            Ok((0, out))
        }
        Command::MinimalScan { max_pq } => {
            let rows: Vec<Value> = minimal::valid_pairs(*max_pq)
                .par_iter()
                .map(|spec| match minimal::enumerate_labels(spec) {
                    Ok(labels) => {
                        let ns = labels.iter().filter(|l| l.sector == minimal::Sector::NS).count();
                        let h_ok = labels
                            .iter()
                            .all(|l| l.h == minimal::conformal_weight(spec, spec.p - l.r, spec.q - l.s));
                        json!({
                            "p": spec.p, "q": spec.q,
                            "c": format_rational(&minimal::central_charge(spec)),
                            "ns": ns, "r": labels.len() - ns,
                            "formula": spec.sector_count(),
                            "split": spec.r_labels_split(),
                            "ok": h_ok,
                        })
                    }
                    Err(e) => json!({"p": spec.p, "q": spec.q, "ok": false, "error": e.to_string()}),
                })
                .collect();
            let ok = rows.iter().all(|r| r["ok"] == json!(true));
            let v = json!({"max_pq": max_pq, "models": rows.len(), "all_ok": ok, "results": rows});
            Ok((!ok as i32, emit(cli, &v)))
        }
        Command::Singvec(args) => singvec(cli, args),
        Command::Builtin { key } => Ok((0, builtin::builtin(key)?.to_json() + "\n")),
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn max_degree() -> Result<i64> {
    match std::env::var(MAX_DEGREE_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("{MAX_DEGREE_VAR}={s:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn singvec(cli: &Cli, args: &SingvecArgs) -> Result<(i32, String)> {
    let cap = max_degree()?;
    let check_cap = |twice: i64| {
        if twice > 2 * cap {
            Err(Error::Malformed(format!(
                "degree {} exceeds {MAX_DEGREE_VAR} = {cap}",
                format_rational(&crate::exactnum::rational(twice, 2))
            )))
        } else {
            Ok(())
        }
    };
    match (args.p, args.q, &args.c, &args.h, &args.degree) {
        (Some(p), Some(q), ..) => {
            let spec = MinimalModelSpec::new(p, q)?;
            check_cap(spec.grid())?;
            let r = verma::verify_minimal_singular(p, q)?;
            let ok = r.space_dim == 1 && r.shape_matches;
            let mut v = json!({"p": p, "q": q});
            merge(&mut v, to_value(&r));
            Ok((!ok as i32, emit(cli, &v)))
        }
        (None, None, Some(c), Some(h), Some(d)) => {
            let c = parse_rational(c)?;
            let h = parse_rational(h)?;
            let d: Rational = parse_rational(d)?;
            let twice = &d * Rational::from_integer(2.into());
            if !twice.is_integer() || twice <= Rational::from_integer(0.into()) {
                return Err(Error::Malformed(format!(
                    "degree {d} must be a positive multiple of 1/2"
                )));
            }
            let twice: i64 = twice
                .to_integer()
                .try_into()
                .map_err(|_| Error::Malformed("degree too large".into()))?;
            check_cap(twice)?;
            let r = verma::singular_vectors(&c, &h, twice)?;
            Ok((0, emit(cli, &to_value(&r))))
        }
        _ => Err(Error::Malformed(
            "singvec needs --p and --q, or --c, --h and --degree".into(),
        )),
    }
}
