//! Command-line front end shared by the `flagrep` binary and the tests.
//!
//! Every command produces a [`Report`]: an echo of the weight, a
//! command-specific `results` object, and named checks. The process exits
//! with 0 when every mandatory check passes, 1 when one fails and 2 on
//! malformed input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::annihilator::AnnihilatorLab;
use crate::binomial;
use crate::lie::{flag_from_weight, random_flag_base_change, WeightError, WeightSpec};
use crate::module::weyl_dimension;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "flagrep",
    version,
    about = "Flag-adapted PBW bases and annihilator filtrations of irreducible sl(n)-modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Flag, block sizes, D, m(λ) and the dimension of V_λ.
    Info(Common),
    /// dim U_l(g)v against binom(D+l, D) for l = 0..=lmax.
    Filtration {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lmax: usize,
    },
    /// The semi-canonical basis vectors x_1^{v_1}⋯x_D^{v_D}(v) of degree ≤ l.
    Basis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        l: u32,
    },
    /// The full decomposition report at degree l.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        l: u32,
    },
    /// The exponents m_β and the lowering-power checks.
    Generators(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Dimension of E.
    #[arg(long)]
    n: usize,
    /// Highest weight as `n_i:l_i` pairs, e.g. `1:1,2:1`.
    #[arg(long)]
    weight: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    output: OutputFormat,
    /// Seed for the randomized flag-compatible base change check.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandKind {
    Info,
    Filtration,
    Basis,
    Verify,
    Generators,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Info => "info",
            CommandKind::Filtration => "filtration",
            CommandKind::Basis => "basis",
            CommandKind::Verify => "verify",
            CommandKind::Generators => "generators",
        }
    }
}

/// A parsed and validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliRequest {
    pub command: CommandKind,
    pub weight: WeightSpec,
    /// `--l` or `--lmax`, when the command takes one.
    pub degree: Option<u32>,
    pub output: OutputFormat,
    pub seed: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum RequestError {
    #[error("{0}")]
    Args(#[from] clap::Error),
    #[error("invalid --weight: {0}")]
    Weight(#[from] WeightError),
    #[error("--l must be at least 1 for verify")]
    ZeroDegree,
}

impl CliRequest {
    pub fn parse_from<I, T>(args: I) -> Result<Self, RequestError>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args)?;
        let (command, common, degree) = match cli.command {
            Command::Info(c) => (CommandKind::Info, c, None),
            Command::Filtration { common, lmax } => {
                (CommandKind::Filtration, common, Some(lmax as u32))
            }
            Command::Basis { common, l } => (CommandKind::Basis, common, Some(l)),
            Command::Verify { common, l } => {
                if l == 0 {
                    return Err(RequestError::ZeroDegree);
                }
                (CommandKind::Verify, common, Some(l))
            }
            Command::Generators(c) => (CommandKind::Generators, c, None),
        };
        Ok(CliRequest {
            command,
            weight: WeightSpec::parse(common.n, &common.weight)?,
            degree,
            output: common.output,
            seed: common.seed,
        })
    }
}

/// One named verification with the value asserted and the value observed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
    pub mandatory: bool,
}

impl Check {
    pub fn new(expected: impl Into<Value>, actual: impl Into<Value>, mandatory: bool) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        Check {
            pass: expected == actual,
            expected,
            actual,
            mandatory,
        }
    }

    /// Recomputed from `expected` and `actual`, ignoring the stored flag.
    pub fn holds(&self) -> bool {
        self.pass && self.expected == self.actual
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightEcho {
    pub n: usize,
    pub weight: String,
    pub lambda: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: CommandKind,
    pub weight: WeightEcho,
    pub results: Value,
    pub checks: BTreeMap<String, Check>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.checks.values().all(|c| !c.mandatory || c.holds()) {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{} for n = {}, lambda = {}",
            self.command.name(),
            self.weight.n,
            self.weight.lambda
        );
        write_text_results(&mut out, self.command, &self.results);
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for (name, c) in &self.checks {
                let status = match (c.holds(), c.mandatory) {
                    (true, _) => "pass",
                    (false, true) => "FAIL",
                    (false, false) => "fail (allowed)",
                };
                let _ = writeln!(
                    out,
                    "  {name:<28} expected {:<10} actual {:<10} {status}",
                    c.expected.to_string(),
                    c.actual.to_string()
                );
            }
        }
        let _ = writeln!(
            out,
            "status: {}",
            if self.exit_code() == EXIT_OK {
                "ok"
            } else {
                "mandatory check failed"
            }
        );
        out
    }
}

fn write_text_results(out: &mut String, command: CommandKind, results: &Value) {
    match command {
        CommandKind::Filtration => {
            let _ = writeln!(
                out,
                "{:>4} {:>10} {:>14} {:>6}",
                "l", "dim U_l v", "binom(D+l,D)", "match"
            );
            for row in results["rows"].as_array().into_iter().flatten() {
                let _ = writeln!(
                    out,
                    "{:>4} {:>10} {:>14} {:>6}",
                    row["l"].to_string(),
                    row["dim"].to_string(),
                    row["binom"].to_string(),
                    row["match"].to_string()
                );
            }
        }
        CommandKind::Basis => {
            for (k, vector) in results["vectors"]
                .as_array()
                .into_iter()
                .flatten()
                .enumerate()
            {
                let terms: Vec<String> = vector["entries"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .map(|e| {
                        format!(
                            "{} [{}]",
                            e[1].as_str().unwrap_or("?"),
                            e[0].as_str().unwrap_or("?")
                        )
                    })
                    .collect();
                let _ = writeln!(
                    out,
                    "  b{:<3} {:<14} = {}",
                    k + 1,
                    vector["monomial"].as_str().unwrap_or("?"),
                    if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    }
                );
            }
            let _ = writeln!(out, "rank {} of {}", results["rank"], results["size"]);
        }
        _ => {
            if let Some(obj) = results.as_object() {
                for (key, value) in obj {
                    let _ = writeln!(out, "  {key:<32} {value}");
                }
            }
        }
    }
}

/// Runs a validated request.
pub fn execute(req: &CliRequest) -> Report {
    let w = &req.weight;
    let lab = AnnihilatorLab::new(w);
    let flag = flag_from_weight(w);
    let d = flag.complementary_dimension();
    let m = w.min_coefficient();
    let mut checks = BTreeMap::new();
    let results = match req.command {
        CommandKind::Info => {
            let weyl = weyl_dimension(w);
            let (irreducible, _) = lab
                .module()
                .generate_irreducible(lab.basis())
                .expect("filtration stabilizes");
            let highest = lab
                .module()
                .verify_highest_weight(lab.basis())
                .expect("basis matches weight");
            checks.insert(
                "irreducible_dimension".into(),
                Check::new(weyl, irreducible.dimension() as u64, true),
            );
            checks.insert("highest_weight".into(), Check::new(true, highest, true));
            json!({
                "bounds": flag.bounds(),
                "blocks": flag.blocks(),
                "D": d,
                "m_lambda": m,
                "weyl_dimension": weyl,
                "w_dimension": lab.module().dimension(),
            })
        }
        CommandKind::Filtration => {
            let lmax = req.degree.unwrap_or(0) as usize;
            let layers = lab
                .module()
                .canonical_filtration(lab.basis(), lmax)
                .expect("basis matches weight");
            let rows: Vec<Value> = layers
                .iter()
                .enumerate()
                .map(|(l, s)| {
                    let expected = binomial(d + l, d);
                    checks.insert(
                        format!("dimension_l{l:02}"),
                        Check::new(expected, s.dimension(), l as u32 <= m),
                    );
                    json!({ "l": l, "dim": s.dimension(), "binom": expected, "match": expected == s.dimension() })
                })
                .collect();
            json!({ "D": d, "m_lambda": m, "rows": rows })
        }
        CommandKind::Basis => {
            let l = req.degree.unwrap_or(1);
            let basis = lab.semicanonical_basis(l);
            let within = l <= m;
            let expected = binomial(d + l as usize, d);
            checks.insert(
                "size".into(),
                Check::new(expected, basis.vectors.len(), true),
            );
            checks.insert(
                "independent".into(),
                Check::new(basis.vectors.len(), basis.rank, within),
            );
            let vectors: Vec<Value> = basis
                .monomials
                .iter()
                .zip(&basis.vectors)
                .map(|(p, v)| {
                    let entries: Vec<Value> = v
                        .iter()
                        .map(|(label, c)| json!([label.to_string(), c.to_string()]))
                        .collect();
                    json!({ "monomial": p.to_string(), "entries": entries })
                })
                .collect();
            json!({
                "l": l,
                "D": d,
                "m_lambda": m,
                "within_bound": within,
                "size": basis.vectors.len(),
                "rank": basis.rank,
                "vectors": vectors,
            })
        }
        CommandKind::Verify => {
            let l = req.degree.unwrap_or(1);
            let r = lab.verify_decomposition(l);
            let within = r.within_bound();
            checks.insert(
                "rank_nullity".into(),
                Check::new(r.dim_ul, r.dim_ann + r.dim_ulv, true),
            );
            checks.insert(
                "decomposition_sum".into(),
                Check::new(r.dim_ul, r.dim_ul_complementary + r.dim_char, true),
            );
            checks.insert(
                "decomposition_direct".into(),
                Check::new(0, r.complementary_char_intersection, true),
            );
            checks.insert("char_in_ann".into(), Check::new(true, r.char_in_ann, true));
            checks.insert(
                "complementary_injective".into(),
                Check::new(r.dim_ul_complementary, r.complementary_rank, within),
            );
            checks.insert(
                "ann_equals_char".into(),
                Check::new(true, r.ann_equals_char, within),
            );
            checks.insert(
                "filtration_dimension".into(),
                Check::new(r.dim_ul_complementary, r.dim_ulv, within),
            );
            if let Some(seed) = req.seed {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let change = random_flag_base_change(&flag, &mut rng);
                let moved = AnnihilatorLab::with_base_change(w, &change)
                    .expect("random change preserves the flag")
                    .verify_decomposition(l);
                let dims = |r: &crate::DecompositionReport| {
                    json!([
                        r.dim_ul,
                        r.dim_ulv,
                        r.dim_ann,
                        r.dim_char,
                        r.complementary_rank,
                        r.complementary_char_intersection
                    ])
                };
                checks.insert(
                    "base_change_invariance".into(),
                    Check::new(dims(&r), dims(&moved), true),
                );
            }
            let mut v = serde_json::to_value(&r).expect("report serializes");
            if let Some(obj) = v.as_object_mut() {
                obj.remove("weight");
            }
            v["D"] = json!(d);
            v["m_lambda"] = json!(m);
            v["within_bound"] = json!(within);
            v
        }
        CommandKind::Generators => {
            let r = lab.verify_dixmier_generators();
            checks.insert(
                "m_beta_closed_form".into(),
                Check::new(r.m_beta_closed_form.clone(), r.m_beta.clone(), true),
            );
            checks.insert(
                "positive_roots_kill".into(),
                Check::new(true, r.positive_roots_kill, true),
            );
            checks.insert(
                "cartan_scales".into(),
                Check::new(true, r.cartan_scales, true),
            );
            for (i, (&kills, sharp)) in r.power_kills.iter().zip(&r.sharp).enumerate() {
                checks.insert(
                    format!("power_kills_b{}", i + 1),
                    Check::new(true, kills, true),
                );
                if let Some(s) = sharp {
                    checks.insert(format!("sharpness_b{}", i + 1), Check::new(true, *s, true));
                }
            }
            serde_json::to_value(&r).expect("report serializes")
        }
    };
    Report {
        command: req.command,
        weight: WeightEcho {
            n: w.n(),
            weight: w.to_pairs_string(),
            lambda: w.to_string(),
        },
        results,
        checks,
    }
}

/// What a process invocation prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name), executes, and renders.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let req = match CliRequest::parse_from(args) {
        Ok(req) => req,
        Err(RequestError::Args(e)) if !e.use_stderr() => {
            // --help and --version
            return Outcome {
                status: EXIT_OK,
                stdout: e.to_string(),
                stderr: String::new(),
            };
        }
        Err(e) => {
            return Outcome {
                status: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!(
                    "error: {}\n",
                    e.to_string().trim_start_matches("error: ").trim_end()
                ),
            }
        }
    };
    let report = execute(&req);
    let stdout = match req.output {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => report.to_text(),
    };
    Outcome {
        status: report.exit_code(),
        stdout,
        stderr: String::new(),
    }
}
