//! Command-line front end: `tqft-hecke <subcommand> [--format json|csv|pretty] [--precision d]`.
//!
//! Exit codes: 0 success, 1 runtime error, 2 usage error, 3 a requested verification failed.

mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::recoupling::{
    coefficient_tables, verlinde_dim, Recoupling, RecouplingError, TheoryParams,
};
use crate::rep_genus1::{modular_data, verify_genus1_relations};
use crate::rep_genus2::{
    infinite_image_certificate, trace_table, Genus2Error, Genus2Rep, ImageVerdict,
};
use crate::report::{all_pass, RelationReport};
use crate::sl2_hecke::{
    classify, eval_word, parse_word, thurston_rep, verify_presentation, HeckeError,
    MulticurveData,
};
use crate::spin::{reducibility_report, spin_table, SpinError};

use render::{complex_str, matrix_csv, matrix_pretty, Doc};

pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Pretty,
}

#[derive(Parser, Debug)]
#[command(name = "tqft-hecke", version, about = "Exact TLJ recoupling data and Hecke-group representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Decimal digits for float renderings.
    #[arg(long, global = true, default_value_t = 6)]
    pub precision: u32,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// TQFT dimensions d_r(g).
    Dims {
        #[arg(long, default_value_t = 2)]
        genus: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<u32>,
    },
    /// Δ, θ, Θ, Tet and 6j at the root.
    Coefficients {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        root: Option<i64>,
    },
    /// Genus-1 S and T.
    ModularData {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        root: Option<i64>,
    },
    /// Genus-2 𝒥 and 𝒯.
    Genus2Matrices {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        root: Option<i64>,
        /// The unitary normalization (default).
        #[arg(long, conflicts_with = "raw")]
        normalized: bool,
        /// The non-normalized matrix Δ_{i₂}Δ_{j₂}Δ_{k₂}/(D²Θ²)·J̃.
        #[arg(long)]
        raw: bool,
    },
    /// Relation suites for genus 1 or 2.
    Verify {
        #[arg(long, default_value_t = 2)]
        genus: u32,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        root: Option<i64>,
    },
    /// tr(𝒥𝒯𝒥𝒯⁻¹) at A = e^{iπ/(r+2)} with all Galois conjugates.
    TraceTable {
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,9,11,13")]
        levels: Vec<u32>,
    },
    /// Minimal-polynomial and trace certificates for an infinite genus-2 image.
    InfiniteImage {
        #[arg(long)]
        level: u32,
        #[arg(long)]
        root: Option<i64>,
    },
    /// Evaluates a word in A, B, J inside Γ̃_q and checks the presentation.
    HeckeSl2 {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Thurston's parabolic pair from a multicurve file.
    Thurston {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Spin splitting of d_r(g) and the reducibility summands.
    SpinDims {
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 2)]
        genus: u32,
    },
}

/// A validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub precision: u32,
}

impl From<Cli> for RunConfig {
    fn from(c: Cli) -> Self {
        Self {
            command: c.command,
            format: c.format,
            precision: c.precision,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Recoupling(#[from] RecouplingError),
    #[error(transparent)]
    Genus2(#[from] Genus2Error),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Spin(#[from] SpinError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_)
            | Self::Recoupling(RecouplingError::InvalidParams(_))
            | Self::Hecke(HeckeError::InvalidQ(_) | HeckeError::Parse(_) | HeckeError::GenusRange(_))
            | Self::Spin(SpinError::NotApplicable(_)) => EXIT_USAGE,
            _ => EXIT_RUNTIME,
        }
    }
}

/// The rendered document and whether every verification in it passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: String,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            EXIT_VERIFICATION
        }
    }
}

fn params(level: u32, root: Option<i64>) -> Result<TheoryParams, CliError> {
    if level == 0 {
        return Err(CliError::Usage("--level must be at least 1".into()));
    }
    Ok(match root {
        Some(k) => TheoryParams::with_root(level, k)?,
        None => TheoryParams::unitary(level)?,
    })
}

fn report_doc(head: Value, reports: &[RelationReport]) -> Doc {
    let mut pretty = String::new();
    let mut csv = String::from("relation,pass,witness\n");
    for r in reports {
        let w = r.witness.map_or("-".to_string(), |(i, j)| format!("({i},{j})"));
        pretty.push_str(&format!(
            "{} {}{}\n",
            if r.pass { "PASS" } else { "FAIL" },
            r.relation,
            if r.pass { String::new() } else { format!("  first mismatch at {w}") }
        ));
        csv.push_str(&format!("\"{}\",{},{}\n", r.relation, r.pass, w));
    }
    let mut json = head;
    json["relations"] = serde_json::to_value(reports).expect("reports serialize");
    Doc { json, pretty, csv }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let prec = cfg.precision;
    let (doc, passed) = match &cfg.command {
        Command::Dims { genus, levels } => {
            if *genus == 0 {
                return Err(CliError::Usage("--genus must be at least 1".into()));
            }
            let mut rows = Vec::new();
            let mut pretty = format!("{:>6} {:>10}\n", "level", format!("d_r({genus})"));
            let mut csv = String::from("level,genus,dim\n");
            for &r in levels {
                let d = verlinde_dim(r, *genus)?;
                rows.push(json!({"level": r, "genus": genus, "dim": d}));
                pretty.push_str(&format!("{r:>6} {d:>10}\n"));
                csv.push_str(&format!("{r},{genus},{d}\n"));
            }
            (Doc { json: Value::Array(rows), pretty, csv }, true)
        }
        Command::Coefficients { level, root } => {
            let th = Recoupling::new(params(*level, *root)?);
            (render::coefficients_doc(coefficient_tables(&th)?, prec), true)
        }
        Command::ModularData { level, root } => {
            let md = modular_data(params(*level, *root)?);
            let mut pretty = format!(
                "level {}  A = zeta_{}^{}\nD^2 = {}\n",
                level,
                md.params.order(),
                md.params.root(),
                complex_str(md.d2().embed(), prec)
            );
            match &md.s {
                Some(s) => pretty.push_str(&format!("S =\n{}", matrix_pretty(s, prec))),
                None => pretty.push_str(&format!(
                    "D is not in Q(zeta_N); S~ = D S =\n{}",
                    matrix_pretty(&md.s_tilde, prec)
                )),
            }
            pretty.push_str(&format!("T =\n{}", matrix_pretty(&md.t, prec)));
            let csv = matrix_csv(md.s.as_ref().unwrap_or(&md.s_tilde), prec);
            let json = serde_json::to_value(&md).expect("serializes");
            (Doc { json, pretty, csv }, true)
        }
        Command::Genus2Matrices { level, root, normalized: _, raw } => {
            let rep = Genus2Rep::new(params(*level, *root)?)?;
            (render::genus2_doc(&rep, *raw, prec), true)
        }
        Command::Verify { genus, level, root } => {
            let p = params(*level, *root)?;
            let head = json!({"level": level, "genus": genus, "order": p.order(), "root": p.root()});
            let reports = match genus {
                1 => verify_genus1_relations(p),
                2 => Genus2Rep::new(p)?.verify()?,
                g => return Err(CliError::Usage(format!("verify supports genus 1 or 2, got {g}"))),
            };
            let ok = all_pass(&reports);
            (report_doc(head, &reports), ok)
        }
        Command::TraceTable { levels } => {
            if levels.contains(&0) {
                return Err(CliError::Usage("levels must be at least 1".into()));
            }
            (render::trace_doc(&trace_table(levels)?, prec), true)
        }
        Command::InfiniteImage { level, root } => {
            let rep = infinite_image_certificate(params(*level, *root)?)?;
            let ok = rep.verdict == ImageVerdict::Infinite;
            (render::certificate_doc(&rep, prec), ok)
        }
        Command::HeckeSl2 { q, word } => {
            let w = parse_word(word)?;
            let m = eval_word(&w, *q)?;
            let reports = verify_presentation(*q)?;
            let f = m.to_f64();
            let class = classify(&m);
            let head = json!({
                "q": q,
                "word": w.to_string(),
                "matrix": m,
                "approx": f,
                "trace": m.trace().to_f64(),
                "class": class,
            });
            let mut doc = report_doc(head, &reports);
            let p = prec as usize;
            doc.pretty = format!(
                "q = {q}, word = {}\n[[{:.p$}, {:.p$}],\n [{:.p$}, {:.p$}]]\ntrace {:.p$} ({class:?})\n\n{}",
                if w.0.is_empty() { "(empty)".to_string() } else { w.to_string() },
                f[0][0], f[0][1], f[1][0], f[1][1],
                m.trace().to_f64(),
                doc.pretty
            );
            (doc, all_pass(&reports))
        }
        Command::Thurston { graph } => {
            let text = std::fs::read_to_string(graph)?;
            let data: MulticurveData = text.parse()?;
            let t = thurston_rep(&data)?;
            let ok = t.residual <= 1e-10;
            let p = prec as usize;
            let pretty = format!(
                "mu = {:.p$}{}\nresidual = {:.3e}\nT_A = [[1, {:.p$}], [0, 1]]\nT_B = [[1, 0], [{:.p$}, 1]]\n",
                t.mu,
                t.mu_exact.as_ref().map_or(String::new(), |m| format!("  (exact: {m})")),
                t.residual,
                t.mu,
                -t.mu
            );
            let csv = format!("mu,residual,exact\n{},{},{}\n", t.mu, t.residual, t.mu_exact.is_some());
            let json = serde_json::to_value(&t).expect("serializes");
            (Doc { json, pretty, csv }, ok)
        }
        Command::SpinDims { level, genus } => {
            let t = spin_table(*level, *genus)?;
            let red = reducibility_report(*level, *genus).ok();
            let mut ok = t.weighted == t.total;
            let mut pretty = format!(
                "r = {level}, g = {genus}: d = {}\n  even: {} forms x d0 = {}\n  odd:  {} forms x d1 = {}\n  weighted sum = {}\n",
                t.total, t.even_forms, t.d_even, t.odd_forms, t.d_odd, t.weighted
            );
            let mut csv = format!(
                "level,genus,dim,d0,d1,even_forms,odd_forms\n{level},{genus},{},{},{},{},{}\n",
                t.total, t.d_even, t.d_odd, t.even_forms, t.odd_forms
            );
            if let Some(r) = &red {
                ok &= r.all_positive && r.sums_to_total;
                pretty.push_str(&format!(
                    "flat spin parity {}; summands {} + {} + {} = {}\n",
                    r.flat_parity,
                    r.summands[0],
                    r.summands[1],
                    r.summands[2],
                    r.summands.iter().sum::<u64>()
                ));
                csv.push_str(&format!(
                    "summands,{},{},{}\n",
                    r.summands[0], r.summands[1], r.summands[2]
                ));
            }
            let json = json!({"table": t, "reducibility": red});
            (Doc { json, pretty, csv }, ok)
        }
    };
    Ok(Outcome {
        document: doc.render(cfg.format),
        passed,
    })
}

/// Parses `args`, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match run(&cli.into()) {
        Ok(out) => {
            println!("{}", out.document);
            out.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
