//! The `charclass` command line, as a library function so it can be driven
//! in-process. Every subcommand is a thin wrapper around library calls on
//! the parsed workspace.
//!
//! Exit codes: `0` success, `1` validation or computation failure, `2` parse
//! or usage error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::characteristic::{
    chern_weil, cohomology_space, secondary_class, verify_main_theorem, InvarianceMode,
};
use crate::extension::{section_curvature, Section};
use crate::io::{class_json, class_text, cochain_json, cochain_text, parse_workspace, Workspace};
use crate::lie::Representation;
use crate::multilinear::SymMultiMap;
use crate::Error;

#[derive(Parser, Debug)]
#[command(name = "charclass", version, about = "Exact Lie algebra cohomology and characteristic classes")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    output: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Invariance {
    Section,
    Strict,
}

impl From<Invariance> for InvarianceMode {
    fn from(i: Invariance) -> Self {
        match i {
            Invariance::Section => InvarianceMode::Section,
            Invariance::Strict => InvarianceMode::Strict,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a workspace file.
    Validate { file: String },
    /// Cohomology H^p(g, V) of an algebra with coefficients in a representation.
    Cohomology {
        file: String,
        #[arg(long)]
        algebra: String,
        /// Representation of the algebra; the trivial line by default.
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        degree: usize,
    },
    /// Curvature of a section, in kernel coordinates.
    Curvature {
        file: String,
        #[arg(long)]
        extension: String,
        #[arg(long)]
        section: String,
    },
    /// Primary characteristic class (1/p!)[f_σ].
    ChernWeil {
        file: String,
        #[arg(long)]
        extension: String,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        section: String,
        /// Representation of the base algebra; trivial by default.
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, value_enum, default_value_t = Invariance::Section)]
        invariance: Invariance,
    },
    /// Secondary characteristic class of two sections.
    Secondary {
        file: String,
        #[arg(long)]
        extension: String,
        #[arg(long)]
        poly: String,
        /// Two section names, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sections: Vec<String>,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long, value_enum, default_value_t = Invariance::Section)]
        invariance: Invariance,
    },
    /// Compare both sides of the homotopy formula for Δ_f.
    VerifyTheorem {
        file: String,
        #[arg(long)]
        extension: String,
        #[arg(long)]
        poly: String,
        /// At least two section names, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sections: Vec<String>,
        #[arg(long)]
        rep: Option<String>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { 2 } else { 1 };
        CommandOutcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Runs the command line `args`, whose first element is the program name.
pub fn run_command<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutcome::ok(text)
            } else {
                CommandOutcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => CommandOutcome::error(&e),
    }
}

fn load(file: &str) -> Result<Workspace, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::Parse(format!("cannot read {file}: {e}")))?;
    parse_workspace(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{file}: {msg}")),
        other => other,
    })
}

fn render(format: OutputFormat, json: Value, text: String) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&json).expect("value serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => text,
    }
}

/// The named representation, or the trivial one of dimension `dim`.
fn coefficients(
    ws: &Workspace,
    rep: Option<&str>,
    base: &crate::lie::LieAlgebra,
    dim: usize,
) -> Result<Representation, Error> {
    match rep {
        Some(name) => {
            let r = ws.representation(name)?;
            if r.algebra() != base {
                return Err(Error::validation(
                    format!("representation '{name}'"),
                    "does not act on the base algebra of the extension",
                ));
            }
            Ok(r.clone())
        }
        None => Ok(Representation::trivial(base.clone(), dim)),
    }
}

struct ClassInputs<'a> {
    ext: &'a crate::extension::Extension,
    f: &'a SymMultiMap,
    sections: Vec<Section>,
    rep: Representation,
}

fn class_inputs<'a>(
    ws: &'a Workspace,
    extension: &str,
    poly: &str,
    sections: &[String],
    rep: Option<&str>,
) -> Result<ClassInputs<'a>, Error> {
    let ext = ws.extension(extension)?;
    let f = ws.polynomial(poly)?;
    let entry = &ws.polynomials()[poly];
    let kernel_name = &ws.extensions()[extension].kernel;
    if &entry.algebra != kernel_name {
        return Err(Error::validation(
            format!("polynomial '{poly}'"),
            format!("is defined on '{}', not on the kernel '{kernel_name}'", entry.algebra),
        ));
    }
    let sections =
        sections.iter().map(|s| ws.section(s, extension).cloned()).collect::<Result<Vec<_>, _>>()?;
    let rep = coefficients(ws, rep, ext.base(), f.target_dim())?;
    Ok(ClassInputs { ext, f, sections, rep })
}

fn execute(cli: &Cli) -> Result<CommandOutcome, Error> {
    let fmt = cli.output;
    match &cli.command {
        Command::Validate { file } => {
            let ws = load(file)?;
            let names = |m: Vec<&String>| m.into_iter().cloned().collect::<Vec<_>>();
            let json = json!({
                "valid": true,
                "algebras": names(ws.algebras().keys().collect()),
                "representations": names(ws.representations().keys().collect()),
                "extensions": names(ws.extensions().keys().collect()),
                "sections": names(ws.sections().keys().collect()),
                "polynomials": names(ws.polynomials().keys().collect()),
            });
            let text = format!(
                "ok: {} algebras, {} representations, {} extensions, {} sections, {} polynomials\n",
                ws.algebras().len(),
                ws.representations().len(),
                ws.extensions().len(),
                ws.sections().len(),
                ws.polynomials().len()
            );
            Ok(CommandOutcome::ok(render(fmt, json, text)))
        }
        Command::Cohomology { file, algebra, rep, degree } => {
            let ws = load(file)?;
            let g = ws.algebra(algebra)?;
            let rep = coefficients(&ws, rep.as_deref(), g, 1)?;
            let h = cohomology_space(&rep, *degree);
            let names = g.basis_names();
            let basis: Vec<Value> = h.class_basis().iter().map(|c| cochain_json(c, names)).collect();
            let json = json!({
                "degree": degree,
                "h_dim": h.h_dim(),
                "cocycles_dim": h.cocycle_basis().len(),
                "coboundaries_dim": h.coboundary_basis().len(),
                "class_basis": basis,
            });
            let mut text = format!(
                "degree: {degree}\nh_dim: {}\ncocycles_dim: {}\ncoboundaries_dim: {}\n",
                h.h_dim(),
                h.cocycle_basis().len(),
                h.coboundary_basis().len()
            );
            for (i, c) in h.class_basis().iter().enumerate() {
                text.push_str(&format!("class {i}:\n"));
                for line in cochain_text(c, names).lines() {
                    text.push_str(&format!("  {line}\n"));
                }
            }
            Ok(CommandOutcome::ok(render(fmt, json, text)))
        }
        Command::Curvature { file, extension, section } => {
            let ws = load(file)?;
            let ext = ws.extension(extension)?;
            let sigma = ws.section(section, extension)?;
            let r = section_curvature(ext, sigma)?;
            let names = ext.base().basis_names();
            let json = json!({
                "kernel_basis": ext.kernel().basis_names(),
                "curvature": cochain_json(&r, names),
            });
            let text = format!(
                "kernel basis: [{}]\ncurvature:\n{}",
                ext.kernel().basis_names().join(", "),
                indent(&cochain_text(&r, names))
            );
            Ok(CommandOutcome::ok(render(fmt, json, text)))
        }
        Command::ChernWeil { file, extension, poly, section, rep, invariance } => {
            let ws = load(file)?;
            let inp = class_inputs(&ws, extension, poly, std::slice::from_ref(section), rep.as_deref())?;
            let class = chern_weil(inp.ext, inp.f, &inp.sections[0], &inp.rep, (*invariance).into())?;
            let names = inp.ext.base().basis_names();
            Ok(CommandOutcome::ok(render(fmt, class_json(&class, names), class_text(&class, names))))
        }
        Command::Secondary { file, extension, poly, sections, rep, invariance } => {
            if sections.len() != 2 {
                return Err(Error::Parse(format!(
                    "--sections takes exactly two names, got {}",
                    sections.len()
                )));
            }
            let ws = load(file)?;
            let inp = class_inputs(&ws, extension, poly, sections, rep.as_deref())?;
            let class = secondary_class(
                inp.ext,
                inp.f,
                &inp.sections[0],
                &inp.sections[1],
                &inp.rep,
                (*invariance).into(),
            )?;
            let names = inp.ext.base().basis_names();
            Ok(CommandOutcome::ok(render(fmt, class_json(&class, names), class_text(&class, names))))
        }
        Command::VerifyTheorem { file, extension, poly, sections, rep } => {
            if sections.len() < 2 {
                return Err(Error::Parse(format!(
                    "--sections takes at least two names, got {}",
                    sections.len()
                )));
            }
            let ws = load(file)?;
            let inp = class_inputs(&ws, extension, poly, sections, rep.as_deref())?;
            let report = verify_main_theorem(inp.ext, inp.f, &inp.sections, &inp.rep)?;
            let names = inp.ext.base().basis_names();
            let sign = match report.sign() {
                Some(1) => "+",
                Some(_) => "-",
                None => "none",
            };
            let json = json!({
                "equal": report.equal(),
                "matches_plus": report.matches_plus,
                "matches_minus": report.matches_minus,
                "sign": sign,
                "invariance_warning": report.invariance_warning,
                "lhs": cochain_json(&report.lhs, names),
                "rhs": cochain_json(&report.rhs, names),
                "difference": cochain_json(&report.difference, names),
            });
            let text = format!(
                "equal: {}\nsign: {sign}\ninvariance_warning: {}\nlhs:\n{}rhs:\n{}",
                report.equal(),
                report.invariance_warning,
                indent(&cochain_text(&report.lhs, names)),
                indent(&cochain_text(&report.rhs, names))
            );
            let mut out = CommandOutcome::ok(render(fmt, json, text));
            if !report.equal() {
                out.code = 1;
            }
            Ok(out)
        }
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}
