//! The `liemult` command line.
//!
//! Every subcommand that takes an algebra reads it either from a file in
//! the [`format`](crate::format) syntax (`-` for stdin) or from the
//! catalogue with `--name`. `--machine` switches to tab-separated output.
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage,
//! input or computation errors.

use std::io::{Read, Write};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::algebra::LieAlgebra;
use crate::catalogue;
use crate::error::Error;
use crate::format;
use crate::hopf::{self, hall::basis_cap_from_env, Presentation, PresentationOptions};
use crate::linalg::Scalar;
use crate::multiplier;
use crate::verify::{self, VerifyOptions};

#[derive(Debug, Parser)]
#[command(
    name = "liemult",
    version,
    about = "Schur multipliers of nilpotent Lie algebras"
)]
struct Cli {
    /// Tab-separated `key<TAB>value` output instead of aligned text.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, derived subalgebra, center, series and class.
    Info(Input),
    /// dim M(L) by cohomology, with s(L), t(L) and the upper bounds.
    Multiplier(Input),
    /// dim M(L) by the Hopf formula, compared with cohomology.
    Oracle(Input),
    /// Ganea map data for a class-two algebra.
    ExactSequence(Input),
    /// Cover, epicenter and capability.
    Capability(Input),
    /// Fingerprint and matching members of the s = 5 list.
    Classify(Input),
    /// Browse or export the catalogue.
    #[command(subcommand)]
    Catalogue(CatalogueCommand),
    /// Recompute every recorded invariant of the catalogue.
    VerifyTables(VerifyArgs),
    /// Check general identities over the catalogue.
    Lemmas,
}

#[derive(Debug, Args)]
struct Input {
    /// Algebra file, or `-` for stdin.
    #[arg(required_unless_present = "name", conflicts_with = "name")]
    file: Option<String>,
    /// Catalogue entry instead of a file.
    #[arg(long)]
    name: Option<String>,
    /// Rebind a parameter, e.g. `--param eps=1/2`.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum CatalogueCommand {
    /// All entries with their sources.
    List,
    /// One entry: table and recorded invariants.
    Show { name: String },
    /// Every entry in the text format, one section each.
    Export,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Parameter values to sweep on parameterized entries.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        value_name = "LIST"
    )]
    epsilon: Option<Vec<String>>,
    /// Also compare with the Hopf formula.
    #[arg(long)]
    oracle: bool,
    /// Only records with this citation, e.g. "Table 4".
    #[arg(long, value_name = "CITATION")]
    table: Option<String>,
}

enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Printer<'a> {
    out: &'a mut dyn Write,
    machine: bool,
}

impl Printer<'_> {
    fn field(&mut self, key: &str, value: impl std::fmt::Display) {
        if self.machine {
            let _ = writeln!(self.out, "{key}\t{value}");
        } else {
            let _ = writeln!(self.out, "{key:<24} {value}");
        }
    }

    fn raw(&mut self, text: &str) {
        let _ = self.out.write_all(text.as_bytes());
    }
}

fn parse_scalar(text: &str) -> Result<Scalar, Failure> {
    Scalar::from_str(text.trim())
        .map_err(|_| Failure::Usage(format!("`{text}` is not a rational number")))
}

fn load(input: &Input) -> Result<LieAlgebra, Failure> {
    let mut file = if let Some(name) = &input.name {
        catalogue::entry(name)?.file().clone()
    } else {
        let path = input
            .file
            .as_deref()
            .expect("clap requires a file or a name");
        let text = if path == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
        };
        format::parse_algebra_file(&text)?
    };
    for binding in &input.params {
        let (key, value) = binding
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected NAME=VALUE, got `{binding}`")))?;
        file.bind(key.trim(), parse_scalar(value)?)?;
    }
    Ok(file.to_algebra()?)
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn presentation_options() -> PresentationOptions {
    PresentationOptions {
        basis_cap: basis_cap_from_env(),
        ..Default::default()
    }
}

fn info(p: &mut Printer, l: &LieAlgebra) -> Outcome {
    let series = l.central_series()?;
    let derived = l.derived_subalgebra();
    let center = l.center();
    p.field("n", l.dim());
    p.field("dim L^2", derived.dim());
    p.field("dim Z", center.dim());
    p.field("class", series.class);
    p.field("lower central series", join(&series.lower_dims()));
    p.field("upper central series", join(&series.upper_dims()));
    p.field("dim L/L^2", l.abelianization_dim());
    p.field("Z in L^2", yes_no(center.is_subspace_of(&derived)));
    let gh = match l.is_generalized_heisenberg() {
        (true, Some(rank)) => format!("yes, rank {rank}"),
        _ => "no".to_string(),
    };
    p.field("generalized Heisenberg", gh);
    Ok(())
}

fn multiplier_cmd(p: &mut Printer, l: &LieAlgebra) -> Outcome {
    let r = multiplier::multiplier_report(l)?;
    p.field("n", r.n);
    p.field("dim Z^2", r.dim_z2);
    p.field("dim B^2", r.dim_b2);
    p.field("dim M", r.dim_m);
    p.field(
        "s",
        r.s.map_or("undefined (abelian)".to_string(), |s| s.to_string()),
    );
    p.field("t", r.t);
    for check in multiplier::bound_checks(l, None)?.checks {
        p.field(
            &format!("bound {}", check.name),
            format!(
                "{} {} {}",
                check.lhs,
                if check.strict { "<" } else { "<=" },
                check.rhs
            ),
        );
    }
    Ok(())
}

fn oracle(p: &mut Printer, l: &LieAlgebra) -> Outcome {
    let cohomology = multiplier::schur_multiplier_dim(l)?;
    let pres = Presentation::with_options(l, presentation_options())?;
    let hopf_dim = pres.multiplier_dim();
    p.field("generators", pres.generator_count());
    p.field("free class", pres.class() + 1);
    p.field("dim F", pres.free().dim());
    p.field("dim R", pres.relations().dim());
    p.field("dim R ∩ F^2", pres.relations_in_derived().dim());
    p.field("dim [R,F]", pres.relation_commutators().dim());
    p.field("dim M (hopf)", hopf_dim);
    p.field("dim M (cohomology)", cohomology);
    p.field("agree", yes_no(hopf_dim == cohomology));
    if hopf_dim == cohomology {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn exact_sequence(p: &mut Printer, l: &LieAlgebra) -> Outcome {
    let g = hopf::ganea::ganea_with_options(l, presentation_options())?;
    p.field("dim L^2 ⊗ L^ab", g.dim_domain);
    p.field("rank g", g.rank_g);
    p.field("dim ker g", g.dim_ker_g());
    p.field("dim K", g.dim_k());
    p.field("K in ker g", yes_no(g.k_in_kernel()));
    p.field("dim M(L)", g.dim_multiplier);
    p.field("dim M(L^ab)", g.dim_multiplier_abelianization);
    p.field("dim L^2", g.dim_derived);
    p.field("exactness sum", g.exactness_sum());
    if g.k_in_kernel() && g.exactness_sum() == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn capability(p: &mut Printer, l: &LieAlgebra) -> Outcome {
    let c = hopf::cover_with_options(l, presentation_options())?;
    p.field("dim L", l.dim());
    p.field("dim cover", c.cover.dim());
    p.field("dim kernel", c.kernel.dim());
    p.field("kernel central", yes_no(c.kernel_is_central()));
    p.field("kernel in cover^2", yes_no(c.kernel_in_derived()));
    p.field("dim epicenter", c.epicenter.dim());
    let basis: Vec<String> = c.epicenter.basis().map(|v| v.to_string()).collect();
    p.field(
        "epicenter basis",
        if basis.is_empty() {
            "-".to_string()
        } else {
            basis.join("; ")
        },
    );
    p.field("capable", yes_no(c.is_capable));
    Ok(())
}

fn classify(p: &mut Printer, l: &LieAlgebra) -> Outcome {
    let fp = verify::fingerprint(l)?;
    let candidates = verify::classify_s5(l)?;
    p.field("fingerprint", fp);
    p.field("s", fp.s);
    p.field(
        "candidates",
        if candidates.is_empty() {
            "none".to_string()
        } else {
            candidates.join(", ")
        },
    );
    Ok(())
}

fn catalogue_cmd(p: &mut Printer, cmd: &CatalogueCommand) -> Outcome {
    match cmd {
        CatalogueCommand::List => {
            for e in catalogue::list_entries() {
                let mut notes = e.tables().join(", ");
                if !e.aliases().is_empty() {
                    notes.push_str(&format!("; aliases {}", e.aliases().join(", ")));
                }
                if e.is_quarantined() {
                    notes.push_str("; QUARANTINED");
                }
                if p.machine {
                    p.raw(&format!("{}\t{}\t{notes}\n", e.name(), e.dim()));
                } else {
                    p.raw(&format!("{:<18} {:>2}  {notes}\n", e.name(), e.dim()));
                }
            }
        }
        CatalogueCommand::Show { name } => {
            let e = catalogue::entry(name)?;
            p.field("name", e.name());
            p.field(
                "aliases",
                if e.aliases().is_empty() {
                    "-".to_string()
                } else {
                    e.aliases().join(", ")
                },
            );
            p.field("printed in", e.tables().join(", "));
            for x in e.expectations() {
                p.field(
                    &format!("expected {}", x.invariant.label()),
                    format!("{} ({})", x.invariant.expected_text(), x.source),
                );
            }
            p.raw(&format::serialize(e.file()));
        }
        CatalogueCommand::Export => p.raw(&catalogue::export()),
    }
    Ok(())
}

fn verify_tables(p: &mut Printer, args: &VerifyArgs) -> Outcome {
    let mut options = VerifyOptions {
        oracle: args.oracle,
        citation: args.table.clone(),
        ..Default::default()
    };
    if let Some(list) = &args.epsilon {
        options.epsilon_samples = list
            .iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_scalar(s))
            .collect::<Result<_, _>>()?;
    }
    report(p, &verify::verify_tables(&options))
}

fn report(p: &mut Printer, r: &verify::VerificationReport) -> Outcome {
    if p.machine {
        p.raw(&r.to_tsv());
    } else {
        p.raw(&r.to_text());
    }
    if r.is_success() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                2
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    let mut p = Printer {
        out,
        machine: cli.machine,
    };
    let outcome = match &cli.command {
        Command::Info(input) => load(input).and_then(|l| info(&mut p, &l)),
        Command::Multiplier(input) => load(input).and_then(|l| multiplier_cmd(&mut p, &l)),
        Command::Oracle(input) => load(input).and_then(|l| oracle(&mut p, &l)),
        Command::ExactSequence(input) => load(input).and_then(|l| exact_sequence(&mut p, &l)),
        Command::Capability(input) => load(input).and_then(|l| capability(&mut p, &l)),
        Command::Classify(input) => load(input).and_then(|l| classify(&mut p, &l)),
        Command::Catalogue(cmd) => catalogue_cmd(&mut p, cmd),
        Command::VerifyTables(args) => verify_tables(&mut p, args),
        Command::Lemmas => report(&mut p, &verify::lemma_suite()),
    };
    match outcome {
        Ok(()) => 0,
        Err(Failure::Mismatch) => 1,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("liemult").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn info_by_name() {
        let (code, out, _) = run_capture(&["--machine", "info", "--name", "37B"]);
        assert_eq!(code, 0);
        assert!(out.contains("n\t7\n"));
        assert!(out.contains("dim L^2\t3\n"));
        assert!(out.contains("dim Z\t3\n"));
        assert!(out.contains("class\t2\n"));
    }

    #[test]
    fn multiplier_with_param() {
        let (code, out, _) = run_capture(&[
            "--machine",
            "multiplier",
            "--name",
            "L_{6,22}",
            "--param",
            "eps=0",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("dim M\t8\n"), "{out}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(run_capture(&["info", "--name", "nope"]).0, 2);
        assert_eq!(
            run_capture(&["info", "--name", "37B", "--param", "eps=1"]).0,
            2
        );
        assert_eq!(run_capture(&["exact-sequence", "--name", "L_{5,7}"]).0, 2);
        assert_eq!(run_capture(&["info", "/nonexistent/file"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }
}
