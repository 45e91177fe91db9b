//! `wmotzkin`: enumerate plane trees and lattice paths, map trees to
//! 2-Motzkin paths, sum weights and check the Catalan/Narayana identities.
//!
//! Exit codes: 0 success, 1 verification failure or invariant violation,
//! 2 usage or parse error.

mod render;

use std::fmt;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use weighted_motzkin::enumeration::{count_only, Family};
use weighted_motzkin::identities::{self, verify_range, IdentityId};
use weighted_motzkin::weights::{self, EdgeWeighting, MotzkinWeighting, StepWeighting};
use weighted_motzkin::{
    category_census, phi, phi_inverse, DyckPath, MotzkinPath, PlaneTree, Poly, TwoMotzkinPath,
};

#[derive(Parser)]
#[command(
    name = "wmotzkin",
    version,
    about = "Plane trees, weighted 2-Motzkin paths and Narayana identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of a family at a given size.
    Enumerate(EnumerateArgs),
    /// Map a tree to its 2-Motzkin path, or a path back to its tree.
    Map(MapArgs),
    /// Total weight of a family under a weighting.
    Weightsum(WeightsumArgs),
    /// Check an identity for n = 1..=n-max, one JSON report per line.
    Verify(VerifyArgs),
    /// Coefficient tables as CSV.
    Table(TableArgs),
    /// Integer sequences as CSV.
    Sequence(SequenceArgs),
    /// Draw a tree or a path.
    Render(RenderArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// trees | 2motzkin | motzkin | dyck | mdyck
    #[arg(long)]
    family: Family,
    /// Edges for trees, semilength for dyck/mdyck, length otherwise.
    #[arg(long)]
    size: usize,
    #[arg(long)]
    count_only: bool,
    /// Emit {"index": i, "encoding": "..."} lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["tree", "path"])))]
struct MapArgs {
    #[arg(long, allow_hyphen_values = true)]
    tree: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    path: Option<String>,
    /// Required with --path: map a 2-Motzkin path back to its tree.
    #[arg(long)]
    inverse: bool,
    /// Also print the edge-category counts of the tree as JSON.
    #[arg(long)]
    census: bool,
}

#[derive(Args)]
struct WeightsumArgs {
    /// trees | 2motzkin | motzkin
    #[arg(long)]
    family: Family,
    #[arg(long)]
    size: usize,
    /// theorem1 | theorem2 | path to a JSON weighting
    #[arg(long)]
    weighting: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// eq1 | eq2 | eq3 | thm1 | thm2 | eq7
    #[arg(long)]
    identity: IdentityId,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n_max: u64,
    /// Also compare against exhaustive enumeration for n <= this.
    #[arg(long, default_value_t = 0)]
    oracle_max: u64,
}

#[derive(Args)]
#[command(group(ArgGroup::new("table").required(true).args(["lambda", "narayana"])))]
struct TableArgs {
    /// Multiple Dyck paths of semilength n by number of runs.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    lambda: Option<u64>,
    /// Narayana numbers N(n, k) for k = 1..=n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    narayana: Option<u64>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("seq").required(true).args(["dn", "catalan"])))]
struct SequenceArgs {
    /// Number of multiple Dyck paths of semilength n.
    #[arg(long)]
    dn: bool,
    #[arg(long)]
    catalan: bool,
    #[arg(long)]
    n_max: u64,
}

#[derive(Args)]
#[command(group(ArgGroup::new("object").required(true).args(["tree", "path"])))]
struct RenderArgs {
    #[arg(long, allow_hyphen_values = true)]
    tree: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    path: Option<String>,
    /// Path alphabet: 2motzkin | motzkin | dyck
    #[arg(long, default_value = "2motzkin")]
    kind: Family,
    /// Also write a static SVG drawing to this file.
    #[arg(long)]
    svg: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Failure(String),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<weighted_motzkin::Error> for CliError {
    fn from(e: weighted_motzkin::Error) -> Self {
        CliError::Usage(format!("{}: {e}", e.kind()))
    }
}

type CliResult = Result<(), CliError>;

#[derive(Serialize)]
struct IndexedEncoding {
    index: usize,
    encoding: String,
}

fn cmd_enumerate(args: &EnumerateArgs, out: &mut impl Write) -> CliResult {
    if args.count_only {
        writeln!(out, "{}", count_only(args.family, args.size))?;
        return Ok(());
    }
    for (index, encoding) in args.family.encodings(args.size).enumerate() {
        if args.json {
            let line = IndexedEncoding { index, encoding };
            writeln!(
                out,
                "{}",
                serde_json::to_string(&line).expect("plain struct")
            )?;
        } else {
            writeln!(out, "{encoding}")?;
        }
    }
    Ok(())
}

fn cmd_map(args: &MapArgs, out: &mut impl Write) -> CliResult {
    let tree = match (&args.tree, &args.path) {
        (Some(enc), _) => {
            if args.inverse {
                return Err(CliError::Usage("--inverse applies to --path".into()));
            }
            let tree: PlaneTree = enc.parse()?;
            writeln!(out, "{}", phi(&tree)?)?;
            tree
        }
        (None, Some(enc)) => {
            if !args.inverse {
                return Err(CliError::Usage("mapping a path needs --inverse".into()));
            }
            let path: TwoMotzkinPath = enc.parse()?;
            let tree = phi_inverse(&path);
            if phi(&tree)? != path {
                return Err(CliError::Failure(format!("roundtrip failed for {path}")));
            }
            writeln!(out, "{tree}")?;
            tree
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    if args.census {
        let census = category_census(&tree)?;
        writeln!(
            out,
            "{}",
            serde_json::to_string(&census).expect("plain struct")
        )?;
    }
    Ok(())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CustomWeighting {
    Edge(EdgeWeighting),
    Step(StepWeighting),
    Motzkin(MotzkinWeighting),
}

fn load_weighting(spec: &str) -> Result<CustomWeighting, CliError> {
    match spec {
        "theorem1" => Ok(CustomWeighting::Edge(weights::theorem1_edge_weights())),
        "theorem2" => Ok(CustomWeighting::Edge(weights::theorem2_edge_weights())),
        file => {
            let text = fs::read_to_string(file)
                .map_err(|e| CliError::Usage(format!("cannot read weighting {file}: {e}")))?;
            serde_json::from_str(&text).map_err(|e| {
                CliError::Usage(format!(
                    "{file}: expected keys Up/Down/StraightLevel/WavyLevel, Up/Down/Level, \
                     or the five edge categories ({e})"
                ))
            })
        }
    }
}

fn agree(fast: Poly, slow: Poly, what: &str) -> Result<Poly, CliError> {
    if fast != slow {
        return Err(CliError::Failure(format!(
            "{what}: transfer matrix gives {fast}, enumeration gives {slow}"
        )));
    }
    Ok(slow)
}

fn cmd_weightsum(args: &WeightsumArgs, out: &mut impl Write) -> CliResult {
    let weighting = load_weighting(&args.weighting)?;
    let total = match args.family {
        Family::PlaneTrees => {
            let w = match weighting {
                CustomWeighting::Edge(w) => w,
                CustomWeighting::Step(s) => EdgeWeighting {
                    non_terminal_interior: s.up,
                    non_terminal_exterior: s.straight_level,
                    terminal_interior: s.wavy_level,
                    terminal_exterior: s.down,
                    critical: Poly::one(),
                },
                CustomWeighting::Motzkin(_) => {
                    return Err(CliError::Usage(
                        "a Motzkin weighting does not apply to trees".into(),
                    ))
                }
            };
            agree(
                weights::total_tree_weight_dp(args.size, &w)?,
                weights::total_tree_weight(args.size, &w)?,
                "tree total",
            )?
        }
        Family::TwoMotzkin => {
            let w = match weighting {
                CustomWeighting::Edge(w) => w.transported(),
                CustomWeighting::Step(s) => s,
                CustomWeighting::Motzkin(_) => {
                    return Err(CliError::Usage(
                        "a Motzkin weighting does not apply to 2-Motzkin paths".into(),
                    ))
                }
            };
            agree(
                weights::total_path_weight_dp(args.size, &w),
                weights::total_path_weight(args.size, &w),
                "2-Motzkin total",
            )?
        }
        Family::Motzkin => {
            let w = match weighting {
                CustomWeighting::Edge(w) => weights::merge_levels(&w.transported()),
                CustomWeighting::Step(s) => weights::merge_levels(&s),
                CustomWeighting::Motzkin(m) => m,
            };
            agree(
                weights::total_motzkin_weight_dp(args.size, &w),
                weights::total_motzkin_weight(args.size, &w),
                "Motzkin total",
            )?
        }
        other => {
            return Err(CliError::Usage(format!(
                "weightsum supports trees, 2motzkin and motzkin, not {other}"
            )))
        }
    };
    writeln!(out, "{total}")?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut impl Write) -> CliResult {
    let reports = verify_range(args.identity, args.n_max, args.oracle_max);
    let mut first_failure = None;
    for r in &reports {
        writeln!(out, "{}", serde_json::to_string(r).expect("plain struct"))?;
        if first_failure.is_none() {
            first_failure = r.first_mismatch().map(|(side, exp, a, b)| {
                format!(
                    "{} n={}: coefficient of x^{exp} is {a} on the left, {b} in the {side}",
                    r.identity, r.n
                )
            });
        }
    }
    match first_failure {
        Some(msg) => Err(CliError::Failure(msg)),
        None => Ok(()),
    }
}

fn cmd_table(args: &TableArgs, out: &mut impl Write) -> CliResult {
    if let Some(n) = args.lambda {
        writeln!(out, "j,lambda")?;
        for (j, count) in identities::lambda_table(n) {
            writeln!(out, "{j},{count}")?;
        }
    } else if let Some(n) = args.narayana {
        writeln!(out, "k,narayana")?;
        for k in 1..=n {
            writeln!(out, "{k},{}", identities::narayana(n, k as i64))?;
        }
    }
    Ok(())
}

fn cmd_sequence(args: &SequenceArgs, out: &mut impl Write) -> CliResult {
    if args.dn {
        writeln!(out, "n,d_n")?;
        for n in 0..=args.n_max {
            writeln!(out, "{n},{}", identities::multiple_dyck_count(n))?;
        }
    } else {
        writeln!(out, "n,catalan")?;
        for n in 0..=args.n_max {
            writeln!(out, "{n},{}", identities::catalan(n))?;
        }
    }
    Ok(())
}

fn cmd_render(args: &RenderArgs, out: &mut impl Write) -> CliResult {
    let (text, svg) = match (&args.tree, &args.path) {
        (Some(enc), _) => {
            let t: PlaneTree = enc.parse()?;
            (render::tree_ascii(&t), render::tree_svg(&t))
        }
        (None, Some(enc)) => match args.kind {
            Family::TwoMotzkin => {
                let p: TwoMotzkinPath = enc.parse()?;
                (render::path_ascii(&p), render::path_svg(&p))
            }
            Family::Motzkin => {
                let p: MotzkinPath = enc.parse()?;
                (render::path_ascii(&p), render::path_svg(&p))
            }
            Family::Dyck => {
                let p: DyckPath = enc.parse()?;
                (render::path_ascii(&p), render::path_svg(&p))
            }
            other => {
                return Err(CliError::Usage(format!(
                    "render draws 2motzkin, motzkin or dyck paths, not {other}"
                )))
            }
        },
        (None, None) => unreachable!("clap requires one input"),
    };
    out.write_all(text.as_bytes())?;
    if let Some(file) = &args.svg {
        fs::write(file, svg)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", file.display())))?;
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut impl Write) -> CliResult {
    match &cli.command {
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Map(a) => cmd_map(a, out),
        Command::Weightsum(a) => cmd_weightsum(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Sequence(a) => cmd_sequence(a, out),
        Command::Render(a) => cmd_render(a, out),
    }
}

fn exit_code(e: &CliError) -> u8 {
    match e {
        CliError::Io(io) if io.kind() == io::ErrorKind::BrokenPipe => 0,
        CliError::Usage(_) => 2,
        CliError::Failure(_) | CliError::Io(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    drop(out);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let code = exit_code(&e);
            if code != 0 {
                eprintln!("error: {e}");
            }
            ExitCode::from(code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disagreement_is_a_failure() {
        let err = agree(Poly::x(), Poly::one(), "total").unwrap_err();
        assert_eq!(exit_code(&err), 1);
        assert!(err.to_string().contains("total"));
        assert_eq!(agree(Poly::x(), Poly::x(), "total").unwrap(), Poly::x());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&CliError::Usage("bad".into())), 2);
        assert_eq!(exit_code(&CliError::Failure("bad".into())), 1);
        let pipe = io::Error::from(io::ErrorKind::BrokenPipe);
        assert_eq!(exit_code(&CliError::Io(pipe)), 0);
        let other = io::Error::from(io::ErrorKind::PermissionDenied);
        assert_eq!(exit_code(&CliError::Io(other)), 1);
    }
}
