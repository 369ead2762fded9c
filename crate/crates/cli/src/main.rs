//! `superlie`: exact computations with Lie superalgebras from JSON files.
//!
//! Exit status is 0 when everything checked is certified, 1 on a
//! mathematical failure and 2 on unusable input.

mod commands;
mod files;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use superlie::verify::Suite;
use superlie::Error;

use commands::{HomologyArgs, TensorArgs};
use files::Loader;
use report::{Report, EXIT_INPUT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "superlie", version, about = "Exact non-abelian tensor products and homology of Lie superalgebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    out: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a Lie or associative superalgebra file.
    Check { file: PathBuf },
    /// Non-abelian tensor product M ⊗ N; without N, the tensor square with adjoint actions.
    Tensor {
        m: PathBuf,
        n: Option<PathBuf>,
        /// Action of M on N.
        #[arg(long)]
        act_mn: Option<PathBuf>,
        /// Action of N on M.
        #[arg(long)]
        act_nm: Option<PathBuf>,
        /// Also build the exterior square.
        #[arg(long)]
        exterior: bool,
        /// Also build the universal central extension and compare with H₂.
        #[arg(long)]
        uce: bool,
        /// Write the tensor product as an algebra file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Exterior square P ∧ P.
    Exterior { p: PathBuf },
    /// Universal central extension of a perfect P.
    Uce { p: PathBuf },
    /// Chevalley–Eilenberg homology H₀..H_N.
    Homology {
        p: PathBuf,
        /// Top degree.
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        /// Coefficients: a module file or `adjoint`; trivial if absent.
        #[arg(short = 'm')]
        module: Option<String>,
        /// Presentation of P for the Hopf formula.
        #[arg(long, requires = "class")]
        hopf: Option<PathBuf>,
        /// Nilpotency class bound for the Hopf formula.
        #[arg(long)]
        class: Option<usize>,
        /// Crossed module file, or `identity`.
        #[arg(long)]
        nonabelian: Option<String>,
    },
    /// Non-abelian homology of a crossed module over P.
    Nahomology {
        p: PathBuf,
        /// Crossed module file, or `identity`.
        crossed: String,
    },
    /// H₂ of a presented algebra by the Hopf formula.
    Hopf {
        presentation: PathBuf,
        #[arg(long)]
        class: usize,
    },
    /// Cyclic homology HC₀, HC₁ and HC₁^M of a unital associative superalgebra.
    Cyclic {
        a: PathBuf,
        /// Also run the six-term sequence through V(A).
        #[arg(long)]
        sixterm: bool,
    },
    /// Same as `cyclic --sixterm`.
    CyclicSixterm { a: PathBuf },
    /// Run a verification suite over the bundled examples, or `all`.
    Verify { suite: String },
    /// Run every exact-sequence suite.
    VerifySequence,
    /// Write a bundled example as an algebra file.
    Export {
        /// Example name; omit with --dir to write all of them.
        name: Option<String>,
        /// Output file; stdout if absent.
        #[arg(short = 'o')]
        output: Option<PathBuf>,
        /// Write every example into this directory.
        #[arg(long, conflicts_with_all = ["name", "output"])]
        dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (name, outcome, loader) = run(cli.command);
    let report = match outcome {
        Ok((summary, sections)) => Report::finish(name, raw, loader.digests, summary, sections),
        Err(e) => Report::failed(name, raw, loader.digests, &e),
    };
    match cli.out {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code as u8)
}

fn run(command: Command) -> (&'static str, commands::Outcome, Loader) {
    let mut loader = Loader::default();
    let l = &mut loader;
    let (name, outcome) = match command {
        Command::Check { file } => ("check", commands::check(l, &file)),
        Command::Tensor { m, n, act_mn, act_nm, exterior, uce, emit } => {
            ("tensor", commands::tensor(l, &TensorArgs { m, n, act_mn, act_nm, exterior, uce, emit }))
        }
        Command::Exterior { p } => ("exterior", commands::tensor(l, &square(p, true, false))),
        Command::Uce { p } => ("uce", commands::tensor(l, &square(p, false, true))),
        Command::Homology { p, n, module, hopf, class, nonabelian } => {
            ("homology", commands::homology(l, &HomologyArgs { p, n, module, hopf, class, nonabelian }))
        }
        Command::Nahomology { p, crossed } => {
            let args = HomologyArgs { p, n: 1, module: None, hopf: None, class: None, nonabelian: Some(crossed) };
            ("nahomology", commands::homology(l, &args))
        }
        Command::Hopf { presentation, class } => ("hopf", commands::hopf(l, &presentation, class)),
        Command::Cyclic { a, sixterm } => ("cyclic", commands::cyclic(l, &a, sixterm)),
        Command::CyclicSixterm { a } => ("cyclic-sixterm", commands::cyclic(l, &a, true)),
        Command::Verify { suite } => ("verify", suites(&suite).and_then(|s| commands::verify(&s))),
        Command::VerifySequence => {
            ("verify-sequence", commands::verify(&[Suite::Snake, Suite::CyclicSixterm, Suite::FinalSixterm]))
        }
        Command::Export { name, output, dir } => ("export", export(name, output, dir)),
    };
    (name, outcome, loader)
}

fn square(p: PathBuf, exterior: bool, uce: bool) -> TensorArgs {
    TensorArgs { m: p, n: None, act_mn: None, act_nm: None, exterior, uce, emit: None }
}

fn suites(id: &str) -> superlie::Result<Vec<Suite>> {
    if id == "all" {
        Ok(Suite::ALL.to_vec())
    } else {
        Ok(vec![id.parse()?])
    }
}

fn export(name: Option<String>, output: Option<PathBuf>, dir: Option<PathBuf>) -> commands::Outcome {
    match (name, dir) {
        (Some(name), None) => commands::export(&name, output.as_deref()),
        (None, Some(dir)) => {
            let mut sections = Vec::new();
            for name in commands::catalog_names() {
                let path = Path::new(&dir).join(format!("{name}.json"));
                sections.extend(commands::export(name, Some(&path))?.1);
            }
            Ok((format!("exported {} examples", sections.len()), sections))
        }
        _ => Err(Error::Input("give an example name or --dir".into())),
    }
}
