use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use mds_selfdual::census::{self, CensusOptions, LengthCap};
use mds_selfdual::construct::{
    build, build_theorem4, field_for, ConstructionParams, CosetParams, Family, SubspaceParams,
};
use mds_selfdual::duality::{self, MdsMode, MdsOptions, Witness};
use mds_selfdual::grs::generator_matrix;
use mds_selfdual::FieldContext;

use crate::census_json::{CensusFile, SourceSelection};
use crate::codefile::CodeFile;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "mds-selfdual", version, about = "Construct and verify MDS self-dual GRS codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code from one of the four families and write it as JSON.
    Construct(ConstructArgs),
    /// Check self-duality and the MDS property of a code file.
    Verify(VerifyArgs),
    /// List the even lengths reachable over F_q.
    Census(CensusArgs),
    /// Print the generator matrix of a code file.
    Matrix(MatrixArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Family: 1 (n = tm), 2 (n = tm + 1), 3 (n = tm + 2), 4 (n = 2tp^e).
    #[arg(long)]
    pub theorem: u8,
    /// Square root of q (families 1 to 3).
    #[arg(long)]
    pub r: Option<u64>,
    /// Order of the root of unity (families 1 to 3).
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub t: u64,
    /// Characteristic (family 4).
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree, q = p^mdeg (family 4).
    #[arg(long)]
    pub mdeg: Option<u32>,
    /// Subspace dimension (family 4).
    #[arg(long)]
    pub e: Option<u32>,
    /// Accept e = 0 in family 4.
    #[arg(long)]
    pub allow_e0: bool,
    /// Output path; without it the code file goes to stdout and the summary to stderr.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MdsArg {
    Auto,
    Exhaustive,
    Minors,
    Structural,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub mds: MdsArg,
    /// Column subsets checked in lexicographic order before sampling.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Random column subsets checked after the lexicographic ones.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SourceArg {
    New,
    Known,
    Both,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long, value_enum, default_value = "both")]
    pub source: SourceArg,
    /// Let family 4 use e = 0.
    #[arg(long)]
    pub include_e0: bool,
    /// Drop n = 2 from every rule.
    #[arg(long)]
    pub no_n2: bool,
    /// Largest length counted.
    #[arg(long, default_value = "q+1", value_parser = ["q+1", "q-1", "q-2"])]
    pub max_len: String,
    /// Write the JSON report here and print a summary instead.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MatrixFormat {
    Rows,
    Csv,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "rows")]
    pub format: MatrixFormat,
}

/// Runs one command and returns its exit code. Errors carry their own.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Census(a) => census_cmd(a),
        Command::Matrix(a) => matrix(a),
    }
}

fn read_code_file(path: &Path) -> Result<(CodeFile, FieldContext, mds_selfdual::CodeSpec), CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file = CodeFile::from_json(&text)?;
    let (ctx, code) = file.load()?;
    Ok((file, ctx, code))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn construct_params(a: &ConstructArgs) -> Result<ConstructionParams, CliError> {
    let usage = |msg: &str| Err(CliError::Input(msg.to_string()));
    match a.theorem {
        1..=3 => {
            if a.p.is_some() || a.mdeg.is_some() || a.e.is_some() {
                return usage("--p, --mdeg and --e only apply to theorem 4");
            }
            let (Some(r), Some(m)) = (a.r, a.m) else {
                return usage("theorems 1 to 3 need --r and --m");
            };
            let family = Family::from_theorem(a.theorem).expect("checked range");
            Ok(ConstructionParams::Coset(CosetParams { r, m, t: a.t, family }))
        }
        4 => {
            if a.r.is_some() || a.m.is_some() {
                return usage("--r and --m only apply to theorems 1 to 3");
            }
            let (Some(p), Some(mdeg), Some(e)) = (a.p, a.mdeg, a.e) else {
                return usage("theorem 4 needs --p, --mdeg and --e");
            };
            Ok(ConstructionParams::Subspace(SubspaceParams { p, mdeg, t: a.t, e }))
        }
        other => usage(&format!("--theorem must be 1, 2, 3 or 4, got {other}")),
    }
}

fn construct(a: ConstructArgs) -> Result<u8, CliError> {
    let params = construct_params(&a)?;
    // Check the parameters before building a possibly large field.
    match &params {
        ConstructionParams::Coset(c) => c.validate()?,
        ConstructionParams::Subspace(s) => s.validate_with(a.allow_e0)?,
    }
    let ctx = field_for(&params)?;
    let c = match &params {
        ConstructionParams::Subspace(s) if !a.allow_e0 => build_theorem4(&ctx, s)?,
        _ => build(&ctx, &params)?,
    };
    let file = CodeFile::from_construction(&ctx, &c);
    let summary = format!("n = {}\nk = {}\nq = {}\nlambda = {}\n", c.code.len(), c.code.k, ctx.q(), c.lambda);
    match &a.out {
        Some(path) => {
            write_file(path, &file.to_json())?;
            print!("{summary}");
        }
        None => {
            eprint!("{summary}");
            print!("{}", file.to_json());
        }
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, CliError> {
    let (_, ctx, code) = read_code_file(&a.input)?;
    let mut opts = MdsOptions {
        mode: match a.mds {
            MdsArg::Auto => MdsMode::Auto,
            MdsArg::Exhaustive => MdsMode::Exhaustive,
            MdsArg::Minors => MdsMode::Minors,
            MdsArg::Structural => MdsMode::Structural,
        },
        ..MdsOptions::default()
    };
    if let Some(b) = a.budget {
        opts.budget = b;
    }
    if let Some(r) = a.random {
        opts.random_minors = r;
    }
    if let Some(s) = a.seed {
        opts.seed = s;
    }
    let report = duality::verify(&ctx, &code, &opts)?;
    let mds = &report.mds;
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", code.len());
    let _ = writeln!(out, "k = {}", code.k);
    let _ = writeln!(out, "q = {}", ctx.q());
    let _ = writeln!(out, "self_dual = {}", report.self_dual);
    let _ = writeln!(out, "mds = {}", mds.verdict.as_str());
    match mds.min_distance {
        Some(d) => {
            let _ = writeln!(out, "min_distance = {d}");
        }
        None => out.push_str("min_distance = unknown\n"),
    }
    let _ = writeln!(out, "checked_minors = {}", mds.checked_minors);
    let _ = writeln!(out, "random_minors = {}", mds.random_minors);
    if let Some(w) = &mds.witness {
        let joined = |xs: Vec<String>| xs.join(" ");
        let line = match w {
            Witness::Structure(msg) => format!("structure: {msg}"),
            Witness::Codeword(word) => format!("codeword {}", joined(word.iter().map(|x| x.to_string()).collect())),
            Witness::Minor(cols) => {
                format!("singular minor on columns {}", joined(cols.iter().map(|c| c.to_string()).collect()))
            }
        };
        let _ = writeln!(out, "witness = {line}");
    }
    let _ = writeln!(out, "result = {}", if report.passed() { "pass" } else { "fail" });
    print!("{out}");
    Ok(if report.passed() { 0 } else { 1 })
}

fn census_cmd(a: CensusArgs) -> Result<u8, CliError> {
    let ctx = FieldContext::of_order(a.q)?;
    let source = match a.source {
        SourceArg::New => SourceSelection::New,
        SourceArg::Known => SourceSelection::Known,
        SourceArg::Both => SourceSelection::Both,
    };
    let opts = CensusOptions {
        include_e0: a.include_e0,
        include_n2: !a.no_n2,
        cap: LengthCap::parse(&a.max_len).expect("clap restricts the values"),
        ..CensusOptions::default()
    };
    let report = census::census(&ctx, opts, source.includes_new(), source.includes_known())?;
    let file = CensusFile::new(&report, source);
    match &a.out {
        Some(path) => {
            write_file(path, &file.to_json())?;
            if let Some(c) = file.count_new {
                println!("count_new = {c}");
            }
            if let Some(c) = file.count_known {
                println!("count_known = {c}");
            }
        }
        None => print!("{}", file.to_json()),
    }
    Ok(0)
}

fn matrix(a: MatrixArgs) -> Result<u8, CliError> {
    let (_, ctx, code) = read_code_file(&a.input)?;
    let g = generator_matrix(&ctx, &code)?;
    let sep = match a.format {
        MatrixFormat::Rows => " ",
        MatrixFormat::Csv => ",",
    };
    let mut out = String::new();
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(sep));
        out.push('\n');
    }
    print!("{out}");
    Ok(0)
}
