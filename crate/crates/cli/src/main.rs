//! `garnir`: root systems, tabloids, polytabloids and Garnir relations
//! from the command line.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use garnir_core::{build_root_system, generate_group, CartanType, Error, Order, RootSystem};

#[derive(Parser, Debug)]
#[command(name = "garnir", version, about = "Exact Garnir relations for Weyl groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots in coefficient notation and ambient coordinates.
    Roots(SystemArgs),
    /// Group elements with canonical words, lengths and signs.
    Group(SystemArgs),
    /// Δ-tabloids {dJ̄} for d ∈ D_Ψ.
    Tabloids(PairArgs),
    /// The polytabloid e_{wJ,wJ′} and its coset reduction.
    Polytabloid(PairArgs),
    /// Garnir element and straightening relation.
    Garnir(GarnirArgs),
    /// Run the exhaustive verification suites.
    Verify(VerifyArgs),
    /// Classify subsystem pairs: useful, good, very good, perfect.
    Classify(ClassifyArgs),
}

#[derive(Args, Debug, Clone)]
struct SystemArgs {
    /// Root system: a full label (G2, B3) or a letter with --rank.
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug, Clone)]
struct PairArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Row system J, e.g. "10,32".
    #[arg(long = "J", allow_hyphen_values = true)]
    j: String,
    /// Column system J′, e.g. "11". Empty by default.
    #[arg(long = "Jp", allow_hyphen_values = true, default_value = "")]
    jp: String,
    /// Group element as a word, e.g. "t1 t2".
    #[arg(short = 'd', default_value = "e")]
    d: String,
}

#[derive(Args, Debug, Clone)]
struct GarnirArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// J*, e.g. "10,21". Required unless --all-jstar.
    #[arg(long = "Jstar", allow_hyphen_values = true)]
    jstar: Option<String>,
    /// One report for every J* whose context admits a pairing.
    #[arg(long = "all-jstar", conflicts_with = "jstar")]
    all_jstar: bool,
}

#[derive(Args, Debug, Clone)]
struct VerifyArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// structure, action, peel, sign, coset, independence, lemma, theorem, example34
    #[arg(long)]
    suite: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct ClassifyArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Classify only this pair; all pairs otherwise.
    #[arg(long = "J", allow_hyphen_values = true, requires = "jp")]
    j: Option<String>,
    #[arg(long = "Jp", allow_hyphen_values = true)]
    jp: Option<String>,
    #[arg(long, value_enum, default_value_t = OrderArg::Bruhat)]
    order: OrderArg,
}

#[derive(ValueEnum, Copy, Clone, Debug)]
enum OrderArg {
    Bruhat,
    Length,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Bruhat => Order::Bruhat,
            OrderArg::Length => Order::Length,
        }
    }
}

/// Rendered result of a command.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    /// False when a verification failed.
    pub ok: bool,
}

impl SystemArgs {
    fn root_system(&self) -> Result<RootSystem, Error> {
        let kind = self.kind.trim();
        match self.rank {
            None => RootSystem::from_label(kind),
            Some(rank) => {
                let mut letters = kind.chars();
                let cartan = match (letters.next().map(|c| c.to_ascii_uppercase()), letters.as_str()) {
                    (Some('A'), "") => CartanType::A,
                    (Some('B'), "") => CartanType::B,
                    (Some('C'), "") => CartanType::C,
                    (Some('D'), "") => CartanType::D,
                    (Some('G'), "") => CartanType::G,
                    _ => {
                        // a full label is fine if it agrees with --rank
                        let phi = RootSystem::from_label(kind)?;
                        if phi.rank() != rank {
                            return Err(Error::Config(format!("--type {kind} conflicts with --rank {rank}")));
                        }
                        return Ok(phi);
                    }
                };
                build_root_system(cartan, rank)
            }
        }
    }
}

// `-J`, `-Jp` and `-Jstar` are multi-letter single-dash flags, which clap
// cannot express; rewrite them to their long forms first.
fn normalize_args(args: impl IntoIterator<Item = String>) -> Vec<String> {
    args.into_iter()
        .map(|a| {
            for flag in ["-Jstar", "-Jp", "-J"] {
                if a == flag || a.starts_with(&format!("{flag}=")) {
                    return format!("-{a}");
                }
            }
            a
        })
        .collect()
}

fn run(cli: Cli) -> Result<Output, Error> {
    let system = match &cli.command {
        Command::Roots(s) | Command::Group(s) => s,
        Command::Tabloids(p) | Command::Polytabloid(p) => &p.system,
        Command::Garnir(g) => &g.pair.system,
        Command::Verify(v) => &v.system,
        Command::Classify(c) => &c.system,
    };
    let phi = system.root_system()?;
    if let Command::Roots(_) = cli.command {
        return Ok(commands::roots(&phi));
    }
    let group = generate_group(phi)?;
    match cli.command {
        Command::Roots(_) => unreachable!(),
        Command::Group(_) => Ok(commands::group(&group)),
        Command::Tabloids(p) => commands::tabloids(&group, &p.j, &p.jp),
        Command::Polytabloid(p) => commands::polytabloid(&group, &p.j, &p.jp, &p.d),
        Command::Garnir(g) => {
            let p = &g.pair;
            match (g.all_jstar, g.jstar.as_deref()) {
                (true, _) => commands::garnir_all(&group, &p.j, &p.jp, &p.d),
                (false, Some(star)) => commands::garnir(&group, &p.j, &p.jp, &p.d, star),
                (false, None) => Err(Error::Config("garnir needs -Jstar or --all-jstar".into())),
            }
        }
        Command::Verify(v) => {
            let suite = v.suite.as_deref().map(str::parse).transpose()?;
            commands::verify(&group, suite)
        }
        Command::Classify(c) => {
            let pair = c.j.as_deref().map(|j| (j, c.jp.as_deref().unwrap_or("")));
            commands::classify(&group, pair, c.order.into())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize_args(std::env::args())) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    let json = match &cli.command {
        Command::Roots(s) | Command::Group(s) => s.json,
        Command::Tabloids(p) | Command::Polytabloid(p) => p.system.json,
        Command::Garnir(g) => g.pair.system.json,
        Command::Verify(v) => v.system.json,
        Command::Classify(c) => c.system.json,
    };
    match run(cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Invariant(_) | Error::Consistency(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}
