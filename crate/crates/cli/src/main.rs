use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use s3voa_core::checks::{self, Check, Context};
use s3voa_core::modecalc::{self, Case};
use s3voa_core::report::{self, Format};

#[derive(Parser)]
#[command(name = "s3voa", version, about = "Exact checks for the S3 extension of the Potts product")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Series truncation order.
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Seed for randomized suites.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    max_m: Option<u32>,
    /// Number of random cases in the cocycle suite.
    #[arg(long, global = true)]
    cases: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Key-value file; flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Multiplication table for the first presentation.
    #[arg(long, global = true)]
    griess_p1: Option<PathBuf>,
    /// Multiplication table for the second presentation.
    #[arg(long, global = true)]
    griess_p2: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite.
    Verify {
        #[arg(value_parser = verify_targets())]
        target: String,
    },
    /// Run a classification.
    Classify {
        #[arg(value_parser = ["conformal-vectors", "modules"])]
        target: String,
    },
    MiyamotoGroup,
    /// The induced fusion table of the six modules.
    FusionTableU,
    /// Gram matrix of a builtin state set.
    Gram {
        #[arg(long, value_parser = modecalc::BUILTIN_SETS)]
        set: String,
        #[arg(long, value_parser = strategy_names())]
        strategy: Option<String>,
    },
    /// Graded dimension of a candidate decomposition.
    Dims {
        #[arg(long)]
        case: Case,
        #[arg(long)]
        weight: i64,
    },
    /// Run every acceptance check, or one check by id.
    Report {
        #[arg(default_value = "all")]
        target: String,
        #[arg(long, value_parser = strategy_names())]
        strategy: Option<String>,
    },
    /// List check ids and inner-product strategies.
    List,
}

fn verify_targets() -> Vec<&'static str> {
    checks::ACCEPTANCE.to_vec()
}

fn strategy_names() -> Vec<&'static str> {
    modecalc::inner_strategies().iter().map(|s| s.name()).collect()
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn read_config(path: &PathBuf) -> Result<Vec<(String, String)>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) =
            line.split_once('=').ok_or_else(|| format!("{}:{}: expected key = value", path.display(), n + 1))?;
        out.push((k.trim().replace('_', "-"), v.trim().to_string()));
    }
    Ok(out)
}

struct Settings {
    ctx: Context,
    format: Format,
}

fn settings(g: &Global) -> Result<Settings, String> {
    let mut ctx = Context::default();
    let mut format = Format::Text;
    let mut p1 = None;
    let mut p2 = None;
    if let Some(path) = &g.config {
        for (k, v) in read_config(path)? {
            let bad = |e: &dyn std::fmt::Display| format!("config key {k}: {e}");
            match k.as_str() {
                "order" => ctx.order = Some(v.parse().map_err(|e| bad(&e))?),
                "seed" => ctx.seed = v.parse().map_err(|e| bad(&e))?,
                "max-m" => ctx.max_m = v.parse().map_err(|e| bad(&e))?,
                "cases" => ctx.cases = v.parse().map_err(|e| bad(&e))?,
                "format" => format = v.parse().map_err(|e| bad(&e))?,
                "strategy" => ctx.strategy = v,
                "griess-p1" => p1 = Some(PathBuf::from(v)),
                "griess-p2" => p2 = Some(PathBuf::from(v)),
                _ => return Err(format!("unknown config key {k}")),
            }
        }
    }
    ctx.order = g.order.or(ctx.order);
    ctx.seed = g.seed.unwrap_or(ctx.seed);
    ctx.max_m = g.max_m.unwrap_or(ctx.max_m);
    ctx.cases = g.cases.unwrap_or(ctx.cases);
    if let Some(f) = g.format {
        format = match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        };
    }
    let load = |p: &PathBuf| std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()));
    if let Some(p) = g.griess_p1.as_ref().or(p1.as_ref()) {
        ctx.griess_p1 = load(p)?;
    }
    if let Some(p) = g.griess_p2.as_ref().or(p2.as_ref()) {
        ctx.griess_p2 = load(p)?;
    }
    if modecalc::inner_strategy(&ctx.strategy).is_none() {
        return Err(format!("unknown strategy {}", ctx.strategy));
    }
    Ok(Settings { ctx, format })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let Settings { mut ctx, format } = match settings(&cli.global) {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    let ids: Vec<String> = match cli.command {
        Command::Verify { target } | Command::Classify { target } => vec![target],
        Command::MiyamotoGroup => vec!["miyamoto-group".into()],
        Command::FusionTableU => vec!["induced-fusion".into()],
        Command::Gram { set, strategy } => {
            ctx.strategy = strategy.unwrap_or(ctx.strategy);
            vec![format!("gram:{set}")]
        }
        Command::Dims { case, weight } => vec![format!("dims:{case}:{weight}")],
        Command::Report { target, strategy } => {
            ctx.strategy = strategy.unwrap_or(ctx.strategy);
            if target == "all" {
                checks::ACCEPTANCE.iter().map(|s| s.to_string()).collect()
            } else {
                vec![target]
            }
        }
        Command::List => {
            println!("checks:");
            for id in checks::ACCEPTANCE {
                println!("  {id}");
            }
            for set in modecalc::BUILTIN_SETS {
                println!("  gram:{set}");
            }
            println!("  dims:CASE:WEIGHT");
            println!("inner-product strategies:");
            for s in modecalc::inner_strategies() {
                println!("  {}", s.name());
            }
            return ExitCode::SUCCESS;
        }
    };
    let mut selected: Vec<Box<dyn Check>> = Vec::new();
    for id in &ids {
        match checks::lookup(id) {
            Some(c) => selected.push(c),
            None => return usage(format!("unknown check {id}")),
        }
    }
    let reports = checks::run_all(&selected, &ctx);
    print!("{}", report::emit(&reports, format));
    ExitCode::from(report::exit_code(&reports) as u8)
}
