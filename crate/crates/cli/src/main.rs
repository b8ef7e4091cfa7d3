mod args;
mod cache;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::Result;
use ccdeg_core::groebner::Budget;
use ccdeg_core::Error;
use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, Global};
use cache::Cache;
use commands::{Ctx, Outcome};
use report::{Report, Status};

fn classify(e: &anyhow::Error) -> Status {
    if e.downcast_ref::<std::io::Error>().is_some() {
        return Status::Invalid;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::Budget(_)) => Status::Truncated,
        Some(Error::Invalid(_) | Error::Parse(_) | Error::UnknownVariable(_)) => Status::Invalid,
        Some(Error::NotHomogeneous) => Status::Invalid,
        _ => Status::Error,
    }
}

fn job(global: &Global, command: &Command) -> (String, Value) {
    let (name, args) = match command {
        Command::Degree(a) => ("degree", serde_json::to_value(a)),
        Command::Verify(a) => ("verify", serde_json::to_value(a)),
        Command::Polytope(a) => ("polytope", serde_json::to_value(a)),
        Command::Posets(a) => ("posets", serde_json::to_value(a)),
        Command::SolveCount(a) => ("solve-count", serde_json::to_value(a)),
        Command::Export(a) => ("export", serde_json::to_value(a)),
    };
    let mut g = serde_json::to_value(global).expect("serializable");
    // output formatting is not part of the job
    g.as_object_mut().map(|m| m.remove("pretty"));
    (name.to_string(), json!({ "global": g, "args": args.expect("serializable") }))
}

fn run(ctx: &mut Ctx, command: &Command) -> Result<Option<Outcome>> {
    Ok(Some(match command {
        Command::Degree(a) => commands::degree(ctx, a)?,
        Command::Verify(a) => commands::verify(ctx, a)?,
        Command::Polytope(a) => commands::polytope(ctx, a)?,
        Command::Posets(a) => commands::posets(a)?,
        Command::SolveCount(a) => commands::solve_count(ctx, a)?,
        Command::Export(a) => {
            let text = commands::export_text(ctx, a)?;
            if a.out.is_none() {
                print!("{text}");
                return Ok(None);
            }
            commands::export_summary(a, &text)?
        }
    }))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(Status::Invalid.exit_code() as u8),
            };
        }
    };
    let level = match cli.global.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level))
        .target(env_logger::Target::Stderr)
        .init();

    let start = Instant::now();
    let (command, job) = job(&cli.global, &cli.command);
    let setup = || -> Result<Ctx> {
        if let Some(t) = cli.global.threads {
            if t == 0 {
                return Err(Error::Invalid("--threads must be positive".into()).into());
            }
            rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
        }
        let deadline = match cli.global.max_seconds {
            Some(s) if !(s > 0.0 && s.is_finite()) => {
                return Err(Error::Invalid("--max-seconds must be a positive number".into()).into())
            }
            Some(s) => Some(start + Duration::from_secs_f64(s)),
            None => None,
        };
        if cli.global.max_basis == Some(0) {
            return Err(Error::Invalid("--max-basis must be positive".into()).into());
        }
        let dir = std::env::var_os("CCDEG_CACHE").map(PathBuf::from).or_else(|| cli.global.cache_dir.clone());
        Ok(Ctx {
            cache: Cache::new(dir),
            budget: Budget { deadline, max_basis: cli.global.max_basis, ..Budget::unlimited() },
            seed: cli.global.seed,
        })
    };
    let mut ctx = match setup() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(classify(&e).exit_code() as u8);
        }
    };

    let (status, results) = match run(&mut ctx, &cli.command) {
        Ok(None) => return ExitCode::SUCCESS,
        Ok(Some(o)) => {
            let status = match (o.truncated, o.failed) {
                (true, _) => Status::Truncated,
                (_, true) => Status::Failed,
                _ => Status::Ok,
            };
            (status, o.results)
        }
        Err(e) => {
            let status = classify(&e);
            eprintln!("error: {e:#}");
            let mut r = json!({ "error": format!("{e:#}") });
            if status == Status::Truncated {
                r["truncated"] = json!(true);
            }
            (status, r)
        }
    };
    let report = Report {
        command,
        job,
        status,
        results,
        provenance: json!({
            "version": env!("CARGO_PKG_VERSION"),
            "cache": {
                "dir": ctx.cache.dir().map(|d| d.display().to_string()),
                "hits": ctx.cache.hits,
                "misses": ctx.cache.misses,
                "rejected": ctx.cache.rejected,
            },
            "elapsed_ms": start.elapsed().as_millis() as u64,
        }),
    };
    if cli.global.pretty {
        print!("{}", report.to_table());
    } else {
        println!("{}", report.to_json());
    }
    ExitCode::from(status.exit_code() as u8)
}
