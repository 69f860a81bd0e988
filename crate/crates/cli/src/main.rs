//! `wirediff`: command-line front end for the wire-diffraction library.
//!
//! Exit status is 0 on success, 2 for an invalid configuration and 1 for
//! any runtime failure.

mod commands;
mod config;
mod output;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use config::{Cli, ConfigError, Format, RunConfig};
use output::{render_csv, render_json, sidecar_path, write_atomic, Metadata};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::from_command(&cli.command) {
        Ok(cfg) => cfg,
        Err(ConfigError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match execute(&cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn execute(cfg: &RunConfig) -> Result<()> {
    let artifact = commands::run(cfg)?;
    let metadata = Metadata {
        config: cfg,
        library: "wirediff-core",
        library_version: wirediff_core::VERSION,
        provenance: artifact.provenance,
        generated_unix_s: cfg.timestamp.then(|| {
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        }),
    };
    let body = match cfg.format {
        Format::Csv => render_csv(&artifact.columns),
        Format::Json => render_json(&metadata, &artifact.data)?,
    };
    match &cfg.output_path {
        Some(path) => {
            let path = std::path::Path::new(path);
            write_atomic(path, &body)?;
            if cfg.format == Format::Csv {
                let meta = render_json(&metadata, &serde_json::Value::Null)?;
                write_atomic(&sidecar_path(path), &meta)?;
            }
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            let written = stdout.write_all(body.as_bytes()).and_then(|_| stdout.flush());
            match written {
                // A closed reader (`| head`) is not a failure.
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
                other => other?,
            }
        }
    }
    Ok(())
}
