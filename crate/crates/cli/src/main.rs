mod args;
mod commands;
mod treearg;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;

use args::Cli;

pub const OUTPUT_DIR_ENV: &str = "TWOROW_OUTPUT_DIR";

fn resolve_output(path: &Path) -> PathBuf {
    match std::env::var_os(OUTPUT_DIR_ENV) {
        Some(dir) if path.is_relative() => Path::new(&dir).join(path),
        _ => path.to_path_buf(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let sink: anyhow::Result<Box<dyn Write>> = match &cli.output {
        Some(p) => {
            let p = resolve_output(p);
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                let _ = std::fs::create_dir_all(parent);
            }
            File::create(&p)
                .map(|f| Box::new(BufWriter::new(f)) as Box<dyn Write>)
                .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", p.display()))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    };
    let result = sink.and_then(|mut out| {
        let ok = commands::run(&cli, &mut out)?;
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
