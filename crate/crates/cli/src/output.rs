use std::io::{self, Write};
use std::path::PathBuf;

use serde::Serialize;

use crate::commands::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
    CsvFile(PathBuf),
}

pub fn print_json<T: Serialize + ?Sized>(value: &T) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn write_csv<W: Write, R: Serialize>(sink: W, rows: &[R]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(sink);
    for row in rows {
        w.serialize(row).map_err(|e| CliError::Io(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Tables go to stdout as CSV in text mode, as a JSON array with `--json`,
/// or to the file given by `--csv`.
pub fn emit_table<R: Serialize>(mode: &OutputMode, rows: &[R]) -> Result<(), CliError> {
    match mode {
        OutputMode::Text => write_csv(io::stdout().lock(), rows),
        OutputMode::Json => print_json(rows),
        OutputMode::CsvFile(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            write_csv(io::BufWriter::new(file), rows)
        }
    }
}
