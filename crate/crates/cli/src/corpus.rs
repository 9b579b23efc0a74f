//! Golden-file corpus: every `NAME.json` job in a directory is run and its
//! output compared with `NAME.expected`.

use std::fs;
use std::path::{Path, PathBuf};

use similar::TextDiff;

use crate::job::JobSpec;
use crate::{guarded, run, CliError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Unified diff from expected to actual.
    Mismatch(String),
    MissingExpected,
    Error(String),
}

#[derive(Clone, Debug)]
pub struct Row {
    pub name: String,
    pub cite: Option<String>,
    pub outcome: Outcome,
    pub actual: Option<String>,
}

impl Row {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn render(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!("{status}  {}", self.name);
        if let Some(c) = &self.cite {
            line.push_str(&format!("  [{c}]"));
        }
        match &self.outcome {
            Outcome::Pass => {}
            Outcome::Mismatch(d) => {
                line.push('\n');
                line.push_str(d.trim_end());
            }
            Outcome::MissingExpected => line.push_str("\n  no expected output"),
            Outcome::Error(e) => line.push_str(&format!("\n  {e}")),
        }
        line
    }
}

fn jobs(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = fs::read_dir(dir).map_err(|e| CliError::Schema(format!("{}: {e}", dir.display())))?;
    let mut out: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    out.sort();
    Ok(out)
}

fn run_one(path: &Path) -> Row {
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let src = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            return Row {
                name,
                cite: None,
                outcome: Outcome::Error(e.to_string()),
                actual: None,
            }
        }
    };
    let spec = JobSpec::parse(&src);
    let cite = spec.as_ref().ok().and_then(|s| s.cite.clone());
    let actual = guarded(|| {
        let spec = spec?;
        Ok(run(&spec)?.render(spec.basis, spec.format))
    });
    let actual = match actual {
        Ok(a) => a,
        Err(e) => {
            return Row {
                name,
                cite,
                outcome: Outcome::Error(e.to_string()),
                actual: None,
            }
        }
    };
    let outcome = match fs::read_to_string(path.with_extension("expected")) {
        Err(_) => Outcome::MissingExpected,
        Ok(expected) if expected == actual => Outcome::Pass,
        Ok(expected) => Outcome::Mismatch(
            TextDiff::from_lines(&expected, &actual)
                .unified_diff()
                .context_radius(1)
                .header("expected", "actual")
                .to_string(),
        ),
    };
    Row {
        name,
        cite,
        outcome,
        actual: Some(actual),
    }
}

/// Runs every job in `dir`, in parallel, and returns the rows in file-name
/// order.
pub fn run_corpus(dir: &Path) -> Result<Vec<Row>, CliError> {
    let paths = jobs(dir)?;
    let rows = std::thread::scope(|s| {
        let handles: Vec<_> = paths.iter().map(|p| s.spawn(move || run_one(p))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("corpus worker"))
            .collect::<Vec<_>>()
    });
    Ok(rows)
}

/// Writes the actual output of every job as its expected output.
pub fn update_corpus(dir: &Path) -> Result<Vec<Row>, CliError> {
    let rows = run_corpus(dir)?;
    for row in &rows {
        if let Some(a) = &row.actual {
            let path = dir.join(format!("{}.expected", row.name));
            fs::write(&path, a).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))?;
        }
    }
    Ok(rows)
}
