use std::fs;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use rlvd::{MincutBackend, ProblemSpec, SolverConfig};

use crate::error::CliError;
use crate::input::load_graph;

/// One line of a suite file: `path r l k [independent] [brute|twdp]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteEntry {
    pub path: PathBuf,
    pub spec: ProblemSpec,
    pub backend: MincutBackend,
}

pub fn parse_suite(text: &str, base: &Path) -> Result<Vec<SuiteEntry>, String> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |what: &str| format!("suite line {}: {what}", idx + 1);
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 4 {
            return Err(bad("expected `path r l k [independent] [brute|twdp]`"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("invalid number `{s}`")));
        let mut spec = ProblemSpec::new(num(toks[1])?, num(toks[2])?, num(toks[3])?);
        let mut backend = MincutBackend::default();
        for &tok in &toks[4..] {
            if tok == "independent" {
                spec = spec.independent();
            } else {
                backend = tok.parse().map_err(|e: String| bad(&e))?;
            }
        }
        out.push(SuiteEntry { path: base.join(toks[0]), spec, backend });
    }
    Ok(out)
}

fn backend_name(b: MincutBackend) -> &'static str {
    match b {
        MincutBackend::Brute => "brute",
        MincutBackend::Twdp => "twdp",
    }
}

/// Runs every entry with a per-instance timeout and writes one CSV row each.
/// A timed-out solve is left running detached and reported as `timeout`.
pub fn run(suite: &Path, timeout: Duration, csv_path: &Path, threads: usize) -> Result<(), CliError> {
    let text = fs::read_to_string(suite).map_err(CliError::io(suite))?;
    let base = suite.parent().unwrap_or(Path::new("."));
    let entries = parse_suite(&text, base).map_err(CliError::Usage)?;
    let mut out = csv::Writer::from_path(csv_path)?;
    out.write_record(["instance", "n", "m", "r", "l", "k", "independent", "feasible", "size", "millis", "backend"])?;
    for entry in entries {
        let loaded = load_graph(&entry.path, None)?;
        let (n, m) = (loaded.graph.n(), loaded.graph.m());
        let cfg = SolverConfig { threads, mincut_backend: entry.backend, ..SolverConfig::default() };
        let spec = entry.spec.clone();
        let (tx, rx) = mpsc::channel();
        let start = Instant::now();
        thread::spawn(move || {
            let _ = tx.send(rlvd::solve(&loaded.graph, &spec, &cfg));
        });
        let (feasible, size) = match rx.recv_timeout(timeout) {
            Ok(Ok(sol)) => (sol.feasible.to_string(), sol.deletion_set.map_or(String::new(), |s| s.len().to_string())),
            Ok(Err(e)) => (format!("error: {e}"), String::new()),
            Err(_) => ("timeout".to_string(), String::new()),
        };
        let millis = start.elapsed().as_millis().to_string();
        let s = &entry.spec;
        out.write_record([
            entry.path.display().to_string(),
            n.to_string(),
            m.to_string(),
            s.r.to_string(),
            s.l.to_string(),
            s.k.to_string(),
            s.independent.to_string(),
            feasible,
            size,
            millis,
            backend_name(entry.backend).to_string(),
        ])?;
        out.flush().map_err(CliError::io(csv_path))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_suite_lines() {
        let text = "# comment\n\na.col 2 2 1\nb.txt 1 0 3 independent twdp\n";
        let got = parse_suite(text, Path::new("dir")).unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].path, PathBuf::from("dir/a.col"));
        assert_eq!(got[0].spec, ProblemSpec::new(2, 2, 1));
        assert_eq!(got[1].spec, ProblemSpec::new(1, 0, 3).independent());
        assert_eq!(got[1].backend, MincutBackend::Twdp);
    }

    #[test]
    fn rejects_short_or_bad_lines() {
        assert!(parse_suite("a.col 2 2", Path::new(".")).is_err());
        assert!(parse_suite("a.col 2 x 1", Path::new(".")).is_err());
        assert!(parse_suite("a.col 2 2 1 fancy", Path::new(".")).is_err());
    }
}
