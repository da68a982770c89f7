//! Command implementations. Each returns the text to print; `verify`
//! also reports the exit code (0 all passed, 1 some check failed).

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use chw_core::cohomology::{h1_w, h2_w};
use chw_core::group::ball_count;
use chw_core::lattice::{cokernel_invariants, smith_normal_form, IntMatrix};
use chw_core::verify::{
    run_all, suite_autg, suite_autw, suite_monoid, suite_outg, suite_structure, SuiteReport,
};

use crate::parse::{parse_auto_word, parse_element, ParseError};

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Core(chw_core::Error),
    Io { path: PathBuf, source: std::io::Error },
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => {
                write!(f, "cannot read {}: {source}", path.display())
            }
            CliError::Input(message) => write!(f, "{message}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<chw_core::Error> for CliError {
    fn from(e: chw_core::Error) -> Self {
        CliError::Core(e)
    }
}

fn require_positive_rank(n: usize) -> Result<(), CliError> {
    if n == 0 {
        Err(CliError::Input("rank must be at least 1".to_string()))
    } else {
        Ok(())
    }
}

pub fn cmd_nf(n: usize, word: &str) -> Result<String, CliError> {
    require_positive_rank(n)?;
    Ok(parse_element(word, n)?.to_string())
}

pub fn cmd_apply(n: usize, auto: &str, word: &str) -> Result<String, CliError> {
    require_positive_rank(n)?;
    let phi = parse_auto_word(auto, n)?.evaluate()?;
    let g = parse_element(word, n)?;
    Ok(phi.apply(&g)?.to_string())
}

pub fn cmd_induced(n: usize, auto: &str) -> Result<String, CliError> {
    require_positive_rank(n)?;
    let phi = parse_auto_word(auto, n)?.evaluate()?;
    let w_map = phi.induced_w()?;
    let matrix = phi.induced_matrix()?;
    let mut out = String::from("W-images:\n");
    for i in 1..=n {
        out.push_str(&format!("  x{i} -> {}\n", w_map.image(i)));
    }
    out.push_str("A-matrix:");
    for r in 0..n {
        out.push_str("\n ");
        for c in 0..n {
            out.push_str(&format!(" {}", matrix.entry(r, c)));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteChoice {
    Autw,
    Monoid,
    Autg,
    Outg,
    Structure,
    All,
}

pub fn cmd_verify(
    n: usize,
    suite: SuiteChoice,
    seed: u64,
    json: bool,
) -> Result<(String, u8), CliError> {
    let reports: Vec<SuiteReport> = match suite {
        SuiteChoice::All => run_all(n, seed)?,
        SuiteChoice::Autw => vec![suite_autw(n, seed)?],
        SuiteChoice::Monoid => vec![suite_monoid(n, seed)?],
        SuiteChoice::Autg => vec![suite_autg(n, seed)?],
        SuiteChoice::Outg => vec![suite_outg(n, seed)?],
        SuiteChoice::Structure => vec![suite_structure(n, seed)?],
    };
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let output = if json {
        serde_json::to_string(&reports).expect("reports serialize")
    } else {
        let mut out = String::new();
        let total: usize = reports.iter().map(|r| r.checks.len()).sum();
        for report in &reports {
            out.push_str(&format!(
                "suite {}: {} passed, {} failed (n={}, seed={})\n",
                report.suite, report.passed, report.failed, report.n, report.seed
            ));
            for check in report.checks.iter().filter(|c| !c.pass) {
                let detail = check
                    .detail
                    .as_deref()
                    .map(|d| format!(": {d}"))
                    .unwrap_or_default();
                out.push_str(&format!(
                    "  FAIL {}/{} [{}]{}\n",
                    report.suite, check.name, check.instance, detail
                ));
            }
        }
        if failed == 0 {
            out.push_str(&format!("all checks passed ({total} total)"));
        } else {
            out.push_str(&format!("{failed} of {total} checks failed"));
        }
        out
    };
    Ok((output, if failed == 0 { 0 } else { 1 }))
}

/// Renders a finitely generated abelian group from its free rank and
/// divisibility-sorted torsion factors, e.g. `Z^8 x (Z/2)^4`.
fn format_abelian(free: usize, torsion: &[BigInt]) -> String {
    let mut parts: Vec<String> = Vec::new();
    match free {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    let mut index = 0;
    while index < torsion.len() {
        let value = &torsion[index];
        let mut count = 1;
        while index + count < torsion.len() && &torsion[index + count] == value {
            count += 1;
        }
        if count == 1 {
            parts.push(format!("(Z/{value})"));
        } else {
            parts.push(format!("(Z/{value})^{count}"));
        }
        index += count;
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" x ")
    }
}

fn factors_json(factors: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(
        factors
            .iter()
            .map(|f| serde_json::Value::String(f.to_string()))
            .collect(),
    )
}

pub fn cmd_h1(n: usize, json: bool) -> Result<String, CliError> {
    let (free, torsion) = h1_w(n)?;
    if json {
        Ok(serde_json::json!({
            "n": n,
            "free_rank": free,
            "torsion": factors_json(&torsion),
        })
        .to_string())
    } else {
        Ok(format_abelian(free, &torsion))
    }
}

pub fn cmd_h2(n: usize, json: bool) -> Result<String, CliError> {
    let summands = h2_w(n)?;
    if json {
        Ok(serde_json::json!({
            "n": n,
            "summands": summands
                .iter()
                .map(|s| factors_json(s))
                .collect::<Vec<_>>(),
        })
        .to_string())
    } else {
        let torsion: Vec<BigInt> = summands.into_iter().flatten().collect();
        Ok(format_abelian(0, &torsion))
    }
}

pub fn cmd_snf(path: &Path, json: bool) -> Result<String, CliError> {
    let matrix = read_matrix_file(path)?;
    let snf = smith_normal_form(&matrix);
    let (free, torsion) = cokernel_invariants(&matrix);
    if json {
        Ok(serde_json::json!({
            "rows": matrix.rows(),
            "cols": matrix.cols(),
            "rank": snf.invariant_factors.len(),
            "invariant_factors": factors_json(&snf.invariant_factors),
            "cokernel_free_rank": free,
            "cokernel_torsion": factors_json(&torsion),
        })
        .to_string())
    } else {
        let factors = snf
            .invariant_factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        Ok(format!(
            "size: {}x{}\nrank: {}\ninvariant factors: [{}]\ncokernel: {}",
            matrix.rows(),
            matrix.cols(),
            snf.invariant_factors.len(),
            factors,
            format_abelian(free, &torsion)
        ))
    }
}

/// Reads a matrix file: one row per line of whitespace-separated
/// integers, or a JSON array of arrays when the first nonblank byte is
/// a bracket.
fn read_matrix_file(path: &Path) -> Result<IntMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    if text.trim_start().starts_with('[') {
        return parse_json_matrix(&text);
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for field in line.split_whitespace() {
            let value: BigInt = field.parse().map_err(|_| {
                CliError::Input(format!(
                    "line {}: not an integer: {field:?}",
                    line_no + 1
                ))
            })?;
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Input("matrix file holds no rows".to_string()));
    }
    IntMatrix::from_rows(rows).map_err(CliError::Core)
}

fn parse_json_matrix(text: &str) -> Result<IntMatrix, CliError> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("invalid JSON: {e}")))?;
    let rows_value = value
        .as_array()
        .ok_or_else(|| CliError::Input("expected a JSON array of arrays".to_string()))?;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for row_value in rows_value {
        let entries = row_value
            .as_array()
            .ok_or_else(|| CliError::Input("expected a JSON array of arrays".to_string()))?;
        let mut row = Vec::new();
        for entry in entries {
            let number = entry
                .as_i64()
                .ok_or_else(|| CliError::Input(format!("not an integer: {entry}")))?;
            row.push(BigInt::from(number));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Input("matrix file holds no rows".to_string()));
    }
    IntMatrix::from_rows(rows).map_err(CliError::Core)
}

pub fn cmd_ball(n: usize, len: usize, box_bound: usize) -> Result<String, CliError> {
    require_positive_rank(n)?;
    Ok(ball_count(n, len, box_bound).to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_formatting() {
        assert_eq!(
            format_abelian(8, &vec![BigInt::from(2); 4]),
            "Z^8 x (Z/2)^4"
        );
        assert_eq!(format_abelian(0, &vec![BigInt::from(2); 3]), "(Z/2)^3");
        assert_eq!(format_abelian(1, &[]), "Z");
        assert_eq!(format_abelian(0, &[]), "0");
        assert_eq!(
            format_abelian(0, &[BigInt::from(2), BigInt::from(4), BigInt::from(4)]),
            "(Z/2) x (Z/4)^2"
        );
    }

    #[test]
    fn normal_form_command() {
        assert_eq!(cmd_nf(2, "x1^-1 x2^2 x1 x2^2").unwrap(), "; [0,0]");
        assert_eq!(cmd_nf(3, "x1 x2").unwrap(), "x1 x2 ; [0,0,0]");
        assert!(cmd_nf(0, "x1").is_err());
    }

    #[test]
    fn apply_command() {
        assert_eq!(
            cmd_apply(3, "a[1,2]", "x1").unwrap(),
            "x2 x1 x2 ; [0,-1,0]"
        );
        assert_eq!(cmd_apply(2, "e[1,2]", "x1").unwrap(), "x1 ; [0,1]");
        assert_eq!(cmd_apply(2, "d[1]", "x1^2").unwrap(), "; [-1,0]");
    }

    #[test]
    fn induced_command() {
        let out = cmd_induced(3, "d[1]").unwrap();
        assert!(out.contains("x1 -> x1"));
        assert!(out.contains("-1 0 0"));
    }

    #[test]
    fn h_commands() {
        assert_eq!(cmd_h1(4, false).unwrap(), "Z^8 x (Z/2)^4");
        assert_eq!(cmd_h1(3, false).unwrap(), "Z^3 x (Z/2)^3");
        assert_eq!(cmd_h2(3, false).unwrap(), "(Z/2)^3");
        assert!(cmd_h1(2, false).is_err());
        let json: serde_json::Value =
            serde_json::from_str(&cmd_h1(4, true).unwrap()).unwrap();
        assert_eq!(json["free_rank"], 8);
    }

    #[test]
    fn ball_command() {
        assert_eq!(cmd_ball(2, 2, 1).unwrap(), "45");
        assert_eq!(cmd_ball(3, 0, 0).unwrap(), "1");
    }

    #[test]
    fn verify_command_exit_codes() {
        let (out, code) = cmd_verify(3, SuiteChoice::Autw, 0, false).unwrap();
        assert_eq!(code, 0);
        assert!(out.contains("all checks passed"));
        assert!(cmd_verify(2, SuiteChoice::All, 0, false).is_err());
    }
}
