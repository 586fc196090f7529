//! Text tables, CSV and JSON for each command.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_complex::Complex64;
use polybound::{format_4dp, BoundId, BoundReport64, Polynomial64, RadiusEstimate64, RootSet64, ViolationReport};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

fn csv_string(rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    rows(&mut w).map_err(|e| CliError::Output(e.to_string()))?;
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

fn json_string<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Output(e.to_string()))
}

/// Shortest representation that parses back to the same `f64`.
fn num(x: f64) -> String {
    format!("{x:?}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub bound_id: String,
    pub value: f64,
    pub is_best: bool,
    pub tightness: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedRow {
    pub bound_id: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsJson {
    pub polynomial: String,
    /// `[re, im]` pairs, leading coefficient first.
    pub coefficients: Vec<[f64; 2]>,
    pub best: String,
    pub bounds: Vec<BoundRow>,
    pub skipped: Vec<SkippedRow>,
    pub actual_max_modulus: Option<f64>,
    pub roots_converged: Option<bool>,
}

fn pairs(zs: &[Complex64]) -> Vec<[f64; 2]> {
    zs.iter().map(|z| [z.re, z.im]).collect()
}

pub fn bound_rows(r: &BoundReport64) -> Vec<BoundRow> {
    r.entries
        .iter()
        .map(|e| BoundRow {
            bound_id: e.id.to_string(),
            value: e.value,
            is_best: e.id == r.best,
            tightness: r.tightness(e.id),
        })
        .collect()
}

pub fn bounds(r: &BoundReport64, format: OutputFormat) -> Result<String, CliError> {
    let rows = bound_rows(r);
    match format {
        OutputFormat::Json => json_string(&BoundsJson {
            polynomial: r.polynomial.to_string(),
            coefficients: pairs(&r.polynomial.descending()),
            best: r.best.to_string(),
            bounds: rows,
            skipped: r
                .skipped
                .iter()
                .map(|(id, reason)| SkippedRow { bound_id: id.to_string(), reason: reason.clone() })
                .collect(),
            actual_max_modulus: r.actual_max_modulus,
            roots_converged: r.roots_converged,
        }),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["bound_id", "value", "is_best", "tightness"])?;
            for row in &rows {
                w.write_record([row.bound_id.clone(), num(row.value), row.is_best.to_string(), opt(row.tightness)])?;
            }
            Ok(())
        }),
        OutputFormat::Table => {
            let mut sorted = rows;
            sorted.sort_by(|a, b| a.value.total_cmp(&b.value));
            let mut out = String::new();
            let _ = writeln!(out, "p(z) = {}", r.polynomial);
            let with_roots = r.actual_max_modulus.is_some();
            if with_roots {
                let _ = writeln!(out, "{:<6} {:>12} {:>10}", "bound", "value", "tightness");
            } else {
                let _ = writeln!(out, "{:<6} {:>12}", "bound", "value");
            }
            for row in &sorted {
                let mark = if row.is_best { "  <- best" } else { "" };
                match row.tightness {
                    Some(t) if with_roots => {
                        let _ = writeln!(out, "{:<6} {:>12} {:>10}{mark}", row.bound_id, format_4dp(row.value), format_4dp(t));
                    }
                    _ => {
                        let _ = writeln!(out, "{:<6} {:>12}{mark}", row.bound_id, format_4dp(row.value));
                    }
                }
            }
            for (id, reason) in &r.skipped {
                let _ = writeln!(out, "{id:<6} {:>12}  ({reason})", "-");
            }
            if let Some(actual) = r.actual_max_modulus {
                let _ = writeln!(out, "actual max |z| = {}", format_4dp(actual));
                if r.roots_converged == Some(false) {
                    let _ = writeln!(out, "warning: root finder did not converge");
                }
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearJson {
    pub polynomial: String,
    pub root: [f64; 2],
}

/// Degree-one input: the root is read off directly.
pub fn linear(p: &Polynomial64, format: OutputFormat) -> Result<String, CliError> {
    let root = -p.coeffs()[0];
    match format {
        OutputFormat::Json => json_string(&LinearJson { polynomial: p.to_string(), root: [root.re, root.im] }),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["re", "im", "modulus"])?;
            w.write_record([num(root.re), num(root.im), num(root.norm())])
        }),
        OutputFormat::Table => Ok(format!(
            "p(z) = {p}\nlinear polynomial, root z = {}\n",
            complex_4dp(root)
        )),
    }
}

fn complex_4dp(z: Complex64) -> String {
    if z.im == 0.0 {
        format_4dp(z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{} {sign} {}i", format_4dp(z.re), format_4dp(z.im.abs()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusJson {
    pub value: f64,
    pub theta_star: f64,
    pub refinement_width: f64,
    pub samples: usize,
}

pub fn radius(e: &RadiusEstimate64, format: OutputFormat) -> Result<String, CliError> {
    let j = RadiusJson {
        value: e.value,
        theta_star: e.theta_star,
        refinement_width: e.refinement_width,
        samples: e.samples,
    };
    match format {
        OutputFormat::Json => json_string(&j),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["value", "theta_star", "refinement_width", "samples"])?;
            w.write_record([num(j.value), num(j.theta_star), num(j.refinement_width), j.samples.to_string()])
        }),
        OutputFormat::Table => Ok(format!(
            "w(T)             {}\ntheta*           {}\nrefinement width {:.1e}\nsamples          {}\n",
            format_4dp(j.value),
            format_4dp(j.theta_star),
            j.refinement_width,
            j.samples
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootsJson {
    pub polynomial: String,
    pub roots: Vec<[f64; 2]>,
    pub residuals: Vec<f64>,
    pub max_modulus: f64,
    pub iterations: usize,
    pub converged: bool,
}

pub fn roots(p: &Polynomial64, rs: &RootSet64, format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => json_string(&RootsJson {
            polynomial: p.to_string(),
            roots: pairs(&rs.roots),
            residuals: rs.residuals.clone(),
            max_modulus: rs.max_modulus(),
            iterations: rs.iterations,
            converged: rs.converged,
        }),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["re", "im", "modulus", "residual"])?;
            for (z, r) in rs.roots.iter().zip(&rs.residuals) {
                w.write_record([num(z.re), num(z.im), num(z.norm()), num(*r)])?;
            }
            Ok(())
        }),
        OutputFormat::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "p(z) = {p}");
            let _ = writeln!(out, "{:>12} {:>12} {:>10} {:>10}", "re", "im", "|z|", "residual");
            for (z, r) in rs.roots.iter().zip(&rs.residuals) {
                let _ = writeln!(
                    out,
                    "{:>12} {:>12} {:>10} {:>10.1e}",
                    format_4dp(z.re),
                    format_4dp(z.im),
                    format_4dp(z.norm()),
                    r
                );
            }
            let status = if rs.converged { "converged" } else { "NOT converged" };
            let _ = writeln!(out, "max |z| = {}, {status} after {} iterations", format_4dp(rs.max_modulus()), rs.iterations);
            Ok(out)
        }
    }
}

pub fn violations(r: &ViolationReport, format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => Ok(r.to_json() + "\n"),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["inequality", "trials", "violations", "worst_margin", "worst_trial"])?;
            for s in &r.inequalities {
                w.write_record([
                    s.id.name(),
                    s.trials.to_string(),
                    s.violations.to_string(),
                    opt(s.worst_margin),
                    s.worst_trial.map(|t| t.to_string()).unwrap_or_default(),
                ])?;
            }
            Ok(())
        }),
        OutputFormat::Table => {
            let c = &r.config;
            let mut out = String::new();
            let _ = writeln!(
                out,
                "seed {} | trials {} | max dim {} | tol {:e} | equality tol {:e}",
                c.seed, c.trials, c.max_dim, c.tol, c.equality_tol
            );
            let _ = writeln!(out, "{:<26} {:>7} {:>10} {:>12} {:>8}", "inequality", "trials", "violations", "worst", "trial");
            for s in &r.inequalities {
                let _ = writeln!(
                    out,
                    "{:<26} {:>7} {:>10} {:>12} {:>8}",
                    s.id.name(),
                    s.trials,
                    s.violations,
                    s.worst_margin.map(format_4dp).unwrap_or_default(),
                    s.worst_trial.map(|t| t.to_string()).unwrap_or_default()
                );
            }
            for (trial, msg) in &r.failed_trials {
                let _ = writeln!(out, "trial {trial} failed: {msg}");
            }
            let _ = writeln!(out, "{} violations", r.total_violations());
            Ok(out)
        }
    }
}

/// One CSV row per polynomial: every bound in canonical order, then the best
/// id and the actual max modulus.
pub fn corpus(reports: &[(usize, Result<BoundReport64, String>)]) -> Result<String, CliError> {
    csv_string(|w| {
        let mut header = vec!["line".to_string(), "polynomial".to_string()];
        header.extend(BoundId::ALL.iter().map(|id| id.to_string()));
        header.extend(["best".to_string(), "actual_max_modulus".to_string(), "error".to_string()]);
        w.write_record(&header)?;
        for (line, r) in reports {
            let mut rec = vec![line.to_string()];
            match r {
                Ok(r) => {
                    rec.push(r.polynomial.to_string());
                    rec.extend(BoundId::ALL.iter().map(|&id| opt(r.value(id))));
                    rec.extend([r.best.to_string(), opt(r.actual_max_modulus), String::new()]);
                }
                Err(e) => {
                    rec.push(String::new());
                    rec.extend(BoundId::ALL.iter().map(|_| String::new()));
                    rec.extend([String::new(), String::new(), e.clone()]);
                }
            }
            w.write_record(&rec)?;
        }
        Ok(())
    })
}
