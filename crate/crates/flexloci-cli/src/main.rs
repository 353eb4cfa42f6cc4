//! Command-line calculator for k-flex loci of general hypersurfaces:
//! degrees by three independent routes, stratification summaries, line
//! counts, Catalan trapezoid tables, exact contact orders, and the
//! cross-route verification suites.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flexloci::{
    build_report, catalan_closed, contact_order, is_kflex_line, lines_on_general_hypersurface,
    parse_poly, run_suite, ContactOrder, FlexReport, LocusClass, ProjPoint, RouteValue, Suite,
};
use serde_json::json;

const EXIT_OK: u8 = 0;
const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ROUTE_DISAGREEMENT: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "flexloci",
    about = "Exact degrees and dimensions of k-flex loci of general hypersurfaces",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report the k-flex locus of a general degree-d hypersurface in P^n
    Degree {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
    },
    /// Degree table over ranges of n (all meaningful k per row) and d
    Table {
        /// Smallest n
        #[arg(long)]
        n_min: i64,
        /// Largest n
        #[arg(long)]
        n_max: i64,
        /// Comma-separated list of degrees d
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<i64>,
    },
    /// Full stratification of the flex loci of one (n, d) pair
    Stratification {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        d: i64,
    },
    /// Number of lines on a general hypersurface of degree 2n-3 in P^n
    Lines {
        #[arg(long)]
        n: i64,
    },
    /// Rows 0..rows-1 of the order-a Catalan trapezoid
    Catalan {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        rows: u64,
    },
    /// Exact contact order of a hypersurface with the line through p and q
    Contact {
        /// Homogeneous polynomial in x0..x{m-1}
        #[arg(long)]
        poly: String,
        /// Point p as comma-separated rationals, e.g. "1,-1/2,0,3"
        #[arg(long)]
        p: String,
        /// Point q (projectively distinct from p)
        #[arg(long)]
        q: String,
        /// Also report whether the line is a k-flex line at p
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run a cross-checking property suite
    Verify {
        /// catalan | pieri | routes | formulas | contact | all
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let (rendered, code) = match run(&cli.command, format) {
        Ok(pair) => pair,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_USAGE);
        }
    } else {
        print!("{rendered}");
    }
    ExitCode::from(code)
}

fn run(command: &Command, format: Format) -> Result<(String, u8), String> {
    match command {
        Command::Degree { n, d, k } => cmd_degree(*n, *d, *k, format),
        Command::Table { n_min, n_max, d } => cmd_table(*n_min, *n_max, d, format),
        Command::Stratification { n, d } => cmd_stratification(*n, *d, format),
        Command::Lines { n } => cmd_lines(*n, format),
        Command::Catalan { a, rows } => cmd_catalan(*a, *rows, format),
        Command::Contact { poly, p, q, k } => cmd_contact(poly, p, q, *k, format),
        Command::Verify { suite } => cmd_verify(suite, format),
    }
}

fn locus_name(locus: &LocusClass) -> &'static str {
    match locus {
        LocusClass::WholeHypersurface => "WHOLE_HYPERSURFACE",
        LocusClass::Proper(_) => "PROPER",
        LocusClass::Empty => "EMPTY",
    }
}

/// Dimension of the locus; -1 denotes the empty locus.
fn locus_dim(n: i64, locus: &LocusClass) -> i64 {
    match locus {
        LocusClass::WholeHypersurface => n - 1,
        LocusClass::Proper(dim) => *dim,
        LocusClass::Empty => -1,
    }
}

fn route_string(route: &RouteValue) -> Option<String> {
    route.value().map(|v| v.to_string())
}

fn report_json(r: &FlexReport) -> serde_json::Value {
    json!({
        "n": r.n,
        "d": r.d,
        "k": r.k,
        "effective_k": r.effective_k,
        "stabilized": r.stabilized,
        "locus": locus_name(&r.locus),
        "dim": locus_dim(r.n, &r.locus),
        "degree": r.degree_geometric.to_string(),
        "routes": {
            "lambda": route_string(&r.route_lambda),
            "mu": route_string(&r.route_mu),
            "chern": route_string(&r.route_chern),
        },
        "routes_agree": r.routes_agree,
    })
}

fn cmd_degree(n: i64, d: i64, k: i64, format: Format) -> Result<(String, u8), String> {
    let report = build_report(n, d, k).map_err(|e| e.to_string())?;
    let code = if report.routes_agree {
        EXIT_OK
    } else {
        EXIT_ROUTE_DISAGREEMENT
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&report_json(&report)).unwrap())
                .unwrap();
        }
        Format::Csv => {
            writeln!(
                out,
                "n,d,k,effective_k,stabilized,locus,dim,degree,lambda,mu,chern,routes_agree"
            )
            .unwrap();
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                report.n,
                report.d,
                report.k,
                report.effective_k,
                report.stabilized,
                locus_name(&report.locus),
                locus_dim(report.n, &report.locus),
                report.degree_geometric,
                route_string(&report.route_lambda).unwrap_or_default(),
                route_string(&report.route_mu).unwrap_or_default(),
                route_string(&report.route_chern).unwrap_or_default(),
                report.routes_agree,
            )
            .unwrap();
        }
        Format::Text => {
            writeln!(out, "k-flex locus of a general degree-{d} hypersurface in P^{n}, k = {k}")
                .unwrap();
            if report.stabilized {
                writeln!(
                    out,
                    "  k > d+1: stratification stabilized at effective k = {}",
                    report.effective_k
                )
                .unwrap();
            }
            match report.locus {
                LocusClass::WholeHypersurface => {
                    writeln!(out, "  locus: WHOLE_HYPERSURFACE (every point is a {k}-flex)")
                        .unwrap();
                }
                LocusClass::Proper(dim) => {
                    writeln!(out, "  locus: PROPER, dim {dim}").unwrap();
                }
                LocusClass::Empty => {
                    writeln!(out, "  locus: EMPTY").unwrap();
                }
            }
            writeln!(out, "  degree: {}", report.degree_geometric).unwrap();
            for (name, route) in [
                ("lambda", &report.route_lambda),
                ("mu", &report.route_mu),
                ("chern", &report.route_chern),
            ] {
                match route {
                    RouteValue::Value(v) => writeln!(out, "  route {name}: {v}").unwrap(),
                    RouteValue::NotRun(why) => {
                        writeln!(out, "  route {name}: not run ({why})").unwrap()
                    }
                }
            }
            writeln!(out, "  routes agree: {}", report.routes_agree).unwrap();
        }
    }
    Ok((out, code))
}

struct TableCell {
    d: i64,
    degree: String,
    empty: bool,
    stabilized: bool,
}

fn cell_text(cell: &TableCell) -> String {
    let mut s = cell.degree.clone();
    if cell.empty {
        s.push_str(" (EMPTY)");
    }
    if cell.stabilized {
        s.push_str(" (stabilized)");
    }
    s
}

fn cmd_table(n_min: i64, n_max: i64, d_values: &[i64], format: Format) -> Result<(String, u8), String> {
    if n_min < 2 || n_max < n_min {
        return Err("table needs 2 <= n_min <= n_max".into());
    }
    if d_values.is_empty() {
        return Err("table needs at least one d value".into());
    }
    if d_values.iter().any(|&d| d < 1) {
        return Err("table needs d >= 1".into());
    }

    // Rows: every (n, k) with a potentially proper, nonempty locus.
    let mut rows: Vec<(i64, i64, Vec<TableCell>)> = Vec::new();
    for n in n_min..=n_max {
        for k in (n + 1)..=(2 * n - 1) {
            let mut cells = Vec::with_capacity(d_values.len());
            for &d in d_values {
                let report = build_report(n, d, k).map_err(|e| e.to_string())?;
                if !report.routes_agree {
                    return Err(format!(
                        "internal route disagreement at n={n} d={d} k={k}"
                    ));
                }
                cells.push(TableCell {
                    d,
                    degree: report.degree_geometric.to_string(),
                    empty: report.locus == LocusClass::Empty,
                    stabilized: report.stabilized,
                });
            }
            rows.push((n, k, cells));
        }
    }

    let mut out = String::new();
    match format {
        Format::Json => {
            let json_rows: Vec<_> = rows
                .iter()
                .map(|(n, k, cells)| {
                    json!({
                        "n": n,
                        "k": k,
                        "cells": cells.iter().map(|c| json!({
                            "d": c.d,
                            "degree": c.degree,
                            "empty": c.empty,
                            "stabilized": c.stabilized,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&json!({ "rows": json_rows })).unwrap())
                .unwrap();
        }
        Format::Csv => {
            let mut header = String::from("n,k");
            for &d in d_values {
                write!(header, ",d={d}").unwrap();
            }
            writeln!(out, "{header}").unwrap();
            for (n, k, cells) in &rows {
                write!(out, "{n},{k}").unwrap();
                for cell in cells {
                    write!(out, ",{}", cell_text(cell)).unwrap();
                }
                writeln!(out).unwrap();
            }
        }
        Format::Text => {
            writeln!(out, "degree of the k-flex locus (rows n,k; columns d)").unwrap();
            let mut header = format!("{:>3} {:>3}", "n", "k");
            for &d in d_values {
                write!(header, " {:>20}", format!("d={d}")).unwrap();
            }
            writeln!(out, "{header}").unwrap();
            for (n, k, cells) in &rows {
                write!(out, "{n:>3} {k:>3}").unwrap();
                for cell in cells {
                    write!(out, " {:>20}", cell_text(cell)).unwrap();
                }
                writeln!(out).unwrap();
            }
        }
    }
    Ok((out, EXIT_OK))
}

fn cmd_stratification(n: i64, d: i64, format: Format) -> Result<(String, u8), String> {
    if n < 2 || d < 1 {
        return Err("stratification needs n >= 2 and d >= 1".into());
    }
    // One row per k until the stratification stabilizes (k = d+1) or the
    // locus is empty for good (k = 2n), whichever comes first.
    let k_max = (2 * n).min(d + 1);
    let mut reports = Vec::new();
    for k in 1..=k_max {
        reports.push(build_report(n, d, k).map_err(|e| e.to_string())?);
    }
    if reports.iter().any(|r| !r.routes_agree) {
        return Err("internal route disagreement in stratification".into());
    }

    let mut out = String::new();
    match format {
        Format::Json => {
            let json_rows: Vec<_> = reports.iter().map(report_json).collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json!({ "n": n, "d": d, "strata": json_rows }))
                    .unwrap()
            )
            .unwrap();
        }
        Format::Csv => {
            writeln!(out, "k,locus,dim,degree").unwrap();
            for r in &reports {
                writeln!(
                    out,
                    "{},{},{},{}",
                    r.k,
                    locus_name(&r.locus),
                    locus_dim(n, &r.locus),
                    r.degree_geometric
                )
                .unwrap();
            }
        }
        Format::Text => {
            writeln!(out, "flex stratification of a general degree-{d} hypersurface in P^{n}")
                .unwrap();
            writeln!(out, "{:>3} {:>20} {:>5} {:>20}", "k", "locus", "dim", "degree").unwrap();
            for r in &reports {
                writeln!(
                    out,
                    "{:>3} {:>20} {:>5} {:>20}",
                    r.k,
                    locus_name(&r.locus),
                    locus_dim(n, &r.locus),
                    r.degree_geometric.to_string()
                )
                .unwrap();
            }
            if k_max == d + 1 {
                writeln!(out, "(constant for k > {}: ruled locus data)", d + 1).unwrap();
            } else {
                writeln!(out, "(empty for k > {})", 2 * n - 1).unwrap();
            }
        }
    }
    Ok((out, EXIT_OK))
}

fn cmd_lines(n: i64, format: Format) -> Result<(String, u8), String> {
    let count = lines_on_general_hypersurface(n).map_err(|e| e.to_string())?;
    let d = 2 * n - 3;
    let mut out = String::new();
    match format {
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json!({
                    "n": n,
                    "d": d,
                    "lines": count.to_string(),
                }))
                .unwrap()
            )
            .unwrap();
        }
        Format::Csv => {
            writeln!(out, "n,d,lines").unwrap();
            writeln!(out, "{n},{d},{count}").unwrap();
        }
        Format::Text => {
            writeln!(out, "a general degree-{d} hypersurface in P^{n} contains {count} lines")
                .unwrap();
        }
    }
    Ok((out, EXIT_OK))
}

fn cmd_catalan(a: u64, rows: u64, format: Format) -> Result<(String, u8), String> {
    if a == 0 {
        return Err("catalan needs a >= 1".into());
    }
    if rows == 0 {
        return Err("catalan needs rows >= 1".into());
    }
    let mut table: Vec<Vec<String>> = Vec::new();
    for u in 0..rows {
        let width = u + a; // entries v = 0 .. u+a-1
        let mut row = Vec::with_capacity(width as usize);
        for v in 0..width {
            row.push(catalan_closed(a, u, v).map_err(|e| e.to_string())?.to_string());
        }
        table.push(row);
    }
    let mut out = String::new();
    match format {
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json!({ "a": a, "rows": table })).unwrap()
            )
            .unwrap();
        }
        Format::Csv => {
            for row in &table {
                writeln!(out, "{}", row.join(",")).unwrap();
            }
        }
        Format::Text => {
            writeln!(out, "Catalan trapezoid of order {a} (rows u = 0..{})", rows - 1).unwrap();
            for row in &table {
                writeln!(out, "{}", row.join(" ")).unwrap();
            }
        }
    }
    Ok((out, EXIT_OK))
}

fn cmd_contact(
    poly_text: &str,
    p_text: &str,
    q_text: &str,
    k: Option<u32>,
    format: Format,
) -> Result<(String, u8), String> {
    let p = ProjPoint::parse(p_text).map_err(|e| e.to_string())?;
    let q = ProjPoint::parse(q_text).map_err(|e| e.to_string())?;
    if p.len() != q.len() {
        return Err(format!(
            "p has {} coordinates but q has {}",
            p.len(),
            q.len()
        ));
    }
    let f = parse_poly(poly_text, p.len()).map_err(|e| e.to_string())?;
    let order = contact_order(&f, &p, &q).map_err(|e| e.to_string())?;
    let kflex = match k {
        Some(k) => Some(is_kflex_line(&f, &p, &q, k).map_err(|e| e.to_string())?),
        None => None,
    };
    let order_string = match order {
        ContactOrder::Finite(m) => format!("FINITE({m})"),
        ContactOrder::Infinite => "INFINITE".to_string(),
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json!({
                    "order": order_string,
                    "finite": matches!(order, ContactOrder::Finite(_)),
                    "k": k,
                    "is_kflex": kflex,
                }))
                .unwrap()
            )
            .unwrap();
        }
        Format::Csv => {
            writeln!(out, "order,k,is_kflex").unwrap();
            writeln!(
                out,
                "{},{},{}",
                order_string,
                k.map(|k| k.to_string()).unwrap_or_default(),
                kflex.map(|b| b.to_string()).unwrap_or_default()
            )
            .unwrap();
        }
        Format::Text => {
            writeln!(out, "contact order: {order_string}").unwrap();
            if let (Some(k), Some(flag)) = (k, kflex) {
                writeln!(out, "{k}-flex line: {flag}").unwrap();
            }
        }
    }
    Ok((out, EXIT_OK))
}

fn cmd_verify(suite_name: &str, format: Format) -> Result<(String, u8), String> {
    let suite: Suite = suite_name.parse()?;
    let results = run_suite(suite);
    let all_passed = results.iter().all(|r| r.passed());
    let mut out = String::new();
    match format {
        Format::Json => {
            let json_rows: Vec<_> = results
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.name,
                        "checks": r.checks,
                        "passed": r.passed(),
                        "failures": r.failures,
                    })
                })
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&json!({
                    "suites": json_rows,
                    "all_passed": all_passed,
                }))
                .unwrap()
            )
            .unwrap();
        }
        Format::Csv => {
            writeln!(out, "suite,checks,passed,failures").unwrap();
            for r in &results {
                writeln!(out, "{},{},{},{}", r.name, r.checks, r.passed(), r.failures.len())
                    .unwrap();
            }
        }
        Format::Text => {
            for r in &results {
                if r.passed() {
                    writeln!(out, "PASS {} ({} checks)", r.name, r.checks).unwrap();
                } else {
                    writeln!(out, "FAIL {} ({} checks)", r.name, r.checks).unwrap();
                    for failure in &r.failures {
                        writeln!(out, "  counterexample: {failure}").unwrap();
                    }
                }
            }
            writeln!(out, "{}", if all_passed { "all suites passed" } else { "FAILURES" })
                .unwrap();
        }
    }
    Ok((out, if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED }))
}
