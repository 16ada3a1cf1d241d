use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use centralspec_core::closedform::{charpoly_central_regular, charpoly_cvjoin, FactoredCharPoly, JoinPartner};
use centralspec_core::exact::{char_poly_exact, parse_rational};
use centralspec_core::spectra::{char_poly, eigenvalues_sym};
use centralspec_core::verify::{
    cospectral_cvjoin_family, default_catalog, default_grid, discrepancy_findings, parse_catalog,
};
use centralspec_core::{
    a_alpha_energy, a_alpha_matrix, a_alpha_matrix_exact, central_graph, central_vertex_join, generate, parse_edge_list,
    parse_grid, sweep, Alpha, Family, Graph, VerificationReport,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error(transparent)]
    Core(#[from] centralspec_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use centralspec_core::Error as E;
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } => 2,
            CliError::Core(E::Contract(_) | E::Consistency(_)) => 3,
            CliError::Core(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// A_α spectra of central graphs and central vertex joins.
///
/// Graph arguments are edge-list files (`n` on the first line, then one
/// `i j` pair per line); `-` reads standard input.
#[derive(Parser)]
#[command(name = "centralspec", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a standard graph as an edge list.
    Generate {
        family: Family,
        params: Vec<usize>,
        #[arg(long)]
        out: Option<String>,
    },
    /// Eigenvalues of A_α(G), descending.
    Spectrum {
        graph: String,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[arg(long)]
        json: bool,
    },
    /// Characteristic polynomial det(xI - A_α(G)), ascending coefficients.
    Charpoly {
        graph: String,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[arg(long)]
        json: bool,
    },
    /// Emit the central graph C(G).
    Central {
        graph: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Emit the central vertex join G1 ∨̇ G2.
    Cvjoin {
        g1: String,
        g2: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Closed-form spectrum with the factor each eigenvalue comes from.
    ClosedSpectrum {
        kind: ClosedKind,
        g1: String,
        /// Second graph (cvjoin only); omit when using --kpq.
        g2: Option<String>,
        /// Use K_{p,q} as the second graph, given as `p,q`.
        #[arg(long, value_parser = parse_pair)]
        kpq: Option<(usize, usize)>,
        #[arg(long, default_value = "0.5")]
        alpha: String,
        #[arg(long)]
        json: bool,
    },
    /// A_α-energy, Σ |λ_i - 2αm/n|, for 0 <= α < 1.
    Energy {
        graph: String,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare closed forms against the eigensolver over a catalog.
    Verify {
        /// Catalog file (`central <g>`, `cvjoin <g> <g>`, `kpq <g> p q`);
        /// defaults to the built-in catalog.
        #[arg(long)]
        catalog: Option<String>,
        /// Comma-separated α values, decimal or p/q.
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Shorthand for --format json.
        #[arg(long)]
        json: bool,
        /// Also record closed-form discrepancy findings.
        #[arg(long)]
        findings: bool,
    },
    /// Check that G1∨̇H and G2∨̇H are A_α-cospectral over a grid.
    Cospectral {
        g1: String,
        g2: String,
        h: String,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct AlphaArgs {
    /// α as a decimal or exact fraction p/q.
    #[arg(long, default_value = "0")]
    alpha: String,
    /// Exact rational α; overrides --alpha.
    #[arg(long)]
    exact: Option<String>,
}

impl AlphaArgs {
    fn resolve(&self) -> Result<Alpha> {
        let alpha: Alpha = match &self.exact {
            Some(s) => parse_rational(s)
                .map(Alpha::Exact)
                .ok_or_else(|| CliError::Usage(format!("--exact {s}: expected p/q or a terminating decimal")))?,
            None => self.alpha.parse()?,
        };
        alpha.check_closed_unit()?;
        Ok(alpha)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosedKind {
    Central,
    Cvjoin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (p, q) = s.split_once(',').ok_or("expected p,q")?;
    Ok((
        p.trim().parse().map_err(|_| format!("bad p {p:?}"))?,
        q.trim().parse().map_err(|_| format!("bad q {q:?}"))?,
    ))
}

fn read_source(path: &str) -> Result<String> {
    let io_err = |source| CliError::Io { path: path.to_string(), source };
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn load_graph(path: &str) -> Result<Graph> {
    let g = parse_edge_list(&read_source(path)?)?;
    let label = if path == "-" {
        "stdin".to_string()
    } else {
        Path::new(path)
            .file_stem()
            .map_or_else(|| path.to_string(), |s| s.to_string_lossy().into_owned())
    };
    Ok(g.with_label(label))
}

fn emit(text: &str, out: Option<&str>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source }),
        None => {
            let mut stdout = io::stdout().lock();
            // A closed pipe downstream is not an error for us.
            let _ = stdout.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn emit_json(v: &serde_json::Value) -> Result<()> {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("json value")), None)
}

fn grid_or_default(grid: Option<&str>) -> Result<Vec<Alpha>> {
    let grid = match grid {
        Some(s) => parse_grid(s)?,
        None => default_grid(),
    };
    for a in &grid {
        a.check_closed_unit()?;
    }
    Ok(grid)
}

fn print_report(report: &VerificationReport, format: Format) -> Result<()> {
    match format {
        Format::Json => emit(&format!("{}\n", report.to_json()), None)?,
        Format::Csv => {
            emit(&report.to_csv(), None)?;
            let s = &report.summary;
            eprintln!(
                "passed {} failed {} skipped {} worst deviation {}",
                s.passed,
                s.failed,
                s.skipped,
                s.worst_deviation.map_or("n/a".into(), |d| format!("{d:.3e}"))
            );
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::Verification(format!("{} case(s) failed", report.summary.failed)))
    }
}

fn closed_form(kind: ClosedKind, g1: &Graph, g2: Option<&str>, kpq: Option<(usize, usize)>, a: f64) -> Result<(String, FactoredCharPoly)> {
    Ok(match (kind, g2, kpq) {
        (ClosedKind::Central, None, None) => (format!("C({})", g1.label()), charpoly_central_regular(g1, a)?),
        (ClosedKind::Central, ..) => return Err(CliError::Usage("closed-spectrum central takes one graph".into())),
        (ClosedKind::Cvjoin, Some(path), None) => {
            let g2 = load_graph(path)?;
            let partner = if g2.regularity().is_some() {
                JoinPartner::Regular(&g2)
            } else {
                return Err(centralspec_core::Error::Precondition(format!(
                    "G2 {} is not regular; use --kpq for complete bipartite partners",
                    g2.label()
                ))
                .into());
            };
            (format!("{}∨̇{}", g1.label(), g2.label()), charpoly_cvjoin(g1, partner, a)?)
        }
        (ClosedKind::Cvjoin, None, Some((p, q))) => {
            (format!("{}∨̇K{p},{q}", g1.label()), charpoly_cvjoin(g1, JoinPartner::Kpq(p, q), a)?)
        }
        (ClosedKind::Cvjoin, ..) => {
            return Err(CliError::Usage("closed-spectrum cvjoin needs exactly one of <g2> or --kpq p,q".into()))
        }
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate { family, params, out } => {
            emit(&generate(family, &params)?.to_edge_list(), out.as_deref())
        }
        Command::Central { graph, out } => {
            emit(&central_graph(&load_graph(&graph)?).to_edge_list(), out.as_deref())
        }
        Command::Cvjoin { g1, g2, out } => {
            let (g1, g2) = (load_graph(&g1)?, load_graph(&g2)?);
            emit(&central_vertex_join(&g1, &g2).to_edge_list(), out.as_deref())
        }
        Command::Spectrum { graph, alpha, json } => {
            let g = load_graph(&graph)?;
            let alpha = alpha.resolve()?;
            let m = match alpha.as_exact() {
                Some(q) => a_alpha_matrix_exact(&g, q)?.to_f64(),
                None => a_alpha_matrix(&g, alpha.value())?,
            };
            let s = eigenvalues_sym(&m)?;
            if json {
                emit_json(&json!({
                    "graph": g.label(),
                    "alpha": alpha.to_string(),
                    "order": g.order(),
                    "spectrum": s,
                }))
            } else {
                let lines: String = s.values().iter().map(|v| format!("{v:.12}\n")).collect();
                emit(&lines, None)
            }
        }
        Command::Charpoly { graph, alpha, json } => {
            let g = load_graph(&graph)?;
            let alpha = alpha.resolve()?;
            let (text, value) = match alpha.as_exact() {
                Some(q) => {
                    let p = char_poly_exact(&a_alpha_matrix_exact(&g, q)?);
                    (p.to_string(), serde_json::to_value(&p).expect("poly serializes"))
                }
                None => {
                    let p = char_poly(&a_alpha_matrix(&g, alpha.value())?)?;
                    (p.to_string(), serde_json::to_value(&p).expect("poly serializes"))
                }
            };
            if json {
                emit_json(&json!({
                    "graph": g.label(),
                    "alpha": alpha.to_string(),
                    "exact": alpha.as_exact().is_some(),
                    "charpoly": value,
                }))
            } else {
                emit(&format!("{text}\n"), None)
            }
        }
        Command::ClosedSpectrum { kind, g1, g2, kpq, alpha, json } => {
            let alpha: Alpha = alpha.parse()?;
            alpha.check_closed_unit()?;
            let g1 = load_graph(&g1)?;
            let (label, f) = closed_form(kind, &g1, g2.as_deref(), kpq, alpha.value())?;
            let rooted = f.rooted_factors()?;
            let spectrum = f.spectrum()?;
            if json {
                let factors: Vec<_> = rooted
                    .iter()
                    .map(|(fac, roots)| json!({"factor": fac, "roots": roots}))
                    .collect();
                emit_json(&json!({
                    "graph": label,
                    "alpha": alpha.to_string(),
                    "order": f.order(),
                    "linear": f.linear,
                    "factors": factors,
                    "spectrum": spectrum,
                }))
            } else {
                let mut out = format!("{label} at α = {alpha}, order {}\n", f.order());
                if f.linear.mult > 0 {
                    out += &format!("  {:.12} ×{}  [linear factor λ - 2α]\n", f.linear.root, f.linear.mult);
                }
                for (fac, roots) in rooted {
                    let roots: Vec<String> = roots.iter().map(|r| format!("{r:.12}")).collect();
                    out += &format!("  {} ×{}  [{}]\n", roots.join(", "), fac.mult, fac.source);
                }
                emit(&out, None)
            }
        }
        Command::Energy { graph, alpha, json } => {
            let g = load_graph(&graph)?;
            let alpha: Alpha = alpha.parse()?;
            let e = a_alpha_energy(&g, alpha.value())?;
            if json {
                emit_json(&json!({"graph": g.label(), "alpha": alpha.to_string(), "energy": e}))
            } else {
                emit(&format!("{e:.12}\n"), None)
            }
        }
        Command::Verify { catalog, grid, format, json, findings } => {
            let cases = match catalog {
                Some(path) => parse_catalog(&read_source(&path)?, |p| {
                    load_graph(p).map_err(|e| match e {
                        CliError::Core(e) => e,
                        other => centralspec_core::Error::Precondition(other.to_string()),
                    })
                })?,
                None => default_catalog(),
            };
            let grid = grid_or_default(grid.as_deref())?;
            let mut report = sweep(&cases, &grid);
            if findings {
                report = report.with_findings(discrepancy_findings());
            }
            print_report(&report, if json { Format::Json } else { format })
        }
        Command::Cospectral { g1, g2, h, grid, format, json } => {
            let (g1, g2, h) = (load_graph(&g1)?, load_graph(&g2)?, load_graph(&h)?);
            let grid = grid_or_default(grid.as_deref())?;
            let report = cospectral_cvjoin_family(&g1, &g2, &h, &grid)?;
            if !json && format == Format::Csv {
                if let Some(c) = &report.certificate {
                    eprintln!(
                        "orders {:?} sizes {:?} degree multisets equal {} non-isomorphic: {}",
                        c.orders,
                        c.sizes,
                        c.degree_multisets_equal,
                        c.non_isomorphism.as_deref().unwrap_or("no witness found")
                    );
                }
            }
            print_report(&report, if json { Format::Json } else { format })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
