use std::fs;
use std::io::{self, BufReader, Write};
use std::process::ExitCode;

use hidesign::bounds::{
    asymptotic_bound, bound_table, display_truncated, table_to_csv, table_to_json, AsymptoteReport,
    BoundReport,
};
use hidesign::designs::{
    generate, lift_by_root_index, verify_harmonic_index, verify_spherical_design, GeneratorKind,
    KernelCertificate, PointSet, DEFAULT_TOL,
};
use hidesign::exactnum::{format_rational, QuadExt};
use hidesign::tightness::{
    scan_graph_corpus, tightness_dossier, Graph6Reader, SimpleGraph, Status, TightnessDossier,
};
use serde::Serialize;

use crate::output::Sink;
use crate::range::IntRange;
use crate::{ConstructKind, EmbedArgs, Format, TableArgs, VerifyArgs};

type CmdResult = Result<ExitCode, String>;

fn io_err(e: io::Error) -> String {
    e.to_string()
}

fn lib_err(e: hidesign::Error) -> String {
    e.to_string()
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn read(path: &std::path::Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn table(args: &TableArgs, format: Format, out: &mut Sink) -> CmdResult {
    let ts: Vec<u32> = args
        .t
        .0
        .iter()
        .copied()
        .filter(|t| !args.even || t % 2 == 0)
        .collect();
    if ts.is_empty() {
        return Err("no degrees left after --even".into());
    }
    let reports = bound_table(&args.n.0, &ts).map_err(lib_err)?;
    match format {
        Format::Json => out.line(&table_to_json(&reports)),
        Format::Csv => write!(
            out,
            "{}",
            table_to_csv(&reports, args.truncate.unwrap_or(2))
        ),
        Format::Text => text_table(&reports, &args.n.0, &ts, args.truncate, out),
    }
    .map_err(io_err)?;
    Ok(ExitCode::SUCCESS)
}

fn cell(r: &BoundReport, truncate: Option<u32>) -> String {
    match truncate {
        Some(d) => display_truncated(r, d),
        None if r.integral => format!("{}", r.b.round()),
        None => format!("{}", r.b),
    }
}

fn text_table(
    reports: &[BoundReport],
    ns: &[u32],
    ts: &[u32],
    truncate: Option<u32>,
    out: &mut Sink,
) -> io::Result<()> {
    if reports.len() == 1 {
        out.line(&cell(&reports[0], truncate))?;
    } else {
        let cells: Vec<String> = reports.iter().map(|r| cell(r, truncate)).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1).max(4);
        let mut header = format!("{:>5}", "t\\n");
        for n in ns {
            header.push_str(&format!(" {n:>width$}"));
        }
        out.line(&header)?;
        for (row, t) in cells.chunks(ns.len()).zip(ts) {
            let mut line = format!("{t:>5}");
            for c in row {
                line.push_str(&format!(" {c:>width$}"));
            }
            out.line(&line)?;
        }
    }
    for t in ts.iter().filter(|t| *t % 2 == 1) {
        let note = reports
            .iter()
            .find_map(|r| (r.t == *t).then(|| r.note.clone()).flatten());
        if let Some(note) = note {
            out.line(&format!("note (t={t}): {note}; A(n,{t}) = 2"))?;
        }
    }
    Ok(())
}

pub fn construct(kind: ConstructKind, out: &mut Sink) -> CmdResult {
    let set = match kind {
        ConstructKind::Lift {
            base,
            n,
            t,
            root_index,
        } => {
            let x = PointSet::from_json_str(&read(&base)?).map_err(lib_err)?;
            if x.dim() + 1 != n as usize {
                return Err(format!(
                    "base set lives on S^{}, a lift to dimension {n} needs S^{}",
                    x.dim() - 1,
                    n.saturating_sub(2)
                ));
            }
            lift_by_root_index(&x, t, root_index).map_err(lib_err)?
        }
        other => generate(generator(other)).map_err(lib_err)?,
    };
    out.line(&set.to_json_string()).map_err(io_err)?;
    Ok(ExitCode::SUCCESS)
}

fn generator(kind: ConstructKind) -> GeneratorKind {
    match kind {
        ConstructKind::RegularPolygon { m } => GeneratorKind::RegularPolygon { m },
        ConstructKind::TwoPointS1 { e, j } => GeneratorKind::TwoPointS1 { e, j },
        ConstructKind::CrossPolytopeHalf { n } => GeneratorKind::CrossPolytopeHalf { n },
        ConstructKind::Simplex { n } => GeneratorKind::Simplex { n },
        ConstructKind::IcosahedronHalf => GeneratorKind::IcosahedronHalf,
        ConstructKind::E8Half => GeneratorKind::E8Half,
        ConstructKind::E8Roots => GeneratorKind::E8Roots,
        ConstructKind::Cell600Half => GeneratorKind::Cell600Half,
        ConstructKind::X0Plus => GeneratorKind::X0Plus,
        ConstructKind::X0Minus => GeneratorKind::X0Minus,
        ConstructKind::Lift { .. } => unreachable!("handled by the caller"),
    }
}

pub fn verify(args: &VerifyArgs, format: Format, out: &mut Sink) -> CmdResult {
    let x = PointSet::from_json_str(&read(&args.input)?).map_err(lib_err)?;
    let tol = args.tol.unwrap_or(DEFAULT_TOL);
    let cert = if args.spherical {
        verify_spherical_design(&x, args.t, tol)
    } else {
        verify_harmonic_index(&x, args.t, tol)
    }
    .map_err(lib_err)?;
    match format {
        Format::Json => out.line(&pretty(&cert)),
        Format::Csv => out
            .line("t,raw_sum,relative_residual,passed")
            .and_then(|_| {
                cert.degrees.iter().try_for_each(|d| {
                    out.line(&format!(
                        "{},{},{},{}",
                        d.t, d.raw_sum, d.relative_residual, d.passed
                    ))
                })
            }),
        Format::Text => text_certificate(&cert, x.source(), out),
    }
    .map_err(io_err)?;
    Ok(if cert.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn text_certificate(cert: &KernelCertificate, source: &str, out: &mut Sink) -> io::Result<()> {
    out.line(&format!(
        "{source}: {} points on S^{}, tolerance {:e}",
        cert.size,
        cert.n - 1,
        cert.tolerance
    ))?;
    for d in &cert.degrees {
        let mark = if d.passed { "pass" } else { "FAIL" };
        out.line(&format!(
            "  t={:<3} {mark}  relative residual {:.3e}",
            d.t, d.relative_residual
        ))?;
    }
    out.line(if cert.passed { "pass" } else { "fail" })
}

/// `v` to 10 significant digits, the precision of the published limits.
fn significant(v: f64) -> String {
    let int_digits = if v.abs() < 1.0 {
        1
    } else {
        v.abs().log10().floor() as usize + 1
    };
    format!("{:.*}", 10usize.saturating_sub(int_digits), v)
}

pub fn asymptote(ns: &IntRange, format: Format, out: &mut Sink) -> CmdResult {
    let reports: Vec<AsymptoteReport> =
        ns.0.iter()
            .map(|&n| asymptotic_bound(n))
            .collect::<Result<_, _>>()
            .map_err(lib_err)?;
    match format {
        Format::Json => out.line(&pretty(&reports)),
        Format::Csv => out
            .line("n,j1,fvalue,limit,gamma_corrected_limit,absolute_bound")
            .and_then(|_| {
                reports.iter().try_for_each(|a| {
                    out.line(&format!(
                        "{},{},{},{},{},{}",
                        a.n, a.j1, a.fvalue, a.limit, a.gamma_corrected_limit, a.absolute_bound
                    ))
                })
            }),
        Format::Text => reports.iter().try_for_each(|a| {
            out.line(&format!(
                "b_{} = {} ({})   with Γ normalization: {}",
                a.n,
                significant(a.limit),
                a.absolute_bound,
                significant(a.gamma_corrected_limit)
            ))
        }),
    }
    .map_err(io_err)?;
    Ok(ExitCode::SUCCESS)
}

pub fn tight(ns: &IntRange, format: Format, out: &mut Sink) -> CmdResult {
    let dossiers: Vec<TightnessDossier> =
        ns.0.iter()
            .map(|&n| tightness_dossier(n))
            .collect::<Result<_, _>>()
            .map_err(lib_err)?;
    match format {
        Format::Json if dossiers.len() == 1 => out.line(&pretty(&dossiers[0])),
        Format::Json => out.line(&pretty(&dossiers)),
        Format::Csv => out
            .line("n,criterion,status,evidence,detail")
            .and_then(|_| {
                dossiers.iter().try_for_each(|d| {
                    d.verdicts.iter().try_for_each(|v| {
                        out.line(&format!(
                            "{},{:?},{:?},{:?},\"{}\"",
                            d.n,
                            v.criterion,
                            v.status,
                            v.evidence,
                            v.detail.replace('"', "\"\"")
                        ))
                    })
                })
            }),
        Format::Text => dossiers.iter().try_for_each(|d| text_dossier(d, out)),
    }
    .map_err(io_err)?;
    Ok(ExitCode::SUCCESS)
}

fn text_dossier(d: &TightnessDossier, out: &mut Sink) -> io::Result<()> {
    let integral = if d.integral {
        "integer"
    } else {
        "not an integer"
    };
    out.line(&format!(
        "n = {}, t = {}: b = {} ({integral}), α = {}",
        d.n,
        d.t,
        format_rational(&d.b),
        d.alpha
    ))?;
    if let (Some(k), Some(p)) = (d.lrs_k, d.p) {
        out.line(&format!("  k = {k}, p = {p}"))?;
    }
    for v in &d.verdicts {
        let status = match v.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Inapplicable => "n/a ",
        };
        out.line(&format!(
            "  [{status}] {:?} ({:?}): {}",
            v.criterion, v.evidence, v.detail
        ))?;
    }
    out.line(if d.excluded {
        "  excluded"
    } else {
        "  not excluded"
    })
}

pub fn embed(args: &EmbedArgs, out: &mut Sink) -> CmdResult {
    let b2: QuadExt = args.b2.parse().map_err(lib_err)?;
    let graphs: Box<dyn Iterator<Item = hidesign::Result<SimpleGraph>>> =
        if args.graphs.as_os_str() == "-" {
            Box::new(Graph6Reader::new(io::stdin().lock()))
        } else if args.graphs.extension().is_some_and(|e| e == "json") {
            Box::new(json_graphs(&read(&args.graphs)?)?.into_iter().map(Ok))
        } else {
            let file = fs::File::open(&args.graphs)
                .map_err(|e| format!("{}: {e}", args.graphs.display()))?;
            Box::new(Graph6Reader::new(BufReader::new(file)))
        };
    let summary = scan_graph_corpus(graphs, &b2, args.n, |record| {
        if !args.feasible_only || record.feasible {
            let line = serde_json::to_string(record)?;
            out.line(&line)
                .map_err(|e| hidesign::Error::Unsupported(e.to_string()))?;
        }
        Ok(())
    })
    .map_err(lib_err)?;
    eprintln!("scanned {}, feasible {}", summary.scanned, summary.feasible);
    Ok(ExitCode::SUCCESS)
}

/// One graph object or an array of them.
fn json_graphs(text: &str) -> Result<Vec<SimpleGraph>, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        single => vec![single],
    };
    items
        .iter()
        .enumerate()
        .map(|(i, v)| {
            SimpleGraph::from_json_str(&v.to_string()).map_err(|e| format!("graph {i}: {e}"))
        })
        .collect()
}
