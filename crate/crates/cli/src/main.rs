//! Command line front end: parses a fan document and runs one of the
//! computations from the library. Exit codes: 0 on success, 2 when the input
//! fails validation, 3 when a computation cannot produce a result.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use toricgw::divisor::{self, KaehlerClass};
use toricgw::error::{Error, ErrorKind};
use toricgw::fan::{validate_fan, Fan};
use toricgw::polytope;
use toricgw::primcoll;
use toricgw::rat::{format_rational, parse_rational};
use toricgw::relations;
use toricgw::report::{parse_fan_file, run_report, FanDocument, ReportOptions};

#[derive(Parser)]
#[command(name = "toricgw", version, about = "Exact toric Gromov-width upper bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Fan document (JSON)
    file: PathBuf,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KappaArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Replace kappa by an equivalent nonnegative representative first
    #[arg(long)]
    normalize: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Report the structural flags of the fan
    Validate(CommonArgs),
    /// Run every computation and print the full bound report
    Report {
        #[command(flatten)]
        kappa: KappaArgs,
        /// Sup-norm cap for the width direction search
        #[arg(long, value_name = "N")]
        search_bound: Option<u64>,
    },
    /// Minimum of the pairing over nonzero nonnegative relations
    Gamma(KappaArgs),
    /// Degree-capped maximum of the pairing
    Lambda(KappaArgs),
    /// Primitive collections with their relations and degrees
    Primcoll(CommonArgs),
    /// Whether every primitive relation has positive degree
    Fano(CommonArgs),
    /// Lattice width of the momentum polytope
    Width {
        #[command(flatten)]
        kappa: KappaArgs,
        /// Sup-norm cap for the width direction search
        #[arg(long, value_name = "N")]
        search_bound: Option<u64>,
    },
    /// Momentum polytope halfspaces and vertices
    Polytope(KappaArgs),
    /// Free-curve certificate for a nonnegative relation
    CurveCert {
        #[command(flatten)]
        common: CommonArgs,
        /// Comma-separated relation entries, one per ray
        #[arg(long, value_name = "A0,A1,...", allow_hyphen_values = true)]
        relation: String,
        /// Comma-separated rational markers for the support rays
        #[arg(long, value_name = "C0,C1,...", allow_hyphen_values = true)]
        markers: Option<String>,
    },
    /// Divisor class group of the fan
    ClassGroup(CommonArgs),
    /// Whether the class pairs positively with every wall curve
    Ample(KappaArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err.kind() {
                ErrorKind::Validation => ExitCode::from(2),
                ErrorKind::Computation => ExitCode::from(3),
            }
        }
    }
}

fn load(path: &Path) -> Result<FanDocument, Error> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_fan_file(&bytes)
}

/// Fan gated on the smooth-complete standing hypothesis.
fn smooth_complete_fan(doc: &FanDocument) -> Result<Fan, Error> {
    let fan = doc.fan()?;
    if !validate_fan(&fan).smooth_complete() {
        return Err(Error::NotSmoothComplete);
    }
    Ok(fan)
}

fn class_for(doc: &FanDocument, fan: &Fan, normalize: bool) -> Result<KaehlerClass, Error> {
    let kappa = doc.kaehler_class(fan)?;
    if normalize {
        divisor::normalize_kappa(fan, &kappa)
    } else {
        if let Some(index) = kappa.first_negative() {
            return Err(Error::NegativeKappa { index });
        }
        Ok(kappa)
    }
}

fn rationals_json(values: &[BigRational]) -> serde_json::Value {
    json!(values.iter().map(format_rational).collect::<Vec<_>>())
}

fn ints_json(values: &[BigInt]) -> serde_json::Value {
    json!(values.iter().map(BigInt::to_string).collect::<Vec<_>>())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Validate(args) => {
            let doc = load(&args.file)?;
            let fan = doc.fan()?;
            let report = validate_fan(&fan);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!(
                    "simplicial={} smooth={} complete={} pure={}",
                    report.simplicial, report.smooth, report.complete, report.pure
                );
            }
            if !report.smooth_complete() {
                return Err(Error::NotSmoothComplete);
            }
            Ok(())
        }
        Command::Report { kappa, search_bound } => {
            let doc = load(&kappa.common.file)?;
            let options = ReportOptions {
                normalize: kappa.normalize,
                search_bound: search_bound.map(BigInt::from),
            };
            let report = run_report(&doc, &options)?;
            if kappa.common.json {
                println!("{}", report.to_json());
            } else {
                print!("{report}");
            }
            Ok(())
        }
        Command::Gamma(args) => {
            let doc = load(&args.common.file)?;
            let fan = smooth_complete_fan(&doc)?;
            let kappa = class_for(&doc, &fan, args.normalize)?;
            let g = relations::gamma(&fan, &kappa)?;
            if args.common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "value": format_rational(&g.value),
                        "minimizer": g.minimizer.entries().iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "attained_by_binary": g.attained_by_binary,
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "gamma = {} at relation [{}] (binary minimizer: {})",
                    format_rational(&g.value),
                    g.minimizer
                        .entries()
                        .iter()
                        .map(BigInt::to_string)
                        .collect::<Vec<_>>()
                        .join(", "),
                    g.attained_by_binary
                );
            }
            Ok(())
        }
        Command::Lambda(args) => {
            let doc = load(&args.common.file)?;
            let fan = smooth_complete_fan(&doc)?;
            let kappa = class_for(&doc, &fan, args.normalize)?;
            let value = relations::lambda_lu(&fan, &kappa)?;
            if args.common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "value": format_rational(&value) }))
                        .unwrap()
                );
            } else {
                println!("lambda = {}", format_rational(&value));
            }
            Ok(())
        }
        Command::Primcoll(args) => {
            let doc = load(&args.file)?;
            let fan = smooth_complete_fan(&doc)?;
            let mut rows = Vec::new();
            for coll in primcoll::primitive_collections(&fan) {
                let rel = primcoll::primitive_relation(&fan, &coll)?;
                rows.push((coll, rel));
            }
            if args.json {
                let items: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|(coll, rel)| {
                        json!({
                            "collection": coll.indices,
                            "cone": rel.sigma,
                            "coefficients": rel.coefficients.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                            "degree": rel.degree.to_string(),
                        })
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&items).unwrap());
            } else {
                for (coll, rel) in &rows {
                    println!(
                        "collection {:?} -> cone {:?} coefficients {:?} degree {}",
                        coll.indices,
                        rel.sigma,
                        rel.coefficients
                            .iter()
                            .map(BigInt::to_string)
                            .collect::<Vec<_>>(),
                        rel.degree
                    );
                }
            }
            Ok(())
        }
        Command::Fano(args) => {
            let doc = load(&args.file)?;
            let fan = smooth_complete_fan(&doc)?;
            let fano = primcoll::is_fano(&fan)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "fano": fano })).unwrap());
            } else {
                println!("fano: {fano}");
            }
            Ok(())
        }
        Command::Width { kappa, search_bound } => {
            let doc = load(&kappa.common.file)?;
            let fan = smooth_complete_fan(&doc)?;
            let class = class_for(&doc, &fan, kappa.normalize)?;
            let g = relations::gamma(&fan, &class)?;
            let p = polytope::momentum_polytope(&fan, &class)?;
            let width =
                polytope::lattice_width_certified(&p, &g.value, search_bound.map(BigInt::from))?;
            if kappa.common.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "value": format_rational(&width.value),
                        "direction": width.direction.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                        "search_bound": width.search_bound.to_string(),
                        "certified_by_gamma": width.gamma_certified,
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "lattice width = {} in direction [{}] (search bound {}, certified: {})",
                    format_rational(&width.value),
                    width
                        .direction
                        .iter()
                        .map(BigInt::to_string)
                        .collect::<Vec<_>>()
                        .join(", "),
                    width.search_bound,
                    width.gamma_certified
                );
            }
            Ok(())
        }
        Command::Polytope(args) => {
            let doc = load(&args.common.file)?;
            let fan = smooth_complete_fan(&doc)?;
            let kappa = class_for(&doc, &fan, args.normalize)?;
            let p = polytope::momentum_polytope(&fan, &kappa)?;
            let vertices = p.vertices()?;
            if args.common.json {
                let halfspaces: Vec<serde_json::Value> = p
                    .halfspaces()
                    .iter()
                    .map(|(n, k)| json!({ "normal": ints_json(n), "offset": format_rational(k) }))
                    .collect();
                let verts: Vec<serde_json::Value> =
                    vertices.iter().map(|v| rationals_json(v)).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "halfspaces": halfspaces,
                        "vertices": verts,
                    }))
                    .unwrap()
                );
            } else {
                for (n, k) in p.halfspaces() {
                    println!(
                        "halfspace: <m, [{}]> >= {}",
                        n.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", "),
                        format_rational(&-k.clone())
                    );
                }
                for v in vertices {
                    println!(
                        "vertex: ({})",
                        v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
                    );
                }
            }
            Ok(())
        }
        Command::CurveCert {
            common,
            relation,
            markers,
        } => {
            let doc = load(&common.file)?;
            let fan = doc.fan()?;
            let entries: Vec<BigInt> = relation
                .split(',')
                .map(|t| {
                    t.trim().parse().map_err(|_| Error::BadNumber {
                        value: t.to_string(),
                        reason: "relation entries must be integers".into(),
                    })
                })
                .collect::<Result<_, Error>>()?;
            let marker_values: Option<Vec<BigRational>> = match &markers {
                Some(text) => Some(
                    text.split(',')
                        .map(|t| parse_rational(t.trim()))
                        .collect::<Result<_, Error>>()?,
                ),
                None => None,
            };
            // the pairing accepts any representative, negative entries included
            let kappa = match &doc.kappa {
                Some(_) => Some(doc.kaehler_class(&fan)?),
                None => None,
            };
            let cert = primcoll::free_curve_certificate(
                &fan,
                &entries,
                marker_values.as_deref(),
                kappa.as_ref(),
            )?;
            if common.json {
                let markers_json: Vec<serde_json::Value> = cert
                    .markers
                    .iter()
                    .map(|(ray, c)| json!({ "ray": ray, "marker": format_rational(c) }))
                    .collect();
                let exponents: Vec<serde_json::Value> = cert
                    .exponents
                    .iter()
                    .map(|table| {
                        json!(table
                            .iter()
                            .map(|(c, e)| json!([format_rational(c), e.to_string()]))
                            .collect::<Vec<_>>())
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "relation": ints_json(&cert.relation),
                        "markers": markers_json,
                        "exponents": exponents,
                        "symplectic_area": cert.symplectic_area.as_ref().map(format_rational),
                    }))
                    .unwrap()
                );
            } else {
                for (ray, c) in &cert.markers {
                    println!("marker: ray {ray} -> {}", format_rational(c));
                }
                for (coord, table) in cert.exponents.iter().enumerate() {
                    println!(
                        "coordinate {coord}: {}",
                        table
                            .iter()
                            .map(|(c, e)| format!("({}, {})", format_rational(c), e))
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
                match &cert.symplectic_area {
                    Some(area) => println!("symplectic area = {}", format_rational(area)),
                    None => println!("symplectic area: no kappa supplied"),
                }
            }
            Ok(())
        }
        Command::ClassGroup(args) => {
            let doc = load(&args.file)?;
            let fan = doc.fan()?;
            let group = divisor::class_group(&fan);
            if args.json {
                let presentation: Vec<serde_json::Value> = group
                    .presentation
                    .row_vectors()
                    .iter()
                    .map(|row| ints_json(row))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "free_rank": group.free_rank,
                        "torsion": ints_json(&group.torsion),
                        "presentation": presentation,
                    }))
                    .unwrap()
                );
            } else {
                println!("free rank: {}", group.free_rank);
                println!(
                    "torsion: [{}]",
                    group
                        .torsion
                        .iter()
                        .map(BigInt::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                );
                for row in group.presentation.row_vectors() {
                    println!(
                        "generator row: [{}]",
                        row.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ")
                    );
                }
            }
            Ok(())
        }
        Command::Ample(args) => {
            let doc = load(&args.common.file)?;
            let fan = smooth_complete_fan(&doc)?;
            let kappa = class_for(&doc, &fan, args.normalize)?;
            let ample = divisor::is_ample(&fan, &kappa)?;
            if args.common.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "ample": ample })).unwrap());
            } else {
                println!("ample: {ample}");
            }
            Ok(())
        }
    }
}
