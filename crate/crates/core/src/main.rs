//! Command-line front end: model validation, identity certification,
//! spectra, twists, braid matrices, tree enumeration, and the bounded
//! uniqueness search.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use serde_json::json;

use anyon_braid::braid::BraidWord;
use anyon_braid::fusion::{
    bundled_model, from_json_str, hexagon_residual, pentagon_residual,
    solve_twists, transparent_labels, triangle_check, validate, FusionSystem,
};
use anyon_braid::state::{
    braid_map, comb_basis, enumerate_shapes, superselection_spectrum, uniqueness_search,
    UnitaryBlockMap,
};

#[derive(Parser)]
#[command(name = "anyon-braid", version, about = "Braid calculus and braided 6j fusion systems")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Validate a fusion model: structural checks plus coherence residuals.
    Validate(ModelArgs),
    /// Certify the braid identity suite at a given strand count.
    Identities {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Superselection-braid phases per total charge.
    Spectrum {
        #[command(flatten)]
        model: ModelArgs,
        /// Comma-separated leaf labels, e.g. `sigma,sigma,psi`.
        #[arg(long)]
        leaves: String,
    },
    /// Topological twists from the ribbon relation.
    Twists(ModelArgs),
    /// The unitary matrix of a braid word on a fusion-tree basis.
    BraidAct {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        leaves: String,
        /// Braid word, e.g. `"s1 s2 s1'"`.
        #[arg(long)]
        word: String,
    },
    /// Enumerate fusion-tree shapes on n leaves.
    Trees {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Bounded search for sector-resolving braids.
    Uniqueness {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct ModelArgs {
    /// Bundled model name (trivial, z2boson, semion, toric, fib, ising) or
    /// a path to a model JSON file.
    #[arg(long)]
    model: String,
    /// Residual tolerance override for pass/fail classification.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    json: bool,
}

fn load_model(spec: &str) -> anyon_braid::Result<FusionSystem> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec)?;
        let name = Path::new(spec)
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("model");
        from_json_str(name, &text)
    } else {
        bundled_model(spec)
    }
}

/// Format with 12 significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

fn csig12(z: Complex64) -> String {
    format!("{} {} {}i", sig12(z.re), if z.im < 0.0 { "-" } else { "+" }, sig12(z.im.abs()))
}

fn parse_leaves(sys: &FusionSystem, csv: &str) -> anyon_braid::Result<Vec<usize>> {
    csv.split(',')
        .map(|s| sys.label_index(s.trim()))
        .collect()
}

fn run() -> Result<u8, anyon_braid::Error> {
    let cli = Cli::parse();
    match cli.verb {
        Verb::Validate(args) => {
            let sys = load_model(&args.model)?;
            let tol = args.tol.unwrap_or(sys.tol());
            let report = validate(&sys)?;
            let pentagon = pentagon_residual(&sys)?;
            let hex_pos = hexagon_residual(&sys, 1)?;
            let hex_neg = hexagon_residual(&sys, -1)?;
            let triangle = triangle_check(&sys);
            let pass = report.passed()
                && pentagon <= tol
                && hex_pos <= tol
                && hex_neg <= tol
                && triangle;
            if args.json {
                let checks: Vec<_> = report
                    .entries
                    .iter()
                    .map(|e| json!({"name": e.name, "passed": e.passed, "residual": e.residual}))
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "model": sys.labels(),
                        "checks": checks,
                        "pentagon_residual": pentagon,
                        "hexagon_residual_pos": hex_pos,
                        "hexagon_residual_neg": hex_neg,
                        "triangle": triangle,
                        "passed": pass,
                    }))?
                );
            } else {
                print!("{report}");
                println!("pentagon residual      {}", sig12(pentagon));
                println!("hexagon residual (+1)  {}", sig12(hex_pos));
                println!("hexagon residual (-1)  {}", sig12(hex_neg));
                println!("triangle (vacuum F)    {}", if triangle { "pass" } else { "FAIL" });
                println!("{}", if pass { "all checks passed" } else { "verification FAILED" });
            }
            Ok(if pass { 0 } else { 1 })
        }
        Verb::Identities { n, json } => {
            let mut rows = Vec::new();
            let mut pass = true;
            for name in anyon_braid::braid::identity_names() {
                let check = anyon_braid::braid::get_identity(name).expect("registered");
                let applicable = n >= check.min_n();
                let ok = if applicable {
                    anyon_braid::braid::verify_identity(name, n)?
                } else {
                    true
                };
                pass &= ok;
                rows.push((name, check.statement(), applicable, ok));
            }
            if json {
                let items: Vec<_> = rows
                    .iter()
                    .map(|(name, statement, applicable, ok)| {
                        json!({"name": name, "statement": statement,
                               "applicable": applicable, "holds": ok})
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"n": n, "identities": items, "passed": pass}))?
                );
            } else {
                for (name, _, applicable, ok) in &rows {
                    let status = if !applicable {
                        "skipped (needs more strands)"
                    } else if *ok {
                        "holds"
                    } else {
                        "FAILS"
                    };
                    println!("{name:<22} {status}");
                }
            }
            Ok(if pass { 0 } else { 1 })
        }
        Verb::Spectrum { model, leaves } => {
            let sys = load_model(&model.model)?;
            let leaves = parse_leaves(&sys, &leaves)?;
            let basis = comb_basis(&sys, &leaves)?;
            let spectrum = superselection_spectrum(&sys, &basis)?;
            if model.json {
                let items: Vec<_> = spectrum
                    .iter()
                    .map(|&(q, z)| json!({"charge": sys.label_name(q), "phase": [z.re, z.im]}))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&json!({"sectors": items}))?);
            } else {
                for (q, z) in spectrum {
                    println!("{:<8} {}", sys.label_name(q), csig12(z));
                }
            }
            Ok(0)
        }
        Verb::Twists(args) => {
            let sys = load_model(&args.model)?;
            let twists = solve_twists(&sys)?;
            let transparent = transparent_labels(&sys)?;
            if args.json {
                let theta: BTreeMap<_, _> = twists
                    .theta
                    .iter()
                    .enumerate()
                    .map(|(q, z)| (sys.label_name(q).to_string(), vec![z.re, z.im]))
                    .collect();
                let names: Vec<_> = transparent.iter().map(|&q| sys.label_name(q)).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"twists": theta, "transparent": names}))?
                );
            } else {
                for (q, z) in twists.theta.iter().enumerate() {
                    println!("{:<8} {}", sys.label_name(q), csig12(*z));
                }
                let names: Vec<_> = transparent.iter().map(|&q| sys.label_name(q)).collect();
                println!("transparent: {}", names.join(", "));
            }
            Ok(0)
        }
        Verb::BraidAct { model, leaves, word } => {
            let sys = load_model(&model.model)?;
            let leaves = parse_leaves(&sys, &leaves)?;
            let basis = comb_basis(&sys, &leaves)?;
            let w = BraidWord::parse(leaves.len(), &word)?;
            let m = braid_map(&sys, &basis, &w)?;
            if model.json {
                println!("{}", serde_json::to_string_pretty(&dump_map(&sys, &m))?);
            } else {
                println!("source {}", describe_basis(&sys, &m.source));
                println!("target {}", describe_basis(&sys, &m.target));
                for t in 0..m.matrix.nrows() {
                    let row: Vec<String> =
                        (0..m.matrix.ncols()).map(|s| csig12(m.matrix[(t, s)])).collect();
                    println!("[{}]", row.join(", "));
                }
            }
            Ok(0)
        }
        Verb::Trees { n, json } => {
            let shapes = enumerate_shapes(n)?;
            if json {
                let rendered: Vec<_> = shapes.iter().map(|s| s.render()).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"n": n, "count": shapes.len(),
                                                          "shapes": rendered}))?
                );
            } else {
                for s in &shapes {
                    println!("{}", s.render());
                }
                println!("{} shapes", shapes.len());
            }
            Ok(0)
        }
        Verb::Uniqueness { n, max_len, json } => {
            let systems: Vec<FusionSystem> = ["fib", "ising"]
                .iter()
                .map(|name| bundled_model(name))
                .collect::<anyon_braid::Result<_>>()?;
            let found = uniqueness_search(&systems, n, max_len)?;
            if json {
                let words: Vec<_> = found.iter().map(|w| w.to_string()).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({"n": n, "max_len": max_len,
                                                          "words": words}))?
                );
            } else {
                for w in &found {
                    println!("{w}");
                }
                println!("{} sector-resolving braid(s)", found.len());
            }
            Ok(0)
        }
    }
}

fn describe_basis(sys: &FusionSystem, basis: &anyon_braid::state::FusionBasis) -> String {
    let leaves: Vec<_> = basis.leaf_labels.iter().map(|&q| sys.label_name(q)).collect();
    format!("shape {} leaves ({})", basis.shape.render(), leaves.join(", "))
}

fn dump_map(sys: &FusionSystem, m: &UnitaryBlockMap) -> serde_json::Value {
    let describe = |basis: &anyon_braid::state::FusionBasis| {
        let leaves: Vec<_> = basis.leaf_labels.iter().map(|&q| sys.label_name(q)).collect();
        let vectors: Vec<_> = basis
            .vectors
            .iter()
            .map(|v| {
                let labels: Vec<_> = v.labels.iter().map(|&q| sys.label_name(q)).collect();
                json!({"internal": labels, "multiplicities": v.mults})
            })
            .collect();
        json!({"shape": basis.shape.render(), "leaves": leaves, "vectors": vectors})
    };
    let mut entries = Vec::new();
    for t in 0..m.matrix.nrows() {
        for s in 0..m.matrix.ncols() {
            let z = m.matrix[(t, s)];
            entries.push(vec![z.re, z.im]);
        }
    }
    json!({"source": describe(&m.source), "target": describe(&m.target), "entries": entries})
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                anyon_braid::Error::Io(_) | anyon_braid::Error::Json(_) => 2,
                anyon_braid::Error::UnknownModel(_) | anyon_braid::Error::Parse(_) => 2,
                anyon_braid::Error::UnknownLabel(_) | anyon_braid::Error::InvalidParameter(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
