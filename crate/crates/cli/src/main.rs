use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use liebra::catalog::{self, audit, data, invariant_fingerprint, AuditReport, Params};
use liebra::dercalc::{conjugate, derivation_space, inner_derivations, pencil_has_nilpotent};
use liebra::exactmat::{Mat, Rat, Subspace};
use liebra::freenilp::build_free_nilpotent;
use liebra::liecore::{matrix_from_json, matrix_to_json, LieAlg};
use liebra::sl2rep::{decompose_weights, highest_weight_decomposition, ModuleDecomposition, Sl2Triple};
use liebra::Error;

#[derive(Parser)]
#[command(name = "liebra", version, about = "Exact computations with structure-constant Lie algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit an algebra table.
    Build(BuildArgs),
    /// Jacobi identity check.
    Check { file: PathBuf },
    /// Derivation algebra and inner derivations.
    Derivations { file: PathBuf },
    /// Derived and lower central series.
    Series { file: PathBuf },
    /// Center of the algebra.
    Center { file: PathBuf },
    /// Quotient by the ideal spanned by the given combinations.
    Quotient {
        file: PathBuf,
        #[arg(long = "ideal", required = true, value_name = "COMBINATION")]
        ideal: Vec<String>,
    },
    /// Extension by derivations given as matrix files.
    Extend {
        file: PathBuf,
        #[arg(long = "derivation", required = true, value_name = "MATRIX")]
        derivations: Vec<PathBuf>,
        /// Labels of the new basis elements; defaults to x, y, ...
        #[arg(long = "label")]
        labels: Vec<String>,
    },
    /// phi^{-1} D phi for an automorphism phi.
    Conjugate {
        file: PathBuf,
        #[arg(long, value_name = "MATRIX")]
        phi: PathBuf,
        #[arg(long, value_name = "MATRIX")]
        derivation: PathBuf,
    },
    /// Highest weights of an sl2 module.
    Sl2Decompose(Sl2Args),
    /// Whether the span of one or two matrices contains a nonzero nilpotent.
    PencilTest {
        #[arg(required = true)]
        matrices: Vec<PathBuf>,
    },
    /// Isomorphism invariants.
    Fingerprint { file: PathBuf },
    /// Classification audit.
    Audit(AuditArgs),
    /// Write the catalog data files.
    ExportCatalog { dir: PathBuf },
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_name = "T", conflicts_with = "catalog")]
    free_nilpotent: Option<usize>,
    #[arg(long, value_name = "NAME", required_unless_present = "free_nilpotent")]
    catalog: Option<String>,
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Read catalog entries from the data files instead of constructing them.
    #[arg(long)]
    from_data: bool,
}

#[derive(Args)]
struct Sl2Args {
    /// Algebra file; the module defaults to its nilradical.
    #[arg(required_unless_present = "weights")]
    file: Option<PathBuf>,
    /// Comma-separated weight multiset.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "file")]
    weights: Option<String>,
    #[arg(long, default_value = "e")]
    e: String,
    #[arg(long, default_value = "f")]
    f: String,
    #[arg(long, default_value = "h")]
    h: String,
    /// Combinations spanning the module.
    #[arg(long = "module", value_name = "COMBINATION")]
    module: Vec<String>,
}

#[derive(Args)]
struct AuditArgs {
    /// Every entry, quotient, identity and the stored data (default).
    #[arg(long)]
    all: bool,
    /// The three controls that must exhibit their defects.
    #[arg(long, conflicts_with_all = ["all", "entry"])]
    negative_controls: bool,
    /// A single entry at the given parameters.
    #[arg(long, conflicts_with = "all")]
    entry: Option<String>,
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
}

struct Output {
    json: String,
    text: String,
    ok: bool,
}

impl Output {
    fn new(json: &Value, text: String, ok: bool) -> Output {
        Output { json: serde_json::to_string_pretty(json).expect("serializable"), text, ok }
    }

    fn algebra(a: &LieAlg) -> Output {
        Output { json: a.to_json(), text: a.to_string(), ok: true }
    }

    fn report(r: &AuditReport) -> Output {
        Output { json: r.to_json(), text: r.to_text(), ok: r.passed() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli.cmd) {
        Ok(out) => {
            let mut body = if cli.text { out.text } else { out.json };
            if !body.ends_with('\n') {
                body.push('\n');
            }
            let written = match &cli.out {
                Some(p) => fs::write(p, body),
                None => io::stdout().write_all(body.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("liebra: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("liebra: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_)
        | Error::Format(_)
        | Error::ParseRational(_)
        | Error::UnknownEntry(_)
        | Error::MissingParameter { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidTable(_)
        | Error::DimensionMismatch { .. }
        | Error::NotSquare { .. } => 2,
        _ => 1,
    }
}

fn read_input(p: &Path) -> liebra::Result<String> {
    if p.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
}

fn read_alg(p: &Path) -> liebra::Result<LieAlg> {
    LieAlg::from_json(&read_input(p)?)
}

fn read_mat(p: &Path) -> liebra::Result<Mat> {
    matrix_from_json(&read_input(p)?)
}

fn parse_params(items: &[String]) -> liebra::Result<Params> {
    let mut p = Params::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::InvalidArgument(format!("expected NAME=VALUE, got {item:?}")))?;
        p.insert(k.trim().to_string(), v.trim().parse::<Rat>()?);
    }
    Ok(p)
}

fn rows(m: &Mat) -> Value {
    json!(m.row_vectors())
}

fn labels_of(a: &LieAlg, s: &Subspace) -> Vec<String> {
    s.basis_vectors().iter().map(|v| a.format_vector(v)).collect()
}

fn decomposition_output(d: &ModuleDecomposition) -> Output {
    Output::new(&json!(d), format!("{} (weights {:?})", d.summary(), d.weights), true)
}

fn run(cmd: &Cmd) -> liebra::Result<Output> {
    match cmd {
        Cmd::Build(b) => {
            let a = match (&b.free_nilpotent, &b.catalog) {
                (Some(t), _) => build_free_nilpotent(*t)?.alg,
                (None, Some(name)) => {
                    let params = parse_params(&b.params)?;
                    if b.from_data {
                        data::load_entry(&data::catalog_dir(), name, &params)?
                    } else {
                        catalog::entry(name)?.build(&params)?
                    }
                }
                (None, None) => return Err(Error::InvalidArgument("nothing to build".into())),
            };
            Ok(Output::algebra(&a))
        }
        Cmd::Check { file } => {
            let a = read_alg(file)?;
            let d = a.jacobi_defect();
            let triples: Vec<Value> = d
                .triples
                .iter()
                .map(|t| {
                    json!({
                        "triple": [a.label(t.i), a.label(t.j), a.label(t.k)],
                        "residual": a.format_vector(&t.residual),
                    })
                })
                .collect();
            let mut text = format!("jacobi: {}", if d.is_empty() { "PASS" } else { "FAIL" });
            for t in &triples {
                text.push_str(&format!("\n  {} -> {}", t["triple"], t["residual"].as_str().unwrap_or_default()));
            }
            let status = if d.is_empty() { "pass" } else { "fail" };
            Ok(Output::new(&json!({ "jacobi": status, "defects": triples }), text, d.is_empty()))
        }
        Cmd::Derivations { file } => {
            let a = read_alg(file)?;
            let der = derivation_space(&a);
            let inner = inner_derivations(&a);
            let basis: Vec<Value> = der.basis().iter().map(rows).collect();
            let text = format!("dim Der = {}\ndim Inner = {}", der.dim(), inner.dim());
            Ok(Output::new(&json!({ "dim": der.dim(), "inner_dim": inner.dim(), "basis": basis }), text, true))
        }
        Cmd::Series { file } => {
            let a = read_alg(file)?;
            let dims = |s: Vec<Subspace>| s.iter().map(Subspace::dim).collect::<Vec<_>>();
            let (ds, lcs) = (dims(a.derived_series()), dims(a.lower_central_series()));
            let v = json!({
                "derived_series": ds,
                "lower_central_series": lcs,
                "solvable": a.is_solvable(),
                "nilpotent": a.is_nilpotent(),
                "nilindex": a.nilindex(),
                "type": a.type_of(),
            });
            let text = format!(
                "derived series {ds:?}\nlower central series {lcs:?}\nsolvable {}\nnilpotent {}\ntype {}",
                a.is_solvable(),
                a.is_nilpotent(),
                a.type_of()
            );
            Ok(Output::new(&v, text, true))
        }
        Cmd::Center { file } => {
            let a = read_alg(file)?;
            let c = a.center();
            let basis = labels_of(&a, &c);
            let text = format!("center dim {}: span({})", c.dim(), basis.join(", "));
            Ok(Output::new(&json!({ "dim": c.dim(), "basis": basis }), text, true))
        }
        Cmd::Quotient { file, ideal } => {
            let a = read_alg(file)?;
            let vs: Vec<Vec<Rat>> = ideal.iter().map(|t| a.parse_vector(t)).collect::<liebra::Result<_>>()?;
            let q = a.quotient(&Subspace::span(a.dim(), &vs)?)?;
            Ok(Output::algebra(&q))
        }
        Cmd::Extend { file, derivations, labels } => {
            let a = read_alg(file)?;
            let defaults = ["x", "y", "x2", "x3"];
            let mut ders = Vec::new();
            for (k, p) in derivations.iter().enumerate() {
                let label = labels.get(k).map_or(defaults.get(k).copied().unwrap_or("d"), String::as_str);
                ders.push((label, read_mat(p)?));
            }
            Ok(Output::algebra(&a.extend(&ders, &[])?))
        }
        Cmd::Conjugate { file, phi, derivation } => {
            let a = read_alg(file)?;
            let m = conjugate(&a, &read_mat(phi)?, &read_mat(derivation)?)?;
            let text = m.row_vectors().iter().map(|r| r.iter().map(Rat::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join("\n");
            Ok(Output { json: matrix_to_json(&m), text, ok: true })
        }
        Cmd::Sl2Decompose(s) => {
            if let Some(w) = &s.weights {
                let ws: Vec<Rat> = w.split(',').map(|x| x.trim().parse::<Rat>()).collect::<liebra::Result<_>>()?;
                return Ok(decomposition_output(&decompose_weights(&ws)?));
            }
            let file = s.file.as_ref().ok_or_else(|| Error::InvalidArgument("no module given".into()))?;
            let a = read_alg(file)?;
            let t = Sl2Triple::from_algebra(&a, &a.parse_vector(&s.e)?, &a.parse_vector(&s.f)?, &a.parse_vector(&s.h)?)?;
            let module = if s.module.is_empty() {
                a.nilradical()
            } else {
                let vs: Vec<Vec<Rat>> = s.module.iter().map(|m| a.parse_vector(m)).collect::<liebra::Result<_>>()?;
                Subspace::span(a.dim(), &vs)?
            };
            Ok(decomposition_output(&highest_weight_decomposition(&t, &module)?))
        }
        Cmd::PencilTest { matrices } => {
            let ms: Vec<Mat> = matrices.iter().map(|p| read_mat(p)).collect::<liebra::Result<_>>()?;
            let has = pencil_has_nilpotent(&ms)?;
            let text = format!("nonzero nilpotent in span: {}", if has { "yes" } else { "no" });
            Ok(Output::new(&json!({ "matrices": ms.len(), "contains_nilpotent": has }), text, true))
        }
        Cmd::Fingerprint { file } => {
            let f = invariant_fingerprint(&read_alg(file)?);
            Ok(Output::new(&json!(f), f.to_string(), true))
        }
        Cmd::Audit(a) => {
            if a.negative_controls {
                return Ok(Output::report(&audit::misprint_witnesses()?));
            }
            if let Some(name) = &a.entry {
                let e = catalog::entry(name)?;
                let mut r = AuditReport::new(format!("audit of {name}"));
                r.sections.push(audit::audit_entry(&e, &parse_params(&a.params)?));
                return Ok(Output::report(&r));
            }
            Ok(Output::report(&audit::audit_all_with_data(&data::catalog_dir())?))
        }
        Cmd::ExportCatalog { dir } => {
            data::export(dir)?;
            let n = data::manifest().entries.len();
            let text = format!("wrote {n} tables and manifest.json to {}", dir.display());
            Ok(Output::new(&json!({ "dir": dir, "tables": n }), text, true))
        }
    }
}
