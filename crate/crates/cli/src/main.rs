use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bu2_core::charnum::{self, ManifoldData};
use bu2_core::maps;
use bu2_core::parse::parse_grading;
use bu2_core::presentation::{self, Presentation};
use bu2_core::rewrite::{check_confluence, enumerate_basis, render_page};
use bu2_core::units::{dualize, unit_group, GradingZeroElt};
use bu2_core::verify::{verify_all, Certificate};
use bu2_core::Error;

#[derive(Parser)]
#[command(name = "bu2", version, about = "Equivariant cohomology of BU(2): normal forms, restrictions, bases and characteristic numbers")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Directory of manifold fixtures (*.json) replacing the built-in ones.
    #[arg(long, global = true)]
    fixtures: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Space {
    Bu1,
    Bu2,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an expression to normal form.
    Nf {
        expr: String,
        /// Print every rewriting step.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Space::Bu2)]
        space: Space,
    },
    /// Restriction to the fixed components.
    Eta { expr: String },
    /// Restriction to nonequivariant cohomology.
    Rho { expr: String },
    /// Geometric fixed points.
    Phi { expr: String },
    /// List basis monomials on a page.
    Basis {
        /// A grading such as `O1 + 2O2`; the page is its RO(C2) coset.
        #[arg(long, allow_hyphen_values = true)]
        page: String,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        amax: i64,
        #[arg(long, value_enum, default_value_t = Space::Bu2)]
        space: Space,
        /// Also print the fixed-point image of each monomial.
        #[arg(long)]
        fixed: bool,
    },
    /// Count basis monomials at each position of a page.
    Page {
        #[arg(long, allow_hyphen_values = true)]
        coset: String,
        #[arg(long, default_value_t = 6, allow_hyphen_values = true)]
        amax: i64,
        #[arg(long, value_enum, default_value_t = Space::Bu2)]
        space: Space,
    },
    /// Resolve every critical pair of the rewriting rules.
    Confluence {
        #[arg(long, value_enum, default_value_t = Space::Bu2)]
        space: Space,
    },
    /// The units in grading zero.
    Units,
    /// Image under the duality involution.
    Dualize { expr: String },
    /// Characteristic numbers of a manifold.
    Charnum {
        #[arg(long)]
        manifold: String,
        /// A single class; all relevant classes when omitted.
        #[arg(long)]
        class: Option<String>,
        /// Compare with another manifold and list distinguishing classes.
        #[arg(long)]
        against: Option<String>,
    },
    /// Run every verification certificate.
    VerifyAll,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownSymbol(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn pres(space: Space) -> &'static Presentation {
    match space {
        Space::Bu1 => presentation::bu1(),
        Space::Bu2 => presentation::bu2(),
    }
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, ok: true }
    }
}

fn certificates_output(certs: Vec<Certificate>) -> Output {
    let ok = certs.iter().all(|c| c.passed());
    let text = certs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
    let summary = if ok { "all certificates passed" } else { "SOME CERTIFICATES FAILED" };
    let json = json!({ "passed": ok, "certificates": certs });
    Output { text: format!("{text}\n{summary}"), json, ok }
}

fn find_manifold<'a>(all: &'a [ManifoldData], name: &str) -> Result<&'a ManifoldData, Failure> {
    all.iter()
        .find(|m| m.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Failure::Usage(format!("unknown manifold `{name}`")))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let loaded;
    let manifolds: &[ManifoldData] = match &cli.fixtures {
        Some(dir) => {
            loaded = ManifoldData::load_dir(dir)?;
            &loaded
        }
        None => charnum::builtin_manifolds(),
    };
    let bu2 = presentation::bu2();
    Ok(match &cli.command {
        Command::Nf { expr, trace, space } => {
            let p = pres(*space);
            let x = bu2_core::parse::parse_poly(p.signature(), expr)?;
            let (nf, steps) = p.system.normal_form_traced(&x);
            let mut text = String::new();
            if *trace {
                for s in &steps {
                    text.push_str(&format!("{} at {} => {}\n", s.rule, s.at, s.result));
                }
            }
            text.push_str(&nf.to_string());
            let grading = nf.term_gradings().first().map(|g| g.to_string());
            Output::ok(text, json!({ "input": expr, "normal_form": nf.to_string(), "grading": grading, "steps": steps }))
        }
        Command::Eta { expr } => {
            let t = maps::eta().apply(&bu2.parse(expr)?)?;
            Output::ok(t.to_string(), json!({ "input": expr, "eta": t.to_string() }))
        }
        Command::Rho { expr } => {
            let r = maps::rho().apply(&bu2.parse(expr)?)?;
            Output::ok(r.to_string(), json!({ "input": expr, "rho": r.to_string() }))
        }
        Command::Phi { expr } => {
            let t = maps::phi(&bu2.parse(expr)?)?;
            let forgotten = maps::forget_fixed(&t);
            Output::ok(
                format!("{t}\n{forgotten}"),
                json!({ "input": expr, "phi": t.to_string(), "forgetful": forgotten.to_string() }),
            )
        }
        Command::Basis { page, amax, space, fixed } => {
            let p = pres(*space);
            let g = parse_grading(p.rank(), page)?;
            if *fixed {
                if !matches!(space, Space::Bu2) {
                    return Err(Failure::Usage("--fixed needs the BU(2) presentation".into()));
                }
                let rows = maps::fixed_sets_of_basis(p, g, *amax)?;
                let text = rows
                    .iter()
                    .map(|r| format!("({}, {})  {}  {}", r.position.a, r.position.b, r.monomial, r.fixed))
                    .collect::<Vec<_>>()
                    .join("\n");
                Output::ok(text, json!({ "page": g, "amax": amax, "basis": rows }))
            } else {
                let rows = enumerate_basis(p, g, *amax);
                let text = rows
                    .iter()
                    .map(|b| format!("({}, {})  {}  [{}]", b.position.a, b.position.b, b.name, b.grading))
                    .collect::<Vec<_>>()
                    .join("\n");
                Output::ok(text, json!({ "page": g, "amax": amax, "basis": rows }))
            }
        }
        Command::Page { coset, amax, space } => {
            let p = pres(*space);
            let g = parse_grading(p.rank(), coset)?;
            let grid = render_page(p, g, *amax);
            Output::ok(grid.to_string(), serde_json::to_value(&grid).expect("grid serializes"))
        }
        Command::Confluence { space } => {
            let report = check_confluence(&pres(*space).system);
            let ok = report.confluent;
            let json = serde_json::to_value(&report).expect("report serializes");
            Output { text: report.to_string(), json, ok }
        }
        Command::Units => {
            let units = unit_group();
            let text = units
                .iter()
                .map(|u| format!("{:?}  {}", u.0, u))
                .collect::<Vec<_>>()
                .join("\n");
            let json: Vec<Value> = units
                .iter()
                .map(|u| json!({ "coordinates": u.0, "element": u.to_string(), "is_unit": u.is_unit() }))
                .collect();
            Output::ok(text, json!({ "units": json }))
        }
        Command::Dualize { expr } => {
            let x = bu2.parse(expr)?;
            let d = dualize(&x)?;
            let coords = GradingZeroElt::from_poly(&d).ok().map(|c| c.0);
            Output::ok(d.to_string(), json!({ "input": expr, "dual": d.to_string(), "grading_zero": coords }))
        }
        Command::Charnum { manifold, class, against } => {
            let m = find_manifold(manifolds, manifold)?;
            match (class, against) {
                (Some(_), Some(_)) => return Err(Failure::Usage("give at most one of --class and --against".into())),
                (Some(c), None) => {
                    let cls = m.presentation().parse(c)?;
                    let p = charnum::tangent_pullback(m, &cls)?;
                    let v = charnum::evaluate(m, &p)?;
                    Output::ok(
                        format!("{cls}[{}] = {v}\n  pullback {p}", m.name),
                        json!({ "manifold": m.name, "class": cls.to_string(), "pullback": p.to_string(), "value": v.to_string() }),
                    )
                }
                (None, Some(other)) => {
                    let n = find_manifold(manifolds, other)?;
                    let w = charnum::distinguishing_classes(m, n)?;
                    let mut text = if w.is_empty() {
                        format!("{} and {} have the same characteristic numbers", m.name, n.name)
                    } else {
                        format!("{} and {} are not equivariantly cobordant", m.name, n.name)
                    };
                    for x in &w {
                        text.push_str(&format!("\n  {}: {} vs {}", x.class, x.left, x.right));
                    }
                    Output::ok(text, json!({ "left": m.name, "right": n.name, "distinguished": !w.is_empty(), "witnesses": w }))
                }
                (None, None) => {
                    let rows = charnum::characteristic_table(m)?;
                    let mut text = format!("{} ({}), fundamental class in grading {}", m.name, m.description, m.dimension);
                    for r in &rows {
                        text.push_str(&format!("\n  {}[{}] = {}   pullback {}", r.class, m.name, r.value, r.pullback));
                    }
                    Output::ok(text, json!({ "manifold": m.name, "dimension": m.dimension, "numbers": rows }))
                }
            }
        }
        Command::VerifyAll => certificates_output(verify_all()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json"),
            };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
