//! `k3fib`: command-line front end to the `k3fib` library.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{ColorChoice, CommandFactory, FromArgMatches, Parser, Subcommand};
use k3fib::{
    apply_quadratic_base_change, deduplicate_by_transcendental, enumerate_extremal_k3,
    extract_genus_one_fibration, parse_poly, quartic_to_weierstrass, singular_places,
    BaseChangeError, BranchSelection, BranchSlot, DivisorClass, DoubleCoverModel,
    FiberConfiguration, FiberError, KodairaType, NsError, PencilModel, PolyError, QuarticPoint,
    SurfaceClass, SurfaceError, WeierstrassError, WeierstrassModel,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "k3fib",
    version,
    about = "Elliptic fibrations on rational elliptic and K3 surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Euler number, trivial lattice rank and Mordell-Weil rank of a configuration.
    Fibers {
        /// Additive notation, e.g. "I9+3I1".
        #[arg(long, allow_hyphen_values = true)]
        config: String,
        /// Ambient surface; inferred from the Euler number when omitted.
        #[arg(long, value_parser = ["res", "k3"])]
        surface: Option<String>,
    },
    /// Pull a configuration back along a double cover branched at two fibers.
    Basechange {
        #[arg(long, allow_hyphen_values = true)]
        config: String,
        /// Two fiber types separated by a comma; I0 stands for a smooth fiber.
        #[arg(long)]
        branch: String,
    },
    /// The extremal K3 fibrations obtained by quadratic base change.
    #[command(alias = "enumerate")]
    Extremal {
        #[arg(long)]
        csv: bool,
    },
    /// Group the extremal rows into surfaces by transcendental lattice.
    Dedup,
    /// Numerical predicates for divisor classes given as JSON integer arrays.
    Conics {
        /// JSON array of classes `[d, m1, ..., m9]`; read from stdin when absent.
        classes: Option<String>,
    },
    /// Genus one fibration and Weierstrass model of a double plane.
    ExtractWeierstrass {
        #[arg(long, allow_hyphen_values = true)]
        f3: String,
        #[arg(long, allow_hyphen_values = true)]
        g3: String,
        #[arg(long, allow_hyphen_values = true)]
        pencil: String,
        /// A point `u0,w0` on the quartic, coordinates in Q(t).
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Whether a configuration can belong to a fibration of type 2.
    ClassifyType {
        #[arg(long, allow_hyphen_values = true)]
        config: String,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{message}")]
    Domain { code: &'static str, message: String },
}

impl CliError {
    fn domain(code: &'static str, e: impl std::fmt::Display) -> Self {
        CliError::Domain {
            code,
            message: e.to_string(),
        }
    }

    fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Domain { code, .. } => code,
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        let code = match e {
            SurfaceError::Syntax { .. } => "syntax",
            SurfaceError::RankUnderflow { .. } => "rank_underflow",
            SurfaceError::InconsistentInput => "inconsistent_input",
        };
        CliError::domain(code, e)
    }
}

impl From<FiberError> for CliError {
    fn from(e: FiberError) -> Self {
        let code = match e {
            FiberError::Syntax(_) => "syntax",
            _ => "fiber",
        };
        CliError::domain(code, e)
    }
}

impl From<BaseChangeError> for CliError {
    fn from(e: BaseChangeError) -> Self {
        let code = match e {
            BaseChangeError::NonReducedBranch(_) => "non_reduced_branch",
            BaseChangeError::UnavailableBranch(_) => "unavailable_branch",
        };
        CliError::domain(code, e)
    }
}

impl From<NsError> for CliError {
    fn from(e: NsError) -> Self {
        CliError::domain("divisor_class", e)
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        let code = match e {
            PolyError::Syntax { .. } | PolyError::UnknownVariable { .. } => "syntax",
            _ => "polynomial",
        };
        CliError::domain(code, e)
    }
}

impl From<WeierstrassError> for CliError {
    fn from(e: WeierstrassError) -> Self {
        use WeierstrassError::*;
        let code = match &e {
            Poly(p) => return p.clone().into(),
            Fiber(_) => "fiber",
            InvalidCubic { .. } => "invalid_cubic",
            CommonFactor => "common_factor",
            InvalidPencil => "invalid_pencil",
            NotAConicBundlePencil { .. } => "not_a_conic_bundle_pencil",
            InvalidQuartic => "invalid_quartic",
            NoSectionGiven => "no_section_given",
            SingularQuartic => "singular_quartic",
            NotInT => "not_in_t",
            SingularModel => "singular_model",
            NotTwoTorsionForm => "not_two_torsion_form",
            SingularInput => "singular_input",
            InvalidPlace => "invalid_place",
            NonUniformPlace => "non_uniform_place",
            NotMinimalizable => "not_minimalizable",
            AmbiguousValuations { .. } => "ambiguous_valuations",
        };
        CliError::domain(code, e)
    }
}

fn config(s: &str) -> Result<FiberConfiguration, CliError> {
    Ok(s.parse()?)
}

fn fibers(config_text: &str, surface: Option<&str>) -> Result<Value, CliError> {
    let c = config(config_text)?;
    let euler = c.euler_characteristic();
    let class = match surface {
        Some("res") => Some(SurfaceClass::RationalElliptic),
        Some(_) => Some(SurfaceClass::K3),
        None => [SurfaceClass::RationalElliptic, SurfaceClass::K3]
            .into_iter()
            .find(|s| s.euler_characteristic() == euler),
    };
    let (surface, mw_rank, extremal) = match class {
        Some(s) => {
            let picard = s.max_picard();
            let name = match s {
                SurfaceClass::RationalElliptic => "res",
                _ => "k3",
            };
            (
                json!(name),
                json!(c.mw_rank(picard)?),
                json!(c.is_extremal(s, picard)),
            )
        }
        None => (Value::Null, Value::Null, Value::Null),
    };
    let per_fiber: Vec<Value> = c
        .notation_entries()
        .into_iter()
        .map(|(k, n)| {
            json!({
                "type": k,
                "count": n,
                "euler_number": k.euler_number(),
                "components": k.component_count(),
                "root_rank": k.root_rank(),
                "reduced": k.is_reduced(),
            })
        })
        .collect();
    Ok(json!({
        "config": c.to_notation(),
        "fibers": per_fiber,
        "euler_characteristic": euler,
        "trivial_lattice_rank": c.trivial_lattice_rank(),
        "surface": surface,
        "mw_rank": mw_rank,
        "extremal": extremal,
    }))
}

fn basechange(config_text: &str, branch: &str) -> Result<Value, CliError> {
    let c = config(config_text)?;
    let slots: Vec<&str> = branch.split(',').map(str::trim).collect();
    let [a, b] = slots[..] else {
        return Err(CliError::Usage(format!(
            "--branch takes exactly two fiber types, got {branch:?}"
        )));
    };
    let slot = |s: &str| -> Result<BranchSlot, CliError> {
        let k: KodairaType = s.replace('_', "").parse()?;
        Ok(k.into())
    };
    let selection = BranchSelection::new(slot(a)?, slot(b)?);
    let k3 = apply_quadratic_base_change(&c, &selection)?;
    Ok(json!({ "fibers": k3 }))
}

fn extremal_json() -> Value {
    let rows: Vec<Value> = enumerate_extremal_k3()
        .into_iter()
        .map(|r| {
            json!({
                "index": r.index,
                "res_id": r.res_id,
                "res": r.res_config.to_notation(),
                "branch": r.branch,
                "fibers": r.k3_config,
                "T": r.t_x,
            })
        })
        .collect();
    Value::Array(rows)
}

fn extremal_csv() -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::domain("io", e);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "#",
        "singular fibers E_R",
        "branch fibers",
        "singular fibers E_X",
        "T_X",
    ])
    .map_err(io)?;
    for r in enumerate_extremal_k3() {
        let t = r.t_x.map(|t| t.to_string()).unwrap_or_default();
        w.write_record([
            r.index.to_string(),
            r.res_config.to_notation(),
            r.branch.to_notation(),
            r.k3_config.to_notation(),
            t,
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::domain("io", e))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn dedup() -> Value {
    let report = deduplicate_by_transcendental(&enumerate_extremal_k3());
    json!({
        "stated_class_count": report.stated_class_count(),
        "tx_class_count": report.tx_class_count(),
        "flagged": report.flagged_rows(),
        "stated_classes": report.stated_classes,
        "tx_classes": report.tx_classes,
        "divergences": report.divergences,
    })
}

fn conics(input: &str) -> Result<Value, CliError> {
    let classes: Vec<DivisorClass> =
        serde_json::from_str(input).map_err(|e| CliError::domain("syntax", e))?;
    let rows: Vec<Value> = classes
        .iter()
        .map(|d| {
            json!({
                "class": d,
                "notation": d.to_string(),
                "self_intersection": d.self_intersection(),
                "anticanonical_degree": d.anticanonical_degree(),
                "conic": d.is_conic_class(),
                "section": d.is_section(),
                "fiber_multiple": d.fiber_multiple(),
            })
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, c1) in classes.iter().enumerate() {
        for (j, c2) in classes.iter().enumerate().skip(i + 1) {
            if let Ok(d) = DivisorClass::conic_from_sections(c1, c2) {
                pairs.push(json!({ "sections": [i, j], "conic": d }));
            }
        }
    }
    Ok(json!({ "classes": rows, "conics_from_sections": pairs }))
}

fn extract(f3: &str, g3: &str, pencil: &str, point: Option<&str>) -> Result<Value, CliError> {
    let cover = DoubleCoverModel::new(parse_poly(f3)?, parse_poly(g3)?)?;
    let pencil = PencilModel::new(parse_poly(pencil)?)?;
    let (a, quartic) = extract_genus_one_fibration(&cover, &pencil)?;
    let (weierstrass, fibers) = match point {
        None => (Value::Null, Vec::new()),
        Some(p) => {
            let w = quartic_to_weierstrass(&quartic, &QuarticPoint::parse(p)?)?;
            let WeierstrassModel::Short { a4, a6 } = &w else {
                unreachable!("quartic_to_weierstrass returns a short model")
            };
            let fibers = singular_places(&w)?
                .into_iter()
                .map(|pf| {
                    json!({
                        "place": pf.valuations.place,
                        "type": pf.kodaira,
                        "multiplicity": pf.multiplicity,
                        "v_c4": pf.valuations.v_c4,
                        "v_c6": pf.valuations.v_c6,
                        "v_delta": pf.valuations.v_delta,
                    })
                })
                .collect();
            (json!({ "A": a4.to_string(), "B": a6.to_string() }), fibers)
        }
    };
    Ok(json!({
        "a": a.to_string(),
        "b": quartic.b().to_string(),
        "c": quartic.c().to_string(),
        "weierstrass": weierstrass,
        "fibers": fibers,
    }))
}

fn classify_type(config_text: &str) -> Result<Value, CliError> {
    let report = config(config_text)?.type2_candidate();
    Ok(json!({
        "type2_candidate": report.is_candidate,
        "unpaired": report.unpaired,
    }))
}

fn run(command: Command) -> Result<String, CliError> {
    let value = match command {
        Command::Fibers { config, surface } => fibers(&config, surface.as_deref())?,
        Command::Basechange { config, branch } => basechange(&config, &branch)?,
        Command::Extremal { csv: true } => return extremal_csv(),
        Command::Extremal { csv: false } => extremal_json(),
        Command::Dedup => dedup(),
        Command::Conics { classes } => {
            let input = match classes {
                Some(s) => s,
                None => {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| CliError::domain("io", e))?;
                    s
                }
            };
            conics(&input)?
        }
        Command::ExtractWeierstrass {
            f3,
            g3,
            pencil,
            point,
        } => extract(&f3, &g3, &pencil, point.as_deref())?,
        Command::ClassifyType { config } => classify_type(&config)?,
    };
    Ok(format!("{value}\n"))
}

fn color_choice() -> Result<ColorChoice, CliError> {
    match std::env::var("K3FIB_COLOR") {
        Err(std::env::VarError::NotPresent) => Ok(ColorChoice::Auto),
        Ok(v) if v == "auto" => Ok(ColorChoice::Auto),
        Ok(v) if v == "never" => Ok(ColorChoice::Never),
        Ok(v) => Err(CliError::Usage(format!(
            "K3FIB_COLOR must be auto or never, got {v:?}"
        ))),
        Err(e) => Err(CliError::Usage(format!("K3FIB_COLOR: {e}"))),
    }
}

fn parse_args() -> Result<Result<Cli, clap::Error>, CliError> {
    let matches = Cli::command().color(color_choice()?).try_get_matches();
    Ok(matches.and_then(|m| Cli::from_arg_matches(&m)))
}

fn report(e: &CliError) -> ExitCode {
    let body = json!({ "code": e.code(), "message": e.to_string() });
    eprintln!("{body}");
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(|| -> Result<String, CliError> {
        let cli = match parse_args()? {
            Ok(cli) => cli,
            Err(e) if !e.use_stderr() => {
                // --help and --version
                let _ = e.print();
                return Ok(String::new());
            }
            Err(e) => {
                let message = e.render().to_string();
                return Err(CliError::Usage(message.trim().to_string()));
            }
        };
        run(cli.command)
    });
    match outcome {
        Ok(Ok(out)) => {
            let mut stdout = std::io::stdout().lock();
            match stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
            {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => report(&CliError::domain("io", e)),
            }
        }
        Ok(Err(e)) => report(&e),
        Err(panic) => {
            let message = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal error".to_string());
            report(&CliError::domain("internal", message))
        }
    }
}
