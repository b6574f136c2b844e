//! `catext`: JSON in, JSON out. Exit 0 on pass, 1 on a mathematical failure,
//! 2 on bad input or an exceeded cap.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use catext_core::biext::{check_biext, commutator_biextension, diagonal_extension, is_alternating};
use catext_core::catbiext::{check_cat_biext, check_symmetric};
use catext_core::cohomology::cohomology_group;
use catext_core::extension::{classify_bicat, classify_moncat, pentagon_report, twisted_k5_report};
use catext_core::group::parse_group;
use catext_core::json::{self, BiQDoc, BiextDoc, CochainDoc, ExtensionDoc, MonoidalDoc, ThetaDoc};
use catext_core::pcohom::{les_check, picard_cohomology, Backend};
use catext_core::qcomplex::{
    build_q2_from_extension, check_24, check_42, check_theta_44, specialize_24_to_23, specialize_42_to_32, theta_specialize, Specialization,
};
use catext_core::report::{Report, Status, Witness};
use catext_core::{Error, Limits};

#[derive(Parser)]
#[command(name = "catext", version, about = "Cohomology and coherence checks for categorical extensions and biextensions")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Opts {
    /// Largest enumeration any single step may perform
    #[arg(long, global = true, value_name = "N")]
    cap: Option<u64>,
    /// Compact JSON on one line (the default)
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON, plus a one-line summary on stderr
    #[arg(long, global = true)]
    pretty: bool,
    /// Add wall-clock milliseconds to reports; output is then no longer reproducible
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant factors of H^n(G, A)
    Cohomology { group: String, coeff: String, degree: usize },
    /// Invariant factors of H^n(G, 𝒜) for a Picard groupoid given inline or as a file
    PicardCohomology {
        group: String,
        picard: String,
        degree: usize,
        #[arg(long, value_enum, default_value_t = BackendArg::Auto)]
        backend: BackendArg,
    },
    /// Run one coherence checker on a JSON file
    Check { what: CheckKind, file: String },
    /// Class coordinates of an extension
    Classify { what: ClassifyKind, file: String },
    /// Biextension constructions and tests
    Biext { what: BiextKind, file: String },
    /// Every cube-level check that applies to a theta or biq file
    Qcheck { file: String },
    /// Exactness of the long exact sequence at H^n(G, 𝒜) and H^n(G, B)
    Les { group: String, picard: String, degree: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Pentagon,
    K5,
    Biext,
    CatBiext,
    Symmetric,
    Q44,
    Q42,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyKind {
    Moncat,
    Bicat,
}

#[derive(Clone, Copy, ValueEnum)]
enum BiextKind {
    FromMonoidal,
    Alternating,
    Diagonal,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Auto,
    Enumerate,
    Structured,
}

/// What a command hands back: a document to print and the exit code it implies.
struct Outcome {
    body: serde_json::Value,
    code: u8,
    summary: String,
}

impl Outcome {
    fn data<T: Serialize>(v: &T, summary: impl Into<String>) -> Result<Outcome, Error> {
        let body = serde_json::to_value(v).map_err(|e| Error::Consistency(e.to_string()))?;
        Ok(Outcome { body, code: 0, summary: summary.into() })
    }

    fn report(r: Report) -> Result<Outcome, Error> {
        let code = match r.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        };
        let summary = match r.witnesses.first() {
            None => format!("{:?}", r.status).to_lowercase(),
            Some(w) => format!("fail: {} at {:?} ({} equation(s) failing)", w.equation, w.tuple, r.witnesses.len()),
        };
        let mut o = Outcome::data(&r, summary)?;
        o.code = code;
        Ok(o)
    }
}

fn read(path: &str) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn group_arg(s: &str) -> Result<catext_core::FinAbGroup, Error> {
    parse_group(s)
}

#[derive(Serialize)]
struct GroupOut {
    invariants: Vec<i64>,
    order: u128,
    group: String,
    coeff: String,
    degree: usize,
}

#[derive(Serialize)]
struct PicardOut {
    invariants: Vec<i64>,
    order: u128,
    group: String,
    picard: json::PicardDoc,
    degree: usize,
    backend: String,
}

#[derive(Serialize)]
struct LesOut {
    exact: bool,
    #[serde(flatten)]
    detail: catext_core::pcohom::LesReport,
}

fn dispatch(cmd: &Command, lim: &Limits) -> Result<Outcome, Error> {
    match cmd {
        Command::Cohomology { group, coeff, degree } => {
            let (g, a) = (group_arg(group)?, group_arg(coeff)?);
            let h = cohomology_group(&g, &a, *degree, lim)?;
            let out = GroupOut {
                invariants: h.invariants.0.clone(),
                order: h.order(),
                group: g.to_string(),
                coeff: a.to_string(),
                degree: *degree,
            };
            Outcome::data(&out, format!("H^{degree}({g}, {a}) = {}", h.invariants))
        }
        Command::PicardCohomology { group, picard, degree, backend } => {
            let g = group_arg(group)?;
            let base = json::picard_from_arg(picard)?;
            let b = match backend {
                BackendArg::Auto => Backend::Auto,
                BackendArg::Enumerate => Backend::Enumerate,
                BackendArg::Structured => Backend::Structured,
            };
            let h = picard_cohomology(&g, &base, *degree, b, lim)?;
            let out = PicardOut {
                invariants: h.invariants.0.clone(),
                order: h.order(),
                group: g.to_string(),
                picard: json::PicardDoc::encode(&base),
                degree: *degree,
                backend: format!("{:?}", h.backend).to_lowercase(),
            };
            Outcome::data(&out, format!("H^{degree}({g}, 𝒜) = {}", h.invariants))
        }
        Command::Check { what, file } => Outcome::report(check(*what, &read(file)?, lim)?),
        Command::Classify { what, file } => classify(*what, &read(file)?, lim),
        Command::Biext { what, file } => biext(*what, &read(file)?, lim),
        Command::Qcheck { file } => Outcome::report(qcheck(&read(file)?, lim)?),
        Command::Les { group, picard, degree } => {
            let g = group_arg(group)?;
            let base = json::picard_from_arg(picard)?;
            let r = les_check(&g, &base, *degree, lim)?;
            let exact = r.exact();
            let mut o = Outcome::data(&LesOut { exact, detail: r }, if exact { "exact" } else { "not exact" })?;
            o.code = if exact { 0 } else { 1 };
            Ok(o)
        }
    }
}

fn check(what: CheckKind, text: &str, lim: &Limits) -> Result<Report, Error> {
    match what {
        CheckKind::Pentagon => pentagon_report(&json::from_text::<ExtensionDoc>(text)?.decode_moncat(lim)?, lim),
        CheckKind::K5 => twisted_k5_report(&json::from_text::<ExtensionDoc>(text)?.decode_bicat(lim)?, lim),
        CheckKind::Biext => Ok(check_biext(&json::from_text::<BiextDoc>(text)?.decode_biext(lim)?)),
        CheckKind::CatBiext => check_cat_biext(&json::from_text::<BiextDoc>(text)?.decode_cat(lim)?),
        CheckKind::Symmetric => {
            let s = json::from_text::<BiextDoc>(text)?.decode_symmetric(lim)?;
            Ok(check_cat_biext(&s.bi)?.merge(check_symmetric(&s)?))
        }
        CheckKind::Q44 => Ok(check_theta_44(&json::from_text::<ThetaDoc>(text)?.decode(lim)?.0)),
        CheckKind::Q42 => check_42(&json::from_text::<BiQDoc>(text)?.decode(lim)?),
    }
}

fn classify(what: ClassifyKind, text: &str, lim: &Limits) -> Result<Outcome, Error> {
    let doc = json::from_text::<ExtensionDoc>(text)?;
    let (gate, class) = match what {
        ClassifyKind::Moncat => {
            let e = doc.decode_moncat(lim)?;
            let gate = pentagon_report(&e, lim)?;
            let class = if gate.passed() { Some(classify_moncat(&e, lim)?) } else { None };
            (gate, class)
        }
        ClassifyKind::Bicat => {
            let e = doc.decode_bicat(lim)?;
            let gate = twisted_k5_report(&e, lim)?;
            let class = if gate.passed() { Some(classify_bicat(&e, lim)?) } else { None };
            (gate, class)
        }
    };
    match class {
        Some(c) => Outcome::report(gate.with_classification(c)),
        None => Outcome::report(gate),
    }
}

fn biext(what: BiextKind, text: &str, lim: &Limits) -> Result<Outcome, Error> {
    match what {
        BiextKind::FromMonoidal => {
            let d = json::from_text::<MonoidalDoc>(text)?.decode(lim)?;
            let e = commutator_biextension(&d, lim)?;
            Outcome::data(&BiextDoc::encode(&e), "commutator biextension")
        }
        BiextKind::Alternating => {
            let e = json::from_text::<BiextDoc>(text)?.decode_biext(lim)?;
            let valid = check_biext(&e);
            if !valid.passed() {
                return Outcome::report(valid);
            }
            if is_alternating(&e, lim)? {
                Outcome::report(Report::pass())
            } else {
                let w = Witness { equation: "alternating".into(), tuple: Vec::new() };
                Outcome::report(
                    Report::from_witnesses(vec![w])
                        .with_message("no trivialization of the symmetrization restricts to zero on the diagonal"),
                )
            }
        }
        BiextKind::Diagonal => {
            let e = json::from_text::<BiextDoc>(text)?.decode_biext(lim)?;
            let c = diagonal_extension(&e, lim)?;
            Outcome::data(&CochainDoc::encode(&c), "diagonal 2-cocycle")
        }
    }
}

fn qcheck(text: &str, lim: &Limits) -> Result<Report, Error> {
    match json::peek_kind(text)?.as_deref() {
        Some("theta") => {
            let (th, c) = json::from_text::<ThetaDoc>(text)?.decode(lim)?;
            let mut r = check_theta_44(&th);
            for mask in [Specialization::LowerLeft, Specialization::Diagonal] {
                r = r.merge(theta_specialize(&th, c.as_ref(), mask)?);
            }
            if let Some(c) = &c {
                r = r.merge(build_q2_from_extension(c, &th)?);
            }
            Ok(r)
        }
        Some("biq") => {
            let d = json::from_text::<BiQDoc>(text)?.decode(lim)?;
            Ok(check_42(&d)?.merge(check_24(&d)?).merge(specialize_42_to_32(&d)?).merge(specialize_24_to_23(&d)?))
        }
        other => Err(Error::Parse(format!("qcheck needs kind \"theta\" or \"biq\", found {other:?}"))),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Precondition(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let lim = cli.opts.cap.map(Limits::new).unwrap_or_default();
    let start = Instant::now();
    let (mut body, code, summary) = match dispatch(&cli.command, &lim) {
        Ok(o) => (o.body, o.code, o.summary),
        Err(e) => {
            let mut r = Report::error(e.to_string());
            if exit_code(&e) == 1 {
                r.status = Status::Fail;
                r.witnesses.push(Witness { equation: "precondition".into(), tuple: Vec::new() });
            }
            eprintln!("error: {e}");
            (serde_json::to_value(&r).expect("reports serialize"), exit_code(&e), e.to_string())
        }
    };
    if cli.opts.timing {
        if let Some(obj) = body.as_object_mut() {
            obj.insert("timing".into(), serde_json::json!(start.elapsed().as_millis() as u64));
        }
    }
    let out = if cli.opts.pretty { serde_json::to_string_pretty(&body) } else { serde_json::to_string(&body) };
    println!("{}", out.expect("JSON values serialize"));
    if cli.opts.pretty {
        eprintln!("{summary}");
    }
    ExitCode::from(code)
}
