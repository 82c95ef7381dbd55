//! Command dispatch.
//!
//! Standard output carries newline-delimited JSON: documents produced by the
//! command (one per line, in envelope form), then one record per law
//! (`{"law", "depth", "status", "checked", "counterexample"?}`), then a final
//! `{"summary": ..}` record. Input errors are a single `{"error": ..}` record.
//! A human summary goes to standard error unless `--json` is given.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use super::codec::{category_doc, functor_doc, Realizer};
use super::doc::{parse, serialize, serialize_line, Body, Document, FunctorDoc, InstanceDoc, SquareDoc};
use super::generate::{Generator, GeneratorConfig};
use crate::error::{Error, Result};
use crate::gabriel::{gabriel_factorize, verify_factorization};
use crate::modelcat::{
    build_retract, check_pushout, properness_check, pushout_free, recognize_cofibration, universal_lift,
    verify_lift, verify_retract, FreeCofibrationDatum, PushoutResult,
};
use crate::permcat::controls::negative_controls;
use crate::permcat::{validate, PermCat};
use crate::report::{CheckReport, Law};
use crate::smfunctor::{find_section, validate_functor, validate_nat_trans};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_LAW_FAILURE: u8 = 1;
pub const EXIT_INPUT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "permcat", version, about = "Checks laws of finitely presented permutative categories")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Word length bound for enumerated objects.
    #[arg(long, global = true, default_value_t = 3)]
    pub depth: usize,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Machine output only: no human summary on stderr.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory searched for relative input paths not found as given.
    #[arg(long, global = true)]
    pub fixtures_dir: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the law checks for a monoid, category, functor, transformation or square.
    Validate { input: PathBuf },
    /// Factor a functor through its induced category.
    Factor { input: PathBuf },
    /// Recognize a cofibration and build its retract decomposition.
    Retract { input: PathBuf },
    /// Build the pushout of a square along its free cofibration.
    Pushout { input: PathBuf },
    /// Build the universal lift out of a pushout for the square's cocone.
    Lift { input: PathBuf },
    /// Check that cobase change along generated free cofibrations is an equivalence.
    Properness {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Emit generated instances.
    Gen {
        family: Family,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Also write each document to `DIR/<name>.json`.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Category,
    Functor,
    Fibration,
    Cofibration,
    Square,
    /// The nine negative-control tables, one per law; ignores `--count`.
    Controls,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Category => "category",
            Family::Functor => "functor",
            Family::Fibration => "fibration",
            Family::Cofibration => "cofibration",
            Family::Square => "square",
            Family::Controls => "controls",
        }
    }
}

/// What a command produced.
#[derive(Default)]
struct Output {
    documents: Vec<Document>,
    report: CheckReport,
}

impl Output {
    fn doc(&mut self, body: Body) {
        self.documents.push(Document::new(body));
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_PASS };
            let _ = write!(err, "{e}");
            if code == EXIT_INPUT_ERROR {
                let _ = writeln!(out, "{}", json!({ "error": { "kind": "usage", "message": e.kind().to_string() } }));
            }
            return code;
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli) {
        Ok(o) => {
            for d in &o.documents {
                let _ = writeln!(out, "{}", serialize_line(d));
            }
            let _ = write!(out, "{}", o.report.to_json_lines());
            let failed = o.report.failed_laws().len();
            let code = if failed == 0 { EXIT_PASS } else { EXIT_LAW_FAILURE };
            let summary = json!({ "summary": {
                "command": name,
                "depth": cli.global.depth,
                "documents": o.documents.len(),
                "laws": o.report.results.len(),
                "failed": failed,
                "exit": code,
            }});
            let _ = writeln!(out, "{summary}");
            if !cli.global.json {
                let _ = write!(err, "{}", o.report);
                let _ = writeln!(
                    err,
                    "{name}: {} documents, {} laws, {failed} failed",
                    o.documents.len(),
                    o.report.results.len()
                );
            }
            code
        }
        Err(e) => {
            let _ = writeln!(out, "{}", json!({ "error": { "kind": "input", "message": e.to_string() } }));
            let _ = writeln!(err, "{name}: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Factor { .. } => "factor",
        Command::Retract { .. } => "retract",
        Command::Pushout { .. } => "pushout",
        Command::Lift { .. } => "lift",
        Command::Properness { .. } => "properness",
        Command::Gen { .. } => "gen",
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    let depth = g.depth;
    let load = |p: &Path| read_document(p, g.fixtures_dir.as_deref());
    let mut o = Output::default();
    match &cli.command {
        Command::Validate { input } => {
            let doc = load(input)?;
            let mut r = Realizer::new();
            o.report = match &doc.body {
                Body::Monoid(m) => {
                    // the monoid axioms are checked while realizing the table
                    super::codec::monoid(m)?;
                    let mut law = Law::new("monoid_axioms", depth);
                    law.check(true, String::new);
                    let mut report = CheckReport::new();
                    report.push(law);
                    report
                }
                Body::Category(c) => validate(&*r.category(c)?, depth),
                Body::Functor(f) => validate_functor(&r.functor(f)?, depth),
                Body::NatTrans(n) => validate_nat_trans(&r.nat_trans(n)?, depth),
                Body::Square(s) => {
                    let mut report = CheckReport::new();
                    report.extend_scoped("fibration", validate_functor(&r.functor(&s.fibration)?, depth));
                    report.extend_scoped("cofibration", validate_functor(&r.functor(&s.cofibration)?, depth));
                    report
                }
                Body::Instance(i) => {
                    return Err(Error::doc("kind", format!("validate the inner {} document", i.document.body.kind())))
                }
            };
        }
        Command::Factor { input } => {
            let f = Realizer::new().functor(&expect_functor(load(input)?)?)?;
            let input_report = validate_functor(&f, depth);
            if !input_report.all_pass() {
                o.report.extend_scoped("input", input_report);
                return Ok(o);
            }
            let fac = gabriel_factorize(&f, depth)?;
            o.doc(Body::Category(category_doc(&fac.category, depth)?));
            o.doc(Body::Functor(functor_doc(&fac.gamma, depth)?));
            o.doc(Body::Functor(functor_doc(&fac.delta, depth)?));
            o.report = verify_factorization(&f, &fac, depth);
        }
        Command::Retract { input } => {
            let f = Realizer::new().functor(&expect_functor(load(input)?)?)?;
            let mut law = Law::new("cofibration_recognized", depth);
            match recognize_cofibration(&f, depth)? {
                None => {
                    law.fail("no lift within depth".into());
                    o.report.push(law);
                }
                Some(l_obj) => {
                    law.check(true, String::new);
                    o.report.push(law);
                    let w = build_retract(&f, l_obj, depth)?;
                    o.doc(Body::Category(category_doc(&w.e, depth)?));
                    for h in [&w.i, &w.p, &w.l] {
                        o.doc(Body::Functor(functor_doc(h, depth)?));
                    }
                    o.report.extend_scoped("retract", verify_retract(&w, depth));
                }
            }
        }
        Command::Pushout { input } => {
            let sq = expect_square(load(input)?)?;
            let mut r = Realizer::new();
            if let Some(res) = square_pushout(&mut r, &sq, depth, &mut o.report)? {
                o.doc(Body::Category(category_doc(&res.category, depth)?));
                o.doc(Body::Functor(functor_doc(&res.p, depth)?));
                o.doc(Body::Functor(functor_doc(&res.gamma, depth)?));
                o.report.extend_scoped("pushout", check_pushout(&res, depth));
            }
        }
        Command::Lift { input } => {
            let sq = expect_square(load(input)?)?;
            let cocone = sq
                .cocone
                .as_ref()
                .ok_or_else(|| Error::doc("cocone", "lift needs a square with a cocone"))?;
            let mut r = Realizer::new();
            let (rr, t) = (r.functor(&cocone.r)?, r.functor(&cocone.t)?);
            if let Some(res) = square_pushout(&mut r, &sq, depth, &mut o.report)? {
                let mut law = Law::new("lift_exists", depth);
                match universal_lift(&res, &rr, &t, depth) {
                    Ok(l) => {
                        law.check(true, String::new);
                        o.report.push(law);
                        o.doc(Body::Functor(functor_doc(&l, depth)?));
                        o.report.extend_scoped("lift", verify_lift(&res, &l, &rr, &t, depth));
                    }
                    Err(e) => {
                        law.fail(e.to_string());
                        o.report.push(law);
                    }
                }
            }
        }
        Command::Properness { count } => {
            let mut gen = generator(g)?;
            for i in 0..*count {
                let sq = gen.square()?;
                let report = match find_section(&sq.fibration, depth) {
                    Ok(sec) => properness_check(&sec, &sq.cofibration, depth),
                    Err(e) => failed_report("section_found", depth, e),
                };
                o.report.extend_scoped(&format!("instance{i}"), report);
            }
        }
        Command::Gen { family, count, out } => {
            let named = generate(g, *family, *count)?;
            if let Some(dir) = out {
                std::fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
                for (name, d) in &named {
                    let path = dir.join(format!("{name}.json"));
                    std::fs::write(&path, serialize(d) + "\n").map_err(|e| io_error(&path, e))?;
                }
            }
            for (i, (_, d)) in named.into_iter().enumerate() {
                o.doc(Body::Instance(InstanceDoc {
                    family: family.name().into(),
                    seed: g.seed,
                    index: i,
                    document: Box::new(d),
                }));
            }
        }
    }
    Ok(o)
}

fn generator(g: &Global) -> Result<Generator> {
    Generator::new(GeneratorConfig {
        depth: g.depth,
        ..GeneratorConfig::with_seed(g.seed)
    })
}

fn failed_report(law: &str, depth: usize, e: Error) -> CheckReport {
    let mut l = Law::new(law, depth);
    l.fail(e.to_string());
    let mut report = CheckReport::new();
    report.push(l);
    report
}

/// Realizes the square, finds a section of its fibration and builds the
/// pushout. Failures of the square's requirements are recorded as laws.
fn square_pushout(
    r: &mut Realizer,
    sq: &SquareDoc,
    depth: usize,
    report: &mut CheckReport,
) -> Result<Option<PushoutResult>> {
    let fib = r.functor(&sq.fibration)?;
    let cof = r.functor(&sq.cofibration)?;
    let mut law = Law::new("free_cofibration", depth);
    let datum = match FreeCofibrationDatum::new(cof) {
        Ok(d) => {
            law.check(true, String::new);
            d
        }
        Err(e) => {
            law.fail(e.to_string());
            report.push(law);
            return Ok(None);
        }
    };
    report.push(law);
    let mut law = Law::new("section_found", depth);
    let sec = match find_section(&fib, depth) {
        Ok(s) => {
            law.check(true, String::new);
            s
        }
        Err(e) => {
            law.fail(e.to_string());
            report.push(law);
            return Ok(None);
        }
    };
    report.push(law);
    let mut law = Law::new("pushout_constructed", depth);
    let res = match pushout_free(&sec, &datum, depth) {
        Ok(res) => {
            law.check(true, String::new);
            Some(res)
        }
        Err(e) => {
            law.fail(e.to_string());
            None
        }
    };
    report.push(law);
    Ok(res)
}

/// `(name, document)` pairs for `count` instances of `family`.
fn generate(g: &Global, family: Family, count: usize) -> Result<Vec<(String, Document)>> {
    let depth = g.depth;
    let mut out = Vec::new();
    if family == Family::Controls {
        for (law, t) in negative_controls() {
            let c = PermCat::table(t);
            out.push((law.to_string(), Document::new(Body::Category(category_doc(&c, depth)?))));
        }
        return Ok(out);
    }
    let mut gen = generator(g)?;
    for i in 0..count {
        let body = match family {
            Family::Category => Body::Category(category_doc(&gen.category(), depth)?),
            Family::Functor => Body::Functor(functor_doc(&gen.transport_instance(false)?.functor, depth)?),
            Family::Fibration => Body::Functor(functor_doc(&gen.square()?.fibration, depth)?),
            Family::Cofibration => Body::Functor(functor_doc(&gen.cofibration()?, depth)?),
            Family::Square => {
                let sq = gen.square()?;
                Body::Square(SquareDoc {
                    fibration: functor_doc(&sq.fibration, depth)?,
                    cofibration: functor_doc(&sq.cofibration.inclusion, depth)?,
                    cocone: None,
                })
            }
            Family::Controls => unreachable!(),
        };
        out.push((format!("{}_{i}", family.name()), Document::new(body)));
    }
    Ok(out)
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::doc(path.display().to_string(), e.to_string())
}

fn read_document(path: &Path, fallback: Option<&Path>) -> Result<Document> {
    let resolved = match fallback {
        Some(dir) if !path.exists() && path.is_relative() => {
            let name = path.file_name().map(Path::new).unwrap_or(path);
            [dir.join(path), dir.join(name)]
                .into_iter()
                .find(|p| p.exists())
                .unwrap_or_else(|| path.to_path_buf())
        }
        _ => path.to_path_buf(),
    };
    let text = std::fs::read_to_string(&resolved).map_err(|e| io_error(&resolved, e))?;
    parse(&text)
}

fn expect_functor(d: Document) -> Result<FunctorDoc> {
    match d.body {
        Body::Functor(f) => Ok(f),
        other => Err(Error::doc("kind", format!("expected a functor document, found {}", other.kind()))),
    }
}

fn expect_square(d: Document) -> Result<SquareDoc> {
    match d.body {
        Body::Square(s) => Ok(s),
        other => Err(Error::doc("kind", format!("expected a square document, found {}", other.kind()))),
    }
}
