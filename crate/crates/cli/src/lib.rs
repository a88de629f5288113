//! `hopfforge` command line: definition files, built-ins and reports.

pub mod build;
pub mod file;
pub mod report;

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use hopfforge::algebra::Algebra;
use hopfforge::coideal::containment_check;
use hopfforge::graded::{hilbert_divides, hilbert_series, signature};
use hopfforge::hopf::{AxiomGroup, HopfAlgebra};
use hopfforge::lantern::{lantern, numerology_report, verify_lie, GradedLieAlgebra};
use hopfforge::nakayama::{nakayama_automorphism, verify_character};
use hopfforge::scalar::format_scalar;
use hopfforge::Error;

use build::{Target, Unbuilt};
use report::{signature_pairs, series_strings, CoidealData, LanternData, NakayamaData, OrderData, Report, Severity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Certificates, Hopf axioms and declared coideal sides.
    Verify,
    /// Signature and Hilbert series.
    Signature,
    /// Lantern Lie algebra and its Lie checks.
    Lantern,
    /// Coideal subalgebras: sides, signatures, divisibility, primitives.
    Coideal,
    /// Whether `S²` is the identity, with a witness otherwise.
    AntipodeOrder,
    /// Nakayama automorphisms of targets with a known character.
    Nakayama,
    /// Carnot, no-gaps, Witt bound and `m₁` checks.
    Numerology,
    /// Everything above.
    Report,
}

#[derive(Debug, Parser)]
#[command(name = "hopfforge", version, about = "Exact computations in connected Hopf algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: Options,
}

#[derive(Clone, Debug, clap::Args)]
pub struct Options {
    /// Definition file (`.hopf`).
    #[arg(global = true)]
    pub file: Option<PathBuf>,

    /// Built-in algebra: `B:<λ>`, `E:<a>,<b>,<λ1>,<λ2>` or `U:<aff2|heisenberg|sl2|abelianN>`.
    #[arg(long, global = true, conflicts_with = "file")]
    pub builtin: Option<String>,

    /// Truncation order for certificates; defaults to max(6, 2 * max weight).
    #[arg(long, global = true)]
    pub truncation: Option<u32>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Command {
    fn covers(self, part: Command) -> bool {
        self == part || self == Command::Report
    }

    fn uses_subalgebras(self) -> bool {
        !matches!(self, Command::Signature | Command::Lantern | Command::Numerology)
    }
}

#[derive(Debug, thiserror::Error)]
enum LoadError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(#[from] file::ParseError),
    #[error("{0}")]
    Core(#[from] Error),
}

impl LoadError {
    fn severity(&self) -> Severity {
        match self {
            LoadError::Io(_) | LoadError::Parse(_) => Severity::Definition,
            LoadError::Core(e) => Severity::of(e),
        }
    }

    fn check_name(&self) -> &'static str {
        match self {
            LoadError::Io(_) => "read",
            LoadError::Parse(_) => "parse",
            LoadError::Core(Error::Termination(_)) => "termination",
            LoadError::Core(Error::Confluence(_)) => "confluence",
            LoadError::Core(_) => "load",
        }
    }
}

/// Parses or resolves the input and builds the host algebra.
fn load(opts: &Options) -> (String, Result<Unbuilt, LoadError>) {
    match (&opts.file, &opts.builtin) {
        (Some(path), _) => {
            let label = path.display().to_string();
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return (label.clone(), Err(LoadError::Io(format!("{label}: {e}")))),
            };
            match file::parse(&text) {
                Ok(f) => (f.name.clone(), build::from_file(&f).map_err(LoadError::from)),
                Err(e) => (label, Err(e.into())),
            }
        }
        (None, Some(spec)) => (spec.clone(), build::from_builtin(spec).map_err(LoadError::from)),
        (None, None) => ("-".into(), Err(LoadError::Io("give a definition file or --builtin <name>".into()))),
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    }
}

pub fn run(command: Command, opts: &Options) -> Output {
    let (label, loaded) = load(opts);
    let (report, stderr) = match loaded {
        Ok(unbuilt) => {
            let n = opts.truncation.unwrap_or_else(|| unbuilt.host.default_truncation());
            let mut report = Report::new(label, Some(n));
            analyze(command, unbuilt, n, &mut report);
            (report, String::new())
        }
        Err(e) => {
            let mut report = Report::new(label, None);
            let msg = e.to_string();
            report.check(e.check_name(), false, msg.trim_end(), e.severity());
            (report, format!("error: {}\n", msg.trim_end()))
        }
    };
    Output {
        code: report.exit_code(),
        stdout: render(&report, opts.format),
        stderr,
    }
}

fn certificate_checks(alg: &Algebra, report: &mut Report) {
    let strip = |s: String, prefix: &str| s.trim_end().trim_start_matches(prefix).to_string();
    let t = alg.termination();
    report.check("termination", t.passed(), strip(t.to_string(), "termination: "), Severity::Certificate);
    let c = alg.confluence();
    report.check("confluence", c.passed(), strip(c.to_string(), "confluence: "), Severity::Certificate);
}

fn axiom_checks(h: &HopfAlgebra, report: &mut Report) -> bool {
    let axioms = h.axioms();
    for group in [
        AxiomGroup::Relations,
        AxiomGroup::Coassociativity,
        AxiomGroup::Counit,
        AxiomGroup::Antipode,
    ] {
        let checks: Vec<_> = axioms.checks.iter().filter(|c| c.group == group).collect();
        let failed: Vec<String> = checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{}: {}", c.subject, c.defect.as_deref().unwrap_or("")))
            .collect();
        let details = if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            failed.join("\n")
        };
        report.check(format!("hopf {group}"), failed.is_empty(), details, Severity::Check);
    }
    axioms.passed()
}

fn analyze(command: Command, unbuilt: Unbuilt, n: u32, report: &mut Report) {
    let Unbuilt { mut host, subs, lie } = unbuilt;
    certificate_checks(host.algebra(), report);
    if !axiom_checks(&host, report) {
        report.skip("filtration", "Hopf axioms fail");
        return;
    }
    if host.truncation() != Some(n) {
        if let Err(e) = host.certify(n) {
            report.error("filtration", &e);
            return;
        }
    }
    let dims = host.filtration().expect("certified").graded_dims().to_vec();
    report.pass("filtration", format!("graded dims {dims:?}"));
    let host = Arc::new(host);

    let wants_lie = command.covers(Command::Lantern) || command.covers(Command::Numerology);
    if command.covers(Command::Signature) || wants_lie {
        signature_section(&host, n, report);
    }
    if wants_lie {
        lantern_section(command, &host, report);
    }
    if !command.uses_subalgebras() {
        return;
    }
    let mut targets = Vec::new();
    for (name, source) in &subs {
        match build::register(&host, source) {
            Ok(t) => {
                report.pass(format!("sub {name}"), format!("registered, signature {}", t.sub.signature()));
                targets.push(t);
            }
            Err(e) => {
                report.error(format!("sub {name}"), &e);
            }
        }
    }
    if let (Some(lie), true) = (&lie, command.covers(Command::Nakayama)) {
        match build::enveloping_target(&host, lie) {
            Ok(t) => targets.push(t),
            Err(e) => {
                report.error("whole algebra", &e);
            }
        }
    }
    if command.covers(Command::Verify) || command.covers(Command::Coideal) {
        side_checks(&targets, report);
    }
    if command.covers(Command::Coideal) {
        coideal_section(&host, &targets, report);
    }
    if command.covers(Command::AntipodeOrder) {
        order_section(&host, &targets, report);
    }
    if command.covers(Command::Nakayama) {
        nakayama_section(&targets, report);
    }
}

fn signature_section(host: &HopfAlgebra, n: u32, report: &mut Report) {
    let sig = match signature(host) {
        Ok(s) => s,
        Err(e) => {
            report.error("signature", &e);
            return;
        }
    };
    let series = hilbert_series(&sig, n as usize);
    report.line(format!("signature: {sig}"));
    report.line(format!("hilbert: {series}"));
    report.data.signature = Some(signature_pairs(&sig));
    report.data.hilbert = Some(series_strings(&series));
    report.data.graded_dims = host.filtration().map(|f| f.graded_dims().to_vec());
    let matches = host
        .filtration()
        .map(|f| {
            f.graded_dims()
                .iter()
                .enumerate()
                .all(|(i, d)| series.coeff(i) == &hopfforge::scalar::int(*d as i64))
        })
        .unwrap_or(false);
    report.check(
        "hilbert series",
        matches,
        if matches { "matches the certified graded dimensions" } else { "differs from the certified graded dimensions" },
        Severity::Check,
    );
}

fn lie_checks(l: &GradedLieAlgebra, report: &mut Report) {
    let r = verify_lie(l);
    report.check(
        "lantern jacobi",
        r.jacobi_failures.is_empty(),
        format!("{} failing triples", r.jacobi_failures.len()),
        Severity::Check,
    );
    report.check(
        "lantern grading",
        r.grading_failures.is_empty(),
        format!("{} brackets off degree", r.grading_failures.len()),
        Severity::Check,
    );
}

fn lantern_section(command: Command, host: &HopfAlgebra, report: &mut Report) {
    let l = match lantern(host) {
        Ok(l) => l,
        Err(e) => {
            report.error("lantern", &e);
            return;
        }
    };
    report.line(format!("lantern: {l}"));
    report.data.lantern = Some(LanternData::new(&l));
    if command.covers(Command::Lantern) {
        lie_checks(&l, report);
    }
    if command.covers(Command::Numerology) {
        let Ok(sig) = signature(host) else { return };
        let r = numerology_report(&l, &sig);
        for (name, v) in r.verdicts() {
            report.check(format!("numerology {name}"), v.passed, v.detail.clone(), Severity::Check);
        }
    }
}

fn side_checks(targets: &[Target], report: &mut Report) {
    for t in targets.iter().filter(|t| t.coideal) {
        let side = t.sub.side();
        let name = format!("sub {} {side} coideal", t.sub.name());
        match t.sub.coideal_check(side) {
            Ok(r) if r.passed() => report.pass(name, "generator coproducts have their required leg in T"),
            Ok(r) => report.check(name, false, r.to_string().trim_end(), Severity::Check),
            Err(e) => {
                report.error(name, &e);
            }
        }
    }
}

fn coideal_section(host: &Arc<HopfAlgebra>, targets: &[Target], report: &mut Report) {
    let host_sig = signature(host).ok();
    let coideals: Vec<&Target> = targets.iter().filter(|t| t.coideal).collect();
    for t in &coideals {
        let sub = &t.sub;
        let sig = sub.signature();
        let quotient = host_sig.as_ref().and_then(|h| hilbert_divides(&sig, h));
        let primitive = if sub.is_empty() { None } else { sub.primitive().ok() };
        let hopf_sub = sub.is_hopf_subalgebra().unwrap_or(false);
        report.check(
            format!("sub {} divides", sub.name()),
            quotient.is_some(),
            match &quotient {
                Some(q) => format!("h(H)/h(T) has signature {q}"),
                None => "Hilbert series quotient is not a signature series".to_string(),
            },
            Severity::Check,
        );
        if !sub.is_empty() {
            report.check(
                format!("sub {} primitive", sub.name()),
                primitive.is_some(),
                primitive.as_ref().map_or("no nonzero primitive".to_string(), |p| host.show(p)),
                Severity::Check,
            );
        }
        let images: Vec<String> = (0..sub.len()).map(|i| host.show(sub.generator_image(i))).collect();
        report.line(format!(
            "coideal {} ({}): {}; signature {sig}, gk {}{}{}",
            sub.name(),
            sub.side(),
            sub.names()
                .iter()
                .zip(&images)
                .map(|(g, u)| format!("{g} = {u}"))
                .collect::<Vec<_>>()
                .join(", "),
            sub.gk_dimension(),
            if hopf_sub { ", Hopf subalgebra" } else { "" },
            quotient.as_ref().map_or(String::new(), |q| format!(", quotient {q}")),
        ));
        report.data.coideals.push(CoidealData {
            name: sub.name().to_string(),
            side: sub.side().to_string(),
            generators: sub.names().to_vec(),
            images,
            signature: signature_pairs(&sig),
            gk: sub.gk_dimension(),
            hopf_subalgebra: hopf_sub,
            quotient: quotient.as_ref().map(signature_pairs),
            primitive: primitive.as_ref().map(|p| host.show(p)),
        });
    }
    if coideals.len() > 1 {
        let mut bad = Vec::new();
        for a in &coideals {
            for b in &coideals {
                match containment_check(&a.sub, &b.sub) {
                    Ok(r) if !r.dichotomy_holds() => bad.push(format!("{} in {}: {r}", a.sub.name(), b.sub.name())),
                    Ok(_) => {}
                    Err(e) => bad.push(format!("{} in {}: {e}", a.sub.name(), b.sub.name())),
                }
            }
        }
        let details = if bad.is_empty() {
            format!("{} pairs", coideals.len() * coideals.len())
        } else {
            bad.join("\n")
        };
        report.check("containment gk dichotomy", bad.is_empty(), details, Severity::Check);
    }
}

fn order_section(host: &HopfAlgebra, targets: &[Target], report: &mut Report) {
    match host.s_squared_analysis() {
        Ok(s2) => {
            let d = s2.describe(host.names());
            report.line(format!("antipode order: {d}"));
            report.data.antipode_order.push(OrderData {
                name: report.algebra.clone(),
                order: d,
            });
        }
        Err(e) => {
            report.error("antipode order", &e);
        }
    }
    for t in targets.iter().filter(|t| t.coideal) {
        match t.sub.s_squared_analysis() {
            Ok(s2) => {
                let d = s2.describe(host.names());
                report.line(format!("antipode order on {}: {d}", t.sub.name()));
                report.data.antipode_order.push(OrderData {
                    name: t.sub.name().to_string(),
                    order: d,
                });
            }
            Err(e) => {
                report.error(format!("antipode order on {}", t.sub.name()), &e);
            }
        }
    }
}

fn nakayama_section(targets: &[Target], report: &mut Report) {
    for t in targets {
        let name = format!("nakayama {}", t.sub.name());
        let Some(chi) = &t.chi else {
            report.skip(name, "character required");
            continue;
        };
        let character: Vec<[String; 2]> = t
            .sub
            .names()
            .iter()
            .zip(chi.values())
            .map(|(g, v)| [g.clone(), format_scalar(v)])
            .collect();
        match verify_character(&t.sub, chi) {
            Ok(r) if !r.passed() => {
                report.check(name, false, r.to_string().trim_end(), Severity::Check);
                continue;
            }
            Err(e) => {
                report.error(name, &e);
                continue;
            }
            Ok(_) => {}
        }
        match nakayama_automorphism(&t.sub, chi) {
            Ok(nu) => {
                let d = nu.describe(&t.sub);
                report.line(format!("nakayama {} ({}): {d}", t.sub.name(), chi.describe(t.sub.names())));
                report.pass(name, d);
                report.data.nakayama.push(NakayamaData {
                    name: t.sub.name().to_string(),
                    character,
                    automorphism: t
                        .sub
                        .names()
                        .iter()
                        .zip(nu.images())
                        .map(|(g, v)| [g.clone(), t.sub.algebra().show(v)])
                        .collect(),
                });
            }
            Err(e) => {
                report.error(name, &e);
            }
        }
    }
}
