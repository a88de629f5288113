//! Report model shared by the text and JSON renderers.

use std::fmt::Write as _;

use hopfforge::graded::{PowerSeries, Signature};
use hopfforge::lantern::GradedLieAlgebra;
use hopfforge::scalar::format_scalar;
use hopfforge::Error;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// What a failure means for the exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Check,
    Certificate,
    Definition,
}

impl Severity {
    pub fn exit_code(self) -> u8 {
        match self {
            Severity::Check => 1,
            Severity::Definition => 2,
            Severity::Certificate => 3,
        }
    }

    pub fn of(e: &Error) -> Severity {
        match e {
            Error::Parse(_)
            | Error::Presentation(_)
            | Error::UnknownCatalog(_)
            | Error::HopfData(_)
            | Error::PresentationMismatch { .. }
            | Error::Arity { .. } => Severity::Definition,
            Error::Termination(_)
            | Error::Confluence(_)
            | Error::Reweight { .. }
            | Error::Filtration { .. }
            | Error::MissingCertificate(_)
            | Error::BeyondTruncation { .. }
            | Error::NotHomomorphism { .. }
            | Error::DependentEmbedding { .. }
            | Error::AntipodeRecursion(_)
            | Error::DegreeBound(..)
            | Error::LegNotAugmented => Severity::Certificate,
            _ => Severity::Check,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub details: String,
    #[serde(skip)]
    pub severity: Severity,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Bracket {
    pub a: String,
    pub b: String,
    /// `[[basis element, coefficient]]`.
    pub value: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LanternData {
    /// `[[name, degree]]`.
    pub basis: Vec<(String, u32)>,
    pub brackets: Vec<Bracket>,
    pub text: String,
}

impl LanternData {
    pub fn new(l: &GradedLieAlgebra) -> Self {
        let names = l.names();
        LanternData {
            basis: names.iter().cloned().zip(l.degrees().iter().copied()).collect(),
            brackets: l
                .nonzero_brackets()
                .map(|(a, b, v)| Bracket {
                    a: names[a].clone(),
                    b: names[b].clone(),
                    value: v.iter().map(|(e, c)| [names[*e].clone(), format_scalar(c)]).collect(),
                })
                .collect(),
            text: l.to_string(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoidealData {
    pub name: String,
    pub side: String,
    pub generators: Vec<String>,
    pub images: Vec<String>,
    pub signature: Vec<(u32, usize)>,
    pub gk: usize,
    pub hopf_subalgebra: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<Vec<(u32, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primitive: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderData {
    pub name: String,
    pub order: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NakayamaData {
    pub name: String,
    /// `[[generator, value]]`.
    pub character: Vec<[String; 2]>,
    /// `[[generator, image]]`.
    pub automorphism: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Data {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<Vec<(u32, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded_dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lantern: Option<LanternData>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub coideals: Vec<CoidealData>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub antipode_order: Vec<OrderData>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nakayama: Vec<NakayamaData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub algebra: String,
    /// Absent when nothing could be loaded.
    pub truncation: Option<u32>,
    pub checks: Vec<Check>,
    pub data: Data,
    /// Text-only lines, in the order produced.
    #[serde(skip)]
    pub lines: Vec<String>,
}

pub fn signature_pairs(s: &Signature) -> Vec<(u32, usize)> {
    s.parts().to_vec()
}

pub fn series_strings(p: &PowerSeries) -> Vec<String> {
    p.coeffs().iter().map(format_scalar).collect()
}

impl Report {
    pub fn new(algebra: impl Into<String>, truncation: Option<u32>) -> Self {
        Report {
            algebra: algebra.into(),
            truncation,
            checks: Vec::new(),
            data: Data::default(),
            lines: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>, severity: Severity) {
        self.checks.push(Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            details: details.into(),
            severity,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.check(name, true, details, Severity::Check);
    }

    pub fn skip(&mut self, name: impl Into<String>, details: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Skip,
            details: details.into(),
            severity: Severity::Check,
        });
    }

    /// Records an error as a failed check; returns its severity.
    pub fn error(&mut self, name: impl Into<String>, e: &Error) -> Severity {
        let severity = Severity::of(e);
        self.check(name, false, e.to_string().trim_end(), severity);
        severity
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn exit_code(&self) -> u8 {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| c.severity)
            .max()
            .map_or(0, Severity::exit_code)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "algebra: {}", self.algebra);
        if let Some(n) = self.truncation {
            let _ = writeln!(out, "truncation: {n}");
        }
        for l in &self.lines {
            let _ = writeln!(out, "{l}");
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
        }
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let mut details = c.details.lines();
            let first = details.next().unwrap_or("");
            if first.is_empty() {
                let _ = writeln!(out, "  {tag}  {}", c.name);
            } else {
                let _ = writeln!(out, "  {tag}  {}: {first}", c.name);
            }
            for more in details {
                let _ = writeln!(out, "        {more}");
            }
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        if failed == 0 {
            let _ = writeln!(out, "result: pass");
        } else {
            let _ = writeln!(out, "result: FAIL ({failed} of {} checks)", self.checks.len());
        }
        out
    }
}
