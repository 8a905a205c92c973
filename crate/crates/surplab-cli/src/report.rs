//! JSON report types and serialization.
//!
//! Reports are deterministic: identical invocations produce byte-identical
//! JSON except for the `timing` object. Floating-point values are written
//! with 17 significant digits (`{:.16e}`); non-finite values, which no
//! report should produce, serialize as `null`. Field names are pinned in
//! `docs/report-schema.md`.

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use std::io::{self, Write};

use surplab::extraction::{
    BalancedExtraction, ExtractionTrace, IncrementStep, MasterChainReport, PipelineParams,
};
use surplab::generators::GraphSpec;
use surplab::spectral::{PowerSumIdentities, PowerSums, PrincipalVectorReport, WeylReport};
use surplab::stability::StabilityReport;

use crate::suites::SuiteOutcome;

pub const SCHEMA: &str = "surplab.report/1";

#[derive(Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub command: String,
    pub input: Option<InputInfo>,
    pub findings: Findings,
    pub timing: Timing,
}

#[derive(Serialize)]
pub struct InputInfo {
    /// File path or the canonical generator spec.
    pub source: String,
    pub sha256: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Serialize)]
pub struct Timing {
    pub seconds: f64,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Findings {
    Maxcut {
        method: String,
        value: f64,
        surplus: f64,
        exact: bool,
        cut: surplab::Cut,
        exact_limit: usize,
    },
    Spectrum {
        eigenvalues: Vec<f64>,
        residual_tol: f64,
        power_sums: Option<PowerSums>,
        identities: Option<PowerSumIdentities>,
        weyl: WeylReport,
        principal: PrincipalVectorReport,
    },
    Certify {
        upper_bound_lambda: f64,
        certificates: Vec<CertSummary>,
        lowrank: LowRankSummary,
        oracle: Option<OracleSummary>,
        tolerances: CertTolerances,
    },
    Extract {
        mode: String,
        params: PipelineParams,
        step: Option<IncrementStep>,
        trace: Option<ExtractionTrace>,
        balanced: Option<BalancedExtraction>,
        master: Option<MasterChainReport>,
    },
    Stability {
        params: PipelineParams,
        report: StabilityReport,
    },
    Gen {
        spec: GraphSpec,
        n: usize,
        m: usize,
        out: Option<String>,
    },
    Verify {
        seed: u64,
        count: usize,
        suites: Vec<SuiteOutcome>,
        total_cases: usize,
        total_passed: usize,
        all_passed: bool,
    },
}

#[derive(Serialize)]
pub struct CertSummary {
    pub kind: surplab::surplus::CertKind,
    pub target: surplab::surplus::Target,
    pub bound: f64,
    pub feasibility_checked: bool,
    pub psd_min_eigenvalue: Option<f64>,
    pub max_diag: Option<f64>,
    pub bound_gap: Option<f64>,
}

#[derive(Serialize)]
pub struct LowRankSummary {
    pub rank: usize,
    pub iterations: usize,
    pub bound: f64,
    pub feasibility_checked: bool,
    pub rounded_cut_surplus: f64,
    pub rounding_trials: usize,
    /// Empirical ratio rounded surplus / relaxation bound; reported, never
    /// asserted (no inequality is claimed for it).
    pub rounding_ratio: Option<f64>,
}

#[derive(Serialize)]
pub struct OracleSummary {
    pub maxcut: f64,
    pub surplus: f64,
}

#[derive(Serialize)]
pub struct CertTolerances {
    pub psd: f64,
    pub diag: f64,
    pub bound: f64,
}

impl Default for CertTolerances {
    fn default() -> Self {
        Self {
            psd: surplab::surplus::CERT_PSD_TOL,
            diag: surplab::surplus::CERT_DIAG_TOL,
            bound: surplab::surplus::CERT_BOUND_TOL,
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update(bytes);
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Pretty JSON with every float at 17 significant digits.
struct SigFigs<'a> {
    inner: PrettyFormatter<'a>,
}

impl<'a> SigFigs<'a> {
    fn new() -> Self {
        Self {
            inner: PrettyFormatter::new(),
        }
    }
}

impl Formatter for SigFigs<'_> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            write!(w, "{value:.16e}")
        } else {
            w.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, f64::from(value))
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_array(w)
    }
    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array(w)
    }
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_array_value(w, first)
    }
    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_array_value(w)
    }
    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object(w)
    }
    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object(w)
    }
    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.inner.begin_object_key(w, first)
    }
    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.begin_object_value(w)
    }
    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.inner.end_object_value(w)
    }
}

pub fn to_json_string(report: &Report) -> Result<String, serde_json::Error> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SigFigs::new());
    report.serialize(&mut ser)?;
    out.push(b'\n');
    Ok(String::from_utf8(out).expect("JSON is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_use_17_significant_digits() {
        let report = Report {
            schema: SCHEMA,
            tool_version: "test",
            command: "x".into(),
            input: None,
            findings: Findings::Gen {
                spec: GraphSpec::new(surplab::generators::Family::Empty { n: 1 }, 0),
                n: 1,
                m: 0,
                out: None,
            },
            timing: Timing { seconds: 0.5 },
        };
        let s = to_json_string(&report).unwrap();
        assert!(s.contains("5.0000000000000000e-1"), "{s}");
    }
}
