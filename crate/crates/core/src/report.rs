//! Machine-readable evaluation documents and their plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::body::ConvexBody;
use crate::crossing::{evaluate_pair, CrossingReport, Flag, Predicates};
use crate::error::Result;
use crate::raster::{oracle_report, OracleCounts};
use crate::tangency::{Owner, SearchConfig};

pub const REPORT_VERSION: u32 = 1;

/// Raster referee result next to the exact rule.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub resolution: usize,
    pub counts: OracleCounts,
    pub ft_crossing: bool,
    /// Resolved raster counts equal the rule's counts.
    pub counts_agree: bool,
    pub tau_agree: bool,
}

impl OracleSummary {
    pub fn compare(report: &CrossingReport, counts: OracleCounts, resolution: usize) -> Self {
        Self {
            resolution,
            counts,
            ft_crossing: counts.ft_crossing(),
            counts_agree: counts.resolved == report.counts,
            tau_agree: counts.ft_crossing() == report.predicates.tau,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub label: String,
    /// Body indices in the shape file, when evaluated from one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indices: Option<(usize, usize)>,
    pub report: CrossingReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Predicates>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl PairReport {
    /// Evaluate a pair; the oracle runs at `oracle_n` when given.
    pub fn evaluate(
        label: impl Into<String>,
        d: &ConvexBody,
        l: &ConvexBody,
        cfg: &SearchConfig,
        oracle_n: Option<usize>,
    ) -> Result<Self> {
        let report = evaluate_pair(d, l, cfg)?;
        let oracle = match oracle_n {
            Some(n) => Some(OracleSummary::compare(&report, oracle_report(d, l, n)?, n)),
            None => None,
        };
        Ok(Self {
            label: label.into(),
            indices: None,
            report,
            expected: None,
            oracle,
            timing_ms: None,
        })
    }

    pub fn matches_expected(&self) -> Option<bool> {
        self.expected.map(|e| e == self.report.predicates)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: u32,
    pub config: SearchConfig,
    pub pairs: Vec<PairReport>,
}

impl ReportDocument {
    pub fn new(config: SearchConfig) -> Self {
        Self {
            version: REPORT_VERSION,
            config,
            pairs: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| crate::Error::Schema {
            path: "$".into(),
            message: e.to_string(),
        })
    }

    pub fn is_ambiguous(&self) -> bool {
        self.pairs.iter().any(|p| p.report.is_ambiguous())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.pairs {
            let r = &p.report;
            let _ = writeln!(s, "{}", p.label);
            let _ = writeln!(s, "  {}", r.predicates);
            let _ = writeln!(
                s,
                "  components: D\\L = {}, L\\D = {}",
                r.counts.0, r.counts.1
            );
            let _ = writeln!(s, "  common supporting lines: {}", r.lines.len());
            for line in &r.lines {
                let _ = writeln!(
                    s,
                    "    α = {:>10.6}°  first {} at {}  last {} at {}",
                    line.alpha().to_degrees(),
                    owner_name(line.first.owner),
                    line.first.point,
                    owner_name(line.last.owner),
                    line.last.point
                );
            }
            for iv in &r.intervals {
                let _ = writeln!(
                    s,
                    "    zero interval from {:.6}° over {:.6}°",
                    iv.start.to_degrees(),
                    iv.width.to_degrees()
                );
            }
            for (name, w) in [("λ", &r.lambda_witness), ("ρ", &r.rho_witness)] {
                if let Some(w) = w {
                    let _ = writeln!(
                        s,
                        "  {name} witness: t at {:.6}°, t' at {:.6}°",
                        w.t.dir.alpha().to_degrees(),
                        w.t_prime.dir.alpha().to_degrees()
                    );
                }
            }
            for f in &r.flags {
                let _ = match f {
                    Flag::AmbiguousExtreme { alpha } => {
                        writeln!(s, "  flag: ambiguous extreme at {:.6}°", alpha.to_degrees())
                    }
                    Flag::OppositeWitness { alpha } => writeln!(
                        s,
                        "  flag: witness pair t, -t at {:.6}°",
                        alpha.to_degrees()
                    ),
                };
            }
            if let Some(ok) = p.matches_expected() {
                let _ = writeln!(s, "  expected: {}", if ok { "match" } else { "MISMATCH" });
            }
            if let Some(o) = &p.oracle {
                let _ = writeln!(
                    s,
                    "  raster {}²: resolved {:?}, raw {:?}, counts {}, τ {}",
                    o.resolution,
                    o.counts.resolved,
                    o.counts.raw,
                    if o.counts_agree { "agree" } else { "DISAGREE" },
                    if o.tau_agree { "agrees" } else { "DISAGREES" }
                );
            }
            if let Some(ms) = p.timing_ms {
                let _ = writeln!(s, "  time: {ms:.1} ms");
            }
        }
        s
    }
}

fn owner_name(o: Owner) -> &'static str {
    match o {
        Owner::DOnly => "D\\L",
        Owner::LOnly => "L\\D",
        Owner::Both => "D∩L",
        Owner::Ambiguous => "ambiguous",
    }
}
