//! Suite runner for the implications `β ⟹ λ, β ⟹ ρ, λ ⟹ ε, ρ ⟹ ε, ε ⟹ τ`
//! over named constructions and seeded random polygon pairs, plus the strict
//! separations the constructions witness.

use serde::{Deserialize, Serialize};

use crate::body::ConvexBody;
use crate::constructions::{random_polygon_pair, PairName};
use crate::crossing::{evaluate_pair, Predicates};
use crate::raster::{oracle_report, OracleCounts};
use crate::shapefile::ShapeFile;
use crate::tangency::SearchConfig;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSpec {
    pub named: Vec<PairName>,
    pub random_pairs: u64,
    pub seed: u64,
    pub config: SearchConfig,
    /// Raster referee resolution; `None` skips the referee.
    pub oracle_n: Option<usize>,
    /// Further pairs, e.g. golden or replay files.
    #[serde(skip)]
    pub extra: Vec<ExtraPair>,
}

/// A pair supplied from outside the catalog, optionally with expected predicates.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtraPair {
    pub label: String,
    pub d: ConvexBody,
    pub l: ConvexBody,
    pub expected: Option<Predicates>,
}

impl Default for SuiteSpec {
    fn default() -> Self {
        Self {
            named: PairName::ALL.to_vec(),
            random_pairs: 10_000,
            seed: 1,
            config: SearchConfig::default(),
            oracle_n: None,
            extra: Vec::new(),
        }
    }
}

/// Where a suite pair came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum PairSource {
    Named { name: PairName },
    Random { seed: u64, index: u64 },
    Extra { label: String },
}

impl std::fmt::Display for PairSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairSource::Named { name } => f.write_str(name.as_str()),
            PairSource::Random { seed, index } => write!(f, "random(seed {seed}, index {index})"),
            PairSource::Extra { label } => f.write_str(label),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairOutcome {
    pub source: PairSource,
    pub predicates: Option<Predicates>,
    pub counts: Option<(usize, usize)>,
    pub ambiguous: bool,
    pub violations: Vec<String>,
    pub error: Option<String>,
    pub oracle: Option<OracleCounts>,
}

/// A failed implication with a shape file that reproduces it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ViolationRecord {
    pub source: PairSource,
    pub predicates: Predicates,
    pub implications: Vec<String>,
    pub replay: ShapeFile,
}

/// A strict separation in the order of the crossing notions, witnessed by a construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparationCheck {
    pub pair: PairName,
    pub claim: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub evaluated: usize,
    pub ambiguous: Vec<PairSource>,
    pub errors: Vec<(PairSource, String)>,
    pub violations: Vec<ViolationRecord>,
    pub separations: Vec<SeparationCheck>,
    /// Random pairs whose resolved raster counts were compared, and how many agreed on τ.
    pub oracle_compared: usize,
    pub oracle_tau_agree: usize,
    pub oracle_count_agree: usize,
    /// Pairs where the referee disagreed with the rule on τ.
    pub oracle_tau_disagreements: Vec<PairSource>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
            && self.errors.is_empty()
            && self.separations.iter().all(|s| s.holds)
    }

    pub fn ambiguous_fraction(&self) -> f64 {
        if self.evaluated == 0 {
            0.0
        } else {
            self.ambiguous.len() as f64 / self.evaluated as f64
        }
    }
}

/// A named claim about a predicate tuple.
pub type Claim = (&'static str, fn(&Predicates) -> bool);

/// Separations a named construction must show.
pub fn separation_claims(name: PairName) -> Vec<Claim> {
    match name {
        PairName::OctagonPair => vec![("tau without epsilon", |p| p.tau && !p.epsilon)],
        PairName::HexagonPair => vec![
            ("lambda without rho", |p| p.lambda && !p.rho),
            ("epsilon without rho", |p| p.epsilon && !p.rho),
            ("lambda without beta", |p| p.lambda && !p.beta),
        ],
        PairName::EllipsePair => vec![("beta", |p| p.beta)],
        PairName::DiskPair => vec![("no crossing notion", |p| p.as_array().iter().all(|b| !b))],
    }
}

/// Evaluate one pair: predicates, implication check and optional referee.
pub fn evaluate_outcome(
    source: PairSource,
    d: &ConvexBody,
    l: &ConvexBody,
    cfg: &SearchConfig,
    oracle_n: Option<usize>,
) -> PairOutcome {
    let mut out = PairOutcome {
        source,
        predicates: None,
        counts: None,
        ambiguous: false,
        violations: Vec::new(),
        error: None,
        oracle: None,
    };
    match evaluate_pair(d, l, cfg) {
        Ok(r) => {
            out.ambiguous = r.is_ambiguous();
            out.violations = r
                .predicates
                .violations()
                .into_iter()
                .map(String::from)
                .collect();
            out.predicates = Some(r.predicates);
            out.counts = Some(r.counts);
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    if let (Some(n), None) = (oracle_n, &out.error) {
        match oracle_report(d, l, n) {
            Ok(c) => out.oracle = Some(c),
            Err(e) => out.error = Some(e.to_string()),
        }
    }
    out
}

/// Run the suite; `observe` sees every outcome in order.
pub fn run_suite(spec: &SuiteSpec, mut observe: impl FnMut(&PairOutcome)) -> SuiteSummary {
    let mut summary = SuiteSummary::default();
    let mut record =
        |summary: &mut SuiteSummary, o: &PairOutcome, d: &ConvexBody, l: &ConvexBody| {
            summary.evaluated += 1;
            if let Some(e) = &o.error {
                summary.errors.push((o.source.clone(), e.clone()));
            }
            if o.ambiguous {
                summary.ambiguous.push(o.source.clone());
            } else if let (Some(p), false) = (o.predicates, o.violations.is_empty()) {
                summary.violations.push(ViolationRecord {
                    source: o.source.clone(),
                    predicates: p,
                    implications: o.violations.clone(),
                    replay: ShapeFile::from_bodies(d, l),
                });
            }
            observe(o);
        };

    for &name in &spec.named {
        let np = name.build();
        let o = evaluate_outcome(
            PairSource::Named { name },
            &np.d,
            &np.l,
            &spec.config,
            spec.oracle_n,
        );
        for (claim, check) in separation_claims(name) {
            summary.separations.push(SeparationCheck {
                pair: name,
                claim: claim.to_string(),
                holds: !o.ambiguous && o.predicates.as_ref().is_some_and(check),
            });
        }
        record(&mut summary, &o, &np.d, &np.l);
    }

    for extra in &spec.extra {
        let source = PairSource::Extra {
            label: extra.label.clone(),
        };
        let mut o = evaluate_outcome(source, &extra.d, &extra.l, &spec.config, spec.oracle_n);
        if let (Some(want), Some(got), false) = (extra.expected, o.predicates, o.ambiguous) {
            if want != got {
                o.violations.push(format!("expected {want}, got {got}"));
            }
        }
        record(&mut summary, &o, &extra.d, &extra.l);
    }

    for index in 0..spec.random_pairs {
        let (d, l, _) = random_polygon_pair(spec.seed, index);
        let source = PairSource::Random {
            seed: spec.seed,
            index,
        };
        let o = evaluate_outcome(source, &d, &l, &spec.config, spec.oracle_n);
        if let (Some(c), Some(p), Some(k), false) = (o.oracle, o.predicates, o.counts, o.ambiguous)
        {
            summary.oracle_compared += 1;
            if c.ft_crossing() == p.tau {
                summary.oracle_tau_agree += 1;
            } else {
                summary.oracle_tau_disagreements.push(o.source.clone());
            }
            if c.resolved == k {
                summary.oracle_count_agree += 1;
            }
        }
        record(&mut summary, &o, &d, &l);
    }
    summary
}
