//! Reduction engines for quasiprimitive and biquasiprimitive pairs.
//!
//! Each engine returns a [`ReductionResult`]: either a certified stabiliser
//! bound, or a reduction to one or two smaller pairs with a simple group,
//! together with the ordered list of assertions verified on the way.

pub mod biqp;
pub mod qp;
pub mod util;

use num_bigint::BigUint;
use serde::Serialize;

use crate::bounds::BoundCertificate;
use crate::error::Error;
use crate::pair::VTPair;
use crate::report::Check;

pub use biqp::{biqp_split, lemma_silly_check, theorem_mainbiqp, theorem_mainbiqp_with_progress, BipartiteSplit, Split};
pub use qp::{
    classify_qp_case, find_regular_normal, pa_reduce, theorem_mainqp, theorem_mainqp_with_progress,
    verify_lemma_proj, verify_nrorbits, wreath_component, PaData, ProjectionReport, NrOrbitsReport, QpCase,
};

/// Sizes describing a pair in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairSummary {
    pub vertices: usize,
    pub edges: usize,
    pub valency: usize,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub group_order: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub stabiliser_order: BigUint,
}

impl PairSummary {
    pub fn of(pair: &VTPair) -> Self {
        PairSummary {
            vertices: pair.graph.order(),
            edges: pair.graph.edge_count(),
            valency: pair.graph.max_valency(),
            group_order: pair.group.order(),
            stabiliser_order: pair.group.point_stabiliser(0).order(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Bounded {
        certificate: BoundCertificate,
    },
    ReducedQp {
        #[serde(skip_serializing)]
        lambda: VTPair,
        summary: PairSummary,
    },
    ReducedBiqp {
        #[serde(skip_serializing)]
        lambda_r: VTPair,
        #[serde(skip_serializing)]
        lambda_s: VTPair,
        summary_r: PairSummary,
        summary_s: PairSummary,
    },
    Unclassified {
        reason: String,
    },
}

impl Outcome {
    pub fn reduced_qp(lambda: VTPair) -> Self {
        let summary = PairSummary::of(&lambda);
        Outcome::ReducedQp { lambda, summary }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Outcome::Bounded { .. } => "bounded",
            Outcome::ReducedQp { .. } => "reduced_qp",
            Outcome::ReducedBiqp { .. } => "reduced_biqp",
            Outcome::Unclassified { .. } => "unclassified",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionResult {
    pub route: String,
    pub outcome: Outcome,
    pub trace: Vec<Check>,
}

impl ReductionResult {
    pub fn is_unclassified(&self) -> bool {
        matches!(self.outcome, Outcome::Unclassified { .. })
    }
}

/// Receives each trace step as soon as it is verified.
pub type Progress<'a> = &'a mut dyn FnMut(&Check);

/// Collects trace steps and forwards them to an optional progress callback.
pub(crate) struct Tracer<'a> {
    trace: Vec<Check>,
    progress: Option<Progress<'a>>,
}

impl<'a> Tracer<'a> {
    pub(crate) fn new(progress: Option<Progress<'a>>) -> Self {
        Tracer { trace: Vec::new(), progress }
    }

    /// Records a check and returns whether it passed.
    pub(crate) fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) -> bool {
        let c = Check::new(name, pass, detail);
        if let Some(p) = self.progress.as_mut() {
            p(&c);
        }
        self.trace.push(c);
        pass
    }

    pub(crate) fn extend(&mut self, prefix: &str, checks: &[Check]) {
        for c in checks {
            self.check(format!("{prefix}{}", c.name), c.pass, c.detail.clone());
        }
    }

    /// Emits the outcome only if every recorded check passed.
    pub(crate) fn finish(self, route: &str, outcome: Outcome) -> ReductionResult {
        let failed: Vec<&str> = self.trace.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        let outcome = if failed.is_empty() || matches!(outcome, Outcome::Unclassified { .. }) {
            outcome
        } else {
            Outcome::Unclassified {
                reason: format!("failed: {}", failed.join(", ")),
            }
        };
        ReductionResult {
            route: route.to_string(),
            outcome,
            trace: self.trace,
        }
    }

    pub(crate) fn unclassified(self, route: &str, reason: impl Into<String>) -> ReductionResult {
        ReductionResult {
            route: route.to_string(),
            outcome: Outcome::Unclassified { reason: reason.into() },
            trace: self.trace,
        }
    }
}

/// Runs the engine matching the pair's normal-subgroup profile: the
/// biquasiprimitive engine when the profile says so, the quasiprimitive one
/// otherwise. Pairs neither engine accepts are unclassified.
pub fn reduce(pair: &VTPair, mut progress: Option<Progress<'_>>) -> crate::error::Result<ReductionResult> {
    let profile = match crate::group::profile::qp_profile(&pair.group) {
        Ok(p) => p,
        Err(e) => return soften(e, Tracer::new(progress), "profile"),
    };
    let result = match (profile.biquasiprimitive, progress.as_mut()) {
        (true, Some(p)) => theorem_mainbiqp_with_progress(pair, *p),
        (true, None) => theorem_mainbiqp(pair),
        (false, Some(p)) => theorem_mainqp_with_progress(pair, *p),
        (false, None) => theorem_mainqp(pair),
    };
    match result {
        Err(Error::Precondition(reason)) => Ok(ReductionResult {
            route: "profile".into(),
            outcome: Outcome::Unclassified { reason },
            trace: Vec::new(),
        }),
        other => other,
    }
}

/// Resource limits become an unclassified outcome; other errors propagate.
pub(crate) fn soften(e: Error, tracer: Tracer<'_>, route: &str) -> crate::error::Result<ReductionResult> {
    match e {
        Error::Resource { .. } => Ok(tracer.unclassified(route, e.to_string())),
        other => Err(other),
    }
}
