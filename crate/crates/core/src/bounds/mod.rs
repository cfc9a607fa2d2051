//! Symbolic bounds, rigorous comparison and the stabiliser-bounding pipelines.

pub mod expr;
pub mod funcs;
pub mod lemma;
pub mod lnint;
pub mod theorem1;

use num_bigint::BigUint;
use serde::Serialize;

pub use expr::{cmp_bound, BoundExpr, CmpResult, EvalConfig};
pub use funcs::BoundFn;

use crate::pair::VTPair;

/// Outcome of comparing a vertex-stabiliser order against a bound.
#[derive(Clone, Debug, Serialize)]
pub struct BoundCertificate {
    #[serde(serialize_with = "crate::report::ser_big")]
    pub stabiliser_order: BigUint,
    pub bound: BoundExpr,
    pub result: CmpResult,
}

impl BoundCertificate {
    pub fn holds(&self) -> bool {
        self.result == CmpResult::LessOrEqual
    }
}

/// Compares `|G_0|` against `b`.
pub fn check_bounded(pair: &VTPair, b: &BoundExpr) -> BoundCertificate {
    let stabiliser_order = pair.group.point_stabiliser(0).order();
    certify(stabiliser_order, b)
}

pub fn certify(stabiliser_order: BigUint, b: &BoundExpr) -> BoundCertificate {
    let result = cmp_bound(b, &stabiliser_order, &EvalConfig::default());
    BoundCertificate {
        stabiliser_order,
        bound: b.clone(),
        result,
    }
}
