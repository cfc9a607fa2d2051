//! Local action: the group induced by a vertex stabiliser on the neighbourhood.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::action::action_on_subset;
use crate::group::profile::{primitivity_profile, qp_profile};
use crate::group::PermGroup;
use crate::pair::VTPair;

/// Reason recorded when the local action is intransitive.
pub const INTRANSITIVE_REASON: &str = "local action intransitive";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LocalFlags {
    pub transitive: bool,
    pub two_transitive: bool,
    pub primitive: bool,
    pub quasiprimitive: bool,
    pub semiprimitive: bool,
}

/// A local property a pair may be required to have.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalProperty {
    TwoTransitive,
    Primitive,
    Quasiprimitive,
}

impl LocalProperty {
    pub fn holds(self, flags: &LocalFlags) -> bool {
        match self {
            LocalProperty::TwoTransitive => flags.two_transitive,
            LocalProperty::Primitive => flags.primitive,
            LocalProperty::Quasiprimitive => flags.quasiprimitive,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LocalProperty::TwoTransitive => "two_transitive",
            LocalProperty::Primitive => "primitive",
            LocalProperty::Quasiprimitive => "quasiprimitive",
        }
    }
}

impl std::str::FromStr for LocalProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two_transitive" | "2-transitive" => Ok(LocalProperty::TwoTransitive),
            "primitive" => Ok(LocalProperty::Primitive),
            "quasiprimitive" => Ok(LocalProperty::Quasiprimitive),
            _ => Err(Error::invalid(format!("unknown local property {s}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalActionReport {
    pub vertex: u32,
    pub neighbourhood: Vec<u32>,
    pub neighbourhood_size: usize,
    /// Acts on positions `0..neighbourhood_size` of the sorted neighbourhood.
    #[serde(skip)]
    pub induced_group: PermGroup,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub induced_order: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub stabiliser_order: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub kernel_order: BigUint,
    pub faithful: bool,
    pub flags: LocalFlags,
    pub reason: Option<String>,
}

impl LocalActionReport {
    /// Locally primitive implies locally quasiprimitive implies locally semiprimitive.
    pub fn implication_chain_holds(&self) -> bool {
        let f = &self.flags;
        (!f.two_transitive || f.primitive) && (!f.primitive || f.quasiprimitive) && (!f.quasiprimitive || f.semiprimitive)
    }
}

pub fn local_action(pair: &VTPair, alpha: u32) -> Result<LocalActionReport> {
    if alpha as usize >= pair.graph.order() {
        return Err(Error::invalid(format!("vertex {alpha} out of range")));
    }
    let stab = pair.group.point_stabiliser(alpha);
    let mut nbrs = pair.graph.neighbours(alpha).to_vec();
    nbrs.sort_unstable();
    nbrs.dedup();
    let stabiliser_order = stab.order();
    let (induced, kernel) = if nbrs.is_empty() {
        (PermGroup::trivial(0), stab.clone())
    } else {
        action_on_subset(&stab, &nbrs)?
    };
    let induced_order = induced.order();
    let kernel_order = kernel.order();
    let mut flags = LocalFlags {
        transitive: induced.is_transitive(),
        ..LocalFlags::default()
    };
    let mut reason = None;
    if flags.transitive && !nbrs.is_empty() {
        let prim = primitivity_profile(&induced)?;
        let qp = qp_profile(&induced)?;
        flags.two_transitive = prim.two_transitive;
        flags.primitive = prim.primitive;
        flags.quasiprimitive = qp.quasiprimitive;
        flags.semiprimitive = qp.semiprimitive;
    } else {
        reason = Some(INTRANSITIVE_REASON.to_string());
    }
    Ok(LocalActionReport {
        vertex: alpha,
        neighbourhood_size: nbrs.len(),
        neighbourhood: nbrs,
        induced_group: induced,
        induced_order,
        stabiliser_order,
        faithful: kernel_order.is_one(),
        kernel_order,
        flags,
        reason,
    })
}

/// Report at vertex 0, spot-checked against the last vertex.
pub fn classify_pair_locally(pair: &VTPair) -> Result<LocalActionReport> {
    let first = local_action(pair, 0)?;
    let last = (pair.graph.order() - 1) as u32;
    if last != 0 {
        let other = local_action(pair, last)?;
        if other.induced_order != first.induced_order
            || other.kernel_order != first.kernel_order
            || other.flags != first.flags
        {
            return Err(Error::assertion(format!(
                "local actions at 0 and {last} differ (orders {} and {})",
                first.induced_order, other.induced_order
            )));
        }
    }
    Ok(first)
}
