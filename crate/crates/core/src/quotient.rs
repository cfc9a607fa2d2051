//! Normal quotients, block quotients and the check that local properties pass
//! to normal quotients.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::action::{canonical_partition, induced_action};
use crate::group::normal::one_closure;
use crate::group::profile::qp_profile;
use crate::group::PermGroup;
use crate::local::{classify_pair_locally, LocalProperty};
use crate::pair::{validate_pair, VTPair};
use crate::report::{all_pass, Check};

#[derive(Clone, Debug, Serialize)]
pub struct QuotientResult {
    #[serde(skip)]
    pub quotient_graph: Graph,
    /// Blocks sorted by least element; block `i` is quotient vertex `i`.
    pub blocks: Vec<Vec<u32>>,
    pub block_map: Vec<u32>,
    #[serde(skip)]
    pub image_group: PermGroup,
    #[serde(skip)]
    pub kernel: PermGroup,
    /// Valency of the original graph and of the quotient.
    pub valency_drop: (usize, usize),
    /// The quotient revalidated as a pair, for normal quotients with at least three blocks.
    #[serde(skip)]
    pub pair: Option<VTPair>,
}

impl QuotientResult {
    pub fn image_order(&self) -> BigUint {
        self.image_group.order()
    }

    pub fn kernel_order(&self) -> BigUint {
        self.kernel.order()
    }

    /// Stabiliser of quotient vertex 0 in the image group.
    pub fn image_stabiliser_order(&self) -> BigUint {
        self.image_group.point_stabiliser(0).order()
    }
}

fn quotient_graph(graph: &Graph, blocks: &[Vec<u32>], block_of: &[u32]) -> Result<Graph> {
    let mut edges = Vec::new();
    for (u, v) in graph.edges() {
        let (a, b) = (block_of[u as usize], block_of[v as usize]);
        if a != b {
            edges.push(if graph.is_directed() || a < b { (a, b) } else { (b, a) });
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(blocks.len(), &edges, graph.is_directed())
}

fn build(pair: &VTPair, partition: &[Vec<u32>]) -> Result<QuotientResult> {
    let ia = induced_action(&pair.group, partition)?;
    let graph = quotient_graph(&pair.graph, &ia.blocks, &ia.block_of)?;
    let drop = (pair.graph.max_valency(), graph.max_valency());
    Ok(QuotientResult {
        quotient_graph: graph,
        blocks: ia.blocks,
        block_map: ia.block_of,
        image_group: ia.image,
        kernel: ia.kernel,
        valency_drop: drop,
        pair: None,
    })
}

/// Quotient by the orbits of a normal intransitive subgroup.
///
/// The kernel of the action on the orbits is the 1-closure of `n`.
pub fn normal_quotient(pair: &VTPair, n: &PermGroup) -> Result<QuotientResult> {
    if n.degree() != pair.group.degree() {
        return Err(Error::invalid("subgroup degree differs from the pair"));
    }
    if !n.is_subgroup_of(&pair.group) {
        return Err(Error::NotMember("N is not a subgroup of G".into()));
    }
    if !n.is_normalised_by(&pair.group) {
        return Err(Error::NotNormal("N is not normal in G".into()));
    }
    let orbits = n.orbits();
    if orbits.len() == 1 {
        return Err(Error::precondition("N is transitive, the quotient is a single vertex"));
    }
    let mut q = build(pair, &orbits)?;
    let closure = one_closure(n, &pair.group)?;
    if closure.order() != q.kernel.order() {
        return Err(Error::assertion("kernel differs from the 1-closure"));
    }
    if q.blocks.len() >= 3 {
        if q.valency_drop.1 > q.valency_drop.0 {
            return Err(Error::assertion("normal quotient has larger valency"));
        }
        let revalidated = validate_pair(q.quotient_graph.clone(), q.image_group.clone(), pair.d)
            .map_err(|d| Error::assertion(format!("normal quotient is not a valid pair: {d}")))?;
        q.pair = Some(revalidated);
    }
    Ok(q)
}

/// Quotient by a `G`-invariant partition. No valency bound is asserted.
pub fn block_quotient(pair: &VTPair, partition: &[Vec<u32>]) -> Result<QuotientResult> {
    canonical_partition(pair.graph.order(), partition)?;
    build(pair, partition)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Maximality {
    /// Every supplied normal overgroup either is not 1-closed or has at most two orbits.
    Verified,
    /// No overgroups were supplied.
    Unverified,
    /// A supplied overgroup is 1-closed with at least three orbits.
    Violated,
}

#[derive(Clone, Debug, Serialize)]
pub struct PropositionReport {
    pub property: LocalProperty,
    pub hypotheses: Vec<Check>,
    pub maximality: Maximality,
    pub conclusions: Vec<Check>,
    /// Set when a hypothesis fails, naming it and any failed conclusion.
    pub diagnosis: Option<String>,
}

impl PropositionReport {
    pub fn hypotheses_hold(&self) -> bool {
        all_pass(&self.hypotheses) && self.maximality != Maximality::Violated
    }

    /// The implication holds when a hypothesis fails or all conclusions pass.
    pub fn consistent(&self) -> bool {
        !self.hypotheses_hold() || all_pass(&self.conclusions)
    }
}

/// Tests the three conclusions for a locally-`property` pair and a normal
/// subgroup `n` that is 1-closed and maximal with at least three orbits.
/// Maximality is tested only against the supplied `overgroups`.
pub fn proposition_local_check(
    pair: &VTPair,
    n: &PermGroup,
    property: LocalProperty,
    overgroups: &[PermGroup],
) -> Result<PropositionReport> {
    if !n.is_subgroup_of(&pair.group) || !n.is_normalised_by(&pair.group) {
        return Err(Error::NotNormal("N is not normal in G".into()));
    }
    let local = classify_pair_locally(pair)?;
    let orbits = n.orbits();
    let closure = one_closure(n, &pair.group)?;
    let hypotheses = vec![
        Check::new(
            format!("pair_locally_{}", property.name()),
            property.holds(&local.flags),
            local.reason.clone().unwrap_or_else(|| format!("local action of order {}", local.induced_order)),
        ),
        Check::new(
            "n_one_closed",
            closure.order() == n.order(),
            format!("|N| = {}, 1-closure order {}", n.order(), closure.order()),
        ),
        Check::new("n_at_least_three_orbits", orbits.len() >= 3, format!("{} orbits", orbits.len())),
    ];

    let mut maximality = if overgroups.is_empty() { Maximality::Unverified } else { Maximality::Verified };
    for m in overgroups {
        let strictly_larger = n.is_subgroup_of(m) && m.order() > n.order();
        if !strictly_larger || !m.is_subgroup_of(&pair.group) || !m.is_normalised_by(&pair.group) {
            continue;
        }
        if m.orbits().len() >= 3 && one_closure(m, &pair.group)?.order() == m.order() {
            maximality = Maximality::Violated;
        }
    }

    let mut conclusions = Vec::new();
    if orbits.len() >= 2 {
        let q = normal_quotient(pair, n)?;
        match &q.pair {
            Some(qp) => {
                let ql = classify_pair_locally(qp)?;
                conclusions.push(Check::new(
                    format!("quotient_locally_{}", property.name()),
                    property.holds(&ql.flags),
                    format!("quotient local action of order {}", ql.induced_order),
                ));
            }
            None => conclusions.push(Check::new(
                format!("quotient_locally_{}", property.name()),
                false,
                "quotient has two vertices",
            )),
        }
        let prof = qp_profile(&q.image_group)?;
        conclusions.push(Check::new(
            "image_qp_or_biqp",
            prof.quasiprimitive || prof.biquasiprimitive,
            format!("quasiprimitive {}, biquasiprimitive {}", prof.quasiprimitive, prof.biquasiprimitive),
        ));
    } else {
        conclusions.push(Check::new(format!("quotient_locally_{}", property.name()), false, "N is transitive"));
    }
    let mut worst = BigUint::one();
    for o in &orbits {
        let s = n.point_stabiliser(o[0]).order();
        if s > worst {
            worst = s;
        }
    }
    conclusions.push(Check::new(
        "n_alpha_trivial",
        worst.is_one(),
        format!("largest |N_α| = {worst}"),
    ));

    let diagnosis = {
        let mut failed: Vec<String> = hypotheses.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
        if maximality == Maximality::Violated {
            failed.push("n_maximal".into());
        }
        if failed.is_empty() {
            None
        } else {
            let mut s = format!("hypothesis not met: {}", failed.join(", "));
            if !worst.is_one() {
                s.push_str(&format!("; N_α ≠ 1 (|N_α| = {worst})"));
            }
            Some(s)
        }
    };
    Ok(PropositionReport {
        property,
        hypotheses,
        maximality,
        conclusions,
        diagnosis,
    })
}
