//! Constructive stabiliser bound from a normal subgroup with few orbits and
//! small stabilisers.
//!
//! Given `N` normal in `G <= Aut(Γ)`, a connected transversal of the
//! `N`-orbits yields a connection set `S` of `N` whose setwise normaliser in
//! `G` contains `H`, the pointwise stabiliser of the transversal. Hence
//! `|H| <= |S|!` and `|G_β| <= d^(t-1) |H|`.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::expr::{cmp_bound, BoundExpr, CmpResult, EvalConfig};
use super::funcs::{f3, BoundFn};
use crate::error::{Error, Result};
use crate::graph::construct::cayley_digraph;
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::report::{all_pass, Check};

/// Largest `|N|` for which the Cayley digraph on `N` is built.
pub const CAYLEY_LIMIT: u64 = 100_000;

#[derive(Clone, Debug, Serialize)]
pub struct Theorem1Witness {
    /// One vertex per `N`-orbit, in the order they were added.
    pub transversal: Vec<u32>,
    pub t: usize,
    pub d: usize,
    #[serde(skip)]
    pub connection_set: Vec<Permutation>,
    pub connection_set_size: usize,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub f2: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub h_order: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub max_stabiliser_order: BigUint,
    pub bound: BoundExpr,
    /// Weak components of `Cay(N, S)`, when `N` is small enough to build it.
    pub cayley_components: Option<usize>,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub h: PermGroup,
}

impl Theorem1Witness {
    pub fn all_pass(&self) -> bool {
        all_pass(&self.checks)
    }
}

/// Greedy connected transversal: repeatedly adds the least neighbour of the
/// current set lying in an orbit not yet represented.
pub fn connected_transversal(graph: &Graph, orbits: &[Vec<u32>]) -> Result<Vec<u32>> {
    let mut orbit_of = vec![u32::MAX; graph.order()];
    for (i, o) in orbits.iter().enumerate() {
        for &p in o {
            orbit_of[p as usize] = i as u32;
        }
    }
    let mut covered = vec![false; orbits.len()];
    let start = orbits
        .iter()
        .map(|o| o[0])
        .min()
        .ok_or_else(|| Error::invalid("no orbits"))?;
    covered[orbit_of[start as usize] as usize] = true;
    let mut chosen = vec![start];
    while chosen.len() < orbits.len() {
        let next = chosen
            .iter()
            .flat_map(|&b| graph.neighbours(b).iter().copied())
            .filter(|&w| !covered[orbit_of[w as usize] as usize])
            .min()
            .ok_or_else(|| Error::assertion("no neighbour of the transversal reaches a new orbit"))?;
        covered[orbit_of[next as usize] as usize] = true;
        chosen.push(next);
    }
    Ok(chosen)
}

/// Runs the construction. `f2` defaults to the largest `|N_β|` over the
/// transversal; a supplied value must dominate it.
pub fn theorem1_construct(
    graph: &Graph,
    n: &PermGroup,
    g: &PermGroup,
    f2: Option<BigUint>,
) -> Result<Theorem1Witness> {
    if graph.order() != g.degree() || n.degree() != g.degree() {
        return Err(Error::invalid("graph and groups must share the vertex set"));
    }
    if !graph.is_connected() {
        return Err(Error::precondition("graph is not connected"));
    }
    if let Some(s) = g.generators().iter().find(|s| !graph.is_automorphism(s)) {
        return Err(Error::precondition(format!("{s} is not an automorphism")));
    }
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal("N is not normal in G".into()));
    }
    let d = graph.max_valency();
    let orbits = n.orbits();
    let t = orbits.len();
    let transversal = connected_transversal(graph, &orbits)?;
    let mut checks = Vec::new();

    let induced = graph.induced_subgraph(&transversal);
    checks.push(Check::new(
        "transversal_connected",
        induced.is_connected() && transversal.len() == t,
        format!("{} vertices over {t} orbits", transversal.len()),
    ));

    let n_stabs: Vec<PermGroup> = transversal.iter().map(|&b| n.point_stabiliser(b)).collect();
    let max_n_stab = n_stabs.iter().map(|s| s.order()).max().unwrap_or_else(BigUint::one);
    let f2 = match f2 {
        Some(v) if v < max_n_stab => {
            return Err(Error::precondition(format!("f2 = {v} is below |N_β| = {max_n_stab}")))
        }
        Some(v) => v,
        None => max_n_stab,
    };

    let s = connection_set(n, &n_stabs, &transversal, graph)?;
    let s_len = s.len();
    let s_bound = BigUint::from(d) * BigUint::from(t * t) * &f2;
    checks.push(Check::new(
        "connection_set_size",
        BigUint::from(s_len) <= s_bound,
        format!("|S| = {s_len} <= d t^2 f2 = {s_bound}"),
    ));

    let h = g.pointwise_stabiliser(&transversal);
    let h_order = h.order();
    let s_set: HashSet<&Permutation> = s.iter().collect();
    let normalises = h
        .generators()
        .iter()
        .all(|x| s.iter().all(|y| s_set.contains(&y.conjugate_by(x))));
    checks.push(Check::new(
        "h_normalises_connection_set",
        normalises,
        format!("{} generators of H tested", h.generators().len()),
    ));

    let s_fact = BoundExpr::fact(BoundExpr::int(s_len as u64));
    let cfg = EvalConfig::default();
    checks.push(Check::new(
        "h_at_most_s_factorial",
        cmp_bound(&s_fact, &h_order, &cfg) == CmpResult::LessOrEqual,
        format!("|H| = {h_order} <= {s_len}!"),
    ));

    let dt = BigUint::from(d).pow(t.saturating_sub(1) as u32);
    let stab_orders: Vec<BigUint> = transversal.iter().map(|&b| g.point_stabiliser(b).order()).collect();
    let max_stab = stab_orders.iter().max().cloned().unwrap_or_else(BigUint::one);
    checks.push(Check::new(
        "stabiliser_at_most_index_times_h",
        stab_orders.iter().all(|o| *o <= &dt * &h_order),
        format!("max |G_β| = {max_stab} <= d^(t-1) |H| = {}", &dt * &h_order),
    ));

    let bound = f3(&BoundFn::Const(BigUint::from(t)), &BoundFn::Const(f2.clone()), d as u64)?;
    checks.push(Check::new(
        "stabiliser_at_most_f3",
        cmp_bound(&bound, &max_stab, &cfg) == CmpResult::LessOrEqual,
        format!("max |G_β| = {max_stab} <= {bound}"),
    ));

    let cayley_components = match n.order().to_u64() {
        Some(k) if k <= CAYLEY_LIMIT => {
            // The identity lies in S whenever two transversal vertices are
            // adjacent; it would only contribute loops.
            let proper: Vec<Permutation> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
            let cay = cayley_digraph(n, &proper)?;
            Some(cay.graph.components().len())
        }
        _ => None,
    };

    let span = span_of(n.degree(), &s)?;
    let spans_orbits = transversal.iter().zip(&orbits_in_order(&orbits, &transversal)).all(|(&b, o)| {
        let mut orb = span.orbit(b);
        orb.sort_unstable();
        orb == **o
    });
    checks.push(Check::new(
        "span_transitive_on_orbits",
        spans_orbits,
        format!("<S> has order {}", span.order()),
    ));

    Ok(Theorem1Witness {
        transversal,
        t,
        d,
        connection_set_size: s_len,
        connection_set: s,
        f2,
        h_order,
        max_stabiliser_order: max_stab,
        bound,
        cayley_components,
        checks,
        h,
    })
}

/// `{x in N : β_i^x ∈ Γ(β_j) for some i, j}`, sorted.
fn connection_set(
    n: &PermGroup,
    n_stabs: &[PermGroup],
    transversal: &[u32],
    graph: &Graph,
) -> Result<Vec<Permutation>> {
    let mut targets: Vec<u32> = transversal
        .iter()
        .flat_map(|&b| graph.neighbours(b).iter().copied())
        .collect();
    targets.sort_unstable();
    targets.dedup();
    let mut out: HashSet<Permutation> = HashSet::new();
    for (i, &b) in transversal.iter().enumerate() {
        let stab = n_stabs[i].elements()?;
        let reach = n.orbit_transversal(b);
        for (p, u) in reach {
            if targets.binary_search(&p).is_ok() {
                for k in &stab {
                    out.insert(k.compose(&u));
                }
            }
        }
    }
    let mut out: Vec<Permutation> = out.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Subgroup generated by `s`, adding only generators that enlarge it.
fn span_of(degree: usize, s: &[Permutation]) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span = PermGroup::trivial(degree);
    for x in s {
        if !span.contains(x) {
            gens.push(x.clone());
            span = PermGroup::new(degree, gens.clone())?;
        }
    }
    Ok(span)
}

fn orbits_in_order<'a>(orbits: &'a [Vec<u32>], transversal: &[u32]) -> Vec<&'a Vec<u32>> {
    transversal
        .iter()
        .map(|&b| orbits.iter().find(|o| o.binary_search(&b).is_ok()).expect("vertex lies in an orbit"))
        .collect()
}
