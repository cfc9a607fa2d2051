//! Biquasiprimitive pairs: splitting into halves and routing to bounds or
//! reductions of the distance-two graph on one half.

use num_bigint::BigUint;
use serde::Serialize;

use super::qp::{find_regular_normal, theorem_mainqp};
use super::util::conjugation_image_order;
use super::{soften, Outcome, PairSummary, Progress, ReductionResult, Tracer};
use crate::bounds::funcs::{
    abelian_pair_bound, factor_count_bound, regular_normal_bound, surjective_projection_bound, transitive_far_half_bound,
};
use crate::bounds::{certify, check_bounded, cmp_bound, BoundCertificate, BoundExpr, CmpResult, EvalConfig};
use crate::error::{Error, Result};
use crate::graph::construct::delta_graph;
use crate::group::action::{action_on_subset, induced_action};
use crate::group::normal::{is_abelian, is_one_closed, is_simple, minimal_normal_subgroups, normal_closure};
use crate::group::profile::qp_profile;
use crate::group::PermGroup;
use crate::pair::{validate_pair, VTPair};
use crate::quotient::normal_quotient;
use crate::report::Check;

#[derive(Clone, Debug, Serialize)]
pub struct BipartiteSplit {
    pub halves: (Vec<u32>, Vec<u32>),
    /// Index-2 subgroup preserving each half.
    #[serde(skip_serializing)]
    pub g_plus: PermGroup,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub g_plus_order: BigUint,
    /// Action of `g_plus` on the first half, on positions in sorted order.
    #[serde(skip_serializing)]
    pub h: PermGroup,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub h_kernel_order: BigUint,
    /// Distance-two graph on the first half with `h`.
    #[serde(skip_serializing)]
    pub delta_pair: VTPair,
    pub delta_summary: PairSummary,
    pub cross_edges_only: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Split {
    /// Four vertices with a regular Klein four-group: nothing to split.
    ShortCircuit { reason: String },
    Halves(Box<BipartiteSplit>),
}

fn is_klein_on_four(g: &PermGroup) -> bool {
    g.degree() == 4 && g.order() == BigUint::from(4u32) && g.generators().iter().all(|x| x.order() <= 2)
}

/// Splits a biquasiprimitive pair along the orbits of an intransitive
/// normal subgroup.
pub fn biqp_split(pair: &VTPair) -> Result<Split> {
    let g = &pair.group;
    let prof = qp_profile(g)?;
    if !prof.biquasiprimitive {
        return Err(Error::precondition(format!(
            "not biquasiprimitive: a normal subgroup has {} orbits",
            prof.max_normal_orbits
        )));
    }
    if is_klein_on_four(g) {
        return Ok(Split::ShortCircuit {
            reason: "four vertices with a regular Klein four-group".into(),
        });
    }
    let mut signatures: Vec<Vec<Vec<u32>>> = Vec::new();
    for (rep, _) in g.conjugacy_classes()? {
        if rep.is_identity() {
            continue;
        }
        let mut orbits = normal_closure(g, &[rep])?.orbits();
        if orbits.len() == 2 {
            orbits.sort();
            signatures.push(orbits);
        }
    }
    signatures.sort();
    signatures.dedup();
    if signatures.len() != 1 {
        return Err(Error::assertion(format!(
            "intransitive normal subgroups give {} different orbit pairs",
            signatures.len()
        )));
    }
    let orbits = signatures.remove(0);
    let (h0, h1) = (orbits[0].clone(), orbits[1].clone());
    let ia = induced_action(g, &orbits)?;
    let g_plus = ia.kernel;
    if g.order() != &g_plus.order() * 2u32 {
        return Err(Error::assertion("stabiliser of the halves does not have index 2"));
    }
    let (h, h_kernel) = action_on_subset(&g_plus, &h0)?;
    let in_h0 = {
        let mut v = vec![false; pair.graph.order()];
        for &x in &h0 {
            v[x as usize] = true;
        }
        v
    };
    let cross = pair.graph.edges().iter().all(|&(u, v)| in_h0[u as usize] != in_h0[v as usize]);
    let dg = delta_graph(&pair.graph, &h0, cross)?;
    let bound = if cross { pair.d * pair.d.saturating_sub(1) } else { pair.d * pair.d };
    let delta_pair = validate_pair(dg.graph, h.clone(), bound)
        .map_err(|d| Error::assertion(format!("distance-two pair is invalid: {d}")))?;
    Ok(Split::Halves(Box::new(BipartiteSplit {
        halves: (h0, h1),
        g_plus_order: g_plus.order(),
        g_plus,
        h,
        h_kernel_order: h_kernel.order(),
        delta_summary: PairSummary::of(&delta_pair),
        delta_pair,
        cross_edges_only: cross,
    })))
}

/// Bound certificate when the stabiliser of a vertex in the first half is
/// transitive on the second half.
pub fn lemma_silly_check(pair: &VTPair, split: &BipartiteSplit) -> Result<Option<BoundCertificate>> {
    let alpha = split.halves.0[0];
    let stab = pair.group.point_stabiliser(alpha);
    let far = &split.halves.1;
    if stab.orbit(far[0]).len() != far.len() {
        return Ok(None);
    }
    Ok(Some(certify(stab.order(), &transitive_far_half_bound(pair.d as u64))))
}

pub fn theorem_mainbiqp(pair: &VTPair) -> Result<ReductionResult> {
    theorem_mainbiqp_inner(pair, None)
}

pub fn theorem_mainbiqp_with_progress(pair: &VTPair, progress: Progress<'_>) -> Result<ReductionResult> {
    theorem_mainbiqp_inner(pair, Some(progress))
}

fn bounded(mut tr: Tracer<'_>, pair: &VTPair, route: &str, name: &str, b: BoundExpr) -> ReductionResult {
    let cert = check_bounded(pair, &b);
    tr.check(name, cert.holds(), format!("{} <= {}", cert.stabiliser_order, cert.bound));
    tr.finish(route, Outcome::Bounded { certificate: cert })
}

fn theorem_mainbiqp_inner(pair: &VTPair, progress: Option<Progress<'_>>) -> Result<ReductionResult> {
    let mut tr = Tracer::new(progress);
    let split = match biqp_split(pair) {
        Ok(Split::Halves(s)) => s,
        Ok(Split::ShortCircuit { reason }) => {
            tr.check("four_vertex_klein", true, reason);
            return Ok(bounded(tr, pair, "short_circuit", "stabiliser_at_most_d_factorial", regular_normal_bound(pair.d as u64)));
        }
        Err(e) => return soften(e, tr, "split"),
    };
    let d = pair.d as u64;
    tr.check("g_plus_index_two", true, format!("|G+| = {}", split.g_plus_order));
    tr.check(
        "delta_pair_valid",
        true,
        format!("valency {} on {} vertices", split.delta_summary.valency, split.delta_summary.vertices),
    );
    if let Some(cert) = lemma_silly_check(pair, &split)? {
        tr.check("stabiliser_transitive_on_far_half", true, format!("|G_α| = {}", cert.stabiliser_order));
        tr.check("stabiliser_at_most_far_half_bound", cert.holds(), format!("{} <= {}", cert.stabiliser_order, cert.bound));
        return Ok(tr.finish("far_half_transitive", Outcome::Bounded { certificate: cert }));
    }
    let h_prof = match qp_profile(&split.h) {
        Ok(p) => p,
        Err(e) => return soften(e, tr, "split"),
    };
    if h_prof.quasiprimitive {
        tr.check("half_action_quasiprimitive", true, format!("|H| = {}", split.h.order()));
        let inner = match theorem_mainqp(&split.delta_pair) {
            Ok(r) => r,
            Err(e) => return soften(e, tr, "delta_quasiprimitive"),
        };
        tr.extend("delta.", &inner.trace);
        let route = format!("delta_quasiprimitive.{}", inner.route);
        return Ok(match inner.outcome {
            Outcome::Bounded { certificate } => bounded(tr, pair, &route, "lifted_bound", certificate.bound),
            Outcome::Unclassified { reason } => tr.unclassified(&route, reason),
            other => tr.finish(&route, other),
        });
    }
    match route_b(pair, &split, d, tr) {
        Ok(r) => Ok(r),
        Err((e, tr)) => soften(e, tr, "transitive_product"),
    }
}

type RouteErr<'a> = (Error, Tracer<'a>);

fn route_b<'a>(pair: &VTPair, split: &BipartiteSplit, d: u64, mut tr: Tracer<'a>) -> std::result::Result<ReductionResult, RouteErr<'a>> {
    macro_rules! tri {
        ($e:expr) => {
            match $e {
                Ok(v) => v,
                Err(e) => return Err((e, tr)),
            }
        };
    }
    let h = &split.h;
    let mins = tri!(minimal_normal_subgroups(h));
    let mut pairs = Vec::new();
    for i in 0..mins.len() {
        for j in i + 1..mins.len() {
            let rs = mins[i].join(&mins[j]);
            if rs.order() == mins[i].order() * mins[j].order() && rs.is_transitive() {
                pairs.push((i, j));
            }
        }
    }
    if pairs.is_empty() {
        return Ok(tr.unclassified("transitive_product", "no two minimal normal subgroups have a transitive product"));
    }
    tr.check(
        "transitive_product_of_minimal_normals",
        true,
        format!("{} of {} minimal normal subgroups, {} pairing(s)", 2, mins.len(), pairs.len()),
    );
    if let Some(m) = tri!(find_regular_normal(&split.delta_pair)) {
        tr.check("half_action_regular_normal", true, format!("order {}", m.order()));
        return Ok(bounded(tr, pair, "regular_normal_on_half", "stabiliser_at_most_abelian_pair_bound", abelian_pair_bound(d)));
    }
    let mut results = Vec::new();
    for &(i, j) in &pairs {
        results.push(tri!(route_b_pair(pair, split, &mins[i], &mins[j], d)));
    }
    if results.len() > 1 {
        let first = &results[0];
        let agree = results.iter().all(|(route, outcome, _)| route == &first.0 && outcome_shape(outcome) == outcome_shape(&first.1));
        tr.check("pairings_agree", agree, format!("{} pairings tried", results.len()));
    }
    let (route, outcome, checks) = results.swap_remove(0);
    tr.extend("", &checks);
    Ok(match outcome {
        Outcome::Unclassified { reason } => tr.unclassified(&route, reason),
        other => tr.finish(&route, other),
    })
}

fn outcome_shape(o: &Outcome) -> (String, Vec<PairSummary>) {
    match o {
        Outcome::Bounded { certificate } => (format!("bounded {}", certificate.bound), vec![]),
        Outcome::ReducedQp { summary, .. } => ("reduced_qp".into(), vec![summary.clone()]),
        Outcome::ReducedBiqp { summary_r, summary_s, .. } => ("reduced_biqp".into(), vec![summary_r.clone(), summary_s.clone()]),
        Outcome::Unclassified { reason } => (format!("unclassified: {reason}"), vec![]),
    }
}

fn route_b_pair(
    pair: &VTPair,
    split: &BipartiteSplit,
    r: &PermGroup,
    s: &PermGroup,
    d: u64,
) -> Result<(String, Outcome, Vec<Check>)> {
    let mut checks = Vec::new();
    let cert_outcome = |b: BoundExpr, name: &str, checks: &mut Vec<Check>| {
        let cert = check_bounded(pair, &b);
        checks.push(Check::new(name, cert.holds(), format!("{} <= {}", cert.stabiliser_order, cert.bound)));
        Outcome::Bounded { certificate: cert }
    };
    if is_abelian(r) || is_abelian(s) {
        checks.push(Check::new("minimal_normal_abelian", true, format!("|R| = {}, |S| = {}", r.order(), s.order())));
        let o = cert_outcome(abelian_pair_bound(d), "stabiliser_at_most_abelian_pair_bound", &mut checks);
        return Ok(("abelian_factor".into(), o, checks));
    }
    let m = r.join(s);
    let m_alpha = m.point_stabiliser(0);
    let fr = minimal_normal_subgroups(r)?;
    let fs = minimal_normal_subgroups(s)?;
    for (side, factors) in [("R", &fr), ("S", &fs)] {
        for (j, t) in factors.iter().enumerate() {
            let img = conjugation_image_order(&m_alpha, t)?;
            if img == t.order() {
                checks.push(Check::new("stabiliser_projection_surjective", true, format!("onto factor {} of {side}", j + 1)));
                let o = cert_outcome(surjective_projection_bound(d), "stabiliser_at_most_projection_bound", &mut checks);
                return Ok(("surjective_projection".into(), o, checks));
            }
        }
    }
    checks.push(Check::new(
        "projections_proper",
        true,
        format!("{} factors in R, {} in S", fr.len(), fs.len()),
    ));
    let deg = m.degree();
    let join = |gs: Vec<&PermGroup>| gs.into_iter().fold(PermGroup::trivial(deg), |a, h| a.join(h));
    let m_r1 = join(fr[1..].iter().chain(std::iter::once(s)).collect());
    let m_s1 = join(std::iter::once(r).chain(fs[1..].iter()).collect());
    let delta = &split.delta_pair;
    let m_pair = validate_pair(delta.graph.clone(), m.clone(), delta.d)
        .map_err(|e| Error::assertion(format!("R x S pair is invalid: {e}")))?;
    checks.push(Check::new("m_r1_one_closed", is_one_closed(&m_r1, &m)?, format!("|M_R1| = {}", m_r1.order())));
    checks.push(Check::new("m_s1_one_closed", is_one_closed(&m_s1, &m)?, format!("|M_S1| = {}", m_s1.order())));
    let qr = normal_quotient(&m_pair, &m_r1)?;
    let qs = normal_quotient(&m_pair, &m_s1)?;
    let (Some(lr), Some(ls)) = (qr.pair.clone(), qs.pair.clone()) else {
        checks.push(Check::new("quotients_have_three_vertices", false, format!("{} and {} blocks", qr.blocks.len(), qs.blocks.len())));
        return Ok(("transitive_product".into(), Outcome::Unclassified { reason: "quotient too small".into() }, checks));
    };
    checks.push(Check::new("lambda_r_simple", is_simple(&qr.image_group)?, format!("order {}", qr.image_order())));
    checks.push(Check::new("lambda_s_simple", is_simple(&qs.image_group)?, format!("order {}", qs.image_order())));
    let (tr_, ts) = (qr.image_stabiliser_order(), qs.image_stabiliser_order());
    let d0 = delta.d as u64;
    let bound = factor_count_bound(d0, &tr_.min(ts));
    let l = fr.len();
    checks.push(Check::new(
        "factor_count_bound",
        cmp_bound(&bound, &BigUint::from(l), &EvalConfig::default()) == CmpResult::LessOrEqual,
        format!("l = {l} <= {bound}"),
    ));
    let outcome = Outcome::ReducedBiqp {
        summary_r: PairSummary::of(&lr),
        summary_s: PairSummary::of(&ls),
        lambda_r: lr,
        lambda_s: ls,
    };
    Ok(("transitive_product".into(), outcome, checks))
}
