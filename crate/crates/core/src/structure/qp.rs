//! Quasiprimitive case analysis and the product-action reduction.

use num_bigint::BigUint;
use serde::Serialize;

use super::util::{block_images, block_stabiliser, conjugation_image_order, factor_normaliser, isomorphic, stabiliser_in_action};
use super::{soften, Outcome, Progress, ReductionResult, Tracer};
use crate::bounds::funcs::{cofactor_regular_bound, factor_count_bound, regular_normal_bound};
use crate::bounds::{check_bounded, cmp_bound, CmpResult, EvalConfig};
use crate::error::{Error, Result};
use crate::group::action::{canonical_partition, induced_action};
use crate::group::ctor::decode_tuple;
use crate::group::normal::{canonical_key, is_one_closed, is_simple, minimal_normal_subgroups, normal_closure, socle, SocleDecomposition};
use crate::group::profile::qp_profile;
use crate::group::{orbits_of, PermGroup};
use crate::pair::{validate_pair, VTPair};
use crate::perm::Permutation;
use crate::quotient::normal_quotient;

/// Subsets of at most this many minimal normal subgroups or socle factors are enumerated.
const SUBSET_LIMIT: usize = 12;

/// Search budget for comparing quotient graphs up to isomorphism.
const ISO_STEPS: u64 = 2_000_000;

fn is_regular(h: &PermGroup, n: usize) -> bool {
    h.order() == BigUint::from(n) && h.is_transitive()
}

fn divides(h: &PermGroup, n: usize) -> bool {
    (BigUint::from(n) % h.order()) == BigUint::from(0u32)
}

fn join_all(degree: usize, groups: &[&PermGroup]) -> PermGroup {
    groups.iter().fold(PermGroup::trivial(degree), |acc, h| acc.join(h))
}

fn sorted_canonically(mut groups: Vec<PermGroup>) -> Vec<PermGroup> {
    let mut keyed: Vec<_> = groups.drain(..).map(|h| (canonical_key(&h), h)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, h)| h).collect()
}

/// A normal subgroup of `G` acting regularly on the vertices, searched
/// smallest first among products of minimal normal subgroups, normal
/// closures of single classes and joins of two such closures.
pub fn find_regular_normal(pair: &VTPair) -> Result<Option<PermGroup>> {
    let g = &pair.group;
    let n = pair.graph.order();
    let deg = g.degree();
    let mins = minimal_normal_subgroups(g)?;
    let mut candidates: Vec<PermGroup> = Vec::new();
    if mins.len() <= SUBSET_LIMIT {
        for mask in 1u32..(1 << mins.len()) {
            let chosen: Vec<&PermGroup> = (0..mins.len()).filter(|i| mask >> i & 1 == 1).map(|i| &mins[i]).collect();
            let h = join_all(deg, &chosen);
            if divides(&h, n) {
                candidates.push(h);
            }
        }
    } else {
        candidates.extend(mins.iter().filter(|h| divides(h, n)).cloned());
    }
    let mut closures = Vec::new();
    for (rep, _) in g.conjugacy_classes()? {
        if rep.is_identity() {
            continue;
        }
        let h = normal_closure(g, &[rep])?;
        if divides(&h, n) {
            closures.push(h);
        }
    }
    candidates.extend(closures.iter().cloned());
    if let Some(h) = sorted_canonically(candidates).into_iter().find(|h| is_regular(h, n)) {
        return Ok(Some(h));
    }
    let mut joins = Vec::new();
    for (i, a) in closures.iter().enumerate() {
        for b in &closures[i + 1..] {
            let h = a.join(b);
            if is_regular(&h, n) {
                joins.push(h);
            }
        }
    }
    Ok(sorted_canonically(joins).into_iter().next())
}

/// Socle data for the product-action case.
#[derive(Clone, Debug, Serialize)]
pub struct PaData {
    #[serde(skip_serializing)]
    pub socle: SocleDecomposition,
    pub l: usize,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub factor_order: BigUint,
    /// Common order of the projections of `N_α` onto the factors.
    #[serde(serialize_with = "crate::report::ser_big")]
    pub projection_order: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub n_alpha_order: BigUint,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum QpCase {
    RegularNormal {
        #[serde(skip_serializing)]
        witness: PermGroup,
        #[serde(serialize_with = "crate::report::ser_big")]
        order: BigUint,
    },
    SocleCofactorRegular {
        #[serde(skip_serializing)]
        witness: PermGroup,
        /// Indices of the socle factors whose product is regular.
        factors: Vec<usize>,
        l: usize,
    },
    AlmostSimple {
        #[serde(skip_serializing)]
        socle: PermGroup,
        #[serde(serialize_with = "crate::report::ser_big")]
        socle_order: BigUint,
    },
    ProductAction(PaData),
    Unclassified {
        reason: String,
    },
}

impl QpCase {
    pub fn name(&self) -> &'static str {
        match self {
            QpCase::RegularNormal { .. } => "RegularNormal",
            QpCase::SocleCofactorRegular { .. } => "SocleCofactorRegular",
            QpCase::AlmostSimple { .. } => "AlmostSimple",
            QpCase::ProductAction(_) => "ProductAction",
            QpCase::Unclassified { .. } => "Unclassified",
        }
    }
}

/// Routes a pair into one of the quasiprimitive cases. A regular normal
/// subgroup is looked for first, so pairs that are not quasiprimitive but
/// admit one are still classified.
pub fn classify_qp_case(pair: &VTPair) -> Result<QpCase> {
    if let Some(w) = find_regular_normal(pair)? {
        let order = w.order();
        return Ok(QpCase::RegularNormal { witness: w, order });
    }
    let g = &pair.group;
    if !qp_profile(g)?.quasiprimitive {
        return Err(Error::precondition("group is not quasiprimitive"));
    }
    let soc = match socle(g) {
        Ok(s) => s,
        Err(e @ Error::Resource { .. }) => return Err(e),
        Err(e) => return Ok(QpCase::Unclassified { reason: e.to_string() }),
    };
    if soc.abelian {
        return Ok(QpCase::Unclassified {
            reason: "abelian socle without a regular normal subgroup".into(),
        });
    }
    let l = soc.l();
    if l == 1 {
        let socle_order = soc.socle.order();
        return Ok(QpCase::AlmostSimple { socle: soc.socle, socle_order });
    }
    let n = pair.graph.order();
    if l <= SUBSET_LIMIT {
        let mut masks: Vec<u32> = (1u32..(1 << l) - 1).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        for mask in masks {
            let idx: Vec<usize> = (0..l).filter(|i| mask >> i & 1 == 1).collect();
            let chosen: Vec<&PermGroup> = idx.iter().map(|&i| &soc.factors[i]).collect();
            let h = join_all(g.degree(), &chosen);
            if is_regular(&h, n) {
                return Ok(QpCase::SocleCofactorRegular { witness: h, factors: idx, l });
            }
        }
    }
    let n_alpha = soc.socle.point_stabiliser(0);
    let projections: Vec<BigUint> = soc
        .factors
        .iter()
        .map(|t| conjugation_image_order(&n_alpha, t))
        .collect::<Result<_>>()?;
    let p = projections[0].clone();
    let one = BigUint::from(1u32);
    if projections.iter().any(|q| *q != p) || p == one || p == soc.factor_order {
        return Ok(QpCase::Unclassified {
            reason: format!("projections of the socle stabiliser have orders {projections:?}"),
        });
    }
    Ok(QpCase::ProductAction(PaData {
        l,
        factor_order: soc.factor_order.clone(),
        projection_order: p,
        n_alpha_order: n_alpha.order(),
        socle: soc,
    }))
}

/// Quotient of a product-action pair by a co-factor of its socle.
pub fn pa_reduce(pair: &VTPair) -> Result<ReductionResult> {
    let case = classify_qp_case(pair)?;
    let QpCase::ProductAction(data) = case else {
        return Err(Error::precondition(format!("not ProductAction: {}", case.name())));
    };
    pa_reduce_with(pair, &data, Tracer::new(None))
}

fn pa_reduce_with(pair: &VTPair, data: &PaData, mut tr: Tracer<'_>) -> Result<ReductionResult> {
    const ROUTE: &str = "product_action";
    let soc = &data.socle;
    let l = soc.l();
    let deg = pair.group.degree();
    let n_pair = validate_pair(pair.graph.clone(), soc.socle.clone(), pair.d)
        .map_err(|d| Error::assertion(format!("socle pair is invalid: {d}")))?;
    let mut quotients = Vec::with_capacity(l);
    for i in 0..l {
        let others: Vec<&PermGroup> = (0..l).filter(|&j| j != i).map(|j| &soc.factors[j]).collect();
        let m_i = join_all(deg, &others);
        tr.check(format!("m{}_one_closed", i + 1), is_one_closed(&m_i, &soc.socle)?, format!("|M_{}| = {}", i + 1, m_i.order()));
        quotients.push(normal_quotient(&n_pair, &m_i)?);
    }
    let q1 = &quotients[0];
    let Some(lambda) = q1.pair.clone() else {
        tr.check("quotient_has_three_vertices", false, format!("{} blocks", q1.blocks.len()));
        return Ok(tr.finish(ROUTE, Outcome::Unclassified { reason: "quotient too small".into() }));
    };
    let image = &q1.image_group;
    tr.check("image_simple", is_simple(image)?, format!("|N/M_1| = {}", image.order()));
    tr.check("image_transitive", image.is_transitive(), format!("{} blocks", q1.blocks.len()));
    let t_delta = q1.image_stabiliser_order();
    tr.check(
        "block_stabiliser_is_projection",
        t_delta == data.projection_order,
        format!("|T_δ| = {t_delta}, projection order {}", data.projection_order),
    );
    let bound = factor_count_bound(pair.d as u64, &t_delta);
    tr.check(
        "factor_count_bound",
        cmp_bound(&bound, &BigUint::from(l), &EvalConfig::default()) == CmpResult::LessOrEqual,
        format!("l = {l} <= {bound}"),
    );
    let n_alpha = &data.n_alpha_order;
    tr.check(
        "stabiliser_sandwich",
        &t_delta <= n_alpha && *n_alpha <= t_delta.pow(l as u32),
        format!("{t_delta} <= |N_α| = {n_alpha} <= {t_delta}^{l}"),
    );
    for (i, q) in quotients.iter().enumerate().skip(1) {
        let same = q.quotient_graph.edges() == q1.quotient_graph.edges();
        let iso = same || isomorphic(&q.quotient_graph, &q1.quotient_graph, ISO_STEPS) == Some(true);
        tr.check(
            format!("quotient_m{}_matches_m1", i + 1),
            iso,
            if same { "identical after block sorting" } else { "isomorphic" },
        );
    }
    Ok(tr.finish(ROUTE, Outcome::reduced_qp(lambda)))
}

/// Routes a quasiprimitive pair to a bound or a reduction.
pub fn theorem_mainqp(pair: &VTPair) -> Result<ReductionResult> {
    theorem_mainqp_inner(pair, None)
}

pub fn theorem_mainqp_with_progress(pair: &VTPair, progress: Progress<'_>) -> Result<ReductionResult> {
    theorem_mainqp_inner(pair, Some(progress))
}

fn theorem_mainqp_inner(pair: &VTPair, progress: Option<Progress<'_>>) -> Result<ReductionResult> {
    let mut tr = Tracer::new(progress);
    let case = match classify_qp_case(pair) {
        Ok(c) => c,
        Err(e) => return soften(e, tr, "classify"),
    };
    let d = pair.d as u64;
    match case {
        QpCase::RegularNormal { witness, order } => {
            tr.check("regular_normal_subgroup", witness.is_normal_in(&pair.group), format!("order {order}"));
            let cert = check_bounded(pair, &regular_normal_bound(d));
            tr.check("stabiliser_at_most_d_factorial", cert.holds(), format!("{} <= {}", cert.stabiliser_order, cert.bound));
            Ok(tr.finish("regular_normal", Outcome::Bounded { certificate: cert }))
        }
        QpCase::SocleCofactorRegular { witness, factors, l } => {
            tr.check(
                "cofactor_product_regular",
                is_regular(&witness, pair.graph.order()),
                format!("{} of {l} factors", factors.len()),
            );
            let cert = check_bounded(pair, &cofactor_regular_bound(d));
            tr.check("stabiliser_at_most_cofactor_bound", cert.holds(), format!("{} <= {}", cert.stabiliser_order, cert.bound));
            Ok(tr.finish("socle_cofactor_regular", Outcome::Bounded { certificate: cert }))
        }
        QpCase::AlmostSimple { socle, socle_order } => {
            tr.check("socle_simple", is_simple(&socle)?, format!("|T| = {socle_order}"));
            tr.check("socle_transitive", socle.is_transitive(), "");
            match validate_pair(pair.graph.clone(), socle, pair.d) {
                Ok(lambda) => Ok(tr.finish("almost_simple", Outcome::reduced_qp(lambda))),
                Err(diag) => {
                    tr.check("socle_pair_valid", false, diag.to_string());
                    Ok(tr.finish("almost_simple", Outcome::Unclassified { reason: diag.to_string() }))
                }
            }
        }
        QpCase::ProductAction(data) => {
            tr.check("product_action", true, format!("l = {}, |T| = {}", data.l, data.factor_order));
            match pa_reduce_with(pair, &data, Tracer::new(None)) {
                Ok(inner) => {
                    tr.extend("", &inner.trace);
                    Ok(tr.finish(&inner.route, inner.outcome))
                }
                Err(e) => soften(e, tr, "product_action"),
            }
        }
        QpCase::Unclassified { reason } => Ok(tr.unclassified("unclassified", reason)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NrOrbitsReport {
    pub block: u32,
    pub block_stabiliser_transitive: bool,
    pub quotient_neighbours: usize,
    pub orbit_count: usize,
    pub d: usize,
    pub holds: bool,
    pub diagnosis: Option<String>,
}

/// Counts the orbits of the block stabiliser `N_σ` on the quotient
/// neighbours of `σ` and compares with `d`.
pub fn verify_nrorbits(pair: &VTPair, blocks: &[Vec<u32>], n: &PermGroup) -> Result<NrOrbitsReport> {
    let (blocks, block_of) = canonical_partition(pair.graph.order(), blocks)?;
    block_images(&pair.group, &blocks, &block_of)?;
    if !n.is_subgroup_of(&pair.group) || !n.is_normalised_by(&pair.group) {
        return Err(Error::NotNormal("N is not normal in G".into()));
    }
    let sigma = 0u32;
    let n_sigma = block_stabiliser(n, &blocks, &block_of, sigma)?;
    let mut orbit = n_sigma.orbit(blocks[0][0]);
    orbit.sort_unstable();
    let transitive = orbit == blocks[0];
    let mut nbrs: Vec<u32> = blocks[0]
        .iter()
        .flat_map(|&v| pair.graph.neighbours(v).iter().map(|&w| block_of[w as usize]))
        .filter(|&b| b != sigma)
        .collect();
    nbrs.sort_unstable();
    nbrs.dedup();
    let on_blocks = block_images(&n_sigma, &blocks, &block_of)?;
    let orbits = orbits_of(blocks.len(), &on_blocks);
    let orbit_count = orbits.iter().filter(|o| nbrs.binary_search(&o[0]).is_ok()).count();
    let d = pair.d;
    let diagnosis = (!transitive).then(|| "hypothesis not met: N_σ is intransitive on σ".to_string());
    Ok(NrOrbitsReport {
        block: sigma,
        block_stabiliser_transitive: transitive,
        quotient_neighbours: nbrs.len(),
        orbit_count,
        d,
        holds: !transitive || orbit_count <= d,
        diagnosis,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ProjectionReport {
    pub factor: usize,
    pub l: usize,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub vertex_projection_order: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub block_projection_order: BigUint,
    #[serde(serialize_with = "crate::report::ser_big")]
    pub block_action_stabiliser_order: BigUint,
    pub holds: bool,
}

/// Compares the projections onto the factor `T_i` of the normaliser of `T_i`
/// intersected with a vertex stabiliser and with the stabiliser of the
/// vertex's block, and the stabiliser of that block in the action on blocks.
pub fn verify_lemma_proj(pair: &VTPair, i: usize) -> Result<ProjectionReport> {
    let g = &pair.group;
    let soc = socle(g)?;
    if soc.abelian {
        return Err(Error::precondition("socle is abelian"));
    }
    let l = soc.l();
    if i >= l {
        return Err(Error::invalid(format!("factor {i} out of range, l = {l}")));
    }
    let t_i = &soc.factors[i];
    let g_i = factor_normaliser(g, &soc.factors, i)?;
    let others: Vec<&PermGroup> = (0..l).filter(|&j| j != i).map(|j| &soc.factors[j]).collect();
    let m_i = join_all(g.degree(), &others);
    let (blocks, block_of) = canonical_partition(g.degree(), &m_i.orbits())?;
    let sigma = block_of[0];
    let vertex = conjugation_image_order(&g_i.point_stabiliser(0), t_i)?;
    let g_i_sigma = block_stabiliser(&g_i, &blocks, &block_of, sigma)?;
    let block = conjugation_image_order(&g_i_sigma, t_i)?;
    let action = induced_action(&g_i, &blocks)?;
    let h_delta = action.image.point_stabiliser(sigma).order();
    Ok(ProjectionReport {
        factor: i,
        l,
        holds: vertex == block && block == h_delta,
        vertex_projection_order: vertex,
        block_projection_order: block,
        block_action_stabiliser_order: h_delta,
    })
}

/// Component `j` of a group preserving the product structure on `m^l`
/// tuples (first coordinate most significant): the group induced on
/// coordinate `j` by the stabiliser of `j` in the action on coordinates.
pub fn wreath_component(g: &PermGroup, m: usize, l: usize, j: usize) -> Result<PermGroup> {
    let size = (m as u64).checked_pow(l as u32).filter(|&s| s == g.degree() as u64);
    if size.is_none() || j >= l || m < 2 {
        return Err(Error::invalid(format!("degree {} is not {m}^{l} or j = {j} out of range", g.degree())));
    }
    let tuples: Vec<Vec<u32>> = (0..g.degree() as u32).map(|p| decode_tuple(p, m as u32, l)).collect();
    let mut coord_images = Vec::new();
    for s in g.generators() {
        let mut img = Vec::with_capacity(l);
        for k in 0..l {
            let target = (0..l).find(|&k2| {
                let mut map = vec![u32::MAX; m];
                tuples.iter().enumerate().all(|(p, t)| {
                    let v = tuples[s.apply(p as u32) as usize][k2];
                    let slot = &mut map[t[k] as usize];
                    if *slot == u32::MAX {
                        *slot = v;
                    }
                    *slot == v
                })
            });
            img.push(target.ok_or_else(|| Error::NotInvariant(format!("{s} does not preserve the product structure")))? as u32);
        }
        coord_images.push(Permutation::from_images(img).map_err(|_| Error::NotInvariant("coordinates are not permuted".into()))?);
    }
    let g_j = stabiliser_in_action(g, l, &coord_images, j as u32)?;
    let mut blocks = vec![Vec::new(); m];
    for (p, t) in tuples.iter().enumerate() {
        blocks[t[j] as usize].push(p as u32);
    }
    Ok(induced_action(&g_j, &blocks)?.image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::ctor;

    #[test]
    fn regular_normal_examples() {
        let q3 = catalog::hypercube(3).unwrap();
        let w = find_regular_normal(&q3.pair).unwrap().unwrap();
        assert!(w.same_group(q3.aux("N").unwrap()));
        let q4 = catalog::hypercube(4).unwrap();
        let w = find_regular_normal(&q4.pair).unwrap().unwrap();
        assert!(w.same_group(q4.aux("N").unwrap()));
        assert!(find_regular_normal(&catalog::petersen_sym5().unwrap().pair).unwrap().is_none());
        let c4 = catalog::c4_klein().unwrap().pair;
        assert!(find_regular_normal(&c4).unwrap().unwrap().same_group(&c4.group));
    }

    #[test]
    fn cases() {
        assert_eq!(classify_qp_case(&catalog::hypercube(3).unwrap().pair).unwrap().name(), "RegularNormal");
        assert_eq!(classify_qp_case(&catalog::petersen_alt5().unwrap().pair).unwrap().name(), "AlmostSimple");
        match classify_qp_case(&catalog::hamming(2, 5).unwrap().pair).unwrap() {
            QpCase::ProductAction(d) => {
                assert_eq!(d.l, 2);
                assert_eq!(d.factor_order, BigUint::from(60u32));
                assert_eq!(d.projection_order, BigUint::from(12u32));
            }
            other => panic!("{}", other.name()),
        }
    }

    #[test]
    fn hamming_reduces_to_k5() {
        let p = catalog::hamming(2, 5).unwrap().pair;
        let r = theorem_mainqp(&p).unwrap();
        assert!(r.trace.iter().all(|c| c.pass), "{:?}", r.trace);
        match r.outcome {
            Outcome::ReducedQp { lambda, summary } => {
                assert_eq!(summary.vertices, 5);
                assert_eq!(summary.valency, 4);
                assert_eq!(summary.group_order, BigUint::from(60u32));
                assert_eq!(summary.stabiliser_order, BigUint::from(12u32));
                assert_eq!(lambda.graph.edge_count(), 10);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pa_uniqueness_across_groups() {
        let a = pa_reduce(&catalog::hamming(2, 5).unwrap().pair).unwrap();
        let b = pa_reduce(&catalog::hamming_alt().unwrap().pair).unwrap();
        let edges = |r: &ReductionResult| match &r.outcome {
            Outcome::ReducedQp { lambda, .. } => lambda.graph.edges(),
            _ => panic!("not reduced"),
        };
        assert_eq!(edges(&a), edges(&b));
        assert!(matches!(pa_reduce(&catalog::petersen_alt5().unwrap().pair), Err(Error::Precondition(_))));
    }

    #[test]
    fn hypercube_is_bounded_by_d_factorial() {
        let r = theorem_mainqp(&catalog::hypercube(3).unwrap().pair).unwrap();
        match r.outcome {
            Outcome::Bounded { certificate } => {
                assert_eq!(certificate.stabiliser_order, BigUint::from(6u32));
                assert!(certificate.holds());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn almost_simple_is_identity_reduction() {
        let p = catalog::petersen_alt5().unwrap().pair;
        let r = theorem_mainqp(&p).unwrap();
        match r.outcome {
            Outcome::ReducedQp { lambda, .. } => assert_eq!(lambda.graph.edges(), p.graph.edges()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nrorbits() {
        // Rows are not invariant under the coordinate swap, so the direct product is used.
        let h = catalog::hamming_direct().unwrap();
        let rows: Vec<Vec<u32>> = (0..5).map(|x| (0..5).map(|y| 5 * x + y).collect()).collect();
        let soc = socle(&h.pair.group).unwrap().socle;
        let r = verify_nrorbits(&h.pair, &rows, &soc).unwrap();
        assert!(r.block_stabiliser_transitive && r.holds);
        assert_eq!((r.quotient_neighbours, r.orbit_count), (4, 1));

        let e = catalog::ex1(8).unwrap();
        let fibres: Vec<Vec<u32>> = (0..8).map(|x| vec![2 * x, 2 * x + 1]).collect();
        let r = verify_nrorbits(&e.pair, &fibres, e.aux("base_rotation").unwrap()).unwrap();
        assert!(r.block_stabiliser_transitive && r.holds);
        assert_eq!(r.orbit_count, 2);

        let p = catalog::petersen_sym5().unwrap().pair;
        let singles: Vec<Vec<u32>> = (0..10).map(|v| vec![v]).collect();
        let r = verify_nrorbits(&p, &singles, &p.group).unwrap();
        assert_eq!(r.orbit_count, 1);
    }

    #[test]
    fn lemma_projections_on_hamming() {
        let p = catalog::hamming(2, 5).unwrap().pair;
        for i in 0..2 {
            let r = verify_lemma_proj(&p, i).unwrap();
            assert!(r.holds, "{r:?}");
            assert_eq!(r.vertex_projection_order, BigUint::from(24u32));
        }
        let r = verify_lemma_proj(&catalog::petersen_alt5().unwrap().pair, 0).unwrap();
        assert!(r.holds && r.l == 1);
    }

    #[test]
    fn components() {
        let w = ctor::wreath_product_action(&ctor::symmetric(5), &ctor::symmetric(2));
        assert_eq!(wreath_component(&w, 5, 2, 0).unwrap().order(), BigUint::from(120u32));
        let d = ctor::direct_product_pairs(&ctor::cyclic(5), &ctor::dihedral(5));
        assert_eq!(wreath_component(&d, 5, 2, 1).unwrap().order(), BigUint::from(10u32));
        let soc = socle(&w).unwrap().socle;
        assert_eq!(wreath_component(&soc, 5, 2, 0).unwrap().order(), BigUint::from(60u32));
        let bad = PermGroup::new(25, vec![Permutation::parse_cycles(25, "(0,1)").unwrap()]).unwrap();
        assert!(matches!(wreath_component(&bad, 5, 2, 0), Err(Error::NotInvariant(_))));
    }
}
