//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use vtsa::bounds::expr::{cmp_bound, CmpResult, EvalConfig};
use vtsa::bounds::funcs::{cofactor_regular_bound, dprime, f_hat, f_tilde, BoundFn};
use vtsa::bounds::lemma::{lemma_aux_check, LemmaInstance, LemmaLimits, Tuple};
use vtsa::bounds::theorem1::theorem1_construct;
use vtsa::bounds::BoundExpr;
use vtsa::catalog::{self, Built};
use vtsa::group::normal::{minimal_normal_subgroups, socle};
use vtsa::group::profile::{primitivity_profile, qp_profile, qp_profile_transported};
use vtsa::group::ctor;
use vtsa::local::local_action;
use vtsa::quotient::normal_quotient;
use vtsa::structure::{find_regular_normal, theorem_mainbiqp, theorem_mainqp, Outcome};
use vtsa::{validate_pair, PermGroup, Permutation};

use common::{brute_profile, eval_capped, factorial_at_least, product_set_covers, Table};

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |a, k| a * k)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn is_cycle(g: &vtsa::Graph) -> bool {
    g.order() >= 3 && g.valency() == Some(2) && g.is_connected()
}

fn is_complete(g: &vtsa::Graph) -> bool {
    g.valency() == Some(g.order() - 1)
}

fn ac1_example_one() -> Verdict {
    let b = catalog::ex1(8).map_err(err)?;
    let p = &b.pair;
    let base = b.aux("N").map_err(err)?;
    ensure!(p.graph.order() == 16, "{} vertices", p.graph.order());
    let nxy = base.point_stabiliser(0).order();
    ensure!(nxy == big(128), "|N_(x,y)| = {nxy}");
    let q = normal_quotient(p, base).map_err(err)?;
    ensure!(is_cycle(&q.quotient_graph) && q.quotient_graph.order() == 8, "quotient is not an 8-cycle");
    ensure!(q.image_order() == big(16), "image order {}", q.image_order());
    ensure!(q.image_stabiliser_order() == big(2), "block stabiliser {}", q.image_stabiliser_order());
    Ok(format!("16 vertices, |N_(x,y)| = {nxy}, quotient C_8, image 16, block stabiliser 2"))
}

fn ac2_hypercubes() -> Verdict {
    let mut parts = Vec::new();
    for k in [3u64, 4] {
        let b = catalog::hypercube(k as usize).map_err(err)?;
        let p = &b.pair;
        let witness = find_regular_normal(p).map_err(err)?.ok_or("no regular normal subgroup")?;
        ensure!(witness.same_group(b.aux("N").map_err(err)?), "Q_{k}: witness is not the translation group");
        let r = theorem_mainqp(p).map_err(err)?;
        let Outcome::Bounded { certificate } = &r.outcome else {
            return Err(format!("Q_{k}: outcome {}", r.outcome.kind()));
        };
        let stab = p.group.point_stabiliser(0).order();
        ensure!(certificate.stabiliser_order == stab, "certificate order mismatch");
        ensure!(stab <= factorial(k), "Q_{k}: {stab} > {k}!");
        ensure!(certificate.holds(), "Q_{k}: certificate does not hold");
        if k == 3 {
            ensure!(stab == big(6), "Q_3: stabiliser {stab}, expected equality with 3! = 6");
        }
        parts.push(format!("Q_{k}: {stab} <= {}", factorial(k)));
    }
    Ok(parts.join(", "))
}

fn theorem1_instances() -> Result<Vec<(String, Built, PermGroup)>, String> {
    let mut out = Vec::new();
    for n in 3..=8 {
        let b = catalog::ex1(n).map_err(err)?;
        let base = b.aux("N").map_err(err)?.clone();
        out.push((format!("ex1(n={n}) base"), b, base));
    }
    for k in [3, 4] {
        let b = catalog::hypercube(k).map_err(err)?;
        let n = b.aux("N").map_err(err)?.clone();
        out.push((format!("Q_{k} translations"), b, n));
    }
    let b = catalog::hamming_direct().map_err(err)?;
    let n = b.aux("N").map_err(err)?.clone();
    out.push(("hamming 1 x Sym(5)".into(), b, n));
    let b = catalog::petersen_sym5().map_err(err)?;
    let trivial = PermGroup::trivial(10);
    out.push(("petersen trivial".into(), b, trivial));
    for b in [catalog::double_petersen(), catalog::k33(), catalog::biqp_product()] {
        let b = b.map_err(err)?;
        let mins = minimal_normal_subgroups(&b.pair.group).map_err(err)?;
        let n = mins.into_iter().next().ok_or("no minimal normal subgroup")?;
        out.push((format!("{} minimal normal", b.name), b, n));
    }
    Ok(out)
}

fn ac3_theorem_one() -> Verdict {
    let instances = theorem1_instances()?;
    ensure!(instances.len() >= 10, "only {} instances", instances.len());
    for (label, b, n) in &instances {
        let p = &b.pair;
        let w = theorem1_construct(&p.graph, n, &p.group, None).map_err(|e| format!("{label}: {e}"))?;
        let orbits = n.orbits();
        let t = orbits.len();
        ensure!(w.t == t && w.transversal.len() == t, "{label}: transversal size");
        let mut hit = vec![false; t];
        for &v in &w.transversal {
            let i = orbits.iter().position(|o| o.contains(&v)).unwrap();
            ensure!(!hit[i], "{label}: two transversal vertices in one orbit");
            hit[i] = true;
        }
        ensure!(p.graph.induced_subgraph(&w.transversal).is_connected(), "{label}: transversal not connected");
        let f2 = w.transversal.iter().map(|&v| n.point_stabiliser(v).order()).max().unwrap();
        ensure!(w.f2 == f2, "{label}: f2 = {} but max |N_b| = {f2}", w.f2);
        let d = p.graph.max_valency() as u64;
        let s_cap = big(d * (t * t) as u64) * &f2;
        ensure!(big(w.connection_set_size as u64) <= s_cap, "{label}: |S| = {} > {s_cap}", w.connection_set_size);
        let h = p.group.pointwise_stabiliser(&w.transversal).order();
        ensure!(w.h_order == h, "{label}: |H| mismatch");
        ensure!(factorial_at_least(w.connection_set_size as u64, &h), "{label}: |H| = {h} > |S|!");
        let stab = p.group.point_stabiliser(0).order();
        let dt = big(d).pow(t as u32 - 1);
        let need = (&stab + &dt - 1u32) / &dt;
        let x = s_cap.to_u64().ok_or("d t^2 f2 too large")?;
        ensure!(factorial_at_least(x, &need), "{label}: |G_a| = {stab} exceeds d^(t-1) (d t^2 f2)!");
        ensure!(w.all_pass(), "{label}: a witness check failed");
    }
    Ok(format!("{} instances, all four inequalities exact", instances.len()))
}

fn ac4_product_action() -> Verdict {
    let b = catalog::hamming(2, 5).map_err(err)?;
    let p = &b.pair;
    let r = theorem_mainqp(p).map_err(err)?;
    let Outcome::ReducedQp { lambda, summary } = &r.outcome else {
        return Err(format!("outcome {}", r.outcome.kind()));
    };
    ensure!(lambda.graph.order() == 5 && is_complete(&lambda.graph), "quotient is not K_5");
    ensure!(summary.group_order == big(60), "image order {}", summary.group_order);
    ensure!(summary.stabiliser_order == big(12), "stabiliser {}", summary.stabiliser_order);
    for name in ["quotient_m2_matches_m1", "stabiliser_sandwich"] {
        ensure!(r.trace.iter().any(|c| c.name == name && c.pass), "trace lacks passing {name}");
    }

    let soc = socle(&p.group).map_err(err)?;
    ensure!(soc.l() == 2, "socle has {} factors", soc.l());
    let np = validate_pair(p.graph.clone(), soc.socle.clone(), p.d).map_err(err)?;
    let q1 = normal_quotient(&np, &soc.factors[1]).map_err(err)?;
    let q2 = normal_quotient(&np, &soc.factors[0]).map_err(err)?;
    let mut e1 = q1.quotient_graph.edges();
    let mut e2 = q2.quotient_graph.edges();
    e1.sort_unstable();
    e2.sort_unstable();
    ensure!(e1 == e2, "quotients by the two cofactors differ");
    let t_delta = q1.image_stabiliser_order();
    let n_alpha = soc.socle.point_stabiliser(0).order();
    ensure!(t_delta <= n_alpha && n_alpha <= &t_delta * &t_delta, "sandwich {t_delta} <= {n_alpha} <= {t_delta}^2 fails");
    Ok(format!("K_5, |T| = 60, stabiliser 12, sandwich {t_delta} <= {n_alpha} <= {}", &t_delta * &t_delta))
}

fn ac5_example_four() -> Verdict {
    let ex = catalog::ex4_lambda(catalog::DEFAULT_MAX_POINTS).map_err(err)?;
    let p = &ex.built.pair;
    ensure!(ex.k.order() == big(36), "|K| = {}", ex.k.order());
    ensure!(p.graph.order() == 100_800, "{} vertices", p.graph.order());
    ensure!(p.graph.valency() == Some(9), "valency {:?}", p.graph.valency());
    ensure!(p.graph.is_connected(), "not connected");
    let local = local_action(p, 0).map_err(err)?;
    ensure!(local.induced_order == big(36), "local order {}", local.induced_order);
    ensure!(local.kernel_order == big(1), "kernel order {}", local.kernel_order);
    ensure!(!primitivity_profile(&local.induced_group).map_err(err)?.primitive, "local action primitive");
    let lp = qp_profile(&local.induced_group).map_err(err)?;
    ensure!(!lp.quasiprimitive, "local action quasiprimitive");
    ensure!(!lp.semiprimitive, "local action semiprimitive");
    let space = &ex.space;
    let top = qp_profile_transported(&ex.h, space.len(), &|x| space.act(x)).map_err(err)?;
    ensure!(top.quasiprimitive, "Sym(10) not quasiprimitive on cosets");
    let alt_gens: Vec<Permutation> = ctor::alternating(10).generators().iter().map(|x| space.act(x)).collect();
    let alt = PermGroup::new(space.len(), alt_gens).map_err(err)?;
    ensure!(alt.is_transitive(), "Alt(10) intransitive on cosets");
    Ok("100800 vertices, valency 9, local order 36 faithful, imprimitive, not qp, not semiprimitive; Sym(10) qp".into())
}

fn ac6_biquasiprimitive() -> Verdict {
    let c4 = catalog::c4_klein().map_err(err)?;
    ensure!(qp_profile(&c4.pair.group).map_err(err)?.biquasiprimitive, "C_4 pair not biquasiprimitive");
    let r = theorem_mainbiqp(&c4.pair).map_err(err)?;
    ensure!(r.route == "short_circuit", "C_4 route {}", r.route);
    let k = catalog::k33().map_err(err)?;
    ensure!(qp_profile(&k.pair.group).map_err(err)?.biquasiprimitive, "K_3,3 pair not biquasiprimitive");
    let r = theorem_mainbiqp(&k.pair).map_err(err)?;
    ensure!(r.route == "far_half_transitive", "K_3,3 route {}", r.route);
    let Outcome::Bounded { certificate } = &r.outcome else {
        return Err(format!("K_3,3 outcome {}", r.outcome.kind()));
    };
    ensure!(certificate.stabiliser_order == big(12), "stabiliser {}", certificate.stabiliser_order);
    ensure!(certificate.bound.exact_value() == Some(big(12)), "bound {}", certificate.bound);
    ensure!(certificate.holds(), "certificate does not hold");
    Ok("C_4 short circuit; K_3,3 certificate 12 <= 3! 2! = 12".into())
}

fn corpus() -> Vec<(String, PermGroup)> {
    let mut out: Vec<(String, PermGroup)> = Vec::new();
    for n in 2..=13 {
        out.push((format!("C{n}"), ctor::cyclic(n)));
    }
    for n in 3..=13 {
        out.push((format!("D{n}"), ctor::dihedral(n)));
    }
    for n in 2..=6 {
        out.push((format!("Sym{n}"), ctor::symmetric(n)));
    }
    for n in 4..=6 {
        out.push((format!("Alt{n}"), ctor::alternating(n)));
    }
    for (p, m) in [(5, 2), (7, 3), (7, 2), (11, 2), (13, 2), (13, 4)] {
        out.push((format!("AGL({p},<{m}>)"), ctor::affine_line(p, m)));
    }
    out.push(("PSL(2,7)".into(), ctor::psl27()));
    let (s2, s3, s4, c2, c3, c4, d4) = (
        ctor::symmetric(2),
        ctor::symmetric(3),
        ctor::symmetric(4),
        ctor::cyclic(2),
        ctor::cyclic(3),
        ctor::cyclic(4),
        ctor::dihedral(4),
    );
    for (name, a, b) in [("S3xS3", &s3, &s3), ("C3xC3", &c3, &c3), ("S3xC4", &s3, &c4), ("D4xC3", &d4, &c3), ("S4xC2", &s4, &c2)] {
        out.push((format!("{name} on pairs"), ctor::direct_product_pairs(a, b)));
    }
    for (name, a, b) in [
        ("S2 wr C3", &s2, &c3),
        ("S2 wr S3", &s2, &s3),
        ("C3 wr C2", &c3, &c2),
        ("S3 wr S2", &s3, &s2),
        ("C2 wr D4", &c2, &d4),
        ("S2 wr C4", &s2, &c4),
        ("C3 wr C3", &c3, &c3),
    ] {
        out.push((format!("{name} imprimitive"), ctor::wreath_imprimitive(a, b)));
    }
    for (name, a, b) in [
        ("S3 wr C2", &s3, &c2),
        ("S3 wr S2", &s3, &s2),
        ("S4 wr S2", &s4, &s2),
        ("C3 wr C2", &c3, &c2),
        ("S2 wr S3", &s2, &s3),
        ("D4 wr C2", &d4, &c2),
    ] {
        out.push((format!("{name} product action"), ctor::wreath_product_action(a, b)));
    }
    for (name, g) in [("S3", &s3), ("D4", &d4), ("Alt4", &ctor::alternating(4)), ("S4", &s4), ("D5", &ctor::dihedral(5))] {
        out.push((format!("{name} regular"), ctor::regular_representation(g).unwrap()));
    }
    for b in [
        catalog::k33(),
        catalog::hypercube(3),
        catalog::hypercube(4),
        catalog::petersen_sym5(),
        catalog::petersen_alt5(),
        catalog::c4_klein(),
        catalog::double_petersen(),
        catalog::ex1(3),
        catalog::ex1(4),
    ] {
        let b = b.unwrap();
        out.push((b.name.clone(), b.pair.group));
    }
    out
}

fn ac7_profiles() -> Verdict {
    let groups = corpus();
    ensure!(groups.len() >= 50, "corpus has {} groups", groups.len());
    let mut normals = 0;
    for (name, g) in &groups {
        ensure!(g.is_transitive(), "{name} is intransitive");
        let order = g.order_u64().unwrap();
        ensure!(order <= 2000, "{name} has order {order}");
        let t = Table::of(g, 2000).ok_or(format!("{name}: enumeration cap"))?;
        ensure!(t.size() as u64 == order, "{name}: {} elements, order {order}", t.size());
        let brute = brute_profile(&t);
        normals += brute.normal_subgroups;
        let lib = qp_profile(g).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            (lib.quasiprimitive, lib.biquasiprimitive, lib.semiprimitive, lib.max_normal_orbits)
                == (brute.quasiprimitive, brute.biquasiprimitive, brute.semiprimitive, brute.max_normal_orbits),
            "{name}: library {lib:?} vs brute force {brute:?}"
        );
    }
    Ok(format!("{} groups, {normals} nontrivial normal subgroups enumerated", groups.len()))
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> BoundExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return BoundExpr::int(rng.gen_range(0u64..=12));
    }
    let terms = |rng: &mut ChaCha8Rng| (0..rng.gen_range(1..=3)).map(|_| random_expr(rng, depth - 1)).collect();
    match rng.gen_range(0..5) {
        0 => BoundExpr::add(terms(rng)),
        1 => BoundExpr::mul(terms(rng)),
        2 => BoundExpr::pow(random_expr(rng, depth - 1), random_expr(rng, depth - 1)),
        3 => BoundExpr::fact(random_expr(rng, depth - 1)),
        _ => BoundExpr::min(terms(rng)),
    }
}

fn ac8_bound_calculus() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let table: BTreeMap<u64, BigUint> = (1..=12).map(|d| (d, big(rng.gen_range(1..1_000_000)))).collect();
    let f = BoundFn::Table(table.clone());
    for d in 2..=12u64 {
        ensure!(dprime(d * (d - 1)) == d, "d' of {} is not {d}", d * (d - 1));
        let lhs = f_tilde(&f, d * (d - 1)).map_err(err)?.exact_value();
        ensure!(lhs.as_ref() == Some(&table[&d]), "f~(d(d-1)) != f(d) at d = {d}");
        let hat = f_hat(&BoundFn::constant(1), d).map_err(err)?.exact_value();
        ensure!(hat == Some(factorial(d)), "f^ with g = 1 is not {d}! at d = {d}");
    }
    let ddd = cofactor_regular_bound(3).exact_value();
    ensure!(ddd == Some(big(6_402_373_705_728_000)), "(3 * 3!)! = {ddd:?}");

    let cap = 1_000_000u64;
    let mut tested = 0;
    let mut attempts = 0;
    let cfg = EvalConfig::default();
    let logs = EvalConfig::log_only();
    while tested < 1000 {
        attempts += 1;
        ensure!(attempts < 200_000, "generator produced only {tested} small expressions");
        let e = random_expr(&mut rng, 4);
        let Some(v) = eval_capped(&e, cap) else { continue };
        tested += 1;
        ensure!(e.exact_value() == Some(big(v)), "{e}: exact value {:?} vs {v}", e.exact_value());
        let probes = [v.saturating_sub(1), v, v + 1, rng.gen_range(0..cap)];
        for w in probes {
            let want = if w <= v { CmpResult::LessOrEqual } else { CmpResult::Greater };
            let got = cmp_bound(&e, &big(w), &cfg);
            ensure!(got == want, "{w} vs {e} (= {v}): {got:?}");
            let got_log = cmp_bound(&e, &big(w), &logs);
            ensure!(got_log == want || got_log == CmpResult::Undecided, "log-only {w} vs {e}: {got_log:?}");
        }
    }
    Ok(format!("tables d = 2..12, (3*3!)! = 18!, {tested} random expressions (of {attempts} drawn)"))
}

fn random_member(rng: &mut ChaCha8Rng, elems: &[Permutation]) -> Permutation {
    elems.choose(rng).unwrap().clone()
}

fn ac9_lemma() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let simple = [ctor::alternating(5), ctor::psl27()];
    let tables: Vec<Table> = simple.iter().map(|t| Table::of(t, 200).unwrap()).collect();
    let limits = LemmaLimits::default();
    let (mut runs, mut holds, mut fails) = (0, 0, 0);
    while runs < 120 {
        let which = rng.gen_range(0..2);
        let (t, tab) = (&simple[which], &tables[which]);
        let t_elems: Vec<Permutation> = tab.elems.iter().map(|x| common::perm(x)).collect();
        let l = *[1usize, 2, 2, 3].choose(&mut rng).unwrap();
        if l == 3 && which == 1 && rng.gen_bool(0.7) {
            continue;
        }
        let r = match rng.gen_range(0..3) {
            0 => t.point_stabiliser(0),
            1 => PermGroup::new(t.degree(), vec![random_member(&mut rng, &t_elems)]).unwrap(),
            _ => {
                let g = PermGroup::new(t.degree(), vec![random_member(&mut rng, &t_elems), random_member(&mut rng, &t_elems)]).unwrap();
                if g.order() == t.order() {
                    continue;
                }
                g
            }
        };
        let r_elems: Vec<Permutation> = Table::of(&r, 200).unwrap().elems.iter().map(|x| common::perm(x)).collect();
        let k = rng.gen_range(1..=3);
        let mut m: Vec<Tuple> = Vec::new();
        for _ in 0..k {
            let pool: Vec<Permutation> = (0..rng.gen_range(1..=k)).map(|_| random_member(&mut rng, &t_elems)).collect();
            m.push((0..l).map(|_| random_member(&mut rng, &pool)).collect());
        }
        let rand_r = |rng: &mut ChaCha8Rng| -> Vec<Tuple> {
            (0..k).map(|_| (0..l).map(|_| random_member(rng, &r_elems)).collect()).collect()
        };
        let y = rand_r(&mut rng);
        let z = rand_r(&mut rng);
        let ns: Vec<Vec<u32>> = (0..k)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let img = common::then(&common::then(y[i][j].images(), m[i][j].images()), z[i][j].images());
                        tab.index[&img]
                    })
                    .collect()
            })
            .collect();
        let inst = LemmaInstance::conforming(t.clone(), r.clone(), m, y, z);
        let report = lemma_aux_check(&inst, &limits).map_err(|e| format!("instance {runs}: {e}"))?;
        let r_mask = {
            let gens: Vec<u32> = r.generators().iter().map(|g| tab.index[g.images()]).collect();
            tab.closure(&gens)
        };
        let oracle = product_set_covers(tab, &r_mask, &ns, l);
        ensure!(report.hypothesis == oracle, "instance {runs}: checker says {}, product set says {oracle}", report.hypothesis);
        ensure!(report.implication_holds, "instance {runs}: hypothesis holds but bound fails");
        if report.hypothesis {
            ensure!(report.conclusion, "instance {runs}: conclusion fails");
            holds += 1;
        } else {
            fails += 1;
        }
        runs += 1;
    }
    ensure!(holds > 0 && fails > 0, "hypothesis never {}", if holds == 0 { "held" } else { "failed" });
    Ok(format!("{runs} instances: hypothesis held {holds}, failed {fails}; all agree with product sets"))
}

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    run: fn() -> Verdict,
}

fn main() {
    let criteria = [
        Criterion { id: "AC1", title: "example 1 at n = 8", budget: Duration::from_secs(5), run: ac1_example_one },
        Criterion { id: "AC2", title: "hypercubes with translations", budget: Duration::from_secs(5), run: ac2_hypercubes },
        Criterion { id: "AC3", title: "transversal construction", budget: Duration::from_secs(60), run: ac3_theorem_one },
        Criterion { id: "AC4", title: "product action reduction", budget: Duration::from_secs(10), run: ac4_product_action },
        Criterion { id: "AC5", title: "example 4 coset graph", budget: Duration::from_secs(600), run: ac5_example_four },
        Criterion { id: "AC6", title: "biquasiprimitive routing", budget: Duration::from_secs(5), run: ac6_biquasiprimitive },
        Criterion { id: "AC7", title: "profiles vs normal subgroup enumeration", budget: Duration::from_secs(300), run: ac7_profiles },
        Criterion { id: "AC8", title: "bound calculus", budget: Duration::from_secs(60), run: ac8_bound_calculus },
        Criterion { id: "AC9", title: "factor-count lemma checker", budget: Duration::from_secs(300), run: ac9_lemma },
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| a.starts_with("AC")).collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == c.id) {
            continue;
        }
        let start = Instant::now();
        let verdict = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over budget of {:?}", c.budget)),
            v => v,
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if verdict.is_err() {
            failed += 1;
        }
        println!("{} {tag} {} [{:.2}s] {detail}", c.id, c.title, elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
