//! Expected assertions for each catalog example.

use std::collections::BTreeMap;
use std::fmt::Display;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::bounds::theorem1::theorem1_construct;
use crate::catalog::{self, Built};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::profile::{primitivity_profile, qp_profile, qp_profile_transported};
use crate::local::{classify_pair_locally, local_action};
use crate::quotient::normal_quotient;
use crate::report::Check;
use crate::structure::{self, Outcome, PairSummary};

/// An example with its parameters and the names of the assertions replayed
/// by `verify`, in order.
#[derive(Clone, Debug, Serialize)]
pub struct ExampleSpec {
    pub name: String,
    pub parameters: BTreeMap<String, u64>,
    pub expected: Vec<&'static str>,
}

fn eq<T: PartialEq + Display>(name: &str, got: T, want: T) -> Check {
    let detail = format!("{got} (expected {want})");
    Check::new(name, got == want, detail)
}

fn flag(name: &str, value: bool) -> Check {
    Check::new(name, value, value.to_string())
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn is_complete(g: &Graph) -> bool {
    g.order() > 1 && g.valency() == Some(g.order() - 1)
}

pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.valency() == Some(2) && g.is_connected()
}

/// Short name of a graph: `K_n`, `C_n`, or its size and valency.
pub fn graph_name(g: &Graph) -> String {
    if is_complete(g) {
        format!("K_{}", g.order())
    } else if is_cycle(g) {
        format!("C_{}", g.order())
    } else {
        format!("{} vertices, valency {}", g.order(), g.max_valency())
    }
}

fn spec_names(name: &str, params: &BTreeMap<String, u64>) -> Result<Vec<&'static str>> {
    Ok(match name {
        "ex1" => vec![
            "vertices",
            "valency",
            "base_group_order",
            "base_group_normal",
            "base_vertex_stabiliser",
            "quotient_is_cycle",
            "image_order",
            "image_block_stabiliser",
            "kernel_is_base_group",
            "locally_intransitive",
            "transversal_bound_holds",
        ],
        "ex4_lambda" => vec![
            "vertices",
            "valency",
            "connected",
            "local_order",
            "local_faithful",
            "local_imprimitive",
            "local_not_quasiprimitive",
            "local_not_semiprimitive",
            "coset_action_quasiprimitive",
        ],
        "hamming" if params.get("k").copied().unwrap_or(2) == 2 => vec![
            "vertices",
            "valency",
            "group_order",
            "quasiprimitive",
            "route",
            "quotient_complete",
            "simple_image_order",
            "quotient_stabiliser_order",
        ],
        "hamming" | "hamming_alt" => vec!["vertices", "valency", "quasiprimitive", "route"],
        "hypercube" => vec!["vertices", "valency", "stabiliser_order", "route", "bound_holds", "bound_equality"],
        "k33" => vec!["biquasiprimitive", "route", "certificate_stabiliser", "bound_equality"],
        "petersen" => vec!["vertices", "valency", "stabiliser_order", "locally_two_transitive", "primitive", "route"],
        "petersen_alt5" => vec!["vertices", "stabiliser_order", "quasiprimitive", "route"],
        "hamming_direct" => vec!["not_quasiprimitive", "row_quotient_complete", "row_quotient_image_order"],
        "c4_klein" => vec!["biquasiprimitive", "route"],
        "double_petersen" => vec!["biquasiprimitive", "route", "reduced_vertices", "reduced_group_order"],
        "biqp_product" => vec!["biquasiprimitive", "route", "halves_complete", "halves_stabiliser_order"],
        "ex2" | "ex3" => return Err(Error::resource(format!("{name} point count"), catalog::DEFAULT_MAX_POINTS)),
        _ => return Err(Error::invalid(format!("unknown example {name}"))),
    })
}

pub fn example_spec(name: &str, params: &BTreeMap<String, u64>) -> Result<ExampleSpec> {
    Ok(ExampleSpec {
        name: name.to_string(),
        parameters: params.clone(),
        expected: spec_names(name, params)?,
    })
}

/// Builds the example and replays its expected assertions.
pub fn verify_example(name: &str, params: &BTreeMap<String, u64>, max_points: usize) -> Result<Vec<Check>> {
    let spec = example_spec(name, params)?;
    let checks = if name == "ex4_lambda" {
        verify_ex4(max_points)?
    } else {
        let built = catalog::build_example(name, params, max_points)?;
        checks_for(name, &built, params)?
    };
    let got: Vec<&str> = checks.iter().map(|c| c.name.as_str()).collect();
    if got != spec.expected {
        return Err(Error::assertion(format!("{name}: assertions {got:?} differ from {:?}", spec.expected)));
    }
    Ok(checks)
}

fn route_is(r: &structure::ReductionResult, want: &str) -> Check {
    Check::new("route", r.route == want, format!("{} ({})", r.route, r.outcome.kind()))
}

fn checks_for(name: &str, b: &Built, params: &BTreeMap<String, u64>) -> Result<Vec<Check>> {
    let p = &b.pair;
    let s = PairSummary::of(p);
    let param = |k: &str, default: u64| params.get(k).copied().unwrap_or(default);
    let mut out = Vec::new();
    match name {
        "ex1" => {
            let n = param("n", 8);
            let base = b.aux("N")?;
            out.push(eq("vertices", s.vertices as u64, 2 * n));
            out.push(eq("valency", s.valency, 5));
            out.push(eq("base_group_order", base.order(), big(1) << n));
            out.push(flag("base_group_normal", base.is_normal_in(&p.group)));
            out.push(eq("base_vertex_stabiliser", base.point_stabiliser(0).order(), big(1) << (n - 1)));
            let q = normal_quotient(p, base)?;
            out.push(Check::new("quotient_is_cycle", is_cycle(&q.quotient_graph), graph_name(&q.quotient_graph)));
            out.push(eq("image_order", q.image_order(), big(2 * n)));
            out.push(eq("image_block_stabiliser", q.image_stabiliser_order(), big(2)));
            out.push(eq("kernel_is_base_group", q.kernel_order(), base.order()));
            out.push(flag("locally_intransitive", !classify_pair_locally(p)?.flags.transitive));
            let w = theorem1_construct(&p.graph, base, &p.group, None)?;
            out.push(Check::new(
                "transversal_bound_holds",
                w.all_pass(),
                format!("t = {}, |S| = {}, |H| = {}", w.t, w.connection_set_size, w.h_order),
            ));
        }
        "hamming" | "hamming_alt" => {
            let (k, m) = (param("k", 2), param("m", 5));
            out.push(eq("vertices", s.vertices as u64, m.pow(k as u32)));
            out.push(eq("valency", s.valency as u64, k * (m - 1)));
            let full = name == "hamming";
            if full && k == 2 {
                out.push(eq("group_order", s.group_order.clone(), factorial(m).pow(2) * 2u32));
            }
            out.push(flag("quasiprimitive", qp_profile(&p.group)?.quasiprimitive));
            let r = structure::reduce(p, None)?;
            out.push(route_is(&r, "product_action"));
            if full && k == 2 {
                match &r.outcome {
                    Outcome::ReducedQp { lambda, summary } => {
                        out.push(Check::new("quotient_complete", is_complete(&lambda.graph), graph_name(&lambda.graph)));
                        out.push(eq("simple_image_order", summary.group_order.clone(), factorial(m) / 2u32));
                        out.push(eq("quotient_stabiliser_order", summary.stabiliser_order.clone(), factorial(m - 1) / 2u32));
                    }
                    other => {
                        for name in ["quotient_complete", "simple_image_order", "quotient_stabiliser_order"] {
                            out.push(Check::new(name, false, format!("outcome {}", other.kind())));
                        }
                    }
                }
            }
        }
        "hypercube" => {
            let k = param("k", 3);
            out.push(eq("vertices", s.vertices as u64, 1 << k));
            out.push(eq("valency", s.valency as u64, k));
            out.push(eq("stabiliser_order", s.stabiliser_order.clone(), factorial(k)));
            let r = structure::reduce(p, None)?;
            out.push(route_is(&r, "regular_normal"));
            let (holds, equal, detail) = certificate_terms(&r);
            out.push(Check::new("bound_holds", holds, detail.clone()));
            out.push(Check::new("bound_equality", equal, detail));
        }
        "k33" => {
            out.push(flag("biquasiprimitive", qp_profile(&p.group)?.biquasiprimitive));
            let r = structure::reduce(p, None)?;
            out.push(route_is(&r, "far_half_transitive"));
            let (holds, equal, detail) = certificate_terms(&r);
            out.push(Check::new("certificate_stabiliser", holds && s.stabiliser_order == big(12), detail.clone()));
            out.push(Check::new("bound_equality", equal, detail));
        }
        "petersen" => {
            out.push(eq("vertices", s.vertices, 10));
            out.push(eq("valency", s.valency, 3));
            out.push(eq("stabiliser_order", s.stabiliser_order.clone(), big(12)));
            out.push(flag("locally_two_transitive", classify_pair_locally(p)?.flags.two_transitive));
            out.push(flag("primitive", primitivity_profile(&p.group)?.primitive));
            out.push(route_is(&structure::reduce(p, None)?, "almost_simple"));
        }
        "petersen_alt5" => {
            out.push(eq("vertices", s.vertices, 10));
            out.push(eq("stabiliser_order", s.stabiliser_order.clone(), big(6)));
            out.push(flag("quasiprimitive", qp_profile(&p.group)?.quasiprimitive));
            out.push(route_is(&structure::reduce(p, None)?, "almost_simple"));
        }
        "hamming_direct" => {
            out.push(flag("not_quasiprimitive", !qp_profile(&p.group)?.quasiprimitive));
            let q = normal_quotient(p, b.aux("N")?)?;
            out.push(Check::new("row_quotient_complete", is_complete(&q.quotient_graph), graph_name(&q.quotient_graph)));
            out.push(eq("row_quotient_image_order", q.image_order(), big(120)));
        }
        "c4_klein" => {
            out.push(flag("biquasiprimitive", qp_profile(&p.group)?.biquasiprimitive));
            out.push(route_is(&structure::reduce(p, None)?, "short_circuit"));
        }
        "double_petersen" => {
            out.push(flag("biquasiprimitive", qp_profile(&p.group)?.biquasiprimitive));
            let r = structure::reduce(p, None)?;
            out.push(route_is(&r, "delta_quasiprimitive.almost_simple"));
            let (v, o) = match &r.outcome {
                Outcome::ReducedQp { summary, .. } => (summary.vertices, summary.group_order.clone()),
                _ => (0, BigUint::default()),
            };
            out.push(eq("reduced_vertices", v, 10));
            out.push(eq("reduced_group_order", o, big(60)));
        }
        "biqp_product" => {
            out.push(flag("biquasiprimitive", qp_profile(&p.group)?.biquasiprimitive));
            let r = structure::reduce(p, None)?;
            out.push(route_is(&r, "transitive_product"));
            match &r.outcome {
                Outcome::ReducedBiqp { lambda_r, lambda_s, summary_r, summary_s } => {
                    let both = is_complete(&lambda_r.graph) && is_complete(&lambda_s.graph);
                    out.push(Check::new(
                        "halves_complete",
                        both,
                        format!("{} and {}", graph_name(&lambda_r.graph), graph_name(&lambda_s.graph)),
                    ));
                    let want = big(12);
                    out.push(Check::new(
                        "halves_stabiliser_order",
                        summary_r.stabiliser_order == want && summary_s.stabiliser_order == want,
                        format!("{} and {}", summary_r.stabiliser_order, summary_s.stabiliser_order),
                    ));
                }
                other => {
                    for name in ["halves_complete", "halves_stabiliser_order"] {
                        out.push(Check::new(name, false, format!("outcome {}", other.kind())));
                    }
                }
            }
        }
        other => return Err(Error::invalid(format!("no assertions for {other}"))),
    }
    Ok(out)
}

/// Whether the outcome is a holding bound, whether it is attained, and a description.
fn certificate_terms(r: &structure::ReductionResult) -> (bool, bool, String) {
    match &r.outcome {
        Outcome::Bounded { certificate } => {
            let attained = certificate.bound.exact_value().as_ref() == Some(&certificate.stabiliser_order);
            (
                certificate.holds(),
                attained,
                format!("{} <= {}", certificate.stabiliser_order, certificate.bound),
            )
        }
        other => (false, false, format!("outcome {}", other.kind())),
    }
}

fn verify_ex4(max_points: usize) -> Result<Vec<Check>> {
    let ex = catalog::ex4_lambda(max_points)?;
    let p = &ex.built.pair;
    let mut out = vec![
        eq("vertices", p.graph.order(), 100_800),
        eq("valency", p.graph.max_valency(), 9),
        flag("connected", p.graph.is_connected()),
    ];
    let local = local_action(p, 0)?;
    out.push(eq("local_order", local.induced_order.clone(), big(36)));
    out.push(flag("local_faithful", local.faithful));
    let induced = &local.induced_group;
    out.push(flag("local_imprimitive", !primitivity_profile(induced)?.primitive));
    let lp = qp_profile(induced)?;
    out.push(flag("local_not_quasiprimitive", !lp.quasiprimitive));
    out.push(flag("local_not_semiprimitive", !lp.semiprimitive));
    let space = &ex.space;
    let top = qp_profile_transported(&ex.h, space.len(), &|x| space.act(x))?;
    out.push(flag("coset_action_quasiprimitive", top.quasiprimitive));
    Ok(out)
}
