//! Named graph-group pairs used by the CLI, the examples and the tests.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::construct;
use crate::graph::coset::CosetSpace;
use crate::graph::Graph;
use crate::group::{ctor, PermGroup};
use crate::pair::{validate_pair, VTPair};
use crate::perm::Permutation;

/// Default cap on the number of vertices a catalog construction may build.
pub const DEFAULT_MAX_POINTS: usize = 200_000;

/// A constructed pair with named auxiliary subgroups.
#[derive(Clone, Debug)]
pub struct Built {
    pub name: String,
    pub pair: VTPair,
    pub aux: BTreeMap<String, PermGroup>,
}

impl Built {
    fn new(name: impl Into<String>, pair: VTPair) -> Self {
        Built {
            name: name.into(),
            pair,
            aux: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, g: PermGroup) -> Self {
        self.aux.insert(key.to_string(), g);
        self
    }

    pub fn aux(&self, key: &str) -> Result<&PermGroup> {
        self.aux
            .get(key)
            .ok_or_else(|| Error::invalid(format!("example {} has no subgroup {key}", self.name)))
    }
}

fn perm_from_fn(n: usize, f: impl Fn(u32) -> u32) -> Permutation {
    Permutation::from_images((0..n as u32).map(f).collect()).expect("catalog permutation")
}

fn group(n: usize, gens: Vec<Permutation>) -> PermGroup {
    PermGroup::new(n, gens).expect("catalog group")
}

fn pair(graph: Graph, g: PermGroup, d: usize) -> Result<VTPair> {
    validate_pair(graph, g, d).map_err(Error::from)
}

fn cycles(n: usize, s: &str) -> Permutation {
    Permutation::parse_cycles(n, s).expect("catalog cycle notation")
}

fn pair_index(p: (u32, u32)) -> u32 {
    let (a, b) = if p.0 < p.1 { p } else { (p.1, p.0) };
    construct::pairs_of_five()
        .iter()
        .position(|&q| q == (a, b))
        .expect("2-subset of five points") as u32
}

/// The action of a permutation of five points on the ten 2-subsets.
pub fn on_pairs(g: &Permutation) -> Permutation {
    let pairs = construct::pairs_of_five();
    perm_from_fn(10, |i| {
        let (a, b) = pairs[i as usize];
        pair_index((g.apply(a), g.apply(b)))
    })
}

/// `Sym(5)` on the ten 2-subsets of `{0..5}`, ordered as in [`construct::pairs_of_five`].
pub fn sym5_on_pairs() -> PermGroup {
    let gens = ctor::symmetric(5).generators().iter().map(on_pairs).collect();
    group(10, gens)
}

pub fn alt5_on_pairs() -> PermGroup {
    let gens = ctor::alternating(5).generators().iter().map(on_pairs).collect();
    group(10, gens)
}

/// `C_n[K_2]` with `C_2 wr D_2n`; auxiliary `N` is the base group `C_2^n`.
pub fn ex1(n: usize) -> Result<Built> {
    if n < 3 {
        return Err(Error::invalid("ex1 needs n >= 3"));
    }
    let graph = construct::lexicographic_product(&construct::cycle(n), &construct::complete(2));
    let g = ctor::wreath_imprimitive(&ctor::symmetric(2), &ctor::dihedral(n));
    let flips = (0..n as u32)
        .map(|x| perm_from_fn(2 * n, |p| if p / 2 == x { p ^ 1 } else { p }))
        .collect();
    let base = group(2 * n, flips);
    let rotation = perm_from_fn(2 * n, |p| (p + 2) % (2 * n as u32));
    let base_rot = base.join(&group(2 * n, vec![rotation]));
    Ok(Built::new(format!("ex1(n={n})"), pair(graph, g, 5)?)
        .with("N", base)
        .with("base_rotation", base_rot))
}

/// `Q_k` with translations and coordinate permutations; auxiliary `N` is the translations.
pub fn hypercube(k: usize) -> Result<Built> {
    if k == 0 {
        return Err(Error::invalid("hypercube needs k >= 1"));
    }
    let n = 1usize << k;
    let mut gens = vec![perm_from_fn(n, |v| v ^ 1)];
    let bit = |v: u32, i: usize| (v >> i) & 1;
    if k >= 2 {
        gens.push(perm_from_fn(n, |v| {
            (0..k).fold(0, |acc, i| acc | bit(v, i) << ((i + 1) % k))
        }));
        gens.push(perm_from_fn(n, |v| {
            let (a, b) = (bit(v, 0), bit(v, 1));
            (v & !3) | a << 1 | b
        }));
    }
    let translations = group(n, (0..k).map(|i| perm_from_fn(n, |v| v ^ (1 << i))).collect());
    Ok(Built::new(format!("hypercube(k={k})"), pair(construct::hypercube(k), group(n, gens), k)?)
        .with("N", translations))
}

/// `K_{3,3}` with its full automorphism group of order 72.
pub fn k33() -> Result<Built> {
    let g = ctor::wreath_imprimitive(&ctor::symmetric(3), &ctor::symmetric(2));
    Ok(Built::new("k33", pair(construct::complete_bipartite(3, 3), g, 3)?))
}

pub fn petersen_sym5() -> Result<Built> {
    Ok(Built::new("petersen", pair(construct::petersen(), sym5_on_pairs(), 3)?))
}

pub fn petersen_alt5() -> Result<Built> {
    Ok(Built::new("petersen_alt5", pair(construct::petersen(), alt5_on_pairs(), 3)?))
}

/// `K_m^k` with `Sym(m) wr Sym(k)` in product action.
pub fn hamming(k: usize, m: usize) -> Result<Built> {
    if k == 0 || m < 2 {
        return Err(Error::invalid("hamming needs k >= 1 and m >= 2"));
    }
    let g = ctor::wreath_product_action(&ctor::symmetric(m), &ctor::symmetric(k));
    Ok(Built::new(format!("hamming(k={k},m={m})"), pair(construct::hamming(k, m), g, k * (m - 1))?))
}

/// `K_5 x K_5` with `Alt(5) wr Sym(2)` in product action.
pub fn hamming_alt() -> Result<Built> {
    let g = ctor::wreath_product_action(&ctor::alternating(5), &ctor::symmetric(2));
    Ok(Built::new("hamming_alt", pair(construct::hamming(2, 5), g, 8)?))
}

/// `K_5 x K_5` with `Sym(5) x Sym(5)`; auxiliary `N` is `1 x Alt(5)`.
pub fn hamming_direct() -> Result<Built> {
    let g = ctor::direct_product_pairs(&ctor::symmetric(5), &ctor::symmetric(5));
    let n = ctor::direct_product_pairs(&PermGroup::trivial(5), &ctor::alternating(5));
    Ok(Built::new("hamming_direct", pair(construct::hamming(2, 5), g, 8)?).with("N", n))
}

/// `C_4` with the Klein four-group acting regularly.
pub fn c4_klein() -> Result<Built> {
    let g = group(4, vec![cycles(4, "(0,1)(2,3)"), cycles(4, "(0,2)(1,3)")]);
    Ok(Built::new("c4_klein", pair(construct::cycle(4), g, 2)?))
}

/// Bipartite double of the Petersen graph with `Sym(5)`, odd permutations
/// swapping the sides. Vertex `(side, pair)` is `10 side + pair`.
pub fn double_petersen() -> Result<Built> {
    let pairs = construct::pairs_of_five();
    let disjoint = |p: (u32, u32), q: (u32, u32)| p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1;
    let mut edges = Vec::new();
    for (i, &p) in pairs.iter().enumerate() {
        for (j, &q) in pairs.iter().enumerate() {
            if disjoint(p, q) {
                edges.push((i as u32, 10 + j as u32));
            }
        }
    }
    let graph = Graph::from_edges(20, &edges, false)?;
    let lift = |g: &Permutation, odd: bool| {
        let on = on_pairs(g);
        perm_from_fn(20, |v| {
            let side = (v / 10) ^ odd as u32;
            10 * side + on.apply(v % 10)
        })
    };
    let gens = vec![lift(&cycles(5, "(0,1,2,3,4)"), false), lift(&cycles(5, "(0,1)"), true)];
    Ok(Built::new("double_petersen", pair(graph, group(20, gens), 3)?))
}

/// A bipartite pair whose half-action is `Alt(5) x Alt(5)` in product action
/// on 25 points, with the two factors swapping roles across the halves.
/// Vertex `(s, x, y)` is `25 s + 5 x + y`.
pub fn biqp_product() -> Result<Built> {
    let n = 50;
    let split = |v: u32| (v / 25, (v % 25) / 5, v % 5);
    let join = |s: u32, x: u32, y: u32| 25 * s + 5 * x + y;
    let mut edges = Vec::new();
    for x in 0..5 {
        for y in 0..5 {
            for x2 in 0..5 {
                for y2 in 0..5 {
                    if x == y2 || y == x2 {
                        edges.push((join(0, x, y), join(1, x2, y2)));
                    }
                }
            }
        }
    }
    let graph = Graph::from_edges(n, &edges, false)?;
    let mut gens = Vec::new();
    for a in ctor::alternating(5).generators() {
        gens.push(perm_from_fn(n, |v| {
            let (s, x, y) = split(v);
            if s == 0 { join(0, a.apply(x), y) } else { join(1, x, a.apply(y)) }
        }));
        gens.push(perm_from_fn(n, |v| {
            let (s, x, y) = split(v);
            if s == 0 { join(0, x, a.apply(y)) } else { join(1, a.apply(x), y) }
        }));
    }
    gens.push(perm_from_fn(n, |v| {
        let (s, x, y) = split(v);
        join(1 - s, x, y)
    }));
    Ok(Built::new("biqp_product", pair(graph, group(n, gens), 9)?))
}

/// Generators of the subgroup `K = <x, y, z, t>` of `Sym(10)` and the
/// involution `iota`, on points `0..10`.
pub fn ex4_generators() -> (Vec<Permutation>, Permutation) {
    let k = vec![
        cycles(10, "(0,1,2)(3,4,5)(6,7,8)"),
        cycles(10, "(0,3,6)(1,4,7)(2,5,8)"),
        cycles(10, "(1,2)(4,5)(7,8)"),
        cycles(10, "(3,6)(4,7)(5,8)"),
    ];
    (k, cycles(10, "(0,9)"))
}

/// Data for the coset construction of the graph `Lambda`.
#[derive(Clone, Debug)]
pub struct Ex4Lambda {
    pub h: PermGroup,
    pub k: PermGroup,
    pub iota: Permutation,
    pub space: CosetSpace,
    pub built: Built,
}

/// `Sym(10)` acting on the cosets of `K`, with the orbital graph of `(K, K iota)`.
pub fn ex4_lambda(max_points: usize) -> Result<Ex4Lambda> {
    let h = ctor::symmetric(10);
    let (kg, iota) = ex4_generators();
    let k = group(10, kg);
    let space = CosetSpace::new(&h, &k, max_points)?;
    let action = space.action_group(&h)?;
    let target = space.coset_of(&iota);
    let orbital = construct::orbital_graph(&action, 0, target, false)?;
    if orbital.graph.is_directed() {
        return Err(Error::assertion("orbital of (K, K iota) is not self-paired"));
    }
    let d = orbital.graph.max_valency();
    let built = Built::new("ex4_lambda", pair(orbital.graph, action, d)?);
    Ok(Ex4Lambda { h, k, iota, space, built })
}

/// Description of a catalog entry that is listed but not constructed.
#[derive(Clone, Debug)]
pub struct DryRun {
    pub name: &'static str,
    pub group: &'static str,
    pub point_stabiliser: &'static str,
    pub generators: &'static [&'static str],
    pub points: &'static str,
}

pub fn dry_run(name: &str) -> Option<DryRun> {
    match name {
        "ex2" => Some(DryRun {
            name: "ex2",
            group: "(T x T).<(F,tau),(tau,F),pi> with T = SL(n,q^2), q >= 4, n >= 3, gcd(q^2-1,n) = 1",
            point_stabiliser: "(SL(n,q) : <tau>) x <F> in each coordinate",
            generators: &[
                "F: entrywise Frobenius of order 2 on F_{q^2}",
                "tau: inverse transpose",
                "x = diag(lambda, lambda^-1, I_{n-2}), lambda of order q+1",
                "y = [[0,1,0],[-1,0,0],[0,0,I_{n-2}]]",
                "pi: coordinate swap",
            ],
            points: "|T : SL(n,q)|^2 / 4, over 10^12 for the least case n = 3, q = 4",
        }),
        "ex3" => Some(DryRun {
            name: "ex3",
            group: "(T x T).<(tau,F),(F,tau),pi> with T = SL(3,9)",
            point_stabiliser: "(<x,F> x <y,tau>)^2 with x of order 7, y of order 13",
            generators: &[
                "F: Frobenius of F_9",
                "tau: inverse transpose",
                "C = <x> x <y>: Singer cycle of order 91",
                "pi: coordinate swap",
            ],
            points: "(|SL(3,9)| / 364)^2, about 3.4 * 10^12",
        }),
        _ => None,
    }
}

/// Builds a named example with integer parameters.
pub fn build_example(name: &str, params: &BTreeMap<String, u64>, max_points: usize) -> Result<Built> {
    let get = |key: &str, default: u64| params.get(key).copied().unwrap_or(default) as usize;
    let check = |points: usize| {
        if points > max_points {
            Err(Error::resource("points", max_points))
        } else {
            Ok(())
        }
    };
    match name {
        "ex1" => {
            let n = get("n", 8);
            check(2 * n)?;
            ex1(n)
        }
        "ex4_lambda" => Ok(ex4_lambda(max_points)?.built),
        "hamming" => {
            let (k, m) = (get("k", 2), get("m", 5));
            let points = m.checked_pow(k as u32).ok_or_else(|| Error::resource("points", max_points))?;
            check(points)?;
            hamming(k, m)
        }
        "hypercube" => {
            let k = get("k", 3);
            if k >= usize::BITS as usize - 1 {
                return Err(Error::resource("points", max_points));
            }
            check(1 << k)?;
            hypercube(k)
        }
        "k33" => k33(),
        "petersen" => petersen_sym5(),
        "petersen_alt5" => petersen_alt5(),
        "hamming_alt" => hamming_alt(),
        "hamming_direct" => hamming_direct(),
        "c4_klein" => c4_klein(),
        "double_petersen" => double_petersen(),
        "biqp_product" => biqp_product(),
        "ex2" | "ex3" => Err(Error::resource(format!("{name} point count"), max_points)),
        _ => Err(Error::invalid(format!("unknown example {name}"))),
    }
}

/// Names accepted by [`build_example`].
pub const EXAMPLES: &[&str] = &[
    "ex1",
    "ex2",
    "ex3",
    "ex4_lambda",
    "hamming",
    "hypercube",
    "k33",
    "petersen",
    "petersen_alt5",
    "hamming_alt",
    "hamming_direct",
    "c4_klein",
    "double_petersen",
    "biqp_product",
];
