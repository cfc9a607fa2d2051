//! Stabilisers in derived actions, projections onto simple direct factors and
//! a small graph isomorphism test.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::action::block_permutation;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Largest simple factor whose elements are enumerated for projections.
pub const PROJECTION_LIMIT: u64 = 50_000;

/// Subgroup of `g` fixing `point` in an action on `m` points, given by one
/// image per generator of `g`.
pub fn stabiliser_in_action(g: &PermGroup, m: usize, images: &[Permutation], point: u32) -> Result<PermGroup> {
    let n = g.degree();
    if images.len() != g.generators().len() {
        return Err(Error::assertion("one image per generator required"));
    }
    let combined: Vec<Permutation> = g
        .generators()
        .iter()
        .zip(images)
        .map(|(s, a)| {
            let mut img = s.images().to_vec();
            img.extend(a.images().iter().map(|&x| x + n as u32));
            Permutation::from_images(img).expect("combined action is a permutation")
        })
        .collect();
    let big = PermGroup::new(n + m, combined)?.with_order(g.order());
    let chain = big.chain_with_prefix(&[n as u32 + point]);
    let gens: Vec<Permutation> = chain.stabiliser_gens(1).iter().map(|k| k.restrict(n)).collect();
    let order = chain.suffix(1).order();
    Ok(PermGroup::new(n, gens)?.with_order(order))
}

/// Action of each generator of `g` on a `g`-invariant partition.
pub fn block_images(g: &PermGroup, blocks: &[Vec<u32>], block_of: &[u32]) -> Result<Vec<Permutation>> {
    g.generators()
        .iter()
        .map(|s| {
            block_permutation(s, blocks, block_of)
                .ok_or_else(|| Error::NotInvariant(format!("{s} does not preserve the partition")))
        })
        .collect()
}

/// Setwise stabiliser of block `sigma` of an invariant partition.
pub fn block_stabiliser(g: &PermGroup, blocks: &[Vec<u32>], block_of: &[u32], sigma: u32) -> Result<PermGroup> {
    let images = block_images(g, blocks, block_of)?;
    stabiliser_in_action(g, blocks.len(), &images, sigma)
}

/// The permutation of the direct factors induced by conjugation.
pub fn factor_images(g: &PermGroup, factors: &[PermGroup]) -> Result<Vec<Permutation>> {
    let reps: Vec<&Permutation> = factors
        .iter()
        .map(|f| f.generators().iter().find(|x| !x.is_identity()).ok_or_else(|| Error::invalid("trivial factor")))
        .collect::<Result<_>>()?;
    g.generators()
        .iter()
        .map(|s| {
            let img = reps
                .iter()
                .map(|x| {
                    let y = x.conjugate_by(s);
                    factors
                        .iter()
                        .position(|f| f.contains(&y))
                        .map(|k| k as u32)
                        .ok_or_else(|| Error::assertion("conjugation does not permute the factors"))
                })
                .collect::<Result<Vec<u32>>>()?;
            Permutation::from_images(img)
        })
        .collect()
}

/// `N_g(factors[i])`, computed as the stabiliser of `i` in the action on factors.
pub fn factor_normaliser(g: &PermGroup, factors: &[PermGroup], i: usize) -> Result<PermGroup> {
    let images = factor_images(g, factors)?;
    stabiliser_in_action(g, factors.len(), &images, i as u32)
}

/// Order of the group induced by `h` acting by conjugation on the elements of `t`.
///
/// When `t` is a nonabelian simple direct factor of a group containing `h`,
/// this is the order of the projection of `h` onto `t`.
pub fn conjugation_image_order(h: &PermGroup, t: &PermGroup) -> Result<BigUint> {
    let size = t
        .order_u64()
        .filter(|&o| o <= PROJECTION_LIMIT)
        .ok_or_else(|| Error::resource("simple factor order", PROJECTION_LIMIT))?;
    let elems = t.elements()?;
    let index: HashMap<&Permutation, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
    let mut gens = Vec::with_capacity(h.generators().len());
    for x in h.generators() {
        let img = elems
            .iter()
            .map(|e| {
                index
                    .get(&e.conjugate_by(x))
                    .copied()
                    .ok_or_else(|| Error::assertion("element does not normalise the factor"))
            })
            .collect::<Result<Vec<u32>>>()?;
        gens.push(Permutation::from_images(img)?);
    }
    Ok(PermGroup::new(size as usize, gens)?.order())
}

/// Backtracking isomorphism test. `None` when `step_cap` search nodes are exhausted.
pub fn isomorphic(a: &Graph, b: &Graph, step_cap: u64) -> Option<bool> {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() || a.is_directed() != b.is_directed() {
        return Some(false);
    }
    let deg = |g: &Graph| {
        let mut d: Vec<usize> = (0..n as u32).map(|v| g.neighbours(v).len()).collect();
        d.sort_unstable();
        d
    };
    if deg(a) != deg(b) {
        return Some(false);
    }
    let order = bfs_order(a);
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    let mut steps = 0u64;
    let found = extend(a, b, &order, 0, &mut map, &mut used, &mut steps, step_cap)?;
    Some(found)
}

fn bfs_order(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for s in 0..n as u32 {
        if seen[s as usize] {
            continue;
        }
        seen[s as usize] = true;
        out.push(s);
        let mut head = out.len() - 1;
        while head < out.len() {
            let v = out[head];
            head += 1;
            for &w in g.neighbours(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    out.push(w);
                }
            }
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    order: &[u32],
    k: usize,
    map: &mut [u32],
    used: &mut [bool],
    steps: &mut u64,
    cap: u64,
) -> Option<bool> {
    if k == order.len() {
        return Some(true);
    }
    let v = order[k];
    for w in 0..b.order() as u32 {
        if used[w as usize] || a.neighbours(v).len() != b.neighbours(w).len() {
            continue;
        }
        *steps += 1;
        if *steps > cap {
            return None;
        }
        let consistent = order[..k].iter().all(|&u| {
            let mu = map[u as usize];
            a.has_edge(u, v) == b.has_edge(mu, w) && a.has_edge(v, u) == b.has_edge(w, mu)
        });
        if !consistent {
            continue;
        }
        map[v as usize] = w;
        used[w as usize] = true;
        if extend(a, b, order, k + 1, map, used, steps, cap)? {
            return Some(true);
        }
        used[w as usize] = false;
        map[v as usize] = u32::MAX;
    }
    Some(false)
}
