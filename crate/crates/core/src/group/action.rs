//! Induced actions on invariant partitions and invariant subsets.

use num_bigint::BigUint;

use super::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Image and kernel of the action of a group on an invariant partition.
#[derive(Clone, Debug)]
pub struct InducedAction {
    /// Blocks, each sorted, ordered by least element.
    pub blocks: Vec<Vec<u32>>,
    pub block_of: Vec<u32>,
    /// Action on block indices; generators are images of the group generators.
    pub image: PermGroup,
    pub kernel: PermGroup,
}

/// Sorts blocks canonically and returns them with the point-to-block map.
pub fn canonical_partition(degree: usize, blocks: &[Vec<u32>]) -> Result<(Vec<Vec<u32>>, Vec<u32>)> {
    let mut blocks: Vec<Vec<u32>> = blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_unstable();
            b
        })
        .collect();
    if blocks.iter().any(|b| b.is_empty()) {
        return Err(Error::invalid("empty block"));
    }
    blocks.sort_by_key(|b| b[0]);
    let mut block_of = vec![u32::MAX; degree];
    for (i, b) in blocks.iter().enumerate() {
        for &p in b {
            if p as usize >= degree {
                return Err(Error::invalid(format!("block point {p} out of range")));
            }
            if block_of[p as usize] != u32::MAX {
                return Err(Error::invalid(format!("point {p} lies in two blocks")));
            }
            block_of[p as usize] = i as u32;
        }
    }
    if let Some(p) = block_of.iter().position(|&b| b == u32::MAX) {
        return Err(Error::invalid(format!("point {p} is in no block")));
    }
    Ok((blocks, block_of))
}

/// Action of `g` on block indices, or `None` if `g` does not preserve the partition.
pub fn block_permutation(g: &Permutation, blocks: &[Vec<u32>], block_of: &[u32]) -> Option<Permutation> {
    let mut img = vec![0u32; blocks.len()];
    for (i, b) in blocks.iter().enumerate() {
        let target = block_of[g.apply(b[0]) as usize];
        if blocks[target as usize].len() != b.len() {
            return None;
        }
        if b.iter().any(|&p| block_of[g.apply(p) as usize] != target) {
            return None;
        }
        img[i] = target;
    }
    Permutation::from_images(img).ok()
}

/// Image and kernel of a homomorphism given on generators as a permutation
/// action on `m` further points.
///
/// The kernel is the pointwise stabiliser of the extra points in the
/// combined action on `n + m` points.
pub fn action_image_kernel(
    g: &PermGroup,
    m: usize,
    images: &[Permutation],
) -> Result<(PermGroup, PermGroup)> {
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
    let order = g.order();
    let big = PermGroup::new(n + m, combined)?.with_order(order.clone());
    let prefix: Vec<u32> = (n as u32..(n + m) as u32).collect();
    let chain = big.chain_with_prefix(&prefix);
    let kernel_gens: Vec<Permutation> = chain.stabiliser_gens(m).iter().map(|k| k.restrict(n)).collect();
    let kernel_order = chain.suffix(m).order();
    let kernel = PermGroup::new(n, kernel_gens)?.with_order(kernel_order.clone());
    let image_order: BigUint = &order / &kernel_order;
    let image = PermGroup::new(m, images.to_vec())?.with_order(image_order);
    Ok((image, kernel))
}

/// Induced action on a partition. Errors if the partition is not invariant.
pub fn induced_action(g: &PermGroup, blocks: &[Vec<u32>]) -> Result<InducedAction> {
    let (blocks, block_of) = canonical_partition(g.degree(), blocks)?;
    let mut images = Vec::with_capacity(g.generators().len());
    for s in g.generators() {
        let p = block_permutation(s, &blocks, &block_of)
            .ok_or_else(|| Error::NotInvariant(format!("generator {s} does not preserve the partition")))?;
        images.push(p);
    }
    let (image, kernel) = action_image_kernel(g, blocks.len(), &images)?;
    Ok(InducedAction {
        blocks,
        block_of,
        image,
        kernel,
    })
}

/// Restriction to an invariant subset, relabelled `0..|set|` in sorted order.
pub fn action_on_subset(g: &PermGroup, set: &[u32]) -> Result<(PermGroup, PermGroup)> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.is_empty() {
        return Err(Error::invalid("empty invariant set"));
    }
    let mut index = vec![u32::MAX; g.degree()];
    for (i, &p) in set.iter().enumerate() {
        index[p as usize] = i as u32;
    }
    let mut images = Vec::new();
    for s in g.generators() {
        let mut img = Vec::with_capacity(set.len());
        for &p in &set {
            let q = index[s.apply(p) as usize];
            if q == u32::MAX {
                return Err(Error::NotInvariant(format!("generator {s} moves point {p} out of the set")));
            }
            img.push(q);
        }
        images.push(Permutation::from_images(img)?);
    }
    action_image_kernel(g, set.len(), &images)
}
