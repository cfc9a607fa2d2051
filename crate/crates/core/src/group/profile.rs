//! Transitivity, primitivity and normal-subgroup profiles.

use serde::Serialize;

use super::normal::normal_closure;
use super::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitivityProfile {
    pub transitive: bool,
    pub semiregular: bool,
    pub regular: bool,
    pub orbit_count: usize,
}

pub fn transitivity_profile(g: &PermGroup) -> TransitivityProfile {
    let orbits = g.orbits();
    let order = g.order();
    let semiregular = orbits
        .iter()
        .all(|o| num_bigint::BigUint::from(o.len()) == order);
    let transitive = orbits.len() == 1;
    TransitivityProfile {
        transitive,
        semiregular,
        regular: transitive && semiregular,
        orbit_count: orbits.len(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitivityProfile {
    pub primitive: bool,
    pub two_transitive: bool,
    /// A non-trivial block system with smallest blocks, when imprimitive.
    pub witness_blocks: Option<Vec<Vec<u32>>>,
}

/// Finest invariant partition in which `a` and `b` share a block.
pub fn minimal_block_system(degree: usize, gens: &[Permutation], a: u32, b: u32) -> Vec<Vec<u32>> {
    let mut parent: Vec<u32> = (0..degree as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut queue = vec![(a, b)];
    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
    if ra != rb {
        parent[rb as usize] = ra;
    }
    while let Some((x, y)) = queue.pop() {
        for g in gens {
            let u = find(&mut parent, g.apply(x));
            let v = find(&mut parent, g.apply(y));
            if u != v {
                parent[v as usize] = u;
                queue.push((u, v));
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
    for p in 0..degree as u32 {
        let r = find(&mut parent, p);
        by_root.entry(r).or_default().push(p);
    }
    let mut blocks: Vec<Vec<u32>> = by_root.into_values().collect();
    blocks.sort_by_key(|b| b[0]);
    blocks
}

/// Errors with `NotTransitive` on intransitive input.
pub fn primitivity_profile(g: &PermGroup) -> Result<PrimitivityProfile> {
    let n = g.degree();
    let orbits = g.orbits();
    if orbits.len() != 1 {
        return Err(Error::NotTransitive { orbits: orbits.len() });
    }
    let mut witness: Option<Vec<Vec<u32>>> = None;
    for b in 1..n as u32 {
        let sys = minimal_block_system(n, g.generators(), 0, b);
        if sys.len() > 1 {
            let better = match &witness {
                None => true,
                Some(w) => sys[0].len() < w[0].len(),
            };
            if better {
                witness = Some(sys);
            }
        }
    }
    let two_transitive = n >= 2 && g.point_stabiliser(0).orbit(1).len() == n - 1;
    Ok(PrimitivityProfile {
        primitive: witness.is_none(),
        two_transitive,
        witness_blocks: witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QpProfile {
    pub quasiprimitive: bool,
    pub biquasiprimitive: bool,
    pub semiprimitive: bool,
    /// Largest number of orbits of a non-trivial normal subgroup.
    pub max_normal_orbits: usize,
}

/// Profile of a transitive group from normal closures of its conjugacy classes.
pub fn qp_profile(g: &PermGroup) -> Result<QpProfile> {
    let n = g.degree();
    qp_profile_transported(g, n, &|x: &Permutation| x.clone())
}

/// As `qp_profile`, but classes and closures are computed in `g` while orbits
/// are counted in the faithful action `act` of `g` on `points` points.
///
/// Any normal subgroup failing a property contains the normal closure of a
/// class that fails it, so closures of class representatives suffice.
pub fn qp_profile_transported(
    g: &PermGroup,
    points: usize,
    act: &dyn Fn(&Permutation) -> Permutation,
) -> Result<QpProfile> {
    let image_gens: Vec<Permutation> = g.generators().iter().map(act).collect();
    let top = PermGroup::new(points, image_gens)?;
    if !top.is_transitive() {
        return Err(Error::NotTransitive { orbits: top.orbits().len() });
    }
    let mut qp = true;
    let mut max_orbits = 1usize;
    let mut semi = true;
    for (rep, _) in g.conjugacy_classes()? {
        if rep.is_identity() {
            continue;
        }
        let closure = normal_closure(g, &[rep])?;
        let gens: Vec<Permutation> = closure.generators().iter().map(act).collect();
        let orbits = super::orbits_of(points, &gens);
        let k = orbits.len();
        if k > 1 {
            qp = false;
            // Normal subgroups of a transitive group have equal-sized orbits.
            let semiregular = num_bigint::BigUint::from(orbits[0].len()) == closure.order();
            if !semiregular {
                semi = false;
            }
        }
        max_orbits = max_orbits.max(k);
    }
    Ok(QpProfile {
        quasiprimitive: qp,
        biquasiprimitive: !qp && max_orbits <= 2,
        semiprimitive: semi,
        max_normal_orbits: if g.is_trivial() { 0 } else { max_orbits },
    })
}
