//! Normal closures, minimal normal subgroups, socles and 1-closures.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::action::induced_action;
use super::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> Result<PermGroup> {
    for s in seeds {
        if !g.contains(s) {
            return Err(Error::NotMember(s.to_string()));
        }
    }
    let mut gens: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
    gens.sort();
    gens.dedup();
    let mut n = PermGroup::new(g.degree(), gens.clone())?;
    let mut i = 0;
    while i < gens.len() {
        for s in g.generators() {
            let c = gens[i].conjugate_by(s);
            if !n.contains(&c) {
                gens.push(c);
                n = PermGroup::new(g.degree(), gens.clone())?;
            }
        }
        i += 1;
    }
    Ok(n)
}

/// Sort key giving a canonical order on subgroups: order, orbits, then the
/// lexicographically least non-identity element when it can be enumerated.
pub fn canonical_key(h: &PermGroup) -> (BigUint, Vec<Vec<u32>>, Option<Permutation>) {
    let least = match h.order().to_u64() {
        Some(n) if n <= 200_000 && n > 1 => h
            .elements()
            .ok()
            .and_then(|els| els.into_iter().filter(|x| !x.is_identity()).min()),
        _ => None,
    };
    (h.order(), h.orbits(), least)
}

fn sort_canonically(groups: &mut Vec<PermGroup>) {
    let mut keyed: Vec<_> = groups.drain(..).map(|h| (canonical_key(&h), h)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    groups.extend(keyed.into_iter().map(|(_, h)| h));
}

/// Minimal normal subgroups in canonical order.
///
/// Every minimal normal subgroup is the normal closure of any of its
/// prime-order elements, so only classes of prime-order elements are tried.
pub fn minimal_normal_subgroups(g: &PermGroup) -> Result<Vec<PermGroup>> {
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    let classes = g.conjugacy_classes()?;
    let mut candidates = Vec::new();
    for (rep, _) in classes {
        if rep.is_identity() || !is_prime(rep.order()) {
            continue;
        }
        candidates.push(normal_closure(g, &[rep])?);
    }
    candidates.sort_by_key(|c| c.order());
    let mut mins: Vec<PermGroup> = Vec::new();
    for c in candidates {
        if mins.iter().any(|m| m.is_subgroup_of(&c)) {
            continue;
        }
        mins.push(c);
    }
    sort_canonically(&mut mins);
    Ok(mins)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Whether every non-identity class has normal closure equal to the group.
pub fn is_simple(g: &PermGroup) -> Result<bool> {
    if g.is_trivial() {
        return Ok(false);
    }
    let order = g.order();
    for (rep, _) in g.conjugacy_classes()? {
        if rep.is_identity() {
            continue;
        }
        if normal_closure(g, &[rep])?.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether all generators pairwise commute.
pub fn is_abelian(g: &PermGroup) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.compose(b) == b.compose(a)))
}

/// The socle written as a direct product `T^l`.
#[derive(Clone, Debug)]
pub struct SocleDecomposition {
    pub socle: PermGroup,
    pub factors: Vec<PermGroup>,
    pub factor_order: BigUint,
    pub abelian: bool,
}

impl SocleDecomposition {
    pub fn l(&self) -> usize {
        self.factors.len()
    }
}

/// Socle of `g` with a decomposition into isomorphic simple factors.
///
/// Errors if the socle is not a power of a single simple group.
pub fn socle(g: &PermGroup) -> Result<SocleDecomposition> {
    let mins = minimal_normal_subgroups(g)?;
    if mins.is_empty() {
        return Err(Error::invalid("trivial group has trivial socle"));
    }
    let mut soc = mins[0].clone();
    for m in &mins[1..] {
        soc = soc.join(m);
    }
    let soc_order = soc.order();
    if is_abelian(&soc) {
        let p = soc.generators().first().map(|x| x.order()).unwrap_or(1);
        if !is_prime(p) || soc.generators().iter().any(|x| x.order() != p) {
            return Err(Error::invalid("abelian socle is not elementary abelian: non-homogeneous socle"));
        }
        let mut basis: Vec<Permutation> = Vec::new();
        let mut span = PermGroup::trivial(g.degree());
        for x in soc.generators() {
            if !span.contains(x) {
                basis.push(x.clone());
                span = PermGroup::new(g.degree(), basis.clone())?;
            }
        }
        let p_big = BigUint::from(p);
        if p_big.pow(basis.len() as u32) != soc_order {
            return Err(Error::assertion("elementary abelian socle has wrong order"));
        }
        let factors = basis
            .into_iter()
            .map(|b| PermGroup::new(g.degree(), vec![b]).map(|h| h.with_order(p_big.clone())))
            .collect::<Result<Vec<_>>>()?;
        return Ok(SocleDecomposition {
            socle: soc,
            factors,
            factor_order: p_big,
            abelian: true,
        });
    }
    let factors = minimal_normal_subgroups(&soc)?;
    let t = factors[0].order();
    if factors.iter().any(|f| f.order() != t) {
        return Err(Error::invalid("socle factors have unequal orders: non-homogeneous socle"));
    }
    if t.pow(factors.len() as u32) != soc_order {
        return Err(Error::invalid("socle is not the direct product of its minimal normal subgroups"));
    }
    for f in &factors {
        if !is_simple(f)? {
            return Err(Error::assertion("socle factor is not simple"));
        }
    }
    Ok(SocleDecomposition {
        socle: soc,
        factors,
        factor_order: t,
        abelian: false,
    })
}

/// Kernel of the action of `g` on the orbits of its normal subgroup `n`.
pub fn one_closure(n: &PermGroup, g: &PermGroup) -> Result<PermGroup> {
    if !n.is_subgroup_of(g) {
        return Err(Error::NotMember("subgroup generator outside the group".into()));
    }
    if !n.is_normalised_by(g) {
        return Err(Error::NotNormal("subgroup is not normalised by the group".into()));
    }
    Ok(induced_action(g, &n.orbits())?.kernel)
}

/// Whether `n` equals its 1-closure in `g`.
pub fn is_one_closed(n: &PermGroup, g: &PermGroup) -> Result<bool> {
    Ok(one_closure(n, g)?.order() == n.order())
}
