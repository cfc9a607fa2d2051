//! Permutation groups given by generators, with a lazily built stabiliser chain.

pub mod action;
pub mod chain;
pub mod ctor;
pub mod normal;
pub mod profile;

use std::collections::VecDeque;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::perm::Permutation;
pub use chain::StabChain;

static SEED: AtomicU64 = AtomicU64::new(0x005e_ed0f_5c4e_1e75);
static MAX_ELEMENTS: AtomicU64 = AtomicU64::new(10_000_000);

/// Seed for the randomised phase of chain construction. Results never depend on it.
pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

/// Cap on the number of elements any routine will enumerate.
pub fn set_max_elements(limit: u64) {
    MAX_ELEMENTS.store(limit, Ordering::Relaxed);
}

pub fn max_elements() -> u64 {
    MAX_ELEMENTS.load(Ordering::Relaxed)
}

#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    order_hint: Option<BigUint>,
    chain: OnceLock<Arc<StabChain>>,
}

impl PermGroup {
    /// Group generated by `gens` on `degree` points. Identity generators are dropped.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::invalid("degree must be positive"));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::invalid(format!(
                    "generator {g} has degree {} but group degree is {degree}",
                    g.degree()
                )));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup {
            degree,
            gens,
            order_hint: None,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::new(degree, Vec::new()).expect("positive degree")
    }

    /// Records the known order; it is used to stop chain construction early.
    pub fn with_order(mut self, order: BigUint) -> Self {
        self.order_hint = Some(order);
        self
    }

    pub(crate) fn with_chain(self, chain: StabChain) -> Self {
        let _ = self.chain.set(Arc::new(chain));
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| {
            Arc::new(StabChain::build(
                self.degree,
                &self.gens,
                &[],
                self.order_hint.as_ref(),
                seed(),
            ))
        })
    }

    /// A chain whose base begins with `prefix`.
    pub fn chain_with_prefix(&self, prefix: &[u32]) -> StabChain {
        let order = self.order();
        StabChain::build(self.degree, &self.gens, prefix, Some(&order), seed() ^ 0x9e37_79b9)
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.chain().order_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain().contains(g)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && self.order() == other.order()
    }

    /// Whether `self` is normalised by every generator of `over`.
    pub fn is_normalised_by(&self, over: &PermGroup) -> bool {
        over.gens
            .iter()
            .all(|g| self.gens.iter().all(|n| self.contains(&n.conjugate_by(g))))
    }

    pub fn is_normal_in(&self, over: &PermGroup) -> bool {
        self.is_subgroup_of(over) && self.is_normalised_by(over)
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        orbit_of(self.degree, &self.gens, point)
    }

    /// Orbits, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// `G_point` with its chain inherited from a chain based at `point`.
    pub fn point_stabiliser(&self, point: u32) -> PermGroup {
        self.pointwise_stabiliser(&[point])
    }

    /// Pointwise stabiliser of `points`.
    pub fn pointwise_stabiliser(&self, points: &[u32]) -> PermGroup {
        let chain = self.chain_with_prefix(points);
        let mut distinct = points.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let k = distinct.len();
        let gens = chain.stabiliser_gens(k);
        let sub = chain.suffix(k);
        let order = sub.order();
        PermGroup::new(self.degree, gens)
            .expect("stabiliser generators share the degree")
            .with_order(order)
            .with_chain(sub)
    }

    /// Enumerates all elements, erroring above the element cap.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let n = self.enumerable_order()?;
        let mut out = Vec::with_capacity(n as usize);
        self.chain().for_each_element(|_, g| {
            out.push(g.clone());
            true
        });
        Ok(out)
    }

    /// Order as `u64`, or a resource error if it exceeds the element cap.
    pub fn enumerable_order(&self) -> Result<u64> {
        let cap = max_elements();
        match self.order().to_u64() {
            Some(n) if n <= cap => Ok(n),
            _ => Err(Error::resource(format!("enumerating a group of order {}", self.order()), cap)),
        }
    }

    /// Representatives of conjugacy classes, with class sizes.
    ///
    /// Each representative is the element with least chain index in its class.
    pub fn conjugacy_classes(&self) -> Result<Vec<(Permutation, u64)>> {
        let n = self.enumerable_order()?;
        let chain = self.chain();
        let mut visited = vec![0u64; (n as usize).div_ceil(64)];
        let mark = |v: &mut Vec<u64>, i: u64| -> bool {
            let (w, b) = ((i / 64) as usize, i % 64);
            let was = v[w] >> b & 1 == 1;
            v[w] |= 1 << b;
            !was
        };
        let mut out = Vec::new();
        let mut queue: Vec<u64> = Vec::new();
        for start in 0..n {
            let (w, b) = ((start / 64) as usize, start % 64);
            if visited[w] >> b & 1 == 1 {
                continue;
            }
            mark(&mut visited, start);
            let rep = chain.element(start);
            queue.clear();
            queue.push(start);
            let mut head = 0;
            while head < queue.len() {
                let x = chain.element(queue[head]);
                head += 1;
                for g in &self.gens {
                    let y = x.conjugate_by(g);
                    let iy = chain
                        .index_of(&y)
                        .ok_or_else(|| Error::assertion("conjugate left the group"))?;
                    if mark(&mut visited, iy) {
                        queue.push(iy);
                    }
                }
            }
            out.push((rep, queue.len() as u64));
        }
        Ok(out)
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &PermGroup) -> PermGroup {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        PermGroup::new(self.degree, gens).expect("same degree")
    }

    /// Conjugate subgroup `self^g`.
    pub fn conjugate_by(&self, g: &Permutation) -> PermGroup {
        let gens = self.gens.iter().map(|x| x.conjugate_by(g)).collect();
        let mut out = PermGroup::new(self.degree, gens).expect("same degree");
        if let Some(c) = self.chain.get() {
            out.order_hint = Some(c.order());
        }
        out
    }

    /// Orbit of `point` with a transversal element for each orbit point.
    pub fn orbit_transversal(&self, point: u32) -> Vec<(u32, Permutation)> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut out = vec![(point, Permutation::identity(self.degree))];
        let mut head = 0;
        while head < out.len() {
            let (p, u) = out[head].clone();
            head += 1;
            for g in &self.gens {
                let q = g.apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    out.push((q, u.compose(g)));
                }
            }
        }
        out
    }

    /// An element mapping `from` to `to`, if one exists.
    pub fn element_mapping(&self, from: u32, to: u32) -> Option<Permutation> {
        // Tree walk over the orbit avoids materialising every transversal element.
        let n = self.degree;
        let mut parent: Vec<(u32, u32)> = vec![(u32::MAX, u32::MAX); n];
        parent[from as usize] = (from, u32::MAX);
        let mut queue = VecDeque::from([from]);
        while let Some(p) = queue.pop_front() {
            if p == to {
                break;
            }
            for (s, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if parent[q as usize].0 == u32::MAX {
                    parent[q as usize] = (p, s as u32);
                    queue.push_back(q);
                }
            }
        }
        if parent[to as usize].0 == u32::MAX {
            return None;
        }
        let mut path = Vec::new();
        let mut x = to;
        while x != from {
            let (p, s) = parent[x as usize];
            path.push(s);
            x = p;
        }
        let mut g = Permutation::identity(n);
        for &s in path.iter().rev() {
            g = g.compose(&self.gens[s as usize]);
        }
        Some(g)
    }
}

pub(crate) fn orbit_of(degree: usize, gens: &[Permutation], point: u32) -> Vec<u32> {
    let mut seen = vec![false; degree];
    seen[point as usize] = true;
    let mut orbit = vec![point];
    let mut head = 0;
    while head < orbit.len() {
        let p = orbit[head];
        head += 1;
        for g in gens {
            let q = g.apply(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                orbit.push(q);
            }
        }
    }
    orbit.sort_unstable();
    orbit
}

pub(crate) fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for p in 0..degree as u32 {
        if seen[p as usize] {
            continue;
        }
        let o = orbit_of(degree, gens, p);
        for &q in &o {
            seen[q as usize] = true;
        }
        out.push(o);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ctor;

    #[test]
    fn stabiliser_orders() {
        let s5 = ctor::symmetric(5);
        let st = s5.point_stabiliser(2);
        assert_eq!(st.order(), BigUint::from(24u32));
        assert!(st.generators().iter().all(|g| g.fixes(2)));
        let pw = s5.pointwise_stabiliser(&[0, 1]);
        assert_eq!(pw.order(), BigUint::from(6u32));
    }

    #[test]
    fn class_counts() {
        // Partition numbers for Sym(n).
        for (n, k) in [(3, 3), (4, 5), (5, 7), (6, 11)] {
            let classes = ctor::symmetric(n).conjugacy_classes().unwrap();
            assert_eq!(classes.len(), k, "Sym({n})");
            let total: u64 = classes.iter().map(|c| c.1).sum();
            assert_eq!(BigUint::from(total), ctor::symmetric(n).order());
        }
        assert_eq!(ctor::alternating(5).conjugacy_classes().unwrap().len(), 5);
    }

    #[test]
    fn element_cap_is_enforced() {
        let g = ctor::symmetric(12);
        assert!(matches!(g.elements(), Err(Error::Resource { .. })));
    }

    #[test]
    fn element_mapping_maps() {
        let g = ctor::dihedral(7);
        let x = g.element_mapping(2, 5).unwrap();
        assert_eq!(x.apply(2), 5);
        assert!(g.contains(&x));
    }
}
