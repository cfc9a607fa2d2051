//! Right coset spaces `K\H` and the action of `H` on them.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Right cosets `Kg` of a small subgroup `K`, each named by its
/// lexicographically least element. Coset `0` is `K` itself.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    subgroup: Vec<Permutation>,
    reps: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

impl CosetSpace {
    pub fn new(h: &PermGroup, k: &PermGroup, max_points: usize) -> Result<CosetSpace> {
        if !k.is_subgroup_of(h) {
            return Err(Error::NotMember("subgroup generator outside the group".into()));
        }
        let count = (h.order() / k.order())
            .to_usize()
            .filter(|&c| c <= max_points)
            .ok_or_else(|| Error::resource("coset space size", max_points))?;
        let subgroup = k.elements()?;
        let mut space = CosetSpace {
            subgroup,
            reps: Vec::with_capacity(count),
            index: HashMap::with_capacity(count),
        };
        let id = Permutation::identity(h.degree());
        let mut seen: HashSet<Permutation> = HashSet::with_capacity(count);
        let first = space.canonical(&id);
        seen.insert(first.clone());
        let mut queue = vec![first];
        let mut head = 0;
        while head < queue.len() {
            let r = queue[head].clone();
            head += 1;
            for s in h.generators() {
                let c = space.canonical(&r.compose(s));
                if !seen.contains(&c) {
                    seen.insert(c.clone());
                    queue.push(c);
                }
            }
        }
        if queue.len() != count {
            return Err(Error::assertion(format!(
                "enumerated {} cosets, expected {count}",
                queue.len()
            )));
        }
        queue.sort();
        space.index = queue.iter().enumerate().map(|(i, r)| (r.clone(), i as u32)).collect();
        space.reps = queue;
        Ok(space)
    }

    /// Least element of the coset `Kg`.
    pub fn canonical(&self, g: &Permutation) -> Permutation {
        self.subgroup
            .iter()
            .map(|k| k.compose(g))
            .min()
            .expect("subgroup contains the identity")
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representative(&self, i: u32) -> &Permutation {
        &self.reps[i as usize]
    }

    pub fn coset_of(&self, g: &Permutation) -> u32 {
        self.index[&self.canonical(g)]
    }

    /// Permutation induced by `x` on the cosets: `Kg -> Kgx`.
    pub fn act(&self, x: &Permutation) -> Permutation {
        let images = self.reps.iter().map(|r| self.coset_of(&r.compose(x))).collect();
        Permutation::from_images(images).expect("right multiplication permutes cosets")
    }

    /// Core of `K` in `H`: the kernel of the action on cosets.
    pub fn core(&self, h: &PermGroup) -> Vec<Permutation> {
        let mut current: HashSet<Permutation> = self.subgroup.iter().cloned().collect();
        loop {
            let next: HashSet<Permutation> = current
                .iter()
                .filter(|x| {
                    h.generators().iter().all(|s| {
                        let c = x.conjugate_by(&s.inverse());
                        current.contains(&c)
                    })
                })
                .cloned()
                .collect();
            if next.len() == current.len() {
                let mut out: Vec<_> = next.into_iter().collect();
                out.sort();
                return out;
            }
            current = next;
        }
    }

    /// The image of `h` acting on the cosets, with its order recorded.
    pub fn action_group(&self, h: &PermGroup) -> Result<PermGroup> {
        let gens = h.generators().iter().map(|s| self.act(s)).collect();
        let order = h.order() / BigUint::from(self.core(h).len());
        Ok(PermGroup::new(self.len(), gens)?.with_order(order))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ctor;

    #[test]
    fn cosets_of_point_stabiliser() {
        let s4 = ctor::symmetric(4);
        let k = s4.point_stabiliser(0);
        let cs = CosetSpace::new(&s4, &k, 100).unwrap();
        assert_eq!(cs.len(), 4);
        assert!(cs.representative(0).is_identity());
        let g = cs.action_group(&s4).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        assert!(g.is_transitive());
        // Stabiliser of coset 0 is K.
        for x in k.generators() {
            assert_eq!(cs.act(x).apply(0), 0);
        }
    }

    #[test]
    fn core_of_normal_subgroup() {
        let s4 = ctor::symmetric(4);
        let v4 = PermGroup::new(
            4,
            vec![
                Permutation::parse_cycles(4, "(0,1)(2,3)").unwrap(),
                Permutation::parse_cycles(4, "(0,2)(1,3)").unwrap(),
            ],
        )
        .unwrap();
        let cs = CosetSpace::new(&s4, &v4, 100).unwrap();
        assert_eq!(cs.len(), 6);
        assert_eq!(cs.core(&s4).len(), 4);
        assert_eq!(cs.action_group(&s4).unwrap().order(), BigUint::from(6u32));
    }

    #[test]
    fn size_cap() {
        let s6 = ctor::symmetric(6);
        let k = PermGroup::trivial(6);
        assert!(matches!(CosetSpace::new(&s6, &k, 100), Err(Error::Resource { .. })));
    }
}
