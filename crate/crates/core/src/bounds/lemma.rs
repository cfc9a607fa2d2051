//! Instance checker for the factor-count lemma: if `T^l = <n_1..n_k> R^l`
//! with each `n_i = y_i m_i z_i`, `m_i` taking few distinct values and
//! `y_i, z_i` in `R^l`, then `l <= d^d |R|^(2d)`.

use std::collections::HashSet;

use num_bigint::BigUint;
use serde::Serialize;

use super::expr::{cmp_bound, BoundExpr, CmpResult, EvalConfig};
use super::funcs::factor_count_bound;
use crate::error::{Error, Result};
use crate::graph::coset::CosetSpace;
use crate::group::normal::{is_abelian, is_simple};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// An element of `T^l` as its coordinates.
pub type Tuple = Vec<Permutation>;

#[derive(Clone, Debug)]
pub struct LemmaInstance {
    pub t: PermGroup,
    pub r: PermGroup,
    pub l: usize,
    pub m: Vec<Tuple>,
    pub y: Vec<Tuple>,
    pub z: Vec<Tuple>,
    /// Cap on the number of distinct entries of each `m_i`.
    pub distinct_cap: usize,
}

impl LemmaInstance {
    /// Uses the number of vectors as the distinct-entry cap.
    pub fn conforming(t: PermGroup, r: PermGroup, m: Vec<Tuple>, y: Vec<Tuple>, z: Vec<Tuple>) -> Self {
        let l = m.first().map_or(0, |v| v.len());
        let distinct_cap = m.len();
        LemmaInstance { t, r, l, m, y, z, distinct_cap }
    }

    /// `n_i = y_i m_i z_i`, coordinatewise.
    pub fn products(&self) -> Vec<Tuple> {
        (0..self.m.len())
            .map(|i| {
                (0..self.l)
                    .map(|j| self.y[i][j].compose(&self.m[i][j]).compose(&self.z[i][j]))
                    .collect()
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct LemmaLimits {
    pub max_l: usize,
    pub max_t_order: u64,
    pub max_points: u64,
}

impl Default for LemmaLimits {
    fn default() -> Self {
        LemmaLimits {
            max_l: 3,
            max_t_order: 360,
            max_points: 5_000_000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub l: usize,
    pub vectors: usize,
    pub distinct_cap: usize,
    pub hypothesis: bool,
    /// Size of the orbit of `R^l` under `U` on `(R\T)^l`.
    pub orbit_size: u64,
    pub coset_count: u64,
    pub bound: BoundExpr,
    pub conclusion: bool,
    pub implication_holds: bool,
}

/// Decides the hypothesis exactly and checks the implication.
///
/// `T^l = U R^l` iff `U` is transitive on `(R\T)^l`, which is decided by an
/// orbit computation on tuples of right cosets.
pub fn lemma_aux_check(inst: &LemmaInstance, limits: &LemmaLimits) -> Result<LemmaReport> {
    let k = inst.m.len();
    if k == 0 || inst.l == 0 {
        return Err(Error::invalid("need at least one vector of positive length"));
    }
    if inst.l > limits.max_l {
        return Err(Error::resource("number of coordinates", limits.max_l));
    }
    let t_order = inst
        .t
        .order_u64()
        .filter(|&o| o <= limits.max_t_order)
        .ok_or_else(|| Error::resource("|T|", limits.max_t_order))?;
    if inst.y.len() != k || inst.z.len() != k {
        return Err(Error::invalid("m, y and z must have equal length"));
    }
    for v in inst.m.iter().chain(&inst.y).chain(&inst.z) {
        if v.len() != inst.l {
            return Err(Error::invalid("every vector must have l coordinates"));
        }
    }
    if !inst.r.is_subgroup_of(&inst.t) || inst.r.order() == inst.t.order() {
        return Err(Error::precondition("R must be a proper subgroup of T"));
    }
    if is_abelian(&inst.t) || !is_simple(&inst.t)? {
        return Err(Error::precondition("T must be nonabelian simple"));
    }
    for (i, v) in inst.m.iter().enumerate() {
        if v.iter().any(|x| !inst.t.contains(x)) {
            return Err(Error::NotMember(format!("m_{i} has an entry outside T")));
        }
        let distinct: HashSet<&Permutation> = v.iter().collect();
        if distinct.len() > inst.distinct_cap {
            return Err(Error::precondition(format!(
                "m_{i} has {} distinct entries, cap is {}",
                distinct.len(),
                inst.distinct_cap
            )));
        }
    }
    for v in inst.y.iter().chain(&inst.z) {
        if v.iter().any(|x| !inst.r.contains(x)) {
            return Err(Error::NotMember("y or z has an entry outside R".into()));
        }
    }

    let index = t_order / inst.r.order_u64().expect("subgroup of a small group");
    let coset_count = index.pow(inst.l as u32);
    if coset_count > limits.max_points {
        return Err(Error::resource("coset tuples", limits.max_points));
    }
    let space = CosetSpace::new(&inst.t, &inst.r, index as usize)?;
    let gens: Vec<Vec<Permutation>> = inst
        .products()
        .iter()
        .map(|n| n.iter().map(|x| space.act(x)).collect())
        .collect();
    let orbit_size = tuple_orbit_size(&gens, index as u32, inst.l);
    let hypothesis = orbit_size == coset_count;

    let bound = if k == inst.distinct_cap {
        factor_count_bound(k as u64, &inst.r.order())
    } else {
        // cap^k |R|^(2k): the same pigeonhole count with the two roles of d separated.
        BoundExpr::mul(vec![
            BoundExpr::pow(BoundExpr::int(inst.distinct_cap as u64), BoundExpr::int(k as u64)),
            BoundExpr::pow(BoundExpr::Int(inst.r.order()), BoundExpr::int(2 * k as u64)),
        ])
    };
    let conclusion = cmp_bound(&bound, &BigUint::from(inst.l), &EvalConfig::default()) == CmpResult::LessOrEqual;
    Ok(LemmaReport {
        l: inst.l,
        vectors: k,
        distinct_cap: inst.distinct_cap,
        hypothesis,
        orbit_size,
        coset_count,
        bound,
        conclusion,
        implication_holds: !hypothesis || conclusion,
    })
}

/// Orbit length of the all-zero tuple under coordinatewise generators.
fn tuple_orbit_size(gens: &[Vec<Permutation>], m: u32, l: usize) -> u64 {
    let total = (m as usize).pow(l as u32);
    let mut seen = vec![false; total];
    seen[0] = true;
    let mut queue = vec![0u32];
    let mut head = 0;
    let mut digits = vec![0u32; l];
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let mut x = v;
        for j in (0..l).rev() {
            digits[j] = x % m;
            x /= m;
        }
        for g in gens {
            let w = (0..l).fold(0u32, |acc, j| acc * m + g[j].apply(digits[j]));
            if !seen[w as usize] {
                seen[w as usize] = true;
                queue.push(w);
            }
        }
    }
    queue.len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ctor;

    fn a5_a4() -> (PermGroup, PermGroup) {
        let t = ctor::alternating(5);
        let r = t.point_stabiliser(4);
        (t, r)
    }

    #[test]
    fn five_cycle_generates_modulo_point_stabiliser() {
        let (t, r) = a5_a4();
        let c = Permutation::parse_cycles(5, "(0,1,2,3,4)").unwrap();
        let id = Permutation::identity(5);
        let inst = LemmaInstance::conforming(t, r, vec![vec![c]], vec![vec![id.clone()]], vec![vec![id]]);
        let rep = lemma_aux_check(&inst, &LemmaLimits::default()).unwrap();
        assert!(rep.hypothesis);
        assert_eq!(rep.orbit_size, 5);
        assert_eq!(rep.bound.exact_value(), Some(BigUint::from(144u32)));
        assert!(rep.conclusion && rep.implication_holds);
    }

    #[test]
    fn entries_in_r_stay_in_r() {
        let (t, r) = a5_a4();
        let a = Permutation::parse_cycles(5, "(0,1,2)").unwrap();
        let b = Permutation::parse_cycles(5, "(1,2,3)").unwrap();
        let id = Permutation::identity(5);
        let inst = LemmaInstance::conforming(
            t,
            r,
            vec![vec![a.clone(), b.clone()], vec![b, a]],
            vec![vec![id.clone(), id.clone()]; 2],
            vec![vec![id.clone(), id]; 2],
        );
        let rep = lemma_aux_check(&inst, &LemmaLimits::default()).unwrap();
        assert!(!rep.hypothesis);
        assert_eq!(rep.orbit_size, 1);
        assert!(rep.implication_holds);
    }

    #[test]
    fn rejects_bad_inputs() {
        let (t, r) = a5_a4();
        let c = Permutation::parse_cycles(5, "(0,1,2,3,4)").unwrap();
        let id = Permutation::identity(5);
        let bad_y = LemmaInstance::conforming(t.clone(), r.clone(), vec![vec![id.clone()]], vec![vec![c.clone()]], vec![vec![id.clone()]]);
        assert!(lemma_aux_check(&bad_y, &LemmaLimits::default()).is_err());
        let too_long = LemmaInstance::conforming(t, r, vec![vec![id.clone(); 4]], vec![vec![id.clone(); 4]], vec![vec![id; 4]]);
        assert!(matches!(lemma_aux_check(&too_long, &LemmaLimits::default()), Err(Error::Resource { .. })));
    }
}
