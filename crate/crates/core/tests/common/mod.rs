//! Brute-force oracles shared by the integration tests. Everything here works
//! on explicit element lists and multiplication tables, never on stabiliser
//! chains or normal closures from the library.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use vtsa::bounds::BoundExpr;
use vtsa::{PermGroup, Permutation};

/// Images of `a` then `b`.
pub fn then(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// All elements generated by `gens`, or `None` past `cap`.
pub fn enumerate(degree: usize, gens: &[Vec<u32>], cap: usize) -> Option<HashSet<Vec<u32>>> {
    let id: Vec<u32> = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        for g in gens {
            let y = then(&queue[head], g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return None;
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
        head += 1;
    }
    Some(seen)
}

/// A finite permutation group given by all of its elements.
pub struct Table {
    pub degree: usize,
    pub elems: Vec<Vec<u32>>,
    pub index: HashMap<Vec<u32>, u32>,
    /// `mul[i * size + j]` is element `i` followed by element `j`.
    pub mul: Vec<u32>,
    pub inv: Vec<u32>,
}

impl Table {
    pub fn from_generators(degree: usize, gens: &[Vec<u32>], cap: usize) -> Option<Table> {
        let id: Vec<u32> = (0..degree as u32).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::from([(id, 0)]);
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            head += 1;
            for g in gens {
                let y = then(&x, g);
                if !index.contains_key(&y) {
                    if elems.len() >= cap {
                        return None;
                    }
                    index.insert(y.clone(), elems.len() as u32);
                    elems.push(y);
                }
            }
        }
        let size = elems.len();
        let mut mul = vec![0u32; size * size];
        for i in 0..size {
            for j in 0..size {
                mul[i * size + j] = index[&then(&elems[i], &elems[j])];
            }
        }
        let inv = (0..size)
            .map(|i| (0..size as u32).find(|&j| mul[i * size + j as usize] == 0).unwrap())
            .collect();
        Some(Table { degree, elems, index, mul, inv })
    }

    pub fn of(g: &PermGroup, cap: usize) -> Option<Table> {
        let gens: Vec<Vec<u32>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
        Table::from_generators(g.degree(), &gens, cap)
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn m(&self, i: u32, j: u32) -> u32 {
        self.mul[i as usize * self.size() + j as usize]
    }

    pub fn conj(&self, x: u32, g: u32) -> u32 {
        self.m(self.m(self.inv[g as usize], x), g)
    }

    /// Subgroup generated by `gens`, as a membership mask.
    pub fn closure(&self, gens: &[u32]) -> Vec<bool> {
        let mut mask = vec![false; self.size()];
        mask[0] = true;
        let mut members = vec![0u32];
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in gens {
                let y = self.m(x, g);
                if !mask[y as usize] {
                    mask[y as usize] = true;
                    members.push(y);
                }
            }
        }
        mask
    }

    pub fn classes(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for x in 0..self.size() as u32 {
            if seen[x as usize] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..self.size() as u32 {
                let y = self.conj(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    class.push(y);
                }
            }
            out.push(class);
        }
        out
    }

    /// Every nontrivial normal subgroup: the closures of single classes,
    /// closed under products.
    pub fn nontrivial_normal_subgroups(&self) -> Vec<Vec<bool>> {
        let mut found: HashSet<Vec<bool>> = HashSet::new();
        let mut queue: VecDeque<Vec<bool>> = VecDeque::new();
        for c in self.classes() {
            if c == [0] {
                continue;
            }
            let mut gens: Vec<u32> = Vec::new();
            let mut mask = self.closure(&gens);
            for &x in &c {
                if !mask[x as usize] {
                    gens.push(x);
                    mask = self.closure(&gens);
                }
            }
            if found.insert(mask.clone()) {
                queue.push_back(mask);
            }
        }
        let mut all: Vec<Vec<bool>> = found.iter().cloned().collect();
        while let Some(a) = queue.pop_front() {
            let a_members: Vec<u32> = members(&a);
            let snapshot = all.clone();
            for b in &snapshot {
                let mut prod = vec![false; self.size()];
                for &x in &a_members {
                    for y in members(b) {
                        prod[self.m(x, y) as usize] = true;
                    }
                }
                if found.insert(prod.clone()) {
                    all.push(prod.clone());
                    queue.push_back(prod);
                }
            }
        }
        all
    }

    /// Orbits of the elements in `mask` on the points.
    pub fn orbits(&self, mask: &[bool]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.degree).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for (i, &inside) in mask.iter().enumerate() {
            if inside {
                for (x, &y) in self.elems[i].iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for x in 0..self.degree {
            *sizes.entry(find(&mut parent, x)).or_default() += 1;
        }
        sizes.into_values().collect()
    }
}

pub fn members(mask: &[bool]) -> Vec<u32> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u32).collect()
}

#[derive(Debug, PartialEq, Eq)]
pub struct BruteProfile {
    pub quasiprimitive: bool,
    pub biquasiprimitive: bool,
    pub semiprimitive: bool,
    pub max_normal_orbits: usize,
    pub normal_subgroups: usize,
}

pub fn brute_profile(t: &Table) -> BruteProfile {
    let normals = t.nontrivial_normal_subgroups();
    let mut qp = true;
    let mut semi = true;
    let mut max_orbits = if t.size() == 1 { 0 } else { 1 };
    for n in &normals {
        let order = members(n).len();
        let orbits = t.orbits(n);
        if orbits.len() > 1 {
            qp = false;
            if orbits.iter().any(|&s| s != order) {
                semi = false;
            }
        }
        max_orbits = max_orbits.max(orbits.len());
    }
    BruteProfile {
        quasiprimitive: qp,
        biquasiprimitive: !qp && max_orbits <= 2,
        semiprimitive: semi,
        max_normal_orbits: max_orbits,
        normal_subgroups: normals.len(),
    }
}

/// Value of an expression when below `cap`, `None` when at least `cap`.
pub fn eval_capped(e: &BoundExpr, cap: u64) -> Option<u64> {
    let capped = |x: BigUint| -> Option<u64> { u64::try_from(&x).ok().filter(|&v| v < cap) };
    match e {
        BoundExpr::Int(n) => capped(n.clone()),
        BoundExpr::Add(ts) => {
            let mut acc = BigUint::zero();
            for t in ts {
                acc += eval_capped(t, cap)?;
            }
            capped(acc)
        }
        BoundExpr::Mul(ts) => {
            let vals: Vec<Option<u64>> = ts.iter().map(|t| eval_capped(t, cap)).collect();
            if vals.contains(&Some(0)) {
                return Some(0);
            }
            let mut acc = BigUint::one();
            for v in vals {
                acc *= v?;
            }
            capped(acc)
        }
        BoundExpr::Pow(b, x) => {
            let (b, x) = (eval_capped(b, cap), eval_capped(x, cap));
            match (b, x) {
                (_, Some(0)) => Some(1),
                (Some(0), _) => Some(0),
                (Some(1), _) => Some(1),
                (Some(b), Some(x)) => {
                    let mut acc = BigUint::one();
                    for _ in 0..x {
                        acc *= b;
                        if acc >= BigUint::from(cap) {
                            return None;
                        }
                    }
                    capped(acc)
                }
                _ => None,
            }
        }
        BoundExpr::Fact(a) => {
            let a = eval_capped(a, cap)?;
            let mut acc = BigUint::one();
            for k in 2..=a {
                acc *= k;
                if acc >= BigUint::from(cap) {
                    return None;
                }
            }
            capped(acc)
        }
        BoundExpr::Min(ts) => ts.iter().filter_map(|t| eval_capped(t, cap)).min(),
    }
}

/// Whether `target <= x!`, found by multiplying up to `x`.
pub fn factorial_at_least(x: u64, target: &BigUint) -> bool {
    let mut acc = BigUint::one();
    if &acc >= target {
        return true;
    }
    for k in 2..=x {
        acc *= k;
        if &acc >= target {
            return true;
        }
    }
    false
}

/// Decides `T^l = <n_1, .., n_k> R^l` by enumerating the generated subgroup
/// of `T^l` and the left cosets of `R^l` it meets.
pub fn product_set_covers(t: &Table, r: &[bool], ns: &[Vec<u32>], l: usize) -> bool {
    let size = t.size() as u64;
    // Coset key of x: least index in x R.
    let r_members = members(r);
    let key: Vec<u32> = (0..size as u32)
        .map(|x| r_members.iter().map(|&y| t.m(x, y)).min().unwrap())
        .collect();
    let encode = |v: &[u32]| v.iter().fold(0u64, |a, &x| a * size + x as u64);
    let decode = |mut c: u64| {
        let mut v = vec![0u32; l];
        for j in (0..l).rev() {
            v[j] = (c % size) as u32;
            c /= size;
        }
        v
    };
    let total = size.pow(l as u32) as usize;
    let mut seen = vec![false; total];
    let mut queue = vec![encode(&vec![0u32; l])];
    seen[queue[0] as usize] = true;
    let mut covered: HashSet<Vec<u32>> = HashSet::new();
    let mut head = 0;
    while head < queue.len() {
        let x = decode(queue[head]);
        head += 1;
        covered.insert(x.iter().map(|&c| key[c as usize]).collect());
        for n in ns {
            let y: Vec<u32> = (0..l).map(|j| t.m(x[j], n[j])).collect();
            let c = encode(&y);
            if !seen[c as usize] {
                seen[c as usize] = true;
                queue.push(c);
            }
        }
    }
    let index = size as usize / r_members.len();
    covered.len() == index.pow(l as u32)
}

pub fn perm(images: &[u32]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}
