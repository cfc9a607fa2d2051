//! Stabiliser chains built by Schreier-Sims.
//!
//! A chain is built in two phases: random elements are sifted until the chain
//! stabilises (or reaches a known order), then every Schreier generator is
//! sifted to certify completeness. Transversals are stored as Schreier trees.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::perm::Permutation;

const NONE: u32 = u32::MAX;

/// Largest `degree * orbit_length` (summed over levels) for which explicit
/// transversal elements are materialised.
const EXPLICIT_TRANSVERSAL_LIMIT: usize = 1 << 23;

#[derive(Clone, Debug)]
pub struct Level {
    base: u32,
    gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    orbit: Vec<u32>,
    pos: Vec<u32>,
    /// Indexed by orbit position: (parent point, generator index).
    tree: Vec<(u32, u32)>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Self {
        let mut pos = vec![NONE; degree];
        pos[base as usize] = 0;
        Level {
            base,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: vec![base],
            pos,
            tree: vec![(base, NONE)],
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        let k = self.gens.len();
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        let old_len = self.orbit.len();
        let mut idx = 0;
        while idx < self.orbit.len() {
            let p = self.orbit[idx];
            let range = if idx < old_len { k..k + 1 } else { 0..self.gens.len() };
            for s in range {
                let q = self.gens[s].apply(p);
                if self.pos[q as usize] == NONE {
                    self.pos[q as usize] = self.orbit.len() as u32;
                    self.orbit.push(q);
                    self.tree.push((p, s as u32));
                }
            }
            idx += 1;
        }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn contains_point(&self, p: u32) -> bool {
        self.pos[p as usize] != NONE
    }

    pub fn position(&self, p: u32) -> Option<usize> {
        let i = self.pos[p as usize];
        (i != NONE).then_some(i as usize)
    }

    /// Returns `g * u_beta^-1` where `u_beta` maps the base point to `beta`.
    fn strip(&self, mut g: Permutation, mut beta: u32) -> Permutation {
        while beta != self.base {
            let (parent, s) = self.tree[self.pos[beta as usize] as usize];
            g = g.compose(&self.inv_gens[s as usize]);
            beta = parent;
        }
        g
    }

    /// Transversal element mapping the base point to `beta`.
    pub fn transversal(&self, beta: u32) -> Permutation {
        let mut path = Vec::new();
        let mut b = beta;
        while b != self.base {
            let (parent, s) = self.tree[self.pos[b as usize] as usize];
            path.push(s);
            b = parent;
        }
        let mut g = Permutation::identity(self.pos.len());
        for &s in path.iter().rev() {
            g = g.compose(&self.gens[s as usize]);
        }
        g
    }
}

#[derive(Debug)]
struct Explicit {
    u: Vec<Vec<Permutation>>,
    uinv: Vec<Vec<Permutation>>,
}

#[derive(Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    explicit: OnceLock<Option<Explicit>>,
}

impl Clone for StabChain {
    fn clone(&self) -> Self {
        StabChain {
            degree: self.degree,
            levels: self.levels.clone(),
            explicit: OnceLock::new(),
        }
    }
}

/// Product-replacement random element generator.
struct RandomSource {
    state: Vec<Permutation>,
    acc: Permutation,
    rng: ChaCha8Rng,
}

impl RandomSource {
    fn new(degree: usize, gens: &[Permutation], seed: u64) -> Self {
        let mut state: Vec<Permutation> = gens.to_vec();
        if !state.is_empty() {
            while state.len() < 10 {
                let k = state.len() % gens.len();
                state.push(gens[k].clone());
            }
        }
        let mut src = RandomSource {
            state,
            acc: Permutation::identity(degree),
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        for _ in 0..60 {
            src.next();
        }
        src
    }

    fn next(&mut self) -> Permutation {
        let n = self.state.len();
        if n == 0 {
            return self.acc.clone();
        }
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let v = if self.rng.gen_bool(0.5) {
            self.state[i].compose(&self.state[j])
        } else {
            self.state[j].compose(&self.state[i])
        };
        self.state[i] = if self.rng.gen_bool(0.5) { v } else { v.inverse() };
        self.acc = self.acc.compose(&self.state[i]);
        self.acc.clone()
    }
}

impl StabChain {
    /// Builds a chain whose base starts with `prefix`.
    ///
    /// `order_hint`, when given, must be the true group order; it lets the
    /// random phase stop without the Schreier generator check.
    pub fn build(
        degree: usize,
        gens: &[Permutation],
        prefix: &[u32],
        order_hint: Option<&BigUint>,
        seed: u64,
    ) -> StabChain {
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            explicit: OnceLock::new(),
        };
        let mut seen = vec![false; degree];
        let mut current: Vec<Permutation> = gens.clone();
        for &b in prefix {
            if seen[b as usize] {
                continue;
            }
            seen[b as usize] = true;
            chain.push_level(b, &current);
            current.retain(|g| g.fixes(b));
        }
        while let Some(g) = current.first() {
            let b = g.first_moved().expect("non-identity generator");
            chain.push_level(b, &current);
            current.retain(|g| g.fixes(b));
        }

        if !gens.is_empty() {
            let reached = chain.random_phase(&gens, order_hint, seed);
            if !reached {
                chain.complete();
            }
        }
        chain
    }

    fn push_level(&mut self, base: u32, gens: &[Permutation]) {
        let mut level = Level::new(base, self.degree);
        for g in gens {
            level.add_gen(g.clone());
        }
        self.levels.push(level);
    }

    fn random_phase(&mut self, gens: &[Permutation], hint: Option<&BigUint>, seed: u64) -> bool {
        let mut src = RandomSource::new(self.degree, gens, seed);
        let mut quiet = 0usize;
        let max_quiet = if hint.is_some() { 200 } else { 12 };
        let mut tries = 0usize;
        loop {
            if let Some(h) = hint {
                let ord = self.order();
                if &ord == h {
                    return true;
                }
                if &ord > h {
                    return false;
                }
            }
            if quiet >= max_quiet || tries > 20_000 {
                return false;
            }
            tries += 1;
            let g = src.next();
            let (r, j) = self.sift_from(g, 0);
            if r.is_identity() {
                quiet += 1;
            } else {
                quiet = 0;
                self.add_strong(r, j, 1);
            }
        }
    }

    /// Adds a residue that fixes the first `j` base points to levels `from..=j`.
    fn add_strong(&mut self, r: Permutation, j: usize, from: usize) {
        if j == self.levels.len() {
            let b = r.first_moved().expect("non-identity residue");
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from.min(j)..=j {
            self.levels[l].add_gen(r.clone());
        }
    }

    /// Deterministic completion: sift every Schreier generator.
    fn complete(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.find_failing_schreier(i) {
                Some((r, j)) => {
                    self.add_strong(r, j, i + 1);
                    i = j;
                }
                None => {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                }
            }
        }
    }

    fn find_failing_schreier(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for &beta in &level.orbit {
            let u = level.transversal(beta);
            for (s, g) in level.gens.iter().enumerate() {
                let img = g.apply(beta);
                let img_idx = level.pos[img as usize] as usize;
                if level.tree[img_idx] == (beta, s as u32) {
                    continue;
                }
                let h = level.strip(u.compose(g), img);
                if h.is_identity() {
                    continue;
                }
                let (r, j) = self.sift_from(h, i + 1);
                if !r.is_identity() {
                    return Some((r, j));
                }
            }
        }
        None
    }

    /// Sifts `g` starting at level `from`. Returns the residue and the level
    /// where sifting stopped.
    pub fn sift_from(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.base);
            if level.pos[beta as usize] == NONE {
                return (g, i);
            }
            g = level.strip(g, beta);
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(g.clone(), 0).0.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as `u64` if it fits.
    pub fn order_u64(&self) -> Option<u64> {
        let mut acc: u64 = 1;
        for l in &self.levels {
            acc = acc.checked_mul(l.orbit.len() as u64)?;
        }
        Some(acc)
    }

    /// Chain for the pointwise stabiliser of the first `k` base points.
    pub fn suffix(&self, k: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[k.min(self.levels.len())..].to_vec(),
            explicit: OnceLock::new(),
        }
    }

    /// Generators of the pointwise stabiliser of the first `k` base points.
    pub fn stabiliser_gens(&self, k: usize) -> Vec<Permutation> {
        self.levels.get(k).map(|l| l.gens.clone()).unwrap_or_default()
    }

    fn explicit(&self) -> Option<&Explicit> {
        self.explicit
            .get_or_init(|| {
                let cost: usize = self.levels.iter().map(|l| l.orbit.len()).sum::<usize>() * self.degree;
                if cost > EXPLICIT_TRANSVERSAL_LIMIT {
                    return None;
                }
                let mut u = Vec::with_capacity(self.levels.len());
                let mut uinv = Vec::with_capacity(self.levels.len());
                for level in &self.levels {
                    let mut lu: Vec<Permutation> = Vec::with_capacity(level.orbit.len());
                    lu.push(Permutation::identity(self.degree));
                    for idx in 1..level.orbit.len() {
                        let (parent, s) = level.tree[idx];
                        let pu = &lu[level.pos[parent as usize] as usize];
                        let next = pu.compose(&level.gens[s as usize]);
                        lu.push(next);
                    }
                    uinv.push(lu.iter().map(|p| p.inverse()).collect());
                    u.push(lu);
                }
                Some(Explicit { u, uinv })
            })
            .as_ref()
    }

    /// Transversal element at `level` for orbit position `idx`.
    fn u(&self, level: usize, idx: usize) -> Permutation {
        match self.explicit() {
            Some(e) => e.u[level][idx].clone(),
            None => {
                let l = &self.levels[level];
                l.transversal(l.orbit[idx])
            }
        }
    }

    /// Coordinates of `g` in the chain, or `None` if `g` is not in the group.
    pub fn index_of(&self, g: &Permutation) -> Option<u64> {
        let explicit = self.explicit();
        let mut g = g.clone();
        let mut idx: u64 = 0;
        let mut radix: u64 = 1;
        for (i, level) in self.levels.iter().enumerate() {
            let beta = g.apply(level.base);
            let p = level.pos[beta as usize];
            if p == NONE {
                return None;
            }
            g = match explicit {
                Some(e) => g.compose(&e.uinv[i][p as usize]),
                None => level.strip(g, beta),
            };
            idx += p as u64 * radix;
            radix = radix.saturating_mul(level.orbit.len() as u64);
        }
        g.is_identity().then_some(idx)
    }

    /// The element with chain coordinates `index`.
    pub fn element(&self, mut index: u64) -> Permutation {
        let mut coords = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let len = level.orbit.len() as u64;
            coords.push((index % len) as usize);
            index /= len;
        }
        let mut g = Permutation::identity(self.degree);
        for i in (0..self.levels.len()).rev() {
            g = g.compose(&self.u(i, coords[i]));
        }
        g
    }

    /// Visits every element in index order. Stops early if `f` returns false.
    pub fn for_each_element(&self, mut f: impl FnMut(u64, &Permutation) -> bool) {
        let k = self.levels.len();
        if k == 0 {
            f(0, &Permutation::identity(self.degree));
            return;
        }
        let mut radix = vec![1u64; k];
        for i in 1..k {
            radix[i] = radix[i - 1] * self.levels[i - 1].orbit.len() as u64;
        }
        let mut partial = vec![Permutation::identity(self.degree); k + 1];
        let mut coords = vec![0usize; k];
        // partial[i] = u_{k-1} ... u_i, computed top-down.
        fn rec(
            chain: &StabChain,
            i: usize,
            radix: &[u64],
            partial: &mut Vec<Permutation>,
            coords: &mut Vec<usize>,
            f: &mut dyn FnMut(u64, &Permutation) -> bool,
        ) -> bool {
            let len = chain.levels[i].orbit.len();
            for c in 0..len {
                coords[i] = c;
                partial[i] = partial[i + 1].compose(&chain.u(i, c));
                if i == 0 {
                    let idx: u64 = coords.iter().zip(radix).map(|(&c, &r)| c as u64 * r).sum();
                    if !f(idx, &partial[0]) {
                        return false;
                    }
                } else if !rec(chain, i - 1, radix, partial, coords, f) {
                    return false;
                }
            }
            true
        }
        rec(self, k - 1, &radix, &mut partial, &mut coords, &mut f);
    }

    /// Uniformly random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for i in (0..self.levels.len()).rev() {
            let c = rng.gen_range(0..self.levels[i].orbit.len());
            g = g.compose(&self.u(i, c));
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> Vec<Permutation> {
        let cycle: Vec<u32> = (0..n as u32).collect();
        vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&cycle]).unwrap(),
        ]
    }

    #[test]
    fn symmetric_orders() {
        let mut f = 1u64;
        for n in 2..=8 {
            f *= n as u64;
            let c = StabChain::build(n, &sym(n), &[], None, 7);
            assert_eq!(c.order(), BigUint::from(f), "Sym({n})");
        }
    }

    #[test]
    fn prefix_is_respected() {
        let c = StabChain::build(6, &sym(6), &[4, 2], None, 1);
        assert_eq!(&c.base()[..2], &[4, 2]);
        assert_eq!(c.order(), BigUint::from(720u32));
        let stab = c.stabiliser_gens(2);
        assert!(stab.iter().all(|g| g.fixes(4) && g.fixes(2)));
    }

    #[test]
    fn hint_matches_verified_chain() {
        let gens = sym(7);
        let hinted = StabChain::build(7, &gens, &[3], Some(&BigUint::from(5040u32)), 9);
        assert_eq!(hinted.order(), BigUint::from(5040u32));
    }

    #[test]
    fn enumeration_is_a_bijection() {
        let c = StabChain::build(5, &sym(5), &[], None, 3);
        let mut all = Vec::new();
        c.for_each_element(|i, g| {
            assert_eq!(c.index_of(g), Some(i));
            assert_eq!(&c.element(i), g);
            all.push(g.clone());
            true
        });
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 120);
    }

    #[test]
    fn membership() {
        // Alt(5) does not contain a transposition.
        let a5 = vec![
            Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        ];
        let c = StabChain::build(5, &a5, &[], None, 11);
        assert_eq!(c.order(), BigUint::from(60u32));
        assert!(!c.contains(&Permutation::from_cycles(5, &[&[0, 1]]).unwrap()));
        assert!(c.contains(&Permutation::from_cycles(5, &[&[0, 1], &[2, 3]]).unwrap()));
    }
}
