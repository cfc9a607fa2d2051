//! Standard permutation group constructions.

use num_bigint::BigUint;

use super::PermGroup;
use crate::perm::Permutation;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k))
}

fn cycle_perm(degree: usize, pts: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[pts]).expect("valid cycle")
}

/// `Sym(n)` on `n` points.
pub fn symmetric(n: usize) -> PermGroup {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_perm(n, &[0, 1]));
        let all: Vec<u32> = (0..n as u32).collect();
        gens.push(cycle_perm(n, &all));
    }
    PermGroup::new(n, gens).expect("positive degree").with_order(factorial(n))
}

/// `Alt(n)` on `n` points.
pub fn alternating(n: usize) -> PermGroup {
    let gens: Vec<Permutation> = (2..n as u32).map(|k| cycle_perm(n, &[0, 1, k])).collect();
    let order = if n >= 2 { factorial(n) / BigUint::from(2u32) } else { BigUint::from(1u32) };
    PermGroup::new(n, gens).expect("positive degree").with_order(order)
}

/// Cyclic group generated by an `n`-cycle.
pub fn cyclic(n: usize) -> PermGroup {
    let all: Vec<u32> = (0..n as u32).collect();
    let gens = if n >= 2 { vec![cycle_perm(n, &all)] } else { vec![] };
    PermGroup::new(n, gens).expect("positive degree")
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    let rot = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect()).unwrap();
    let refl = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect()).unwrap();
    PermGroup::new(n, vec![rot, refl]).expect("positive degree")
}

/// `x -> a x + b` over `Z/p` for `a` in the subgroup generated by `mult`.
pub fn affine_line(p: usize, mult: u32) -> PermGroup {
    let p32 = p as u32;
    let t = Permutation::from_images((0..p32).map(|x| (x + 1) % p32).collect()).unwrap();
    let m = Permutation::from_images((0..p32).map(|x| (x * mult) % p32).collect()).unwrap();
    PermGroup::new(p, vec![t, m]).expect("positive degree")
}

/// `PSL(2,7)` on the projective line over `GF(7)`, with infinity as point 7.
pub fn psl27() -> PermGroup {
    let inf = 7u32;
    let shift: Vec<u32> = (0..8).map(|x| if x == inf { inf } else { (x + 1) % 7 }).collect();
    let square: Vec<u32> = (0..8).map(|x| if x == inf { inf } else { (2 * x) % 7 }).collect();
    // x -> -1/x
    let inv = |x: u32| (1..7).find(|y| (x * y) % 7 == 1).unwrap();
    let flip: Vec<u32> = (0..8)
        .map(|x| match x {
            0 => inf,
            7 => 0,
            _ => (7 - inv(x)) % 7,
        })
        .collect();
    let gens = [shift, square, flip]
        .into_iter()
        .map(|v| Permutation::from_images(v).unwrap())
        .collect();
    PermGroup::new(8, gens).expect("degree 8").with_order(BigUint::from(168u32))
}

/// Internal direct product acting on the disjoint union of the two point sets.
pub fn direct_product_disjoint(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (m, n) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(g.extend(m + n));
    }
    for g in b.generators() {
        let mut img: Vec<u32> = (0..m as u32).collect();
        img.extend(g.images().iter().map(|&x| x + m as u32));
        gens.push(Permutation::from_images(img).unwrap());
    }
    PermGroup::new(m + n, gens).expect("positive degree")
}

/// Direct product in product action on pairs `(x, y) -> x * deg(b) + y`.
pub fn direct_product_pairs(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let (m, n) = (a.degree() as u32, b.degree() as u32);
    let mut gens = Vec::new();
    for g in a.generators() {
        let img = (0..m * n).map(|v| g.apply(v / n) * n + v % n).collect();
        gens.push(Permutation::from_images(img).unwrap());
    }
    for g in b.generators() {
        let img = (0..m * n).map(|v| (v / n) * n + g.apply(v % n)).collect();
        gens.push(Permutation::from_images(img).unwrap());
    }
    PermGroup::new((m * n) as usize, gens).expect("positive degree")
}

/// Imprimitive wreath product `inner wr top` on `top.degree()` blocks of
/// size `inner.degree()`; point `(block, x)` is `block * m + x`.
pub fn wreath_imprimitive(inner: &PermGroup, top: &PermGroup) -> PermGroup {
    let m = inner.degree() as u32;
    let k = top.degree() as u32;
    let mut gens = Vec::new();
    for h in inner.generators() {
        let img = (0..m * k)
            .map(|v| if v / m == 0 { h.apply(v % m) } else { v })
            .collect();
        gens.push(Permutation::from_images(img).unwrap());
    }
    for t in top.generators() {
        let img = (0..m * k).map(|v| t.apply(v / m) * m + v % m).collect();
        gens.push(Permutation::from_images(img).unwrap());
    }
    PermGroup::new((m * k) as usize, gens).expect("positive degree")
}

/// Encodes a tuple over `m` symbols; the first coordinate is most significant.
pub fn encode_tuple(tuple: &[u32], m: u32) -> u32 {
    tuple.iter().fold(0, |acc, &a| acc * m + a)
}

pub fn decode_tuple(mut v: u32, m: u32, k: usize) -> Vec<u32> {
    let mut out = vec![0; k];
    for i in (0..k).rev() {
        out[i] = v % m;
        v /= m;
    }
    out
}

/// Wreath product `inner wr top` in product action on `m^k` tuples.
pub fn wreath_product_action(inner: &PermGroup, top: &PermGroup) -> PermGroup {
    let m = inner.degree() as u32;
    let k = top.degree();
    let size = m.pow(k as u32);
    let mut gens = Vec::new();
    for h in inner.generators() {
        let img = (0..size)
            .map(|v| {
                let mut t = decode_tuple(v, m, k);
                t[0] = h.apply(t[0]);
                encode_tuple(&t, m)
            })
            .collect();
        gens.push(Permutation::from_images(img).unwrap());
    }
    for s in top.generators() {
        let img = (0..size)
            .map(|v| {
                let t = decode_tuple(v, m, k);
                let mut u = vec![0; k];
                for i in 0..k {
                    u[s.apply(i as u32) as usize] = t[i];
                }
                encode_tuple(&u, m)
            })
            .collect();
        gens.push(Permutation::from_images(img).unwrap());
    }
    PermGroup::new(size as usize, gens).expect("positive degree")
}

/// Right regular representation of a group, on its sorted element list.
pub fn regular_representation(g: &PermGroup) -> crate::error::Result<PermGroup> {
    let mut elems = g.elements()?;
    elems.sort();
    let index = |x: &Permutation| elems.binary_search(x).expect("closed under products") as u32;
    let gens = g
        .generators()
        .iter()
        .map(|s| Permutation::from_images(elems.iter().map(|x| index(&x.compose(s))).collect()).unwrap())
        .collect();
    Ok(PermGroup::new(elems.len(), gens)?.with_order(g.order()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(6).order(), BigUint::from(720u32));
        assert_eq!(alternating(6).order(), BigUint::from(360u32));
        assert_eq!(dihedral(8).order(), BigUint::from(16u32));
        assert_eq!(cyclic(9).order(), BigUint::from(9u32));
        assert_eq!(affine_line(7, 3).order(), BigUint::from(42u32));
        assert_eq!(psl27().order(), BigUint::from(168u32));
        let s3 = symmetric(3);
        assert_eq!(wreath_product_action(&s3, &symmetric(2)).order(), BigUint::from(72u32));
        assert_eq!(wreath_imprimitive(&symmetric(2), &dihedral(4)).order(), BigUint::from(128u32));
        assert_eq!(direct_product_pairs(&s3, &s3).order(), BigUint::from(36u32));
        assert_eq!(regular_representation(&s3).unwrap().degree(), 6);
    }

    #[test]
    fn psl27_is_verified_without_hint() {
        let g = psl27();
        let plain = PermGroup::new(8, g.generators().to_vec()).unwrap();
        assert_eq!(plain.order(), BigUint::from(168u32));
    }

    #[test]
    fn tuple_coding() {
        for v in 0..125 {
            assert_eq!(encode_tuple(&decode_tuple(v, 5, 3), 5), v);
        }
    }
}
