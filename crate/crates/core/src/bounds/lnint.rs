//! Rigorous enclosures of natural logarithms as dyadic rationals.
//!
//! `ln y` for `y` in `[1, 2)` uses `2 atanh((y-1)/(y+1))` evaluated in
//! fixed point with directed rounding and an explicit tail bound. Factorials
//! use Robbins' form of Stirling's formula.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

/// Integers up to this many bits are handled without truncation.
fn keep_bits(prec: u32) -> u64 {
    prec as u64 + 24
}

fn work_bits(prec: u32) -> u32 {
    prec + 40
}

fn pow2(k: u32) -> BigUint {
    BigUint::one() << k
}

fn scaled(num: BigInt, w: u32) -> Q {
    Q::new(num, BigInt::from(pow2(w)))
}

/// Largest dyadic with denominator `2^prec` not above `q`.
pub fn round_down(q: &Q, prec: u32) -> Q {
    let s = q * Q::from_integer(BigInt::from(pow2(prec)));
    scaled(s.floor().to_integer(), prec)
}

/// Smallest dyadic with denominator `2^prec` not below `q`.
pub fn round_up(q: &Q, prec: u32) -> Q {
    let s = q * Q::from_integer(BigInt::from(pow2(prec)));
    scaled(s.ceil().to_integer(), prec)
}

/// Bounds on `2 * sum_j z^(2j+1)/(2j+1)` scaled by `2^w`, given
/// `zlo = floor(z 2^w)`, for `0 <= z <= 1/3`.
fn atanh_scaled(zlo: &BigUint, w: u32) -> (BigUint, BigUint) {
    let one_w = pow2(w);
    let zhi = zlo + 1u32;

    let mut lo = BigUint::zero();
    let z2 = (zlo * zlo) >> w;
    let mut t = zlo.clone();
    let mut j: u32 = 0;
    while !t.is_zero() {
        lo += &t / BigUint::from(2 * j + 1);
        t = (&t * &z2) >> w;
        j += 1;
    }

    let mut hi = BigUint::zero();
    let z2h = (&zhi * &zhi + &one_w - 1u32) >> w;
    let mut t = zhi;
    let stop = BigUint::one();
    let mut j: u32 = 0;
    while t > stop {
        hi += (&t + BigUint::from(2 * j)) / BigUint::from(2 * j + 1);
        t = (&t * &z2h + &one_w - 1u32) >> w;
        j += 1;
    }
    // Tail: sum over the rest is at most t * 1/(1 - z^2) <= 2t.
    hi += 2u32 * t + 1u32;
    (lo << 1, hi << 1)
}

/// Bounds on `ln(a/b)` for `b <= a < 2b`.
fn ln_ratio_near_one(a: &BigUint, b: &BigUint, prec: u32) -> (Q, Q) {
    if a == b {
        return (Q::zero(), Q::zero());
    }
    let w = work_bits(prec);
    let zlo = ((a - b) << w) / (a + b);
    let (lo, hi) = atanh_scaled(&zlo, w);
    (scaled(BigInt::from(lo), w), scaled(BigInt::from(hi), w))
}

/// Bounds on `ln 2`.
pub fn ln2(prec: u32) -> (Q, Q) {
    let w = work_bits(prec);
    let zlo = pow2(w) / 3u32;
    let (lo, hi) = atanh_scaled(&zlo, w);
    (scaled(BigInt::from(lo), w), scaled(BigInt::from(hi), w))
}

/// `ln m` for moderately sized `m >= 1`, without truncation.
fn ln_exact_size(m: &BigUint, prec: u32) -> (Q, Q) {
    let s = m.bits() - 1;
    let base = pow2(s as u32);
    let (flo, fhi) = ln_ratio_near_one(m, &base, prec);
    let (l2lo, l2hi) = ln2(prec);
    let s_q = Q::from_integer(BigInt::from(s));
    (&s_q * l2lo + flo, s_q * l2hi + fhi)
}

/// Bounds on `ln n` for `n >= 1`.
pub fn ln_uint(n: &BigUint, prec: u32) -> (Q, Q) {
    assert!(!n.is_zero(), "ln of zero");
    if n.is_one() {
        return (Q::zero(), Q::zero());
    }
    let bits = n.bits();
    let keep = keep_bits(prec);
    if bits <= keep {
        return ln_exact_size(n, prec);
    }
    let t = bits - keep;
    let m = n >> t;
    let (lo, _) = ln_exact_size(&m, prec);
    let (_, hi) = ln_exact_size(&(m + 1u32), prec);
    let (l2lo, l2hi) = ln2(prec);
    let t_q = Q::from_integer(BigInt::from(t));
    (
        round_down(&(lo + &t_q * l2lo), prec),
        round_up(&(hi + t_q * l2hi), prec),
    )
}

const PI_DIGITS: &str = "3141592653589793238462643383279502884197169399375105820974944";

/// Bounds on `ln pi`.
pub fn ln_pi(prec: u32) -> (Q, Q) {
    let digits = PI_DIGITS.len() as u32 - 1;
    let num: BigUint = PI_DIGITS.parse().expect("digits");
    let den = BigUint::from(10u32).pow(digits);
    // pi/2 lies in [num/(2 den), (num+1)/(2 den)).
    let two_den = &den * 2u32;
    let (lo, _) = ln_ratio_near_one(&num, &two_den, prec);
    let (_, hi) = ln_ratio_near_one(&(num + 1u32), &two_den, prec);
    let (l2lo, l2hi) = ln2(prec);
    (lo + l2lo, hi + l2hi)
}

/// Arguments up to this size have their factorial computed exactly.
const EXACT_FACTORIAL_LIMIT: u64 = 2000;

/// Bounds on `ln n!`.
pub fn ln_factorial(n: &BigUint, prec: u32) -> (Q, Q) {
    if n <= &BigUint::one() {
        return (Q::zero(), Q::zero());
    }
    if let Some(k) = n.to_u64().filter(|&k| k <= EXACT_FACTORIAL_LIMIT) {
        let f = (2..=k).fold(BigUint::one(), |acc, i| acc * i);
        return ln_uint(&f, prec);
    }
    // n ln n - n + (ln 2 + ln pi + ln n)/2 + r, with 1/(12n+1) < r < 1/(12n).
    let (lnlo, lnhi) = ln_uint(n, prec);
    let (l2lo, l2hi) = ln2(prec);
    let (lplo, lphi) = ln_pi(prec);
    let nq = Q::from_integer(BigInt::from(n.clone()));
    let half = Q::new(BigInt::one(), BigInt::from(2));
    let twelve_n = BigInt::from(n.clone()) * 12;
    let lo = &nq * &lnlo - &nq + &half * (l2lo + lplo + &lnlo) + Q::new(BigInt::one(), &twelve_n + 1);
    let hi = &nq * &lnhi - &nq + &half * (l2hi + lphi + &lnhi) + Q::new(BigInt::one(), twelve_n);
    (round_down(&lo, prec), round_up(&hi, prec))
}

/// Multiplies a (possibly huge) non-negative integer by a rational.
pub fn mul_int(k: &BigUint, q: &Q) -> Q {
    Q::from_integer(BigInt::from(k.clone())) * q
}

pub fn is_nonneg(q: &Q) -> bool {
    !q.is_negative()
}
