//! Bound functions of the valency and the transformations between them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::expr::BoundExpr;
use crate::error::{Error, Result};

/// A function from valency to a bound, given as a constant, a finite table
/// or a closure producing an expression.
#[derive(Clone)]
pub enum BoundFn {
    Const(BigUint),
    Table(BTreeMap<u64, BigUint>),
    Closure(Arc<dyn Fn(u64) -> BoundExpr + Send + Sync>),
}

impl fmt::Debug for BoundFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundFn::Const(c) => write!(f, "Const({c})"),
            BoundFn::Table(t) => write!(f, "Table({t:?})"),
            BoundFn::Closure(_) => write!(f, "Closure"),
        }
    }
}

impl BoundFn {
    pub fn constant(c: u64) -> Self {
        BoundFn::Const(BigUint::from(c))
    }

    pub fn closure(f: impl Fn(u64) -> BoundExpr + Send + Sync + 'static) -> Self {
        BoundFn::Closure(Arc::new(f))
    }

    pub fn at(&self, d: u64) -> Result<BoundExpr> {
        match self {
            BoundFn::Const(c) => Ok(BoundExpr::Int(c.clone())),
            BoundFn::Table(t) => t
                .get(&d)
                .map(|v| BoundExpr::Int(v.clone()))
                .ok_or_else(|| Error::invalid(format!("bound table has no entry for d = {d}"))),
            BoundFn::Closure(f) => Ok(f(d)),
        }
    }
}

fn int(x: u64) -> BoundExpr {
    BoundExpr::int(x)
}

/// Least `d'` with `(d'-1)(d'-2) < d <= d'(d'-1)`.
pub fn dprime(d: u64) -> u64 {
    let mut k = 1u64;
    while k * (k - 1) < d {
        k += 1;
    }
    k
}

/// `d^(f1(d) - 1) * (d * f1(d)^2 * f2(d))!`. `f1` must evaluate exactly.
pub fn f3(f1: &BoundFn, f2: &BoundFn, d: u64) -> Result<BoundExpr> {
    let a = f1
        .at(d)?
        .exact_value()
        .ok_or_else(|| Error::invalid("f1 must evaluate to an exact integer"))?;
    if a == BigUint::from(0u32) {
        return Err(Error::invalid("f1 must be positive"));
    }
    let a_minus_one = BoundExpr::Int(&a - 1u32);
    let a = BoundExpr::Int(a);
    Ok(BoundExpr::mul(vec![
        BoundExpr::pow(int(d), a_minus_one),
        BoundExpr::fact(BoundExpr::mul(vec![int(d), BoundExpr::pow(a, int(2)), f2.at(d)?])),
    ]))
}

/// `(d * g(d)^(d^d * g(d)^(2d)))!`.
pub fn f_hat(g: &BoundFn, d: u64) -> Result<BoundExpr> {
    let gd = g.at(d)?;
    let exponent = BoundExpr::mul(vec![BoundExpr::pow(int(d), int(d)), BoundExpr::pow(gd.clone(), int(2 * d))]);
    Ok(BoundExpr::fact(BoundExpr::mul(vec![int(d), BoundExpr::pow(gd, exponent)])))
}

/// `f(d')` with `d'` as in [`dprime`].
pub fn f_tilde(f: &BoundFn, d: u64) -> Result<BoundExpr> {
    f.at(dprime(d))
}

/// With `d0 = d(d-1)`: `(d0 * (g1 g2)^(d0^d0 * min(g1, g2)^(2 d0)))!`, the
/// functions evaluated at `d0`.
pub fn g_star(g1: &BoundFn, g2: &BoundFn, d: u64) -> Result<BoundExpr> {
    let d0 = d * d.saturating_sub(1);
    let (a, b) = (g1.at(d0)?, g2.at(d0)?);
    let exponent = BoundExpr::mul(vec![
        BoundExpr::pow(int(d0), int(d0)),
        BoundExpr::pow(BoundExpr::min(vec![a.clone(), b.clone()]), int(2 * d0)),
    ]);
    Ok(BoundExpr::fact(BoundExpr::mul(vec![
        int(d0),
        BoundExpr::pow(BoundExpr::mul(vec![a, b]), exponent),
    ])))
}

/// `d!`, the bound for pairs with a regular normal subgroup.
pub fn regular_normal_bound(d: u64) -> BoundExpr {
    BoundExpr::fact(int(d))
}

/// `(d * d!)!`, the bound when a proper product of socle factors is regular.
pub fn cofactor_regular_bound(d: u64) -> BoundExpr {
    BoundExpr::fact(BoundExpr::mul(vec![int(d), BoundExpr::fact(int(d))]))
}

/// `d! (d-1)!`, the bound when a vertex stabiliser is transitive on the far half.
pub fn transitive_far_half_bound(d: u64) -> BoundExpr {
    BoundExpr::mul(vec![BoundExpr::fact(int(d)), BoundExpr::fact(int(d.saturating_sub(1)))])
}

/// `(d(d-1))!`.
pub fn abelian_pair_bound(d: u64) -> BoundExpr {
    BoundExpr::fact(int(d * d.saturating_sub(1)))
}

/// `(d^2 ((d(d-1))!)^2)!`.
pub fn surjective_projection_bound(d: u64) -> BoundExpr {
    BoundExpr::fact(BoundExpr::mul(vec![
        BoundExpr::pow(int(d), int(2)),
        BoundExpr::pow(abelian_pair_bound(d), int(2)),
    ]))
}

/// `d^d * r^(2d)`, the cap on the number of factors in a product action.
pub fn factor_count_bound(d: u64, r: &BigUint) -> BoundExpr {
    BoundExpr::mul(vec![
        BoundExpr::pow(int(d), int(d)),
        BoundExpr::pow(BoundExpr::Int(r.clone()), int(2 * d)),
    ])
}
