//! Symbolic bound expressions with saturating value bounds and log enclosures.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::lnint::{self, Q};
use crate::error::{Error, Result};

/// Values are tracked exactly up to `2^SATURATION_BITS`.
pub const SATURATION_BITS: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundExpr {
    Int(BigUint),
    Add(Vec<BoundExpr>),
    Mul(Vec<BoundExpr>),
    Pow(Box<BoundExpr>, Box<BoundExpr>),
    Fact(Box<BoundExpr>),
    Min(Vec<BoundExpr>),
}

impl BoundExpr {
    pub fn int(n: impl Into<BigUint>) -> Self {
        BoundExpr::Int(n.into())
    }

    pub fn add(terms: Vec<BoundExpr>) -> Self {
        BoundExpr::Add(terms)
    }

    pub fn mul(terms: Vec<BoundExpr>) -> Self {
        BoundExpr::Mul(terms)
    }

    pub fn pow(base: BoundExpr, exp: BoundExpr) -> Self {
        BoundExpr::Pow(Box::new(base), Box::new(exp))
    }

    pub fn fact(arg: BoundExpr) -> Self {
        BoundExpr::Fact(Box::new(arg))
    }

    pub fn min(terms: Vec<BoundExpr>) -> Self {
        BoundExpr::Min(terms)
    }

    /// Exact value, if it fits under the saturation cap.
    pub fn exact_value(&self) -> Option<BigUint> {
        let e = self.eval(&EvalConfig::default());
        e.exact().cloned()
    }

    pub fn eval(&self, cfg: &EvalConfig) -> Eval {
        let prec = cfg.precision;
        let mut out = match self {
            BoundExpr::Int(n) => Eval::from_int(n.clone(), prec),
            BoundExpr::Add(ts) => {
                let es: Vec<Eval> = ts.iter().map(|t| t.eval(cfg)).collect();
                let lo = sat(es.iter().fold(BigUint::zero(), |a, e| a + &e.lo));
                let hi = es
                    .iter()
                    .try_fold(BigUint::zero(), |a, e| e.hi.as_ref().map(|h| a + h))
                    .and_then(cap);
                // ln of a sum lies between the largest ln and that plus ln(k).
                let ln_lo = es.iter().map(|e| e.ln_lo.clone()).fold(None, max_opt_lo);
                let ln_hi = if es.iter().all(|e| e.ln_hi.is_some()) {
                    let m = es.iter().filter_map(|e| e.ln_hi.clone()).max();
                    m.map(|m| {
                        let k = BigUint::from(es.len().max(1));
                        m + lnint::ln_uint(&k, prec).1
                    })
                } else {
                    None
                };
                Eval { lo, hi, ln_lo, ln_hi }
            }
            BoundExpr::Mul(ts) => {
                let es: Vec<Eval> = ts.iter().map(|t| t.eval(cfg)).collect();
                let lo = es.iter().fold(BigUint::one(), |a, e| sat(a * &e.lo));
                let any_zero = es.iter().any(|e| e.hi.as_ref().is_some_and(|h| h.is_zero()));
                let hi = if any_zero {
                    Some(BigUint::zero())
                } else {
                    es.iter()
                        .try_fold(BigUint::one(), |a, e| e.hi.as_ref().and_then(|h| cap(a * h)))
                };
                let (ln_lo, ln_hi) = if any_zero {
                    (None, Some(Q::zero()))
                } else {
                    let lo = es.iter().try_fold(Q::zero(), |a, e| e.ln_lo.as_ref().map(|l| a + l));
                    let hi = es.iter().try_fold(Q::zero(), |a, e| e.ln_hi.as_ref().map(|h| a + h));
                    (lo, hi)
                };
                Eval { lo, hi, ln_lo, ln_hi }
            }
            BoundExpr::Pow(b, x) => {
                let eb = b.eval(cfg);
                let ex = x.eval(cfg);
                let lo = if eb.lo >= BigUint::one() {
                    sat_pow(&eb.lo, &ex.lo)
                } else if ex.hi.as_ref().is_some_and(|h| h.is_zero()) {
                    BigUint::one()
                } else {
                    BigUint::zero()
                };
                let exp_zero = ex.hi.as_ref().is_some_and(|h| h.is_zero());
                let hi = match (&eb.hi, &ex.hi) {
                    _ if exp_zero => Some(BigUint::one()),
                    (Some(bh), _) if bh.is_zero() && !ex.lo.is_zero() => Some(BigUint::zero()),
                    (Some(bh), _) if bh <= &BigUint::one() => Some(BigUint::one()),
                    (Some(bh), Some(xh)) => exact_pow(bh, xh),
                    _ => None,
                };
                let ln_lo = if eb.lo >= BigUint::one() {
                    eb.ln_lo.as_ref().map(|l| lnint::mul_int(&ex.lo, l))
                } else {
                    None
                };
                let ln_hi = match (&eb.ln_hi, &ex.hi) {
                    _ if exp_zero => Some(Q::zero()),
                    (Some(l), _) if !lnint::is_nonneg(l) || l.is_zero() => Some(Q::zero()),
                    (None, _) if eb.hi.as_ref().is_some_and(|h| h <= &BigUint::one()) => Some(Q::zero()),
                    (Some(l), Some(xh)) => Some(lnint::mul_int(xh, l)),
                    _ => None,
                };
                Eval { lo, hi, ln_lo, ln_hi }
            }
            BoundExpr::Fact(a) => {
                let ea = a.eval(cfg);
                let lo = sat_factorial(&ea.lo);
                let hi = ea.hi.as_ref().and_then(exact_factorial);
                let ln_lo = Some(lnint::ln_factorial(&ea.lo, prec).0);
                let ln_hi = ea.hi.as_ref().map(|h| lnint::ln_factorial(h, prec).1);
                Eval { lo, hi, ln_lo, ln_hi }
            }
            BoundExpr::Min(ts) => {
                let es: Vec<Eval> = ts.iter().map(|t| t.eval(cfg)).collect();
                let lo = es.iter().map(|e| e.lo.clone()).min().unwrap_or_default();
                let hi = es.iter().filter_map(|e| e.hi.clone()).min();
                let ln_lo = if es.iter().any(|e| e.ln_lo.is_none()) {
                    None
                } else {
                    es.iter().filter_map(|e| e.ln_lo.clone()).min()
                };
                let ln_hi = es.iter().filter_map(|e| e.ln_hi.clone()).min();
                Eval { lo, hi, ln_lo, ln_hi }
            }
        };
        if cfg.use_values {
            out.tighten_from_values(prec);
        }
        out.round(prec);
        out
    }
}

fn max_opt_lo(a: Option<Q>, b: Option<Q>) -> Option<Q> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn sat_limit() -> BigUint {
    BigUint::one() << SATURATION_BITS
}

/// Caps a lower bound at `2^SATURATION_BITS`.
fn sat(x: BigUint) -> BigUint {
    if x.bits() > SATURATION_BITS {
        sat_limit()
    } else {
        x
    }
}

/// Drops an upper bound that exceeds the cap.
fn cap(x: BigUint) -> Option<BigUint> {
    (x.bits() <= SATURATION_BITS).then_some(x)
}

fn sat_pow(b: &BigUint, e: &BigUint) -> BigUint {
    if b <= &BigUint::one() || e.is_zero() {
        return if e.is_zero() { BigUint::one() } else { b.clone() };
    }
    let lower_bits = (b.bits() - 1) as u128;
    match e.to_u64() {
        Some(k) if lower_bits * k as u128 <= SATURATION_BITS as u128 => sat(b.pow(k as u32)),
        _ => sat_limit(),
    }
}

fn exact_pow(b: &BigUint, e: &BigUint) -> Option<BigUint> {
    if b <= &BigUint::one() || e.is_zero() {
        return Some(if e.is_zero() { BigUint::one() } else { b.clone() });
    }
    let k = e.to_u64()?;
    if (b.bits() - 1) as u128 * k as u128 > SATURATION_BITS as u128 {
        return None;
    }
    cap(b.pow(k as u32))
}

fn sat_factorial(n: &BigUint) -> BigUint {
    let Some(k) = n.to_u64() else { return sat_limit() };
    let mut acc = BigUint::one();
    for i in 2..=k {
        acc *= i;
        if acc.bits() > SATURATION_BITS {
            return sat_limit();
        }
    }
    acc
}

fn exact_factorial(n: &BigUint) -> Option<BigUint> {
    let k = n.to_u64()?;
    let mut acc = BigUint::one();
    for i in 2..=k {
        acc *= i;
        if acc.bits() > SATURATION_BITS {
            return None;
        }
    }
    Some(acc)
}

#[derive(Clone, Debug)]
pub struct EvalConfig {
    /// Use exact value bounds when available (otherwise log enclosures only).
    pub use_values: bool,
    /// Dyadic precision of log enclosures, in bits.
    pub precision: u32,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            use_values: true,
            precision: 128,
        }
    }
}

impl EvalConfig {
    pub fn log_only() -> Self {
        EvalConfig {
            use_values: false,
            precision: 128,
        }
    }
}

/// Bounds on the value of an expression. `lo` is always a valid lower bound
/// (saturated at the cap); `hi` is `None` when unknown. `ln_lo = None` means
/// minus infinity and `ln_hi = None` means plus infinity.
#[derive(Clone, Debug)]
pub struct Eval {
    pub lo: BigUint,
    pub hi: Option<BigUint>,
    pub ln_lo: Option<Q>,
    pub ln_hi: Option<Q>,
}

impl Eval {
    fn from_int(n: BigUint, prec: u32) -> Eval {
        let (ln_lo, ln_hi) = if n.is_zero() {
            (None, Some(Q::zero()))
        } else {
            let (a, b) = lnint::ln_uint(&n, prec);
            (Some(a), Some(b))
        };
        let hi = cap(n.clone());
        Eval { lo: sat(n), hi, ln_lo, ln_hi }
    }

    pub fn exact(&self) -> Option<&BigUint> {
        self.hi.as_ref().filter(|h| *h == &self.lo)
    }

    fn tighten_from_values(&mut self, prec: u32) {
        if !self.lo.is_zero() {
            let l = lnint::ln_uint(&self.lo, prec).0;
            self.ln_lo = Some(match self.ln_lo.take() {
                Some(x) => x.max(l),
                None => l,
            });
        }
        if let Some(h) = &self.hi {
            if h.is_zero() {
                self.ln_lo = None;
                self.ln_hi = Some(Q::zero());
            } else {
                let u = lnint::ln_uint(h, prec).1;
                self.ln_hi = Some(match self.ln_hi.take() {
                    Some(x) => x.min(u),
                    None => u,
                });
            }
        }
    }

    fn round(&mut self, prec: u32) {
        if let Some(l) = &self.ln_lo {
            self.ln_lo = Some(lnint::round_down(l, prec));
        }
        if let Some(h) = &self.ln_hi {
            self.ln_hi = Some(lnint::round_up(h, prec));
        }
    }
}

/// Outcome of comparing an integer `v` with a bound `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CmpResult {
    /// `v <= b` certainly.
    LessOrEqual,
    /// `v > b` certainly.
    Greater,
    Undecided,
}

const PRECISIONS: [u32; 4] = [64, 128, 256, 512];

/// Decides `v <= b`, refining precision until decided or the budget ends.
pub fn cmp_bound(b: &BoundExpr, v: &BigUint, cfg: &EvalConfig) -> CmpResult {
    if v.is_zero() {
        return CmpResult::LessOrEqual;
    }
    for &prec in &PRECISIONS {
        let c = EvalConfig {
            precision: prec,
            ..cfg.clone()
        };
        let e = b.eval(&c);
        if cfg.use_values {
            if v <= &e.lo {
                return CmpResult::LessOrEqual;
            }
            if let Some(h) = &e.hi {
                if v > h {
                    return CmpResult::Greater;
                }
            }
        }
        let (vlo, vhi) = lnint::ln_uint(v, prec);
        if let Some(l) = &e.ln_lo {
            if &vhi <= l {
                return CmpResult::LessOrEqual;
            }
        }
        match &e.ln_hi {
            Some(h) if &vlo > h => return CmpResult::Greater,
            _ => {}
        }
    }
    CmpResult::Undecided
}

/// Lower bound on `ln b` as a float, for display.
pub fn ln_lower_f64(b: &BoundExpr) -> Option<f64> {
    let e = b.eval(&EvalConfig::default());
    e.ln_lo?.to_f64()
}

impl fmt::Display for BoundExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, op: &str, ts: &[BoundExpr]) -> fmt::Result {
            write!(f, "({op}")?;
            for t in ts {
                write!(f, " {t}")?;
            }
            write!(f, ")")
        }
        match self {
            BoundExpr::Int(n) => write!(f, "{n}"),
            BoundExpr::Add(ts) => list(f, "add", ts),
            BoundExpr::Mul(ts) => list(f, "mul", ts),
            BoundExpr::Pow(b, e) => write!(f, "(pow {b} {e})"),
            BoundExpr::Fact(a) => write!(f, "(fact {a})"),
            BoundExpr::Min(ts) => list(f, "min", ts),
        }
    }
}

impl Serialize for BoundExpr {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Parses an s-expression such as `(fact (mul 2 (pow 2 16)))`.
pub fn parse(src: &str) -> Result<BoundExpr> {
    let cleaned: String = src
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let tokens: Vec<String> = cleaned
        .replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(String::from)
        .collect();
    let mut pos = 0;
    let e = parse_tokens(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::Parse {
            line: 1,
            msg: format!("trailing tokens after expression: {:?}", &tokens[pos..]),
        });
    }
    Ok(e)
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse { line: 1, msg: msg.into() }
}

fn parse_tokens(tokens: &[String], pos: &mut usize) -> Result<BoundExpr> {
    let tok = tokens.get(*pos).ok_or_else(|| parse_err("unexpected end of expression"))?;
    *pos += 1;
    if tok != "(" {
        return tok
            .parse::<BigUint>()
            .map(BoundExpr::Int)
            .map_err(|_| parse_err(format!("expected integer or '(', found {tok:?}")));
    }
    let op = tokens.get(*pos).ok_or_else(|| parse_err("missing operator"))?.clone();
    *pos += 1;
    let mut args = Vec::new();
    loop {
        match tokens.get(*pos).map(String::as_str) {
            Some(")") => {
                *pos += 1;
                break;
            }
            Some(_) => args.push(parse_tokens(tokens, pos)?),
            None => return Err(parse_err("unclosed '('")),
        }
    }
    let arity = |n: usize| -> Result<()> {
        if args.len() == n {
            Ok(())
        } else {
            Err(parse_err(format!("{op} takes {n} argument(s), got {}", args.len())))
        }
    };
    match op.as_str() {
        "add" | "mul" | "min" if args.is_empty() => Err(parse_err(format!("{op} needs arguments"))),
        "add" => Ok(BoundExpr::Add(args)),
        "mul" => Ok(BoundExpr::Mul(args)),
        "min" => Ok(BoundExpr::Min(args)),
        "pow" => {
            arity(2)?;
            let mut it = args.into_iter();
            Ok(BoundExpr::pow(it.next().unwrap(), it.next().unwrap()))
        }
        "fact" => {
            arity(1)?;
            Ok(BoundExpr::fact(args.into_iter().next().unwrap()))
        }
        other => Err(parse_err(format!("unknown operator {other:?}"))),
    }
}
