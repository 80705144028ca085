//! Certified sign of real cyclotomic elements under ζ_m ↦ e^{2πi/m}.
//!
//! Fixed-point arithmetic with explicit error bounds (in units of 2^-W):
//! π from Machin's formula, cosines by Taylor series on [0, π/4].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::element::FieldElement;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

#[derive(Clone, Debug)]
pub struct SignWitness {
    pub value: FieldElement,
    pub sign: Sign,
    /// Closed interval containing the real embedding of `value`.
    pub interval: (BigRational, BigRational),
}

const SEED_BITS: u32 = 64;
const GUARD_BITS: u32 = 32;

struct Fixed {
    v: BigInt,
    err: u64,
}

fn atan_inv(x: u64, w: u32) -> Fixed {
    let x2 = BigInt::from(x * x);
    let mut power = (BigInt::one() << w) / x;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    loop {
        let term = &power / (2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    Fixed {
        v: sum,
        err: 3 * (k + 1) + 2,
    }
}

fn pi_fixed(w: u32) -> Fixed {
    let a = atan_inv(5, w);
    let b = atan_inv(239, w);
    Fixed {
        v: a.v * 16 - b.v * 4,
        err: 16 * a.err + 4 * b.err,
    }
}

/// cos(2π·a/b) scaled by 2^w.
fn cos_turn(a: u64, b: u64, pi: &Fixed, w: u32) -> Fixed {
    // Fold the turn fraction a/b into [0, 1/8], tracking sign and cos/sin swap.
    // Scaling by 8 keeps every folded numerator integral.
    let a = a % b;
    let big_b = 8 * b;
    let mut a = 8 * a.min(b - a);
    let neg = 4 * a > big_b;
    if neg {
        a = big_b / 2 - a;
    }
    let use_sin = 8 * a > big_b;
    if use_sin {
        a = big_b / 4 - a;
    }
    let b = big_b;
    // θ = 2π a / b ≤ π/4
    let theta = (&pi.v * (2 * a)) / b;
    let theta_err = pi.err + 1;
    let one = BigInt::one() << w;
    let t2 = (&theta * &theta) >> w;
    let mut sum;
    let mut term;
    let mut k: u64;
    if use_sin {
        term = theta.clone();
        sum = theta;
        k = 1;
    } else {
        term = one.clone();
        sum = one;
        k = 0;
    }
    let mut n = 0u64;
    loop {
        let d = if use_sin {
            (2 * k) * (2 * k + 1)
        } else {
            (2 * k + 1) * (2 * k + 2)
        };
        term = ((&term * &t2) >> w) / d;
        if term.is_zero() {
            break;
        }
        n += 1;
        if n % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    Fixed {
        v: if neg { -sum } else { sum },
        err: 4 * theta_err + 8 * (n + 4),
    }
}

struct CosTable {
    w: u32,
    cos: Vec<BigInt>,
    err: u64,
}

fn cos_table(m: u32, degree: usize, w: u32) -> Arc<CosTable> {
    type Cache = Mutex<HashMap<(u32, u32), Arc<CosTable>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(m, w)) {
        return t.clone();
    }
    let pi = pi_fixed(w);
    let mut cos = Vec::with_capacity(degree);
    let mut err = 0;
    for j in 0..degree {
        let c = cos_turn(j as u64, m as u64, &pi, w);
        err = err.max(c.err);
        cos.push(c.v);
    }
    let t = Arc::new(CosTable { w, cos, err });
    cache.lock().unwrap().insert((m, w), t.clone());
    t
}

/// Real embedding of a real element as (center, radius) over `den·2^w`.
fn evaluate(a: &FieldElement, prec: u32) -> (BigInt, BigInt, u32) {
    let w = prec + GUARD_BITS;
    let t = cos_table(a.order(), a.degree(), w);
    let mut s = BigInt::zero();
    let mut e = BigInt::zero();
    for (c, cv) in a.numerators().iter().zip(&t.cos) {
        if c.is_zero() {
            continue;
        }
        s += c * cv;
        e += c.abs() * t.err;
    }
    (s, e, t.w)
}

fn interval(a: &FieldElement, s: &BigInt, e: &BigInt, w: u32) -> (BigRational, BigRational) {
    let scale = a.denominator() << w;
    (
        BigRational::new(s - e, scale.clone()),
        BigRational::new(s + e, scale),
    )
}

pub fn sign_of(a: &FieldElement) -> Result<SignWitness> {
    if !a.is_real() {
        return Err(Error::NotReal);
    }
    if a.is_zero() {
        let z = BigRational::zero();
        return Ok(SignWitness {
            value: a.clone(),
            sign: Sign::Zero,
            interval: (z.clone(), z),
        });
    }
    let mut prec = SEED_BITS;
    loop {
        let (s, e, w) = evaluate(a, prec);
        if s.abs() > e {
            let sign = if s.is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
            return Ok(SignWitness {
                value: a.clone(),
                sign,
                interval: interval(a, &s, &e, w),
            });
        }
        prec *= 2;
    }
}

/// Certified enclosure of a real element with width at most about 2^-bits.
pub fn enclose(a: &FieldElement, bits: u32) -> Result<(BigRational, BigRational)> {
    if !a.is_real() {
        return Err(Error::NotReal);
    }
    let (s, e, w) = evaluate(a, bits.max(SEED_BITS) + a.height_bits() as u32);
    Ok(interval(a, &s, &e, w))
}

/// Floating approximation of a real element (display only).
pub fn approx_f64(a: &FieldElement) -> Result<f64> {
    let (lo, hi) = enclose(a, 64)?;
    let mid = (lo + hi) / BigRational::from_integer(2.into());
    Ok(mid.to_f64().unwrap_or(f64::NAN))
}

impl FieldElement {
    pub fn signum(&self) -> Result<Sign> {
        Ok(sign_of(self)?.sign)
    }

    /// Exact comparison of two real elements of the same order.
    pub fn cmp_real(&self, other: &Self) -> Result<Ordering> {
        let d = super::element::arith(self, other, super::element::ArithOp::Sub)?;
        Ok(match d.signum()? {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        })
    }
}
