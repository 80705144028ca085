use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::cyclo::{cyclotomic, reduce, reduce_i128};
use crate::error::{Error, Result};

/// Element of Q(ζ_m) in the power basis 1, ζ, …, ζ^{φ(m)-1}, reduced mod Φ_m.
///
/// Stored as integer numerators over one positive common denominator, always
/// in lowest terms, so derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Repr", into = "Repr")]
pub struct FieldElement {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    if a.order != b.order {
        return Err(Error::OrderMismatch(a.order, b.order));
    }
    Ok(match op {
        ArithOp::Add => a.add_same(b, false),
        ArithOp::Sub => a.add_same(b, true),
        ArithOp::Mul => a.mul_same(b),
        ArithOp::Div => a.mul_same(&b.inv()?),
    })
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

impl FieldElement {
    fn from_parts(order: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut e = FieldElement { order, num, den };
        e.normalize();
        e
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    pub fn zero(order: u32) -> Self {
        let d = cyclotomic(order).degree;
        FieldElement {
            order,
            num: vec![BigInt::zero(); d],
            den: BigInt::one(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: u32, v: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = v.into();
        z
    }

    pub fn from_ratio(order: u32, p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        let mut z = Self::zero(order);
        z.num[0] = BigInt::from(p);
        z.den = BigInt::from(q);
        z.normalize();
        z
    }

    pub fn from_rational(order: u32, r: &BigRational) -> Self {
        let mut z = Self::zero(order);
        z.num[0] = r.numer().clone();
        z.den = r.denom().clone();
        z.normalize();
        z
    }

    /// Element with the given power-basis coefficients; any length, reduced mod Φ_m.
    pub fn from_coeffs(order: u32, coeffs: &[BigRational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        reduce(&mut num, &cyclotomic(order));
        Self::from_parts(order, num, den)
    }

    /// ζ_m^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        reduce(&mut num, &cyclotomic(order));
        Self::from_parts(order, num, BigInt::one())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.num.len()
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn add_same(&self, other: &Self, subtract: bool) -> Self {
        let (num, den) = if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if subtract { a - b } else { a + b })
                .collect();
            (num, self.den.clone())
        } else {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let (x, y) = (a * &other.den, b * &self.den);
                    if subtract {
                        x - y
                    } else {
                        x + y
                    }
                })
                .collect();
            (num, &self.den * &other.den)
        };
        Self::from_parts(self.order, num, den)
    }

    fn mul_same(&self, other: &Self) -> Self {
        let cyc = cyclotomic(self.order);
        let d = cyc.degree;
        if let Some(num) = mul_small(&self.num, &other.num, &cyc) {
            return Self::from_parts(self.order, num, &self.den * &other.den);
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce(&mut prod, &cyc);
        Self::from_parts(self.order, prod, &self.den * &other.den)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.order, num, &self.den * r.denom())
    }

    pub fn square(&self) -> Self {
        self.mul_same(self)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_same(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse by a fraction-free solve of (A·x = 1) in Z[x]/Φ_m.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.order, &r.recip()));
        }
        let cyc = cyclotomic(self.order);
        let d = cyc.degree;
        // Column j of the multiplication matrix is x^j · A mod Φ_m.
        let mut cols = Vec::with_capacity(d);
        let mut v = self.num.clone();
        for _ in 0..d {
            cols.push(v.clone());
            v.insert(0, BigInt::zero());
            reduce(&mut v, &cyc);
        }
        let rows: Vec<Vec<BigInt>> = (0..d)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let mut rhs = vec![BigInt::zero(); d];
        rhs[0] = BigInt::one();
        let (y, det) = bareiss_solve(rows, rhs).ok_or(Error::DivisionByZero)?;
        // (A/den)^{-1} = den · y / det
        let num = y.into_iter().map(|c| c * &self.den).collect();
        Ok(Self::from_parts(self.order, num, det))
    }

    /// Same number in Q(ζ_{m2}) via ζ_m ↦ ζ_{m2}^{m2/m}.
    pub fn embed(&self, m2: u32) -> Result<Self> {
        if m2 == 0 || m2 % self.order != 0 {
            return Err(Error::NotMultiple {
                source_order: self.order,
                target: m2,
            });
        }
        if m2 == self.order {
            return Ok(self.clone());
        }
        let step = (m2 / self.order) as usize;
        let mut num = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (j, c) in self.num.iter().enumerate() {
            num[j * step] = c.clone();
        }
        reduce(&mut num, &cyclotomic(m2));
        Ok(Self::from_parts(m2, num, self.den.clone()))
    }

    /// Galois action ζ ↦ ζ^k.
    pub fn conjugate(&self, k: i64) -> Result<Self> {
        let m = self.order as i64;
        if k.gcd(&m) != 1 {
            return Err(Error::NotCoprime { k, m: self.order });
        }
        let mut num = vec![BigInt::zero(); self.order as usize];
        for (j, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                let e = ((j as i64) * k).rem_euclid(m) as usize;
                num[e] += c;
            }
        }
        reduce(&mut num, &cyclotomic(self.order));
        Ok(Self::from_parts(self.order, num, self.den.clone()))
    }

    pub fn complex_conjugate(&self) -> Self {
        self.conjugate(-1).expect("-1 is a unit mod every order")
    }

    pub fn is_real(&self) -> bool {
        self.order <= 2 || self.complex_conjugate() == *self
    }

    /// Exact (cos(pπ/q), sin(pπ/q)) in Q(ζ_{lcm(4,2q)}).
    pub fn cos_sin(p: i64, q: u32) -> (Self, Self) {
        assert!(q >= 1, "q must be positive");
        Self::cos_sin_in(p, q, lcm(4, 2 * q))
    }

    /// Exact (cos(pπ/q), sin(pπ/q)) in a chosen order `m`, a multiple of lcm(4, 2q).
    pub fn cos_sin_in(p: i64, q: u32, m: u32) -> (Self, Self) {
        assert!(q >= 1, "q must be positive");
        assert!(
            m % lcm(4, 2 * q) == 0,
            "order {m} cannot hold cos/sin of multiples of π/{q}"
        );
        let e = p * (m / (2 * q)) as i64;
        let quarter = (m / 4) as i64;
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let z = Self::zeta_pow(m, e);
        let zb = Self::zeta_pow(m, -e);
        let cos = z.add_same(&zb, false).scale(&half);
        // sin = (ζ^e - ζ^{-e}) / 2i, and 1/i = ζ^{3m/4}
        let s1 = Self::zeta_pow(m, e + 3 * quarter);
        let s2 = Self::zeta_pow(m, -e + 3 * quarter);
        let sin = s1.add_same(&s2, true).scale(&half);
        (cos, sin)
    }

    /// √5 = 1 + 2ζ₅ + 2ζ₅⁴ in the given order (a multiple of 5).
    pub fn sqrt5(order: u32) -> Self {
        assert!(order % 5 == 0, "√5 needs an order divisible by 5");
        let z = Self::zeta_pow(order, (order / 5) as i64);
        let zb = Self::zeta_pow(order, -((order / 5) as i64));
        let two = Self::from_integer(order, 2);
        Self::one(order) + &(&two * &(&z + &zb))
    }

    /// Golden ratio (1 + √5)/2 in the given order (a multiple of 5).
    pub fn golden(order: u32) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        (Self::one(order) + &Self::sqrt5(order)).scale(&half)
    }

    /// Content measure used for cost heuristics: bits of the largest numerator plus the denominator.
    pub fn height_bits(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).max().unwrap_or(0) + self.den.bits()
    }
}

/// Multiply with i128 accumulation when the inputs are small enough; `None` means fall back.
fn mul_small(
    a: &[BigInt],
    b: &[BigInt],
    cyc: &super::cyclo::Cyclotomic,
) -> Option<Vec<BigInt>> {
    let ba = a.iter().map(|c| c.bits()).max().unwrap_or(0);
    let bb = b.iter().map(|c| c.bits()).max().unwrap_or(0);
    let d = cyc.degree;
    let log_d = 64 - (d as u64).leading_zeros() as u64;
    if ba + bb + log_d > 100 {
        return None;
    }
    let av: Vec<i64> = a.iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
    let bv: Vec<i64> = b.iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
    let mut prod = vec![0i128; 2 * d - 1];
    for (i, &x) in av.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in bv.iter().enumerate() {
            prod[i + j] += x as i128 * y as i128;
        }
    }
    reduce_i128(&mut prod, cyc)?;
    Some(prod.into_iter().map(BigInt::from).collect())
}

/// Solve A·x = b over Q with Bareiss elimination. Returns (y, d) with x = y / d.
fn bareiss_solve(
    mut a: Vec<Vec<BigInt>>,
    mut b: Vec<BigInt>,
) -> Option<(Vec<BigInt>, BigInt)> {
    let n = a.len();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let r = (k + 1..n).find(|&r| !a[r][k].is_zero())?;
            a.swap(k, r);
            b.swap(k, r);
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for (off, row) in bottom.iter_mut().enumerate() {
            let i = k + 1 + off;
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
            let v = &b[i] * pivot - &lead * &b[k];
            b[i] = v / &prev;
        }
        prev = a[k][k].clone();
    }
    let det = prev;
    let mut y = vec![BigInt::zero(); n];
    for i in (0..n).rev() {
        let mut s = &b[i] * &det;
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                s -= &a[i][j] * &y[j];
            }
        }
        y[i] = s / &a[i][i];
    }
    Some((y, det))
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                arith(self, rhs, $op).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            order: self.order,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            terms.push(match j {
                0 => format!("{r}"),
                1 => format!("({r})z"),
                _ => format!("({r})z^{j}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "[{} in Q(z{})]", terms.join(" + "), self.order)
    }
}

#[derive(Serialize, Deserialize)]
struct Repr {
    m: u32,
    coeffs: Vec<String>,
}

impl From<FieldElement> for Repr {
    fn from(e: FieldElement) -> Repr {
        Repr {
            m: e.order,
            coeffs: e
                .num
                .iter()
                .map(|c| {
                    let r = BigRational::new(c.clone(), e.den.clone());
                    format!("{}/{}", r.numer(), r.denom())
                })
                .collect(),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Malformed(format!("bad rational {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

impl TryFrom<Repr> for FieldElement {
    type Error = Error;
    fn try_from(r: Repr) -> Result<FieldElement> {
        if r.m == 0 {
            return Err(Error::Malformed("field order 0".into()));
        }
        let d = cyclotomic(r.m).degree;
        if r.coeffs.len() != d {
            return Err(Error::Malformed(format!(
                "order {} needs {} coefficients, got {}",
                r.m,
                d,
                r.coeffs.len()
            )));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(FieldElement::from_coeffs(r.m, &coeffs))
    }
}
