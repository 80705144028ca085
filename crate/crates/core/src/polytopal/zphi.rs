use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::exactfield::FieldElement;

/// a + bφ with φ² = φ + 1.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZPhi {
    pub a: i64,
    pub b: i64,
}

pub const PHI: ZPhi = ZPhi { a: 0, b: 1 };

impl ZPhi {
    pub const fn new(a: i64, b: i64) -> Self {
        ZPhi { a, b }
    }

    pub const fn int(a: i64) -> Self {
        ZPhi { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Galois conjugate φ ↦ 1 − φ.
    pub fn conj(self) -> Self {
        ZPhi::new(self.a + self.b, -self.b)
    }

    /// Field norm a² + ab − b².
    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }

    /// The element of Q(ζ₅) (or Q when b = 0 and order 1).
    pub fn to_field(self, order: u32) -> FieldElement {
        let a = FieldElement::from_integer(order, self.a);
        if self.b == 0 {
            return a;
        }
        a + FieldElement::golden(order).scale(&num_rational::BigRational::from_integer(self.b.into()))
    }

    /// Exact quotient when it lies in Z[φ].
    pub fn div_exact(self, d: ZPhi) -> Option<ZPhi> {
        let n = d.norm();
        let q = self * d.conj();
        (q.a % n == 0 && q.b % n == 0).then(|| ZPhi::new(q.a / n, q.b / n))
    }
}

impl Add for ZPhi {
    type Output = ZPhi;
    fn add(self, o: ZPhi) -> ZPhi {
        ZPhi::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for ZPhi {
    type Output = ZPhi;
    fn sub(self, o: ZPhi) -> ZPhi {
        ZPhi::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for ZPhi {
    type Output = ZPhi;
    fn neg(self) -> ZPhi {
        ZPhi::new(-self.a, -self.b)
    }
}

impl Mul for ZPhi {
    type Output = ZPhi;
    fn mul(self, o: ZPhi) -> ZPhi {
        let bb = self.b * o.b;
        ZPhi::new(self.a * o.a + bb, self.a * o.b + self.b * o.a + bb)
    }
}

impl fmt::Display for ZPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}φ"),
            (a, b) if b < 0 => write!(f, "{a}{b}φ"),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}

pub type Vec3 = [ZPhi; 3];

pub fn dot(u: &Vec3, v: &Vec3) -> ZPhi {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

pub fn cross(u: &Vec3, v: &Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

pub fn parallel(u: &Vec3, v: &Vec3) -> bool {
    cross(u, v).iter().all(|c| c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldElement;

    #[test]
    fn golden_relation() {
        assert_eq!(PHI * PHI, PHI + ZPhi::int(1));
        assert_eq!((PHI * PHI).to_field(5), FieldElement::golden(5) + FieldElement::one(5));
        assert_eq!(ZPhi::new(-1, 2).norm(), -5);
        assert_eq!(ZPhi::new(5, 5).div_exact(ZPhi::new(-1, 2)), Some(ZPhi::new(1, 3)));
    }
}
