use serde::Serialize;

use crate::error::{Error, Result};

/// GF(q) for q ∈ {2, 3, 4, 5}. Elements are 0..q; for q = 4 the bits are the
/// coefficients of 1 and x in GF(2)[x]/(x² + x + 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmallField {
    q: u8,
}

impl SmallField {
    pub fn new(q: u8) -> Result<Self> {
        match q {
            2..=5 => Ok(SmallField { q }),
            _ => Err(Error::Precondition(format!("unsupported field order {q}"))),
        }
    }

    pub fn q(self) -> u8 {
        self.q
    }

    pub fn add(self, a: u8, b: u8) -> u8 {
        if self.q == 4 {
            a ^ b
        } else {
            (a + b) % self.q
        }
    }

    pub fn mul(self, a: u8, b: u8) -> u8 {
        if self.q != 4 {
            return (a * b) % self.q;
        }
        // (a0 + a1 x)(b0 + b1 x) with x² = x + 1
        let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
        let hi = a1 & b1;
        let c0 = (a0 & b0) ^ hi;
        let c1 = (a0 & b1) ^ (a1 & b0) ^ hi;
        c0 | (c1 << 1)
    }

    pub fn inv(self, a: u8) -> Option<u8> {
        (1..self.q).find(|&b| self.mul(a, b) == 1).filter(|_| a != 0)
    }

    pub fn dot(self, u: &[u8; 3], v: &[u8; 3]) -> u8 {
        let s = self.add(self.mul(u[0], v[0]), self.mul(u[1], v[1]));
        self.add(s, self.mul(u[2], v[2]))
    }

    /// Scale so the first nonzero coordinate is 1; None for the zero vector.
    pub fn normalize(self, v: [u8; 3]) -> Option<[u8; 3]> {
        let lead = v.iter().copied().find(|&c| c != 0)?;
        let s = self.inv(lead)?;
        Some(v.map(|c| self.mul(c, s)))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FinitePlane {
    pub q: u8,
    pub points: Vec<[u8; 3]>,
    pub lines: Vec<[u8; 3]>,
    #[serde(skip)]
    pub incidence: Vec<Vec<bool>>,
    pub incidences: usize,
}

impl FinitePlane {
    pub fn field(&self) -> SmallField {
        SmallField { q: self.q }
    }

    pub fn point_index(&self, v: &[u8; 3]) -> Option<usize> {
        self.points.binary_search(v).ok()
    }
}

pub fn finite_plane(q: u8) -> Result<FinitePlane> {
    if !(3..=5).contains(&q) {
        return Err(Error::Precondition(format!("finite_plane supports q ∈ {{3, 4, 5}}, got {q}")));
    }
    let f = SmallField::new(q)?;
    let mut points = Vec::new();
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = [x, y, z];
                if f.normalize(v) == Some(v) {
                    points.push(v);
                }
            }
        }
    }
    points.sort();
    let lines = points.clone();
    let incidence: Vec<Vec<bool>> = points
        .iter()
        .map(|p| lines.iter().map(|l| f.dot(p, l) == 0).collect())
        .collect();
    let incidences = incidence.iter().flatten().filter(|&&b| b).count();
    Ok(FinitePlane {
        q,
        points,
        lines,
        incidence,
        incidences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_a_field() {
        let f = SmallField::new(4).unwrap();
        for a in 1..4 {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
        }
        // x² = x + 1
        assert_eq!(f.mul(2, 2), 3);
    }
}
