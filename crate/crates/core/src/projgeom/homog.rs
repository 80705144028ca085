use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::FieldElement;

pub(crate) type Triple = [FieldElement; 3];

pub(crate) fn cross(a: &Triple, b: &Triple) -> Triple {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

pub(crate) fn dot(a: &Triple, b: &Triple) -> FieldElement {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

pub(crate) fn det3(r: &[Triple; 3]) -> FieldElement {
    dot(&r[0], &cross(&r[1], &r[2]))
}

/// Scale so the first nonzero coordinate is 1; `None` for the zero triple.
pub(crate) fn canonicalize(t: Triple) -> Result<Triple> {
    let m = t[0].order();
    if t.iter().any(|c| c.order() != m) {
        return Err(Error::OrderMismatch(
            m,
            t.iter().map(|c| c.order()).find(|&o| o != m).unwrap(),
        ));
    }
    let lead = t
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Degenerate("all-zero homogeneous triple".into()))?;
    if t[lead].is_one() {
        return Ok(t);
    }
    let inv = t[lead].inv()?;
    let [a, b, c] = t;
    let scale = |x: FieldElement| if x.is_zero() { x } else { &x * &inv };
    Ok([scale(a), scale(b), scale(c)])
}

macro_rules! homogeneous {
    ($name:ident, $what:literal) => {
        #[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
        #[serde(try_from = "Triple", into = "Triple")]
        pub struct $name {
            coords: Triple,
        }

        impl $name {
            pub fn new(x: FieldElement, y: FieldElement, w: FieldElement) -> Result<Self> {
                Ok($name {
                    coords: canonicalize([x, y, w])?,
                })
            }

            pub fn from_triple(t: Triple) -> Result<Self> {
                Ok($name {
                    coords: canonicalize(t)?,
                })
            }

            pub fn from_integers(order: u32, v: [i64; 3]) -> Result<Self> {
                Self::from_triple(v.map(|c| FieldElement::from_integer(order, c)))
            }

            pub fn coords(&self) -> &[FieldElement; 3] {
                &self.coords
            }

            pub fn order(&self) -> u32 {
                self.coords[0].order()
            }

            pub fn embed(&self, m2: u32) -> Result<Self> {
                let [a, b, c] = &self.coords;
                Ok($name {
                    coords: [a.embed(m2)?, b.embed(m2)?, c.embed(m2)?],
                })
            }

            pub fn conjugate(&self, k: i64) -> Result<Self> {
                let [a, b, c] = &self.coords;
                Self::new(a.conjugate(k)?, b.conjugate(k)?, c.conjugate(k)?)
            }

            pub fn is_real(&self) -> bool {
                self.coords.iter().all(FieldElement::is_real)
            }
        }

        impl TryFrom<Triple> for $name {
            type Error = Error;
            fn try_from(t: Triple) -> Result<Self> {
                Self::from_triple(t)
            }
        }

        impl From<$name> for Triple {
            fn from(p: $name) -> Triple {
                p.coords
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(
                    f,
                    "{}[{} : {} : {}]",
                    $what, self.coords[0], self.coords[1], self.coords[2]
                )
            }
        }
    };
}

homogeneous!(ProjPoint, "P");
homogeneous!(ProjLine, "L");

impl ProjPoint {
    pub fn affine(x: FieldElement, y: FieldElement) -> Result<Self> {
        let one = FieldElement::one(x.order());
        Self::new(x, y, one)
    }

    pub fn affine_ratio(order: u32, x: (i64, i64), y: (i64, i64)) -> Result<Self> {
        Self::affine(
            FieldElement::from_ratio(order, x.0, x.1),
            FieldElement::from_ratio(order, y.0, y.1),
        )
    }

    /// The point at infinity in direction (dx, dy).
    pub fn at_infinity(dx: FieldElement, dy: FieldElement) -> Result<Self> {
        let zero = FieldElement::zero(dx.order());
        Self::new(dx, dy, zero)
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[2].is_zero()
    }

    /// Affine coordinates (x/w, y/w), or `None` at infinity.
    pub fn affine_coords(&self) -> Option<(FieldElement, FieldElement)> {
        if self.is_at_infinity() {
            return None;
        }
        let inv = self.coords[2].inv().ok()?;
        Some((&self.coords[0] * &inv, &self.coords[1] * &inv))
    }
}

impl ProjLine {
    pub fn infinity(order: u32) -> Self {
        ProjLine {
            coords: [
                FieldElement::zero(order),
                FieldElement::zero(order),
                FieldElement::one(order),
            ],
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.coords[0].is_zero() && self.coords[1].is_zero()
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        dot(&self.coords, &p.coords).is_zero()
    }
}

pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine> {
    if p == q {
        return Err(Error::Degenerate("join of a point with itself".into()));
    }
    ProjLine::from_triple(cross(&p.coords, &q.coords))
}

pub fn meet(l: &ProjLine, l2: &ProjLine) -> Result<ProjPoint> {
    if l == l2 {
        return Err(Error::Degenerate("meet of a line with itself".into()));
    }
    ProjPoint::from_triple(cross(&l.coords, &l2.coords))
}

/// Whether three lines pass through one point.
pub fn concurrent(a: &ProjLine, b: &ProjLine, c: &ProjLine) -> bool {
    det3(&[a.coords.clone(), b.coords.clone(), c.coords.clone()]).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> ProjPoint {
        ProjPoint::from_integers(1, [x, y, 1]).unwrap()
    }

    #[test]
    fn join_examples() {
        let l = join(&pt(0, 0), &pt(1, 0)).unwrap();
        assert_eq!(l, ProjLine::from_integers(1, [0, 1, 0]).unwrap());
        let inf = join(
            &ProjPoint::from_integers(1, [1, 0, 0]).unwrap(),
            &ProjPoint::from_integers(1, [0, 1, 0]).unwrap(),
        )
        .unwrap();
        assert!(inf.is_infinity());
        // x - 2y + 3 = 0
        let l = join(&pt(1, 2), &pt(3, 3)).unwrap();
        assert_eq!(l, ProjLine::from_integers(1, [1, -2, 3]).unwrap());
        assert!(join(&pt(1, 1), &pt(1, 1)).is_err());
    }

    #[test]
    fn meet_examples() {
        let x0 = ProjLine::from_integers(1, [1, 0, 0]).unwrap();
        let y0 = ProjLine::from_integers(1, [0, 1, 0]).unwrap();
        assert_eq!(meet(&x0, &y0).unwrap(), pt(0, 0));
        let y1 = ProjLine::from_integers(1, [0, 1, -1]).unwrap();
        let y2 = ProjLine::from_integers(1, [0, 1, -2]).unwrap();
        assert_eq!(
            meet(&y1, &y2).unwrap(),
            ProjPoint::from_integers(1, [1, 0, 0]).unwrap()
        );
        // x + y = 4 and y = x + 1 meet at (3/2, 5/2)
        let a = ProjLine::from_integers(1, [1, 1, -4]).unwrap();
        let b = ProjLine::from_integers(1, [1, -1, 1]).unwrap();
        assert_eq!(
            meet(&a, &b).unwrap(),
            ProjPoint::affine_ratio(1, (3, 2), (5, 2)).unwrap()
        );
    }

    #[test]
    fn canonical_form_leads_with_one() {
        let p = ProjPoint::from_integers(1, [0, 4, 6]).unwrap();
        assert!(p.coords()[0].is_zero() && p.coords()[1].is_one());
        assert!(ProjPoint::from_integers(1, [0, 0, 0]).is_err());
    }
}
