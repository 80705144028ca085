use rayon::prelude::*;

use super::config::Configuration;
use super::homog::{cross, det3, dot, ProjLine, ProjPoint, Triple};
use crate::error::{Error, Result};
use crate::exactfield::FieldElement;

/// Invertible 3×3 matrix acting on column vectors of point coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjMap {
    rows: [Triple; 3],
    /// Cofactor matrix: lines transform by it (inverse-transpose up to scale).
    cof: [Triple; 3],
}

impl ProjMap {
    pub fn new(rows: [Triple; 3]) -> Result<Self> {
        if det3(&rows).is_zero() {
            return Err(Error::Degenerate("singular projective map".into()));
        }
        let cof = [
            cross(&rows[1], &rows[2]),
            cross(&rows[2], &rows[0]),
            cross(&rows[0], &rows[1]),
        ];
        // cof[k] is column k of the adjugate; transpose so rows act on lines.
        let cof = [0, 1, 2].map(|i| [0, 1, 2].map(|j| cof[j][i].clone()));
        Ok(ProjMap { rows, cof })
    }

    pub fn identity(order: u32) -> Self {
        let e = |i: usize| {
            [0, 1, 2].map(|j| FieldElement::from_integer(order, (i == j) as i64))
        };
        Self::new([e(0), e(1), e(2)]).expect("identity is invertible")
    }

    pub fn rows(&self) -> &[Triple; 3] {
        &self.rows
    }

    /// Composition: first `self`, then `after`.
    pub fn then(&self, after: &ProjMap) -> ProjMap {
        let col = |j: usize| [0, 1, 2].map(|k| self.rows[k][j].clone());
        let rows = [0, 1, 2].map(|i| [0, 1, 2].map(|j| dot(&after.rows[i], &col(j))));
        ProjMap::new(rows).expect("product of invertible maps")
    }

    fn mul(m: &[Triple; 3], v: &Triple) -> Triple {
        [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)]
    }

    pub fn apply_point(&self, p: &ProjPoint) -> ProjPoint {
        ProjPoint::from_triple(Self::mul(&self.rows, p.coords())).expect("invertible map")
    }

    pub fn apply_line(&self, l: &ProjLine) -> ProjLine {
        // l' = cof(M)·l, i.e. M^{-T} l up to scale: (l'·Mp) = det·(l·p).
        let rows = [0, 1, 2].map(|i| [0, 1, 2].map(|j| self.cof[j][i].clone()));
        ProjLine::from_triple(Self::mul(&rows, l.coords())).expect("invertible map")
    }
}

pub fn apply_map(s: &Configuration, m: &ProjMap) -> Result<Configuration> {
    if let Some(p) = s.points().first() {
        if p.order() != m.rows[0][0].order() {
            return Err(Error::OrderMismatch(s.order(), m.rows[0][0].order()));
        }
    }
    let points = s.points().par_iter().map(|p| m.apply_point(p)).collect();
    let named = s
        .named_lines()
        .iter()
        .map(|(k, v)| (k.clone(), v.par_iter().map(|l| m.apply_line(l)).collect()))
        .collect();
    Ok(s.with_geometry(points, named))
}

/// Canonical representatives of integer triples with max |coordinate| = h.
fn aux_candidates(order: u32, h: i64) -> impl Iterator<Item = ProjPoint> {
    let r = -h..=h;
    r.clone()
        .flat_map(move |x| r.clone().flat_map(move |y| (-h..=h).map(move |w| [x, y, w])))
        .filter(move |v| v.iter().map(|c| c.abs()).max() == Some(h))
        .filter(|v| v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
        .map(move |v| ProjPoint::from_integers(order, v).expect("nonzero triple"))
}

fn clear_of(s: &Configuration, l: &ProjLine, p: &ProjPoint) -> bool {
    s.points().iter().all(|q| q == p || !l.contains(q))
}

/// The line that becomes the line at infinity when p is sent there.
fn image_line(s: &Configuration, p: &ProjPoint) -> ProjLine {
    let inf = ProjLine::infinity(s.order());
    if inf.contains(p) && clear_of(s, &inf, p) {
        return inf;
    }
    for h in 1.. {
        for a in aux_candidates(s.order(), h) {
            if &a == p {
                continue;
            }
            let l = super::homog::join(p, &a).expect("distinct");
            if clear_of(s, &l, p) {
                return l;
            }
        }
    }
    unreachable!("finitely many points block finitely many lines")
}

pub fn send_to_infinity_map(s: &Configuration, p: &ProjPoint) -> Result<ProjMap> {
    let order = s.order();
    if p.order() != order {
        return Err(Error::OrderMismatch(order, p.order()));
    }
    let l = image_line(s, p);
    if l.is_infinity() {
        return Ok(ProjMap::identity(order));
    }
    let int = |v: i64| FieldElement::from_integer(order, v);
    if let Some((px, py)) = p.affine_coords() {
        let [a, b, _] = l.coords().clone();
        // Translate p to the origin, then send the line (a, b, 0) to infinity
        // with its direction (b, -a) as the new first axis: lines through p
        // become vertical.
        let translate = ProjMap::new([
            [int(1), int(0), -&px],
            [int(0), int(1), -&py],
            [int(0), int(0), int(1)],
        ])?;
        if let Ok(frame) = ProjMap::new([
            [b.clone(), -&a, int(0)],
            [int(0), int(0), int(1)],
            [a, b, int(0)],
        ]) {
            return Ok(translate.then(&frame));
        }
    }
    let basis = |i: usize| [0, 1, 2].map(|j| int((i == j) as i64));
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if let Ok(m) = ProjMap::new([basis(i), basis(j), l.coords().clone()]) {
            return Ok(m);
        }
    }
    unreachable!("some pair of basis rows completes a nonzero line")
}

pub fn send_to_infinity(s: &Configuration, p: &ProjPoint) -> Result<Configuration> {
    apply_map(s, &send_to_infinity_map(s, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::{join, spanned_lines};

    #[test]
    fn lines_follow_points() {
        let m = ProjMap::new([
            [1, 2, 0].map(|v| FieldElement::from_integer(1, v)),
            [0, 1, 3].map(|v| FieldElement::from_integer(1, v)),
            [1, 0, 1].map(|v| FieldElement::from_integer(1, v)),
        ])
        .unwrap();
        let p = ProjPoint::from_integers(1, [2, 5, 1]).unwrap();
        let q = ProjPoint::from_integers(1, [-1, 3, 1]).unwrap();
        let l = join(&p, &q).unwrap();
        assert_eq!(
            m.apply_line(&l),
            join(&m.apply_point(&p), &m.apply_point(&q)).unwrap()
        );
    }

    #[test]
    fn pencil_through_origin_becomes_parallel() {
        let pts: Vec<_> = [[1, 0], [2, 0], [0, 1], [0, 2], [1, 1], [2, 2], [1, -1], [0, 0]]
            .iter()
            .map(|&[x, y]| ProjPoint::from_integers(1, [x, y, 1]).unwrap())
            .collect();
        let s = Configuration::new(1, pts).unwrap();
        let origin = ProjPoint::from_integers(1, [0, 0, 1]).unwrap();
        let img = send_to_infinity(&s, &origin).unwrap();
        let o2 = &img.points()[7];
        assert!(o2.is_at_infinity());
        assert_eq!(
            spanned_lines(&s).unwrap().t,
            spanned_lines(&img).unwrap().t
        );
        for p in &img.points()[..7] {
            assert!(!p.is_at_infinity());
        }
    }
}
