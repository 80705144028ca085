//! Icosahedral and octahedral orbit configurations, the planes PG(2, q) for
//! q ∈ {3, 4, 5}, and reductions of the former onto the latter.
//!
//! Every point is a triple in Z[φ] and its dual line is the same triple, so
//! incidence is the symmetric form u·v = 0, decided exactly in Z[φ].

mod plane;
mod zphi;

use std::collections::HashSet;

use serde::Serialize;

pub use plane::{finite_plane, FinitePlane, SmallField};
pub use zphi::{cross, dot, parallel, Vec3, ZPhi, PHI};

use crate::error::{Error, Result};
use crate::projgeom::{Configuration, ProjLine, ProjPoint};

#[derive(Clone, Debug)]
pub struct Orbit {
    pub point_name: String,
    pub line_name: String,
    pub coords: Vec<Vec3>,
}

#[derive(Clone, Debug)]
pub struct OrbitConfig {
    order: u32,
    orbits: Vec<Orbit>,
}

impl OrbitConfig {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit(&self, name: &str) -> Result<&Orbit> {
        self.orbits
            .iter()
            .find(|o| o.point_name == name || o.line_name == name)
            .ok_or_else(|| Error::Precondition(format!("no orbit named {name}")))
    }

    /// Labeled points of the named orbits, e.g. ("P15[3]", triple).
    pub fn labeled_points(&self, names: &[&str]) -> Result<Vec<(String, Vec3)>> {
        let mut out = Vec::new();
        for n in names {
            let o = self.orbit(n)?;
            out.extend(o.coords.iter().enumerate().map(|(i, v)| (format!("{}[{i}]", o.point_name), *v)));
        }
        Ok(out)
    }

    pub fn labeled_lines(&self, names: &[&str]) -> Result<Vec<(String, Vec3)>> {
        let mut out = Vec::new();
        for n in names {
            let o = self.orbit(n)?;
            out.extend(o.coords.iter().enumerate().map(|(i, v)| (format!("{}[{i}]", o.line_name), *v)));
        }
        Ok(out)
    }

    /// Incident (point, line) label pairs between the given orbits.
    pub fn incidence_pairs(&self, points: &[&str], lines: &[&str]) -> Result<Vec<(String, String)>> {
        let ls = self.labeled_lines(lines)?;
        Ok(self
            .labeled_points(points)?
            .into_iter()
            .flat_map(|(pl, p)| {
                ls.iter()
                    .filter(move |(_, l)| dot(&p, l).is_zero())
                    .map(move |(ll, _)| (pl.clone(), ll.clone()))
            })
            .collect())
    }

    pub fn incidences(&self, points: &[&str], lines: &[&str]) -> Result<usize> {
        Ok(self.incidence_pairs(points, lines)?.len())
    }

    /// Whether the linear map permutes every orbit projectively.
    pub fn is_invariant(&self, m: &[Vec3; 3]) -> bool {
        self.orbits.iter().all(|o| {
            o.coords.iter().all(|v| {
                let w = [dot(&m[0], v), dot(&m[1], v), dot(&m[2], v)];
                o.coords.iter().any(|u| parallel(u, &w))
            })
        })
    }

    /// All orbits as one exact configuration: points labeled by orbit, dual
    /// lines named by orbit.
    pub fn to_configuration(&self) -> Result<Configuration> {
        let conv = |v: &Vec3| v.map(|z| z.to_field(self.order));
        let mut pts = Vec::new();
        let mut labels = Vec::new();
        for o in &self.orbits {
            let start = pts.len();
            for v in &o.coords {
                pts.push(ProjPoint::from_triple(conv(v))?);
            }
            labels.push((o.point_name.clone(), (start..pts.len()).collect::<Vec<_>>()));
        }
        let mut c = Configuration::new(self.order, pts)?;
        for o in &self.orbits {
            let lines = o
                .coords
                .iter()
                .map(|v| ProjLine::from_triple(conv(v)))
                .collect::<Result<Vec<_>>>()?;
            c.add_named_lines(&o.line_name, lines)?;
        }
        for (name, idx) in labels {
            c.add_label(&name, idx)?;
        }
        Ok(c)
    }
}

fn sign_normalize(v: Vec3) -> Vec3 {
    match v.iter().find(|z| !z.is_zero()) {
        Some(z) if z.to_f64() < 0.0 => v.map(|z| -z),
        _ => v,
    }
}

fn push_class(classes: &mut Vec<Vec3>, v: Vec3) {
    if !classes.iter().any(|u| parallel(u, &v)) {
        classes.push(sign_normalize(v));
    }
}

fn icosahedron_vertices() -> Vec<Vec3> {
    let mut out = Vec::new();
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            let base = [ZPhi::int(0), ZPhi::int(s1), ZPhi::new(0, s2)];
            for r in 0..3 {
                out.push([base[(3 - r) % 3], base[(4 - r) % 3], base[(5 - r) % 3]]);
            }
        }
    }
    out
}

fn add3(u: &Vec3, v: &Vec3) -> Vec3 {
    [u[0] + v[0], u[1] + v[1], u[2] + v[2]]
}

/// Vertex, face-center and edge-center classes of the icosahedron under the
/// antipodal map, over Q(√5) ⊂ Q(ζ₅).
pub fn icosahedral() -> OrbitConfig {
    let verts = icosahedron_vertices();
    let adjacent = |u: &Vec3, v: &Vec3| {
        let d = [u[0] - v[0], u[1] - v[1], u[2] - v[2]];
        dot(&d, &d) == ZPhi::int(4)
    };
    let (mut p6, mut p10, mut p15) = (Vec::new(), Vec::new(), Vec::new());
    for (i, u) in verts.iter().enumerate() {
        push_class(&mut p6, *u);
        for (j, v) in verts.iter().enumerate().skip(i + 1) {
            if !adjacent(u, v) {
                continue;
            }
            push_class(&mut p15, add3(u, v));
            for w in verts.iter().skip(j + 1) {
                if adjacent(u, w) && adjacent(v, w) {
                    push_class(&mut p10, add3(&add3(u, v), w));
                }
            }
        }
    }
    let orbit = |k: &str, coords| Orbit {
        point_name: format!("P{k}"),
        line_name: format!("L{k}"),
        coords,
    };
    OrbitConfig {
        order: 5,
        orbits: vec![orbit("6", p6), orbit("10", p10), orbit("15", p15)],
    }
}

/// Sign classes of {−1, 0, 1}³ \ {0}: 3 vertices, 4 faces, 6 edges.
pub fn octahedral() -> OrbitConfig {
    let mut classes: [Vec<Vec3>; 3] = Default::default();
    for x in -1..=1i64 {
        for y in -1..=1 {
            for z in -1..=1 {
                let v = [ZPhi::int(x), ZPhi::int(y), ZPhi::int(z)];
                let nz = [x, y, z].iter().filter(|&&c| c != 0).count();
                let slot = match nz {
                    1 => 0,
                    3 => 1,
                    2 => 2,
                    _ => continue,
                };
                push_class(&mut classes[slot], v);
            }
        }
    }
    let [v, f, e] = classes;
    let orbit = |n: &str, coords| Orbit {
        point_name: n.to_string(),
        line_name: format!("{n}*"),
        coords,
    };
    OrbitConfig {
        order: 1,
        orbits: vec![orbit("vertex", v), orbit("face", f), orbit("edge", e)],
    }
}

/// The two generators of the rotation group used in checks: a 5-fold
/// rotation (scaled by 2 to stay integral) and the cyclic coordinate shift.
pub fn icosahedral_generators() -> [[Vec3; 3]; 2] {
    let z = ZPhi::int;
    let pm1 = ZPhi::new(-1, 1);
    [
        [[z(1), pm1, PHI], [pm1, PHI, z(-1)], [-PHI, z(1), pm1]],
        [[z(0), z(0), z(1)], [z(1), z(0), z(0)], [z(0), z(1), z(0)]],
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ideal {
    /// 2Z[φ], residue field GF(4) with φ ↦ x.
    Two,
    /// √5 Z[φ], residue field GF(5) with φ ↦ 3.
    Sqrt5,
    /// 3Z on rational integer coordinates.
    Three,
}

impl Ideal {
    pub fn q(self) -> u8 {
        match self {
            Ideal::Two => 4,
            Ideal::Sqrt5 => 5,
            Ideal::Three => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Ideal::Two => "2",
            Ideal::Sqrt5 => "sqrt5",
            Ideal::Three => "3",
        }
    }

    fn generator(self) -> ZPhi {
        match self {
            Ideal::Two => ZPhi::int(2),
            Ideal::Sqrt5 => ZPhi::new(-1, 2),
            Ideal::Three => ZPhi::int(3),
        }
    }

    pub fn residue(self, z: ZPhi) -> u8 {
        match self {
            Ideal::Two => (z.a.rem_euclid(2) | (z.b.rem_euclid(2) << 1)) as u8,
            Ideal::Sqrt5 => (z.a + 3 * z.b).rem_euclid(5) as u8,
            Ideal::Three => (z.a + z.b).rem_euclid(3) as u8,
        }
    }

    /// Projective image: divide out the ideal until some coordinate survives.
    pub fn reduce(self, v: &Vec3) -> Option<[u8; 3]> {
        let f = SmallField::new(self.q()).ok()?;
        let mut v = *v;
        if v.iter().all(|z| z.is_zero()) {
            return None;
        }
        loop {
            let r = v.map(|z| self.residue(z));
            if r.iter().any(|&c| c != 0) {
                return f.normalize(r);
            }
            let g = self.generator();
            v = [v[0].div_exact(g)?, v[1].div_exact(g)?, v[2].div_exact(g)?];
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionMap {
    pub ideal: Ideal,
    pub points: Vec<(String, [u8; 3])>,
    pub lines: Vec<(String, [u8; 3])>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub ideal: Ideal,
    pub q: u8,
    pub points: usize,
    pub lines: usize,
    pub distinct_point_images: usize,
    pub distinct_line_images: usize,
    pub points_injective: bool,
    pub lines_injective: bool,
    /// Images cover every point and every line of PG(2, q).
    pub onto_plane: bool,
    pub exact_incidences: usize,
    pub reduced_incidences: usize,
    pub plane_incidences: usize,
    /// Incident after reduction but not before.
    pub new_incidences: Vec<(String, String)>,
}

impl ReductionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn reduce_orbits(cfg: &OrbitConfig, names: &[&str], ideal: Ideal) -> Result<(ReductionMap, ReductionReport)> {
    let plane = finite_plane(ideal.q())?;
    let f = plane.field();
    let pts = cfg.labeled_points(names)?;
    let lns = cfg.labeled_lines(names)?;
    let image = |v: &Vec3| {
        ideal
            .reduce(v)
            .ok_or_else(|| Error::Degenerate(format!("triple reduces to zero mod {}", ideal.name())))
    };
    let pmap = pts
        .iter()
        .map(|(l, v)| Ok((l.clone(), image(v)?)))
        .collect::<Result<Vec<_>>>()?;
    let lmap = lns
        .iter()
        .map(|(l, v)| Ok((l.clone(), image(v)?)))
        .collect::<Result<Vec<_>>>()?;
    let dp: HashSet<[u8; 3]> = pmap.iter().map(|x| x.1).collect();
    let dl: HashSet<[u8; 3]> = lmap.iter().map(|x| x.1).collect();
    let mut exact = 0;
    let mut reduced = 0;
    let mut new = Vec::new();
    for ((pl, pv), (_, pr)) in pts.iter().zip(&pmap) {
        for ((ll, lv), (_, lr)) in lns.iter().zip(&lmap) {
            let e = dot(pv, lv).is_zero();
            let r = f.dot(pr, lr) == 0;
            exact += e as usize;
            reduced += r as usize;
            if r && !e {
                new.push((pl.clone(), ll.clone()));
            }
        }
    }
    let report = ReductionReport {
        ideal,
        q: ideal.q(),
        points: pts.len(),
        lines: lns.len(),
        distinct_point_images: dp.len(),
        distinct_line_images: dl.len(),
        points_injective: dp.len() == pts.len(),
        lines_injective: dl.len() == lns.len(),
        onto_plane: dp.len() == plane.points.len() && dl.len() == plane.lines.len(),
        exact_incidences: exact,
        reduced_incidences: reduced,
        plane_incidences: plane.incidences,
        new_incidences: new,
    };
    let map = ReductionMap {
        ideal,
        points: pmap,
        lines: lmap,
    };
    Ok((map, report))
}

pub fn reduce_octahedral_mod3() -> Result<(ReductionMap, ReductionReport)> {
    reduce_orbits(&octahedral(), &["vertex", "face", "edge"], Ideal::Three)
}

/// Two: the 21-point subconfiguration P6 ∪ P15 against PG(2, 4).
/// Sqrt5: all 31 points against PG(2, 5).
pub fn reduce_icosahedral(ideal: Ideal) -> Result<(ReductionMap, ReductionReport)> {
    let names: &[&str] = match ideal {
        Ideal::Two => &["P6", "P15"],
        Ideal::Sqrt5 => &["P6", "P10", "P15"],
        Ideal::Three => {
            return Err(Error::Precondition("icosahedral reductions use 2 or sqrt5".into()))
        }
    };
    reduce_orbits(&icosahedral(), names, ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_sizes() {
        let ico = icosahedral();
        let sizes: Vec<usize> = ico.orbits().iter().map(|o| o.coords.len()).collect();
        assert_eq!(sizes, vec![6, 10, 15]);
        let oct = octahedral();
        let sizes: Vec<usize> = oct.orbits().iter().map(|o| o.coords.len()).collect();
        assert_eq!(sizes, vec![3, 4, 6]);
    }

    #[test]
    fn residues_respect_the_ring() {
        for ideal in [Ideal::Two, Ideal::Sqrt5] {
            let f = SmallField::new(ideal.q()).unwrap();
            let r = ideal.residue(PHI);
            // φ² = φ + 1 in the residue field
            assert_eq!(f.mul(r, r), f.add(r, 1));
        }
        assert_eq!(Ideal::Sqrt5.residue(ZPhi::new(-1, 2)), 0);
    }
}
