//! Bounded search for a 25-point triangle configuration with 18 lines of five.
//!
//! Work in barycentric coordinates on the reference triangle. Boundary: the
//! vertices plus the midpoint and trisection points of every side; the
//! centroid is always kept. Candidate interior points are the interior
//! crossings of the lines spanned by those 13 points. The search runs over
//! unions of S₃-orbits of candidates totalling 12 points.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::common::ensure;
use crate::error::{Error, Result};
use crate::projgeom::{join, meet, spanned_lines, Configuration, ProjLine, ProjPoint};

fn bary(v: [i64; 3]) -> ProjPoint {
    ProjPoint::from_integers(1, v).expect("nonzero")
}

fn permute(p: &ProjPoint, perm: [usize; 3]) -> ProjPoint {
    let c = p.coords();
    ProjPoint::from_triple([c[perm[0]].clone(), c[perm[1]].clone(), c[perm[2]].clone()])
        .expect("nonzero")
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn boundary() -> Vec<ProjPoint> {
    let mut pts = vec![bary([1, 0, 0]), bary([0, 1, 0]), bary([0, 0, 1])];
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        for (a, b) in [(1, 1), (1, 2), (2, 1)] {
            let mut v = [0; 3];
            v[i] = a;
            v[j] = b;
            pts.push(bary(v));
        }
    }
    pts
}

fn interior(p: &ProjPoint) -> bool {
    // canonical form leads with 1 unless a coordinate vanishes
    p.coords().iter().all(|c| {
        c.as_rational()
            .is_some_and(|r| r > num_rational::BigRational::from_integer(0.into()))
    })
}

fn key(p: &ProjPoint) -> String {
    p.coords()
        .iter()
        .map(|c| c.as_rational().expect("rational").to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn orbits(cands: &[ProjPoint]) -> Vec<Vec<ProjPoint>> {
    let mut done: HashSet<ProjPoint> = HashSet::new();
    let mut out: BTreeMap<String, Vec<ProjPoint>> = BTreeMap::new();
    for p in cands {
        if done.contains(p) {
            continue;
        }
        let mut orbit: Vec<ProjPoint> = Vec::new();
        for perm in PERMS {
            let q = permute(p, perm);
            if !orbit.contains(&q) {
                orbit.push(q);
            }
        }
        orbit.sort_by_key(key);
        done.extend(orbit.iter().cloned());
        out.insert(key(&orbit[0]), orbit);
    }
    out.into_values().collect()
}

/// Affine image: barycentric (a, b, c) ↦ (b, c)/(a + b + c).
fn to_cartesian(p: &ProjPoint) -> ProjPoint {
    let [a, b, c] = p.coords().clone();
    let w = &(&a + &b) + &c;
    ProjPoint::new(b, c, w).expect("nonzero")
}

#[derive(Clone, Debug)]
pub struct Figure5Result {
    pub config: Configuration,
    pub t5: usize,
    pub candidates: usize,
    pub orbit_sets_tried: usize,
}

pub fn reconstruct_figure5() -> Result<Figure5Result> {
    let base = boundary();
    let center = bary([1, 1, 1]);
    let mut all = base.clone();
    all.push(center.clone());
    let mut lines: Vec<ProjLine> = Vec::new();
    let mut seen = HashSet::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let l = join(&all[i], &all[j])?;
            if seen.insert(l.clone()) {
                lines.push(l);
            }
        }
    }
    let mut cands = Vec::new();
    let mut cseen: HashSet<ProjPoint> = all.iter().cloned().collect();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = meet(&lines[i], &lines[j])?;
            if interior(&p) && cseen.insert(p.clone()) {
                cands.push(p);
            }
        }
    }
    let orbs = orbits(&cands);
    let six: Vec<usize> = (0..orbs.len()).filter(|&i| orbs[i].len() == 6).collect();
    let three: Vec<usize> = (0..orbs.len()).filter(|&i| orbs[i].len() == 3).collect();
    let mut choices: Vec<Vec<usize>> = Vec::new();
    for (x, &a) in six.iter().enumerate() {
        for &b in &six[x + 1..] {
            choices.push(vec![a, b]);
        }
    }
    for &a in &six {
        for (x, &b) in three.iter().enumerate() {
            for &c in &three[x + 1..] {
                choices.push(vec![a, b, c]);
            }
        }
    }
    for a in 0..three.len() {
        for b in a + 1..three.len() {
            for c in b + 1..three.len() {
                for d in c + 1..three.len() {
                    choices.push(vec![three[a], three[b], three[c], three[d]]);
                }
            }
        }
    }
    let scored: Vec<Option<usize>> = choices
        .par_iter()
        .map(|ch| {
            let mut pts = all.clone();
            pts.extend(ch.iter().flat_map(|&o| orbs[o].iter().cloned()));
            let c = Configuration::new(1, pts).ok()?;
            let st = spanned_lines(&c).ok()?;
            (st.big_t(6) == 0).then(|| st.t(5))
        })
        .collect();
    let best = scored
        .iter()
        .enumerate()
        .filter_map(|(i, s)| s.map(|s| (s, i)))
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
        .ok_or_else(|| Error::SearchFailed("no orbit union avoids 6-point lines".into()))?;
    let (t5, idx) = best;
    let mut pts: Vec<ProjPoint> = all.clone();
    pts.extend(choices[idx].iter().flat_map(|&o| orbs[o].iter().cloned()));
    let cart: Vec<ProjPoint> = pts.iter().map(to_cartesian).collect();
    let mut c = Configuration::new(1, cart)?;
    let st = spanned_lines(&c)?;
    ensure(c.len() == 25, || format!("{} points", c.len()))?;
    if st.t(5) != 18 || st.big_t(6) != 0 {
        return Err(Error::SearchFailed(format!(
            "best orbit union has t_5 = {}, T_6 = {}",
            st.t(5),
            st.big_t(6)
        )));
    }
    let sides = vec![
        ProjLine::from_integers(1, [0, 1, 0])?,
        ProjLine::from_integers(1, [1, 0, 0])?,
        ProjLine::from_integers(1, [1, 1, -1])?,
    ];
    c.add_named_lines("sides", sides)?;
    c.add_label("boundary", (0..base.len()).collect())?;
    c.set_meta("family", "figure5-search");
    c.set_meta("search", "S3-orbit unions of interior crossings, 12 points");
    Ok(Figure5Result {
        config: c,
        t5,
        candidates: cands.len(),
        orbit_sets_tried: choices.len(),
    })
}
