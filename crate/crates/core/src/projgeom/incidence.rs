//! Spanned lines and the statistics t_k / T_k.
//!
//! Pairs are bucketed by the image of their joining line in F_p for a prime
//! p ≡ 1 (mod m). Buckets of three or more points are re-checked exactly and
//! split if the prime lied; the pair-counting identity is asserted at the end.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::config::Configuration;
use super::homog::{cross, dot, join, ProjLine, ProjPoint};
use crate::error::{Error, Result};
use crate::exactfield::modp::{cross3, normalize3, ModImage};

const PRIME_ATTEMPTS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpannedLine {
    /// Indices of the incident configuration points, increasing.
    pub points: Vec<usize>,
}

impl SpannedLine {
    pub fn count(&self) -> usize {
        self.points.len()
    }
}

#[derive(Clone, Debug)]
pub struct IncidenceStats {
    pub n_points: usize,
    /// t_k for every k ≥ 2 with t_k > 0.
    pub t: BTreeMap<usize, usize>,
    /// Sorted by decreasing size, then by point indices.
    pub spanned: Vec<SpannedLine>,
    points: Arc<Vec<ProjPoint>>,
}

#[derive(Serialize)]
struct StatsJson {
    n: usize,
    t: BTreeMap<String, usize>,
}

impl IncidenceStats {
    pub fn t(&self, k: usize) -> usize {
        self.t.get(&k).copied().unwrap_or(0)
    }

    /// T_k: lines with at least k points.
    pub fn big_t(&self, k: usize) -> usize {
        self.t.range(k..).map(|(_, v)| v).sum()
    }

    pub fn max_points_on_line(&self) -> usize {
        self.t.keys().next_back().copied().unwrap_or(0)
    }

    /// Canonical form of the i-th spanned line.
    pub fn line(&self, i: usize) -> ProjLine {
        let pts = &self.spanned[i].points;
        join(&self.points[pts[0]], &self.points[pts[1]]).expect("distinct points")
    }

    /// (line, count) for every spanned line with at least k points.
    pub fn lines_with_at_least(&self, k: usize) -> Vec<(ProjLine, usize)> {
        self.spanned
            .iter()
            .enumerate()
            .take_while(|(_, s)| s.count() >= k)
            .map(|(i, s)| (self.line(i), s.count()))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(StatsJson {
            n: self.n_points,
            t: self.t.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
        })
        .expect("stats serialize")
    }
}

fn modular_images(points: &[ProjPoint], order: u32) -> Option<(ModImage, Vec<[u64; 3]>)> {
    for attempt in 0..PRIME_ATTEMPTS {
        let img = ModImage::new(order, attempt);
        let reduced: Option<Vec<[u64; 3]>> = points
            .par_iter()
            .map(|p| img.reduce_triple(p.coords()))
            .collect();
        let Some(reduced) = reduced else { continue };
        let distinct: HashSet<&[u64; 3]> = reduced.iter().collect();
        if distinct.len() == reduced.len() {
            return Some((img, reduced));
        }
    }
    None
}

/// Split `members` (all > i) into exact lines through point i.
fn exact_split(points: &[ProjPoint], i: usize, members: &[u32]) -> Vec<Vec<u32>> {
    if members.len() == 1 {
        return vec![members.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest: Vec<u32> = members.to_vec();
    while !rest.is_empty() {
        let j = rest[0];
        let l = cross(points[i].coords(), points[j as usize].coords());
        let (on, off): (Vec<u32>, Vec<u32>) = rest[1..]
            .iter()
            .partition(|&&k| dot(&l, points[k as usize].coords()).is_zero());
        let mut group = vec![j];
        group.extend(on);
        out.push(group);
        rest = off;
    }
    out
}

fn spanned_modular(points: &[ProjPoint], order: u32) -> Option<Vec<Vec<usize>>> {
    let (img, red) = modular_images(points, order)?;
    let p = img.p;
    let n = points.len();
    // Per point i: exact lines through i, restricted to members j > i.
    let per_point: Option<Vec<Vec<Vec<u32>>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut buckets: HashMap<[u64; 3], Vec<u32>> = HashMap::new();
            for j in i + 1..n {
                let key = normalize3(cross3(&red[i], &red[j], p), p)?;
                buckets.entry(key).or_default().push(j as u32);
            }
            let mut groups: Vec<Vec<u32>> = buckets
                .into_values()
                .flat_map(|g| exact_split(points, i, &g))
                .collect();
            groups.sort_unstable();
            Some(groups)
        })
        .collect();
    let per_point = per_point?;
    // A line is reported from its smallest point; later sightings are tails.
    let mut covered: HashSet<(u32, u32)> = HashSet::new();
    let mut lines = Vec::new();
    for (i, groups) in per_point.into_iter().enumerate() {
        for g in groups {
            if covered.contains(&(i as u32, g[0])) {
                continue;
            }
            let mut pts: Vec<usize> = Vec::with_capacity(g.len() + 1);
            pts.push(i);
            pts.extend(g.iter().map(|&j| j as usize));
            if pts.len() >= 3 {
                for a in 0..pts.len() {
                    for b in a + 1..pts.len() {
                        covered.insert((pts[a] as u32, pts[b] as u32));
                    }
                }
            }
            lines.push(pts);
        }
    }
    Some(lines)
}

/// Reference path: exact canonical joins of all pairs, hashed.
fn spanned_exact(points: &[ProjPoint]) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut map: HashMap<ProjLine, Vec<usize>> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let l = join(&points[i], &points[j]).expect("distinct points");
            let e = map.entry(l).or_default();
            if e.is_empty() {
                e.push(i);
            }
            if !e.contains(&j) {
                e.push(j);
            }
        }
    }
    map.into_values().collect()
}

fn pair_total(lines: &[Vec<usize>]) -> usize {
    lines.iter().map(|l| l.len() * (l.len() - 1) / 2).sum()
}

pub fn spanned_lines(s: &Configuration) -> Result<IncidenceStats> {
    let n = s.len();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "spanned lines need at least 2 points, got {n}"
        )));
    }
    let points = s.points();
    let mut lines = match spanned_modular(points, s.order()) {
        Some(l) if pair_total(&l) == n * (n - 1) / 2 => l,
        _ => spanned_exact(points),
    };
    for l in &mut lines {
        l.sort_unstable();
    }
    lines.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    let mut t = BTreeMap::new();
    for l in &lines {
        *t.entry(l.len()).or_insert(0) += 1;
    }
    Ok(IncidenceStats {
        n_points: n,
        t,
        spanned: lines
            .into_iter()
            .map(|points| SpannedLine { points })
            .collect(),
        points: Arc::new(points.to_vec()),
    })
}

pub fn orchard_check(s: &Configuration, r: usize) -> Result<bool> {
    if r < 3 {
        return Err(Error::Precondition(format!("orchard bound r = {r} < 3")));
    }
    Ok(spanned_lines(s)?.big_t(r) == 0)
}

/// For each line, the indices of configuration points on it (exact).
pub fn points_on_lines(s: &Configuration, lines: &[ProjLine]) -> Vec<Vec<usize>> {
    let img = ModImage::new(s.order(), 0);
    let p = img.p;
    let red: Vec<Option<[u64; 3]>> = s
        .points()
        .par_iter()
        .map(|q| img.reduce_triple(q.coords()))
        .collect();
    lines
        .par_iter()
        .map(|l| {
            let lr = img.reduce_triple(l.coords());
            s.points()
                .iter()
                .enumerate()
                .filter(|(i, q)| {
                    // Nonzero residue proves non-incidence; zero is confirmed exactly.
                    if let (Some(a), Some(b)) = (&lr, &red[*i]) {
                        let d = (crate::exactfield::modp::mulmod(a[0], b[0], p) as u128
                            + crate::exactfield::modp::mulmod(a[1], b[1], p) as u128
                            + crate::exactfield::modp::mulmod(a[2], b[2], p) as u128)
                            % p as u128;
                        if d != 0 {
                            return false;
                        }
                    }
                    l.contains(q)
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect()
}
