use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::modp::{cross3, normalize3, ModImage};
use crate::projgeom::{
    concurrent, meet, send_to_infinity_map, Configuration, ProjLine, ProjPoint,
};

/// N lines through one point at infinity ("parallels") and M transversals
/// avoiding that point, with the number of distinct intersection points on
/// each parallel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Raw", into = "Raw")]
pub struct BrassInstance {
    order: u32,
    parallels: Vec<ProjLine>,
    transversals: Vec<ProjLine>,
    common_point: ProjPoint,
    per_line_points: Vec<usize>,
    meta: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct Raw {
    m: u32,
    parallels: Vec<ProjLine>,
    transversals: Vec<ProjLine>,
    #[serde(default, skip_deserializing)]
    counts: Vec<usize>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    meta: BTreeMap<String, String>,
}

impl From<BrassInstance> for Raw {
    fn from(b: BrassInstance) -> Raw {
        Raw {
            m: b.order,
            parallels: b.parallels,
            transversals: b.transversals,
            counts: b.per_line_points,
            meta: b.meta,
        }
    }
}

impl TryFrom<Raw> for BrassInstance {
    type Error = Error;
    fn try_from(r: Raw) -> Result<BrassInstance> {
        let mut b = BrassInstance::new(r.parallels, r.transversals)?;
        if b.order != r.m {
            return Err(Error::OrderMismatch(r.m, b.order));
        }
        b.meta = r.meta;
        Ok(b)
    }
}

impl BrassInstance {
    pub fn new(parallels: Vec<ProjLine>, transversals: Vec<ProjLine>) -> Result<Self> {
        if parallels.len() < 2 {
            return Err(Error::Malformed("need at least two parallels".into()));
        }
        let order = parallels[0].order();
        if let Some(l) = parallels.iter().chain(&transversals).find(|l| l.order() != order) {
            return Err(Error::OrderMismatch(order, l.order()));
        }
        let common = meet(&parallels[0], &parallels[1])
            .map_err(|_| Error::Malformed("parallels 0 and 1 coincide".into()))?;
        if !common.is_at_infinity() {
            return Err(Error::Malformed(
                "parallels meet at a finite point; project it to infinity first".into(),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for (i, l) in parallels.iter().enumerate() {
            if !l.contains(&common) {
                return Err(Error::Malformed(format!("parallel {i} misses the common point")));
            }
            if !seen.insert(l) {
                return Err(Error::Malformed(format!("parallel {i} is repeated")));
            }
        }
        for (j, t) in transversals.iter().enumerate() {
            if t.contains(&common) {
                return Err(Error::Malformed(format!(
                    "transversal {j} passes through the parallels' common point"
                )));
            }
            if !seen.insert(t) {
                return Err(Error::Malformed(format!(
                    "transversal {j} repeats another line"
                )));
            }
        }
        let per_line_points = count_points(order, &parallels, &transversals);
        Ok(BrassInstance {
            order,
            parallels,
            transversals,
            common_point: common,
            per_line_points,
            meta: BTreeMap::new(),
        })
    }

    /// Use the named lines "parallels" and "transversals" of a configuration,
    /// first sending their common point to infinity if it is finite.
    pub fn from_configuration(c: &Configuration) -> Result<Self> {
        let par = c.named("parallels");
        let tr = c.named("transversals");
        if par.len() < 2 || tr.is_empty() {
            return Err(Error::Malformed(
                "configuration lacks named \"parallels\"/\"transversals\"".into(),
            ));
        }
        let common = meet(&par[0], &par[1])?;
        if common.is_at_infinity() {
            return Self::new(par.to_vec(), tr.to_vec());
        }
        let map = send_to_infinity_map(c, &common)?;
        Self::new(
            par.iter().map(|l| map.apply_line(l)).collect(),
            tr.iter().map(|l| map.apply_line(l)).collect(),
        )
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Number of parallels.
    pub fn n(&self) -> usize {
        self.parallels.len()
    }

    /// Number of transversals.
    pub fn m(&self) -> usize {
        self.transversals.len()
    }

    pub fn parallels(&self) -> &[ProjLine] {
        &self.parallels
    }

    pub fn transversals(&self) -> &[ProjLine] {
        &self.transversals
    }

    pub fn common_point(&self) -> &ProjPoint {
        &self.common_point
    }

    pub fn per_line_points(&self) -> &[usize] {
        &self.per_line_points
    }

    pub fn meta(&self) -> &BTreeMap<String, String> {
        &self.meta
    }

    pub fn set_meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.insert(key.to_string(), value.into());
    }

    /// Same instance with one parallel removed.
    pub fn without_parallel(&self, i: usize) -> Result<Self> {
        let mut par = self.parallels.clone();
        par.remove(i);
        let mut b = Self::new(par, self.transversals.clone())?;
        b.meta = self.meta.clone();
        Ok(b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances always serialize")
    }
}

/// Distinct points cut on each parallel by the transversals.
fn count_points(order: u32, parallels: &[ProjLine], transversals: &[ProjLine]) -> Vec<usize> {
    let img = ModImage::new(order, 0);
    let p = img.p;
    let tr_mod: Vec<Option<[u64; 3]>> = transversals
        .iter()
        .map(|t| img.reduce_triple(t.coords()))
        .collect();
    parallels
        .par_iter()
        .map(|l| {
            let l_mod = img.reduce_triple(l.coords());
            // Representatives of exact meeting points found so far.
            let mut reps: Vec<usize> = Vec::new();
            let mut by_key: HashMap<[u64; 3], Vec<usize>> = HashMap::new();
            let mut unkeyed: Vec<usize> = Vec::new();
            for (j, t) in tr_mod.iter().enumerate() {
                let key = match (&l_mod, t) {
                    (Some(a), Some(b)) => normalize3(cross3(a, b, p), p),
                    _ => None,
                };
                // Same meeting point ⟺ l, λ_r, λ_j concurrent; residues only narrow the search.
                let same = |r: usize| concurrent(l, &transversals[r], &transversals[j]);
                let candidates: Vec<usize> = match key {
                    Some(k) => by_key.get(&k).cloned().unwrap_or_default(),
                    None => reps.clone(),
                };
                let found = candidates
                    .iter()
                    .chain(unkeyed.iter())
                    .any(|&r| same(r));
                if !found {
                    reps.push(j);
                    match key {
                        Some(k) => by_key.entry(k).or_default().push(j),
                        None => unkeyed.push(j),
                    }
                }
            }
            reps.len()
        })
        .collect()
}

/// (every parallel carries at most N points, the per-parallel counts).
pub fn verify_brass(inst: &BrassInstance) -> (bool, Vec<usize>) {
    let n = inst.n();
    let counts = inst.per_line_points.clone();
    (counts.iter().all(|&c| c <= n), counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(v: [i64; 3]) -> ProjLine {
        ProjLine::from_integers(1, v).unwrap()
    }

    #[test]
    fn generic_transversals_exceed_the_bound() {
        let par = vec![line([1, 0, 0]), line([1, 0, -1]), line([1, 0, -2])];
        let tr = vec![
            line([0, 1, 0]),
            line([1, 1, -7]),
            line([1, -3, 1]),
            line([2, 5, -11]),
        ];
        let b = BrassInstance::new(par, tr).unwrap();
        let (ok, counts) = verify_brass(&b);
        assert!(!ok);
        assert_eq!(counts, vec![4, 4, 4]);
    }

    #[test]
    fn malformed_instances_are_rejected() {
        let par = vec![line([1, 0, 0]), line([1, 0, -1])];
        assert!(BrassInstance::new(par.clone(), vec![line([1, 0, -5])]).is_err());
        let crossing = vec![line([1, 0, 0]), line([0, 1, 0])];
        assert!(BrassInstance::new(crossing, vec![line([1, 1, 1])]).is_err());
    }

    #[test]
    fn concurrent_transversals_share_a_point() {
        let par = vec![line([1, 0, 0]), line([1, 0, -1])];
        // three lines through (0, 0) and one through (1, 5)
        let tr = vec![line([1, 1, 0]), line([1, -1, 0]), line([2, 1, 0]), line([0, 1, -5])];
        let b = BrassInstance::new(par, tr).unwrap();
        assert_eq!(b.per_line_points(), &[2, 4]);
    }
}
