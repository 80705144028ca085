use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::homog::{ProjLine, ProjPoint};
use crate::error::{Error, Result};

/// A finite point set in the projective plane over Q(ζ_m), with optional
/// labeled line lists and per-point tags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Raw", into = "Raw")]
pub struct Configuration {
    order: u32,
    points: Vec<ProjPoint>,
    named_lines: BTreeMap<String, Vec<ProjLine>>,
    labels: BTreeMap<String, Vec<usize>>,
    meta: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct Raw {
    m: u32,
    points: Vec<ProjPoint>,
    #[serde(default)]
    named_lines: BTreeMap<String, Vec<ProjLine>>,
    #[serde(default)]
    labels: BTreeMap<String, Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    meta: BTreeMap<String, String>,
}

impl From<Configuration> for Raw {
    fn from(c: Configuration) -> Raw {
        Raw {
            m: c.order,
            points: c.points,
            named_lines: c.named_lines,
            labels: c.labels,
            meta: c.meta,
        }
    }
}

impl TryFrom<Raw> for Configuration {
    type Error = Error;
    fn try_from(r: Raw) -> Result<Configuration> {
        let mut c = Configuration::new(r.m, r.points)?;
        for (k, v) in r.named_lines {
            c.add_named_lines(&k, v)?;
        }
        for (k, v) in r.labels {
            c.add_label(&k, v)?;
        }
        c.meta = r.meta;
        Ok(c)
    }
}

impl Configuration {
    pub fn new(order: u32, points: Vec<ProjPoint>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if p.order() != order {
                return Err(Error::OrderMismatch(order, p.order()));
            }
            if !seen.insert(p) {
                return Err(Error::Malformed(format!("point {i} is a duplicate")));
            }
        }
        Ok(Configuration {
            order,
            points,
            named_lines: BTreeMap::new(),
            labels: BTreeMap::new(),
            meta: BTreeMap::new(),
        })
    }

    /// Build from a list that may contain repeats, keeping first occurrences.
    pub fn dedup(order: u32, points: Vec<ProjPoint>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        let kept = points.into_iter().filter(|p| seen.insert(p.clone())).collect();
        Self::new(order, kept)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn named_lines(&self) -> &BTreeMap<String, Vec<ProjLine>> {
        &self.named_lines
    }

    pub fn named(&self, label: &str) -> &[ProjLine] {
        self.named_lines.get(label).map_or(&[], Vec::as_slice)
    }

    pub fn all_named_lines(&self) -> Vec<ProjLine> {
        self.named_lines.values().flatten().cloned().collect()
    }

    pub fn labels(&self) -> &BTreeMap<String, Vec<usize>> {
        &self.labels
    }

    pub fn label(&self, tag: &str) -> &[usize] {
        self.labels.get(tag).map_or(&[], Vec::as_slice)
    }

    pub fn meta(&self) -> &BTreeMap<String, String> {
        &self.meta
    }

    pub fn index_of(&self, p: &ProjPoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn add_named_lines(&mut self, label: &str, lines: Vec<ProjLine>) -> Result<()> {
        let mut seen: HashSet<&ProjLine> = self.named_lines.values().flatten().collect();
        for l in &lines {
            if l.order() != self.order {
                return Err(Error::OrderMismatch(self.order, l.order()));
            }
            if !seen.insert(l) {
                return Err(Error::Malformed(format!(
                    "named line {l:?} in {label:?} is listed twice"
                )));
            }
        }
        self.named_lines
            .entry(label.to_string())
            .or_default()
            .extend(lines);
        Ok(())
    }

    pub fn with_named_lines(mut self, label: &str, lines: Vec<ProjLine>) -> Result<Self> {
        self.add_named_lines(label, lines)?;
        Ok(self)
    }

    pub fn add_label(&mut self, tag: &str, mut indices: Vec<usize>) -> Result<()> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.points.len()) {
            return Err(Error::Malformed(format!("label {tag:?} names point {bad}")));
        }
        let entry = self.labels.entry(tag.to_string()).or_default();
        entry.append(&mut indices);
        entry.sort_unstable();
        entry.dedup();
        Ok(())
    }

    pub fn set_meta(&mut self, key: &str, value: impl Into<String>) {
        self.meta.insert(key.to_string(), value.into());
    }

    /// Drop the given point indices; labels are re-indexed, named lines and meta kept.
    pub fn remove_points(&self, remove: &[usize]) -> Configuration {
        let drop: HashSet<usize> = remove.iter().copied().collect();
        let mut new_index = vec![None; self.points.len()];
        let mut points = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            if !drop.contains(&i) {
                new_index[i] = Some(points.len());
                points.push(p.clone());
            }
        }
        let labels = self
            .labels
            .iter()
            .map(|(k, v)| (k.clone(), v.iter().filter_map(|&i| new_index[i]).collect()))
            .collect();
        Configuration {
            order: self.order,
            points,
            named_lines: self.named_lines.clone(),
            labels,
            meta: self.meta.clone(),
        }
    }

    pub fn embed(&self, m2: u32) -> Result<Configuration> {
        let points = self
            .points
            .iter()
            .map(|p| p.embed(m2))
            .collect::<Result<_>>()?;
        let named_lines = self
            .named_lines
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.iter().map(|l| l.embed(m2)).collect::<Result<_>>()?)))
            .collect::<Result<_>>()?;
        Ok(Configuration {
            order: m2,
            points,
            named_lines,
            labels: self.labels.clone(),
            meta: self.meta.clone(),
        })
    }

    /// Replace points and named lines wholesale (same labels/meta); used by maps.
    pub(crate) fn with_geometry(
        &self,
        points: Vec<ProjPoint>,
        named_lines: BTreeMap<String, Vec<ProjLine>>,
    ) -> Configuration {
        Configuration {
            order: self.order,
            points,
            named_lines,
            labels: self.labels.clone(),
            meta: self.meta.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configurations always serialize")
    }

    pub fn from_json(s: &str) -> Result<Configuration> {
        Ok(serde_json::from_str(s)?)
    }
}
