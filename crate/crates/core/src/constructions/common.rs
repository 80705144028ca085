use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::projgeom::{
    meet, points_on_lines, Configuration, IncidenceStats, ProjLine, ProjMap, ProjPoint,
};

pub(crate) fn int(order: u32, v: i64) -> FieldElement {
    FieldElement::from_integer(order, v)
}

pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Verification(what()))
    }
}

/// The line through the origin at angle pπ/q.
pub(crate) fn line_through_origin(order: u32, p: i64, q: u32) -> ProjLine {
    let (c, s) = FieldElement::cos_sin_in(p, q, order);
    ProjLine::new(s, -c, int(order, 0)).expect("unit direction")
}

/// x·cos ψ + y·sin ψ = d with ψ = pπ/q.
pub(crate) fn line_with_normal(order: u32, p: i64, q: u32, d: FieldElement) -> ProjLine {
    let (c, s) = FieldElement::cos_sin_in(p, q, order);
    ProjLine::new(c, s, -d).expect("unit normal")
}

pub(crate) fn origin(order: u32) -> ProjPoint {
    ProjPoint::from_integers(order, [0, 0, 1]).expect("origin")
}

/// Rotation about the origin by pπ/q.
pub fn rotation(order: u32, p: i64, q: u32) -> ProjMap {
    let (c, s) = FieldElement::cos_sin_in(p, q, order);
    let z = int(order, 0);
    ProjMap::new([
        [c.clone(), -&s, z.clone()],
        [s, c, z.clone()],
        [z.clone(), z, int(order, 1)],
    ])
    .expect("rotation is invertible")
}

/// Reflection in the x-axis.
pub fn reflection_x(order: u32) -> ProjMap {
    let e = |v: [i64; 3]| v.map(|x| int(order, x));
    ProjMap::new([e([1, 0, 0]), e([0, -1, 0]), e([0, 0, 1])]).expect("reflection")
}

/// All pairwise meets of `lines`, deduplicated, in first-seen order.
pub(crate) fn pairwise_meets(lines: &[ProjLine], finite_only: bool) -> Vec<ProjPoint> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = meet(&lines[i], &lines[j]).expect("distinct lines");
            if finite_only && p.is_at_infinity() {
                continue;
            }
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
    }
    out
}

/// Every named line must carry exactly `k` points.
pub(crate) fn check_named_lines(c: &Configuration, k: usize) -> Result<()> {
    for (label, lines) in c.named_lines() {
        for (i, n) in points_on_lines(c, lines).iter().map(Vec::len).enumerate() {
            ensure(n == k, || format!("named line {label}[{i}] has {n} points, expected {k}"))?;
        }
    }
    Ok(())
}

pub(crate) fn check_t(st: &IncidenceStats, k: usize, want: usize) -> Result<()> {
    let got = st.t(k);
    ensure(got == want, || format!("t_{k} = {got}, expected {want}"))
}

pub(crate) fn check_big_t_zero(st: &IncidenceStats, k: usize) -> Result<()> {
    let got = st.big_t(k);
    ensure(got == 0, || format!("T_{k} = {got}, expected 0"))
}

/// Number of named lines through each point.
pub(crate) fn named_line_degrees(c: &Configuration) -> Vec<usize> {
    let mut deg = vec![0; c.len()];
    for on in points_on_lines(c, &c.all_named_lines()) {
        for i in on {
            deg[i] += 1;
        }
    }
    deg
}
