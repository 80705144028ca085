//! Pencils through the origin with unit-distance transversals.

use super::common::*;
use crate::bounds::BrassInstance;
use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::projgeom::{meet, spanned_lines, Configuration, ProjLine, ProjMap, ProjPoint};

/// Sends the origin to [0:1:0] and the line x = 2y to infinity. That line
/// meets every pencil line only at the origin and no transversal passes
/// through the origin, so no intersection point is lost.
fn pencil_projection(order: u32) -> ProjMap {
    let e = |v: [i64; 3]| v.map(|x| int(order, x));
    ProjMap::new([e([2, 1, 0]), e([0, 0, 1]), e([1, -2, 0])]).expect("invertible frame")
}

fn project(order: u32, pencil: &[ProjLine], transversals: &[ProjLine]) -> Result<BrassInstance> {
    let map = pencil_projection(order);
    BrassInstance::new(
        pencil.iter().map(|l| map.apply_line(l)).collect(),
        transversals.iter().map(|l| map.apply_line(l)).collect(),
    )
}

fn odd_lines(n: u32) -> (u32, Vec<ProjLine>, Vec<ProjLine>) {
    let order = 4 * n;
    let pencil: Vec<ProjLine> = (0..n as i64).map(|i| line_through_origin(order, i, n)).collect();
    let mut tr = Vec::with_capacity(2 * n as usize + 1);
    for i in 0..n as i64 {
        // parallel to l_i at distance ±1: normal angle iπ/N + π/2
        for d in [1, -1] {
            tr.push(line_with_normal(order, 2 * i + n as i64, 2 * n, int(order, d)));
        }
    }
    tr.push(ProjLine::infinity(order));
    (order, pencil, tr)
}

fn check_counts(b: &BrassInstance, want: usize) -> Result<()> {
    for (i, &k) in b.per_line_points().iter().enumerate() {
        ensure(k == want, || format!("parallel {i} carries {k} points, expected {want}"))?;
    }
    Ok(())
}

/// Brass instance of the odd pencil without building the N² points.
pub fn pencil_odd_instance(n: u32) -> Result<BrassInstance> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Precondition(format!("pencil_odd needs odd N ≥ 3, got {n}")));
    }
    let (order, pencil, tr) = odd_lines(n);
    let mut b = project(order, &pencil, &tr)?;
    check_counts(&b, n as usize)?;
    b.set_meta("family", "pencil-odd");
    Ok(b)
}

/// N lines through the origin at angles iπ/N, the 2N lines parallel to them
/// at unit distance, and the line at infinity.
pub fn pencil_odd(n: u32) -> Result<(BrassInstance, Configuration)> {
    let b = pencil_odd_instance(n)?;
    let (order, pencil, tr) = odd_lines(n);
    let mut pts = Vec::new();
    for l in &pencil {
        for t in &tr {
            pts.push(meet(l, t)?);
        }
    }
    let c = Configuration::dedup(order, pts)?
        .with_named_lines("parallels", pencil)?
        .with_named_lines("transversals", tr)?;
    let nn = n as usize;
    ensure(c.len() == nn * nn, || format!("{} points, expected {}", c.len(), nn * nn))?;
    check_named_lines(&c, nn)?;
    let st = spanned_lines(&c)?;
    check_t(&st, nn, 3 * nn + 1)?;
    check_big_t_zero(&st, nn + 1)?;
    let mut c = c;
    c.set_meta("family", "pencil-odd");
    c.set_meta("N", n.to_string());
    Ok((b, c))
}

fn even_lines(n: u32) -> (u32, Vec<ProjLine>, Vec<ProjLine>) {
    // Rotating by π/2N needs angles in multiples of π/2N, hence order 4N.
    let order = 4 * n;
    let pencil: Vec<ProjLine> = (0..n as i64).map(|i| line_through_origin(order, i, n)).collect();
    let mut tr = Vec::with_capacity(2 * n as usize);
    for i in 0..n as i64 {
        // normal angle iπ/N + π/2 + π/2N
        for d in [1, -1] {
            tr.push(line_with_normal(order, 2 * i + n as i64 + 1, 2 * n, int(order, d)));
        }
    }
    (order, pencil, tr)
}

/// The even pencil with transversals rotated by π/2N and no line at infinity.
pub fn pencil_even(n: u32) -> Result<BrassInstance> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::Precondition(format!("pencil_even needs even N ≥ 6, got {n}")));
    }
    let (order, pencil, tr) = even_lines(n);
    let mut b = project(order, &pencil, &tr)?;
    let (ok, counts) = crate::bounds::verify_brass(&b);
    ensure(ok, || format!("per-parallel counts {counts:?} exceed N = {n}"))?;
    b.set_meta("family", "pencil-even");
    Ok(b)
}

/// Intersection points of the even pencil, as a configuration with its lines.
pub fn pencil_even_configuration(n: u32) -> Result<Configuration> {
    pencil_even(n)?;
    let (order, pencil, tr) = even_lines(n);
    let mut pts = Vec::new();
    for l in &pencil {
        for t in &tr {
            pts.push(meet(l, t)?);
        }
    }
    let mut c = Configuration::dedup(order, pts)?
        .with_named_lines("parallels", pencil)?
        .with_named_lines("transversals", tr)?;
    c.set_meta("family", "pencil-even");
    c.set_meta("N", n.to_string());
    Ok(c)
}

/// Squared distances from the origin of the finite points on pencil line i.
pub fn pencil_odd_distances(c: &Configuration, i: usize) -> Vec<FieldElement> {
    let l = &c.named("parallels")[i];
    c.points()
        .iter()
        .filter(|p| l.contains(p))
        .filter_map(ProjPoint::affine_coords)
        .map(|(x, y)| &x.square() + &y.square())
        .collect()
}
