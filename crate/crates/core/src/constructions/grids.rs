//! Rational configurations: grids and their relatives.

use std::collections::HashSet;

use super::common::*;
use crate::error::{Error, Result};
use crate::projgeom::{points_on_lines, spanned_lines, Configuration, ProjLine, ProjPoint};

fn pt(x: i64, y: i64) -> ProjPoint {
    ProjPoint::from_integers(1, [x, y, 1]).expect("finite point")
}

fn half(x2: i64, y2: i64) -> ProjPoint {
    ProjPoint::affine_ratio(1, (x2, 2), (y2, 2)).expect("finite point")
}

/// The n×n integer grid: rows, columns and both diagonals carry n points.
pub fn square_grid(n: u32) -> Result<Configuration> {
    if n < 2 {
        return Err(Error::Precondition(format!("square_grid needs n ≥ 2, got {n}")));
    }
    let n = n as i64;
    let points = (0..n).flat_map(|x| (0..n).map(move |y| pt(x, y))).collect();
    let mut c = Configuration::new(1, points)?;
    let st = spanned_lines(&c)?;
    let k = n as usize;
    if n == 2 {
        check_t(&st, 2, 6)?;
    } else {
        check_t(&st, k, 2 * k + 2)?;
        check_big_t_zero(&st, k + 1)?;
    }
    c.set_meta("family", "square-grid");
    Ok(c)
}

/// The 3×3 grid with two opposite edge midpoints pulled halfway to the center.
pub fn nine_tree() -> Result<Configuration> {
    let points = vec![
        pt(0, 0),
        pt(2, 0),
        pt(0, 2),
        pt(2, 2),
        pt(1, 1),
        pt(0, 1),
        pt(2, 1),
        half(2, 1),
        half(2, 3),
    ];
    let mut c = Configuration::new(1, points)?;
    let st = spanned_lines(&c)?;
    check_t(&st, 3, 10)?;
    check_big_t_zero(&st, 4)?;
    c.add_named_lines(
        "verticals",
        vec![
            ProjLine::from_integers(1, [1, 0, 0])?,
            ProjLine::from_integers(1, [1, 0, -1])?,
            ProjLine::from_integers(1, [1, 0, -2])?,
        ],
    )?;
    c.set_meta("family", "nine-tree");
    Ok(c)
}

/// 16 grid points, two half-integer points and three points at infinity.
pub fn dudeney21() -> Result<Configuration> {
    let mut points: Vec<ProjPoint> = (1..=4).flat_map(|x| (1..=4).map(move |y| pt(x, y))).collect();
    points.push(half(3, 5));
    points.push(half(5, 3));
    for v in [[0, 1, 0], [1, 0, 0], [1, 1, 0]] {
        points.push(ProjPoint::from_integers(1, v)?);
    }
    let mut c = Configuration::new(1, points)?;
    let st = spanned_lines(&c)?;
    check_t(&st, 5, 12)?;
    check_big_t_zero(&st, 6)?;
    let twelfth = ProjLine::from_integers(1, [1, 1, -4])?;
    let on = points_on_lines(&c, std::slice::from_ref(&twelfth));
    ensure(on[0].len() == 5, || format!("x+y=4 carries {} points", on[0].len()))?;
    c.add_named_lines("twelfth", vec![twelfth])?;
    c.set_meta("family", "dudeney21");
    Ok(c)
}

/// One diagonal of the odd-coordinate grid: y = slope·x + offset.
#[derive(Clone, Copy, Debug)]
struct Diagonal {
    slope: i64,
    offset: i64,
}

/// (n−1)² odd-coordinate grid, the center, the two axis points at infinity,
/// and 2n−4 points completing diagonals greedily.
pub fn square_plus_infinity(n: u32) -> Result<Configuration> {
    if n < 7 || n % 2 == 0 {
        return Err(Error::Precondition(format!(
            "square_plus_infinity needs odd n ≥ 7, got {n}"
        )));
    }
    let n = n as i64;
    let r = n - 2;
    let coords: Vec<i64> = (-r..=r).step_by(2).collect();
    let mut points: Vec<ProjPoint> = coords
        .iter()
        .flat_map(|&x| coords.iter().map(move |&y| pt(x, y)))
        .collect();
    points.push(pt(0, 0));
    points.push(ProjPoint::from_integers(1, [1, 0, 0])?);
    points.push(ProjPoint::from_integers(1, [0, 1, 0])?);
    let mut seen: HashSet<ProjPoint> = points.iter().cloned().collect();
    let in_grid = |v: i64| v.abs() <= r;
    let mut budget = 2 * n - 4;
    let mut completed = 0;
    // Diagonal y = ±x + 2d holds n−1−|d| grid points and needs |d|+1 more.
    'outer: for d in 1.. {
        for (slope, sign) in [(1, 1), (-1, 1), (1, -1), (-1, -1)] {
            if budget == 0 {
                break 'outer;
            }
            let diag = Diagonal {
                slope,
                offset: 2 * d * sign,
            };
            let on_grid = coords
                .iter()
                .filter(|&&x| in_grid(diag.slope * x + diag.offset))
                .count() as i64;
            let need = n - on_grid;
            // Extend beyond the grid: up-right for slope +1, down-right for slope -1.
            let x_max = coords
                .iter()
                .copied()
                .filter(|&x| in_grid(diag.slope * x + diag.offset))
                .max()
                .expect("nonempty diagonal");
            let mut added = 0;
            let mut k = 1;
            while added < need && budget > 0 {
                let x = x_max + 2 * k;
                let p = pt(x, diag.slope * x + diag.offset);
                k += 1;
                if seen.insert(p.clone()) {
                    points.push(p);
                    added += 1;
                    budget -= 1;
                }
            }
            if added == need {
                completed += 1;
            }
        }
        if d > n {
            break;
        }
    }
    let nn = (n * n) as usize;
    ensure(points.len() == nn, || format!("{} points, expected {nn}", points.len()))?;
    let mut c = Configuration::new(1, points)?;
    let st = spanned_lines(&c)?;
    let big_t = st.big_t(n as usize);
    ensure(big_t >= 2 * n as usize + 2, || {
        format!("T_{n} = {big_t}, expected ≥ {}", 2 * n + 2)
    })?;
    c.set_meta("family", "square-plus-infinity");
    c.set_meta("completed_diagonals", completed.to_string());
    c.set_meta("T_n", big_t.to_string());
    Ok(c)
}
