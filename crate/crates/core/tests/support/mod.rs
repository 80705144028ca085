//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use orchard::{Configuration, FieldElement};

type T3 = [FieldElement; 3];

fn cross(u: &T3, v: &T3) -> T3 {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn dot(u: &T3, v: &T3) -> FieldElement {
    &(&(&u[0] * &v[0]) + &(&u[1] * &v[1])) + &(&u[2] * &v[2])
}

/// Every spanned line as its set of point indices, by brute force: for each
/// pair not already covered, test every point against the cross product.
pub fn naive_lines(c: &Configuration) -> Vec<BTreeSet<usize>> {
    let pts: Vec<T3> = c.points().iter().map(|p| p.coords().clone()).collect();
    let n = pts.len();
    let mut covered = vec![vec![false; n]; n];
    let mut lines = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if covered[i][j] {
                continue;
            }
            let l = cross(&pts[i], &pts[j]);
            let on: BTreeSet<usize> = (0..n).filter(|&k| dot(&l, &pts[k]).is_zero()).collect();
            for &a in &on {
                for &b in &on {
                    covered[a][b] = true;
                }
            }
            lines.push(on);
        }
    }
    lines
}

/// t_k for k ≥ 2 from [`naive_lines`].
pub fn naive_profile(c: &Configuration) -> BTreeMap<usize, usize> {
    let mut t = BTreeMap::new();
    for l in naive_lines(c) {
        *t.entry(l.len()).or_insert(0) += 1;
    }
    t
}

pub fn big_t(profile: &BTreeMap<usize, usize>, k: usize) -> usize {
    profile.range(k..).map(|(_, v)| v).sum()
}

/// Distinct intersection points on each pencil line, recounted in floating
/// point from the angles alone. Pencil line i has direction iπ/N; each
/// transversal is (normal angle in units of π/2N, signed distance).
pub fn pencil_counts_f64(n: u32, transversals: &[(i64, f64)], with_infinity: bool) -> Vec<usize> {
    use std::f64::consts::PI;
    (0..n)
        .map(|i| {
            let theta = i as f64 * PI / n as f64;
            let mut rs: Vec<f64> = Vec::new();
            let mut infinite = with_infinity;
            for &(k, d) in transversals {
                let phi = k as f64 * PI / (2 * n) as f64;
                let c = (theta - phi).cos();
                if c.abs() < 1e-12 {
                    infinite = true;
                } else {
                    rs.push(d / c);
                }
            }
            rs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            rs.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
            rs.len() + infinite as usize
        })
        .collect()
}
