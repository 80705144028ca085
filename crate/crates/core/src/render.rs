//! Deterministic SVG drawings of configurations.
//!
//! Coordinates come from certified enclosures of the homogeneous
//! coordinates and are printed with a fixed number of decimals. Points at
//! infinity become arrow markers on the frame, pointing along their direction.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exactfield::{enclose, FieldElement};
use crate::projgeom::Configuration;

pub const DEFAULT_PRECISION: usize = 12;

type Q = BigRational;

fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

fn approx(a: &FieldElement, precision: usize) -> Result<Q> {
    let bits = (precision as f64 * 3.33).ceil() as u32 + 24;
    let (lo, hi) = enclose(a, bits)?;
    Ok((lo + hi) / q(2, 1))
}

/// Decimal string rounded half away from zero.
pub fn decimal(r: &Q, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = r * Q::from_integer(scale.clone());
    let half = q(1, 2);
    let n = if scaled.is_negative() {
        -(-scaled + half).floor().to_integer()
    } else {
        (scaled + half).floor().to_integer()
    };
    let neg = n.is_negative();
    let s = n.abs().to_string();
    let s = format!("{s:0>width$}", width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

struct Frame {
    x0: Q,
    y0: Q,
    x1: Q,
    y1: Q,
}

impl Frame {
    fn contains(&self, x: &Q, y: &Q) -> bool {
        *x >= self.x0 && *x <= self.x1 && *y >= self.y0 && *y <= self.y1
    }

    fn size(&self) -> Q {
        let w = &self.x1 - &self.x0;
        let h = &self.y1 - &self.y0;
        if w > h {
            w
        } else {
            h
        }
    }
}

/// Segment of a x + b y + c = 0 inside the frame.
fn clip(l: &[Q; 3], f: &Frame) -> Option<((Q, Q), (Q, Q))> {
    let [a, b, c] = l;
    let mut hits: Vec<(Q, Q)> = Vec::new();
    if !b.is_zero() {
        for x in [&f.x0, &f.x1] {
            let y = -(a * x + c) / b;
            hits.push((x.clone(), y));
        }
    }
    if !a.is_zero() {
        for y in [&f.y0, &f.y1] {
            let x = -(b * y + c) / a;
            hits.push((x, y.clone()));
        }
    }
    hits.retain(|(x, y)| f.contains(x, y));
    hits.sort();
    hits.dedup();
    let first = hits.first()?.clone();
    let last = hits.last()?.clone();
    (first != last).then_some((first, last))
}

fn linf(x: &Q, y: &Q) -> Q {
    let (ax, ay) = (x.abs(), y.abs());
    if ax > ay {
        ax
    } else {
        ay
    }
}

pub fn render_svg(config: &Configuration, precision: usize) -> Result<String> {
    let d = |r: &Q| decimal(r, precision);
    // svg y grows downward
    let flip = |r: &Q| d(&-r.clone());

    let mut finite: Vec<(usize, Q, Q)> = Vec::new();
    let mut infinite: Vec<(usize, Q, Q)> = Vec::new();
    for (i, p) in config.points().iter().enumerate() {
        let c = p.coords();
        let x = approx(&c[0], precision)?;
        let y = approx(&c[1], precision)?;
        if p.is_at_infinity() {
            infinite.push((i, x, y));
        } else {
            let w = approx(&c[2], precision)?;
            finite.push((i, x / &w, y / w));
        }
    }
    let (mut x0, mut y0, mut x1, mut y1) = (q(-1, 1), q(-1, 1), q(1, 1), q(1, 1));
    if let Some((_, x, y)) = finite.first() {
        (x0, x1, y0, y1) = (x.clone(), x.clone(), y.clone(), y.clone());
        for (_, x, y) in &finite {
            x0 = x0.min(x.clone());
            x1 = x1.max(x.clone());
            y0 = y0.min(y.clone());
            y1 = y1.max(y.clone());
        }
    }
    let span = {
        let s = Frame { x0: x0.clone(), y0: y0.clone(), x1: x1.clone(), y1: y1.clone() }.size();
        if s.is_zero() {
            Q::one()
        } else {
            s
        }
    };
    let margin = &span * q(3, 20);
    let frame = Frame {
        x0: x0 - &margin,
        y0: y0 - &margin,
        x1: x1 + &margin,
        y1: y1 + &margin,
    };
    let size = frame.size();
    let radius = &size * q(1, 100);
    let stroke = &size * q(1, 400);

    let mut out = String::new();
    let w = &frame.x1 - &frame.x0;
    let h = &frame.y1 - &frame.y0;
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        d(&frame.x0),
        flip(&frame.y1),
        d(&w),
        d(&h)
    );
    let _ = writeln!(
        out,
        "<style>.line{{stroke:#444;stroke-width:{}}} .point{{fill:#000}} .open-circle{{fill:#fff;stroke:#000;stroke-width:{}}} .pair-member{{fill:#c33}} .infinite-marker{{fill:#36c}}</style>",
        d(&stroke),
        d(&stroke)
    );
    for (name, lines) in config.named_lines() {
        for l in lines {
            if l.is_infinity() {
                continue;
            }
            let c = l.coords();
            let coeffs = [
                approx(&c[0], precision)?,
                approx(&c[1], precision)?,
                approx(&c[2], precision)?,
            ];
            if let Some(((ax, ay), (bx, by))) = clip(&coeffs, &frame) {
                let _ = writeln!(
                    out,
                    "<line class=\"line\" data-name=\"{name}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    d(&ax),
                    flip(&ay),
                    d(&bx),
                    flip(&by)
                );
            }
        }
    }
    let style_of = |i: usize| {
        if config.label("open-circle").contains(&i) {
            "open-circle"
        } else if config.label("pair-member").contains(&i) {
            "pair-member"
        } else {
            "point"
        }
    };
    for (i, x, y) in &finite {
        let _ = writeln!(
            out,
            "<circle class=\"{}\" data-index=\"{i}\" cx=\"{}\" cy=\"{}\" r=\"{}\"/>",
            style_of(*i),
            d(x),
            flip(y),
            d(&radius)
        );
    }
    let cx = (&frame.x0 + &frame.x1) / q(2, 1);
    let cy = (&frame.y0 + &frame.y1) / q(2, 1);
    let (hw, hh) = (&w / q(2, 1), &h / q(2, 1));
    for (i, dx, dy) in &infinite {
        // reach the frame along (dx, dy)
        let t = match (dx.is_zero(), dy.is_zero()) {
            (true, _) => &hh / dy.abs(),
            (_, true) => &hw / dx.abs(),
            _ => (&hw / dx.abs()).min(&hh / dy.abs()),
        };
        let (tx, ty) = (&cx + dx * &t, &cy + dy * &t);
        let n = linf(dx, dy);
        let (ux, uy) = (dx / &n, dy / &n);
        let len = &size * q(1, 25);
        let half = &size * q(1, 60);
        let (bx, by) = (&tx - &ux * &len, &ty - &uy * &len);
        let corners = [
            (tx.clone(), ty.clone()),
            (&bx - &uy * &half, &by + &ux * &half),
            (&bx + &uy * &half, &by - &ux * &half),
        ];
        let pts: Vec<String> = corners.iter().map(|(x, y)| format!("{},{}", d(x), flip(y))).collect();
        let _ = writeln!(
            out,
            "<polygon class=\"infinite-marker\" data-index=\"{i}\" points=\"{}\"><title>[{}:{}:0]</title></polygon>",
            pts.join(" "),
            d(dx),
            d(dy)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
