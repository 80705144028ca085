//! Regular stars, their rings, and the nested-star configurations.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};

use super::common::*;
use crate::bounds::BrassInstance;
use crate::error::{Error, Result};
use crate::exactfield::FieldElement;
use crate::projgeom::{
    join, meet, send_to_infinity_map, spanned_lines, Configuration, ProjLine, ProjPoint,
};

/// The N lines through vertex k and vertex k + s of a regular N-gon, with
/// s = (N−1)/2 for odd N and s = N/2 − 1 for even N.
#[derive(Clone, Debug)]
pub struct StarSpec {
    pub n: u32,
    /// Ambient field order; must hold cos/sin of multiples of π/N.
    pub order: u32,
    pub circumradius: FieldElement,
    /// (cos, sin) of the rotation applied to the vertex polygon.
    pub phase: (FieldElement, FieldElement),
}

impl StarSpec {
    /// Vertices at angles (2k + phase_steps)·π/N.
    pub fn regular(n: u32, order: u32, circumradius: FieldElement, phase_steps: i64) -> Self {
        StarSpec {
            n,
            order,
            circumradius,
            phase: FieldElement::cos_sin_in(phase_steps, n, order),
        }
    }

    pub fn step(&self) -> u32 {
        if self.n % 2 == 1 {
            (self.n - 1) / 2
        } else {
            self.n / 2 - 1
        }
    }

    pub fn vertices(&self) -> Vec<ProjPoint> {
        let (pc, ps) = &self.phase;
        (0..self.n as i64)
            .map(|k| {
                let (c, s) = FieldElement::cos_sin_in(2 * k, self.n, self.order);
                let x = &(pc * &c) - &(ps * &s);
                let y = &(ps * &c) + &(pc * &s);
                ProjPoint::affine(&self.circumradius * &x, &self.circumradius * &y)
                    .expect("finite vertex")
            })
            .collect()
    }

    pub fn lines(&self) -> Vec<ProjLine> {
        let v = self.vertices();
        let n = self.n as usize;
        let s = self.step() as usize;
        (0..n)
            .map(|k| join(&v[k], &v[(k + s) % n]).expect("distinct vertices"))
            .collect()
    }

    /// Number of rings (vertex ring included).
    pub fn ring_count(&self) -> usize {
        self.step() as usize
    }

    /// Radius of ring j (1 = innermost, `ring_count()` = vertices):
    /// R·cos(sπ/N) / cos(jπ/N).
    pub fn ring_radius(&self, j: u32) -> FieldElement {
        let (cs, _) = FieldElement::cos_sin_in(self.step() as i64, self.n, self.order);
        let (cj, _) = FieldElement::cos_sin_in(j as i64, self.n, self.order);
        let q = arith_div(&cs, &cj);
        &self.circumradius * &q
    }
}

fn arith_div(a: &FieldElement, b: &FieldElement) -> FieldElement {
    crate::exactfield::arith(a, b, crate::exactfield::ArithOp::Div).expect("nonzero divisor")
}

#[derive(Clone, Debug)]
pub struct Ring {
    /// 1-based, by increasing radius.
    pub index: usize,
    pub squared_radius: FieldElement,
    pub points: Vec<ProjPoint>,
}

fn squared_radius(p: &ProjPoint) -> FieldElement {
    let (x, y) = p.affine_coords().expect("finite point");
    &x.square() + &y.square()
}

/// Finite pairwise intersections of the star's lines, grouped by exact radius.
pub fn star_rings(spec: &StarSpec) -> Result<Vec<Ring>> {
    if spec.n < 5 {
        return Err(Error::Precondition(format!("stars need N ≥ 5, got {}", spec.n)));
    }
    let pts = pairwise_meets(&spec.lines(), true);
    let mut groups: HashMap<FieldElement, Vec<ProjPoint>> = HashMap::new();
    for p in pts {
        groups.entry(squared_radius(&p)).or_default().push(p);
    }
    let mut rings: Vec<(FieldElement, Vec<ProjPoint>)> = groups.into_iter().collect();
    rings.sort_by(|a, b| a.0.cmp_real(&b.0).unwrap_or(Ordering::Equal));
    Ok(rings
        .into_iter()
        .enumerate()
        .map(|(i, (r, points))| Ring {
            index: i + 1,
            squared_radius: r,
            points,
        })
        .collect())
}

/// ρ_N(i, j) = sin(iπ/N) / sin(jπ/N) in Q(ζ_{lcm(4,2N)}).
pub fn ring_ratio(n: u32, i: u32, j: u32) -> Result<FieldElement> {
    if i == 0 || j == 0 || 2 * i >= n || 2 * j >= n || i == j {
        return Err(Error::Precondition(format!(
            "ring_ratio needs 0 < i, j < N/2 and i ≠ j (N={n}, i={i}, j={j})"
        )));
    }
    let (_, si) = FieldElement::cos_sin(i as i64, n);
    let (_, sj) = FieldElement::cos_sin(j as i64, n);
    Ok(arith_div(&si, &sj))
}

/// Cross-check the closed-form ring radii against the intersection oracle.
fn check_ring_formula(spec: &StarSpec) -> Result<Vec<Ring>> {
    let rings = star_rings(spec)?;
    ensure(rings.len() == spec.ring_count(), || {
        format!("{} rings, expected {}", rings.len(), spec.ring_count())
    })?;
    for r in &rings {
        let want = spec.ring_radius(r.index as u32).square();
        ensure(r.squared_radius == want, || {
            format!("ring {} radius disagrees with the closed form", r.index)
        })?;
        ensure(r.points.len() == spec.n as usize, || {
            format!("ring {} has {} points", r.index, r.points.len())
        })?;
    }
    Ok(rings)
}

fn axes(order: u32, n: u32) -> Vec<ProjLine> {
    (0..n as i64).map(|l| line_through_origin(order, l, n)).collect()
}

fn ring_points(spec: &StarSpec) -> Vec<ProjPoint> {
    pairwise_meets(&spec.lines(), true)
}

fn union_points(groups: &[Vec<ProjPoint>]) -> Vec<ProjPoint> {
    let mut seen = HashSet::new();
    groups
        .iter()
        .flatten()
        .filter(|p| seen.insert((*p).clone()))
        .cloned()
        .collect()
}

fn double_star_candidate(n: u32, a: &StarSpec, b: &StarSpec) -> Result<Configuration> {
    let order = a.order;
    let nn = (n + 1) as usize;
    let center = origin(order);
    let pa = ring_points(a);
    let pb = ring_points(b);
    let points = union_points(&[vec![center], pa.clone(), pb.clone()]);
    ensure(points.len() == (n * n) as usize, || {
        format!("{} points, expected {}", points.len(), n * n)
    })?;
    let mut c = Configuration::new(order, points)?
        .with_named_lines("axes", axes(order, n + 1))?
        .with_named_lines("starA", a.lines())?
        .with_named_lines("starB", b.lines())?;
    check_named_lines(&c, n as usize)?;
    let st = spanned_lines(&c)?;
    check_t(&st, n as usize, 3 * nn)?;
    check_big_t_zero(&st, n as usize + 1)?;
    let shared: HashSet<&ProjPoint> = pa.iter().filter(|p| pb.contains(p)).collect();
    let mut open = vec![0];
    open.extend((0..c.len()).filter(|&i| shared.contains(&c.points()[i])));
    c.add_label("center", vec![0])?;
    c.add_label("open-circle", open)?;
    Ok(c)
}

/// n² points on 3n+3 lines of n: two nested (n+1)-point stars plus the axes.
pub fn double_star(n: u32) -> Result<Configuration> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::Precondition(format!("double_star needs even n ≥ 4, got {n}")));
    }
    let big_n = n + 1;
    let order = 4 * big_n;
    let a = StarSpec::regular(big_n, order, int(order, 1), 0);
    check_ring_formula(&a)?;
    // B's vertex ring (its outermost) lands on A's innermost ring.
    let rb = a.ring_radius(1);
    let mut last = None;
    for phase in [0, 1] {
        let b = StarSpec::regular(big_n, order, rb.clone(), phase);
        match double_star_candidate(n, &a, &b) {
            Ok(mut c) => {
                c.set_meta("family", "double-star");
                c.set_meta("n", n.to_string());
                c.set_meta("ring_match", format!("A ring 1 = B ring {}", b.ring_count()));
                c.set_meta("phase_B", format!("{phase}*pi/{big_n}"));
                return Ok(c);
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("two candidates tried"))
}

/// Lines through `center` become parallels; everything else transversals.
fn brass_from(
    c: &Configuration,
    center: &ProjPoint,
    parallels: &[ProjLine],
    transversals: &[ProjLine],
) -> Result<BrassInstance> {
    let map = send_to_infinity_map(c, center)?;
    BrassInstance::new(
        parallels.iter().map(|l| map.apply_line(l)).collect(),
        transversals.iter().map(|l| map.apply_line(l)).collect(),
    )
}

pub fn double_star_to_brass(n: u32) -> Result<BrassInstance> {
    let c = double_star(n)?;
    let center = c.points()[0].clone();
    let mut tr = c.named("starA").to_vec();
    tr.extend_from_slice(c.named("starB"));
    let mut b = brass_from(&c, &center, c.named("axes"), &tr)?;
    let big_n = (n + 1) as usize;
    for (i, &k) in b.per_line_points().iter().enumerate() {
        ensure(k == big_n, || format!("parallel {i} carries {k} points, expected {big_n}"))?;
    }
    b.set_meta("family", "double-star");
    Ok(b)
}

/// Output of [`collapsed_star`].
#[derive(Clone, Debug)]
pub struct CollapsedStar {
    /// N parallels, 2N+1 transversals, N−1 points on each parallel.
    pub full: BrassInstance,
    /// One parallel dropped: N−1 parallels and the same transversals.
    pub reduced: BrassInstance,
    /// (N−1)² points after removing one point of each labeled pair.
    pub removal: Configuration,
    /// Center, axis points and all pair members, before removal.
    pub complete: Configuration,
}

fn ring_sets(spec: &StarSpec) -> Result<Vec<(FieldElement, HashSet<ProjPoint>)>> {
    Ok(star_rings(spec)?
        .into_iter()
        .map(|r| (r.squared_radius, r.points.into_iter().collect()))
        .collect())
}

/// Number of (ring of A, ring of B) pairs at equal radius, requiring equal point sets.
fn ring_coincidences(a: &StarSpec, b: &StarSpec) -> Result<Option<usize>> {
    let ra = ring_sets(a)?;
    let rb = ring_sets(b)?;
    let mut count = 0;
    for (r1, s1) in &ra {
        for (r2, s2) in &rb {
            if r1 == r2 {
                if s1 != s2 {
                    return Ok(None);
                }
                count += 1;
            }
        }
    }
    Ok(Some(count))
}

/// Two N-point stars (N = 12m) whose ring pairs coincide twice, plus axes.
fn collapsed_geometry(m: u32) -> Result<(Configuration, StarSpec, StarSpec)> {
    if m == 0 {
        return Err(Error::Precondition("collapsed_star needs m ≥ 1".into()));
    }
    let n = 12 * m;
    let order = 2 * n;
    let a = StarSpec::regular(n, order, int(order, 1), 0);
    check_ring_formula(&a)?;
    // ρ_N(1, 2m) = ρ_N(2, 6m−1): A's rings i=1, 2 meet B's rings j=2m, 6m−1
    // in the sin-indexed numbering (radius ∝ R / sin(iπ/N)).
    let rb = ring_ratio(n, 2 * m, 1)?.embed(order)?;
    let mut chosen = None;
    for phase in [0, 1] {
        let b = StarSpec::regular(n, order, rb.clone(), phase);
        if ring_coincidences(&a, &b)? == Some(2) {
            chosen = Some((b, phase));
            break;
        }
    }
    let (b, phase) = chosen.ok_or_else(|| {
        Error::Verification("no phase gives exactly two ring coincidences".into())
    })?;
    let ax = axes(order, n);
    let inf = ProjLine::infinity(order);
    let star: Vec<ProjLine> = a.lines().into_iter().chain(b.lines()).collect();
    let mut pts = vec![origin(order)];
    for l in &ax {
        for t in star.iter().chain(std::iter::once(&inf)) {
            pts.push(meet(l, t)?);
        }
    }
    let mut c = Configuration::dedup(order, pts)?
        .with_named_lines("axes", ax)?
        .with_named_lines("starA", a.lines())?
        .with_named_lines("starB", b.lines())?
        .with_named_lines("infinity", vec![inf])?;
    let want = 1 + (n * (n - 1)) as usize;
    ensure(c.len() == want, || format!("{} points, expected {want}", c.len()))?;
    let deg = named_line_degrees(&c);
    // Pair members sit on their axis and exactly one star line.
    let pairs: Vec<usize> = (0..c.len()).filter(|&i| deg[i] == 2).collect();
    ensure(pairs.len() == 2 * n as usize, || {
        format!("{} pair members, expected {}", pairs.len(), 2 * n)
    })?;
    c.add_label("center", vec![0])?;
    c.add_label("pair-member", pairs)?;
    c.set_meta("family", "collapsed-star");
    c.set_meta("m", m.to_string());
    c.set_meta("N", n.to_string());
    c.set_meta("phase_B", format!("{phase}*pi/{n}"));
    c.set_meta("ring_ratio", format!("rho_{n}(1,{}) = rho_{n}(2,{})", 2 * m, 6 * m - 1));
    Ok((c, a, b))
}

/// The two pair members on each axis, as (axis index, [p, q]).
pub fn collapsed_pairs(c: &Configuration) -> Vec<[usize; 2]> {
    let members = c.label("pair-member");
    let on = crate::projgeom::points_on_lines(c, c.named("axes"));
    on.iter()
        .map(|pts| {
            let v: Vec<usize> = pts.iter().copied().filter(|i| members.contains(i)).collect();
            [v[0], v[1]]
        })
        .collect()
}

/// Remove, from every pair, the member selected by `choice` (false = first).
pub fn collapsed_removal(c: &Configuration, choice: &[bool]) -> Result<Configuration> {
    let pairs = collapsed_pairs(c);
    if choice.len() != pairs.len() {
        return Err(Error::Precondition(format!(
            "{} choices for {} pairs",
            choice.len(),
            pairs.len()
        )));
    }
    let remove: Vec<usize> = pairs
        .iter()
        .zip(choice)
        .map(|(p, &second)| p[second as usize])
        .collect();
    let mut r = c.remove_points(&remove);
    r.set_meta("removed", format!("{remove:?}"));
    verify_removal(&r, c.named("axes").len())?;
    Ok(r)
}

fn verify_removal(r: &Configuration, n: usize) -> Result<()> {
    ensure(r.len() == (n - 1) * (n - 1), || {
        format!("{} points, expected {}", r.len(), (n - 1) * (n - 1))
    })?;
    let st = spanned_lines(r)?;
    check_t(&st, n - 1, 2 * n)?;
    check_t(&st, n, n + 1)?;
    check_big_t_zero(&st, n + 1)
}

fn collapsed_instances(c: &Configuration) -> Result<(BrassInstance, BrassInstance)> {
    let center = c.points()[0].clone();
    let tr: Vec<ProjLine> = ["starA", "starB", "infinity"]
        .iter()
        .flat_map(|k| c.named(k).to_vec())
        .collect();
    let mut full = brass_from(c, &center, c.named("axes"), &tr)?;
    full.set_meta("family", "collapsed-star");
    let mut reduced = full.without_parallel(full.n() - 1)?;
    reduced.set_meta(
        "open_question",
        "whether the dropped parallel can be exploited asymptotically",
    );
    Ok((full, reduced))
}

/// Brass instances only (no removal statistics); used by the witness table.
pub fn collapsed_star_instances(m: u32) -> Result<(BrassInstance, BrassInstance)> {
    let (c, _, _) = collapsed_geometry(m)?;
    collapsed_instances(&c)
}

pub fn collapsed_star(m: u32) -> Result<CollapsedStar> {
    let (c, _, _) = collapsed_geometry(m)?;
    let (full, reduced) = collapsed_instances(&c)?;
    let n = 12 * m as usize;
    for (i, &k) in full.per_line_points().iter().enumerate() {
        ensure(k == n - 1, || format!("parallel {i} carries {k} points, expected {}", n - 1))?;
    }
    let removal = collapsed_removal(&c, &vec![false; n])?;
    Ok(CollapsedStar {
        full,
        reduced,
        removal,
        complete: c,
    })
}

/// Exact number of ring coincidences between the two stars of collapsed_star(m).
pub fn collapsed_coincidences(m: u32) -> Result<usize> {
    let (_, a, b) = collapsed_geometry(m)?;
    ring_coincidences(&a, &b)?
        .ok_or_else(|| Error::Verification("equal radii with different rings".into()))
}

/// Three nested pentagrams plus the five points at infinity of their sides.
pub fn triple_pentagram() -> Result<Configuration> {
    let order = 20;
    let a = StarSpec::regular(5, order, int(order, 1), 0);
    check_ring_formula(&a)?;
    let rb = a.ring_radius(1);
    let b = [0, 1]
        .into_iter()
        .map(|ph| StarSpec::regular(5, order, rb.clone(), ph))
        .find(|b| ring_coincidences(&a, b).ok().flatten() == Some(1))
        .ok_or_else(|| Error::Verification("no phase matches the second star".into()))?;
    let phi = FieldElement::golden(order);
    // C inside B (C's vertices on B's inner ring) or C around A (C's inner ring on A's vertices).
    let candidates = [
        ("phi^-4", b.ring_radius(1)),
        ("phi^2", phi.square()),
    ];
    let mut last = None;
    for (name, rc) in candidates {
        for ph in [0, 1] {
            let c = StarSpec::regular(5, order, rc.clone(), ph);
            match triple_candidate(&a, &b, &c) {
                Ok(mut cfg) => {
                    cfg.set_meta("family", "triple-pentagram");
                    cfg.set_meta("third_star_scale", name);
                    cfg.set_meta("third_star_phase", format!("{ph}*pi/5"));
                    cfg.set_meta("second_star_scale", "phi^-2");
                    return Ok(cfg);
                }
                Err(e) => last = Some(e),
            }
        }
    }
    Err(last.expect("candidates tried"))
}

fn triple_candidate(a: &StarSpec, b: &StarSpec, c: &StarSpec) -> Result<Configuration> {
    let order = a.order;
    let inf = ProjLine::infinity(order);
    let star: Vec<ProjLine> = a.lines().into_iter().chain(b.lines()).chain(c.lines()).collect();
    let at_inf: Vec<ProjPoint> = star.iter().map(|l| meet(l, &inf)).collect::<Result<_>>()?;
    let points = union_points(&[
        vec![origin(order)],
        ring_points(a),
        ring_points(b),
        ring_points(c),
        at_inf,
    ]);
    ensure(points.len() == 26, || format!("{} points, expected 26", points.len()))?;
    let mut cfg = Configuration::new(order, points)?
        .with_named_lines("starA", a.lines())?
        .with_named_lines("starB", b.lines())?
        .with_named_lines("starC", c.lines())?
        .with_named_lines("axes", axes(order, 5))?
        .with_named_lines("infinity", vec![inf])?;
    check_named_lines(&cfg, 5)?;
    let st = spanned_lines(&cfg)?;
    ensure(st.t(5) >= 21, || format!("t_5 = {}, expected ≥ 21", st.t(5)))?;
    let deg = named_line_degrees(&cfg);
    let open: Vec<usize> = (0..cfg.len()).filter(|&i| deg[i] == 3).collect();
    ensure(open.len() == 10, || format!("{} points on three lines, expected 10", open.len()))?;
    let infinite: Vec<usize> = (0..cfg.len())
        .filter(|&i| cfg.points()[i].is_at_infinity())
        .collect();
    cfg.add_label("open-circle", open)?;
    cfg.add_label("infinite", infinite)?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagram_has_two_rings() {
        let s = StarSpec::regular(5, 20, int(20, 1), 0);
        let rings = star_rings(&s).unwrap();
        assert_eq!(rings.len(), 2);
        assert!(rings.iter().all(|r| r.points.len() == 5));
        assert!(rings[1].squared_radius.is_one());
    }

    #[test]
    fn heptagram_has_three_rings() {
        let s = StarSpec::regular(7, 28, int(28, 1), 0);
        assert_eq!(star_rings(&s).unwrap().len(), 3);
    }

    #[test]
    fn ring_ratio_preconditions() {
        assert!(ring_ratio(12, 1, 1).is_err());
        assert!(ring_ratio(12, 6, 1).is_err());
        let r = ring_ratio(12, 1, 2).unwrap();
        let (_, s2) = FieldElement::cos_sin(2, 12);
        let (_, s1) = FieldElement::cos_sin(1, 12);
        assert_eq!(&r * &s2, s1);
    }
}
