//! Acceptance criteria 1–15, one verdict line each.
//!
//! Run with `cargo test -p orchard-suite --test acceptance`; add
//! `-- --include-ignored` for the Figure 5 search.

#[path = "../../core/tests/support/mod.rs"]
mod support;

use std::collections::{BTreeMap, HashSet};

use orchard::bounds::{baseline_n_plus_4, m_of_n, table1, verify_brass, witness};
use orchard::constructions::*;
use orchard::exactfield::{euler_phi, FieldElement};
use orchard::polytopal::{self, finite_plane, Ideal};
use orchard::projgeom::{
    apply_map, points_on_lines, spanned_lines, Configuration, IncidenceStats, ProjLine, ProjMap,
    ProjPoint,
};
use orchard_suite::{ensure, verdict, Check};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn stats(c: &Configuration) -> Result<IncidenceStats, String> {
    spanned_lines(c).map_err(|e| e.to_string())
}

fn expect_t(st: &IncidenceStats, k: usize, want: usize, what: &str) -> Result<(), String> {
    ensure(st.t(k) == want, || format!("{what}: t_{k} = {}, expected {want}", st.t(k)))
}

fn expect_big_t_zero(st: &IncidenceStats, k: usize, what: &str) -> Result<(), String> {
    ensure(st.big_t(k) == 0, || format!("{what}: T_{k} = {}", st.big_t(k)))
}

fn e<T, E: ToString>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

#[test]
fn criterion_01_square_grid() {
    let run = || -> Check {
        for n in 2..=8u32 {
            let st = stats(&e(square_grid(n))?)?;
            let n = n as usize;
            expect_t(&st, n, 2 * n + 2, &format!("grid {n}"))?;
        }
        Ok("t_n = 2n+2 for n = 2..8".into())
    };
    verdict("1", "square_grid", run());
}

#[test]
fn criterion_02_nine_tree() {
    let run = || -> Check {
        let st = stats(&e(nine_tree())?)?;
        expect_t(&st, 3, 10, "nine_tree")?;
        expect_big_t_zero(&st, 4, "nine_tree")?;
        Ok("t_3 = 10, T_4 = 0".into())
    };
    verdict("2", "nine_tree", run());
}

#[test]
fn criterion_03_dudeney21() {
    let run = || -> Check {
        let c = e(dudeney21())?;
        ensure(c.len() == 21, || format!("{} points", c.len()))?;
        let st = stats(&c)?;
        expect_t(&st, 5, 12, "dudeney21")?;
        let l = e(ProjLine::from_integers(1, [1, 1, -4]))?;
        let on = points_on_lines(&c, &[l])[0].len();
        ensure(on == 5, || format!("x+y=4 carries {on} points"))?;
        Ok("21 points, t_5 = 12, x+y=4 has 5 points".into())
    };
    verdict("3", "dudeney21", run());
}

#[test]
fn criterion_04_double_star() {
    let run = || -> Check {
        for n in [4u32, 6, 8, 10] {
            let c = e(double_star(n))?;
            let n = n as usize;
            ensure(c.len() == n * n, || format!("n = {n}: {} points", c.len()))?;
            let st = stats(&c)?;
            expect_t(&st, n, 3 * n + 3, &format!("n = {n}"))?;
            expect_big_t_zero(&st, n + 1, &format!("n = {n}"))?;
        }
        Ok("n² points, t_n = 3n+3, T_(n+1) = 0 for n = 4, 6, 8, 10".into())
    };
    verdict("4", "double_star", run());
}

#[test]
fn criterion_05_double_star_profile() {
    let run = || -> Check {
        let c = e(double_star(4))?;
        let st = stats(&c)?;
        let mut per_point = vec![0usize; c.len()];
        for l in st.spanned.iter().filter(|l| l.points.len() == 4) {
            for &p in &l.points {
                per_point[p] += 1;
            }
        }
        let mut hist = BTreeMap::new();
        for k in per_point {
            *hist.entry(k).or_insert(0usize) += 1;
        }
        let want = BTreeMap::from([(3, 10), (5, 6)]);
        ensure(hist == want, || format!("points by line count {hist:?}"))?;
        Ok("6 points on 5 lines, 10 points on 3 lines".into())
    };
    verdict("5", "double_star(4) incidence profile", run());
}

#[test]
fn criterion_06_pencil_odd() {
    let run = || -> Check {
        for n in [3u32, 5, 7, 9] {
            let (b, c) = e(pencil_odd(n))?;
            let nn = n as usize;
            ensure(b.m() == 2 * nn + 1, || format!("N = {n}: M = {}", b.m()))?;
            ensure(b.per_line_points().iter().all(|&k| k == nn), || {
                format!("N = {n}: counts {:?}", b.per_line_points())
            })?;
            ensure(c.len() == nn * nn, || format!("N = {n}: {} points", c.len()))?;
            let st = stats(&c)?;
            expect_t(&st, nn, 3 * nn + 1, &format!("N = {n}"))?;
            expect_big_t_zero(&st, nn + 1, &format!("N = {n}"))?;
        }
        Ok("M = 2N+1, counts N, t_N = 3N+1, T_(N+1) = 0 for N = 3, 5, 7, 9".into())
    };
    verdict("6", "pencil_odd", run());
}

#[test]
fn criterion_07_pencil_even() {
    let run = || -> Check {
        for n in [6u32, 8, 10] {
            let b = e(pencil_even(n))?;
            let (ok, counts) = verify_brass(&b);
            ensure(b.m() == 2 * n as usize, || format!("N = {n}: M = {}", b.m()))?;
            ensure(ok, || format!("N = {n}: counts {counts:?}"))?;
        }
        Ok("M = 2N, verify_brass true for N = 6, 8, 10".into())
    };
    verdict("7", "pencil_even", run());
}

fn collapsed_contract(m: u32, rng: &mut ChaCha8Rng) -> Result<(), String> {
    let n = 12 * m as usize;
    let cs = e(collapsed_star(m))?;
    let (full, reduced) = (&cs.full, &cs.reduced);
    ensure((full.n(), full.m()) == (n, 2 * n + 1), || {
        format!("instance (a) has N = {}, M = {}", full.n(), full.m())
    })?;
    ensure(full.per_line_points().iter().all(|&k| k == n - 1), || {
        format!("instance (a) counts {:?}", full.per_line_points())
    })?;
    ensure((reduced.n(), reduced.m()) == (n - 1, 2 * n + 1), || {
        format!("instance (b) has N = {}, M = {}", reduced.n(), reduced.m())
    })?;
    ensure(verify_brass(reduced).0, || "instance (b) fails verify_brass".into())?;
    let mut removals = vec![cs.removal.clone()];
    for _ in 0..3 {
        let choice: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
        removals.push(e(collapsed_removal(&cs.complete, &choice))?);
    }
    for r in &removals {
        ensure(r.len() == (n - 1) * (n - 1), || format!("removal has {} points", r.len()))?;
        let st = stats(r)?;
        expect_t(&st, n - 1, 2 * n, "removal")?;
        expect_t(&st, n, n + 1, "removal")?;
        ensure(st.big_t(n - 1) == 3 * n + 1, || format!("T_{} = {}", n - 1, st.big_t(n - 1)))?;
    }
    Ok(())
}

#[test]
fn criterion_08_collapsed_star() {
    let run = || -> Check {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        collapsed_contract(1, &mut rng)?;
        collapsed_contract(2, &mut rng)?;
        Ok("m = 1: (12,25), (11,25), 121 points with t_11 = 24, t_12 = 13; m = 2 likewise".into())
    };
    verdict("8", "collapsed_star", run());
}

#[test]
fn criterion_09_triple_pentagram() {
    let run = || -> Check {
        let c = e(triple_pentagram())?;
        ensure(c.len() == 26, || format!("{} points", c.len()))?;
        let inf = c.points().iter().filter(|p| p.is_at_infinity()).count();
        ensure(inf == 5, || format!("{inf} points at infinity"))?;
        let named = c.all_named_lines();
        let on = points_on_lines(&c, &named);
        ensure(named.len() == 21 && on.iter().all(|l| l.len() == 5), || {
            format!("named line sizes {:?}", on.iter().map(Vec::len).collect::<Vec<_>>())
        })?;
        let open = c.label("open-circle");
        ensure(open.len() == 10, || format!("{} open circles", open.len()))?;
        for &i in open {
            let st = stats(&c.remove_points(&[i]))?;
            expect_t(&st, 5, 18, &format!("without point {i}"))?;
        }
        Ok("26 points (5 at infinity), 21 lines of 5, each open-circle removal leaves t_5 = 18".into())
    };
    verdict("9", "triple_pentagram", run());
}

#[test]
fn criterion_10_baseline() {
    let run = || -> Check {
        for n in [3u32, 5, 10] {
            let b = e(baseline_n_plus_4(n))?;
            let mut want = vec![n as usize; n as usize - 1];
            want.push(3);
            ensure(b.m() == n as usize + 4, || format!("N = {n}: M = {}", b.m()))?;
            let got = verify_brass(&b);
            ensure(got == (true, want.clone()), || format!("N = {n}: {got:?}, expected {want:?}"))?;
        }
        Ok("M = N+4, counts {N,...,N,3} for N = 3, 5, 10".into())
    };
    verdict("10", "baseline_n_plus_4", run());
}

const TABLE: [&str; 26] = [
    "1.489", "1.386", "1.391", "1.333", "1.340", "1.301", "1.342", "1.295", "1.284", "1.262",
    "1.268", "1.250", "1.254", "1.239", "1.244", "1.231", "1.235", "1.224", "1.241", "1.224",
    "1.221", "1.212", "1.215", "1.208", "1.210", "1.203",
];

#[test]
fn criterion_11_table() {
    let run = || -> Check {
        let rows = e(table1(5, 30))?;
        ensure(rows.len() == 26, || format!("{} rows", rows.len()))?;
        for (row, want) in rows.iter().zip(TABLE) {
            ensure(row.tau == want, || format!("N = {}: {} vs {want}", row.n, row.tau))?;
        }
        Ok("26 values match".into())
    };
    verdict("11", "Table 1", run());
}

#[test]
fn criterion_12_witness() {
    let run = || -> Check {
        for n in 5..=30u32 {
            let b = e(witness(n))?;
            let m = e(m_of_n(n))? as usize;
            ensure(verify_brass(&b).0, || format!("N = {n} fails verify_brass"))?;
            ensure(b.n() == n as usize && b.m() == m, || {
                format!("N = {n}: instance has N = {}, M = {}, expected M = {m}", b.n(), b.m())
            })?;
            ensure(m > n as usize + 4, || format!("N = {n}: M = {m} ≤ N+4"))?;
        }
        Ok("verify_brass true with M = M(N) > N+4 for N = 5..30".into())
    };
    verdict("12", "witness", run());
}

#[test]
fn criterion_13_polytopal() {
    let run = || -> Check {
        let ico = polytopal::icosahedral();
        for i in ["P6", "P10", "P15"] {
            for j in ["L6", "L10", "L15"] {
                let k = e(ico.incidences(&[i], &[j]))?;
                let want = if i == "P15" || j == "L15" { 30 } else { 0 };
                ensure(k == want, || format!("{i}/{j}: {k} incidences"))?;
            }
        }
        let view = e(ico.incidences(&["P6", "P10"], &["L15"]))?;
        ensure(view == 60, || format!("P6 ∪ P10 on L15: {view}"))?;
        let sub21 = e(ico.incidences(&["P6", "P15"], &["L6", "L15"]))?;
        ensure(sub21 == 90, || format!("21/21: {sub21}"))?;
        let all = ["P6", "P10", "P15"];
        let sub31 = e(ico.incidences(&all, &all))?;
        ensure(sub31 == 150, || format!("31/31: {sub31}"))?;
        let oct = polytopal::octahedral();
        let names = ["vertex", "face", "edge"];
        let o = e(oct.incidences(&names, &names))?;
        ensure(o == 48, || format!("octahedral: {o}"))?;
        for (q, want) in [(3u8, 52usize), (4, 105), (5, 186)] {
            let p = e(finite_plane(q))?;
            ensure(p.incidences == want, || format!("PG(2,{q}): {}", p.incidences))?;
        }
        let (_, r3) = e(polytopal::reduce_octahedral_mod3())?;
        ensure(r3.points_injective && r3.onto_plane, || "mod 3 is not a bijection".into())?;
        let faces: HashSet<(String, String)> =
            (0..4).map(|k| (format!("face[{k}]"), format!("face*[{k}]"))).collect();
        let new: HashSet<(String, String)> = r3.new_incidences.iter().cloned().collect();
        ensure(new == faces, || format!("mod 3 new incidences {:?}", r3.new_incidences))?;
        let (_, r5) = e(polytopal::reduce_icosahedral(Ideal::Sqrt5))?;
        ensure(r5.exact_incidences == 150 && r5.onto_plane && r5.plane_incidences == 186, || {
            format!("mod √5: {} of {}", r5.exact_incidences, r5.plane_incidences)
        })?;
        Ok("30/0 pattern, 60, 90, 150, 48, 52/105/186, mod 3 adds the 4 face incidences, mod √5 shows 150 of 186".into())
    };
    verdict("13", "polytopal suite", run());
}

/// The 21/21 subconfiguration against PG(2,4): bijective, with the 15
/// missing incidences between each P15 point and its dual line.
#[test]
fn criterion_13_icosahedral_mod_two() {
    let run = || -> Check {
        let (_, r) = e(polytopal::reduce_icosahedral(Ideal::Two))?;
        ensure(r.points_injective && r.lines_injective && r.onto_plane, || {
            format!(
                "not a bijection onto PG(2,4): {} distinct point images and {} line images of 21",
                r.distinct_point_images, r.distinct_line_images
            )
        })?;
        let want: HashSet<(String, String)> =
            (0..15).map(|k| (format!("P15[{k}]"), format!("L15[{k}]"))).collect();
        let new: HashSet<(String, String)> = r.new_incidences.iter().cloned().collect();
        ensure(new == want, || format!("{} new incidences", new.len()))?;
        Ok("bijective, 90 + 15 = 105".into())
    };
    verdict("13b", "icosahedral reduction mod 2", run());
}

fn random_config(rng: &mut ChaCha8Rng) -> Configuration {
    loop {
        let n = rng.gen_range(2..22);
        let pts: Vec<ProjPoint> = (0..n)
            .map(|_| {
                let v = if rng.gen_ratio(1, 9) {
                    let (x, y) = loop {
                        let xy = (rng.gen_range(-2..=2), rng.gen_range(-2..=2));
                        if xy != (0, 0) {
                            break xy;
                        }
                    };
                    [x, y, 0]
                } else {
                    [rng.gen_range(-3..=3), rng.gen_range(-3..=3), 1]
                };
                ProjPoint::from_integers(1, v).unwrap()
            })
            .collect();
        let c = Configuration::dedup(1, pts).unwrap();
        if c.len() >= 2 {
            return c;
        }
    }
}

fn random_map(rng: &mut ChaCha8Rng) -> ProjMap {
    loop {
        let f = |rng: &mut ChaCha8Rng| FieldElement::from_integer(1, rng.gen_range(-3..=3));
        let rows = [0; 3].map(|_| [f(rng), f(rng), f(rng)]);
        if let Ok(m) = ProjMap::new(rows) {
            return m;
        }
    }
}

fn reflection_in(l: &ProjLine) -> ProjMap {
    let [a, b, _] = l.coords().clone();
    let z = FieldElement::zero(a.order());
    let ab = &a * &b;
    let m2ab = -(&ab + &ab);
    let (a2, b2) = (a.square(), b.square());
    ProjMap::new([
        [&b2 - &a2, m2ab.clone(), z.clone()],
        [m2ab, &a2 - &b2, z.clone()],
        [z.clone(), z, &a2 + &b2],
    ])
    .unwrap()
}

fn permutes(c: &Configuration, m: &ProjMap) -> bool {
    let set: HashSet<&ProjPoint> = c.points().iter().collect();
    c.points().iter().all(|p| set.contains(&m.apply_point(p)))
}

#[test]
fn criterion_14_properties() {
    let run = || -> Check {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for i in 0..200 {
            let c = random_config(&mut rng);
            let st = stats(&c)?;
            let pairs: usize = st.t.iter().map(|(&k, &v)| v * k * (k - 1) / 2).sum();
            let n = c.len();
            ensure(pairs == n * (n - 1) / 2, || format!("config {i}: pair identity fails"))?;
            ensure(st.t == support::naive_profile(&c), || format!("config {i}: brute force disagrees"))?;
        }
        for i in 0..100 {
            let c = random_config(&mut rng);
            let m = random_map(&mut rng);
            let image = e(apply_map(&c, &m))?;
            ensure(stats(&image)?.t == stats(&c)?.t, || format!("map {i} changes t_k"))?;
        }
        let orders = [1u32, 3, 4, 5, 7, 8, 12, 15, 20];
        for _ in 0..50 {
            let m = orders[rng.gen_range(0..orders.len())];
            let mut el = || {
                let d = euler_phi(m) as usize;
                let cs: Vec<_> = (0..d)
                    .map(|_| orchard::Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()))
                    .collect();
                FieldElement::from_coeffs(m, &cs)
            };
            let (a, b, c) = (el(), el(), el());
            ensure(&(&a * &b) * &c == &a * &(&b * &c), || "associativity".into())?;
            ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || "distributivity".into())?;
            if !a.is_zero() {
                ensure((&a * &e(a.inv())?).is_one(), || "inverse".into())?;
            }
        }
        for q in 1..=48u32 {
            for p in 0..2 * q as i64 {
                let (c, s) = FieldElement::cos_sin(p, q);
                ensure((&c.square() + &s.square()).is_one(), || format!("cos²+sin² at {p}π/{q}"))?;
            }
        }
        let symmetric = [
            (e(double_star(4))?, 5u32),
            (e(double_star(6))?, 7),
            (e(triple_pentagram())?, 5),
            (e(collapsed_star(1))?.complete, 12),
        ];
        for (c, n) in &symmetric {
            ensure(permutes(c, &rotation(c.order(), 2, *n)), || format!("{:?}: rotation", c.meta()))?;
            for l in c.named("axes") {
                ensure(permutes(c, &reflection_in(l)), || format!("{:?}: reflection", c.meta()))?;
            }
        }
        let k = e(collapsed_coincidences(1))?;
        ensure(k == 2, || format!("{k} ring coincidences"))?;
        Ok("pair identity ×200, invariance ×100, field axioms, cos²+sin² for q ≤ 48, dihedral closure, exactly 2 coincidences".into())
    };
    verdict("14", "property suites", run());
}

#[test]
#[ignore = "bounded search, run with --include-ignored"]
fn criterion_15_figure5_search() {
    let run = || -> Check {
        let r = e(reconstruct_figure5())?;
        let c = &r.config;
        let st = stats(c)?;
        ensure(c.len() == 25, || format!("{} points", c.len()))?;
        expect_t(&st, 5, 18, "figure 5")?;
        expect_big_t_zero(&st, 6, "figure 5")?;
        let sides = points_on_lines(c, c.named("sides"));
        ensure(sides.iter().all(|s| s.len() == 5), || "a side does not carry 5 points".into())?;
        ensure(st.t == support::naive_profile(c), || "brute force disagrees".into())?;
        Ok(format!(
            "25 points, t_5 = 18, T_6 = 0 ({} candidates, {} orbit unions)",
            r.candidates, r.orbit_sets_tried
        ))
    };
    verdict("15", "figure5-search", run());
}
