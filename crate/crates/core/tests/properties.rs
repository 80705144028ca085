mod support;

use std::collections::HashSet;

use num_rational::BigRational;
use orchard::constructions::{
    collapsed_coincidences, collapsed_star, double_star, rotation, triple_pentagram,
};
use orchard::exactfield::{approx_f64, euler_phi, sign_of, FieldElement, Sign};
use orchard::projgeom::{
    apply_map, join, meet, spanned_lines, Configuration, ProjLine, ProjMap, ProjPoint,
};
use proptest::prelude::*;
use support::naive_profile;

const ORDERS: [u32; 11] = [1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24];

fn element(order: u32) -> impl Strategy<Value = FieldElement> {
    let d = euler_phi(order) as usize;
    prop::collection::vec((-9i64..=9, 1i64..=4), d).prop_map(move |cs| {
        let coeffs: Vec<BigRational> = cs
            .into_iter()
            .map(|(p, q)| BigRational::new(p.into(), q.into()))
            .collect();
        FieldElement::from_coeffs(order, &coeffs)
    })
}

fn order_and(n: usize) -> impl Strategy<Value = (u32, Vec<FieldElement>)> {
    prop::sample::select(ORDERS.to_vec())
        .prop_flat_map(move |m| (Just(m), prop::collection::vec(element(m), n)))
}

fn coprime(a: i64, m: u32) -> bool {
    num_integer::gcd(a.rem_euclid(m as i64), m as i64) == 1
}

/// Real part of the element under ζ ↦ e^{2πi/m}, summed in floating point.
fn float_value(a: &FieldElement) -> f64 {
    let m = a.order() as f64;
    a.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let c: f64 = num_traits::ToPrimitive::to_f64(c).unwrap();
            c * (2.0 * std::f64::consts::PI * k as f64 / m).cos()
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((m, v) in order_and(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(&(a + b) + c, a + &(b + c));
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
        prop_assert_eq!(a + &FieldElement::zero(m), a.clone());
        if !a.is_zero() {
            prop_assert!((a * &a.inv().unwrap()).is_one());
        } else {
            prop_assert!(a.inv().is_err());
        }
    }

    #[test]
    fn embedding_is_a_ring_map((m, v) in order_and(2), k in 1u32..=3) {
        let m2 = m * k * 2;
        let (a, b) = (&v[0], &v[1]);
        let e = |x: &FieldElement| x.embed(m2).unwrap();
        prop_assert_eq!(e(&(a + b)), &e(a) + &e(b));
        prop_assert_eq!(e(&(a * b)), &e(a) * &e(b));
    }

    #[test]
    fn conjugations_compose((m, v) in order_and(2), k1 in -30i64..30, k2 in -30i64..30) {
        prop_assume!(coprime(k1, m) && coprime(k2, m));
        let (a, b) = (&v[0], &v[1]);
        let twice = a.conjugate(k1).unwrap().conjugate(k2).unwrap();
        prop_assert_eq!(twice, a.conjugate(k1 * k2).unwrap());
        prop_assert_eq!((a * b).conjugate(k1).unwrap(), &a.conjugate(k1).unwrap() * &b.conjugate(k1).unwrap());
    }

    #[test]
    fn pythagoras(p in -100i64..100, q in 1u32..=48) {
        let (c, s) = FieldElement::cos_sin(p, q);
        prop_assert!((&c.square() + &s.square()).is_one());
        prop_assert!(c.is_real() && s.is_real());
        let angle = p as f64 * std::f64::consts::PI / q as f64;
        prop_assert!((approx_f64(&c).unwrap() - angle.cos()).abs() < 1e-9);
    }

    #[test]
    fn sign_agrees_with_floats((_, v) in order_and(1)) {
        let a = &v[0] + &v[0].complex_conjugate();
        let f = float_value(&a);
        let s = sign_of(&a).unwrap().sign;
        if f > 1e-6 {
            prop_assert_eq!(s, Sign::Positive);
        } else if f < -1e-6 {
            prop_assert_eq!(s, Sign::Negative);
        }
        prop_assert_eq!(s == Sign::Zero, a.is_zero());
    }
}

fn small_config() -> impl Strategy<Value = Configuration> {
    // small grid coordinates force many collinear triples
    let point = prop_oneof![
        8 => (-3i64..=3, -3i64..=3).prop_map(|(x, y)| [x, y, 1]),
        1 => (-2i64..=2, -2i64..=2).prop_filter("nonzero", |v| *v != (0, 0)).prop_map(|(x, y)| [x, y, 0]),
    ];
    prop::collection::vec(point, 2..22).prop_filter_map("need two distinct points", |vs| {
        let pts: Vec<ProjPoint> = vs.into_iter().map(|v| ProjPoint::from_integers(1, v).unwrap()).collect();
        let c = Configuration::dedup(1, pts).ok()?;
        (c.len() >= 2).then_some(c)
    })
}

fn int_map() -> impl Strategy<Value = ProjMap> {
    prop::array::uniform9(-3i64..=3).prop_filter_map("singular", |e| {
        let f = |i: usize| FieldElement::from_integer(1, e[i]);
        ProjMap::new([[f(0), f(1), f(2)], [f(3), f(4), f(5)], [f(6), f(7), f(8)]]).ok()
    })
}

fn choose2(k: usize) -> usize {
    k * (k.saturating_sub(1)) / 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pair_counting_identity(c in small_config()) {
        let st = spanned_lines(&c).unwrap();
        let pairs: usize = st.t.iter().map(|(&k, &v)| v * choose2(k)).sum();
        prop_assert_eq!(pairs, choose2(c.len()));
        prop_assert_eq!(&st.t, &naive_profile(&c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn projective_invariance(c in small_config(), m in int_map()) {
        let image = apply_map(&c, &m).unwrap();
        prop_assert_eq!(spanned_lines(&image).unwrap().t, spanned_lines(&c).unwrap().t);
    }

    #[test]
    fn canonical_form_is_idempotent(v in prop::array::uniform3(-20i64..20), s in 1i64..7, neg in any::<bool>()) {
        prop_assume!(v != [0, 0, 0]);
        let p = ProjPoint::from_integers(1, v).unwrap();
        prop_assert_eq!(ProjPoint::from_triple(p.coords().clone()).unwrap(), p.clone());
        let k = if neg { -s } else { s };
        let scaled = ProjPoint::from_integers(1, v.map(|x| x * k)).unwrap();
        prop_assert_eq!(&scaled, &p);
        // equality agrees with a vanishing cross product
        let w = ProjPoint::from_integers(1, [v[0] + 1, v[1], v[2]]);
        if let Ok(w) = w {
            let u = [v[0] + 1, v[1], v[2]];
            let proportional =
                v[1] * u[2] == v[2] * u[1] && v[2] * u[0] == v[0] * u[2] && v[0] * u[1] == v[1] * u[0];
            prop_assert_eq!(w == p, proportional);
        }
    }

    #[test]
    fn join_meet_duality(a in prop::array::uniform3(-9i64..9), b in prop::array::uniform3(-9i64..9), c in prop::array::uniform3(-9i64..9)) {
        let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
        prop_assume!(det != 0);
        let p = |v| ProjPoint::from_integers(1, v).unwrap();
        let (pa, pb, pc) = (p(a), p(b), p(c));
        let l1 = join(&pa, &pb).unwrap();
        let l2 = join(&pa, &pc).unwrap();
        prop_assert!(l1.contains(&pa) && l1.contains(&pb) && !l1.contains(&pc));
        prop_assert_eq!(meet(&l1, &l2).unwrap(), pa);
        let as_line = |v| ProjLine::from_integers(1, v).unwrap();
        let m = meet(&as_line(a), &as_line(b)).unwrap();
        let joined = join(&p(a), &p(b)).unwrap();
        prop_assert_eq!(joined.coords(), m.coords());
    }
}

/// Reflection in a line through the origin with coefficients (a, b, 0).
fn reflection_in(l: &ProjLine) -> ProjMap {
    let [a, b, _] = l.coords().clone();
    let z = FieldElement::zero(a.order());
    let (a2, b2) = (a.square(), b.square());
    let ab2 = (&a * &b).scale(&BigRational::from_integer((-2).into()));
    ProjMap::new([
        [&b2 - &a2, ab2.clone(), z.clone()],
        [ab2, &a2 - &b2, z.clone()],
        [z.clone(), z, &a2 + &b2],
    ])
    .unwrap()
}

fn permutes(c: &Configuration, m: &ProjMap) -> bool {
    let set: HashSet<&ProjPoint> = c.points().iter().collect();
    c.points().iter().all(|p| set.contains(&m.apply_point(p)))
}

fn check_dihedral(c: &Configuration, big_n: u32) {
    assert!(permutes(c, &rotation(c.order(), 2, big_n)), "{:?}", c.meta());
    let axes = c.named("axes");
    assert!(!axes.is_empty());
    for l in axes {
        assert!(permutes(c, &reflection_in(l)), "axis {l:?}");
    }
}

#[test]
fn dihedral_symmetry_closure() {
    for n in [4u32, 6, 8] {
        check_dihedral(&double_star(n).unwrap(), n + 1);
    }
    check_dihedral(&triple_pentagram().unwrap(), 5);
    check_dihedral(&collapsed_star(1).unwrap().complete, 12);
}

#[test]
fn double_star_named_lines_are_the_rich_lines() {
    for n in [4u32, 6] {
        let c = double_star(n).unwrap();
        let rich: HashSet<ProjLine> = spanned_lines(&c)
            .unwrap()
            .lines_with_at_least(n as usize)
            .into_iter()
            .map(|(l, _)| l)
            .collect();
        let named: HashSet<ProjLine> = c.all_named_lines().into_iter().collect();
        assert_eq!(rich, named);
        assert_eq!(named.len(), 3 * n as usize + 3);
    }
}

#[test]
fn collapsed_star_has_exactly_two_coincidences() {
    for m in [1u32, 2] {
        assert_eq!(collapsed_coincidences(m).unwrap(), 2);
    }
}
