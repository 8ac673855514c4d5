use std::f64::consts::PI;

use nalgebra::Vector3;
use num_complex::Complex64;
use proptest::prelude::*;

use pentamod::area::elliptic_f_imag;
use pentamod::moduli::{analytic_in_moduli, m_chart_in_moduli};
use pentamod::pentagon::{anchor_pentagon, is_simple, oracle_in_moduli, Pentagon};
use pentamod::projection::{chart_transition, to_chart, ChartId, ChartPoint, ChartValue, Solid};
use pentamod::sphere::{angular_distance, arc_intersect, minor_arc, Rotation, UnitVec, ANGLE_TOL};
use pentamod::verify::near_boundary;

fn unit() -> impl Strategy<Value = UnitVec> {
    (-1.0f64..1.0, 0.0f64..2.0 * PI).prop_map(|(z, phi)| {
        let s = (1.0 - z * z).sqrt();
        UnitVec::new(s * phi.cos(), s * phi.sin(), z).unwrap()
    })
}

fn solid() -> impl Strategy<Value = Solid> {
    prop::sample::select(Solid::ALL.to_vec())
}

fn chart() -> impl Strategy<Value = ChartId> {
    prop::sample::select(ChartId::ALL.to_vec())
}

fn disk(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..radius, 0.0..2.0 * PI).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

/// Interior point of the triangle ABM.
fn omega1(solid: Solid) -> impl Strategy<Value = UnitVec> {
    (0.02f64..1.0, 0.02f64..1.0, 0.02f64..1.0).prop_map(move |(a, b, c)| {
        let g = solid.geometry();
        UnitVec::from_vector(g.a.as_vector() * a + g.b.as_vector() * b + g.m.as_vector() * c).unwrap()
    })
}

fn close(u: &UnitVec, v: &UnitVec) -> bool {
    angular_distance(u, v) < 1e-9
}

/// Points where the boundaries of `p` and `q` meet that are not a common vertex of the two edges,
/// and overlaps that are not whole shared edges.
fn stray_contacts(p: &Pentagon, q: &Pentagon) -> Vec<String> {
    let mut out = Vec::new();
    for e in p.edges() {
        for f in q.edges() {
            let hit = arc_intersect(e, f, 1e-9);
            let ends = |x: &UnitVec, arc: &pentamod::GreatArc| close(x, &arc.u()) || close(x, &arc.v());
            if hit.overlap {
                let same = (close(&e.u(), &f.u()) && close(&e.v(), &f.v()))
                    || (close(&e.u(), &f.v()) && close(&e.v(), &f.u()));
                if !same && hit.points.len() > 1 {
                    out.push(format!("partial overlap {:?}", hit.points));
                }
                continue;
            }
            for x in &hit.points {
                if !(ends(x, e) && ends(x, f)) {
                    out.push(format!("contact at {:?}", x.to_array()));
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn arc_length_is_symmetric(u in unit(), v in unit()) {
        prop_assume!((u.as_vector() + v.as_vector()).norm() > 1e-6 && angular_distance(&u, &v) > 1e-9);
        let a = minor_arc(u, v).unwrap();
        let b = minor_arc(v, u).unwrap();
        prop_assert!((a.length() - b.length()).abs() < 1e-12);
        prop_assert!(a.length() > 0.0 && a.length() < PI);
    }

    #[test]
    fn rotations_are_isometries(p in unit(), q in unit(), axis in unit(), angle in -PI..PI) {
        let r = Rotation::new(axis, angle);
        let d = angular_distance(&p, &q);
        prop_assert!((angular_distance(&r.apply(&p), &r.apply(&q)) - d).abs() < 1e-11);
        prop_assert!((angular_distance(&r.apply(&p), &axis) - angular_distance(&p, &axis)).abs() < 1e-11);
    }

    #[test]
    fn arc_intersection_is_symmetric(a in unit(), b in unit(), c in unit(), d in unit()) {
        let (Ok(s), Ok(t)) = (minor_arc(a, b), minor_arc(c, d)) else { return Ok(()) };
        let st = arc_intersect(&s, &t, ANGLE_TOL);
        let ts = arc_intersect(&t, &s, ANGLE_TOL);
        prop_assert_eq!(st.overlap, ts.overlap);
        prop_assert_eq!(st.points.len(), ts.points.len());
        for p in &st.points {
            prop_assert!(ts.points.iter().any(|q| angular_distance(p, q) < 1e-10));
        }
    }

    #[test]
    fn chart_round_trip(solid in solid(), chart in chart(), z in disk(10.0)) {
        let p = ChartPoint::new(z, chart, solid).to_sphere();
        let back = to_chart(&p, chart, solid).unwrap();
        prop_assert!((back.z - z).norm() < 1e-11 * (1.0 + z.norm_sqr()));
    }

    #[test]
    fn half_angle_is_chart_modulus(solid in solid(), chart in chart(), p in unit()) {
        let origin = solid.geometry().origin(chart);
        prop_assume!(angular_distance(&origin, &p) < PI - 1e-3);
        let z = to_chart(&p, chart, solid).unwrap().z;
        prop_assert!(((0.5 * angular_distance(&origin, &p)).tan() - z.norm()).abs() < 1e-11 * (1.0 + z.norm_sqr()));
    }

    #[test]
    fn mobius_matches_frame_change(solid in solid(), from in chart(), to in chart(), z in disk(3.0)) {
        let p = ChartPoint::new(z, from, solid).to_sphere();
        let Ok(direct) = to_chart(&p, to, solid) else { return Ok(()) };
        prop_assume!(direct.z.norm() < 1e3);
        match chart_transition(solid, from, to).apply(z) {
            ChartValue::Finite(w) => prop_assert!((w - direct.z).norm() < 1e-10 * (1.0 + direct.z.norm_sqr())),
            ChartValue::Infinity => prop_assert!(false, "finite point sent to infinity"),
        }
    }

    #[test]
    fn construction_edge_lengths(solid in solid(), v in unit()) {
        let Ok(p) = anchor_pentagon(solid, v) else { return Ok(()) };
        use pentamod::pentagon::Edge;
        let l = |e| p.edge(e).length();
        prop_assert!((l(Edge::A1) - l(Edge::A2)).abs() < 1e-11);
        prop_assert!((l(Edge::B1) - l(Edge::B2)).abs() < 1e-11);
    }

    #[test]
    fn tetrahedral_mirror_symmetry(v in unit()) {
        let s = Solid::Tetrahedron;
        let mirror = UnitVec::new(v.xi2(), v.xi1(), v.xi3()).unwrap();
        prop_assume!(!near_boundary(s, &v, 1e-6) && !near_boundary(s, &mirror, 1e-6));
        prop_assert_eq!(oracle_in_moduli(s, &v), oracle_in_moduli(s, &mirror));
    }

    #[test]
    fn membership_routes_agree(solid in solid(), v in unit()) {
        prop_assume!(!near_boundary(solid, &v, 1e-6));
        let oracle = oracle_in_moduli(solid, &v);
        prop_assert_eq!(analytic_in_moduli(solid, &v), oracle);
        prop_assert_eq!(m_chart_in_moduli(solid, &v), oracle);
    }

    #[test]
    fn elliptic_integral_is_monotone(t in 0.0f64..1.5, dt in 1e-3f64..0.5, lambda in 0.05f64..5.0, dl in 1e-3f64..2.0) {
        let f = elliptic_f_imag(t, lambda);
        prop_assert!(elliptic_f_imag(t + dt, lambda) > f);
        prop_assert!(elliptic_f_imag(t, lambda + dl) >= f);
        prop_assert!(f <= t + 1e-15);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn three_pentagons_tile_the_face((solid, v) in solid().prop_flat_map(|s| (Just(s), omega1(s)))) {
        let p = anchor_pentagon(solid, v).unwrap();
        prop_assert!(is_simple(&p, ANGLE_TOL).simple);
        let frame = solid.geometry().frame(ChartId::A);
        let tiles = [p.clone(), p.rotated(&frame.turn(2.0 * PI / 3.0)), p.rotated(&frame.turn(-2.0 * PI / 3.0))];
        for i in 0..3 {
            for j in i + 1..3 {
                let stray = stray_contacts(&tiles[i], &tiles[j]);
                prop_assert!(stray.is_empty(), "tiles {} and {}: {:?}", i, j, stray);
            }
        }
        // Each tile shares its edge through A with each neighbour.
        let a2 = tiles[0].edges()[1];
        let next_a1 = tiles[2].edges()[0];
        prop_assert!(close(&a2.u(), &next_a1.v()) && close(&a2.v(), &next_a1.u()));
    }
}

#[test]
fn mirror_swaps_a_and_b_for_the_tetrahedron() {
    let g = Solid::Tetrahedron.geometry();
    let mirror = |p: &UnitVec| UnitVec::from_vector(Vector3::new(p.xi2(), p.xi1(), p.xi3())).unwrap();
    assert!(close(&mirror(&g.a), &g.b));
    assert!(close(&mirror(&g.m), &g.m));
}
