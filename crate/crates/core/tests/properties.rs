use std::f64::consts::PI;

use muarr_core::*;
use proptest::prelude::*;

fn arb_disks(max: usize) -> impl Strategy<Value = Vec<Disk>> {
    prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0, 0.1f64..2.0), 1..=max)
        .prop_map(|v| v.into_iter().map(|(x, y, r)| Disk::new(Point::new(x, y), r).unwrap()).collect())
}

fn arb_order() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.1), Just(0.25), Just(0.5), Just(MU_CRITICAL), 0.05f64..0.72]
}

fn arb_arrangement() -> impl Strategy<Value = MuArrangement> {
    (arb_order(), 2usize..=30, 3.0f64..6.0, any::<u64>()).prop_map(|(mu, n, r, seed)| {
        random_arrangement(mu, &Window::centered(r).unwrap(), n, seed).unwrap().arrangement
    })
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn union_area_ignores_order_and_rigid_motions(
        disks in arb_disks(25),
        angle in -PI..PI,
        dx in -50.0f64..50.0,
        dy in -50.0f64..50.0,
        shift in 0usize..25,
    ) {
        let base = union_area(&disks).unwrap().area;
        let mut permuted = disks.clone();
        permuted.reverse();
        permuted.rotate_left(shift % disks.len());
        prop_assert!(rel_close(union_area(&permuted).unwrap().area, base, 1e-12));
        let (s, c) = angle.sin_cos();
        let moved: Vec<Disk> = disks
            .iter()
            .map(|d| {
                let p = Point::new(c * d.center.x - s * d.center.y + dx, s * d.center.x + c * d.center.y + dy);
                Disk::new(p, d.radius).unwrap()
            })
            .collect();
        prop_assert!(rel_close(union_area(&moved).unwrap().area, base, 1e-12));
    }

    #[test]
    fn disjoint_union_area_is_the_sum(radii in prop::collection::vec(0.1f64..1.0, 1..20)) {
        let disks: Vec<Disk> = radii
            .iter()
            .enumerate()
            .map(|(k, &r)| Disk::new(Point::new(2.5 * k as f64, (k % 3) as f64), r).unwrap())
            .collect();
        let sum: f64 = disks.iter().map(Disk::area).sum();
        prop_assert!(rel_close(union_area(&disks).unwrap().area, sum, 1e-12));
    }

    #[test]
    fn gauge_norm_is_a_norm(
        half_count in 2usize..8,
        phase in 0.0f64..1.0,
        scale in 0.2f64..3.0,
        u in (-10.0f64..10.0, -10.0f64..10.0),
        v in (-10.0f64..10.0, -10.0f64..10.0),
        lambda in -5.0f64..5.0,
    ) {
        let k = SymmetricGauge::regular(half_count, scale, phase).unwrap();
        let (u, v) = (Point::new(u.0, u.1), Point::new(v.0, v.1));
        let (nu, nv) = (gauge_norm(&k, u), gauge_norm(&k, v));
        prop_assert!(gauge_norm(&k, u + v) <= nu + nv + 1e-9 * (nu + nv).max(1.0));
        prop_assert!(rel_close(gauge_norm(&k, u * lambda), lambda.abs() * nu, 1e-12));
        prop_assert!(rel_close(gauge_norm(&k, -u), nu, 1e-12));
    }

    #[test]
    fn circle_relation_is_symmetric(
        a in (-3.0f64..3.0, -3.0f64..3.0, 0.1f64..2.0),
        b in (-3.0f64..3.0, -3.0f64..3.0, 0.1f64..2.0),
    ) {
        let d1 = Disk::new(Point::new(a.0, a.1), a.2).unwrap();
        let d2 = Disk::new(Point::new(b.0, b.1), b.2).unwrap();
        let close = |p: Point, q: Point| p.distance(q) <= 1e-9;
        match (circle_relation(&d1, &d2, EPS_GEOM), circle_relation(&d2, &d1, EPS_GEOM)) {
            (CircleRelation::Digon(p, q), CircleRelation::Digon(r, s)) => {
                prop_assert!(close(p, s) && close(q, r));
                for v in [p, q] {
                    prop_assert!((v.distance(d1.center) - d1.radius).abs() <= 1e-9);
                    prop_assert!((v.distance(d2.center) - d2.radius).abs() <= 1e-9);
                }
            }
            (CircleRelation::ExternallyTangent(p), CircleRelation::ExternallyTangent(q))
            | (CircleRelation::InternallyTangent(p), CircleRelation::InternallyTangent(q)) => {
                prop_assert!(close(p, q));
            }
            (CircleRelation::Disjoint, CircleRelation::Disjoint)
            | (CircleRelation::Contained, CircleRelation::Contained) => {}
            (x, y) => prop_assert!(false, "{x:?} vs {y:?}"),
        }
    }

    #[test]
    fn validity_is_monotone_in_the_order(arr in arb_arrangement(), factor in 0.01f64..1.0) {
        prop_assert!(arr.validate().valid);
        prop_assert!(validate(arr.disks(), arr.mu() * factor).unwrap().valid);
    }

    #[test]
    fn a_member_containing_a_digon_makes_free_digons_with_its_members(arr in arb_arrangement()) {
        for d in find_digons(&arr) {
            for &k in &d.contained_in {
                for m in [d.i, d.j] {
                    let other = classify_digon(&arr, m, k);
                    prop_assert!(matches!(other, Ok(ref g) if g.free), "{d:?} in {k}: {other:?}");
                }
            }
        }
    }

    #[test]
    fn components_with_only_thick_free_digons_are_congruent(arr in arb_arrangement()) {
        let digons = find_digons(&arr);
        for comp in connected_components(&arr) {
            let all_thick = digons.iter().filter(|d| d.free && comp.contains(&d.i)).all(|d| d.thick);
            if all_thick {
                let r0 = arr.disks()[comp[0]].radius;
                for &k in &comp {
                    prop_assert!((arr.disks()[k].radius - r0).abs() <= 1e-9 * r0);
                }
            }
        }
    }

    #[test]
    fn inscribed_disks_lie_in_members_holding_exactly_one_vertex(arr in arb_arrangement(), t in 0.01f64..0.99) {
        for d in find_digons(&arr).into_iter().filter(|d| d.free) {
            let family = InscribedFamily::new(&arr, d.i, d.j, 0).unwrap();
            let b = family.point(t);
            for (k, m) in arr.disks().iter().enumerate() {
                if k == d.i || k == d.j {
                    continue;
                }
                if m.radius - b.center.distance(m.center) - b.radius >= 1e-9 {
                    let held = d.vertices.iter().filter(|&&v| m.contains_closed(v, EPS_GEOM)).count();
                    prop_assert_eq!(held, 1);
                }
            }
        }
    }

    #[test]
    fn adjacent_pairs_are_free_digons(arr in arb_arrangement()) {
        let digons = find_digons(&arr);
        for (i, j) in adjacency_pairs(&arr) {
            prop_assert!(digons.iter().any(|d| d.i == i && d.j == j && d.free));
        }
    }

    #[test]
    fn decomposition_is_additive_and_the_bound_holds(arr in arb_arrangement()) {
        let report = theorem_bound(&arr);
        let d = &report.decomposition;
        prop_assert!(rel_close(d.area_o + d.area_i + d.area_c, d.area_u, 1e-9));
        prop_assert!(d.area_c >= -1e-7 * d.area_u);
        prop_assert!(report.slack >= -1e-9 * report.total_disk_area.max(1.0), "slack {}", report.slack);
        prop_assert!(d.core_polys.iter().all(|p| p.vertices.len() <= 5));
        if report.non_thick_free_digons.is_empty() {
            prop_assert!(report.slack_within_tolerance);
        } else {
            prop_assert!(report.slack > 0.0);
        }
    }

    #[test]
    fn no_core_above_the_critical_order(mu in 0.74f64..0.99, n in 2usize..30, seed in any::<u64>()) {
        let arr = random_arrangement(mu, &Window::centered(4.0).unwrap(), n, seed).unwrap().arrangement;
        let d = decompose(&arr);
        prop_assert!(d.area_c.abs() <= 1e-7 * d.area_u, "core {}", d.area_c);
    }

    #[test]
    fn shell_ratio_is_largest_at_the_shortest_legal_distance(
        rho_i in 0.2f64..1.0,
        rho_j in 0.2f64..1.0,
        mu in 0.0f64..0.73,
        frac in 0.01f64..0.99,
    ) {
        let lo = rho_i.max(rho_j) + mu * rho_i.min(rho_j);
        let hi = rho_i + rho_j;
        let d = lo + frac * (hi - lo - 2e-9);
        let at_min = shell_triangle_check(rho_i, rho_j, mu, lo).unwrap();
        let here = shell_triangle_check(rho_i, rho_j, mu, d).unwrap();
        prop_assert!(here.lhs_over_delta <= at_min.lhs_over_delta + 1e-12);
        prop_assert!(at_min.holds && here.holds);
    }

    #[test]
    fn iterated_hex_is_valid_and_densities_are_ordered(mu in 0.05f64..0.95, tau in 0.1f64..0.5, k in 0usize..3) {
        let w = Window::centered(5.0).unwrap();
        let arr = iterate_hex(mu, tau, k, &w).unwrap();
        prop_assert!(arr.validate().valid);
        let e = density_estimate(arr.disks(), &w).unwrap();
        prop_assert!(e.delta <= e.delta_u);
    }

    #[test]
    fn certification_is_independent_of_chunking(n in 2usize..40, m in 2usize..40, rows in 1usize..50) {
        let spec = GridSpec::new(n, m).unwrap();
        let whole = certify_h_positive(&spec).unwrap();
        let parts = spec.chunks(rows).into_iter().map(|r| chunk_minimum(&spec, r).unwrap());
        let min = reduce_minima(parts).unwrap();
        prop_assert_eq!(CertificationGrid::from_minimum(&spec, min), whole);
    }
}

#[test]
fn shell_weight_is_below_core_weight_until_the_critical_order() {
    for k in 0..10_000 {
        let mu = MU_CRITICAL * k as f64 / 10_000.0;
        let c = coefficients(mu);
        assert!(c.sigma_shell < c.sigma_core, "mu {mu}");
    }
    let c = coefficients(MU_CRITICAL);
    assert!((c.sigma_shell - c.sigma_core).abs() < 1e-12);
}

#[test]
fn density_estimates_approach_the_limit_as_the_window_grows() {
    let limit = coefficients(0.3).sigma_core;
    let errors: Vec<f64> = [10.0, 20.0, 40.0]
        .iter()
        .map(|&r| {
            let w = Window::centered(r).unwrap();
            let arr = hex_arrangement(0.3, &w).unwrap();
            (density_estimate(arr.disks(), &w).unwrap().delta_u - limit).abs()
        })
        .collect();
    assert!(errors[0] > errors[1] && errors[1] > errors[2], "{errors:?}");
}

#[test]
fn iterated_density_does_not_decrease_above_the_critical_order() {
    let w = Window::centered(8.0).unwrap();
    let mut last = 0.0;
    for k in 0..3 {
        let arr = iterate_hex(0.9, 0.2, k, &w).unwrap();
        let delta = density_estimate(arr.disks(), &w).unwrap().delta;
        assert!(delta >= last);
        last = delta;
    }
}
