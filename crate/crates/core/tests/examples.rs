use std::f64::consts::PI;

use muarr_core::*;

fn disk(x: f64, y: f64, r: f64) -> Disk {
    Disk::new(Point::new(x, y), r).unwrap()
}

fn hex_patch(mu: f64) -> MuArrangement {
    hex_arrangement(mu, &Window::centered(1.0).unwrap()).unwrap()
}

/// Smallest t with t·v on the polygon boundary, by intersecting the ray with every edge.
fn ray_gauge(vertices: &[Point], v: Point) -> f64 {
    let mut best = f64::INFINITY;
    for k in 0..vertices.len() {
        let (a, b) = (vertices[k], vertices[(k + 1) % vertices.len()]);
        let e = b - a;
        let den = v.cross(e);
        if den.abs() < 1e-15 {
            continue;
        }
        // s·v = a + u·e
        let s = a.cross(e) / den;
        let u = a.cross(v) / den;
        if s > 0.0 && (-1e-12..=1.0 + 1e-12).contains(&u) {
            best = best.min(1.0 / s);
        }
    }
    best
}

#[test]
fn hexagon_gauge_matches_ray_intersection() {
    let k = SymmetricGauge::regular(3, 1.0, 0.0).unwrap();
    let oracle = ray_gauge(k.vertices(), Point::new(0.0, 1.0));
    assert!((oracle - 2.0 / 3f64.sqrt()).abs() < 1e-12);
    assert!((gauge_norm(&k, Point::new(0.0, 1.0)) - oracle).abs() < 1e-12);
    for a in 0..32 {
        let v = Point::polar(a as f64 * 0.2) * 1.7;
        assert!((gauge_norm(&k, v) - ray_gauge(k.vertices(), v)).abs() < 1e-12);
    }
    assert_eq!(gauge_norm(&SymmetricGauge::square(1.0), Point::new(3.0, 1.0)), 3.0);
}

#[test]
fn shell_weight_at_one_fifth() {
    // 30-digit evaluation: 1.93186503750335881755940096442
    assert!((coefficients(0.2).sigma_shell - 1.931_865_037_503_36).abs() < 1e-12);
}

/// Boundary digon vertices of non-collinear pairs, enumerated over all pairs.
fn brute_force_shell(disks: &[Disk]) -> (usize, f64) {
    let (mut count, mut area) = (0, 0.0);
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            let (a, b) = (disks[i], disks[j]);
            let d = a.center.distance(b.center);
            if d >= a.radius + b.radius || d <= (a.radius - b.radius).abs() {
                continue;
            }
            let along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
            let h = (a.radius * a.radius - along * along).sqrt();
            let u = (b.center - a.center) * (1.0 / d);
            let base = a.center + u * along;
            for q in [base + u.perp() * h, base - u.perp() * h] {
                if disks.iter().any(|m| m.center.distance(q) < m.radius - 1e-9) {
                    continue;
                }
                count += 1;
                area += 0.5 * d * h;
            }
        }
    }
    (count, area)
}

#[test]
fn hex_patch_pieces_match_enumeration() {
    let arr = hex_patch(0.3);
    assert_eq!(arr.len(), 7);
    assert_eq!(find_digons(&arr).len(), 12);
    assert_eq!(adjacency_pairs(&arr).len(), 12);
    let d = decompose(&arr);
    let (count, area) = brute_force_shell(arr.disks());
    assert_eq!(count, 6);
    assert_eq!(d.shell.len(), count);
    assert!((d.area_i - area).abs() < 1e-12);
    assert_eq!(d.core_polys.len(), 6);
    let center = arr.disks().iter().position(|m| m.center.norm() < 1e-12).unwrap();
    for p in &d.core_polys {
        assert_eq!(p.vertices.len(), 3);
        assert!(p.vertices.contains(&center));
    }
}

#[test]
fn thick_triple_outer_shell_is_three_equal_sectors() {
    let mu = 0.3;
    let s = 1.0 + mu;
    let arr = MuArrangement::validated(
        mu,
        vec![disk(0.0, 0.0, 1.0), disk(s, 0.0, 1.0), disk(s / 2.0, 3f64.sqrt() / 2.0 * s, 1.0)],
    )
    .unwrap();
    let (sectors, area) = outer_shell(&arr);
    assert_eq!(sectors.len(), 3);
    // Each disk loses its two lens arcs and the 60° toward the triangle interior.
    let half = (s / 2.0).acos();
    let sweep = 2.0 * PI - PI / 3.0 - 2.0 * half;
    for sector in &sectors {
        assert!((sector.arc.sweep - sweep).abs() < 1e-9);
    }
    assert!((area - 1.5 * sweep).abs() < 1e-9);
    let (_, two) = outer_shell(&MuArrangement::validated(0.5, vec![disk(0.0, 0.0, 1.0), disk(1.5, 0.0, 1.0)]).unwrap());
    assert!((two - (2.0 * PI - 2.0 * 0.75f64.acos())).abs() < 1e-12);
}

#[test]
fn critical_and_supercritical_hex_coverage() {
    // At the critical order three disks meet at each lattice-triangle circumcenter.
    let rho = 1.0 / (1.0 + MU_CRITICAL);
    assert!((rho - 1.0 / 3f64.sqrt()).abs() < 1e-15);
    let tri = Triangle::new(Point::ORIGIN, Point::new(1.0, 0.0), Point::new(0.5, 3f64.sqrt() / 2.0));
    let disks = [disk(0.0, 0.0, rho), disk(1.0, 0.0, rho), disk(0.5, 3f64.sqrt() / 2.0, rho)];
    assert!(closed_union_covers_triangle(&tri, &disks, 100_000).covered);

    let rho = 1.0 / 1.8;
    let disks = [disk(0.0, 0.0, rho), disk(1.0, 0.0, rho), disk(0.5, 3f64.sqrt() / 2.0, rho)];
    assert!(!closed_union_covers_triangle(&tri, &disks, 100_000).covered);
    let arr = hex_arrangement(0.8, &Window::centered(5.0).unwrap()).unwrap();
    assert!(arr.validate().valid);
    let d = decompose(&arr);
    assert!(d.area_c.abs() <= 1e-7 * d.area_u);
}

#[test]
fn first_refinement_stage_adds_nothing_at_order_nine_tenths() {
    // The τ-scaled disk (radius 0.105) exceeds the hole inradius (0.051).
    let w = Window::centered(10.0).unwrap();
    assert_eq!(hex_arrangement(0.9, &w).unwrap().len(), 367);
    assert_eq!(iterate_hex(0.9, 0.2, 1, &w).unwrap().len(), 367);
    assert!(iterate_hex(0.9, 0.2, 2, &w).unwrap().len() > 367);
}

#[test]
fn hex_patches_attain_equality() {
    for mu in [0.1, 0.3, MU_CRITICAL] {
        let arr = hex_arrangement(mu, &Window::centered(5.0).unwrap()).unwrap();
        let r = theorem_bound(&arr);
        assert!(r.equality, "mu {mu}: slack {} non-thick {:?}", r.slack, r.non_thick_free_digons);
    }
    let mut disks = hex_arrangement(0.3, &Window::centered(3.0).unwrap()).unwrap().into_disks();
    disks[0].radius *= 0.97;
    let r = theorem_bound(&MuArrangement::validated(0.3, disks).unwrap());
    assert!(!r.equality && r.slack > 0.0);
}
