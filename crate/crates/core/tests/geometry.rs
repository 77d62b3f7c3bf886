mod common;

use common::{cylinder_sheet, flat, max_masked, sphere_cap};
use conformon::geometry::{
    arclength_table, curvature_fields, laplace_beltrami_apply, principal_curvatures,
    reconstruct_profile, Axis, CurvatureField, Grid1D, MongePatch,
};
use conformon::shape::{soliton_profile, ReducedProblem};
use proptest::prelude::*;

fn sphere_errors(n: usize) -> (f64, f64) {
    let r = 2.0;
    let f = curvature_fields(&sphere_cap(r, 0.5, n)).unwrap();
    let eh = max_masked(&f.valid, |k| f.h[k] - 1.0 / r);
    let ek = max_masked(&f.valid, |k| f.k[k] - 1.0 / (r * r));
    (eh, ek)
}

#[test]
fn sphere_cap_curvatures() {
    // h = 0.01
    let (eh, ek) = sphere_errors(101);
    assert!(eh < 1e-4, "H error {eh}");
    assert!(ek < 1e-4, "K error {ek}");
}

#[test]
fn sphere_cap_second_order() {
    let (eh1, ek1) = sphere_errors(51);
    let (eh2, ek2) = sphere_errors(101);
    let (eh3, ek3) = sphere_errors(201);
    for (coarse, fine) in [(eh1, eh2), (eh2, eh3), (ek1, ek2), (ek2, ek3)] {
        assert!(coarse / fine >= 3.5, "ratio {}", coarse / fine);
    }
}

#[test]
fn sphere_is_umbilic_to_second_order() {
    let disc = |n| {
        let f = curvature_fields(&sphere_cap(2.0, 0.5, n)).unwrap();
        max_masked(&f.valid, |k| f.h[k] * f.h[k] - f.k[k])
    };
    let (d1, d2) = (disc(51), disc(101));
    assert!(d2 < 1e-4);
    assert!(d1 / d2 >= 3.5);
}

#[test]
fn cylinder_curvatures() {
    let errs: Vec<(f64, f64)> = [41, 81]
        .iter()
        .map(|&n| {
            let f = curvature_fields(&cylinder_sheet(1.0, 0.4, 0.4, n)).unwrap();
            (
                max_masked(&f.valid, |k| f.h[k] - 0.5),
                max_masked(&f.valid, |k| f.k[k]),
            )
        })
        .collect();
    assert!(errs[1].0 < 1e-3);
    assert!(errs[1].1 < 1e-12);
    assert!(errs[0].0 / errs[1].0 >= 3.5);
}

#[test]
fn cylinder_principal_curvatures() {
    let f = curvature_fields(&cylinder_sheet(1.0, 0.4, 0.4, 81)).unwrap();
    let (k1, k2) = principal_curvatures(&f, 1e-8).unwrap();
    assert!(max_masked(&f.valid, |k| k1[k] - 1.0) < 1e-3);
    assert!(max_masked(&f.valid, |k| k2[k]) < 1e-6);
}

#[test]
fn sqrt_g_at_least_one() {
    for p in [sphere_cap(2.0, 0.5, 31), cylinder_sheet(1.0, 0.4, 0.4, 31)] {
        let f = curvature_fields(&p).unwrap();
        assert!(f.sqrt_g.iter().all(|&g| g >= 1.0));
        assert_eq!(f.valid.iter().filter(|&&v| v).count(), 29 * 29);
    }
}

#[test]
fn laplace_beltrami_flat_is_five_point() {
    let p = flat(15, 0.1);
    let field: Vec<f64> = (0..p.len())
        .map(|k| ((k * 37 % 11) as f64).sin() + 0.1 * k as f64)
        .collect();
    let lb = laplace_beltrami_apply(&p, &field).unwrap();
    let h2 = 0.1 * 0.1;
    for i in 1..14 {
        for j in 1..14 {
            let f = |a: usize, b: usize| field[p.index(a, b)];
            let five = (f(i + 1, j) + f(i - 1, j) - 2.0 * f(i, j)) / h2
                + (f(i, j + 1) + f(i, j - 1) - 2.0 * f(i, j)) / h2;
            assert_eq!(lb[p.index(i, j)], five);
        }
    }
}

fn cylinder_lb_error(n: usize) -> f64 {
    // on a generalized cylinder Δ_S f = d²f/ds², with s = asin(x) for ρ = 1
    let p = cylinder_sheet(1.0, 0.4, 0.4, n);
    let field: Vec<f64> = (0..p.nx())
        .flat_map(|i| (0..p.ny()).map(move |_| i))
        .map(|i| p.x(i).asin().sin())
        .collect();
    let lb = laplace_beltrami_apply(&p, &field).unwrap();
    let mut err = 0.0f64;
    for i in 1..n - 1 {
        for j in 1..n - 1 {
            let exact = -p.x(i).asin().sin();
            err = err.max((lb[p.index(i, j)] - exact).abs());
        }
    }
    err
}

#[test]
fn laplace_beltrami_cylinder_matches_arclength_second_derivative() {
    let (e1, e2) = (cylinder_lb_error(41), cylinder_lb_error(81));
    assert!(e2 < 1e-4, "{e2}");
    assert!(e1 / e2 >= 3.5, "ratio {}", e1 / e2);
}

#[test]
fn laplace_beltrami_sphere_harmonic() {
    // z restricted to the sphere is an l = 1 harmonic: Δ_S z = −2 z / R²
    let n = 81;
    let r = 2.0;
    let p = sphere_cap(r, 0.5, n);
    let lb = laplace_beltrami_apply(&p, p.heights()).unwrap();
    let mut err = 0.0f64;
    for i in 1..n - 1 {
        for j in 1..n - 1 {
            let k = p.index(i, j);
            err = err.max((lb[k] + 2.0 * p.heights()[k] / (r * r)).abs());
        }
    }
    assert!(err < 1e-3, "{err}");
}

#[test]
fn arclength_parabola() {
    // (√2 + asinh 1) / 2, confirmed by adaptive quadrature of sqrt(1 + x²)
    let exact = 1.147_793_574_696_319;
    let x = Grid1D::linspace(0.0, 1.0, 2001).unwrap();
    let z: Vec<f64> = x.values().iter().map(|v| 0.5 * v * v).collect();
    let s = arclength_table(&x.with_values(z).unwrap()).unwrap();
    assert!((s.values()[2000] - exact).abs() < 1e-6);
    assert!(s.values().windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn semicircle_endpoint_converges() {
    let err = |n| {
        let s = Grid1D::linspace(0.0, std::f64::consts::PI, n).unwrap();
        let c = reconstruct_profile(&vec![1.0; n], &s, 0.0, 0.0, 0.0).unwrap();
        (c.x[n - 1].abs()).max((c.z[n - 1] - 2.0).abs())
    };
    assert!(err(101) < 1e-6);
    // radius-1 circle everywhere
    let s = Grid1D::linspace(0.0, std::f64::consts::PI, 401).unwrap();
    let c = reconstruct_profile(&vec![1.0; 401], &s, 0.0, 0.0, 0.0).unwrap();
    for k in 0..401 {
        assert!((c.x[k].powi(2) + (c.z[k] - 1.0).powi(2) - 1.0).abs() < 1e-8);
    }
}

fn soliton_round_trip(n: usize) -> (f64, f64) {
    let p = ReducedProblem::new(2.0, 1.0, Grid1D::linspace(-10.0, 10.0, n).unwrap()).unwrap();
    let kappa: Vec<f64> = soliton_profile(&p).iter().map(|h| 2.0 * h).collect();
    let c = reconstruct_profile(&kappa, p.grid(), 0.0, 0.0, 0.0).unwrap();
    let measured = c.measured_curvature();
    let err = (1..n - 1)
        .map(|k| (measured[k] - kappa[k]).abs())
        .fold(0.0, f64::max);
    (err, c.max_speed_deviation())
}

#[test]
fn soliton_profile_round_trip() {
    let (e1, _) = soliton_round_trip(1001);
    let (e2, speed) = soliton_round_trip(2001);
    assert!(e2 < 1e-3);
    assert!(e1 / e2 >= 3.5, "ratio {}", e1 / e2);
    assert!(speed <= 1e-6, "speed deviation {speed}");
}

#[test]
fn centered_speed_deviation_is_second_order() {
    let dev = |n| {
        let s = Grid1D::linspace(-10.0, 10.0, n).unwrap();
        let kappa: Vec<f64> = s.values().iter().map(|v| 2.0 / v.cosh()).collect();
        reconstruct_profile(&kappa, &s, 0.3, 0.0, 0.0)
            .unwrap()
            .max_speed_deviation_centered()
    };
    assert!(dev(1001) / dev(2001) >= 3.5);
}

#[test]
fn profile_angle_derivative_matches_curvature() {
    let s = Grid1D::linspace(0.0, 5.0, 501).unwrap();
    let kappa: Vec<f64> = s.values().iter().map(|v| v.sin()).collect();
    let c = reconstruct_profile(&kappa, &s, 0.0, 0.0, 0.0).unwrap();
    for k in 0..501 {
        // θ = 1 − cos s
        assert!((c.theta[k] - (1.0 - s.values()[k].cos())).abs() < 1e-4);
    }
}

#[test]
fn translation_leaves_curvature_unchanged() {
    let p = sphere_cap(2.0, 0.5, 41);
    let a = curvature_fields(&p).unwrap();
    let b = curvature_fields(&p.translated(3.0, -1.0, 5.0)).unwrap();
    let d = max_masked(&a.valid, |k| a.h[k] - b.h[k]);
    assert!(d < 1e-9);
}

proptest! {
    #[test]
    fn principal_recombination(h in -5.0f64..5.0, spread in 0.0f64..5.0) {
        let k = h * h - spread * spread;
        let f = CurvatureField::from_parts(1, 1, vec![h], vec![k], vec![1.0], vec![true]).unwrap();
        let (k1, k2) = principal_curvatures(&f, 1e-8).unwrap();
        prop_assert!(k1[0] >= k2[0]);
        let scale = 1.0 + h * h + spread * spread;
        prop_assert!((0.5 * (k1[0] + k2[0]) - h).abs() <= 1e-14 * scale);
        prop_assert!((k1[0] * k2[0] - k).abs() <= 1e-13 * scale);
    }

    #[test]
    fn quadratic_surfaces_recombine(a in -1.0f64..1.0, b in -1.0f64..1.0, c in -1.0f64..1.0) {
        let ax = Axis::span(-0.3, 0.3, 9);
        let p = MongePatch::from_fn(ax, ax, |x, y| a * x * x + b * x * y + c * y * y).unwrap();
        let f = curvature_fields(&p).unwrap();
        let (k1, k2) = principal_curvatures(&f, 1e-8).unwrap();
        for idx in f.valid_indices() {
            let scale = 1.0 + f.h[idx].abs().powi(2) + f.k[idx].abs();
            prop_assert!((0.5 * (k1[idx] + k2[idx]) - f.h[idx]).abs() <= 1e-13 * scale);
            prop_assert!((k1[idx] * k2[idx] - f.k[idx]).abs() <= 1e-12 * scale);
        }
    }
}
