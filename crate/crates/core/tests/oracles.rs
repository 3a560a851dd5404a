mod common;

use edgeforge::analysis::label_components;
use edgeforge::canny::otsu_threshold;
use edgeforge::imgcore::Grid;
use edgeforge::kernels::{
    build_weights_inverse_distance, build_weights_radial, estimator_coefficients, estimator_normalizer, plane_fit,
    Axis, WeightMatrix,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{flood_fill_partition, map_4x4, otsu_brute_force, partition_from_labels};

#[test]
fn otsu_matches_brute_force_on_random_images() {
    let mut rng = StdRng::seed_from_u64(7);
    for case in 0..200 {
        // alternate full-range noise with a few clustered levels to exercise ties
        let img = if case % 2 == 0 {
            Grid::from_fn(16, 16, |_, _| f64::from(rng.gen_range(0u8..=255))).unwrap()
        } else {
            let levels: Vec<f64> = (0..3).map(|_| f64::from(rng.gen_range(0u8..=255))).collect();
            Grid::from_fn(16, 16, |_, _| levels[rng.gen_range(0..3)]).unwrap()
        };
        match otsu_brute_force(&img) {
            Some(t) => assert_eq!(otsu_threshold(&img).unwrap().threshold, t, "case {case}"),
            None => assert!(otsu_threshold(&img).is_err()),
        }
    }
}

#[test]
fn otsu_two_level_examples() {
    let img = Grid::from_vec(2, 2, vec![0.0, 0.0, 255.0, 255.0]).unwrap();
    assert_eq!(otsu_threshold(&img).unwrap().threshold, 0);

    let img = Grid::from_fn(20, 10, |r, _| if r < 5 { 50.0 } else { 200.0 }).unwrap();
    let t = otsu_threshold(&img).unwrap().threshold;
    assert_eq!(Some(t), otsu_brute_force(&img));
    assert!((50..200).contains(&t));
}

#[test]
fn labeling_matches_flood_fill_on_every_4x4_map() {
    for bits in 0..1u32 << 16 {
        let map = map_4x4(bits);
        let lab = label_components(&map);
        let expect = flood_fill_partition(&map);
        assert_eq!(partition_from_labels(&lab.labels), expect, "bits {bits:#06x}");
        assert_eq!(lab.component_count, expect.len());
    }
}

#[test]
fn labeling_matches_flood_fill_on_random_maps() {
    let mut rng = StdRng::seed_from_u64(11);
    for i in 0..40 {
        let density = 0.2 + 0.5 * (i as f64 / 40.0);
        let map = Grid::from_fn(64, 64, |_, _| rng.gen_bool(density)).unwrap();
        let lab = label_components(&map);
        assert_eq!(partition_from_labels(&lab.labels), flood_fill_partition(&map));
        // labels are dense and numbered by first raster occurrence
        let mut next = 1;
        for &l in lab.labels.data() {
            if l == next {
                next += 1;
            }
            assert!(l < next);
        }
        assert_eq!(next as usize - 1, lab.component_count);
    }
}

/// Weighted squared residual of a plane over a patch.
fn residual(patch: &[f64], w: &WeightMatrix, alpha: f64, beta: f64, gamma: f64) -> f64 {
    let l = w.radius() as isize;
    let side = w.side();
    w.offsets()
        .map(|(r, c, wt)| {
            let i = patch[((r + l) as usize) * side + (c + l) as usize];
            let e = i - alpha * r as f64 - beta * c as f64 - gamma;
            (wt as f64).powi(2) * e * e
        })
        .sum()
}

/// Coordinate-free minimizer of the residual by repeated grid refinement.
fn grid_search(patch: &[f64], w: &WeightMatrix) -> (f64, f64, f64) {
    let mut center = (0.0, 0.0, 128.0);
    let mut span = 256.0;
    while span > 1e-8 {
        let mut best = (f64::INFINITY, center);
        for i in -5..=5 {
            for j in -5..=5 {
                for k in -5..=5 {
                    let p = (
                        center.0 + span * i as f64 / 5.0,
                        center.1 + span * j as f64 / 5.0,
                        center.2 + span * k as f64 / 5.0,
                    );
                    let e = residual(patch, w, p.0, p.1, p.2);
                    if e < best.0 {
                        best = (e, p);
                    }
                }
            }
        }
        center = best.1;
        span /= 3.0;
    }
    center
}

#[test]
fn plane_fit_minimizes_weighted_residual() {
    let mut rng = StdRng::seed_from_u64(3);
    let schemes = [
        WeightMatrix::uniform(1).unwrap(),
        build_weights_inverse_distance(1).unwrap(),
        build_weights_inverse_distance(2).unwrap(),
        build_weights_radial(2).unwrap(),
    ];
    for w in &schemes {
        for _ in 0..3 {
            let patch: Vec<f64> = (0..w.side() * w.side()).map(|_| rng.gen_range(0.0..255.0)).collect();
            let fit = plane_fit(&patch, w).unwrap();
            let (a, b, g) = grid_search(&patch, w);
            assert!((fit.alpha - a).abs() < 1e-6, "alpha {} vs {a}", fit.alpha);
            assert!((fit.beta - b).abs() < 1e-6, "beta {} vs {b}", fit.beta);
            assert!((fit.gamma - g).abs() < 1e-6, "gamma {} vs {g}", fit.gamma);
        }
    }
}

#[test]
fn beta_is_raw_kernel_response_over_normalizer() {
    let mut rng = StdRng::seed_from_u64(5);
    for w in [
        build_weights_inverse_distance(2).unwrap(),
        build_weights_radial(2).unwrap(),
    ] {
        let kx = estimator_coefficients(&w, Axis::X).unwrap();
        let ky = estimator_coefficients(&w, Axis::Y).unwrap();
        let nx = estimator_normalizer(&w, Axis::X);
        let ny = estimator_normalizer(&w, Axis::Y);
        for _ in 0..20 {
            let patch: Vec<f64> = (0..25).map(|_| f64::from(rng.gen_range(0u8..=255))).collect();
            let fit = plane_fit(&patch, &w).unwrap();
            let dot = |k: &[i64]| k.iter().zip(&patch).map(|(&k, &p)| k as f64 * p).sum::<f64>();
            assert!((fit.beta - dot(&kx) / nx).abs() < 1e-9);
            assert!((fit.alpha - dot(&ky) / ny).abs() < 1e-9);
        }
    }
}

#[test]
fn plane_fit_recovers_exact_planes() {
    let w = build_weights_inverse_distance(2).unwrap();
    let patch: Vec<f64> = (0..25)
        .map(|i| {
            let (r, c) = ((i / 5) as f64 - 2.0, (i % 5) as f64 - 2.0);
            3.5 * r - 1.25 * c + 90.0
        })
        .collect();
    let fit = plane_fit(&patch, &w).unwrap();
    assert!((fit.alpha - 3.5).abs() < 1e-12);
    assert!((fit.beta + 1.25).abs() < 1e-12);
    assert!((fit.gamma - 90.0).abs() < 1e-12);
}
