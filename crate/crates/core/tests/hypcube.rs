use std::f64::consts::FRAC_PI_2;

use artinhyp::hypcube::{cube_apex, dihedral_angle, hyp_distance, FaceType, HyperbolicCube};
use proptest::prelude::*;

proptest! {
    #[test]
    fn theta_decreases_towards_zero_from_right_angle(a in 1e-3f64..3.0, b in 1e-3f64..3.0) {
        prop_assume!((a - b).abs() > 1e-6);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        prop_assert!(dihedral_angle(lo) > dihedral_angle(hi));
        prop_assert!(dihedral_angle(hi) > 0.0 && dihedral_angle(lo) < FRAC_PI_2);
    }

    #[test]
    fn cube_metric_is_a_metric(n in 1usize..=5, eps in 0.01f64..2.0, a in 0usize..32, b in 0usize..32, c in 0usize..32) {
        let cube = HyperbolicCube::new(n, eps).unwrap();
        let m = (1 << n) - 1;
        let (a, b, c) = (a & m, b & m, c & m);
        prop_assert!((cube.distance(a, b) - cube.distance(b, a)).abs() < 1e-12);
        prop_assert!(cube.distance(a, c) <= cube.distance(a, b) + cube.distance(b, c) + 1e-9);
        prop_assert_eq!(cube.distance(a, b) == 0.0, a == b);
    }
}

#[test]
fn theta_on_grid_is_monotone() {
    let grid: Vec<f64> = (1..=400).map(|i| i as f64 * 0.01).collect();
    let thetas: Vec<f64> = grid.iter().map(|&e| dihedral_angle(e)).collect();
    assert!(thetas.windows(2).all(|w| w[0] > w[1]));
}

#[test]
fn apex_is_at_distance_eps_from_walls() {
    for n in 1..=6 {
        let p = cube_apex(n, 0.4);
        assert!(p.on_hyperboloid());
        for i in 0..n {
            let d = hyp_distance(&p, &p.reflect(i)).unwrap();
            assert!((d - 0.8).abs() < 1e-12);
        }
    }
}

#[test]
fn edges_at_apex_have_length_eps() {
    let cube = HyperbolicCube::new(3, 0.25).unwrap();
    let apex = cube.apex_vertex();
    for i in 0..3 {
        assert!((cube.distance(apex, apex ^ 1 << i) - 0.25).abs() < 1e-12);
    }
    assert_eq!(
        cube.face_type(&[0b011, 0b111]).unwrap(),
        FaceType { k: 0, l: 1 }
    );
    assert!(cube.face_type(&[0b001, 0b010]).is_err());
}
