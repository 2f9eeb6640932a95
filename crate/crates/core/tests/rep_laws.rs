use jk_core::arith::Rational;
use jk_core::check::rep_checks;
use jk_core::linalg::QMatrix;
use jk_core::pencil::{jk_invariants, replicate, Pencil};
use jk_core::rep::{
    check_admissible, group_transform, jordan_count_at, operator_matrix, random_group_element, random_pair,
    random_point, rep_pencil, Family, Group, Point, RepSpec,
};
use proptest::prelude::*;

fn small_specs() -> Vec<RepSpec> {
    vec![
        RepSpec::sum(Family::GlSum, 3, 2),
        RepSpec::sum(Family::SlSum, 3, 2),
        RepSpec::sum(Family::SoSum, 3, 2),
        RepSpec::sum(Family::SpSum, 4, 1),
        RepSpec::sum(Family::BSum, 3, 2),
        RepSpec::n_std(4),
        RepSpec::cong(Family::CongSym, Group::Gl, 3),
        RepSpec::cong(Family::CongSym, Group::Sl, 3),
        RepSpec::cong(Family::CongSkew, Group::Gl, 4),
        RepSpec::cong(Family::CongSkew, Group::Sl, 3),
    ]
}

#[test]
fn group_action_preserves_invariants() {
    for spec in small_specs() {
        for seed in 0..100 {
            let (x, a) = random_pair(&spec, seed, 5);
            let g = random_group_element(&spec, seed);
            check_admissible(&spec, &g).unwrap();
            let gx = group_transform(&spec, &g, &x).unwrap();
            let ga = group_transform(&spec, &g, &a).unwrap();
            let before = jk_invariants(&rep_pencil(&spec, &x, &a).unwrap()).unwrap();
            let after = jk_invariants(&rep_pencil(&spec, &gx, &ga).unwrap()).unwrap();
            assert_eq!(before, after, "{spec}, seed {seed}");
        }
    }
}

#[test]
fn structural_laws_on_random_pairs() {
    for spec in small_specs() {
        for seed in 0..10 {
            let (x, a) = random_pair(&spec, seed, 3);
            let inv = jk_invariants(&rep_pencil(&spec, &x, &a).unwrap()).unwrap();
            let checks = rep_checks(&spec, &x, &a, &inv).unwrap();
            assert!(checks.iter().all(|c| !c.failed()), "{spec}, seed {seed}: {checks:?}");
        }
    }
}

fn matrix_of(p: &Point) -> QMatrix {
    p.as_matrix().expect("matrix point").clone()
}

/// `gl(n)` acting on `m` columns is `n` copies of the pencil `Xᵀ + λAᵀ`.
#[test]
fn replication_law() {
    for n in 1..=4 {
        for m in 1..=4 {
            let spec = RepSpec::sum(Family::GlSum, n, m);
            for seed in 0..3 {
                let (x, a) = random_pair(&spec, 100 + seed, 10);
                let full = jk_invariants(&rep_pencil(&spec, &x, &a).unwrap()).unwrap();
                let small = Pencil::new(matrix_of(&x).transpose(), matrix_of(&a).transpose()).unwrap();
                let rep = replicate(&jk_invariants(&small).unwrap(), n).unwrap();
                assert_eq!(full, rep, "gl_sum({n}, {m}), seed {seed}");
            }
        }
    }
}

#[test]
fn jordan_count_matches_invariants() {
    // gl(2) on 2x2 matrices: X = diag(1, 2), A = I gives roots -1, -2.
    let spec = RepSpec::sum(Family::GlSum, 2, 2);
    let x = Point::matrix_i64(&[&[1, 0], &[0, 2]]);
    let a = Point::matrix_i64(&[&[1, 0], &[0, 1]]);
    let r = |v: i64| Rational::from_i64(v);
    assert_eq!(jordan_count_at(&spec, &x, &a, &r(1)).unwrap(), 2);
    assert_eq!(jordan_count_at(&spec, &x, &a, &r(2)).unwrap(), 2);
    assert_eq!(jordan_count_at(&spec, &x, &a, &r(3)).unwrap(), 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // R_{x + c a} = R_x + c R_a.
    #[test]
    fn operator_is_linear(idx in 0usize..10, s1 in any::<u64>(), s2 in any::<u64>(), c in -4i64..=4) {
        let spec = small_specs()[idx];
        let x = random_point(&spec, s1, 6);
        let a = random_point(&spec, s2, 6);
        let c = Rational::from_i64(c);
        let lhs = operator_matrix(&spec, &x.add_scaled(&c, &a).unwrap()).unwrap();
        let rhs = operator_matrix(&spec, &x).unwrap().add_scaled(&c, &operator_matrix(&spec, &a).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    // Generated points and group images stay in the representation space.
    #[test]
    fn group_images_are_valid(idx in 0usize..10, seed in any::<u64>()) {
        let spec = small_specs()[idx];
        let x = random_point(&spec, seed, 6);
        let g = random_group_element(&spec, seed);
        let gx = group_transform(&spec, &g, &x).unwrap();
        prop_assert!(gx.validate(&spec).is_ok());
    }
}
