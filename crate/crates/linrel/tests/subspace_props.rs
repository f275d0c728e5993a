//! Property tests for the subspace algebra.

mod common;

use linrel::{random, Subspace, Tol};
use proptest::prelude::*;

fn principal_angle_intersection(s1: &Subspace, s2: &Subspace, tol: &Tol) -> Subspace {
    // directions of S1 at principal angle ~0 against S2
    if s1.dim() == 0 || s2.dim() == 0 {
        return Subspace::zero(s1.ambient_dim());
    }
    let product = s1.basis().adjoint() * s2.basis();
    let svd = product.clone().svd(true, false);
    let u = svd.u.unwrap();
    let mut cols = Vec::new();
    for (i, &sv) in svd.singular_values.iter().enumerate() {
        if sv > 1.0 - 1e-9 {
            cols.push(s1.basis() * u.column(i).into_owned());
        }
    }
    Subspace::span(&cols, s1.ambient_dim(), tol).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn double_complement_is_identity(seed in 0u64..1_000, ambient in 1usize..7, dim_frac in 0usize..100) {
        let tol = Tol::default();
        let dim = dim_frac % (ambient + 1);
        let s = random::subspace(&mut random::rng(seed), ambient, dim, &tol);
        let back = s.complement().complement();
        prop_assert!(back.projector_distance(&s) < tol.eq);
    }

    #[test]
    fn dimension_formula(seed in 0u64..1_000, ambient in 1usize..7, d1 in 0usize..100, d2 in 0usize..100) {
        let tol = Tol::default();
        let mut rng = random::rng(seed);
        let s1 = random::subspace(&mut rng, ambient, d1 % (ambient + 1), &tol);
        let s2 = random::subspace(&mut rng, ambient, d2 % (ambient + 1), &tol);
        let sum = s1.sum(&s2, &tol).unwrap().space;
        let inter = s1.intersect(&s2, &tol).unwrap();
        prop_assert_eq!(sum.dim() + inter.dim(), s1.dim() + s2.dim());
    }

    #[test]
    fn ominus_reassembles_orthogonally(seed in 0u64..1_000, ambient in 1usize..7, d1 in 0usize..100, d2 in 0usize..100) {
        let tol = Tol::default();
        let mut rng = random::rng(seed);
        let dim1 = d1 % (ambient + 1);
        let s1 = random::subspace(&mut rng, ambient, dim1, &tol);
        // a random subspace of s1
        let dim2 = d2 % (dim1 + 1);
        let sub_cols = s1.basis() * random::isometry_matrix(&mut rng, dim1, dim2);
        let s2 = Subspace::from_columns(&sub_cols, &tol);

        let diff = s1.ominus(&s2, &tol).unwrap();
        // orthogonal to s2 and summing back to s1
        if diff.dim() > 0 && s2.dim() > 0 {
            let overlap = (diff.basis().adjoint() * s2.basis())
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            prop_assert!(overlap < 1e-9);
        }
        let sum = diff.sum(&s2, &tol).unwrap();
        prop_assert!(sum.orthogonal);
        prop_assert!(sum.space.projector_distance(&s1) < tol.eq);
    }

    #[test]
    fn span_is_idempotent(seed in 0u64..1_000, ambient in 1usize..7, dim in 0usize..100) {
        let tol = Tol::default();
        let s = random::subspace(&mut random::rng(seed), ambient, dim % (ambient + 1), &tol);
        let cols: Vec<_> = (0..s.dim()).map(|j| s.basis().column(j).into_owned()).collect();
        let respanned = Subspace::span(&cols, ambient, &tol).unwrap();
        prop_assert!(respanned.projector_distance(&s) < tol.eq);
    }

    #[test]
    fn intersection_agrees_with_principal_angle_route(seed in 0u64..1_000, ambient in 1usize..6, d1 in 0usize..100, d2 in 0usize..100) {
        let tol = Tol::default();
        let mut rng = random::rng(seed);
        let s1 = random::subspace(&mut rng, ambient, d1 % (ambient + 1), &tol);
        let s2 = random::subspace(&mut rng, ambient, d2 % (ambient + 1), &tol);
        let complement_route = s1.intersect(&s2, &tol).unwrap();
        let angle_route = principal_angle_intersection(&s1, &s2, &tol);
        prop_assert!(complement_route.projector_distance(&angle_route) < tol.eq);
    }
}
