//! Randomized invariants of the number type, its membership curves, and
//! the row-reduction machinery.

use gpdmf::ffls::{self, FflsMethod};
use gpdmf::fuzzy_matrix::{self, gauss_eliminate, FuzzyMatrix, RowOp};
use gpdmf::matrix::{self, RealMatrix, RealRowOp};
use gpdmf::vector::FuzzyVector;
use gpdmf::{Coordinates, FuzzyNumber};
use proptest::prelude::*;

fn coords() -> impl Strategy<Value = Coordinates> {
    prop::array::uniform5(-3.0f64..3.0).prop_map(Coordinates)
}

fn numbers() -> impl Strategy<Value = FuzzyNumber> {
    coords().prop_map(FuzzyNumber::from_coords)
}

fn display_numbers() -> impl Strategy<Value = FuzzyNumber> {
    (
        -20.0f64..20.0,
        0.05f64..20.0,
        0.05f64..20.0,
        -4.0f64..4.0,
        -4.0f64..4.0,
    )
        .prop_map(|(x, dm, dp, mm, mp)| FuzzyNumber::new(x, dm, dp, mm, mp).unwrap())
}

fn units() -> impl Strategy<Value = FuzzyNumber> {
    prop::array::uniform5((0.05f64..5.0, any::<bool>())).prop_map(|parts| {
        let mut c = [0.0; 5];
        for (slot, (magnitude, negative)) in c.iter_mut().zip(parts) {
            *slot = if negative { -magnitude } else { magnitude };
        }
        FuzzyNumber::from_coords(Coordinates(c))
    })
}

fn unit_matrices(rows: usize, cols: usize) -> impl Strategy<Value = FuzzyMatrix> {
    prop::collection::vec(prop::collection::vec(units(), cols), rows)
        .prop_map(|rows| FuzzyMatrix::from_rows(&rows).unwrap())
}

fn relative_eq(a: FuzzyNumber, b: FuzzyNumber, tol: f64) -> bool {
    let scale = 1.0_f64.max(a.coords().max_abs()).max(b.coords().max_abs());
    a.approx_eq(b, tol * scale)
}

proptest! {
    #[test]
    fn json_round_trip_preserves_coordinates(n in display_numbers()) {
        let text = serde_json::to_string(&n).unwrap();
        let back: FuzzyNumber = serde_json::from_str(&text).unwrap();
        prop_assert!(relative_eq(n, back, 1e-12));
    }

    #[test]
    fn display_round_trip_preserves_coordinates(n in display_numbers()) {
        let back: FuzzyNumber = n.to_string().parse().unwrap();
        prop_assert!(relative_eq(n, back, 1e-12));
    }

    #[test]
    fn membership_stays_within_the_unit_interval(
        n in display_numbers(),
        fraction in -1.5f64..1.5,
    ) {
        let t = if fraction < 0.0 {
            n.x() + fraction * n.d_minus()
        } else {
            n.x() + fraction * n.d_plus()
        };
        let value = n.membership(t);
        prop_assert!((0.0..=1.0).contains(&value));
        if fraction.abs() >= 1.0 {
            prop_assert_eq!(value, 0.0);
        }
    }

    #[test]
    fn sampling_brackets_the_support_with_zeros(n in display_numbers()) {
        let samples = n.membership_samples(33);
        prop_assert_eq!(samples.len(), 33);
        prop_assert_eq!(samples.first().unwrap().1, 0.0);
        prop_assert_eq!(samples.last().unwrap().1, 0.0);
        for w in samples.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn products_vanish_exactly_when_zero_slots_cover_every_coordinate(
        a in coords(),
        b in coords(),
        mask_a in prop::array::uniform5(any::<bool>()),
        mask_b in prop::array::uniform5(any::<bool>()),
    ) {
        let mut ca = a;
        let mut cb = b;
        for c in 0..5 {
            if mask_a[c] {
                ca.0[c] = 0.0;
            }
            if mask_b[c] {
                cb.0[c] = 0.0;
            }
        }
        // keep the surviving slots away from zero so the masks alone decide
        for c in 0..5 {
            if !mask_a[c] && ca.0[c].abs() < 0.01 {
                ca.0[c] = 0.5;
            }
            if !mask_b[c] && cb.0[c].abs() < 0.01 {
                cb.0[c] = 0.5;
            }
        }
        let product = FuzzyNumber::from_coords(ca) * FuzzyNumber::from_coords(cb);
        let annihilated = (0..5).all(|c| mask_a[c] || mask_b[c]);
        prop_assert_eq!(product == FuzzyNumber::ZERO, annihilated);
    }

    #[test]
    fn crisp_embedding_is_a_homomorphism(
        a in -10.0f64..10.0,
        b in -10.0f64..10.0,
        x in numbers(),
    ) {
        let fa = FuzzyNumber::crisp(a);
        let fb = FuzzyNumber::crisp(b);
        prop_assert!(relative_eq(fa + fb, FuzzyNumber::crisp(a + b), 1e-12));
        prop_assert!(relative_eq(fa * fb, FuzzyNumber::crisp(a * b), 1e-12));
        prop_assert_eq!(fa * x, x.scale(a));
    }

    #[test]
    fn row_reduction_is_idempotent(
        rows in prop::collection::vec(
            prop::collection::vec(-3.0f64..3.0, 4),
            1..=5,
        ),
    ) {
        let a = RealMatrix::from_rows(&rows).unwrap();
        let first = matrix::rref(&a);
        let second = matrix::rref(&first.rref);
        prop_assert_eq!(first.rank, second.rank);
        prop_assert_eq!(&first.pivot_columns, &second.pivot_columns);
        let drift = first.rref.sub(&second.rref).unwrap().max_abs();
        prop_assert!(drift <= 1e-9 * first.rref.max_abs().max(1.0));
    }

    #[test]
    fn replaying_real_ops_reproduces_the_reduction(
        rows in prop::collection::vec(
            prop::collection::vec(-3.0f64..3.0, 3),
            1..=4,
        ),
    ) {
        let a = RealMatrix::from_rows(&rows).unwrap();
        let report = matrix::rref(&a);
        let mut m = a.clone();
        for op in &report.row_ops {
            match *op {
                RealRowOp::Swap { a, b } => {
                    for j in 0..m.cols() {
                        let tmp = m.get(a, j);
                        m.set(a, j, m.get(b, j));
                        m.set(b, j, tmp);
                    }
                }
                RealRowOp::Scale { row, factor } => {
                    for j in 0..m.cols() {
                        m.set(row, j, m.get(row, j) * factor);
                    }
                }
                RealRowOp::Axpy { src, dst, factor } => {
                    for j in 0..m.cols() {
                        let v = m.get(dst, j) + factor * m.get(src, j);
                        m.set(dst, j, v);
                    }
                }
            }
        }
        let drift = m.sub(&report.rref).unwrap().max_abs();
        prop_assert!(drift <= 1e-9 * a.max_abs().max(1.0));
    }

    #[test]
    fn replaying_fuzzy_ops_is_bitwise_exact(m in unit_matrices(3, 4)) {
        let report = gauss_eliminate(&m);
        let replayed = fuzzy_matrix::replay_ops(&m, &report.ops).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                prop_assert_eq!(replayed.get(i, j).coords().0, report.result.get(i, j).coords().0);
            }
        }
        prop_assert_eq!(
            report.achieved_rref,
            report.pivot_columns.iter().copied().eq(0..m.rows())
        );
    }

    #[test]
    fn serialized_fuzzy_ops_replay_exactly(m in unit_matrices(2, 3)) {
        let report = gauss_eliminate(&m);
        let text = serde_json::to_string(&report.ops).unwrap();
        let parsed: Vec<RowOp> = serde_json::from_str(&text).unwrap();
        let replayed = fuzzy_matrix::replay_ops(&m, &parsed).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                prop_assert_eq!(replayed.get(i, j).coords().0, report.result.get(i, j).coords().0);
            }
        }
    }

    #[test]
    fn elimination_and_coordinate_methods_agree_when_both_apply(
        a in unit_matrices(2, 2),
        x in prop::collection::vec(numbers(), 2),
    ) {
        let x0 = FuzzyVector(x);
        let b = a.mat_vec(&x0).unwrap();
        let by_elimination = ffls::solve_detailed(&a, &b, FflsMethod::FuzzyGauss).unwrap();
        let by_coordinates = ffls::solve_detailed(&a, &b, FflsMethod::Coordinate).unwrap();
        prop_assert!(by_coordinates.solution.is_consistent());

        let scale = b.max_abs_coord().max(x0.max_abs_coord()).max(1.0);
        if by_elimination.method == FflsMethod::FuzzyGauss {
            let sol = by_elimination.solution.particular.as_ref().unwrap();
            prop_assert!(ffls::residual(&a, sol, &b).unwrap() <= 1e-6 * scale);
        }
        let sol = by_coordinates.solution.particular.as_ref().unwrap();
        prop_assert!(ffls::residual(&a, sol, &b).unwrap() <= 1e-6 * scale);
    }
}
