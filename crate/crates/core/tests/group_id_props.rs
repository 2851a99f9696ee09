mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use qreach::group_id::{analyze_system, find_invariant_form, FormSymmetry, GroupKind};
use qreach::lie_engine::traceless_generators;
use qreach::{ComplexMatrix, Tolerances};

fn family_from(pick: u8) -> Family {
    match pick % 6 {
        0 => Family::Sp(1),
        1 => Family::Sp(2),
        2 => Family::Sp(3),
        3 => Family::So(3),
        4 => Family::So(5),
        _ => Family::So(6),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn form_annihilates_the_algebra(seed in any::<u64>(), pick in any::<u8>()) {
        let tol = Tolerances::default();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (sys, _) = random_system(&mut rng, family_from(pick));
        let (basis, analysis) = analyze_system(&sys, &tol).unwrap();
        let form = analysis.form.expect("form groups carry a form");
        for x in &basis.elements {
            let traceless = x - ComplexMatrix::identity(x.nrows(), x.nrows()) * (x.trace() / c(x.nrows() as f64));
            prop_assert!((traceless.transpose() * &form.j + &form.j * &traceless).norm() <= tol.unit);
        }
    }

    #[test]
    fn form_is_covariant(seed in any::<u64>(), pick in any::<u8>()) {
        let tol = Tolerances::default();
        let family = family_from(pick);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (sys, b) = random_system(&mut rng, family);
        let form = find_invariant_form(&traceless_generators(&sys), &tol).unwrap();
        let expected = conjugated_form(&family.standard_form().unwrap(), &b);
        prop_assert!(phase_distance(&form.j, &expected) <= 1e-7, "distance {}", phase_distance(&form.j, &expected));
    }

    #[test]
    fn eigenvalue_structure(seed in any::<u64>(), pick in any::<u8>()) {
        let tol = Tolerances::default();
        let family = family_from(pick);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (sys, _) = random_system(&mut rng, family);
        let form = find_invariant_form(&traceless_generators(&sys), &tol).unwrap();
        let n = family.dim();
        let id = ComplexMatrix::identity(n, n);
        let sign = match form.symmetry {
            FormSymmetry::Antisymmetric => -1.0,
            FormSymmetry::Symmetric => 1.0,
        };
        prop_assert!((form.conjugate_square() - id * c(sign)).norm() <= tol.unit);
        prop_assert!((form.j.adjoint() * &form.j - ComplexMatrix::identity(n, n)).norm() <= tol.unit);
    }

    #[test]
    fn class_matches_closure_dimension(seed in any::<u64>(), pick in any::<u8>()) {
        let tol = Tolerances::default();
        let family = match pick % 8 {
            6 => Family::Unitary(3),
            7 => Family::Special(4),
            _ => family_from(pick),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (sys, _) = random_system(&mut rng, family);
        let (basis, analysis) = analyze_system(&sys, &tol).unwrap();
        let g = analysis.group;
        if let Some(d) = g.kind.dimension(g.dim_space) {
            prop_assert_eq!(d + usize::from(g.central_u1), basis.len());
        }
        prop_assert_ne!(g.kind, GroupKind::Other);
    }
}

#[test]
fn ladder_form_matches_printed_matrix() {
    let form =
        find_invariant_form(&traceless_generators(&ladder5()), &Tolerances::default()).unwrap();
    assert!((&form.j - ladder5_form()).norm() < 1e-8);
    assert_eq!(form.symmetry, FormSymmetry::Symmetric);
}
