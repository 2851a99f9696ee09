mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use qreach::group_id::{project_to_form_algebra, SystemAnalysis};
use qreach::linalg::random_hermitian;
use qreach::reachability::{decide_reachability, ReachabilityVerdict, VerdictStatus};
use qreach::{ComplexMatrix, Config, DensityMatrix, Tolerances};

struct Setup {
    analysis: SystemAnalysis,
    j: ComplexMatrix,
    rng: ChaCha8Rng,
}

fn setup(seed: u64, family: Family) -> Setup {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (sys, b) = random_system(&mut rng, family);
    let j = conjugated_form(&family.standard_form().unwrap(), &b);
    Setup {
        analysis: analysis_for(&sys).1,
        j,
        rng,
    }
}

fn check_sound(
    v: &ReachabilityVerdict,
    s: &Setup,
    r0: &DensityMatrix,
    r1: &DensityMatrix,
) -> Result<(), TestCaseError> {
    let tol = Tolerances::default();
    if let Some(u) = &v.witness {
        let n = u.nrows();
        prop_assert!((u * r0.matrix() * u.adjoint() - r1.matrix()).norm() <= tol.verdict);
        prop_assert!((u.adjoint() * u - ComplexMatrix::identity(n, n)).norm() <= tol.verdict);
        prop_assert!((u.transpose() * &s.j * u - &s.j).norm() <= tol.verdict);
    }
    if let Some(cert) = &v.certificate {
        let viol = cert
            .violation(r0, r1, s.analysis.form.as_ref(), &tol)
            .unwrap();
        prop_assert!(viol > 10.0 * tol.verdict, "violation {viol}");
    }
    prop_assert_eq!(
        v.certificate.is_some(),
        v.status == VerdictStatus::NotEquivalent
    );
    Ok(())
}

fn family_from(pick: u8) -> Family {
    match pick % 4 {
        0 => Family::Sp(2),
        1 => Family::Sp(3),
        2 => Family::So(4),
        _ => Family::So(5),
    }
}

fn weights(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut w: Vec<f64> = (0..n)
        .map(|k| (k + 1) as f64 + rng.random_range(0.0..0.5))
        .collect();
    if rng.random_bool(0.5) {
        w[1] = w[0];
    }
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn group_orbit_pairs_are_never_separated(seed in any::<u64>(), pick in any::<u8>()) {
        let family = family_from(pick);
        let mut s = setup(seed, family);
        let n = family.dim();
        let w = weights(&mut s.rng, n);
        let r0 = random_state(&mut s.rng, &w);
        let x = project_to_form_algebra(&(random_hermitian(&mut s.rng, n) * I), &s.j);
        let r1 = r0.conjugated(&x.exp());
        let v = decide_reachability(&s.analysis, &r0, &r1, &Config::default()).unwrap();
        prop_assert_ne!(v.status, VerdictStatus::NotEquivalent);
        check_sound(&v, &s, &r0, &r1)?;
    }

    #[test]
    fn constructed_pairs_are_never_joined(seed in any::<u64>(), pick in any::<u8>()) {
        let family = family_from(pick);
        let mut s = setup(seed, family);
        let w = weights(&mut s.rng, family.dim());
        let (r0, r1) = linked_pair(&mut s.rng, &s.j, &w);
        let v = decide_reachability(&s.analysis, &r0, &r1, &Config::default()).unwrap();
        prop_assert_ne!(v.status, VerdictStatus::Equivalent);
        check_sound(&v, &s, &r0, &r1)?;
    }

    #[test]
    fn verdict_is_symmetric(seed in any::<u64>(), pick in any::<u8>(), linked in any::<bool>()) {
        let family = family_from(pick);
        let mut s = setup(seed, family);
        let n = family.dim();
        let w = weights(&mut s.rng, n);
        let (r0, r1) = if linked {
            linked_pair(&mut s.rng, &s.j, &w)
        } else {
            (random_state(&mut s.rng, &w), random_state(&mut s.rng, &w))
        };
        let cfg = Config::default();
        let ab = decide_reachability(&s.analysis, &r0, &r1, &cfg).unwrap();
        let ba = decide_reachability(&s.analysis, &r1, &r0, &cfg).unwrap();
        prop_assert_eq!(ab.status, ba.status);
        check_sound(&ab, &s, &r0, &r1)?;
        check_sound(&ba, &s, &r1, &r0)?;
    }

    #[test]
    fn verdict_is_reflexive(seed in any::<u64>(), pick in any::<u8>()) {
        let family = family_from(pick);
        let mut s = setup(seed, family);
        let w = weights(&mut s.rng, family.dim());
        let r = random_state(&mut s.rng, &w);
        let v = decide_reachability(&s.analysis, &r, &r, &Config::default()).unwrap();
        prop_assert_eq!(v.status, VerdictStatus::Equivalent);
    }

    #[test]
    fn pure_state_like_pairs_under_symplectic(seed in any::<u64>(), big in any::<bool>()) {
        let family = if big { Family::Sp(3) } else { Family::Sp(2) };
        let mut s = setup(seed, family);
        let n = family.dim();
        let top = s.rng.random_range(0.3..0.9);
        let mut w = vec![(1.0 - top) / (n - 1) as f64; n];
        w[0] = top;
        let (r0, r1) = (random_state(&mut s.rng, &w), random_state(&mut s.rng, &w));
        let v = decide_reachability(&s.analysis, &r0, &r1, &Config::default()).unwrap();
        prop_assert_ne!(v.status, VerdictStatus::NotEquivalent);
        check_sound(&v, &s, &r0, &r1)?;
    }

    #[test]
    fn form_partner_pairs_at_n4(seed in any::<u64>()) {
        let mut s = setup(seed, Family::Sp(2));
        let (r0, r1) = linked_pair(&mut s.rng, &s.j, &[0.4, 0.3, 0.2, 0.1]);
        let v = decide_reachability(&s.analysis, &r0, &r1, &Config::default()).unwrap();
        prop_assert!(matches!(v.status, VerdictStatus::NotEquivalent | VerdictStatus::Inconclusive));
        prop_assert!(v.witness.is_none());
    }
}
