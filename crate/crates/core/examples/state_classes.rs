//! Spectral classes of density matrices and the tilde transform.

use qreach::group_id::standard_symplectic_form;
use qreach::{
    classify_state, kinematically_equivalent, spectrum, tilde_transform, DensityMatrix,
    InvariantForm, Tolerances,
};

fn main() -> qreach::Result<()> {
    let tol = Tolerances::default();
    let states = [
        ("I/4", vec![0.25; 4]),
        ("pure", vec![1.0, 0.0, 0.0, 0.0]),
        ("pure-like", vec![0.7, 0.1, 0.1, 0.1]),
        ("aabb", vec![0.15, 0.15, 0.35, 0.35]),
        ("abba", vec![0.15, 0.35, 0.35, 0.15]),
        ("distinct", vec![0.1, 0.2, 0.3, 0.4]),
    ];
    let form = InvariantForm::from_matrix(standard_symplectic_form(2), &tol)?;
    for (name, w) in &states {
        let rho = DensityMatrix::diagonal(w)?;
        let s = spectrum(&rho, &tol);
        let t = tilde_transform(&rho, &form)?;
        let diag: Vec<f64> = (0..4).map(|k| t.matrix()[(k, k)].re).collect();
        println!(
            "{name:>9}: {:<16} multiplicities {:?}, tilde diag {:?}",
            classify_state(&rho, &tol).kind.to_string(),
            s.multiplicities(),
            diag
        );
    }
    let a = DensityMatrix::diagonal(&states[3].1)?;
    let b = DensityMatrix::diagonal(&states[4].1)?;
    println!(
        "aabb ~ abba kinematically: {}",
        kinematically_equivalent(&a, &b, &tol)?
    );
    Ok(())
}
