//! Recovering an invariant bilinear form from generators written in a random
//! basis, and reading off the group type.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qreach::group_id::{analyze_system, random_form_element, standard_symplectic_form};
use qreach::linalg::random_unitary;
use qreach::{ControlSystem, Tolerances};

fn main() -> qreach::Result<()> {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let j = standard_symplectic_form(2);
    let b = random_unitary(&mut rng, 4);
    let mut hs = Vec::new();
    for _ in 0..2 {
        let h = random_form_element(&mut rng, &j) * Complex64::new(0.0, -1.0);
        let h = &b * h * b.adjoint();
        hs.push((&h + h.adjoint()) * Complex64::new(0.5, 0.0));
    }
    let system = ControlSystem::new(hs[0].clone(), vec![hs[1].clone()])?;
    let (basis, analysis) = analyze_system(&system, &tol)?;
    println!("dim L = {}, group = {}", basis.len(), analysis.group);

    let form = analysis.form.expect("symplectic algebras carry a form");
    println!("symmetry: {:?}", form.symmetry);
    let expected = b.conjugate() * &j * b.adjoint();
    let ip: Complex64 = expected
        .iter()
        .zip(form.j.iter())
        .map(|(x, y)| x.conj() * y)
        .sum();
    let phase = ip / ip.norm();
    println!(
        "‖J̃ − e^(iφ) B̄JB†‖ = {:.1e}",
        (&form.j - expected * phase).norm()
    );
    println!("eigenvalues of J̃:");
    for z in form.eigenvalues() {
        println!("  {:+.4} {:+.4}i", z.re, z.im);
    }
    println!(
        "‖J̃J̃* + I‖ = {:.1e}",
        (form.conjugate_square() + qreach::ComplexMatrix::identity(4, 4)).norm()
    );
    Ok(())
}
