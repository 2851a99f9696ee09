//! Five-level ladder end to end: closure, invariant form, group, and a
//! reachability verdict for two pure states.

use num_complex::Complex64;
use qreach::group_id::analyze_system;
use qreach::linalg::real_diag;
use qreach::{decide_reachability, ComplexMatrix, Config, ControlSystem, DensityMatrix};

fn main() -> qreach::Result<()> {
    let h0 = real_diag(&[-2.0, -1.0, 0.0, 1.0, 2.0]);
    let h1 = ComplexMatrix::from_fn(5, 5, |r, c| {
        if r.abs_diff(c) == 1 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let system = ControlSystem::new(h0, vec![h1])?;
    let cfg = Config::default();

    let (basis, analysis) = analyze_system(&system, &cfg.tolerances)?;
    println!("dim L = {}, group = {}", basis.len(), analysis.group);
    if let Some(form) = &analysis.form {
        println!("J̃ ({:?}):", form.symmetry);
        for r in 0..5 {
            let row: Vec<String> = (0..5)
                .map(|c| format!("{:>3}", form.j[(r, c)].re.round() + 0.0))
                .collect();
            println!("  {}", row.join(" "));
        }
    }

    // e₁e₁ᵀ and ½(e₁+e₅)(e₁+e₅)ᵀ
    let mut p0 = ComplexMatrix::zeros(5, 5);
    p0[(0, 0)] = Complex64::new(1.0, 0.0);
    let mut p1 = ComplexMatrix::zeros(5, 5);
    for (r, c) in [(0, 0), (0, 4), (4, 0), (4, 4)] {
        p1[(r, c)] = Complex64::new(0.5, 0.0);
    }
    let (rho0, rho1) = (DensityMatrix::new(p0)?, DensityMatrix::new(p1)?);
    let verdict = decide_reachability(&analysis, &rho0, &rho1, &cfg)?;
    println!("ρ₀ → ρ₁: {}", verdict.status);
    for line in &verdict.narrative {
        println!("  - {line}");
    }
    if let Some(cert) = &verdict.certificate {
        println!("certificate: {:?} {:?}", cert.kind, cert.data);
    }
    Ok(())
}
