//! Reachability verdicts for diagonal state pairs under Sp(2), with the
//! witness or certificate behind each one.

use num_complex::Complex64;
use qreach::group_id::{analyze_system, symplectic_algebra};
use qreach::{decide_reachability, ComplexMatrix, Config, ControlSystem, DensityMatrix};

fn main() -> qreach::Result<()> {
    let cfg = Config::default();
    let sp2 = symplectic_algebra(2, &cfg.tolerances)?;
    let hs: Vec<ComplexMatrix> = sp2
        .elements
        .iter()
        .map(|x| {
            let h = x * Complex64::new(0.0, -1.0);
            (&h + h.adjoint()) * Complex64::new(0.5, 0.0)
        })
        .collect();
    let system = ControlSystem::new(hs[0].clone(), hs[1..].to_vec())?;
    let (_, analysis) = analyze_system(&system, &cfg.tolerances)?;
    println!("group: {}", analysis.group);

    let (a, b) = (0.15, 0.35);
    let pairs = [
        ("aabb", [a, a, b, b], "abba", [a, b, b, a]),
        ("aabb", [a, a, b, b], "abab", [a, b, a, b]),
        ("abcd", [0.1, 0.2, 0.3, 0.4], "bacd", [0.2, 0.1, 0.3, 0.4]),
        ("pure", [0.7, 0.1, 0.1, 0.1], "pure'", [0.1, 0.1, 0.7, 0.1]),
    ];
    for (n0, w0, n1, w1) in pairs {
        let (r0, r1) = (DensityMatrix::diagonal(&w0)?, DensityMatrix::diagonal(&w1)?);
        let v = decide_reachability(&analysis, &r0, &r1, &cfg)?;
        println!("\n{n0} → {n1}: {}", v.status);
        if let Some(u) = &v.witness {
            let res = (u * r0.matrix() * u.adjoint() - r1.matrix()).norm();
            println!("  witness residual ‖Uρ₀U† − ρ₁‖ = {res:.1e}");
        }
        if let Some(cert) = &v.certificate {
            println!("  certificate {:?}: {:?}", cert.kind, cert.data);
        }
    }
    Ok(())
}
