//! Dynamical Lie algebra dimensions for a few small systems.

use num_complex::Complex64;
use qreach::linalg::{pauli, real_diag, I};
use qreach::{lie_closure, membership, ComplexMatrix, ControlSystem, Tolerances};

fn ladder(n: usize) -> ControlSystem {
    let h0 = real_diag(
        &(0..n)
            .map(|k| k as f64 - (n as f64 - 1.0) / 2.0)
            .collect::<Vec<_>>(),
    );
    let h1 = ComplexMatrix::from_fn(n, n, |r, c| {
        Complex64::new(if r.abs_diff(c) == 1 { 1.0 } else { 0.0 }, 0.0)
    });
    ControlSystem::new(h0, vec![h1]).unwrap()
}

fn main() -> qreach::Result<()> {
    let tol = Tolerances::default();
    let [sx, sy, sz] = pauli();

    let su2 = lie_closure(&[&sx * I, &sy * I], &tol)?;
    println!("{{iσx, iσy}} -> dim {}", su2.len());
    let m = membership(&su2, &(&sz * I), &tol)?;
    println!("iσz in span: {} (residual {:.1e})", m.member, m.residual);

    let only_x = lie_closure(&[&sx * I], &tol)?;
    let m = membership(&only_x, &(&sz * I), &tol)?;
    println!(
        "iσz in span{{iσx}}: {} (residual {:.3})",
        m.member, m.residual
    );

    for n in 3..=6 {
        let basis = lie_closure(&ladder(n).generators(), &tol)?;
        println!(
            "equally spaced ladder, N = {n}: dim L = {} (N² = {})",
            basis.len(),
            n * n
        );
    }
    Ok(())
}
