//! Transitivity by counting dimensions: dim U(N) − dim S against
//! dim C_ρ − dim(C_ρ ∩ S).

use qreach::group_id::{orthogonal_algebra, symplectic_algebra};
use qreach::{transitive_by_dimension, DensityMatrix, Tolerances};

fn main() -> qreach::Result<()> {
    let tol = Tolerances::default();
    let algebras = [
        ("sp(2)", symplectic_algebra(2, &tol)?),
        ("so(4)", orthogonal_algebra(4, &tol)?),
    ];
    let states = [
        vec![0.25; 4],
        vec![1.0, 0.0, 0.0, 0.0],
        vec![0.3, 0.3, 0.2, 0.2],
        vec![0.4, 0.3, 0.2, 0.1],
    ];
    for (name, basis) in &algebras {
        println!("{name} (dim {}):", basis.len());
        for w in &states {
            let rho = DensityMatrix::diagonal(w)?;
            let r = transitive_by_dimension(&rho, basis, &tol)?;
            println!(
                "  ρ = diag{w:?}: {} − {} vs {} − {} → {}",
                r.dim_un,
                r.dim_s,
                r.dim_centralizer,
                r.dim_intersection,
                if r.transitive {
                    "transitive"
                } else {
                    "not transitive"
                }
            );
        }
    }
    Ok(())
}
