//! Left eigenvalues of 2x2 quaternionic matrices, and a point of Sp(2) that
//! escapes four scalar Cayley domains.

use cayley_lie::algebra::Quaternion;
use cayley_lie::lefteig::{
    left_eigen_residual, left_eigenvalues_2x2, noncover_witness, LeftSpectrum,
};
use cayley_lie::matrix::DenseMatrix;

fn main() -> cayley_lie::error::Result<()> {
    let q = |w, x, y, z| Quaternion::new(w, x, y, z);
    let examples = [
        (
            "diagonal",
            DenseMatrix::from_quaternion_rows(&[
                &[Quaternion::I, Quaternion::ZERO],
                &[Quaternion::ZERO, Quaternion::J],
            ]),
        ),
        (
            "rotation",
            DenseMatrix::from_quaternion_rows(&[
                &[Quaternion::ZERO, q(-1.0, 0.0, 0.0, 0.0)],
                &[Quaternion::ONE, Quaternion::ZERO],
            ]),
        ),
        (
            "generic",
            DenseMatrix::from_quaternion_rows(&[
                &[q(1.0, 2.0, 0.0, 1.0), Quaternion::J],
                &[Quaternion::K, q(0.5, 0.0, -1.0, 0.0)],
            ]),
        ),
    ];
    for (name, a) in examples {
        match left_eigenvalues_2x2(&a)? {
            LeftSpectrum::Finite(roots) => {
                println!("{name}: {} left eigenvalues", roots.len());
                for r in roots {
                    println!(
                        "  {:?}  residual {:.1e}",
                        r.to_array(),
                        left_eigen_residual(&a, r)?
                    );
                }
            }
            LeftSpectrum::InfiniteSphere { center, axis } => {
                println!(
                    "{name}: a whole sphere, center {:?}, axis {:?}",
                    center.to_array(),
                    axis.to_array()
                );
            }
        }
    }

    let sigmas = [
        Quaternion::ONE,
        Quaternion::I,
        Quaternion::J,
        q(0.5, 0.5, 0.5, 0.5),
    ];
    let w = noncover_witness(&sigmas)?;
    println!(
        "witness q = {:?}, θ = {:.4}",
        w.q.to_array(),
        w.sin_theta.atan2(w.cos_theta)
    );
    println!("smallest singular values of σ_k I + A: {:?}", w.certificate);
    Ok(())
}
