//! U(n) is covered by the n + 1 domains Ω(−z_k I), z_k the (n + 1)-th roots of unity.

use cayley_lie::covering::{
    cover_index, roots_of_unity, unitary_cover, unitary_with_spectrum, verify_cover,
};
use num_complex::Complex64;

fn main() -> cayley_lie::error::Result<()> {
    for n in 1..=4 {
        let spec = unitary_cover(n)?;
        let r = verify_cover(&spec, 2000, 11)?;
        println!(
            "U({n}): {}/{} covered, per center {:?}",
            r.covered, r.samples, r.per_center_counts
        );
    }

    // Ω(−z_k I) misses Y exactly when z_k is an eigenvalue, so n eigenvalues
    // can knock out at most n of the n + 1 domains.
    let n = 3;
    let spec = unitary_cover(n)?;
    let mut spectrum: Vec<Complex64> = roots_of_unity(n + 1);
    spectrum.pop();
    let y = unitary_with_spectrum(&spectrum, 5)?;
    println!(
        "spectrum {{z_0, z_1, z_2}}: first covering center {:?}",
        cover_index(&spec, y.mat())?
    );
    Ok(())
}
