//! Categorical coverings of U(2n)/Sp(n) and U(n)/O(n) by Cayley domains.

use cayley_lie::covering::{
    contraction_check, default_cover, doubled_spectrum_residual, sample_space, transport_residuals,
    verify_cover, Space,
};
use num_complex::Complex64;

fn main() -> cayley_lie::error::Result<()> {
    for space in [
        Space::MPrime(1),
        Space::MPrime(2),
        Space::SymUnitary(2),
        Space::SymUnitary(3),
    ] {
        let spec = default_cover(space)?;
        let r = verify_cover(&spec, 1000, 17)?;
        println!(
            "{space}: {}/{} covered by {} centers",
            r.covered,
            r.samples,
            spec.centers.len()
        );

        let y = sample_space(space, 4)?;
        let z = Complex64::from_polar(1.0, 0.7);
        println!(
            "  contraction stays in the space: residual {:.1e}",
            contraction_check(space, &y, z, 8)?
        );
        let (transport, _) = transport_residuals(&y, z)?;
        println!("  c(Yᵀ) = c(Y)ᵀ: residual {:.1e}", transport);
        if let Space::MPrime(_) = space {
            println!(
                "  doubled spectrum: residual {:.1e}",
                doubled_spectrum_residual(&y)?
            );
        }
    }
    Ok(())
}
