//! Critical sets of h_X and the Morse condition.

use cayley_lie::algebra::RingTag;
use cayley_lie::matrix::DenseMatrix;
use cayley_lie::morse::{classify_critical_set, is_morse, HeightFunction};

fn main() -> cayley_lie::error::Result<()> {
    let cases = [
        ("distinct singular values", RingTag::R, vec![1.0, 2.0, 3.0]),
        ("repeated level", RingTag::C, vec![1.0, 1.0, 2.0]),
        ("kernel of dimension 2", RingTag::H, vec![0.0, 0.0, 5.0]),
        ("X = 0", RingTag::C, vec![0.0, 0.0]),
    ];
    for (name, ring, d) in cases {
        let h = HeightFunction::new(DenseMatrix::real_diag(ring, &d))?;
        let s = classify_critical_set(&h)?;
        println!(
            "{name} over {}: n0 = {}, levels {:?}, predicted dim {}, Morse: {}",
            ring.as_str(),
            s.n0,
            s.levels,
            s.predicted_total_dim,
            is_morse(&h)?
        );
    }
    Ok(())
}
