//! Sp(2) is covered by the four domains Ω(±I) and Ω(±P), P = diag(−1, 1).

use cayley_lie::covering::{sample_p_orbit, sp2_cover, sp2_orbit_dichotomy, verify_cover};

fn main() -> cayley_lie::error::Result<()> {
    let spec = sp2_cover();
    let r = verify_cover(&spec, 5000, 3)?;
    println!(
        "Sp(2): {}/{} covered, per center {:?}",
        r.covered, r.samples, r.per_center_counts
    );

    let mut invertible = 0;
    let mut antipodal = 0;
    for i in 0..1000 {
        match sp2_orbit_dichotomy(&sample_p_orbit(i)?)? {
            Some(true) => invertible += 1,
            Some(false) => println!("orbit point {i}: P + X singular"),
            None => antipodal += 1,
        }
    }
    println!("orbit of P: {invertible} points with P + X invertible, {antipodal} equal to −P");
    Ok(())
}
