//! Cayley transform round trips in O(n), U(n) and Sp(n).

use cayley_lie::algebra::RingTag;
use cayley_lie::cayley::{
    cayley, cayley_tangent, contraction_path, sample_domain_point, tangency_residual,
};
use cayley_lie::matrix::{haar_sample, orthogonality_residual};

fn main() -> cayley_lie::error::Result<()> {
    for ring in [RingTag::R, RingTag::C, RingTag::H] {
        let a = haar_sample(ring, 3, 1)?;
        let x = sample_domain_point(&a, 2)?;
        let beta = cayley_tangent(&a, &x)?;
        let back = cayley(&a.adjoint(), &beta.vec)?;
        println!("{}(3)", ring.group_name());
        println!(
            "  tangency of c_A(X) at A*:  {:.2e}",
            tangency_residual(&a.adjoint(), &beta.vec)
        );
        println!(
            "  ‖c_A*(c_A(X)) − X‖:        {:.2e}",
            back.distance(x.mat())
        );
        for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let p = contraction_path(&a, &x, t)?;
            println!(
                "  t = {t:.2}: ‖p − A‖ = {:.3}, ‖p − X‖ = {:.3}, drift {:.1e}",
                p.distance(a.mat()),
                p.distance(x.mat()),
                orthogonality_residual(&p)
            );
        }
    }
    Ok(())
}
