//! Gradient flow of h_X(α) = Re tr(Xα) near a critical point: the Cayley chart
//! linearizes it, and the closed form agrees with RK4 on the group.

use cayley_lie::algebra::RingTag;
use cayley_lie::matrix::{DenseMatrix, GroupElement};
use cayley_lie::morse::{compare_flows, gradient, height, HeightFunction};

fn main() -> cayley_lie::error::Result<()> {
    let x = DenseMatrix::real_diag(RingTag::C, &[1.0, 2.0, 3.0]);
    let h = HeightFunction::new(x)?;
    let a = GroupElement::identity(RingTag::C, 3);
    println!("‖grad h(I)‖ = {:.1e}", gradient(&h, &a)?.fro_norm());

    let (c, s) = (0.2f64.cos(), 0.2f64.sin());
    let rot = DenseMatrix::from_real_rows(&[&[c, -s, 0.0], &[s, c, 0.0], &[0.0, 0.0, 1.0]])
        .promote(RingTag::C)?;
    let alpha0 = GroupElement::new(rot, 1e-12)?;
    let cmp = compare_flows(&h, &a, &alpha0, 4.0, 1e-3, 500)?;
    for (cf, rk) in cmp.closed_form.samples.iter().zip(&cmp.rk4.samples) {
        println!(
            "t = {:.1}: h = {:.6}, ‖closed form − RK4‖ = {:.1e}",
            cf.t,
            height(&h, &GroupElement::new(cf.alpha.clone(), 1e-9)?)?,
            cf.alpha.distance(&rk.alpha)
        );
    }
    println!(
        "max deviation {:.1e}, final ‖grad‖ {:.1e}",
        cmp.max_deviation, cmp.final_gradient_norm
    );
    Ok(())
}
