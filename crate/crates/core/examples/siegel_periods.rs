// σ-fixed period matrices of the cover, the Prym period τ = B − C, and its
// equivariance under lifted twists.
//
// ```bash
// cargo run --example siegel_periods
// ```

use prymcheck::cover::{build_cover, cover_homology, lifted_twist, standard_surface};
use prymcheck::finite::F2Class;
use prymcheck::siegel::{equivariance_check, prym_extract, random_symmetric_period, CoverFrame, Tolerances};
use prymcheck::symplectic::TwistConvention;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tol = Tolerances::default();
    let surface = standard_surface(3)?;
    let cover = build_cover(&surface, F2Class::new(3, 0b10)?)?;
    let hom = cover_homology(&cover)?;
    let frame = CoverFrame::new(&hom)?;

    let pi = random_symmetric_period(frame.sigma(), 3, 42, tol)?;
    println!("fixed-point residual {:e}", pi.fixed_residual(tol)?);
    let tau = prym_extract(&pi, tol)?;
    println!("tau = B - C:\n{}", tau.matrix());

    for word in ["b1", "a2 a3"] {
        let t = lifted_twist(&cover, &hom, &surface.parse_loop(word)?, TwistConvention::Positive)?;
        let r = equivariance_check(&frame, &t.matrix, &pi, tol)?;
        println!("{word}: variant {:e}, standard {:e}, mixed {:e}", r.variant, r.standard, r.mixed);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
