//! Convex-roof upper bounds for two-qubit mixed states: a pure entangled state,
//! a mixture of two product states, the maximally mixed state, and a mixture
//! with a Bell state.

use parastat::analysis::ghz;
use parastat::matrix::ComplexMatrix;
use parastat::measures::{convex_roof_upper, pure_measure, RoofOptions};
use parastat::random::{random_product, seeded};
use parastat::states::{convex_mix, pure_state_from, DensityOperator};
use parastat::{Complex64, Statistics};

fn main() -> parastat::Result<()> {
    let stats = Statistics::Distinguishable;
    let opts = RoofOptions {
        restarts: 50,
        seed: 1,
        ..RoofOptions::default()
    };
    let bell = ghz(2, 2)?;
    let bell_rho = pure_state_from(&bell)?.density();

    let mut rng = seeded(2);
    let a = pure_state_from(&random_product(&mut rng, 2, 2))?.density();
    let b = pure_state_from(&random_product(&mut rng, 2, 2))?.density();
    let maximally_mixed = DensityOperator::new(ComplexMatrix::identity(4, 4) * Complex64::new(0.25, 0.0))?;

    let cases = [
        ("Bell state", bell_rho.clone()),
        ("two product states", convex_mix(&[0.5, 0.5], &[a.clone(), b])?),
        ("maximally mixed", maximally_mixed),
        ("0.5 Bell + 0.5 product", convex_mix(&[0.5, 0.5], &[bell_rho, a])?),
    ];
    println!("pure measure of the Bell state: {:.6}", pure_measure(&bell, stats)?);
    for (label, rho) in cases {
        let est = convex_roof_upper(&rho, 2, 2, stats, &opts)?;
        println!(
            "{label:<24} upper bound {:.3e}  components {}  sweeps {}  converged {}",
            est.value,
            est.weights.len(),
            est.iterations,
            est.converged
        );
    }
    Ok(())
}
