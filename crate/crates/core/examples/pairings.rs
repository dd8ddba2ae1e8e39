//! Hermitian pairings of symmetric and antisymmetric products: permanents and
//! determinants of the Gram matrix, and contraction against (k−1)-tensors.

use parastat::matrix::{determinant, permanent, ComplexMatrix};
use parastat::random::{random_real_vector, seeded};
use parastat::tensor::{contract, inner, vee_all, wedge_all};

fn main() -> parastat::Result<()> {
    let mut rng = seeded(5);
    let k = 3;
    let f: Vec<_> = (0..k).map(|_| random_real_vector(&mut rng, 4)).collect();
    let g: Vec<_> = (0..k).map(|_| random_real_vector(&mut rng, 4)).collect();
    let gram = ComplexMatrix::from_fn(k, k, |i, j| inner(&f[i], &g[j]).unwrap());

    let sym = inner(&vee_all(&f)?, &vee_all(&g)?)?;
    let anti = inner(&wedge_all(&f)?, &wedge_all(&g)?)?;
    println!("<f1 v f2 v f3 | g1 v g2 v g3> = {:.10}", sym.re);
    println!("per(G) / 3!                  = {:.10}", permanent(&gram)?.re / 6.0);
    println!("<f1 ^ f2 ^ f3 | g1 ^ g2 ^ g3> = {:.10}", anti.re);
    println!("det(G) / 3!                  = {:.10}", determinant(&gram)?.re / 6.0);

    // Full contraction of real inputs reproduces the pairing.
    let full = contract(&vee_all(&g)?, &vee_all(&f)?)?;
    println!("contraction                  = {:.10}", full.coeffs()[0].re);
    Ok(())
}
