//! Young symmetrizers for k = 3: the two standard tableaux of shape (2,1),
//! their projectors acting on x1⊗x2⊗x3, and the isotypic decomposition of a
//! random tensor by the central symmetrizers.

use parastat::random::{random_tensor, random_vector, seeded};
use parastat::tensor::tensor_product_all;
use parastat::young::{enumerate_partitions, projector_alpha, young_symmetrizer, CentralSymmetrizer};
use parastat::{Partition, YoungTableau};

fn main() -> parastat::Result<()> {
    let alpha1 = YoungTableau::from_rows(vec![vec![1, 2], vec![3]])?;
    let alpha2 = YoungTableau::from_rows(vec![vec![1, 3], vec![2]])?;
    let shape = Partition::new(vec![2, 1])?;
    println!("mu{shape} = {} (hook product {})", shape.mu(), shape.hook_product());

    let mut rng = seeded(7);
    let xs: Vec<_> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();
    let u = tensor_product_all(&xs)?;
    for alpha in [&alpha1, &alpha2] {
        let c = young_symmetrizer(alpha, &u)?;
        let cc = young_symmetrizer(alpha, &c)?;
        let ratio = cc.max_abs_diff(&(c.clone() * shape.mu() as f64));
        let p = projector_alpha(alpha, &u)?;
        let pp = projector_alpha(alpha, &p)?;
        println!(
            "{alpha}: |c^2 - mu c| = {ratio:.2e}, |pi^2 - pi| = {:.2e}, |pi u| = {:.4}",
            pp.max_abs_diff(&p),
            p.norm()
        );
    }

    let v = random_tensor(&mut rng, 3, 3);
    println!("isotypic decomposition of a random tensor, |v|^2 = {:.6}", v.norm_sqr());
    for shape in enumerate_partitions(3)? {
        let part = CentralSymmetrizer::new(&shape).apply(&v)?;
        println!("  {shape}: |eps v|^2 = {:.6}", part.norm_sqr());
    }
    Ok(())
}
