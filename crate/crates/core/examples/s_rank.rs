//! S-rank of standard multipartite states: GHZ and W have S-rank 2 for every
//! k, a sum of r generic product terms has S-rank r, and a decomposable
//! k-vector has S-rank k.

use parastat::analysis::{ghz, s_rank, s_rank_bruteforce, s_rank_per_slot, w_state};
use parastat::random::{random_product, seeded};
use parastat::tensor::wedge_all;
use parastat::{ComplexTensor, RankOptions};

fn main() -> parastat::Result<()> {
    let opts = RankOptions::default();
    for k in 2..=5 {
        println!(
            "k = {k}: S-rank(GHZ) = {}, S-rank(W) = {}",
            s_rank(&ghz(2, k)?, &opts)?,
            s_rank(&w_state(2, k)?, &opts)?
        );
    }

    let mut rng = seeded(1);
    for r in 1..=3 {
        let mut u = ComplexTensor::zeros(3, 3);
        for _ in 0..r {
            u += &random_product(&mut rng, 3, 3);
        }
        println!(
            "{r} product terms: per-slot ranks {:?}, brute force {}",
            s_rank_per_slot(&u, &opts)?,
            s_rank_bruteforce(&u, &opts)?
        );
    }

    let e = |i| ComplexTensor::unit(4, i).unwrap();
    let w = &wedge_all(&[e(0), e(1)])? + &wedge_all(&[e(2), e(3)])?;
    println!("S-rank(e1^e2 + e3^e4) = {}", s_rank(&w, &opts)?);
    Ok(())
}
