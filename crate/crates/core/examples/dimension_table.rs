//! Schur–Weyl dimension table: for every partition λ of k, the number of
//! standard tableaux f^λ, the GL_n irrep dimension and the Young normalization
//! μ(λ). The products f^λ · dim V_λ add up to n^k.
//!
//! Run with `cargo run --example dimension_table -- 3 3`.

use parastat::verify::dims_table;

fn main() -> parastat::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(3);
    let k = args.next().unwrap_or(3);

    let table = dims_table(n, k)?;
    println!("n = {n}, k = {k}");
    println!("{:<14} {:>6} {:>10} {:>8}", "partition", "f", "dim V", "mu");
    for row in &table.rows {
        println!("{:<14} {:>6} {:>10} {:>8}", row.partition.to_string(), row.f, row.gl_dim, row.mu);
    }
    println!("sum f * dim = {} (n^k = {})", table.sum, table.total);
    Ok(())
}
