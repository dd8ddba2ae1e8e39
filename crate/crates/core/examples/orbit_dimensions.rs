//! Real dimensions of the U(3)-orbits through three simple states at k = 3:
//! an α₁-simple tensor (7), e∨e∨e (5) and e1∧e2∧e3 (1).

use parastat::states::orbit_dimension;
use parastat::tensor::wedge_all;
use parastat::{ComplexTensor, RankOptions};

fn main() -> parastat::Result<()> {
    let opts = RankOptions::default();
    let b = |i: &[usize]| ComplexTensor::basis(3, i).unwrap();
    let e = |i| ComplexTensor::unit(3, i).unwrap();
    let cases = [
        ("e1e1e2 - e2e1e1 (alpha_1)", &b(&[0, 0, 1]) - &b(&[1, 0, 0])),
        ("e1 v e1 v e1", b(&[0, 0, 0])),
        ("e1 ^ e2 ^ e3", wedge_all(&[e(0), e(1), e(2)])?),
    ];
    for (label, v) in cases {
        println!("{label:<28} orbit dimension {}", orbit_dimension(&v, &opts)?);
    }
    Ok(())
}
