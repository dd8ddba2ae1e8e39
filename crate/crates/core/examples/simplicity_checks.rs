//! Simplicity certificates for every statistics: the S-rank verdict, the
//! relation-system verdict where one exists, and the first violated relation
//! (printed with 1-based indices).

use parastat::analysis::{check_simple, ghz, SymmetryClass};
use parastat::tensor::{tensor_product_all, vee_all, wedge_all};
use parastat::{ComplexTensor, RankOptions, SimplicityReport, YoungTableau};

fn show(label: &str, report: &SimplicityReport) {
    println!(
        "{label:<24} class={:<16} s_rank={} simple={} relations={:?} residual={:.3e}",
        report.class, report.s_rank, report.simple, report.relations_simple, report.residual
    );
    if let Some(w) = &report.witness {
        println!("{:<24} witness {:?}", "", w.one_based());
    }
}

fn main() -> parastat::Result<()> {
    let opts = RankOptions::default();
    let e = |n, i| ComplexTensor::unit(n, i).unwrap();

    let product = tensor_product_all(&[e(2, 0), e(2, 1), e(2, 1)])?;
    show("e1⊗e2⊗e2", &check_simple(&product, &SymmetryClass::Distinguishable, &opts)?);
    show("GHZ_3", &check_simple(&ghz(2, 3)?, &SymmetryClass::Distinguishable, &opts)?);

    let boson = vee_all(&[e(2, 0), e(2, 0), e(2, 1)])?;
    show("e1∨e1∨e2", &check_simple(&boson, &SymmetryClass::Bosonic, &opts)?);

    let fermion = wedge_all(&[e(3, 0), e(3, 1), e(3, 2)])?;
    show("e1∧e2∧e3", &check_simple(&fermion, &SymmetryClass::Fermionic, &opts)?);
    let plucker = &wedge_all(&[e(4, 0), e(4, 1)])? + &wedge_all(&[e(4, 2), e(4, 3)])?;
    show("e1∧e2+e3∧e4", &check_simple(&plucker, &SymmetryClass::Fermionic, &opts)?);

    let alpha1 = YoungTableau::from_rows(vec![vec![1, 2], vec![3]])?;
    let v = &ComplexTensor::basis(3, &[0, 0, 1])? - &ComplexTensor::basis(3, &[1, 0, 0])?;
    show("e1e1e2 − e2e1e1", &check_simple(&v, &SymmetryClass::Alpha(alpha1), &opts)?);
    Ok(())
}
