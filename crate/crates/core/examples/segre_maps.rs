//! Segre maps for distinguishable, bosonic, fermionic and α-statistics, and
//! the operator-level α-Segre map on pure inputs.

use parastat::analysis::{check_simple, SymmetryClass};
use parastat::matrix::{max_abs_diff, outer};
use parastat::random::{random_vector, seeded};
use parastat::states::{
    alpha_embedding, big_segre, seg_alpha, seg_bosonic, seg_distinguishable, seg_fermionic,
    HermitianOperator,
};
use parastat::young::projector_alpha;
use parastat::{Error, RankOptions, YoungTableau};

fn main() -> parastat::Result<()> {
    let opts = RankOptions::default();
    let mut rng = seeded(3);
    let xs: Vec<_> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();

    let d = seg_distinguishable(&xs)?;
    let b = seg_bosonic(&xs[0], 3)?;
    let f = seg_fermionic(&xs)?;
    for (label, state, class) in [
        ("distinguishable", &d, SymmetryClass::Distinguishable),
        ("bosonic", &b, SymmetryClass::Bosonic),
        ("fermionic", &f, SymmetryClass::Fermionic),
    ] {
        let report = check_simple(state.vector(), &class, &opts)?;
        println!("{label:<16} |x| = {:.4}  S-rank {}  simple {}", state.norm(), report.s_rank, report.simple);
    }
    match seg_fermionic(&[xs[0].clone(), xs[0].clone()]) {
        Err(Error::DependentFactors) => println!("fermionic map rejects dependent factors"),
        other => println!("unexpected: {other:?}"),
    }

    let alpha1 = YoungTableau::from_rows(vec![vec![1, 2], vec![3]])?;
    let pair = &xs[..2];
    let a = seg_alpha(&alpha1, pair)?;
    let report = check_simple(a.vector(), &SymmetryClass::Alpha(alpha1.clone()), &opts)?;
    println!("alpha {alpha1}: S-rank {} (rows {}), simple {}", report.s_rank, alpha1.num_rows(), report.simple);

    let units: Vec<_> = pair.iter().map(|x| x.normalized().unwrap()).collect();
    let ops: Vec<_> = units
        .iter()
        .map(|x| HermitianOperator::new(outer(x, x)))
        .collect::<Result<_, _>>()?;
    let lhs = big_segre(&alpha1, &ops)?;
    let v = projector_alpha(&alpha1, &alpha_embedding(&alpha1, &units)?)?;
    println!(
        "big Segre vs |pi i(x)><pi i(x)|: max entry difference {:.2e}",
        max_abs_diff(lhs.matrix(), &outer(&v, &v))
    );
    Ok(())
}
