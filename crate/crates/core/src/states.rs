//! Pure and mixed states, Segre maps for every statistics, the operator-level
//! α-Segre map, and dimensions of unitary orbits.
//!
//! Operators live on the ambient space `H^{⊗k}` (size `n^k`) even for bosonic,
//! fermionic and α-states; a state of a symmetry class is an operator whose
//! support lies in the corresponding subspace.

use nalgebra::{DMatrix, DVector};

use crate::analysis::RankOptions;
use crate::error::{Error, Result};
use crate::matrix::{
    column, hermiticity_defect, kron, numerical_rank, outer, real_numerical_rank, ComplexMatrix,
    MAX_ASSEMBLY_DIM,
};
use crate::tensor::{tensor_product_all, wedge_all, Complex64, ComplexTensor};
use crate::young::{projector_alpha, projector_matrix, YoungTableau};

/// Absolute tolerance for Hermiticity, positivity and trace checks.
pub const OPERATOR_TOLERANCE: f64 = 1e-10;

/// `‖x_1∧…∧x_r‖ ≤ DEPENDENCE_TOLERANCE · Π‖x_i‖` marks the factors as dependent.
pub const DEPENDENCE_TOLERANCE: f64 = 1e-10;

/// Tolerance on `Σ t_i = 1` for convex weights.
pub const WEIGHT_TOLERANCE: f64 = 1e-12;

/// The pure state `ρ_x = |x⟩⟨x| / ‖x‖²` of a nonzero tensor.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    vector: ComplexTensor,
}

impl PureState {
    pub fn new(vector: ComplexTensor) -> Result<Self> {
        if vector.is_zero() {
            return Err(Error::ZeroTensor);
        }
        Ok(Self { vector })
    }

    /// The representative tensor, unnormalized.
    pub fn vector(&self) -> &ComplexTensor {
        &self.vector
    }

    pub fn normalized_vector(&self) -> ComplexTensor {
        self.vector.normalized().expect("nonzero by construction")
    }

    pub fn norm(&self) -> f64 {
        self.vector.norm()
    }

    pub fn projector(&self) -> ComplexMatrix {
        outer(&self.vector, &self.vector) / Complex64::new(self.vector.norm_sqr(), 0.0)
    }

    pub fn density(&self) -> DensityOperator {
        DensityOperator {
            matrix: self.projector(),
        }
    }
}

pub fn pure_state_from(x: &ComplexTensor) -> Result<PureState> {
    PureState::new(x.clone())
}

fn check_square(m: &ComplexMatrix) -> Result<()> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(())
}

/// A self-adjoint operator, not necessarily positive or normalized.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianOperator {
    matrix: ComplexMatrix,
}

impl HermitianOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        check_square(&matrix)?;
        let defect = hermiticity_defect(&matrix);
        if defect > OPERATOR_TOLERANCE {
            return Err(Error::InvalidOperator(format!(
                "not Hermitian (max |A − A†| = {defect:e})"
            )));
        }
        Ok(Self { matrix })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

impl From<DensityOperator> for HermitianOperator {
    fn from(rho: DensityOperator) -> Self {
        Self { matrix: rho.matrix }
    }
}

/// `⟨A, B⟩ = ½ Tr(AB)`.
pub fn hs_inner(a: &HermitianOperator, b: &HermitianOperator) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    // Tr(AB) = Σ_ij A_ij B_ji
    let mut tr = Complex64::new(0.0, 0.0);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            tr += a.matrix[(i, j)] * b.matrix[(j, i)];
        }
    }
    Ok(0.5 * tr.re)
}

/// A density operator: Hermitian, positive semidefinite, unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
}

impl DensityOperator {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let h = HermitianOperator::new(matrix)?;
        let tr = h.matrix.trace();
        if (tr.re - 1.0).abs() > OPERATOR_TOLERANCE || tr.im.abs() > OPERATOR_TOLERANCE {
            return Err(Error::InvalidOperator(format!("trace {tr} is not 1")));
        }
        let rho = Self { matrix: h.matrix };
        let min = rho.eigenvalues().iter().copied().fold(f64::INFINITY, f64::min);
        if min < -OPERATOR_TOLERANCE {
            return Err(Error::InvalidOperator(format!(
                "not positive semidefinite (eigenvalue {min:e})"
            )));
        }
        Ok(rho)
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigen().0
    }

    /// Eigenpairs sorted by descending eigenvalue; eigenvectors are the columns.
    pub fn eigen(&self) -> (Vec<f64>, ComplexMatrix) {
        let hermitian = (&self.matrix + self.matrix.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = hermitian.symmetric_eigen();
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
        let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
        let vectors = ComplexMatrix::from_fn(self.dim(), self.dim(), |r, c| {
            eig.eigenvectors[(r, order[c])]
        });
        (values, vectors)
    }

    pub fn rank(&self, opts: &RankOptions) -> usize {
        numerical_rank(&self.matrix, opts.tolerance)
    }

    pub fn purity(&self) -> f64 {
        (&self.matrix * &self.matrix).trace().re
    }
}

/// `A ⊗ B` of two density operators.
pub fn tensor_op_product(a: &DensityOperator, b: &DensityOperator) -> Result<DensityOperator> {
    DensityOperator::new(kron(&a.matrix, &b.matrix))
}

/// `Σ t_i ρ_i` for convex weights.
pub fn convex_mix(weights: &[f64], states: &[DensityOperator]) -> Result<DensityOperator> {
    if weights.len() != states.len() || weights.is_empty() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} states",
            weights.len(),
            states.len()
        )));
    }
    if weights.iter().any(|&t| !t.is_finite() || t < 0.0) {
        return Err(Error::InvalidWeights("weights must be nonnegative".into()));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > WEIGHT_TOLERANCE {
        return Err(Error::InvalidWeights(format!("weights sum to {total}, not 1")));
    }
    let dim = states[0].dim();
    let mut acc = ComplexMatrix::zeros(dim, dim);
    for (t, rho) in weights.iter().zip(states) {
        if rho.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: rho.dim(),
            });
        }
        acc += &rho.matrix * Complex64::new(*t, 0.0);
    }
    DensityOperator::new(acc)
}

fn check_factors(factors: &[ComplexTensor]) -> Result<usize> {
    let first = factors
        .first()
        .ok_or_else(|| Error::InvalidOption("at least one factor is required".into()))?;
    for f in factors {
        if f.order() != 1 {
            return Err(Error::OrderMismatch {
                expected: 1,
                found: f.order(),
            });
        }
        if f.dim() != first.dim() {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                found: f.dim(),
            });
        }
        if f.is_zero() {
            return Err(Error::ZeroTensor);
        }
    }
    Ok(first.dim())
}

fn check_independent(factors: &[ComplexTensor]) -> Result<()> {
    let w = wedge_all(factors)?;
    let scale: f64 = factors.iter().map(ComplexTensor::norm).product();
    if w.norm() <= DEPENDENCE_TOLERANCE * scale {
        return Err(Error::DependentFactors);
    }
    Ok(())
}

/// `(x_1, …, x_k) ↦ ρ_{x_1⊗…⊗x_k}`.
pub fn seg_distinguishable(factors: &[ComplexTensor]) -> Result<PureState> {
    check_factors(factors)?;
    PureState::new(tensor_product_all(factors)?)
}

/// `x ↦ ρ_{x∨…∨x}` with `k` factors.
pub fn seg_bosonic(x: &ComplexTensor, k: usize) -> Result<PureState> {
    check_factors(std::slice::from_ref(x))?;
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "order",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    PureState::new(tensor_product_all(&vec![x.clone(); k])?)
}

/// `(x_1, …, x_k) ↦ ρ_{x_1∧…∧x_k}`; dependent factors are rejected.
pub fn seg_fermionic(factors: &[ComplexTensor]) -> Result<PureState> {
    check_factors(factors)?;
    check_independent(factors)?;
    PureState::new(wedge_all(factors)?)
}

/// `i_α(x_1, …, x_r) = x_{α(1)} ⊗ … ⊗ x_{α(k)}`, putting `x_j` in every slot
/// numbered in row `j` of `α`.
pub fn alpha_embedding(alpha: &YoungTableau, factors: &[ComplexTensor]) -> Result<ComplexTensor> {
    if factors.len() != alpha.num_rows() {
        return Err(Error::InvalidOption(format!(
            "tableau {alpha} has {} rows but {} factors were given",
            alpha.num_rows(),
            factors.len()
        )));
    }
    check_factors(factors)?;
    let placed: Vec<ComplexTensor> = alpha.row_map().iter().map(|&r| factors[r].clone()).collect();
    tensor_product_all(&placed)
}

/// `(x_1, …, x_r) ↦ ρ_{π^α(i_α(x_1, …, x_r))}`; requires `x_1∧…∧x_r ≠ 0`.
pub fn seg_alpha(alpha: &YoungTableau, factors: &[ComplexTensor]) -> Result<PureState> {
    let embedded = alpha_embedding(alpha, factors)?;
    check_independent(factors)?;
    let v = projector_alpha(alpha, &embedded)?;
    if v.norm() <= DEPENDENCE_TOLERANCE * embedded.norm() {
        return Err(Error::Internal(format!(
            "π^α(i_α(x)) vanished for independent factors (tableau {alpha})"
        )));
    }
    PureState::new(v)
}

/// `(u_1, …, u_r) ↦ π^α ∘ (u_{α(1)} ⊗ … ⊗ u_{α(k)}) ∘ π_α` on `H^{⊗k}`, where
/// `π_α = (π^α)†`.
///
/// `π^α` is idempotent but not self-adjoint for tableaux that are neither a
/// single row nor a single column, so the right factor must be the adjoint for
/// the result to be Hermitian; with it, pure inputs give exactly
/// `|π^α(x_{α(1)}⊗…⊗x_{α(k)})⟩⟨π^α(x_{α(1)}⊗…⊗x_{α(k)})|`.
pub fn big_segre(alpha: &YoungTableau, ops: &[HermitianOperator]) -> Result<HermitianOperator> {
    if ops.len() != alpha.num_rows() {
        return Err(Error::InvalidOption(format!(
            "tableau {alpha} has {} rows but {} operators were given",
            alpha.num_rows(),
            ops.len()
        )));
    }
    let n = ops[0].dim();
    if let Some(bad) = ops.iter().find(|o| o.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.dim(),
        });
    }
    let size = n.pow(alpha.size() as u32);
    if size > MAX_ASSEMBLY_DIM {
        return Err(Error::OutOfRange {
            what: "assembled operator size",
            value: size,
            allowed: format!("<= {MAX_ASSEMBLY_DIM}"),
        });
    }
    let row_map = alpha.row_map();
    let mut product = ops[row_map[0]].matrix.clone();
    for &r in &row_map[1..] {
        product = kron(&product, &ops[r].matrix);
    }
    let p = projector_matrix(alpha, n)?;
    HermitianOperator::new(&p * product * p.adjoint())
}

/// Generators of `u(n)` as row-major `n×n` arrays: `i E_aa`, `E_ab − E_ba`,
/// `i(E_ab + E_ba)` for `a < b`.
fn unitary_generators(n: usize) -> Vec<Vec<Complex64>> {
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        let mut g = vec![zero; n * n];
        g[a * n + a] = Complex64::new(0.0, 1.0);
        out.push(g);
    }
    for a in 0..n {
        for b in a + 1..n {
            let mut g = vec![zero; n * n];
            g[a * n + b] = Complex64::new(1.0, 0.0);
            g[b * n + a] = Complex64::new(-1.0, 0.0);
            out.push(g);
            let mut g = vec![zero; n * n];
            g[a * n + b] = Complex64::new(0.0, 1.0);
            g[b * n + a] = Complex64::new(0.0, 1.0);
            out.push(g);
        }
    }
    out
}

/// Real dimension of the orbit `{U^{⊗k} v : U ∈ U(n)}`: the real rank of the
/// differential `X ↦ (X⊗I⊗… + … + …⊗I⊗X) v` on `u(n)`.
pub fn orbit_dimension(v: &ComplexTensor, opts: &RankOptions) -> Result<usize> {
    let v = v.normalized()?;
    let gens = unitary_generators(v.dim());
    let len = v.len();
    let mut tangent = DMatrix::<f64>::zeros(2 * len, gens.len());
    for (col, g) in gens.iter().enumerate() {
        let t = v.apply_one_body(g)?;
        for (i, c) in t.coeffs().iter().enumerate() {
            tangent[(i, col)] = c.re;
            tangent[(len + i, col)] = c.im;
        }
    }
    Ok(real_numerical_rank(&tangent, opts.tolerance))
}

/// Column vector of a tensor, for operator algebra.
pub fn ket(x: &ComplexTensor) -> DVector<Complex64> {
    column(x).column(0).into_owned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{check_simple_alpha, check_simple_bosonic, check_simple_fermionic, check_simple_general};
    use crate::matrix::max_abs_diff;
    use crate::random::{random_density, random_vector, seeded};
    use crate::young::Partition;

    fn e(n: usize, i: usize) -> ComplexTensor {
        ComplexTensor::unit(n, i).unwrap()
    }

    fn alpha1() -> YoungTableau {
        YoungTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap()
    }

    #[test]
    fn pure_state_normalizes_and_ignores_phase() {
        let x = e(2, 0) * 2.0;
        let rho = pure_state_from(&x).unwrap().projector();
        assert_eq!(rho, outer(&e(2, 0), &e(2, 0)));

        let mut rng = seeded(1);
        let y = random_vector(&mut rng, 3);
        let a = pure_state_from(&y).unwrap().projector();
        let b = pure_state_from(&y.scale(Complex64::new(0.0, 1.0))).unwrap().projector();
        assert!(max_abs_diff(&a, &b) < 1e-15);
        assert!(((&a * &a).trace().re - 1.0).abs() < 1e-14);
        assert_eq!(pure_state_from(&ComplexTensor::zeros(2, 1)), Err(Error::ZeroTensor));
    }

    #[test]
    fn hs_inner_examples() {
        let id = HermitianOperator::new(ComplexMatrix::identity(2, 2)).unwrap();
        assert!((hs_inner(&id, &id).unwrap() - 1.0).abs() < 1e-15);
        let z = ComplexMatrix::from_row_slice(
            2,
            2,
            &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(-1.0, 0.0)],
        );
        let x = ComplexMatrix::from_row_slice(
            2,
            2,
            &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        );
        let (z, x) = (HermitianOperator::new(z).unwrap(), HermitianOperator::new(x).unwrap());
        assert_eq!(hs_inner(&z, &x).unwrap(), 0.0);
        let big = HermitianOperator::new(ComplexMatrix::identity(3, 3)).unwrap();
        assert!(hs_inner(&id, &big).is_err());
    }

    #[test]
    fn hs_inner_matches_trace_of_product() {
        let mut rng = seeded(4);
        let a = HermitianOperator::new(random_density(&mut rng, 4, 3)).unwrap();
        let b = HermitianOperator::new(random_density(&mut rng, 4, 2)).unwrap();
        let direct = 0.5 * (a.matrix() * b.matrix()).trace().re;
        assert!((hs_inner(&a, &b).unwrap() - direct).abs() < 1e-15);
        assert!(hs_inner(&a, &a).unwrap() >= 0.0);
    }

    #[test]
    fn operator_validation() {
        let not_h = ComplexMatrix::from_row_slice(
            2,
            2,
            &[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
        );
        assert!(HermitianOperator::new(not_h).is_err());
        assert!(DensityOperator::new(ComplexMatrix::identity(2, 2)).is_err());
        let neg = ComplexMatrix::from_diagonal(&DVector::from_vec(vec![Complex64::new(1.5, 0.0), Complex64::new(-0.5, 0.0)]));
        assert!(DensityOperator::new(neg).is_err());
    }

    #[test]
    fn distinguishable_segre_is_product_and_simple() {
        let s = seg_distinguishable(&[e(2, 0), e(2, 1)]).unwrap();
        assert_eq!(s.projector(), outer(&ComplexTensor::basis(2, &[0, 1]).unwrap(), &ComplexTensor::basis(2, &[0, 1]).unwrap()));
        let mut rng = seeded(2);
        let xs: Vec<_> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();
        let s = seg_distinguishable(&xs).unwrap();
        let rep = check_simple_general(s.vector(), &RankOptions::default()).unwrap();
        assert!(rep.simple && rep.s_rank == 1);
        let mut scaled = xs.clone();
        scaled[1] = scaled[1].scale(Complex64::new(-3.0, 2.0));
        let s2 = seg_distinguishable(&scaled).unwrap();
        assert!(max_abs_diff(&s.projector(), &s2.projector()) < 1e-12);
        assert_eq!(seg_distinguishable(&[e(2, 0), ComplexTensor::zeros(2, 1)]), Err(Error::ZeroTensor));
    }

    #[test]
    fn bosonic_segre() {
        let s = seg_bosonic(&e(3, 0), 3).unwrap();
        assert_eq!(s.vector(), &ComplexTensor::basis(3, &[0, 0, 0]).unwrap());
        let mut rng = seeded(3);
        let x = random_vector(&mut rng, 3);
        let s = seg_bosonic(&x, 3).unwrap();
        assert!(check_simple_bosonic(s.vector(), &RankOptions::default()).unwrap().simple);
    }

    #[test]
    fn fermionic_segre() {
        let s = seg_fermionic(&[e(2, 0), e(2, 1)]).unwrap();
        let psi = (ComplexTensor::basis(2, &[0, 1]).unwrap() - ComplexTensor::basis(2, &[1, 0]).unwrap())
            * std::f64::consts::FRAC_1_SQRT_2;
        assert!(max_abs_diff(&s.projector(), &outer(&psi, &psi)) < 1e-15);
        assert_eq!(seg_fermionic(&[e(2, 0), e(2, 0)]), Err(Error::DependentFactors));
        let t = seg_fermionic(&[e(2, 0), &e(2, 0) + &e(2, 1)]).unwrap();
        assert!(max_abs_diff(&s.projector(), &t.projector()) < 1e-15);
        let w = seg_fermionic(&[e(4, 0), e(4, 1), e(4, 3)]).unwrap();
        assert!(check_simple_fermionic(w.vector(), &RankOptions::default()).unwrap().simple);
    }

    #[test]
    fn alpha_segre_examples() {
        assert_eq!(
            alpha_embedding(&alpha1(), &[e(3, 0), e(3, 1)]).unwrap(),
            ComplexTensor::basis(3, &[0, 0, 1]).unwrap()
        );
        let alpha2 = YoungTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(
            alpha_embedding(&alpha2, &[e(3, 0), e(3, 1)]).unwrap(),
            ComplexTensor::basis(3, &[0, 1, 0]).unwrap()
        );
        let s = seg_alpha(&alpha1(), &[e(3, 0), e(3, 1)]).unwrap();
        let v = ComplexTensor::basis(3, &[0, 0, 1]).unwrap() - ComplexTensor::basis(3, &[1, 0, 0]).unwrap();
        assert!(max_abs_diff(&s.projector(), &pure_state_from(&v).unwrap().projector()) < 1e-15);
        let rep = check_simple_alpha(s.vector(), &alpha1(), &RankOptions::default()).unwrap();
        assert!(rep.simple && rep.s_rank == 2);
        assert_eq!(seg_alpha(&alpha1(), &[e(3, 0), e(3, 0) * 2.0]), Err(Error::DependentFactors));
        assert!(seg_alpha(&alpha1(), &[e(3, 0)]).is_err());
    }

    #[test]
    fn alpha_segre_reduces_to_bose_and_fermi() {
        let mut rng = seeded(5);
        let x = random_vector(&mut rng, 3);
        let row = YoungTableau::canonical(&Partition::new(vec![3]).unwrap());
        let a = seg_alpha(&row, std::slice::from_ref(&x)).unwrap();
        let b = seg_bosonic(&x, 3).unwrap();
        assert!(max_abs_diff(&a.projector(), &b.projector()) < 1e-14);

        let xs: Vec<_> = (0..3).map(|_| random_vector(&mut rng, 3)).collect();
        let col = YoungTableau::canonical(&Partition::new(vec![1, 1, 1]).unwrap());
        let a = seg_alpha(&col, &xs).unwrap();
        let b = seg_fermionic(&xs).unwrap();
        assert!(max_abs_diff(&a.projector(), &b.projector()) < 1e-12);
    }

    #[test]
    fn big_segre_single_row() {
        let row = YoungTableau::canonical(&Partition::new(vec![2]).unwrap());
        let u = HermitianOperator::new(outer(&e(2, 0), &e(2, 0))).unwrap();
        let out = big_segre(&row, &[u]).unwrap();
        let e11 = ComplexTensor::basis(2, &[0, 0]).unwrap();
        assert!(max_abs_diff(out.matrix(), &outer(&e11, &e11)) < 1e-15);
    }

    #[test]
    fn big_segre_matches_pure_segre() {
        let mut rng = seeded(8);
        let xs: Vec<_> = (0..2).map(|_| random_vector(&mut rng, 3).normalized().unwrap()).collect();
        let ops: Vec<_> = xs
            .iter()
            .map(|x| HermitianOperator::new(pure_state_from(x).unwrap().projector()).unwrap())
            .collect();
        let lhs = big_segre(&alpha1(), &ops).unwrap();
        let v = projector_alpha(&alpha1(), &alpha_embedding(&alpha1(), &xs).unwrap()).unwrap();
        assert!(max_abs_diff(lhs.matrix(), &outer(&v, &v)) < 1e-12);
    }

    #[test]
    fn big_segre_preserves_hermiticity() {
        let mut rng = seeded(6);
        let ops: Vec<_> = (0..2)
            .map(|_| {
                let g = random_density(&mut rng, 3, 2);
                // shift to an indefinite Hermitian matrix
                HermitianOperator::new(g - ComplexMatrix::identity(3, 3) * Complex64::new(0.2, 0.0)).unwrap()
            })
            .collect();
        let out = big_segre(&alpha1(), &ops).unwrap();
        assert!(hermiticity_defect(out.matrix()) < 1e-14);
    }

    #[test]
    fn prop1_rank_multiplicativity_example() {
        let mut rng = seeded(7);
        let a = DensityOperator::new(random_density(&mut rng, 4, 2)).unwrap();
        let b = DensityOperator::new(random_density(&mut rng, 3, 3)).unwrap();
        let opts = RankOptions::default();
        let ab = tensor_op_product(&a, &b).unwrap();
        assert_eq!((a.rank(&opts), b.rank(&opts), ab.rank(&opts)), (2, 3, 6));
        assert!((ab.matrix().trace().re - 1.0).abs() < 1e-12);
        let pa = seg_distinguishable(&[e(2, 0)]).unwrap().density();
        let pb = seg_distinguishable(&[e(2, 1)]).unwrap().density();
        assert_eq!(tensor_op_product(&pa, &pb).unwrap().rank(&opts), 1);
    }

    #[test]
    fn convex_mix_examples() {
        let opts = RankOptions::default();
        let rho = seg_distinguishable(&[e(2, 0)]).unwrap().density();
        let same = convex_mix(&[0.5, 0.5], &[rho.clone(), rho.clone()]).unwrap();
        assert!(max_abs_diff(same.matrix(), rho.matrix()) < 1e-15);
        let other = seg_distinguishable(&[e(2, 1)]).unwrap().density();
        assert_eq!(convex_mix(&[0.5, 0.5], &[rho.clone(), other]).unwrap().rank(&opts), 2);

        let plus = pure_state_from(&(&e(2, 0) + &e(2, 1))).unwrap().density();
        let mix = convex_mix(&[0.5, 0.5], &[rho.clone(), plus]).unwrap();
        let vals = mix.eigenvalues();
        let s = 2f64.sqrt();
        assert!((vals[0] - (2.0 + s) / 4.0).abs() < 1e-14);
        assert!((vals[1] - (2.0 - s) / 4.0).abs() < 1e-14);

        assert!(convex_mix(&[0.7, 0.7], &[rho.clone(), rho.clone()]).is_err());
        assert!(convex_mix(&[1.5, -0.5], &[rho.clone(), rho.clone()]).is_err());
        assert!(convex_mix(&[1.0], &[rho.clone(), rho]).is_err());
    }

    #[test]
    fn orbit_dimensions_at_n3() {
        let opts = RankOptions::default();
        let v = ComplexTensor::basis(3, &[0, 0, 1]).unwrap() - ComplexTensor::basis(3, &[1, 0, 0]).unwrap();
        assert_eq!(orbit_dimension(&v, &opts).unwrap(), 7);
        assert_eq!(orbit_dimension(&ComplexTensor::basis(3, &[0, 0, 0]).unwrap(), &opts).unwrap(), 5);
        let w = wedge_all(&[e(3, 0), e(3, 1), e(3, 2)]).unwrap();
        assert_eq!(orbit_dimension(&w, &opts).unwrap(), 1);
        assert_eq!(orbit_dimension(&ComplexTensor::zeros(3, 3), &opts), Err(Error::ZeroTensor));
    }
}
