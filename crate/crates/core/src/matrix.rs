//! Small dense-matrix helpers: permanents, determinants, Kronecker products,
//! numerical rank and assembly of linear tensor maps as explicit matrices.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::tensor::{Complex64, ComplexTensor};

pub type ComplexMatrix = DMatrix<Complex64>;

/// Largest square size accepted by [`permanent`].
pub const MAX_PERMANENT_SIZE: usize = 8;

/// Largest ambient dimension `n^k` for which operators are assembled as matrices.
pub const MAX_ASSEMBLY_DIM: usize = 1296;

fn check_square(m: &ComplexMatrix) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(m.nrows())
}

/// Permanent, by the full permutation sum up to size 6 and Ryser's formula for 7 and 8.
pub fn permanent(m: &ComplexMatrix) -> Result<Complex64> {
    let size = check_square(m)?;
    if size > MAX_PERMANENT_SIZE {
        return Err(Error::OutOfRange {
            what: "permanent size",
            value: size,
            allowed: format!("<= {MAX_PERMANENT_SIZE}"),
        });
    }
    if size <= 6 {
        Ok(permanent_by_permutations(m))
    } else {
        Ok(permanent_ryser(m))
    }
}

fn permanent_by_permutations(m: &ComplexMatrix) -> Complex64 {
    let size = m.nrows();
    Permutation::all(size)
        .iter()
        .map(|p| (0..size).map(|i| m[(i, p.apply(i))]).product::<Complex64>())
        .sum()
}

/// Ryser's inclusion–exclusion formula, `O(2^n · n^2)`.
pub fn permanent_ryser(m: &ComplexMatrix) -> Complex64 {
    let size = m.nrows();
    if size == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut total = Complex64::new(0.0, 0.0);
    for subset in 1u32..(1 << size) {
        let mut prod = Complex64::new(1.0, 0.0);
        for i in 0..size {
            let row_sum: Complex64 = (0..size)
                .filter(|j| subset & (1 << j) != 0)
                .map(|j| m[(i, j)])
                .sum();
            prod *= row_sum;
        }
        let parity = if (size as u32 - subset.count_ones()).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        total += prod * parity;
    }
    total
}

pub fn determinant(m: &ComplexMatrix) -> Result<Complex64> {
    check_square(m)?;
    Ok(m.clone().determinant())
}

/// `A ⊗ B` with the first factor most significant, matching the tensor layout.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

/// Number of singular values above `tolerance · σ_max`; zero for the zero matrix.
pub fn numerical_rank(m: &ComplexMatrix, tolerance: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.clone().singular_values();
    count_above(sv.iter().copied(), tolerance)
}

pub fn real_numerical_rank(m: &DMatrix<f64>, tolerance: f64) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.clone().singular_values();
    count_above(sv.iter().copied(), tolerance)
}

fn count_above(values: impl Iterator<Item = f64> + Clone, tolerance: f64) -> usize {
    let max = values.clone().fold(0.0, f64::max);
    if max <= 0.0 {
        return 0;
    }
    values.filter(|&s| s > tolerance * max).count()
}

pub fn max_abs_entry(m: &ComplexMatrix) -> f64 {
    m.iter().map(|c| c.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "matrix shape mismatch");
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Largest entry of `A − A†`.
pub fn hermiticity_defect(m: &ComplexMatrix) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

/// Column-vector view of a tensor's coefficients.
pub fn column(u: &ComplexTensor) -> DMatrix<Complex64> {
    DMatrix::from_column_slice(u.len(), 1, u.coeffs())
}

/// `|x⟩⟨y|`.
pub fn outer(x: &ComplexTensor, y: &ComplexTensor) -> ComplexMatrix {
    column(x) * column(y).adjoint()
}

/// Assembles the `n^k × n^k` matrix of a linear map on order-`k` tensors by
/// applying it to every basis tensor.
pub fn operator_matrix<F>(dim: usize, order: usize, map: F) -> Result<ComplexMatrix>
where
    F: Fn(&ComplexTensor) -> Result<ComplexTensor>,
{
    let size = dim.pow(order as u32);
    if size > MAX_ASSEMBLY_DIM {
        return Err(Error::OutOfRange {
            what: "assembled operator size",
            value: size,
            allowed: format!("<= {MAX_ASSEMBLY_DIM}"),
        });
    }
    let mut out = ComplexMatrix::zeros(size, size);
    let shape = ComplexTensor::zeros(dim, order);
    for col in 0..size {
        let basis = ComplexTensor::basis(dim, &shape.multi_index(col))?;
        let image = map(&basis)?;
        for (row, v) in image.coeffs().iter().enumerate() {
            out[(row, col)] = *v;
        }
    }
    Ok(out)
}
