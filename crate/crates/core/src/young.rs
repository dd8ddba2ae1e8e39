//! Partitions, Young tableaux and Young symmetrizers.
//!
//! For a tableau `α` with row group `P` and column group `Q`:
//! `b_α = Σ_{σ∈P} σ`, `a_α = Σ_{τ∈Q} (−1)^τ τ`, and the Young symmetrizer is
//! `c_α = a_α ∘ b_α`. It satisfies `c_α² = μ(λ)·c_α` where `μ(λ)` is the hook
//! product of the shape, so `π^α = c_α / μ(λ)` is the orthogonal projector
//! onto the irreducible component `H^α ⊂ H^{⊗k}`.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{operator_matrix, ComplexMatrix};
use crate::permutation::Permutation;
use crate::tensor::{permute_unchecked, Complex64, ComplexTensor};

/// Largest `k` accepted by [`enumerate_partitions`].
pub const MAX_PARTITION_SIZE: usize = 8;

/// A weakly decreasing sequence of positive row lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Lengths of the columns (the conjugate partition).
    pub fn column_lengths(&self) -> Vec<usize> {
        (0..self.parts[0])
            .map(|c| self.parts.iter().filter(|&&len| len > c).count())
            .collect()
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let cols = self.column_lengths();
        (self.parts[row] - col - 1) + (cols[col] - row - 1) + 1
    }

    fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn hook_product(&self) -> u64 {
        let cols = self.column_lengths();
        self.boxes()
            .map(|(r, c)| ((self.parts[r] - c - 1) + (cols[c] - r - 1) + 1) as u64)
            .product()
    }

    /// The idempotency constant `μ(λ) = k!/f^λ`, equal to the hook product.
    pub fn mu(&self) -> u64 {
        self.hook_product()
    }

    /// `f^λ`, the number of standard tableaux, by the hook-length formula.
    pub fn standard_tableaux_count(&self) -> u64 {
        factorial(self.size()) / self.hook_product()
    }

    /// Dimension of the `GL(n)` irrep of this shape (hook-content formula);
    /// zero when the shape has more than `n` rows.
    pub fn gl_dim(&self, n: usize) -> u128 {
        if self.num_rows() > n {
            return 0;
        }
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        let cols = self.column_lengths();
        for (r, c) in self.boxes() {
            num = num
                .checked_mul((n + c - r) as u128)
                .expect("gl dimension overflows u128");
            den *= ((self.parts[r] - c - 1) + (cols[c] - r - 1) + 1) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num / den
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// All partitions of `k` in reverse-lexicographic order, e.g. `(3), (2,1), (1,1,1)`.
pub fn enumerate_partitions(k: usize) -> Result<Vec<Partition>> {
    if !(1..=MAX_PARTITION_SIZE).contains(&k) {
        return Err(Error::OutOfRange {
            what: "partition size",
            value: k,
            allowed: format!("1..={MAX_PARTITION_SIZE}"),
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(k, k, &mut current, &mut out);
    Ok(out)
}

fn fill_partitions(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

pub fn count_standard_tableaux(shape: &Partition) -> u64 {
    shape.standard_tableaux_count()
}

pub fn gl_dim(shape: &Partition, n: usize) -> u128 {
    shape.gl_dim(n)
}

pub fn mu(shape: &Partition) -> u64 {
    shape.mu()
}

/// Row group `P_α` and column group `Q_α` as explicit permutations of the slots.
#[derive(Clone, Debug, PartialEq)]
pub struct RowColumnGroups {
    pub row_perms: Vec<Permutation>,
    pub col_perms: Vec<Permutation>,
}

/// A numbering of the boxes of a Young diagram by the slots `0..k`.
///
/// Constructors taking `one_based` rows accept the usual `1..=k` labels.
#[derive(Clone, Debug)]
pub struct YoungTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
    groups: OnceLock<RowColumnGroups>,
}

impl PartialEq for YoungTableau {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl Eq for YoungTableau {}

impl YoungTableau {
    /// Builds a tableau from rows labelled `1..=k`, e.g. `[[1,2],[3]]`.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let zero_based = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| {
                        x.checked_sub(1)
                            .ok_or_else(|| Error::InvalidTableau("labels start at 1".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows_zero_based(zero_based)
    }

    pub fn from_rows_zero_based(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(e.to_string()))?;
        let k = shape.size();
        let mut seen = vec![false; k];
        for &x in rows.iter().flatten() {
            if x >= k || seen[x] {
                return Err(Error::InvalidTableau(format!(
                    "labels must use each of 1..={k} exactly once"
                )));
            }
            seen[x] = true;
        }
        Ok(Self {
            shape,
            rows,
            groups: OnceLock::new(),
        })
    }

    /// Boxes numbered row by row, left to right.
    pub fn canonical(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Self {
            shape: shape.clone(),
            rows,
            groups: OnceLock::new(),
        }
    }

    /// Every bijective numbering of the diagram (`k!` tableaux).
    pub fn numberings(shape: &Partition) -> Vec<Self> {
        Permutation::all(shape.size())
            .into_iter()
            .map(|p| Self::relabel_canonical(shape, p.images()))
            .collect()
    }

    /// Numberings increasing along rows and down columns.
    pub fn standard_tableaux(shape: &Partition) -> Vec<Self> {
        Self::numberings(shape)
            .into_iter()
            .filter(Self::is_standard)
            .collect()
    }

    fn relabel_canonical(shape: &Partition, labels: &[usize]) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = labels[next..next + len].to_vec();
                next += len;
                row
            })
            .collect();
        Self {
            shape: shape.clone(),
            rows,
            groups: OnceLock::new(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of boxes `k`.
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Rows with 0-based slot labels.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn rows_one_based(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|x| x + 1).collect())
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.rows[0].len())
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect()
    }

    /// For each slot, the (0-based) row of the box carrying it.
    pub fn row_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &slot in row {
                map[slot] = r;
            }
        }
        map
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    pub fn groups(&self) -> &RowColumnGroups {
        self.groups.get_or_init(|| RowColumnGroups {
            row_perms: block_group(self.size(), &self.rows),
            col_perms: block_group(self.size(), &self.columns()),
        })
    }

    fn check_order(&self, u: &ComplexTensor) -> Result<()> {
        if u.order() != self.size() {
            return Err(Error::OrderMismatch {
                expected: self.size(),
                found: u.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows_one_based()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<String>())
            .collect();
        write!(f, "young({})", rows.join(","))
    }
}

/// All permutations of `0..k` preserving each block setwise.
fn block_group(k: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group: Vec<Vec<usize>> = vec![(0..k).collect()];
    for block in blocks.iter().filter(|b| b.len() > 1) {
        let local = Permutation::all(block.len());
        let mut next = Vec::with_capacity(group.len() * local.len());
        for g in &group {
            for p in &local {
                let mut images = g.clone();
                for (i, &slot) in block.iter().enumerate() {
                    images[slot] = block[p.apply(i)];
                }
                next.push(images);
            }
        }
        group = next;
    }
    group
        .into_iter()
        .map(|images| Permutation::new(images).expect("block permutation is a bijection"))
        .collect()
}

pub fn row_column_groups(alpha: &YoungTableau) -> RowColumnGroups {
    alpha.groups().clone()
}

fn signed_sum(u: &ComplexTensor, perms: &[Permutation], signed: bool) -> ComplexTensor {
    let mut acc = ComplexTensor::zeros(u.dim(), u.order());
    for p in perms {
        let t = permute_unchecked(u, p);
        if signed && p.sign() < 0 {
            acc = &acc - &t;
        } else {
            acc += &t;
        }
    }
    acc
}

/// `b_α u = Σ_{σ∈P_α} U_σ u`.
pub fn apply_b(alpha: &YoungTableau, u: &ComplexTensor) -> Result<ComplexTensor> {
    alpha.check_order(u)?;
    Ok(signed_sum(u, &alpha.groups().row_perms, false))
}

/// `a_α u = Σ_{τ∈Q_α} (−1)^τ U_τ u`.
pub fn apply_a(alpha: &YoungTableau, u: &ComplexTensor) -> Result<ComplexTensor> {
    alpha.check_order(u)?;
    Ok(signed_sum(u, &alpha.groups().col_perms, true))
}

/// `c_α u = a_α(b_α u)`.
pub fn young_symmetrizer(alpha: &YoungTableau, u: &ComplexTensor) -> Result<ComplexTensor> {
    apply_a(alpha, &apply_b(alpha, u)?)
}

/// `π^α u = c_α u / μ(λ)`.
pub fn projector_alpha(alpha: &YoungTableau, u: &ComplexTensor) -> Result<ComplexTensor> {
    let c = young_symmetrizer(alpha, u)?;
    Ok(c * (1.0 / alpha.shape().mu() as f64))
}

/// Central Young symmetrizer `ε_λ = μ(λ)^{-2} Σ_{α∈Y_λ} c_α`, summed over every
/// numbering of the diagram. Build once and reuse when applying repeatedly.
#[derive(Clone, Debug)]
pub struct CentralSymmetrizer {
    shape: Partition,
    tableaux: Vec<YoungTableau>,
    scale: f64,
}

impl CentralSymmetrizer {
    pub fn new(shape: &Partition) -> Self {
        let mu = shape.mu() as f64;
        Self {
            shape: shape.clone(),
            tableaux: YoungTableau::numberings(shape),
            scale: 1.0 / (mu * mu),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn apply(&self, u: &ComplexTensor) -> Result<ComplexTensor> {
        if u.order() != self.shape.size() {
            return Err(Error::OrderMismatch {
                expected: self.shape.size(),
                found: u.order(),
            });
        }
        let mut acc = ComplexTensor::zeros(u.dim(), u.order());
        for alpha in &self.tableaux {
            acc += &young_symmetrizer(alpha, u)?;
        }
        Ok(acc.scale(Complex64::new(self.scale, 0.0)))
    }
}

pub fn central_projector(shape: &Partition, u: &ComplexTensor) -> Result<ComplexTensor> {
    CentralSymmetrizer::new(shape).apply(u)
}

/// Matrix of `c_α` on `H^{⊗k}` with `dim H = n`.
pub fn symmetrizer_matrix(alpha: &YoungTableau, n: usize) -> Result<ComplexMatrix> {
    operator_matrix(n, alpha.size(), |u| young_symmetrizer(alpha, u))
}

/// Matrix of `π^α` on `H^{⊗k}` with `dim H = n`.
pub fn projector_matrix(alpha: &YoungTableau, n: usize) -> Result<ComplexMatrix> {
    operator_matrix(n, alpha.size(), |u| projector_alpha(alpha, u))
}

/// Matrix of `ε_λ` on `H^{⊗k}` with `dim H = n`.
pub fn central_projector_matrix(shape: &Partition, n: usize) -> Result<ComplexMatrix> {
    let eps = CentralSymmetrizer::new(shape);
    operator_matrix(n, shape.size(), |u| eps.apply(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{antisymmetrize, symmetrize, tensor_product_all};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn alpha1() -> YoungTableau {
        YoungTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap()
    }

    fn alpha2() -> YoungTableau {
        YoungTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap()
    }

    fn x(seed: usize) -> ComplexTensor {
        let v: Vec<Complex64> = (0..3)
            .map(|i| {
                let t = (seed * 7 + i * 3) as f64;
                Complex64::new((t * 0.37).sin(), (t * 0.91).cos())
            })
            .collect();
        ComplexTensor::vector(v).unwrap()
    }

    fn prod(a: &ComplexTensor, b: &ComplexTensor, c: &ComplexTensor) -> ComplexTensor {
        tensor_product_all(&[a.clone(), b.clone(), c.clone()]).unwrap()
    }

    #[test]
    fn partitions_of_small_k() {
        let k3 = enumerate_partitions(3).unwrap();
        assert_eq!(k3, vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 5);
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_partitions(9).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn tableau_validation() {
        assert!(YoungTableau::from_rows(vec![vec![1, 1], vec![2]]).is_err());
        assert!(YoungTableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
        assert!(YoungTableau::from_rows(vec![vec![0, 1]]).is_err());
        assert!(YoungTableau::from_rows(vec![vec![1, 4]]).is_err());
        let a = alpha1();
        assert_eq!(a.rows_one_based(), vec![vec![1, 2], vec![3]]);
        assert_eq!(a.row_map(), vec![0, 0, 1]);
        assert_eq!(alpha2().row_map(), vec![0, 1, 0]);
        assert_eq!(a.to_string(), "young(12,3)");
    }

    #[test]
    fn groups_of_alpha1() {
        let g = row_column_groups(&alpha1());
        assert_eq!(
            g.row_perms,
            vec![Permutation::identity(3), Permutation::transposition(3, 0, 1).unwrap()]
        );
        assert_eq!(
            g.col_perms,
            vec![Permutation::identity(3), Permutation::transposition(3, 0, 2).unwrap()]
        );
    }

    #[test]
    fn groups_of_one_row_and_one_column() {
        let row = YoungTableau::canonical(&p(&[3]));
        let col = YoungTableau::canonical(&p(&[1, 1, 1]));
        assert_eq!(row.groups().row_perms.len(), 6);
        assert_eq!(row.groups().col_perms, vec![Permutation::identity(3)]);
        assert_eq!(col.groups().row_perms, vec![Permutation::identity(3)]);
        assert_eq!(col.groups().col_perms.len(), 6);
    }

    #[test]
    fn group_orders_match_products_of_factorials() {
        for k in 1..=5 {
            for shape in enumerate_partitions(k).unwrap() {
                let t = YoungTableau::canonical(&shape);
                let g = t.groups();
                let p_order: u64 = shape.parts().iter().map(|&l| factorial(l)).product();
                let q_order: u64 = shape.column_lengths().iter().map(|&l| factorial(l)).product();
                assert_eq!(g.row_perms.len() as u64, p_order);
                assert_eq!(g.col_perms.len() as u64, q_order);
            }
        }
    }

    #[test]
    fn a_and_b_of_alpha1_on_simple_tensor() {
        let (x1, x2, x3) = (x(1), x(2), x(3));
        let u = prod(&x1, &x2, &x3);
        let b = apply_b(&alpha1(), &u).unwrap();
        let expected_b = &u + &prod(&x2, &x1, &x3);
        assert!(b.max_abs_diff(&expected_b) < 1e-14);
        let a = apply_a(&alpha1(), &u).unwrap();
        let expected_a = &u - &prod(&x3, &x2, &x1);
        assert!(a.max_abs_diff(&expected_a) < 1e-14);
    }

    #[test]
    fn column_antisymmetrizer_kills_symmetric_input() {
        let e1 = ComplexTensor::unit(3, 0).unwrap();
        let u = prod(&e1, &e1, &e1);
        assert!(apply_a(&alpha1(), &u).unwrap().is_zero());
    }

    #[test]
    fn young_symmetrizer_of_alpha1() {
        let (x1, x2, x3) = (x(4), x(5), x(6));
        let c = young_symmetrizer(&alpha1(), &prod(&x1, &x2, &x3)).unwrap();
        let expected = prod(&x1, &x2, &x3) + prod(&x2, &x1, &x3)
            - prod(&x3, &x2, &x1)
            - prod(&x3, &x1, &x2);
        assert!(c.max_abs_diff(&expected) < 1e-14);
    }

    #[test]
    fn one_row_symmetrizer_is_k_factorial_times_symmetrize() {
        let u = prod(&x(1), &x(7), &x(9));
        let c = young_symmetrizer(&YoungTableau::canonical(&p(&[3])), &u).unwrap();
        assert!(c.max_abs_diff(&(symmetrize(&u) * 6.0)) < 1e-13);
    }

    #[test]
    fn projector_formulas_for_k3() {
        let (x1, x2, x3) = (x(10), x(11), x(12));
        let u = prod(&x1, &x2, &x3);
        let p1 = projector_alpha(&alpha1(), &u).unwrap();
        let e1 = (prod(&x1, &x2, &x3) + prod(&x2, &x1, &x3) - prod(&x3, &x2, &x1) - prod(&x3, &x1, &x2))
            * (1.0 / 3.0);
        assert!(p1.max_abs_diff(&e1) < 1e-14);
        let p2 = projector_alpha(&alpha2(), &u).unwrap();
        let e2 = (prod(&x1, &x2, &x3) + prod(&x3, &x2, &x1) - prod(&x2, &x1, &x3) - prod(&x2, &x3, &x1))
            * (1.0 / 3.0);
        assert!(p2.max_abs_diff(&e2) < 1e-14);
    }

    #[test]
    fn one_row_and_one_column_projectors() {
        let u = prod(&x(2), &x(3), &x(5));
        let row = projector_alpha(&YoungTableau::canonical(&p(&[3])), &u).unwrap();
        let col = projector_alpha(&YoungTableau::canonical(&p(&[1, 1, 1])), &u).unwrap();
        assert!(row.max_abs_diff(&symmetrize(&u)) < 1e-14);
        assert!(col.max_abs_diff(&antisymmetrize(&u)) < 1e-14);
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(&p(&[2, 1])), 3);
        assert_eq!(mu(&p(&[1, 1])), 2);
        for k in 1..=6 {
            assert_eq!(mu(&p(&[k])), factorial(k));
        }
    }

    #[test]
    fn hook_length_matches_enumerated_standard_tableaux() {
        for k in 1..=6 {
            for shape in enumerate_partitions(k).unwrap() {
                assert_eq!(
                    count_standard_tableaux(&shape),
                    YoungTableau::standard_tableaux(&shape).len() as u64,
                    "shape {shape}"
                );
            }
        }
        assert_eq!(count_standard_tableaux(&p(&[2, 1])), 2);
    }

    #[test]
    fn gl_dims_for_k3() {
        assert_eq!(gl_dim(&p(&[2, 1]), 3), 8);
        assert_eq!(gl_dim(&p(&[3]), 3), 10);
        assert_eq!(gl_dim(&p(&[1, 1, 1]), 3), 1);
        assert_eq!(gl_dim(&p(&[1, 1, 1]), 2), 0);
        assert_eq!(gl_dim(&p(&[2]), 4), 10);
        assert_eq!(gl_dim(&p(&[1, 1]), 4), 6);
    }

    #[test]
    fn schur_weyl_dimension_sum() {
        for n in 1..=5usize {
            for k in 1..=5usize {
                let total: u128 = enumerate_partitions(k)
                    .unwrap()
                    .iter()
                    .map(|s| count_standard_tableaux(s) as u128 * gl_dim(s, n))
                    .sum();
                assert_eq!(total, (n as u128).pow(k as u32), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn central_projectors_for_k2() {
        let u = tensor_product_all(&[x(3), x(8)]).unwrap();
        let sym = central_projector(&p(&[2]), &u).unwrap();
        let anti = central_projector(&p(&[1, 1]), &u).unwrap();
        assert!(sym.max_abs_diff(&symmetrize(&u)) < 1e-14);
        assert!(anti.max_abs_diff(&antisymmetrize(&u)) < 1e-14);
    }

    #[test]
    fn central_projector_trace_for_hook_shape() {
        let m = central_projector_matrix(&p(&[2, 1]), 3).unwrap();
        let tr = m.trace();
        assert!((tr.re - 16.0).abs() < 1e-10 && tr.im.abs() < 1e-10);
    }

    #[test]
    fn order_mismatch_errors() {
        let u = ComplexTensor::zeros(2, 2);
        assert!(apply_a(&alpha1(), &u).is_err());
        assert!(apply_b(&alpha1(), &u).is_err());
        assert!(projector_alpha(&alpha1(), &u).is_err());
        assert!(central_projector(&p(&[2, 1]), &u).is_err());
    }
}
