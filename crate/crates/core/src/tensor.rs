//! Dense complex tensors over an `n`-dimensional one-particle space.
//!
//! Coefficients are stored row-major with slot 1 most significant: the
//! coefficient at multi-index `(i_1, …, i_k)` (0-based) sits at flat offset
//! `Σ_m i_m · n^(k-1-m)`.

use std::ops::{Add, AddAssign, Mul, Neg, Sub};

pub use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Norms at or below this are treated as an exact zero tensor.
pub const ZERO_FLOOR: f64 = 1e-300;

#[derive(Clone, Debug, PartialEq)]
pub struct ComplexTensor {
    dim: usize,
    order: usize,
    coeffs: Vec<Complex64>,
}

impl ComplexTensor {
    pub fn new(dim: usize, order: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::OutOfRange {
                what: "dimension",
                value: 0,
                allowed: ">= 1".into(),
            });
        }
        let expected = checked_len(dim, order)?;
        if coeffs.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: coeffs.len(),
            });
        }
        if let Some(i) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { dim, order, coeffs })
    }

    /// Builds a tensor from split real and imaginary parts.
    pub fn from_parts(dim: usize, order: usize, re: &[f64], im: &[f64]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::LengthMismatch {
                expected: re.len(),
                found: im.len(),
            });
        }
        let coeffs = re
            .iter()
            .zip(im)
            .map(|(&r, &i)| Complex64::new(r, i))
            .collect();
        Self::new(dim, order, coeffs)
    }

    pub fn zeros(dim: usize, order: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self {
            dim,
            order,
            coeffs: vec![Complex64::new(0.0, 0.0); dim.pow(order as u32)],
        }
    }

    /// Order-0 tensor holding a single scalar.
    pub fn scalar(dim: usize, value: Complex64) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self {
            dim,
            order: 0,
            coeffs: vec![value],
        }
    }

    /// Order-1 tensor with the given components.
    pub fn vector(coeffs: Vec<Complex64>) -> Result<Self> {
        let n = coeffs.len();
        Self::new(n, 1, coeffs)
    }

    pub fn real_vector(coeffs: &[f64]) -> Result<Self> {
        Self::vector(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The basis tensor `e_{i_1}⊗…⊗e_{i_k}` (0-based indices).
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self> {
        let mut t = Self::zeros(dim, indices.len());
        let flat = t.flat_index(indices)?;
        t.coeffs[flat] = Complex64::new(1.0, 0.0);
        Ok(t)
    }

    /// `e_i` as an order-1 tensor (0-based).
    pub fn unit(dim: usize, i: usize) -> Result<Self> {
        Self::basis(dim, &[i])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    pub fn flat_index(&self, indices: &[usize]) -> Result<usize> {
        if indices.len() != self.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                found: indices.len(),
            });
        }
        let mut flat = 0;
        for &i in indices {
            if i >= self.dim {
                return Err(Error::OutOfRange {
                    what: "index",
                    value: i,
                    allowed: format!("0..{}", self.dim),
                });
            }
            flat = flat * self.dim + i;
        }
        Ok(flat)
    }

    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.order];
        for slot in (0..self.order).rev() {
            idx[slot] = flat % self.dim;
            flat /= self.dim;
        }
        idx
    }

    pub fn get(&self, indices: &[usize]) -> Result<Complex64> {
        Ok(self.coeffs[self.flat_index(indices)?])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.norm() <= ZERO_FLOOR
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            order: self.order,
            coeffs: self.coeffs.iter().map(|&x| x * c).collect(),
        }
    }

    /// Unit-norm copy; errors on the zero tensor.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n <= ZERO_FLOOR {
            return Err(Error::ZeroTensor);
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    /// Largest coefficient-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.assert_same_shape(other);
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn same_shape(&self, other: &Self) -> bool {
        self.dim == other.dim && self.order == other.order
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                found: other.order,
            });
        }
        Ok(())
    }

    fn assert_same_shape(&self, other: &Self) {
        assert!(
            self.same_shape(other),
            "tensor shape mismatch: (n={}, k={}) vs (n={}, k={})",
            self.dim,
            self.order,
            other.dim,
            other.order
        );
    }

    /// Applies `x ↦ Σ_m (I⊗…⊗A⊗…⊗I) x`, the derivative of the diagonal action
    /// `U ↦ U⊗…⊗U` at the identity in direction `A` (row-major `n×n`).
    pub fn apply_one_body(&self, a: &[Complex64]) -> Result<Self> {
        let n = self.dim;
        if a.len() != n * n {
            return Err(Error::LengthMismatch {
                expected: n * n,
                found: a.len(),
            });
        }
        let mut out = Self::zeros(n, self.order);
        for slot in 0..self.order {
            let stride = n.pow((self.order - 1 - slot) as u32);
            for (flat, &c) in self.coeffs.iter().enumerate() {
                if c.norm_sqr() == 0.0 {
                    continue;
                }
                let j = (flat / stride) % n;
                let base = flat - j * stride;
                for i in 0..n {
                    out.coeffs[base + i * stride] += a[i * n + j] * c;
                }
            }
        }
        Ok(out)
    }
}

fn checked_len(dim: usize, order: usize) -> Result<usize> {
    u32::try_from(order)
        .ok()
        .and_then(|o| dim.checked_pow(o))
        .ok_or(Error::OutOfRange {
            what: "tensor size",
            value: order,
            allowed: "dim^order must fit in memory".into(),
        })
}

impl Add for &ComplexTensor {
    type Output = ComplexTensor;
    fn add(self, rhs: &ComplexTensor) -> ComplexTensor {
        self.assert_same_shape(rhs);
        ComplexTensor {
            dim: self.dim,
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for ComplexTensor {
    type Output = ComplexTensor;
    fn add(self, rhs: ComplexTensor) -> ComplexTensor {
        &self + &rhs
    }
}

impl AddAssign<&ComplexTensor> for ComplexTensor {
    fn add_assign(&mut self, rhs: &ComplexTensor) {
        self.assert_same_shape(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &ComplexTensor {
    type Output = ComplexTensor;
    fn sub(self, rhs: &ComplexTensor) -> ComplexTensor {
        self.assert_same_shape(rhs);
        ComplexTensor {
            dim: self.dim,
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Sub for ComplexTensor {
    type Output = ComplexTensor;
    fn sub(self, rhs: ComplexTensor) -> ComplexTensor {
        &self - &rhs
    }
}

impl Neg for &ComplexTensor {
    type Output = ComplexTensor;
    fn neg(self) -> ComplexTensor {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Neg for ComplexTensor {
    type Output = ComplexTensor;
    fn neg(self) -> ComplexTensor {
        -&self
    }
}

impl Mul<Complex64> for &ComplexTensor {
    type Output = ComplexTensor;
    fn mul(self, c: Complex64) -> ComplexTensor {
        self.scale(c)
    }
}

impl Mul<Complex64> for ComplexTensor {
    type Output = ComplexTensor;
    fn mul(self, c: Complex64) -> ComplexTensor {
        self.scale(c)
    }
}

impl Mul<f64> for &ComplexTensor {
    type Output = ComplexTensor;
    fn mul(self, c: f64) -> ComplexTensor {
        self.scale(Complex64::new(c, 0.0))
    }
}

impl Mul<f64> for ComplexTensor {
    type Output = ComplexTensor;
    fn mul(self, c: f64) -> ComplexTensor {
        self.scale(Complex64::new(c, 0.0))
    }
}

/// `u ⊗ v`, with `(u⊗v)^{I,J} = u^I · v^J`.
pub fn tensor_product(u: &ComplexTensor, v: &ComplexTensor) -> Result<ComplexTensor> {
    if u.dim != v.dim {
        return Err(Error::DimensionMismatch {
            expected: u.dim,
            found: v.dim,
        });
    }
    let mut coeffs = Vec::with_capacity(u.len() * v.len());
    for a in &u.coeffs {
        coeffs.extend(v.coeffs.iter().map(|b| a * b));
    }
    Ok(ComplexTensor {
        dim: u.dim,
        order: u.order + v.order,
        coeffs,
    })
}

/// `x_1 ⊗ … ⊗ x_m` for a non-empty list of tensors of equal dimension.
pub fn tensor_product_all(factors: &[ComplexTensor]) -> Result<ComplexTensor> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidOption("empty factor list".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| tensor_product(&acc, f))
}

/// `U_σ u`, acting on simple tensors by `U_σ(f_1⊗…⊗f_k) = f_σ(1)⊗…⊗f_σ(k)`.
///
/// In coefficients, slot `m` of the result carries the index of slot `σ(m)` of `u`.
pub fn permute(u: &ComplexTensor, sigma: &Permutation) -> Result<ComplexTensor> {
    if sigma.len() != u.order {
        return Err(Error::OrderMismatch {
            expected: u.order,
            found: sigma.len(),
        });
    }
    Ok(permute_unchecked(u, sigma))
}

pub(crate) fn permute_unchecked(u: &ComplexTensor, sigma: &Permutation) -> ComplexTensor {
    let k = u.order;
    let n = u.dim;
    if k < 2 || sigma.is_identity() {
        return u.clone();
    }
    let src_strides: Vec<usize> = (0..k).map(|p| n.pow((k - 1 - p) as u32)).collect();
    // stride in u for each slot of the output
    let strides: Vec<usize> = (0..k).map(|m| src_strides[sigma.apply(m)]).collect();
    let mut coeffs = Vec::with_capacity(u.len());
    let mut idx = vec![0usize; k];
    let mut offset = 0usize;
    for _ in 0..u.len() {
        coeffs.push(u.coeffs[offset]);
        // odometer increment over output multi-index, tracking source offset
        let mut slot = k;
        while slot > 0 {
            slot -= 1;
            idx[slot] += 1;
            offset += strides[slot];
            if idx[slot] < n {
                break;
            }
            offset -= n * strides[slot];
            idx[slot] = 0;
        }
    }
    ComplexTensor {
        dim: n,
        order: k,
        coeffs,
    }
}

/// Hermitian product, conjugate-linear in `u` and linear in `v`.
pub fn inner(u: &ComplexTensor, v: &ComplexTensor) -> Result<Complex64> {
    u.check_same_shape(v)?;
    Ok(u.coeffs
        .iter()
        .zip(&v.coeffs)
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// Orthogonal projection onto totally symmetric tensors, `(1/k!) Σ_σ U_σ`.
pub fn symmetrize(u: &ComplexTensor) -> ComplexTensor {
    signed_average(u, false)
}

/// Orthogonal projection onto totally antisymmetric tensors, `(1/k!) Σ_σ (−1)^σ U_σ`.
pub fn antisymmetrize(u: &ComplexTensor) -> ComplexTensor {
    signed_average(u, true)
}

fn signed_average(u: &ComplexTensor, signed: bool) -> ComplexTensor {
    if u.order < 2 {
        return u.clone();
    }
    let perms = Permutation::all(u.order);
    let mut acc = ComplexTensor::zeros(u.dim, u.order);
    for p in &perms {
        let t = permute_unchecked(u, p);
        let s = if signed && p.sign() < 0 { -1.0 } else { 1.0 };
        for (a, b) in acc.coeffs.iter_mut().zip(&t.coeffs) {
            *a += b * s;
        }
    }
    acc.scale(Complex64::new(1.0 / perms.len() as f64, 0.0))
}

/// `u ∨ v = π^∨(u ⊗ v)`.
pub fn vee(u: &ComplexTensor, v: &ComplexTensor) -> Result<ComplexTensor> {
    Ok(symmetrize(&tensor_product(u, v)?))
}

/// `u ∧ v = π^∧(u ⊗ v)`.
pub fn wedge(u: &ComplexTensor, v: &ComplexTensor) -> Result<ComplexTensor> {
    Ok(antisymmetrize(&tensor_product(u, v)?))
}

/// `f_1 ∨ … ∨ f_m`, folded left.
pub fn vee_all(factors: &[ComplexTensor]) -> Result<ComplexTensor> {
    fold_product(factors, vee)
}

/// `f_1 ∧ … ∧ f_m`, folded left.
pub fn wedge_all(factors: &[ComplexTensor]) -> Result<ComplexTensor> {
    fold_product(factors, wedge)
}

fn fold_product(
    factors: &[ComplexTensor],
    op: fn(&ComplexTensor, &ComplexTensor) -> Result<ComplexTensor>,
) -> Result<ComplexTensor> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidOption("empty factor list".into()))?;
    rest.iter().try_fold(first.clone(), |acc, f| op(&acc, f))
}

/// Contraction `ι_ν u` over the first `l = ν.order` slots:
/// `(ι_ν u)^J = Σ_I conj(ν^I) · u^{I,J}`.
///
/// Linear in `u`, conjugate-linear in `ν`.
pub fn contract(nu: &ComplexTensor, u: &ComplexTensor) -> Result<ComplexTensor> {
    if nu.dim != u.dim {
        return Err(Error::DimensionMismatch {
            expected: u.dim,
            found: nu.dim,
        });
    }
    if nu.order > u.order {
        return Err(Error::OutOfRange {
            what: "contraction order",
            value: nu.order,
            allowed: format!("<= {}", u.order),
        });
    }
    let rest_len = u.dim.pow((u.order - nu.order) as u32);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); rest_len];
    for (i, c) in nu.coeffs.iter().enumerate() {
        if c.norm_sqr() == 0.0 {
            continue;
        }
        let c = c.conj();
        let block = &u.coeffs[i * rest_len..(i + 1) * rest_len];
        for (out, x) in coeffs.iter_mut().zip(block) {
            *out += c * x;
        }
    }
    Ok(ComplexTensor {
        dim: u.dim,
        order: u.order - nu.order,
        coeffs,
    })
}
