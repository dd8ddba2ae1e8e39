//! Seeded generators for random vectors, tensors, unitaries and states.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::ComplexMatrix;
use crate::tensor::{tensor_product_all, Complex64, ComplexTensor};

/// Deterministic generator used throughout the crate.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Order-1 tensor with i.i.d. complex Gaussian components.
pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexTensor {
    ComplexTensor::vector((0..n).map(|_| complex_normal(rng)).collect())
        .expect("finite gaussian samples")
}

/// Order-1 tensor with real Gaussian components.
pub fn random_real_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexTensor {
    let v: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
    ComplexTensor::real_vector(&v).expect("finite gaussian samples")
}

pub fn random_tensor<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> ComplexTensor {
    ComplexTensor::new(n, k, (0..n.pow(k as u32)).map(|_| complex_normal(rng)).collect())
        .expect("finite gaussian samples")
}

/// `x_1 ⊗ … ⊗ x_k` with independent random factors.
pub fn random_product<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> ComplexTensor {
    if k == 0 {
        return ComplexTensor::scalar(n, complex_normal(rng));
    }
    let factors: Vec<ComplexTensor> = (0..k).map(|_| random_vector(rng, n)).collect();
    tensor_product_all(&factors).expect("equal dimensions")
}

/// Haar-distributed unitary via QR of a complex Ginibre matrix with phase fix.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> ComplexMatrix {
    let g = DMatrix::from_fn(n, n, |_, _| complex_normal(rng));
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..n {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, j)] *= phase;
        }
    }
    q
}

/// Random density matrix of the given rank on `C^dim`.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> ComplexMatrix {
    let g = DMatrix::from_fn(dim, rank, |_, _| complex_normal(rng));
    let rho = &g * g.adjoint();
    let tr = rho.trace();
    rho / tr
}
