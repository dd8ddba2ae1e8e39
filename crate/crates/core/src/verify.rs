//! Randomized self-verification: each suite re-derives one family of identities
//! (projectors, pairings, ranks, Segre maps, orbit dimensions, dimension
//! tables) on seeded random inputs and counts failures.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{
    check_simple, quadratic_residual, s_rank, s_rank_bruteforce, RankOptions, Statistics,
    SymmetryClass,
};
use crate::error::Result;
use crate::matrix::{determinant, max_abs_diff, outer, permanent, ComplexMatrix};
use crate::random::{random_density, random_product, random_tensor, random_vector};
use crate::states::{
    alpha_embedding, big_segre, orbit_dimension, seg_alpha, seg_bosonic, seg_fermionic,
    tensor_op_product, DensityOperator, HermitianOperator,
};
use crate::tensor::{
    antisymmetrize, inner, symmetrize, tensor_product_all, vee_all, wedge_all, ComplexTensor,
};
use crate::young::{
    enumerate_partitions, factorial, projector_alpha, young_symmetrizer, CentralSymmetrizer,
    Partition, YoungTableau,
};

/// Absolute/relative tolerance for identities that hold exactly in exact arithmetic.
pub const IDENTITY_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    pub kmax: usize,
    pub nmax: usize,
    pub rank: RankOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 20,
            kmax: 4,
            nmax: 4,
            rank: RankOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub checks: usize,
    pub failures: usize,
    /// First failure, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifySummary {
    pub passed: bool,
    pub suites: Vec<SuiteResult>,
    pub warnings: Vec<String>,
}

/// Accumulates check outcomes for one suite.
#[derive(Debug)]
pub struct Tally {
    name: &'static str,
    checks: usize,
    failures: usize,
    detail: Option<String>,
}

impl Tally {
    pub fn new(name: &'static str) -> Self {
        Self {
            name,
            checks: 0,
            failures: 0,
            detail: None,
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(what());
            }
        }
    }

    /// Records an error from the library as a failed check.
    pub fn absorb<T>(&mut self, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("unexpected error: {e}"));
                None
            }
        }
    }

    pub fn checks(&self) -> usize {
        self.checks
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    pub fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            passed: self.failures == 0,
            checks: self.checks,
            failures: self.failures,
            detail: self.detail,
        }
    }
}

fn suite_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn shapes_up_to(kmax: usize) -> Vec<Partition> {
    (1..=kmax.min(8))
        .flat_map(|k| enumerate_partitions(k).unwrap_or_default())
        .collect()
}

/// `π^α` is idempotent on random tensors for every standard tableau.
fn projector_idempotence(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("projector_idempotence");
    for shape in shapes_up_to(opts.kmax) {
        for alpha in YoungTableau::standard_tableaux(&shape) {
            for n in 1..=opts.nmax {
                for _ in 0..opts.trials {
                    let u = random_tensor(rng, n, shape.size());
                    let Some(p) = t.absorb(projector_alpha(&alpha, &u)) else { continue };
                    let Some(pp) = t.absorb(projector_alpha(&alpha, &p)) else { continue };
                    let err = pp.max_abs_diff(&p);
                    t.check(err <= IDENTITY_TOLERANCE * u.norm(), || {
                        format!("π^α∘π^α ≠ π^α for {alpha}, n={n}: {err:e}")
                    });
                }
            }
        }
    }
    t.finish()
}

/// `⟨f_1∨…∨f_k | g_1∨…∨g_k⟩ = per G / k!` and the wedge analogue with `det G`.
fn pairing_identities(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("pairing_identities");
    for k in 1..=opts.kmax.min(6) {
        for n in 1..=opts.nmax {
            for _ in 0..opts.trials {
                let f: Vec<_> = (0..k).map(|_| random_vector(rng, n)).collect();
                let g: Vec<_> = (0..k).map(|_| random_vector(rng, n)).collect();
                let gram = ComplexMatrix::from_fn(k, k, |i, j| inner(&f[i], &g[j]).unwrap());
                let kf = factorial(k) as f64;
                let pairs = [
                    (vee_all(&f), vee_all(&g), permanent(&gram), "symmetric"),
                    (wedge_all(&f), wedge_all(&g), determinant(&gram), "antisymmetric"),
                ];
                for (a, b, expected, label) in pairs {
                    let (Some(a), Some(b), Some(expected)) = (t.absorb(a), t.absorb(b), t.absorb(expected)) else {
                        continue;
                    };
                    let lhs = inner(&a, &b).unwrap();
                    let rhs = expected / kf;
                    let scale = f.iter().chain(&g).map(|x| x.norm()).product::<f64>() / kf;
                    let err = (lhs - rhs).norm();
                    t.check(err <= IDENTITY_TOLERANCE * scale.max(1e-300), || {
                        format!("{label} pairing, k={k}, n={n}: |{lhs} − {rhs}|")
                    });
                }
            }
        }
    }
    t.finish()
}

/// Measured `c_α² = μ c_α` against the hook product, for every numbering.
fn mu_constants(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("mu_constants");
    t.check(Partition::new(vec![2, 1]).map(|p| p.mu()).ok() == Some(3), || "μ((2,1)) ≠ 3".into());
    if opts.trials == 0 {
        return t.finish();
    }
    for shape in shapes_up_to(opts.kmax) {
        let n = shape.num_rows().max(opts.nmax.min(shape.size()));
        for alpha in YoungTableau::numberings(&shape) {
            let u = random_tensor(rng, n, shape.size());
            let Some(c) = t.absorb(young_symmetrizer(&alpha, &u)) else { continue };
            let Some(cc) = t.absorb(young_symmetrizer(&alpha, &c)) else { continue };
            let measured = (inner(&c, &cc).unwrap() / c.norm_sqr()).re;
            let expected = shape.hook_product() as f64;
            t.check((measured - expected).abs() <= IDENTITY_TOLERANCE * expected, || {
                format!("{alpha}: measured {measured}, hook product {expected}")
            });
        }
    }
    t.finish()
}

/// `Σ_λ ε_λ = id` and `ε_λ ε_μ = δ_{λμ} ε_λ` on random tensors.
fn central_completeness(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("central_completeness");
    for k in 1..=opts.kmax.min(5) {
        let eps: Vec<_> = enumerate_partitions(k)
            .unwrap_or_default()
            .iter()
            .map(CentralSymmetrizer::new)
            .collect();
        for n in 1..=opts.nmax {
            for _ in 0..opts.trials {
                let u = random_tensor(rng, n, k);
                let parts: Vec<_> = eps.iter().filter_map(|e| t.absorb(e.apply(&u))).collect();
                let mut sum = ComplexTensor::zeros(n, k);
                for p in &parts {
                    sum += p;
                }
                let err = sum.max_abs_diff(&u);
                t.check(err <= IDENTITY_TOLERANCE * u.norm(), || format!("Σ ε_λ ≠ id at n={n}, k={k}: {err:e}"));
                for (i, e) in eps.iter().enumerate() {
                    for (j, p) in parts.iter().enumerate() {
                        let Some(ep) = t.absorb(e.apply(p)) else { continue };
                        let expected = if i == j { p.clone() } else { ComplexTensor::zeros(n, k) };
                        let err = ep.max_abs_diff(&expected);
                        t.check(err <= IDENTITY_TOLERANCE * u.norm(), || {
                            format!("ε_{} ε_{} wrong at n={n}: {err:e}", e.shape(), eps[j].shape())
                        });
                    }
                }
            }
        }
    }
    t.finish()
}

/// `Σ_{i<r} x_i^{(1)} ⊗ … ⊗ x_i^{(k)}` with random factors; S-rank `min(r, n)`
/// generically.
fn schmidt_like(rng: &mut ChaCha8Rng, n: usize, k: usize, r: usize) -> ComplexTensor {
    let mut acc = ComplexTensor::zeros(n, k);
    for _ in 0..r {
        acc += &random_product(rng, n, k);
    }
    acc
}

/// Unfolding S-rank against the maximum over all slot permutations, and against
/// constructed ranks.
fn srank_oracle(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("srank_oracle");
    for k in 2..=opts.kmax.min(4) {
        for n in 2..=opts.nmax.min(3) {
            for _ in 0..opts.trials {
                let u = random_tensor(rng, n, k);
                let (Some(a), Some(b)) = (t.absorb(s_rank(&u, &opts.rank)), t.absorb(s_rank_bruteforce(&u, &opts.rank))) else {
                    continue;
                };
                t.check(a == b, || format!("unfolding {a} vs brute force {b} at n={n}, k={k}"));
                for r in 1..=n {
                    let v = schmidt_like(rng, n, k, r);
                    let Some(got) = t.absorb(s_rank(&v, &opts.rank)) else { continue };
                    t.check(got == r, || format!("{r}-term tensor has S-rank {got} (n={n}, k={k})"));
                }
            }
        }
    }
    t.finish()
}

fn projected(u: &ComplexTensor, stats: Statistics) -> ComplexTensor {
    match stats {
        Statistics::Distinguishable => u.clone(),
        Statistics::Bosonic => symmetrize(u),
        Statistics::Fermionic => antisymmetrize(u),
    }
}

fn class_of(stats: Statistics) -> SymmetryClass {
    match stats {
        Statistics::Distinguishable => SymmetryClass::Distinguishable,
        Statistics::Bosonic => SymmetryClass::Bosonic,
        Statistics::Fermionic => SymmetryClass::Fermionic,
    }
}

/// A random simple tensor of the class (order `k`, dimension `n`).
pub fn random_simple(rng: &mut ChaCha8Rng, stats: Statistics, n: usize, k: usize) -> Result<ComplexTensor> {
    match stats {
        Statistics::Distinguishable => Ok(random_product(rng, n, k)),
        Statistics::Bosonic => Ok(tensor_product_all(&vec![random_vector(rng, n); k])?),
        Statistics::Fermionic => {
            let xs: Vec<_> = (0..k).map(|_| random_vector(rng, n)).collect();
            wedge_all(&xs)
        }
    }
}

/// The S-rank verdict and the relation verdict agree on constructed simple
/// tensors and on perturbations of them.
pub fn relation_equivalence_case(
    t: &mut Tally,
    rng: &mut ChaCha8Rng,
    stats: Statistics,
    n: usize,
    k: usize,
    rank: &RankOptions,
) {
    let Some(simple) = t.absorb(random_simple(rng, stats, n, k)) else { return };
    let noise = projected(&random_tensor(rng, n, k), stats);
    let perturbed = &simple.normalized().unwrap() + &(noise.normalized().unwrap() * 0.3);
    for (u, constructed) in [(simple, true), (perturbed, false)] {
        let Some(rep) = t.absorb(check_simple(&u, &class_of(stats), rank)) else { continue };
        t.check(!rep.criteria_disagree(), || {
            format!("{} n={n} k={k}: S-rank {} but relations say {:?}", stats.name(), rep.s_rank, rep.relations_simple)
        });
        if constructed {
            t.check(rep.simple, || format!("constructed simple {} tensor flagged entangled", stats.name()));
        }
    }
}

fn relation_equivalence(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("relation_equivalence");
    for k in 2..=opts.kmax.min(4) {
        for n in 2..=opts.nmax {
            for _ in 0..opts.trials {
                relation_equivalence_case(&mut t, rng, Statistics::Distinguishable, n, k, &opts.rank);
                relation_equivalence_case(&mut t, rng, Statistics::Bosonic, n, k, &opts.rank);
                if n > k && n.pow(k as u32) <= 256 {
                    relation_equivalence_case(&mut t, rng, Statistics::Fermionic, n, k, &opts.rank);
                }
            }
        }
    }
    if opts.nmax >= 4 {
        let e = |i| ComplexTensor::unit(4, i).unwrap();
        let w = &wedge_all(&[e(0), e(1)]).unwrap() + &wedge_all(&[e(2), e(3)]).unwrap();
        let r = quadratic_residual(&w, Statistics::Fermionic);
        t.check(r.as_ref().is_ok_and(|&r| r > 1e-3), || format!("e1∧e2+e3∧e4 residual {r:?}"));
    }
    t.finish()
}

/// Segre outputs are simple in their class: bosonic, fermionic and every
/// standard tableau.
fn segre_simplicity(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("segre_simplicity");
    for k in 1..=opts.kmax.min(4) {
        for n in 1..=opts.nmax {
            for _ in 0..opts.trials {
                let x = random_vector(rng, n);
                if let Some(s) = t.absorb(seg_bosonic(&x, k)) {
                    if let Some(rep) = t.absorb(check_simple(s.vector(), &SymmetryClass::Bosonic, &opts.rank)) {
                        t.check(rep.simple, || format!("bosonic Segre image not simple, n={n} k={k}"));
                    }
                }
                if n >= k {
                    let xs: Vec<_> = (0..k).map(|_| random_vector(rng, n)).collect();
                    if let Some(s) = t.absorb(seg_fermionic(&xs)) {
                        if let Some(rep) = t.absorb(check_simple(s.vector(), &SymmetryClass::Fermionic, &opts.rank)) {
                            t.check(rep.simple, || format!("fermionic Segre image not simple, n={n} k={k}"));
                        }
                    }
                }
            }
        }
        for shape in enumerate_partitions(k).unwrap_or_default() {
            for alpha in YoungTableau::standard_tableaux(&shape) {
                for n in shape.num_rows()..=opts.nmax {
                    for _ in 0..opts.trials {
                        alpha_segre_case(&mut t, rng, &alpha, n, &opts.rank);
                    }
                }
            }
        }
    }
    t.finish()
}

/// One `seg_alpha` draw: the output lies in `H^α` and has S-rank `r`.
pub fn alpha_segre_case(t: &mut Tally, rng: &mut ChaCha8Rng, alpha: &YoungTableau, n: usize, rank: &RankOptions) {
    let xs: Vec<_> = (0..alpha.num_rows()).map(|_| random_vector(rng, n)).collect();
    let Some(s) = t.absorb(seg_alpha(alpha, &xs)) else { return };
    let v = s.vector();
    let Some(pv) = t.absorb(projector_alpha(alpha, v)) else { return };
    let leak = pv.max_abs_diff(v) / v.norm();
    t.check(leak <= IDENTITY_TOLERANCE, || format!("seg_alpha output leaves H^{alpha}: {leak:e}"));
    if let Some(r) = t.absorb(s_rank(v, rank)) {
        t.check(r == alpha.num_rows(), || format!("seg_alpha output for {alpha}, n={n} has S-rank {r}"));
    }
}

/// `π^α(ρ_{x_α(1)}⊗…⊗ρ_{x_α(k)})π_α = |π^α i_α(x)⟩⟨π^α i_α(x)|` for unit `x_i`.
fn big_segre_identity(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("big_segre_identity");
    for k in 1..=opts.kmax.min(3) {
        for shape in enumerate_partitions(k).unwrap_or_default() {
            for alpha in YoungTableau::numberings(&shape) {
                for n in 1..=opts.nmax.min(3) {
                    for _ in 0..opts.trials.min(5) {
                        big_segre_case(&mut t, rng, &alpha, n);
                    }
                }
            }
        }
    }
    t.finish()
}

/// One comparison of both sides of the pure-input big-Segre identity.
pub fn big_segre_case(t: &mut Tally, rng: &mut ChaCha8Rng, alpha: &YoungTableau, n: usize) {
    let xs: Vec<_> = (0..alpha.num_rows())
        .map(|_| random_vector(rng, n).normalized().unwrap())
        .collect();
    let ops: Vec<_> = xs
        .iter()
        .map(|x| HermitianOperator::new(outer(x, x)).unwrap())
        .collect();
    let Some(lhs) = t.absorb(big_segre(alpha, &ops)) else { return };
    let Some(emb) = t.absorb(alpha_embedding(alpha, &xs)) else { return };
    let Some(v) = t.absorb(projector_alpha(alpha, &emb)) else { return };
    let err = max_abs_diff(lhs.matrix(), &outer(&v, &v));
    t.check(err <= IDENTITY_TOLERANCE, || format!("big Segre identity off by {err:e} for {alpha}, n={n}"));
}

/// `rank(A⊗B) = rank A · rank B` for densities of constructed rank.
fn prop1_ranks(opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> SuiteResult {
    let mut t = Tally::new("prop1_ranks");
    for da in 1..=opts.nmax {
        for db in 1..=opts.nmax {
            for _ in 0..opts.trials.min(5) {
                let ra = 1 + (rng_index(rng) % da);
                let rb = 1 + (rng_index(rng) % db);
                let (Some(a), Some(b)) = (
                    t.absorb(DensityOperator::new(random_density(rng, da, ra))),
                    t.absorb(DensityOperator::new(random_density(rng, db, rb))),
                ) else {
                    continue;
                };
                let Some(ab) = t.absorb(tensor_op_product(&a, &b)) else { continue };
                let got = (a.rank(&opts.rank), b.rank(&opts.rank), ab.rank(&opts.rank));
                t.check(got == (ra, rb, ra * rb), || {
                    format!("ranks {got:?}, expected ({ra}, {rb}, {}) on dims ({da}, {db})", ra * rb)
                });
            }
        }
    }
    t.finish()
}

fn rng_index(rng: &mut ChaCha8Rng) -> usize {
    use rand::Rng;
    rng.random_range(0..1024)
}

/// The three orbit dimensions at `n = 3`: 7, 5 and 1.
fn orbit_dims(opts: &VerifyOptions) -> SuiteResult {
    let mut t = Tally::new("orbit_dims");
    let b = |i: &[usize]| ComplexTensor::basis(3, i).unwrap();
    let e = |i| ComplexTensor::unit(3, i).unwrap();
    let cases = [
        ("α₁-simple", &b(&[0, 0, 1]) - &b(&[1, 0, 0]), 7),
        ("e∨e∨e", b(&[0, 0, 0]), 5),
        ("e1∧e2∧e3", wedge_all(&[e(0), e(1), e(2)]).unwrap(), 1),
    ];
    for (label, v, expected) in cases {
        if let Some(d) = t.absorb(orbit_dimension(&v, &opts.rank)) {
            t.check(d == expected, || format!("orbit of {label}: {d}, expected {expected}"));
        }
    }
    t.finish()
}

/// One row of the Schur–Weyl dimension table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimsRow {
    pub partition: Partition,
    pub f: u64,
    pub gl_dim: u128,
    pub mu: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DimsTable {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<DimsRow>,
    /// `Σ_λ f^λ · dim V_λ`.
    pub sum: u128,
    /// `n^k`.
    pub total: u128,
    pub complete: bool,
}

/// `f^λ`, `dim V_λ(GL_n)` and `μ(λ)` for every partition of `k`.
pub fn dims_table(n: usize, k: usize) -> Result<DimsTable> {
    let rows: Vec<DimsRow> = enumerate_partitions(k)?
        .into_iter()
        .map(|p| DimsRow {
            f: p.standard_tableaux_count(),
            gl_dim: p.gl_dim(n),
            mu: p.mu(),
            partition: p,
        })
        .collect();
    let sum = rows.iter().map(|r| r.f as u128 * r.gl_dim).sum();
    let total = (n as u128).pow(k as u32);
    Ok(DimsTable {
        n,
        k,
        rows,
        sum,
        total,
        complete: sum == total,
    })
}

fn dims_suite(opts: &VerifyOptions) -> SuiteResult {
    let mut t = Tally::new("dims_table");
    if let Some(table) = t.absorb(dims_table(3, 3)) {
        let got: Vec<(u64, u128)> = table.rows.iter().map(|r| (r.f, r.gl_dim)).collect();
        t.check(got == [(1, 10), (2, 8), (1, 1)], || format!("n=3, k=3 table {got:?}"));
    }
    for n in 1..=opts.nmax.max(3) {
        for k in 1..=opts.kmax.clamp(1, 8) {
            if let Some(table) = t.absorb(dims_table(n, k)) {
                t.check(table.complete, || format!("Σ f·dim = {} ≠ {}^{k}", table.sum, n));
            }
        }
    }
    t.finish()
}

/// Runs every suite; output order is fixed.
pub fn run_verify(opts: &VerifyOptions) -> VerifySummary {
    let seed = opts.seed;
    let suites = vec![
        projector_idempotence(opts, &mut suite_rng(seed, 0)),
        pairing_identities(opts, &mut suite_rng(seed, 1)),
        mu_constants(opts, &mut suite_rng(seed, 2)),
        central_completeness(opts, &mut suite_rng(seed, 3)),
        srank_oracle(opts, &mut suite_rng(seed, 4)),
        relation_equivalence(opts, &mut suite_rng(seed, 5)),
        segre_simplicity(opts, &mut suite_rng(seed, 6)),
        big_segre_identity(opts, &mut suite_rng(seed, 7)),
        prop1_ranks(opts, &mut suite_rng(seed, 8)),
        orbit_dims(opts),
        dims_suite(opts),
    ];
    let mut warnings = Vec::new();
    if opts.trials == 0 {
        warnings.push("trials = 0: randomized suites ran no checks and pass vacuously".to_string());
    }
    VerifySummary {
        passed: suites.iter().all(|s| s.passed),
        suites,
        warnings,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyOptions {
        VerifyOptions {
            trials: 2,
            kmax: 3,
            nmax: 3,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn small_run_passes() {
        let summary = run_verify(&small());
        for s in &summary.suites {
            assert!(s.passed, "{} failed: {:?}", s.name, s.detail);
        }
        assert!(summary.warnings.is_empty());
    }

    #[test]
    fn zero_trials_is_vacuous_with_warning() {
        let summary = run_verify(&VerifyOptions { trials: 0, ..small() });
        assert!(summary.passed);
        assert_eq!(summary.warnings.len(), 1);
    }

    #[test]
    fn corrupted_tolerance_fails_rank_suites() {
        let opts = VerifyOptions {
            rank: RankOptions::new(0.5).unwrap(),
            ..small()
        };
        let summary = run_verify(&opts);
        assert!(!summary.passed);
        let failed: Vec<_> = summary.suites.iter().filter(|s| !s.passed).map(|s| s.name).collect();
        assert!(failed.contains(&"srank_oracle") || failed.contains(&"prop1_ranks"), "{failed:?}");
    }

    #[test]
    fn dims_examples() {
        let t = dims_table(2, 3).unwrap();
        let col = t.rows.iter().find(|r| r.partition.parts() == [1, 1, 1]).unwrap();
        assert_eq!(col.gl_dim, 0);
        assert!(t.complete);
        let t = dims_table(4, 2).unwrap();
        let dims: Vec<_> = t.rows.iter().map(|r| r.gl_dim).collect();
        assert_eq!(dims, vec![10, 6]);
        assert_eq!(t.sum, 16);
    }
}
