//! S-rank and simplicity certificates.
//!
//! The S-rank of `u ∈ H^{⊗k}` is the largest dimension of the space of
//! one-particle vectors `ι_ν σ(u)` reachable by contracting all but one slot
//! against arbitrary `(k−1)`-tensors `ν`. Since `ν` ranges over all of
//! `H^{⊗(k−1)}`, that space is the column space of the unfolding which keeps
//! the surviving slot as column index, so [`s_rank`] takes the maximum of `k`
//! unfolding ranks. [`s_rank_bruteforce`] enumerates every `σ ∈ S_k` instead
//! and is kept as an independent check.
//!
//! A nonzero tensor is simple for its class exactly when its S-rank is the
//! class minimum: `1` for distinguishable and bosonic tensors, `k` for
//! fermionic ones, and the number of rows of the tableau for `H^α`. The
//! quadratic relations (and the Plücker relations for antisymmetric tensors)
//! give a second, independent route for the first three classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{numerical_rank, ComplexMatrix};
use crate::permutation::Permutation;
use crate::tensor::{antisymmetrize, contract, permute, symmetrize, Complex64, ComplexTensor};
use crate::young::{projector_alpha, YoungTableau};

/// Relative tolerance for accepting a tensor as a member of a symmetry class:
/// `‖π v − v‖ ≤ MEMBERSHIP_TOLERANCE · ‖v‖`.
pub const MEMBERSHIP_TOLERANCE: f64 = 1e-8;

/// Largest order accepted by [`s_rank_bruteforce`].
pub const MAX_BRUTEFORCE_ORDER: usize = 5;

/// Singular values below `tolerance × σ_max` count as zero. The same
/// tolerance scales the relation tests, where a violation must exceed
/// `tolerance × ‖u‖²`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RankOptions {
    pub tolerance: f64,
}

impl RankOptions {
    pub const DEFAULT_TOLERANCE: f64 = 1e-9;

    pub fn new(tolerance: f64) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance < 1.0) {
            return Err(Error::InvalidOption(format!(
                "rank tolerance must lie in (0, 1), got {tolerance}"
            )));
        }
        Ok(Self { tolerance })
    }
}

impl Default for RankOptions {
    fn default() -> Self {
        Self {
            tolerance: Self::DEFAULT_TOLERANCE,
        }
    }
}

/// Particle statistics with a quadratic-relation characterization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistics {
    Distinguishable,
    Bosonic,
    Fermionic,
}

impl Statistics {
    pub fn name(self) -> &'static str {
        match self {
            Statistics::Distinguishable => "distinguishable",
            Statistics::Bosonic => "bosonic",
            Statistics::Fermionic => "fermionic",
        }
    }
}

/// Any symmetry class a simplicity check can be run against.
#[derive(Clone, Debug, PartialEq)]
pub enum SymmetryClass {
    Distinguishable,
    Bosonic,
    Fermionic,
    Alpha(YoungTableau),
}

/// A violated relation, with 0-based indices.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `u^I u^J ≠ u^{I'} u^{J'}` where `I'`, `J'` swap the indices at `slot`.
    Quadratic {
        left: Vec<usize>,
        right: Vec<usize>,
        slot: usize,
    },
    /// `w^{[i_1…i_k} w^{i_{k+1}] j_1…j_{k−1}} ≠ 0`.
    Plucker { upper: Vec<usize>, lower: Vec<usize> },
}

impl Witness {
    /// The same witness with every index shifted to 1-based labels.
    pub fn one_based(&self) -> Witness {
        let shift = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
        match self {
            Witness::Quadratic { left, right, slot } => Witness::Quadratic {
                left: shift(left),
                right: shift(right),
                slot: slot + 1,
            },
            Witness::Plucker { upper, lower } => Witness::Plucker {
                upper: shift(upper),
                lower: shift(lower),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimplicityReport {
    pub class: String,
    pub s_rank: usize,
    pub per_slot: Vec<usize>,
    pub minimal_s_rank_for_class: usize,
    /// Verdict of the S-rank criterion.
    pub simple: bool,
    /// Verdict of the relation criterion, when the class has one.
    pub relations_simple: Option<bool>,
    pub witness: Option<Witness>,
    /// Largest relation violation normalized by `‖u‖²`; zero for classes
    /// without a relation system.
    pub residual: f64,
}

impl SimplicityReport {
    /// True when both criteria were computed and disagree.
    pub fn criteria_disagree(&self) -> bool {
        self.relations_simple.is_some_and(|r| r != self.simple)
    }
}

fn check_nonzero(u: &ComplexTensor) -> Result<()> {
    if u.order() == 0 {
        return Err(Error::OutOfRange {
            what: "tensor order",
            value: 0,
            allowed: ">= 1".into(),
        });
    }
    if u.is_zero() {
        return Err(Error::ZeroTensor);
    }
    Ok(())
}

/// The `n^{k−1} × n` matricization keeping `slot` (0-based) as the column index;
/// rows run over the remaining slots in their original order.
pub fn unfolding(u: &ComplexTensor, slot: usize) -> Result<ComplexMatrix> {
    let (n, k) = (u.dim(), u.order());
    if slot >= k {
        return Err(Error::OutOfRange {
            what: "slot",
            value: slot,
            allowed: format!("0..{k}"),
        });
    }
    let stride = n.pow((k - 1 - slot) as u32);
    let mut m = ComplexMatrix::zeros(u.len() / n, n);
    for (flat, c) in u.coeffs().iter().enumerate() {
        let col = (flat / stride) % n;
        let high = flat / (stride * n);
        let low = flat % stride;
        m[(high * stride + low, col)] = *c;
    }
    Ok(m)
}

/// Numerical rank of [`unfolding`]: the dimension of `{ι_ν σ(u)}` for any `σ`
/// that moves `slot` last.
pub fn unfolding_rank(u: &ComplexTensor, slot: usize, opts: &RankOptions) -> Result<usize> {
    check_nonzero(u)?;
    Ok(numerical_rank(&unfolding(u, slot)?.transpose(), opts.tolerance))
}

pub fn s_rank_per_slot(u: &ComplexTensor, opts: &RankOptions) -> Result<Vec<usize>> {
    check_nonzero(u)?;
    (0..u.order()).map(|s| unfolding_rank(u, s, opts)).collect()
}

pub fn s_rank(u: &ComplexTensor, opts: &RankOptions) -> Result<usize> {
    Ok(s_rank_per_slot(u, opts)?.into_iter().max().unwrap_or(0))
}

/// S-rank as the maximum over every `σ ∈ S_k` of the dimension spanned by
/// `ι_ν σ(u)` over all basis tensors `ν ∈ H^{⊗(k−1)}`.
pub fn s_rank_bruteforce(u: &ComplexTensor, opts: &RankOptions) -> Result<usize> {
    check_nonzero(u)?;
    let (n, k) = (u.dim(), u.order());
    if k > MAX_BRUTEFORCE_ORDER {
        return Err(Error::OutOfRange {
            what: "order for brute-force S-rank",
            value: k,
            allowed: format!("<= {MAX_BRUTEFORCE_ORDER}"),
        });
    }
    let shape = ComplexTensor::zeros(n, k - 1);
    let basis: Vec<ComplexTensor> = (0..shape.len())
        .map(|i| ComplexTensor::basis(n, &shape.multi_index(i)))
        .collect::<Result<_>>()?;
    let mut best = 0;
    for sigma in Permutation::all(k) {
        let moved = permute(u, &sigma)?;
        let mut span = ComplexMatrix::zeros(n, basis.len());
        for (col, nu) in basis.iter().enumerate() {
            let image = contract(nu, &moved)?;
            for (row, c) in image.coeffs().iter().enumerate() {
                span[(row, col)] = *c;
            }
        }
        best = best.max(numerical_rank(&span, opts.tolerance));
    }
    Ok(best)
}

fn membership_defect(u: &ComplexTensor, projected: &ComplexTensor) -> f64 {
    (projected - u).norm() / u.norm()
}

pub fn is_symmetric(u: &ComplexTensor) -> bool {
    membership_defect(u, &symmetrize(u)) <= MEMBERSHIP_TOLERANCE
}

pub fn is_antisymmetric(u: &ComplexTensor) -> bool {
    membership_defect(u, &antisymmetrize(u)) <= MEMBERSHIP_TOLERANCE
}

/// Whether `π^α v ≈ v`.
pub fn is_alpha_member(v: &ComplexTensor, alpha: &YoungTableau) -> Result<bool> {
    Ok(membership_defect(v, &projector_alpha(alpha, v)?) <= MEMBERSHIP_TOLERANCE)
}

fn require_class(u: &ComplexTensor, stats: Statistics) -> Result<()> {
    match stats {
        Statistics::Distinguishable => Ok(()),
        Statistics::Bosonic if is_symmetric(u) => Ok(()),
        Statistics::Fermionic if is_antisymmetric(u) => Ok(()),
        Statistics::Bosonic => Err(Error::NotInClass("tensor is not symmetric".into())),
        Statistics::Fermionic => Err(Error::NotInClass("tensor is not antisymmetric".into())),
    }
}

/// Outcome of a full scan over a relation system.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RelationScan {
    pub sum_sq: f64,
    pub max_abs: f64,
    pub first: Option<Witness>,
}

impl RelationScan {
    fn new() -> Self {
        Self {
            sum_sq: 0.0,
            max_abs: 0.0,
            first: None,
        }
    }

    fn record(&mut self, value: Complex64, threshold: f64, witness: impl FnOnce() -> Witness) {
        let abs = value.norm();
        self.sum_sq += abs * abs;
        self.max_abs = self.max_abs.max(abs);
        if abs > threshold && self.first.is_none() {
            self.first = Some(witness());
        }
    }
}

/// Scans `u^I u^J − u^{I'} u^{J'}` over index pairs in lexicographic order of
/// `(I, J, slot)`, restricted to `slots`.
fn scan_swaps(u: &ComplexTensor, slots: &[usize], threshold: f64) -> RelationScan {
    let (n, k) = (u.dim(), u.order());
    let c = u.coeffs();
    let strides: Vec<usize> = (0..k).map(|s| n.pow((k - 1 - s) as u32)).collect();
    let mut scan = RelationScan::new();
    for (i, &ui) in c.iter().enumerate() {
        for (j, &uj) in c.iter().enumerate() {
            for &s in slots {
                let is = (i / strides[s]) % n;
                let js = (j / strides[s]) % n;
                if is == js {
                    continue;
                }
                let i2 = i + js * strides[s] - is * strides[s];
                let j2 = j + is * strides[s] - js * strides[s];
                let value = ui * uj - c[i2] * c[j2];
                scan.record(value, threshold, || Witness::Quadratic {
                    left: u.multi_index(i),
                    right: u.multi_index(j),
                    slot: s,
                });
            }
        }
    }
    scan
}

/// Strictly increasing tuples of length `len` from `0..n`, in lexicographic order.
fn increasing_tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, len, &mut Vec::new(), &mut out);
    out
}

/// Plücker expressions `(1/(k+1)!) Σ_π (−1)^π w^{i_π(1)…i_π(k)} w^{i_π(k+1) j_1…j_{k−1}}`
/// over increasing `i` and `j` tuples; all other index choices are signed
/// copies of these or vanish.
fn scan_plucker(w: &ComplexTensor, threshold: f64) -> Result<RelationScan> {
    let (n, k) = (w.dim(), w.order());
    let perms = Permutation::all(k + 1);
    let norm = 1.0 / perms.len() as f64;
    let mut scan = RelationScan::new();
    let mut first_idx = vec![0; k];
    let mut second_idx = vec![0; k];
    for upper in increasing_tuples(n, k + 1) {
        for lower in increasing_tuples(n, k - 1) {
            second_idx[1..].copy_from_slice(&lower);
            let mut value = Complex64::new(0.0, 0.0);
            for p in &perms {
                for (m, slot) in first_idx.iter_mut().enumerate() {
                    *slot = upper[p.apply(m)];
                }
                second_idx[0] = upper[p.apply(k)];
                let term = w.get(&first_idx)? * w.get(&second_idx)?;
                value += term * p.sign() as f64;
            }
            value *= norm;
            scan.record(value, threshold, || Witness::Plucker {
                upper: upper.clone(),
                lower: lower.clone(),
            });
        }
    }
    Ok(scan)
}

pub(crate) fn relation_scan(u: &ComplexTensor, stats: Statistics, threshold: f64) -> Result<RelationScan> {
    match stats {
        Statistics::Distinguishable => {
            let slots: Vec<usize> = (0..u.order()).collect();
            Ok(scan_swaps(u, &slots, threshold))
        }
        Statistics::Bosonic => Ok(scan_swaps(u, &[u.order() - 1], threshold)),
        Statistics::Fermionic => scan_plucker(u, threshold),
    }
}

/// Sum of squared relation violations over `‖u‖⁴`, without class checks.
/// Homogeneous of degree zero; zero exactly on simple tensors of the class.
pub(crate) fn residual_unchecked(u: &ComplexTensor, stats: Statistics) -> f64 {
    let norm_sq = u.norm_sqr();
    if norm_sq <= 0.0 || u.order() == 0 {
        return 0.0;
    }
    let scan = relation_scan(u, stats, f64::INFINITY).expect("indices in range");
    scan.sum_sq / (norm_sq * norm_sq)
}

/// Normalized quadratic residual: the sum of squared moduli of all relation
/// violations for the class, divided by `‖u‖⁴`.
pub fn quadratic_residual(u: &ComplexTensor, stats: Statistics) -> Result<f64> {
    check_nonzero(u)?;
    require_class(u, stats)?;
    Ok(residual_unchecked(u, stats))
}

fn report_with_relations(
    u: &ComplexTensor,
    stats: Statistics,
    minimal: usize,
    opts: &RankOptions,
) -> Result<SimplicityReport> {
    let per_slot = s_rank_per_slot(u, opts)?;
    let s_rank = per_slot.iter().copied().max().unwrap_or(0);
    let norm_sq = u.norm_sqr();
    let scan = relation_scan(u, stats, opts.tolerance * norm_sq)?;
    let simple = s_rank == minimal;
    Ok(SimplicityReport {
        class: stats.name().into(),
        s_rank,
        per_slot,
        minimal_s_rank_for_class: minimal,
        simple,
        relations_simple: Some(scan.first.is_none()),
        witness: if simple { None } else { scan.first },
        residual: scan.max_abs / norm_sq,
    })
}

/// Distinguishable particles: simple iff S-rank 1 iff no quadratic relation fails.
pub fn check_simple_general(u: &ComplexTensor, opts: &RankOptions) -> Result<SimplicityReport> {
    check_nonzero(u)?;
    report_with_relations(u, Statistics::Distinguishable, 1, opts)
}

/// Symmetric tensors: simple iff `v = f∨…∨f` iff S-rank 1.
pub fn check_simple_bosonic(v: &ComplexTensor, opts: &RankOptions) -> Result<SimplicityReport> {
    check_nonzero(v)?;
    require_class(v, Statistics::Bosonic)?;
    report_with_relations(v, Statistics::Bosonic, 1, opts)
}

/// Antisymmetric tensors: simple iff `w = f_1∧…∧f_k` iff S-rank `k` iff the
/// Plücker relations hold.
pub fn check_simple_fermionic(w: &ComplexTensor, opts: &RankOptions) -> Result<SimplicityReport> {
    check_nonzero(w)?;
    require_class(w, Statistics::Fermionic)?;
    report_with_relations(w, Statistics::Fermionic, w.order(), opts)
}

/// Tensors in `H^α`: simple iff the S-rank equals the number of rows of `α`.
pub fn check_simple_alpha(
    v: &ComplexTensor,
    alpha: &YoungTableau,
    opts: &RankOptions,
) -> Result<SimplicityReport> {
    check_nonzero(v)?;
    if v.order() != alpha.size() {
        return Err(Error::OrderMismatch {
            expected: alpha.size(),
            found: v.order(),
        });
    }
    if !is_alpha_member(v, alpha)? {
        return Err(Error::NotInClass(format!("tensor is not in H^{alpha}")));
    }
    let per_slot = s_rank_per_slot(v, opts)?;
    let s_rank = per_slot.iter().copied().max().unwrap_or(0);
    let minimal = alpha.num_rows();
    Ok(SimplicityReport {
        class: format!("alpha {alpha}"),
        s_rank,
        per_slot,
        minimal_s_rank_for_class: minimal,
        simple: s_rank == minimal,
        relations_simple: None,
        witness: None,
        residual: 0.0,
    })
}

pub fn check_simple(u: &ComplexTensor, class: &SymmetryClass, opts: &RankOptions) -> Result<SimplicityReport> {
    match class {
        SymmetryClass::Distinguishable => check_simple_general(u, opts),
        SymmetryClass::Bosonic => check_simple_bosonic(u, opts),
        SymmetryClass::Fermionic => check_simple_fermionic(u, opts),
        SymmetryClass::Alpha(alpha) => check_simple_alpha(u, alpha, opts),
    }
}

/// `|GHZ_k⟩ = (|0…0⟩ + |1…1⟩)/√2` in `n ≥ 2` dimensions.
pub fn ghz(n: usize, k: usize) -> Result<ComplexTensor> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "dimension",
            value: n,
            allowed: ">= 2".into(),
        });
    }
    let a = ComplexTensor::basis(n, &vec![0; k])?;
    let b = ComplexTensor::basis(n, &vec![1; k])?;
    Ok((a + b) * std::f64::consts::FRAC_1_SQRT_2)
}

/// `|W_k⟩ = (|0…01⟩ + |0…10⟩ + … + |10…0⟩)/√k` in `n ≥ 2` dimensions.
pub fn w_state(n: usize, k: usize) -> Result<ComplexTensor> {
    if n < 2 || k == 0 {
        return Err(Error::OutOfRange {
            what: "dimension/order",
            value: n.min(k),
            allowed: "n >= 2, k >= 1".into(),
        });
    }
    let mut t = ComplexTensor::zeros(n, k);
    for pos in 0..k {
        let mut idx = vec![0; k];
        idx[pos] = 1;
        t += &ComplexTensor::basis(n, &idx)?;
    }
    Ok(t * (1.0 / (k as f64).sqrt()))
}
