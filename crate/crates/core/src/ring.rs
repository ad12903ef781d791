//! The fusion-ring data type: a based ring with nonnegative integer structure
//! constants `N_{ij}^k`, a duality involution, and the unit at index 0.

use crate::error::{AxiomViolation, Error, Identity, Result};

/// Global comparison tolerance for Frobenius-Perron dimensions.
pub const EPS: f64 = 1e-9;

/// A real value counts as an integer when it is within this distance of one.
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// Iteration cap for the Perron eigenvalue search.
pub const POWER_ITERATION_CAP: usize = 10_000;

/// Integer matrix stored row-major as nested vectors.
pub type IntMatrix = Vec<Vec<u64>>;

/// A fusion ring with basis `0..rank`; index 0 is the unit.
///
/// Values built through [`FusionRing::new`] have passed every axiom check.
/// [`FusionRing::new_unchecked`] exists for constructing negative fixtures and
/// for parsers that verify afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRing {
    rank: usize,
    dual: Vec<usize>,
    // N_{ij}^k at (i * rank + j) * rank + k
    constants: Vec<u32>,
    labels: Vec<String>,
}

impl FusionRing {
    /// Builds and validates a ring. `constants` is the dense `rank³` tensor in
    /// `(i, j, k)` order. Empty `labels` get default names `x0, x1, …`.
    pub fn new(
        rank: usize,
        dual: Vec<usize>,
        constants: Vec<u32>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let ring = Self::new_unchecked(rank, dual, constants, labels);
        ring.verify()?;
        Ok(ring)
    }

    /// Builds a ring without checking the axioms. Call [`FusionRing::verify`]
    /// before relying on any derived invariant.
    pub fn new_unchecked(
        rank: usize,
        dual: Vec<usize>,
        constants: Vec<u32>,
        mut labels: Vec<String>,
    ) -> Self {
        if labels.is_empty() {
            labels = (0..rank).map(|i| format!("x{i}")).collect();
        }
        FusionRing {
            rank,
            dual,
            constants,
            labels,
        }
    }

    /// Builds a ring from a closure returning `N_{ij}^k`.
    pub fn from_fn(
        rank: usize,
        dual: Vec<usize>,
        labels: Vec<String>,
        mut n: impl FnMut(usize, usize, usize) -> u32,
    ) -> Result<Self> {
        let mut constants = vec![0; rank * rank * rank];
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    constants[(i * rank + j) * rank + k] = n(i, j, k);
                }
            }
        }
        Self::new(rank, dual, constants, labels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> usize {
        0
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Position of the basis element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank, "label count must equal rank");
        self.labels = labels;
        self
    }

    /// The structure constant `N_{ij}^k = m(x_k, x_i ⊗ x_j)`.
    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        self.constants[(i * self.rank + j) * self.rank + k]
    }

    /// Coefficient vector of `x_i ⊗ x_j`.
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        let start = (i * self.rank + j) * self.rank;
        &self.constants[start..start + self.rank]
    }

    /// Basis indices occurring in `x_i ⊗ x_j`.
    pub fn support(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.product(i, j)
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, _)| k)
    }

    /// The dense tensor, `N_{ij}^k` at `(i * rank + j) * rank + k`.
    pub fn constants(&self) -> &[u32] {
        &self.constants
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        }
    }

    /// Checks every fusion-ring axiom and reports the first violation.
    ///
    /// Checks run in the order shape, involution, unit, duality, reciprocity,
    /// associativity; within each identity index tuples are scanned
    /// lexicographically.
    pub fn verify(&self) -> Result<(), AxiomViolation> {
        let r = self.rank;
        if r == 0 {
            return Err(AxiomViolation::new(Identity::Shape, &[]));
        }
        if self.constants.len() != r * r * r {
            return Err(AxiomViolation::new(Identity::Shape, &[self.constants.len()]));
        }
        if self.dual.len() != r {
            return Err(AxiomViolation::new(Identity::Shape, &[self.dual.len()]));
        }
        if self.labels.len() != r {
            return Err(AxiomViolation::new(Identity::Shape, &[self.labels.len()]));
        }
        if let Some(i) = (0..r).find(|&i| self.dual[i] >= r) {
            return Err(AxiomViolation::new(Identity::Shape, &[i]));
        }

        if self.dual[0] != 0 {
            return Err(AxiomViolation::new(Identity::Involution, &[0]));
        }
        if let Some(i) = (0..r).find(|&i| self.dual[self.dual[i]] != i) {
            return Err(AxiomViolation::new(Identity::Involution, &[i]));
        }

        for j in 0..r {
            for k in 0..r {
                let delta = u32::from(j == k);
                if self.n(0, j, k) != delta {
                    return Err(AxiomViolation::new(Identity::Unit, &[0, j, k]));
                }
                if self.n(j, 0, k) != delta {
                    return Err(AxiomViolation::new(Identity::Unit, &[j, 0, k]));
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                let expected = u32::from(j == self.dual[i]);
                if self.n(i, j, 0) != expected {
                    return Err(AxiomViolation::new(Identity::Duality, &[i, j, 0]));
                }
            }
        }

        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = self.n(i, j, k);
                    if v != self.n(self.dual[i], k, j) || v != self.n(k, self.dual[j], i) {
                        return Err(AxiomViolation::new(Identity::Reciprocity, &[i, j, k]));
                    }
                }
            }
        }

        // sparse supports keep this well below rank^5 on typical rings
        let supports: Vec<Vec<(usize, u128)>> = (0..r * r)
            .map(|ij| {
                (0..r)
                    .filter_map(|m| {
                        let v = self.constants[ij * r + m];
                        (v > 0).then_some((m, u128::from(v)))
                    })
                    .collect()
            })
            .collect();
        let mut left = vec![0u128; r];
        let mut right = vec![0u128; r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    left.fill(0);
                    right.fill(0);
                    for &(m, a) in &supports[i * r + j] {
                        for &(l, b) in &supports[m * r + k] {
                            left[l] += a * b;
                        }
                    }
                    for &(m, a) in &supports[j * r + k] {
                        for &(l, b) in &supports[i * r + m] {
                            right[l] += a * b;
                        }
                    }
                    if let Some(l) = (0..r).find(|&l| left[l] != right[l]) {
                        return Err(AxiomViolation::new(Identity::Associativity, &[i, j, k, l]));
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of left multiplication by `x_i`: `M[k][j] = N_{ij}^k`.
    pub fn mult_matrix(&self, i: usize) -> Result<IntMatrix> {
        self.check_index(i)?;
        let r = self.rank;
        Ok((0..r)
            .map(|k| (0..r).map(|j| u64::from(self.n(i, j, k))).collect())
            .collect())
    }

    /// Coefficient of `x_k` in `x_{w1} ⊗ … ⊗ x_{wt}`.
    pub fn multiplicity(&self, k: usize, word: &[usize]) -> Result<u64> {
        self.check_index(k)?;
        let (&first, rest) = word.split_first().ok_or(Error::EmptyWord)?;
        for &w in word {
            self.check_index(w)?;
        }
        let r = self.rank;
        let mut v = vec![0u64; r];
        v[first] = 1;
        for &w in rest {
            let mut next = vec![0u64; r];
            for (m, &coeff) in v.iter().enumerate() {
                if coeff == 0 {
                    continue;
                }
                for (slot, &n) in next.iter_mut().zip(self.product(m, w)) {
                    let term = coeff.checked_mul(u64::from(n)).ok_or(Error::Overflow)?;
                    *slot = slot.checked_add(term).ok_or(Error::Overflow)?;
                }
            }
            v = next;
        }
        Ok(v[k])
    }

    /// Frobenius-Perron dimension of `x_i`, the Perron eigenvalue of its
    /// left-multiplication matrix.
    ///
    /// Power iteration runs on `M + I` from the all-ones vector; the shift makes
    /// the Perron root strictly dominant even for bipartite (periodic) matrices.
    /// Iteration stops once the Collatz-Wielandt bracket
    /// `min (Av)_k / v_k ≤ ρ ≤ max (Av)_k / v_k` is narrower than [`EPS`].
    pub fn fpdim_object(&self, i: usize) -> Result<f64> {
        self.check_index(i)?;
        let r = self.rank;
        let mut v = vec![1.0f64; r];
        for _ in 0..POWER_ITERATION_CAP {
            // w = (M + I) v
            let mut w = v.clone();
            for j in 0..r {
                if v[j] == 0.0 {
                    continue;
                }
                for (k, &n) in self.product(i, j).iter().enumerate() {
                    if n > 0 {
                        w[k] += f64::from(n) * v[j];
                    }
                }
            }
            let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
            for (wk, vk) in w.iter().zip(&v) {
                let ratio = wk / vk;
                lo = lo.min(ratio);
                hi = hi.max(ratio);
            }
            let scale = w.iter().cloned().fold(0.0f64, f64::max);
            if !(scale.is_finite() && scale > 0.0) {
                break;
            }
            if hi - lo < EPS {
                return Ok(0.5 * (hi + lo) - 1.0);
            }
            v = w.into_iter().map(|x| x / scale).collect();
        }
        Err(Error::NonConvergence {
            index: i,
            iterations: POWER_ITERATION_CAP,
        })
    }

    /// FP dimensions of every basis element, in index order.
    pub fn fpdims(&self) -> Result<Vec<f64>> {
        (0..self.rank).map(|i| self.fpdim_object(i)).collect()
    }

    /// `FPdim C = Σ_i FPdim(x_i)²`.
    pub fn fpdim_ring(&self) -> Result<f64> {
        Ok(self.fpdims()?.iter().map(|d| d * d).sum())
    }

    /// Sum of squared FP dimensions over a subset of the basis.
    pub fn fpdim_of(&self, indices: impl IntoIterator<Item = usize>) -> Result<f64> {
        indices
            .into_iter()
            .map(|i| self.fpdim_object(i).map(|d| d * d))
            .sum()
    }

    pub fn is_commutative(&self) -> bool {
        let r = self.rank;
        (0..r).all(|i| (i + 1..r).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn is_self_dual(&self, i: usize) -> bool {
        self.dual[i] == i
    }

    /// Relabels the basis: new index `perm[old]`. `perm[0]` must be 0 for the
    /// result to keep the unit at index 0.
    pub fn permuted(&self, perm: &[usize]) -> FusionRing {
        let r = self.rank;
        let mut constants = vec![0; r * r * r];
        let mut dual = vec![0; r];
        let mut labels = vec![String::new(); r];
        for i in 0..r {
            dual[perm[i]] = perm[self.dual[i]];
            labels[perm[i]] = self.labels[i].clone();
            for j in 0..r {
                for k in 0..r {
                    constants[(perm[i] * r + perm[j]) * r + perm[k]] = self.n(i, j, k);
                }
            }
        }
        FusionRing::new_unchecked(r, dual, constants, labels)
    }
}

/// True when `x` is within [`INTEGRALITY_TOL`] of an integer.
pub fn is_integral(x: f64) -> bool {
    (x - x.round()).abs() < INTEGRALITY_TOL
}
