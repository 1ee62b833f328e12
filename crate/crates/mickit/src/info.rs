//! Discrete entropy and mutual information primitives.
//!
//! Everything here operates on explicit probability mass vectors and
//! matrices. Entropies are in nats with the convention `0·ln 0 = 0`.
//! Inputs that fail normalization by more than [`MASS_TOL`] are rejected
//! rather than silently renormalized, so ingestion bugs surface early.

use thiserror::Error;

/// Tolerance on total mass and marginal consistency checks.
pub const MASS_TOL: f64 = 1e-12;

/// Errors for mass-matrix construction and the information primitives.
#[derive(Debug, Error)]
pub enum InfoError {
    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("negative or non-finite mass {value} at index {idx}")]
    BadMass { idx: usize, value: f64 },

    #[error("mass not normalized: sum = {sum}")]
    NotNormalized { sum: f64 },

    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },

    #[error("operation requires at least {required} rows and columns, got {rows}x{cols}")]
    TooFewParts { required: usize, rows: usize, cols: usize },

    #[error("perturbation drives cell ({row}, {col}) negative ({value})")]
    NegativeCell { row: usize, col: usize, value: f64 },

    #[error("perturbation shape {0}x{1} does not match joint {2}x{3}")]
    PerturbationShape(usize, usize, usize, usize),
}

/// `x ln x` with `0·ln 0 = 0`.
#[inline]
pub(crate) fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

/// Binary entropy `H_b(p) = -p ln p - (1-p) ln(1-p)` in nats.
pub fn binary_entropy(p: f64) -> Result<f64, InfoError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(InfoError::ProbabilityOutOfRange(p));
    }
    Ok(-xlnx(p) - xlnx(1.0 - p))
}

/// Shannon entropy of a probability vector, in nats.
///
/// The vector must be non-negative and sum to 1 within [`MASS_TOL`].
pub fn entropy(dist: &[f64]) -> Result<f64, InfoError> {
    let mut sum = 0.0;
    for (idx, &p) in dist.iter().enumerate() {
        if !p.is_finite() || p < 0.0 {
            return Err(InfoError::BadMass { idx, value: p });
        }
        sum += p;
    }
    if (sum - 1.0).abs() > MASS_TOL {
        return Err(InfoError::NotNormalized { sum });
    }
    Ok(-dist.iter().copied().map(xlnx).sum::<f64>())
}

/// A joint probability mass matrix over the cells of a grid, with cached
/// marginals. Rows index the y-axis partition, columns the x-axis one;
/// rows or columns of zero mass are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteJoint {
    rows: usize,
    cols: usize,
    mass: Vec<f64>,
    row_marginals: Vec<f64>,
    col_marginals: Vec<f64>,
}

impl DiscreteJoint {
    /// Builds a joint from a row-major mass matrix. Entries must be
    /// non-negative and sum to 1 within [`MASS_TOL`].
    pub fn new(rows: usize, cols: usize, mass: Vec<f64>) -> Result<Self, InfoError> {
        if rows == 0 || cols == 0 || mass.len() != rows * cols {
            return Err(InfoError::ShapeMismatch { rows, cols, len: mass.len() });
        }
        let mut total = 0.0;
        for (idx, &m) in mass.iter().enumerate() {
            if !m.is_finite() || m < 0.0 {
                return Err(InfoError::BadMass { idx, value: m });
            }
            total += m;
        }
        if (total - 1.0).abs() > MASS_TOL {
            return Err(InfoError::NotNormalized { sum: total });
        }
        let mut row_marginals = vec![0.0; rows];
        let mut col_marginals = vec![0.0; cols];
        for r in 0..rows {
            for c in 0..cols {
                let m = mass[r * cols + c];
                row_marginals[r] += m;
                col_marginals[c] += m;
            }
        }
        Ok(Self { rows, cols, mass, row_marginals, col_marginals })
    }

    /// Builds a joint from raw cell counts.
    pub fn from_counts(rows: usize, cols: usize, counts: &[usize]) -> Result<Self, InfoError> {
        let total: usize = counts.iter().sum();
        if total == 0 {
            return Err(InfoError::NotNormalized { sum: 0.0 });
        }
        let mass = counts.iter().map(|&c| c as f64 / total as f64).collect();
        Self::new(rows, cols, mass)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mass(&self, row: usize, col: usize) -> f64 {
        self.mass[row * self.cols + col]
    }

    pub fn masses(&self) -> &[f64] {
        &self.mass
    }

    pub fn row_marginals(&self) -> &[f64] {
        &self.row_marginals
    }

    pub fn col_marginals(&self) -> &[f64] {
        &self.col_marginals
    }

    /// Merges contiguous runs of rows. `row_groups` are boundary indices
    /// (exclusive prefix ends) splitting `0..rows` into intervals.
    pub fn coarsen_rows(&self, boundaries: &[usize]) -> DiscreteJoint {
        let mut starts = vec![0usize];
        starts.extend_from_slice(boundaries);
        let mut ends = boundaries.to_vec();
        ends.push(self.rows);
        let groups = starts.len();
        let mut mass = vec![0.0; groups * self.cols];
        for (g, (&a, &b)) in starts.iter().zip(ends.iter()).enumerate() {
            for r in a..b {
                for c in 0..self.cols {
                    mass[g * self.cols + c] += self.mass[r * self.cols + c];
                }
            }
        }
        // Sums of valid masses stay valid.
        DiscreteJoint::new(groups, self.cols, mass).expect("coarsening preserves validity")
    }

    /// Transposes rows and columns.
    pub fn transposed(&self) -> DiscreteJoint {
        let mut mass = vec![0.0; self.rows * self.cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                mass[c * self.rows + r] = self.mass[r * self.cols + c];
            }
        }
        DiscreteJoint {
            rows: self.cols,
            cols: self.rows,
            mass,
            row_marginals: self.col_marginals.clone(),
            col_marginals: self.row_marginals.clone(),
        }
    }
}

/// Mutual information of a joint distribution, in nats.
///
/// Computed as `Σ p ln(p / (p_row p_col))`, which is exactly zero on
/// product distributions and non-negative up to rounding.
pub fn mutual_information(joint: &DiscreteJoint) -> f64 {
    let mut i = 0.0;
    for r in 0..joint.rows {
        let pr = joint.row_marginals[r];
        if pr == 0.0 {
            continue;
        }
        for c in 0..joint.cols {
            let p = joint.mass[r * joint.cols + c];
            if p > 0.0 {
                i += p * (p / (pr * joint.col_marginals[c])).ln();
            }
        }
    }
    i.max(0.0)
}

/// Mutual information normalized by `ln min{k, ℓ}`, where `k` and `ℓ`
/// count rows and columns. Requires at least a 2x2 shape.
pub fn normalized_mi(joint: &DiscreteJoint) -> Result<f64, InfoError> {
    if joint.rows < 2 || joint.cols < 2 {
        return Err(InfoError::TooFewParts { required: 2, rows: joint.rows, cols: joint.cols });
    }
    let denom = (joint.rows.min(joint.cols) as f64).ln();
    Ok((mutual_information(joint) / denom).clamp(0.0, 1.0))
}

/// Linfoot informational correlation, `1 - 2^(-2 I_bits)`.
///
/// With `I` in nats this reduces to `1 - exp(-2 I)`.
pub fn linfoot(joint: &DiscreteJoint) -> f64 {
    1.0 - (-2.0 * mutual_information(joint)).exp()
}

/// A signed mass change per cell. `total_moved` is the total positive
/// mass entering cells, i.e. half the L1 size of a balanced move.
#[derive(Debug, Clone)]
pub struct PerturbationSpec {
    rows: usize,
    cols: usize,
    deltas: Vec<f64>,
    total_moved: f64,
}

impl PerturbationSpec {
    pub fn new(rows: usize, cols: usize, deltas: Vec<f64>) -> Result<Self, InfoError> {
        if rows == 0 || cols == 0 || deltas.len() != rows * cols {
            return Err(InfoError::ShapeMismatch { rows, cols, len: deltas.len() });
        }
        for (idx, &d) in deltas.iter().enumerate() {
            if !d.is_finite() {
                return Err(InfoError::BadMass { idx, value: d });
            }
        }
        let total_moved = deltas.iter().filter(|d| **d > 0.0).sum();
        Ok(Self { rows, cols, deltas, total_moved })
    }

    pub fn total_moved(&self) -> f64 {
        self.total_moved
    }

    pub fn deltas(&self) -> &[f64] {
        &self.deltas
    }
}

/// Applies a perturbation to a joint and renormalizes.
///
/// Fails if any resulting cell would be negative (beyond rounding).
pub fn perturb(joint: &DiscreteJoint, spec: &PerturbationSpec) -> Result<DiscreteJoint, InfoError> {
    if spec.rows != joint.rows || spec.cols != joint.cols {
        return Err(InfoError::PerturbationShape(spec.rows, spec.cols, joint.rows, joint.cols));
    }
    let mut mass = Vec::with_capacity(joint.mass.len());
    let mut total = 0.0;
    for (idx, (&m, &d)) in joint.mass.iter().zip(spec.deltas.iter()).enumerate() {
        let v = m + d;
        if v < -MASS_TOL {
            return Err(InfoError::NegativeCell {
                row: idx / joint.cols,
                col: idx % joint.cols,
                value: v,
            });
        }
        let v = v.max(0.0);
        total += v;
        mass.push(v);
    }
    if total <= 0.0 {
        return Err(InfoError::NotNormalized { sum: total });
    }
    for v in &mut mass {
        *v /= total;
    }
    DiscreteJoint::new(joint.rows, joint.cols, mass)
}
