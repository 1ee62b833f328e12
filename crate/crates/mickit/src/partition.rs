//! Partitions, grids, count equipartitions, and the dynamic program that
//! exactly maximizes mutual information over one-dimensional coarsenings
//! of a master grid.
//!
//! Conventions, fixed across the crate:
//!
//! - `k` always counts the y-axis parts (rows), `ℓ` the x-axis parts
//!   (columns). A `k`-by-`ℓ` grid has `k` rows and `ℓ` columns.
//! - Sample partitions live on ranks: cuts are only placed between
//!   consecutive distinct values, so a dynamic program over the full rank
//!   master is exact over all real-valued partitions of the axis. Equal
//!   values are inseparable.
//! - Ties in the optimizers break toward fewer parts, then toward the
//!   leftmost final cut.

use crate::info::{xlnx, DiscreteJoint};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("cuts must be strictly increasing, got {0} then {1}")]
    CutsNotIncreasing(f64, f64),

    #[error("need at least {required} parts, got {got}")]
    TooFewParts { required: usize, got: usize },

    #[error("bin count {m} exceeds sample size {n}")]
    TooManyBins { m: usize, n: usize },

    #[error("axis values must be sorted")]
    UnsortedValues,

    #[error("empty sample")]
    EmptySample,

    #[error("master has {m} cells on the free axis; exhaustive search allows at most {max}")]
    MasterTooLarge { m: usize, max: usize },

    #[error("master boundary list has {got} entries, expected {expected}")]
    BoundaryMismatch { got: usize, expected: usize },
}

/// Which axis of a joint an operation applies to. `Rows` is the y axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Rows,
    Cols,
}

/// A one-dimensional partition given by strictly increasing cut positions.
/// `parts() == cuts.len() + 1`. For sample-derived partitions the cuts sit
/// between consecutive distinct order statistics; for density-derived ones
/// they are positions in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    cuts: Vec<f64>,
}

impl Partition {
    pub fn new(cuts: Vec<f64>) -> Result<Self, PartitionError> {
        for w in cuts.windows(2) {
            if !(w[0] < w[1]) {
                return Err(PartitionError::CutsNotIncreasing(w[0], w[1]));
            }
        }
        Ok(Self { cuts })
    }

    /// The trivial single-part partition.
    pub fn whole() -> Self {
        Self { cuts: Vec::new() }
    }

    pub fn cuts(&self) -> &[f64] {
        &self.cuts
    }

    pub fn parts(&self) -> usize {
        self.cuts.len() + 1
    }

    /// Index of the cell containing `v`: cells are half-open intervals
    /// `[cut_{i-1}, cut_i)`, so a value equal to a cut falls to its right.
    pub fn cell_of(&self, v: f64) -> usize {
        self.cuts.partition_point(|c| *c <= v)
    }
}

/// A two-dimensional grid: one partition per axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub x_partition: Partition,
    pub y_partition: Partition,
}

impl Grid {
    pub fn new(x_partition: Partition, y_partition: Partition) -> Self {
        Self { x_partition, y_partition }
    }

    /// Number of rows (y parts).
    pub fn rows(&self) -> usize {
        self.y_partition.parts()
    }

    /// Number of columns (x parts).
    pub fn cols(&self) -> usize {
        self.x_partition.parts()
    }
}

/// A joint over a fine master grid together with the identity of the axis
/// that is free for optimization. `free_boundaries` are the value-space
/// positions of the master cell boundaries along the free axis (length =
/// free cells − 1); they become the cut positions of optimized partitions.
#[derive(Debug, Clone)]
pub struct MasterJoint {
    joint: DiscreteJoint,
    free: Axis,
    free_boundaries: Vec<f64>,
}

impl MasterJoint {
    pub fn new(joint: DiscreteJoint, free: Axis) -> Self {
        let m = match free {
            Axis::Rows => joint.rows(),
            Axis::Cols => joint.cols(),
        };
        let free_boundaries = (1..m).map(|i| i as f64).collect();
        Self { joint, free, free_boundaries }
    }

    pub fn with_boundaries(
        joint: DiscreteJoint,
        free: Axis,
        free_boundaries: Vec<f64>,
    ) -> Result<Self, PartitionError> {
        let m = match free {
            Axis::Rows => joint.rows(),
            Axis::Cols => joint.cols(),
        };
        if free_boundaries.len() != m - 1 {
            return Err(PartitionError::BoundaryMismatch {
                got: free_boundaries.len(),
                expected: m - 1,
            });
        }
        Ok(Self { joint, free, free_boundaries })
    }

    pub fn joint(&self) -> &DiscreteJoint {
        &self.joint
    }

    pub fn free_axis(&self) -> Axis {
        self.free
    }

    pub fn free_cells(&self) -> usize {
        match self.free {
            Axis::Rows => self.joint.rows(),
            Axis::Cols => self.joint.cols(),
        }
    }

    /// The joint oriented so the free axis is the row axis.
    fn rows_free(&self) -> DiscreteJoint {
        match self.free {
            Axis::Rows => self.joint.clone(),
            Axis::Cols => self.joint.transposed(),
        }
    }
}

/// Result of a count equipartition. `exact` is false when fewer than the
/// requested number of parts were feasible (more bins than distinct values).
#[derive(Debug, Clone)]
pub struct Equipartition {
    pub partition: Partition,
    /// Count-space boundaries: element `b` means "first `b` points left".
    pub boundaries: Vec<usize>,
    pub counts: Vec<usize>,
    pub exact: bool,
}

/// Splits a sorted sample into `m` bins with counts as equal as the tie
/// structure allows. Cuts are placed only between consecutive distinct
/// values; each boundary goes to the feasible gap nearest its ideal
/// quantile, leftmost on ties. If fewer than `m` distinct values exist,
/// the finest feasible partition is returned with `exact = false`.
pub fn equipartition_counts(values: &[f64], m: usize) -> Result<Equipartition, PartitionError> {
    let n = values.len();
    if n == 0 {
        return Err(PartitionError::EmptySample);
    }
    if m < 1 {
        return Err(PartitionError::TooFewParts { required: 1, got: m });
    }
    if m > n {
        return Err(PartitionError::TooManyBins { m, n });
    }
    if values.windows(2).any(|w| w[0] > w[1]) {
        return Err(PartitionError::UnsortedValues);
    }

    let feasible: Vec<usize> = (1..n).filter(|&i| values[i - 1] < values[i]).collect();
    let distinct = feasible.len() + 1;

    let boundaries: Vec<usize> = if distinct < m {
        feasible.clone()
    } else {
        let mut chosen = Vec::with_capacity(m - 1);
        let mut lo = 0usize; // index into feasible of the next usable gap
        for j in 1..m {
            let ideal = j as f64 * n as f64 / m as f64;
            // Nearest feasible gap to the ideal quantile, at or after `lo`,
            // leaving enough gaps for the remaining boundaries.
            let hi = feasible.len() - (m - 1 - j);
            let split = feasible[lo..hi].partition_point(|&g| (g as f64) < ideal);
            let cand_right = lo + split;
            let pick = if cand_right == lo {
                lo
            } else if cand_right == hi {
                hi - 1
            } else {
                let left = feasible[cand_right - 1] as f64;
                let right = feasible[cand_right] as f64;
                // Leftmost wins exact ties.
                if (ideal - left) <= (right - ideal) {
                    cand_right - 1
                } else {
                    cand_right
                }
            };
            chosen.push(feasible[pick]);
            lo = pick + 1;
        }
        chosen
    };

    let cuts = boundaries.iter().map(|&b| 0.5 * (values[b - 1] + values[b])).collect();
    let mut counts = Vec::with_capacity(boundaries.len() + 1);
    let mut prev = 0usize;
    for &b in &boundaries {
        counts.push(b - prev);
        prev = b;
    }
    counts.push(n - prev);
    Ok(Equipartition {
        partition: Partition::new(cuts)?,
        exact: counts.len() == m,
        boundaries,
        counts,
    })
}

/// Bins a sample into the cells of a grid. Cell `(row, col)` mass is the
/// fraction of points falling in it.
pub fn apply_grid(points: &[(f64, f64)], grid: &Grid) -> Result<DiscreteJoint, PartitionError> {
    if points.is_empty() {
        return Err(PartitionError::EmptySample);
    }
    let rows = grid.rows();
    let cols = grid.cols();
    let mut counts = vec![0usize; rows * cols];
    for &(x, y) in points {
        let r = grid.y_partition.cell_of(y);
        let c = grid.x_partition.cell_of(x);
        counts[r * cols + c] += 1;
    }
    Ok(DiscreteJoint::from_counts(rows, cols, &counts).expect("counts are nonempty"))
}

/// Dynamic-programming tables for coarsening a master axis: the best
/// interval-score sum for each exact part count 1..=p_max, plus backtrack
/// arguments for cut reconstruction.
pub(crate) struct DpTable {
    /// `score[p-1]` = best Σ interval scores over exactly `p` nonempty
    /// contiguous groups (monotone closure applied by callers).
    pub score_by_parts: Vec<f64>,
    /// `args[i * p_max + (p-1)]` = leftmost optimal previous boundary for
    /// state (prefix i, exactly p parts); only meaningful for p ≥ 2.
    args: Vec<u32>,
    p_max: usize,
    m: usize,
}

impl DpTable {
    /// Boundary indices (exclusive prefix ends) of the optimal coarsening
    /// into exactly `p` parts.
    pub fn boundaries(&self, p: usize) -> Vec<usize> {
        let mut cuts = Vec::with_capacity(p - 1);
        let mut i = self.m;
        for pp in (2..=p).rev() {
            let j = self.args[(i - 1) * self.p_max + (pp - 1)] as usize;
            cuts.push(j);
            i = j;
        }
        cuts.reverse();
        cuts
    }
}

/// Exact DP over a dense master: `rows_mass` is the m×c cell-mass matrix
/// with the free axis on rows. Interval score of `[a, b)` is
/// `Σ_j φ(S_j) − φ(t)` with `φ(x) = x ln x`, so that the mutual
/// information of a coarsening is `H(fixed axis) + Σ scores`.
pub(crate) fn dp_dense(rows_mass: &[f64], m: usize, c: usize, p_max: usize) -> DpTable {
    let p_max = p_max.min(m);
    let mut args = vec![0u32; m * p_max];
    // f[j * p_max + (p-1)] = best score over prefix j with exactly p parts.
    let mut f = vec![f64::NEG_INFINITY; (m + 1) * p_max];

    // Base layer p = 1 in one ascending sweep.
    {
        let mut s = vec![0.0f64; c];
        let mut sum_phi = 0.0;
        let mut t = 0.0;
        for i in 1..=m {
            for j in 0..c {
                let v = rows_mass[(i - 1) * c + j];
                if v > 0.0 {
                    let old = s[j];
                    s[j] = old + v;
                    sum_phi -= xlnx(old);
                    sum_phi += xlnx(s[j]);
                    t += v;
                }
            }
            f[i * p_max] = sum_phi - xlnx(t);
        }
    }

    let mut s = vec![0.0f64; c];
    for i in 1..=m {
        let top = p_max.min(i);
        if top < 2 {
            continue;
        }
        s.iter_mut().for_each(|v| *v = 0.0);
        let mut sum_phi = 0.0;
        let mut t = 0.0;
        for j in (1..i).rev() {
            // grow interval [j, i) by row j
            for col in 0..c {
                let v = rows_mass[j * c + col];
                if v > 0.0 {
                    let old = s[col];
                    s[col] = old + v;
                    sum_phi -= xlnx(old);
                    sum_phi += xlnx(s[col]);
                    t += v;
                }
            }
            let w = sum_phi - xlnx(t);
            let fj = &f[j * p_max..j * p_max + p_max];
            for p in 2..=top.min(j + 1) {
                let cand = fj[p - 2] + w;
                let slot = i * p_max + (p - 1);
                if cand > f[slot] {
                    f[slot] = cand;
                    args[(i - 1) * p_max + (p - 1)] = j as u32;
                }
            }
        }
    }

    let score_by_parts = (1..=p_max).map(|p| f[m * p_max + (p - 1)]).collect();
    DpTable { score_by_parts, args, p_max, m }
}

/// Exact DP over a sample master where every point has mass `1/n`.
/// Rows are tie groups along the free axis; `row_start` has length m+1 and
/// `point_col[row_start[r]..row_start[r+1]]` are the fixed-axis cells of
/// the points in row `r`. `phi[c] = (c/n) ln(c/n)`.
pub(crate) fn dp_points(
    row_start: &[u32],
    point_col: &[u16],
    c: usize,
    phi: &[f64],
    p_max: usize,
) -> DpTable {
    let m = row_start.len() - 1;
    let p_max = p_max.min(m);
    let mut args = vec![0u32; m * p_max];
    let mut f = vec![f64::NEG_INFINITY; (m + 1) * p_max];

    let mut s = vec![0u32; c];
    // Base layer p = 1.
    {
        let mut sum_phi = 0.0;
        for i in 1..=m {
            for &pc in &point_col[row_start[i - 1] as usize..row_start[i] as usize] {
                let slot = &mut s[pc as usize];
                let old = *slot as usize;
                *slot += 1;
                sum_phi -= phi[old];
                sum_phi += phi[old + 1];
            }
            f[i * p_max] = sum_phi - phi[row_start[i] as usize];
        }
    }

    for i in 1..=m {
        let top = p_max.min(i);
        if top < 2 {
            continue;
        }
        s.iter_mut().for_each(|v| *v = 0);
        let mut sum_phi = 0.0;
        let base_count = row_start[i] as usize;
        for j in (1..i).rev() {
            for &pc in &point_col[row_start[j] as usize..row_start[j + 1] as usize] {
                let slot = &mut s[pc as usize];
                let old = *slot as usize;
                *slot += 1;
                sum_phi -= phi[old];
                sum_phi += phi[old + 1];
            }
            let w = sum_phi - phi[base_count - row_start[j] as usize];
            let fj = &f[j * p_max..j * p_max + p_max];
            for p in 2..=top.min(j + 1) {
                let cand = fj[p - 2] + w;
                let slot = i * p_max + (p - 1);
                if cand > f[slot] {
                    f[slot] = cand;
                    args[(i - 1) * p_max + (p - 1)] = j as u32;
                }
            }
        }
    }

    let score_by_parts = (1..=p_max).map(|p| f[m * p_max + (p - 1)]).collect();
    DpTable { score_by_parts, args, p_max, m }
}

fn coarsened_info(master_rows_free: &DiscreteJoint, boundaries: &[usize]) -> f64 {
    crate::info::mutual_information(&master_rows_free.coarsen_rows(boundaries))
}

/// Exactly maximizes mutual information over coarsenings of the free axis
/// of `master` into at most `k` parts, holding the other axis fixed.
///
/// Returns the optimal partition (cuts in the master's boundary positions)
/// and the achieved mutual information in nats. Ties break toward fewer
/// parts, then toward the leftmost final cut.
pub fn optimize_partition_dp(
    master: &MasterJoint,
    k: usize,
) -> Result<(Partition, f64), PartitionError> {
    if k < 2 {
        return Err(PartitionError::TooFewParts { required: 2, got: k });
    }
    let rows_free = master.rows_free();
    let m = rows_free.rows();
    let c = rows_free.cols();
    let table = dp_dense(rows_free.masses(), m, c, k);

    // Pick the best exact part count ≤ k, preferring fewer parts on ties,
    // then recompute the achieved I cleanly from the coarsened joint.
    let mut best_p = 1usize;
    let mut best = table.score_by_parts[0];
    for (idx, &v) in table.score_by_parts.iter().enumerate() {
        if v > best {
            best = v;
            best_p = idx + 1;
        }
    }
    let boundaries = table.boundaries(best_p);
    let value = coarsened_info(&rows_free, &boundaries);
    let cuts = boundaries.iter().map(|&b| master.free_boundaries[b - 1]).collect();
    Ok((Partition::new(cuts)?, value))
}

/// Exhaustive maximum of mutual information over all coarsenings of the
/// free axis into at most `k` parts. Test oracle; `m ≤ 20` only.
pub fn brute_force_partition(
    master: &MasterJoint,
    k: usize,
) -> Result<(Partition, f64), PartitionError> {
    let m = master.free_cells();
    if m > 20 {
        return Err(PartitionError::MasterTooLarge { m, max: 20 });
    }
    if k < 2 {
        return Err(PartitionError::TooFewParts { required: 2, got: k });
    }
    let rows_free = master.rows_free();
    let n_gaps = m - 1;
    let mut best_value = f64::NEG_INFINITY;
    let mut best_bounds: Vec<usize> = Vec::new();

    // Enumerate cut subsets in order of increasing cut count, then
    // lexicographically, replacing only on strict improvement; this
    // reproduces the fewer-parts/leftmost tie rule.
    for cut_count in 0..=(k - 1).min(n_gaps) {
        let mut combo: Vec<usize> = (1..=cut_count).collect();
        loop {
            let value = coarsened_info(&rows_free, &combo);
            if value > best_value {
                best_value = value;
                best_bounds = combo.clone();
            }
            if cut_count == 0 || !next_combination(&mut combo, n_gaps) {
                break;
            }
        }
    }
    let cuts = best_bounds.iter().map(|&b| master.free_boundaries[b - 1]).collect();
    Ok((Partition::new(cuts)?, best_value.max(0.0)))
}

/// Advances `combo` (strictly increasing values in 1..=max) to the next
/// lexicographic combination; returns false when exhausted.
fn next_combination(combo: &mut [usize], max: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < max - (k - 1 - i) {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::info::mutual_information;

    fn master_cols(col_masses: &[[f64; 2]]) -> MasterJoint {
        // Builds a 2-row × m-column master with the column axis free.
        let cols = col_masses.len();
        let mut mass = vec![0.0; 2 * cols];
        for (c, col) in col_masses.iter().enumerate() {
            mass[c] = col[0];
            mass[cols + c] = col[1];
        }
        MasterJoint::new(DiscreteJoint::new(2, cols, mass).unwrap(), Axis::Cols)
    }

    #[test]
    fn equipartition_six_distinct_three_bins() {
        let vals = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let eq = equipartition_counts(&vals, 3).unwrap();
        assert_eq!(eq.counts, vec![2, 2, 2]);
        assert!(eq.exact);
    }

    #[test]
    fn equipartition_tie_rule_forces_unbalanced_split() {
        let vals = [1.0, 1.0, 1.0, 2.0];
        let eq = equipartition_counts(&vals, 2).unwrap();
        assert_eq!(eq.counts, vec![3, 1]);
        assert!(eq.exact);
    }

    #[test]
    fn equipartition_flags_infeasible_bin_count() {
        let vals = [1.0, 1.0, 2.0, 2.0];
        let eq = equipartition_counts(&vals, 3).unwrap();
        assert!(!eq.exact);
        assert_eq!(eq.counts, vec![2, 2]);
    }

    #[test]
    fn equipartition_matches_exhaustive_on_distinct_values() {
        // Greedy counts must be as equal as any feasible placement.
        let mut rng = 987654321u64;
        let mut next = move || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..50 {
            let mut vals: Vec<f64> = (0..10).map(|_| next()).collect();
            vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
            vals.dedup();
            if vals.len() < 10 {
                continue;
            }
            let eq = equipartition_counts(&vals, 4).unwrap();
            let spread = eq.counts.iter().max().unwrap() - eq.counts.iter().min().unwrap();
            // Exhaustive optimum over all C(9,3) placements.
            let mut best = usize::MAX;
            for a in 1..8 {
                for b in a + 1..9 {
                    for c in b + 1..10 {
                        let counts = [a, b - a, c - b, 10 - c];
                        let s = counts.iter().max().unwrap() - counts.iter().min().unwrap();
                        best = best.min(s);
                    }
                }
            }
            assert_eq!(spread, best, "greedy spread {spread} vs optimal {best}");
        }
    }

    #[test]
    fn apply_grid_quadrants() {
        let pts = [(0.2, 0.2), (0.2, 0.8), (0.8, 0.2), (0.8, 0.8)];
        let grid = Grid::new(
            Partition::new(vec![0.5]).unwrap(),
            Partition::new(vec![0.5]).unwrap(),
        );
        let j = apply_grid(&pts, &grid).unwrap();
        assert_eq!(j.masses(), &[0.25, 0.25, 0.25, 0.25]);
    }

    #[test]
    fn apply_grid_degenerate_single_cell() {
        let pts = [(0.1, 0.1), (0.2, 0.15), (0.15, 0.12)];
        let grid = Grid::new(
            Partition::new(vec![0.5]).unwrap(),
            Partition::new(vec![0.5]).unwrap(),
        );
        let j = apply_grid(&pts, &grid).unwrap();
        assert_eq!(j.mass(0, 0), 1.0);
        assert_eq!(mutual_information(&j), 0.0);
    }

    #[test]
    fn apply_grid_matches_counting_oracle() {
        let mut rng = 22222u64;
        let mut next = move || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (rng >> 11) as f64 / (1u64 << 53) as f64
        };
        let pts: Vec<(f64, f64)> = (0..50).map(|_| (next(), next())).collect();
        let xc = vec![0.3, 0.7];
        let yc = vec![0.5];
        let grid = Grid::new(Partition::new(xc.clone()).unwrap(), Partition::new(yc.clone()).unwrap());
        let j = apply_grid(&pts, &grid).unwrap();
        // Naive per-point scan.
        let mut counts = [[0usize; 3]; 2];
        for &(x, y) in &pts {
            let col = if x < 0.3 {
                0
            } else if x < 0.7 {
                1
            } else {
                2
            };
            let row = if y < 0.5 { 0 } else { 1 };
            counts[row][col] += 1;
        }
        for r in 0..2 {
            for c in 0..3 {
                assert!((j.mass(r, c) - counts[r][c] as f64 / 50.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn dp_three_column_example() {
        // Column masses (0.3,0)|(0,0.3)|(0.2,0.2); best 2-part coarsening
        // cuts after column 1 and attains ln 2 − 0.7·H_b(2/7).
        let master = master_cols(&[[0.3, 0.0], [0.0, 0.3], [0.2, 0.2]]);
        let (part, value) = optimize_partition_dp(&master, 2).unwrap();
        assert_eq!(part.cuts(), &[1.0]);
        let hb = |p: f64| -p * p.ln() - (1.0 - p) * (1.0 - p).ln();
        let expected = std::f64::consts::LN_2 - 0.7 * hb(2.0 / 7.0);
        assert!((value - expected).abs() < 1e-12, "value {value} expected {expected}");

        // Enumerate all four coarsenings with ≤ 2 parts as an oracle.
        let (bpart, bvalue) = brute_force_partition(&master, 2).unwrap();
        assert!((value - bvalue).abs() < 1e-12);
        assert_eq!(part, bpart);
    }

    #[test]
    fn dp_product_distribution_prefers_fewest_parts() {
        let master = master_cols(&[[0.15, 0.15], [0.1, 0.1], [0.25, 0.25]]);
        for k in 2..=3 {
            let (part, value) = optimize_partition_dp(&master, k).unwrap();
            assert_eq!(value, 0.0);
            assert_eq!(part.parts(), 1, "independence should keep one part");
        }
    }

    #[test]
    fn brute_force_single_column_master() {
        let master = master_cols(&[[0.6, 0.4]]);
        let (part, value) = brute_force_partition(&master, 2).unwrap();
        assert_eq!(part.parts(), 1);
        assert_eq!(value, 0.0);
    }

    #[test]
    fn dp_value_nondecreasing_in_k() {
        let master = master_cols(&[
            [0.10, 0.02],
            [0.03, 0.11],
            [0.08, 0.05],
            [0.01, 0.20],
            [0.22, 0.03],
            [0.05, 0.10],
        ]);
        let mut prev = 0.0;
        for k in 2..=6 {
            let (_, value) = optimize_partition_dp(&master, k).unwrap();
            assert!(value + 1e-12 >= prev, "k={k}: {value} < {prev}");
            prev = value;
        }
    }

    #[test]
    fn dp_k_at_least_master_size_dominates_every_coarsening() {
        let master = master_cols(&[[0.2, 0.1], [0.05, 0.25], [0.3, 0.1]]);
        let (_, v_full) = optimize_partition_dp(&master, 3).unwrap();
        let (_, v2) = optimize_partition_dp(&master, 2).unwrap();
        assert!(v_full + 1e-12 >= v2);
        // And the optimum dominates the I of the untouched master.
        let full_i = mutual_information(master.joint());
        assert!(v_full + 1e-12 >= full_i);
    }

    #[test]
    fn dp_rejects_k_below_two() {
        let master = master_cols(&[[0.5, 0.5]]);
        assert!(optimize_partition_dp(&master, 1).is_err());
        assert!(brute_force_partition(&master, 0).is_err());
    }

    #[test]
    fn brute_force_rejects_large_master() {
        let mass = vec![1.0 / 42.0; 42];
        let joint = DiscreteJoint::new(2, 21, mass).unwrap();
        let master = MasterJoint::new(joint, Axis::Cols);
        assert!(brute_force_partition(&master, 2).is_err());
    }
}
