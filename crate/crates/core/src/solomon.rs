//! The Solomon descent algebra Σ(W): subset-indexed basis x_J, structure
//! constants a_JKL, the bilinear product, and the radical spanning set.
//!
//! Structure constants come from two routes: brute-force enumeration of
//! the distinguished double coset representatives, and counting
//! nonnegative integer matrices with prescribed margins (contingency
//! tables). The matrix route is calibrated against the brute route: rows
//! carry the composition of J, columns the composition of K, and the
//! composition of L is read per column top to bottom over nonzero
//! entries, which refines the composition of K.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use num::traits::Zero;
use num::BigInt;

use crate::coset::{double_coset_reps_brute, intersection_subset};
use crate::error::Result;
use crate::weyl::{are_conjugate, enumerate_subsets, Composition, Rank, SimpleRootSet};
use crate::Rat;

/// Strategy for computing the structure constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Full group enumeration of X_JK (rank ≤ 6).
    Brute,
    /// Contingency-table counting.
    Matrix,
    /// Brute for n ≤ 4, matrix above.
    Auto,
}

impl Strategy {
    pub fn resolve(self, rank: Rank) -> ResolvedStrategy {
        match self {
            Strategy::Brute => ResolvedStrategy::Brute,
            Strategy::Matrix => ResolvedStrategy::Matrix,
            Strategy::Auto => {
                if rank.n() <= 4 {
                    ResolvedStrategy::Brute
                } else {
                    ResolvedStrategy::Matrix
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ResolvedStrategy {
    Brute,
    Matrix,
}

impl ResolvedStrategy {
    pub fn name(self) -> &'static str {
        match self {
            ResolvedStrategy::Brute => "brute",
            ResolvedStrategy::Matrix => "matrix",
        }
    }
}

/// A sparse rational combination of basis elements x_J.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolomonElement {
    rank: Rank,
    coeffs: BTreeMap<SimpleRootSet, Rat>,
}

impl SolomonElement {
    pub fn zero(rank: Rank) -> Self {
        SolomonElement {
            rank,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element x_J.
    pub fn basis(j: SimpleRootSet, rank: Rank) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(j, Rat::from(BigInt::from(1)));
        SolomonElement { rank, coeffs }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coeffs(&self) -> &BTreeMap<SimpleRootSet, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, j: SimpleRootSet) -> Rat {
        self.coeffs.get(&j).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, j: SimpleRootSet, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(j).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&j);
        }
    }

    pub fn add(&self, other: &SolomonElement) -> SolomonElement {
        let mut out = self.clone();
        for (&j, c) in &other.coeffs {
            out.add_term(j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SolomonElement) -> SolomonElement {
        let mut out = self.clone();
        for (&j, c) in &other.coeffs {
            out.add_term(j, -c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rat) -> SolomonElement {
        let mut out = SolomonElement::zero(self.rank);
        for (&j, c) in &self.coeffs {
            out.add_term(j, c.clone() * factor.clone());
        }
        out
    }
}

/// All structure constants a_JKL at a fixed rank,
/// computed once and immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTable {
    rank: Rank,
    strategy: ResolvedStrategy,
    // indexed by J.bits * 2^n + K.bits
    entries: Vec<BTreeMap<SimpleRootSet, u64>>,
}

impl StructureTable {
    pub fn compute(rank: Rank, strategy: Strategy) -> Result<StructureTable> {
        let resolved = strategy.resolve(rank);
        let n = rank.n();
        let subsets = enumerate_subsets(rank);
        let mut entries = vec![BTreeMap::new(); 1 << (2 * n)];
        if resolved == ResolvedStrategy::Brute {
            rank.check_brute_force("brute")?;
        }
        for &j in &subsets {
            for &k in &subsets {
                let idx = ((j.bits() as usize) << n) | k.bits() as usize;
                entries[idx] = match resolved {
                    ResolvedStrategy::Brute => constants_brute(j, k, rank)?,
                    ResolvedStrategy::Matrix => constants_matrix(j, k, rank),
                };
            }
        }
        Ok(StructureTable {
            rank,
            strategy: resolved,
            entries,
        })
    }

    /// Process-level cache; tables are immutable after construction.
    pub fn cached(rank: Rank, strategy: Strategy) -> Result<Arc<StructureTable>> {
        static CACHE: OnceLock<Mutex<BTreeMap<(usize, ResolvedStrategy), Arc<StructureTable>>>> =
            OnceLock::new();
        let resolved = strategy.resolve(rank);
        let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
        let mut guard = cache.lock().expect("structure table cache poisoned");
        if let Some(table) = guard.get(&(rank.n(), resolved)) {
            return Ok(Arc::clone(table));
        }
        let table = Arc::new(StructureTable::compute(rank, strategy)?);
        guard.insert((rank.n(), resolved), Arc::clone(&table));
        Ok(table)
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn strategy(&self) -> ResolvedStrategy {
        self.strategy
    }

    /// a_JKL: the number of w ∈ X_JK with w⁻¹(J) ∩ K = L.
    pub fn constant(&self, j: SimpleRootSet, k: SimpleRootSet, l: SimpleRootSet) -> u64 {
        self.row(j, k).get(&l).copied().unwrap_or(0)
    }

    /// The nonzero constants a_JK• for a fixed (J, K).
    pub fn row(&self, j: SimpleRootSet, k: SimpleRootSet) -> &BTreeMap<SimpleRootSet, u64> {
        let n = self.rank.n();
        &self.entries[((j.bits() as usize) << n) | k.bits() as usize]
    }

    /// x_J · x_K = Σ_{L⊆K} a_JKL x_L.
    pub fn multiply_basis(&self, j: SimpleRootSet, k: SimpleRootSet) -> SolomonElement {
        let mut out = SolomonElement::zero(self.rank);
        for (&l, &a) in self.row(j, k) {
            out.add_term(l, Rat::from(BigInt::from(a)));
        }
        out
    }

    /// Bilinear extension of the basis product.
    pub fn multiply(&self, a: &SolomonElement, b: &SolomonElement) -> Result<SolomonElement> {
        if a.rank() != self.rank || b.rank() != self.rank {
            return Err(crate::error::Error::RankMismatch {
                left: a.rank().n(),
                right: b.rank().n(),
            });
        }
        let mut out = SolomonElement::zero(self.rank);
        for (&j, cj) in &a.coeffs {
            for (&k, ck) in &b.coeffs {
                let factor = cj.clone() * ck.clone();
                for (&l, &constant) in self.row(j, k) {
                    out.add_term(l, factor.clone() * Rat::from(BigInt::from(constant)));
                }
            }
        }
        Ok(out)
    }
}

fn constants_brute(
    j: SimpleRootSet,
    k: SimpleRootSet,
    rank: Rank,
) -> Result<BTreeMap<SimpleRootSet, u64>> {
    let mut row = BTreeMap::new();
    for w in &double_coset_reps_brute(j, k, rank)?.reps {
        let l = intersection_subset(w, j, k)?;
        *row.entry(l).or_insert(0) += 1;
    }
    Ok(row)
}

fn constants_matrix(j: SimpleRootSet, k: SimpleRootSet, rank: Rank) -> BTreeMap<SimpleRootSet, u64> {
    let row_margins = j.composition(rank);
    let col_margins = k.composition(rank);
    let mut row = BTreeMap::new();
    for matrix in contingency_tables(row_margins.parts(), col_margins.parts()) {
        let l = subset_from_matrix(&matrix, rank);
        *row.entry(l).or_insert(0) += 1;
    }
    row
}

/// The subset L read off a contingency table: per column, the nonzero
/// entries top to bottom refine that K-block into consecutive sub-blocks.
fn subset_from_matrix(matrix: &[Vec<u64>], rank: Rank) -> SimpleRootSet {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut parts = Vec::new();
    for c in 0..cols {
        for row in matrix {
            if row[c] > 0 {
                parts.push(row[c] as usize);
            }
        }
    }
    Composition::new(parts)
        .to_subset(rank)
        .expect("margins sum to n+1")
}

/// All nonnegative integer matrices with the given row and column sums.
pub fn contingency_tables(row_sums: &[usize], col_sums: &[usize]) -> Vec<Vec<Vec<u64>>> {
    fn fill_row(
        remaining_in_row: usize,
        col: usize,
        col_left: &mut [usize],
        row: &mut [u64],
        rows_below: &[usize],
        acc: &mut Vec<Vec<u64>>,
        out: &mut Vec<Vec<Vec<u64>>>,
    ) {
        if col == row.len() {
            if remaining_in_row != 0 {
                return;
            }
            acc.push(row.to_vec());
            fill_matrix(rows_below, col_left, acc, out);
            acc.pop();
            return;
        }
        let max = remaining_in_row.min(col_left[col]);
        for v in 0..=max {
            row[col] = v as u64;
            col_left[col] -= v;
            fill_row(remaining_in_row - v, col + 1, col_left, row, rows_below, acc, out);
            col_left[col] += v;
        }
        row[col] = 0;
    }

    fn fill_matrix(
        row_sums: &[usize],
        col_left: &mut [usize],
        acc: &mut Vec<Vec<u64>>,
        out: &mut Vec<Vec<Vec<u64>>>,
    ) {
        let Some((&first, rest)) = row_sums.split_first() else {
            if col_left.iter().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        };
        let mut row = vec![0u64; col_left.len()];
        fill_row(first, 0, col_left, &mut row, rest, acc, out);
    }

    let mut out = Vec::new();
    let mut col_left = col_sums.to_vec();
    fill_matrix(row_sums, &mut col_left, &mut Vec::new(), &mut out);
    out
}

/// The elements x_J − x_K over all unordered conjugate pairs J ∼ K;
/// these span the radical of Σ(W).
pub fn radical_spanning_set(rank: Rank) -> Vec<SolomonElement> {
    let subsets = enumerate_subsets(rank);
    let mut out = Vec::new();
    for (i, &j) in subsets.iter().enumerate() {
        for &k in &subsets[i + 1..] {
            if are_conjugate(j, k, rank) {
                out.push(SolomonElement::basis(j, rank).sub(&SolomonElement::basis(k, rank)));
            }
        }
    }
    out
}
