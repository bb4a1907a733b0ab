//! Permutation characters χ_J of W acting on W/W_J, marks of parabolic
//! subgroups, and the coordinate verifications of the isomorphisms onto
//! the parabolic Burnside ring and the character ring.

use std::collections::BTreeMap;

use num::traits::Zero;
use num::BigInt;

use crate::class_algebra::{canonical_representative, multiply_classes};
use crate::coset::min_coset_reps;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::solomon::StructureTable;
use crate::weyl::{
    enumerate_partitions, enumerate_subsets, Partition, Permutation, Rank, SimpleRootSet,
};
use crate::Rat;

/// A rational class function on S_{n+1}, indexed by cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    rank: Rank,
    values: BTreeMap<Partition, Rat>,
}

impl ClassFunction {
    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn value(&self, class: &Partition) -> Rat {
        self.values.get(class).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn values(&self) -> &BTreeMap<Partition, Rat> {
        &self.values
    }

    pub fn pointwise_product(&self, other: &ClassFunction) -> ClassFunction {
        let values = self
            .values
            .iter()
            .map(|(c, v)| (c.clone(), v.clone() * other.value(c)))
            .collect();
        ClassFunction {
            rank: self.rank,
            values,
        }
    }

    pub fn scaled_add(&mut self, factor: &Rat, other: &ClassFunction) {
        for (c, v) in &other.values {
            let entry = self
                .values
                .entry(c.clone())
                .or_insert_with(Rat::zero);
            *entry += factor.clone() * v.clone();
        }
    }

    pub fn zero(rank: Rank) -> ClassFunction {
        let values = enumerate_partitions(rank)
            .into_iter()
            .map(|c| (c, Rat::zero()))
            .collect();
        ClassFunction { rank, values }
    }
}

fn rat(v: u64) -> Rat {
    Rat::from(BigInt::from(v))
}

/// All cycle types of S_{n+1} with their class sizes, canonical order.
pub fn conjugacy_classes(rank: Rank) -> Vec<(Partition, u64)> {
    enumerate_partitions(rank)
        .into_iter()
        .map(|p| {
            let size = p.class_size();
            (p, size)
        })
        .collect()
}

/// A permutation with the given cycle type, cycles on consecutive letters.
pub fn class_representative(cycle_type: &Partition) -> Permutation {
    let degree = cycle_type.sum();
    let mut word = vec![0usize; degree];
    let mut start = 1;
    for &len in cycle_type.parts() {
        for offset in 0..len {
            let letter = start + offset;
            let image = if offset + 1 == len { start } else { letter + 1 };
            word[letter - 1] = image;
        }
        start += len;
    }
    Permutation::from_one_line(&word).expect("cycle word is a permutation")
}

/// Block id per letter for the Young subgroup W_J.
fn block_ids(j: SimpleRootSet, rank: Rank) -> Vec<usize> {
    let mut ids = Vec::with_capacity(rank.degree());
    for (block, &size) in j.composition(rank).parts().iter().enumerate() {
        ids.extend(std::iter::repeat(block).take(size));
    }
    ids
}

/// v ∈ W_J ⇔ v preserves every block of the composition of J.
fn in_young_subgroup(v: &Permutation, blocks: &[usize]) -> bool {
    (1..=blocks.len()).all(|i| blocks[v.apply(i) - 1] == blocks[i - 1])
}

/// All elements of the Young subgroup W_J.
pub fn young_subgroup_elements(j: SimpleRootSet, rank: Rank) -> Vec<Permutation> {
    let comp = j.composition(rank);
    let mut elements = vec![Permutation::identity(rank.degree())];
    let mut start = 1usize;
    for &size in comp.parts() {
        let letters: Vec<usize> = (start..start + size).collect();
        let mut next = Vec::with_capacity(elements.len() * (1..=size).product::<usize>());
        for block_perm in crate::weyl::all_permutations(size) {
            // embed the block permutation into S_{n+1}
            let mut word: Vec<usize> = (1..=rank.degree()).collect();
            for (idx, &letter) in letters.iter().enumerate() {
                word[letter - 1] = letters[block_perm.apply(idx + 1) - 1];
            }
            let embedded = Permutation::from_one_line(&word).unwrap();
            for e in &elements {
                next.push(e.compose(&embedded).unwrap());
            }
        }
        elements = next;
        start += size;
    }
    elements
}

/// χ_J(g) = number of cosets dW_J fixed by g, i.e. with d⁻¹gd ∈ W_J,
/// evaluated on one representative per cycle type.
pub fn perm_character(j: SimpleRootSet, rank: Rank) -> ClassFunction {
    let reps = min_coset_reps(j, rank).reps;
    let blocks = block_ids(j, rank);
    let values = enumerate_partitions(rank)
        .into_iter()
        .map(|class| {
            let g = class_representative(&class);
            let fixed = reps
                .iter()
                .filter(|d| {
                    let conj = d.inverse().compose(&g).unwrap().compose(d).unwrap();
                    in_young_subgroup(&conj, &blocks)
                })
                .count() as u64;
            (class, rat(fixed))
        })
        .collect();
    ClassFunction { rank, values }
}

/// The Burnside mark of W_Q on W/W_J, where Q is the canonical
/// representative of P: the number of cosets fixed by all of W_Q.
/// Checking the generating reflections of W_Q suffices.
pub fn mark(p: &Partition, j: SimpleRootSet, rank: Rank) -> Result<u64> {
    let q = canonical_representative(p, rank)?;
    let reps = min_coset_reps(j, rank).reps;
    let blocks = block_ids(j, rank);
    let generators: Vec<Permutation> = q
        .indices()
        .map(|k| {
            let mut word: Vec<usize> = (1..=rank.degree()).collect();
            word.swap(k - 1, k);
            Permutation::from_one_line(&word).unwrap()
        })
        .collect();
    let fixed = reps
        .iter()
        .filter(|d| {
            let d_inv = d.inverse();
            generators.iter().all(|s| {
                let conj = d_inv.compose(s).unwrap().compose(d).unwrap();
                in_young_subgroup(&conj, &blocks)
            })
        })
        .count() as u64;
    Ok(fixed)
}

/// The parabolic table of marks: rows are the actions W/W_λ, columns the
/// parabolic classes W_P, both in canonical partition order.
pub fn marks_matrix(table_rank: Rank) -> Result<Matrix<Rat>> {
    let classes = enumerate_partitions(table_rank);
    let mut rows = Vec::with_capacity(classes.len());
    for lambda in &classes {
        let j = canonical_representative(lambda, table_rank)?;
        let mut row = Vec::with_capacity(classes.len());
        for p in &classes {
            row.push(rat(mark(p, j, table_rank)?));
        }
        rows.push(row);
    }
    Ok(Matrix::from_rows(rows))
}

/// The Burnside-ring comparison in coordinates: mark-wise
/// multiplicativity of the class product plus nonsingularity of the
/// marks matrix.
pub fn verify_burnside_iso(table: &StructureTable) -> Result<bool> {
    let rank = table.rank();
    let classes = enumerate_partitions(rank);
    let marks = marks_matrix(rank)?;
    if marks.determinant().is_zero() {
        return Ok(false);
    }
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            let product = multiply_classes(a, b, table)?;
            for (pdx, _p) in classes.iter().enumerate() {
                let lhs = marks.get(i, pdx).clone() * marks.get(j, pdx).clone();
                let mut rhs = Rat::zero();
                for (ndx, nu) in classes.iter().enumerate() {
                    rhs += product.coeff(nu) * marks.get(ndx, pdx).clone();
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The character-ring comparison in coordinates: χ_J·χ_K = Σ_L a_JKL χ_L pointwise
/// for all subset pairs, and the class characters χ_λ are linearly
/// independent over the rationals.
pub fn verify_character_iso(table: &StructureTable) -> Result<bool> {
    let rank = table.rank();
    let subsets = enumerate_subsets(rank);
    let chars: Vec<ClassFunction> = subsets.iter().map(|&j| perm_character(j, rank)).collect();
    for (jdx, &j) in subsets.iter().enumerate() {
        for (kdx, &k) in subsets.iter().enumerate() {
            let lhs = chars[jdx].pointwise_product(&chars[kdx]);
            let mut rhs = ClassFunction::zero(rank);
            for (&l, &a) in table.row(j, k) {
                let ldx = subsets.iter().position(|&s| s == l).unwrap();
                rhs.scaled_add(&rat(a), &chars[ldx]);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    // linear independence of the class characters
    let classes = enumerate_partitions(rank);
    let mut rows = Vec::with_capacity(classes.len());
    for lambda in &classes {
        let j = canonical_representative(lambda, rank)?;
        let chi = perm_character(j, rank);
        rows.push(classes.iter().map(|c| chi.value(c)).collect());
    }
    Ok(Matrix::from_rows(rows).rank() == classes.len())
}
