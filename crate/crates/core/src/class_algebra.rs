//! The class algebra Σ_W(A_n): the commutative, semisimple algebra
//! spanned by the conjugacy classes [x_J], with the projection from the
//! Solomon algebra and the trace-form semisimplicity certificate.

use std::collections::BTreeMap;

use num::traits::Zero;
use num::BigInt;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::solomon::{SolomonElement, StructureTable};
use crate::weyl::{enumerate_partitions, enumerate_subsets, Partition, Rank, SimpleRootSet};
use crate::Rat;

/// A sparse rational combination of class basis elements [x_λ].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassElement {
    rank: Rank,
    coeffs: BTreeMap<Partition, Rat>,
}

impl ClassElement {
    pub fn zero(rank: Rank) -> Self {
        ClassElement {
            rank,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(class: Partition, rank: Rank) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(class, Rat::from(BigInt::from(1)));
        ClassElement { rank, coeffs }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, class: &Partition) -> Rat {
        self.coeffs.get(class).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, class: Partition, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(class.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&class);
        }
    }
}

/// The class label of x_J: the block-size partition of J.
pub fn class_of(j: SimpleRootSet, rank: Rank) -> Partition {
    j.partition(rank)
}

/// Left-justified representative subset of a class label.
pub fn canonical_representative(class: &Partition, rank: Rank) -> Result<SimpleRootSet> {
    class.canonical_subset(rank)
}

/// The class-projected product of x_J and x_K:
/// Σ_{L⊆K} a_JKL [class_of(L)].
pub fn class_product_of_subsets(
    j: SimpleRootSet,
    k: SimpleRootSet,
    table: &StructureTable,
) -> ClassElement {
    let rank = table.rank();
    let mut out = ClassElement::zero(rank);
    for (&l, &a) in table.row(j, k) {
        out.add_term(class_of(l, rank), Rat::from(BigInt::from(a)));
    }
    out
}

/// [x_λ][x_μ] evaluated on the canonical representatives; representative
/// independence is what `verify_well_defined` certifies.
pub fn multiply_classes(
    lambda: &Partition,
    mu: &Partition,
    table: &StructureTable,
) -> Result<ClassElement> {
    let rank = table.rank();
    let j = canonical_representative(lambda, rank)?;
    let k = canonical_representative(mu, rank)?;
    Ok(class_product_of_subsets(j, k, table))
}

/// Linear projection x_J ↦ [x_J].
pub fn project(a: &SolomonElement) -> ClassElement {
    let rank = a.rank();
    let mut out = ClassElement::zero(rank);
    for (&j, c) in a.coeffs() {
        out.add_term(class_of(j, rank), c.clone());
    }
    out
}

/// Exhaustive representative-independence check over all subset pairs,
/// not just canonical representatives.
pub fn verify_well_defined(table: &StructureTable) -> Result<bool> {
    let rank = table.rank();
    for j in enumerate_subsets(rank) {
        for k in enumerate_subsets(rank) {
            let via_subsets = class_product_of_subsets(j, k, table);
            let via_classes =
                multiply_classes(&class_of(j, rank), &class_of(k, rank), table)?;
            if via_subsets != via_classes {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// First counterexample to representative independence, if any.
pub fn well_defined_counterexample(
    table: &StructureTable,
) -> Result<Option<(SimpleRootSet, SimpleRootSet)>> {
    let rank = table.rank();
    for j in enumerate_subsets(rank) {
        for k in enumerate_subsets(rank) {
            let via_subsets = class_product_of_subsets(j, k, table);
            let via_classes =
                multiply_classes(&class_of(j, rank), &class_of(k, rank), table)?;
            if via_subsets != via_classes {
                return Ok(Some((j, k)));
            }
        }
    }
    Ok(None)
}

/// True iff all partition pairs commute.
pub fn verify_commutative(table: &StructureTable) -> Result<bool> {
    let rank = table.rank();
    let classes = enumerate_partitions(rank);
    for a in &classes {
        for b in &classes {
            if multiply_classes(a, b, table)? != multiply_classes(b, a, table)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Symmetric trace form of an algebra in a fixed basis order, as exact
/// rationals: entry (i, j) = trace of left multiplication by b_i·b_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub rank: Rank,
    pub order: Vec<Partition>,
    pub entries: Matrix<Rat>,
}

impl GramMatrix {
    pub fn determinant(&self) -> Rat {
        self.entries.determinant()
    }
}

fn rat(v: u64) -> Rat {
    Rat::from(BigInt::from(v))
}

/// Trace of left multiplication by each class basis element, in the
/// canonical partition order.
fn class_leftmult_traces(table: &StructureTable, classes: &[Partition]) -> Result<Vec<Rat>> {
    let mut traces = Vec::with_capacity(classes.len());
    for nu in classes {
        let mut t = Rat::zero();
        for mu in classes {
            t += multiply_classes(nu, mu, table)?.coeff(mu);
        }
        traces.push(t);
    }
    Ok(traces)
}

/// Gram matrix of the class-algebra trace form.
pub fn gram_matrix(table: &StructureTable) -> Result<GramMatrix> {
    let rank = table.rank();
    let classes = enumerate_partitions(rank);
    let traces = class_leftmult_traces(table, &classes)?;
    let mut entries = Matrix::zeros(classes.len(), classes.len());
    for (i, a) in classes.iter().enumerate() {
        for (j, b) in classes.iter().enumerate() {
            let product = multiply_classes(a, b, table)?;
            let mut value = Rat::zero();
            for (idx, nu) in classes.iter().enumerate() {
                value += product.coeff(nu) * traces[idx].clone();
            }
            entries.set(i, j, value);
        }
    }
    Ok(GramMatrix {
        rank,
        order: classes,
        entries,
    })
}

/// Nondegenerate trace form ⇔ semisimple over the rationals.
pub fn is_semisimple(table: &StructureTable) -> Result<bool> {
    Ok(!gram_matrix(table)?.determinant().is_zero())
}

/// Gram matrix of the trace form on the Solomon basis x_J; degenerate
/// for n ≥ 2 with the radical differences x_J − x_K as null vectors.
pub fn solomon_gram_matrix(table: &StructureTable) -> Matrix<Rat> {
    let rank = table.rank();
    let subsets = enumerate_subsets(rank);
    // trace of left multiplication by x_L
    let traces: Vec<Rat> = subsets
        .iter()
        .map(|&l| {
            subsets
                .iter()
                .fold(Rat::zero(), |acc, &b| acc + rat(table.constant(l, b, b)))
        })
        .collect();
    let mut entries = Matrix::zeros(subsets.len(), subsets.len());
    for (i, &j) in subsets.iter().enumerate() {
        for (jdx, &k) in subsets.iter().enumerate() {
            let mut value = Rat::zero();
            for (ldx, &l) in subsets.iter().enumerate() {
                let a = table.constant(j, k, l);
                if a != 0 {
                    value += rat(a) * traces[ldx].clone();
                }
            }
            entries.set(i, jdx, value);
        }
    }
    entries
}

/// Dimension of the kernel of the projection Σ(W) → Σ_W(A_n):
/// 2^n − p(n+1), computed from the rank of the projection matrix.
pub fn projection_kernel_dimension(rank: Rank) -> usize {
    let subsets = enumerate_subsets(rank);
    let classes = enumerate_partitions(rank);
    let rows: Vec<Vec<Rat>> = subsets
        .iter()
        .map(|&j| {
            let class = class_of(j, rank);
            classes
                .iter()
                .map(|c| if *c == class { rat(1) } else { Rat::zero() })
                .collect()
        })
        .collect();
    let m = Matrix::from_rows(rows);
    subsets.len() - m.rank()
}

/// Rank of the span of the radical spanning set in subset coordinates.
pub fn radical_span_rank(rank: Rank) -> usize {
    let span = crate::solomon::radical_spanning_set(rank);
    if span.is_empty() {
        return 0;
    }
    let subsets = enumerate_subsets(rank);
    let rows: Vec<Vec<Rat>> = span
        .iter()
        .map(|e| subsets.iter().map(|&j| e.coeff(j)).collect())
        .collect();
    Matrix::from_rows(rows).rank()
}

/// Checks the homomorphism property project(a·b) = project(a)·project(b)
/// over all basis pairs, where the right-hand product is the class
/// product.
pub fn verify_projection_homomorphism(table: &StructureTable) -> Result<bool> {
    let rank = table.rank();
    for j in enumerate_subsets(rank) {
        for k in enumerate_subsets(rank) {
            let product = table.multiply_basis(j, k);
            let lhs = project(&product);
            let rhs = multiply_classes(&class_of(j, rank), &class_of(k, rank), table)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff v is a null vector of the symmetric form given by `gram`.
pub fn is_null_vector(gram: &Matrix<Rat>, v: &[Rat]) -> bool {
    gram.mul_vec(v).iter().all(Rat::is_zero)
}

/// Rank-mismatch guard for element-level operations.
pub fn check_same_rank(a: Rank, b: Rank) -> Result<()> {
    if a != b {
        return Err(Error::RankMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}
