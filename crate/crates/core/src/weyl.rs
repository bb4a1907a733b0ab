//! The Weyl group W(A_n) ≅ S_{n+1}: permutations, roots, simple-root
//! subsets, compositions, partitions and the conjugacy relation on
//! subsets of the fundamental system.

use std::fmt;

use crate::error::{Error, Result};

/// Hard bound above which full group enumeration is refused.
pub const BRUTE_FORCE_MAX_RANK: usize = 6;

/// Default maximum supported rank (overridable via `DESCENT_LAB_MAX_RANK`).
pub const DEFAULT_MAX_RANK: usize = 9;

/// Maximum supported rank, honoring the `DESCENT_LAB_MAX_RANK` override.
pub fn max_rank() -> usize {
    std::env::var("DESCENT_LAB_MAX_RANK")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_RANK)
}

/// The rank n of the root system A_n; the group is S_{n+1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rank(usize);

impl Rank {
    pub fn new(n: usize) -> Result<Self> {
        let max = max_rank();
        if n == 0 || n > max {
            return Err(Error::InvalidRank { n, max });
        }
        Ok(Rank(n))
    }

    /// Number of simple roots.
    pub fn n(self) -> usize {
        self.0
    }

    /// Number of letters the group permutes, n + 1.
    pub fn degree(self) -> usize {
        self.0 + 1
    }

    /// (n+1)!, the group order.
    pub fn group_order(self) -> u64 {
        (1..=self.degree() as u64).product()
    }

    pub fn check_brute_force(self, strategy: &'static str) -> Result<()> {
        if self.0 > BRUTE_FORCE_MAX_RANK {
            return Err(Error::Capacity {
                n: self.0,
                max: BRUTE_FORCE_MAX_RANK,
                strategy,
            });
        }
        Ok(())
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A root e_i − e_j of the A_n system, with 1-based indices i ≠ j.
/// Positive exactly when i < j; the simple root α_k is (k, k+1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(i != j);
        Root { i, j }
    }

    /// The simple root α_k = e_k − e_{k+1}.
    pub fn simple(k: usize) -> Self {
        Root { i: k, j: k + 1 }
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    /// If this root is a simple root α_k, returns k.
    pub fn as_simple(self) -> Option<usize> {
        (self.j == self.i + 1).then_some(self.i)
    }
}

/// An element of W(A_n) ≅ S_{n+1} in one-line notation.
///
/// Internally 0-based: `images[i]` is the image of letter `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Builds from 1-based one-line notation, validating bijectivity.
    pub fn from_one_line(word: &[usize]) -> Result<Self> {
        let deg = word.len();
        let mut seen = vec![false; deg];
        for &v in word {
            if v == 0 || v > deg || seen[v - 1] {
                return Err(Error::ContractViolation(format!(
                    "not a one-line permutation word: {word:?}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: word.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based letter i.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based one-line word.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// Composition u∘v: maps i to u(v(i)).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::RankMismatch {
                left: self.degree() - 1,
                right: other.degree() - 1,
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// w(e_i − e_j) = e_{w(i)} − e_{w(j)}.
    pub fn act_on_root(&self, r: Root) -> Root {
        Root {
            i: self.apply(r.i),
            j: self.apply(r.j),
        }
    }

    /// Coxeter length: the number of inversions of the one-line word,
    /// equivalently the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Descent set {k : w(k) > w(k+1)} as a subset of {1..n}.
    pub fn descent_set(&self) -> SimpleRootSet {
        let mut bits = 0u32;
        for k in 1..self.degree() {
            if self.images[k - 1] > self.images[k] {
                bits |= 1 << (k - 1);
            }
        }
        SimpleRootSet { bits }
    }

    /// Cycle type as a partition of n+1.
    pub fn cycle_type(&self) -> Partition {
        let deg = self.degree();
        let mut seen = vec![false; deg];
        let mut parts = Vec::new();
        for start in 0..deg {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, &v) in self.images.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// All elements of S_degree in lexicographic one-line order.
pub fn all_permutations(degree: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity((1..=degree).product());
    let mut word: Vec<usize> = (0..degree).collect();
    loop {
        out.push(Permutation {
            images: word.clone(),
        });
        // next lexicographic word
        let Some(i) = (0..degree.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else {
            break;
        };
        let j = (i + 1..degree).rev().find(|&j| word[j] > word[i]).unwrap();
        word.swap(i, j);
        word[i + 1..].reverse();
    }
    out
}

/// A subset J of the fundamental system Π, over root indices 1..n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleRootSet {
    bits: u32,
}

impl SimpleRootSet {
    pub fn empty() -> Self {
        SimpleRootSet { bits: 0 }
    }

    /// The full fundamental system Π.
    pub fn full(rank: Rank) -> Self {
        SimpleRootSet {
            bits: (1u32 << rank.n()) - 1,
        }
    }

    pub fn from_indices(indices: &[usize], rank: Rank) -> Result<Self> {
        let mut bits = 0u32;
        for &k in indices {
            if k == 0 || k > rank.n() {
                return Err(Error::InvalidSubset {
                    index: k,
                    max: rank.n(),
                });
            }
            bits |= 1 << (k - 1);
        }
        Ok(SimpleRootSet { bits })
    }

    pub(crate) fn from_bits(bits: u32) -> Self {
        SimpleRootSet { bits }
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn contains(self, k: usize) -> bool {
        k >= 1 && self.bits & (1 << (k - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_subset_of(self, other: SimpleRootSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersection(self, other: SimpleRootSet) -> SimpleRootSet {
        SimpleRootSet {
            bits: self.bits & other.bits,
        }
    }

    /// Root indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (1..=32usize).filter(move |k| bits & (1 << (k - 1)) != 0)
    }

    /// Block sizes of the partition of {1..n+1} obtained by joining
    /// positions k, k+1 for each k ∈ J, read left to right.
    pub fn composition(self, rank: Rank) -> Composition {
        let mut parts = Vec::new();
        let mut block = 1;
        for k in 1..=rank.n() {
            if self.contains(k) {
                block += 1;
            } else {
                parts.push(block);
                block = 1;
            }
        }
        parts.push(block);
        Composition { parts }
    }

    /// The composition sorted into a partition of n+1.
    pub fn partition(self, rank: Rank) -> Partition {
        self.composition(rank).to_partition()
    }
}

impl fmt::Display for SimpleRootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for k in self.indices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A composition of n+1: block sizes of a Young subgroup, in position order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Inverse of [`SimpleRootSet::composition`].
    pub fn to_subset(&self, rank: Rank) -> Result<SimpleRootSet> {
        if self.sum() != rank.degree() {
            return Err(Error::InvalidPartition {
                sum: self.sum(),
                expected: rank.degree(),
            });
        }
        let mut bits = 0u32;
        let mut pos = 0;
        for &p in &self.parts {
            for k in pos + 1..pos + p {
                bits |= 1 << (k - 1);
            }
            pos += p;
        }
        Ok(SimpleRootSet { bits })
    }
}

/// A partition of n+1: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates the parts against the expected sum n+1 and sorts them.
    pub fn new(mut parts: Vec<usize>, rank: Rank) -> Result<Self> {
        let sum: usize = parts.iter().sum();
        if sum != rank.degree() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition {
                sum,
                expected: rank.degree(),
            });
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The left-justified canonical subset whose composition reads the
    /// parts in decreasing order.
    pub fn canonical_subset(&self, rank: Rank) -> Result<SimpleRootSet> {
        if self.sum() != rank.degree() {
            return Err(Error::InvalidPartition {
                sum: self.sum(),
                expected: rank.degree(),
            });
        }
        Composition::new(self.parts.clone()).to_subset(rank)
    }

    /// Size of the conjugacy class of S_{n+1} with this cycle type.
    pub fn class_size(&self) -> u64 {
        let n: usize = self.sum();
        let mut denom = 1u64;
        for &p in &self.parts {
            denom *= p as u64;
        }
        let mut mult = 1usize;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                mult += 1;
                denom *= mult as u64;
            } else {
                mult = 1;
            }
        }
        (1..=n as u64).product::<u64>() / denom
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// Parses a partition rendered by `Display`, e.g. `[3,1]`.
pub fn parse_partition(s: &str, rank: Rank) -> Result<Partition> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::ContractViolation(format!("malformed partition literal: {s}")))?;
    let parts: Vec<usize> = inner
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::ContractViolation(format!("malformed partition literal: {s}")))?;
    Partition::new(parts, rank)
}

/// True iff w(J) = K for some w ∈ W. In type A this is equivalent to
/// equality of the block-size partitions; the brute-force witness search
/// stays available as the oracle for that equivalence.
pub fn are_conjugate(j: SimpleRootSet, k: SimpleRootSet, rank: Rank) -> bool {
    j.partition(rank) == k.partition(rank)
}

/// The lexicographically least w with w(J) = K setwise, if any.
pub fn conjugating_witness(
    j: SimpleRootSet,
    k: SimpleRootSet,
    rank: Rank,
) -> Option<Permutation> {
    let target: Vec<Root> = k.indices().map(Root::simple).collect();
    all_permutations(rank.degree()).into_iter().find(|w| {
        let image: Vec<Root> = j.indices().map(|idx| w.act_on_root(Root::simple(idx))).collect();
        image.len() == target.len() && image.iter().all(|r| target.contains(r))
    })
}

/// All 2^n subsets of Π by binary counting on the index bitmask.
pub fn enumerate_subsets(rank: Rank) -> Vec<SimpleRootSet> {
    (0..1u32 << rank.n()).map(|bits| SimpleRootSet { bits }).collect()
}

/// All partitions of n+1 in reverse-lexicographic order, (n+1) first.
pub fn enumerate_partitions(rank: Rank) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank.degree(), rank.degree(), &mut Vec::new(), &mut out);
    out
}
