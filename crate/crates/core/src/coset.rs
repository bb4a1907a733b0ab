//! Distinguished coset representatives X_J and double coset
//! representatives X_JK = X_J⁻¹ ∩ X_K, with a brute-force path over the
//! whole group and a direct combinatorial generation path.

use crate::error::{Error, Result};
use crate::weyl::{all_permutations, Permutation, Rank, Root, SimpleRootSet};

/// The minimal-length left-coset representatives of W/W_J.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRepSet {
    pub subset: SimpleRootSet,
    pub reps: Vec<Permutation>,
}

/// Distinguished double coset representatives of W_J\W/W_K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetRepSet {
    pub left: SimpleRootSet,
    pub right: SimpleRootSet,
    pub reps: Vec<Permutation>,
}

/// w ∈ X_J ⇔ w(α_k) ∈ Φ⁺ for every k ∈ J.
pub fn is_min_rep(w: &Permutation, j: SimpleRootSet) -> bool {
    j.indices().all(|k| w.act_on_root(Root::simple(k)).is_positive())
}

/// w ∈ X_JK ⇔ w⁻¹(J) ⊆ Φ⁺ and w(K) ⊆ Φ⁺.
pub fn is_double_rep(w: &Permutation, j: SimpleRootSet, k: SimpleRootSet) -> bool {
    is_min_rep(&w.inverse(), j) && is_min_rep(w, k)
}

fn canonical_sort(reps: &mut [Permutation]) {
    reps.sort_by_cached_key(|w| (w.length(), w.one_line()));
}

/// Direct generation of X_J: the one-line words increasing within each
/// position block of the composition of J, i.e. the multiset
/// interleavings of the block contents.
pub fn min_coset_reps(j: SimpleRootSet, rank: Rank) -> CosetRepSet {
    let blocks = j.composition(rank);
    let deg = rank.degree();
    let mut reps = Vec::with_capacity(count_min_reps(j, rank) as usize);
    // choose the value set of each block left to right; sorted within
    let mut word = vec![0usize; deg];
    fn rec(
        blocks: &[usize],
        pos: usize,
        available: u32,
        word: &mut [usize],
        reps: &mut Vec<Permutation>,
    ) {
        let Some((&size, rest)) = blocks.split_first() else {
            reps.push(Permutation::from_one_line(word).expect("valid word"));
            return;
        };
        // all size-subsets of the available values, ascending within the block
        let values: Vec<usize> = (1..=32).filter(|&v| available & (1 << (v - 1)) != 0).collect();
        let mut choice = vec![0usize; size];
        fn choose(
            values: &[usize],
            start: usize,
            depth: usize,
            choice: &mut [usize],
            blocks: &[usize],
            pos: usize,
            available: u32,
            word: &mut [usize],
            reps: &mut Vec<Permutation>,
        ) {
            if depth == choice.len() {
                let mut avail = available;
                for (offset, &v) in choice.iter().enumerate() {
                    word[pos + offset] = v;
                    avail &= !(1 << (v - 1));
                }
                rec(blocks, pos + choice.len(), avail, word, reps);
                return;
            }
            for idx in start..values.len() {
                choice[depth] = values[idx];
                choose(values, idx + 1, depth + 1, choice, blocks, pos, available, word, reps);
            }
        }
        choose(&values, 0, 0, &mut choice, rest, pos, available, word, reps);
    }
    let available = if deg >= 32 { u32::MAX } else { (1u32 << deg) - 1 };
    rec(blocks.parts(), 0, available, &mut word, &mut reps);
    canonical_sort(&mut reps);
    CosetRepSet { subset: j, reps }
}

/// Oracle path: filter all (n+1)! group elements by the root-positivity
/// characterization. Refuses ranks above the brute-force bound.
pub fn min_coset_reps_brute(j: SimpleRootSet, rank: Rank) -> Result<CosetRepSet> {
    rank.check_brute_force("brute")?;
    let mut reps: Vec<Permutation> = all_permutations(rank.degree())
        .into_iter()
        .filter(|w| is_min_rep(w, j))
        .collect();
    canonical_sort(&mut reps);
    Ok(CosetRepSet { subset: j, reps })
}

/// (n+1)! / ∏ p_i! for the composition p of J.
pub fn count_min_reps(j: SimpleRootSet, rank: Rank) -> u64 {
    let mut count = rank.group_order();
    for &p in j.composition(rank).parts() {
        count /= (1..=p as u64).product::<u64>();
    }
    count
}

/// X_JK generated by filtering the direct enumeration of X_K.
pub fn double_coset_reps(j: SimpleRootSet, k: SimpleRootSet, rank: Rank) -> DoubleCosetRepSet {
    let reps = min_coset_reps(k, rank)
        .reps
        .into_iter()
        .filter(|w| is_min_rep(&w.inverse(), j))
        .collect();
    DoubleCosetRepSet {
        left: j,
        right: k,
        reps,
    }
}

/// Oracle path over the whole group.
pub fn double_coset_reps_brute(
    j: SimpleRootSet,
    k: SimpleRootSet,
    rank: Rank,
) -> Result<DoubleCosetRepSet> {
    rank.check_brute_force("brute")?;
    let mut reps: Vec<Permutation> = all_permutations(rank.degree())
        .into_iter()
        .filter(|w| is_double_rep(w, j, k))
        .collect();
    canonical_sort(&mut reps);
    Ok(DoubleCosetRepSet {
        left: j,
        right: k,
        reps,
    })
}

/// For w ∈ X_JK, the subset L with W_J ∩ wW_Kw⁻¹ = W_L read on the K
/// side: {k ∈ K : w(α_k) is a simple root of J}, i.e. w⁻¹(J) ∩ K as
/// root sets.
pub fn intersection_subset(
    w: &Permutation,
    j: SimpleRootSet,
    k: SimpleRootSet,
) -> Result<SimpleRootSet> {
    if !is_double_rep(w, j, k) {
        return Err(Error::ContractViolation(format!(
            "{w} is not a distinguished double coset representative for J={j}, K={k}"
        )));
    }
    let mut bits = 0u32;
    for idx in k.indices() {
        if let Some(m) = w.act_on_root(Root::simple(idx)).as_simple() {
            if j.contains(m) {
                bits |= 1 << (idx - 1);
            }
        }
    }
    Ok(SimpleRootSet::from_bits(bits))
}
