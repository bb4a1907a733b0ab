//! End-to-end acceptance suite. Each test prints a pass line for its
//! criterion; a failed assertion is the corresponding fail line.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num::traits::Zero;

use descent_lab::class_algebra::{
    gram_matrix, is_semisimple, projection_kernel_dimension, radical_span_rank,
    solomon_gram_matrix, verify_commutative, verify_well_defined,
};
use descent_lab::characters::{verify_burnside_iso, verify_character_iso};
use descent_lab::coset::{count_min_reps, double_coset_reps, min_coset_reps};
use descent_lab::solomon::{radical_spanning_set, Strategy, StructureTable};
use descent_lab::table::class_table;
use descent_lab::weyl::{
    all_permutations, enumerate_partitions, enumerate_subsets, Rank, SimpleRootSet,
};
use descent_lab::Rat;

fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

fn table(n: usize, strategy: Strategy) -> std::sync::Arc<StructureTable> {
    StructureTable::cached(rank(n), strategy).unwrap()
}

fn check_elapsed(start: Instant, budget: Duration, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "{what} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_1_class_table_reproduction() {
    let start = Instant::now();
    let doc = class_table(&table(3, Strategy::Auto)).unwrap();
    assert_eq!(doc.labels, vec!["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    // the full 5×5 table, λ1..λ5 = [4],[3,1],[2,2],[2,1,1],[1,1,1,1]
    let l = |idx: usize| doc.labels[idx].clone();
    let cell = |terms: &[(usize, u64)]| -> BTreeMap<String, u64> {
        terms.iter().map(|&(idx, c)| (l(idx), c)).collect()
    };
    let expected: Vec<Vec<BTreeMap<String, u64>>> = vec![
        vec![cell(&[(0, 1)]), cell(&[(1, 1)]), cell(&[(2, 1)]), cell(&[(3, 1)]), cell(&[(4, 1)])],
        vec![
            cell(&[(1, 1)]),
            cell(&[(1, 1), (3, 1)]),
            cell(&[(3, 2)]),
            cell(&[(3, 2), (4, 1)]),
            cell(&[(4, 4)]),
        ],
        vec![
            cell(&[(2, 1)]),
            cell(&[(3, 2)]),
            cell(&[(2, 2), (4, 1)]),
            cell(&[(3, 2), (4, 2)]),
            cell(&[(4, 6)]),
        ],
        vec![
            cell(&[(3, 1)]),
            cell(&[(3, 2), (4, 1)]),
            cell(&[(3, 2), (4, 2)]),
            cell(&[(3, 2), (4, 5)]),
            cell(&[(4, 12)]),
        ],
        vec![
            cell(&[(4, 1)]),
            cell(&[(4, 4)]),
            cell(&[(4, 6)]),
            cell(&[(4, 12)]),
            cell(&[(4, 24)]),
        ],
    ];
    assert_eq!(doc.cells, expected, "rank-3 class table differs from the expected products");
    // golden document, byte-for-byte
    let golden = include_str!("data/rank3_class_table.json");
    assert_eq!(doc.to_json(), golden);
    check_elapsed(start, Duration::from_secs(1), "criterion 1");
    println!("criterion 1 (rank-3 class table reproduction): pass");
}

#[test]
fn criterion_2_dimension_counts() {
    let start = Instant::now();
    let expected = [(1, 2, 2), (2, 4, 3), (3, 8, 5), (4, 16, 7), (5, 32, 11)];
    for (n, solomon_dim, class_dim) in expected {
        let r = rank(n);
        assert_eq!(enumerate_subsets(r).len(), solomon_dim);
        assert_eq!(enumerate_partitions(r).len(), class_dim);
    }
    check_elapsed(start, Duration::from_secs(1), "criterion 2");
    println!("criterion 2 (dimension counts): pass");
}

#[test]
fn criterion_3_well_definedness() {
    let start = Instant::now();
    for n in [3, 4] {
        assert!(
            verify_well_defined(&table(n, Strategy::Auto)).unwrap(),
            "representative independence failed at rank {n}"
        );
    }
    check_elapsed(start, Duration::from_secs(10), "criterion 3");
    println!("criterion 3 (well-definedness): pass");
}

#[test]
fn criterion_4_commutativity() {
    let start = Instant::now();
    for n in 1..=5 {
        assert!(
            verify_commutative(&table(n, Strategy::Auto)).unwrap(),
            "commutativity failed at rank {n}"
        );
    }
    check_elapsed(start, Duration::from_secs(30), "criterion 4");
    println!("criterion 4 (commutativity): pass");
}

#[test]
fn criterion_5_semisimplicity() {
    let start = Instant::now();
    for n in 1..=5 {
        let t = table(n, Strategy::Auto);
        assert!(is_semisimple(&t).unwrap(), "class algebra degenerate at rank {n}");
        assert!(!gram_matrix(&t).unwrap().determinant().is_zero());
    }
    for n in 2..=4 {
        let r = rank(n);
        let t = table(n, Strategy::Auto);
        let gram = solomon_gram_matrix(&t);
        assert!(
            gram.determinant().is_zero(),
            "Solomon trace form nondegenerate at rank {n}"
        );
        let subsets = enumerate_subsets(r);
        for e in radical_spanning_set(r) {
            let v: Vec<Rat> = subsets.iter().map(|&j| e.coeff(j)).collect();
            assert!(
                gram.mul_vec(&v).iter().all(Rat::is_zero),
                "radical element not in trace-form null space at rank {n}"
            );
        }
        let expected_kernel = (1usize << n) - enumerate_partitions(r).len();
        assert_eq!(projection_kernel_dimension(r), expected_kernel);
        assert_eq!(radical_span_rank(r), expected_kernel);
    }
    assert_eq!(projection_kernel_dimension(rank(3)), 3);
    check_elapsed(start, Duration::from_secs(60), "criterion 5");
    println!("criterion 5 (semisimplicity): pass");
}

#[test]
fn criterion_6_oracle_equivalence() {
    let start = Instant::now();
    for n in 1..=5 {
        let r = rank(n);
        let brute = table(n, Strategy::Brute);
        let matrix = table(n, Strategy::Matrix);
        for j in enumerate_subsets(r) {
            for k in enumerate_subsets(r) {
                assert_eq!(
                    brute.row(j, k),
                    matrix.row(j, k),
                    "structure constants differ at rank {n}, J={j}, K={k}"
                );
                let margin: u64 = brute.row(j, k).values().sum();
                assert_eq!(
                    margin,
                    double_coset_reps(j, k, r).reps.len() as u64,
                    "margin identity failed at rank {n}, J={j}, K={k}"
                );
            }
        }
    }
    let r3 = rank(3);
    let a1 = SimpleRootSet::from_indices(&[1], r3).unwrap();
    let margin: u64 = table(3, Strategy::Brute).row(a1, a1).values().sum();
    assert_eq!(margin, 7);
    check_elapsed(start, Duration::from_secs(120), "criterion 6");
    println!("criterion 6 (structure-constant oracle equivalence): pass");
}

#[test]
fn criterion_7_character_isomorphism() {
    let start = Instant::now();
    for n in 1..=4 {
        assert!(
            verify_character_iso(&table(n, Strategy::Auto)).unwrap(),
            "character isomorphism failed at rank {n}"
        );
    }
    check_elapsed(start, Duration::from_secs(60), "criterion 7");
    println!("criterion 7 (character isomorphism): pass");
}

#[test]
fn criterion_8_burnside_isomorphism() {
    let start = Instant::now();
    for n in 1..=4 {
        assert!(
            verify_burnside_iso(&table(n, Strategy::Auto)).unwrap(),
            "Burnside isomorphism failed at rank {n}"
        );
    }
    check_elapsed(start, Duration::from_secs(60), "criterion 8");
    println!("criterion 8 (Burnside isomorphism): pass");
}

#[test]
fn criterion_9_coset_machinery() {
    let start = Instant::now();
    // exhaustive at n ≤ 4
    for n in 1..=4 {
        let r = rank(n);
        for j in enumerate_subsets(r) {
            let reps = min_coset_reps(j, r).reps;
            assert_eq!(reps.len() as u64, count_min_reps(j, r));
            let comp = j.composition(r);
            let in_wj = |v: &descent_lab::Permutation| {
                let mut pos = 1usize;
                comp.parts().iter().all(|&p| {
                    let ok = (pos..pos + p).all(|i| {
                        let img = v.apply(i);
                        img >= pos && img < pos + p
                    });
                    pos += p;
                    ok
                })
            };
            for w in all_permutations(r.degree()) {
                let mut hits = 0;
                for d in &reps {
                    let v = d.inverse().compose(&w).unwrap();
                    if in_wj(&v) {
                        hits += 1;
                        assert_eq!(
                            w.length(),
                            d.length() + v.length(),
                            "length additivity failed for w={w}, J={j}, rank {n}"
                        );
                    }
                }
                assert_eq!(hits, 1, "coset of w={w} has {hits} minimal reps, J={j}");
            }
        }
    }
    // sampling at n = 5: every 7th group element against every subset
    let r = rank(5);
    let group = all_permutations(r.degree());
    for j in enumerate_subsets(r) {
        let reps = min_coset_reps(j, r).reps;
        assert_eq!(reps.len() as u64, count_min_reps(j, r));
        let comp = j.composition(r);
        let in_wj = |v: &descent_lab::Permutation| {
            let mut pos = 1usize;
            comp.parts().iter().all(|&p| {
                let ok = (pos..pos + p).all(|i| {
                    let img = v.apply(i);
                    img >= pos && img < pos + p
                });
                pos += p;
                ok
            })
        };
        for w in group.iter().step_by(7) {
            let mut hits = 0;
            for d in &reps {
                let v = d.inverse().compose(w).unwrap();
                if in_wj(&v) {
                    hits += 1;
                    assert_eq!(w.length(), d.length() + v.length());
                }
            }
            assert_eq!(hits, 1);
        }
    }
    check_elapsed(start, Duration::from_secs(60), "criterion 9");
    println!("criterion 9 (coset machinery): pass");
}
