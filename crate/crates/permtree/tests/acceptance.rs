//! Acceptance suite: one test per acceptance criterion, each printing a
//! single PASS line (visible with `cargo test --test acceptance --
//! --nocapture`). Every tolerance is pinned here.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use permtree::codec::{decode, encode};
use permtree::distance::{bfs_oracle_distance, perm_distance, tree_edit_distance};
use permtree::edit::{delete_at, insert_inner, insert_left, insert_right, neighbor_counts};
use permtree::enumeration::{
    average_distance_to_chain, average_distance_to_identity, average_height, catalan,
    chain_distance_asymptotic, chain_distance_series, deep_leaf_table, height_asymptotic,
    height_counts, leaf_series, leaf_series_closed_form, narayana, neighborhood_report,
    star_distance_series, trees_of_size,
};
use permtree::factors::{complete_factors, FactorSpan};
use permtree::perm::{common_pattern_brute_force, Permutation};
use permtree::tree::OrderedTree;

fn p(text: &str) -> Permutation {
    text.parse().expect("acceptance permutation")
}

fn span(start: usize, end: usize) -> FactorSpan {
    FactorSpan::new(start, end)
}

#[test]
fn criterion_01_bijection_roundtrip() {
    let started = Instant::now();
    let mut ten_edge = 0usize;
    let mut total = 0usize;
    for n in 0..=10 {
        for tree in trees_of_size(n).unwrap() {
            let perm = encode(&tree);
            assert_eq!(decode(&perm).unwrap(), tree, "decode ∘ encode at {perm}");
            assert_eq!(encode(&decode(&perm).unwrap()), perm, "encode ∘ decode at {perm}");
            total += 1;
            if n == 10 {
                ten_edge += 1;
            }
        }
    }
    assert_eq!(ten_edge, 16796, "C(10) trees with ten edges");
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "PASS criterion 1: bijection round-trip on {total} trees (16796 with ten edges) in {elapsed:?}"
    );
}

#[test]
fn criterion_02_complete_factors_of_figure_permutation() {
    let spans = complete_factors(&p("1524376")).unwrap();
    let expected = vec![
        span(1, 1),
        span(1, 5),
        span(1, 7),
        span(2, 5),
        span(2, 7),
        span(3, 3),
        span(3, 5),
        span(4, 5),
        span(5, 5),
        span(6, 7),
        span(7, 7),
    ];
    assert_eq!(spans, expected);
    println!("PASS criterion 2: the 11 complete factors of 1524376 match exactly");
}

#[test]
fn criterion_03_insertion_golden_values() {
    let sigma = p("1524376");
    let f = span(4, 5); // the factor 43
    assert_eq!(insert_inner(&sigma, f).unwrap(), p("16254387"));
    assert_eq!(insert_right(&sigma, f).unwrap(), p("16243587"));
    assert_eq!(insert_left(&sigma, f).unwrap(), p("16235487"));
    println!("PASS criterion 3: insertion golden values 16254387 / 16243587 / 16235487");
}

#[test]
fn criterion_04_worked_example() {
    // Two deletions of the letter with value 1, then an inner insertion at
    // the factor "3".
    let start = p("31264587");
    let step1 = delete_at(&start, start.position_of(1).unwrap()).unwrap();
    assert_eq!(step1, p("2153476"));
    let step2 = delete_at(&step1, step1.position_of(1).unwrap()).unwrap();
    assert_eq!(step2, p("142365"));
    let pos3 = step2.position_of(3).unwrap();
    let step3 = insert_inner(&step2, span(pos3, pos3)).unwrap();
    assert_eq!(step3, p("1524376"));

    let target = p("1524376");
    let dp = perm_distance(&start, &target).unwrap();
    assert_eq!(dp.distance, 3);
    let bfs = bfs_oracle_distance(&start, &target, 15).unwrap();
    assert_eq!(bfs, 3);
    let u = common_pattern_brute_force(&start, &target).unwrap();
    assert_eq!(u.len(), 6);
    assert_eq!(dp.distance, 8 + 7 - 2 * u.len());
    println!("PASS criterion 4: 31264587 → 2153476 → 142365 → 1524376, distance 3 on all routes");
}

#[test]
fn criterion_05_three_way_distance_agreement() {
    let started = Instant::now();
    let mut trees = Vec::new();
    for n in 0..=5 {
        trees.extend(trees_of_size(n).unwrap());
    }
    let five_edge = trees.iter().filter(|t| t.edge_count() == 5).count();
    assert_eq!(five_edge, 42);
    let mut pairs = 0usize;
    for t1 in &trees {
        for t2 in &trees {
            let a = encode(t1);
            let b = encode(t2);
            let dp = tree_edit_distance(t1, t2).distance;
            let bfs = bfs_oracle_distance(&a, &b, (a.len() + b.len()).max(1)).unwrap();
            let u = common_pattern_brute_force(&a, &b).unwrap();
            assert_eq!(dp, bfs, "dp vs bfs at {a} vs {b}");
            assert_eq!(dp, a.len() + b.len() - 2 * u.len(), "dp vs formula at {a} vs {b}");
            pairs += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "PASS criterion 5: DP = BFS = pattern formula on {pairs} pairs (42x42 five-edge included) in {elapsed:?}"
    );
}

#[test]
fn criterion_06_lis_is_leaves_and_lds_is_height() {
    let mut checked = 0usize;
    for n in 0..=8 {
        for tree in trees_of_size(n).unwrap() {
            let perm = encode(&tree);
            assert_eq!(perm.lis_length(), tree.leaf_count(), "lis at {perm}");
            assert_eq!(perm.lds_length(), tree.height(), "lds at {perm}");
            checked += 1;
        }
    }
    println!("PASS criterion 6: lis = leaves and lds = height on {checked} permutations");
}

#[test]
fn criterion_07_narayana_cross_check() {
    for n in 1..=10 {
        let mut histogram = vec![0u64; n + 1];
        for tree in trees_of_size(n).unwrap() {
            histogram[tree.leaf_count()] += 1;
        }
        for (k, &count) in histogram.iter().enumerate().skip(1) {
            let expected = narayana(n, k).unwrap();
            assert_eq!(BigInt::from(count), expected, "narayana({n},{k})");
            assert_eq!(
                expected,
                narayana(n, n + 1 - k).unwrap(),
                "symmetry at ({n},{k})"
            );
        }
    }
    println!("PASS criterion 7: leaf histograms equal Narayana numbers with symmetry, n <= 10");
}

#[test]
fn criterion_08_leaf_series_two_routes() {
    let recurrence = leaf_series(30).unwrap();
    let closed = leaf_series_closed_form(30).unwrap();
    assert_eq!(recurrence, closed);
    assert_eq!(recurrence.get(&[2, 1]), &BigInt::one());
    assert_eq!(recurrence.get(&[2, 2]), &BigInt::one());
    assert_eq!(recurrence.get(&[2, 0]), &BigInt::zero());
    println!("PASS criterion 8: leaf series recurrence equals closed form to order 30; [t^2] = p + p^2");
}

#[test]
fn criterion_09_star_distance_series_and_average() {
    let table = star_distance_series(10).unwrap();
    for n in 0..=10 {
        let mut histogram = vec![BigInt::zero(); 2 * n + 1];
        for tree in trees_of_size(n).unwrap() {
            histogram[2 * (n - encode(&tree).lis_length())] += BigInt::one();
        }
        for (d, count) in histogram.iter().enumerate() {
            assert_eq!(table.get(&[n, d]), count, "[t^{n} q^{d}]");
        }
    }
    for n in 1..=10 {
        assert_eq!(
            average_distance_to_identity(n).unwrap(),
            BigRational::from_integer(BigInt::from(n as i64 - 1)),
            "average at {n}"
        );
    }
    println!("PASS criterion 9: star-distance series matches enumeration, average is n-1, n <= 10");
}

#[test]
fn criterion_10_chain_distance_series() {
    let table = chain_distance_series(10).unwrap();
    // The printed polynomial through x^4.
    let printed: &[(usize, usize, i64)] = &[
        (1, 0, 1),
        (2, 2, 1),
        (2, 0, 1),
        (3, 4, 1),
        (3, 2, 3),
        (3, 0, 1),
        (4, 6, 1),
        (4, 4, 7),
        (4, 2, 5),
        (4, 0, 1),
    ];
    for &(n, d, c) in printed {
        assert_eq!(table.get(&[n, d]), &BigInt::from(c), "[x^{n} y^{d}]");
    }
    for n in 0..=10 {
        let mut histogram = vec![BigInt::zero(); 2 * n + 1];
        for tree in trees_of_size(n).unwrap() {
            histogram[2 * (n - tree.height())] += BigInt::one();
        }
        for (d, count) in histogram.iter().enumerate() {
            assert_eq!(table.get(&[n, d]), count, "[x^{n} y^{d}] vs enumeration");
        }
    }
    println!(
        "PASS criterion 10: chain-distance series reproduces 7x^4y^4 and 5x^4y^2 and matches enumeration, n <= 10"
    );
}

#[test]
fn criterion_11_deep_leaf_marginal_vs_continued_fraction() {
    let deep = deep_leaf_table(30).unwrap();
    let heights = height_counts(30).unwrap();
    for n in 1..=30 {
        for j in 1..=n {
            let mut marginal = BigInt::zero();
            for k in 1..=n {
                marginal += deep.get(&[n, j, k]);
            }
            assert_eq!(&marginal, heights.get(&[n, j]), "at n={n}, height={j}");
        }
        let total: BigInt = (1..=n).map(|j| heights.get(&[n, j]).clone()).sum();
        assert_eq!(total, catalan(n), "total at {n}");
    }
    println!("PASS criterion 11: deep-leaf marginals equal continued-fraction height counts, n <= 30");
}

#[test]
fn criterion_12_asymptotic_reports() {
    // Hard tolerance: the exact average height at n = 200 is within 5% of
    // sqrt(pi n) - 1/2.
    let n = 200;
    let exact = average_height(n)
        .unwrap()
        .to_f64()
        .expect("average height fits f64");
    let asymptotic = height_asymptotic(n);
    let relative = (exact - asymptotic).abs() / asymptotic;
    assert!(
        relative < 0.05,
        "average height {exact} vs asymptotic {asymptotic}: relative error {relative}"
    );
    // The same tolerance phrased on the chain distance 2(n − height).
    let chain_exact = average_distance_to_chain(n)
        .unwrap()
        .to_f64()
        .expect("chain average fits f64");
    let chain_asymptotic = chain_distance_asymptotic(n);
    let chain_relative = (chain_exact - chain_asymptotic).abs() / chain_asymptotic;
    assert!(
        chain_relative < 0.05,
        "chain distance {chain_exact} vs asymptotic {chain_asymptotic}"
    );
    println!(
        "PASS criterion 12: average height at n=200 is {exact:.4} vs asymptotic {asymptotic:.4} (relative error {relative:.4}); chain distance {chain_exact:.4} vs {chain_asymptotic:.4} (relative error {chain_relative:.4})"
    );
    // Report-only part: mean pairwise distance against n / ln n.
    for n in 5..=7 {
        let report = neighborhood_report(n).unwrap();
        let mean = report
            .mean_pairwise_distance
            .to_f64()
            .expect("mean fits f64");
        println!(
            "      report: mean pairwise distance at n={n} is {mean:.4} (n/ln n = {:.4})",
            report.comparison_n_over_ln_n
        );
    }
}

#[test]
fn criterion_13_neighborhood_bounds() {
    let mut checked = 0usize;
    for n in 0..=8 {
        let vertex_count = n + 1;
        for tree in trees_of_size(n).unwrap() {
            let (deletions, insertions) = neighbor_counts(&encode(&tree)).unwrap();
            assert!(
                deletions < vertex_count,
                "deletions {deletions} exceed {} at {tree}",
                vertex_count - 1
            );
            assert!(
                insertions <= 3 * vertex_count.pow(3),
                "insertions {insertions} exceed {} at {tree}",
                3 * vertex_count.pow(3)
            );
            checked += 1;
        }
    }
    println!(
        "PASS criterion 13: deletion/insertion neighborhood bounds hold for {checked} trees, n <= 8"
    );
}

/// The empty-to-one-edge edge case rides along with the criteria: a single
/// insertion separates the empty permutation from (1).
#[test]
fn empty_permutation_distance() {
    let r = perm_distance(&Permutation::empty(), &p("1")).unwrap();
    assert_eq!(r.distance, 1);
    assert_eq!(
        tree_edit_distance(&OrderedTree::empty(), &OrderedTree::parse("()").unwrap()).distance,
        1
    );
}
