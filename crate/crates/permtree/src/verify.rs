//! Self-check suites: every cross-property the crate promises, runnable in
//! bulk over exhaustively generated instances. The command-line `verify`
//! subcommand is a thin wrapper over [`run_suite`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::codec::{decode, encode};
use crate::distance::{bfs_oracle_distance, perm_distance, tree_edit_distance};
use crate::edit::{delete_at, neighbors};
use crate::enumeration::{
    average_distance_to_identity, catalan, chain_distance_series, deep_leaf_table, height_counts,
    leaf_series_closed_form, narayana, neighborhood_report, star_distance_series, trees_of_size,
    NEIGHBORHOOD_CAP,
};
use crate::error::{Error, Result};
use crate::factors::{classify_compact, compact_factors, complete_factors, CompactClass};
use crate::perm::{common_pattern_brute_force, Permutation, Word};
use crate::tree::OrderedTree;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The suites accepted by [`run_suite`]; `all` runs everything.
pub const SUITES: &[&str] = &[
    "perm",
    "bijection",
    "factors",
    "editops",
    "distance",
    "counts",
    "series",
    "all",
];

/// Runs one suite with sizes capped at `max_n` (individual checks lower the
/// cap further where the sweep is exponential). Fails only on unusable
/// arguments; check failures are reported, not raised.
pub fn run_suite(suite: &str, max_n: usize) -> Result<Vec<CheckReport>> {
    if !SUITES.contains(&suite) {
        return Err(Error::Domain(format!(
            "unknown suite {suite:?}; expected one of {SUITES:?}"
        )));
    }
    if max_n > 12 {
        return Err(Error::Domain(format!(
            "max n is capped at 12 (exhaustive sweeps), got {max_n}"
        )));
    }
    let mut reports = Vec::new();
    let all = suite == "all";
    if all || suite == "perm" {
        reports.push(stack_scan_vs_triple_scan(max_n.min(9)));
        reports.push(normalize_idempotent(max_n.min(8)));
        reports.push(statistics_transport(max_n.min(10)));
    }
    if all || suite == "bijection" {
        reports.push(codec_roundtrip(max_n.min(10)));
        reports.push(text_roundtrip(max_n.min(10)));
    }
    if all || suite == "factors" {
        reports.push(factors_match_subtrees(max_n.min(8)));
        reports.push(factor_implications(max_n.min(9)));
        reports.push(children_remark(max_n.min(8)));
        reports.push(compact_dichotomy(max_n.min(8)));
    }
    if all || suite == "editops" {
        reports.push(closure_under_operations(max_n.min(8)));
        reports.push(inverse_operations(max_n.min(7)));
        reports.push(inner_insertion_subdivides(max_n.min(6)));
        reports.push(neighborhood_bounds(max_n.min(NEIGHBORHOOD_CAP)));
    }
    if all || suite == "distance" {
        reports.push(three_way_agreement(max_n.min(5)));
        reports.push(metric_axioms(max_n.min(4)));
        reports.push(common_pattern_is_shared(max_n.min(6)));
    }
    if all || suite == "counts" {
        reports.push(generation_counts(max_n.min(10)));
        reports.push(narayana_histograms(max_n.min(10)));
    }
    if all || suite == "series" {
        reports.push(leaf_series_two_routes(30));
        reports.push(star_distance_vs_enumeration(max_n.min(10)));
        reports.push(identity_average(max_n.min(10)));
        reports.push(deep_leaf_vs_continued_fraction(30));
        reports.push(deep_leaf_vs_generation(max_n.min(9)));
        reports.push(chain_distance_vs_enumeration(max_n.min(10)));
        reports.push(chain_distance_printed_terms());
    }
    Ok(reports)
}

fn report(name: &'static str, passed: bool, detail: String) -> CheckReport {
    CheckReport {
        name,
        passed,
        detail,
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut items: Vec<usize> = (1..=n).collect();
    let mut counters = vec![0usize; n];
    let mut out = vec![Permutation::new(items.clone()).expect("identity")];
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(counters[i], i);
            }
            out.push(Permutation::new(items.clone()).expect("permutation"));
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

fn sortable_perms(max_n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for tree in trees_of_size(n).expect("within cap") {
            out.push(encode(&tree));
        }
    }
    out
}

fn stack_scan_vs_triple_scan(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for n in 0..=max_n {
        for perm in all_permutations(n) {
            scanned += 1;
            if perm.is_stack_sortable() != perm.find_231_triple().is_none() {
                return report(
                    "stack-scan-vs-triple-scan",
                    false,
                    format!("disagreement on {perm}"),
                );
            }
        }
    }
    report(
        "stack-scan-vs-triple-scan",
        true,
        format!("{scanned} permutations, sizes <= {max_n}"),
    )
}

fn normalize_idempotent(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for n in 0..=max_n {
        for perm in all_permutations(n) {
            scanned += 1;
            let word = Word::new(perm.as_slice().to_vec()).expect("permutation word");
            if word.normalize() != perm {
                return report(
                    "normalize-idempotent",
                    false,
                    format!("normalize({perm}) differs"),
                );
            }
        }
    }
    report(
        "normalize-idempotent",
        true,
        format!("{scanned} permutations, sizes <= {max_n}"),
    )
}

fn statistics_transport(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for n in 0..=max_n {
        for tree in trees_of_size(n).expect("within cap") {
            scanned += 1;
            let perm = encode(&tree);
            if perm.lis_length() != tree.leaf_count() || perm.lds_length() != tree.height() {
                return report(
                    "lis-lds-equal-leaves-height",
                    false,
                    format!("mismatch on {perm}"),
                );
            }
        }
    }
    report(
        "lis-lds-equal-leaves-height",
        true,
        format!("{scanned} trees, sizes <= {max_n}"),
    )
}

fn codec_roundtrip(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for n in 0..=max_n {
        for tree in trees_of_size(n).expect("within cap") {
            scanned += 1;
            let perm = encode(&tree);
            if !perm.is_stack_sortable() {
                return report("codec-roundtrip", false, format!("{perm} is not sortable"));
            }
            let back = match decode(&perm) {
                Ok(t) => t,
                Err(e) => return report("codec-roundtrip", false, format!("decode failed: {e}")),
            };
            if back != tree || encode(&back) != perm {
                return report("codec-roundtrip", false, format!("roundtrip broke on {perm}"));
            }
        }
    }
    report(
        "codec-roundtrip",
        true,
        format!("{scanned} trees, sizes <= {max_n}"),
    )
}

fn text_roundtrip(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for n in 0..=max_n {
        for tree in trees_of_size(n).expect("within cap") {
            scanned += 1;
            match OrderedTree::parse(&tree.to_dyck()) {
                Ok(back) if back == tree => {}
                _ => {
                    return report(
                        "tree-text-roundtrip",
                        false,
                        format!("parse of serialization broke on {tree}"),
                    )
                }
            }
        }
    }
    report(
        "tree-text-roundtrip",
        true,
        format!("{scanned} trees, sizes <= {max_n}"),
    )
}

fn factors_match_subtrees(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for n in 0..=max_n {
        for tree in trees_of_size(n).expect("within cap") {
            scanned += 1;
            let perm = encode(&tree);
            let spans = match complete_factors(&perm) {
                Ok(s) => s,
                Err(e) => return report("factors-match-subtrees", false, e.to_string()),
            };
            let subtrees = tree.subtrees();
            if spans.len() != subtrees.len() {
                return report(
                    "factors-match-subtrees",
                    false,
                    format!(
                        "{perm}: {} factors vs {} subtrees",
                        spans.len(),
                        subtrees.len()
                    ),
                );
            }
            for (span, edges) in spans.iter().zip(subtrees.iter()) {
                let values: std::collections::BTreeSet<usize> =
                    span.letters(&perm).iter().copied().collect();
                if &values != edges {
                    return report(
                        "factors-match-subtrees",
                        false,
                        format!("{perm}: edge set mismatch at {span}"),
                    );
                }
            }
        }
    }
    report(
        "factors-match-subtrees",
        true,
        format!("{scanned} trees, sizes <= {max_n}"),
    )
}

fn factor_implications(max_n: usize) -> CheckReport {
    use crate::factors::{is_compact, is_complete, FactorSpan};
    let mut scanned = 0usize;
    for perm in sortable_perms(max_n) {
        for start in 1..=perm.len() {
            for end in start..=perm.len() {
                scanned += 1;
                let span = FactorSpan::new(start, end);
                let complete = is_complete(&perm, span).expect("span in range");
                let compact = is_compact(&perm, span).expect("span in range");
                if complete && !compact {
                    return report(
                        "complete-implies-compact",
                        false,
                        format!("{perm} at {span}"),
                    );
                }
                if complete {
                    let normalized = Word::new(span.letters(&perm).to_vec())
                        .expect("distinct letters")
                        .normalize();
                    if !normalized.is_stack_sortable() {
                        return report(
                            "complete-implies-compact",
                            false,
                            format!("complete factor of {perm} at {span} is not sortable"),
                        );
                    }
                }
            }
        }
    }
    report(
        "complete-implies-compact",
        true,
        format!("{scanned} spans, sizes <= {max_n}"),
    )
}

fn children_remark(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for n in 1..=max_n {
        for tree in trees_of_size(n).expect("within cap") {
            let perm = encode(&tree);
            let flat = crate::tree::FlatTree::build(&tree);
            let all = complete_factors(&perm).expect("sortable");
            for k in 1..=n {
                scanned += 1;
                let Some(shortest) = all
                    .iter()
                    .filter(|sp| sp.start == k)
                    .min_by_key(|sp| sp.len())
                else {
                    return report(
                        "children-from-shortest-factor",
                        false,
                        format!("{perm}: no complete factor starts at {k}"),
                    );
                };
                let letters = shortest.letters(&perm);
                let head = letters[0];
                let mut recovered = Vec::new();
                let mut running_max = 0;
                for &x in &letters[1..] {
                    if x < head && x > running_max {
                        recovered.push(x);
                    }
                    running_max = running_max.max(x);
                }
                let vertex = flat.vertex_of_label[head];
                let actual: Vec<usize> = flat.children[vertex]
                    .iter()
                    .map(|&c| flat.label[c])
                    .collect();
                if recovered != actual {
                    return report(
                        "children-from-shortest-factor",
                        false,
                        format!("{perm} at position {k}"),
                    );
                }
            }
        }
    }
    report(
        "children-from-shortest-factor",
        true,
        format!("{scanned} positions, sizes <= {max_n}"),
    )
}

fn compact_dichotomy(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for perm in sortable_perms(max_n) {
        if perm.is_empty() {
            continue;
        }
        for span in compact_factors(&perm) {
            scanned += 1;
            match classify_compact(&perm, span) {
                Ok(CompactClass::Subtree) => {}
                Ok(CompactClass::InternalPath { edges }) => {
                    if edges.len() != span.len() {
                        return report(
                            "compact-dichotomy",
                            false,
                            format!("{perm} at {span}: path does not cover the factor"),
                        );
                    }
                }
                Err(e) => return report("compact-dichotomy", false, e.to_string()),
            }
        }
    }
    report(
        "compact-dichotomy",
        true,
        format!("{scanned} compact factors, sizes <= {max_n}"),
    )
}

fn closure_under_operations(max_n: usize) -> CheckReport {
    let mut scanned = 0usize;
    for perm in sortable_perms(max_n) {
        match neighbors(&perm) {
            Ok(list) => {
                for q in list {
                    scanned += 1;
                    if !q.is_stack_sortable() {
                        return report(
                            "closure-under-operations",
                            false,
                            format!("neighbor {q} of {perm} is not sortable"),
                        );
                    }
                }
            }
            Err(e) => return report("closure-under-operations", false, e.to_string()),
        }
    }
    report(
        "closure-under-operations",
        true,
        format!("{scanned} neighbors, sizes <= {max_n}"),
    )
}

fn inverse_operations(max_n: usize) -> CheckReport {
    use crate::edit::{insert_inner, insert_left, insert_right};
    let mut scanned = 0usize;
    for perm in sortable_perms(max_n) {
        // Insertions undone by deleting the inserted letter.
        for f in complete_factors(&perm).expect("sortable") {
            let u_len = f.start - 1;
            let cases = [
                (insert_inner(&perm, f).expect("complete"), u_len + 1),
                (
                    insert_right(&perm, f).expect("complete"),
                    u_len + f.len() + 1,
                ),
                (insert_left(&perm, f).expect("complete"), u_len + 1),
            ];
            for (inserted, pos) in cases {
                scanned += 1;
                if delete_at(&inserted, pos).expect("in range") != perm {
                    return report(
                        "insertion-deletion-inverse",
                        false,
                        format!("insertion at {f} of {perm} not undone"),
                    );
                }
            }
        }
        // Deletions undone by some insertion.
        for pos in 1..=perm.len() {
            scanned += 1;
            let smaller = delete_at(&perm, pos).expect("in range");
            let recovered = neighbors(&smaller)
                .expect("sortable")
                .into_iter()
                .any(|q| q == perm);
            if !recovered {
                return report(
                    "insertion-deletion-inverse",
                    false,
                    format!("deletion at {pos} of {perm} not invertible"),
                );
            }
        }
    }
    report(
        "insertion-deletion-inverse",
        true,
        format!("{scanned} operations, sizes <= {max_n}"),
    )
}

fn inner_insertion_subdivides(max_n: usize) -> CheckReport {
    use crate::edit::insert_inner;
    let mut scanned = 0usize;
    for n in 1..=max_n {
        for tree in trees_of_size(n).expect("within cap") {
            let perm = encode(&tree);
            for f in complete_factors(&perm).expect("sortable") {
                scanned += 1;
                let inserted =
                    match insert_inner(&perm, f).and_then(|q| decode(&q)) {
                        Ok(t) => t,
                        Err(e) => {
                            return report("inner-insertion-subdivides", false, e.to_string())
                        }
                    };
                let Some(expected) = subdivide_matching_run(&tree, &perm, f) else {
                    return report(
                        "inner-insertion-subdivides",
                        false,
                        format!("{perm}: factor {f} does not match a child run"),
                    );
                };
                if inserted != expected {
                    return report(
                        "inner-insertion-subdivides",
                        false,
                        format!("{perm}: subdivision at {f} built a different tree"),
                    );
                }
            }
        }
    }
    report(
        "inner-insertion-subdivides",
        true,
        format!("{scanned} insertions, sizes <= {max_n}"),
    )
}

/// Independent tree surgery: find the child run whose downward closure
/// carries exactly the factor's letters and wrap that run under one new
/// vertex.
fn subdivide_matching_run(
    tree: &OrderedTree,
    perm: &Permutation,
    f: crate::factors::FactorSpan,
) -> Option<OrderedTree> {
    use std::collections::BTreeSet;
    let wanted: BTreeSet<usize> = f.letters(perm).iter().copied().collect();
    let flat = crate::tree::FlatTree::build(tree);
    fn labels_below(
        flat: &crate::tree::FlatTree,
        vertex: usize,
        out: &mut std::collections::BTreeSet<usize>,
    ) {
        out.insert(flat.label[vertex]);
        for &c in &flat.children[vertex] {
            labels_below(flat, c, out);
        }
    }
    fn rebuild(
        tree: &OrderedTree,
        flat: &crate::tree::FlatTree,
        vertex: usize,
        target: usize,
        run: (usize, usize),
    ) -> OrderedTree {
        let rebuilt: Vec<OrderedTree> = tree
            .children()
            .iter()
            .zip(flat.children[vertex].iter())
            .map(|(child, &cv)| rebuild(child, flat, cv, target, run))
            .collect();
        if vertex == target {
            let (i, j) = run;
            let mut children = rebuilt[..i].to_vec();
            children.push(OrderedTree::with_children(rebuilt[i..=j].to_vec()));
            children.extend_from_slice(&rebuilt[j + 1..]);
            OrderedTree::with_children(children)
        } else {
            OrderedTree::with_children(rebuilt)
        }
    }
    for v in 0..flat.children.len() {
        let kids = flat.children[v].clone();
        for i in 0..kids.len() {
            for j in i..kids.len() {
                let mut labels = BTreeSet::new();
                for &c in &kids[i..=j] {
                    labels_below(&flat, c, &mut labels);
                }
                if labels == wanted {
                    return Some(rebuild(tree, &flat, 0, v, (i, j)));
                }
            }
        }
    }
    None
}

fn neighborhood_bounds(max_n: usize) -> CheckReport {
    for n in 0..=max_n {
        match neighborhood_report(n) {
            Ok(rep) if rep.bounds_hold => {}
            Ok(rep) => {
                return report(
                    "neighborhood-bounds",
                    false,
                    format!(
                        "n={n}: deletions {} (bound {}), insertions {} (bound {})",
                        rep.max_distinct_deletions,
                        rep.deletion_bound,
                        rep.max_distinct_insertions,
                        rep.insertion_bound
                    ),
                )
            }
            Err(e) => return report("neighborhood-bounds", false, e.to_string()),
        }
    }
    report(
        "neighborhood-bounds",
        true,
        format!("all trees with <= {max_n} edges"),
    )
}

fn three_way_agreement(max_n: usize) -> CheckReport {
    let mut trees = Vec::new();
    for n in 0..=max_n {
        trees.extend(trees_of_size(n).expect("within cap"));
    }
    let mut scanned = 0usize;
    for t1 in &trees {
        for t2 in &trees {
            scanned += 1;
            let a = encode(t1);
            let b = encode(t2);
            let dp = tree_edit_distance(t1, t2);
            let cap = (a.len() + b.len()).max(1);
            let bfs = match bfs_oracle_distance(&a, &b, cap) {
                Ok(d) => d,
                Err(e) => return report("three-way-distance-agreement", false, e.to_string()),
            };
            let u = match common_pattern_brute_force(&a, &b) {
                Ok(u) => u,
                Err(e) => return report("three-way-distance-agreement", false, e.to_string()),
            };
            let formula = a.len() + b.len() - 2 * u.len();
            if dp.distance != bfs || dp.distance != formula || dp.common.len() != u.len() {
                return report(
                    "three-way-distance-agreement",
                    false,
                    format!("{a} vs {b}: dp {} bfs {bfs} formula {formula}", dp.distance),
                );
            }
            if !a.contains_pattern(&u) || !b.contains_pattern(&u) {
                return report(
                    "three-way-distance-agreement",
                    false,
                    format!("{a} vs {b}: brute-force pattern {u} does not occur in both"),
                );
            }
        }
    }
    report(
        "three-way-distance-agreement",
        true,
        format!("{scanned} pairs, sizes <= {max_n}"),
    )
}

fn metric_axioms(max_n: usize) -> CheckReport {
    let perms = sortable_perms(max_n);
    let k = perms.len();
    let mut d = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            d[i][j] = perm_distance(&perms[i], &perms[j])
                .expect("sortable")
                .distance;
        }
    }
    for i in 0..k {
        for j in 0..k {
            if d[i][j] != d[j][i]
                || (d[i][j] == 0) != (perms[i] == perms[j])
                || !(d[i][j] + perms[i].len() + perms[j].len()).is_multiple_of(2)
            {
                return report(
                    "metric-axioms",
                    false,
                    format!("{} vs {}", perms[i], perms[j]),
                );
            }
            for l in 0..k {
                if d[i][l] > d[i][j] + d[j][l] {
                    return report(
                        "metric-axioms",
                        false,
                        format!("triangle broke at {} {} {}", perms[i], perms[j], perms[l]),
                    );
                }
            }
        }
    }
    // Deterministically sampled larger triples.
    let larger = sortable_perms(7);
    let mut rng: u64 = 0x5DEECE66D;
    let mut sampled = 0usize;
    for _ in 0..40 {
        let mut pick = || {
            rng = rng
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            larger[(rng >> 33) as usize % larger.len()].clone()
        };
        let (a, b, c) = (pick(), pick(), pick());
        let dab = perm_distance(&a, &b).expect("sortable").distance;
        let dbc = perm_distance(&b, &c).expect("sortable").distance;
        let dac = perm_distance(&a, &c).expect("sortable").distance;
        sampled += 1;
        if dac > dab + dbc || dab != perm_distance(&b, &a).expect("sortable").distance {
            return report("metric-axioms", false, format!("sampled triple {a} {b} {c}"));
        }
    }
    report(
        "metric-axioms",
        true,
        format!("{k}x{k} exhaustive pairs plus {sampled} sampled triples"),
    )
}

fn common_pattern_is_shared(max_n: usize) -> CheckReport {
    let perms = sortable_perms(max_n);
    let mut scanned = 0usize;
    for a in &perms {
        for b in &perms {
            scanned += 1;
            let r = perm_distance(a, b).expect("sortable");
            if !r.common.is_stack_sortable()
                || !a.contains_pattern(&r.common)
                || !b.contains_pattern(&r.common)
                || r.distance != a.len() + b.len() - 2 * r.common.len()
            {
                return report("common-pattern-is-shared", false, format!("{a} vs {b}"));
            }
            if let Some((wa, wb)) = &r.witness {
                let ok_a = a.subsequence(wa).map(|w| w.normalize()) == Ok(r.common.clone());
                let ok_b = b.subsequence(wb).map(|w| w.normalize()) == Ok(r.common.clone());
                if !ok_a || !ok_b {
                    return report(
                        "common-pattern-is-shared",
                        false,
                        format!("witness of {a} vs {b} does not realize the pattern"),
                    );
                }
            }
        }
    }
    report(
        "common-pattern-is-shared",
        true,
        format!("{scanned} pairs, sizes <= {max_n}"),
    )
}

fn generation_counts(max_n: usize) -> CheckReport {
    for n in 0..=max_n {
        let mut count = 0usize;
        let mut seen = std::collections::BTreeSet::new();
        for tree in trees_of_size(n).expect("within cap") {
            count += 1;
            seen.insert(tree.to_dyck());
        }
        if BigInt::from(count as i64) != catalan(n) || seen.len() != count {
            return report(
                "generation-counts",
                false,
                format!("n={n}: {count} trees, {} distinct", seen.len()),
            );
        }
    }
    report(
        "generation-counts",
        true,
        format!("catalan counts up to n={max_n}"),
    )
}

fn narayana_histograms(max_n: usize) -> CheckReport {
    for n in 1..=max_n {
        let mut histogram = vec![0i64; n + 1];
        for tree in trees_of_size(n).expect("within cap") {
            histogram[tree.leaf_count()] += 1;
        }
        for (k, &count) in histogram.iter().enumerate().skip(1) {
            let expected = narayana(n, k).expect("k in range");
            let symmetric = narayana(n, n + 1 - k).expect("k in range");
            if BigInt::from(count) != expected || expected != symmetric {
                return report(
                    "narayana-histograms",
                    false,
                    format!("mismatch at n={n}, k={k}"),
                );
            }
        }
    }
    report(
        "narayana-histograms",
        true,
        format!("histograms and symmetry up to n={max_n}"),
    )
}

fn leaf_series_two_routes(max_n: usize) -> CheckReport {
    let closed = match leaf_series_closed_form(max_n) {
        Ok(t) => t,
        Err(e) => return report("leaf-series-two-routes", false, e.to_string()),
    };
    let recurrence = match crate::enumeration::leaf_series(max_n) {
        Ok(t) => t,
        Err(e) => return report("leaf-series-two-routes", false, e.to_string()),
    };
    if recurrence != closed {
        return report(
            "leaf-series-two-routes",
            false,
            "closed form diverges from the recurrence".into(),
        );
    }
    let printed_ok = recurrence.get(&[2, 1]).is_one() && recurrence.get(&[2, 2]).is_one();
    report(
        "leaf-series-two-routes",
        printed_ok,
        format!("orders <= {max_n}; [t^2] = p + p^2: {printed_ok}"),
    )
}

fn star_distance_vs_enumeration(max_n: usize) -> CheckReport {
    let table = match star_distance_series(max_n) {
        Ok(t) => t,
        Err(e) => return report("star-distance-vs-enumeration", false, e.to_string()),
    };
    for n in 0..=max_n {
        let mut histogram = vec![BigInt::zero(); 2 * n + 1];
        for tree in trees_of_size(n).expect("within cap") {
            let perm = encode(&tree);
            histogram[2 * (n - perm.lis_length())] += BigInt::one();
        }
        for (d, count) in histogram.iter().enumerate() {
            if table.get(&[n, d]) != count {
                return report(
                    "star-distance-vs-enumeration",
                    false,
                    format!("mismatch at n={n}, d={d}"),
                );
            }
        }
    }
    report(
        "star-distance-vs-enumeration",
        true,
        format!("distributions up to n={max_n}"),
    )
}

fn identity_average(max_n: usize) -> CheckReport {
    for n in 1..=max_n {
        let expected = BigRational::from_integer(BigInt::from(n as i64 - 1));
        match average_distance_to_identity(n) {
            Ok(mean) if mean == expected => {}
            Ok(mean) => {
                return report(
                    "identity-average",
                    false,
                    format!("n={n}: mean {mean}, expected {expected}"),
                )
            }
            Err(e) => return report("identity-average", false, e.to_string()),
        }
    }
    report(
        "identity-average",
        true,
        format!("mean distance to the identity is n-1 up to n={max_n}"),
    )
}

fn deep_leaf_vs_continued_fraction(max_n: usize) -> CheckReport {
    let deep = match deep_leaf_table(max_n) {
        Ok(t) => t,
        Err(e) => return report("deep-leaf-vs-continued-fraction", false, e.to_string()),
    };
    let heights = match height_counts(max_n) {
        Ok(t) => t,
        Err(e) => return report("deep-leaf-vs-continued-fraction", false, e.to_string()),
    };
    for n in 1..=max_n {
        for j in 1..=n {
            let mut marginal = BigInt::zero();
            for k in 1..=n {
                marginal += deep.get(&[n, j, k]);
            }
            if &marginal != heights.get(&[n, j]) {
                return report(
                    "deep-leaf-vs-continued-fraction",
                    false,
                    format!("mismatch at n={n}, height={j}"),
                );
            }
        }
    }
    report(
        "deep-leaf-vs-continued-fraction",
        true,
        format!("height marginals agree up to n={max_n}"),
    )
}

fn deep_leaf_vs_generation(max_n: usize) -> CheckReport {
    let deep = match deep_leaf_table(max_n) {
        Ok(t) => t,
        Err(e) => return report("deep-leaf-vs-generation", false, e.to_string()),
    };
    for n in 1..=max_n {
        let mut histogram = vec![vec![0i64; n + 1]; n + 1];
        for tree in trees_of_size(n).expect("within cap") {
            let height = tree.height();
            histogram[height][deepest_leaf_count(&tree)] += 1;
        }
        for (j, row) in histogram.iter().enumerate().skip(1) {
            for (k, &count) in row.iter().enumerate().skip(1) {
                if deep.get(&[n, j, k]) != &BigInt::from(count) {
                    return report(
                        "deep-leaf-vs-generation",
                        false,
                        format!("mismatch at n={n}, height={j}, deepest leaves={k}"),
                    );
                }
            }
        }
    }
    report(
        "deep-leaf-vs-generation",
        true,
        format!("triple statistics agree up to n={max_n}"),
    )
}

/// Leaves sitting at the maximal depth of the tree.
fn deepest_leaf_count(tree: &OrderedTree) -> usize {
    fn walk(node: &OrderedTree, depth: usize, height: usize, count: &mut usize) {
        if node.children().is_empty() && depth == height {
            *count += 1;
        }
        for child in node.children() {
            walk(child, depth + 1, height, count);
        }
    }
    let mut count = 0;
    walk(tree, 0, tree.height(), &mut count);
    count
}

fn chain_distance_vs_enumeration(max_n: usize) -> CheckReport {
    let table = match chain_distance_series(max_n) {
        Ok(t) => t,
        Err(e) => return report("chain-distance-vs-enumeration", false, e.to_string()),
    };
    for n in 0..=max_n {
        let mut histogram = vec![BigInt::zero(); 2 * n + 1];
        for tree in trees_of_size(n).expect("within cap") {
            histogram[2 * (n - tree.height())] += BigInt::one();
        }
        for (d, count) in histogram.iter().enumerate() {
            if table.get(&[n, d]) != count {
                return report(
                    "chain-distance-vs-enumeration",
                    false,
                    format!("mismatch at n={n}, d={d}"),
                );
            }
        }
    }
    report(
        "chain-distance-vs-enumeration",
        true,
        format!("distributions up to n={max_n}"),
    )
}

fn chain_distance_printed_terms() -> CheckReport {
    let table = match chain_distance_series(4) {
        Ok(t) => t,
        Err(e) => return report("chain-distance-printed-terms", false, e.to_string()),
    };
    let expected: &[(usize, usize, i64)] = &[
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
    for &(n, d, c) in expected {
        if table.get(&[n, d]) != &BigInt::from(c) {
            return report(
                "chain-distance-printed-terms",
                false,
                format!("[x^{n} y^{d}] is not {c}"),
            );
        }
    }
    report(
        "chain-distance-printed-terms",
        true,
        "series through x^4 matches the reference polynomial".into(),
    )
}
