//! Edit distance between ordered trees and between one-stack-sortable
//! permutations, with extraction of a greatest common pattern.
//!
//! Distance is the minimum number of unit-cost edge deletions (contractions)
//! and insertions transforming one tree into the other. It is computed by
//! the Zhang–Shasha keyroot/leftmost-leaf dynamic program over the trees'
//! vertices: edges correspond to non-root vertices, vertices are unlabeled
//! so matching is free, and the roots always pair up. A backtrace over the
//! forest tables recovers a maximum mapping, whose restriction to either
//! tree is the greatest common pattern u, so that
//! distance = |σ₁| + |σ₂| − 2|u|.

use std::collections::HashMap;

use crate::codec::{decode, encode};
use crate::edit::neighbors;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::{FlatTree, OrderedTree};

/// Outcome of a distance computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    /// Minimum number of deletions and insertions.
    pub distance: usize,
    /// A greatest common pattern of the two inputs (one deterministic
    /// optimum); always one-stack-sortable.
    pub common: Permutation,
    /// 1-based letter positions realizing `common` as a subsequence of the
    /// first and of the second permutation.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

/// Postorder view of a tree for the dynamic program. Vertex indices are
/// 1-based postorder numbers; the root is last.
pub(crate) struct DpTree {
    /// Number of vertices (edges + 1).
    n: usize,
    /// Leftmost leaf descendant per postorder index; index 0 unused.
    lld: Vec<usize>,
    /// Keyroots in increasing postorder.
    keyroots: Vec<usize>,
    /// Children (postorder indices, left to right) per postorder index.
    children: Vec<Vec<usize>>,
    /// Preorder letter position (1..n_edges) per postorder index; 0 for the root.
    letter_pos: Vec<usize>,
}

impl DpTree {
    pub(crate) fn build(tree: &OrderedTree) -> Self {
        let flat = FlatTree::build(tree);
        let n_vertices = flat.parent.len();
        // Postorder index of each preorder vertex: the root closes last.
        let mut post_of = flat.label.clone();
        post_of[0] = n_vertices;
        let mut children = vec![Vec::new(); n_vertices + 1];
        let mut letter_pos = vec![0usize; n_vertices + 1];
        for v in 0..n_vertices {
            children[post_of[v]] = flat.children[v].iter().map(|&c| post_of[c]).collect();
            letter_pos[post_of[v]] = flat.preorder_pos[v];
        }
        let mut lld = vec![0usize; n_vertices + 1];
        for i in 1..=n_vertices {
            lld[i] = match children[i].first() {
                Some(&first) => lld[first],
                None => i,
            };
        }
        // A node is a keyroot when no proper ancestor shares its leftmost leaf.
        let mut max_with_lld: HashMap<usize, usize> = HashMap::new();
        for (i, &leaf) in lld.iter().enumerate().skip(1) {
            let entry = max_with_lld.entry(leaf).or_insert(i);
            *entry = (*entry).max(i);
        }
        let mut keyroots: Vec<usize> = max_with_lld.into_values().collect();
        keyroots.sort_unstable();
        DpTree {
            n: n_vertices,
            lld,
            keyroots,
            children,
            letter_pos,
        }
    }

}

/// Whether a forest pass fills tree distances (construction) or reads an
/// already-filled table (backtrace).
enum Pass<'a> {
    Fill(&'a mut Vec<Vec<usize>>),
    Read(&'a Vec<Vec<usize>>),
}

/// All-pairs subtree distances, filled keyroot by keyroot.
pub(crate) fn tree_dist_table(a: &DpTree, b: &DpTree) -> Vec<Vec<usize>> {
    let mut td = vec![vec![0usize; b.n + 1]; a.n + 1];
    for &i in &a.keyroots {
        for &j in &b.keyroots {
            forest_pass(a, b, i, j, Pass::Fill(&mut td));
        }
    }
    td
}

/// One forest-distance pass for the subtree pair (i, j), returning the
/// forest table.
fn forest_pass(a: &DpTree, b: &DpTree, i: usize, j: usize, mut pass: Pass<'_>) -> Vec<Vec<usize>> {
    let li = a.lld[i];
    let lj = b.lld[j];
    let rows = i - li + 2;
    let cols = j - lj + 2;
    let mut fd = vec![vec![0usize; cols]; rows];
    for (x, row) in fd.iter_mut().enumerate().skip(1) {
        row[0] = x;
    }
    for (y, cell) in fd[0].iter_mut().enumerate().skip(1) {
        *cell = y;
    }
    for di in li..=i {
        let x = di - li + 1;
        for dj in lj..=j {
            let y = dj - lj + 1;
            let delete = fd[x - 1][y] + 1;
            let insert = fd[x][y - 1] + 1;
            if a.lld[di] == li && b.lld[dj] == lj {
                // Both prefixes are whole subtrees: vertices match freely.
                let matched = fd[x - 1][y - 1];
                fd[x][y] = delete.min(insert).min(matched);
                match pass {
                    Pass::Fill(ref mut td) => td[di][dj] = fd[x][y],
                    Pass::Read(td) => debug_assert_eq!(td[di][dj], fd[x][y]),
                }
            } else {
                let px = a.lld[di] - li;
                let py = b.lld[dj] - lj;
                let sub = match pass {
                    Pass::Fill(ref td) => td[di][dj],
                    Pass::Read(td) => td[di][dj],
                };
                fd[x][y] = delete.min(insert).min(fd[px][py] + sub);
            }
        }
    }
    fd
}

/// Recovers one maximum vertex mapping from the filled tree-distance table.
/// Tie-break order at every cell: match, then delete from the first tree,
/// then insert. Pairs are (postorder in a, postorder in b).
fn extract_mapping(a: &DpTree, b: &DpTree, td: &Vec<Vec<usize>>) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    let mut agenda = vec![(a.n, b.n)];
    while let Some((i, j)) = agenda.pop() {
        let fd = forest_pass(a, b, i, j, Pass::Read(td));
        let li = a.lld[i];
        let lj = b.lld[j];
        let mut di = i;
        let mut dj = j;
        while di >= li && dj >= lj {
            let x = di - li + 1;
            let y = dj - lj + 1;
            if a.lld[di] == li && b.lld[dj] == lj {
                if fd[x][y] == fd[x - 1][y - 1] {
                    pairs.push((di, dj));
                    di -= 1;
                    dj -= 1;
                } else if fd[x][y] == fd[x - 1][y] + 1 {
                    di -= 1;
                } else {
                    debug_assert_eq!(fd[x][y], fd[x][y - 1] + 1);
                    dj -= 1;
                }
            } else {
                let px = a.lld[di] - li;
                let py = b.lld[dj] - lj;
                if fd[x][y] == fd[px][py] + td[di][dj] {
                    agenda.push((di, dj));
                    di = a.lld[di] - 1;
                    dj = b.lld[dj] - 1;
                } else if fd[x][y] == fd[x - 1][y] + 1 {
                    di -= 1;
                } else {
                    debug_assert_eq!(fd[x][y], fd[x][y - 1] + 1);
                    dj -= 1;
                }
            }
        }
    }
    pairs
}

/// The ordered tree induced by the matched vertices of one side: each
/// matched vertex hangs below its nearest matched proper ancestor (or the
/// root), keeping child order.
fn induced_tree(dp: &DpTree, matched: &[bool]) -> OrderedTree {
    fn walk(dp: &DpTree, post: usize, matched: &[bool], acc: &mut Vec<OrderedTree>) {
        for &child in &dp.children[post] {
            if matched[child] {
                let mut inner = Vec::new();
                walk(dp, child, matched, &mut inner);
                acc.push(OrderedTree::with_children(inner));
            } else {
                walk(dp, child, matched, acc);
            }
        }
    }
    let mut top = Vec::new();
    walk(dp, dp.n, matched, &mut top);
    OrderedTree::with_children(top)
}

/// Edit distance between two trees, with a greatest common pattern and the
/// letter positions realizing it in each associated permutation.
pub fn tree_edit_distance(t1: &OrderedTree, t2: &OrderedTree) -> DistanceResult {
    let a = DpTree::build(t1);
    let b = DpTree::build(t2);
    let td = tree_dist_table(&a, &b);
    let distance = td[a.n][b.n];
    let pairs = extract_mapping(&a, &b, &td);
    // The root pair is always matched: matching is free and dropping a root
    // can never beat pairing the two roots.
    debug_assert!(pairs.contains(&(a.n, b.n)), "roots must pair up");
    let n_edges_a = a.n - 1;
    let n_edges_b = b.n - 1;
    debug_assert_eq!(
        pairs.len() * 2,
        a.n + b.n - distance,
        "every unit of cost is one unmatched vertex"
    );
    let mut matched_a = vec![false; a.n + 1];
    let mut matched_b = vec![false; b.n + 1];
    let mut positions_a = Vec::new();
    let mut positions_b = Vec::new();
    for &(pa, pb) in &pairs {
        matched_a[pa] = true;
        matched_b[pb] = true;
        if pa != a.n {
            positions_a.push(a.letter_pos[pa]);
        }
        if pb != b.n {
            positions_b.push(b.letter_pos[pb]);
        }
    }
    positions_a.sort_unstable();
    positions_b.sort_unstable();
    let common = encode(&induced_tree(&a, &matched_a));
    debug_assert_eq!(common.len(), (n_edges_a + n_edges_b - distance) / 2);
    debug_assert_eq!(common, encode(&induced_tree(&b, &matched_b)));
    DistanceResult {
        distance,
        common,
        witness: Some((positions_a, positions_b)),
    }
}

/// Distance-only entry point for bulk sweeps, reusing prebuilt DP views.
pub(crate) fn distance_only(a: &DpTree, b: &DpTree) -> usize {
    let td = tree_dist_table(a, b);
    td[a.n][b.n]
}

/// Edit distance between one-stack-sortable permutations: exactly the tree
/// distance of the decoded trees.
pub fn perm_distance(a: &Permutation, b: &Permutation) -> Result<DistanceResult> {
    let t1 = decode(a)?;
    let t2 = decode(b)?;
    Ok(tree_edit_distance(&t1, &t2))
}

/// Whether `needle` occurs as a pattern in `haystack`, decided through the
/// polynomial common-pattern computation rather than exhaustive search.
/// Patterns of one-stack-sortable permutations are themselves
/// one-stack-sortable, so a needle containing 231 simply never occurs.
pub fn pattern_contains(haystack: &Permutation, needle: &Permutation) -> Result<bool> {
    haystack.require_stack_sortable()?;
    if !needle.is_stack_sortable() {
        return Ok(false);
    }
    let result = perm_distance(haystack, needle)?;
    Ok(result.common.len() == needle.len())
}

/// Shortest path between two one-stack-sortable permutations in the graph
/// whose edges are single deletions/insertions. Bidirectional breadth-first
/// search; fails once the distance would exceed `cap`. Exponential in the
/// distance; intended for small validation instances.
pub fn bfs_oracle_distance(a: &Permutation, b: &Permutation, cap: usize) -> Result<usize> {
    a.require_stack_sortable()?;
    b.require_stack_sortable()?;
    if a == b {
        return Ok(0);
    }
    let mut from_a: HashMap<Permutation, usize> = HashMap::from([(a.clone(), 0)]);
    let mut from_b: HashMap<Permutation, usize> = HashMap::from([(b.clone(), 0)]);
    let mut frontier_a = vec![a.clone()];
    let mut frontier_b = vec![b.clone()];
    let mut depth_a = 0;
    let mut depth_b = 0;
    loop {
        if depth_a + depth_b >= cap {
            return Err(Error::SearchCapExceeded { cap });
        }
        // Expand the smaller frontier.
        let expand_a = frontier_a.len() <= frontier_b.len();
        let (frontier, seen, other, depth) = if expand_a {
            depth_a += 1;
            (&mut frontier_a, &mut from_a, &from_b, depth_a)
        } else {
            depth_b += 1;
            (&mut frontier_b, &mut from_b, &from_a, depth_b)
        };
        let mut next = Vec::new();
        let mut best: Option<usize> = None;
        for perm in frontier.drain(..) {
            for q in neighbors(&perm)? {
                if let Some(&d_other) = other.get(&q) {
                    let total = depth + d_other;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                if !seen.contains_key(&q) {
                    seen.insert(q.clone(), depth);
                    next.push(q);
                }
            }
        }
        // The whole level must be scanned: the first meeting point found is
        // not necessarily on a shortest path.
        if let Some(d) = best {
            return Ok(d);
        }
        *frontier = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::trees_of_size;
    use crate::perm::common_pattern_brute_force;

    fn p(text: &str) -> Permutation {
        text.parse().expect("test permutation")
    }

    fn t(text: &str) -> OrderedTree {
        OrderedTree::parse(text).expect("test tree")
    }

    #[test]
    fn worked_example_distance_is_three() {
        let r = perm_distance(&p("31264587"), &p("1524376")).unwrap();
        assert_eq!(r.distance, 3);
        assert_eq!(r.common.len(), 6);
        assert_eq!(r.distance, 8 + 7 - 2 * r.common.len());
    }

    #[test]
    fn identical_inputs_have_distance_zero() {
        let sigma = p("1524376");
        let r = perm_distance(&sigma, &sigma).unwrap();
        assert_eq!(r.distance, 0);
        assert_eq!(r.common, sigma);
        let tree = t("()(()(()))(())");
        let rt = tree_edit_distance(&tree, &tree);
        assert_eq!(rt.distance, 0);
        assert_eq!(rt.common, sigma);
    }

    #[test]
    fn star_versus_chain() {
        let r = tree_edit_distance(&OrderedTree::star(3), &OrderedTree::chain(3));
        assert_eq!(r.distance, 4);
        assert_eq!(r.common.len(), 1);
        for n in 2..=6 {
            let r = perm_distance(
                &Permutation::identity(n),
                &Permutation::reverse_identity(n),
            )
            .unwrap();
            assert_eq!(r.distance, 2 * n - 2);
        }
    }

    #[test]
    fn empty_cases() {
        let r = perm_distance(&Permutation::empty(), &p("1")).unwrap();
        assert_eq!(r.distance, 1);
        assert_eq!(r.common, Permutation::empty());
        let r = perm_distance(&Permutation::empty(), &Permutation::empty()).unwrap();
        assert_eq!(r.distance, 0);
    }

    #[test]
    fn non_sortable_inputs_are_rejected() {
        assert!(matches!(
            perm_distance(&p("231"), &p("1")),
            Err(Error::NotStackSortable { .. })
        ));
        assert!(matches!(
            bfs_oracle_distance(&p("231"), &p("1"), 4),
            Err(Error::NotStackSortable { .. })
        ));
    }

    #[test]
    fn witness_realizes_the_common_pattern() {
        let a = p("31264587");
        let b = p("1524376");
        let r = perm_distance(&a, &b).unwrap();
        let (wa, wb) = r.witness.clone().unwrap();
        assert_eq!(a.subsequence(&wa).unwrap().normalize(), r.common);
        assert_eq!(b.subsequence(&wb).unwrap().normalize(), r.common);
        assert!(a.contains_pattern(&r.common));
        assert!(b.contains_pattern(&r.common));
        assert!(r.common.is_stack_sortable());
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(bfs_oracle_distance(&p("12"), &p("21"), 6).unwrap(), 2);
        assert_eq!(bfs_oracle_distance(&p("12"), &p("12"), 6).unwrap(), 0);
        assert_eq!(bfs_oracle_distance(&p("1"), &p("12"), 6).unwrap(), 1);
        assert!(matches!(
            bfs_oracle_distance(&p("123"), &p("321"), 3),
            Err(Error::SearchCapExceeded { cap: 3 })
        ));
    }

    #[test]
    fn pattern_containment_via_dp() {
        assert!(pattern_contains(&p("1524376"), &p("21")).unwrap());
        assert!(!pattern_contains(&p("1524376"), &p("231")).unwrap());
        assert!(pattern_contains(&p("1524376"), &p("1234")).unwrap());
        assert!(!pattern_contains(&p("1524376"), &p("12345")).unwrap());
        assert!(pattern_contains(&p("1524376"), &Permutation::empty()).unwrap());
        let u = common_pattern_brute_force(&p("31264587"), &p("1524376")).unwrap();
        assert!(pattern_contains(&p("31264587"), &u).unwrap());
        assert!(pattern_contains(&p("1524376"), &u).unwrap());
    }

    #[test]
    fn three_way_agreement_tiny() {
        // DP, BFS, and the common-pattern formula agree for all pairs of
        // trees with at most 4 edges. The 5-edge sweep lives in the
        // acceptance suite.
        let mut trees = Vec::new();
        for n in 0..=4 {
            trees.extend(trees_of_size(n).unwrap());
        }
        for t1 in &trees {
            for t2 in &trees {
                let a = encode(t1);
                let b = encode(t2);
                let dp = tree_edit_distance(t1, t2);
                let cap = a.len() + b.len() + 1;
                let bfs = bfs_oracle_distance(&a, &b, cap.max(1)).unwrap();
                let u = common_pattern_brute_force(&a, &b).unwrap();
                assert_eq!(dp.distance, bfs, "{a} vs {b}");
                assert_eq!(dp.distance, a.len() + b.len() - 2 * u.len(), "{a} vs {b}");
                assert_eq!(dp.common.len(), u.len(), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn metric_axioms_small() {
        let mut perms = Vec::new();
        for n in 0..=4 {
            for tree in trees_of_size(n).unwrap() {
                perms.push(encode(&tree));
            }
        }
        let k = perms.len();
        let mut d = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                d[i][j] = perm_distance(&perms[i], &perms[j]).unwrap().distance;
            }
        }
        for i in 0..k {
            for j in 0..k {
                assert_eq!(d[i][j], d[j][i], "symmetry");
                assert_eq!(d[i][j] == 0, perms[i] == perms[j], "identity");
                assert_eq!(
                    (d[i][j] + perms[i].len() + perms[j].len()) % 2,
                    0,
                    "parity"
                );
                for l in 0..k {
                    assert!(d[i][l] <= d[i][j] + d[j][l], "triangle");
                }
            }
        }
    }

    #[test]
    fn deterministic_output() {
        let a = p("31264587");
        let b = p("1524376");
        let first = perm_distance(&a, &b).unwrap();
        for _ in 0..3 {
            assert_eq!(perm_distance(&a, &b).unwrap(), first);
        }
    }

    proptest::proptest! {
        #[test]
        fn distance_properties_random(
            t1 in crate::tree::strategies::arb_tree(12),
            t2 in crate::tree::strategies::arb_tree(12),
        ) {
            let r12 = tree_edit_distance(&t1, &t2);
            let r21 = tree_edit_distance(&t2, &t1);
            proptest::prop_assert_eq!(r12.distance, r21.distance);
            proptest::prop_assert_eq!(
                (r12.distance + t1.edge_count() + t2.edge_count()) % 2, 0
            );
            proptest::prop_assert_eq!(
                r12.distance,
                t1.edge_count() + t2.edge_count() - 2 * r12.common.len()
            );
            let a = encode(&t1);
            let b = encode(&t2);
            proptest::prop_assert!(r12.common.is_stack_sortable());
            proptest::prop_assert!(a.contains_pattern(&r12.common));
            proptest::prop_assert!(b.contains_pattern(&r12.common));
        }
    }
}
