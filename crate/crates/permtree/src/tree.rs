//! Rooted ordered trees: construction, Dyck-word text format, structural
//! statistics, and enumeration of the edge sets whose removal leaves a
//! connected tree ("subtrees" in the sense used by the edit operations).
//!
//! Throughout the crate an edge is identified by its label in the postorder
//! traversal, numbered 1..n, which is also the letter value the edge carries
//! in the associated permutation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A rooted tree with ordered children. Each element of `children` is the
/// subtree hanging below one edge of the root, left to right. The empty
/// tree (a bare root, zero edges) is a valid value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

/// An edge addressed structurally: the preorder number of its upper vertex
/// and the child index below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeRef {
    /// Preorder number of the parent vertex; the root is vertex 0.
    pub parent: usize,
    /// 0-based index into the parent's child list.
    pub child_index: usize,
}

impl OrderedTree {
    /// The empty tree: a root with no edges.
    pub fn empty() -> Self {
        OrderedTree { children: Vec::new() }
    }

    pub fn with_children(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    /// A single vertex hanging by one edge, as a child node.
    pub fn leaf() -> Self {
        OrderedTree::empty()
    }

    /// The star with n edges: n leaves under the root.
    pub fn star(n: usize) -> Self {
        OrderedTree {
            children: vec![OrderedTree::empty(); n],
        }
    }

    /// The chain with n edges.
    pub fn chain(n: usize) -> Self {
        let mut tree = OrderedTree::empty();
        for _ in 0..n {
            tree = OrderedTree { children: vec![tree] };
        }
        tree
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn edge_count(&self) -> usize {
        let mut count = 0;
        let mut stack: Vec<&OrderedTree> = vec![self];
        while let Some(node) = stack.pop() {
            count += node.children.len();
            stack.extend(node.children.iter());
        }
        count
    }

    /// Number of childless non-root vertices. The empty tree has none.
    pub fn leaf_count(&self) -> usize {
        let mut count = 0;
        let mut stack: Vec<&OrderedTree> = self.children.iter().collect();
        while let Some(node) = stack.pop() {
            if node.children.is_empty() {
                count += 1;
            } else {
                stack.extend(node.children.iter());
            }
        }
        count
    }

    /// Maximum edge length of a root-to-leaf path; 0 for the empty tree.
    pub fn height(&self) -> usize {
        let mut best = 0;
        let mut stack: Vec<(&OrderedTree, usize)> = vec![(self, 0)];
        while let Some((node, depth)) = stack.pop() {
            best = best.max(depth);
            stack.extend(node.children.iter().map(|c| (c, depth + 1)));
        }
        best
    }

    /// Parses the Dyck-word text format: each matched "()" pair is one edge,
    /// nesting is descent, and the top-level groups list the root's children
    /// left to right. Whitespace between characters is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut stack: Vec<Vec<OrderedTree>> = vec![Vec::new()];
        let mut open_offsets: Vec<usize> = Vec::new();
        for (offset, c) in text.char_indices() {
            match c {
                '(' => {
                    stack.push(Vec::new());
                    open_offsets.push(offset);
                }
                ')' => {
                    if open_offsets.pop().is_none() {
                        return Err(Error::Parse {
                            offset,
                            message: "unmatched ')'".into(),
                        });
                    }
                    let children = stack.pop().expect("stack tracks open parens");
                    let node = OrderedTree { children };
                    stack.last_mut().expect("root level present").push(node);
                }
                c if c.is_whitespace() => {}
                c => {
                    return Err(Error::Parse {
                        offset,
                        message: format!("unexpected character {c:?}"),
                    });
                }
            }
        }
        if let Some(&offset) = open_offsets.first() {
            return Err(Error::Parse {
                offset,
                message: "unclosed '('".into(),
            });
        }
        let children = stack.pop().expect("root level survives");
        Ok(OrderedTree { children })
    }

    /// The canonical Dyck word of the tree; inverse of [`OrderedTree::parse`].
    pub fn to_dyck(&self) -> String {
        let mut out = String::with_capacity(2 * self.edge_count());
        write_dyck(self, &mut out);
        out
    }

    /// All nonempty edge sets T′ whose removal (with everything stranded
    /// below) leaves a connected tree containing the root: the downward
    /// closures of contiguous runs of children of one vertex. Edges are
    /// identified by postorder label. Ordered by the preorder position of
    /// the first edge, then by size.
    pub fn subtrees(&self) -> Vec<BTreeSet<usize>> {
        let flat = FlatTree::build(self);
        flat.subtree_intervals()
            .into_iter()
            .map(|(lo, hi)| (lo..=hi).collect())
            .collect()
    }

    /// Resolves a postorder edge label to its structural address.
    pub fn edge_ref(&self, label: usize) -> Result<EdgeRef> {
        let flat = FlatTree::build(self);
        if label == 0 || label > flat.edge_count() {
            return Err(Error::Domain(format!(
                "edge label {label} out of range 1..={}",
                flat.edge_count()
            )));
        }
        let vertex = flat.vertex_of_label[label];
        Ok(EdgeRef {
            parent: flat.parent[vertex],
            child_index: flat.child_index[vertex],
        })
    }
}

fn write_dyck(node: &OrderedTree, out: &mut String) {
    for child in &node.children {
        out.push('(');
        write_dyck(child, out);
        out.push(')');
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dyck())
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        OrderedTree::parse(text)
    }
}

/// Indexed view of a tree: vertices numbered in preorder (root = 0), edges
/// cross-referenced between their postorder label (= permutation letter) and
/// their preorder position (= letter position in the permutation word).
#[derive(Debug, Clone)]
pub(crate) struct FlatTree {
    /// Parent vertex of each vertex; `parent[0]` is unused.
    pub parent: Vec<usize>,
    /// Child index of each vertex within its parent; `child_index[0]` unused.
    pub child_index: Vec<usize>,
    /// Children of each vertex, in order.
    pub children: Vec<Vec<usize>>,
    /// Postorder edge label of the edge above each non-root vertex; 0 at the root.
    pub label: Vec<usize>,
    /// Non-root vertex carrying each label; index 0 unused.
    pub vertex_of_label: Vec<usize>,
    /// Preorder edge position (1..n) of each non-root vertex; 0 at the root.
    pub preorder_pos: Vec<usize>,
}

impl FlatTree {
    pub fn build(tree: &OrderedTree) -> Self {
        let n_vertices = tree.edge_count() + 1;
        let mut flat = FlatTree {
            parent: vec![0; n_vertices],
            child_index: vec![0; n_vertices],
            children: vec![Vec::new(); n_vertices],
            label: vec![0; n_vertices],
            vertex_of_label: vec![0; n_vertices],
            preorder_pos: vec![0; n_vertices],
        };
        // Preorder numbering of vertices and parent links.
        let mut next_vertex = 0usize;
        let mut stack: Vec<(&OrderedTree, usize)> = Vec::new();
        let root_id = next_vertex;
        next_vertex += 1;
        for child in tree.children.iter().rev() {
            stack.push((child, root_id));
        }
        while let Some((node, parent)) = stack.pop() {
            let id = next_vertex;
            next_vertex += 1;
            flat.parent[id] = parent;
            flat.child_index[id] = flat.children[parent].len();
            flat.children[parent].push(id);
            flat.preorder_pos[id] = id; // preorder edge position equals vertex number
            for child in node.children.iter().rev() {
                stack.push((child, id));
            }
        }
        // Postorder labels.
        let mut label = 0usize;
        let mut walk: Vec<(usize, bool)> = vec![(0, false)];
        while let Some((v, expanded)) = walk.pop() {
            if expanded {
                if v != 0 {
                    label += 1;
                    flat.label[v] = label;
                    flat.vertex_of_label[label] = v;
                }
            } else {
                walk.push((v, true));
                for &c in flat.children[v].iter().rev() {
                    walk.push((c, false));
                }
            }
        }
        flat
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    /// Postorder labels below-and-including the edge above `vertex` form a
    /// contiguous interval ending at the vertex's own label.
    fn label_interval(&self, vertex: usize) -> (usize, usize) {
        let hi = self.label[vertex];
        let mut lo = hi;
        let mut stack = vec![vertex];
        while let Some(v) = stack.pop() {
            if self.label[v] != 0 {
                lo = lo.min(self.label[v]);
            }
            stack.extend(self.children[v].iter());
        }
        (lo, hi)
    }

    /// The subtree edge sets as postorder-label intervals, ordered by the
    /// preorder position of the first edge, then by size.
    pub fn subtree_intervals(&self) -> Vec<(usize, usize)> {
        let mut keyed: Vec<(usize, usize, usize, usize)> = Vec::new();
        for v in 0..self.children.len() {
            let kids = &self.children[v];
            for i in 0..kids.len() {
                let first_pos = self.preorder_pos[kids[i]];
                let (lo, _) = self.label_interval(kids[i]);
                for &last in &kids[i..] {
                    let (_, hi) = self.label_interval(last);
                    keyed.push((first_pos, hi - lo + 1, lo, hi));
                }
            }
        }
        keyed.sort_unstable();
        keyed.into_iter().map(|(_, _, lo, hi)| (lo, hi)).collect()
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(text: &str) -> OrderedTree {
        OrderedTree::parse(text).expect("test tree")
    }

    #[test]
    fn parse_and_stats() {
        assert_eq!(t("()").edge_count(), 1);
        assert_eq!(t("").edge_count(), 0);
        let fig = t("()(()(()))(())");
        assert_eq!(fig.edge_count(), 7);
        assert_eq!(fig.leaf_count(), 4);
        assert_eq!(fig.height(), 3);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match OrderedTree::parse("() )") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        match OrderedTree::parse("(()") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match OrderedTree::parse("()x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn whitespace_is_ignored() {
        assert_eq!(t(" () ( () ) "), t("()(())"));
    }

    #[test]
    fn serialize_examples() {
        assert_eq!(t("()").to_dyck(), "()");
        assert_eq!(OrderedTree::chain(2).to_dyck(), "(())");
        assert_eq!(OrderedTree::empty().to_dyck(), "");
        assert_eq!(t("()(()(()))(())").to_dyck(), "()(()(()))(())");
    }

    #[test]
    fn star_and_chain_shapes() {
        assert_eq!(OrderedTree::star(3).to_dyck(), "()()()");
        assert_eq!(OrderedTree::chain(3).to_dyck(), "((()))");
        assert_eq!(OrderedTree::star(5).leaf_count(), 5);
        assert_eq!(OrderedTree::star(5).height(), 1);
        assert_eq!(OrderedTree::chain(5).leaf_count(), 1);
        assert_eq!(OrderedTree::chain(5).height(), 5);
    }

    #[test]
    fn subtree_counts() {
        assert_eq!(t("()").subtrees().len(), 1);
        assert_eq!(t("()()").subtrees().len(), 3);
        assert_eq!(t("()(()(()))(())").subtrees().len(), 11);
        assert!(t("").subtrees().is_empty());
    }

    #[test]
    fn subtrees_of_two_edge_star() {
        let sets = t("()()").subtrees();
        let expect: Vec<BTreeSet<usize>> = vec![
            [1].into_iter().collect(),
            [1, 2].into_iter().collect(),
            [2].into_iter().collect(),
        ];
        assert_eq!(sets, expect);
    }

    #[test]
    fn subtrees_of_figure_tree() {
        // Edge sets of the 11 subtrees, as postorder labels.
        let sets = t("()(()(()))(())").subtrees();
        let expect: Vec<BTreeSet<usize>> = vec![
            [1].into_iter().collect(),
            (1..=5).collect(),
            (1..=7).collect(),
            (2..=5).collect(),
            (2..=7).collect(),
            [2].into_iter().collect(),
            (2..=4).collect(),
            [3, 4].into_iter().collect(),
            [3].into_iter().collect(),
            [6, 7].into_iter().collect(),
            [6].into_iter().collect(),
        ];
        assert_eq!(sets, expect);
    }

    #[test]
    fn edge_refs_resolve() {
        let fig = t("()(()(()))(())");
        // Label 5 is the second child of the root.
        assert_eq!(
            fig.edge_ref(5).unwrap(),
            EdgeRef { parent: 0, child_index: 1 }
        );
        // Label 1 is the first child of the root.
        assert_eq!(
            fig.edge_ref(1).unwrap(),
            EdgeRef { parent: 0, child_index: 0 }
        );
        assert!(fig.edge_ref(8).is_err());
        assert!(fig.edge_ref(0).is_err());
    }

    #[test]
    fn leaf_count_positive_for_nonempty() {
        for text in ["()", "(())", "()()", "()(()(()))(())", "((((()))))"] {
            assert!(t(text).leaf_count() >= 1);
        }
    }

    proptest! {
        #[test]
        fn parse_inverts_serialize(tree in super::strategies::arb_tree(60)) {
            prop_assert_eq!(OrderedTree::parse(&tree.to_dyck()).unwrap(), tree);
        }

        #[test]
        fn stats_are_consistent(tree in super::strategies::arb_tree(40)) {
            let edges = tree.edge_count();
            prop_assert!(tree.height() <= edges);
            prop_assert!(tree.leaf_count() <= edges);
            if edges > 0 {
                prop_assert!(tree.leaf_count() >= 1);
                prop_assert!(tree.height() >= 1);
            }
            prop_assert_eq!(tree.to_dyck().len(), 2 * edges);
        }
    }
}
