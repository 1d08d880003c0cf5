//! The bijection between rooted ordered trees and one-stack-sortable
//! permutations.
//!
//! Encoding numbers the edges of a tree in postorder and reads the labels
//! back in preorder. Decoding inverts this by the recursive I·n·J split:
//! the maximum letter n is the rightmost edge at the root, the prefix I
//! re-encodes the part of the tree left of that edge, and the suffix J the
//! part hanging below it.

use crate::error::Result;
use crate::perm::Permutation;
use crate::tree::{FlatTree, OrderedTree};

/// The permutation of a tree: postorder edge labels read in preorder.
/// Always one-stack-sortable.
pub fn encode(tree: &OrderedTree) -> Permutation {
    let flat = FlatTree::build(tree);
    let word: Vec<usize> = (1..flat.parent.len()).map(|v| flat.label[v]).collect();
    debug_assert!(
        Permutation::new(word.clone()).is_ok(),
        "postorder labels form a permutation"
    );
    Permutation::from_word_unchecked(word)
}

/// The tree of a one-stack-sortable permutation. Rejects other inputs,
/// naming a witnessing 231 triple.
pub fn decode(perm: &Permutation) -> Result<OrderedTree> {
    perm.require_stack_sortable()?;
    Ok(decode_split(perm.as_slice()))
}

/// Recursive I·n·J construction. The slice holds distinct values whose
/// relative order alone determines the tree.
fn decode_split(word: &[usize]) -> OrderedTree {
    let Some(max_at) = position_of_max(word) else {
        return OrderedTree::empty();
    };
    let left = decode_split(&word[..max_at]);
    let below = decode_split(&word[max_at + 1..]);
    // The edge of the maximum is the rightmost edge at the root: the left
    // part keeps its children first, the new edge carries everything below.
    let mut children = left.children().to_vec();
    children.push(below);
    OrderedTree::with_children(children)
}

fn position_of_max(word: &[usize]) -> Option<usize> {
    word.iter()
        .enumerate()
        .max_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
}
