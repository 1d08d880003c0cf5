//! Permutation-level edit operations: deletion with renormalization and the
//! three insertions anchored at a complete factor, plus the insertion into
//! the empty permutation and one-step neighborhood enumeration.
//!
//! On the associated trees, deletion at a position contracts the matching
//! edge; insertion at a complete factor f either subdivides the edge above
//! 𝒯(f) (inner), or adds a leaf as the right or left sibling of 𝒯(f).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::factors::{is_complete, complete_factors, FactorSpan};
use crate::perm::{Permutation, Word};

/// One edit step. Spans refer to complete factors of the permutation the
/// operation is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EditOp {
    /// Remove the letter at a 1-based position and renormalize.
    DeleteAt(usize),
    /// Insert an inner vertex above the factor's subtree.
    InsertInner(FactorSpan),
    /// Insert a leaf as the left sibling of the factor's subtree.
    InsertLeft(FactorSpan),
    /// Insert a leaf as the right sibling of the factor's subtree.
    InsertRight(FactorSpan),
    /// Turn the empty permutation into (1).
    InsertEmpty,
}

/// Values below `threshold` are unchanged; values at or above it are
/// incremented, freeing exactly the slot `threshold`.
pub fn shift_at_or_above(word: &Word, threshold: usize) -> Word {
    Word::new(shift_values(word.values(), threshold)).expect("shift preserves distinctness")
}

fn shift_values(values: &[usize], threshold: usize) -> Vec<usize> {
    values
        .iter()
        .map(|&v| if v < threshold { v } else { v + 1 })
        .collect()
}

/// Removes the letter at a 1-based position and renormalizes the remainder
/// onto {1..n−1}. A one-stack-sortable input yields a one-stack-sortable
/// output.
pub fn delete_at(perm: &Permutation, pos: usize) -> Result<Permutation> {
    if pos == 0 || pos > perm.len() {
        return Err(Error::PositionOutOfRange {
            pos,
            len: perm.len(),
        });
    }
    let removed = perm.as_slice()[pos - 1];
    let word: Vec<usize> = perm
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pos - 1)
        .map(|(_, &v)| if v > removed { v - 1 } else { v })
        .collect();
    Ok(Permutation::from_word_unchecked(word))
}

/// Insertion of an inner vertex above the subtree of the complete factor f:
/// with σ = u f v the result is ū a f v̄ for a = max(f)+1, shifting at a.
pub fn insert_inner(perm: &Permutation, factor: FactorSpan) -> Result<Permutation> {
    let (u, f, v) = split_at_complete(perm, factor)?;
    let a = f.iter().max().copied().expect("factor is nonempty") + 1;
    let mut word = shift_values(u, a);
    word.push(a);
    word.extend_from_slice(f);
    word.extend(shift_values(v, a));
    Ok(Permutation::from_word_unchecked(word))
}

/// Insertion of a leaf as the right sibling of the factor's subtree:
/// ū f a v̄ for a = max(f)+1.
pub fn insert_right(perm: &Permutation, factor: FactorSpan) -> Result<Permutation> {
    let (u, f, v) = split_at_complete(perm, factor)?;
    let a = f.iter().max().copied().expect("factor is nonempty") + 1;
    let mut word = shift_values(u, a);
    word.extend_from_slice(f);
    word.push(a);
    word.extend(shift_values(v, a));
    Ok(Permutation::from_word_unchecked(word))
}

/// Insertion of a leaf as the left sibling of the factor's subtree:
/// ū a f̄ v̄ for a = min(f), shifting the factor itself as well.
pub fn insert_left(perm: &Permutation, factor: FactorSpan) -> Result<Permutation> {
    let (u, f, v) = split_at_complete(perm, factor)?;
    let a = f.iter().min().copied().expect("factor is nonempty");
    let mut word = shift_values(u, a);
    word.push(a);
    word.extend(shift_values(f, a));
    word.extend(shift_values(v, a));
    Ok(Permutation::from_word_unchecked(word))
}

/// The only insertion available on the empty permutation.
pub fn insert_empty() -> Permutation {
    Permutation::from_word_unchecked(vec![1])
}

/// Applies one edit step.
pub fn apply(perm: &Permutation, op: &EditOp) -> Result<Permutation> {
    match *op {
        EditOp::DeleteAt(pos) => delete_at(perm, pos),
        EditOp::InsertInner(span) => insert_inner(perm, span),
        EditOp::InsertLeft(span) => insert_left(perm, span),
        EditOp::InsertRight(span) => insert_right(perm, span),
        EditOp::InsertEmpty => {
            if perm.is_empty() {
                Ok(insert_empty())
            } else {
                Err(Error::Domain(
                    "insert-into-empty applies only to the empty permutation".into(),
                ))
            }
        }
    }
}

fn split_at_complete(
    perm: &Permutation,
    factor: FactorSpan,
) -> Result<(&[usize], &[usize], &[usize])> {
    if !is_complete(perm, factor)? {
        return Err(Error::NotComplete {
            start: factor.start,
            end: factor.end,
        });
    }
    let word = perm.as_slice();
    Ok((
        &word[..factor.start - 1],
        &word[factor.start - 1..factor.end],
        &word[factor.end..],
    ))
}

/// Every permutation reachable by a single deletion or insertion,
/// deduplicated and sorted lexicographically.
pub fn neighbors(perm: &Permutation) -> Result<Vec<Permutation>> {
    perm.require_stack_sortable()?;
    let mut out: BTreeSet<Permutation> = BTreeSet::new();
    if perm.is_empty() {
        out.insert(insert_empty());
        return Ok(out.into_iter().collect());
    }
    for pos in 1..=perm.len() {
        out.insert(delete_at(perm, pos)?);
    }
    for span in complete_factors(perm)? {
        out.insert(insert_inner(perm, span)?);
        out.insert(insert_right(perm, span)?);
        out.insert(insert_left(perm, span)?);
    }
    Ok(out.into_iter().collect())
}

/// The distinct results of deletions and of insertions, counted separately;
/// the raw material of the neighborhood-size bounds.
pub fn neighbor_counts(perm: &Permutation) -> Result<(usize, usize)> {
    perm.require_stack_sortable()?;
    let mut deletions: BTreeSet<Permutation> = BTreeSet::new();
    let mut insertions: BTreeSet<Permutation> = BTreeSet::new();
    if perm.is_empty() {
        insertions.insert(insert_empty());
        return Ok((0, 1));
    }
    for pos in 1..=perm.len() {
        deletions.insert(delete_at(perm, pos)?);
    }
    for span in complete_factors(perm)? {
        insertions.insert(insert_inner(perm, span)?);
        insertions.insert(insert_right(perm, span)?);
        insertions.insert(insert_left(perm, span)?);
    }
    Ok((deletions.len(), insertions.len()))
}
