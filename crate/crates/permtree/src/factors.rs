//! Factors of a permutation word and their structural classification.
//!
//! A factor is a contiguous block of letters. It is *compact* when its value
//! set is an integer interval, and *complete* when no nonempty block
//! immediately to its right can be appended without changing the maximum
//! while staying compact. Complete factors of a one-stack-sortable
//! permutation correspond exactly to the subtrees of the associated tree;
//! the remaining compact factors are descending internal paths.

use crate::codec::decode;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tree::FlatTree;

/// A contiguous span of a host permutation, 1-based and inclusive on both
/// ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorSpan {
    pub start: usize,
    pub end: usize,
}

impl FactorSpan {
    /// `start` and `end` are 1-based; `start ≤ end` is required (factors are
    /// nonempty).
    pub fn new(start: usize, end: usize) -> Self {
        assert!(start >= 1 && start <= end, "invalid span {start}:{end}");
        FactorSpan { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check_in(&self, perm: &Permutation) -> Result<()> {
        if self.start == 0 || self.start > self.end || self.end > perm.len() {
            return Err(Error::SpanOutOfRange {
                start: self.start,
                end: self.end,
                len: perm.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn letters<'a>(&self, perm: &'a Permutation) -> &'a [usize] {
        &perm.as_slice()[self.start - 1..self.end]
    }
}

impl std::fmt::Display for FactorSpan {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

/// What a compact factor looks like on the associated tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompactClass {
    /// The factor's edges form a subtree (it is, in fact, a complete factor).
    Subtree,
    /// The factor's edges form a descending path whose intermediate vertices
    /// have exactly one child and whose lower endpoint is not a leaf. Edge
    /// labels listed top-down.
    InternalPath { edges: Vec<usize> },
}

/// Whether the factor's value set is an interval of integers.
pub fn is_compact(perm: &Permutation, span: FactorSpan) -> Result<bool> {
    span.check_in(perm)?;
    let letters = span.letters(perm);
    let (min, max) = min_max(letters);
    Ok(max - min + 1 == letters.len())
}

/// Whether the factor is compact and right-maximal: no nonempty factor g
/// immediately after it keeps the concatenation compact without raising the
/// maximum.
pub fn is_complete(perm: &Permutation, span: FactorSpan) -> Result<bool> {
    if !is_compact(perm, span)? {
        return Ok(false);
    }
    let word = perm.as_slice();
    let letters = span.letters(perm);
    let (mut min, mut max) = min_max(letters);
    let own_max = max;
    let mut len = letters.len();
    for &g in &word[span.end..] {
        if g > own_max {
            // Every longer extension contains g, so its maximum rises.
            break;
        }
        min = min.min(g);
        max = max.max(g);
        len += 1;
        if max - min + 1 == len {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All complete factors of a one-stack-sortable permutation, ordered by
/// start position, then length.
pub fn complete_factors(perm: &Permutation) -> Result<Vec<FactorSpan>> {
    perm.require_stack_sortable()?;
    let mut spans = Vec::new();
    for start in 1..=perm.len() {
        for end in start..=perm.len() {
            let span = FactorSpan::new(start, end);
            if is_complete(perm, span)? {
                spans.push(span);
            }
        }
    }
    Ok(spans)
}

/// All compact factors, ordered by start position, then length. Defined for
/// any permutation.
pub fn compact_factors(perm: &Permutation) -> Vec<FactorSpan> {
    let mut spans = Vec::new();
    for start in 1..=perm.len() {
        for end in start..=perm.len() {
            let span = FactorSpan::new(start, end);
            if is_compact(perm, span).expect("span is in range") {
                spans.push(span);
            }
        }
    }
    spans
}

/// Classifies a compact factor against the decoded tree: either its edges
/// form a subtree, or they are a descending internal path.
pub fn classify_compact(perm: &Permutation, span: FactorSpan) -> Result<CompactClass> {
    if !is_compact(perm, span)? {
        return Err(Error::NotCompact {
            start: span.start,
            end: span.end,
        });
    }
    let tree = decode(perm)?;
    let flat = FlatTree::build(&tree);
    let letters = span.letters(perm);
    let (lo, hi) = min_max(letters);
    if flat
        .subtree_intervals()
        .into_iter()
        .any(|(a, b)| (a, b) == (lo, hi))
    {
        return Ok(CompactClass::Subtree);
    }
    // Walk down from the top edge (the maximum label) through single-child
    // vertices whose edges stay in the factor.
    let mut edges = vec![hi];
    let mut vertex = flat.vertex_of_label[hi];
    while flat.children[vertex].len() == 1 {
        let child = flat.children[vertex][0];
        let label = flat.label[child];
        if label < lo {
            break;
        }
        edges.push(label);
        vertex = child;
    }
    Ok(CompactClass::InternalPath { edges })
}

fn min_max(letters: &[usize]) -> (usize, usize) {
    let mut min = usize::MAX;
    let mut max = 0;
    for &v in letters {
        min = min.min(v);
        max = max.max(v);
    }
    (min, max)
}
