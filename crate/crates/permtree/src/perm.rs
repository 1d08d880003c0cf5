//! Permutation values and the word-level statistics used throughout the
//! crate: 231-avoidance (one-stack sortability), normalization of arbitrary
//! distinct-value words, longest increasing/decreasing subsequences, and the
//! brute-force pattern oracles that back the polynomial algorithms.
//!
//! Positions are 1-based everywhere in the public API, matching the usual
//! σ₁…σₙ indexing of the literature.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Size guard for the exhaustive pattern oracles.
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// A permutation of {1..n} in one-line notation. The empty permutation is a
/// valid value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    word: Vec<usize>,
}

/// A word of pairwise distinct positive integers, not necessarily an
/// interval: the raw material of subsequences before normalization.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    values: Vec<usize>,
}

impl Word {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let mut seen = values.clone();
        seen.sort_unstable();
        for pair in seen.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::RepeatedValue(pair[0]));
            }
        }
        if let Some(&0) = seen.first() {
            return Err(Error::InvalidPermutation("value 0 is not allowed".into()));
        }
        Ok(Word { values })
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The order-isomorphic permutation of {1..k}: the value ranks of the
    /// word, preserving relative order.
    pub fn normalize(&self) -> Permutation {
        Permutation {
            word: normalize_values(&self.values),
        }
    }
}

pub(crate) fn normalize_values(values: &[usize]) -> Vec<usize> {
    let mut sorted: Vec<usize> = values.to_vec();
    sorted.sort_unstable();
    values
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") + 1)
        .collect()
}

impl Permutation {
    /// Validates that `word` is a permutation of {1..n}.
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::RepeatedValue(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    /// The identity 1 2 … n, which encodes the star with n edges.
    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// n n−1 … 1, which encodes the chain with n edges.
    pub fn reverse_identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// The letter at a 1-based position.
    pub fn letter(&self, pos: usize) -> Result<usize> {
        if pos == 0 || pos > self.word.len() {
            return Err(Error::PositionOutOfRange {
                pos,
                len: self.word.len(),
            });
        }
        Ok(self.word[pos - 1])
    }

    /// The 1-based position of a value.
    pub fn position_of(&self, value: usize) -> Result<usize> {
        self.word
            .iter()
            .position(|&v| v == value)
            .map(|i| i + 1)
            .ok_or(Error::ValueNotFound { value })
    }

    /// One-pass stack-sortability check: push each letter, popping smaller
    /// letters first, and verify the pops come out 1,2,…,n. Equivalent to
    /// avoiding the pattern 231, in O(n).
    pub fn is_stack_sortable(&self) -> bool {
        let mut stack: Vec<usize> = Vec::new();
        let mut next_out = 1;
        for &x in &self.word {
            while stack.last().is_some_and(|&top| top < x) {
                if stack.pop() != Some(next_out) {
                    return false;
                }
                next_out += 1;
            }
            stack.push(x);
        }
        while let Some(top) = stack.pop() {
            if top != next_out {
                return false;
            }
            next_out += 1;
        }
        true
    }

    /// Naive triple scan for an occurrence of 231: positions i<j<k with
    /// `word[k] < word[i] < word[j]`. Returns 1-based positions and their
    /// values. This is the independent oracle for `is_stack_sortable` and
    /// the source of rejection diagnostics.
    pub fn find_231_triple(&self) -> Option<([usize; 3], [usize; 3])> {
        let w = &self.word;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[i] >= w[j] {
                    continue;
                }
                for k in j + 1..n {
                    if w[k] < w[i] {
                        return Some(([i + 1, j + 1, k + 1], [w[i], w[j], w[k]]));
                    }
                }
            }
        }
        None
    }

    /// The error carrying a witnessing 231 triple, for rejecting inputs
    /// that must be one-stack-sortable.
    pub(crate) fn require_stack_sortable(&self) -> Result<()> {
        if self.is_stack_sortable() {
            return Ok(());
        }
        let (positions, values) = self
            .find_231_triple()
            .expect("non-sortable permutation contains a 231 triple");
        Err(Error::NotStackSortable { positions, values })
    }

    /// Length of a longest strictly increasing subsequence, by patience
    /// sorting in O(n log n).
    pub fn lis_length(&self) -> usize {
        lis_of(&self.word)
    }

    /// Length of a longest strictly decreasing subsequence.
    pub fn lds_length(&self) -> usize {
        // A decreasing run becomes increasing under value complement.
        let n = self.word.len();
        let complemented: Vec<usize> = self.word.iter().map(|&v| n + 1 - v).collect();
        lis_of(&complemented)
    }

    /// Whether `needle` occurs in `self` as a pattern, i.e. some subsequence
    /// of `self` normalizes to `needle`. Exhaustive backtracking; intended
    /// for small hosts.
    pub fn contains_pattern(&self, needle: &Permutation) -> bool {
        let k = needle.len();
        if k > self.len() {
            return false;
        }
        if k == 0 {
            return true;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(k);
        occurs_from(&self.word, &needle.word, 0, &mut chosen)
    }

    /// The subsequence at the given 1-based positions, as a word.
    pub fn subsequence(&self, positions: &[usize]) -> Result<Word> {
        let mut values = Vec::with_capacity(positions.len());
        let mut prev = 0;
        for &pos in positions {
            if pos <= prev {
                return Err(Error::Domain(format!(
                    "positions must be strictly increasing, got {pos} after {prev}"
                )));
            }
            values.push(self.letter(pos)?);
            prev = pos;
        }
        Word::new(values)
    }
}

/// Matches needle values one by one onto later positions of the haystack,
/// keeping the partial assignment order-isomorphic.
fn occurs_from(haystack: &[usize], needle: &[usize], depth: usize, chosen: &mut Vec<usize>) -> bool {
    if depth == needle.len() {
        return true;
    }
    let start = chosen.last().map_or(0, |&p| p + 1);
    // Not enough letters left to finish the embedding.
    let remaining = needle.len() - depth;
    for pos in start..=haystack.len().saturating_sub(remaining) {
        let candidate = haystack[pos];
        let consistent = chosen.iter().enumerate().all(|(d, &p)| {
            
            needle[d].cmp(&needle[depth]) == haystack[p].cmp(&candidate)
        });
        if consistent {
            chosen.push(pos);
            if occurs_from(haystack, needle, depth + 1, chosen) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn lis_of(values: &[usize]) -> usize {
    let mut tails: Vec<usize> = Vec::new();
    for &v in values {
        match tails.binary_search(&v) {
            Ok(_) => unreachable!("values are distinct"),
            Err(idx) => {
                if idx == tails.len() {
                    tails.push(v);
                } else {
                    tails[idx] = v;
                }
            }
        }
    }
    tails.len()
}

/// A maximum-length permutation occurring as a pattern in both `a` and `b`;
/// among maxima, the lexicographically least. Exhaustive over subsequences
/// of `a`, so `a` is capped at [`BRUTE_FORCE_LIMIT`] letters.
pub fn common_pattern_brute_force(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.len() > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            limit: BRUTE_FORCE_LIMIT,
            actual: a.len(),
        });
    }
    let n = a.len();
    let cap = n.min(b.len());
    for target in (1..=cap).rev() {
        let mut patterns: Vec<Vec<usize>> = Vec::new();
        collect_patterns(a.as_slice(), target, 0, &mut Vec::new(), &mut patterns);
        patterns.sort();
        patterns.dedup();
        for p in patterns {
            let candidate = Permutation::from_word_unchecked(p);
            if b.contains_pattern(&candidate) {
                return Ok(candidate);
            }
        }
    }
    Ok(Permutation::empty())
}

fn collect_patterns(
    word: &[usize],
    target: usize,
    from: usize,
    picked: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if picked.len() == target {
        out.push(normalize_values(picked));
        return;
    }
    let needed = target - picked.len();
    for pos in from..=word.len().saturating_sub(needed) {
        picked.push(word[pos]);
        collect_patterns(word, target, pos + 1, picked, out);
        picked.pop();
    }
}

impl fmt::Display for Permutation {
    /// Comma-separated values; the empty permutation prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts comma- or space-separated decimal values, or, when no
    /// separator is present, one value per digit, so "1524376" and
    /// "1,5,2,4,3,7,6" name the same permutation. Values ≥ 10 require
    /// separators. The empty string is the empty permutation.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Permutation::empty());
        }
        let word = if trimmed.contains(',') || trimmed.contains(char::is_whitespace) {
            let mut values = Vec::new();
            for piece in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
                if piece.is_empty() {
                    continue;
                }
                let v: usize = piece.parse().map_err(|_| Error::Parse {
                    offset: offset_of(text, piece),
                    message: format!("invalid value {piece:?}"),
                })?;
                values.push(v);
            }
            values
        } else {
            let mut values = Vec::new();
            for (offset, c) in trimmed.char_indices() {
                match c.to_digit(10) {
                    Some(d) if d > 0 => values.push(d as usize),
                    _ => {
                        return Err(Error::Parse {
                            offset,
                            message: format!("unexpected character {c:?} in permutation"),
                        })
                    }
                }
            }
            values
        };
        Permutation::new(word)
    }
}

fn offset_of(text: &str, piece: &str) -> usize {
    let text_ptr = text.as_ptr() as usize;
    let piece_ptr = piece.as_ptr() as usize;
    piece_ptr.saturating_sub(text_ptr)
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.values.cmp(&other.values)
    }
}
