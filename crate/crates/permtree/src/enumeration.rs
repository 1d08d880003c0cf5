//! Exact combinatorics over the tree/permutation family: Catalan and
//! Narayana counts, exhaustive tree generation in Dyck-word order, the
//! generating-function tables for leaves and heights, the derived
//! distance-distribution series, exact average distances, and the
//! one-step-neighborhood size report.
//!
//! All table arithmetic is exact: big integers for coefficients, rationals
//! for averages. Floating point appears only in the asymptotic comparison
//! values, which are reports rather than table content.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::codec::encode;
use crate::distance::{distance_only, DpTree};
use crate::edit::neighbor_counts;
use crate::error::{Error, Result};
use crate::tree::OrderedTree;

/// Exhaustive tree generation refuses sizes above this (Catalan growth).
pub const TREE_GENERATION_CAP: usize = 12;
/// Order cap for the dense series tables.
pub const SERIES_ORDER_CAP: usize = 64;
/// Order cap for the height-count series; higher than the dense tables
/// because the continued-fraction recurrence stays cheap and the asymptotic
/// height comparison needs a few hundred terms.
pub const HEIGHT_ORDER_CAP: usize = 512;
/// The pairwise-distance sweep of the neighborhood report is quadratic in a
/// Catalan number.
pub const NEIGHBORHOOD_CAP: usize = 7;

/// The n-th Catalan number: the count of ordered trees with n edges.
pub fn catalan(n: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 1..=n {
        c = c * (2 * (2 * i as i64 - 1)) / (i as i64 + 1);
    }
    c
}

/// The Narayana number: ordered trees with n edges and k leaves,
/// (1/n)·C(n,k)·C(n,k−1) for 1 ≤ k ≤ n.
pub fn narayana(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::Domain(format!(
            "narayana requires 1 ≤ k ≤ n, got n={n}, k={k}"
        )));
    }
    let product = binomial(n, k) * binomial(n, k - 1);
    let (q, r) = num_integer::div_rem(product, BigInt::from(n));
    debug_assert!(r.is_zero());
    Ok(q)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * (n as i64 - i as i64) / (i as i64 + 1);
    }
    c
}

/// Dyck words of length 2n in lexicographic order ('(' < ')').
struct DyckWords {
    current: Option<Vec<u8>>,
}

impl DyckWords {
    fn new(n: usize) -> Self {
        let mut word = vec![b'('; n];
        word.extend(std::iter::repeat_n(b')', n));
        DyckWords {
            current: Some(word),
        }
    }
}

impl Iterator for DyckWords {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        let word = self.current.take()?;
        self.current = successor(&word);
        Some(word)
    }
}

/// The lexicographically next balanced word, if any: flip the rightmost
/// viable '(' to ')' and append the smallest feasible suffix.
fn successor(word: &[u8]) -> Option<Vec<u8>> {
    let len = word.len();
    let mut balance: i64 = word
        .iter()
        .map(|&c| if c == b'(' { 1 } else { -1 })
        .sum();
    debug_assert_eq!(balance, 0);
    for i in (0..len).rev() {
        let c = word[i];
        balance -= if c == b'(' { 1 } else { -1 };
        // `balance` is now the open count before position i.
        if c == b'(' && balance >= 1 {
            let mut next = word[..i].to_vec();
            next.push(b')');
            let open_to_close = (balance - 1) as usize;
            let remaining = len - i - 1;
            let opens = (remaining - open_to_close) / 2;
            next.extend(std::iter::repeat_n(b'(', opens));
            next.extend(std::iter::repeat_n(b')', remaining - opens));
            return Some(next);
        }
    }
    None
}

/// Iterator over all ordered trees with a fixed edge count, one per Dyck
/// word, in Dyck-word lexicographic order.
pub struct TreesIter {
    words: DyckWords,
}

impl Iterator for TreesIter {
    type Item = OrderedTree;

    fn next(&mut self) -> Option<OrderedTree> {
        let word = self.words.next()?;
        let text = std::str::from_utf8(&word).expect("dyck words are ascii");
        Some(OrderedTree::parse(text).expect("generated words are balanced"))
    }
}

/// Every ordered tree with n edges, each exactly once, in a deterministic
/// order. Guarded by [`TREE_GENERATION_CAP`].
pub fn trees_of_size(n: usize) -> Result<TreesIter> {
    if n > TREE_GENERATION_CAP {
        return Err(Error::SizeLimit {
            limit: TREE_GENERATION_CAP,
            actual: n,
        });
    }
    Ok(TreesIter {
        words: DyckWords::new(n),
    })
}

/// A dense table of exact integer coefficients indexed by one to three
/// exponents. Entries outside the stored bounds are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTable {
    vars: Vec<String>,
    bounds: Vec<usize>,
    coeffs: Vec<BigInt>,
    zero: BigInt,
}

impl SeriesTable {
    pub fn new(vars: &[&str], bounds: &[usize]) -> Self {
        assert!(
            !bounds.is_empty() && bounds.len() <= 3 && vars.len() == bounds.len(),
            "tables are indexed by 1 to 3 exponents"
        );
        let size = bounds.iter().product();
        SeriesTable {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            bounds: bounds.to_vec(),
            coeffs: vec![BigInt::zero(); size],
            zero: BigInt::zero(),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    fn offset(&self, idx: &[usize]) -> Option<usize> {
        assert_eq!(idx.len(), self.bounds.len(), "index arity mismatch");
        let mut flat = 0;
        for (i, (&x, &b)) in idx.iter().zip(self.bounds.iter()).enumerate() {
            if x >= b {
                return None;
            }
            let _ = i;
            flat = flat * b + x;
        }
        Some(flat)
    }

    /// Coefficient at the given exponents; zero outside the bounds.
    pub fn get(&self, idx: &[usize]) -> &BigInt {
        match self.offset(idx) {
            Some(flat) => &self.coeffs[flat],
            None => &self.zero,
        }
    }

    pub fn set(&mut self, idx: &[usize], value: BigInt) {
        let flat = self.offset(idx).expect("index within bounds");
        self.coeffs[flat] = value;
    }

    pub fn add_assign_at(&mut self, idx: &[usize], value: &BigInt) {
        let flat = self.offset(idx).expect("index within bounds");
        self.coeffs[flat] += value;
    }

    /// Nonzero entries in index order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (Vec<usize>, &BigInt)> + '_ {
        let bounds = self.bounds.clone();
        self.coeffs.iter().enumerate().filter_map(move |(flat, c)| {
            if c.is_zero() {
                return None;
            }
            let mut idx = vec![0; bounds.len()];
            let mut rest = flat;
            for d in (0..bounds.len()).rev() {
                idx[d] = rest % bounds[d];
                rest /= bounds[d];
            }
            Some((idx, c))
        })
    }
}

fn check_order(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::SizeLimit {
            limit: cap,
            actual: n,
        });
    }
    Ok(())
}

/// Generating table of trees by edge count and leaf count (equivalently,
/// one-stack-sortable permutations by size and longest increasing
/// subsequence): entry `[n][k]` counts trees with n edges and k leaves.
/// Computed by the convolution recurrence and cross-checked against the
/// closed-form expansion.
pub fn leaf_series(max_n: usize) -> Result<SeriesTable> {
    check_order(max_n, SERIES_ORDER_CAP)?;
    let table = leaf_series_recurrence(max_n);
    let closed = leaf_series_closed_form(max_n)?;
    assert_eq!(
        table, closed,
        "recurrence and closed-form expansions must agree"
    );
    Ok(table)
}

fn leaf_series_recurrence(max_n: usize) -> SeriesTable {
    // rows[n][k]: polynomial coefficients in the leaf-count marker.
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
    rows.push(vec![BigInt::one()]); // the empty tree
    for n in 1..=max_n {
        let mut row = vec![BigInt::zero(); n + 1];
        // σ = I·n with an empty suffix: the new maximum edge is one more
        // leaf on top of the prefix's count.
        for (k, c) in rows[n - 1].iter().enumerate() {
            if !c.is_zero() {
                row[k + 1] += c;
            }
        }
        // σ = I·n·J with a nonempty suffix: the leaf counts add up.
        for i in 0..n.saturating_sub(1) {
            let j = n - 1 - i;
            for (ki, ci) in rows[i].iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                for (kj, cj) in rows[j].iter().enumerate() {
                    if cj.is_zero() {
                        continue;
                    }
                    row[ki + kj] += ci * cj;
                }
            }
        }
        rows.push(row);
    }
    let mut table = SeriesTable::new(&["t", "p"], &[max_n + 1, max_n + 1]);
    for (n, row) in rows.iter().enumerate() {
        for (k, c) in row.iter().enumerate() {
            if !c.is_zero() {
                table.set(&[n, k], c.clone());
            }
        }
    }
    table
}

/// The same table expanded from the closed form
/// (1 + (1−p)t − √((p−1)²t² − 2(p+1)t + 1)) / 2t,
/// with the square root taken by Newton iteration over exact rationals.
pub fn leaf_series_closed_form(max_n: usize) -> Result<SeriesTable> {
    check_order(max_n, SERIES_ORDER_CAP)?;
    let t_terms = max_n + 2; // the square root is needed one order further
    let k_cap = max_n + 2;
    // radicand: 1 − 2(p+1)t + (p−1)²t²
    let mut radicand = vec![vec![BigRational::zero(); k_cap]; t_terms];
    radicand[0][0] = BigRational::one();
    if t_terms > 1 {
        radicand[1][0] = BigRational::from_integer((-2).into());
        radicand[1][1] = BigRational::from_integer((-2).into());
    }
    if t_terms > 2 {
        radicand[2][0] = BigRational::one();
        radicand[2][1] = BigRational::from_integer((-2).into());
        radicand[2][2] = BigRational::one();
    }
    let root = series_sqrt(&radicand, t_terms, k_cap);
    // numerator = 1 + (1−p)t − root; its constant term vanishes and
    // [I]_n = numerator_{n+1} / 2.
    let mut table = SeriesTable::new(&["t", "p"], &[max_n + 1, max_n + 1]);
    debug_assert!(root[0][0].is_one() && root[0][1..].iter().all(|c| c.is_zero()));
    let half = BigRational::new(1.into(), 2.into());
    for n in 0..=max_n {
        for (k, coeff) in root[n + 1].iter().enumerate() {
            let mut c = -coeff.clone();
            if n == 0 {
                if k == 0 {
                    c += BigRational::one();
                } else if k == 1 {
                    c -= BigRational::one();
                }
            }
            c *= &half;
            if c.is_zero() {
                continue;
            }
            assert!(
                c.is_integer(),
                "closed-form coefficient [t^{n} p^{k}] is not an integer: {c}"
            );
            assert!(k <= max_n, "leaf count exceeds edge count");
            table.set(&[n, k], c.to_integer());
        }
    }
    Ok(table)
}

type RatSeries = Vec<Vec<BigRational>>;

fn poly_mul_acc(acc: &mut [BigRational], a: &[BigRational], b: &[BigRational], k_cap: usize) {
    for (ia, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (ib, cb) in b.iter().enumerate() {
            if ia + ib >= k_cap {
                break;
            }
            if cb.is_zero() {
                continue;
            }
            acc[ia + ib] += ca * cb;
        }
    }
}

/// Quotient a/b of truncated series whose coefficients are polynomials,
/// requiring b to start with the constant polynomial 1.
fn series_div(a: &RatSeries, b: &RatSeries, t_terms: usize, k_cap: usize) -> RatSeries {
    debug_assert!(b[0][0].is_one() && b[0][1..].iter().all(|c| c.is_zero()));
    let mut q = vec![vec![BigRational::zero(); k_cap]; t_terms];
    for n in 0..t_terms {
        let mut acc = a.get(n).cloned().unwrap_or_else(|| vec![BigRational::zero(); k_cap]);
        acc.resize(k_cap, BigRational::zero());
        for m in 1..=n {
            if m >= b.len() {
                break;
            }
            let mut diff = vec![BigRational::zero(); k_cap];
            poly_mul_acc(&mut diff, &b[m], &q[n - m], k_cap);
            for (slot, d) in acc.iter_mut().zip(diff) {
                *slot -= d;
            }
        }
        q[n] = acc;
    }
    q
}

/// Square root with constant term 1, by Newton iteration s ← (s + r/s)/2,
/// doubling the trusted order each round.
fn series_sqrt(radicand: &RatSeries, t_terms: usize, k_cap: usize) -> RatSeries {
    let half = BigRational::new(1.into(), 2.into());
    let mut root: RatSeries = vec![vec![BigRational::zero(); k_cap]];
    root[0][0] = BigRational::one();
    let mut trusted = 1usize;
    while trusted < t_terms {
        trusted = (trusted * 2).min(t_terms);
        root.resize(trusted, vec![BigRational::zero(); k_cap]);
        let quotient = series_div(radicand, &root, trusted, k_cap);
        for n in 0..trusted {
            for k in 0..k_cap {
                let sum = &root[n][k] + &quotient[n][k];
                root[n][k] = sum * &half;
            }
        }
    }
    root
}

/// Distance distribution to the identity (the star): entry `[n][d]` counts
/// one-stack-sortable permutations of size n at edit distance d from
/// 1 2 … n. Derived from the leaf table by d = 2(k−1) with the Narayana
/// symmetry; all distance exponents are even.
pub fn star_distance_series(max_n: usize) -> Result<SeriesTable> {
    let leaves = leaf_series(max_n)?;
    let mut table = SeriesTable::new(&["t", "q"], &[max_n + 1, 2 * max_n + 1]);
    table.set(&[0, 0], BigInt::one());
    for n in 1..=max_n {
        for k in 1..=n {
            let c = leaves.get(&[n, k]);
            if !c.is_zero() {
                table.add_assign_at(&[n, 2 * (k - 1)], c);
            }
        }
    }
    Ok(table)
}

/// Trees by edge count, height, and number of leaves at maximal depth:
/// entry `[i][j][k]`. Height-1 trees are the stars (`[i][1][k]` = δ_{i,k});
/// deeper trees arise by distributing k new deepest leaves over the l
/// previous deepest leaves, C(l+k−1, k) ways.
pub fn deep_leaf_table(max_n: usize) -> Result<SeriesTable> {
    check_order(max_n, SERIES_ORDER_CAP)?;
    let b = max_n + 1;
    let mut table = SeriesTable::new(&["x", "y", "z"], &[b, b, b]);
    if max_n == 0 {
        return Ok(table);
    }
    // Pascal triangle for the distribution coefficients C(l+k−1, k).
    let mut pascal: Vec<Vec<BigInt>> = Vec::with_capacity(2 * b);
    pascal.push(vec![BigInt::one()]);
    for r in 1..2 * b {
        let prev = &pascal[r - 1];
        let mut row = vec![BigInt::one()];
        for c in 1..r {
            row.push(&prev[c - 1] + &prev[c]);
        }
        row.push(BigInt::one());
        pascal.push(row);
    }
    for i in 1..=max_n {
        table.set(&[i, 1, i], BigInt::one());
    }
    for j in 2..=max_n {
        for i in j..=max_n {
            for k in 1..=(i - j + 1) {
                let mut total = BigInt::zero();
                let prev_edges = i - k;
                for l in 1..=prev_edges.saturating_sub(j - 2) {
                    let prev = table.get(&[prev_edges, j - 1, l]);
                    if prev.is_zero() {
                        continue;
                    }
                    total += prev * &pascal[l + k - 1][k];
                }
                if !total.is_zero() {
                    table.set(&[i, j, k], total);
                }
            }
        }
    }
    Ok(table)
}

/// Trees by edge count and height, computed independently from the
/// height-truncated continued fraction: with G₀ = 1 and
/// G_h = 1/(1 − x·G_{h−1}) counting trees of height ≤ h, entry `[n][h]` is
/// the coefficient of xⁿ in G_h − G_{h−1}.
pub fn height_counts(max_n: usize) -> Result<SeriesTable> {
    check_order(max_n, HEIGHT_ORDER_CAP)?;
    let terms = max_n + 1;
    let mut table = SeriesTable::new(&["x", "y"], &[terms, terms]);
    table.set(&[0, 0], BigInt::one());
    let mut previous: Vec<BigInt> = vec![BigInt::zero(); terms];
    previous[0] = BigInt::one(); // G₀
    for h in 1..=max_n {
        // G_h = 1 / (1 − x·G_{h−1})
        let mut current = vec![BigInt::zero(); terms];
        current[0] = BigInt::one();
        for n in 1..terms {
            let mut acc = BigInt::zero();
            for m in 1..=n {
                let g = &previous[m - 1];
                if !g.is_zero() {
                    acc += g * &current[n - m];
                }
            }
            current[n] = acc;
        }
        for n in 1..terms {
            let diff = &current[n] - &previous[n];
            debug_assert!(!diff.is_negative());
            if !diff.is_zero() {
                table.set(&[n, h], diff);
            }
        }
        previous = current;
    }
    Ok(table)
}

/// Distance distribution to the reverse identity (the chain): entry `[n][d]`
/// counts size-n one-stack-sortable permutations at edit distance
/// d = 2(n − height) from n n−1 … 1. Assembled from the deep-leaf table.
pub fn chain_distance_series(max_n: usize) -> Result<SeriesTable> {
    let deep = deep_leaf_table(max_n)?;
    let mut table = SeriesTable::new(&["x", "y"], &[max_n + 1, 2 * max_n + 1]);
    table.set(&[0, 0], BigInt::one());
    for i in 1..=max_n {
        for j in 1..=i {
            let mut count = BigInt::zero();
            for k in 1..=i {
                count += deep.get(&[i, j, k]);
            }
            if !count.is_zero() {
                table.add_assign_at(&[i, 2 * (i - j)], &count);
            }
        }
    }
    Ok(table)
}

/// Exact average edit distance from size-n inputs to the identity; equals
/// n − 1 for every n ≥ 1.
pub fn average_distance_to_identity(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Ok(BigRational::zero());
    }
    let leaves = leaf_series(n)?;
    let mut weighted = BigInt::zero();
    for k in 1..=n {
        weighted += leaves.get(&[n, k]) * BigInt::from(2 * (n - k));
    }
    Ok(BigRational::new(weighted, catalan(n)))
}

/// Exact average height of trees with n edges.
pub fn average_height(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Ok(BigRational::zero());
    }
    let heights = height_counts(n)?;
    let mut weighted = BigInt::zero();
    for h in 1..=n {
        weighted += heights.get(&[n, h]) * BigInt::from(h);
    }
    Ok(BigRational::new(weighted, catalan(n)))
}

/// Exact average edit distance to the chain: 2(n − average height).
pub fn average_distance_to_chain(n: usize) -> Result<BigRational> {
    let avg_height = average_height(n)?;
    Ok(BigRational::from_integer(BigInt::from(2 * n as i64)) - avg_height * BigInt::from(2))
}

/// Asymptotic average height √(πn) − 1/2, for comparison reports.
pub fn height_asymptotic(n: usize) -> f64 {
    (std::f64::consts::PI * n as f64).sqrt() - 0.5
}

/// Asymptotic average chain distance 2(n − √(πn) + 1/2).
pub fn chain_distance_asymptotic(n: usize) -> f64 {
    2.0 * (n as f64 - (std::f64::consts::PI * n as f64).sqrt() + 0.5)
}

/// Per-tree statistics for one generated tree: the structural pair
/// (leaves, height) always equals the word pair (lis, lds), and the
/// distances to the two canonical trees are determined by them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatRecord {
    pub n: usize,
    pub leaves: usize,
    pub height: usize,
    pub lis: usize,
    pub lds: usize,
    pub distance_to_star: usize,
    pub distance_to_chain: usize,
}

/// Statistics of every tree with n edges, in generation order. The
/// exhaustive counterpart of the series tables; the averages of the
/// distance columns agree with [`average_distance_to_identity`] and
/// [`average_distance_to_chain`].
pub fn stat_records(n: usize) -> Result<Vec<StatRecord>> {
    let mut records = Vec::new();
    for tree in trees_of_size(n)? {
        let perm = encode(&tree);
        let record = StatRecord {
            n,
            leaves: tree.leaf_count(),
            height: tree.height(),
            lis: perm.lis_length(),
            lds: perm.lds_length(),
            distance_to_star: 2 * (n - perm.lis_length()),
            distance_to_chain: 2 * (n - perm.lds_length()),
        };
        debug_assert_eq!(record.leaves, record.lis);
        debug_assert_eq!(record.height, record.lds);
        records.push(record);
    }
    Ok(records)
}

/// Neighborhood statistics over every tree with n edges.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodReport {
    pub n: usize,
    pub tree_count: usize,
    /// Largest number of distinct one-deletion results seen.
    pub max_distinct_deletions: usize,
    /// Vertex count minus one.
    pub deletion_bound: usize,
    /// Largest number of distinct one-insertion results seen.
    pub max_distinct_insertions: usize,
    /// Three times the cubed vertex count.
    pub insertion_bound: usize,
    pub bounds_hold: bool,
    /// Exact mean distance over all ordered tree pairs.
    pub mean_pairwise_distance: BigRational,
    /// n / ln n, the asymptotic lower-bound comparison value.
    pub comparison_n_over_ln_n: f64,
}

/// Sweeps every tree with n edges: checks the deletion/insertion
/// neighborhood bounds and measures the exact mean pairwise distance.
pub fn neighborhood_report(n: usize) -> Result<NeighborhoodReport> {
    check_order(n, NEIGHBORHOOD_CAP)?;
    let trees: Vec<OrderedTree> = trees_of_size(n)?.collect();
    let vertex_count = n + 1;
    let deletion_bound = vertex_count - 1;
    let insertion_bound = 3 * vertex_count * vertex_count * vertex_count;
    let mut max_del = 0;
    let mut max_ins = 0;
    for tree in &trees {
        let (deletions, insertions) = neighbor_counts(&encode(tree))?;
        max_del = max_del.max(deletions);
        max_ins = max_ins.max(insertions);
    }
    let bounds_hold = max_del <= deletion_bound && max_ins <= insertion_bound;
    let views: Vec<DpTree> = trees.iter().map(DpTree::build).collect();
    let mut total = BigInt::zero();
    for i in 0..views.len() {
        for j in i + 1..views.len() {
            total += BigInt::from(2 * distance_only(&views[i], &views[j]) as i64);
        }
    }
    let pair_count = BigInt::from(views.len() as i64) * BigInt::from(views.len() as i64);
    let mean_pairwise_distance = if views.len() <= 1 {
        BigRational::zero()
    } else {
        BigRational::new(total, pair_count)
    };
    let comparison_n_over_ln_n = if n > 1 {
        n as f64 / (n as f64).ln()
    } else {
        f64::NAN
    };
    Ok(NeighborhoodReport {
        n,
        tree_count: trees.len(),
        max_distinct_deletions: max_del,
        deletion_bound,
        max_distinct_insertions: max_ins,
        insertion_bound,
        bounds_hold,
        mean_pairwise_distance,
        comparison_n_over_ln_n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn catalan_values() {
        let expect = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(catalan(n), BigInt::from(c), "C({n})");
        }
        // Catalan numbers leave 64-bit range near n = 34.
        assert!(catalan(40) > BigInt::from(u64::MAX));
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana(4, 2).unwrap(), BigInt::from(6));
        for n in 1..=10 {
            assert_eq!(narayana(n, 1).unwrap(), BigInt::one(), "chains at n={n}");
            assert_eq!(narayana(n, n).unwrap(), BigInt::one(), "stars at n={n}");
            for k in 1..=n {
                assert_eq!(
                    narayana(n, k).unwrap(),
                    narayana(n, n + 1 - k).unwrap(),
                    "symmetry at ({n},{k})"
                );
            }
            let total: BigInt = (1..=n).map(|k| narayana(n, k).unwrap()).sum();
            assert_eq!(total, catalan(n), "row sum at n={n}");
        }
        assert!(narayana(4, 0).is_err());
        assert!(narayana(4, 5).is_err());
    }

    #[test]
    fn generation_counts_match_catalan() {
        for n in 0..=9 {
            let trees: Vec<OrderedTree> = trees_of_size(n).unwrap().collect();
            assert_eq!(BigInt::from(trees.len() as i64), catalan(n), "count at {n}");
            let distinct: BTreeSet<String> = trees.iter().map(|t| t.to_dyck()).collect();
            assert_eq!(distinct.len(), trees.len(), "duplicates at {n}");
            for tree in &trees {
                assert_eq!(tree.edge_count(), n);
            }
        }
        assert!(trees_of_size(13).is_err());
    }

    #[test]
    fn generation_is_lexicographic() {
        let words: Vec<String> = trees_of_size(4)
            .unwrap()
            .map(|t| t.to_dyck())
            .collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(words.first().unwrap(), "(((())))");
        assert_eq!(words.last().unwrap(), "()()()()");
    }

    #[test]
    fn leaf_histograms_match_narayana() {
        for n in 1..=9 {
            let mut histogram = vec![0i64; n + 1];
            for tree in trees_of_size(n).unwrap() {
                histogram[tree.leaf_count()] += 1;
            }
            for (k, &count) in histogram.iter().enumerate().skip(1) {
                assert_eq!(
                    BigInt::from(count),
                    narayana(n, k).unwrap(),
                    "narayana({n},{k})"
                );
            }
        }
    }

    #[test]
    fn leaf_series_first_rows() {
        let table = leaf_series(3).unwrap();
        assert_eq!(table.get(&[0, 0]), &BigInt::one());
        assert_eq!(table.get(&[1, 1]), &BigInt::one());
        assert_eq!(table.get(&[2, 1]), &BigInt::one());
        assert_eq!(table.get(&[2, 2]), &BigInt::one());
        assert_eq!(table.get(&[3, 1]), &BigInt::one());
        assert_eq!(table.get(&[3, 2]), &BigInt::from(3));
        assert_eq!(table.get(&[3, 3]), &BigInt::one());
        assert_eq!(table.get(&[3, 0]), &BigInt::zero());
    }

    #[test]
    fn leaf_series_rows_sum_to_catalan() {
        let table = leaf_series(12).unwrap();
        for n in 0..=12 {
            let total: BigInt = (0..=n).map(|k| table.get(&[n, k]).clone()).sum();
            assert_eq!(total, catalan(n), "row sum at {n}");
        }
    }

    #[test]
    fn closed_form_matches_recurrence_deeper() {
        let rec = leaf_series_recurrence(30);
        let closed = leaf_series_closed_form(30).unwrap();
        assert_eq!(rec, closed);
    }

    #[test]
    fn star_distance_series_first_rows() {
        let table = star_distance_series(3).unwrap();
        assert_eq!(table.get(&[1, 0]), &BigInt::one());
        assert_eq!(table.get(&[2, 0]), &BigInt::one());
        assert_eq!(table.get(&[2, 2]), &BigInt::one());
        assert_eq!(table.get(&[3, 0]), &BigInt::one());
        assert_eq!(table.get(&[3, 2]), &BigInt::from(3));
        assert_eq!(table.get(&[3, 4]), &BigInt::one());
        // Odd distances never occur.
        for n in 0..=3 {
            for d in (1..=2 * n).step_by(2) {
                assert_eq!(table.get(&[n, d]), &BigInt::zero());
            }
        }
    }

    #[test]
    fn deep_leaf_table_small_values() {
        let table = deep_leaf_table(5).unwrap();
        // Height-1 base case.
        for i in 1..=5 {
            for k in 1..=5 {
                let expect = if i == k { BigInt::one() } else { BigInt::zero() };
                assert_eq!(table.get(&[i, 1, k]), &expect, "base ({i},{k})");
            }
        }
        assert_eq!(table.get(&[3, 2, 1]), &BigInt::from(2));
        assert_eq!(table.get(&[3, 2, 2]), &BigInt::one());
        // Totals per edge count match Catalan.
        for i in 1..=5 {
            let mut total = BigInt::zero();
            for j in 1..=i {
                for k in 1..=i {
                    total += table.get(&[i, j, k]);
                }
            }
            assert_eq!(total, catalan(i), "total at {i}");
        }
    }

    #[test]
    fn height_counts_match_deep_leaf_marginal() {
        let deep = deep_leaf_table(12).unwrap();
        let heights = height_counts(12).unwrap();
        for n in 1..=12 {
            for j in 1..=n {
                let mut marginal = BigInt::zero();
                for k in 1..=n {
                    marginal += deep.get(&[n, j, k]);
                }
                assert_eq!(&marginal, heights.get(&[n, j]), "({n},{j})");
            }
        }
    }

    #[test]
    fn height_counts_small_values() {
        let table = height_counts(4).unwrap();
        assert_eq!(table.get(&[1, 1]), &BigInt::one());
        assert_eq!(table.get(&[3, 1]), &BigInt::one());
        assert_eq!(table.get(&[3, 2]), &BigInt::from(3));
        assert_eq!(table.get(&[3, 3]), &BigInt::one());
        let total: BigInt = (1..=4).map(|h| table.get(&[4, h]).clone()).sum();
        assert_eq!(total, catalan(4));
    }

    #[test]
    fn height_histograms_match_generation() {
        for n in 1..=9 {
            let table = height_counts(n).unwrap();
            let mut histogram = vec![0i64; n + 1];
            for tree in trees_of_size(n).unwrap() {
                histogram[tree.height()] += 1;
            }
            for (h, &count) in histogram.iter().enumerate().skip(1) {
                assert_eq!(&BigInt::from(count), table.get(&[n, h]), "({n},{h})");
            }
        }
    }

    #[test]
    fn chain_distance_series_printed_terms() {
        // x + x²y² + x² + x³y⁴ + 3x³y² + x³ + x⁴y⁶ + 7x⁴y⁴ + 5x⁴y² + x⁴
        let table = chain_distance_series(4).unwrap();
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
            assert_eq!(table.get(&[n, d]), &BigInt::from(c), "[x^{n} y^{d}]");
        }
        let nonzero: Vec<(Vec<usize>, BigInt)> = table
            .iter_nonzero()
            .map(|(i, c)| (i, c.clone()))
            .filter(|(i, _)| i[0] >= 1)
            .collect();
        assert_eq!(nonzero.len(), expected.len());
    }

    #[test]
    fn identity_average_is_n_minus_one() {
        for n in 1..=12 {
            assert_eq!(
                average_distance_to_identity(n).unwrap(),
                BigRational::from_integer(BigInt::from(n as i64 - 1)),
                "average at {n}"
            );
        }
        assert_eq!(average_distance_to_identity(0).unwrap(), BigRational::zero());
    }

    #[test]
    fn chain_average_small_values() {
        // Heights of the five 3-edge trees are 1,2,2,2,3: average 2, so the
        // average distance is 2·(3 − 2) = 2.
        assert_eq!(
            average_distance_to_chain(3).unwrap(),
            BigRational::from_integer(2.into())
        );
        assert_eq!(average_distance_to_chain(1).unwrap(), BigRational::zero());
        assert_eq!(
            average_height(3).unwrap(),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn averages_match_exhaustive_enumeration() {
        use crate::distance::perm_distance;
        use crate::perm::Permutation;
        for n in 1..=6 {
            let id = Permutation::identity(n);
            let chain = Permutation::reverse_identity(n);
            let mut id_total = 0usize;
            let mut chain_total = 0usize;
            let mut count = 0usize;
            for tree in trees_of_size(n).unwrap() {
                let perm = encode(&tree);
                id_total += perm_distance(&perm, &id).unwrap().distance;
                chain_total += perm_distance(&perm, &chain).unwrap().distance;
                count += 1;
            }
            let id_mean = BigRational::new(BigInt::from(id_total as i64), BigInt::from(count as i64));
            let chain_mean =
                BigRational::new(BigInt::from(chain_total as i64), BigInt::from(count as i64));
            assert_eq!(id_mean, average_distance_to_identity(n).unwrap(), "id at {n}");
            assert_eq!(
                chain_mean,
                average_distance_to_chain(n).unwrap(),
                "chain at {n}"
            );
        }
    }

    #[test]
    fn stat_records_agree_with_distance_dp() {
        use crate::distance::perm_distance;
        use crate::perm::Permutation;
        for n in 1..=6 {
            let records = stat_records(n).unwrap();
            assert_eq!(BigInt::from(records.len() as i64), catalan(n));
            let id = Permutation::identity(n);
            let chain = Permutation::reverse_identity(n);
            for (record, tree) in records.iter().zip(trees_of_size(n).unwrap()) {
                let perm = encode(&tree);
                assert_eq!(record.leaves, record.lis);
                assert_eq!(record.height, record.lds);
                assert_eq!(
                    record.distance_to_star,
                    perm_distance(&perm, &id).unwrap().distance
                );
                assert_eq!(
                    record.distance_to_chain,
                    perm_distance(&perm, &chain).unwrap().distance
                );
            }
        }
    }

    #[test]
    fn neighborhood_bounds_tiny() {
        let report = neighborhood_report(1).unwrap();
        assert_eq!(report.tree_count, 1);
        assert_eq!(report.max_distinct_deletions, 1);
        assert_eq!(report.max_distinct_insertions, 2); // {12, 21}
        assert!(report.bounds_hold);
        assert_eq!(report.mean_pairwise_distance, BigRational::zero());
        assert!(neighborhood_report(8).is_err());
    }

    #[test]
    fn neighborhood_bounds_small() {
        for n in 2..=5 {
            let report = neighborhood_report(n).unwrap();
            assert!(report.bounds_hold, "bounds at {n}");
            assert!(report.max_distinct_deletions <= n);
            assert!(report.mean_pairwise_distance > BigRational::zero());
        }
    }

    #[test]
    fn series_table_out_of_bounds_reads_zero() {
        let table = leaf_series(3).unwrap();
        assert_eq!(table.get(&[9, 9]), &BigInt::zero());
    }
}
