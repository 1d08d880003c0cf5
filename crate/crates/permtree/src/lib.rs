//! Edit distance between rooted ordered trees, worked entirely on the
//! permutation side of the classical bijection with one-stack-sortable
//! (231-avoiding) permutations.
//!
//! The crate provides:
//!
//! - [`codec`]: the bijection itself, postorder edge labels read in
//!   preorder, in both directions;
//! - [`perm`] and [`tree`]: the two value domains with their statistics
//!   (pattern containment, increasing/decreasing subsequences, leaf counts,
//!   heights, subtree enumeration);
//! - [`factors`]: compact and complete factors of a permutation word and
//!   their classification against the decoded tree;
//! - [`edit`]: the edit operations (deletion with renormalization and the
//!   three insertions anchored at a complete factor) plus one-step
//!   neighborhoods;
//! - [`distance`]: the Zhang–Shasha dynamic program specialized to
//!   unlabeled trees with unit insert/delete costs, returning the distance
//!   together with a greatest common pattern and a witness embedding, plus
//!   a breadth-first-search oracle for validation;
//! - [`enumeration`]: exact series: Catalan/Narayana counts, trees by
//!   leaves, by height and deepest-leaf count, distance distributions to
//!   the star and to the chain, exact average distances, and neighborhood
//!   bounds;
//! - [`verify`]: the cross-check suites wired into the command-line tool;
//! - [`cli`]: the command-line front end (see the `permtree` binary).
//!
//! Start with the examples directory: each example is a runnable tour of
//! one capability.
//!
//! ```
//! use permtree::codec::{decode, encode};
//! use permtree::distance::perm_distance;
//! use permtree::tree::OrderedTree;
//!
//! let tree = OrderedTree::parse("()(()(()))(())").unwrap();
//! let sigma = encode(&tree);
//! assert_eq!(sigma.to_string(), "1,5,2,4,3,7,6");
//! assert_eq!(decode(&sigma).unwrap(), tree);
//!
//! let other: permtree::perm::Permutation = "31264587".parse().unwrap();
//! let result = perm_distance(&other, &sigma).unwrap();
//! assert_eq!(result.distance, 3);
//! ```

pub mod cli;
pub mod codec;
pub mod distance;
pub mod edit;
mod error;
pub mod enumeration;
pub mod factors;
pub mod perm;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
