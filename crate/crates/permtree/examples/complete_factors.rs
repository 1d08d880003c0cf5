//! Factors of a permutation word: compact factors are intervals of values,
//! complete factors are exactly the subtrees of the decoded tree, and the
//! compact-but-not-complete leftovers are descending internal paths.
//!
//!     cargo run --example complete_factors

use permtree::codec::decode;
use permtree::factors::{classify_compact, compact_factors, complete_factors, CompactClass, FactorSpan};
use permtree::perm::Permutation;

fn word_of(perm: &Permutation, span: FactorSpan) -> String {
    perm.as_slice()[span.start - 1..span.end]
        .iter()
        .map(|v| v.to_string())
        .collect()
}

fn main() -> permtree::Result<()> {
    let sigma: Permutation = "1524376".parse()?;
    let tree = decode(&sigma)?;
    println!("sigma  {sigma}");
    println!("tree   {tree}");
    println!();

    println!("complete factors (= subtrees):");
    for span in complete_factors(&sigma)? {
        println!("  {span}  {}", word_of(&sigma, span));
    }
    println!();

    println!("all compact factors, classified:");
    for span in compact_factors(&sigma) {
        match classify_compact(&sigma, span)? {
            CompactClass::Subtree => {
                println!("  {span}  {:<9} subtree", word_of(&sigma, span))
            }
            CompactClass::InternalPath { edges } => {
                println!(
                    "  {span}  {:<9} internal path {edges:?}",
                    word_of(&sigma, span)
                )
            }
        }
    }
    println!();

    println!("subtree edge sets of the tree, in matching order:");
    for edges in tree.subtrees() {
        println!("  {edges:?}");
    }
    Ok(())
}
