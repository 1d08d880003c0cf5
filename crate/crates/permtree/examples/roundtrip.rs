//! The bijection between ordered trees and one-stack-sortable permutations:
//! encode a tree, decode it back, and sweep every small size to show the
//! round-trip is exact.
//!
//!     cargo run --example roundtrip

use permtree::codec::{decode, encode};
use permtree::enumeration::{catalan, trees_of_size};
use permtree::tree::OrderedTree;

fn main() -> permtree::Result<()> {
    let tree = OrderedTree::parse("()(()(()))(())")?;
    let sigma = encode(&tree);
    println!("tree   {tree}");
    println!("word   {sigma}");
    println!("back   {}", decode(&sigma)?);
    println!();

    println!("stars and chains:");
    for n in 1..=5 {
        println!(
            "  n={n}: star {} <-> {}, chain {} <-> {}",
            OrderedTree::star(n),
            encode(&OrderedTree::star(n)),
            OrderedTree::chain(n),
            encode(&OrderedTree::chain(n)),
        );
    }
    println!();

    println!("exhaustive round-trip by size:");
    for n in 0..=9 {
        let mut count = 0usize;
        for t in trees_of_size(n)? {
            let perm = encode(&t);
            assert!(perm.is_stack_sortable());
            assert_eq!(decode(&perm)?, t);
            count += 1;
        }
        println!("  n={n}: {count} trees (catalan {}), all round-trip", catalan(n));
    }

    println!();
    println!("a permutation with the pattern 231 has no tree:");
    let bad: permtree::perm::Permutation = "231".parse()?;
    match decode(&bad) {
        Err(e) => println!("  decode(231): {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
