//! The edit operations on permutations: deletion with renormalization, the
//! three insertions anchored at a complete factor, and the one-step
//! neighborhood. Ends with a three-step transformation between two words.
//!
//!     cargo run --example edit_operations

use permtree::codec::decode;
use permtree::edit::{delete_at, insert_inner, insert_left, insert_right, neighbors};
use permtree::factors::FactorSpan;
use permtree::perm::Permutation;

fn main() -> permtree::Result<()> {
    let sigma: Permutation = "1524376".parse()?;
    let f = FactorSpan::new(4, 5); // the complete factor 43
    println!("sigma            {sigma}   tree {}", decode(&sigma)?);
    println!();
    let inner = insert_inner(&sigma, f)?;
    let right = insert_right(&sigma, f)?;
    let left = insert_left(&sigma, f)?;
    println!("insert inner@43  {inner}   tree {}", decode(&inner)?);
    println!("insert right@43  {right}   tree {}", decode(&right)?);
    println!("insert left@43   {left}   tree {}", decode(&left)?);
    println!();

    println!("one-step neighborhood of (1):");
    for q in neighbors(&"1".parse()?)? {
        println!("  {:?}", q.to_string());
    }
    println!();

    // Three steps from 31264587 to 1524376: delete the letter with value 1,
    // twice, then insert an inner vertex at the factor 3.
    let mut word: Permutation = "31264587".parse()?;
    println!("transformation:");
    println!("  {word}");
    for _ in 0..2 {
        word = delete_at(&word, word.position_of(1)?)?;
        println!("  {word}   (deleted the letter 1)");
    }
    let pos = word.position_of(3)?;
    word = insert_inner(&word, FactorSpan::new(pos, pos))?;
    println!("  {word}   (inner insertion at the factor 3)");
    Ok(())
}
