//! Edit distance with greatest-common-pattern extraction, and the three
//! independent routes to the same number: the dynamic program, a
//! breadth-first search over single edit steps, and the formula
//! |a| + |b| − 2|u| with a brute-force largest common pattern u.
//!
//!     cargo run --example edit_distance

use permtree::distance::{bfs_oracle_distance, perm_distance, tree_edit_distance};
use permtree::perm::{common_pattern_brute_force, Permutation};
use permtree::tree::OrderedTree;

fn main() -> permtree::Result<()> {
    let a: Permutation = "31264587".parse()?;
    let b: Permutation = "1524376".parse()?;
    let result = perm_distance(&a, &b)?;
    println!("a = {a}");
    println!("b = {b}");
    println!("distance          {}", result.distance);
    println!("common pattern    {}", result.common);
    if let Some((wa, wb)) = &result.witness {
        println!("realized in a at  {wa:?}");
        println!("realized in b at  {wb:?}");
    }
    println!();

    let bfs = bfs_oracle_distance(&a, &b, a.len() + b.len())?;
    let brute = common_pattern_brute_force(&a, &b)?;
    println!("bfs oracle        {bfs}");
    println!(
        "pattern formula   |a| + |b| - 2|u| = {} + {} - 2*{} = {}",
        a.len(),
        b.len(),
        brute.len(),
        a.len() + b.len() - 2 * brute.len()
    );
    println!("brute-force u     {brute} (lexicographically least optimum)");
    println!();

    println!("trees work directly too:");
    let star = OrderedTree::star(4);
    let chain = OrderedTree::chain(4);
    let r = tree_edit_distance(&star, &chain);
    println!(
        "  d({star}, {chain}) = {} with common pattern {}",
        r.distance, r.common
    );
    Ok(())
}
