//! The exact coefficient tables: trees by leaves (with its closed-form
//! cross-check), the distance distributions to the star and to the chain,
//! and the height table behind the chain distribution.
//!
//!     cargo run --example series

use num_traits::Zero;

use permtree::enumeration::{
    chain_distance_series, height_counts, leaf_series, star_distance_series,
};

fn main() -> permtree::Result<()> {
    let n = 6;
    println!("trees by edges and leaves (closed form verified internally):");
    let leaves = leaf_series(n)?;
    for row in 1..=n {
        let counts: Vec<String> = (1..=row)
            .map(|k| leaves.get(&[row, k]).to_string())
            .collect();
        println!("  n={row}: {}", counts.join(" "));
    }
    println!();

    println!("permutations by distance to the identity (all even):");
    let star = star_distance_series(n)?;
    for row in 1..=n {
        let terms: Vec<String> = (0..=2 * row)
            .filter(|&d| !star.get(&[row, d]).is_zero())
            .map(|d| format!("{}*q^{d}", star.get(&[row, d])))
            .collect();
        println!("  n={row}: {}", terms.join(" + "));
    }
    println!();

    println!("trees by edges and height:");
    let heights = height_counts(n)?;
    for row in 1..=n {
        let counts: Vec<String> = (1..=row)
            .map(|h| heights.get(&[row, h]).to_string())
            .collect();
        println!("  n={row}: {}", counts.join(" "));
    }
    println!();

    println!("permutations by distance to the chain:");
    let chain = chain_distance_series(n)?;
    for row in 1..=n {
        let terms: Vec<String> = (0..=2 * row)
            .filter(|&d| !chain.get(&[row, d]).is_zero())
            .map(|d| format!("{}*y^{d}", chain.get(&[row, d])))
            .collect();
        println!("  n={row}: {}", terms.join(" + "));
    }
    Ok(())
}
