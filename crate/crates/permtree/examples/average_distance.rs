//! Exact average edit distances to the two canonical trees, with the
//! large-n asymptotics for comparison: the average to the star (identity
//! permutation) is exactly n − 1; the average to the chain approaches
//! 2(n − √(πn) + ½).
//!
//!     cargo run --example average_distance --release

use num_traits::ToPrimitive;

use permtree::enumeration::{
    average_distance_to_chain, average_distance_to_identity, average_height,
    chain_distance_asymptotic, height_asymptotic,
};

fn main() -> permtree::Result<()> {
    println!("average distance to the star (exactly n - 1):");
    for n in 1..=10 {
        println!("  n={n:>3}: {}", average_distance_to_identity(n)?);
    }
    println!();

    println!("average height and distance to the chain:");
    println!(
        "  {:>4}  {:>12} {:>12}  {:>14} {:>14}",
        "n", "height", "~sqrt(pi n)-1/2", "chain distance", "~2(n-sqrt(pi n)+1/2)"
    );
    for n in [5, 10, 25, 50, 100, 200] {
        let height = average_height(n)?.to_f64().unwrap();
        let chain = average_distance_to_chain(n)?.to_f64().unwrap();
        println!(
            "  {n:>4}  {height:>12.5} {:>12.5}  {chain:>14.5} {:>14.5}",
            height_asymptotic(n),
            chain_distance_asymptotic(n),
        );
    }
    println!();
    println!("exact values are rationals; a few of them:");
    for n in [3, 5, 8] {
        println!(
            "  n={n}: height {}, chain distance {}",
            average_height(n)?,
            average_distance_to_chain(n)?
        );
    }
    Ok(())
}
