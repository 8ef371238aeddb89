//! All Hall polynomials g^lambda_(nu,mu)(x) for one partition.
//!
//! Usage: `cargo run --example hall_polynomials -- 3,1,1`

use kgrass::hall_polys::{hall_table, HELD_OUT_PRIME};
use kgrass::kronecker_model::Partition;

fn main() {
    let lambda: Partition = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,1".into())
        .parse()
        .expect("partition such as 3,1");
    let table = hall_table(&lambda);
    println!("lambda = {lambda}, interpolated from q in {:?}", table.samples());
    for ((nu, mu), g) in table.entries() {
        println!("  nu={nu:<8} mu={mu:<8} {}", g.display_with("x"));
    }
    let bad = table.check_at_prime(HELD_OUT_PRIME);
    println!("check at p={HELD_OUT_PRIME}: {} mismatches", bad.len());
}
