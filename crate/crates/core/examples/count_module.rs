//! Counts submodules of an arbitrary module.
//!
//! Usage: `cargo run --example count_module -- "P1 + R(p,[2]) + I0" 2 2`

use kgrass::engine::count;
use kgrass::kronecker_model::KroneckerDescriptor;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (module, a, b) = match args.as_slice() {
        [m, a, b] => (m.as_str(), a.parse().expect("integer a"), b.parse().expect("integer b")),
        _ => ("P1 + R(p,[2]) + I0", 2, 2),
    };
    let m: KroneckerDescriptor = match module.parse() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let poly = count(&m, a, b);
    println!("|Gr_({a},{b})({m})| = {poly}");
    for q in [2, 3, 4, 5] {
        println!("  over F_{q}: {}", poly.eval_integer(q).unwrap());
    }
}
