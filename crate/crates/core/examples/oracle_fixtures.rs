//! Emits brute-force submodule counts as JSON lines, one record per
//! dimension vector, for use as test fixtures elsewhere.

use kgrass::kronecker_model::KroneckerDescriptor;
use kgrass::oracle::fixture_records;

fn main() {
    for (module, p) in [("P1", 2), ("I1 + P0", 3), ("R(t,[2])", 2)] {
        let m: KroneckerDescriptor = module.parse().unwrap();
        for rec in fixture_records(&m, p).unwrap() {
            println!("{}", serde_json::to_string(&rec).unwrap());
        }
    }
}
