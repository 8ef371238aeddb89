//! Compares engine counts with a brute-force count over F_p.

use kgrass::cli::verify_report;
use kgrass::engine::Engine;
use kgrass::kronecker_model::KroneckerDescriptor;
use kgrass::oracle::build_rep;

fn main() {
    let engine = Engine::default();
    for (module, p) in [("P2 + I1", 2), ("R(a,[2]) + R(b@2,[1])", 3), ("2*P0 + R(a,[1,1])", 2)] {
        let m: KroneckerDescriptor = module.parse().unwrap();
        let rep = build_rep(&m, p).unwrap();
        println!("{m} over F_{p}: alpha = {:?}, beta = {:?}", rep.alpha, rep.beta);
        let report = verify_report(&engine, &m, p, None).unwrap();
        println!("  {} cells, {} mismatches", report.cells.len(), report.mismatches);
    }

    let too_many: KroneckerDescriptor = "R(a,[1]) + R(b,[1]) + R(c,[1]) + R(d,[1])".parse().unwrap();
    match build_rep(&too_many, 2) {
        Ok(_) => unreachable!(),
        Err(e) => println!("{too_many} over F_2: {e}"),
    }
}
