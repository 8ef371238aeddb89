//! Writes the full table of counts for a module as CSV on stdout.
//!
//! Usage: `cargo run --example export_table -- "P1 + I1" > table.csv`

use kgrass::cli::table_records;
use kgrass::engine::Engine;
use kgrass::kronecker_model::KroneckerDescriptor;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let src = std::env::args().nth(1).unwrap_or_else(|| "P1 + R(p,[1]) + I1".into());
    let m: KroneckerDescriptor = src.parse()?;
    let engine = Engine::default();
    let mut w = csv::Writer::from_writer(std::io::stdout());
    w.write_record(["module", "a", "b", "polynomial", "at_2", "at_3"])?;
    for r in table_records(&engine, &m) {
        let p: kgrass::qbinom::LaurentPoly = r.polynomial.parse()?;
        w.write_record([
            r.module,
            r.a.to_string(),
            r.b.to_string(),
            r.polynomial,
            p.eval_integer(2)?.to_string(),
            p.eval_integer(3)?.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
