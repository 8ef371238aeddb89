//! Grassmannian counts of indecomposable modules from their closed formulas.

use kgrass::closed_form::{count_preinjective, count_preprojective, count_regular_deg1};
use kgrass::qbinom::LaurentPoly;

fn print_grid(name: &str, rows: i64, cols: i64, f: impl Fn(i64, i64) -> LaurentPoly) {
    println!("{name}");
    for a in 0..=rows {
        let cells: Vec<String> = (0..=cols).map(|b| format!(" {:>26}", f(a, b).to_string())).collect();
        println!("  a={a}: {}", cells.join(""));
    }
}

fn main() {
    let n = 3;
    print_grid("P_3, columns b = 0..3", n + 1, n, |a, b| count_preprojective(n as u32, a, b));
    print_grid("I_3, columns b = 0..4", n, n + 1, |a, b| count_preinjective(n as u32, a, b));
    print_grid("R_p(3), columns b = 0..3", n, n, |a, b| count_regular_deg1(n as u32, a, b));
}
