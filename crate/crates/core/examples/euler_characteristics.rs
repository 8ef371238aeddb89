//! Euler characteristics of complex Kronecker Grassmannians: the counts at
//! q = 1, next to the binomial-product formulas.

use kgrass::closed_form::{count_closed_form, euler_char, ClosedFormKind};

fn main() {
    for kind in [
        ClosedFormKind::Preprojective,
        ClosedFormKind::Preinjective,
        ClosedFormKind::RegularDegreeOne,
    ] {
        let n = 3;
        println!("{kind:?} {n}");
        for a in 0..=n as i64 + 1 {
            let row: Vec<String> = (0..=n as i64 + 1)
                .map(|b| {
                    let chi = euler_char(kind, n, a, b);
                    assert_eq!(chi, count_closed_form(kind, n, a, b).eval_integer(1).unwrap());
                    format!("{chi:>4}")
                })
                .collect();
            println!("  a={a}:{}", row.join(""));
        }
    }
}
