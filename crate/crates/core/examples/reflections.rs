//! Module descriptors, dimension vectors, reflection functors and the
//! Hom/Ext table.

use kgrass::kronecker_model::{ext_dim_modules, hom_dim_modules, KroneckerDescriptor};

fn main() {
    let m: KroneckerDescriptor = "P2 + R(p,[2,1]) + R(s@2,[1]) + I1".parse().expect("valid descriptor");
    println!("M = {m}, dim {}", m.dim_vector());

    let plus = m.reflect_plus().expect("no P0 summand");
    println!("reflect_plus(M) = {plus}, dim {}", plus.dim_vector());
    let back = plus.reflect_minus().expect("no I0 summand");
    assert_eq!(back, m);

    let (s, rest, t) = "3*P0 + P1 + 2*I0".parse::<KroneckerDescriptor>().unwrap().split_socle();
    println!("split: {s}*P0 + ({rest}) + {t}*I0");

    for (x, y) in [("P1", "P3"), ("P3", "P1"), ("I0", "P0"), ("R(p,[2])", "R(p,[3])"), ("P0", "I2")] {
        let (x, y): (KroneckerDescriptor, KroneckerDescriptor) = (x.parse().unwrap(), y.parse().unwrap());
        println!(
            "Hom({x}, {y}) = {}, Ext({x}, {y}) = {}",
            hom_dim_modules(&x, &y),
            ext_dim_modules(&x, &y)
        );
    }
}
