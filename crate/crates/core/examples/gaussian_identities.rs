//! Gaussian coefficients for arbitrary integer arguments and two of the
//! identities they satisfy.

use kgrass::qbinom::{gauss, q_nanjundiah_sum, q_vandermonde_sum};

fn main() {
    for (l, a) in [(1, 2), (2, 4), (3, 6), (1, -1), (2, -1), (2, -3)] {
        println!("G^{l}_{a} = {}", gauss(l, a));
    }

    let mut checked = 0;
    for l in -4..=4 {
        for a in -4..=4 {
            for b in -4..=4 {
                assert_eq!(q_vandermonde_sum(l, a, b), gauss(l, a + b));
                checked += 1;
            }
        }
    }
    println!("q-Vandermonde holds on {checked} triples");

    let (m, p, mu, nu) = (2, 1, 4, 3);
    println!(
        "Nanjundiah at {:?}: {} = {}",
        (m, p, mu, nu),
        q_nanjundiah_sum(m, p, mu, nu),
        gauss(m, mu) * gauss(p, nu)
    );
}
