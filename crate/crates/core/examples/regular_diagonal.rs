//! Diagonal counts |Gr_(a,a)(R)| for regular modules via Hall polynomials,
//! including points of higher degree where no closed formula exists.

use kgrass::hall_polys::regular_diagonal_count;
use kgrass::kronecker_model::KroneckerDescriptor;

fn main() {
    for src in ["R(p,[3])", "R(p,[1,1])", "R(p,[2,1]) + R(s,[1])", "R(p@2,[2])", "R(p@2,[1]) + R(s,[2])"] {
        let r: KroneckerDescriptor = src.parse().unwrap();
        let n = r.dim_vector().a;
        println!("{r}");
        for a in 0..=n {
            println!("  a={a}: {}", regular_diagonal_count(&r, a));
        }
    }
}
