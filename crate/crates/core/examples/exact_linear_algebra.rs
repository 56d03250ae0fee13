//! Exact kernels, ranks and signatures over the rationals.

use liekit::exactlin::{kernel, min_poly, q, qi, rank, signature, RealMatrix};

fn main() -> liekit::Result<()> {
    let m = RealMatrix::from_flat(3, 4, vec![
        qi(1), qi(2), qi(3), qi(4),
        qi(2), qi(4), qi(6), qi(8),
        q(1, 2), qi(0), qi(-1), q(3, 2),
    ]);
    println!("rank {}", rank(&m));
    for v in kernel(&m) {
        let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        println!("kernel vector ({})", parts.join(", "));
    }
    let s = RealMatrix::from_flat(3, 3, vec![qi(2), qi(1), qi(0), qi(1), qi(-3), q(1, 3), qi(0), q(1, 3), qi(0)]);
    println!("signature {}", signature(&s)?);
    let j = RealMatrix::from_flat(2, 2, vec![qi(0), qi(-1), qi(1), qi(0)]);
    let c: Vec<String> = min_poly(&j).coeffs().iter().map(|x| x.to_string()).collect();
    println!("minimal polynomial of a quarter turn, coefficients from x^0: [{}]", c.join(", "));
    Ok(())
}
