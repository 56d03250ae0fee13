//! Dimensions of irreducible sl(n,C)-modules and a bounded listing.

use liekit::weights::{enumerate_dominant, is_self_conjugate, weyl_dim, DominantWeight};

fn main() -> liekit::Result<()> {
    for n in 3..=8 {
        let adj = DominantWeight::from_terms(n, &[(1, 1), (n - 1, 1)])?;
        println!("n = {n}: dim C^n = {n}, dim adjoint = {}", weyl_dim(&adj));
    }
    let n = 5;
    let bound = 2 * (2 * n as u128 + 1);
    println!("dominant weights of sl({n}) with dimension ≤ {bound}:");
    for (w, d) in enumerate_dominant(n, bound)? {
        println!("  {:<12} {d:>4}{}", w.to_string(), if is_self_conjugate(&w) { "  self-conjugate" } else { "" });
    }
    Ok(())
}
