//! Invariant forms on C^{p,q}_R and the isomorphism Λ²E ≅ so(E).

use liekit::decompose::{invariant_bilinear_forms, wedge_so_isomorphism};
use liekit::liealg::gram_phi;
use liekit::repkit::{defining_rep, realify};

fn main() -> liekit::Result<()> {
    let (p, q) = (2, 3);
    let f = invariant_bilinear_forms(&realify(&defining_rep(p, q)?))?;
    println!(
        "C^{{{p},{q}}}_R: {} invariant forms ({} symmetric, {} antisymmetric)",
        f.dim(),
        f.symmetric.len(),
        f.antisymmetric.len()
    );
    for s in &f.signatures {
        println!("  symmetric form signature {s}");
    }
    let w = wedge_so_isomorphism(&gram_phi(1, 2))?;
    println!("Λ²R^{{2,4}} → {}: bijective {}, equivariant {}", w.algebra.name(), w.bijective, w.equivariance_failure.is_none());
    Ok(())
}
