//! su(p,q), so(E) and the embedding of u(p,q) into so(2p,2q).

use liekit::exactlin::signature;
use liekit::liealg::{embed_phi, gram_phi, killing_form, orthogonal_algebra, unitary_algebra};

fn main() -> liekit::Result<()> {
    let (p, q) = (1, 2);
    let su = unitary_algebra(p, q, true)?;
    println!("{}: dim {}, Killing signature {}", su.name(), su.dim(), signature(&killing_form(&su))?);
    println!("Jacobi: {}", su.check_jacobi().unwrap_or_else(|| "holds".into()));
    let so = orthogonal_algebra(&gram_phi(p, q))?;
    println!("{}: dim {}, Killing signature {}", so.name(), so.dim(), signature(&killing_form(&so))?);
    let phi = embed_phi(p, q)?;
    println!(
        "{} → {} preserves brackets: {}",
        phi.source().name(),
        phi.target().name(),
        phi.check_brackets().is_none()
    );
    Ok(())
}
