//! so(2p,2q) and so(2p,2q+1) as u(p,q)-modules, with their bracket tables.

use liekit::decompose::{bracket_component_map, real_isotypic};
use liekit::liealg::{embed_phi, embed_psi, Embedding, PsiVariant};
use liekit::repkit::{adjoint_rep, restrict};

fn show(e: &Embedding) -> liekit::Result<()> {
    let m = restrict(&adjoint_rep(e.target()), e)?;
    let d = real_isotypic(&m)?;
    println!("{} under {}:", e.target().name(), e.source().name());
    for c in &d.components {
        println!("  {:<12} dim {}", c.label, c.dim);
    }
    for a in 0..d.components.len() {
        for b in a..d.components.len() {
            let hits = bracket_component_map(e.target(), &d, a, b)?;
            let names: Vec<&str> = hits.iter().map(|&k| d.components[k].label.as_str()).collect();
            println!("  [{}, {}] ⊆ {}", d.components[a].label, d.components[b].label, if names.is_empty() { "0".into() } else { names.join(" + ") });
        }
    }
    Ok(())
}

fn main() -> liekit::Result<()> {
    show(&embed_phi(1, 2)?)?;
    show(&embed_psi(1, 2, PsiVariant::First)?)
}
