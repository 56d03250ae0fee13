//! Real, complex or quaternionic: Λ²C^4 over su(2,2) and su(1,3), and the
//! lowest dimensional real modules.

use liekit::decompose::{lowest_dim_modules, real_type};
use liekit::liealg::unitary_algebra;
use liekit::repkit::highest_weight_module;
use liekit::weights::DominantWeight;

fn main() -> liekit::Result<()> {
    let w2 = DominantWeight::fundamental(4, 2)?;
    for (p, q) in [(2, 2), (1, 3)] {
        let g = unitary_algebra(p, q, true)?;
        let v = real_type(&highest_weight_module(&g, &w2)?)?;
        println!("Λ²C^4 over su({p},{q}): {} type, irreducible real module of dim {}", v.kind, v.real_dim);
    }
    for (p, q) in [(1, 2), (2, 2), (1, 3)] {
        let r = lowest_dim_modules(p, q)?;
        let found: Vec<String> = r
            .modules
            .iter()
            .map(|m| format!("{} ({}, dim {})", m.weight, m.kind.map_or("?", |k| k.as_str()), m.real_dim))
            .collect();
        println!("su({p},{q}), dim ≤ {}: {}", r.bound, found.join(", "));
    }
    Ok(())
}
