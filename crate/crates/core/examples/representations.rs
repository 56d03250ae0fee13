//! Building modules: defining, dual, conjugate, Λ², tensor, realification.

use liekit::repkit::{adjoint_rep, conjugate_rep, defining_rep, dual_rep, realify, tensor_rep, wedge2_rep};

fn main() -> liekit::Result<()> {
    let c = defining_rep(2, 2)?;
    let complex = [c.clone(), dual_rep(&c), conjugate_rep(&c), wedge2_rep(&c)?, tensor_rep(&c, &c)?];
    for r in &complex {
        println!("{:<28} dim {:>2}  brackets respected: {}", r.name(), r.dim(), r.check_bracket_compatibility().is_none());
    }
    let v = realify(&c);
    println!("{:<28} dim {:>2}", v.name(), v.dim());
    let a = adjoint_rep(c.algebra());
    println!("{:<28} dim {:>2}", a.name(), a.dim());
    Ok(())
}
