//! Symmetric pairs containing u(p,q).

use liekit::decompose::symmetric_pair_check;
use liekit::liealg::{embed_phi, embed_u_in_su, UnitarySide};

fn main() -> liekit::Result<()> {
    let (p, q) = (2, 2);
    for e in [
        embed_u_in_su(p, q, UnitarySide::ExtraNegative)?,
        embed_u_in_su(p, q, UnitarySide::ExtraPositive)?,
        embed_phi(p, q)?,
    ] {
        let r = symmetric_pair_check(&e)?;
        println!(
            "({}, {}): symmetric {}, m = {} (dim {}), Killing signature on m {}",
            r.g,
            r.h,
            r.is_symmetric_pair(),
            r.m_label,
            r.m_dim(),
            r.killing_signature_m
        );
    }
    Ok(())
}
