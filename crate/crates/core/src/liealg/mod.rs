//! Matrix Lie algebras, their embeddings and Cartan data.

mod algebra;
mod cartan;
mod classical;
mod embedding;

pub use algebra::{form_value, killing_form, AlgebraKind, MatrixLieAlgebra};
pub use cartan::{cartan_data, cartan_integer, CartanData};
pub use classical::{
    compact_unitary_algebra, gram_phi, gram_psi1, gram_psi2, ipq, orthogonal_algebra, traceless_part,
    unitary_algebra,
};
pub use embedding::{
    embed_phi, embed_psi, embed_u_in_su, same_algebra, so_block_inclusion, subalgebra_inclusion, Embedding,
    PsiVariant, UnitarySide,
};
