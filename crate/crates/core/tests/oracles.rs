//! Computed values checked against independent constructions.

use std::collections::BTreeSet;

use liekit::decompose::{
    commutant, complex_isotypic, highest_weight_vectors, invariant_bilinear_forms, real_isotypic, symmetric_pair_check,
    wedge_so_isomorphism, weight_spaces, weight_spaces_dynkin,
};
use liekit::exactlin::{gi, q, qi, vector, EchelonBasis, Gaussian, Rational, RealMatrix, Scalar};
use liekit::liealg::{
    compact_unitary_algebra, embed_phi, gram_phi, killing_form, so_block_inclusion, unitary_algebra, PsiVariant,
};
use liekit::repkit::{
    adjoint_rep, complexify, defining_rep, defining_rep_of, realify, restrict, tensor_rep, wedge2_rep,
};
use liekit::weights::{enumerate_dominant, fundamental_weight, rho, DominantWeight, WeightVector};

fn dw(n: usize, k: &[u32]) -> DominantWeight {
    DominantWeight::new(n, k.to_vec()).unwrap()
}

#[test]
fn wedge2_c4_weights_are_sums_of_two_coordinates() {
    let r = wedge2_rep(&defining_rep(1, 3).unwrap()).unwrap();
    let computed: BTreeSet<Vec<Rational>> = weight_spaces(&r).unwrap().into_iter().map(|(w, b)| {
        assert_eq!(b.len(), 1);
        w.coords().to_vec()
    }).collect();
    let mut expected = BTreeSet::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let mut v = vec![qi(0); 4];
            v[i] = qi(1);
            v[j] = qi(1);
            expected.insert(WeightVector::project(&v).coords().to_vec());
        }
    }
    assert_eq!(computed, expected);
}

#[test]
fn adjoint_zero_weight_has_cartan_dimension() {
    for n in [3, 4] {
        let g = unitary_algebra(1, n - 1, true).unwrap();
        let ws = weight_spaces_dynkin(&complexify(&adjoint_rep(&g))).unwrap();
        let zero = ws.iter().find(|(l, _)| l.iter().all(|&x| x == 0)).unwrap();
        assert_eq!(zero.1.len(), n - 1);
    }
}

#[test]
fn tensor_square_highest_weight_vectors() {
    let c = defining_rep(2, 2).unwrap();
    let t = tensor_rep(&c, &c).unwrap();
    let hw = highest_weight_vectors(&t).unwrap();
    let weights: Vec<DominantWeight> = hw.iter().map(|b| b.weight.clone()).collect();
    assert_eq!(weights, vec![dw(4, &[0, 1, 0]), dw(4, &[2, 0, 0])]);
    // e₁⊗e₁ and e₁⊗e₂ − e₂⊗e₁ (index i·4 + j)
    let mut sym = vec![gi(0, 0); 16];
    sym[0] = gi(1, 0);
    let mut anti = vec![gi(0, 0); 16];
    anti[1] = gi(1, 0);
    anti[4] = gi(-1, 0);
    for (block, oracle) in hw.iter().zip([anti, sym]) {
        assert_eq!(block.vectors.len(), 1);
        let span = EchelonBasis::from_vectors(16, block.vectors.iter().cloned());
        assert!(span.contains(&oracle));
    }
}

#[test]
fn killing_form_is_2n_trace_form() {
    for (p, qq) in [(1, 2), (2, 2), (1, 3)] {
        let g = unitary_algebra(p, qq, true).unwrap();
        let n = (p + qq) as i64;
        let b = killing_form(&g);
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let t = g.basis()[i].trace_of_product(&g.basis()[j]).mul_ref(&Gaussian::from_int(2 * n));
                assert_eq!(Gaussian::from_rational(b[(i, j)].clone()), t);
            }
        }
    }
}

#[test]
fn complexified_phi_module() {
    let phi = embed_phi(1, 2).unwrap();
    let m = restrict(&adjoint_rep(phi.target()), &phi).unwrap();
    let c = complexify(&m);
    let d = complex_isotypic(&c).unwrap();
    assert_eq!(d.sorted_dims(), vec![1, 3, 3, 8]);
    assert!(d.spans_module() && d.components_invariant(&c));
    // the real decomposition complexifies to unions of these blocks
    let r = real_isotypic(&m).unwrap();
    assert_eq!(r.sorted_dims(), vec![1, 6, 8]);
}

#[test]
fn tensor_square_of_c3() {
    let c = defining_rep(1, 2).unwrap();
    let d = complex_isotypic(&tensor_rep(&c, &c).unwrap()).unwrap();
    assert_eq!(d.sorted_dims(), vec![3, 6]);
}

#[test]
fn small_enumeration() {
    let got = enumerate_dominant(4, 6).unwrap();
    let expected = vec![(dw(4, &[0, 0, 0]), 1), (dw(4, &[0, 0, 1]), 4), (dw(4, &[0, 1, 0]), 6), (dw(4, &[1, 0, 0]), 4)];
    assert_eq!(got, expected);
}

#[test]
fn fundamental_weight_root_pairings() {
    for n in 3..=8 {
        for i in 1..n {
            let w = fundamental_weight(n, i).unwrap();
            for nu in 1..=n {
                for mu in nu + 1..=n {
                    let expected = if nu <= i && i < mu { qi(1) } else { qi(0) };
                    assert_eq!(w.pair_with_root(nu, mu), expected);
                }
            }
        }
        let sum = (1..n).fold(WeightVector::zero(n), |acc, i| acc.add(&fundamental_weight(n, i).unwrap()));
        assert_eq!(sum, rho(n).unwrap());
    }
    assert_eq!(fundamental_weight(3, 1).unwrap().coords(), &[q(2, 3), q(-1, 3), q(-1, 3)]);
}

#[test]
fn compact_su2_adjoint_form_is_the_killing_form() {
    let su2 = compact_unitary_algebra(2, true).unwrap();
    let f = invariant_bilinear_forms(&adjoint_rep(&su2)).unwrap();
    assert_eq!((f.symmetric.len(), f.antisymmetric.len()), (1, 0));
    let k = killing_form(&su2);
    let s = &f.symmetric[0];
    let ratio = &k[(0, 0)] / &s[(0, 0)];
    assert_eq!(k, s.scale(&ratio));
}

#[test]
fn trivial_module_forms() {
    let g = unitary_algebra(1, 2, true).unwrap();
    let f = invariant_bilinear_forms(&liekit::repkit::trivial_rep::<Rational>(&g, 1)).unwrap();
    assert_eq!(f.dim(), 1);
}

#[test]
fn wedge_so_map_follows_the_formula() {
    let gram = gram_phi(1, 2);
    let r = wedge_so_isomorphism(&gram).unwrap();
    assert!(r.ok());
    let d = gram.rows();
    let mut col = 0;
    for i in 0..d {
        for j in i + 1..d {
            // x ↦ ⟨x, eᵢ⟩ eⱼ − ⟨x, eⱼ⟩ eᵢ evaluated on each basis vector
            let m = r.algebra.element(&r.map.column(col)).real_part();
            for c in 0..d {
                let x = vector::unit::<Rational>(d, c);
                let mut expected = vec![qi(0); d];
                expected[j] = &expected[j] + &gram[(c, i)];
                expected[i] = &expected[i] - &gram[(c, j)];
                assert_eq!(m.mul_vec(&x), expected, "e{i}∧e{j} on e{c}");
            }
            col += 1;
        }
    }
}

#[test]
fn commutant_dimensions() {
    assert_eq!(commutant(&realify(&defining_rep(1, 2).unwrap())).len(), 2);
    let w = wedge2_rep(&defining_rep(1, 3).unwrap()).unwrap();
    assert_eq!(commutant(&realify(&w)).len(), 4);
    assert_eq!(commutant(&defining_rep(1, 2).unwrap()).len(), 1);
    let g = unitary_algebra(2, 2, true).unwrap();
    assert_eq!(commutant(&wedge2_rep(&defining_rep_of(&g)).unwrap()).len(), 1);
}

#[test]
fn block_complement_is_the_last_row_and_column() {
    let e = so_block_inclusion(1, 2, PsiVariant::First).unwrap();
    let r = symmetric_pair_check(&e).unwrap();
    assert!(r.is_symmetric_pair());
    assert_eq!(r.m_label, "R^{2,4}");
    // m is spanned by the so(2,5) elements supported on the last row/column
    let g = e.target();
    let oracle: Vec<Vec<Rational>> = g
        .basis()
        .iter()
        .filter(|x| {
            let n = x.rows();
            (0..n).all(|a| (0..n).all(|b| a == n - 1 || b == n - 1 || x[(a, b)] == gi(0, 0)))
        })
        .map(|x| g.coords(x).unwrap())
        .collect();
    assert_eq!(oracle.len(), 6);
    let m = EchelonBasis::from_vectors(g.dim(), r.m_basis.iter().cloned());
    assert!(oracle.iter().all(|v| m.contains(v)));
}

#[test]
fn realified_defining_form_is_diag_ipq() {
    let v = realify(&defining_rep(2, 3).unwrap());
    let f = invariant_bilinear_forms(&v).unwrap();
    assert_eq!(f.symmetric[0], gram_phi(2, 3));
    // the antisymmetric form is the imaginary part of the hermitian form,
    // [[0, I_{p,q}], [−I_{p,q}, 0]] up to scale
    let a = &f.antisymmetric[0];
    let i = liekit::liealg::ipq(2, 3);
    let mut omega = RealMatrix::zeros(10, 10);
    omega.set_block(0, 5, &i);
    omega.set_block(5, 0, &i.neg());
    let ratio = &a[(0, 5)] / &omega[(0, 5)];
    assert_eq!(*a, omega.scale(&ratio));
}
