//! Property tests for the structural invariants.

use proptest::prelude::*;

use liekit::exactlin::{kernel, min_poly, q, qi, rank, signature, Rational, RealMatrix};
use liekit::liealg::{
    embed_phi, embed_psi, gram_phi, gram_psi2, killing_form, orthogonal_algebra, unitary_algebra, MatrixLieAlgebra,
    PsiVariant,
};
use liekit::repkit::{
    adjoint_rep, complexify, conjugate_rep, defining_rep, dual_rep, realify, restrict, tensor_rep, wedge2_rep,
    wedge_power,
};
use liekit::weights::{enumerate_dominant, weyl_dim, DominantWeight};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| q(a, b))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RealMatrix> {
    proptest::collection::vec(small_rational(), rows * cols).prop_map(move |v| RealMatrix::from_flat(rows, cols, v))
}

fn symmetric(n: usize) -> impl Strategy<Value = RealMatrix> {
    matrix(n, n).prop_map(|m| m.add(&m.transpose()))
}

/// Invertible by construction: unit lower triangular times unit upper
/// triangular, scaled by a permutation-free diagonal of non-zero entries.
fn invertible(n: usize) -> impl Strategy<Value = RealMatrix> {
    (matrix(n, n), matrix(n, n), proptest::collection::vec(prop_oneof![1i64..=5, -5i64..=-1], n)).prop_map(
        move |(a, b, d)| {
            let l = RealMatrix::from_fn(n, n, |i, j| if i == j { qi(1) } else if i > j { a[(i, j)].clone() } else { qi(0) });
            let u = RealMatrix::from_fn(n, n, |i, j| if i == j { qi(d[i]) } else if i < j { b[(i, j)].clone() } else { qi(0) });
            l.mul(&u)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sylvester_signature_is_congruence_invariant((s, p) in (2usize..=5).prop_flat_map(|n| (symmetric(n), invertible(n)))) {
        prop_assert_eq!(rank(&p), p.rows());
        let congruent = p.transpose().mul(&s).mul(&p);
        prop_assert_eq!(signature(&s).unwrap(), signature(&congruent).unwrap());
    }

    #[test]
    fn rank_plus_nullity_is_cols(m in (1usize..=5, 1usize..=6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let k = kernel(&m);
        prop_assert_eq!(rank(&m) + k.len(), m.cols());
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn min_poly_annihilates(m in (1usize..=4).prop_flat_map(|n| matrix(n, n))) {
        let p = min_poly(&m);
        prop_assert!(p.is_monic());
        prop_assert!(p.eval_matrix(&m).is_zero());
    }

    #[test]
    fn weyl_dim_conjugation_symmetry(n in 3usize..=8, seed in proptest::collection::vec(0u32..=4, 7)) {
        let mut k: Vec<u32> = seed[..n - 1].to_vec();
        // keep Σk ≤ 4
        let mut budget = 4u32;
        for x in &mut k {
            *x = (*x).min(budget);
            budget -= *x;
        }
        let w = DominantWeight::new(n, k.clone()).unwrap();
        let mut rev = k.clone();
        rev.reverse();
        prop_assert_eq!(weyl_dim(&w), weyl_dim(&DominantWeight::new(n, rev).unwrap()));
        prop_assert_eq!(weyl_dim(&w), weyl_dim(&w.conjugate()));
        for i in 0..n - 1 {
            let mut bigger = k.clone();
            bigger[i] += 1;
            prop_assert!(weyl_dim(&DominantWeight::new(n, bigger).unwrap()) > weyl_dim(&w));
        }
    }

    #[test]
    fn killing_form_is_ad_invariant(
        (p, qq) in prop_oneof![Just((1usize, 2usize)), Just((2, 1)), Just((1, 3)), Just((2, 2))],
        x in proptest::collection::vec(small_rational(), 15),
        y in proptest::collection::vec(small_rational(), 15),
        z in proptest::collection::vec(small_rational(), 15),
    ) {
        let g = unitary_algebra(p, qq, true).unwrap();
        let d = g.dim();
        let (x, y, z) = (&x[..d], &y[..d], &z[..d]);
        let b = killing_form(&g);
        let bf = |u: &[Rational], v: &[Rational]| liekit::liealg::form_value(&b, u, v);
        let lhs = bf(&g.bracket_coords(x, y), z);
        let rhs = bf(x, &g.bracket_coords(y, z));
        prop_assert_eq!(lhs, rhs);
        // Jacobi on the sampled elements
        let j1 = g.bracket_coords(x, &g.bracket_coords(y, z));
        let j2 = g.bracket_coords(y, &g.bracket_coords(z, x));
        let j3 = g.bracket_coords(z, &g.bracket_coords(x, y));
        for i in 0..d {
            prop_assert_eq!(&j1[i] + &j2[i] + &j3[i], qi(0));
        }
    }
}

fn check_algebra(g: &MatrixLieAlgebra) {
    assert_eq!(g.check_structure_constants(), None, "{}", g.name());
    assert_eq!(g.check_antisymmetry(), None, "{}", g.name());
    assert_eq!(g.check_jacobi(), None, "{}", g.name());
    assert_eq!(g.check_defining_relation(), None, "{}", g.name());
}

#[test]
fn jacobi_on_all_basis_triples() {
    for (p, qq) in [(1, 2), (2, 2), (1, 3), (2, 3)] {
        for traceless in [true, false] {
            check_algebra(&unitary_algebra(p, qq, traceless).unwrap());
        }
        check_algebra(&orthogonal_algebra(&gram_phi(p, qq)).unwrap());
    }
    check_algebra(&orthogonal_algebra(&gram_psi2(1, 2)).unwrap());
}

#[test]
fn killing_ad_invariance_on_basis() {
    for g in [unitary_algebra(1, 2, true).unwrap(), orthogonal_algebra(&gram_phi(1, 2)).unwrap()] {
        let b = killing_form(&g);
        for i in 0..g.dim() {
            let a = g.ad(i);
            assert!(a.transpose().mul(&b).add(&b.mul(a)).is_zero(), "{} X{i}", g.name());
        }
    }
}

#[test]
fn functors_preserve_brackets() {
    let c = defining_rep(1, 2).unwrap();
    let c22 = defining_rep(2, 2).unwrap();
    let g = c.algebra().clone();
    let complex = vec![
        c.clone(),
        dual_rep(&c),
        conjugate_rep(&c),
        wedge2_rep(&c).unwrap(),
        wedge_power(&c22, 3).unwrap(),
        tensor_rep(&c, &conjugate_rep(&c)).unwrap(),
        complexify(&realify(&c)),
    ];
    for r in &complex {
        assert_eq!(r.check_bracket_compatibility(), None, "{}", r.name());
    }
    let phi = embed_phi(1, 2).unwrap();
    let real = vec![
        realify(&c),
        adjoint_rep(&g),
        wedge2_rep(&realify(&c)).unwrap(),
        dual_rep(&adjoint_rep(&g)),
        restrict(&adjoint_rep(phi.target()), &phi).unwrap(),
        restrict(&adjoint_rep(embed_psi(1, 2, PsiVariant::Second).unwrap().target()), &embed_psi(1, 2, PsiVariant::Second).unwrap())
            .unwrap(),
    ];
    for r in &real {
        assert_eq!(r.check_bracket_compatibility(), None, "{}", r.name());
    }
}

/// Every dominant weight with `weyl_dim ≤ max_dim`, found without pruning on
/// dimensions: the simple roots contribute factors `1 + kᵢ` to the Weyl
/// product and all other factors are at least 1, so `Π(1 + kᵢ) ≤ max_dim`
/// bounds the search box.
fn brute_force(n: usize, max_dim: u128) -> Vec<(DominantWeight, u128)> {
    fn boxes(len: usize, budget: u128, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let mut k = 0u32;
        while (k as u128 + 1) <= budget {
            prefix.push(k);
            boxes(len, budget / (k as u128 + 1), prefix, out);
            prefix.pop();
            k += 1;
        }
    }
    let mut all = Vec::new();
    boxes(n - 1, max_dim, &mut Vec::new(), &mut all);
    let mut out: Vec<(DominantWeight, u128)> = all
        .into_iter()
        .map(|k| DominantWeight::new(n, k).unwrap())
        .map(|w| {
            let d = weyl_dim(&w);
            (w, d)
        })
        .filter(|(_, d)| *d <= max_dim)
        .collect();
    out.sort();
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 3..=6 {
        for max_dim in [1u128, 4, 6, 10, 20, 30] {
            assert_eq!(enumerate_dominant(n, max_dim).unwrap(), brute_force(n, max_dim), "n={n} max_dim={max_dim}");
        }
    }
}
