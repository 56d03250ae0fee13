//! Known values, hard-coded.

use liekit::decompose::{lowest_dim_modules, real_isotypic, real_type, symmetric_pair_check, RealKind};
use liekit::liealg::{embed_phi, embed_psi, embed_u_in_su, unitary_algebra, PsiVariant, UnitarySide};
use liekit::repkit::{adjoint_rep, defining_rep, highest_weight_module, realify, restrict, wedge2_rep};
use liekit::weights::{weyl_dim, DominantWeight};

fn dw(n: usize, terms: &[(usize, u32)]) -> DominantWeight {
    DominantWeight::from_terms(n, terms).unwrap()
}

fn sorted(v: Vec<&str>) -> Vec<String> {
    let mut v: Vec<String> = v.into_iter().map(String::from).collect();
    v.sort();
    v
}

#[test]
fn rank_four_second_power_dimensions() {
    let got: Vec<u128> = (0..=5).map(|k| weyl_dim(&dw(4, &[(2, k)]))).collect();
    assert_eq!(got, [1, 6, 20, 50, 105, 196]);
    assert_eq!(weyl_dim(&dw(6, &[(3, 1)])), 20);
    assert_eq!(weyl_dim(&dw(8, &[(4, 1)])), 70);
    assert_eq!(weyl_dim(&dw(6, &[(2, 1), (4, 1)])), 189);
}

#[test]
fn lowest_modules_in_small_signatures() {
    let r = lowest_dim_modules(1, 2).unwrap();
    let got: Vec<(String, Option<RealKind>, u128)> = r.modules.iter().map(|m| (m.weight.to_string(), m.kind, m.real_dim)).collect();
    assert_eq!(got, [("w1".to_string(), Some(RealKind::Complex), 6)]);
    let r = lowest_dim_modules(2, 2).unwrap();
    let mut dims: Vec<u128> = r.modules.iter().map(|m| m.real_dim).collect();
    dims.sort();
    assert_eq!(dims, [6, 8]);
}

#[test]
fn second_exterior_power_of_c4_type() {
    for ((p, q), kind, real_dim) in [((2, 2), RealKind::Real, 6), ((1, 3), RealKind::Quaternionic, 12)] {
        let g = unitary_algebra(p, q, true).unwrap();
        let v = real_type(&highest_weight_module(&g, &dw(4, &[(2, 1)])).unwrap()).unwrap();
        assert_eq!((v.kind, v.real_dim), (kind, real_dim), "({p},{q})");
    }
}

#[test]
fn so_2_4_under_u_1_2() {
    let phi = embed_phi(1, 2).unwrap();
    let d = real_isotypic(&restrict(&adjoint_rep(phi.target()), &phi).unwrap()).unwrap();
    assert_eq!(d.sorted_dims(), [1, 6, 8]);
    let mut labels: Vec<String> = d.labels().into_iter().map(String::from).collect();
    labels.sort();
    assert_eq!(labels, sorted(vec!["R", "su(1,2)", "(Λ²C^3)_R"]));
}

#[test]
fn so_2_5_and_so_3_4_under_u_1_2() {
    for v in [PsiVariant::First, PsiVariant::Second] {
        let psi = embed_psi(1, 2, v).unwrap();
        let d = real_isotypic(&restrict(&adjoint_rep(psi.target()), &psi).unwrap()).unwrap();
        assert_eq!(d.sorted_dims(), [1, 6, 6, 8]);
        let mut labels: Vec<String> = d.labels().into_iter().map(String::from).collect();
        labels.sort();
        assert_eq!(labels, sorted(vec!["R", "su(1,2)", "(Λ²C^3)_R", "C^{1,2}_R"]));
    }
}

#[test]
fn wedge_square_of_c_2_3() {
    let w = wedge2_rep(&realify(&defining_rep(2, 3).unwrap())).unwrap();
    assert_eq!(real_isotypic(&w).unwrap().sorted_dims(), [1, 20, 24]);
}

#[test]
fn unitary_pairs_in_rank_three() {
    for (side, g) in [(UnitarySide::ExtraNegative, "su(1,3)"), (UnitarySide::ExtraPositive, "su(2,2)")] {
        let r = symmetric_pair_check(&embed_u_in_su(1, 2, side).unwrap()).unwrap();
        assert!(r.is_symmetric_pair());
        assert_eq!(r.g, g);
        assert_eq!(r.m_dim(), 6);
        assert_eq!(r.m_label, "C^{1,2}_R");
        let s = r.killing_signature_m;
        assert_eq!((s.plus.min(s.minus), s.plus.max(s.minus), s.zero), (2, 4, 0));
    }
}

#[test]
fn so_2_4_complement() {
    let r = symmetric_pair_check(&embed_phi(1, 2).unwrap()).unwrap();
    assert!(r.is_symmetric_pair());
    assert_eq!((r.g_dim, r.h_dim, r.m_dim()), (15, 9, 6));
    assert_eq!(r.m_label, "(Λ²C^3)_R");
}
