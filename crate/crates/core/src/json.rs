//! JSON views of the library's results.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`) so that no precision is
//! lost; Gaussian rationals as `[re, im]` pairs of such strings. Weights are
//! coefficient arrays in the fundamental weight basis, or `"trivial"`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::decompose::{BilinearFormSpace, IsotypicDecomposition, LowestDimReport, SymmetricPairReport};
use crate::exactlin::{Gaussian, Matrix, Rational, Signature};
use crate::liealg::MatrixLieAlgebra;
use crate::weights::DominantWeight;

pub const SCHEMA_VERSION: u32 = crate::verify::SCHEMA_VERSION;

/// Exact JSON rendering of a scalar.
pub trait ToJson {
    fn to_json(&self) -> Value;
}

impl ToJson for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl ToJson for Gaussian {
    fn to_json(&self) -> Value {
        json!([self.re.to_string(), self.im.to_string()])
    }
}

pub fn vector<T: ToJson>(v: &[T]) -> Value {
    Value::Array(v.iter().map(ToJson::to_json).collect())
}

/// Row-major array of rows.
pub fn matrix<T: ToJson + crate::exactlin::Scalar>(m: &Matrix<T>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector(m.row(r))).collect())
}

pub fn weight(w: &DominantWeight) -> Value {
    if w.is_zero() {
        Value::String("trivial".into())
    } else {
        json!(w.coeffs())
    }
}

pub fn signature(s: &Signature) -> Value {
    json!({ "plus": s.plus, "minus": s.minus, "zero": s.zero })
}

pub fn decomposition<T: ToJson + crate::exactlin::Scalar>(d: &IsotypicDecomposition<T>) -> Value {
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| {
            json!({
                "label": c.label,
                "fine_label": c.fine_label,
                "highest_weight": weight(&c.highest_weight),
                "conjugate_weight": c.conjugate_weight.as_ref().map(weight),
                "central_charge": c.central_charge,
                "dim": c.dim,
                "multiplicity": c.multiplicity,
                "basis": c.basis.iter().map(|v| vector(v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "module": d.module,
        "algebra": d.algebra,
        "module_dim": d.module_dim,
        "components": components,
        "residual": [],
    })
}

pub fn symmetric_pair(r: &SymmetricPairReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "g": r.g,
        "h": r.h,
        "g_dim": r.g_dim,
        "h_dim": r.h_dim,
        "m_dim": r.m_dim(),
        "h_m_in_m": r.h_m_in_m,
        "m_m_in_h": r.m_m_in_h,
        "symmetric_pair": r.is_symmetric_pair(),
        "witness": r.witness,
        "m_label": r.m_label,
        "m_components": r.m_components.iter().map(|(l, d)| json!({ "label": l, "dim": d })).collect::<Vec<_>>(),
        "killing_signature_m": signature(&r.killing_signature_m),
        "killing_signature_h": signature(&r.killing_signature_h),
        "m_basis": r.m_basis.iter().map(|v| vector(v)).collect::<Vec<_>>(),
    })
}

pub fn forms(f: &BilinearFormSpace) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "dim": f.dim(),
        "all": f.all.iter().map(matrix).collect::<Vec<_>>(),
        "symmetric": f.symmetric.iter().map(matrix).collect::<Vec<_>>(),
        "antisymmetric": f.antisymmetric.iter().map(matrix).collect::<Vec<_>>(),
        "signatures": f.signatures.iter().map(signature).collect::<Vec<_>>(),
    })
}

pub fn lowest_dim(r: &LowestDimReport) -> Value {
    let c = |m: &crate::decompose::CandidateModule| {
        json!({
            "weight": weight(&m.weight),
            "conjugate": weight(&m.conjugate),
            "complex_dim": m.complex_dim as u64,
            "self_conjugate": m.self_conjugate,
            "kind": m.kind.map(|k| k.as_str()),
            "real_dim": m.real_dim as u64,
        })
    };
    json!({
        "schema_version": SCHEMA_VERSION,
        "p": r.p,
        "q": r.q,
        "bound": r.bound as u64,
        "modules": r.modules.iter().map(c).collect::<Vec<_>>(),
        "candidates": r.candidates.iter().map(c).collect::<Vec<_>>(),
        "defining_kind": r.defining_kind.as_str(),
    })
}

/// Name, dimension, matrix size and basis of an algebra.
pub fn algebra(g: &MatrixLieAlgebra) -> Value {
    json!({
        "name": g.name(),
        "dim": g.dim(),
        "size": g.size(),
        "basis": g.basis().iter().map(matrix).collect::<Vec<_>>(),
    })
}

/// Serializes any serde value with a trailing newline.
pub fn to_string_pretty<S: Serialize + ?Sized>(v: &S) -> crate::Result<String> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{gi, q};

    #[test]
    fn scalars_are_exact_strings() {
        assert_eq!(q(-1, 2).to_json(), json!("-1/2"));
        assert_eq!(gi(3, -1).to_json(), json!(["3", "-1"]));
        let w = DominantWeight::new(3, vec![0, 0]).unwrap();
        assert_eq!(weight(&w), json!("trivial"));
        assert_eq!(weight(&DominantWeight::new(3, vec![1, 0]).unwrap()), json!([1, 0]));
    }
}
