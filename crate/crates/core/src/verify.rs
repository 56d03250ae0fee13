//! The check catalog: named verifications over parameter ranges, with
//! reports in a stable text or JSON form.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::decompose::{
    bracket_image, commutant, complex_isotypic, invariant_bilinear_forms, isomorphism, lowest_dim_modules, real_isotypic,
    real_type, symmetric_pair_check, wedge_so_isomorphism, IsotypicDecomposition, RealKind, SymmetricPairReport,
};
use crate::error::{Error, Result};
use crate::exactlin::{signature, Rational, Signature};
use crate::liealg::{
    embed_phi, embed_psi, embed_u_in_su, gram_phi, killing_form, so_block_inclusion, unitary_algebra, Embedding,
    MatrixLieAlgebra, PsiVariant, UnitarySide,
};
use crate::repkit::{adjoint_rep, complexify, defining_rep_of, highest_weight_module, realify, restrict, wedge2_rep};
use crate::weights::{enumerate_dominant, fundamental_weight, rho, weyl_dim, DominantWeight, WeightVector};

pub const SCHEMA_VERSION: u32 = 1;

/// Largest `n` in the default ranges of the `n`-indexed checks.
pub const DEFAULT_MAX_N: usize = 8;
/// Largest `p + q` in the default ranges of the `(p, q)`-indexed checks.
pub const DEFAULT_MAX_PQ: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckId {
    LemmaA1,
    LemmaA2,
    Claim1,
    DimsTable,
    LemmaPhi,
    LemmaPsi,
    LemmaWedgeSo,
    LemmaWedgeCpq,
    BracketsPhi,
    BracketsPsi,
    SymmetricPairs,
    KillingSignature,
}

/// What a check is indexed by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Rank,
    Signature,
}

impl CheckId {
    /// Catalog order.
    pub const ALL: [CheckId; 12] = [
        CheckId::LemmaA1,
        CheckId::LemmaA2,
        CheckId::Claim1,
        CheckId::DimsTable,
        CheckId::LemmaPhi,
        CheckId::LemmaPsi,
        CheckId::LemmaWedgeSo,
        CheckId::LemmaWedgeCpq,
        CheckId::BracketsPhi,
        CheckId::BracketsPsi,
        CheckId::SymmetricPairs,
        CheckId::KillingSignature,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::LemmaA1 => "lemma-a1",
            CheckId::LemmaA2 => "lemma-a2",
            CheckId::Claim1 => "claim-1",
            CheckId::DimsTable => "dims-table",
            CheckId::LemmaPhi => "lemma-phi",
            CheckId::LemmaPsi => "lemma-psi",
            CheckId::LemmaWedgeSo => "lemma-wedge-so",
            CheckId::LemmaWedgeCpq => "lemma-wedge-cpq",
            CheckId::BracketsPhi => "brackets-phi",
            CheckId::BracketsPsi => "brackets-psi",
            CheckId::SymmetricPairs => "symmetric-pairs",
            CheckId::KillingSignature => "killing-signature",
        }
    }

    pub fn param_kind(self) -> ParamKind {
        match self {
            CheckId::Claim1 | CheckId::DimsTable => ParamKind::Rank,
            _ => ParamKind::Signature,
        }
    }

    /// One-line description of what the check establishes.
    pub fn summary(self) -> &'static str {
        match self {
            CheckId::LemmaA1 => "lowest dimensional non-trivial irreducible real su(p,q)-modules",
            CheckId::LemmaA2 => "invariant bilinear forms on C^{p,q}_R",
            CheckId::Claim1 => "dimension bounds for the self-conjugate generators",
            CheckId::DimsTable => "Weyl dimension table",
            CheckId::LemmaPhi => "so(2p,2q) as an su(p,q)-module",
            CheckId::LemmaPsi => "so(2p,2q+1) and so(2p+1,2q) as su(p,q)-modules",
            CheckId::LemmaWedgeSo => "wedge^2 E is isomorphic to so(E)",
            CheckId::LemmaWedgeCpq => "wedge^2 C^{p,q}_R as an su(p,q)-module",
            CheckId::BracketsPhi => "bracket table of so(2p,2q)",
            CheckId::BracketsPsi => "bracket tables of so(2p,2q+1) and so(2p+1,2q)",
            CheckId::SymmetricPairs => "symmetric pairs containing u(p,q)",
            CheckId::KillingSignature => "structure constants and Killing form signatures",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Params {
    Rank { n: usize },
    Signature { p: usize, q: usize },
}

impl Params {
    pub fn n(self) -> usize {
        match self {
            Params::Rank { n } => n,
            Params::Signature { p, q } => p + q,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Rank { n } => write!(f, "n={n}"),
            Params::Signature { p, q } => write!(f, "p={p} q={q}"),
        }
    }
}

/// A check together with valid parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckSpec {
    pub id: CheckId,
    pub params: Params,
}

impl CheckSpec {
    pub fn new(id: CheckId, params: Params) -> Result<Self> {
        match (id.param_kind(), params) {
            (ParamKind::Rank, Params::Rank { n }) if n >= 3 => {}
            (ParamKind::Signature, Params::Signature { p, q }) if p >= 1 && q >= 1 && p + q >= 3 => {}
            (ParamKind::Rank, _) => {
                return Err(Error::InvalidParameters(format!("{id} takes n ≥ 3, got {params}")));
            }
            (ParamKind::Signature, _) => {
                return Err(Error::InvalidParameters(format!("{id} takes p, q ≥ 1 with p + q ≥ 3, got {params}")));
            }
        }
        Ok(Self { id, params })
    }

    pub fn rank(id: CheckId, n: usize) -> Result<Self> {
        Self::new(id, Params::Rank { n })
    }

    pub fn pq(id: CheckId, p: usize, q: usize) -> Result<Self> {
        Self::new(id, Params::Signature { p, q })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One claim of a check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub witness: Option<String>,
    pub ok: bool,
}

impl Detail {
    /// Compares the string renderings, which are exact for every value
    /// produced in this module.
    pub fn compare(claim: impl Into<String>, expected: impl ToString, computed: impl ToString) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let ok = expected == computed;
        Self {
            claim: claim.into(),
            witness: (!ok).then(|| format!("expected {expected}, computed {computed}")),
            expected,
            computed,
            ok,
        }
    }

    /// A boolean property; the witness, if given, is kept only on failure.
    pub fn holds(claim: impl Into<String>, ok: bool, witness: Option<String>) -> Self {
        Self {
            claim: claim.into(),
            expected: "true".into(),
            computed: ok.to_string(),
            witness: if ok { None } else { witness.or_else(|| Some("property does not hold".into())) },
            ok,
        }
    }

    fn error(claim: impl Into<String>, e: &Error) -> Self {
        Self {
            claim: claim.into(),
            expected: "computation succeeds".into(),
            computed: "error".into(),
            witness: Some(e.to_string()),
            ok: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Params,
    pub status: Status,
    /// Present when the check verifies a weakened statement.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub details: Vec<Detail>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.ok)
    }
}

/// Replacement algebras used in place of the constructed ones; lets tests
/// feed deliberately corrupted structure constants through the catalog.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub su: Option<Arc<MatrixLieAlgebra>>,
}

impl Overrides {
    fn su(&self, p: usize, q: usize) -> Result<Arc<MatrixLieAlgebra>> {
        if let Some(g) = &self.su {
            if g.name() == format!("su({p},{q})") {
                return Ok(g.clone());
            }
        }
        unitary_algebra(p, q, true)
    }
}

/// Caveat attached to `(2,2)`, where the `(Λ²C^4)_R` summand splits.
pub const CAVEAT_2_2: &str =
    "(p,q) = (2,2): the last summand is not irreducible; verifying the weakened claim with (Λ²C^4)_R split into two 6-dimensional summands";

fn is_2_2(p: usize, q: usize) -> bool {
    p == 2 && q == 2
}

pub fn run_check(spec: &CheckSpec) -> VerificationReport {
    run_check_with(spec, &Overrides::default(), false)
}

/// Runs one check. `timed` records wall time; otherwise `elapsed_ms` is 0
/// so that reports are reproducible byte for byte.
pub fn run_check_with(spec: &CheckSpec, ov: &Overrides, timed: bool) -> VerificationReport {
    let start = Instant::now();
    let mut note = None;
    let details = match (spec.id, spec.params) {
        (CheckId::DimsTable, Params::Rank { n }) => dims_table(n),
        (CheckId::Claim1, Params::Rank { n }) => claim_1(n),
        (id, Params::Signature { p, q }) => {
            if is_2_2(p, q) && matches!(id, CheckId::LemmaPhi | CheckId::LemmaPsi | CheckId::LemmaWedgeCpq | CheckId::BracketsPhi | CheckId::BracketsPsi) {
                note = Some(CAVEAT_2_2.to_string());
            }
            match id {
                CheckId::LemmaA1 => lemma_a1(p, q),
                CheckId::LemmaA2 => lemma_a2(p, q, ov),
                CheckId::LemmaPhi => lemma_phi(p, q),
                CheckId::LemmaPsi => lemma_psi(p, q),
                CheckId::LemmaWedgeSo => lemma_wedge_so(p, q),
                CheckId::LemmaWedgeCpq => lemma_wedge_cpq(p, q),
                CheckId::BracketsPhi => brackets_phi(p, q),
                CheckId::BracketsPsi => brackets_psi(p, q),
                CheckId::SymmetricPairs => symmetric_pairs(p, q),
                CheckId::KillingSignature => killing_signature(p, q, ov),
                CheckId::DimsTable | CheckId::Claim1 => unreachable!("validated by CheckSpec::new"),
            }
        }
        (_, Params::Rank { .. }) => unreachable!("validated by CheckSpec::new"),
    };
    let status = if !details.is_empty() && details.iter().all(|d| d.ok) { Status::Pass } else { Status::Fail };
    VerificationReport {
        check: spec.id.as_str().to_string(),
        params: spec.params,
        status,
        note,
        details,
        elapsed_ms: if timed { start.elapsed().as_millis() as u64 } else { 0 },
    }
}

/// Parameter ranges for [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranges {
    pub ranks: Vec<usize>,
    pub signatures: Vec<(usize, usize)>,
}

impl Ranges {
    /// `n = 3..=max_n` and every `(p, q)` with `1 ≤ p ≤ q` and
    /// `3 ≤ p + q ≤ max_pq`.
    pub fn up_to(max_n: usize, max_pq: usize) -> Self {
        let ranks = (3..=max_n).collect();
        let mut signatures = Vec::new();
        for n in 3..=max_pq {
            for p in 1..=n / 2 {
                signatures.push((p, n - p));
            }
        }
        Self { ranks, signatures }
    }

    pub fn empty() -> Self {
        Self {
            ranks: Vec::new(),
            signatures: Vec::new(),
        }
    }

    pub fn specs(&self, ids: &[CheckId]) -> Result<Vec<CheckSpec>> {
        let mut out = Vec::new();
        for &id in ids {
            match id.param_kind() {
                ParamKind::Rank => {
                    for &n in &self.ranks {
                        out.push(CheckSpec::rank(id, n)?);
                    }
                }
                ParamKind::Signature => {
                    for &(p, q) in &self.signatures {
                        out.push(CheckSpec::pq(id, p, q)?);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl Default for Ranges {
    fn default() -> Self {
        Self::up_to(DEFAULT_MAX_N, DEFAULT_MAX_PQ)
    }
}

/// Runs the given specs in parallel; output is in catalog order, then
/// parameter order.
pub fn run_specs(specs: &[CheckSpec], ov: &Overrides, timed: bool) -> Vec<VerificationReport> {
    let mut specs = specs.to_vec();
    specs.sort();
    specs.dedup();
    specs.par_iter().map(|s| run_check_with(s, ov, timed)).collect()
}

/// Every catalog check over `ranges`.
pub fn run_all(ranges: &Ranges) -> Result<Vec<VerificationReport>> {
    Ok(run_specs(&ranges.specs(&CheckId::ALL)?, &Overrides::default(), false))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let passed = reports.iter().filter(|r| r.passed()).count();
        Self {
            total: reports.len(),
            passed,
            failed: reports.len() - passed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    reports: &'a [VerificationReport],
}

/// JSON document for a list of reports.
pub fn reports_json(reports: &[VerificationReport]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope {
        schema_version: SCHEMA_VERSION,
        reports,
    })?;
    s.push('\n');
    Ok(s)
}

/// Line-oriented rendering: a status line per report, one line per claim.
pub fn reports_text(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s.push_str(&format!("[{}] {} {}\n", r.status.as_str().to_uppercase(), r.check, r.params));
        if let Some(n) = &r.note {
            s.push_str(&format!("  note: {n}\n"));
        }
        for d in &r.details {
            let mark = if d.ok { '✓' } else { '✗' };
            s.push_str(&format!("  {mark} {}: expected {}, computed {}\n", d.claim, d.expected, d.computed));
            if let Some(w) = &d.witness {
                s.push_str(&format!("    witness: {w}\n"));
            }
        }
        if r.elapsed_ms > 0 {
            s.push_str(&format!("  elapsed: {} ms\n", r.elapsed_ms));
        }
    }
    let sum = Summary::of(reports);
    s.push_str(&format!("{} checks, {} passed, {} failed\n", sum.total, sum.passed, sum.failed));
    s
}

pub fn emit_report(reports: &[VerificationReport], format: Format, out: &mut dyn Write) -> Result<()> {
    let s = match format {
        Format::Text => reports_text(reports),
        Format::Json => reports_json(reports)?,
    };
    out.write_all(s.as_bytes())?;
    out.flush()?;
    Ok(())
}

// ---------------------------------------------------------------------------
// helpers

fn try_details(claim: &str, f: impl FnOnce() -> Result<Vec<Detail>>) -> Vec<Detail> {
    f().unwrap_or_else(|e| vec![Detail::error(claim, &e)])
}

fn list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(", "))
}

fn sorted_labels<T: crate::exactlin::Scalar>(d: &IsotypicDecomposition<T>) -> String {
    let mut l = d.labels();
    l.sort_unstable();
    list(l)
}

fn expected_labels(p: usize, q: usize, extra: &[String]) -> String {
    let n = p + q;
    let w = format!("(Λ²C^{n})_R");
    let mut l = vec!["R".to_string(), format!("su({p},{q})"), w.clone()];
    if is_2_2(p, q) {
        l.push(w);
    }
    l.extend(extra.iter().cloned());
    l.sort_unstable();
    list(l)
}

/// Sorted real dimensions `{n²−1, 1, n(n−1)}` (with the split for (2,2)),
/// plus any extra summands.
fn expected_dims(p: usize, q: usize, extra: &[usize]) -> String {
    let n = p + q;
    let mut d = vec![n * n - 1, 1];
    if is_2_2(p, q) {
        d.extend([6, 6]);
    } else {
        d.push(n * (n - 1));
    }
    d.extend_from_slice(extra);
    d.sort_unstable();
    list(d)
}

fn decomposition_details<T: crate::exactlin::Scalar>(
    what: &str,
    d: &IsotypicDecomposition<T>,
    r: &crate::repkit::Representation<T>,
    p: usize,
    q: usize,
    extra_dims: &[usize],
    extra_labels: Option<&[String]>,
) -> Vec<Detail> {
    let mut out = vec![
        Detail::compare(format!("{what}: module dimension"), d.module_dim, r.dim()),
        Detail::compare(format!("{what}: summand dimensions"), expected_dims(p, q, extra_dims), list(d.sorted_dims())),
    ];
    if let Some(extra) = extra_labels {
        out.push(Detail::compare(format!("{what}: summand labels"), expected_labels(p, q, extra), sorted_labels(d)));
    }
    out.extend([
        Detail::holds(format!("{what}: summands span the module"), d.spans_module(), None),
        Detail::holds(format!("{what}: summands are invariant"), d.components_invariant(r), None),
        Detail::holds(format!("{what}: projections sum to the identity"), d.projections_sum_to_identity(), None),
    ]);
    out
}

// ---------------------------------------------------------------------------
// rank-indexed checks

fn dw(n: usize, terms: &[(usize, u32)]) -> Result<DominantWeight> {
    DominantWeight::from_terms(n, terms)
}

fn dims_table(n: usize) -> Vec<Detail> {
    try_details("dimension table", || {
        let mut out = vec![
            Detail::compare("dim W^0", 1, weyl_dim(&DominantWeight::zero(n)?)),
            Detail::compare("dim W^{w1}", n, weyl_dim(&dw(n, &[(1, 1)])?)),
            Detail::compare(format!("dim W^{{w{}}}", n - 1), n, weyl_dim(&dw(n, &[(n - 1, 1)])?)),
            Detail::compare(format!("dim W^{{w1+w{}}}", n - 1), n * n - 1, weyl_dim(&dw(n, &[(1, 1), (n - 1, 1)])?)),
        ];
        // the binomial formula for all fundamental weights
        for i in 1..n {
            out.push(Detail::compare(format!("dim W^{{w{i}}} = C({n},{i})"), binomial(n, i), weyl_dim(&dw(n, &[(i, 1)])?)));
        }
        let sum = (1..n).try_fold(WeightVector::zero(n), |acc, i| fundamental_weight(n, i).map(|w| acc.add(&w)))?;
        out.push(Detail::compare("rho = sum of fundamental weights", list(rho(n)?.coords()), list(sum.coords())));
        if n == 4 {
            for k in 0..=5u32 {
                let k1 = k as u128 + 1;
                let expected = k1 * (k1 + 1) * (k1 + 1) * (k1 + 2) / 12;
                out.push(Detail::compare(
                    format!("dim W^{{{k}w2}} = (k+1)(k+2)²(k+3)/12"),
                    expected,
                    weyl_dim(&dw(4, &[(2, k)])?),
                ));
            }
        }
        if n == 6 {
            out.push(Detail::compare("dim W^{w3}", 20, weyl_dim(&dw(6, &[(3, 1)])?)));
        }
        if n == 8 {
            out.push(Detail::compare("dim W^{w4}", 70, weyl_dim(&dw(8, &[(4, 1)])?)));
        }
        let smallest = enumerate_dominant(n, (n - 1) as u128)?;
        out.push(Detail::compare(
            format!("weights of dimension at most {}", n - 1),
            "[0]",
            list(smallest.iter().map(|(w, _)| w)),
        ));
        Ok(out)
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn claim_1(n: usize) -> Vec<Detail> {
    try_details("dimension bounds", || {
        let mut out = Vec::new();
        let adjoint = weyl_dim(&dw(n, &[(1, 1), (n - 1, 1)])?);
        if n == 4 {
            let d = weyl_dim(&dw(4, &[(2, 1)])?);
            out.push(Detail::compare("n = 4 is excluded: dim W^{w2}", 6, d));
            out.push(Detail::holds(
                "n = 4 is excluded: dim W^{w2} ≤ 2n+1",
                d <= 9,
                Some(format!("dim W^{{w2}} = {d} > 9")),
            ));
            return Ok(out);
        }
        for i in 1..n {
            if 2 * i >= n {
                break;
            }
            let d = weyl_dim(&dw(n, &[(i, 1), (n - i, 1)])?);
            out.push(Detail::holds(
                format!("dim W^{{w{i}+w{}}} ≥ dim W^{{w1+w{}}} = {adjoint}", n - i, n - 1),
                d >= adjoint,
                Some(format!("dim W^{{w{i}+w{}}} = {d}", n - i)),
            ));
        }
        if n.is_multiple_of(2) {
            let m = n / 2;
            let d = weyl_dim(&dw(n, &[(m, 1)])?);
            out.push(Detail::holds(
                format!("dim W^{{w{m}}} > 2n+1 = {}", 2 * n + 1),
                d > (2 * n + 1) as u128,
                Some(format!("dim W^{{w{m}}} = {d}")),
            ));
        }
        Ok(out)
    })
}

// ---------------------------------------------------------------------------
// (p, q)-indexed checks

fn lemma_a1(p: usize, q: usize) -> Vec<Detail> {
    try_details("lowest dimensional modules", || {
        let n = p + q;
        let r = lowest_dim_modules(p, q)?;
        let render = |w: &DominantWeight, kind: RealKind, dim: u128| format!("{w} {kind} dim {dim}");
        let mut expected = vec![render(&DominantWeight::fundamental(n, 1)?, RealKind::Complex, 2 * n as u128)];
        if is_2_2(p, q) {
            expected.push(render(&DominantWeight::fundamental(4, 2)?, RealKind::Real, 6));
        }
        expected.sort();
        let mut computed: Vec<String> = r
            .modules
            .iter()
            .map(|m| render(&m.weight, m.kind.expect("listed modules are classified"), m.real_dim))
            .collect();
        computed.sort();
        let mut out = vec![
            Detail::compare("bound 2n+1", 2 * n + 1, r.bound),
            Detail::compare(
                format!("non-trivial irreducible real modules of dimension ≤ {}", 2 * n + 1),
                list(expected),
                list(computed),
            ),
            Detail::compare("real type of C^{p,q}", RealKind::Complex, r.defining_kind),
        ];
        let unresolved: Vec<String> = r
            .candidates
            .iter()
            .filter(|c| c.kind.is_none() && c.real_dim <= r.bound)
            .map(|c| c.weight.to_string())
            .collect();
        out.push(Detail::compare("candidates left unclassified below the bound", "[]", list(unresolved)));
        if n == 4 {
            let g = unitary_algebra(p, q, true)?;
            let v = real_type(&highest_weight_module(&g, &DominantWeight::fundamental(4, 2)?)?)?;
            let (kind, dim) = if is_2_2(p, q) { (RealKind::Real, 6) } else { (RealKind::Quaternionic, 12) };
            out.push(Detail::compare("real type of Λ²C^4", kind, v.kind));
            out.push(Detail::compare("real dimension of the irreducible real module from Λ²C^4", dim, v.real_dim));
        }
        Ok(out)
    })
}

fn lemma_a2(p: usize, q: usize, ov: &Overrides) -> Vec<Detail> {
    try_details("invariant forms", || {
        let g = ov.su(p, q)?;
        let v = realify(&defining_rep_of(&g));
        let f = invariant_bilinear_forms(&v)?;
        let mut out = vec![
            Detail::compare("dimension of the space of invariant forms", 2, f.dim()),
            Detail::compare("symmetric invariant forms", 1, f.symmetric.len()),
            Detail::compare("antisymmetric invariant forms", 1, f.antisymmetric.len()),
            Detail::holds("every basis form is invariant", f.check_invariance(&v), None),
            Detail::compare("commutant dimension", 2, commutant(&v).len()),
        ];
        if let (Some(s), Some(sig)) = (f.symmetric.first(), f.signatures.first()) {
            out.push(Detail::compare("signature of the symmetric form", Signature::new(2 * p, 2 * q, 0), sig));
            out.push(Detail::holds(
                "symmetric form is diag(I_{p,q}, I_{p,q})",
                *s == gram_phi(p, q),
                Some("normalized symmetric generator differs from diag(I_{p,q}, I_{p,q})".into()),
            ));
        }
        if let Some(a) = f.antisymmetric.first() {
            out.push(Detail::compare("rank of the antisymmetric form", 2 * (p + q), crate::exactlin::rank(a)));
        }
        Ok(out)
    })
}

fn adjoint_restricted(e: &Embedding) -> Result<crate::repkit::RealRep> {
    restrict(&adjoint_rep(e.target()), e)
}

fn lemma_phi(p: usize, q: usize) -> Vec<Detail> {
    try_details("decomposition under phi", || {
        let n = p + q;
        let phi = embed_phi(p, q)?;
        let m = adjoint_restricted(&phi)?;
        let d = real_isotypic(&m)?;
        let what = format!("{} under u({p},{q})", phi.target().name());
        let mut out = decomposition_details(&what, &d, &m, p, q, &[], Some(&[]));
        let cd = complex_isotypic(&complexify(&m))?;
        let half = n * (n - 1) / 2;
        let mut expected = vec![1, n * n - 1, half, half];
        expected.sort_unstable();
        out.push(Detail::compare("complexified summand dimensions", list(expected), list(cd.sorted_dims())));
        Ok(out)
    })
}

fn lemma_psi(p: usize, q: usize) -> Vec<Detail> {
    try_details("decomposition under psi", || {
        let n = p + q;
        let mut out = Vec::new();
        let phi = embed_phi(p, q)?;
        for v in [PsiVariant::First, PsiVariant::Second] {
            let psi = embed_psi(p, q, v)?;
            let composite = phi.then(&so_block_inclusion(p, q, v)?)?;
            out.push(Detail::holds(
                format!("psi{} is phi followed by the block inclusion", v.index()),
                psi.agrees_with(&composite),
                None,
            ));
            let m = adjoint_restricted(&psi)?;
            let d = real_isotypic(&m)?;
            let what = format!("{} under psi{}", psi.target().name(), v.index());
            out.extend(decomposition_details(&what, &d, &m, p, q, &[2 * n], Some(&[format!("C^{{{p},{q}}}_R")])));
        }
        Ok(out)
    })
}

fn lemma_wedge_so(p: usize, q: usize) -> Vec<Detail> {
    try_details("wedge^2 E and so(E)", || {
        let n = p + q;
        let r = wedge_so_isomorphism(&gram_phi(p, q))?;
        let d = n * (2 * n - 1);
        Ok(vec![
            Detail::compare("dim Λ²E", d, r.wedge_dim),
            Detail::compare("dim so(E)", d, r.so_dim),
            Detail::holds("the map is bijective", r.bijective, None),
            Detail::holds("the map is so(E)-equivariant", r.equivariance_failure.is_none(), r.equivariance_failure.clone()),
        ])
    })
}

fn lemma_wedge_cpq(p: usize, q: usize) -> Vec<Detail> {
    try_details("wedge^2 C^{p,q}_R", || {
        let n = p + q;
        let g = unitary_algebra(p, q, true)?;
        let w = wedge2_rep(&realify(&defining_rep_of(&g)))?;
        let d = real_isotypic(&w)?;
        let mut out = decomposition_details("Λ²C^{p,q}_R", &d, &w, p, q, &[], None);
        let su = format!("su({p},{q})");
        let adj = d.indices_with_label(&su);
        out.push(Detail::compare(
            format!("summands labelled {su}"),
            list([n * n - 1]),
            list(adj.iter().map(|&i| d.components[i].dim)),
        ));
        out.push(Detail::compare("trivial summands", 1, d.indices_with_label("R").len()));
        // the rest is compared with an explicitly built (Λ²C^n)_R; for n = 3
        // this is also C^{p,q}_R, so labels alone cannot tell
        let rest: Vec<Vec<Rational>> = d
            .components
            .iter()
            .filter(|c| c.label != su && c.label != "R")
            .flat_map(|c| c.basis.iter().cloned())
            .collect();
        let target = realify(&wedge2_rep(&defining_rep_of(&g))?);
        out.push(Detail::compare("dimension of the remaining summands", target.dim(), rest.len()));
        if rest.len() == target.dim() {
            let sub = w.subrepresentation("remaining summands", &rest)?;
            let iso = isomorphism(&sub, &target)?;
            out.push(Detail::holds(
                format!("remaining summands are isomorphic to (Λ²C^{n})_R"),
                iso.is_some(),
                Some("no invertible intertwiner found".into()),
            ));
        }
        Ok(out)
    })
}

/// Claim `[⊕a, ⊕b] = ⊕target`, checked by projecting every bracket of basis
/// vectors onto the summands.
fn bracket_claim(
    g: &MatrixLieAlgebra,
    d: &IsotypicDecomposition<Rational>,
    names: (&[&str], &[&str], &[&str]),
    prefix: &str,
) -> Result<Detail> {
    let idx = |labels: &[&str]| -> Vec<usize> { labels.iter().flat_map(|l| d.indices_with_label(l)).collect() };
    let (a, b, t) = (idx(names.0), idx(names.1), idx(names.2));
    let img = bracket_image(g, d, &a, &b)?;
    let target: BTreeSet<usize> = t.iter().copied().collect();
    let render = |set: &BTreeSet<usize>| -> String {
        let labels: Vec<&str> = set
            .iter()
            .map(|&k| d.components[k].label.as_str())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let dim: usize = set.iter().map(|&k| d.components[k].dim).sum();
        format!("{} (dim {dim})", if labels.is_empty() { "0".to_string() } else { labels.join(" + ") })
    };
    let claim = format!("{prefix}[{}, {}] = {}", names.0.join(" + "), names.1.join(" + "), names.2.join(" + "));
    let expected = render(&target);
    let computed = if img.fills_hits { render(&img.hits) } else { format!("proper subspace of dim {} in {}", img.image_dim, render(&img.hits)) };
    let mut detail = Detail::compare(claim, expected, computed);
    if a.is_empty() || b.is_empty() || target.is_empty() {
        detail.ok = false;
        detail.witness = Some("a named summand is missing from the decomposition".into());
    }
    Ok(detail)
}

fn brackets_phi(p: usize, q: usize) -> Vec<Detail> {
    try_details("bracket table under phi", || {
        let n = p + q;
        let phi = embed_phi(p, q)?;
        let d = real_isotypic(&adjoint_restricted(&phi)?)?;
        let su = format!("su({p},{q})");
        let w = format!("(Λ²C^{n})_R");
        let g = phi.target();
        Ok(vec![
            bracket_claim(g, &d, (&[&su, "R"], &[&w], &[&w]), "")?,
            bracket_claim(g, &d, (&[&w], &[&w], &[&su, "R"]), "")?,
            bracket_claim(g, &d, (&["R"], &[&w], &[&w]), "")?,
        ])
    })
}

fn brackets_psi(p: usize, q: usize) -> Vec<Detail> {
    try_details("bracket table under psi", || {
        let n = p + q;
        let su = format!("su({p},{q})");
        let w = format!("(Λ²C^{n})_R");
        let c = format!("C^{{{p},{q}}}_R");
        let mut out = Vec::new();
        for v in [PsiVariant::First, PsiVariant::Second] {
            let psi = embed_psi(p, q, v)?;
            let d = real_isotypic(&adjoint_restricted(&psi)?)?;
            let g = psi.target();
            let pre = format!("psi{}: ", v.index());
            out.push(bracket_claim(g, &d, (&[&su, "R", &w], &[&c], &[&c]), &pre)?);
            out.push(bracket_claim(g, &d, (&[&c], &[&c], &[&su, "R", &w]), &pre)?);
            out.push(bracket_claim(g, &d, (&["R"], &[&c], &[&c]), &pre)?);
        }
        Ok(out)
    })
}

fn pair_details(r: &SymmetricPairReport, m_label: &str, m_dim: usize, sig: Option<Signature>) -> Vec<Detail> {
    let name = format!("({}, {})", r.g, r.h);
    let mut out = vec![
        Detail::holds(format!("{name}: [h, m] ⊆ m"), r.h_m_in_m, r.witness.clone()),
        Detail::holds(format!("{name}: [m, m] ⊆ h"), r.m_m_in_h, r.witness.clone()),
        Detail::compare(format!("{name}: dim m"), m_dim, r.m_dim()),
        Detail::compare(format!("{name}: m as an h-module"), m_label, &r.m_label),
        Detail::holds(
            format!("{name}: Killing form non-degenerate on m"),
            r.killing_signature_m.is_nondegenerate(),
            Some(format!("signature {}", r.killing_signature_m)),
        ),
    ];
    if let Some(s) = sig {
        out.push(Detail::holds(
            format!("{name}: Killing signature on m is ±{s}"),
            r.killing_signature_m.equals_up_to_sign(&s),
            Some(format!("signature {}", r.killing_signature_m)),
        ));
    }
    out
}

fn symmetric_pairs(p: usize, q: usize) -> Vec<Detail> {
    try_details("symmetric pairs", || {
        let n = p + q;
        let c = format!("C^{{{p},{q}}}_R");
        let mut out = Vec::new();
        for side in [UnitarySide::ExtraNegative, UnitarySide::ExtraPositive] {
            let r = symmetric_pair_check(&embed_u_in_su(p, q, side)?)?;
            out.extend(pair_details(&r, &c, 2 * n, Some(Signature::new(2 * p, 2 * q, 0))));
        }
        let w = format!("(Λ²C^{n})_R");
        let w_label = if is_2_2(p, q) { format!("{w} + {w}") } else { w };
        let r = symmetric_pair_check(&embed_phi(p, q)?)?;
        out.extend(pair_details(&r, &w_label, n * (n - 1), None));
        let r = symmetric_pair_check(&so_block_inclusion(p, q, PsiVariant::First)?)?;
        out.extend(pair_details(&r, &format!("R^{{{},{}}}", 2 * p, 2 * q), 2 * n, Some(Signature::new(2 * p, 2 * q, 0))));
        Ok(out)
    })
}

fn killing_signature(p: usize, q: usize, ov: &Overrides) -> Vec<Detail> {
    try_details("Killing forms", || {
        let g = ov.su(p, q)?;
        let mut out = vec![
            Detail::holds("structure constants match matrix brackets", g.check_structure_constants().is_none(), g.check_structure_constants()),
            Detail::holds("structure constants are antisymmetric", g.check_antisymmetry().is_none(), g.check_antisymmetry()),
            Detail::holds("Jacobi identity", g.check_jacobi().is_none(), g.check_jacobi()),
        ];
        let b = killing_form(&g);
        let failure = ad_invariance_failure(&g, &b);
        out.push(Detail::holds("Killing form is ad-invariant", failure.is_none(), failure));
        let noncompact = 2 * p * q;
        let compact = p * p + q * q - 1;
        out.push(Detail::compare(format!("Killing signature of su({p},{q})"), Signature::new(noncompact, compact, 0), signature(&b)?));
        out.push(Detail::compare("signature of diag(I_{p,q}, I_{p,q})", Signature::new(2 * p, 2 * q, 0), signature(&gram_phi(p, q))?));
        let phi = embed_phi(p, q)?;
        let bso = killing_form(phi.target());
        let h: Vec<Vec<Rational>> = (0..phi.source().dim()).map(|i| phi.image_coords(i).to_vec()).collect();
        let restricted = signature(&crate::exactlin::restrict_form(&bso, &h))?;
        out.push(Detail::holds(
            format!("Killing form of {} is non-degenerate on u({p},{q})", phi.target().name()),
            restricted.is_nondegenerate(),
            Some(format!("signature {restricted}")),
        ));
        Ok(out)
    })
}

/// First triple with `B([Xi,Xj],Xk) + B(Xj,[Xi,Xk]) ≠ 0`.
fn ad_invariance_failure(g: &MatrixLieAlgebra, b: &crate::exactlin::RealMatrix) -> Option<String> {
    let d = g.dim();
    for i in 0..d {
        let adi = g.ad(i);
        // adᵢᵀ B + B adᵢ = 0 is the same identity for all j, k at once
        let lhs = adi.transpose().mul(b).add(&b.mul(adi));
        if !lhs.is_zero() {
            let ((j, k), _) = lhs.first_nonzero().expect("non-zero matrix");
            return Some(format!("B([X{i},X{j}],X{k}) + B(X{j},[X{i},X{k}]) ≠ 0"));
        }
    }
    None
}
