use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use liekit::decompose::{invariant_bilinear_forms, real_isotypic, symmetric_pair_check};
use liekit::liealg::{
    embed_phi, embed_psi, embed_u_in_su, so_block_inclusion, unitary_algebra, Embedding, PsiVariant, UnitarySide,
};
use liekit::repkit::{adjoint_rep, defining_rep, realify, restrict, wedge2_rep, RealRep};
use liekit::verify::{self, CheckId, CheckSpec, Format, Overrides, ParamKind, Ranges, Summary};
use liekit::weights::{enumerate_dominant, is_self_conjugate, self_conjugate_generators, weyl_dim, DominantWeight};
use liekit::{json as lj, Error};

/// Exact computations with su(p,q), its real modules and the lemma catalog.
#[derive(Parser, Debug)]
#[command(name = "liekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true)]
    p: Option<usize>,
    #[arg(long, global = true)]
    q: Option<usize>,
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Dimension bound for `enumerate`; largest rank for `all`.
    #[arg(long, global = true)]
    bound: Option<u128>,
    #[arg(long, global = true)]
    json: bool,
    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Record wall time in check reports (makes output non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weyl dimensions of the fundamental and self-conjugate generator weights.
    Dims,
    /// Dominant weights with dimension at most --bound.
    Enumerate,
    /// Real decomposition of a module of su(p,q) or u(p,q).
    Decompose {
        #[arg(long, value_enum, default_value_t = ModuleArg::Phi)]
        module: ModuleArg,
    },
    /// Invariant bilinear forms on a real module.
    Forms {
        #[arg(long, value_enum, default_value_t = FormsArg::Cpq)]
        module: FormsArg,
    },
    /// Symmetric pair checks for the subalgebras around u(p,q).
    Pair {
        #[arg(long, value_enum)]
        which: Option<PairArg>,
    },
    /// Run one catalog check (over the default range unless parameters are given).
    Check { id: String },
    /// Run the whole catalog.
    All,
    /// List the catalog.
    List,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModuleArg {
    /// so(2p,2q) under phi
    Phi,
    /// so(2p,2q+1) under psi1
    Psi1,
    /// so(2p+1,2q) under psi2
    Psi2,
    /// wedge^2 of C^{p,q}_R
    Wedge2,
    /// C^{p,q}_R
    Cpq,
    /// adjoint module of su(p,q)
    Adjoint,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormsArg {
    Cpq,
    Adjoint,
    Wedge2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PairArg {
    /// (su(p,q+1), u(p,q))
    SuQ,
    /// (su(p+1,q), u(p,q))
    SuP,
    /// (so(2p,2q), u(p,q))
    So,
    /// (so(2p,2q+1), so(2p,2q))
    SoBlock,
}

/// Exit status 2: usage or I/O problems.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<io::Error> for Usage {
    fn from(e: io::Error) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(Usage(msg)) = configure_threads() {
        eprintln!("liekit: {msg}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("liekit: {msg}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<(), Usage> {
    let Ok(v) = std::env::var("LIEKIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .map_err(|_| Usage(format!("LIEKIT_THREADS must be a non-negative integer, got `{v}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Usage(e.to_string()))
}

/// Returns whether everything passed.
fn run(cli: &Cli) -> Result<bool, Usage> {
    match &cli.command {
        Command::Check { id } => {
            let id: CheckId = id.parse()?;
            let specs = check_specs(cli, id)?;
            emit_checks(cli, &specs)
        }
        Command::All => {
            let specs = all_specs(cli)?;
            emit_checks(cli, &specs)
        }
        Command::List => {
            let mut s = String::new();
            for id in CheckId::ALL {
                let kind = match id.param_kind() {
                    ParamKind::Rank => "n",
                    ParamKind::Signature => "p,q",
                };
                s.push_str(&format!("{:<18} [{kind}] {}\n", id.as_str(), id.summary()));
            }
            write_out(cli, &s)?;
            Ok(true)
        }
        Command::Dims => {
            let (text, value) = dims(cli)?;
            write_either(cli, text, value)?;
            Ok(true)
        }
        Command::Enumerate => {
            let (text, value) = enumerate(cli)?;
            write_either(cli, text, value)?;
            Ok(true)
        }
        Command::Decompose { module } => decompose(cli, *module),
        Command::Forms { module } => forms(cli, *module),
        Command::Pair { which } => pair(cli, *which),
    }
}

fn pq(cli: &Cli) -> Result<(usize, usize), Usage> {
    match (cli.p, cli.q) {
        (Some(p), Some(q)) if p >= 1 && q >= 1 && p + q >= 3 => Ok((p, q)),
        (Some(p), Some(q)) => Err(Usage(format!("need p, q ≥ 1 and p + q ≥ 3, got ({p}, {q})"))),
        _ => Err(Usage("this command needs --p and --q".into())),
    }
}

fn rank(cli: &Cli) -> Result<Option<usize>, Usage> {
    match cli.n {
        Some(n) if n < 3 => Err(Usage(format!("need n ≥ 3, got {n}"))),
        n => Ok(n),
    }
}

fn check_specs(cli: &Cli, id: CheckId) -> Result<Vec<CheckSpec>, Usage> {
    let specs = match id.param_kind() {
        ParamKind::Rank => match rank(cli)? {
            Some(n) => vec![CheckSpec::rank(id, n)?],
            None => Ranges::default().specs(&[id])?,
        },
        ParamKind::Signature => {
            if cli.p.is_some() || cli.q.is_some() {
                let (p, q) = pq(cli)?;
                vec![CheckSpec::pq(id, p, q)?]
            } else {
                Ranges::default().specs(&[id])?
            }
        }
    };
    Ok(specs)
}

/// `--bound` caps the rank of both kinds of checks; `--n` or `--p --q`
/// pin the parameters of the matching checks.
fn all_specs(cli: &Cli) -> Result<Vec<CheckSpec>, Usage> {
    let max = cli.bound.map(|b| b.min(usize::MAX as u128) as usize);
    let mut ranges = Ranges::up_to(
        max.unwrap_or(verify::DEFAULT_MAX_N),
        max.map_or(verify::DEFAULT_MAX_PQ, |m| m.min(verify::DEFAULT_MAX_PQ)),
    );
    if let Some(n) = rank(cli)? {
        ranges.ranks = vec![n];
    }
    if cli.p.is_some() || cli.q.is_some() {
        ranges.signatures = vec![pq(cli)?];
    }
    Ok(ranges.specs(&CheckId::ALL)?)
}

fn emit_checks(cli: &Cli, specs: &[CheckSpec]) -> Result<bool, Usage> {
    let reports = verify::run_specs(specs, &Overrides::default(), cli.timings);
    let format = if cli.json { Format::Json } else { Format::Text };
    match &cli.out {
        Some(path) => {
            let mut f = File::create(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
            verify::emit_report(&reports, format, &mut f)?;
        }
        None => verify::emit_report(&reports, format, &mut io::stdout().lock())?,
    }
    Ok(Summary::of(&reports).all_passed())
}

fn write_out(cli: &Cli, s: &str) -> Result<(), Usage> {
    match &cli.out {
        Some(path) => std::fs::write(path, s).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(s.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}

fn write_either(cli: &Cli, text: String, value: Value) -> Result<(), Usage> {
    if cli.json {
        write_out(cli, &lj::to_string_pretty(&value)?)
    } else {
        write_out(cli, &text)
    }
}

fn dims(cli: &Cli) -> Result<(String, Value), Usage> {
    let ns: Vec<usize> = match rank(cli)? {
        Some(n) => vec![n],
        None => (3..=verify::DEFAULT_MAX_N).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    for n in ns {
        let mut entries = Vec::new();
        for i in 1..n {
            entries.push(DominantWeight::fundamental(n, i)?);
        }
        for w in self_conjugate_generators(n)? {
            if !entries.contains(&w) {
                entries.push(w);
            }
        }
        text.push_str(&format!("n = {n} (2n+1 = {})\n", 2 * n + 1));
        for w in entries {
            let d = weyl_dim(&w);
            let sc = if is_self_conjugate(&w) { "  self-conjugate" } else { "" };
            text.push_str(&format!("  {:<12} {d:>8}{sc}\n", w.to_string()));
            rows.push(json!({ "n": n, "weight": lj::weight(&w), "name": w.to_string(), "dim": d as u64, "self_conjugate": is_self_conjugate(&w) }));
        }
    }
    Ok((text, json!({ "schema_version": lj::SCHEMA_VERSION, "dims": rows })))
}

fn enumerate(cli: &Cli) -> Result<(String, Value), Usage> {
    let n = rank(cli)?.ok_or_else(|| Usage("enumerate needs --n".into()))?;
    let bound = cli.bound.unwrap_or(2 * (2 * n as u128 + 1));
    let list = enumerate_dominant(n, bound)?;
    let mut text = format!("dominant weights of sl({n}) with dimension ≤ {bound}: {}\n", list.len());
    let mut rows = Vec::new();
    for (w, d) in &list {
        let sc = if is_self_conjugate(w) { "  self-conjugate" } else { "" };
        text.push_str(&format!("  {:<12} {d:>8}{sc}\n", w.to_string()));
        rows.push(json!({ "weight": lj::weight(w), "name": w.to_string(), "dim": *d as u64, "self_conjugate": is_self_conjugate(w) }));
    }
    Ok((text, json!({ "schema_version": lj::SCHEMA_VERSION, "n": n, "bound": bound as u64, "weights": rows })))
}

fn module(p: usize, q: usize, which: ModuleArg) -> Result<RealRep, Usage> {
    let adjoint_along = |e: Embedding| -> Result<RealRep, Usage> {
        let name = format!("{} under {}", e.target().name(), e.source().name());
        Ok(restrict(&adjoint_rep(e.target()), &e)?.with_name(name))
    };
    match which {
        ModuleArg::Phi => adjoint_along(embed_phi(p, q)?),
        ModuleArg::Psi1 => adjoint_along(embed_psi(p, q, PsiVariant::First)?),
        ModuleArg::Psi2 => adjoint_along(embed_psi(p, q, PsiVariant::Second)?),
        ModuleArg::Wedge2 => Ok(wedge2_rep(&realify(&defining_rep(p, q)?))?.with_name(format!("Λ²C^{{{p},{q}}}_R"))),
        ModuleArg::Cpq => Ok(realify(&defining_rep(p, q)?).with_name(format!("C^{{{p},{q}}}_R"))),
        ModuleArg::Adjoint => Ok(adjoint_rep(&unitary_algebra(p, q, true)?)),
    }
}

fn decompose(cli: &Cli, which: ModuleArg) -> Result<bool, Usage> {
    let (p, q) = pq(cli)?;
    let r = module(p, q, which)?;
    let d = real_isotypic(&r)?;
    let ok = d.spans_module() && d.components_invariant(&r);
    let mut text = format!("{} ({}), dimension {}\n", d.module, d.algebra, d.module_dim);
    for c in &d.components {
        let label = c.fine_label.as_deref().unwrap_or(&c.label);
        let cc = c.central_charge.map(|x| format!(", central charge {x}")).unwrap_or_default();
        text.push_str(&format!("  {label:<24} dim {:>3}  highest weight {}{cc}\n", c.dim, c.highest_weight));
    }
    text.push_str(&format!("sum of dimensions {}\n", d.dims().iter().sum::<usize>()));
    write_either(cli, text, lj::decomposition(&d))?;
    Ok(ok)
}

fn forms(cli: &Cli, which: FormsArg) -> Result<bool, Usage> {
    let (p, q) = pq(cli)?;
    let r = match which {
        FormsArg::Cpq => module(p, q, ModuleArg::Cpq)?,
        FormsArg::Adjoint => module(p, q, ModuleArg::Adjoint)?,
        FormsArg::Wedge2 => module(p, q, ModuleArg::Wedge2)?,
    };
    let f = invariant_bilinear_forms(&r)?;
    let ok = f.check_invariance(&r);
    let mut text = format!(
        "invariant bilinear forms on {}: dimension {} ({} symmetric, {} antisymmetric)\n",
        r.name(),
        f.dim(),
        f.symmetric.len(),
        f.antisymmetric.len()
    );
    for (i, s) in f.signatures.iter().enumerate() {
        text.push_str(&format!("  symmetric form {i}: signature {s}\n"));
    }
    write_either(cli, text, lj::forms(&f))?;
    Ok(ok)
}

fn pair(cli: &Cli, which: Option<PairArg>) -> Result<bool, Usage> {
    let (p, q) = pq(cli)?;
    let all = [PairArg::SuQ, PairArg::SuP, PairArg::So, PairArg::SoBlock];
    let chosen: Vec<PairArg> = match which {
        Some(w) => vec![w],
        None => all.to_vec(),
    };
    let mut text = String::new();
    let mut values = Vec::new();
    let mut ok = true;
    for w in chosen {
        let e = match w {
            PairArg::SuQ => embed_u_in_su(p, q, UnitarySide::ExtraNegative)?,
            PairArg::SuP => embed_u_in_su(p, q, UnitarySide::ExtraPositive)?,
            PairArg::So => embed_phi(p, q)?,
            PairArg::SoBlock => so_block_inclusion(p, q, PsiVariant::First)?,
        };
        let r = symmetric_pair_check(&e)?;
        ok &= r.is_symmetric_pair();
        let mark = if r.is_symmetric_pair() { '✓' } else { '✗' };
        text.push_str(&format!(
            "{mark} ({}, {}): m = {} (dim {}), Killing signature on m {}, on h {}\n",
            r.g,
            r.h,
            r.m_label,
            r.m_dim(),
            r.killing_signature_m,
            r.killing_signature_h
        ));
        if let Some(wit) = &r.witness {
            text.push_str(&format!("    witness: {wit}\n"));
        }
        values.push(lj::symmetric_pair(&r));
    }
    write_either(cli, text, json!({ "schema_version": lj::SCHEMA_VERSION, "pairs": values }))?;
    Ok(ok)
}
