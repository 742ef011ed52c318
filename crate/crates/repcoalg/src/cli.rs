//! Command dispatch and the report document.

use std::fmt::Write as _;

use clap::{Parser, ValueEnum};
use repcoalg_core::coalg::{
    compare_dagger, coradical, dagger, double_dual_check, dual_coalgebra_fd, filtration_dims, kostant_exhaustive,
    kostant_transpose, loewy_length, measuring_check, oracle_dagger, pointed_components, proper_check,
    radical_layers, segal_compare, simple_subcoalgebras, zariski_closed, CheckReport, Coalgebra, DaggerResult,
};
use repcoalg_core::exactlin::Mat;
use repcoalg_core::fdalg::{basic_algebra, simples, FdAlgebra};
use repcoalg_core::modres::{ext_dims, ext_quiver};
use repcoalg_core::transfer::{build_contraction, stasheff_check, transfer_m, DgAlgebra, DG_CUTOFF};
use repcoalg_core::{Error, FieldSpec, Scalar};
use serde_json::{json, Value};

use crate::parse::{parse_input, Input, InputError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Info,
    Simples,
    Ext,
    Ainfty,
    Dagger,
    Dual,
    Corad,
    Filtration,
    Components,
    Kostant,
    Zariski,
    Measuring,
    Proper,
    Segal,
    Check,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Info => "info",
            Command::Simples => "simples",
            Command::Ext => "ext",
            Command::Ainfty => "ainfty",
            Command::Dagger => "dagger",
            Command::Dual => "dual",
            Command::Corad => "corad",
            Command::Filtration => "filtration",
            Command::Components => "components",
            Command::Kostant => "kostant",
            Command::Zariski => "zariski",
            Command::Measuring => "measuring",
            Command::Proper => "proper",
            Command::Segal => "segal",
            Command::Check => "check",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Doc,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "repcoalg", version, about = "Dual coalgebras of finite-dimensional algebras")]
pub struct Args {
    /// Input file in the presentation or structure-constant format.
    #[arg(long)]
    pub input: std::path::PathBuf,
    #[arg(long, value_enum)]
    pub cmd: Command,
    /// Longest path kept in path coalgebras (default: the input's truncation degree).
    #[arg(long)]
    pub max_len: Option<usize>,
    /// Homological degree for `ext` (default: twice the truncation degree).
    #[arg(long)]
    pub ext_cutoff: Option<usize>,
    /// Largest arity of higher products.
    #[arg(long, default_value_t = 4)]
    pub arity: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Ground field override: `Q` or `F<p>`.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Doc)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub input: String,
    pub input_name: String,
    pub command: Command,
    pub max_len: Option<usize>,
    pub ext_cutoff: Option<usize>,
    pub arity: usize,
    pub seed: u64,
    pub field: Option<FieldSpec>,
}

impl JobSpec {
    pub fn new(input: &str, command: Command) -> JobSpec {
        JobSpec {
            input: input.into(),
            input_name: "<inline>".into(),
            command,
            max_len: None,
            ext_cutoff: None,
            arity: 4,
            seed: 0,
            field: None,
        }
    }
}

pub fn parse_field_name(s: &str) -> Option<FieldSpec> {
    match s {
        "Q" => Some(FieldSpec::Rationals),
        _ => s.strip_prefix('F')?.parse().ok().and_then(FieldSpec::prime),
    }
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNSUPPORTED: u8 = 3;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub doc: Value,
    pub exit: u8,
}

struct Params {
    max_len: usize,
    ext_cutoff: usize,
    arity: usize,
    seed: u64,
}

fn error_kind(e: &Error) -> (&'static str, u8) {
    match e {
        Error::Unsupported(_) => ("unsupported", EXIT_UNSUPPORTED),
        Error::DimensionMismatch(_) => ("dimension_mismatch", EXIT_INPUT),
        Error::NotAdmissible(_) => ("not_admissible", EXIT_INPUT),
        Error::InvalidStructure(_) => ("invalid_structure", EXIT_INPUT),
        Error::NotAMorphism(_) => ("not_a_morphism", EXIT_INPUT),
        Error::Inconsistent(_) => ("inconsistent", EXIT_CHECK_FAILED),
    }
}

fn error_doc(job: &JobSpec, err: Value, exit: u8) -> Outcome {
    Outcome {
        doc: json!({
            "command": job.command.name(),
            "input": job.input_name,
            "seed": job.seed,
            "status": "error",
            "error": err,
        }),
        exit,
    }
}

/// Parse, compute and assemble the report; never panics on bad input.
pub fn run(job: &JobSpec) -> Outcome {
    let input = match parse_input(&job.input, job.field) {
        Ok(i) => i,
        Err(InputError::Syntax(p)) => {
            return error_doc(
                job,
                json!({"kind": "syntax", "line": p.line, "column": p.column, "message": p.message}),
                EXIT_INPUT,
            )
        }
        Err(InputError::Algebra { line, error }) => {
            let (kind, exit) = error_kind(&error);
            let exit = if exit == EXIT_CHECK_FAILED { EXIT_INPUT } else { exit };
            return error_doc(job, json!({"kind": kind, "line": line, "message": error.to_string()}), exit);
        }
    };
    let params = match resolve_params(job, &input) {
        Ok(p) => p,
        Err(e) => {
            let (kind, exit) = error_kind(&e);
            return error_doc(job, json!({"kind": kind, "message": e.to_string()}), exit);
        }
    };
    let parameters = json!({
        "max_len": params.max_len,
        "ext_cutoff": params.ext_cutoff,
        "arity": params.arity,
        "seed": params.seed,
        "field": input.algebra().field().name(),
    });
    match dispatch(job.command, &input, &params) {
        Ok((result, passed)) => Outcome {
            doc: json!({
                "command": job.command.name(),
                "input": job.input_name,
                "parameters": parameters,
                "seed": params.seed,
                "status": if passed { "ok" } else { "fail" },
                "result": result,
            }),
            exit: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
        },
        Err(e) => {
            let (kind, exit) = error_kind(&e);
            let mut out = error_doc(job, json!({"kind": kind, "message": e.to_string()}), exit);
            out.doc["parameters"] = parameters;
            out
        }
    }
}

fn resolve_params(job: &JobSpec, input: &Input) -> Result<Params, Error> {
    let n = match input.presentation() {
        Some(p) => p.truncation,
        None => loewy_length(&basic_algebra(input.algebra())?)?.max(1),
    };
    Ok(Params {
        max_len: job.max_len.unwrap_or(n),
        ext_cutoff: job.ext_cutoff.unwrap_or(2 * n),
        arity: job.arity,
        seed: job.seed,
    })
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn combination(labels: &[String], v: &[Scalar]) -> String {
    let mut s = String::new();
    for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        let mag = if neg { c.neg() } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            let _ = write!(s, "{mag} ");
        }
        s.push_str(&labels[k]);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn check_items(r: &CheckReport) -> Value {
    Value::Array(
        r.items
            .iter()
            .map(|i| {
                json!({
                    "name": i.name,
                    "passed": i.passed,
                    "detail": i.detail,
                })
            })
            .collect(),
    )
}

fn coalgebra_doc(c: &Coalgebra) -> Value {
    let labels = c.labels().to_vec();
    let coproduct: Vec<Value> = (0..c.dim())
        .map(|k| {
            let terms: Vec<String> = c
                .delta(k)
                .iter()
                .map(|(i, j, d)| {
                    if d.is_one() {
                        format!("{} ⊗ {}", labels[*i], labels[*j])
                    } else {
                        format!("{d} {} ⊗ {}", labels[*i], labels[*j])
                    }
                })
                .collect();
            json!({"element": labels[k], "delta": terms.join(" + ")})
        })
        .collect();
    json!({
        "dim": c.dim(),
        "basis": labels,
        "coproduct": coproduct,
        "counit": scalars(c.counit()),
    })
}

fn dagger_doc(d: &DaggerResult) -> Value {
    let arrows: Vec<Value> = d
        .quiver
        .arrows()
        .iter()
        .map(|a| {
            json!({
                "label": a.label,
                "source": d.quiver.vertices()[a.source],
                "target": d.quiver.vertices()[a.target],
            })
        })
        .collect();
    json!({
        "max_len": d.max_len,
        "vertices": d.quiver.vertices(),
        "arrows": arrows,
        "graded_dims": d.graded_dims,
        "total_dim": d.coalgebra.dim(),
        "group_likes": d.group_likes,
        "group_like_count": d.group_likes.len(),
        "basis": d.coalgebra.labels(),
        "mu_rank": d.mu.matrix.rank(),
    })
}

fn dispatch(cmd: Command, input: &Input, p: &Params) -> Result<(Value, bool), Error> {
    let a = input.algebra();
    match cmd {
        Command::Info => info(input),
        Command::Simples => {
            let ss = simples(a)?;
            let rows: Vec<Value> = ss.iter().map(|s| json!({"index": s.index, "dim": s.dim})).collect();
            Ok((json!({"count": ss.len(), "simples": rows}), true))
        }
        Command::Ext => ext(a, p.ext_cutoff),
        Command::Ainfty => ainfty(a, p),
        Command::Dagger => {
            let d = dagger(a, p.max_len, p.seed)?;
            Ok((dagger_doc(&d), true))
        }
        Command::Dual => {
            let c = dual_coalgebra_fd(a);
            let ok = c.check_axioms().is_ok();
            let mut doc = coalgebra_doc(&c);
            doc["axioms"] = json!(ok);
            Ok((doc, ok))
        }
        Command::Corad => {
            let c = dual_coalgebra_fd(a);
            let r = coradical(&c)?;
            let basis: Vec<String> = r.basis().iter().map(|v| combination(c.labels(), v)).collect();
            Ok((json!({"dim": r.dim(), "basis": basis}), true))
        }
        Command::Filtration => {
            let dims = filtration_dims(&dual_coalgebra_fd(a))?;
            Ok((json!({"dims": dims}), true))
        }
        Command::Components => {
            let c = dual_coalgebra_fd(a);
            let comps = pointed_components(&c)?;
            let rows: Vec<Value> = comps
                .iter()
                .map(|k| {
                    let gs: Vec<String> = k.group_likes.iter().map(|g| combination(c.labels(), g)).collect();
                    json!({"dim": k.subcoalgebra.dim(), "group_likes": gs})
                })
                .collect();
            Ok((json!({"count": comps.len(), "components": rows}), true))
        }
        Command::Kostant => kostant(a),
        Command::Zariski => zariski(a),
        Command::Measuring => {
            let r = measuring_check(a);
            let ok = r.is_ok();
            Ok((json!({"passed": ok, "detail": r.err().map(|e| e.to_string())}), ok))
        }
        Command::Proper => {
            let d = dagger(a, p.max_len, p.seed)?;
            let r = proper_check(&d)?;
            let dd = double_dual_check(a);
            let doc = json!({
                "max_len": p.max_len,
                "injective": r.injective,
                "well_defined": r.well_defined,
                "kernel_dim": r.kernel.dim(),
                "double_dual": dd,
            });
            Ok((doc, r.injective && r.well_defined && dd))
        }
        Command::Segal => {
            let d = dagger(a, p.max_len, p.seed)?;
            let r = segal_compare(&d)?;
            let layers = radical_layers(&d.basic)?;
            Ok((
                json!({"passed": r.passed(), "graded_dims": layers, "checks": check_items(&r)}),
                r.passed(),
            ))
        }
        Command::Check => check(input, p),
    }
}

fn info(input: &Input) -> Result<(Value, bool), Error> {
    let a = input.algebra();
    let basic = basic_algebra(a)?;
    let presentation = input.presentation().map(|pr| {
        let q = &pr.quiver;
        let arrows: Vec<Value> = q
            .arrows()
            .iter()
            .map(|x| json!({"label": x.label, "source": q.vertices()[x.source], "target": q.vertices()[x.target]}))
            .collect();
        let relations: Vec<String> = pr
            .relations
            .iter()
            .map(|r| {
                let labels: Vec<String> = r.iter().map(|(_, path)| q.path_label(path)).collect();
                let coeffs: Vec<Scalar> = r.iter().map(|(c, _)| c.clone()).collect();
                combination(&labels, &coeffs)
            })
            .collect();
        json!({"vertices": q.vertices(), "arrows": arrows, "relations": relations, "truncate": pr.truncation})
    });
    Ok((
        json!({
            "dim": a.dim(),
            "field": a.field().name(),
            "basis": a.labels(),
            "presentation": presentation,
            "basic_dim": basic.dim(),
            "radical_layers": radical_layers(&basic)?,
        }),
        true,
    ))
}

fn ext(a: &FdAlgebra, cutoff: usize) -> Result<(Value, bool), Error> {
    let ext = ext_dims(a, cutoff)?;
    let eq = ext_quiver(&ext)?;
    let degrees: Vec<Value> = ext
        .dims()
        .iter()
        .enumerate()
        .map(|(i, m)| json!({"degree": i, "dims": m, "total": ext.total_dim(i)}))
        .collect();
    let arrows: Vec<Value> = eq
        .quiver
        .arrows()
        .iter()
        .map(|x| {
            json!({"label": x.label, "source": eq.quiver.vertices()[x.source], "target": eq.quiver.vertices()[x.target]})
        })
        .collect();
    let ok = ext.resolutions.iter().all(|r| r.check_complex(&ext.algebra) && r.check_minimal(&ext.algebra));
    Ok((
        json!({"cutoff": cutoff, "vertices": eq.quiver.vertices(), "ext": degrees, "ext_quiver": arrows, "resolutions_ok": ok}),
        ok,
    ))
}

fn ainfty(a: &FdAlgebra, p: &Params) -> Result<(Value, bool), Error> {
    let ext = ext_dims(a, DG_CUTOFF)?;
    let eq = ext_quiver(&ext)?;
    let labels: Vec<String> = eq.quiver.arrows().iter().map(|x| x.label.clone()).collect();
    let c = build_contraction(DgAlgebra::new(ext), p.seed)?;
    let ai = transfer_m(c, p.arity.max(2))?;
    let e1 = labels.len();
    let mut products = Vec::new();
    for n in 2..=p.arity {
        let total = e1.checked_pow(n as u32).unwrap_or(usize::MAX).min(4096);
        let mut nonzero = Vec::new();
        for code in 0..total {
            let mut k = code;
            let tuple: Vec<(usize, usize)> = (0..n)
                .map(|_| {
                    let x = k % e1;
                    k /= e1;
                    (1, x)
                })
                .collect();
            let v = ai.m(&tuple);
            if v.iter().any(|x| !x.is_zero()) {
                let names: Vec<&str> = tuple.iter().map(|t| labels[t.1].as_str()).collect();
                nonzero.push(json!({"inputs": names, "value": scalars(&v)}));
            }
        }
        products.push(json!({"arity": n, "nonzero": nonzero}));
    }
    let rep = stasheff_check(&ai, p.arity);
    let violation = rep
        .violation
        .as_ref()
        .map(|(n, t)| json!({"arity": n, "inputs": t.iter().map(|x| labels[x.1].clone()).collect::<Vec<_>>()}));
    Ok((
        json!({
            "ext1": labels,
            "products": products,
            "stasheff": {"passed": rep.passed(), "checked": rep.checked, "violation": violation},
        }),
        rep.passed(),
    ))
}

fn kostant(a: &FdAlgebra) -> Result<(Value, bool), Error> {
    let c = dual_coalgebra_fd(a);
    if a.field() != FieldSpec::Rationals && a.dim() * a.dim() <= 9 {
        let census = kostant_exhaustive(a, &c)?;
        return Ok((
            json!({
                "mode": "exhaustive",
                "coalgebra": "A*",
                "linear_maps": census.linear_maps,
                "algebra_morphisms": census.algebra_morphisms,
                "coalgebra_morphisms": census.coalgebra_morphisms,
                "bijective": census.bijective,
            }),
            census.bijective,
        ));
    }
    // the identity A → (A*)* transposes to the identity A* → A*
    let id = Mat::identity(a.field(), a.dim());
    let g = kostant_transpose(a, &c, &id);
    let ok = g.as_ref().map(|g| g.map == id).unwrap_or(false);
    Ok((json!({"mode": "identity", "transpose_is_identity": ok}), ok))
}

fn zariski(a: &FdAlgebra) -> Result<(Value, bool), Error> {
    let ss = simples(a)?;
    let subs = simple_subcoalgebras(a)?;
    let points: Vec<Value> = ss
        .iter()
        .zip(&subs)
        .map(|(s, c)| json!({"index": s.index, "dim": s.dim, "subcoalgebra_dim": c.dim()}))
        .collect();
    let mut sets = Vec::new();
    let mut elems: Vec<(String, Vec<Scalar>)> = vec![("0".into(), a.zero_elem()), ("1".into(), a.unit().to_vec())];
    elems.extend((0..a.dim()).map(|k| (a.labels()[k].clone(), a.basis_vec(k))));
    for (name, e) in elems {
        sets.push(json!({"element": name, "points": zariski_closed(a, &e)?}));
    }
    Ok((json!({"points": points, "closed_sets": sets}), true))
}

fn check(input: &Input, p: &Params) -> Result<(Value, bool), Error> {
    let a = input.algebra();
    let mut items: Vec<Value> = Vec::new();
    let mut all = true;
    let mut push = |module: &str, name: &str, r: Result<bool, Error>, detail: String| {
        let (passed, detail) = match r {
            Ok(b) => (b, detail),
            Err(e) => (false, e.to_string()),
        };
        all &= passed;
        items.push(json!({"module": module, "name": name, "passed": passed, "detail": detail}));
    };
    if let Some(pr) = input.presentation() {
        push("quivalg", "admissible relations", pr.validate().map(|_| true), String::new());
    }
    push("fdalg", "associative and unital", a.check_axioms().map(|_| true), String::new());
    let basic = basic_algebra(a);
    push("fdalg", "basic algebra", basic.as_ref().map(|_| true).map_err(Clone::clone), String::new());
    let ss = simples(a);
    let c = dual_coalgebra_fd(a);
    push("coalg", "dual coalgebra axioms", c.check_axioms().map(|_| true), String::new());
    push("coalg", "double duality", Ok(double_dual_check(a)), String::new());
    push("coalg", "measuring", measuring_check(a).map(|_| true), String::new());
    if let Ok(ss) = &ss {
        let expect: usize = ss.iter().map(|s| s.dim * s.dim).sum();
        let got = coradical(&c).map(|r| r.dim());
        push(
            "coalg",
            "coradical dimension is the sum of squares of simple dimensions",
            got.clone().map(|g| g == expect),
            format!("{got:?} vs {expect}"),
        );
    }
    push(
        "coalg",
        "coradical filtration exhausts",
        filtration_dims(&c).map(|d| d.last() == Some(&c.dim())),
        String::new(),
    );
    match ext_dims(a, p.ext_cutoff.max(DG_CUTOFF)) {
        Ok(ext) => {
            let ok = ext.resolutions.iter().all(|r| r.check_complex(&ext.algebra) && r.check_minimal(&ext.algebra));
            push("modres", "minimal resolutions", Ok(ok), String::new());
            let ext0 = ext.dims()[0].iter().enumerate().all(|(v, row)| {
                row.iter().enumerate().all(|(w, &d)| d == usize::from(v == w))
            });
            push("modres", "Ext^0 is diagonal", Ok(ext0), String::new());
        }
        Err(e) => push("modres", "minimal resolutions", Err(e), String::new()),
    }
    let transferred = ext_dims(a, DG_CUTOFF).and_then(|e| build_contraction(DgAlgebra::new(e), p.seed));
    match transferred {
        Ok(con) => {
            push("transfer", "contraction identities", con.check_identities().map(|_| true), String::new());
            match transfer_m(con, p.arity.max(2)) {
                Ok(ai) => {
                    let rep = stasheff_check(&ai, p.arity);
                    push("transfer", "Stasheff identities", Ok(rep.passed()), format!("{} tuples", rep.checked));
                }
                Err(e) => push("transfer", "Stasheff identities", Err(e), String::new()),
            }
        }
        Err(e) => push("transfer", "contraction identities", Err(e), String::new()),
    }
    match dagger(a, p.max_len, p.seed) {
        Ok(d) => {
            push("coalg", "dagger coalgebra axioms", d.coalgebra.check_axioms().map(|_| true), String::new());
            let cmp = oracle_dagger(a).and_then(|o| compare_dagger(&d, &o));
            let detail = cmp
                .as_ref()
                .map(|r| {
                    r.items
                        .iter()
                        .map(|i| format!("{}: {:?}", i.name, i.passed))
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .unwrap_or_default();
            push("coalg", "dagger agrees with the dual coalgebra", cmp.map(|r| r.passed()), detail);
        }
        Err(e) => push("coalg", "dagger coalgebra axioms", Err(e), String::new()),
    }
    let passed = all;
    Ok((json!({"passed": passed, "checks": items}), passed))
}

/// Deterministic rendering: pretty JSON for `doc`, indented key/value lines for `text`.
pub fn render(doc: &Value, format: Format) -> String {
    match format {
        Format::Doc => {
            let mut s = serde_json::to_string_pretty(doc).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            text(doc, 0, &mut s);
            s
        }
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", xs.iter().filter_map(scalar_text).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar_text(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match scalar_text(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        text(x, depth + 1, out);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other).unwrap_or_default());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUBIC: &str = "field Q; vertices v; arrows a: v->v; truncate 3";

    fn run_cmd(input: &str, cmd: Command, max_len: Option<usize>) -> Outcome {
        let mut job = JobSpec::new(input, cmd);
        job.max_len = max_len;
        run(&job)
    }

    #[test]
    fn dagger_on_cubic() {
        let o = run_cmd(CUBIC, Command::Dagger, Some(4));
        assert_eq!(o.exit, EXIT_OK);
        assert_eq!(o.doc["result"]["graded_dims"], json!([1, 1, 1, 0]));
        assert_eq!(o.doc["result"]["group_like_count"], json!(1));
    }

    #[test]
    fn check_on_semisimple() {
        let m2 = "algebra dim 4\nlabels e11 e12 e21 e22\n\
                  mult 1 1 = e11; mult 1 2 = e12; mult 2 3 = e11; mult 2 4 = e12\n\
                  mult 3 1 = e21; mult 3 2 = e22; mult 4 3 = e21; mult 4 4 = e22\nunit = e11 + e22";
        let o = run_cmd(m2, Command::Check, None);
        assert_eq!(o.exit, EXIT_OK, "{}", render(&o.doc, Format::Text));
        let kk = "algebra dim 2; mult 1 1 = b1; mult 2 2 = b2; unit = b1 + b2";
        assert_eq!(run_cmd(kk, Command::Check, None).exit, EXIT_OK);
    }

    #[test]
    fn segal_on_dual_numbers() {
        let o = run_cmd("field Q; vertices v; arrows a: v->v; relations a*a; truncate 3", Command::Segal, None);
        assert_eq!(o.exit, EXIT_OK, "{}", o.doc);
        assert_eq!(o.doc["result"]["graded_dims"], json!([1, 1]));
    }

    #[test]
    fn input_errors_exit_two() {
        let o = run_cmd("vertices 1 2; arrows a: 1->", Command::Info, None);
        assert_eq!(o.exit, EXIT_INPUT);
        assert_eq!(o.doc["error"]["kind"], json!("syntax"));
        let o = run_cmd("vertices 1; arrows x: 1->1; relations x; truncate 3", Command::Info, None);
        assert_eq!(o.exit, EXIT_INPUT);
        assert_eq!(o.doc["error"]["line"], json!(1));
    }

    #[test]
    fn unsupported_field_exits_three() {
        // F4 = F2[x]/(x^2 + x + 1) does not split over F2
        let o = run_cmd("field F2; algebra dim 2; labels 1 x; mult 1 1 = 1; mult 1 2 = x; mult 2 1 = x; mult 2 2 = 1 + x; unit = 1", Command::Simples, None);
        assert_eq!(o.exit, EXIT_UNSUPPORTED, "{}", o.doc);
    }

    #[test]
    fn text_render_is_stable() {
        let o = run_cmd(CUBIC, Command::Filtration, None);
        let t = render(&o.doc, Format::Text);
        assert!(t.contains("dims: [1, 2, 3]"), "{t}");
        assert_eq!(t, render(&run_cmd(CUBIC, Command::Filtration, None).doc, Format::Text));
    }
}
