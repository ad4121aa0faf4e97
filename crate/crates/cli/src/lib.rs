//! Command implementations behind the `idemsys` binary.
//!
//! Each command takes a parsed document and returns an [`Output`] carrying
//! both the JSON report and a human-readable rendering.

pub mod document;

use std::fmt::Write as _;

use idemsys::census::enumerate;
use idemsys::character::{CharacterAlgebra, CharacterSystem};
use idemsys::correspondence::dual_aon;
use idemsys::error::Error;
use idemsys::idempotent::{EigendataReport, IdempotentSystem};
use idemsys::matrix::Matrix;
use idemsys::solid::{check_ao, classify, is_aon, normalize, DiagonalWitness};
use idemsys::verify::{all_passed, verify_matrix, Outcome};
use serde_json::{json, Value};

use document::{
    matrix_entries, scalars_to_strings, AlgebraDocument, FieldDescriptor, MatrixDocument,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Domain(#[from] Error),
}

impl CliError {
    pub fn parse(e: impl std::fmt::Display) -> Self {
        CliError::Parse(e.to_string())
    }

    /// 1 for domain errors, 2 for parse and I/O errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub json: Value,
    pub pretty: String,
    /// False when the command ran but reports a failure (a failed check).
    pub success: bool,
}

impl Output {
    fn ok(json: Value, pretty: String) -> Self {
        Output {
            json,
            pretty,
            success: true,
        }
    }
}

pub fn parse_matrix_document(text: &str) -> Result<Matrix, CliError> {
    let doc: MatrixDocument = serde_json::from_str(text).map_err(CliError::parse)?;
    doc.to_matrix()
}

pub fn parse_algebra_document(text: &str) -> Result<CharacterAlgebra, CliError> {
    let doc: AlgebraDocument = serde_json::from_str(text).map_err(CliError::parse)?;
    Ok(CharacterAlgebra::new(doc.to_intersection_numbers()?)?)
}

fn render_matrix(m: &Matrix) -> String {
    let cells = matrix_entries(m);
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [{}]", line.join(" "));
    }
    out
}

fn list(v: &[idemsys::field::Scalar]) -> String {
    format!("({})", scalars_to_strings(v).join(", "))
}

fn witness_json(w: &DiagonalWitness) -> Value {
    json!({ "h": scalars_to_strings(w.h()), "k": scalars_to_strings(w.k()) })
}

pub fn cmd_classify(r: &Matrix) -> Output {
    let rep = classify(r);
    let json = json!({
        "field": FieldDescriptor::from(r.field()),
        "invertible": rep.invertible,
        "solid": rep.solid,
        "normalized": rep.normalized,
        "ao": rep.ao,
        "ao_witness": rep.ao_witness.as_ref().map(witness_json),
    });
    let mut pretty = format!(
        "invertible: {}\nsolid: {}\nnormalized: {}\nao: {}\n",
        rep.invertible, rep.solid, rep.normalized, rep.ao
    );
    if let Some(w) = &rep.ao_witness {
        let _ = writeln!(
            pretty,
            "witness H = diag{}, K = diag{}",
            list(w.h()),
            list(w.k())
        );
    }
    Output::ok(json, pretty)
}

pub fn cmd_normalize(r: &Matrix) -> Result<Output, CliError> {
    let p = normalize(r)?;
    let json = serde_json::to_value(MatrixDocument::from_matrix(&p)).expect("serializable");
    Ok(Output::ok(json, render_matrix(&p)))
}

pub fn cmd_ao(r: &Matrix) -> Result<Output, CliError> {
    let w = check_ao(r)?;
    let json = json!({ "ao": w.is_some(), "witness": w.as_ref().map(witness_json) });
    let pretty = match &w {
        Some(w) => format!(
            "ao: true\nH = diag{}\nK = diag{}\n",
            list(w.h()),
            list(w.k())
        ),
        None => "ao: false\n".to_string(),
    };
    Ok(Output::ok(json, pretty))
}

pub fn eigendata_json(data: &EigendataReport) -> Value {
    let pnum: Vec<Vec<Vec<String>>> = data
        .pnum
        .to_nested()
        .iter()
        .map(|plane| plane.iter().map(|row| scalars_to_strings(row)).collect())
        .collect();
    json!({
        "field": FieldDescriptor::from(data.p.field()),
        "p": matrix_entries(&data.p),
        "q": matrix_entries(&data.q),
        "nu": data.nu.to_string(),
        "k": scalars_to_strings(&data.k),
        "kstar": scalars_to_strings(&data.kstar),
        "m": scalars_to_strings(&data.m),
        "mstar": scalars_to_strings(&data.mstar),
        "pnum": pnum,
    })
}

pub fn cmd_eigendata(p: &Matrix) -> Result<Output, CliError> {
    if !is_aon(p) {
        return Err(Error::NotAON.into());
    }
    let data = IdempotentSystem::build_phi_r(p)?.eigendata()?;
    let n = data.p.size();
    let mut pretty = format!(
        "P =\n{}Q =\n{}",
        render_matrix(&data.p),
        render_matrix(&data.q)
    );
    let _ = writeln!(pretty, "nu = {}", data.nu);
    let _ = writeln!(pretty, "k = {}\nk* = {}", list(&data.k), list(&data.kstar));
    let _ = writeln!(pretty, "m = {}\nm* = {}", list(&data.m), list(&data.mstar));
    for h in 0..n {
        for i in 0..n {
            for j in i..n {
                let x = data.pnum.get(h, i, j);
                if !x.is_zero() {
                    let _ = writeln!(pretty, "p^{h}_{i}{j} = {x}");
                }
            }
        }
    }
    Ok(Output::ok(eigendata_json(&data), pretty))
}

pub fn cmd_dual(p: &Matrix) -> Result<Output, CliError> {
    let d = dual_aon(p)?;
    let json = serde_json::to_value(MatrixDocument::from_matrix(&d)).expect("serializable");
    Ok(Output::ok(json, render_matrix(&d)))
}

fn character_json(cs: &CharacterSystem) -> Value {
    let idempotents: Vec<Vec<String>> = (0..cs.size())
        .map(|j| scalars_to_strings(&cs.idempotent(j)))
        .collect();
    json!({
        "field": FieldDescriptor::from(cs.field()),
        "eigenmatrix": matrix_entries(cs.eigenmatrix()),
        "idempotents": idempotents,
        "nu": cs.nu().to_string(),
    })
}

pub fn cmd_character(alg: &CharacterAlgebra) -> Result<Output, CliError> {
    let cs = alg.semisimple_decompose()?;
    let mut pretty = format!("P =\n{}", render_matrix(cs.eigenmatrix()));
    for j in 0..cs.size() {
        let _ = writeln!(pretty, "e_{j} = {}", list(&cs.idempotent(j)));
    }
    Ok(Output::ok(character_json(&cs), pretty))
}

pub fn cmd_enumerate(d: usize, p: u64, budget: u128) -> Result<Output, CliError> {
    let census = enumerate(d, p, budget)?;
    let matrices: Vec<Value> = census
        .normalized
        .iter()
        .map(|e| json!({ "entries": matrix_entries(&e.matrix), "ao": e.ao }))
        .collect();
    let json = json!({
        "d": d,
        "p": p,
        "candidates": census.candidates.to_string(),
        "normalized_count": census.normalized.len(),
        "aon_count": census.aon_count(),
        "matrices": matrices,
    });
    let mut pretty = format!(
        "d = {d}, p = {p}: {} candidates, {} normalized, {} AON\n",
        census.candidates,
        census.normalized.len(),
        census.aon_count()
    );
    for m in census.aon() {
        let _ = write!(pretty, "{}\n", render_matrix(m));
    }
    Ok(Output::ok(json, pretty))
}

pub fn cmd_verify(r: &Matrix) -> Output {
    let checks = verify_matrix(r);
    let success = all_passed(&checks);
    let json = json!({
        "passed": success,
        "checks": checks
            .iter()
            .map(|c| {
                let (outcome, reason) = match &c.outcome {
                    Outcome::Pass => ("pass", None),
                    Outcome::Fail => ("fail", None),
                    Outcome::Skipped(why) => ("skipped", Some(why.clone())),
                };
                json!({ "name": c.name, "outcome": outcome, "reason": reason })
            })
            .collect::<Vec<_>>(),
    });
    let mut pretty = String::new();
    for c in &checks {
        let _ = writeln!(pretty, "{c}");
    }
    let _ = writeln!(
        pretty,
        "{}",
        if success {
            "all checks passed"
        } else {
            "some checks failed"
        }
    );
    Output {
        json,
        pretty,
        success,
    }
}
