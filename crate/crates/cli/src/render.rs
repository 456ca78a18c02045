//! Report rendering: JSON (stable key order) and plain tables.

use serde_json::{json, Map, Value};

use orbitbound_core::bounds::{BoundsReport, DeltaBreakdown, DeltaComponent, JointBound};
use orbitbound_core::complex::GradedComplex;
use orbitbound_core::novikov::{FpScalar, GroupRingCoeff, NovikovCoeff, NovikovSeries};
use orbitbound_core::rep::Representation;

use crate::schema::SCHEMA_VERSION;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
}

pub fn emit(value: Value, table: String, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
        Format::Table => print!("{table}"),
    }
}

// ---- delta ---------------------------------------------------------------

pub fn delta_json(b: &DeltaBreakdown) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "delta": b.delta,
        "a_value": b.a_value,
        "b_value": b.b_value,
        "witnesses": b.witnesses.iter().map(|w| json!({
            "prime": w.prime,
            "rep_index": w.rep_index,
            "rep_dim": w.rep_dim,
            "b1": w.b1,
            "component": match w.component { DeltaComponent::A => "A", DeltaComponent::B => "B" },
            "value": w.value,
        })).collect::<Vec<_>>(),
    })
}

pub fn delta_table(b: &DeltaBreakdown) -> String {
    let mut out = String::new();
    out.push_str(&format!("delta = {}\n", b.delta));
    out.push_str(&match b.a_value {
        Some(a) => format!("  A (nontrivial irreducibles) = {a}\n"),
        None => "  A (nontrivial irreducibles) = empty (counts as 1)\n".to_string(),
    });
    out.push_str(&format!("  B (trivial coefficients)    = {}\n", b.b_value));
    if !b.witnesses.is_empty() {
        out.push_str("  prime  rep  dim  b1  part  value\n");
        for w in &b.witnesses {
            out.push_str(&format!(
                "  {:>5}  {:>3}  {:>3}  {:>2}  {:>4}  {:>5}\n",
                w.prime,
                w.rep_index,
                w.rep_dim,
                w.b1,
                match w.component {
                    DeltaComponent::A => "A",
                    DeltaComponent::B => "B",
                },
                w.value
            ));
        }
    }
    out
}

// ---- irreducibles ----------------------------------------------------------

pub fn irreps_json(prime: u64, factors: &[(Representation, usize)]) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "prime": prime,
        "irreducibles": factors.iter().map(|(rep, mult)| json!({
            "prime": rep.prime(),
            "dim": rep.dim(),
            "multiplicity": mult,
            "generator_images": rep.gen_images().iter().map(|m| {
                (0..m.rows()).map(|r| m.row(r).to_vec()).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn irreps_table(prime: u64, order: usize, factors: &[(Representation, usize)]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{} irreducible representations mod {prime}\n",
        factors.len()
    ));
    out.push_str("  dim  multiplicity\n");
    let mut total = 0;
    for (rep, mult) in factors {
        out.push_str(&format!("  {:>3}  {:>12}\n", rep.dim(), mult));
        total += rep.dim() * mult;
    }
    out.push_str(&format!(
        "  regular module length check: {total} = group order {order}\n"
    ));
    out
}

// ---- betti -------------------------------------------------------------------

pub fn betti_json(prime: u64, dim: usize, b0: usize, b1: usize) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "prime": prime,
        "rep_dim": dim,
        "b0": b0,
        "b1": b1,
    })
}

pub fn betti_table(prime: u64, dim: usize, b0: usize, b1: usize) -> String {
    format!("local Betti numbers mod {prime} (rep dim {dim}): b0 = {b0}, b1 = {b1}\n")
}

// ---- fold -----------------------------------------------------------------------

pub fn fold_json(folded: &GradedComplex, homology: Option<&[usize]>) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "modulus": folded.slots(),
        "ranks": folded.ranks(),
        "homology": homology,
    })
}

pub fn fold_table(folded: &GradedComplex, homology: Option<&[usize]>) -> String {
    let mut out = String::new();
    out.push_str(&format!("folded to modulus {}\n", folded.slots()));
    out.push_str("  residue  rank");
    if homology.is_some() {
        out.push_str("  homology");
    }
    out.push('\n');
    for (i, &r) in folded.ranks().iter().enumerate() {
        match homology {
            Some(h) => out.push_str(&format!("  {:>7}  {:>4}  {:>8}\n", i, r, h[i])),
            None => out.push_str(&format!("  {:>7}  {:>4}\n", i, r)),
        }
    }
    out
}

// ---- bounds report -----------------------------------------------------------

fn joint_json(j: &JointBound) -> Value {
    json!({
        "indices": j.indices,
        "bound": j.bound,
        "rule": j.rule.id(),
        "witness": j.witness,
    })
}

pub fn report_json(report: &BoundsReport) -> Value {
    let mut per_index = Map::new();
    for (idx, record) in &report.per_index {
        per_index.insert(
            idx.to_string(),
            json!({
                "bound": record.bound,
                "rule": record.rule.id(),
                "witness": record.witness,
            }),
        );
    }
    json!({
        "schema": SCHEMA_VERSION,
        "name": report.name,
        "half_dim": report.half_dim,
        "minimal_chern": report.minimal_chern,
        "class": report.class.id(),
        "per_index": per_index,
        "joint": report.joint.iter().map(joint_json).collect::<Vec<_>>(),
        "total": report.total.as_ref().map(|t| json!({
            "bound": t.bound,
            "rule": t.rule.id(),
            "witness": t.witness,
        })),
        "notes": report.notes,
    })
}

pub fn report_table(report: &BoundsReport) -> String {
    let mut out = String::new();
    if let Some(name) = &report.name {
        out.push_str(&format!("{name}\n"));
    }
    out.push_str(&format!(
        "half-dimension n = {}, minimal Chern number N = {}, class {}\n",
        report.half_dim,
        report.minimal_chern,
        report.class.id()
    ));
    out.push_str("per-index lower bounds (index = Conley-Zehnder degree):\n");
    out.push_str("  index  bound  rule\n");
    for (idx, record) in &report.per_index {
        out.push_str(&format!(
            "  {:>5}  {:>5}  {}\n",
            idx,
            record.bound,
            record.rule.id()
        ));
    }
    for j in &report.joint {
        out.push_str(&format!(
            "joint: indices {:?} together carry at least {} orbits ({})\n",
            j.indices,
            j.bound,
            j.rule.id()
        ));
    }
    match &report.total {
        Some(t) => out.push_str(&format!("total: p >= {} ({})\n", t.bound, t.rule.id())),
        None => out.push_str("total: no bound derived\n"),
    }
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

// ---- novikov series -----------------------------------------------------------

pub fn series_json_int(s: &NovikovSeries<i64>) -> Value {
    Value::Array(s.terms().iter().map(|(e, c)| json!([c, e])).collect())
}

pub fn series_json_fp(s: &NovikovSeries<FpScalar>) -> Value {
    Value::Array(s.terms().iter().map(|(e, c)| json!([c.value, e])).collect())
}

pub fn series_json_group(s: &NovikovSeries<GroupRingCoeff>) -> Value {
    Value::Array(
        s.terms()
            .iter()
            .map(|(e, c)| {
                let pairs: Vec<Value> = c
                    .terms
                    .iter()
                    .map(|(&g, &coeff)| json!([coeff, c.group.label(g)]))
                    .collect();
                json!([pairs, e])
            })
            .collect(),
    )
}

pub fn series_table<C: NovikovCoeff>(s: &NovikovSeries<C>, show: impl Fn(&C) -> String) -> String {
    if s.is_zero() {
        return "  0\n".to_string();
    }
    let mut out = String::new();
    // highest level first
    let mut terms: Vec<_> = s.terms().iter().collect();
    terms.sort_by(|(a, _), (b, _)| s.context().cmp_mono(b, a));
    for (e, c) in terms {
        out.push_str(&format!(
            "  level {:>8}  t^{:?}  {}\n",
            s.context().level(e),
            e,
            show(c)
        ));
    }
    out
}
