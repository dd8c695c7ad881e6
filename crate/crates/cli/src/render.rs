use std::f64::consts::PI;
use std::fmt::Write;

use serde::Serialize;
use sievekit::dihedral::{conjugacy_classes, irreducible_characters};
use sievekit::CycloInt;

#[derive(Serialize)]
pub struct ClassJson {
    pub label: String,
    pub size: usize,
    pub representative: String,
    pub members: Vec<String>,
}

#[derive(Serialize)]
pub struct ValueJson {
    /// coefficients of `1, xi, xi^2, ...` reduced mod the `n`-th cyclotomic polynomial
    pub coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integer: Option<String>,
}

#[derive(Serialize)]
pub struct IrrepJson {
    pub irrep: String,
    pub dim: u32,
    pub values: Vec<ValueJson>,
}

#[derive(Serialize)]
pub struct CharTableJson {
    pub n: u32,
    pub order: u32,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<IrrepJson>,
}

fn value_json(v: &CycloInt) -> ValueJson {
    ValueJson {
        coeffs: v.coeffs().iter().map(ToString::to_string).collect(),
        integer: v.as_integer().ok().map(|x| x.to_string()),
    }
}

pub fn char_table(n: u32) -> sievekit::Result<CharTableJson> {
    let classes = conjugacy_classes(n)?
        .into_iter()
        .map(|c| ClassJson {
            label: c.label.to_string(),
            size: c.size(),
            representative: c.representative.to_string(),
            members: c.members.iter().map(ToString::to_string).collect(),
        })
        .collect();
    let irreducibles = irreducible_characters(n)?
        .into_iter()
        .map(|(irr, chi)| IrrepJson {
            irrep: irr.to_string(),
            dim: irr.dim(),
            values: chi.values.iter().map(value_json).collect(),
        })
        .collect();
    Ok(CharTableJson { n, order: 2 * n, classes, irreducibles })
}

/// Real part of the residue as a float. Display only.
fn approx(v: &CycloInt) -> Option<f64> {
    let n = v.conductor() as f64;
    let cs = v.coeffs_i64()?;
    Some(cs.iter().enumerate().map(|(j, &c)| c as f64 * (2.0 * PI * j as f64 / n).cos()).sum())
}

fn cell(v: &CycloInt) -> String {
    match v.as_integer() {
        Ok(x) => x.to_string(),
        Err(_) => match approx(v) {
            Some(x) => format!("{x:.4}"),
            None => "?".into(),
        },
    }
}

pub fn char_table_text(t: &CharTableJson, n: u32) -> sievekit::Result<String> {
    let mut out = String::new();
    let width = t.classes.iter().map(|c| c.label.len()).max().unwrap_or(8).max(8) + 2;
    let _ = writeln!(out, "I2({n}), order {}", t.order);
    let _ = write!(out, "{:<10}", "");
    for c in &t.classes {
        let _ = write!(out, "{:>width$}", c.label);
    }
    let _ = writeln!(out);
    let _ = write!(out, "{:<10}", "size");
    for c in &t.classes {
        let _ = write!(out, "{:>width$}", c.size);
    }
    let _ = writeln!(out);
    let chars = irreducible_characters(n)?;
    for (irr, chi) in &chars {
        let _ = write!(out, "{:<10}", irr.to_string());
        for v in &chi.values {
            let _ = write!(out, "{:>width$}", cell(v));
        }
        let _ = writeln!(out);
    }
    let _ = writeln!(
        out,
        "non-integer entries are decimal renderings of 2cos(2 pi j l / n), display only; use --json for exact values"
    );
    Ok(out)
}
