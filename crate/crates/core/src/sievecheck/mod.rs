//! Per-class verdicts for cyclic and dihedral sieving, and the named suites.

pub mod table1;

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{eval_at_root, eval_bivariate_at_class, CycloInt};
use crate::dihedral::{conjugacy_classes, decompose_character, generator_values, DihedralElement};
use crate::error::{Error, Result};
use crate::fibonomial::{fibonomial, st_catalan, st_narayana, ST};
use crate::orbits::{enumerate, Family, FamilySpec, OrbitFamily, MULTISUBSET_MAX_K};
use crate::polyring::MultiPoly;
use crate::qanalog::{q_binomial, q_catalan, q_kirkman, q_narayana};
use crate::qtcat::{triangulation_sieving_poly, Sign};
use table1::Variant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Cyclic,
    Dihedral,
    /// character-table cell check (no generating polynomial)
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub class: String,
    pub size: u64,
    pub fixed: u64,
    /// the integer value, or the reduced residue when it is not rational
    pub value: String,
    pub integral: bool,
    #[serde(rename = "match")]
    pub matches: bool,
}

impl ClassRecord {
    fn new(class: String, size: u64, fixed: u64, value: &CycloInt) -> Self {
        match value.as_integer() {
            Ok(v) => ClassRecord {
                class,
                size,
                fixed,
                matches: v == BigInt::from(fixed),
                value: v.to_string(),
                integral: true,
            },
            Err(_) => ClassRecord { class, size, fixed, value: value.to_string(), integral: false, matches: false },
        }
    }

    fn failed(class: String, size: u64, fixed: u64, why: String) -> Self {
        ClassRecord { class, size, fixed, value: why, integral: false, matches: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub irrep: String,
    pub multiplicity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SievingReport {
    pub suite: String,
    pub kind: ReportKind,
    pub family: FamilySpec,
    pub polynomial: String,
    /// a deliberately wrong input that is expected to fail
    pub control: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub records: Vec<ClassRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Multiplicity>>,
    pub pass: bool,
}

impl SievingReport {
    fn new(kind: ReportKind, family: FamilySpec, polynomial: String, records: Vec<ClassRecord>) -> Self {
        let pass = records.iter().all(|r| r.matches);
        SievingReport {
            suite: String::new(),
            kind,
            family,
            polynomial,
            control: false,
            note: None,
            records,
            decomposition: None,
            pass,
        }
    }

    fn into_control(mut self, note: impl Into<String>) -> Self {
        self.control = true;
        self.note = Some(note.into());
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Controls are expected to fail, everything else to pass.
    pub fn as_expected(&self) -> bool {
        self.pass != self.control
    }
}

impl fmt::Display for SievingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.pass, self.control) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (control, expected)",
            (true, true) => "PASS (control, UNEXPECTED)",
        };
        let kind = match self.kind {
            ReportKind::Cyclic => "cyclic",
            ReportKind::Dihedral => "dihedral",
            ReportKind::Table => "table",
        };
        write!(f, "{verdict:<26} {kind:<8} {}  X = {}", self.family, self.polynomial)?;
        if let Some(note) = &self.note {
            write!(f, "  [{note}]")?;
        }
        for r in &self.records {
            let mark = if r.matches { "ok" } else { "MISMATCH" };
            write!(
                f,
                "\n    {:<20} |C| = {:<3} fixed = {:<6} value = {:<8} {mark}",
                r.class, r.size, r.fixed, r.value
            )?;
        }
        Ok(())
    }
}

/// Compares `X(xi_n^l)` with the number of objects fixed by `r^l`, for `l` in `0..n`.
pub fn verify_cyclic(fam: &OrbitFamily, x_q: &MultiPoly) -> Result<SievingReport> {
    let n = fam.n();
    let records = (0..n)
        .into_par_iter()
        .map(|l| {
            let fixed = fam.fixed_by(&DihedralElement::Rotation(l));
            let v = eval_at_root(x_q, n, l as i64)?;
            Ok(ClassRecord::new(DihedralElement::Rotation(l).to_string(), 1, fixed, &v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SievingReport::new(ReportKind::Cyclic, fam.spec, x_q.to_string(), records))
}

/// Compares `P(chi_{z1}(C), -det(C))` with the fixed count of each class `C` (odd `n`).
pub fn verify_dihedral(fam: &OrbitFamily, p_st: &MultiPoly) -> Result<SievingReport> {
    let n = fam.n();
    if n.is_multiple_of(2) {
        return Err(Error::EvenNUnsupported(n));
    }
    let classes = conjugacy_classes(n)?;
    let fixed = fam.class_fixed_counts()?;
    let mut records = Vec::new();
    for (c, &fx) in classes.iter().zip(&fixed) {
        let (s, t) = generator_values(n, c)?;
        let v = eval_bivariate_at_class(p_st, &s, &t)?;
        records.push(ClassRecord::new(c.label.to_string(), c.size() as u64, fx, &v));
    }
    let mut report = SievingReport::new(ReportKind::Dihedral, fam.spec, p_st.to_string(), records);
    let decomposition = decompose_character(&fam.permutation_character()?)?;
    report.decomposition = Some(
        decomposition
            .into_iter()
            .map(|(i, m)| Multiplicity { irrep: i.to_string(), multiplicity: m.to_string() })
            .collect(),
    );
    Ok(report)
}

/// Table cells for one family, every class of `I2(n)`, either parity.
pub fn verify_table_cells(fam: &OrbitFamily, variant: Variant) -> Result<SievingReport> {
    let spec = fam.spec;
    let classes = conjugacy_classes(spec.n)?;
    let fixed = fam.class_fixed_counts()?;
    let mut records = Vec::new();
    let mut formulas = Vec::new();
    for (c, &fx) in classes.iter().zip(&fixed) {
        if c.representative.is_reflection() {
            formulas.push(format!("{}: {}", c.label, table1::reflection_formula(&spec, c.label, variant)));
        }
        records.push(match table1::cell_value(&spec, c, variant) {
            Ok(v) => ClassRecord::new(c.label.to_string(), c.size() as u64, fx, &v),
            Err(e) => ClassRecord::failed(c.label.to_string(), c.size() as u64, fx, e.to_string()),
        });
    }
    let poly = format!("rotations: {}; {}", table1::rotation_poly(&spec)?, formulas.join("; "));
    Ok(SievingReport::new(ReportKind::Table, spec, poly, records))
}

/// Only the vertex-axis reflection cell, with the printed formula.
fn printed_erratum_cells(family: Family, n: u32, ks: std::ops::RangeInclusive<u32>) -> Result<SievingReport> {
    let classes = conjugacy_classes(n)?;
    let class = classes.last().expect("even n has reflection classes");
    let mut records = Vec::new();
    for k in ks {
        let spec = FamilySpec::new(family, n, Some(k))?;
        let fam = enumerate(spec)?;
        let fx = fam.fixed_points(class)?;
        let v = table1::reflection_value(&spec, class.label, Variant::Printed)?;
        records.push(ClassRecord::new(
            format!("{} k={k}", class.label),
            class.size() as u64,
            fx,
            &CycloInt::from_int(n, v),
        ));
    }
    let spec = FamilySpec { family, n, k: None };
    let probe = FamilySpec { family, n, k: Some(0) };
    let formula = table1::reflection_formula(&probe, class.label, Variant::Printed).to_string();
    Ok(SievingReport::new(ReportKind::Table, spec, formula, records))
}

pub const SUITES: [&str; 8] = [
    "example-1.2",
    "subsets",
    "multisubsets",
    "ncpartitions",
    "narayana",
    "triangulations",
    "table-1-odd",
    "table-1-even",
];

/// Inclusive `n` window applied to every suite grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub min: u32,
    pub max: u32,
}

impl Default for NRange {
    fn default() -> Self {
        NRange { min: 0, max: u32::MAX }
    }
}

impl NRange {
    fn filter(&self, ns: impl IntoIterator<Item = u32>) -> Vec<u32> {
        ns.into_iter().filter(|n| (self.min..=self.max).contains(n)).collect()
    }
}

type Job = Box<dyn Fn() -> Result<Vec<SievingReport>> + Send + Sync>;

fn job(f: impl Fn() -> Result<Vec<SievingReport>> + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn cyclic_job(family: Family, n: u32, k: Option<u32>, poly: fn(u32, u32) -> Result<MultiPoly>) -> Job {
    job(move || {
        let fam = enumerate(FamilySpec::new(family, n, k)?)?;
        Ok(vec![verify_cyclic(&fam, &poly(n, k.unwrap_or(0))?)?])
    })
}

fn dihedral_job(family: Family, n: u32, k: Option<u32>, poly: fn(u32, u32) -> Result<MultiPoly>) -> Job {
    job(move || {
        let fam = enumerate(FamilySpec::new(family, n, k)?)?;
        Ok(vec![verify_dihedral(&fam, &poly(n, k.unwrap_or(0))?)?])
    })
}

fn example_jobs(r: NRange) -> Vec<Job> {
    let mut jobs = Vec::new();
    let ns10 = r.filter(3..=10);
    let ns9 = r.filter(3..=9);
    for &n in &ns10 {
        for k in 0..=MULTISUBSET_MAX_K {
            jobs.push(cyclic_job(Family::Multisubsets, n, Some(k), |n, k| q_binomial(n + k - 1, k)));
        }
        for k in 0..=n {
            jobs.push(cyclic_job(Family::Subsets, n, Some(k), q_binomial));
        }
        jobs.push(cyclic_job(Family::NcPartitions, n, None, |n, _| q_catalan(n)));
        jobs.push(cyclic_job(Family::Triangulations, n, None, |n, _| q_catalan(n - 2)));
    }
    for &n in &ns9 {
        for k in 0..n {
            jobs.push(cyclic_job(Family::Narayana, n, Some(k), q_narayana));
        }
        for k in 0..=n - 3 {
            jobs.push(cyclic_job(Family::Dissections, n, Some(k), q_kirkman));
        }
    }
    if !jobs.is_empty() {
        jobs.push(job(|| {
            let fam = enumerate(FamilySpec::new(Family::Subsets, 4, Some(2))?)?;
            Ok(vec![verify_cyclic(&fam, &q_binomial(4, 1)?)?.into_control("wrong polynomial [4 choose 1]_q")])
        }));
        jobs.push(job(|| {
            let fam = enumerate(FamilySpec::new(Family::Narayana, 5, Some(1))?)?;
            Ok(vec![verify_cyclic(&fam, &q_narayana(5, 2)?)?.into_control("Narayana index off by one")])
        }));
    }
    jobs
}

fn odd(r: NRange, max: u32) -> Vec<u32> {
    r.filter((3..=max).step_by(2))
}

fn dihedral_suite_jobs(suite: &str, r: NRange) -> Result<Vec<Job>> {
    let mut jobs = Vec::new();
    match suite {
        "subsets" => {
            for n in odd(r, 9) {
                for k in 0..=n {
                    jobs.push(dihedral_job(Family::Subsets, n, Some(k), fibonomial));
                }
            }
            if !jobs.is_empty() {
                jobs.push(job(|| {
                    let fam = enumerate(FamilySpec::new(Family::Subsets, 5, Some(2))?)?;
                    let wrong = MultiPoly::parse("s^6 + 4*s^4*t + 5*s^2*t^2 + t^3", &ST)?;
                    Ok(vec![verify_dihedral(&fam, &wrong)?.into_control("miscomputed {5 choose 2}")])
                }));
            }
        }
        "multisubsets" => {
            for n in odd(r, 7) {
                for k in 0..=4 {
                    jobs.push(dihedral_job(Family::Multisubsets, n, Some(k), |n, k| fibonomial(n + k - 1, k)));
                }
            }
            if !jobs.is_empty() {
                jobs.push(job(|| {
                    let fam = enumerate(FamilySpec::new(Family::Multisubsets, 3, Some(2))?)?;
                    Ok(vec![verify_dihedral(&fam, &fibonomial(3, 2)?)?
                        .into_control("subset Fibonomial used for multisubsets")])
                }));
            }
        }
        "ncpartitions" => {
            for n in odd(r, 9) {
                jobs.push(dihedral_job(Family::NcPartitions, n, None, |n, _| st_catalan(n)));
            }
            if !jobs.is_empty() {
                jobs.push(job(|| {
                    let fam = enumerate(FamilySpec::new(Family::NcPartitions, 5, None)?)?;
                    Ok(vec![verify_dihedral(&fam, &fibonomial(10, 5)?)?.into_control("missing division by {n+1}")])
                }));
            }
        }
        "narayana" => {
            for n in odd(r, 9) {
                for k in 0..n {
                    jobs.push(dihedral_job(Family::Narayana, n, Some(k), st_narayana));
                }
            }
            if !jobs.is_empty() {
                jobs.push(job(|| {
                    let fam = enumerate(FamilySpec::new(Family::Narayana, 5, Some(2))?)?;
                    let wrong = &fibonomial(5, 2)? * &fibonomial(5, 3)?;
                    Ok(vec![verify_dihedral(&fam, &wrong)?.into_control("missing division by {n}")])
                }));
            }
        }
        "triangulations" => {
            for n in r.filter([5, 7, 9, 11]) {
                jobs.push(job(move || triangulation_pair(n)));
            }
        }
        _ => return Err(Error::UnknownSuite(suite.to_string())),
    }
    Ok(jobs)
}

/// Both prefactor signs for one `n`. Whichever fails is the control; if both
/// pass, the `+1` report is marked as the control so the suite fails.
fn triangulation_pair(n: u32) -> Result<Vec<SievingReport>> {
    let fam = enumerate(FamilySpec::new(Family::Triangulations, n, None)?)?;
    let minus = verify_dihedral(&fam, &triangulation_sieving_poly(n, Sign::Minus)?)?;
    let plus = verify_dihedral(&fam, &triangulation_sieving_poly(n, Sign::Plus)?)?;
    let (minus, plus) = match (minus.pass, plus.pass) {
        (true, false) => (minus.with_note("sign -1: selected"), plus.into_control("sign +1: rejected by brute force")),
        (false, true) => (minus.into_control("sign -1: rejected by brute force"), plus.with_note("sign +1: selected")),
        (true, true) => (minus.with_note("sign -1"), plus.into_control("sign +1: both signs pass, ambiguous")),
        (false, false) => (minus.with_note("sign -1: no sign passes"), plus.with_note("sign +1: no sign passes")),
    };
    Ok(vec![minus, plus])
}

fn table_jobs(even: bool, r: NRange) -> Vec<Job> {
    let ns = if even { r.filter([4, 6, 8]) } else { r.filter([3, 5, 7, 9]) };
    let mut jobs = Vec::new();
    for &n in &ns {
        jobs.push(job(move || {
            table1::table_specs(n)?
                .into_par_iter()
                .map(|spec| {
                    let fam = enumerate(spec)?;
                    let report = verify_table_cells(&fam, Variant::Corrected)?;
                    let corrected = conjugacy_classes(n)?.iter().any(|c| table1::has_erratum(&spec, c.label));
                    Ok(if corrected {
                        report.with_note("vertex-axis reflection cell uses the corrected formula")
                    } else {
                        report
                    })
                })
                .collect()
        }));
    }
    if ns.is_empty() {
        return jobs;
    }
    if even {
        for &n in &ns {
            jobs.push(job(move || {
                Ok(vec![
                    printed_erratum_cells(Family::Subsets, n, 0..=n)?
                        .into_control("printed k-subset formula, vertex-axis reflections"),
                    printed_erratum_cells(Family::Multisubsets, n, 0..=4)?
                        .into_control("printed k-multisubset formula, vertex-axis reflections"),
                ])
            }));
        }
    } else {
        jobs.push(job(|| {
            // the 2/(n-1) factor dropped from the reflection cell
            let spec = FamilySpec::new(Family::Triangulations, 5, None)?;
            let fam = enumerate(spec)?;
            let mut report = verify_table_cells(&fam, Variant::Corrected)?;
            let refl = report.records.last_mut().expect("reflection record");
            let wrong = q_catalan(2)?.eval_i64(&[-1])?;
            refl.matches = wrong == BigInt::from(refl.fixed);
            refl.value = wrong.to_string();
            report.pass = report.records.iter().all(|r| r.matches);
            report.polynomial = "reflections: C_{n-3}(q) at q=-1 (factor 2/(n-1) dropped)".into();
            Ok(vec![report.into_control("perturbed triangulation cell")])
        }));
    }
    jobs
}

/// Runs a named suite. Jobs run in parallel; reports come back in grid order.
pub fn verify_suite(suite: &str, range: NRange) -> Result<Vec<SievingReport>> {
    let jobs = match suite {
        "example-1.2" => example_jobs(range),
        "table-1-odd" => table_jobs(false, range),
        "table-1-even" => table_jobs(true, range),
        other => dihedral_suite_jobs(other, range)?,
    };
    let batches = jobs.par_iter().map(|j| j()).collect::<Result<Vec<_>>>()?;
    let mut reports: Vec<SievingReport> = batches.into_iter().flatten().collect();
    for r in &mut reports {
        r.suite = suite.to_string();
    }
    Ok(reports)
}

/// Every non-control report passed and every control failed.
pub fn all_as_expected(reports: &[SievingReport]) -> bool {
    reports.iter().all(SievingReport::as_expected)
}
