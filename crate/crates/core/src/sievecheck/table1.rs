//! Character values of the permutation representations in the I2(n) character table,
//! written as q-analogue evaluations, checked against brute-force fixed counts.
//!
//! Two printed cells for even `n` (vertex-axis reflections, k-subsets and
//! k-multisubsets) disagree with brute force. Both the printed and the
//! corrected expressions are kept, so the disagreement stays visible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::{eval_at_root, CycloInt};
use crate::dihedral::{ClassLabel, ConjClass, DihedralElement};
use crate::error::{Error, Result};
use crate::orbits::{Family, FamilySpec};
use crate::polyring::MultiPoly;
use crate::qanalog::{q_binomial, q_catalan, q_narayana};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Printed,
    Corrected,
}

/// `[n choose k]_q`, zero outside `0 <= k <= n`.
fn qb(n: i64, k: i64) -> Result<MultiPoly> {
    if n < 0 || k < 0 || k > n {
        return Ok(MultiPoly::zero(&["q"]));
    }
    q_binomial(n as u32, k as u32)
}

fn at_minus_one(p: &MultiPoly) -> Result<BigInt> {
    p.evaluate_int(&[BigInt::from(-1)])
}

/// `a [n1 k1] + b [n2 k2] + ...` at `q = -1`.
fn combo(terms: &[(i64, i64, i64)]) -> Result<BigInt> {
    let mut acc = BigInt::zero();
    for &(c, n, k) in terms {
        acc += BigInt::from(c) * at_minus_one(&qb(n, k)?)?;
    }
    Ok(acc)
}

fn ratio(num: BigInt, den: i64) -> Result<BigInt> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{num}/{den}")));
    }
    Ok(q)
}

/// The q-analogue whose values at `xi_n^l` give the rotation columns.
pub fn rotation_poly(spec: &FamilySpec) -> Result<MultiPoly> {
    let (n, k) = (spec.n, spec.k());
    match spec.family {
        Family::Subsets => q_binomial(n, k),
        Family::Multisubsets => q_binomial(n + k - 1, k),
        Family::NcPartitions => q_catalan(n),
        Family::Triangulations => q_catalan(n - 2),
        Family::Narayana => q_narayana(n, k),
        Family::Dissections => Err(Error::OutOfRange("dissections have no character-table row".into())),
    }
}

/// Human-readable form of the reflection-column entry.
pub fn reflection_formula(spec: &FamilySpec, label: ClassLabel, variant: Variant) -> &'static str {
    use ClassLabel::*;
    use Family::*;
    match (spec.family, label, variant) {
        (Subsets, EvenReflections, Variant::Printed) => "[n k] + 2[n-2 k-1] + [n-2 k-2] at q=-1",
        (Subsets, EvenReflections, Variant::Corrected) => "[n-2 k] + 2[n-2 k-1] + [n-2 k-2] at q=-1",
        (Multisubsets, EvenReflections, Variant::Printed) => "[n+k-2 k] + 2[n+k-3 k-1] + [n+k-3 k-2] at q=-1",
        (Multisubsets, EvenReflections, Variant::Corrected) => "[n+k+1 k] + 2[n+k k-1] + [n+k-1 k-2] at q=-1",
        (Triangulations, Reflections, _) => "2/(n-1) C_{n-3}(q) at q=-1",
        (Triangulations, OddReflections, _) => "0",
        (Triangulations, EvenReflections, _) => "4/n C_{n-2}(q) at q=-1",
        _ => "X(q) at q=-1",
    }
}

/// Whether this cell has a printed form that differs from the corrected one.
pub fn has_erratum(spec: &FamilySpec, label: ClassLabel) -> bool {
    label == ClassLabel::EvenReflections && matches!(spec.family, Family::Subsets | Family::Multisubsets)
}

pub fn reflection_value(spec: &FamilySpec, label: ClassLabel, variant: Variant) -> Result<BigInt> {
    use ClassLabel::*;
    let (n, k) = (spec.n as i64, spec.k() as i64);
    match (spec.family, label) {
        (Family::Subsets, EvenReflections) => match variant {
            Variant::Printed => combo(&[(1, n, k), (2, n - 2, k - 1), (1, n - 2, k - 2)]),
            Variant::Corrected => combo(&[(1, n - 2, k), (2, n - 2, k - 1), (1, n - 2, k - 2)]),
        },
        (Family::Multisubsets, EvenReflections) => match variant {
            Variant::Printed => combo(&[(1, n + k - 2, k), (2, n + k - 3, k - 1), (1, n + k - 3, k - 2)]),
            Variant::Corrected => combo(&[(1, n + k + 1, k), (2, n + k, k - 1), (1, n + k - 1, k - 2)]),
        },
        (Family::Triangulations, Reflections) => ratio(2 * at_minus_one(&q_catalan(spec.n - 3)?)?, n - 1),
        (Family::Triangulations, OddReflections) => Ok(BigInt::zero()),
        (Family::Triangulations, EvenReflections) => ratio(4 * at_minus_one(&q_catalan(spec.n - 2)?)?, n),
        (_, Reflections | OddReflections | EvenReflections) => at_minus_one(&rotation_poly(spec)?),
        _ => Err(Error::OutOfRange(format!("{label} is not a reflection class"))),
    }
}

/// Table entry for a class, as an element of `Z[xi_n]`.
pub fn cell_value(spec: &FamilySpec, class: &ConjClass, variant: Variant) -> Result<CycloInt> {
    match class.representative {
        DihedralElement::Rotation(l) => eval_at_root(&rotation_poly(spec)?, spec.n, l as i64),
        DihedralElement::Reflection(_) => Ok(CycloInt::from_int(spec.n, reflection_value(spec, class.label, variant)?)),
    }
}

/// Family grid covered by the table for one `n`.
pub fn table_specs(n: u32) -> Result<Vec<FamilySpec>> {
    let mut out = Vec::new();
    out.extend((0..=n).map(|k| FamilySpec::new(Family::Subsets, n, Some(k))).collect::<Result<Vec<_>>>()?);
    out.extend((0..=4).map(|k| FamilySpec::new(Family::Multisubsets, n, Some(k))).collect::<Result<Vec<_>>>()?);
    out.push(FamilySpec::new(Family::NcPartitions, n, None)?);
    out.extend((0..n).map(|k| FamilySpec::new(Family::Narayana, n, Some(k))).collect::<Result<Vec<_>>>()?);
    out.push(FamilySpec::new(Family::Triangulations, n, None)?);
    Ok(out)
}
