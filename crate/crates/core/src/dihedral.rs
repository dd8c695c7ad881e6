//! The dihedral group `I2(n) = <r, s | r^n = s^2 = e, rs = sr^{-1}>`.
//!
//! Vertices of the `n`-gon are labelled `1..=n`. `r` sends `i` to `i + 1` and
//! `s` sends `i` to `2 - i` (mod `n`), so `s` fixes vertex 1. Products compose
//! right to left: `(gh)(i) = g(h(i))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{two_cos, CycloInt};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DihedralElement {
    /// `r^l`
    Rotation(u32),
    /// `s r^l`
    Reflection(u32),
}

use DihedralElement::{Reflection, Rotation};

impl DihedralElement {
    pub fn identity() -> Self {
        Rotation(0)
    }

    pub fn is_reflection(&self) -> bool {
        matches!(self, Reflection(_))
    }

    pub fn index(&self) -> u32 {
        match *self {
            Rotation(l) | Reflection(l) => l,
        }
    }

    pub fn compose(&self, other: &Self, n: u32) -> Self {
        let m = |x: i64| x.rem_euclid(n as i64) as u32;
        match (*self, *other) {
            (Rotation(a), Rotation(b)) => Rotation(m(a as i64 + b as i64)),
            (Rotation(a), Reflection(b)) => Reflection(m(b as i64 - a as i64)),
            (Reflection(a), Rotation(b)) => Reflection(m(a as i64 + b as i64)),
            (Reflection(a), Reflection(b)) => Rotation(m(b as i64 - a as i64)),
        }
    }

    pub fn inverse(&self, n: u32) -> Self {
        match *self {
            Rotation(l) => Rotation((n - l % n) % n),
            Reflection(_) => *self,
        }
    }

    /// Image of vertex `i` in `1..=n`.
    pub fn apply(&self, i: u32, n: u32) -> u32 {
        let (i, n) = (i as i64, n as i64);
        let v = match *self {
            Rotation(l) => i - 1 + l as i64,
            Reflection(l) => 1 - l as i64 - i,
        };
        v.rem_euclid(n) as u32 + 1
    }

    pub fn all(n: u32) -> Vec<Self> {
        (0..n).map(Rotation).chain((0..n).map(Reflection)).collect()
    }
}

impl fmt::Display for DihedralElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Rotation(0) => write!(f, "e"),
            Rotation(1) => write!(f, "r"),
            Rotation(l) => write!(f, "r^{l}"),
            Reflection(0) => write!(f, "s"),
            Reflection(1) => write!(f, "sr"),
            Reflection(l) => write!(f, "sr^{l}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    Identity,
    /// `{r^l, r^{n-l}}` with `0 < l < n/2`
    RotationPair(u32),
    HalfTurn,
    /// all reflections, odd `n`
    Reflections,
    /// `{sr, sr^3, ...}`, even `n`
    OddReflections,
    /// `{s, sr^2, ...}`, even `n`
    EvenReflections,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::Identity => write!(f, "identity"),
            ClassLabel::RotationPair(l) => write!(f, "rotation-pair({l})"),
            ClassLabel::HalfTurn => write!(f, "half-turn"),
            ClassLabel::Reflections => write!(f, "reflections"),
            ClassLabel::OddReflections => write!(f, "odd-reflections"),
            ClassLabel::EvenReflections => write!(f, "even-reflections"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjClass {
    pub label: ClassLabel,
    pub representative: DihedralElement,
    pub members: Vec<DihedralElement>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("dihedral group needs n >= 3, got {n}")));
    }
    Ok(())
}

/// Classes in a fixed order: identity, rotation pairs by `l`, half-turn, reflections.
pub fn conjugacy_classes(n: u32) -> Result<Vec<ConjClass>> {
    check_n(n)?;
    let mut out =
        vec![ConjClass { label: ClassLabel::Identity, representative: Rotation(0), members: vec![Rotation(0)] }];
    for l in 1..n.div_ceil(2) {
        out.push(ConjClass {
            label: ClassLabel::RotationPair(l),
            representative: Rotation(l),
            members: vec![Rotation(l), Rotation(n - l)],
        });
    }
    if n % 2 == 1 {
        out.push(ConjClass {
            label: ClassLabel::Reflections,
            representative: Reflection(0),
            members: (0..n).map(Reflection).collect(),
        });
    } else {
        out.push(ConjClass {
            label: ClassLabel::HalfTurn,
            representative: Rotation(n / 2),
            members: vec![Rotation(n / 2)],
        });
        out.push(ConjClass {
            label: ClassLabel::OddReflections,
            representative: Reflection(1),
            members: (1..n).step_by(2).map(Reflection).collect(),
        });
        out.push(ConjClass {
            label: ClassLabel::EvenReflections,
            representative: Reflection(0),
            members: (0..n).step_by(2).map(Reflection).collect(),
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Irrep {
    Trivial,
    Det,
    /// `r -> -1`, `s -> 1`; even `n` only
    ChiB,
    ChiBDet,
    /// two-dimensional, `r` acts by rotation through `2 pi m / n`
    Z(u32),
}

impl fmt::Display for Irrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Irrep::Trivial => write!(f, "1"),
            Irrep::Det => write!(f, "det"),
            Irrep::ChiB => write!(f, "chi_b"),
            Irrep::ChiBDet => write!(f, "chi_b*det"),
            Irrep::Z(m) => write!(f, "z{m}"),
        }
    }
}

impl Irrep {
    pub fn dim(&self) -> u32 {
        if matches!(self, Irrep::Z(_)) {
            2
        } else {
            1
        }
    }
}

/// A class function, one value per class of [`conjugacy_classes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharVector {
    pub n: u32,
    pub values: Vec<CycloInt>,
}

impl CharVector {
    pub fn from_fn(n: u32, f: impl Fn(&ConjClass) -> CycloInt) -> Result<Self> {
        Ok(CharVector { n, values: conjugacy_classes(n)?.iter().map(f).collect() })
    }

    pub fn from_integers(n: u32, values: &[BigInt]) -> Result<Self> {
        let classes = conjugacy_classes(n)?;
        if values.len() != classes.len() {
            return Err(Error::ArityMismatch { expected: classes.len(), got: values.len() });
        }
        Ok(CharVector { n, values: values.iter().map(|v| CycloInt::from_int(n, v.clone())).collect() })
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(CycloInt::is_rational)
    }

    fn zip(&self, other: &Self, f: impl Fn(&CycloInt, &CycloInt) -> Result<CycloInt>) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::ConductorMismatch(self.n, other.n));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(CharVector { n: self.n, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, CycloInt::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, CycloInt::checked_sub)
    }

    /// Tensor product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, CycloInt::checked_mul)
    }
}

fn sign(n: u32, negative: bool) -> CycloInt {
    CycloInt::from_int(n, if negative { -1 } else { 1 })
}

fn irrep_value(n: u32, irrep: Irrep, class: &ConjClass) -> CycloInt {
    let g = class.representative;
    let refl = g.is_reflection();
    let odd_index = g.index() % 2 == 1;
    match irrep {
        Irrep::Trivial => CycloInt::one(n),
        Irrep::Det => sign(n, refl),
        Irrep::ChiB => sign(n, odd_index),
        Irrep::ChiBDet => sign(n, odd_index != refl),
        Irrep::Z(m) => {
            if refl {
                CycloInt::zero(n)
            } else {
                two_cos(n, m as i64 * g.index() as i64)
            }
        }
    }
}

pub fn irreducibles(n: u32) -> Result<Vec<Irrep>> {
    check_n(n)?;
    let mut out = vec![Irrep::Trivial, Irrep::Det];
    if n.is_multiple_of(2) {
        out.push(Irrep::ChiB);
        out.push(Irrep::ChiBDet);
    }
    out.extend((1..n.div_ceil(2)).map(Irrep::Z));
    Ok(out)
}

pub fn character(n: u32, irrep: Irrep) -> Result<CharVector> {
    CharVector::from_fn(n, |c| irrep_value(n, irrep, c))
}

/// Rows of the character table, in the order of [`irreducibles`].
pub fn irreducible_characters(n: u32) -> Result<Vec<(Irrep, CharVector)>> {
    irreducibles(n)?.into_iter().map(|irr| Ok((irr, character(n, irr)?))).collect()
}

/// `(chi_{z1}(C), chi_{-det}(C))`, the point at which `P(s, t)` is evaluated.
pub fn generator_values(n: u32, class: &ConjClass) -> Result<(CycloInt, CycloInt)> {
    check_n(n)?;
    if n.is_multiple_of(2) {
        return Err(Error::EvenNUnsupported(n));
    }
    let s = irrep_value(n, Irrep::Z(1), class);
    let t = irrep_value(n, Irrep::Det, class).neg();
    Ok((s, t))
}

/// `z_0 = 1 + det`, `z_1`, and `z_{k+1} = z_k z_1 - z_{k-1}` up to `kmax`.
pub fn z_sequence(n: u32, kmax: u32) -> Result<Vec<CharVector>> {
    let z0 = character(n, Irrep::Trivial)?.add(&character(n, Irrep::Det)?)?;
    let z1 = character(n, Irrep::Z(1))?;
    let mut out = vec![z0, z1.clone()];
    while out.len() <= kmax as usize {
        let k = out.len();
        let next = out[k - 1].mul(&z1)?.sub(&out[k - 2])?;
        out.push(next);
    }
    out.truncate(kmax as usize + 1);
    Ok(out)
}

pub fn zk_recursion_check(n: u32, kmax: u32) -> Result<bool> {
    check_n(n)?;
    if n.is_multiple_of(2) {
        return Err(Error::EvenNUnsupported(n));
    }
    if kmax > n {
        return Err(Error::OutOfRange(format!("kmax = {kmax} > n = {n}")));
    }
    let zs = z_sequence(n, n)?;
    let one_plus_det = character(n, Irrep::Trivial)?.add(&character(n, Irrep::Det)?)?;
    for (k, z) in zs.iter().enumerate().take(kmax as usize + 1) {
        let k = k as u32;
        let expected = if k == 0 || k == n {
            one_plus_det.clone()
        } else if k <= (n - 1) / 2 {
            character(n, Irrep::Z(k))?
        } else {
            // z_k = z_{n-k} beyond the irreducible range
            character(n, Irrep::Z(n - k))?
        };
        if *z != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `<chi, psi> = (1/2n) sum_C |C| chi(C) conj(psi(C))`, required to be an integer.
pub fn inner_product(chi: &CharVector, psi: &CharVector) -> Result<BigInt> {
    if chi.n != psi.n {
        return Err(Error::ConductorMismatch(chi.n, psi.n));
    }
    let n = chi.n;
    let classes = conjugacy_classes(n)?;
    let mut acc = CycloInt::zero(n);
    for ((c, a), b) in classes.iter().zip(&chi.values).zip(&psi.values) {
        let term = a.checked_mul(&b.conj())?.scale(&BigInt::from(c.size()));
        acc = acc.checked_add(&term)?;
    }
    let order = BigInt::from(2 * n);
    acc.div_exact_int(&order)
        .filter(CycloInt::is_rational)
        .map(|x| x.coeffs()[0].clone())
        .ok_or_else(|| Error::NonIntegral(format!("{acc} / {order}")))
}

/// Multiplicity of each irreducible in `chi`.
pub fn decompose_character(chi: &CharVector) -> Result<Vec<(Irrep, BigInt)>> {
    irreducible_characters(chi.n)?.into_iter().map(|(irr, psi)| Ok((irr, inner_product(chi, &psi)?))).collect()
}

/// True when every multiplicity is a nonnegative integer.
pub fn is_genuine_character(chi: &CharVector) -> Result<bool> {
    Ok(decompose_character(chi)?.iter().all(|(_, m)| !m.is_negative()))
}

/// Class index of a group element.
pub fn class_of(n: u32, g: DihedralElement) -> Result<usize> {
    conjugacy_classes(n)?
        .iter()
        .position(|c| c.members.contains(&g))
        .ok_or_else(|| Error::OutOfRange(format!("{g} is not in I2({n})")))
}
