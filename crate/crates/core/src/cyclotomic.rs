//! Exact arithmetic in `Z[xi_n] = Z[q]/(Phi_n(q))`.
//!
//! Every value carries its conductor `n` and is stored as the unique reduced
//! residue of degree below `phi(n)`, so a value equals a rational integer iff
//! all of its non-constant coefficients vanish.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Memo, MultiPoly};

static PHI: Memo<u32, MultiPoly> = Memo::new();

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The `n`-th cyclotomic polynomial in `q`, as `(q^n - 1) / prod_{d | n, d < n} Phi_d`.
pub fn cyclotomic_poly(n: u32) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::OutOfRange("cyclotomic conductor must be >= 1".into()));
    }
    PHI.get_or_try_insert(n, || {
        let mut coeffs = vec![0i64; n as usize + 1];
        coeffs[0] = -1;
        coeffs[n as usize] = 1;
        let mut p = MultiPoly::univariate("q", &coeffs);
        for d in divisors(n).into_iter().filter(|&d| d < n) {
            p = p.exact_div(&cyclotomic_poly(d)?)?;
        }
        Ok(p)
    })
}

/// Low-to-high integer coefficients of `Phi_n`.
fn phi_coeffs(n: u32) -> Vec<BigInt> {
    let phi = cyclotomic_poly(n).expect("n >= 1");
    let deg = phi.total_degree().unwrap_or(0) as usize;
    let mut out = vec![BigInt::zero(); deg + 1];
    for (m, c) in phi.terms() {
        out[m.exp(0) as usize] = c.clone();
    }
    out
}

static PHI_VEC: Memo<u32, std::sync::Arc<Vec<BigInt>>> = Memo::new();

fn phi_vec(n: u32) -> std::sync::Arc<Vec<BigInt>> {
    PHI_VEC.get_or_try_insert(n, || Ok(std::sync::Arc::new(phi_coeffs(n)))).expect("infallible")
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count() as u32
}

/// An element of `Z[xi_n]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloInt {
    n: u32,
    coeffs: Vec<BigInt>,
}

impl CycloInt {
    /// Reduces a polynomial in `xi` (low-to-high coefficients, any length).
    pub fn from_coeffs(n: u32, mut v: Vec<BigInt>) -> Self {
        assert!(n >= 1, "conductor must be >= 1");
        let phi = phi_vec(n);
        let deg = phi.len() - 1;
        // Phi_n is monic
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for (j, pc) in phi.iter().enumerate().take(deg) {
                if !pc.is_zero() {
                    v[i - deg + j] -= &c * pc;
                }
            }
        }
        v.resize(deg, BigInt::zero());
        CycloInt { n, coeffs: v }
    }

    pub fn from_int(n: u32, c: impl Into<BigInt>) -> Self {
        let deg = euler_phi(n) as usize;
        let mut coeffs = vec![BigInt::zero(); deg];
        let c = c.into();
        if deg == 0 {
            unreachable!("phi(n) >= 1");
        }
        coeffs[0] = c;
        CycloInt { n, coeffs }
    }

    pub fn zero(n: u32) -> Self {
        Self::from_int(n, 0)
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// `xi_n^k`, with `k` taken mod `n`.
    pub fn xi_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = BigInt::one();
        Self::from_coeffs(n, v)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn as_integer(&self) -> Result<BigInt> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    fn check(&self, other: &CycloInt) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.n, other.n))
        }
    }

    pub fn checked_add(&self, other: &CycloInt) -> Result<CycloInt> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycloInt { n: self.n, coeffs })
    }

    pub fn checked_sub(&self, other: &CycloInt) -> Result<CycloInt> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycloInt { n: self.n, coeffs })
    }

    pub fn checked_mul(&self, other: &CycloInt) -> Result<CycloInt> {
        self.check(other)?;
        let len = self.coeffs.len() + other.coeffs.len();
        let mut v = vec![BigInt::zero(); len.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Ok(CycloInt::from_coeffs(self.n, v))
    }

    pub fn scale(&self, c: &BigInt) -> CycloInt {
        CycloInt { n: self.n, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn neg(&self) -> CycloInt {
        self.scale(&-BigInt::one())
    }

    pub fn pow(&self, mut e: u32) -> CycloInt {
        let mut base = self.clone();
        let mut acc = CycloInt::one(self.n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same conductor");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same conductor");
            }
        }
        acc
    }

    /// Complex conjugate, `xi^j -> xi^{-j}`.
    pub fn conj(&self) -> CycloInt {
        let n = self.n as usize;
        let mut v = vec![BigInt::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            v[(n - j) % n] += c;
        }
        CycloInt::from_coeffs(self.n, v)
    }

    /// Exact division by a rational integer, if every coefficient is divisible.
    pub fn div_exact_int(&self, d: &BigInt) -> Option<CycloInt> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !(c % d).is_zero() {
                return None;
            }
            coeffs.push(c / d);
        }
        Some(CycloInt { n: self.n, coeffs })
    }

    /// Small-integer view of the coefficient vector, for serialization.
    pub fn coeffs_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] (mod Phi_{})", parts.join(", "), self.n)
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Image of a univariate `p(q)` under `q -> xi_n^l`, reduced mod `Phi_n`.
pub fn eval_at_root(p: &MultiPoly, n: u32, l: i64) -> Result<CycloInt> {
    if p.arity() != 1 {
        return Err(Error::ArityMismatch { expected: 1, got: p.arity() });
    }
    let l = l.rem_euclid(n as i64) as u64;
    let mut v = vec![BigInt::zero(); n as usize];
    for (m, c) in p.terms() {
        let e = (m.exp(0) as u64 * l) % n as u64;
        v[e as usize] += c;
    }
    Ok(CycloInt::from_coeffs(n, v))
}

/// Evaluates a polynomial at a point of `Z[xi_n]^k`.
pub fn eval_at(p: &MultiPoly, point: &[CycloInt]) -> Result<CycloInt> {
    if point.len() != p.arity() {
        return Err(Error::ArityMismatch { expected: p.arity(), got: point.len() });
    }
    let n = point.first().map(|x| x.n).unwrap_or(1);
    for x in point {
        if x.n != n {
            return Err(Error::ConductorMismatch(n, x.n));
        }
    }
    let powers: Vec<Vec<CycloInt>> = point
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mut row = vec![CycloInt::one(n)];
            for k in 1..=p.degree_in(i) as usize {
                let next = row[k - 1].checked_mul(x).expect("same conductor");
                row.push(next);
            }
            row
        })
        .collect();
    let mut acc = CycloInt::zero(n);
    for (m, c) in p.terms() {
        let mut term = CycloInt::from_int(n, c.clone());
        for (i, row) in powers.iter().enumerate() {
            let e = m.exp(i) as usize;
            if e > 0 {
                term = term.checked_mul(&row[e])?;
            }
        }
        acc = acc.checked_add(&term)?;
    }
    Ok(acc)
}

/// Evaluates `P(s, t)` at a conjugacy-class point `(s_val, t_val)`.
pub fn eval_bivariate_at_class(p: &MultiPoly, s_val: &CycloInt, t_val: &CycloInt) -> Result<CycloInt> {
    if p.arity() != 2 {
        return Err(Error::ArityMismatch { expected: 2, got: p.arity() });
    }
    if s_val.n != t_val.n {
        return Err(Error::ConductorMismatch(s_val.n, t_val.n));
    }
    eval_at(p, &[s_val.clone(), t_val.clone()])
}

/// `xi^l + xi^{-l}`, i.e. `2 cos(2 pi l / n)` held exactly.
pub fn two_cos(n: u32, l: i64) -> CycloInt {
    CycloInt::xi_pow(n, l).checked_add(&CycloInt::xi_pow(n, -l)).expect("same conductor")
}

pub fn is_negative_unit(x: &CycloInt) -> bool {
    x.is_rational() && x.coeffs[0].is_negative() && x.coeffs[0].abs().is_one()
}
