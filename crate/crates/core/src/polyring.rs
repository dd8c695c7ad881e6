//! Sparse multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! A [`MultiPoly`] carries its ordered variable list; binary operations between
//! polynomials over different variable lists are errors, never implicit
//! embeddings. Terms are kept in graded-lexicographic order, which is also the
//! order used for exact division and for the canonical text rendering
//! (total degree descending, then lexicographic on the exponent vector).

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const MAX_VARS: usize = 4;

/// Exponent vector, padded with zeros past the polynomial's arity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; MAX_VARS]);

impl Monomial {
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "monomial arity {} > {MAX_VARS}", exps.len());
        let mut m = [0; MAX_VARS];
        m[..exps.len()].copy_from_slice(exps);
        Monomial(m)
    }

    pub fn exps(&self) -> &[u32; MAX_VARS] {
        &self.0
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0[var]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees `other.divides(self)`.
    fn quotient(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (e, d) in m.iter_mut().zip(other.0.iter()) {
            *e -= d;
        }
        Monomial(m)
    }

    fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut m = self.0;
        m.swap(i, j);
        Monomial(m)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut m = self.0;
        for (e, r) in m.iter_mut().zip(rhs.0.iter()) {
            *e += r;
        }
        Monomial(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An exact polynomial in at most [`MAX_VARS`] named variables.
///
/// Invariant: no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        MultiPoly { vars: vars.into(), terms: BTreeMap::new() }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::default(), c.into());
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, 1)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p.var_index(name)?;
        let mut e = [0; MAX_VARS];
        e[idx] = 1;
        p.add_term(Monomial(e), BigInt::one());
        Ok(p)
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: &[u32], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        assert_eq!(exps.len(), p.vars.len(), "exponent vector length must equal arity");
        p.add_term(Monomial::new(exps), c.into());
        p
    }

    /// Univariate polynomial from low-to-high integer coefficients.
    pub fn univariate(var: &str, coeffs: &[i64]) -> Self {
        let mut p = Self::zero(&[var]);
        for (e, &c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::new(&[e as u32]), BigInt::from(c));
        }
        p
    }

    pub fn from_terms<S: AsRef<str>>(vars: &[S], terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn with_vars_of(other: &MultiPoly) -> Self {
        MultiPoly { vars: other.vars.clone(), terms: BTreeMap::new() }
    }

    /// Adds `c * m` in place, keeping the no-zero-coefficient invariant.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&Monomial::new(exps)).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    /// The integer value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch { left: self.vars.to_vec(), right: other.vars.to_vec() })
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(other)?;
        let mut out = MultiPoly::with_vars_of(self);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        let mut out = MultiPoly::with_vars_of(self);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, x)| (*m, x * c)).collect();
        out
    }

    /// Multiplies by the monomial `m`.
    pub fn shift(&self, m: Monomial) -> MultiPoly {
        let mut out = MultiPoly::with_vars_of(self);
        out.terms = self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect();
        out
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d` by leading-term elimination in graded-lex order.
    ///
    /// Fails with [`Error::NotDivisible`] as soon as a leading term of the
    /// running remainder is not divisible by the leading term of `d`.
    pub fn exact_div(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check_vars(d)?;
        let (lm, lc) = match d.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quo = MultiPoly::with_vars_of(self);
        while let Some((m, c)) = rem.terms.last_key_value() {
            let (qc, r) = c.div_rem(&lc);
            if !lm.divides(m) || !r.is_zero() {
                return Err(Error::NotDivisible { dividend: self.to_string(), divisor: d.to_string() });
            }
            let qm = m.quotient(&lm);
            for (dm, dc) in &d.terms {
                rem.add_term(qm * *dm, -(&qc * dc));
            }
            quo.terms.insert(qm, qc);
        }
        Ok(quo)
    }

    pub fn evaluate_int(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: point.len() });
        }
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(point.len());
        for (i, x) in point.iter().enumerate() {
            let max = self.degree_in(i) as usize;
            let mut row = Vec::with_capacity(max + 1);
            row.push(BigInt::one());
            for k in 1..=max {
                let next = &row[k - 1] * x;
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, row) in powers.iter().enumerate() {
                term *= &row[m.exp(i) as usize];
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Convenience wrapper around [`MultiPoly::evaluate_int`] for small points.
    pub fn eval_i64(&self, point: &[i64]) -> Result<BigInt> {
        let pt: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
        self.evaluate_int(&pt)
    }

    /// Substitutes polynomials for variables.
    ///
    /// Every assigned polynomial must share one target variable list. A
    /// variable of `self` without an assignment maps to the variable of the
    /// same name in the target list.
    pub fn substitute(&self, assignment: &[(&str, MultiPoly)]) -> Result<MultiPoly> {
        let Some((_, first)) = assignment.first() else {
            return Ok(self.clone());
        };
        let target = first.vars.clone();
        let mut images: Vec<Option<MultiPoly>> = vec![None; self.arity()];
        for (name, image) in assignment {
            let idx = self.var_index(name)?;
            if image.vars != target {
                return Err(Error::VariableMismatch { left: target.to_vec(), right: image.vars.to_vec() });
            }
            images[idx] = Some(image.clone());
        }
        let images: Vec<MultiPoly> = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| match img {
                Some(p) => Ok(p),
                None => MultiPoly::var(&target, &self.vars[i]),
            })
            .collect::<Result<_>>()?;
        let powers: Vec<Vec<MultiPoly>> =
            images.iter().enumerate().map(|(i, img)| power_table(img, self.degree_in(i))).collect();
        let mut out = MultiPoly { vars: target, terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&out.vars, c.clone());
            for (i, row) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    term = &term * &row[e];
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Same terms over a renamed variable list of equal arity.
    pub fn rename(&self, vars: &[&str]) -> Result<MultiPoly> {
        if vars.len() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), got: vars.len() });
        }
        let mut out = MultiPoly::zero(vars);
        out.terms = self.terms.clone();
        Ok(out)
    }

    pub fn swap_vars(&self, v1: &str, v2: &str) -> Result<MultiPoly> {
        let (i, j) = (self.var_index(v1)?, self.var_index(v2)?);
        let mut out = MultiPoly::with_vars_of(self);
        out.terms = self.terms.iter().map(|(m, c)| (m.swapped(i, j), c.clone())).collect();
        Ok(out)
    }

    pub fn is_symmetric(&self, v1: &str, v2: &str) -> Result<bool> {
        Ok(self.swap_vars(v1, v2)? == *self)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Writes a symmetric bivariate `f(x, y)` as `g(e1, e2)` with
    /// `g(x + y, x*y) = f(x, y)`; the result is over variables `["e1", "e2"]`.
    pub fn to_elementary_basis(&self) -> Result<MultiPoly> {
        if self.arity() != 2 {
            return Err(Error::ArityMismatch { expected: 2, got: self.arity() });
        }
        let (x, y) = (self.vars[0].as_str(), self.vars[1].as_str());
        if !self.is_symmetric(x, y)? {
            return Err(Error::NotSymmetric(x.to_string(), y.to_string()));
        }
        let e1 = &MultiPoly::var(&self.vars, x)? + &MultiPoly::var(&self.vars, y)?;
        let e2 = MultiPoly::monomial(&self.vars, &[1, 1], 1);
        let mut e1_powers = vec![MultiPoly::one(&self.vars)];
        let mut rem = self.clone();
        let mut out = MultiPoly::zero(&["e1", "e2"]);
        while let Some((m, c)) = rem.leading_term() {
            let (a, b) = (m.exp(0), m.exp(1));
            // symmetric leading term in grlex has a >= b
            debug_assert!(a >= b);
            let c = c.clone();
            let d = (a - b) as usize;
            while e1_powers.len() <= d {
                let next = e1_powers.last().unwrap() * &e1;
                e1_powers.push(next);
            }
            let elim = (&e1_powers[d] * &e2.pow(b)).scale(&c);
            rem = &rem - &elim;
            out.add_term(Monomial::new(&[a - b, b]), c);
        }
        Ok(out)
    }

    /// Parses the canonical text format (`^`, `*`, `+`, `-`, integer literals,
    /// parentheses) over the given variable list.
    pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<MultiPoly> {
        let vars: Vec<&str> = vars.iter().map(|v| v.as_ref()).collect();
        let mut parser = Parser { src: text.as_bytes(), pos: 0, vars: &vars };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.err("unexpected trailing input"));
        }
        Ok(p)
    }
}

fn power_table(p: &MultiPoly, max: u32) -> Vec<MultiPoly> {
    let mut row = vec![MultiPoly::one(&p.vars)];
    for k in 1..=max as usize {
        let next = &row[k - 1] * p;
        row.push(next);
    }
    row
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if m.degree() == 0 || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in self.vars.iter().zip(m.exps().iter()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

macro_rules! checked_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics on a variable-list mismatch; use the `checked_*` form to recover.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

checked_binop!(Add, add, checked_add);
checked_binop!(Sub, sub, checked_sub);
checked_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let mut out = MultiPoly::with_vars_of(self);
        out.terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(&e).map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(MultiPoly::constant(self.vars, n))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                MultiPoly::var(self.vars, name)
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

/// Memo table keyed by small integers, shared read-mostly across threads.
pub(crate) struct Memo<K, V> {
    table: std::sync::OnceLock<std::sync::RwLock<HashMap<K, V>>>,
}

impl<K: std::hash::Hash + Eq + Copy, V: Clone> Memo<K, V> {
    pub(crate) const fn new() -> Self {
        Memo { table: std::sync::OnceLock::new() }
    }

    pub(crate) fn get_or_try_insert(&self, key: K, f: impl FnOnce() -> Result<V>) -> Result<V> {
        let table = self.table.get_or_init(Default::default);
        if let Some(v) = table.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let v = f()?;
        table.write().expect("memo lock").entry(key).or_insert_with(|| v.clone());
        Ok(v)
    }
}
