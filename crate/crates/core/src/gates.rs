//! Named identity gates. Each gate runs a finite grid of exact comparisons
//! and keeps the cases that failed.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dihedral::zk_recursion_check;
use crate::error::Result;
use crate::fibonomial::{
    fibonomial, hook_content_product, narayana_difference_form, narayana_identity_check, q_narayana_difference_check,
    schur_geometric_oracle, to_ab, Partition,
};
use crate::polyring::MultiPoly;
use crate::qanalog::{carlitz_riordan, q_catalan};
use crate::qtcat::{q_inverse_slice, qt_catalan, schroder_slice, schroder_slice_oracle};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gate {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Gate {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} ({} cases)", self.name, self.cases)?;
        for why in &self.failures {
            write!(f, "\n    {why}")?;
        }
        Ok(())
    }
}

/// Runs `check` over `cases` in parallel. A case fails on `Ok(false)` or on an error.
fn run<C>(name: &str, cases: Vec<C>, check: impl Fn(&C) -> Result<bool> + Sync) -> Gate
where
    C: fmt::Debug + Sync,
{
    let failures = cases
        .par_iter()
        .filter_map(|c| match check(c) {
            Ok(true) => None,
            Ok(false) => Some(format!("{c:?}")),
            Err(e) => Some(format!("{c:?}: {e}")),
        })
        .collect();
    Gate { name: name.to_string(), cases: cases.len(), failures }
}

fn binom2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// `C_n(q, 1)` as a polynomial in `q` alone.
pub fn qt_catalan_at_t_one(n: u32) -> Result<MultiPoly> {
    qt_catalan(n)?.substitute(&[("q", MultiPoly::var(&["q"], "q")?), ("t", MultiPoly::one(&["q"]))])
}

fn catalan(n: u32) -> BigInt {
    let mut c = BigInt::from(1);
    for i in 0..n {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

pub fn qt_catalan_q_inverse() -> Gate {
    run("q^C(n,2) C_n(q,1/q) = C_n(q), n <= 8", (1..=8).collect(), |&n| {
        Ok(q_inverse_slice(&qt_catalan(n)?, binom2(n))? == q_catalan(n)?)
    })
}

pub fn qt_catalan_t_one() -> Gate {
    run("C_n(q,1) = Carlitz-Riordan C~_n(q), n <= 8", (1..=8).collect(), |&n| {
        Ok(qt_catalan_at_t_one(n)? == carlitz_riordan(n))
    })
}

pub fn carlitz_riordan_at_minus_one() -> Gate {
    let mut cases: Vec<(&str, u32)> = (1..=6).map(|k| ("even", 2 * k)).collect();
    cases.extend((1..=6).map(|k| ("odd", k)));
    run("C~_n(-1) = 0 (n even <= 12), (-1)^C(2k-1,2) C~_{2k-1}(-1) = C_{k-1} (k <= 6)", cases, |&(kind, m)| {
        if kind == "even" {
            return Ok(carlitz_riordan(m).eval_i64(&[-1])? == BigInt::from(0));
        }
        let v = carlitz_riordan(2 * m - 1).eval_i64(&[-1])?;
        let v = if binom2(2 * m - 1) % 2 == 1 { -v } else { v };
        Ok(v == catalan(m - 1))
    })
}

pub fn hook_content_vs_ssyt() -> Gate {
    let cases: Vec<(Partition, u32)> =
        (0..=5).flat_map(Partition::all_of).flat_map(|l| (1..=7).map(move |n| (l.clone(), n))).collect();
    run("hook-content (s,t) formula = SSYT sum, |lambda| <= 5, n <= 7", cases, |(l, n)| {
        let oracle = schur_geometric_oracle(l, *n)?;
        if l.len() > *n as usize {
            // no tableaux with more rows than letters
            return Ok(oracle.is_zero());
        }
        Ok(to_ab(&hook_content_product(l, *n)?)? == oracle)
    })
}

pub fn fibonomial_polynomial_nonnegative() -> Gate {
    let cases: Vec<(u32, u32)> = (0..=12).flat_map(|n| (0..=n).map(move |k| (n, k))).collect();
    run("Fibonomials are polynomials with nonnegative coefficients, n <= 12", cases, |&(n, k)| {
        Ok(fibonomial(n, k)?.has_nonnegative_coefficients())
    })
}

pub fn narayana_three_forms() -> Gate {
    let cases: Vec<(u32, u32)> = (1..=9).flat_map(|n| (0..n).map(move |k| (n, k))).collect();
    run("(s,t)-Narayana quotient forms agree, n <= 9", cases, |&(n, k)| narayana_identity_check(n, k))
}

/// The difference form is not an `(s,t)` identity; it only survives at `(2,-1)`.
pub fn narayana_difference_form_collapse() -> Gate {
    let cases: Vec<(u32, u32)> = (1..=9).flat_map(|n| (0..n).map(move |k| (n, k))).collect();
    run("(s,t)-Narayana difference form: fails as a polynomial, holds at (2,-1), n <= 9", cases, |&(n, k)| {
        Ok(narayana_difference_form(n, k)? == (false, true))
    })
}

pub fn q_narayana_difference() -> Gate {
    let cases: Vec<(u32, u32)> = (1..=9).flat_map(|n| (0..n).map(move |k| (n, k))).collect();
    run("q-Narayana difference form with the q weight correction, n <= 9", cases, |&(n, k)| {
        q_narayana_difference_check(n, k)
    })
}

pub fn z_recursion() -> Gate {
    run("z_k recursion with z_0 = z_n = 1 + det, odd n <= 9", vec![3, 5, 7, 9], |&n| zk_recursion_check(n, n))
}

pub fn identity_gates() -> Vec<Gate> {
    vec![
        qt_catalan_q_inverse(),
        qt_catalan_t_one(),
        carlitz_riordan_at_minus_one(),
        hook_content_vs_ssyt(),
        fibonomial_polynomial_nonnegative(),
        narayana_three_forms(),
        narayana_difference_form_collapse(),
        q_narayana_difference(),
        z_recursion(),
    ]
}

pub fn schroder_gate() -> Gate {
    let cases: Vec<(u32, u32)> = (1..=8).flat_map(|n| (0..=n).map(move |d| (n, d))).collect();
    run("Schroder path sum on (q,1/q) = multinomial slice, 0 <= d <= n <= 8", cases, |&(n, d)| {
        Ok(schroder_slice(n, d)? == schroder_slice_oracle(n, d)?)
    })
}
