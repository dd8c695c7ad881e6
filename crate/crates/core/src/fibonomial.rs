//! Generalized Fibonacci polynomials `{n}_{s,t}` and everything built from them.
//!
//! All polynomials here live in the variables `(s, t)`, except the Schur
//! oracle, which works in `(a, b)` with `s = a + b`, `t = -ab`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{Memo, Monomial, MultiPoly};
use crate::qanalog;

pub const ST: [&str; 2] = ["s", "t"];
pub const AB: [&str; 2] = ["a", "b"];

static FIB: Memo<u32, MultiPoly> = Memo::new();

/// `{0} = 0`, `{1} = 1`, `{n+2} = s{n+1} + t{n}`.
pub fn fib_poly(n: u32) -> MultiPoly {
    match n {
        0 => MultiPoly::zero(&ST),
        1 => MultiPoly::one(&ST),
        _ => FIB
            .get_or_try_insert(n, || {
                let s = MultiPoly::monomial(&ST, &[1, 0], 1);
                let t = MultiPoly::monomial(&ST, &[0, 1], 1);
                Ok(&(&s * &fib_poly(n - 1)) + &(&t * &fib_poly(n - 2)))
            })
            .expect("infallible"),
    }
}

/// `{n}! = {1}{2}...{n}`.
pub fn fib_factorial(n: u32) -> MultiPoly {
    (1..=n).fold(MultiPoly::one(&ST), |acc, i| &acc * &fib_poly(i))
}

pub fn fibonomial(n: u32, k: u32) -> Result<MultiPoly> {
    if k > n {
        return Err(Error::OutOfRange(format!("fibonomial: k = {k} > n = {n}")));
    }
    // {n}{n-1}...{n-k+1} / {k}! keeps the intermediate products small
    let num = (n - k + 1..=n).fold(MultiPoly::one(&ST), |acc, i| &acc * &fib_poly(i));
    num.exact_div(&fib_factorial(k))
}

/// `{2n choose n} / {n+1}`.
pub fn st_catalan(n: u32) -> Result<MultiPoly> {
    fibonomial(2 * n, n)?.exact_div(&fib_poly(n + 1))
}

/// `{n choose k}{n choose k+1} / {n}`.
pub fn st_narayana(n: u32, k: u32) -> Result<MultiPoly> {
    if n == 0 || k >= n {
        return Err(Error::OutOfRange(format!("st_narayana: need 0 <= k < n, got n = {n}, k = {k}")));
    }
    (&fibonomial(n, k)? * &fibonomial(n, k + 1)?).exact_div(&fib_poly(n))
}

/// The four closed forms of the `(s,t)`-Narayana number, in order.
pub fn narayana_expressions(n: u32, k: u32) -> Result<[MultiPoly; 4]> {
    if n == 0 || k >= n {
        return Err(Error::OutOfRange(format!("narayana: need 0 <= k < n, got n = {n}, k = {k}")));
    }
    let e0 = st_narayana(n, k)?;
    let e1 = (&fibonomial(n, k + 1)? * &fibonomial(n - 1, k)?).exact_div(&fib_poly(n - k))?;
    let e2 = (&fibonomial(n, k)? * &fibonomial(n - 1, k)?).exact_div(&fib_poly(k + 1))?;
    let e3 = &(&fibonomial(n - 1, k)? * &fibonomial(n + 1, k + 1)?) - &(&fibonomial(n, k)? * &fibonomial(n, k + 1)?);
    Ok([e0, e1, e2, e3])
}

/// The quotient forms (expressions 0, 1, 2) agree as polynomials.
pub fn narayana_identity_check(n: u32, k: u32) -> Result<bool> {
    let [e0, e1, e2, _] = narayana_expressions(n, k)?;
    Ok(e0 == e1 && e0 == e2)
}

/// The difference form (expression 3) is not a polynomial identity in `(s, t)`;
/// it only survives the collapse `(s, t) = (2, -1)`. Returns
/// `(holds_as_polynomial, holds_at_two_minus_one)`.
pub fn narayana_difference_form(n: u32, k: u32) -> Result<(bool, bool)> {
    let [e0, _, _, e3] = narayana_expressions(n, k)?;
    let at = |p: &MultiPoly| p.eval_i64(&[2, -1]);
    Ok((e0 == e3, at(&e0)? == at(&e3)?))
}

/// q-version of the difference form, with the weight correction it needs:
/// `[n-1 choose k][n+1 choose k+1] - q [n choose k][n choose k+1] = q^{-k(k+1)} N(n,k;q)`.
pub fn q_narayana_difference_check(n: u32, k: u32) -> Result<bool> {
    use qanalog::{q_binomial, q_narayana};
    if n == 0 || k >= n {
        return Err(Error::OutOfRange(format!("narayana: need 0 <= k < n, got n = {n}, k = {k}")));
    }
    let a = &q_binomial(n - 1, k)? * &q_binomial(n + 1, k + 1)?;
    let b = (&q_binomial(n, k)? * &q_binomial(n, k + 1)?).shift(Monomial::new(&[1]));
    let lhs = (&a - &b).shift(Monomial::new(&[k * (k + 1)]));
    Ok(lhs == q_narayana(n, k)?)
}

fn ab_substitution() -> Vec<(&'static str, MultiPoly)> {
    let a = MultiPoly::monomial(&AB, &[1, 0], 1);
    let b = MultiPoly::monomial(&AB, &[0, 1], 1);
    vec![("s", &a + &b), ("t", -(&a * &b))]
}

/// Applies `s -> a + b`, `t -> -ab`.
pub fn to_ab(p: &MultiPoly) -> Result<MultiPoly> {
    p.substitute(&ab_substitution())
}

/// Homogenizes a univariate `f(q)` to `b^deg f(a/b)`.
fn homogenize(f: &MultiPoly, deg: u32) -> MultiPoly {
    let mut out = MultiPoly::zero(&AB);
    for (m, c) in f.terms() {
        let e = m.exp(0);
        out.add_term(Monomial::new(&[e, deg - e]), c.clone());
    }
    out
}

/// Checks `{n}(a+b, -ab) = sum a^i b^{n-1-i}` and
/// `{n choose k}(a+b, -ab) = b^{k(n-k)} [n choose k]_{q=a/b}` for all `k`.
pub fn xy_specialization_check(n: u32) -> Result<bool> {
    if n == 0 {
        return Ok(to_ab(&fib_poly(0))?.is_zero());
    }
    if to_ab(&fib_poly(n))? != homogenize(&qanalog::q_int(n), n - 1) {
        return Ok(false);
    }
    for k in 0..=n {
        let lhs = to_ab(&fibonomial(n, k)?)?;
        let rhs = homogenize(&qanalog::q_binomial(n, k)?, k * (n - k));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::OutOfRange(format!("not a partition: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width).map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32).collect();
        Partition { parts }
    }

    /// Cells `(i, j)`, zero-based row and column.
    pub fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i as u32, j)))
    }

    pub fn hook(&self, (i, j): (u32, u32)) -> u32 {
        let arm = self.parts[i as usize] - j - 1;
        let leg = self.parts.iter().skip(i as usize + 1).filter(|&&p| p > j).count() as u32;
        arm + leg + 1
    }

    pub fn content((i, j): (u32, u32)) -> i64 {
        j as i64 - i as i64
    }

    /// `b(λ) = sum (i-1) λ_i`.
    pub fn b(&self) -> u32 {
        self.parts.iter().enumerate().map(|(i, &p)| i as u32 * p).sum()
    }

    /// All partitions of `m`, in reverse lexicographic order.
    pub fn all_of(m: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(-t)^{b(λ)} prod_x {n + c(x)} / {h(x)}`.
pub fn hook_content_product(lambda: &Partition, n: u32) -> Result<MultiPoly> {
    if lambda.len() > n as usize {
        return Err(Error::OutOfRange(format!("{lambda} has more than {n} parts")));
    }
    let mut num = MultiPoly::one(&ST);
    let mut den = MultiPoly::one(&ST);
    for x in lambda.cells() {
        let c = n as i64 + Partition::content(x);
        num = &num * &fib_poly(c as u32);
        den = &den * &fib_poly(lambda.hook(x));
    }
    let b = lambda.b();
    let sign = if b.is_multiple_of(2) { 1 } else { -1 };
    let prefactor = MultiPoly::monomial(&ST, &[0, b], sign);
    Ok(&num.exact_div(&den)? * &prefactor)
}

pub const SCHUR_MAX_SIZE: u32 = 6;
pub const SCHUR_MAX_N: u32 = 7;

/// `s_λ(a^{n-1}, a^{n-2} b, ..., b^{n-1})` by summing over semistandard tableaux.
pub fn schur_geometric_oracle(lambda: &Partition, n: u32) -> Result<MultiPoly> {
    if lambda.size() > SCHUR_MAX_SIZE {
        return Err(Error::ScaleExceeded {
            family: "schur oracle".into(),
            param: format!("|λ| = {}", lambda.size()),
            limit: SCHUR_MAX_SIZE,
        });
    }
    if n > SCHUR_MAX_N {
        return Err(Error::ScaleExceeded {
            family: "schur oracle".into(),
            param: format!("n = {n}"),
            limit: SCHUR_MAX_N,
        });
    }
    let cells: Vec<(u32, u32)> = lambda.cells().collect();
    let mut filling = vec![0u32; cells.len()];
    let mut counts: std::collections::BTreeMap<(u32, u32), u64> = Default::default();

    // cells are in row-major order, so left and upper neighbours are already filled
    fn place(
        idx: usize,
        cells: &[(u32, u32)],
        lambda: &Partition,
        n: u32,
        filling: &mut [u32],
        counts: &mut std::collections::BTreeMap<(u32, u32), u64>,
    ) {
        if idx == cells.len() {
            let (mut ea, mut eb) = (0, 0);
            for &v in filling.iter() {
                ea += n - v;
                eb += v - 1;
            }
            *counts.entry((ea, eb)).or_default() += 1;
            return;
        }
        let (i, j) = cells[idx];
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(filling[idx - 1]);
        }
        if i > 0 {
            let above: usize = lambda.parts()[..i as usize - 1].iter().sum::<u32>() as usize + j as usize;
            lo = lo.max(filling[above] + 1);
        }
        for v in lo..=n {
            filling[idx] = v;
            place(idx + 1, cells, lambda, n, filling, counts);
        }
    }
    place(0, &cells, lambda, n, &mut filling, &mut counts);

    let mut out = MultiPoly::zero(&AB);
    for ((ea, eb), c) in counts {
        out.add_term(Monomial::new(&[ea, eb]), BigInt::from(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(text: &str) -> MultiPoly {
        MultiPoly::parse(text, &ST).unwrap()
    }

    fn ab(text: &str) -> MultiPoly {
        MultiPoly::parse(text, &AB).unwrap()
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn fib_examples() {
        assert!(fib_poly(0).is_zero());
        assert_eq!(fib_poly(1), st("1"));
        assert_eq!(fib_poly(3), st("s^2 + t"));
        assert_eq!(fib_poly(4), st("s^3 + 2*s*t"));
    }

    #[test]
    fn fibonomial_examples() {
        assert_eq!(fibonomial(6, 0).unwrap(), st("1"));
        assert_eq!(fibonomial(4, 2).unwrap(), st("s^4 + 3*s^2*t + 2*t^2"));
        assert_eq!(fibonomial(5, 2).unwrap(), st("s^6 + 5*s^4*t + 7*s^2*t^2 + 2*t^3"));
        assert!(fibonomial(2, 3).is_err());
    }

    #[test]
    fn catalan_and_narayana_examples() {
        assert_eq!(st_catalan(2).unwrap(), st("s^2 + 2*t"));
        for n in [3, 5] {
            assert_eq!(st_narayana(n, 0).unwrap(), st("1"));
        }
        let catalan = [1i64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(st_catalan(n as u32).unwrap().eval_i64(&[2, -1]).unwrap(), BigInt::from(c));
        }
    }

    #[test]
    fn collapse_at_two_minus_one() {
        for m in 0..=12u32 {
            assert_eq!(fib_poly(m).eval_i64(&[2, -1]).unwrap(), BigInt::from(m));
        }
    }

    #[test]
    fn narayana_identity_small() {
        assert!(narayana_identity_check(5, 2).unwrap());
        assert!(narayana_identity_check(7, 3).unwrap());
        for n in 1..=7 {
            assert!(narayana_identity_check(n, 0).unwrap());
        }
    }

    #[test]
    fn narayana_difference_form_only_at_collapse() {
        for n in 1..=9 {
            for k in 0..n {
                assert_eq!(narayana_difference_form(n, k).unwrap(), (false, true), "n = {n}, k = {k}");
                assert!(q_narayana_difference_check(n, k).unwrap(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn xy_examples() {
        assert_eq!(to_ab(&fib_poly(3)).unwrap(), ab("a^2 + a*b + b^2"));
        assert_eq!(to_ab(&fibonomial(4, 2).unwrap()).unwrap(), ab("a^4 + a^3*b + 2*a^2*b^2 + a*b^3 + b^4"));
        for n in 0..=10 {
            assert!(xy_specialization_check(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn partition_basics() {
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::all_of(8).len(), 22);
        let l = part(&[3, 1]);
        assert_eq!(l.conjugate(), part(&[2, 1, 1]));
        assert_eq!(l.b(), 1);
        let hooks: Vec<u32> = l.cells().map(|x| l.hook(x)).collect();
        assert_eq!(hooks, vec![4, 2, 1, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn partition_statistic_identities() {
        for m in 0..=8 {
            for l in Partition::all_of(m) {
                let c: i64 = l.cells().map(Partition::content).sum();
                let h: u32 = l.cells().map(|x| l.hook(x)).sum();
                let lc = l.conjugate();
                assert_eq!(c, lc.b() as i64 - l.b() as i64, "{l}");
                assert_eq!(h, lc.b() + l.b() + l.size(), "{l}");
            }
        }
    }

    #[test]
    fn hook_content_examples() {
        for n in 1..=6 {
            assert_eq!(hook_content_product(&part(&[1]), n).unwrap(), fib_poly(n));
            for k in 0..=4 {
                let row = hook_content_product(&part(&[k]), n).unwrap();
                assert_eq!(row, fibonomial(n + k - 1, k).unwrap());
            }
        }
        assert_eq!(hook_content_product(&part(&[2]), 2).unwrap(), st("s^2 + t"));
        assert!(hook_content_product(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn schur_oracle_examples() {
        assert_eq!(schur_geometric_oracle(&part(&[1]), 3).unwrap(), ab("a^2 + a*b + b^2"));
        assert_eq!(schur_geometric_oracle(&part(&[1, 1]), 2).unwrap(), ab("a*b"));
        assert_eq!(schur_geometric_oracle(&part(&[2]), 2).unwrap(), ab("a^2 + a*b + b^2"));
        assert!(schur_geometric_oracle(&part(&[7]), 3).is_err());
        assert!(schur_geometric_oracle(&part(&[1]), 8).is_err());
    }

    #[test]
    fn hook_content_matches_schur() {
        for m in 0..=5 {
            for l in Partition::all_of(m) {
                for n in (l.len() as u32).max(1)..=7 {
                    let lhs = to_ab(&hook_content_product(&l, n).unwrap()).unwrap();
                    assert_eq!(lhs, schur_geometric_oracle(&l, n).unwrap(), "λ = {l}, n = {n}");
                }
            }
        }
    }
}
