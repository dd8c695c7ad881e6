//! Classical q-analogues in the single variable `q`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{Memo, Monomial, MultiPoly};

static FACTORIAL: Memo<u32, MultiPoly> = Memo::new();
static CARLITZ: Memo<u32, MultiPoly> = Memo::new();

fn q_pow(e: u32) -> MultiPoly {
    MultiPoly::monomial(&["q"], &[e], 1)
}

fn range_err(what: &str, detail: String) -> Error {
    Error::OutOfRange(format!("{what}: {detail}"))
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_int(n: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(&["q"]);
    for i in 0..n {
        p.add_term(Monomial::new(&[i]), BigInt::from(1));
    }
    p
}

pub fn q_factorial(n: u32) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one(&["q"]);
    }
    FACTORIAL.get_or_try_insert(n, || Ok(&q_factorial(n - 1) * &q_int(n))).expect("infallible")
}

pub fn q_binomial(n: u32, k: u32) -> Result<MultiPoly> {
    if k > n {
        return Err(range_err("q_binomial", format!("k = {k} > n = {n}")));
    }
    q_factorial(n).exact_div(&(&q_factorial(k) * &q_factorial(n - k)))
}

/// `[n; parts]_q = [n]! / prod [p_i]!`.
pub fn q_multinomial(n: u32, parts: &[u32]) -> Result<MultiPoly> {
    let total: u32 = parts.iter().sum();
    if total != n {
        return Err(range_err("q_multinomial", format!("parts sum to {total}, not {n}")));
    }
    let den = parts.iter().fold(MultiPoly::one(&["q"]), |acc, &p| &acc * &q_factorial(p));
    q_factorial(n).exact_div(&den)
}

/// MacMahon's `C_n(q) = [2n choose n]_q / [n+1]_q`.
pub fn q_catalan(n: u32) -> Result<MultiPoly> {
    q_binomial(2 * n, n)?.exact_div(&q_int(n + 1))
}

/// `N(n,k;q) = q^{k(k+1)} [n choose k][n choose k+1] / [n]`.
pub fn q_narayana(n: u32, k: u32) -> Result<MultiPoly> {
    if n == 0 || k >= n {
        return Err(range_err("q_narayana", format!("need 0 <= k < n, got n = {n}, k = {k}")));
    }
    let num = &q_binomial(n, k)? * &q_binomial(n, k + 1)?;
    Ok(num.exact_div(&q_int(n))?.shift(Monomial::new(&[k * (k + 1)])))
}

/// Dissections of an `n`-gon by `k` diagonals: `[n+k choose k+1][n-3 choose k] / [n+k]`.
pub fn q_kirkman(n: u32, k: u32) -> Result<MultiPoly> {
    if n < 3 || k > n - 3 {
        return Err(range_err("q_kirkman", format!("need n >= 3, k <= n-3, got n = {n}, k = {k}")));
    }
    let num = &q_binomial(n + k, k + 1)? * &q_binomial(n - 3, k)?;
    num.exact_div(&q_int(n + k))
}

/// Carlitz-Riordan `C~_{n+1} = sum_k q^k C~_k C~_{n-k}`, `C~_0 = 1`.
pub fn carlitz_riordan(n: u32) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one(&["q"]);
    }
    CARLITZ
        .get_or_try_insert(n, || {
            let m = n - 1;
            let mut acc = MultiPoly::zero(&["q"]);
            for k in 0..=m {
                let term = &(&q_pow(k) * &carlitz_riordan(k)) * &carlitz_riordan(m - k);
                acc = &acc + &term;
            }
            Ok(acc)
        })
        .expect("infallible")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> MultiPoly {
        MultiPoly::parse(text, &["q"]).unwrap()
    }

    fn at(p: &MultiPoly, x: i64) -> i64 {
        p.eval_i64(&[x]).unwrap().try_into().unwrap()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn basic_examples() {
        assert_eq!(q_int(3), q("1 + q + q^2"));
        assert_eq!(q_binomial(7, 0).unwrap(), q("1"));
        assert_eq!(q_binomial(5, 2).unwrap(), q("1 + q + 2*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6"));
        assert!(q_binomial(2, 3).is_err());
        assert_eq!(q_multinomial(4, &[2, 1, 1]).unwrap().eval_i64(&[1]).unwrap(), BigInt::from(12));
        assert!(q_multinomial(4, &[2, 1]).is_err());
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(q_catalan(0).unwrap(), q("1"));
        assert_eq!(q_catalan(2).unwrap(), q("1 + q^2"));
        assert_eq!(q_catalan(3).unwrap(), q("1 + q^2 + q^3 + q^4 + q^6"));
    }

    #[test]
    fn narayana_examples() {
        let n51 = q_narayana(5, 1).unwrap();
        assert_eq!(at(&n51, 1), 10);
        assert_eq!(at(&n51, -1), 2);
        for n in [3, 5, 7] {
            assert_eq!(q_narayana(n, 0).unwrap(), q("1"));
        }
        for n in 1..=10u32 {
            let total: i64 = (0..n).map(|k| at(&q_narayana(n, k).unwrap(), 1)).sum();
            assert_eq!(total, at(&q_catalan(n).unwrap(), 1));
        }
    }

    #[test]
    fn kirkman_examples() {
        assert_eq!(at(&q_kirkman(5, 1).unwrap(), 1), 5);
        assert_eq!(at(&q_kirkman(5, 2).unwrap(), 1), 5);
        for n in 3..=10 {
            assert_eq!(q_kirkman(n, 0).unwrap(), q("1"));
        }
        assert!(q_kirkman(5, 3).is_err());
    }

    #[test]
    fn carlitz_riordan_examples() {
        assert_eq!(carlitz_riordan(0), q("1"));
        assert_eq!(carlitz_riordan(1), q("1"));
        assert_eq!(carlitz_riordan(3), q("1 + 2*q + q^2 + q^3"));
        assert_eq!(at(&carlitz_riordan(3), -1), -1);
    }

    #[test]
    fn pascal_and_symmetry() {
        for n in 1..=12u32 {
            for k in 0..=n {
                let b = q_binomial(n, k).unwrap();
                assert_eq!(b, q_binomial(n, n - k).unwrap());
                assert_eq!(at(&b, 1) as u64, binom(n as u64, k as u64));
                if k >= 1 && k < n {
                    let rhs = &q_binomial(n - 1, k - 1).unwrap() + &(&q_pow(k) * &q_binomial(n - 1, k).unwrap());
                    assert_eq!(b, rhs, "n = {n}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn carlitz_riordan_at_minus_one() {
        for n in (2..=12).step_by(2) {
            assert_eq!(at(&carlitz_riordan(n), -1), 0, "n = {n}");
        }
        for k in 1..=6u32 {
            let v = at(&carlitz_riordan(2 * k - 1), -1);
            let e = (2 * k - 1) as u64 * (2 * k - 2) as u64 / 2;
            let sign = if e.is_multiple_of(2) { 1 } else { -1 };
            let catalan = binom(2 * (k - 1) as u64, (k - 1) as u64) / k as u64;
            assert_eq!(sign * v, catalan as i64, "k = {k}");
        }
        for n in 0..=10 {
            let catalan = binom(2 * n as u64, n as u64) / (n as u64 + 1);
            assert_eq!(at(&carlitz_riordan(n), 1) as u64, catalan);
        }
    }
}
