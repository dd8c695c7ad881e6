//! Dyck and Schröder path statistics, the q,t-Catalan and q,t-Schröder
//! polynomials, and the polygon sieving polynomials built from them.
//!
//! Paths run from `(0,0)` to `(n,n)` with steps `N = (0,1)`, `E = (1,0)`,
//! `D = (1,1)` and never go below `y = x`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{eval_bivariate_at_class, CycloInt};
use crate::dihedral::{conjugacy_classes, generator_values, ClassLabel};
use crate::error::{Error, Result};
use crate::orbits::{enumerate, Family, FamilySpec};
use crate::polyring::{Memo, Monomial, MultiPoly};
use crate::qanalog;

pub const QT: [&str; 2] = ["q", "t"];
pub const CATALAN_MAX_N: u32 = 10;
pub const SCHRODER_MAX_N: u32 = 8;

/// A Dyck path stored as `a_i`, the number of north steps before the `(i+1)`-th east step.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyckPath {
    a: Vec<u32>,
}

impl DyckPath {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        let n = a.len() as u32;
        let ok = a.iter().enumerate().all(|(i, &h)| h > i as u32 && h <= n) && a.windows(2).all(|w| w[0] <= w[1]);
        if !ok {
            return Err(Error::OutOfRange(format!("not a Dyck path: {a:?}")));
        }
        Ok(DyckPath { a })
    }

    /// Parses a word in `N` and `E`.
    pub fn from_word(word: &str) -> Result<Self> {
        let mut a = Vec::new();
        let mut h = 0;
        for c in word.chars() {
            match c {
                'N' => h += 1,
                'E' => a.push(h),
                _ => return Err(Error::Parse { pos: a.len() + h as usize, msg: format!("unexpected `{c}`") }),
            }
        }
        if h as usize != a.len() {
            return Err(Error::OutOfRange(format!("unbalanced Dyck word {word}")));
        }
        Self::new(a)
    }

    pub fn heights(&self) -> &[u32] {
        &self.a
    }

    pub fn size(&self) -> u32 {
        self.a.len() as u32
    }

    pub fn area(&self) -> u32 {
        self.a.iter().enumerate().map(|(i, &h)| h - i as u32 - 1).sum()
    }

    /// Diagonal points `j_1 < j_2 < ...` strictly between `0` and `n` visited by the bounce path.
    pub fn bounce_touches(&self) -> Vec<u32> {
        let n = self.size();
        let mut out = Vec::new();
        let mut j = 0;
        while j < n {
            let h = self.a[j as usize];
            if h == n {
                break;
            }
            out.push(h);
            j = h;
        }
        out
    }

    pub fn bounce(&self) -> u32 {
        let n = self.size();
        self.bounce_touches().iter().map(|j| n - j).sum()
    }

    pub fn all(n: u32) -> Vec<DyckPath> {
        fn go(i: u32, n: u32, cur: &mut Vec<u32>, out: &mut Vec<DyckPath>) {
            if i == n {
                out.push(DyckPath { a: cur.clone() });
                return;
            }
            let lo = cur.last().copied().unwrap_or(0).max(i + 1);
            for h in lo..=n {
                cur.push(h);
                go(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut h = 0;
        for &ai in &self.a {
            while h < ai {
                f.write_str("N")?;
                h += 1;
            }
            f.write_str("E")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    N,
    E,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchroderPath {
    steps: Vec<Step>,
}

impl SchroderPath {
    pub fn from_word(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'N' => Ok(Step::N),
                'E' => Ok(Step::E),
                'D' => Ok(Step::D),
                _ => Err(Error::Parse { pos: i, msg: format!("unexpected `{c}`") }),
            })
            .collect::<Result<Vec<_>>>()?;
        let (mut x, mut y) = (0i64, 0i64);
        for s in &steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
                Step::D => {
                    x += 1;
                    y += 1
                }
            }
            if x > y {
                return Err(Error::OutOfRange(format!("{word} goes below the diagonal")));
            }
        }
        if x != y {
            return Err(Error::OutOfRange(format!("{word} does not end on the diagonal")));
        }
        Ok(SchroderPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn diagonal_steps(&self) -> u32 {
        self.steps.iter().filter(|&&s| s == Step::D).count() as u32
    }

    /// North steps add their height above the diagonal; so do diagonal steps.
    pub fn area(&self) -> u32 {
        let (mut x, mut y, mut area) = (0u32, 0u32, 0u32);
        for s in &self.steps {
            match s {
                Step::N => {
                    area += y - x;
                    y += 1;
                }
                Step::E => x += 1,
                Step::D => {
                    area += y - x;
                    x += 1;
                    y += 1;
                }
            }
        }
        area
    }

    /// The Dyck path left after deleting every diagonal step.
    pub fn collapse(&self) -> DyckPath {
        let mut a = Vec::new();
        let mut h = 0;
        for s in &self.steps {
            match s {
                Step::N => h += 1,
                Step::E => a.push(h),
                Step::D => {}
            }
        }
        DyckPath { a }
    }

    /// Bounce of the collapsed path, plus one for each bounce point `T_i` (including 0)
    /// lying strictly left of each diagonal step, measured in collapsed coordinates.
    pub fn bounce(&self) -> u32 {
        let dyck = self.collapse();
        let mut starts = vec![0];
        starts.extend(dyck.bounce_touches());
        let mut total = dyck.bounce();
        let mut x = 0;
        for s in &self.steps {
            match s {
                Step::E => x += 1,
                Step::D => total += starts.iter().filter(|&&p| p < x).count() as u32,
                Step::N => {}
            }
        }
        total
    }

    pub fn all(n: u32) -> Vec<SchroderPath> {
        fn go(x: u32, y: u32, n: u32, cur: &mut Vec<Step>, out: &mut Vec<SchroderPath>) {
            if x == n && y == n {
                out.push(SchroderPath { steps: cur.clone() });
                return;
            }
            for (s, nx, ny, ok) in
                [(Step::N, x, y + 1, y < n), (Step::E, x + 1, y, x < y), (Step::D, x + 1, y + 1, x < n && y < n)]
            {
                if ok {
                    cur.push(s);
                    go(nx, ny, n, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(0, 0, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
                Step::D => "D",
            })?;
        }
        Ok(())
    }
}

fn counts_to_poly(counts: HashMap<(u32, u32), u64>) -> MultiPoly {
    let mut p = MultiPoly::zero(&QT);
    for ((a, b), c) in counts {
        p.add_term(Monomial::new(&[a, b]), BigInt::from(c));
    }
    p
}

fn merge(mut x: HashMap<(u32, u32), u64>, y: HashMap<(u32, u32), u64>) -> HashMap<(u32, u32), u64> {
    for (k, v) in y {
        *x.entry(k).or_default() += v;
    }
    x
}

fn scale_check(what: &str, n: u32, limit: u32) -> Result<()> {
    if n > limit {
        return Err(Error::ScaleExceeded { family: what.into(), param: format!("n = {n}"), limit });
    }
    Ok(())
}

static CATALAN: Memo<u32, MultiPoly> = Memo::new();
static SCHRODER: Memo<u32, std::sync::Arc<Vec<MultiPoly>>> = Memo::new();

/// `C_n(q,t) = sum over Dyck paths of q^area t^bounce`.
pub fn qt_catalan(n: u32) -> Result<MultiPoly> {
    scale_check("qt_catalan", n, CATALAN_MAX_N)?;
    CATALAN.get_or_try_insert(n, || {
        let counts = DyckPath::all(n)
            .par_iter()
            .fold(HashMap::new, |mut acc, p| {
                *acc.entry((p.area(), p.bounce())).or_default() += 1;
                acc
            })
            .reduce(HashMap::new, merge);
        Ok(counts_to_poly(counts))
    })
}

/// `S_{n,d}` for every `d` in `0..=n`.
fn schroder_row(n: u32) -> Result<std::sync::Arc<Vec<MultiPoly>>> {
    scale_check("qt_schroder", n, SCHRODER_MAX_N)?;
    SCHRODER.get_or_try_insert(n, || {
        let rows: Vec<HashMap<(u32, u32), u64>> = SchroderPath::all(n)
            .par_iter()
            .fold(
                || vec![HashMap::new(); n as usize + 1],
                |mut acc, p| {
                    *acc[p.diagonal_steps() as usize].entry((p.area(), p.bounce())).or_default() += 1;
                    acc
                },
            )
            .reduce(
                || vec![HashMap::new(); n as usize + 1],
                |x, y| x.into_iter().zip(y).map(|(a, b)| merge(a, b)).collect(),
            );
        Ok(std::sync::Arc::new(rows.into_iter().map(counts_to_poly).collect()))
    })
}

fn check_d(n: u32, d: u32) -> Result<()> {
    if d > n {
        return Err(Error::OutOfRange(format!("d = {d} > n = {n}")));
    }
    Ok(())
}

pub fn qt_schroder(n: u32, d: u32) -> Result<MultiPoly> {
    check_d(n, d)?;
    Ok(schroder_row(n)?[d as usize].clone())
}

/// `S~_{n,d} = S_{n,d} - S~_{n,d-1}`, with `S~_{n,-1} = 0`.
pub fn little_qt_schroder(n: u32, d: u32) -> Result<MultiPoly> {
    check_d(n, d)?;
    let row = schroder_row(n)?;
    let mut little = MultiPoly::zero(&QT);
    for big in row.iter().take(d as usize + 1) {
        little = big - &little;
    }
    Ok(little)
}

/// `q^shift f(q, 1/q)` as a polynomial in `q`; errors if a negative power survives.
pub fn q_inverse_slice(f: &MultiPoly, shift: u32) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(&["q"]);
    for (m, c) in f.terms() {
        let e = shift as i64 + m.exp(0) as i64 - m.exp(1) as i64;
        if e < 0 {
            return Err(Error::OutOfRange(format!("negative power q^{e} in the q,1/q slice of {f}")));
        }
        out.add_term(Monomial::new(&[e as u32]), c.clone());
    }
    Ok(out)
}

fn binom2(n: u32) -> u32 {
    n * n.saturating_sub(1) / 2
}

/// `[2n-d; n-d, n-d, d]_q / [n-d+1]_q`, which should equal `q^{C(n,2)-C(d,2)} S_{n,d}(q, 1/q)`.
pub fn schroder_slice_oracle(n: u32, d: u32) -> Result<MultiPoly> {
    check_d(n, d)?;
    qanalog::q_multinomial(2 * n - d, &[n - d, n - d, d])?.exact_div(&qanalog::q_int(n - d + 1))
}

/// The path-sum side of the slice identity.
pub fn schroder_slice(n: u32, d: u32) -> Result<MultiPoly> {
    q_inverse_slice(&qt_schroder(n, d)?, binom2(n) - binom2(d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match i64::deserialize(d)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            v => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {v}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Sign::Plus { "+1" } else { "-1" })
    }
}

/// Writes a symmetric `g(q,t)` as `h(e1, e2)`, then returns `(sign t)^f h(s, sign t)`.
pub fn to_sieving_basis(g: &MultiPoly, sign: Sign, f: u32) -> Result<MultiPoly> {
    let h = g.to_elementary_basis()?;
    let s = MultiPoly::monomial(&["s", "t"], &[1, 0], 1);
    let st = MultiPoly::monomial(&["s", "t"], &[0, 1], sign.value());
    let p = h.substitute(&[("e1", s), ("e2", st.clone())])?;
    Ok(&st.pow(f) * &p)
}

/// `(sign t)^{C(n-2,2)} h(s, sign t)` where `h(e1, e2) = C_{n-2}(q,t)`.
pub fn triangulation_sieving_poly(n: u32, sign: Sign) -> Result<MultiPoly> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("polygon needs n >= 3, got {n}")));
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenNUnsupported(n));
    }
    to_sieving_basis(&qt_catalan(n - 2)?, sign, binom2(n - 2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMatch {
    pub class: ClassLabel,
    pub fixed: u64,
    pub value: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub f: u32,
    pub sign: Sign,
    pub per_class: Vec<ClassMatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingCandidate {
    pub f: u32,
    pub sign: Sign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplorerReport {
    pub family: String,
    pub n: u32,
    pub k: u32,
    /// the `(q,t)` polynomial `S~_{n-2, n-3-k}` that is converted to `(s,t)`
    pub polynomial: String,
    pub symmetry: bool,
    pub candidates: Vec<Candidate>,
    pub matching: Vec<MatchingCandidate>,
}

pub const EXPLORER_MAX_N: u32 = SCHRODER_MAX_N + 2;

/// For dissections of an `n`-gon by `k` diagonals (odd `n`), tries
/// `P = (sign t)^f h(s, sign t)` with `h(e1, e2) = S~_{n-2, n-3-k}(q, t)` for each
/// `f` in `f_min..=f_max` and both signs, against brute-force fixed counts.
pub fn explore_dissection_conjecture(n: u32, k: u32, f_min: u32, f_max: u32) -> Result<ExplorerReport> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenNUnsupported(n));
    }
    if n < 5 || k > n - 3 {
        return Err(Error::OutOfRange(format!("need odd n >= 5 and k <= n - 3, got n = {n}, k = {k}")));
    }
    scale_check("explorer", n, EXPLORER_MAX_N)?;
    let little = little_qt_schroder(n - 2, n - 3 - k)?;
    let symmetry = little.is_symmetric("q", "t")?;
    let mut report = ExplorerReport {
        family: Family::Dissections.to_string(),
        n,
        k,
        polynomial: little.to_string(),
        symmetry,
        candidates: Vec::new(),
        matching: Vec::new(),
    };
    if !symmetry {
        return Ok(report);
    }
    let fam = enumerate(FamilySpec::new(Family::Dissections, n, Some(k))?)?;
    let classes = conjugacy_classes(n)?;
    let fixed = fam.class_fixed_counts()?;
    for sign in [Sign::Minus, Sign::Plus] {
        // (sign t)^f is +-1 at every class, so evaluate the f = 0 polynomial once
        let base = to_sieving_basis(&little, sign, 0)?;
        let mut base_vals = Vec::new();
        for c in &classes {
            let (s, t) = generator_values(n, c)?;
            let v = eval_bivariate_at_class(&base, &s, &t)?;
            base_vals.push((v, t.scale(&BigInt::from(sign.value()))));
        }
        for f in f_min..=f_max {
            let per_class: Vec<ClassMatch> = classes
                .iter()
                .zip(&base_vals)
                .zip(&fixed)
                .map(|((c, (v, st)), &fx)| {
                    let val = st.pow(f).checked_mul(v).expect("same conductor");
                    class_match(c.label, fx, &val)
                })
                .collect();
            if per_class.iter().all(|m| m.matches) {
                report.matching.push(MatchingCandidate { f, sign });
            }
            report.candidates.push(Candidate { f, sign, per_class });
        }
    }
    report.candidates.sort_by_key(|c| (c.f, c.sign));
    report.matching.sort_by_key(|c| (c.f, c.sign));
    Ok(report)
}

pub(crate) fn class_match(class: ClassLabel, fixed: u64, val: &CycloInt) -> ClassMatch {
    match val.as_integer() {
        Ok(v) => ClassMatch { class, fixed, value: v.to_string(), matches: v == BigInt::from(fixed) },
        Err(_) => ClassMatch { class, fixed, value: val.to_string(), matches: false },
    }
}

/// `(n, d, symmetric?)` for every little q,t-Schröder polynomial with `n <= nmax`.
pub fn little_schroder_symmetry(nmax: u32) -> Result<Vec<(u32, u32, bool)>> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        for d in 0..=n {
            out.push((n, d, little_qt_schroder(n, d)?.is_symmetric("q", "t")?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(text: &str) -> MultiPoly {
        MultiPoly::parse(text, &QT).unwrap()
    }

    #[test]
    fn dyck_statistics() {
        let p = DyckPath::from_word("NNEE").unwrap();
        assert_eq!((p.heights().to_vec(), p.area(), p.bounce()), (vec![2, 2], 1, 0));
        let p = DyckPath::from_word("NENE").unwrap();
        assert_eq!((p.heights().to_vec(), p.area(), p.bounce()), (vec![1, 2], 0, 1));
        for n in 1..=6 {
            let staircase = DyckPath::new((1..=n).collect()).unwrap();
            assert_eq!(staircase.area(), 0);
        }
        assert!(DyckPath::new(vec![1, 1]).is_err());
        assert_eq!(DyckPath::from_word("NNENEE").unwrap().to_string(), "NNENEE");
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(qt_catalan(1).unwrap(), qt("1"));
        assert_eq!(qt_catalan(2).unwrap(), qt("q + t"));
        assert_eq!(qt_catalan(3).unwrap(), qt("q^3 + q^2*t + q*t^2 + t^3 + q*t"));
        assert!(matches!(qt_catalan(11), Err(Error::ScaleExceeded { .. })));
    }

    #[test]
    fn catalan_properties() {
        for n in 0..=8 {
            let c = qt_catalan(n).unwrap();
            assert!(c.is_symmetric("q", "t").unwrap());
            assert_eq!(q_inverse_slice(&c, binom2(n)).unwrap(), qanalog::q_catalan(n).unwrap(), "n = {n}");
            let at_t1 = c.substitute(&[("t", MultiPoly::one(&["q"]))]).unwrap();
            assert_eq!(at_t1.rename(&["q"]).unwrap(), qanalog::carlitz_riordan(n), "n = {n}");
        }
    }

    #[test]
    fn schroder_examples() {
        assert_eq!(qt_schroder(2, 1).unwrap(), qt("q + t + 1"));
        assert_eq!(qt_schroder(3, 1).unwrap(), qt("q^3 + q^2*t + q^2 + q*t^2 + 2*q*t + q + t^3 + t^2 + t"));
        assert_eq!(little_qt_schroder(3, 1).unwrap(), qt("q^2 + q*t + q + t^2 + t"));
        for n in 0..=6 {
            assert_eq!(qt_schroder(n, 0).unwrap(), qt_catalan(n).unwrap());
            assert_eq!(little_qt_schroder(n, 0).unwrap(), qt_catalan(n).unwrap());
            assert_eq!(qt_schroder(n, n).unwrap(), qt("1"));
        }
        assert_eq!(SchroderPath::from_word("NDE").unwrap().area(), 1);
        assert_eq!(SchroderPath::from_word("NNEE").unwrap().area(), 1);
        assert!(SchroderPath::from_word("EN").is_err());
    }

    #[test]
    fn schroder_slice_small() {
        assert_eq!(schroder_slice(2, 1).unwrap(), schroder_slice_oracle(2, 1).unwrap());
        for n in 0..=6 {
            for d in 0..=n {
                assert_eq!(schroder_slice(n, d).unwrap(), schroder_slice_oracle(n, d).unwrap(), "n = {n}, d = {d}");
            }
        }
    }

    #[test]
    fn little_schroder_telescopes() {
        for n in 1..=6 {
            for d in 1..=n {
                let sum = &little_qt_schroder(n, d).unwrap() + &little_qt_schroder(n, d - 1).unwrap();
                assert_eq!(sum, qt_schroder(n, d).unwrap());
            }
        }
    }

    #[test]
    fn triangulation_poly_small() {
        assert_eq!(triangulation_sieving_poly(3, Sign::Minus).unwrap(), MultiPoly::one(&["s", "t"]));
        assert_eq!(triangulation_sieving_poly(4, Sign::Minus), Err(Error::EvenNUnsupported(4)));
        let p = triangulation_sieving_poly(5, Sign::Minus).unwrap();
        let classes = conjugacy_classes(5).unwrap();
        let vals: Vec<BigInt> = classes
            .iter()
            .map(|c| {
                let (s, t) = generator_values(5, c).unwrap();
                eval_bivariate_at_class(&p, &s, &t).unwrap().as_integer().unwrap()
            })
            .collect();
        assert_eq!(vals, [5, 0, 0, 1].map(BigInt::from));
        let wrong = triangulation_sieving_poly(5, Sign::Plus).unwrap();
        let (s, t) = generator_values(5, &classes[0]).unwrap();
        assert_eq!(eval_bivariate_at_class(&wrong, &s, &t).unwrap().as_integer().unwrap(), BigInt::from(-11));
    }

    #[test]
    fn explorer_triangulation_case() {
        let r = explore_dissection_conjecture(5, 2, 0, 10).unwrap();
        assert!(r.symmetry);
        assert!(r.matching.contains(&MatchingCandidate { f: 3, sign: Sign::Minus }));
        assert_eq!(r.candidates.len(), 22);
        assert!(explore_dissection_conjecture(6, 1, 0, 4).is_err());
    }
}
