//! Combinatorial families on `[n]` and the dihedral action on them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dihedral::{conjugacy_classes, CharVector, ConjClass, DihedralElement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `k`-element subsets of `[n]`
    Subsets,
    /// `k`-element multisets over `[n]`
    Multisubsets,
    NcPartitions,
    /// noncrossing partitions of `[n]` with `n - k` blocks
    Narayana,
    Triangulations,
    /// dissections of the `n`-gon by `k` noncrossing diagonals
    Dissections,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Subsets,
        Family::Multisubsets,
        Family::NcPartitions,
        Family::Narayana,
        Family::Triangulations,
        Family::Dissections,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Subsets => "subsets",
            Family::Multisubsets => "multisubsets",
            Family::NcPartitions => "ncpartitions",
            Family::Narayana => "narayana",
            Family::Triangulations => "triangulations",
            Family::Dissections => "dissections",
        }
    }

    pub fn takes_k(&self) -> bool {
        matches!(self, Family::Subsets | Family::Multisubsets | Family::Narayana | Family::Dissections)
    }

    fn max_n(&self) -> u32 {
        match self {
            Family::Subsets | Family::Multisubsets => 12,
            _ => 11,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown family `{s}`")))
    }
}

/// Family plus parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

pub const MULTISUBSET_MAX_K: u32 = 6;

impl FamilySpec {
    pub fn new(family: Family, n: u32, k: Option<u32>) -> Result<Self> {
        let spec = FamilySpec { family, n, k };
        spec.validate()?;
        Ok(spec)
    }

    pub fn k(&self) -> u32 {
        self.k.unwrap_or(0)
    }

    fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        let bad = |msg: String| Err(Error::OutOfRange(format!("{}: {msg}", self.family)));
        if self.family.takes_k() != k.is_some() {
            return bad(if k.is_some() { "takes no k".into() } else { "needs k".into() });
        }
        if n < 3 {
            return bad(format!("n = {n} < 3"));
        }
        if n > self.family.max_n() {
            return Err(Error::ScaleExceeded {
                family: self.family.to_string(),
                param: format!("n = {n}"),
                limit: self.family.max_n(),
            });
        }
        let k = self.k();
        match self.family {
            Family::Subsets if k > n => bad(format!("k = {k} > n = {n}")),
            Family::Multisubsets if k > MULTISUBSET_MAX_K => Err(Error::ScaleExceeded {
                family: self.family.to_string(),
                param: format!("k = {k}"),
                limit: MULTISUBSET_MAX_K,
            }),
            Family::Narayana if k >= n => bad(format!("k = {k} >= n = {n}")),
            Family::Dissections if k > n - 3 => bad(format!("k = {k} > n - 3 = {}", n - 3)),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}(n={}, k={})", self.family, self.n, k),
            None => write!(f, "{}(n={})", self.family, self.n),
        }
    }
}

/// Objects in canonical form: sorted elements, sorted blocks, sorted diagonals `(a, b)` with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CombObject {
    Subset(Vec<u32>),
    Multisubset(Vec<u32>),
    NcPartition(Vec<Vec<u32>>),
    Triangulation(Vec<(u32, u32)>),
    Dissection(Vec<(u32, u32)>),
}

impl fmt::Display for CombObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        let diagonals = |d: &[(u32, u32)]| d.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ");
        match self {
            CombObject::Subset(v) | CombObject::Multisubset(v) => write!(f, "{{{}}}", list(v)),
            CombObject::NcPartition(blocks) => {
                write!(f, "{}", blocks.iter().map(|b| list(b)).collect::<Vec<_>>().join(" | "))
            }
            CombObject::Triangulation(d) | CombObject::Dissection(d) => write!(f, "[{}]", diagonals(d)),
        }
    }
}

fn relabel_diagonals(g: &DihedralElement, n: u32, ds: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut out: Vec<(u32, u32)> = ds
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (g.apply(a, n), g.apply(b, n));
            (x.min(y), x.max(y))
        })
        .collect();
    out.sort_unstable();
    out
}

/// `g . x`, relabelling every vertex `i` by `g(i)`.
pub fn act(g: &DihedralElement, x: &CombObject, n: u32) -> CombObject {
    let map = |v: &[u32]| {
        let mut w: Vec<u32> = v.iter().map(|&i| g.apply(i, n)).collect();
        w.sort_unstable();
        w
    };
    match x {
        CombObject::Subset(v) => CombObject::Subset(map(v)),
        CombObject::Multisubset(v) => CombObject::Multisubset(map(v)),
        CombObject::NcPartition(blocks) => {
            let mut bs: Vec<Vec<u32>> = blocks.iter().map(|b| map(b)).collect();
            bs.sort_unstable();
            CombObject::NcPartition(bs)
        }
        CombObject::Triangulation(ds) => CombObject::Triangulation(relabel_diagonals(g, n, ds)),
        CombObject::Dissection(ds) => CombObject::Dissection(relabel_diagonals(g, n, ds)),
    }
}

pub fn crosses((a, b): (u32, u32), (c, d): (u32, u32)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Blocks cross if `a < b < c < d` with `a, c` in one and `b, d` in the other.
pub fn blocks_cross(x: &[u32], y: &[u32]) -> bool {
    let chords = |b: &[u32]| -> Vec<(u32, u32)> {
        b.iter().enumerate().flat_map(|(i, &p)| b[i + 1..].iter().map(move |&q| (p.min(q), p.max(q)))).collect()
    };
    let cy = chords(y);
    chords(x).into_iter().any(|c| cy.iter().any(|&d| crosses(c, d)))
}

pub fn is_noncrossing(blocks: &[Vec<u32>]) -> bool {
    blocks.iter().enumerate().all(|(i, x)| blocks[i + 1..].iter().all(|y| !blocks_cross(x, y)))
}

fn subsets(n: u32, k: u32) -> Vec<CombObject> {
    fn go(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<CombObject>) {
        if cur.len() as u32 == k {
            out.push(CombObject::Subset(cur.clone()));
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn multisubsets(n: u32, k: u32) -> Vec<CombObject> {
    let mut out = Vec::new();
    fn go(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<CombObject>) {
        if cur.len() as u32 == k {
            out.push(CombObject::Multisubset(cur.clone()));
            return;
        }
        for i in start..=n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Noncrossing partitions of a sorted run of labels. The block of the first
/// label is chosen, and each gap it leaves is partitioned independently.
fn nc_partitions_of(labels: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let Some((&first, rest)) = labels.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for mask in 0u32..(1 << rest.len()) {
        let mut block = vec![first];
        let mut gaps: Vec<&[u32]> = Vec::new();
        let mut gap_start = 0;
        for (i, &v) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                block.push(v);
                gaps.push(&rest[gap_start..i]);
                gap_start = i + 1;
            }
        }
        gaps.push(&rest[gap_start..]);
        let mut partial: Vec<Vec<Vec<u32>>> = vec![vec![block]];
        for gap in gaps {
            let subs = nc_partitions_of(gap);
            partial = partial
                .iter()
                .flat_map(|p| {
                    subs.iter().map(move |s| {
                        let mut q = p.clone();
                        q.extend(s.iter().cloned());
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

fn nc_partitions(n: u32, blocks: Option<usize>) -> Vec<CombObject> {
    let labels: Vec<u32> = (1..=n).collect();
    nc_partitions_of(&labels)
        .into_iter()
        .filter(|p| blocks.is_none_or(|b| p.len() == b))
        .map(|mut p| {
            p.sort_unstable();
            CombObject::NcPartition(p)
        })
        .collect()
}

/// Triangulations of the polygon on `vs` (in cyclic order): the edge
/// `(first, last)` lies in exactly one triangle, with apex `vs[j]`.
fn triangulations_of(vs: &[u32]) -> Vec<Vec<(u32, u32)>> {
    let m = vs.len();
    if m < 3 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for j in 1..m - 1 {
        let left = triangulations_of(&vs[..=j]);
        let right = triangulations_of(&vs[j..]);
        for l in &left {
            for r in &right {
                let mut ds = l.clone();
                ds.extend_from_slice(r);
                if j > 1 {
                    ds.push((vs[0], vs[j]));
                }
                if j < m - 2 {
                    ds.push((vs[j], vs[m - 1]));
                }
                out.push(ds);
            }
        }
    }
    out
}

fn triangulations(n: u32) -> Vec<CombObject> {
    let vs: Vec<u32> = (1..=n).collect();
    triangulations_of(&vs)
        .into_iter()
        .map(|mut ds| {
            ds.sort_unstable();
            CombObject::Triangulation(ds)
        })
        .collect()
}

fn dissections(n: u32, k: u32) -> Vec<CombObject> {
    let diagonals: Vec<(u32, u32)> =
        (1..=n).flat_map(|a| (a + 2..=n).map(move |b| (a, b))).filter(|&(a, b)| !(a == 1 && b == n)).collect();
    fn go(start: usize, k: usize, all: &[(u32, u32)], cur: &mut Vec<(u32, u32)>, out: &mut Vec<CombObject>) {
        if cur.len() == k {
            out.push(CombObject::Dissection(cur.clone()));
            return;
        }
        for i in start..all.len() {
            if cur.iter().all(|&d| !crosses(d, all[i])) {
                cur.push(all[i]);
                go(i + 1, k, all, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, k as usize, &diagonals, &mut Vec::new(), &mut out);
    out
}

/// An enumerated family together with its parameters.
#[derive(Clone, Debug)]
pub struct OrbitFamily {
    pub spec: FamilySpec,
    pub objects: Vec<CombObject>,
}

pub fn enumerate(spec: FamilySpec) -> Result<OrbitFamily> {
    spec.validate()?;
    let (n, k) = (spec.n, spec.k());
    let objects = match spec.family {
        Family::Subsets => subsets(n, k),
        Family::Multisubsets => multisubsets(n, k),
        Family::NcPartitions => nc_partitions(n, None),
        Family::Narayana => nc_partitions(n, Some((n - k) as usize)),
        Family::Triangulations => triangulations(n),
        Family::Dissections => dissections(n, k),
    };
    Ok(OrbitFamily { spec, objects })
}

impl OrbitFamily {
    pub fn n(&self) -> u32 {
        self.spec.n
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn act(&self, g: &DihedralElement, x: &CombObject) -> CombObject {
        act(g, x, self.n())
    }

    /// Objects fixed by a single group element.
    pub fn fixed_by(&self, g: &DihedralElement) -> u64 {
        let n = self.n();
        self.objects.par_iter().filter(|x| act(g, x, n) == **x).count() as u64
    }

    /// Fixed count of a class, checked to be the same for every member.
    pub fn fixed_points(&self, class: &ConjClass) -> Result<u64> {
        let counts: Vec<u64> = class.members.par_iter().map(|g| self.fixed_by(g)).collect();
        let first = counts[0];
        if let Some((g, c)) = class.members.iter().zip(&counts).find(|(_, &c)| c != first) {
            return Err(Error::NotClassFunction(format!(
                "{}: {} fixes {first} but {g} fixes {c} (class {})",
                self.spec, class.representative, class.label
            )));
        }
        Ok(first)
    }

    /// Fixed counts for every class of `I2(n)`, in class order.
    pub fn class_fixed_counts(&self) -> Result<Vec<u64>> {
        conjugacy_classes(self.n())?.iter().map(|c| self.fixed_points(c)).collect()
    }

    pub fn permutation_character(&self) -> Result<CharVector> {
        let counts: Vec<BigInt> = self.class_fixed_counts()?.into_iter().map(BigInt::from).collect();
        CharVector::from_integers(self.n(), &counts)
    }

    /// Number of orbits, by Burnside's lemma. Errors if the average is not an integer.
    pub fn orbit_count(&self) -> Result<u64> {
        let classes = conjugacy_classes(self.n())?;
        let counts = self.class_fixed_counts()?;
        let total: u64 = classes.iter().zip(&counts).map(|(c, f)| c.size() as u64 * f).sum();
        let order = 2 * self.n() as u64;
        if !total.is_multiple_of(order) {
            return Err(Error::NonIntegral(format!("Burnside sum {total} / {order}")));
        }
        Ok(total / order)
    }
}

/// The textbook count of a family, for cross-checking enumeration.
pub fn expected_size(spec: &FamilySpec) -> u64 {
    fn binom(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    let (n, k) = (spec.n as u64, spec.k() as u64);
    match spec.family {
        Family::Subsets => binom(n, k),
        Family::Multisubsets => binom(n + k - 1, k),
        Family::NcPartitions => binom(2 * n, n) / (n + 1),
        Family::Narayana => binom(n, k) * binom(n, k + 1) / n,
        Family::Triangulations => binom(2 * (n - 2), n - 2) / (n - 1),
        Family::Dissections => binom(n + k, k + 1) * binom(n - 3, k) / (n + k),
    }
}
