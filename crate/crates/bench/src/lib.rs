//! Shared inputs for the criterion benches.

use sievekit::fibonomial::st_catalan;
use sievekit::orbits::{enumerate, Family, FamilySpec, OrbitFamily};
use sievekit::MultiPoly;

/// Noncrossing partitions of `[n]` with their `(s,t)`-Catalan polynomial.
pub fn ncpartition_case(n: u32) -> (OrbitFamily, MultiPoly) {
    let fam = enumerate(FamilySpec::new(Family::NcPartitions, n, None).expect("valid spec")).expect("enumerable");
    (fam, st_catalan(n).expect("polynomial"))
}

pub fn spec(family: Family, n: u32, k: Option<u32>) -> FamilySpec {
    FamilySpec::new(family, n, k).expect("valid spec")
}
