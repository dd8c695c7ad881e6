//! Exact polynomial and character arithmetic for cyclic and dihedral sieving.

pub mod cyclotomic;
pub mod dihedral;
pub mod error;
pub mod fibonomial;
pub mod gates;
pub mod orbits;
pub mod polyring;
pub mod qanalog;
pub mod qtcat;
pub mod sievecheck;

pub use cyclotomic::CycloInt;
pub use dihedral::{CharVector, ClassLabel, ConjClass, DihedralElement, Irrep};
pub use error::{Error, Result};
pub use fibonomial::Partition;
pub use gates::Gate;
pub use orbits::{CombObject, Family, FamilySpec, OrbitFamily};
pub use polyring::{Monomial, MultiPoly};
pub use qtcat::{DyckPath, SchroderPath, Sign};
pub use sievecheck::{ClassRecord, ReportKind, SievingReport};
