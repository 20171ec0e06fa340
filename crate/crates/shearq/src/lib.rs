//! Exact algebra of extended shear coordinates on cusped fat graphs.
//!
//! The crate models bordered cusped surfaces as fat graphs (ribbon graphs with
//! univalent cusp vertices), builds the quantum torus generated by exponentiated
//! shear coordinates, and computes geodesic functions and lambda-lengths as
//! traces of 2x2 holonomy words. On top of that sit the Poisson/Goldman
//! brackets, cluster mutations (classical and quantum, including the generalised
//! omega-weighted monogon rule), tropical mutations, and the skein / r-matrix
//! identity checkers.
//!
//! Everything is exact: coefficients are rationals times monomials in formal
//! omega symbols and quarter-powers of q; exponents live on the half-integer
//! lattice spanned by the generators.
//!
//! The crate is `no_std` (alloc only); IO, file formats and the CLI live in the
//! companion crate.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod basis;
pub mod brackets;
pub mod holonomy;
pub mod moves;
pub mod numeric;
pub mod qtorus;
pub mod registry;
pub mod skein;
pub mod suites;
pub mod surface;
pub mod text;

pub use basis::{GeneratorBasis, GeneratorId, GeneratorKind, OmegaId, OmegaKind, Orientation};
pub use qtorus::{Coefficient, ExponentVector, QLaurent, Scalar};
pub use surface::FatGraph;
