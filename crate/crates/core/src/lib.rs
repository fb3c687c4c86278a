//! Exact computation in the spin symmetric group algebras `RS_n^-`.
//!
//! The crate models the double cover of `S_n` through signed permutations
//! relative to a fixed canonical lift, multiplies class sums of the even
//! center exactly, and builds the stable (Farahat-Higman style) structure
//! constants on top of that. The odd Jucys-Murphy elements and the Catalan
//! coefficients of their elementary symmetric functions live in [`jm`].
//!
//! Module map:
//!
//! - [`perm`]: degree-agnostic permutations and cycle-type enumeration.
//! - [`combinatorics`]: partitions, Catalan numbers, integer-valued polynomials.
//! - [`series`]: truncated power series over `Q` and Lagrange inversion.
//! - [`clifford`]: integer Clifford algebra, the ground-truth model of the lift.
//! - [`spingroup`]: signed products, cycle elements, even split classes.
//! - [`groupalgebra`]: sparse elements of `RS_n^-` and `ZS_n`, class sum products.
//! - [`fh`]: stable structure constants and the graded algebra.
//! - [`jm`]: odd Jucys-Murphy elements, `e_{r;n}` and the `A_lambda`.

pub mod clifford;
pub mod combinatorics;
pub mod error;
pub mod fh;
pub mod groupalgebra;
pub mod jm;
pub mod perm;
pub mod series;
pub mod spingroup;

pub use combinatorics::{IntegerValuedPoly, Partition, SplitStatus};
pub use error::{Error, Result};
pub use groupalgebra::{AlgebraElement, StructureTable, Variant};

pub use perm::Perm;
pub use spingroup::SpinElement;
