//! Exact computation of characters, graded characters, dimensions, and
//! irreducible decompositions for Demazure modules and graded Weyl modules
//! over twisted (and untwisted) affine Kac–Moody algebras.
//!
//! # Mathematical setting
//!
//! A twisted affine algebra of type `A2(2)`, `A2l(2)`, `A2l-1(2)`, `Dl+1(2)`,
//! `E6(2)`, or `D4(3)` carries a finite-dimensional fixed-point subalgebra
//! `g0` (of type `A1`, `B_l`, `C_l`, `F4`, or `G2`), an affine Cartan matrix
//! with marks and comarks, and an affine Weyl group generated by the simple
//! reflections `s_0, …, s_l` together with a translation lattice. Demazure
//! modules are indexed by a level `k` and a `g0`-dominant weight `λ` through
//! the target weight `w0(λ) + kΛ0`; their characters are computed by iterated
//! isobaric divided-difference operators along a dominance chain. Graded Weyl
//! modules are obtained at the distinguished level `1/a0^∨`.
//!
//! # Coordinates and conventions
//!
//! * Finite weights are stored as coroot pairings `⟨μ, α_i^∨⟩` (coordinates
//!   in the fundamental-weight basis), affine weights as `l+1` pairings plus
//!   an exact δ-coordinate.
//! * The Cartan convention is `A[i][j] = ⟨α_j, α_i^∨⟩`, so the simple root
//!   `α_j` written in pairing coordinates is column `j` of the matrix.
//! * All arithmetic is exact: scalars are rationals with 128-bit integer
//!   numerator and denominator, dimensions are computed with big integers.
//!   No floating point is used anywhere.
//! * Node labels of each affine diagram follow the printed table order used
//!   throughout this crate's data module (node 0 is the affine node); the
//!   `data` CLI subcommand dumps every table for inspection.
//!
//! # Modules
//!
//! * [`cartan`] — finite root systems, Weyl-group combinatorics, Weyl
//!   dimension formula, irreducible characters.
//! * [`affine`] — affine Cartan tables, marks/comarks, the affine weight
//!   lattice, reflections, translations, dominance chains, reduced words.
//! * [`characters`] — exact formal-character arithmetic, restriction,
//!   δ-grading, decomposition into irreducible `g0`-characters.
//! * [`demazure`] — Demazure operators and characters of the modules
//!   `D(k, λ)` built from target weights.
//! * [`weyl`] — graded Weyl-module reports, fundamental-module tables,
//!   product dimension formulas, tensor factorization checks.
//! * [`oracles`] — independent recomputation paths (Freudenthal recursion,
//!   Weyl alternating sum, brute-force affine group enumeration) used for
//!   cross-validation.
//! * [`verify`] — the named check registry behind `verify` in the CLI.
//! * [`json`] — canonical JSON serialization used by the CLI.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod affine;
pub mod cartan;
pub mod characters;
pub mod demazure;
pub mod error;
pub mod json;
pub mod oracles;
pub mod rat;
pub mod verify;
pub mod weyl;

pub use affine::{AffineData, AffineWeight};
pub use cartan::{FiniteRootSystem, FiniteType};
pub use characters::{FormalCharacter, GradedCharacter, IrrDecomposition, Mode};
pub use demazure::DemazureResult;
pub use error::{Error, Result};
pub use rat::Rat;
pub use weyl::WeylModuleReport;
