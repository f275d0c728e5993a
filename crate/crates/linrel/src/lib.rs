//! Finite-dimensional linear relations.
//!
//! A linear relation on `C^n` is a linear subspace of `C^n ⊕ C^n`; it
//! generalizes the graph of an operator by allowing multivalued images.
//! This crate implements the algebra of such relations at finite dimension:
//!
//! * [`subspace`] — exact-rank subspace algebra over `C^m` (span, complement,
//!   intersection, sum, orthogonal difference),
//! * [`relation`] — relation arithmetic, adjoints, operator/multivalued
//!   decomposition and restriction,
//! * [`classify`] — symmetry/selfadjointness/positivity predicates,
//!   semi-bounded bounds, norms, resolvents and spectra,
//! * [`transform`] — the Krein transform `(f, g) ↦ (f + g, f − g)`, an
//!   involution exchanging positive relations and symmetric contractions,
//! * [`extend`] — deficiency spaces and indices, semi-bounded selfadjoint
//!   extensions, the von Neumann extension formula and the positive
//!   extension formula for quasi-null relations,
//! * [`stargraph`] — the weighted directed star graph family, a worked
//!   catalogue of quasi-null relations with closed-form adjoints,
//!   deficiency spaces, extensions and spectra.
//!
//! Everything is dense complex double precision; values are immutable and
//! all operations are pure functions, so they can be shared freely across
//! threads.

pub mod classify;
pub mod error;
mod mat;
pub mod random;
pub mod relation;
pub mod stargraph;
pub mod subspace;
pub mod transform;

pub mod extend;

pub use error::{Error, Result};
pub use relation::LinearRelation;
pub use subspace::Subspace;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<C64>;

/// Numerical tolerances shared by the whole crate.
///
/// * `rank` — relative singular-value cutoff for rank decisions: singular
///   values below `rank` times the largest one are treated as zero.
/// * `eq` — subspace equality threshold: two subspaces are equal when their
///   orthogonal projectors differ by less than `eq` in Frobenius norm.
/// * `psd` — slack for positive-semidefiniteness tests, relative to the
///   scale of the form matrix.
/// * `orth` — pairwise-orthogonality slack for basis vectors and for the
///   `orthogonal` flag of subspace sums.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tol {
    pub rank: f64,
    pub eq: f64,
    pub psd: f64,
    pub orth: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol {
            rank: 1e-10,
            eq: 1e-8,
            psd: 1e-9,
            orth: 1e-8,
        }
    }
}
