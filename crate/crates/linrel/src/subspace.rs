//! Exact-rank subspace algebra over `C^m`.
//!
//! A [`Subspace`] stores an orthonormal basis; the zero subspace (no basis
//! vectors) is a first-class value. Equality is judged through the
//! Frobenius distance of orthogonal projectors, which is basis independent
//! and matches principal-angle sensitivity.

use crate::error::{Error, Result};
use crate::{mat, CMatrix, CVector, Tol};

#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: CMatrix,
}

/// Result of [`Subspace::sum`]: the span of the union together with two
/// flags. `direct` holds when the dimensions add up; `orthogonal` holds
/// when every basis pair across the summands is orthogonal.
#[derive(Clone, Debug)]
pub struct SubspaceSum {
    pub space: Subspace,
    pub direct: bool,
    pub orthogonal: bool,
}

impl Subspace {
    /// Orthonormalized span of the given vectors, with rank decided by a
    /// singular-value cutoff at `tol.rank` relative to the largest one.
    pub fn span(vectors: &[CVector], ambient: usize, tol: &Tol) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: v.len(),
                });
            }
        }
        let cols = if vectors.is_empty() {
            CMatrix::zeros(ambient, 0)
        } else {
            CMatrix::from_columns(vectors)
        };
        Ok(Self::from_columns(&cols, tol))
    }

    /// Span of the columns of a matrix; the ambient dimension is the row count.
    pub fn from_columns(cols: &CMatrix, tol: &Tol) -> Self {
        Subspace {
            ambient: cols.nrows(),
            basis: mat::orthonormal_span(cols, tol.rank),
        }
    }

    /// Span of columns cut out of an orthonormal basis (scale one); the
    /// rank cutoff is floored at that scale so a numerically-zero block is
    /// recognized as the zero subspace.
    pub(crate) fn from_block_columns(cols: &CMatrix, tol: &Tol) -> Self {
        Subspace {
            ambient: cols.nrows(),
            basis: mat::orthonormal_span_floored(cols, tol.rank, 1.0),
        }
    }

    /// Wrap columns that are already orthonormal.
    pub(crate) fn from_orthonormal(basis: CMatrix) -> Self {
        debug_assert!(
            basis.ncols() == 0
                || mat::max_abs(
                    &(basis.adjoint() * &basis - CMatrix::identity(basis.ncols(), basis.ncols()))
                ) < 1e-10
        );
        Subspace {
            ambient: basis.nrows(),
            basis,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: CMatrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: CMatrix::identity(ambient, ambient),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.ncols() == 0
    }

    /// The stored orthonormal basis (ambient × dim).
    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    /// Orthogonal projector onto the subspace.
    pub fn projector(&self) -> CMatrix {
        if self.dim() == 0 {
            CMatrix::zeros(self.ambient, self.ambient)
        } else {
            &self.basis * self.basis.adjoint()
        }
    }

    /// Orthogonal complement inside the ambient space.
    pub fn complement(&self) -> Self {
        Subspace {
            ambient: self.ambient,
            basis: mat::complement_basis(&self.basis, self.ambient),
        }
    }

    /// Largest subspace contained in both operands, computed as the
    /// complement of the sum of the complements.
    pub fn intersect(&self, other: &Self, tol: &Tol) -> Result<Self> {
        self.check_ambient(other)?;
        let sum = self.complement().sum(&other.complement(), tol)?;
        Ok(sum.space.complement())
    }

    /// Span of the union, with directness and orthogonality flags.
    pub fn sum(&self, other: &Self, tol: &Tol) -> Result<SubspaceSum> {
        self.check_ambient(other)?;
        let space = Self::from_columns(&mat::hcat(&self.basis, &other.basis), tol);
        let direct = space.dim() == self.dim() + other.dim();
        let orthogonal = self.dim() == 0
            || other.dim() == 0
            || mat::max_abs(&(self.basis.adjoint() * &other.basis)) < tol.orth;
        Ok(SubspaceSum {
            space,
            direct,
            orthogonal,
        })
    }

    /// Orthogonal complement of `other` within `self`; requires `other ⊆ self`.
    pub fn ominus(&self, other: &Self, tol: &Tol) -> Result<Self> {
        self.check_ambient(other)?;
        let defect = self.containment_defect(other);
        if defect > tol.eq {
            return Err(Error::NotContained {
                what: "ominus operand",
                defect,
            });
        }
        // With other ⊆ self, (I − P_other)·basis(self) spans self ∩ other^⊥.
        let residual = &self.basis - other.projector() * &self.basis;
        Ok(Self::from_block_columns(&residual, tol))
    }

    /// Largest column norm of `(I − P_self)·basis(other)`; zero when
    /// `other ⊆ self`.
    pub fn containment_defect(&self, other: &Self) -> f64 {
        if other.dim() == 0 {
            return 0.0;
        }
        let residual = &other.basis - self.projector() * &other.basis;
        (0..residual.ncols())
            .map(|j| residual.column(j).norm())
            .fold(0.0, f64::max)
    }

    pub fn contains(&self, other: &Self, tol: &Tol) -> bool {
        self.ambient == other.ambient && self.containment_defect(other) <= tol.eq
    }

    pub fn contains_vector(&self, v: &CVector, tol: &Tol) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let residual = v - self.projector() * v;
        residual.norm() <= tol.eq * v.norm().max(1.0)
    }

    /// Frobenius distance between the orthogonal projectors.
    pub fn projector_distance(&self, other: &Self) -> f64 {
        assert_eq!(
            self.ambient, other.ambient,
            "projector distance requires a common ambient space"
        );
        (self.projector() - other.projector()).norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tol) -> bool {
        self.ambient == other.ambient && self.projector_distance(other) < tol.eq
    }

    /// Max-entry deviation of the Gram matrix from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        if self.dim() == 0 {
            return 0.0;
        }
        mat::max_abs(&(self.basis.adjoint() * &self.basis - CMatrix::identity(self.dim(), self.dim())))
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        } else {
            Ok(())
        }
    }
}
