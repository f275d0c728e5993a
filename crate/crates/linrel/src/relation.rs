//! Linear relations as subspaces of `C^n ⊕ C^n`.
//!
//! The carrier subspace stores pairs stacked as `(f; g)` with the first `n`
//! coordinates holding the first component and the last `n` the second. At
//! finite dimension every relation is closed, so no closure bookkeeping is
//! needed: `closure(T) = T`.

use crate::error::{Error, Result};
use crate::subspace::Subspace;
use crate::{mat, C64, CMatrix, CVector, Tol};

#[derive(Clone, Debug)]
pub struct LinearRelation {
    space_dim: usize,
    carrier: Subspace,
}

/// Domain, range, kernel and multivalued part of a relation, all subspaces
/// of `C^n`. Kernel and multivalued part are carved out of the carrier by
/// intersecting with the coordinate subspaces (through a nullspace problem
/// on the component blocks), not by projection.
#[derive(Clone, Debug)]
pub struct RelationParts {
    pub dom: Subspace,
    pub ran: Subspace,
    pub ker: Subspace,
    pub mul: Subspace,
}

/// Orthogonal splitting `T = T_op ⊕ T_inf` into the operator part and the
/// purely multivalued part.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub operator_part: LinearRelation,
    pub multivalued_part: LinearRelation,
}

/// Restriction of a relation to `(mul S)^⊥ ⊕ (mul S)^⊥`, kept in the
/// original ambient space with the sub-ambient subspace recorded.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub relation: LinearRelation,
    pub sub_ambient: Subspace,
}

impl LinearRelation {
    pub fn from_carrier(space_dim: usize, carrier: Subspace) -> Result<Self> {
        if carrier.ambient_dim() != 2 * space_dim {
            return Err(Error::AmbientMismatch {
                left: carrier.ambient_dim(),
                right: 2 * space_dim,
            });
        }
        Ok(LinearRelation { space_dim, carrier })
    }

    /// Relation spanned by explicit pairs `(f, g)`.
    pub fn from_pairs(pairs: &[(CVector, CVector)], space_dim: usize, tol: &Tol) -> Result<Self> {
        let mut stacked = Vec::with_capacity(pairs.len());
        for (f, g) in pairs {
            if f.len() != space_dim || g.len() != space_dim {
                return Err(Error::DimensionMismatch {
                    expected: space_dim,
                    got: if f.len() != space_dim { f.len() } else { g.len() },
                });
            }
            let mut v = CVector::zeros(2 * space_dim);
            v.rows_mut(0, space_dim).copy_from(f);
            v.rows_mut(space_dim, space_dim).copy_from(g);
            stacked.push(v);
        }
        let carrier = Subspace::span(&stacked, 2 * space_dim, tol)?;
        Self::from_carrier(space_dim, carrier)
    }

    /// Graph `{(f, Mf) : f ∈ domain}` of a matrix restricted to a domain.
    pub fn from_operator(matrix: &CMatrix, domain: &Subspace, tol: &Tol) -> Result<Self> {
        let n = matrix.nrows();
        if matrix.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.ncols(),
            });
        }
        if domain.ambient_dim() != n {
            return Err(Error::AmbientMismatch {
                left: domain.ambient_dim(),
                right: n,
            });
        }
        let d = domain.basis();
        let carrier = Subspace::from_columns(&mat::vcat(d, &(matrix * d)), tol);
        Self::from_carrier(n, carrier)
    }

    /// Graph of a matrix on the whole of `C^n`.
    pub fn graph_of(matrix: &CMatrix, tol: &Tol) -> Result<Self> {
        let n = matrix.nrows();
        Self::from_operator(matrix, &Subspace::full(n), tol)
    }

    /// The zero relation `{(0, 0)}`.
    pub fn zero_relation(space_dim: usize) -> Self {
        LinearRelation {
            space_dim,
            carrier: Subspace::zero(2 * space_dim),
        }
    }

    /// Graph of the identity on `C^n`.
    pub fn identity(space_dim: usize) -> Self {
        let s = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let eye = CMatrix::identity(space_dim, space_dim).map(|z| z * s);
        LinearRelation {
            space_dim,
            carrier: Subspace::from_orthonormal(mat::vcat(&eye, &eye)),
        }
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    /// Dimension of the carrier subspace.
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.carrier.is_zero()
    }

    pub fn carrier(&self) -> &Subspace {
        &self.carrier
    }

    /// First components of the carrier basis (n × dim block `F`).
    pub fn first_components(&self) -> CMatrix {
        self.carrier
            .basis()
            .view((0, 0), (self.space_dim, self.dim()))
            .into_owned()
    }

    /// Second components of the carrier basis (n × dim block `G`).
    pub fn second_components(&self) -> CMatrix {
        self.carrier
            .basis()
            .view((self.space_dim, 0), (self.space_dim, self.dim()))
            .into_owned()
    }

    pub fn parts(&self, tol: &Tol) -> RelationParts {
        let f = self.first_components();
        let g = self.second_components();
        // carrier ∩ (C^n ⊕ {0}) = {B c : G c = 0}; the stacked basis has
        // orthonormal columns, so the images below are orthonormal as well.
        let ker = Subspace::from_orthonormal(&f * mat::nullspace_floored(&g, tol.rank, 1.0));
        let mul = Subspace::from_orthonormal(&g * mat::nullspace_floored(&f, tol.rank, 1.0));
        RelationParts {
            dom: Subspace::from_block_columns(&f, tol),
            ran: Subspace::from_block_columns(&g, tol),
            ker,
            mul,
        }
    }

    /// Pointwise sum `{(f, g + h) : (f, g) ∈ self, (f, h) ∈ other}`,
    /// computed by matching first components through a joint nullspace.
    pub fn add(&self, other: &Self, tol: &Tol) -> Result<Self> {
        self.check_space(other)?;
        let f1 = self.first_components();
        let g1 = self.second_components();
        let f2 = other.first_components();
        let g2 = other.second_components();
        let stacked = mat::hcat(&f1, &f2.map(|z| -z));
        let null = mat::nullspace_floored(&stacked, tol.rank, 1.0);
        let c1 = null.rows(0, self.dim()).into_owned();
        let c2 = null.rows(self.dim(), other.dim()).into_owned();
        let first = &f1 * &c1;
        let second = &g1 * &c1 + &g2 * &c2;
        let carrier = Subspace::from_block_columns(&mat::vcat(&first, &second), tol);
        Self::from_carrier(self.space_dim, carrier)
    }

    /// `{(f, ζ g) : (f, g) ∈ self}`.
    pub fn scale(&self, zeta: C64, tol: &Tol) -> Self {
        let f = self.first_components();
        let g = self.second_components().map(|z| zeta * z);
        let cols = mat::vcat(&f, &g);
        // the pair map is invertible for ζ ≠ 0, so the dimension is known
        let carrier = if zeta.norm() > 0.0 {
            Subspace::from_orthonormal(mat::orthonormal_span_exact_rank(&cols, self.dim()))
        } else {
            Subspace::from_block_columns(&cols, tol)
        };
        LinearRelation {
            space_dim: self.space_dim,
            carrier,
        }
    }

    /// Composition `self ∘ inner = {(f, k) : (f, g) ∈ inner, (g, k) ∈ self}`,
    /// computed by matching `ran(inner)` against `dom(self)` through a joint
    /// nullspace.
    pub fn compose(&self, inner: &Self, tol: &Tol) -> Result<Self> {
        self.check_space(inner)?;
        let fi = inner.first_components();
        let gi = inner.second_components();
        let fo = self.first_components();
        let go = self.second_components();
        let stacked = mat::hcat(&gi, &fo.map(|z| -z));
        let null = mat::nullspace_floored(&stacked, tol.rank, 1.0);
        let ci = null.rows(0, inner.dim()).into_owned();
        let co = null.rows(inner.dim(), self.dim()).into_owned();
        let first = &fi * &ci;
        let second = &go * &co;
        let carrier = Subspace::from_block_columns(&mat::vcat(&first, &second), tol);
        Self::from_carrier(self.space_dim, carrier)
    }

    /// `{(g, f) : (f, g) ∈ self}`; swapping the components is unitary, so
    /// the carrier basis is reused unchanged.
    pub fn inverse(&self) -> Self {
        let f = self.first_components();
        let g = self.second_components();
        LinearRelation {
            space_dim: self.space_dim,
            carrier: Subspace::from_orthonormal(mat::vcat(&g, &f)),
        }
    }

    /// Adjoint, the orthogonal complement of `{(g, −f) : (f, g) ∈ self}`
    /// in `C^{2n}`. Equivalently: all pairs `(h, k)` with `⟨k, f⟩ = ⟨h, g⟩`
    /// for every `(f, g)` in the relation.
    pub fn adjoint(&self) -> Self {
        let f = self.first_components();
        let g = self.second_components();
        let flipped = Subspace::from_orthonormal(mat::vcat(&g, &f.map(|z| -z)));
        LinearRelation {
            space_dim: self.space_dim,
            carrier: flipped.complement(),
        }
    }

    /// `self − ζI = {(f, g − ζf) : (f, g) ∈ self}`.
    pub fn shift(&self, zeta: C64, _tol: &Tol) -> Self {
        let f = self.first_components();
        let g = self.second_components() - f.map(|z| zeta * z);
        // the pair map (f, g) ↦ (f, g − ζf) is invertible for every ζ
        let carrier = Subspace::from_orthonormal(mat::orthonormal_span_exact_rank(
            &mat::vcat(&f, &g),
            self.dim(),
        ));
        LinearRelation {
            space_dim: self.space_dim,
            carrier,
        }
    }

    /// `(self − ζI)^{-1}`.
    pub fn resolvent(&self, zeta: C64, tol: &Tol) -> Self {
        self.shift(zeta, tol).inverse()
    }

    /// Orthogonal splitting into operator part and multivalued part:
    /// `T_inf = T ∩ ({0} ⊕ C^n)` and `T_op = T ⊖ T_inf`.
    pub fn decompose(&self, tol: &Tol) -> Decomposition {
        let f = self.first_components();
        let null_f = mat::nullspace_floored(&f, tol.rank, 1.0);
        let inf_carrier = Subspace::from_orthonormal(self.carrier.basis() * null_f);
        let op_carrier = self
            .carrier
            .ominus(&inf_carrier, tol)
            .expect("multivalued part is contained in the carrier");
        Decomposition {
            operator_part: LinearRelation {
                space_dim: self.space_dim,
                carrier: op_carrier,
            },
            multivalued_part: LinearRelation {
                space_dim: self.space_dim,
                carrier: inf_carrier,
            },
        }
    }

    /// Restriction `self ∩ ((mul other)^⊥ ⊕ (mul other)^⊥)`, kept on the
    /// original `C^n` with the sub-ambient subspace recorded.
    pub fn restrict(&self, other: &Self, tol: &Tol) -> Result<Restriction> {
        self.check_space(other)?;
        let n = self.space_dim;
        let q = other.parts(tol).mul.complement();
        let qb = q.basis();
        let k = qb.ncols();
        let mut lifted = CMatrix::zeros(2 * n, 2 * k);
        lifted.view_mut((0, 0), (n, k)).copy_from(qb);
        lifted.view_mut((n, k), (n, k)).copy_from(qb);
        let lifted = Subspace::from_orthonormal(lifted);
        let carrier = self.carrier.intersect(&lifted, tol)?;
        Ok(Restriction {
            relation: LinearRelation {
                space_dim: n,
                carrier,
            },
            sub_ambient: q,
        })
    }

    /// Orthogonal complement of the carrier, viewed as a relation.
    pub fn orthogonal_complement(&self) -> Self {
        LinearRelation {
            space_dim: self.space_dim,
            carrier: self.carrier.complement(),
        }
    }

    /// The second component paired with `f`, when `f` lies in the domain and
    /// the relation has trivial multivalued part (so the image is unique).
    pub fn image_of(&self, f: &CVector, tol: &Tol) -> Option<CVector> {
        if f.len() != self.space_dim || self.dim() == 0 {
            return None;
        }
        let fm = self.first_components();
        if mat::nullspace_floored(&fm, tol.rank, 1.0).ncols() > 0 {
            return None;
        }
        // least-squares coefficients through the pseudoinverse
        let svd = mat::svd_jacobi(&fm);
        let mut c = CVector::zeros(self.dim());
        let projected = svd.u.adjoint() * f;
        for i in 0..self.dim() {
            c += svd.v.column(i).into_owned() * (projected[i] / C64::new(svd.sigma[i], 0.0));
        }
        let residual = (&fm * &c - f).norm();
        if residual > tol.eq * f.norm().max(1.0) {
            return None;
        }
        Some(self.second_components() * c)
    }

    pub fn projector_distance(&self, other: &Self) -> f64 {
        self.carrier.projector_distance(&other.carrier)
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tol) -> bool {
        self.space_dim == other.space_dim && self.carrier.approx_eq(&other.carrier, tol)
    }

    /// Whether `other ⊆ self` as sets of pairs.
    pub fn contains(&self, other: &Self, tol: &Tol) -> bool {
        self.space_dim == other.space_dim && self.carrier.contains(&other.carrier, tol)
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space_dim != other.space_dim {
            Err(Error::SpaceDimMismatch {
                left: self.space_dim,
                right: other.space_dim,
            })
        } else {
            Ok(())
        }
    }
}
