//! Deficiency spaces and selfadjoint/symmetric extension constructors.
//!
//! For a closed symmetric relation `A`, the deficiency space at ζ is
//! `N_ζ(A*) = {(f, ζf) ∈ A*}`; its dimension is constant on the connected
//! components of the quasi-regular set and defines the deficiency index.
//! Extensions are built three ways:
//!
//! * `A ∔ N_α(A*)` for real α outside the bound interval — the unique
//!   semi-bounded selfadjoint extension with bound α,
//! * `A ⊕ (V − I)D` with `D ⊆ N_i(A*)` and an isometry `V: D → N_{−i}(A*)`
//!   — the von Neumann parametrization of closed symmetric extensions,
//! * `A ⊕ (V − I)D` with `D ⊆ N_1(−A*)` and a contraction
//!   `V: D → N_{−1}(−A*)` — positive extensions of quasi-null relations
//!   (quasi-null results exactly when `V` is isometric).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::classify;
use crate::error::{Error, Result};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;
use crate::{mat, C64, CMatrix, Tol};

/// Deficiency space `N_ζ(A*) = {(f, ζf) ∈ A*}` as a subspace of `C^{2n}`.
///
/// The pair `(f, ζf)` belongs to `A*` exactly when `f ⊥ ran(A − ζ̄I)`, so
/// the space is computed from the orthogonal complement of the columns of
/// `G − ζ̄F` and lifted to normalized graph pairs. This agrees with the
/// literal intersection of `carrier(A*)` with the graph subspace of `ζI`.
pub fn deficiency_space(a: &LinearRelation, zeta: C64, tol: &Tol) -> Subspace {
    let n = a.space_dim();
    let f = a.first_components();
    let g = a.second_components();
    let shifted = &g - &f.map(|z| zeta.conj() * z);
    let range = mat::orthonormal_span_floored(&shifted, tol.rank, 1.0);
    let q = mat::complement_basis(&range, n);
    let scale = C64::new(1.0 / (1.0 + zeta.norm_sqr()).sqrt(), 0.0);
    let lifted = mat::vcat(&q.map(|z| z * scale), &q.map(|z| z * zeta * scale));
    Subspace::from_orthonormal(lifted)
}

/// Common dimension of `N_ζ(A*)` over the probe points, all of which must
/// lie in the quasi-regular set (at finite dimension: away from the point
/// spectrum). Disagreeing probes are an error; for a symmetric relation
/// the quasi-regular set is connected, so disagreement signals a numerical
/// rank misjudgment.
pub fn deficiency_index(a: &LinearRelation, probes: &[C64], tol: &Tol) -> Result<usize> {
    if !classify::is_symmetric(a, tol) {
        return Err(Error::NotSymmetric);
    }
    if probes.is_empty() {
        return Err(Error::InvalidParameter("deficiency index needs at least one probe"));
    }
    let f = a.first_components();
    let g = a.second_components();
    let mut dims = Vec::with_capacity(probes.len());
    for &zeta in probes {
        let shifted = &g - &f.map(|z| zeta * z);
        if a.dim() > 0 {
            let smax = mat::spectral_norm(&shifted);
            if mat::min_singular(&shifted) <= tol.rank * smax.max(1.0) {
                return Err(Error::ProbeNotQuasiRegular { probe: zeta });
            }
        }
        dims.push(deficiency_space(a, zeta, tol).dim());
    }
    if dims.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::ProbeDisagreement {
            probes: probes.to_vec(),
            dims,
        });
    }
    Ok(dims[0])
}

/// The extension `S_α = A ∔ N_α(A*)` for real α below the greatest lower
/// bound (or above the smallest upper bound) of a closed symmetric
/// semi-bounded relation. The sum must be direct; the result is selfadjoint
/// with α as an eigenvalue of multiplicity equal to the deficiency index and
/// with bound α.
pub fn extend_semibounded(a: &LinearRelation, alpha: f64, tol: &Tol) -> Result<LinearRelation> {
    let b = classify::bounds(a, tol)?;
    if alpha >= b.lower && alpha <= b.upper {
        return Err(Error::AlphaInsideBounds {
            alpha,
            lower: b.lower,
            upper: b.upper,
        });
    }
    let deficiency = deficiency_space(a, C64::new(alpha, 0.0), tol);
    let sum = a.carrier().sum(&deficiency, tol)?;
    if !sum.direct {
        return Err(Error::NonDirectSum);
    }
    LinearRelation::from_carrier(a.space_dim(), sum.space)
}

/// Whether the map matrix of an extension parameter set is validated as a
/// plain contraction or as an isometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VMode {
    Contraction,
    Isometry,
}

/// Parameters for the extension formulas `S = A ⊕ (V − I)D`.
///
/// `selection` is a subspace of the relevant source deficiency space of the
/// base relation; `map_matrix` expresses `V` column-by-column from the
/// stored orthonormal basis of `selection` to the orthonormal basis of the
/// target deficiency space as computed by [`deficiency_space`] (deterministic
/// given the base relation). The contraction/isometry property is measured
/// in the doubled norm of `(H⊕H) ⊕ (H⊕H)`, which with orthonormal bases on
/// both sides is the ordinary matrix 2-norm.
#[derive(Clone, Debug)]
pub struct ExtensionParams {
    pub base: LinearRelation,
    pub selection: Subspace,
    pub map_matrix: CMatrix,
    pub mode: VMode,
}

impl ExtensionParams {
    pub fn new(base: LinearRelation, selection: Subspace, map_matrix: CMatrix, mode: VMode) -> Self {
        ExtensionParams {
            base,
            selection,
            map_matrix,
            mode,
        }
    }
}

fn check_map_shape(params: &ExtensionParams, target: &Subspace) -> Result<()> {
    if params.map_matrix.nrows() != target.dim() {
        return Err(Error::DimensionMismatch {
            expected: target.dim(),
            got: params.map_matrix.nrows(),
        });
    }
    if params.map_matrix.ncols() != params.selection.dim() {
        return Err(Error::DimensionMismatch {
            expected: params.selection.dim(),
            got: params.map_matrix.ncols(),
        });
    }
    Ok(())
}

fn check_isometry(v: &CMatrix, tol: &Tol) -> Result<()> {
    let k = v.ncols();
    let defect = mat::max_abs(&(v.adjoint() * v - CMatrix::identity(k, k)));
    if defect > tol.eq {
        return Err(Error::NotIsometry { defect });
    }
    Ok(())
}

fn check_contraction(v: &CMatrix, tol: &Tol) -> Result<()> {
    let sigma_max = mat::spectral_norm(v);
    if sigma_max > 1.0 + tol.psd {
        return Err(Error::NotContraction { sigma_max });
    }
    Ok(())
}

/// Columns spanning `(V − I)D`.
fn summand_columns(params: &ExtensionParams, target: &Subspace) -> CMatrix {
    target.basis() * &params.map_matrix - params.selection.basis()
}

fn orthogonal_extension(
    base: &LinearRelation,
    summand_cols: &CMatrix,
    expected_dim: usize,
    tol: &Tol,
) -> Result<LinearRelation> {
    let summand = Subspace::from_block_columns(summand_cols, tol);
    if summand.dim() != expected_dim {
        return Err(Error::InternalInconsistency {
            context: "extension summand lost rank",
            defect: (expected_dim - summand.dim()) as f64,
        });
    }
    if summand.dim() > 0 && base.dim() > 0 {
        let overlap = mat::max_abs(&(base.carrier().basis().adjoint() * summand.basis()));
        if overlap > tol.orth {
            return Err(Error::ExtensionNotOrthogonal { defect: overlap });
        }
    }
    let sum = base.carrier().sum(&summand, tol)?;
    if !sum.direct {
        return Err(Error::NonDirectSum);
    }
    LinearRelation::from_carrier(base.space_dim(), sum.space)
}

/// Closed symmetric extension `S = A ⊕ (V − I)D` with `D ⊆ N_i(A*)` and an
/// isometry `V: D → N_{−i}(A*)`. Every closed symmetric extension of a
/// closed symmetric relation arises this way, and the index bookkeeping
/// `η_A = dim N_{±i}(S*) + dim(S ⊖ A)` holds for the result.
pub fn symmetric_extension_vn(params: &ExtensionParams, tol: &Tol) -> Result<LinearRelation> {
    if params.mode != VMode::Isometry {
        return Err(Error::InvalidParameter(
            "the von Neumann formula requires an isometric map",
        ));
    }
    let a = &params.base;
    if !classify::is_symmetric(a, tol) {
        return Err(Error::NotSymmetric);
    }
    let source = deficiency_space(a, C64::new(0.0, 1.0), tol);
    let target = deficiency_space(a, C64::new(0.0, -1.0), tol);
    let defect = source.containment_defect(&params.selection);
    if defect > tol.eq {
        return Err(Error::NotContained {
            what: "selection inside N_i(A*)",
            defect,
        });
    }
    check_map_shape(params, &target)?;
    check_isometry(&params.map_matrix, tol)?;
    let cols = summand_columns(params, &target);
    orthogonal_extension(a, &cols, params.selection.dim(), tol)
}

/// Positive extension `S = A ⊕ (V − I)D` of a closed quasi-null relation,
/// with `D ⊆ N_1(−A*)` and a contraction `V: D → N_{−1}(−A*)`; the result
/// is quasi-null exactly when `V` is isometric.
///
/// The map must correspond to a symmetric extension: contractions between
/// the deficiency bases that break the cross orthogonality
/// `⟨f, k⟩ = ⟨g, h⟩ = 0` produce a non-symmetric sum and are rejected.
pub fn positive_extension_qn(params: &ExtensionParams, tol: &Tol) -> Result<LinearRelation> {
    let a = &params.base;
    if !classify::is_quasi_null(a, tol) {
        return Err(Error::NotQuasiNull);
    }
    let neg = a.scale(C64::new(-1.0, 0.0), tol);
    let source = deficiency_space(&neg, C64::new(1.0, 0.0), tol);
    let target = deficiency_space(&neg, C64::new(-1.0, 0.0), tol);
    let defect = source.containment_defect(&params.selection);
    if defect > tol.eq {
        return Err(Error::NotContained {
            what: "selection inside N_1(-A*)",
            defect,
        });
    }
    check_map_shape(params, &target)?;
    match params.mode {
        VMode::Contraction => check_contraction(&params.map_matrix, tol)?,
        VMode::Isometry => check_isometry(&params.map_matrix, tol)?,
    }
    let cols = summand_columns(params, &target);
    let s = orthogonal_extension(a, &cols, params.selection.dim(), tol)?;
    if !classify::is_symmetric(&s, tol) {
        let form = s.first_components().adjoint() * s.second_components();
        return Err(Error::ExtensionNotSymmetric {
            defect: mat::hermitian_defect(&form),
        });
    }
    Ok(s)
}

/// Verification data reported by [`decompose_extension`].
#[derive(Clone, Debug)]
pub struct ExtensionChecks {
    /// Containment defect of `L` in `A*`.
    pub l_in_adjoint_defect: f64,
    pub l_positive: bool,
    /// PSD verdict of the joint form on the concatenated bases of `A` and
    /// `L`; equivalent to positivity of `S` but computed independently of
    /// the stored carrier of `S`.
    pub joint_form_psd: bool,
    /// Worst sampled margin of the scalar condition
    /// `⟨f, g⟩ + ⟨h, k⟩ ≥ 2|a|`, `a ∈ {Re⟨f, k⟩, Im⟨f, k⟩}`, over random
    /// normalized pairs.
    pub sample_worst_margin: f64,
    pub samples: usize,
    /// For a quasi-null base: largest of `max|⟨f, k⟩|` and `max|⟨g, h⟩|`
    /// over basis pairs.
    pub qn_orthogonality_defect: Option<f64>,
}

impl ExtensionChecks {
    pub fn all_pass(&self, tol: &Tol) -> bool {
        self.l_in_adjoint_defect <= tol.eq
            && self.l_positive
            && self.joint_form_psd
            && self.sample_worst_margin >= -10.0 * tol.psd
    }
}

/// Default Monte-Carlo sample count for the scalar inequality spot checks.
pub const DEFAULT_SAMPLES: usize = 256;

/// Split a closed symmetric extension `S` of a closed positive relation `A`
/// as `S = A ⊕ L` with `L = S ⊖ A`, and report the positivity checks: `S`
/// is positive exactly when `L ⊆ A*`, `L` is positive, and the joint form
/// condition holds.
pub fn decompose_extension(
    s: &LinearRelation,
    a: &LinearRelation,
    samples: usize,
    seed: u64,
    tol: &Tol,
) -> Result<(LinearRelation, ExtensionChecks)> {
    if !classify::is_symmetric(a, tol) || !classify::is_symmetric(s, tol) {
        return Err(Error::NotSymmetric);
    }
    if !classify::is_positive(a, tol) {
        return Err(Error::NotPositive);
    }
    let defect = s.carrier().containment_defect(a.carrier());
    if defect > tol.eq {
        return Err(Error::NotContained {
            what: "base relation inside the extension",
            defect,
        });
    }
    let l_carrier = s.carrier().ominus(a.carrier(), tol)?;
    let l = LinearRelation::from_carrier(s.space_dim(), l_carrier)?;

    let adjoint = a.adjoint();
    let l_in_adjoint_defect = adjoint.carrier().containment_defect(l.carrier());
    let l_positive = classify::is_positive(&l, tol);

    // joint form on the concatenated orthogonal bases of A and L
    let fa = a.first_components();
    let ga = a.second_components();
    let fl = l.first_components();
    let gl = l.second_components();
    let f_joint = mat::hcat(&fa, &fl);
    let g_joint = mat::hcat(&ga, &gl);
    let h_joint = f_joint.adjoint() * &g_joint;
    let joint_form_psd = if mat::hermitian_defect(&h_joint) > tol.eq {
        false
    } else {
        let (vals, _) = mat::herm_eigen(&h_joint);
        match vals.first() {
            None => true,
            Some(&min) => {
                let scale = vals.iter().fold(1.0f64, |acc, &v| acc.max(v.abs()));
                min >= -tol.psd * scale
            }
        }
    };

    // Monte-Carlo spot checks of the scalar inequality on random pairs
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut sample_worst_margin = f64::INFINITY;
    let effective = if a.dim() == 0 || l.dim() == 0 { 0 } else { samples };
    for _ in 0..effective {
        let ca = random_unit_coeffs(&mut rng, a.dim());
        let cl = random_unit_coeffs(&mut rng, l.dim());
        let f = &fa * &ca;
        let g = &ga * &ca;
        let h = &fl * &cl;
        let k = &gl * &cl;
        let fg = f.dotc(&g).re;
        let hk = h.dotc(&k).re;
        let fk = f.dotc(&k);
        let lhs = fg + hk;
        let rhs = 2.0 * fk.re.abs().max(fk.im.abs());
        sample_worst_margin = sample_worst_margin.min(lhs - rhs);
    }
    if effective == 0 {
        sample_worst_margin = 0.0;
    }

    let qn_orthogonality_defect = if classify::is_quasi_null(a, tol) {
        let fk = mat::max_abs(&(fa.adjoint() * &gl));
        let gh = mat::max_abs(&(ga.adjoint() * &fl));
        Some(fk.max(gh))
    } else {
        None
    };

    Ok((
        l,
        ExtensionChecks {
            l_in_adjoint_defect,
            l_positive,
            joint_form_psd,
            sample_worst_margin,
            samples: effective,
            qn_orthogonality_defect,
        },
    ))
}

fn random_unit_coeffs(rng: &mut ChaCha12Rng, dim: usize) -> crate::CVector {
    let mut v = crate::CVector::from_fn(dim, |_, _| {
        C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    });
    let norm = v.norm();
    if norm > 0.0 {
        v /= C64::new(norm, 0.0);
    }
    v
}
