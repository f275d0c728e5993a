//! Dense complex-matrix kernels shared by the higher-level modules.

use crate::error::{Error, Result};
use crate::{C64, CMatrix};

/// Gram-deviation threshold below which an input basis is adopted verbatim
/// instead of being re-orthonormalized. Keeps emit/parse round trips exact.
pub(crate) const ADOPT_TOL: f64 = 1e-12;

pub(crate) fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Max-entry deviation of `m` from its own conjugate transpose.
pub(crate) fn hermitian_defect(m: &CMatrix) -> f64 {
    max_abs(&(m - m.adjoint()))
}

pub(crate) fn hermitian_part(m: &CMatrix) -> CMatrix {
    (m + m.adjoint()).map(|z| z * 0.5)
}

/// Thin singular value decomposition `a = u·diag(sigma)·v^H` computed by
/// one-sided Jacobi rotations: unitary column operations orthogonalize the
/// columns, whose norms are then the singular values.
///
/// `u` is m×k with orthonormal columns where `sigma` is positive (columns
/// belonging to zero singular values are zero), `sigma` has length k sorted
/// descending, and `v` is k×k unitary. Jacobi is used instead of the
/// bidiagonalization route because it orthogonalizes with high relative
/// accuracy even on rank-deficient complex inputs.
pub(crate) struct JacobiSvd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

pub(crate) fn svd_jacobi(a: &CMatrix) -> JacobiSvd {
    let m = a.nrows();
    let k = a.ncols();
    let mut work = a.clone();
    let mut v = CMatrix::identity(k, k);
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for i in 0..k {
            for j in (i + 1)..k {
                let ai = work.column(i).into_owned();
                let aj = work.column(j).into_owned();
                let alpha = ai.norm_squared();
                let beta = aj.norm_squared();
                if alpha <= f64::MIN_POSITIVE || beta <= f64::MIN_POSITIVE {
                    continue;
                }
                let p: C64 = ai.dotc(&aj);
                let pn = p.norm();
                if pn <= 1e-15 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let phase_conj = (p / pn).conj();
                let tau = (beta - alpha) / (2.0 * pn);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (cc, ss) = (C64::new(c, 0.0), C64::new(s, 0.0));
                let new_i = ai.map(|z| cc * z) - aj.map(|z| ss * phase_conj * z);
                let new_j = ai.map(|z| ss * z) + aj.map(|z| cc * phase_conj * z);
                work.set_column(i, &new_i);
                work.set_column(j, &new_j);
                let vi = v.column(i).into_owned();
                let vj = v.column(j).into_owned();
                let nvi = vi.map(|z| cc * z) - vj.map(|z| ss * phase_conj * z);
                let nvj = vi.map(|z| ss * z) + vj.map(|z| cc * phase_conj * z);
                v.set_column(i, &nvi);
                v.set_column(j, &nvj);
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    let norms: Vec<f64> = (0..k).map(|i| work.column(i).norm()).collect();
    order.sort_by(|&a, &b| norms[b].total_cmp(&norms[a]));
    let mut u = CMatrix::zeros(m, k);
    let mut sigma = Vec::with_capacity(k);
    let mut v_sorted = CMatrix::zeros(k, k);
    for (slot, &idx) in order.iter().enumerate() {
        let n = norms[idx];
        sigma.push(n);
        if n > f64::MIN_POSITIVE {
            u.set_column(slot, &work.column(idx).into_owned().map(|z| z / n));
        }
        v_sorted.set_column(slot, &v.column(idx).into_owned());
    }
    JacobiSvd {
        u,
        sigma,
        v: v_sorted,
    }
}

/// Largest singular value (0 for empty matrices).
pub(crate) fn spectral_norm(m: &CMatrix) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    svd_jacobi(m).sigma[0]
}

/// Smallest singular value (0 for empty matrices).
pub(crate) fn min_singular(m: &CMatrix) -> f64 {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0.0;
    }
    *svd_jacobi(m).sigma.last().unwrap()
}

pub(crate) fn hcat(a: &CMatrix, b: &CMatrix) -> CMatrix {
    debug_assert_eq!(a.nrows(), b.nrows());
    let mut out = CMatrix::zeros(a.nrows(), a.ncols() + b.ncols());
    out.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    out.view_mut((0, a.ncols()), (b.nrows(), b.ncols()))
        .copy_from(b);
    out
}

pub(crate) fn vcat(a: &CMatrix, b: &CMatrix) -> CMatrix {
    debug_assert_eq!(a.ncols(), b.ncols());
    let mut out = CMatrix::zeros(a.nrows() + b.nrows(), a.ncols());
    out.view_mut((0, 0), (a.nrows(), a.ncols())).copy_from(a);
    out.view_mut((a.nrows(), 0), (b.nrows(), b.ncols()))
        .copy_from(b);
    out
}

/// Multiply each column by a unit phase so that its entry of largest modulus
/// becomes real and positive. Deterministic tie break: first maximal entry.
pub(crate) fn canonical_phase(m: &mut CMatrix) {
    for j in 0..m.ncols() {
        let mut pivot = 0usize;
        let mut best = 0.0f64;
        for i in 0..m.nrows() {
            let a = m[(i, j)].norm();
            if a > best {
                best = a;
                pivot = i;
            }
        }
        if best > 0.0 {
            let factor = m[(pivot, j)].conj() / best;
            for i in 0..m.nrows() {
                m[(i, j)] *= factor;
            }
        }
    }
}

/// Orthonormal basis for the column span. Rank is decided by a singular-value
/// cutoff relative to the largest singular value. Columns that already form
/// an orthonormal family are adopted unchanged.
pub(crate) fn orthonormal_span(cols: &CMatrix, rel_tol: f64) -> CMatrix {
    orthonormal_span_floored(cols, rel_tol, 0.0)
}

/// As `orthonormal_span`, but the cutoff reference never drops below
/// `floor`: `cutoff = rel_tol · max(σ_max, floor)`. Blocks extracted from an
/// orthonormal carrier have a natural scale of one, so `floor = 1` keeps a
/// numerically-zero block from being mistaken for a full-rank one.
pub(crate) fn orthonormal_span_floored(cols: &CMatrix, rel_tol: f64, floor: f64) -> CMatrix {
    let m = cols.nrows();
    let k = cols.ncols();
    if k == 0 {
        return CMatrix::zeros(m, 0);
    }
    if k <= m {
        let gram = cols.adjoint() * cols;
        if max_abs(&(&gram - CMatrix::identity(k, k))) < ADOPT_TOL {
            return cols.clone();
        }
    }
    let svd = svd_jacobi(cols);
    let reference = svd.sigma[0].max(floor);
    let rank = if reference <= f64::MIN_POSITIVE {
        0
    } else {
        svd.sigma.iter().filter(|&&s| s > rel_tol * reference).count()
    };
    let mut basis = svd.u.columns(0, rank.min(m)).into_owned();
    canonical_phase(&mut basis);
    basis
}

/// Orthonormal basis with a prescribed rank (no threshold decision); used
/// for images of the carrier under invertible maps, where the rank is known
/// exactly.
pub(crate) fn orthonormal_span_exact_rank(cols: &CMatrix, rank: usize) -> CMatrix {
    let m = cols.nrows();
    let k = cols.ncols();
    if k == 0 || rank == 0 {
        return CMatrix::zeros(m, 0);
    }
    if k <= m && rank == k {
        let gram = cols.adjoint() * cols;
        if max_abs(&(&gram - CMatrix::identity(k, k))) < ADOPT_TOL {
            return cols.clone();
        }
    }
    let svd = svd_jacobi(cols);
    let take = rank.min(k).min(m);
    let mut basis = svd.u.columns(0, take).into_owned();
    canonical_phase(&mut basis);
    basis
}

/// Orthonormal basis of the orthogonal complement of the span of `basis`
/// (whose columns must be orthonormal) inside `C^ambient`.
///
/// Computed from the eigendecomposition of the orthogonal projector, whose
/// spectrum is exactly {0, 1}; the split at 1/2 is therefore well conditioned.
pub(crate) fn complement_basis(basis: &CMatrix, ambient: usize) -> CMatrix {
    debug_assert_eq!(basis.nrows(), ambient);
    let d = basis.ncols();
    if d == 0 {
        return CMatrix::identity(ambient, ambient);
    }
    if d >= ambient {
        return CMatrix::zeros(ambient, 0);
    }
    let residual = CMatrix::identity(ambient, ambient) - basis * basis.adjoint();
    let (vals, vecs) = herm_eigen(&residual);
    let keep: Vec<usize> = vals
        .iter()
        .enumerate()
        .filter(|&(_, v)| *v > 0.5)
        .map(|(i, _)| i)
        .collect();
    let cols: Vec<_> = keep.iter().map(|&i| vecs.column(i).into_owned()).collect();
    let mut out = if cols.is_empty() {
        CMatrix::zeros(ambient, 0)
    } else {
        CMatrix::from_columns(&cols)
    };
    canonical_phase(&mut out);
    out
}

/// Orthonormal basis of the right nullspace of `a`, with the same
/// rank-revealing cutoff as `orthonormal_span`.
pub(crate) fn nullspace(a: &CMatrix, rel_tol: f64) -> CMatrix {
    nullspace_floored(a, rel_tol, 0.0)
}

/// Nullspace with the floored cutoff of `orthonormal_span_floored`.
pub(crate) fn nullspace_floored(a: &CMatrix, rel_tol: f64, floor: f64) -> CMatrix {
    let k = a.ncols();
    if k == 0 {
        return CMatrix::zeros(0, 0);
    }
    if a.nrows() == 0 {
        return CMatrix::identity(k, k);
    }
    let row_space = orthonormal_span_floored(&a.adjoint(), rel_tol, floor);
    complement_basis(&row_space, k)
}

/// Hermitian eigendecomposition with eigenvalues sorted ascending.
/// The skew part of the input is discarded first.
pub(crate) fn herm_eigen(h: &CMatrix) -> (Vec<f64>, CMatrix) {
    let n = h.nrows();
    debug_assert_eq!(n, h.ncols());
    if n == 0 {
        return (Vec::new(), CMatrix::zeros(0, 0));
    }
    let se = hermitian_part(h).symmetric_eigen();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| se.eigenvalues[a].total_cmp(&se.eigenvalues[b]));
    let vals = idx.iter().map(|&i| se.eigenvalues[i]).collect();
    let cols: Vec<_> = idx
        .iter()
        .map(|&i| se.eigenvectors.column(i).into_owned())
        .collect();
    (vals, CMatrix::from_columns(&cols))
}

/// Eigenvalues of a general complex square matrix via its Schur form.
pub(crate) fn eigenvalues(m: &CMatrix) -> Result<Vec<C64>> {
    let n = m.nrows();
    debug_assert_eq!(n, m.ncols());
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![m[(0, 0)]]);
    }
    let schur =
        nalgebra::linalg::Schur::try_new(m.clone(), 1e-14, 100_000).ok_or(Error::Eigensolver)?;
    let t = schur.unpack().1;
    Ok((0..n).map(|i| t[(i, i)]).collect())
}
