//! Predicates and numerics for relations: symmetry, selfadjointness,
//! positivity, quasi-nullity, contractivity, semi-bounded bounds, norms,
//! resolvents and spectra.
//!
//! All predicates work on the coordinate form of the carrier basis: with
//! `F` (resp. `G`) the matrix of first (resp. second) components, the inner
//! products `⟨f_i, g_j⟩` are the entries of `F*G`. Since the carrier basis
//! is orthonormal, `F*F + G*G = I`, so every form matrix considered here
//! has entries bounded by one; tolerances are applied on that scale.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::relation::LinearRelation;
use crate::{mat, C64, CMatrix, Tol};

/// Absolute clustering radius for computed eigenvalues, scaled by
/// `max(1, |ζ|)`; eigenvalues closer than this are merged and their
/// multiplicities summed.
pub const EIGENVALUE_CLUSTER: f64 = 1e-7;

/// `⟨f_i, g_j⟩` matrix of the carrier basis.
fn form(t: &LinearRelation) -> CMatrix {
    t.first_components().adjoint() * t.second_components()
}

fn psd_ok(vals: &[f64], psd_tol: f64) -> bool {
    match vals.first() {
        None => true,
        Some(&min) => {
            let scale = vals.iter().fold(1.0f64, |a, &v| a.max(v.abs()));
            min >= -psd_tol * scale
        }
    }
}

/// `T ⊆ T*`, decided through Hermitian-ness of the coordinate form.
pub fn is_symmetric(t: &LinearRelation, tol: &Tol) -> bool {
    mat::hermitian_defect(&form(t)) <= tol.eq
}

/// `T = T*`. Two equivalent criteria are evaluated: symmetry together with
/// `dim T = n`, and carrier equality with the computed adjoint. Disagreement
/// beyond tolerance is an internal consistency error.
pub fn is_selfadjoint(t: &LinearRelation, tol: &Tol) -> Result<bool> {
    let by_dim = is_symmetric(t, tol) && t.dim() == t.space_dim();
    let adj = t.adjoint();
    let by_adjoint = t.approx_eq(&adj, tol);
    if by_dim != by_adjoint {
        return Err(Error::InternalInconsistency {
            context: "selfadjointness criteria disagree",
            defect: t.projector_distance(&adj),
        });
    }
    Ok(by_dim)
}

/// `⟨f, g⟩ ≥ 0` on all pairs: the coordinate form is Hermitian positive
/// semidefinite.
pub fn is_positive(t: &LinearRelation, tol: &Tol) -> bool {
    let h = form(t);
    if mat::hermitian_defect(&h) > tol.eq {
        return false;
    }
    let (vals, _) = mat::herm_eigen(&h);
    psd_ok(&vals, tol.psd)
}

/// `⟨f, g⟩ = 0` on all pairs. The threshold scales with `‖F‖·‖G‖` but never
/// drops below the roundoff floor of the stored carrier, so relations whose
/// first or second block is numerically zero are judged correctly.
pub fn is_quasi_null(t: &LinearRelation, tol: &Tol) -> bool {
    let h = form(t);
    let scale =
        mat::spectral_norm(&t.first_components()) * mat::spectral_norm(&t.second_components());
    mat::max_abs(&h) <= tol.eq * scale + 1e-13
}

/// `‖g‖ ≤ ‖f‖` on all pairs: `F*F − G*G` is positive semidefinite.
pub fn is_contraction(t: &LinearRelation, tol: &Tol) -> bool {
    let f = t.first_components();
    let g = t.second_components();
    let q = f.adjoint() * &f - g.adjoint() * &g;
    let (vals, _) = mat::herm_eigen(&q);
    psd_ok(&vals, tol.psd)
}

/// `‖g‖ = ‖f‖` on all pairs: `F*F = G*G`.
pub fn is_isometry(t: &LinearRelation, tol: &Tol) -> bool {
    let f = t.first_components();
    let g = t.second_components();
    mat::max_abs(&(f.adjoint() * &f - g.adjoint() * &g)) <= tol.eq
}

/// Greatest lower and smallest upper bound of a symmetric relation:
/// the extreme values of `⟨f, g⟩` over pairs with `‖f‖ = 1`.
///
/// For the empty domain the bounds follow the empty inf/sup convention:
/// `lower = +∞`, `upper = −∞`.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

impl Bounds {
    pub fn exist(&self) -> bool {
        self.lower.is_finite() && self.upper.is_finite()
    }
}

/// Quadratic form of the relation expressed in coordinates where the first
/// component has unit norm: with `F = UΣV*` restricted to its numerical row
/// space, the matrix `K = Σ^{-1}V*(F*G)VΣ^{-1}` satisfies `⟨f, g⟩ = y*Ky`
/// for `f = Uy`. Deflating the nullspace of `F` removes the multivalued
/// directions, on which the pencil `(F*G, F*F)` is singular. Returns `None`
/// when the domain is trivial.
fn reduced_form(t: &LinearRelation, tol: &Tol) -> Option<CMatrix> {
    if t.dim() == 0 {
        return None;
    }
    let f = t.first_components();
    let g = t.second_components();
    let svd = mat::svd_jacobi(&f);
    // the block comes from an orthonormal carrier, so its natural scale is 1
    let reference = svd.sigma[0].max(1.0);
    let rank = svd.sigma.iter().filter(|&&s| s > tol.rank * reference).count();
    if rank == 0 {
        return None;
    }
    let v = svd.v.columns(0, rank).into_owned();
    let sinv = CMatrix::from_fn(rank, rank, |i, j| {
        if i == j {
            C64::new(1.0 / svd.sigma[i], 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    let w = v * sinv;
    Some(mat::hermitian_part(&(w.adjoint() * (f.adjoint() * g) * &w)))
}

pub fn bounds(t: &LinearRelation, tol: &Tol) -> Result<Bounds> {
    if !is_symmetric(t, tol) {
        return Err(Error::NotSymmetric);
    }
    match reduced_form(t, tol) {
        None => Ok(Bounds {
            lower: f64::INFINITY,
            upper: f64::NEG_INFINITY,
        }),
        Some(k) => {
            let (vals, _) = mat::herm_eigen(&k);
            Ok(Bounds {
                lower: vals[0],
                upper: *vals.last().unwrap(),
            })
        }
    }
}

/// `sup ‖g‖ / ‖f‖` over the relation; `+∞` exactly when the multivalued
/// part is nontrivial (the relation is then not the graph of an operator).
pub fn relation_norm(t: &LinearRelation, tol: &Tol) -> f64 {
    if t.dim() == 0 {
        return 0.0;
    }
    let f = t.first_components();
    if mat::nullspace_floored(&f, tol.rank, 1.0).ncols() > 0 {
        return f64::INFINITY;
    }
    let g = t.second_components();
    let d = t.dim();
    let svd = mat::svd_jacobi(&f);
    let sinv = CMatrix::from_fn(d, d, |i, j| {
        if i == j {
            C64::new(1.0 / svd.sigma[i], 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    });
    mat::spectral_norm(&(g * &svd.v * sinv))
}

/// `‖(T − ζI)^{-1}‖`; `+∞` exactly when ζ is an eigenvalue.
pub fn resolvent_norm(t: &LinearRelation, zeta: C64, tol: &Tol) -> f64 {
    relation_norm(&t.resolvent(zeta, tol), tol)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenvalue {
    pub value: C64,
    pub multiplicity: usize,
}

/// Point spectrum: either a finite list of eigenvalues with multiplicities,
/// or all of `C` (every ζ admits a nontrivial kernel).
#[derive(Clone, Debug, PartialEq)]
pub enum PointSpectrum {
    Finite(Vec<Eigenvalue>),
    AllOfC,
}

/// Spectrum: either a finite set or all of `C` (the resolvent set is empty,
/// which happens whenever the pencil is singular on a common block or the
/// range is never the whole space).
#[derive(Clone, Debug, PartialEq)]
pub enum FullSpectrum {
    Finite(Vec<C64>),
    AllOfC,
}

/// Spectral data of a relation at finite dimension.
///
/// The continuous spectrum is structurally empty (every finite-dimensional
/// linear set is closed) and the point spectrum of infinite multiplicity is
/// structurally empty as well; both facts are recorded by
/// [`SpectrumReport::STRUCTURAL_NOTE`] rather than computed. The discrete
/// spectrum coincides with the point spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub point: PointSpectrum,
    pub full: FullSpectrum,
}

impl SpectrumReport {
    pub const STRUCTURAL_NOTE: &'static str =
        "sigma_c and sigma_p_inf are empty at finite dimension; sigma_d equals sigma_p";

    /// Total multiplicity of eigenvalues within `radius` of `z`.
    pub fn multiplicity_near(&self, z: C64, radius: f64) -> usize {
        match &self.point {
            PointSpectrum::AllOfC => usize::MAX,
            PointSpectrum::Finite(evs) => evs
                .iter()
                .filter(|e| (e.value - z).norm() <= radius)
                .map(|e| e.multiplicity)
                .sum(),
        }
    }

    pub fn eigenvalues(&self) -> &[Eigenvalue] {
        match &self.point {
            PointSpectrum::Finite(evs) => evs,
            PointSpectrum::AllOfC => &[],
        }
    }
}

/// Merge values closer than `EIGENVALUE_CLUSTER · max(1, |ζ|)`.
fn cluster_values(vals: &[C64]) -> Vec<(C64, usize)> {
    let n = vals.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let radius = EIGENVALUE_CLUSTER * vals[i].norm().max(vals[j].norm()).max(1.0);
            if (vals[i] - vals[j]).norm() <= radius {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<C64>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(vals[i]);
    }
    let mut out: Vec<(C64, usize)> = groups
        .values()
        .map(|g| {
            let mean = g.iter().sum::<C64>() / C64::new(g.len() as f64, 0.0);
            (mean, g.len())
        })
        .collect();
    out.sort_by(|a, b| (a.0.re, a.0.im).partial_cmp(&(b.0.re, b.0.im)).unwrap());
    out
}

fn random_complex_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

/// All ζ where the rectangular pencil `E − ζH` loses column rank, with the
/// nullity at ζ as multiplicity.
///
/// A random row compression turns the rectangular pencil into a square one
/// whose eigenvalue set contains every rank-dropping ζ of the original
/// (kernels survive compression); candidates are then verified by a
/// singular-value rank test on the rectangular pencil, which removes
/// spurious points and yields multiplicities. If two independent
/// compressions are singular, the pencil itself is singular and the answer
/// is all of `C`.
fn rectangular_pencil_eigenvalues(
    e: &CMatrix,
    h: &CMatrix,
    rng: &mut ChaCha12Rng,
) -> Result<PointSpectrum> {
    let rows = e.nrows();
    let cols = e.ncols();
    if cols == 0 {
        return Ok(PointSpectrum::Finite(Vec::new()));
    }
    if cols > rows {
        return Ok(PointSpectrum::AllOfC);
    }
    let scale_e = mat::spectral_norm(e);
    let scale_h = mat::spectral_norm(h);
    if scale_e <= 1e-14 && scale_h <= 1e-14 {
        return Ok(PointSpectrum::AllOfC);
    }
    let rho = 2.0 * (1.0 + scale_e) / (1.0 + scale_h);
    for _ in 0..2 {
        let r = random_complex_matrix(rng, cols, rows);
        let a = &r * e;
        let b = &r * h;
        for _ in 0..6 {
            let mu = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)) * rho;
            let shifted = &a - &b.map(|z| mu * z);
            let smax = mat::spectral_norm(&shifted);
            if smax <= f64::MIN_POSITIVE || mat::min_singular(&shifted) <= 1e-10 * smax {
                continue;
            }
            let m = shifted.clone().lu().solve(&b).ok_or(Error::Eigensolver)?;
            let lambdas = mat::eigenvalues(&m)?;
            let lmax = lambdas.iter().map(|l| l.norm()).fold(0.0, f64::max);
            let candidates: Vec<C64> = lambdas
                .into_iter()
                .filter(|l| l.norm() > 1e-13 * (1.0 + lmax))
                .map(|l| mu + C64::new(1.0, 0.0) / l)
                .collect();
            let mut out = Vec::new();
            for (z, _) in cluster_values(&candidates) {
                let pencil_at = e - &h.map(|x| z * x);
                let svd = mat::svd_jacobi(&pencil_at);
                let threshold = EIGENVALUE_CLUSTER * z.norm().max(1.0);
                let nullity = svd.sigma.iter().filter(|&&s| s <= threshold).count();
                if nullity > 0 {
                    out.push(Eigenvalue {
                        value: z,
                        multiplicity: nullity,
                    });
                }
            }
            return Ok(PointSpectrum::Finite(out));
        }
        // every shift of this compression was singular; retry once before
        // declaring the pencil singular
    }
    Ok(PointSpectrum::AllOfC)
}

fn cluster_reals(vals: &[f64]) -> Vec<Eigenvalue> {
    let as_complex: Vec<C64> = vals.iter().map(|&v| C64::new(v, 0.0)).collect();
    cluster_values(&as_complex)
        .into_iter()
        .map(|(z, count)| Eigenvalue {
            value: C64::new(z.re, 0.0),
            multiplicity: count,
        })
        .collect()
}

/// Spectral report of the relation.
///
/// Eigenvalues are the ζ where `ker(T − ζI)` is nontrivial, i.e. where the
/// rectangular pencil `(G, F)` drops column rank after the multivalued block
/// (the infinite-eigenvalue directions) has been deflated away. The full
/// spectrum additionally contains every ζ with `ran(T − ζI) ≠ C^n`, decided
/// by a rank test on the adjoint pencil. Selfadjoint relations take a
/// Hermitian fast path in renormalized domain coordinates.
///
/// `seed` drives the random pencil compressions; the report is
/// deterministic for a fixed input and seed.
pub fn spectrum(t: &LinearRelation, tol: &Tol, seed: u64) -> Result<SpectrumReport> {
    let n = t.space_dim();
    let d = t.dim();
    if is_symmetric(t, tol) && d == n {
        let evs = match reduced_form(t, tol) {
            None => Vec::new(),
            Some(k) => {
                let (vals, _) = mat::herm_eigen(&k);
                cluster_reals(&vals)
            }
        };
        let values = evs.iter().map(|e| e.value).collect();
        return Ok(SpectrumReport {
            point: PointSpectrum::Finite(evs),
            full: FullSpectrum::Finite(values),
        });
    }

    let f = t.first_components();
    let g = t.second_components();
    let mut rng = ChaCha12Rng::seed_from_u64(seed);

    // Deflation: (f, ζf) ∈ T iff ζFc − Gc ∈ mul T for a coefficient vector
    // c orthogonal to null F, and c ↦ Fc is injective there. Compress rows
    // to (mul T)^⊥ and columns to (null F)^⊥.
    let null_f = mat::nullspace_floored(&f, tol.rank, 1.0);
    let mul_basis = &g * &null_f;
    let q = mat::complement_basis(&mul_basis, n);
    let w = mat::complement_basis(&null_f, d);
    let e_mat = q.adjoint() * &g * &w;
    let h_mat = q.adjoint() * &f * &w;
    let point = rectangular_pencil_eigenvalues(&e_mat, &h_mat, &mut rng)?;

    let full = match &point {
        PointSpectrum::AllOfC => FullSpectrum::AllOfC,
        PointSpectrum::Finite(evs) => {
            // ran(T − ζI) = C^n fails exactly when the adjoint pencil
            // (G*, F*) drops column rank at ζ̄.
            match rectangular_pencil_eigenvalues(&g.adjoint(), &f.adjoint(), &mut rng)? {
                PointSpectrum::AllOfC => FullSpectrum::AllOfC,
                PointSpectrum::Finite(range_evs) => {
                    let mut all: Vec<C64> = evs.iter().map(|e| e.value).collect();
                    all.extend(range_evs.iter().map(|e| e.value.conj()));
                    let merged = cluster_values(&all).into_iter().map(|(z, _)| z).collect();
                    FullSpectrum::Finite(merged)
                }
            }
        }
    };

    Ok(SpectrumReport { point, full })
}

/// See [`spectrum`]; returns the complete report.
pub fn point_spectrum(t: &LinearRelation, tol: &Tol, seed: u64) -> Result<SpectrumReport> {
    spectrum(t, tol, seed)
}

/// See [`spectrum`]; returns the complete report.
pub fn full_spectrum(t: &LinearRelation, tol: &Tol, seed: u64) -> Result<SpectrumReport> {
    spectrum(t, tol, seed)
}

/// Named predicates plus numeric bounds for one relation.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub symmetric: bool,
    pub selfadjoint: bool,
    pub positive: bool,
    pub quasi_null: bool,
    pub contraction: bool,
    pub isometry: bool,
    /// Greatest lower bound when symmetric with nontrivial domain.
    pub lower_bound: Option<f64>,
    /// Smallest upper bound when symmetric with nontrivial domain.
    pub upper_bound: Option<f64>,
    /// `+∞` when the multivalued part is nontrivial.
    pub relation_norm: f64,
}

pub fn classification_report(t: &LinearRelation, tol: &Tol) -> Result<ClassificationReport> {
    let symmetric = is_symmetric(t, tol);
    let selfadjoint = is_selfadjoint(t, tol)?;
    let (lower_bound, upper_bound) = if symmetric {
        let b = bounds(t, tol)?;
        (
            b.lower.is_finite().then_some(b.lower),
            b.upper.is_finite().then_some(b.upper),
        )
    } else {
        (None, None)
    };
    Ok(ClassificationReport {
        symmetric,
        selfadjoint,
        positive: is_positive(t, tol),
        quasi_null: is_quasi_null(t, tol),
        contraction: is_contraction(t, tol),
        isometry: is_isometry(t, tol),
        lower_bound,
        upper_bound,
        relation_norm: relation_norm(t, tol),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::Subspace;
    use crate::CVector;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn e(i: usize, m: usize) -> CVector {
        let mut out = CVector::zeros(m);
        out[i] = c(1.0, 0.0);
        out
    }

    fn zero(m: usize) -> CVector {
        CVector::zeros(m)
    }

    fn diag(entries: &[f64]) -> CMatrix {
        CMatrix::from_diagonal(&CVector::from_iterator(
            entries.len(),
            entries.iter().map(|&x| c(x, 0.0)),
        ))
    }

    fn graph(entries: &[f64]) -> LinearRelation {
        LinearRelation::graph_of(&diag(entries), &Tol::default()).unwrap()
    }

    #[test]
    fn symmetric_examples() {
        let tol = Tol::default();
        let herm =
            CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)]);
        assert!(is_symmetric(
            &LinearRelation::graph_of(&herm, &tol).unwrap(),
            &tol
        ));

        let skew = LinearRelation::from_pairs(&[(e(0, 2), e(1, 2))], 2, &tol).unwrap();
        assert!(is_symmetric(&skew, &tol));

        let nonsym =
            CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert!(!is_symmetric(
            &LinearRelation::graph_of(&nonsym, &tol).unwrap(),
            &tol
        ));
    }

    #[test]
    fn selfadjoint_examples() {
        let tol = Tol::default();
        let herm = CMatrix::from_row_slice(
            2,
            2,
            &[c(1.0, 0.0), c(0.5, 0.5), c(0.5, -0.5), c(-1.0, 0.0)],
        );
        assert!(is_selfadjoint(&LinearRelation::graph_of(&herm, &tol).unwrap(), &tol).unwrap());

        let proper = LinearRelation::from_pairs(&[(e(0, 2), zero(2))], 2, &tol).unwrap();
        assert!(is_symmetric(&proper, &tol));
        assert!(!is_selfadjoint(&proper, &tol).unwrap());
    }

    #[test]
    fn positive_and_quasi_null_examples() {
        let tol = Tol::default();
        assert!(is_positive(&graph(&[1.0, 2.0]), &tol));
        assert!(!is_quasi_null(&graph(&[1.0, 2.0]), &tol));

        let qn = LinearRelation::from_pairs(&[(e(0, 2), e(1, 2))], 2, &tol).unwrap();
        assert!(is_quasi_null(&qn, &tol));
        assert!(is_positive(&qn, &tol));

        assert!(!is_positive(&graph(&[1.0, -1.0]), &tol));
    }

    #[test]
    fn contraction_and_isometry_examples() {
        let tol = Tol::default();
        assert!(is_contraction(&graph(&[0.5, 0.5]), &tol));
        assert!(!is_isometry(&graph(&[0.5, 0.5]), &tol));

        let unitary =
            CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let u = LinearRelation::graph_of(&unitary, &tol).unwrap();
        assert!(is_isometry(&u, &tol));
        assert!(is_contraction(&u, &tol));

        let vertical = LinearRelation::from_pairs(&[(zero(2), e(0, 2))], 2, &tol).unwrap();
        assert!(!is_contraction(&vertical, &tol));
    }

    #[test]
    fn bounds_examples() {
        let tol = Tol::default();
        let b = bounds(&graph(&[1.0, 2.0]), &tol).unwrap();
        assert!((b.lower - 1.0).abs() < 1e-12 && (b.upper - 2.0).abs() < 1e-12);

        let qn = LinearRelation::from_pairs(&[(e(0, 2), e(1, 2))], 2, &tol).unwrap();
        let b = bounds(&qn, &tol).unwrap();
        assert!(b.lower.abs() < 1e-12 && b.upper.abs() < 1e-12);

        let b = bounds(&graph(&[-3.0, 5.0]), &tol).unwrap();
        assert!((b.lower + 3.0).abs() < 1e-12 && (b.upper - 5.0).abs() < 1e-12);
    }

    #[test]
    fn bounds_reject_non_symmetric() {
        let tol = Tol::default();
        let nonsym =
            CMatrix::from_row_slice(2, 2, &[c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        let t = LinearRelation::graph_of(&nonsym, &tol).unwrap();
        assert!(matches!(bounds(&t, &tol), Err(Error::NotSymmetric)));
    }

    #[test]
    fn bounds_of_purely_multivalued_relation_follow_empty_convention() {
        let tol = Tol::default();
        let t = LinearRelation::from_pairs(&[(zero(2), e(0, 2))], 2, &tol).unwrap();
        let b = bounds(&t, &tol).unwrap();
        assert_eq!(b.lower, f64::INFINITY);
        assert_eq!(b.upper, f64::NEG_INFINITY);
        assert!(!b.exist());
    }

    #[test]
    fn relation_norm_examples() {
        let tol = Tol::default();
        assert!((relation_norm(&graph(&[1.0, -2.0]), &tol) - 2.0).abs() < 1e-12);

        let vertical = LinearRelation::from_pairs(&[(zero(1), e(0, 1))], 1, &tol).unwrap();
        assert_eq!(relation_norm(&vertical, &tol), f64::INFINITY);

        assert!(relation_norm(&graph(&[0.0, 0.0]), &tol) < 1e-14);
    }

    #[test]
    fn resolvent_norm_examples() {
        let tol = Tol::default();
        let t = graph(&[1.0, 2.0]);
        assert!((resolvent_norm(&t, c(0.0, 0.0), &tol) - 1.0).abs() < 1e-10);
        assert_eq!(resolvent_norm(&t, c(1.0, 0.0), &tol), f64::INFINITY);

        // symmetric relation at ζ = i: bounded by 1/|Im ζ| = 1
        let dom = Subspace::span(&[e(0, 2)], 2, &tol).unwrap();
        let s = LinearRelation::from_operator(&diag(&[3.0, 0.0]), &dom, &tol).unwrap();
        assert!(resolvent_norm(&s, c(0.0, 1.0), &tol) <= 1.0 + 1e-10);
    }

    #[test]
    fn spectrum_of_diagonal_graph() {
        let tol = Tol::default();
        let report = spectrum(&graph(&[1.0, 2.0]), &tol, 7).unwrap();
        let evs = report.eigenvalues();
        assert_eq!(evs.len(), 2);
        assert!((evs[0].value - c(1.0, 0.0)).norm() < 1e-10 && evs[0].multiplicity == 1);
        assert!((evs[1].value - c(2.0, 0.0)).norm() < 1e-10 && evs[1].multiplicity == 1);
        match &report.full {
            FullSpectrum::Finite(vals) => assert_eq!(vals.len(), 2),
            FullSpectrum::AllOfC => panic!("expected finite spectrum"),
        }
    }

    #[test]
    fn spectrum_of_purely_multivalued_relation_on_line_is_empty() {
        // T = {(0, g)} on C^1: the resolvent is the everywhere-defined zero
        // operator for every ζ, so the spectrum is empty.
        let tol = Tol::default();
        let t = LinearRelation::from_pairs(&[(zero(1), e(0, 1))], 1, &tol).unwrap();
        let report = spectrum(&t, &tol, 7).unwrap();
        assert_eq!(report.point, PointSpectrum::Finite(vec![]));
        assert_eq!(report.full, FullSpectrum::Finite(vec![]));
    }

    #[test]
    fn spectrum_of_horizontal_line_in_plane() {
        // T = span{(e1, 0)} on C^2: eigenvalue 0, but ran(T − ζI) is a line
        // for every ζ, so the full spectrum is all of C.
        let tol = Tol::default();
        let t = LinearRelation::from_pairs(&[(e(0, 2), zero(2))], 2, &tol).unwrap();
        let report = spectrum(&t, &tol, 7).unwrap();
        match &report.point {
            PointSpectrum::Finite(evs) => {
                assert_eq!(evs.len(), 1);
                assert!(evs[0].value.norm() < 1e-10);
                assert_eq!(evs[0].multiplicity, 1);
            }
            PointSpectrum::AllOfC => panic!("point spectrum should be finite"),
        }
        assert_eq!(report.full, FullSpectrum::AllOfC);
    }

    #[test]
    fn spectrum_of_full_plane_relation_is_all_of_c() {
        let tol = Tol::default();
        let t = LinearRelation::from_carrier(1, Subspace::full(2)).unwrap();
        let report = spectrum(&t, &tol, 7).unwrap();
        assert_eq!(report.point, PointSpectrum::AllOfC);
        assert_eq!(report.full, FullSpectrum::AllOfC);
    }

    #[test]
    fn spectrum_of_zero_relation_is_all_of_c_with_no_eigenvalues() {
        let tol = Tol::default();
        let t = LinearRelation::zero_relation(2);
        let report = spectrum(&t, &tol, 7).unwrap();
        assert_eq!(report.point, PointSpectrum::Finite(vec![]));
        assert_eq!(report.full, FullSpectrum::AllOfC);
    }

    #[test]
    fn classification_report_round_up() {
        let tol = Tol::default();
        let r = classification_report(&graph(&[1.0, 2.0]), &tol).unwrap();
        assert!(r.symmetric && r.selfadjoint && r.positive && !r.quasi_null);
        assert_eq!(r.lower_bound, Some(1.0));
        assert!((r.upper_bound.unwrap() - 2.0).abs() < 1e-12);
        assert!((r.relation_norm - 2.0).abs() < 1e-12);
    }
}
