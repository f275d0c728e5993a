//! Finite truncations of the directed weighted star graph.
//!
//! The graph has a hub vertex `δ₀` (coordinate 0) and `N` leaves `δ₁..δ_N`
//! with nonzero real edge weights `w₁..w_N`; its adjacency relation maps
//! `f ⊥ δ₀` to `⟨w, f⟩ δ₀`. The family is a worked catalogue of quasi-null
//! relations: the adjoint, deficiency spaces, the circle of selfadjoint
//! extensions and the semi-bounded extension spectra all have closed forms,
//! each of which is cross-checked here against the generic machinery.
//!
//! At infinite dimension the unweighted adjacency operator is neither
//! bounded nor closable (the functional `f ↦ ⟨1, f⟩` is discontinuous on
//! its domain); the truncation never sees this, so the closure-style
//! relation below is simply a particular selfadjoint extension. Statements
//! about infinite multiplicity become statements about multiplicities that
//! grow with the truncation size: the zero eigenvalue has multiplicity
//! `N − 1` for the α-extensions and `N` for the positive one.

use crate::classify::{self, SpectrumReport};
use crate::error::{Error, Result};
use crate::relation::LinearRelation;
use crate::subspace::Subspace;
use crate::{C64, CVector, Tol};

/// Star-graph data: `N ≥ 2` leaves with nonzero real weights. The space
/// dimension is `N + 1` with coordinate 0 holding the hub.
#[derive(Clone, Debug, PartialEq)]
pub struct StarConfig {
    leaves: usize,
    weights: Vec<f64>,
}

impl StarConfig {
    pub fn new(leaves: usize, weights: Vec<f64>) -> Result<Self> {
        if leaves < 2 {
            return Err(Error::InvalidParameter("a star needs at least two leaves"));
        }
        if weights.len() != leaves {
            return Err(Error::DimensionMismatch {
                expected: leaves,
                got: weights.len(),
            });
        }
        if weights.iter().any(|w| *w == 0.0 || !w.is_finite()) {
            return Err(Error::InvalidParameter("star weights must be nonzero reals"));
        }
        Ok(StarConfig { leaves, weights })
    }

    /// All-ones weights.
    pub fn unweighted(leaves: usize) -> Result<Self> {
        Self::new(leaves, vec![1.0; leaves])
    }

    pub fn leaves(&self) -> usize {
        self.leaves
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn space_dim(&self) -> usize {
        self.leaves + 1
    }

    pub fn weight_norm_sq(&self) -> f64 {
        self.weights.iter().map(|w| w * w).sum()
    }

    /// The weight vector embedded in `C^{N+1}` (zero hub coordinate).
    pub fn weight_vector(&self) -> CVector {
        let n = self.space_dim();
        CVector::from_fn(n, |i, _| {
            if i == 0 {
                C64::new(0.0, 0.0)
            } else {
                C64::new(self.weights[i - 1], 0.0)
            }
        })
    }

    fn hub(&self) -> CVector {
        let mut v = CVector::zeros(self.space_dim());
        v[0] = C64::new(1.0, 0.0);
        v
    }

    fn leaf(&self, j: usize) -> CVector {
        let mut v = CVector::zeros(self.space_dim());
        v[j] = C64::new(1.0, 0.0);
        v
    }
}

/// Adjacency relation `{(f, ⟨w, f⟩ δ₀) : f ⊥ δ₀}` on `C^{N+1}`. Closed,
/// bounded and quasi-null, with `dom = span{δ₁..δ_N}` and `ran = span{δ₀}`.
pub fn build_star(cfg: &StarConfig, tol: &Tol) -> LinearRelation {
    let n = cfg.space_dim();
    let pairs: Vec<(CVector, CVector)> = (1..n)
        .map(|j| {
            let mut image = CVector::zeros(n);
            image[0] = C64::new(cfg.weights()[j - 1], 0.0);
            (cfg.leaf(j), image)
        })
        .collect();
    LinearRelation::from_pairs(&pairs, n, tol).expect("star pairs have consistent dimensions")
}

/// The quasi-null selfadjoint relation `0 on span{δ₁..δ_N} ⊕ span{(0, δ₀)}`,
/// the truncated analogue of the closure of the unweighted star relation;
/// its spectrum is `{0}` with point multiplicity `N`.
pub fn star_closure_relation(cfg: &StarConfig, tol: &Tol) -> LinearRelation {
    let n = cfg.space_dim();
    let mut pairs: Vec<(CVector, CVector)> = (1..n)
        .map(|j| (cfg.leaf(j), CVector::zeros(n)))
        .collect();
    pairs.push((CVector::zeros(n), cfg.hub()));
    LinearRelation::from_pairs(&pairs, n, tol).expect("closure pairs have consistent dimensions")
}

/// Closed-form adjoint `{(h, ⟨δ₀, h⟩ w) : h ∈ C^{N+1}} ⊕ span{(0, δ₀)}`,
/// of dimension `N + 2`; validated against the generic adjoint and rejected
/// as an internal inconsistency if the two disagree.
pub fn star_adjoint(cfg: &StarConfig, tol: &Tol) -> Result<LinearRelation> {
    let n = cfg.space_dim();
    let mut pairs: Vec<(CVector, CVector)> = vec![(cfg.hub(), cfg.weight_vector())];
    pairs.extend((1..n).map(|j| (cfg.leaf(j), CVector::zeros(n))));
    pairs.push((CVector::zeros(n), cfg.hub()));
    let closed_form = LinearRelation::from_pairs(&pairs, n, tol)?;
    let generic = build_star(cfg, tol).adjoint();
    let defect = closed_form.projector_distance(&generic);
    if defect > tol.eq {
        return Err(Error::InternalInconsistency {
            context: "closed-form star adjoint disagrees with the generic adjoint",
            defect,
        });
    }
    Ok(closed_form)
}

/// Closed-form deficiency space
/// `N_ζ(A*) = span{(δ₀ + w/ζ, ζδ₀ + w)}` for ζ ≠ 0; the index is 1.
pub fn star_deficiency(cfg: &StarConfig, zeta: C64, tol: &Tol) -> Result<Subspace> {
    if zeta.norm() == 0.0 {
        return Err(Error::InvalidParameter(
            "the star deficiency space needs a nonzero point",
        ));
    }
    let n = cfg.space_dim();
    let w = cfg.weight_vector();
    let u = cfg.hub() + w.map(|z| z / zeta);
    let mut pair = CVector::zeros(2 * n);
    pair.rows_mut(0, n).copy_from(&u);
    pair.rows_mut(n, n).copy_from(&u.map(|z| zeta * z));
    Subspace::span(&[pair], 2 * n, tol)
}

/// The circle of selfadjoint extensions
/// `S_β = A ⊕ span{(i(β+1)w + (β−1)δ₀, (β−1)w − i(β+1)δ₀)}`, `|β| = 1`.
/// Exactly one member is positive (β = 1), and it equals the relation of
/// [`star_closure_relation`].
pub fn star_sa_family(cfg: &StarConfig, beta: C64, tol: &Tol) -> Result<LinearRelation> {
    if (beta.norm() - 1.0).abs() > tol.eq {
        return Err(Error::InvalidParameter(
            "the extension family is parametrized by unimodular beta",
        ));
    }
    let n = cfg.space_dim();
    let w = cfg.weight_vector();
    let hub = cfg.hub();
    let i = C64::new(0.0, 1.0);
    let first = w.map(|z| i * (beta + 1.0) * z) + hub.map(|z| (beta - 1.0) * z);
    let second = w.map(|z| (beta - 1.0) * z) - hub.map(|z| i * (beta + 1.0) * z);
    let a = build_star(cfg, tol);
    let summand = LinearRelation::from_pairs(&[(first, second)], n, tol)?;
    let sum = a.carrier().sum(summand.carrier(), tol)?;
    if !sum.direct {
        return Err(Error::NonDirectSum);
    }
    LinearRelation::from_carrier(n, sum.space)
}

/// The unique selfadjoint extension with eigenvalue α ≠ 0:
/// `A_α = A ∔ span{(δ₀ + w/α, αδ₀ + w)}`, returned with its spectrum.
/// The nonzero eigenvalues are `α` and `−‖w‖²/α`, each simple, and 0 has
/// multiplicity `N − 1`; the eigenvector of `−‖w‖²/α` is proportional to
/// `δ₀ − αw/‖w‖²`.
pub fn star_extension_alpha(
    cfg: &StarConfig,
    alpha: f64,
    tol: &Tol,
) -> Result<(LinearRelation, SpectrumReport)> {
    if alpha == 0.0 || !alpha.is_finite() {
        return Err(Error::InvalidParameter(
            "the alpha extension needs a nonzero real alpha",
        ));
    }
    let a = build_star(cfg, tol);
    let deficiency = star_deficiency(cfg, C64::new(alpha, 0.0), tol)?;
    let sum = a.carrier().sum(&deficiency, tol)?;
    if !sum.direct {
        return Err(Error::NonDirectSum);
    }
    let extension = LinearRelation::from_carrier(cfg.space_dim(), sum.space)?;
    let report = classify::spectrum(&extension, tol, 0)?;
    Ok((extension, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{classify::PointSpectrum, extend};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn config_validation() {
        assert!(StarConfig::new(1, vec![1.0]).is_err());
        assert!(StarConfig::new(2, vec![1.0]).is_err());
        assert!(StarConfig::new(2, vec![1.0, 0.0]).is_err());
        assert!(StarConfig::new(2, vec![1.0, -2.0]).is_ok());
    }

    #[test]
    fn build_star_shape_and_classification() {
        let tol = Tol::default();
        let cfg = StarConfig::new(2, vec![1.0, 1.0]).unwrap();
        let a = build_star(&cfg, &tol);
        assert_eq!(a.dim(), 2);
        let parts = a.parts(&tol);
        assert_eq!(parts.dom.dim(), 2);
        assert_eq!(parts.ran.dim(), 1);
        assert!(classify::is_quasi_null(&a, &tol));
        assert!(!classify::is_selfadjoint(&a, &tol).unwrap());
    }

    #[test]
    fn kernel_of_weighted_star() {
        let tol = Tol::default();
        let cfg = StarConfig::new(3, vec![1.0, 2.0, 3.0]).unwrap();
        let a = build_star(&cfg, &tol);
        assert_eq!(a.parts(&tol).ker.dim(), 2);
    }

    #[test]
    fn closure_relation_is_quasi_null_selfadjoint_with_zero_spectrum() {
        let tol = Tol::default();
        for n in [2usize, 5] {
            let cfg = StarConfig::unweighted(n).unwrap();
            let s = star_closure_relation(&cfg, &tol);
            assert!(classify::is_selfadjoint(&s, &tol).unwrap());
            assert!(classify::is_quasi_null(&s, &tol));
            assert!(s
                .parts(&tol)
                .mul
                .approx_eq(&Subspace::span(&[cfg.hub()], n + 1, &tol).unwrap(), &tol));
            let report = classify::spectrum(&s, &tol, 0).unwrap();
            match &report.point {
                PointSpectrum::Finite(evs) => {
                    assert_eq!(evs.len(), 1);
                    assert!(evs[0].value.norm() < 1e-10);
                    assert_eq!(evs[0].multiplicity, n);
                }
                PointSpectrum::AllOfC => panic!("spectrum of the closure relation is {{0}}"),
            }
        }
    }

    #[test]
    fn closed_form_adjoint_matches_generic() {
        let tol = Tol::default();
        let cfg = StarConfig::new(4, vec![0.5, -1.0, 2.0, 3.5]).unwrap();
        let adj = star_adjoint(&cfg, &tol).unwrap();
        assert_eq!(adj.dim(), cfg.leaves() + 2);
        // multivalued part of the adjoint is the hub line
        let mul = adj.parts(&tol).mul;
        assert!(mul.approx_eq(
            &Subspace::span(&[cfg.hub()], cfg.space_dim(), &tol).unwrap(),
            &tol
        ));
    }

    #[test]
    fn deficiency_matches_generic_and_has_index_one() {
        let tol = Tol::default();
        let cfg = StarConfig::new(3, vec![1.0, -0.5, 2.0]).unwrap();
        let a = build_star(&cfg, &tol);
        for zeta in [c(1.0, 0.0), c(0.3, 0.7), c(-2.0, 0.1)] {
            let closed = star_deficiency(&cfg, zeta, &tol).unwrap();
            let generic = extend::deficiency_space(&a, zeta, &tol);
            assert!(closed.approx_eq(&generic, &tol));
            assert_eq!(closed.dim(), 1);
        }
        assert!(star_deficiency(&cfg, c(0.0, 0.0), &tol).is_err());
    }

    #[test]
    fn sa_family_is_selfadjoint_and_positive_only_at_one() {
        let tol = Tol::default();
        let cfg = StarConfig::new(3, vec![1.0, 2.0, -1.0]).unwrap();
        for k in 0..8 {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / 8.0;
            let beta = c(theta.cos(), theta.sin());
            let s = star_sa_family(&cfg, beta, &tol).unwrap();
            assert!(classify::is_selfadjoint(&s, &tol).unwrap());
            let positive = classify::is_positive(&s, &tol);
            assert_eq!(positive, k == 0, "positivity only at beta = 1");
        }
        assert!(star_sa_family(&cfg, c(0.5, 0.0), &tol).is_err());
    }

    #[test]
    fn beta_one_recovers_the_closure_relation() {
        let tol = Tol::default();
        let cfg = StarConfig::new(4, vec![2.0, 1.0, 0.5, -1.5]).unwrap();
        let s1 = star_sa_family(&cfg, c(1.0, 0.0), &tol).unwrap();
        let closure = star_closure_relation(&cfg, &tol);
        assert!(s1.approx_eq(&closure, &tol));
        assert!(classify::is_quasi_null(&s1, &tol));
    }

    #[test]
    fn alpha_extension_spectrum_examples() {
        let tol = Tol::default();

        // N = 3, unit weights, α = −1: nonzero eigenvalues {−1, 3}
        let cfg = StarConfig::unweighted(3).unwrap();
        let (ext, report) = star_extension_alpha(&cfg, -1.0, &tol).unwrap();
        assert!(classify::is_selfadjoint(&ext, &tol).unwrap());
        assert_eq!(report.multiplicity_near(c(-1.0, 0.0), 1e-8), 1);
        assert_eq!(report.multiplicity_near(c(3.0, 0.0), 1e-8), 1);
        assert_eq!(report.multiplicity_near(c(0.0, 0.0), 1e-8), 2);

        // N = 2, w = (3, 4), α = 5: nonzero eigenvalues {5, −5}
        let cfg = StarConfig::new(2, vec![3.0, 4.0]).unwrap();
        let (_, report) = star_extension_alpha(&cfg, 5.0, &tol).unwrap();
        assert_eq!(report.multiplicity_near(c(5.0, 0.0), 1e-8), 1);
        assert_eq!(report.multiplicity_near(c(-5.0, 0.0), 1e-8), 1);
        assert_eq!(report.multiplicity_near(c(0.0, 0.0), 1e-8), 1);
    }

    #[test]
    fn alpha_extension_eigenvector_residual() {
        let tol = Tol::default();
        let cfg = StarConfig::new(3, vec![1.0, -2.0, 0.5]).unwrap();
        let alpha = -0.75;
        let (ext, _) = star_extension_alpha(&cfg, alpha, &tol).unwrap();
        let wns = cfg.weight_norm_sq();
        let u = cfg.hub() - cfg.weight_vector().map(|z| z * (alpha / wns));
        let image = ext.image_of(&u, &tol).expect("extension is an operator");
        let lambda = c(-wns / alpha, 0.0);
        let residual = (&image - u.map(|z| lambda * z)).norm();
        assert!(residual < 1e-8 * u.norm());
    }

    #[test]
    fn alpha_zero_is_rejected() {
        let tol = Tol::default();
        let cfg = StarConfig::unweighted(2).unwrap();
        assert!(star_extension_alpha(&cfg, 0.0, &tol).is_err());
    }
}
