//! Shared helpers for the integration tests.

#![allow(dead_code)]

use linrel::extend::{self, ExtensionParams, VMode};
use linrel::random;
use linrel::{C64, CMatrix, CVector, LinearRelation, Subspace, Tol};
use rand::Rng;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Embed a relation on `C^k` into `C^n` on the coordinate block starting at
/// `offset`; carriers of relations embedded on disjoint blocks are
/// orthogonal.
pub fn embed_block(t: &LinearRelation, n: usize, offset: usize, tol: &Tol) -> LinearRelation {
    let k = t.space_dim();
    assert!(offset + k <= n);
    let basis = t.carrier().basis();
    let pairs: Vec<(CVector, CVector)> = (0..t.dim())
        .map(|j| {
            let mut f = CVector::zeros(n);
            let mut g = CVector::zeros(n);
            for i in 0..k {
                f[offset + i] = basis[(i, j)];
                g[offset + i] = basis[(k + i, j)];
            }
            (f, g)
        })
        .collect();
    LinearRelation::from_pairs(&pairs, n, tol).expect("block embedding is consistent")
}

/// Random von Neumann extension of `a` by a `sub_dim`-dimensional selection
/// inside `N_i(A*)` and a random isometry into `N_{−i}(A*)`.
pub fn random_vn_extension<R: Rng>(
    rng: &mut R,
    a: &LinearRelation,
    sub_dim: usize,
    tol: &Tol,
) -> LinearRelation {
    let source = extend::deficiency_space(a, c(0.0, 1.0), tol);
    let target = extend::deficiency_space(a, c(0.0, -1.0), tol);
    assert!(sub_dim <= source.dim());
    let selection = Subspace::from_columns(
        &(source.basis() * random::isometry_matrix(rng, source.dim(), sub_dim)),
        tol,
    );
    let v = random::isometry_matrix(rng, target.dim(), sub_dim);
    let params = ExtensionParams::new(a.clone(), selection, v, VMode::Isometry);
    extend::symmetric_extension_vn(&params, tol).expect("random von Neumann data is admissible")
}

/// A quasi-null relation with deficiency index one, together with admissible
/// extension parameters for the quasi-null extension formula and the
/// expected resulting extension.
///
/// The construction reserves one spare direction `s` orthogonal to both the
/// domain and the range of `A`; then `N_1(−A*) = span{(s, s)}/√2`,
/// `N_{−1}(−A*) = span{(s, −s)}/√2`, and the admissible maps between them
/// are the real multiples `t ∈ [−1, 1]` of the natural identification. The
/// extension adds the line `{((t−1)s, −(t+1)s)}`, which is positive with
/// form value `(1−t²)/ norm²` and quasi-null exactly at `t = ±1`.
pub struct QnFixture {
    pub base: LinearRelation,
    pub params: ExtensionParams,
    pub expected: LinearRelation,
    pub expected_summand: Subspace,
    pub isometric: bool,
}

pub fn qn_extension_fixture<R: Rng>(
    rng: &mut R,
    dom_dim: usize,
    mul_dim: usize,
    t_param: f64,
    tol: &Tol,
) -> QnFixture {
    assert!(t_param.abs() <= 1.0);
    let p = dom_dim;
    let m = mul_dim;
    let n = p + m + 1;
    let q = random::unitary(rng, n);
    let q_dom = q.columns(0, p).into_owned();
    let q_mul = q.columns(p, m).into_owned();
    let spare = q.column(p + m).into_owned();

    // graph images land in the multivalued directions only, so the spare
    // direction stays orthogonal to dom A + ran A
    let coupling = random::complex_matrix(rng, m, p);
    let images = &q_mul * &coupling;
    let mut pairs: Vec<(CVector, CVector)> = (0..p)
        .map(|k| (q_dom.column(k).into_owned(), images.column(k).into_owned()))
        .collect();
    for j in 0..m {
        pairs.push((CVector::zeros(n), q_mul.column(j).into_owned()));
    }
    let base = LinearRelation::from_pairs(&pairs, n, tol).expect("fixture pairs are consistent");

    let neg = base.scale(c(-1.0, 0.0), tol);
    let source = extend::deficiency_space(&neg, c(1.0, 0.0), tol);
    let target = extend::deficiency_space(&neg, c(-1.0, 0.0), tol);
    assert_eq!(source.dim(), 1, "fixture has deficiency index one");
    assert_eq!(target.dim(), 1);

    // phases of the stored generators relative to (s, ±s)/√2
    let s2 = std::f64::consts::FRAC_1_SQRT_2;
    let mut v_src = CVector::zeros(2 * n);
    let mut v_tgt = CVector::zeros(2 * n);
    for i in 0..n {
        v_src[i] = spare[i] * s2;
        v_src[n + i] = spare[i] * s2;
        v_tgt[i] = spare[i] * s2;
        v_tgt[n + i] = -spare[i] * s2;
    }
    let phase_src: C64 = v_src.dotc(&source.basis().column(0).into_owned());
    let phase_tgt: C64 = v_tgt.dotc(&target.basis().column(0).into_owned());
    assert!((phase_src.norm() - 1.0).abs() < 1e-8);
    assert!((phase_tgt.norm() - 1.0).abs() < 1e-8);

    let entry = c(t_param, 0.0) * phase_src * phase_tgt.conj();
    let isometric = (t_param.abs() - 1.0).abs() < 1e-12;
    let params = ExtensionParams::new(
        base.clone(),
        source,
        CMatrix::from_row_slice(1, 1, &[entry]),
        if isometric {
            VMode::Isometry
        } else {
            VMode::Contraction
        },
    );

    let h = spare.map(|z| z * (t_param - 1.0));
    let k = spare.map(|z| z * (-t_param - 1.0));
    let summand = LinearRelation::from_pairs(&[(h, k)], n, tol).unwrap();
    let expected_summand = summand.carrier().clone();
    let expected = LinearRelation::from_carrier(
        n,
        base.carrier().sum(&expected_summand, tol).unwrap().space,
    )
    .unwrap();

    QnFixture {
        base,
        params,
        expected,
        expected_summand,
        isometric,
    }
}
