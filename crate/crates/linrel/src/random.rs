//! Seeded random construction of subspaces and relations.
//!
//! These builders back the stress and acceptance tests: every constructor
//! takes an explicit RNG so runs are reproducible, and each family comes
//! with a structural guarantee (symmetric, selfadjoint, positive,
//! quasi-null, contractive) that holds by construction rather than by
//! filtering.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::relation::LinearRelation;
use crate::subspace::Subspace;
use crate::{mat, C64, CMatrix, CVector, Tol};

/// Deterministic RNG for a seed.
pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

pub fn complex_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| {
        C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

pub fn complex_vector<R: Rng>(rng: &mut R, len: usize) -> CVector {
    CVector::from_fn(len, |_, _| {
        C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

/// Random unitary matrix (orthonormalized dense random matrix).
pub fn unitary<R: Rng>(rng: &mut R, n: usize) -> CMatrix {
    mat::orthonormal_span_exact_rank(&complex_matrix(rng, n, n), n)
}

/// Random isometric matrix with orthonormal columns (`cols ≤ rows`).
pub fn isometry_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    assert!(cols <= rows, "an isometry needs at least as many rows as columns");
    mat::orthonormal_span_exact_rank(&complex_matrix(rng, rows, cols), cols)
}

pub fn hermitian<R: Rng>(rng: &mut R, n: usize) -> CMatrix {
    let a = complex_matrix(rng, n, n);
    (&a + a.adjoint()).map(|z| z * 0.5)
}

/// Random Hermitian positive semidefinite matrix of the given rank.
pub fn psd<R: Rng>(rng: &mut R, n: usize, rank: usize) -> CMatrix {
    let c = complex_matrix(rng, rank.min(n), n);
    c.adjoint() * c
}

/// Hermitian matrix with at least one clearly negative and one clearly
/// positive eigenvalue; used for indefinite counterexamples.
pub fn indefinite_hermitian<R: Rng>(rng: &mut R, n: usize) -> CMatrix {
    assert!(n >= 2);
    let q = unitary(rng, n);
    let diag = CMatrix::from_fn(n, n, |i, j| {
        if i != j {
            C64::new(0.0, 0.0)
        } else if i == 0 {
            C64::new(rng.random_range(0.5..2.0), 0.0)
        } else if i == 1 {
            C64::new(-rng.random_range(0.5..2.0), 0.0)
        } else {
            C64::new(rng.random_range(-1.0..1.0), 0.0)
        }
    });
    &q * diag * q.adjoint()
}

pub fn subspace<R: Rng>(rng: &mut R, ambient: usize, dim: usize, tol: &Tol) -> Subspace {
    assert!(dim <= ambient);
    let cols = complex_matrix(rng, ambient, dim);
    Subspace::from_columns(&mat::orthonormal_span_exact_rank(&cols, dim), tol)
}

/// Random relation on `C^n` with the given carrier dimension.
pub fn relation<R: Rng>(rng: &mut R, n: usize, dim: usize, tol: &Tol) -> LinearRelation {
    let carrier = subspace(rng, 2 * n, dim, tol);
    LinearRelation::from_carrier(n, carrier).expect("ambient dimension is 2n")
}

/// Core builder for structured relations. The domain sits on `p` random
/// orthonormal directions, the multivalued part on `m` further ones, and
/// the graph images are `Q_D H + Q_⊥ B` for the supplied coefficient
/// blocks, so the coordinate form of the result is exactly `H`.
fn structured<R: Rng>(
    rng: &mut R,
    n: usize,
    h: &CMatrix,
    mul_dim: usize,
    coupling: Option<&CMatrix>,
    tol: &Tol,
) -> LinearRelation {
    let p = h.nrows();
    assert!(p + mul_dim <= n, "domain and multivalued part must fit in C^n");
    let q = unitary(rng, n);
    let q_dom = q.columns(0, p).into_owned();
    let q_rest = q.columns(p, n - p).into_owned();
    let images = match coupling {
        Some(b) => {
            assert_eq!(b.nrows(), n - p);
            assert_eq!(b.ncols(), p);
            &q_dom * h + &q_rest * b
        }
        None => &q_dom * h,
    };
    let mut pairs: Vec<(CVector, CVector)> = (0..p)
        .map(|k| (q_dom.column(k).into_owned(), images.column(k).into_owned()))
        .collect();
    for j in 0..mul_dim {
        pairs.push((CVector::zeros(n), q_rest.column(j).into_owned()));
    }
    LinearRelation::from_pairs(&pairs, n, tol).expect("structured pairs are consistent")
}

/// Random symmetric relation with domain dimension `dom_dim` and
/// multivalued dimension `mul_dim`; the deficiency index is
/// `n − dom_dim − mul_dim`.
pub fn symmetric_relation<R: Rng>(
    rng: &mut R,
    n: usize,
    dom_dim: usize,
    mul_dim: usize,
    tol: &Tol,
) -> LinearRelation {
    let h = hermitian(rng, dom_dim);
    let b = complex_matrix(rng, n - dom_dim, dom_dim);
    structured(rng, n, &h, mul_dim, Some(&b), tol)
}

/// Random selfadjoint relation with the given multivalued dimension.
pub fn selfadjoint_relation<R: Rng>(
    rng: &mut R,
    n: usize,
    mul_dim: usize,
    tol: &Tol,
) -> LinearRelation {
    let p = n - mul_dim;
    let h = hermitian(rng, p);
    structured(rng, n, &h, mul_dim, None, tol)
}

/// Random positive relation (positive semidefinite coordinate form).
pub fn positive_relation<R: Rng>(
    rng: &mut R,
    n: usize,
    dom_dim: usize,
    mul_dim: usize,
    form_rank: usize,
    tol: &Tol,
) -> LinearRelation {
    let h = psd(rng, dom_dim, form_rank);
    let b = complex_matrix(rng, n - dom_dim, dom_dim);
    structured(rng, n, &h, mul_dim, Some(&b), tol)
}

/// Random positive selfadjoint relation.
pub fn positive_selfadjoint_relation<R: Rng>(
    rng: &mut R,
    n: usize,
    mul_dim: usize,
    tol: &Tol,
) -> LinearRelation {
    let p = n - mul_dim;
    let h = psd(rng, p, p);
    structured(rng, n, &h, mul_dim, None, tol)
}

/// Random quasi-null relation: the coordinate form vanishes, so the range
/// lies orthogonal to the domain.
pub fn quasi_null_relation<R: Rng>(
    rng: &mut R,
    n: usize,
    dom_dim: usize,
    mul_dim: usize,
    tol: &Tol,
) -> LinearRelation {
    let h = CMatrix::zeros(dom_dim, dom_dim);
    let b = complex_matrix(rng, n - dom_dim, dom_dim);
    structured(rng, n, &h, mul_dim, Some(&b), tol)
}

/// Random symmetric relation that is not positive: the coordinate form has
/// eigenvalues of both signs, well separated from zero.
pub fn indefinite_symmetric_relation<R: Rng>(
    rng: &mut R,
    n: usize,
    dom_dim: usize,
    tol: &Tol,
) -> LinearRelation {
    assert!(dom_dim >= 2);
    let h = indefinite_hermitian(rng, dom_dim);
    let b = complex_matrix(rng, n - dom_dim, dom_dim);
    structured(rng, n, &h, 0, Some(&b), tol)
}

/// Random symmetric contraction: a Hermitian coordinate form `H` and a
/// coupling `B` scaled together so that `H² + B*B ≼ I`.
pub fn symmetric_contraction<R: Rng>(
    rng: &mut R,
    n: usize,
    dom_dim: usize,
    tol: &Tol,
) -> LinearRelation {
    let h0 = hermitian(rng, dom_dim);
    let b0 = complex_matrix(rng, n - dom_dim, dom_dim);
    let stacked = mat::vcat(&h0, &b0);
    let norm = mat::spectral_norm(&stacked).max(f64::MIN_POSITIVE);
    let scale = rng.random_range(0.2..1.0) / norm;
    let h = h0.map(|z| z * scale);
    let b = b0.map(|z| z * scale);
    structured(rng, n, &h, 0, Some(&b), tol)
}

/// Random symmetric isometry: the graph of a random reflection
/// (`I − 2P` for a random projector `P`) restricted to a random domain.
pub fn symmetric_isometry<R: Rng>(
    rng: &mut R,
    n: usize,
    dom_dim: usize,
    rank_p: usize,
    tol: &Tol,
) -> LinearRelation {
    let p_basis = isometry_matrix(rng, n, rank_p);
    let reflection =
        CMatrix::identity(n, n) - (&p_basis * p_basis.adjoint()).map(|z| z * 2.0);
    let dom = subspace(rng, n, dom_dim, tol);
    LinearRelation::from_operator(&reflection, &dom, tol).expect("square matrix")
}

/// A random relation together with a random sub-relation of it (a sub-span
/// of the carrier basis).
pub fn nested_pair<R: Rng>(
    rng: &mut R,
    n: usize,
    dim: usize,
    sub_dim: usize,
    tol: &Tol,
) -> (LinearRelation, LinearRelation) {
    assert!(sub_dim <= dim);
    let big = relation(rng, n, dim, tol);
    let mixer = unitary(rng, dim);
    let rotated = big.carrier().basis() * mixer;
    let sub_cols = rotated.columns(0, sub_dim).into_owned();
    let sub = LinearRelation::from_carrier(n, Subspace::from_columns(&sub_cols, tol))
        .expect("sub-carrier lives in the same ambient space");
    (big, sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify;

    #[test]
    fn structured_families_have_their_advertised_properties() {
        let tol = Tol::default();
        let mut r = rng(17);
        for n in 2..6usize {
            for _ in 0..5 {
                let p = r.random_range(1..n);
                let m = r.random_range(0..=(n - p));
                let s = symmetric_relation(&mut r, n, p, m, &tol);
                assert!(classify::is_symmetric(&s, &tol));
                assert_eq!(s.dim(), p + m);

                let sa = selfadjoint_relation(&mut r, n, m.min(n - 1), &tol);
                assert!(classify::is_selfadjoint(&sa, &tol).unwrap());

                let pos = positive_relation(&mut r, n, p, m, p, &tol);
                assert!(classify::is_positive(&pos, &tol));

                let qn = quasi_null_relation(&mut r, n, p, m, &tol);
                assert!(classify::is_quasi_null(&qn, &tol));

                let con = symmetric_contraction(&mut r, n, p, &tol);
                assert!(classify::is_symmetric(&con, &tol));
                assert!(classify::is_contraction(&con, &tol));

                let iso = symmetric_isometry(&mut r, n, p, 1.max(n / 2), &tol);
                assert!(classify::is_symmetric(&iso, &tol));
                assert!(classify::is_isometry(&iso, &tol));

                if p >= 2 {
                    let ind = indefinite_symmetric_relation(&mut r, n, p, &tol);
                    assert!(classify::is_symmetric(&ind, &tol));
                    assert!(!classify::is_positive(&ind, &tol));
                }
            }
        }
    }

    #[test]
    fn nested_pair_is_nested() {
        let tol = Tol::default();
        let mut r = rng(5);
        let (big, sub) = nested_pair(&mut r, 3, 4, 2, &tol);
        assert!(big.contains(&sub, &tol));
        assert_eq!(sub.dim(), 2);
    }
}
