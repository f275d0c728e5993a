//! JSON documents accepted and emitted by the tool.
//!
//! Complex numbers are always `[re, im]` pairs; bare floats are never used
//! for complex entries, so the format parses identically across languages.
//! A relation document (`schema_version` 1) is one of three kinds:
//!
//! ```json
//! {"schema_version":1,"space_dim":2,"kind":"span",
//!  "generators":[[[1.0,0.0],[0.0,0.0],[0.0,0.0],[1.0,0.0]]]}
//! {"schema_version":1,"space_dim":2,"kind":"operator",
//!  "matrix":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[2.0,0.0]]]}
//! {"schema_version":1,"space_dim":3,"kind":"star",
//!  "star":{"leaves":2,"weights":[1.0,1.0]}}
//! ```
//!
//! Span generators are vectors of length `2n` (first components, then
//! second components); operator documents may restrict the domain with
//! optional generators of length `n`; star documents must have
//! `space_dim = leaves + 1` and nonzero weights.

use anyhow::{bail, Context};
use linrel::extend::{ExtensionParams, VMode};
use linrel::{C64, CMatrix, CVector, LinearRelation, Subspace, Tol};
use serde::{Deserialize, Serialize};

pub type ComplexPair = [f64; 2];

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocKind {
    Span,
    Operator,
    Star,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StarDoc {
    pub leaves: usize,
    pub weights: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RelationDocument {
    pub schema_version: u32,
    pub space_dim: usize,
    pub kind: DocKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<ComplexPair>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<ComplexPair>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<Vec<Vec<ComplexPair>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<StarDoc>,
}

fn parse_vector(entries: &[ComplexPair], expected_len: usize) -> anyhow::Result<CVector> {
    if entries.len() != expected_len {
        bail!(
            "vector has {} entries, expected {}",
            entries.len(),
            expected_len
        );
    }
    Ok(CVector::from_iterator(
        expected_len,
        entries.iter().map(|p| C64::new(p[0], p[1])),
    ))
}

fn parse_matrix(rows: &[Vec<ComplexPair>], n: usize) -> anyhow::Result<CMatrix> {
    if rows.len() != n {
        bail!("matrix has {} rows, expected {}", rows.len(), n);
    }
    let mut out = CMatrix::zeros(n, n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            bail!("matrix row {} has {} entries, expected {}", i, row.len(), n);
        }
        for (j, p) in row.iter().enumerate() {
            out[(i, j)] = C64::new(p[0], p[1]);
        }
    }
    Ok(out)
}

impl RelationDocument {
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            bail!(
                "unsupported schema_version {} (expected {})",
                self.schema_version,
                SCHEMA_VERSION
            );
        }
        if self.space_dim == 0 {
            bail!("space_dim must be positive");
        }
        match self.kind {
            DocKind::Span => {
                if self.generators.is_none() {
                    bail!("span documents need a generators field");
                }
            }
            DocKind::Operator => {
                if self.matrix.is_none() {
                    bail!("operator documents need a matrix field");
                }
            }
            DocKind::Star => {
                let star = self
                    .star
                    .as_ref()
                    .context("star documents need a star field")?;
                if star.weights.len() != star.leaves {
                    bail!(
                        "star has {} weights for {} leaves",
                        star.weights.len(),
                        star.leaves
                    );
                }
                if star.weights.iter().any(|w| *w == 0.0 || !w.is_finite()) {
                    bail!("star weights must be nonzero reals");
                }
                if self.space_dim != star.leaves + 1 {
                    bail!(
                        "star documents need space_dim = leaves + 1 (got {} for {} leaves)",
                        self.space_dim,
                        star.leaves
                    );
                }
            }
        }
        Ok(())
    }

    pub fn to_relation(&self, tol: &Tol) -> anyhow::Result<LinearRelation> {
        self.validate()?;
        let n = self.space_dim;
        match self.kind {
            DocKind::Span => {
                let gens = self.generators.as_ref().unwrap();
                let vectors = gens
                    .iter()
                    .map(|g| parse_vector(g, 2 * n))
                    .collect::<anyhow::Result<Vec<_>>>()?;
                let carrier = Subspace::span(&vectors, 2 * n, tol)?;
                Ok(LinearRelation::from_carrier(n, carrier)?)
            }
            DocKind::Operator => {
                let matrix = parse_matrix(self.matrix.as_ref().unwrap(), n)?;
                let domain = match &self.domain {
                    None => Subspace::full(n),
                    Some(gens) => {
                        let vectors = gens
                            .iter()
                            .map(|g| parse_vector(g, n))
                            .collect::<anyhow::Result<Vec<_>>>()?;
                        Subspace::span(&vectors, n, tol)?
                    }
                };
                Ok(LinearRelation::from_operator(&matrix, &domain, tol)?)
            }
            DocKind::Star => {
                let cfg = self.star_config()?;
                Ok(linrel::stargraph::build_star(&cfg, tol))
            }
        }
    }

    pub fn star_config(&self) -> anyhow::Result<linrel::stargraph::StarConfig> {
        let star = self.star.as_ref().context("not a star document")?;
        Ok(linrel::stargraph::StarConfig::new(
            star.leaves,
            star.weights.clone(),
        )?)
    }

    /// Span document holding the carrier generators of a relation.
    pub fn from_relation(rel: &LinearRelation) -> Self {
        RelationDocument {
            schema_version: SCHEMA_VERSION,
            space_dim: rel.space_dim(),
            kind: DocKind::Span,
            generators: Some(basis_pairs(rel.carrier().basis())),
            matrix: None,
            domain: None,
            star: None,
        }
    }
}

pub fn basis_pairs(basis: &CMatrix) -> Vec<Vec<ComplexPair>> {
    (0..basis.ncols())
        .map(|j| {
            (0..basis.nrows())
                .map(|i| [basis[(i, j)].re, basis[(i, j)].im])
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaKind {
    VonNeumann,
    QuasiNull,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapMode {
    Isometry,
    Contraction,
}

/// Extension parameters: a selection of deficiency directions (generators
/// in `C^{2n}`) plus the map matrix, expressed against the deterministic
/// bases computed by the library for the base relation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ParamsDocument {
    pub schema_version: u32,
    pub formula: FormulaKind,
    pub mode: MapMode,
    pub selection: Vec<Vec<ComplexPair>>,
    pub map_matrix: Vec<Vec<ComplexPair>>,
}

impl ParamsDocument {
    pub fn to_params(
        &self,
        base: &LinearRelation,
        tol: &Tol,
    ) -> anyhow::Result<(FormulaKind, ExtensionParams)> {
        if self.schema_version != SCHEMA_VERSION {
            bail!(
                "unsupported schema_version {} (expected {})",
                self.schema_version,
                SCHEMA_VERSION
            );
        }
        let doubled = 2 * base.space_dim();
        let vectors = self
            .selection
            .iter()
            .map(|g| parse_vector(g, doubled))
            .collect::<anyhow::Result<Vec<_>>>()?;
        let selection = Subspace::span(&vectors, doubled, tol)?;
        let rows = self.map_matrix.len();
        let cols = self.map_matrix.first().map_or(0, |r| r.len());
        let mut map = CMatrix::zeros(rows, cols);
        for (i, row) in self.map_matrix.iter().enumerate() {
            if row.len() != cols {
                bail!("map_matrix rows have inconsistent lengths");
            }
            for (j, p) in row.iter().enumerate() {
                map[(i, j)] = C64::new(p[0], p[1]);
            }
        }
        let mode = match self.mode {
            MapMode::Isometry => VMode::Isometry,
            MapMode::Contraction => VMode::Contraction,
        };
        Ok((
            self.formula,
            ExtensionParams::new(base.clone(), selection, map, mode),
        ))
    }
}
