//! Document and report schemas for the command-line front end.
//!
//! Input is one JSON document per line. Complex entries are accepted as a
//! bare real number or a `[re, im]` pair; emitters always write pairs.
//! Every emitted record carries `"schema_version": "1"` and a `kind`
//! discriminator, and re-parses under the same schema.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraFamily, LieAlgebraElement, Sl2Coords};
use crate::classify::{Classification, FrequencyVector, TorusKnotType};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

pub const SCHEMA_VERSION: &str = "1";

/// One complex entry: bare real or `[re, im]`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Pair([f64; 2]),
}

impl Entry {
    pub fn to_complex(self) -> Complex64 {
        match self {
            Entry::Real(re) => Complex64::new(re, 0.0),
            Entry::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

/// Input document: a family tag plus exactly one of a matrix or sl(2,ℝ)
/// basis coordinates.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sl2_coords: Option<[f64; 3]>,
}

impl MatrixDocument {
    pub fn parse(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::Parse(format!("bad document: {e}")))
    }

    /// Resolve the document into a tagged element. `family_flag` supplies
    /// the family when the document does not carry one.
    pub fn to_element(&self, family_flag: Option<&str>) -> Result<LieAlgebraElement> {
        let family_tag =
            self.family.as_deref().or(family_flag).ok_or_else(|| {
                Error::Parse("no family: set the document field or --family".into())
            })?;
        match (&self.matrix, &self.sl2_coords) {
            (Some(_), Some(_)) => Err(Error::Parse(
                "document must carry exactly one of matrix / sl2_coords, found both".into(),
            )),
            (None, None) => Err(Error::Parse(
                "document must carry exactly one of matrix / sl2_coords, found neither".into(),
            )),
            (Some(rows), None) => {
                let complex: Vec<Vec<Complex64>> = rows
                    .iter()
                    .map(|r| r.iter().map(|e| e.to_complex()).collect())
                    .collect();
                let m = Matrix::from_rows(&complex)?;
                let family = family_from_tag(family_tag, m.dim())?;
                LieAlgebraElement::new(family, m)
            }
            (None, Some([a, b, c])) => {
                if family_tag != "sl2R" {
                    return Err(Error::Parse(format!(
                        "sl2_coords requires family sl2R, got {family_tag}"
                    )));
                }
                Ok(crate::algebra::build_sl2(Sl2Coords::new(*a, *b, *c)))
            }
        }
    }
}

pub fn family_from_tag(tag: &str, n: usize) -> Result<AlgebraFamily> {
    let family = match tag {
        "su" => AlgebraFamily::Su(n),
        "so" => AlgebraFamily::So(n),
        "sl2R" => AlgebraFamily::Sl2R,
        "sl3R" => AlgebraFamily::Sl3R,
        "slnR" => AlgebraFamily::SlnR(n),
        "heisenberg" => AlgebraFamily::Heisenberg,
        other => {
            return Err(Error::Parse(format!(
                "unknown family tag {other:?}: expected su, so, sl2R, sl3R, slnR, or heisenberg"
            )))
        }
    };
    if family.dim() != n {
        return Err(Error::Parse(format!(
            "family {tag} expects a {}x{} matrix, got {n}x{n}",
            family.dim(),
            family.dim()
        )));
    }
    family.validate()?;
    Ok(family)
}

/// Matrix as rows of `[re, im]` pairs.
pub fn matrix_entries(m: &Matrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrequencyReport {
    pub betas: Vec<f64>,
    pub all_imaginary: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
}

impl From<&FrequencyVector> for FrequencyReport {
    fn from(f: &FrequencyVector) -> Self {
        FrequencyReport {
            betas: f.betas.clone(),
            all_imaginary: f.all_imaginary,
            k: f.integer_form.as_ref().map(|i| i.k.clone()),
            mu: f.integer_form.as_ref().map(|i| i.mu),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct KnotReport {
    pub p: i64,
    pub q: i64,
}

impl From<TorusKnotType> for KnotReport {
    fn from(t: TorusKnotType) -> Self {
        KnotReport { p: t.p, q: t.q }
    }
}

/// Outcome of an oracle period scan attached to a classification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleCheck {
    pub t_max: f64,
    pub steps: usize,
    pub eps: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relative_mismatch: Option<f64>,
    pub confirmed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub schema_version: String,
    pub kind: String,
    pub family: String,
    pub n: usize,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequencies: Option<FrequencyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knot: Option<KnotReport>,
    pub experimental: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

impl ClassifyReport {
    pub fn new(elem: &LieAlgebraElement, cls: &Classification) -> Self {
        ClassifyReport {
            schema_version: SCHEMA_VERSION.into(),
            kind: "classification".into(),
            family: elem.family.tag().into(),
            n: elem.matrix.dim(),
            verdict: cls.verdict.as_str().into(),
            period: cls.period,
            frequencies: cls.frequencies.as_ref().map(FrequencyReport::from),
            knot: cls.knot.map(KnotReport::from),
            experimental: cls.experimental,
            detail: cls.detail.clone(),
            oracle: None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CanonicalReport {
    pub schema_version: String,
    pub kind: String,
    pub family: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form_tag: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<f64>>,
    pub generator: Vec<Vec<[f64; 2]>>,
    pub conjugator: Vec<Vec<[f64; 2]>>,
    pub target_group: String,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PeriodReport {
    pub schema_version: String,
    pub kind: String,
    pub family: String,
    pub n: usize,
    pub period: f64,
    /// ‖exp(T·X) − I‖ at the reported period.
    pub residual: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frequencies: Option<FrequencyReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleReport {
    pub schema_version: String,
    pub kind: String,
    pub family: String,
    pub n: usize,
    pub t_max: f64,
    pub steps: usize,
    pub eps: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    pub message: String,
}

/// One sample of the curve exp(tX), plus the standard torus embedding for
/// circle subgroups that carry a torus-knot label.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveSample {
    pub schema_version: String,
    pub kind: String,
    pub t: f64,
    /// exp(tX) flattened row-major as [re, im] pairs.
    pub point: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding3d: Option<[f64; 3]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ErrorReport {
    pub schema_version: String,
    pub kind: String,
    pub error: String,
    pub message: String,
}

impl ErrorReport {
    pub fn new(err: &Error) -> Self {
        ErrorReport {
            schema_version: SCHEMA_VERSION.into(),
            kind: "error".into(),
            error: err.tag().into(),
            message: err.to_string(),
        }
    }
}
