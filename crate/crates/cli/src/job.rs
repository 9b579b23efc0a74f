//! Job documents. One JSON object per job; the `command` field selects the
//! variant and the remaining fields are checked strictly.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub const SCHEMA_VERSION: u64 = 1;

/// How to print coefficients of classes: in `y` or in `δ = -1 - y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Y,
    Delta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// A parsed job with its output settings.
#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub job: Job,
    pub basis: Basis,
    pub format: Format,
    pub truncation: Option<u32>,
    pub cite: Option<String>,
}

impl JobSpec {
    pub fn command(&self) -> &'static str {
        self.job.command()
    }

    /// Parses a job document. Errors carry a location: the line and column
    /// for malformed JSON, the field path otherwise.
    pub fn parse(src: &str) -> Result<JobSpec, CliError> {
        let value: Value = serde_json::from_str(src).map_err(|e| CliError::Schema(e.to_string()))?;
        Self::from_value(value)
    }

    pub fn from_value(value: Value) -> Result<JobSpec, CliError> {
        let Value::Object(mut map) = value else {
            return Err(CliError::Schema("$: a job must be a JSON object".into()));
        };
        if let Some(v) = map.remove("version") {
            if v.as_u64() != Some(SCHEMA_VERSION) {
                return Err(CliError::Schema(format!(
                    "$.version: expected {SCHEMA_VERSION}, got {v}"
                )));
            }
        }
        let basis = take(&mut map, "basis")?.unwrap_or(Basis::Delta);
        let format = take(&mut map, "format")?.unwrap_or(Format::Text);
        let truncation = take(&mut map, "truncation")?;
        let cite = take(&mut map, "cite")?;
        let job: Job = serde_json::from_value(Value::Object(map)).map_err(|e| CliError::Schema(format!("$: {e}")))?;
        Ok(JobSpec {
            job,
            basis,
            format,
            truncation,
            cite,
        })
    }
}

fn take<T: serde::de::DeserializeOwned>(
    map: &mut serde_json::Map<String, Value>,
    key: &str,
) -> Result<Option<T>, CliError> {
    match map.remove(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => serde_json::from_value(v)
            .map(Some)
            .map_err(|e| CliError::Schema(format!("$.{key}: {e}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Job {
    Chi(ChiJob),
    Toric(ToricJob),
    Snc(SncJob),
    Cone(ConeJob),
    Assemble(AssembleJob),
    Solve(SolveJob),
    Positivity(PositivityJob),
    Residue(ResidueJob),
}

impl Job {
    pub fn command(&self) -> &'static str {
        match self {
            Job::Chi(_) => "chi",
            Job::Toric(_) => "toric",
            Job::Snc(_) => "snc",
            Job::Cone(_) => "cone",
            Job::Assemble(_) => "assemble",
            Job::Solve(_) => "solve",
            Job::Positivity(_) => "positivity",
            Job::Residue(_) => "residue",
        }
    }
}

/// An isolated fixed point given by its tangent weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    #[serde(default)]
    pub label: Option<String>,
    pub weights: Vec<Vec<i64>>,
}

/// Localization of χ_y over smooth isolated fixed points, or over the
/// fixed points of a complete toric variety given by its fan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChiJob {
    #[serde(default)]
    pub rank: Option<usize>,
    #[serde(default)]
    pub points: Option<Vec<PointSpec>>,
    #[serde(default)]
    pub fan: Option<FanSpec>,
}

/// A complete fan in `ℝ^d`: ray generators and the maximal cones as lists
/// of ray indices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanSpec {
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Primal,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSpec {
    pub side: SideSpec,
    pub rays: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Part {
    Whole,
    OpenOrbit,
}

/// An S-alphabet: `"generators"` for the dual-cone generators, or a list of
/// letters, each a character or `{ "name": …, "weight": … }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphabetSpec {
    Keyword(String),
    Letters(Vec<LetterSpec>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LetterSpec {
    Weight(Vec<i64>),
    Named { name: String, weight: Vec<i64> },
}

/// Local class of an affine toric variety at its fixed point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToricJob {
    pub cone: ConeSpec,
    /// Generators of the character lattice; the standard lattice if absent.
    #[serde(default)]
    pub lattice: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub part: Option<Part>,
    #[serde(default)]
    pub alphabet: Option<AlphabetSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantSpec {
    Space,
    Complement,
    Log,
    Divisor,
}

/// `x_1 ⋯ x_k = 0` in `ℂ^n`, `n` being the number of weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SncJob {
    pub k: usize,
    pub weights: Vec<Vec<i64>>,
    pub variant: VariantSpec,
    #[serde(default)]
    pub alphabet: Option<AlphabetSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionSpec {
    Punctured,
    Closed,
    Complement,
}

/// `f(U)` as a hypersurface degree or as coefficient strings of `U^0, U^1, …`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum FSpec {
    Hypersurface { degree: u32 },
    Coeffs(Vec<String>),
}

/// Affine cone over a projective variety `Y ⊂ ℙ^{n-1}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeJob {
    pub n: usize,
    pub f: FSpec,
    pub region: RegionSpec,
    /// χ_y(Y) as a polynomial string; computed from `f` if absent.
    #[serde(default)]
    pub chi: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum FactorSpec {
    Full(Vec<i64>),
    Punctured(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    #[serde(default)]
    pub sign: Option<i8>,
    #[serde(default)]
    pub multiplicity: Option<u32>,
    pub factors: Vec<FactorSpec>,
}

/// Pushforward from chart terms, or the built-in cusp comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssembleJob {
    #[serde(default)]
    pub rank: Option<usize>,
    #[serde(default)]
    pub terms: Option<Vec<TermSpec>>,
    #[serde(default)]
    pub cusp: Option<u32>,
    #[serde(default)]
    pub alphabet: Option<AlphabetSpec>,
}

/// The numerator of an unknown contribution with the given denominator.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveJob {
    pub rank: usize,
    /// χ_y of the whole space, a polynomial string in `y`.
    pub chi: String,
    pub known: Vec<PointSpec>,
    pub denominator: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodSpec {
    Rewrite,
    Torsimp,
}

/// A sign report for an S-polynomial given as text, or for a toric class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PositivityJob {
    #[serde(default)]
    pub polynomial: Option<String>,
    #[serde(default)]
    pub cone: Option<ConeSpec>,
    #[serde(default)]
    pub lattice: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub part: Option<Part>,
    #[serde(default)]
    pub method: Option<MethodSpec>,
    #[serde(default)]
    pub alphabet: Option<AlphabetSpec>,
}

/// `Res_{h=0}` of a Laurent polynomial in `U = e^{-h} - 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidueJob {
    /// `(1 + U)^k / U^n`.
    #[serde(default)]
    pub power: Option<PowerSpec>,
    /// Lowest exponent of `U` for `coeffs`.
    #[serde(default)]
    pub low: Option<i64>,
    #[serde(default)]
    pub coeffs: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerSpec {
    pub n: u32,
    pub k: u32,
}
