//! The code file: a GRS or extended GRS code together with the field it lives
//! in, serialized as single-line JSON.
//!
//! Keys always appear in this order:
//!
//! ```text
//! format_version, field {p, m, modulus, generator}, k, extended,
//! points, multipliers, provenance {theorem, parameters, lambda}
//! ```
//!
//! `provenance` is omitted for codes that did not come from a construction.
//! `parameters` is `{r, m, t}` for theorems 1 to 3 and `{p, mdeg, t, e}` for
//! theorem 4. Every field element is written as its integer code.

use mds_selfdual::construct::{Construction, ConstructionParams, CosetParams, Family, SubspaceParams};
use mds_selfdual::{CodeSpec, Fe, FieldContext};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldRecord {
    pub p: u64,
    pub m: u32,
    pub modulus: Vec<u32>,
    pub generator: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Parameters {
    Coset(CosetRecord),
    Subspace(SubspaceRecord),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosetRecord {
    pub r: u64,
    pub m: u64,
    pub t: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceRecord {
    pub p: u64,
    pub mdeg: u32,
    pub t: u64,
    pub e: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub theorem: u8,
    pub parameters: Parameters,
    pub lambda: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub format_version: u32,
    pub field: FieldRecord,
    pub k: usize,
    pub extended: bool,
    pub points: Vec<u32>,
    pub multipliers: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl Provenance {
    pub fn from_params(params: &ConstructionParams, lambda: Fe) -> Self {
        let parameters = match params {
            ConstructionParams::Coset(c) => Parameters::Coset(CosetRecord { r: c.r, m: c.m, t: c.t }),
            ConstructionParams::Subspace(s) => {
                Parameters::Subspace(SubspaceRecord { p: s.p, mdeg: s.mdeg, t: s.t, e: s.e })
            }
        };
        Provenance { theorem: params.theorem(), parameters, lambda: lambda.code() }
    }

    /// The construction parameters, if theorem and parameter shape agree.
    pub fn params(&self) -> Option<ConstructionParams> {
        match (&self.parameters, self.theorem) {
            (Parameters::Coset(c), id) => Family::from_theorem(id)
                .map(|family| ConstructionParams::Coset(CosetParams { r: c.r, m: c.m, t: c.t, family })),
            (Parameters::Subspace(s), 4) => {
                Some(ConstructionParams::Subspace(SubspaceParams { p: s.p, mdeg: s.mdeg, t: s.t, e: s.e }))
            }
            _ => None,
        }
    }
}

impl CodeFile {
    pub fn new(ctx: &FieldContext, code: &CodeSpec, provenance: Option<Provenance>) -> Self {
        let spec = ctx.spec();
        CodeFile {
            format_version: FORMAT_VERSION,
            field: FieldRecord {
                p: spec.p as u64,
                m: spec.m,
                modulus: spec.modulus.clone(),
                generator: ctx.generator().code(),
            },
            k: code.k,
            extended: code.extended,
            points: code.points.iter().map(|x| x.code()).collect(),
            multipliers: code.multipliers.iter().map(|x| x.code()).collect(),
            provenance,
        }
    }

    pub fn from_construction(ctx: &FieldContext, c: &Construction) -> Self {
        Self::new(ctx, &c.code, Some(Provenance::from_params(&c.params, c.lambda)))
    }

    /// Single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed code file: {e}")))
    }

    /// Rebuilds the field and the code, rejecting anything that cannot be
    /// represented. Repeated points and zero multipliers are accepted here;
    /// verification reports them.
    pub fn load(&self) -> Result<(FieldContext, CodeSpec), CliError> {
        let bad = |msg: String| CliError::Input(format!("malformed code file: {msg}"));
        if self.format_version != FORMAT_VERSION {
            return Err(bad(format!("unsupported format_version {}", self.format_version)));
        }
        let f = &self.field;
        let ctx = FieldContext::create(f.p, f.m, Some(&f.modulus)).map_err(|e| bad(e.to_string()))?;
        if ctx.generator().code() != f.generator {
            return Err(bad(format!(
                "generator {} is not the canonical primitive element {}",
                f.generator,
                ctx.generator()
            )));
        }
        let element = |c: u32| ctx.element(c as u64).map_err(|e| bad(e.to_string()));
        let points = self.points.iter().map(|&c| element(c)).collect::<Result<Vec<_>, _>>()?;
        let multipliers = self.multipliers.iter().map(|&c| element(c)).collect::<Result<Vec<_>, _>>()?;
        if points.len() != multipliers.len() {
            return Err(bad(format!("{} points but {} multipliers", points.len(), multipliers.len())));
        }
        if points.is_empty() {
            return Err(bad("no evaluation points".into()));
        }
        let n = points.len() + usize::from(self.extended);
        if self.k > n {
            return Err(bad(format!("k = {} exceeds the length {n}", self.k)));
        }
        if let Some(p) = &self.provenance {
            if p.params().is_none() {
                return Err(bad(format!("parameters do not match theorem {}", p.theorem)));
            }
            element(p.lambda)?;
        }
        Ok((ctx, CodeSpec { k: self.k, points, multipliers, extended: self.extended }))
    }
}
