use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::Complex;
use crate::error::{Error, Result};
use crate::gfp::SparseMatrix;
use crate::modrep::{GModule, GModuleJson, GroupAlgebraContext};

pub const COMPLEX_FORMAT: &str = "homforge-complex/1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DegreeJson {
    pub degree: i32,
    pub module: GModuleJson,
    /// `d_degree`; `null` in the lowest degree.
    pub differential: Option<SparseMatrix>,
}

/// Wire form of a complex. `checksum` is the SHA-256 of the compact JSON
/// encoding of `degrees`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexJson {
    pub format: String,
    pub p: u32,
    pub r: usize,
    pub degrees: Vec<DegreeJson>,
    pub checksum: String,
}

fn digest(degrees: &[DegreeJson]) -> Result<String> {
    let bytes = serde_json::to_vec(degrees)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

impl ComplexJson {
    /// Recomputes the checksum after an edit to `degrees`.
    pub fn seal(&mut self) -> Result<()> {
        self.checksum = digest(&self.degrees)?;
        Ok(())
    }
}

impl Complex {
    pub fn to_json(&self) -> Result<ComplexJson> {
        let degrees: Vec<DegreeJson> = self
            .degrees()
            .map(|i| DegreeJson {
                degree: i,
                module: self.term(i).unwrap().to_json(),
                differential: self.d(i).cloned(),
            })
            .collect();
        Ok(ComplexJson {
            format: COMPLEX_FORMAT.to_string(),
            p: self.ctx().p(),
            r: self.ctx().r(),
            checksum: digest(&degrees)?,
            degrees,
        })
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string(&self.to_json()?)?)
    }

    /// Rebuilds and re-verifies a complex; fails on a foreign format tag or a
    /// checksum that does not match the payload.
    pub fn from_json(j: &ComplexJson) -> Result<Complex> {
        if j.format != COMPLEX_FORMAT {
            return Err(Error::Version {
                found: j.format.clone(),
                expected: COMPLEX_FORMAT.to_string(),
            });
        }
        let computed = digest(&j.degrees)?;
        if computed != j.checksum {
            return Err(Error::Checksum {
                stored: j.checksum.clone(),
                computed,
            });
        }
        let ctx = GroupAlgebraContext::with_prime(j.p, j.r)?;
        let first = j
            .degrees
            .first()
            .ok_or_else(|| Error::dims("Complex::from_json", "no degrees"))?;
        let lo = first.degree;
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for (k, d) in j.degrees.iter().enumerate() {
            if d.degree != lo + k as i32 {
                return Err(Error::dims("Complex::from_json", "degrees must be contiguous and ascending"));
            }
            let m = GModule::from_json(&d.module)?;
            if m.ctx() != &ctx {
                return Err(Error::ContextMismatch("module disagrees with the complex header".into()));
            }
            terms.push(Arc::new(m));
            match (k, &d.differential) {
                (0, None) => {}
                (0, Some(_)) => {
                    return Err(Error::dims("Complex::from_json", "lowest degree carries a differential"))
                }
                (_, Some(m)) => diffs.push(m.clone()),
                (_, None) => return Err(Error::dims("Complex::from_json", "missing differential")),
            }
        }
        Complex::new(ctx, lo, terms, diffs)
    }

    pub fn from_json_str(s: &str) -> Result<Complex> {
        let j: ComplexJson = serde_json::from_str(s)?;
        Self::from_json(&j)
    }
}
