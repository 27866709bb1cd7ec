use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::MinimalResolution;
use crate::error::{Error, Result};
use crate::gfp::{DenseMatrix, SparseMatrix};
use crate::modrep::GroupAlgebraContext;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ZetaSpec {
    /// `ζ_i` dual to the generator of multidegree `n e_i`.
    Standard,
    /// Seeded random nonzero values on every generator.
    Random { seed: u64 },
}

/// A `kE`-linear map `ζ: P_n -> k`, given by its values on the free generators
/// of `P_n`. Because the resolution is minimal, every nonzero such map is a
/// nonzero cohomology class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterFunctional {
    ctx: GroupAlgebraContext,
    degree: i32,
    /// One value per generator, in the resolution's generator order.
    values: Vec<u32>,
    /// Multidegree of each generator, for reading off coefficients.
    multidegrees: Vec<Vec<i32>>,
}

impl ParameterFunctional {
    pub fn new(res: &MinimalResolution, degree: i32, values: Vec<u32>) -> Result<Self> {
        if degree < 2 || degree % 2 != 0 {
            return Err(Error::InvalidConfig(format!(
                "parameters live in even degree >= 2, got {degree}"
            )));
        }
        if degree > res.length() {
            return Err(Error::InvalidConfig(format!(
                "degree {degree} exceeds the resolution length {}",
                res.length()
            )));
        }
        let gens = res.generators(degree);
        if values.len() != gens.len() {
            return Err(Error::dims("ParameterFunctional", "one value per generator"));
        }
        let p = res.ctx().p();
        let values: Vec<u32> = values.into_iter().map(|v| v % p).collect();
        if values.iter().all(|&v| v == 0) {
            return Err(Error::InvalidConfig("ζ must be nonzero".into()));
        }
        Ok(ParameterFunctional {
            ctx: *res.ctx(),
            degree,
            values,
            multidegrees: gens.iter().map(|g| g.multidegree.clone()).collect(),
        })
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Value on the generator of the given multidegree.
    pub fn value_at(&self, multidegree: &[i32]) -> u32 {
        self.multidegrees
            .iter()
            .position(|a| a == multidegree)
            .map_or(0, |k| self.values[k])
    }

    /// `1 x dim P_n` matrix: generator `g` goes to its value, the radical to 0.
    pub fn matrix(&self, res: &MinimalResolution) -> Result<SparseMatrix> {
        let gens = res.generators(self.degree);
        let trip = gens
            .iter()
            .zip(&self.values)
            .filter(|(_, &v)| v != 0)
            .map(|(g, &v)| (0, g.offset, v))
            .collect();
        SparseMatrix::from_triplets(1, res.term(self.degree).dim(), self.ctx.field(), trip)
    }
}

/// `ζ_i` (0-based) of degree `n`.
pub fn make_zeta(res: &MinimalResolution, n: i32, spec: ZetaSpec, i: usize) -> Result<ParameterFunctional> {
    let r = res.ctx().r();
    if i >= r {
        return Err(Error::InvalidConfig(format!("parameter index {i} >= r = {r}")));
    }
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidConfig(format!("ζ must have even degree >= 2, got {n}")));
    }
    if n > res.length() {
        return Err(Error::InvalidConfig(format!(
            "degree {n} exceeds the resolution length {}",
            res.length()
        )));
    }
    let gens = res.generators(n);
    let values = match spec {
        ZetaSpec::Standard => {
            let mut target = vec![0i32; r];
            target[i] = n;
            gens.iter().map(|g| u32::from(g.multidegree == target)).collect()
        }
        ZetaSpec::Random { seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let p = res.ctx().p();
            loop {
                let v: Vec<u32> = gens.iter().map(|_| rng.gen_range(0..p)).collect();
                if v.iter().any(|&x| x != 0) {
                    break v;
                }
            }
        }
    };
    ParameterFunctional::new(res, n, values)
}

/// `ζ_1 .. ζ_r` for one spec.
pub fn zeta_family(res: &MinimalResolution, n: i32, spec: ZetaSpec) -> Result<Vec<ParameterFunctional>> {
    (0..res.ctx().r()).map(|i| make_zeta(res, n, spec, i)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HsopStatus {
    Parameters,
    NotParameters,
    Undecided,
}

/// At `n = 2`, `ζ_1..ζ_r` form a system of parameters iff their coefficients on
/// the polynomial generators `y_j` (multidegree `2 e_j`) form an invertible
/// matrix; the exterior part is nilpotent and does not matter. Other degrees
/// are left undecided.
pub fn hsop_check(zetas: &[ParameterFunctional], n: i32) -> Result<HsopStatus> {
    let Some(first) = zetas.first() else {
        return Err(Error::InvalidConfig("no parameters given".into()));
    };
    let r = first.ctx.r();
    if zetas.len() != r {
        return Err(Error::InvalidConfig(format!("need {r} parameters, got {}", zetas.len())));
    }
    if zetas.iter().any(|z| z.degree != n) {
        return Err(Error::InvalidConfig("parameters must share the degree n".into()));
    }
    if n != 2 {
        return Ok(HsopStatus::Undecided);
    }
    let mut m = DenseMatrix::zeros(r, r, first.ctx.field());
    for (i, z) in zetas.iter().enumerate() {
        for j in 0..r {
            let mut a = vec![0i32; r];
            a[j] = 2;
            m.set(i, j, z.value_at(&a));
        }
    }
    Ok(if m.rank() == r {
        HsopStatus::Parameters
    } else {
        HsopStatus::NotParameters
    })
}
