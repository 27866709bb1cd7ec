use std::collections::BTreeMap;

use rayon::prelude::*;

use super::Factor;
use crate::chaincx::{ChainMap, Complex, Kunneth, TensorComplex};
use crate::error::{Error, Result};
use crate::exterior::THETA_PAIRS;
use crate::gfp::{self, DenseMatrix, SparseMatrix, SparseVector};

/// `θ_i = 1 ⊗ .. ⊗ ϑ_i ⊗ .. ⊗ 1` on the tensor complex, `i` 0-based.
pub fn build_theta_i(c: &TensorComplex, factors: &[Factor], i: usize) -> Result<ChainMap> {
    let f = factors
        .get(i)
        .ok_or_else(|| Error::InvalidConfig(format!("factor index {i} out of range")))?;
    c.lift_factor_map(i, &f.vartheta)
}

pub fn build_thetas(c: &TensorComplex, factors: &[Factor]) -> Result<Vec<ChainMap>> {
    (0..factors.len())
        .into_par_iter()
        .map(|i| build_theta_i(c, factors, i))
        .collect()
}

/// `θ = θ_1θ_2 + θ_3θ_4 + θ_5θ_6 + θ_7θ_8`.
pub fn build_theta(thetas: &[ChainMap]) -> Result<ChainMap> {
    if thetas.len() < 8 {
        return Err(Error::InvalidConfig(format!("θ needs r >= 8, got {}", thetas.len())));
    }
    let mut acc: Option<ChainMap> = None;
    for &(a, b) in &THETA_PAIRS {
        let term = thetas[a].compose(&thetas[b])?;
        acc = Some(match acc {
            None => term,
            Some(x) => x.add(&term)?,
        });
    }
    Ok(acc.expect("four pairs"))
}

/// `g_{n+deg f} f_n` for every source degree, as raw matrices.
fn compose_components(g: &ChainMap, f: &ChainMap) -> Result<BTreeMap<i32, SparseMatrix>> {
    let mut out = BTreeMap::new();
    for (&n, fc) in f.components() {
        if let Some(gc) = g.component(n + f.degree()) {
            out.insert(n, gc.mul(fc)?);
        }
    }
    Ok(out)
}

/// Pairs `(i, j)`, `i <= j`, where `θ_iθ_j + θ_jθ_i` is not the zero matrix in
/// some degree (for `i = j` this tests `θ_i^2 = 0`).
pub fn anticommutation_failures(thetas: &[ChainMap]) -> Result<Vec<(usize, usize)>> {
    let r = thetas.len();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
    let results: Vec<Result<Option<(usize, usize)>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let ij = compose_components(&thetas[i], &thetas[j])?;
            let ji = compose_components(&thetas[j], &thetas[i])?;
            let degrees: std::collections::BTreeSet<i32> = ij.keys().chain(ji.keys()).copied().collect();
            for n in degrees {
                let sum = match (ij.get(&n), ji.get(&n)) {
                    (Some(a), Some(b)) => a.add(b)?,
                    (Some(a), None) | (None, Some(a)) => a.clone(),
                    (None, None) => continue,
                };
                if !sum.is_zero() {
                    return Ok(Some((i, j)));
                }
            }
            Ok(None)
        })
        .collect();
    let mut out = Vec::new();
    for x in results {
        if let Some(p) = x? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Same identity on homology matrices `H(θ_i)`, keyed by source degree.
pub fn homology_anticommutation_failures(
    induced: &[BTreeMap<i32, DenseMatrix>],
    m: i32,
) -> Result<Vec<(usize, usize)>> {
    let r = induced.len();
    let mut out = Vec::new();
    for i in 0..r {
        for j in i..r {
            for (&n, a_n) in &induced[j] {
                let (Some(b_hi), Some(a_lo)) = (induced[i].get(&(n + m)), induced[i].get(&n)) else {
                    continue;
                };
                let Some(b_n) = induced[j].get(&(n + m)) else { continue };
                let ij = b_hi.mul(a_n)?;
                let ji = b_n.mul(a_lo)?;
                let bad = ij.data().iter().zip(ji.data()).any(|(&x, &y)| (x + y) % a_n.field().p() != 0);
                if bad {
                    out.push((i, j));
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// `H(θ_i)` for every factor through Künneth and the factor maps `H(ϑ_i)`.
pub fn kunneth_thetas(
    k: &Kunneth,
    factor_maps: &[BTreeMap<i32, DenseMatrix>],
    m: i32,
) -> Result<Vec<BTreeMap<i32, DenseMatrix>>> {
    (0..factor_maps.len())
        .map(|i| k.induced_factor_map(i, &factor_maps[i], m))
        .collect()
}

/// `H(θ)` from the `H(θ_i)`.
pub fn homology_theta(induced: &[BTreeMap<i32, DenseMatrix>], m: i32) -> Result<BTreeMap<i32, DenseMatrix>> {
    if induced.len() < 8 {
        return Err(Error::InvalidConfig(format!("θ needs r >= 8, got {}", induced.len())));
    }
    let mut out: BTreeMap<i32, DenseMatrix> = BTreeMap::new();
    for &(a, b) in &THETA_PAIRS {
        for (&n, hb) in &induced[b] {
            let Some(ha) = induced[a].get(&(n + m)) else { continue };
            let prod = ha.mul(hb)?;
            let sum = match out.remove(&n) {
                Some(acc) => add_dense(&acc, &prod),
                None => prod,
            };
            out.insert(n, sum);
        }
    }
    Ok(out)
}

fn add_dense(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let f = a.field();
    let data = a.data().iter().zip(b.data()).map(|(&x, &y)| f.add(x, y)).collect();
    DenseMatrix::from_rows(a.rows(), a.cols(), f, data).expect("same shape")
}

/// Chain-level regular representation check: the cycles
/// `θ_{s_1} .. θ_{s_d}(z)` for all subsets `S` must, degree by degree, be as
/// many as `dims` says and independent modulo boundaries.
pub fn regular_rep_chain(
    c: &Complex,
    dims: &BTreeMap<i32, usize>,
    fundamental: &SparseVector,
    thetas: &[ChainMap],
) -> Result<bool> {
    let r = thetas.len();
    let m = thetas.first().map_or(0, |t| t.degree());
    let base = c.lo();
    let mut by_degree: BTreeMap<i32, Vec<SparseVector>> = BTreeMap::new();
    for mask in 0u32..(1u32 << r) {
        let mut v = fundamental.clone();
        let mut deg = base;
        for i in (0..r).rev().filter(|&i| mask >> i & 1 == 1) {
            v = match thetas[i].component(deg) {
                Some(t) => t.mul_vec(&v)?,
                None => SparseVector::zero(c.dim(deg + m)),
            };
            deg += m;
        }
        by_degree.entry(deg).or_default().push(v);
    }
    let total: usize = by_degree.values().map(|v| v.len()).sum();
    if total != dims.values().sum::<usize>() {
        return Ok(false);
    }
    for (deg, vs) in &by_degree {
        if dims.get(deg).copied().unwrap_or(0) != vs.len() {
            return Ok(false);
        }
        let f = c.ctx().field();
        let cols = SparseMatrix::from_columns(c.dim(*deg), vs, f);
        if let Some(d) = c.d(*deg) {
            if !d.mul(&cols)?.is_zero() {
                return Err(Error::invariant(format!("θ-image in degree {deg} is not a cycle")));
            }
        }
        let boundary = c.d_or_zero(deg + 1);
        let rb = gfp::rank(&boundary);
        let rall = gfp::rank(&SparseMatrix::hstack(&[&boundary, &cols])?);
        if rall != rb + vs.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
