use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::gfp::{self, DenseMatrix, FieldPrime, SparseMatrix};

/// Ranks of every differential of `c`, keyed by degree.
fn differential_ranks(c: &Complex) -> BTreeMap<i32, usize> {
    let degs: Vec<i32> = (c.lo() + 1..=c.hi()).collect();
    degs.par_iter()
        .map(|&i| (i, gfp::rank(c.d(i).expect("in support"))))
        .collect()
}

/// `dim H_i = dim C_i - rank d_i - rank d_{i+1}` for every degree, by rank alone.
pub fn homology_dims(c: &Complex) -> Result<BTreeMap<i32, usize>> {
    let ranks = differential_ranks(c);
    let mut out = BTreeMap::new();
    for i in c.degrees() {
        let r_in = ranks.get(&(i + 1)).copied().unwrap_or(0);
        let r_out = ranks.get(&i).copied().unwrap_or(0);
        let dim = c.dim(i).checked_sub(r_in + r_out).ok_or_else(|| {
            Error::invariant(format!("rank d_{i} + rank d_{} exceeds dim C_{i}", i + 1))
        })?;
        out.insert(i, dim);
    }
    check_euler(c, &out)?;
    Ok(out)
}

fn check_euler(c: &Complex, dims: &BTreeMap<i32, usize>) -> Result<()> {
    let chi_h: i64 = dims
        .iter()
        .map(|(&i, &d)| if i.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
        .sum();
    if chi_h != c.euler_characteristic() {
        return Err(Error::invariant(format!(
            "Euler characteristic of homology {chi_h} != {} of the chain groups",
            c.euler_characteristic()
        )));
    }
    Ok(())
}

/// Homology in one degree: a basis of representative cycles and a way to
/// read off the coordinates of any cycle in that basis.
#[derive(Clone, Debug)]
pub struct HomologyDegree {
    pub degree: i32,
    pub dim: usize,
    /// Columns are cycles whose classes form a basis.
    pub reps: SparseMatrix,
    /// `[B | reps]` with `B` a basis of the boundaries.
    frame: SparseMatrix,
    boundaries: usize,
}

impl HomologyDegree {
    pub(crate) fn new(degree: i32, reps: SparseMatrix, boundaries: SparseMatrix) -> Result<Self> {
        let nb = boundaries.cols();
        let frame = SparseMatrix::hstack(&[&boundaries, &reps])?;
        Ok(HomologyDegree {
            degree,
            dim: reps.cols(),
            reps,
            frame,
            boundaries: nb,
        })
    }

    /// Coordinates of the classes of the given cycles (one per column),
    /// as a `dim x cycles.cols()` matrix. Fails if some column is not a cycle.
    pub fn coordinates(&self, cycles: &SparseMatrix) -> Result<DenseMatrix> {
        let f = self.reps.field();
        if self.dim == 0 {
            return Ok(DenseMatrix::zeros(0, cycles.cols(), f));
        }
        let x = gfp::solve_many(&self.frame, cycles)?.ok_or_else(|| {
            Error::invariant(format!("vector in degree {} is not a cycle", self.degree))
        })?;
        Ok(x.block(self.boundaries, self.dim, 0, x.cols()).to_dense())
    }
}

/// Homology of a complex with representatives in every degree.
#[derive(Clone, Debug)]
pub struct Homology {
    field: FieldPrime,
    degrees: BTreeMap<i32, HomologyDegree>,
}

impl Homology {
    /// Ranks decide the dimensions first; kernels and representatives are
    /// only computed in degrees with nonzero homology.
    pub fn compute(c: &Complex) -> Result<Homology> {
        let dims = homology_dims(c)?;
        let f = c.ctx().field();
        let degs: Vec<i32> = c.degrees().collect();
        let parts: Vec<Result<HomologyDegree>> = degs
            .par_iter()
            .map(|&i| {
                if dims[&i] == 0 {
                    HomologyDegree::new(i, SparseMatrix::zero(c.dim(i), 0, f), SparseMatrix::zero(c.dim(i), 0, f))
                } else {
                    let h = Self::degree(c, i)?;
                    if h.dim != dims[&i] {
                        return Err(Error::invariant(format!("homology rank mismatch in degree {i}")));
                    }
                    Ok(h)
                }
            })
            .collect();
        let mut degrees = BTreeMap::new();
        for p in parts {
            let h = p?;
            degrees.insert(h.degree, h);
        }
        let h = Homology {
            field: c.ctx().field(),
            degrees,
        };
        check_euler(c, &h.dims())?;
        Ok(h)
    }

    fn degree(c: &Complex, i: i32) -> Result<HomologyDegree> {
        let f = c.ctx().field();
        let n = c.dim(i);
        let cycles = match c.d(i) {
            Some(d) => gfp::nullspace(d),
            None => SparseMatrix::identity(n, f),
        };
        let boundaries = match c.d(i + 1) {
            Some(d) => d.select_columns(&gfp::pivot_columns(d)),
            None => SparseMatrix::zero(n, 0, f),
        };
        let reps = if cycles.cols() == boundaries.cols() {
            SparseMatrix::zero(n, 0, f)
        } else {
            gfp::complement_in(&cycles, &boundaries)
                .map_err(|_| Error::invariant(format!("boundaries in degree {i} are not cycles")))?
        };
        if reps.cols() + boundaries.cols() != cycles.cols() {
            return Err(Error::invariant(format!("homology basis mismatch in degree {i}")));
        }
        HomologyDegree::new(i, reps, boundaries)
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn get(&self, i: i32) -> Option<&HomologyDegree> {
        self.degrees.get(&i)
    }

    pub fn dim(&self, i: i32) -> usize {
        self.degrees.get(&i).map_or(0, |h| h.dim)
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.degrees.iter().map(|(&i, h)| (i, h.dim)).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.degrees.values().map(|h| h.dim).sum()
    }

    pub fn degrees(&self) -> impl Iterator<Item = &HomologyDegree> {
        self.degrees.values()
    }
}

/// `H(f)` as matrices `H_i(C) -> H_{i+m}(D)`, keyed by the source degree.
pub fn induced_map(f: &ChainMap, hs: &Homology, ht: &Homology) -> Result<BTreeMap<i32, DenseMatrix>> {
    let fld = hs.field;
    let m = f.degree();
    let mut out = BTreeMap::new();
    for h in hs.degrees() {
        let i = h.degree;
        let rows = ht.dim(i + m);
        let mat = match (f.component(i), ht.get(i + m)) {
            (Some(fi), Some(t)) if h.dim > 0 && rows > 0 => t.coordinates(&fi.mul(&h.reps)?)?,
            _ => DenseMatrix::zeros(rows, h.dim, fld),
        };
        out.insert(i, mat);
    }
    Ok(out)
}

/// True if `f` has degree 0 and induces isomorphisms in every degree.
pub fn is_quasi_iso(f: &ChainMap, hs: &Homology, ht: &Homology) -> Result<bool> {
    if f.degree() != 0 {
        return Ok(false);
    }
    let lo = f.source().lo().min(f.target().lo());
    let hi = f.source().hi().max(f.target().hi());
    let maps = induced_map(f, hs, ht)?;
    for i in lo..=hi {
        let (a, b) = (hs.dim(i), ht.dim(i));
        if a != b {
            return Ok(false);
        }
        if a > 0 && maps.get(&i).map_or(0, |m| m.rank()) != a {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Homology of the cone of a degree-`m` endomorphism from the long exact
/// sequence: `dim H_j(D) = dim coker(H_{j-m} -> H_j) + dim ker(H_{j-m-1} -> H_{j-1})`.
pub fn cone_homology_dims(
    dims: &BTreeMap<i32, usize>,
    induced: &BTreeMap<i32, DenseMatrix>,
    m: i32,
) -> BTreeMap<i32, usize> {
    let rank = |i: i32| induced.get(&i).map_or(0, |x| x.rank());
    let dim = |i: i32| dims.get(&i).copied().unwrap_or(0);
    let (Some(&lo), Some(&hi)) = (dims.keys().next(), dims.keys().next_back()) else {
        return BTreeMap::new();
    };
    (lo..=hi + m + 1)
        .map(|j| {
            let coker = dim(j) - rank(j - m);
            let ker = dim(j - m - 1) - rank(j - m - 1);
            (j, coker + ker)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{GModule, GroupAlgebraContext};
    use std::sync::Arc;

    fn koszul(p: u32) -> Arc<Complex> {
        let ctx = GroupAlgebraContext::with_prime(p, 1).unwrap();
        let a = Arc::new(GModule::cyclic_factor(ctx, 0).unwrap());
        let x = a.action(0).clone();
        Arc::new(Complex::new(ctx, 0, vec![a.clone(), a], vec![x]).unwrap())
    }

    #[test]
    fn koszul_factor_homology() {
        let c = koszul(5);
        let h = Homology::compute(&c).unwrap();
        assert_eq!(h.dims(), homology_dims(&c).unwrap());
        assert_eq!(h.dim(0), 1);
        assert_eq!(h.dim(1), 1);
        // H_1 is the socle, spanned by X^{p-1}
        let rep = h.get(1).unwrap().reps.column(0);
        assert_eq!(rep.entries.len(), 1);
        assert_eq!(rep.entries[0].0, 4);
    }

    #[test]
    fn coordinates_reject_non_cycles() {
        let c = koszul(3);
        let h = Homology::compute(&c).unwrap();
        let f = c.ctx().field();
        let v = SparseMatrix::from_triplets(3, 1, f, vec![(0, 0, 1)]).unwrap();
        assert!(h.get(1).unwrap().coordinates(&v).is_err());
    }

    #[test]
    fn identity_is_quasi_iso_and_zero_is_not() {
        let c = koszul(3);
        let h = Homology::compute(&c).unwrap();
        let id = ChainMap::identity(c.clone());
        assert!(is_quasi_iso(&id, &h, &h).unwrap());
        let z = ChainMap::zero(c.clone(), c.clone(), 0);
        assert!(!is_quasi_iso(&z, &h, &h).unwrap());
    }

    #[test]
    fn cone_of_zero_and_identity() {
        let c = koszul(3);
        let h = Homology::compute(&c).unwrap();
        let id = ChainMap::identity(c.clone());
        let cone = Complex::cone(&id).unwrap();
        assert_eq!(homology_dims(&cone).unwrap().values().sum::<usize>(), 0);
        let pred = cone_homology_dims(&h.dims(), &induced_map(&id, &h, &h).unwrap(), 0);
        assert_eq!(pred, homology_dims(&cone).unwrap());
        let z = ChainMap::zero(c.clone(), c.clone(), 0);
        let cone = Complex::cone(&z).unwrap();
        let pred = cone_homology_dims(&h.dims(), &induced_map(&z, &h, &h).unwrap(), 0);
        assert_eq!(pred, homology_dims(&cone).unwrap());
        assert_eq!(pred.values().sum::<usize>(), 4);
    }
}
