use std::collections::{BTreeMap, HashMap};

use super::tensor::{nested_multidegrees, TensorLayout};
use super::{Homology, TensorComplex};
use crate::error::{Error, Result};
use crate::gfp::{DenseMatrix, FieldPrime, SparseMatrix, SparseVector};

/// Homology of a tensor product over a field, assembled from the factors:
/// `H(F1 ⊗ .. ⊗ Fr) = H(F1) ⊗ .. ⊗ H(Fr)`.
///
/// A basis element is a tuple `(degree_k, index_k)` naming one basis class of
/// each factor. Tuples of a total degree are ordered by multidegree in the
/// tensor layout order, then lexicographically with the first factor slowest.
#[derive(Clone, Debug)]
pub struct Kunneth {
    field: FieldPrime,
    factors: Vec<Homology>,
    basis: BTreeMap<i32, Vec<Vec<(i32, usize)>>>,
    index: HashMap<Vec<(i32, usize)>, usize>,
}

impl Kunneth {
    pub fn new(factors: Vec<Homology>) -> Result<Self> {
        let first = factors
            .first()
            .ok_or_else(|| Error::dims("Kunneth", "no factors"))?;
        let field = first.field();
        let ranges: Vec<(i32, i32)> = factors
            .iter()
            .map(|h| {
                let d = h.dims();
                (*d.keys().next().unwrap_or(&0), *d.keys().next_back().unwrap_or(&0))
            })
            .collect();
        let lo: i32 = ranges.iter().map(|r| r.0).sum();
        let hi: i32 = ranges.iter().map(|r| r.1).sum();
        let mut basis = BTreeMap::new();
        let mut index = HashMap::new();
        for n in lo..=hi {
            let mut list: Vec<Vec<(i32, usize)>> = Vec::new();
            for a in nested_multidegrees(&ranges, n) {
                let sizes: Vec<usize> = a.iter().zip(&factors).map(|(&ak, h)| h.dim(ak)).collect();
                if sizes.contains(&0) {
                    continue;
                }
                let mut counter = vec![0usize; a.len()];
                loop {
                    let t: Vec<(i32, usize)> = a.iter().copied().zip(counter.iter().copied()).collect();
                    index.insert(t.clone(), list.len());
                    list.push(t);
                    // odometer with the last factor fastest
                    let mut k = a.len();
                    loop {
                        if k == 0 {
                            break;
                        }
                        k -= 1;
                        counter[k] += 1;
                        if counter[k] < sizes[k] {
                            break;
                        }
                        counter[k] = 0;
                        if k == 0 {
                            k = usize::MAX;
                            break;
                        }
                    }
                    if k == usize::MAX {
                        break;
                    }
                }
            }
            basis.insert(n, list);
        }
        Ok(Kunneth {
            field,
            factors,
            basis,
            index,
        })
    }

    pub fn factors(&self) -> &[Homology] {
        &self.factors
    }

    pub fn dim(&self, n: i32) -> usize {
        self.basis.get(&n).map_or(0, |b| b.len())
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        self.basis.iter().map(|(&n, b)| (n, b.len())).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.basis.values().map(|b| b.len()).sum()
    }

    pub fn basis(&self, n: i32) -> &[Vec<(i32, usize)>] {
        self.basis.get(&n).map_or(&[], |b| b.as_slice())
    }

    /// Explicit cycles in the tensor complex laid out by `layout`, one column per
    /// basis class of degree `n`.
    pub fn representatives(&self, layout: &TensorLayout, n: i32) -> Result<SparseMatrix> {
        let dim = layout.dim(n);
        let cols = self
            .basis(n)
            .iter()
            .map(|t| {
                let a: Vec<i32> = t.iter().map(|x| x.0).collect();
                let s = layout
                    .find(&a)
                    .ok_or_else(|| Error::dims("Kunneth", format!("multidegree {a:?} not in layout")))?;
                let mut v: Option<SparseVector> = None;
                for (k, &(deg, idx)) in t.iter().enumerate() {
                    let rep = self.factors[k].get(deg).expect("nonzero degree").reps.column(idx);
                    v = Some(match v {
                        None => rep,
                        Some(acc) => acc.kron(self.field, &rep),
                    });
                }
                Ok(v.expect("factors").embed(dim, s.offset))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SparseMatrix::from_columns(dim, &cols, self.field))
    }

    /// Checks that every representative is a cycle of the assembled complex.
    pub fn verify_cycles(&self, t: &TensorComplex) -> Result<()> {
        let c = t.complex();
        for &n in self.basis.keys() {
            if self.dim(n) == 0 {
                continue;
            }
            let Some(d) = c.d(n) else { continue };
            if !d.mul(&self.representatives(t.layout(), n)?)?.is_zero() {
                return Err(Error::invariant(format!("Künneth representative in degree {n} is not a cycle")));
            }
        }
        Ok(())
    }

    /// Matrices of `H(1 ⊗ .. ⊗ g ⊗ .. ⊗ 1)` given `H(g)` on factor `k` (keyed by
    /// source degree) and the degree `m` of `g`. The Koszul sign is
    /// `(-1)^{m (d_1 + .. + d_{k-1})}`.
    pub fn induced_factor_map(
        &self,
        k: usize,
        hg: &BTreeMap<i32, DenseMatrix>,
        m: i32,
    ) -> Result<BTreeMap<i32, DenseMatrix>> {
        if k >= self.factors.len() {
            return Err(Error::InvalidConfig(format!("factor index {k} out of range")));
        }
        let f = self.field;
        let mut out = BTreeMap::new();
        for (&n, src) in &self.basis {
            let mut mat = DenseMatrix::zeros(self.dim(n + m), src.len(), f);
            for (col, t) in src.iter().enumerate() {
                let (deg, idx) = t[k];
                let Some(g) = hg.get(&deg) else { continue };
                let prefix: i32 = t[..k].iter().map(|x| x.0).sum();
                let sign = if (m * prefix).rem_euclid(2) == 1 { f.neg(1) } else { 1 };
                for j in 0..g.rows() {
                    let c = g.get(j, idx);
                    if c == 0 {
                        continue;
                    }
                    let mut u = t.clone();
                    u[k] = (deg + m, j);
                    let row = *self
                        .index
                        .get(&u)
                        .ok_or_else(|| Error::invariant("image class missing from the Künneth basis"))?;
                    let cur = mat.get(row, col);
                    mat.set(row, col, f.mul_add(cur, sign, c));
                }
            }
            out.insert(n, mat);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaincx::Complex;
    use crate::modrep::{GModule, GroupAlgebraContext};
    use std::sync::Arc;

    #[test]
    fn matches_direct_homology() {
        let ctx = GroupAlgebraContext::with_prime(3, 2).unwrap();
        let fs: Vec<Arc<Complex>> = (0..2)
            .map(|i| {
                let a = Arc::new(GModule::cyclic_factor(ctx, i).unwrap());
                let x = a.action(i).clone();
                Arc::new(Complex::new(ctx, 0, vec![a.clone(), a], vec![x]).unwrap())
            })
            .collect();
        let t = TensorComplex::build(fs.clone(), None).unwrap();
        let direct = Homology::compute(t.complex()).unwrap();
        let hs = fs.iter().map(|c| Homology::compute(c).unwrap()).collect();
        let k = Kunneth::new(hs).unwrap();
        k.verify_cycles(&t).unwrap();
        assert_eq!(k.dims(), direct.dims());
        for n in 0..=2 {
            let reps = k.representatives(t.layout(), n).unwrap();
            let coords = direct.get(n).unwrap().coordinates(&reps).unwrap();
            assert_eq!(coords.rank(), k.dim(n));
        }
    }
}
