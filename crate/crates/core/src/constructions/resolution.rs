use std::sync::Arc;

use crate::chaincx::{Complex, Summand, TensorComplex};
use crate::error::{Error, Result};
use crate::gfp::{self, SparseMatrix};
use crate::modrep::{GModule, GroupAlgebraContext};

/// Minimal free resolution `P_N -> .. -> P_0 -> k` of the trivial module,
/// built as the tensor product of the period-2 resolutions
/// `.. -X^{p-1}-> A_i -X-> A_i -> k` truncated at degree `N`.
///
/// The free generators of `P_m` are indexed by multidegrees `a` with
/// `|a| = m`; the generator of multidegree `a` sits at the start of its summand.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    ctx: GroupAlgebraContext,
    length: i32,
    tensor: TensorComplex,
    augmentation: SparseMatrix,
}

/// Period-2 resolution of `k` over `A_i`, degrees `0..=len`.
fn cyclic_resolution(ctx: GroupAlgebraContext, i: usize, len: i32) -> Result<Arc<Complex>> {
    let a = Arc::new(GModule::cyclic_factor(ctx, i)?);
    let x = a.action(i).clone();
    let xp = x.pow(ctx.p() - 1)?;
    let terms = vec![a; len as usize + 1];
    let diffs = (1..=len).map(|m| if m % 2 == 1 { x.clone() } else { xp.clone() }).collect();
    Ok(Arc::new(Complex::new(ctx, 0, terms, diffs)?))
}

pub fn minimal_resolution(ctx: GroupAlgebraContext, length: i32) -> Result<MinimalResolution> {
    if length < 1 {
        return Err(Error::InvalidConfig(format!("resolution length must be >= 1, got {length}")));
    }
    let factors = (0..ctx.r())
        .map(|i| cyclic_resolution(ctx, i, length))
        .collect::<Result<Vec<_>>>()?;
    let tensor = TensorComplex::build(factors, Some(length))?;
    let f = ctx.field();
    let augmentation = SparseMatrix::from_triplets(1, ctx.order(), f, vec![(0, 0, 1)])?;
    let res = MinimalResolution {
        ctx,
        length,
        tensor,
        augmentation,
    };
    if !res.augmentation.mul(res.d(1))?.is_zero() {
        return Err(Error::invariant("augmentation does not vanish on d_1"));
    }
    Ok(res)
}

impl MinimalResolution {
    pub fn ctx(&self) -> &GroupAlgebraContext {
        &self.ctx
    }

    pub fn length(&self) -> i32 {
        self.length
    }

    pub fn complex(&self) -> &Arc<Complex> {
        self.tensor.complex()
    }

    pub fn term(&self, m: i32) -> &Arc<GModule> {
        self.complex().term(m).expect("degree within the resolution")
    }

    /// `d_m: P_m -> P_{m-1}`, `1 <= m <= N`.
    pub fn d(&self, m: i32) -> &SparseMatrix {
        self.complex().d(m).expect("degree within the resolution")
    }

    pub fn augmentation(&self) -> &SparseMatrix {
        &self.augmentation
    }

    /// Free generators of `P_m` in basis order.
    pub fn generators(&self, m: i32) -> &[Summand] {
        self.tensor.layout().summands(m)
    }

    pub fn rank(&self, m: i32) -> usize {
        self.generators(m).len()
    }

    /// `ker ε = im d_1` and `ker d_m = im d_{m+1}` for `1 <= m < N`, by rank.
    pub fn check_exact(&self) -> Result<()> {
        let n = self.length;
        let ranks: Vec<usize> = (1..=n).map(|m| gfp::rank(self.d(m))).collect();
        if ranks[0] + 1 != self.term(0).dim() {
            return Err(Error::invariant("resolution is not exact at P_0"));
        }
        for m in 1..n {
            let (r_out, r_in) = (ranks[m as usize - 1], ranks[m as usize]);
            if r_out + r_in != self.term(m).dim() {
                return Err(Error::invariant(format!("resolution is not exact at P_{m}")));
            }
        }
        Ok(())
    }

    /// Every differential lands in the radical: no generator of `P_{m-1}` is
    /// hit with a unit coefficient.
    pub fn check_minimal(&self) -> Result<()> {
        for m in 1..=self.length {
            let d = self.d(m);
            for g in self.generators(m - 1) {
                if d.row(g.offset).0.iter().next().is_some() {
                    return Err(Error::invariant(format!("d_{m} has a unit entry")));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn ranks_and_exactness() {
        for (p, r) in [(3, 1), (3, 2), (2, 3), (3, 3)] {
            let ctx = GroupAlgebraContext::with_prime(p, r).unwrap();
            let res = minimal_resolution(ctx, 5).unwrap();
            for m in 0..=5 {
                assert_eq!(res.rank(m), binom(m as usize + r - 1, r - 1));
                assert!(res.term(m).is_free());
            }
            res.check_exact().unwrap();
            res.check_minimal().unwrap();
        }
    }

    #[test]
    fn cyclic_differentials_alternate() {
        let ctx = GroupAlgebraContext::with_prime(3, 1).unwrap();
        let res = minimal_resolution(ctx, 4).unwrap();
        let x = res.term(0).action(0).clone();
        assert_eq!(res.d(1), &x);
        assert_eq!(res.d(2), &x.pow(2).unwrap());
        assert_eq!(res.d(3), &x);
    }
}
