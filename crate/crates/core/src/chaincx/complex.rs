use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gfp::SparseMatrix;
use crate::modrep::{GModule, GroupAlgebraContext, ModuleHom};

/// A bounded chain complex of `kE`-modules supported on `[lo, hi]`.
///
/// `d_i: C_i -> C_{i-1}` is stored for `lo < i <= hi`; every constructor
/// checks `d_{i-1} d_i = 0` exactly.
#[derive(Clone, Debug)]
pub struct Complex {
    ctx: GroupAlgebraContext,
    lo: i32,
    terms: Vec<Arc<GModule>>,
    diffs: Vec<SparseMatrix>,
}

impl Complex {
    /// `terms[k]` sits in degree `lo + k`; `diffs[k]` is `d_{lo+k+1}`.
    /// Checks shapes, `kE`-linearity of each differential and `d^2 = 0`.
    pub fn new(
        ctx: GroupAlgebraContext,
        lo: i32,
        terms: Vec<Arc<GModule>>,
        diffs: Vec<SparseMatrix>,
    ) -> Result<Self> {
        let c = Self::from_parts(ctx, lo, terms, diffs)?;
        for (k, d) in c.diffs.iter().enumerate() {
            let h = ModuleHom::new_unchecked(c.terms[k + 1].clone(), c.terms[k].clone(), d.clone())?;
            if !h.is_linear() {
                return Err(Error::invariant(format!(
                    "differential d_{} is not kE-linear",
                    lo + k as i32 + 1
                )));
            }
        }
        Ok(c)
    }

    /// Checks shapes and `d^2 = 0`; linearity is the caller's responsibility.
    pub(crate) fn from_parts(
        ctx: GroupAlgebraContext,
        lo: i32,
        terms: Vec<Arc<GModule>>,
        diffs: Vec<SparseMatrix>,
    ) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::dims("Complex", "a complex needs at least one term"));
        }
        if diffs.len() + 1 != terms.len() {
            return Err(Error::dims(
                "Complex",
                format!("{} terms need {} differentials", terms.len(), terms.len() - 1),
            ));
        }
        for t in &terms {
            if t.ctx() != &ctx {
                return Err(Error::ContextMismatch("term over a different group algebra".into()));
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.shape() != (terms[k].dim(), terms[k + 1].dim()) {
                return Err(Error::dims(
                    "Complex",
                    format!(
                        "d_{} has shape {:?}, expected {:?}",
                        lo + k as i32 + 1,
                        d.shape(),
                        (terms[k].dim(), terms[k + 1].dim())
                    ),
                ));
            }
        }
        let c = Complex {
            ctx,
            lo,
            terms,
            diffs,
        };
        c.check_d_squared()?;
        Ok(c)
    }

    pub fn check_d_squared(&self) -> Result<()> {
        for k in 1..self.diffs.len() {
            if !self.diffs[k - 1].mul(&self.diffs[k])?.is_zero() {
                return Err(Error::invariant(format!(
                    "d_{} d_{} != 0",
                    self.lo + k as i32,
                    self.lo + k as i32 + 1
                )));
            }
        }
        Ok(())
    }

    /// A single module in degree `deg`.
    pub fn concentrated(m: Arc<GModule>, deg: i32) -> Self {
        Complex {
            ctx: *m.ctx(),
            lo: deg,
            terms: vec![m],
            diffs: Vec::new(),
        }
    }

    pub fn ctx(&self) -> &GroupAlgebraContext {
        &self.ctx
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.lo + self.terms.len() as i32 - 1
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i32> {
        self.lo..=self.hi()
    }

    pub fn term(&self, i: i32) -> Option<&Arc<GModule>> {
        if i < self.lo || i > self.hi() {
            return None;
        }
        Some(&self.terms[(i - self.lo) as usize])
    }

    pub fn dim(&self, i: i32) -> usize {
        self.term(i).map_or(0, |m| m.dim())
    }

    /// `d_i`, or `None` when either end lies outside the support.
    pub fn d(&self, i: i32) -> Option<&SparseMatrix> {
        if i <= self.lo || i > self.hi() {
            return None;
        }
        Some(&self.diffs[(i - self.lo - 1) as usize])
    }

    /// `d_i` as a matrix of shape `dim(i-1) x dim(i)`, zero outside the support.
    pub fn d_or_zero(&self, i: i32) -> SparseMatrix {
        self.d(i)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.dim(i - 1), self.dim(i), self.ctx.field()))
    }

    pub fn terms(&self) -> &[Arc<GModule>] {
        &self.terms
    }

    pub fn dims(&self) -> Vec<(i32, usize)> {
        self.degrees().map(|i| (i, self.dim(i))).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees()
            .map(|i| if i.rem_euclid(2) == 0 { 1 } else { -1 } * self.dim(i) as i64)
            .sum()
    }

    /// True if every term passes the freeness test.
    pub fn terms_free(&self) -> bool {
        self.terms.iter().all(|t| t.is_free())
    }

    /// Binary tensor product over `k` with the diagonal action:
    /// `(A ⊗ B)_n = ⊕_{i+j=n} A_i ⊗ B_j` (ascending `i`) and
    /// `d(x ⊗ y) = dx ⊗ y + (-1)^{|x|} x ⊗ dy`.
    pub fn tensor(a: &Arc<Complex>, b: &Arc<Complex>) -> Result<Complex> {
        Ok(super::TensorComplex::build(vec![a.clone(), b.clone()], None)?.into_complex())
    }

    /// Mapping cone of an even-degree endomorphism `f` of degree `m`:
    /// `D_i = C_{i-m-1} ⊕ C_i`, `d(x, y) = (-dx, f(x) + dy)`.
    pub fn cone(f: &super::ChainMap) -> Result<Complex> {
        let c = f.source();
        if !Arc::ptr_eq(f.source(), f.target()) {
            return Err(Error::InvalidConfig("cone expects an endomorphism of one complex".into()));
        }
        let m = f.degree();
        if m < 0 || m % 2 != 0 {
            return Err(Error::InvalidConfig(format!(
                "cone is defined here only for even non-negative degree, got {m}"
            )));
        }
        let fld = c.ctx.field();
        let shift = m + 1;
        let lo = c.lo;
        let hi = c.hi() + shift;
        let mut terms = Vec::new();
        for i in lo..=hi {
            let x = c.term(i - shift);
            let y = c.term(i);
            let t = match (x, y) {
                (Some(x), Some(y)) => Arc::new(GModule::direct_sum(&[x.as_ref(), y.as_ref()])?),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => Arc::new(GModule::trivial_sum(c.ctx, 0)),
            };
            terms.push(t);
        }
        let mut diffs = Vec::new();
        for i in lo + 1..=hi {
            // D_i = X ⊕ Y -> D_{i-1} = X' ⊕ Y'
            let (xd, yd) = (c.dim(i - shift), c.dim(i));
            let (xd1, yd1) = (c.dim(i - 1 - shift), c.dim(i - 1));
            let rows = xd1 + yd1;
            let cols = xd + yd;
            let mut parts = Vec::new();
            if let Some(dx) = c.d(i - shift) {
                parts.push(dx.neg().embed(rows, cols, 0, 0));
            }
            if let Some(fx) = f.component(i - shift) {
                parts.push(fx.embed(rows, cols, xd1, 0));
            }
            if let Some(dy) = c.d(i) {
                parts.push(dy.embed(rows, cols, xd1, xd));
            }
            let mut acc = SparseMatrix::zero(rows, cols, fld);
            for p in parts {
                acc = acc.add(&p)?;
            }
            diffs.push(acc);
        }
        Complex::from_parts(c.ctx, lo, terms, diffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::cyclic_regular;

    #[test]
    fn rejects_nonzero_square() {
        let ctx = GroupAlgebraContext::with_prime(3, 1).unwrap();
        let a = Arc::new(GModule::free(ctx, 1));
        let x = a.action(0).clone();
        // A --X--> A --X--> A is not a complex for p = 3 ... X^2 != 0
        let err = Complex::new(ctx, 0, vec![a.clone(), a.clone(), a.clone()], vec![x.clone(), x.clone()]);
        assert!(err.is_err());
        // X^2 then X is a complex
        let x2 = x.mul(&x).unwrap();
        let ok = Complex::new(ctx, 0, vec![a.clone(), a.clone(), a.clone()], vec![x.clone(), x2]);
        assert!(ok.is_ok());
        assert_eq!(cyclic_regular(ctx.field()), x);
    }

    #[test]
    fn rejects_nonlinear_differential() {
        let ctx = GroupAlgebraContext::with_prime(3, 1).unwrap();
        let a = Arc::new(GModule::free(ctx, 1));
        let e = SparseMatrix::from_triplets(3, 3, ctx.field(), vec![(0, 0, 1)]).unwrap();
        assert!(Complex::new(ctx, 0, vec![a.clone(), a.clone()], vec![e]).is_err());
    }
}
