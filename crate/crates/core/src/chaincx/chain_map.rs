use std::collections::BTreeMap;
use std::sync::Arc;

use super::Complex;
use crate::error::{Error, Result};
use crate::gfp::SparseMatrix;
use crate::modrep::ModuleHom;

/// A graded map `f: C -> D` of degree `m`, components `f_i: C_i -> D_{i+m}`.
///
/// Sign convention: `d f = (-1)^m f d`. Components absent from the map are zero.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: Arc<Complex>,
    target: Arc<Complex>,
    degree: i32,
    components: BTreeMap<i32, SparseMatrix>,
}

impl ChainMap {
    /// Checks shapes, `kE`-linearity of every component and graded commutation.
    pub fn new(
        source: Arc<Complex>,
        target: Arc<Complex>,
        degree: i32,
        components: BTreeMap<i32, SparseMatrix>,
    ) -> Result<Self> {
        let f = Self::from_parts(source, target, degree, components)?;
        for (&i, c) in &f.components {
            let h = ModuleHom::new_unchecked(
                f.source.term(i).unwrap().clone(),
                f.target.term(i + degree).unwrap().clone(),
                c.clone(),
            )?;
            if !h.is_linear() {
                return Err(Error::invariant(format!("component f_{i} is not kE-linear")));
            }
        }
        Ok(f)
    }

    /// Checks shapes and graded commutation; linearity is the caller's responsibility.
    pub(crate) fn from_parts(
        source: Arc<Complex>,
        target: Arc<Complex>,
        degree: i32,
        components: BTreeMap<i32, SparseMatrix>,
    ) -> Result<Self> {
        if source.ctx() != target.ctx() {
            return Err(Error::ContextMismatch("chain map between different algebras".into()));
        }
        let mut kept = BTreeMap::new();
        for (i, c) in components {
            let expect = (target.dim(i + degree), source.dim(i));
            if c.shape() != expect {
                return Err(Error::dims(
                    "ChainMap",
                    format!("f_{i} has shape {:?}, expected {expect:?}", c.shape()),
                ));
            }
            if source.term(i).is_none() || target.term(i + degree).is_none() {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::dims("ChainMap", format!("f_{i} lies outside the support")));
            }
            if !c.is_zero() {
                kept.insert(i, c);
            }
        }
        let f = ChainMap {
            source,
            target,
            degree,
            components: kept,
        };
        f.check_commutes()?;
        Ok(f)
    }

    pub fn zero(source: Arc<Complex>, target: Arc<Complex>, degree: i32) -> Self {
        ChainMap {
            source,
            target,
            degree,
            components: BTreeMap::new(),
        }
    }

    pub fn identity(c: Arc<Complex>) -> Self {
        let f = c.ctx().field();
        let components = c
            .degrees()
            .filter(|&i| c.dim(i) > 0)
            .map(|i| (i, SparseMatrix::identity(c.dim(i), f)))
            .collect();
        ChainMap {
            source: c.clone(),
            target: c,
            degree: 0,
            components,
        }
    }

    /// `d^D_{i+m} f_i = (-1)^m f_{i-1} d^C_i` for every `i`.
    pub fn check_commutes(&self) -> Result<()> {
        let fld = self.source.ctx().field();
        let m = self.degree;
        let sign = if m.rem_euclid(2) == 1 { fld.neg(1) } else { 1 };
        for i in self.source.degrees() {
            let rows = self.target.dim(i + m - 1);
            let cols = self.source.dim(i);
            let lhs = match (self.target.d(i + m), self.components.get(&i)) {
                (Some(d), Some(fi)) => d.mul(fi)?,
                _ => SparseMatrix::zero(rows, cols, fld),
            };
            let rhs = match (self.components.get(&(i - 1)), self.source.d(i)) {
                (Some(fi), Some(d)) => fi.mul(d)?.scale(sign),
                _ => SparseMatrix::zero(rows, cols, fld),
            };
            if lhs != rhs {
                return Err(Error::invariant(format!(
                    "chain map of degree {m} fails graded commutation at degree {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<Complex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Complex> {
        &self.target
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn component(&self, i: i32) -> Option<&SparseMatrix> {
        self.components.get(&i)
    }

    /// `f_i` with the zero matrix filled in.
    pub fn component_or_zero(&self, i: i32) -> SparseMatrix {
        self.components.get(&i).cloned().unwrap_or_else(|| {
            SparseMatrix::zero(
                self.target.dim(i + self.degree),
                self.source.dim(i),
                self.source.ctx().field(),
            )
        })
    }

    pub fn components(&self) -> &BTreeMap<i32, SparseMatrix> {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ChainMap) -> Result<ChainMap> {
        if !Arc::ptr_eq(&other.target, &self.source) {
            return Err(Error::InvalidConfig("compose: target of the right map is not the source of the left".into()));
        }
        let mut comps = BTreeMap::new();
        for (&i, g) in &other.components {
            if let Some(f) = self.components.get(&(i + other.degree)) {
                comps.insert(i, f.mul(g)?);
            }
        }
        ChainMap::from_parts(
            other.source.clone(),
            self.target.clone(),
            self.degree + other.degree,
            comps,
        )
    }

    fn same_shape(&self, other: &ChainMap) -> Result<()> {
        if !Arc::ptr_eq(&self.source, &other.source)
            || !Arc::ptr_eq(&self.target, &other.target)
            || self.degree != other.degree
        {
            return Err(Error::InvalidConfig("maps differ in source, target or degree".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ChainMap) -> Result<ChainMap> {
        self.same_shape(other)?;
        let mut comps = self.components.clone();
        for (&i, g) in &other.components {
            let v = match comps.remove(&i) {
                Some(f) => f.add(g)?,
                None => g.clone(),
            };
            comps.insert(i, v);
        }
        ChainMap::from_parts(self.source.clone(), self.target.clone(), self.degree, comps)
    }

    pub fn scale(&self, c: u32) -> ChainMap {
        let components = self
            .components
            .iter()
            .map(|(&i, f)| (i, f.scale(c)))
            .filter(|(_, f)| !f.is_zero())
            .collect();
        ChainMap {
            source: self.source.clone(),
            target: self.target.clone(),
            degree: self.degree,
            components,
        }
    }

    /// True if every component commutes with the `kE`-action.
    pub fn is_linear(&self) -> bool {
        self.components.iter().all(|(&i, c)| {
            let s = self.source.term(i).unwrap();
            let t = self.target.term(i + self.degree).unwrap();
            s.actions()
                .iter()
                .zip(t.actions())
                .all(|(xs, xt)| xt.mul(c).ok() == c.mul(xs).ok())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{GModule, GroupAlgebraContext};

    fn koszul(p: u32) -> Arc<Complex> {
        let ctx = GroupAlgebraContext::with_prime(p, 1).unwrap();
        let a = Arc::new(GModule::cyclic_factor(ctx, 0).unwrap());
        let x = a.action(0).clone();
        Arc::new(Complex::new(ctx, 0, vec![a.clone(), a], vec![x]).unwrap())
    }

    #[test]
    fn identity_and_scaling() {
        let c = koszul(5);
        let id = ChainMap::identity(c.clone());
        assert!(id.check_commutes().is_ok());
        let two = id.add(&id).unwrap();
        assert_eq!(two.component(0), id.scale(2).component(0));
        assert!(id.scale(5).is_zero());
        let comp = two.compose(&two).unwrap();
        assert_eq!(comp.component(1), id.scale(4).component(1));
    }

    #[test]
    fn rejects_noncommuting() {
        let c = koszul(3);
        let f = c.ctx().field();
        let mut comps = BTreeMap::new();
        comps.insert(0, SparseMatrix::identity(3, f));
        assert!(ChainMap::new(c.clone(), c.clone(), 0, comps).is_err());
    }

    #[test]
    fn degree_one_maps() {
        // 1 -> X^{p-1} from C_0 to C_1 commutes: d u = X^p = 0 and u d = X^p = 0
        let c = koszul(3);
        let f = c.ctx().field();
        let u = c.term(0).unwrap().action(0).pow(2).unwrap();
        let mut comps = BTreeMap::new();
        comps.insert(0, u);
        assert!(ChainMap::new(c.clone(), c.clone(), 1, comps).is_ok());
        let mut comps = BTreeMap::new();
        comps.insert(0, SparseMatrix::identity(3, f));
        assert!(ChainMap::new(c.clone(), c, 1, comps).is_err());
    }
}
