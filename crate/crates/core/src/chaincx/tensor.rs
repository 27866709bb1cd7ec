use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::{ChainMap, Complex};
use crate::error::{Error, Result};
use crate::gfp::{FieldPrime, SparseMatrix};
use crate::modrep::GModule;

/// One summand `F1_{a_1} ⊗ ... ⊗ Fr_{a_r}` of a tensor complex term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub multidegree: Vec<i32>,
    pub offset: usize,
    pub dim: usize,
}

/// Where each multidegree lives inside the terms of an r-fold tensor complex.
///
/// Summands of a total degree are ordered exactly as the left-nested binary
/// tensor `((F1 ⊗ F2) ⊗ ...) ⊗ Fr` orders them, so an r-fold build and an
/// iterated binary build give identical matrices.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    /// `(lo, hi, dims)` of each factor; `dims[j]` is the dimension in degree `lo + j`.
    factors: Vec<(i32, i32, Vec<usize>)>,
    degrees: BTreeMap<i32, Vec<Summand>>,
    index: HashMap<Vec<i32>, (i32, usize)>,
}

/// Multidegrees with entries in the given ranges summing to `n`, in
/// left-nested order: by partial sums `s_{r-1}`, then `s_{r-2}`, and so on.
pub fn nested_multidegrees(ranges: &[(i32, i32)], n: i32) -> Vec<Vec<i32>> {
    match ranges.len() {
        0 => Vec::new(),
        1 => {
            let (lo, hi) = ranges[0];
            if lo <= n && n <= hi {
                vec![vec![n]]
            } else {
                Vec::new()
            }
        }
        r => {
            let (last_lo, last_hi) = ranges[r - 1];
            let prefix = &ranges[..r - 1];
            let pre_lo: i32 = prefix.iter().map(|x| x.0).sum();
            let pre_hi: i32 = prefix.iter().map(|x| x.1).sum();
            let mut out = Vec::new();
            for s in pre_lo.max(n - last_hi)..=pre_hi.min(n - last_lo) {
                for mut a in nested_multidegrees(prefix, s) {
                    a.push(n - s);
                    out.push(a);
                }
            }
            out
        }
    }
}

impl TensorLayout {
    pub fn new(factors: &[Arc<Complex>], max_degree: Option<i32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::dims("TensorLayout", "no factors"));
        }
        let info: Vec<(i32, i32, Vec<usize>)> = factors
            .iter()
            .map(|c| (c.lo(), c.hi(), c.degrees().map(|i| c.dim(i)).collect()))
            .collect();
        Ok(Self::from_info(info, max_degree))
    }

    fn from_info(factors: Vec<(i32, i32, Vec<usize>)>, max_degree: Option<i32>) -> Self {
        let ranges: Vec<(i32, i32)> = factors.iter().map(|f| (f.0, f.1)).collect();
        let lo: i32 = ranges.iter().map(|x| x.0).sum();
        let mut hi: i32 = ranges.iter().map(|x| x.1).sum();
        if let Some(m) = max_degree {
            hi = hi.min(m);
        }
        let mut degrees = BTreeMap::new();
        let mut index = HashMap::new();
        for n in lo..=hi {
            let mut offset = 0;
            let mut list = Vec::new();
            for a in nested_multidegrees(&ranges, n) {
                let dim = a
                    .iter()
                    .zip(&factors)
                    .map(|(&ak, f)| f.2[(ak - f.0) as usize])
                    .product();
                index.insert(a.clone(), (n, list.len()));
                list.push(Summand {
                    multidegree: a,
                    offset,
                    dim,
                });
                offset += dim;
            }
            degrees.insert(n, list);
        }
        TensorLayout {
            factors,
            degrees,
            index,
        }
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn lo(&self) -> i32 {
        *self.degrees.keys().next().expect("non-empty")
    }

    pub fn hi(&self) -> i32 {
        *self.degrees.keys().next_back().expect("non-empty")
    }

    pub fn summands(&self, n: i32) -> &[Summand] {
        self.degrees.get(&n).map_or(&[], |v| v.as_slice())
    }

    pub fn find(&self, multidegree: &[i32]) -> Option<&Summand> {
        let (n, k) = self.index.get(multidegree)?;
        Some(&self.degrees[n][*k])
    }

    pub fn dim(&self, n: i32) -> usize {
        self.summands(n).iter().map(|s| s.dim).sum()
    }

    fn factor_dim(&self, k: usize, deg: i32) -> usize {
        let (lo, hi, dims) = &self.factors[k];
        if deg < *lo || deg > *hi {
            0
        } else {
            dims[(deg - lo) as usize]
        }
    }

    /// Product of factor dimensions strictly left and strictly right of `k`.
    fn outer_dims(&self, a: &[i32], k: usize) -> (usize, usize) {
        let left = (0..k).map(|j| self.factor_dim(j, a[j])).product();
        let right = (k + 1..a.len()).map(|j| self.factor_dim(j, a[j])).product();
        (left, right)
    }
}

/// Triplets of `sign * (I_left ⊗ m ⊗ I_right)` shifted by `(r0, c0)`.
fn push_lifted(
    out: &mut Vec<(usize, usize, u32)>,
    left: usize,
    m: &SparseMatrix,
    right: usize,
    r0: usize,
    c0: usize,
    sign: u32,
) {
    let f = m.field();
    let (mr, mc) = m.shape();
    for l in 0..left {
        for (i, j, v) in m.triplets() {
            let v = f.mul(v, sign);
            let row = r0 + (l * mr + i) * right;
            let col = c0 + (l * mc + j) * right;
            for q in 0..right {
                out.push((row + q, col + q, v));
            }
        }
    }
}

fn sign_value(f: FieldPrime, odd: bool) -> u32 {
    if odd {
        f.neg(1)
    } else {
        1
    }
}

/// An r-fold tensor product of complexes together with its summand layout.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    factors: Vec<Arc<Complex>>,
    layout: TensorLayout,
    complex: Arc<Complex>,
}

impl TensorComplex {
    /// `F1 ⊗ ... ⊗ Fr`, optionally truncated to degrees `<= max_degree`.
    /// The differential on a summand is `sum_k (-1)^{a_1+..+a_{k-1}} 1⊗..⊗d⊗..⊗1`.
    pub fn build(factors: Vec<Arc<Complex>>, max_degree: Option<i32>) -> Result<Self> {
        let layout = TensorLayout::new(&factors, max_degree)?;
        let ctx = *factors[0].ctx();
        for c in &factors {
            if c.ctx() != &ctx {
                return Err(Error::ContextMismatch("tensor factors over different algebras".into()));
            }
        }
        let f = ctx.field();
        let mut cache: HashMap<Vec<usize>, Arc<GModule>> = HashMap::new();
        let mut terms = Vec::new();
        for n in layout.lo()..=layout.hi() {
            let mut mods = Vec::new();
            for s in layout.summands(n) {
                let parts: Vec<&Arc<GModule>> = s
                    .multidegree
                    .iter()
                    .zip(&factors)
                    .map(|(&a, c)| c.term(a).expect("in support"))
                    .collect();
                let key: Vec<usize> = parts.iter().map(|m| Arc::as_ptr(m) as usize).collect();
                let m = match cache.get(&key) {
                    Some(m) => m.clone(),
                    None => {
                        let refs: Vec<&GModule> = parts.iter().map(|m| m.as_ref()).collect();
                        let m = Arc::new(GModule::tensor_all(&refs)?);
                        cache.insert(key, m.clone());
                        m
                    }
                };
                mods.push(m);
            }
            let term = match mods.len() {
                0 => Arc::new(GModule::trivial_sum(ctx, 0)),
                1 => mods.pop().unwrap(),
                _ => {
                    let refs: Vec<&GModule> = mods.iter().map(|m| m.as_ref()).collect();
                    Arc::new(GModule::direct_sum(&refs)?)
                }
            };
            terms.push(term);
        }
        let mut diffs = Vec::new();
        for n in layout.lo() + 1..=layout.hi() {
            let mut trip = Vec::new();
            for s in layout.summands(n) {
                let a = &s.multidegree;
                let mut prefix = 0i32;
                for (k, c) in factors.iter().enumerate() {
                    if let Some(d) = c.d(a[k]) {
                        let mut b = a.clone();
                        b[k] -= 1;
                        let t = layout.find(&b).expect("lower summand present");
                        let (left, right) = layout.outer_dims(a, k);
                        let sign = sign_value(f, prefix.rem_euclid(2) == 1);
                        push_lifted(&mut trip, left, d, right, t.offset, s.offset, sign);
                    }
                    prefix += a[k];
                }
            }
            diffs.push(SparseMatrix::from_triplets(layout.dim(n - 1), layout.dim(n), f, trip)?);
        }
        let complex = Arc::new(Complex::from_parts(ctx, layout.lo(), terms, diffs)?);
        Ok(TensorComplex {
            factors,
            layout,
            complex,
        })
    }

    pub fn factors(&self) -> &[Arc<Complex>] {
        &self.factors
    }

    pub fn layout(&self) -> &TensorLayout {
        &self.layout
    }

    pub fn complex(&self) -> &Arc<Complex> {
        &self.complex
    }

    pub fn into_complex(self) -> Complex {
        Arc::try_unwrap(self.complex).unwrap_or_else(|c| (*c).clone())
    }

    /// `1 ⊗ .. ⊗ g ⊗ .. ⊗ 1` with `g` an endomorphism of factor `k` of degree `m`,
    /// carrying the Koszul sign `(-1)^{m (a_1 + .. + a_{k-1})}`.
    pub fn lift_factor_map(&self, k: usize, g: &ChainMap) -> Result<ChainMap> {
        if k >= self.factors.len() {
            return Err(Error::InvalidConfig(format!("factor index {k} out of range")));
        }
        if !Arc::ptr_eq(g.source(), &self.factors[k]) || !Arc::ptr_eq(g.target(), &self.factors[k]) {
            return Err(Error::InvalidConfig(
                "lifted map must be an endomorphism of the given factor".into(),
            ));
        }
        let f = self.complex.ctx().field();
        let m = g.degree();
        let mut comps = BTreeMap::new();
        for n in self.layout.lo()..=self.layout.hi() {
            if self.complex.term(n + m).is_none() {
                continue;
            }
            let mut trip = Vec::new();
            for s in self.layout.summands(n) {
                let a = &s.multidegree;
                let Some(gk) = g.component(a[k]) else { continue };
                let mut b = a.clone();
                b[k] += m;
                let Some(t) = self.layout.find(&b) else { continue };
                let prefix: i32 = a[..k].iter().sum();
                let (left, right) = self.layout.outer_dims(a, k);
                let sign = sign_value(f, (m * prefix).rem_euclid(2) == 1);
                push_lifted(&mut trip, left, gk, right, t.offset, s.offset, sign);
            }
            if !trip.is_empty() {
                comps.insert(
                    n,
                    SparseMatrix::from_triplets(self.layout.dim(n + m), self.layout.dim(n), f, trip)?,
                );
            }
        }
        ChainMap::from_parts(self.complex.clone(), self.complex.clone(), m, comps)
    }

    /// `f_1 ⊗ ... ⊗ f_r` for degree-0 chain maps `f_k: self.factors[k] -> target.factors[k]`.
    pub fn tensor_maps(&self, target: &TensorComplex, maps: &[ChainMap]) -> Result<ChainMap> {
        if maps.len() != self.factors.len() || target.factors.len() != maps.len() {
            return Err(Error::dims("tensor_maps", "one map per factor"));
        }
        for (k, g) in maps.iter().enumerate() {
            if g.degree() != 0
                || !Arc::ptr_eq(g.source(), &self.factors[k])
                || !Arc::ptr_eq(g.target(), &target.factors[k])
            {
                return Err(Error::InvalidConfig(format!(
                    "map {k} must be a degree-0 map between the matching factors"
                )));
            }
        }
        let f = self.complex.ctx().field();
        let mut comps = BTreeMap::new();
        for n in self.layout.lo()..=self.layout.hi() {
            if target.complex.term(n).is_none() {
                continue;
            }
            let mut acc = SparseMatrix::zero(target.layout.dim(n), self.layout.dim(n), f);
            for s in self.layout.summands(n) {
                let Some(t) = target.layout.find(&s.multidegree) else { continue };
                let mut block: Option<SparseMatrix> = None;
                let mut zero = false;
                for (k, g) in maps.iter().enumerate() {
                    let a = s.multidegree[k];
                    let Some(c) = g.component(a) else {
                        zero = true;
                        break;
                    };
                    block = Some(match block {
                        None => c.clone(),
                        Some(b) => b.kron(c)?,
                    });
                }
                if zero {
                    continue;
                }
                let block = block.expect("at least one factor");
                acc = acc.add(&block.embed(acc.rows(), acc.cols(), t.offset, s.offset))?;
            }
            comps.insert(n, acc);
        }
        ChainMap::from_parts(self.complex.clone(), target.complex.clone(), 0, comps)
    }
}
