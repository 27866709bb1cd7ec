//! Finite-dimensional modules over `kE = k[X_1..X_r]/(X_i^p)`, the group
//! algebra of an elementary abelian p-group with `X_i = g_i - 1`.
//!
//! A module is a vector space with `r` commuting nilpotent action matrices.
//! Indices `i` of the generators `X_i` are 0-based throughout the API.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gfp::{self, FieldPrime, IncrementalBasis, SparseMatrix, SparseVector};

/// Above this dimension `is_free` trusts Nakayama instead of building the cover map.
const COVER_CHECK_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupAlgebraContext {
    field: FieldPrime,
    r: usize,
    order: usize,
}

impl GroupAlgebraContext {
    pub fn new(field: FieldPrime, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidConfig("rank r must be at least 1".into()));
        }
        let order = (field.p() as usize)
            .checked_pow(r as u32)
            .filter(|&o| o <= u32::MAX as usize)
            .ok_or(Error::OrderOverflow { p: field.p(), r })?;
        Ok(GroupAlgebraContext { field, r, order })
    }

    pub fn with_prime(p: u32, r: usize) -> Result<Self> {
        Self::new(FieldPrime::new(p)?, r)
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `|E| = p^r`.
    pub fn order(&self) -> usize {
        self.order
    }

    fn check_same(&self, other: &GroupAlgebraContext) -> Result<()> {
        if self != other {
            return Err(Error::ContextMismatch(format!(
                "(p={}, r={}) vs (p={}, r={})",
                self.p(),
                self.r,
                other.p(),
                other.r
            )));
        }
        Ok(())
    }
}

/// The regular representation of `k[X]/(X^p)`: a nilpotent Jordan block of size `p`
/// on the basis `1, X, ..., X^{p-1}`.
pub fn cyclic_regular(field: FieldPrime) -> SparseMatrix {
    let p = field.p() as usize;
    SparseMatrix::from_triplets(p, p, field, (0..p - 1).map(|a| (a + 1, a, 1)).collect())
        .expect("in range")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    ctx: GroupAlgebraContext,
    dim: usize,
    actions: Vec<SparseMatrix>,
}

impl GModule {
    /// Checked constructor: actions must be square, commute pairwise and satisfy `X_i^p = 0`.
    pub fn new(ctx: GroupAlgebraContext, actions: Vec<SparseMatrix>) -> Result<Self> {
        let m = Self::from_actions(ctx, actions)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_actions(ctx: GroupAlgebraContext, actions: Vec<SparseMatrix>) -> Result<Self> {
        if actions.len() != ctx.r {
            return Err(Error::dims(
                "GModule",
                format!("{} actions for r = {}", actions.len(), ctx.r),
            ));
        }
        let dim = actions[0].rows();
        for x in &actions {
            if x.shape() != (dim, dim) {
                return Err(Error::dims("GModule", "action matrices must share one square shape"));
            }
            if x.field() != ctx.field {
                return Err(Error::FieldMismatch(x.field().p(), ctx.p()));
            }
        }
        Ok(GModule { ctx, dim, actions })
    }

    /// Exact check of `X_i X_j = X_j X_i` and `X_i^p = 0`.
    pub fn validate(&self) -> Result<()> {
        for (i, x) in self.actions.iter().enumerate() {
            if !x.pow(self.ctx.p())?.is_zero() {
                return Err(Error::invariant(format!("X_{} ^ p != 0", i + 1)));
            }
            for (j, y) in self.actions.iter().enumerate().skip(i + 1) {
                if x.mul(y)? != y.mul(x)? {
                    return Err(Error::invariant(format!(
                        "X_{} and X_{} do not commute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn ctx(&self) -> &GroupAlgebraContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldPrime {
        self.ctx.field
    }

    pub fn actions(&self) -> &[SparseMatrix] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> &SparseMatrix {
        &self.actions[i]
    }

    /// Free module of rank `s`. Basis ordered by (generator, exponent vector) with the
    /// exponent vector read lexicographically, `a_1` most significant.
    pub fn free(ctx: GroupAlgebraContext, s: usize) -> GModule {
        let f = ctx.field;
        let p = ctx.p() as usize;
        let order = ctx.order;
        let actions = (0..ctx.r)
            .map(|i| {
                let stride = p.pow((ctx.r - 1 - i) as u32);
                let mut t = Vec::with_capacity(s * order);
                for g in 0..s {
                    for m in 0..order {
                        let a_i = (m / stride) % p;
                        if a_i + 1 < p {
                            t.push((g * order + m + stride, g * order + m, 1));
                        }
                    }
                }
                SparseMatrix::from_triplets(s * order, s * order, f, t).expect("in range")
            })
            .collect();
        GModule {
            ctx,
            dim: s * order,
            actions,
        }
    }

    pub fn trivial(ctx: GroupAlgebraContext) -> GModule {
        GModule {
            ctx,
            dim: 1,
            actions: vec![SparseMatrix::zero(1, 1, ctx.field); ctx.r],
        }
    }

    /// Direct sum of copies of the trivial module.
    pub fn trivial_sum(ctx: GroupAlgebraContext, t: usize) -> GModule {
        GModule {
            ctx,
            dim: t,
            actions: vec![SparseMatrix::zero(t, t, ctx.field); ctx.r],
        }
    }

    /// Module on which `X_i` acts by `cyclic` and every other generator acts by zero.
    pub fn inflate_cyclic(ctx: GroupAlgebraContext, i: usize, cyclic: &SparseMatrix) -> Result<GModule> {
        if i >= ctx.r {
            return Err(Error::InvalidConfig(format!("generator index {i} >= r = {}", ctx.r)));
        }
        if cyclic.rows() != cyclic.cols() {
            return Err(Error::dims("inflate_cyclic", "action must be square"));
        }
        if !cyclic.pow(ctx.p())?.is_zero() {
            return Err(Error::invariant("cyclic action is not killed by X^p"));
        }
        let n = cyclic.rows();
        let actions = (0..ctx.r)
            .map(|j| {
                if j == i {
                    cyclic.clone()
                } else {
                    SparseMatrix::zero(n, n, ctx.field)
                }
            })
            .collect();
        Ok(GModule { ctx, dim: n, actions })
    }

    /// `A_i = k[X_i]/(X_i^p)` inflated to `kE`.
    pub fn cyclic_factor(ctx: GroupAlgebraContext, i: usize) -> Result<GModule> {
        Self::inflate_cyclic(ctx, i, &cyclic_regular(ctx.field))
    }

    /// Tensor product over `k` with the diagonal action `g -> g (x) g`, i.e.
    /// `X (x) 1 + 1 (x) X + X (x) X`. Left factor index varies slowest.
    pub fn tensor(&self, other: &GModule) -> Result<GModule> {
        self.ctx.check_same(&other.ctx)?;
        let f = self.field();
        let im = SparseMatrix::identity(self.dim, f);
        let in_ = SparseMatrix::identity(other.dim, f);
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(x, y)| {
                let mut acc = SparseMatrix::zero(self.dim * other.dim, self.dim * other.dim, f);
                if !x.is_zero() {
                    acc = acc.add(&x.kron(&in_)?)?;
                }
                if !y.is_zero() {
                    acc = acc.add(&im.kron(y)?)?;
                }
                if !x.is_zero() && !y.is_zero() {
                    acc = acc.add(&x.kron(y)?)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GModule {
            ctx: self.ctx,
            dim: self.dim * other.dim,
            actions,
        })
    }

    /// Left-nested tensor product `((M_1 (x) M_2) (x) ...)`.
    pub fn tensor_all(modules: &[&GModule]) -> Result<GModule> {
        let (first, rest) = modules
            .split_first()
            .ok_or_else(|| Error::dims("tensor_all", "no factors"))?;
        rest.iter().try_fold((*first).clone(), |acc, m| acc.tensor(m))
    }

    pub fn direct_sum(modules: &[&GModule]) -> Result<GModule> {
        let first = modules
            .first()
            .ok_or_else(|| Error::dims("direct_sum", "no summands"))?;
        for m in modules {
            first.ctx.check_same(&m.ctx)?;
        }
        let actions = (0..first.ctx.r)
            .map(|i| {
                let blocks: Vec<&SparseMatrix> = modules.iter().map(|m| &m.actions[i]).collect();
                SparseMatrix::block_diag(&blocks)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GModule {
            ctx: first.ctx,
            dim: modules.iter().map(|m| m.dim).sum(),
            actions,
        })
    }

    /// `[X_1 | ... | X_r]`, whose column span is the radical.
    fn radical_generators(&self) -> SparseMatrix {
        let refs: Vec<&SparseMatrix> = self.actions.iter().collect();
        SparseMatrix::hstack(&refs).expect("same row count")
    }

    pub fn radical_dim(&self) -> usize {
        if self.dim == 0 {
            return 0;
        }
        gfp::rank(&self.radical_generators())
    }

    /// `rad M = sum_i X_i M`, given by an independent spanning set.
    pub fn radical(&self) -> Submodule {
        if self.dim == 0 {
            return Submodule {
                basis: SparseMatrix::zero(0, 0, self.field()),
            };
        }
        let gens = self.radical_generators();
        let cols = gfp::pivot_columns(&gens);
        Submodule {
            basis: gens.select_columns(&cols),
        }
    }

    /// `M / rad M`, a direct sum of trivial modules.
    pub fn quotient_by_radical(&self) -> GModule {
        GModule::trivial_sum(self.ctx, self.dim - self.radical_dim())
    }

    /// Freeness test over the local algebra `kE`.
    ///
    /// With `t = dim(M / rad M)`, lifting a basis of the top gives a surjection
    /// `kE^t -> M` (Nakayama), so `M` is free iff `dim M = t * p^r`. For modules
    /// up to a few thousand dimensions the cover map is also built and its rank
    /// checked directly.
    pub fn is_free(&self) -> bool {
        let order = self.ctx.order;
        if !self.dim.is_multiple_of(order) {
            return false;
        }
        if self.dim == 0 {
            return true;
        }
        let t = self.dim - self.radical_dim();
        if self.dim != t * order {
            return false;
        }
        if self.dim <= COVER_CHECK_LIMIT {
            let cover = self.cover_map();
            return gfp::rank(&cover) == self.dim;
        }
        true
    }

    /// Columns `X^a m_g` for lifts `m_g` of a basis of the top, ordered as the free basis.
    fn cover_map(&self) -> SparseMatrix {
        let f = self.field();
        let rad = self.radical();
        let mut span = IncrementalBasis::new(f, self.dim);
        for c in rad.basis.columns() {
            span.insert(&c);
        }
        let lifts: Vec<SparseVector> = (0..self.dim)
            .map(|j| SparseVector::unit(self.dim, j))
            .filter(|e| span.insert(e))
            .collect();
        let p = self.ctx.p() as usize;
        let r = self.ctx.r;
        let mut cols = Vec::with_capacity(lifts.len() * self.ctx.order);
        for m in &lifts {
            // images indexed lexicographically by exponent vector
            let mut images: Vec<SparseVector> = Vec::with_capacity(self.ctx.order);
            for idx in 0..self.ctx.order {
                if idx == 0 {
                    images.push(m.clone());
                    continue;
                }
                // apply X_i to the image of idx - e_i for the last nonzero exponent
                let mut rem = idx;
                let mut i = r;
                let mut stride = 1;
                while rem % p == 0 {
                    rem /= p;
                    stride *= p;
                    i -= 1;
                }
                let prev = &images[idx - stride];
                images.push(self.actions[i - 1].mul_vec(prev).expect("dims"));
            }
            cols.extend(images);
        }
        SparseMatrix::from_columns(self.dim, &cols, f)
    }

    /// Quotient by the submodule spanned by the columns of `sub`.
    /// Returns the quotient and the projection onto it.
    pub fn quotient(self: &Arc<Self>, sub: &SparseMatrix) -> Result<(Arc<GModule>, ModuleHom)> {
        let (q, proj, _) = self.quotient_with_section(sub)?;
        Ok((q, proj))
    }

    /// As [`GModule::quotient`], also returning the linear (not `kE`-linear)
    /// section `Q -> M` onto the coordinates that survive the reduction.
    pub fn quotient_with_section(
        self: &Arc<Self>,
        sub: &SparseMatrix,
    ) -> Result<(Arc<GModule>, ModuleHom, SparseMatrix)> {
        if sub.rows() != self.dim {
            return Err(Error::dims("quotient", "spanning set has wrong length"));
        }
        let f = self.field();
        let rows: Vec<Vec<(u32, u32)>> = sub.columns().into_iter().map(|c| c.entries).collect();
        let basis = gfp::reduced_basis(f, rows, self.dim);
        let mut is_pivot = vec![false; self.dim];
        for (c, _) in &basis {
            is_pivot[*c as usize] = true;
        }
        let mut pos = vec![u32::MAX; self.dim];
        let mut q = 0u32;
        for j in 0..self.dim {
            if !is_pivot[j] {
                pos[j] = q;
                q += 1;
            }
        }
        let q = q as usize;
        let mut t = Vec::new();
        for j in 0..self.dim {
            if !is_pivot[j] {
                t.push((pos[j] as usize, j, 1));
            }
        }
        for (c, row) in &basis {
            for &(j, v) in row {
                if j != *c {
                    t.push((pos[j as usize] as usize, *c as usize, f.neg(v)));
                }
            }
        }
        let proj = SparseMatrix::from_triplets(q, self.dim, f, t)?;
        let embed = SparseMatrix::from_triplets(
            self.dim,
            q,
            f,
            (0..self.dim)
                .filter(|&j| !is_pivot[j])
                .map(|j| (j, pos[j] as usize, 1))
                .collect(),
        )?;
        let actions = self
            .actions
            .iter()
            .map(|x| proj.mul(&x.mul(&embed)?))
            .collect::<Result<Vec<_>>>()?;
        let quot = Arc::new(GModule::from_actions(self.ctx, actions)?);
        let hom = ModuleHom::new(self.clone(), quot.clone(), proj)?;
        Ok((quot, hom, embed))
    }

    pub fn to_json(&self) -> GModuleJson {
        GModuleJson {
            p: self.ctx.p(),
            r: self.ctx.r,
            dim: self.dim,
            actions: self.actions.clone(),
        }
    }

    pub fn from_json(j: &GModuleJson) -> Result<GModule> {
        let ctx = GroupAlgebraContext::with_prime(j.p, j.r)?;
        let m = if j.actions.is_empty() && j.dim == 0 {
            GModule::trivial_sum(ctx, 0)
        } else {
            GModule::new(ctx, j.actions.clone())?
        };
        if m.dim != j.dim {
            return Err(Error::dims("GModule::from_json", "dim field disagrees with actions"));
        }
        Ok(m)
    }
}

/// Wire form `{"p":…, "r":…, "dim":…, "actions":[sparse-matrix objects]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GModuleJson {
    pub p: u32,
    pub r: usize,
    pub dim: usize,
    pub actions: Vec<SparseMatrix>,
}

/// A subspace given by independent spanning columns.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub basis: SparseMatrix,
}

impl Submodule {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// A `kE`-linear map, stored as a `target.dim x source.dim` matrix.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    source: Arc<GModule>,
    target: Arc<GModule>,
    matrix: SparseMatrix,
}

impl ModuleHom {
    /// Checked constructor: shape and `kE`-linearity.
    pub fn new(source: Arc<GModule>, target: Arc<GModule>, matrix: SparseMatrix) -> Result<Self> {
        let h = Self::new_unchecked(source, target, matrix)?;
        if !h.is_linear() {
            return Err(Error::invariant("map does not commute with the kE-action"));
        }
        Ok(h)
    }

    /// Shape-checked only; for maps that are linear by construction.
    pub fn new_unchecked(source: Arc<GModule>, target: Arc<GModule>, matrix: SparseMatrix) -> Result<Self> {
        source.ctx.check_same(&target.ctx)?;
        if matrix.shape() != (target.dim, source.dim) {
            return Err(Error::dims(
                "ModuleHom",
                format!(
                    "matrix {:?} for map {} -> {}",
                    matrix.shape(),
                    source.dim,
                    target.dim
                ),
            ));
        }
        Ok(ModuleHom {
            source,
            target,
            matrix,
        })
    }

    pub fn zero(source: Arc<GModule>, target: Arc<GModule>) -> Self {
        let m = SparseMatrix::zero(target.dim, source.dim, source.field());
        ModuleHom {
            source,
            target,
            matrix: m,
        }
    }

    pub fn identity(m: Arc<GModule>) -> Self {
        let id = SparseMatrix::identity(m.dim, m.field());
        ModuleHom {
            source: m.clone(),
            target: m,
            matrix: id,
        }
    }

    pub fn source(&self) -> &Arc<GModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GModule> {
        &self.target
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SparseMatrix {
        self.matrix
    }

    pub fn is_linear(&self) -> bool {
        self.source
            .actions
            .iter()
            .zip(&self.target.actions)
            .all(|(xs, xt)| match (self.matrix.mul(xs), xt.mul(&self.matrix)) {
                (Ok(a), Ok(b)) => a == b,
                _ => false,
            })
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if other.target.dim != self.source.dim {
            return Err(Error::dims("compose", "inner dimensions differ"));
        }
        Ok(ModuleHom {
            source: other.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }
}

/// Pushout of `f: A -> B` and `g: A -> C`:
/// `P = (B ⊕ C) / {(f(a), -g(a))}` with the induced maps `B -> P`, `C -> P`.
pub fn pushout(f: &ModuleHom, g: &ModuleHom) -> Result<(Arc<GModule>, ModuleHom, ModuleHom)> {
    if f.source.dim != g.source.dim {
        return Err(Error::dims("pushout", "maps must share a source"));
    }
    f.source.ctx.check_same(&g.source.ctx)?;
    let b = &f.target;
    let c = &g.target;
    let sum = Arc::new(GModule::direct_sum(&[b, c])?);
    let relation = SparseMatrix::vstack(&[&f.matrix, &g.matrix.neg()])?;
    let (p, proj) = sum.quotient(&relation)?;
    let fld = sum.field();
    let inc_b = SparseMatrix::identity(b.dim, fld).embed(sum.dim, b.dim, 0, 0);
    let inc_c = SparseMatrix::identity(c.dim, fld).embed(sum.dim, c.dim, b.dim, 0);
    let in_b = ModuleHom::new_unchecked(b.clone(), p.clone(), proj.matrix.mul(&inc_b)?)?;
    let in_c = ModuleHom::new_unchecked(c.clone(), p.clone(), proj.matrix.mul(&inc_c)?)?;
    Ok((p, in_b, in_c))
}

/// Linear system whose unknowns are `kE`-linear maps `source_b -> target_b`.
///
/// Unknown maps are vectorized column-major, so `A F B` contributes
/// `(B^T ⊗ A) vec(F)`. Linearity `F X^s = X^t F` is imposed on every block.
pub struct HomSystem {
    field: FieldPrime,
    blocks: Vec<(Arc<GModule>, Arc<GModule>)>,
    offsets: Vec<usize>,
    unknowns: usize,
    equations: Vec<(Vec<(usize, SparseMatrix)>, SparseVector)>,
}

impl HomSystem {
    pub fn new(blocks: Vec<(Arc<GModule>, Arc<GModule>)>) -> Result<Self> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::dims("HomSystem", "no unknown maps"))?;
        let field = first.0.field();
        let ctx = first.0.ctx;
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut unknowns = 0;
        for (s, t) in &blocks {
            ctx.check_same(&s.ctx)?;
            ctx.check_same(&t.ctx)?;
            offsets.push(unknowns);
            unknowns += s.dim * t.dim;
        }
        let mut sys = HomSystem {
            field,
            blocks,
            offsets,
            unknowns,
            equations: Vec::new(),
        };
        for b in 0..sys.blocks.len() {
            let (s, t) = sys.blocks[b].clone();
            for (xs, xt) in s.actions.iter().zip(&t.actions) {
                // vec(X^t F) - vec(F X^s) = (I ⊗ X^t - X^s^T ⊗ I) vec F
                let lhs = SparseMatrix::identity(s.dim, field)
                    .kron(xt)?
                    .sub(&xs.transpose().kron(&SparseMatrix::identity(t.dim, field))?)?;
                let rhs = SparseVector::zero(lhs.rows());
                sys.equations.push((vec![(b, lhs)], rhs));
            }
        }
        Ok(sys)
    }

    /// Add `sum_k A_k F_{b_k} B_k = E`.
    pub fn add_equation(&mut self, terms: &[(usize, &SparseMatrix, &SparseMatrix)], rhs: &SparseMatrix) -> Result<()> {
        let mut coeffs = Vec::with_capacity(terms.len());
        for &(b, a, bm) in terms {
            let (s, t) = &self.blocks[b];
            if a.cols() != t.dim || bm.rows() != s.dim {
                return Err(Error::dims("HomSystem::add_equation", "term shapes do not fit the unknown"));
            }
            if a.rows() != rhs.rows() || bm.cols() != rhs.cols() {
                return Err(Error::dims("HomSystem::add_equation", "term shape differs from right-hand side"));
            }
            coeffs.push((b, bm.transpose().kron(a)?));
        }
        // column-major vec of the right-hand side
        let mut entries: Vec<(u32, u32)> = rhs
            .triplets()
            .map(|(i, j, v)| ((j * rhs.rows() + i) as u32, v))
            .collect();
        entries.sort_unstable();
        self.equations.push((
            coeffs,
            SparseVector {
                dim: rhs.rows() * rhs.cols(),
                entries,
            },
        ));
        Ok(())
    }

    /// Any solution, deterministic under the fixed elimination order.
    pub fn solve(&self) -> Result<Vec<ModuleHom>> {
        let f = self.field;
        let mut rows = Vec::new();
        let mut rhs_rows = Vec::new();
        for (terms, rhs) in &self.equations {
            let n = rhs.dim;
            let mut eq_rows: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
            for (b, m) in terms {
                let off = self.offsets[*b] as u32;
                for (i, row) in eq_rows.iter_mut().enumerate() {
                    let (c, v) = m.row(i);
                    let shifted: Vec<(u32, u32)> = c.iter().zip(v).map(|(&j, &x)| (j + off, x)).collect();
                    *row = crate::gfp::merge_rows(f, row, &shifted);
                }
            }
            let dense_rhs = rhs.to_dense();
            rows.extend(eq_rows);
            rhs_rows.extend(dense_rhs);
        }
        let a = SparseMatrix::from_rows(rows, self.unknowns, f);
        let b = SparseVector::from_dense(&rhs_rows);
        let x = gfp::solve(&a, &b)?
            .ok_or_else(|| Error::Inconsistent("no kE-linear maps satisfy the constraints".into()))?;
        let dense = x.to_dense();
        self.blocks
            .iter()
            .zip(&self.offsets)
            .map(|((s, t), &off)| {
                let mut trip = Vec::new();
                for j in 0..s.dim {
                    for i in 0..t.dim {
                        let v = dense[off + j * t.dim + i];
                        if v != 0 {
                            trip.push((i, j, v));
                        }
                    }
                }
                let m = SparseMatrix::from_triplets(t.dim, s.dim, f, trip)?;
                ModuleHom::new(s.clone(), t.clone(), m)
            })
            .collect()
    }
}

/// Solve for `kE`-linear maps subject to the constraints collected in `system`.
pub fn hom_component_solve(system: &HomSystem) -> Result<Vec<ModuleHom>> {
    system.solve()
}
