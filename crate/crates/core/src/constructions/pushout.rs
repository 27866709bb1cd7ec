use std::collections::BTreeMap;
use std::sync::Arc;

use super::koszul::{u_factor, u_vartheta};
use super::{make_zeta, MinimalResolution, ParameterFunctional, ZetaSpec};
use crate::chaincx::{induced_map, is_quasi_iso, ChainMap, Complex, Homology};
use crate::error::{Error, Result};
use crate::gfp::{self, SparseMatrix};
use crate::modrep::{GModule, HomSystem, ModuleHom};

/// `L_ζ = (k ⊕ P_{n-1}) / {(ζ(x), -d x)}` with the maps completing the exact
/// row `0 -> k -> L_ζ -> P_{n-2} -> ..`.
#[derive(Clone, Debug)]
pub struct PushoutModule {
    pub module: Arc<GModule>,
    /// `ι: k -> L`, a single column.
    pub iota: SparseMatrix,
    /// `L -> P_{n-2}` induced by `d_{n-1}`.
    pub d: SparseMatrix,
    pub projection: ModuleHom,
}

#[allow(non_snake_case)]
pub fn build_L(res: &MinimalResolution, zeta: &ParameterFunctional) -> Result<PushoutModule> {
    let n = zeta.degree();
    let ctx = *res.ctx();
    let f = ctx.field();
    let k = GModule::trivial(ctx);
    let pn1 = res.term(n - 1);
    let sum = Arc::new(GModule::direct_sum(&[&k, pn1.as_ref()])?);
    let relation = SparseMatrix::vstack(&[&zeta.matrix(res)?, &res.d(n).neg()])?;
    let (module, projection, section) = sum.quotient_with_section(&relation)?;
    let iota = projection.matrix().mul(&SparseMatrix::identity(sum.dim(), f).block(0, sum.dim(), 0, 1))?;
    // (c, x) -> d_{n-1} x vanishes on the relations, so it descends to L
    let dn1 = res.d(n - 1);
    let lift = SparseMatrix::hstack(&[&SparseMatrix::zero(dn1.rows(), 1, f), dn1])?;
    let d = lift.mul(&section)?;
    if !lift.mul(&relation)?.is_zero() {
        return Err(Error::invariant("d_{n-1} does not vanish on the pushout relations"));
    }
    ModuleHom::new(module.clone(), res.term(n - 2).clone(), d.clone())?;
    if iota.is_zero() {
        return Err(Error::invariant("ι: k -> L is not injective"));
    }
    if !d.mul(&iota)?.is_zero() {
        return Err(Error::invariant("d ∘ ι != 0"));
    }
    if gfp::rank(&d) + 1 != module.dim() {
        return Err(Error::invariant("bottom row is not exact at L"));
    }
    Ok(PushoutModule {
        module,
        iota,
        d,
        projection,
    })
}

/// A tensor factor together with its degree-`(n-1)` self-map `ϑ`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub complex: Arc<Complex>,
    pub vartheta: ChainMap,
}

impl Factor {
    /// Koszul factor `U^i` with `ϑ(a) = ε(a) X_i^{p-1}`.
    pub fn koszul(ctx: crate::modrep::GroupAlgebraContext, i: usize) -> Result<Factor> {
        let complex = u_factor(ctx, i)?;
        let vartheta = u_vartheta(&complex)?;
        Ok(Factor { complex, vartheta })
    }

    /// Homology with the expected shape `k` in degrees `0` and `n-1`.
    pub fn homology(&self) -> Result<Homology> {
        let h = Homology::compute(&self.complex)?;
        let top = self.vartheta.degree();
        for (deg, dim) in h.dims() {
            let want = usize::from(deg == 0 || deg == top);
            if dim != want {
                return Err(Error::invariant(format!(
                    "factor homology has dimension {dim} in degree {deg}, expected {want}"
                )));
            }
        }
        Ok(h)
    }
}

/// `C^i: 0 -> L_ζ -> P_{n-2} -> .. -> P_0 -> 0` (degrees `n-1 .. 0`) and
/// `ϑ = ι ε: P_0 -> L_ζ` of degree `n-1`.
#[allow(non_snake_case)]
pub fn build_Ci(res: &MinimalResolution, zeta: &ParameterFunctional) -> Result<(Factor, PushoutModule)> {
    let n = zeta.degree();
    let l = build_L(res, zeta)?;
    let mut terms: Vec<Arc<GModule>> = (0..n - 1).map(|m| res.term(m).clone()).collect();
    terms.push(l.module.clone());
    let mut diffs: Vec<SparseMatrix> = (1..n - 1).map(|m| res.d(m).clone()).collect();
    diffs.push(l.d.clone());
    let complex = Arc::new(Complex::from_parts(*res.ctx(), 0, terms, diffs)?);
    let mut comps = BTreeMap::new();
    comps.insert(0, l.iota.mul(res.augmentation())?);
    let vartheta = ChainMap::new(complex.clone(), complex.clone(), n - 1, comps)?;
    Ok((Factor { complex, vartheta }, l))
}

/// The quasi-isomorphism `φ: C^i -> U^i` of the Proposition at `n = 2`.
#[derive(Clone, Debug)]
pub struct QuasiIso {
    pub source: Factor,
    pub target: Factor,
    pub phi: ChainMap,
}

/// Outcome of checking a [`QuasiIso`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiIsoCheck {
    pub quasi_iso: bool,
    /// `H(φ) H(ϑ^C) = H(ϑ^U) H(φ)`.
    pub homology_commutes: bool,
    /// `φ ϑ^C = ϑ^U φ` on chains.
    pub strict_commutes: bool,
}

/// Solves for `φ` with `X_i φ_1 = φ_0 d`, `ε φ_0 = ε` and `φ_1 ι = ι_U`.
pub fn quasi_iso_to_u(res: &MinimalResolution, i: usize) -> Result<QuasiIso> {
    let zeta = make_zeta(res, 2, ZetaSpec::Standard, i)?;
    let (source, l) = build_Ci(res, &zeta)?;
    solve_quasi_iso(res, source, &l, i)
}

/// As [`quasi_iso_to_u`] for an already built `C^i` with standard `ζ_i`.
pub fn solve_quasi_iso(res: &MinimalResolution, source: Factor, l: &PushoutModule, i: usize) -> Result<QuasiIso> {
    let ctx = *res.ctx();
    let f = ctx.field();
    let p = ctx.p() as usize;
    if source.vartheta.degree() != 1 {
        return Err(Error::InvalidConfig("the quasi-isomorphism to U^i is built for n = 2".into()));
    }
    let target = Factor::koszul(ctx, i)?;
    let a = target.complex.term(0).unwrap().clone();
    let p0 = res.term(0).clone();
    let mut sys = HomSystem::new(vec![(p0.clone(), a.clone()), (l.module.clone(), a.clone())])?;
    let x = a.action(i);
    let id_a = SparseMatrix::identity(p, f);
    let id_l = SparseMatrix::identity(l.module.dim(), f);
    sys.add_equation(
        &[(1, x, &id_l), (0, &id_a.neg(), &l.d)],
        &SparseMatrix::zero(p, l.module.dim(), f),
    )?;
    let eps_u = SparseMatrix::from_triplets(1, p, f, vec![(0, 0, 1)])?;
    let id_p0 = SparseMatrix::identity(p0.dim(), f);
    sys.add_equation(&[(0, &eps_u, &id_p0)], res.augmentation())?;
    let iota_u = SparseMatrix::from_triplets(p, 1, f, vec![(p - 1, 0, 1)])?;
    sys.add_equation(&[(1, &id_a, &l.iota)], &iota_u)?;
    let maps = sys.solve()?;
    let mut comps = BTreeMap::new();
    comps.insert(0, maps[0].matrix().clone());
    comps.insert(1, maps[1].matrix().clone());
    let phi = ChainMap::new(source.complex.clone(), target.complex.clone(), 0, comps)?;
    Ok(QuasiIso { source, target, phi })
}

impl QuasiIso {
    pub fn check(&self) -> Result<QuasiIsoCheck> {
        let hs = self.source.homology()?;
        let ht = self.target.homology()?;
        let quasi_iso = is_quasi_iso(&self.phi, &hs, &ht)?;
        let hphi = induced_map(&self.phi, &hs, &ht)?;
        let hc = induced_map(&self.source.vartheta, &hs, &hs)?;
        let hu = induced_map(&self.target.vartheta, &ht, &ht)?;
        let m = self.source.vartheta.degree();
        let mut homology_commutes = true;
        for (&deg, c) in &hc {
            let (Some(phi_hi), Some(phi_lo), Some(u)) = (hphi.get(&(deg + m)), hphi.get(&deg), hu.get(&deg)) else {
                continue;
            };
            if phi_hi.mul(c)? != u.mul(phi_lo)? {
                homology_commutes = false;
            }
        }
        let left = self.phi.compose(&self.source.vartheta)?;
        let right = self.target.vartheta.compose(&self.phi)?;
        let strict_commutes = left.components() == right.components();
        Ok(QuasiIsoCheck {
            quasi_iso,
            homology_commutes,
            strict_commutes,
        })
    }
}
