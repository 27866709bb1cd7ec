use std::collections::BTreeMap;
use std::sync::Arc;

use crate::chaincx::{ChainMap, Complex, TensorComplex};
use crate::error::{Error, Result};
use crate::gfp::SparseMatrix;
use crate::modrep::{GModule, GroupAlgebraContext};

/// `U^i`: `A_i --X_i--> A_i` in degrees 1 and 0, `i` 0-based.
pub fn u_factor(ctx: GroupAlgebraContext, i: usize) -> Result<Arc<Complex>> {
    let a = Arc::new(GModule::cyclic_factor(ctx, i)?);
    let x = a.action(i).clone();
    Ok(Arc::new(Complex::new(ctx, 0, vec![a.clone(), a], vec![x])?))
}

/// `ϑ` on `U^i`: degree-1 map `U_0 -> U_1`, `a -> ε(a) X_i^{p-1}`.
pub fn u_vartheta(u: &Arc<Complex>) -> Result<ChainMap> {
    let f = u.ctx().field();
    let p = u.ctx().p() as usize;
    let m = SparseMatrix::from_triplets(p, p, f, vec![(p - 1, 0, 1)])?;
    let mut comps = BTreeMap::new();
    comps.insert(0, m);
    ChainMap::new(u.clone(), u.clone(), 1, comps)
}

/// The Koszul complex `U^1 ⊗ .. ⊗ U^r`.
pub fn koszul_complex(ctx: GroupAlgebraContext) -> Result<TensorComplex> {
    let factors = (0..ctx.r()).map(|i| u_factor(ctx, i)).collect::<Result<Vec<_>>>()?;
    TensorComplex::build(factors, None)
}

/// Subsets of `{0..r-1}` of size `d` in lexicographic order of their sorted elements.
pub fn subsets(r: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for s in start..r {
            if r - s < d - cur.len() {
                break;
            }
            cur.push(s);
            go(s + 1, r, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, d, &mut Vec::new(), &mut out);
    out
}

/// The standard Koszul complex on free modules together with its identification
/// with [`koszul_complex`].
pub struct FreeKoszul {
    pub complex: Arc<Complex>,
    /// Generators `e_S` of each degree, as sorted index sets.
    pub generators: BTreeMap<i32, Vec<Vec<usize>>>,
    /// Degree-0 chain isomorphism to the tensor form; each component permutes
    /// free summands and is the identity inside them.
    pub iso: ChainMap,
}

/// Degree `d` is free on `e_S`, `|S| = d`, and
/// `d(e_S) = Σ_{s ∈ S} (-1)^{#{t ∈ S : t < s}} X_s e_{S \ s}`.
pub fn koszul_complex_free_form(ctx: GroupAlgebraContext, tensor: &TensorComplex) -> Result<FreeKoszul> {
    let r = ctx.r();
    let f = ctx.field();
    let order = ctx.order();
    let unit = GModule::free(ctx, 1);
    let mut generators = BTreeMap::new();
    let mut terms = Vec::new();
    for d in 0..=r {
        generators.insert(d as i32, subsets(r, d));
        terms.push(Arc::new(GModule::free(ctx, generators[&(d as i32)].len())));
    }
    let mut diffs = Vec::new();
    for d in 1..=r {
        let src = &generators[&(d as i32)];
        let tgt = &generators[&(d as i32 - 1)];
        let pos: std::collections::HashMap<&Vec<usize>, usize> = tgt.iter().enumerate().map(|(k, s)| (s, k)).collect();
        let mut trip = Vec::new();
        for (col, s) in src.iter().enumerate() {
            for (k, &x) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(k);
                let row = pos[&rest];
                let sign = if k % 2 == 1 { f.neg(1) } else { 1 };
                for (i, j, v) in unit.action(x).triplets() {
                    trip.push((row * order + i, col * order + j, f.mul(v, sign)));
                }
            }
        }
        diffs.push(SparseMatrix::from_triplets(tgt.len() * order, src.len() * order, f, trip)?);
    }
    let complex = Arc::new(Complex::new(ctx, 0, terms, diffs)?);
    let mut comps = BTreeMap::new();
    for d in 0..=r as i32 {
        let mut trip = Vec::new();
        for (k, s) in generators[&d].iter().enumerate() {
            let mut a = vec![0i32; r];
            for &x in s {
                a[x] = 1;
            }
            let summand = tensor
                .layout()
                .find(&a)
                .ok_or_else(|| Error::invariant("Koszul summand missing from the tensor layout"))?;
            for q in 0..order {
                trip.push((summand.offset + q, k * order + q, 1));
            }
        }
        let n = generators[&d].len() * order;
        comps.insert(d, SparseMatrix::from_triplets(tensor.complex().dim(d), n, f, trip)?);
    }
    let iso = ChainMap::new(complex.clone(), tensor.complex().clone(), 0, comps)?;
    Ok(FreeKoszul {
        complex,
        generators,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chaincx::Homology;

    #[test]
    fn u_factor_shape() {
        let ctx = GroupAlgebraContext::with_prime(3, 2).unwrap();
        let u = u_factor(ctx, 1).unwrap();
        assert_eq!(u.dims(), vec![(0, 3), (1, 3)]);
        assert_eq!(crate::gfp::rank(u.d(1).unwrap()), 2);
        assert!(u.term(0).unwrap().action(0).is_zero());
        let h = Homology::compute(&u).unwrap();
        assert_eq!((h.dim(0), h.dim(1)), (1, 1));
        assert!(u_vartheta(&u).is_ok());
    }

    #[test]
    fn rank_two_free_form() {
        let ctx = GroupAlgebraContext::with_prime(3, 2).unwrap();
        let t = koszul_complex(ctx).unwrap();
        assert_eq!(t.complex().dims(), vec![(0, 9), (1, 18), (2, 9)]);
        let fk = koszul_complex_free_form(ctx, &t).unwrap();
        let x = GModule::free(ctx, 1);
        // d_1 = [X_1 X_2], d_2 = [-X_2; X_1]
        let d1 = fk.complex.d(1).unwrap();
        assert_eq!(&d1.block(0, 9, 0, 9), x.action(0));
        assert_eq!(&d1.block(0, 9, 9, 9), x.action(1));
        let d2 = fk.complex.d(2).unwrap();
        assert_eq!(d2.block(0, 9, 0, 9), x.action(1).neg());
        assert_eq!(&d2.block(9, 9, 0, 9), x.action(0));
    }

    #[test]
    fn subsets_in_order() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(8, 3).len(), 56);
    }
}
