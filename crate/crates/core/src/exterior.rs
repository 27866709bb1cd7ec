//! The exterior algebra `Λ(e_1..e_r)` over GF(p).
//!
//! Basis monomials are subsets of `{0..r-1}` encoded as bitmasks; `e_S` means
//! the product of the `e_s`, `s ∈ S`, in increasing order. This code path
//! shares nothing with the chain-complex machinery beyond field arithmetic
//! and dense rank, so it serves as an independent check on cone homology.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::gfp::{DenseMatrix, FieldPrime};

/// Largest rank handled; `2^r` coefficients are stored densely.
pub const MAX_RANK: usize = 20;

/// Pairs `(0,1), (2,3), (4,5), (6,7)` defining `θ = e_1e_2 + e_3e_4 + e_5e_6 + e_7e_8`.
pub const THETA_PAIRS: [(usize, usize); 4] = [(0, 1), (2, 3), (4, 5), (6, 7)];

/// `(-1)^{inversions}` of concatenating the increasing words `S` and `T`, or
/// `None` when they overlap.
pub fn merge_sign(s: u32, t: u32) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    let mut inv = 0u32;
    let mut rest = t;
    while rest != 0 {
        let b = rest.trailing_zeros();
        inv += (s >> b).count_ones();
        rest &= rest - 1;
    }
    Some(inv % 2 == 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement {
    field: FieldPrime,
    r: usize,
    coeffs: Vec<u32>,
}

impl ExteriorElement {
    pub fn zero(field: FieldPrime, r: usize) -> Result<Self> {
        if r > MAX_RANK {
            return Err(Error::InvalidConfig(format!("exterior rank {r} exceeds {MAX_RANK}")));
        }
        Ok(ExteriorElement {
            field,
            r,
            coeffs: vec![0; 1 << r],
        })
    }

    pub fn one(field: FieldPrime, r: usize) -> Result<Self> {
        let mut e = Self::zero(field, r)?;
        e.coeffs[0] = 1;
        Ok(e)
    }

    /// `c · e_S` with `S` given as a bitmask.
    pub fn monomial(field: FieldPrime, r: usize, mask: u32, c: u32) -> Result<Self> {
        let mut e = Self::zero(field, r)?;
        if (mask as usize) >= e.coeffs.len() {
            return Err(Error::InvalidConfig(format!("monomial {mask:#b} outside rank {r}")));
        }
        e.coeffs[mask as usize] = c % field.p();
        Ok(e)
    }

    /// The generator `e_i`, 0-based.
    pub fn generator(field: FieldPrime, r: usize, i: usize) -> Result<Self> {
        if i >= r {
            return Err(Error::InvalidConfig(format!("generator {i} >= r = {r}")));
        }
        Self::monomial(field, r, 1 << i, 1)
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn coeff(&self, mask: u32) -> u32 {
        self.coeffs[mask as usize]
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Nonzero terms `(mask, coefficient)` in increasing mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| (m as u32, c))
    }

    /// Degree if every nonzero term has the same number of factors.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for (m, _) in self.terms() {
            let d = m.count_ones();
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        if self.r != other.r {
            return Err(Error::dims("exterior", format!("rank {} vs {}", self.r, other.r)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| f.add(a, b)).collect();
        Ok(ExteriorElement {
            field: f,
            r: self.r,
            coeffs,
        })
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        ExteriorElement {
            field: f,
            r: self.r,
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c % f.p())).collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field;
        let mut out = Self::zero(f, self.r)?;
        let rhs: Vec<(u32, u32)> = other.terms().collect();
        for (s, a) in self.terms() {
            for &(t, b) in &rhs {
                if let Some(neg) = merge_sign(s, t) {
                    let v = f.mul(a, b);
                    let v = if neg { f.neg(v) } else { v };
                    let slot = &mut out.coeffs[(s | t) as usize];
                    *slot = f.add(*slot, v);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `x -> self · x` on the monomial basis ordered by bitmask.
    pub fn left_mult_matrix(&self) -> DenseMatrix {
        let n = self.coeffs.len();
        let f = self.field;
        let mut m = DenseMatrix::zeros(n, n, f);
        for (s, a) in self.terms() {
            for t in 0..n as u32 {
                if let Some(neg) = merge_sign(s, t) {
                    let v = if neg { f.neg(a) } else { a };
                    let row = (s | t) as usize;
                    let cur = m.get(row, t as usize);
                    m.set(row, t as usize, f.add(cur, v));
                }
            }
        }
        m
    }

    pub fn left_mult_rank(&self) -> usize {
        self.left_mult_matrix().rank()
    }
}

/// `θ = Σ e_a e_b` over the given pairs (0-based). The paper's element uses
/// [`THETA_PAIRS`] and needs `r >= 8`.
pub fn theta_element(field: FieldPrime, r: usize, pairs: &[(usize, usize)]) -> Result<ExteriorElement> {
    if r < 8 {
        return Err(Error::InvalidConfig(format!("θ needs r >= 8, got {r}")));
    }
    let mut seen = 0u32;
    let mut out = ExteriorElement::zero(field, r)?;
    for &(a, b) in pairs {
        if a >= r || b >= r || a == b {
            return Err(Error::InvalidConfig(format!("bad pair ({a}, {b}) for r = {r}")));
        }
        let mask = (1u32 << a) | (1u32 << b);
        if seen & mask != 0 {
            return Err(Error::InvalidConfig("pairs of θ must be disjoint".into()));
        }
        seen |= mask;
        let ea = ExteriorElement::generator(field, r, a)?;
        let eb = ExteriorElement::generator(field, r, b)?;
        out = out.add(&ea.multiply(&eb)?)?;
    }
    Ok(out)
}

/// `2 (2^r - rank(θ·))`, the total homology of the cone over `θ` predicted
/// by the exterior model.
pub fn predicted_cone_homology(field: FieldPrime, r: usize) -> Result<usize> {
    let theta = theta_element(field, r, &THETA_PAIRS)?;
    Ok(2 * ((1usize << r) - theta.left_mult_rank()))
}

/// Whether `e_S -> θ_{s_1} ∘ .. ∘ θ_{s_d} (fundamental)` is a graded bijection
/// `Λ -> H`.
///
/// `dims` are the homology dimensions, `fundamental` the coordinates of the
/// chosen class in degree `base`, and `induced[i]` the matrices of `H(θ_i)`
/// keyed by source degree; each `θ_i` has degree `m`.
pub fn regular_rep_check(
    dims: &BTreeMap<i32, usize>,
    base: i32,
    fundamental: &[u32],
    induced: &[BTreeMap<i32, DenseMatrix>],
    m: i32,
) -> Result<bool> {
    let r = induced.len();
    if r > MAX_RANK {
        return Err(Error::InvalidConfig(format!("rank {r} exceeds {MAX_RANK}")));
    }
    let dim = |i: i32| dims.get(&i).copied().unwrap_or(0);
    if fundamental.len() != dim(base) {
        return Err(Error::dims("regular_rep_check", "fundamental class has the wrong length"));
    }
    let field = match induced.first().and_then(|x| x.values().next()) {
        Some(mat) => mat.field(),
        None => return Ok(r == 0 && dims.values().sum::<usize>() == 1),
    };
    // images[d] collects the columns of degree base + d m
    let mut images: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    for mask in 0u32..(1u32 << r) {
        let mut v = fundamental.to_vec();
        let mut deg = base;
        // rightmost factor acts first: apply θ_{s_d}, then θ_{s_{d-1}}, ...
        for i in (0..r).rev().filter(|&i| mask >> i & 1 == 1) {
            let Some(h) = induced[i].get(&deg) else {
                v = vec![0; dim(deg + m)];
                deg += m;
                continue;
            };
            let mut w = vec![0u32; h.rows()];
            for (row, slot) in w.iter_mut().enumerate() {
                let mut acc = 0;
                for (col, &x) in v.iter().enumerate() {
                    acc = field.mul_add(acc, h.get(row, col), x);
                }
                *slot = acc;
            }
            v = w;
            deg += m;
        }
        images.entry(mask.count_ones()).or_default().push(v);
    }
    let mut total = 0;
    for (d, cols) in &images {
        let deg = base + *d as i32 * m;
        let n = dim(deg);
        total += n;
        if cols.len() != n {
            return Ok(false);
        }
        let mut mat = DenseMatrix::zeros(n, cols.len(), field);
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                mat.set(i, j, x);
            }
        }
        if mat.rank() != n {
            return Ok(false);
        }
    }
    Ok(total == dims.values().sum::<usize>())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldPrime {
        FieldPrime::new(p).unwrap()
    }

    #[test]
    fn anticommuting_generators() {
        let f = gf(3);
        let e1 = ExteriorElement::generator(f, 2, 0).unwrap();
        let e2 = ExteriorElement::generator(f, 2, 1).unwrap();
        assert_eq!(e1.multiply(&e2).unwrap().coeff(0b11), 1);
        assert_eq!(e2.multiply(&e1).unwrap().coeff(0b11), 2);
        assert!(e1.multiply(&e1).unwrap().is_zero());
    }

    #[test]
    fn theta_squares() {
        let t2 = theta_element(gf(2), 8, &THETA_PAIRS).unwrap();
        assert!(t2.multiply(&t2).unwrap().is_zero());
        let t3 = theta_element(gf(3), 8, &THETA_PAIRS).unwrap();
        let sq = t3.multiply(&t3).unwrap();
        assert_eq!(sq.coeff(0b1111), 2);
        assert_eq!(sq.terms().count(), 6);
        assert_eq!(t3.terms().count(), 4);
        assert!(theta_element(gf(3), 7, &THETA_PAIRS).is_err());
        assert!(theta_element(gf(3), 8, &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn unit_and_generator_ranks() {
        let f = gf(5);
        assert_eq!(ExteriorElement::one(f, 4).unwrap().left_mult_rank(), 16);
        assert_eq!(ExteriorElement::generator(f, 4, 2).unwrap().left_mult_rank(), 8);
    }

    #[test]
    fn theta_nine_embeds_eight() {
        let f = gf(3);
        let t8 = theta_element(f, 8, &THETA_PAIRS).unwrap();
        let t9 = theta_element(f, 9, &THETA_PAIRS).unwrap();
        let a: Vec<(u32, u32)> = t8.terms().collect();
        let b: Vec<(u32, u32)> = t9.terms().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn regular_rep_of_one_generator() {
        // H = k in degrees 0 and 1, θ_1 maps the bottom class to the top one
        let f = gf(3);
        let dims: BTreeMap<i32, usize> = [(0, 1), (1, 1)].into_iter().collect();
        let mut h = BTreeMap::new();
        h.insert(0, DenseMatrix::from_rows(1, 1, f, vec![2]).unwrap());
        h.insert(1, DenseMatrix::zeros(0, 1, f));
        assert!(regular_rep_check(&dims, 0, &[1], &[h.clone()], 1).unwrap());
        h.insert(0, DenseMatrix::zeros(1, 1, f));
        assert!(!regular_rep_check(&dims, 0, &[1], &[h], 1).unwrap());
    }
}
