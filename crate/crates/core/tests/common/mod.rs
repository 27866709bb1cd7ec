//! Small independent oracles: schoolbook dense linear algebra and a direct
//! model of the exterior algebra. The oracles in this file do not call the
//! crate's elimination or exterior code.
#![allow(dead_code)]

pub mod props;

use homforge_core::SparseMatrix;

pub fn dense(m: &SparseMatrix) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; m.cols()]; m.rows()];
    for (i, j, v) in m.triplets() {
        out[i][j] = v;
    }
    out
}

fn inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Rank by plain row reduction.
pub fn naive_rank(mut rows: Vec<Vec<u32>>, p: u32) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, piv);
        let s = inv(rows[rank][c], p);
        for v in rows[rank].iter_mut() {
            *v = (*v as u64 * s as u64 % p as u64) as u32;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in c..ncols {
                    let t = (rows[rank][j] as u64 * f as u64 % p as u64) as u32;
                    rows[i][j] = (rows[i][j] + p - t) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn naive_mul(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(0u64, |acc, (&x, brow)| (acc + x as u64 * brow[j] as u64) % p as u64) as u32
                })
                .collect()
        })
        .collect()
}

pub fn naive_kron(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    let (br, bc) = (b.len(), b.first().map_or(0, |r| r.len()));
    let ac = a.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0u32; ac * bc]; a.len() * br];
    for (i, arow) in a.iter().enumerate() {
        for (j, &x) in arow.iter().enumerate() {
            for (k, brow) in b.iter().enumerate() {
                for (l, &y) in brow.iter().enumerate() {
                    out[i * br + k][j * bc + l] = (x as u64 * y as u64 % p as u64) as u32;
                }
            }
        }
    }
    out
}

pub fn naive_identity(n: usize) -> Vec<Vec<u32>> {
    (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect()
}

pub fn naive_add(a: &[Vec<u32>], b: &[Vec<u32>], p: u32) -> Vec<Vec<u32>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(&u, &v)| (u + v) % p).collect())
        .collect()
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `e_S e_T` in the exterior algebra on `r` generators: `None` if `S` and `T`
/// meet, else the sign of sorting the concatenated word, counted pair by pair.
pub fn wedge(s: u32, t: u32, r: usize) -> Option<bool> {
    if s & t != 0 {
        return None;
    }
    let mut swaps = 0;
    for a in 0..r {
        for b in 0..a {
            // a from S sits before b from T but must come after it
            if s >> a & 1 == 1 && t >> b & 1 == 1 {
                swaps += 1;
            }
        }
    }
    Some(swaps % 2 == 1)
}

/// Matrix of left multiplication by `Σ e_a e_b` over the given 0-based pairs.
pub fn exterior_left_mult(p: u32, r: usize, pairs: &[(usize, usize)]) -> Vec<Vec<u32>> {
    let n = 1usize << r;
    let mut m = vec![vec![0u32; n]; n];
    for &(a, b) in pairs {
        // e_a e_b = e_{ab} with a < b
        let s = (1u32 << a) | (1u32 << b);
        let sign_ab = if a < b { 0 } else { 1 };
        for t in 0..n as u32 {
            if let Some(neg) = wedge(s, t, r) {
                let neg = neg ^ (sign_ab == 1);
                let row = (s | t) as usize;
                m[row][t as usize] = (m[row][t as usize] + if neg { p - 1 } else { 1 }) % p;
            }
        }
    }
    m
}

/// `dim ker + dim coker` of left multiplication by `θ` on the regular representation.
pub fn exterior_cone_total(p: u32, r: usize, pairs: &[(usize, usize)]) -> usize {
    let rank = naive_rank(exterior_left_mult(p, r, pairs), p);
    2 * ((1usize << r) - rank)
}

pub const PAIRS: [(usize, usize); 4] = [(0, 1), (2, 3), (4, 5), (6, 7)];
