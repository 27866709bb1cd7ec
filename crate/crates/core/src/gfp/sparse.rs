use serde::{Deserialize, Serialize};

use super::dense::DenseMatrix;
use super::field::FieldPrime;
use crate::error::{Error, Result};

/// A sparse vector over GF(p): sorted `(index, value)` pairs with nonzero values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVector {
    pub dim: usize,
    pub entries: Vec<(u32, u32)>,
}

impl SparseVector {
    pub fn zero(dim: usize) -> Self {
        SparseVector {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        assert!(i < dim);
        SparseVector {
            dim,
            entries: vec![(i as u32, 1)],
        }
    }

    pub fn from_dense(values: &[u32]) -> Self {
        SparseVector {
            dim: values.len(),
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| (i as u32, v))
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for &(i, v) in &self.entries {
            out[i as usize] = v;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> u32 {
        match self.entries.binary_search_by_key(&(i as u32), |e| e.0) {
            Ok(k) => self.entries[k].1,
            Err(_) => 0,
        }
    }

    /// `self + c * other`
    pub fn axpy(&self, f: FieldPrime, c: u32, other: &SparseVector) -> SparseVector {
        debug_assert_eq!(self.dim, other.dim);
        SparseVector {
            dim: self.dim,
            entries: merge_axpy(f, &self.entries, c, &other.entries),
        }
    }

    pub fn scale(&self, f: FieldPrime, c: u32) -> SparseVector {
        if c.is_multiple_of(f.p()) {
            return SparseVector::zero(self.dim);
        }
        SparseVector {
            dim: self.dim,
            entries: self.entries.iter().map(|&(i, v)| (i, f.mul(v, c))).collect(),
        }
    }

    /// Kronecker product of vectors, left index varying slowest.
    pub fn kron(&self, f: FieldPrime, other: &SparseVector) -> SparseVector {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for &(i, a) in &self.entries {
            for &(j, b) in &other.entries {
                entries.push((i * other.dim as u32 + j, f.mul(a, b)));
            }
        }
        SparseVector {
            dim: self.dim * other.dim,
            entries,
        }
    }

    /// Place this vector at `offset` inside a vector of dimension `dim`.
    pub fn embed(&self, dim: usize, offset: usize) -> SparseVector {
        assert!(offset + self.dim <= dim);
        SparseVector {
            dim,
            entries: self
                .entries
                .iter()
                .map(|&(i, v)| (i + offset as u32, v))
                .collect(),
        }
    }

    /// Restrict to coordinates `[offset, offset + len)`.
    pub fn slice(&self, offset: usize, len: usize) -> SparseVector {
        let (lo, hi) = (offset as u32, (offset + len) as u32);
        SparseVector {
            dim: len,
            entries: self
                .entries
                .iter()
                .filter(|e| e.0 >= lo && e.0 < hi)
                .map(|&(i, v)| (i - lo, v))
                .collect(),
        }
    }
}

/// `a + c*b` on sorted sparse entry lists, dropping cancellations.
pub(crate) fn merge_axpy(f: FieldPrime, a: &[(u32, u32)], c: u32, b: &[(u32, u32)]) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ca, va) = a[i];
        let (cb, vb) = b[j];
        if ca < cb {
            out.push((ca, va));
            i += 1;
        } else if cb < ca {
            let v = f.mul(c, vb);
            if v != 0 {
                out.push((cb, v));
            }
            j += 1;
        } else {
            let v = f.mul_add(va, c, vb);
            if v != 0 {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    for &(cb, vb) in &b[j..] {
        let v = f.mul(c, vb);
        if v != 0 {
            out.push((cb, v));
        }
    }
    out
}

/// Compressed-row sparse matrix over GF(p).
///
/// Canonical form: column indices strictly increasing within each row and no
/// stored zeros, so structural equality is matrix equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    field: FieldPrime,
    indptr: Vec<usize>,
    indices: Vec<u32>,
    values: Vec<u32>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, field: FieldPrime) -> Self {
        SparseMatrix {
            rows,
            cols,
            field,
            indptr: vec![0; rows + 1],
            indices: Vec::new(),
            values: Vec::new(),
        }
    }

    pub fn identity(n: usize, field: FieldPrime) -> Self {
        Self::scalar(n, field, 1)
    }

    pub fn scalar(n: usize, field: FieldPrime, c: u32) -> Self {
        let c = c % field.p();
        if c == 0 {
            return Self::zero(n, n, field);
        }
        SparseMatrix {
            rows: n,
            cols: n,
            field,
            indptr: (0..=n).collect(),
            indices: (0..n as u32).collect(),
            values: vec![c; n],
        }
    }

    /// Build from triplets in any order. Duplicates are summed, values reduced mod p.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        field: FieldPrime,
        mut triplets: Vec<(usize, usize, u32)>,
    ) -> Result<Self> {
        for &(i, j, _) in &triplets {
            if i >= rows || j >= cols {
                return Err(Error::dims(
                    "from_triplets",
                    format!("entry ({i},{j}) outside {rows}x{cols}"),
                ));
            }
        }
        triplets.sort_unstable_by_key(|t| (t.0, t.1));
        let mut indptr = vec![0usize; rows + 1];
        let mut indices = Vec::with_capacity(triplets.len());
        let mut values: Vec<u32> = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        for (i, j, v) in triplets {
            let v = v % field.p();
            if last == Some((i, j)) {
                let k = values.len() - 1;
                values[k] = field.add(values[k], v);
                continue;
            }
            indptr[i + 1] += 1;
            indices.push(j as u32);
            values.push(v);
            last = Some((i, j));
        }
        for i in 0..rows {
            indptr[i + 1] += indptr[i];
        }
        let mut m = SparseMatrix {
            rows,
            cols,
            field,
            indptr,
            indices,
            values,
        };
        m.drop_zeros();
        Ok(m)
    }

    /// Build from per-row sorted entry lists (no zeros, increasing columns).
    pub(crate) fn from_rows(rows: Vec<Vec<(u32, u32)>>, cols: usize, field: FieldPrime) -> Self {
        let n = rows.len();
        let nnz = rows.iter().map(Vec::len).sum();
        let mut indptr = Vec::with_capacity(n + 1);
        let mut indices = Vec::with_capacity(nnz);
        let mut values = Vec::with_capacity(nnz);
        indptr.push(0);
        for row in rows {
            for (c, v) in row {
                debug_assert!((c as usize) < cols && v != 0);
                indices.push(c);
                values.push(v);
            }
            indptr.push(indices.len());
        }
        SparseMatrix {
            rows: n,
            cols,
            field,
            indptr,
            indices,
            values,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[SparseVector], field: FieldPrime) -> Self {
        let cols = columns.len();
        let mut counts = vec![0usize; rows + 1];
        for c in columns {
            assert_eq!(c.dim, rows, "column length mismatch");
            for &(i, _) in &c.entries {
                counts[i as usize + 1] += 1;
            }
        }
        for i in 0..rows {
            counts[i + 1] += counts[i];
        }
        let indptr = counts.clone();
        let nnz = indptr[rows];
        let mut indices = vec![0u32; nnz];
        let mut values = vec![0u32; nnz];
        let mut next = counts;
        for (j, c) in columns.iter().enumerate() {
            for &(i, v) in &c.entries {
                let slot = next[i as usize];
                indices[slot] = j as u32;
                values[slot] = v % field.p();
                next[i as usize] += 1;
            }
        }
        let mut m = SparseMatrix {
            rows,
            cols,
            field,
            indptr,
            indices,
            values,
        };
        m.drop_zeros();
        m
    }

    pub fn from_dense(d: &DenseMatrix) -> Self {
        let rows = (0..d.rows())
            .map(|i| {
                d.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j as u32, v))
                    .collect()
            })
            .collect();
        Self::from_rows(rows, d.cols(), d.field())
    }

    fn drop_zeros(&mut self) {
        if self.values.iter().all(|&v| v != 0) {
            return;
        }
        let mut indptr = Vec::with_capacity(self.rows + 1);
        let mut indices = Vec::with_capacity(self.indices.len());
        let mut values = Vec::with_capacity(self.values.len());
        indptr.push(0);
        for i in 0..self.rows {
            for k in self.indptr[i]..self.indptr[i + 1] {
                if self.values[k] != 0 {
                    indices.push(self.indices[k]);
                    values.push(self.values[k]);
                }
            }
            indptr.push(indices.len());
        }
        self.indptr = indptr;
        self.indices = indices;
        self.values = values;
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Row `i` as parallel slices of column indices and values.
    #[inline]
    pub fn row(&self, i: usize) -> (&[u32], &[u32]) {
        let r = self.indptr[i]..self.indptr[i + 1];
        (&self.indices[r.clone()], &self.values[r])
    }

    pub fn row_entries(&self, i: usize) -> Vec<(u32, u32)> {
        let (c, v) = self.row(i);
        c.iter().copied().zip(v.iter().copied()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        let (c, v) = self.row(i);
        match c.binary_search(&(j as u32)) {
            Ok(k) => v[k],
            Err(_) => 0,
        }
    }

    /// Triplets in lexicographic (row, col) order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.rows).flat_map(move |i| {
            let (c, v) = self.row(i);
            c.iter().zip(v).map(move |(&j, &x)| (i, j as usize, x))
        })
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let mut d = DenseMatrix::zeros(self.rows, self.cols, self.field);
        for (i, j, v) in self.triplets() {
            d.set(i, j, v);
        }
        d
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut counts = vec![0usize; self.cols + 1];
        for &j in &self.indices {
            counts[j as usize + 1] += 1;
        }
        for j in 0..self.cols {
            counts[j + 1] += counts[j];
        }
        let indptr = counts.clone();
        let mut next = counts;
        let mut indices = vec![0u32; self.nnz()];
        let mut values = vec![0u32; self.nnz()];
        for i in 0..self.rows {
            let (c, v) = self.row(i);
            for (&j, &x) in c.iter().zip(v) {
                let slot = next[j as usize];
                indices[slot] = i as u32;
                values[slot] = x;
                next[j as usize] += 1;
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            field: self.field,
            indptr,
            indices,
            values,
        }
    }

    fn check_field(&self, other: &SparseMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.p(), other.field.p()));
        }
        Ok(())
    }

    /// Matrix product `self * other` (Gustavson row-by-row).
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::dims(
                "mul",
                format!("{:?} * {:?}", self.shape(), other.shape()),
            ));
        }
        let f = self.field;
        let mut acc = vec![0u32; other.cols];
        let mut touched = vec![false; other.cols];
        let mut pattern: Vec<u32> = Vec::new();
        let mut out_rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let (ci, vi) = self.row(i);
            for (&k, &a) in ci.iter().zip(vi) {
                let (ck, vk) = other.row(k as usize);
                for (&j, &b) in ck.iter().zip(vk) {
                    let ju = j as usize;
                    if !touched[ju] {
                        touched[ju] = true;
                        pattern.push(j);
                    }
                    acc[ju] = f.mul_add(acc[ju], a, b);
                }
            }
            pattern.sort_unstable();
            let mut row = Vec::with_capacity(pattern.len());
            for &j in &pattern {
                let ju = j as usize;
                if acc[ju] != 0 {
                    row.push((j, acc[ju]));
                }
                acc[ju] = 0;
                touched[ju] = false;
            }
            pattern.clear();
            out_rows.push(row);
        }
        Ok(SparseMatrix::from_rows(out_rows, other.cols, f))
    }

    pub fn mul_vec(&self, v: &SparseVector) -> Result<SparseVector> {
        if v.dim != self.cols {
            return Err(Error::dims(
                "mul_vec",
                format!("{:?} * vector of length {}", self.shape(), v.dim),
            ));
        }
        let f = self.field;
        let dense = v.to_dense();
        let mut entries = Vec::new();
        for i in 0..self.rows {
            let (c, x) = self.row(i);
            let mut s = 0u64;
            for (&j, &a) in c.iter().zip(x) {
                s += a as u64 * dense[j as usize] as u64;
                if s >= 1 << 62 {
                    s %= f.p() as u64;
                }
            }
            let s = (s % f.p() as u64) as u32;
            if s != 0 {
                entries.push((i as u32, s));
            }
        }
        Ok(SparseVector {
            dim: self.rows,
            entries,
        })
    }

    /// `self + c * other`
    pub fn axpy(&self, c: u32, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::dims(
                "add",
                format!("{:?} + {:?}", self.shape(), other.shape()),
            ));
        }
        let rows = (0..self.rows)
            .map(|i| merge_axpy(self.field, &self.row_entries(i), c, &other.row_entries(i)))
            .collect();
        Ok(SparseMatrix::from_rows(rows, self.cols, self.field))
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.axpy(1, other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.axpy(self.field.p() - 1, other)
    }

    pub fn scale(&self, c: u32) -> SparseMatrix {
        let c = c % self.field.p();
        if c == 0 {
            return SparseMatrix::zero(self.rows, self.cols, self.field);
        }
        let mut m = self.clone();
        for v in &mut m.values {
            *v = self.field.mul(*v, c);
        }
        m
    }

    pub fn neg(&self) -> SparseMatrix {
        self.scale(self.field.p() - 1)
    }

    pub fn pow(&self, k: u32) -> Result<SparseMatrix> {
        if self.rows != self.cols {
            return Err(Error::dims("pow", format!("{:?} not square", self.shape())));
        }
        let mut acc = SparseMatrix::identity(self.rows, self.field);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product: entry `(i*rows_b + k, j*cols_b + l) = A[i,j] * B[k,l]`.
    pub fn kron(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_field(other)?;
        let f = self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let nnz = self.nnz() * other.nnz();
        let mut indptr = Vec::with_capacity(rows + 1);
        let mut indices = Vec::with_capacity(nnz);
        let mut values = Vec::with_capacity(nnz);
        indptr.push(0);
        for i in 0..self.rows {
            let (ca, va) = self.row(i);
            for k in 0..other.rows {
                let (cb, vb) = other.row(k);
                for (&j, &a) in ca.iter().zip(va) {
                    let base = j * other.cols as u32;
                    for (&l, &b) in cb.iter().zip(vb) {
                        indices.push(base + l);
                        values.push(f.mul(a, b));
                    }
                }
                indptr.push(indices.len());
            }
        }
        Ok(SparseMatrix {
            rows,
            cols,
            field: f,
            indptr,
            indices,
            values,
        })
    }

    pub fn hstack(blocks: &[&SparseMatrix]) -> Result<SparseMatrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::dims("hstack", "no blocks"))?;
        let rows = first.rows;
        let mut offsets = Vec::with_capacity(blocks.len());
        let mut cols = 0;
        for b in blocks {
            first.check_field(b)?;
            if b.rows != rows {
                return Err(Error::dims("hstack", "row counts differ"));
            }
            offsets.push(cols as u32);
            cols += b.cols;
        }
        let out_rows = (0..rows)
            .map(|i| {
                let mut row = Vec::new();
                for (b, &off) in blocks.iter().zip(&offsets) {
                    let (c, v) = b.row(i);
                    row.extend(c.iter().zip(v).map(|(&j, &x)| (j + off, x)));
                }
                row
            })
            .collect();
        Ok(SparseMatrix::from_rows(out_rows, cols, first.field))
    }

    pub fn vstack(blocks: &[&SparseMatrix]) -> Result<SparseMatrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::dims("vstack", "no blocks"))?;
        let cols = first.cols;
        let mut out_rows = Vec::new();
        for b in blocks {
            first.check_field(b)?;
            if b.cols != cols {
                return Err(Error::dims("vstack", "column counts differ"));
            }
            out_rows.extend((0..b.rows).map(|i| b.row_entries(i)));
        }
        Ok(SparseMatrix::from_rows(out_rows, cols, first.field))
    }

    pub fn block_diag(blocks: &[&SparseMatrix]) -> Result<SparseMatrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::dims("block_diag", "no blocks"))?;
        let mut out_rows = Vec::new();
        let mut col_off = 0u32;
        for b in blocks {
            first.check_field(b)?;
            for i in 0..b.rows {
                let (c, v) = b.row(i);
                out_rows.push(c.iter().zip(v).map(|(&j, &x)| (j + col_off, x)).collect());
            }
            col_off += b.cols as u32;
        }
        Ok(SparseMatrix::from_rows(out_rows, col_off as usize, first.field))
    }

    /// Write `block` into a new matrix of shape `rows x cols` at `(r0, c0)`.
    pub fn embed(&self, rows: usize, cols: usize, r0: usize, c0: usize) -> SparseMatrix {
        assert!(r0 + self.rows <= rows && c0 + self.cols <= cols);
        let mut out_rows = vec![Vec::new(); rows];
        for i in 0..self.rows {
            let (c, v) = self.row(i);
            out_rows[r0 + i] = c.iter().zip(v).map(|(&j, &x)| (j + c0 as u32, x)).collect();
        }
        SparseMatrix::from_rows(out_rows, cols, self.field)
    }

    /// Submatrix of rows `[r0, r0+nr)` and columns `[c0, c0+nc)`.
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> SparseMatrix {
        let (lo, hi) = (c0 as u32, (c0 + nc) as u32);
        let out_rows = (r0..r0 + nr)
            .map(|i| {
                let (c, v) = self.row(i);
                c.iter()
                    .zip(v)
                    .filter(|(&j, _)| j >= lo && j < hi)
                    .map(|(&j, &x)| (j - lo, x))
                    .collect()
            })
            .collect();
        SparseMatrix::from_rows(out_rows, nc, self.field)
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVector> {
        let t = self.transpose();
        (0..t.rows)
            .map(|j| SparseVector {
                dim: self.rows,
                entries: t.row_entries(j),
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> SparseVector {
        let entries = (0..self.rows)
            .filter_map(|i| {
                let v = self.get(i, j);
                (v != 0).then_some((i as u32, v))
            })
            .collect();
        SparseVector {
            dim: self.rows,
            entries,
        }
    }

    /// Submatrix of the selected columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> SparseMatrix {
        let all = self.columns();
        let picked: Vec<SparseVector> = cols.iter().map(|&j| all[j].clone()).collect();
        SparseMatrix::from_columns(self.rows, &picked, self.field)
    }

    /// Apply `f` to each stored value and rebuild (used for sign twists).
    pub fn map_values(&self, mut g: impl FnMut(usize, usize, u32) -> u32) -> SparseMatrix {
        let rows = (0..self.rows)
            .map(|i| {
                let (c, v) = self.row(i);
                c.iter()
                    .zip(v)
                    .filter_map(|(&j, &x)| {
                        let y = g(i, j as usize, x) % self.field.p();
                        (y != 0).then_some((j, y))
                    })
                    .collect()
            })
            .collect();
        SparseMatrix::from_rows(rows, self.cols, self.field)
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            p: self.field.p(),
            triplets: self.triplets().map(|(i, j, v)| [i, j, v as usize]).collect(),
        }
    }

    pub fn from_json(m: &MatrixJson) -> Result<SparseMatrix> {
        let field = FieldPrime::new(m.p)?;
        let mut prev: Option<(usize, usize)> = None;
        for t in &m.triplets {
            let key = (t[0], t[1]);
            if prev.is_some_and(|p| p >= key) {
                return Err(Error::invariant("triplets must be sorted and unique"));
            }
            if t[2] == 0 || t[2] >= m.p as usize {
                return Err(Error::invariant(format!(
                    "triplet value {} not in [1, {})",
                    t[2], m.p
                )));
            }
            prev = Some(key);
        }
        SparseMatrix::from_triplets(
            m.rows,
            m.cols,
            field,
            m.triplets.iter().map(|t| (t[0], t[1], t[2] as u32)).collect(),
        )
    }
}

/// Wire form of a matrix: `{"rows":R,"cols":C,"p":P,"triplets":[[i,j,v],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub p: u32,
    pub triplets: Vec<[usize; 3]>,
}

impl Serialize for SparseMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparseMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = MatrixJson::deserialize(d)?;
        SparseMatrix::from_json(&m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldPrime {
        FieldPrime::new(3).unwrap()
    }

    #[test]
    fn triplets_are_canonicalized() {
        let m = SparseMatrix::from_triplets(2, 2, f3(), vec![(1, 1, 2), (0, 0, 1), (1, 1, 1), (0, 1, 5)])
            .unwrap();
        assert_eq!(m.triplets().collect::<Vec<_>>(), vec![(0, 0, 1), (0, 1, 2)]);
    }

    #[test]
    fn kron_identities() {
        let f = f3();
        let i2 = SparseMatrix::identity(2, f);
        let i3 = SparseMatrix::identity(3, f);
        assert_eq!(i2.kron(&i3).unwrap(), SparseMatrix::identity(6, f));
        let a = SparseMatrix::from_triplets(2, 3, f, vec![(0, 1, 2), (1, 2, 1)]).unwrap();
        assert_eq!(a.kron(&SparseMatrix::identity(1, f)).unwrap(), a);
        let b = SparseMatrix::from_triplets(2, 2, f, vec![(0, 0, 1), (1, 0, 2)]).unwrap();
        let k = a.kron(&b).unwrap();
        assert_eq!(k.shape(), (4, 6));
        // (i*2+k, j*2+l) = a[i][j] b[k][l]
        assert_eq!(k.get(3, 4), 2);
        assert_eq!(k.get(1, 2), 1);
    }

    #[test]
    fn mul_and_transpose() {
        let f = f3();
        let a = SparseMatrix::from_triplets(2, 3, f, vec![(0, 0, 1), (0, 2, 2), (1, 1, 1)]).unwrap();
        let at = a.transpose();
        let g = a.mul(&at).unwrap();
        assert_eq!(g.to_dense().data(), &[5 % 3, 0, 0, 1]);
        assert!(a.mul(&a).is_err());
    }

    #[test]
    fn json_rejects_unsorted() {
        let j = MatrixJson {
            rows: 2,
            cols: 2,
            p: 3,
            triplets: vec![[1, 0, 1], [0, 0, 1]],
        };
        assert!(SparseMatrix::from_json(&j).is_err());
    }
}
