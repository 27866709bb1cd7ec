//! Gaussian elimination over GF(p).
//!
//! Every entry point funnels into [`triangularize`], which reduces a row list to
//! upper-triangular form: pivot rows are emitted in elimination order and a pivot
//! row never contains a column pivoted before it. Small inputs go straight to a
//! dense kernel. Larger inputs use a Markowitz-style sparse elimination (pivot
//! column of minimal count, then shortest row) and hand the active submatrix to
//! the dense kernel once it fills in past the configured density.
//!
//! Ties are always broken by lowest column index, then lowest row index, so the
//! output is a deterministic function of the input.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::dense::DenseMatrix;
use super::field::FieldPrime;
use super::sparse::{merge_axpy, SparseMatrix, SparseVector};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct EliminationConfig {
    /// Inputs with fewer than this many entries (rows * cols) use the dense kernel.
    pub dense_entry_threshold: usize,
    /// Active-submatrix density at which sparse elimination switches to dense.
    pub fallback_density: f64,
    /// Never densify an active submatrix larger than this many entries.
    pub max_dense_entries: usize,
}

impl Default for EliminationConfig {
    fn default() -> Self {
        EliminationConfig {
            dense_entry_threshold: 10_000,
            fallback_density: 0.2,
            max_dense_entries: 16_000_000,
        }
    }
}

type Row = Vec<(u32, u32)>;

/// Upper-triangular factor produced by elimination.
pub(crate) struct Triangular {
    field: FieldPrime,
    ncols: usize,
    /// `(pivot column, row)` in elimination order.
    pivots: Vec<(u32, Row)>,
    /// Rows left with entries only in non-pivotable columns.
    residual: Vec<Row>,
}

pub(crate) fn triangularize(
    field: FieldPrime,
    rows: Vec<Row>,
    ncols: usize,
    pivotable: usize,
    cfg: &EliminationConfig,
) -> Triangular {
    if rows.len().saturating_mul(ncols) < cfg.dense_entry_threshold {
        let local: Vec<u32> = (0..ncols as u32).collect();
        dense_triangularize(field, &rows, &local, pivotable)
    } else {
        sparse_triangularize(field, rows, ncols, pivotable, cfg)
    }
}

/// Dense kernel on the given rows restricted to `cols` (sorted global indices).
/// Columns whose global index is `< pivotable` may be pivots.
fn dense_triangularize(field: FieldPrime, rows: &[Row], cols: &[u32], pivotable: usize) -> Triangular {
    let ncols_global = cols.last().map_or(0, |&c| c as usize + 1);
    let w = cols.len();
    let n = rows.len();
    let local: HashMap<u32, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut data = vec![0u32; n * w];
    for (i, row) in rows.iter().enumerate() {
        for &(c, v) in row {
            data[i * w + local[&c]] = v;
        }
    }
    let p = field.p() as u64;
    let npiv_cols = cols.iter().take_while(|&&c| (c as usize) < pivotable).count();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for col in 0..npiv_cols {
        let Some(r) = (rank..n).find(|&r| data[r * w + col] != 0) else {
            continue;
        };
        if r != rank {
            for j in col..w {
                data.swap(r * w + j, rank * w + j);
            }
        }
        let inv = field.inv(data[rank * w + col]) as u64;
        let (head, tail) = data.split_at_mut((rank + 1) * w);
        let prow = &head[rank * w..];
        for chunk in tail.chunks_exact_mut(w) {
            let a = chunk[col];
            if a == 0 {
                continue;
            }
            let factor = (p - (a as u64 * inv) % p) % p;
            for j in col..w {
                let b = prow[j];
                if b != 0 {
                    chunk[j] = ((chunk[j] as u64 + factor * b as u64) % p) as u32;
                }
            }
        }
        let row: Row = (col..w)
            .filter(|&j| prow[j] != 0)
            .map(|j| (cols[j], prow[j]))
            .collect();
        pivots.push((cols[col], row));
        rank += 1;
    }
    let residual = (rank..n)
        .map(|r| {
            (0..w)
                .filter(|&j| data[r * w + j] != 0)
                .map(|j| (cols[j], data[r * w + j]))
                .collect::<Row>()
        })
        .filter(|row| !row.is_empty())
        .collect();
    Triangular {
        field,
        ncols: ncols_global,
        pivots,
        residual,
    }
}

fn sparse_triangularize(
    field: FieldPrime,
    mut rows: Vec<Row>,
    ncols: usize,
    pivotable: usize,
    cfg: &EliminationConfig,
) -> Triangular {
    let mut active: Vec<bool> = rows.iter().map(|r| !r.is_empty()).collect();
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); ncols];
    let mut col_count = vec![0u32; ncols];
    let mut active_nnz = 0usize;
    for (i, row) in rows.iter().enumerate() {
        active_nnz += row.len();
        for &(c, _) in row {
            col_rows[c as usize].push(i as u32);
            col_count[c as usize] += 1;
        }
    }
    let mut active_rows = active.iter().filter(|&&a| a).count();
    let mut active_cols = col_count.iter().filter(|&&c| c > 0).count();
    let mut heap: BinaryHeap<Reverse<(u32, u32)>> = (0..pivotable.min(ncols))
        .filter(|&c| col_count[c] > 0)
        .map(|c| Reverse((col_count[c], c as u32)))
        .collect();
    let mut done = vec![false; ncols];
    let mut dirty: Vec<u32> = Vec::new();
    let mut is_dirty = vec![false; ncols];
    let mut pivots: Vec<(u32, Row)> = Vec::new();
    let mut steps = 0usize;

    macro_rules! touch {
        ($c:expr) => {{
            let c = $c as usize;
            if !is_dirty[c] {
                is_dirty[c] = true;
                dirty.push(c as u32);
            }
        }};
    }

    while let Some(Reverse((cnt, c))) = heap.pop() {
        let cu = c as usize;
        if done[cu] || col_count[cu] != cnt || cnt == 0 {
            continue;
        }
        steps += 1;
        if steps.is_multiple_of(64) {
            let area = active_rows.saturating_mul(active_cols);
            if area > 0
                && area <= cfg.max_dense_entries
                && active_nnz as f64 > cfg.fallback_density * area as f64
            {
                heap.push(Reverse((cnt, c)));
                break;
            }
        }

        let mut cand: Vec<u32> = std::mem::take(&mut col_rows[cu])
            .into_iter()
            .filter(|&r| {
                active[r as usize]
                    && rows[r as usize].binary_search_by_key(&c, |e| e.0).is_ok()
            })
            .collect();
        cand.sort_unstable();
        cand.dedup();
        debug_assert_eq!(cand.len(), cnt as usize);
        let &piv = cand
            .iter()
            .min_by_key(|&&r| (rows[r as usize].len(), r))
            .expect("column count positive");
        let prow = std::mem::take(&mut rows[piv as usize]);
        active[piv as usize] = false;
        active_rows -= 1;
        active_nnz -= prow.len();
        for &(cc, _) in &prow {
            let k = &mut col_count[cc as usize];
            *k -= 1;
            if *k == 0 {
                active_cols -= 1;
            }
            touch!(cc);
        }
        let pval = prow[prow.binary_search_by_key(&c, |e| e.0).unwrap()].1;
        let inv = field.inv(pval);
        for &r in &cand {
            if r == piv {
                continue;
            }
            let ru = r as usize;
            let old = std::mem::take(&mut rows[ru]);
            let a = old[old.binary_search_by_key(&c, |e| e.0).unwrap()].1;
            let factor = field.neg(field.mul(a, inv));
            let new = merge_axpy(field, &old, factor, &prow);
            // bookkeeping for columns gained or lost
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < new.len() {
                let co = old.get(i).map(|e| e.0);
                let cn = new.get(j).map(|e| e.0);
                match (co, cn) {
                    (Some(x), Some(y)) if x == y => {
                        i += 1;
                        j += 1;
                    }
                    (Some(x), y) if y.is_none_or(|y| x < y) => {
                        let k = &mut col_count[x as usize];
                        *k -= 1;
                        if *k == 0 {
                            active_cols -= 1;
                        }
                        touch!(x);
                        i += 1;
                    }
                    (_, Some(y)) => {
                        let k = &mut col_count[y as usize];
                        if *k == 0 {
                            active_cols += 1;
                        }
                        *k += 1;
                        col_rows[y as usize].push(r);
                        touch!(y);
                        j += 1;
                    }
                    _ => unreachable!(),
                }
            }
            active_nnz = active_nnz + new.len() - old.len();
            if new.is_empty() {
                active[ru] = false;
                active_rows -= 1;
            }
            rows[ru] = new;
        }
        debug_assert_eq!(col_count[cu], 0);
        done[cu] = true;
        for &d in &dirty {
            is_dirty[d as usize] = false;
            let du = d as usize;
            if du < pivotable && !done[du] && col_count[du] > 0 {
                heap.push(Reverse((col_count[du], d)));
            }
        }
        dirty.clear();
        pivots.push((c, prow));
    }

    let rest: Vec<Row> = rows
        .into_iter()
        .enumerate()
        .filter(|(i, r)| active[*i] && !r.is_empty())
        .map(|(_, r)| r)
        .collect();
    if heap.is_empty() {
        return Triangular {
            field,
            ncols,
            pivots,
            residual: rest,
        };
    }
    // Dense fallback on the active submatrix.
    let cols: Vec<u32> = (0..ncols as u32)
        .filter(|&c| col_count[c as usize] > 0)
        .collect();
    log::debug!(
        "dense fallback: {} x {} after {} sparse pivots",
        rest.len(),
        cols.len(),
        pivots.len()
    );
    let tail = dense_triangularize(field, &rest, &cols, pivotable);
    pivots.extend(tail.pivots);
    Triangular {
        field,
        ncols,
        pivots,
        residual: tail.residual,
    }
}

impl Triangular {
    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn pivot_cols_sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.pivots.iter().map(|p| p.0 as usize).collect();
        v.sort_unstable();
        v
    }

    /// Solve the triangular system with the given columns fixed to values and all
    /// other non-pivot columns zero. Returns values on columns `< limit`.
    fn back_substitute(&self, seeds: &[(u32, u32)], limit: usize, index: &PivotIndex) -> SparseVector {
        let f = self.field;
        let mut x: HashMap<u32, u32> = seeds.iter().copied().collect();
        let mut heap: BinaryHeap<usize> = BinaryHeap::new();
        let mut queued = std::collections::HashSet::new();
        for &(c, _) in seeds {
            for &k in index.rows_touching(c) {
                if queued.insert(k) {
                    heap.push(k);
                }
            }
        }
        while let Some(k) = heap.pop() {
            let (pc, row) = &self.pivots[k];
            let mut s = 0u32;
            let mut pv = 0u32;
            for &(c, v) in row {
                if c == *pc {
                    pv = v;
                } else if let Some(&xc) = x.get(&c) {
                    s = f.mul_add(s, v, xc);
                }
            }
            if s == 0 {
                continue;
            }
            let val = f.neg(f.mul(s, f.inv(pv)));
            x.insert(*pc, val);
            for &k2 in index.rows_touching(*pc) {
                if queued.insert(k2) {
                    heap.push(k2);
                }
            }
        }
        let mut entries: Vec<(u32, u32)> = x
            .into_iter()
            .filter(|&(c, v)| (c as usize) < limit && v != 0)
            .collect();
        entries.sort_unstable();
        SparseVector {
            dim: limit,
            entries,
        }
    }
}

/// For each column, the pivot rows (by elimination index) that contain it
/// other than as their own pivot.
struct PivotIndex {
    by_col: Vec<Vec<usize>>,
}

impl PivotIndex {
    fn new(t: &Triangular) -> Self {
        let mut by_col = vec![Vec::new(); t.ncols];
        for (k, (pc, row)) in t.pivots.iter().enumerate() {
            for &(c, _) in row {
                if c != *pc {
                    by_col[c as usize].push(k);
                }
            }
        }
        PivotIndex { by_col }
    }

    fn rows_touching(&self, c: u32) -> &[usize] {
        self.by_col.get(c as usize).map_or(&[], |v| v.as_slice())
    }
}

fn matrix_rows(m: &SparseMatrix) -> Vec<Row> {
    (0..m.rows()).map(|i| m.row_entries(i)).collect()
}

pub(crate) fn dense_rank(m: &DenseMatrix) -> usize {
    let rows: Vec<Row> = (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j as u32, v))
                .collect()
        })
        .collect();
    let cols: Vec<u32> = (0..m.cols() as u32).collect();
    dense_triangularize(m.field(), &rows, &cols, m.cols()).rank()
}

/// Outcome of a full elimination.
#[derive(Clone, Debug)]
pub struct EchelonResult {
    pub rank: usize,
    /// Pivot columns in ascending order; these columns of the input are independent.
    pub pivot_cols: Vec<usize>,
    /// Columns span the kernel.
    pub nullspace: SparseMatrix,
}

pub fn rank(m: &SparseMatrix) -> usize {
    rank_with(m, &EliminationConfig::default())
}

pub fn rank_with(m: &SparseMatrix, cfg: &EliminationConfig) -> usize {
    triangularize(m.field(), matrix_rows(m), m.cols(), m.cols(), cfg).rank()
}

/// Rank and independent pivot columns, without the kernel.
pub fn pivot_columns(m: &SparseMatrix) -> Vec<usize> {
    triangularize(
        m.field(),
        matrix_rows(m),
        m.cols(),
        m.cols(),
        &EliminationConfig::default(),
    )
    .pivot_cols_sorted()
}

pub fn echelon(m: &SparseMatrix) -> EchelonResult {
    echelon_with(m, &EliminationConfig::default())
}

pub fn echelon_with(m: &SparseMatrix, cfg: &EliminationConfig) -> EchelonResult {
    let t = triangularize(m.field(), matrix_rows(m), m.cols(), m.cols(), cfg);
    let pivot_cols = t.pivot_cols_sorted();
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let index = PivotIndex::new(&t);
    let null: Vec<SparseVector> = (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|c| t.back_substitute(&[(c as u32, 1)], m.cols(), &index))
        .collect();
    let rank = t.rank();
    assert_eq!(
        rank + null.len(),
        m.cols(),
        "rank-nullity violated: {rank} + {} != {}",
        null.len(),
        m.cols()
    );
    EchelonResult {
        rank,
        pivot_cols,
        nullspace: SparseMatrix::from_columns(m.cols(), &null, m.field()),
    }
}

pub fn nullspace(m: &SparseMatrix) -> SparseMatrix {
    echelon(m).nullspace
}

/// Solve `m * X = rhs` for all right-hand-side columns at once. `Ok(None)` if
/// any column is inconsistent.
pub fn solve_many(m: &SparseMatrix, rhs: &SparseMatrix) -> Result<Option<SparseMatrix>> {
    if m.field() != rhs.field() {
        return Err(Error::FieldMismatch(m.field().p(), rhs.field().p()));
    }
    if rhs.rows() != m.rows() {
        return Err(Error::dims(
            "solve",
            format!("matrix {:?} with right-hand side {:?}", m.shape(), rhs.shape()),
        ));
    }
    let f = m.field();
    let n = m.cols();
    let rows: Vec<Row> = (0..m.rows())
        .map(|i| {
            let mut r = m.row_entries(i);
            let (c, v) = rhs.row(i);
            r.extend(c.iter().zip(v).map(|(&j, &x)| (j + n as u32, x)));
            r
        })
        .collect();
    let t = triangularize(f, rows, n + rhs.cols(), n, &EliminationConfig::default());
    if !t.residual.is_empty() {
        return Ok(None);
    }
    let index = PivotIndex::new(&t);
    let minus_one = f.p() - 1;
    let sols: Vec<SparseVector> = (0..rhs.cols())
        .map(|j| t.back_substitute(&[((n + j) as u32, minus_one)], n, &index))
        .collect();
    Ok(Some(SparseMatrix::from_columns(n, &sols, f)))
}

pub fn solve(m: &SparseMatrix, b: &SparseVector) -> Result<Option<SparseVector>> {
    let rhs = SparseMatrix::from_columns(b.dim, std::slice::from_ref(b), m.field());
    if b.dim != m.rows() {
        return Err(Error::dims(
            "solve",
            format!("matrix {:?} with vector of length {}", m.shape(), b.dim),
        ));
    }
    Ok(solve_many(m, &rhs)?.map(|x| x.columns().pop().unwrap()))
}

/// Fully reduced row-echelon basis of the span of `rows`: each returned row is
/// normalized to 1 at its pivot and vanishes at every other pivot. Sorted by pivot.
pub(crate) fn reduced_basis(field: FieldPrime, rows: Vec<Row>, ncols: usize) -> Vec<(u32, Row)> {
    let t = triangularize(field, rows, ncols, ncols, &EliminationConfig::default());
    let mut pivot_pos: HashMap<u32, usize> = HashMap::new();
    let mut reduced: Vec<(u32, Row)> = Vec::with_capacity(t.pivots.len());
    // later pivots first: a pivot row only contains later pivot columns
    for (pc, row) in t.pivots.into_iter().rev() {
        let a = row[row.binary_search_by_key(&pc, |e| e.0).unwrap()].1;
        let mut cur = row;
        let mut k = 0;
        while k < cur.len() {
            let (c, v) = cur[k];
            match pivot_pos.get(&c) {
                Some(&pos) if c != pc => {
                    cur = merge_axpy(field, &cur, field.neg(v), &reduced[pos].1);
                    k = cur.partition_point(|e| e.0 < c);
                }
                _ => k += 1,
            }
        }
        let inv = field.inv(a);
        let cur: Row = cur.into_iter().map(|(c, v)| (c, field.mul(v, inv))).collect();
        pivot_pos.insert(pc, reduced.len());
        reduced.push((pc, cur));
    }
    reduced.sort_unstable_by_key(|e| e.0);
    reduced
}

/// Row-echelon basis built one vector at a time; leading entries normalized to 1.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    field: FieldPrime,
    dim: usize,
    lead: HashMap<u32, usize>,
    vecs: Vec<Row>,
}

impl IncrementalBasis {
    pub fn new(field: FieldPrime, dim: usize) -> Self {
        IncrementalBasis {
            field,
            dim,
            lead: HashMap::new(),
            vecs: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vecs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vecs.is_empty()
    }

    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        assert_eq!(v.dim, self.dim);
        let f = self.field;
        let mut cur = v.entries.clone();
        let mut k = 0;
        while k < cur.len() {
            let (c, a) = cur[k];
            if let Some(&b) = self.lead.get(&c) {
                cur = merge_axpy(f, &cur, f.neg(a), &self.vecs[b]);
                // entries before position k are unchanged; column c is now zero
            } else {
                k += 1;
            }
        }
        SparseVector {
            dim: self.dim,
            entries: cur,
        }
    }

    pub fn contains(&self, v: &SparseVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`; returns `true` if it was independent of the current basis.
    pub fn insert(&mut self, v: &SparseVector) -> bool {
        let r = self.reduce(v);
        let Some(&(c, a)) = r.entries.first() else {
            return false;
        };
        let inv = self.field.inv(a);
        let normalized = r.scale(self.field, inv).entries;
        self.lead.insert(c, self.vecs.len());
        self.vecs.push(normalized);
        true
    }
}

/// Columns of `quotient_of` that, together with `subspace`, span the same space
/// and are independent modulo `subspace`. Greedy in column order.
pub fn complement_in(quotient_of: &SparseMatrix, subspace: &SparseMatrix) -> Result<SparseMatrix> {
    if quotient_of.rows() != subspace.rows() {
        return Err(Error::dims(
            "complement_in",
            format!("{:?} vs {:?}", quotient_of.shape(), subspace.shape()),
        ));
    }
    let f = quotient_of.field();
    let mut span_v = IncrementalBasis::new(f, quotient_of.rows());
    let vcols = quotient_of.columns();
    for c in &vcols {
        span_v.insert(c);
    }
    let mut basis = IncrementalBasis::new(f, quotient_of.rows());
    for w in subspace.columns() {
        if !span_v.contains(&w) {
            return Err(Error::NotContained);
        }
        basis.insert(&w);
    }
    let picked: Vec<SparseVector> = vcols.into_iter().filter(|c| basis.insert(c)).collect();
    Ok(SparseMatrix::from_columns(quotient_of.rows(), &picked, f))
}
