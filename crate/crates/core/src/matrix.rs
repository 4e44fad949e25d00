//! Dense matrices over [`FieldSpec`].
//!
//! Row vectors are 1-row matrices and act on the right: `v -> v * m`.
//! Over GF(2) rows are packed into 64-bit words; everywhere else one
//! [`Elem`] per entry is stored. The packing is never visible through the
//! public API.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, FieldSpec};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Store {
    Dense(Vec<Elem>),
    Bits { words: usize, data: Vec<u64> },
}

#[derive(Clone)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    store: Store,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.store == other.store
    }
}
impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} {}x{}", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

fn is_gf2(f: &FieldSpec) -> bool {
    f.p() == 2 && f.k() == 1
}

impl Matrix {
    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        let store = if is_gf2(field) {
            let words = cols.div_ceil(64);
            Store::Bits {
                words,
                data: vec![0; words * rows],
            }
        } else {
            Store::Dense(vec![0; rows * cols])
        };
        Matrix {
            field: field.clone(),
            rows,
            cols,
            store,
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Scalar multiple of the identity.
    pub fn scalar(field: &FieldSpec, n: usize, c: Elem) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_fn(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Self {
        let mut m = Self::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                if v != 0 {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    /// Builds a matrix from explicit rows; entries must lie in `[0, q)`.
    pub fn from_rows(field: &FieldSpec, rows: &[Vec<Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zero(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::SizeMismatch("ragged rows".into()));
            }
            for (j, &v) in r.iter().enumerate() {
                if v as u32 >= field.order() {
                    return Err(Error::OutOfRange(v as usize));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// A single row vector.
    pub fn row_vector(field: &FieldSpec, v: &[Elem]) -> Self {
        Self::from_fn(field, 1, v.len(), |_, j| v[j])
    }

    /// Standard basis vector `e_i` of length `n`.
    pub fn unit_vector(field: &FieldSpec, n: usize, i: usize) -> Self {
        let mut m = Self::zero(field, 1, n);
        m.set(0, i, 1);
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.store {
            Store::Dense(d) => d[i * self.cols + j],
            Store::Bits { words, data } => ((data[i * words + j / 64] >> (j % 64)) & 1) as Elem,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        debug_assert!(i < self.rows && j < self.cols);
        let cols = self.cols;
        match &mut self.store {
            Store::Dense(d) => d[i * cols + j] = v,
            Store::Bits { words, data } => {
                let w = &mut data[i * *words + j / 64];
                if v & 1 == 1 {
                    *w |= 1 << (j % 64);
                } else {
                    *w &= !(1 << (j % 64));
                }
            }
        }
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Row `i` as a 1-row matrix.
    pub fn row_matrix(&self, i: usize) -> Matrix {
        self.select_rows(&[i])
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zero(&self.field, idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            m.copy_row_from(r, self, i);
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn row_range(&self, start: usize, end: usize) -> Matrix {
        let idx: Vec<usize> = (start..end).collect();
        self.select_rows(&idx)
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Dense(d) => d.iter().all(|&x| x == 0),
            Store::Bits { data, .. } => data.iter().all(|&x| x == 0),
        }
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        match &self.store {
            Store::Dense(d) => d[i * self.cols..(i + 1) * self.cols].iter().all(|&x| x == 0),
            Store::Bits { words, data } => data[i * words..(i + 1) * words].iter().all(|&x| x == 0),
        }
    }

    /// First nonzero column of row `i`.
    pub fn leading_col(&self, i: usize) -> Option<usize> {
        match &self.store {
            Store::Dense(d) => d[i * self.cols..(i + 1) * self.cols]
                .iter()
                .position(|&x| x != 0),
            Store::Bits { words, data } => {
                for w in 0..*words {
                    let x = data[i * words + w];
                    if x != 0 {
                        return Some(w * 64 + x.trailing_zeros() as usize);
                    }
                }
                None
            }
        }
    }

    /// Number of nonzero entries in row `i`.
    pub fn row_weight(&self, i: usize) -> usize {
        match &self.store {
            Store::Dense(d) => d[i * self.cols..(i + 1) * self.cols]
                .iter()
                .filter(|&&x| x != 0)
                .count(),
            Store::Bits { words, data } => data[i * words..(i + 1) * words]
                .iter()
                .map(|x| x.count_ones() as usize)
                .sum(),
        }
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    // ---- row kernels ----

    /// `self[dst] += c * src_m[src]`.
    pub(crate) fn row_axpy(&mut self, dst: usize, c: Elem, src_m: &Matrix, src: usize) {
        if c == 0 {
            return;
        }
        let cols = self.cols;
        match (&mut self.store, &src_m.store) {
            (Store::Dense(d), Store::Dense(s)) => {
                let srow = &s[src * cols..(src + 1) * cols];
                self.field.axpy(&mut d[dst * cols..(dst + 1) * cols], c, srow);
            }
            (Store::Bits { words, data }, Store::Bits { data: s, .. }) => {
                let w = *words;
                for k in 0..w {
                    data[dst * w + k] ^= s[src * w + k];
                }
            }
            _ => unreachable!("mixed storage"),
        }
    }

    /// `self[dst] += c * self[src]`.
    pub(crate) fn row_axpy_self(&mut self, dst: usize, c: Elem, src: usize) {
        if c == 0 || dst == src {
            return;
        }
        let cols = self.cols;
        match &mut self.store {
            Store::Dense(d) => {
                let (a, b) = if dst < src {
                    let (lo, hi) = d.split_at_mut(src * cols);
                    (&mut lo[dst * cols..(dst + 1) * cols], &hi[..cols])
                } else {
                    let (lo, hi) = d.split_at_mut(dst * cols);
                    (&mut hi[..cols], &lo[src * cols..(src + 1) * cols])
                };
                self.field.axpy(a, c, b);
            }
            Store::Bits { words, data } => {
                let w = *words;
                for k in 0..w {
                    let v = data[src * w + k];
                    data[dst * w + k] ^= v;
                }
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, c: Elem) {
        if c == 1 {
            return;
        }
        let cols = self.cols;
        match &mut self.store {
            Store::Dense(d) => self.field.scale(&mut d[i * cols..(i + 1) * cols], c),
            Store::Bits { words, data } => {
                if c == 0 {
                    let w = *words;
                    data[i * w..(i + 1) * w].iter_mut().for_each(|x| *x = 0);
                }
            }
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        match &mut self.store {
            Store::Dense(d) => {
                for j in 0..cols {
                    d.swap(a * cols + j, b * cols + j);
                }
            }
            Store::Bits { words, data } => {
                let w = *words;
                for k in 0..w {
                    data.swap(a * w + k, b * w + k);
                }
            }
        }
    }

    pub(crate) fn copy_row_from(&mut self, dst: usize, src_m: &Matrix, src: usize) {
        let cols = self.cols;
        match (&mut self.store, &src_m.store) {
            (Store::Dense(d), Store::Dense(s)) => {
                d[dst * cols..(dst + 1) * cols].copy_from_slice(&s[src * cols..(src + 1) * cols])
            }
            (Store::Bits { words, data }, Store::Bits { data: s, .. }) => {
                let w = *words;
                data[dst * w..(dst + 1) * w].copy_from_slice(&s[src * w..(src + 1) * w])
            }
            _ => unreachable!("mixed storage"),
        }
    }

    /// Appends the rows of `other` below `self`.
    pub fn push_rows(&mut self, other: &Matrix) {
        assert_eq!(self.cols, other.cols);
        match (&mut self.store, &other.store) {
            (Store::Dense(d), Store::Dense(s)) => d.extend_from_slice(s),
            (Store::Bits { data, .. }, Store::Bits { data: s, .. }) => data.extend_from_slice(s),
            _ => unreachable!("mixed storage"),
        }
        self.rows += other.rows;
    }

    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::SizeMismatch("vstack column mismatch".into()));
        }
        if self.rows == 0 {
            return Ok(other.clone());
        }
        let mut m = self.clone();
        if other.rows > 0 {
            m.push_rows(other);
        }
        Ok(m)
    }

    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::SizeMismatch("hstack row mismatch".into()));
        }
        let c = self.cols;
        Ok(Matrix::from_fn(&self.field, self.rows, c + other.cols, |i, j| {
            if j < c {
                self.get(i, j)
            } else {
                other.get(i, j - c)
            }
        }))
    }

    // ---- algebra ----

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        let (n, m, l) = (self.rows, self.cols, other.cols);
        let mut out = Matrix::zero(&self.field, n, l);
        match (&self.store, &other.store, &mut out.store) {
            (Store::Bits { words: wa, data: a }, Store::Bits { words: wb, data: b }, Store::Bits { data: c, .. }) => {
                let (wa, wb) = (*wa, *wb);
                for i in 0..n {
                    let crow = &mut c[i * wb..(i + 1) * wb];
                    for kw in 0..wa {
                        let mut x = a[i * wa + kw];
                        while x != 0 {
                            let t = x.trailing_zeros() as usize;
                            x &= x - 1;
                            let k = kw * 64 + t;
                            let brow = &b[k * wb..(k + 1) * wb];
                            for (cw, bw) in crow.iter_mut().zip(brow) {
                                *cw ^= bw;
                            }
                        }
                    }
                }
            }
            (Store::Dense(a), Store::Dense(b), Store::Dense(c)) => {
                if self.field.is_prime_field() {
                    let p = self.field.p();
                    let pm = (p - 1) as u64;
                    let limit = ((u32::MAX as u64) / (pm * pm).max(1)).max(1) as usize;
                    let mut acc = vec![0u32; l];
                    for i in 0..n {
                        acc.iter_mut().for_each(|x| *x = 0);
                        let mut pending = 0;
                        for k in 0..m {
                            let aik = a[i * m + k] as u32;
                            if aik == 0 {
                                continue;
                            }
                            let brow = &b[k * l..(k + 1) * l];
                            for (x, &bv) in acc.iter_mut().zip(brow) {
                                *x += aik * bv as u32;
                            }
                            pending += 1;
                            if pending == limit {
                                acc.iter_mut().for_each(|x| *x %= p);
                                pending = 0;
                            }
                        }
                        for (cv, &x) in c[i * l..(i + 1) * l].iter_mut().zip(&acc) {
                            *cv = (x % p) as Elem;
                        }
                    }
                } else {
                    for i in 0..n {
                        for k in 0..m {
                            let aik = a[i * m + k];
                            if aik != 0 {
                                let (crow, brow) = (&mut c[i * l..(i + 1) * l], &b[k * l..(k + 1) * l]);
                                self.field.axpy(crow, aik, brow);
                            }
                        }
                    }
                }
            }
            _ => unreachable!("mixed storage"),
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch("add".into()));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            out.row_axpy(i, 1, other, i);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scaled(self.field.neg(1)))
    }

    /// `self + c * other`, in place.
    pub fn axpy(&mut self, c: Elem, other: &Matrix) {
        debug_assert!(self.rows == other.rows && self.cols == other.cols);
        for i in 0..self.rows {
            self.row_axpy(i, c, other, i);
        }
    }

    pub fn scaled(&self, c: Elem) -> Matrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            out.scale_row(i, c);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Entrywise Frobenius `x -> x^p`.
    pub fn frobenius(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, self.cols, |i, j| {
            self.field.frobenius(self.get(i, j))
        })
    }

    /// Kronecker product; row index `(i_a, i_b)` in lexicographic order.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        let (r2, c2) = (other.rows, other.cols);
        let f = &self.field;
        let mut out = Matrix::zero(f, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.set(i * r2 + k, j * c2 + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn block_diag(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        let (r, c) = (self.rows, self.cols);
        Ok(Matrix::from_fn(
            &self.field,
            r + other.rows,
            c + other.cols,
            |i, j| {
                if i < r && j < c {
                    self.get(i, j)
                } else if i >= r && j >= c {
                    other.get(i - r, j - c)
                } else {
                    0
                }
            },
        ))
    }

    pub fn pow(&self, mut e: u64) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let mut result = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(result)
    }

    pub fn trace(&self) -> Elem {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    // ---- elimination ----

    /// Gauss-Jordan elimination in place; pivots chosen left to right,
    /// searching rows in index order. Row operations are mirrored on
    /// `track` when given. Returns pivot columns.
    pub(crate) fn eliminate(&mut self, mut track: Option<&mut Matrix>) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            if let Some(t) = track.as_deref_mut() {
                t.swap_rows(r, pr);
            }
            let inv = f.inv(self.get(r, c));
            self.scale_row(r, inv);
            if let Some(t) = track.as_deref_mut() {
                t.scale_row(r, inv);
            }
            for i in 0..self.rows {
                if i != r {
                    let v = self.get(i, c);
                    if v != 0 {
                        let nv = f.neg(v);
                        self.row_axpy_self(i, nv, r);
                        if let Some(t) = track.as_deref_mut() {
                            t.row_axpy_self(i, nv, r);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form, rank and transform with `transform * self = reduced`.
    pub fn rref(&self) -> (Matrix, usize, Matrix) {
        let mut reduced = self.clone();
        let mut transform = Matrix::identity(&self.field, self.rows);
        let pivots = reduced.eliminate(Some(&mut transform));
        (reduced, pivots.len(), transform)
    }

    /// Reduced echelon form without the transform.
    pub fn echelon(&self) -> (Matrix, Vec<usize>) {
        let mut reduced = self.clone();
        let pivots = reduced.eliminate(None);
        (reduced, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    /// Basis (in reduced echelon form) of the row space.
    pub fn row_space(&self) -> Matrix {
        let (r, piv) = self.echelon();
        r.row_range(0, piv.len())
    }

    /// Rows form the canonical (reduced echelon) basis of `{v : v * self = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let (_, rank, t) = self.rref();
        let raw = t.row_range(rank, self.rows);
        let (r, piv) = raw.echelon();
        r.row_range(0, piv.len())
    }

    /// Basis of `{x : self * x^T = 0}`, returned as rows.
    pub fn right_nullspace(&self) -> Matrix {
        self.transpose().nullspace()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare);
        }
        let (_, rank, t) = self.rref();
        if rank != self.rows {
            return Err(Error::Singular);
        }
        Ok(t)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solves `x * self = b` for a row-block `b`; `None` if inconsistent.
    pub fn solve_left(&self, b: &Matrix) -> Option<Matrix> {
        let (red, rank, t) = self.rref();
        let piv: Vec<usize> = (0..rank).map(|i| red.leading_col(i).unwrap()).collect();
        let f = &self.field;
        let mut x = Matrix::zero(f, b.rows, self.rows);
        for bi in 0..b.rows {
            let mut rem = b.row_matrix(bi);
            let mut coef = Matrix::zero(f, 1, rank);
            for (r, &c) in piv.iter().enumerate() {
                let v = rem.get(0, c);
                if v != 0 {
                    coef.set(0, r, v);
                    rem.row_axpy(0, f.neg(v), &red, r);
                }
            }
            if !rem.is_zero() {
                return None;
            }
            let xi = coef.mul_unchecked(&t.row_range(0, rank));
            x.copy_row_from(bi, &xi, 0);
        }
        Some(x)
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(Elem) -> Elem) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, self.cols, |i, j| f(self.get(i, j)))
    }
}

/// An incrementally built subspace in semi-echelon form.
///
/// Every stored row has a pivot entry equal to one and is zero at the
/// pivots of all earlier rows, so reducing in insertion order is exact.
#[derive(Clone, Debug)]
pub struct SemiEchelon {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl SemiEchelon {
    pub fn new(field: &FieldSpec, dim: usize) -> Self {
        SemiEchelon {
            basis: Matrix::zero(field, 0, dim),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(m: &Matrix) -> Self {
        let mut s = Self::new(m.field(), m.cols());
        for i in 0..m.rows() {
            s.insert(&m.row_matrix(i));
        }
        s
    }

    pub fn len(&self) -> usize {
        self.pivots.len()
    }
    pub fn is_empty(&self) -> bool {
        self.pivots.is_empty()
    }
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces row vector `v` in place and returns the coefficients
    /// `c` with `v_original = sum c_i basis_i + v_reduced`.
    pub fn reduce(&self, v: &mut Matrix) -> Vec<Elem> {
        let f = self.basis.field().clone();
        let mut coeffs = vec![0; self.pivots.len()];
        for (r, &c) in self.pivots.iter().enumerate() {
            let x = v.get(0, c);
            if x != 0 {
                coeffs[r] = x;
                v.row_axpy(0, f.neg(x), &self.basis, r);
            }
        }
        coeffs
    }

    pub fn contains(&self, v: &Matrix) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Inserts `v` if independent; returns whether the span grew.
    pub fn insert(&mut self, v: &Matrix) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        self.insert_reduced(w)
    }

    /// Inserts a vector already reduced against this space.
    pub fn insert_reduced(&mut self, mut w: Matrix) -> bool {
        match w.leading_col(0) {
            None => false,
            Some(c) => {
                let inv = w.field().inv(w.get(0, c));
                w.scale_row(0, inv);
                self.basis.push_rows(&w);
                self.pivots.push(c);
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        for p in [2, 3] {
            let f = gf(p);
            let id = Matrix::identity(&f, 4);
            let (r, rank, t) = id.rref();
            assert_eq!(rank, 4);
            assert_eq!(r, id);
            assert_eq!(t, id);
            assert_eq!(Matrix::zero(&f, 3, 3).rank(), 0);
        }
        let f = gf(2);
        let m = Matrix::from_rows(&f, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.to_rows(), vec![vec![1, 1]]);
    }

    #[test]
    fn nullspace_examples() {
        let f = gf(3);
        assert_eq!(Matrix::identity(&f, 3).nullspace().rows(), 0);
        let z = Matrix::zero(&f, 3, 3).nullspace();
        assert_eq!(z, Matrix::identity(&f, 3));
    }

    #[test]
    fn kron_examples() {
        let f = gf(5);
        let k = Matrix::identity(&f, 2).kron(&Matrix::identity(&f, 3)).unwrap();
        assert_eq!(k, Matrix::identity(&f, 6));
        let a = Matrix::from_rows(&f, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(a.kron(&Matrix::identity(&f, 1)).unwrap(), a);
    }

    #[test]
    fn bits_and_dense_agree() {
        let f2 = gf(2);
        let a = Matrix::from_fn(&f2, 70, 90, |i, j| ((i * 7 + j * 13) % 5 == 0) as Elem);
        let b = Matrix::from_fn(&f2, 90, 65, |i, j| ((i * 3 + j * 11) % 4 == 1) as Elem);
        let c = a.mul(&b).unwrap();
        for i in 0..70 {
            for j in 0..65 {
                let mut s = 0;
                for k in 0..90 {
                    s ^= a.get(i, k) & b.get(k, j);
                }
                assert_eq!(c.get(i, j), s);
            }
        }
    }

    #[test]
    fn inverse_and_solve() {
        let f = FieldSpec::new(3, 2, None).unwrap();
        let a = Matrix::from_rows(&f, &[vec![1, 2, 0], vec![3, 1, 5], vec![0, 7, 1]]).unwrap();
        if let Ok(inv) = a.inverse() {
            assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(&f, 3));
        }
        let b = Matrix::from_rows(&f, &[vec![1, 1, 1]]).unwrap();
        if let Some(x) = a.solve_left(&b) {
            assert_eq!(x.mul(&a).unwrap(), b);
        }
    }
}
