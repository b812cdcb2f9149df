//! Dense matrices over a [`Field`] with reduced row echelon form.

use std::fmt;

use crate::field::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Elem::ZERO; rows * cols],
        }
    }

    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Elem>>) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// row[dst] -= factor · row[src]
    fn axpy(&mut self, dst: usize, src: usize, factor: Elem) {
        let f = &self.field;
        for c in 0..self.cols {
            let s = self.data[src * self.cols + c];
            if !s.is_zero() {
                let d = &mut self.data[dst * self.cols + c];
                *d = f.sub(*d, f.mul(factor, s));
            }
        }
    }

    /// Reduces in place to reduced row echelon form, choosing the first
    /// nonzero entry of each column as pivot. Returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.field.inv_nonzero(self.get(r, c));
            for k in 0..self.cols {
                let v = self.get(r, k);
                self.set(r, k, self.field.mul(inv, v));
            }
            for i in 0..self.rows {
                if i != r {
                    let factor = self.get(i, c);
                    if !factor.is_zero() {
                        self.axpy(i, r, factor);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form with the zero rows removed.
    pub fn row_reduced(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref();
        m.data.truncate(pivots.len() * m.cols);
        m.rows = pivots.len();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space {v : M v = 0}, one vector per free
    /// column, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vec<Elem>> {
        let (m, pivots) = self.row_reduced();
        let f = &self.field;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![Elem::ZERO; self.cols];
        for (r, &coef) in v.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(coef, self.get(r, c)));
            }
        }
        out
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[Elem]) -> bool {
        assert_eq!(v.len(), self.cols);
        let base = self.rank();
        let mut ext = self.clone();
        ext.data.extend_from_slice(v);
        ext.rows += 1;
        ext.rank() == base
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            out,
            "Matrix {}x{} over {:?}",
            self.rows, self.cols, self.field
        )?;
        for r in 0..self.rows {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|&e| self.field.format_elem(e))
                .collect();
            writeln!(out, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}
