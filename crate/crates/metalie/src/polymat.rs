//! Matrices over the polynomial ring, with fraction-free elimination.
//!
//! Rank here always means rank over the fraction field. The matrices that
//! arise (relation matrices of finitely presented modules) are small, so
//! adjugates are computed by cofactor expansion.

use crate::field::FieldSpec;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: FieldSpec,
    nvars: usize,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>, // row-major
}

impl PolyMatrix {
    pub fn zero(field: FieldSpec, nvars: usize, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            field,
            nvars,
            rows,
            cols,
            data: vec![Polynomial::zero(field, nvars); rows * cols],
        }
    }

    pub fn from_rows(field: FieldSpec, nvars: usize, rows: Vec<Vec<Polynomial>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut m = Self::zero(field, nvars, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, p) in row.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> PolyMatrix {
        let mut m = PolyMatrix::zero(self.field, self.nvars, row_idx.len(), col_idx.len());
        for (i, &r) in row_idx.iter().enumerate() {
            for (j, &c) in col_idx.iter().enumerate() {
                m.set(i, j, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows);
        let mut m = PolyMatrix::zero(self.field, self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.field, self.nvars);
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    /// Rank over the fraction field, plus the rows and columns of one
    /// nonsingular `rank x rank` submatrix. Pivots prefer the entry of lowest
    /// total degree so the witnessed minor stays small.
    pub fn rank_with_minor(&self) -> (usize, Vec<usize>, Vec<usize>) {
        let mut work = self.clone();
        let mut row_of: Vec<usize> = (0..self.rows).collect();
        let mut col_of: Vec<usize> = (0..self.cols).collect();
        let mut prev_pivot = Polynomial::one(self.field, self.nvars);
        let mut k = 0usize;
        while k < work.rows.min(work.cols) {
            // lowest-degree nonzero entry in the remaining block
            let mut best: Option<(usize, usize, u64)> = None;
            for i in k..work.rows {
                for j in k..work.cols {
                    if let Some(d) = work.get(i, j).total_degree() {
                        if best.map_or(true, |(_, _, bd)| d < bd) {
                            best = Some((i, j, d));
                        }
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            if pi != k {
                for j in 0..work.cols {
                    let a = work.get(k, j).clone();
                    let b = work.get(pi, j).clone();
                    work.set(k, j, b);
                    work.set(pi, j, a);
                }
                row_of.swap(k, pi);
            }
            if pj != k {
                for i in 0..work.rows {
                    let a = work.get(i, k).clone();
                    let b = work.get(i, pj).clone();
                    work.set(i, k, b);
                    work.set(i, pj, a);
                }
                col_of.swap(k, pj);
            }
            let pivot = work.get(k, k).clone();
            for i in (k + 1)..work.rows {
                for j in (k + 1)..work.cols {
                    // fraction-free update: (p*a_ij - a_ik*a_kj) / prev_pivot
                    let num = pivot
                        .mul(work.get(i, j))
                        .sub(&work.get(i, k).mul(work.get(k, j)));
                    let q = num
                        .exact_div(&prev_pivot)
                        .expect("fraction-free elimination stays integral");
                    work.set(i, j, q);
                }
                work.set(i, k, Polynomial::zero(self.field, self.nvars));
            }
            prev_pivot = pivot;
            k += 1;
        }
        let mut rows: Vec<usize> = row_of[..k].to_vec();
        let mut cols: Vec<usize> = col_of[..k].to_vec();
        rows.sort_unstable();
        cols.sort_unstable();
        (k, rows, cols)
    }

    pub fn rank(&self) -> usize {
        self.rank_with_minor().0
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(self.field, self.nvars);
        }
        if n == 1 {
            return self.get(0, 0).clone();
        }
        let mut acc = Polynomial::zero(self.field, self.nvars);
        let cols: Vec<usize> = (0..n).collect();
        for j in 0..n {
            let a = self.get(0, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let rows: Vec<usize> = (1..n).collect();
            let minor = self.submatrix(&rows, &rest).det();
            let term = a.mul(&minor);
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    /// Adjugate: `self * adj = det * I`.
    pub fn adjugate(&self) -> PolyMatrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut adj = PolyMatrix::zero(self.field, self.nvars, n, n);
        let all: Vec<usize> = (0..n).collect();
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = all.iter().copied().filter(|&r| r != i).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|&c| c != j).collect();
                let mut cof = self.submatrix(&rows, &cols).det();
                if (i + j) % 2 == 1 {
                    cof = cof.neg();
                }
                adj.set(j, i, cof);
            }
        }
        adj
    }
}
