//! Dense matrices over GF(2) with bit-packed rows.

use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct GF2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        GF2Matrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// From 0/1 rows; any nonzero entry counts as 1. Panics on ragged input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row {i} has width {} not {cols}", r.len());
            for (j, &x) in r.iter().enumerate() {
                if x != 0 {
                    m.set(i, j, true);
                }
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

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let word = &mut self.data[r * self.stride + c / 64];
        if value {
            *word |= 1 << (c % 64);
        } else {
            *word &= !(1 << (c % 64));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_ones(r) {
                t.set(c, r, true);
            }
        }
        t
    }

    fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.data[r * self.stride..(r + 1) * self.stride];
        row.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    /// Product over GF(2). Panics on a shape mismatch.
    pub fn mul(&self, other: &GF2Matrix) -> GF2Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in self.row_ones(r) {
                let src = &other.data[k * other.stride..(k + 1) * other.stride];
                let dst = &mut out.data[r * out.stride..(r + 1) * out.stride];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d ^= s;
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination on a copy: for each column take the
    /// first remaining row with a one there as pivot and clear the column
    /// below it with word-wide XORs.
    pub fn rank(&self) -> usize {
        let mut data = self.data.clone();
        let stride = self.stride;
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let (w, bit) = (col / 64, 1u64 << (col % 64));
            let Some(p) = (rank..self.rows).find(|&r| data[r * stride + w] & bit != 0) else {
                continue;
            };
            if p != rank {
                for k in w..stride {
                    data.swap(p * stride + k, rank * stride + k);
                }
            }
            let (head, tail) = data.split_at_mut((rank + 1) * stride);
            let pivot = &head[rank * stride..];
            for row in tail.chunks_exact_mut(stride) {
                if row[w] & bit != 0 {
                    for k in w..stride {
                        row[k] ^= pivot[k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}
