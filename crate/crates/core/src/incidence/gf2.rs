//! Dense matrices over GF(2) with bit-packed rows.

use std::fmt::Write as _;

use crate::bits;

/// A vector over GF(2).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: bits::zeros(len),
        }
    }

    pub fn from_bools(values: &[bool]) -> Self {
        let mut v = Self::zeros(values.len());
        for (i, &b) in values.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        bits::get(&self.words, i)
    }

    pub fn set(&mut self, i: usize, on: bool) {
        assert!(i < self.len);
        bits::assign(&mut self.words, i, on);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        bits::count(&self.words)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.words)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// A `rows x cols` matrix over GF(2), row-major with bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct BinMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BinMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = bits::words_for(cols);
        Self {
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

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        bits::get(self.row(r), c)
    }

    pub fn set(&mut self, r: usize, c: usize, on: bool) {
        assert!(r < self.rows && c < self.cols);
        let s = self.stride;
        bits::assign(&mut self.data[r * s..(r + 1) * s], c, on);
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut t = BinMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in bits::ones(self.row(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    /// `M x` over GF(2).
    pub fn mul_vec(&self, x: &BitVector) -> BitVector {
        assert_eq!(x.len(), self.cols, "dimension mismatch");
        let mut out = BitVector::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self
                .row(r)
                .iter()
                .zip(&x.words)
                .map(|(a, b)| (a & b).count_ones())
                .sum::<u32>();
            out.set(r, parity & 1 == 1);
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot column of each
    /// leading row.
    fn reduce(&mut self) -> Vec<usize> {
        let s = self.stride;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| bits::get(self.row(i), c)) else {
                continue;
            };
            if p != r {
                for w in 0..s {
                    self.data.swap(p * s + w, r * s + w);
                }
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i != r && bits::get(self.row(i), c) {
                    for (a, b) in self.data[i * s..(i + 1) * s].iter_mut().zip(&pivot_row) {
                        *a ^= b;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<BitVector> {
        let mut m = self.clone();
        let pivots = m.reduce();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = BitVector::zeros(self.cols);
                x.set(f, true);
                for (r, &c) in pivots.iter().enumerate() {
                    if m.get(r, f) {
                        x.set(c, true);
                    }
                }
                x
            })
            .collect()
    }

    /// `"rows cols"` then one line of space-separated 0/1 entries per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<&str> = (0..self.cols)
                .map(|c| if self.get(r, c) { "1" } else { "0" })
                .collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}

impl std::fmt::Debug for BinMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BinMatrix({}x{})", self.rows, self.cols)
    }
}
