//! Linear algebra over GF(2).
//!
//! Boundary matrices are handled as sparse columns (sorted row indices) and
//! reduced with the usual lowest-pivot column elimination. A dense,
//! 64-bit-packed [`BitMatrix`] is kept alongside for small problems and as an
//! independent check of the sparse path.

use std::collections::HashMap;

/// Sorted, duplicate-free row indices of the non-zero entries of a column.
pub type SparseColumn = Vec<u32>;

/// `a += b` over GF(2) (symmetric difference of sorted index lists).
pub fn add_assign(a: &mut SparseColumn, b: &[u32]) {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    *a = out;
}

/// Column-reduced form of a sparse GF(2) matrix.
///
/// With `track` set, every reduced column remembers which original columns
/// sum to it, which is what [`Reducer::solve`] needs.
#[derive(Clone, Debug, Default)]
pub struct Reducer {
    pivots: HashMap<u32, usize>,
    reduced: Vec<SparseColumn>,
    combos: Vec<SparseColumn>,
    track: bool,
}

impl Reducer {
    pub fn new<I>(columns: I, track: bool) -> Reducer
    where
        I: IntoIterator<Item = SparseColumn>,
    {
        let mut red = Reducer {
            track,
            ..Reducer::default()
        };
        for (j, col) in columns.into_iter().enumerate() {
            red.push(col, j as u32);
        }
        red
    }

    fn push(&mut self, mut col: SparseColumn, original: u32) {
        let mut combo = if self.track { vec![original] } else { vec![] };
        while let Some(&low) = col.last() {
            match self.pivots.get(&low) {
                Some(&p) => {
                    add_assign(&mut col, &self.reduced[p]);
                    if self.track {
                        add_assign(&mut combo, &self.combos[p]);
                    }
                }
                None => {
                    self.pivots.insert(low, self.reduced.len());
                    self.reduced.push(col);
                    self.combos.push(combo);
                    return;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Columns `x` (as original column indices) with `A x = b`, or the
    /// non-zero residual of `b` modulo the column space.
    pub fn solve(&self, b: &[u32]) -> Result<SparseColumn, SparseColumn> {
        assert!(self.track, "solve needs a tracking reducer");
        let mut col = b.to_vec();
        let mut combo = vec![];
        while let Some(&low) = col.last() {
            match self.pivots.get(&low) {
                Some(&p) => {
                    add_assign(&mut col, &self.reduced[p]);
                    add_assign(&mut combo, &self.combos[p]);
                }
                None => return Err(col),
            }
        }
        Ok(combo)
    }
}

/// Rank of a sparse GF(2) matrix given by its columns.
pub fn rank<I>(columns: I) -> usize
where
    I: IntoIterator<Item = SparseColumn>,
{
    Reducer::new(columns, false).rank()
}

/// Dense GF(2) matrix with rows packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        let stride = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn from_sparse_columns(rows: usize, columns: &[SparseColumn]) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for &i in col {
                m.flip(i as usize, j);
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols);
        self.words[i * self.stride + j / 64] ^= 1 << (j % 64);
    }

    /// Rank by row elimination, consuming a copy of the matrix.
    pub fn rank(&self) -> usize {
        let mut w = self.words.clone();
        let stride = self.stride;
        let mut rank = 0;
        for col in 0..self.cols {
            let (word, bit) = (col / 64, col % 64);
            let Some(p) = (rank..self.rows).find(|&i| w[i * stride + word] >> bit & 1 == 1) else {
                continue;
            };
            if p != rank {
                for k in 0..stride {
                    w.swap(p * stride + k, rank * stride + k);
                }
            }
            for i in 0..self.rows {
                if i != rank && w[i * stride + word] >> bit & 1 == 1 {
                    for k in word..stride {
                        let v = w[rank * stride + k];
                        w[i * stride + k] ^= v;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}
