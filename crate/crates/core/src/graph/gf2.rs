use super::MAX_VERTICES;

/// Dense matrix over GF(2), one `u32` per row; bit `j` is column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<u32>,
    ncols: usize,
}

impl Gf2Matrix {
    pub fn new(rows: Vec<u32>, ncols: usize) -> Self {
        assert!(rows.len() <= MAX_VERTICES && ncols <= MAX_VERTICES);
        Gf2Matrix { rows, ncols }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).map(|i| 1 << i).collect(), n)
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
}

/// Rank by Gaussian elimination on bit rows.
pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    let mut rows = m.rows.clone();
    let mut rank = 0;
    for col in 0..m.ncols {
        let b = 1u32 << col;
        let Some(p) = (rank..rows.len()).find(|&i| rows[i] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && *r & b != 0 {
                *r ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}
