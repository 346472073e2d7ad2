/// Dense matrix over the two-element field, one bit-packed row per entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    cols: usize,
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix {
            cols,
            words,
            rows: vec![vec![0; words]; rows],
        }
    }

    pub fn set(&mut self, i: usize, j: usize) {
        assert!(j < self.cols);
        self.rows[i][j / 64] |= 1 << (j % 64);
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(j < self.cols);
        self.rows[i][j / 64] ^= 1 << (j % 64);
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }
}

/// Rank over the two-element field by Gaussian elimination on packed rows.
pub fn rank_mod2(mut m: BitMatrix) -> usize {
    let mut rank = 0;
    for w in 0..m.words {
        for bit in 0..64 {
            if w * 64 + bit >= m.cols {
                break;
            }
            let mask = 1u64 << bit;
            let Some(p) = (rank..m.rows.len()).find(|&i| m.rows[i][w] & mask != 0) else {
                continue;
            };
            m.rows.swap(rank, p);
            let pivot = m.rows[rank].clone();
            for row in m.rows.iter_mut().skip(rank + 1) {
                if row[w] & mask != 0 {
                    for (x, y) in row.iter_mut().zip(&pivot).skip(w) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}
