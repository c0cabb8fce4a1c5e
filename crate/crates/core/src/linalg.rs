//! Exact rank computations over prime fields.
//!
//! Characteristic 2 uses packed 64-bit rows and XOR elimination; other
//! primes use dense rows of residues with modular-inverse pivoting.
//! Matrices here come from simplicial boundary operators and Taylor
//! differentials, so they are small and ranks must be exact.

/// Row-major bit matrix over GF(2).
pub struct BitMatrix {
    words_per_row: usize,
    rows: Vec<u64>,
    n_rows: usize,
}

impl BitMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> BitMatrix {
        let words_per_row = n_cols.div_ceil(64).max(1);
        BitMatrix {
            words_per_row,
            rows: vec![0u64; n_rows * words_per_row],
            n_rows,
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize) {
        self.rows[r * self.words_per_row + c / 64] |= 1u64 << (c % 64);
    }

    /// Rank by Gaussian elimination; consumes the matrix.
    pub fn rank(mut self) -> usize {
        let w = self.words_per_row;
        let mut rank = 0;
        for col in 0..(w * 64) {
            let word = col / 64;
            let mask = 1u64 << (col % 64);
            let Some(pivot) = (rank..self.n_rows)
                .find(|&r| self.rows[r * w + word] & mask != 0)
            else {
                continue;
            };
            if pivot != rank {
                for k in 0..w {
                    self.rows.swap(pivot * w + k, rank * w + k);
                }
            }
            for r in 0..self.n_rows {
                if r != rank && self.rows[r * w + word] & mask != 0 {
                    for k in 0..w {
                        let v = self.rows[rank * w + k];
                        self.rows[r * w + k] ^= v;
                    }
                }
            }
            rank += 1;
            if rank == self.n_rows {
                break;
            }
        }
        rank
    }
}

/// Dense matrix over GF(p) for odd primes (works for p = 2 too, but the
/// bit matrix is the fast path there).
pub struct ModMatrix {
    p: u64,
    n_cols: usize,
    rows: Vec<u64>,
    n_rows: usize,
}

impl ModMatrix {
    pub fn zero(n_rows: usize, n_cols: usize, p: u32) -> ModMatrix {
        ModMatrix {
            p: p as u64,
            n_cols,
            rows: vec![0u64; n_rows * n_cols.max(1)],
            n_rows,
        }
    }

    /// Set entry from a signed value (boundary coefficients are ±1).
    pub fn set(&mut self, r: usize, c: usize, value: i64) {
        let v = value.rem_euclid(self.p as i64) as u64;
        self.rows[r * self.n_cols + c] = v;
    }

    pub fn rank(mut self) -> usize {
        let p = self.p;
        let cols = self.n_cols;
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) =
                (rank..self.n_rows).find(|&r| self.rows[r * cols + col] % p != 0)
            else {
                continue;
            };
            if pivot != rank {
                for k in 0..cols {
                    self.rows.swap(pivot * cols + k, rank * cols + k);
                }
            }
            let inv = mod_inverse(self.rows[rank * cols + col], p);
            for k in col..cols {
                self.rows[rank * cols + k] = self.rows[rank * cols + k] * inv % p;
            }
            for r in 0..self.n_rows {
                if r == rank {
                    continue;
                }
                let factor = self.rows[r * cols + col] % p;
                if factor == 0 {
                    continue;
                }
                for k in col..cols {
                    let sub = factor * self.rows[rank * cols + k] % p;
                    let cur = self.rows[r * cols + k];
                    self.rows[r * cols + k] = (cur + p - sub) % p;
                }
            }
            rank += 1;
            if rank == self.n_rows {
                break;
            }
        }
        rank
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
