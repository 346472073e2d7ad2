//! Smith normal form by integer elimination, pivoting on the entry of
//! smallest absolute value.

use super::matrix::IntMatrix;
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    /// Nonzero invariant factors, each dividing the next.
    pub factors: Vec<T>,
    pub rank: usize,
}

/// Invariant factors of `m`. Fails with [`Error::Overflow`] if an
/// intermediate entry leaves the range of `T`.
pub fn smith_normal_form<T: ExactInt>(m: &IntMatrix<T>) -> Result<SmithForm<T>> {
    let mut a = m.clone();
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut factors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = smallest_entry(&a, t..rows, t..cols) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            if !clear_column(&mut a, t)? {
                continue;
            }
            if !clear_row(&mut a, t)? {
                continue;
            }
            // pivot must divide the whole remaining block
            let p = a[(t, t)];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(a[(i, j)] % p).is_zero()));
            match bad {
                Some(i) => add_row(&mut a, t, i, T::one())?,
                None => break,
            }
        }
        factors.push(a[(t, t)].abs());
        t += 1;
    }
    Ok(SmithForm {
        rank: factors.len(),
        factors,
    })
}

fn smallest_entry<T: ExactInt>(
    a: &IntMatrix<T>,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(T, usize, usize)> = None;
    for i in rows {
        for j in cols.clone() {
            let v = a[(i, j)].abs();
            if !v.is_zero() && best.is_none_or(|(b, _, _)| v < b) {
                best = Some((v, i, j));
                if v.is_one() {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// row[dst] += c * row[src]
fn add_row<T: ExactInt>(a: &mut IntMatrix<T>, dst: usize, src: usize, c: T) -> Result<()> {
    for j in 0..a.ncols() {
        let s = a[(src, j)];
        if s.is_zero() {
            continue;
        }
        let p = c.checked_mul(&s).ok_or(Error::Overflow)?;
        a[(dst, j)] = a[(dst, j)].checked_add(&p).ok_or(Error::Overflow)?;
    }
    Ok(())
}

fn add_col<T: ExactInt>(a: &mut IntMatrix<T>, dst: usize, src: usize, c: T) -> Result<()> {
    for i in 0..a.nrows() {
        let s = a[(i, src)];
        if s.is_zero() {
            continue;
        }
        let p = c.checked_mul(&s).ok_or(Error::Overflow)?;
        a[(i, dst)] = a[(i, dst)].checked_add(&p).ok_or(Error::Overflow)?;
    }
    Ok(())
}

/// Eliminates column `t` below the pivot. Returns false if a smaller
/// remainder was swapped into the pivot and another pass is needed.
fn clear_column<T: ExactInt>(a: &mut IntMatrix<T>, t: usize) -> Result<bool> {
    let p = a[(t, t)];
    let mut clean = true;
    for i in t + 1..a.nrows() {
        let v = a[(i, t)];
        if v.is_zero() {
            continue;
        }
        add_row(a, i, t, -(v / p))?;
        if !a[(i, t)].is_zero() {
            clean = false;
        }
    }
    if !clean {
        let (i, _) = smallest_entry(a, t..a.nrows(), t..t + 1).expect("nonzero remainder");
        a.swap_rows(t, i);
    }
    Ok(clean)
}

fn clear_row<T: ExactInt>(a: &mut IntMatrix<T>, t: usize) -> Result<bool> {
    let p = a[(t, t)];
    let mut clean = true;
    for j in t + 1..a.ncols() {
        let v = a[(t, j)];
        if v.is_zero() {
            continue;
        }
        add_col(a, j, t, -(v / p))?;
        if !a[(t, j)].is_zero() {
            clean = false;
        }
    }
    if !clean {
        let (_, j) = smallest_entry(a, t..t + 1, t..a.ncols()).expect("nonzero remainder");
        a.swap_cols(t, j);
    }
    Ok(clean)
}
