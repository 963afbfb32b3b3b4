//! Smith normal form over the integers with overflow detection.

use std::collections::{BTreeMap, BTreeSet};

use crate::Error;

/// Dense integer matrix, row-major.
pub type Matrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    /// Nonzero invariant factors, each dividing the next.
    pub factors: Vec<i64>,
    pub rank: usize,
}

impl Snf {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<i64> {
        self.factors.iter().copied().filter(|&d| d > 1).collect()
    }
}

fn ovf(what: &'static str) -> Error {
    Error::Overflow(what)
}

fn sub_mul(a: i64, q: i64, b: i64) -> Result<i64, Error> {
    q.checked_mul(b).and_then(|x| a.checked_sub(x)).ok_or_else(|| ovf("smith normal form"))
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

/// Sparse integer matrix: one ordered map of nonzero entries per row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: vec![BTreeMap::new(); rows] }
    }

    pub fn from_dense(m: &[Vec<i64>]) -> Result<Self, Error> {
        let cols = m.first().map_or(0, Vec::len);
        if m.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidInput("ragged matrix".into()));
        }
        let entries =
            m.iter().map(|r| r.iter().enumerate().filter(|(_, &v)| v != 0).map(|(j, &v)| (j, v)).collect()).collect();
        Ok(SparseMatrix { rows: m.len(), cols, entries })
    }

    pub fn to_dense(&self) -> Matrix {
        self.entries
            .iter()
            .map(|r| {
                let mut row = vec![0; self.cols];
                for (&j, &v) in r {
                    row[j] = v;
                }
                row
            })
            .collect()
    }

    /// Adds `v` to entry (i, j).
    pub fn add(&mut self, i: usize, j: usize, v: i64) {
        let e = self.entries[i].entry(j).or_insert(0);
        *e += v;
        if *e == 0 {
            self.entries[i].remove(&j);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i].get(&j).copied().unwrap_or(0)
    }
}

/// Smith normal form of an arbitrary integer matrix.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Result<Snf, Error> {
    smith_normal_form_sparse(&SparseMatrix::from_dense(m)?)
}

pub fn smith_normal_form_sparse(m: &SparseMatrix) -> Result<Snf, Error> {
    let (unit_rank, rest) = eliminate_units(m)?;
    let mut factors = vec![1; unit_rank];
    factors.extend(dense_snf(rest)?);
    normalize(&mut factors)?;
    Ok(Snf { rank: factors.len(), factors })
}

/// Repeatedly pivots on ±1 entries. Returns the number of pivots and the
/// leftover block in dense form.
fn eliminate_units(m: &SparseMatrix) -> Result<(usize, Matrix), Error> {
    let ncols = m.cols;
    let mut rows = m.entries.clone();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in rows.iter().enumerate() {
        for &j in r.keys() {
            col_rows[j].insert(i);
        }
    }
    let mut alive_row = vec![true; rows.len()];
    let mut alive_col = vec![true; ncols];
    let mut pivots = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for c in 0..ncols {
            if !alive_col[c] {
                continue;
            }
            let pick = col_rows[c]
                .iter()
                .copied()
                .filter(|&i| rows[i][&c].abs() == 1)
                .min_by_key(|&i| (rows[i].len(), i));
            let Some(p) = pick else { continue };
            let prow = std::mem::take(&mut rows[p]);
            let pv = prow[&c];
            let others: Vec<usize> = col_rows[c].iter().copied().filter(|&i| i != p).collect();
            for i in others {
                let q = rows[i][&c] * pv;
                for (&j, &v) in &prow {
                    let cur = rows[i].get(&j).copied().unwrap_or(0);
                    let nv = sub_mul(cur, q, v)?;
                    if nv == 0 {
                        rows[i].remove(&j);
                        col_rows[j].remove(&i);
                    } else {
                        if cur == 0 {
                            col_rows[j].insert(i);
                        }
                        rows[i].insert(j, nv);
                    }
                }
            }
            // the pivot row's other entries are cleared by column operations
            for &j in prow.keys() {
                col_rows[j].remove(&p);
            }
            alive_row[p] = false;
            alive_col[c] = false;
            col_rows[c].clear();
            pivots += 1;
            progress = true;
        }
    }
    let keep_cols: Vec<usize> = (0..ncols).filter(|&j| alive_col[j] && !col_rows[j].is_empty()).collect();
    let index: BTreeMap<usize, usize> = keep_cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
    let dense = rows
        .iter()
        .enumerate()
        .filter(|(i, r)| alive_row[*i] && !r.is_empty())
        .map(|(_, r)| {
            let mut row = vec![0; keep_cols.len()];
            for (j, &v) in r {
                row[index[j]] = v;
            }
            row
        })
        .collect();
    Ok((pivots, dense))
}

/// Quotient of `a` by `b` rounded to the nearest integer, so the remainder
/// is at most half of `|b|`.
fn round_div(a: i128, b: i128) -> i128 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        if (r < 0) == (b < 0) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

fn sub_mul128(a: i128, q: i128, b: i128) -> Result<i128, Error> {
    q.checked_mul(b).and_then(|x| a.checked_sub(x)).ok_or_else(|| ovf("smith normal form"))
}

/// Invariant factors of a dense block. Every round moves the smallest
/// nonzero entry of the remaining block to the pivot and clears its row and
/// column with balanced remainders; entries are kept in i128.
fn dense_snf(a: Matrix) -> Result<Vec<i64>, Error> {
    let mut a: Vec<Vec<i128>> = a.into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    let n = a.len();
    let m = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..n.min(m) {
        loop {
            let mut best: Option<(u128, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &v) in row.iter().enumerate().skip(t) {
                    if v != 0 && best.is_none_or(|b| v.unsigned_abs() < b.0) {
                        best = Some((v.unsigned_abs(), i, j));
                    }
                }
            }
            let Some((_, bi, bj)) = best else { break };
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            let p = a[t][t];
            for i in t + 1..n {
                if a[i][t] != 0 {
                    let q = round_div(a[i][t], p);
                    for j in t..m {
                        a[i][j] = sub_mul128(a[i][j], q, a[t][j])?;
                    }
                }
            }
            for j in t + 1..m {
                if a[t][j] != 0 {
                    let q = round_div(a[t][j], p);
                    for row in a.iter_mut().skip(t) {
                        row[j] = sub_mul128(row[j], q, row[t])?;
                    }
                }
            }
            let clear = (t + 1..n).all(|i| a[i][t] == 0) && (t + 1..m).all(|j| a[t][j] == 0);
            if !clear {
                continue;
            }
            match (t + 1..n).find(|&i| a[i][t + 1..].iter().any(|&v| v % p != 0)) {
                Some(i) => {
                    for j in t..m {
                        a[t][j] = a[t][j].checked_add(a[i][j]).ok_or_else(|| ovf("smith normal form"))?;
                    }
                }
                None => break,
            }
        }
        if a.get(t).is_none_or(|r| r[t] == 0) {
            break;
        }
        diag.push(i64::try_from(a[t][t].abs()).map_err(|_| ovf("smith normal form"))?);
    }
    Ok(diag)
}

/// Rewrites a list of positive integers into divisibility-chain form with the
/// same product structure (d_i | d_{i+1}).
fn normalize(d: &mut [i64]) -> Result<(), Error> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = gcd(d[i], d[j]);
            if g != d[i] {
                let l = (d[i] / g).checked_mul(d[j]).ok_or_else(|| ovf("smith normal form"))?;
                d[i] = g;
                d[j] = l;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(smith_normal_form(&id).unwrap(), Snf { factors: vec![1, 1, 1], rank: 3 });
        let m = vec![vec![2, 4], vec![6, 8]];
        assert_eq!(smith_normal_form(&m).unwrap().factors, vec![2, 4]);
        let z = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(smith_normal_form(&z).unwrap(), Snf { factors: vec![], rank: 0 });
        assert_eq!(smith_normal_form(&[]).unwrap().rank, 0);
    }

    #[test]
    fn divisibility_fix() {
        let m = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(smith_normal_form(&m).unwrap().factors, vec![1, 6]);
    }

    #[test]
    fn overflow_is_reported() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, 0], vec![0, big - 1]];
        assert_eq!(smith_normal_form(&m), Err(Error::Overflow("smith normal form")));
    }
}
