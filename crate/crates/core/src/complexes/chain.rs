//! Integer chain complexes and their homology.

use std::fmt;

use super::snf::{smith_normal_form_sparse, SparseMatrix};
use crate::Error;

/// `boundaries[k]` is the matrix of ∂_{k+1}: C_{k+1} → C_k, with
/// `dims[k]` rows and `dims[k+1]` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    pub dims: Vec<usize>,
    pub boundaries: Vec<SparseMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub groups: Vec<HomologyGroup>,
}

impl HomologyResult {
    pub fn degree(&self, k: usize) -> HomologyGroup {
        self.groups.get(k).cloned().unwrap_or_default()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.rank).collect()
    }

    pub fn euler(&self) -> i64 {
        self.groups.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.rank as i64 } else { -(g.rank as i64) }).sum()
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().enumerate().map(|(k, g)| format!("H{k}={g}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, boundaries: Vec<SparseMatrix>) -> Self {
        ChainComplex { dims, boundaries }
    }

    /// Checks shapes and ∂∘∂ = 0; the error carries the failing degree.
    pub fn check(&self) -> Result<(), Error> {
        for (k, b) in self.boundaries.iter().enumerate() {
            let rows = self.dims.get(k).copied().unwrap_or(0);
            let cols = self.dims.get(k + 1).copied().unwrap_or(0);
            if b.rows != rows || b.cols != cols || b.entries.len() != rows || b.entries.iter().any(|r| r.keys().any(|&j| j >= cols)) {
                return Err(Error::NotAComplex(k + 1));
            }
        }
        for k in 1..self.boundaries.len() {
            let (lo, hi) = (&self.boundaries[k - 1], &self.boundaries[k]);
            for row in &lo.entries {
                let mut acc: std::collections::BTreeMap<usize, i64> = Default::default();
                for (&j, &v) in row {
                    for (&c, &w) in &hi.entries[j] {
                        let e = acc.entry(c).or_insert(0);
                        *e = v.checked_mul(w).and_then(|x| e.checked_add(x)).ok_or(Error::Overflow("boundary composition"))?;
                    }
                }
                if acc.values().any(|&x| x != 0) {
                    return Err(Error::NotAComplex(k + 1));
                }
            }
        }
        Ok(())
    }
}

/// Homology of a chain complex in degrees 0..dims.len().
pub fn homology(c: &ChainComplex) -> Result<HomologyResult, Error> {
    c.check()?;
    let snfs = c.boundaries.iter().map(smith_normal_form_sparse).collect::<Result<Vec<_>, _>>()?;
    let groups = (0..c.dims.len())
        .map(|k| {
            let out_rank = if k == 0 { 0 } else { snfs.get(k - 1).map_or(0, |s| s.rank) };
            let in_snf = snfs.get(k);
            let in_rank = in_snf.map_or(0, |s| s.rank);
            HomologyGroup { rank: c.dims[k] - out_rank - in_rank, torsion: in_snf.map(|s| s.torsion()).unwrap_or_default() }
        })
        .collect();
    Ok(HomologyResult { groups })
}
