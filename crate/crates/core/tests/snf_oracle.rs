//! Smith normal form against determinantal divisors: d_k is the gcd of all
//! k x k minors and the k-th invariant factor is d_k / d_{k-1}.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spoly::complexes::snf::smith_normal_form_sparse;
use spoly::complexes::{smith_normal_form, SparseMatrix};

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let s = if j % 2 == 0 { 1 } else { -1 };
        total += s * m[0][j] * det(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
        .collect()
}

/// Nonzero invariant factors from determinantal divisors.
fn oracle(m: &[Vec<i64>]) -> Vec<i64> {
    let (r, c) = (m.len(), m[0].len());
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=r.min(c) {
        let mut d = 0i128;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let sub: Vec<Vec<i128>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j] as i128).collect()).collect();
                d = gcd(d, det(&sub));
            }
        }
        if d == 0 {
            break;
        }
        out.push((d / prev) as i64);
        prev = d;
    }
    out
}

#[test]
fn random_matrices_match_determinantal_divisors() {
    let mut rng = ChaCha8Rng::seed_from_u64(20261016);
    let mut checked = 0;
    let mut with_torsion = 0;
    for _ in 0..1500 {
        let r = rng.gen_range(1..=5);
        let c = rng.gen_range(1..=5);
        let density: f64 = rng.gen_range(0.2..=1.0);
        let m: Vec<Vec<i64>> = (0..r)
            .map(|_| (0..c).map(|_| if rng.gen_bool(density) { rng.gen_range(-9..=9) } else { 0 }).collect())
            .collect();
        let expected = oracle(&m);
        let dense = smith_normal_form(&m).unwrap();
        assert_eq!(dense.factors, expected, "dense {m:?}");
        assert_eq!(dense.rank, expected.len(), "rank {m:?}");
        let sparse = smith_normal_form_sparse(&SparseMatrix::from_dense(&m).unwrap()).unwrap();
        assert_eq!(sparse.factors, expected, "sparse {m:?}");
        if expected.iter().any(|&f| f > 1) {
            with_torsion += 1;
        }
        checked += 1;
    }
    assert_eq!(checked, 1500);
    // The sample must exercise nontrivial torsion, not just unimodular cases.
    assert!(with_torsion > 100, "only {with_torsion} matrices with torsion");
}

#[test]
fn divisibility_chain_and_signs() {
    let s = smith_normal_form(&[vec![0, 4], vec![6, 0]]).unwrap();
    assert_eq!(s.factors, vec![2, 12]);
    let s = smith_normal_form(&[vec![-3]]).unwrap();
    assert_eq!(s.factors, vec![3]);
    let s = smith_normal_form(&[vec![0, 0], vec![0, 0]]).unwrap();
    assert_eq!((s.rank, s.factors.len()), (0, 0));
}
