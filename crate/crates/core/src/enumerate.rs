//! Exhaustive codeword enumeration.
//!
//! Matrix codes are walked with a modular q-ary Gray code: consecutive
//! codewords differ by one basis matrix, so each step is a single vector
//! addition followed by a rank computation. For `q = 2` matrix rows are held
//! as bitmasks. Vector codes are walked directly over `F_{q^m}`.

use serde::{Deserialize, Serialize};

use crate::codes::{MatrixCode, VectorCode};
use crate::error::Result;
use crate::fqlinalg::{Budget, Mat};
use crate::gf::{ExtField, Field, FiniteField};

/// Counts `A_0, ..., A_n` of codewords by rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDistribution {
    pub q: u32,
    pub n: usize,
    pub m: usize,
    /// Dimension over `F_q`.
    pub t: usize,
    pub counts: Vec<u64>,
}

impl RankDistribution {
    pub fn new(q: u32, n: usize, m: usize, t: usize, counts: Vec<u64>) -> Self {
        Self { q, n, m, t, counts }
    }

    /// `A_i`, zero outside `0..=n`.
    pub fn get(&self, i: i64) -> u64 {
        if i < 0 {
            return 0;
        }
        self.counts.get(i as usize).copied().unwrap_or(0)
    }

    /// Smallest nonzero rank, `None` for the zero code.
    pub fn min_distance(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&i| self.counts[i] > 0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }
}

/// Number of trailing zero base-q digits of `k > 0`.
#[inline]
fn qadic_valuation(mut k: u64, q: u64) -> usize {
    if q == 2 {
        return k.trailing_zeros() as usize;
    }
    let mut v = 0;
    while k.is_multiple_of(q) {
        k /= q;
        v += 1;
    }
    v
}

/// Rank over `F_2` of rows given as bitmasks.
pub(crate) fn rank_gf2(rows: &[u64]) -> usize {
    let mut pivots = [0u64; 64];
    let mut rank = 0;
    for &r in rows {
        let mut x = r;
        while x != 0 {
            let h = 63 - x.leading_zeros() as usize;
            if pivots[h] == 0 {
                pivots[h] = x;
                rank += 1;
                break;
            }
            x ^= pivots[h];
        }
    }
    rank
}

/// Rank over `F_q` of an `n x m` row-major matrix, destroying `a`.
pub(crate) fn rank_in_place(f: &Field, a: &mut [u32], n: usize, m: usize) -> usize {
    let mut r = 0;
    for c in 0..m {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| a[i * m + c] != 0) else {
            continue;
        };
        if p != r {
            for j in c..m {
                a.swap(p * m + j, r * m + j);
            }
        }
        let inv = f.inv(a[r * m + c]).expect("nonzero pivot");
        for i in r + 1..n {
            let factor = a[i * m + c];
            if factor == 0 {
                continue;
            }
            let s = f.mul(factor, inv);
            for j in c..m {
                a[i * m + j] = f.sub(a[i * m + j], f.mul(s, a[r * m + j]));
            }
        }
        r += 1;
    }
    r
}

fn walk_gf2<V: FnMut(&[u64])>(code: &MatrixCode, mut visit: V) {
    let (n, m) = (code.n(), code.m());
    let basis: Vec<Vec<u64>> = (0..code.dim())
        .map(|k| {
            let row = code.flat_basis().row(k);
            (0..n)
                .map(|i| (0..m).fold(0u64, |acc, j| acc | ((row[i * m + j] as u64) << j)))
                .collect()
        })
        .collect();
    let mut word = vec![0u64; n];
    visit(&word);
    let total = 1u64 << code.dim();
    for k in 1..total {
        let b = &basis[k.trailing_zeros() as usize];
        for (w, &x) in word.iter_mut().zip(b) {
            *w ^= x;
        }
        visit(&word);
    }
}

fn walk_generic<V: FnMut(&[u32])>(code: &MatrixCode, mut visit: V) {
    let f = code.field();
    let q = f.q() as u64;
    let nm = code.n() * code.m();
    let mut word = vec![0u32; nm];
    visit(&word);
    let total = q.pow(code.dim() as u32);
    for k in 1..total {
        let b = code.flat_basis().row(qadic_valuation(k, q));
        for (w, &x) in word.iter_mut().zip(b) {
            *w = f.add(*w, x);
        }
        visit(&word);
    }
}

/// Exhaustive rank distribution of a matrix code.
pub fn rank_distribution(code: &MatrixCode, budget: Budget) -> Result<RankDistribution> {
    budget.check_power(code.q(), code.dim())?;
    let (n, m) = (code.n(), code.m());
    let mut counts = vec![0u64; n + 1];
    if code.q() == 2 {
        walk_gf2(code, |w| counts[rank_gf2(w)] += 1);
    } else {
        let f = code.field();
        let mut scratch = vec![0u32; n * m];
        walk_generic(code, |w| {
            scratch.copy_from_slice(w);
            counts[rank_in_place(f, &mut scratch, n, m)] += 1;
        });
    }
    Ok(RankDistribution::new(code.q(), n, m, code.dim(), counts))
}

/// A codeword of minimum nonzero rank (first one met in enumeration order),
/// `None` for the zero code.
pub fn min_rank_word(code: &MatrixCode, budget: Budget) -> Result<Option<Mat>> {
    budget.check_power(code.q(), code.dim())?;
    let (n, m) = (code.n(), code.m());
    let f = code.field();
    let mut best: Option<(usize, Vec<u32>)> = None;
    let mut scratch = vec![0u32; n * m];
    walk_generic(code, |w| {
        scratch.copy_from_slice(w);
        let r = rank_in_place(f, &mut scratch, n, m);
        if r > 0 && best.as_ref().is_none_or(|(b, _)| r < *b) {
            best = Some((r, w.to_vec()));
        }
    });
    Ok(best.map(|(_, w)| Mat::from_vec(n, m, w).expect("shape")))
}

/// Every codeword of a matrix code, in Gray-walk order.
pub fn codewords(code: &MatrixCode, budget: Budget) -> Result<Vec<Mat>> {
    budget.check_power(code.q(), code.dim())?;
    let (n, m) = (code.n(), code.m());
    let mut out = Vec::new();
    walk_generic(code, |w| {
        out.push(Mat::from_vec(n, m, w.to_vec()).expect("shape"));
    });
    Ok(out)
}

/// `F_q`-rank of a vector over the extension field.
fn ext_vector_rank(field: &ExtField, v: &[u32], scratch: &mut [u32]) -> usize {
    let m = field.degree();
    if field.q() == 2 {
        // In the polynomial basis an element of F_{2^m} is its own bitmask.
        let rows: Vec<u64> = v.iter().map(|&x| x as u64).collect();
        return rank_gf2(&rows);
    }
    for (i, &x) in v.iter().enumerate() {
        scratch[i * m..(i + 1) * m].copy_from_slice(&field.to_poly(x));
    }
    rank_in_place(field.base(), scratch, v.len(), m)
}

/// Exhaustive rank distribution of a vector code, enumerating all `q^{mk}`
/// codewords as `F_{q^m}`-combinations of the generator rows.
pub fn vector_rank_distribution(code: &VectorCode, budget: Budget) -> Result<RankDistribution> {
    let f = code.field();
    let (n, m, k) = (code.n(), code.m(), code.k());
    budget.check_power(f.q(), m * k)?;
    let order = f.order();
    let mut counts = vec![0u64; n + 1];
    let mut coeffs = vec![0u32; k];
    let mut word = vec![0u32; n];
    let mut scratch = vec![0u32; n * m];
    loop {
        for (j, w) in word.iter_mut().enumerate() {
            *w = (0..k).fold(0, |acc, i| {
                f.add(acc, f.mul(coeffs[i], code.generator().get(i, j)))
            });
        }
        counts[ext_vector_rank(f, &word, &mut scratch)] += 1;
        let mut i = 0;
        loop {
            if i == k {
                return Ok(RankDistribution::new(f.q(), n, m, m * k, counts));
            }
            coeffs[i] += 1;
            if coeffs[i] < order {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::random_matrix_code;

    #[test]
    fn gray_walk_visits_every_codeword_once() {
        for (q, t) in [(2u32, 4usize), (3, 3)] {
            let c = random_matrix_code(q, 2, 3, t, 5).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            walk_generic(&c, |w| {
                assert!(seen.insert(w.to_vec()));
            });
            assert_eq!(seen.len() as u64, (q as u64).pow(t as u32));
            for w in &seen {
                let row = Mat::from_rows(std::slice::from_ref(w)).unwrap();
                let stacked = c.flat_basis().stack(&row).unwrap();
                assert_eq!(stacked.rank(c.field()), t);
            }
        }
    }

    #[test]
    fn gf2_path_matches_generic_path() {
        for seed in 0..20 {
            let c = random_matrix_code(2, 3, 4, 6, seed).unwrap();
            let fast = rank_distribution(&c, Budget::default()).unwrap();
            let mut counts = vec![0u64; 4];
            walk_generic(&c, |w| {
                let m = Mat::from_vec(3, 4, w.to_vec()).unwrap();
                counts[m.rank(c.field())] += 1;
            });
            assert_eq!(fast.counts, counts);
        }
    }

    #[test]
    fn zero_code_distribution() {
        let z = MatrixCode::zero(3, 2, 2).unwrap();
        let d = rank_distribution(&z, Budget::default()).unwrap();
        assert_eq!(d.counts, vec![1, 0, 0]);
        assert_eq!(d.min_distance(), None);
        assert_eq!(min_rank_word(&z, Budget::default()).unwrap(), None);
    }

    #[test]
    fn budget_is_enforced() {
        let c = random_matrix_code(2, 3, 3, 8, 1).unwrap();
        assert!(rank_distribution(&c, Budget(255)).is_err());
        assert!(rank_distribution(&c, Budget(256)).is_ok());
    }
}
