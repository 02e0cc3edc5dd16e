//! Dense linear algebra over a finite field: row reduction, rank, kernels,
//! subspaces in canonical form, subspace enumeration and Gaussian binomials.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, FiniteField};

/// Default cap on the number of items any exhaustive enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// Enumeration cap. Work whose size exceeds the cap is refused up front.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    /// Reads `RANKCODE_BUDGET`, falling back to the default.
    pub fn from_env() -> Self {
        std::env::var("RANKCODE_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .filter(|&b: &u64| b > 0)
            .map(Budget)
            .unwrap_or_default()
    }

    pub fn check(&self, required: &BigUint) -> Result<()> {
        if *required > BigUint::from(self.0) {
            Err(Error::BudgetExceeded {
                required: required.clone(),
                cap: self.0,
            })
        } else {
            Ok(())
        }
    }

    /// Checks `q^e` items against the cap.
    pub fn check_power(&self, q: u32, e: usize) -> Result<()> {
        self.check(&BigUint::from(q).pow(e as u32))
    }
}

/// Row-major matrix of field elements.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<u32>>", try_from = "Vec<Vec<u32>>")]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{:?}", self.to_rows())
    }
}

impl From<Mat> for Vec<Vec<u32>> {
    fn from(m: Mat) -> Self {
        m.to_rows()
    }
}

impl TryFrom<Vec<Vec<u32>>> for Mat {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        Mat::from_rows(&rows)
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of equal length. An empty slice gives a
    /// `0 x 0` matrix.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Like [`Mat::from_rows`] but keeps the column count when there are no
    /// rows.
    pub fn from_rows_with_cols<R: AsRef<[u32]>>(rows: &[R], cols: usize) -> Result<Self> {
        if rows.is_empty() {
            return Ok(Self::zeros(0, cols));
        }
        let m = Self::from_rows(rows)?;
        if m.cols != cols {
            return Err(Error::Shape(format!(
                "expected {cols} columns, got {}",
                m.cols
            )));
        }
        Ok(m)
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Errors if any entry lies outside the field.
    pub fn check_field<F: FiniteField + ?Sized>(&self, f: &F) -> Result<()> {
        match self.data.iter().find(|&&x| !f.contains(x)) {
            Some(&value) => Err(Error::NotAnElement {
                value,
                order: f.order(),
            }),
            None => Ok(()),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Mat) -> Result<Self> {
        if self.rows > 0 && other.rows > 0 && self.cols != other.cols {
            return Err(Error::AmbientMismatch(self.cols, other.cols));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    pub fn mul<F: FiniteField + ?Sized>(&self, f: &F, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add<F: FiniteField + ?Sized>(&self, f: &F, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape("matrix sizes differ".into()));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(Mat { data, ..*self })
    }

    pub fn scale<F: FiniteField + ?Sized>(&self, f: &F, c: Elem) -> Mat {
        Mat {
            data: self.data.iter().map(|&a| f.mul(c, a)).collect(),
            ..*self
        }
    }

    /// Reduced row echelon form together with the pivot columns. Zero rows
    /// are kept at the bottom.
    pub fn rref<F: FiniteField + ?Sized>(&self, f: &F) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank<F: FiniteField + ?Sized>(&self, f: &F) -> usize {
        self.rref(f).1.len()
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_basis<F: FiniteField + ?Sized>(&self, f: &F) -> Mat {
        let (m, pivots) = self.rref(f);
        Mat {
            rows: pivots.len(),
            cols: m.cols,
            data: m.data[..pivots.len() * m.cols].to_vec(),
        }
    }

    /// Basis (as rows) of `{x : M x = 0}`.
    pub fn null_space<F: FiniteField + ?Sized>(&self, f: &F) -> Mat {
        let (m, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(free.len(), self.cols);
        for (row, &fc) in free.iter().enumerate() {
            out.set(row, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                out.set(row, pc, f.neg(m.get(pr, fc)));
            }
        }
        out
    }

    pub fn inverse<F: FiniteField + ?Sized>(&self, f: &F) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// `v M` for a row vector `v`.
    pub fn left_apply<F: FiniteField + ?Sized>(&self, f: &F, v: &[Elem]) -> Vec<Elem> {
        let mut out = vec![0; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(c, self.get(i, j)));
            }
        }
        out
    }
}

/// A subspace of `F^n` stored as the nonzero rows of its reduced row echelon
/// form, so equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Span of the rows of `gens`.
    pub fn span<F: FiniteField + ?Sized>(f: &F, gens: &Mat) -> Self {
        Self {
            ambient: gens.cols(),
            basis: gens.row_basis(f),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn contains<F: FiniteField + ?Sized>(&self, f: &F, v: &[Elem]) -> bool {
        let row = Mat::from_rows_with_cols(&[v], self.ambient).expect("vector length");
        self.basis.stack(&row).map(|m| m.rank(f)).ok() == Some(self.dim())
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum<F: FiniteField + ?Sized>(&self, f: &F, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(f, &self.basis.stack(&other.basis)?))
    }

    /// Zassenhaus: reduce `[[U, U], [W, 0]]`; rows whose left half vanishes
    /// span the intersection.
    pub fn intersect<F: FiniteField + ?Sized>(&self, f: &F, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut z = Mat::zeros(self.dim() + other.dim(), 2 * n);
        for i in 0..self.dim() {
            for j in 0..n {
                z.set(i, j, self.basis.get(i, j));
                z.set(i, n + j, self.basis.get(i, j));
            }
        }
        for i in 0..other.dim() {
            for j in 0..n {
                z.set(self.dim() + i, j, other.basis.get(i, j));
            }
        }
        let (r, pivots) = z.rref(f);
        let rows: Vec<Vec<u32>> = (0..pivots.len())
            .filter(|&i| pivots[i] >= n)
            .map(|i| r.row(i)[n..].to_vec())
            .collect();
        Ok(Subspace::span(f, &Mat::from_rows_with_cols(&rows, n)?))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn orthogonal<F: FiniteField + ?Sized>(&self, f: &F) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        Subspace::span(f, &self.basis.null_space(f))
    }
}

/// The Gaussian binomial `[n choose k]_q`, zero when `k < 0` or `k > n`.
pub fn gaussian_binomial(n: i64, k: i64, q: u32) -> BigUint {
    if k < 0 || n < 0 || k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}

/// Visits every `r`-dimensional subspace of `F_q^n` once, in canonical
/// order: pivot sets lexicographically, then free entries as a base-q
/// counter with the first free entry least significant.
pub fn enumerate_subspaces(q: u32, n: usize, r: usize, budget: Budget) -> Result<SubspaceIter> {
    if r > n {
        return Err(Error::InvalidParameters(format!("dim {r} ≤ ambient {n}")));
    }
    budget.check(&gaussian_binomial(n as i64, r as i64, q))?;
    Ok(SubspaceIter::new(q, n, r))
}

/// Iterator behind [`enumerate_subspaces`].
pub struct SubspaceIter {
    q: u32,
    n: usize,
    r: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
}

impl SubspaceIter {
    fn new(q: u32, n: usize, r: usize) -> Self {
        let pivots: Vec<usize> = (0..r).collect();
        let mut it = Self {
            q,
            n,
            r,
            pivots: Some(pivots),
            free: Vec::new(),
            counter: Vec::new(),
        };
        it.reset_free();
        it
    }

    fn reset_free(&mut self) {
        let Some(p) = &self.pivots else { return };
        self.free = (0..self.r)
            .flat_map(|i| {
                let p = p.clone();
                (p[i] + 1..self.n)
                    .filter(move |c| !p.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        self.counter = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let p = self.pivots.as_ref().expect("not exhausted");
        let mut m = Mat::zeros(self.r, self.n);
        for (i, &c) in p.iter().enumerate() {
            m.set(i, c, 1);
        }
        for (&(i, c), &v) in self.free.iter().zip(&self.counter) {
            m.set(i, c, v);
        }
        Subspace {
            ambient: self.n,
            basis: m,
        }
    }

    fn advance(&mut self) {
        for d in self.counter.iter_mut() {
            *d += 1;
            if *d < self.q {
                return;
            }
            *d = 0;
        }
        let Some(p) = self.pivots.as_mut() else {
            return;
        };
        if next_combination(p, self.n) {
            self.reset_free();
        } else {
            self.pivots = None;
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        self.pivots.as_ref()?;
        let s = self.current();
        self.advance();
        Some(s)
    }
}

/// Next `r`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    for i in (0..r).rev() {
        if c[i] < n - r + i {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every subspace of `F_q^n`, all dimensions, checked against the budget as
/// a whole.
pub fn enumerate_all_subspaces(
    q: u32,
    n: usize,
    budget: Budget,
) -> Result<impl Iterator<Item = Subspace>> {
    let total: BigUint = (0..=n as i64)
        .map(|r| gaussian_binomial(n as i64, r, q))
        .sum();
    budget.check(&total)?;
    Ok((0..=n).flat_map(move |r| SubspaceIter::new(q, n, r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{ExtField, Field};

    #[test]
    fn rank_examples() {
        let f = Field::new(2).unwrap();
        assert_eq!(Mat::zeros(3, 4).rank(&f), 0);
        assert_eq!(Mat::identity(5).rank(&f), 5);
        let mut e21 = Mat::zeros(3, 3);
        e21.set(1, 0, 1);
        assert_eq!(e21.rank(&f), 1);
    }

    #[test]
    fn gaussian_binomial_values() {
        assert_eq!(gaussian_binomial(5, 0, 2), BigUint::one());
        assert_eq!(gaussian_binomial(3, 1, 2), BigUint::from(7u32));
        assert_eq!(gaussian_binomial(3, 2, 2), BigUint::from(7u32));
        assert_eq!(gaussian_binomial(4, 2, 2), BigUint::from(35u32));
        assert_eq!(gaussian_binomial(2, 3, 2), BigUint::zero());
        assert_eq!(gaussian_binomial(2, -1, 2), BigUint::zero());
    }

    /// Counts r-dimensional subspaces by brute force: collect the distinct
    /// spans of all r-tuples of vectors.
    fn brute_force_count(q: u32, n: usize, r: usize) -> usize {
        let f = Field::new(q).unwrap();
        let size = q.pow(n as u32);
        let vec_of = |x: u32| -> Vec<u32> { (0..n).map(|i| x / q.pow(i as u32) % q).collect() };
        let mut seen = std::collections::BTreeSet::new();
        let mut idx = vec![0u32; r];
        loop {
            let rows: Vec<Vec<u32>> = idx.iter().map(|&x| vec_of(x)).collect();
            let m = Mat::from_rows_with_cols(&rows, n).unwrap();
            if m.rank(&f) == r {
                seen.insert(m.row_basis(&f));
            }
            let mut k = 0;
            loop {
                if k == r {
                    return seen.len();
                }
                idx[k] += 1;
                if idx[k] < size {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn gaussian_binomial_matches_brute_force() {
        for (q, n) in [(2, 3), (2, 4), (3, 3)] {
            for r in 0..=n {
                assert_eq!(
                    gaussian_binomial(n as i64, r as i64, q),
                    BigUint::from(brute_force_count(q, n, r))
                );
            }
        }
    }

    #[test]
    fn gaussian_binomial_symmetry_and_pascal() {
        for q in [2u32, 3, 5] {
            for n in 1..=12i64 {
                for k in 0..=n {
                    assert_eq!(gaussian_binomial(n, k, q), gaussian_binomial(n, n - k, q));
                    let rhs = gaussian_binomial(n - 1, k - 1, q)
                        + BigUint::from(q).pow(k as u32) * gaussian_binomial(n - 1, k, q);
                    assert_eq!(gaussian_binomial(n, k, q), rhs);
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_canonical_form() {
        for (q, n) in [(2u32, 4usize), (3, 3), (5, 2)] {
            let f = Field::new(q).unwrap();
            for r in 0..=n {
                let all: Vec<Subspace> = enumerate_subspaces(q, n, r, Budget::default())
                    .unwrap()
                    .collect();
                assert_eq!(
                    BigUint::from(all.len()),
                    gaussian_binomial(n as i64, r as i64, q)
                );
                let distinct: std::collections::BTreeSet<_> = all.iter().cloned().collect();
                assert_eq!(distinct.len(), all.len());
                for s in &all {
                    assert_eq!(s.dim(), r);
                    assert_eq!(&Subspace::span(&f, s.basis()), s);
                }
            }
        }
        let zero: Vec<_> = enumerate_subspaces(2, 3, 0, Budget::default())
            .unwrap()
            .collect();
        assert_eq!(zero, vec![Subspace::zero(3)]);
        let full: Vec<_> = enumerate_subspaces(2, 3, 3, Budget::default())
            .unwrap()
            .collect();
        assert_eq!(full, vec![Subspace::full(3)]);
    }

    #[test]
    fn enumeration_respects_budget() {
        let err = enumerate_subspaces(2, 6, 3, Budget(100)).err().unwrap();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                required: BigUint::from(1395u32),
                cap: 100
            }
        );
    }

    #[test]
    fn intersection_of_planes_in_f2_cubed() {
        let f = Field::new(2).unwrap();
        let planes: Vec<Subspace> = enumerate_subspaces(2, 3, 2, Budget::default())
            .unwrap()
            .collect();
        let members = |s: &Subspace| -> Vec<Vec<u32>> {
            (0..8u32)
                .map(|x| (0..3).map(|i| x >> i & 1).collect::<Vec<u32>>())
                .filter(|v| s.contains(&f, v))
                .collect()
        };
        for u in &planes {
            assert_eq!(&u.intersect(&f, u).unwrap(), u);
            assert_eq!(
                u.intersect(&f, &Subspace::zero(3)).unwrap(),
                Subspace::zero(3)
            );
            for w in &planes {
                if u == w {
                    continue;
                }
                let i = u.intersect(&f, w).unwrap();
                assert_eq!(i.dim(), 1);
                let mu = members(u);
                let common = members(w).into_iter().filter(|v| mu.contains(v)).count();
                assert_eq!(common, 2);
                assert_eq!(i.dim() + u.sum(&f, w).unwrap().dim(), u.dim() + w.dim());
            }
        }
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = Field::new(2).unwrap();
        assert_eq!(
            Subspace::full(2).intersect(&f, &Subspace::full(3)),
            Err(Error::AmbientMismatch(2, 3))
        );
    }

    #[test]
    fn null_space_and_inverse() {
        let f = ExtField::new(3, 2).unwrap();
        let m = Mat::from_rows(&[vec![1, 2, 3, 4], vec![5, 6, 7, 8]]).unwrap();
        let k = m.null_space(&f);
        assert_eq!(k.rows(), 4 - m.rank(&f));
        assert!(m.mul(&f, &k.transpose()).unwrap().is_zero());
        let a = Mat::from_rows(&[vec![1, 3], vec![4, 2]]).unwrap();
        if let Some(inv) = a.inverse(&f) {
            assert_eq!(a.mul(&f, &inv).unwrap(), Mat::identity(2));
        } else {
            assert!(a.rank(&f) < 2);
        }
    }

    #[test]
    fn json_shape() {
        let m = Mat::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[1,0],[0,1]]");
        let back: Mat = serde_json::from_str("[[1,0],[0,1]]").unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Mat>("[[1,0],[1]]").is_err());
    }
}
