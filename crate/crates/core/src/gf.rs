//! Prime fields `F_q` and their extensions `F_{q^m}`.
//!
//! Elements are plain integers. In `F_q` they are residues in `[0, q)`; in
//! `F_{q^m}` an element `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` of
//! `F_q[x]/(f)` is stored as the base-q integer `sum c_i q^i`. Constants of
//! the base field therefore keep their value under the embedding
//! `F_q -> F_{q^m}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fqlinalg::Mat;

pub type Elem = u32;

/// Largest extension order for which log/exp tables are built.
const TABLE_LIMIT: u32 = 1 << 20;

/// Arithmetic shared by prime fields and their extensions.
pub trait FiniteField: Send + Sync {
    fn order(&self) -> u32;
    fn characteristic(&self) -> u32;
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: Elem) -> Option<Elem>;

    fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    fn contains(&self, a: Elem) -> bool {
        a < self.order()
    }

    fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

pub(crate) fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    q: u32,
    inverses: Vec<u32>,
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if q >= 1 << 16 {
            return Err(Error::FieldTooLarge(q as u64));
        }
        let mut inverses = vec![0; q as usize];
        for a in 1..q {
            inverses[a as usize] = pow_mod(a, q - 2, q);
        }
        Ok(Self { q, inverses })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Reduces a signed integer into `[0, q)`.
    pub fn from_i64(&self, v: i64) -> Elem {
        v.rem_euclid(self.q as i64) as Elem
    }
}

fn pow_mod(mut a: u32, mut e: u32, q: u32) -> u32 {
    let mut acc = 1u64;
    let mut base = a as u64 % q as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    a = acc as u32;
    a
}

impl FiniteField for Field {
    fn order(&self) -> u32 {
        self.q
    }

    fn characteristic(&self) -> u32 {
        self.q
    }

    #[inline]
    fn add(&self, a: Elem, b: Elem) -> Elem {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    fn neg(&self, a: Elem) -> Elem {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        a * b % self.q
    }

    fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            None
        } else {
            Some(self.inverses[a as usize])
        }
    }
}

/// Dense polynomial arithmetic over a prime field, coefficients low-to-high.
pub(crate) mod poly {
    use super::{Field, FiniteField};

    pub fn trim(mut p: Vec<u32>) -> Vec<u32> {
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    pub fn degree(p: &[u32]) -> Option<usize> {
        p.iter().rposition(|&c| c != 0)
    }

    pub fn sub(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let len = a.len().max(b.len());
        let out = (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                f.sub(x, y)
            })
            .collect();
        trim(out)
    }

    pub fn rem(f: &Field, a: &[u32], m: &[u32]) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let dm = degree(m).expect("division by zero polynomial");
        let lead_inv = f.inv(m[dm]).expect("nonzero leading coefficient");
        while let Some(dr) = degree(&r) {
            if dr < dm {
                break;
            }
            let c = f.mul(r[dr], lead_inv);
            let shift = dr - dm;
            for (i, &mc) in m.iter().enumerate().take(dm + 1) {
                r[i + shift] = f.sub(r[i + shift], f.mul(c, mc));
            }
            r = trim(r);
        }
        r
    }

    pub fn mul(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        trim(out)
    }

    pub fn mulmod(f: &Field, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
        rem(f, &mul(f, a, b), m)
    }

    pub fn powmod(f: &Field, a: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
        let mut base = rem(f, a, m);
        let mut acc = vec![1];
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(f, &acc, &base, m);
            }
            base = mulmod(f, &base, &base, m);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(f, &a, &b);
            a = b;
            b = r;
        }
        a
    }

    pub fn eval(f: &Field, p: &[u32], x: u32) -> u32 {
        p.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }
}

/// Irreducibility of a monic polynomial over `F_q`: no roots in `F_q`, and
/// `gcd(f, x^{q^i} - x) = 1` for every `i <= deg/2`.
pub fn is_irreducible(field: &Field, modulus: &[u32]) -> bool {
    let Some(m) = poly::degree(modulus) else {
        return false;
    };
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    if (0..field.q()).any(|x| poly::eval(field, modulus, x) == 0) {
        return false;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=m / 2 {
        h = poly::powmod(field, &h, field.q() as u64, modulus);
        let g = poly::gcd(field, modulus, &poly::sub(field, &h, &x));
        if poly::degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree `m` over `F_q`, where the
/// non-leading coefficients (low-to-high) are read as base-q digits of a
/// counter. Returns `m + 1` coefficients, low-to-high.
pub fn find_irreducible(q: u32, m: usize) -> Result<Vec<u32>> {
    let field = Field::new(q)?;
    if m == 0 {
        return Err(Error::InvalidParameters("m ≥ 1".into()));
    }
    let count = (q as u64)
        .checked_pow(m as u32)
        .ok_or(Error::FieldTooLarge(u64::MAX))?;
    for c in 0..count {
        let mut coeffs = Vec::with_capacity(m + 1);
        let mut rest = c;
        for _ in 0..m {
            coeffs.push((rest % q as u64) as u32);
            rest /= q as u64;
        }
        coeffs.push(1);
        if is_irreducible(&field, &coeffs) {
            return Ok(coeffs);
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Serializable description of a field: `{"q": 2}` for a prime field or
/// `{"q": 2, "m": 4, "modulus": [1,1,0,0,1]}` for an extension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

/// The extension `F_{q^m} = F_q[x]/(f)` for a monic irreducible `f`.
#[derive(Clone, Debug)]
pub struct ExtField {
    base: Field,
    degree: usize,
    modulus: Vec<u32>,
    order: u32,
    digit_weights: Vec<u32>,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.modulus == other.modulus
    }
}

impl Eq for ExtField {}

impl ExtField {
    /// Extension of degree `m` using [`find_irreducible`] as modulus.
    pub fn new(q: u32, m: usize) -> Result<Self> {
        let modulus = find_irreducible(q, m)?;
        Self::with_modulus(q, modulus)
    }

    pub fn with_modulus(q: u32, modulus: Vec<u32>) -> Result<Self> {
        let base = Field::new(q)?;
        let degree = modulus.len().saturating_sub(1);
        if degree == 0 || modulus[degree] != 1 || modulus.iter().any(|&c| c >= q) {
            return Err(Error::BadModulus {
                expected: degree.max(1),
                got: modulus,
            });
        }
        if !is_irreducible(&base, &modulus) {
            return Err(Error::ReducibleModulus(modulus));
        }
        let order64 = (q as u64)
            .checked_pow(degree as u32)
            .filter(|&o| o <= u32::MAX as u64 / 2)
            .ok_or(Error::FieldTooLarge(u64::MAX))?;
        let order = order64 as u32;
        let digit_weights = (0..degree).map(|i| q.pow(i as u32)).collect();
        let mut field = Self {
            base,
            degree,
            modulus,
            order,
            digit_weights,
            tables: None,
        };
        if order <= TABLE_LIMIT {
            field.tables = Some(field.build_tables());
        }
        Ok(field)
    }

    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Self> {
        match (&desc.modulus, desc.m) {
            (Some(modulus), m) => {
                if let Some(m) = m {
                    if modulus.len() != m + 1 {
                        return Err(Error::BadModulus {
                            expected: m,
                            got: modulus.clone(),
                        });
                    }
                }
                Self::with_modulus(desc.q, modulus.clone())
            }
            (None, Some(m)) => Self::new(desc.q, m),
            (None, None) => Self::new(desc.q, 1),
        }
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            q: self.base.q(),
            m: Some(self.degree),
            modulus: Some(self.modulus.clone()),
        }
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn q(&self) -> u32 {
        self.base.q()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The class of `x`, a root of the modulus.
    pub fn generator(&self) -> Elem {
        if self.degree >= 2 {
            self.q()
        } else {
            self.base.neg(self.modulus[0])
        }
    }

    /// Coefficients of `x` in the polynomial basis, low-to-high.
    pub fn to_poly(&self, x: Elem) -> Vec<u32> {
        let q = self.q();
        let mut rest = x;
        (0..self.degree)
            .map(|_| {
                let d = rest % q;
                rest /= q;
                d
            })
            .collect()
    }

    pub fn from_poly(&self, coeffs: &[u32]) -> Elem {
        coeffs
            .iter()
            .zip(&self.digit_weights)
            .map(|(&c, &w)| c * w)
            .sum()
    }

    /// `x^{q^i}`, by `i` applications of the q-power map.
    pub fn frobenius(&self, x: Elem, i: usize) -> Elem {
        let mut y = x;
        for _ in 0..i {
            y = self.pow(y, self.q() as u64);
        }
        y
    }

    /// Whether `x` lies in the prime subfield.
    pub fn is_base(&self, x: Elem) -> bool {
        x < self.q()
    }

    pub fn polynomial_basis(&self) -> FieldBasis {
        FieldBasis::new(
            self,
            (0..self.degree).map(|i| self.digit_weights[i]).collect(),
        )
        .expect("polynomial basis is a basis")
    }

    fn poly_mul(&self, a: Elem, b: Elem) -> Elem {
        let p = poly::mulmod(
            &self.base,
            &self.to_poly(a),
            &self.to_poly(b),
            &self.modulus,
        );
        self.from_poly(&p)
    }

    fn build_tables(&self) -> (Vec<u32>, Vec<u32>) {
        let group = self.order - 1;
        let factors = prime_factors(group);
        let pow_slow = |g: Elem, mut e: u32| {
            let mut base = g;
            let mut acc = 1;
            while e > 0 {
                if e & 1 == 1 {
                    acc = self.poly_mul(acc, base);
                }
                base = self.poly_mul(base, base);
                e >>= 1;
            }
            acc
        };
        let primitive = (1..self.order)
            .find(|&g| factors.iter().all(|&p| pow_slow(g, group / p) != 1))
            .expect("multiplicative group is cyclic");
        let mut exp = vec![0u32; group as usize];
        let mut log = vec![0u32; self.order as usize];
        let mut cur = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur;
            log[cur as usize] = i as u32;
            cur = self.poly_mul(cur, primitive);
        }
        (exp, log)
    }
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FiniteField for ExtField {
    fn order(&self) -> u32 {
        self.order
    }

    fn characteristic(&self) -> u32 {
        self.q()
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        let q = self.q();
        if q == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.digit_weights {
            out += ((a % q + b % q) % q) * w;
            a /= q;
            b /= q;
        }
        out
    }

    fn neg(&self, a: Elem) -> Elem {
        let q = self.q();
        if q == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &self.digit_weights {
            out += ((q - a % q) % q) * w;
            a /= q;
        }
        out
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some((exp, log)) => {
                let group = self.order - 1;
                let s = (log[a as usize] as u64 + log[b as usize] as u64) % group as u64;
                exp[s as usize]
            }
            None => self.poly_mul(a, b),
        }
    }

    fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        match &self.tables {
            Some((exp, log)) => {
                let group = self.order - 1;
                Some(exp[((group - log[a as usize]) % group) as usize])
            }
            None => Some(self.pow(a, self.order as u64 - 2)),
        }
    }
}

/// An ordered `F_q`-basis `{g_1, ..., g_m}` of `F_{q^m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldBasis {
    elems: Vec<Elem>,
    /// Inverse of the matrix whose rows are the polynomial coordinates of the
    /// basis elements.
    inverse: Mat,
}

impl FieldBasis {
    pub fn new(field: &ExtField, elems: Vec<Elem>) -> Result<Self> {
        if elems.len() != field.degree() {
            return Err(Error::Shape(format!(
                "basis needs {} elements, got {}",
                field.degree(),
                elems.len()
            )));
        }
        if let Some(&bad) = elems.iter().find(|&&e| !field.contains(e)) {
            return Err(Error::NotAnElement {
                value: bad,
                order: field.order(),
            });
        }
        let rows: Vec<Vec<u32>> = elems.iter().map(|&e| field.to_poly(e)).collect();
        let mat = Mat::from_rows(&rows)?;
        let inverse = mat.inverse(field.base()).ok_or(Error::SingularBasis)?;
        Ok(Self { elems, inverse })
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    /// Coordinates `(l_1, ..., l_m)` with `x = sum l_j g_j`.
    pub fn to_coords(&self, field: &ExtField, x: Elem) -> Vec<u32> {
        let p = field.to_poly(x);
        let m = p.len();
        (0..m)
            .map(|j| {
                (0..m).fold(0, |acc, i| {
                    field
                        .base()
                        .add(acc, field.base().mul(p[i], self.inverse.get(i, j)))
                })
            })
            .collect()
    }

    pub fn from_coords(&self, field: &ExtField, coords: &[u32]) -> Elem {
        coords
            .iter()
            .zip(&self.elems)
            .fold(0, |acc, (&c, &g)| field.add(acc, field.mul(c, g)))
    }
}
