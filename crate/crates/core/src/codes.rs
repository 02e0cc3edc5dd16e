//! Matrix codes in `(F_q)_{n,m}` and vector codes in `F_{q^m}^n`, with duals,
//! expansion to matrix form, Gabidulin and extended codes, subcodes and seeded
//! random codes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::enumerate;
use crate::error::{Error, Result};
use crate::fqlinalg::{Budget, Mat};
use crate::gf::{Elem, ExtField, Field, FieldBasis, FieldDescriptor, FiniteField};

/// An `F_q`-linear subspace of `n x m` matrices, `n <= m`.
///
/// Matrices are flattened row by row into vectors of length `nm`; the trace
/// form `Tr(B A^T)` is then the ordinary dot product. The basis is kept in
/// reduced row echelon form, so two codes are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixCode {
    field: Field,
    n: usize,
    m: usize,
    flat: Mat,
}

impl MatrixCode {
    /// Code spanned by linearly independent `n x m` matrices.
    pub fn new(q: u32, n: usize, m: usize, basis: &[Mat]) -> Result<Self> {
        let code = Self::span(q, n, m, basis)?;
        if code.dim() != basis.len() {
            return Err(Error::Shape(
                "basis matrices are linearly dependent".to_string(),
            ));
        }
        Ok(code)
    }

    /// Code spanned by arbitrary `n x m` matrices.
    pub fn span(q: u32, n: usize, m: usize, gens: &[Mat]) -> Result<Self> {
        let field = Field::new(q)?;
        check_shape(n, m)?;
        let mut rows = Vec::with_capacity(gens.len());
        for g in gens {
            if g.rows() != n || g.cols() != m {
                return Err(Error::Shape(format!(
                    "expected {n}x{m} matrices, got {}x{}",
                    g.rows(),
                    g.cols()
                )));
            }
            g.check_field(&field)?;
            rows.push(g.data().to_vec());
        }
        let flat = Mat::from_rows_with_cols(&rows, n * m)?;
        Self::from_flat(field, n, m, &flat)
    }

    /// Like [`MatrixCode::span`] but accepts `rows > cols` by transposing
    /// every generator first.
    pub fn span_any_shape(q: u32, rows: usize, cols: usize, gens: &[Mat]) -> Result<Self> {
        if rows <= cols {
            return Self::span(q, rows, cols, gens);
        }
        let t: Vec<Mat> = gens.iter().map(Mat::transpose).collect();
        Self::span(q, cols, rows, &t)
    }

    fn from_flat(field: Field, n: usize, m: usize, flat: &Mat) -> Result<Self> {
        Ok(Self {
            flat: flat.row_basis(&field),
            field,
            n,
            m,
        })
    }

    pub fn zero(q: u32, n: usize, m: usize) -> Result<Self> {
        Self::span(q, n, m, &[])
    }

    pub fn full(q: u32, n: usize, m: usize) -> Result<Self> {
        let field = Field::new(q)?;
        check_shape(n, m)?;
        Self::from_flat(field, n, m, &Mat::identity(n * m))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension `t` over `F_q`.
    pub fn dim(&self) -> usize {
        self.flat.rows()
    }

    /// Trivial codes (`t = 0` or `t = nm`) are excluded from classification.
    pub fn is_trivial(&self) -> bool {
        self.dim() == 0 || self.dim() == self.n * self.m
    }

    /// Basis in flattened form, one `nm`-vector per row.
    pub fn flat_basis(&self) -> &Mat {
        &self.flat
    }

    pub fn basis(&self) -> Vec<Mat> {
        (0..self.dim())
            .map(|i| Mat::from_vec(self.n, self.m, self.flat.row(i).to_vec()).expect("shape"))
            .collect()
    }

    pub fn contains(&self, a: &Mat) -> bool {
        if a.rows() != self.n || a.cols() != self.m {
            return false;
        }
        let row = Mat::from_rows(&[a.data()]).expect("single row");
        self.flat.stack(&row).map(|s| s.rank(&self.field)).ok() == Some(self.dim())
    }

    /// Dual under `<A, B> = sum A_ij B_ij`.
    pub fn dual(&self) -> MatrixCode {
        let nm = self.n * self.m;
        let flat = if self.dim() == 0 {
            Mat::identity(nm)
        } else {
            self.flat.null_space(&self.field)
        };
        Self::from_flat(self.field.clone(), self.n, self.m, &flat).expect("shape preserved")
    }

    /// Code spanned by the given `nm`-vectors.
    pub fn from_flat_rows(q: u32, n: usize, m: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let field = Field::new(q)?;
        check_shape(n, m)?;
        let flat = Mat::from_rows_with_cols(rows, n * m)?;
        flat.check_field(&field)?;
        Self::from_flat(field, n, m, &flat)
    }
}

fn check_shape(n: usize, m: usize) -> Result<()> {
    if n == 0 || n > m {
        return Err(Error::InvalidParameters(format!(
            "1 ≤ n ≤ m (n = {n}, m = {m})"
        )));
    }
    if m > 64 {
        return Err(Error::InvalidParameters(format!("m ≤ 64 (m = {m})")));
    }
    Ok(())
}

/// An `F_{q^m}`-linear `[n, k]` code, `n <= m`, given by a full-rank
/// generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCode {
    field: ExtField,
    n: usize,
    generator: Mat,
}

impl VectorCode {
    pub fn new(field: ExtField, generator: Mat) -> Result<Self> {
        let n = generator.cols();
        check_shape(n.max(1), field.degree())?;
        generator.check_field(&field)?;
        if generator.rank(&field) != generator.rows() {
            return Err(Error::Shape("generator rows are linearly dependent".into()));
        }
        Ok(Self {
            field,
            n,
            generator,
        })
    }

    /// Code spanned by arbitrary rows of length `n`.
    pub fn span(field: ExtField, n: usize, rows: &Mat) -> Result<Self> {
        if rows.rows() > 0 && rows.cols() != n {
            return Err(Error::Shape(format!("rows must have length {n}")));
        }
        let basis = if rows.rows() == 0 {
            Mat::zeros(0, n)
        } else {
            rows.row_basis(&field)
        };
        Self::new(field, basis)
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.field.degree()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Mat {
        &self.generator
    }

    /// Generator in reduced row echelon form; equal codes share it.
    pub fn canonical_generator(&self) -> Mat {
        self.generator.row_basis(&self.field)
    }

    pub fn same_code(&self, other: &VectorCode) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.canonical_generator() == other.canonical_generator()
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let Ok(row) = Mat::from_rows_with_cols(&[v], self.n) else {
            return false;
        };
        self.generator.stack(&row).map(|s| s.rank(&self.field)).ok() == Some(self.k())
    }

    /// Dual under the standard inner product `sum u_i v_i`.
    pub fn dual(&self) -> VectorCode {
        let gen = if self.k() == 0 {
            Mat::identity(self.n)
        } else {
            self.generator.null_space(&self.field)
        };
        VectorCode {
            field: self.field.clone(),
            n: self.n,
            generator: gen,
        }
    }
}

/// `lambda_B(v)`: the `n x m` matrix whose row `i` holds the coordinates of
/// `v_i` in the basis `B`.
pub fn lambda(field: &ExtField, basis: &FieldBasis, v: &[Elem]) -> Mat {
    let rows: Vec<Vec<u32>> = v.iter().map(|&x| basis.to_coords(field, x)).collect();
    Mat::from_rows_with_cols(&rows, field.degree()).expect("coordinate rows")
}

/// `F_q`-rank of a vector over `F_{q^m}`: the dimension of the span of its
/// entries.
pub fn vector_rank(field: &ExtField, v: &[Elem]) -> usize {
    let rows: Vec<Vec<u32>> = v.iter().map(|&x| field.to_poly(x)).collect();
    Mat::from_rows_with_cols(&rows, field.degree())
        .expect("coordinate rows")
        .rank(field.base())
}

/// The matrix code `lambda_B(C)` of dimension `m k`, spanned by
/// `lambda_B(gamma_j g_i)` over generator rows `g_i` and basis elements
/// `gamma_j`.
pub fn expand(code: &VectorCode, basis: &FieldBasis) -> MatrixCode {
    let f = code.field();
    let mut gens = Vec::with_capacity(code.k() * code.m());
    for i in 0..code.k() {
        let g = code.generator().row(i);
        for &gamma in basis.elements() {
            let v: Vec<Elem> = g.iter().map(|&x| f.mul(gamma, x)).collect();
            gens.push(lambda(f, basis, &v));
        }
    }
    MatrixCode::span(f.q(), code.n(), code.m(), &gens).expect("expansion has valid shape")
}

/// Gabidulin code with generator `M_k(v)`: row `i` is `(v_1^{q^i}, ..., v_n^{q^i})`.
pub fn gabidulin(field: &ExtField, n: usize, k: usize, v: &[Elem]) -> Result<VectorCode> {
    if k > n {
        return Err(Error::InvalidParameters("k ≤ n".into()));
    }
    if k == 0 {
        return Err(Error::InvalidParameters("k ≥ 1".into()));
    }
    if n > field.degree() {
        return Err(Error::InvalidParameters("n ≤ m".into()));
    }
    if v.len() != n {
        return Err(Error::Shape(format!(
            "v has {} entries, expected {n}",
            v.len()
        )));
    }
    if let Some(&bad) = v.iter().find(|&&x| !field.contains(x)) {
        return Err(Error::NotAnElement {
            value: bad,
            order: field.order(),
        });
    }
    if vector_rank(field, v) != n {
        return Err(Error::InvalidParameters(
            "entries of v linearly independent over F_q".into(),
        ));
    }
    let rows: Vec<Vec<u32>> = (0..k)
        .map(|i| v.iter().map(|&x| field.frobenius(x, i)).collect())
        .collect();
    VectorCode::new(field.clone(), Mat::from_rows(&rows)?)
}

/// Default evaluation points `(1, a, a^2, ..., a^{n-1})` for the generator
/// `a` of the field; these are independent over `F_q` whenever `n <= m`.
pub fn standard_points(field: &ExtField, n: usize) -> Vec<Elem> {
    let a = field.generator();
    (0..n).map(|i| field.pow(a, i as u64)).collect()
}

/// Parity extension: appends `-sum c_i` to every codeword.
pub fn extend(code: &VectorCode) -> Result<VectorCode> {
    if code.n() + 1 > code.m() {
        return Err(Error::InvalidParameters("n + 1 ≤ m".into()));
    }
    let f = code.field();
    let rows: Vec<Vec<u32>> = (0..code.k())
        .map(|i| {
            let mut r = code.generator().row(i).to_vec();
            let s = r.iter().fold(0, |acc, &x| f.add(acc, x));
            r.push(f.neg(s));
            r
        })
        .collect();
    VectorCode::new(f.clone(), Mat::from_rows_with_cols(&rows, code.n() + 1)?)
}

/// A `t'`-dimensional subcode containing a fixed codeword of minimum rank,
/// completed greedily from the code's echelon basis.
pub fn subcode_with_min_vector(
    code: &MatrixCode,
    dim: usize,
    budget: Budget,
) -> Result<MatrixCode> {
    if dim == 0 || dim > code.dim() {
        return Err(Error::InvalidParameters(format!(
            "1 ≤ t' ≤ t (t' = {dim}, t = {})",
            code.dim()
        )));
    }
    let word = enumerate::min_rank_word(code, budget)?
        .ok_or_else(|| Error::TrivialCode("zero code has no minimum-rank word".into()))?;
    let f = code.field();
    let mut rows = vec![word.data().to_vec()];
    for i in 0..code.dim() {
        if rows.len() == dim {
            break;
        }
        let candidate = code.flat_basis().row(i).to_vec();
        let mut trial = rows.clone();
        trial.push(candidate);
        if Mat::from_rows(&trial)?.rank(f) == trial.len() {
            rows = trial;
        }
    }
    MatrixCode::from_flat_rows(code.q(), code.n(), code.m(), &rows)
}

/// Seeded random `t`-dimensional matrix code; vectors are drawn uniformly and
/// kept while they stay independent.
pub fn random_matrix_code(q: u32, n: usize, m: usize, t: usize, seed: u64) -> Result<MatrixCode> {
    let field = Field::new(q)?;
    check_shape(n, m)?;
    let nm = n * m;
    if t > nm {
        return Err(Error::InvalidParameters(format!(
            "t ≤ nm (t = {t}, nm = {nm})"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(t);
    while rows.len() < t {
        let v: Vec<u32> = (0..nm).map(|_| rng.random_range(0..q)).collect();
        rows.push(v);
        if Mat::from_rows(&rows)?.rank(&field) < rows.len() {
            rows.pop();
        }
    }
    MatrixCode::from_flat_rows(q, n, m, &rows)
}

/// Seeded random `[n, k]` code over `F_{q^m}`.
pub fn random_vector_code(field: &ExtField, n: usize, k: usize, seed: u64) -> Result<VectorCode> {
    check_shape(n, field.degree())?;
    if k > n {
        return Err(Error::InvalidParameters("k ≤ n".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(k);
    while rows.len() < k {
        let v: Vec<u32> = (0..n).map(|_| rng.random_range(0..field.order())).collect();
        rows.push(v);
        if Mat::from_rows(&rows)?.rank(field) < rows.len() {
            rows.pop();
        }
    }
    VectorCode::new(field.clone(), Mat::from_rows_with_cols(&rows, n)?)
}

/// A code of either representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Code {
    Matrix(MatrixCode),
    Vector(VectorCode),
}

impl Code {
    pub fn n(&self) -> usize {
        match self {
            Code::Matrix(c) => c.n(),
            Code::Vector(c) => c.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            Code::Matrix(c) => c.m(),
            Code::Vector(c) => c.m(),
        }
    }

    pub fn q(&self) -> u32 {
        match self {
            Code::Matrix(c) => c.q(),
            Code::Vector(c) => c.field().q(),
        }
    }

    /// Dimension over `F_q`.
    pub fn fq_dim(&self) -> usize {
        match self {
            Code::Matrix(c) => c.dim(),
            Code::Vector(c) => c.k() * c.m(),
        }
    }

    pub fn dual(&self) -> Code {
        match self {
            Code::Matrix(c) => Code::Matrix(c.dual()),
            Code::Vector(c) => Code::Vector(c.dual()),
        }
    }

    /// The matrix form, expanding vector codes in the polynomial basis.
    pub fn as_matrix(&self) -> MatrixCode {
        match self {
            Code::Matrix(c) => c.clone(),
            Code::Vector(c) => expand(c, &c.field().polynomial_basis()),
        }
    }
}

/// On-disk JSON form of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CodeFile {
    Matrix {
        field: FieldDescriptor,
        n: usize,
        m: usize,
        basis: Vec<Mat>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
    Vector {
        field: FieldDescriptor,
        n: usize,
        m: usize,
        generator: Mat,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

impl CodeFile {
    pub fn from_code(code: &Code, seed: Option<u64>) -> Self {
        match code {
            Code::Matrix(c) => CodeFile::Matrix {
                field: FieldDescriptor {
                    q: c.q(),
                    m: None,
                    modulus: None,
                },
                n: c.n(),
                m: c.m(),
                basis: c.basis(),
                seed,
            },
            Code::Vector(c) => CodeFile::Vector {
                field: c.field().descriptor(),
                n: c.n(),
                m: c.m(),
                generator: if c.k() == 0 {
                    Mat::zeros(0, c.n())
                } else {
                    c.generator().clone()
                },
                seed,
            },
        }
    }

    pub fn to_code(&self) -> Result<Code> {
        match self {
            CodeFile::Matrix {
                field, n, m, basis, ..
            } => {
                if field.m.is_some_and(|d| d != 1) || field.modulus.is_some() {
                    return Err(Error::InvalidParameters(
                        "matrix codes live over a prime field".into(),
                    ));
                }
                Ok(Code::Matrix(MatrixCode::span(field.q, *n, *m, basis)?))
            }
            CodeFile::Vector {
                field,
                n,
                m,
                generator,
                ..
            } => {
                let f = ExtField::from_descriptor(field)?;
                if f.degree() != *m {
                    return Err(Error::Shape(format!(
                        "field has degree {}, file says m = {m}",
                        f.degree()
                    )));
                }
                let gen = if generator.rows() == 0 {
                    Mat::zeros(0, *n)
                } else {
                    generator.clone()
                };
                if gen.cols() != *n {
                    return Err(Error::Shape(format!("generator rows must have length {n}")));
                }
                Ok(Code::Vector(VectorCode::span(f, *n, &gen)?))
            }
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            CodeFile::Matrix { seed, .. } | CodeFile::Vector { seed, .. } => *seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{rank_distribution, vector_rank_distribution};

    fn unit(n: usize, m: usize, i: usize, j: usize) -> Mat {
        let mut e = Mat::zeros(n, m);
        e.set(i, j, 1);
        e
    }

    #[test]
    fn dual_of_zero_is_full() {
        let z = MatrixCode::zero(2, 2, 3).unwrap();
        assert_eq!(z.dual(), MatrixCode::full(2, 2, 3).unwrap());
        assert_eq!(z.dual().dual(), z);
    }

    #[test]
    fn dual_contains_off_diagonal_unit() {
        let c = MatrixCode::new(
            2,
            3,
            3,
            &[
                unit(3, 3, 0, 0),
                unit(3, 3, 1, 1),
                unit(3, 3, 2, 2),
                unit(3, 3, 0, 1),
            ],
        )
        .unwrap();
        let d = c.dual();
        assert_eq!(c.dim() + d.dim(), 9);
        assert!(d.contains(&unit(3, 3, 1, 0)));
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn shape_rules() {
        assert!(matches!(
            MatrixCode::zero(2, 3, 2),
            Err(Error::InvalidParameters(_))
        ));
        let g = vec![Mat::from_rows(&[vec![1, 0], vec![1, 1], vec![0, 1]]).unwrap()];
        let c = MatrixCode::span_any_shape(2, 3, 2, &g).unwrap();
        assert_eq!((c.n(), c.m(), c.dim()), (2, 3, 1));
        let dep = [unit(2, 2, 0, 0), unit(2, 2, 0, 0)];
        assert!(MatrixCode::new(2, 2, 2, &dep).is_err());
    }

    #[test]
    fn vector_dual_and_involution() {
        let f = ExtField::new(2, 4).unwrap();
        let a = f.generator();
        let c = VectorCode::new(
            f.clone(),
            Mat::from_rows(&[vec![1, a, f.mul(a, a), 0]]).unwrap(),
        )
        .unwrap();
        let d = c.dual();
        assert_eq!(d.k(), 3);
        assert!(d.contains(&[0, 0, 0, 1]));
        assert!(d.dual().same_code(&c));
        let full = VectorCode::new(f.clone(), Mat::identity(4)).unwrap();
        assert_eq!(full.dual().k(), 0);
    }

    #[test]
    fn expansion_dimension_and_zero_code() {
        let f = ExtField::new(2, 3).unwrap();
        let b = f.polynomial_basis();
        let c = VectorCode::new(f.clone(), Mat::from_rows(&[vec![1, 2, 4]]).unwrap()).unwrap();
        assert_eq!(expand(&c, &b).dim(), 3);
        let z = VectorCode::new(f.clone(), Mat::zeros(0, 3)).unwrap();
        assert_eq!(expand(&z, &b).dim(), 0);
    }

    #[test]
    fn gabidulin_preconditions() {
        let f = ExtField::new(2, 4).unwrap();
        let v = standard_points(&f, 4);
        assert_eq!(
            gabidulin(&f, 4, 5, &v).unwrap_err().to_string(),
            "k ≤ n violated"
        );
        assert!(gabidulin(&f, 3, 1, &[1, 1, 2]).is_err());
        let g = gabidulin(&f, 4, 2, &v).unwrap();
        let a = f.generator();
        assert_eq!(
            g.generator().row(1),
            &[1, f.pow(a, 2), f.pow(a, 4), f.pow(a, 6)]
        );
    }

    #[test]
    fn gabidulin_small_distances() {
        let f = ExtField::new(2, 4).unwrap();
        let a = f.generator();
        let c = gabidulin(&f, 2, 1, &[1, a]).unwrap();
        let dist = vector_rank_distribution(&c, Budget::default()).unwrap();
        assert_eq!(dist.min_distance(), Some(2));
        let full = gabidulin(&f, 4, 4, &standard_points(&f, 4)).unwrap();
        let dist = vector_rank_distribution(&full, Budget::default()).unwrap();
        assert_eq!(dist.min_distance(), Some(1));
    }

    #[test]
    fn extension_appends_negated_sum() {
        let f = ExtField::new(3, 4).unwrap();
        let c = random_vector_code(&f, 3, 2, 11).unwrap();
        let e = extend(&c).unwrap();
        assert_eq!(e.n(), 4);
        assert!(e.dual().contains(&[1, 1, 1, 1]));
        let before = vector_rank_distribution(&c, Budget::default()).unwrap();
        let after = vector_rank_distribution(&e, Budget::default()).unwrap();
        assert_eq!(before.min_distance(), after.min_distance());
        let too_long = random_vector_code(&f, 4, 1, 1).unwrap();
        assert!(extend(&too_long).is_err());
    }

    #[test]
    fn subcode_keeps_a_minimum_word() {
        let c = random_matrix_code(2, 3, 3, 5, 3).unwrap();
        let d = rank_distribution(&c, Budget::default()).unwrap();
        let same = subcode_with_min_vector(&c, 5, Budget::default()).unwrap();
        assert_eq!(same, c);
        let line = subcode_with_min_vector(&c, 1, Budget::default()).unwrap();
        let ld = rank_distribution(&line, Budget::default()).unwrap();
        assert_eq!(ld.min_distance(), d.min_distance());
        assert!(subcode_with_min_vector(&c, 0, Budget::default()).is_err());
        assert!(subcode_with_min_vector(&c, 6, Budget::default()).is_err());
    }

    #[test]
    fn random_codes_are_deterministic() {
        let a = random_matrix_code(3, 2, 3, 4, 42).unwrap();
        let b = random_matrix_code(3, 2, 3, 4, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 4);
        assert_eq!(
            random_matrix_code(2, 2, 2, 4, 1).unwrap(),
            MatrixCode::full(2, 2, 2).unwrap()
        );
        let f = ExtField::new(2, 3).unwrap();
        let v = random_vector_code(&f, 3, 2, 5).unwrap();
        assert_eq!(v, random_vector_code(&f, 3, 2, 5).unwrap());
        assert_eq!(v.k(), 2);
        assert!(random_matrix_code(2, 2, 2, 5, 1).is_err());
    }

    #[test]
    fn code_file_round_trip() {
        let c = Code::Matrix(random_matrix_code(2, 2, 3, 2, 9).unwrap());
        let file = CodeFile::from_code(&c, Some(9));
        let json = serde_json::to_string(&file).unwrap();
        assert!(json.starts_with(r#"{"kind":"matrix","field":{"q":2},"n":2,"m":3,"basis":[[["#));
        let back: CodeFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_code().unwrap(), c);

        let f = ExtField::new(2, 4).unwrap();
        let v = Code::Vector(random_vector_code(&f, 3, 1, 2).unwrap());
        let json = serde_json::to_string(&CodeFile::from_code(&v, None)).unwrap();
        assert!(json.contains(r#""modulus":[1,1,0,0,1]"#));
        let back: CodeFile = serde_json::from_str(&json).unwrap();
        match (back.to_code().unwrap(), v) {
            (Code::Vector(a), Code::Vector(b)) => assert!(a.same_code(&b)),
            _ => panic!("kind changed"),
        }
    }
}
