//! A fixed set of small codes, audited once and shared by the claim checks.

use rayon::prelude::*;

use rankcode::audit::{audit, Audit, Depth};
use rankcode::catalog;
use rankcode::codes::{
    extend, gabidulin, random_matrix_code, random_vector_code, standard_points, Code,
};
use rankcode::fqlinalg::Budget;
use rankcode::gf::ExtField;
use rankcode::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Any,
    Matrix,
    Vector,
}

pub struct Entry {
    pub label: String,
    pub code: Code,
    pub audit: Audit,
}

impl Entry {
    pub fn is(&self, kind: Kind) -> bool {
        matches!(
            (kind, &self.code),
            (Kind::Any, _) | (Kind::Matrix, Code::Matrix(_)) | (Kind::Vector, Code::Vector(_))
        )
    }
}

/// `(q, n, m, seeds)` for random matrix codes of every dimension `1 <= t < nm`.
const MATRIX_SHAPES: &[(u32, usize, usize, u64)] = &[
    (2, 2, 2, 3),
    (2, 2, 3, 3),
    (2, 3, 3, 3),
    (3, 2, 2, 2),
    (3, 2, 3, 2),
    (2, 2, 4, 2),
    (2, 3, 4, 1),
];

/// `(q, n, m, t, seeds)` for single dimensions of larger shapes.
const MATRIX_POINTS: &[(u32, usize, usize, usize, u64)] =
    &[(2, 4, 4, 4, 3), (2, 4, 4, 8, 10), (2, 4, 4, 12, 3)];

/// `(q, m, seeds)` for random `[n, k]` codes with `2 <= n <= m`, `1 <= k < n`.
const VECTOR_FIELDS: &[(u32, usize, u64)] =
    &[(2, 2, 3), (2, 3, 3), (2, 4, 2), (3, 2, 3), (3, 3, 2)];

enum Source {
    Matrix(u32, usize, usize, usize, u64),
    Vector(u32, usize, usize, usize, u64),
    Fixed(String, Code),
}

fn sources() -> Result<Vec<Source>> {
    let mut out = Vec::new();
    for &(q, n, m, seeds) in MATRIX_SHAPES {
        for t in 1..n * m {
            for s in 0..seeds {
                out.push(Source::Matrix(q, n, m, t, s));
            }
        }
    }
    for &(q, n, m, t, seeds) in MATRIX_POINTS {
        for s in 0..seeds {
            out.push(Source::Matrix(q, n, m, t, s));
        }
    }
    let f16 = ExtField::new(2, 4)?;
    for s in 0..6 {
        out.push(Source::Fixed(
            format!("expanded random vector (2^4, n = 4, k = 2, seed {s})"),
            Code::Matrix(Code::Vector(random_vector_code(&f16, 4, 2, s)?).as_matrix()),
        ));
    }
    for &(q, m, seeds) in VECTOR_FIELDS {
        for n in 2..=m {
            for k in 1..n {
                for s in 0..seeds {
                    out.push(Source::Vector(q, m, n, k, s));
                }
            }
        }
    }
    let fixed = [
        (
            "diagonal-and-corner",
            Code::Matrix(catalog::diagonal_and_corner()),
        ),
        ("single-corner", Code::Matrix(catalog::single_corner())),
        (
            "ternary-shifted-identities",
            Code::Matrix(catalog::ternary_shifted_identities()),
        ),
        (
            "binary-shifted-identities",
            Code::Matrix(catalog::binary_shifted_identities()),
        ),
        (
            "amrd-with-sparse-dual",
            Code::Matrix(catalog::amrd_with_sparse_dual()),
        ),
        ("two-units-dual", Code::Matrix(catalog::two_units_dual())),
        ("self-dual-pairs", Code::Matrix(catalog::self_dual_pairs())),
        (
            "missing-coordinate",
            Code::Vector(catalog::missing_coordinate()),
        ),
    ];
    out.extend(fixed.into_iter().map(|(l, c)| Source::Fixed(l.into(), c)));
    for (q, m) in [(2, 4), (3, 3)] {
        let f = ExtField::new(q, m)?;
        for n in 2..=m {
            for k in 1..n {
                let g = gabidulin(&f, n, k, &standard_points(&f, n))?;
                if n < m {
                    out.push(Source::Fixed(
                        format!("extended-gabidulin({q}^{m}, {n}, {k})"),
                        Code::Vector(extend(&g)?),
                    ));
                }
                out.push(Source::Fixed(
                    format!("gabidulin({q}^{m}, {n}, {k})"),
                    Code::Vector(g),
                ));
            }
        }
    }
    for (n, m) in [(2, 2), (2, 4), (3, 4)] {
        for s in 0..2 {
            out.push(Source::Fixed(
                format!("paired-coordinates(2, {n}, {m}, seed {s})"),
                Code::Matrix(catalog::paired_coordinates(2, n, m, s)?),
            ));
        }
    }
    Ok(out)
}

fn entry(source: Source, budget: Budget) -> Result<Entry> {
    let (label, code) = match source {
        Source::Matrix(q, n, m, t, s) => (
            format!("random matrix ({q}, {n}, {m}, t = {t}, seed {s})"),
            Code::Matrix(random_matrix_code(q, n, m, t, s)?),
        ),
        Source::Vector(q, m, n, k, s) => (
            format!("random vector ({q}^{m}, n = {n}, k = {k}, seed {s})"),
            Code::Vector(random_vector_code(&ExtField::new(q, m)?, n, k, s)?),
        ),
        Source::Fixed(l, c) => (l, c),
    };
    let audit = audit(&code, Depth::All, true, budget)?;
    Ok(Entry { label, code, audit })
}

/// Audits every corpus code with all checks and generalized weights.
pub fn build(budget: Budget) -> Result<Vec<Entry>> {
    sources()?
        .into_par_iter()
        .map(|s| entry(s, budget))
        .collect()
}
