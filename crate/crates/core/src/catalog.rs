//! Small fixed codes with known distributions, used by the CLI and tests.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codes::{MatrixCode, VectorCode};
use crate::error::{Error, Result};
use crate::fqlinalg::Mat;
use crate::gf::{ExtField, Field, FiniteField};

fn unit(n: usize, m: usize, i: usize, j: usize) -> Mat {
    let mut a = Mat::zeros(n, m);
    a.set(i, j, 1);
    a
}

fn flat(q: u32, n: usize, m: usize, rows: &[&[u32]]) -> MatrixCode {
    let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
    MatrixCode::from_flat_rows(q, n, m, &rows).expect("fixed basis is independent")
}

/// `<E11, E22, E33, E12>` over `F_2`: dually AMRD with `d = d' = 1`.
pub fn diagonal_and_corner() -> MatrixCode {
    let b = [
        unit(3, 3, 0, 0),
        unit(3, 3, 1, 1),
        unit(3, 3, 2, 2),
        unit(3, 3, 0, 1),
    ];
    MatrixCode::new(2, 3, 3, &b).expect("fixed basis")
}

/// `<E21>` in 2 x 2 binary matrices: AMRD with a QMRD dual.
pub fn single_corner() -> MatrixCode {
    MatrixCode::new(2, 2, 2, &[unit(2, 2, 1, 0)]).expect("fixed basis")
}

fn shifted_identities(q: u32) -> MatrixCode {
    flat(
        q,
        3,
        3,
        &[
            &[1, 0, 0, 0, 1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0, 1, 1, 0, 0],
            &[0, 0, 1, 1, 0, 0, 0, 1, 0],
        ],
    )
}

/// Ternary 3-dimensional dually AMRD code with `d = 2`, `d' = 1`.
pub fn ternary_shifted_identities() -> MatrixCode {
    shifted_identities(3)
}

/// The same basis over `F_2`: dually AMRD, yet not the expansion of any
/// `F_8`-linear code.
pub fn binary_shifted_identities() -> MatrixCode {
    shifted_identities(2)
}

/// Binary 5-dimensional AMRD code whose dual is not AMRD.
pub fn amrd_with_sparse_dual() -> MatrixCode {
    flat(
        2,
        3,
        3,
        &[
            &[1, 0, 0, 0, 0, 0, 0, 0, 1],
            &[0, 1, 0, 0, 1, 1, 0, 1, 0],
            &[0, 0, 1, 0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0, 0],
        ],
    )
}

/// Dual of `<E11, E22>` in 3 x 3 binary matrices: QMRD with `d = d' = 1`.
pub fn two_units_dual() -> MatrixCode {
    MatrixCode::new(2, 3, 3, &[unit(3, 3, 0, 0), unit(3, 3, 1, 1)])
        .expect("fixed basis")
        .dual()
}

/// Self-dual AMRD code in 2 x 3 binary matrices.
pub fn self_dual_pairs() -> MatrixCode {
    flat(
        2,
        2,
        3,
        &[
            &[1, 1, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0],
            &[0, 0, 1, 0, 0, 1],
        ],
    )
}

/// `<(1, a, a^2, 0)>` over `F_16` with `a^4 + a + 1 = 0`.
pub fn missing_coordinate() -> VectorCode {
    let f = ExtField::with_modulus(2, vec![1, 1, 0, 0, 1]).expect("irreducible");
    let a = f.generator();
    let a2 = f.mul(a, a);
    let g = Mat::from_rows(&[vec![1, a, a2, 0]]).expect("row");
    VectorCode::new(f, g).expect("nonzero generator")
}

/// Self-dual code spanned by `e_a + c e_b` over a random pairing `{a, b}`
/// of the `nm` positions, where `c^2 = -1`.
pub fn paired_coordinates(q: u32, n: usize, m: usize, seed: u64) -> Result<MatrixCode> {
    let f = Field::new(q)?;
    if (n * m) % 2 == 1 {
        return Err(Error::InvalidParameters("nm even".into()));
    }
    let c = (1..q)
        .find(|&c| f.add(f.mul(c, c), 1) == 0)
        .ok_or_else(|| Error::InvalidParameters(format!("-1 a square in F_{q}")))?;
    let mut pos: Vec<usize> = (0..n * m).collect();
    pos.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let rows: Vec<Vec<u32>> = pos
        .chunks(2)
        .map(|p| {
            let mut r = vec![0; n * m];
            r[p[0]] = 1;
            r[p[1]] = c;
            r
        })
        .collect();
    MatrixCode::from_flat_rows(q, n, m, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::rank_distribution;
    use crate::fqlinalg::Budget;

    #[test]
    fn known_distributions() {
        let b = Budget::default();
        let c = diagonal_and_corner();
        assert_eq!(rank_distribution(&c, b).unwrap().counts, vec![1, 6, 7, 2]);
        assert_eq!(
            rank_distribution(&c.dual(), b).unwrap().counts,
            vec![1, 9, 18, 4]
        );
        let c = amrd_with_sparse_dual();
        assert_eq!(rank_distribution(&c, b).unwrap().counts, vec![1, 1, 18, 12]);
        assert_eq!(
            rank_distribution(&c.dual(), b).unwrap().counts,
            vec![1, 0, 9, 6]
        );
        let c = ternary_shifted_identities();
        assert_eq!(rank_distribution(&c, b).unwrap().counts, vec![1, 0, 6, 20]);
        assert_eq!(
            rank_distribution(&c.dual(), b).unwrap().counts,
            vec![1, 6, 314, 408]
        );
    }

    #[test]
    fn self_dual_constructions() {
        let c = self_dual_pairs();
        assert_eq!(c.dual().flat_basis(), c.flat_basis());
        for (q, n, m) in [(2, 3, 4), (5, 2, 3), (2, 2, 2)] {
            let c = paired_coordinates(q, n, m, 9).unwrap();
            assert_eq!(c.dual().flat_basis(), c.flat_basis());
        }
        assert!(paired_coordinates(3, 2, 2, 0).is_err());
    }
}
