//! Constraints on self-dual and formally self-dual codes.

use num_bigint::BigInt;

use super::{classify, Check, Spectra};
use crate::codes::{expand, MatrixCode, VectorCode};
use crate::error::{Error, Result};
use crate::fqlinalg::{gaussian_binomial, Budget, Mat};
use crate::gf::{ExtField, FiniteField};

fn gb(n: usize, k: usize, q: u32) -> BigInt {
    BigInt::from(gaussian_binomial(n as i64, k as i64, q))
}

fn is_self_dual(code: &MatrixCode) -> bool {
    2 * code.dim() == code.n() * code.m() && code.dual().flat_basis() == code.flat_basis()
}

/// Checks every constraint on a self-dual matrix code.
pub fn self_dual_checks(code: &MatrixCode, budget: Budget) -> Result<Vec<Check>> {
    if !is_self_dual(code) {
        return Err(Error::NotSelfDual);
    }
    let sp = Spectra::of_matrix(code, budget)?;
    let r = classify(&sp)?;
    let (q, n, m) = (r.q, r.n, r.m);
    let mut out = vec![Check::new(
        "self-dual-dimension",
        2 * r.t == n * m,
        format!("t = {}, nm/2 = {}", r.t, n * m / 2),
    )];
    out.push(Check::new(
        "self-dual-distribution",
        sp.dist.counts == sp.dual.counts,
        "A_i = A'_i for all i",
    ));

    let amrd = r.rdef == 1;
    if !amrd {
        out.push(Check::skipped(
            "self-dual-amrd-distance",
            "code is not AMRD",
        ));
    } else if n % 2 == 1 {
        let c = n.div_ceil(2);
        out.push(Check::new(
            "self-dual-amrd-distance",
            r.d == (n - 1) / 2 && m % 2 == 0,
            format!("n odd: d = {}, expected {}, m = {m}", r.d, (n - 1) / 2),
        ));
        if m % 2 == 0 && r.d + 1 == c {
            let half = BigInt::from(q).pow((m / 2) as u32);
            let predicted = (&half - gb(c, 1, q)) * BigInt::from(sp.a(r.d as i64))
                - (BigInt::from(1) - &half) * gb(n, c, q);
            let actual = BigInt::from(sp.a(r.d as i64 + 1));
            out.push(Check::new(
                "self-dual-amrd-next-count",
                predicted == actual,
                format!("A_(d+1) predicted {predicted}, enumerated {actual}"),
            ));
        }
    } else {
        out.push(Check::new(
            "self-dual-amrd-distance",
            r.d == n / 2,
            format!("n even: d = {}, expected {}", r.d, n / 2),
        ));
    }

    if q == 2 {
        let ones = Mat::from_vec(n, m, vec![1; n * m]).expect("shape");
        let has_ones = code.contains(&ones);
        out.push(Check::new(
            "char2-all-ones",
            has_ones && r.d == 1,
            format!("all-ones matrix in code: {has_ones}, d = {}", r.d),
        ));
        out.push(if amrd {
            let ok = (n == 3 && m % 2 == 0 && m >= 4 && 2 * r.t == 3 * m)
                || (n == 2 && r.t == m && r.d == 1);
            Check::new(
                "char2-amrd-parameters",
                ok,
                format!("(n, m, t, d) = ({n}, {m}, {}, {})", r.t, r.d),
            )
        } else {
            Check::skipped("char2-amrd-parameters", "code is not AMRD")
        });
    } else {
        out.push(Check::skipped("char2-all-ones", "odd characteristic"));
    }
    Ok(out)
}

/// Formal self-duality of dually AMRD codes with `t = nm/2 = dm`, and the
/// dimension bound when `m | t` and `A_{d+1} = 0`.
pub fn formal_self_duality_checks(sp: &Spectra) -> Result<Vec<Check>> {
    let r = classify(sp)?;
    let (n, m, t) = (r.n, r.m, r.t);
    let mut out = Vec::new();
    out.push(if r.dually_amrd && 2 * t == n * m && t == r.d * m {
        Check::new(
            "formally-self-dual",
            sp.dist.counts == sp.dual.counts,
            format!("A = {:?}, A' = {:?}", sp.dist.counts, sp.dual.counts),
        )
    } else {
        Check::skipped("formally-self-dual", "needs dually AMRD with t = nm/2 = dm")
    });
    out.push(
        if r.dually_amrd && sp.params.divisible() && sp.a(r.d as i64 + 1) == 0 {
            Check::new(
                "sparse-dually-amrd-dimension",
                2 * t <= n * m,
                format!("t = {t}, nm/2 = {}", n * m / 2),
            )
        } else {
            Check::skipped(
                "sparse-dually-amrd-dimension",
                "needs dually AMRD, m | t and A_(d+1) = 0",
            )
        },
    );
    Ok(out)
}

/// Checks every constraint on a self-dual vector code.
pub fn self_dual_vector_checks(code: &VectorCode, budget: Budget) -> Result<Vec<Check>> {
    if code.k() == 0 || !code.same_code(&code.dual()) {
        return Err(Error::NotSelfDual);
    }
    let f = code.field();
    let (n, m, k) = (code.n(), code.m(), code.k());
    let expanded = expand(code, &f.polynomial_basis());
    let mut out = vec![Check::new(
        "self-dual-vector-dimension",
        2 * m * k == n * m && expanded.dim() == expanded.dual().dim(),
        format!("mk = {}, nm/2 = {}", m * k, n * m / 2),
    )];
    let sp = Spectra::of_vector(code, budget)?;
    let r = classify(&sp)?;
    if r.rdef != 1 {
        out.push(Check::skipped("self-dual-vector-shape", "code is not AMRD"));
        return Ok(out);
    }
    out.push(Check::new(
        "self-dual-vector-shape",
        n == 2 * r.d && k == r.d,
        format!("[n, k, d] = [{n}, {k}, {}]", r.d),
    ));
    if n == 2 {
        let g = code.canonical_generator();
        let (a, b) = (g.get(0, 0), g.get(0, 1));
        // Normalize to (alpha, 1).
        let alpha = match f.inv(b) {
            Some(inv) => f.mul(a, inv),
            None => 0,
        };
        let minus_one = f.neg(1);
        out.push(Check::new(
            "self-dual-length-two",
            b != 0 && f.is_base(alpha) && f.mul(alpha, alpha) == minus_one,
            format!("generator ({alpha}, 1), alpha^2 = {}", f.mul(alpha, alpha)),
        ));
    }
    if f.q().is_multiple_of(2) {
        let ones = Mat::from_rows(&[vec![1u32; n]]).expect("row");
        let target = VectorCode::span(f.clone(), n, &ones)?;
        out.push(Check::new(
            "char2-self-dual-vector",
            n == 2
                && code.same_code(&target)
                && expanded.dual().flat_basis() == expanded.flat_basis(),
            "generator (1, 1) and expansion equal to its dual",
        ));
    }
    Ok(out)
}

/// All self-dual AMRD `[2, 1]` codes over `F_{q^m}`.
pub fn self_dual_length_two_codes(field: &ExtField) -> Vec<VectorCode> {
    let mut out = Vec::new();
    for g in 0..field.order() {
        if !field.is_base(g) || field.add(1, field.mul(g, g)) != 0 {
            continue;
        }
        let gen = Mat::from_rows(&[vec![1, g]]).expect("row");
        if let Ok(c) = VectorCode::new(field.clone(), gen) {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_two_self_dual_codes() {
        assert!(self_dual_length_two_codes(&ExtField::new(3, 2).unwrap()).is_empty());
        assert_eq!(
            self_dual_length_two_codes(&ExtField::new(5, 2).unwrap()).len(),
            2
        );
        let f2 = ExtField::new(2, 3).unwrap();
        let codes = self_dual_length_two_codes(&f2);
        assert_eq!(codes.len(), 1);
        let checks = self_dual_vector_checks(&codes[0], Budget::default()).unwrap();
        assert!(checks.iter().all(|c| !c.failed()), "{checks:?}");
    }

    #[test]
    fn non_self_dual_is_refused() {
        let c = crate::codes::random_matrix_code(2, 2, 2, 2, 3).unwrap();
        if !is_self_dual(&c) {
            assert!(matches!(
                self_dual_checks(&c, Budget::default()),
                Err(Error::NotSelfDual)
            ));
        }
    }
}
