//! Identities tying the rank distribution of a code to that of its dual,
//! evaluated in exact arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{classify, CodeReport, Params, Spectra};
use crate::error::{Error, Result};
use crate::fqlinalg::gaussian_binomial;

fn gb(n: i64, k: i64, q: u32) -> BigInt {
    BigInt::from(gaussian_binomial(n, k, q))
}

fn int(x: u64) -> BigInt {
    BigInt::from(x)
}

/// `q^e` for any integer `e`.
fn qpow(q: u32, e: i64) -> BigRational {
    let base = BigInt::from(q).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(base)
    } else {
        BigRational::new(BigInt::one(), base)
    }
}

/// `q^e - 1` for `e >= 0`.
fn qpow_minus_one(q: u32, e: i64) -> BigInt {
    debug_assert!(e >= 0);
    BigInt::from(q).pow(e as u32) - 1
}

fn sign(r: i64) -> BigInt {
    if r % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn q_choose2(q: u32, r: i64) -> BigInt {
    BigInt::from(q).pow((r * (r - 1) / 2) as u32)
}

pub fn rat_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn ser_rat<S: Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&rat_string(x))
}

fn ser_rat_opt<S: Serializer>(
    x: &Option<BigRational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.collect_str(&rat_string(v)),
        None => s.serialize_none(),
    }
}

fn ser_rats<S: Serializer>(xs: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(rat_string))
}

/// Both sides of the MacWilliams identity for every `nu = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MacWilliamsReport {
    pub holds: bool,
    #[serde(serialize_with = "ser_rats")]
    pub lhs: Vec<BigRational>,
    #[serde(serialize_with = "ser_rats")]
    pub rhs: Vec<BigRational>,
    /// `lhs - rhs`, all zero when the identity holds.
    #[serde(serialize_with = "ser_rats")]
    pub residuals: Vec<BigRational>,
}

/// `sum_{i<=n-nu} [n-i, nu] A_i = q^{t-m nu} sum_{j<=nu} [n-j, nu-j] A'_j`.
pub fn macwilliams_check(sp: &Spectra) -> MacWilliamsReport {
    let Params { q, n, m, t } = sp.params;
    let (n, m, t) = (n as i64, m as i64, t as i64);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut residuals = Vec::new();
    for nu in 0..=n {
        let l: BigInt = (0..=n - nu).map(|i| gb(n - i, nu, q) * int(sp.a(i))).sum();
        let r: BigInt = (0..=nu)
            .map(|j| gb(n - j, nu - j, q) * int(sp.a_dual(j)))
            .sum();
        let l = BigRational::from_integer(l);
        let r = qpow(q, t - m * nu) * BigRational::from_integer(r);
        residuals.push(&l - &r);
        lhs.push(l);
        rhs.push(r);
    }
    MacWilliamsReport {
        holds: residuals.iter().all(Zero::is_zero),
        lhs,
        rhs,
        residuals,
    }
}

/// Counts `A_{n-d'+1}, ..., A_n` from `A_d, ..., A_{n-d'}`.
///
/// `low[j]` is `A_{d+j}`; `mrd` drops the last term of the inner sum.
pub fn predicted_tail(
    params: Params,
    d: usize,
    d_dual: usize,
    low: &[u64],
    mrd: bool,
) -> Vec<BigInt> {
    let Params { q, n, m, t } = params;
    let (n, m, t, d, dd) = (n as i64, m as i64, t as i64, d as i64, d_dual as i64);
    let a = |i: i64| -> BigInt {
        let k = i - d;
        if k < 0 {
            BigInt::zero()
        } else {
            low.get(k as usize).map_or_else(BigInt::zero, |&x| int(x))
        }
    };
    let delta = i64::from(mrd);
    (1..=dd)
        .map(|r| {
            let head: BigInt = (dd..=n - d)
                .map(|j| gb(j, dd - r, q) * gb(j - dd + r - 1, r - 1, q) * a(n - j))
                .sum();
            let tail: BigInt = (0..r - delta)
                .map(|i| {
                    sign(i)
                        * q_choose2(q, i)
                        * gb(n - dd + r, i, q)
                        * qpow_minus_one(q, t - m * (dd - r + i))
                })
                .sum();
            sign(r) * q_choose2(q, r) * head + gb(n, dd - r, q) * tail
        })
        .collect()
}

/// Predicted and enumerated tails side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TailReport {
    pub holds: bool,
    /// Index of the first predicted count, `n - d' + 1`.
    pub from: usize,
    pub predicted: Vec<String>,
    pub enumerated: Vec<u64>,
}

/// Compares [`predicted_tail`] with the enumerated distribution.
pub fn tail_check(sp: &Spectra) -> Result<TailReport> {
    let r = classify(sp)?;
    let n = r.n;
    let low: Vec<u64> = (r.d..=n.saturating_sub(r.d_dual))
        .map(|i| sp.a(i as i64))
        .collect();
    let mrd = r.class == super::CodeClass::Mrd;
    let pred = predicted_tail(sp.params, r.d, r.d_dual, &low, mrd);
    let from = n + 1 - r.d_dual;
    let enumerated: Vec<u64> = (from..=n).map(|i| sp.a(i as i64)).collect();
    let holds = pred.iter().zip(&enumerated).all(|(p, &e)| *p == int(e));
    Ok(TailReport {
        holds,
        from,
        predicted: pred.iter().map(ToString::to_string).collect(),
        enumerated,
    })
}

/// One row of a recursion for dually AMRD codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionRow {
    pub index: usize,
    pub predicted: String,
    pub enumerated: u64,
}

/// Rank distribution of a dually AMRD code from its first one or two
/// nonzero counts.
///
/// With `m | t` every `A_{d+r}` follows from `A_d`; otherwise `A_d` and
/// `A_{d+1}` determine the rest.
pub fn dually_amrd_recursion(sp: &Spectra) -> Result<Vec<RecursionRow>> {
    let r = classify(sp)?;
    if !r.dually_amrd {
        return Err(Error::HypothesisNotMet("code is not dually AMRD".into()));
    }
    let Params { q, n, m, t } = sp.params;
    let (n, m, d) = (n as i64, m as i64, r.d as i64);
    let ad = int(sp.a(d));
    let ad1 = int(sp.a(d + 1));
    let mut rows = Vec::new();
    if sp.params.divisible() {
        for k in 1..=n - d {
            let tail: BigInt = (0..k)
                .map(|i| {
                    sign(i) * q_choose2(q, i) * gb(d + k, i, q) * qpow_minus_one(q, m * (k - i))
                })
                .sum();
            let v = sign(k) * q_choose2(q, k) * gb(n - d, k, q) * &ad + gb(n, d + k, q) * tail;
            rows.push(RecursionRow {
                index: (d + k) as usize,
                predicted: v.to_string(),
                enumerated: sp.a(d + k),
            });
        }
    } else {
        let alpha = (t as i64) % m;
        for k in 2..=n - d {
            let tail: BigInt = (0..=k - 2)
                .map(|i| {
                    sign(i)
                        * q_choose2(q, i)
                        * gb(d + k, i, q)
                        * qpow_minus_one(q, alpha + m * (k - 1 - i))
                })
                .sum();
            let v = sign(k - 1)
                * q_choose2(q, k - 1)
                * (gb(n - d - 1, k - 1, q) * &ad1 + gb(n - d, k, q) * gb(k - 1, 1, q) * &ad)
                + gb(n, d + k, q) * tail;
            rows.push(RecursionRow {
                index: (d + k) as usize,
                predicted: v.to_string(),
                enumerated: sp.a(d + k),
            });
        }
    }
    Ok(rows)
}

/// `A_d` of a dually AMRD code in terms of the dual distribution.
pub fn min_weight_count_formula(sp: &Spectra) -> Result<BigRational> {
    let r = classify(sp)?;
    if !r.dually_amrd {
        return Err(Error::HypothesisNotMet("code is not dually AMRD".into()));
    }
    let p = sp.params;
    let (q, n, m, t) = (p.q, p.n as i64, p.m as i64, p.t as i64);
    let c = p.ceil() as i64;
    let mut inner = gb(n, c, q) + int(sp.a_dual(c));
    // For c = 1 the middle term would count A'_0 a second time.
    if c > 1 {
        inner += gb(n - c + 1, 1, q) * int(sp.a_dual(c - 1));
    }
    Ok(qpow(q, t - m * c) * BigRational::from_integer(inner)
        - BigRational::from_integer(gb(n, c, q)))
}

/// Which characterization applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CriterionBranch {
    /// `m | t`: compare `A_d` with `A'_{d'}`.
    Divisible,
    /// `m` does not divide `t`: closed formula plus `A'_beta != 0`.
    NonDivisible,
}

/// Evidence for the characterization of dually AMRD codes among AMRD codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub branch: CriterionBranch,
    pub a_d: u64,
    /// Right-hand side of the `A_d` equation.
    #[serde(serialize_with = "ser_rat")]
    pub formula: BigRational,
    pub formula_matches: bool,
    /// `A'_beta != 0`; always true in the divisible branch.
    pub side_condition: bool,
    /// Verdict of the characterization.
    pub criterion: bool,
    /// Verdict from the rank defects directly.
    pub dually_amrd: bool,
    pub agrees: bool,
}

/// Decides dually AMRD for an AMRD code from the two distributions and
/// compares with the definition.
pub fn dually_amrd_criterion(sp: &Spectra) -> Result<CriterionReport> {
    let r = classify(sp)?;
    if r.rdef != 1 {
        return Err(Error::HypothesisNotMet(format!(
            "code is not AMRD (rank defect {})",
            r.rdef
        )));
    }
    let p = sp.params;
    let a_d = sp.a(r.d as i64);
    let (branch, formula, side) = if p.divisible() {
        if p.t < p.m {
            return Err(Error::HypothesisNotMet("t >= m".into()));
        }
        let v = BigRational::from_integer(int(sp.a_dual(r.d_dual as i64)));
        (CriterionBranch::Divisible, v, true)
    } else {
        if p.t <= p.m {
            return Err(Error::HypothesisNotMet("t > m".into()));
        }
        let (q, n) = (p.q, p.n as i64);
        let (alpha, beta, m) = (p.alpha() as i64, p.beta() as i64, p.m as i64);
        let s = qpow(q, alpha - m);
        let v = (&s - BigRational::one()) * BigRational::from_integer(gb(n, beta + 1, q))
            + s * BigRational::from_integer(
                gb(n - beta, 1, q) * int(sp.a_dual(beta)) + int(sp.a_dual(beta + 1)),
            );
        (CriterionBranch::NonDivisible, v, sp.a_dual(beta) != 0)
    };
    let formula_matches = formula == BigRational::from_integer(int(a_d));
    let criterion = formula_matches && side;
    Ok(CriterionReport {
        branch,
        a_d,
        formula,
        formula_matches,
        side_condition: side,
        criterion,
        dually_amrd: r.dually_amrd,
        agrees: criterion == r.dually_amrd,
    })
}

/// Bounds on `A_d` for a dually AMRD code with `m | t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ADBounds {
    pub a_d: u64,
    /// From `A_{d+2} >= 0`; zero when `n - d < 2`.
    #[serde(serialize_with = "ser_rat")]
    pub lower: BigRational,
    /// The lower bound with `[n-2, 2]` in place of `[n-d, 2]`; `None` when
    /// that binomial vanishes.
    #[serde(serialize_with = "ser_rat_opt")]
    pub lower_alt: Option<BigRational>,
    /// From `A_{d+1} >= 0`.
    #[serde(serialize_with = "ser_rat")]
    pub upper: BigRational,
    pub within: bool,
    /// `A_{d+1} = 0` forces `A_d = upper`.
    pub upper_equality: Option<bool>,
    /// `A_{d+2} = 0` forces `A_d = lower`.
    pub lower_equality: Option<bool>,
}

pub fn a_d_bounds(sp: &Spectra) -> Result<ADBounds> {
    let r: CodeReport = classify(sp)?;
    if !r.dually_amrd || !sp.params.divisible() {
        return Err(Error::HypothesisNotMet(
            "dually AMRD with m dividing t".into(),
        ));
    }
    let Params { q, n, m, .. } = sp.params;
    let (n, m, d) = (n as i64, m as i64, r.d as i64);
    let qm1 = qpow_minus_one(q, m);
    let rat = BigRational::from_integer;
    let upper = rat(gb(n, d + 1, q) * &qm1) / rat(gb(n - d, 1, q));
    let numer = rat(gb(n, d + 2, q) * &qm1 * (gb(d + 2, 1, q) - BigInt::from(q).pow(m as u32) - 1));
    let lower_with = |den: BigInt| -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(&numer / rat(BigInt::from(q) * den))
        }
    };
    let lower = if n - d < 2 {
        BigRational::zero()
    } else {
        lower_with(gb(n - d, 2, q)).expect("nonzero binomial")
    };
    let lower_alt = lower_with(gb(n - 2, 2, q));
    let ad = rat(int(sp.a(d)));
    let within = lower <= ad && ad <= upper;
    let upper_equality = (sp.a(d + 1) == 0).then(|| ad == upper);
    let lower_equality = (n - d >= 2 && sp.a(d + 2) == 0).then(|| ad == lower);
    Ok(ADBounds {
        a_d: sp.a(d),
        lower,
        lower_alt,
        upper,
        within,
        upper_equality,
        lower_equality,
    })
}
