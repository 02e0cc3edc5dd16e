//! Rank distributions, rank defect and classification, plus executable
//! checks of the identities relating a code to its dual.

mod identities;
mod selfdual;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::codes::{MatrixCode, VectorCode};
pub use crate::enumerate::RankDistribution;
use crate::enumerate::{rank_distribution, vector_rank_distribution};
use crate::error::{Error, Result};
use crate::fqlinalg::Budget;

pub use identities::{
    a_d_bounds, dually_amrd_criterion, dually_amrd_recursion, macwilliams_check,
    min_weight_count_formula, predicted_tail, rat_string, tail_check, ADBounds, CriterionBranch,
    CriterionReport, MacWilliamsReport, RecursionRow, TailReport,
};
pub use selfdual::{
    formal_self_duality_checks, self_dual_checks, self_dual_length_two_codes,
    self_dual_vector_checks,
};

pub(crate) fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// The parameters `(q, n, m, t)` of a matrix code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub q: u32,
    pub n: usize,
    pub m: usize,
    pub t: usize,
}

impl Params {
    pub fn ceil(&self) -> usize {
        ceil_div(self.t, self.m)
    }

    /// `beta` in `t = beta m + alpha`.
    pub fn beta(&self) -> usize {
        self.t / self.m
    }

    pub fn alpha(&self) -> usize {
        self.t % self.m
    }

    pub fn divisible(&self) -> bool {
        self.t.is_multiple_of(self.m)
    }

    /// `n - ceil(t/m) + 1`.
    pub fn singleton_bound(&self) -> usize {
        self.n + 1 - self.ceil()
    }

    pub fn dual(&self) -> Params {
        Params {
            t: self.n * self.m - self.t,
            ..*self
        }
    }
}

/// Distributions of a code and of its dual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectra {
    pub params: Params,
    pub dist: RankDistribution,
    pub dual: RankDistribution,
}

impl Spectra {
    pub fn of_matrix(code: &MatrixCode, budget: Budget) -> Result<Self> {
        let dual = code.dual();
        Ok(Self {
            params: Params {
                q: code.q(),
                n: code.n(),
                m: code.m(),
                t: code.dim(),
            },
            dist: rank_distribution(code, budget)?,
            dual: rank_distribution(&dual, budget)?,
        })
    }

    /// Both distributions enumerated over `F_{q^m}`; the dual is the
    /// standard-inner-product dual.
    pub fn of_vector(code: &VectorCode, budget: Budget) -> Result<Self> {
        Ok(Self {
            params: Params {
                q: code.field().q(),
                n: code.n(),
                m: code.m(),
                t: code.m() * code.k(),
            },
            dist: vector_rank_distribution(code, budget)?,
            dual: vector_rank_distribution(&code.dual(), budget)?,
        })
    }

    pub fn from_counts(params: Params, dist: Vec<u64>, dual: Vec<u64>) -> Self {
        let Params { q, n, m, t } = params;
        Self {
            params,
            dist: RankDistribution::new(q, n, m, t, dist),
            dual: RankDistribution::new(q, n, m, n * m - t, dual),
        }
    }

    /// The same pair seen from the dual code.
    pub fn swapped(&self) -> Spectra {
        Spectra {
            params: self.params.dual(),
            dist: self.dual.clone(),
            dual: self.dist.clone(),
        }
    }

    pub fn a(&self, i: i64) -> u64 {
        self.dist.get(i)
    }

    pub fn a_dual(&self, i: i64) -> u64 {
        self.dual.get(i)
    }

    fn nontrivial(&self) -> Result<(usize, usize)> {
        let p = &self.params;
        if p.t == 0 || p.t == p.n * p.m {
            return Err(Error::TrivialCode(format!(
                "dimension {} in a space of dimension {}",
                p.t,
                p.n * p.m
            )));
        }
        match (self.dist.min_distance(), self.dual.min_distance()) {
            (Some(d), Some(dd)) => Ok((d, dd)),
            _ => Err(Error::Consistency(
                "nontrivial code without a nonzero word".into(),
            )),
        }
    }

    /// `(d, d_dual)` for a nontrivial code.
    pub fn distances(&self) -> Result<(usize, usize)> {
        self.nontrivial()
    }
}

/// Position relative to the Singleton bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeClass {
    Mrd,
    Qmrd,
    /// Rank defect `s >= 1`.
    AsMrd(usize),
}

impl CodeClass {
    pub fn rank_defect(&self) -> usize {
        match self {
            CodeClass::Mrd | CodeClass::Qmrd => 0,
            CodeClass::AsMrd(s) => *s,
        }
    }
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeClass::Mrd => write!(f, "MRD"),
            CodeClass::Qmrd => write!(f, "QMRD"),
            CodeClass::AsMrd(1) => write!(f, "AMRD"),
            CodeClass::AsMrd(s) => write!(f, "A^{s}MRD"),
        }
    }
}

impl Serialize for CodeClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn class_of(p: &Params, rdef: usize) -> CodeClass {
    match (rdef, p.divisible()) {
        (0, true) => CodeClass::Mrd,
        (0, false) => CodeClass::Qmrd,
        (s, _) => CodeClass::AsMrd(s),
    }
}

/// Everything derived from the two distributions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeReport {
    pub q: u32,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub beta: usize,
    pub alpha: usize,
    pub d: usize,
    pub d_dual: usize,
    pub singleton_bound: usize,
    pub singleton_bound_dual: usize,
    pub rdef: usize,
    pub rdef_dual: usize,
    pub class: CodeClass,
    pub dual_class: CodeClass,
    pub dually_amrd: bool,
    /// `"dually AMRD"` when applicable, otherwise the class.
    pub label: String,
    /// `d + d_dual`.
    pub distance_sum: usize,
    /// `"n"`, `"n-1"` or `null` depending on which value `d + d_dual` hits.
    pub distance_sum_matches: Option<String>,
    pub distribution: Vec<u64>,
    pub dual_distribution: Vec<u64>,
}

impl CodeReport {
    pub fn params(&self) -> Params {
        Params {
            q: self.q,
            n: self.n,
            m: self.m,
            t: self.t,
        }
    }
}

/// Classifies a nontrivial code from its distributions.
pub fn classify(sp: &Spectra) -> Result<CodeReport> {
    let (d, d_dual) = sp.nontrivial()?;
    let p = sp.params;
    let pd = p.dual();
    let sb = p.singleton_bound();
    let sbd = pd.singleton_bound();
    if d > sb || d_dual > sbd {
        return Err(Error::Consistency(format!(
            "Singleton bound exceeded: d = {d} (bound {sb}), dual d = {d_dual} (bound {sbd})"
        )));
    }
    let rdef = sb - d;
    let rdef_dual = sbd - d_dual;
    let class = class_of(&p, rdef);
    let dual_class = class_of(&pd, rdef_dual);
    let dually_amrd = rdef == 1 && rdef_dual == 1;
    let sum = d + d_dual;
    let matches = if sum == p.n {
        Some("n".to_string())
    } else if sum + 1 == p.n {
        Some("n-1".to_string())
    } else {
        None
    };
    Ok(CodeReport {
        q: p.q,
        n: p.n,
        m: p.m,
        t: p.t,
        beta: p.beta(),
        alpha: p.alpha(),
        d,
        d_dual,
        singleton_bound: sb,
        singleton_bound_dual: sbd,
        rdef,
        rdef_dual,
        class,
        dual_class,
        dually_amrd,
        label: if dually_amrd {
            "dually AMRD".into()
        } else {
            class.to_string()
        },
        distance_sum: sum,
        distance_sum_matches: matches,
        distribution: sp.dist.counts.clone(),
        dual_distribution: sp.dual.counts.clone(),
    })
}

/// Outcome of one executable claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The claim's hypothesis does not hold for this input.
    Skipped,
}

/// A named claim with its outcome and the evidence behind it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    pub fn skipped(name: &str, reason: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Skipped,
            detail: reason.into(),
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Basic sanity of both distributions and the Singleton bound.
pub fn distribution_checks(sp: &Spectra) -> Vec<Check> {
    let mut out = Vec::new();
    for (label, dist) in [("code", &sp.dist), ("dual", &sp.dual)] {
        let expected = (sp.params.q as u128).pow(dist.t as u32);
        out.push(Check::new(
            &format!("{label}-distribution-total"),
            dist.total() == expected && dist.get(0) == 1,
            format!(
                "sum A_i = {}, q^t = {expected}, A_0 = {}",
                dist.total(),
                dist.get(0)
            ),
        ));
        let p = Params {
            t: dist.t,
            ..sp.params
        };
        if let Some(d) = dist.min_distance() {
            out.push(Check::new(
                &format!("{label}-singleton"),
                d <= p.singleton_bound(),
                format!("d = {d}, bound n - ceil(t/m) + 1 = {}", p.singleton_bound()),
            ));
        }
    }
    out
}

/// Relations between `d`, `d_dual` and the two rank defects.
pub fn distance_checks(r: &CodeReport) -> Vec<Check> {
    let p = r.params();
    let (n, beta) = (r.n, r.beta);
    let target = if p.divisible() { n } else { n - 1 };
    let mut out = Vec::new();

    out.push(if r.dually_amrd {
        Check::new(
            "dually-amrd-distance-sum",
            r.t >= r.m && r.distance_sum == target,
            format!(
                "t = {}, d + d_dual = {}, expected {target}",
                r.t, r.distance_sum
            ),
        )
    } else {
        Check::skipped("dually-amrd-distance-sum", "code is not dually AMRD")
    });

    out.push(if p.divisible() {
        Check::new(
            "divisible-distance-sum-criterion",
            r.dually_amrd == (r.distance_sum == n),
            format!(
                "dually AMRD = {}, d + d_dual = {}",
                r.dually_amrd, r.distance_sum
            ),
        )
    } else {
        Check::skipped("divisible-distance-sum-criterion", "m does not divide t")
    });

    let wrong_sum =
        (r.distance_sum == n && !p.divisible()) || (r.distance_sum + 1 == n && p.divisible());
    out.push(if wrong_sum {
        Check::new(
            "mismatched-distance-sum-excludes",
            !r.dually_amrd,
            format!(
                "d + d_dual = {} with m | t = {}",
                r.distance_sum,
                p.divisible()
            ),
        )
    } else {
        Check::skipped(
            "mismatched-distance-sum-excludes",
            "distance sum does not mismatch",
        )
    });

    let expected_d = if p.divisible() {
        n - beta
    } else {
        n.saturating_sub(beta + 1)
    };
    let pair = r.d == expected_d && r.d_dual == beta;
    out.push(Check::new(
        "dually-amrd-distance-pair",
        r.dually_amrd == pair,
        format!(
            "(d, d_dual) = ({}, {}), target ({expected_d}, {beta}), dually AMRD = {}",
            r.d, r.d_dual, r.dually_amrd
        ),
    ));

    out.push(Check::new(
        "dual-amrd-criterion",
        (r.rdef_dual == 1) == (r.d_dual == beta),
        format!(
            "rdef(dual) = {}, d_dual = {}, beta = {beta}",
            r.rdef_dual, r.d_dual
        ),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_params() -> Params {
        Params {
            q: 2,
            n: 3,
            m: 3,
            t: 4,
        }
    }

    #[test]
    fn classify_from_known_distributions() {
        let sp = Spectra::from_counts(example_params(), vec![1, 6, 7, 2], vec![1, 9, 18, 4]);
        let r = classify(&sp).unwrap();
        assert_eq!((r.d, r.d_dual, r.rdef, r.rdef_dual), (1, 1, 1, 1));
        assert!(r.dually_amrd);
        assert_eq!(r.label, "dually AMRD");
        assert_eq!(r.distance_sum_matches.as_deref(), Some("n-1"));
        assert!(distance_checks(&r).iter().all(|c| !c.failed()));
    }

    #[test]
    fn class_names() {
        assert_eq!(CodeClass::AsMrd(1).to_string(), "AMRD");
        assert_eq!(CodeClass::AsMrd(3).to_string(), "A^3MRD");
        assert_eq!(serde_json::to_string(&CodeClass::Qmrd).unwrap(), "\"QMRD\"");
    }

    #[test]
    fn trivial_codes_are_refused() {
        let p = Params {
            q: 2,
            n: 2,
            m: 2,
            t: 0,
        };
        let sp = Spectra::from_counts(p, vec![1, 0, 0], vec![1, 9, 6]);
        assert!(matches!(classify(&sp), Err(Error::TrivialCode(_))));
    }
}
