//! Runs every applicable check on one code.

use serde::Serialize;

use crate::analysis::{
    a_d_bounds, classify, distance_checks, distribution_checks, dually_amrd_criterion,
    dually_amrd_recursion, formal_self_duality_checks, macwilliams_check, min_weight_count_formula,
    tail_check, Check, CodeReport, Spectra,
};
use crate::codes::Code;
use crate::error::{Error, Result};
use crate::fqlinalg::Budget;
use crate::genweights::{
    compatibility_check, degree_duality_checks, domino_check, generalized_weights_matrix,
    generalized_weights_vector, mk_equals_n_diagnostics, profile_checks, two_amrd_checks,
    wei_duality, GenWeightProfile, TopWeightReport, WeiReport,
};

/// How much to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Depth {
    /// Distribution sanity and distance relations only.
    Basic,
    #[default]
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSummary {
    pub code: GenWeightProfile,
    pub dual: GenWeightProfile,
    /// Matrix weights of the expansion, for vector codes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expanded: Option<GenWeightProfile>,
    pub wei: WeiReport,
    pub top_weight: TopWeightReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Audit {
    #[serde(flatten)]
    pub report: CodeReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightSummary>,
    pub checks: Vec<Check>,
}

impl Audit {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.failed())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

fn hypothesis<T>(name: &str, r: Result<T>, f: impl FnOnce(T) -> Check) -> Result<Check> {
    match r {
        Ok(v) => Ok(f(v)),
        Err(Error::HypothesisNotMet(why)) => Ok(Check::skipped(name, why)),
        Err(e) => Err(e),
    }
}

/// Identity checks on a pair of distributions.
pub fn identity_checks(sp: &Spectra) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mw = macwilliams_check(sp);
    out.push(Check::new(
        "macwilliams",
        mw.holds,
        format!(
            "residuals [{}]",
            mw.residuals
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ),
    ));
    let tail = tail_check(sp)?;
    out.push(Check::new(
        "tail-prediction",
        tail.holds,
        format!(
            "from A_{}: predicted {:?}, enumerated {:?}",
            tail.from, tail.predicted, tail.enumerated
        ),
    ));
    out.push(hypothesis(
        "dually-amrd-criterion",
        dually_amrd_criterion(sp),
        |c| {
            Check::new(
                "dually-amrd-criterion",
                c.agrees,
                format!(
                    "A_d = {}, formula {}, side condition {}, criterion {}, dually AMRD {}",
                    c.a_d,
                    crate::analysis::rat_string(&c.formula),
                    c.side_condition,
                    c.criterion,
                    c.dually_amrd
                ),
            )
        },
    )?);
    out.push(hypothesis(
        "dually-amrd-recursion",
        dually_amrd_recursion(sp),
        |rows| {
            let bad: Vec<_> = rows
                .iter()
                .filter(|r| r.predicted != r.enumerated.to_string())
                .map(|r| (r.index, r.predicted.clone(), r.enumerated))
                .collect();
            Check::new(
                "dually-amrd-recursion",
                bad.is_empty(),
                format!("{} counts, mismatches {bad:?}", rows.len()),
            )
        },
    )?);
    let a_d = sp.dist.min_distance().map_or(0, |d| sp.a(d as i64));
    out.push(hypothesis(
        "min-weight-count",
        min_weight_count_formula(sp),
        |v| {
            Check::new(
                "min-weight-count",
                v == num_rational::BigRational::from_integer(a_d.into()),
                format!("formula {}, A_d = {a_d}", crate::analysis::rat_string(&v)),
            )
        },
    )?);
    out.push(hypothesis(
        "min-weight-count-bounds",
        a_d_bounds(sp),
        |b| {
            Check::new(
                "min-weight-count-bounds",
                b.within && b.upper_equality != Some(false) && b.lower_equality != Some(false),
                format!(
                    "{} <= {} <= {}",
                    crate::analysis::rat_string(&b.lower),
                    b.a_d,
                    crate::analysis::rat_string(&b.upper)
                ),
            )
        },
    )?);
    out.extend(formal_self_duality_checks(sp)?);
    Ok(out)
}

/// Weight profiles of a code and its dual with all checks on them.
pub fn weight_checks(
    code: &Code,
    report: &CodeReport,
    budget: Budget,
) -> Result<(WeightSummary, Vec<Check>)> {
    let (p, pd, expanded) = match code {
        Code::Matrix(c) => (
            generalized_weights_matrix(c, budget)?,
            generalized_weights_matrix(&c.dual(), budget)?,
            None,
        ),
        Code::Vector(c) => (
            generalized_weights_vector(c, budget)?,
            generalized_weights_vector(&c.dual(), budget)?,
            Some(generalized_weights_matrix(&code.as_matrix(), budget)?),
        ),
    };
    let mut checks = profile_checks(&p, report.d);
    checks.extend(
        profile_checks(&pd, report.d_dual)
            .into_iter()
            .map(|c| Check {
                name: format!("dual-{}", c.name),
                ..c
            }),
    );
    if let Some(ex) = &expanded {
        checks.push(compatibility_check(&p, ex));
    }
    checks.push(domino_check(&p));
    let wei = wei_duality(&p, &pd);
    checks.push(Check::new(
        "wei-duality",
        wei.holds,
        format!("{:?} and {:?}", wei.left, wei.right),
    ));
    let top = mk_equals_n_diagnostics(&p, &pd);
    checks.push(Check::new(
        "top-weight-equivalence",
        top.consistent,
        format!(
            "top = n: {}, dual partner != 1: {}, some i-MRD: {}",
            top.top_is_n, top.dual_partner_not_one, top.some_i_mrd
        ),
    ));
    checks.extend(degree_duality_checks(&p, &pd, report));
    checks.extend(two_amrd_checks(&p, &pd, report));
    Ok((
        WeightSummary {
            code: p,
            dual: pd,
            expanded,
            wei,
            top_weight: top,
        },
        checks,
    ))
}

pub fn spectra(code: &Code, budget: Budget) -> Result<Spectra> {
    match code {
        Code::Matrix(c) => Spectra::of_matrix(c, budget),
        Code::Vector(c) => Spectra::of_vector(c, budget),
    }
}

/// Classifies `code` and runs the checks selected by `depth`, plus weight
/// checks when `weights` is set.
pub fn audit(code: &Code, depth: Depth, weights: bool, budget: Budget) -> Result<Audit> {
    let sp = spectra(code, budget)?;
    let report = classify(&sp)?;
    let mut checks = distribution_checks(&sp);
    checks.extend(distance_checks(&report));
    if depth == Depth::All {
        checks.extend(identity_checks(&sp)?);
    }
    let weights = if weights {
        let (w, c) = weight_checks(code, &report, budget)?;
        checks.extend(c);
        Some(w)
    } else {
        None
    };
    Ok(Audit {
        report,
        weights,
        checks,
    })
}
