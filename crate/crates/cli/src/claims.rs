//! Executable registry behind `verify-paper`: one row per worked example or
//! numbered result, each checked by exhaustive enumeration.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

use serde::Serialize;

use rankcode::analysis::{
    classify, distance_checks, dually_amrd_criterion, formal_self_duality_checks, rat_string,
    self_dual_checks, self_dual_length_two_codes, self_dual_vector_checks, Check, CodeClass,
    CriterionBranch, Spectra, Status,
};
use rankcode::audit::identity_checks;
use rankcode::catalog;
use rankcode::codes::{
    expand, extend, gabidulin, random_matrix_code, random_vector_code, standard_points,
    subcode_with_min_vector, vector_rank, Code, MatrixCode, VectorCode,
};
use rankcode::enumerate::{codewords, rank_distribution, vector_rank_distribution};
use rankcode::fqlinalg::{enumerate_all_subspaces, Budget, Mat};
use rankcode::genweights::{
    compatibility_check, degree_duality_checks, generalized_weights_matrix,
    generalized_weights_vector, IMrd, OptimalAnticode, Orientation,
};
use rankcode::gf::{ExtField, Field, FieldBasis, FiniteField};
use rankcode::{Error, Result};

use crate::corpus::{self, Entry, Kind};
use crate::{emit, render, CliError, CliResult, Format, VerifyArgs};

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub id: &'static str,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
}

/// `(passed, detail)`.
type Outcome = Result<(bool, String)>;

enum Run {
    Fn(fn(&Ctx) -> Outcome),
    /// Named audit checks over the shared corpus.
    Corpus(Kind, &'static [&'static str]),
}

struct Claim {
    id: &'static str,
    title: &'static str,
    run: Run,
}

struct Ctx {
    budget: Budget,
    fault: bool,
    corpus: OnceLock<Result<Vec<Entry>>>,
}

impl Ctx {
    fn corpus(&self) -> Result<&[Entry]> {
        match self.corpus.get_or_init(|| corpus::build(self.budget)) {
            Ok(v) => Ok(v),
            Err(e) => Err(e.clone()),
        }
    }
}

/// Counts passing instances and collects failures.
#[derive(Default)]
struct Tally {
    passed: usize,
    skipped: usize,
    failures: Vec<String>,
    /// Passing instances per absorbed check name.
    by_name: BTreeMap<String, usize>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, label: &str, checks: &[Check], names: &[&str]) {
        for &name in names {
            self.by_name.entry(name.to_string()).or_default();
        }
        for c in checks.iter().filter(|c| names.contains(&c.name.as_str())) {
            match c.status {
                Status::Pass => {
                    self.passed += 1;
                    *self.by_name.entry(c.name.clone()).or_default() += 1;
                }
                Status::Skipped => self.skipped += 1,
                Status::Fail => self
                    .failures
                    .push(format!("{label}: {} ({})", c.name, c.detail)),
            }
        }
    }

    fn finish(self, unit: &str) -> Outcome {
        if !self.failures.is_empty() {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            return Ok((
                false,
                format!(
                    "{} failure(s), {} passed; {}",
                    self.failures.len(),
                    self.passed,
                    shown.join("; ")
                ),
            ));
        }
        if self.passed == 0 {
            return Ok((false, format!("no {unit} met the hypothesis")));
        }
        let idle: Vec<&str> = self
            .by_name
            .iter()
            .filter(|(_, &n)| n == 0)
            .map(|(k, _)| k.as_str())
            .collect();
        if !idle.is_empty() {
            return Ok((false, format!("never exercised: {}", idle.join(", "))));
        }
        let skipped = if self.skipped > 0 {
            format!(", {} not applicable", self.skipped)
        } else {
            String::new()
        };
        Ok((true, format!("{} {unit} hold{skipped}", self.passed)))
    }
}

fn tuple(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn unit(n: usize, m: usize, i: usize, j: usize) -> Mat {
    let mut a = Mat::zeros(n, m);
    a.set(i, j, 1);
    a
}

fn corpus_tally(ctx: &Ctx, kind: Kind, names: &[&str]) -> Result<Tally> {
    let mut t = Tally::default();
    for e in ctx.corpus()?.iter().filter(|e| e.is(kind)) {
        t.absorb(&e.label, &e.audit.checks, names);
    }
    Ok(t)
}

fn gabidulin_mrd(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for (q, m) in [(2, 4), (3, 3), (5, 2)] {
        let f = ExtField::new(q, m)?;
        for n in 1..=m {
            for k in 1..=n {
                let g = gabidulin(&f, n, k, &standard_points(&f, n))?;
                let d = vector_rank_distribution(&g, ctx.budget)?
                    .min_distance()
                    .unwrap_or(0);
                let degree = generalized_weights_vector(&g, ctx.budget)?
                    .i_mrd
                    .map(|x| x.degree);
                t.check(d == n - k + 1 && degree == Some(0), || {
                    format!("F_{q}^{m} [{n}, {k}]: d = {d}, degree {degree:?}")
                });
            }
        }
    }
    t.finish("Gabidulin codes")
}

fn rank_defect_definition(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for e in ctx.corpus()? {
        let r = &e.audit.report;
        let expected = (r.n + 1) as i64 - r.t.div_ceil(r.m) as i64 - r.d as i64;
        t.check(r.rdef as i64 == expected, || {
            format!("{}: rdef {} vs {expected}", e.label, r.rdef)
        });
        if let Code::Vector(c) = &e.code {
            let k = c.k();
            let sp = Spectra::of_matrix(&e.code.as_matrix(), ctx.budget)?;
            let ex = classify(&sp)?;
            t.check(
                r.rdef + r.d == c.n() - k + 1
                    && ex.rdef == r.rdef
                    && ex.distribution == r.distribution,
                || {
                    format!(
                        "{}: vector rdef {}, expansion rdef {}",
                        e.label, r.rdef, ex.rdef
                    )
                },
            );
        }
    }
    t.finish("codes")
}

fn qmrd_definition(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for e in ctx.corpus()? {
        let r = &e.audit.report;
        let expected = r.t % r.m != 0 && r.rdef == 0;
        t.check((r.class == CodeClass::Qmrd) == expected, || {
            format!("{}: class {}", e.label, r.class)
        });
    }
    // Every t-dimensional subcode of an MRD code of dimension m * ceil(t/m)
    // keeps its minimum distance, hence is QMRD when m does not divide t.
    for (q, n, m) in [
        (2, 2, 2),
        (2, 2, 3),
        (2, 3, 3),
        (3, 2, 2),
        (3, 2, 3),
        (2, 2, 4),
        (2, 3, 4),
        (3, 3, 3),
    ] {
        let f = ExtField::new(q, m)?;
        for dim in (1..n * m).filter(|d| d % m != 0) {
            let g = gabidulin(&f, n, dim.div_ceil(m), &standard_points(&f, n))?;
            let big = expand(&g, &f.polynomial_basis());
            let rows: Vec<Vec<u32>> = (0..dim).map(|i| big.flat_basis().row(i).to_vec()).collect();
            let sub = MatrixCode::from_flat_rows(q, n, m, &rows)?;
            let r = classify(&Spectra::of_matrix(&sub, ctx.budget)?)?;
            t.check(r.class == CodeClass::Qmrd, || {
                format!("({q}, {n}, {m}, t = {dim}): class {}", r.class)
            });
        }
    }
    t.finish("codes")
}

fn optimal_anticodes(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for (q, n, m) in [(2, 2, 2), (2, 2, 3), (2, 3, 3), (3, 2, 3), (2, 3, 4)] {
        let field = Field::new(q)?;
        let mut orientations = vec![Orientation::Columns];
        if n == m {
            orientations.push(Orientation::Rows);
        }
        for o in orientations {
            for s in enumerate_all_subspaces(q, n, ctx.budget)? {
                if s.dim() == 0 {
                    continue;
                }
                let a = OptimalAnticode::new(&field, n, m, s, o)?;
                let code = MatrixCode::from_flat_rows(q, n, m, &a.realize().to_rows())?;
                let dist = rank_distribution(&code, ctx.budget)?;
                let maxrk = dist.counts.iter().rposition(|&c| c > 0).unwrap_or(0);
                t.check(code.dim() == m * maxrk && maxrk == a.max_rank(), || {
                    format!(
                        "({q}, {n}, {m}) {o:?}: dim {}, max rank {maxrk}",
                        code.dim()
                    )
                });
            }
        }
    }
    t.finish("anticodes")
}

fn expansion_any_basis(ctx: &Ctx) -> Outcome {
    let mut t = corpus_tally(ctx, Kind::Vector, &["expansion-weights"])?;
    for e in ctx.corpus()? {
        let Code::Vector(c) = &e.code else { continue };
        let Some(w) = &e.audit.weights else { continue };
        let f = c.field();
        let a = f.generator();
        let shifted: Vec<u32> = f
            .polynomial_basis()
            .elements()
            .iter()
            .rev()
            .map(|&x| f.mul(a, x))
            .collect();
        let basis = FieldBasis::new(f, shifted)?;
        let ex = generalized_weights_matrix(&expand(c, &basis), ctx.budget)?;
        t.absorb(
            &e.label,
            &[compatibility_check(&w.code, &ex)],
            &["expansion-weights"],
        );
    }
    t.finish("weight comparisons")
}

fn class_definitions(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for e in ctx.corpus()? {
        let r = &e.audit.report;
        let amrd = r.d + r.t.div_ceil(r.m) == r.n;
        t.check(
            r.class.rank_defect() == r.rdef && (r.rdef == 1) == amrd,
            || format!("{}: class {}, rdef {}", e.label, r.class, r.rdef),
        );
    }
    t.finish("codes")
}

fn dually_amrd_definition(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for e in ctx.corpus()? {
        let r = &e.audit.report;
        let expected = r.rdef == 1 && r.rdef_dual == 1;
        t.check(
            r.dually_amrd == expected && (r.label == "dually AMRD") == expected,
            || format!("{}: flag {}, label {}", e.label, r.dually_amrd, r.label),
        );
    }
    t.finish("codes")
}

fn extended_gabidulin(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for (q, m) in [(2, 3), (2, 4), (3, 3), (5, 2)] {
        let f = ExtField::new(q, m)?;
        for n in 1..m {
            for k in 1..=n {
                let e = extend(&gabidulin(&f, n, k, &standard_points(&f, n))?)?;
                let r = classify(&Spectra::of_vector(&e, ctx.budget)?)?;
                let ones = e.dual().contains(&vec![1; n + 1]);
                t.check(
                    r.rdef == 1 && r.d == n - k + 1 && r.d_dual == 1 && ones,
                    || {
                        format!(
                            "F_{q}^{m} [{n}, {k}] extended: d = {}, d' = {}, rdef {}",
                            r.d, r.d_dual, r.rdef
                        )
                    },
                );
            }
        }
    }
    t.finish("extended codes")
}

fn amrd_subcodes(ctx: &Ctx) -> Outcome {
    let mut sources: Vec<(String, MatrixCode)> = Vec::new();
    for (q, m) in [(2, 4), (3, 3)] {
        let f = ExtField::new(q, m)?;
        for n in 1..m {
            for k in 1..=n {
                let e = extend(&gabidulin(&f, n, k, &standard_points(&f, n))?)?;
                sources.push((
                    format!("extended F_{q}^{m} [{n}, {k}]"),
                    Code::Vector(e).as_matrix(),
                ));
            }
        }
    }
    for e in ctx.corpus()? {
        let r = &e.audit.report;
        if r.rdef == 1 && r.t % r.m == 0 && r.t > 1 && r.m > 1 {
            sources.push((e.label.clone(), e.code.as_matrix()));
        }
    }
    let mut t = Tally::default();
    for (label, c) in &sources {
        let (dim, m) = (c.dim(), c.m());
        for sub_dim in dim + 1 - m..dim {
            let sub = subcode_with_min_vector(c, sub_dim, ctx.budget)?;
            let r = classify(&Spectra::of_matrix(&sub, ctx.budget)?)?;
            t.check(r.rdef == 1 && sub_dim % m != 0, || {
                format!(
                    "{label}: subcode of dimension {sub_dim} has rdef {}",
                    r.rdef
                )
            });
        }
    }
    t.finish("subcodes")
}

fn matrix_report(
    c: &MatrixCode,
    budget: Budget,
) -> Result<(Spectra, rankcode::analysis::CodeReport)> {
    let sp = Spectra::of_matrix(c, budget)?;
    let r = classify(&sp)?;
    Ok((sp, r))
}

fn amrd_not_dually(ctx: &Ctx) -> Outcome {
    let (sp, r) = matrix_report(&catalog::single_corner(), ctx.budget)?;
    let ok = r.t == 1
        && r.d == 1
        && r.rdef == 1
        && r.d_dual == 1
        && r.dual_class == CodeClass::Qmrd
        && !r.dually_amrd
        && sp.dist.counts == [1, 1, 0]
        && sp.dual.total() == 8;
    Ok((
        ok,
        format!(
            "d = {}, class {}, d' = {}, dual class {}, |dual| = {}",
            r.d,
            r.class,
            r.d_dual,
            r.dual_class,
            sp.dual.total()
        ),
    ))
}

fn small_dually_amrd(ctx: &Ctx) -> Outcome {
    let (sp, r) = matrix_report(&catalog::diagonal_and_corner(), ctx.budget)?;
    let ok = r.t == 4
        && sp.dist.counts == [1, 6, 7, 2]
        && sp.dual.counts == [1, 9, 18, 4]
        && r.d == 1
        && r.d_dual == 1
        && r.dually_amrd;
    Ok((
        ok,
        format!(
            "A = {}, A' = {}, d = {}, d' = {}, {}",
            tuple(&sp.dist.counts),
            tuple(&sp.dual.counts),
            r.d,
            r.d_dual,
            r.label
        ),
    ))
}

fn distance_relations(ctx: &Ctx) -> Outcome {
    const NAMES: &[&str] = &[
        "dually-amrd-distance-sum",
        "divisible-distance-sum-criterion",
        "mismatched-distance-sum-excludes",
        "dually-amrd-distance-pair",
        "dual-amrd-criterion",
    ];
    let mut t = corpus_tally(ctx, Kind::Any, NAMES)?;
    for (q, n, m) in [(2, 2, 2), (2, 2, 3), (3, 2, 2)] {
        for s in enumerate_all_subspaces(q, n * m, ctx.budget)? {
            if s.dim() == 0 || s.dim() == n * m {
                continue;
            }
            let c = MatrixCode::from_flat_rows(q, n, m, &s.basis().to_rows())?;
            let (_, r) = matrix_report(&c, ctx.budget)?;
            t.absorb(
                &format!("({q}, {n}, {m}) subspace"),
                &distance_checks(&r),
                NAMES,
            );
        }
    }
    t.finish("distance relations")
}

fn converse_fails(ctx: &Ctx) -> Outcome {
    let c = catalog::two_units_dual();
    let (_, r) = matrix_report(&c, ctx.budget)?;
    let has = c.contains(&unit(3, 3, 1, 0));
    let ok = r.t == 7
        && r.d == 1
        && r.d_dual == 1
        && r.distance_sum + 1 == r.n
        && r.class == CodeClass::Qmrd
        && !r.dually_amrd
        && has;
    Ok((
        ok,
        format!(
            "t = {}, d + d' = {}, class {}, E21 in code: {has}",
            r.t, r.distance_sum, r.class
        ),
    ))
}

/// Whether the pullback of `code` along `lambda_B` is closed under
/// multiplication by the field generator.
fn closed_under_generator(
    f: &ExtField,
    basis: &FieldBasis,
    words: &[Mat],
    code: &MatrixCode,
) -> bool {
    let a = f.generator();
    words.iter().all(|x| {
        let rows: Vec<Vec<u32>> = (0..x.rows())
            .map(|i| basis.to_coords(f, f.mul(a, basis.from_coords(f, x.row(i)))))
            .collect();
        Mat::from_rows(&rows).is_ok_and(|y| code.contains(&y))
    })
}

fn not_an_expansion(ctx: &Ctx) -> Outcome {
    let c = catalog::binary_shifted_identities();
    let (_, r) = matrix_report(&c, ctx.budget)?;
    let listed: [[u32; 9]; 7] = [
        [1, 0, 0, 0, 1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 1, 0, 0],
        [0, 0, 1, 1, 0, 0, 0, 1, 0],
        [1, 1, 0, 0, 1, 1, 1, 0, 0],
        [1, 0, 1, 1, 1, 0, 0, 1, 0],
        [0, 1, 1, 1, 0, 1, 1, 1, 0],
        [1, 1, 1, 1, 1, 1, 1, 1, 0],
    ];
    let words = codewords(&c, ctx.budget)?;
    let found: BTreeSet<Vec<u32>> = words
        .iter()
        .filter(|w| !w.is_zero())
        .map(|w| w.data().to_vec())
        .collect();
    let expected: BTreeSet<Vec<u32>> = listed.iter().map(|w| w.to_vec()).collect();

    let f = ExtField::new(2, 3)?;
    let (mut bases, mut closed) = (0, 0);
    for x in 1..8 {
        for y in 1..8 {
            for z in 1..8 {
                let Ok(b) = FieldBasis::new(&f, vec![x, y, z]) else {
                    continue;
                };
                bases += 1;
                if closed_under_generator(&f, &b, &words, &c) {
                    closed += 1;
                }
            }
        }
    }
    let ok = r.dually_amrd
        && r.d == 2
        && r.d_dual == 1
        && found == expected
        && bases == 168
        && closed == 0;
    Ok((
        ok,
        format!(
            "{}, d + d' = {} + {}, listed codewords match: {}, F_8-closed for {closed} of {bases} ordered bases",
            r.label,
            r.d,
            r.d_dual,
            found == expected
        ),
    ))
}

fn one_dimensional_existence(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for (q, m) in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)] {
        let f = ExtField::new(q, m)?;
        for n in 2..=m {
            let e = extend(&gabidulin(&f, n - 1, 1, &standard_points(&f, n - 1))?)?;
            let r = classify(&Spectra::of_vector(&e, ctx.budget)?)?;
            t.check(
                r.dually_amrd && r.d + 1 == n && r.d_dual == 1 && e.k() == 1,
                || {
                    format!(
                        "F_{q}^{m}, n = {n}: {} with d = {}, d' = {}",
                        r.label, r.d, r.d_dual
                    )
                },
            );
        }
    }
    t.finish("parameter sets")
}

fn dually_amrd_counts(ctx: &Ctx) -> Outcome {
    const NAMES: &[&str] = &["dually-amrd-recursion", "min-weight-count-bounds"];
    let mut t = corpus_tally(ctx, Kind::Any, NAMES)?;
    for (label, c) in [
        (
            "ternary-shifted-identities",
            catalog::ternary_shifted_identities(),
        ),
        ("diagonal-and-corner", catalog::diagonal_and_corner()),
    ] {
        let mut sp = Spectra::of_matrix(&c, ctx.budget)?;
        if ctx.fault && label.starts_with("ternary") {
            sp.dist.counts[2] += 1;
        }
        t.absorb(label, &identity_checks(&sp)?, NAMES);
    }
    t.finish("checks")
}

fn divisible_criterion_examples(ctx: &Ctx) -> Outcome {
    let (sp, r) = matrix_report(&catalog::diagonal_and_corner(), ctx.budget)?;
    let crit = dually_amrd_criterion(&sp)?;
    // A_1 = (1/4 - 1) A_2 + (1/4)([2 1] A'_1 + A'_2), scaled by 4.
    let (a1, a2, b1, b2) = (
        sp.a(1) as i64,
        sp.a(2) as i64,
        sp.a_dual(1) as i64,
        sp.a_dual(2) as i64,
    );
    let identity = 4 * a1 == (1 - 4) * a2 + (3 * b1 + b2) && a1 == 6;
    let first = identity
        && crit.branch == CriterionBranch::NonDivisible
        && rat_string(&crit.formula) == "6"
        && crit.agrees
        && r.dually_amrd;

    let (sp, r) = matrix_report(&catalog::ternary_shifted_identities(), ctx.budget)?;
    let crit = dually_amrd_criterion(&sp)?;
    let second = r.d == 2
        && r.d_dual == 1
        && r.dually_amrd
        && sp.a(2) == 6
        && sp.a_dual(1) == 6
        && crit.branch == CriterionBranch::Divisible
        && crit.formula_matches;
    Ok((
        first && second,
        format!(
            "binary: 4*{a1} = -3*{a2} + 3*{b1} + {b2}: {identity}; ternary: d = {}, d' = {}, A_2 = {}, A'_1 = {}",
            r.d,
            r.d_dual,
            sp.a(2),
            sp.a_dual(1)
        ),
    ))
}

fn formula_without_side_condition(ctx: &Ctx) -> Outcome {
    let (sp, r) = matrix_report(&catalog::amrd_with_sparse_dual(), ctx.budget)?;
    let crit = dually_amrd_criterion(&sp)?;
    let ok = sp.dist.counts == [1, 1, 18, 12]
        && sp.dual.counts == [1, 0, 9, 6]
        && r.rdef == 1
        && !r.dually_amrd
        && crit.a_d == 1
        && rat_string(&crit.formula) == "1"
        && crit.formula_matches
        && !crit.side_condition
        && !crit.criterion
        && crit.agrees;
    Ok((
        ok,
        format!(
            "A = {}, A' = {}, {} / dual {}, formula {} = A_1, side condition {}",
            tuple(&sp.dist.counts),
            tuple(&sp.dual.counts),
            r.class,
            r.dual_class,
            rat_string(&crit.formula),
            crit.side_condition
        ),
    ))
}

fn self_dual_codes(q: u32) -> Result<Vec<(String, MatrixCode)>> {
    let mut out = Vec::new();
    if q == 2 {
        out.push(("self-dual-pairs".to_string(), catalog::self_dual_pairs()));
    }
    let shapes: &[(usize, usize)] = if q == 2 {
        &[(2, 2), (2, 4), (3, 4), (4, 4)]
    } else {
        &[(2, 2), (2, 3), (3, 4)]
    };
    for &(n, m) in shapes {
        for s in 0..4 {
            out.push((
                format!("paired-coordinates({q}, {n}, {m}, seed {s})"),
                catalog::paired_coordinates(q, n, m, s)?,
            ));
        }
    }
    Ok(out)
}

fn self_dual_amrd(ctx: &Ctx) -> Outcome {
    const NAMES: &[&str] = &[
        "self-dual-dimension",
        "self-dual-distribution",
        "self-dual-amrd-distance",
        "self-dual-amrd-next-count",
    ];
    let mut t = Tally::default();
    let mut next_count = 0;
    for q in [2, 5] {
        for (label, c) in self_dual_codes(q)? {
            let checks = self_dual_checks(&c, ctx.budget)?;
            next_count += checks
                .iter()
                .filter(|c| c.name == "self-dual-amrd-next-count" && c.status == Status::Pass)
                .count();
            t.absorb(&label, &checks, NAMES);
        }
    }
    t.check(next_count > 0, || "odd-length count never exercised".into());
    t.finish("checks")
}

fn self_dual_char2(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    for (label, c) in self_dual_codes(2)? {
        t.absorb(
            &label,
            &self_dual_checks(&c, ctx.budget)?,
            &["char2-all-ones", "char2-amrd-parameters"],
        );
    }
    t.finish("checks")
}

fn small_self_dual(ctx: &Ctx) -> Outcome {
    let c = catalog::self_dual_pairs();
    let self_dual = c.dual().flat_basis() == c.flat_basis();
    let (_, r) = matrix_report(&c, ctx.budget)?;
    let ok = self_dual && r.t == 3 && r.rdef == 1 && r.d == 1 && (r.q, r.n, r.m) == (2, 2, 3);
    Ok((
        ok,
        format!(
            "self-dual: {self_dual}, t = {}, d = {}, {}",
            r.t, r.d, r.class
        ),
    ))
}

fn self_dual_vector(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    let f = ExtField::new(5, 2)?;
    let two = f.from_poly(&[2]);
    let c = VectorCode::new(f.clone(), Mat::from_rows(&[vec![two, 1]])?)?;
    let checks = self_dual_vector_checks(&c, ctx.budget)?;
    t.absorb("<(2, 1)> over F_25", &checks, &["self-dual-length-two"]);
    for (q, m) in [(2, 2), (2, 3), (3, 2), (5, 2), (5, 3), (13, 2)] {
        let f = ExtField::new(q, m)?;
        let mut found = 0;
        for g in 0..f.order() {
            let c = VectorCode::new(f.clone(), Mat::from_rows(&[vec![1, g]])?)?;
            if !c.same_code(&c.dual()) || vector_rank(&f, &[1, g]) != 1 {
                continue;
            }
            found += 1;
            t.check(f.is_base(g) && f.add(1, f.mul(g, g)) == 0, || {
                format!("F_{q}^{m}: <(1, {g})> is self-dual AMRD")
            });
        }
        let listed = self_dual_length_two_codes(&f);
        t.check(listed.len() == found, || {
            format!("F_{q}^{m}: {found} found, {} constructed", listed.len())
        });
        for c in &listed {
            let label = format!("F_{q}^{m} self-dual");
            t.absorb(
                &label,
                &self_dual_vector_checks(c, ctx.budget)?,
                &[
                    "self-dual-vector-dimension",
                    "self-dual-vector-shape",
                    "self-dual-length-two",
                    "char2-self-dual-vector",
                ],
            );
        }
    }
    t.finish("checks")
}

fn formal_self_duality(ctx: &Ctx) -> Outcome {
    let mut t = corpus_tally(ctx, Kind::Any, &["formally-self-dual"])?;
    for (q, n, m) in [(2, 2, 2), (3, 2, 2), (2, 2, 3), (2, 2, 4)] {
        for s in 0..40 {
            let c = random_matrix_code(q, n, m, n * m / 2, s)?;
            let sp = Spectra::of_matrix(&c, ctx.budget)?;
            t.absorb(
                "random",
                &formal_self_duality_checks(&sp)?,
                &["formally-self-dual"],
            );
        }
    }
    for (q, m, n) in [(2, 2, 2), (2, 3, 2), (2, 4, 4), (3, 2, 2)] {
        let f = ExtField::new(q, m)?;
        for s in 0..10 {
            let c = random_vector_code(&f, n, n / 2, s)?;
            let sp = Spectra::of_vector(&c, ctx.budget)?;
            t.absorb(
                "random vector",
                &formal_self_duality_checks(&sp)?,
                &["formally-self-dual"],
            );
        }
    }
    t.finish("checks")
}

fn sparse_dimension_bound(ctx: &Ctx) -> Outcome {
    let mut t = corpus_tally(ctx, Kind::Any, &["sparse-dually-amrd-dimension"])?;
    let c = MatrixCode::new(2, 2, 2, &[unit(2, 2, 0, 0), unit(2, 2, 0, 1)])?;
    let (sp, r) = matrix_report(&c, ctx.budget)?;
    t.check(r.dually_amrd && sp.a(r.d as i64 + 1) == 0, || {
        format!("<E11, E12>: {}, A = {}", r.label, tuple(&sp.dist.counts))
    });
    t.absorb(
        "<E11, E12>",
        &formal_self_duality_checks(&sp)?,
        &["sparse-dually-amrd-dimension"],
    );
    t.finish("checks")
}

fn degree_definition(ctx: &Ctx) -> Outcome {
    let mut t = Tally::default();
    let first = Some(IMrd { i: 1, degree: 0 });
    for e in ctx.corpus()? {
        let Some(w) = &e.audit.weights else { continue };
        if e.audit.report.rdef == 0 {
            t.check(w.code.i_mrd == first, || {
                format!("{}: optimal code has {:?}", e.label, w.code.i_mrd)
            });
        }
        if let Some(ex) = &w.expanded {
            t.check(ex.i_mrd == w.code.i_mrd, || {
                format!(
                    "{}: {:?} vs expansion {:?}",
                    e.label, w.code.i_mrd, ex.i_mrd
                )
            });
        }
    }
    t.finish("codes")
}

fn low_top_example(ctx: &Ctx) -> Outcome {
    let c = catalog::missing_coordinate();
    let sp = Spectra::of_vector(&c, ctx.budget)?;
    let r = classify(&sp)?;
    let p = generalized_weights_vector(&c, ctx.budget)?;
    let pd = generalized_weights_vector(&c.dual(), ctx.budget)?;
    let in_dual = c.dual().contains(&[0, 0, 0, 1]);
    let mut t = Tally::default();
    t.check(
        r.d == 3 && r.d_dual == 1 && r.dually_amrd && p.weights == [3] && in_dual,
        || format!("d = {}, d' = {}, M = {:?}", r.d, r.d_dual, p.weights),
    );
    t.absorb(
        "missing-coordinate",
        &degree_duality_checks(&p, &pd, &r),
        &["low-top-dual-amrd", "one-step-dually-amrd"],
    );
    let (ok, _) = t.finish("checks")?;
    Ok((
        ok,
        format!(
            "d = {}, d' = {}, {}, M_1 = M_k = {} < n = {}, (0, 0, 0, 1) in dual: {in_dual}",
            r.d, r.d_dual, r.label, p.weights[0], r.n
        ),
    ))
}

static CLAIMS: &[Claim] = &[
    Claim {
        id: "thm-2.1",
        title: "Singleton bound for codes and duals",
        run: Run::Corpus(Kind::Any, &["code-singleton", "dual-singleton"]),
    },
    Claim {
        id: "gabidulin-mrd",
        title: "Gabidulin codes are MRD of degree 0",
        run: Run::Fn(gabidulin_mrd),
    },
    Claim {
        id: "def-2.3",
        title: "rank defect, and agreement with the expansion",
        run: Run::Fn(rank_defect_definition),
    },
    Claim {
        id: "def-2.4",
        title: "QMRD classification and existence",
        run: Run::Fn(qmrd_definition),
    },
    Claim {
        id: "thm-2.6",
        title: "generalized weights of vector codes",
        run: Run::Corpus(
            Kind::Vector,
            &[
                "first-weight-is-distance",
                "vector-weights-increasing",
                "vector-weights-bounded",
                "dual-first-weight-is-distance",
                "dual-vector-weights-increasing",
                "dual-vector-weights-bounded",
                "wei-duality",
            ],
        ),
    },
    Claim {
        id: "def-2.7",
        title: "optimal anticodes have dimension m times max rank",
        run: Run::Fn(optimal_anticodes),
    },
    Claim {
        id: "thm-2.8",
        title: "generalized weights of matrix codes",
        run: Run::Corpus(
            Kind::Matrix,
            &[
                "first-weight-is-distance",
                "matrix-weights-nondecreasing",
                "matrix-weights-step",
                "matrix-weights-bounded",
                "dual-first-weight-is-distance",
                "dual-matrix-weights-nondecreasing",
                "dual-matrix-weights-step",
                "dual-matrix-weights-bounded",
            ],
        ),
    },
    Claim {
        id: "thm-2.9",
        title: "vector weights equal expansion weights for any basis",
        run: Run::Fn(expansion_any_basis),
    },
    Claim {
        id: "thm-2.10",
        title: "duality of matrix generalized weights",
        run: Run::Corpus(Kind::Matrix, &["wei-duality"]),
    },
    Claim {
        id: "def-3.1",
        title: "A^sMRD classes and the AMRD distance",
        run: Run::Fn(class_definitions),
    },
    Claim {
        id: "lemma-3.2",
        title: "extended Gabidulin codes are AMRD with dual distance 1",
        run: Run::Fn(extended_gabidulin),
    },
    Claim {
        id: "lemma-3.3",
        title: "AMRD subcodes of non-divisible dimension",
        run: Run::Fn(amrd_subcodes),
    },
    Claim {
        id: "def-3.4",
        title: "dually AMRD flag",
        run: Run::Fn(dually_amrd_definition),
    },
    Claim {
        id: "example-3.5",
        title: "AMRD code with a QMRD dual",
        run: Run::Fn(amrd_not_dually),
    },
    Claim {
        id: "example-3.6",
        title: "dually AMRD code in 3 x 3 binary matrices",
        run: Run::Fn(small_dually_amrd),
    },
    Claim {
        id: "prop-3.8",
        title: "distance sums of dually AMRD codes",
        run: Run::Fn(distance_relations),
    },
    Claim {
        id: "remark-3.9",
        title: "distance sum n - 1 without dual AMRD",
        run: Run::Fn(converse_fails),
    },
    Claim {
        id: "remark-3.10",
        title: "dually AMRD code not arising from an F_8-linear code",
        run: Run::Fn(not_an_expansion),
    },
    Claim {
        id: "thm-3.11",
        title: "one-dimensional dually AMRD codes exist",
        run: Run::Fn(one_dimensional_existence),
    },
    Claim {
        id: "thm-4.1",
        title: "distribution tail from the low counts",
        run: Run::Corpus(Kind::Any, &["tail-prediction"]),
    },
    Claim {
        id: "prop-4.2",
        title: "recursions and bounds for dually AMRD counts",
        run: Run::Fn(dually_amrd_counts),
    },
    Claim {
        id: "lemma-4.3",
        title: "minimum-weight count from the dual",
        run: Run::Corpus(Kind::Any, &["min-weight-count"]),
    },
    Claim {
        id: "thm-4.4",
        title: "dually AMRD criterion for AMRD codes",
        run: Run::Corpus(Kind::Any, &["dually-amrd-criterion"]),
    },
    Claim {
        id: "example-4.5",
        title: "criterion on the binary and ternary examples",
        run: Run::Fn(divisible_criterion_examples),
    },
    Claim {
        id: "remark-4.6",
        title: "formula holds while the side condition fails",
        run: Run::Fn(formula_without_side_condition),
    },
    Claim {
        id: "lemma-self-dual-amrd",
        title: "distance and next count of self-dual AMRD codes",
        run: Run::Fn(self_dual_amrd),
    },
    Claim {
        id: "cor-self-dual-char2",
        title: "self-dual AMRD parameters in characteristic 2",
        run: Run::Fn(self_dual_char2),
    },
    Claim {
        id: "example-4.8",
        title: "self-dual AMRD code in 2 x 3 binary matrices",
        run: Run::Fn(small_self_dual),
    },
    Claim {
        id: "thm-self-dual-vector",
        title: "self-dual AMRD vector codes",
        run: Run::Fn(self_dual_vector),
    },
    Claim {
        id: "lemma-4.9",
        title: "formal self-duality at t = nm/2 = dm",
        run: Run::Fn(formal_self_duality),
    },
    Claim {
        id: "lemma-4.10",
        title: "A_(d+1) = 0 bounds the dimension",
        run: Run::Fn(sparse_dimension_bound),
    },
    Claim {
        id: "def-5.1",
        title: "i-MRD degree and agreement with the expansion",
        run: Run::Fn(degree_definition),
    },
    Claim {
        id: "lemma-5.2",
        title: "i-MRD implies (i+1)-MRD",
        run: Run::Corpus(Kind::Any, &["i-mrd-upward-closed"]),
    },
    Claim {
        id: "lemma-5.3",
        title: "top weight n, dual weight, some i-MRD",
        run: Run::Corpus(Kind::Matrix, &["top-weight-equivalence"]),
    },
    Claim {
        id: "cor-5.4",
        title: "M_k = n, M_1 of dual, some i-MRD",
        run: Run::Corpus(Kind::Vector, &["top-weight-equivalence"]),
    },
    Claim {
        id: "thm-5.5",
        title: "i-MRD threshold from a dual weight",
        run: Run::Corpus(
            Kind::Matrix,
            &["i-mrd-threshold", "degree-from-dual-weight"],
        ),
    },
    Claim {
        id: "cor-5.6",
        title: "i-MRD threshold from the dual distance",
        run: Run::Corpus(
            Kind::Vector,
            &["i-mrd-threshold", "degree-from-dual-weight"],
        ),
    },
    Claim {
        id: "thm-5.7",
        title: "degree equals the dual rank defect",
        run: Run::Corpus(
            Kind::Matrix,
            &["degree-is-dual-defect", "low-top-dual-defect"],
        ),
    },
    Claim {
        id: "cor-5.8",
        title: "degree equals the dual rank defect, vector codes",
        run: Run::Corpus(
            Kind::Vector,
            &["degree-is-dual-defect", "low-top-dual-defect"],
        ),
    },
    Claim {
        id: "thm-5.9",
        title: "dual AMRD from the second step",
        run: Run::Corpus(
            Kind::Matrix,
            &[
                "dual-amrd-second-step",
                "low-top-dual-amrd",
                "one-step-dually-amrd",
            ],
        ),
    },
    Claim {
        id: "cor-5.10",
        title: "dual AMRD from M_2, vector codes",
        run: Run::Corpus(
            Kind::Vector,
            &[
                "dual-amrd-second-step",
                "low-top-dual-amrd",
                "one-step-dually-amrd",
            ],
        ),
    },
    Claim {
        id: "example-5-final",
        title: "one-dimensional dually AMRD code with M_k < n",
        run: Run::Fn(low_top_example),
    },
    Claim {
        id: "thm-2amrd",
        title: "2-AMRD codes and their duals",
        run: Run::Corpus(
            Kind::Matrix,
            &[
                "two-amrd-dual-weights",
                "two-amrd-dual",
                "two-amrd-iff-dually-amrd",
            ],
        ),
    },
    Claim {
        id: "cor-2amrd",
        title: "2-AMRD vector codes",
        run: Run::Corpus(Kind::Vector, &["two-amrd-dual", "two-amrd-iff-dually-amrd"]),
    },
];

/// Claim ids in registry order.
pub fn ids() -> Vec<&'static str> {
    CLAIMS.iter().map(|c| c.id).collect()
}

fn evaluate(c: &Claim, ctx: &Ctx) -> (ClaimResult, Option<Error>) {
    let outcome = match &c.run {
        Run::Fn(f) => f(ctx),
        Run::Corpus(kind, names) => {
            corpus_tally(ctx, *kind, names).and_then(|t| t.finish("checks"))
        }
    };
    let (status, detail, err) = match outcome {
        Ok((true, d)) => (Status::Pass, d, None),
        Ok((false, d)) => (Status::Fail, d, None),
        Err(e) => (Status::Fail, format!("error: {e}"), Some(e)),
    };
    (
        ClaimResult {
            id: c.id,
            title: c.title,
            status,
            detail,
        },
        err,
    )
}

/// Runs the selected claims; `fault` corrupts one built-in distribution.
pub fn run_claims(
    only: Option<&str>,
    budget: Budget,
    fault: bool,
) -> CliResult<(Vec<ClaimResult>, Option<Error>)> {
    let selected: Vec<&Claim> = match only {
        Some(id) => vec![CLAIMS
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| CliError::Usage(format!("unknown claim id {id:?}; see --list")))?],
        None => CLAIMS.iter().collect(),
    };
    let ctx = Ctx {
        budget,
        fault,
        corpus: OnceLock::new(),
    };
    let mut rows = Vec::new();
    let mut budget_error = None;
    for c in selected {
        let (row, err) = evaluate(c, &ctx);
        if let Some(e @ Error::BudgetExceeded { .. }) = err {
            budget_error.get_or_insert(e);
        }
        rows.push(row);
    }
    Ok((rows, budget_error))
}

pub(crate) fn verify(args: VerifyArgs, budget: Budget) -> CliResult<()> {
    if args.list {
        let list: String = CLAIMS
            .iter()
            .map(|c| format!("{:<22} {}\n", c.id, c.title))
            .collect();
        return emit(None, &list);
    }
    let (rows, budget_error) = run_claims(args.only.as_deref(), budget, args.inject_fault)?;
    let text = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("id,status\n");
            for r in &rows {
                s.push_str(&format!("{},{}\n", r.id, render::status_word(r.status)));
            }
            s
        }
        Format::Text => render::claims_text(&rows),
    };
    emit(None, &text)?;
    if let Some(e) = budget_error {
        return Err(e.into());
    }
    let failed: Vec<&str> = rows
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| r.id)
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "{} claim(s) failed: {}",
            failed.len(),
            failed.join(", ")
        )))
    }
}
