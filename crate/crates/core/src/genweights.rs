//! Generalized rank weights and the i-MRD hierarchy.
//!
//! Matrix codes use optimal anticodes: all `{M : colspace(M) <= U}` and, when
//! `n = m`, all `{M : rowspace(M) <= W}`. Vector codes use Galois-closed
//! subspaces, realized as `F_{q^m}`-spans of `F_q`-rational subspaces.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::analysis::{Check, CodeReport, Params};
use crate::codes::{MatrixCode, VectorCode};
use crate::error::{Error, Result};
use crate::fqlinalg::{enumerate_all_subspaces, Budget, Mat, Subspace};
use crate::gf::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    Vector,
    Matrix,
}

/// Smallest `i` with the i-MRD property and its degree `i - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IMrd {
    pub i: usize,
    pub degree: usize,
}

/// `M_1..M_k` of a vector code or `a_1..a_t` of a matrix code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenWeightProfile {
    pub kind: ProfileKind,
    /// For vector codes `t = mk`.
    #[serde(skip)]
    pub params: Params,
    pub weights: Vec<usize>,
    pub i_mrd: Option<IMrd>,
}

impl GenWeightProfile {
    fn build(kind: ProfileKind, params: Params, weights: Vec<usize>) -> Self {
        let mut p = Self {
            kind,
            params,
            weights,
            i_mrd: None,
        };
        p.i_mrd = i_mrd_degree(&p);
        p
    }

    /// The `r`-th weight, `n + 1` beyond the dimension.
    pub fn weight(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.weights
            .get(r - 1)
            .copied()
            .unwrap_or(self.params.n + 1)
    }

    /// `a_r` of the matrix code; for vector codes `a_r(lambda(C)) = M_{ceil(r/m)}`.
    pub fn at(&self, r: usize) -> usize {
        match self.kind {
            ProfileKind::Matrix => self.weight(r),
            ProfileKind::Vector => self.weight(r.div_ceil(self.params.m)),
        }
    }

    /// Number of steps `ceil(t/m)`.
    pub fn steps(&self) -> usize {
        self.params.ceil()
    }

    /// Weight at index `1 + (i-1)m`.
    pub fn step(&self, i: usize) -> usize {
        self.at(1 + (i - 1) * self.params.m)
    }

    /// Largest value the step `i` can take, `n - floor((t - r)/m)`.
    pub fn step_bound(&self, i: usize) -> usize {
        self.params.n + i - self.steps()
    }

    pub fn is_i_mrd(&self, i: usize) -> bool {
        (1..=self.steps()).contains(&i) && self.step(i) == self.step_bound(i)
    }

    /// Weight at index `1 + (t mod m) + (j-1)m`, the dual-side partner of
    /// the top step.
    fn partner(&self, j: usize) -> usize {
        let p = &self.params;
        self.at(1 + p.t % p.m + (j - 1) * p.m)
    }
}

/// Smallest `i` in `1..=ceil(t/m)` with `a_{1+(i-1)m} = n - floor((t-1-(i-1)m)/m)`.
pub fn i_mrd_degree(profile: &GenWeightProfile) -> Option<IMrd> {
    (1..=profile.steps())
        .find(|&i| profile.is_i_mrd(i))
        .map(|i| IMrd { i, degree: i - 1 })
}

/// Support orientation of an optimal anticode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// `{M : colspace(M) <= W}`, `W <= F_q^n`.
    Columns,
    /// `{M : rowspace(M) <= W}`, `W <= F_q^m`; only when `n = m`.
    Rows,
}

/// An optimal anticode of `n x m` matrices determined by its support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimalAnticode {
    n: usize,
    m: usize,
    support: Subspace,
    orientation: Orientation,
    /// Rows spanning the orthogonal complement of the support.
    checks: Mat,
}

impl OptimalAnticode {
    /// Builds the anticode and verifies `dim = m * maxrk`.
    pub fn new(
        field: &Field,
        n: usize,
        m: usize,
        support: Subspace,
        orientation: Orientation,
    ) -> Result<Self> {
        let ambient = match orientation {
            Orientation::Columns => n,
            Orientation::Rows if n == m => m,
            Orientation::Rows => {
                return Err(Error::InvalidParameters("n = m for row supports".into()))
            }
        };
        if support.ambient() != ambient {
            return Err(Error::AmbientMismatch(support.ambient(), ambient));
        }
        let a = Self {
            n,
            m,
            checks: support.orthogonal(field).basis().clone(),
            support,
            orientation,
        };
        let s = a.max_rank();
        let dim = a.realize().rank(field);
        let witness = a.witness().rank(field);
        if dim != m * s || witness != s {
            return Err(Error::Consistency(format!(
                "anticode with support of dimension {s}: dim {dim}, witness rank {witness}"
            )));
        }
        Ok(a)
    }

    pub fn support(&self) -> &Subspace {
        &self.support
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Every member has rank at most the support dimension.
    pub fn max_rank(&self) -> usize {
        self.support.dim()
    }

    /// Flattened basis of the anticode.
    pub fn realize(&self) -> Mat {
        let (n, m) = (self.n, self.m);
        let b = self.support.basis();
        let mut rows = Vec::new();
        for l in 0..b.rows() {
            match self.orientation {
                Orientation::Columns => {
                    for j in 0..m {
                        let mut x = vec![0u32; n * m];
                        (0..n).for_each(|i| x[i * m + j] = b.get(l, i));
                        rows.push(x);
                    }
                }
                Orientation::Rows => {
                    for i in 0..n {
                        let mut x = vec![0u32; n * m];
                        x[i * m..(i + 1) * m].copy_from_slice(b.row(l));
                        rows.push(x);
                    }
                }
            }
        }
        Mat::from_rows_with_cols(&rows, n * m).expect("shape")
    }

    /// A member of rank exactly `max_rank`.
    fn witness(&self) -> Mat {
        let (n, m) = (self.n, self.m);
        let b = self.support.basis();
        let mut w = Mat::zeros(n, m);
        for l in 0..b.rows() {
            match self.orientation {
                Orientation::Columns => (0..n).for_each(|i| w.set(i, l, b.get(l, i))),
                Orientation::Rows => (0..m).for_each(|j| w.set(l, j, b.get(l, j))),
            }
        }
        w
    }

    /// `dim(C intersected with this anticode)`.
    pub fn meet_dim(&self, code: &MatrixCode) -> usize {
        let f = code.field();
        let (n, m) = (self.n, self.m);
        let p = &self.checks;
        if p.rows() == 0 {
            return code.dim();
        }
        let images: Vec<Vec<u32>> = code
            .basis()
            .iter()
            .map(|b| {
                let img = match self.orientation {
                    Orientation::Columns => p.mul(f, b).expect("shape"),
                    Orientation::Rows => b.mul(f, &p.transpose()).expect("shape"),
                };
                img.data().to_vec()
            })
            .collect();
        let cols = match self.orientation {
            Orientation::Columns => p.rows() * m,
            Orientation::Rows => n * p.rows(),
        };
        let img = Mat::from_rows_with_cols(&images, cols).expect("shape");
        code.dim() - img.rank(f)
    }
}

fn min_index(best: &[usize], dim: usize) -> Vec<usize> {
    (1..=dim)
        .map(|r| {
            best.iter()
                .position(|&v| v >= r)
                .expect("full support meets the whole code")
        })
        .collect()
}

/// `a_1..a_t` by exhaustive search over optimal anticodes.
pub fn generalized_weights_matrix(code: &MatrixCode, budget: Budget) -> Result<GenWeightProfile> {
    let (q, n, m) = (code.q(), code.n(), code.m());
    let f = code.field();
    let mut best = vec![0usize; n + 1];
    let orientations: &[Orientation] = if n == m {
        &[Orientation::Columns, Orientation::Rows]
    } else {
        &[Orientation::Columns]
    };
    for u in enumerate_all_subspaces(q, n, budget)? {
        let s = u.dim();
        for &o in orientations {
            let a = OptimalAnticode::new(f, n, m, u.clone(), o)?;
            best[s] = best[s].max(a.meet_dim(code));
        }
    }
    let params = Params {
        q,
        n,
        m,
        t: code.dim(),
    };
    Ok(GenWeightProfile::build(
        ProfileKind::Matrix,
        params,
        min_index(&best, code.dim()),
    ))
}

/// `M_1..M_k` by exhaustive search over Galois-closed subspaces.
pub fn generalized_weights_vector(code: &VectorCode, budget: Budget) -> Result<GenWeightProfile> {
    let f = code.field();
    let (q, n, k) = (f.q(), code.n(), code.k());
    let g = code.generator();
    let mut best = vec![0usize; n + 1];
    for u in enumerate_all_subspaces(q, n, budget)? {
        let s = u.dim();
        let rows: Vec<Vec<u32>> = u
            .basis()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|&c| f.from_poly(&[c])).collect())
            .collect();
        let v = Mat::from_rows_with_cols(&rows, n).expect("shape");
        for row in &rows {
            let image: Vec<u32> = row.iter().map(|&x| f.frobenius(x, 1)).collect();
            let frob = Mat::from_rows_with_cols(&[image], n).expect("shape");
            if v.stack(&frob)?.rank(f) != s {
                return Err(Error::Consistency(format!(
                    "span of a rational subspace of dimension {s} is not Frobenius-stable"
                )));
            }
        }
        let meet = s + k - v.stack(g)?.rank(f);
        best[s] = best[s].max(meet);
    }
    let params = Params {
        q,
        n,
        m: code.m(),
        t: code.m() * k,
    };
    Ok(GenWeightProfile::build(
        ProfileKind::Vector,
        params,
        min_index(&best, k),
    ))
}

/// Monotonicity, upper bounds and `w_1 = d`.
pub fn profile_checks(p: &GenWeightProfile, d: usize) -> Vec<Check> {
    let w = &p.weights;
    let Params { n, m, t, .. } = p.params;
    let mut out = Vec::new();
    out.push(Check::new(
        "first-weight-is-distance",
        w.first() == Some(&d),
        format!("w_1 = {:?}, d = {d}", w.first()),
    ));
    match p.kind {
        ProfileKind::Vector => {
            let k = w.len();
            out.push(Check::new(
                "vector-weights-increasing",
                w.windows(2).all(|x| x[0] < x[1]),
                format!("{w:?}"),
            ));
            out.push(Check::new(
                "vector-weights-bounded",
                w.iter().enumerate().all(|(i, &x)| x <= n - k + i + 1) && w.last() <= Some(&n),
                format!("{w:?} against n - k + r with n = {n}, k = {k}"),
            ));
        }
        ProfileKind::Matrix => {
            out.push(Check::new(
                "matrix-weights-nondecreasing",
                w.windows(2).all(|x| x[0] <= x[1]),
                format!("{w:?}"),
            ));
            out.push(Check::new(
                "matrix-weights-step",
                (1..=t.saturating_sub(m)).all(|r| p.weight(r) < p.weight(r + m)),
                format!("a_r < a_(r+m) for {w:?}, m = {m}"),
            ));
            out.push(Check::new(
                "matrix-weights-bounded",
                (1..=t).all(|r| p.weight(r) <= n - (t - r) / m) && p.weight(t) <= n,
                format!("{w:?} against n - floor((t - r)/m)"),
            ));
        }
    }
    out
}

/// `M_r(C) = a_{rm - e}(lambda(C))` for all `r` and `0 <= e < m`.
pub fn compatibility_check(vector: &GenWeightProfile, expanded: &GenWeightProfile) -> Check {
    let m = vector.params.m;
    let k = vector.weights.len();
    let bad: Vec<(usize, usize)> = (1..=k)
        .flat_map(|r| (0..m).map(move |e| (r, e)))
        .filter(|&(r, e)| vector.weight(r) != expanded.weight(r * m - e))
        .collect();
    Check::new(
        "expansion-weights",
        bad.is_empty() && expanded.weights.len() == m * k,
        format!(
            "M = {:?}, a = {:?}, mismatches at (r, e) = {bad:?}",
            vector.weights, expanded.weights
        ),
    )
}

/// The set of `i` with the i-MRD property is closed upwards.
pub fn domino_check(p: &GenWeightProfile) -> Check {
    let set: Vec<usize> = (1..=p.steps()).filter(|&i| p.is_i_mrd(i)).collect();
    let closed = set
        .first()
        .is_none_or(|&i0| set == (i0..=p.steps()).collect::<Vec<_>>());
    Check::new(
        "i-mrd-upward-closed",
        closed,
        format!("i-MRD for i in {set:?}"),
    )
}

/// Both sides of the duality between the weights of a code and its dual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeiReport {
    pub holds: bool,
    pub left: BTreeSet<usize>,
    pub right: BTreeSet<usize>,
}

/// Matrix form: `{n+1 - a_{1+t-jm}} + {a'_{1+jm}}` partitions `[n]`;
/// vector form: `{M_r} + {n+1 - M'_j}` partitions `[n]`.
pub fn wei_duality(p: &GenWeightProfile, dual: &GenWeightProfile) -> WeiReport {
    let n = p.params.n;
    let (left, right): (BTreeSet<usize>, BTreeSet<usize>) = match p.kind {
        ProfileKind::Vector => (
            p.weights.iter().copied().collect(),
            dual.weights.iter().map(|&x| n + 1 - x).collect(),
        ),
        ProfileKind::Matrix => {
            let Params { m, t, .. } = p.params;
            let td = dual.params.t;
            (
                (1..=t / m)
                    .map(|j| n + 1 - p.weight(1 + t - j * m))
                    .collect(),
                (0..td.div_ceil(m))
                    .map(|j| dual.weight(1 + j * m))
                    .collect(),
            )
        }
    };
    let count = match p.kind {
        ProfileKind::Vector => p.weights.len() + dual.weights.len(),
        ProfileKind::Matrix => p.params.t / p.params.m + dual.params.t.div_ceil(p.params.m),
    };
    let union: BTreeSet<usize> = left.union(&right).copied().collect();
    let holds = union == (1..=n).collect() && left.len() + right.len() == n && count == n;
    WeiReport { holds, left, right }
}

/// Three conditions that are equivalent for every code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TopWeightReport {
    /// `a_{1+(ceil(t/m)-1)m} = n`, or `M_k = n`.
    pub top_is_n: bool,
    /// The partner dual weight differs from 1.
    pub dual_partner_not_one: bool,
    pub some_i_mrd: bool,
    pub consistent: bool,
}

pub fn mk_equals_n_diagnostics(p: &GenWeightProfile, dual: &GenWeightProfile) -> TopWeightReport {
    let top = p.step(p.steps()) == p.params.n;
    let partner = dual.partner(1) != 1;
    let some = p.i_mrd.is_some();
    TopWeightReport {
        top_is_n: top,
        dual_partner_not_one: partner,
        some_i_mrd: some,
        consistent: top == partner && partner == some,
    }
}

/// Relations between the i-MRD degree, the first dual weights and the rank
/// defect of the dual.
pub fn degree_duality_checks(
    p: &GenWeightProfile,
    dual: &GenWeightProfile,
    report: &CodeReport,
) -> Vec<Check> {
    let n = p.params.n;
    let c = p.steps();
    let top = p.step(c) == n;
    let partner = dual.partner(1);
    let divisible = p.params.divisible();
    let mut out = Vec::new();
    let no_top = "top weight is below n";

    if top {
        let bad: Vec<usize> = (1..=c)
            .filter(|&i| p.is_i_mrd(i) != (2 + c - i <= partner))
            .collect();
        out.push(Check::new(
            "i-mrd-threshold",
            bad.is_empty(),
            format!("dual partner weight {partner}, disagreements at i in {bad:?}"),
        ));
        let ok = p.i_mrd.is_some_and(|x| partner == c + 2 - x.i);
        out.push(Check::new(
            "degree-from-dual-weight",
            ok,
            format!(
                "i-MRD {:?}, dual partner weight {partner}, ceil(t/m) = {c}",
                p.i_mrd
            ),
        ));
    } else {
        out.push(Check::skipped("i-mrd-threshold", no_top));
        out.push(Check::skipped("degree-from-dual-weight", no_top));
    }

    if !divisible {
        for name in [
            "degree-is-dual-defect",
            "low-top-dual-defect",
            "dual-amrd-second-step",
            "low-top-dual-amrd",
        ] {
            out.push(Check::skipped(name, "m does not divide t"));
        }
        return out;
    }

    out.push(match (top, p.i_mrd) {
        (true, Some(x)) => Check::new(
            "degree-is-dual-defect",
            x.degree == report.rdef_dual,
            format!("degree {}, rdef(dual) = {}", x.degree, report.rdef_dual),
        ),
        _ => Check::skipped("degree-is-dual-defect", no_top),
    });
    out.push(Check::new(
        "low-top-dual-defect",
        !top == (report.rdef_dual == c),
        format!(
            "top is n: {top}, rdef(dual) = {}, t/m = {c}",
            report.rdef_dual
        ),
    ));

    let dual_amrd = report.rdef_dual == 1;
    out.push(if top && report.rdef >= 1 && c >= 2 {
        let second = p.step(2);
        Check::new(
            "dual-amrd-second-step",
            dual_amrd == (second == report.d + report.rdef + 1),
            format!(
                "second step {second}, d + rdef + 1 = {}, dual AMRD = {dual_amrd}",
                report.d + report.rdef + 1
            ),
        )
    } else {
        Check::skipped(
            "dual-amrd-second-step",
            "needs top = n, rdef >= 1, t/m >= 2",
        )
    });
    out.push(if top {
        Check::skipped("low-top-dual-amrd", "top weight equals n")
    } else {
        Check::new(
            "low-top-dual-amrd",
            dual_amrd == (c == 1),
            format!("dual AMRD = {dual_amrd}, t/m = {c}"),
        )
    });
    let one_step = report.dually_amrd && c == 1;
    out.push(Check::new(
        "one-step-dually-amrd",
        one_step == (!top && report.d + 1 == n),
        format!(
            "dually AMRD with t/m = 1: {one_step}, top is n: {top}, d = {}",
            report.d
        ),
    ));
    out
}

fn is_two_amrd(p: &GenWeightProfile, rdef: usize) -> bool {
    rdef == 1 && p.is_i_mrd(2)
}

/// AMRD codes that are also 2-MRD.
pub fn two_amrd_checks(
    p: &GenWeightProfile,
    dual: &GenWeightProfile,
    report: &CodeReport,
) -> Vec<Check> {
    let c = p.steps();
    let two = is_two_amrd(p, report.rdef);
    let mut out = Vec::new();
    if two {
        let (w1, w2) = (dual.partner(1), dual.partner(2));
        out.push(Check::new(
            "two-amrd-dual-weights",
            w1 == c && w2 == c + 2,
            format!(
                "dual partner weights ({w1}, {w2}), expected ({c}, {})",
                c + 2
            ),
        ));
    } else {
        out.push(Check::skipped(
            "two-amrd-dual-weights",
            "code is not 2-AMRD",
        ));
    }
    if !p.params.divisible() {
        out.push(Check::skipped("two-amrd-dual", "m does not divide t"));
        out.push(Check::skipped(
            "two-amrd-iff-dually-amrd",
            "m does not divide t",
        ));
        return out;
    }
    out.push(match (two, dual.steps()) {
        (false, _) => Check::skipped("two-amrd-dual", "code is not 2-AMRD"),
        (true, cd) if cd < 2 => Check::skipped("two-amrd-dual", "dual has t/m = 1"),
        (true, _) => Check::new(
            "two-amrd-dual",
            is_two_amrd(dual, report.rdef_dual),
            format!(
                "dual weights {:?}, rdef(dual) = {}",
                dual.weights, report.rdef_dual
            ),
        ),
    });
    out.push(Check::new(
        "two-amrd-iff-dually-amrd",
        two == (report.dually_amrd && c > 1),
        format!(
            "2-AMRD = {two}, dually AMRD = {}, t/m = {c}",
            report.dually_amrd
        ),
    ));
    out
}
