//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Distributions are recounted here by brute force with a separate rank
//! routine, and the MacWilliams identity, Gaussian binomials and the
//! closed forms are evaluated with plain integer arithmetic.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rankcode::analysis::{
    classify, dually_amrd_criterion, self_dual_checks, self_dual_vector_checks, CodeClass, Spectra,
    Status,
};
use rankcode::audit::{audit, Depth};
use rankcode::catalog;
use rankcode::codes::{
    gabidulin, random_matrix_code, random_vector_code, standard_points, Code, MatrixCode,
    VectorCode,
};
use rankcode::enumerate::codewords;
use rankcode::fqlinalg::{Budget, Mat};
use rankcode::genweights::generalized_weights_vector;
use rankcode::gf::{ExtField, FiniteField};

type Outcome = Result<String, String>;

/// Name, check and time limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

const BUDGET: Budget = Budget(1 << 22);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank over the prime field `F_p`, by plain row reduction.
fn rank_mod(p: u32, mut rows: Vec<Vec<u32>>) -> usize {
    let p = p as u64;
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c] as u64, p);
        let pivot: Vec<u64> = rows[rank].iter().map(|&x| x as u64 * inv % p).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c] as u64;
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = ((*x as u64 + p * p - f * y) % p) as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gb(n: usize, k: usize, q: u32) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Rank distribution by visiting every codeword.
fn brute_distribution(code: &MatrixCode) -> Vec<u64> {
    let mut counts = vec![0u64; code.n() + 1];
    for w in codewords(code, BUDGET).expect("within budget") {
        counts[rank_mod(code.q(), w.to_rows())] += 1;
    }
    counts
}

fn min_distance(counts: &[u64]) -> usize {
    (1..counts.len()).find(|&i| counts[i] > 0).unwrap_or(0)
}

/// `sum_i [n-i, v] A_i = q^(t - mv) sum_j [n-j, v-j] B_j` for every `v`.
fn macwilliams(q: u32, n: usize, m: usize, t: usize, a: &[u64], b: &[u64]) -> bool {
    (0..=n).all(|v| {
        let lhs: u128 = (0..=n - v).map(|i| gb(n - i, v, q) * a[i] as u128).sum();
        let rhs: u128 = (0..=v).map(|j| gb(n - j, v - j, q) * b[j] as u128).sum();
        lhs * (q as u128).pow((m * v) as u32) == rhs * (q as u128).pow(t as u32)
    })
}

/// `<A, B> = 0` for every pair of basis matrices, with complementary dimensions.
fn is_dual_pair(code: &MatrixCode, dual: &MatrixCode) -> bool {
    let q = code.q() as u64;
    code.dim() + dual.dim() == code.n() * code.m()
        && code.basis().iter().all(|a| {
            dual.basis().iter().all(|b| {
                a.data()
                    .iter()
                    .zip(b.data())
                    .map(|(&x, &y)| x as u64 * y as u64)
                    .sum::<u64>()
                    % q
                    == 0
            })
        })
}

/// `sum_i x_i y_i = 0` over `F_{q^m}` for generator rows of a code and its dual.
fn is_vector_dual_pair(code: &VectorCode) -> bool {
    let f = code.field();
    let dual = code.dual();
    let (g, h) = (code.generator(), dual.generator());
    code.k() + dual.k() == code.n()
        && (0..g.rows()).all(|i| {
            (0..h.rows()).all(|j| {
                g.row(i)
                    .iter()
                    .zip(h.row(j))
                    .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
                    == 0
            })
        })
}

fn unit(n: usize, m: usize, i: usize, j: usize) -> Mat {
    let mut a = Mat::zeros(n, m);
    a.set(i, j, 1);
    a
}

fn criterion_1() -> Outcome {
    let c = catalog::diagonal_and_corner();
    let a = brute_distribution(&c);
    let b = brute_distribution(&c.dual());
    ensure(a == [1, 6, 7, 2], || format!("distribution {a:?}"))?;
    ensure(b == [1, 9, 18, 4], || format!("dual distribution {b:?}"))?;
    let sp = Spectra::of_matrix(&c, BUDGET).map_err(|e| e.to_string())?;
    let r = classify(&sp).map_err(|e| e.to_string())?;
    ensure(r.d == 1 && r.d_dual == 1 && r.dually_amrd, || {
        format!(
            "d = {}, d' = {}, dually AMRD {}",
            r.d, r.d_dual, r.dually_amrd
        )
    })?;
    // 4 A_1 = (1 - 4) [3, 2] + ([2, 1] A'_1 + A'_2), i.e. q^(alpha - m) = 1/4.
    let lhs = 4 * a[1] as i128;
    let rhs = -3 * gb(3, 2, 2) as i128 + gb(2, 1, 2) as i128 * b[1] as i128 + b[2] as i128;
    ensure(lhs == rhs && lhs == 24, || {
        format!("4 A_d = {lhs}, formula x 4 = {rhs}")
    })?;
    let cr = dually_amrd_criterion(&sp).map_err(|e| e.to_string())?;
    ensure(cr.formula_matches && cr.criterion && cr.agrees, || {
        format!("{cr:?}")
    })?;
    Ok("(1,6,7,2) / (1,9,18,4), 6 = (1/4 - 1) 7 + (1/4)(3 9 + 18)".into())
}

fn criterion_2() -> Outcome {
    let c = catalog::ternary_shifted_identities();
    let expected = MatrixCode::from_flat_rows(
        3,
        3,
        3,
        &[
            vec![1, 0, 0, 0, 1, 0, 0, 0, 0],
            vec![0, 1, 0, 0, 0, 1, 1, 0, 0],
            vec![0, 0, 1, 1, 0, 0, 0, 1, 0],
        ],
    )
    .map_err(|e| e.to_string())?;
    ensure(c.flat_basis() == expected.flat_basis(), || {
        "basis differs".into()
    })?;
    let mut corner = Mat::zeros(3, 3);
    corner.set(2, 2, 2);
    ensure(c.dual().contains(&corner), || {
        "2 E33 not in the dual".into()
    })?;
    let a = brute_distribution(&c);
    let b = brute_distribution(&c.dual());
    ensure(min_distance(&a) == 2 && min_distance(&b) == 1, || {
        format!("distributions {a:?} / {b:?}")
    })?;
    ensure(a[2] == 6 && b[1] == 6, || {
        format!("A_2 = {}, A'_1 = {}", a[2], b[1])
    })?;
    let r = classify(&Spectra::of_matrix(&c, BUDGET).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(r.dually_amrd, || format!("label {}", r.label))?;
    Ok(format!(
        "d = 2, d' = 1, dually AMRD, A_2 = A'_1 = 6; {a:?} / {b:?}"
    ))
}

fn criterion_3() -> Outcome {
    let c = catalog::amrd_with_sparse_dual();
    let a = brute_distribution(&c);
    let b = brute_distribution(&c.dual());
    ensure(a == [1, 1, 18, 12], || format!("distribution {a:?}"))?;
    ensure(b == [1, 0, 9, 6], || format!("dual distribution {b:?}"))?;
    // t = 5 = 3 + 2: 2 A_1 = (1 - 2) [3, 2] + [2, 1] A'_1 + A'_2.
    let rhs = -(gb(3, 2, 2) as i128) + gb(2, 1, 2) as i128 * b[1] as i128 + b[2] as i128;
    ensure(rhs == 2 * a[1] as i128, || format!("formula x 2 = {rhs}"))?;
    let sp = Spectra::of_matrix(&c, BUDGET).map_err(|e| e.to_string())?;
    let r = classify(&sp).map_err(|e| e.to_string())?;
    ensure(r.class == CodeClass::AsMrd(1) && !r.dually_amrd, || {
        format!("class {}, dually AMRD {}", r.class, r.dually_amrd)
    })?;
    let cr = dually_amrd_criterion(&sp).map_err(|e| e.to_string())?;
    ensure(
        cr.formula_matches && !cr.side_condition && !cr.criterion && cr.agrees,
        || format!("{cr:?}"),
    )?;
    Ok("formula gives A_1 = 1 but A'_1 = 0, AMRD and not dually AMRD".into())
}

fn criterion_4() -> Outcome {
    let c = catalog::missing_coordinate();
    let f = c.field();
    ensure(f.modulus() == [1, 1, 0, 0, 1], || {
        format!("modulus {:?}", f.modulus())
    })?;
    let a = brute_distribution(&Code::Vector(c.clone()).as_matrix());
    let b = brute_distribution(&Code::Vector(c.dual()).as_matrix());
    let (d, dd) = (min_distance(&a), min_distance(&b));
    ensure(d == 3 && dd == 1, || format!("d = {d}, d' = {dd}"))?;
    let au =
        audit(&Code::Vector(c.clone()), Depth::All, true, BUDGET).map_err(|e| e.to_string())?;
    ensure(au.report.dually_amrd, || "not dually AMRD".into())?;
    let w = generalized_weights_vector(&c, BUDGET).map_err(|e| e.to_string())?;
    let k = c.k();
    ensure(w.weights == [3] && w.weight(k) < c.n(), || {
        format!("M = {:?}", w.weights)
    })?;
    // With M_k < n: dually AMRD iff k = 1 and M_k = d = n - 1.
    let rhs = k == 1 && w.weight(k) == d && d == c.n() - 1;
    ensure(au.report.dually_amrd == rhs, || "equivalence fails".into())?;
    let one_step = au.checks.iter().find(|x| x.name == "one-step-dually-amrd");
    ensure(one_step.is_some_and(|x| x.status == Status::Pass), || {
        format!("{one_step:?}")
    })?;
    let failed: Vec<_> = au.failures().map(|x| x.name.clone()).collect();
    ensure(failed.is_empty(), || format!("failed checks {failed:?}"))?;
    Ok(format!(
        "d = 3, d' = 1, M_1 = M_k = 3 < 4, distribution {a:?}"
    ))
}

fn criterion_5() -> Outcome {
    let f = ExtField::new(2, 4).map_err(|e| e.to_string())?;
    let mut seen = 0;
    for n in 1..=4 {
        for k in 1..=n {
            let g = gabidulin(&f, n, k, &standard_points(&f, n)).map_err(|e| e.to_string())?;
            let a = brute_distribution(&Code::Vector(g.clone()).as_matrix());
            let d = min_distance(&a);
            ensure(d == n - k + 1, || format!("[{n}, {k}]: d = {d}"))?;
            let rdef = n - k + 1 - d;
            ensure(rdef == 0, || format!("[{n}, {k}]: rdef {rdef}"))?;
            if k < n {
                let r = classify(&Spectra::of_vector(&g, BUDGET).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                ensure(r.rdef == 0 && r.class == CodeClass::Mrd, || {
                    format!("[{n}, {k}]: classified {}", r.class)
                })?;
            }
            let w = generalized_weights_vector(&g, BUDGET).map_err(|e| e.to_string())?;
            let expected: Vec<usize> = (1..=k).map(|r| n - k + r).collect();
            ensure(w.weights == expected, || {
                format!("[{n}, {k}]: M = {:?}", w.weights)
            })?;
            ensure(w.i_mrd.is_some_and(|x| x.i == 1 && x.degree == 0), || {
                format!("[{n}, {k}]: i-MRD {:?}", w.i_mrd)
            })?;
            seen += 1;
        }
    }
    Ok(format!(
        "{seen} Gabidulin codes over F_16 attain d = n - k + 1"
    ))
}

/// Families that must pass on at least one corpus code.
const REQUIRED: &[&str] = &[
    "macwilliams",
    "tail-prediction",
    "code-singleton",
    "dual-singleton",
    "dually-amrd-distance-sum",
    "divisible-distance-sum-criterion",
    "dually-amrd-distance-pair",
    "dually-amrd-criterion",
    "first-weight-is-distance",
    "matrix-weights-nondecreasing",
    "matrix-weights-step",
    "matrix-weights-bounded",
    "vector-weights-increasing",
    "vector-weights-bounded",
    "expansion-weights",
    "wei-duality",
    "i-mrd-upward-closed",
    "top-weight-equivalence",
    "i-mrd-threshold",
    "degree-from-dual-weight",
    "degree-is-dual-defect",
    "low-top-dual-defect",
    "dual-amrd-second-step",
    "low-top-dual-amrd",
    "one-step-dually-amrd",
    "two-amrd-dual-weights",
    "two-amrd-iff-dually-amrd",
];

fn identity_corpus() -> Vec<Code> {
    let fits = |q: u32, t: usize, dual: usize| {
        (q as u64).pow(t as u32) <= 1 << 16 && (q as u64).pow(dual as u32) <= 1 << 20
    };
    let mut out = Vec::new();
    for q in [2u32, 3] {
        for n in 2..=4 {
            for m in n..=4 {
                for t in 1..n * m {
                    if !fits(q, t, n * m - t) {
                        continue;
                    }
                    for s in 0..6 {
                        out.push(Code::Matrix(random_matrix_code(q, n, m, t, s).unwrap()));
                    }
                }
            }
        }
        for m in 2..=4 {
            let f = ExtField::new(q, m).unwrap();
            for n in 2..=m {
                for k in 1..n {
                    if !fits(q, m * k, m * (n - k)) {
                        continue;
                    }
                    for s in 0..4 {
                        out.push(Code::Vector(random_vector_code(&f, n, k, s).unwrap()));
                    }
                }
            }
        }
    }
    out
}

fn criterion_6() -> Outcome {
    let corpus = identity_corpus();
    ensure(corpus.len() >= 500, || {
        format!("only {} codes", corpus.len())
    })?;
    let mut passes: BTreeMap<String, usize> = BTreeMap::new();
    for code in &corpus {
        let (q, n, m, t) = (code.q(), code.n(), code.m(), code.fq_dim());
        let tag = format!("(q {q}, n {n}, m {m}, t {t})");
        let mat = code.as_matrix();
        let dual = mat.dual();
        ensure(is_dual_pair(&mat, &dual), || {
            format!("{tag}: dual is not orthogonal")
        })?;
        if let Code::Vector(v) = code {
            ensure(is_vector_dual_pair(v), || {
                format!("{tag}: vector dual is not orthogonal")
            })?;
        }
        let a = brute_distribution(&mat);
        let b = brute_distribution(&dual);
        ensure(macwilliams(q, n, m, t, &a, &b), || {
            format!("{tag}: MacWilliams fails for {a:?} / {b:?}")
        })?;
        let bound = n + 1 - t.div_ceil(m);
        let bound_dual = n + 1 - (n * m - t).div_ceil(m);
        ensure(
            min_distance(&a) <= bound && min_distance(&b) <= bound_dual,
            || format!("{tag}: Singleton bound exceeded"),
        )?;
        let au = audit(code, Depth::All, true, BUDGET).map_err(|e| format!("{tag}: {e}"))?;
        ensure(
            au.report.distribution == a && au.report.dual_distribution == b,
            || format!("{tag}: library distributions differ from recount"),
        )?;
        let failed: Vec<_> = au
            .failures()
            .map(|x| format!("{}: {}", x.name, x.detail))
            .collect();
        ensure(failed.is_empty(), || format!("{tag}: {failed:?}"))?;
        for c in au.checks.iter().filter(|c| c.status == Status::Pass) {
            *passes.entry(c.name.clone()).or_default() += 1;
        }
    }
    let missing: Vec<_> = REQUIRED
        .iter()
        .filter(|n| !passes.contains_key(**n))
        .collect();
    ensure(missing.is_empty(), || {
        format!("never exercised: {missing:?}")
    })?;
    let total: usize = passes.values().sum();
    Ok(format!(
        "{} codes, {total} passing checks, 0 violations",
        corpus.len()
    ))
}

fn criterion_7() -> Outcome {
    let c = catalog::self_dual_pairs();
    let expected = MatrixCode::new(
        2,
        2,
        3,
        &[
            unit(2, 3, 0, 0).add(c.field(), &unit(2, 3, 0, 1)).unwrap(),
            unit(2, 3, 1, 0).add(c.field(), &unit(2, 3, 1, 1)).unwrap(),
            unit(2, 3, 0, 2).add(c.field(), &unit(2, 3, 1, 2)).unwrap(),
        ],
    )
    .map_err(|e| e.to_string())?;
    ensure(c.flat_basis() == expected.flat_basis(), || {
        "basis differs".into()
    })?;
    ensure(is_dual_pair(&c, &c), || "not self-orthogonal".into())?;
    let a = brute_distribution(&c);
    ensure(min_distance(&a) == 1 && a.len() == 3, || {
        format!("distribution {a:?}")
    })?;
    let checks = self_dual_checks(&c, BUDGET).map_err(|e| e.to_string())?;
    let bad: Vec<_> = checks
        .iter()
        .filter(|x| x.failed())
        .map(|x| &x.name)
        .collect();
    ensure(bad.is_empty(), || format!("failed {bad:?}"))?;
    let r = classify(&Spectra::of_matrix(&c, BUDGET).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(r.rdef == 1, || format!("class {}", r.class))?;

    // Binary self-dual codes contain the all-ones matrix.
    let mut binary = vec![c.clone()];
    for (n, m) in [(2, 2), (2, 4), (3, 4), (4, 4)] {
        for s in 0..4 {
            binary.push(catalog::paired_coordinates(2, n, m, s).map_err(|e| e.to_string())?);
        }
    }
    for code in &binary {
        ensure(is_dual_pair(code, code), || {
            "paired code not self-dual".into()
        })?;
        let ones = Mat::from_rows(&vec![vec![1u32; code.m()]; code.n()]).unwrap();
        ensure(code.contains(&ones), || {
            format!("{} x {}: no all-ones", code.n(), code.m())
        })?;
    }

    // <(2, 1)> over F_25: 2^2 = -1 in F_5.
    let f = ExtField::new(5, 2).map_err(|e| e.to_string())?;
    ensure(f.mul(2, 2) == f.neg(1), || "2^2 != -1".into())?;
    let v = VectorCode::new(f.clone(), Mat::from_rows(&[vec![2, 1]]).unwrap())
        .map_err(|e| e.to_string())?;
    ensure(v.same_code(&v.dual()), || {
        "<(2, 1)> is not self-dual".into()
    })?;
    let vm = Code::Vector(v.clone()).as_matrix();
    ensure(is_dual_pair(&vm, &vm), || {
        "expansion not self-orthogonal".into()
    })?;
    let vc = self_dual_vector_checks(&v, BUDGET).map_err(|e| e.to_string())?;
    let two = vc.iter().find(|x| x.name == "self-dual-length-two");
    ensure(two.is_some_and(|x| x.status == Status::Pass), || {
        format!("{two:?}")
    })?;
    ensure(vc.iter().all(|x| !x.failed()), || format!("{vc:?}"))?;

    // Dually AMRD with t = nm/2 = dm has equal distributions.
    let mut found = 0;
    for (q, n, m) in [(2u32, 2, 2), (3, 2, 2), (2, 2, 4), (2, 4, 4)] {
        let t = n * m / 2;
        for s in 0..40 {
            let code = random_matrix_code(q, n, m, t, s).map_err(|e| e.to_string())?;
            let a = brute_distribution(&code);
            let b = brute_distribution(&code.dual());
            let (d, dd) = (min_distance(&a), min_distance(&b));
            let bound = n + 1 - t / m;
            if d + 1 == bound && dd + 1 == bound && t == d * m {
                ensure(a == b, || {
                    format!("({q}, {n}, {m}) seed {s}: {a:?} vs {b:?}")
                })?;
                found += 1;
            }
        }
    }
    ensure(found > 0, || {
        "no dually AMRD code with t = nm/2 = dm found".into()
    })?;
    Ok(format!(
        "{} binary self-dual codes, <(2, 1)> over F_25, {found} formally self-dual codes",
        binary.len()
    ))
}

fn criterion_8() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_rankcode");
    let list = Command::new(bin)
        .args(["verify-paper", "--list"])
        .env_remove("RANKCODE_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    let ids: Vec<String> = String::from_utf8_lossy(&list.stdout)
        .lines()
        .filter_map(|l| l.split_whitespace().next().map(str::to_owned))
        .collect();
    let run = Command::new(bin)
        .arg("verify-paper")
        .env_remove("RANKCODE_BUDGET")
        .output()
        .map_err(|e| e.to_string())?;
    let out = String::from_utf8_lossy(&run.stdout);
    ensure(run.status.code() == Some(0), || {
        format!(
            "exit {:?}: {}",
            run.status.code(),
            String::from_utf8_lossy(&run.stderr)
        )
    })?;
    for id in &ids {
        let rows = out
            .lines()
            .filter(|l| l.split_whitespace().nth(1) == Some(id.as_str()))
            .collect::<Vec<_>>();
        ensure(rows.len() == 1 && rows[0].starts_with("PASS"), || {
            format!("{id}: rows {rows:?}")
        })?;
    }
    ensure(!ids.is_empty(), || "no claims listed".into())?;
    Ok(format!("{} claims pass", ids.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (
            "1 diagonal-and-corner distributions and criterion",
            criterion_1,
            1,
        ),
        ("2 ternary dually AMRD code", criterion_2, 1),
        ("3 formula holds without the side condition", criterion_3, 1),
        ("4 vector code with a missing coordinate", criterion_4, 5),
        ("5 Gabidulin codes are MRD", criterion_5, 30),
        ("6 identity suite on random codes", criterion_6, 600),
        ("7 self-dual suite", criterion_7, 30),
        ("8 verify-paper", criterion_8, 120),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()))
            .and_then(|msg| {
                let took = start.elapsed();
                if took > Duration::from_secs(limit) {
                    Err(format!("took {took:.1?}, limit {limit} s"))
                } else {
                    Ok(msg)
                }
            });
        let took = start.elapsed();
        match result {
            Ok(msg) => println!("PASS  criterion {name} ({took:.2?}): {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name} ({took:.2?}): {msg}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
