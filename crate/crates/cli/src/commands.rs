use std::path::Path;

use clap::ValueEnum;
use rankcode::analysis::Params;
use rankcode::audit::{audit, Depth};
use rankcode::catalog;
use rankcode::codes::{
    extend, gabidulin, random_matrix_code, random_vector_code, standard_points, Code, CodeFile,
};
use rankcode::fqlinalg::Budget;
use rankcode::gf::ExtField;
use rankcode::Error;

use crate::{emit, render, AnalyzeArgs, Checks, CliError, CliResult, Construct, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    /// <E11, E22, E33, E12> in 3 x 3 binary matrices.
    DiagonalAndCorner,
    /// <E21> in 2 x 2 binary matrices.
    SingleCorner,
    /// Ternary 3-dimensional code in 3 x 3 matrices with d = 2.
    TernaryShiftedIdentities,
    /// The same basis over F_2.
    BinaryShiftedIdentities,
    /// Binary 5-dimensional AMRD code with a non-AMRD dual.
    AmrdWithSparseDual,
    /// Dual of <E11, E22> in 3 x 3 binary matrices.
    TwoUnitsDual,
    /// Self-dual code in 2 x 3 binary matrices.
    SelfDualPairs,
    /// <(1, a, a^2, 0)> over F_16.
    MissingCoordinate,
}

impl Builtin {
    pub fn code(self) -> Code {
        match self {
            Builtin::DiagonalAndCorner => Code::Matrix(catalog::diagonal_and_corner()),
            Builtin::SingleCorner => Code::Matrix(catalog::single_corner()),
            Builtin::TernaryShiftedIdentities => {
                Code::Matrix(catalog::ternary_shifted_identities())
            }
            Builtin::BinaryShiftedIdentities => Code::Matrix(catalog::binary_shifted_identities()),
            Builtin::AmrdWithSparseDual => Code::Matrix(catalog::amrd_with_sparse_dual()),
            Builtin::TwoUnitsDual => Code::Matrix(catalog::two_units_dual()),
            Builtin::SelfDualPairs => Code::Matrix(catalog::self_dual_pairs()),
            Builtin::MissingCoordinate => Code::Vector(catalog::missing_coordinate()),
        }
    }
}

pub(crate) fn load_code(path: &Path) -> CliResult<Code> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: CodeFile = serde_json::from_str(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(file.to_code()?)
}

pub(crate) fn code_json(code: &Code, seed: Option<u64>) -> String {
    let mut s = serde_json::to_string_pretty(&CodeFile::from_code(code, seed))
        .expect("code files serialize");
    s.push('\n');
    s
}

fn summary(kind: &str, code: &Code) -> String {
    let p = Params {
        q: code.q(),
        n: code.n(),
        m: code.m(),
        t: code.fq_dim(),
    };
    let shape = match code {
        Code::Vector(c) => format!("[n = {}, k = {}] over F_{}^{}", p.n, c.k(), p.q, p.m),
        Code::Matrix(_) => format!("{} x {} matrices over F_{}", p.n, p.m, p.q),
    };
    format!(
        "{kind} code: {shape}, t = {}\nSingleton bound: d ≤ {}\n",
        p.t,
        p.singleton_bound()
    )
}

/// Writes the code file to `out` and the summary to stdout, or the code
/// file to stdout and the summary to stderr.
fn write_code(kind: &str, code: &Code, seed: Option<u64>, out: Option<&Path>) -> CliResult<()> {
    let json = code_json(code, seed);
    let text = summary(kind, code);
    match out {
        Some(p) => {
            emit(Some(p), &json)?;
            emit(None, &text)?;
        }
        None => {
            emit(None, &json)?;
            eprint!("{text}");
        }
    }
    Ok(())
}

pub(crate) fn construct(c: Construct, _budget: Budget) -> CliResult<()> {
    match c {
        Construct::Gabidulin { q, m, n, k, out } => {
            let f = ExtField::new(q, m)?;
            let code = gabidulin(&f, n, k, &standard_points(&f, n.min(m)))?;
            write_code("gabidulin", &Code::Vector(code), None, out.as_deref())
        }
        Construct::Random {
            q,
            n,
            m,
            t,
            k,
            seed,
            out,
        } => {
            let code = match (t, k) {
                (Some(t), _) => {
                    if t == 0 || t >= n * m {
                        return Err(Error::InvalidParameters("1 ≤ t < nm".into()).into());
                    }
                    Code::Matrix(random_matrix_code(q, n, m, t, seed)?)
                }
                (None, Some(k)) => {
                    if k == 0 {
                        return Err(Error::InvalidParameters("k ≥ 1".into()).into());
                    }
                    let f = ExtField::new(q, m)?;
                    Code::Vector(random_vector_code(&f, n, k, seed)?)
                }
                (None, None) => {
                    return Err(CliError::Usage("one of --t or --k is required".into()))
                }
            };
            write_code("random", &code, Some(seed), out.as_deref())
        }
        Construct::Extend { file, out } => {
            let Code::Vector(c) = load_code(&file)? else {
                return Err(CliError::Usage(
                    "parity extension needs a vector code".into(),
                ));
            };
            write_code("extended", &Code::Vector(extend(&c)?), None, out.as_deref())
        }
        Construct::Builtin { name, out } => {
            let label = name.to_possible_value().expect("named variant");
            write_code(label.get_name(), &name.code(), None, out.as_deref())
        }
    }
}

pub(crate) fn analyze(a: AnalyzeArgs, budget: Budget) -> CliResult<()> {
    let code = load_code(&a.file)?;
    let depth = match a.checks {
        Checks::All => Depth::All,
        Checks::Basic => Depth::Basic,
    };
    let report = audit(&code, depth, a.weights, budget)?;
    let text = match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => render::distribution_csv(&report.report),
        Format::Text => render::audit_text(&report),
    };
    emit(a.out.as_deref(), &text)?;
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "{} check(s) failed: {}",
            failed.len(),
            failed.join(", ")
        )))
    }
}

pub(crate) fn dual(file: &Path, out: Option<&Path>) -> CliResult<()> {
    let code = load_code(file)?;
    emit(out, &code_json(&code.dual(), None))
}
