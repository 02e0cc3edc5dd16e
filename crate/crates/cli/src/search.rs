//! Seeded or exhaustive search for dually AMRD matrix codes.

use std::path::PathBuf;

use clap::Args;
use rayon::prelude::*;
use serde::Serialize;

use rankcode::analysis::{classify, Spectra};
use rankcode::codes::{random_matrix_code, Code, CodeFile, MatrixCode};
use rankcode::fqlinalg::{enumerate_subspaces, Budget};
use rankcode::{Error, Result};

use crate::{emit, CliError, CliResult};

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub t: usize,
    /// Visit every t-dimensional subspace instead of random codes.
    #[arg(long, conflicts_with = "seeds")]
    pub exhaustive: bool,
    /// Number of random codes to draw.
    #[arg(long, default_value_t = 100)]
    pub seeds: u64,
    /// First seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write `catalog.json` and one code file per witness here.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub q: u32,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub mode: &'static str,
    pub candidates: u64,
    pub found: usize,
    pub witnesses: Vec<CodeFile>,
}

fn dually_amrd(code: &MatrixCode, budget: Budget) -> Result<bool> {
    Ok(classify(&Spectra::of_matrix(code, budget)?)?.dually_amrd)
}

fn keep(
    code: MatrixCode,
    seed: Option<u64>,
    budget: Budget,
) -> Result<Option<(Option<u64>, MatrixCode)>> {
    Ok(dually_amrd(&code, budget)?.then_some((seed, code)))
}

/// Distinct dually AMRD codes in candidate order.
pub fn search(args: &SearchArgs, budget: Budget) -> Result<Catalog> {
    let (q, n, m, t) = (args.q, args.n, args.m, args.t);
    if n == 0 || n > m {
        return Err(Error::InvalidParameters(format!(
            "1 ≤ n ≤ m (n = {n}, m = {m})"
        )));
    }
    if t == 0 || t >= n * m {
        return Err(Error::InvalidParameters("1 ≤ t < nm".into()));
    }
    let (mode, candidates, hits) = if args.exhaustive {
        let spaces: Vec<_> = enumerate_subspaces(q, n * m, t, budget)?.collect();
        let hits = spaces
            .par_iter()
            .map(|s| {
                keep(
                    MatrixCode::from_flat_rows(q, n, m, &s.basis().to_rows())?,
                    None,
                    budget,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        ("exhaustive", spaces.len() as u64, hits)
    } else {
        let end = args.seed.saturating_add(args.seeds);
        let hits = (args.seed..end)
            .into_par_iter()
            .map(|s| keep(random_matrix_code(q, n, m, t, s)?, Some(s), budget))
            .collect::<Result<Vec<_>>>()?;
        ("random", end - args.seed, hits)
    };
    let mut seen = std::collections::HashSet::new();
    let witnesses: Vec<CodeFile> = hits
        .into_iter()
        .flatten()
        .filter(|(_, c)| seen.insert(c.flat_basis().clone()))
        .map(|(seed, c)| CodeFile::from_code(&Code::Matrix(c), seed))
        .collect();
    Ok(Catalog {
        q,
        n,
        m,
        t,
        mode,
        candidates,
        found: witnesses.len(),
        witnesses,
    })
}

pub(crate) fn run(args: SearchArgs, budget: Budget) -> CliResult<()> {
    let catalog = search(&args, budget)?;
    let mut json = serde_json::to_string_pretty(&catalog).expect("catalog serializes");
    json.push('\n');
    match &args.out_dir {
        Some(dir) => {
            let io = |source| CliError::Io {
                path: dir.clone(),
                source,
            };
            std::fs::create_dir_all(dir).map_err(io)?;
            emit(Some(&dir.join("catalog.json")), &json)?;
            for (i, w) in catalog.witnesses.iter().enumerate() {
                let mut s = serde_json::to_string_pretty(w).expect("code files serialize");
                s.push('\n');
                emit(Some(&dir.join(format!("witness-{i:04}.json"))), &s)?;
            }
        }
        None => emit(None, &json)?,
    }
    eprintln!(
        "{} distinct dually AMRD code(s) among {} {} candidate(s)",
        catalog.found, catalog.candidates, catalog.mode
    );
    Ok(())
}
