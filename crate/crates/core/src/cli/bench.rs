//! Timing harness comparing the recursive and the Rota–Stein products.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bform::BilinearForm;
use crate::cli::generators::rd_clibasmon;
use crate::error::{AlgebraError, Result};
use crate::multivector::{check_dim, Blade};
use crate::product::{cmul_blades, ProductAlgorithm};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Scenario {
    SparseNumeric,
    DenseNumeric,
    Symbolic,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::SparseNumeric => "sparse_numeric",
            Scenario::DenseNumeric => "dense_numeric",
            Scenario::Symbolic => "symbolic",
        }
    }

    fn tag(self) -> u64 {
        self as u64 + 1
    }
}

/// Integer form with at most a fifth of its entries nonzero and
/// `|b_ii| > Σ_j |b_ij|` on every row that has an off-diagonal entry.
/// Below dimension 5 the budget cannot cover the whole diagonal, so some
/// diagonal entries stay zero (the form is then only weakly dominant).
pub fn sparse_form<R: Rng>(dim: usize, rng: &mut R) -> Result<BilinearForm> {
    let budget = dim * dim / 5;
    let mut m = vec![vec![0i64; dim]; dim];
    let mut diag: Vec<usize> = (0..dim).collect();
    for i in (1..dim).rev() {
        diag.swap(i, rng.gen_range(0..=i));
    }
    diag.truncate(budget.min(dim));
    let mut off = budget.saturating_sub(dim);
    while off > 0 {
        let (i, j) = (rng.gen_range(0..dim), rng.gen_range(0..dim));
        if i != j && m[i][j] == 0 && diag.contains(&i) {
            m[i][j] = nonzero(rng, 5);
            off -= 1;
        }
    }
    for &i in &diag {
        let row: i64 = m[i].iter().map(|x| x.abs()).sum();
        m[i][i] = row + rng.gen_range(1..=3);
    }
    int_form(&m)
}

pub fn dense_form<R: Rng>(dim: usize, rng: &mut R) -> Result<BilinearForm> {
    let m: Vec<Vec<i64>> = (0..dim).map(|_| (0..dim).map(|_| nonzero(rng, 5)).collect()).collect();
    int_form(&m)
}

fn nonzero<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        v
    } else {
        -v
    }
}

fn int_form(m: &[Vec<i64>]) -> Result<BilinearForm> {
    let rows = m.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
    BilinearForm::explicit(m.len(), rows)
}

pub fn scenario_form<R: Rng>(scenario: Scenario, dim: usize, rng: &mut R) -> Result<BilinearForm> {
    match scenario {
        Scenario::SparseNumeric => sparse_form(dim, rng),
        Scenario::DenseNumeric => dense_form(dim, rng),
        Scenario::Symbolic => BilinearForm::named("K", dim),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub scenario: &'static str,
    pub dim: usize,
    pub algorithm: &'static str,
    pub trials: usize,
    pub median_ns: u128,
    pub mean_ns: u128,
}

/// Operands and form of a product on which the two algorithms disagree.
#[derive(Clone, Debug)]
pub struct Mismatch {
    pub scenario: Scenario,
    pub dim: usize,
    pub seed: u64,
    pub trial: usize,
    pub a: Blade,
    pub b: Blade,
    pub form: BilinearForm,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "cross-check failed: scenario {} dim {} seed {} trial {}: {} * {} with form {:?}",
            self.scenario.name(),
            self.dim,
            self.seed,
            self.trial,
            self.a.name(),
            self.b.name(),
            self.form.rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>()
        )
    }
}

#[derive(Debug)]
pub enum BenchError {
    Mismatch(Box<Mismatch>),
    Algebra(AlgebraError),
}

impl From<AlgebraError> for BenchError {
    fn from(e: AlgebraError) -> Self {
        BenchError::Algebra(e)
    }
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub cross_checks: usize,
}

/// Per-(scenario, dim) rng seed derived from the master seed.
fn derive_seed(seed: u64, scenario: Scenario, dim: usize) -> u64 {
    seed ^ (scenario.tag() << 32) ^ (dim as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn median(xs: &mut [u128]) -> u128 {
    xs.sort_unstable();
    let n = xs.len();
    if n == 0 {
        0
    } else if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2
    }
}

/// Times both algorithms on `trials` random blade pairs for each dimension.
/// The order of the two timed calls alternates between trials.
pub fn run_bench(scenarios: &[Scenario], dims: &[usize], trials: usize, seed: u64) -> Result<BenchReport, BenchError> {
    const ALGOS: [ProductAlgorithm; 2] = [ProductAlgorithm::ChevalleyRecursive, ProductAlgorithm::RotaStein];
    let mut report = BenchReport::default();
    for &scenario in scenarios {
        for &dim in dims {
            check_dim(dim)?;
            let case_seed = derive_seed(seed, scenario, dim);
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
            let form = scenario_form(scenario, dim, &mut rng)?;
            let mut times: [Vec<u128>; 2] = [Vec::with_capacity(trials), Vec::with_capacity(trials)];
            for trial in 0..trials {
                let (a, b) = (rd_clibasmon(dim, &mut rng), rd_clibasmon(dim, &mut rng));
                let mut out = [None, None];
                let order = if trial % 2 == 0 { [0, 1] } else { [1, 0] };
                for k in order {
                    let start = Instant::now();
                    let r = cmul_blades(a, b, &form, ALGOS[k])?;
                    times[k].push(start.elapsed().as_nanos());
                    out[k] = Some(r);
                }
                if out[0] != out[1] {
                    return Err(BenchError::Mismatch(Box::new(Mismatch {
                        scenario,
                        dim,
                        seed: case_seed,
                        trial,
                        a,
                        b,
                        form,
                    })));
                }
                report.cross_checks += 1;
            }
            for (k, algo) in ALGOS.iter().enumerate() {
                let mean = times[k].iter().sum::<u128>() / trials.max(1) as u128;
                report.rows.push(BenchRow {
                    scenario: scenario.name(),
                    dim,
                    algorithm: algo.short_name(),
                    trials,
                    median_ns: median(&mut times[k]),
                    mean_ns: mean,
                });
            }
        }
    }
    Ok(report)
}

impl BenchReport {
    /// Median for one cell of the report.
    pub fn median(&self, scenario: Scenario, dim: usize, algo: ProductAlgorithm) -> Option<u128> {
        self.rows
            .iter()
            .find(|r| r.scenario == scenario.name() && r.dim == dim && r.algorithm == algo.short_name())
            .map(|r| r.median_ns)
    }

    pub fn to_csv(&self) -> std::result::Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }

    /// One line per (scenario, dim) naming the faster algorithm by median.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let mut cells: Vec<(&str, usize)> = self.rows.iter().map(|r| (r.scenario, r.dim)).collect();
        cells.dedup();
        for (scenario, dim) in cells {
            let find = |algo: &str| {
                self.rows
                    .iter()
                    .find(|r| r.scenario == scenario && r.dim == dim && r.algorithm == algo)
                    .map_or(0, |r| r.median_ns)
            };
            let (num, rs) = (find("num"), find("rs"));
            let winner = match num.cmp(&rs) {
                std::cmp::Ordering::Less => "num",
                std::cmp::Ordering::Greater => "rs",
                std::cmp::Ordering::Equal => "tie",
            };
            let _ = writeln!(
                out,
                "{scenario:<15} dim {dim}: num median {num} ns, rs median {rs} ns, winner {winner}"
            );
        }
        let _ = write!(out, "cross-checks passed: {}", self.cross_checks);
        out
    }
}
