//! Constructive checks that a symmetric GF(2) matrix has its diagonal in
//! its column space, plus the orthogonality fact behind it: every nullspace
//! vector `x` satisfies `x · d = 0`, where `d` is the diagonal.
//!
//! [`brute_force_member`] is an independent membership oracle. It walks all
//! `2^n` inputs in Gray-code order and shares no code with elimination.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gf2::{BitVec, Gf2Matrix};
use crate::{Error, Result};

/// Largest column count [`brute_force_member`] will enumerate.
pub const ORACLE_MAX_COLS: usize = 20;

/// Off-diagonal × diagonal densities covered by [`sweep_density_grid`].
pub const DENSITY_GRID: [(f64, f64); 9] = [
    (0.1, 0.0),
    (0.1, 0.5),
    (0.1, 1.0),
    (0.5, 0.0),
    (0.5, 0.5),
    (0.5, 1.0),
    (0.9, 0.0),
    (0.9, 0.5),
    (0.9, 1.0),
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RngSpec {
    pub seed: u64,
    /// Probability that an off-diagonal entry (and its mirror) is 1.
    pub density: f64,
    /// Probability that a diagonal entry is 1.
    pub diag_density: f64,
}

impl RngSpec {
    pub fn new(seed: u64, density: f64, diag_density: f64) -> Result<Self> {
        let spec = Self {
            seed,
            density,
            diag_density,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, p) in [
            ("density", self.density),
            ("diag_density", self.diag_density),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::invalid(format!(
                    "{name} must lie in [0, 1], got {p}"
                )));
            }
        }
        Ok(())
    }

    /// Generator for one trial. Each `(n, trial)` pair gets its own ChaCha
    /// stream under the same seed, so trials are independent and replayable.
    pub fn trial_rng(&self, n: usize, trial: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(((n as u64) << 32) | trial as u64);
        rng
    }
}

/// Random symmetric `n × n` matrix drawn from stream 0 of `spec.seed`.
pub fn random_symmetric(n: usize, spec: &RngSpec) -> Gf2Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    random_symmetric_with(n, spec.density, spec.diag_density, &mut rng)
}

pub fn random_symmetric_with<R: Rng>(
    n: usize,
    density: f64,
    diag_density: f64,
    rng: &mut R,
) -> Gf2Matrix {
    let mut a = Gf2Matrix::zeros(n, n);
    for i in 0..n {
        if rng.random_bool(diag_density) {
            a.set(i, i, true);
        }
        for j in i + 1..n {
            if rng.random_bool(density) {
                a.set(i, j, true);
                a.set(j, i, true);
            }
        }
    }
    a
}

/// Evidence that `A·witness = diagonal(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCertificate {
    pub matrix_dim: usize,
    pub witness: BitVec,
    pub nullity: usize,
}

fn require_symmetric(a: &Gf2Matrix) -> Result<()> {
    if a.is_symmetric() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{}x{} matrix is not symmetric",
            a.n_rows(),
            a.n_cols()
        )))
    }
}

pub fn verify_diagonal_in_range(a: &Gf2Matrix) -> Result<TheoremCertificate> {
    require_symmetric(a)?;
    let d = a.diagonal()?;
    let set = a.solution_set(&d)?.ok_or_else(|| {
        Error::Internal(format!(
            "diagonal {d} of a symmetric matrix not found in its range"
        ))
    })?;
    if a.mat_vec(&set.particular)? != d {
        return Err(Error::Internal(format!(
            "witness {} does not reproduce diagonal {d}",
            set.particular
        )));
    }
    Ok(TheoremCertificate {
        matrix_dim: a.n_rows(),
        nullity: set.nullity(),
        witness: set.particular,
    })
}

/// True iff every nullspace basis vector is orthogonal to the diagonal.
pub fn verify_nullspace_orthogonality(a: &Gf2Matrix) -> Result<bool> {
    require_symmetric(a)?;
    let d = a.diagonal()?;
    for v in a.nullspace_basis() {
        if v.dot(&d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a nonzero `x` with `A·x = 0`, checks that the diagonal entries over
/// the support of `x` XOR to zero. This is the order-free form of "the last
/// diagonal entry of the dependency equals the sum of the earlier ones".
pub fn verify_column_sum_identity(a: &Gf2Matrix, x: &BitVec) -> Result<bool> {
    require_symmetric(a)?;
    if x.len() != a.n_cols() {
        return Err(Error::dim("dependency vector", a.n_cols(), x.len()));
    }
    if x.is_zero() {
        return Err(Error::Precondition(
            "dependency vector must be nonzero".into(),
        ));
    }
    if !a.mat_vec(x)?.is_zero() {
        return Err(Error::Precondition(format!("{x} is not in the nullspace")));
    }
    let parity = x.iter_ones().fold(false, |acc, j| acc ^ a.get(j, j));
    Ok(!parity)
}

/// Exhaustive membership test: is there any `x` with `A·x = b`?
///
/// Enumerates all `2^n_cols` inputs in Gray-code order, XORing a single
/// column per step. Refuses more than [`ORACLE_MAX_COLS`] columns.
pub fn brute_force_member(a: &Gf2Matrix, b: &BitVec) -> Result<bool> {
    if a.n_cols() > ORACLE_MAX_COLS {
        return Err(Error::SizeLimit {
            limit: ORACLE_MAX_COLS,
            found: a.n_cols(),
        });
    }
    if b.len() != a.n_rows() {
        return Err(Error::dim("right-hand side", a.n_rows(), b.len()));
    }
    let columns: Vec<BitVec> = (0..a.n_cols())
        .map(|j| {
            let mut c = BitVec::zeros(a.n_rows());
            for i in 0..a.n_rows() {
                if a.get(i, j) {
                    c.set(i, true);
                }
            }
            c
        })
        .collect();
    let mut image = BitVec::zeros(a.n_rows());
    if image == *b {
        return Ok(true);
    }
    for step in 1u64..(1u64 << a.n_cols()) {
        image ^= &columns[step.trailing_zeros() as usize];
        if image == *b {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub n: usize,
    pub seed: u64,
    pub trial: usize,
    pub density: f64,
    pub diag_density: f64,
    pub nullity: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepReport {
    pub records: Vec<TrialRecord>,
    pub successes: usize,
    pub failures: usize,
    /// nullity → number of instances
    pub nullity_histogram: BTreeMap<usize, usize>,
    pub oracle_checks: usize,
    pub oracle_disagreements: usize,
}

impl SweepReport {
    fn push(&mut self, rec: TrialRecord) {
        if rec.ok {
            self.successes += 1;
        } else {
            self.failures += 1;
        }
        *self.nullity_histogram.entry(rec.nullity).or_default() += 1;
        self.records.push(rec);
    }

    fn merge(&mut self, other: SweepReport) {
        for rec in other.records {
            self.push(rec);
        }
        self.oracle_checks += other.oracle_checks;
        self.oracle_disagreements += other.oracle_disagreements;
    }

    /// `(n, trials, failures, mean nullity)` per matrix size.
    pub fn per_n(&self) -> Vec<(usize, usize, usize, f64)> {
        let mut acc: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
        for r in &self.records {
            let e = acc.entry(r.n).or_default();
            e.0 += 1;
            e.1 += usize::from(!r.ok);
            e.2 += r.nullity;
        }
        acc.into_iter()
            .map(|(n, (t, f, s))| (n, t, f, s as f64 / t as f64))
            .collect()
    }

    pub fn summary_table(&self) -> String {
        let mut out = String::from("    n  trials  failures  mean_nullity\n");
        for (n, t, f, mean) in self.per_n() {
            let _ = writeln!(out, "{n:>5}  {t:>6}  {f:>8}  {mean:>12.3}");
        }
        let _ = writeln!(
            out,
            "total: {} successes, {} failures",
            self.successes, self.failures
        );
        if self.oracle_checks > 0 {
            if self.oracle_disagreements == 0 {
                let _ = writeln!(out, "oracle: agree ({} checks)", self.oracle_checks);
            } else {
                let _ = writeln!(
                    out,
                    "oracle: DISAGREE on {} of {} checks",
                    self.oracle_disagreements, self.oracle_checks
                );
            }
        }
        out
    }

    /// One `key=value` line per trial.
    pub fn record_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = writeln!(
                out,
                "n={} seed={} trial={} density={} diag_density={} nullity={} ok={}",
                r.n, r.seed, r.trial, r.density, r.diag_density, r.nullity, r.ok
            );
        }
        out
    }
}

fn check_instance(a: &Gf2Matrix) -> Result<(usize, bool)> {
    let cert = verify_diagonal_in_range(a)?;
    let mut ok = verify_nullspace_orthogonality(a)?;
    for v in a.nullspace_basis() {
        ok &= verify_column_sum_identity(a, &v)?;
    }
    Ok((cert.nullity, ok))
}

/// Runs `trials_per_n` random symmetric matrices for each size `1..=n_max`.
///
/// With `oracle_max = Some(k)`, instances of size at most `k` also compare
/// solve against [`brute_force_member`] on the diagonal and on one random
/// right-hand side.
pub fn sweep(
    n_max: usize,
    trials_per_n: usize,
    spec: &RngSpec,
    oracle_max: Option<usize>,
) -> Result<SweepReport> {
    if n_max == 0 || trials_per_n == 0 {
        return Err(Error::invalid("sweep needs n_max >= 1 and trials >= 1"));
    }
    spec.validate()?;
    let oracle_max = oracle_max.map(|k| k.min(ORACLE_MAX_COLS));
    let mut report = SweepReport::default();
    for n in 1..=n_max {
        for trial in 0..trials_per_n {
            let mut rng = spec.trial_rng(n, trial);
            let a = random_symmetric_with(n, spec.density, spec.diag_density, &mut rng);
            let (nullity, ok) = match check_instance(&a) {
                Ok(r) => r,
                Err(Error::Internal(_)) => (a.n_cols() - a.rank(), false),
                Err(e) => return Err(e),
            };
            report.push(TrialRecord {
                n,
                seed: spec.seed,
                trial,
                density: spec.density,
                diag_density: spec.diag_density,
                nullity,
                ok,
            });
            if oracle_max.is_some_and(|k| n <= k) {
                let d = a.diagonal()?;
                let b = BitVec::from_words(n, (0..n.div_ceil(64)).map(|_| rng.random()).collect());
                for rhs in [d, b] {
                    report.oracle_checks += 1;
                    if a.solve(&rhs)?.is_some() != brute_force_member(&a, &rhs)? {
                        report.oracle_disagreements += 1;
                    }
                }
            }
        }
    }
    Ok(report)
}

/// [`sweep`] over every cell of [`DENSITY_GRID`], merged into one report.
pub fn sweep_density_grid(
    n_max: usize,
    trials_per_n: usize,
    seed: u64,
    oracle_max: Option<usize>,
) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    for (cell, &(density, diag)) in DENSITY_GRID.iter().enumerate() {
        let spec = RngSpec::new(seed.wrapping_add(cell as u64), density, diag)?;
        report.merge(sweep(n_max, trials_per_n, &spec, oracle_max)?);
    }
    Ok(report)
}
