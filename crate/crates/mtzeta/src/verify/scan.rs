//! Grid scans over congruence claims, persisted as JSON lines.
//!
//! A scan enumerates every applicable claim in a parameter grid exactly
//! once (symmetric permutations collapse to one canonical claim), checks
//! them in parallel, and emits records in deterministic claim-key order.
//! Claims whose preconditions fail are counted as skips, never evaluated.
//! Counterexamples do not abort the scan; they surface in the summary.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::is_prime;
use crate::sums::ExponentIndex;
use crate::verify::{
    check_base, check_conjecture, check_dbl_mhs, check_ext_yang_cai, check_four_vars,
    check_sharpness, ClaimKind, CongruenceReport, OracleKind,
};

/// Claim families a scan can cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanKind {
    Base,
    DblMhs,
    ExtYangCai,
    FourVars,
    Conjecture,
    Sharpness,
}

/// Primes as an explicit list or an inclusive range.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PrimeSpec {
    List(Vec<u64>),
    Range { min: u64, max: u64 },
}

impl PrimeSpec {
    fn resolve(&self) -> Result<Vec<u64>> {
        match self {
            PrimeSpec::List(v) => {
                for &p in v {
                    if !is_prime(p) {
                        return Err(Error::ConfigInvalid(format!("{p} is not prime")));
                    }
                }
                let mut v = v.clone();
                v.sort_unstable();
                v.dedup();
                Ok(v)
            }
            PrimeSpec::Range { min, max } => {
                if min > max {
                    return Err(Error::ConfigInvalid("empty prime range".into()));
                }
                Ok((*min..=*max).filter(|&p| is_prime(p)).collect())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RangeSpec {
    pub min: u32,
    pub max: u32,
}

fn default_r_range() -> RangeSpec {
    RangeSpec { min: 1, max: 2 }
}

fn default_depth_range() -> RangeSpec {
    RangeSpec { min: 2, max: 5 }
}

/// Scan configuration; the JSON schema of the `--config` file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanConfig {
    pub kinds: Vec<ScanKind>,
    pub primes: PrimeSpec,
    #[serde(default = "default_r_range")]
    pub r_range: RangeSpec,
    #[serde(default = "default_depth_range")]
    pub depth_range: RangeSpec,
    pub weight_max: u32,
    #[serde(default)]
    pub workers: usize,
    #[serde(default)]
    pub out_path: Option<PathBuf>,
    #[serde(default)]
    pub include_sharpness: bool,
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        if self.weight_max < 3 {
            return Err(Error::ConfigInvalid("weight_max must be >= 3".into()));
        }
        if self.r_range.min < 1 || self.r_range.min > self.r_range.max {
            return Err(Error::ConfigInvalid("r_range must satisfy 1 <= min <= max".into()));
        }
        if self.depth_range.min < 2 || self.depth_range.min > self.depth_range.max {
            return Err(Error::ConfigInvalid(
                "depth_range must satisfy 2 <= min <= max".into(),
            ));
        }
        self.primes.resolve().map(|_| ())
    }
}

/// One grid point, before preconditions are applied.
#[derive(Clone, Debug)]
enum Task {
    Base { p: u64 },
    DblMhs { p: u64, r: u32, a: u32, b: u32 },
    ExtYangCai { p: u64, r: u32, s: [u32; 3] },
    FourVars { p: u64, abc: [u32; 3], lambda: u32 },
    Conjecture { p: u64, r: u32, s: Vec<u32> },
    Sharpness { p: u64, r: u32, s: Vec<u32> },
}

impl Task {
    fn run(&self) -> Result<Vec<CongruenceReport>> {
        match self {
            Task::Base { p } => Ok(vec![check_base(*p, OracleKind::Brute)?]),
            Task::DblMhs { p, r, a, b } => Ok(vec![check_dbl_mhs(*p, *r, *a, *b)?]),
            Task::ExtYangCai { p, r, s } => Ok(vec![check_ext_yang_cai(
                *p,
                *r,
                s[0],
                s[1],
                s[2],
                OracleKind::Brute,
            )?]),
            Task::FourVars { p, abc, lambda } => Ok(vec![check_four_vars(
                *p,
                abc[0],
                abc[1],
                abc[2],
                *lambda,
                crate::reductions::FourthBlockVariant::Corrected,
                OracleKind::Brute,
            )?]),
            Task::Conjecture { p, r, s } => {
                let idx = ExponentIndex::new(s.clone())?;
                check_conjecture(*p, *r, &idx, OracleKind::Brute)
            }
            Task::Sharpness { p, r, s } => {
                let idx = ExponentIndex::new(s.clone())?;
                Ok(vec![check_sharpness(*p, *r, &idx)?])
            }
        }
    }

    /// The claim kinds this task would report, for skip attribution.
    fn claim_kinds(&self) -> Vec<ClaimKind> {
        match self {
            Task::Base { .. } => vec![ClaimKind::Base],
            Task::DblMhs { a, b, .. } => vec![if (a + b) % 2 == 1 {
                ClaimKind::DblMhsOdd
            } else {
                ClaimKind::DblMhsEven
            }],
            Task::ExtYangCai { s, .. } => vec![if s.iter().sum::<u32>() % 2 == 1 {
                ClaimKind::ExtYangCaiOdd
            } else {
                ClaimKind::ExtYangCaiEven
            }],
            Task::FourVars { .. } => vec![ClaimKind::FourVars],
            Task::Conjecture { r, s, .. } => {
                let d = s.len();
                let w: u32 = s.iter().sum();
                let mut kinds = Vec::new();
                match (d, w % 2) {
                    (4, 1) => kinds.push(ClaimKind::ConjD4Odd),
                    (4, 0) => kinds.push(ClaimKind::ConjD4Even),
                    (5, 0) => kinds.push(ClaimKind::ConjD5Even),
                    _ => {}
                }
                if *r >= 2 {
                    kinds.push(if (d as u32 + w) % 2 == 1 {
                        ClaimKind::ConjGeneralOdd
                    } else {
                        ClaimKind::ConjGeneralEven
                    });
                }
                kinds
            }
            Task::Sharpness { .. } => vec![ClaimKind::Sharpness],
        }
    }
}

/// Partitions of `w` into exactly `parts` parts, each >= 1, ascending.
fn partitions_into(w: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(rem: u32, parts: usize, min: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if rem >= min {
                let mut v = prefix.clone();
                v.push(rem);
                out.push(v);
            }
            return;
        }
        let mut k = min;
        while k * parts as u32 <= rem {
            prefix.push(k);
            rec(rem - k, parts - 1, k, prefix, out);
            prefix.pop();
            k += 1;
        }
    }
    let mut out = Vec::new();
    rec(w, parts, 1, &mut Vec::new(), &mut out);
    out
}

fn enumerate_tasks(config: &ScanConfig) -> Result<Vec<Task>> {
    let primes = config.primes.resolve()?;
    let rs: Vec<u32> = (config.r_range.min..=config.r_range.max).collect();
    let depth_has = |d: u32| d >= config.depth_range.min && d <= config.depth_range.max;
    let mut tasks = Vec::new();
    for kind in &config.kinds {
        match kind {
            ScanKind::Base => {
                for &p in &primes {
                    tasks.push(Task::Base { p });
                }
            }
            ScanKind::DblMhs => {
                if depth_has(2) {
                    for &p in &primes {
                        for &r in &rs {
                            for a in 1..config.weight_max {
                                for b in 1..=(config.weight_max - a) {
                                    tasks.push(Task::DblMhs { p, r, a, b });
                                }
                            }
                        }
                    }
                }
            }
            ScanKind::ExtYangCai => {
                if depth_has(3) {
                    for &p in &primes {
                        for &r in &rs {
                            for w in 3..=config.weight_max {
                                for s in partitions_into(w, 3) {
                                    tasks.push(Task::ExtYangCai {
                                        p,
                                        r,
                                        s: [s[0], s[1], s[2]],
                                    });
                                }
                            }
                        }
                    }
                }
            }
            ScanKind::FourVars => {
                if depth_has(4) {
                    for &p in &primes {
                        for w in 5..=config.weight_max {
                            if w % 2 == 0 {
                                continue;
                            }
                            for lambda in 1..=(w - 3) {
                                for abc in partitions_into(w - lambda, 3) {
                                    tasks.push(Task::FourVars {
                                        p,
                                        abc: [abc[0], abc[1], abc[2]],
                                        lambda,
                                    });
                                }
                            }
                        }
                    }
                }
            }
            ScanKind::Conjecture => {
                for &p in &primes {
                    for &r in &rs {
                        for d in config.depth_range.min..=config.depth_range.max {
                            for w in d..=config.weight_max {
                                for s in partitions_into(w, d as usize) {
                                    tasks.push(Task::Conjecture { p, r, s });
                                }
                            }
                        }
                    }
                }
            }
            ScanKind::Sharpness => {
                if !config.include_sharpness {
                    continue;
                }
                for &p in &primes {
                    for &r in &rs {
                        if r < 2 {
                            continue;
                        }
                        for d in [4usize, 5] {
                            if !depth_has(d as u32) {
                                continue;
                            }
                            for w in d as u32..=config.weight_max {
                                let want_odd = d == 4;
                                if (w % 2 == 1) != want_odd {
                                    continue;
                                }
                                for s in partitions_into(w, d) {
                                    tasks.push(Task::Sharpness { p, r, s });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(tasks)
}

/// One JSON line of the record file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RecordLine {
    pub key: String,
    pub kind: ClaimKind,
    pub p: u64,
    pub r: u32,
    pub s: Vec<u32>,
    pub modulus: String,
    pub lhs: String,
    pub rhs: String,
    pub verdict: bool,
    pub elapsed_ms: u64,
    pub engine_version: String,
    pub oracle: OracleKind,
}

impl From<&CongruenceReport> for RecordLine {
    fn from(rep: &CongruenceReport) -> Self {
        RecordLine {
            key: rep.claim.key(),
            kind: rep.claim.kind,
            p: rep.claim.p,
            r: rep.claim.r,
            s: rep.claim.index.exponents().to_vec(),
            modulus: format!("{}^{}", rep.claim.p, rep.claim.modulus_exponent),
            lhs: rep.lhs.value().to_string(),
            rhs: rep.rhs.value().to_string(),
            verdict: rep.verdict,
            elapsed_ms: rep.elapsed_ms,
            engine_version: rep.engine_version.clone(),
            oracle: rep.oracle,
        }
    }
}

/// Per-kind tallies.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct KindTally {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Scan outcome: reports in claim-key order plus the per-kind summary.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub reports: Vec<CongruenceReport>,
    pub tallies: BTreeMap<ClaimKind, KindTally>,
}

impl ScanResult {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.verdict)
    }

    /// Summary as CSV: one row per kind.
    pub fn summary_csv(&self) -> String {
        let mut out = String::from("kind,checked,passed,failed,skipped\n");
        for (kind, t) in &self.tallies {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                kind, t.checked, t.passed, t.failed, t.skipped
            ));
        }
        out
    }
}

/// Runs the grid described by `config`. Every applicable claim is checked
/// exactly once; records go to `config.out_path` (JSON lines, appended) in
/// deterministic claim-key order.
pub fn scan(config: &ScanConfig) -> Result<ScanResult> {
    config.validate()?;
    let tasks = enumerate_tasks(config)?;
    let outcomes: Result<Vec<(Vec<CongruenceReport>, Vec<ClaimKind>)>> = {
        let run = || {
            tasks
                .par_iter()
                .map(|task| match task.run() {
                    Ok(reports) => Ok((reports, Vec::new())),
                    Err(Error::PreconditionViolated(_)) => Ok((Vec::new(), task.claim_kinds())),
                    Err(e) => Err(e),
                })
                .collect()
        };
        if config.workers > 0 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(config.workers)
                .build()
                .map_err(|e| Error::ConfigInvalid(format!("worker pool: {e}")))?;
            pool.install(run)
        } else {
            run()
        }
    };

    let mut tallies: BTreeMap<ClaimKind, KindTally> = BTreeMap::new();
    let mut dedup: BTreeMap<(ClaimKind, u64, u32, Vec<u32>), CongruenceReport> = BTreeMap::new();
    for (reports, skipped_kinds) in outcomes? {
        for kind in skipped_kinds {
            tallies.entry(kind).or_default().skipped += 1;
        }
        for rep in reports {
            let key = (
                rep.claim.kind,
                rep.claim.p,
                rep.claim.r,
                rep.claim.index.exponents().to_vec(),
            );
            dedup.entry(key).or_insert(rep);
        }
    }
    let reports: Vec<CongruenceReport> = dedup.into_values().collect();
    for rep in &reports {
        let t = tallies.entry(rep.claim.kind).or_default();
        t.checked += 1;
        if rep.verdict {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
    }

    if let Some(path) = &config.out_path {
        persist(path, &reports)?;
    }
    Ok(ScanResult { reports, tallies })
}

fn persist(path: &PathBuf, reports: &[CongruenceReport]) -> Result<()> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::PersistenceFailure(format!("{}: {e}", path.display())))?;
    let mut buf = String::new();
    for rep in reports {
        let line = serde_json::to_string(&RecordLine::from(rep))
            .map_err(|e| Error::PersistenceFailure(e.to_string()))?;
        buf.push_str(&line);
        buf.push('\n');
    }
    file.write_all(buf.as_bytes())
        .map_err(|e| Error::PersistenceFailure(format!("{}: {e}", path.display())))
}
