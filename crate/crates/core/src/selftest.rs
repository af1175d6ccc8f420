//! Differential self-test: random problems over prime fields, trace versus
//! direct Frobenius summation.

use std::fmt;
use std::ops::RangeInclusive;

use crate::document::ProblemDocument;
use crate::error::Result;
use crate::oracle::{frobenius_trace, GeneratorPlan, InstanceGenerator};
use crate::trace::{ell_trace, SepBranch, TraceProblem, TraceWitness};
use crate::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestOptions {
    pub chars: Vec<u64>,
    pub degrees: RangeInclusive<usize>,
    /// Instances per characteristic.
    pub count: usize,
    pub seed: u64,
}

impl Default for SelftestOptions {
    fn default() -> Self {
        SelftestOptions {
            chars: vec![2, 3, 5, 7, 101],
            degrees: 2..=12,
            count: 500,
            seed: 0,
        }
    }
}

/// How often each exit of the separable algorithm fired.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BranchCoverage {
    /// `x(P)` constant: rational point or vertical pair.
    pub trivial: usize,
    pub v_zero: usize,
    pub deg_s_zero: usize,
    pub general: usize,
}

impl BranchCoverage {
    fn record(&mut self, branch: Option<SepBranch>) {
        match branch {
            Some(SepBranch::RationalPoint | SepBranch::VerticalPair) | None => self.trivial += 1,
            Some(SepBranch::EvenFunction) => self.v_zero += 1,
            Some(SepBranch::TraceVanishes) => self.deg_s_zero += 1,
            Some(SepBranch::General) => self.general += 1,
        }
    }

    pub fn all_fired(&self) -> bool {
        self.trivial > 0 && self.v_zero > 0 && self.deg_s_zero > 0 && self.general > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub p: u64,
    /// Position in the stream for this characteristic.
    pub index: usize,
    /// Seed that regenerates the instance via
    /// [`crate::oracle::instance_from_seed`].
    pub instance_seed: u64,
    pub document: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestReport {
    pub options: SelftestOptions,
    pub per_char: Vec<(u64, usize)>,
    pub coverage: BranchCoverage,
    pub failure: Option<Counterexample>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn instances(&self) -> usize {
        self.per_char.iter().map(|(_, n)| n).sum()
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = &self.options;
        writeln!(
            f,
            "seed {} degrees {}..{}",
            o.seed,
            o.degrees.start(),
            o.degrees.end()
        )?;
        for (p, n) in &self.per_char {
            writeln!(f, "p = {p}: {n} instances")?;
        }
        let c = &self.coverage;
        writeln!(
            f,
            "branches: trivial {} | V=0 {} | degS=0 {} | general {}",
            c.trivial, c.v_zero, c.deg_s_zero, c.general
        )?;
        match &self.failure {
            None => write!(f, "PASS: {} instances, 0 mismatches", self.instances()),
            Some(cx) => {
                writeln!(
                    f,
                    "counterexample: p = {} index {} instance seed {}",
                    cx.p, cx.index, cx.instance_seed
                )?;
                writeln!(f, "expected: {}", cx.expected)?;
                writeln!(f, "got: {}", cx.got)?;
                writeln!(f, "{}", cx.document)?;
                write!(
                    f,
                    "FAIL: reproduce with selftest --chars {} --degrees {}..{} --seed {}",
                    cx.p,
                    o.degrees.start(),
                    o.degrees.end(),
                    o.seed
                )
            }
        }
    }
}

/// Runs the suite with [`ell_trace`] as the implementation under test.
pub fn run_selftest(options: &SelftestOptions) -> Result<SelftestReport> {
    run_selftest_with(options, |p| ell_trace(p, false))
}

/// Runs the suite against an arbitrary trace implementation; stops at the
/// first mismatch or error.
pub fn run_selftest_with<T>(options: &SelftestOptions, trace: T) -> Result<SelftestReport>
where
    T: Fn(&TraceProblem<PrimeField>) -> Result<TraceWitness<PrimeField>>,
{
    let mut report = SelftestReport {
        options: options.clone(),
        per_char: Vec::new(),
        coverage: BranchCoverage::default(),
        failure: None,
    };
    for &p in &options.chars {
        let plan = GeneratorPlan {
            p,
            degrees: options.degrees.clone(),
        };
        let mut gen = InstanceGenerator::new(options.seed, plan)?;
        let mut done = 0;
        for index in 0..options.count {
            let inst = gen.next_instance()?;
            let problem = &inst.problem;
            let curve = problem.curve();
            let expected = frobenius_trace(problem)?;
            let outcome = trace(problem);
            let got = match &outcome {
                Ok(w) if w.result == expected => {
                    report.coverage.record(w.branch);
                    done += 1;
                    continue;
                }
                Ok(w) => curve.format_point(&w.result),
                Err(e) => format!("error: {e}"),
            };
            report.failure = Some(Counterexample {
                p,
                index,
                instance_seed: inst.seed,
                document: ProblemDocument::from_problem(problem).to_json(),
                expected: curve.format_point(&expected),
                got,
            });
            report.per_char.push((p, done + 1));
            return Ok(report);
        }
        report.per_char.push((p, done));
    }
    Ok(report)
}
