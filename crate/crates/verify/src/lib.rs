//! The twelve acceptance criteria, each with a pinned runtime limit.

use std::time::{Duration, Instant};

use malcev_core::suite::{self, CriterionResult, SuiteContext, SuiteOptions};

const SECOND: Duration = Duration::from_secs(1);

pub struct Criterion {
    pub number: usize,
    /// `None` when only the result matters.
    pub limit: Option<Duration>,
    run: fn(&SuiteContext) -> CriterionResult,
}

pub struct Outcome {
    pub result: CriterionResult,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl Outcome {
    pub fn in_time(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed < l)
    }

    pub fn passed(&self) -> bool {
        self.result.passed && self.in_time()
    }

    pub fn line(&self) -> String {
        let limit = self.limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()));
        format!(
            "criterion {:>2} {}: {} ({:.2} s{limit})",
            self.result.number,
            if self.passed() { "PASS" } else { "FAIL" },
            self.result.title,
            self.elapsed.as_secs_f64()
        )
    }
}

const fn criterion(number: usize, limit: Option<Duration>, run: fn(&SuiteContext) -> CriterionResult) -> Criterion {
    Criterion { number, limit, run }
}

pub const CRITERIA: [Criterion; 12] = [
    criterion(1, Some(SECOND), suite::construction),
    criterion(2, Some(SECOND), suite::witness),
    criterion(3, Some(Duration::from_secs(60)), suite::classification),
    criterion(4, Some(Duration::from_secs(600)), suite::skew_symmetry),
    criterion(5, Some(Duration::from_secs(60)), suite::lie_kernel_suite),
    criterion(6, Some(SECOND), suite::fourth_power),
    criterion(7, Some(Duration::from_secs(120)), suite::three_generated),
    criterion(8, Some(Duration::from_secs(120)), suite::first_type_characterizations),
    criterion(9, Some(Duration::from_secs(120)), suite::sagle_identities),
    criterion(10, Some(Duration::from_secs(10)), suite::semiprime),
    criterion(11, Some(Duration::from_secs(120)), suite::random_cross_check),
    criterion(12, None, determinism),
];

/// Output and exit status of `malcev <args>`.
pub fn invoke(args: &[&str]) -> (Vec<u8>, u8) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("malcev").chain(args.iter().copied());
    let code = malcev_cli::execute(argv, &mut out, &mut err);
    (out, code)
}

/// Two runs of `verify-paper --seed 0` in each output format.
pub fn determinism(_ctx: &SuiteContext) -> CriterionResult {
    let mut passed = true;
    let mut details = Vec::new();
    for format in ["text", "machine"] {
        let args = ["--format", format, "verify-paper", "--seed", "0"];
        let (a, ca) = invoke(&args);
        let (b, cb) = invoke(&args);
        let same = a == b && ca == cb && !a.is_empty();
        passed &= same;
        details.push(format!(
            "{}{format}: {} and {} bytes, exit {ca} and {cb}",
            if same { "" } else { "unexpected: " },
            a.len(),
            b.len()
        ));
    }
    CriterionResult {
        number: 12,
        title: "verify-paper --seed 0 is byte-identical across runs",
        passed,
        details,
    }
}

/// Runs the criteria single-threaded, so limits are single-threaded times.
pub fn run_all() -> Vec<Outcome> {
    let ctx = SuiteContext::new(SuiteOptions {
        seed: 0,
        jobs: 1,
        corrupt_psi: false,
    });
    CRITERIA
        .iter()
        .map(|c| {
            let t = Instant::now();
            let result = (c.run)(&ctx);
            debug_assert_eq!(result.number, c.number);
            Outcome {
                result,
                elapsed: t.elapsed(),
                limit: c.limit,
            }
        })
        .collect()
}
