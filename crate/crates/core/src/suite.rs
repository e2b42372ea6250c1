//! The verification suite for the 23-dimensional second-type algebra and
//! the identity hierarchy, rendered as a deterministic report.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::classify::semiprime_witness_with;
use crate::constructor::{atilde, atilde_corrupted, atilde_unpatched, free_anticommutative, multilinear_quotient, zoo, Atilde};
use crate::identity::{
    builtin_catalog, builtin_maps, check_identity_with, check_skew_symmetric_with, lookup, random_element,
    random_substitution_check, CheckOptions, CheckReport,
};
use crate::lab::{
    is_nilpotent, jacobian_span, lie_kernel, power_chain, product_subspace, quotient_algebra,
    restrict, subalgebra_generate,
};
use crate::sparse::SparseVec;
use crate::subspace::Subspace;

/// Identities that hold in every Malcev algebra.
pub const SAGLE_IDENTITIES: &[&str] = &[
    "malcev_linearized",
    "malcev_u_expansion",
    "malcev_wx_expansion",
    "malcev_product_jacobian",
];

pub const RANDOM_TRIPLES: usize = 50;
pub const RANDOM_SUBSTITUTIONS: usize = 100;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub jobs: usize,
    pub corrupt_psi: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub algebra: String,
    pub dim: usize,
    pub criteria: Vec<CriterionResult>,
    /// Findings reported alongside the criteria, not counted.
    pub notes: Vec<CriterionResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Machine => self.render_machine(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "verification suite, seed {}", self.seed).unwrap();
        writeln!(out, "algebra {} (dim {})", self.algebra, self.dim).unwrap();
        for c in &self.criteria {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "[{status}] {:>2} {}", c.number, c.title).unwrap();
            for d in &c.details {
                writeln!(out, "        {d}").unwrap();
            }
        }
        for n in &self.notes {
            writeln!(out, "[NOTE] {}", n.title).unwrap();
            for d in &n.details {
                writeln!(out, "        {d}").unwrap();
            }
        }
        let passed = self.criteria.iter().filter(|c| c.passed).count();
        writeln!(out, "{passed} of {} criteria passed", self.criteria.len()).unwrap();
        out
    }

    fn render_machine(&self) -> String {
        let mut out = String::new();
        writeln!(out, "seed:{}", self.seed).unwrap();
        writeln!(out, "algebra:{}", self.algebra).unwrap();
        writeln!(out, "dim:{}", self.dim).unwrap();
        for c in &self.criteria {
            let k = c.number;
            writeln!(out, "criterion.{k}.title:{}", c.title).unwrap();
            writeln!(out, "criterion.{k}.status:{}", if c.passed { "pass" } else { "fail" }).unwrap();
            for (i, d) in c.details.iter().enumerate() {
                writeln!(out, "criterion.{k}.detail.{i}:{d}").unwrap();
            }
        }
        for (k, n) in self.notes.iter().enumerate() {
            writeln!(out, "note.{k}.title:{}", n.title).unwrap();
            for (i, d) in n.details.iter().enumerate() {
                writeln!(out, "note.{k}.detail.{i}:{d}").unwrap();
            }
        }
        let passed = self.criteria.iter().filter(|c| c.passed).count();
        writeln!(out, "passed:{passed}").unwrap();
        writeln!(out, "failed:{}", self.criteria.len() - passed).unwrap();
        writeln!(out, "status:{}", if self.passed() { "pass" } else { "fail" }).unwrap();
        out
    }
}

/// Shared inputs for the criteria.
pub struct SuiteContext {
    pub options: SuiteOptions,
    pub atilde: Atilde,
    pub zoo: Vec<zoo::ZooEntry>,
}

impl SuiteContext {
    pub fn new(options: SuiteOptions) -> Self {
        SuiteContext {
            options,
            atilde: if options.corrupt_psi { atilde_corrupted() } else { atilde() },
            zoo: zoo::zoo(),
        }
    }

    fn check_opts(&self) -> CheckOptions {
        CheckOptions::with_jobs(self.options.jobs)
    }

    fn alg(&self) -> &Algebra {
        &self.atilde.algebra
    }

    fn check(&self, alg: &Algebra, name: &str) -> CheckReport {
        check_identity_with(alg, &lookup(name).expect("catalog identity"), &self.check_opts())
    }
}

struct Acc {
    passed: bool,
    details: Vec<String>,
}

impl Acc {
    fn new() -> Self {
        Acc {
            passed: true,
            details: Vec::new(),
        }
    }

    fn expect(&mut self, ok: bool, detail: String) {
        self.passed &= ok;
        self.details.push(if ok { detail } else { format!("unexpected: {detail}") });
    }

    fn finish(self, number: usize, title: &'static str) -> CriterionResult {
        CriterionResult {
            number,
            title,
            passed: self.passed,
            details: self.details,
        }
    }
}

fn describe(alg: &Algebra, r: &CheckReport) -> String {
    match &r.counterexample {
        None => format!("{} holds ({} tuples)", r.name, r.tuples_checked),
        Some(c) => format!("{} fails at {}", r.name, c.describe(alg)),
    }
}

pub fn construction(_ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let free = free_anticommutative(4, 4).expect("small");
    let q = multilinear_quotient(&free);
    let layers = q.layer_sizes();
    acc.expect(
        free.algebra.dim() == 34,
        format!("free algebra on 4 generators with degree < 4: dim {}", free.algebra.dim()),
    );
    acc.expect(q.algebra.dim() == 22, format!("multilinear quotient dim {}", q.algebra.dim()));
    acc.expect(layers == [4, 6, 12], format!("layer sizes {layers:?}"));
    let ext = atilde();
    acc.expect(ext.algebra.dim() == 23, format!("central extension dim {}", ext.algebra.dim()));
    acc.finish(1, "construction of the 22- and 23-dimensional algebras")
}

pub fn witness(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let a = ctx.alg();
    let x = |i: usize| SparseVec::unit(i);
    let j = a.jacobian_sparse(&x(0), &x(1), &x(2));
    let p = a.mul_sparse(&j, &x(3));
    let expected = SparseVec::single(ctx.atilde.v(), (-3).into());
    acc.expect(!j.is_zero(), format!("J(x1,x2,x3) = {}", a.format_sparse(&j)));
    acc.expect(p == expected, format!("J(x1,x2,x3)*x4 = {}", a.format_sparse(&p)));
    acc.finish(2, "J(x1,x2,x3)*x4 = -3v")
}

pub fn classification(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let a = ctx.alg();
    for (name, should_hold) in [
        ("malcev", true),
        ("second_type_left", true),
        ("second_type_right", true),
        ("jacobian_product_zero", false),
    ] {
        let r = ctx.check(a, name);
        acc.expect(r.holds() == should_hold, describe(a, &r));
    }
    let r = ctx.check(a, "jacobian_annihilator");
    match &r.counterexample {
        None => acc.expect(false, describe(a, &r)),
        Some(c) => {
            acc.expect(true, describe(a, &r));
            // Direct evaluation, independent of the compiled evaluator.
            let direct = |t: &[usize]| {
                let e: Vec<SparseVec> = t.iter().map(|&i| SparseVec::unit(i)).collect();
                a.mul_sparse(&a.jacobian_sparse(&e[0], &e[1], &e[2]), &e[3])
            };
            let again = direct(&c.tuple);
            acc.expect(
                again == c.residual && !again.is_zero(),
                format!("direct re-evaluation gives {}", a.format_sparse(&again)),
            );
            let d = a.dim();
            let earlier = (0..r.tuples_checked - 1).all(|rank| {
                let mut t = vec![0; 4];
                let mut k = rank as usize;
                for slot in t.iter_mut().rev() {
                    *slot = k % d;
                    k /= d;
                }
                direct(&t).is_zero()
            });
            acc.expect(earlier, format!("all {} earlier tuples vanish", r.tuples_checked - 1));
        }
    }
    acc.finish(3, "second type, not first type")
}

pub fn skew_symmetry(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let a = ctx.alg();
    for m in builtin_maps() {
        let r = check_skew_symmetric_with(a, &m, &ctx.check_opts());
        let text = match &r.counterexample {
            None => format!("{} is skew-symmetric ({} tuples)", m.name(), r.tuples_checked),
            Some(c) => format!("{} is not skew at {}", m.name(), c.describe(a)),
        };
        acc.expect(r.holds(), text);
    }
    acc.finish(4, "skew-symmetry of xi, zeta and varsigma")
}

pub fn lie_kernel_suite(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let a = ctx.alg();
    let d = a.dim();
    let powers = power_chain(a, 5).expect("k >= 1");
    let p = |k: usize| &powers[k - 1];
    let n = lie_kernel(a);
    acc.expect(p(3).is_subspace_of(&n), format!("A^3 (dim {}) lies in N(A) (dim {})", p(3).dim(), n.dim()));
    match quotient_algebra(a, &n) {
        Ok(q) => {
            let jac = ctx.check(&q.algebra, "jacobi");
            acc.expect(jac.holds(), format!("A/N(A) (dim {}): {}", q.algebra.dim(), describe(&q.algebra, &jac)));
            let nil = is_nilpotent(&q.algebra);
            acc.expect(
                nil.nilpotent,
                match nil.class {
                    Some(c) => format!("A/N(A) nilpotent of class {c}"),
                    None => "A/N(A) is not nilpotent".into(),
                },
            );
        }
        Err(e) => acc.expect(false, format!("N(A) is not an ideal: {e}")),
    }
    match restrict(a, p(2)) {
        Ok(sq) => {
            let jac = ctx.check(&sq, "jacobi");
            acc.expect(jac.holds(), format!("A^2 (dim {}): {}", sq.dim(), describe(&sq, &jac)));
        }
        Err(e) => acc.expect(false, format!("A^2 is not a subalgebra: {e}")),
    }
    let wj = ctx.check(a, "second_type_wj");
    acc.expect(wj.holds(), describe(a, &wj));
    let mut bad = Vec::new();
    let mut count = 0;
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 1..=4 {
                let js = jacobian_span(a, p(i), p(j), p(k)).expect("ambient");
                if i + j + k >= 5 {
                    count += 1;
                    if !js.is_zero() {
                        bad.push(format!("J(A^{i},A^{j},A^{k})"));
                    }
                }
                for r in 1..=4 {
                    if i + j + k + r >= 5 {
                        count += 1;
                        if !product_subspace(a, &js, p(r)).expect("ambient").is_zero() {
                            bad.push(format!("J(A^{i},A^{j},A^{k})A^{r}"));
                        }
                    }
                }
            }
        }
    }
    acc.expect(
        bad.is_empty(),
        if bad.is_empty() {
            format!("all {count} Jacobian vanishing conditions hold")
        } else {
            format!("nonzero: {}", bad.join(", "))
        },
    );
    let full = Subspace::full(d);
    let jall = jacobian_span(a, &full, &full, &full).expect("ambient");
    let ja = product_subspace(a, &jall, &full).expect("ambient");
    let jaa = product_subspace(a, &ja, &full).expect("ambient");
    acc.expect(jaa.is_zero(), format!("(J(A,A,A)A)A has dim {}", jaa.dim()));
    let sq = product_subspace(a, &jall, &jall).expect("ambient");
    acc.expect(sq.is_zero(), format!("J(A,A,A) (dim {}) has square of dim {}", jall.dim(), sq.dim()));
    acc.finish(5, "Lie kernel, powers and Jacobian spans")
}

pub fn fourth_power(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let a = ctx.alg();
    let powers = power_chain(a, 4).expect("k >= 1");
    let n = lie_kernel(a);
    acc.expect(
        powers[3].is_subspace_of(&n),
        format!("A^4 (dim {}) lies in N(A) (dim {})", powers[3].dim(), n.dim()),
    );
    acc.finish(6, "A^4 lies in the Lie kernel")
}

pub fn three_generated(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let a = ctx.alg();
    let mut failures = Vec::new();
    let mut dims = Vec::new();
    let mut run = |label: String, gens: Vec<crate::Element>| {
        let sub = subalgebra_generate(a, &gens).expect("ambient");
        let r = ctx.check(&sub.algebra, "jacobian_product_zero");
        dims.push(sub.subspace.dim());
        if !r.holds() {
            failures.push(format!("{label}: {}", describe(&sub.algebra, &r)));
        }
    };
    for skip in (0..4).rev() {
        let gens: Vec<usize> = (0..4).filter(|&g| g != skip).collect();
        let label = gens.iter().map(|&g| a.label(g)).collect::<Vec<_>>().join(",");
        run(label, gens.iter().map(|&g| a.basis_element(g)).collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.options.seed);
    for t in 0..RANDOM_TRIPLES {
        let gens = (0..3).map(|_| random_element(a.dim(), &mut rng)).collect();
        run(format!("random triple {t}"), gens);
    }
    let (lo, hi) = (dims.iter().min().copied().unwrap_or(0), dims.iter().max().copied().unwrap_or(0));
    acc.expect(
        failures.is_empty(),
        format!(
            "{} subalgebras (dims {lo} to {hi}) satisfy J(x,y,uv) = 0",
            dims.len() - failures.len()
        ),
    );
    let shown = 5;
    let hidden = failures.len().saturating_sub(shown);
    for f in failures.into_iter().take(shown) {
        acc.expect(false, f);
    }
    if hidden > 0 {
        acc.expect(false, format!("{hidden} more failing subalgebras"));
    }
    acc.finish(7, "3-generated subalgebras are of the first type")
}

pub fn first_type_characterizations(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    for entry in &ctx.zoo {
        let a = &entry.algebra;
        let h = |name: &str| ctx.check(a, name).holds();
        let malcev = h("malcev");
        let defining = h("first_type_cyclic") && h("first_type_derivation");
        let via_product = malcev && h("jacobian_product_zero");
        let via_annihilator = malcev && h("jacobian_annihilator");
        let second = malcev && h("second_type_left") && h("second_type_right");
        let agree = defining == via_product && via_product == via_annihilator;
        let implication = !defining || second;
        acc.expect(
            agree && implication,
            format!(
                "{}: defining {defining}, malcev+product {via_product}, malcev+annihilator {via_annihilator}, second type {second}",
                entry.name
            ),
        );
    }
    acc.finish(8, "characterizations of the first type agree on the zoo")
}

pub fn sagle_identities(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    for entry in &ctx.zoo {
        let a = &entry.algebra;
        if !ctx.check(a, "malcev").holds() {
            continue;
        }
        let failed: Vec<String> = SAGLE_IDENTITIES
            .iter()
            .map(|n| ctx.check(a, n))
            .filter(|r| !r.holds())
            .map(|r| describe(a, &r))
            .collect();
        acc.expect(
            failed.is_empty(),
            if failed.is_empty() {
                format!("{}: all {} hold", entry.name, SAGLE_IDENTITIES.len())
            } else {
                format!("{}: {}", entry.name, failed.join("; "))
            },
        );
    }
    let f = free_anticommutative(3, 3).expect("small");
    for name in SAGLE_IDENTITIES {
        let r = ctx.check(&f.algebra, name);
        let text = format!("free(3,3): {}", describe(&f.algebra, &r));
        acc.expect(!r.holds(), text);
    }
    acc.finish(9, "Malcev consequences hold on Malcev algebras, fail on free(3,3)")
}

pub fn semiprime(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let a = ctx.alg();
    match semiprime_witness_with(a, &ctx.check_opts()) {
        Ok(Some(w)) => acc.expect(
            w.square_is_zero && !w.ideal.is_zero(),
            format!("J-ideal of dim {}, square zero: {}", w.ideal.dim(), w.square_is_zero),
        ),
        Ok(None) => acc.expect(false, "no witness: J vanishes".into()),
        Err(e) => acc.expect(false, e.to_string()),
    }
    let mut lie = Vec::new();
    for entry in &ctx.zoo {
        if !ctx.check(&entry.algebra, "jacobi").holds() {
            continue;
        }
        match semiprime_witness_with(&entry.algebra, &ctx.check_opts()) {
            Ok(None) => lie.push(entry.name.as_str()),
            other => acc.expect(false, format!("{}: {other:?}", entry.name)),
        }
    }
    acc.expect(true, format!("no witness on Lie members: {}", lie.join(", ")));
    acc.finish(10, "square-zero ideal witnessing non-semiprimeness")
}

pub fn random_cross_check(ctx: &SuiteContext) -> CriterionResult {
    let mut acc = Acc::new();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.options.seed.wrapping_add(1));
    let ids: Vec<_> = builtin_catalog().into_iter().filter(|i| !i.is_multilinear()).collect();
    let mut agreements = 0;
    for entry in &ctx.zoo {
        for id in &ids {
            let exhaustive = check_identity_with(&entry.algebra, id, &ctx.check_opts()).holds();
            let sampled = random_substitution_check(&entry.algebra, id, RANDOM_SUBSTITUTIONS, &mut rng);
            if exhaustive == sampled.is_none() {
                agreements += 1;
            } else {
                acc.expect(
                    false,
                    format!("{} on {}: exhaustive {exhaustive}, sample {sampled:?}", id.name(), entry.name),
                );
            }
        }
    }
    let names: Vec<&str> = ids.iter().map(|i| i.name()).collect();
    acc.expect(
        true,
        format!("{agreements} verdicts agree for {} on {} algebras", names.join(", "), ctx.zoo.len()),
    );
    acc.finish(11, "random substitutions agree with linearized verdicts")
}

/// Findings that are reported but not counted.
pub fn notes(ctx: &SuiteContext) -> Vec<CriterionResult> {
    let mut out = Vec::new();
    let f = free_anticommutative(3, 5).expect("small");
    let mut acc = Acc::new();
    for name in SAGLE_IDENTITIES {
        let r = ctx.check(&f.algebra, name);
        acc.details.push(format!("free(3,5): {}", describe(&f.algebra, &r)));
    }
    out.push(acc.finish(0, "Malcev consequences on free(3,5), the first 3-generator truncation with degree-4 words"));
    let u = atilde_unpatched();
    let mut acc = Acc::new();
    let r = ctx.check(&u.algebra, "malcev");
    acc.details.push(format!("eight-entry psi table: {}", describe(&u.algebra, &r)));
    out.push(acc.finish(0, "the psi table without psi([x2,x3,x4],x1) = 1"));
    out
}

pub fn run_suite(options: SuiteOptions) -> Report {
    let ctx = SuiteContext::new(options);
    let criteria = vec![
        construction(&ctx),
        witness(&ctx),
        classification(&ctx),
        skew_symmetry(&ctx),
        lie_kernel_suite(&ctx),
        fourth_power(&ctx),
        three_generated(&ctx),
        first_type_characterizations(&ctx),
        sagle_identities(&ctx),
        semiprime(&ctx),
        random_cross_check(&ctx),
    ];
    Report {
        seed: options.seed,
        algebra: if options.corrupt_psi { "atilde (corrupted psi)" } else { "atilde" }.into(),
        dim: ctx.alg().dim(),
        criteria,
        notes: notes(&ctx),
    }
}
