//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//! Every comparison is exact rational equality.

use isobar::verify::{self, SuiteReport};

const SEED: u64 = 0xC0FFEE;

fn gate(criterion: &str, report: SuiteReport) {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "acceptance {criterion}: {status} ({} checks, {} failed)",
        report.checks, report.failed
    );
    assert!(
        report.passed(),
        "criterion {criterion} failed {} of {} checks; first failures: {:#?}",
        report.failed,
        report.checks,
        report.samples
    );
}

#[test]
fn criterion_01_appendix_fidelity() {
    // all 29 Schur reflects for n = 1..6, by both determinant routes,
    // term-for-term and sign-for-sign
    gate("1 (appendix fidelity)", verify::appendix_fidelity());
}

#[test]
fn criterion_02_wip_closed_form() {
    // the written-out P_1..P_4, including coefficient ω₂ on t₂² at n = 4,
    // on 50 random rational weight vectors
    gate("2 (closed form vs displayed family)", verify::wip_closed_form(SEED));
}

#[test]
fn criterion_03_triple_route() {
    // closed form = recursion = convolution for n ≤ 12, k ≤ 12,
    // 100 random rational weights
    gate("3 (triple-route equality)", verify::triple_route(SEED));
}

#[test]
fn criterion_04_lattice_oracle() {
    // the inductive lattice construction reproduces the closed form for
    // every monomial of level ≤ 8
    gate("4 (lattice oracle)", verify::lattice_oracle());
}

#[test]
fn criterion_05_root_laws() {
    // H(t,1) = F for n ≤ 10; H(q)*H(q') = H(q+q') on the grid
    // q, q' ∈ {±1/2, 1/3, −2/3, 2} × five weights, n ≤ 6, k ≤ 6;
    // level_inverse(H(q)) = H(−q) for n ≤ 5
    gate("5 (root identities)", verify::root_laws(SEED));
}

#[test]
fn criterion_06_hook_classification() {
    // for every λ ⊢ n ≤ 7: weight (−1)^r(0^r,1,…) iff λ = (n−r,1^r),
    // NotWeighted otherwise
    gate("6 (hook classification)", verify::hook_classification());
}

#[test]
fn criterion_07_hook_basis() {
    // the hook-basis expansion reconstructs P_{n,ω} for n ≤ 8,
    // 50 random rational weights
    gate("7 (hook-basis expansion)", verify::hook_basis(SEED));
}

#[test]
fn criterion_08_lemma_suites() {
    // the rising/falling Stirling relation, the falling-factorial
    // convolution (n ≤ 10, 20 random pairs), the differential product
    // rule (all depth-≤5 α as ω-polynomial identities), and the binomial
    // identity (all p+q < n ≤ 12)
    gate("8 (Stirling/binomial lemmas)", verify::lemma_suites(SEED));
}

#[test]
fn criterion_09_arith() {
    // Fibonacci local values through 21; the q = 1/2 root self-convolved
    // through N = 7; multiplicativity on 100 random coprime pairs ≤ 10⁶;
    // C_s sums vs iterated convolution for s ≤ 5, n ≤ 8
    gate("9 (arithmetic functions)", verify::arith_suite(SEED));
}

#[test]
fn criterion_10_character_tables() {
    // character tables for n ≤ 5 against the border-strip rule, integer
    // entries, exact first orthogonality
    gate("10 (character tables)", verify::character_tables());
}
