//! End-to-end acceptance sweep: one test per advertised guarantee, each
//! printing a single pass/fail line (run with `--nocapture` to see them
//! all on success).

use std::process::Command;
use std::time::{Duration, Instant};

use chromalat::verify::{
    record_collapse_maps, record_cone_product_rule, record_contractibility_oracle,
    record_factorizations, record_kappa_homomorphism, record_monoid_laws, record_not_thread,
    record_q_count, record_sigma_cofinal, record_sigma_final, record_subdivision_cofinal,
    record_thread_dp, record_thread_example, VerificationRecord,
};

fn report(label: &str, r: &VerificationRecord, bound: Option<Duration>) {
    let status = if r.passed { "pass" } else { "FAIL" };
    println!(
        "acceptance {label}: {status} ({} cases in {:.1?})",
        r.cases, r.elapsed
    );
    if let Some(c) = &r.counterexample {
        println!("  counterexample: {c}");
    }
    assert!(r.passed, "{label}: {:?}", r.counterexample);
    if let Some(bound) = bound {
        assert!(
            r.elapsed < bound,
            "{label} took {:?}, over the {:?} budget",
            r.elapsed,
            bound
        );
    }
}

const SECOND: Duration = Duration::from_secs(1);

#[test]
fn a01_twenty_families_at_height_three() {
    report("01 family count", &record_q_count(), Some(SECOND));
}

#[test]
fn a02_product_of_meets_and_its_submonoid() {
    report("02 thread example", &record_thread_example(), Some(SECOND));
}

#[test]
fn a03_one_catalogue_element_is_not_a_thread_set() {
    report("03 realizability", &record_not_thread(), Some(5 * SECOND));
}

#[test]
fn a04_catalogue_factorizations() {
    report("04 factorizations", &record_factorizations(), Some(SECOND));
}

#[test]
fn a05_cone_product_rule_exhaustive() {
    report("05 cone products", &record_cone_product_rule(), Some(SECOND));
}

#[test]
fn a06_monoid_law_suite() {
    report("06 monoid laws", &record_monoid_laws(), Some(10 * SECOND));
}

#[test]
fn a07_level_support_homomorphism() {
    report("07 support map", &record_kappa_homomorphism(), Some(SECOND));
}

#[test]
fn a08_union_map_is_cofinal_and_final_with_witnesses() {
    let bound = Duration::from_secs(300);
    let start = Instant::now();
    report("08a union map cofinal", &record_sigma_cofinal(), None);
    report("08b union map final", &record_sigma_final(), None);
    assert!(
        start.elapsed() < bound,
        "both direction sweeps took {:?}, over the {:?} budget",
        start.elapsed(),
        bound
    );
}

#[test]
fn a09_subdivision_projection_is_cofinal() {
    report(
        "09 subdivision projection",
        &record_subdivision_cofinal(),
        Some(120 * SECOND),
    );
}

#[test]
fn a10_contractibility_oracle_agreement() {
    report("10 oracle agreement", &record_contractibility_oracle(), None);
}

#[test]
fn a11_thread_walk_matches_product_fold() {
    report("11 thread walk", &record_thread_dp(), None);
}

#[test]
fn a12_collapse_map_zigzag() {
    report("12 collapse maps", &record_collapse_maps(), Some(5 * SECOND));
}

#[test]
fn a13_verification_binary_passes_end_to_end() {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_chromalat"))
        .arg("verify-paper")
        .output()
        .expect("the verification binary runs");
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&output.stdout);

    let passed = output.status.success();
    println!(
        "acceptance 13 verification binary: {} ({} record lines in {:.1?})",
        if passed { "pass" } else { "FAIL" },
        stdout.lines().filter(|l| l.starts_with("pass")).count(),
        elapsed
    );
    assert!(passed, "verify-paper exited {:?}\n{stdout}", output.status);

    let records = stdout.lines().filter(|l| l.starts_with("pass")).count();
    assert!(records >= 12, "only {records} records printed:\n{stdout}");
    assert!(
        stdout.contains("Example eg-not-thread"),
        "the realizability record line is missing:\n{stdout}"
    );
    assert!(
        elapsed < Duration::from_secs(600),
        "verify-paper took {elapsed:?}, over the 10 minute budget"
    );
}
