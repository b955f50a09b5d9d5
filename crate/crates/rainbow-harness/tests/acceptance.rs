//! Acceptance gate: twelve criteria, one test each. Every test prints a
//! single `PASS cN: ...` line with the measured numbers (visible with
//! `cargo test --test acceptance -- --nocapture`); a failing criterion
//! panics with the offending numbers instead.

use std::time::Instant;

use rainbow_core::graph::ParityFilter;
use rainbow_core::search::exhaustive_rainbow_cycle;
use rainbow_core::structures::gen_glued_squares;
use rainbow_harness::par::Parallelism;
use rainbow_harness::props;
use rainbow_harness::report::VerificationReport;
use rainbow_harness::threshold::{
    check_even_cycle_edge_bound, even_cycle_bound, search_even_threshold,
};
use rainbow_harness::verify::{verify_theorem, TheoremId, VerifyMode};

const SEED: u64 = 0xA11CE;

fn sweep(id: TheoremId, n: usize) -> VerificationReport {
    verify_theorem(id, n, VerifyMode::Exhaustive, Parallelism::auto())
        .expect("exhaustive sweep within the documented envelope")
}

#[test]
fn c01_triples_of_odd_cycles_in_k4_have_rainbow_odd_cycles() {
    let r = sweep(TheoremId::OddCycles, 4);
    assert_eq!(r.families_checked, 20, "expected the 20 triangle 3-multisets");
    assert_eq!(r.total_failures, 0, "counterexamples: {:?}", r.failures);
    assert!(r.elapsed < 1.0, "sweep took {:.3}s, limit 1s", r.elapsed);
    println!(
        "PASS c1: odd-cycles n=4 exhaustive — 20/20 families have a rainbow odd cycle ({:.3}s < 1s)",
        r.elapsed
    );
}

#[test]
fn c02_five_odd_cycles_in_k5_have_rainbow_odd_cycles() {
    let r = sweep(TheoremId::Woc, 5);
    assert_eq!(r.families_checked, 65_780, "expected C(26,5) 5-multisets");
    assert_eq!(r.total_failures, 0, "counterexamples: {:?}", r.failures);
    assert!(r.elapsed < 300.0, "sweep took {:.1}s, limit 5min", r.elapsed);
    println!(
        "PASS c2: woc n=5 exhaustive — 65780/65780 families have a rainbow odd cycle ({:.2}s < 300s)",
        r.elapsed
    );
}

#[test]
fn c03_odd_characterization_is_exact_at_n4() {
    let r = sweep(TheoremId::OddChar, 4);
    assert_eq!(r.families_checked, 12_650, "expected C(25,4) 4-multisets");
    assert_eq!(r.total_failures, 0, "mismatches: {:?}", r.failures);
    assert!(r.elapsed < 120.0, "sweep took {:.1}s, limit 2min", r.elapsed);
    println!(
        "PASS c3: odd-char n=4 exhaustive — no-rainbow-odd ⇔ pruned cactus on 12650 families ({:.2}s < 120s)",
        r.elapsed
    );
}

#[test]
fn c04_cycle_characterization_is_exact_at_n4() {
    let r = sweep(TheoremId::CyclesChar, 4);
    assert_eq!(r.families_checked, 91_390, "expected C(40,4) 4-multisets");
    assert_eq!(r.total_failures, 0, "mismatches: {:?}", r.failures);
    assert!(r.elapsed < 600.0, "sweep took {:.1}s, limit 10min", r.elapsed);
    println!(
        "PASS c4: cycles-char n=4 exhaustive — no-rainbow ⇔ saguaro on 91390 families ({:.2}s < 600s)",
        r.elapsed
    );
}

#[test]
fn c05_linkleaf_characterization_is_exact_at_n4() {
    let r = sweep(TheoremId::Linkleaf, 4);
    assert_eq!(
        r.families_checked, 246_730,
        "expected the canonical all-classes-nonempty colorings of K_5's 10 edges"
    );
    assert_eq!(r.total_failures, 0, "mismatches: {:?}", r.failures);
    assert!(r.elapsed < 900.0, "sweep took {:.1}s, limit 15min", r.elapsed);
    println!(
        "PASS c5: linkleaf n=4 exhaustive — no-rainbow ⇔ linkleaf on 246730 families ({:.2}s < 900s)",
        r.elapsed
    );
}

#[test]
fn c06_cut_or_cycle_is_total_on_valid_families() {
    let exhaustive = props::cut_totality_exhaustive_small().expect("totality failed");
    assert_eq!(
        exhaustive, 5_478,
        "expected every valid edge-disjoint family on <=4 vertices"
    );
    let sampled = props::cut_totality_sampled(10_000, SEED).expect("totality failed");
    assert_eq!(sampled, 10_000);
    println!(
        "PASS c6: cut-or-cycle totality — validating certificate on {exhaustive} exhaustive (n<=4) + {sampled} sampled (n<=7) families"
    );
}

#[test]
fn c07_glued_squares_are_rainbow_even_free() {
    for copies in 1..=4 {
        let family = gen_glued_squares(copies);
        assert_eq!(family.len(), 6 * copies, "member count for {copies} copies");
        assert_eq!(family.n(), 5 * copies + 1, "ambient for {copies} copies");
        assert_eq!(
            family.union().vertices().len(),
            5 * copies + 1,
            "touched vertices for {copies} copies"
        );
        assert!(
            exhaustive_rainbow_cycle(&family, ParityFilter::Even).is_none(),
            "glued squares with {copies} copies admit a rainbow even cycle"
        );
    }
    println!(
        "PASS c7: glued squares k=1..4 — 6k members on 5k+1 vertices, no rainbow even cycle (oracle)"
    );
}

#[test]
fn c08_even_thresholds_f4_exact_and_f5_bounded() {
    let start = Instant::now();
    let r4 = search_even_threshold(4, None).expect("n=4 search");
    assert!(!r4.lower_bound_only);
    assert_eq!(r4.f_of_n, 4, "f(4) must be 4");
    assert!(
        start.elapsed().as_secs_f64() < 60.0,
        "f(4) took {:.1}s, limit 1min",
        start.elapsed().as_secs_f64()
    );
    for dto in &r4.extremal_families {
        let family = dto.to_family().expect("extremal family re-imports");
        assert_eq!(family.len(), 3);
        assert!(
            exhaustive_rainbow_cycle(&family, ParityFilter::Even).is_none(),
            "recorded extremal family is not rainbow-even-free"
        );
    }
    let r5 = search_even_threshold(5, None).expect("n=5 search");
    assert!(!r5.lower_bound_only, "n=5 must be exact");
    assert!(
        r5.f_of_n >= 4 && r5.f_of_n <= even_cycle_bound(5),
        "f(5) = {} out of [4, {}]",
        r5.f_of_n,
        even_cycle_bound(5)
    );
    for dto in &r5.extremal_families {
        let family = dto.to_family().expect("extremal family re-imports");
        assert_eq!(family.len(), r5.f_of_n - 1);
        assert!(exhaustive_rainbow_cycle(&family, ParityFilter::Even).is_none());
    }
    println!(
        "PASS c8: f(4) = 4 exhaustive ({} extremal), f(5) = {} exact in [4, {}] ({} extremal)",
        r4.extremal_families.len(),
        r5.f_of_n,
        even_cycle_bound(5),
        r5.extremal_families.len()
    );
}

#[test]
fn c09_dense_graphs_contain_even_cycles_up_to_n7() {
    let mut checked_total = 0u64;
    for n in 3..=7 {
        let report = check_even_cycle_edge_bound(n, Parallelism::auto()).expect("within range");
        assert_eq!(
            report.violations, 0,
            "n={n}: {} graphs above the bound without an even cycle",
            report.violations
        );
        checked_total += report.graphs_checked;
    }
    println!(
        "PASS c9: every graph on n<=7 vertices with > ⌊3(n-1)/2⌋ edges has an even cycle ({checked_total} graphs)"
    );
}

#[test]
fn c10_matroid_reduction_agrees_with_direct_search_at_n5() {
    let r = verify_theorem(
        TheoremId::MatroidSpan,
        5,
        VerifyMode::Sample {
            count: 1_000,
            seed: SEED,
        },
        Parallelism::auto(),
    )
    .expect("sampling within envelope");
    assert_eq!(r.families_checked, 1_000);
    assert_eq!(r.total_failures, 0, "disagreements: {:?}", r.failures);
    println!(
        "PASS c10: matroid span reduction — greedy span and direct odd-cycle search agree on 1000 sampled n=5 families"
    );
}

#[test]
fn c11_rado_condition_matches_rainbow_spanning_trees() {
    let cases = props::rado_equivalence(10_000, SEED).expect("equivalence failed");
    assert_eq!(cases, 10_000);
    println!(
        "PASS c11: rainbow spanning tree ⇔ span condition on {cases} sampled connected families (m <= 5)"
    );
}

#[test]
fn c12_property_suites_hold_under_a_fixed_seed() {
    let n1 = props::certificate_soundness(10_000, SEED).expect("certificate soundness failed");
    let n2 = props::oracle_agreement(10_000, SEED ^ 1).expect("oracle agreement failed");
    let n3 = props::contraction_identity(10_000, SEED ^ 2).expect("contraction identity failed");
    let n4 = props::symmetric_difference_algebra(10_000, SEED ^ 3)
        .expect("symmetric difference algebra failed");
    let n5 = props::cactus_block_equivalence(10_000, SEED ^ 4)
        .expect("cactus recognizer equivalence failed");
    println!(
        "PASS c12: property suites — soundness {n1}, oracle agreement {n2}, contraction {n3}, xor algebra {n4}, cactus equivalence {n5} cases"
    );
}
