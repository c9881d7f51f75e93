//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (run with `--nocapture` to see them all).

use chorded_cycles::generators::{extremal_g1, extremal_g2, random_delta2_graph, random_graph, XorShift64Star};
use chorded_cycles::graph::{delta_m, DegreeValue};
use chorded_cycles::graph6::{parse_graph6, serialize_graph6};
use chorded_cycles::harness::{
    lemma_suite, min_system_suite, oracle, structure_domain_sweep_all, sweep,
    theorem_s1_exhaustive_sweep, LemmaScope, SweepMode,
};
use chorded_cycles::packing::{pack_chorded_cycles, Caps, PackOutcome};
use chorded_cycles::structure::is_two_connected;

fn report(idx: usize, name: &str, pass: bool, detail: &str) {
    println!("ACCEPTANCE {idx} ({name}): {} — {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {idx} ({name}) failed: {detail}");
}

/// Criterion 1: over all labeled graphs on 4..=7 vertices that are
/// 2-connected with delta_2 >= 4 (or complete), the detection pipeline
/// returns a validated chorded cycle. Zero failures.
#[test]
fn criterion_1_exhaustive_s1_detection() {
    let stats = theorem_s1_exhaustive_sweep(7, 2).unwrap();
    report(
        1,
        "exhaustive s=1 detection",
        stats.violations.is_empty() && stats.domain_size > 0,
        &format!(
            "{} labeled graphs scanned, {} satisfied the hypotheses, {} failures",
            stats.graphs_seen,
            stats.domain_size,
            stats.violations.len()
        ),
    );
}

/// Criterion 2: two-path verdicts match brute-force chorded-cycle existence
/// over all configurations with p, q <= 5 and at most 6 cross edges, and
/// every chordless 3/4-cross verdict names one of the nine templates.
#[test]
fn criterion_2_two_path_equivalence() {
    let summary = lemma_suite(LemmaScope::TwoPath, 5, 0).unwrap();
    report(
        2,
        "two-path equivalence",
        summary.violations.is_empty() && summary.total > 400_000,
        &format!("{} configurations checked, {} mismatches", summary.total, summary.violations.len()),
    );
}

/// Criterion 3: extremal family values are exact, the first family is
/// proven non-packable, and the second packs.
#[test]
fn criterion_3_extremal_families() {
    let mut ok = true;
    let mut notes = Vec::new();
    for s in [2usize, 3, 4] {
        let d1 = delta_m(&extremal_g1(s).unwrap(), 2).unwrap();
        let d2 = delta_m(&extremal_g2(s).unwrap(), 2).unwrap();
        if d1 != DegreeValue::Finite(4 * s - 2) || d2 != DegreeValue::Finite(4 * s - 1) {
            ok = false;
            notes.push(format!("delta_2 mismatch at s={s}: {d1}, {d2}"));
        }
    }
    let caps = Caps::default();
    for s in [2usize, 3] {
        let g1 = extremal_g1(s).unwrap();
        let (exists, _) = oracle::oracle_pack_exists(&g1, s, caps.oracle_n).unwrap();
        if exists {
            ok = false;
            notes.push(format!("g1(s={s}) unexpectedly packs"));
        }
        let g2 = extremal_g2(s).unwrap();
        match pack_chorded_cycles(&g2, s, &caps).unwrap() {
            PackOutcome::Witness(sys) => sys.validate(&g2).unwrap(),
            other => {
                ok = false;
                notes.push(format!("g2(s={s}) did not pack: {other:?}"));
            }
        }
    }
    report(
        3,
        "extremal family values",
        ok,
        &if notes.is_empty() { "delta_2 exact for s in 2..=4; g1 non-packable, g2 packable for s in 2..=3".to_string() } else { notes.join("; ") },
    );
}

/// Criterion 4: packer existence equals oracle existence on 10^4 seeded
/// random graphs across mixed density regimes, n <= 12, s <= 2.
#[test]
fn criterion_4_packer_oracle_agreement() {
    let caps = Caps::default();
    let total = 10_000u64;
    let disagreements = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..2u64)
            .map(|t| {
                let caps = &caps;
                scope.spawn(move || {
                    let mut rng = XorShift64Star::new(0xACCE_0004 ^ t);
                    let mut bad = Vec::new();
                    for i in 0..total / 2 {
                        let n = 5 + (rng.next_below(8)) as usize; // 5..=12
                        let s = 1 + (rng.next_below(2)) as usize;
                        let g = if i % 3 == 0 {
                            let t_req = (4 + rng.next_below(5)) as usize; // delta_2 regimes 4..=8
                            random_delta2_graph(n.max(t_req + 2), t_req, rng.next_u64()).unwrap()
                        } else {
                            random_graph(n, 20 + rng.next_below(70) as usize, rng.next_u64())
                        };
                        let (exists, _) = oracle::oracle_pack_exists(&g, s, caps.oracle_n).unwrap();
                        let packed = match pack_chorded_cycles(&g, s, caps).unwrap() {
                            PackOutcome::Witness(sys) => {
                                sys.validate(&g).unwrap();
                                true
                            }
                            PackOutcome::NotFoundProven => false,
                            PackOutcome::BudgetExhausted => {
                                bad.push(format!("budget exhausted on {}", serialize_graph6(&g)));
                                continue;
                            }
                        };
                        if packed != exists {
                            bad.push(format!(
                                "disagreement on {} s={s}: pack={packed} oracle={exists}",
                                serialize_graph6(&g)
                            ));
                        }
                    }
                    bad
                })
            })
            .collect();
        let mut all = Vec::new();
        for h in handles {
            all.extend(h.join().unwrap());
        }
        all
    });
    report(
        4,
        "packer/oracle agreement",
        disagreements.is_empty(),
        &format!("{total} instances, disagreements: {disagreements:?}"),
    );
}

/// Criterion 5: on >= 10^3 seeded minimal systems (n <= 14, r <= 2), the
/// minimality predicate, degree-3 classification, path inequalities, and
/// hexagon swaps all hold; the corrupted-system negative control fires.
#[test]
fn criterion_5_minimal_system_suite() {
    let halves = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..2u64)
            .map(|t| scope.spawn(move || min_system_suite(14, 2, 500, 0x5EED_0005 ^ t, None).unwrap()))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect::<Vec<_>>()
    });
    let instances: u64 = halves.iter().map(|s| s.instances).sum();
    let checks: u64 = halves.iter().map(|s| s.checks).sum();
    let violations: Vec<String> = halves.into_iter().flat_map(|s| s.violations).collect();

    // Negative control: the five-path suite's built-in corruption test.
    let neg = lemma_suite(LemmaScope::FivePath, 10, 99).unwrap();
    let control_fired = neg.counts.get("self_test_ok") == Some(&1);

    report(
        5,
        "minimal-system invariants",
        violations.is_empty() && instances >= 1000 && control_fired,
        &format!(
            "{instances} systems, {checks} predicate checks, violations: {violations:?}, negative control fired: {control_fired}"
        ),
    );
}

/// Criterion 6: the longest-path clauses, path-closure clauses, and the
/// trichotomy hold on every connected chorded-cycle-free Hamiltonian-path-
/// free graph with n <= 8 (exhaustive).
#[test]
fn criterion_6_structure_suites_exhaustive() {
    let stats = structure_domain_sweep_all(8, 2).unwrap();
    report(
        6,
        "structure clause suites",
        stats.violations.is_empty() && stats.domain_size > 0,
        &format!(
            "{} candidate graphs, {} in the lemma domain, {} violations",
            stats.graphs_seen,
            stats.domain_size,
            stats.violations.len()
        ),
    );
}

/// Criterion 7: 10^4 random 2-connected instances with delta_2 >= 8 at
/// s = 2 sweep clean: zero theorem violations, zero oracle disagreements.
#[test]
fn criterion_7_theorem_sweep_s2() {
    let mut rng = XorShift64Star::new(0x5EE0_0007);
    let mut lines = Vec::new();
    while lines.len() < 10_000 {
        let n = 8 + rng.next_below(5) as usize; // 8..=12
        let g = random_delta2_graph(n, 8, rng.next_u64()).unwrap();
        if is_two_connected(&g) {
            lines.push(Ok(serialize_graph6(&g)));
        }
    }
    let caps = Caps::default();
    let summary = sweep(lines.into_iter(), 2, SweepMode::Verify, &caps, 2, false);
    let passes = summary.counts.get("pass").copied().unwrap_or(0);
    report(
        7,
        "theorem sweep at s=2",
        summary.clean() && summary.total == 10_000 && passes == 10_000,
        &format!("counts: {:?}, violations: {:?}", summary.counts, summary.violations),
    );
}

/// Criterion 8: graph6 round-trips bit-exactly over 10^5 random graphs with
/// n <= 62.
#[test]
fn criterion_8_graph6_round_trip() {
    let mut rng = XorShift64Star::new(0x6A6A_0008);
    let mut failures = 0u64;
    let total = 100_000u64;
    for _ in 0..total {
        let n = rng.next_below(63) as usize;
        let g = random_graph(n, rng.next_below(101) as usize, rng.next_u64());
        let text = serialize_graph6(&g);
        match parse_graph6(&text) {
            Ok(h) if h == g && serialize_graph6(&h) == text => {}
            _ => failures += 1,
        }
    }
    report(8, "graph6 round-trip", failures == 0, &format!("{total} graphs, {failures} failures"));
}
