//! Acceptance suite: every exit criterion of the workbench, runnable as
//! `cargo test --test acceptance -- --nocapture` for per-criterion lines.
//!
//! Each check prints one `criterion N: PASS/FAIL -- detail` line. Two
//! checks assert recorded survey tallies that exhaustive recomputation
//! contradicts; they are kept as stated and fail honestly, with the
//! machine-verified counts pinned by the neighboring green checks.

use std::time::{Duration, Instant};
use tdl::analysis::{self, SaturClass};
use tdl::graphs::{self, build_named, builders, Graph};
use tdl::labeling::{self, VertexLabeling};
use tdl::lattice::{self, Basis, LatticeModel, PeriodicSearchOutcome};
use tdl::solver::{self, ChiOutcome, SearchConfig, SearchOutcome};
use tdl::starelim;
use tdl::wsr;

struct Checker {
    criterion: &'static str,
    failures: Vec<String>,
}

impl Checker {
    fn new(criterion: &'static str) -> Checker {
        Checker { criterion, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, detail: &str) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} -- {detail}", self.criterion);
        if !ok {
            self.failures.push(detail.to_string());
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS", self.criterion);
        } else {
            println!("criterion {}: FAIL ({} check(s))", self.criterion, self.failures.len());
        }
        assert!(
            self.failures.is_empty(),
            "criterion {} failed: {:?}",
            self.criterion,
            self.failures
        );
    }
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn exact_chi(g: &Graph) -> u32 {
    match solver::chi_td(g, &cfg()).unwrap() {
        ChiOutcome::Exact { chi, witness } => {
            assert!(labeling::is_proper(g, &witness).unwrap());
            assert!(witness.max_label().unwrap() <= chi);
            chi
        }
        ChiOutcome::Bounded { .. } => panic!("expected exact chi for {:?}", g.name()),
    }
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

// --- criterion 1 -------------------------------------------------------

#[test]
fn criterion_1_wsr_table_reproduction() {
    let started = Instant::now();
    let mut c = Checker::new("1");
    let table = wsr::stats_table(20);
    // The five extremal columns for sizes 1..=20.
    let expected: [(u64, u64, u64, u64, u64); 20] = [
        (1, 1, 1, 1, 1),
        (3, 3, 2, 1, 2),
        (4, 4, 1, 1, 1),
        (9, 8, 4, 1, 2),
        (10, 10, 7, 1, 2),
        (12, 12, 6, 1, 2),
        (13, 13, 1, 1, 1),
        (27, 19, 2, 1, 2),
        (28, 23, 2, 1, 1),
        (30, 25, 2, 1, 2),
        (31, 29, 1, 2, 2),
        (36, 31, 2, 1, 1),
        (37, 35, 2, 1, 1),
        (39, 39, 20, 1, 2),
        (40, 40, 1, 1, 1),
        (81, 50, 14, 1, 3),
        (82, 53, 2, 1, 2),
        (84, 57, 2, 1, 4),
        (85, 62, 2, 1, 2),
        (90, 70, 4, 1, 2),
    ];
    for (i, &(os, e, d, mi1, mi2)) in expected.iter().enumerate() {
        let s = table[i];
        c.check(
            (s.os, s.e, s.d, s.mi1, s.mi2) == (os, e, d, mi1, mi2),
            &format!("row n={}: (OS,E,D,Mi1,Mi2) = {:?}", i + 1, (s.os, s.e, s.d, s.mi1, s.mi2)),
        );
    }
    c.check(table[13].d == 20, "D(14) = 20");
    c.check(table[15].e == 50, "E(16) = 50");
    let elapsed = started.elapsed();
    c.check(elapsed < Duration::from_secs(60), &format!("table runtime {elapsed:?} < 60 s"));
    c.finish();
}

// --- criterion 2 -------------------------------------------------------

#[test]
fn criterion_2_greedy_formula_agreement() {
    let started = Instant::now();
    let mut c = Checker::new("2");
    let row = wsr::greedy_wsr(256);
    let all_match =
        row.elements().iter().enumerate().all(|(i, &v)| v == wsr::greedy_element(i as u64 + 1));
    c.check(all_match, "greedy_element(k) matches the greedy row elementwise for k <= 256");
    c.check(wsr::greedy_element(13) == 37, "greedy_element(13) = 37");
    c.check(wsr::greedy_element(20) == 90, "greedy_element(20) = 90");
    let elapsed = started.elapsed();
    c.check(elapsed < Duration::from_secs(1), &format!("runtime {elapsed:?} < 1 s"));
    c.finish();
}

// --- criterion 3 -------------------------------------------------------

#[test]
fn criterion_3_known_chi_battery() {
    let mut c = Checker::new("3");
    let timed = |g: &Graph, expect: u32, what: &str, c: &mut Checker| {
        let started = Instant::now();
        let chi = exact_chi(g);
        let elapsed = started.elapsed();
        c.check(
            chi == expect && elapsed < Duration::from_secs(60),
            &format!("{what}: chi_td = {chi} (want {expect}) in {elapsed:?}"),
        );
    };
    for n in 4..=10 {
        timed(&build_named("path", &[n]).unwrap(), 4, &format!("P{n}"), &mut c);
    }
    for n in 3..=12 {
        let expect = if n % 3 == 0 { 4 } else { 5 };
        timed(&build_named("cycle", &[n]).unwrap(), expect, &format!("C{n}"), &mut c);
    }
    for m in 1..=10 {
        let expect = if m % 2 == 0 { m as u32 + 1 } else { m as u32 + 2 };
        timed(&build_named("star", &[m]).unwrap(), expect, &format!("K(1,{m})"), &mut c);
    }
    for n in 1..=8 {
        timed(
            &build_named("complete", &[n]).unwrap(),
            wsr::chi_td_complete(n) as u32,
            &format!("K{n} vs E({n})"),
            &mut c,
        );
    }
    timed(&builders::petersen(), 10, "Petersen", &mut c);
    timed(&builders::triforce(), 6, "triforce", &mut c);
    timed(&builders::graph_i(), 8, "graph I", &mut c);
    c.finish();
}

// --- criterion 4 -------------------------------------------------------

#[test]
fn criterion_4_hypercubes() {
    let mut c = Checker::new("4");
    for (d, expect) in [(0usize, 1u32), (1, 3), (2, 5), (3, 7), (4, 9)] {
        let started = Instant::now();
        let q = build_named("hypercube", &[d]).unwrap();
        let chi = exact_chi(&q); // witness plus exhausted search one level down
        let elapsed = started.elapsed();
        c.check(
            chi == expect && elapsed < Duration::from_secs(600),
            &format!("Q{d}: chi_td = {chi} (want {expect}), certified in {elapsed:?}"),
        );
        // The doubling construction's ceiling.
        c.check(
            chi < (1u32 << (d + 1)),
            &format!("Q{d}: chi_td = {chi} within the 2^(d+1)-1 ceiling"),
        );
    }
    // Stretch tier: a validating 10-labeling of Q5 (no certification below).
    let started = Instant::now();
    let q5 = build_named("hypercube", &[5]).unwrap();
    match solver::has_tdl(&q5, 10, &cfg()) {
        SearchOutcome::Witness(w) => {
            let elapsed = started.elapsed();
            c.check(
                labeling::is_proper(&q5, &w).unwrap()
                    && w.max_label().unwrap() <= 10
                    && elapsed < Duration::from_secs(1800),
                &format!("Q5 stretch: validating 10-labeling found in {elapsed:?}"),
            );
        }
        other => c.check(false, &format!("Q5 stretch: expected witness, got {other:?}")),
    }
    c.finish();
}

// --- criterion 5 -------------------------------------------------------

#[test]
fn criterion_5_star_elimination() {
    let started = Instant::now();
    let mut c = Checker::new("5");
    for (delta, expect) in [(3usize, 7u64), (4, 8), (6, 12)] {
        let bound = starelim::star_elim_lower_bound(delta);
        c.check(bound == expect, &format!("lower bound for degree {delta} = {bound} (want {expect})"));
    }
    let hex = starelim::eliminate_fixpoint(6, 3);
    c.check(
        hex.removed_set() == [2, 3, 5].into() && hex.survivors == vec![1, 4, 6],
        "ceiling 6, degree 3: removes {3,2,5} leaving {1,4,6}",
    );
    let square = starelim::eliminate_fixpoint(7, 4);
    c.check(
        square.removed_set() == [3, 4, 6].into() && square.survivors == vec![1, 2, 5, 7],
        "ceiling 7, degree 4: removes {4,3,6} leaving {1,2,5,7}",
    );
    let tri = starelim::eliminate_fixpoint(11, 6);
    c.check(
        tri.contradiction && tri.survivors.len() < 7,
        "ceiling 11, degree 6: contradiction established",
    );
    let elapsed = started.elapsed();
    c.check(elapsed < Duration::from_secs(1), &format!("runtime {elapsed:?} < 1 s"));
    c.finish();
}

/// Recorded expectation for the ceiling-11, degree-6 trace: removal set
/// {5,6,4,9,2,7}. That hand derivation removes a sixth label after the
/// contradiction point (five removals already leave six survivors, below
/// the required seven) and keeps label 1 even though 1 is vulnerable
/// alongside 2 at that stage (both reduce to neighbor pool {3,7,8,10,11}).
/// No uniform removal policy can reproduce it; the mechanical trace
/// reaches the same contradiction via {4,5,6,9,7}. Kept as stated.
#[test]
fn criterion_5_triangular_trace_set_as_recorded() {
    let mut c = Checker::new("5");
    let tri = starelim::eliminate_fixpoint(11, 6);
    c.check(
        tri.removed_set() == [5, 6, 4, 9, 2, 7].into(),
        &format!(
            "ceiling 11, degree 6: removal set {:?} matches recorded {{5,6,4,9,2,7}}",
            tri.removed_set()
        ),
    );
    c.finish();
}

// --- criterion 6 -------------------------------------------------------

#[test]
fn criterion_6_lattice_fixtures_and_searches() {
    let started = Instant::now();
    let mut c = Checker::new("6");
    let battery = [
        ("square_10.txt", LatticeModel::Square, 10u32),
        ("square_8.txt", LatticeModel::Square, 8),
        ("hex_8.txt", LatticeModel::Hexagonal, 8),
        ("hex_7.txt", LatticeModel::Hexagonal, 7),
        ("tri_12.txt", LatticeModel::Triangular, 12),
    ];
    for (file, model, max) in battery {
        let p = lattice::fixture_labeling(&fixture(file)).unwrap();
        let violations = lattice::validate_periodic(model, &p).unwrap();
        c.check(
            violations.is_empty() && p.max_label() == max,
            &format!("{file}: valid with max label {} (want {max})", p.max_label()),
        );
    }
    let rules = lattice::parse_tree_rules(&fixture("tree_rules_7.txt")).unwrap();
    let tree_violations = lattice::validate_tree_rulemap(&rules);
    let tree_max = rules.rules.keys().copied().max().unwrap();
    c.check(
        tree_violations.is_empty() && tree_max == 7,
        &format!("tree rule map: valid with max label {tree_max} (want 7)"),
    );

    // Cubic 13-labeling through the linear-functional search: ascend the
    // coefficient vectors for the seven-element minimal row.
    let row = [1u32, 3, 4, 9, 10, 12, 13];
    let mut found = None;
    'outer: for a in 0..7i64 {
        for b in 0..7i64 {
            for d in 0..7i64 {
                let p = lattice::linear_functional_labeling(LatticeModel::Cubic, &row, &[a, b, d])
                    .unwrap();
                if lattice::validate_periodic(LatticeModel::Cubic, &p).unwrap().is_empty() {
                    found = Some((a, b, d, p));
                    break 'outer;
                }
            }
        }
    }
    match found {
        Some((a, b, d, p)) => c.check(
            p.max_label() == 13,
            &format!("cubic linear-functional search: 13-labeling at coefficients ({a},{b},{d})"),
        ),
        None => c.check(false, "cubic linear-functional search found nothing"),
    }

    // Square lattice at ceiling 7: no fundamental domain up to 16 cells.
    let mut none_everywhere = true;
    for basis in lattice::enumerate_bases(LatticeModel::Square, 16) {
        match lattice::search_periodic(LatticeModel::Square, 7, &basis, None).unwrap() {
            PeriodicSearchOutcome::NoneForBasis => {}
            outcome => {
                none_everywhere = false;
                println!("unexpected outcome for basis {basis:?}: {outcome:?}");
            }
        }
    }
    c.check(none_everywhere, "square ceiling 7: none over all domains <= 16 cells");

    // And ceiling 8 is reachable on the six-cell domain.
    let six_cell = Basis::new_2d([3, 0], [1, -2]);
    let found8 = lattice::search_periodic(LatticeModel::Square, 8, &six_cell, None).unwrap();
    c.check(
        matches!(found8, PeriodicSearchOutcome::Found(_)),
        "square ceiling 8: labeling found on the six-cell domain",
    );
    // Hexagonal ceiling 7 on the twelve-cell column-pair domain.
    let twelve_cell = Basis::new_2d([6, 0], [0, 2]);
    let found7 = lattice::search_periodic(LatticeModel::Hexagonal, 7, &twelve_cell, None).unwrap();
    c.check(
        matches!(found7, PeriodicSearchOutcome::Found(_)),
        "hexagonal ceiling 7: labeling found on the twelve-cell domain",
    );

    let elapsed = started.elapsed();
    c.check(elapsed < Duration::from_secs(600), &format!("combined runtime {elapsed:?} < 10 min"));
    c.finish();
}

// --- criterion 7 -------------------------------------------------------

#[test]
fn criterion_7_saturability_survey() {
    let started = Instant::now();
    let mut c = Checker::new("7");

    let order6 = analysis::survey_order(6, &cfg()).unwrap();
    c.check(order6.scanned == 112, &format!("order 6: {} graphs scanned", order6.scanned));
    // Exhaustively recomputed tallies (brute force over all labelings
    // agrees; see the verification checks below): 33 optima at the order,
    // all saturable.
    c.check(
        order6.chi_equals_order == order6.saturable,
        &format!(
            "order 6: every graph with chi_td = 6 is saturable ({} of {})",
            order6.saturable, order6.chi_equals_order
        ),
    );

    // Independent verification of the order-6 tally by brute force over
    // all 5-ceiling labelings (no tree search involved).
    let brute: usize = graphs::enumerate_connected(6)
        .unwrap()
        .iter()
        .filter(|g| !brute_force_has_labeling(g, 5) && brute_force_has_labeling(g, 6))
        .count();
    c.check(
        brute == order6.chi_equals_order,
        &format!(
            "order 6: solver tally {} confirmed by brute force {brute}",
            order6.chi_equals_order
        ),
    );

    let mut small_saturable = 0;
    let mut small_supersaturable = 0;
    for order in 1..=5 {
        let s = analysis::survey_order(order, &cfg()).unwrap();
        small_saturable += s.saturable;
        small_supersaturable += s.supersaturable;
    }
    c.check(
        small_supersaturable == 7,
        &format!("orders 1-5: exactly 7 supersaturable graphs (got {small_supersaturable})"),
    );

    let triforce = analysis::saturability(&builders::triforce(), &cfg()).unwrap();
    c.check(
        triforce.minimal_count == 4 && triforce.saturated_count == 4,
        &format!(
            "triforce: {} optimal labelings, {} saturated (want 4/4)",
            triforce.minimal_count, triforce.saturated_count
        ),
    );

    let gi = builders::graph_i();
    let gi_verdict = analysis::saturability(&gi, &cfg()).unwrap();
    c.check(
        gi_verdict.chi == 8 && gi_verdict.applicable && gi_verdict.class == SaturClass::NotSaturable,
        &format!("graph I: chi = {} and not saturable", gi_verdict.chi),
    );
    let eight_tdls = solver::enumerate_tdls(&gi, 8, &cfg()).unwrap();
    let all_double_eight = eight_tdls.iter().all(|f| {
        let first: Vec<usize> = (0..4).filter(|&v| f.get(v) == 8).collect();
        let second: Vec<usize> = (4..8).filter(|&v| f.get(v) == 8).collect();
        first.len() == 1 && second.len() == 1
    });
    c.check(
        !eight_tdls.is_empty() && all_double_eight,
        &format!(
            "graph I: every one of its {} optimal labelings uses label 8 once per clique half",
            eight_tdls.len()
        ),
    );

    let elapsed = started.elapsed();
    c.check(elapsed < Duration::from_secs(1800), &format!("runtime {elapsed:?} < 30 min"));
    println!(
        "criterion 7: note -- orders 1-5 have {small_saturable} saturable graphs ({small_supersaturable} supersaturable)"
    );
    c.finish();
}

/// Recorded expectations for the survey tallies: 32 order-6 graphs with
/// the optimum at the order, and 7 saturable graphs across orders 1-5.
/// Exhaustive recomputation (both the certified solver and a brute force
/// over every labeling, cross-checked above) yields 33 and 12; the
/// recorded 7 matches the supersaturable count instead, consistent with
/// the diameter-2 argument those graphs were found by, but the broader
/// saturable class provably includes diameter-3 graphs: P4 carries the
/// saturated labeling (4,1,3,2). Kept as stated.
#[test]
fn criterion_7_survey_counts_as_recorded() {
    let mut c = Checker::new("7");
    let order6 = analysis::survey_order(6, &cfg()).unwrap();
    c.check(
        order6.chi_equals_order == 32,
        &format!("order 6: recorded 32 graphs with chi_td = 6 (computed {})", order6.chi_equals_order),
    );
    c.check(
        order6.saturable == 32,
        &format!("order 6: recorded 32 saturable (computed {})", order6.saturable),
    );
    let small: usize =
        (1..=5).map(|n| analysis::survey_order(n, &cfg()).unwrap().saturable).sum();
    c.check(small == 7, &format!("orders 1-5: recorded 7 saturable graphs (computed {small})"));
    c.finish();
}

fn brute_force_has_labeling(g: &Graph, k: u32) -> bool {
    let n = g.n();
    let mut labels = vec![1u32; n];
    loop {
        if labeling::is_proper(g, &VertexLabeling::new(labels.clone()).unwrap()).unwrap() {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            labels[i] += 1;
            if labels[i] <= k {
                break;
            }
            labels[i] = 1;
            i += 1;
        }
    }
}

// --- criterion 8 -------------------------------------------------------

#[test]
fn criterion_8_clone_and_product_bounds() {
    let started = Instant::now();
    let mut c = Checker::new("8");
    // Clone bound, exhaustively over the connected graphs with <= 4
    // vertices.
    for n in 1..=4 {
        for g in graphs::enumerate_connected(n).unwrap() {
            let r = analysis::check_clone_bound(&g, &cfg()).unwrap();
            c.check(
                r.holds,
                &format!(
                    "clone bound on {:?}: chi {} -> clone {} <= {}",
                    g.edges(),
                    r.chi_g,
                    r.chi_clone,
                    r.bound
                ),
            );
        }
    }
    // Clone of the Petersen graph admits a 10-labeling.
    let clone_p = graphs::clone_graph(&builders::petersen()).unwrap();
    match solver::has_tdl(&clone_p, 10, &cfg()) {
        SearchOutcome::Witness(w) => c.check(
            labeling::is_proper(&clone_p, &w).unwrap() && w.max_label().unwrap() <= 10,
            "clone(Petersen) admits a validating 10-labeling",
        ),
        other => c.check(false, &format!("clone(Petersen) at ceiling 10: {other:?}")),
    }
    // Product battery on graphs whose factors have <= 6 vertices total.
    let battery = [("complete", vec![1usize], 2usize), ("path", vec![3], 2), ("complete", vec![2], 3)];
    for (name, params, m) in battery {
        let g = build_named(name, &params).unwrap();
        let r = analysis::check_product_bound(&g, m, &cfg()).unwrap();
        c.check(
            r.holds,
            &format!(
                "product bound on K{m} x {name}{params:?}: chi {} -> product {} <= {}",
                r.chi_g, r.chi_product, r.bound
            ),
        );
    }
    let elapsed = started.elapsed();
    c.check(elapsed < Duration::from_secs(1800), &format!("runtime {elapsed:?} < 30 min"));
    c.finish();
}

// --- criterion 9 -------------------------------------------------------

#[test]
fn criterion_9_property_suites() {
    let mut c = Checker::new("9");

    // Validation agrees with the four-property definition, exhaustively on
    // every connected graph with <= 4 vertices and all labelings <= 6.
    let mut agree = true;
    for n in 1..=4usize {
        for g in graphs::enumerate_connected(n).unwrap() {
            let mut labels = vec![1u32; n];
            loop {
                let f = VertexLabeling::new(labels.clone()).unwrap();
                if labeling::is_proper(&g, &f).unwrap() != proper_by_definition(&g, &f) {
                    agree = false;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    labels[i] += 1;
                    if labels[i] <= 6 {
                        break;
                    }
                    labels[i] = 1;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
    }
    c.check(agree, "validate matches the four-property definition on <= 4 vertices");

    // Acceptable-size closed form equals the exhaustive subset maximum for
    // every candidate set within {1..=12}.
    let mut closed_form_ok = true;
    for bits in 1u16..1 << 12 {
        let a: std::collections::BTreeSet<u64> =
            (1..=12u64).filter(|&v| bits >> (v - 1) & 1 == 1).collect();
        for &j in &a {
            if starelim::max_acceptable_size(j, &a).unwrap() != brute_max_acceptable(j, &a) {
                closed_form_ok = false;
            }
        }
    }
    c.check(closed_form_ok, "acceptable-size closed form matches brute force on all of 2^12 sets");

    // Elimination fixpoints are order-independent over random removal
    // orders.
    use rand::prelude::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7d1);
    let mut order_independent = true;
    for (x, delta) in [(7u64, 4usize), (11, 6), (12, 6), (9, 4), (8, 3)] {
        let reference = starelim::full_fixpoint_with_order(x, delta, |v| v[0]);
        for _ in 0..20 {
            let survivors = starelim::full_fixpoint_with_order(x, delta, |v| {
                v[rng.gen_range(0..v.len())]
            });
            if survivors != reference {
                order_independent = false;
            }
        }
    }
    c.check(order_independent, "elimination fixpoint identical over 100 random removal orders");

    // The extremal chain and the unique-row degeneracy over every computed
    // size.
    let table = wsr::stats_table(20);
    let chain = table.iter().all(|s| s.mi1 <= s.mi2 && s.mi2 <= s.e && s.e <= s.os);
    let degenerate = table.iter().all(|s| s.d != 1 || s.mi1 == s.mi2);
    c.check(chain, "Mi1 <= Mi2 <= E <= OS over all computed sizes");
    c.check(degenerate, "D = 1 forces Mi1 = Mi2 over all computed sizes");

    c.finish();
}

/// Independent restatement of the four defining properties, on derived
/// edge labels, with no shared logic with the validator.
fn proper_by_definition(g: &Graph, f: &VertexLabeling) -> bool {
    let el = labeling::edge_labels(g, f).unwrap();
    for (&(u, v), &l) in el.iter() {
        if f.get(u) == f.get(v) || l == f.get(u) || l == f.get(v) {
            return false;
        }
    }
    let edges: Vec<(usize, usize)> = el.keys().copied().collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(x, y) in &edges[i + 1..] {
            let shares = a == x || a == y || b == x || b == y;
            if shares && el[&(a, b)] == el[&(x, y)] {
                return false;
            }
        }
    }
    true
}

fn brute_max_acceptable(j: u64, a: &std::collections::BTreeSet<u64>) -> usize {
    let items: Vec<u64> = a.iter().copied().filter(|&v| v != j).collect();
    let mut best = 0usize;
    for mask in 0u32..1 << items.len() {
        let subset: Vec<u64> =
            (0..items.len()).filter(|&i| mask >> i & 1 == 1).map(|i| items[i]).collect();
        if subset.len() <= best {
            continue;
        }
        if subset.contains(&(2 * j)) || (j.is_multiple_of(2) && subset.contains(&(j / 2))) {
            continue;
        }
        if subset.iter().any(|&lo| lo < j && subset.contains(&(2 * j - lo))) {
            continue;
        }
        best = subset.len();
    }
    best
}
