//! Acceptance suite: one test per criterion, each printing a pass line with
//! its elapsed time. Golden values come from the worked examples for the
//! constructions; sweeps enumerate every admissible h-vector in the stated
//! ranges.

use gorstick::betti::{
    betti_upper_bound_check, closed_form_max_resolution, gorenstein_formula_table,
    gorenstein_max_betti, lex_betti, BettiTable,
};
use gorstick::configurations::{
    build_g_max, build_gorenstein, build_z, check_subspace_property, colon_by_label,
    is_generalized_stick_figure, relabel_g_max, Configuration, Label, PrimeComponent,
};
use gorstick::error::Error;
use gorstick::hilbert::{ci_hvector, hvector_of, sum_linked_hvector};
use gorstick::monomials::{decompose, decomposition_hvector_check, lex_segment_ideal};
use gorstick::oracle;
use gorstick::sequences::{
    binomial, is_o_sequence, is_si_sequence, macaulay_bound, si_params, HVector,
};
use gorstick::simplicial::{
    billera_lee_ball, boundary_complex, boundary_variable_of_label, complex_of, f_to_h, faces,
    is_shelling, BallMode,
};
use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

fn hv(v: &[i64]) -> HVector {
    HVector::new(v.to_vec())
}

fn run_cli(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_gorstick"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

fn parse_components(json: &str) -> BTreeSet<Vec<String>> {
    let value: serde_json::Value = serde_json::from_str(json).expect("valid JSON");
    value["components"]
        .as_array()
        .expect("components array")
        .iter()
        .map(|comp| {
            comp.as_array()
                .expect("label array")
                .iter()
                .map(|l| l.as_str().expect("label string").to_string())
                .collect()
        })
        .collect()
}

fn set_of(lists: &[&[&str]]) -> BTreeSet<Vec<String>> {
    lists
        .iter()
        .map(|ls| ls.iter().map(|s| s.to_string()).collect())
        .collect()
}

/// All SI-sequences with h_1 <= max_h1, socle <= max_s, entries <= cap.
fn si_sequences(max_h1: i64, max_s: usize, cap: i64) -> Vec<HVector> {
    let mut out = Vec::new();
    for s in 0..=max_s {
        let mut halves: Vec<Vec<i64>> = vec![vec![1i64]];
        for _ in 0..s / 2 {
            let mut next = Vec::new();
            for prefix in &halves {
                for value in 1..=cap {
                    let mut longer = prefix.clone();
                    longer.push(value);
                    next.push(longer);
                }
            }
            halves = next;
        }
        for half in halves {
            let mut full = half.clone();
            while full.len() < s + 1 {
                full.push(half[s - full.len()]);
            }
            let candidate = hv(&full);
            if candidate.socle_degree() == s
                && candidate.get(1) <= max_h1
                && is_si_sequence(&candidate)
            {
                out.push(candidate);
            }
        }
    }
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out.dedup();
    out
}

/// The maximal (flat-topped) SI-sequence for (c, s, t).
fn maximal_h(c: usize, s: usize, t: usize) -> HVector {
    let entries: Vec<i64> = (0..=s as i64)
        .map(|i| {
            let i = i.min(s as i64 - i).min(t as i64);
            binomial(c as i64 - 1 + i, i).unwrap()
        })
        .collect();
    HVector::new(entries)
}

#[test]
fn criterion_01_golden_z_components() {
    let start = Instant::now();
    let (out, _, code) = run_cli(&["build", "z", "1,2", "-c", "2", "-t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_components(&out),
        set_of(&[&["M0", "L0"], &["M0", "L1"], &["M1", "L1"]])
    );
    let (out, _, code) = run_cli(&["build", "z", "1,2", "-c", "2", "-t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_components(&out),
        set_of(&[&["M1", "L1"], &["M1", "L2"], &["M2", "L2"]])
    );
    let (out, _, code) = run_cli(&["build", "z", "1,2,2", "-c", "2", "-t", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_components(&out),
        set_of(&[
            &["M0", "L1"],
            &["M1", "L1"],
            &["M0", "L2"],
            &["M1", "L2"],
            &["M2", "L2"]
        ])
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1: PASS — golden Z component lists match ({elapsed:?})");
}

#[test]
fn criterion_02_golden_gorenstein_components() {
    let start = Instant::now();
    let (out, _, code) = run_cli(&["build", "gmax", "-c", "4", "-s", "3", "-t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        parse_components(&out),
        set_of(&[
            &["M0", "L0", "M1", "L1"],
            &["M0", "L0", "M1", "L2"],
            &["M0", "L0", "M2", "L2"],
            &["M0", "L1", "M2", "L2"],
            &["M1", "L1", "M2", "L2"],
            &["L0", "M1", "L1", "M2"],
            &["M0", "L0", "M1", "L3"],
            &["M0", "L0", "M2", "L3"],
            &["M0", "L1", "M2", "L3"],
            &["M1", "L1", "M2", "L3"]
        ])
    );
    let parsed: Configuration = serde_json::from_str(&out).expect("configuration JSON");
    assert_eq!(hvector_of(&parsed).unwrap(), hv(&[1, 4, 4, 1]));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 2: PASS — G_max(4,3,1) has the 10 golden components and h-vector 1,4,4,1 ({elapsed:?})");
}

#[test]
fn criterion_03_construction_sweep() {
    let start = Instant::now();
    let sweep = si_sequences(4, 6, 20);
    assert!(sweep.len() >= 50, "sweep should be substantial, got {}", sweep.len());
    for h in &sweep {
        let p = si_params(h).unwrap();
        let c = p.c.max(2);
        let g = build_gorenstein(h).unwrap();
        let recovered = hvector_of(&g).unwrap();
        assert_eq!(&recovered, h, "h-vector of the construction for {h}");
        assert!(recovered.is_symmetric());
        let z = build_z(&p.g, c - 1, p.t).unwrap();
        assert!(is_generalized_stick_figure(&z), "Z input for {h}");
        let linking = build_g_max(c - 1, p.s + 1, p.t).unwrap();
        assert!(is_generalized_stick_figure(&linking), "G input for {h}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!(
        "criterion 3: PASS — {} SI-sequences rebuilt with correct symmetric h-vectors ({elapsed:?})",
        sweep.len()
    );
}

#[test]
fn criterion_04_counterexample_fidelity() {
    let start = Instant::now();
    let component = PrimeComponent::new(vec![Label::l(0), Label::m(0), Label::l(1)]);
    let g = build_gorenstein(&hv(&[1, 3, 5, 3, 1])).unwrap();
    assert!(g.contains_component(&component), "(L0,M0,L1) in G_3(h)");
    let gprime = relabel_g_max(3, 4, 2).unwrap();
    assert!(
        !gprime.contains_component(&component),
        "(L0,M0,L1) not in G'_(3,4,2)"
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 4: PASS — the (L0,M0,L1) counterexample separates G_3(h) from G'_(3,4,2) ({elapsed:?})");
}

#[test]
fn criterion_05_betti_diagram_and_boij_bound() {
    let start = Instant::now();
    let (out, _, code) = run_cli(&["betti", "gorenstein", "1,4,10,10,4,1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    let total_tokens: Vec<&str> = lines[0]
        .strip_prefix("total:")
        .expect("total line first")
        .split_whitespace()
        .collect();
    assert_eq!(total_tokens, vec!["1", "16", "30", "16", "1"]);
    let row = |label: &str| -> Vec<String> {
        lines
            .iter()
            .find(|l| l.trim_start().starts_with(label))
            .unwrap_or_else(|| panic!("row {label} present"))
            .split(':')
            .nth(1)
            .unwrap()
            .split_whitespace()
            .map(|s| s.to_string())
            .collect()
    };
    assert_eq!(row("2:"), vec!["-", "10", "15", "6", "-"]);
    assert_eq!(row("3:"), vec!["-", "6", "15", "10", "-"]);
    assert_eq!(row("0:"), vec!["1", "-", "-", "-", "-"]);
    assert_eq!(row("5:"), vec!["-", "-", "-", "-", "1"]);

    // Boij's generic table passes the Gorenstein-mode bound, strictly below
    let boij = BettiTable::from_entries(&[
        (0, 0, 1),
        (1, 3, 10),
        (2, 4, 9),
        (2, 5, 9),
        (3, 6, 10),
        (4, 9, 1),
    ]);
    assert_eq!(boij.totals(), vec![1, 10, 18, 10, 1]);
    let h = hv(&[1, 4, 10, 10, 4, 1]);
    assert!(betti_upper_bound_check(&boij, &h, 4, true).unwrap());
    let max = gorenstein_max_betti(&h).unwrap();
    assert_ne!(boij, max, "strictly below the maximum");
    assert!(max.entries().any(|(i, j, r)| r > boij.get(i, j)));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 5: PASS — Macaulay diagram rows match and Boij's table is strictly dominated ({elapsed:?})");
}

#[test]
fn criterion_06_closed_form_agreement() {
    let start = Instant::now();
    let mut checked = 0usize;
    for c in 1..=5usize {
        for t in 1..=3usize {
            for s in [2 * t, 2 * t + 2, 2 * t + 3] {
                let closed = closed_form_max_resolution(c, s, t).unwrap();
                let from_formula = gorenstein_max_betti(&maximal_h(c, s, t)).unwrap();
                assert_eq!(closed, from_formula, "closed form at ({c},{s},{t})");
                checked += 1;
            }
            assert!(
                matches!(
                    closed_form_max_resolution(c, 2 * t + 1, t),
                    Err(Error::SocleParity { .. })
                ),
                "refusal at ({c},{},{t})",
                2 * t + 1
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 6: PASS — closed form agrees on {checked} (c,s,t) triples and refuses s = 2t+1 ({elapsed:?})");
}

#[test]
fn criterion_07_oracle_equivalence() {
    let start = Instant::now();

    // lex-segment half: all O-sequences with support <= 3 in c <= 3 variables
    let mut lex_checked = 0usize;
    for c in 1..=3usize {
        let mut sweep = vec![hv(&[1])];
        for h1 in 1..=c as i64 {
            sweep.push(hv(&[1, h1]));
            for h2 in 1..=macaulay_bound(h1, 1).unwrap() {
                sweep.push(hv(&[1, h1, h2]));
            }
        }
        for h in sweep {
            let ideal = lex_segment_ideal(&h, c).unwrap();
            let cutoff = h.socle_degree() + c + 1;
            let from_koszul = oracle::koszul_betti(&ideal, cutoff).unwrap();
            let from_recursion = lex_betti(&h, c).unwrap();
            assert_eq!(from_koszul, from_recursion, "lex tables for {h} in {c} vars");
            lex_checked += 1;
        }
    }

    // Gorenstein half: all SI h-vectors whose label universe has <= 8 labels
    let mut gor_checked = 0usize;
    for h in si_sequences(6, 6, 25) {
        let p = si_params(&h).unwrap();
        let c = p.c.max(2);
        if p.s + c > 8 {
            continue;
        }
        let g = build_gorenstein(&h).unwrap();
        let cutoff = p.s + c;
        let from_koszul = oracle::koszul_betti(&g.realize(), cutoff).unwrap();
        let from_formula = gorenstein_formula_table(&p.g, c, p.s).unwrap();
        assert_eq!(from_koszul, from_formula, "Gorenstein tables for {h}");
        if p.c >= 2 {
            // for non-degenerate h the formula is the named operation
            assert_eq!(from_formula, gorenstein_max_betti(&h).unwrap());
        }
        gor_checked += 1;
    }
    assert!(gor_checked >= 20, "got {gor_checked} Gorenstein cases");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 7: PASS — Koszul oracle matches lex recursion on {lex_checked} ideals and the Gorenstein formula on {gor_checked} builds ({elapsed:?})"
    );
}

#[test]
fn criterion_08_liaison_arithmetic() {
    let start = Instant::now();
    assert_eq!(
        sum_linked_hvector(&hv(&[1, 2, 1]), &hv(&[1, 2])).unwrap(),
        hv(&[1, 1])
    );
    assert_eq!(ci_hvector(&[3, 3, 4]), hv(&[1, 3, 6, 8, 8, 6, 3, 1]));

    // the a - b = n - 10 identity, and the feasible range of middle entries
    let cvec = ci_hvector(&[3, 3, 4]);
    let mut feasible: BTreeSet<i64> = BTreeSet::new();
    for a in 0..=8i64 {
        for b in 0..=a {
            let gvec = hv(&[1, 3, 6, a, b]);
            let sum = sum_linked_hvector(&cvec, &gvec).unwrap();
            let n = sum.get(3);
            assert_eq!(n - 10, a - b, "identity at a={a}, b={b}");
            if is_o_sequence(&gvec) {
                feasible.insert(n);
            }
        }
    }
    for n in 14..=18i64 {
        assert!(feasible.contains(&n), "n = {n} feasible");
    }
    assert!(!feasible.contains(&19) && !feasible.contains(&20));
    assert_eq!(feasible.iter().max(), Some(&18));
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 8: PASS — liaison arithmetic and the CI-link obstruction for n = 19, 20 ({elapsed:?})");
}

#[test]
fn criterion_09_polytope_pipeline() {
    let start = Instant::now();
    let sweep = si_sequences(4, 5, 20);
    let mut checked = 0usize;
    for h in &sweep {
        let p = si_params(h).unwrap();
        let c = p.c.max(2);
        let ball = billera_lee_ball(h, BallMode::Polytope).unwrap();
        assert!(
            is_shelling(&ball.complex, &ball.order).unwrap(),
            "shelling order for {h}"
        );
        let boundary = boundary_complex(&ball.complex).unwrap();
        let bh = f_to_h(&faces(&boundary));
        assert!(bh.is_symmetric(), "boundary h-vector symmetric for {h}");
        assert_eq!(&bh, h, "boundary h-vector equals {h}");

        // minimal primes of the boundary SR ideal = complements of facets;
        // they must be the Gorenstein configuration under the label map
        let n = p.s + c;
        let full: u64 = (1 << n) - 1;
        let sr_primes: BTreeSet<Vec<usize>> = boundary
            .facets()
            .iter()
            .map(|&f| (0..n).filter(|v| (full & !f) >> v & 1 == 1).collect())
            .collect();
        let g = build_gorenstein(h).unwrap();
        let mapped: BTreeSet<Vec<usize>> = g
            .components
            .iter()
            .map(|comp| {
                let mut vars: Vec<usize> = comp
                    .labels()
                    .iter()
                    .map(|&l| boundary_variable_of_label(c, p.s, p.t, l))
                    .collect();
                vars.sort();
                vars
            })
            .collect();
        assert_eq!(sr_primes, mapped, "SR primes vs configuration for {h}");
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 9: PASS — boundary complexes realize the Gorenstein configurations for {checked} h-vectors ({elapsed:?})"
    );
}

#[test]
fn criterion_10_subspace_property() {
    let start = Instant::now();
    // colon identity grid
    let mut grid = 0usize;
    for c in 2..=4usize {
        for t in 0..=3usize {
            for s in (2 * t)..=6 {
                let g_label = Label::l(
                    (s as i64 - t as i64 + (c as i64 - 1).div_euclid(2)) as usize,
                );
                let big = build_g_max(c - 1, s + 1, t).unwrap();
                let small = build_g_max(c - 1, s, t).unwrap();
                assert_eq!(
                    colon_by_label(&big, g_label).component_set(),
                    small.component_set(),
                    "colon identity at ({c},{s},{t})"
                );
                grid += 1;
            }
        }
    }
    // sweep: a((J:g)/J) = s - t >= (reg - 1)/2
    let sweep = si_sequences(4, 6, 20);
    for h in &sweep {
        let p = si_params(h).unwrap();
        let report = check_subspace_property(h).unwrap();
        assert!(report.colon_identity, "colon identity for {h}");
        assert_eq!(report.initial_degree, p.s - p.t, "a = s - t for {h}");
        assert!(
            2 * report.initial_degree >= report.reg - 1,
            "a >= (reg-1)/2 for {h}"
        );
        assert!(report.passes);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 10: PASS — colon identity on {grid} grid points and a = s-t on {} h-vectors ({elapsed:?})",
        sweep.len()
    );
}

#[test]
fn criterion_11_hilbert_self_consistency() {
    let start = Instant::now();
    // hvector_of cross-checks its two routes internally; run it over every
    // configuration the sweeps build
    let mut configs = 0usize;
    for h in si_sequences(4, 6, 20) {
        let p = si_params(&h).unwrap();
        let c = p.c.max(2);
        hvector_of(&build_gorenstein(&h).unwrap()).unwrap();
        hvector_of(&build_z(&p.g, c - 1, p.t).unwrap()).unwrap();
        hvector_of(&build_g_max(c - 1, p.s + 1, p.t).unwrap()).unwrap();
        configs += 3;

        // decomposition identity for the lex-segment ideals of the sweep
        for (hh, cc) in [(&h, p.c.max(1)), (&p.g, c - 1)] {
            let ideal = lex_segment_ideal(hh, cc).unwrap();
            let dec = decompose(&ideal).unwrap();
            assert!(decomposition_hvector_check(hh, &dec), "hf identity for {hh}");
        }
    }
    // the oracle equality between realized ideals and SR translation
    for h in [hv(&[1, 3, 5, 3, 1]), hv(&[1, 4, 4, 1]), hv(&[1, 2, 2, 2, 1])] {
        let g = build_gorenstein(&h).unwrap();
        let sr = gorstick::simplicial::sr_ideal(&complex_of(&g)).unwrap();
        assert!(oracle::equals(&g.realize(), &sr).unwrap());
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 11: PASS — two-route h-vectors agree on {configs} configurations and the decomposition identity holds ({elapsed:?})"
    );
}
