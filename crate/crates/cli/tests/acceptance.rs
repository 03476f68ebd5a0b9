//! Acceptance gate: ten numbered end-to-end checks, each asserting its
//! stated tolerance (all exact) and printing one pass line. Run with
//! `cargo test --test acceptance -- --nocapture` to see every line.
//!
//! The checks recompute their claims through the public API rather than
//! trusting the verification suites alone; the suites are asserted too,
//! so a regression in either layer fails here.

use bblab::report::AnalysisReport;
use bblab_core::bounds::{
    check_main2, check_new_bounds, check_old_bounds, h_prime, klee_check, kuhnel_check,
    pseudopower, Verdict,
};
use bblab_core::complex::{g2_from_f, h_vector, SimplicialComplex};
use bblab_core::constructions::{corpus, corpus_entry, hd_connected_sum};
use bblab_core::facering::GradedQuotient;
use bblab_core::field::PrimeField;
use bblab_core::homology::{is_buchsbaum, is_semi_eulerian, reduced_betti, BettiVector};
use bblab_core::posets::{available_x_indices, construct_x, glue, h_prime_poset, poset_f_h};
use bblab_core::suites::run_suite;
use bblab_core::DEFAULT_SEED;
use num_bigint::BigInt;
use rand_core::{RngCore, SeedableRng};
use std::collections::BTreeSet;
use std::process::Command;

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn big_field() -> PrimeField {
    field(32003)
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out: i64 = 1;
    for i in 0..k {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

struct Member {
    name: String,
    k: SimplicialComplex,
    d: usize,
    h: Vec<i64>,
}

fn members() -> Vec<Member> {
    corpus()
        .into_iter()
        .map(|e| {
            let k = e.build().unwrap();
            let d = k.rank_d().unwrap();
            let h = h_vector(&k.f_vector().unwrap(), d);
            Member { name: e.name.to_string(), k, d, h }
        })
        .collect()
}

#[test]
fn c01_quotient_dimensions_equal_the_corrected_h_vector() {
    assert!(run_suite("schenzel", DEFAULT_SEED).unwrap().passed());
    let big = big_field();
    let all = members();
    for m in &all {
        assert!(is_buchsbaum(&m.k, &big).unwrap(), "{} is in the checked class", m.name);
        let beta = reduced_betti(&m.k, &big).unwrap();
        let hp = h_prime(&m.h, &beta);
        let gq = GradedQuotient::compute(&m.k, &big, DEFAULT_SEED).unwrap();
        for j in 0..=m.d {
            assert_eq!(gq.q[j] as i64, hp.h_prime[j], "{} degree {j}", m.name);
        }
        assert_eq!(gq.q[m.d + 1], 0, "{} vanishes above the top degree", m.name);
    }
    let rp2 = &all.iter().find(|m| m.name == "rp2_6").unwrap().k;
    let q_two = GradedQuotient::compute(rp2, &field(2), DEFAULT_SEED).unwrap().q;
    let q_big = GradedQuotient::compute(rp2, &big, DEFAULT_SEED).unwrap().q;
    assert_eq!(q_two[3] - q_big[3], 1, "characteristic split in degree 3 is exactly 1");
    println!(
        "PASS  1  quotient dimensions = corrected h-vector on {} members; \
         char-2 vs char-32003 split on rp2_6 is exactly 1 in degree 3",
        all.len()
    );
}

#[test]
fn c02_socle_dimensions_dominate_scaled_betti_numbers_with_tight_poset_cases() {
    assert!(run_suite("main2", DEFAULT_SEED).unwrap().passed());
    let big = big_field();
    for m in &members() {
        let beta = reduced_betti(&m.k, &big).unwrap();
        let gq = GradedQuotient::compute(&m.k, &big, DEFAULT_SEED).unwrap();
        for j in 0..=m.d {
            let lower = binom(m.d, j) * beta.beta(j as i64 - 1) as i64;
            assert!(
                gq.s[j] as i64 >= lower,
                "{}: socle dimension in degree {j} is at least {lower}",
                m.name
            );
        }
    }
    // Designed equality cases through the poset path.
    for d in 3..=5usize {
        let p = construct_x(1, d).unwrap();
        let (hp, beta) = h_prime_poset(&p, &big).unwrap();
        assert_eq!(hp.h_prime[2], binom(d, 2) * beta.beta(1) as i64, "X(1,{d}) tight at j=2");
        assert!(check_main2(&hp, &beta).passed());
    }
    for d in 4..=5usize {
        let p = construct_x(d - 2, d).unwrap();
        let (hp, beta) = h_prime_poset(&p, &big).unwrap();
        assert_eq!(
            hp.h_prime[d - 1],
            binom(d, d - 1) * beta.beta(d as i64 - 2) as i64,
            "X({},{d}) tight at j={}",
            d - 2,
            d - 1
        );
        assert!(check_main2(&hp, &beta).passed());
    }
    println!(
        "PASS  2  socle bound s_j >= C(d,j) beta_(j-1) on all members; \
         equality at j=2 on X(1,d) d=3..5 and at j=d-1 on X(d-2,d) d=4..5"
    );
}

#[test]
fn c03_kernel_dominates_socle_dominates_scaled_betti() {
    let big = big_field();
    let all = members();
    for m in &all {
        let beta = reduced_betti(&m.k, &big).unwrap();
        let gq = GradedQuotient::compute(&m.k, &big, DEFAULT_SEED).unwrap();
        for j in 0..=m.d {
            let lower = binom(m.d, j) * beta.beta(j as i64 - 1) as i64;
            assert!(gq.k[j] >= gq.s[j], "{} degree {j}: kernel contains the socle", m.name);
            assert!(gq.s[j] as i64 >= lower, "{} degree {j}", m.name);
        }
    }
    let torus = all.iter().find(|m| m.name == "torus_7").unwrap();
    let gq = GradedQuotient::compute(&torus.k, &big, DEFAULT_SEED).unwrap();
    assert!(gq.k[2] >= 6, "torus kernel floor in degree 2");
    println!(
        "PASS  3  k_j >= s_j >= C(d,j) beta_(j-1) on all {} members; torus_7 has k_2 = {} >= 6",
        all.len(),
        gq.k[2]
    );
}

#[test]
fn c04_sharper_upper_bounds_hold_and_imply_the_weaker_ones() {
    assert!(run_suite("newbounds", DEFAULT_SEED).unwrap().passed());
    let big = big_field();

    // The torus values, exactly.
    let torus = corpus_entry("torus_7").unwrap().build().unwrap();
    let h = h_vector(&torus.f_vector().unwrap(), 3);
    let beta = reduced_betti(&torus, &big).unwrap();
    let hp = h_prime(&h, &beta);
    assert_eq!(hp.h_prime[3], 1);
    let report = check_new_bounds(&h, &hp, &beta);
    assert!(report.passed());
    assert_eq!((report.checks[1].left.as_str(), report.checks[1].right.as_str()), ("1", "5"));

    // 500 seeded random profiles: wherever the sharper check passes, the
    // weaker one does; with no inapplicable entries the whole report
    // implication holds as well.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xACCE97);
    for sample in 0..500 {
        let d = 2 + (rng.next_u64() % 5) as usize;
        let mut h = vec![1i64];
        for _ in 1..=d {
            h.push((rng.next_u64() % 16) as i64 - 3);
        }
        let entries: Vec<usize> = (0..=d).map(|_| (rng.next_u64() % 3) as usize).collect();
        let beta = BettiVector::from_entries(2, entries);
        let hp = h_prime(&h, &beta);
        let new = check_new_bounds(&h, &hp, &beta);
        let old = check_old_bounds(&h, &hp, &beta);
        assert_eq!(new.checks.len(), old.checks.len());
        for (cn, co) in new.checks.iter().zip(&old.checks) {
            if cn.verdict == Verdict::Pass {
                assert!(
                    co.verdict == Verdict::Pass,
                    "sample {sample}: {} passed but {} did not (h={h:?})",
                    cn.label,
                    co.label
                );
            }
        }
        if new.passed() && new.checks.iter().all(|c| c.verdict != Verdict::NotApplicable) {
            assert!(old.passed(), "sample {sample}: report-level implication (h={h:?})");
        }
    }
    println!(
        "PASS  4  sharper bounds pass the corpus; torus_7 pins h'_3 = 1 <= 5 exactly; \
         sharper => weaker on 500 seeded samples"
    );
}

#[test]
fn c05_flipped_h_identity_is_exact_on_every_semi_eulerian_member() {
    assert!(run_suite("klee", DEFAULT_SEED).unwrap().passed());
    let mut checked = 0;
    for m in &members() {
        assert!(is_semi_eulerian(&m.k).unwrap(), "{} qualifies", m.name);
        let chi = m.k.euler_characteristic().unwrap();
        let report = klee_check(&m.h, chi, m.d);
        assert!(report.passed(), "{}", m.name);
        assert!(
            report.checks.iter().all(|c| c.tight()),
            "{}: the identity holds with zero slack at every index",
            m.name
        );
        checked += 1;
    }
    println!("PASS  5  h-vector flip identity exact at every index on {checked} members");
}

#[test]
fn c06_vertex_count_bound_holds_with_exactly_two_embedded_equality_cases() {
    assert!(run_suite("kuhnel", DEFAULT_SEED).unwrap().passed());
    let mut tight_embedded = Vec::new();
    for e in corpus() {
        let m = e.build().unwrap();
        let d = m.rank_d().unwrap();
        let dim = d as i64 - 1;
        if dim <= 0 || dim % 2 != 0 {
            continue;
        }
        let chi = m.euler_characteristic().unwrap();
        let report = kuhnel_check(m.n() as u64, (dim / 2) as u64, chi);
        assert!(report.passed(), "{}", e.name);
        if e.embedded && report.checks.iter().all(|c| c.tight()) {
            assert!(m.is_neighborly(1), "{}: equality forces 2-neighborliness", e.name);
            tight_embedded.push(e.name.to_string());
        }
    }
    assert_eq!(tight_embedded, vec!["torus_7".to_string(), "rp2_6".to_string()]);
    println!(
        "PASS  6  vertex-count bound holds on every even-dimensional member; equality exactly \
         on torus_7 (n=7) and rp2_6 (n=6), both 2-neighborly"
    );
}

#[test]
fn c07_handles_pin_beta_and_g2_exactly() {
    assert!(run_suite("g2", DEFAULT_SEED).unwrap().passed());
    let big = big_field();
    let handle = corpus_entry("handle_4_16").unwrap().build().unwrap();
    let d = handle.rank_d().unwrap();
    for p in [2u64, 3, 32003] {
        assert_eq!(reduced_betti(&handle, &field(p)).unwrap().beta(1), 1, "p={p}");
    }
    assert_eq!(g2_from_f(&handle.f_vector().unwrap(), d), 10);

    let mut sum = handle.clone();
    for count in 2..=3i64 {
        let f1 = sum.facets_original_labels()[0].clone();
        let f2 = handle.facets_original_labels()[0].clone();
        let bij: Vec<(u64, u64)> = f1.iter().copied().zip(f2.iter().copied()).collect();
        sum = hd_connected_sum(&sum, &handle, &f1, &f2, &bij).unwrap();
        let beta = reduced_betti(&sum, &big).unwrap();
        assert_eq!(beta.beta(1) as i64, count, "m={count} summands");
        assert_eq!(g2_from_f(&sum.f_vector().unwrap(), d), 10 * count, "m={count}");
    }
    for name in ["stacked_3_10", "stacked_4_16"] {
        let k = corpus_entry(name).unwrap().build().unwrap();
        assert_eq!(g2_from_f(&k.f_vector().unwrap(), k.rank_d().unwrap()), 0, "{name}");
    }
    println!(
        "PASS  7  handle: beta_1 = 1 and g_2 = 10 exactly; m-fold sums give g_2 = 10m \
         (m = 2, 3); stacked spheres give g_2 = 0"
    );
}

/// All exponent vectors of total degree `deg` on `m` variables, ascending
/// lexicographically.
fn monomials_lex(m: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == m {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=deg {
            prefix.push(e);
            rec(m, deg - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    rec(m, deg, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Largest initial lex segment of degree-(j+1) monomials whose lower
/// shadow stays within `l` monomials: the brute-force maximum next-degree
/// count over compressed multicomplexes.
fn shadow_oracle(l: u64, j: usize) -> u64 {
    let m = if j == 1 { l as usize } else { 6 };
    if m == 0 {
        return 0;
    }
    let mut shadow: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut best = 0;
    for (t, e) in monomials_lex(m, j as u32 + 1).iter().enumerate() {
        for i in 0..m {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                shadow.insert(e2);
            }
        }
        if shadow.len() as u64 <= l {
            best = t as u64 + 1;
        } else {
            break;
        }
    }
    best
}

#[test]
fn c08_pseudopower_equals_brute_force_shadow_enumeration() {
    for j in 1..=3usize {
        for l in 0..=20u64 {
            assert_eq!(pseudopower(l, j), BigInt::from(shadow_oracle(l, j)), "l={l} j={j}");
        }
    }
    println!("PASS  8  pseudopower = brute-force maximal growth for l <= 20, j <= 3 (exact)");
}

#[test]
fn c09_poset_family_and_all_pairwise_glues_pass_with_exact_additivity() {
    let suite = run_suite("posets", DEFAULT_SEED).unwrap();
    assert!(suite.passed());
    assert_eq!(suite.reports.len(), 63);
    let additivity: Vec<_> =
        suite.reports.iter().filter(|r| r.name.starts_with("posets additivity")).collect();
    assert_eq!(additivity.len(), 26, "one additivity report per unordered pair, d = 3..5");
    assert!(additivity.iter().all(|r| r.checks.iter().all(|c| c.tight())));

    // Family coverage as stated: indices {0, 1, d-2, d-1} for each rank.
    for d in 3..=5usize {
        let mut expected: Vec<usize> = [0, 1, d - 2, d - 1].into();
        expected.sort_unstable();
        expected.dedup();
        assert_eq!(available_x_indices(d), expected);
    }

    // One glue recomputed from scratch as a spot check of the arithmetic.
    let big = big_field();
    let x13 = construct_x(1, 3).unwrap();
    let top = x13.maximal_cell_ids().remove(0);
    let bij: Vec<(String, String)> = x13
        .atom_ids(&top)
        .unwrap()
        .into_iter()
        .zip(x13.atom_ids(&top).unwrap())
        .collect();
    let q = glue(&x13, &x13, &top, &top, &bij).unwrap();
    q.validate().unwrap();
    let prof = poset_f_h(&q);
    assert_eq!(prof.f, vec![1, 3, 9, 5]);
    let (hp, beta) = h_prime_poset(&q, &big).unwrap();
    assert_eq!(beta.entries(), &[0, 0, 2, 0]);
    assert_eq!(hp.h_prime, vec![1, 0, 6, 0]);
    assert!(check_main2(&hp, &beta).passed());
    println!(
        "PASS  9  poset family X(i,d) d=3..5 and all 26 pairwise glues pass; \
         rank, homology, and corrected-h additivity are exact"
    );
}

#[test]
fn c10_reports_are_byte_deterministic_and_quotients_are_seed_stable() {
    let exe = env!("CARGO_BIN_EXE_bblab");
    let run = |name: &str, seed: &str| {
        let out = Command::new(exe)
            .args(["analyze", name, "--field", "32003", "--seed", seed])
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let mut names = 0;
    for e in corpus() {
        let a = run(e.name, "424242");
        let b = run(e.name, "424242");
        assert_eq!(a, b, "{}: identical seeds give identical bytes", e.name);
        let c = run(e.name, "424243");
        assert_ne!(a, c, "{}: the seed is embedded, so reports differ", e.name);
        let ra: AnalysisReport = serde_json::from_slice(&a).unwrap();
        let rc: AnalysisReport = serde_json::from_slice(&c).unwrap();
        let qa = &ra.complex.as_ref().unwrap().per_field[0].algebra.as_ref().unwrap().q;
        let qc = &rc.complex.as_ref().unwrap().per_field[0].algebra.as_ref().unwrap().q;
        assert_eq!(qa, qc, "{}: quotient dimensions are seed-independent", e.name);
        names += 1;
    }
    println!(
        "PASS 10  analyze is byte-deterministic per seed and quotient dimensions \
         agree across seeds on all {names} members"
    );
}
