//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p cayley-core --test acceptance -- --nocapture` to see them.

use std::time::{Duration, Instant};

use cayley_core::metric::{analytic_lower_bound, check_lemmas, delta0, dist, hom_distance, is_prime, min_transposition_mf};
use cayley_core::search::{
    all_labelings, brute_delta, brute_stability, completed_candidates, prime_stability_verify, BruteLimits,
    BruteScope, RowScope,
};
use cayley_core::{make_group, GroupKind, GroupTable, Permutation};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn report(id: u32, name: &str, ok: bool, elapsed: Duration, limit: Duration, detail: &str) {
    let in_time = elapsed <= limit;
    let status = if ok && in_time { "PASS" } else { "FAIL" };
    println!(
        "criterion {id} [{status}] {name}: {detail} ({:.3}s, limit {:.3}s)",
        elapsed.as_secs_f64(),
        limit.as_secs_f64()
    );
    assert!(ok, "criterion {id} failed: {detail}");
    assert!(in_time, "criterion {id} exceeded its time limit");
}

fn z(n: usize) -> GroupTable {
    make_group(&GroupKind::Cyclic(n))
}

#[test]
fn criterion_1_small_prime_stability() {
    let start = Instant::now();
    let lim = BruteLimits::default();
    let got: Vec<(usize, usize)> = [2, 3, 5, 7]
        .iter()
        .map(|&n| (n, brute_delta(n, BruteScope::All, lim).unwrap().value))
        .collect();
    let expected = vec![(2, 4), (3, 9), (5, 12), (7, 18)];
    report(
        1,
        "brute δ(Z_2), δ(Z_3), δ(Z_5), δ(Z_7)",
        got == expected,
        start.elapsed(),
        Duration::from_secs(60),
        &format!("{got:?}"),
    );
}

#[test]
fn criterion_2_order_seven_pair() {
    let start = Instant::now();
    let z7 = z(7);
    let f = Permutation::from_images(vec![0, 1, 4, 5, 2, 3, 6]).unwrap();
    let other = z7.transport(&f).unwrap();
    let total = dist(&z7, &other).unwrap().total;
    let d0 = delta0(&z7).unwrap();
    let elapsed = start.elapsed();
    report(
        2,
        "dist(Z_7, transport by [0,1,4,5,2,3,6]) = 18 < δ₀ = 24",
        total == 18 && d0 == 24,
        elapsed,
        Duration::from_millis(1),
        &format!("dist {total}, δ₀ {d0}"),
    );
}

#[test]
fn criterion_3_prime_stability_search() {
    let start = Instant::now();
    let mut ok = true;
    let mut details = Vec::new();
    for p in [11, 13, 17, 19, 23, 29, 31] {
        let r = prime_stability_verify(p, false).unwrap();
        let threshold = 6 * p - 18;
        let searched_ok = r
            .m_cases
            .iter()
            .all(|c| c.min_distance_found.is_none_or(|d| d >= threshold));
        let (mf, _) = min_transposition_mf(&z(p)).unwrap();
        let this = searched_ok && mf == threshold && r.conclusion.delta == threshold && r.conclusion.theorem_holds;
        ok &= this;
        let mins: Vec<String> = r
            .m_cases
            .iter()
            .map(|c| format!("m={} min={:?}", c.m, c.min_distance_found))
            .collect();
        details.push(format!("p={p} δ={} [{}]", r.conclusion.delta, mins.join(", ")));
    }

    // All-rows run at p = 11 must reproduce the fixed-row results.
    let fixed = prime_stability_verify(11, false).unwrap();
    let all = prime_stability_verify(11, true).unwrap();
    let same_min = fixed
        .m_cases
        .iter()
        .zip(&all.m_cases)
        .all(|(a, b)| a.m == b.m && a.min_distance_found == b.min_distance_found);
    let mut superset = true;
    for m in [3, 4] {
        let wide: std::collections::HashSet<Vec<usize>> = completed_candidates(11, m, RowScope::AllRows)
            .unwrap()
            .into_iter()
            .map(|c| c.table.cells().to_vec())
            .collect();
        superset &= completed_candidates(11, m, RowScope::FixedH1)
            .unwrap()
            .iter()
            .all(|c| wide.contains(c.table.cells()));
    }
    ok &= same_min && superset && all.conclusion.theorem_holds;
    details.push(format!("all-rows p=11 consistent={}", same_min && superset));
    report(
        3,
        "δ(Z_p) = 6p-18 for p in 11..=31 by pattern search",
        ok,
        start.elapsed(),
        Duration::from_secs(10),
        &details.join("; "),
    );
}

#[test]
fn criterion_4_transpositions_attain_delta0() {
    let start = Instant::now();
    let kinds = [
        GroupKind::Cyclic(5),
        GroupKind::Cyclic(7),
        GroupKind::Cyclic(9),
        GroupKind::Dihedral(3),
        GroupKind::Dihedral(5),
        GroupKind::Cyclic(8),
        GroupKind::direct_product(GroupKind::Cyclic(4), GroupKind::Cyclic(2)),
        GroupKind::ElementaryAbelian(3),
        GroupKind::Quaternion8,
        GroupKind::Cyclic(10),
    ];
    let mut ok = true;
    let mut details = Vec::new();
    for kind in &kinds {
        let t = make_group(kind);
        let (mf, w) = min_transposition_mf(&t).unwrap();
        let d0 = delta0(&t).unwrap();
        ok &= mf == d0;
        details.push(format!("{kind}: {mf}/{d0} via {w}"));
    }
    report(
        4,
        "min transposition m_f = δ₀ on ten groups",
        ok,
        start.elapsed(),
        Duration::from_secs(5),
        &details.join(", "),
    );
}

#[test]
fn criterion_5_nu_order_four() {
    let start = Instant::now();
    let r = brute_delta(4, BruteScope::NonisomorphicOnly, BruteLimits::default()).unwrap();
    report(
        5,
        "ν at order 4 = 2^(2·2-2) = 4",
        r.value == 4,
        start.elapsed(),
        Duration::from_secs(1),
        &format!("ν = {} ({} vs {})", r.value, r.base_kind, r.nearest_kind),
    );
}

#[derive(Default)]
struct Tally {
    pairs: usize,
    violations: usize,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, a: &GroupTable, b: &GroupTable) {
        self.pairs += 1;
        let v = check_lemmas(a, b).unwrap();
        if !v.is_empty() {
            self.violations += v.len();
            self.first.get_or_insert_with(|| format!("{v:?}"));
        }
    }
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    // Half uniform, half short products of transpositions so that near
    // pairs are well represented.
    if rng.gen_bool(0.5) {
        let mut v: Vec<usize> = (0..n).collect();
        v.shuffle(rng);
        Permutation::from_images(v).unwrap()
    } else {
        let mut v: Vec<usize> = (0..n).collect();
        for _ in 0..rng.gen_range(1..=3) {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            v.swap(a, b);
        }
        Permutation::from_images(v).unwrap()
    }
}

#[test]
fn criterion_6_lemma_statements_hold() {
    let start = Instant::now();
    let mut tally = Tally::default();
    for n in [5, 7] {
        let tables = all_labelings(&GroupKind::Cyclic(n));
        for a in &tables {
            for b in &tables {
                tally.check(a, b);
            }
        }
    }
    let exhaustive = tally.pairs;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ca71);
    for n in [9, 11, 13] {
        let base = z(n);
        for _ in 0..100_000 {
            let f = random_perm(&mut rng, n);
            let g = random_perm(&mut rng, n);
            let a = base.transport(&g).unwrap();
            let b = base.transport(&f).unwrap();
            tally.check(&a, &b);
        }
    }
    report(
        6,
        "goodrow / row distance ≠ 1, 2 / agreement subgroup / shared identity",
        tally.violations == 0,
        start.elapsed(),
        Duration::from_secs(120),
        &format!(
            "{exhaustive} exhaustive + {} random pairs, {} violations {}",
            tally.pairs - exhaustive,
            tally.violations,
            tally.first.unwrap_or_default()
        ),
    );
}

#[test]
fn criterion_7_analytic_bounds() {
    let start = Instant::now();
    let m5 = (8..=31).filter(|&p| is_prime(p)).all(|p| analytic_lower_bound(p, 5).unwrap().excluded);
    let m3 = (32..=10007).filter(|&p| is_prime(p)).all(|p| analytic_lower_bound(p, 3).unwrap().excluded);
    let m4 = (8..=10007)
        .filter(|&p| is_prime(p))
        .all(|p| analytic_lower_bound(p, 4).unwrap().excluded == (p > 19));
    report(
        7,
        "analytic exclusion for m=5 (p≤31), m=3 (31<p≤10007), m=4 (exactly p>19)",
        m5 && m3 && m4,
        start.elapsed(),
        Duration::from_secs(1),
        &format!("m=5 {m5}, m=3 {m3}, m=4 {m4}"),
    );
}

#[test]
fn criterion_8_transport_matches_hom_distance() {
    let start = Instant::now();
    let mut checked = 0;
    let mut mismatches = 0;
    for n in [5, 7] {
        let t = z(n);
        for images in (0..n).permutations(n) {
            let f = Permutation::from_images(images).unwrap();
            let lhs = dist(&t, &t.transport(&f).unwrap()).unwrap().total;
            let rhs = hom_distance(f.images(), &t, &t).unwrap();
            checked += 1;
            if lhs != rhs {
                mismatches += 1;
            }
        }
    }
    report(
        8,
        "dist(t, transport(t, f)) = m_f for all f at n = 5, 7",
        checked == 120 + 5040 && mismatches == 0,
        start.elapsed(),
        Duration::from_secs(10),
        &format!("{checked} permutations, {mismatches} mismatches"),
    );
}

#[test]
fn criterion_9_order_eight_exceptions() {
    let start = Instant::now();
    let lim = BruteLimits { allow_slow: true, ..BruteLimits::default() };
    let mut ok = true;
    let mut details = Vec::new();
    for kind in [GroupKind::ElementaryAbelian(3), GroupKind::Quaternion8] {
        let mu = brute_stability(&kind, BruteScope::IsomorphicOnly, lim).unwrap().value;
        let nu = brute_stability(&kind, BruteScope::NonisomorphicOnly, lim).unwrap().value;
        ok &= mu >= nu;
        details.push(format!("{kind}: μ={mu} ν={nu}"));
    }
    report(
        9,
        "μ ≥ ν for E_8 and Q_8",
        ok,
        start.elapsed(),
        Duration::from_secs(60),
        &details.join(", "),
    );
}
