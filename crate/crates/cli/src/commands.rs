use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use cayley_core::format::{parse_permutation, parse_table, parse_table_rows, write_table};
use cayley_core::metric::{
    analytic_lower_bound, check_lemmas, delta0, dist, hom_distance, is_prime, light_set, min_transposition_mf,
    reconstruct_isomorphism, MetricError,
};
use cayley_core::search::{brute_delta, prime_stability_verify, BruteLimits, BruteScope, SEARCH_MAX_PRIME};
use cayley_core::{find_isomorphism, is_dihedral_twice_odd, make_group, GroupKind, GroupTable, Permutation};
use serde_json::{json, Value};

use crate::output::{perm_entries, perm_witness, rows, Output, Status};

pub type CmdResult = Result<Output, String>;

pub fn load_table(path: &Path) -> Result<GroupTable, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_table(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_or_print(table: &GroupTable, out: Option<&Path>) -> Result<String, String> {
    let text = write_table(table);
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(format!("wrote {} (order {})\n", path.display(), table.order()))
        }
        None => Ok(text),
    }
}

pub fn parse_perm(perm: Option<&str>, cycles: Option<&str>, n: usize) -> Result<Permutation, String> {
    let text = perm.or(cycles).ok_or("one of --perm or --cycles is required")?;
    parse_permutation(text, n).map_err(|e| format!("`{text}`: {e}"))
}

pub fn validate(path: &Path) -> CmdResult {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let rows = parse_table_rows(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let out = match GroupTable::from_rows(&rows) {
        Ok(t) => Output::new(
            "validate",
            json!({ "valid": true, "order": t.order(), "identity": t.identity(), "abelian": t.is_abelian() }),
            format!("valid group of order {} with identity {}\n", t.order(), t.identity()),
        ),
        Err(e) => Output::new(
            "validate",
            json!({ "valid": false, "order": rows.len(), "error": e.to_string() }),
            format!("not a group: {e}\n"),
        )
        .status(Status::Violation),
    };
    Ok(out.param("table", path))
}

pub fn distance(a_path: &Path, b_path: &Path, profile: bool) -> CmdResult {
    let (a, b) = (load_table(a_path)?, load_table(b_path)?);
    let p = dist(&a, &b).map_err(|e| e.to_string())?;
    let mut result = json!({
        "total": p.total,
        "m": p.m,
        "agreement": p.agreement,
        "identities": [p.identities.0, p.identities.1],
    });
    let mut text = format!("dist = {}\n", p.total);
    if profile {
        result["row"] = json!(p.row);
        for (g, d) in p.row.iter().enumerate() {
            let _ = writeln!(text, "  d({g}) = {d}");
        }
        let m = p.m.map_or("undefined (identities differ)".to_string(), |m| m.to_string());
        let _ = writeln!(text, "m = {m}\nagreement = {:?}", p.agreement);
    }
    Ok(Output::new("dist", result, text).param("a", a_path).param("b", b_path).param("profile", profile))
}

pub fn delta0_cmd(path: &Path) -> CmdResult {
    let t = load_table(path)?;
    let value = delta0(&t).map_err(|e| e.to_string())?;
    let branch = if t.order() % 2 == 1 {
        "odd"
    } else if is_dihedral_twice_odd(&t) {
        "dihedral_twice_odd"
    } else {
        "other"
    };
    Ok(Output::new(
        "delta0",
        json!({ "delta0": value, "branch": branch, "order": t.order() }),
        format!("delta0 = {value} ({branch})\n"),
    )
    .param("table", path))
}

pub fn mf(path: &Path, perm: Option<&str>, cycles: Option<&str>, target: Option<&Path>) -> CmdResult {
    let t = load_table(path)?;
    let k = match target {
        Some(p) => load_table(p)?,
        None => t.clone(),
    };
    let f = parse_perm(perm, cycles, t.order())?;
    let value = hom_distance(f.images(), &t, &k).map_err(|e| e.to_string())?;
    Ok(Output::new("mf", json!({ "mf": value }), format!("m_f = {value} for f = {f}\n"))
        .param("table", path)
        .param("target", target)
        .witnesses(perm_witness("f", &f)))
}

pub fn transport(path: &Path, perm: Option<&str>, cycles: Option<&str>, out: Option<&Path>) -> CmdResult {
    let t = load_table(path)?;
    let f = parse_perm(perm, cycles, t.order())?;
    let moved = t.transport(&f).map_err(|e| e.to_string())?;
    let text = write_or_print(&moved, out)?;
    Ok(Output::new(
        "transport",
        json!({ "identity": moved.identity(), "table": rows(&moved), "distance": dist(&t, &moved).unwrap().total }),
        text,
    )
    .param("table", path)
    .param("out", out)
    .witnesses(perm_witness("f", &f)))
}

pub fn make(kind: &str, out: Option<&Path>) -> CmdResult {
    let parsed: GroupKind = kind.parse().map_err(|e| format!("--kind `{kind}`: {e}"))?;
    let t = make_group(&parsed);
    let text = write_or_print(&t, out)?;
    Ok(Output::new("make", json!({ "order": t.order(), "table": rows(&t) }), text)
        .param("kind", parsed.to_string())
        .param("out", out))
}

pub fn min_transposition(path: &Path) -> CmdResult {
    let t = load_table(path)?;
    let (value, w) = min_transposition_mf(&t).map_err(|e| e.to_string())?;
    let d0 = delta0(&t).map_err(|e| e.to_string())?;
    Ok(Output::new(
        "min-transposition",
        json!({ "mf": value, "delta0": d0, "equals_delta0": value == d0 }),
        format!("min m_f over transpositions = {value} via {w} (delta0 = {d0})\n"),
    )
    .param("table", path)
    .witnesses(perm_witness("transposition", &w))
    .count("transpositions", t.order() * (t.order() - 1) / 2))
}

pub fn reconstruct(a_path: &Path, b_path: &Path) -> CmdResult {
    let (a, b) = (load_table(a_path)?, load_table(b_path)?);
    let light = light_set(&a, &b).map_err(|e| e.to_string())?;
    let out = match reconstruct_isomorphism(&a, &b) {
        Ok(f) => Output::new(
            "reconstruct",
            json!({ "hypothesis_met": true, "light_set": light }),
            format!("isomorphism fixing the light set: {f}\n"),
        )
        .witnesses(perm_witness("f", &f)),
        Err(MetricError::HypothesisNotMet { light: size, n }) => Output::new(
            "reconstruct",
            json!({ "hypothesis_met": false, "light_set": light }),
            format!("light set has {size} of {n} rows; need more than 3n/4\n"),
        ),
        Err(MetricError::OrderMismatch { left, right }) => {
            return Err(format!("order mismatch: {left} vs {right}"));
        }
        Err(e) => Output::new(
            "reconstruct",
            json!({ "hypothesis_met": true, "light_set": light, "error": e.to_string() }),
            format!("reconstruction failed: {e}\n"),
        )
        .status(Status::Violation),
    };
    Ok(out.param("a", a_path).param("b", b_path))
}

pub fn bounds(p: usize, m: usize) -> CmdResult {
    let r = analytic_lower_bound(p, m).map_err(|e| e.to_string())?;
    let mut text = String::new();
    for b in &r.bounds {
        let _ = writeln!(text, "  {:<28} {}", b.name, b.value);
    }
    let _ = writeln!(
        text,
        "best {} vs threshold {}: {}",
        r.best,
        r.threshold,
        if r.excluded { "excluded" } else { "not excluded" }
    );
    Ok(Output::new("bounds", serde_json::to_value(&r).unwrap(), text).param("p", p).param("m", m))
}

pub fn lemmas(a_path: &Path, b_path: &Path) -> CmdResult {
    let (a, b) = (load_table(a_path)?, load_table(b_path)?);
    let violations = check_lemmas(&a, &b).map_err(|e| e.to_string())?;
    let text = if violations.is_empty() {
        "all lemma statements hold\n".to_string()
    } else {
        violations.iter().map(|v| format!("violation: {v:?}\n")).collect()
    };
    let status = if violations.is_empty() { Status::Ok } else { Status::Violation };
    Ok(Output::new("check-lemmas", json!({ "violations": violations }), text)
        .param("a", a_path)
        .param("b", b_path)
        .count("violations", violations.len())
        .status(status))
}

pub fn verify(p: usize, all_rows: bool, threads: Option<usize>) -> CmdResult {
    if !is_prime(p) {
        return Err(format!("--prime {p}: not prime"));
    }
    if p <= 7 {
        return Err(format!("--prime {p}: stability differs below 11; use `oracle --order {p}`"));
    }
    if p > SEARCH_MAX_PRIME {
        return Ok(analytic_regime(p).param("prime", p).param("all_rows", all_rows));
    }
    let run = || prime_stability_verify(p, all_rows);
    let report = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| format!("--threads {n}: {e}"))?
            .install(run),
        None => run(),
    }
    .map_err(|e| e.to_string())?;

    let mut text = format!("p = {p}, threshold 6p-18 = {}\n", report.threshold);
    let mut witnesses = serde_json::Map::new();
    let (mut enumerated, mut completing) = (0, 0);
    for c in &report.m_cases {
        enumerated += c.candidates_enumerated;
        completing += c.candidates_completing_to_group;
        let min = c.min_distance_found.map_or("none".to_string(), |d| d.to_string());
        let _ = writeln!(
            text,
            "  m = {}: {} candidates, {} complete to a group, min distance {min}",
            c.m, c.candidates_enumerated, c.candidates_completing_to_group
        );
        if let Some(w) = &c.witness {
            witnesses.insert(format!("m{}", c.m), serde_json::to_value(w).unwrap());
        }
    }
    for b in &report.analytic_exclusions {
        let _ = writeln!(text, "  m = {}{}: excluded analytically ({} >= {})", b.m, if b.m == 6 { "+" } else { "" }, b.best, b.threshold);
    }
    let c = &report.conclusion;
    perm_entries(&mut witnesses, "transposition", &c.transposition_witness);
    let _ = writeln!(
        text,
        "delta(Z_{p}) = {} via transposition {}: {}",
        c.delta,
        c.transposition_witness,
        if c.theorem_holds { "verified" } else { "VIOLATION" }
    );
    let status = if c.theorem_holds { Status::Ok } else { Status::Violation };
    Ok(Output::new("verify", serde_json::to_value(&report).unwrap(), text)
        .param("prime", p)
        .param("all_rows", all_rows)
        .witnesses(Value::Object(witnesses))
        .count("candidates_enumerated", enumerated)
        .count("candidates_completing", completing)
        .status(status))
}

fn analytic_regime(p: usize) -> Output {
    let reports: Vec<_> = (3..=6).map(|m| analytic_lower_bound(p, m).expect("p is a prime above 7")).collect();
    let all_excluded = reports.iter().all(|r| r.excluded);
    let mut text = format!("p = {p} is above the searched range; analytic bounds only\n");
    for r in &reports {
        let _ = writeln!(text, "  m = {}: best {} vs {} ({})", r.m, r.best, r.threshold, if r.excluded { "excluded" } else { "open" });
    }
    Output::new(
        "verify",
        json!({ "regime": "analytic", "p": p, "threshold": 6 * p - 18, "bounds": reports, "all_excluded": all_excluded }),
        text,
    )
    .status(if all_excluded { Status::Ok } else { Status::Violation })
}

pub fn oracle(order: usize, scope: &str, allow_slow: bool, max_order: usize) -> CmdResult {
    let brute_scope = match scope {
        "all" => BruteScope::All,
        "mu" => BruteScope::IsomorphicOnly,
        "nu" => BruteScope::NonisomorphicOnly,
        other => return Err(format!("--scope `{other}`: expected all, mu or nu")),
    };
    let limits = BruteLimits { max_order, allow_slow };
    let r = brute_delta(order, brute_scope, limits).map_err(|e| e.to_string())?;
    let symbol = match brute_scope {
        BruteScope::All => "delta",
        BruteScope::IsomorphicOnly => "mu",
        BruteScope::NonisomorphicOnly => "nu",
    };
    let text = format!(
        "{symbol} at order {order} = {} ({} vs {})\n",
        r.value, r.base_kind, r.nearest_kind
    );
    Ok(Output::new(
        "oracle",
        json!({ "value": r.value, "scope": scope, "base_kind": r.base_kind.to_string(), "nearest_kind": r.nearest_kind.to_string() }),
        text,
    )
    .param("order", order)
    .param("scope", scope)
    .param("allow_slow", allow_slow)
    .witnesses(json!({ "base": rows(&r.base), "nearest": rows(&r.nearest) }))
    .count("tables_compared", r.tables_compared))
}

pub fn isomorphic(a_path: &Path, b_path: &Path, max_order: usize) -> CmdResult {
    let (a, b) = (load_table(a_path)?, load_table(b_path)?);
    let found = find_isomorphism(&a, &b, max_order).map_err(|e| e.to_string())?;
    let mut out = Output::new(
        "isomorphic",
        json!({ "isomorphic": found.is_some() }),
        match &found {
            Some(f) => format!("isomorphic via {f}\n"),
            None => "not isomorphic\n".to_string(),
        },
    );
    if let Some(f) = &found {
        out = out.witnesses(perm_witness("f", f));
    }
    Ok(out.param("a", a_path).param("b", b_path))
}
