//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use neobalco::cli::{run, EXIT_OK, EXIT_USAGE};
use neobalco::identities::TheoremId;
use neobalco::neobalco::{
    is_neo_balcobalancing, neo_quad_binet, neo_quad_closed, neo_quad_recurrence, order3_step,
};
use neobalco::{identities, oracle, pell, sequences, Int, Result};

type Check = fn() -> Result<Vec<String>>;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("neobalco").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8_lossy(&out).into(),
        String::from_utf8_lossy(&err).into(),
    )
}

fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn three_paths() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for n in 1..=60 {
        let closed = neo_quad_closed::<Int>(n)?;
        if neo_quad_binet::<Int>(n)? != closed || neo_quad_recurrence::<Int>(n)? != closed {
            bad.push(format!("paths disagree at n = {n}"));
        }
        if n <= 10 && neo_quad_closed::<i64>(n)?.b.to_string() != closed.b.to_string() {
            bad.push(format!("i64 and big integer differ at n = {n}"));
        }
    }
    Ok(bad)
}

fn oracle_scan() -> Result<Vec<String>> {
    let max = 300_000i64;
    let hits = oracle::scan(&max)?;
    let ns: Vec<i64> = hits.iter().map(|h| h.n).collect();
    let rs: Vec<i64> = hits.iter().map(|h| h.r).collect();
    let mut bad = Vec::new();
    if ns != [0, 6, 180, 6090, 206856] {
        bad.push(format!("hits n = {ns:?}"));
    }
    if rs != [1, 1, 73, 2521, 85681] {
        bad.push(format!("hits r = {rs:?}"));
    }
    if !oracle::hits_match_closed_forms(&hits, &max)? {
        bad.push("scan disagrees with closed-form enumeration".into());
    }
    Ok(bad)
}

fn pell_orbit() -> Result<Vec<String>> {
    let orbit = pell::solve_orbit::<Int>(40)?;
    let mut bad = Vec::new();
    if orbit.len() != 40 {
        bad.push(format!("orbit length {}", orbit.len()));
    }
    for (i, p) in orbit.iter().enumerate() {
        let n = i as i64 + 1;
        if !pell::is_solution(p) {
            bad.push(format!("({}, {}) does not solve the equation", p.x, p.y));
        }
        if pell::orbit_closed_form::<Int>(n)? != *p {
            bad.push(format!("closed form differs at n = {n}"));
        }
        if pell::matrix_power::<Int>(n)? != pell::matrix_power_closed::<Int>(n)? {
            bad.push(format!("matrix power differs at n = {n}"));
        }
    }
    let head: Vec<(Int, Int)> = orbit
        .iter()
        .take(4)
        .map(|p| (p.x.clone(), p.y.clone()))
        .collect();
    let want: Vec<(Int, Int)> = ints(&[3, 21, 123, 717])
        .into_iter()
        .zip(ints(&[3, 15, 87, 507]))
        .collect();
    if head != want {
        bad.push(format!("first pairs {head:?}"));
    }
    Ok(bad)
}

fn verify_all() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let (code, _, err) = invoke(&["verify", "all", "--from", "1", "--to", "50"]);
    if code != EXIT_OK {
        bad.push(format!("verify all exited {code}: {err}"));
    }
    let reports = identities::run_all(1, 50)?;
    let tags: BTreeSet<&str> = reports.iter().map(|r| r.theorem.tag()).collect();
    if tags.len() != TheoremId::ALL.len() {
        bad.push(format!(
            "{} of {} identities ran",
            tags.len(),
            TheoremId::ALL.len()
        ));
    }
    for r in &reports {
        if !r.ok() {
            bad.push(format!(
                "{} failed at {} indices",
                r.theorem.tag(),
                r.failed.len()
            ));
        }
        if r.passed != r.range_len() {
            bad.push(format!(
                "{} checked {} of {}",
                r.theorem.tag(),
                r.passed,
                r.range_len()
            ));
        }
    }
    Ok(bad)
}

fn spot_values() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    let quad = |n| -> Result<Vec<Int>> {
        let q = neo_quad_closed::<Int>(n)?;
        Ok(vec![q.b, q.c, q.r, q.cr])
    };
    if quad(1)? != ints(&[6, 15, 1, 3]) {
        bad.push(format!("quad(1) = {:?}", quad(1)?));
    }
    if quad(0)? != ints(&[0, 3, 1, 3]) {
        bad.push(format!("quad(0) = {:?}", quad(0)?));
    }
    let pell_sum: Int = (1..=5).map(sequences::pell::<Int>).sum::<Result<Int>>()?;
    if pell_sum != Int::from(49) {
        bad.push(format!("sum of P_1..P_5 = {pell_sum}"));
    }
    let triple = identities::pythagorean_triple(2)?;
    if triple != (Int::from(21), Int::from(20), Int::from(29)) {
        bad.push(format!("triple = {triple:?}"));
    }
    Ok(bad)
}

fn negative_controls() -> Result<Vec<String>> {
    let mut bad = Vec::new();
    if is_neo_balcobalancing(&Int::from(7)) {
        bad.push("7 accepted as neo balcobalancing".into());
    }
    let cr: Vec<Int> = (0..=3)
        .map(|n| neo_quad_closed::<Int>(n).map(|q| q.cr))
        .collect::<Result<_>>()?;
    let stepped = order3_step(&cr[2], &cr[1], &cr[0]);
    if stepped != Int::from(3573) || stepped == cr[3] {
        bad.push(format!(
            "order-3 step at n = 3 gave {stepped}, closed form {}",
            cr[3]
        ));
    }
    let (code, _, err) = invoke(&["verify", "T8.1-CR", "--from", "1", "--to", "10"]);
    if code != EXIT_USAGE || !err.contains("requires n >= 2") {
        bad.push(format!("verify T8.1-CR from 1 exited {code}: {err}"));
    }
    Ok(bad)
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Duration); 6] = [
        (
            "closed form, Binet and recurrence agree for n in 1..=60",
            three_paths,
            Duration::from_secs(1),
        ),
        (
            "brute-force scan to 300000 matches closed forms",
            oracle_scan,
            Duration::from_secs(10),
        ),
        (
            "first 40 orbit pairs solve x^2 - 2y^2 = -9 and match M^n",
            pell_orbit,
            Duration::from_secs(1),
        ),
        (
            "every identity holds for n in 1..=50",
            verify_all,
            Duration::from_secs(5),
        ),
        ("spot values", spot_values, Duration::from_secs(1)),
        (
            "negative controls",
            negative_controls,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut problems = match check() {
            Ok(p) => p,
            Err(e) => vec![format!("error: {e}")],
        };
        let took = start.elapsed();
        if took > *budget {
            problems.push(format!("took {took:.2?}, budget {budget:?}"));
        }
        let status = if problems.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} [{}] {name} ({took:.2?})", i + 1);
        for p in &problems {
            println!("     {p}");
        }
        failed += usize::from(!problems.is_empty());
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
