//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use sign_classes::classify::{is_sign, is_up, ClassKind};
use sign_classes::counting::{
    binary_partition_counts, non_squashing_count, sd_counts, verify_count_identities,
};
use sign_classes::odd2::{
    two_element_sign_classes, two_element_sign_classes_predicted, verify_theorem5,
};
use sign_classes::partition::p;
use sign_classes::{
    add_hooks, centralizer_order, char_value, enumerate_class, orthogonality_check,
    theta_decompose, verify_conjecture, Partition,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.1?}, limit {limit:?}"))
}

fn parse_all(list: &[&str]) -> Vec<Partition> {
    list.iter().map(|s| p(s)).collect()
}

const SIGN_LISTS: &[(usize, &[&str])] = &[
    (2, &["2", "1^2"]),
    (3, &["3", "2,1"]),
    (4, &["4", "3,1", "2,1^2"]),
    (5, &["5", "4,1", "3,2", "3,1^2"]),
    (6, &["6", "5,1", "4,2", "4,1^2", "3,2,1"]),
    (7, &["7", "6,1", "5,2", "5,1^2", "4,3", "4,2,1", "3,2,1^2"]),
    (8, &["8", "7,1", "6,2", "6,1^2", "5,3", "5,2,1", "4,3,1"]),
    (9, &["9", "8,1", "7,2", "7,1^2", "6,3", "6,2,1", "5,4", "5,3,1", "5,2,1^2"]),
    (
        10,
        &[
            "10", "9,1", "8,2", "8,1^2", "7,3", "7,2,1", "6,4", "6,3,1", "6,2,1^2", "5,4,1",
            "4,3,2,1",
        ],
    ),
];

fn fixture_lists() -> Check {
    let start = Instant::now();
    for &(n, list) in SIGN_LISTS {
        let expected: BTreeSet<_> = parse_all(list).into_iter().collect();
        let got: BTreeSet<_> = enumerate_class(n, ClassKind::Sign).into_iter().collect();
        if got != expected {
            let mut msg = format!("n={n}:");
            for mu in expected.difference(&got) {
                let w = is_sign(mu).witness.unwrap();
                msg += &format!(" listed {mu} has [{}]={}", w.lambda, w.value);
            }
            for mu in got.difference(&expected) {
                msg += &format!(" unlisted sign partition {mu}");
            }
            return Err(msg);
        }
    }
    within(start, Duration::from_secs(10))
}

fn theta_example() -> Check {
    let t = theta_decompose(&p("4,2")).map_err(|e| e.to_string())?;
    let plus: BTreeSet<_> = t.plus.iter().cloned().collect();
    let minus: BTreeSet<_> = t.minus.iter().cloned().collect();
    ensure(
        plus == parse_all(&["6", "4,2", "2,2,1,1", "1^6"]).into_iter().collect(),
        || format!("plus = {:?}", t.plus),
    )?;
    ensure(
        minus == parse_all(&["5,1", "3,3", "2,2,2", "2,1^4"]).into_iter().collect(),
        || format!("minus = {:?}", t.minus),
    )?;
    let twenty = BigUint::from(20u32);
    ensure(t.degree_plus == twenty && t.degree_minus == twenty, || {
        format!("degrees {} / {}", t.degree_plus, t.degree_minus)
    })
}

fn orthogonality() -> Check {
    let start = Instant::now();
    for n in 1..=9 {
        let all: Vec<Partition> = Partition::all(n).collect();
        for mu in &all {
            for nu in &all {
                let good = orthogonality_check(mu, nu).map_err(|e| e.to_string())?;
                ensure(good, || format!("columns {mu} and {nu}"))?;
            }
        }
    }
    within(start, Duration::from_secs(60))
}

fn theorem5() -> Check {
    let start = Instant::now();
    for n in 1..=12 {
        let r = verify_theorem5(n);
        ensure(r.support_matches, || format!("n={n}: support mismatch"))?;
        ensure(
            BigUint::from(r.odd_count) == r.sylow_ab_order
                && r.sylow_ab_order == centralizer_order(&r.mu),
            || {
                format!(
                    "n={n}: odd {} sylow {} z {}",
                    r.odd_count,
                    r.sylow_ab_order,
                    centralizer_order(&r.mu)
                )
            },
        )?;
    }
    within(start, Duration::from_secs(60))
}

fn repeated(v: usize, m: usize, rest: &[usize]) -> Partition {
    let mut parts = vec![v; m];
    parts.extend_from_slice(rest);
    Partition::new(parts).unwrap()
}

fn shape_law() -> Check {
    for n in 1..=14 {
        for mu in enumerate_class(n, ClassKind::Sign) {
            for (v, m) in mu.multiplicities() {
                ensure(m == 1 || (v == 1 && m == 2), || format!("{mu} repeats {v}"))?;
            }
        }
    }
    for m in 2..=3 {
        for mu in [
            repeated(2, m, &[1]),
            repeated(2, m, &[1, 1]),
            repeated(3, m, &[1]),
            repeated(3, m, &[1, 1]),
            repeated(3, m, &[2, 1]),
            repeated(3, m, &[2, 1, 1]),
        ] {
            let v = is_sign(&mu);
            ensure(!v.is_sign && v.witness.is_some(), || format!("{mu} not rejected"))?;
        }
    }
    for m in 2..=6 {
        let lambda = Partition::new(vec![2 * m - 1, 1, 1]).unwrap();
        let value = char_value(&lambda, &repeated(2, m, &[1])).map_err(|e| e.to_string())?;
        ensure(value.to_i64() == Some(-(m as i64)), || format!("m={m}: {value}"))?;
    }
    Ok(())
}

fn two_classes() -> Check {
    for n in 1..=16 {
        let brute = two_element_sign_classes(n);
        let closed = two_element_sign_classes_predicted(n);
        ensure(brute == closed, || format!("n={n}: {brute:?} vs {closed:?}"))?;
    }
    ensure(!is_sign(&p("4,2,1,1")).is_sign, || "(4,2,1^2) is sign".into())
}

fn conjecture() -> Check {
    let mut found = Vec::new();
    for n in 1..=20 {
        found.extend(verify_conjecture(n));
    }
    // A counterexample is a finding about the conjecture, not a defect here.
    if !found.is_empty() {
        let list: Vec<String> = found.iter().map(|d| d.mu.to_string()).collect();
        println!("finding: conjecture disagrees with brute force at {}", list.join(" "));
    }
    Ok(())
}

fn counting() -> Check {
    let start = Instant::now();
    let bad = verify_count_identities(20);
    ensure(bad.is_empty(), || format!("{bad:?}"))?;
    let s = sd_counts(30);
    for (n, s_n) in s.iter().enumerate() {
        let direct = enumerate_class(n, ClassKind::Sd).len();
        ensure(*s_n == BigUint::from(direct), || format!("s({n}) = {s_n} vs {direct}"))?;
    }
    let b = binary_partition_counts(24);
    for (n, b_n) in b.iter().enumerate() {
        let nsq = non_squashing_count(n);
        ensure(nsq == *b_n, || format!("n={n}: nsq {nsq} vs b {b_n}"))?;
    }
    within(start, Duration::from_secs(30))
}

fn value(lambda: &Partition, mu: &Partition) -> BigInt {
    char_value(lambda, mu).unwrap().into_bigint()
}

fn properties() -> Check {
    for n in 1..=12 {
        let sd: BTreeSet<_> = enumerate_class(n, ClassKind::Sd).into_iter().collect();
        let up: BTreeSet<_> = enumerate_class(n, ClassKind::Up).into_iter().collect();
        let sign: BTreeSet<_> = enumerate_class(n, ClassKind::Sign).into_iter().collect();
        ensure(sd.is_subset(&up) && up.is_subset(&sign), || format!("containment at n={n}"))?;
        for mu in up.iter().filter(|m| m.len() >= 2) {
            ensure(is_up(&mu.tail()).is_up, || format!("tail of {mu} not up"))?;
            if mu.parts().last() == Some(&2) {
                let mut parts = mu.parts().to_vec();
                parts.pop();
                parts.extend([1, 1]);
                let split = Partition::new(parts).unwrap();
                ensure(is_up(&split).is_up, || format!("{split} not up"))?;
            }
        }
        for mu in sd.iter().filter(|m| m.len() >= 2) {
            ensure(mu.tail().is_strongly_decreasing(), || format!("tail of {mu} not sd"))?;
        }
    }
    for t in 1..=8 {
        for tail in Partition::all(t) {
            let (sign, up) = (is_sign(&tail).is_sign, is_up(&tail).is_up);
            for m in (t + 1)..=(t + 6) {
                let mu = tail.with_leading(m);
                ensure(is_sign(&mu).is_sign == sign && is_up(&mu).is_up == up, || {
                    format!("lift {tail} -> {mu}")
                })?;
            }
        }
    }
    for a in 2..=5 {
        for t in (a + 1)..=(3 * a).min(13) {
            let additions = add_hooks(&Partition::row(t - a), a);
            let expected = if t < 2 * a { 0 } else { -1 };
            for mu in Partition::all(t).filter(|m| m.parts().iter().all(|q| q % a != 0)) {
                let sum: BigInt = additions
                    .iter()
                    .filter(|h| t < 2 * a || h.result != Partition::row(t))
                    .map(|h| {
                        let v = value(&h.result, &mu);
                        if h.leg_length % 2 == 0 { v } else { -v }
                    })
                    .sum();
                ensure(sum == BigInt::from(expected), || {
                    format!("alternating sum a={a} t={t} mu={mu}: {sum}")
                })?;
            }
        }
    }
    for n in 1..=9 {
        for mu in Partition::all(n) {
            let twist = if (n - mu.len()) % 2 == 0 { 1 } else { -1 };
            for lambda in Partition::all(n) {
                let lhs = value(&lambda.conjugate(), &mu);
                ensure(lhs == value(&lambda, &mu) * twist, || {
                    format!("twist [{lambda}]({mu})")
                })?;
            }
        }
    }
    Ok(())
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_sign-classes"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn determinism() -> Check {
    let commands: &[&[&str]] = &[
        &["enumerate", "12", "--kind", "sign"],
        &["enumerate", "12", "--kind", "up"],
        &["classify", "6,4,2,1"],
        &["classify", "3,3,1"],
        &["theta", "5,3,1"],
        &["theorem5", "11", "--probe-prime", "3"],
        &["two-classes", "14"],
        &["conjecture", "14"],
        &["counts", "24"],
        &["exceptional", "13"],
    ];
    for args in commands {
        for format in ["text", "json"] {
            let mut one = vec!["--workers", "1", "--format", format];
            one.extend_from_slice(args);
            let mut eight = vec!["--workers", "8", "--format", format];
            eight.extend_from_slice(args);
            let a = run_cli(&one);
            let b = run_cli(&eight);
            ensure(a.0 == 0, || format!("{} exited {}", args.join(" "), a.0))?;
            ensure(a == b, || format!("{} --format {format} differs", args.join(" ")))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: &[Criterion] = &[
        ("sign lists for n = 2..10", fixture_lists),
        ("theta decomposition of (4,2)", theta_example),
        ("column orthogonality, n <= 9", orthogonality),
        ("binary-expansion class and odd degrees, n <= 12", theorem5),
        ("sign partition shape law and non-sign families", shape_law),
        ("sign classes of 2-elements, n <= 16", two_classes),
        ("conjectured classification, n <= 20", conjecture),
        ("counting identities", counting),
        ("property suites", properties),
        ("CLI output independent of worker count", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        match result {
            Ok(()) => println!("[PASS] criterion {}: {name} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
