use std::path::Path;

use serde::Serialize;
use sign_classes::classify::{self, sweep_conjecture, ConjectureSweep, Witness};
use sign_classes::counting::{verify_count_identities, verify_non_squashing, CountTable};
use sign_classes::odd2::{
    prime_probe, two_element_sign_classes, two_element_sign_classes_predicted, verify_theorem5,
};
use sign_classes::theta::theta_decompose_with;
use sign_classes::{enumerate_partitions, is_exceptional, ClassKind, Partition};

use crate::render::Doc;
use crate::{cache, CliError, Command, Format, Outcome, RunConfig};

/// Runs one subcommand on a pool of `config.workers` threads.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", config.workers)))?;
        pool.install(|| dispatch(config))
    }
    #[cfg(not(feature = "parallel"))]
    {
        dispatch(config)
    }
}

fn check_ceiling(config: &RunConfig, n: usize) -> Result<(), CliError> {
    if n > config.ceiling {
        Err(CliError::Ceiling {
            n,
            ceiling: config.ceiling,
        })
    } else {
        Ok(())
    }
}

fn ok(doc: Doc, format: Format, discrepancy: bool) -> Result<Outcome, CliError> {
    Ok(Outcome {
        stdout: doc.render(format)?,
        discrepancy,
    })
}

fn dispatch(config: &RunConfig) -> Result<Outcome, CliError> {
    let cache_dir = config.cache_dir.as_deref();
    let format = config.format;
    match &config.command {
        Command::Char { lambda, mu } => char_cmd(lambda, mu, cache_dir, format),
        Command::Classify { mu } => {
            check_ceiling(config, mu.weight())?;
            classify_cmd(mu, cache_dir, format)
        }
        Command::Enumerate { n, kind } => {
            check_ceiling(config, *n)?;
            enumerate_cmd(*n, *kind, format)
        }
        Command::Theta { mu } => {
            check_ceiling(config, mu.weight())?;
            theta_cmd(mu, cache_dir, format)
        }
        Command::Theorem5 { n, probe_prime } => {
            check_ceiling(config, *n)?;
            theorem5_cmd(*n, *probe_prime, format)
        }
        Command::TwoClasses { n } => {
            check_ceiling(config, *n)?;
            two_classes_cmd(*n, format)
        }
        Command::Conjecture { max_n } => {
            check_ceiling(config, *max_n)?;
            conjecture_cmd(*max_n, format)
        }
        Command::Counts { max_n } => counts_cmd(*max_n, config.ceiling, format),
        Command::Exceptional { max_n } => {
            check_ceiling(config, *max_n)?;
            exceptional_cmd(*max_n, format)
        }
    }
}

#[derive(Serialize)]
struct CharOut<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    value: sign_classes::CharValue,
}

fn char_cmd(
    lambda: &Partition,
    mu: &Partition,
    cache_dir: Option<&Path>,
    format: Format,
) -> Result<Outcome, CliError> {
    let ev = cache::load(cache_dir, mu);
    let value = ev.value(lambda)?;
    cache::store(cache_dir, &ev);
    let text = format!("[{lambda}]({mu}) = {value}\n");
    ok(Doc::new(text, &CharOut { lambda, mu, value }), format, false)
}

fn classify_cmd(mu: &Partition, cache_dir: Option<&Path>, format: Format) -> Result<Outcome, CliError> {
    let ev = cache::load(cache_dir, mu);
    let report = classify::classify_with(&ev);
    cache::store(cache_dir, &ev);
    let mut text = format!("mu: {}\nn: {}\n", report.mu, report.n);
    match (&report.support_size, &report.witness) {
        (Some(size), _) => text += &format!("sign: true (support size {size})\n"),
        (None, Some(Witness { lambda, value })) => {
            text += &format!("sign: false (witness [{lambda}]({mu}) = {value})\n")
        }
        (None, None) => unreachable!("sign verdict carries a support size or a witness"),
    }
    match &report.up_witness {
        None => text += "up: true\n",
        Some(l) => text += &format!("up: false (witness {l} has at least two paths)\n"),
    }
    text += &format!("sd: {}\n", report.is_sd);
    ok(Doc::new(text, &report), format, false)
}

#[derive(Serialize)]
struct EnumerateOut<'a> {
    n: usize,
    kind: ClassKind,
    count: usize,
    partitions: &'a [Partition],
}

fn enumerate_cmd(n: usize, kind: ClassKind, format: Format) -> Result<Outcome, CliError> {
    let found = classify::enumerate_class(n, kind);
    let text: String = found.iter().map(|q| format!("{q}\n")).collect();
    let rows: Vec<Vec<String>> = found
        .iter()
        .map(|q| vec![n.to_string(), kind.name().to_string(), q.to_string()])
        .collect();
    let out = EnumerateOut {
        n,
        kind,
        count: found.len(),
        partitions: &found,
    };
    ok(
        Doc::new(text, &out).with_csv(&["n", "kind", "mu"], rows),
        format,
        false,
    )
}

fn theta_cmd(mu: &Partition, cache_dir: Option<&Path>, format: Format) -> Result<Outcome, CliError> {
    let ev = cache::load(cache_dir, mu);
    let theta = theta_decompose_with(&ev);
    cache::store(cache_dir, &ev);
    let theta = theta?;
    let sum = |side: &[Partition]| {
        if side.is_empty() {
            "0".to_string()
        } else {
            side.iter()
                .map(|l| format!("[{l}]"))
                .collect::<Vec<_>>()
                .join(" + ")
        }
    };
    let text = format!(
        "Theta+ ({} constituents, degree {}): {}\nTheta- ({} constituents, degree {}): {}\n",
        theta.plus.len(),
        theta.degree_plus,
        sum(&theta.plus),
        theta.minus.len(),
        theta.degree_minus,
        sum(&theta.minus),
    );
    ok(Doc::new(text, &theta), format, false)
}

#[derive(Serialize)]
struct Theorem5Out {
    #[serde(flatten)]
    report: sign_classes::odd2::OddDegreeReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    probe: Option<sign_classes::odd2::PrimeProbe>,
}

fn theorem5_cmd(n: usize, probe_prime: Option<usize>, format: Format) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("theorem5 needs n >= 1".into()));
    }
    if let Some(p) = probe_prime {
        if p < 3 || (2..p).any(|d| p % d == 0) {
            return Err(CliError::Usage(format!("--probe-prime {p} is not an odd prime")));
        }
    }
    let report = verify_theorem5(n);
    let holds = report.holds();
    let mut text = format!(
        "n: {}\nexponents: {:?}\nmu: {}\nsd: {}\n|P/P'|: {}\nodd-degree characters: {}\nsupport size: {}\ncentralizer order: {}\nsupport = odd-degree set: {}\ntheta vanishes off mu: {}\n",
        report.n,
        report.exponents,
        report.mu,
        report.is_sd,
        report.sylow_ab_order,
        report.odd_count,
        report.support_size,
        report.centralizer_order,
        report.support_matches,
        report.theta_ok,
    );
    let probe = probe_prime.map(|p| prime_probe(n, p));
    if let Some(pr) = &probe {
        text += &format!(
            "probe p={}: mu {}, sign {}, support {}, p'-degree characters {}, equal {}\n",
            pr.prime, pr.mu, pr.is_sign, pr.support_size, pr.prime_to_degree_count, pr.support_matches
        );
    }
    text += if holds { "verdict: holds\n" } else { "verdict: DISCREPANCY\n" };
    ok(Doc::new(text, &Theorem5Out { report, probe }), format, !holds)
}

#[derive(Serialize)]
struct TwoClassesOut {
    n: usize,
    classes: Vec<Partition>,
    predicted: Vec<Partition>,
    matches: bool,
}

fn two_classes_cmd(n: usize, format: Format) -> Result<Outcome, CliError> {
    if n == 0 {
        return Err(CliError::Usage("two-classes needs n >= 1".into()));
    }
    let classes = two_element_sign_classes(n);
    let predicted = two_element_sign_classes_predicted(n);
    let matches = classes == predicted;
    let list = |v: &[Partition]| v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join("  ");
    let text = format!(
        "brute force: {}\nclosed form: {}\n{}\n",
        list(&classes),
        list(&predicted),
        if matches { "match" } else { "DISCREPANCY" }
    );
    let out = TwoClassesOut {
        n,
        classes,
        predicted,
        matches,
    };
    ok(Doc::new(text, &out), format, !matches)
}

#[derive(Serialize)]
struct ConjectureOut {
    max_n: usize,
    total_partitions: usize,
    total_discrepancies: usize,
    sweeps: Vec<ConjectureSweep>,
}

fn conjecture_cmd(max_n: usize, format: Format) -> Result<Outcome, CliError> {
    let sweeps: Vec<ConjectureSweep> = (1..=max_n).map(sweep_conjecture).collect();
    let total_partitions = sweeps.iter().map(|s| s.partitions).sum();
    let total_discrepancies = sweeps.iter().map(|s| s.discrepancies.len()).sum();
    let mut text = String::new();
    for s in &sweeps {
        text += &format!(
            "n={}: {} partitions, {} sign, {} discrepancies\n",
            s.n,
            s.partitions,
            s.sign_partitions,
            s.discrepancies.len()
        );
        for d in &s.discrepancies {
            text += &format!(
                "  DISCREPANCY {}: conjecture says {}, brute force says {}",
                d.mu, d.predicted, d.brute_force
            );
            if let Some(w) = &d.witness {
                text += &format!(" (witness [{}] = {})", w.lambda, w.value);
            }
            text += "\n";
        }
    }
    text += &format!(
        "{total_discrepancies} discrepancies among {total_partitions} partitions of n <= {max_n}\n"
    );
    let out = ConjectureOut {
        max_n,
        total_partitions,
        total_discrepancies,
        sweeps,
    };
    ok(Doc::new(text, &out), format, total_discrepancies > 0)
}

#[derive(Serialize)]
struct CountsOut {
    max_n: usize,
    rows: Vec<sign_classes::counting::CountRow>,
    failures: Vec<sign_classes::counting::CountFailure>,
}

fn counts_cmd(max_n: usize, ceiling: usize, format: Format) -> Result<Outcome, CliError> {
    let table = CountTable::build(max_n, ceiling);
    let mut failures = if max_n >= 2 {
        verify_count_identities(max_n / 2)
    } else {
        Vec::new()
    };
    failures.extend(verify_non_squashing(max_n.min(ceiling)));
    let rows = table.rows();
    let mut text = format!("{:>4} {:>12} {:>12} {:>12}\n", "n", "s", "b", "nsq");
    for r in &rows {
        let nsq = r.nsq.as_ref().map_or("-".to_string(), |v| v.to_string());
        text += &format!("{:>4} {:>12} {:>12} {:>12}\n", r.n, r.s, r.b, nsq);
    }
    for f in &failures {
        text += &format!("FAILED {} at {}: {} != {}\n", f.identity, f.at, f.left, f.right);
    }
    let csv_rows = rows
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.s.to_string(),
                r.b.to_string(),
                r.nsq.as_ref().map_or(String::new(), |v| v.to_string()),
            ]
        })
        .collect();
    let discrepancy = !failures.is_empty();
    let out = CountsOut {
        max_n,
        rows,
        failures,
    };
    ok(
        Doc::new(text, &out).with_csv(&["n", "s", "b", "nsq"], csv_rows),
        format,
        discrepancy,
    )
}

/// The known infinite series of exceptional partitions plus the two
/// sporadic four-part tails.
fn exceptional_family(mu: &Partition) -> Option<&'static str> {
    match *mu.parts() {
        [a, b, 1] if a >= 2 && b + 1 == a => Some("(a,a-1,1)"),
        [a, b, 2, 1] if a >= 4 && b + 1 == a => Some("(a,a-1,2,1)"),
        [a, b, 3, 1] if a >= 5 && b + 1 == a => Some("(a,a-1,3,1)"),
        [3, 2, 1, 1] => Some("(3,2,1,1)"),
        [5, 3, 2, 1] => Some("(5,3,2,1)"),
        _ => None,
    }
}

#[derive(Serialize)]
struct ExceptionalEntry {
    mu: Partition,
    exceptional: bool,
    family: Option<&'static str>,
    conjecture: bool,
    consistent: bool,
}

#[derive(Serialize)]
struct ExceptionalOut {
    max_n: usize,
    found: usize,
    violations: usize,
    entries: Vec<ExceptionalEntry>,
}

fn exceptional_cmd(max_n: usize, format: Format) -> Result<Outcome, CliError> {
    let candidates: Vec<Partition> = (3..=max_n)
        .flat_map(enumerate_partitions)
        .filter(|q| q.len() >= 3)
        .collect();
    let flags = sign_classes::exec::map(&candidates, |q| {
        is_exceptional(q).expect("candidates have at least three parts")
    });
    let entries: Vec<ExceptionalEntry> = candidates
        .into_iter()
        .zip(flags)
        .filter_map(|(mu, exceptional)| {
            let family = exceptional_family(&mu);
            (exceptional || family.is_some()).then(|| {
                let conjecture = classify::conjecture_predicate(&mu);
                ExceptionalEntry {
                    consistent: exceptional && family.is_some() && conjecture,
                    exceptional,
                    family,
                    conjecture,
                    mu,
                }
            })
        })
        .collect();
    let found = entries.iter().filter(|e| e.exceptional).count();
    let violations = entries.iter().filter(|e| !e.consistent).count();
    let mut text = String::new();
    for e in &entries {
        let status = match (e.exceptional, e.family) {
            (true, Some(f)) => format!("exceptional, family {f}"),
            (true, None) => "exceptional, NOT IN ANY KNOWN FAMILY".to_string(),
            (false, Some(f)) => format!("NOT exceptional despite family {f}"),
            (false, None) => unreachable!(),
        };
        text += &format!("{}: {status}; conjecture {}\n", e.mu, e.conjecture);
    }
    text += &format!("{found} exceptional partitions for n <= {max_n}, {violations} violations\n");
    let out = ExceptionalOut {
        max_n,
        found,
        violations,
        entries,
    };
    ok(Doc::new(text, &out), format, violations > 0)
}
