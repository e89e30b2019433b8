//! The acceptance checks, runnable one at a time or all together.
//!
//! Each check carries a wall-clock budget and fails if it overruns.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::bijection::{base_table, verify_bijection};
use crate::error::Result;
use crate::gf2::Gf2Subspace;
use crate::language::{self, classify_word, count_words, enumerate_words, g, Word};
use crate::nset;
use crate::polar::build_geometry;

/// The fifteen points of the rank-2 configuration, by letter.
pub const CREMONA_RICHMOND_POINTS: [(char, &str); 15] = [
    ('A', "0001;0010"),
    ('B', "0001;1000"),
    ('C', "0001;1010"),
    ('D', "0010;0100"),
    ('E', "0010;0101"),
    ('F', "0100;1000"),
    ('G', "0100;1010"),
    ('H', "0101;1000"),
    ('I', "0101;1010"),
    ('J', "0110;1001"),
    ('K', "0011;1100"),
    ('L', "0011;1101"),
    ('M', "0110;1011"),
    ('N', "0111;1011"),
    ('O', "0111;1001"),
];

/// Its fifteen lines, as letter triples.
pub const CREMONA_RICHMOND_LINES: [&str; 15] = [
    "ABC", "AKL", "DAE", "DGF", "EIH", "JDM", "EON", "BHF", "JBO", "CGI", "CMN", "FNK", "MHL",
    "GOL", "JIK",
];

/// The length-4 words by case.
pub const LENGTH_FOUR_CASES: [&[&str]; 7] = [
    &[
        "1111", "1121", "1211", "1221", "1231", "2111", "2121", "2131", "2211", "2221", "2231",
        "2311", "2321", "2331", "2341",
    ],
    &[
        "1112", "1123", "1213", "1223", "1234", "2113", "2123", "2134", "2213", "2223", "2234",
        "2314", "2324", "2334", "2344",
    ],
    &["2112", "2312", "1212", "2212", "2313"],
    &["2122", "2322", "1222", "2222", "2323"],
    &["2132", "2332", "1232", "2232", "2333"],
    &["2342", "2343"],
    &["1122", "1233", "2133", "2233"],
];

/// Result of one acceptance check.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {}: {} ({:.2}s of {}s) {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

type Check = fn() -> Result<(bool, String)>;

/// Number of acceptance checks.
pub const CRITERIA: u8 = 9;

/// Runs check `id` (`1..=9`) and times it against its budget.
pub fn run(id: u8) -> Outcome {
    let (name, secs, check): (&'static str, u64, Check) = match id {
        1 => ("g-sequence", 1, g_sequence),
        2 => ("language counts", 10, language_counts),
        3 => ("case tables", 10, case_tables),
        4 => ("family counts", 60, family_counts),
        5 => ("stratification", 60, stratification),
        6 => ("polar space", 300, polar_space),
        7 => ("strata facts", 60, strata_facts),
        8 => ("bijection", 120, bijection),
        9 => ("quotient certificate", 10, quotient_certificate),
        _ => ("unknown", 0, || {
            Ok((false, "no such criterion".to_string()))
        }),
    };
    let budget = Duration::from_secs(secs);
    let start = Instant::now();
    let (ok, mut detail) = check().unwrap_or_else(|e| (false, format!("error: {e}")));
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    if !in_time {
        detail.push_str("; over budget");
    }
    Outcome {
        id,
        name,
        passed: ok && in_time,
        detail,
        elapsed,
        budget,
    }
}

/// Every check in order.
pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA).map(run).collect()
}

fn g_sequence() -> Result<(bool, String)> {
    let got: Vec<u128> = (1..=6).map(g).collect();
    Ok((got == [2, 5, 15, 51, 187, 715], format!("{got:?}")))
}

fn language_counts() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 1..=12 {
        if count_words(n)? != g(n) {
            bad.push(format!("count {n}"));
        }
    }
    for n in 1..=10 {
        if enumerate_words(n)?.len() as u128 != g(n) {
            bad.push(format!("enumerate {n}"));
        }
    }
    Ok((
        bad.is_empty(),
        describe(&bad, "n=1..12 counted, n=1..10 enumerated"),
    ))
}

fn case_tables() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut cols: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); 7];
    for w in enumerate_words(4)? {
        cols[classify_word(&w).case as usize - 1].insert(w);
    }
    for (i, expected) in LENGTH_FOUR_CASES.iter().enumerate() {
        let want = expected
            .iter()
            .map(|s| s.parse::<Word>())
            .collect::<Result<BTreeSet<_>>>()?;
        if cols[i] != want {
            bad.push(format!("length-4 case {}", i + 1));
        }
    }
    let sizes: Vec<usize> = cols.iter().map(BTreeSet::len).collect();
    if sizes != [15, 15, 5, 5, 5, 2, 4] {
        bad.push(format!("length-4 sizes {sizes:?}"));
    }
    let mut prev = language::case_counts(2)?;
    for n in 3..=10 {
        let c = language::case_counts(n)?;
        let (g1, g2) = (g(n - 1) as usize, g(n - 2) as usize);
        if c[0] != g1 || c[1] != g1 {
            bad.push(format!("cases 1,2 at n={n}"));
        }
        if c[2..5].iter().any(|&x| x != g1 - 2 * g2) {
            bad.push(format!("cases 3-5 at n={n}"));
        }
        if c[5] + c[6] != prev[2..].iter().sum::<usize>() + 1 {
            bad.push(format!("cases 6,7 at n={n}"));
        }
        prev = c;
    }
    Ok((
        bad.is_empty(),
        describe(&bad, "length-4 columns exact; identities n=3..10"),
    ))
}

fn family_counts() -> Result<(bool, String)> {
    let sizes: Vec<usize> = (1..=8)
        .map(|n| nset::enumerate_n(n).map(|f| f.len()))
        .collect::<Result<_>>()?;
    let want: Vec<usize> = (1..=8).map(|n| g(n) as usize).collect();
    Ok((sizes == want, format!("{sizes:?}")))
}

fn stratification() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 2..=8 {
        let family = nset::enumerate_n(n)?;
        let mut counts = [0usize; 7];
        for v in &family {
            counts[nset::classify_subspace(v)?.case as usize - 1] += 1;
        }
        let covered = counts.iter().sum::<usize>() == family.len();
        let words = language::case_counts(n)?;
        if !covered || counts != words {
            bad.push(format!("n={n}: subspaces {counts:?} vs words {words:?}"));
        }
    }
    Ok((
        bad.is_empty(),
        describe(&bad, "per-case counts agree for n=2..8"),
    ))
}

fn polar_space() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let expected = [(3, 1), (15, 15), (135, 315), (2295, 11475)];
    let small = Instant::now();
    for n in 1..=4 {
        if n == 4 && small.elapsed() > Duration::from_secs(5) {
            bad.push(format!("n<=3 took {:.2}s", small.elapsed().as_secs_f64()));
        }
        let geo = build_geometry(n)?;
        let shape = (geo.points().len(), geo.lines().len());
        if shape != expected[n - 1] {
            bad.push(format!("n={n}: {shape:?}"));
        }
        if geo.udim() as u128 != g(n) {
            bad.push(format!("n={n}: udim {}", geo.udim()));
        }
        if n == 2 && !cremona_richmond_matches(&geo)? {
            bad.push("configuration mismatch".to_string());
        }
    }
    Ok((
        bad.is_empty(),
        describe(&bad, "udim = g(n) for n=1..4; configuration matched"),
    ))
}

fn cremona_richmond_matches(geo: &crate::polar::PolarGeometry) -> Result<bool> {
    let mut index = std::collections::HashMap::new();
    for (label, rows) in CREMONA_RICHMOND_POINTS {
        let v = Gf2Subspace::parse(rows, 4)?;
        match geo.point_index(&v) {
            Some(i) => index.insert(label, i),
            None => return Ok(false),
        };
    }
    let printed: BTreeSet<[usize; 3]> = CREMONA_RICHMOND_LINES
        .iter()
        .map(|l| {
            let mut t: Vec<usize> = l.chars().map(|c| index[&c]).collect();
            t.sort_unstable();
            [t[0], t[1], t[2]]
        })
        .collect();
    let actual: BTreeSet<[usize; 3]> = geo.incidence().iter().copied().collect();
    Ok(index.len() == 15 && printed == actual)
}

fn strata_facts() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 2..=3 {
        let geo = build_geometry(n)?;
        for x0 in 0..geo.points().len() {
            if !geo.strata(x0)?.all_hold() {
                bad.push(format!("n={n} x0={x0}"));
            }
        }
    }
    Ok((bad.is_empty(), describe(&bad, "all base points, n=2,3")))
}

fn bijection() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    for n in 1..=7 {
        let report = verify_bijection(n)?;
        if !report.passed() {
            bad.push(format!("n={n}: {:?}", report.counterexamples));
        }
    }
    let three = verify_bijection(3)?;
    if three.case_counts != [5, 5, 1, 1, 1, 0, 2] {
        bad.push(format!("n=3 case counts {:?}", three.case_counts));
    }
    for n in 1..=3 {
        let table = base_table(n)?;
        for (w, v) in &table.forward {
            if crate::bijection::word_to_subspace(w)? != *v {
                bad.push(format!("{w} differs from the base table"));
            }
        }
    }
    Ok((
        bad.is_empty(),
        describe(
            &bad,
            "n=1..7 bijective, inverse-consistent, case-compatible",
        ),
    ))
}

fn quotient_certificate() -> Result<(bool, String)> {
    let mut parts = Vec::new();
    let mut ok = true;
    for (n, size, rank) in [(2, 5, 15), (3, 15, 135)] {
        let q = build_geometry(n)?.quotient_basis();
        ok &= q.points.len() == size && q.certificate_rank == rank;
        parts.push(format!(
            "n={n}: {} points, rank {}",
            q.points.len(),
            q.certificate_rank
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn describe(bad: &[String], ok: &str) -> String {
    if bad.is_empty() {
        ok.to_string()
    } else {
        bad.join("; ")
    }
}
