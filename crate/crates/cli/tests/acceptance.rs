//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fail.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use bridgeguts::alexander::{minkus_alexander, minkus_signature};
use bridgeguts::guts::{
    dehn_surgery_suture_slope, guts_of_two_bridge, is_fibered, kakimizu_max_simplex_dim, surgery_witness,
    suture_slope_from_witness,
};
use bridgeguts::hfk::{hfk_fingerprint, hfk_of_two_bridge, knot_signature};
use bridgeguts::seifert::{alexander_from_seifert, seifert_matrix, symmetric_determinant};
use bridgeguts::{
    canonicalize, cf_eval, even_cf_expand, is_equivalent, mirror, EvenCF, Fraction, GutsDescriptor, LaurentPoly,
    TwoBridgeKnot,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn knot(p: i64, q: i64) -> TwoBridgeKnot {
    TwoBridgeKnot::new(p, q).unwrap()
}

fn frac(n: i64, d: i64) -> Fraction {
    Fraction::new(n, d).unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    ensure!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
    Ok(format!("{elapsed:.2?}"))
}

/// One representative per isotopy class `{p, p^-1 mod q}` for odd `q` in `3..=q_max`.
fn isotopy_classes(q_max: i64) -> Vec<TwoBridgeKnot> {
    let mut seen = BTreeSet::new();
    for q in (3..=q_max).step_by(2) {
        for p in 1..q {
            if let Ok(k) = TwoBridgeKnot::new(p, q) {
                seen.insert(canonicalize(&k));
            }
        }
    }
    seen.into_iter().collect()
}

/// The Minkus sum needs odd `p`; a class without one is handled through its mirror.
fn odd_source(k: &TwoBridgeKnot) -> TwoBridgeKnot {
    if k.p() % 2 == 1 { *k } else { mirror(k) }
}

fn cf_fixtures() -> Outcome {
    let mut worst = Duration::ZERO;
    for ((p, q), (r, b)) in [((3, 5), (1, [-2, 2])), ((11, 15), (1, [-4, -4])), ((7, 15), (1, [-2, -8]))] {
        let x = frac(p, q);
        let start = Instant::now();
        let cf = even_cf_expand(&x).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure!(cf == EvenCF::new(r, b), "{p}/{q} expanded to {cf}");
        ensure!(elapsed < Duration::from_millis(1), "{p}/{q} took {elapsed:?}");
        worst = worst.max(elapsed);
    }
    Ok(format!("slowest {worst:.2?}"))
}

fn round_trip() -> Outcome {
    let start = Instant::now();
    let mut count = 0u64;
    for q in (3..=999i64).step_by(2) {
        for p in 1..q {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let x = frac(p, q);
            let back = even_cf_expand(&x).and_then(|cf| cf_eval(&cf)).map_err(|e| e.to_string())?;
            ensure!(back == x, "{p}/{q} came back as {back}");
            count += 1;
        }
    }
    Ok(format!("{count} fractions, {}", within(start.elapsed(), Duration::from_secs(10))?))
}

fn minkus_fixtures() -> Outcome {
    let expected = LaurentPoly::from_coeffs(0, [4, -7, 4]);
    for k in [knot(11, 15), knot(7, 15)] {
        let delta = minkus_alexander(&k).and_then(|d| d.normalize_units()).map_err(|e| e.to_string())?;
        ensure!(delta == expected, "{k}: {delta}");
        let sigma = minkus_signature(&k).map_err(|e| e.to_string())?;
        ensure!(sigma == 3, "{k}: signature {sigma}");
    }
    Ok(format!("{expected}, signature 3"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let classes = isotopy_classes(99);
    for k in &classes {
        let cf = even_cf_expand(&k.slope()).map_err(|e| e.to_string())?;
        let v = seifert_matrix(&cf).map_err(|e| e.to_string())?;
        let seifert = alexander_from_seifert(&v).normalize_units().map_err(|e| e.to_string())?;
        let minkus = minkus_alexander(&odd_source(k))
            .and_then(|d| d.normalize_units())
            .map_err(|e| e.to_string())?;
        ensure!(seifert == minkus, "{k}: Seifert {seifert} vs Minkus {minkus}");
    }
    Ok(format!("{} knots, {}", classes.len(), within(start.elapsed(), Duration::from_secs(30))?))
}

fn identity_suite() -> Outcome {
    let classes = isotopy_classes(199);
    for k in &classes {
        let q = BigInt::from(k.q());
        let raw = minkus_alexander(&odd_source(k)).map_err(|e| e.to_string())?;
        ensure!(raw.value_at_one() == BigInt::from(1), "{k}: Δ(1) = {}", raw.value_at_one());
        ensure!(raw.value_at_minus_one().magnitude() == q.magnitude(), "{k}: |Δ(-1)| != q");
        let normalized = raw.normalize_units().map_err(|e| e.to_string())?;
        ensure!(normalized.is_palindromic(), "{k}: {normalized} not palindromic");
        let v = seifert_matrix(&even_cf_expand(&k.slope()).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let det = symmetric_determinant(&v.symmetrized());
        ensure!(det.magnitude() == q.magnitude(), "{k}: det(V+Vᵀ) = {det}");
        let sigma = knot_signature(k).map_err(|e| e.to_string())?;
        ensure!(sigma % 2 == 0, "{k}: odd signature {sigma}");
        let rank = hfk_of_two_bridge(k).map_err(|e| e.to_string())?.total_rank();
        ensure!(BigInt::from(rank.clone()) == q, "{k}: HFK rank {rank}");
    }
    Ok(format!("{} knots", classes.len()))
}

fn guts_fixtures() -> Outcome {
    let slopes = |s: &[(i64, i64)]| GutsDescriptor::from_slopes(s.iter().map(|&(n, d)| frac(n, d)));
    let cases = [
        (knot(11, 15), slopes(&[(-1, 2), (-1, 2)]), false, 1),
        (knot(7, 15), slopes(&[(-1, 4)]), false, 0),
        (knot(3, 5), slopes(&[]), true, 0),
    ];
    for (k, guts, fibered, dim) in cases {
        let got = guts_of_two_bridge(&k).map_err(|e| e.to_string())?;
        ensure!(got == guts, "{k}: {got}");
        ensure!(is_fibered(&k).map_err(|e| e.to_string())? == fibered, "{k}: fibered mismatch");
        let d = kakimizu_max_simplex_dim(&k).map_err(|e| e.to_string())?;
        ensure!(d == dim, "{k}: kakimizu {d}");
    }
    Ok("11/15, 7/15, 3/5".into())
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bridgeguts"))
}

fn headline_search() -> Outcome {
    let start = Instant::now();
    let out = binary().args(["search", "--q-max", "15"]).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.success(), "exit {:?}", out.status.code());
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let lines: Vec<&str> = text.lines().collect();
    ensure!(lines.len() == 1, "expected one pair, got {lines:?}");
    ensure!(lines[0].starts_with("K(7/15) K(11/15) "), "unexpected pair {:?}", lines[0]);
    let (a, b) = (knot(7, 15), knot(11, 15));
    let fp = |k| hfk_of_two_bridge(k).map(|t| hfk_fingerprint(&t)).map_err(|e| e.to_string());
    ensure!(fp(&a)? == fp(&b)?, "fingerprints differ");
    ensure!(
        guts_of_two_bridge(&a).map_err(|e| e.to_string())? != guts_of_two_bridge(&b).map_err(|e| e.to_string())?,
        "guts agree"
    );
    ensure!(lines[0].contains("distinguishing=guts"), "guts not listed as distinguishing");
    within(elapsed, Duration::from_secs(1))
}

fn equivalence_suite() -> Outcome {
    let mut pairs = 0u64;
    for q in (3..=99i64).step_by(2) {
        let knots: Vec<TwoBridgeKnot> = (1..q).filter_map(|p| TwoBridgeKnot::new(p, q).ok()).collect();
        for a in &knots {
            for b in &knots {
                let (pa, pb, qq) = (a.p() as i64, b.p() as i64, q);
                let related = pa == pb || (pa * pb) % qq == 1;
                ensure!(is_equivalent(a, b) == related, "is_equivalent({a}, {b})");
                ensure!((canonicalize(a) == canonicalize(b)) == related, "canonicalize on {a}, {b}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn surgery_suite() -> Outcome {
    for ((q, p), (n, d)) in [((2, 1), (1, 2)), ((3, 1), (1, 3)), ((5, 2), (3, 5))] {
        let slope = dehn_surgery_suture_slope(q, p).map_err(|e| e.to_string())?;
        ensure!(slope == frac(n, d), "({q},{p}) gave {slope}");
    }
    let mut checked = 0;
    for q in 2..=40i64 {
        for p in -40..=40i64 {
            let Ok((r, s)) = surgery_witness(q, p) else { continue };
            let base = suture_slope_from_witness(q, &r).map_err(|e| e.to_string())?;
            for t in -3..=3i64 {
                let (r2, s2) = (&r + q * t, &s + p * t);
                ensure!(&s2 * q - &r2 * p == BigInt::from(1), "shifted witness is not a longitude");
                let shifted = suture_slope_from_witness(q, &r2).map_err(|e| e.to_string())?;
                ensure!(shifted == base, "({q},{p}) t={t}: {shifted} vs {base}");
            }
            checked += 1;
        }
    }
    Ok(format!("fixtures and {checked} witness orbits"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut files = Vec::new();
    for jobs in ["1", "4"] {
        let path = dir.path().join(format!("catalog-{jobs}.txt"));
        let status = binary()
            .args(["catalog", "--q-max", "99", "--format", "record", "--jobs", jobs, "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure!(status.success(), "catalog --jobs {jobs} exited {:?}", status.code());
        files.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure!(!files[0].is_empty(), "empty catalog");
    ensure!(files[0] == files[1], "record files differ");
    let records = bridgeguts_cli::parse_records(files[0].as_slice()).map_err(|e| e.to_string())?;
    Ok(format!("{} records, {} bytes", records.len(), files[0].len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("CF fixtures", cf_fixtures),
        ("round-trip q <= 999", round_trip),
        ("Minkus fixtures", minkus_fixtures),
        ("oracle equivalence q <= 99", oracle_equivalence),
        ("identity suite q <= 199", identity_suite),
        ("guts fixtures", guts_fixtures),
        ("headline search", headline_search),
        ("equivalence suite q <= 99", equivalence_suite),
        ("surgery-slope suite", surgery_suite),
        ("catalog determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {:>2} {name}: panicked", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
