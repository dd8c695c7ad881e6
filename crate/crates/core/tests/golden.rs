//! Pinned outputs. Run with `SIEVEKIT_BLESS=1` to regenerate missing files.

use std::fs;
use std::path::PathBuf;

use sievekit::fibonomial::{fib_poly, fibonomial, ST};
use sievekit::qtcat::{explore_dissection_conjecture, little_schroder_symmetry, ExplorerReport};
use sievekit::MultiPoly;

fn golden_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(rel)
}

fn check_golden(rel: &str, actual: &str) {
    let path = golden_path(rel);
    if std::env::var_os("SIEVEKIT_BLESS").is_some() && !path.exists() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch in {rel}");
}

/// `{n k} = {k+1}{n-1 k} + t {n-k-1}{n-1 k-1}`, independent of the quotient formula.
fn fibonomial_by_recurrence(n: u32, k: u32) -> MultiPoly {
    if k == 0 || k == n {
        return MultiPoly::one(&ST);
    }
    let t = MultiPoly::var(&ST, "t").unwrap();
    &(&fib_poly(k + 1) * &fibonomial_by_recurrence(n - 1, k))
        + &(&(&t * &fib_poly(n - k - 1)) * &fibonomial_by_recurrence(n - 1, k - 1))
}

fn fibonomial_table(n: u32) -> String {
    (0..=n).map(|k| format!("{k}: {}\n", fibonomial(n, k).unwrap())).collect()
}

#[test]
fn fibonomial_goldens() {
    for n in 0..=10 {
        check_golden(&format!("fibonomial/n{n}.txt"), &fibonomial_table(n));
    }
}

#[test]
fn fibonomial_goldens_agree_with_recurrence() {
    for n in 0..=10 {
        let text = fs::read_to_string(golden_path(&format!("fibonomial/n{n}.txt"))).unwrap();
        for line in text.lines() {
            let (k, poly) = line.split_once(": ").unwrap();
            let k: u32 = k.parse().unwrap();
            let pinned = MultiPoly::parse(poly, &ST).unwrap();
            assert_eq!(pinned, fibonomial_by_recurrence(n, k), "n = {n}, k = {k}");
        }
    }
}

fn explorer_json(n: u32, k: u32) -> String {
    let report = explore_dissection_conjecture(n, k, 0, 2 * n * n).unwrap();
    serde_json::to_string_pretty(&report).unwrap() + "\n"
}

#[test]
fn explorer_goldens() {
    for n in [5, 7] {
        for k in [1, n - 3] {
            let first = explorer_json(n, k);
            assert_eq!(first, explorer_json(n, k), "explorer output is not deterministic");
            check_golden(&format!("explorer/n{n}_k{k}.json"), &first);
            let parsed: ExplorerReport = serde_json::from_str(&first).unwrap();
            assert_eq!(parsed.candidates.len() as u32, 2 * (2 * n * n + 1));
        }
    }
}

#[test]
fn little_schroder_symmetry_golden() {
    let text: String = little_schroder_symmetry(7)
        .unwrap()
        .into_iter()
        .map(|(n, d, sym)| format!("n={n} d={d} symmetric={sym}\n"))
        .collect();
    check_golden("explorer/symmetry.txt", &text);
}
