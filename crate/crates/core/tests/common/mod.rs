//! Brute-force oracles shared by the integration tests. Each one is written
//! from the definitions, independently of the library's closed forms.
#![allow(dead_code)]

use nilorbits::partition::{dominance_leq, enumerate_partitions};
use nilorbits::{Partition, Report};

/// p(n) by Euler's pentagonal number recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut any = false;
            for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                if g as usize <= m {
                    total += sign * p[m - g as usize];
                    any = true;
                }
            }
            if !any {
                break;
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// Every part congruent to `eps` has even multiplicity.
pub fn is_eps(p: &Partition, eps: usize) -> bool {
    p.parts()
        .iter()
        .all(|&s| s % 2 != eps || p.parts().iter().filter(|&&t| t == s).count() % 2 == 0)
}

/// Number of parts `>= s`.
fn height(p: &Partition, s: usize) -> usize {
    p.parts().iter().filter(|&&t| t >= s).count()
}

/// `eps`-partition with `h(s) ≡ eps_prime` for all parts `s ≡ eps`.
pub fn is_special_brute(p: &Partition, eps: usize, eps_prime: usize) -> bool {
    is_eps(p, eps)
        && p.parts()
            .iter()
            .all(|&s| s % 2 != eps || height(p, s) % 2 == eps_prime)
}

/// The unique element of `set` dominating all others, if there is one.
fn maximum(set: &[Partition]) -> Option<Partition> {
    set.iter()
        .find(|x| set.iter().all(|y| dominance_leq(y, x).unwrap()))
        .cloned()
}

/// The unique element of `set` dominated by all others, if there is one.
fn minimum(set: &[Partition]) -> Option<Partition> {
    set.iter()
        .find(|x| set.iter().all(|y| dominance_leq(x, y).unwrap()))
        .cloned()
}

/// The dominance-largest `eps`-partition below `p`, found by search.
pub fn collapse_brute(p: &Partition, all: &[Partition], eps: usize) -> Option<Partition> {
    let below: Vec<Partition> = all
        .iter()
        .filter(|q| is_eps(q, eps) && dominance_leq(q, p).unwrap())
        .cloned()
        .collect();
    maximum(&below)
}

/// The dominance-smallest special partition above `v`, found by search.
pub fn special_top_brute(
    v: &Partition,
    all: &[Partition],
    eps: usize,
    eps_prime: usize,
) -> Option<Partition> {
    let above: Vec<Partition> = all
        .iter()
        .filter(|q| is_special_brute(q, eps, eps_prime) && dominance_leq(v, q).unwrap())
        .cloned()
        .collect();
    minimum(&above)
}

/// Prints one acceptance line and returns whether it passed.
pub fn verdict(id: usize, name: &str, report: &Report, detail: &str) -> bool {
    let status = if report.passed() { "PASS" } else { "FAIL" };
    println!(
        "[{status}] criterion {id:>2}: {name}: {} checked, {} violations; {detail}",
        report.checked,
        report.violations.len()
    );
    for v in report.violations.iter().take(10) {
        println!("           {v}");
    }
    report.passed()
}

pub fn partitions(n: usize) -> Vec<Partition> {
    enumerate_partitions(n).unwrap()
}
