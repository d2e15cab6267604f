//! Library results against brute-force searches on small inputs.

mod common;

use common::{collapse_brute, is_special_brute, partition_count, partitions, special_top_brute};
use nilorbits::duality::{apply_f, apply_f_rule};
use nilorbits::orbits::{family_partitions, special_piece_top};
use nilorbits::partition::dominance_leq;
use nilorbits::{collapse, is_special, Algebra, OrbitContext};

#[test]
fn enumeration_counts_follow_the_pentagonal_recurrence() {
    for n in 0..=40 {
        assert_eq!(partitions(n).len() as u64, partition_count(n), "n = {n}");
    }
}

#[test]
fn transpose_reverses_dominance() {
    for n in 1..=11 {
        let all = partitions(n);
        for a in &all {
            assert_eq!(&a.transpose().transpose(), a);
            for b in &all {
                assert_eq!(
                    dominance_leq(a, b).unwrap(),
                    dominance_leq(&b.transpose(), &a.transpose()).unwrap(),
                    "{a} vs {b}"
                );
            }
        }
    }
}

#[test]
fn collapse_is_the_dominance_maximum() {
    for n in 2..=12usize {
        let all = partitions(n);
        let ctxs = if n % 2 == 1 {
            vec![(OrbitContext::all(Algebra::B, n / 2).unwrap(), 0)]
        } else {
            vec![
                (OrbitContext::all(Algebra::C, n / 2).unwrap(), 1),
                (OrbitContext::all(Algebra::D, n / 2).unwrap(), 0),
            ]
        };
        for (ctx, eps) in ctxs {
            for q in &all {
                assert_eq!(
                    Some(collapse(q, &ctx).unwrap()),
                    collapse_brute(q, &all, eps),
                    "{q} in {ctx}"
                );
            }
        }
    }
}

#[test]
fn speciality_matches_the_height_condition() {
    for rank in 1..=7 {
        for (ctx, eps, eps_prime) in [
            (OrbitContext::special(Algebra::B, rank).unwrap(), 0, 1),
            (OrbitContext::special(Algebra::C, rank).unwrap(), 1, 0),
            (OrbitContext::alt_special(rank).unwrap(), 1, 1),
            (OrbitContext::special(Algebra::D, rank).unwrap(), 0, 0),
        ] {
            let fam = family_partitions(&ctx).unwrap();
            let brute: Vec<_> = partitions(ctx.n_total())
                .into_iter()
                .filter(|q| is_special_brute(q, eps, eps_prime))
                .collect();
            assert_eq!(fam.len(), brute.len(), "{ctx}");
            for q in &brute {
                assert!(
                    is_special(q, &ctx).unwrap() && fam.contains(q),
                    "{q} in {ctx}"
                );
            }
        }
    }
}

#[test]
fn special_piece_top_is_the_least_special_orbit_above() {
    for rank in 1..=6 {
        for (ctx, eps, eps_prime) in [
            (OrbitContext::special(Algebra::B, rank).unwrap(), 0, 1),
            (OrbitContext::special(Algebra::C, rank).unwrap(), 1, 0),
            (OrbitContext::alt_special(rank).unwrap(), 1, 1),
            (OrbitContext::special(Algebra::D, rank).unwrap(), 0, 0),
        ] {
            let all = partitions(ctx.n_total());
            for v in all.iter().filter(|v| common::is_eps(v, eps)) {
                let top = special_piece_top(v, &ctx).unwrap();
                assert_eq!(
                    Some(top),
                    special_top_brute(v, &all, eps, eps_prime),
                    "{v} in {ctx}"
                );
            }
        }
    }
}

#[test]
fn rule_form_of_f_matches_the_definition() {
    for rank in 1..=10 {
        for ctx in [
            OrbitContext::special(Algebra::B, rank).unwrap(),
            OrbitContext::special(Algebra::C, rank).unwrap(),
            OrbitContext::alt_special(rank).unwrap(),
            OrbitContext::special(Algebra::D, rank).unwrap(),
        ] {
            for q in family_partitions(&ctx).unwrap() {
                assert_eq!(
                    apply_f(&q, &ctx).unwrap(),
                    apply_f_rule(&q, &ctx).unwrap(),
                    "{q} in {ctx}"
                );
            }
        }
    }
}
