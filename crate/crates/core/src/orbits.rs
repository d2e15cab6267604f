//! Nilpotent orbits of classical algebras as partitions: validity, special
//! families, collapse, dimension, closure covers, special pieces and the
//! reductive centralizer.

use std::collections::BTreeMap;

use crate::context::{Algebra, Family, Orbit, OrbitContext, VeryEvenTag};
use crate::error::{Error, Result};
use crate::partition::{dominance_leq, enumerate_partitions, Partition};

/// Whether every part congruent to `eps` mod 2 has even multiplicity.
pub fn is_eps_partition(p: &Partition, eps: usize) -> bool {
    p.part_counts()
        .iter()
        .all(|&(s, m)| s % 2 != eps % 2 || m % 2 == 0)
}

/// Whether `h(s) ≡ eps_prime` for every part `s ≡ eps`.
pub fn satisfies_height_condition(p: &Partition, eps: usize, eps_prime: usize) -> bool {
    p.distinct_parts()
        .iter()
        .all(|&s| s % 2 != eps % 2 || p.height(s) % 2 == eps_prime % 2)
}

pub fn is_valid_partition(p: &Partition, ctx: &OrbitContext) -> bool {
    if p.total() != ctx.n_total() {
        return false;
    }
    match ctx.eps() {
        None => true,
        Some(eps) => is_eps_partition(p, eps),
    }
}

/// The ε′ used to decide speciality. For `Family::All` this is the ordinary
/// special condition of the algebra.
pub(crate) fn speciality_eps_prime(ctx: &OrbitContext) -> Option<usize> {
    match ctx.algebra {
        Algebra::A => None,
        Algebra::B => Some(1),
        Algebra::C if ctx.family == Family::AltSpecial => Some(1),
        Algebra::C | Algebra::D => Some(0),
    }
}

/// Special (or alternative special, in the `AltSpecial` family) membership.
pub fn is_special(p: &Partition, ctx: &OrbitContext) -> Result<bool> {
    if !is_valid_partition(p, ctx) {
        return Err(invalid(p, ctx));
    }
    Ok(match (ctx.eps(), speciality_eps_prime(ctx)) {
        (Some(e), Some(ep)) => satisfies_height_condition(p, e, ep),
        _ => true,
    })
}

/// Membership in the family of `ctx` (validity plus speciality if asked for).
pub fn in_family(p: &Partition, ctx: &OrbitContext) -> bool {
    is_valid_partition(p, ctx)
        && match ctx.family {
            Family::All => true,
            _ => is_special(p, ctx).unwrap_or(false),
        }
}

pub(crate) fn invalid(p: &Partition, ctx: &OrbitContext) -> Error {
    Error::InvalidOrbit {
        partition: p.to_string(),
        context: ctx.to_string(),
    }
}

pub(crate) fn not_in_family(p: &Partition, ctx: &OrbitContext) -> Error {
    Error::NotInFamily {
        partition: p.to_string(),
        family: ctx.family.to_string(),
        context: ctx.name(),
    }
}

/// The largest ε-partition dominated by `p`, via the pairing procedure.
///
/// Parts `s ≡ ε` of odd multiplicity are listed `a_1 > a_2 > ...` (with a
/// virtual 0 appended when ε = 0 and the count is odd). For each consecutive
/// pair `(a, c)`, one copy of `a` drops by one, one copy of `c` rises by one,
/// and every part `b ≡ ε` strictly between them becomes `b+1, b^{m-2}, b-1`.
///
/// The caller must ensure such a partition exists (`|p|` even when ε = 1).
pub fn collapse_eps(p: &Partition, eps: usize) -> Partition {
    let eps = eps % 2;
    let counts = p.part_counts();
    let mut odd_mult: Vec<usize> = counts
        .iter()
        .filter(|&&(s, m)| s % 2 == eps && m % 2 == 1)
        .map(|&(s, _)| s)
        .collect();
    if odd_mult.len() % 2 == 1 {
        debug_assert_eq!(
            eps, 0,
            "odd number of odd parts in a partition of an odd integer"
        );
        odd_mult.push(0);
    }
    let mut parts: Vec<isize> = p.parts().iter().map(|&x| x as isize).collect();
    for pair in odd_mult.chunks(2) {
        let (a, c) = (pair[0], pair[1]);
        lower_one(&mut parts, a);
        if c > 0 {
            raise_one(&mut parts, c);
        } else {
            parts.push(1);
        }
        for &(b, _) in counts
            .iter()
            .filter(|&&(b, _)| b < a && b > c && b % 2 == eps)
        {
            raise_one(&mut parts, b);
            lower_one(&mut parts, b);
        }
    }
    Partition::new(
        parts
            .into_iter()
            .filter(|&x| x > 0)
            .map(|x| x as usize)
            .collect(),
    )
}

/// Lowers the last copy of value `v` by one.
fn lower_one(parts: &mut [isize], v: usize) {
    if let Some(i) = parts.iter().rposition(|&x| x == v as isize) {
        parts[i] -= 1;
    }
}

/// Raises the first copy of value `v` by one.
fn raise_one(parts: &mut [isize], v: usize) {
    if let Some(i) = parts.iter().position(|&x| x == v as isize) {
        parts[i] += 1;
    }
}

/// The X-collapse of `p` for the algebra of `ctx`.
pub fn collapse(p: &Partition, ctx: &OrbitContext) -> Result<Partition> {
    if p.total() != ctx.n_total() {
        return Err(Error::SizeMismatch {
            left: p.total(),
            right: ctx.n_total(),
        });
    }
    Ok(match ctx.eps() {
        None => p.clone(),
        Some(eps) => collapse_eps(p, eps),
    })
}

/// dim g − dim g^e.
pub fn orbit_dimension(p: &Partition, ctx: &OrbitContext) -> Result<usize> {
    if !is_valid_partition(p, ctx) {
        return Err(invalid(p, ctx));
    }
    let sq: usize = p.transpose().parts().iter().map(|c| c * c).sum();
    let odd = p.parts().iter().filter(|&&x| x % 2 == 1).count();
    Ok(match ctx.algebra {
        Algebra::A => ctx.n_total() * ctx.n_total() - sq,
        Algebra::C => ctx.lie_algebra_dim() - (sq + odd) / 2,
        Algebra::B | Algebra::D => ctx.lie_algebra_dim() - (sq - odd) / 2,
    })
}

/// The partitions of the family of `ctx`, ignoring very-even splitting,
/// sorted by decreasing dimension and then decreasing lexicographic order.
pub fn family_partitions(ctx: &OrbitContext) -> Result<Vec<Partition>> {
    let mut out: Vec<Partition> = enumerate_partitions(ctx.n_total())?
        .into_iter()
        .filter(|p| in_family(p, ctx))
        .collect();
    sort_by_dimension(&mut out, ctx);
    Ok(out)
}

fn sort_by_dimension(v: &mut [Partition], ctx: &OrbitContext) {
    v.sort_by(|a, b| {
        let (da, db) = (
            orbit_dimension(a, ctx).unwrap_or(0),
            orbit_dimension(b, ctx).unwrap_or(0),
        );
        db.cmp(&da).then_with(|| b.cmp(a))
    });
}

fn split(p: &Partition, ctx: &OrbitContext) -> Vec<Orbit> {
    if ctx.splits_very_even() && p.all_parts_even() {
        vec![
            Orbit::tagged(p.clone(), VeryEvenTag::I),
            Orbit::tagged(p.clone(), VeryEvenTag::II),
        ]
    } else {
        vec![Orbit::new(p.clone())]
    }
}

/// All orbits of the family, in the documented deterministic order.
pub fn enumerate_orbits(ctx: &OrbitContext) -> Result<Vec<Orbit>> {
    Ok(family_partitions(ctx)?
        .iter()
        .flat_map(|p| split(p, ctx))
        .collect())
}

/// A family poset: orbits, their dimensions and covering relations.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    pub ctx: OrbitContext,
    pub orbits: Vec<Orbit>,
    pub dims: Vec<usize>,
    /// Covering pairs as (above, below) indices into `orbits`.
    pub covers: Vec<(usize, usize)>,
}

/// Covers among `parts` (sorted so that dominating partitions come first).
fn partition_covers(parts: &[Partition]) -> Vec<(usize, usize)> {
    let n = parts.len();
    let words = n.div_ceil(64);
    // above[i] = set of j with parts[j] strictly dominating parts[i].
    let mut above = vec![vec![0u64; words]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && dominance_leq(&parts[i], &parts[j]).unwrap_or(false) {
                above[i][j / 64] |= 1 << (j % 64);
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        let mut reach = vec![0u64; words];
        for j in 0..n {
            if above[i][j / 64] >> (j % 64) & 1 == 1 {
                for w in 0..words {
                    reach[w] |= above[j][w];
                }
            }
        }
        for j in 0..n {
            let bit = 1u64 << (j % 64);
            if above[i][j / 64] & bit != 0 && reach[j / 64] & bit == 0 {
                covers.push((j, i));
            }
        }
    }
    covers
}

impl OrbitPoset {
    pub fn build(ctx: &OrbitContext) -> Result<Self> {
        let parts = family_partitions(ctx)?;
        let base_covers = partition_covers(&parts);
        let mut orbits = Vec::new();
        let mut index_of: Vec<Vec<usize>> = Vec::new();
        for p in &parts {
            let group = split(p, ctx);
            index_of.push((orbits.len()..orbits.len() + group.len()).collect());
            orbits.extend(group);
        }
        let dims = orbits
            .iter()
            .map(|o| orbit_dimension(&o.partition, ctx))
            .collect::<Result<Vec<_>>>()?;
        let all_ctx = ctx.with_family(Family::All)?;
        let mut covers = Vec::new();
        for &(hi, lo) in &base_covers {
            let (ups, downs) = (&index_of[hi], &index_of[lo]);
            let cross = ups.len() == 1
                || downs.len() == 1
                || has_split_free_intermediate(&parts[hi], &parts[lo], &all_ctx)?;
            for (a, &u) in ups.iter().enumerate() {
                for (b, &d) in downs.iter().enumerate() {
                    if cross || a == b {
                        covers.push((u, d));
                    }
                }
            }
        }
        covers.sort_unstable();
        Ok(OrbitPoset {
            ctx: *ctx,
            orbits,
            dims,
            covers,
        })
    }

    pub fn index_of(&self, orbit: &Orbit) -> Option<usize> {
        self.orbits.iter().position(|o| o == orbit)
    }

    pub fn cover_pairs(&self) -> Vec<(Orbit, Orbit)> {
        self.covers
            .iter()
            .map(|&(a, b)| (self.orbits[a].clone(), self.orbits[b].clone()))
            .collect()
    }
}

/// Whether some valid partition strictly between `lo` and `hi` has an odd
/// part. Such an orbit is stable under the full orthogonal group, so its
/// presence forces both very-even twins below to lie under both twins above.
fn has_split_free_intermediate(
    hi: &Partition,
    lo: &Partition,
    all_ctx: &OrbitContext,
) -> Result<bool> {
    for nu in enumerate_partitions(all_ctx.n_total())? {
        if nu != *hi
            && nu != *lo
            && !nu.all_parts_even()
            && is_valid_partition(&nu, all_ctx)
            && dominance_leq(lo, &nu)?
            && dominance_leq(&nu, hi)?
        {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Covering pairs `(above, below)` of the family poset.
pub fn closure_covers(ctx: &OrbitContext) -> Result<Vec<(Orbit, Orbit)>> {
    Ok(OrbitPoset::build(ctx)?.cover_pairs())
}

/// The smallest special orbit whose closure contains the orbit of `v`.
///
/// Each part `s ≡ ε` with `h(s) ≢ ε′` has its block `[s^m]` replaced by
/// `[s+1, s^{m-2}, s-1]`.
pub fn special_piece_top(v: &Partition, ctx: &OrbitContext) -> Result<Partition> {
    let all = ctx.with_family(Family::All)?;
    if !is_valid_partition(v, &all) {
        return Err(invalid(v, ctx));
    }
    let (Some(eps), Some(eps_prime)) = (ctx.eps(), speciality_eps_prime(ctx)) else {
        return Ok(v.clone());
    };
    let mut parts = Vec::new();
    for (s, m) in v.part_counts() {
        if s % 2 == eps && v.height(s) % 2 != eps_prime {
            parts.push(s + 1);
            parts.extend(std::iter::repeat_n(s, m - 2));
            parts.push(s - 1);
        } else {
            parts.extend(std::iter::repeat_n(s, m));
        }
    }
    Ok(Partition::new(parts))
}

/// Kind of a simple factor of the reductive centralizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Orthogonal,
    Symplectic,
    General,
}

/// One factor `(s, kind, m(s))` per distinct part of `mu`: O(m) for `s ≢ ε`,
/// Sp(m) for `s ≡ ε`, GL(m) in type A.
pub fn centralizer_factors(
    mu: &Partition,
    ctx: &OrbitContext,
) -> Result<Vec<(usize, FactorKind, usize)>> {
    if !is_valid_partition(mu, ctx) {
        return Err(invalid(mu, ctx));
    }
    Ok(mu
        .part_counts()
        .into_iter()
        .map(|(s, m)| {
            let kind = match ctx.eps() {
                None => FactorKind::General,
                Some(e) if s % 2 == e => FactorKind::Symplectic,
                Some(_) => FactorKind::Orthogonal,
            };
            (s, kind, m)
        })
        .collect())
}

/// Partition of `e + e'` where `e'` is a nilpotent in the centralizer of `e`
/// acting on each multiplicity space of `lambda` with the given partitions:
/// each pair `(s, μ_j)` contributes `[s+μ_j−1, s+μ_j−3, …, |s−μ_j|+1]`.
pub fn add_commuting_nilpotent(
    lambda: &Partition,
    profile: &BTreeMap<usize, Partition>,
) -> Result<Partition> {
    let mut parts = Vec::new();
    for (s, m) in lambda.part_counts() {
        let mu = match profile.get(&s) {
            Some(mu) => mu.clone(),
            None => Partition::column(m),
        };
        if mu.total() != m {
            return Err(Error::SizeMismatch {
                left: mu.total(),
                right: m,
            });
        }
        for &t in mu.parts() {
            let lo = s.abs_diff(t) + 1;
            let mut x = s + t - 1;
            while x >= lo {
                parts.push(x);
                if x < 2 {
                    break;
                }
                x -= 2;
            }
        }
    }
    if let Some(&extra) = profile.keys().find(|s| lambda.multiplicity(**s) == 0) {
        return Err(Error::Parse(format!(
            "profile mentions part {extra} absent from {lambda}"
        )));
    }
    Ok(Partition::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::{Algebra::*, GroupForm};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn all(a: Algebra, n: usize) -> OrbitContext {
        OrbitContext::all(a, n).unwrap()
    }

    #[test]
    fn validity_examples() {
        assert!(is_valid_partition(&p("2,2,1"), &all(B, 2)));
        assert!(!is_valid_partition(&p("2,1,1,1"), &all(B, 2)));
        assert!(!is_valid_partition(&p("4,3,1"), &all(C, 4)));
        for ctx in [all(B, 3), all(C, 3), all(D, 3), all(A, 5)] {
            assert!(is_valid_partition(&Partition::column(ctx.n_total()), &ctx));
        }
    }

    #[test]
    fn special_examples() {
        assert!(!is_special(&p("2,2,1"), &all(B, 2)).unwrap());
        assert!(is_special(&p("4,4,2,2"), &OrbitContext::special(C, 6).unwrap()).unwrap());
        // No odd parts, so the alternative height condition is vacuous.
        assert!(is_special(&p("4,4,2"), &OrbitContext::alt_special(5).unwrap()).unwrap());
        assert!(is_special(&p("2,1"), &all(A, 2)).unwrap());
        assert!(is_special(&p("2,1,1,1"), &all(B, 2)).is_err());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&p("3,1"), &all(C, 2)).unwrap(), p("2,2"));
        assert_eq!(collapse(&p("8,2"), &all(D, 5)).unwrap(), p("7,3"));
        assert_eq!(collapse(&p("4,2,1"), &all(B, 3)).unwrap(), p("3,3,1"));
        assert!(collapse(&p("2"), &all(B, 1)).is_err());
    }

    #[test]
    fn dimension_examples() {
        let c4 = all(C, 4);
        assert_eq!(orbit_dimension(&p("8"), &c4).unwrap(), 32);
        for n in 1..8 {
            let ctx = all(C, n);
            let mut parts = vec![2];
            parts.extend(std::iter::repeat_n(1, 2 * n - 2));
            assert_eq!(
                orbit_dimension(&Partition::new(parts), &ctx).unwrap(),
                2 * n
            );
        }
        assert_eq!(orbit_dimension(&p("1^5"), &all(B, 2)).unwrap(), 0);
        assert_eq!(orbit_dimension(&p("3"), &all(A, 2)).unwrap(), 6);
    }

    #[test]
    fn enumeration_examples() {
        let b2: Vec<Partition> = enumerate_orbits(&all(B, 2))
            .unwrap()
            .into_iter()
            .map(|o| o.partition)
            .collect();
        assert_eq!(b2, vec![p("5"), p("3,1,1"), p("2,2,1"), p("1^5")]);
        assert_eq!(
            enumerate_orbits(&OrbitContext::special(B, 2).unwrap())
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            enumerate_orbits(&OrbitContext::special(D, 4).unwrap())
                .unwrap()
                .len(),
            9
        );
        assert_eq!(
            enumerate_orbits(&OrbitContext::alt_special(5).unwrap())
                .unwrap()
                .len(),
            14
        );
        let conn = OrbitContext::new(D, 4, Family::Special, GroupForm::Connected).unwrap();
        assert_eq!(enumerate_orbits(&conn).unwrap().len(), 11);
    }

    #[test]
    fn cover_examples() {
        let c4 = OrbitContext::special(C, 4).unwrap();
        let ups: Vec<Partition> = closure_covers(&c4)
            .unwrap()
            .into_iter()
            .filter(|(_, lo)| lo.partition == p("4,2,2"))
            .map(|(hi, _)| hi.partition)
            .collect();
        assert_eq!(ups, vec![p("4,4")]);

        let d4 = OrbitContext::special(D, 4).unwrap();
        let mut ups: Vec<Partition> = closure_covers(&d4)
            .unwrap()
            .into_iter()
            .filter(|(_, lo)| lo.partition == p("3,3,1,1"))
            .map(|(hi, _)| hi.partition)
            .collect();
        ups.sort();
        assert_eq!(ups, vec![p("4,4"), p("5,1,1,1")]);

        assert_eq!(closure_covers(&all(B, 2)).unwrap().len(), 3);
    }

    #[test]
    fn very_even_twins() {
        let conn = OrbitContext::new(D, 4, Family::All, GroupForm::Connected).unwrap();
        let poset = OrbitPoset::build(&conn).unwrap();
        let ids: Vec<(String, String)> = poset
            .covers
            .iter()
            .map(|&(a, b)| (poset.orbits[a].id(), poset.orbits[b].id()))
            .collect();
        // Twins are incomparable, and [3,3,1,1] sits under both [4,4] twins.
        assert!(!ids
            .iter()
            .any(|(a, b)| a.starts_with("4^2") && b.starts_with("4^2")));
        assert!(ids.contains(&("4^2:I".into(), "3^2,1^2".into())));
        assert!(ids.contains(&("4^2:II".into(), "3^2,1^2".into())));
        assert!(ids.contains(&("3,2^2,1".into(), "2^4:I".into())));
        assert!(ids.contains(&("3,2^2,1".into(), "2^4:II".into())));
    }

    #[test]
    fn special_piece_examples() {
        let c = OrbitContext::special(C, 2).unwrap();
        assert_eq!(special_piece_top(&p("2,1,1"), &c).unwrap(), p("2,2"));
        let b = OrbitContext::special(B, 2).unwrap();
        assert_eq!(special_piece_top(&p("2,2,1"), &b).unwrap(), p("3,1,1"));
        assert_eq!(special_piece_top(&p("3,1,1"), &b).unwrap(), p("3,1,1"));
    }

    #[test]
    fn centralizer_examples() {
        let c6 = all(C, 6);
        let f = centralizer_factors(&p("6,4,2"), &c6).unwrap();
        assert!(f
            .iter()
            .all(|&(_, k, m)| k == FactorKind::Orthogonal && m == 1));
        let f = centralizer_factors(&p("2,2,1^4"), &all(C, 4)).unwrap();
        assert_eq!(
            f,
            vec![
                (2, FactorKind::Orthogonal, 2),
                (1, FactorKind::Symplectic, 4)
            ]
        );
        let f = centralizer_factors(&p("1^7"), &all(B, 3)).unwrap();
        assert_eq!(f, vec![(1, FactorKind::Orthogonal, 7)]);
    }

    #[test]
    fn commuting_nilpotent_examples() {
        let mut prof = BTreeMap::new();
        prof.insert(2, p("2"));
        assert_eq!(add_commuting_nilpotent(&p("2,2"), &prof).unwrap(), p("3,1"));
        assert_eq!(
            add_commuting_nilpotent(&p("3^4"), &BTreeMap::new()).unwrap(),
            p("3^4")
        );
        let mut prof = BTreeMap::new();
        prof.insert(1, p("4,2,1"));
        assert_eq!(
            add_commuting_nilpotent(&p("1^7"), &prof).unwrap(),
            p("4,2,1")
        );
        prof.insert(1, p("4,2"));
        assert!(add_commuting_nilpotent(&p("1^7"), &prof).is_err());
    }
}
