//! The transpose duality `d`, the cross-type bijections `f`, their
//! composition `d_LS`, quartets of labels, and the interchange of labels
//! under `d_LS`.

use std::fmt;
use std::str::FromStr;

use crate::context::{Algebra, Family, GroupForm, OrbitContext};
use crate::degeneration::classify_partitions;
use crate::error::{Error, Result};
use crate::label::{Action, Kind, SingularityLabel};
use crate::orbits::{collapse_eps, in_family, not_in_family, orbit_dimension, OrbitPoset};
use crate::partition::{dominance_leq, Partition};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DualityMap {
    D,
    F,
    Dls,
}

impl FromStr for DualityMap {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "d" => Ok(DualityMap::D),
            "f" => Ok(DualityMap::F),
            "dls" | "d_ls" => Ok(DualityMap::Dls),
            other => Err(Error::Parse(format!("unknown duality map {other:?}"))),
        }
    }
}

impl fmt::Display for DualityMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DualityMap::D => "d",
            DualityMap::F => "f",
            DualityMap::Dls => "dls",
        })
    }
}

fn unsupported_family(ctx: &OrbitContext) -> Error {
    Error::Context(format!(
        "duality maps act on special or alternative special families, not {ctx}"
    ))
}

fn target(ctx: &OrbitContext, algebra: Algebra, family: Family) -> Result<OrbitContext> {
    let form = if algebra == Algebra::D {
        ctx.form
    } else {
        GroupForm::Full
    };
    OrbitContext::new(algebra, ctx.rank, family, form)
}

fn d_context(ctx: &OrbitContext) -> Result<OrbitContext> {
    use {Algebra::*, Family::*};
    match (ctx.algebra, ctx.family) {
        (A, _) => Ok(*ctx),
        (B, Special) => target(ctx, B, Special),
        (C, Special) => target(ctx, C, Special),
        (D, Special) => target(ctx, C, AltSpecial),
        (C, AltSpecial) => target(ctx, D, Special),
        _ => Err(unsupported_family(ctx)),
    }
}

fn f_context(ctx: &OrbitContext) -> Result<OrbitContext> {
    use {Algebra::*, Family::*};
    match (ctx.algebra, ctx.family) {
        (A, _) => Ok(*ctx),
        (B, Special) => target(ctx, C, Special),
        (C, Special) => target(ctx, B, Special),
        (D, Special) => target(ctx, C, AltSpecial),
        (C, AltSpecial) => target(ctx, D, Special),
        _ => Err(unsupported_family(ctx)),
    }
}

/// The context a map sends `ctx` to.
pub fn map_context(map: DualityMap, ctx: &OrbitContext) -> Result<OrbitContext> {
    match map {
        DualityMap::D => d_context(ctx),
        DualityMap::F => f_context(ctx),
        DualityMap::Dls => d_context(&f_context(ctx)?),
    }
}

fn check_member(p: &Partition, ctx: &OrbitContext) -> Result<()> {
    map_context(DualityMap::D, ctx)?;
    if in_family(p, ctx) {
        Ok(())
    } else {
        Err(not_in_family(p, ctx))
    }
}

/// Transpose, landing in the dual family.
pub fn apply_d(p: &Partition, ctx: &OrbitContext) -> Result<(Partition, OrbitContext)> {
    check_member(p, ctx)?;
    Ok((p.transpose(), d_context(ctx)?))
}

/// `f` from its definition: pad or trim a box, then collapse.
pub fn apply_f(p: &Partition, ctx: &OrbitContext) -> Result<(Partition, OrbitContext)> {
    check_member(p, ctx)?;
    let image = f_by_collapse(p, ctx);
    debug_assert_eq!(
        Some(&image),
        f_by_rule(p, ctx).as_ref(),
        "rule form of f disagrees on {p} in {ctx}"
    );
    Ok((image, f_context(ctx)?))
}

fn f_by_collapse(p: &Partition, ctx: &OrbitContext) -> Partition {
    match (ctx.algebra, ctx.family) {
        (Algebra::B, _) => collapse_eps(&p.minus(), 1),
        (Algebra::C, Family::Special) => collapse_eps(&p.plus(), 0),
        (Algebra::D, _) => collapse_eps(&p.plus().minus(), 1),
        (Algebra::C, _) => collapse_eps(p, 0),
        (Algebra::A, _) => p.clone(),
    }
}

/// `f` by the local rule: every part `s ≢ ε` (with a virtual part 0 when
/// ε = 1) is rewritten according to the parities of `h(s)` and `m(s)`.
pub fn apply_f_rule(p: &Partition, ctx: &OrbitContext) -> Result<(Partition, OrbitContext)> {
    check_member(p, ctx)?;
    let image = f_by_rule(p, ctx).ok_or_else(|| unsupported_family(ctx))?;
    Ok((image, f_context(ctx)?))
}

fn f_by_rule(p: &Partition, ctx: &OrbitContext) -> Option<Partition> {
    if ctx.algebra == Algebra::A {
        return Some(p.clone());
    }
    let (eps, eps_prime) = (ctx.eps()?, ctx.eps_prime()?);
    let mut counts = p.part_counts();
    if eps == 1 {
        counts.push((0, 1));
    }
    let len = p.len();
    let mut out: Vec<usize> = Vec::new();
    for (s, m) in counts {
        if s % 2 == eps {
            out.extend(std::iter::repeat_n(s, m));
            continue;
        }
        let h = if s == 0 { len + 1 } else { p.height(s) };
        let h_matches = h % 2 == eps_prime;
        // Parts that would become -1 (from the virtual 0) are dropped.
        let down = s.checked_sub(1);
        match (h_matches, m % 2 == 1) {
            (true, true) => {
                out.extend(std::iter::repeat_n(s, m - 1));
                out.extend(down);
            }
            (false, true) => {
                out.push(s + 1);
                out.extend(std::iter::repeat_n(s, m - 1));
            }
            (true, false) => {
                out.push(s + 1);
                out.extend(std::iter::repeat_n(s, m - 2));
                out.extend(down);
            }
            (false, false) => out.extend(std::iter::repeat_n(s, m)),
        }
    }
    Some(Partition::new(out))
}

/// Lusztig–Spaltenstein duality, computed both as `d ∘ f` and `f ∘ d`.
pub fn apply_dls(p: &Partition, ctx: &OrbitContext) -> Result<(Partition, OrbitContext)> {
    let (fp, fctx) = apply_f(p, ctx)?;
    let (dfp, target) = apply_d(&fp, &fctx)?;
    let (dp, dctx) = apply_d(p, ctx)?;
    let (fdp, other) = apply_f(&dp, &dctx)?;
    if dfp != fdp || target.algebra != other.algebra || target.family != other.family {
        return Err(Error::Unsupported(format!(
            "d∘f gives {dfp} but f∘d gives {fdp} for {p} in {ctx}"
        )));
    }
    Ok((dfp, target))
}

pub fn apply_map(
    map: DualityMap,
    p: &Partition,
    ctx: &OrbitContext,
) -> Result<(Partition, OrbitContext)> {
    match map {
        DualityMap::D => apply_d(p, ctx),
        DualityMap::F => apply_f(p, ctx),
        DualityMap::Dls => apply_dls(p, ctx),
    }
}

/// A degeneration together with its label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corner {
    pub ctx: OrbitContext,
    pub above: Partition,
    pub below: Partition,
    pub label: SingularityLabel,
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} > {}) {}",
            self.ctx.name(),
            self.above,
            self.below,
            self.label
        )
    }
}

/// One of the three label patterns a quartet can follow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuartetKind {
    /// `C_n, B_n, c^sp_n, b^sp_n`
    First,
    /// `C_n, C^*_{n+1}, c^sp_n, d^+_{n+1}`
    Second,
    /// `C_n, [2B_n]^+, c^sp_n, d_{n+1}/V_4`
    Third,
}

/// The four degenerations obtained from one by `f`, `d` and `d_LS`, in that
/// order after the original.
#[derive(Clone, Debug)]
pub struct Quartet {
    pub corners: [Corner; 4],
    /// The matched pattern and its `n`, if any.
    pub matched: Option<(QuartetKind, usize)>,
}

fn c_sp(n: usize) -> SingularityLabel {
    if n == 1 {
        SingularityLabel::c(1)
    } else {
        SingularityLabel::plain(Kind::MinCSp(n))
    }
}

fn b_sp(n: usize) -> SingularityLabel {
    if n == 1 {
        SingularityLabel::b(1)
    } else {
        SingularityLabel::plain(Kind::MinBSp(n))
    }
}

/// Labels at positions (original, f, d, d_LS) of the reference square.
fn pattern(kind: QuartetKind, n: usize) -> Option<[SingularityLabel; 4]> {
    use SingularityLabel as L;
    Some(match kind {
        QuartetKind::First => [L::c(n), L::b(n), c_sp(n), b_sp(n)],
        QuartetKind::Second => [
            L::c(n),
            L::c(n + 1).with_star(true),
            c_sp(n),
            L::new(Kind::MinD(n + 1), Action::Plus),
        ],
        QuartetKind::Third if n >= 2 => [
            L::c(n),
            L::b(n).with_branches(2, Action::Plus),
            c_sp(n),
            L::plain(Kind::QuotDV4(n + 1)),
        ],
        QuartetKind::Third => return None,
    })
}

/// Where each corner sits in the reference square when the starting corner
/// is one of its four positions.
const ORIENTATIONS: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];

fn match_quartet(labels: &[SingularityLabel; 4], max_n: usize) -> Option<(QuartetKind, usize)> {
    for kind in [QuartetKind::First, QuartetKind::Second, QuartetKind::Third] {
        for n in 1..=max_n {
            let Some(expected) = pattern(kind, n) else {
                continue;
            };
            if ORIENTATIONS
                .iter()
                .any(|o| (0..4).all(|i| labels[i] == expected[o[i]]))
            {
                return Some((kind, n));
            }
        }
    }
    None
}

/// Builds the quartet of a minimal special degeneration `lambda > mu`.
pub fn quartet(lambda: &Partition, mu: &Partition, ctx: &OrbitContext) -> Result<Quartet> {
    let ctx = &ctx.with_form(GroupForm::Full);
    let corner = |above: Partition, below: Partition, c: OrbitContext| -> Result<Corner> {
        let label = classify_partitions(&above, &below, &c)?;
        Ok(Corner {
            ctx: c,
            above,
            below,
            label,
        })
    };
    let (fl, fctx) = apply_f(lambda, ctx)?;
    let (fm, _) = apply_f(mu, ctx)?;
    let (dl, dctx) = apply_d(lambda, ctx)?;
    let (dm, _) = apply_d(mu, ctx)?;
    let (ll, lctx) = apply_dls(lambda, ctx)?;
    let (lm, _) = apply_dls(mu, ctx)?;
    let corners = [
        corner(lambda.clone(), mu.clone(), *ctx)?,
        corner(fl, fm, fctx)?,
        corner(dm, dl, dctx)?,
        corner(lm, ll, lctx)?,
    ];
    let labels = [
        corners[0].label,
        corners[1].label,
        corners[2].label,
        corners[3].label,
    ];
    let matched = match_quartet(&labels, ctx.rank + 1);
    Ok(Quartet { corners, matched })
}

fn special_contexts(algebra: Algebra, rank: usize) -> Result<Vec<OrbitContext>> {
    Ok(match algebra {
        Algebra::C => vec![
            OrbitContext::special(Algebra::C, rank)?,
            OrbitContext::alt_special(rank)?,
        ],
        other => vec![OrbitContext::special(other, rank)?],
    })
}

/// Checks every minimal special degeneration of `algebra` (C includes the
/// alternative family) for ranks `2..=max_rank` against the three quartets.
pub fn verify_quartets(algebra: Algebra, max_rank: usize) -> Result<Report> {
    let mut report = Report::new(format!("quartets {algebra} ranks 2..={max_rank}"));
    for rank in 2..=max_rank {
        for ctx in special_contexts(algebra, rank)? {
            let poset = OrbitPoset::build(&ctx)?;
            for (hi, lo) in poset.cover_pairs() {
                let q = quartet(&hi.partition, &lo.partition, &ctx)?;
                report.record(q.matched.is_some(), || {
                    let parts: Vec<String> = q.corners.iter().map(|c| c.to_string()).collect();
                    format!("no quartet pattern: {}", parts.join(" | "))
                });
            }
        }
    }
    Ok(report)
}

/// For every minimal special degeneration of `ctx`'s series up to
/// `max_rank`, checks that it and its `d_LS` image carry labels that
/// interchange: one of the two has codimension two and the pair is allowed
/// by [`dual_compatible`].
pub fn verify_duality_theorem(ctx: &OrbitContext, max_rank: usize) -> Result<Report> {
    let mut report = Report::new(format!(
        "duality {} {} ranks 1..={max_rank}",
        ctx.algebra, ctx.family
    ));
    let base = ctx.with_form(GroupForm::Full);
    map_context(DualityMap::Dls, &base)?;
    for rank in 1..=max_rank {
        let c = base.with_rank(rank)?;
        let poset = OrbitPoset::build(&c)?;
        for (hi, lo) in poset.cover_pairs() {
            let (hi, lo) = (hi.partition, lo.partition);
            let label = classify_partitions(&hi, &lo, &c)?;
            let (dlo, target) = apply_dls(&lo, &c)?;
            let (dhi, _) = apply_dls(&hi, &c)?;
            let dual = classify_partitions(&dlo, &dhi, &target)?;
            report.record(dual_compatible(&label, &dual), || {
                format!(
                    "{} ({hi} > {lo}) {label} vs {} ({dlo} > {dhi}) {dual}",
                    c.name(),
                    target.name()
                )
            });
        }
    }
    Ok(report)
}

/// Algebraic identities of the maps on the family of `ctx` (full group),
/// ranks `1..=max_rank`: `d`, `f` and `d_LS` are involutions into the
/// expected family, `d ∘ f = f ∘ d`, `d` and `d_LS` reverse every cover,
/// and `f` preserves dimension between B and C while shifting it by `2n`
/// from D to C-alt.
pub fn verify_map_algebra(ctx: &OrbitContext, max_rank: usize) -> Result<Report> {
    let base = ctx.with_form(GroupForm::Full);
    map_context(DualityMap::D, &base)?;
    let mut report = Report::new(format!(
        "map algebra {} {} ranks 1..={max_rank}",
        base.algebra, base.family
    ));
    let first = if base.algebra == Algebra::D { 2 } else { 1 };
    for rank in first..=max_rank {
        let c = base.with_rank(rank)?;
        let poset = OrbitPoset::build(&c)?;
        for orbit in &poset.orbits {
            let p = &orbit.partition;
            for map in [DualityMap::D, DualityMap::F, DualityMap::Dls] {
                match apply_map(map, p, &c) {
                    Ok((q, qc)) => {
                        report.record(in_family(&q, &qc), || {
                            format!("{map}({p}) = {q} is not in {qc}")
                        });
                        let back = apply_map(map, &q, &qc).map(|(r, _)| r);
                        report.record(back.as_ref() == Ok(p), || {
                            format!("{map} is not an involution at {p} in {c}")
                        });
                    }
                    Err(e) => report.record(false, || format!("{map}({p}) in {c}: {e}")),
                }
            }
            let (fp, fc) = apply_f(p, &c)?;
            let shift = match (c.algebra, fc.algebra) {
                (Algebra::D, Algebra::C) => 2 * rank as isize,
                (Algebra::C, Algebra::D) => -2 * rank as isize,
                _ => 0,
            };
            let before = orbit_dimension(p, &c)? as isize;
            let after = orbit_dimension(&fp, &fc)? as isize;
            report.record(after - before == shift, || {
                format!("f({p}) = {fp}: dimension {before} -> {after}, expected shift {shift}")
            });
        }
        for &(hi, lo) in &poset.covers {
            let (a, b) = (&poset.orbits[hi].partition, &poset.orbits[lo].partition);
            for map in [DualityMap::D, DualityMap::Dls] {
                let (da, _) = apply_map(map, a, &c)?;
                let (db, _) = apply_map(map, b, &c)?;
                let reversed = da != db && dominance_leq(&da, &db)?;
                report.record(reversed, || {
                    format!("{map} does not reverse {a} > {b} in {c}")
                });
            }
        }
    }
    Ok(report)
}

/// A label read as a surface singularity, up to the low-rank coincidences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Surface {
    A(usize),
    APlus(usize),
    B(usize),
    C(usize, bool),
    D(usize),
    G2,
    F4,
    E(usize),
}

/// A label read as a minimal-orbit type singularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Minimal {
    A(usize, Action),
    A2S2,
    B(usize),
    C(usize),
    BSp(usize),
    CSp(usize),
    D(usize, Action),
    DV4(usize),
    D4S4,
    E(usize, Action),
    F4Sp,
    G2Sp,
}

/// Labels whose branches are all `A_1` surfaces, under any name.
fn is_a1_like(l: &SingularityLabel) -> bool {
    l.is_a1_type()
        || matches!(
            (l.kind, l.action),
            (Kind::MinD(2), Action::Plus) | (Kind::MinCSp(1), _) | (Kind::MinBSp(1), _)
        )
}

fn as_surface(l: &SingularityLabel) -> Vec<Surface> {
    if is_a1_like(l) {
        return vec![Surface::A(1)];
    }
    let s = match (l.kind, l.action) {
        (Kind::SurfA(k), Action::None) => Surface::A(k),
        (Kind::SurfA(k), Action::Plus) if k % 2 == 1 => Surface::B(k.div_ceil(2)),
        (Kind::SurfA(k), Action::Plus) => Surface::APlus(k),
        (Kind::SurfD(4), Action::PlusPlus) => Surface::G2,
        (Kind::SurfD(k), Action::Plus) => Surface::C(k - 1, l.star),
        (Kind::SurfD(k), Action::None) => Surface::D(k),
        (Kind::SurfE(6), Action::Plus) => Surface::F4,
        (Kind::SurfE(k), _) => Surface::E(k),
        // The non-normal slice with normalization A_3 behaves as C_2.
        (Kind::Mu, _) => Surface::C(2, l.star),
        _ => return Vec::new(),
    };
    let mut out = vec![s];
    match s {
        Surface::C(2, false) => out.push(Surface::B(2)),
        Surface::B(2) => out.push(Surface::C(2, false)),
        Surface::D(3) => out.push(Surface::A(3)),
        _ => {}
    }
    out
}

fn as_minimal(l: &SingularityLabel) -> Vec<Minimal> {
    let mut out = Vec::new();
    if is_a1_like(l) {
        out.push(Minimal::A(1, Action::None));
    }
    let m = match l.kind {
        Kind::MinA(k) => Minimal::A(k, l.action),
        Kind::QuotA2S2 => Minimal::A2S2,
        Kind::MinB(k) => Minimal::B(k),
        Kind::MinC(k) => Minimal::C(k),
        Kind::MinBSp(k) => Minimal::BSp(k),
        Kind::MinCSp(k) => Minimal::CSp(k),
        Kind::MinD(k) => Minimal::D(k, l.action),
        Kind::QuotDV4(k) => Minimal::DV4(k),
        Kind::QuotD4S4 => Minimal::D4S4,
        Kind::MinE(k) => Minimal::E(k, l.action),
        Kind::MinF4Sp => Minimal::F4Sp,
        Kind::MinG2Sp => Minimal::G2Sp,
        _ => return out,
    };
    out.push(m);
    match m {
        Minimal::CSp(2) => out.push(Minimal::BSp(2)),
        Minimal::BSp(2) => out.push(Minimal::CSp(2)),
        Minimal::D(3, a) => out.push(Minimal::A(3, a)),
        _ => {}
    }
    out
}

fn interchange(s: Surface, m: Minimal) -> bool {
    use Minimal as M;
    match s {
        Surface::A(n) => m == M::A(n, Action::None),
        Surface::APlus(n) => m == M::A(n, Action::Plus) || (n == 2 && m == M::A2S2),
        Surface::B(n) => matches!(m, M::A(k, _) if k == 2 * n - 1) || m == M::CSp(n),
        Surface::C(n, false) => {
            matches!(m, M::D(k, _) if k == n + 1) || m == M::BSp(n) || m == M::DV4(n + 1)
        }
        Surface::C(k, true) => {
            k >= 2
                && (m == M::CSp(k - 1)
                    || m == M::A(2 * k - 3, Action::Plus)
                    || (k == 2 && m == M::A(1, Action::None)))
        }
        Surface::D(n) => m == M::D(n, Action::None),
        Surface::G2 => matches!(m, M::D(4, _) | M::G2Sp | M::D4S4),
        Surface::F4 => matches!(m, M::E(6, _) | M::F4Sp),
        Surface::E(n) => m == M::E(n, Action::None),
    }
}

fn surface_to_minimal(surface: &SingularityLabel, minimal: &SingularityLabel) -> bool {
    let ms = as_minimal(minimal);
    as_surface(surface)
        .into_iter()
        .any(|s| ms.iter().any(|&m| interchange(s, m)))
}

/// Whether two labels may sit on a degeneration and its `d_LS` image.
///
/// Exactly one side must be a surface (codimension two), unless both are;
/// then one of them must consist of `A_1` branches, read as the minimal
/// orbit of sl_2. Branch counts and normalization brackets are ignored.
pub fn dual_compatible(x: &SingularityLabel, y: &SingularityLabel) -> bool {
    match (x.codim() == 2, y.codim() == 2) {
        (true, false) => surface_to_minimal(x, y),
        (false, true) => surface_to_minimal(y, x),
        (true, true) => {
            (is_a1_like(y) && surface_to_minimal(x, y))
                || (is_a1_like(x) && surface_to_minimal(y, x))
        }
        (false, false) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Algebra::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn l(s: &str) -> SingularityLabel {
        s.parse().unwrap()
    }

    #[test]
    fn d_examples() {
        let d5 = OrbitContext::special(D, 5).unwrap();
        let (q, c) = apply_d(&p("9,1"), &d5).unwrap();
        assert_eq!((q, c.name()), (p("2,1^8"), "C_5-alt".to_string()));
        let c4 = OrbitContext::special(C, 4).unwrap();
        assert_eq!(apply_d(&p("4,2,2"), &c4).unwrap().0, p("3,3,1,1"));
        assert!(apply_d(&p("2,2,1"), &OrbitContext::special(B, 2).unwrap()).is_err());
    }

    #[test]
    fn f_examples() {
        let d5 = OrbitContext::special(D, 5).unwrap();
        assert_eq!(apply_f(&p("9,1"), &d5).unwrap().0, p("10"));
        assert_eq!(apply_f(&p("3,3,2,2"), &d5).unwrap().0, p("4,2,2,2"));
        let c5 = OrbitContext::alt_special(5).unwrap();
        assert_eq!(apply_f(&p("8,2"), &c5).unwrap().0, p("7,3"));
        let b4 = OrbitContext::special(B, 4).unwrap();
        assert_eq!(apply_f(&p("5,1^4"), &b4).unwrap().0, p("4,2,1,1"));
        let c4 = OrbitContext::special(C, 4).unwrap();
        assert_eq!(apply_f(&p("4,2,1,1"), &c4).unwrap().0, p("5,1^4"));
        for (q, c) in [("5,1^4", b4), ("4,2,1,1", c4), ("9,1", d5), ("8,2", c5)] {
            assert_eq!(
                apply_f_rule(&p(q), &c).unwrap(),
                apply_f(&p(q), &c).unwrap()
            );
        }
    }

    #[test]
    fn dls_examples() {
        let b4 = OrbitContext::special(B, 4).unwrap();
        let (q, c) = apply_dls(&p("9"), &b4).unwrap();
        assert_eq!((q, c.name()), (p("1^8"), "C_4".to_string()));
        let d5 = OrbitContext::special(D, 5).unwrap();
        assert_eq!(apply_dls(&p("3,3,1^4"), &d5).unwrap().0, p("5,3,1,1"));
        assert_eq!(apply_dls(&p("3,1^7"), &d5).unwrap().0, p("7,1^3"));
    }

    #[test]
    fn quartet_examples() {
        let d5 = OrbitContext::special(D, 5).unwrap();
        let q = quartet(&p("2,2,1^6"), &p("1^10"), &d5).unwrap();
        let labels: Vec<String> = q.corners.iter().map(|c| c.label.canonical()).collect();
        assert_eq!(labels, ["d_5^+", "c^sp_4", "C_5^*", "C_4"]);
        assert_eq!(q.matched, Some((QuartetKind::Second, 4)));

        let d4 = OrbitContext::special(D, 4).unwrap();
        let q = quartet(&p("4,4"), &p("3,3,1,1"), &d4).unwrap();
        assert_eq!(q.corners[0].label.canonical(), "[2B_2]^+");
        assert_eq!(q.matched, Some((QuartetKind::Third, 2)));
    }

    #[test]
    fn interchange_table() {
        for (a, b) in [
            ("C_4", "d_5^+"),
            ("C_5^*", "c^sp_4"),
            ("B_4", "c^sp_4"),
            ("C_4", "b^sp_4"),
            ("[2B_2]^+", "c^sp_2"),
            ("C_2", "d_3/V_4"),
            ("C_1", "d_2^+"),
            ("C_2^*", "C_1"),
            ("B_1", "C_1"),
            ("A_3", "a_3"),
            ("A_2^+", "a_2/S_2"),
            ("G_2", "d_4/S_4"),
            ("(G_2)", "d_4^{++}"),
            ("F_4", "e_6^+"),
            ("mu", "b^sp_2"),
            ("C_3^*", "a_3^+"),
            ("D_6", "d_6"),
        ] {
            assert!(dual_compatible(&l(a), &l(b)), "{a} <-> {b}");
            assert!(dual_compatible(&l(b), &l(a)), "{b} <-> {a}");
        }
        for (a, b) in [
            ("C_4", "c^sp_4"),
            ("C_4^*", "d_5^+"),
            ("B_3", "b^sp_3"),
            ("D_5", "d_5^+"),
            ("C_3", "C_2"),
        ] {
            assert!(!dual_compatible(&l(a), &l(b)), "{a} <-> {b}");
        }
    }
}
