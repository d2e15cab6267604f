//! Reduction of degeneration pairs to irreducible local pairs, classification
//! of minimal (special) degenerations, component-group characters and the
//! star decoration.

use std::fmt;

use crate::context::{Family, Orbit, OrbitContext};
use crate::error::{Error, Result};
use crate::label::{Action, Kind, SingularityLabel};
use crate::orbits::{in_family, is_special, is_valid_partition, not_in_family};
use crate::partition::{dominance_leq, enumerate_partitions, Partition};

/// One cancellation step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Common leading rows removed from both partitions.
    Rows(Vec<usize>),
    /// A common first column of the given height removed from both.
    Column { height: usize },
}

/// Record of the cancellation of common rows and columns.
///
/// Common trailing rows need no separate step: two partitions with equal
/// trailing rows have the same number of parts, so column removal strips them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    /// The irreducible pair left over.
    pub local_pair: (Partition, Partition),
    /// Number of columns removed (s).
    pub columns_removed: usize,
    /// Number of rows above the local pattern (l).
    pub height_offset: usize,
}

impl ReductionTrace {
    pub fn leading_rows_removed(&self) -> Vec<usize> {
        self.steps
            .iter()
            .flat_map(|s| match s {
                Step::Rows(r) => r.clone(),
                Step::Column { .. } => Vec::new(),
            })
            .collect()
    }

    /// Undoes every step, recovering the original pair.
    pub fn reconstruct(&self) -> (Partition, Partition) {
        let (mut a, mut b) = self.local_pair.clone();
        for step in self.steps.iter().rev() {
            match step {
                Step::Rows(rows) => {
                    let prepend = |p: &Partition| {
                        let mut parts = rows.clone();
                        parts.extend_from_slice(p.parts());
                        Partition::new(parts)
                    };
                    a = prepend(&a);
                    b = prepend(&b);
                }
                Step::Column { height } => {
                    a = a.add_columns(*height, 1);
                    b = b.add_columns(*height, 1);
                }
            }
        }
        (a, b)
    }
}

/// Cancels common leading rows and common first columns until none remain.
pub fn reduce_pair(
    lambda: &Partition,
    mu: &Partition,
    ctx: &OrbitContext,
) -> Result<ReductionTrace> {
    let all = ctx.with_family(Family::All)?;
    for p in [lambda, mu] {
        if !is_valid_partition(p, &all) {
            return Err(crate::orbits::invalid(p, ctx));
        }
    }
    if !dominance_leq(mu, lambda)? {
        return Err(Error::NotBelow(mu.to_string(), lambda.to_string()));
    }
    Ok(reduce_unchecked(lambda, mu))
}

fn reduce_unchecked(lambda: &Partition, mu: &Partition) -> ReductionTrace {
    let (mut a, mut b) = (lambda.clone(), mu.clone());
    let mut steps = Vec::new();
    let (mut columns, mut rows) = (0, 0);
    loop {
        let common = a
            .parts()
            .iter()
            .zip(b.parts())
            .take_while(|(x, y)| x == y)
            .count();
        if common > 0 {
            steps.push(Step::Rows(a.parts()[..common].to_vec()));
            a = Partition::new(a.parts()[common..].to_vec());
            b = Partition::new(b.parts()[common..].to_vec());
            rows += common;
        } else if !a.is_empty() && a.len() == b.len() {
            steps.push(Step::Column { height: a.len() });
            a = Partition::new(a.parts().iter().map(|x| x - 1).collect());
            b = Partition::new(b.parts().iter().map(|x| x - 1).collect());
            columns += 1;
        } else {
            break;
        }
    }
    ReductionTrace {
        steps,
        local_pair: (a, b),
        columns_removed: columns,
        height_offset: rows,
    }
}

/// Normal forms of irreducible minimal degenerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pattern {
    /// `([k+1],[k,1])` in type A.
    SubregularA(usize),
    /// `([2,1^{k-1}],[1^{k+1}])` in type A.
    MinimalA(usize),
    /// `([2],[1,1])`.
    TypeA,
    /// `([2n],[2n-2,2])`.
    TypeB(usize),
    /// `([2n+1],[2n-1,1,1])`.
    TypeC(usize),
    /// `([2n+1,2n+1],[2n,2n,2])`.
    TypeD(usize),
    /// `([2n,2n],[2n-1,2n-1,1,1])`.
    TypeE(usize),
    /// Minimal orbit of so_{2n+1}: `([2,2,1^{2n-3}],[1^{2n+1}])`.
    MinimalB(usize),
    /// Minimal orbit of sp_{2n}: `([2,1^{2n-2}],[1^{2n}])`.
    MinimalC(usize),
    /// Minimal orbit of so_{2n}: `([2,2,1^{2n-4}],[1^{2n}])`.
    MinimalD(usize),
    /// Minimal special orbit of sp_{2n}: `([2,2,1^{2n-4}],[1^{2n}])`.
    GSp(usize),
    /// Minimal special orbit of so_{2n+1}: `([3,1^{2n-2}],[1^{2n+1}])`.
    F1Sp(usize),
    /// `([3,3,2^{2n-2}],[2^{2n+1}])` in sp_{4n+2}.
    F2Sp(usize),
    /// `([4,2^{2n-2}],[2^{2n}])` in sp_{4n}.
    HSp(usize),
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::SubregularA(k) => write!(f, "A{k}"),
            Pattern::MinimalA(k) => write!(f, "a{k}"),
            Pattern::TypeA => write!(f, "a"),
            Pattern::TypeB(n) => write!(f, "b(n={n})"),
            Pattern::TypeC(n) => write!(f, "c(n={n})"),
            Pattern::TypeD(n) => write!(f, "d(n={n})"),
            Pattern::TypeE(n) => write!(f, "e(n={n})"),
            Pattern::MinimalB(n) => write!(f, "f(n={n})"),
            Pattern::MinimalC(n) => write!(f, "g(n={n})"),
            Pattern::MinimalD(n) => write!(f, "h(n={n})"),
            Pattern::GSp(n) => write!(f, "g_sp(n={n})"),
            Pattern::F1Sp(n) => write!(f, "f1_sp(n={n})"),
            Pattern::F2Sp(n) => write!(f, "f2_sp(n={n})"),
            Pattern::HSp(n) => write!(f, "h_sp(n={n})"),
        }
    }
}

fn is_const(p: &[usize], v: usize) -> bool {
    p.iter().all(|&x| x == v)
}

/// Matches an irreducible pair whose ambient ε (after column removal) is `eps_local`.
fn match_pattern(lam: &Partition, mu: &Partition, eps_local: Option<usize>) -> Option<Pattern> {
    let (l, m) = (lam.parts(), mu.parts());
    let Some(eps) = eps_local else {
        return match (l, m) {
            ([a], [b, 1]) if *a == b + 1 => Some(Pattern::SubregularA(*b)),
            ([2, rest @ ..], ones)
                if is_const(rest, 1) && is_const(ones, 1) && ones.len() == rest.len() + 2 =>
            {
                Some(Pattern::MinimalA(ones.len() - 1))
            }
            _ => None,
        };
    };
    let odd = eps == 1;
    let n_ones = |x: &[usize]| if is_const(x, 1) { Some(x.len()) } else { None };
    match (l, m) {
        ([2], [1, 1]) if odd => Some(Pattern::TypeA),
        ([a], [b, 2]) if odd && a % 2 == 0 && *a >= 4 && *b == a - 2 => Some(Pattern::TypeB(a / 2)),
        ([a], [b, 1, 1]) if !odd && a % 2 == 1 && *b + 2 == *a => Some(Pattern::TypeC(a / 2)),
        ([a, a2], [b, b2, 2]) if odd && a == a2 && b == b2 && a % 2 == 1 && *b + 1 == *a => {
            Some(Pattern::TypeD(a / 2))
        }
        ([a, a2], [b, b2, 1, 1]) if !odd && a == a2 && b == b2 && a % 2 == 0 && *b + 1 == *a => {
            Some(Pattern::TypeE(a / 2))
        }
        ([2, 2, rest @ ..], ones)
            if n_ones(rest).is_some() && n_ones(ones) == Some(rest.len() + 4) =>
        {
            let total = ones.len();
            match (odd, total % 2) {
                (false, 1) if total >= 5 => Some(Pattern::MinimalB(total / 2)),
                (false, 0) if total >= 6 => Some(Pattern::MinimalD(total / 2)),
                (true, 0) if total >= 4 => Some(Pattern::GSp(total / 2)),
                _ => None,
            }
        }
        ([2, rest @ ..], ones)
            if odd && n_ones(rest).is_some() && n_ones(ones) == Some(rest.len() + 2) =>
        {
            let total = ones.len();
            (total % 2 == 0 && total >= 4).then_some(Pattern::MinimalC(total / 2))
        }
        ([3, rest @ ..], ones)
            if !odd && n_ones(rest).is_some() && n_ones(ones) == Some(rest.len() + 3) =>
        {
            let total = ones.len();
            (total % 2 == 1 && total >= 5).then_some(Pattern::F1Sp(total / 2))
        }
        ([3, 3, rest @ ..], twos)
            if odd && is_const(rest, 2) && is_const(twos, 2) && twos.len() == rest.len() + 3 =>
        {
            let k = twos.len();
            (k % 2 == 1 && k >= 5).then_some(Pattern::F2Sp(k / 2))
        }
        ([4, rest @ ..], twos)
            if odd && is_const(rest, 2) && is_const(twos, 2) && twos.len() == rest.len() + 2 =>
        {
            let k = twos.len();
            (k % 2 == 0 && k >= 4).then_some(Pattern::HSp(k / 2))
        }
        _ => None,
    }
}

/// Full classification result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: SingularityLabel,
    pub pattern: Pattern,
    pub trace: ReductionTrace,
}

/// Label of the covering pair `lambda > mu` in the family poset of `ctx`.
pub fn classify(lambda: &Orbit, mu: &Orbit, ctx: &OrbitContext) -> Result<SingularityLabel> {
    Ok(classify_detailed(lambda, mu, ctx)?.label)
}

/// Like [`classify`], also returning the reduction trace and matched pattern.
pub fn classify_detailed(lambda: &Orbit, mu: &Orbit, ctx: &OrbitContext) -> Result<Classification> {
    let (lam, m) = (&lambda.partition, &mu.partition);
    for p in [lam, m] {
        if !in_family(p, ctx) {
            return Err(not_in_family(p, ctx));
        }
    }
    let trace = reduce_pair(lam, m, ctx)?;
    let s = trace.columns_removed;
    let eps_local = ctx.eps().map(|e| (e + s) % 2);
    let (ll, lm) = &trace.local_pair;
    let pattern = match_pattern(ll, lm, eps_local).ok_or_else(|| Error::Unclassified {
        above: lam.to_string(),
        below: m.to_string(),
        local: format!("({ll}, {lm})"),
    })?;
    let mut label = base_label(pattern);
    if ctx.splits_very_even() {
        adjust_for_connected(&mut label, pattern, lam, m);
    }
    if ctx.family != Family::All
        && matches!(pattern, Pattern::TypeB(_))
        && label.action == Action::Plus
    {
        let chi = slice_outer_character(&trace, &label, m, ctx)?;
        label.star = star_from(&chi, &canonical_kernel_h(m, ctx)?);
    }
    Ok(Classification {
        label,
        pattern,
        trace,
    })
}

fn base_label(p: Pattern) -> SingularityLabel {
    use SingularityLabel as L;
    match p {
        Pattern::SubregularA(k) => L::plain(Kind::SurfA(k)),
        Pattern::MinimalA(k) => L::plain(Kind::MinA(k)),
        Pattern::TypeA => L::c(1),
        Pattern::TypeB(n) => L::c(n),
        Pattern::TypeC(n) | Pattern::TypeD(n) => L::b(n),
        // Two A_1 branches swapped: the same as the minimal orbit of so_4.
        Pattern::TypeE(1) => L::new(Kind::MinD(2), Action::Plus),
        Pattern::TypeE(n) => L::b(n).with_branches(2, Action::Plus),
        Pattern::MinimalB(n) => L::plain(Kind::MinB(n)),
        Pattern::MinimalC(n) => L::plain(Kind::MinC(n)),
        Pattern::MinimalD(n) => L::new(Kind::MinD(n), Action::Plus),
        Pattern::GSp(n) => L::plain(Kind::MinCSp(n)),
        Pattern::F1Sp(n) | Pattern::F2Sp(n) => L::plain(Kind::MinBSp(n)),
        Pattern::HSp(n) => L::plain(Kind::QuotDV4(n + 1)),
    }
}

/// Label changes when only SO(2n) acts.
fn adjust_for_connected(
    label: &mut SingularityLabel,
    pattern: Pattern,
    lam: &Partition,
    mu: &Partition,
) {
    let odd_parts = mu.parts().iter().filter(|&&x| x % 2 == 1).count();
    let distinct_odd = mu.distinct_parts().iter().filter(|&&x| x % 2 == 1).count();
    match pattern {
        Pattern::TypeB(n) if odd_parts == 2 => *label = SingularityLabel::plain(Kind::SurfD(n + 1)),
        // λ very even: each of the two orbits meets μ in a single branch.
        Pattern::TypeE(n) if lam.all_parts_even() => *label = SingularityLabel::b(n),
        Pattern::MinimalD(n) if distinct_odd == 1 => {
            *label = SingularityLabel::plain(Kind::MinD(n))
        }
        _ => {}
    }
}

/// Generators `x_s` of A(e): one per distinct part `s ≢ ε`, descending.
pub fn component_group(mu: &Partition, ctx: &OrbitContext) -> Result<Vec<usize>> {
    let all = ctx.with_family(Family::All)?;
    if !is_valid_partition(mu, &all) {
        return Err(crate::orbits::invalid(mu, ctx));
    }
    let Some(eps) = ctx.eps() else {
        return Ok(Vec::new());
    };
    Ok(mu
        .distinct_parts()
        .into_iter()
        .filter(|s| s % 2 != eps)
        .collect())
}

/// Value of the slice character on a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Character {
    Trivial,
    Outer,
}

/// The character of A(e) recording which generators act by outer action on
/// the slice, listed per generator of [`component_group`].
pub fn slice_outer_character(
    trace: &ReductionTrace,
    label: &SingularityLabel,
    mu: &Partition,
    ctx: &OrbitContext,
) -> Result<Vec<(usize, Character)>> {
    let gens = component_group(mu, ctx)?;
    let s = trace.columns_removed;
    let eps_local = ctx.eps().map(|e| (e + s) % 2);
    let pattern = match_pattern(&trace.local_pair.0, &trace.local_pair.1, eps_local);
    let consistent = pattern
        .map(base_label)
        .is_some_and(|b| b.kind == label.kind);
    if !consistent {
        return Err(Error::Unsupported(format!(
            "label {label} does not arise from the given reduction"
        )));
    }
    // Local parts whose generators act by outer action.
    let acting: Vec<usize> = match pattern {
        Some(Pattern::TypeB(n)) => vec![2 * n - 2, 2],
        Some(Pattern::TypeC(_)) => vec![1],
        Some(Pattern::TypeD(n)) => vec![2 * n],
        Some(Pattern::TypeE(n)) => vec![2 * n - 1, 1],
        _ => Vec::new(),
    };
    let mut outer: Vec<usize> = acting.iter().map(|p| p + s).collect();
    outer.dedup();
    Ok(gens
        .into_iter()
        .map(|g| {
            (
                g,
                if outer.contains(&g) {
                    Character::Outer
                } else {
                    Character::Trivial
                },
            )
        })
        .collect())
}

/// Generators of the kernel H of the map to the canonical quotient, each
/// given as the set of parts whose product `x_s x_{s'}` it is (`x_0` omitted).
pub fn canonical_kernel_h(mu: &Partition, ctx: &OrbitContext) -> Result<Vec<Vec<usize>>> {
    let gens = component_group(mu, ctx)?;
    let Some(eps_prime) = crate::orbits::speciality_eps_prime(ctx) else {
        return Ok(Vec::new());
    };
    Ok(gens
        .iter()
        .enumerate()
        .filter(|&(_, &s)| mu.height(s) % 2 != eps_prime)
        .map(|(i, &s)| match gens.get(i + 1) {
            Some(&below) => vec![s, below],
            None => vec![s],
        })
        .collect())
}

fn star_from(chi: &[(usize, Character)], h: &[Vec<usize>]) -> bool {
    let outer = |s: &usize| chi.iter().any(|(g, c)| g == s && *c == Character::Outer);
    h.iter()
        .any(|gen| gen.iter().filter(|s| outer(s)).count() % 2 == 1)
}

/// Whether the canonical quotient acts nontrivially on a `C_k` slice.
pub fn star_decoration(
    label: &SingularityLabel,
    trace: &ReductionTrace,
    mu: &Partition,
    ctx: &OrbitContext,
) -> Result<bool> {
    if !label.is_c_type() || label.kind == Kind::SurfD(2) {
        return Ok(false);
    }
    let chi = slice_outer_character(trace, label, mu, ctx)?;
    Ok(star_from(&chi, &canonical_kernel_h(mu, ctx)?))
}

/// Valid partitions strictly between `mu` and `lambda`, each with its
/// speciality flag for the family of `ctx`.
pub fn intermediate_orbits(
    lambda: &Partition,
    mu: &Partition,
    ctx: &OrbitContext,
) -> Result<Vec<(Partition, bool)>> {
    if !dominance_leq(mu, lambda)? {
        return Err(Error::NotBelow(mu.to_string(), lambda.to_string()));
    }
    let all = ctx.with_family(Family::All)?;
    let mut out = Vec::new();
    for nu in enumerate_partitions(ctx.n_total())? {
        if nu != *lambda
            && nu != *mu
            && is_valid_partition(&nu, &all)
            && dominance_leq(mu, &nu)?
            && dominance_leq(&nu, lambda)?
        {
            let special = is_special(&nu, ctx)?;
            out.push((nu, special));
        }
    }
    Ok(out)
}

/// The parity conditions on the number of rows above the local pattern that
/// accompany each special normal form. `None` for forms without a condition.
pub fn height_parity_condition(pattern: Pattern) -> Option<bool> {
    // Some(true): l ≡ ε′; Some(false): l ≢ ε′.
    match pattern {
        Pattern::TypeA
        | Pattern::TypeD(_)
        | Pattern::TypeE(_)
        | Pattern::GSp(_)
        | Pattern::F2Sp(_) => Some(true),
        Pattern::MinimalD(_) => Some(true),
        Pattern::TypeC(_) | Pattern::F1Sp(_) | Pattern::HSp(_) => Some(false),
        _ => None,
    }
}

/// Whether a classification in a special family obeys the height parity of
/// its normal form.
pub fn parity_consistent(c: &Classification, ctx: &OrbitContext) -> bool {
    match (height_parity_condition(c.pattern), ctx.eps_prime()) {
        (Some(same), Some(ep)) => (c.trace.height_offset % 2 == ep) == same,
        _ => true,
    }
}

/// Convenience for callers holding plain partitions in a family without
/// very-even splitting.
pub fn classify_partitions(
    lambda: &Partition,
    mu: &Partition,
    ctx: &OrbitContext,
) -> Result<SingularityLabel> {
    classify(&Orbit::new(lambda.clone()), &Orbit::new(mu.clone()), ctx)
}
