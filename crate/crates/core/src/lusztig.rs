//! Weyl groups attached to minimal special degenerations and the invariant
//! intersection-homology polynomials of their slices.

use std::fmt;

use serde::Serialize;

use crate::context::{Algebra, Family, GroupForm, Orbit, OrbitContext};
use crate::degeneration::classify;
use crate::error::{Error, Result};
use crate::label::{Action, Kind, SingularityLabel};
use crate::orbits::{orbit_dimension, OrbitPoset};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WeylType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl WeylType {
    pub fn exponents(&self) -> Vec<usize> {
        match *self {
            WeylType::A(k) => (1..=k).collect(),
            WeylType::B(k) | WeylType::C(k) => (1..=k).map(|i| 2 * i - 1).collect(),
            WeylType::D(k) => {
                let mut e: Vec<usize> = (1..k).map(|i| 2 * i - 1).collect();
                e.push(k - 1);
                e.sort_unstable();
                e
            }
            WeylType::G2 => vec![1, 5],
            WeylType::F4 => vec![1, 5, 7, 11],
            WeylType::E6 => vec![1, 4, 5, 7, 8, 11],
            WeylType::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            WeylType::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
        }
    }

    pub fn rank(&self) -> usize {
        self.exponents().len()
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylType::A(k) => write!(f, "A_{k}"),
            WeylType::B(k) => write!(f, "B_{k}"),
            WeylType::C(k) => write!(f, "C_{k}"),
            WeylType::D(k) => write!(f, "D_{k}"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Polynomial in q with non-negative integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IhPoly {
    pub coeffs: Vec<u64>,
}

impl IhPoly {
    /// `Σ q^{e-1}` over the exponents.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let degree = exponents.iter().map(|e| e - 1).max().unwrap_or(0);
        let mut coeffs = vec![0; degree + 1];
        for e in exponents {
            coeffs[e - 1] += 1;
        }
        IhPoly { coeffs }
    }

    pub fn at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0).unwrap_or(0)
    }
}

impl fmt::Display for IhPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(d, &c)| {
                let mono = match d {
                    0 => String::new(),
                    1 => "q".to_string(),
                    _ => format!("q^{d}"),
                };
                match (c, d) {
                    (c, 0) => c.to_string(),
                    (1, _) => mono,
                    (c, _) => format!("{c}{mono}"),
                }
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// `codim/2 + 1` for the degeneration `lambda > mu`.
pub fn h_value(lambda: &Orbit, mu: &Orbit, ctx: &OrbitContext) -> Result<usize> {
    let hi = orbit_dimension(&lambda.partition, ctx)?;
    let lo = orbit_dimension(&mu.partition, ctx)?;
    if lo >= hi {
        return Err(Error::NotBelow(mu.to_string(), lambda.to_string()));
    }
    Ok((hi - lo) / 2 + 1)
}

/// The Weyl group W′ attached to a minimal special degeneration.
///
/// In type D with the connected group, a slice of type `d_k` (no outer
/// action, which happens when μ has a single distinct odd part) gets
/// `D_{h/2+1}`; all other B, C, D cases get `B_{h/2}`.
pub fn wprime(lambda: &Orbit, mu: &Orbit, ctx: &OrbitContext) -> Result<WeylType> {
    let h = h_value(lambda, mu, ctx)?;
    Ok(match ctx.algebra {
        Algebra::A => WeylType::A(h - 1),
        Algebra::B | Algebra::C => WeylType::B(h / 2),
        Algebra::D => {
            let label = classify(lambda, mu, ctx)?;
            let plain_d = matches!(label.kind, Kind::MinD(_)) && label.action == Action::None;
            if ctx.form == GroupForm::Connected && plain_d {
                WeylType::D(h / 2 + 1)
            } else {
                WeylType::B(h / 2)
            }
        }
    })
}

/// The Weyl type whose exponents describe the invariant part of the
/// intersection cohomology of a slice with this label.
pub fn invariant_weyl_type(label: &SingularityLabel) -> Result<WeylType> {
    use Action::*;
    Ok(match (label.kind, label.action) {
        (Kind::MinBSp(k) | Kind::MinCSp(k) | Kind::MinB(k), _) => WeylType::B(k),
        (Kind::MinC(k), _) => WeylType::C(k),
        (Kind::MinD(4), PlusPlus) | (Kind::QuotD4S4, _) | (Kind::MinG2Sp, _) => WeylType::G2,
        (Kind::MinD(k), Plus) | (Kind::QuotDV4(k), _) => WeylType::B(k - 1),
        (Kind::MinD(k), None) => WeylType::D(k),
        (Kind::MinA(k), None) => WeylType::A(k),
        (Kind::MinA(k), Plus) if k % 2 == 1 => WeylType::C(k.div_ceil(2)),
        (Kind::MinA(k), Plus) => WeylType::B(k / 2),
        (Kind::MinE(6), Plus) | (Kind::MinF4Sp, _) => WeylType::F4,
        (Kind::MinE(6), None) => WeylType::E6,
        (Kind::MinE(7), None) => WeylType::E7,
        (Kind::MinE(8), None) => WeylType::E8,
        _ => {
            return Err(Error::Unsupported(format!(
                "no invariant polynomial for {label}"
            )))
        }
    })
}

/// `p′` of a slice: `Σ q^{e_i-1}` over the exponents of [`invariant_weyl_type`].
pub fn ih_invariant_poly(label: &SingularityLabel) -> Result<IhPoly> {
    Ok(IhPoly::from_exponents(
        &invariant_weyl_type(label)?.exponents(),
    ))
}

/// Compares the slice polynomial with the exponents of W′ on every minimal
/// special degeneration of codimension at least 4, ranks `1..=max_rank`.
pub fn verify_lusztig(ctx: &OrbitContext, max_rank: usize) -> Result<Report> {
    if ctx.family == Family::All && ctx.algebra != Algebra::A {
        return Err(Error::Context(
            "the identity concerns special families".into(),
        ));
    }
    let mut report = Report::new(format!(
        "lusztig {} ({}) ranks 1..={max_rank}",
        ctx.algebra, ctx.form
    ));
    for rank in 1..=max_rank {
        let c = ctx.with_rank(rank)?;
        let poset = OrbitPoset::build(&c)?;
        for &(hi, lo) in &poset.covers {
            if poset.dims[hi] - poset.dims[lo] < 4 {
                continue;
            }
            let (a, b) = (&poset.orbits[hi], &poset.orbits[lo]);
            let label = classify(a, b, &c)?;
            let w = wprime(a, b, &c)?;
            let lhs = ih_invariant_poly(&label)?;
            let rhs = IhPoly::from_exponents(&w.exponents());
            report.record(lhs == rhs, || {
                format!(
                    "{} ({a} > {b}) {label}: p′ = {lhs}, W′ = {w} gives {rhs}",
                    c.name()
                )
            });
        }
    }
    Ok(report)
}
