//! Integer partitions: representation, text form, transpose, dominance.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `N` accepted by [`enumerate_partitions`]. p(60) is just under a million.
pub const MAX_ENUMERATION: usize = 60;

/// A weakly decreasing sequence of positive integers.
///
/// Zeros are never stored; constructors strip them.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    total: usize,
}

impl Partition {
    /// Builds a partition from parts in any order; zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let total = parts.iter().sum();
        Partition { parts, total }
    }

    /// Builds a partition from parts that must already be weakly decreasing.
    pub fn from_decreasing(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts are not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition::new(parts))
    }

    /// The partition `[n]`.
    pub fn row(n: usize) -> Self {
        Partition::new(vec![n])
    }

    /// The partition `[1^n]`.
    pub fn column(n: usize) -> Self {
        Partition::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn total(&self) -> usize {
        self.total
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), with zero padding past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    /// m(s): how many parts equal `s`.
    pub fn multiplicity(&self, s: usize) -> usize {
        self.parts.iter().filter(|&&p| p == s).count()
    }

    /// h(s): how many parts are at least `s`.
    pub fn height(&self, s: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= s).count()
    }

    /// Distinct parts in decreasing order.
    pub fn distinct_parts(&self) -> Vec<usize> {
        let mut out = self.parts.clone();
        out.dedup();
        out
    }

    /// Distinct parts paired with their multiplicities, decreasing.
    pub fn part_counts(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The conjugate partition: column lengths of the Young diagram.
    pub fn transpose(&self) -> Partition {
        let cols = (1..=self.largest()).map(|i| self.height(i)).collect();
        Partition {
            parts: cols,
            total: self.total,
        }
    }

    /// Partial sums λ_1, λ_1+λ_2, ... padded to length `len`.
    fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (0..len)
            .map(|i| {
                acc += self.part(i);
                acc
            })
            .collect()
    }

    /// `self ⪯ other` in dominance order. Totals must agree.
    pub fn dominated_by(&self, other: &Partition) -> Result<bool> {
        dominance_leq(self, other)
    }

    /// Compact text with exponent shorthand, e.g. `3^2,1^4`.
    pub fn compact(&self) -> String {
        self.part_counts()
            .iter()
            .map(|&(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Fully expanded text, e.g. `3,3,1,1,1,1`.
    pub fn expanded(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Whether every part is even (and there is at least one part).
    pub fn all_parts_even(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Removes one from the last part.
    pub fn minus(&self) -> Partition {
        let mut parts = self.parts.clone();
        if let Some(last) = parts.last_mut() {
            *last -= 1;
        }
        Partition::new(parts)
    }

    /// Adds one to the first part (or creates `[1]` from the empty partition).
    pub fn plus(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => *first += 1,
            None => parts.push(1),
        }
        Partition::new(parts)
    }

    /// Adds `k` to each of the first `rows` parts, padding with zeros as needed.
    pub fn add_columns(&self, rows: usize, k: usize) -> Partition {
        let len = rows.max(self.len());
        let parts = (0..len)
            .map(|i| self.part(i) + if i < rows { k } else { 0 })
            .collect();
        Partition::new(parts)
    }
}

/// Dominance order on partitions of the same integer.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.total != b.total {
        return Err(Error::SizeMismatch {
            left: a.total,
            right: b.total,
        });
    }
    let len = a.len().max(b.len());
    let (sa, sb) = (a.partial_sums(len), b.partial_sums(len));
    Ok(sa.iter().zip(&sb).all(|(x, y)| x <= y))
}

/// All partitions of `n`, in reverse lexicographic order (`[n]` first).
///
/// Reverse lex order is a linear extension of dominance: anything dominating a
/// partition appears before it.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n > MAX_ENUMERATION {
        return Err(Error::BoundExceeded {
            what: "partition size",
            value: n,
            max: MAX_ENUMERATION,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
            total: current.iter().sum(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    /// Lexicographic on parts, which refines dominance.
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts
            .cmp(&other.parts)
            .then(self.total.cmp(&other.total))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "[{}]", self.expanded())
        } else {
            write!(f, "[{}]", self.compact())
        }
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `part(^mult)?(,part(^mult)?)*`; whitespace and enclosing brackets are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let body = cleaned.trim_start_matches('[').trim_end_matches(']');
        if body.is_empty() {
            return Ok(Partition::default());
        }
        let mut parts = Vec::new();
        for token in body.split(',') {
            let (part, mult) = match token.split_once('^') {
                Some((p, m)) => (p, m),
                None => (token, "1"),
            };
            let part: usize = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {part:?} in {s:?}")))?;
            let mult: usize = mult
                .parse()
                .map_err(|_| Error::Parse(format!("bad multiplicity {mult:?} in {s:?}")))?;
            if part == 0 || mult == 0 {
                return Err(Error::Parse(format!(
                    "parts and multiplicities must be positive in {s:?}"
                )));
            }
            parts.extend(std::iter::repeat_n(part, mult));
        }
        Partition::from_decreasing(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::row(7).transpose(), Partition::column(7));
        assert_eq!(p("9,1").transpose(), p("2,1^8"));
        assert_eq!(p("4,2,2,1,1").transpose(), p("5,3,1,1"));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p("2,2"), &p("3,1")).unwrap());
        assert!(!dominance_leq(&p("4,2,2,1,1"), &p("3,3,2,2")).unwrap());
        assert!(!dominance_leq(&p("3,3,2,2"), &p("4,2,2,1,1")).unwrap());
        assert!(dominance_leq(&p("1^8"), &p("8")).unwrap());
        assert!(dominance_leq(&p("3"), &p("2,2")).is_err());
    }

    #[test]
    fn multiplicity_and_height() {
        let x = p("6,4,2");
        assert_eq!((x.multiplicity(4), x.height(4)), (1, 2));
        assert_eq!(x.height(1), 3);
        let y = p("2^4");
        assert_eq!((y.multiplicity(2), y.height(2)), (4, 4));
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::default()]);
        let four: Vec<String> = enumerate_partitions(4)
            .unwrap()
            .iter()
            .map(|x| x.expanded())
            .collect();
        assert_eq!(four, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);
        assert!(enumerate_partitions(MAX_ENUMERATION + 1).is_err());
    }

    #[test]
    fn text_round_trip() {
        let x = p("3, 1^5");
        assert_eq!(x, p("3,1,1,1,1,1"));
        assert_eq!(x.compact(), "3,1^5");
        assert_eq!(x.expanded(), "3,1,1,1,1,1");
        assert_eq!(format!("{x}"), "[3,1^5]");
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn plus_minus() {
        assert_eq!(p("3,1").minus(), p("3"));
        assert_eq!(p("3,1").plus(), p("4,1"));
        assert_eq!(Partition::default().plus(), p("1"));
        assert_eq!(p("2,1").add_columns(3, 1), p("3,2,1"));
    }
}
