//! Orbit contexts: which algebra, which family of orbits, which group.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Classical Lie algebra series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Algebra {
    /// sl_{n+1}
    A,
    /// so_{2n+1}
    B,
    /// sp_{2n}
    C,
    /// so_{2n}
    D,
}

/// Which orbits make up the poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    All,
    Special,
    /// The alternative special family of type C (height parity flipped).
    AltSpecial,
}

/// Full orthogonal/symplectic group versus its identity component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupForm {
    Full,
    Connected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitContext {
    pub algebra: Algebra,
    pub rank: usize,
    pub family: Family,
    pub form: GroupForm,
}

impl OrbitContext {
    pub fn new(algebra: Algebra, rank: usize, family: Family, form: GroupForm) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Context("rank must be positive".into()));
        }
        if family == Family::AltSpecial && algebra != Algebra::C {
            return Err(Error::Context(
                "the alternative special family exists only in type C".into(),
            ));
        }
        Ok(OrbitContext {
            algebra,
            rank,
            family,
            form,
        })
    }

    /// Special family, full group.
    pub fn special(algebra: Algebra, rank: usize) -> Result<Self> {
        Self::new(algebra, rank, Family::Special, GroupForm::Full)
    }

    /// Alternative special family of sp_{2n}.
    pub fn alt_special(rank: usize) -> Result<Self> {
        Self::new(Algebra::C, rank, Family::AltSpecial, GroupForm::Full)
    }

    /// All orbits, full group.
    pub fn all(algebra: Algebra, rank: usize) -> Result<Self> {
        Self::new(algebra, rank, Family::All, GroupForm::Full)
    }

    pub fn with_family(self, family: Family) -> Result<Self> {
        Self::new(self.algebra, self.rank, family, self.form)
    }

    pub fn with_rank(self, rank: usize) -> Result<Self> {
        Self::new(self.algebra, rank, self.family, self.form)
    }

    pub fn with_form(self, form: GroupForm) -> Self {
        OrbitContext { form, ..self }
    }

    /// Size of the natural representation.
    pub fn n_total(&self) -> usize {
        match self.algebra {
            Algebra::A => self.rank + 1,
            Algebra::B => 2 * self.rank + 1,
            Algebra::C | Algebra::D => 2 * self.rank,
        }
    }

    /// ε: parts congruent to ε mod 2 must have even multiplicity. `None` in type A.
    pub fn eps(&self) -> Option<usize> {
        match self.algebra {
            Algebra::A => None,
            Algebra::B | Algebra::D => Some(0),
            Algebra::C => Some(1),
        }
    }

    /// ε′ of the height condition; only meaningful for the special families.
    pub fn eps_prime(&self) -> Option<usize> {
        match (self.algebra, self.family) {
            (Algebra::A, _) | (_, Family::All) => None,
            (Algebra::B, _) => Some(1),
            (Algebra::C, Family::Special) => Some(0),
            (Algebra::C, Family::AltSpecial) => Some(1),
            (Algebra::D, _) => Some(0),
        }
    }

    /// Whether orbits with all parts even split in two (connected group in type D).
    pub fn splits_very_even(&self) -> bool {
        self.algebra == Algebra::D && self.form == GroupForm::Connected
    }

    pub fn lie_algebra_dim(&self) -> usize {
        let n = self.rank;
        match self.algebra {
            Algebra::A => (n + 1) * (n + 1) - 1,
            Algebra::B | Algebra::C => n * (2 * n + 1),
            Algebra::D => n * (2 * n - 1),
        }
    }

    /// Short name such as `C_5` or `C_5-alt`.
    pub fn name(&self) -> String {
        let base = format!("{:?}_{}", self.algebra, self.rank);
        match self.family {
            Family::AltSpecial => format!("{base}-alt"),
            _ => base,
        }
    }
}

impl fmt::Display for OrbitContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ({})", self.name(), self.family, self.form)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::All => "all",
            Family::Special => "special",
            Family::AltSpecial => "asp",
        })
    }
}

impl fmt::Display for GroupForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupForm::Full => "full",
            GroupForm::Connected => "connected",
        })
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Algebra::A),
            "B" => Ok(Algebra::B),
            "C" => Ok(Algebra::C),
            "D" => Ok(Algebra::D),
            other => Err(Error::Parse(format!("unknown algebra type {other:?}"))),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "all" => Ok(Family::All),
            "special" => Ok(Family::Special),
            "asp" | "alt" | "alt_special" => Ok(Family::AltSpecial),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

impl FromStr for GroupForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "full" => Ok(GroupForm::Full),
            "connected" => Ok(GroupForm::Connected),
            other => Err(Error::Parse(format!("unknown group form {other:?}"))),
        }
    }
}

/// Which of the two SO(2n)-orbits a very even partition labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VeryEvenTag {
    None,
    I,
    II,
}

impl VeryEvenTag {
    pub fn suffix(&self) -> &'static str {
        match self {
            VeryEvenTag::None => "",
            VeryEvenTag::I => ":I",
            VeryEvenTag::II => ":II",
        }
    }
}

/// A nilpotent orbit: its partition plus the very-even tag when relevant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orbit {
    pub partition: Partition,
    pub tag: VeryEvenTag,
}

impl Orbit {
    pub fn new(partition: Partition) -> Self {
        Orbit {
            partition,
            tag: VeryEvenTag::None,
        }
    }

    pub fn tagged(partition: Partition, tag: VeryEvenTag) -> Self {
        Orbit { partition, tag }
    }

    /// Compact partition plus `:I`/`:II`; used as the node id in rendered graphs.
    pub fn id(&self) -> String {
        format!("{}{}", self.partition.compact(), self.tag.suffix())
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.partition, self.tag.suffix())
    }
}

impl From<Partition> for Orbit {
    fn from(p: Partition) -> Self {
        Orbit::new(p)
    }
}
