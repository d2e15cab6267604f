//! Singularity labels and their text forms.
//!
//! Canonical text uses the grammar `C_3^*`, `[2B_2]^+`, `b^sp_3`, `d_4^{++}`,
//! `d_3/V_4`, `mu`, `3(C_5)` and so on. A compact form (`C3*`, `[2B2]+`,
//! `bsp3`, `d4++`, `d3/V4`) and a typeset form for human reading are also
//! available. The parser accepts both canonical and compact input.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Underlying singularity of one branch.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// Simple surface singularity of type A_k.
    SurfA(usize),
    /// Simple surface singularity of type D_k.
    SurfD(usize),
    /// Simple surface singularity of type E_k.
    SurfE(usize),
    /// Minimal nilpotent orbit closure of sl_{k+1}.
    MinA(usize),
    /// Minimal nilpotent orbit closure of so_{2k+1}.
    MinB(usize),
    /// Minimal nilpotent orbit closure of sp_{2k}.
    MinC(usize),
    /// Minimal special orbit closure of so_{2k+1}.
    MinBSp(usize),
    /// Minimal special orbit closure of sp_{2k}.
    MinCSp(usize),
    /// Minimal nilpotent orbit closure of so_{2k}.
    MinD(usize),
    /// Minimal nilpotent orbit closure of e_k.
    MinE(usize),
    MinF4Sp,
    MinG2Sp,
    /// d_k modulo a Klein four-group.
    QuotDV4(usize),
    QuotD4S4,
    QuotA2S2,
    /// The non-normal surface with normalization A_3.
    Mu,
}

/// Outer action carried by a branch, or by the group permuting branches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Action {
    #[default]
    None,
    /// Order two.
    Plus,
    /// S_3.
    PlusPlus,
}

/// Classification label of a minimal (special) degeneration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityLabel {
    /// Number of irreducible branches.
    pub branches: usize,
    pub kind: Kind,
    /// Outer action on each branch.
    pub action: Action,
    /// Action permuting the branches (the bracketed `[kX]^+` forms).
    pub branch_action: Action,
    /// The canonical quotient acts nontrivially (`C_k^*`).
    pub star: bool,
    /// Only the normalization is known (parenthesized forms).
    pub uncertain: bool,
}

impl SingularityLabel {
    pub fn new(kind: Kind, action: Action) -> Self {
        SingularityLabel {
            branches: 1,
            kind,
            action,
            branch_action: Action::None,
            star: false,
            uncertain: false,
        }
    }

    pub fn plain(kind: Kind) -> Self {
        Self::new(kind, Action::None)
    }

    /// `C_n`: D_{n+1} with its outer involution.
    pub fn c(n: usize) -> Self {
        Self::new(Kind::SurfD(n + 1), Action::Plus)
    }

    /// `B_n`: A_{2n-1} with its outer involution.
    pub fn b(n: usize) -> Self {
        Self::new(Kind::SurfA(2 * n - 1), Action::Plus)
    }

    pub fn with_star(mut self, star: bool) -> Self {
        self.star = star;
        self
    }

    pub fn with_branches(mut self, branches: usize, branch_action: Action) -> Self {
        self.branches = branches;
        self.branch_action = branch_action;
        self
    }

    /// Codimension of the degeneration carrying this label.
    pub fn codim(&self) -> usize {
        match self.kind {
            Kind::SurfA(_) | Kind::SurfD(_) | Kind::SurfE(_) | Kind::Mu => 2,
            Kind::MinA(k) | Kind::MinC(k) => 2 * k,
            Kind::MinB(k) => 4 * k - 4,
            Kind::MinBSp(k) | Kind::MinCSp(k) => 4 * k - 2,
            Kind::MinD(k) | Kind::QuotDV4(k) => 4 * k - 6,
            Kind::MinE(6) | Kind::MinF4Sp => 22,
            Kind::MinE(7) => 34,
            Kind::MinE(_) => 58,
            Kind::MinG2Sp | Kind::QuotD4S4 => 10,
            Kind::QuotA2S2 => 4,
        }
    }

    pub fn is_surface(&self) -> bool {
        matches!(
            self.kind,
            Kind::SurfA(_) | Kind::SurfD(_) | Kind::SurfE(_) | Kind::Mu
        )
    }

    /// Whether this is the `C_k` form (D_{k+1} with outer involution), the only
    /// surface label that can carry a star in classical types.
    pub fn is_c_type(&self) -> bool {
        matches!(self.kind, Kind::SurfD(k) if k >= 2) && self.action == Action::Plus
    }

    /// Whether each branch is an A_1 surface (rendered A_1, B_1 or C_1).
    pub fn is_a1_type(&self) -> bool {
        matches!(
            (self.kind, self.action),
            (Kind::SurfA(1), _) | (Kind::SurfD(2), Action::Plus) | (Kind::MinA(1), _)
        )
    }

    /// Canonical text form.
    pub fn canonical(&self) -> String {
        self.render(Style::Canonical)
    }

    /// Compact ASCII form, e.g. `C3*` or `bsp3`.
    pub fn compact(&self) -> String {
        self.render(Style::Compact)
    }

    /// Typeset form for human reading.
    pub fn pretty(&self) -> String {
        self.render(Style::Pretty)
    }

    pub fn render(&self, style: Style) -> String {
        let mut core = core_text(self.kind, self.action, style);
        if self.uncertain {
            core = format!("({core})");
        }
        if self.star {
            core.push_str(style.star());
        }
        if self.branch_action != Action::None {
            format!(
                "[{}{}]{}",
                self.branches,
                core,
                style.plus(self.branch_action)
            )
        } else if self.branches > 1 {
            format!("{}{}", self.branches, core)
        } else {
            core
        }
    }
}

/// Text style for labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Canonical,
    Compact,
    Pretty,
}

impl Style {
    fn star(self) -> &'static str {
        match self {
            Style::Compact => "*",
            _ => "^*",
        }
    }

    fn plus(self, a: Action) -> &'static str {
        match (self, a) {
            (_, Action::None) => "",
            (Style::Compact, Action::Plus) => "+",
            (Style::Compact, Action::PlusPlus) => "++",
            (_, Action::Plus) => "^+",
            (_, Action::PlusPlus) => "^{++}",
        }
    }

    fn sub(self, letter: &str, rank: usize) -> String {
        match self {
            Style::Compact => format!("{letter}{rank}"),
            Style::Pretty if rank >= 10 => format!("{letter}_{{{rank}}}"),
            _ => format!("{letter}_{rank}"),
        }
    }

    fn sp(self, letter: &str, rank: usize) -> String {
        match self {
            Style::Canonical => format!("{letter}^sp_{rank}"),
            Style::Compact => format!("{letter}sp{rank}"),
            Style::Pretty => format!("{letter}^{{\\mathrm{{sp}}}}_{{{rank}}}"),
        }
    }

    fn group(self, name: char, order: usize) -> String {
        match self {
            Style::Compact => format!("{name}{order}"),
            Style::Canonical => format!("{name}_{order}"),
            Style::Pretty if name == 'S' => format!("\\mathfrak{{S}}_{order}"),
            Style::Pretty => format!("{name}_{order}"),
        }
    }
}

fn core_text(kind: Kind, action: Action, st: Style) -> String {
    let plus = st.plus(action);
    match kind {
        Kind::SurfA(k) if action == Action::Plus && k % 2 == 1 => st.sub("B", k.div_ceil(2)),
        Kind::SurfA(k) => format!("{}{plus}", st.sub("A", k)),
        Kind::SurfD(4) if action == Action::PlusPlus => st.sub("G", 2),
        Kind::SurfD(k) if action == Action::Plus => st.sub("C", k - 1),
        Kind::SurfD(k) => st.sub("D", k),
        Kind::SurfE(6) if action == Action::Plus => st.sub("F", 4),
        Kind::SurfE(k) => st.sub("E", k),
        Kind::MinA(k) => format!("{}{plus}", st.sub("a", k)),
        Kind::MinB(k) => format!("{}{plus}", st.sub("b", k)),
        Kind::MinC(k) => format!("{}{plus}", st.sub("c", k)),
        Kind::MinBSp(k) => st.sp("b", k),
        Kind::MinCSp(k) => st.sp("c", k),
        Kind::MinD(k) => format!("{}{plus}", st.sub("d", k)),
        Kind::MinE(k) => format!("{}{plus}", st.sub("e", k)),
        Kind::MinF4Sp => st.sp("f", 4),
        Kind::MinG2Sp => st.sp("g", 2),
        Kind::QuotDV4(k) => format!("{}/{}", st.sub("d", k), st.group('V', 4)),
        Kind::QuotD4S4 => format!("{}/{}", st.sub("d", 4), st.group('S', 4)),
        Kind::QuotA2S2 => format!("{}/{}", st.sub("a", 2), st.group('S', 2)),
        Kind::Mu => match st {
            Style::Pretty => "\\mu".to_string(),
            _ => "mu".to_string(),
        },
    }
}

impl fmt::Display for SingularityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl FromStr for SingularityLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor {
            s: s.trim(),
            pos: 0,
        };
        let label = cur
            .label()
            .ok_or_else(|| Error::Parse(format!("cannot parse label {s:?}")))?;
        if cur.pos != cur.s.len() {
            return Err(Error::Parse(format!("trailing input in label {s:?}")));
        }
        Ok(label)
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn rest(&self) -> &str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return None;
        }
        let n = self.rest()[..digits].parse().ok()?;
        self.pos += digits;
        Some(n)
    }

    /// Subscript rank: `_3`, `_{10}` or a bare `3`.
    fn rank(&mut self) -> Option<usize> {
        if self.eat("_{") {
            let n = self.number()?;
            return self.eat("}").then_some(n);
        }
        self.eat("_");
        self.number()
    }

    fn plus(&mut self) -> Action {
        if self.eat("^{++}") || self.eat("++") {
            Action::PlusPlus
        } else if self.eat("^+") || self.eat("+") {
            Action::Plus
        } else {
            Action::None
        }
    }

    fn star(&mut self) -> bool {
        self.eat("^*") || self.eat("*")
    }

    fn label(&mut self) -> Option<SingularityLabel> {
        if self.eat("[") {
            let branches = self.number()?;
            let mut inner = self.wrapped()?;
            if !self.eat("]") {
                return None;
            }
            let action = self.plus();
            if action == Action::None {
                return None;
            }
            inner.branches = branches;
            inner.branch_action = action;
            return Some(inner);
        }
        let branches = self.number().unwrap_or(1);
        let mut inner = self.wrapped()?;
        inner.branches = branches;
        Some(inner)
    }

    fn wrapped(&mut self) -> Option<SingularityLabel> {
        if self.eat("(") {
            let mut inner = self.atom()?;
            if !self.eat(")") {
                return None;
            }
            inner.uncertain = true;
            inner.star |= self.star();
            return Some(inner);
        }
        self.atom()
    }

    fn atom(&mut self) -> Option<SingularityLabel> {
        if self.eat("mu") {
            return Some(SingularityLabel::plain(Kind::Mu));
        }
        let letter = self.rest().chars().next()?;
        self.pos += 1;
        if letter.is_ascii_uppercase() {
            let k = self.rank()?;
            if k == 0 {
                return None;
            }
            let action = self.plus();
            let (kind, action) = match (letter, action) {
                ('A', Action::None) => (Kind::SurfA(k), Action::None),
                ('A', Action::Plus) if k % 2 == 0 => (Kind::SurfA(k), Action::Plus),
                ('B', Action::None) => (Kind::SurfA(2 * k - 1), Action::Plus),
                ('C', Action::None) => (Kind::SurfD(k + 1), Action::Plus),
                ('D', Action::None) => (Kind::SurfD(k), Action::None),
                ('E', Action::None) if (6..=8).contains(&k) => (Kind::SurfE(k), Action::None),
                ('F', Action::None) if k == 4 => (Kind::SurfE(6), Action::Plus),
                ('G', Action::None) if k == 2 => (Kind::SurfD(4), Action::PlusPlus),
                _ => return None,
            };
            let star = self.star();
            let mut label = SingularityLabel::new(kind, action);
            label.star = star;
            return Some(label);
        }
        let sp = self.eat("^sp") || self.eat("sp");
        let k = self.rank()?;
        if k == 0 {
            return None;
        }
        if self.eat("/") {
            let group = if self.eat("V_4") || self.eat("V4") {
                'V'
            } else if self.eat("S_4") || self.eat("S4") {
                '4'
            } else if self.eat("S_2") || self.eat("S2") {
                '2'
            } else {
                return None;
            };
            let kind = match (letter, sp, k, group) {
                ('d', false, k, 'V') => Kind::QuotDV4(k),
                ('d', false, 4, '4') => Kind::QuotD4S4,
                ('a', false, 2, '2') => Kind::QuotA2S2,
                _ => return None,
            };
            return Some(SingularityLabel::plain(kind));
        }
        let kind = match (letter, sp) {
            ('a', false) => Kind::MinA(k),
            ('b', false) => Kind::MinB(k),
            ('c', false) => Kind::MinC(k),
            ('d', false) => Kind::MinD(k),
            ('e', false) if (6..=8).contains(&k) => Kind::MinE(k),
            ('b', true) => Kind::MinBSp(k),
            ('c', true) => Kind::MinCSp(k),
            ('f', true) if k == 4 => Kind::MinF4Sp,
            ('g', true) if k == 2 => Kind::MinG2Sp,
            _ => return None,
        };
        let action = if sp { Action::None } else { self.plus() };
        Some(SingularityLabel::new(kind, action))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        for text in [
            "A_1",
            "B_1",
            "C_1",
            "C_3^*",
            "C_10",
            "D_5",
            "G_2",
            "F_4",
            "E_6",
            "A_2^+",
            "[2B_2]^+",
            "3C_2",
            "10G_2",
            "3(C_5)",
            "(G_2)",
            "(C_2)^*",
            "(A_4^+)",
            "[3A_1]^{++}",
            "[3C_2]^{++}",
            "[2a_2]^+",
            "[2g^sp_2]^+",
            "[2A_1]^+",
            "2A_1",
            "a_2",
            "a_3^+",
            "b^sp_3",
            "c^sp_4",
            "d_4^+",
            "d_4^{++}",
            "d_6",
            "d_3/V_4",
            "d_4/S_4",
            "a_2/S_2",
            "e_6^+",
            "e_8",
            "f^sp_4",
            "g^sp_2",
            "mu",
            "b_3",
            "c_2",
        ] {
            let label: SingularityLabel = text.parse().unwrap_or_else(|e| panic!("{text}: {e}"));
            assert_eq!(label.canonical(), text);
            let again: SingularityLabel = label.compact().parse().unwrap();
            assert_eq!(again, label, "compact form {} of {text}", label.compact());
        }
    }

    #[test]
    fn compact_forms() {
        let cases = [
            ("C_3^*", "C3*"),
            ("[2B_2]^+", "[2B2]+"),
            ("d_3/V_4", "d3/V4"),
            ("c^sp_2", "csp2"),
            ("b^sp_3", "bsp3"),
            ("d_4^{++}", "d4++"),
            ("g^sp_2", "gsp2"),
            ("f^sp_4", "fsp4"),
            ("[2g^sp_2]^+", "[2gsp2]+"),
        ];
        for (canon, compact) in cases {
            assert_eq!(
                canon.parse::<SingularityLabel>().unwrap().compact(),
                compact
            );
        }
    }

    #[test]
    fn structure_of_surface_names() {
        assert_eq!(SingularityLabel::c(4).canonical(), "C_4");
        assert_eq!(SingularityLabel::b(3).canonical(), "B_3");
        assert_eq!(SingularityLabel::c(3).with_star(true).canonical(), "C_3^*");
        assert_eq!(SingularityLabel::plain(Kind::SurfD(4)).canonical(), "D_4");
        let two = SingularityLabel::b(2).with_branches(2, Action::Plus);
        assert_eq!(two.canonical(), "[2B_2]^+");
        assert_eq!(
            "C_4".parse::<SingularityLabel>().unwrap().kind,
            Kind::SurfD(5)
        );
    }

    #[test]
    fn codimensions() {
        let codim = |s: &str| s.parse::<SingularityLabel>().unwrap().codim();
        assert_eq!(codim("C_3^*"), 2);
        assert_eq!(codim("c^sp_3"), 10);
        assert_eq!(codim("b^sp_2"), 6);
        assert_eq!(codim("d_4^+"), 10);
        assert_eq!(codim("d_3/V_4"), 6);
        assert_eq!(codim("a_5^+"), 10);
        assert_eq!(codim("e_8"), 58);
        assert_eq!(codim("g^sp_2"), 10);
    }

    #[test]
    fn rejects_garbage() {
        for bad in [
            "", "X_2", "B_2^+", "C_0", "[2B_2]", "q^sp_2", "d_4/W_4", "C_3^*x",
        ] {
            assert!(bad.parse::<SingularityLabel>().is_err(), "{bad}");
        }
    }

    #[test]
    fn pretty_forms() {
        let pretty = |s: &str| s.parse::<SingularityLabel>().unwrap().pretty();
        assert_eq!(pretty("c^sp_2"), "c^{\\mathrm{sp}}_{2}");
        assert_eq!(pretty("d_4/S_4"), "d_4/\\mathfrak{S}_4");
        assert_eq!(pretty("mu"), "\\mu");
    }
}
