//! Parity (ℤ₂) and G-labelled braids: admissible third-move triples, the
//! labelled braid relation, and the parity quotient.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{BraidError, Result};
use crate::group::FiniteGroupTable;
use crate::presentation::{Extensions, GroupPresentation};
use crate::word::{letters_to_string, BraidWord, Dialect, Letter};

/// Parities `(ε, η, ξ)` of the three crossings of a third Reidemeister move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParityTriple(pub u8, pub u8, pub u8);

impl ParityTriple {
    pub fn is_admissible(&self) -> bool {
        z2_triple_admissible(*self)
    }
}

pub fn z2_triple_admissible(t: ParityTriple) -> bool {
    (t.0 + t.1 + t.2) % 2 == 0
}

/// Labels `(g, h, w)` of a G-braid third move; admissible iff `g·h·w = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LabelTriple(pub usize, pub usize, pub usize);

impl LabelTriple {
    pub fn is_admissible(&self, g: &FiniteGroupTable) -> bool {
        g.mul(g.mul(self.0, self.1), self.2) == g.identity()
    }
}

pub(crate) fn g_relation_letters(
    i: u16,
    g: usize,
    h: usize,
    w: usize,
    group: &FiniteGroupTable,
) -> (Vec<Letter>, Vec<Letter>) {
    let m = |i, e: usize| Letter::marked(i, e as u16, false);
    let lhs = vec![m(i, g), m(i + 1, h), m(i, w)];
    let rhs = vec![m(i + 1, group.inv(w)), m(i, group.inv(h)), m(i + 1, group.inv(g))];
    (lhs, rhs)
}

/// Both sides of the labelled braid relation at crossing index `i`:
/// `σ_{i,g} σ_{i+1,h} σ_{i,w} = σ_{i+1,w⁻¹} σ_{i,h⁻¹} σ_{i+1,g⁻¹}`.
pub fn g_relation(
    i: usize,
    t: LabelTriple,
    dialect: &Dialect,
    strands: usize,
) -> Result<(BraidWord, BraidWord)> {
    let group = dialect
        .group()
        .ok_or_else(|| BraidError::Usage(format!("{dialect} has no label group")))?;
    if t.0 >= group.order() || t.1 >= group.order() || t.2 >= group.order() || !t.is_admissible(group) {
        return Err(BraidError::InadmissibleTriple(t.0, t.1, t.2));
    }
    if i < 1 || i + 2 > strands {
        return Err(BraidError::IndexOutOfRange {
            position: 0,
            index: i,
            strands,
            min: 1,
            max: strands.saturating_sub(2),
        });
    }
    let (lhs, rhs) = g_relation_letters(i as u16, t.0, t.1, t.2, group);
    Ok((
        BraidWord::new(dialect.clone(), strands, lhs)?,
        BraidWord::new(dialect.clone(), strands, rhs)?,
    ))
}

/// The parity presentation with every odd generator made an involution.
pub fn quotient_presentation(strands: usize) -> Result<GroupPresentation> {
    GroupPresentation::new(&Dialect::Z2Quotient, strands, Extensions::NONE)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoLine {
    Ok(String),
    MissingInZ2(String),
    MissingInGBraid(String),
}

/// Comparison of the symmetrized relator sets of `Br_{ℤ₂}ⁿ` and `Br₂ⁿ` under
/// the label identification 0 ↔ 0, 1 ↔ 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    pub strands: usize,
    pub lines: Vec<IsoLine>,
}

impl IsoReport {
    pub fn discrepancies(&self) -> usize {
        self.lines.iter().filter(|l| !matches!(l, IsoLine::Ok(_))).count()
    }

    pub fn is_isomorphic(&self) -> bool {
        self.discrepancies() == 0
    }
}

impl fmt::Display for IsoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            match line {
                IsoLine::Ok(w) => writeln!(f, "{w} OK")?,
                IsoLine::MissingInZ2(w) => writeln!(f, "{w} MISSING-IN-z2")?,
                IsoLine::MissingInGBraid(w) => writeln!(f, "{w} MISSING-IN-gbraid")?,
            }
        }
        Ok(())
    }
}

pub fn z2_iso_report(strands: usize) -> Result<IsoReport> {
    let gbraid = GroupPresentation::standard(&Dialect::gbraid(FiniteGroupTable::cyclic(2)?), strands)?;
    let z2 = GroupPresentation::standard(&Dialect::Z2, strands)?;
    // element k of the cyclic table is the residue k, so labels carry over verbatim
    let g_set: BTreeSet<Vec<Letter>> = gbraid.symmetrized().iter().map(|s| s.letters.clone()).collect();
    let z_set: BTreeSet<Vec<Letter>> = z2.symmetrized().iter().map(|s| s.letters.clone()).collect();
    let mut lines = Vec::new();
    for w in g_set.union(&z_set) {
        let text = letters_to_string(w);
        lines.push(match (g_set.contains(w), z_set.contains(w)) {
            (true, true) => IsoLine::Ok(text),
            (true, false) => IsoLine::MissingInZ2(text),
            _ => IsoLine::MissingInGBraid(text),
        });
    }
    Ok(IsoReport { strands, lines })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_parity_triples() {
        assert!(z2_triple_admissible(ParityTriple(0, 0, 0)));
        assert!(z2_triple_admissible(ParityTriple(1, 1, 0)));
        assert!(!z2_triple_admissible(ParityTriple(1, 0, 0)));
    }

    #[test]
    fn g_relation_z2_is_self_inverse() {
        let d = Dialect::gbraid(FiniteGroupTable::cyclic(2).unwrap());
        let (lhs, rhs) = g_relation(1, LabelTriple(1, 1, 0), &d, 3).unwrap();
        assert_eq!(lhs.to_string(), "s1[1] s2[1] s1[0]");
        assert_eq!(rhs.to_string(), "s2[0] s1[1] s2[1]");
    }

    #[test]
    fn g_relation_z3_inverts_labels() {
        let d = Dialect::gbraid(FiniteGroupTable::cyclic(3).unwrap());
        let (_, rhs) = g_relation(1, LabelTriple(1, 1, 1), &d, 3).unwrap();
        assert_eq!(rhs.to_string(), "s2[2] s1[2] s2[2]");
        assert!(matches!(
            g_relation(1, LabelTriple(1, 1, 0), &d, 3),
            Err(BraidError::InadmissibleTriple(1, 1, 0))
        ));
    }

    #[test]
    fn g_relation_trivial_group_is_artin_shape() {
        let d = Dialect::gbraid(FiniteGroupTable::trivial());
        let (lhs, rhs) = g_relation(1, LabelTriple(0, 0, 0), &d, 3).unwrap();
        assert_eq!(lhs.to_string(), "s1[0] s2[0] s1[0]");
        assert_eq!(rhs.to_string(), "s2[0] s1[0] s2[0]");
    }

    #[test]
    fn iso_report_small() {
        assert!(z2_iso_report(3).unwrap().is_isomorphic());
        let r2 = z2_iso_report(2).unwrap();
        assert!(r2.lines.is_empty());
        let text = z2_iso_report(3).unwrap().to_string();
        assert!(text.lines().all(|l| l.ends_with(" OK")));
    }

    #[test]
    fn quotient_adds_odd_squares() {
        let p = quotient_presentation(3).unwrap();
        let squares: Vec<String> = p
            .relators()
            .iter()
            .filter(|r| r.family == crate::presentation::RelatorFamily::OddSquare)
            .map(|r| r.word.to_string())
            .collect();
        assert_eq!(squares, vec!["s1[1] s1[1]", "s2[1] s2[1]"]);
    }
}
