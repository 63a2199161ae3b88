//! The map from parity braids to virtual braids: even crossings stay
//! classical, odd crossings become virtual.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::homomorphism::{check_relator_images, HomReport};
use crate::invariants::Certificate;
use crate::presentation::GroupPresentation;
use crate::search::{equal_semidecide, relator_consequence, SearchConfig, Verdict};
use crate::trace::DerivationTrace;
use crate::word::{BraidWord, Dialect, Kind, Letter};

/// `σ_{i,0}^{±1} ↦ σ_i^{±1}`, `σ_{i,1}^{±1} ↦ ζ_i`. The sign of an odd
/// letter is lost, which is why the map has no inverse.
pub fn phi(w: &BraidWord) -> Result<BraidWord> {
    if *w.dialect() != Dialect::Z2 {
        return Err(BraidError::DialectMismatch { expected: "z2".into(), got: w.dialect().to_string() });
    }
    let letters = w
        .letters()
        .iter()
        .map(|l| {
            debug_assert_eq!(l.kind, Kind::Marked);
            if l.label == 0 {
                Letter { kind: Kind::Classical, label: 0, ..*l }
            } else {
                Letter::virt(l.index)
            }
        })
        .collect();
    BraidWord::new(Dialect::Virtual, w.strands(), letters)
}

/// Checks that every parity relator maps to a trivial virtual word.
pub fn phi_welldefined_report(strands: usize, budget: usize) -> Result<HomReport> {
    phi_welldefined_report_with(strands, &SearchConfig::with_budget(budget))
}

pub fn phi_welldefined_report_with(strands: usize, config: &SearchConfig) -> Result<HomReport> {
    let source = GroupPresentation::standard(&Dialect::Z2, strands)?;
    let target = GroupPresentation::standard(&Dialect::Virtual, strands)?;
    check_relator_images(&source, &target, config, phi)
}

/// Why `ζ_i ↦ σ_{i,1}` does not extend to a homomorphism: `ζ_i² = e` but
/// `σ_{i,1}²` is nontrivial.
#[derive(Clone, Debug)]
pub struct ReverseObstruction {
    pub index: usize,
    pub odd_square: BraidWord,
    pub odd_square_certificate: Certificate,
    pub virtual_square: BraidWord,
    pub virtual_square_trace: DerivationTrace,
}

impl fmt::Display for ReverseObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} DISTINCT {}", self.odd_square, self.odd_square_certificate)?;
        writeln!(f, "{} EQUAL depth={}", self.virtual_square, self.virtual_square_trace.depth())?;
        for l in self.virtual_square_trace.to_string().lines() {
            writeln!(f, "  {l}")?;
        }
        Ok(())
    }
}

pub fn reverse_map_obstruction(strands: usize, index: usize) -> Result<ReverseObstruction> {
    let i = index as u16;
    let z2 = GroupPresentation::standard(&Dialect::Z2, strands)?;
    let virt = GroupPresentation::standard(&Dialect::Virtual, strands)?;
    let odd_square = BraidWord::new(Dialect::Z2, strands, vec![Letter::marked(i, 1, false); 2])?;
    let empty = BraidWord::empty(Dialect::Z2, strands);
    let odd_square_certificate = match equal_semidecide(&odd_square, &empty, &z2, 0)? {
        Verdict::Distinct(c) => c,
        other => return Err(BraidError::Usage(format!("odd square not certified distinct: {other}"))),
    };
    let virtual_square = BraidWord::new(Dialect::Virtual, strands, vec![Letter::virt(i); 2])?;
    let virtual_square_trace = match relator_consequence(&virtual_square, &virt, 1)? {
        Verdict::Equal(t) => t,
        other => return Err(BraidError::Usage(format!("virtual square not trivial: {other}"))),
    };
    Ok(ReverseObstruction {
        index,
        odd_square,
        odd_square_certificate,
        virtual_square,
        virtual_square_trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, Dialect::Z2, n).unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&z2("s1[0] s2[1]", 3)).unwrap().to_string(), "s1 v2");
        assert_eq!(phi(&z2("S1[1]", 3)).unwrap().to_string(), "v1");
        assert!(phi(&z2("e", 3)).unwrap().is_empty());
        assert_eq!(phi(&z2("S2[0]", 3)).unwrap().to_string(), "S2");
    }

    #[test]
    fn phi_rejects_other_dialects() {
        let w = BraidWord::parse("s1", Dialect::Classical, 3).unwrap();
        assert!(phi(&w).is_err());
    }

    #[test]
    fn mixed_triple_is_depth_one() {
        let report = phi_welldefined_report(3, 1000).unwrap();
        // relator order: (0,0,0), (0,1,1), (1,0,1), (1,1,0)
        let line = &report.lines[1];
        assert_eq!(line.image.to_string(), "s1 v2 v1 S2 v1 v2");
        assert_eq!(line.verdict.trace().unwrap().depth(), 1);
        assert!(report.all_equal());
    }

    #[test]
    fn obstruction_shape() {
        for i in 1..=2 {
            let ob = reverse_map_obstruction(3, i).unwrap();
            assert!(ob.odd_square_certificate.names("abelianization[label-1]"));
            assert!(ob.virtual_square_trace.end.is_empty());
        }
        let sq = phi(&z2("s1[1] s1[1]", 3)).unwrap();
        assert_eq!(sq.to_string(), "v1 v1");
        assert!(sq.free_reduce().is_empty());
    }
}
