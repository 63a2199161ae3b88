//! Relator-invariant quantities used as inequality certificates.

use std::fmt;

use crate::error::Result;
use crate::presentation::GroupPresentation;
use crate::word::{BraidWord, Dialect, Kind, Permutation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub permutation: Permutation,
    /// Named abelianization classes and their exponent totals.
    pub abelianization: Vec<(String, i64)>,
    /// Number of odd crossings mod 2 (parity dialects).
    pub odd_exponent_parity: Option<u8>,
    /// Crossing exponent sum mod 2 (twisted dotted).
    pub crossing_exponent_parity: Option<u8>,
    /// Dot count parity per strand (dotted dialects).
    pub dot_parities: Option<Vec<u8>>,
}

/// One component on which two records disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub component: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} vs {}", self.component, self.left, self.right)
    }
}

/// Proof of inequality: every listed component is unchanged by relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub mismatches: Vec<Mismatch>,
}

impl Certificate {
    pub fn names(&self, component: &str) -> bool {
        self.mismatches.iter().any(|m| m.component == component)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.mismatches.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

pub fn invariants(w: &BraidWord, p: &GroupPresentation) -> Result<InvariantRecord> {
    p.check_word(w)?;
    Ok(InvariantRecord::of(w))
}

impl InvariantRecord {
    pub fn of(w: &BraidWord) -> InvariantRecord {
        let letters = w.letters();
        let exp_where = |pred: &dyn Fn(&crate::word::Letter) -> bool| -> i64 {
            letters
                .iter()
                .filter(|l| l.kind != Kind::Virtual && l.kind != Kind::Dot && pred(l))
                .map(|l| l.sign() as i64)
                .sum()
        };
        let odd_count = || (letters.iter().filter(|l| l.kind == Kind::Marked && l.label == 1).count() % 2) as u8;

        let mut abelianization = Vec::new();
        let mut odd_exponent_parity = None;
        let mut crossing_exponent_parity = None;
        let mut dot_parities = None;
        match w.dialect() {
            Dialect::Classical => {
                abelianization.push(("sigma".to_string(), exp_where(&|_| true)));
            }
            Dialect::Virtual => {
                abelianization.push(("sigma".to_string(), exp_where(&|_| true)));
                let zetas = letters.iter().filter(|l| l.kind == Kind::Virtual).count() as i64;
                abelianization.push(("zeta-mod-2".to_string(), zetas % 2));
            }
            Dialect::Z2 => {
                for label in 0..2u16 {
                    abelianization.push((format!("label-{label}"), exp_where(&|l| l.label == label)));
                }
                odd_exponent_parity = Some(odd_count());
            }
            Dialect::Z2Quotient => {
                abelianization.push(("label-0".to_string(), exp_where(&|l| l.label == 0)));
                odd_exponent_parity = Some(odd_count());
            }
            Dialect::GBraid(g) => {
                // a braid relation trades labels g for g⁻¹, so only the
                // classes {g, g⁻¹} survive
                for rep in g.inverse_classes() {
                    let inv = g.inv(rep);
                    let name = if inv == rep {
                        format!("label-{rep}")
                    } else {
                        format!("label-{rep}|{inv}")
                    };
                    let total = exp_where(&|l| l.label as usize == rep || l.label as usize == inv);
                    abelianization.push((name, total));
                }
            }
            Dialect::Dotted => {
                abelianization.push(("crossing".to_string(), w.crossing_exponent()));
                dot_parities = Some(w.scan_strands().dot_parities());
            }
            Dialect::TwistedDotted => {
                crossing_exponent_parity = Some(w.crossing_exponent().rem_euclid(2) as u8);
                dot_parities = Some(w.scan_strands().dot_parities());
            }
            Dialect::Mixed => {
                abelianization.push(("crossing".to_string(), w.crossing_exponent()));
            }
        }
        InvariantRecord {
            permutation: w.permutation(),
            abelianization,
            odd_exponent_parity,
            crossing_exponent_parity,
            dot_parities,
        }
    }

    /// All components that differ, in a fixed order.
    pub fn compare(&self, other: &InvariantRecord) -> Option<Certificate> {
        let mut mismatches = Vec::new();
        let mut push = |component: String, left: String, right: String| {
            mismatches.push(Mismatch { component, left, right })
        };
        if self.permutation != other.permutation {
            push("permutation".into(), self.permutation.to_string(), other.permutation.to_string());
        }
        if self.odd_exponent_parity != other.odd_exponent_parity {
            push(
                "odd-exponent-parity".into(),
                fmt_opt(self.odd_exponent_parity),
                fmt_opt(other.odd_exponent_parity),
            );
        }
        if self.crossing_exponent_parity != other.crossing_exponent_parity {
            push(
                "crossing-exponent-parity".into(),
                fmt_opt(self.crossing_exponent_parity),
                fmt_opt(other.crossing_exponent_parity),
            );
        }
        if self.dot_parities != other.dot_parities {
            push(
                "dot-parity".into(),
                format!("{:?}", self.dot_parities.clone().unwrap_or_default()),
                format!("{:?}", other.dot_parities.clone().unwrap_or_default()),
            );
        }
        for ((name, a), (_, b)) in self.abelianization.iter().zip(&other.abelianization) {
            if a != b {
                push(format!("abelianization[{name}]"), a.to_string(), b.to_string());
            }
        }
        if mismatches.is_empty() {
            None
        } else {
            Some(Certificate { mismatches })
        }
    }
}

fn fmt_opt(x: Option<u8>) -> String {
    x.map_or_else(|| "-".to_string(), |v| v.to_string())
}

impl fmt::Display for InvariantRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "permutation {}", self.permutation)?;
        for (name, v) in &self.abelianization {
            writeln!(f, "abelianization[{name}] {v}")?;
        }
        if let Some(p) = self.odd_exponent_parity {
            writeln!(f, "odd-exponent-parity {p}")?;
        }
        if let Some(p) = self.crossing_exponent_parity {
            writeln!(f, "crossing-exponent-parity {p}")?;
        }
        if let Some(d) = &self.dot_parities {
            let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            writeln!(f, "dot-parity ({})", s.join(","))?;
        }
        Ok(())
    }
}
