//! Relator lists for the braid-like groups and their symmetrized closures.

use std::collections::HashSet;
use std::fmt;

use crate::error::{BraidError, Result};
use crate::word::{free_reduce_letters, invert_letters, BraidWord, Dialect, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelatorFamily {
    /// σ_i σ_j = σ_j σ_i, |i − j| ≥ 2 (labelled in the marked dialects).
    FarCommute,
    /// σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1} and its labelled variants.
    Braid,
    VirtualFarCommute,
    VirtualBraid,
    VirtualSquare,
    /// σ_i ζ_{i+1} ζ_i = ζ_{i+1} ζ_i σ_{i+1}
    Mixed,
    /// σ_i ζ_j = ζ_j σ_i, |i − j| ≥ 2
    MixedFarCommute,
    DotSquare,
    DotCommute,
    /// γ_i γ_{i+1} σ_i γ_i γ_{i+1} = σ_i
    FourDots,
    /// γ_i γ_{i+1} σ_i γ_i γ_{i+1} = σ_i⁻¹
    TwistedFourDots,
    /// γ_k σ_i = σ_i γ_k, k ∉ {i, i+1}
    DotCrossingFarCommute,
    /// σ_{i,1}² in the parity quotient.
    OddSquare,
}

impl RelatorFamily {
    /// Relators that only involve classical crossings.
    pub fn is_artin(&self) -> bool {
        matches!(self, RelatorFamily::FarCommute | RelatorFamily::Braid)
    }
}

impl fmt::Display for RelatorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelatorFamily::FarCommute => "far-commute",
            RelatorFamily::Braid => "braid",
            RelatorFamily::VirtualFarCommute => "virtual-far-commute",
            RelatorFamily::VirtualBraid => "virtual-braid",
            RelatorFamily::VirtualSquare => "virtual-square",
            RelatorFamily::Mixed => "mixed",
            RelatorFamily::MixedFarCommute => "mixed-far-commute",
            RelatorFamily::DotSquare => "dot-square",
            RelatorFamily::DotCommute => "dot-commute",
            RelatorFamily::FourDots => "four-dots",
            RelatorFamily::TwistedFourDots => "twisted-four-dots",
            RelatorFamily::DotCrossingFarCommute => "dot-far-commute",
            RelatorFamily::OddSquare => "odd-square",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Extensions {
    pub dot_crossing_far_commute: bool,
}

impl Extensions {
    pub const NONE: Extensions = Extensions { dot_crossing_far_commute: false };

    /// Dot/crossing far commutativity is on for the dotted dialects.
    pub fn default_for(dialect: &Dialect) -> Extensions {
        Extensions { dot_crossing_far_commute: dialect.is_dotted() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relator {
    pub id: usize,
    pub family: RelatorFamily,
    pub word: BraidWord,
}

impl Relator {
    pub fn name(&self) -> String {
        format!("R{}", self.id)
    }
}

/// Identifies one cyclic/inverse variant of a relator, written `R<id>.<k>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymId {
    pub relator: usize,
    pub variant: usize,
}

impl fmt::Display for SymId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}.{}", self.relator, self.variant)
    }
}

impl std::str::FromStr for SymId {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || BraidError::Trace(format!("bad relator id `{s}`"));
        let body = s.strip_prefix('R').ok_or_else(bad)?;
        let (r, k) = body.split_once('.').ok_or_else(bad)?;
        Ok(SymId {
            relator: r.parse().map_err(|_| bad())?,
            variant: k.parse().map_err(|_| bad())?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRelator {
    pub id: SymId,
    pub letters: Vec<Letter>,
}

#[derive(Clone, Debug)]
pub struct GroupPresentation {
    dialect: Dialect,
    strands: usize,
    extensions: Extensions,
    relators: Vec<Relator>,
    symmetrized: Vec<SymRelator>,
}

impl GroupPresentation {
    /// Assembles the full relator list of `dialect` on `strands` strands.
    ///
    /// The marked label group of a G-braid presentation is the one carried by
    /// [`Dialect::GBraid`].
    pub fn new(dialect: &Dialect, strands: usize, extensions: Extensions) -> Result<Self> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands { min: 2, got: strands });
        }
        let words = relator_words(dialect, strands, extensions)?;
        let relators = words
            .into_iter()
            .enumerate()
            .map(|(id, (family, letters))| Relator {
                id,
                family,
                word: BraidWord::from_trusted(dialect.clone(), strands, letters),
            })
            .collect::<Vec<_>>();
        let symmetrized = symmetrize_relators(&relators);
        Ok(GroupPresentation {
            dialect: dialect.clone(),
            strands,
            extensions,
            relators,
            symmetrized,
        })
    }

    /// Presentation with the default extensions for the dialect.
    pub fn standard(dialect: &Dialect, strands: usize) -> Result<Self> {
        Self::new(dialect, strands, Extensions::default_for(dialect))
    }

    pub fn dialect(&self) -> &Dialect {
        &self.dialect
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn extensions(&self) -> Extensions {
        self.extensions
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn relator(&self, id: usize) -> Option<&Relator> {
        self.relators.get(id)
    }

    pub fn symmetrized(&self) -> &[SymRelator] {
        &self.symmetrized
    }

    pub fn sym(&self, id: SymId) -> Option<&SymRelator> {
        // variants of one relator are contiguous and in variant order
        let start = self.symmetrized.partition_point(|s| s.id < SymId { relator: id.relator, variant: 0 });
        self.symmetrized
            .get(start + id.variant)
            .filter(|s| s.id == id)
    }

    /// The symmetrized relators as words.
    pub fn symmetrized_relators(&self) -> Vec<BraidWord> {
        self.symmetrized
            .iter()
            .map(|s| BraidWord::from_trusted(self.dialect.clone(), self.strands, s.letters.clone()))
            .collect()
    }

    pub fn check_word(&self, w: &BraidWord) -> Result<()> {
        if *w.dialect() != self.dialect {
            return Err(BraidError::DialectMismatch {
                expected: self.dialect.to_string(),
                got: w.dialect().to_string(),
            });
        }
        if w.strands() != self.strands {
            return Err(BraidError::StrandMismatch { expected: self.strands, got: w.strands() });
        }
        Ok(())
    }
}

/// Closure of `words` under cyclic rotation and inversion, cyclically and
/// freely reduced, deduplicated, trivial words dropped. Order follows the
/// input: for each word its rotations, then the rotations of its inverse.
pub fn symmetrize(words: &[BraidWord]) -> Vec<BraidWord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for w in words {
        for letters in closure_of(w.letters()) {
            if seen.insert(letters.clone()) {
                out.push(w.with_letters(letters));
            }
        }
    }
    out
}

fn symmetrize_relators(relators: &[Relator]) -> Vec<SymRelator> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in relators {
        let mut variant = 0;
        for letters in closure_of(r.word.letters()) {
            if seen.insert(letters.clone()) {
                out.push(SymRelator { id: SymId { relator: r.id, variant }, letters });
                variant += 1;
            }
        }
    }
    out
}

fn cyclic_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut w = free_reduce_letters(letters);
    while w.len() >= 2 && w[0].cancels(&w[w.len() - 1]) {
        w.pop();
        w.remove(0);
    }
    w
}

fn closure_of(letters: &[Letter]) -> Vec<Vec<Letter>> {
    let base = cyclic_reduce(letters);
    if base.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(2 * base.len());
    for w in [base.clone(), invert_letters(&base)] {
        for k in 0..w.len() {
            let mut rot = w[k..].to_vec();
            rot.extend_from_slice(&w[..k]);
            out.push(rot);
        }
    }
    out
}

type RawRelator = (RelatorFamily, Vec<Letter>);

/// `lhs · rhs⁻¹` as letters.
fn relation(lhs: &[Letter], rhs: &[Letter]) -> Vec<Letter> {
    let mut w = lhs.to_vec();
    w.extend(invert_letters(rhs));
    w
}

fn relator_words(dialect: &Dialect, n: usize, ext: Extensions) -> Result<Vec<RawRelator>> {
    let n16 = n as u16;
    let far_pairs: Vec<(u16, u16)> = (1..n16)
        .flat_map(|i| (i + 2..n16).map(move |j| (i, j)))
        .collect();
    let braid_indices: Vec<u16> = (1..n16.saturating_sub(1)).collect();
    let s = Letter::sigma;
    let v = Letter::virt;
    let d = Letter::dot;
    let mut out: Vec<RawRelator> = Vec::new();

    let artin = |out: &mut Vec<RawRelator>| {
        for &(i, j) in &far_pairs {
            out.push((RelatorFamily::FarCommute, relation(&[s(i), s(j)], &[s(j), s(i)])));
        }
        for &i in &braid_indices {
            out.push((
                RelatorFamily::Braid,
                relation(&[s(i), s(i + 1), s(i)], &[s(i + 1), s(i), s(i + 1)]),
            ));
        }
    };

    match dialect {
        Dialect::Classical => artin(&mut out),
        Dialect::Z2 | Dialect::Z2Quotient => {
            let m = |i, e| Letter::marked(i, e, false);
            for &(i, j) in &far_pairs {
                for e in 0..2 {
                    for h in 0..2 {
                        out.push((RelatorFamily::FarCommute, relation(&[m(i, e), m(j, h)], &[m(j, h), m(i, e)])));
                    }
                }
            }
            for &i in &braid_indices {
                for e in 0..2 {
                    for h in 0..2 {
                        let x = (e + h) % 2;
                        out.push((
                            RelatorFamily::Braid,
                            relation(&[m(i, e), m(i + 1, h), m(i, x)], &[m(i + 1, x), m(i, h), m(i + 1, e)]),
                        ));
                    }
                }
            }
            if *dialect == Dialect::Z2Quotient {
                for i in 1..n16 {
                    out.push((RelatorFamily::OddSquare, vec![m(i, 1), m(i, 1)]));
                }
            }
        }
        Dialect::GBraid(g) => {
            let m = |i, e: usize| Letter::marked(i, e as u16, false);
            let order = g.order();
            for &(i, j) in &far_pairs {
                for a in 0..order {
                    for b in 0..order {
                        out.push((RelatorFamily::FarCommute, relation(&[m(i, a), m(j, b)], &[m(j, b), m(i, a)])));
                    }
                }
            }
            for &i in &braid_indices {
                for a in 0..order {
                    for b in 0..order {
                        let c = g.inv(g.mul(a, b));
                        let (lhs, rhs) = crate::marked::g_relation_letters(i, a, b, c, g);
                        out.push((RelatorFamily::Braid, relation(&lhs, &rhs)));
                    }
                }
            }
        }
        Dialect::Virtual => {
            artin(&mut out);
            for &(i, j) in &far_pairs {
                out.push((RelatorFamily::VirtualFarCommute, relation(&[v(i), v(j)], &[v(j), v(i)])));
            }
            for &i in &braid_indices {
                out.push((
                    RelatorFamily::VirtualBraid,
                    relation(&[v(i), v(i + 1), v(i)], &[v(i + 1), v(i), v(i + 1)]),
                ));
            }
            for i in 1..n16 {
                out.push((RelatorFamily::VirtualSquare, vec![v(i), v(i)]));
            }
            for &i in &braid_indices {
                out.push((
                    RelatorFamily::Mixed,
                    relation(&[s(i), v(i + 1), v(i)], &[v(i + 1), v(i), s(i + 1)]),
                ));
            }
            for i in 1..n16 {
                for j in 1..n16 {
                    if i.abs_diff(j) >= 2 {
                        out.push((RelatorFamily::MixedFarCommute, relation(&[s(i), v(j)], &[v(j), s(i)])));
                    }
                }
            }
        }
        Dialect::Dotted | Dialect::TwistedDotted => {
            artin(&mut out);
            for i in 1..=n16 {
                out.push((RelatorFamily::DotSquare, vec![d(i), d(i)]));
            }
            for i in 1..=n16 {
                for j in i + 1..=n16 {
                    out.push((RelatorFamily::DotCommute, relation(&[d(i), d(j)], &[d(j), d(i)])));
                }
            }
            let twisted = *dialect == Dialect::TwistedDotted;
            for i in 1..n16 {
                let lhs = [d(i), d(i + 1), s(i), d(i), d(i + 1)];
                if twisted {
                    out.push((RelatorFamily::TwistedFourDots, relation(&lhs, &[Letter::sigma_inv(i)])));
                } else {
                    out.push((RelatorFamily::FourDots, relation(&lhs, &[s(i)])));
                }
            }
            if ext.dot_crossing_far_commute {
                for i in 1..n16 {
                    for k in 1..=n16 {
                        if k != i && k != i + 1 {
                            out.push((
                                RelatorFamily::DotCrossingFarCommute,
                                relation(&[d(k), s(i)], &[s(i), d(k)]),
                            ));
                        }
                    }
                }
            }
        }
        Dialect::Mixed => return Err(BraidError::UnknownDialect("mixed".into())),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroupTable;

    #[test]
    fn classical_three_strands() {
        let p = GroupPresentation::standard(&Dialect::Classical, 3).unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0].word.to_string(), "s1 s2 s1 S2 S1 S2");
        assert_eq!(p.symmetrized().len(), 12);
    }

    #[test]
    fn z2_braid_triples() {
        let p = GroupPresentation::standard(&Dialect::Z2, 3).unwrap();
        let words: Vec<String> = p.relators().iter().map(|r| r.word.to_string()).collect();
        assert_eq!(
            words,
            vec![
                "s1[0] s2[0] s1[0] S2[0] S1[0] S2[0]",
                "s1[0] s2[1] s1[1] S2[0] S1[1] S2[1]",
                "s1[1] s2[0] s1[1] S2[1] S1[0] S2[1]",
                "s1[1] s2[1] s1[0] S2[1] S1[1] S2[0]",
            ]
        );
    }

    #[test]
    fn gbraid_z3_has_nine_braid_relators() {
        let g = Dialect::gbraid(FiniteGroupTable::cyclic(3).unwrap());
        let p = GroupPresentation::standard(&g, 3).unwrap();
        assert_eq!(p.relators().iter().filter(|r| r.family == RelatorFamily::Braid).count(), 9);
    }

    #[test]
    fn rejects_one_strand() {
        assert!(GroupPresentation::standard(&Dialect::Classical, 1).is_err());
    }

    #[test]
    fn trivial_relators_are_not_symmetrized() {
        let p = GroupPresentation::standard(&Dialect::Virtual, 3).unwrap();
        let square = p
            .relators()
            .iter()
            .find(|r| r.family == RelatorFamily::VirtualSquare)
            .unwrap();
        assert!(p.symmetrized().iter().all(|s| s.id.relator != square.id));
    }

    #[test]
    fn symmetrized_contains_inverses() {
        let p = GroupPresentation::standard(&Dialect::Dotted, 4).unwrap();
        let set: HashSet<Vec<Letter>> = p.symmetrized().iter().map(|s| s.letters.clone()).collect();
        for s in p.symmetrized() {
            assert!(set.contains(&invert_letters(&s.letters)));
        }
    }

    #[test]
    fn sym_lookup() {
        let p = GroupPresentation::standard(&Dialect::Dotted, 4).unwrap();
        for s in p.symmetrized() {
            assert_eq!(p.sym(s.id), Some(s));
        }
        assert!(p.sym(SymId { relator: 0, variant: 99 }).is_none());
        assert_eq!("R3.5".parse::<SymId>().unwrap(), SymId { relator: 3, variant: 5 });
    }

    #[test]
    fn extension_flag_controls_dot_far_commute() {
        let on = GroupPresentation::new(&Dialect::Dotted, 3, Extensions { dot_crossing_far_commute: true }).unwrap();
        let off = GroupPresentation::new(&Dialect::Dotted, 3, Extensions::NONE).unwrap();
        let count = |p: &GroupPresentation| {
            p.relators().iter().filter(|r| r.family == RelatorFamily::DotCrossingFarCommute).count()
        };
        // γ3 past σ1 and γ1 past σ2
        assert_eq!(count(&on), 2);
        assert_eq!(count(&off), 0);
    }
}
