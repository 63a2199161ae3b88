//! Dialect-aware braid words.
//!
//! A word is read left to right, which is top to bottom in the flat diagram.
//! Strands are named by the position of their top endpoint.
//!
//! Text grammar, one token per letter, separated by single spaces:
//!
//! | token        | letter                         |
//! |--------------|--------------------------------|
//! | `s3` / `S3`  | classical crossing σ₃ / σ₃⁻¹   |
//! | `s3[1]`      | marked crossing σ₃ with label 1 (`S3[1]` for its inverse) |
//! | `v3`         | virtual crossing ζ₃            |
//! | `d3`         | dot on the strand at position 3 |
//! | `e`          | the empty word                 |

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{BraidError, Result};
use crate::group::FiniteGroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Classical,
    Marked,
    Virtual,
    Dot,
}

/// One letter of a braid word.
///
/// `index` is 1-based. Virtual and dot letters are involutions and always
/// carry `inverse == false`; only marked letters use `label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: Kind,
    pub index: u16,
    pub inverse: bool,
    pub label: u16,
}

impl Letter {
    pub const fn sigma(index: u16) -> Self {
        Letter { kind: Kind::Classical, index, inverse: false, label: 0 }
    }

    pub const fn sigma_inv(index: u16) -> Self {
        Letter { kind: Kind::Classical, index, inverse: true, label: 0 }
    }

    pub const fn marked(index: u16, label: u16, inverse: bool) -> Self {
        Letter { kind: Kind::Marked, index, inverse, label }
    }

    pub const fn virt(index: u16) -> Self {
        Letter { kind: Kind::Virtual, index, inverse: false, label: 0 }
    }

    pub const fn dot(index: u16) -> Self {
        Letter { kind: Kind::Dot, index, inverse: false, label: 0 }
    }

    pub fn sign(&self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_crossing(&self) -> bool {
        self.kind != Kind::Dot
    }

    pub fn is_self_inverse(&self) -> bool {
        matches!(self.kind, Kind::Virtual | Kind::Dot)
    }

    pub fn inverse(&self) -> Letter {
        if self.is_self_inverse() {
            *self
        } else {
            Letter { inverse: !self.inverse, ..*self }
        }
    }

    /// True when `self · other` freely cancels.
    #[inline]
    pub fn cancels(&self, other: &Letter) -> bool {
        self.inverse() == *other
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Classical => write!(f, "{}{}", if self.inverse { 'S' } else { 's' }, self.index),
            Kind::Marked => write!(
                f,
                "{}{}[{}]",
                if self.inverse { 'S' } else { 's' },
                self.index,
                self.label
            ),
            Kind::Virtual => write!(f, "v{}", self.index),
            Kind::Dot => write!(f, "d{}", self.index),
        }
    }
}

/// Which group a word lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dialect {
    Classical,
    Z2,
    GBraid(Arc<FiniteGroupTable>),
    Virtual,
    Dotted,
    TwistedDotted,
    Z2Quotient,
    /// Accepts every letter kind. Only test fixtures construct words in it.
    #[doc(hidden)]
    Mixed,
}

impl Dialect {
    pub fn gbraid(group: FiniteGroupTable) -> Self {
        Dialect::GBraid(Arc::new(group))
    }

    pub fn admits(&self, kind: Kind) -> bool {
        use Dialect::*;
        match self {
            Classical => kind == Kind::Classical,
            Z2 | GBraid(_) | Z2Quotient => kind == Kind::Marked,
            Virtual => matches!(kind, Kind::Classical | Kind::Virtual),
            Dotted | TwistedDotted => matches!(kind, Kind::Classical | Kind::Dot),
            Mixed => true,
        }
    }

    /// Number of labels a marked letter may carry, if the dialect has labels.
    pub fn label_order(&self) -> Option<usize> {
        match self {
            Dialect::Z2 | Dialect::Z2Quotient => Some(2),
            Dialect::GBraid(g) => Some(g.order()),
            _ => None,
        }
    }

    pub fn group(&self) -> Option<&FiniteGroupTable> {
        match self {
            Dialect::GBraid(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_dotted(&self) -> bool {
        matches!(self, Dialect::Dotted | Dialect::TwistedDotted)
    }
}

impl fmt::Display for Dialect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dialect::Classical => f.write_str("classical"),
            Dialect::Z2 => f.write_str("z2"),
            Dialect::GBraid(g) => write!(f, "gbraid:{}", g.name()),
            Dialect::Virtual => f.write_str("virtual"),
            Dialect::Dotted => f.write_str("dotted"),
            Dialect::TwistedDotted => f.write_str("twisted-dotted"),
            Dialect::Z2Quotient => f.write_str("z2-quotient"),
            Dialect::Mixed => f.write_str("mixed"),
        }
    }
}

impl FromStr for Dialect {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "classical" | "artin" => Ok(Dialect::Classical),
            "z2" => Ok(Dialect::Z2),
            "virtual" => Ok(Dialect::Virtual),
            "dotted" => Ok(Dialect::Dotted),
            "twisted-dotted" | "twisted" => Ok(Dialect::TwistedDotted),
            "z2-quotient" | "quotient" => Ok(Dialect::Z2Quotient),
            _ => match s.split_once(':') {
                Some((head, group)) if head.eq_ignore_ascii_case("gbraid") => {
                    Ok(Dialect::gbraid(FiniteGroupTable::by_name(group)?))
                }
                _ => Err(BraidError::UnknownDialect(s.to_string())),
            },
        }
    }
}

/// A permutation of strand positions, stored 0-based.
///
/// For a word, entry `p` names the strand (by its top endpoint) that arrives
/// at bottom position `p`. This is the product `t₁ ∘ t₂ ∘ … ∘ t_k` of the
/// transpositions of the word's crossings, composed as functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds a permutation from 0-based images; `None` if not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// 1-based image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.0[point - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", x + 1)?;
        }
        f.write_str("]")
    }
}

/// Result of a top-to-bottom scan of a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrandState {
    /// Bottom position → strand.
    pub perm: Permutation,
    /// Dot count per strand, indexed by 0-based strand id.
    pub dots_per_strand: Vec<u32>,
}

impl StrandState {
    pub fn dots_on(&self, strand: usize) -> u32 {
        self.dots_per_strand[strand - 1]
    }

    pub fn total_dots(&self) -> u32 {
        self.dots_per_strand.iter().sum()
    }

    pub fn dot_parities(&self) -> Vec<u8> {
        self.dots_per_strand.iter().map(|&d| (d % 2) as u8).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    dialect: Dialect,
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Validates every letter against the dialect and strand count.
    pub fn new(dialect: Dialect, strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if dialect == Dialect::Mixed {
            return Err(BraidError::UnknownDialect("mixed".into()));
        }
        Self::checked(dialect, strands, letters)
    }

    fn checked(dialect: Dialect, strands: usize, letters: Vec<Letter>) -> Result<Self> {
        if strands < 1 {
            return Err(BraidError::TooFewStrands { min: 1, got: strands });
        }
        for (position, letter) in letters.iter().enumerate() {
            check_letter(&dialect, strands, letter, position + 1)?;
        }
        let letters = letters
            .into_iter()
            .map(|l| if l.is_self_inverse() { Letter { inverse: false, label: 0, ..l } } else { l })
            .collect();
        Ok(BraidWord { dialect, strands, letters })
    }

    /// Test fixtures only: a word in the permissive mixed dialect.
    #[cfg(test)]
    pub(crate) fn mixed(strands: usize, letters: Vec<Letter>) -> Self {
        Self::checked(Dialect::Mixed, strands, letters).expect("mixed fixture")
    }

    pub fn empty(dialect: Dialect, strands: usize) -> Self {
        BraidWord { dialect, strands, letters: Vec::new() }
    }

    /// Internal constructor for letters already known to be admissible.
    pub(crate) fn from_trusted(dialect: Dialect, strands: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|l| check_letter(&dialect, strands, l, 0).is_ok()));
        BraidWord { dialect, strands, letters }
    }

    /// Parses the text grammar described in the module docs.
    pub fn parse(text: &str, dialect: Dialect, strands: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed == "e" || trimmed.is_empty() {
            return Self::new(dialect, strands, Vec::new());
        }
        let mut letters = Vec::new();
        for (i, token) in trimmed.split_whitespace().enumerate() {
            let letter = parse_token(token).ok_or_else(|| BraidError::UnknownToken {
                position: i + 1,
                token: token.to_string(),
            })?;
            check_letter(&dialect, strands, &letter, i + 1)?;
            letters.push(letter);
        }
        Self::new(dialect, strands, letters)
    }

    pub fn dialect(&self) -> &Dialect {
        &self.dialect
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn with_letters(&self, letters: Vec<Letter>) -> BraidWord {
        BraidWord { dialect: self.dialect.clone(), strands: self.strands, letters }
    }

    /// Same letters reinterpreted in another dialect; fails if a letter is
    /// not admissible there.
    pub fn recast(&self, dialect: Dialect) -> Result<BraidWord> {
        Self::new(dialect, self.strands, self.letters.clone())
    }

    pub fn check_compatible(&self, other: &BraidWord) -> Result<()> {
        if self.dialect != other.dialect {
            return Err(BraidError::DialectMismatch {
                expected: self.dialect.to_string(),
                got: other.dialect.to_string(),
            });
        }
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch { expected: self.strands, got: other.strands });
        }
        Ok(())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_compatible(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(self.with_letters(letters))
    }

    /// Group inverse: reversed letters, crossings sign-flipped.
    pub fn inverse(&self) -> BraidWord {
        self.with_letters(invert_letters(&self.letters))
    }

    pub fn free_reduce(&self) -> BraidWord {
        self.with_letters(free_reduce_letters(&self.letters))
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(&w[1]))
    }

    pub fn permutation(&self) -> Permutation {
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        for l in &self.letters {
            if l.is_crossing() {
                let i = l.index as usize - 1;
                occupant.swap(i, i + 1);
            }
        }
        Permutation(occupant)
    }

    /// Tracks which strand sits at each position and counts dots per strand.
    /// Outside the dotted dialects there are no dots and all counts are zero.
    pub fn scan_strands(&self) -> StrandState {
        let mut occupant: Vec<usize> = (0..self.strands).collect();
        let mut dots = vec![0u32; self.strands];
        for l in &self.letters {
            let i = l.index as usize - 1;
            match l.kind {
                Kind::Dot => dots[occupant[i]] += 1,
                _ => occupant.swap(i, i + 1),
            }
        }
        StrandState { perm: Permutation(occupant), dots_per_strand: dots }
    }

    /// Sum of signs over classical and marked crossings.
    pub fn crossing_exponent(&self) -> i64 {
        self.letters
            .iter()
            .filter(|l| matches!(l.kind, Kind::Classical | Kind::Marked))
            .map(|l| l.sign() as i64)
            .sum()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

pub(crate) fn write_letters(f: &mut impl fmt::Write, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("e");
    }
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

pub(crate) fn letters_to_string(letters: &[Letter]) -> String {
    let mut s = String::new();
    write_letters(&mut s, letters).expect("write to string");
    s
}

pub(crate) fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(Letter::inverse).collect()
}

/// Iterated adjacent cancellation; the result is unique.
pub(crate) fn free_reduce_letters(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for l in letters {
        match out.last() {
            Some(top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(*l),
        }
    }
    out
}

fn parse_token(token: &str) -> Option<Letter> {
    let mut chars = token.chars();
    let head = chars.next()?;
    let rest = chars.as_str();
    let (digits, label) = match rest.split_once('[') {
        Some((digits, tail)) => {
            let label = tail.strip_suffix(']')?;
            if label.is_empty() || !label.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            (digits, Some(label.parse::<u16>().ok()?))
        }
        None => (rest, None),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: u16 = digits.parse().ok()?;
    match (head, label) {
        ('s', None) => Some(Letter::sigma(index)),
        ('S', None) => Some(Letter::sigma_inv(index)),
        ('s', Some(g)) => Some(Letter::marked(index, g, false)),
        ('S', Some(g)) => Some(Letter::marked(index, g, true)),
        ('v', None) => Some(Letter::virt(index)),
        ('d', None) => Some(Letter::dot(index)),
        _ => None,
    }
}

fn check_letter(dialect: &Dialect, strands: usize, letter: &Letter, position: usize) -> Result<()> {
    if !dialect.admits(letter.kind) {
        return Err(BraidError::IllegalToken {
            position,
            token: letter.to_string(),
            dialect: dialect.to_string(),
        });
    }
    let max = if letter.kind == Kind::Dot { strands } else { strands.saturating_sub(1) };
    let index = letter.index as usize;
    if index < 1 || index > max {
        return Err(BraidError::IndexOutOfRange { position, index, strands, min: 1, max });
    }
    if letter.kind == Kind::Marked {
        if let Some(order) = dialect.label_order() {
            if letter.label as usize >= order {
                return Err(BraidError::UnknownLabel {
                    position,
                    label: letter.label as usize,
                    order,
                });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, dialect: Dialect, n: usize) -> BraidWord {
        BraidWord::parse(text, dialect, n).unwrap()
    }

    #[test]
    fn make_word_examples() {
        let one = BraidWord::new(Dialect::Classical, 3, vec![Letter::sigma(1)]).unwrap();
        assert_eq!(one.to_string(), "s1");

        let err = BraidWord::new(Dialect::Dotted, 3, vec![Letter::dot(4)]).unwrap_err();
        assert!(matches!(err, BraidError::IndexOutOfRange { index: 4, max: 3, .. }));

        let marked = BraidWord::new(Dialect::Z2, 4, vec![Letter::marked(2, 1, true)]).unwrap();
        assert_eq!(marked.to_string(), "S2[1]");
    }

    #[test]
    fn make_word_rejects_illegal_kind_and_label() {
        assert!(matches!(
            BraidWord::new(Dialect::Classical, 3, vec![Letter::virt(1)]),
            Err(BraidError::IllegalToken { .. })
        ));
        assert!(matches!(
            BraidWord::new(Dialect::Z2, 3, vec![Letter::marked(1, 2, false)]),
            Err(BraidError::UnknownLabel { label: 2, .. })
        ));
        assert!(BraidWord::new(Dialect::Mixed, 3, vec![]).is_err());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("s1 s2", Dialect::Classical, 3).inverse().to_string(), "S2 S1");
        assert_eq!(w("v1 v2", Dialect::Virtual, 3).inverse().to_string(), "v2 v1");
        let mixed = BraidWord::mixed(3, vec![Letter::dot(1), Letter::marked(1, 1, false), Letter::dot(2)]);
        assert_eq!(mixed.inverse().to_string(), "d2 S1[1] d1");
    }

    #[test]
    fn free_reduce_examples() {
        assert!(w("s1 S1", Dialect::Classical, 3).free_reduce().is_empty());
        assert_eq!(w("d2 d2 s1", Dialect::Dotted, 3).free_reduce().to_string(), "s1");
        assert!(w("s1 s2 S2 S1", Dialect::Classical, 3).free_reduce().is_empty());
        assert_eq!(w("v1 v1 s2", Dialect::Virtual, 3).free_reduce().to_string(), "s2");
        assert_eq!(w("s1[0] S1[1]", Dialect::Z2, 3).free_reduce().len(), 2);
    }

    #[test]
    fn permutation_examples() {
        let p = w("s1", Dialect::Classical, 3).permutation();
        assert_eq!(p.as_slice(), &[1, 0, 2]);
        assert!(w("d1 d2 d1", Dialect::Dotted, 3).permutation().is_identity());
        let p = w("s1 s2", Dialect::Classical, 3).permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (2, 3, 1));
    }

    #[test]
    fn scan_examples() {
        let s = w("d1 s1 d2", Dialect::Dotted, 2).scan_strands();
        assert_eq!(s.dots_per_strand, vec![2, 0]);
        let s = w("e", Dialect::Dotted, 2).scan_strands();
        assert_eq!(s.dots_per_strand, vec![0, 0]);
        assert!(s.perm.is_identity());
        let s = w("d1 d1", Dialect::Dotted, 2).scan_strands();
        assert_eq!(s.dots_on(1), 2);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = BraidWord::parse("s1[1] d2", Dialect::Z2, 3).unwrap_err();
        assert!(matches!(err, BraidError::IllegalToken { position: 2, .. }));
        let err = BraidWord::parse("s1 x2", Dialect::Classical, 3).unwrap_err();
        assert!(matches!(err, BraidError::UnknownToken { position: 2, .. }));
        assert!(BraidWord::parse("s1[]", Dialect::Z2, 3).is_err());
        assert!(BraidWord::parse("s", Dialect::Classical, 3).is_err());
        assert!(BraidWord::parse("e", Dialect::Virtual, 3).unwrap().is_empty());
    }

    #[test]
    fn parse_canonical_spacing() {
        let word = w("  s1   S2 ", Dialect::Classical, 3);
        assert_eq!(word.to_string(), "s1 S2");
        assert_eq!(word.letters(), &[Letter::sigma(1), Letter::sigma_inv(2)]);
    }

    #[test]
    fn dialect_names_round_trip() {
        for d in [
            Dialect::Classical,
            Dialect::Z2,
            Dialect::gbraid(FiniteGroupTable::symmetric3()),
            Dialect::Virtual,
            Dialect::Dotted,
            Dialect::TwistedDotted,
            Dialect::Z2Quotient,
        ] {
            assert_eq!(d.to_string().parse::<Dialect>().unwrap(), d);
        }
    }
}
