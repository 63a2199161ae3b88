//! Exact word problem for classical braids via Dynnikov coordinates.
//!
//! `B_n` acts on `ℤ^{2n}` through piecewise-linear formulas in max/min.
//! The coordinates are those of the disk with two extra fixed punctures, one
//! on each side, so every generator uses the interior update rule. A braid
//! is trivial iff it fixes the vector `(0, 1, 0, 1, …, 0, 1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{BraidError, Result};
use crate::word::{BraidWord, Dialect, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DynnikovCoordinates(Vec<BigInt>);

impl DynnikovCoordinates {
    /// `(0, 1, …, 0, 1)` for `n` strands.
    pub fn initial(strands: usize) -> Self {
        let mut v = Vec::with_capacity(2 * strands);
        for _ in 0..strands {
            v.push(BigInt::zero());
            v.push(BigInt::one());
        }
        DynnikovCoordinates(v)
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    /// Applies one crossing `σ_i^{±1}` in place.
    fn apply(&mut self, letter: &Letter) {
        let i = letter.index as usize - 1;
        let (x1, y1, x2, y2) = (&self.0[2 * i], &self.0[2 * i + 1], &self.0[2 * i + 2], &self.0[2 * i + 3]);
        let (nx1, ny1, nx2, ny2);
        if !letter.inverse {
            let z = x1 - neg(y1) - x2 + pos(y2);
            nx1 = x1 + pos(y1) + pos(&(pos(y2) - &z));
            ny1 = y2 - pos(&z);
            nx2 = x2 + neg(y2) + neg(&(neg(y1) + &z));
            ny2 = y1 + pos(&z);
        } else {
            let z = x1 + neg(y1) - x2 - pos(y2);
            nx1 = x1 - pos(y1) - pos(&(pos(y2) + &z));
            ny1 = y2 + neg(&z);
            nx2 = x2 - neg(y2) - neg(&(neg(y1) - &z));
            ny2 = y1 - neg(&z);
        }
        self.0[2 * i] = nx1;
        self.0[2 * i + 1] = ny1;
        self.0[2 * i + 2] = nx2;
        self.0[2 * i + 3] = ny2;
    }
}

impl fmt::Display for DynnikovCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn pos(x: &BigInt) -> BigInt {
    if x.sign() == num_bigint::Sign::Plus {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn neg(x: &BigInt) -> BigInt {
    if x.sign() == num_bigint::Sign::Minus {
        x.clone()
    } else {
        BigInt::zero()
    }
}

fn require_classical(w: &BraidWord) -> Result<()> {
    if *w.dialect() != Dialect::Classical {
        return Err(BraidError::DialectMismatch {
            expected: Dialect::Classical.to_string(),
            got: w.dialect().to_string(),
        });
    }
    Ok(())
}

/// Left-to-right action of `w` on the initial coordinates.
pub fn coordinate_action(w: &BraidWord) -> Result<DynnikovCoordinates> {
    require_classical(w)?;
    if w.strands() < 3 {
        return Err(BraidError::TooFewStrands { min: 3, got: w.strands() });
    }
    let mut c = DynnikovCoordinates::initial(w.strands());
    for l in w.letters() {
        c.apply(l);
    }
    Ok(c)
}

/// Decides equality in the Artin braid group.
pub fn classical_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    require_classical(u)?;
    u.check_compatible(v)?;
    if u.strands() < 3 {
        // B_1 is trivial and B_2 is infinite cyclic
        return Ok(u.crossing_exponent() == v.crossing_exponent());
    }
    let diff = u.concat(&v.inverse())?.free_reduce();
    Ok(coordinate_action(&diff)? == DynnikovCoordinates::initial(u.strands()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, Dialect::Classical, n).unwrap()
    }

    #[test]
    fn braid_relation_holds() {
        assert!(classical_equal(&w("s1 s2 s1", 3), &w("s2 s1 s2", 3)).unwrap());
        assert!(!classical_equal(&w("s1", 3), &w("s2", 3)).unwrap());
    }

    #[test]
    fn identity_and_inverse_pairs() {
        assert_eq!(coordinate_action(&w("e", 4)).unwrap(), DynnikovCoordinates::initial(4));
        assert_eq!(coordinate_action(&w("s1 S1", 4)).unwrap(), DynnikovCoordinates::initial(4));
        assert_eq!(coordinate_action(&w("S3 s3", 4)).unwrap(), DynnikovCoordinates::initial(4));
    }

    #[test]
    fn two_strands_use_exponent_sum() {
        assert!(classical_equal(&w("s1 s1 S1", 2), &w("s1", 2)).unwrap());
        assert!(!classical_equal(&w("s1 s1", 2), &w("e", 2)).unwrap());
        assert!(coordinate_action(&w("s1", 2)).is_err());
    }

    #[test]
    fn pure_braids_that_do_not_commute() {
        assert!(!classical_equal(&w("s1 s1 s2 s2", 3), &w("s2 s2 s1 s1", 3)).unwrap());
    }

    #[test]
    fn rejects_other_dialects() {
        let v = BraidWord::parse("v1", Dialect::Virtual, 3).unwrap();
        assert!(classical_equal(&v, &v).is_err());
    }

    #[test]
    fn long_words_need_big_integers() {
        let text = vec!["s1 S2"; 60].join(" ");
        let c = coordinate_action(&w(&text, 3)).unwrap();
        assert!(c.as_slice().iter().any(|x| x.bits() > 64));
    }
}
