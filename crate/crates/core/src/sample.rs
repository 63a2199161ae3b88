//! Seeded random words for property checks and the harness.

use rand::Rng;

use crate::presentation::GroupPresentation;
use crate::word::{BraidWord, Dialect, Kind, Letter};

/// Uniform random letter admissible in `dialect` on `strands` strands.
pub fn random_letter<R: Rng + ?Sized>(dialect: &Dialect, strands: usize, rng: &mut R) -> Letter {
    let kinds: Vec<Kind> = [Kind::Classical, Kind::Marked, Kind::Virtual, Kind::Dot]
        .into_iter()
        .filter(|k| dialect.admits(*k))
        .filter(|k| *k == Kind::Dot || strands >= 2)
        .collect();
    let kind = kinds[rng.gen_range(0..kinds.len())];
    let crossing_index = |rng: &mut R| rng.gen_range(1..strands as u16);
    match kind {
        Kind::Classical => Letter { kind, index: crossing_index(rng), inverse: rng.gen(), label: 0 },
        Kind::Marked => {
            let order = dialect.label_order().unwrap_or(1) as u16;
            Letter::marked(crossing_index(rng), rng.gen_range(0..order), rng.gen())
        }
        Kind::Virtual => Letter::virt(crossing_index(rng)),
        Kind::Dot => Letter::dot(rng.gen_range(1..=strands as u16)),
    }
}

pub fn random_word<R: Rng + ?Sized>(dialect: &Dialect, strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let letters = (0..len).map(|_| random_letter(dialect, strands, rng)).collect();
    BraidWord::new(dialect.clone(), strands, letters).expect("sampled letters are admissible")
}

/// Random word in the even part of the parity dialect (all labels 0).
pub fn random_even_word<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let letters = (0..len)
        .map(|_| Letter::marked(rng.gen_range(1..strands as u16), 0, rng.gen()))
        .collect();
    BraidWord::new(Dialect::Z2, strands, letters).expect("even letters are admissible")
}

/// Inserts a random symmetrized relator of `p` at a random position and
/// freely reduces. Returns the new word and the index of the relator used,
/// or `None` when the presentation has no nontrivial relators.
pub fn insert_random_relator<R: Rng + ?Sized>(
    w: &BraidWord,
    p: &GroupPresentation,
    rng: &mut R,
) -> (BraidWord, Option<usize>) {
    let sym = p.symmetrized();
    if sym.is_empty() {
        return (w.clone(), None);
    }
    let k = rng.gen_range(0..sym.len());
    let pos = rng.gen_range(0..=w.len());
    let mut letters = w.letters()[..pos].to_vec();
    letters.extend_from_slice(&sym[k].letters);
    letters.extend_from_slice(&w.letters()[pos..]);
    (w.with_letters(letters).free_reduce(), Some(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn words_respect_dialect_and_seed() {
        for d in [Dialect::Classical, Dialect::Z2, Dialect::Virtual, Dialect::Dotted] {
            let a = random_word(&d, 4, 20, &mut ChaCha8Rng::seed_from_u64(3));
            let b = random_word(&d, 4, 20, &mut ChaCha8Rng::seed_from_u64(3));
            assert_eq!(a, b);
            assert!(a.letters().iter().all(|l| d.admits(l.kind)));
        }
        let even = random_even_word(3, 10, &mut ChaCha8Rng::seed_from_u64(1));
        assert!(even.letters().iter().all(|l| l.label == 0));
    }

    #[test]
    fn one_strand_words_are_dots_only() {
        let w = random_word(&Dialect::Dotted, 1, 6, &mut ChaCha8Rng::seed_from_u64(0));
        assert!(w.letters().iter().all(|l| l.kind == Kind::Dot));
    }

    #[test]
    fn insertion_reports_the_variant() {
        let p = GroupPresentation::standard(&Dialect::Classical, 3).unwrap();
        let w = BraidWord::empty(Dialect::Classical, 3);
        let (w2, k) = insert_random_relator(&w, &p, &mut ChaCha8Rng::seed_from_u64(5));
        let k = k.unwrap();
        assert_eq!(w2.letters(), &p.symmetrized()[k].letters[..]);
        let trivial = GroupPresentation::standard(&Dialect::Classical, 1);
        if let Ok(t) = trivial {
            let e = BraidWord::empty(Dialect::Classical, 1);
            assert_eq!(insert_random_relator(&e, &t, &mut ChaCha8Rng::seed_from_u64(5)).1, None);
        }
    }
}
