//! Dotted braids and the parity they encode.
//!
//! `f` sends an odd crossing to a crossing with one dot on each half of the
//! strand passing over it. On a good word (every strand carries an even
//! number of dots) the parity of a crossing is read back as the number of
//! dots met so far by its two incoming strands, mod 2.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{BraidError, Result};
use crate::homomorphism::{check_relator_images, HomReport};
use crate::presentation::{Extensions, GroupPresentation, RelatorFamily, SymId};
use crate::search::{relator_consequence_with, SearchConfig, Verdict};
use crate::word::{free_reduce_letters, BraidWord, Dialect, Kind, Letter};

fn require(w: &BraidWord, allowed: &[Dialect]) -> Result<()> {
    if allowed.contains(w.dialect()) {
        Ok(())
    } else {
        Err(BraidError::DialectMismatch {
            expected: allowed.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("|"),
            got: w.dialect().to_string(),
        })
    }
}

fn substitute(w: &BraidWord) -> Vec<Letter> {
    let mut out = Vec::with_capacity(w.len() * 3);
    for l in w.letters() {
        let i = l.index;
        match (l.label, l.inverse) {
            (0, false) => out.push(Letter::sigma(i)),
            (0, true) => out.push(Letter::sigma_inv(i)),
            (_, false) => out.extend([Letter::dot(i), Letter::sigma(i), Letter::dot(i + 1)]),
            (_, true) => out.extend([Letter::dot(i + 1), Letter::sigma_inv(i), Letter::dot(i)]),
        }
    }
    out
}

/// `σ_{i,0} ↦ σ_i`, `σ_{i,1} ↦ γ_i σ_i γ_{i+1}`, inverses to inverses.
pub fn f_map(w: &BraidWord) -> Result<BraidWord> {
    require(w, &[Dialect::Z2])?;
    BraidWord::new(Dialect::Dotted, w.strands(), substitute(w))
}

/// The same substitution from the parity quotient into twisted dotted braids.
pub fn f_twisted(w: &BraidWord) -> Result<BraidWord> {
    require(w, &[Dialect::Z2Quotient])?;
    BraidWord::new(Dialect::TwistedDotted, w.strands(), substitute(w))
}

pub fn is_good(w: &BraidWord) -> bool {
    w.scan_strands().dots_per_strand.iter().all(|d| d % 2 == 0)
}

fn check_good(w: &BraidWord) -> Result<()> {
    let scan = w.scan_strands();
    match scan.dots_per_strand.iter().position(|d| d % 2 == 1) {
        Some(s) => Err(BraidError::NotGood { strand: s + 1, dots: scan.dots_per_strand[s] }),
        None => Ok(()),
    }
}

/// Parity of each crossing from incoming dot counts, with no goodness check.
pub(crate) fn extract_parities(letters: &[Letter], strands: usize) -> Vec<Letter> {
    let mut occupant: Vec<usize> = (0..strands).collect();
    let mut dots = vec![0u32; strands];
    let mut out = Vec::new();
    for l in letters {
        let i = l.index as usize - 1;
        if l.kind == Kind::Dot {
            dots[occupant[i]] += 1;
        } else {
            let p = (dots[occupant[i]] + dots[occupant[i + 1]]) % 2;
            out.push(Letter::marked(l.index, p as u16, l.inverse));
            occupant.swap(i, i + 1);
        }
    }
    out
}

/// Reads a parity braid off a good dotted word. Twisted dotted words land in
/// the parity quotient.
pub fn g_map(w: &BraidWord) -> Result<BraidWord> {
    require(w, &[Dialect::Dotted, Dialect::TwistedDotted])?;
    check_good(w)?;
    let target = if *w.dialect() == Dialect::Dotted { Dialect::Z2 } else { Dialect::Z2Quotient };
    BraidWord::new(target, w.strands(), extract_parities(w.letters(), w.strands()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingParity {
    /// Position of the crossing letter in the word.
    pub position: usize,
    pub incoming: u8,
    pub outgoing: u8,
}

/// Parities of every crossing of a good word, computed from both halves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityAssignment {
    pub crossings: Vec<CrossingParity>,
}

impl ParityAssignment {
    pub fn halves_agree(&self) -> bool {
        self.crossings.iter().all(|c| c.incoming == c.outgoing)
    }
}

pub fn parity_assignment(w: &BraidWord) -> Result<ParityAssignment> {
    require(w, &[Dialect::Dotted, Dialect::TwistedDotted])?;
    check_good(w)?;
    let totals = w.scan_strands().dots_per_strand;
    let n = w.strands();
    let mut occupant: Vec<usize> = (0..n).collect();
    let mut seen = vec![0u32; n];
    let mut crossings = Vec::new();
    for (position, l) in w.letters().iter().enumerate() {
        let i = l.index as usize - 1;
        if l.kind == Kind::Dot {
            seen[occupant[i]] += 1;
            continue;
        }
        let (a, b) = (occupant[i], occupant[i + 1]);
        let incoming = ((seen[a] + seen[b]) % 2) as u8;
        let outgoing = ((totals[a] - seen[a] + totals[b] - seen[b]) % 2) as u8;
        crossings.push(CrossingParity { position, incoming, outgoing });
        occupant.swap(i, i + 1);
    }
    let assignment = ParityAssignment { crossings };
    assert!(assignment.halves_agree(), "good word with disagreeing halves");
    Ok(assignment)
}

/// `f(σ_{i,1}) f(σ_{i,1})` in the twisted dotted presentation.
pub fn twisted_lune_check(i: usize, strands: usize, budget: usize) -> Result<Verdict> {
    let p = GroupPresentation::standard(&Dialect::TwistedDotted, strands)?;
    let lune = twisted_lune(i, strands, Dialect::TwistedDotted)?;
    relator_consequence_with(&lune, &p, &SearchConfig::with_budget(budget))
}

/// `γ_i σ_i γ_{i+1} γ_i σ_i γ_{i+1}` in a dotted dialect.
pub fn twisted_lune(i: usize, strands: usize, dialect: Dialect) -> Result<BraidWord> {
    let i = i as u16;
    let half = [Letter::dot(i), Letter::sigma(i), Letter::dot(i + 1)];
    BraidWord::new(dialect, strands, [half, half].concat())
}

/// Images under `f` of every parity relator, checked in the dotted
/// presentation with or without dot/crossing far commutativity.
pub fn f_welldefined_report(strands: usize, budget: usize, dot_far_commute: bool) -> Result<HomReport> {
    f_welldefined_report_with(strands, &SearchConfig::with_budget(budget), dot_far_commute)
}

pub fn f_welldefined_report_with(strands: usize, config: &SearchConfig, dot_far_commute: bool) -> Result<HomReport> {
    let source = GroupPresentation::standard(&Dialect::Z2, strands)?;
    let target = GroupPresentation::new(
        &Dialect::Dotted,
        strands,
        Extensions { dot_crossing_far_commute: dot_far_commute },
    )?;
    check_relator_images(&source, &target, config, f_map)
}

/// Images of the parity-quotient relators in the twisted dotted presentation.
pub fn f_twisted_welldefined_report(strands: usize, budget: usize) -> Result<HomReport> {
    let source = GroupPresentation::standard(&Dialect::Z2Quotient, strands)?;
    let target = GroupPresentation::standard(&Dialect::TwistedDotted, strands)?;
    check_relator_images(&source, &target, &SearchConfig::with_budget(budget), f_twisted)
}

/// One random move of the harness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessStep {
    pub step: usize,
    pub relator: SymId,
    pub family: RelatorFamily,
    pub deletion: bool,
    pub good: bool,
    /// Parity relator relating the previous and new parity words, if any.
    pub g_delta: Option<SymId>,
    /// Sum mod 2 of the three extracted parities, for braid-relation moves.
    pub braid_parity_sum: Option<u8>,
    pub ok: bool,
}

impl fmt::Display for HarnessStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "STEP {} {} good={} g-delta=", self.step, self.relator, self.good)?;
        match self.g_delta {
            Some(id) => write!(f, "{id}"),
            None => f.write_str("none"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessReport {
    pub seed: u64,
    pub steps: Vec<HarnessStep>,
    pub final_word: BraidWord,
}

impl HarnessReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.ok)
    }
}

impl fmt::Display for HarnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Applies `moves` seeded random relator insertions or deletions of the
/// dotted presentation to a good word, checking after each one that the word
/// stays good and that its parity word changes by at most one parity relator.
pub fn move_invariance_harness(w: &BraidWord, moves: usize, seed: u64) -> Result<HarnessReport> {
    require(w, &[Dialect::Dotted])?;
    check_good(w)?;
    let n = w.strands();
    let dotted = GroupPresentation::standard(&Dialect::Dotted, n)?;
    let z2 = GroupPresentation::standard(&Dialect::Z2, n)?;
    let z2_lookup: HashMap<&[Letter], SymId> =
        z2.symmetrized().iter().map(|s| (s.letters.as_slice(), s.id)).collect();
    let sym = dotted.symmetrized();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = w.free_reduce();
    let mut steps = Vec::with_capacity(moves);

    for step in 1..=moves {
        let occurrences: Vec<(usize, usize)> = (0..cur.len())
            .flat_map(|pos| {
                let letters = cur.letters();
                sym.iter()
                    .enumerate()
                    .filter(move |(_, r)| letters[pos..].starts_with(&r.letters))
                    .map(move |(k, _)| (pos, k))
            })
            .collect();
        let deletion = !occurrences.is_empty() && rng.gen_bool(0.5);
        let (pos, k) = if deletion {
            occurrences[rng.gen_range(0..occurrences.len())]
        } else {
            (rng.gen_range(0..=cur.len()), rng.gen_range(0..sym.len()))
        };
        let r = &sym[k].letters;
        let family = dotted.relator(sym[k].id.relator).expect("relator id").family;

        let mut raw = cur.letters()[..pos].to_vec();
        if deletion {
            raw.extend_from_slice(&cur.letters()[pos + r.len()..]);
        } else {
            raw.extend_from_slice(r);
            raw.extend_from_slice(&cur.letters()[pos..]);
        }
        let next = cur.with_letters(free_reduce_letters(&raw));
        let good = is_good(&next);

        let g_old = extract_parities(cur.letters(), n);
        let g_new = free_reduce_letters(&extract_parities(next.letters(), n));
        let mut g_delta = None;
        let mut braid_parity_sum = None;
        let ok = if family.is_artin() {
            // the parity word of the relator in the context where it sits
            let mut context = cur.letters()[..pos].to_vec();
            context.extend_from_slice(r);
            let z_all = extract_parities(&context, n);
            let z = &z_all[z_all.len() - r.len()..];
            let q = z_all.len() - r.len();
            let expected = if deletion {
                let matches = g_old[q..q + r.len()] == *z;
                let mut e = g_old[..q].to_vec();
                e.extend_from_slice(&g_old[q + r.len()..]);
                matches.then_some(e)
            } else {
                let mut e = g_old[..q].to_vec();
                e.extend_from_slice(z);
                e.extend_from_slice(&g_old[q..]);
                Some(e)
            };
            g_delta = z2_lookup.get(z).copied();
            if family == RelatorFamily::Braid {
                let sum: u16 = z.iter().filter(|l| !l.inverse).map(|l| l.label).sum();
                braid_parity_sum = Some((sum % 2) as u8);
            }
            g_delta.is_some()
                && braid_parity_sum.unwrap_or(0) == 0
                && expected.is_some_and(|e| free_reduce_letters(&e) == g_new)
        } else {
            free_reduce_letters(&g_old) == g_new
        };

        steps.push(HarnessStep {
            step,
            relator: sym[k].id,
            family,
            deletion,
            good,
            g_delta,
            braid_parity_sum,
            ok: ok && good,
        });
        cur = next;
    }
    Ok(HarnessReport { seed, steps, final_word: cur })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, Dialect::Z2, n).unwrap()
    }

    fn dotted(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, Dialect::Dotted, n).unwrap()
    }

    #[test]
    fn f_map_examples() {
        assert_eq!(f_map(&z2("s1[1]", 3)).unwrap().to_string(), "d1 s1 d2");
        assert_eq!(f_map(&z2("s1[0]", 3)).unwrap().to_string(), "s1");
        assert_eq!(f_map(&z2("S1[1]", 3)).unwrap().to_string(), "d2 S1 d1");
        assert!(f_map(&dotted("s1", 3)).is_err());
    }

    #[test]
    fn f_map_inverse_letter_is_group_inverse() {
        let x = f_map(&z2("s2[1]", 3)).unwrap();
        let y = f_map(&z2("S2[1]", 3)).unwrap();
        assert!(x.concat(&y).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn goodness_examples() {
        assert!(is_good(&dotted("d1 s1 d2", 2)));
        assert!(!is_good(&dotted("d1", 2)));
        assert!(matches!(g_map(&dotted("d1", 2)), Err(BraidError::NotGood { strand: 1, dots: 1 })));
    }

    #[test]
    fn g_map_examples() {
        assert_eq!(g_map(&dotted("s1", 2)).unwrap().to_string(), "s1[0]");
        assert_eq!(g_map(&dotted("d1 d1 s1", 2)).unwrap().to_string(), "s1[0]");
        assert_eq!(g_map(&dotted("d1 s1 d2", 2)).unwrap().to_string(), "s1[1]");
    }

    #[test]
    fn twisted_examples() {
        let q = BraidWord::parse("s1[1] s1[1]", Dialect::Z2Quotient, 3).unwrap();
        assert_eq!(f_twisted(&q).unwrap().to_string(), "d1 s1 d2 d1 s1 d2");
        let e = BraidWord::parse("s1[0]", Dialect::Z2Quotient, 3).unwrap();
        assert_eq!(f_twisted(&e).unwrap().to_string(), "s1");
        assert!(f_twisted(&z2("s1[1]", 3)).is_err());
    }

    #[test]
    fn halves_agree_on_good_words() {
        let w = dotted("d1 s1 d1 d2 s2 d3 d3 S1 d2", 3);
        assert!(is_good(&w));
        let a = parity_assignment(&w).unwrap();
        assert_eq!(a.crossings.len(), 3);
        assert!(a.halves_agree());
    }

    #[test]
    fn harness_on_empty_word() {
        let report = move_invariance_harness(&dotted("e", 3), 25, 7).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.steps.len(), 25);
    }

    #[test]
    fn harness_is_reproducible() {
        let w = f_map(&z2("s1[1] s2[0] S1[1] s2[1]", 3)).unwrap();
        let a = move_invariance_harness(&w, 30, 11).unwrap();
        let b = move_invariance_harness(&w, 30, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.passed(), "{a}");
    }

    #[test]
    fn braid_move_on_single_crossing() {
        // strands a, b, c carrying incoming dot parities 1, 0, 1
        let p = GroupPresentation::standard(&Dialect::Dotted, 3).unwrap();
        let braid = p.relators().iter().find(|r| r.family == RelatorFamily::Braid).unwrap();
        let mut context = vec![Letter::dot(1), Letter::dot(3)];
        context.extend_from_slice(braid.word.letters());
        let parities: Vec<u16> = extract_parities(&context, 3).iter().map(|l| l.label).collect();
        // σ1 σ2 σ1 crossing (a,b), (a,c), (b,c)
        assert_eq!(&parities[..3], &[1, 0, 1]);
        assert_eq!(parities[..3].iter().sum::<u16>() % 2, 0);
    }
}
