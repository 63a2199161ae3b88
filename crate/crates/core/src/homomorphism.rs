//! Relator-by-relator well-definedness checks for maps between presentations.

use std::fmt;

use crate::error::Result;
use crate::presentation::GroupPresentation;
use crate::search::{relator_consequence_with, SearchConfig, Verdict};
use crate::word::BraidWord;

#[derive(Clone, Debug)]
pub struct HomLine {
    pub relator: usize,
    pub source: BraidWord,
    pub image: BraidWord,
    pub verdict: Verdict,
}

/// Verdicts for the images of all relators of a source presentation.
#[derive(Clone, Debug)]
pub struct HomReport {
    pub lines: Vec<HomLine>,
}

impl HomReport {
    pub fn all_equal(&self) -> bool {
        self.lines.iter().all(|l| l.verdict.is_equal())
    }

    pub fn count_equal(&self) -> usize {
        self.lines.iter().filter(|l| l.verdict.is_equal()).count()
    }

    pub fn max_depth(&self) -> Option<usize> {
        self.lines.iter().filter_map(|l| l.verdict.trace().map(|t| t.depth())).max()
    }

    /// Replays every trace in the report against `target`.
    pub fn replay_all(&self, target: &GroupPresentation) -> Result<()> {
        for line in &self.lines {
            if let Some(t) = line.verdict.trace() {
                t.replay(target)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for HomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            match &line.verdict {
                Verdict::Equal(t) => {
                    writeln!(f, "R{} EQUAL depth={}", line.relator, t.depth())?;
                    for l in t.to_string().lines() {
                        writeln!(f, "  {l}")?;
                    }
                }
                Verdict::Unknown { .. } => writeln!(f, "R{} UNKNOWN", line.relator)?,
                Verdict::Distinct(c) => writeln!(f, "R{} DISTINCT {c}", line.relator)?,
            }
        }
        Ok(())
    }
}

/// Maps every relator of `source` through `map` and asks whether the image is
/// trivial in `target`.
pub fn check_relator_images(
    source: &GroupPresentation,
    target: &GroupPresentation,
    config: &SearchConfig,
    map: impl Fn(&BraidWord) -> Result<BraidWord>,
) -> Result<HomReport> {
    let mut lines = Vec::with_capacity(source.relators().len());
    for r in source.relators() {
        let image = map(&r.word)?;
        let verdict = relator_consequence_with(&image, target, config)?;
        lines.push(HomLine { relator: r.id, source: r.word.clone(), image, verdict });
    }
    Ok(HomReport { lines })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Dialect;

    #[test]
    fn identity_map_is_well_defined() {
        let p = GroupPresentation::standard(&Dialect::Virtual, 3).unwrap();
        let report = check_relator_images(&p, &p, &SearchConfig::default(), |w| Ok(w.clone())).unwrap();
        assert!(report.all_equal());
        assert_eq!(report.count_equal(), p.relators().len());
        assert!(report.max_depth().unwrap() <= 1);
        report.replay_all(&p).unwrap();
        assert!(report.to_string().starts_with("R0 EQUAL depth="));
    }

    #[test]
    fn collapsing_crossings_is_not_well_defined() {
        // σ_i ↦ σ_1 for all i respects every relator; erasing σ_2, σ_3 does not
        let src = GroupPresentation::standard(&Dialect::Classical, 4).unwrap();
        let report = check_relator_images(&src, &src, &SearchConfig::with_budget(200), |w| {
            let letters = w.letters().iter().map(|l| crate::word::Letter { index: 1, ..*l }).collect();
            Ok(w.with_letters(letters))
        })
        .unwrap();
        assert!(report.all_equal());
        let squash = check_relator_images(&src, &src, &SearchConfig::with_budget(200), |w| {
            let letters = w.letters().iter().filter(|l| l.index == 1).copied().collect();
            Ok(w.with_letters(letters))
        })
        .unwrap();
        assert!(squash.lines.iter().any(|l| l.verdict.is_distinct()));
        assert!(squash.to_string().contains("DISTINCT"));
    }
}
