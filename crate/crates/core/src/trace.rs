//! Replayable derivations and their line-oriented text form.
//!
//! ```text
//! TRACE classical n=3
//! START s1 s2 s1 S2 S1 S2
//! 0 R0.6 +
//! 5 * c
//! END e
//! QED
//! ```
//!
//! Each step line is `<pos> <relator-id> <+|-|c>`: insert the relator variant
//! before letter `pos`, delete it starting at `pos`, or cancel the adjacent
//! inverse pair at `pos`, `pos + 1`. Cancel steps carry `*` as relator id.

use std::fmt;

use crate::error::{BraidError, Result};
use crate::presentation::{GroupPresentation, RelatorFamily, SymId};
use crate::word::{BraidWord, Dialect, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepKind {
    Insert,
    Delete,
    Cancel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub pos: usize,
    pub relator: Option<SymId>,
    pub kind: StepKind,
}

impl Step {
    pub fn cancel(pos: usize) -> Step {
        Step { pos, relator: None, kind: StepKind::Cancel }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationTrace {
    pub start: BraidWord,
    pub steps: Vec<Step>,
    pub end: BraidWord,
}

impl DerivationTrace {
    /// Number of relator insertions and deletions.
    pub fn depth(&self) -> usize {
        self.steps.iter().filter(|s| s.kind != StepKind::Cancel).count()
    }

    /// Relator variants used, in order.
    pub fn relators_used(&self) -> impl Iterator<Item = SymId> + '_ {
        self.steps.iter().filter_map(|s| s.relator)
    }

    pub fn uses_family(&self, p: &GroupPresentation, family: RelatorFamily) -> bool {
        self.relators_used()
            .any(|id| p.relator(id.relator).is_some_and(|r| r.family == family))
    }

    /// Re-executes every step against `p`, checking legality, and returns the
    /// word reached. Fails if a step is illegal or the end word disagrees.
    pub fn replay(&self, p: &GroupPresentation) -> Result<BraidWord> {
        p.check_word(&self.start)?;
        p.check_word(&self.end)?;
        let mut cur: Vec<Letter> = self.start.letters().to_vec();
        for (k, step) in self.steps.iter().enumerate() {
            let fail = |why: &str| BraidError::Trace(format!("step {}: {why}", k + 1));
            match step.kind {
                StepKind::Cancel => {
                    if step.pos + 1 >= cur.len() || !cur[step.pos].cancels(&cur[step.pos + 1]) {
                        return Err(fail("no cancelling pair at position"));
                    }
                    cur.drain(step.pos..step.pos + 2);
                }
                StepKind::Insert | StepKind::Delete => {
                    let id = step.relator.ok_or_else(|| fail("missing relator id"))?;
                    let rel = p.sym(id).ok_or_else(|| fail("unknown relator"))?;
                    let r = &rel.letters;
                    if step.kind == StepKind::Insert {
                        if step.pos > cur.len() {
                            return Err(fail("insert position past end"));
                        }
                        cur.splice(step.pos..step.pos, r.iter().copied());
                    } else {
                        if step.pos + r.len() > cur.len() || cur[step.pos..step.pos + r.len()] != r[..] {
                            return Err(fail("relator does not occur at position"));
                        }
                        cur.drain(step.pos..step.pos + r.len());
                    }
                }
            }
        }
        if cur != self.end.letters() {
            return Err(BraidError::Trace("replay does not reach the end word".into()));
        }
        Ok(self.end.clone())
    }

    pub fn parse(text: &str) -> Result<DerivationTrace> {
        let bad = |why: String| BraidError::Trace(why);
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty trace".into()))?;
        let mut parts = header.split(' ');
        if parts.next() != Some("TRACE") {
            return Err(bad(format!("bad header `{header}`")));
        }
        let dialect: Dialect = parts
            .next()
            .ok_or_else(|| bad("missing dialect".into()))?
            .parse()?;
        let strands: usize = parts
            .next()
            .and_then(|s| s.strip_prefix("n="))
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| bad("missing n=<strands>".into()))?;
        let start_line = lines.next().ok_or_else(|| bad("missing START".into()))?;
        let start_text = start_line
            .strip_prefix("START ")
            .ok_or_else(|| bad(format!("bad start line `{start_line}`")))?;
        let start = BraidWord::parse(start_text, dialect.clone(), strands)?;
        let mut steps = Vec::new();
        let mut end = None;
        for line in lines.by_ref() {
            if let Some(end_text) = line.strip_prefix("END ") {
                end = Some(BraidWord::parse(end_text, dialect.clone(), strands)?);
                break;
            }
            let fields: Vec<&str> = line.split(' ').collect();
            if fields.len() != 3 {
                return Err(bad(format!("bad step line `{line}`")));
            }
            let pos: usize = fields[0].parse().map_err(|_| bad(format!("bad position in `{line}`")))?;
            let kind = match fields[2] {
                "+" => StepKind::Insert,
                "-" => StepKind::Delete,
                "c" => StepKind::Cancel,
                other => return Err(bad(format!("bad step kind `{other}`"))),
            };
            let relator = match (kind, fields[1]) {
                (StepKind::Cancel, "*") => None,
                (StepKind::Cancel, other) => return Err(bad(format!("cancel step with relator `{other}`"))),
                (_, id) => Some(id.parse::<SymId>()?),
            };
            steps.push(Step { pos, relator, kind });
        }
        let end = end.ok_or_else(|| bad("missing END".into()))?;
        if lines.next() != Some("QED") {
            return Err(bad("missing QED".into()));
        }
        Ok(DerivationTrace { start, steps, end })
    }
}

impl fmt::Display for DerivationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TRACE {} n={}", self.start.dialect(), self.start.strands())?;
        writeln!(f, "START {}", self.start)?;
        for s in &self.steps {
            let kind = match s.kind {
                StepKind::Insert => "+",
                StepKind::Delete => "-",
                StepKind::Cancel => "c",
            };
            match s.relator {
                Some(id) => writeln!(f, "{} {} {}", s.pos, id, kind)?,
                None => writeln!(f, "{} * {}", s.pos, kind)?,
            }
        }
        writeln!(f, "END {}", self.end)?;
        writeln!(f, "QED")
    }
}
