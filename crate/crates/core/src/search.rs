//! Bounded equality search modulo a presentation.
//!
//! Nodes are freely reduced words. A node's neighbours are obtained by
//! inserting a symmetrized relator at some position (keeping only insertions
//! that cancel against the word) or deleting an occurrence of one, followed
//! by free reduction. Nodes are expanded shortest first, ties broken by the
//! letter sequence, so results do not depend on hashing or scheduling.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::invariants::{Certificate, InvariantRecord};
use crate::presentation::GroupPresentation;
use crate::trace::{DerivationTrace, Step, StepKind};
use crate::word::{free_reduce_letters, BraidWord, Letter};

pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of expanded nodes.
    pub budget: usize,
    /// A move may lengthen the word by at most this many letters.
    pub max_growth: usize,
    /// Words longer than the starting word plus this slack are not kept.
    pub length_slack: usize,
}

impl SearchConfig {
    pub fn with_budget(budget: usize) -> Self {
        SearchConfig { budget, ..Self::default() }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, max_growth: 2, length_slack: 6 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal(DerivationTrace),
    Distinct(Certificate),
    Unknown { expanded: usize },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal(_))
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, Verdict::Distinct(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn trace(&self) -> Option<&DerivationTrace> {
        match self {
            Verdict::Equal(t) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Equal(t) => write!(f, "EQUAL depth={}", t.depth()),
            Verdict::Distinct(c) => write!(f, "DISTINCT {c}"),
            Verdict::Unknown { expanded } => write!(f, "UNKNOWN expanded={expanded}"),
        }
    }
}

pub fn equal_semidecide(u: &BraidWord, v: &BraidWord, p: &GroupPresentation, budget: usize) -> Result<Verdict> {
    equal_semidecide_with(u, v, p, &SearchConfig::with_budget(budget))
}

pub fn equal_semidecide_with(
    u: &BraidWord,
    v: &BraidWord,
    p: &GroupPresentation,
    config: &SearchConfig,
) -> Result<Verdict> {
    p.check_word(u)?;
    p.check_word(v)?;
    let start = u.concat(&v.inverse())?;
    let reduced = free_reduce_letters(start.letters());
    if reduced.is_empty() {
        return Ok(Verdict::Equal(build_trace(&start, &[], p)));
    }
    if let Some(cert) = InvariantRecord::of(u).compare(&InvariantRecord::of(v)) {
        return Ok(Verdict::Distinct(cert));
    }
    let engine = Engine::new(p);
    Ok(match engine.search(reduced, config) {
        Outcome::Found(moves) => Verdict::Equal(build_trace(&start, &moves, p)),
        Outcome::Exhausted(expanded) => Verdict::Unknown { expanded },
    })
}

/// Is `target` trivial in the group presented by `p`?
pub fn relator_consequence(target: &BraidWord, p: &GroupPresentation, budget: usize) -> Result<Verdict> {
    let empty = BraidWord::empty(target.dialect().clone(), target.strands());
    equal_semidecide(target, &empty, p, budget)
}

pub fn relator_consequence_with(target: &BraidWord, p: &GroupPresentation, config: &SearchConfig) -> Result<Verdict> {
    let empty = BraidWord::empty(target.dialect().clone(), target.strands());
    equal_semidecide_with(target, &empty, p, config)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    Insert { pos: usize, sym: usize },
    Delete { pos: usize, sym: usize },
}

enum Outcome {
    Found(Vec<Move>),
    Exhausted(usize),
}

struct Node {
    parent: u32,
    mv: Option<Move>,
}

struct Engine<'a> {
    relators: Vec<&'a [Letter]>,
    by_first: HashMap<Letter, Vec<usize>>,
    by_last: HashMap<Letter, Vec<usize>>,
}

impl<'a> Engine<'a> {
    fn new(p: &'a GroupPresentation) -> Self {
        let relators: Vec<&[Letter]> = p.symmetrized().iter().map(|s| s.letters.as_slice()).collect();
        let mut by_first: HashMap<Letter, Vec<usize>> = HashMap::new();
        let mut by_last: HashMap<Letter, Vec<usize>> = HashMap::new();
        for (k, r) in relators.iter().enumerate() {
            by_first.entry(r[0]).or_default().push(k);
            by_last.entry(r[r.len() - 1]).or_default().push(k);
        }
        Engine { relators, by_first, by_last }
    }

    fn search(&self, root: Vec<Letter>, config: &SearchConfig) -> Outcome {
        let max_len = root.len() + config.length_slack;
        let root: Arc<[Letter]> = root.into();
        let mut nodes = vec![Node { parent: u32::MAX, mv: None }];
        let mut visited: HashSet<Arc<[Letter]>> = HashSet::new();
        visited.insert(root.clone());
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((root.len(), root, 0u32)));
        let mut expanded = 0;
        let mut children = Vec::new();

        while let Some(Reverse((_, word, idx))) = heap.pop() {
            if expanded >= config.budget {
                return Outcome::Exhausted(expanded);
            }
            expanded += 1;
            let limit = (word.len() + config.max_growth).min(max_len);
            children.clear();
            self.expand(&word, limit, &mut children);
            for (mv, child) in children.drain(..) {
                if child.is_empty() {
                    let mut moves = vec![mv];
                    let mut at = idx;
                    while let Some(m) = nodes[at as usize].mv {
                        moves.push(m);
                        at = nodes[at as usize].parent;
                    }
                    moves.reverse();
                    return Outcome::Found(moves);
                }
                if visited.contains(child.as_slice()) {
                    continue;
                }
                let child: Arc<[Letter]> = child.into();
                visited.insert(child.clone());
                let id = nodes.len() as u32;
                nodes.push(Node { parent: idx, mv: Some(mv) });
                heap.push(Reverse((child.len(), child, id)));
            }
        }
        Outcome::Exhausted(expanded)
    }

    fn expand(&self, w: &[Letter], limit: usize, out: &mut Vec<(Move, Vec<Letter>)>) {
        let len = w.len();
        for pos in 0..len {
            if let Some(list) = self.by_first.get(&w[pos]) {
                for &sym in list {
                    let r = self.relators[sym];
                    if pos + r.len() <= len && w[pos..pos + r.len()] == *r {
                        let mut child = w[..pos].to_vec();
                        child.extend_from_slice(&w[pos + r.len()..]);
                        out.push((Move::Delete { pos, sym }, free_reduce_letters(&child)));
                    }
                }
            }
        }
        for pos in 0..=len {
            let left = if pos > 0 { self.by_first.get(&w[pos - 1].inverse()) } else { None };
            let right = if pos < len { self.by_last.get(&w[pos].inverse()) } else { None };
            for &sym in left.into_iter().flatten() {
                self.insert(w, pos, sym, limit, out);
            }
            for &sym in right.into_iter().flatten() {
                let r = self.relators[sym];
                // already tried through the left list
                if pos > 0 && w[pos - 1].cancels(&r[0]) {
                    continue;
                }
                self.insert(w, pos, sym, limit, out);
            }
        }
    }

    fn insert(&self, w: &[Letter], pos: usize, sym: usize, limit: usize, out: &mut Vec<(Move, Vec<Letter>)>) {
        let r = self.relators[sym];
        let mut a = 0;
        while a < r.len() && a < pos && w[pos - 1 - a].cancels(&r[a]) {
            a += 1;
        }
        let mut b = 0;
        while b < r.len() - a && pos + b < w.len() && r[r.len() - 1 - b].cancels(&w[pos + b]) {
            b += 1;
        }
        let child = if a + b < r.len() {
            let new_len = w.len() + r.len() - 2 * (a + b);
            if new_len > limit {
                return;
            }
            let mut child = Vec::with_capacity(new_len);
            child.extend_from_slice(&w[..pos - a]);
            child.extend_from_slice(&r[a..r.len() - b]);
            child.extend_from_slice(&w[pos + b..]);
            child
        } else {
            let mut child = w[..pos - a].to_vec();
            child.extend_from_slice(&w[pos + b..]);
            free_reduce_letters(&child)
        };
        out.push((Move::Insert { pos, sym }, child));
    }
}

/// Replays the moves from the raw start word, recording every free
/// cancellation as its own step.
fn build_trace(start: &BraidWord, moves: &[Move], p: &GroupPresentation) -> DerivationTrace {
    let sym = p.symmetrized();
    let mut cur = start.letters().to_vec();
    let mut steps = Vec::new();
    cancel_all(&mut cur, &mut steps);
    for mv in moves {
        match *mv {
            Move::Insert { pos, sym: k } => {
                cur.splice(pos..pos, sym[k].letters.iter().copied());
                steps.push(Step { pos, relator: Some(sym[k].id), kind: StepKind::Insert });
            }
            Move::Delete { pos, sym: k } => {
                let r = &sym[k].letters;
                debug_assert_eq!(&cur[pos..pos + r.len()], r.as_slice());
                cur.drain(pos..pos + r.len());
                steps.push(Step { pos, relator: Some(sym[k].id), kind: StepKind::Delete });
            }
        }
        cancel_all(&mut cur, &mut steps);
    }
    DerivationTrace {
        start: start.clone(),
        steps,
        end: start.with_letters(cur),
    }
}

fn cancel_all(cur: &mut Vec<Letter>, steps: &mut Vec<Step>) {
    let mut i = 0;
    while i + 1 < cur.len() {
        if cur[i].cancels(&cur[i + 1]) {
            cur.drain(i..i + 2);
            steps.push(Step::cancel(i));
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
}
