//! Command-line front end. `run` never prints; it returns the exit code and
//! the text for stdout and stderr so that nothing is emitted on failure.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dotted::{f_map, f_twisted, f_welldefined_report, g_map, is_good, twisted_lune_check};
use crate::dynnikov::classical_equal;
use crate::error::{BraidError, Result};
use crate::group::FiniteGroupTable;
use crate::invariants::InvariantRecord;
use crate::marked::z2_iso_report;
use crate::presentation::{Extensions, GroupPresentation};
use crate::search::{equal_semidecide, Verdict, DEFAULT_BUDGET};
use crate::svg::render_svg;
use crate::virtual_bridge::{phi, phi_welldefined_report};
use crate::word::{BraidWord, Dialect};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug, Clone)]
#[command(name = "mbraid", version, about = "Marked braid group calculator")]
pub struct Command {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// classical, z2, gbraid:<G>, virtual, dotted, twisted-dotted, z2-quotient
    #[arg(long)]
    pub dialect: Option<String>,
    /// Label group for the gbraid dialect: trivial, S3 or Z<m>
    #[arg(long)]
    pub group: Option<String>,
    /// Number of strands
    #[arg(short = 'n', long = "strands", default_value_t = 3)]
    pub n: usize,
    /// Expanded-node budget for the equality search
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Dot/crossing far commutativity in dotted presentations
    #[arg(long, value_enum)]
    pub ext: Option<Switch>,
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Switch {
    On,
    Off,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomMap {
    /// parity braids to virtual braids
    Phi,
    /// parity braids to dotted braids
    F,
    /// parity quotient to twisted dotted braids
    FTwisted,
    /// f(σ_{i,1})² in twisted dotted braids
    Lune,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Print the freely reduced word
    Reduce {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Decide (classical) or semi-decide equality of two words
    Equal {
        #[command(flatten)]
        common: Common,
        u: String,
        v: String,
    },
    /// Apply phi, f, f-twisted or g according to the dialect pair
    Convert {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        word: String,
    },
    /// Exit 0 when every strand carries an even number of dots
    CheckGood {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Read the parity braid off a good dotted word
    Extract {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// Check that a map sends every relator to a trivial word
    VerifyHom {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        map: HomMap,
        /// Crossing index for the lune check; all indices when omitted
        #[arg(short = 'i')]
        index: Option<usize>,
    },
    /// Compare the parity presentation with the Z2-labelled one
    IsoReport {
        #[command(flatten)]
        common: Common,
    },
    /// Print the invariant record of a word
    Invariants {
        #[command(flatten)]
        common: Common,
        word: String,
    },
    /// SVG drawing of the flat diagram
    Render {
        #[command(flatten)]
        common: Common,
        word: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        let line = message.to_string().lines().next().unwrap_or("error").trim().to_string();
        Outcome { code, stdout: String::new(), stderr: format!("mbraid: {line}\n") }
    }
}

/// Parses a word in the shared grammar.
pub fn parse(text: &str, dialect: Dialect, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text, dialect, n)
}

/// Parses argv (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Command::try_parse_from(args) {
        Ok(cmd) => run(&cmd),
        Err(e) => {
            use clap::error::ErrorKind;
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(EXIT_OK, e.to_string()),
                _ => {
                    let text = e.to_string();
                    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("usage error");
                    Outcome::fail(EXIT_USAGE, first.trim_start_matches("error: "))
                }
            }
        }
    }
}

pub fn run(cmd: &Command) -> Outcome {
    match dispatch(&cmd.verb) {
        Ok(o) => o,
        Err(e) => Outcome::fail(exit_code_for(&e), e),
    }
}

fn exit_code_for(e: &BraidError) -> i32 {
    match e {
        BraidError::NotGood { .. } => EXIT_FALSE,
        _ => EXIT_USAGE,
    }
}

impl Common {
    fn dialect_or(&self, default: Dialect) -> Result<Dialect> {
        let Some(name) = &self.dialect else {
            if self.group.is_some() {
                return Err(BraidError::Usage("--group given without --dialect gbraid".into()));
            }
            return Ok(default);
        };
        resolve_dialect(name, self.group.as_deref())
    }

    fn extensions(&self, dialect: &Dialect) -> Extensions {
        match self.ext {
            Some(s) => Extensions { dot_crossing_far_commute: s == Switch::On },
            None => Extensions::default_for(dialect),
        }
    }
}

fn resolve_dialect(name: &str, group: Option<&str>) -> Result<Dialect> {
    let is_bare_gbraid = name.eq_ignore_ascii_case("gbraid");
    match (is_bare_gbraid, group) {
        (true, Some(g)) => Ok(Dialect::gbraid(FiniteGroupTable::by_name(g)?)),
        (true, None) => Err(BraidError::Usage("dialect gbraid needs --group".into())),
        (false, None) => name.parse(),
        (false, Some(_)) => {
            let d: Dialect = name.parse()?;
            if matches!(d, Dialect::GBraid(_)) {
                Err(BraidError::Usage("group given twice".into()))
            } else {
                Err(BraidError::Usage(format!("--group is meaningless for dialect {d}")))
            }
        }
    }
}

fn verdict_output(v: &Verdict) -> Outcome {
    let mut out = format!("{v}\n");
    let code = match v {
        Verdict::Equal(t) => {
            out.push_str(&t.to_string());
            if !out.ends_with('\n') {
                out.push('\n');
            }
            EXIT_OK
        }
        Verdict::Distinct(_) => EXIT_FALSE,
        Verdict::Unknown { .. } => EXIT_UNKNOWN,
    };
    Outcome::ok(code, out)
}

fn dispatch(verb: &Verb) -> Result<Outcome> {
    match verb {
        Verb::Reduce { common, word } => {
            let d = common.dialect_or(Dialect::Classical)?;
            let w = parse(word, d, common.n)?;
            Ok(Outcome::ok(EXIT_OK, format!("{}\n", w.free_reduce())))
        }
        Verb::Equal { common, u, v } => {
            let d = common.dialect_or(Dialect::Classical)?;
            let (u, v) = (parse(u, d.clone(), common.n)?, parse(v, d.clone(), common.n)?);
            if d == Dialect::Classical {
                let eq = classical_equal(&u, &v)?;
                let (code, text) = if eq { (EXIT_OK, "EQUAL") } else { (EXIT_FALSE, "DISTINCT") };
                return Ok(Outcome::ok(code, format!("{text}\n")));
            }
            let p = GroupPresentation::new(&d, common.n, common.extensions(&d))?;
            Ok(verdict_output(&equal_semidecide(&u, &v, &p, common.budget)?))
        }
        Verb::Convert { common, from, to, word } => {
            let src = resolve_dialect(from, None)?;
            let dst = resolve_dialect(to, None)?;
            let w = parse(word, src.clone(), common.n)?;
            let image = match (&src, &dst) {
                (Dialect::Z2, Dialect::Virtual) => phi(&w)?,
                (Dialect::Z2, Dialect::Dotted) => f_map(&w)?,
                (Dialect::Z2Quotient, Dialect::TwistedDotted) => f_twisted(&w)?,
                (Dialect::Dotted, Dialect::Z2) | (Dialect::TwistedDotted, Dialect::Z2Quotient) => g_map(&w)?,
                _ => return Err(BraidError::Usage(format!("no conversion from {src} to {dst}"))),
            };
            Ok(Outcome::ok(EXIT_OK, format!("{image}\n")))
        }
        Verb::CheckGood { common, word } => {
            let d = common.dialect_or(Dialect::Dotted)?;
            if !d.is_dotted() {
                return Err(BraidError::Usage(format!("check-good needs a dotted dialect, got {d}")));
            }
            let w = parse(word, d, common.n)?;
            let good = is_good(&w);
            let code = if good { EXIT_OK } else { EXIT_FALSE };
            Ok(Outcome::ok(code, format!("{good}\n")))
        }
        Verb::Extract { common, word } => {
            let d = common.dialect_or(Dialect::Dotted)?;
            let w = parse(word, d, common.n)?;
            Ok(Outcome::ok(EXIT_OK, format!("{}\n", g_map(&w)?)))
        }
        Verb::VerifyHom { common, map, index } => verify_hom(common, *map, *index),
        Verb::IsoReport { common } => {
            let report = z2_iso_report(common.n)?;
            let code = if report.is_isomorphic() { EXIT_OK } else { EXIT_FALSE };
            Ok(Outcome::ok(code, report.to_string()))
        }
        Verb::Invariants { common, word } => {
            let d = common.dialect_or(Dialect::Classical)?;
            let w = parse(word, d, common.n)?;
            Ok(Outcome::ok(EXIT_OK, InvariantRecord::of(&w).to_string()))
        }
        Verb::Render { common, word } => {
            let d = common.dialect_or(Dialect::Classical)?;
            let w = parse(word, d, common.n)?;
            let svg = render_svg(&w);
            match &common.output {
                Some(path) => {
                    std::fs::write(path, svg)
                        .map_err(|e| BraidError::Usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Outcome::ok(EXIT_OK, String::new()))
                }
                None => Ok(Outcome::ok(EXIT_OK, svg)),
            }
        }
    }
}

fn verify_hom(common: &Common, map: HomMap, index: Option<usize>) -> Result<Outcome> {
    let n = common.n;
    let report = match map {
        HomMap::Phi => phi_welldefined_report(n, common.budget)?,
        HomMap::F => {
            let ext = common.ext != Some(Switch::Off);
            f_welldefined_report(n, common.budget, ext)?
        }
        HomMap::FTwisted => crate::dotted::f_twisted_welldefined_report(n, common.budget)?,
        HomMap::Lune => {
            let indices: Vec<usize> = match index {
                Some(i) if i >= 1 && i < n => vec![i],
                Some(i) => return Err(BraidError::Usage(format!("-i {i} outside 1..{}", n.saturating_sub(1)))),
                None => (1..n).collect(),
            };
            let mut out = String::new();
            let mut code = EXIT_OK;
            for i in indices {
                let v = twisted_lune_check(i, n, common.budget)?;
                let part = verdict_output(&v);
                out.push_str(&format!("L{i} {}", part.stdout));
                code = code.max(part.code);
            }
            return Ok(Outcome::ok(code, out));
        }
    };
    let code = if report.all_equal() {
        EXIT_OK
    } else if report.lines.iter().any(|l| l.verdict.is_distinct()) {
        EXIT_FALSE
    } else {
        EXIT_UNKNOWN
    };
    Ok(Outcome::ok(code, report.to_string()))
}
