//! Marked braid groups as finitely presented groups on braid words.
//!
//! Covers classical (Artin) braids, braids with parity (ℤ₂-labelled
//! crossings), G-labelled braids over a finite group, virtual braids, dotted
//! and twisted dotted braids. Equality is decided exactly for classical
//! braids and semi-decided with replayable derivations for the rest.

pub mod cli;
pub mod dotted;
pub mod dynnikov;
pub mod error;
pub mod group;
pub mod homomorphism;
pub mod invariants;
pub mod marked;
pub mod presentation;
pub mod sample;
pub mod search;
pub mod svg;
pub mod trace;
pub mod virtual_bridge;
pub mod word;

pub use dotted::{f_map, f_twisted, g_map, is_good, move_invariance_harness, twisted_lune_check};
pub use dynnikov::{classical_equal, coordinate_action, DynnikovCoordinates};
pub use error::{BraidError, Result};
pub use group::FiniteGroupTable;
pub use invariants::{invariants, Certificate, InvariantRecord};
pub use presentation::{Extensions, GroupPresentation, RelatorFamily};
pub use search::{equal_semidecide, relator_consequence, SearchConfig, Verdict, DEFAULT_BUDGET};
pub use trace::DerivationTrace;
pub use virtual_bridge::{phi, phi_welldefined_report, reverse_map_obstruction};
pub use word::{BraidWord, Dialect, Kind, Letter, Permutation, StrandState};

/// Builds the presentation of `dialect` on `strands` strands.
pub fn presentation_for(dialect: &Dialect, strands: usize, extensions: Extensions) -> Result<GroupPresentation> {
    GroupPresentation::new(dialect, strands, extensions)
}
