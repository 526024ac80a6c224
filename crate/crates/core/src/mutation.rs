//! Deliberate mutants for checking that the theorem suites have teeth.
//!
//! A mutant is switched on for the current thread only, for the duration of a
//! closure. Normal code never sees it.

use std::cell::Cell;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutant {
    /// Positive part computed as `x ^ 0` instead of `x v 0`.
    LiteralPositivePart,
}

thread_local! {
    static LITERAL_POSITIVE_PART: Cell<bool> = const { Cell::new(false) };
}

pub fn literal_positive_part() -> bool {
    LITERAL_POSITIVE_PART.with(Cell::get)
}

/// Runs `f` with `mutant` active on this thread.
pub fn with_mutant<R>(mutant: Mutant, f: impl FnOnce() -> R) -> R {
    match mutant {
        Mutant::LiteralPositivePart => {
            let prev = LITERAL_POSITIVE_PART.with(|c| c.replace(true));
            struct Restore(bool);
            impl Drop for Restore {
                fn drop(&mut self) {
                    LITERAL_POSITIVE_PART.with(|c| c.set(self.0));
                }
            }
            let _restore = Restore(prev);
            f()
        }
    }
}
