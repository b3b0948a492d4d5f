//! Abstract dialectical frameworks, normal logic programs, and the
//! translations between them.

pub mod adf;
pub mod adfplus;
pub mod error;
pub mod logic;
pub mod nlp;
pub mod syntax;
pub mod translate;
pub mod verify;

pub use adf::{Adf, CSetFamily, KleeneKind, LinkClass};
pub use adfplus::{check_adfplus, AdfPlus};
pub use error::{Error, Result};
pub use logic::{Formula, Interpretation, TruthValue, Universe};
pub use nlp::{LpKind, Program, ProgramBuilder, Rule};
pub use translate::{p_of_xi, setaf_to_adf, xi, xi2, Setaf, Substatement};

/// Default bound on the number of atoms whose interpretations are enumerated.
pub const DEFAULT_MAX_STATEMENTS: usize = 14;

/// Default bound on the number of substatements of a program.
pub const DEFAULT_MAX_SUBSTATEMENTS: usize = 10_000;

/// Enumeration bounds shared by every solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_statements: usize,
    pub max_substatements: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_statements: DEFAULT_MAX_STATEMENTS,
            max_substatements: DEFAULT_MAX_SUBSTATEMENTS,
        }
    }
}
