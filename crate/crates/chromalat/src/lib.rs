//! Command-line explorer for upward-closed families of level sets and
//! finite-poset homotopy: enumeration, an expression language with a
//! product and union, thread realizability, cofinality reports, and a
//! built-in verification suite.

pub mod cli;
pub mod expr;
pub mod verify;

pub use cli::{run, EXIT_INPUT, EXIT_INTERNAL, EXIT_NEGATIVE, EXIT_OK};
pub use expr::{eval_expr, parse_and_eval, parse_expr, ParseError, UpSetExpr};
pub use verify::{all_records, check_property, VerificationRecord, PROPERTY_IDS};
