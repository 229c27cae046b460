//! Library side of the command line frontend: the algebra file grammar,
//! result documents, command implementations, and the reproduction table.

pub mod commands;
pub mod grammar;
pub mod output;
pub mod table1;

pub use grammar::{parse_algebra, print_algebra, ParseError};
