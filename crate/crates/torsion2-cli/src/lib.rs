//! Library surface of the command-line tool, split out so the parser,
//! renderers and the verification suite can be integration-tested.

pub mod commands;
pub mod parse;
pub mod render;
pub mod verify;
