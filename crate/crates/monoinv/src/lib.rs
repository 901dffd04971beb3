//! Parsing, corpus files, JSON reports and the command-line driver around
//! `monoinv-core`.

pub mod cli;
pub mod corpus_file;
pub mod parse;
pub mod regen;
pub mod report;
