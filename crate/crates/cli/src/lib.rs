//! File formats, JSON reports and the reproduction suite behind the `lefschetz` binary.

pub mod commands;
pub mod idealfile;
pub mod report;
pub mod suite;
