//! File formats, plots and the command-line front end for `wfa-core`.

pub mod cli;
pub mod format;
pub mod plot;
pub mod report;
