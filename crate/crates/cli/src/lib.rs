//! Front end for the `fmcalc` binary. Commands return their output as text
//! or JSON so they can be driven without spawning a process.

pub mod catalog;
pub mod commands;
pub mod report;
