//! clearread: a plain-language linter with readability scoring and a
//! slide-deck accessibility audit.

pub mod cli;
pub mod deck;
pub mod engine;
pub mod lexicon;
pub mod metrics;
pub mod report;
pub mod rules;
pub mod textmodel;
